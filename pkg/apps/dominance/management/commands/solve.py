# Django
from django.conf import settings

# Python
from pathlib import Path
import time

# Local
from dominance.management.base import DominanceCommand
from dominance.oracle import oracle_solve
from dominance.serializers import SolveResultSerializer
from dominance.solver import run_pipeline


class Command(DominanceCommand):
    help = "Solve maxDominance for an instance file and print the result record."

    def add_arguments(self, parser):
        parser.add_argument("path", help="instance file")
        parser.add_argument("--k", type=int, default=None, help="budget override")
        parser.add_argument(
            "--no-compress", action="store_true",
            help="run the dynamic program on P instead of the cell representatives",
        )
        parser.add_argument("--algo", choices=("dp", "oracle"), default="dp")
        parser.add_argument("--output", default=None, help="also write the record here")

    def run(self, *args, **options):
        inst = self.load_instance(options["path"], options["k"])
        if options["algo"] == "oracle":
            started = time.perf_counter()
            solution = oracle_solve(inst, limit=settings.MAXDOM_ORACLE_LIMIT)
            serializer = SolveResultSerializer(data={
                "algo": "oracle",
                "value": solution.value,
                "chosen": solution.sorted_ids,
                "n": inst.n,
                "m": inst.m,
                "k": inst.k,
                "compressed_size": None,
                "timings": {"oracle": time.perf_counter() - started},
            })
        else:
            report = run_pipeline(
                inst, not options["no_compress"], **self.solver_limits
            )
            serializer = SolveResultSerializer.from_report(report)

        text = self.emit_record(serializer)
        if options["output"]:
            Path(options["output"]).write_text(text + "\n", encoding="utf-8")
