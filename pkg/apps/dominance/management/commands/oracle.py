# Django
from django.conf import settings

# Local
from dominance.management.base import DominanceCommand
from dominance.oracle import oracle_solve
from dominance.serializers import SolveResultSerializer


class Command(DominanceCommand):
    help = "Solve an instance file by enumerating every subset of at most k query points."

    def add_arguments(self, parser):
        parser.add_argument("path", help="instance file")
        parser.add_argument("--k", type=int, default=None, help="budget override")
        parser.add_argument(
            "--limit", type=int, default=None,
            help="largest number of subsets to enumerate",
        )

    def run(self, *args, **options):
        inst = self.load_instance(options["path"], options["k"])
        limit = options["limit"]
        if limit is None:
            limit = settings.MAXDOM_ORACLE_LIMIT
        solution = oracle_solve(inst, limit=limit)
        self.emit_record(SolveResultSerializer(data={
            "algo": "oracle",
            "value": solution.value,
            "chosen": solution.sorted_ids,
            "n": inst.n,
            "m": inst.m,
            "k": inst.k,
        }))
