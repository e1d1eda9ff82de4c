# Django
from django.conf import settings
from django.core.management.base import CommandError

# Python
from pathlib import Path
import json

# Local
from dominance.management.base import DominanceCommand
from dominance.render import render_svg, write_svg
from dominance.solver import solve_pipeline


class Command(DominanceCommand):
    help = "Draw the cell partition, representatives and a solution as SVG."

    def add_arguments(self, parser):
        parser.add_argument("path", help="instance file")
        parser.add_argument("--output", required=True, help="SVG file")
        parser.add_argument(
            "--solution", default=None, help="result record written by 'solve'",
        )
        parser.add_argument(
            "--solve", action="store_true", help="solve the instance and draw it",
        )
        parser.add_argument(
            "--highlight-row", type=int, default=None,
            help="shade the strip between q_i and q_(i+1)",
        )

    def run(self, *args, **options):
        inst = self.load_instance(options["path"])
        chosen: list[int] = []
        if options["solution"]:
            text = Path(options["solution"]).read_text(encoding="utf-8")
            try:
                record = json.loads(text)
            except json.JSONDecodeError as exc:
                raise CommandError(f"{options['solution']} is not a result record: {exc}")
            chosen = record.get("chosen", [])
        elif options["solve"]:
            chosen = sorted(solve_pipeline(inst, **self.solver_limits).chosen)

        root = render_svg(
            inst, chosen=chosen, highlight_row=options["highlight_row"],
            max_m=settings.MAXDOM_RENDER_MAX_M,
        )
        write_svg(root, options["output"])
        self.stdout.write(f"wrote {options['output']}")
