# Python
from pathlib import Path
import logging

# Local
from dominance.bench import (
    format_table, run_sweep, scaling_slopes, sweep_jobs, under_timed, write_csv,
)
from dominance.generators import FAMILIES
from dominance.management.base import DominanceCommand


logger = logging.getLogger(__name__)


def int_list(value: str) -> list[int]:
    return [int(part) for part in value.split(",") if part]


class Command(DominanceCommand):
    help = (
        "Time the pipeline stages over a sweep of n, m and k and fit log-log "
        "slopes of the dp stage."
    )

    def add_arguments(self, parser):
        parser.add_argument(
            "--family", action="append", choices=FAMILIES, dest="families",
            help="generator family, repeatable (default: uniform)",
        )
        parser.add_argument("--n", type=int_list, default=[10_000])
        parser.add_argument("--m", type=int_list, default=[64, 128, 256, 512])
        parser.add_argument("--k", type=int_list, default=[8])
        parser.add_argument("--repetitions", type=int, default=3)
        parser.add_argument("--seed", type=int, default=1)
        parser.add_argument("--workers", type=int, default=1)
        parser.add_argument("--no-compress", action="store_true")
        parser.add_argument("--csv", default=None, help="CSV output file")
        parser.add_argument(
            "--min-time", type=float, default=1e-3,
            help="flag cells faster than this many seconds",
        )

    def run(self, *args, **options):
        jobs = sweep_jobs(
            options["families"] or ["uniform"], options["n"], options["m"],
            options["k"], seed=options["seed"],
            repetitions=options["repetitions"],
            use_compression=not options["no_compress"], **self.solver_limits,
        )
        cells = run_sweep(jobs, workers=options["workers"])

        self.stdout.write(format_table(cells, min_time=options["min_time"]))
        flagged = under_timed(cells, options["min_time"])
        if flagged:
            logger.warning(
                msg=f"{len(flagged)} cells ran under {options['min_time']}s; "
                    "their times are unreliable"
            )

        slopes = scaling_slopes(cells, stage="dp")
        for axis in ("m", "k"):
            for group, slope in sorted(slopes[axis].items()):
                self.stdout.write(f"dp time vs {axis} at {group}: slope {slope:.2f}")

        if options["csv"]:
            with Path(options["csv"]).open("w", encoding="utf-8") as stream:
                write_csv(cells, stream)
            self.stdout.write(f"wrote {options['csv']}")
