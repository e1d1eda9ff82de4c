# Django
from django.conf import settings
from django.core.management.base import CommandError

# Python
import logging

# Local
from dominance.generators import FAMILIES, GeneratorSpec, generate
from dominance.geometry import Instance, weight_of_dom
from dominance.management.base import DominanceCommand
from dominance.oracle import oracle_solve
from dominance.solver import solve_pipeline


logger = logging.getLogger(__name__)


def check_instance(inst: Instance, oracle_limit: int, **limits) -> list[str]:
    """
    Compare the compressed and uncompressed dp pipelines against the oracle.

    :return: Human readable disagreements, empty when everything matches.
    :rtype: list[str]
    """
    problems = []
    expected = oracle_solve(inst, limit=oracle_limit).value
    by_id = {q.id: q for q in inst.Q}
    for use_compression in (True, False):
        solution = solve_pipeline(inst, use_compression, **limits)
        label = "compressed" if use_compression else "uncompressed"
        if solution.value != expected:
            problems.append(f"{label} value {solution.value} != oracle {expected}")
        if len(solution.chosen) > inst.k:
            problems.append(f"{label} chose {len(solution.chosen)} > k={inst.k} points")
        achieved = weight_of_dom(inst.P, [by_id[i] for i in solution.chosen])
        if achieved != solution.value:
            problems.append(f"{label} subset weighs {achieved}, reported {solution.value}")
    return problems


class Command(DominanceCommand):
    help = (
        "Check the dp pipeline against the exhaustive oracle on an instance file "
        "or on a seeded generated corpus."
    )

    def add_arguments(self, parser):
        parser.add_argument("path", nargs="?", default=None, help="instance file")
        parser.add_argument("--family", choices=FAMILIES, default="uniform")
        parser.add_argument("--count", type=int, default=100)
        parser.add_argument("--n", type=int, default=30)
        parser.add_argument("--m", type=int, default=6)
        parser.add_argument("--seed", type=int, default=1)
        parser.add_argument("--coord-range", type=int, default=12)

    def corpus(self, options):
        for offset in range(options["count"]):
            seed = options["seed"] + offset
            m = 1 + seed % options["m"]
            yield seed, generate(GeneratorSpec(
                family=options["family"], n=options["n"], m=m, k=seed % (m + 1),
                seed=seed, coord_range=options["coord_range"],
            ), max_points=settings.MAXDOM_GENERATOR_MAX_POINTS)

    def run(self, *args, **options):
        if options["path"]:
            instances = [(None, self.load_instance(options["path"]))]
        else:
            instances = self.corpus(options)

        checked, failures = 0, 0
        for seed, inst in instances:
            problems = check_instance(
                inst, settings.MAXDOM_ORACLE_LIMIT, **self.solver_limits
            )
            checked += 1
            for problem in problems:
                failures += 1
                where = options["path"] if seed is None else f"seed {seed}"
                self.stderr.write(f"{where}: {problem}")
        logger.info(msg=f"verified {checked} instances, {failures} disagreements")
        self.stdout.write(f"checked {checked} instances, {failures} disagreements")
        if failures:
            raise CommandError(f"{failures} disagreements with the oracle")
