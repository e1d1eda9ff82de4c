# Local
from dominance.cells import build_grid, compress
from dominance.fileformat import serialize
from dominance.geometry import Instance
from dominance.management.base import DominanceCommand
from dominance.ranking import drop_uncovered, rank_transform


class Command(DominanceCommand):
    help = "Report how far an instance compresses to cell representatives."

    def add_arguments(self, parser):
        parser.add_argument("path", help="instance file")
        parser.add_argument(
            "--output", default=None,
            help="write the compressed instance (ranked coordinates) here",
        )

    def run(self, *args, **options):
        inst = self.load_instance(options["path"])
        rinst = drop_uncovered(rank_transform(inst))
        grid = build_grid(rinst)
        representatives = compress(grid, rinst)

        self.stdout.write(f"n: {inst.n}")
        self.stdout.write(f"m: {inst.m}")
        self.stdout.write(f"retained: {rinst.n}")
        self.stdout.write(f"cells: {len(grid)}")
        self.stdout.write(f"representatives: {len(representatives)}")
        self.stdout.write(f"bound: {min(inst.n, inst.m ** 2)}")

        if options["output"]:
            compressed = Instance(
                P=representatives.points, Q=rinst.query_points(), k=inst.k,
            )
            serialize(compressed, options["output"])
