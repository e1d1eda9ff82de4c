# Django
from django.conf import settings

# Local
from dominance.fileformat import serialize, serialize_text
from dominance.generators import FAMILIES, generate
from dominance.management.base import DominanceCommand
from dominance.serializers import GeneratorSpecSerializer


class Command(DominanceCommand):
    help = "Write a deterministic instance of one of the generator families."

    def add_arguments(self, parser):
        parser.add_argument("--family", choices=FAMILIES, required=True)
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--m", type=int, required=True)
        parser.add_argument("--k", type=int, required=True)
        parser.add_argument("--w-min", type=int, default=-10)
        parser.add_argument("--w-max", type=int, default=10)
        parser.add_argument("--seed", type=int, default=1)
        parser.add_argument("--coord-range", type=int, default=1000)
        parser.add_argument("--output", default=None, help="file; stdout if omitted")

    def run(self, *args, **options):
        serializer = GeneratorSpecSerializer(data={
            "family": options["family"],
            "n": options["n"],
            "m": options["m"],
            "k": options["k"],
            "w_min": options["w_min"],
            "w_max": options["w_max"],
            "seed": options["seed"],
            "coord_range": options["coord_range"],
        })
        serializer.is_valid(raise_exception=True)
        inst = generate(
            serializer.to_spec(), max_points=settings.MAXDOM_GENERATOR_MAX_POINTS
        )
        if options["output"]:
            serialize(inst, options["output"])
        else:
            self.stdout.write(serialize_text(inst), ending="")
