# Rest Framework
from rest_framework import serializers

# Local
from .generators import FAMILIES, GeneratorSpec
from .solver import PipelineReport


class GeneratorSpecSerializer(serializers.Serializer):
    """Serializer for generator input."""

    family = serializers.ChoiceField(choices=FAMILIES)
    n = serializers.IntegerField(min_value=0)
    m = serializers.IntegerField(min_value=1)
    k = serializers.IntegerField(min_value=0)
    w_min = serializers.IntegerField(default=-10, min_value=-(2**40))
    w_max = serializers.IntegerField(default=10, max_value=2**40)
    seed = serializers.IntegerField(default=1, min_value=0, max_value=2**64 - 1)
    coord_range = serializers.IntegerField(default=1000, min_value=1)

    def validate(self, attrs: dict) -> dict:
        if attrs["w_min"] > attrs["w_max"]:
            raise serializers.ValidationError("w_min must not exceed w_max.")
        return attrs

    def to_spec(self) -> GeneratorSpec:
        return GeneratorSpec(**self.validated_data)


class SolveResultSerializer(serializers.Serializer):
    """Serializer for the result record of one solve."""

    algo = serializers.ChoiceField(choices=("dp", "oracle"))
    value = serializers.FloatField()
    chosen = serializers.ListField(child=serializers.IntegerField(min_value=0))
    n = serializers.IntegerField(min_value=0)
    m = serializers.IntegerField(min_value=1)
    k = serializers.IntegerField(min_value=0)
    compressed_size = serializers.IntegerField(allow_null=True, required=False)
    timings = serializers.DictField(child=serializers.FloatField(), required=False)

    @classmethod
    def from_report(cls, report: PipelineReport) -> "SolveResultSerializer":
        return cls(data={
            "algo": "dp",
            "value": report.solution.value,
            "chosen": report.solution.sorted_ids,
            "n": report.n,
            "m": report.m,
            "k": report.k,
            "compressed_size": report.compressed_size,
            "timings": report.timings,
        })
