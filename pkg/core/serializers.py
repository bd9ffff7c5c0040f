"""
Serializers for PlaneChar inputs and reports.

Input serializers check the shape of JSON handed to the commands; the
mathematical validation stays with the domain types so their error
codes reach the user unchanged. Output serializers turn domain objects
into plain data for JSON rendering.
"""

from rest_framework import serializers


# Input serializers

class CharacterInputSerializer(serializers.Serializer):
    """A character given as {"character": [...]}."""

    character = serializers.ListField(child=serializers.IntegerField(), allow_empty=True)


class BettiInputSerializer(serializers.Serializer):
    """Betti data given as {"a": [...], "b": [...]}."""

    a = serializers.ListField(child=serializers.IntegerField(), allow_empty=False)
    b = serializers.ListField(child=serializers.IntegerField(), allow_empty=False)

    def validate(self, data):
        if len(data['a']) != len(data['b']) + 1:
            raise serializers.ValidationError(
                f"Need len(a) = len(b) + 1, got {len(data['a'])} and {len(data['b'])}"
            )
        return data


class GeneratorInputSerializer(serializers.Serializer):
    """Ideal generators as polynomial strings."""

    generators = serializers.ListField(
        child=serializers.CharField(trim_whitespace=True), allow_empty=False
    )


# Output serializers

class HilbertTableSerializer(serializers.Serializer):
    deg = serializers.IntegerField(source='degree')
    H = serializers.ListField(child=serializers.IntegerField())
    delta = serializers.ListField(child=serializers.IntegerField())
    h0 = serializers.ListField(child=serializers.IntegerField())
    h1 = serializers.ListField(child=serializers.IntegerField())


class BettiSequenceSerializer(serializers.Serializer):
    a = serializers.ListField(child=serializers.IntegerField())
    b = serializers.ListField(child=serializers.IntegerField())
    k = serializers.IntegerField()


class PieceSerializer(serializers.Serializer):
    """One (shift, piece) pair of a decomposition."""

    shift = serializers.SerializerMethodField()
    character = serializers.SerializerMethodField()

    def get_shift(self, obj):
        return obj[0]

    def get_character(self, obj):
        return obj[1].to_list()


class VerdictSerializer(serializers.Serializer):
    connected = serializers.BooleanField()
    sauer = serializers.BooleanField(source='sauer_ok')
    smoothable = serializers.BooleanField()
    witness = serializers.IntegerField(allow_null=True)
    sauer_witness = serializers.IntegerField(allow_null=True)
    boundary_equality = serializers.BooleanField()
    labels = serializers.ListField(child=serializers.CharField())
    diagnostic = serializers.CharField(allow_null=True)


class RemarkReportSerializer(serializers.Serializer):
    passed = serializers.BooleanField()
    clauses = serializers.DictField(child=serializers.BooleanField())


class AnalysisSerializer(serializers.Serializer):
    """Full report of the analyze command."""

    character = serializers.ListField(child=serializers.IntegerField())
    s = serializers.IntegerField()
    degree = serializers.IntegerField()
    connected = serializers.BooleanField()
    strictly_decreasing_type = serializers.BooleanField()
    gaps = serializers.ListField(child=serializers.IntegerField())
    decomposition = PieceSerializer(many=True)
    table = HilbertTableSerializer()
    betti = BettiSequenceSerializer()
    verdict = VerdictSerializer()
    remarks = RemarkReportSerializer()
    corollary = serializers.CharField(allow_null=True)


class EnumerationRowSerializer(serializers.Serializer):
    character = serializers.ListField(child=serializers.IntegerField())
    s = serializers.IntegerField()
    degree = serializers.IntegerField()
    connected = serializers.BooleanField()
    sauer = serializers.BooleanField(source='sauer_ok')
    smoothable = serializers.BooleanField()
    witness = serializers.IntegerField(allow_null=True)
    sauer_witness = serializers.IntegerField(allow_null=True)
    a = serializers.ListField(child=serializers.IntegerField())
    b = serializers.ListField(child=serializers.IntegerField())


class GradedMatrixSerializer(serializers.Serializer):
    row_degrees = serializers.ListField(source='a', child=serializers.IntegerField())
    column_degrees = serializers.ListField(source='b', child=serializers.IntegerField())
    entries = serializers.SerializerMethodField()

    def get_entries(self, obj):
        return obj.to_text()


class ProbeReportSerializer(serializers.Serializer):
    deterministic = serializers.BooleanField()
    trials = serializers.IntegerField()
    seed = serializers.IntegerField(allow_null=True)
    expected_rank = serializers.IntegerField()
    rank_at_support = serializers.IntegerField()
    points_checked = serializers.IntegerField()


class ConstructionSerializer(serializers.Serializer):
    """Output of the construct command."""

    character = serializers.ListField(child=serializers.IntegerField(), allow_null=True)
    betti = BettiSequenceSerializer()
    field = serializers.CharField()
    matrix = GradedMatrixSerializer()
    generators = serializers.ListField(child=serializers.CharField())
    generator_degrees = serializers.ListField(child=serializers.IntegerField())
    syzygy_identity = serializers.BooleanField()
    probe = ProbeReportSerializer()


class ResolutionReportSerializer(serializers.Serializer):
    field = serializers.CharField()
    generators = serializers.ListField(child=serializers.CharField())
    alpha = serializers.DictField(child=serializers.IntegerField())
    beta = serializers.DictField(child=serializers.IntegerField())
    betti = BettiSequenceSerializer()
    table = HilbertTableSerializer()
    character = serializers.ListField(child=serializers.IntegerField(), allow_null=True)


class CheckSummarySerializer(serializers.Serializer):
    name = serializers.CharField()
    checked = serializers.IntegerField()
    failed = serializers.IntegerField()
    counterexample = serializers.JSONField(allow_null=True)


class SelfTestSerializer(serializers.Serializer):
    s_max = serializers.IntegerField()
    d_max = serializers.IntegerField()
    field = serializers.CharField()
    characters = serializers.IntegerField()
    passed = serializers.BooleanField()
    checks = CheckSummarySerializer(many=True)


class ErrorSerializer(serializers.Serializer):
    error_type = serializers.CharField()
    error_code = serializers.CharField()
    message = serializers.CharField()
    severity = serializers.CharField()
    details = serializers.JSONField()
