import pytest

from chordalg.pcs import (
    AmbiguousRegistryError,
    ChordLabel,
    ModulusMismatchError,
    PcSetType,
    PitchClass,
    TIOperator,
    apply_ti,
    compose_ti,
    identify_chord,
    realize_chord,
    transpositionally_equivalent,
)

M = PcSetType("M", (0, 4, 7))
m = PcSetType("m", (0, 3, 7))
ALPHA = PcSetType("alpha", (0, 2, 5))
BETA = PcSetType("beta", (0, 4, 5))


def pc(v, n=12):
    return PitchClass(v, n)


class TestApplyTI:
    def test_transposition(self):
        assert apply_ti(TIOperator("T", 1), pc(0)) == pc(1)

    def test_inversion(self):
        assert apply_ti(TIOperator("I", 0), pc(4)) == pc(8)

    def test_identity_transposition(self):
        assert apply_ti(TIOperator("T", 0), pc(7)) == pc(7)

    def test_modulus_mismatch(self):
        with pytest.raises(ModulusMismatchError):
            apply_ti(TIOperator("T", 1, 12), pc(0, 7))

    def test_inversions_are_involutions(self):
        for k in range(12):
            op = TIOperator("I", k)
            for v in range(12):
                assert apply_ti(op, apply_ti(op, pc(v))) == pc(v)


class TestComposeTI:
    def test_examples(self):
        assert compose_ti(TIOperator("T", 3), TIOperator("T", 4)) == TIOperator("T", 7)
        assert compose_ti(TIOperator("I", 5), TIOperator("I", 2)) == TIOperator("T", 3)
        assert compose_ti(TIOperator("I", 0), TIOperator("I", 0)) == TIOperator("T", 0)

    def test_four_identities_exhaustive(self):
        for p in range(12):
            for q in range(12):
                assert compose_ti(TIOperator("T", p), TIOperator("T", q)) == TIOperator("T", p + q)
                assert compose_ti(TIOperator("T", p), TIOperator("I", q)) == TIOperator("I", p + q)
                assert compose_ti(TIOperator("I", p), TIOperator("T", q)) == TIOperator("I", p - q)
                assert compose_ti(TIOperator("I", p), TIOperator("I", q)) == TIOperator("T", p - q)

    def test_compose_agrees_with_pointwise_application(self):
        ops = [TIOperator(k, i) for k in "TI" for i in range(12)]
        for a in ops:
            for b in ops:
                ab = compose_ti(a, b)
                for v in range(12):
                    assert apply_ti(ab, pc(v)) == apply_ti(a, apply_ti(b, pc(v)))

    def test_modulus_mismatch(self):
        with pytest.raises(ModulusMismatchError):
            compose_ti(TIOperator("T", 1, 12), TIOperator("T", 1, 7))


class TestRealize:
    def test_major_at_zero(self):
        assert [t.value for t in realize_chord(ChordLabel(pc(0), M))] == [0, 4, 7]

    def test_minor_at_five(self):
        assert [t.value for t in realize_chord(ChordLabel(pc(5), m))] == [5, 8, 0]

    def test_alpha_at_zero(self):
        assert [t.value for t in realize_chord(ChordLabel(pc(0), ALPHA))] == [0, 2, 5]


class TestIdentify:
    def test_f_minor(self):
        assert identify_chord([0, 8, 5], [M, m]) == ChordLabel(pc(5), m)

    def test_root_position_major(self):
        assert identify_chord([0, 4, 7], [M, m]) == ChordLabel(pc(0), M)

    def test_alpha(self):
        assert identify_chord([7, 9, 0], [M, ALPHA, BETA]) == ChordLabel(pc(7), ALPHA)

    def test_no_match(self):
        assert identify_chord([0, 1, 2], [M, m]) is None

    def test_ambiguous_registry(self):
        m_copy = PcSetType("m2", (0, 3, 7))
        with pytest.raises(AmbiguousRegistryError):
            identify_chord([0, 4, 7], [m, m_copy])

    def test_empty_registry(self):
        with pytest.raises(ValueError):
            identify_chord([0, 4, 7], [])

    def test_roundtrip_all_chords(self):
        registry = [M, m, ALPHA, BETA]
        for t in registry:
            for root in range(12):
                c = ChordLabel(pc(root), t)
                assert identify_chord(realize_chord(c), registry) == c


class TestTypes:
    def test_first_interval_must_be_zero(self):
        with pytest.raises(ValueError):
            PcSetType("bad", (1, 4, 7))

    def test_intervals_strictly_increasing(self):
        with pytest.raises(ValueError):
            PcSetType("bad", (0, 7, 4))

    def test_interval_range(self):
        with pytest.raises(ValueError):
            PcSetType("bad", (0, 4, 16))

    def test_transpositional_equivalence(self):
        assert transpositionally_equivalent(M, PcSetType("M5", (0, 4, 7)))
        assert not transpositionally_equivalent(M, m)

    def test_pitch_class_reduced(self):
        assert PitchClass(14).value == 2
