import pytest

from chordalg.groups import ExtensionElement, FiniteGroup, ExtensionGroup, GroupAction, compose
from chordalg.neo import MAJOR, MINOR
from chordalg.pcs import ChordLabel, PcSetType, PitchClass
from chordalg.stact import (
    ChiBijection,
    ChiConstructionError,
    UnregisteredTypeError,
    conjugate_for,
    left_act,
    right_act,
    verify_simply_transitive,
)


class TestChiBijection:
    def test_roundtrip(self, d24, mk_chord):
        G, chi = d24
        for g in G.elements():
            assert chi.element_of(chi.chord_of(g)) == g
        for p in chi.chords():
            assert chi.chord_of(chi.element_of(p)) == p

    def test_anchor_maps_to_identity(self, d24, mk_chord):
        G, chi = d24
        assert chi.chord_of(G.identity) == mk_chord(0, MAJOR)
        assert chi.element_of(mk_chord(0, MAJOR)) == G.identity

    def test_correspondence_examples(self, d24, mk_chord):
        _, chi = d24
        assert chi.element_of(mk_chord(4, MAJOR)) == ExtensionElement(4, 0)
        assert chi.element_of(mk_chord(4, MINOR)) == ExtensionElement(4, 1)

    def test_unregistered_type(self, d24, mk_chord):
        _, chi = d24
        alpha = PcSetType("alpha", (0, 2, 5))
        with pytest.raises(UnregisteredTypeError):
            chi.element_of(mk_chord(0, alpha))

    def test_rejects_non_cyclic_indexed_z(self):
        klein = FiniteGroup.from_table(
            [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
        )
        h = FiniteGroup.cyclic(1, "s")
        G = ExtensionGroup.build(klein, h)
        t = PcSetType("q", (0, 1))
        with pytest.raises(ChiConstructionError):
            ChiBijection(G, PitchClass(0, 4), (t,))

    def test_rejects_duplicate_types(self, d24):
        G, _ = d24
        with pytest.raises(ChiConstructionError):
            ChiBijection(G, PitchClass(0, 12), (MAJOR, MAJOR))


class TestActions:
    def test_left_action_is_homomorphism(self, d24):
        G, chi = d24
        elems = list(G.elements())
        chords = chi.chords()
        for g1 in elems:
            for g2 in elems:
                g12 = compose(g1, g2, G)
                for p in chords:
                    assert left_act(g12, p, chi) == left_act(g1, left_act(g2, p, chi), chi)

    def test_right_action_folds_left_to_right(self, d24):
        G, chi = d24
        elems = list(G.elements())
        chords = chi.chords()
        for g1 in elems:
            for g2 in elems:
                g12 = compose(g1, g2, G)
                for p in chords:
                    assert right_act(p, g12, chi) == right_act(right_act(p, g1, chi), g2, chi)

    def test_left_and_right_actions_commute(self, d24):
        G, chi = d24
        elems = list(G.elements())
        chords = chi.chords()
        for g in elems:
            for k in elems:
                for p in chords:
                    assert (
                        right_act(left_act(g, p, chi), k, chi)
                        == left_act(g, right_act(p, k, chi), chi)
                    )

    def test_conjugate_transports_right_to_left(self, d24):
        G, chi = d24
        for h in G.elements():
            for p in chi.chords():
                g = conjugate_for(p, h, chi)
                assert left_act(g, p, chi) == right_act(p, h, chi)

    def test_conjugate_example(self, d24, mk_chord):
        # The right action of (z^0, s^1) on 2_M matches the left action
        # of its conjugate (z^4, s^1).
        _, chi = d24
        assert conjugate_for(
            mk_chord(2, MAJOR), ExtensionElement(0, 1), chi
        ) == ExtensionElement(4, 1)


class TestSimplyTransitive:
    def test_d24_is_simply_transitive(self, d24):
        G, chi = d24
        assert verify_simply_transitive(G, chi).passed

    def test_z12_subset_is_not(self, d24):
        # Transpositions alone cannot reach chords of the other type.
        G, chi = d24
        subset = [ExtensionElement(z, 0) for z in range(12)]
        rep = verify_simply_transitive(G, chi, elements=subset)
        names = {c.name for c in rep.failures}
        assert "simply-transitive-left" in names
        assert "simply-transitive-right" in names
