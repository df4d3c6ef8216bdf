import pytest

from chordalg.groupoids import (
    ALPHA,
    BETA,
    GroupoidCompositionError,
    GroupoidExtension,
    GroupoidMorphism,
    GroupoidStructureError,
    build_three_type_system,
    check_groupoid_cocycle,
    compose_morphisms,
    invert_morphism,
    verify_groupoid,
)


class TestConstruction:
    def test_three_type_system_verifies(self, three_type):
        ext, types = three_type
        assert verify_groupoid(ext).passed
        assert set(types) == {"M", "alpha", "beta"}

    def test_multipliers_from_signs(self, three_type):
        ext, _ = three_type
        assert ext.multiplier("M", "alpha") == 11
        assert ext.multiplier("alpha", "M") == 11
        assert ext.multiplier("alpha", "beta") == 11
        assert ext.multiplier("M", "beta") == 1
        assert ext.multiplier("M", "M") == 1
        assert ext.multiplier("alpha", "alpha") == 1

    def test_duplicate_objects_rejected(self):
        with pytest.raises(GroupoidStructureError):
            GroupoidExtension(("M", "M"), 12)

    def test_unknown_negated_object_rejected(self):
        with pytest.raises(GroupoidStructureError):
            GroupoidExtension.from_signs(("M", "alpha"), 12, negated=("gamma",))

    def test_flat_negation_is_not_functorial(self):
        # Inverting on every non-identity generator of a three-object
        # complete groupoid breaks functoriality: two inverting generators
        # compose to a generator that must also invert, but inv o inv = id.
        mult = {
            (x, y): 11
            for x in ("M", "alpha", "beta")
            for y in ("M", "alpha", "beta")
            if x != y
        }
        g = GroupoidExtension(("M", "alpha", "beta"), 12, mult)
        rep = verify_groupoid(g)
        assert any(c.name == "phi-functoriality" for c in rep.failures)

    def test_build_rejects_flat_negation(self):
        mult = {(x, y): 11 for x in ("M", "alpha") for y in ("M", "alpha") if x != y}
        mult[("M", "beta")] = 11
        mult[("beta", "M")] = 11
        mult[("alpha", "beta")] = 11
        mult[("beta", "alpha")] = 11
        with pytest.raises(GroupoidStructureError):
            GroupoidExtension.build(("M", "alpha", "beta"), 12, mult)

    def test_morphism_count(self, three_type):
        ext, _ = three_type
        morphs = list(ext.morphisms())
        assert len(morphs) == 3 * 3 * 12
        assert len(set(morphs)) == len(morphs)


class TestComposition:
    def test_defined_only_on_matching_objects(self, three_type):
        ext, _ = three_type
        g1 = GroupoidMorphism(3, "M", "alpha")
        g2 = GroupoidMorphism(7, "alpha", "beta")
        got = compose_morphisms(g2, g1, ext)
        assert (got.dom, got.cod) == ("M", "beta")
        with pytest.raises(GroupoidCompositionError) as exc:
            compose_morphisms(g1, g2, ext)
        assert "M" in str(exc.value) and "beta" in str(exc.value)

    def test_worked_exponent(self, three_type):
        # (z_beta^7, h_alphabeta) . (z_alpha^3, h_Malpha):
        # 7 + (-1)*3 = 4 at beta.
        ext, _ = three_type
        got = compose_morphisms(
            GroupoidMorphism(7, "alpha", "beta"), GroupoidMorphism(3, "M", "alpha"), ext
        )
        assert got == GroupoidMorphism(4, "M", "beta")

    def test_identities(self, three_type):
        ext, _ = three_type
        for m in ext.morphisms():
            assert compose_morphisms(ext.identity_at(m.cod), m, ext) == m
            assert compose_morphisms(m, ext.identity_at(m.dom), ext) == m

    def test_inverses_exhaustive(self, three_type):
        ext, _ = three_type
        for m in ext.morphisms():
            mi = invert_morphism(m, ext)
            assert compose_morphisms(mi, m, ext) == ext.identity_at(m.dom)
            assert compose_morphisms(m, mi, ext) == ext.identity_at(m.cod)

    def test_inverse_example(self, three_type):
        # (z_alpha^7, h_Malpha) has inverse (z_M^7, h_alphaM): the round trip
        # contributes 7 + (-1)*7 = 0.
        ext, _ = three_type
        assert invert_morphism(GroupoidMorphism(7, "M", "alpha"), ext) == GroupoidMorphism(
            7, "alpha", "M"
        )

    def test_cross_generators_self_inverse_on_negated_legs(self, three_type):
        ext, _ = three_type
        # For a generator with multiplier -1, (z, X->Y) inverts to (z, Y->X).
        for z in range(12):
            assert invert_morphism(GroupoidMorphism(z, "alpha", "beta"), ext) == (
                GroupoidMorphism(z, "beta", "alpha")
            )

    def test_str_forms(self):
        assert str(GroupoidMorphism(3, "M", "alpha")) == "(z_alpha^3,h_Malpha)"
        assert str(GroupoidMorphism(0, "M", "M")) == "(z_M^0,id_M)"


class TestCocycle:
    def test_trivial_cocycle_passes(self, three_type):
        ext, _ = three_type
        assert check_groupoid_cocycle(ext).passed

    def test_unnormalized_detected(self):
        z = {("M", "M", "alpha"): 1}
        g = GroupoidExtension.from_signs(("M", "alpha"), 12, negated=("alpha",), validate=False)
        g2 = GroupoidExtension(g.objects, 12, g.multipliers, z)
        rep = check_groupoid_cocycle(g2)
        assert any(c.name == "zeta-normalized" for c in rep.failures)

    def test_violating_cocycle_detected(self):
        g = GroupoidExtension.from_signs(("M", "alpha"), 12, negated=("alpha",), validate=False)
        z = {("M", "alpha", "M"): 3}
        g2 = GroupoidExtension(g.objects, 12, g.multipliers, z)
        rep = check_groupoid_cocycle(g2)
        assert any(c.name == "zeta-cocycle" for c in rep.failures)

    def test_cocycle_failure_breaks_associativity(self):
        g = GroupoidExtension.from_signs(("M", "alpha"), 12, negated=("alpha",), validate=False)
        z = {("M", "alpha", "M"): 3}
        g2 = GroupoidExtension(g.objects, 12, g.multipliers, z)
        rep = verify_groupoid(g2)
        assert any(c.name == "associativity" for c in rep.failures)


class TestExtensionProperty:
    def test_hom_sets_are_torsors_over_z(self, three_type):
        # Any two parallel morphisms differ by exactly one transposition
        # factor at the codomain.
        ext, _ = three_type
        for dom in ext.objects:
            for cod in ext.objects:
                for g1 in ext.hom(dom, cod):
                    for g2 in ext.hom(dom, cod):
                        sols = [
                            z
                            for z in range(12)
                            if compose_morphisms(GroupoidMorphism(z, cod, cod), g1, ext) == g2
                        ]
                        assert len(sols) == 1
