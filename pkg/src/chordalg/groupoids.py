"""Groupoid extensions with partial composition.

Objects are chord types. The transposition groupoid has one copy of Z_N per
object and no cross-object morphisms; the formal-inversion groupoid is thin
and complete (exactly one generator morphism per ordered object pair). The
extension has morphisms (z, h) with z a transposition at the codomain of h,
composed right-to-left:

    (z2, h2) . (z1, h1) = (z2 . phi_h2(z1) . zeta(h2, h1), h2 . h1)

whenever dom(h2) = cod(h1). phi assigns each generator h: X -> Y a unit
multiplier on exponents (an isomorphism Z@X -> Z@Y); zeta assigns each
composable pair a transposition at the final codomain, keyed by the object
chain (X, Y, Z).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from .pcs import PcSetType
from .report import Check, Report


class GroupoidCompositionError(ValueError):
    """Attempted composition of morphisms with mismatched objects."""


class GroupoidStructureError(ValueError):
    """A groupoid extension failed its construction-time axioms."""


@dataclass(frozen=True)
class GroupoidMorphism:
    """A morphism (z, h): dom -> cod; z is an exponent at the codomain."""

    z: int
    dom: str
    cod: str

    def __str__(self) -> str:
        if self.dom == self.cod:
            return f"(z_{self.cod}^{self.z},id_{self.dom})"
        return f"(z_{self.cod}^{self.z},h_{self.dom}{self.cod})"


@dataclass(frozen=True)
class GroupoidExtension:
    """Extension of a complete thin inversion groupoid by per-object Z_N.

    multipliers[(X, Y)] is the exponent multiplier of phi on the generator
    X -> Y; zeta[(X, Y, Z)] is the cocycle value for the composable pair
    (h_YZ, h_XY), an exponent at Z. Missing keys default to 1 and 0.
    """

    objects: Tuple[str, ...]
    modulus: int
    multipliers: Mapping[Tuple[str, str], int] = field(default_factory=dict)
    zeta: Mapping[Tuple[str, str, str], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "multipliers", dict(self.multipliers))
        object.__setattr__(self, "zeta", dict(self.zeta))
        if len(set(self.objects)) != len(self.objects):
            raise GroupoidStructureError(f"duplicate objects: {self.objects}")

    @classmethod
    def build(
        cls,
        objects: Tuple[str, ...],
        modulus: int,
        multipliers: Optional[Mapping[Tuple[str, str], int]] = None,
        zeta: Optional[Mapping[Tuple[str, str, str], int]] = None,
        validate: bool = True,
    ) -> "GroupoidExtension":
        g = cls(objects, modulus, multipliers or {}, zeta or {})
        if validate:
            rep = verify_groupoid(g)
            if not rep.passed:
                raise GroupoidStructureError(
                    "; ".join(f"{c.name}: {c.detail}" for c in rep.failures)
                )
        return g

    @classmethod
    def from_signs(
        cls,
        objects: Tuple[str, ...],
        modulus: int,
        negated: Tuple[str, ...] = (),
        validate: bool = True,
    ) -> "GroupoidExtension":
        """phi from a sign per object: the generator X -> Y inverts exponents
        exactly when the two objects carry opposite signs. Always functorial,
        and the only way 'act by z -> z^-1' extends consistently to a complete
        groupoid on more than two objects."""
        unknown = set(negated) - set(objects)
        if unknown:
            raise GroupoidStructureError(f"negated objects not declared: {sorted(unknown)}")
        sign = {x: (-1 if x in negated else 1) for x in objects}
        mult = {
            (x, y): (sign[x] * sign[y]) % modulus
            for x in objects
            for y in objects
        }
        return cls.build(objects, modulus, mult, validate=validate)

    def multiplier(self, dom: str, cod: str) -> int:
        return self.multipliers.get((dom, cod), 1) % self.modulus

    def zeta_value(self, x: str, y: str, z: str) -> int:
        """zeta(h_yz, h_xy), an exponent at z."""
        return self.zeta.get((x, y, z), 0) % self.modulus

    def identity_at(self, obj: str) -> GroupoidMorphism:
        return GroupoidMorphism(0, obj, obj)

    def morphisms(self) -> Iterator[GroupoidMorphism]:
        """All |objects|^2 * N morphisms, in deterministic order."""
        for dom in self.objects:
            for cod in self.objects:
                for z in range(self.modulus):
                    yield GroupoidMorphism(z, dom, cod)

    def hom(self, dom: str, cod: str) -> List[GroupoidMorphism]:
        return [GroupoidMorphism(z, dom, cod) for z in range(self.modulus)]


def compose_morphisms(
    g2: GroupoidMorphism, g1: GroupoidMorphism, G: GroupoidExtension
) -> GroupoidMorphism:
    """g2 . g1 (g1 first); defined only when dom(g2) = cod(g1)."""
    if g2.dom != g1.cod:
        raise GroupoidCompositionError(
            f"cannot compose {g2}: {g2.dom}->{g2.cod} after {g1}: {g1.dom}->{g1.cod}; "
            f"domain {g2.dom!r} differs from codomain {g1.cod!r}"
        )
    z = (
        g2.z
        + G.multiplier(g2.dom, g2.cod) * g1.z
        + G.zeta_value(g1.dom, g1.cod, g2.cod)
    ) % G.modulus
    return GroupoidMorphism(z, g1.dom, g2.cod)


def invert_morphism(g: GroupoidMorphism, G: GroupoidExtension) -> GroupoidMorphism:
    """The two-sided inverse, found by search over Hom(cod, dom)."""
    id_dom = G.identity_at(g.dom)
    id_cod = G.identity_at(g.cod)
    for cand in G.hom(g.cod, g.dom):
        if (
            compose_morphisms(cand, g, G) == id_dom
            and compose_morphisms(g, cand, G) == id_cod
        ):
            return cand
    raise GroupoidStructureError(f"morphism {g} has no two-sided inverse")


def check_groupoid_cocycle(G: GroupoidExtension) -> Report:
    """Normalization plus the cocycle identity over all composable triples:

    phi_h3(zeta(h2,h1)) . zeta(h3, h2.h1) = zeta(h3,h2) . zeta(h3.h2, h1)

    for chains W -> X -> Y -> Z of objects.
    """
    n = G.modulus
    checks: List[Check] = []

    norm_bad = [
        key
        for key in [(x, y, y) for x in G.objects for y in G.objects]
        + [(x, x, y) for x in G.objects for y in G.objects]
        if G.zeta_value(*key) != 0
    ]
    checks.append(
        Check(
            "zeta-normalized",
            not norm_bad,
            "identity legs contribute nothing" if not norm_bad else f"nonzero at {norm_bad[0]}",
        )
    )

    violations = []
    for w in G.objects:
        for x in G.objects:
            for y in G.objects:
                for z in G.objects:
                    lhs = (
                        G.multiplier(y, z) * G.zeta_value(w, x, y) + G.zeta_value(w, y, z)
                    ) % n
                    rhs = (G.zeta_value(x, y, z) + G.zeta_value(w, x, z)) % n
                    if lhs != rhs:
                        violations.append((w, x, y, z))
    checks.append(
        Check(
            "zeta-cocycle",
            not violations,
            f"exhaustive over {len(G.objects)}^4 object chains"
            if not violations
            else f"{len(violations)} violating chains, first {violations[0]}",
        )
    )
    return Report(tuple(checks))


def verify_groupoid(G: GroupoidExtension) -> Report:
    """Full structural report: phi functoriality, cocycle, associativity over
    all composable morphism triples, inverses, and the extension-uniqueness
    property (equal projections differ by a unique transposition factor)."""
    n = G.modulus
    checks: List[Check] = []

    bad_unit = [
        (x, y)
        for x in G.objects
        for y in G.objects
        if math.gcd(G.multiplier(x, y), n) != 1
    ]
    checks.append(
        Check(
            "phi-isomorphism",
            not bad_unit,
            "all multipliers are units mod N" if not bad_unit else f"non-unit at {bad_unit[0]}",
        )
    )

    bad_id = [x for x in G.objects if G.multiplier(x, x) != 1]
    checks.append(
        Check(
            "phi-identity",
            not bad_id,
            "identity morphisms act trivially" if not bad_id else f"fails at {bad_id[0]}",
        )
    )

    bad_funct = [
        (x, y, z)
        for x in G.objects
        for y in G.objects
        for z in G.objects
        if (G.multiplier(y, z) * G.multiplier(x, y)) % n != G.multiplier(x, z)
    ]
    checks.append(
        Check(
            "phi-functoriality",
            not bad_funct,
            "phi(h2.h1) = phi(h2) o phi(h1)" if not bad_funct else f"fails at chain {bad_funct[0]}",
        )
    )

    checks.extend(check_groupoid_cocycle(G))

    assoc_bad = None
    count = 0
    morphs = list(G.morphisms())
    by_dom: Dict[str, List[GroupoidMorphism]] = {}
    for m in morphs:
        by_dom.setdefault(m.dom, []).append(m)
    for g1 in morphs:
        for g2 in by_dom[g1.cod]:
            g21 = compose_morphisms(g2, g1, G)
            for g3 in by_dom[g2.cod]:
                count += 1
                if compose_morphisms(g3, g21, G) != compose_morphisms(
                    compose_morphisms(g3, g2, G), g1, G
                ):
                    assoc_bad = (g3, g2, g1)
                    break
            if assoc_bad:
                break
        if assoc_bad:
            break
    checks.append(
        Check(
            "associativity",
            assoc_bad is None,
            f"exhaustive over {count} composable triples"
            if assoc_bad is None
            else f"fails at {assoc_bad}",
        )
    )

    inv_ok = True
    if assoc_bad is None and not bad_unit:
        try:
            for m in morphs:
                invert_morphism(m, G)
        except GroupoidStructureError:
            inv_ok = False
    checks.append(Check("inverses", inv_ok, "every morphism has a two-sided inverse"))

    # extension property: same H-projection iff a unique left factor from Z
    ext_ok = True
    for dom in G.objects:
        for cod in G.objects:
            hom = G.hom(dom, cod)
            for g1 in hom:
                for g2 in hom:
                    sols = [
                        z
                        for z in range(n)
                        if compose_morphisms(GroupoidMorphism(z, cod, cod), g1, G) == g2
                    ]
                    if len(sols) != 1:
                        ext_ok = False
    checks.append(
        Check("extension-uniqueness", ext_ok, "g2 = I(z).g1 for exactly one z")
    )
    return Report(tuple(checks))


# The worked three-type system: a major triad plus the two set classes it
# shares voice-leading-sized moves with.
ALPHA = PcSetType("alpha", (0, 2, 5))
BETA = PcSetType("beta", (0, 4, 5))


def build_three_type_system() -> Tuple[GroupoidExtension, Dict[str, PcSetType]]:
    """Complete groupoid on M=[0,4,7], alpha=[0,2,5], beta=[0,4,5] with
    trivial cocycle; generators touching alpha invert exponents, the direct
    M <-> beta generators do not (the unique functorial assignment matching
    the inversion behaviour of the M/alpha and alpha/beta transformations)."""
    from .neo import MAJOR  # local import to avoid a cycle at module load

    types = {"M": MAJOR, "alpha": ALPHA, "beta": BETA}
    ext = GroupoidExtension.from_signs(("M", "alpha", "beta"), 12, negated=("alpha",))
    return ext, types
