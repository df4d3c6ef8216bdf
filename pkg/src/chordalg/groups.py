"""Finite groups by Cayley table, automorphism actions, 2-cocycles, extensions.

The extension group G of 1 -> Z -> G -> H -> 1 has elements (z, h) composed as

    (z1, h1) . (z2, h2) = (z1 . phi_h1(z2) . zeta(h1, h2), h1 . h2)

where phi is an action of H on Z by automorphisms and zeta a normalized
2-cocycle. Everything is small enough to validate exhaustively.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

from .report import Check, Report


class GroupStructureError(ValueError):
    """A group, action, or cocycle failed its construction-time axioms."""


EXHAUSTIVE_TRIPLE_BOUND = 10**6
SAMPLED_TRIPLES = 10**4


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given extensionally by its composition table."""

    table: Tuple[Tuple[int, ...], ...]
    names: Tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))
        object.__setattr__(self, "names", tuple(self.names))

    @classmethod
    def from_table(
        cls,
        table: Sequence[Sequence[int]],
        names: Optional[Sequence[str]] = None,
        validate: bool = True,
    ) -> "FiniteGroup":
        n = len(table)
        if names is None:
            names = tuple(str(i) for i in range(n))
        g = cls(tuple(tuple(row) for row in table), tuple(names))
        if validate:
            rep = g.verify()
            if not rep.passed:
                raise GroupStructureError(
                    "; ".join(f"{c.name}: {c.detail}" for c in rep.failures)
                )
        return g

    @classmethod
    def cyclic(cls, n: int, name_prefix: str = "z") -> "FiniteGroup":
        """The cyclic group Z_n, element i indexed by its exponent."""
        if n <= 0:
            raise GroupStructureError(f"cyclic order must be positive, got {n}")
        table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
        names = tuple(f"{name_prefix}^{i}" for i in range(n))
        return cls(table, names)

    @property
    def order(self) -> int:
        return len(self.table)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    @property
    def identity(self) -> int:
        for e in range(self.order):
            if all(self.op(e, a) == a and self.op(a, e) == a for a in range(self.order)):
                return e
        raise GroupStructureError("no two-sided identity in table")

    def inv(self, a: int) -> int:
        e = self.identity
        for b in range(self.order):
            if self.op(a, b) == e and self.op(b, a) == e:
                return b
        raise GroupStructureError(f"element {a} has no two-sided inverse")

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.op(a, b) == self.op(b, a) for a in range(n) for b in range(n))

    def is_cyclic_indexed(self) -> bool:
        """True if the table is addition mod n on the element indices."""
        n = self.order
        return all(self.op(a, b) == (a + b) % n for a in range(n) for b in range(n))

    def verify(self) -> Report:
        """Exhaustive check of the group axioms on the table."""
        n = self.order
        checks: List[Check] = []

        square = n > 0 and all(
            len(row) == n
            and all(0 <= x < n for x in row)
            and sorted(row) == list(range(n))
            for row in self.table
        )
        square = square and all(
            sorted(self.table[r][c] for r in range(n)) == list(range(n))
            for c in range(n)
        )
        checks.append(Check("latin-square", square, f"{n}x{n} table"))

        ident = None
        if square:
            for e in range(n):
                if all(self.op(e, a) == a and self.op(a, e) == a for a in range(n)):
                    ident = e
                    break
        checks.append(Check("identity", ident is not None, f"identity index {ident}"))

        invs = ident is not None and all(
            any(self.op(a, b) == ident and self.op(b, a) == ident for b in range(n))
            for a in range(n)
        )
        checks.append(Check("inverses", bool(invs), "two-sided inverses for all elements"))

        bad = None
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.op(self.op(a, b), c) != self.op(a, self.op(b, c)):
                        bad = (a, b, c)
                        break
                if bad:
                    break
            if bad:
                break
        checks.append(
            Check(
                "associativity",
                bad is None,
                f"exhaustive over {n}^3 triples" if bad is None else f"fails at {bad}",
            )
        )
        return Report(tuple(checks))


@dataclass(frozen=True)
class GroupAction:
    """An action phi of H on Z by automorphisms, one permutation of Z per h."""

    source: FiniteGroup  # H
    target: FiniteGroup  # Z
    maps: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "maps", tuple(tuple(m) for m in self.maps))

    @classmethod
    def trivial(cls, h: FiniteGroup, z: FiniteGroup) -> "GroupAction":
        ident = tuple(range(z.order))
        return cls(h, z, tuple(ident for _ in range(h.order)))

    @classmethod
    def by_inversion(cls, h: FiniteGroup, z: FiniteGroup) -> "GroupAction":
        """Every non-identity h acts by z -> z^-1; requires the result functorial."""
        inv = tuple(z.inv(a) for a in range(z.order))
        ident = tuple(range(z.order))
        e = h.identity
        maps = tuple(ident if hh == e else inv for hh in range(h.order))
        action = cls(h, z, maps)
        rep = action.verify()
        if not rep.passed:
            raise GroupStructureError(
                "inversion action is not functorial for this H: "
                + "; ".join(c.name for c in rep.failures)
            )
        return action

    def apply(self, h: int, z: int) -> int:
        return self.maps[h][z]

    def verify(self) -> Report:
        """Check each map is an automorphism and the family is functorial."""
        checks: List[Check] = []
        nh, nz = self.source.order, self.target.order

        shape_ok = len(self.maps) == nh and all(
            sorted(m) == list(range(nz)) for m in self.maps
        )
        checks.append(Check("phi-permutations", shape_ok, "one permutation of Z per h"))

        auto_ok = shape_ok and all(
            self.maps[h][self.target.op(a, b)]
            == self.target.op(self.maps[h][a], self.maps[h][b])
            for h in range(nh)
            for a in range(nz)
            for b in range(nz)
        )
        checks.append(Check("phi-automorphism", bool(auto_ok), "each map preserves Z's table"))

        e = self.source.identity
        ident_ok = shape_ok and all(self.maps[e][a] == a for a in range(nz))
        checks.append(Check("phi-identity", bool(ident_ok), "identity of H acts trivially"))

        funct_ok = shape_ok and all(
            self.maps[self.source.op(h1, h2)][a] == self.maps[h1][self.maps[h2][a]]
            for h1 in range(nh)
            for h2 in range(nh)
            for a in range(nz)
        )
        checks.append(Check("phi-functoriality", bool(funct_ok), "map(h1.h2) = map(h1) o map(h2)"))
        return Report(tuple(checks))


@dataclass(frozen=True)
class Cocycle2:
    """A normalized 2-cocycle zeta: H x H -> Z."""

    source: FiniteGroup  # H
    target: FiniteGroup  # Z
    values: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(tuple(row) for row in self.values))

    @classmethod
    def trivial(cls, h: FiniteGroup, z: FiniteGroup) -> "Cocycle2":
        e = z.identity
        return cls(h, z, tuple(tuple(e for _ in range(h.order)) for _ in range(h.order)))

    def value(self, h1: int, h2: int) -> int:
        return self.values[h1][h2]


def check_cocycle(zeta: Cocycle2, phi: GroupAction) -> Report:
    """Exhaustively verify normalization and the 2-cocycle identity.

    The identity, written with application order h3 after h2 after h1, is
    phi_h3(zeta(h2,h1)) . zeta(h3, h2.h1) = zeta(h3,h2) . zeta(h3.h2, h1).
    """
    h, z = zeta.source, zeta.target
    checks: List[Check] = []

    shape_ok = len(zeta.values) == h.order and all(
        len(row) == h.order and all(0 <= v < z.order for v in row)
        for row in zeta.values
    )
    checks.append(Check("zeta-shape", shape_ok, f"{h.order}x{h.order} table over Z"))

    e_h, e_z = h.identity, z.identity
    norm_ok = shape_ok and all(
        zeta.value(e_h, a) == e_z and zeta.value(a, e_h) == e_z for a in range(h.order)
    )
    checks.append(Check("zeta-normalized", bool(norm_ok), "zeta(e,.) = zeta(.,e) = e"))

    violations = []
    if shape_ok:
        for h3 in range(h.order):
            for h2 in range(h.order):
                for h1 in range(h.order):
                    lhs = z.op(phi.apply(h3, zeta.value(h2, h1)), zeta.value(h3, h.op(h2, h1)))
                    rhs = z.op(zeta.value(h3, h2), zeta.value(h.op(h3, h2), h1))
                    if lhs != rhs:
                        violations.append((h3, h2, h1))
    checks.append(
        Check(
            "zeta-cocycle",
            shape_ok and not violations,
            f"exhaustive over {h.order}^3 triples"
            if not violations
            else f"{len(violations)} violating triples, first {violations[0]}",
        )
    )
    return Report(tuple(checks))


@dataclass(frozen=True)
class ExtensionElement:
    """An element (z, h) of an extension group, by index into Z and H."""

    z: int
    h: int


@dataclass(frozen=True)
class ExtensionGroup:
    """The extension of H by Z determined by (phi, zeta)."""

    z_group: FiniteGroup
    h_group: FiniteGroup
    phi: GroupAction
    zeta: Cocycle2

    @classmethod
    def build(
        cls,
        z_group: FiniteGroup,
        h_group: FiniteGroup,
        phi: Optional[GroupAction] = None,
        zeta: Optional[Cocycle2] = None,
        validate: bool = True,
    ) -> "ExtensionGroup":
        if phi is None:
            phi = GroupAction.trivial(h_group, z_group)
        if zeta is None:
            zeta = Cocycle2.trivial(h_group, z_group)
        g = cls(z_group, h_group, phi, zeta)
        if validate:
            rep = verify_group(g)
            if not rep.passed:
                raise GroupStructureError(
                    "; ".join(f"{c.name}: {c.detail}" for c in rep.failures)
                )
        return g

    @property
    def order(self) -> int:
        return self.z_group.order * self.h_group.order

    @property
    def identity(self) -> ExtensionElement:
        return ExtensionElement(self.z_group.identity, self.h_group.identity)

    def elements(self) -> Iterator[ExtensionElement]:
        for z in range(self.z_group.order):
            for h in range(self.h_group.order):
                yield ExtensionElement(z, h)

    def element_name(self, g: ExtensionElement) -> str:
        return f"({self.z_group.names[g.z]},{self.h_group.names[g.h]})"


def compose(g1: ExtensionElement, g2: ExtensionElement, G: ExtensionGroup) -> ExtensionElement:
    """(z1,h1).(z2,h2) = (z1 . phi_h1(z2) . zeta(h1,h2), h1.h2)."""
    z = G.z_group.op(
        G.z_group.op(g1.z, G.phi.apply(g1.h, g2.z)),
        G.zeta.value(g1.h, g2.h),
    )
    return ExtensionElement(z, G.h_group.op(g1.h, g2.h))


def inverse(g: ExtensionElement, G: ExtensionGroup) -> ExtensionElement:
    """The two-sided inverse of g, found by search over G."""
    e = G.identity
    for cand in G.elements():
        if compose(g, cand, G) == e and compose(cand, g, G) == e:
            return cand
    raise GroupStructureError(f"element {g} has no two-sided inverse")


def verify_group(G: ExtensionGroup, triple_bound: int = EXHAUSTIVE_TRIPLE_BOUND) -> Report:
    """Check closure, associativity, identity, inverses, and |G| = |Z|.|H|.

    Associativity is exhaustive while |G|^3 <= triple_bound, else sampled
    deterministically.
    """
    checks: List[Check] = []
    checks.extend(Check(f"z-{c.name}", c.passed, c.detail) for c in G.z_group.verify())
    checks.extend(Check(f"h-{c.name}", c.passed, c.detail) for c in G.h_group.verify())
    checks.extend(G.phi.verify())
    checks.extend(check_cocycle(G.zeta, G.phi))

    elems = list(G.elements())
    n = len(elems)
    checks.append(Check("order", n == G.z_group.order * G.h_group.order, f"|G| = {n}"))

    closure_ok = all(
        0 <= compose(a, b, G).z < G.z_group.order
        and 0 <= compose(a, b, G).h < G.h_group.order
        for a in elems
        for b in elems
    )
    checks.append(Check("closure", closure_ok, "all products are elements"))

    e = G.identity
    ident_ok = all(compose(e, a, G) == a and compose(a, e, G) == a for a in elems)
    checks.append(Check("extension-identity", ident_ok, f"(e,e) = {G.element_name(e)}"))

    inv_ok = True
    for a in elems:
        if not any(
            compose(a, b, G) == e and compose(b, a, G) == e for b in elems
        ):
            inv_ok = False
            break
    checks.append(Check("extension-inverses", inv_ok, "two-sided inverses exist"))

    if n**3 <= triple_bound:
        triples: Iterator = itertools.product(elems, elems, elems)
        mode = f"exhaustive over {n}^3 triples"
    else:
        rng = random.Random(0)
        triples = (
            (rng.choice(elems), rng.choice(elems), rng.choice(elems))
            for _ in range(SAMPLED_TRIPLES)
        )
        mode = f"sampled {SAMPLED_TRIPLES} triples"
    bad = None
    for a, b, c in triples:
        if compose(compose(a, b, G), c, G) != compose(a, compose(b, c, G), G):
            bad = (a, b, c)
            break
    checks.append(
        Check("extension-associativity", bad is None, mode if bad is None else f"fails at {bad}")
    )

    abelian = all(compose(a, b, G) == compose(b, a, G) for a in elems for b in elems)
    checks.append(Check("abelian", True, "yes" if abelian else "no"))
    return Report(tuple(checks))
