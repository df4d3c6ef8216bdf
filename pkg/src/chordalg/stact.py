"""Simply-transitive left/right actions of an extension group on chords.

The bijection chi identifies each chord n_t with a group element (z^n', h):
the root offset from the anchor picks the Z exponent and the type picks the
H element. Left/right actions are then conjugation-free transports:

    g.p = chi(g . chi^-1(p))        p.g = chi(chi^-1(p) . g)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from .groups import ExtensionElement, ExtensionGroup, compose, inverse
from .pcs import ChordLabel, PcSetType, PitchClass
from .report import Check, Report


class UnregisteredTypeError(KeyError):
    """A chord's type is not registered in the bijection."""


class ChiConstructionError(ValueError):
    """The chord/element identification is not a bijection."""


@dataclass(frozen=True)
class ChiBijection:
    """Identification of chords with elements of an extension group.

    Requires Z to be the exponent-indexed cyclic group of order N so that
    z^n corresponds to the pitch-class (anchor + n). type_order assigns a
    PcSetType to each H element; the identity of H gets the anchor type.
    """

    group: ExtensionGroup
    root_anchor: PitchClass
    type_order: Tuple[PcSetType, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "type_order", tuple(self.type_order))
        z = self.group.z_group
        if not z.is_cyclic_indexed():
            raise ChiConstructionError("Z must be the exponent-indexed cyclic group")
        if z.order != self.root_anchor.modulus:
            raise ChiConstructionError(
                f"|Z| = {z.order} does not match modulus {self.root_anchor.modulus}"
            )
        if len(self.type_order) != self.group.h_group.order:
            raise ChiConstructionError(
                f"{len(self.type_order)} types for |H| = {self.group.h_group.order}"
            )
        names = [t.name for t in self.type_order]
        if len(set(names)) != len(names):
            raise ChiConstructionError(f"duplicate types in type_order: {names}")

    @property
    def modulus(self) -> int:
        return self.root_anchor.modulus

    @property
    def anchor_type(self) -> PcSetType:
        return self.type_order[self.group.h_group.identity]

    def chords(self) -> List[ChordLabel]:
        """All chords in chi's image, in element order."""
        return [self.chord_of(g) for g in self.group.elements()]

    def chord_of(self, g: ExtensionElement) -> ChordLabel:
        root = PitchClass(self.root_anchor.value + g.z, self.modulus)
        return ChordLabel(root, self.type_order[g.h])

    def element_of(self, p: ChordLabel) -> ExtensionElement:
        for h, t in enumerate(self.type_order):
            if t == p.type:
                return ExtensionElement((p.root.value - self.root_anchor.value) % self.modulus, h)
        raise UnregisteredTypeError(f"type {p.type.name!r} not registered in chi")


def left_act(g: ExtensionElement, p: ChordLabel, chi: ChiBijection) -> ChordLabel:
    """g.p = chi(g . chi^-1(p))."""
    return chi.chord_of(compose(g, chi.element_of(p), chi.group))


def right_act(p: ChordLabel, g: ExtensionElement, chi: ChiBijection) -> ChordLabel:
    """p.g = chi(chi^-1(p) . g)."""
    return chi.chord_of(compose(chi.element_of(p), g, chi.group))


def conjugate_for(p: ChordLabel, h: ExtensionElement, chi: ChiBijection) -> ExtensionElement:
    """The element g = chi^-1(p) . h . chi^-1(p)^-1 whose left action on p
    equals the right action of h on p (h in the reference frame of p)."""
    G = chi.group
    cp = chi.element_of(p)
    return compose(compose(cp, h, G), inverse(cp, G), G)


def verify_simply_transitive(
    G: ExtensionGroup,
    chi: ChiBijection,
    elements: Optional[Iterable[ExtensionElement]] = None,
) -> Report:
    """For every ordered chord pair, exactly one element maps first to second,
    for both the left and the right action. Exhaustive, never sampled."""
    elems = list(elements) if elements is not None else list(G.elements())
    chords = chi.chords()
    checks: List[Check] = []

    distinct = len(set((c.root.value, c.type.name) for c in chords)) == len(chords)
    checks.append(Check("chi-bijection", distinct, f"{len(chords)} distinct chords"))

    for side, act in (("left", lambda g, p: left_act(g, p, chi)),
                      ("right", lambda g, p: right_act(p, g, chi))):
        bad_pairs = 0
        for p in chords:
            for q in chords:
                count = sum(1 for g in elems if act(g, p) == q)
                if count != 1:
                    bad_pairs += 1
        checks.append(
            Check(
                f"simply-transitive-{side}",
                bad_pairs == 0,
                f"exactly one of {len(elems)} elements per ordered pair "
                f"({len(chords)}^2 pairs)"
                if bad_pairs == 0
                else f"{bad_pairs} ordered pairs violate uniqueness",
            )
        )
    return Report(tuple(checks))
