"""Covariant and contravariant hom-set actions of a groupoid extension on chords.

Anchoring at one object A identifies the chords of each type X with the
morphism set Hom(A, X) (covariant) or Hom(X, A) (contravariant); the action
is post- or pre-composition. Because composition is partial, these are
partial transformations: applying a morphism to a chord of the wrong type is
an error, never a silent identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple

from .groupoids import (
    GroupoidCompositionError,
    GroupoidExtension,
    GroupoidMorphism,
    compose_morphisms,
    invert_morphism,
)
from .pcs import ChordLabel, PcSetType, PitchClass
from .report import Check, Report

COVARIANT = "covariant"
CONTRAVARIANT = "contravariant"


class PartialTransformationError(ValueError):
    """The transformation is undefined for this chord's type."""


@dataclass(frozen=True)
class GroupoidChi:
    """Chord <-> morphism identification for one anchor object and variance.

    Exponent 0 is identified with pitch-class root_anchor at every object, so
    one integer names the same root across types.
    """

    extension: GroupoidExtension
    types: Mapping[str, PcSetType]
    anchor: str
    variance: str = COVARIANT
    root_anchor: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "types", dict(self.types))
        if self.variance not in (COVARIANT, CONTRAVARIANT):
            raise ValueError(f"unknown variance {self.variance!r}")
        if self.anchor not in self.extension.objects:
            raise ValueError(f"anchor {self.anchor!r} is not an object")
        missing = set(self.extension.objects) - set(self.types)
        if missing:
            raise ValueError(f"objects without a registered type: {sorted(missing)}")

    @property
    def modulus(self) -> int:
        return self.extension.modulus

    def _object_of(self, p: ChordLabel) -> str:
        for name, t in self.types.items():
            if t == p.type:
                return name
        raise PartialTransformationError(f"type {p.type.name!r} not registered")

    def morphism_of(self, p: ChordLabel) -> GroupoidMorphism:
        obj = self._object_of(p)
        z = (p.root.value - self.root_anchor) % self.modulus
        if self.variance == COVARIANT:
            return GroupoidMorphism(z, self.anchor, obj)
        return GroupoidMorphism(z, obj, self.anchor)

    def chord_of(self, m: GroupoidMorphism) -> ChordLabel:
        obj = m.cod if self.variance == COVARIANT else m.dom
        fixed = m.dom if self.variance == COVARIANT else m.cod
        if fixed != self.anchor:
            raise ValueError(f"morphism {m} is not in the image of this identification")
        return ChordLabel(
            PitchClass(m.z + self.root_anchor, self.modulus), self.types[obj]
        )

    def chords(self) -> List[ChordLabel]:
        return [
            ChordLabel(PitchClass(n, self.modulus), self.types[obj])
            for obj in self.extension.objects
            for n in range(self.modulus)
        ]


def covariant_act(g: GroupoidMorphism, p: ChordLabel, chi: GroupoidChi) -> ChordLabel:
    """g.p by post-composition; defined only when dom(g) is p's type."""
    if chi.variance != COVARIANT:
        raise ValueError("covariant_act requires a covariant identification")
    m = chi.morphism_of(p)
    try:
        return chi.chord_of(compose_morphisms(g, m, chi.extension))
    except GroupoidCompositionError as exc:
        raise PartialTransformationError(
            f"partial transformation undefined: {g} expects a {g.dom} chord, got {p}"
        ) from exc


def contravariant_act(p: ChordLabel, g: GroupoidMorphism, chi: GroupoidChi) -> ChordLabel:
    """p.g by pre-composition; defined only when cod(g) is p's type."""
    if chi.variance != CONTRAVARIANT:
        raise ValueError("contravariant_act requires a contravariant identification")
    m = chi.morphism_of(p)
    try:
        return chi.chord_of(compose_morphisms(m, g, chi.extension))
    except GroupoidCompositionError as exc:
        raise PartialTransformationError(
            f"partial transformation undefined: {g} expects a {g.cod} chord, got {p}"
        ) from exc


def act(g: GroupoidMorphism, p: ChordLabel, chi: GroupoidChi) -> ChordLabel:
    """Apply g to p under chi's own variance."""
    if chi.variance == COVARIANT:
        return covariant_act(g, p, chi)
    return contravariant_act(p, g, chi)


def label_pair(p: ChordLabel, q: ChordLabel, chi: GroupoidChi) -> GroupoidMorphism:
    """The unique morphism carrying p to q under chi's variance."""
    mp, mq = chi.morphism_of(p), chi.morphism_of(q)
    ext = chi.extension
    if chi.variance == COVARIANT:
        return compose_morphisms(mq, invert_morphism(mp, ext), ext)
    return compose_morphisms(invert_morphism(mp, ext), mq, ext)


@dataclass(frozen=True)
class ContextualReport:
    """Root offsets of a morphism and its inverse on their domain types."""

    offsets: Tuple[Tuple[str, int], ...]  # (type object, uniform root offset)
    contextual: bool
    type_swapping: bool


def _uniform_offset(g: GroupoidMorphism, chi: GroupoidChi) -> Tuple[str, int]:
    """The object whose chords g transforms, and the root offset, which is
    uniform for contravariant actions of this extension."""
    obj = g.cod  # contravariant: g acts on chords of its codomain type
    offsets = set()
    for n in range(chi.modulus):
        p = ChordLabel(PitchClass(n, chi.modulus), chi.types[obj])
        offsets.add((contravariant_act(p, g, chi).root.value - n) % chi.modulus)
    if len(offsets) != 1:
        raise ValueError(f"non-uniform root offset for {g}: {sorted(offsets)}")
    return obj, offsets.pop()


def contextual_check(g: GroupoidMorphism, chi: GroupoidChi) -> ContextualReport:
    """Compare the root offsets of g and g^-1; a transformation is contextual
    when the offset depends on the type it is applied to."""
    if chi.variance != CONTRAVARIANT:
        raise ValueError("contextual_check requires a contravariant identification")
    ginv = invert_morphism(g, chi.extension)
    entries = [_uniform_offset(g, chi)]
    if ginv != g:
        entries.append(_uniform_offset(ginv, chi))
    offsets = tuple(entries)
    distinct = {off for _, off in offsets}
    return ContextualReport(
        offsets=offsets,
        contextual=len(distinct) > 1,
        type_swapping=g.dom != g.cod,
    )
