"""Generalized inversion operators between equal-cardinality pitch-class sets.

An operator is parameterized by a tone pairing (bijection between positions
of the two interval patterns) and a root constant c: tone i of an n-rooted
source chord maps, under the ordinary inversion I_{c + a_i + b_sigma(i)}, to
tone sigma(i) of the (c - n)-rooted target chord. This is exactly the family
for which the root map n -> c - n is uniform across transpositions, and every
such operator is an involution by construction (which the verifier checks
from scratch anyway).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .homact import CONTRAVARIANT, COVARIANT, GroupoidChi, GroupoidMorphism, act
from .neo import common_tones
from .pcs import ChordLabel, PcSetType, PitchClass, TIOperator, apply_ti

# Designated base operators per type pair: the constant and pairing whose
# subscript is 0. Pinned for the M/alpha and alpha/beta pairs (the operators
# {I_0,I_3} and {I_0,I_1}); any other pair defaults to constant 0 with the
# identity pairing.
_DESIGNATED: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Tuple[int, Tuple[int, ...]]] = {
    ((0, 4, 7), (0, 2, 5)): (3, (0, 2, 1)),
    ((0, 2, 5), (0, 4, 5)): (7, (2, 1, 0)),
}


class NotAnInversionError(ValueError):
    """The morphism does not act as a generalized inversion."""


class WrongChordTypeError(ValueError):
    """The operator is a partial transformation undefined for this type."""


def _base(source: PcSetType, target: PcSetType) -> Tuple[int, Tuple[int, ...]]:
    key = (source.intervals, target.intervals)
    if key in _DESIGNATED:
        return _DESIGNATED[key]
    rkey = (target.intervals, source.intervals)
    if rkey in _DESIGNATED:
        c, pairing = _DESIGNATED[rkey]
        inv = tuple(pairing.index(i) for i in range(len(pairing)))
        return c, inv
    return 0, tuple(range(source.cardinality))


@dataclass(frozen=True)
class GeneralizedInversion:
    """A component-wise family of inversions between two set types."""

    source: PcSetType
    target: PcSetType
    pairing: Tuple[int, ...]  # source position i -> target position pairing[i]
    constant: int  # root map n -> constant - n

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairing", tuple(self.pairing))
        k = self.source.cardinality
        if self.target.cardinality != k:
            raise ValueError(
                f"cardinality mismatch: {self.source.name} has {k}, "
                f"{self.target.name} has {self.target.cardinality}"
            )
        if sorted(self.pairing) != list(range(k)):
            raise ValueError(f"pairing {self.pairing} is not a bijection on {k} positions")
        object.__setattr__(self, "constant", self.constant % self.source.modulus)

    @property
    def modulus(self) -> int:
        return self.source.modulus

    @property
    def inversion_indices(self) -> Tuple[int, ...]:
        """Index of the inversion assigned to each source position."""
        a, b = self.source.intervals, self.target.intervals
        return tuple(
            (self.constant + a[i] + b[self.pairing[i]]) % self.modulus
            for i in range(len(a))
        )

    @property
    def subscript(self) -> int:
        """Offset of the constant from the designated base operator."""
        return (self.constant - _base(self.source, self.target)[0]) % self.modulus

    @property
    def name(self) -> str:
        return f"J{self.subscript}[{self.source.name},{self.target.name}]"

    def apply(self, p: ChordLabel) -> ChordLabel:
        """Send n_source to (c-n)_target, or reciprocally for target chords."""
        n = self.modulus
        if p.type == self.source:
            other = self.target
        elif p.type == self.target:
            other = self.source
        else:
            raise WrongChordTypeError(
                f"{self.name} is undefined on {p.type.name!r} chords "
                f"(acts between {self.source.name!r} and {self.target.name!r})"
            )
        return ChordLabel(PitchClass(self.constant - p.root.value, n), other)

    def tone_assignments(self, p: ChordLabel) -> List[Tuple[int, int, int]]:
        """(source tone, inversion index, image tone) triples for one chord."""
        if p.type != self.source:
            raise WrongChordTypeError(f"tone assignments defined on {self.source.name!r} chords")
        ks = self.inversion_indices
        out = []
        for i, interval in enumerate(self.source.intervals):
            tone = PitchClass(p.root.value + interval, self.modulus)
            image = apply_ti(TIOperator("I", ks[i], self.modulus), tone)
            out.append((tone.value, ks[i], image.value))
        return out


def apply_geninv(J: GeneralizedInversion, p: ChordLabel) -> ChordLabel:
    """Apply a generalized inversion to a chord of either of its types."""
    return J.apply(p)


def verify_involution(J: GeneralizedInversion) -> bool:
    """Apply twice on every chord of both types and compare with identity."""
    n = J.modulus
    for t in (J.source, J.target):
        for root in range(n):
            p = ChordLabel(PitchClass(root, n), t)
            if J.apply(J.apply(p)) != p:
                return False
    return True


def enumerate_geninvs(
    t1: PcSetType,
    t2: PcSetType,
    min_common_tones: Optional[int] = None,
) -> List[GeneralizedInversion]:
    """All (constant, pairing) operators from t1 to t2, lexicographic by
    constant then pairing; optionally keep only those sharing at least
    min_common_tones pitch-classes with the root-0 source chord's image."""
    if t1.cardinality != t2.cardinality:
        raise ValueError(
            f"cardinality mismatch: {t1.name} has {t1.cardinality}, {t2.name} has {t2.cardinality}"
        )
    n = t1.modulus
    zero = ChordLabel(PitchClass(0, n), t1)
    out = []
    for c in range(n):
        for pairing in itertools.permutations(range(t1.cardinality)):
            J = GeneralizedInversion(t1, t2, pairing, c)
            if min_common_tones is not None:
                if len(common_tones(zero, J.apply(zero))) < min_common_tones:
                    continue
            out.append(J)
    return out


def geninv_from_morphism(
    g: GroupoidMorphism, chi: GroupoidChi
) -> Tuple[GeneralizedInversion, bool]:
    """The operator realizing a type-changing morphism's chord action.

    Covariant morphisms whose root map is n -> c - n yield the operator
    directly (frame flag False). Contravariant morphisms act by a uniform
    root offset; the returned operator reproduces that action only in the
    reference frame of the chord (conjugated by the transposition to the
    chord's root), signalled by frame flag True.
    """
    if g.dom == g.cod:
        raise NotAnInversionError(f"{g} does not change type; it is not an inversion")
    n = chi.modulus
    if chi.variance == COVARIANT:
        dom_t, cod_t = chi.types[g.dom], chi.types[g.cod]
        images = [
            act(g, ChordLabel(PitchClass(r, n), dom_t), chi).root.value for r in range(n)
        ]
        consts = {(images[r] + r) % n for r in range(n)}
        if len(consts) != 1:
            raise NotAnInversionError(
                f"{g} acts as a transposition-like map, not an inversion"
            )
        c = consts.pop()
        _, pairing = _base(dom_t, cod_t)
        return GeneralizedInversion(dom_t, cod_t, pairing, c), False
    # contravariant: g acts on chords of its codomain type by n -> n + k
    cod_t, dom_t = chi.types[g.cod], chi.types[g.dom]
    offsets = {
        (act(g, ChordLabel(PitchClass(r, n), cod_t), chi).root.value - r) % n
        for r in range(n)
    }
    if len(offsets) != 1:
        raise NotAnInversionError(f"{g} has a non-uniform root offset: {sorted(offsets)}")
    k = offsets.pop()
    c = k  # the frame-relative operator sends the root-0 chord to k
    _, pairing = _base(cod_t, dom_t)
    return GeneralizedInversion(cod_t, dom_t, pairing, c), True
