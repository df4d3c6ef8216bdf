"""Pitch-class arithmetic modulo N, transposition/inversion operators, chord labels.

Pitch-classes are residues mod N (12 by default). Chords are (root, type)
pairs where the type is a rooted interval pattern; raw pitch-class sets only
appear at the realize/identify boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union


class ModulusMismatchError(ValueError):
    """Two values from incompatible pitch-class systems were combined."""


class AmbiguousRegistryError(ValueError):
    """A type registry contains transpositionally equivalent types."""


@dataclass(frozen=True)
class PitchClass:
    """A residue in [0, N); arithmetic is always reduced mod N."""

    value: int
    modulus: int = 12

    def __post_init__(self) -> None:
        if self.modulus <= 0:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "value", int(self.value) % self.modulus)

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class TIOperator:
    """A transposition T_k (n -> n+k) or inversion I_k (n -> k-n)."""

    kind: str  # "T" or "I"
    index: int
    modulus: int = 12

    def __post_init__(self) -> None:
        if self.kind not in ("T", "I"):
            raise ValueError(f"operator kind must be 'T' or 'I', got {self.kind!r}")
        if self.modulus <= 0:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "index", int(self.index) % self.modulus)

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


@dataclass(frozen=True)
class PcSetType:
    """A named, root-relative interval pattern (first interval is 0)."""

    name: str
    intervals: Tuple[int, ...]
    modulus: int = 12

    def __post_init__(self) -> None:
        object.__setattr__(self, "intervals", tuple(int(i) for i in self.intervals))
        if not self.intervals or self.intervals[0] != 0:
            raise ValueError(f"type {self.name!r}: first interval must be 0")
        for a, b in zip(self.intervals, self.intervals[1:]):
            if b <= a:
                raise ValueError(f"type {self.name!r}: intervals must be strictly increasing")
        if self.intervals[-1] >= self.modulus:
            raise ValueError(f"type {self.name!r}: interval out of range for modulus {self.modulus}")

    @property
    def cardinality(self) -> int:
        return len(self.intervals)


@dataclass(frozen=True)
class ChordLabel:
    """A chord n_t: a root pitch-class together with a set type."""

    root: PitchClass
    type: PcSetType

    def __post_init__(self) -> None:
        if self.root.modulus != self.type.modulus:
            raise ModulusMismatchError(
                f"root modulus {self.root.modulus} != type modulus {self.type.modulus}"
            )

    def __str__(self) -> str:
        return f"{self.root.value}_{self.type.name}"


def apply_ti(op: TIOperator, p: PitchClass) -> PitchClass:
    """Apply T_k or I_k to a pitch-class."""
    if op.modulus != p.modulus:
        raise ModulusMismatchError(
            f"operator modulus {op.modulus} != pitch-class modulus {p.modulus}"
        )
    if op.kind == "T":
        return PitchClass(p.value + op.index, p.modulus)
    return PitchClass(op.index - p.value, p.modulus)


def compose_ti(a: TIOperator, b: TIOperator) -> TIOperator:
    """Return the operator equal to (apply a after b) pointwise.

    Satisfies T_p.T_q = T_{p+q}, T_p.I_q = I_{p+q}, I_p.T_q = I_{p-q},
    I_p.I_q = T_{p-q}.
    """
    if a.modulus != b.modulus:
        raise ModulusMismatchError(f"operator moduli differ: {a.modulus} vs {b.modulus}")
    n = a.modulus
    if a.kind == "T" and b.kind == "T":
        return TIOperator("T", a.index + b.index, n)
    if a.kind == "T" and b.kind == "I":
        return TIOperator("I", a.index + b.index, n)
    if a.kind == "I" and b.kind == "T":
        return TIOperator("I", a.index - b.index, n)
    return TIOperator("T", a.index - b.index, n)


def realize_chord(c: ChordLabel) -> List[PitchClass]:
    """Expand a chord label into its ordered pitch-classes."""
    n = c.type.modulus
    return [PitchClass(c.root.value + i, n) for i in c.type.intervals]


def transpositionally_equivalent(t1: PcSetType, t2: PcSetType) -> bool:
    """True if some transposition carries t1's set onto t2's set."""
    if t1.modulus != t2.modulus or t1.cardinality != t2.cardinality:
        return False
    n = t1.modulus
    s2 = frozenset(t2.intervals)
    return any(frozenset((i + k) % n for i in t1.intervals) == s2 for k in range(n))


def _as_values(pcs: Sequence[Union[PitchClass, int]], modulus: int) -> List[int]:
    out = []
    for p in pcs:
        if isinstance(p, PitchClass):
            if p.modulus != modulus:
                raise ModulusMismatchError(
                    f"pitch-class modulus {p.modulus} != registry modulus {modulus}"
                )
            out.append(p.value)
        else:
            out.append(int(p) % modulus)
    return out


def identify_chord(
    pcs: Sequence[Union[PitchClass, int]],
    registry: Iterable[PcSetType],
) -> Optional[ChordLabel]:
    """Find the unique (root, type) realizing the given pitch-classes as a set.

    Raises AmbiguousRegistryError if the registry contains two
    transpositionally equivalent types (root assignment would be ill-defined).
    Returns None when no registered type matches.
    """
    types = list(registry)
    if not types:
        raise ValueError("registry is empty")
    modulus = types[0].modulus
    for i, t1 in enumerate(types):
        for t2 in types[i + 1 :]:
            if transpositionally_equivalent(t1, t2):
                raise AmbiguousRegistryError(
                    f"types {t1.name!r} and {t2.name!r} are transpositionally equivalent"
                )
    values = frozenset(_as_values(pcs, modulus))
    for t in types:
        if t.cardinality != len(values):
            continue
        # interval 0 is in every type, so the root must be one of the tones
        for root in sorted(values):
            if frozenset((root + i) % modulus for i in t.intervals) == values:
                return ChordLabel(PitchClass(root, modulus), t)
    return None
