"""The dihedral group of order 24 acting on major/minor triads.

Left actions recover the transposition/inversion transformations T_k and I_k,
right actions recover the contextual P, L, R transformations. The element
correspondences are pinned here and cross-validated against pointwise
pitch-class arithmetic by the test suite.
"""

from __future__ import annotations

from typing import Dict, List, Set, Tuple

from .groups import ExtensionElement, ExtensionGroup, FiniteGroup, GroupAction, compose
from .pcs import ChordLabel, PcSetType, PitchClass, realize_chord
from .report import Check, Report
from .stact import ChiBijection, left_act, right_act

MAJOR = PcSetType("M", (0, 4, 7))
MINOR = PcSetType("m", (0, 3, 7))

# The inversion I_k corresponds to the element (z^{k+5}, flip): inverting the
# major pattern [0,4,7] about 0 lands on the minor pattern rooted 5 up.
INVERSION_OFFSET = 5

PLR_ELEMENTS: Dict[str, ExtensionElement] = {
    "P": ExtensionElement(0, 1),
    "L": ExtensionElement(4, 1),
    "R": ExtensionElement(9, 1),
}


def build_d24() -> Tuple[ExtensionGroup, ChiBijection]:
    """The order-24 dihedral extension of Z_2 by Z_12 with its chord bijection.

    Z_12 acts on roots, the flip acts by z -> z^-1, the cocycle is trivial
    (semidirect product), and chi anchors pitch-class 0 to the major type.
    """
    z12 = FiniteGroup.cyclic(12)
    h2 = FiniteGroup.cyclic(2, name_prefix="h")
    phi = GroupAction.by_inversion(h2, z12)
    group = ExtensionGroup.build(z12, h2, phi=phi)
    chi = ChiBijection(group, PitchClass(0), (MAJOR, MINOR))
    return group, chi


def transposition_element(k: int) -> ExtensionElement:
    return ExtensionElement(k % 12, 0)


def inversion_element(k: int) -> ExtensionElement:
    return ExtensionElement((k + INVERSION_OFFSET) % 12, 1)


def element_ti_name(g: ExtensionElement) -> str:
    """The T_k / I_k name for an element of the dihedral system."""
    if g.h == 0:
        return f"T{g.z}"
    return f"I{(g.z - INVERSION_OFFSET) % 12}"


def ti_element(name: str) -> ExtensionElement:
    """Parse a name like 'T4' or 'I11' into the corresponding element."""
    kind, idx = name[0], int(name[1:])
    if kind == "T":
        return transposition_element(idx)
    if kind == "I":
        return inversion_element(idx)
    raise ValueError(f"unknown transformation name {name!r}")


def ti_left_action(name: str, p: ChordLabel, chi: ChiBijection) -> ChordLabel:
    """Apply a named T_k or I_k to a major/minor chord via the left action."""
    return left_act(ti_element(name), p, chi)


def plr_right_action(name: str, p: ChordLabel, chi: ChiBijection) -> ChordLabel:
    """Apply P, L, or R to a major/minor chord via the right action."""
    return right_act(p, PLR_ELEMENTS[name], chi)


def word_element(word: str, G: ExtensionGroup) -> ExtensionElement:
    """The element of a word over {P,L,R}, letters in application order.

    Right actions compose left-to-right: p.(g1.g2) = (p.g1).g2, so the word
    'LR' (apply L, then R) is the product L.R.
    """
    acc = G.identity
    for letter in word:
        acc = compose(acc, PLR_ELEMENTS[letter], G)
    return acc


def verify_presentations(G: ExtensionGroup) -> Report:
    """Verify both dihedral presentations as element equations.

    T/I: T1^12 = e, I0^2 = e, I0.T1.I0 = T11.
    PLR: P = R(LR)^3, (LR)^12 = P^2 = (LRP)^2 = e.
    """
    e = G.identity
    t1 = transposition_element(1)
    i0 = inversion_element(0)

    def power(g: ExtensionElement, n: int) -> ExtensionElement:
        acc = e
        for _ in range(n):
            acc = compose(acc, g, G)
        return acc

    checks = [
        Check("T1^12 = e", power(t1, 12) == e),
        Check("I0^2 = e", power(i0, 2) == e),
        Check(
            "I0.T1.I0 = T11",
            compose(compose(i0, t1, G), i0, G) == transposition_element(11),
        ),
        Check("P = R(LR)^3", word_element("RLRLRLR", G) == PLR_ELEMENTS["P"]),
        Check("(LR)^12 = e", word_element("LR" * 12, G) == e),
        Check("P^2 = e", word_element("PP", G) == e),
        Check("(LRP)^2 = e", word_element("LRP" * 2, G) == e),
    ]
    return Report(tuple(checks))


def common_tones(p: ChordLabel, q: ChordLabel) -> Set[int]:
    """Pitch-classes shared by the realizations of two chords."""
    return {t.value for t in realize_chord(p)} & {t.value for t in realize_chord(q)}


def plr_word_for(g: ExtensionElement, G: ExtensionGroup) -> str:
    """Shortest word over {P,L,R} equal to g, by breadth-first search.

    Deterministic: generators tried in alphabetical order, so ties resolve
    to the lexicographically least shortest word. The identity is '1'.
    """
    e = G.identity
    if g == e:
        return "1"
    seen = {e: ""}
    frontier: List[ExtensionElement] = [e]
    while frontier:
        nxt: List[ExtensionElement] = []
        for cur in frontier:
            for letter in ("L", "P", "R"):
                cand = compose(cur, PLR_ELEMENTS[letter], G)
                if cand not in seen:
                    seen[cand] = seen[cur] + letter
                    if cand == g:
                        return seen[cand]
                    nxt.append(cand)
        frontier = nxt
    raise ValueError(f"element {g} not generated by P, L, R")
