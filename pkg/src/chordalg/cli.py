"""Command-line surface: verify, analyze, enumerate, table, dot.

Exit codes: 0 success, 1 domain failure (axiom violation, undefined partial
transformation, cardinality mismatch), 2 input error (unreadable file, parse
error, wrong flag for the system's mode), 3 internal self-check failure.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Sequence, Tuple

from .dsl import (
    GROUP_MODE,
    DslError,
    SystemSpec,
    parse_sequence,
    parse_system,
)
from .geninv import NotAnInversionError, enumerate_geninvs, geninv_from_morphism
from .groupoids import verify_groupoid
from .groups import ExtensionElement, verify_group
from .homact import (
    CONTRAVARIANT,
    COVARIANT,
    GroupoidChi,
    act,
    label_pair,
)
from .neo import MAJOR, MINOR, common_tones, plr_word_for
from .pcs import (
    ChordLabel,
    PitchClass,
    TIOperator,
    apply_ti,
    identify_chord,
    realize_chord,
)
from .report import Report
from .stact import left_act, right_act, verify_simply_transitive
from .systems import GroupSystem, GroupoidSystem, build_system

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class CliInputError(Exception):
    pass


class CliDomainError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliInputError(f"cannot read {path}: {exc}")


def _load_system(path: str, validate: bool = False):
    try:
        return build_system(parse_system(_read(path)), validate=validate)
    except DslError as exc:
        raise CliInputError(f"{path}: {exc}")


def _emit_rows(rows: Sequence[Sequence[str]], fmt: str) -> None:
    if fmt == "tsv":
        for row in rows:
            print("\t".join(row))
        return
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))] if rows else []
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


def _emit_report(report: Report, fmt: str) -> None:
    rows = [
        ("PASS" if c.passed else "FAIL", c.name, c.detail) for c in report
    ]
    _emit_rows(rows, fmt)


# ---- element naming -------------------------------------------------------


def _pointwise_ti_name(g: ExtensionElement, system: GroupSystem) -> Optional[str]:
    """T_k/I_k name for g when its left action equals pointwise pitch-class
    arithmetic on every chord; None when no such operator matches."""
    chi = system.chi
    n = chi.modulus
    registry = list(system.types.values())
    chords = chi.chords()
    for kind in ("T", "I"):
        for k in range(n):
            op = TIOperator(kind, k, n)
            ok = True
            for p in chords:
                tones = [apply_ti(op, t) for t in realize_chord(p)]
                if identify_chord(tones, registry) != left_act(g, p, chi):
                    ok = False
                    break
            if ok:
                return f"{kind}{k}"
    return None


def _is_plr_system(system: GroupSystem) -> bool:
    intervals = {t.intervals for t in system.types.values()}
    return (
        system.spec.modulus == 12
        and system.extension.h_group.order == 2
        and intervals == {MAJOR.intervals, MINOR.intervals}
    )


def _left_name(g: ExtensionElement, system: GroupSystem) -> str:
    return _pointwise_ti_name(g, system) or system.extension.element_name(g)


def _right_name(g: ExtensionElement, system: GroupSystem) -> str:
    if _is_plr_system(system):
        return plr_word_for(g, system.extension)
    return system.extension.element_name(g)


# ---- subcommands ----------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    system = _load_system(args.system)
    if isinstance(system, GroupSystem):
        checks = list(verify_group(system.extension))
        checks.extend(verify_simply_transitive(system.extension, system.chi))
        report = Report(tuple(checks))
        _emit_report(report, args.format)
        if report.passed:
            print(
                f"OK: {system.extension.order} elements, simply transitive on "
                f"{len(system.chi.chords())} chords"
            )
        return EXIT_OK if report.passed else EXIT_DOMAIN
    report = verify_groupoid(system.extension)
    _emit_report(report, args.format)
    if report.passed:
        n_mor = len(list(system.extension.morphisms()))
        print(
            f"OK: {len(system.extension.objects)} objects, {n_mor} morphisms, "
            f"cocycle condition holds"
        )
    return EXIT_OK if report.passed else EXIT_DOMAIN


def _analyze_group(system: GroupSystem, labels: Sequence[ChordLabel]) -> List[Tuple[str, ...]]:
    chi = system.chi
    elems = list(system.extension.elements())
    rows = [("from", "to", "left", "right")]
    for p, q in zip(labels, labels[1:]):
        lefts = [g for g in elems if left_act(g, p, chi) == q]
        rights = [g for g in elems if right_act(p, g, chi) == q]
        if len(lefts) != 1 or len(rights) != 1:
            raise CliDomainError(f"no unique transformation from {p} to {q}")
        gl, gr = lefts[0], rights[0]
        # self-check: reported labels must reproduce the target
        if left_act(gl, p, chi) != q or right_act(p, gr, chi) != q:
            raise AssertionError(f"self-check failed for {p} -> {q}")
        rows.append((str(p), str(q), _left_name(gl, system), _right_name(gr, system)))
    return rows


def _root_images(g, chi: GroupoidChi) -> Tuple[int, ...]:
    """Image roots of all chords g acts on, for contextuality comparison."""
    obj = g.dom if chi.variance == COVARIANT else g.cod
    t = chi.types[obj]
    return tuple(
        act(g, ChordLabel(PitchClass(n, chi.modulus), t), chi).root.value
        for n in range(chi.modulus)
    )


def _analyze_groupoid(system: GroupoidSystem, labels: Sequence[ChordLabel]) -> List[Tuple[str, ...]]:
    from .groupoids import invert_morphism

    chi = system.chi
    rows = [("from", "to", "morphism", "geninv", "contextual")]
    for p, q in zip(labels, labels[1:]):
        g = label_pair(p, q, chi)
        if act(g, p, chi) != q:
            raise AssertionError(f"self-check failed for {p} -> {q}")
        try:
            J, framed = geninv_from_morphism(g, chi)
            jname = J.name + (" (frame-relative)" if framed else "")
        except NotAnInversionError:
            jname = "-"
        contextual = _root_images(g, chi) != _root_images(
            invert_morphism(g, system.extension), chi
        )
        rows.append((str(p), str(q), str(g), jname, "yes" if contextual else "no"))
    return rows


def cmd_analyze(args: argparse.Namespace) -> int:
    system = _load_system(args.system)
    try:
        seq = parse_sequence(_read(args.sequence), system.spec)
    except DslError as exc:
        raise CliInputError(f"{args.sequence}: {exc}")
    if len(seq.labels) < 2:
        raise CliInputError("sequence must contain at least two chords")
    if isinstance(system, GroupSystem):
        if args.groupoid:
            raise CliInputError("--groupoid requires a groupoid-extension system")
        rows = _analyze_group(system, seq.labels)
        both = not (args.left or args.right)
        keep = [0, 1]
        if args.left or both:
            keep.append(2)
        if args.right or both:
            keep.append(3)
        rows = [tuple(r[i] for i in keep) for r in rows]
    else:
        if args.left or args.right:
            raise CliInputError("--left/--right require a group-extension system")
        rows = _analyze_groupoid(system, seq.labels)
    _emit_rows(rows, args.format)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    system = _load_system(args.system)
    try:
        t1, t2 = system.types[args.type1], system.types[args.type2]
    except KeyError as exc:
        raise CliInputError(f"unknown type {exc.args[0]!r}")
    if t1.cardinality != t2.cardinality:
        raise CliDomainError(
            f"cardinality mismatch: {t1.name} has {t1.cardinality} tones, "
            f"{t2.name} has {t2.cardinality}"
        )
    zero = ChordLabel(PitchClass(0, t1.modulus), t1)
    rows = [("name", "constant", "pairing", "inversions", "common_tones_at_0")]
    for J in enumerate_geninvs(t1, t2, min_common_tones=args.min_common_tones):
        rows.append(
            (
                J.name,
                str(J.constant),
                ",".join(map(str, J.pairing)),
                ",".join(map(str, J.inversion_indices)),
                str(len(common_tones(zero, J.apply(zero)))),
            )
        )
    _emit_rows(rows, args.format)
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    system = _load_system(args.system)
    if not isinstance(system, GroupSystem):
        raise CliInputError(
            "composition tables require a group-extension system; use 'dot' for groupoids"
        )
    ext, chi = system.extension, system.chi
    elems = list(ext.elements())
    names = {g: _left_name(g, system) for g in elems}
    if args.cayley:
        from .groups import compose

        rows = [("*",) + tuple(names[g] for g in elems)]
        for a in elems:
            rows.append((names[a],) + tuple(names[compose(a, b, ext)] for b in elems))
        _emit_rows(rows, args.format)
        return EXIT_OK
    chords = chi.chords()
    rows = [("element",) + tuple(str(p) for p in chords)]
    for g in elems:
        if args.action == "left":
            images = (str(left_act(g, p, chi)) for p in chords)
        else:
            images = (str(right_act(p, g, chi)) for p in chords)
        rows.append((names[g],) + tuple(images))
    _emit_rows(rows, args.format)
    return EXIT_OK


def cmd_dot(args: argparse.Namespace) -> int:
    system = _load_system(args.system)
    if isinstance(system, GroupSystem):
        raise CliInputError(
            "graph export requires a groupoid-extension system; use 'table --cayley' for groups"
        )
    ext = system.extension
    lines = ["digraph formal_inversions {"]
    for obj in ext.objects:
        lines.append(f'  "{obj}";')
    for dom in ext.objects:
        for cod in ext.objects:
            if dom == cod:
                continue
            m = ext.multiplier(dom, cod)
            lines.append(f'  "{dom}" -> "{cod}" [label="h_{dom},{cod} phi: z -> z^{m}"];')
    lines.append("}")
    print("\n".join(lines))
    return EXIT_OK


# ---- entry point ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordalg",
        description="Verify and apply group/groupoid chord transformation systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("system", help="system definition file")
        p.add_argument("--format", choices=("plain", "tsv"), default="plain")

    p = sub.add_parser("verify", help="check all algebraic axioms of a system")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", help="label consecutive chord pairs of a progression")
    add_common(p)
    p.add_argument("sequence", help="chord sequence file")
    p.add_argument("--left", action="store_true", help="left (T/I) labels only")
    p.add_argument("--right", action="store_true", help="right (PLR) labels only")
    p.add_argument("--groupoid", action="store_true", help="groupoid morphism labels")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="list generalized inversions between two types")
    add_common(p)
    p.add_argument("type1")
    p.add_argument("type2")
    p.add_argument("--min-common-tones", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", help="print a composition or action table")
    add_common(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--cayley", action="store_true")
    group.add_argument("--action", choices=("left", "right"))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("dot", help="export the formal-inversion graph as DOT")
    add_common(p)
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CliDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
