"""Line-oriented text format for transformation systems and chord sequences.

A system file is a sequence of named blocks (`system`, `type <name>`, `phi`,
`zeta`, `chi`), each holding one `key = value` declaration per line. `#`
starts a comment; blank lines separate nothing in particular. The canonical
serializer emits LF and two-space indentation; `parse_system(serialize(s))`
returns a structurally equal spec.

Chord sequences are whitespace- or comma-separated `<root>_<type>` tokens.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .pcs import ChordLabel, PcSetType, PitchClass

GROUP_MODE = "group-extension"
GROUPOID_MODE = "groupoid-extension"


class DslError(ValueError):
    """Diagnostic with 1-based line and column."""

    category = "error"

    def __init__(self, line: int, column: int, message: str) -> None:
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"{self.category} at line {line}, column {column}: {message}")


class DslSyntaxError(DslError):
    category = "syntax error"


class DslSemanticError(DslError):
    category = "semantic error"


@dataclass(frozen=True)
class PhiSpec:
    kind: str = "trivial"  # trivial | inverse | explicit
    negate: Tuple[str, ...] = ()  # groupoid inverse: objects with flipped sign
    maps: Tuple[Tuple[int, Tuple[int, ...]], ...] = ()  # group explicit: (h, perm)
    mults: Tuple[Tuple[str, str, int], ...] = ()  # groupoid explicit: (dom, cod, mult)


@dataclass(frozen=True)
class ZetaSpec:
    kind: str = "trivial"  # trivial | explicit
    values: Tuple[Tuple[int, int, int], ...] = ()  # group: (h1, h2, z)
    entries: Tuple[Tuple[str, str, str, int], ...] = ()  # groupoid: (x, y, z, exp)


@dataclass(frozen=True)
class ChiSpec:
    root_anchor: int = 0
    type_order: Tuple[str, ...] = ()  # group mode: type per H element
    anchor: str = ""  # groupoid mode
    variance: str = ""  # groupoid mode: covariant | contravariant


@dataclass(frozen=True)
class SystemSpec:
    modulus: int
    mode: str
    types: Tuple[Tuple[str, Tuple[int, ...]], ...]
    h_kind: str  # cyclic | table | complete
    h_data: Tuple[Tuple[int, ...], ...] = ()  # cyclic: ((n,),); table: rows
    phi: PhiSpec = PhiSpec()
    zeta: ZetaSpec = ZetaSpec()
    chi: ChiSpec = ChiSpec()

    @property
    def type_names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.types)

    def type_registry(self) -> Dict[str, PcSetType]:
        return {
            name: PcSetType(name, intervals, self.modulus)
            for name, intervals in self.types
        }


@dataclass(frozen=True)
class ChordSequence:
    labels: Tuple[ChordLabel, ...]


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


def _split_lines(text: str) -> List[str]:
    return text.replace("\r\n", "\n").replace("\r", "\n").split("\n")


def _int(raw: str, lineno: int, col: int, what: str) -> int:
    try:
        return int(raw.strip())
    except ValueError:
        raise DslSyntaxError(lineno, col, f"expected an integer {what}, got {raw.strip()!r}")


def _int_list(raw: str, lineno: int, col: int, what: str) -> Tuple[int, ...]:
    parts = [p.strip() for p in raw.split(",")]
    if parts == [""]:
        raise DslSyntaxError(lineno, col, f"expected a comma-separated list {what}")
    return tuple(_int(p, lineno, col, what) for p in parts)


class _Parser:
    """Single pass over the lines, collecting declarations with positions."""

    def __init__(self, text: str) -> None:
        self.lines = _split_lines(text)
        self.block: Optional[str] = None
        self.block_arg: Optional[str] = None
        # collected state: value plus (line, col) of its declaration
        self.system: Dict[str, Tuple[str, int, int]] = {}
        self.types: List[Tuple[str, Tuple[int, ...], int, int]] = []
        self.phi: List[Tuple[str, str, int, int]] = []
        self.zeta: List[Tuple[str, str, int, int]] = []
        self.chi: Dict[str, Tuple[str, int, int]] = {}
        self._cur_type: Optional[str] = None
        self._cur_type_line = 0
        self._type_intervals: Dict[str, Tuple[Tuple[int, ...], int, int]] = {}

    def run(self) -> SystemSpec:
        for i, raw in enumerate(self.lines, start=1):
            line = raw.split("#", 1)[0].rstrip()
            if not line.strip():
                continue
            stripped = line.strip()
            col = line.index(stripped[0]) + 1
            if "=" in stripped:
                self._declaration(stripped, i, col)
            else:
                self._header(stripped, i, col)
        return self._finish()

    def _header(self, stripped: str, lineno: int, col: int) -> None:
        parts = stripped.split()
        if parts[0] == "type":
            if len(parts) != 2:
                raise DslSyntaxError(lineno, col, "expected 'type <name>'")
            name = parts[1]
            if not _NAME_RE.match(name):
                raise DslSyntaxError(lineno, col + 5, f"invalid type name {name!r}")
            if name in self._type_intervals or name == self._cur_type:
                raise DslSemanticError(lineno, col + 5, f"duplicate type {name!r}")
            self._close_type(lineno)
            self.block, self._cur_type, self._cur_type_line = "type", name, lineno
            return
        if parts[0] in ("system", "phi", "zeta", "chi"):
            if len(parts) != 1:
                raise DslSyntaxError(lineno, col, f"block '{parts[0]}' takes no argument")
            self._close_type(lineno)
            self.block = parts[0]
            return
        raise DslSyntaxError(
            lineno, col, f"expected a block header (system, type, phi, zeta, chi), got {parts[0]!r}"
        )

    def _close_type(self, lineno: int) -> None:
        if self.block == "type":
            assert self._cur_type is not None
            if self._cur_type not in self._type_intervals:
                raise DslSemanticError(
                    self._cur_type_line, 1, f"type {self._cur_type!r} declares no intervals"
                )
        self._cur_type = None

    def _declaration(self, stripped: str, lineno: int, col: int) -> None:
        if self.block is None:
            raise DslSyntaxError(lineno, col, "declaration outside any block")
        key, _, value = stripped.partition("=")
        key = key.strip()
        value = value.strip()
        vcol = col + stripped.index("=") + 1
        if not key:
            raise DslSyntaxError(lineno, col, "missing key before '='")
        if self.block == "system":
            if key not in ("modulus", "mode", "h"):
                raise DslSyntaxError(lineno, col, f"unknown system key {key!r}")
            self.system[key] = (value, lineno, vcol)
        elif self.block == "type":
            if key != "intervals":
                raise DslSyntaxError(lineno, col, f"unknown type key {key!r}")
            ivs = _int_list(value, lineno, vcol, "of intervals")
            assert self._cur_type is not None
            self._type_intervals[self._cur_type] = (ivs, lineno, vcol)
            self.types.append((self._cur_type, ivs, lineno, vcol))
        elif self.block == "phi":
            self.phi.append((key, value, lineno, vcol))
        elif self.block == "zeta":
            self.zeta.append((key, value, lineno, vcol))
        elif self.block == "chi":
            if key not in ("root_anchor", "type_order", "anchor", "variance"):
                raise DslSyntaxError(lineno, col, f"unknown chi key {key!r}")
            self.chi[key] = (value, lineno, vcol)

    # ---- final assembly and semantic validation ----

    def _finish(self) -> SystemSpec:
        self._close_type(len(self.lines))
        if not self.system:
            raise DslSyntaxError(1, 1, "missing system block")
        if "modulus" not in self.system:
            raise DslSemanticError(1, 1, "system block declares no modulus")
        if "mode" not in self.system:
            raise DslSemanticError(1, 1, "system block declares no mode")
        mod_raw, mline, mcol = self.system["modulus"]
        modulus = _int(mod_raw, mline, mcol, "modulus")
        if modulus <= 0:
            raise DslSemanticError(mline, mcol, f"modulus must be positive, got {modulus}")
        mode, oline, ocol = self.system["mode"]
        if mode not in (GROUP_MODE, GROUPOID_MODE):
            raise DslSemanticError(oline, ocol, f"unknown mode {mode!r}")

        types: List[Tuple[str, Tuple[int, ...]]] = []
        for name, ivs, lineno, vcol in self.types:
            try:
                PcSetType(name, ivs, modulus)
            except ValueError as exc:
                raise DslSemanticError(lineno, vcol, str(exc))
            types.append((name, ivs))
        if not types:
            raise DslSemanticError(1, 1, "no types declared")
        type_names = [n for n, _ in types]

        h_kind, h_data = self._build_h(mode, modulus)
        phi = self._build_phi(mode, modulus, type_names, h_kind, h_data)
        zeta = self._build_zeta(mode, modulus, type_names, h_kind, h_data)
        chi = self._build_chi(mode, modulus, type_names, h_kind, h_data)
        return SystemSpec(modulus, mode, tuple(types), h_kind, h_data, phi, zeta, chi)

    def _h_order(self, h_kind: str, h_data: Tuple[Tuple[int, ...], ...]) -> int:
        if h_kind == "cyclic":
            return h_data[0][0]
        if h_kind == "table":
            return len(h_data)
        return 0

    def _build_h(self, mode: str, modulus: int) -> Tuple[str, Tuple[Tuple[int, ...], ...]]:
        if "h" not in self.system:
            raise DslSemanticError(1, 1, "system block declares no h")
        raw, lineno, col = self.system["h"]
        if raw == "complete":
            if mode != GROUPOID_MODE:
                raise DslSemanticError(lineno, col, "'h = complete' requires groupoid-extension mode")
            return "complete", ()
        if raw.startswith("cyclic:"):
            if mode != GROUP_MODE:
                raise DslSemanticError(lineno, col, "a group-valued h requires group-extension mode")
            n = _int(raw[len("cyclic:"):], lineno, col, "cyclic order")
            if n <= 0:
                raise DslSemanticError(lineno, col, f"cyclic order must be positive, got {n}")
            return "cyclic", ((n,),)
        if raw.startswith("table:"):
            if mode != GROUP_MODE:
                raise DslSemanticError(lineno, col, "a group-valued h requires group-extension mode")
            rows = tuple(
                _int_list(r, lineno, col, "of table entries")
                for r in raw[len("table:"):].split(";")
            )
            n = len(rows)
            for row in rows:
                if len(row) != n or any(not 0 <= x < n for x in row):
                    raise DslSemanticError(lineno, col, f"h table is not {n}x{n} over 0..{n - 1}")
            return "table", rows
        raise DslSyntaxError(lineno, col, f"expected 'cyclic:<n>', 'table:<rows>' or 'complete', got {raw!r}")

    def _build_phi(self, mode, modulus, type_names, h_kind, h_data) -> PhiSpec:
        kind = "trivial"
        negate: List[str] = []
        maps: List[Tuple[int, Tuple[int, ...]]] = []
        mults: List[Tuple[str, str, int]] = []
        for key, value, lineno, vcol in self.phi:
            if key == "kind":
                if value not in ("trivial", "inverse", "explicit"):
                    raise DslSemanticError(lineno, vcol, f"unknown phi kind {value!r}")
                kind = value
            elif key == "negate":
                for name in (v.strip() for v in value.split(",")):
                    if name not in type_names:
                        raise DslSemanticError(lineno, vcol, f"negate names unknown type {name!r}")
                    negate.append(name)
            elif key.startswith("map "):
                h = _int(key[4:], lineno, vcol, "H element index")
                order = self._h_order(h_kind, h_data)
                if not 0 <= h < order:
                    raise DslSemanticError(lineno, vcol, f"map index {h} out of range for |H| = {order}")
                perm = _int_list(value, lineno, vcol, "of Z indices")
                if sorted(perm) != list(range(modulus)):
                    raise DslSemanticError(
                        lineno, vcol, f"map {h} is not a permutation of 0..{modulus - 1}"
                    )
                maps.append((h, perm))
            elif key.startswith("mult "):
                pair = [p.strip() for p in key[5:].split(",")]
                if len(pair) != 2 or not all(p in type_names for p in pair):
                    raise DslSemanticError(lineno, vcol, f"mult key must name two declared types, got {key!r}")
                mults.append((pair[0], pair[1], _int(value, lineno, vcol, "multiplier") % modulus))
            else:
                raise DslSyntaxError(lineno, vcol, f"unknown phi key {key!r}")
        if kind != "explicit" and (maps or mults):
            raise DslSemanticError(1, 1, "phi tables given but kind is not 'explicit'")
        if mode == GROUP_MODE and (negate or mults):
            raise DslSemanticError(1, 1, "negate/mult entries are groupoid-mode phi declarations")
        if mode == GROUPOID_MODE and maps:
            raise DslSemanticError(1, 1, "'map' entries are group-mode phi declarations")
        return PhiSpec(kind, tuple(negate), tuple(maps), tuple(mults))

    def _build_zeta(self, mode, modulus, type_names, h_kind, h_data) -> ZetaSpec:
        kind = "trivial"
        values: List[Tuple[int, int, int]] = []
        entries: List[Tuple[str, str, str, int]] = []
        for key, value, lineno, vcol in self.zeta:
            if key == "kind":
                if value not in ("trivial", "explicit"):
                    raise DslSemanticError(lineno, vcol, f"unknown zeta kind {value!r}")
                kind = value
            elif key.startswith("value "):
                parts = [p.strip() for p in key[6:].split(",")]
                if mode == GROUP_MODE:
                    if len(parts) != 2:
                        raise DslSemanticError(lineno, vcol, "group-mode zeta keys are 'value <h1>,<h2>'")
                    h1 = _int(parts[0], lineno, vcol, "H index")
                    h2 = _int(parts[1], lineno, vcol, "H index")
                    order = self._h_order(h_kind, h_data)
                    if not (0 <= h1 < order and 0 <= h2 < order):
                        raise DslSemanticError(lineno, vcol, f"zeta indices out of range for |H| = {order}")
                    z = _int(value, lineno, vcol, "Z index")
                    if not 0 <= z < modulus:
                        raise DslSemanticError(lineno, vcol, f"zeta value {z} out of range for modulus {modulus}")
                    values.append((h1, h2, z))
                else:
                    if len(parts) != 3 or not all(p in type_names for p in parts):
                        raise DslSemanticError(
                            lineno, vcol, "groupoid-mode zeta keys are 'value <X>,<Y>,<Z>' over declared types"
                        )
                    exp = _int(value, lineno, vcol, "exponent")
                    entries.append((parts[0], parts[1], parts[2], exp % modulus))
            else:
                raise DslSyntaxError(lineno, vcol, f"unknown zeta key {key!r}")
        if kind != "explicit" and (values or entries):
            raise DslSemanticError(1, 1, "zeta values given but kind is not 'explicit'")
        return ZetaSpec(kind, tuple(values), tuple(entries))

    def _build_chi(self, mode, modulus, type_names, h_kind, h_data) -> ChiSpec:
        root_anchor = 0
        if "root_anchor" in self.chi:
            raw, lineno, vcol = self.chi["root_anchor"]
            root_anchor = _int(raw, lineno, vcol, "root anchor")
            if not 0 <= root_anchor < modulus:
                raise DslSemanticError(lineno, vcol, f"root anchor {root_anchor} out of range")
        if mode == GROUP_MODE:
            if "type_order" not in self.chi:
                raise DslSemanticError(1, 1, "chi block declares no type_order")
            raw, lineno, vcol = self.chi["type_order"]
            order = tuple(v.strip() for v in raw.split(","))
            for name in order:
                if name not in type_names:
                    raise DslSemanticError(lineno, vcol, f"type_order names unknown type {name!r}")
            if len(set(order)) != len(order):
                raise DslSemanticError(lineno, vcol, "type_order repeats a type")
            if len(order) != self._h_order(h_kind, h_data):
                raise DslSemanticError(
                    lineno, vcol,
                    f"type_order has {len(order)} entries for |H| = {self._h_order(h_kind, h_data)}",
                )
            for key in ("anchor", "variance"):
                if key in self.chi:
                    raise DslSemanticError(self.chi[key][1], self.chi[key][2],
                                           f"{key!r} is a groupoid-mode chi key")
            return ChiSpec(root_anchor=root_anchor, type_order=order)
        # groupoid mode
        if "anchor" not in self.chi:
            raise DslSemanticError(1, 1, "chi block declares no anchor")
        raw, lineno, vcol = self.chi["anchor"]
        if raw not in type_names:
            raise DslSemanticError(lineno, vcol, f"anchor names unknown type {raw!r}")
        variance = "covariant"
        if "variance" in self.chi:
            vraw, vline, vvcol = self.chi["variance"]
            if vraw not in ("covariant", "contravariant"):
                raise DslSemanticError(vline, vvcol, f"unknown variance {vraw!r}")
            variance = vraw
        if "type_order" in self.chi:
            raise DslSemanticError(self.chi["type_order"][1], self.chi["type_order"][2],
                                   "'type_order' is a group-mode chi key")
        return ChiSpec(root_anchor=root_anchor, anchor=raw, variance=variance)


def parse_system(text: str) -> SystemSpec:
    """Parse and semantically validate a system file."""
    return _Parser(text).run()


def serialize_system(spec: SystemSpec) -> str:
    """Canonical text for a system spec (LF, two-space indent)."""
    out: List[str] = ["system", f"  modulus = {spec.modulus}", f"  mode = {spec.mode}"]
    if spec.h_kind == "cyclic":
        out.append(f"  h = cyclic:{spec.h_data[0][0]}")
    elif spec.h_kind == "table":
        out.append("  h = table:" + ";".join(",".join(map(str, row)) for row in spec.h_data))
    else:
        out.append("  h = complete")
    for name, intervals in spec.types:
        out.append("")
        out.append(f"type {name}")
        out.append("  intervals = " + ",".join(map(str, intervals)))
    out.append("")
    out.append("phi")
    out.append(f"  kind = {spec.phi.kind}")
    if spec.phi.negate:
        out.append("  negate = " + ",".join(spec.phi.negate))
    for h, perm in spec.phi.maps:
        out.append(f"  map {h} = " + ",".join(map(str, perm)))
    for dom, cod, mult in spec.phi.mults:
        out.append(f"  mult {dom},{cod} = {mult}")
    out.append("")
    out.append("zeta")
    out.append(f"  kind = {spec.zeta.kind}")
    for h1, h2, z in spec.zeta.values:
        out.append(f"  value {h1},{h2} = {z}")
    for x, y, z, exp in spec.zeta.entries:
        out.append(f"  value {x},{y},{z} = {exp}")
    out.append("")
    out.append("chi")
    out.append(f"  root_anchor = {spec.chi.root_anchor}")
    if spec.mode == GROUP_MODE:
        out.append("  type_order = " + ",".join(spec.chi.type_order))
    else:
        out.append(f"  anchor = {spec.chi.anchor}")
        out.append(f"  variance = {spec.chi.variance}")
    return "\n".join(out) + "\n"


_TOKEN_RE = re.compile(r"^(\d+)_([A-Za-z_][A-Za-z0-9_]*)$")


def parse_sequence(text: str, spec: SystemSpec) -> ChordSequence:
    """Parse `<root>_<type>` chord tokens against a system's type registry."""
    registry = spec.type_registry()
    labels: List[ChordLabel] = []
    for lineno, raw in enumerate(_split_lines(text), start=1):
        line = raw.split("#", 1)[0]
        pos = 0
        for token in re.finditer(r"[^\s,]+", line):
            word = token.group(0)
            col = token.start() + 1
            m = _TOKEN_RE.match(word)
            if not m:
                raise DslSyntaxError(lineno, col, f"expected '<root>_<type>', got {word!r}")
            root, tname = int(m.group(1)), m.group(2)
            if tname not in registry:
                raise DslSemanticError(lineno, col, f"unknown type {tname!r}")
            if not 0 <= root < spec.modulus:
                raise DslSemanticError(
                    lineno, col, f"root {root} out of range for modulus {spec.modulus}"
                )
            labels.append(ChordLabel(PitchClass(root, spec.modulus), registry[tname]))
    return ChordSequence(tuple(labels))


def serialize_sequence(seq: ChordSequence) -> str:
    return " ".join(str(label) for label in seq.labels) + "\n"
