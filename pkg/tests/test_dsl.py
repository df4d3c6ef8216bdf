import random

import pytest

from chordalg.dsl import (
    GROUP_MODE,
    GROUPOID_MODE,
    DslSemanticError,
    DslSyntaxError,
    parse_sequence,
    parse_system,
    serialize_sequence,
    serialize_system,
)
from chordalg.pcs import ChordLabel, PitchClass

from specgen import make_random_spec
from conftest import BUNDLED, FIXDIR

MINIMAL = """\
system
  modulus = 12
  mode = group-extension
  h = cyclic:1

type M
  intervals = 0,4,7

phi
  kind = trivial

zeta
  kind = trivial

chi
  root_anchor = 0
  type_order = M
"""


class TestParsing:
    def test_minimal_system(self):
        spec = parse_system(MINIMAL)
        assert spec.modulus == 12
        assert spec.mode == GROUP_MODE
        assert spec.types == (("M", (0, 4, 7)),)
        assert spec.h_kind == "cyclic" and spec.h_data == ((1,),)
        assert spec.chi.type_order == ("M",)

    def test_comments_and_blank_lines_ignored(self):
        noisy = "# leading comment\n\n" + MINIMAL.replace(
            "modulus = 12", "modulus = 12   # twelve"
        )
        assert parse_system(noisy) == parse_system(MINIMAL)

    def test_crlf_accepted(self):
        assert parse_system(MINIMAL.replace("\n", "\r\n")) == parse_system(MINIMAL)

    def test_bundled_fixtures_parse(self):
        d24 = parse_system((BUNDLED / "d24.system").read_text())
        assert d24.mode == GROUP_MODE and d24.phi.kind == "inverse"
        mab = parse_system((BUNDLED / "malphabeta.system").read_text())
        assert mab.mode == GROUPOID_MODE and mab.h_kind == "complete"
        assert mab.type_names == ("M", "alpha", "beta")


class TestDiagnostics:
    def assert_pos(self, exc_info, line, column=None):
        err = exc_info.value
        assert err.line == line
        if column is not None:
            assert err.column == column

    def test_unknown_block(self):
        with pytest.raises(DslSyntaxError) as ei:
            parse_system("bogus\n")
        self.assert_pos(ei, 1, 1)

    def test_declaration_outside_block(self):
        with pytest.raises(DslSyntaxError) as ei:
            parse_system("modulus = 12\n")
        self.assert_pos(ei, 1, 1)

    def test_bad_modulus_position(self):
        text = MINIMAL.replace("modulus = 12", "modulus = twelve")
        with pytest.raises(DslSyntaxError) as ei:
            parse_system(text)
        self.assert_pos(ei, 2)
        assert "twelve" in ei.value.message

    def test_unknown_mode(self):
        text = MINIMAL.replace("group-extension", "ring-extension")
        with pytest.raises(DslSemanticError) as ei:
            parse_system(text)
        self.assert_pos(ei, 3)

    def test_duplicate_type(self):
        text = MINIMAL.replace("type M", "type M\n  intervals = 0\n\ntype M", 1)
        with pytest.raises(DslSemanticError):
            parse_system(text)

    def test_type_without_intervals(self):
        text = MINIMAL.replace("  intervals = 0,4,7\n", "")
        with pytest.raises(DslSemanticError) as ei:
            parse_system(text)
        self.assert_pos(ei, 6)

    def test_bad_intervals(self):
        text = MINIMAL.replace("0,4,7", "0,7,4")
        with pytest.raises(DslSemanticError) as ei:
            parse_system(text)
        self.assert_pos(ei, 7)

    def test_type_order_length_mismatch(self):
        text = MINIMAL.replace("cyclic:1", "cyclic:2")
        with pytest.raises(DslSemanticError):
            parse_system(text)

    def test_type_order_unknown_type(self):
        text = MINIMAL.replace("type_order = M", "type_order = m")
        with pytest.raises(DslSemanticError) as ei:
            parse_system(text)
        assert "'m'" in ei.value.message

    def test_groupoid_key_in_group_mode(self):
        text = MINIMAL.replace("type_order = M", "type_order = M\n  anchor = M")
        with pytest.raises(DslSemanticError):
            parse_system(text)

    def test_phi_map_out_of_range(self):
        text = MINIMAL.replace(
            "  kind = trivial\n\nzeta",
            "  kind = explicit\n  map 3 = " + ",".join(map(str, range(12))) + "\n\nzeta",
            1,
        )
        with pytest.raises(DslSemanticError) as ei:
            parse_system(text)
        assert "out of range" in ei.value.message

    def test_phi_map_not_permutation(self):
        text = MINIMAL.replace(
            "  kind = trivial\n\nzeta",
            "  kind = explicit\n  map 0 = 0,0,1,2,3,4,5,6,7,8,9,10\n\nzeta",
            1,
        )
        with pytest.raises(DslSemanticError):
            parse_system(text)

    def test_tables_require_explicit_kind(self):
        text = MINIMAL.replace(
            "phi\n  kind = trivial",
            "phi\n  kind = trivial\n  map 0 = " + ",".join(map(str, range(12))),
        )
        with pytest.raises(DslSemanticError):
            parse_system(text)

    def test_complete_h_requires_groupoid_mode(self):
        text = MINIMAL.replace("cyclic:1", "complete")
        with pytest.raises(DslSemanticError):
            parse_system(text)

    def test_errors_mention_positions_in_str(self):
        with pytest.raises(DslSyntaxError) as ei:
            parse_system("bogus\n")
        assert "line 1" in str(ei.value) and "column 1" in str(ei.value)


class TestSerialization:
    def test_golden_minimal(self):
        assert serialize_system(parse_system(MINIMAL)) == MINIMAL

    def test_bundled_fixtures_roundtrip(self):
        for name in ("d24.system", "malphabeta.system"):
            text = (BUNDLED / name).read_text()
            spec = parse_system(text)
            assert parse_system(serialize_system(spec)) == spec

    def test_mutation_fixtures_roundtrip(self):
        for path in sorted(FIXDIR.glob("*.system")):
            spec = parse_system(path.read_text())
            assert parse_system(serialize_system(spec)) == spec

    def test_serializer_is_canonical(self):
        spec = parse_system(MINIMAL)
        text = serialize_system(spec)
        assert text == serialize_system(parse_system(text))
        assert "\r" not in text and text.endswith("\n")

    def test_random_specs_roundtrip(self):
        rng = random.Random(20260826)
        for _ in range(300):
            spec = make_random_spec(rng)
            assert parse_system(serialize_system(spec)) == spec


class TestSequences:
    def test_parse_and_serialize(self):
        spec = parse_system(MINIMAL)
        seq = parse_sequence("0_M, 4_M 11_M  # cadence", spec)
        assert [c.root.value for c in seq.labels] == [0, 4, 11]
        assert serialize_sequence(seq) == "0_M 4_M 11_M\n"

    def test_bad_token_position(self):
        spec = parse_system(MINIMAL)
        with pytest.raises(DslSyntaxError) as ei:
            parse_sequence("0_M C#m", spec)
        assert (ei.value.line, ei.value.column) == (1, 5)

    def test_unknown_type(self):
        spec = parse_system(MINIMAL)
        with pytest.raises(DslSemanticError):
            parse_sequence("0_m", spec)

    def test_root_out_of_range(self):
        spec = parse_system(MINIMAL)
        with pytest.raises(DslSemanticError):
            parse_sequence("12_M", spec)

    def test_multiline_positions(self):
        spec = parse_system(MINIMAL)
        with pytest.raises(DslSyntaxError) as ei:
            parse_sequence("0_M\n 4_M oops\n", spec)
        assert (ei.value.line, ei.value.column) == (2, 6)
