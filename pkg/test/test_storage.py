"""
Test Suite for Structure Files
==============================
"""

import json

import numpy as np
import pytest

from app.core.bracoids import SkewBrace, SkewLeftBracoid, SkewRightBracoid
from app.core.errors import StructureFormatError
from app.core.examples import trivial_brace
from app.core.groups import cyclic, parse_descriptor
from app.core.two_sided import TwoSidedSkewBracoid
from app.storage import (
    dump_structure,
    load_group,
    load_structure,
    parse_structure,
    store_structure,
    structure_from_dict,
)


def _example_dict(example_333):
    return json.loads(dump_structure(example_333))


def test_round_trip_is_byte_identical(tmp_path, example_333):
    """Test #1: store(load(store(x))) reproduces the file exactly"""
    first = tmp_path / "first.json"
    second = tmp_path / "second.json"
    store_structure(example_333, first)
    loaded = load_structure(first)
    store_structure(loaded, second)
    assert first.read_bytes() == second.read_bytes()
    assert isinstance(loaded, TwoSidedSkewBracoid)
    assert loaded.N == example_333.N
    assert np.array_equal(loaded.left.action.table, example_333.left.action.table)


def test_file_is_compact_json_with_newline(example_file):
    text = example_file.read_text(encoding="utf-8")
    assert text.endswith("}\n")
    assert text.count("\n") == 1
    assert "μ" in text


def test_each_kind_is_recognised(example_333, c4):
    assert isinstance(parse_structure(dump_structure(example_333.left)), SkewLeftBracoid)
    assert isinstance(parse_structure(dump_structure(example_333.right)), SkewRightBracoid)
    assert isinstance(parse_structure(dump_structure(trivial_brace(c4))), SkewBrace)


def test_trivial_group_round_trip(tmp_path):
    path = tmp_path / "c1.json"
    store_structure(cyclic(1), path)
    G = load_group(path)
    assert G.order == 1
    assert G == cyclic(1)
    assert dump_structure(G) == path.read_text(encoding="utf-8")


def test_group_descriptor_from_file(tmp_path, d3):
    path = tmp_path / "d3.json"
    store_structure(d3, path)
    assert parse_descriptor(f"@{path}") == d3
    assert parse_descriptor(f"@{path} x C2").order == 12


def test_out_of_range_entry_names_the_coordinate(example_333):
    raw = _example_dict(example_333)
    raw["left_action"][2][4] = 99
    with pytest.raises(StructureFormatError) as info:
        structure_from_dict(raw)
    assert "[2][4]" in str(info.value)
    assert str(info.value).startswith("left_action")


def test_broken_axioms_still_load(example_333):
    """Action tables are shape-checked only; the verifier reports the rest."""
    raw = _example_dict(example_333)
    raw["left_action"][1][0] = 2
    loaded = structure_from_dict(raw)
    assert loaded.left.action.table[1][0] == 2


def test_malformed_json():
    with pytest.raises(StructureFormatError) as info:
        parse_structure('{"G": ')
    assert "line 1" in str(info.value)


def test_missing_file(tmp_path):
    with pytest.raises(StructureFormatError):
        load_structure(tmp_path / "absent.json")


@pytest.mark.parametrize("raw", [
    {"something": 1},
    [],
    {"star_group": {"name": "C1", "order": 1, "elements": ["e"], "table": [[0]]}},
])
def test_unknown_shapes(raw):
    with pytest.raises(StructureFormatError):
        structure_from_dict(raw)


def test_schema_error_names_the_location(example_333):
    raw = _example_dict(example_333)
    raw["N"]["table"] = "not a table"
    with pytest.raises(StructureFormatError) as info:
        structure_from_dict(raw)
    assert info.value.witness[0].startswith("N.table")


def test_order_mismatch(example_333):
    raw = _example_dict(example_333)
    raw["G"]["order"] = 11
    with pytest.raises(StructureFormatError) as info:
        structure_from_dict(raw)
    assert "G.order" in str(info.value)


def test_group_axioms_are_enforced_on_load(example_333):
    raw = _example_dict(example_333)
    raw["N"]["table"][0][0] = 1
    with pytest.raises(StructureFormatError) as info:
        structure_from_dict(raw)
    assert str(info.value).startswith("N:")


def test_brace_carriers_must_match(c4):
    raw = json.loads(dump_structure(trivial_brace(c4)))
    raw["dot_group"]["elements"] = ["a", "b", "c", "d"]
    with pytest.raises(StructureFormatError):
        structure_from_dict(raw)
