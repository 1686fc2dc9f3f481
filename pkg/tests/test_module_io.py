"""Tests for the strict JSON interchange format for module windows."""

import copy
import json
from fractions import Fraction

import pytest

from ficalc.fimod import (
    ModuleFormatError,
    free_module,
    load_module,
    module_from_json,
    module_to_json,
    representable,
    save_module,
    validate,
)


@pytest.fixture
def doc():
    return module_to_json(representable(2, 5))


def test_roundtrip_preserves_module(tmp_path):
    for module in (representable(2, 5), free_module((1, 1), 5)):
        path = tmp_path / "mod.json"
        save_module(module, path)
        loaded = load_module(path)
        assert loaded.name == module.name
        assert loaded.dims == module.dims
        assert loaded.generation_bound == module.generation_bound
        assert validate(loaded).valid
        for k in range(module.max_degree + 1):
            for a, b in zip(module.transpositions[k], loaded.transpositions[k]):
                assert a.columns == b.columns
        for a, b in zip(module.inclusions, loaded.inclusions):
            assert a.columns == b.columns


def test_rewrite_is_byte_identical(tmp_path):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    module = free_module((2,), 4)
    save_module(module, first)
    save_module(load_module(first), second)
    assert first.read_bytes() == second.read_bytes()


def test_document_layout(doc):
    assert set(doc) == {
        "name",
        "max_degree",
        "generation_bound",
        "dims",
        "transpositions",
        "inclusions",
    }
    assert set(doc["transpositions"]) == {"2", "3", "4", "5"}
    assert len(doc["transpositions"]["4"]) == 3  # k-1 generators in degree k
    assert len(doc["inclusions"]) == 5
    matrix = doc["inclusions"][2]
    assert set(matrix) == {"rows", "cols", "entries"}
    assert len(matrix["entries"]) == matrix["rows"] * matrix["cols"]


def _rejects(document, mutate):
    bad = copy.deepcopy(document)
    mutate(bad)
    with pytest.raises(ModuleFormatError):
        module_from_json(bad)


def test_rejects_unknown_top_level_field(doc):
    _rejects(doc, lambda d: d.__setitem__("extra", 1))


def test_rejects_missing_field(doc):
    _rejects(doc, lambda d: d.pop("dims"))


def test_rejects_boolean_masquerading_as_int(doc):
    _rejects(doc, lambda d: d.__setitem__("max_degree", True))


def test_rejects_generation_bound_outside_window(doc):
    _rejects(doc, lambda d: d.__setitem__("generation_bound", 9))


def test_rejects_wrong_dims_length(doc):
    _rejects(doc, lambda d: d["dims"].append(3))


def test_rejects_missing_transposition_block(doc):
    _rejects(doc, lambda d: d["transpositions"].pop("2"))


def test_rejects_stray_degree_one_block(doc):
    _rejects(doc, lambda d: d["transpositions"].__setitem__("1", []))


def test_rejects_unknown_matrix_field(doc):
    _rejects(doc, lambda d: d["transpositions"]["3"][0].__setitem__("note", "x"))


def test_rejects_denominator_one_written_as_fraction(doc):
    _rejects(doc, lambda d: d["transpositions"]["3"][0]["entries"].__setitem__(0, "1/1"))


def test_rejects_fraction_not_in_lowest_terms(doc):
    _rejects(doc, lambda d: d["transpositions"]["3"][0]["entries"].__setitem__(0, "2/4"))


def test_rejects_zero_denominator(doc):
    _rejects(doc, lambda d: d["transpositions"]["3"][0]["entries"].__setitem__(0, "1/0"))


def test_rejects_boolean_entry(doc):
    _rejects(doc, lambda d: d["transpositions"]["3"][0]["entries"].__setitem__(0, True))


def test_rejects_float_entry(doc):
    _rejects(doc, lambda d: d["transpositions"]["3"][0]["entries"].__setitem__(0, 1.5))


def test_rejects_wrong_entry_count(doc):
    _rejects(doc, lambda d: d["transpositions"]["3"][0]["entries"].pop())


def test_rejects_inclusion_shape_mismatch(doc):
    _rejects(doc, lambda d: d["inclusions"][0].__setitem__("rows", 7))


def test_fraction_entries_parse_and_roundtrip(doc, tmp_path):
    doc["inclusions"][2]["entries"][0] = "1/2"
    module = module_from_json(doc)
    assert module.inclusions[2].columns[0][0] == Fraction(1, 2)
    path = tmp_path / "frac.json"
    path.write_text(json.dumps(doc))
    reloaded = load_module(path)
    assert reloaded.inclusions[2].columns[0][0] == Fraction(1, 2)
    save_module(reloaded, path)
    assert json.loads(path.read_text())["inclusions"][2]["entries"][0] == "1/2"


def test_missing_file_raises_oserror(tmp_path):
    with pytest.raises(OSError):
        load_module(tmp_path / "missing.json")


def test_garbage_json_raises_format_error(tmp_path):
    path = tmp_path / "garbage.json"
    path.write_text("{not json")
    with pytest.raises(ModuleFormatError):
        load_module(path)
