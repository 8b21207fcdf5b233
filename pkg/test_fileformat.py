"""Algebra file parsing, canonical emission and reduction mod p."""

import json

import pytest

from app.classify import FamilySpec, build
from app.errors import LeibnizIdentityError, NotReducibleError, ParseError
from app.linalg import FieldSpec
from app.services.algebra_io import emit_algebra, load_algebra, parse_algebra, reduce_mod

GF5 = FieldSpec.prime(5)

FAMILY1A_CANONICAL = """{
  "field": "Q",
  "dim": 3,
  "basis": [
    "x",
    "y",
    "z"
  ],
  "products": {
    "x*y": {
      "y": "1",
      "z": "1"
    },
    "x*z": {
      "z": "1"
    }
  }
}
"""


def test_canonical_emission(family1a):
    assert emit_algebra(family1a) == FAMILY1A_CANONICAL


def test_emission_is_a_fixed_point(family1a):
    text = emit_algebra(build(FamilySpec.of("Family1a", c="-1/2")))
    assert emit_algebra(parse_algebra(text)) == text
    assert parse_algebra(FAMILY1A_CANONICAL) == family1a


def test_emission_normalizes_the_input():
    messy = json.dumps(
        {
            "dim": 2,
            "basis": ["x", "n"],
            "products": {"x*n": {"n": "2/2"}, "x*x": {"n": 1, "x": "0"}},
        }
    )
    text = emit_algebra(parse_algebra(messy))
    assert list(json.loads(text)["products"]) == ["x*x", "x*n"]
    assert json.loads(text)["products"]["x*x"] == {"n": "1"}


def test_undeclared_label_position():
    text = '{\n  "field": "Q", "dim": 2,\n  "basis": ["x", "y"],\n  "products": {"x*w": {"y": "1"}}\n}\n'
    with pytest.raises(ParseError) as info:
        parse_algebra(text)
    assert (info.value.line, info.value.column) == (4, 16)
    assert info.value.to_dict()["context"] == {"line": 4, "column": 16}


def test_invalid_json_position():
    with pytest.raises(ParseError) as info:
        parse_algebra('{"dim": 2,\n "basis": [}')
    assert info.value.line == 2
    assert info.value.column == 12


def test_negative_dimension_points_at_dim():
    with pytest.raises(ParseError) as info:
        parse_algebra('{"dim": -1, "basis": []}')
    assert (info.value.line, info.value.column) == (1, 2)


def test_dimension_must_match_the_basis():
    with pytest.raises(ParseError):
        parse_algebra('{"dim": 3, "basis": ["x", "y"]}')


@pytest.mark.parametrize("scalar", ['"1.5"', '"1/0"', '"x"'])
def test_malformed_coefficients(scalar):
    text = '{"dim": 1, "basis": ["x"], "products": {"x*x": {"x": %s}}}' % scalar
    with pytest.raises(ParseError):
        parse_algebra(text)


def test_prime_field_scalars_are_reduced():
    text = json.dumps(
        {
            "field": {"GF": 5},
            "dim": 2,
            "basis": ["x", "n"],
            "products": {"x*x": {"n": "6"}, "x*n": {"n": "-4"}},
        }
    )
    assert parse_algebra(text) == build(FamilySpec.of("Thm17_XsquareNonzero"), GF5)


def test_right_leibniz_tables_are_transposed(family1a):
    text = json.dumps(
        {
            "dim": 3,
            "basis": ["x", "y", "z"],
            "products": {"y*x": {"y": "1", "z": "1"}, "z*x": {"z": "1"}},
        }
    )
    assert parse_algebra(text, right_leibniz=True) == family1a
    with pytest.raises(LeibnizIdentityError):
        parse_algebra(text)


def test_unchecked_parse_keeps_a_bad_table():
    text = '{"dim": 2, "basis": ["x", "z"], "products": {"x*x": {"z": 1}, "x*z": {"z": 1}, "z*x": {"z": 1}}}'
    alg = parse_algebra(text, checked=False)
    assert alg.dim == 2


def test_load_algebra_names_the_table_after_the_file(tmp_path, family1a):
    path = tmp_path / "family1a.json"
    path.write_text(emit_algebra(family1a), encoding="utf-8")
    alg = load_algebra(path)
    assert alg == family1a
    assert alg.name == "family1a"


def test_reduction_refuses_denominators_divisible_by_p():
    alg = build(FamilySpec.of("Family1a", c="1/5"))
    with pytest.raises(NotReducibleError):
        reduce_mod(alg, 5)
    assert reduce_mod(alg, 3).field == FieldSpec.prime(3)
