"""Problem parsing: grammar, validation, canonical round-trips."""

import json

import pytest

from lclab.errors import ParseError
from lclab.monomial import Monomial
from lclab.problem import (
    parse_monomial,
    parse_problem,
    render_monomial,
    serialize_problem,
)

VARS = ("y1", "y2", "y3")

FIXTURE = {
    "ring": {"variables": ["y1", "y2", "y3"], "field": {"kind": "rational"}},
    "module": {"ideal": []},
    "sequence": ["y1*y2", "y1*y3"],
    "tasks": ["local_cohomology", "theorem2"],
    "box_radius": 5,
}


def test_parse_fixture_document():
    p = parse_problem(json.dumps(FIXTURE))
    assert p.variables == VARS
    assert p.sequence == (Monomial((1, 1, 0)), Monomial((1, 0, 1)))
    assert p.tasks == ("local_cohomology", "theorem2")
    assert p.box_radius == 5
    assert p.ideal().is_zero()


def test_monomial_exponents_accumulate():
    m = parse_monomial("y1^2*y1", VARS)
    assert m.exps == (3, 0, 0)
    assert parse_monomial("y2 * y2^2", VARS).exps == (0, 3, 0)


def test_monomial_unknown_variable():
    with pytest.raises(ParseError) as err:
        parse_monomial("y4", VARS)
    assert err.value.column == 1
    assert err.value.token == "y4"


def test_monomial_syntax_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_monomial("y1**y2", VARS)
    assert err.value.line == 1 and err.value.column == 4
    with pytest.raises(ParseError) as err:
        parse_monomial("y1^", VARS)
    assert err.value.column == 4
    with pytest.raises(ParseError) as err:
        parse_monomial("", VARS)
    assert err.value.token == "end of input"
    with pytest.raises(ParseError):
        parse_monomial("y1 y2", VARS)


def test_render_monomial():
    assert render_monomial(Monomial((3, 0, 1)), VARS) == "y1^3*y3"
    assert render_monomial(Monomial((0, 0, 0)), VARS) == "1"
    assert render_monomial(Monomial((0, 1, 0)), VARS) == "y2"


def test_json_error_carries_position():
    with pytest.raises(ParseError) as err:
        parse_problem('{"ring": oops}')
    assert err.value.line == 1 and err.value.column is not None


def test_unknown_task_rejected():
    doc = dict(FIXTURE, tasks=["local_cohomology", "frobnicate"])
    with pytest.raises(ParseError) as err:
        parse_problem(json.dumps(doc))
    assert "frobnicate" in str(err.value)


def test_duplicate_variables_rejected():
    doc = dict(FIXTURE, ring={"variables": ["y1", "y1"], "field": {"kind": "rational"}})
    with pytest.raises(ParseError):
        parse_problem(json.dumps(doc))


def test_unknown_option_rejected():
    doc = dict(FIXTURE, options={"beast_mode": 1})
    with pytest.raises(ParseError):
        parse_problem(json.dumps(doc))


def test_bad_box_radius_rejected():
    doc = dict(FIXTURE, box_radius=-1)
    with pytest.raises(ParseError):
        parse_problem(json.dumps(doc))
    doc = dict(FIXTURE, box_radius="big")
    with pytest.raises(ParseError):
        parse_problem(json.dumps(doc))


def test_prime_field_parses():
    doc = dict(FIXTURE, ring={"variables": ["y1"], "field": {"kind": "prime", "p": 32003}},
               sequence=["y1"])
    p = parse_problem(json.dumps(doc))
    assert p.field_spec == ("prime", 32003)
    assert p.field().describe() == "p:32003"


def test_composite_field_rejected():
    doc = dict(FIXTURE, ring={"variables": ["y1"], "field": {"kind": "prime", "p": 6}},
               sequence=["y1"])
    with pytest.raises(ParseError):
        parse_problem(json.dumps(doc))


def test_round_trip_is_identity():
    docs = [
        FIXTURE,
        dict(
            FIXTURE,
            module={"ideal": ["y1^2*y2", "y3"]},
            options={"polynomial": [["y2", "1"], ["y1*y3", "-2/3"]],
                     "degree_bound": 3},
        ),
        dict(FIXTURE, sequence=["y1^2*y1", "y2"]),
    ]
    for doc in docs:
        first = parse_problem(json.dumps(doc))
        text = serialize_problem(first)
        second = parse_problem(text)
        assert first == second
        assert serialize_problem(second) == text


def test_polynomial_option_normalization():
    doc = dict(FIXTURE, options={"polynomial": "y2"})
    p = parse_problem(json.dumps(doc))
    assert p.options_dict()["polynomial"] == (("y2", "1"),)
    doc = dict(FIXTURE, options={"polynomial": [["y2", 2]]})
    p = parse_problem(json.dumps(doc))
    assert p.options_dict()["polynomial"] == (("y2", "2"),)
    doc = dict(FIXTURE, options={"polynomial": [["y2", "bad"]]})
    with pytest.raises(ParseError):
        parse_problem(json.dumps(doc))
