import pytest

from matroid_toric.catalog import named, uniform
from matroid_toric.exchange import symmetric_exchange_set
from matroid_toric.io import (
    ParseError,
    binomials_from_obj,
    binomials_to_obj,
    dump_matroid,
    dumps,
    loads,
    matrix_to_obj,
    parse_matroid,
    weight_from_obj,
    witnesses_to_obj,
)
from matroid_toric.matroid import EmptyBases, UnequalCardinality, dual
from matroid_toric.polys import BasisVar
from matroid_toric.toric import bases_matrix, connection_matrix
from matroid_toric.matroid import anchor

from conftest import SUITE

CATALOG = dict(SUITE, W3=named("W3"), P6=named("P6"), Q6=named("Q6"))


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_matroid_roundtrip(name):
    m = CATALOG[name]
    text = dump_matroid(m)
    assert parse_matroid(text) == m
    assert dump_matroid(parse_matroid(text)) == text
    assert parse_matroid(dump_matroid(dual(m))) == dual(m)


def test_canonical_matroid_text():
    assert dump_matroid(uniform(1, 2)) == '{\n "d": 2,\n "bases": [\n  [1],\n  [2]\n ]\n}\n'


def test_unsorted_bases_canonicalized():
    m = parse_matroid('{"bases": [[4, 3], [2, 1], [1, 3], [1, 4], [2, 3], [2, 4]], "d": 4}')
    assert m == uniform(2, 4)


@pytest.mark.parametrize(
    "text,where",
    [
        ("{", "line 1"),
        ("[]", "top level"),
        ('{"d": 2}', "top level"),
        ('{"d": "2", "bases": []}', "field 'd'"),
        ('{"d": -1, "bases": []}', "field 'd'"),
        ('{"d": 2, "bases": [[1, true]]}', "field 'bases[0][1]'"),
        ('{"d": 2, "bases": [[1, 1]]}', "field 'bases[0]'"),
        ('{"d": 2, "bases": [[1], [1]]}', "field 'bases'"),
        ('{"d": 2, "bases": 3}', "field 'bases'"),
    ],
)
def test_matroid_parse_errors(text, where):
    with pytest.raises(ParseError) as err:
        parse_matroid(text, "m.json")
    assert err.value.where.startswith(where)
    assert str(err.value).startswith("m.json: ")


def test_matroid_axiom_errors():
    with pytest.raises(UnequalCardinality):
        parse_matroid('{"d": 3, "bases": [[1, 2], [3]]}')
    with pytest.raises(EmptyBases):
        parse_matroid('{"d": 3, "bases": []}')


def test_binomial_roundtrip():
    gens, _ = symmetric_exchange_set(uniform(2, 4))
    obj = binomials_to_obj(gens)
    back = binomials_from_obj(loads(dumps(obj)))
    assert back.same_elements(gens) and back.ambient == gens.ambient
    assert obj["ambient"] == [f"x1_{j}" for j in range(1, 7)]
    assert obj["elements"][0] == {"lead": {"x1_2": 1, "x1_5": 1}, "trail": {"x1_1": 1, "x1_6": 1}}


@pytest.mark.parametrize(
    "obj",
    [
        {"ambient": ["x1_1"]},
        {"ambient": ["q"], "elements": []},
        {"ambient": ["x1_1"], "elements": [{"lead": {"x1_1": 1}, "trail": {"x1_1": 1}}]},
        {"ambient": ["x1_1"], "elements": [{"lead": {"x1_1": -1}, "trail": {}}]},
        {"ambient": ["x1_1"], "elements": [{"lead": {"x1_2": 1}, "trail": {"x1_1": 1}}]},
    ],
)
def test_binomial_parse_errors(obj):
    with pytest.raises(ParseError):
        binomials_from_obj(obj)


def test_weight_formats():
    vs = [BasisVar(1, j) for j in (1, 2, 3)]
    assert weight_from_obj([1, 0, 2], vs, "w") == dict(zip(vs, [1, 0, 2]))
    assert weight_from_obj({"x1_2": 5}, vs, "w") == {vs[0]: 0, vs[1]: 5, vs[2]: 0}
    for bad in ([1, 2], [1, -1, 0], {"x1_9": 1}, "heavy"):
        with pytest.raises(ParseError):
            weight_from_obj(bad, vs, "w")


def test_matrix_and_witness_objects():
    obj = matrix_to_obj(bases_matrix(uniform(1, 2)))
    assert obj == {"rows": ["1", "2"], "columns": [{"var": "x1_1", "entries": [1, 0]}, {"var": "x1_2", "entries": [0, 1]}]}
    c = matrix_to_obj(connection_matrix(anchor(uniform(1, 2), 1), anchor(uniform(1, 2), 1)))
    assert c["rows"][0] == "1:1" and len(c["columns"]) == 3
    _, ws = symmetric_exchange_set(uniform(2, 4))
    wobj = witnesses_to_obj(ws)
    assert set(wobj["witnesses"][0]) == {"i", "j", "k", "l", "x", "y"}
