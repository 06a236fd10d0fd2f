import json
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from weakchoice import serialize as ser
from weakchoice.applications.choice import SConsistentInstance
from weakchoice.applications.hahn_banach import HahnBanachInstance, hahn_banach_solve
from weakchoice.errors import ParseError
from weakchoice.genericity import DenseFamily, find_generic_filter
from weakchoice.mess import PartialBinaryFunction as F
from weakchoice.reduction import AntichainFamily, mess_from_poset, solve_two_linked_generic

from helpers import antichain_order, fork


def test_order_round_trip():
    p = fork()
    doc = ser.order_to_json(p)
    assert doc == {"kind": "poset", "elements": ["a", "b", "c"], "leq": [["a", "c"], ["b", "c"]]}
    assert ser.order_from_json(json.loads(ser.dumps(doc))) == p


def test_preorder_round_trip():
    doc = {"kind": "preorder", "elements": [1, 2], "leq": [[1, 2], [2, 1]]}
    p = ser.order_from_json(doc)
    assert ser.order_from_json(ser.order_to_json(p)) == p


def test_mess_round_trip_in_canonical_order():
    m = mess_from_poset(antichain_order("pq"), [["p", "q"]])
    doc = ser.mess_to_json(m)
    assert doc["members"] == [{}, {"p": 0}, {"p": 1}, {"q": 0}, {"q": 1}, {"p": 0, "q": 1}, {"p": 1, "q": 0}]
    back = ser.mess_from_json(json.loads(ser.dumps(doc)))
    assert back == m
    assert ser.mess_to_json(back) == doc


@pytest.mark.parametrize("text, value", [("2/4", "1/2"), ("6/3", 2), (-7, -7), ("-3/9", "-1/3")])
def test_rationals_in_lowest_terms(text, value):
    assert ser.format_rational(ser.parse_rational(text)) == value


@pytest.mark.parametrize("bad", [0.5, True, "x", "1/0", None, [1]])
def test_bad_rationals(bad):
    with pytest.raises(ParseError):
        ser.parse_rational(bad)


@settings(max_examples=200)
@given(st.fractions())
def test_rational_round_trip(q):
    assert ser.parse_rational(ser.format_rational(q)) == q


def test_families_resolve_names():
    p = fork()
    fam = ser.antichain_family_from_json(p, {"antichains": [["a", "b"], ["c"]]})
    assert isinstance(fam, AntichainFamily)
    assert ser.antichain_family_to_json(fam) == {"antichains": [["a", "b"], ["c"]]}
    dense = ser.dense_family_from_json(p, {"dense": [["b", "a"]]})
    assert isinstance(dense, DenseFamily)
    assert ser.dense_family_to_json(dense) == {"dense": [["a", "b"]]}
    with pytest.raises(ParseError):
        ser.antichain_family_from_json(p, {"antichains": [["z"]]})


def test_solution_and_filter_documents():
    p = fork()
    g = solve_two_linked_generic(p, [["a", "b"], ["c"]])
    assert ser.solution_to_json(g) == {
        "status": "sat",
        "members": ["a", "c"],
        "certificates": [{"antichain_index": 0, "witness": "a"}, {"antichain_index": 1, "witness": "c"}],
    }
    f = find_generic_filter(p, [["a", "b"]])
    assert ser.filter_to_json(f) == {"members": ["a", "c"], "certificates": [{"dense_index": 0, "witness": "a"}]}


def test_names_of_generated_labels():
    assert ser.name_of(F({"y": 0, "x": 1}), ["x", "y"]) == "{x=1,y=0}"
    assert ser.name_of(F()) == "{}"
    assert ser.name_of((1, 2)) == "(1,2)"


def test_loads_reports_position():
    with pytest.raises(ParseError) as info:
        ser.loads('{"a": 1,\n "b": }')
    assert (info.value.line, info.value.column) == (2, 7)


@pytest.mark.parametrize(
    "doc",
    [
        {"elements": ["a"], "kind": "lattice"},
        {"kind": "poset"},
        {"kind": "poset", "elements": [["a"]]},
        {"kind": "poset", "elements": ["a"], "leq": [["a"]]},
        [],
    ],
)
def test_order_schema_errors(doc):
    with pytest.raises(ParseError):
        ser.order_from_json(doc)


def test_mess_schema_errors():
    with pytest.raises(ParseError):
        ser.mess_from_json({"ground": ["x"], "members": [{"y": 1}]})
    with pytest.raises(ParseError):
        ser.mess_from_json({"ground": ["x"], "members": [{"x": 2}]})


def test_s_consistent_round_trip():
    inst = ser.s_consistent_from_json({"sets": {"1": ["a", "b"], "2": ["c"]}, "relation": [["c", "b"], ["b", "b"]]})
    assert isinstance(inst, SConsistentInstance)
    doc = ser.s_consistent_to_json(inst)
    assert doc["relation"] == [["b", "b"], ["b", "c"]]
    assert ser.s_consistent_from_json(doc) == inst


def test_hahn_banach_round_trip():
    doc = {
        "dim": 2,
        "forms": [[1, 1], [1, -1], [-1, 1], [-1, -1]],
        "subspace_basis": [[1, 1]],
        "f_values": ["0/5"],
        "tracked": [[1, 0], [0, 1], [1, 1]],
        "sums": [[0, 1, 2]],
        "scalings": [],
        "depth": 3,
    }
    inst = ser.hahn_banach_from_json(doc)
    assert isinstance(inst, HahnBanachInstance)
    out = ser.hahn_banach_to_json(inst)
    assert out["f_values"] == [0]
    assert ser.hahn_banach_from_json(out) == inst


def test_hahn_banach_rejects_floats():
    with pytest.raises(ParseError):
        ser.hahn_banach_from_json({"dim": 1, "forms": [[0.5]], "tracked": [[1]]})


def test_enclosure_document():
    inst = HahnBanachInstance(1, [(1,), (-1,)], [], [], [(1,)], depth=2)
    doc = ser.enclosure_to_json(hahn_banach_solve(inst))
    assert doc == {
        "depth": 2,
        "enclosures": [
            {
                "vector": [1],
                "base": [-1, 1],
                "interval": {"depth": 2, "index": 0, "lo": -1, "hi": "-1/2"},
                "width": "1/2",
                "value": -1,
            }
        ],
    }


def test_instance_files_parse():
    from pathlib import Path

    data = Path(__file__).parent / "data"
    inst = ser.hahn_banach_from_json(json.loads((data / "hb_l1.json").read_text()))
    assert inst.depth == 12 and inst.sums == ((0, 1, 2),)
    assert inst.tracked[1] == (Q(0), Q(1))
