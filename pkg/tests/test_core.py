import pytest

from oracles import Tables, circ_relation, null_relation
from systemic.core import (UnknownElement, build_surpass_circ, build_surpass_null,
                           check_system, make_system, null_set, quasi_zero, relation_pairs,
                           set_surpassed, surpass_violations, with_surpass)
from systemic.instances import FINITE_NAMES, SYSTEM_NAMES, get_instance

# oracle outputs (tests/oracles.py), frozen
NULL_SETS = {
    "bool": {"0", "1"},
    "sym-bool": {"(0,0)", "(1,1)"},
    "supertrop-B": {"0", "nu"},
    "sym-supertrop-B": {"(0,0)", "(1,1)", "(nu,nu)"},
    "krasner-hs": {"{0}", "{0,1}"},
    "sign-hs": {"{0}", "{0,+,-}"},
}


def test_quasi_zero_examples():
    assert quasi_zero(get_instance("supertrop-B"), "1") == "nu"
    assert quasi_zero(get_instance("sym-bool"), "(1,0)") == "(1,1)"
    for name in FINITE_NAMES:
        S = get_instance(name)
        assert quasi_zero(S, S.elements[S.zero]) == S.elements[S.zero]


def test_quasi_zero_unknown_element():
    with pytest.raises(UnknownElement):
        quasi_zero(get_instance("supertrop-B"), "2")


@pytest.mark.parametrize("name", FINITE_NAMES)
def test_null_sets(name):
    S = get_instance(name)
    assert Tables(S).null() == NULL_SETS[name]
    assert null_set(S) == NULL_SETS[name]
    assert S.names(S.quasi_zeros) <= null_set(S)


def test_krasner_null_is_sets_containing_zero():
    S = get_instance("krasner-hs")
    assert null_set(S) == {e for e in S.elements if "0" in e.strip("{}").split(",")}


@pytest.mark.parametrize("name", ["bool", "sym-bool", "supertrop-B", "sym-supertrop-B"])
def test_circ_relation_matches_definition(name):
    S = get_instance(name)
    assert build_surpass_circ(S) == circ_relation(Tables(S))
    # these systems are declared with the circ directive
    assert relation_pairs(S) == build_surpass_circ(S)


def test_circ_examples():
    S = get_instance("sym-bool")
    rel = build_surpass_circ(S)
    assert ("(1,0)", "(1,1)") in rel
    assert ("(1,0)", "(0,1)") not in rel
    for name in FINITE_NAMES:
        T = get_instance(name)
        assert all((e, e) in build_surpass_circ(T) for e in T.elements)


def test_null_relation_examples():
    K = get_instance("krasner-hs")
    rel = build_surpass_null(K, null_set(K))
    assert ("{1}", "{0,1}") in rel
    assert rel == null_relation(Tables(K), null_set(K))
    for name in FINITE_NAMES:
        S = get_instance(name)
        rel = build_surpass_null(S, null_set(S))
        z = S.elements[S.zero]
        assert all((z, n) in rel for n in null_set(S))
    B = get_instance("supertrop-B")
    assert ("1", "nu") in build_surpass_null(B, null_set(B))


@pytest.mark.parametrize("name", FINITE_NAMES)
def test_circ_inside_null_relation(name):
    S = get_instance(name)
    circ = with_surpass(S, "circ")
    assert build_surpass_circ(S) <= build_surpass_null(S, null_set(circ))


def test_check_system_classifications():
    bool_report = check_system(get_instance("bool"))
    assert not bool_report.is_system
    assert [c.name for c in bool_report.failed] == ["tangibles-avoid-quasi-zeros"]
    assert bool_report.failed[0].witness == ("1",)
    for name in SYSTEM_NAMES:
        r = check_system(get_instance(name))
        assert r.is_system, (name, r.failed)
        assert r.classification == "T-system"


def test_every_fail_has_witness():
    for name in FINITE_NAMES:
        for c in check_system(get_instance(name)).failed:
            assert c.witness


def test_degenerate_carrier_is_pseudo_triple():
    S = make_system(["0"], "0", "0", lambda a, b: "0", lambda a, b: "0", [],
                    lambda a: a, "circ", "trivial")
    r = check_system(S)
    assert r.classification == "pseudo-triple"


def test_broken_negation_is_caught():
    # negation that is not additive on supertrop-B
    S = get_instance("supertrop-B")
    flip = {"0": "0", "1": "nu", "nu": "1"}
    bad = make_system(S.elements, "0", "1", lambda a, b: S.elements[S.add[S.idx(a)][S.idx(b)]],
                      lambda a, b: S.elements[S.mul[S.idx(a)][S.idx(b)]], ["1"],
                      flip.__getitem__, "circ", "bad")
    r = check_system(bad)
    assert r.classification == "not-pseudo-triple"
    assert r.failed and all(c.witness for c in r.failed)


def test_surpass_violations_reports_witnesses():
    S = get_instance("supertrop-B")
    # drop reflexivity at nu
    rel = {(a, b) for a, b in relation_pairs(S) if (a, b) != ("nu", "nu")}
    v = surpass_violations(S, rel)
    assert v and all(w for _, w in v)
    assert surpass_violations(S) == []


def test_set_extension_relation():
    B = get_instance("supertrop-B")
    assert set_surpassed(B, ["1"], ["nu"])
    assert set_surpassed(B, [], ["0"])
    assert not set_surpassed(B, ["nu"], ["1"])
