from itertools import product

import pytest

from oracles import KRASNER, SIGN, Tables, hyper_closure, symmetrized_bool
from systemic.core import check_system, null_set, quasi_zero
from systemic.instances import (FINITE_NAMES, REGISTRY, ST, ClosureTooLarge, check_hyperfield,
                                get_instance, krasner_hyperfield, make_boolean,
                                make_hypersystem, make_supertrop_boolean,
                                make_supertrop_maxplus, sign_hyperfield, symmetrize)


def test_registry_names():
    assert set(REGISTRY) == {"bool", "sym-bool", "supertrop-B", "sym-supertrop-B", "maxplus-st",
                             "krasner-hs", "sign-hs"}
    with pytest.raises(KeyError):
        get_instance("tropical")


def test_boolean():
    B = make_boolean()
    assert B.elements[B.add[B.idx("1")][B.idx("1")]] == "1"
    assert null_set(B) == {"0", "1"}
    assert not check_system(B).is_system


def test_supertropical_boolean_tables():
    S = make_supertrop_boolean()
    add = lambda a, b: S.elements[S.add[S.idx(a)][S.idx(b)]]
    mul = lambda a, b: S.elements[S.mul[S.idx(a)][S.idx(b)]]
    assert add("1", "1") == "nu" and add("1", "nu") == "nu" and add("nu", "nu") == "nu"
    assert mul("1", "1") == "1" and mul("1", "nu") == "nu" and mul("nu", "nu") == "nu"
    assert S.elements[S.neg[S.idx("nu")]] == "nu"
    assert S.names(S.tangibles) == {"1"}
    assert check_system(S).is_system


def test_symmetrized_boolean_against_twist_formula():
    S = get_instance("sym-bool")
    add, mul = symmetrized_bool()
    T = Tables(S)
    assert T.add == add and T.mul == mul
    assert T.mul[("(1,0)", "(0,1)")] == "(0,1)"
    assert T.neg["(1,0)"] == "(0,1)"
    assert S.names(S.quasi_zeros) == {"(0,0)", "(1,1)"}
    assert S.names(S.tangibles) == {"(1,0)", "(0,1)"}


@pytest.mark.parametrize("base", ["bool", "supertrop-B"])
def test_embedding_into_symmetrization_is_a_homomorphism(base):
    S = get_instance(base)
    D = symmetrize(S)
    e = lambda a: D.idx(f"({a},{S.elements[S.zero]})")
    for a, b in product(range(S.size), repeat=2):
        A, B = S.elements[a], S.elements[b]
        assert e(S.elements[S.add[a][b]]) == D.add[e(A)][e(B)]
        assert e(S.elements[S.mul[a][b]]) == D.mul[e(A)][e(B)]
    for a in S.elements:
        # negation of S is the identity on these bases
        assert e(S.elements[S.neg[S.idx(a)]]) == e(a)


@pytest.mark.parametrize("base", ["bool", "supertrop-B"])
def test_symmetrization_tangibles_avoid_quasi_zeros(base):
    D = symmetrize(get_instance(base))
    assert not D.tangibles & D.quasi_zeros


def test_idempotent_base_gives_idempotent_symmetrization():
    D = get_instance("sym-bool")
    assert all(D.add[a][a] == a for a in range(D.size))


def test_maxplus_rules():
    F = make_supertrop_maxplus()
    t, g = F.tangible, F.ghost
    assert F.add(t(2), t(2)) == g(2)
    assert F.add(t(2), t(3)) == t(3)
    assert F.mul(t(1), t(2)) == t(3)
    assert F.add(F.zero, t(5)) == t(5)
    assert str(t(-1)) == "t-1" and F.parse("g4") == ST("g", 4)


def test_maxplus_overflow():
    F = make_supertrop_maxplus(bound=10)
    with pytest.raises(OverflowError):
        F.mul(F.tangible(6), F.tangible(6))


def test_maxplus_window_laws():
    F = get_instance("maxplus-st")
    r = F.check_window(-3, 3)
    assert not r.failed


@pytest.mark.parametrize("H, ref", [(krasner_hyperfield(), KRASNER), (sign_hyperfield(), SIGN)])
def test_hypersystem_carrier_matches_closure(H, ref):
    S = make_hypersystem(H)
    expected = {"{" + ",".join(sorted(X, key=ref[0].index)) + "}" for X in hyper_closure(*ref)}
    assert set(S.elements) == expected


def test_krasner_and_sign_carriers():
    assert set(get_instance("krasner-hs").elements) == {"{0}", "{1}", "{0,1}"}
    assert set(get_instance("sign-hs").elements) == {"{0}", "{+}", "{-}", "{0,+,-}"}
    assert null_set(get_instance("krasner-hs")) == {"{0}", "{0,1}"}


def test_hypersystem_structure():
    S = get_instance("sign-hs")
    assert S.names(S.tangibles) == {"{+}", "{-}"}
    assert S.elements[S.neg[S.idx("{+}")]] == "{-}"
    assert S.le[S.idx("{+}")][S.idx("{0,+,-}")] and not S.le[S.idx("{0,+,-}")][S.idx("{+}")]
    assert quasi_zero(S, "{+}") == "{0,+,-}"


def test_hypersystem_size_bound():
    with pytest.raises(ClosureTooLarge):
        make_hypersystem(sign_hyperfield(), bound=3)


def test_hyperfield_audits():
    assert not check_hyperfield(krasner_hyperfield()).failed
    assert not check_hyperfield(sign_hyperfield()).failed
    broken = sign_hyperfield().with_sum("+", "-", {"0"})
    failed = {c.name: c.witness for c in check_hyperfield(broken).failed}
    assert "reversible" in failed and failed["reversible"]


@pytest.mark.parametrize("name", ["krasner-hs", "sign-hs"])
def test_hyp7_exhaustive(name):
    # a tangible and b with a + b surpassing 0 force (−)a inside b
    S = get_instance(name)
    for a in S.tangibles:
        for b in range(S.size):
            if S.le[S.zero][S.add[a][b]]:
                assert S.le[S.neg[a]][b], (S.elements[a], S.elements[b])


@pytest.mark.parametrize("name", FINITE_NAMES)
def test_quasi_zeros_fixed_by_negation(name):
    S = get_instance(name)
    assert all(S.neg[q] == q for q in S.quasi_zeros)
