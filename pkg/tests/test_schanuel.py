import pytest

from oracles import pullback_pairs
from systemic.instances import get_instance
from systemic.modules import (all_maps, classify_map, identity, is_onto, map_from_names,
                              system_module, zero_map, zero_module)
from systemic.projective import module_catalog
from systemic.schanuel import (PullbackNotClosed, onto_pairs, pullback, pullback_carrier,
                               uses_null_surpass, verify_trSh, verify_trSh11,
                               verify_trSh118)


def catalog(name, k=4):
    return {M.name: M for M in module_catalog(get_instance(name), k)}


def verdicts(rep):
    return {r.clause: r.verdict for r in rep.records}


def carrier_names(f1, f2, mode):
    P1, P2 = f1.source, f2.source
    return {(P1.elements[x // P2.size], P2.elements[x % P2.size])
            for x in pullback_carrier(f1, f2, mode)}


@pytest.mark.parametrize("name", ["supertrop-B", "sym-bool", "krasner-hs"])
def test_pullback_carrier_against_oracle(name):
    mods = list(module_catalog(get_instance(name), 4))
    checked = 0
    for M in mods:
        for P1 in mods:
            f1s = all_maps(P1, M, "homomorphism")[:4]
            for P2 in mods[:4]:
                for f1 in f1s:
                    for f2 in all_maps(P2, M, "homomorphism")[:4]:
                        for mode in ("strict", "preceq"):
                            assert carrier_names(f1, f2, mode) == pullback_pairs(f1, f2, mode)
                            checked += 1
    assert checked > 100


def test_pullback_of_identities_is_diagonal():
    M = system_module(get_instance("supertrop-B"))
    pb = pullback(identity(M), identity(M))
    assert pb.P.size == M.size
    assert is_onto(pb.pi1_res) and is_onto(pb.pi2_res)
    assert classify_map(pb.pi1_res).is_homomorphism


def test_pullback_input_errors():
    M = system_module(get_instance("supertrop-B"))
    N = system_module(get_instance("sym-bool"))
    with pytest.raises(ValueError):
        pullback_carrier(identity(M), identity(N))
    with pytest.raises(ValueError):
        pullback_carrier(identity(M), identity(M), "loose")


def test_strict_pullback_of_preceq_morphisms_can_fail_to_close():
    M = system_module(get_instance("supertrop-B"))
    P2 = catalog("supertrop-B")["supertrop-B^2<[0,nu],[1,nu]>"]
    f2 = map_from_names(P2, M, {"[0,0]": "0", "[0,nu]": "nu", "[1,nu]": "1", "[nu,nu]": "nu"})
    assert classify_map(f2).is_preceq_morphism and is_onto(f2)
    with pytest.raises(PullbackNotClosed) as e:
        pullback(identity(M), f2)
    assert e.value.witness[0] == "add"
    rep = verify_trSh(identity(M), f2)
    assert verdicts(rep)["pullback-submodule"] == "fail"


def test_trsh_on_identity_pair_passes():
    M = system_module(get_instance("supertrop-B"))
    rep = verify_trSh(identity(M), identity(M))
    assert rep.ok and rep.summary["pass"] > 1


def test_trsh_skips_maps_outside_hypothesis():
    M = system_module(get_instance("supertrop-B"))
    rep = verify_trSh(zero_map(M, M), identity(M))
    assert [r.verdict for r in rep.records] == ["skipped"]


@pytest.mark.parametrize("name", ["supertrop-B", "sym-bool"])
def test_trsh118_small_sweep_passes(name):
    mods = list(module_catalog(get_instance(name), 3))
    n = 0
    for f1, f2 in onto_pairs(mods, "homomorphism", is_onto, lambda f: True):
        rep = verify_trSh118(f1, f2)
        assert rep.ok, [r for r in rep.records if r.verdict == "fail"]
        n += 1
    assert n > 0


def test_trsh11_quasi_zero_reading_witness():
    S = get_instance("sym-supertrop-B")
    M = catalog("sym-supertrop-B")["sym-supertrop-B<(1,1)>"]
    assert M.elements == ("(0,0)", "(1,1)", "(nu,nu)")
    Z = zero_module(S)
    f1, f2 = zero_map(Z, M), identity(M)
    assert all(uses_null_surpass(X) for X in (Z, M))
    v = verdicts(verify_trSh11(f1, f2))
    # (1,1) surpasses 0 but is not of the form m(−)m
    assert M.names(M.null) == {"(0,0)", "(1,1)", "(nu,nu)"}
    assert M.names(M.quasi_zeros) == {"(0,0)", "(nu,nu)"}
    assert v["ii.restricted-image"] == "fail"
    assert v["ii.restricted-image-null-reading"] == "pass"


def test_trsh11_on_identity_pair():
    M = system_module(get_instance("supertrop-B"))
    rep = verify_trSh11(identity(M), identity(M))
    assert rep.ok
