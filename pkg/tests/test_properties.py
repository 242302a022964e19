"""Algebraic invariants as property tests."""

from hypothesis import given, settings, strategies as st

from systemic.instances import FINITE_NAMES, SYSTEM_NAMES, get_instance
from systemic.matrices import Matrix, is_preceq_vnr, matrix_mul, matrix_preceq
from systemic.modules import MapTable, all_maps, classify_map, direct_sum, is_closed, ker_mod
from systemic.projective import module_catalog

systems = st.sampled_from(FINITE_NAMES).map(get_instance)


def elements(S):
    return st.integers(0, S.size - 1)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_system_laws(data):
    S = data.draw(systems)
    a, b, c = (data.draw(elements(S)) for _ in range(3))
    A, M, N, L = S.add, S.mul, S.neg, S.le
    assert A[a][b] == A[b][a] and A[A[a][b]][c] == A[a][A[b][c]]
    assert M[M[a][b]][c] == M[a][M[b][c]]
    assert M[a][A[b][c]] == A[M[a][b]][M[a][c]]
    assert N[N[a]] == a and N[A[a][b]] == A[N[a]][N[b]]
    assert not (L[a][b] and L[b][c]) or L[a][c]
    assert not (L[a][b] and L[b][a]) or a == b
    assert not L[a][b] or L[A[a][c]][A[b][c]]


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_quasi_zeros_are_null(data):
    S = data.draw(systems)
    a = data.draw(elements(S))
    q = S.add[a][S.neg[a]]
    assert S.le[S.zero][q] and S.neg[q] == q


maxplus = get_instance("maxplus-st")
mp = st.one_of(st.just(maxplus.zero),
               st.builds(maxplus.tangible, st.integers(-50, 50)),
               st.builds(maxplus.ghost, st.integers(-50, 50)))


@settings(max_examples=300, deadline=None)
@given(mp, mp, mp)
def test_maxplus_laws(a, b, c):
    F = maxplus
    assert F.add(a, b) == F.add(b, a)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.le(a, F.add(a, F.add(c, c)))
    assert not F.le(a, b) or F.le(F.mul(c, a), F.mul(c, b))


catalog = {n: module_catalog(get_instance(n), 4) for n in SYSTEM_NAMES}


def module_pairs():
    return st.sampled_from(SYSTEM_NAMES).flatmap(
        lambda n: st.tuples(st.sampled_from(catalog[n]), st.sampled_from(catalog[n]),
                            st.sampled_from(catalog[n])))


@settings(max_examples=60, deadline=None)
@given(module_pairs(), st.sampled_from(["homomorphism", "preceq", "succeq"]), st.data())
def test_morphism_classes_closed_under_composition(triple, kind, data):
    X, Y, Z = triple
    fs, gs = all_maps(X, Y, kind), all_maps(Y, Z, kind)
    if not fs or not gs:
        return
    f, g = data.draw(st.sampled_from(fs)), data.draw(st.sampled_from(gs))
    label = {"homomorphism": "homomorphism", "preceq": "preceq-morphism",
             "succeq": "succeq-morphism"}[kind]
    assert label in classify_map(f.then(g)).labels


@settings(max_examples=60, deadline=None)
@given(module_pairs(), st.data())
def test_ker_mod_is_a_submodule_containing_null(triple, data):
    X, Y, _ = triple
    fs = all_maps(X, Y, "preceq")
    f = data.draw(st.sampled_from(fs))
    K = [X.idx(e) for e in ker_mod(f)]
    assert is_closed(X, K) and set(X.null) <= set(K)


@settings(max_examples=40, deadline=None)
@given(module_pairs())
def test_direct_sum_projections_are_homomorphisms(triple):
    X, Y, _ = triple
    if X.size * Y.size > 16:
        return
    D = direct_sum([X, Y])
    for i, T in enumerate((X, Y)):
        p = MapTable(D, T, tuple(D.coords[b][i] for b in range(D.size)))
        assert classify_map(p).is_homomorphism


sb = get_instance("supertrop-B")
@settings(max_examples=150, deadline=None)
@given(st.integers(1, 2), st.data())
def test_matrix_product_associative_and_vnr_idempotent(n, data):
    sq = st.lists(st.lists(elements(sb), min_size=n, max_size=n).map(tuple), min_size=n,
                  max_size=n).map(lambda r: Matrix(sb, tuple(r)))
    A, B, C = data.draw(sq), data.draw(sq), data.draw(sq)
    assert matrix_mul(matrix_mul(A, B), C) == matrix_mul(A, matrix_mul(B, C))
    if is_preceq_vnr(A, B):
        AB = matrix_mul(A, B)
        assert matrix_preceq(AB, matrix_mul(AB, AB))
