import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_maps
from systemic.instances import get_instance
from systemic.modules import free_module, system_module
from systemic.projective import module_catalog
from systemic.search import (BudgetExceeded, MapProblem, available_backends, run, solve)

needs_compiled = pytest.mark.skipif("cython" not in available_backends(),
                                    reason="compiled kernel not built")

CASES = [("supertrop-B", 2, 2), ("sym-bool", 1, 2), ("krasner-hs", 2, 1), ("sign-hs", 1, 1)]
KINDS = ("homomorphism", "preceq", "succeq", "any")


@needs_compiled
@pytest.mark.parametrize("case", CASES)
@pytest.mark.parametrize("kind", KINDS)
def test_backends_agree(case, kind):
    name, a, b = case
    S = get_instance(name)
    M, N = free_module(S, a), free_module(S, b)
    p = MapProblem(M, N, kind)
    assert run(p, backend="python") == run(p, backend="cython")


@needs_compiled
def test_backends_agree_on_budget_and_limit():
    S = get_instance("sym-bool")
    F = free_module(S, 2)
    p = MapProblem(F, F, "preceq")
    for budget in (1, 10, 1000):
        assert run(p, budget=budget, backend="python") == run(p, budget=budget,
                                                              backend="cython")
    assert run(p, limit=3, backend="python") == run(p, limit=3, backend="cython")


def test_solutions_match_oracle():
    S = get_instance("supertrop-B")
    M, N = system_module(S), free_module(S, 2)
    for kind in ("homomorphism", "preceq", "succeq"):
        got = [tuple(N.elements[v] for v in t) for t in solve(MapProblem(M, N, kind))]
        assert got == brute_maps(M, N, kind)


def test_budget_exceeded_carries_partial_results():
    F = free_module(get_instance("sym-bool"), 2)
    with pytest.raises(BudgetExceeded) as e:
        solve(MapProblem(F, F, "preceq"), budget=5)
    assert e.value.evaluations >= 5


def test_pure_python_fallback_selected_by_environment():
    env = dict(os.environ, SYSTEMIC_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import systemic.search as s; print(s.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


mods = module_catalog(get_instance("supertrop-B"), 4) + module_catalog(get_instance("sign-hs"), 4)


@needs_compiled
@settings(max_examples=80, deadline=None)
@given(st.data())
def test_backends_agree_on_random_masks(data):
    M = data.draw(st.sampled_from(mods))
    N = data.draw(st.sampled_from([X for X in mods if X.scalars == M.scalars]))
    kind = data.draw(st.sampled_from(KINDS))
    allowed = [data.draw(st.one_of(st.none(), st.lists(st.integers(0, N.size - 1),
                                                       min_size=1, max_size=N.size,
                                                       unique=True).map(sorted)))
               for _ in range(M.size)]
    p = MapProblem(M, N, kind, allowed)
    assert run(p, backend="python") == run(p, backend="cython")
