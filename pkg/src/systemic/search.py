"""Map-search problems and backend selection.

The compiled kernel is used when it imports; ``SYSTEMIC_PURE_PYTHON=1`` forces
the reference implementation.
"""

from __future__ import annotations

import copy
import os
from functools import cached_property

import numpy as np

from . import _pysearch

try:
    if os.environ.get("SYSTEMIC_PURE_PYTHON"):
        raise ImportError
    from ._csearch import search as _compiled_search
    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on the build
    _compiled_search = None
    BACKEND = "python"

DEFAULT_BUDGET = 10 ** 7
BUDGET_ENV = "SYSTEMIC_BUDGET"

ADD_RELATIONS = {"homomorphism": 0, "preceq": 1, "succeq": 2, "any": -1}


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


class BudgetExceeded(RuntimeError):
    """The search stopped before covering its space; the answer is inconclusive."""

    def __init__(self, found, evaluations):
        super().__init__(f"search budget exhausted after {evaluations} evaluations")
        self.found = found
        self.evaluations = evaluations


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _compiled_search is not None else [])


class MapProblem:
    """All maps M -> N satisfying the morphism conditions of a given kind.

    ``allowed[b]`` optionally restricts the values at source index b.
    Conditions: zero to zero, negation equivariance, tangible-action
    equivariance (or ⪯ with ``action="preceq"``), condition (iii) per kind,
    monotonicity.
    """

    def __init__(self, M, N, kind="homomorphism", allowed=None, action="eq", monotone=True):
        if M.scalars != N.scalars:
            raise ValueError("modules over different scalars")
        self.n, self.m = n, m = M.size, N.size
        self.add_rel = ADD_RELATIONS[kind]
        self.act_rel = {"eq": 0, "preceq": 1}[action]
        self._zero = (M.zero, N.zero)
        self._set_mask(allowed)
        S = M.scalars
        acting = [a for a in sorted(S.tangibles)
                  if not (a == S.one and all(M.act[a][x] == x for x in range(n)))]
        cons = [[] for _ in range(n)]
        for x in range(n):
            y = M.neg[x]
            if x <= y:
                cons[y].append((0, x, y, 0))
        for k, a in enumerate(acting):
            for x in range(n):
                y = M.act[a][x]
                cons[max(x, y)].append((1, x, y, k))
        if self.add_rel >= 0:
            for x in range(n):
                if x == M.zero:
                    continue
                for y in range(x, n):
                    if y == M.zero:
                        continue
                    z = M.add[x][y]
                    cons[max(x, y, z)].append((2, x, y, z))
        if monotone:
            for x in range(n):
                for y in range(n):
                    if x != y and M.le[x][y]:
                        cons[max(x, y)].append((3, x, y, 0))
        forced = [None] * n
        for b in range(n):
            for c in cons[b]:
                code, x, y, z = c
                if (code == 0 and y == b and x < b) or \
                        (code == 1 and self.act_rel == 0 and y == b and x < b) or \
                        (code == 2 and self.add_rel == 0 and z == b and x < b and y < b):
                    forced[b] = c
                    break
        self.cons, self.forced = cons, forced
        self.tadd = [N.add[i][j] for i in range(m) for j in range(m)]
        self.tneg = list(N.neg)
        self.tact = [N.act[a][v] for a in acting for v in range(m)] or [0]
        self.tle = bytearray(bool(N.le[i][j]) for i in range(m) for j in range(m))

    def _set_mask(self, allowed):
        n, m = self.n, self.m
        mask = bytearray(n * m)
        for b in range(n):
            vals = range(m) if allowed is None or allowed[b] is None else allowed[b]
            for v in vals:
                mask[b * m + v] = 1
        z, zn = self._zero
        for v in range(m):
            mask[z * m + v] = mask[z * m + v] and v == zn
        self.mask = mask
        self.cands = [[v for v in range(m) if mask[b * m + v]] for b in range(n)]

    def restricted(self, allowed) -> "MapProblem":
        """The same problem with a different value mask; the constraint tables are shared."""
        p = copy.copy(self)
        p.__dict__.pop("arrays", None)
        p._set_mask(allowed)
        return p

    @cached_property
    def arrays(self):
        i32 = np.int32
        cptr = np.zeros(self.n + 1, dtype=i32)
        np.cumsum([len(r) for r in self.cands], out=cptr[1:])
        return {
            "cand_ptr": cptr,
            "cand_val": np.array([v for r in self.cands for v in r] or [0], dtype=i32),
            "mask": np.frombuffer(bytes(self.mask), dtype=np.int8) if self.mask
            else np.zeros(1, np.int8),
            **self._static,
        }

    @cached_property
    def _static(self):
        i32 = np.int32
        flat = [c for row in self.cons for c in row]
        ptr = np.zeros(self.n + 1, dtype=i32)
        np.cumsum([len(r) for r in self.cons], out=ptr[1:])
        return {
            "cons_ptr": ptr,
            "cons": np.array(flat or [(0, 0, 0, 0)], dtype=i32).reshape(-1, 4),
            "forced": np.array([f if f is not None else (-1, 0, 0, 0) for f in self.forced]
                               or [(-1, 0, 0, 0)], dtype=i32).reshape(-1, 4),
            "tadd": np.array(self.tadd or [0], dtype=i32),
            "tneg": np.array(self.tneg or [0], dtype=i32),
            "tact": np.array(self.tact, dtype=i32),
            "tle": np.frombuffer(bytes(self.tle), dtype=np.int8) if self.tle
            else np.zeros(1, np.int8),
        }


def run(problem: MapProblem, limit: int | None = None, budget: int | None = None,
        backend: str | None = None):
    """Solve; returns (solutions, evaluations, exhausted)."""
    limit = limit if limit is not None else 2 ** 62
    budget = default_budget() if budget is None else budget
    backend = backend or BACKEND
    if backend == "cython":
        if _compiled_search is None:
            raise RuntimeError("compiled kernel not built")
        return _compiled_search(problem, limit, budget)
    return _pysearch.search(problem, limit, budget)


def solve(problem, limit=None, budget=None, backend=None) -> list[tuple[int, ...]]:
    """Solutions in lexicographic order; raises BudgetExceeded when incomplete."""
    sols, evals, exhausted = run(problem, limit, budget, backend)
    if exhausted:
        raise BudgetExceeded(sols, evals)
    return sols
