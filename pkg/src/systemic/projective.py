"""Projectivity: lifting properties over explicit scopes, splitting criteria,
free covers, dual bases and direct-summand searches."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product as cartesian

import numpy as np

from .core import FiniteSystem
from .modules import (SIZE_BOUND, MapTable, SizeBoundExceeded, SystemicModule, _base_problem,
                      _ker_mod, all_maps, check_module, classify_map, closure, direct_sum,
                      enumerate_maps, find_isomorphism, free_module, generates, identity,
                      is_onto, is_preceq_onto, is_succeq_onto, ker_mod_module, map_le,
                      one_minus, orbit_representatives, pointwise_sum, preceq_generates,
                      submodule, system_module, zero_module)
from .search import BudgetExceeded, default_budget
from .splitting import find_splitting, is_preceq_idempotent_map

KINDS = ("plain", "preceq", "preceq-h", "h", "succeq")

CATALOG_BOUND = 16
DEFAULT_TARGET_SIZE = 4
MAP_CAP = 20000


class TooManyMaps(BudgetExceeded):
    def __init__(self, M, N, cls, cap):
        RuntimeError.__init__(self, f"more than {cap} {cls} maps {M.name} -> {N.name}")
        self.found, self.evaluations = [], 0


class HypothesisError(ValueError):
    """A required hypothesis or certificate is missing."""


@dataclass
class Verdict:
    status: str  # "true", "false" or "inconclusive"
    kind: str
    module: str
    certificate: object = None
    counterexample: object = None
    scope: str = "scope-free"
    note: str = ""

    @property
    def holds(self) -> bool | None:
        return {"true": True, "false": False}.get(self.status)

    def __str__(self):
        extra = f" ({self.note})" if self.note else ""
        return f"{self.kind}-projective({self.module}): {self.status} [{self.scope}]{extra}"


# --- catalog and scopes ----------------------------------------------------------------

def _invariants(M):
    return (M.size, len(M.tangibles), len(M.null), len(M.quasi_zeros),
            sum(map(sum, M.le)))


@lru_cache(maxsize=None)
def _catalog(S: FiniteSystem) -> tuple[SystemicModule, ...]:
    """Isomorphism classes of modules of size at most CATALOG_BOUND built from
    the zero module, the free modules of rank 1 and 2, and their submodules
    generated by one or two elements."""
    free = [free_module(S, 1)]
    if S.size ** 2 <= SIZE_BOUND:
        free.append(free_module(S, 2))
    found = [zero_module(S)] + [F for F in free if F.size <= CATALOG_BOUND]
    seen = set()
    for F in free:
        for r in (1, 2):
            for seeds in combinations(range(F.size), r):
                c = closure(F, seeds)
                if len(c) > CATALOG_BOUND or (F.name, c) in seen:
                    continue
                seen.add((F.name, c))
                gens = ",".join(F.elements[s] for s in seeds)
                found.append(submodule(F, c, name=f"{F.name}<{gens}>"))
    reps: dict = {}
    out = []
    for M in found:
        if check_module(M).failed:
            continue
        bucket = reps.setdefault(_invariants(M), [])
        if any(find_isomorphism(M, N) is not None for N in bucket):
            continue
        bucket.append(M)
        out.append(M)
    order = {id(M): i for i, M in enumerate(out)}
    return tuple(sorted(out, key=lambda M: (M.size, order[id(M)])))


def module_catalog(S: FiniteSystem, max_size: int = 6) -> tuple[SystemicModule, ...]:
    if max_size > CATALOG_BOUND:
        raise ValueError(f"catalog holds modules up to size {CATALOG_BOUND}")
    return tuple(M for M in _catalog(S) if M.size <= max_size)


@dataclass(frozen=True)
class Scope:
    """Target modules quantified over by lifting properties: catalog modules up
    to ``max_size`` together with the module under test and its free cover."""
    max_size: int = DEFAULT_TARGET_SIZE
    extra: tuple[SystemicModule, ...] = ()

    def targets(self, P: SystemicModule) -> list[SystemicModule]:
        mods = list(module_catalog(P.scalars, self.max_size)) + list(self.extra)
        return _dedupe(mods + [P])

    def sources(self, P: SystemicModule, cover: SystemicModule | None) -> list[SystemicModule]:
        mods = self.targets(P)
        return _dedupe(mods + ([cover] if cover is not None else []))

    def label(self, P: SystemicModule) -> str:
        return f"targets: catalog size<={self.max_size} + {P.name} + free cover"


def _dedupe(mods):
    out = []
    for M in mods:
        if not any(M == N for N in out):
            out.append(M)
    return out


# --- free covers -----------------------------------------------------------------------

def free_cover(P: SystemicModule, gens=None, bound: int = SIZE_BOUND):
    """The homomorphism from a free module sending its basis to ``gens``.

    ``gens`` defaults to one tangible per orbit of 𝒯_P. Returns (F, π).
    """
    S = P.scalars
    gens = orbit_representatives(P) if gens is None else [P.idx(g) for g in gens]
    k = len(gens)
    if k == 0:
        Z = zero_module(S)
        return Z, MapTable(Z, P, (P.zero,), "cover")
    if S.size ** k > bound:
        raise SizeBoundExceeded(f"free module of rank {k} over {S.name} exceeds {bound}")
    F = free_module(S, k, bound)
    coords = F.coords or tuple((a,) for a in range(F.size))
    table = []
    for c in coords:
        v = P.zero
        for a, g in zip(c, gens):
            v = P.add[v][P.act[a][g]]
        table.append(v)
    return F, MapTable(F, P, tuple(table), "cover")


# --- lifting ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Lifting:
    h_class: str
    h_onto: str
    f_class: str
    lift_class: str
    rel: str  # how f(b) compares with h f̃(b): eq, le (f ⪯ hf̃) or ge (hf̃ ⪯ f)


LIFTINGS = {
    "plain": Lifting("homomorphism", "onto", "homomorphism", "homomorphism", "eq"),
    "preceq": Lifting("preceq", "preceq-onto", "preceq", "preceq", "le"),
    "preceq-h": Lifting("homomorphism", "preceq-onto", "preceq", "preceq", "le"),
    "h": Lifting("homomorphism", "preceq-onto", "homomorphism", "homomorphism", "le"),
    "succeq": Lifting("preceq", "succeq-onto", "succeq", "succeq", "ge"),
}

_ONTO = {"onto": is_onto, "preceq-onto": is_preceq_onto, "succeq-onto": is_succeq_onto}
_LABEL = {"homomorphism": "homomorphism", "preceq": "preceq-morphism",
          "succeq": "succeq-morphism"}


def _rel(L, rel, x, y) -> bool:
    if rel == "eq":
        return x == y
    if rel == "le":
        return L[x][y]
    return L[y][x]


def _lift_mask(f: MapTable, h: MapTable, rel: str):
    L, ht = h.target.le, h.table
    return [[y for y in range(h.source.size) if _rel(L, rel, v, ht[y])] for v in f.table]


def lift_search(f: MapTable, h: MapTable, kind: str = "preceq-h", budget=None):
    """First f̃ (canonical order) lifting f past h in the given sense, or None.

    Raises BudgetExceeded when the search is cut short.
    """
    lift = LIFTINGS[kind]
    c = classify_map(h)
    if _LABEL[lift.h_class] not in c.labels or not _ONTO[lift.h_onto](h):
        raise ValueError(f"h must be a {lift.h_onto} {_LABEL[lift.h_class]}")
    if f.target != h.target:
        raise ValueError("f and h have different targets")
    for g in enumerate_maps(f.source, h.source, lift.lift_class, _lift_mask(f, h, lift.rel),
                            budget, limit=1):
        return g
    return None


def extremal(maps: list[MapTable], rel: str) -> list[MapTable]:
    """Maps not strictly below another (rel "le") or above another (rel "ge").

    A lift of a map also lifts everything it dominates, so lifting checks may
    restrict to these.
    """
    if rel == "eq" or len(maps) < 2:
        return list(maps)
    L = np.array(maps[0].target.le, dtype=bool)
    T = np.array([f.table for f in maps])
    keep = []
    for i in range(len(maps)):
        if rel == "le":
            above = L[T[i][None, :], T].all(axis=1) & ~L[T, T[i][None, :]].all(axis=1)
        else:
            above = L[T, T[i][None, :]].all(axis=1) & ~L[T[i][None, :], T].all(axis=1)
        if not above.any():
            keep.append(maps[i])
    # among mutually equivalent tables keep the first
    out, seen = [], []
    for f in keep:
        t = np.array(f.table)
        if any(L[t, u].all() and L[u, t].all() for u in seen):
            continue
        seen.append(t)
        out.append(f)
    return out


def bounded_maps(M, N, cls: str, budget=None, cap: int = MAP_CAP) -> list[MapTable]:
    """All maps of a class, treating more than ``cap`` of them as inconclusive."""
    maps = list(enumerate_maps(M, N, cls, budget=budget, limit=cap + 1))
    if len(maps) > cap:
        raise TooManyMaps(M, N, cls, cap)
    return maps


def qualifying_maps(M, N, cls: str, onto: str, budget=None) -> list[MapTable]:
    test = _ONTO[onto]
    return [h for h in bounded_maps(M, N, cls, budget) if test(h)]


def _pairs(P, scope: Scope, cover, hom_h: bool):
    """(source, target) pairs for the quantifier over h, grouped by target. The free
    cover is a source only where h ranges over homomorphisms, which it determines
    by basis images."""
    targets = scope.targets(P)
    sources = scope.sources(P, cover if hom_h else None)
    return [(N, sources) for N in targets]


def _cover_or_none(P):
    try:
        return free_cover(P)[0]
    except SizeBoundExceeded:
        return None


def _note(items, keep=3):
    more = f"; and {len(items) - keep} more" if len(items) > keep else ""
    return "; ".join(items[:keep]) + more


def lifting_property(P: SystemicModule, kind: str, scope: Scope | None = None,
                     budget=None) -> Verdict:
    """The lifting definition of ``kind``-projectivity quantified over a scope.

    Besides the scope pairs, the projection of the free cover onto P is always tried
    as h, since it is the map whose lifts decide projectivity.
    """
    scope = scope or Scope()
    lift = LIFTINGS[kind]
    flip = {"le": "ge", "ge": "le"}.get(lift.rel, "eq")
    checked, inconclusive = 0, []
    fs_for = {}

    def fs(N):
        if N not in fs_for:
            fs_for[N] = extremal(bounded_maps(P, N, lift.f_class, budget), lift.rel)
        return fs_for[N]

    def attempt(M, N, hs):
        nonlocal checked
        for h in hs:
            for f in fs(N):
                checked += 1
                if lift_search(f, h, kind, budget) is None:
                    return Verdict("false", kind, P.name, counterexample={
                        "h": (M.name, N.name, h), "f": f}, scope=scope.label(P))
        return None

    for pi in _cover_probe(P, lift.h_class, lift.h_onto):
        try:
            found = attempt(pi.source, P, [pi])
            if found:
                return found
        except BudgetExceeded as e:
            inconclusive.append(f"free cover: {e}")
    hom_h = lift.h_class == "homomorphism"
    for N, sources in _pairs(P, scope, _cover_or_none(P), hom_h):
        try:
            fs(N)
        except BudgetExceeded as e:
            inconclusive.append(str(e))
            continue
        for M in sources:
            try:
                hs = qualifying_maps(M, N, lift.h_class, lift.h_onto, budget)
                found = attempt(M, N, extremal(hs, flip))
                if found:
                    return found
            except BudgetExceeded as e:
                inconclusive.append(f"{M.name}->{N.name}: {e}")
    if inconclusive:
        return Verdict("inconclusive", kind, P.name, scope=scope.label(P),
                       note=_note(inconclusive))
    return Verdict("true", kind, P.name, certificate={"lifts-checked": checked},
                   scope=scope.label(P))


# --- splitting criteria ----------------------------------------------------------------

SPLIT_FOR = {"plain": "split", "preceq-h": "preceq-split", "h": "h-split",
             "succeq": "succeq-split"}


def splitting_criterion(P: SystemicModule, split_kind: str, gens=None, budget=None) -> Verdict:
    """Does the free cover of P split in the given sense?"""
    kind = {v: k for k, v in SPLIT_FOR.items()}.get(split_kind, split_kind)
    try:
        F, pi = free_cover(P, gens)
    except SizeBoundExceeded as e:
        return Verdict("inconclusive", kind, P.name, note=str(e))
    try:
        cert = find_splitting(pi, split_kind, budget)
    except BudgetExceeded as e:
        return Verdict("inconclusive", kind, P.name, note=str(e))
    if cert is None:
        return Verdict("false", kind, P.name, counterexample={"cover": pi})
    return Verdict("true", kind, P.name, certificate=cert)


def every_cover_splits(P, cls: str, onto: str, split_kind: str, sources,
                       budget=None, kind: str = "") -> Verdict:
    """Every map of the given class and onto-ness from a source module to P splits."""
    inconclusive, checked = [], 0
    for M in sources:
        try:
            for pi in qualifying_maps(M, P, cls, onto, budget):
                checked += 1
                if find_splitting(pi, split_kind, budget, check=False) is None:
                    return Verdict("false", kind, P.name, counterexample={"pi": pi,
                                                                          "source": M.name})
        except BudgetExceeded as e:
            inconclusive.append(f"{M.name}: {e}")
    if inconclusive:
        return Verdict("inconclusive", kind, P.name, note=_note(inconclusive))
    return Verdict("true", kind, P.name, certificate={"maps-split": checked})


def hom_functor_onto(P, h_class: str, h_onto: str, mor_class: str, rel: str, pairs,
                     budget=None, kind: str = "", extra=()) -> Verdict:
    """Is g ↦ hg from Mor(P, M) to Mor(P, M′) onto up to ``rel`` for every h in scope?

    Both morphism sets are enumerated in full and compared as tables. ``extra`` holds
    further maps h tried alongside the scope.
    """
    inconclusive = []
    mors = {}

    def mor(X):
        if X not in mors:
            try:
                mors[X] = bounded_maps(P, X, mor_class, budget)
            except BudgetExceeded as e:
                mors[X] = e
        return mors[X]

    def check(M, N, hs):
        B, A = mor(N), mor(M)
        for X in (A, B):
            if isinstance(X, BudgetExceeded):
                inconclusive.append(str(X))
                return None
        if not B:
            return None
        if not A:
            return Verdict("false", kind, P.name, counterexample={"f": B[0]})
        L = np.array(N.le, dtype=bool)
        Bt = np.array([f.table for f in B])
        At = np.array([g.table for g in A])
        for h in hs:
            HG = np.asarray(h.table)[At]  # one row per composite hg
            for j in range(len(B)):
                f = Bt[j]
                if rel == "le":
                    ok = L[f[None, :], HG].all(axis=1).any()
                elif rel == "ge":
                    ok = L[HG, f[None, :]].all(axis=1).any()
                else:
                    ok = (HG == f[None, :]).all(axis=1).any()
                if not ok:
                    return Verdict("false", kind, P.name, counterexample={
                        "h": (M.name, N.name, h), "f": B[j]})
        return None

    for h in extra:
        found = check(h.source, h.target, [h])
        if found:
            return found
    for N, sources in pairs:
        if isinstance(mor(N), BudgetExceeded):
            inconclusive.append(str(mor(N)))
            continue
        if not mor(N):
            continue
        for M in sources:
            try:
                hs = qualifying_maps(M, N, h_class, h_onto, budget)
            except BudgetExceeded as e:
                inconclusive.append(f"{M.name}->{N.name}: {e}")
                continue
            if hs:
                found = check(M, N, hs)
                if found:
                    return found
    if inconclusive:
        return Verdict("inconclusive", kind, P.name, note=_note(inconclusive))
    return Verdict("true", kind, P.name)


def is_projective(P: SystemicModule, kind: str, scope: Scope | None = None,
                  budget=None) -> Verdict:
    """Projectivity of the given kind.

    preceq-h, h and succeq are decided by splitting the free cover and are
    scope-free. plain asks every onto homomorphism into P from the scope to
    split. preceq checks the lifting definition over the scope.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown projectivity kind {kind!r}")
    scope = scope or Scope()
    if kind == "preceq":
        return lifting_property(P, "preceq", scope, budget)
    if kind == "plain":
        v = every_cover_splits(P, "homomorphism", "onto", "split",
                               scope.sources(P, _cover_or_none(P)), budget, kind="plain")
        v.scope = scope.label(P)
        return v
    return splitting_criterion(P, SPLIT_FOR[kind], budget=budget)


# --- equivalent characterizations --------------------------------------------------------

EQUIVALENCES = {
    # version: (lifting kind, class and onto of maps to split, splitting, cover splitting,
    #           h class and onto for the Mor functor, Mor class, comparison)
    "preceq": ("preceq-h", ("homomorphism", "preceq-onto"), "preceq-split", "preceq-split",
               ("homomorphism", "preceq-onto"), "preceq", "le"),
    "h": ("h", ("homomorphism", "preceq-onto"), "h-split", "h-split",
          ("homomorphism", "preceq-onto"), "homomorphism", "le"),
    "succeq": ("succeq", ("succeq", "succeq-onto"), "succeq-split", "succeq-h-split",
               ("succeq", "succeq-onto"), "succeq", "ge"),
    # the same four conditions with ⪯-morphisms in place of ⪰-morphisms for the maps
    # being split and for the functor, matching the lifting definition
    "succeq-preceq": ("succeq", ("preceq", "succeq-onto"), "succeq-split", "succeq-h-split",
                      ("preceq", "succeq-onto"), "succeq", "ge"),
}


def _cover_probe(P, cls: str, onto: str) -> list[MapTable]:
    """The free cover projection onto P when it qualifies as an h of the given class."""
    try:
        F, pi = free_cover(P)
    except SizeBoundExceeded:
        return []
    if F.size > 1 and _LABEL[cls] in classify_map(pi).labels and _ONTO[onto](pi):
        return [pi]
    return []


def characterizations(P: SystemicModule, version: str, scope: Scope | None = None,
                      budget=None) -> dict[str, Verdict]:
    """The four equivalent conditions for one projectivity version, each decided on its own.

    lifting: the lifting definition; splits: every qualifying map onto P splits;
    cover: the free cover splits; functor: Mor(P, h) is onto up to the comparison.
    """
    scope = scope or Scope()
    lk, (pc, po), sk, ck, (hc, ho), mc, rel = EQUIVALENCES[version]
    cover = _cover_or_none(P)
    hom_h = hc == "homomorphism"
    out = {
        "lifting": lifting_property(P, lk, scope, budget),
        "splits": every_cover_splits(P, pc, po, sk, scope.sources(P, cover), budget,
                                     kind=version),
        "cover": splitting_criterion(P, ck, budget=budget),
        "functor": hom_functor_onto(P, hc, ho, mc, rel, _pairs(P, scope, cover, hom_h),
                                    budget, kind=version, extra=_cover_probe(P, hc, ho)),
    }
    for v in out.values():
        v.kind = version
    return out


# --- dual bases ------------------------------------------------------------------------

DUAL_KINDS = {"preceq-h": ("preceq", "le"), "h": ("homomorphism", "le"),
              "succeq-h": ("succeq", "ge")}


@dataclass
class DualBasisCertificate:
    module: SystemicModule
    generators: tuple[int, ...]
    maps: tuple[MapTable, ...]
    kind: str
    witnesses: tuple[tuple[str, str], ...] = field(default=())

    def combination(self, a: int) -> int:
        P = self.module
        v = P.zero
        for g, p in zip(self.maps, self.generators):
            v = P.add[v][P.act[g.table[a]][p]]
        return v

    def verify(self) -> bool:
        cls, rel = DUAL_KINDS[self.kind]
        P = self.module
        if any(_LABEL[cls] not in classify_map(g).labels for g in self.maps):
            return False
        return all(_rel(P.le, rel, a, self.combination(a)) for a in range(P.size))


def dual_basis(P: SystemicModule, gens=None, kind: str = "preceq-h", budget=None) -> Verdict:
    """Coordinate maps gᵢ: P → A with a ⪯ Σ gᵢ(a)pᵢ (⪰ for succeq-h).

    The maps are searched coordinate by coordinate: at each element of P every
    coordinate gets its candidate values from its own morphism constraints, then
    the tuple is checked against the combination.
    """
    cls, rel = DUAL_KINDS[kind]
    gens = sorted(P.tangibles) if gens is None else [P.idx(g) for g in gens]
    if rel == "le" and not preceq_generates(gens, P):
        raise HypothesisError("generators do not ⪯-generate the module")
    if rel == "ge" and not generates(gens, P):
        raise HypothesisError("generators do not generate the module")
    budget = default_budget() if budget is None else budget
    S = P.scalars
    A = system_module(S)
    prob = _base_problem(P, A, cls, "eq")
    n, q, k = P.size, A.size, len(gens)
    L = P.le
    tact, tadd, tle, tneg = prob.tact, prob.tadd, prob.tle, prob.tneg

    def holds(c, phi):
        code, x, y, z = c
        if code == 0:
            return tneg[phi[x]] == phi[y]
        if code == 1:
            return phi[y] == tact[z * q + phi[x]]
        if code == 2:
            lhs, rhs = phi[z], tadd[phi[x] * q + phi[y]]
            r = prob.add_rel
            return lhs == rhs if r == 0 else (tle[lhs * q + rhs] if r == 1
                                              else tle[rhs * q + lhs])
        return bool(tle[phi[x] * q + phi[y]])

    phis = [[-1] * n for _ in range(k)]
    evals = 0

    def options(b):
        per = []
        for i in range(k):
            phi = phis[i]
            vals = [A.zero] if b == P.zero else range(q)
            good = []
            for v in vals:
                phi[b] = v
                if all(holds(c, phi) for c in prob.cons[b]):
                    good.append(v)
            phi[b] = -1
            if not good:
                return None
            per.append(good)
        return per

    def combo(vals):
        v = P.zero
        for a, p in zip(vals, gens):
            v = P.add[v][P.act[a][p]]
        return v

    per = options(0)
    iters = [iter(cartesian(*per)) if per is not None else iter(())]
    found = None
    while iters:
        b = len(iters) - 1
        try:
            vals = next(iters[-1])
        except StopIteration:
            iters.pop()
            for i in range(k):
                phis[i][b] = -1
            continue
        evals += 1
        if evals > budget:
            return Verdict("inconclusive", kind, P.name, note="dual basis search budget exhausted")
        if not _rel(L, rel, b, combo(vals)):
            continue
        for i in range(k):
            phis[i][b] = vals[i]
        if b + 1 == n:
            found = [tuple(phi) for phi in phis]
            break
        per = options(b + 1)
        iters.append(iter(cartesian(*per)) if per is not None else iter(()))
    if found is None:
        return Verdict("false", kind, P.name, counterexample={"generators": P.names(gens)})
    maps = tuple(MapTable(P, A, t, f"g{i + 1}") for i, t in enumerate(found))
    cert = DualBasisCertificate(P, tuple(gens), maps, kind)
    cert.witnesses = tuple((P.elements[a], P.elements[cert.combination(a)]) for a in range(n))
    return Verdict("true", kind, P.name, certificate=cert)


# --- direct summands of free modules ------------------------------------------------------

def is_strongly_projective(P: SystemicModule, max_rank: int = 2, budget=None) -> Verdict:
    """Search a complement Q in the catalog with P ⊕ Q isomorphic to a free module."""
    S = P.scalars
    cands = list(_catalog(S))
    for n in range(1, max_rank + 1):
        if S.size ** n > SIZE_BOUND:
            break
        F = free_module(S, n)
        if F.size % P.size:
            continue
        want = F.size // P.size
        pool = [Q for Q in cands if Q.size == want]
        if want == F.size:
            pool = [zero_module(S)] if P.size == 1 else pool
        if want == 1:
            pool = [zero_module(S)]
        for Q in pool:
            D = P if Q.size == 1 else direct_sum([P, Q])
            if len(D.tangibles) != len(F.tangibles):
                continue
            try:
                iso = find_isomorphism(D, F, budget)
            except BudgetExceeded as e:
                return Verdict("inconclusive", "strongly", P.name, note=str(e))
            if iso is not None:
                return Verdict("true", "strongly", P.name,
                               certificate={"complement": Q, "free": F, "iso": iso})
    return Verdict("false", "strongly", P.name,
                   scope=f"complements from the catalog, free rank<={max_rank}")


# --- replay of the kernel-extension argument ---------------------------------------------

def verify_sch2(P: SystemicModule, P1: SystemicModule, pi: MapTable,
                scope: Scope | None = None, budget=None, max_pairs: int | None = None):
    """Replay the lift construction f̃(b) = f̃₁(π b) + f̃₂(π₂ b) for a ⪯-onto
    homomorphism π: P → P1 whose source image P1 and kernel are (⪯,h)-projective."""
    from .report import VerificationReport

    scope = scope or Scope()
    c = classify_map(pi)
    if not (c.is_homomorphism and is_preceq_onto(pi)):
        raise HypothesisError("π must be a ⪯-onto homomorphism")
    K = ker_mod_module(pi)
    for mod, label in ((P1, "image"), (K, "kernel")):
        if is_projective(mod, "preceq-h", budget=budget).status != "true":
            raise HypothesisError(f"{label} module {mod.name} is not certified (⪯,h)-projective")
    rep = VerificationReport("sch2", {"P": P.name, "P1": P1.name, "targets": scope.label(P)})
    cert = find_splitting(pi, "preceq-split", budget)
    rep.check("retract", "identity-lift", cert is not None, note="1 ⪯ πν")
    if cert is None:
        return rep
    nu = cert.nu
    nupi = pi.then(nu)
    pi2 = one_minus(nupi)
    kset = set(_ker_mod(pi))
    bad = [P.elements[b] for b in range(P.size) if pi2.table[b] not in kset]
    rep.check("complement-in-kernel", "kernel-membership", not bad, bad[:1])
    N1 = P1.null
    bad = [P.elements[b] for b in range(P.size) if pi.table[pi2.table[b]] not in N1]
    rep.check("image-of-complement-null", "kernel-membership", not bad, bad[:1])
    rep.check("complement-idempotent", "complement-idempotent",
              is_preceq_idempotent_map(pi2), note="(1(−)νπ)² ⪰ 1(−)νπ")
    kpos = {b: i for i, b in enumerate(K.embedding)}
    tested = failures = 0
    pairs = [(M, N) for N, sources in _pairs(P, scope, None, True) for M in sources]
    for M, N in pairs:
        hs = qualifying_maps(M, N, "homomorphism", "preceq-onto", budget)
        if not hs:
            continue
        fs = bounded_maps(P, N, "preceq", budget)
        for h in hs:
            for f in fs:
                if max_pairs is not None and tested >= max_pairs:
                    break
                tested += 1
                f1 = lift_search(nu.then(f), h, "preceq-h", budget)
                fK = MapTable(K, N, tuple(f.table[b] for b in K.embedding))
                f2 = lift_search(fK, h, "preceq-h", budget)
                if f1 is None or f2 is None:
                    failures += 1
                    rep.add(f"lift-{tested}", "component-lifts", "fail",
                            {"h": h, "f": f, "missing": "image" if f1 is None else "kernel"})
                    continue
                table = tuple(M.add[f1.table[pi.table[b]]][f2.table[kpos[pi2.table[b]]]]
                              for b in range(P.size))
                ft = MapTable(P, M, table)
                ok = map_le(f, ft.then(h)) and classify_map(ft).is_preceq_morphism
                if not ok:
                    failures += 1
                    rep.add(f"lift-{tested}", "assembled-lift", "fail", {"h": h, "f": f,
                                                                        "lift": ft})
    rep.check("assembled-lifts", "assembled-lift", failures == 0,
              {"failures": failures}, note=f"{tested} (h, f) pairs")
    v = is_projective(P, "preceq-h", budget=budget)
    rep.add("conclusion", "projective-extension",
            {"true": "pass", "false": "fail", "inconclusive": "inconclusive"}[v.status],
            None if v.status == "true" else str(v), note=str(v))
    return rep
