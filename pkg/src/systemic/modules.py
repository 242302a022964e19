"""Finite systemic modules, maps between them, kernels and image sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Iterator

import numpy as np

from .core import AxiomCheck, AxiomReport, FiniteSystem, UnknownElement, additive_closure
from .search import BudgetExceeded, MapProblem, default_budget, solve

SIZE_BOUND = 4096


class SizeBoundExceeded(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SystemicModule:
    scalars: FiniteSystem
    elements: tuple[str, ...]
    zero: int
    add: tuple[tuple[int, ...], ...]
    act: tuple[tuple[int, ...], ...]  # act[s][m] for every scalar s
    tangibles: frozenset[int]
    neg: tuple[int, ...]
    le: tuple[tuple[bool, ...], ...]
    name: str = "module"
    parent: "SystemicModule | None" = field(default=None, repr=False)
    embedding: tuple[int, ...] | None = field(default=None, repr=False)
    parts: tuple["SystemicModule", ...] | None = field(default=None, repr=False)
    coords: tuple[tuple[int, ...], ...] | None = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    @cached_property
    def _index(self):
        return {e: i for i, e in enumerate(self.elements)}

    def idx(self, name) -> int:
        if isinstance(name, int):
            return name
        try:
            return self._index[name]
        except KeyError:
            raise UnknownElement(name) from None

    def names(self, indices: Iterable[int]) -> frozenset[str]:
        return frozenset(self.elements[i] for i in indices)

    def key(self):
        return self._key

    @cached_property
    def _key(self):
        return (self.scalars.key(), self.elements, self.zero, self.add, self.act,
                tuple(sorted(self.tangibles)), self.neg, self.le)

    @cached_property
    def _hash(self):
        return hash(self._key)

    def __eq__(self, other):
        return self is other or (isinstance(other, SystemicModule) and
                                 self._hash == other._hash and self._key == other._key)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"SystemicModule({self.name!r}, size={self.size})"

    @cached_property
    def null(self) -> frozenset[int]:
        return frozenset(b for b in range(self.size) if self.le[self.zero][b])

    @cached_property
    def quasi_zeros(self) -> frozenset[int]:
        return frozenset(self.add[b][self.neg[b]] for b in range(self.size))

    def minus(self, x: int, y: int) -> int:
        """x (−) y."""
        return self.add[x][self.neg[y]]


def _ordered(tabs):
    return tuple(tuple(r) for r in tabs)


def free_module(S: FiniteSystem, n: int, bound: int = SIZE_BOUND) -> SystemicModule:
    if n < 1:
        raise ValueError("rank must be at least 1")
    M = system_module(S)
    return M if n == 1 else direct_sum([M] * n, bound=bound, name=f"{S.name}^{n}")


def system_module(S: FiniteSystem) -> SystemicModule:
    """The system as a module over itself."""
    return SystemicModule(S, S.elements, S.zero, S.add, S.mul, S.tangibles, S.neg, S.le,
                          S.name)


def zero_module(S: FiniteSystem) -> SystemicModule:
    return SystemicModule(S, ("0",), 0, ((0,),), tuple((0,) for _ in range(S.size)),
                          frozenset(), (0,), ((True,),), "zero")


def tuple_name(parts) -> str:
    return "[" + ",".join(parts) + "]"


def direct_sum(Ms: list[SystemicModule], bound: int = SIZE_BOUND,
               name: str | None = None) -> SystemicModule:
    if not Ms:
        raise ValueError("empty direct sum")
    S = Ms[0].scalars
    if any(M.scalars != S for M in Ms):
        raise ValueError("summands over different scalars")
    if len(Ms) == 1:
        return Ms[0]
    total = 1
    for M in Ms:
        total *= M.size
    if total > bound:
        raise SizeBoundExceeded(f"direct sum has {total} elements (bound {bound})")
    coords = list(product(*(range(M.size) for M in Ms)))
    sizes = [M.size for M in Ms]
    weights = []
    w = 1
    for s in reversed(sizes):
        weights.append(w)
        w *= s
    weights.reverse()

    def ix(t):
        return sum(a * b for a, b in zip(t, weights))

    cols = np.array(coords, dtype=np.int64).T
    wv = np.array(weights, dtype=np.int64)
    add = np.zeros((total, total), dtype=np.int64)
    le = np.ones((total, total), dtype=bool)
    act = np.zeros((S.size, total), dtype=np.int64)
    neg = np.zeros(total, dtype=np.int64)
    for M, c, w in zip(Ms, cols, wv):
        add += w * np.asarray(M.add, dtype=np.int64)[c[:, None], c[None, :]]
        le &= np.asarray(M.le, dtype=bool)[c[:, None], c[None, :]]
        act += w * np.asarray(M.act, dtype=np.int64)[:, c]
        neg += w * np.asarray(M.neg, dtype=np.int64)[c]
    add = tuple(map(tuple, add.tolist()))
    act = tuple(map(tuple, act.tolist()))
    neg = tuple(neg.tolist())
    le = tuple(map(tuple, le.tolist()))
    tang = set()
    for i, M in enumerate(Ms):
        for t in M.tangibles:
            tang.add(ix([t if j == i else N.zero for j, N in enumerate(Ms)]))
    els = tuple(tuple_name([M.elements[a] for M, a in zip(Ms, x)]) for x in coords)
    return SystemicModule(S, els, ix([M.zero for M in Ms]), add, act, frozenset(tang), neg, le,
                          name or "+".join(M.name for M in Ms), parts=tuple(Ms),
                          coords=tuple(coords))


def closure(M: SystemicModule, seeds: Iterable[int]) -> frozenset[int]:
    """Smallest subset containing the seeds and 0, closed under +, tangible action, negation."""
    T = sorted(M.scalars.tangibles)
    got = {M.zero}
    todo = list(set(seeds))
    while todo:
        x = todo.pop()
        if x in got:
            continue
        got.add(x)
        for y in [M.neg[x]] + [M.act[t][x] for t in T] + [M.add[x][y] for y in list(got)]:
            if y not in got:
                todo.append(y)
    return frozenset(got)


def is_closed(M: SystemicModule, members) -> bool:
    members = set(members)
    return M.zero in members and closure(M, members) == members


def irreducibles(M, members) -> list[int]:
    """Nonzero members that are not a sum of two members other than 0 and themselves."""
    nz = [x for x in sorted(members) if x != M.zero]
    reducible = set()
    for x in nz:
        row = M.add[x]
        for y in nz:
            z = row[y]
            if z != x and z != y:
                reducible.add(z)
    return [b for b in nz if b not in reducible]


def submodule_tangibles(M, members) -> frozenset[int]:
    """Tangibles of M inside ``members``, enlarged until they generate additively."""
    members = frozenset(members)
    base = members & M.tangibles
    if additive_closure(M.add, M.zero, base) == members:
        return base
    T = sorted(M.scalars.tangibles)
    grown = set(base)
    for b in irreducibles(M, members):
        grown.update(M.act[t][b] for t in T)
        grown.add(b)
    if additive_closure(M.add, M.zero, grown) == members:
        return frozenset(grown)
    return frozenset(members - {M.zero})


def submodule(M: SystemicModule, members: Iterable[int], name: str | None = None,
              tangibles: Iterable[int] | None = None) -> SystemicModule:
    members = sorted(set(members))
    if not is_closed(M, members):
        raise ValueError("subset is not closed under the module operations")
    pos = {b: i for i, b in enumerate(members)}
    tang = submodule_tangibles(M, members) if tangibles is None else frozenset(tangibles)
    S = M.scalars
    return SystemicModule(
        S, tuple(M.elements[b] for b in members), pos[M.zero],
        tuple(tuple(pos[M.add[x][y]] for y in members) for x in members),
        tuple(tuple(pos[M.act[s][x]] for x in members) for s in range(S.size)),
        frozenset(pos[t] for t in tang), tuple(pos[M.neg[x]] for x in members),
        tuple(tuple(M.le[x][y] for y in members) for x in members),
        name or f"sub({M.name})", parent=M, embedding=tuple(members))


def null_submodule(M: SystemicModule) -> SystemicModule:
    return submodule(M, M.null, name=f"Null({M.name})")


def check_module(M: SystemicModule) -> AxiomReport:
    S = M.scalars
    n = M.size
    r, sr = range(n), range(S.size)
    A, X, N, L, z = M.add, M.act, M.neg, M.le, M.zero
    T = sorted(S.tangibles)
    E = M.elements

    def first(gen, names):
        for w in gen:
            return tuple(nm[i] for nm, i in zip(names, w))
        return None

    pairs = [(a, b) for a, b in product(r, r) if L[a][b]]
    spairs = [(a, b) for a, b in product(sr, sr) if S.le[a][b]]
    se = S.elements
    span = additive_closure(A, z, M.tangibles)
    laws = [
        ("add-commutative", ((a, b) for a, b in product(r, r) if A[a][b] != A[b][a]), (E, E)),
        ("add-associative", ((a, b, c) for a, b, c in product(r, r, r)
                             if A[A[a][b]][c] != A[a][A[b][c]]), (E, E, E)),
        ("add-identity", ((a,) for a in r if A[a][z] != a), (E,)),
        ("action-distributes-over-module-sum", ((s, a, b) for s in sr for a, b in product(r, r)
                                               if X[s][A[a][b]] != A[X[s][a]][X[s][b]]),
         (se, E, E)),
        ("action-distributes-over-scalar-sum", ((s, t, a) for s, t in product(sr, sr) for a in r
                                               if X[S.add[s][t]][a] != A[X[s][a]][X[t][a]]),
         (se, se, E)),
        ("action-associative", ((s, t, a) for s, t in product(sr, sr) for a in r
                                if X[S.mul[s][t]][a] != X[s][X[t][a]]), (se, se, E)),
        ("action-unit", ((a,) for a in r if X[S.one][a] != a), (E,)),
        ("action-zero", ((s, a) for s in sr for a in r
                         if X[s][z] != z or X[S.zero][a] != z), (se, E)),
        ("negation-involution", ((a,) for a in r if N[N[a]] != a), (E,)),
        ("negation-additive", ((a, b) for a, b in product(r, r)
                               if N[A[a][b]] != A[N[a]][N[b]]), (E, E)),
        ("negation-action", ((s, a) for s in sr for a in r
                             if X[S.neg[s]][a] != N[X[s][a]] or X[s][N[a]] != N[X[s][a]]),
         (se, E)),
        ("tangibles-closed", ((t, a) for t in T for a in sorted(M.tangibles)
                              if X[t][a] not in M.tangibles), (se, E)),
        ("tangibles-generate", ((a,) for a in r if a not in span), (E,)),
        ("surpass-reflexive", ((a,) for a in r if not L[a][a]), (E,)),
        ("surpass-transitive", ((a, b, c) for a, b in pairs for c in r
                                if L[b][c] and not L[a][c]), (E, E, E)),
        ("surpass-quasi-zeros-null", ((a,) for a in r if not L[z][A[a][N[a]]]), (E,)),
        ("surpass-negation", ((a, b) for a, b in pairs if not L[N[a]][N[b]]), (E, E)),
        ("surpass-additive", ((a, b, c, d) for a, b in pairs for c, d in pairs
                              if not L[A[a][c]][A[b][d]]), (E, E, E, E)),
        ("monotone-action", ((s, t, a, b) for s, t in spairs for a, b in pairs
                             if not L[X[s][a]][X[t][b]]), (se, se, E, E)),
    ]
    report = AxiomReport(classification="module")
    for name, gen, nms in laws:
        w = first(gen, nms)
        report.checks.append(AxiomCheck(name, "fail" if w is not None else "pass", w or (),
                                        "module"))
    if report.failed:
        report.classification = "not-module"
    return report


# --- maps ------------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class MapTable:
    source: SystemicModule
    target: SystemicModule
    table: tuple[int, ...]
    name: str = "f"

    def __post_init__(self):
        if len(self.table) != self.source.size or \
                any(not 0 <= v < self.target.size for v in self.table):
            raise ValueError("map table is not total")

    def __call__(self, b):
        return self.target.elements[self.table[self.source.idx(b)]]

    def __eq__(self, other):
        return isinstance(other, MapTable) and self.table == other.table and \
            self.source == other.source and self.target == other.target

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        pairs = ", ".join(f"{self.source.elements[i]}->{self.target.elements[v]}"
                          for i, v in enumerate(self.table))
        return f"MapTable({pairs})"

    def then(self, g: "MapTable") -> "MapTable":
        """g after self."""
        return MapTable(self.source, g.target, tuple(g.table[v] for v in self.table))

    @property
    def image(self) -> frozenset[int]:
        return frozenset(self.table)


def map_from_names(M, N, pairs: dict, name="f") -> MapTable:
    return MapTable(M, N, tuple(N.idx(pairs[e]) for e in M.elements), name)


def identity(M) -> MapTable:
    return MapTable(M, M, tuple(range(M.size)), "id")


def zero_map(M, N) -> MapTable:
    return MapTable(M, N, (N.zero,) * M.size, "0")


def inclusion(sub: SystemicModule, ambient: SystemicModule | None = None) -> MapTable:
    ambient = ambient or sub.parent
    emb = sub.embedding if sub.parent is ambient or sub.parent == ambient else \
        tuple(ambient.idx(e) for e in sub.elements)
    return MapTable(sub, ambient, tuple(emb), "incl")


def corestrict(f: MapTable, sub: SystemicModule) -> MapTable:
    """f viewed as a map into a submodule of its target containing the image."""
    pos = {b: i for i, b in enumerate(sub.embedding)}
    return MapTable(f.source, sub, tuple(pos[v] for v in f.table), f.name)


def restrict(f: MapTable, sub: SystemicModule) -> MapTable:
    return MapTable(sub, f.target, tuple(f.table[b] for b in sub.embedding), f.name)


def pointwise_sum(f: MapTable, g: MapTable) -> MapTable:
    N = f.target
    return MapTable(f.source, N, tuple(N.add[a][b] for a, b in zip(f.table, g.table)))


def one_minus(f: MapTable) -> MapTable:
    """b ↦ b (−) f(b) for an endomorphism f."""
    M = f.source
    return MapTable(M, M, tuple(M.minus(b, f.table[b]) for b in range(M.size)), "1-f")


def map_le(f: MapTable, g: MapTable) -> bool:
    """f ⪯ g pointwise."""
    L = f.target.le
    return all(L[a][b] for a, b in zip(f.table, g.table))


def _conditions(f: MapTable) -> dict[str, bool]:
    M, N, t = f.source, f.target, f.table
    n = M.size
    S = M.scalars
    r = range(n)
    sums = [(x, y) for x in r for y in range(x, n)]
    return {
        "zero": t[M.zero] == N.zero,
        "negation": all(t[M.neg[b]] == N.neg[t[b]] for b in r),
        "additive": all(t[M.add[x][y]] == N.add[t[x]][t[y]] for x, y in sums),
        "subadditive": all(N.le[t[M.add[x][y]]][N.add[t[x]][t[y]]] for x, y in sums),
        "superadditive": all(N.le[N.add[t[x]][t[y]]][t[M.add[x][y]]] for x, y in sums),
        "action": all(t[M.act[a][b]] == N.act[a][t[b]] for a in S.tangibles for b in r),
        "monotone": all(N.le[t[x]][t[y]] for x in r for y in r if M.le[x][y]),
    }


@dataclass(frozen=True)
class MapClass:
    labels: frozenset[str]
    is_null: bool
    tangible_preserving: bool
    tangible_image_generates: bool

    @property
    def is_homomorphism(self):
        return "homomorphism" in self.labels

    @property
    def is_preceq_morphism(self):
        return "preceq-morphism" in self.labels

    @property
    def is_succeq_morphism(self):
        return "succeq-morphism" in self.labels


def classify_map(f: MapTable) -> MapClass:
    c = _conditions(f)
    common = c["zero"] and c["negation"] and c["action"] and c["monotone"]
    labels = set()
    if common and c["additive"]:
        labels.add("homomorphism")
    if common and c["subadditive"]:
        labels.add("preceq-morphism")
    if common and c["superadditive"]:
        labels.add("succeq-morphism")
    N = f.target
    img = f.image
    hit = img & N.tangibles
    gen = additive_closure(N.add, N.zero, hit) >= img
    return MapClass(frozenset(labels), img <= N.null,
                    all(f.table[b] in N.tangibles for b in f.source.tangibles), gen)


def is_homomorphism(f):
    return classify_map(f).is_homomorphism


def is_preceq_morphism(f):
    return classify_map(f).is_preceq_morphism


def is_succeq_morphism(f):
    return classify_map(f).is_succeq_morphism


def is_null_map(f) -> bool:
    return f.image <= f.target.null


def cyclic(M, b) -> frozenset[int]:
    return closure(M, [b])


def _ker_mod(f: MapTable) -> frozenset[int]:
    M, null = f.source, f.target.null
    seeds = [b for b in range(M.size) if all(f.table[x] in null for x in cyclic(M, b))]
    return closure(M, seeds)


def ker_mod(f: MapTable) -> frozenset[str]:
    return f.source.names(_ker_mod(f))


def ker_mod_module(f: MapTable) -> SystemicModule:
    return submodule(f.source, _ker_mod(f), name=f"ker({f.name})")


@dataclass(frozen=True)
class CongruencePairSet:
    module: SystemicModule
    pairs: frozenset[tuple[int, int]]

    def names(self) -> frozenset[tuple[str, str]]:
        E = self.module.elements
        return frozenset((E[a], E[b]) for a, b in self.pairs)

    def is_congruence(self, diagonal: Iterable[int] | None = None) -> bool:
        M, P = self.module, self.pairs
        diag = range(M.size) if diagonal is None else diagonal
        if any((b, b) not in P for b in diag):
            return False
        if any((b, a) not in P for a, b in P):
            return False
        by_first = {}
        for a, b in P:
            by_first.setdefault(a, set()).add(b)
        if any((a, c) not in P for a, b in P for c in by_first.get(b, ())):
            return False
        return self.is_closed()

    def is_closed(self) -> bool:
        M, P = self.module, self.pairs
        T = M.scalars.tangibles
        return all((M.add[a][c], M.add[b][d]) in P for a, b in P for c, d in P) and \
            all((M.act[t][a], M.act[t][b]) in P for t in T for a, b in P) and \
            all((M.neg[a], M.neg[b]) in P for a, b in P)

    def as_module(self, square: SystemicModule | None = None) -> SystemicModule:
        """The pair set as a submodule of M ⊕ M."""
        M = self.module
        square = square or direct_sum([M, M])
        return submodule(square, [a * M.size + b for a, b in self.pairs],
                         name=f"cong({M.name})")


def ker_N(f: MapTable) -> CongruencePairSet:
    t = f.table
    r = range(f.source.size)
    return CongruencePairSet(f.source, frozenset((a, b) for a in r for b in r if t[a] == t[b]))


def ker_N_preceq(f: MapTable) -> CongruencePairSet:
    t, null = f.table, f.target.null
    r = range(f.source.size)
    return CongruencePairSet(f.source, frozenset((a, b) for a in r for b in r
                                                 if t[a] == t[b] and t[a] in null))


def _image_preceq(f) -> frozenset[int]:
    N = f.target
    return frozenset(b for b in range(N.size) if any(N.le[b][v] for v in f.image))


def _image_succeq(f) -> frozenset[int]:
    N = f.target
    return frozenset(b for b in range(N.size) if any(N.le[v][b] for v in f.image))


def image_preceq(f) -> frozenset[str]:
    return f.target.names(_image_preceq(f))


def image_succeq(f) -> frozenset[str]:
    return f.target.names(_image_succeq(f))


def is_preceq_onto(f) -> bool:
    return len(_image_preceq(f)) == f.target.size


def is_succeq_onto(f) -> bool:
    return len(_image_succeq(f)) == f.target.size


def is_onto(f) -> bool:
    return len(f.image) == f.target.size


def is_h_onto(f) -> bool:
    return is_homomorphism(f) and is_preceq_onto(f)


def is_null_monic(f) -> bool:
    return _ker_mod(f) <= f.source.null


def is_N_monic(f) -> bool:
    return len(f.image) == f.source.size


def is_quasi_isomorphism(f, kind="preceq") -> bool:
    c = classify_map(f)
    if kind == "N":
        return c.is_homomorphism and is_onto(f) and is_N_monic(f)
    if kind == "preceq":
        return c.is_preceq_morphism and is_preceq_onto(f) and is_null_monic(f)
    raise ValueError(f"unknown quasi-isomorphism kind {kind!r}")


# --- generation ------------------------------------------------------------------------

def tangible_span(M, gens) -> frozenset[int]:
    """All finite sums of tangible multiples of the generators (0 included)."""
    T = sorted(M.scalars.tangibles)
    seeds = {M.act[t][M.idx(g)] for g in gens for t in T}
    return additive_closure(M.add, M.zero, seeds)


def generates(gens, M) -> bool:
    return len(tangible_span(M, gens)) == M.size


def preceq_generates(gens, M) -> bool:
    span = tangible_span(M, gens)
    return all(any(M.le[b][s] for s in span) for b in range(M.size))


def succeq_generates(gens, M) -> bool:
    span = tangible_span(M, gens)
    return all(any(M.le[s][b] for s in span) for b in range(M.size))


def orbit_representatives(M, elements=None) -> list[int]:
    """One element per tangible-scalar orbit, smallest index first."""
    T = sorted(M.scalars.tangibles)
    seen, reps = set(), []
    for b in sorted(M.tangibles if elements is None else elements):
        if b in seen:
            continue
        reps.append(b)
        seen.update(M.act[t][b] for t in T)
    return reps


# --- enumeration -----------------------------------------------------------------------

KINDS = {"homomorphism": "homomorphism", "hom": "homomorphism", "h": "homomorphism",
         "preceq": "preceq", "preceq-morphism": "preceq",
         "succeq": "succeq", "succeq-morphism": "succeq", "any": "any"}


@lru_cache(maxsize=512)
def _base_problem(M, N, kind, action) -> MapProblem:
    return MapProblem(M, N, kind, None, action)


def map_problem(M, N, kind="homomorphism", allowed=None, action="eq") -> MapProblem:
    base = _base_problem(M, N, KINDS[kind], action)
    return base if allowed is None else base.restricted(allowed)


def enumerate_maps(M, N, kind="homomorphism", allowed=None, budget: int | None = None,
                   limit: int | None = None, action="eq", backend=None) -> Iterator[MapTable]:
    """Yield maps of the given kind in lexicographic order of their tables.

    Raises BudgetExceeded (after yielding what was found) if the search was cut short.
    """
    budget = default_budget() if budget is None else budget
    try:
        sols = solve(map_problem(M, N, kind, allowed, action), limit, budget, backend)
        exc = None
    except BudgetExceeded as e:
        sols, exc = e.found, e
    for s in sols:
        yield MapTable(M, N, s)
    if exc is not None:
        raise exc


def all_maps(M, N, kind="homomorphism", allowed=None, budget=None, action="eq") -> list[MapTable]:
    return list(enumerate_maps(M, N, kind, allowed, budget, action=action))


def find_map(M, N, kind="homomorphism", allowed=None, budget=None) -> MapTable | None:
    for f in enumerate_maps(M, N, kind, allowed, budget, limit=1):
        return f
    return None


def find_isomorphism(M, N, budget=None) -> MapTable | None:
    """A bijective homomorphism, preserving tangibles, whose inverse is a homomorphism."""
    if M.size != N.size or len(M.tangibles) != len(N.tangibles):
        return None
    allowed = [sorted(N.tangibles) if b in M.tangibles else
               [v for v in range(N.size) if v not in N.tangibles] for b in range(M.size)]
    for f in enumerate_maps(M, N, "homomorphism", allowed, budget):
        if len(f.image) != M.size:
            continue
        inv = [0] * N.size
        for b, v in enumerate(f.table):
            inv[v] = b
        if is_homomorphism(MapTable(N, M, tuple(inv))):
            return f
    return None
