"""Finite carriers with negation maps and surpassing relations, plus axiom audits.

Elements are referred to by name (an opaque string) in the public helpers and
by index (position in ``elements``) inside the tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable

Table = tuple[tuple[int, ...], ...]
Relation = tuple[tuple[bool, ...], ...]

LEVELS = ("not-pseudo-triple", "pseudo-triple", "triple", "system", "T-system")


class UnknownElement(KeyError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteSystem:
    elements: tuple[str, ...]
    zero: int
    one: int
    add: Table
    mul: Table
    tangibles: frozenset[int]
    neg: tuple[int, ...]
    le: Relation
    name: str = "system"
    surpass_rule: str = "explicit"

    def __post_init__(self):
        n = len(self.elements)
        if len(set(self.elements)) != n:
            raise ValueError("duplicate element ids")
        for label, tab in (("add", self.add), ("mul", self.mul), ("surpass", self.le)):
            if len(tab) != n or any(len(row) != n for row in tab):
                raise ValueError(f"{label} table is not {n}x{n}")
        if len(self.neg) != n:
            raise ValueError("negation table has wrong length")
        cells = [v for row in self.add for v in row] + [v for row in self.mul for v in row]
        cells += list(self.neg) + [self.zero, self.one] + list(self.tangibles)
        if any(not 0 <= v < n for v in cells):
            raise ValueError("table entry outside the carrier")

    @property
    def size(self) -> int:
        return len(self.elements)

    @cached_property
    def _index(self) -> dict[str, int]:
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
        return (self.elements, self.zero, self.one, self.add, self.mul,
                tuple(sorted(self.tangibles)), self.neg, self.le)

    @cached_property
    def _hash(self):
        return hash(self._key)

    def __eq__(self, other):
        return self is other or (isinstance(other, FiniteSystem) and
                                 self._hash == other._hash and self._key == other._key)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteSystem({self.name!r}, size={self.size})"

    @cached_property
    def quasi_zeros(self) -> frozenset[int]:
        return frozenset(self.add[a][self.neg[a]] for a in range(self.size))

    @cached_property
    def null(self) -> frozenset[int]:
        return frozenset(a for a in range(self.size) if self.le[self.zero][a])


def make_system(elements, zero, one, add, mul, tangibles, neg, surpass="circ",
                name="system") -> FiniteSystem:
    """Build a system from name-level data.

    ``add`` and ``mul`` map name pairs to names (dict or callable), ``neg`` maps
    names to names. ``surpass`` is ``"circ"``, ``("null", names)`` or an
    iterable of name pairs ``(a, b)`` meaning a ⪯ b.
    """
    elements = tuple(elements)
    ix = {e: i for i, e in enumerate(elements)}
    fa, fm, fn = _callable(add), _callable(mul), _callable(neg)
    addt = tuple(tuple(ix[fa(a, b)] for b in elements) for a in elements)
    mult = tuple(tuple(ix[fm(a, b)] for b in elements) for a in elements)
    negt = tuple(ix[fn(a)] for a in elements)
    n = len(elements)
    blank = tuple(tuple(i == j for j in range(n)) for i in range(n))
    base = FiniteSystem(elements, ix[zero], ix[one], addt, mult,
                        frozenset(ix[t] for t in tangibles), negt, blank, name)
    return with_surpass(base, surpass)


def _callable(f):
    if isinstance(f, dict):
        return lambda *args: f[args if len(args) > 1 else args[0]]
    return f


def with_surpass(S: FiniteSystem, surpass) -> FiniteSystem:
    if surpass == "circ":
        pairs, rule = build_surpass_circ(S), "circ"
    elif isinstance(surpass, tuple) and len(surpass) == 2 and surpass[0] == "null":
        pairs, rule = build_surpass_null(S, surpass[1]), "null " + " ".join(
            S.elements[i] for i in sorted(S.idx(x) for x in surpass[1]))
    else:
        pairs, rule = frozenset(surpass), "explicit"
    le = _relation_matrix(S, pairs)
    return FiniteSystem(S.elements, S.zero, S.one, S.add, S.mul, S.tangibles, S.neg,
                        le, S.name, rule)


def _relation_matrix(S, pairs) -> Relation:
    n = S.size
    mat = [[False] * n for _ in range(n)]
    for a, b in pairs:
        mat[S.idx(a)][S.idx(b)] = True
    return tuple(tuple(r) for r in mat)


def relation_pairs(S) -> frozenset[tuple[str, str]]:
    n = S.size
    return frozenset((S.elements[a], S.elements[b])
                     for a in range(n) for b in range(n) if S.le[a][b])


def quasi_zero(S, a):
    i = S.idx(a)
    return S.elements[S.add[i][S.neg[i]]]


def null_set(S) -> frozenset[str]:
    return S.names(S.null)


def surpasses(S, a, b) -> bool:
    """True when a ⪯ b."""
    return S.le[S.idx(a)][S.idx(b)]


def set_surpassed(S, first, second) -> bool:
    """Set extension of ⪯: every s in ``first`` lies below some s' in ``second``."""
    second = [S.idx(x) for x in second]
    return all(any(S.le[S.idx(s)][t] for t in second) for s in first)


def build_surpass_circ(S) -> frozenset[tuple[str, str]]:
    n = S.size
    qz = sorted(S.quasi_zeros)
    return frozenset((S.elements[a], S.elements[S.add[a][c]]) for a in range(n) for c in qz)


def build_surpass_null(S, null: Iterable) -> frozenset[tuple[str, str]]:
    null = sorted({S.idx(x) for x in null})
    n = S.size
    return frozenset((S.elements[b], S.elements[S.add[b][c]]) for b in range(n) for c in null)


def surpass_violations(S, relation=None) -> list[tuple[str, tuple[str, ...]]]:
    """Surpassing-axiom failures (i)-(iv) of a candidate relation given as name pairs."""
    T = S if relation is None else with_surpass(S, relation)
    return [(c.name, c.witness) for c in _surpass_checks(T) if c.status == "fail"
            and c.name != "surpass-tangible-antisymmetry"]


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    status: str  # "pass", "fail" or "skipped"
    witness: tuple[str, ...] = ()
    level: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass
class AxiomReport:
    checks: list[AxiomCheck] = field(default_factory=list)
    classification: str = "not-pseudo-triple"

    @property
    def failed(self) -> list[AxiomCheck]:
        return [c for c in self.checks if c.status == "fail"]

    def check(self, name) -> AxiomCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def is_system(self) -> bool:
        return self.classification in ("system", "T-system")


def _first(S, it):
    """Turn the first witness (tuple of indices) of ``it`` into names, or ()."""
    for w in it:
        return tuple(S.elements[i] for i in w)
    return None


def _mk(S, name, level, witness_iter):
    w = _first(S, witness_iter)
    return AxiomCheck(name, "pass" if w is None else "fail", w or (), level)


def _pseudo_triple_checks(S) -> list[AxiomCheck]:
    n, A, M, N, z, o = S.size, S.add, S.mul, S.neg, S.zero, S.one
    r = range(n)
    T = sorted(S.tangibles)
    lv = "pseudo-triple"
    return [
        _mk(S, "add-commutative", lv, ((a, b) for a, b in product(r, r) if A[a][b] != A[b][a])),
        _mk(S, "add-associative", lv, ((a, b, c) for a, b, c in product(r, r, r)
                                       if A[A[a][b]][c] != A[a][A[b][c]])),
        _mk(S, "add-identity", lv, ((a,) for a in r if A[a][z] != a)),
        _mk(S, "mul-associative", lv, ((a, b, c) for a, b, c in product(r, r, r)
                                       if M[M[a][b]][c] != M[a][M[b][c]])),
        _mk(S, "mul-identity", lv, ((a,) for a in r if M[o][a] != a or M[a][o] != a)),
        _mk(S, "distributive-left", lv, ((a, b, c) for a, b, c in product(r, r, r)
                                         if M[a][A[b][c]] != A[M[a][b]][M[a][c]])),
        _mk(S, "distributive-right", lv, ((a, b, c) for a, b, c in product(r, r, r)
                                          if M[A[b][c]][a] != A[M[b][a]][M[c][a]])),
        _mk(S, "zero-absorbing", lv, ((a,) for a in r if M[a][z] != z or M[z][a] != z)),
        _mk(S, "negation-involution", lv, ((a,) for a in r if N[N[a]] != a)),
        _mk(S, "negation-zero", lv, ((z,),) if N[z] != z else ()),
        _mk(S, "negation-additive", lv, ((a, b) for a, b in product(r, r)
                                         if N[A[a][b]] != A[N[a]][N[b]])),
        _mk(S, "negation-tangible-action", lv, ((a, b) for a in T for b in r
                                                if N[M[a][b]] != M[a][N[b]])),
        _mk(S, "negation-preserves-tangibles", lv, ((a,) for a in T if N[a] not in S.tangibles)),
    ]


def additive_closure(add: Table, zero: int, seeds: Iterable[int]) -> frozenset[int]:
    got = {zero}
    frontier = list(set(seeds) - got)
    got.update(frontier)
    while frontier:
        new = []
        for x in frontier:
            for y in list(got):
                s = add[x][y]
                if s not in got:
                    got.add(s)
                    new.append(s)
        frontier = new
    return frozenset(got)


def _triple_checks(S) -> list[AxiomCheck]:
    lv = "triple"
    span = additive_closure(S.add, S.zero, S.tangibles)
    missing = [(a,) for a in range(S.size) if a not in span]
    return [
        AxiomCheck("tangibles-nonempty", "pass" if S.tangibles else "fail", (), lv),
        _mk(S, "tangibles-avoid-quasi-zeros", lv,
            ((a,) for a in sorted(S.tangibles) if a in S.quasi_zeros)),
        _mk(S, "tangibles-generate", lv, missing),
    ]


def _surpass_checks(S) -> list[AxiomCheck]:
    n, A, M, N, L, z = S.size, S.add, S.mul, S.neg, S.le, S.zero
    r = range(n)
    T = sorted(S.tangibles)
    pairs = [(a, b) for a, b in product(r, r) if L[a][b]]
    lv = "system"
    return [
        _mk(S, "surpass-reflexive", lv, ((a,) for a in r if not L[a][a])),
        _mk(S, "surpass-transitive", lv, ((a, b, c) for a, b in pairs for c in r
                                          if L[b][c] and not L[a][c])),
        _mk(S, "surpass-quasi-zeros-null", lv, ((c,) for c in r if not L[z][A[c][N[c]]])),
        _mk(S, "surpass-negation", lv, ((a, b) for a, b in pairs if not L[N[a]][N[b]])),
        _mk(S, "surpass-additive", lv, ((a, b, c, d) for a, b in pairs for c, d in pairs
                                        if not L[A[a][c]][A[b][d]])),
        _mk(S, "surpass-tangible-scaling", lv, ((t, a, b) for t in T for a, b in pairs
                                                if not L[M[t][a]][M[t][b]])),
        _mk(S, "surpass-tangible-antisymmetry", lv, ((a, b) for a in T for b in T
                                                     if a != b and L[a][b])),
    ]


def _unique_negation_check(S) -> AxiomCheck:
    L, A, z = S.le, S.add, S.zero
    bad = []
    for a in sorted(S.tangibles):
        partners = [b for b in sorted(S.tangibles) if L[z][A[a][b]]]
        if partners != [S.neg[a]]:
            bad.append((a, *partners))
    return _mk(S, "unique-negation", "system", bad)


def _t_surpassing_check(S) -> AxiomCheck:
    return _mk(S, "t-surpassing", "T-system", ((b, a) for a in sorted(S.tangibles)
                                               for b in range(S.size) if b != a and S.le[b][a]))


def check_system(S: FiniteSystem) -> AxiomReport:
    """Audit the axioms level by level and classify.

    The T-surpassing check presupposes a system; below that level it is
    recorded as skipped.
    """
    report = AxiomReport()
    checks = _pseudo_triple_checks(S)
    report.checks += checks
    if not all(c.passed for c in checks):
        return report
    report.classification = "pseudo-triple"
    triple = _triple_checks(S)
    report.checks += triple
    system = [_unique_negation_check(S)] + _surpass_checks(S)
    report.checks += system
    if not all(c.passed for c in triple):
        report.checks.append(AxiomCheck("t-surpassing", "skipped", (), "T-system"))
        return report
    report.classification = "triple"
    if not all(c.passed for c in system):
        report.checks.append(AxiomCheck("t-surpassing", "skipped", (), "T-system"))
        return report
    report.classification = "system"
    t = _t_surpassing_check(S)
    report.checks.append(t)
    if t.passed:
        report.classification = "T-system"
    return report
