"""Built-in ground systems."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

from .core import AxiomCheck, AxiomReport, FiniteSystem, make_system, with_surpass


def make_boolean() -> FiniteSystem:
    els = ("0", "1")
    return make_system(
        els, "0", "1",
        add=lambda a, b: "1" if "1" in (a, b) else "0",
        mul=lambda a, b: "1" if a == b == "1" else "0",
        tangibles=["1"], neg=lambda a: a, surpass="circ", name="bool")


def make_supertrop_boolean() -> FiniteSystem:
    els = ("0", "1", "nu")

    def add(a, b):
        if a == "0":
            return b
        if b == "0":
            return a
        return "nu"

    def mul(a, b):
        if "0" in (a, b):
            return "0"
        return "1" if a == b == "1" else "nu"

    return make_system(els, "0", "1", add, mul, ["1"], lambda a: a, "circ", "supertrop-B")


def pair_name(a: str, b: str) -> str:
    return f"({a},{b})"


def symmetrize(S: FiniteSystem, name: str | None = None) -> FiniteSystem:
    """Pairs over S with componentwise addition, twist product and switch negation."""
    n = S.size
    pairs = list(product(range(n), range(n)))
    ix = {p: i for i, p in enumerate(pairs)}
    A, M = S.add, S.mul
    add = tuple(tuple(ix[(A[a0][b0], A[a1][b1])] for b0, b1 in pairs) for a0, a1 in pairs)
    mul = tuple(tuple(ix[(A[M[a0][b0]][M[a1][b1]], A[M[a0][b1]][M[a1][b0]])] for b0, b1 in pairs)
                for a0, a1 in pairs)
    neg = tuple(ix[(a1, a0)] for a0, a1 in pairs)
    z = S.zero
    tang = frozenset(ix[(t, z)] for t in S.tangibles) | frozenset(ix[(z, t)] for t in S.tangibles)
    els = tuple(pair_name(S.elements[a], S.elements[b]) for a, b in pairs)
    eye = tuple(tuple(i == j for j in range(len(pairs))) for i in range(len(pairs)))
    base = FiniteSystem(els, ix[(z, z)], ix[(S.one, z)], add, mul, tang, neg, eye,
                        name or f"sym-{S.name}")
    return with_surpass(base, "circ")


def make_sym_boolean() -> FiniteSystem:
    return symmetrize(make_boolean(), "sym-bool")


def make_sym_supertrop_boolean() -> FiniteSystem:
    return symmetrize(make_supertrop_boolean(), "sym-supertrop-B")


# --- max-plus supertropical semiring, given by rules ---------------------------------

class ST(NamedTuple):
    kind: str  # "zero", "t" (tangible) or "g" (ghost)
    value: int = 0

    def __str__(self):
        return "0" if self.kind == "zero" else f"{self.kind}{self.value}"


class FormulaSystem:
    """Max-plus supertropical semiring on integers with identity negation and ⪯₀."""

    name = "maxplus-st"

    def __init__(self, bound: int = 2 ** 62):
        self.bound = bound
        self.zero = ST("zero")
        self.one = ST("t", 0)

    def tangible(self, n: int) -> ST:
        return ST("t", self._checked(n))

    def ghost(self, n: int) -> ST:
        return ST("g", self._checked(n))

    def _checked(self, n: int) -> int:
        if abs(n) > self.bound:
            raise OverflowError(f"value {n} exceeds the bound {self.bound}")
        return n

    def parse(self, token: str) -> ST:
        if token == "0":
            return self.zero
        if token[:1] in ("t", "g"):
            return ST(token[0], self._checked(int(token[1:])))
        raise ValueError(f"bad max-plus element {token!r}")

    def is_tangible(self, x: ST) -> bool:
        return x.kind == "t"

    def add(self, x: ST, y: ST) -> ST:
        if x.kind == "zero":
            return y
        if y.kind == "zero":
            return x
        if x.value != y.value:
            return x if x.value > y.value else y
        return ST("g", x.value)

    def mul(self, x: ST, y: ST) -> ST:
        if x.kind == "zero" or y.kind == "zero":
            return self.zero
        kind = "t" if x.kind == y.kind == "t" else "g"
        return ST(kind, self._checked(x.value + y.value))

    def neg(self, x: ST) -> ST:
        return x

    def le(self, x: ST, y: ST) -> bool:
        """x ⪯₀ y: y = x + c° for some c."""
        if x == y:
            return True
        return y.kind == "g" and (x.kind == "zero" or x.value <= y.value)

    def window(self, lo: int, hi: int) -> list[ST]:
        return [self.zero] + [ST(k, v) for v in range(lo, hi + 1) for k in ("t", "g")]

    def check_window(self, lo: int = -8, hi: int = 8) -> AxiomReport:
        """Spot-check the semiring and surpassing laws on a window of values."""
        W = self.window(lo, hi)
        A, M, L = self.add, self.mul, self.le
        laws = {
            "add-commutative": lambda a, b, c: A(a, b) == A(b, a),
            "add-associative": lambda a, b, c: A(A(a, b), c) == A(a, A(b, c)),
            "mul-associative": lambda a, b, c: M(M(a, b), c) == M(a, M(b, c)),
            "distributive": lambda a, b, c: M(a, A(b, c)) == A(M(a, b), M(a, c)),
            "surpass-transitive": lambda a, b, c: not (L(a, b) and L(b, c)) or L(a, c),
            "surpass-additive": lambda a, b, c: not L(a, b) or L(A(a, c), A(b, c)),
            "surpass-scaling": lambda a, b, c: not L(a, b) or L(M(c, a), M(c, b)),
        }
        report = AxiomReport(classification="system")
        for name, law in laws.items():
            bad = next(((str(a), str(b), str(c)) for a, b, c in product(W, W, W)
                        if not law(a, b, c)), None)
            report.checks.append(AxiomCheck(name, "fail" if bad else "pass", bad or (), "window"))
        circ = {(a, A(a, A(d, d))) for a in W for d in W}
        bad = next(((str(a), str(b)) for a, b in product(W, W) if L(a, b) != ((a, b) in circ)),
                   None)
        report.checks.append(AxiomCheck("surpass-matches-circ", "fail" if bad else "pass",
                                        bad or (), "window"))
        for name, ok in (("add-identity", all(A(a, self.zero) == a for a in W)),
                         ("mul-identity", all(M(a, self.one) == a for a in W)),
                         ("surpass-quasi-zeros-null", all(L(self.zero, A(a, a)) for a in W))):
            report.checks.append(AxiomCheck(name, "pass" if ok else "fail", (), "window"))
        if report.failed:
            report.classification = "not-pseudo-triple"
        return report


def make_supertrop_maxplus(bound: int = 2 ** 62) -> FormulaSystem:
    return FormulaSystem(bound)


# --- hyperfields and their power-set systems ------------------------------------------

@dataclass(frozen=True)
class FiniteHyperfield:
    elements: tuple[str, ...]
    zero: int
    one: int
    hyperadd: tuple[tuple[frozenset[int], ...], ...]
    mul: tuple[tuple[int, ...], ...]
    hyperneg: tuple[int, ...]
    name: str = "hyperfield"

    @classmethod
    def from_names(cls, elements, zero, one, hyperadd, mul, hyperneg, name="hyperfield"):
        ix = {e: i for i, e in enumerate(elements)}
        hadd = tuple(tuple(frozenset(ix[c] for c in hyperadd(a, b)) for b in elements)
                     for a in elements)
        m = tuple(tuple(ix[mul(a, b)] for b in elements) for a in elements)
        return cls(tuple(elements), ix[zero], ix[one], hadd, m,
                   tuple(ix[hyperneg(a)] for a in elements), name)

    def with_sum(self, a: str, b: str, result) -> "FiniteHyperfield":
        """Copy with a ⊞ b (and b ⊞ a) replaced by ``result``."""
        ix = {e: i for i, e in enumerate(self.elements)}
        i, j = ix[a], ix[b]
        res = frozenset(ix[c] for c in result)
        rows = [list(r) for r in self.hyperadd]
        rows[i][j] = rows[j][i] = res
        return FiniteHyperfield(self.elements, self.zero, self.one,
                                tuple(tuple(r) for r in rows), self.mul, self.hyperneg, self.name)

    def lift(self, X, Y) -> frozenset[int]:
        return frozenset().union(*(self.hyperadd[x][y] for x in X for y in Y)) if X and Y \
            else frozenset()


def krasner_hyperfield() -> FiniteHyperfield:
    def hadd(a, b):
        if a == "0":
            return {b}
        if b == "0":
            return {a}
        return {"0", "1"}

    return FiniteHyperfield.from_names(
        ("0", "1"), "0", "1", hadd,
        lambda a, b: "1" if a == b == "1" else "0", lambda a: a, "krasner")


def sign_hyperfield() -> FiniteHyperfield:
    def hadd(a, b):
        if a == "0":
            return {b}
        if b == "0":
            return {a}
        return {a} if a == b else {"0", "+", "-"}

    def mul(a, b):
        if "0" in (a, b):
            return "0"
        return "+" if a == b else "-"

    flip = {"0": "0", "+": "-", "-": "+"}
    return FiniteHyperfield.from_names(("0", "+", "-"), "0", "+", hadd, mul,
                                       flip.__getitem__, "sign")


def check_hyperfield(H: FiniteHyperfield) -> AxiomReport:
    n = len(H.elements)
    r = range(n)
    P, M, N, z, o = H.hyperadd, H.mul, H.hyperneg, H.zero, H.one
    E = H.elements

    def first(gen):
        for w in gen:
            return tuple(E[i] for i in w)
        return None

    def assoc(a, b, c):
        return H.lift(P[a][b], {c}) == H.lift({a}, P[b][c])

    nonzero = [a for a in r if a != z]
    laws = [
        ("hyperadd-nonempty", ((a, b) for a, b in product(r, r) if not P[a][b])),
        ("hyperadd-commutative", ((a, b) for a, b in product(r, r) if P[a][b] != P[b][a])),
        ("hyperadd-identity", ((a,) for a in r if P[z][a] != {a})),
        ("hyperadd-associative", ((a, b, c) for a, b, c in product(r, r, r)
                                  if not assoc(a, b, c))),
        ("unique-inverse", ((a,) for a in r
                            if [b for b in r if z in P[a][b]] != [N[a]])),
        ("reversible", ((a, b, c) for a, b, c in product(r, r, r)
                        if (c in P[a][b]) != (b in P[N[a]][c]))),
        ("mul-commutative", ((a, b) for a, b in product(r, r) if M[a][b] != M[b][a])),
        ("mul-associative", ((a, b, c) for a, b, c in product(r, r, r)
                             if M[M[a][b]][c] != M[a][M[b][c]])),
        ("mul-identity", ((a,) for a in r if M[o][a] != a)),
        ("zero-absorbing", ((a,) for a in r if M[z][a] != z)),
        ("distributive", ((a, b, c) for a, b, c in product(r, r, r)
                          if frozenset(M[a][x] for x in P[b][c])
                          != H.lift({M[a][b]}, {M[a][c]}))),
        ("mul-group", ((a,) for a in nonzero
                       if not any(M[a][b] == o for b in nonzero)
                       or any(M[a][b] == z for b in nonzero))),
    ]
    report = AxiomReport(classification="hyperfield")
    for name, gen in laws:
        w = first(gen)
        report.checks.append(AxiomCheck(name, "fail" if w is not None else "pass", w or (),
                                        "hyperfield"))
    if report.failed:
        report.classification = "not-hyperfield"
    return report


def set_name(H: FiniteHyperfield, X) -> str:
    return "{" + ",".join(H.elements[i] for i in sorted(X)) + "}"


class ClosureTooLarge(ValueError):
    pass


def make_hypersystem(H: FiniteHyperfield, bound: int = 64, name: str | None = None) -> FiniteSystem:
    """Subsets generated by the singletons under set-lifted sum and product, ordered by discovery."""
    carrier = [frozenset({a}) for a in range(len(H.elements))]
    seen = set(carrier)

    def setmul(X, Y):
        return frozenset(H.mul[x][y] for x in X for y in Y)

    i = 0
    while i < len(carrier):
        X = carrier[i]
        for Y in carrier[: i + 1]:
            for Z in (H.lift(X, Y), setmul(X, Y)):
                if Z not in seen:
                    seen.add(Z)
                    carrier.append(Z)
                    if len(carrier) > bound:
                        raise ClosureTooLarge(f"closure exceeds {bound} subsets")
        i += 1
    ix = {X: k for k, X in enumerate(carrier)}
    add = tuple(tuple(ix[H.lift(X, Y)] for Y in carrier) for X in carrier)
    mul = tuple(tuple(ix[setmul(X, Y)] for Y in carrier) for X in carrier)
    neg = tuple(ix[frozenset(H.hyperneg[x] for x in X)] for X in carrier)
    tang = frozenset(ix[frozenset({a})] for a in range(len(H.elements)) if a != H.zero)
    le = tuple(tuple(X <= Y for Y in carrier) for X in carrier)
    return FiniteSystem(tuple(set_name(H, X) for X in carrier), ix[frozenset({H.zero})],
                        ix[frozenset({H.one})], add, mul, tang, neg, le,
                        name or f"{H.name}-hs", "inclusion")


def make_krasner_hs() -> FiniteSystem:
    return make_hypersystem(krasner_hyperfield(), name="krasner-hs")


def make_sign_hs() -> FiniteSystem:
    return make_hypersystem(sign_hyperfield(), name="sign-hs")


REGISTRY = {
    "bool": make_boolean,
    "sym-bool": make_sym_boolean,
    "supertrop-B": make_supertrop_boolean,
    "sym-supertrop-B": make_sym_supertrop_boolean,
    "maxplus-st": make_supertrop_maxplus,
    "krasner-hs": make_krasner_hs,
    "sign-hs": make_sign_hs,
}

FINITE_NAMES = tuple(k for k in REGISTRY if k != "maxplus-st")
SYSTEM_NAMES = ("supertrop-B", "sym-bool", "sym-supertrop-B", "krasner-hs", "sign-hs")

_cache: dict[str, object] = {}


def get_instance(name: str):
    if name not in REGISTRY:
        raise KeyError(f"unknown instance {name!r}; known: {', '.join(REGISTRY)}")
    if name not in _cache:
        _cache[name] = REGISTRY[name]()
    return _cache[name]
