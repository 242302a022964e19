"""Brute-force references used to cross-check the library.

Everything here works on element names and plain dictionaries, scans whole
carriers or whole map spaces, and avoids the library's search, closure and
classification code. Only the raw tables of a structure are read.
"""

from __future__ import annotations

from itertools import combinations, product


# --- structures as dictionaries ------------------------------------------------------------

class Tables:
    """Name-level view of a FiniteSystem or SystemicModule."""

    def __init__(self, X):
        E = X.elements
        self.X = X
        self.els = list(E)
        self.zero = E[X.zero]
        self.add = {(E[a], E[b]): E[X.add[a][b]] for a in range(len(E)) for b in range(len(E))}
        self.neg = {E[a]: E[X.neg[a]] for a in range(len(E))}
        self.le = {(E[a], E[b]) for a in range(len(E)) for b in range(len(E)) if X.le[a][b]}
        self.tangibles = {E[t] for t in X.tangibles}
        if hasattr(X, "mul"):
            self.mul = {(E[a], E[b]): E[X.mul[a][b]] for a in range(len(E))
                        for b in range(len(E))}
        else:
            S = X.scalars
            self.act = {(S.elements[s], E[b]): E[X.act[s][b]] for s in range(S.size)
                        for b in range(len(E))}
            self.scalar_tangibles = [S.elements[t] for t in sorted(S.tangibles)]

    def null(self):
        return {b for b in self.els if (self.zero, b) in self.le}

    def minus(self, a, b):
        return self.add[(a, self.neg[b])]


def circ_relation(T: Tables):
    """{(a, a + c°)} straight from the definition."""
    qz = {T.add[(c, T.neg[c])] for c in T.els}
    return {(a, T.add[(a, q)]) for a in T.els for q in qz}


def null_relation(T: Tables, null):
    return {(b, T.add[(b, c)]) for b in T.els for c in null}


def symmetrized_bool():
    """Pairs over {0,1} with 1+1 = 1, written out from the twist formula."""
    b_add = lambda x, y: max(x, y)
    b_mul = lambda x, y: min(x, y)
    pairs = [(a, b) for a in (0, 1) for b in (0, 1)]
    name = lambda p: f"({p[0]},{p[1]})"
    add = {(name(p), name(q)): name((b_add(p[0], q[0]), b_add(p[1], q[1])))
           for p in pairs for q in pairs}
    mul = {(name(p), name(q)): name((b_add(b_mul(p[0], q[0]), b_mul(p[1], q[1])),
                                     b_add(b_mul(p[0], q[1]), b_mul(p[1], q[0]))))
           for p in pairs for q in pairs}
    return add, mul


def hyper_closure(elements, hadd, hmul):
    """Subsets generated from singletons by set-lifted sum and product."""
    lift = lambda X, Y, op: frozenset().union(*(op(x, y) for x in X for y in Y))
    found = {frozenset({a}) for a in elements}
    while True:
        new = {lift(X, Y, op) for X in found for Y in found for op in (hadd, hmul)} - found
        if not new:
            return found
        found |= new


KRASNER = (("0", "1"),
           lambda a, b: {b} if a == "0" else {a} if b == "0" else {"0", "1"},
           lambda a, b: {"1"} if a == b == "1" else {"0"})
SIGN = (("0", "+", "-"),
        lambda a, b: {b} if a == "0" else {a} if b == "0" else {a} if a == b else {"0", "+", "-"},
        lambda a, b: {"0"} if "0" in (a, b) else {"+"} if a == b else {"-"})


# --- maps ------------------------------------------------------------------------------

def all_tables(M, N):
    """Every total function M -> N as a dict of names."""
    TM, TN = Tables(M), Tables(N)
    for vals in product(TN.els, repeat=len(TM.els)):
        yield dict(zip(TM.els, vals))


def map_conditions(M, N, f):
    TM, TN = Tables(M), Tables(N)
    s = TM.els
    common = (f[TM.zero] == TN.zero
              and all(f[TM.neg[b]] == TN.neg[f[b]] for b in s)
              and all(f[TM.act[(a, b)]] == TN.act[(a, f[b])] for a in TM.scalar_tangibles
                      for b in s)
              and all((f[x], f[y]) in TN.le for x, y in TM.le))
    add = [(f[TM.add[(x, y)]], TN.add[(f[x], f[y])]) for x in s for y in s]
    return {
        "homomorphism": common and all(u == v for u, v in add),
        "preceq": common and all((u, v) in TN.le for u, v in add),
        "succeq": common and all((v, u) in TN.le for u, v in add),
    }


def brute_maps(M, N, kind):
    """All maps of a kind, as tuples of target names in source order."""
    out = []
    for f in all_tables(M, N):
        if map_conditions(M, N, f)[kind]:
            out.append(tuple(f[e] for e in M.elements))
    return sorted(out, key=lambda t: [N.elements.index(v) for v in t])


def is_submodule(T: Tables, S):
    S = set(S)
    return (T.zero in S and all(T.add[(a, b)] in S for a in S for b in S)
            and all(T.neg[a] in S for a in S)
            and all(T.act[(t, a)] in S for t in T.scalar_tangibles for a in S))


def submodules(M):
    T = Tables(M)
    rest = [e for e in T.els if e != T.zero]
    for r in range(len(rest) + 1):
        for extra in combinations(rest, r):
            S = {T.zero, *extra}
            if is_submodule(T, S):
                yield frozenset(S)


def brute_ker_mod(f):
    """Join of all submodules mapped into the target's null set."""
    M, N = f.source, f.target
    null = Tables(N).null()
    fn = {e: f(e) for e in M.elements}
    inside = [S for S in submodules(M) if all(fn[b] in null for b in S)]
    union = set().union(*inside)
    return min((S for S in submodules(M) if union <= S), key=len)


def brute_splittings(pi, cls, rel):
    """All ν of class ``cls`` with b REL πν(b) for every b."""
    M, N = pi.source, pi.target
    TN = Tables(N)
    out = []
    for nu in brute_maps(N, M, cls):
        nv = dict(zip(N.elements, nu))
        ok = True
        for b in N.elements:
            v = pi(nv[b])
            if rel == "eq" and v != b or rel == "le" and (b, v) not in TN.le \
                    or rel == "ge" and (v, b) not in TN.le:
                ok = False
                break
        if ok:
            out.append(nu)
    return out


def pullback_pairs(f1, f2, mode="strict"):
    T = Tables(f1.target)
    P1, P2 = f1.source.elements, f2.source.elements
    if mode == "strict":
        return {(a, b) for a in P1 for b in P2 if f1(a) == f2(b)}
    return {(a, b) for a in P1 for b in P2 if (f1(a), f2(b)) in T.le}


# --- matrices --------------------------------------------------------------------------

def mat_mul(T: Tables, A, B):
    n, k, m = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            x = T.zero
            for t in range(k):
                x = T.add[(x, T.mul[(A[i][t], B[t][j])])]
            row.append(x)
        out.append(tuple(row))
    return tuple(out)


def mat_le(T: Tables, A, B):
    return all((a, b) in T.le for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def all_mats(T: Tables, m, n):
    for vals in product(T.els, repeat=m * n):
        yield tuple(tuple(vals[i * n:(i + 1) * n]) for i in range(m))


def idempotent_count(T: Tables, n):
    return sum(1 for A in all_mats(T, n, n) if mat_le(T, A, mat_mul(T, A, A)))


def vnr_pair_count(T: Tables, m, n):
    return sum(1 for A in all_mats(T, m, n) for B in all_mats(T, n, m)
               if mat_le(T, A, mat_mul(T, mat_mul(T, A, B), A)))
