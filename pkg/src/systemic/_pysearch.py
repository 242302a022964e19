"""Reference backtracking kernel for map searches.

Positions (source elements) are assigned in index order and candidate values
in index order, so solutions come out in lexicographic order of their tables.
Each constraint is checked at the position where its last operand is assigned.

Constraint codes, as (code, x, y, z):
    0  negation     neg[phi[x]] == phi[y]
    1  action       phi[y] REL act[z][phi[x]]             (REL from act_rel)
    2  additivity   phi[z] REL add[phi[x]][phi[y]]        (REL from add_rel)
    3  monotone     phi[x] ⪯ phi[y]
Relations: 0 equality, 1 phi-side ⪯ formula-side, 2 formula-side ⪯ phi-side.
"""

from __future__ import annotations


def _rel(r, lhs, rhs, le, m):
    if r == 0:
        return lhs == rhs
    if r == 1:
        return le[lhs * m + rhs]
    return le[rhs * m + lhs]


def search(p, limit: int, budget: int):
    """Return (solutions, evaluations, exhausted)."""
    n, m = p.n, p.m
    cands, mask, cons, forced = p.cands, p.mask, p.cons, p.forced
    tadd, tneg, tact, tle = p.tadd, p.tneg, p.tact, p.tle
    add_rel, act_rel = p.add_rel, p.act_rel
    phi = [-1] * n
    nxt = [0] * (n + 1)
    sols = []
    evals = 0
    exhausted = False
    pos = 0
    if n == 0:
        return [()], 0, False
    while pos >= 0:
        if pos == n:
            sols.append(tuple(phi))
            if len(sols) >= limit:
                break
            pos -= 1
            continue
        found = False
        f = forced[pos]
        if f is not None:
            if nxt[pos] == 0:
                nxt[pos] = 1
                code, x, y, z = f
                if code == 0:
                    v = tneg[phi[x]]
                elif code == 1:
                    v = tact[z * m + phi[x]]
                else:
                    v = tadd[phi[x] * m + phi[y]]
                if mask[pos * m + v]:
                    if evals >= budget:
                        exhausted = True
                        break
                    evals += 1
                    phi[pos] = v
                    found = True
        else:
            cl = cands[pos]
            while nxt[pos] < len(cl):
                v = cl[nxt[pos]]
                nxt[pos] += 1
                if evals >= budget:
                    exhausted = True
                    break
                evals += 1
                phi[pos] = v
                found = True
                break
            if exhausted:
                break
        if found:
            ok = True
            for code, x, y, z in cons[pos]:
                if code == 0:
                    ok = tneg[phi[x]] == phi[y]
                elif code == 1:
                    ok = _rel(act_rel, phi[y], tact[z * m + phi[x]], tle, m)
                elif code == 2:
                    ok = _rel(add_rel, phi[z], tadd[phi[x] * m + phi[y]], tle, m)
                else:
                    ok = tle[phi[x] * m + phi[y]]
                if not ok:
                    break
            if ok:
                pos += 1
                nxt[pos] = 0
        else:
            phi[pos] = -1
            pos -= 1
    return sols, evals, exhausted
