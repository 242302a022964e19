# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_pysearch.search``; same traversal, same counting."""

import numpy as np
cimport numpy as cnp


cdef inline bint _rel(int r, int lhs, int rhs, const cnp.int8_t[:] le, int m) nogil:
    if r == 0:
        return lhs == rhs
    if r == 1:
        return le[lhs * m + rhs] != 0
    return le[rhs * m + lhs] != 0


def search(p, long limit, long long budget):
    cdef int n = p.n, m = p.m
    cdef const cnp.int32_t[:] cand_ptr = p.arrays["cand_ptr"]
    cdef const cnp.int32_t[:] cand_val = p.arrays["cand_val"]
    cdef const cnp.int8_t[:] mask = p.arrays["mask"]
    cdef const cnp.int32_t[:] cons_ptr = p.arrays["cons_ptr"]
    cdef const cnp.int32_t[:, :] cons = p.arrays["cons"]
    cdef const cnp.int32_t[:, :] forced = p.arrays["forced"]
    cdef const cnp.int32_t[:] tadd = p.arrays["tadd"]
    cdef const cnp.int32_t[:] tneg = p.arrays["tneg"]
    cdef const cnp.int32_t[:] tact = p.arrays["tact"]
    cdef const cnp.int8_t[:] tle = p.arrays["tle"]
    cdef int add_rel = p.add_rel, act_rel = p.act_rel
    cdef cnp.int32_t[:] phi = np.full(max(n, 1), -1, dtype=np.int32)
    cdef cnp.int32_t[:] nxt = np.zeros(n + 1, dtype=np.int32)
    cdef long long evals = 0
    cdef bint exhausted = False, found, ok
    cdef int pos = 0, v, code, x, y, z, k
    sols = []
    if n == 0:
        return [()], 0, False
    while pos >= 0:
        if pos == n:
            sols.append(tuple(phi[i] for i in range(n)))
            if len(sols) >= limit:
                break
            pos -= 1
            continue
        found = False
        if forced[pos, 0] >= 0:
            if nxt[pos] == 0:
                nxt[pos] = 1
                code = forced[pos, 0]
                x = forced[pos, 1]
                y = forced[pos, 2]
                z = forced[pos, 3]
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
            if cand_ptr[pos] + nxt[pos] < cand_ptr[pos + 1]:
                v = cand_val[cand_ptr[pos] + nxt[pos]]
                nxt[pos] += 1
                if evals >= budget:
                    exhausted = True
                    break
                evals += 1
                phi[pos] = v
                found = True
        if found:
            ok = True
            for k in range(cons_ptr[pos], cons_ptr[pos + 1]):
                code = cons[k, 0]
                x = cons[k, 1]
                y = cons[k, 2]
                z = cons[k, 3]
                if code == 0:
                    ok = tneg[phi[x]] == phi[y]
                elif code == 1:
                    ok = _rel(act_rel, phi[y], tact[z * m + phi[x]], tle, m)
                elif code == 2:
                    ok = _rel(add_rel, phi[z], tadd[phi[x] * m + phi[y]], tle, m)
                else:
                    ok = tle[phi[x] * m + phi[y]] != 0
                if not ok:
                    break
            if ok:
                pos += 1
                nxt[pos] = 0
        else:
            phi[pos] = -1
            pos -= 1
    return sols, evals, exhausted
