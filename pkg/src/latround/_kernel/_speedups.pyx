# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of latround._kernel.pure.

Entries are Python integers so exactness is unlimited; the speedup
comes from typed loop counters and C-level list handling.  Behaviour,
including every tie-break, must match the pure module bit for bit.
"""

from math import gcd

__all__ = ["lp_feasible", "nullspace_vector", "solve_square"]


cdef list _gcd_reduce(list row):
    cdef Py_ssize_t i, n = len(row)
    g = 0
    for i in range(n):
        v = row[i]
        if v:
            g = gcd(g, v)
            if g == 1:
                return row
    if g > 1:
        for i in range(n):
            row[i] //= g
    return row


def lp_feasible(rows, rhs):
    """Exact phase-1 simplex; see the pure twin for the full contract."""
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t ncols = len(rows[0]) if m else 0
    cdef Py_ssize_t last = ncols + m
    cdef Py_ssize_t i, j, k, prow, entering
    if m == 0:
        return ("feasible", [])
    cdef list tab = []
    cdef list row
    for i in range(m):
        if rhs[i] < 0:
            row = [-v for v in rows[i]]
            row.extend([0] * m)
            row.append(-rhs[i])
        else:
            row = list(rows[i])
            row.extend([0] * m)
            row.append(rhs[i])
        row[ncols + i] = 1
        tab.append(row)
    cdef list basis = [ncols + i for i in range(m)]
    cdef list art_rows = [True] * m
    basic_cols = set()
    cdef list active, dens, shares, ti, prow_vals, new_row
    cdef Py_ssize_t na

    while True:
        active = [i for i in range(m) if art_rows[i]]
        na = len(active)
        ok = True
        for k in range(na):
            i = active[k]
            if (<list>tab[i])[last] != 0:
                ok = False
                break
        if ok:
            break
        dens = [(<list>tab[i])[basis[i]] for i in active]
        prod = 1
        for k in range(na):
            prod *= dens[k]
        shares = [prod // dens[k] for k in range(na)]
        entering = -1
        for j in range(ncols):
            if j in basic_cols:
                continue
            score = 0
            for k in range(na):
                i = active[k]
                t = (<list>tab[i])[j]
                if t:
                    score += t * shares[k]
            if score > 0:
                entering = j
                break
        if entering < 0:
            num = 0
            den = 1
            for k in range(na):
                i = active[k]
                rn_ = (<list>tab[i])[last]
                rd_ = (<list>tab[i])[basis[i]]
                num = num * rd_ + rn_ * den
                den *= rd_
            g = gcd(num, den)
            return ("infeasible", (num // g, den // g))
        prow = -1
        rn = 0
        rd = 0
        for i in range(m):
            t = (<list>tab[i])[entering]
            if t <= 0:
                continue
            bn = (<list>tab[i])[last]
            if prow < 0 or bn * rd < rn * t or (bn * rd == rn * t and basis[i] < basis[prow]):
                prow, rn, rd = i, bn, t
        assert prow >= 0
        piv = (<list>tab[prow])[entering]
        prow_vals = <list>tab[prow]
        for i in range(m):
            if i == prow:
                continue
            ti = <list>tab[i]
            f = ti[entering]
            if f:
                new_row = [piv * ti[k] - f * prow_vals[k] for k in range(last + 1)]
                tab[i] = _gcd_reduce(new_row)
        if art_rows[prow]:
            art_rows[prow] = False
        else:
            basic_cols.discard(basis[prow])
        basis[prow] = entering
        basic_cols.add(entering)
        _gcd_reduce(<list>tab[prow])

    support = []
    for i in range(m):
        j = basis[i]
        if j < ncols and (<list>tab[i])[last] > 0:
            num = (<list>tab[i])[last]
            den = (<list>tab[i])[j]
            g = gcd(num, den)
            support.append((j, num // g, den // g))
    support.sort()
    return ("feasible", support)


def nullspace_vector(rows):
    """Integer kernel vector for the first dependent column, or None."""
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t k = len(rows[0]) if m else 0
    cdef list mat = [list(row_) for row_ in rows]
    cdef list piv_rows = []
    cdef Py_ssize_t nextrow = 0
    cdef Py_ssize_t c, r, pr, idx
    cdef list v, mr, prow_vals
    for c in range(k):
        pr = -1
        for r in range(nextrow, m):
            if (<list>mat[r])[c]:
                pr = r
                break
        if pr < 0:
            v = [0] * k
            lcm_ = 1
            for idx in range(len(piv_rows)):
                r, pc = piv_rows[idx]
                e = (<list>mat[r])[pc]
                lcm_ = lcm_ // gcd(lcm_, e) * (e if e > 0 else -e)
            v[c] = lcm_
            for idx in range(len(piv_rows)):
                r, pc = piv_rows[idx]
                e = (<list>mat[r])[pc]
                v[pc] = -(<list>mat[r])[c] * (lcm_ // e)
            _gcd_reduce(v)
            for idx in range(k):
                x = v[idx]
                if x:
                    if x < 0:
                        v = [-y for y in v]
                    break
            return v
        if pr != nextrow:
            mat[pr], mat[nextrow] = mat[nextrow], mat[pr]
        piv = (<list>mat[nextrow])[c]
        prow_vals = <list>mat[nextrow]
        for r in range(m):
            if r == nextrow:
                continue
            mr = <list>mat[r]
            f = mr[c]
            if f:
                mat[r] = _gcd_reduce([piv * mr[i2] - f * prow_vals[i2] for i2 in range(k)])
        piv_rows.append((nextrow, c))
        nextrow += 1
    return None


def solve_square(rows, rhs):
    """Exact square solve; (num, den) pairs, or None when singular."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t c, r, pr, w = n + 1
    cdef list mat = []
    for r in range(n):
        mat.append(list(rows[r]) + [rhs[r]])
    cdef list mr, prow_vals
    for c in range(n):
        pr = -1
        for r in range(c, n):
            if (<list>mat[r])[c]:
                pr = r
                break
        if pr < 0:
            return None
        if pr != c:
            mat[pr], mat[c] = mat[c], mat[pr]
        piv = (<list>mat[c])[c]
        prow_vals = <list>mat[c]
        for r in range(n):
            if r == c:
                continue
            mr = <list>mat[r]
            f = mr[c]
            if f:
                mat[r] = _gcd_reduce([piv * mr[k2] - f * prow_vals[k2] for k2 in range(w)])
    out = []
    for c in range(n):
        num = (<list>mat[c])[n]
        den = (<list>mat[c])[c]
        if den < 0:
            num, den = -num, -den
        g = gcd(num, den)
        out.append((num // g, den // g))
    return out
