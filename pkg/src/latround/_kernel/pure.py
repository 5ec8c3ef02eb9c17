"""Exact integer pivoting kernels, pure Python edition.

These three routines are the hot inner loops of the whole package: every
hull-membership certificate, Caratheodory reduction and cell-vertex
enumeration bottoms out here.  All arithmetic is on Python integers, so
results are exact at any magnitude.  ``latround._kernel`` swaps in the
compiled twin (``_speedups``) when it is available; both implementations
must stay behaviourally identical, including tie-breaking.
"""

from math import gcd

__all__ = ["lp_feasible", "nullspace_vector", "solve_square"]


def _gcd_reduce(row):
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return row
    if g > 1:
        for i in range(len(row)):
            row[i] //= g
    return row


def lp_feasible(rows, rhs):
    """Decide whether A @ lam = b admits lam >= 0, by exact phase-1 simplex.

    ``rows`` is a list of integer rows of A and ``rhs`` the integer right
    hand side.  Returns ``("feasible", support)`` where ``support`` lists
    ``(column, num, den)`` for the positive entries of a basic feasible
    solution (its support columns are linearly independent), or
    ``("infeasible", (num, den))`` carrying the positive optimum of the
    phase-1 objective.  Bland's rule on both the entering column and the
    leaving row makes the pivoting finite and deterministic.
    """
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    if m == 0:
        return ("feasible", [])
    last = ncols + m
    tab = []
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
    basis = [ncols + i for i in range(m)]
    art_rows = [True] * m
    basic_cols = set()

    while True:
        active = [i for i in range(m) if art_rows[i]]
        if all(tab[i][last] == 0 for i in active):
            break
        # price real columns against the artificial rows only:
        # score_j = sum_i tab[i][j] / tab[i][basis[i]] over artificial rows,
        # computed over the common positive denominator prod(tab[i][basis[i]]).
        dens = [tab[i][basis[i]] for i in active]
        prod = 1
        for d in dens:
            prod *= d
        shares = [prod // d for d in dens]
        entering = -1
        for j in range(ncols):
            if j in basic_cols:
                continue
            score = 0
            for i, s in zip(active, shares):
                t = tab[i][j]
                if t:
                    score += t * s
            if score > 0:
                entering = j
                break
        if entering < 0:
            num = 0
            den = 1
            for i in active:
                rn = tab[i][last]
                rd = tab[i][basis[i]]
                num = num * rd + rn * den
                den *= rd
            g = gcd(num, den)
            return ("infeasible", (num // g, den // g))
        # exact ratio test with Bland tie-break on the basis index
        prow = -1
        rn = rd = 0
        for i in range(m):
            t = tab[i][entering]
            if t <= 0:
                continue
            bn = tab[i][last]
            if prow < 0 or bn * rd < rn * t or (bn * rd == rn * t and basis[i] < basis[prow]):
                prow, rn, rd = i, bn, t
        # a positive score forces a positive entry in some artificial row
        assert prow >= 0
        piv = tab[prow][entering]
        prow_vals = tab[prow]
        for i in range(m):
            if i == prow:
                continue
            f = tab[i][entering]
            if f:
                ti = tab[i]
                tab[i] = _gcd_reduce([piv * a - f * b for a, b in zip(ti, prow_vals)])
        if art_rows[prow]:
            art_rows[prow] = False
        else:
            basic_cols.discard(basis[prow])
        basis[prow] = entering
        basic_cols.add(entering)
        _gcd_reduce(tab[prow])

    support = []
    for i in range(m):
        j = basis[i]
        if j < ncols and tab[i][last] > 0:
            num = tab[i][last]
            den = tab[i][j]
            g = gcd(num, den)
            support.append((j, num // g, den // g))
    support.sort()
    return ("feasible", support)


def nullspace_vector(rows):
    """Integer v != 0 with M @ v = 0, or None when the columns of M are
    linearly independent.

    Deterministic: the vector corresponds to the lowest-index dependent
    column, with the remaining free columns held at zero.
    """
    m = len(rows)
    k = len(rows[0]) if m else 0
    mat = [list(r) for r in rows]
    piv_rows = []  # (row, col) in discovery order
    nextrow = 0
    for c in range(k):
        pr = -1
        for r in range(nextrow, m):
            if mat[r][c]:
                pr = r
                break
        if pr < 0:
            # c is the first dependent column; back-read the reduced rows
            v = [0] * k
            lcm = 1
            for r, pc in piv_rows:
                e = mat[r][pc]
                lcm = lcm // gcd(lcm, e) * abs(e)
            v[c] = lcm
            for r, pc in piv_rows:
                e = mat[r][pc]
                v[pc] = -mat[r][c] * (lcm // e)
            _gcd_reduce(v)
            for x in v:
                if x:
                    if x < 0:
                        v = [-y for y in v]
                    break
            return v
        if pr != nextrow:
            mat[pr], mat[nextrow] = mat[nextrow], mat[pr]
        piv = mat[nextrow][c]
        prow_vals = mat[nextrow]
        for r in range(m):
            if r == nextrow:
                continue
            f = mat[r][c]
            if f:
                mat[r] = _gcd_reduce([piv * a - f * b for a, b in zip(mat[r], prow_vals)])
        piv_rows.append((nextrow, c))
        nextrow += 1
    return None


def solve_square(rows, rhs):
    """Solve an n-by-n integer system exactly.

    Returns the solution as a list of reduced ``(num, den)`` pairs with
    positive denominators, or None when the matrix is singular.
    """
    n = len(rows)
    mat = [list(r) + [b] for r, b in zip(rows, rhs)]
    for c in range(n):
        pr = -1
        for r in range(c, n):
            if mat[r][c]:
                pr = r
                break
        if pr < 0:
            return None
        if pr != c:
            mat[pr], mat[c] = mat[c], mat[pr]
        piv = mat[c][c]
        prow_vals = mat[c]
        for r in range(n):
            if r == c:
                continue
            f = mat[r][c]
            if f:
                mat[r] = _gcd_reduce([piv * a - f * b for a, b in zip(mat[r], prow_vals)])
    out = []
    for c in range(n):
        num = mat[c][n]
        den = mat[c][c]
        if den < 0:
            num, den = -num, -den
        g = gcd(num, den)
        out.append((num // g, den // g))
    return out
