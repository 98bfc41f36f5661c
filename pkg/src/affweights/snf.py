"""Exact integer linear algebra: Smith normal form and lattice membership.

Everything here works on plain Python integers, so there is no overflow
and no rounding; matrices are small (rank + 1 squared), so the classic
elimination algorithm is more than fast enough.
"""

from functools import lru_cache


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(mat):
    """Return (d, u, v) with u*mat*v == d, u and v unimodular.

    d is diagonal (as a full matrix) with non-negative entries satisfying
    d[0][0] | d[1][1] | ... ; mat may be any integer matrix.
    """
    a = [list(row) for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    u = _identity(m)
    v = _identity(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    for t in range(min(m, n)):
        while True:
            # Pick the smallest-magnitude nonzero entry of the trailing block
            # as pivot; small pivots keep the intermediate entries small.
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            if pivot[0] != t:
                swap_rows(t, pivot[0])
            if pivot[1] != t:
                swap_cols(t, pivot[1])
            if a[t][t] < 0:
                negate_row(t)

            dirty = False
            for i in range(t + 1, m):
                if a[i][t] != 0:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t] != 0:
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j] != 0:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j] != 0:
                        dirty = True
            if dirty:
                continue

            # Divisibility: the pivot must divide every remaining entry.
            fixed = True
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t] != 0:
                        add_row(t, i, 1)
                        fixed = False
                        break
                if not fixed:
                    break
            if fixed:
                break

    return a, u, v


@lru_cache(maxsize=None)
def _cached_snf(mat):
    d, u, v = smith_normal_form(mat)
    return (tuple(tuple(r) for r in d),
            tuple(tuple(r) for r in u),
            tuple(tuple(r) for r in v))


def _mat_vec(mat, vec):
    return [sum(mij * xj for mij, xj in zip(row, vec)) for row in mat]


def solve(mat, rhs):
    """One integer solution x of mat @ x == rhs, or None if none exists.

    mat must be a tuple of tuples (it is used as a cache key).
    """
    d, u, v = _cached_snf(mat)
    m = len(d)
    n = len(d[0]) if m else 0
    c = _mat_vec(u, rhs)
    y = [0] * n
    for i in range(m):
        di = d[i][i] if i < n else 0
        if di == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % di != 0:
                return None
            y[i] = c[i] // di
    return tuple(_mat_vec(v, y))


def in_column_span(mat, vec):
    """Whether vec lies in the integer span of the columns of mat."""
    return solve(mat, vec) is not None


def primitive_null_vector(mat):
    """The positive primitive generator of the 1-dimensional kernel of mat.

    Raises ValueError if the kernel does not have rank exactly 1 or the
    generator is not strictly positive up to sign (both hold for every
    affine Cartan matrix).
    """
    d, _u, v = _cached_snf(mat)
    n = len(d[0])
    zero_cols = [j for j in range(n) if j >= len(d) or d[j][j] == 0]
    if len(zero_cols) != 1:
        raise ValueError(f"kernel has rank {len(zero_cols)}, expected 1")
    j = zero_cols[0]
    vec = [row[j] for row in v]
    if any(x < 0 for x in vec):
        vec = [-x for x in vec]
    if any(x <= 0 for x in vec):
        raise ValueError("kernel generator is not of one sign")
    return tuple(vec)
