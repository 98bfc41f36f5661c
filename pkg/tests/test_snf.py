import random

from affweights.snf import (in_column_span, primitive_null_vector,
                            smith_normal_form, solve)


def mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def det(mat):
    # exact cofactor expansion; matrices here are tiny
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        total += (-1) ** j * mat[0][j] * det(minor)
    return total


def check_snf(mat):
    d, u, v = smith_normal_form(mat)
    m, n = len(mat), len(mat[0])
    assert mat_mul(mat_mul(u, [list(r) for r in mat]), v) == d
    assert abs(det(u)) == 1
    assert abs(det(v)) == 1
    diag = [d[i][i] for i in range(min(m, n))]
    for i in range(m):
        for j in range(n):
            if i != j:
                assert d[i][j] == 0
    for x, y in zip(diag, diag[1:]):
        assert x >= 0
        if x != 0:
            assert y % x == 0
        else:
            assert y == 0


def test_snf_random_matrices():
    rng = random.Random(42)
    for _ in range(60):
        m = rng.randint(1, 5)
        n = rng.randint(1, 5)
        mat = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        check_snf(mat)


def test_solve_round_trip():
    rng = random.Random(43)
    for _ in range(60):
        n = rng.randint(1, 5)
        mat = tuple(tuple(rng.randint(-6, 6) for _ in range(n)) for _ in range(n))
        x = [rng.randint(-10, 10) for _ in range(n)]
        rhs = [sum(mat[i][j] * x[j] for j in range(n)) for i in range(n)]
        sol = solve(mat, rhs)
        assert sol is not None
        assert [sum(mat[i][j] * sol[j] for j in range(n)) for i in range(n)] == rhs


def test_membership_examples():
    mat = ((2, 0), (0, 2))
    assert in_column_span(mat, [4, -2])
    assert not in_column_span(mat, [1, 0])
    assert solve(((1, 1), (1, 1)), [1, 0]) is None


def test_primitive_null_vector():
    mat = ((2, -2), (-2, 2))
    assert primitive_null_vector(mat) == (1, 1)
