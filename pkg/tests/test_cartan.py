import math
from fractions import Fraction

import pytest

from affweights import (AffineType, Family, InvalidRank, bilinear_roots,
                        build_cartan, parse_type)


def all_types(max_rank):
    out = []
    for fam, lo in [(Family.A1, 1), (Family.B1, 3), (Family.C1, 2),
                    (Family.D1, 4), (Family.D2, 2), (Family.A2_ODD, 3),
                    (Family.A2_EVEN, 1)]:
        out.extend(AffineType(fam, l) for l in range(lo, max_rank + 1))
    out += [AffineType(Family.E1_6, 6), AffineType(Family.E1_7, 7),
            AffineType(Family.E1_8, 8), AffineType(Family.E2_6, 4),
            AffineType(Family.F1_4, 4), AffineType(Family.G1_2, 2),
            AffineType(Family.D3_4, 2)]
    return out


def test_a12_matrix_and_marks():
    data = build_cartan(parse_type("A1~2"))
    assert data.matrix == ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))
    assert data.marks == (1, 1, 1)
    assert data.comarks == (1, 1, 1)
    assert data.d == (1, 1)


def test_a24_marks_comarks_d():
    data = build_cartan(parse_type("A2~4"))
    assert data.marks == (2, 2, 1)
    assert data.comarks == (1, 2, 2)
    assert data.d == (2, 1)


def test_d23_matrix_and_comarks():
    data = build_cartan(parse_type("D2~3"))
    assert data.matrix == ((2, -2, 0), (-1, 2, -1), (0, -2, 2))
    assert data.comarks == (1, 2, 1)
    assert data.d == (1, 1)


def test_invalid_ranks():
    with pytest.raises(InvalidRank):
        AffineType(Family.B1, 2)
    with pytest.raises(InvalidRank):
        AffineType(Family.D1, 3)
    with pytest.raises(InvalidRank):
        AffineType(Family.E1_6, 7)
    with pytest.raises(InvalidRank):
        parse_type("A2~3")  # A2odd needs subscript >= 5


def test_parse_round_trip():
    for name in ["A1~1", "A1~7", "A2~2", "A2~4", "A2~5", "A2~9", "B1~3",
                 "C1~2", "D1~4", "D2~3", "D2~5", "D3~4", "E1~6", "E1~7",
                 "E1~8", "E2~6", "F1~4", "G1~2"]:
        assert parse_type(name).name == name
    with pytest.raises(ValueError):
        parse_type("H1~2")
    with pytest.raises(ValueError):
        parse_type("A12")


@pytest.mark.parametrize("atype", all_types(12), ids=lambda t: t.name)
def test_invariant_sweep(atype):
    data = build_cartan(atype)
    n = data.n
    # null vectors, primitivity
    for i in range(n):
        assert sum(data.matrix[i][j] * data.marks[j] for j in range(n)) == 0
        assert sum(data.comarks[j] * data.matrix[j][i] for j in range(n)) == 0
    assert math.gcd(*data.marks) == 1
    assert math.gcd(*data.comarks) == 1
    assert all(x > 0 for x in data.marks + data.comarks)
    # matrix shape constraints
    for i in range(n):
        assert data.matrix[i][i] == 2
        for j in range(n):
            if i != j:
                assert data.matrix[i][j] <= 0


@pytest.mark.parametrize("atype", all_types(8), ids=lambda t: t.name)
def test_bilinear_symmetric_and_null(atype):
    data = build_cartan(atype)
    n = data.n
    for i in range(n):
        # (alpha_i | delta) = 0
        assert sum(data.marks[j] * bilinear_roots(data, i, j) for j in range(n)) == 0
        for j in range(n):
            assert bilinear_roots(data, i, j) == bilinear_roots(data, j, i)


def test_bilinear_examples():
    a12 = build_cartan(parse_type("A1~2"))
    assert bilinear_roots(a12, 1, 1) == 2
    assert bilinear_roots(a12, 0, 1) == -1
    a24 = build_cartan(parse_type("A2~4"))
    assert bilinear_roots(a24, 0, 0) == Fraction(1)
