"""Static Cartan data for the affine families.

An algebra is identified by a family tag plus its rank ``l`` (the Cartan
matrix is (l+1) x (l+1), rows and columns numbered from 0).  Only the
matrix itself is written down per family; the marks (coefficients of the
null root), comarks (coefficients of the canonical central element) and
the translation-lattice constants d_1..d_l are derived from it, and a set
of construction-time checks rejects any transcription slip:

* A @ marks == 0 and comarks @ A == 0, both primitive and positive,
* diagonal 2, off-diagonal <= 0,
* diag(comark/mark) @ A symmetric,
* the d_i are positive integers obeying the per-family rule.
"""

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import ConsistencyError, InvalidRank
from .snf import primitive_null_vector


class Family(enum.Enum):
    A1 = "A1"
    B1 = "B1"
    C1 = "C1"
    D1 = "D1"
    D2 = "D2"
    A2_ODD = "A2odd"
    A2_EVEN = "A2even"
    E1_6 = "E1_6"
    E1_7 = "E1_7"
    E1_8 = "E1_8"
    E2_6 = "E2_6"
    F1_4 = "F1_4"
    G1_2 = "G1_2"
    D3_4 = "D3_4"


# (minimum rank, maximum rank or None for unbounded)
_RANK_RANGE = {
    Family.A1: (1, None),
    Family.B1: (3, None),
    Family.C1: (2, None),
    Family.D1: (4, None),
    Family.D2: (2, None),
    Family.A2_ODD: (3, None),
    Family.A2_EVEN: (1, None),
    Family.E1_6: (6, 6),
    Family.E1_7: (7, 7),
    Family.E1_8: (8, 8),
    Family.E2_6: (4, 4),
    Family.F1_4: (4, 4),
    Family.G1_2: (2, 2),
    Family.D3_4: (2, 2),
}

_TWIST = {
    Family.A1: 1, Family.B1: 1, Family.C1: 1, Family.D1: 1,
    Family.E1_6: 1, Family.E1_7: 1, Family.E1_8: 1,
    Family.F1_4: 1, Family.G1_2: 1,
    Family.D2: 2, Family.A2_ODD: 2, Family.A2_EVEN: 2, Family.E2_6: 2,
    Family.D3_4: 3,
}

_SYMMETRIC_FAMILIES = {Family.A1, Family.D1, Family.E1_6, Family.E1_7, Family.E1_8}


@dataclass(frozen=True)
class AffineType:
    family: Family
    rank: int

    def __post_init__(self):
        lo, hi = _RANK_RANGE[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidRank(f"rank {self.rank} out of range for {self.family.value}")

    @property
    def twist(self):
        return _TWIST[self.family]

    @property
    def name(self):
        """Name in the letter-twist-subscript grammar, e.g. A1~2 or D2~5."""
        fam, l = self.family, self.rank
        letter = fam.value[0]
        if fam is Family.A2_EVEN:
            sub = 2 * l
        elif fam is Family.A2_ODD:
            sub = 2 * l - 1
        elif fam is Family.D2:
            sub = l + 1
        elif fam is Family.D3_4:
            sub = 4
        elif fam is Family.E2_6:
            sub = 6
        elif fam in (Family.E1_6, Family.E1_7, Family.E1_8, Family.F1_4, Family.G1_2):
            sub = int(fam.value.split("_")[1])
        else:
            sub = l
        return f"{letter}{self.twist}~{sub}"

    def __str__(self):
        return self.name


_NAME_RE = re.compile(r"^([A-G])([123])~(\d+)$")


def parse_type(name):
    """Parse names like "A1~2", "A2~4", "D2~5", "E1~6" into an AffineType.

    The subscript is the one from the customary superscript/subscript
    notation: A2~4 means the twisted algebra with 5 = 4+1 nodes and rank 2,
    D2~5 has rank 4, and so on.  Raises InvalidRank for a subscript outside
    the family's range and ValueError for anything not matching the grammar.
    """
    m = _NAME_RE.match(name.strip())
    if not m:
        raise ValueError(f"cannot parse affine type {name!r}; expected e.g. A1~2, D2~3, E1~6")
    letter, twist, sub = m.group(1), int(m.group(2)), int(m.group(3))
    if letter == "A" and twist == 1:
        return AffineType(Family.A1, sub)
    if letter == "A" and twist == 2:
        if sub % 2 == 0:
            return AffineType(Family.A2_EVEN, sub // 2)
        return AffineType(Family.A2_ODD, (sub + 1) // 2)
    if letter == "B" and twist == 1:
        return AffineType(Family.B1, sub)
    if letter == "C" and twist == 1:
        return AffineType(Family.C1, sub)
    if letter == "D" and twist == 1:
        return AffineType(Family.D1, sub)
    if letter == "D" and twist == 2:
        return AffineType(Family.D2, sub - 1)
    if letter == "D" and twist == 3 and sub == 4:
        return AffineType(Family.D3_4, 2)
    if letter == "E" and twist == 1 and sub in (6, 7, 8):
        return AffineType({6: Family.E1_6, 7: Family.E1_7, 8: Family.E1_8}[sub], sub)
    if letter == "E" and twist == 2 and sub == 6:
        return AffineType(Family.E2_6, 4)
    if letter == "F" and twist == 1 and sub == 4:
        return AffineType(Family.F1_4, 4)
    if letter == "G" and twist == 1 and sub == 2:
        return AffineType(Family.G1_2, 2)
    raise InvalidRank(f"no affine algebra named {name!r}")


@dataclass(frozen=True)
class CartanData:
    """Immutable per-algebra record; safe to share between threads."""

    atype: AffineType
    matrix: tuple          # (l+1) x (l+1), tuple of tuples
    marks: tuple           # a_0..a_l, coefficients of the null root
    comarks: tuple         # a*_0..a*_l, coefficients of the central element
    d: tuple               # d_1..d_l, generators d_i alpha_i / a_0 of M
    a_flat: tuple          # matrix flattened row-major, for the kernels

    @property
    def rank(self):
        return self.atype.rank

    @property
    def n(self):
        return self.rank + 1

    @property
    def a0(self):
        return self.marks[0]

    def ratio(self, i):
        """comark_i / mark_i, the squared-length normalisation of root i."""
        return Fraction(self.comarks[i], self.marks[i])


def _path(n):
    mat = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        mat[i][i + 1] = -1
        mat[i + 1][i] = -1
    return mat


def _fork_tail(n):
    # nodes 0 and 1 both attached to node 2, then a path out to node n-1
    mat = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    mat[0][2] = mat[2][0] = -1
    mat[1][2] = mat[2][1] = -1
    for i in range(2, n - 1):
        mat[i][i + 1] = -1
        mat[i + 1][i] = -1
    return mat


_E16 = ((2, 0, 0, 0, 0, 0, -1),
        (0, 2, -1, 0, 0, 0, 0),
        (0, -1, 2, -1, 0, 0, 0),
        (0, 0, -1, 2, -1, 0, -1),
        (0, 0, 0, -1, 2, -1, 0),
        (0, 0, 0, 0, -1, 2, 0),
        (-1, 0, 0, -1, 0, 0, 2))

_E17 = ((2, -1, 0, 0, 0, 0, 0, 0),
        (-1, 2, -1, 0, 0, 0, 0, 0),
        (0, -1, 2, -1, 0, 0, 0, 0),
        (0, 0, -1, 2, -1, 0, 0, -1),
        (0, 0, 0, -1, 2, -1, 0, 0),
        (0, 0, 0, 0, -1, 2, -1, 0),
        (0, 0, 0, 0, 0, -1, 2, 0),
        (0, 0, 0, -1, 0, 0, 0, 2))

_E18 = ((2, -1, 0, 0, 0, 0, 0, 0, 0),
        (-1, 2, -1, 0, 0, 0, 0, 0, 0),
        (0, -1, 2, -1, 0, 0, 0, 0, 0),
        (0, 0, -1, 2, -1, 0, 0, 0, 0),
        (0, 0, 0, -1, 2, -1, 0, 0, 0),
        (0, 0, 0, 0, -1, 2, -1, 0, -1),
        (0, 0, 0, 0, 0, -1, 2, -1, 0),
        (0, 0, 0, 0, 0, 0, -1, 2, 0),
        (0, 0, 0, 0, 0, -1, 0, 0, 2))

_F14 = ((2, -1, 0, 0, 0),
        (-1, 2, -1, 0, 0),
        (0, -1, 2, -1, 0),
        (0, 0, -2, 2, -1),
        (0, 0, 0, -1, 2))

# dual path to F1~4: same diagram with the arrow reversed
_E26 = ((2, -1, 0, 0, 0),
        (-1, 2, -1, 0, 0),
        (0, -1, 2, -2, 0),
        (0, 0, -1, 2, -1),
        (0, 0, 0, -1, 2))

_G12 = ((2, -1, 0),
        (-1, 2, -1),
        (0, -3, 2))

# dual path to G1~2
_D34 = ((2, -1, 0),
        (-1, 2, -3),
        (0, -1, 2))


def _build_matrix(atype):
    fam, l, n = atype.family, atype.rank, atype.rank + 1
    if fam is Family.A1:
        if l == 1:
            return [[2, -2], [-2, 2]]
        mat = _path(n)
        mat[0][n - 1] = mat[n - 1][0] = -1
        return mat
    if fam is Family.B1:
        mat = _fork_tail(n)
        mat[l][l - 1] = -2
        return mat
    if fam is Family.A2_ODD:
        mat = _fork_tail(n)
        mat[l - 1][l] = -2
        return mat
    if fam is Family.C1:
        mat = _path(n)
        mat[1][0] = -2
        mat[l - 1][l] = -2
        return mat
    if fam is Family.D2:
        mat = _path(n)
        mat[0][1] = -2
        mat[l][l - 1] = -2
        return mat
    if fam is Family.A2_EVEN:
        if l == 1:
            return [[2, -4], [-1, 2]]
        mat = _path(n)
        mat[0][1] = -2
        mat[l - 1][l] = -2
        return mat
    if fam is Family.D1:
        mat = _fork_tail(n)
        # a second fork at the far end: nodes l-1 and l attach to l-2
        mat[l][l - 1] = mat[l - 1][l] = 0
        mat[l][l - 2] = mat[l - 2][l] = -1
        return mat
    return {
        Family.E1_6: _E16, Family.E1_7: _E17, Family.E1_8: _E18,
        Family.E2_6: _E26, Family.F1_4: _F14, Family.G1_2: _G12,
        Family.D3_4: _D34,
    }[fam]


def _lattice_constants(atype, marks, comarks):
    fam, l = atype.family, atype.rank
    if fam is Family.A2_EVEN:
        # d_i = a_i for i < l (= 2) and d_l = a_l = 1
        return tuple(marks[1:])
    if atype.twist != 1:
        return (1,) * l
    out = []
    for i in range(1, l + 1):
        if marks[i] % comarks[i] != 0:
            raise ConsistencyError(f"{atype}: d_{i} is not an integer")
        out.append(marks[i] // comarks[i])
    return tuple(out)


def _validate(data):
    atype, mat, marks, comarks = data.atype, data.matrix, data.marks, data.comarks
    n = data.n
    if len(mat) != n or any(len(row) != n for row in mat):
        raise ConsistencyError(f"{atype}: matrix is not {n}x{n}")
    for i in range(n):
        if mat[i][i] != 2:
            raise ConsistencyError(f"{atype}: diagonal entry {i} is not 2")
        for j in range(n):
            if i != j and mat[i][j] > 0:
                raise ConsistencyError(f"{atype}: positive off-diagonal entry at {(i, j)}")
    for i in range(n):
        if sum(mat[i][j] * marks[j] for j in range(n)) != 0:
            raise ConsistencyError(f"{atype}: marks are not a null vector (row {i})")
        if sum(comarks[j] * mat[j][i] for j in range(n)) != 0:
            raise ConsistencyError(f"{atype}: comarks are not a left null vector (col {i})")
    if gcd(*marks) != 1 or gcd(*comarks) != 1:
        raise ConsistencyError(f"{atype}: marks/comarks are not primitive")
    for i in range(n):
        for j in range(n):
            # symmetry of diag(comark/mark) @ A, cross-multiplied
            if comarks[i] * mat[i][j] * marks[j] != comarks[j] * mat[j][i] * marks[i]:
                raise ConsistencyError(f"{atype}: weighted matrix not symmetric at {(i, j)}")
    if any(di < 1 for di in data.d):
        raise ConsistencyError(f"{atype}: non-positive lattice constant")
    if atype.family in _SYMMETRIC_FAMILIES or (atype.twist != 1 and atype.family is not Family.A2_EVEN):
        if any(di != 1 for di in data.d):
            raise ConsistencyError(f"{atype}: expected all lattice constants 1")
    if atype.family is Family.A2_EVEN and marks[0] != 2:
        raise ConsistencyError(f"{atype}: expected mark 2 at node 0")


@lru_cache(maxsize=None)
def build_cartan(atype):
    """Cartan data for the given affine type, validated on construction."""
    mat = tuple(tuple(row) for row in _build_matrix(atype))
    try:
        marks = primitive_null_vector(mat)
        comarks = primitive_null_vector(tuple(zip(*mat)))
    except ValueError as exc:
        raise ConsistencyError(f"{atype}: {exc}") from exc
    d = _lattice_constants(atype, marks, comarks)
    data = CartanData(atype=atype, matrix=mat, marks=marks, comarks=comarks,
                      d=d, a_flat=tuple(x for row in mat for x in row))
    _validate(data)
    return data


def bilinear_roots(data, i, j):
    """(alpha_i | alpha_j) as an exact rational."""
    return data.ratio(i) * data.matrix[i][j]
