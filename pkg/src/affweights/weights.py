"""Weight coordinates for a fixed highest weight.

A weight eta = Lambda - sum_i b_i alpha_i is handled through two coordinate
systems: its *content* b (integer vector, index 0..l) and its *hub*
theta_i = <h_i, eta> (pairing with the simple coroots).  The hub determines
the weight up to multiples of the null root delta; the content determines
it exactly.  All arithmetic is exact: integers for contents and hubs,
Fractions for the invariant bilinear form and the defect.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import kernel, snf
from .errors import LevelMismatch


@dataclass(frozen=True)
class HighestWeight:
    """A dominant integral weight of positive level, stored by its labels.

    labels[i] = <h_i, Lambda>; the delta-coefficient of Lambda is fixed to
    zero by convention, which never matters because delta pairs to zero
    with every root.
    """

    data: object
    labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.labels) != self.data.n:
            raise ValueError(f"expected {self.data.n} labels, got {len(self.labels)}")
        if any(x < 0 for x in self.labels):
            raise ValueError("labels must be non-negative")
        if self.level <= 0:
            raise ValueError("level must be positive")

    @property
    def level(self):
        return sum(c * x for c, x in zip(self.data.comarks, self.labels))


def highest_weight(data, labels):
    return HighestWeight(data, tuple(labels))


def level_of_hub(data, theta):
    """The level of any weight with the given hub."""
    return sum(c * t for c, t in zip(data.comarks, theta))


def content_to_hub(w, b):
    """Hub of Lambda - sum b_i alpha_i, i.e. labels - A @ b."""
    return kernel.hub(w.data.a_flat, w.labels, tuple(b))


def bilinear(w, x):
    """(Lambda | sum_i x_i alpha_i), exact."""
    data = w.data
    return sum((Fraction(xi) * li * data.ratio(i)
                for i, (xi, li) in enumerate(zip(x, w.labels))), Fraction(0))


def bilinear_rr(data, x, y):
    """(sum x_i alpha_i | sum y_j alpha_j), exact."""
    n = data.n
    total = Fraction(0)
    for i in range(n):
        if not x[i]:
            continue
        row = data.matrix[i]
        acc = sum((Fraction(row[j]) * y[j] for j in range(n) if y[j]), Fraction(0))
        total += Fraction(x[i]) * data.ratio(i) * acc
    return total


def defect(w, b):
    """(Lambda|alpha) - (alpha|alpha)/2 for eta = Lambda - alpha, alpha = sum b_i alpha_i.

    Non-negative on weights of the module; shifting the content by the
    marks vector (eta by -delta) raises it by the level.
    """
    return bilinear(w, b) - bilinear_rr(w.data, b, b) / 2


def normalize_maximal(data, content):
    """Shift the content by the unique multiple of the marks vector that
    makes every entry non-negative with some entry below its mark.

    For a dominant hub this lands exactly on the maximal weight of that hub.
    """
    s = min(g // a for g, a in zip(content, data.marks))
    return tuple(g - s * a for g, a in zip(content, data.marks))


def hub_to_content(w, theta):
    """An integer content with the given hub, canonically normalized.

    Returns None when no weight of Lambda minus the root lattice has this
    hub.  Raises LevelMismatch when the hub is not even of the right level.
    The solve runs over the integers (Smith normal form); the solution is
    unique up to multiples of the marks vector, which the normalization
    fixes.
    """
    data = w.data
    if level_of_hub(data, theta) != w.level:
        raise LevelMismatch(f"hub has level {level_of_hub(data, theta)}, expected {w.level}")
    rhs = [l - t for l, t in zip(w.labels, theta)]
    sol = snf.solve(data.matrix, rhs)
    if sol is None:
        return None
    return normalize_maximal(data, sol)
