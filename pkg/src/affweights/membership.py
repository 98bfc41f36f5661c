"""Non-recursive membership in the weight system, with certificates.

Given the representative table for a highest weight of level k, membership
of eta = Lambda - sum b_i alpha_i reduces to a single table lookup plus a
closed formula.  Writing zeta for the table representative with the same
residue key and eta - zeta = sum c_i alpha_i, the translation part is

    alpha = (1/(k a_0)) * sum_{i>=1} (a_0 c_i - a_i c_0) alpha_i  (in M)

and the delta-shift of eta is

    s(eta) = -c_0/a_0 - ((zeta|alpha) + (alpha|alpha) k / 2),

an integer.  eta is a weight of the module exactly when s(eta) >= 0; the
maximal weight above eta is eta + s(eta) delta.  Both the integrality of s
and the replay identity eta = t_alpha(zeta) - s delta are asserted on
every query: a failure would mean a corrupted table, never a verdict.
"""

from dataclasses import dataclass
from fractions import Fraction

from .cartan import build_cartan, parse_type
from .errors import ConsistencyError, InvalidInput, NotAWeight, NotEquivalent
from .maxweights import build_table, residue_key
from .weights import HighestWeight, bilinear, bilinear_rr, defect
from .weyl import translate


@dataclass(frozen=True)
class MembershipCertificate:
    content: tuple        # the queried content b
    rep: tuple            # content of the table representative zeta
    alpha: tuple          # lattice element, coefficients on alpha_1..alpha_l (Fractions)
    shift: int            # s(eta)
    defect: object        # defect of eta (Fraction)
    verdict: bool         # shift >= 0

    def to_json_dict(self):
        return {
            "content": list(self.content),
            "representative": list(self.rep),
            "alpha": [{"num": x.numerator, "den": x.denominator} for x in self.alpha],
            "shift": self.shift,
            "defect": {"num": self.defect.numerator, "den": self.defect.denominator},
            "verdict": self.verdict,
        }


def delta_shift(table, b):
    """Certificate for an integer content b (entries may be negative)."""
    w = table.weight
    data = w.data
    b = tuple(b)
    if len(b) != data.n:
        raise InvalidInput(f"expected {data.n} content entries, got {len(b)}")
    entry = table.lookup(residue_key(w, b))
    if entry is None:
        raise NotEquivalent("content has no residue class in the table")

    k = w.level
    a = data.marks
    a0 = a[0]
    c = tuple(zb - xb for zb, xb in zip(entry.content, b))

    alpha = [Fraction(0)]
    for i in range(1, data.n):
        num = a0 * c[i] - a[i] * c[0]
        if num % (k * data.d[i - 1]) != 0:
            raise ConsistencyError("translation part fell outside the lattice M")
        alpha.append(Fraction(num, k * a0))
    alpha = tuple(alpha)

    zeta_alpha = bilinear(w, alpha) - bilinear_rr(data, entry.content, alpha)
    s = -Fraction(c[0], a0) - (zeta_alpha + bilinear_rr(data, alpha, alpha) * k / 2)
    if s.denominator != 1:
        raise ConsistencyError("delta-shift came out non-integral")
    s = int(s)

    replay = translate(w, entry.content, alpha)
    if tuple(x + s * ai for x, ai in zip(replay, a)) != b:
        raise ConsistencyError("certificate replay did not reproduce the queried content")

    return MembershipCertificate(content=b, rep=entry.content, alpha=alpha,
                                 shift=s, defect=defect(w, b), verdict=s >= 0)


def is_weight(table, b):
    """Whether the content belongs to the weight system of the module."""
    cert = delta_shift(table, b)
    if cert.verdict and any(x < 0 for x in b):
        raise ConsistencyError("positive verdict on a content with negative entries")
    return cert.verdict


def max_weight_of(table, b):
    """Content of the maximal weight over b, namely b - s(eta) * marks."""
    cert = delta_shift(table, b)
    return tuple(x - cert.shift * ai for x, ai in zip(b, table.weight.data.marks))


def _apply_word_to_root(data, i, word):
    """Image of alpha_i under the product of the reflections in word,
    applied left to right; always a real root (integer coefficients)."""
    n = data.n
    if not 0 <= i < n:
        raise InvalidInput(f"root index {i} out of range")
    v = [0] * n
    v[i] = 1
    for j in word:
        if not 0 <= j < n:
            raise InvalidInput(f"reflection index {j} out of range")
        pairing = sum(data.matrix[j][t] * v[t] for t in range(n))
        v[j] -= pairing
    return tuple(v)


def string_profile(table, b, root_index, word=()):
    """Delta-shifts along the maximal root string through a weight.

    The root is alpha_{root_index}, optionally pushed through a reflection
    word.  The string runs from the end where subtracting the root leaves
    the weight system; the returned list gives s(.) at each position from
    that end.
    """
    w = table.weight
    b = tuple(b)
    if not is_weight(table, b):
        raise NotAWeight(f"{b} is not a weight of the module")
    root = _apply_word_to_root(w.data, root_index, word)

    def pos(j):
        # eta + j*root has content b - j*root
        return tuple(x - j * r for x, r in zip(b, root))

    lo = 0
    while is_weight(table, pos(lo - 1)):
        lo -= 1
    hi = 0
    while is_weight(table, pos(hi + 1)):
        hi += 1
    return [delta_shift(table, pos(j)).shift for j in range(lo, hi + 1)]


def block_exists(e, multicharge, content):
    """Whether the cyclotomic block with the given residue content exists.

    The multicharge lists residues in [0, e); the corresponding dominant
    weight has label lambda_i = (number of charges equal to i), and the
    block exists exactly when the content is a weight of that module for
    the affine special linear algebra on e nodes.
    """
    if e < 2:
        raise InvalidInput("e must be at least 2")
    charges = list(multicharge)
    if not charges:
        raise InvalidInput("multicharge must be non-empty")
    if any(not 0 <= c < e for c in charges):
        raise InvalidInput(f"multicharge entries must lie in [0, {e})")
    content = tuple(content)
    if len(content) != e:
        raise InvalidInput(f"expected {e} content entries, got {len(content)}")
    labels = [0] * e
    for c in charges:
        labels[c] += 1
    w = HighestWeight(build_cartan(parse_type(f"A1~{e - 1}")), tuple(labels))
    return is_weight(build_table(w), content)
