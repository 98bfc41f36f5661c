"""The Weyl group action on contents.

The simple reflection s_i sends eta to eta - theta_i alpha_i, so on
contents it adds theta_i to entry i.  The finite Weyl group is generated
by s_1..s_l (node 0 excluded); the translations t_alpha for alpha in the
lattice M make up the rest of the affine Weyl group.
"""

import os
from fractions import Fraction

from . import kernel
from .errors import ConsistencyError, NotInLattice
from .weights import bilinear, bilinear_rr, content_to_hub

_DEFAULT_ORBIT_CAP = 10 ** 7


def reflect(w, b, i):
    """Content of s_i applied to the weight with content b; an involution."""
    theta = content_to_hub(w, b)
    out = list(b)
    out[i] += theta[i]
    return tuple(out)


def to_dominant(w, b):
    """Reduce to the dominant chamber, reflecting at the smallest negative
    hub index each step.  Returns (content, word); replaying the word on
    the result recovers the input."""
    bb, word = kernel.dominant_reduce(w.data.a_flat, w.labels, tuple(b), want_word=True)
    return bb, word


def _orbit_cap():
    return int(os.environ.get("WEIGHTS_MAX_ORBIT", _DEFAULT_ORBIT_CAP))


def finite_orbit(w, seeds, max_elements=None):
    """Closure of each seed content under s_1..s_l, grouped by seed.

    Every seed must have non-negative entries.  Returns a list of sorted
    content tuples, one group per seed (seeds already covered by an earlier
    group are skipped).  A safety cap (WEIGHTS_MAX_ORBIT, default 10^7)
    raises rather than truncates.
    """
    cap = max_elements if max_elements is not None else _orbit_cap()
    data = w.data
    n = data.n
    seen = set()
    groups = []
    total = 0
    for seed in seeds:
        seed = tuple(seed)
        if any(x < 0 for x in seed):
            raise ValueError(f"orbit seed {seed} has a negative entry")
        if seed in seen:
            continue
        orbit = {seed}
        frontier = [seed]
        while frontier:
            nxt = []
            for b in frontier:
                theta = kernel.hub(data.a_flat, w.labels, b)
                for i in range(1, n):
                    if theta[i] == 0:
                        continue
                    img = list(b)
                    img[i] += theta[i]
                    img = tuple(img)
                    if img not in orbit:
                        orbit.add(img)
                        nxt.append(img)
            total += len(nxt)
            if total > cap:
                raise ConsistencyError(f"orbit closure exceeded the safety cap {cap}")
            frontier = nxt
        seen |= orbit
        groups.append(tuple(sorted(orbit)))
    return groups


def in_lattice(data, alpha):
    """Whether sum alpha_i * (simple root i) lies in M.

    M is generated by d_i alpha_i / a_0 for i = 1..l, so the test is that
    the node-0 coefficient vanishes and a_0 * alpha_i is divisible by d_i.
    """
    if alpha[0] != 0:
        return False
    a0 = data.a0
    for i in range(1, data.n):
        x = Fraction(alpha[i]) * a0
        if x.denominator != 1 or x.numerator % data.d[i - 1] != 0:
            return False
    return True


def translate(w, b, alpha):
    """Content of t_alpha applied to the weight with content b.

    t_alpha: eta -> eta + k*alpha - ((eta|alpha) + (alpha|alpha)k/2) delta.
    The result is integral for every weight in Lambda minus the root
    lattice; integrality is checked rather than assumed.
    """
    data = w.data
    if not in_lattice(data, alpha):
        raise NotInLattice(f"{alpha} is not in the lattice M")
    k = w.level
    eta_alpha = bilinear(w, alpha) - bilinear_rr(data, b, alpha)
    coeff = eta_alpha + bilinear_rr(data, alpha, alpha) * k / 2
    out = []
    for i in range(data.n):
        x = b[i] - k * Fraction(alpha[i]) + coeff * data.marks[i]
        if x.denominator != 1:
            raise ConsistencyError(f"translate produced a non-integral content at node {i}")
        out.append(int(x))
    return tuple(out)
