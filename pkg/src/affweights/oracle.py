"""Recursive ground truth, independent of the table machinery.

A weight of positive level is Weyl-equivalent to a dominant one, and the
dominant weights of the module are exactly the dominant weights below the
highest weight, i.e. with non-negative content.  So membership reduces to:
reflect into the dominant chamber, then check for negative entries.  The
only code shared with the non-recursive criterion is the Cartan data and
the reflection kernel, so agreement between the two is evidence, not a
tautology.
"""

from . import kernel


def is_weight_oracle(w, b):
    """Membership by dominance reduction."""
    dom, _ = kernel.dominant_reduce(w.data.a_flat, w.labels, tuple(b))
    return min(dom) >= 0


def enumerate_weights(w, floor_bound):
    """All weight contents with node-0 entry between 0 and floor_bound.

    Breadth-first from the highest weight in ascending content-sum order,
    stepping down one simple root at a time.  From a known weight, the
    step down node i stays in the weight system exactly when p + theta_i
    >= 1, where p is the number of steps already available upward along
    node i; every upward element has a smaller content sum, hence is
    already enumerated.
    """
    if floor_bound < 0:
        return []
    data = w.data
    n = data.n
    zero = (0,) * n
    found = {zero}
    current = [zero]
    while current:
        nxt = set()
        for b in current:
            theta = kernel.hub(data.a_flat, w.labels, b)
            for i in range(n):
                if i == 0 and b[0] + 1 > floor_bound:
                    continue
                p = 0
                probe = list(b)
                while True:
                    probe[i] -= 1
                    if tuple(probe) not in found:
                        break
                    p += 1
                if p + theta[i] >= 1:
                    child = b[:i] + (b[i] + 1,) + b[i + 1:]
                    if child not in found:
                        found.add(child)
                        nxt.add(child)
        current = sorted(nxt)
    return sorted(found)
