"""Hub equivalence modulo the hub-image of the root lattice, two ways.

Two hubs of equal level are equivalent exactly when their difference is an
integer combination of the Cartan matrix columns.  The closed forms below
decide this with one or two congruences per family; the independent oracle
decides it by Smith-normal-form lattice membership.  The two must agree on
every input, which the test suite sweeps per type.
"""

from . import snf
from .cartan import Family
from .weights import level_of_hub


def _congruence_ok(data, psi):
    fam = data.atype.family
    l = data.rank
    if fam is Family.A1:
        return sum(j * psi[j] for j in range(1, l + 1)) % (l + 1) == 0
    if fam is Family.B1:
        return psi[l] % 2 == 0
    if fam is Family.C1:
        return sum(psi[0::2]) % 2 == 0
    if fam is Family.D1:
        if l % 2 == 0:
            return (psi[0] + psi[1]) % 2 == 0 and sum(psi[1:l:2]) % 2 == 0
        return (psi[0] - psi[1] + 2 * sum(psi[2:l:2])) % 4 == 0
    if fam is Family.D2:
        return psi[0] % 2 == 0
    if fam is Family.A2_ODD:
        return sum(psi[1::2]) % 2 == 0
    if fam is Family.E1_6:
        return (psi[0] + 2 * psi[6] - psi[5] - 2 * psi[4]) % 3 == 0
    if fam is Family.E1_7:
        return (psi[0] + psi[2] + psi[7]) % 2 == 0
    # A2~2l, E1~8, E2~6, F1~4, G1~2, D3~4: level equality alone decides
    return True


def hub_equivalent(data, theta, kappa):
    """Closed-form test: equal level plus the per-family congruence."""
    if level_of_hub(data, theta) != level_of_hub(data, kappa):
        return False
    psi = tuple(t - k for t, k in zip(theta, kappa))
    return _congruence_ok(data, psi)


def hub_equivalent_oracle(data, theta, kappa):
    """Independent test: theta - kappa in the integer column span of A.

    Membership already forces level 0 for the difference (the comarks are
    a left null vector), so no separate level check is needed.
    """
    psi = [t - k for t, k in zip(theta, kappa)]
    return snf.in_column_span(data.matrix, psi)
