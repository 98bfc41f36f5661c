"""Exception types shared across the package."""


class AffineWeightsError(Exception):
    """Base class for all errors raised by this package."""


class InvalidRank(AffineWeightsError):
    """Rank outside the allowed range for the requested affine family."""


class InvalidInput(AffineWeightsError):
    """Malformed user input (multicharge, labels, vectors of wrong length)."""


class LevelMismatch(AffineWeightsError):
    """Two weights that were required to have equal level do not."""


class NotInLattice(AffineWeightsError):
    """A translation vector lies outside the lattice M."""


class NotAWeight(AffineWeightsError):
    """An operation required a weight of the module but got a non-weight."""


class NotEquivalent(AffineWeightsError):
    """The queried weight is not congruent to the highest weight mod the root lattice."""


class ConsistencyError(AffineWeightsError):
    """An internal invariant failed; indicates corrupted data, never a verdict."""
