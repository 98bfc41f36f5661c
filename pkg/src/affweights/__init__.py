"""Exact membership tests for weights of integrable highest-weight modules
over affine Lie algebras.

The central objects are the table of maximal-weight representatives modulo
the translation subgroup of the affine Weyl group (``build_table``) and the
non-recursive membership test it supports (``is_weight``, ``delta_shift``),
cross-checked by a recursive oracle (``is_weight_oracle``).
"""

from .cartan import (AffineType, CartanData, Family, bilinear_roots,
                     build_cartan, parse_type)
from .congruence import hub_equivalent, hub_equivalent_oracle
from .errors import (AffineWeightsError, ConsistencyError, InvalidInput,
                     InvalidRank, LevelMismatch, NotAWeight, NotEquivalent,
                     NotInLattice)
from .kernel import BACKEND
from .maxweights import (MaxWeightTable, Orbit, TableEntry, build_table,
                         maximal_dominant_weights, positive_hubs, residue_key)
from .membership import (MembershipCertificate, block_exists, delta_shift,
                         is_weight, max_weight_of, string_profile)
from .oracle import enumerate_weights, is_weight_oracle
from .weights import (HighestWeight, bilinear, bilinear_rr, content_to_hub,
                      defect, highest_weight, hub_to_content, level_of_hub,
                      normalize_maximal)
from .weyl import finite_orbit, in_lattice, reflect, to_dominant, translate

__version__ = "0.1.0"

__all__ = [
    "AffineType", "CartanData", "Family", "bilinear_roots", "build_cartan",
    "parse_type", "hub_equivalent", "hub_equivalent_oracle",
    "AffineWeightsError", "ConsistencyError", "InvalidInput", "InvalidRank",
    "LevelMismatch", "NotAWeight", "NotEquivalent", "NotInLattice",
    "BACKEND", "MaxWeightTable", "Orbit", "TableEntry", "build_table",
    "maximal_dominant_weights", "positive_hubs", "residue_key",
    "MembershipCertificate", "block_exists", "delta_shift", "is_weight",
    "max_weight_of", "string_profile", "enumerate_weights",
    "is_weight_oracle", "HighestWeight", "bilinear", "bilinear_rr",
    "content_to_hub", "defect", "highest_weight", "hub_to_content",
    "level_of_hub", "normalize_maximal", "finite_orbit", "in_lattice",
    "reflect", "to_dominant", "translate",
]
