"""Hopf-Galois structure workbench.

Library + CLI for enumerating Hopf-Galois structures on finite Galois
extensions (regular subgroups of Perm(G) normalized by the left regular
representation), the induced subgroup correspondence with its normality and
core census, and exact descent checks over explicit finite-field models.
"""

__version__ = "0.1.0"

from .catalog import GroupClassLabel, iso_class
from .correspond import (
    CorrespondenceRow,
    CosetSpace,
    PsiResult,
    QuotientHGS,
    StableSubgroup,
    correspondence_rows,
    coset_space,
    induced_block_perm,
    orbit_coset_check,
    psi,
    psi_onto,
    quotient_structure,
    stable_subgroups,
)
from .dsl import build_group
from .enumeration import (
    HgsRecord,
    RegularEmbedding,
    direct_enumerate_oracle,
    enumerate_hgs,
    regular_embeddings,
    transport,
)
from .groups import (
    FiniteGroup,
    SubgroupHandle,
    automorphisms,
    core_of,
    holomorph,
    left_regular,
    right_regular,
    subgroups,
)
from .model import (
    ExtensionModel,
    FixedRing,
    HopfElement,
    act,
    embed_k,
    exact_sequence_check,
    fixed_field,
    fixed_ring_basis,
    fixedsum_check,
    hopf_galois_rank,
    make_extension,
)
from .perm import PermGroup, Permutation, closure, normalizes

__all__ = [
    "CorrespondenceRow",
    "CosetSpace",
    "ExtensionModel",
    "FiniteGroup",
    "FixedRing",
    "GroupClassLabel",
    "HgsRecord",
    "HopfElement",
    "PermGroup",
    "Permutation",
    "PsiResult",
    "QuotientHGS",
    "RegularEmbedding",
    "StableSubgroup",
    "SubgroupHandle",
    "act",
    "automorphisms",
    "build_group",
    "closure",
    "core_of",
    "correspondence_rows",
    "coset_space",
    "direct_enumerate_oracle",
    "embed_k",
    "enumerate_hgs",
    "exact_sequence_check",
    "fixed_field",
    "fixed_ring_basis",
    "fixedsum_check",
    "holomorph",
    "hopf_galois_rank",
    "induced_block_perm",
    "iso_class",
    "left_regular",
    "make_extension",
    "normalizes",
    "orbit_coset_check",
    "psi",
    "psi_onto",
    "quotient_structure",
    "regular_embeddings",
    "right_regular",
    "stable_subgroups",
    "subgroups",
    "transport",
    "__version__",
]
