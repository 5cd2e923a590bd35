from .isomorphism import are_isomorphic, find_isomorphism, invariants
from .lattice import (
    CacheMismatch,
    SubgroupLattice,
    cached_lattice,
    group_key,
    lattice_from_json,
    lattice_to_json,
    subgroup_lattice,
)
from .quotient import quotient_group
from .recognize import abelian_invariants, is_simple, recognize_group
from .series import SeriesResult, derived, gamma, gamma_infinity, is_nilpotent, is_perfect, is_soluble, lower_central, series
from .special import NormalityData, frattini_subgroup, maximal_subgroups, normality_data, sylow_subgroup
from .subgroups import (
    LATTICE_CAP,
    SubgroupHandle,
    center,
    centralizer,
    commutator,
    core,
    generated,
    is_abelian,
    is_nilpotent_by_sylow,
    is_normal,
    join,
    meet,
    normal_closure,
    normalizer,
    prime_factors,
    trivial,
    whole,
)

__all__ = [
    "CacheMismatch",
    "LATTICE_CAP",
    "NormalityData",
    "SeriesResult",
    "SubgroupHandle",
    "SubgroupLattice",
    "abelian_invariants",
    "are_isomorphic",
    "cached_lattice",
    "center",
    "centralizer",
    "commutator",
    "core",
    "derived",
    "find_isomorphism",
    "frattini_subgroup",
    "gamma",
    "gamma_infinity",
    "generated",
    "group_key",
    "invariants",
    "is_abelian",
    "is_nilpotent",
    "is_nilpotent_by_sylow",
    "is_normal",
    "is_perfect",
    "is_simple",
    "is_soluble",
    "join",
    "lattice_from_json",
    "lattice_to_json",
    "lower_central",
    "maximal_subgroups",
    "meet",
    "normal_closure",
    "normality_data",
    "normalizer",
    "prime_factors",
    "quotient_group",
    "recognize_group",
    "series",
    "subgroup_lattice",
    "sylow_subgroup",
    "trivial",
    "whole",
]
