"""Finite permutation groups, subgroup lattices, and Hamiltonian-type
group families."""

from .errors import CapExceeded, DegreeMismatch, ForeignSubgroup, GroupError, ParseError
from .group import PermGroup
from .perm import Permutation

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "DegreeMismatch",
    "ForeignSubgroup",
    "GroupError",
    "ParseError",
    "PermGroup",
    "Permutation",
]
