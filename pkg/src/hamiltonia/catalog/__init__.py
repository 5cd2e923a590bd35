from .builders import (
    CatalogEntry,
    GroupRecipe,
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    matrix_group,
    matrix_group_order,
    product_entry,
    semidirect_cyclic,
    symmetric,
)
from .fields import is_prime
from .grpfile import dump_group_file, load_group_file, parse_group_file
from .scope import build_builtin, default_catalog, named

__all__ = [
    "CatalogEntry",
    "GroupRecipe",
    "alternating",
    "build_builtin",
    "cyclic",
    "default_catalog",
    "dicyclic",
    "dihedral",
    "direct_product",
    "dump_group_file",
    "elementary_abelian",
    "is_prime",
    "load_group_file",
    "matrix_group",
    "matrix_group_order",
    "named",
    "parse_group_file",
    "product_entry",
    "semidirect_cyclic",
    "symmetric",
]
