"""Relative rank of the equivariant-endomorphism monoid of a finite G-set
modulo its automorphism group, with a brute-force cross-check."""

from .group_core import (
    FiniteGroup,
    Subgroup,
    SubgroupClass,
    build_group,
    conjugate_subgroup,
    cyclic_group,
    dihedral_group,
    direct_product,
    is_subgroup_leq,
    n_conjugacy_class,
    normalizer,
    permutation_group,
    subgroup_closure,
    symmetric_group,
)
from .gset import (
    Classification,
    GAction,
    build_action,
    classify,
    coset_action,
    disjoint_union,
    orbit,
    regular_action,
    shift_action,
    stabilizer,
)
from .equivariant import (
    CollapsingType,
    GMap,
    KernelRelation,
    classify_elementary_collapsing,
    collapsing,
    compose,
    extend_by_identity,
    is_equivariant,
    kernel,
    orbit_swap,
    translation,
)
from .rank import (
    RankReport,
    aut_order,
    end_order,
    generating_set_V,
    generating_set_W,
    kappa,
    relative_rank,
    u_set,
)

__all__ = [
    "FiniteGroup",
    "Subgroup",
    "SubgroupClass",
    "build_group",
    "conjugate_subgroup",
    "cyclic_group",
    "dihedral_group",
    "direct_product",
    "is_subgroup_leq",
    "n_conjugacy_class",
    "normalizer",
    "permutation_group",
    "subgroup_closure",
    "symmetric_group",
    "Classification",
    "GAction",
    "build_action",
    "classify",
    "coset_action",
    "disjoint_union",
    "orbit",
    "regular_action",
    "shift_action",
    "stabilizer",
    "CollapsingType",
    "GMap",
    "KernelRelation",
    "classify_elementary_collapsing",
    "collapsing",
    "compose",
    "extend_by_identity",
    "is_equivariant",
    "kernel",
    "orbit_swap",
    "translation",
    "RankReport",
    "aut_order",
    "end_order",
    "generating_set_V",
    "generating_set_W",
    "kappa",
    "relative_rank",
    "u_set",
]

__version__ = "0.1.0"
