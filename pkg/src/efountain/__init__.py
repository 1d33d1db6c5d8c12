"""Exact analysis of finite semigroups as reduced E-Fountain structures.

The library computes classical and generalized Green's relations, verifies
the congruence and generalized ample conditions, builds the associated
category and the concrete category of partial-action homomorphisms, and
checks the rational-algebra isomorphisms between monoids of order-preserving
maps and of order-preserving partial injections.  All algebra runs in exact
rational arithmetic.
"""

from efountain.semigroups import (
    FiniteSemigroup,
    GreenData,
    StructureFlags,
    dump_table_text,
    from_table,
    green_classes,
    idempotents,
    is_inverse,
    load_table_file,
    natural_order_leq,
    opposite_semigroup,
    parse_table_text,
    rho_hom_check,
    structure_flags,
)
from efountain.fountain import (
    EStructure,
    FountainReport,
    PartialMap,
    Verdict,
    build_estructure,
    congruence_condition,
    e_fountain_check,
    enumerate_action_homs,
    gla_check,
    gra_action_equivalence,
    gra_check,
    gra_simplified_check,
    is_partial_action_hom,
    r_alpha,
    tilde_classes,
    verdict_record,
)
from efountain.categories import (
    CategoryFlags,
    FiniteCategory,
    associated_category,
    category_flags,
    category_isomorphic,
    category_json,
    d_category,
    export_dot,
    is_functor_iso,
    opposite_category,
)
from efountain.linalg import GF, QQ, LinearMap, identity_map
from efountain.algebras import (
    Algebra,
    AlgebraElement,
    category_algebra,
    check_algebra_hom,
    check_iso,
    hom_space,
    is_semisimple_char0,
    ltilde_module,
    order_condition,
    peirce_dims,
    phi,
    phi_module_iso,
    semigroup_algebra,
    triangle_left,
)
from efountain.families import (
    AlgebraIso,
    MapFamily,
    build_catalan,
    build_family,
    build_ic,
    build_io,
    build_of,
    catalan_number,
    iso_c_ic,
    iso_of_io,
    mobius,
    natural_order,
    natural_order_matrix,
    psi,
    subset_pairs,
)

__version__ = "0.1.0"
