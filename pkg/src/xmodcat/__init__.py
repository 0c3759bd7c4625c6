"""Finite crossed modules, their quintet squares, and transformation doubles."""

from .errors import (
    BoundaryViolation,
    BudgetExceeded,
    ComponentInvalid,
    IdentityLawViolation,
    InvalidAction,
    MalformedTable,
    MissingInverse,
    MixedStructures,
    NoIdentity,
    NonAssociative,
    NotAdjacent,
    NotComposable,
    SpaceNotAbelian,
    TypeMismatch,
    XmodcatError,
)
from .report import Report, Violation
from .groups import (
    FiniteGroup,
    GroupAction,
    Homomorphism,
    conjugation_action,
    cyclic,
    direct_product,
    group_from_table,
    identity_homomorphism,
    klein_four,
    make_action,
    make_homomorphism,
    small_group_catalog,
    symmetric,
    trivial_action,
    trivial_group,
    trivial_homomorphism,
    validate_automorphism_action,
    validate_homomorphism,
)
from .xmod import (
    CrossedModule,
    enumerate_actions,
    enumerate_automorphisms,
    enumerate_crossed_modules,
    enumerate_homomorphisms,
    fixture_catalog,
    make_crossed_module,
    semidirect_group,
    validate_crossed_module,
    xm_cyc4,
    xm_flip,
    xm_inversion,
    xm_peiffer_broken,
    xm_sym3,
    xmod_identity,
    xmod_trivial_boundary,
)
from .fincat import (
    FiniteCategory,
    Functor,
    NatTrans,
    category_from_tables,
    functor_compose,
    identity_functor,
    terminal_category,
    validate_functor,
    validate_nat_trans,
)
from .catgroup import (
    Mor2G,
    boundary,
    compose,
    identity_morphism,
    invert,
    mor_index,
    mor_of,
    tensor,
    underlying_category,
)
from .quintet import (
    Quintet,
    QuintetGrid,
    compose_h,
    compose_h_face_alt,
    compose_v,
    embed_morphism,
    enumerate_squares,
    evaluate_grid,
    extract_morphism,
    h_identity,
    invert_square,
    make_grid,
    make_square,
    random_grid,
    random_square,
    square_from_edges,
    v_identity,
)
from .action import (
    StrictAction,
    WeakActionData,
    adjoint_action,
    check_compositor_coherence,
    functor_of,
    identity_compositor,
    make_strict_action,
    nat_component,
    nat_trans_of,
    trivial_strict_action,
    validate_strict_action,
)
from .transform import (
    FiniteGroupoid,
    NestedInclusions,
    TDSquare,
    TransDoubleCat,
    TransposeViews,
    build_transformation_double,
    compose_squares,
    connected_components,
    double_to_obj,
    groupoid_to_dot,
    h_identity_square,
    horizontal_2category,
    nested_inclusions,
    transformation_groupoid,
    transpose_views,
    v_identity_square,
    validate_groupoid,
    verify_double_category,
    verify_transpose,
    vertical_2category,
    vertical_inverse_square,
)
from .serialize import (
    FixtureFormatError,
    action_from_obj,
    action_to_obj,
    category_from_obj,
    category_to_obj,
    group_from_obj,
    group_to_obj,
    load_action,
    load_category,
    load_group,
    load_xmod,
    read_json,
    write_json,
    xmod_from_obj,
    xmod_to_obj,
)
from .gridlang import (
    DslSyntaxError,
    GridAdjacencyViolation,
    GridBoundaryViolation,
    GridDocument,
    UnknownNameError,
    grid_from_obj,
    grid_to_obj,
    load_grid,
    parse_document,
    parse_grid,
    parse_grid_file,
    serialize_grid,
)

__version__ = "0.1.0"
