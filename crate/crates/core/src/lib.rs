//! Exact orthogonal bases for zero-margin matrix spaces.
//!
//! The crate constructs, entirely in arbitrary-precision rational
//! arithmetic:
//!
//! * orthogonal bases for the space of m x n matrices whose rows and
//!   columns all sum to zero, together with d-way generalizations;
//! * orthogonal bases for the subspaces cut out by magic-square diagonal
//!   constraints and by sudoku block constraints;
//! * centrosymmetry and transpose-symmetry decompositions of those bases;
//! * predicates, enumeration, and coordinate censuses for latin, magic,
//!   and sudoku squares;
//! * translation, move bases, and a seeded lazy random walk for integer
//!   tables with fixed margins.
//!
//! No floating point is used anywhere; every coefficient is an exact
//! rational in canonical form.

pub mod basis;
pub mod error;
pub mod exact;
pub mod golden;
pub mod magic;
pub mod squares;
pub mod sudoku;
pub mod symmetry;
pub mod transport;
pub mod tree;

pub use basis::{
    basis_dway, basis_vmn, dimension_vmn, dimension_vmn_by_rank, expand, margin_constraints,
    reconstruct, BasisElement, CoordinateVector, OrthogonalBasis, TensorBasis, TensorBasisElement,
};
pub use error::{Error, Result};
pub use magic::{
    diagonal_sums, dimension_magic, dimension_magic_by_rank, magic_basis, magic_basis_parts,
    MagicBasisParts,
};
pub use exact::{
    kronecker, outer, parse_rational, rat, rational_to_string, tensor_outer, IntVector, Integer,
    Rational, RationalMatrix, TensorArray,
};
pub use squares::{
    count_reduced_latin, enumerate_latin, enumerate_sudoku, is_latin, is_magic, is_normal_magic,
    is_semimagic, is_sudoku, latin_norm_check, matches_kind, normal_magic_squares_3,
    sign_class_census, zero_square, LatinSquare, SignClass, SquareKind,
};
pub use sudoku::{
    block_sums, dimension_sudoku, dimension_sudoku_by_rank, sudoku_basis, BlockStructure,
};
pub use symmetry::{
    centro_split, classify, classify_basis, rotate180, symmetrized_basis, CentroClass,
    SymmetryClass, TransposeClass,
};
pub use transport::{
    connectivity_check, enumerate_tables, enumerate_tables_with_limit, f_basis,
    from_f_coordinates, markov_walk, rectangle_moves, scaling_bound, to_f_coordinates,
    translate_to_v, ContingencyTable, Marginals, MarkovWalk, MoveBasis, SplitMix64,
    DEFAULT_TABLE_GUARD, TABLE_GUARD_ENV,
};
pub use tree::{
    build_tree, classify_vector, symmetry_census, u_set, w_vector, BasisVector, LabeledTree,
    TreeNode, VectorSymmetry,
};
