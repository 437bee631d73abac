//! Frozen reference fixtures.
//!
//! Every value in this module was derived by hand from the defining
//! recursions and cross-checked independently; the acceptance suite and
//! the command-line `verify` report compare live computations against
//! them bit-for-bit. Nothing here calls the code under test.

use crate::exact::{rat, IntVector, Rational, RationalMatrix};

fn iv(entries: &[i64]) -> IntVector {
    IntVector::from_i64(entries)
}

fn mat(rows: &[&[i64]]) -> RationalMatrix {
    RationalMatrix::from_i64_rows(rows)
}

/// The seed vectors w(n) for n = 2..=12.
pub fn w_reference() -> Vec<(usize, IntVector)> {
    let rows: &[(usize, &[i64])] = &[
        (2, &[1, -1]),
        (3, &[1, -2, 1]),
        (4, &[1, -1, -1, 1]),
        (5, &[2, -3, 2, -3, 2]),
        (6, &[1, -2, 1, 1, -2, 1]),
        (7, &[3, -4, 3, -4, 3, -4, 3]),
        (8, &[1, -1, -1, 1, 1, -1, -1, 1]),
        (9, &[4, -5, 4, -5, 4, -5, 4, -5, 4]),
        (10, &[2, -3, 2, -3, 2, 2, -3, 2, -3, 2]),
        (11, &[5, -6, 5, -6, 5, -6, 5, -6, 5, -6, 5]),
        (12, &[1, -2, 1, 1, -2, 1, 1, -2, 1, 1, -2, 1]),
    ];
    rows.iter().map(|(n, e)| (*n, iv(e))).collect()
}

/// The orthogonal generating set U(3) in preorder.
pub fn u3_reference() -> Vec<IntVector> {
    vec![iv(&[1, -2, 1]), iv(&[1, 0, -1])]
}

/// The orthogonal generating set U(6) in preorder.
pub fn u6_reference() -> Vec<IntVector> {
    vec![
        iv(&[1, -2, 1, 1, -2, 1]),
        iv(&[1, 0, -1, -1, 0, 1]),
        iv(&[1, 0, 0, 0, 0, -1]),
        iv(&[0, 0, 1, -1, 0, 0]),
        iv(&[0, 1, 0, 0, -1, 0]),
    ]
}

/// The orthogonal generating set U(11) in preorder.
pub fn u11_reference() -> Vec<IntVector> {
    vec![
        iv(&[5, -6, 5, -6, 5, -6, 5, -6, 5, -6, 5]),
        iv(&[1, 0, -2, 0, 1, 0, 1, 0, -2, 0, 1]),
        iv(&[1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1]),
        iv(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1]),
        iv(&[0, 0, 0, 0, 1, 0, -1, 0, 0, 0, 0]),
        iv(&[0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0]),
        iv(&[0, 2, 0, -3, 0, 2, 0, -3, 0, 2, 0]),
        iv(&[0, 1, 0, 0, 0, -2, 0, 0, 0, 1, 0]),
        iv(&[0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0]),
        iv(&[0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0]),
    ]
}

/// Preorder root-to-node paths of the size-11 label tree, matching the
/// vector order of [`u11_reference`].
pub fn t11_paths_reference() -> Vec<&'static str> {
    vec!["", "L", "LL", "LLL", "LLR", "LR", "R", "RL", "RLL", "RR"]
}

/// The four product-basis elements of the 3x3 zero-margin space with
/// their indices and squared norms, in basis order.
pub fn b33_reference() -> Vec<(Vec<usize>, RationalMatrix, Rational)> {
    vec![
        (
            vec![1, 1],
            mat(&[&[1, -2, 1], &[-2, 4, -2], &[1, -2, 1]]),
            rat(36, 1),
        ),
        (
            vec![1, 2],
            mat(&[&[1, 0, -1], &[-2, 0, 2], &[1, 0, -1]]),
            rat(12, 1),
        ),
        (
            vec![2, 1],
            mat(&[&[1, -2, 1], &[0, 0, 0], &[-1, 2, -1]]),
            rat(12, 1),
        ),
        (
            vec![2, 2],
            mat(&[&[1, 0, -1], &[0, 0, 0], &[-1, 0, 1]]),
            rat(4, 1),
        ),
    ]
}

/// The twelve order-3 zeroed latin squares with their coordinates in the
/// product basis, as (square, coefficients) pairs.
pub fn zeroed_latin_3_expansions() -> Vec<(RationalMatrix, Vec<Rational>)> {
    let row = |square: &[&[i64]], c: [(i64, i64); 4]| {
        (mat(square), c.iter().map(|&(n, d)| rat(n, d)).collect())
    };
    vec![
        row(
            &[&[1, -1, 0], &[-1, 0, 1], &[0, 1, -1]],
            [(0, 1), (1, 2), (1, 2), (0, 1)],
        ),
        row(
            &[&[0, 1, -1], &[-1, 0, 1], &[1, -1, 0]],
            [(0, 1), (1, 2), (-1, 2), (0, 1)],
        ),
        row(
            &[&[0, -1, 1], &[1, 0, -1], &[-1, 1, 0]],
            [(0, 1), (-1, 2), (1, 2), (0, 1)],
        ),
        row(
            &[&[-1, 1, 0], &[1, 0, -1], &[0, -1, 1]],
            [(0, 1), (-1, 2), (-1, 2), (0, 1)],
        ),
        row(
            &[&[0, -1, 1], &[-1, 1, 0], &[1, 0, -1]],
            [(1, 4), (1, 4), (1, 4), (-3, 4)],
        ),
        row(
            &[&[1, 0, -1], &[-1, 1, 0], &[0, -1, 1]],
            [(1, 4), (1, 4), (-1, 4), (3, 4)],
        ),
        row(
            &[&[1, -1, 0], &[0, 1, -1], &[-1, 0, 1]],
            [(1, 4), (-1, 4), (1, 4), (3, 4)],
        ),
        row(
            &[&[-1, 0, 1], &[0, 1, -1], &[1, -1, 0]],
            [(1, 4), (-1, 4), (-1, 4), (-3, 4)],
        ),
        row(
            &[&[1, 0, -1], &[0, -1, 1], &[-1, 1, 0]],
            [(-1, 4), (1, 4), (1, 4), (3, 4)],
        ),
        row(
            &[&[-1, 1, 0], &[0, -1, 1], &[1, 0, -1]],
            [(-1, 4), (1, 4), (-1, 4), (-3, 4)],
        ),
        row(
            &[&[-1, 0, 1], &[1, -1, 0], &[0, 1, -1]],
            [(-1, 4), (-1, 4), (1, 4), (-3, 4)],
        ),
        row(
            &[&[0, 1, -1], &[1, -1, 0], &[-1, 0, 1]],
            [(-1, 4), (-1, 4), (-1, 4), (3, 4)],
        ),
    ]
}

/// The transpose-symmetrized 3x3 basis: diagonal product, symmetric
/// half, skew half, diagonal product.
pub fn symmetrized_3_reference() -> Vec<RationalMatrix> {
    vec![
        mat(&[&[1, -2, 1], &[-2, 4, -2], &[1, -2, 1]]),
        mat(&[&[1, -1, 0], &[-1, 0, 1], &[0, 1, -1]]),
        mat(&[&[0, 1, -1], &[-1, 0, 1], &[1, -1, 0]]),
        mat(&[&[1, 0, -1], &[0, 0, 0], &[-1, 0, 1]]),
    ]
}

/// The off-diagonal products spanning the order-3 magic subspace: the
/// two mixed products, in lexicographic index order.
pub fn magic_3_off_diagonal_reference() -> Vec<(Vec<usize>, RationalMatrix)> {
    vec![
        (vec![1, 2], mat(&[&[1, 0, -1], &[-2, 0, 2], &[1, 0, -1]])),
        (vec![2, 1], mat(&[&[1, -2, 1], &[0, 0, 0], &[-1, 2, -1]])),
    ]
}

/// Frozen order-6 magic-basis data: diagonal sums of the symmetric
/// diagonal products, their least common multiple, the first skew
/// diagonal product, and the printed recombinations.
pub struct Magic6Reference {
    pub ell_values: Vec<i64>,
    pub ell: i64,
    /// First skew diagonal product. Its row 6 is forced to
    /// (-1, 0, 0, 0, 0, 1) because the generating vector
    /// (1, 0, 0, 0, 0, -1) places its own negation in the last row of
    /// the outer product.
    pub x1: RationalMatrix,
    pub xbar1: RationalMatrix,
    pub xbar2: RationalMatrix,
    pub ybar1: RationalMatrix,
}

pub fn magic6_reference() -> Magic6Reference {
    Magic6Reference {
        ell_values: vec![12, 4],
        ell: 12,
        x1: mat(&[
            &[1, 0, 0, 0, 0, -1],
            &[0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0],
            &[-1, 0, 0, 0, 0, 1],
        ]),
        xbar1: mat(&[
            &[1, 0, 0, 0, 0, -1],
            &[0, 1, 0, 0, -1, 0],
            &[0, 0, -2, 2, 0, 0],
            &[0, 0, 2, -2, 0, 0],
            &[0, -1, 0, 0, 1, 0],
            &[-1, 0, 0, 0, 0, 1],
        ]),
        xbar2: mat(&[
            &[1, 0, 0, 0, 0, -1],
            &[0, -1, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, -1, 0],
            &[-1, 0, 0, 0, 0, 1],
        ]),
        ybar1: mat(&[
            &[-2, -2, 4, 4, -2, -2],
            &[-2, 4, -2, -2, 4, -2],
            &[4, -2, -2, -2, -2, 4],
            &[4, -2, -2, -2, -2, 4],
            &[-2, 4, -2, -2, 4, -2],
            &[-2, -2, 4, 4, -2, -2],
        ]),
    }
}

/// Three frozen elements of the 9x9 sudoku basis, one per family, as
/// (tag, index, matrix).
pub fn sudoku9_reference() -> Vec<(&'static str, Vec<usize>, RationalMatrix)> {
    vec![
        (
            "sudA",
            vec![1, 2, 2, 2],
            mat(&[
                &[0, 0, 0, 1, 0, -1, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, -1, 0, 1, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0, 0, 0],
            ]),
        ),
        (
            "sudB",
            vec![2, 2, 1],
            mat(&[
                &[0, 0, 0, 1, -2, 1, 0, 0, 0],
                &[0, 0, 0, 1, -2, 1, 0, 0, 0],
                &[0, 0, 0, 1, -2, 1, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, -1, 2, -1, 0, 0, 0],
                &[0, 0, 0, -1, 2, -1, 0, 0, 0],
                &[0, 0, 0, -1, 2, -1, 0, 0, 0],
            ]),
        ),
        (
            "sudC",
            vec![1, 1, 1],
            mat(&[
                &[1, 1, 1, -2, -2, -2, 1, 1, 1],
                &[-2, -2, -2, 4, 4, 4, -2, -2, -2],
                &[1, 1, 1, -2, -2, -2, 1, 1, 1],
                &[0, 0, 0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0, 0, 0],
            ]),
        ),
    ]
}
