//! Orthogonal basis for the magic subspace: zero-margin n x n matrices
//! whose two full diagonals also sum to zero.
//!
//! Starting from `basis_vmn(n, n)`, every mixed outer product u^i (u^j)ᵀ
//! with i != j already has both diagonal sums zero and is kept. The n - 1
//! diagonal products u^i (u^i)ᵀ are regrouped: products of skew vectors
//! (the x list) are recombined with zero-sum coefficient vectors from
//! `u_set(k)`, and products of symmetric vectors (the y list) likewise with
//! weights ell/ell_j that equalize their diagonal sums before the zero-sum
//! recombination. The result is a fully orthogonal basis of the magic
//! subspace, which has dimension (n-1)² - 2 for n >= 3.

use num_integer::Integer as _;
use num_traits::One;

use crate::basis::{BasisElement, OrthogonalBasis};
use crate::error::{Error, Result};
use crate::exact::{outer, rank, Integer, Rational, RationalMatrix};
use crate::tree::{u_set, VectorSymmetry};

/// Sums of the main diagonal and the antidiagonal of a square matrix.
pub fn diagonal_sums(m: &RationalMatrix) -> Result<(Rational, Rational)> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "diagonal sums need a square matrix, got {:?}",
            m.shape()
        )));
    }
    let n = m.rows();
    let main = (0..n).map(|i| m.get(i, i)).sum();
    let anti = (0..n).map(|i| m.get(i, n - 1 - i)).sum();
    Ok((main, anti))
}

/// Dimension of the magic subspace: (n-1)² - 2, defined for n >= 3.
/// For n = 2 the two diagonal constraints are not independent cuts of a
/// 1-dimensional zero-margin space, so the construction is rejected.
pub fn dimension_magic(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::Argument(format!(
            "magic subspace needs side >= 3, got {n}"
        )));
    }
    Ok((n - 1) * (n - 1) - 2)
}

/// Margin constraints plus the two diagonal constraint rows; its exact
/// rank independently checks `dimension_magic`.
pub fn magic_constraints(n: usize) -> RationalMatrix {
    let one = Rational::one();
    let mut c = RationalMatrix::zeros(2 * n + 2, n * n);
    for r in 0..n {
        for j in 0..n {
            c.set(r, r * n + j, one.clone());
            c.set(n + j, r * n + j, one.clone());
        }
    }
    for i in 0..n {
        c.set(2 * n, i * n + i, one.clone());
        c.set(2 * n + 1, i * n + (n - 1 - i), one.clone());
    }
    c
}

/// Magic-subspace dimension computed from entry count minus constraint rank.
pub fn dimension_magic_by_rank(n: usize) -> usize {
    n * n - rank(&magic_constraints(n))
}

/// The intermediate families behind `magic_basis`, kept for inspection.
#[derive(Clone, Debug)]
pub struct MagicBasisParts {
    /// Mixed outer products u^i (u^j)ᵀ, i != j, in lexicographic (i, j) order.
    pub off_diagonal: Vec<BasisElement>,
    /// Diagonal products of skew vectors, in preorder of the generator.
    pub x_list: Vec<BasisElement>,
    /// Diagonal products of symmetric vectors, in preorder of the generator.
    pub y_list: Vec<BasisElement>,
    /// Zero-sum recombinations of the x list; these enter the basis.
    pub xbar_list: Vec<BasisElement>,
    /// Weighted zero-sum recombinations of the y list; these enter the basis.
    pub ybar_list: Vec<BasisElement>,
    /// Main-diagonal sum of each y element (equal to its generator's
    /// squared vector norm).
    pub ell_values: Vec<Integer>,
    /// lcm of `ell_values`.
    pub ell: Integer,
}

fn combine_elements(
    shape: (usize, usize),
    coeffs: &[Rational],
    mats: &[&RationalMatrix],
) -> RationalMatrix {
    RationalMatrix::linear_combination(shape, coeffs.iter().zip(mats.iter().copied()))
        .expect("shapes agree by construction")
}

/// Builds the intermediate families for side n (n >= 3).
pub fn magic_basis_parts(n: usize) -> Result<MagicBasisParts> {
    dimension_magic(n)?;
    let set = u_set(n)?;

    let mut off_diagonal = Vec::new();
    for a in &set {
        for b in &set {
            if a.dfs_index != b.dfs_index {
                off_diagonal.push(BasisElement::new(
                    outer(&a.vector, &b.vector),
                    vec![a.dfs_index, b.dfs_index],
                    "bv",
                ));
            }
        }
    }

    let diag_products = |class: VectorSymmetry, tag: &'static str| -> Vec<BasisElement> {
        set.iter()
            .filter(|b| b.symmetry == class)
            .enumerate()
            .map(|(pos, b)| BasisElement::new(outer(&b.vector, &b.vector), vec![pos + 1], tag))
            .collect()
    };
    let x_list = diag_products(VectorSymmetry::SkewSymmetric, "x");
    let y_list = diag_products(VectorSymmetry::Symmetric, "y");

    let ell_values: Vec<Integer> = y_list
        .iter()
        .map(|y| {
            let (main, _) = diagonal_sums(&y.matrix).expect("square by construction");
            debug_assert!(main.denom().is_one());
            main.to_integer()
        })
        .collect();
    let ell = ell_values
        .iter()
        .fold(Integer::one(), |acc, v| acc.lcm(v));

    let shape = (n, n);
    let mut xbar_list = Vec::new();
    if x_list.len() >= 2 {
        let x_mats: Vec<&RationalMatrix> = x_list.iter().map(|e| &e.matrix).collect();
        for (i, weights) in u_set(x_list.len())?.iter().enumerate() {
            let coeffs = weights.vector.to_rationals();
            xbar_list.push(BasisElement::new(
                combine_elements(shape, &coeffs, &x_mats),
                vec![i + 1],
                "xbar",
            ));
        }
    }

    let mut ybar_list = Vec::new();
    if y_list.len() >= 2 {
        let y_mats: Vec<&RationalMatrix> = y_list.iter().map(|e| &e.matrix).collect();
        for (i, weights) in u_set(y_list.len())?.iter().enumerate() {
            let coeffs: Vec<Rational> = weights
                .vector
                .entries()
                .iter()
                .zip(&ell_values)
                .map(|(w, ell_j)| Rational::from_integer(&ell / ell_j * w))
                .collect();
            ybar_list.push(BasisElement::new(
                combine_elements(shape, &coeffs, &y_mats),
                vec![i + 1],
                "ybar",
            ));
        }
    }

    Ok(MagicBasisParts {
        off_diagonal,
        x_list,
        y_list,
        xbar_list,
        ybar_list,
        ell_values,
        ell,
    })
}

/// Orthogonal basis of the magic subspace: mixed products, then the x
/// recombinations, then the y recombinations.
pub fn magic_basis(n: usize) -> Result<OrthogonalBasis> {
    let parts = magic_basis_parts(n)?;
    let mut elements = parts.off_diagonal;
    elements.extend(parts.xbar_list);
    elements.extend(parts.ybar_list);
    Ok(OrthogonalBasis::new((n, n), elements))
}
