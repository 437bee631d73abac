//! Half-turn and transpose symmetry: classification, the centrosymmetric
//! splitting, and a transpose-symmetrized variant of the product basis.
//!
//! With theta the half-turn (entry (i, j) -> (rows-1-i, cols-1-j)), every
//! matrix splits orthogonally as (A + theta A)/2 + (A - theta A)/2. Outer
//! products u^i (u^j)ᵀ are theta-fixed exactly when u^i and u^j share a
//! mirror class, and theta-negated otherwise.


use crate::basis::{basis_vmn, BasisElement, OrthogonalBasis};
use crate::error::Result;
use crate::exact::{rat, RationalMatrix};

/// Behaviour under the half-turn rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CentroClass {
    /// theta A = A
    Centrosymmetric,
    /// theta A = -A
    SkewCentrosymmetric,
    Neither,
}

/// Behaviour under transposition (square matrices; rectangular matrices
/// are `Neither`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransposeClass {
    Symmetric,
    SkewSymmetric,
    Neither,
}

/// Joint symmetry classification of one matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetryClass {
    pub centro: CentroClass,
    pub transpose: TransposeClass,
}

/// Half-turn rotation of a matrix.
pub fn rotate180(m: &RationalMatrix) -> RationalMatrix {
    let (rows, cols) = m.shape();
    RationalMatrix::from_fn(rows, cols, |r, c| m.get(rows - 1 - r, cols - 1 - c).clone())
}

/// Orthogonal split of a matrix into its theta-fixed and theta-negated
/// parts: A = (A + theta A)/2 + (A - theta A)/2.
pub fn centro_split(m: &RationalMatrix) -> (RationalMatrix, RationalMatrix) {
    let rotated = rotate180(m);
    let half = rat(1, 2);
    let cs = m.add(&rotated).expect("same shape").scale(&half);
    let scs = m.sub(&rotated).expect("same shape").scale(&half);
    (cs, scs)
}

/// Classifies one matrix under the half-turn and under transposition.
/// The zero matrix reports the fixed class on both axes.
pub fn classify(m: &RationalMatrix) -> SymmetryClass {
    let rotated = rotate180(m);
    let neg = m.scale(&rat(-1, 1));
    let centro = if rotated == *m {
        CentroClass::Centrosymmetric
    } else if rotated == neg {
        CentroClass::SkewCentrosymmetric
    } else {
        CentroClass::Neither
    };
    let transpose = if m.is_square() {
        let t = m.transpose();
        if t == *m {
            TransposeClass::Symmetric
        } else if t == neg {
            TransposeClass::SkewSymmetric
        } else {
            TransposeClass::Neither
        }
    } else {
        TransposeClass::Neither
    };
    SymmetryClass { centro, transpose }
}

/// Classification of every element of a basis, in basis order.
pub fn classify_basis(basis: &OrthogonalBasis) -> Vec<SymmetryClass> {
    basis.elements().iter().map(|e| classify(&e.matrix)).collect()
}

/// The product basis of square side n with each mixed pair
/// {u^i (u^j)ᵀ, u^j (u^i)ᵀ} (i < j) replaced by its transpose-symmetric
/// and transpose-skew halves. The symmetric half sits at the (i, j)
/// position and the skew half at (j, i); diagonal products are kept.
/// Indices in the metadata are the ordered pair (min, max).
pub fn symmetrized_basis(n: usize) -> Result<OrthogonalBasis> {
    let product = basis_vmn(n, n)?;
    let k = n - 1;
    let half = rat(1, 2);
    let at = |i: usize, j: usize| &product.get((i - 1) * k + (j - 1)).matrix;
    let mut elements = Vec::with_capacity(product.len());
    for i in 1..=k {
        for j in 1..=k {
            if i == j {
                elements.push(BasisElement::new(at(i, i).clone(), vec![i, i], "bv"));
            } else if i < j {
                let sym = at(i, j).add(at(j, i)).expect("same shape").scale(&half);
                elements.push(BasisElement::new(sym, vec![i, j], "sym"));
            } else {
                let skew = at(j, i).sub(at(i, j)).expect("same shape").scale(&half);
                elements.push(BasisElement::new(skew, vec![j, i], "skew"));
            }
        }
    }
    Ok(OrthogonalBasis::new((n, n), elements))
}
