//! Orthogonal bases of outer products for zero-margin matrix spaces, with
//! exact expansion and reconstruction, and the d-way generalization.
//!
//! `basis_vmn(m, n)` pairs every vector of `u_set(m)` with every vector of
//! `u_set(n)`; the outer products are pairwise orthogonal because the
//! entrywise inner product factors: <u u', v v'> = <u, v> <u', v'>. The
//! family spans the (m-1)(n-1)-dimensional space of m x n matrices whose
//! rows and columns sum to zero.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{outer, tensor_outer, rank, IntVector, Rational, RationalMatrix, TensorArray};
use crate::tree::u_set;

/// One basis element: the matrix itself plus bookkeeping used when
/// serializing and when projecting onto the element.
#[derive(Clone, Debug)]
pub struct BasisElement {
    pub matrix: RationalMatrix,
    /// 1-based generator indices, e.g. [i, j] for the (i, j) outer product.
    pub index: Vec<usize>,
    /// Short role label: "bv", "xbar", "ybar", "sym", "skew", "sudA", ...
    pub tag: &'static str,
    pub squared_norm: Rational,
}

impl BasisElement {
    pub fn new(matrix: RationalMatrix, index: Vec<usize>, tag: &'static str) -> Self {
        assert!(!matrix.is_zero(), "basis elements must be nonzero");
        let squared_norm = matrix.norm_sq();
        BasisElement {
            matrix,
            index,
            tag,
            squared_norm,
        }
    }
}

/// An ordered, pairwise-orthogonal family of same-shaped matrices.
#[derive(Clone, Debug)]
pub struct OrthogonalBasis {
    shape: (usize, usize),
    elements: Vec<BasisElement>,
}

impl OrthogonalBasis {
    pub fn new(shape: (usize, usize), elements: Vec<BasisElement>) -> Self {
        assert!(
            elements.iter().all(|e| e.matrix.shape() == shape),
            "all elements must share one shape"
        );
        OrthogonalBasis { shape, elements }
    }

    pub fn shape(&self) -> (usize, usize) {
        self.shape
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[BasisElement] {
        &self.elements
    }

    pub fn get(&self, k: usize) -> &BasisElement {
        &self.elements[k]
    }

    /// Element whose metadata index equals `index`, if any.
    pub fn find(&self, tag: &str, index: &[usize]) -> Option<&BasisElement> {
        self.elements.iter().find(|e| e.tag == tag && e.index == index)
    }

    /// Full Gram matrix of entrywise inner products.
    pub fn gram(&self) -> RationalMatrix {
        let k = self.len();
        let mut g = RationalMatrix::zeros(k, k);
        for a in 0..k {
            for b in a..k {
                let d = self.elements[a]
                    .matrix
                    .dot(&self.elements[b].matrix)
                    .expect("shared shape");
                g.set(a, b, d.clone());
                if a != b {
                    g.set(b, a, d);
                }
            }
        }
        g
    }

    /// True when the Gram matrix is diagonal with strictly positive
    /// diagonal matching each element's stored squared norm.
    pub fn is_orthogonal(&self) -> bool {
        let g = self.gram();
        for a in 0..self.len() {
            for b in 0..self.len() {
                let entry = g.get(a, b);
                if a == b {
                    if entry <= &Rational::zero() || entry != &self.elements[a].squared_norm {
                        return false;
                    }
                } else if !entry.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Exact coefficients of a matrix against an orthogonal basis, along with
/// whether the projection reproduces the matrix with zero residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateVector {
    pub coefficients: Vec<Rational>,
    pub residual_is_zero: bool,
}

/// Dimension of the zero-margin space of m x n matrices: (m-1)(n-1).
pub fn dimension_vmn(m: usize, n: usize) -> Result<usize> {
    if m == 0 || n == 0 {
        return Err(Error::Argument("matrix sides must be positive".into()));
    }
    Ok((m - 1) * (n - 1))
}

/// The m + n margin constraint rows over the mn matrix entries: one row per
/// row-sum constraint, then one per column-sum constraint. Its exact rank
/// is an independent check on `dimension_vmn`.
pub fn margin_constraints(m: usize, n: usize) -> RationalMatrix {
    let one = Rational::from_integer(1.into());
    let mut c = RationalMatrix::zeros(m + n, m * n);
    for r in 0..m {
        for j in 0..n {
            c.set(r, r * n + j, one.clone());
        }
    }
    for j in 0..n {
        for r in 0..m {
            c.set(m + j, r * n + j, one.clone());
        }
    }
    c
}

/// Dimension of the zero-margin space computed the long way: number of
/// entries minus the exact rank of the margin constraints.
pub fn dimension_vmn_by_rank(m: usize, n: usize) -> usize {
    m * n - rank(&margin_constraints(m, n))
}

/// Orthogonal basis of all outer products u^i (u^j)ᵀ, u^i in `u_set(m)`,
/// u^j in `u_set(n)`, ordered lexicographically by (i, j).
pub fn basis_vmn(m: usize, n: usize) -> Result<OrthogonalBasis> {
    if m < 2 || n < 2 {
        return Err(Error::Argument(format!(
            "zero-margin basis needs sides >= 2, got {m} x {n}"
        )));
    }
    let rows = u_set(m)?;
    let cols = u_set(n)?;
    let mut elements = Vec::with_capacity(rows.len() * cols.len());
    for r in &rows {
        for c in &cols {
            elements.push(BasisElement::new(
                outer(&r.vector, &c.vector),
                vec![r.dfs_index, c.dfs_index],
                "bv",
            ));
        }
    }
    Ok(OrthogonalBasis::new((m, n), elements))
}

/// Exact coefficients of x against the basis: c_k = <x, e_k> / |e_k|²,
/// plus a full reconstruction to decide whether the residual vanishes.
pub fn expand(x: &RationalMatrix, basis: &OrthogonalBasis) -> Result<CoordinateVector> {
    if x.shape() != basis.shape() {
        return Err(Error::Dimension(format!(
            "matrix shape {:?} does not match basis shape {:?}",
            x.shape(),
            basis.shape()
        )));
    }
    let coefficients: Vec<Rational> = basis
        .elements()
        .iter()
        .map(|e| Ok(x.dot(&e.matrix)? / &e.squared_norm))
        .collect::<Result<_>>()?;
    let projection = combine(&coefficients, basis)?;
    let residual_is_zero = &projection == x;
    Ok(CoordinateVector {
        coefficients,
        residual_is_zero,
    })
}

fn combine(coefficients: &[Rational], basis: &OrthogonalBasis) -> Result<RationalMatrix> {
    RationalMatrix::linear_combination(
        basis.shape(),
        coefficients.iter().zip(basis.elements().iter().map(|e| &e.matrix)),
    )
}

/// Σ c_k e_k for a full coordinate vector.
pub fn reconstruct(coefficients: &[Rational], basis: &OrthogonalBasis) -> Result<RationalMatrix> {
    if coefficients.len() != basis.len() {
        return Err(Error::Dimension(format!(
            "{} coefficients for a basis of {} elements",
            coefficients.len(),
            basis.len()
        )));
    }
    combine(coefficients, basis)
}

/// One element of a d-way outer-product basis.
#[derive(Clone, Debug)]
pub struct TensorBasisElement {
    pub array: TensorArray,
    /// 1-based generator indices (i_1, ..., i_d).
    pub index: Vec<usize>,
    pub squared_norm: Rational,
}

/// Orthogonal basis of d-fold outer products for d-way arrays whose
/// one-dimensional marginals all vanish.
#[derive(Clone, Debug)]
pub struct TensorBasis {
    dims: Vec<usize>,
    elements: Vec<TensorBasisElement>,
}

impl TensorBasis {
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[TensorBasisElement] {
        &self.elements
    }

    pub fn is_orthogonal(&self) -> bool {
        for a in 0..self.len() {
            for b in a..self.len() {
                let d = self.elements[a]
                    .array
                    .dot(&self.elements[b].array)
                    .expect("shared shape");
                if a == b {
                    if d <= Rational::zero() || d != self.elements[a].squared_norm {
                        return false;
                    }
                } else if !d.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// d-way product basis over sides p_1, ..., p_d (each >= 2), ordered
/// lexicographically by generator index tuple. Size Π (p_k - 1).
pub fn basis_dway(dims: &[usize]) -> Result<TensorBasis> {
    if dims.len() < 2 {
        return Err(Error::Argument("d-way basis needs at least two axes".into()));
    }
    if let Some(&bad) = dims.iter().find(|&&p| p < 2) {
        return Err(Error::Argument(format!("axis length {bad} must be >= 2")));
    }
    let sets: Vec<Vec<IntVector>> = dims
        .iter()
        .map(|&p| Ok(u_set(p)?.into_iter().map(|b| b.vector).collect()))
        .collect::<Result<_>>()?;
    let mut elements = Vec::new();
    let mut index = vec![0usize; dims.len()];
    loop {
        let factors: Vec<&IntVector> = index.iter().zip(&sets).map(|(&i, s)| &s[i]).collect();
        let array = tensor_outer(&factors)?;
        let squared_norm = array.norm_sq();
        elements.push(TensorBasisElement {
            array,
            index: index.iter().map(|&i| i + 1).collect(),
            squared_norm,
        });
        // Advance the index tuple lexicographically (last axis fastest).
        let mut axis = dims.len();
        loop {
            if axis == 0 {
                return Ok(TensorBasis {
                    dims: dims.to_vec(),
                    elements,
                });
            }
            axis -= 1;
            index[axis] += 1;
            if index[axis] < sets[axis].len() {
                break;
            }
            index[axis] = 0;
        }
    }
}
