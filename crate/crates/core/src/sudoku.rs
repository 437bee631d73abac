//! Orthogonal basis for the sudoku subspace: n² x n² matrices with zero
//! margins whose n x n blocks each sum to zero.
//!
//! Elements are Kronecker products whose first factor indexes blocks and
//! whose second factor fills them. Three families cover the subspace:
//!
//! * A: single block (i, j) holding a mixed or diagonal product u^k (u^l)ᵀ;
//! * B: block column j weighted down by u^i, each block a constant-row
//!   matrix f (u^k)ᵀ;
//! * C: block row j weighted by u^i, each block a constant-column matrix
//!   u^k fᵀ.
//!
//! Together they form an orthogonal basis of dimension n (n-1)² (n+2).

use num_traits::One;

use crate::basis::{BasisElement, OrthogonalBasis};
use crate::error::{Error, Result};
use crate::exact::{kronecker, outer, rank, IntVector, Rational, RationalMatrix};
use crate::tree::u_set;

/// Block geometry of a side-n² grid split into n x n blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockStructure {
    n: usize,
}

impl BlockStructure {
    pub fn new(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::Argument("block side must be positive".into()));
        }
        Ok(BlockStructure { n })
    }

    /// Block geometry for a square matrix whose side is a perfect square.
    pub fn for_side(side: usize) -> Result<Self> {
        let n = (1..=side).find(|b| b * b == side).ok_or_else(|| {
            Error::Argument(format!("side {side} is not a perfect square"))
        })?;
        BlockStructure::new(n)
    }

    pub fn block_side(&self) -> usize {
        self.n
    }

    pub fn side(&self) -> usize {
        self.n * self.n
    }

    /// Cells of block (a, b) as (row, col) pairs, row-major.
    pub fn block_cells(&self, a: usize, b: usize) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n)
            .flat_map(move |r| (0..n).map(move |c| (a * n + r, b * n + c)))
            .collect()
    }
}

/// n x n matrix of block sums of a side-n² matrix.
pub fn block_sums(m: &RationalMatrix, blocks: BlockStructure) -> Result<RationalMatrix> {
    if m.shape() != (blocks.side(), blocks.side()) {
        return Err(Error::Dimension(format!(
            "matrix shape {:?} does not match block side {}",
            m.shape(),
            blocks.block_side()
        )));
    }
    let n = blocks.block_side();
    Ok(RationalMatrix::from_fn(n, n, |a, b| {
        blocks
            .block_cells(a, b)
            .into_iter()
            .map(|(r, c)| m.get(r, c))
            .sum()
    }))
}

/// Dimension of the sudoku subspace: n (n-1)² (n+2), defined for n >= 2.
pub fn dimension_sudoku(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::Argument(format!(
            "sudoku subspace needs block side >= 2, got {n}"
        )));
    }
    Ok(n * (n - 1) * (n - 1) * (n + 2))
}

/// Margin constraints of the n² x n² grid plus one row per block; its
/// exact rank independently checks `dimension_sudoku`.
pub fn sudoku_constraints(n: usize) -> RationalMatrix {
    let side = n * n;
    let vars = side * side;
    let one = Rational::one();
    let mut c = RationalMatrix::zeros(2 * side + n * n, vars);
    for r in 0..side {
        for j in 0..side {
            c.set(r, r * side + j, one.clone());
            c.set(side + j, r * side + j, one.clone());
        }
    }
    let blocks = BlockStructure { n };
    for a in 0..n {
        for b in 0..n {
            let row = 2 * side + a * n + b;
            for (r, col) in blocks.block_cells(a, b) {
                c.set(row, r * side + col, one.clone());
            }
        }
    }
    c
}

/// Sudoku-subspace dimension via entry count minus constraint rank.
pub fn dimension_sudoku_by_rank(n: usize) -> usize {
    let side = n * n;
    side * side - rank(&sudoku_constraints(n))
}

/// Orthogonal basis of the sudoku subspace for block side n (n >= 2),
/// ordered family A then B then C, each lexicographic in its index tuple.
pub fn sudoku_basis(n: usize) -> Result<OrthogonalBasis> {
    dimension_sudoku(n)?;
    let us: Vec<IntVector> = u_set(n)?.into_iter().map(|b| b.vector).collect();
    let es: Vec<IntVector> = (0..n).map(|i| IntVector::standard(n, i)).collect();
    let f = IntVector::ones(n);
    let side = n * n;

    let mut elements = Vec::with_capacity(dimension_sudoku(n)?);
    // Family A: one block (i, j) holding u^k (u^l)ᵀ.
    for (i, ei) in es.iter().enumerate() {
        for (j, ej) in es.iter().enumerate() {
            let block_pos = outer(ei, ej);
            for (k, uk) in us.iter().enumerate() {
                for (l, ul) in us.iter().enumerate() {
                    elements.push(BasisElement::new(
                        kronecker(&block_pos, &outer(uk, ul)),
                        vec![i + 1, j + 1, k + 1, l + 1],
                        "sudA",
                    ));
                }
            }
        }
    }
    // Family B: block column j, blocks scaled by u^i, rows constant u^k.
    for (i, ui) in us.iter().enumerate() {
        for (j, ej) in es.iter().enumerate() {
            let col_weights = outer(ui, ej);
            for (k, uk) in us.iter().enumerate() {
                elements.push(BasisElement::new(
                    kronecker(&col_weights, &outer(&f, uk)),
                    vec![i + 1, j + 1, k + 1],
                    "sudB",
                ));
            }
        }
    }
    // Family C: block row j, blocks scaled by u^i, columns constant u^k.
    for (i, ui) in us.iter().enumerate() {
        for (j, ej) in es.iter().enumerate() {
            let row_weights = outer(ej, ui);
            for (k, uk) in us.iter().enumerate() {
                elements.push(BasisElement::new(
                    kronecker(&row_weights, &outer(uk, &f)),
                    vec![i + 1, j + 1, k + 1],
                    "sudC",
                ));
            }
        }
    }
    Ok(OrthogonalBasis::new((side, side), elements))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_structure_matches_sides() {
        let b = BlockStructure::for_side(9).unwrap();
        assert_eq!(b.block_side(), 3);
        assert!(BlockStructure::for_side(8).is_err());
        assert_eq!(
            b.block_cells(1, 2)[0],
            (3, 6),
            "block (1,2) starts at row 3, col 6"
        );
    }

    #[test]
    fn family_sizes_and_dimension() {
        for n in [2usize, 3] {
            let basis = sudoku_basis(n).unwrap();
            assert_eq!(basis.len(), dimension_sudoku(n).unwrap(), "n = {n}");
            let count = |tag: &str| basis.elements().iter().filter(|e| e.tag == tag).count();
            assert_eq!(count("sudA"), n * n * (n - 1) * (n - 1));
            assert_eq!(count("sudB"), n * (n - 1) * (n - 1));
            assert_eq!(count("sudC"), n * (n - 1) * (n - 1));
        }
        assert_eq!(dimension_sudoku(2).unwrap(), 8);
        assert_eq!(dimension_sudoku(3).unwrap(), 60);
        assert!(sudoku_basis(1).is_err());
    }

    #[test]
    fn frozen_single_block_element() {
        let basis = sudoku_basis(3).unwrap();
        let e = basis.find("sudA", &[1, 2, 2, 2]).unwrap();
        let mut expected = RationalMatrix::zeros(9, 9);
        let block = RationalMatrix::from_i64_rows(&[&[1, 0, -1], &[0, 0, 0], &[-1, 0, 1]]);
        for r in 0..3 {
            for c in 0..3 {
                expected.set(r, 3 + c, block.get(r, c).clone());
            }
        }
        assert_eq!(e.matrix, expected);
    }

    #[test]
    fn frozen_block_column_element() {
        let basis = sudoku_basis(3).unwrap();
        let e = basis.find("sudB", &[2, 2, 1]).unwrap();
        let mut rows: Vec<Vec<i64>> = vec![vec![0; 9]; 9];
        for r in 0..3 {
            rows[r][3] = 1;
            rows[r][4] = -2;
            rows[r][5] = 1;
            rows[6 + r][3] = -1;
            rows[6 + r][4] = 2;
            rows[6 + r][5] = -1;
        }
        let expected = RationalMatrix::from_i64_rows(
            &rows.iter().map(|r| r.as_slice()).collect::<Vec<_>>(),
        );
        assert_eq!(e.matrix, expected);
    }

    #[test]
    fn frozen_block_row_element() {
        let basis = sudoku_basis(3).unwrap();
        let e = basis.find("sudC", &[1, 1, 1]).unwrap();
        let mut rows: Vec<Vec<i64>> = vec![vec![0; 9]; 9];
        let u1 = [1i64, -2, 1];
        for (b, &w) in u1.iter().enumerate() {
            for c in 0..3 {
                rows[0][3 * b + c] = w;
                rows[1][3 * b + c] = -2 * w;
                rows[2][3 * b + c] = w;
            }
        }
        let expected = RationalMatrix::from_i64_rows(
            &rows.iter().map(|r| r.as_slice()).collect::<Vec<_>>(),
        );
        assert_eq!(e.matrix, expected);
    }

    #[test]
    fn members_satisfy_margin_and_block_constraints() {
        for n in [2usize, 3] {
            let basis = sudoku_basis(n).unwrap();
            let blocks = BlockStructure::new(n).unwrap();
            for e in basis.elements() {
                assert!(e.matrix.has_zero_margins(), "n = {n} {:?}", e.index);
                assert!(
                    block_sums(&e.matrix, blocks).unwrap().is_zero(),
                    "n = {n} {:?} {}",
                    e.index,
                    e.tag
                );
            }
        }
    }

    #[test]
    fn side_2_basis_is_orthogonal() {
        assert!(sudoku_basis(2).unwrap().is_orthogonal());
    }

    #[test]
    fn dimension_agrees_with_rank_oracle() {
        for n in [2usize, 3] {
            assert_eq!(dimension_sudoku(n).unwrap(), dimension_sudoku_by_rank(n));
        }
    }

    #[test]
    fn block_sums_validates_shape() {
        let blocks = BlockStructure::new(2).unwrap();
        assert!(block_sums(&RationalMatrix::zeros(3, 3), blocks).is_err());
        let m = RationalMatrix::from_i64_rows(&[
            &[1, 2, 0, 0],
            &[3, 4, 0, 0],
            &[0, 0, 5, 0],
            &[0, 0, 0, 6],
        ]);
        let sums = block_sums(&m, blocks).unwrap();
        assert_eq!(sums, RationalMatrix::from_i64_rows(&[&[10, 0], &[0, 11]]));
    }
}
