//! Exact arithmetic building blocks: arbitrary-precision rationals, integer
//! vectors, dense rational matrices and d-way arrays.
//!
//! Every value is kept in canonical reduced form (positive denominator,
//! gcd(numerator, denominator) = 1); nothing in this module rounds. The hot
//! aggregation paths (`dot`, `linear_combination`) accumulate numerator and
//! denominator separately and reduce once at the end, which keeps the large
//! enumeration loops cheap without leaving exact arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = num_rational::BigRational;

/// Parses a rational from its canonical string form `p` or `p/q`.
///
/// Accepts any integer numerator/denominator text that `BigInt` accepts;
/// the result is reduced and the denominator made positive. A zero
/// denominator is rejected rather than panicking.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = |v: &str| Error::Validation(format!("cannot parse rational from {v:?}"));
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| bad(s))?;
            Ok(Rational::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| bad(s))?;
            let d: BigInt = den.trim().parse().map_err(|_| bad(s))?;
            if d.is_zero() {
                return Err(Error::Validation(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Canonical display form of a rational: `p` when the denominator is one,
/// `p/q` with `q > 1` otherwise.
pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

fn int(v: i64) -> Integer {
    Integer::from(v)
}

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(int(n), int(d))
}

/// An integer vector. Tree labels and basis generators live here; matrix
/// data generally does not.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntVector(Vec<Integer>);

impl IntVector {
    pub fn new(entries: Vec<Integer>) -> Self {
        IntVector(entries)
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        IntVector(entries.iter().map(|&v| int(v)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        IntVector(vec![Integer::zero(); n])
    }

    /// Standard basis vector with a single one at `pos` (0-indexed).
    pub fn standard(n: usize, pos: usize) -> Self {
        let mut v = vec![Integer::zero(); n];
        v[pos] = Integer::one();
        IntVector(v)
    }

    pub fn ones(n: usize) -> Self {
        IntVector(vec![Integer::one(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Integer] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &Integer {
        &self.0[i]
    }

    pub fn sum(&self) -> Integer {
        self.0.iter().sum()
    }

    pub fn dot(&self, other: &IntVector) -> Result<Integer> {
        if self.len() != other.len() {
            return Err(Error::Dimension(format!(
                "vector lengths {} and {} differ",
                self.len(),
                other.len()
            )));
        }
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum())
    }

    /// Squared Euclidean norm.
    pub fn norm_sq(&self) -> Integer {
        self.0.iter().map(|a| a * a).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Indices of strictly positive entries, ascending.
    pub fn positive_support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.0[i].is_positive()).collect()
    }

    /// Indices of strictly negative entries, ascending.
    pub fn negative_support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.0[i].is_negative()).collect()
    }

    /// Nonzero entries in index order.
    pub fn nonzero_entries(&self) -> Vec<Integer> {
        self.0.iter().filter(|e| !e.is_zero()).cloned().collect()
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().map(|e| Rational::from_integer(e.clone())).collect()
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Outer product `a bᵀ` as a rational matrix: entry (i, j) = a_i · b_j.
pub fn outer(a: &IntVector, b: &IntVector) -> RationalMatrix {
    let data = a
        .entries()
        .iter()
        .flat_map(|ai| b.entries().iter().map(move |bj| Rational::from_integer(ai * bj)))
        .collect();
    RationalMatrix {
        rows: a.len(),
        cols: b.len(),
        data,
    }
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("rows have unequal lengths".into()));
        }
        Ok(RationalMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from integer literals; test and fixture helper.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| Rational::from_integer(int(v))))
            .collect();
        RationalMatrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries cannot fill a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(RationalMatrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    /// Row-major view of all entries.
    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row_sum(&self, r: usize) -> Rational {
        self.data[r * self.cols..(r + 1) * self.cols]
            .iter()
            .sum()
    }

    pub fn col_sum(&self, c: usize) -> Rational {
        (0..self.rows).map(|r| self.get(r, c)).sum()
    }

    pub fn row_sums(&self) -> Vec<Rational> {
        (0..self.rows).map(|r| self.row_sum(r)).collect()
    }

    pub fn col_sums(&self) -> Vec<Rational> {
        (0..self.cols).map(|c| self.col_sum(c)).collect()
    }

    /// True when every row sum and every column sum vanishes.
    pub fn has_zero_margins(&self) -> bool {
        self.row_sums().iter().all(Zero::is_zero) && self.col_sums().iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> RationalMatrix {
        RationalMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &RationalMatrix,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<RationalMatrix> {
        if self.shape() != other.shape() {
            return Err(Error::Dimension(format!(
                "shapes {:?} and {:?} differ",
                self.shape(),
                other.shape()
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, s: &Rational) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| e * s).collect(),
        }
    }

    /// Entrywise inner product Σ a_ij · b_ij.
    ///
    /// Numerator and denominator are accumulated by cross-multiplication and
    /// reduced exactly once, so integer-entry matrices stay on a pure
    /// big-integer path.
    pub fn dot(&self, other: &RationalMatrix) -> Result<Rational> {
        if self.shape() != other.shape() {
            return Err(Error::Dimension(format!(
                "shapes {:?} and {:?} differ",
                self.shape(),
                other.shape()
            )));
        }
        let mut num = Integer::zero();
        let mut den = Integer::one();
        for (a, b) in self.data.iter().zip(&other.data) {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let tn = a.numer() * b.numer();
            let td = a.denom() * b.denom();
            if den == td {
                num += tn;
            } else {
                num = num * &td + tn * &den;
                den *= td;
            }
        }
        Ok(Rational::new(num, den))
    }

    /// Squared Frobenius norm, `dot` of the matrix with itself.
    pub fn norm_sq(&self) -> Rational {
        self.dot(self).expect("shape always matches itself")
    }

    /// Exact Σ c_k · M_k over matrices of one shared shape.
    pub fn linear_combination<'a, I>(shape: (usize, usize), terms: I) -> Result<RationalMatrix>
    where
        I: IntoIterator<Item = (&'a Rational, &'a RationalMatrix)>,
    {
        let (rows, cols) = shape;
        let size = rows * cols;
        let mut num = vec![Integer::zero(); size];
        let mut den = vec![Integer::one(); size];
        for (coeff, mat) in terms {
            if mat.shape() != shape {
                return Err(Error::Dimension(format!(
                    "term shape {:?} differs from {:?}",
                    mat.shape(),
                    shape
                )));
            }
            if coeff.is_zero() {
                continue;
            }
            for (i, e) in mat.data.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                let tn = coeff.numer() * e.numer();
                let td = coeff.denom() * e.denom();
                if den[i] == td {
                    num[i] += tn;
                } else {
                    num[i] = &num[i] * &td + tn * &den[i];
                    den[i] *= td;
                }
            }
        }
        let data = num
            .into_iter()
            .zip(den)
            .map(|(n, d)| Rational::new(n, d))
            .collect();
        Ok(RationalMatrix { rows, cols, data })
    }

    /// Matrix product; used by small verification paths only.
    pub fn matmul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {:?} by {:?}",
                self.shape(),
                other.shape()
            )));
        }
        Ok(RationalMatrix::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols).map(|k| self.get(r, k) * other.get(k, c)).sum()
        }))
    }

    /// True when every entry has denominator one.
    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|e| e.denom().is_one())
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        Ok(())
    }
}

/// Kronecker product: entry ((a, r), (b, c)) = x_ab · y_rc, with the first
/// factor indexing blocks of the second's shape.
pub fn kronecker(x: &RationalMatrix, y: &RationalMatrix) -> RationalMatrix {
    let (xr, xc) = x.shape();
    let (yr, yc) = y.shape();
    RationalMatrix::from_fn(xr * yr, xc * yc, |r, c| {
        x.get(r / yr, c / yc) * y.get(r % yr, c % yc)
    })
}

/// Dense d-way array of rationals in row-major layout (last axis fastest).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorArray {
    dims: Vec<usize>,
    data: Vec<Rational>,
}

impl TensorArray {
    pub fn new(dims: Vec<usize>, data: Vec<Rational>) -> Result<Self> {
        let expected: usize = dims.iter().product();
        if dims.is_empty() || data.len() != expected {
            return Err(Error::Dimension(format!(
                "{} entries cannot fill a {dims:?} array",
                data.len()
            )));
        }
        Ok(TensorArray { dims, data })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn order(&self) -> usize {
        self.dims.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn get(&self, idx: &[usize]) -> &Rational {
        assert_eq!(idx.len(), self.dims.len(), "index order mismatch");
        let mut flat = 0;
        for (k, &i) in idx.iter().enumerate() {
            assert!(i < self.dims[k], "index out of range");
            flat = flat * self.dims[k] + i;
        }
        &self.data[flat]
    }

    /// Entrywise inner product of two arrays of identical shape.
    pub fn dot(&self, other: &TensorArray) -> Result<Rational> {
        if self.dims != other.dims {
            return Err(Error::Dimension(format!(
                "shapes {:?} and {:?} differ",
                self.dims, other.dims
            )));
        }
        let mut num = Integer::zero();
        let mut den = Integer::one();
        for (a, b) in self.data.iter().zip(&other.data) {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let tn = a.numer() * b.numer();
            let td = a.denom() * b.denom();
            if den == td {
                num += tn;
            } else {
                num = num * &td + tn * &den;
                den *= td;
            }
        }
        Ok(Rational::new(num, den))
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self).expect("shape always matches itself")
    }

    /// All sums along `axis`, one per combination of the remaining indices.
    pub fn axis_sums(&self, axis: usize) -> Vec<Rational> {
        assert!(axis < self.dims.len(), "axis out of range");
        let inner: usize = self.dims[axis + 1..].iter().product();
        let outer_count: usize = self.dims[..axis].iter().product();
        let axis_len = self.dims[axis];
        let mut sums = Vec::with_capacity(outer_count * inner);
        for o in 0..outer_count {
            for i in 0..inner {
                let base = o * axis_len * inner + i;
                sums.push((0..axis_len).map(|a| &self.data[base + a * inner]).sum());
            }
        }
        sums
    }

    /// Reinterprets a 2-way array as a matrix.
    pub fn to_matrix(&self) -> Result<RationalMatrix> {
        if self.dims.len() != 2 {
            return Err(Error::Dimension(format!(
                "array of order {} is not a matrix",
                self.dims.len()
            )));
        }
        RationalMatrix::from_flat(self.dims[0], self.dims[1], self.data.clone())
    }
}

/// d-fold outer product: entry (i_1, ..., i_d) = Π_k v_k[i_k].
pub fn tensor_outer(factors: &[&IntVector]) -> Result<TensorArray> {
    if factors.is_empty() {
        return Err(Error::Argument("outer product needs at least one factor".into()));
    }
    let mut data = vec![Integer::one()];
    for f in factors {
        let mut next = Vec::with_capacity(data.len() * f.len());
        for v in &data {
            for x in f.entries() {
                next.push(v * x);
            }
        }
        data = next;
    }
    TensorArray::new(
        factors.iter().map(|f| f.len()).collect(),
        data.into_iter().map(Rational::from_integer).collect(),
    )
}

/// Exact rank over the rationals by Gaussian elimination.
pub fn rank(m: &RationalMatrix) -> usize {
    let mut a: Vec<Vec<Rational>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).clone()).collect())
        .collect();
    let (rows, cols) = m.shape();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let pivot_val = a[rank][col].clone();
        for r in rank + 1..rows {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &pivot_val;
            for c in col..cols {
                let delta = &factor * &a[rank][c];
                a[r][c] -= delta;
            }
        }
        rank += 1;
    }
    rank
}

/// Solves `A x = b` exactly. Returns `None` when inconsistent; free
/// variables, if any, are set to zero.
pub fn solve(a: &RationalMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if b.len() != a.rows() {
        return Err(Error::Dimension(format!(
            "rhs length {} does not match {} rows",
            b.len(),
            a.rows()
        )));
    }
    let (rows, cols) = a.shape();
    let mut aug: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = (0..cols).map(|c| a.get(r, c).clone()).collect();
            row.push(b[r].clone());
            row
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(rank, pivot);
        let inv = aug[rank][col].recip();
        for c in col..=cols {
            aug[rank][c] *= &inv;
        }
        for r in 0..rows {
            if r != rank && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                for c in col..=cols {
                    let delta = &factor * &aug[rank][c];
                    aug[r][c] -= delta;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    if aug[rank..].iter().any(|row| !row[cols].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &col) in pivot_cols.iter().enumerate() {
        x[col] = aug[r][cols].clone();
    }
    Ok(Some(x))
}
