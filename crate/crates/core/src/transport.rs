//! Fixed-margin table utilities: translation onto the zero-margin space,
//! the non-orthogonal move basis with its change of coordinates, and a
//! seeded random walk over contingency tables.
//!
//! Two move sets appear here and play different roles. The contiguous
//! moves F_{a,b} (+1 at (a,b) and (a+1,b+1), -1 at the off corners) form a
//! *vector-space* basis of the zero-margin space and drive the change of
//! coordinates and the scaling bound. The walk and the connectivity check
//! instead use every rectangle swap (corners (i,j),(i',j') for i<i',
//! j<j'): restricted to contiguous moves the table graph can disconnect —
//! the six 3×3 permutation matrices fall into two components — while the
//! full rectangle set is a genuine Markov basis for two-way margins.

use std::collections::{HashMap, VecDeque};

use num_integer::Integer as IntegerOps;
use num_traits::{One, Signed, Zero};

use crate::basis::{basis_vmn, expand};
use crate::error::{Error, Result};
use crate::exact::{Integer, Rational, RationalMatrix};

/// Default cap on how many tables `enumerate_tables` will produce.
pub const DEFAULT_TABLE_GUARD: usize = 1_000_000;

/// Environment variable overriding [`DEFAULT_TABLE_GUARD`].
pub const TABLE_GUARD_ENV: &str = "ZEROMARGIN_MAX_TABLES";

fn table_guard() -> usize {
    std::env::var(TABLE_GUARD_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_TABLE_GUARD)
}

/// Prescribed row and column totals with a common grand total.
#[derive(Clone, Debug, PartialEq)]
pub struct Marginals {
    rows: Vec<Rational>,
    cols: Vec<Rational>,
}

impl Marginals {
    /// Validates nonnegativity and the shared total.
    pub fn new(rows: Vec<Rational>, cols: Vec<Rational>) -> Result<Self> {
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::Argument("marginals must be nonempty".into()));
        }
        if rows.iter().chain(&cols).any(|x| x.is_negative()) {
            return Err(Error::Validation("marginals must be nonnegative".into()));
        }
        let row_total: Rational = rows.iter().sum();
        let col_total: Rational = cols.iter().sum();
        if row_total != col_total {
            return Err(Error::Validation(format!(
                "row total {row_total} differs from column total {col_total}"
            )));
        }
        Ok(Marginals { rows, cols })
    }

    /// Convenience constructor from integer totals.
    pub fn from_counts(rows: &[u64], cols: &[u64]) -> Result<Self> {
        let lift = |v: &[u64]| {
            v.iter()
                .map(|&x| Rational::from_integer(Integer::from(x)))
                .collect()
        };
        Marginals::new(lift(rows), lift(cols))
    }

    pub fn row_totals(&self) -> &[Rational] {
        &self.rows
    }

    pub fn col_totals(&self) -> &[Rational] {
        &self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols.len())
    }

    pub fn total(&self) -> Rational {
        self.rows.iter().sum()
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().chain(&self.cols).all(|x| x.is_integer())
    }
}

/// A table of nonnegative integers; the margins are whatever its rows
/// and columns sum to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContingencyTable {
    rows: usize,
    cols: usize,
    entries: Vec<Integer>,
}

impl ContingencyTable {
    pub fn new(rows: usize, cols: usize, entries: Vec<Integer>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "expected {rows} x {cols} entries, got {}",
                entries.len()
            )));
        }
        if entries.iter().any(Signed::is_negative) {
            return Err(Error::Validation(
                "contingency tables hold nonnegative counts".into(),
            ));
        }
        Ok(ContingencyTable { rows, cols, entries })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| Integer::from(x)))
            .collect();
        ContingencyTable::new(m, n, entries)
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &Integer {
        &self.entries[r * self.cols + c]
    }

    pub fn marginals(&self) -> Marginals {
        let row = |r: usize| (0..self.cols).map(|c| self.get(r, c)).sum::<Integer>();
        let col = |c: usize| (0..self.rows).map(|r| self.get(r, c)).sum::<Integer>();
        Marginals {
            rows: (0..self.rows).map(|r| Rational::from_integer(row(r))).collect(),
            cols: (0..self.cols).map(|c| Rational::from_integer(col(c))).collect(),
        }
    }

    pub fn to_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_fn(self.rows, self.cols, |r, c| {
            Rational::from_integer(self.get(r, c).clone())
        })
    }

    /// The northwest-corner table for integer marginals: walk the grid
    /// from the top-left, greedily exhausting one margin at a time.
    pub fn northwest(marginals: &Marginals) -> Result<Self> {
        if !marginals.is_integral() {
            return Err(Error::Argument(
                "northwest-corner start needs integer marginals".into(),
            ));
        }
        let (m, n) = marginals.shape();
        let mut row_rem: Vec<Integer> =
            marginals.rows.iter().map(|x| x.to_integer()).collect();
        let mut col_rem: Vec<Integer> =
            marginals.cols.iter().map(|x| x.to_integer()).collect();
        let mut entries = vec![Integer::zero(); m * n];
        let (mut i, mut j) = (0, 0);
        while i < m && j < n {
            let v = row_rem[i].clone().min(col_rem[j].clone());
            row_rem[i] -= &v;
            col_rem[j] -= &v;
            entries[i * n + j] = v;
            if row_rem[i].is_zero() && i + 1 < m {
                i += 1;
            } else if col_rem[j].is_zero() {
                j += 1;
            } else {
                i += 1;
            }
        }
        ContingencyTable::new(m, n, entries)
    }
}

/// Subtracts the independence table r cᵀ / N from a point with the given
/// margins, landing it in the zero-margin space. Every entry of the
/// result is at least -r_i c_j / N.
pub fn translate_to_v(x: &RationalMatrix, marginals: &Marginals) -> Result<RationalMatrix> {
    let (m, n) = marginals.shape();
    if x.shape() != (m, n) {
        return Err(Error::Dimension(format!(
            "point is {:?} but marginals are {:?}",
            x.shape(),
            (m, n)
        )));
    }
    if x.row_sums() != marginals.rows || x.col_sums() != marginals.cols {
        return Err(Error::Validation(
            "point does not satisfy the prescribed marginals".into(),
        ));
    }
    let total = marginals.total();
    if total.is_zero() {
        return Err(Error::Validation("marginals sum to zero".into()));
    }
    Ok(RationalMatrix::from_fn(m, n, |i, j| {
        x.get(i, j) - &marginals.rows[i] * &marginals.cols[j] / &total
    }))
}

/// The contiguous moves F_{a,b}, a vector-space basis of the zero-margin
/// space ordered lexicographically by (a, b).
#[derive(Clone, Debug, PartialEq)]
pub struct MoveBasis {
    rows: usize,
    cols: usize,
    moves: Vec<RationalMatrix>,
}

impl MoveBasis {
    /// Shape of the tables the moves act on.
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn moves(&self) -> &[RationalMatrix] {
        &self.moves
    }

    /// The move with +1 entries at (a, b) and (a+1, b+1), 1-based.
    pub fn move_at(&self, a: usize, b: usize) -> &RationalMatrix {
        assert!(
            (1..self.rows).contains(&a) && (1..self.cols).contains(&b),
            "move index ({a},{b}) out of range for {}x{}",
            self.rows,
            self.cols
        );
        &self.moves[(a - 1) * (self.cols - 1) + (b - 1)]
    }
}

/// Builds the (m-1)(n-1) contiguous moves for m x n tables.
pub fn f_basis(m: usize, n: usize) -> Result<MoveBasis> {
    if m < 2 || n < 2 {
        return Err(Error::Argument(format!(
            "move basis needs at least a 2x2 grid, got {m}x{n}"
        )));
    }
    let mut moves = Vec::with_capacity((m - 1) * (n - 1));
    for a in 0..m - 1 {
        for b in 0..n - 1 {
            let mut f = RationalMatrix::zeros(m, n);
            f.set(a, b, Rational::one());
            f.set(a + 1, b + 1, Rational::one());
            f.set(a, b + 1, -Rational::one());
            f.set(a + 1, b, -Rational::one());
            moves.push(f);
        }
    }
    Ok(MoveBasis { rows: m, cols: n, moves })
}

/// Coordinates of a zero-margin matrix in the contiguous move basis:
/// the (a, b) coefficient is the northwest partial sum of the entries
/// through row a and column b.
pub fn to_f_coordinates(m: &RationalMatrix) -> Result<RationalMatrix> {
    if m.rows() < 2 || m.cols() < 2 {
        return Err(Error::Dimension(format!(
            "need at least a 2x2 matrix, got {:?}",
            m.shape()
        )));
    }
    if !m.has_zero_margins() {
        return Err(Error::Validation(
            "move-basis coordinates are defined for zero-margin matrices".into(),
        ));
    }
    let (rows, cols) = (m.rows(), m.cols());
    // Running northwest prefix sums; row "prefix" carries the previous row.
    let mut prefix = vec![Rational::zero(); cols];
    let mut coords = RationalMatrix::zeros(rows - 1, cols - 1);
    for a in 0..rows - 1 {
        let mut acc = Rational::zero();
        for b in 0..cols {
            acc += m.get(a, b);
            prefix[b] += &acc;
            if b < cols - 1 {
                coords.set(a, b, prefix[b].clone());
            }
        }
    }
    Ok(coords)
}

/// Rebuilds the zero-margin matrix from its move-basis coordinates by
/// the inverse finite difference.
pub fn from_f_coordinates(coords: &RationalMatrix) -> RationalMatrix {
    let (m, n) = (coords.rows() + 1, coords.cols() + 1);
    let at = |a: isize, b: isize| -> Rational {
        if a >= 0 && b >= 0 && (a as usize) < m - 1 && (b as usize) < n - 1 {
            coords.get(a as usize, b as usize).clone()
        } else {
            Rational::zero()
        }
    };
    RationalMatrix::from_fn(m, n, |i, j| {
        let (i, j) = (i as isize, j as isize);
        at(i, j) + at(i - 1, j - 1) - at(i - 1, j) - at(i, j - 1)
    })
}

/// Least common multiple of the coefficient denominators that appear when
/// every contiguous move is expanded in the orthogonal product basis: the
/// factor by which that basis must be scaled before its integer span
/// contains all the moves.
pub fn scaling_bound(m: usize, n: usize) -> Result<Integer> {
    let basis = basis_vmn(m, n)?;
    let mut bound = Integer::one();
    for f in f_basis(m, n)?.moves() {
        let coords = expand(f, &basis)?;
        debug_assert!(coords.residual_is_zero);
        for c in &coords.coefficients {
            bound = bound.lcm(c.denom());
        }
    }
    Ok(bound)
}

/// Deterministic 64-bit generator (splitmix64). The update adds the
/// constant 0x9E3779B97F4A7C15 to the state, then mixes with
/// xor-shift-multiply rounds using 0xBF58476D1CE4E5B9 and
/// 0x94D049BB133111EB. Fixed here so that walks are reproducible
/// bit-for-bit by any implementation.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// All rectangle swaps on an m x n grid as corner tuples (i, i', j, j')
/// with i < i' and j < j', 0-based, in lexicographic order. The positive
/// application adds 1 at (i, j) and (i', j') and subtracts 1 at (i, j')
/// and (i', j).
pub fn rectangle_moves(m: usize, n: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut moves = Vec::new();
    for i in 0..m {
        for i2 in i + 1..m {
            for j in 0..n {
                for j2 in j + 1..n {
                    moves.push((i, i2, j, j2));
                }
            }
        }
    }
    moves
}

/// A lazy random walk over the contingency tables sharing the start
/// table's margins.
///
/// Each step consumes exactly two generator outputs: the first picks a
/// rectangle move by residue modulo the move count, the second picks the
/// sign (even → positive, odd → negative). A proposal that would drive
/// an entry negative is rejected and the table stays put — the walk is
/// lazy, which keeps it aperiodic with a symmetric proposal.
#[derive(Clone, Debug)]
pub struct MarkovWalk {
    rows: usize,
    cols: usize,
    cells: Vec<Integer>,
    moves: Vec<(usize, usize, usize, usize)>,
    rng: SplitMix64,
}

impl MarkovWalk {
    pub fn new(start: &ContingencyTable, seed: u64) -> Self {
        let (rows, cols) = start.shape();
        MarkovWalk {
            rows,
            cols,
            cells: start.entries.clone(),
            moves: rectangle_moves(rows, cols),
            rng: SplitMix64::new(seed),
        }
    }

    /// Proposes one move; returns whether the table changed. A grid with
    /// no rectangle (one row or one column) never moves and consumes no
    /// randomness.
    pub fn step(&mut self) -> bool {
        if self.moves.is_empty() {
            return false;
        }
        let pick = (self.rng.next_u64() % self.moves.len() as u64) as usize;
        let positive = self.rng.next_u64() % 2 == 0;
        let (i, i2, j, j2) = self.moves[pick];
        let n = self.cols;
        let (up_a, up_b, down_a, down_b) = if positive {
            ((i, j), (i2, j2), (i, j2), (i2, j))
        } else {
            ((i, j2), (i2, j), (i, j), (i2, j2))
        };
        if self.cells[down_a.0 * n + down_a.1].is_zero()
            || self.cells[down_b.0 * n + down_b.1].is_zero()
        {
            return false;
        }
        self.cells[up_a.0 * n + up_a.1] += 1;
        self.cells[up_b.0 * n + up_b.1] += 1;
        self.cells[down_a.0 * n + down_a.1] -= 1;
        self.cells[down_b.0 * n + down_b.1] -= 1;
        true
    }

    /// The current table.
    pub fn table(&self) -> ContingencyTable {
        ContingencyTable {
            rows: self.rows,
            cols: self.cols,
            entries: self.cells.clone(),
        }
    }
}

/// Runs the lazy walk for the given number of steps. Identical
/// (start, steps, seed) triples produce identical tables.
pub fn markov_walk(start: &ContingencyTable, steps: u64, seed: u64) -> ContingencyTable {
    let mut walk = MarkovWalk::new(start, seed);
    for _ in 0..steps {
        walk.step();
    }
    walk.table()
}

/// Enumerates every contingency table with the given integer marginals,
/// in lexicographic order of the row-major reading, refusing to produce
/// more than `limit` tables.
pub fn enumerate_tables_with_limit(
    marginals: &Marginals,
    limit: usize,
) -> Result<Vec<ContingencyTable>> {
    if !marginals.is_integral() {
        return Err(Error::Argument(
            "table enumeration needs integer marginals".into(),
        ));
    }
    let (m, n) = marginals.shape();
    let as_u64 = |x: &Rational| -> Result<u64> {
        u64::try_from(x.to_integer())
            .map_err(|_| Error::Argument("marginal does not fit in 64 bits".into()))
    };
    let mut row_rem: Vec<u64> = marginals.rows.iter().map(&as_u64).collect::<Result<_>>()?;
    let mut col_rem: Vec<u64> = marginals.cols.iter().map(&as_u64).collect::<Result<_>>()?;
    let mut cells = vec![0u64; m * n];
    let mut out = Vec::new();
    fn rec(
        m: usize,
        n: usize,
        pos: usize,
        cells: &mut [u64],
        row_rem: &mut [u64],
        col_rem: &mut [u64],
        out: &mut Vec<ContingencyTable>,
        limit: usize,
    ) -> Result<()> {
        if pos == m * n {
            if out.len() == limit {
                return Err(Error::ResourceGuard(format!(
                    "more than {limit} tables; raise {TABLE_GUARD_ENV} to allow more"
                )));
            }
            out.push(ContingencyTable {
                rows: m,
                cols: n,
                entries: cells.iter().map(|&v| Integer::from(v)).collect(),
            });
            return Ok(());
        }
        let (r, c) = (pos / n, pos % n);
        // Entries in the last column and last row are forced by the
        // remaining margins; elsewhere anything up to both remainders.
        let choices: std::ops::RangeInclusive<u64> = if c == n - 1 {
            if row_rem[r] > col_rem[c] {
                return Ok(());
            }
            row_rem[r]..=row_rem[r]
        } else if r == m - 1 {
            if col_rem[c] > row_rem[r] {
                return Ok(());
            }
            col_rem[c]..=col_rem[c]
        } else {
            0..=row_rem[r].min(col_rem[c])
        };
        for v in choices {
            cells[pos] = v;
            row_rem[r] -= v;
            col_rem[c] -= v;
            rec(m, n, pos + 1, cells, row_rem, col_rem, out, limit)?;
            row_rem[r] += v;
            col_rem[c] += v;
            cells[pos] = 0;
        }
        Ok(())
    }
    rec(m, n, 0, &mut cells, &mut row_rem, &mut col_rem, &mut out, limit)?;
    Ok(out)
}

/// [`enumerate_tables_with_limit`] with the default guard, overridable
/// through the `ZEROMARGIN_MAX_TABLES` environment variable.
pub fn enumerate_tables(marginals: &Marginals) -> Result<Vec<ContingencyTable>> {
    enumerate_tables_with_limit(marginals, table_guard())
}

/// Whether the rectangle-move graph on all tables with these marginals is
/// connected: enumerate the tables, join neighbours differing by one
/// rectangle swap, and breadth-first search.
pub fn connectivity_check(marginals: &Marginals) -> Result<bool> {
    let tables = enumerate_tables(marginals)?;
    if tables.len() <= 1 {
        return Ok(true);
    }
    let (m, n) = marginals.shape();
    let moves = rectangle_moves(m, n);
    let index: HashMap<&[Integer], usize> = tables
        .iter()
        .enumerate()
        .map(|(k, t)| (t.entries.as_slice(), k))
        .collect();
    let mut seen = vec![false; tables.len()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(k) = queue.pop_front() {
        for &(i, i2, j, j2) in &moves {
            for positive in [true, false] {
                let t = &tables[k];
                let (down_a, down_b) = if positive {
                    ((i, j2), (i2, j))
                } else {
                    ((i, j), (i2, j2))
                };
                if t.entries[down_a.0 * n + down_a.1].is_zero()
                    || t.entries[down_b.0 * n + down_b.1].is_zero()
                {
                    continue;
                }
                let mut next = t.entries.clone();
                let (up_a, up_b) = if positive {
                    ((i, j), (i2, j2))
                } else {
                    ((i, j2), (i2, j))
                };
                next[up_a.0 * n + up_a.1] += 1;
                next[up_b.0 * n + up_b.1] += 1;
                next[down_a.0 * n + down_a.1] -= 1;
                next[down_b.0 * n + down_b.1] -= 1;
                let neighbour = index[next.as_slice()];
                if !seen[neighbour] {
                    seen[neighbour] = true;
                    reached += 1;
                    queue.push_back(neighbour);
                }
            }
        }
    }
    Ok(reached == tables.len())
}
