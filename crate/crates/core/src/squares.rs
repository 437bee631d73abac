//! Validation, zeroing, enumeration, and coordinate censuses for latin
//! squares, magic squares, and sudoku boards.
//!
//! A latin square of order n holds a permutation of 1..n in every row and
//! column; subtracting the mean (n+1)/2 from each cell lands it in the
//! zero-margin space, where its coordinates against the orthogonal product
//! basis can be computed exactly. The census groups those coordinate
//! vectors by entrywise absolute value.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::basis::{basis_vmn, expand};
use crate::error::{Error, Result};
use crate::exact::{rat, Integer, Rational, RationalMatrix};
use crate::magic::diagonal_sums;
use crate::sudoku::BlockStructure;

/// The square families the validators understand. The zeroed variants are
/// the mean-subtracted images living in the zero-margin space.
#[derive(Clone, Debug, PartialEq)]
pub enum SquareKind {
    Latin,
    ZeroedLatin,
    /// Distinct nonnegative integer entries, every line summing to the
    /// given value.
    Semimagic(Rational),
    /// Semimagic with both main diagonals also summing to the value.
    Magic(Rational),
    /// Magic with entries exactly 1..n².
    NormalMagic,
    Sudoku,
    ZeroedSudoku,
}

fn entry_as_value(m: &RationalMatrix, r: usize, c: usize, max: usize) -> Option<usize> {
    let e = m.get(r, c);
    if !e.is_integer() {
        return None;
    }
    let i = e.to_integer();
    if i < Integer::from(1) || i > Integer::from(max as u64) {
        return None;
    }
    Some(usize::try_from(u64::try_from(i).ok()?).ok()?)
}

fn lines_are_permutations(m: &RationalMatrix) -> bool {
    let n = m.rows();
    for r in 0..n {
        let mut seen = vec![false; n + 1];
        for c in 0..n {
            match entry_as_value(m, r, c, n) {
                Some(v) if !seen[v] => seen[v] = true,
                _ => return false,
            }
        }
    }
    for c in 0..n {
        let mut seen = vec![false; n + 1];
        for r in 0..n {
            match entry_as_value(m, r, c, n) {
                Some(v) if !seen[v] => seen[v] = true,
                _ => return false,
            }
        }
    }
    true
}

/// True iff the matrix is square and every row and column is a
/// permutation of 1..n. Non-integer entries simply fail the test.
pub fn is_latin(m: &RationalMatrix) -> bool {
    m.is_square() && m.rows() > 0 && lines_are_permutations(m)
}

/// True iff the matrix is square with distinct nonnegative integer
/// entries and every row and column sums to `s`.
pub fn is_semimagic(m: &RationalMatrix, s: &Rational) -> bool {
    if !m.is_square() || m.rows() == 0 {
        return false;
    }
    let mut values = Vec::with_capacity(m.rows() * m.cols());
    for e in m.entries() {
        if !e.is_integer() || e.is_negative() {
            return false;
        }
        values.push(e.to_integer());
    }
    values.sort();
    if values.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    m.row_sums().iter().all(|x| x == s) && m.col_sums().iter().all(|x| x == s)
}

/// Semimagic with both main-diagonal sums also equal to `s`.
pub fn is_magic(m: &RationalMatrix, s: &Rational) -> bool {
    if !is_semimagic(m, s) {
        return false;
    }
    let (main, anti) = diagonal_sums(m).expect("square by is_semimagic");
    main == *s && anti == *s
}

/// Magic with entries exactly {1, …, n²}; the line sum is then forced
/// to be n(n²+1)/2.
pub fn is_normal_magic(m: &RationalMatrix) -> bool {
    if !m.is_square() || m.rows() == 0 {
        return false;
    }
    let n = m.rows();
    let mut seen = vec![false; n * n + 1];
    for r in 0..n {
        for c in 0..n {
            match entry_as_value(m, r, c, n * n) {
                Some(v) if !seen[v] => seen[v] = true,
                _ => return false,
            }
        }
    }
    let s = rat((n * (n * n + 1) / 2) as i64, 1);
    is_magic(m, &s)
}

/// True iff the matrix is a latin square of side b² whose b×b blocks
/// each hold a permutation of 1..b². The side must be a perfect square.
pub fn is_sudoku(m: &RationalMatrix) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::Argument(format!(
            "sudoku check needs a square matrix, got {:?}",
            m.shape()
        )));
    }
    let blocks = BlockStructure::for_side(m.rows())?;
    if !is_latin(m) {
        return Ok(false);
    }
    let side = blocks.side();
    for a in 0..blocks.block_side() {
        for b in 0..blocks.block_side() {
            let mut seen = vec![false; side + 1];
            for (r, c) in blocks.block_cells(a, b) {
                match entry_as_value(m, r, c, side) {
                    Some(v) if !seen[v] => seen[v] = true,
                    _ => return Ok(false),
                }
            }
        }
    }
    Ok(true)
}

/// Whether the matrix satisfies the predicate for `kind`. Only the
/// sudoku kinds can error (side not a perfect square).
pub fn matches_kind(m: &RationalMatrix, kind: &SquareKind) -> Result<bool> {
    match kind {
        SquareKind::Latin => Ok(is_latin(m)),
        SquareKind::ZeroedLatin => {
            if !m.is_square() || m.rows() == 0 {
                return Ok(false);
            }
            Ok(is_latin(&unshift(m, &mean_offset(m.rows()))))
        }
        SquareKind::Semimagic(s) => Ok(is_semimagic(m, s)),
        SquareKind::Magic(s) => Ok(is_magic(m, s)),
        SquareKind::NormalMagic => Ok(is_normal_magic(m)),
        SquareKind::Sudoku => is_sudoku(m),
        SquareKind::ZeroedSudoku => {
            if !m.is_square() || m.rows() == 0 {
                return Ok(false);
            }
            BlockStructure::for_side(m.rows())?;
            is_sudoku(&unshift(m, &mean_offset(m.rows())))
        }
    }
}

/// Mean of 1..n as a rational: (n+1)/2.
fn mean_offset(n: usize) -> Rational {
    rat((n + 1) as i64, 2)
}

fn shift_all(m: &RationalMatrix, offset: &Rational) -> RationalMatrix {
    RationalMatrix::from_fn(m.rows(), m.cols(), |r, c| m.get(r, c) - offset)
}

fn unshift(m: &RationalMatrix, offset: &Rational) -> RationalMatrix {
    RationalMatrix::from_fn(m.rows(), m.cols(), |r, c| m.get(r, c) + offset)
}

/// Validates the square against its kind and subtracts the kind's cell
/// mean, producing a matrix with zero margins: (n+1)/2 for a latin square
/// of order n, (n²+1)/2 for a sudoku board or normal magic square, S/n for
/// a (semi)magic square with line sum S. Already-zeroed kinds are
/// validated and returned unchanged.
pub fn zero_square(m: &RationalMatrix, kind: &SquareKind) -> Result<RationalMatrix> {
    if !matches_kind(m, kind)? {
        return Err(Error::Validation(format!(
            "matrix is not a valid {kind:?} square"
        )));
    }
    let n = m.rows();
    let offset = match kind {
        // Latin squares and sudoku boards both hold the values 1..side.
        SquareKind::Latin | SquareKind::Sudoku => mean_offset(n),
        // A normal magic square of side n holds 1..n².
        SquareKind::NormalMagic => rat((n * n + 1) as i64, 2),
        SquareKind::Semimagic(s) | SquareKind::Magic(s) => s / rat(n as i64, 1),
        SquareKind::ZeroedLatin | SquareKind::ZeroedSudoku => Rational::zero(),
    };
    Ok(shift_all(m, &offset))
}

/// An order-n latin square stored compactly; rows hold permutations of
/// 1..n, so a byte per cell suffices for every order we enumerate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatinSquare {
    order: usize,
    cells: Vec<u8>,
}

impl LatinSquare {
    /// Wraps a row-major cell list, validating the latin property.
    pub fn new(order: usize, cells: Vec<u8>) -> Result<Self> {
        if cells.len() != order * order {
            return Err(Error::Dimension(format!(
                "expected {} cells for order {order}, got {}",
                order * order,
                cells.len()
            )));
        }
        let square = LatinSquare { order, cells };
        if !is_latin(&square.to_matrix()) {
            return Err(Error::Validation(
                "cells do not form a latin square".into(),
            ));
        }
        Ok(square)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.cells[r * self.order + c]
    }

    pub fn to_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_fn(self.order, self.order, |r, c| {
            Rational::from_integer(Integer::from(self.get(r, c)))
        })
    }

    /// The square with its cell mean (n+1)/2 subtracted everywhere.
    pub fn zeroed(&self) -> RationalMatrix {
        shift_all(&self.to_matrix(), &mean_offset(self.order))
    }
}

/// All order-n latin squares in lexicographic order of their row-major
/// reading. Guarded to n ≤ 5; order 6 is beyond desk scale.
pub fn enumerate_latin(n: usize) -> Result<Vec<LatinSquare>> {
    if !(2..=5).contains(&n) {
        return Err(Error::Argument(format!(
            "latin enumeration supports orders 2 through 5, got {n}"
        )));
    }
    let mut out = Vec::new();
    let mut cells = vec![0u8; n * n];
    let mut row_used = vec![vec![false; n + 1]; n];
    let mut col_used = vec![vec![false; n + 1]; n];
    fill_latin(n, 0, &mut cells, &mut row_used, &mut col_used, &mut |cells| {
        out.push(LatinSquare {
            order: n,
            cells: cells.to_vec(),
        });
    });
    Ok(out)
}

fn fill_latin(
    n: usize,
    pos: usize,
    cells: &mut [u8],
    row_used: &mut [Vec<bool>],
    col_used: &mut [Vec<bool>],
    emit: &mut impl FnMut(&[u8]),
) {
    if pos == n * n {
        emit(cells);
        return;
    }
    let (r, c) = (pos / n, pos % n);
    for v in 1..=n {
        if row_used[r][v] || col_used[c][v] {
            continue;
        }
        row_used[r][v] = true;
        col_used[c][v] = true;
        cells[pos] = v as u8;
        fill_latin(n, pos + 1, cells, row_used, col_used, emit);
        row_used[r][v] = false;
        col_used[c][v] = false;
    }
}

/// Number of reduced order-n latin squares (first row and first column
/// in natural order). Independent cross-check for `enumerate_latin`:
/// the total count equals n! (n-1)! times this value.
pub fn count_reduced_latin(n: usize) -> Result<u64> {
    if !(2..=5).contains(&n) {
        return Err(Error::Argument(format!(
            "reduced-square count supports orders 2 through 5, got {n}"
        )));
    }
    // Seed the border, then count completions of the inner grid by
    // column-wise elimination rather than the row-major generator above.
    let mut grid = vec![0usize; n * n];
    for i in 0..n {
        grid[i] = i + 1;
        grid[i * n] = i + 1;
    }
    fn complete(n: usize, idx: usize, inner: &[(usize, usize)], grid: &mut [usize]) -> u64 {
        if idx == inner.len() {
            return 1;
        }
        let (r, c) = inner[idx];
        let mut total = 0;
        'candidate: for v in 1..=n {
            for k in 0..n {
                if grid[r * n + k] == v || grid[k * n + c] == v {
                    continue 'candidate;
                }
            }
            grid[r * n + c] = v;
            total += complete(n, idx + 1, inner, grid);
            grid[r * n + c] = 0;
        }
        total
    }
    let inner: Vec<(usize, usize)> = (1..n)
        .flat_map(|r| (1..n).map(move |c| (r, c)))
        .collect();
    Ok(complete(n, 0, &inner, &mut grid))
}

/// All sudoku boards with b×b blocks (side b²), in lexicographic order of
/// the row-major reading. Only b ≤ 2 is within desk scale.
pub fn enumerate_sudoku(block_side: usize) -> Result<Vec<LatinSquare>> {
    if !(1..=2).contains(&block_side) {
        return Err(Error::Argument(format!(
            "sudoku enumeration supports block sides 1 and 2, got {block_side}"
        )));
    }
    let b = block_side;
    let n = b * b;
    let mut out = Vec::new();
    let mut cells = vec![0u8; n * n];
    let mut row_used = vec![vec![false; n + 1]; n];
    let mut col_used = vec![vec![false; n + 1]; n];
    let mut block_used = vec![vec![false; n + 1]; n];
    fn fill(
        n: usize,
        b: usize,
        pos: usize,
        cells: &mut [u8],
        row_used: &mut [Vec<bool>],
        col_used: &mut [Vec<bool>],
        block_used: &mut [Vec<bool>],
        out: &mut Vec<LatinSquare>,
    ) {
        if pos == n * n {
            out.push(LatinSquare {
                order: n,
                cells: cells.to_vec(),
            });
            return;
        }
        let (r, c) = (pos / n, pos % n);
        let blk = (r / b) * b + c / b;
        for v in 1..=n {
            if row_used[r][v] || col_used[c][v] || block_used[blk][v] {
                continue;
            }
            row_used[r][v] = true;
            col_used[c][v] = true;
            block_used[blk][v] = true;
            cells[pos] = v as u8;
            fill(n, b, pos + 1, cells, row_used, col_used, block_used, out);
            row_used[r][v] = false;
            col_used[c][v] = false;
            block_used[blk][v] = false;
        }
    }
    fill(
        n,
        b,
        0,
        &mut cells,
        &mut row_used,
        &mut col_used,
        &mut block_used,
        &mut out,
    );
    Ok(out)
}

/// The eight normal 3×3 magic squares, found by brute force over
/// placements of 1..9 with line-sum pruning. Returned in lexicographic
/// order of the row-major reading; all are rotations and reflections of
/// a single square.
pub fn normal_magic_squares_3() -> Vec<RationalMatrix> {
    const S: i32 = 15;
    let mut out = Vec::new();
    let mut cells = [0i32; 9];
    let mut used = [false; 10];
    fn place(pos: usize, cells: &mut [i32; 9], used: &mut [bool; 10], out: &mut Vec<RationalMatrix>) {
        if pos == 9 {
            let g = |r: usize, c: usize| cells[r * 3 + c];
            if (0..3).all(|c| g(0, c) + g(1, c) + g(2, c) == S)
                && g(0, 0) + g(1, 1) + g(2, 2) == S
                && g(0, 2) + g(1, 1) + g(2, 0) == S
            {
                out.push(RationalMatrix::from_fn(3, 3, |r, c| {
                    Rational::from_integer(Integer::from(g(r, c)))
                }));
            }
            return;
        }
        for v in 1..=9 {
            if used[v as usize] {
                continue;
            }
            // Prune as soon as a row is complete.
            if pos % 3 == 2 && cells[pos - 2] + cells[pos - 1] + v != S {
                continue;
            }
            used[v as usize] = true;
            cells[pos] = v;
            place(pos + 1, cells, used, out);
            used[v as usize] = false;
        }
        cells[pos] = 0;
    }
    place(0, &mut cells, &mut used, &mut out);
    out
}

/// Checks that every zeroed order-n latin square has squared norm exactly
/// n²(n²-1)/12, the square pyramidal number for n-1.
pub fn latin_norm_check(n: usize) -> Result<bool> {
    let target = rat((n * n * (n * n - 1)) as i64, 12);
    for square in enumerate_latin(n)? {
        if square.zeroed().norm_sq() != target {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One sign class of the coordinate census: the common entrywise absolute
/// value of the member squares' coordinate vectors, and the members as
/// 1-based positions in the lexicographic enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignClass {
    pub signature: Vec<Rational>,
    pub members: Vec<usize>,
}

/// Expands every zeroed order-n latin square in the order-n product basis
/// and groups the squares by the entrywise absolute value of their
/// coordinate vectors. Classes are sorted by signature.
pub fn sign_class_census(n: usize) -> Result<Vec<SignClass>> {
    let basis = basis_vmn(n, n)?;
    let mut classes: BTreeMap<Vec<Rational>, Vec<usize>> = BTreeMap::new();
    for (i, square) in enumerate_latin(n)?.iter().enumerate() {
        let coords = expand(&square.zeroed(), &basis)?;
        debug_assert!(coords.residual_is_zero);
        let signature: Vec<Rational> = coords.coefficients.iter().map(|c| c.abs()).collect();
        classes.entry(signature).or_default().push(i + 1);
    }
    Ok(classes
        .into_iter()
        .map(|(signature, members)| SignClass { signature, members })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::sudoku::block_sums;

    fn cyclic(n: usize) -> RationalMatrix {
        RationalMatrix::from_fn(n, n, |r, c| {
            Rational::from_integer(Integer::from(((r + c) % n + 1) as u64))
        })
    }

    fn lo_shu() -> RationalMatrix {
        RationalMatrix::from_i64_rows(&[&[2, 7, 6], &[9, 5, 1], &[4, 3, 8]])
    }

    #[test]
    fn latin_predicate() {
        assert!(is_latin(&cyclic(3)));
        assert!(is_latin(&cyclic(5)));
        assert!(!is_latin(&RationalMatrix::from_i64_rows(&[&[1, 1], &[2, 2]])));
        assert!(!is_latin(&RationalMatrix::from_i64_rows(&[
            &[1, 2, 3],
            &[2, 3, 1]
        ])));
        let mut half = cyclic(2);
        half.set(0, 0, rat(1, 2));
        assert!(!is_latin(&half));
    }

    #[test]
    fn zeroing_and_round_trip() {
        let z = zero_square(&cyclic(3), &SquareKind::Latin).unwrap();
        assert_eq!(
            z,
            RationalMatrix::from_i64_rows(&[&[-1, 0, 1], &[0, 1, -1], &[1, -1, 0]])
        );
        assert!(z.has_zero_margins());
        assert!(matches_kind(&z, &SquareKind::ZeroedLatin).unwrap());
        assert_eq!(zero_square(&z, &SquareKind::ZeroedLatin).unwrap(), z);

        let z4 = zero_square(&cyclic(4), &SquareKind::Latin).unwrap();
        let allowed = [rat(-3, 2), rat(-1, 2), rat(1, 2), rat(3, 2)];
        assert!(z4.entries().iter().all(|e| allowed.contains(e)));

        assert!(matches!(
            zero_square(&RationalMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]), &SquareKind::Latin),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn magic_predicates() {
        assert!(is_normal_magic(&lo_shu()));
        assert!(is_magic(&lo_shu(), &rat(15, 1)));
        assert!(is_semimagic(&lo_shu(), &rat(15, 1)));
        // All-ones square: line sums match but entries repeat.
        let j3 = RationalMatrix::from_i64_rows(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert!(!is_semimagic(&j3, &rat(3, 1)));
        // Latin squares repeat each value n times.
        assert!(!is_semimagic(&cyclic(3), &rat(6, 1)));
        // Distinct entries but a broken diagonal.
        let semi = RationalMatrix::from_i64_rows(&[&[1, 5, 9], &[8, 3, 4], &[6, 7, 2]]);
        assert!(is_semimagic(&semi, &rat(15, 1)));
        assert!(!is_magic(&semi, &rat(15, 1)));
        let mut negative = lo_shu();
        negative.set(0, 0, rat(-2, 1));
        assert!(!is_semimagic(&negative, &rat(11, 1)));
    }

    #[test]
    fn normal_magic_brute_force_finds_the_eight() {
        let squares = normal_magic_squares_3();
        assert_eq!(squares.len(), 8);
        assert!(squares.contains(&lo_shu()));
        for m in &squares {
            assert!(is_normal_magic(m));
            // Zeroing subtracts the cell mean 5 and kills all line sums.
            let z = zero_square(m, &SquareKind::NormalMagic).unwrap();
            assert!(z.has_zero_margins());
            let (main, anti) = diagonal_sums(&z).unwrap();
            assert!(main.is_zero() && anti.is_zero());
        }
        // Lexicographically sorted and duplicate-free.
        let mut sorted = squares.clone();
        sorted.sort_by_key(|m| m.entries().to_vec());
        sorted.dedup();
        assert_eq!(sorted, squares);
    }

    #[test]
    fn sudoku_predicate_and_blocks() {
        let board = RationalMatrix::from_i64_rows(&[
            &[1, 2, 3, 4],
            &[3, 4, 1, 2],
            &[2, 1, 4, 3],
            &[4, 3, 2, 1],
        ]);
        assert!(is_sudoku(&board).unwrap());
        assert!(!is_sudoku(&cyclic(4)).unwrap());
        assert!(matches!(is_sudoku(&cyclic(3)), Err(Error::Argument(_))));
        let z = zero_square(&board, &SquareKind::Sudoku).unwrap();
        let blocks = BlockStructure::for_side(4).unwrap();
        assert!(block_sums(&z, blocks).unwrap().is_zero());
        assert!(matches_kind(&z, &SquareKind::ZeroedSudoku).unwrap());
    }

    #[test]
    fn enumeration_counts_and_order() {
        let threes = enumerate_latin(3).unwrap();
        assert_eq!(threes.len(), 12);
        assert_eq!(threes[0].to_matrix(), cyclic(3));
        for s in &threes {
            assert!(is_latin(&s.to_matrix()));
        }
        let mut readings: Vec<Vec<u8>> = threes
            .iter()
            .map(|s| (0..9).map(|p| s.cells[p]).collect())
            .collect();
        let original = readings.clone();
        readings.sort();
        readings.dedup();
        assert_eq!(readings, original);

        assert_eq!(enumerate_latin(4).unwrap().len(), 576);
        assert!(enumerate_latin(1).is_err());
        assert!(enumerate_latin(6).is_err());
    }

    #[test]
    fn reduced_count_cross_checks_enumeration() {
        assert_eq!(count_reduced_latin(3).unwrap(), 1);
        assert_eq!(count_reduced_latin(4).unwrap(), 4);
        for n in [3usize, 4] {
            let factorial = |k: usize| (1..=k).product::<usize>() as u64;
            let total = factorial(n) * factorial(n - 1) * count_reduced_latin(n).unwrap();
            assert_eq!(total, enumerate_latin(n).unwrap().len() as u64);
        }
    }

    #[test]
    fn sudoku_enumeration_matches_filtered_latin() {
        let boards = enumerate_sudoku(2).unwrap();
        assert_eq!(boards.len(), 288);
        assert_eq!(
            boards[0].to_matrix(),
            RationalMatrix::from_i64_rows(&[
                &[1, 2, 3, 4],
                &[3, 4, 1, 2],
                &[2, 1, 4, 3],
                &[4, 3, 2, 1],
            ])
        );
        let filtered: Vec<LatinSquare> = enumerate_latin(4)
            .unwrap()
            .into_iter()
            .filter(|s| is_sudoku(&s.to_matrix()).unwrap())
            .collect();
        assert_eq!(boards, filtered);
        assert!(enumerate_sudoku(3).is_err());
    }

    #[test]
    fn norm_sphere_small_orders() {
        for n in 2..=4 {
            assert!(latin_norm_check(n).unwrap(), "n = {n}");
        }
        let z = LatinSquare::new(3, vec![1, 2, 3, 2, 3, 1, 3, 1, 2])
            .unwrap()
            .zeroed();
        assert_eq!(z.norm_sq(), rat(6, 1));
    }

    #[test]
    fn census_order_three_matches_printed_signatures() {
        let classes = sign_class_census(3).unwrap();
        assert_eq!(classes.len(), 2);
        assert_eq!(
            classes[0].signature,
            vec![rat(0, 1), rat(1, 2), rat(1, 2), rat(0, 1)]
        );
        assert_eq!(
            classes[1].signature,
            vec![rat(1, 4), rat(1, 4), rat(1, 4), rat(3, 4)]
        );
        assert_eq!(classes[0].members.len(), 4);
        assert_eq!(classes[1].members.len(), 8);
        // The cyclic square is enumerated first; its coordinates are
        // (1/4, 1/4, 1/4, -3/4), putting it in the second class.
        assert!(classes[1].members.contains(&1));
        let mut all: Vec<usize> = classes.iter().flat_map(|c| c.members.clone()).collect();
        all.sort();
        assert_eq!(all, (1..=12).collect::<Vec<_>>());
    }

    #[test]
    fn census_order_two_is_a_single_class() {
        let classes = sign_class_census(2).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].signature, vec![rat(1, 2)]);
        assert_eq!(classes[0].members, vec![1, 2]);
    }

    #[test]
    fn census_partition_survives_per_coordinate_scaling() {
        // Scaling coordinate k by the positive factor ||B_k|| must not
        // change the partition. Squared scaled coordinates c_k² N_k stay
        // rational, so compare the partitions they induce.
        for n in 2..=4 {
            let basis = basis_vmn(n, n).unwrap();
            let squares = enumerate_latin(n).unwrap();
            let mut by_abs: BTreeMap<Vec<Rational>, Vec<usize>> = BTreeMap::new();
            let mut by_scaled: BTreeMap<Vec<Rational>, Vec<usize>> = BTreeMap::new();
            for (i, square) in squares.iter().enumerate() {
                let coords = expand(&square.zeroed(), &basis).unwrap().coefficients;
                let abs: Vec<Rational> = coords.iter().map(|c| c.abs()).collect();
                let scaled: Vec<Rational> = coords
                    .iter()
                    .zip(basis.elements())
                    .map(|(c, e)| c * c * &e.squared_norm)
                    .collect();
                by_abs.entry(abs).or_default().push(i);
                by_scaled.entry(scaled).or_default().push(i);
            }
            let mut p1: Vec<Vec<usize>> = by_abs.into_values().collect();
            let mut p2: Vec<Vec<usize>> = by_scaled.into_values().collect();
            p1.sort();
            p2.sort();
            assert_eq!(p1, p2, "n = {n}");
        }
    }
}
