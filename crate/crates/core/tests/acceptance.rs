//! Acceptance suite: one test per shipping criterion, each printing a
//! single summary line (visible with `--nocapture`) and enforcing its
//! runtime budget.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};

use zeromargin::golden;
use zeromargin::{
    basis_dway, basis_vmn, block_sums, connectivity_check, count_reduced_latin, diagonal_sums,
    dimension_magic, dimension_magic_by_rank, dimension_sudoku, dimension_sudoku_by_rank,
    dimension_vmn, dimension_vmn_by_rank, enumerate_latin, enumerate_sudoku, expand, f_basis,
    from_f_coordinates, latin_norm_check, magic_basis, magic_basis_parts, markov_walk,
    normal_magic_squares_3, rat, sign_class_census, sudoku_basis, symmetrized_basis,
    to_f_coordinates, u_set, w_vector, zero_square, BlockStructure, ContingencyTable, Integer,
    Marginals, MarkovWalk, Rational, RationalMatrix, SplitMix64, SquareKind,
};

fn report(criterion: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("[PASS] {criterion} ({elapsed:.2?}, budget {budget:.2?})");
    assert!(
        elapsed <= budget,
        "{criterion} exceeded its runtime budget: {elapsed:.2?} > {budget:.2?}"
    );
}

#[test]
fn criterion_01_golden_reproduction() {
    let start = Instant::now();

    for (n, expected) in golden::w_reference() {
        assert_eq!(w_vector(n).unwrap(), expected, "seed vector n = {n}");
    }

    for (n, expected) in [
        (3, golden::u3_reference()),
        (6, golden::u6_reference()),
        (11, golden::u11_reference()),
    ] {
        let set = u_set(n).unwrap();
        assert_eq!(set.len(), expected.len(), "generating set size n = {n}");
        for (built, frozen) in set.iter().zip(&expected) {
            assert_eq!(&built.vector, frozen, "generating set n = {n}");
        }
    }

    let tree = zeromargin::build_tree(11).unwrap();
    let paths = tree.paths();
    let frozen_paths = golden::t11_paths_reference();
    let frozen_labels = golden::u11_reference();
    assert_eq!(paths.len(), frozen_paths.len());
    for (k, (path, label)) in paths.iter().enumerate() {
        assert_eq!(path, frozen_paths[k], "tree path {k}");
        assert_eq!(*label, &frozen_labels[k], "tree label {k}");
    }

    let b33 = basis_vmn(3, 3).unwrap();
    let frozen = golden::b33_reference();
    assert_eq!(b33.len(), frozen.len());
    for (e, (index, matrix, norm)) in b33.elements().iter().zip(&frozen) {
        assert_eq!(&e.index, index);
        assert_eq!(&e.matrix, matrix);
        assert_eq!(&e.squared_norm, norm);
    }

    let symm = symmetrized_basis(3).unwrap();
    for (e, frozen) in symm.elements().iter().zip(golden::symmetrized_3_reference()) {
        assert_eq!(e.matrix, frozen);
    }

    let sud = sudoku_basis(3).unwrap();
    for (tag, index, matrix) in golden::sudoku9_reference() {
        let e = sud.find(tag, &index).unwrap_or_else(|| {
            panic!("missing sudoku element {tag} {index:?}");
        });
        assert_eq!(e.matrix, matrix, "sudoku element {tag} {index:?}");
    }

    let magic3 = magic_basis_parts(3).unwrap();
    let off3 = golden::magic_3_off_diagonal_reference();
    assert_eq!(magic3.off_diagonal.len(), off3.len());
    assert!(magic3.xbar_list.is_empty() && magic3.ybar_list.is_empty());
    for (e, (index, matrix)) in magic3.off_diagonal.iter().zip(&off3) {
        assert_eq!(&e.index, index);
        assert_eq!(&e.matrix, matrix);
    }

    let magic6 = magic_basis_parts(6).unwrap();
    let frozen6 = golden::magic6_reference();
    assert_eq!(
        magic6.ell_values,
        frozen6
            .ell_values
            .iter()
            .map(|&v| Integer::from(v))
            .collect::<Vec<_>>()
    );
    assert_eq!(magic6.ell, Integer::from(frozen6.ell));
    // The first skew diagonal product: its last row is the negation of
    // its first because the generator (1,0,0,0,0,-1) multiplies itself.
    // Any transcription showing row 6 as (1,0,0,0,0,-1) contradicts the
    // outer-product definition; the frozen matrix is the derived value.
    assert_eq!(magic6.x_list[0].matrix, frozen6.x1);
    assert_eq!(magic6.xbar_list[0].matrix, frozen6.xbar1);
    assert_eq!(magic6.xbar_list[1].matrix, frozen6.xbar2);
    assert_eq!(magic6.ybar_list[0].matrix, frozen6.ybar1);

    report("criterion 01: golden reproduction", start, Duration::from_secs(30));
}

#[test]
fn criterion_02_reference_expansions() {
    let start = Instant::now();
    let basis = basis_vmn(3, 3).unwrap();
    let frozen = golden::zeroed_latin_3_expansions();

    // The twelve frozen squares are exactly the twelve zeroed squares of
    // the enumeration.
    let enumerated: BTreeSet<Vec<Rational>> = enumerate_latin(3)
        .unwrap()
        .iter()
        .map(|s| s.zeroed().entries().to_vec())
        .collect();
    let frozen_set: BTreeSet<Vec<Rational>> = frozen
        .iter()
        .map(|(square, _)| square.entries().to_vec())
        .collect();
    assert_eq!(enumerated, frozen_set);

    for (square, coefficients) in &frozen {
        let coords = expand(square, &basis).unwrap();
        assert!(coords.residual_is_zero);
        assert_eq!(&coords.coefficients, coefficients);
    }

    report("criterion 02: reference expansions", start, Duration::from_secs(1));
}

#[test]
fn criterion_03_dimension_formulas() {
    let start = Instant::now();
    for m in 2..=8 {
        for n in 2..=8 {
            assert_eq!(
                dimension_vmn(m, n).unwrap(),
                (m - 1) * (n - 1),
                "formula {m}x{n}"
            );
            assert_eq!(
                dimension_vmn(m, n).unwrap(),
                dimension_vmn_by_rank(m, n),
                "rank oracle {m}x{n}"
            );
        }
    }
    for n in 3..=8 {
        assert_eq!(dimension_magic(n).unwrap(), (n - 1) * (n - 1) - 2);
        assert_eq!(dimension_magic(n).unwrap(), dimension_magic_by_rank(n), "magic {n}");
    }
    for n in 2..=3 {
        assert_eq!(dimension_sudoku(n).unwrap(), n * (n - 1) * (n - 1) * (n + 2));
        assert_eq!(
            dimension_sudoku(n).unwrap(),
            dimension_sudoku_by_rank(n),
            "sudoku {n}"
        );
    }
    report("criterion 03: dimension formulas", start, Duration::from_secs(10));
}

#[test]
fn criterion_04_orthogonality() {
    let start = Instant::now();
    for m in 2..=12 {
        for n in 2..=12 {
            assert!(basis_vmn(m, n).unwrap().is_orthogonal(), "product {m}x{n}");
        }
    }
    for n in 3..=10 {
        assert!(magic_basis(n).unwrap().is_orthogonal(), "magic {n}");
        assert!(symmetrized_basis(n).unwrap().is_orthogonal(), "symmetrized {n}");
    }
    for n in 2..=3 {
        assert!(sudoku_basis(n).unwrap().is_orthogonal(), "sudoku {n}");
    }
    assert!(basis_dway(&[3, 3, 3]).unwrap().is_orthogonal());
    assert!(basis_dway(&[3, 4, 5]).unwrap().is_orthogonal());
    report("criterion 04: orthogonality", start, Duration::from_secs(60));
}

#[test]
fn criterion_05_membership() {
    let start = Instant::now();
    for m in 2..=12 {
        for n in 2..=12 {
            for e in basis_vmn(m, n).unwrap().elements() {
                assert!(e.matrix.has_zero_margins(), "product {m}x{n} {:?}", e.index);
            }
        }
    }
    for n in 3..=10 {
        for e in magic_basis(n).unwrap().elements() {
            assert!(e.matrix.has_zero_margins(), "magic {n} {:?}", e.index);
            let (main, anti) = diagonal_sums(&e.matrix).unwrap();
            assert!(main.is_zero() && anti.is_zero(), "magic {n} {:?}", e.index);
        }
    }
    for n in 2..=3 {
        let blocks = BlockStructure::new(n).unwrap();
        for e in sudoku_basis(n).unwrap().elements() {
            assert!(e.matrix.has_zero_margins(), "sudoku {n} {:?}", e.index);
            assert!(
                block_sums(&e.matrix, blocks).unwrap().is_zero(),
                "sudoku {n} {:?}",
                e.index
            );
        }
    }
    for dims in [[3usize, 3, 3], [3, 4, 5]] {
        for e in basis_dway(&dims).unwrap().elements() {
            for axis in 0..dims.len() {
                assert!(
                    e.array.axis_sums(axis).iter().all(Zero::is_zero),
                    "dway {dims:?} axis {axis}"
                );
            }
        }
    }
    report("criterion 05: membership", start, Duration::from_secs(60));
}

#[test]
fn criterion_06_enumeration_census() {
    let start = Instant::now();
    let expected = [(3usize, 12usize), (4, 576), (5, 161_280)];
    for (n, count) in expected {
        let squares = enumerate_latin(n).unwrap();
        assert_eq!(squares.len(), count, "count n = {n}");
        // Independent reduced-square oracle: total = n! (n-1)! reduced.
        let factorial = |k: usize| (1..=k).product::<usize>() as u64;
        assert_eq!(
            factorial(n) * factorial(n - 1) * count_reduced_latin(n).unwrap(),
            count as u64,
            "reduced oracle n = {n}"
        );
    }
    report("criterion 06: enumeration census", start, Duration::from_secs(300));
}

#[test]
fn criterion_07_sign_class_census() {
    let start = Instant::now();
    let classes3 = sign_class_census(3).unwrap();
    assert_eq!(classes3.len(), 2);
    assert_eq!(
        classes3[0].signature,
        vec![rat(0, 1), rat(1, 2), rat(1, 2), rat(0, 1)]
    );
    assert_eq!(
        classes3[1].signature,
        vec![rat(1, 4), rat(1, 4), rat(1, 4), rat(3, 4)]
    );

    let classes5 = sign_class_census(5).unwrap();
    assert_eq!(classes5.len(), 4_665);
    let smallest = classes5.iter().map(|c| c.members.len()).min().unwrap();
    assert!(smallest >= 16, "smallest class has {smallest} members");
    let total: usize = classes5.iter().map(|c| c.members.len()).sum();
    assert_eq!(total, 161_280);

    report("criterion 07: sign-class census", start, Duration::from_secs(600));
}

#[test]
fn criterion_08_norm_sphere() {
    let start = Instant::now();
    for (n, norm) in [(2usize, 1i64), (3, 6), (4, 20), (5, 50)] {
        assert_eq!(
            rat((n * n * (n * n - 1)) as i64, 12),
            rat(norm, 1),
            "formula n = {n}"
        );
        assert!(latin_norm_check(n).unwrap(), "norm sphere n = {n}");
    }
    report("criterion 08: norm sphere", start, Duration::from_secs(300));
}

#[test]
fn criterion_09_span_residuals() {
    let start = Instant::now();
    for n in 2..=5 {
        let basis = basis_vmn(n, n).unwrap();
        for square in enumerate_latin(n).unwrap() {
            let coords = expand(&square.zeroed(), &basis).unwrap();
            assert!(coords.residual_is_zero, "latin order {n}");
        }
    }

    let magic3 = magic_basis(3).unwrap();
    let squares = normal_magic_squares_3();
    assert_eq!(squares.len(), 8);
    for m in &squares {
        let zeroed = zero_square(m, &SquareKind::NormalMagic).unwrap();
        let coords = expand(&zeroed, &magic3).unwrap();
        assert!(coords.residual_is_zero, "magic square");
    }

    let sud2 = sudoku_basis(2).unwrap();
    let boards = enumerate_sudoku(2).unwrap();
    assert_eq!(boards.len(), 288);
    for board in &boards {
        let coords = expand(&board.zeroed(), &sud2).unwrap();
        assert!(coords.residual_is_zero, "sudoku board");
    }

    report("criterion 09: span residuals", start, Duration::from_secs(600));
}

#[test]
fn criterion_10_transport() {
    let start = Instant::now();

    // Round trips between zero-margin matrices and move coordinates on
    // 1000 seeded random integer coordinate grids for 4x5 tables.
    let mut rng = SplitMix64::new(2024);
    for _ in 0..1000 {
        let coords = RationalMatrix::from_fn(3, 4, |_, _| {
            rat((rng.next_u64() % 2001) as i64 - 1000, 1)
        });
        let matrix = from_f_coordinates(&coords);
        assert!(matrix.has_zero_margins());
        assert_eq!(to_f_coordinates(&matrix).unwrap(), coords);
    }

    // The move basis is genuinely non-orthogonal.
    let moves = f_basis(3, 3).unwrap();
    let mut off_diagonal_nonzero = false;
    for a in 0..moves.len() {
        for b in a + 1..moves.len() {
            if !moves.moves()[a].dot(&moves.moves()[b]).unwrap().is_zero() {
                off_diagonal_nonzero = true;
            }
        }
    }
    assert!(off_diagonal_nonzero);

    // Connectivity of the rectangle-move graph on small margins.
    assert!(connectivity_check(&Marginals::from_counts(&[1, 1, 1], &[1, 1, 1]).unwrap()).unwrap());
    assert!(connectivity_check(&Marginals::from_counts(&[2, 2, 2], &[2, 2, 2]).unwrap()).unwrap());

    // Seed-reproducible, margin-preserving walk.
    let start_table = ContingencyTable::from_i64_rows(&[
        &[5, 0, 2, 1],
        &[1, 3, 0, 4],
        &[0, 2, 3, 1],
        &[2, 1, 1, 2],
    ])
    .unwrap();
    let a = markov_walk(&start_table, 10_000, 7);
    let b = markov_walk(&start_table, 10_000, 7);
    assert_eq!(a, b);
    assert_eq!(a.marginals(), start_table.marginals());
    assert!(a
        .marginals()
        .row_totals()
        .iter()
        .all(|x| !x.is_negative()));

    // Uniformity smoke test: three tables share the margins r = c =
    // (2,2); the lazy rectangle walk is symmetric, so the stationary
    // distribution is uniform. The chain's spectral gap bounds its
    // asymptotic variance by 3x the iid binomial variance, so we allow
    // five of those inflated standard deviations.
    let steps = 300_000u64;
    let start_22 = ContingencyTable::from_i64_rows(&[&[2, 0], &[0, 2]]).unwrap();
    let mut walk = MarkovWalk::new(&start_22, 99);
    let mut visits = [0u64; 3];
    for _ in 0..steps {
        walk.step();
        let corner = walk.table().get(0, 0).clone();
        let idx = usize::try_from(u64::try_from(corner).unwrap()).unwrap();
        visits[idx] += 1;
    }
    let expected = steps as f64 / 3.0;
    let sigma = (steps as f64 * (1.0 / 3.0) * (2.0 / 3.0) * 3.0).sqrt();
    for (state, &count) in visits.iter().enumerate() {
        let deviation = (count as f64 - expected).abs();
        assert!(
            deviation <= 5.0 * sigma,
            "state {state}: visits {count}, expected {expected:.0}, dev {deviation:.0} > 5 x {sigma:.0}"
        );
    }

    // The walk genuinely moves: all three tables appear.
    assert!(visits.iter().all(|&v| v > 0), "visits {visits:?}");

    report("criterion 10: transport", start, Duration::from_secs(120));
}
