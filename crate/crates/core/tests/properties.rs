//! Randomized invariant checks over the exact-arithmetic core.

use proptest::prelude::*;

use zeromargin::{
    basis_vmn, centro_split, expand, from_f_coordinates, markov_walk, parse_rational, rat,
    rational_to_string, reconstruct, rotate180, to_f_coordinates, ContingencyTable, Marginals,
    Rational, RationalMatrix,
};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = RationalMatrix> {
    proptest::collection::vec(small_rational(), rows * cols).prop_map(move |v| {
        RationalMatrix::from_fn(rows, cols, |r, c| v[r * cols + c].clone())
    })
}

fn counts_matrix() -> impl Strategy<Value = Vec<Vec<u64>>> {
    (2usize..=4, 2usize..=4).prop_flat_map(|(rows, cols)| {
        proptest::collection::vec(proptest::collection::vec(0u64..=6, cols), rows)
    })
}

proptest! {
    #[test]
    fn rational_strings_round_trip(r in small_rational()) {
        prop_assert_eq!(parse_rational(&rational_to_string(&r)).unwrap(), r);
    }

    #[test]
    fn expansion_inverts_reconstruction(
        (m, n) in (2usize..=4, 2usize..=4),
        seed_coeffs in proptest::collection::vec(small_rational(), 9),
    ) {
        let basis = basis_vmn(m, n).unwrap();
        let coeffs: Vec<Rational> = seed_coeffs.into_iter().take(basis.len()).collect();
        prop_assume!(coeffs.len() == basis.len());
        let x = reconstruct(&coeffs, &basis).unwrap();
        let coords = expand(&x, &basis).unwrap();
        prop_assert!(coords.residual_is_zero);
        prop_assert_eq!(coords.coefficients, coeffs);
    }

    #[test]
    fn projection_is_idempotent(x in matrix(3, 4)) {
        let basis = basis_vmn(3, 4).unwrap();
        let first = expand(&x, &basis).unwrap();
        let projected = reconstruct(&first.coefficients, &basis).unwrap();
        let second = expand(&projected, &basis).unwrap();
        prop_assert!(second.residual_is_zero);
        prop_assert_eq!(second.coefficients, first.coefficients);
    }

    #[test]
    fn half_turn_is_an_involution(x in matrix(3, 3)) {
        prop_assert_eq!(rotate180(&rotate180(&x)), x);
    }

    #[test]
    fn centro_split_reconstructs(x in matrix(4, 4)) {
        let (cs, scs) = centro_split(&x);
        prop_assert_eq!(cs.add(&scs).unwrap(), x.clone());
        prop_assert_eq!(rotate180(&cs), cs.clone());
        prop_assert_eq!(rotate180(&scs), scs.scale(&rat(-1, 1)));
    }

    #[test]
    fn move_coordinates_round_trip(coords in matrix(2, 3)) {
        let table = from_f_coordinates(&coords);
        prop_assert!(table.has_zero_margins());
        prop_assert_eq!(to_f_coordinates(&table).unwrap(), coords);
    }

    #[test]
    fn northwest_corner_hits_the_margins(grid in counts_matrix()) {
        let rows: Vec<u64> = grid.iter().map(|r| r.iter().sum()).collect();
        let cols: Vec<u64> = (0..grid[0].len())
            .map(|c| grid.iter().map(|r| r[c]).sum())
            .collect();
        prop_assume!(rows.iter().sum::<u64>() > 0);
        let marginals = Marginals::from_counts(&rows, &cols).unwrap();
        let table = ContingencyTable::northwest(&marginals).unwrap();
        prop_assert_eq!(table.marginals(), marginals);
    }

    #[test]
    fn walk_preserves_margins(grid in counts_matrix(), steps in 0u64..=200, seed: u64) {
        let flat: Vec<Vec<i64>> = grid
            .iter()
            .map(|r| r.iter().map(|&v| v as i64).collect())
            .collect();
        let slices: Vec<&[i64]> = flat.iter().map(|r| r.as_slice()).collect();
        let start = ContingencyTable::from_i64_rows(&slices).unwrap();
        let end = markov_walk(&start, steps, seed);
        prop_assert_eq!(end.marginals(), start.marginals());
    }
}
