//! Property tests over the public API.

use proptest::prelude::*;

use semidisc::fdb::enumerate_partitions;
use semidisc::linalg::{
    det_gapped_vandermonde, det_oracle, det_power_vandermonde, gapped_vandermonde_matrix,
    power_vandermonde_matrix, solve_exact, RationalMatrix, SolveOutcome,
};
use semidisc::rational::{rat, Rational};
use semidisc::stability::{linearize, symbol};

fn rational_vec(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-10i64..=10, 1i64..=6).prop_map(|(n, d)| rat(n, d)), len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Both closed forms agree with the elimination oracle exactly.
    #[test]
    fn closed_forms_match_the_oracle(a in rational_vec(1..=6)) {
        prop_assert_eq!(
            det_power_vandermonde(&a),
            det_oracle(&power_vandermonde_matrix(&a)).unwrap()
        );
        if a.len() >= 2 {
            prop_assert_eq!(
                det_gapped_vandermonde(&a).unwrap(),
                det_oracle(&gapped_vandermonde_matrix(&a).unwrap()).unwrap()
            );
        }
    }

    /// Swapping two nodes negates both closed forms.
    #[test]
    fn closed_forms_are_alternating(a in rational_vec(2..=6), j in 0usize..6, k in 0usize..6) {
        let j = j % a.len();
        let k = k % a.len();
        prop_assume!(j != k);
        let mut swapped = a.clone();
        swapped.swap(j, k);
        prop_assert_eq!(det_power_vandermonde(&swapped), -det_power_vandermonde(&a));
        prop_assert_eq!(
            det_gapped_vandermonde(&swapped).unwrap(),
            -det_gapped_vandermonde(&a).unwrap()
        );
    }

    /// A right-hand side manufactured from a known solution is never
    /// inconsistent, and a unique solution must reproduce it.
    #[test]
    fn manufactured_systems_solve_back(
        entries in prop::collection::vec((-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d)), 16),
        x in rational_vec(4..=4),
    ) {
        let m = RationalMatrix::new(4, 4, entries).unwrap();
        let b: Vec<Rational> = (0..4)
            .map(|i| (0..4).map(|j| m.get(i, j) * &x[j]).sum())
            .collect();
        match solve_exact(&m, &b).unwrap() {
            SolveOutcome::Unique(found) => {
                let check: Vec<Rational> = (0..4)
                    .map(|i| (0..4).map(|j| m.get(i, j) * &found[j]).sum())
                    .collect();
                prop_assert_eq!(check, b);
            }
            SolveOutcome::Underdetermined { rank } => prop_assert!(rank < 4),
            SolveOutcome::Inconsistent { .. } => {
                prop_assert!(false, "consistent by construction")
            }
        }
    }

    /// Every enumerated multi-index of weight s has weighted sum s, and the
    /// symbol of any consistent scheme satisfies the two Fourier identities.
    #[test]
    fn partition_weights_are_exact(s in 1usize..=12) {
        for m in enumerate_partitions(s).unwrap() {
            let weighted: usize = (1..=s).map(|j| j * m.count(j)).sum();
            prop_assert_eq!(weighted, s);
            prop_assert!(m.order() >= 1);
        }
    }

    #[test]
    fn symbol_identities(
        raw in prop::collection::vec(-1.0f64..1.0, 3..=7),
        lambda in 0.05f64..3.0,
        theta in 0.0f64..std::f64::consts::TAU,
    ) {
        prop_assume!(raw.len() % 2 == 1);
        let mean = raw.iter().sum::<f64>() / raw.len() as f64;
        let alpha: Vec<f64> = raw.iter().map(|a| a - mean).collect();
        let scheme = linearize(&alpha).unwrap();
        // Consistency pins the symbol at theta = 0.
        let at_zero = symbol(&scheme, lambda, 0.0);
        prop_assert!((at_zero.re - 1.0).abs() < 1e-13 && at_zero.im.abs() < 1e-13);
        // Real coefficients give conjugate symmetry.
        let plus = symbol(&scheme, lambda, theta);
        let minus = symbol(&scheme, lambda, -theta);
        prop_assert!((plus - minus.conj()).norm() < 1e-12);
    }
}
