//! Property-based tests of structural invariants that must hold for
//! arbitrary admissible parameters, not just the tuned cases.

use proptest::prelude::*;

use twistrip::criticality::{count_below, CritGrid};
use twistrip::discretize::{assemble, build_grid, decay_ratio, transverse_modes, EndCondition, GridSpec};
use twistrip::model::{threshold_energy, Side, Variant, WaveguideSpec};
use twistrip::perturbation::CutoffSpec;

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    /// The cutoff profile's derivatives are consistent with central finite
    /// differences everywhere in its support.
    #[test]
    fn cutoff_derivative_matches_finite_differences(ell_star in 0.05f64..2.0) {
        let c = CutoffSpec::new(ell_star).unwrap();
        let r = c.support_radius();
        prop_assert!(c.xi(0.0).abs() < 1e-12);
        prop_assert!(c.xi(r + 1.0).abs() < 1e-12);
        let h = 1e-5 * r;
        // tolerances scale with the largest derivative over the support,
        // which grows like 1/band-width as ell_star shrinks
        let ts: Vec<f64> = (1..40).map(|k| r * k as f64 / 40.0).collect();
        let m1 = ts.iter().map(|&t| c.dxi(t).abs()).fold(1.0, f64::max);
        let m2 = ts.iter().map(|&t| c.d2xi(t).abs()).fold(1.0, f64::max);
        for &t in &ts {
            let fd = (c.xi(t + h) - c.xi(t - h)) / (2.0 * h);
            prop_assert!((fd - c.dxi(t)).abs() < 1e-5 * m1,
                "dxi mismatch at t={t}: fd={fd}, exact={}", c.dxi(t));
            let fd2 = (c.dxi(t + h) - c.dxi(t - h)) / (2.0 * h);
            prop_assert!((fd2 - c.d2xi(t)).abs() < 1e-5 * m2,
                "d2xi mismatch at t={t}: fd={fd2}, exact={}", c.d2xi(t));
        }
    }

    /// The profile is odd, stays within [-1, 1], and holds its unit plateau
    /// between the transition bands.
    #[test]
    fn cutoff_is_odd_with_unit_plateau(ell_star in 0.05f64..2.0) {
        let c = CutoffSpec::new(ell_star).unwrap();
        let r = c.support_radius();
        prop_assert!((c.xi(ell_star) - 1.0).abs() < 1e-12, "no plateau at t = ell_star");
        for k in 0..=200 {
            let t = r * k as f64 / 200.0;
            let v = c.xi(t);
            prop_assert!(v.abs() <= 1.0 + 1e-12);
            prop_assert!((c.xi(-t) + v).abs() < 1e-12, "profile is not odd at t={t}");
        }
    }

    /// Invalid geometry parameters are rejected.
    #[test]
    fn spec_rejects_bad_parameters(d in -2.0f64..0.0, ell in -2.0f64..0.0) {
        prop_assert!(WaveguideSpec::twisted(d, 1.0).is_err());
        prop_assert!(WaveguideSpec::twisted(1.0, ell).is_err());
        prop_assert!(CutoffSpec::new(ell).is_err());
    }

    /// Transverse thresholds grow strictly with the mode index and scale
    /// like d^-2.
    #[test]
    fn thresholds_monotone_in_mode(d in 0.3f64..3.0) {
        let mut prev = 0.0;
        for m in 1..=6 {
            let e = threshold_energy(m, d).unwrap();
            prop_assert!(e > prev);
            prop_assert!((e - threshold_energy(m, 1.0).unwrap() / (d * d)).abs() < 1e-10 * e);
            prev = e;
        }
    }

    /// The half-turn symmetry is an involution on the strip.
    #[test]
    fn parity_permutation_is_involution(ell in 0.0f64..2.0, nx in 8usize..40, ny in 4usize..12) {
        let nx = 2 * nx; // keep the grid symmetric about x1 = 0
        let spec = WaveguideSpec::twisted(1.0, ell).unwrap();
        let grid = build_grid(spec, GridSpec::new(3.0, nx, ny)).unwrap();
        let p = grid.parity_perm();
        for (i, &pi) in p.iter().enumerate() {
            prop_assert_eq!(p[pi], i, "parity map is not an involution");
        }
    }

    /// Discrete operators are exactly symmetric for every variant and
    /// end condition.
    #[test]
    fn assembled_operator_is_symmetric(ell in 0.0f64..1.5, aux in any::<bool>(), dirichlet in any::<bool>()) {
        let variant = if aux { Variant::Auxiliary } else { Variant::Twisted };
        let spec = WaveguideSpec::new(1.0, ell, variant).unwrap();
        let grid = build_grid(spec, GridSpec::new(3.0, 48, 8)).unwrap();
        let end = if dirichlet { EndCondition::Dirichlet } else { EndCondition::Neumann };
        let bundle = assemble(&grid, end).unwrap();
        prop_assert!(bundle.a.asymmetry() == 0.0);
    }

    /// The one-step decay factor of an evanescent mode lies in (0, 1],
    /// equals 1 only at zero decay, and decreases with the decay rate.
    #[test]
    fn decay_ratio_behaves(z in 0.0f64..10.0) {
        let rho = decay_ratio(z);
        prop_assert!(rho > 0.0 && rho <= 1.0);
        if z == 0.0 {
            prop_assert!((rho - 1.0).abs() < 1e-15);
        } else {
            prop_assert!(rho < 1.0);
            prop_assert!(decay_ratio(z + 0.5) < rho);
        }
    }

    /// Discrete transverse modes form an orthonormal family.
    #[test]
    fn transverse_modes_orthonormal(ny in 6usize..24, right in any::<bool>()) {
        let side = if right { Side::Right } else { Side::Left };
        let (modes, _) = transverse_modes(ny, 1.0, side, ny.min(6)).unwrap();
        for (a, va) in modes.iter().enumerate() {
            for (b, vb) in modes.iter().enumerate() {
                let dot: f64 = va.iter().zip(vb).map(|(x, y)| x * y).sum::<f64>();
                let expect = if a == b { 1.0 } else { 0.0 };
                prop_assert!((dot - expect).abs() < 1e-10, "<{a},{b}> = {dot}");
            }
        }
    }
}

/// Counting eigenvalues below a level that moves away from the threshold
/// can only lose eigenvalues, never gain them.
#[test]
fn count_below_monotone_in_delta() {
    let g = CritGrid::with_spacing(3.0, 1.0 / 32.0, 8);
    for variant in [Variant::Twisted, Variant::Auxiliary] {
        let mut prev = usize::MAX;
        for delta in [0.005, 0.01, 0.02, 0.05, 0.1] {
            let c = count_below(1.0, 1.2, delta, variant, &g).unwrap();
            assert!(c <= prev, "count increased as the level dropped ({variant:?})");
            prev = c;
        }
    }
}
