//! Acceptance gate: one test per criterion, each emitting a single
//! pass/fail line through the harness. Tolerances are fixed here; the
//! regression constants were pinned from the first verified run.

use std::f64::consts::PI;
use std::sync::OnceLock;
use std::time::Instant;

use twistrip::criticality::{
    count_below, critical_length_count, critical_length_indicator, threshold_mode, CritGrid,
};
use twistrip::discretize::{assemble, build_grid, EndCondition, GridSpec};
use twistrip::eigensolve::{smallest_eigs, EigenRequest};
use twistrip::model::{Variant, WaveguideSpec};
use twistrip::perturbation::{
    compute_mu1, compute_mu2, emergence_fit, grid_critical_ell, mu1_from_alpha, solve_corrector,
    CutoffSpec, EmergenceSeries, Mu2Report,
};
use twistrip::sparse::Csr;
use twistrip::spectrum::{discrete_spectrum, validate_bracketing, Numerics, Parity};

const E1: f64 = PI * PI / 4.0;

/// Critical length ℓ₁ for d = 1, pinned from the first verified run of the
/// indicator detector on the [1/128, 1/256] grid family (criterion 7).
const PINNED_ELL_1: f64 = 0.263314;
const PINNED_ELL_1_TOL: f64 = 2e-3;

fn lowest_value(spec: &WaveguideSpec, l_half: f64, nx: usize, ny: usize) -> f64 {
    let grid = build_grid(*spec, GridSpec::new(l_half, nx, ny)).unwrap();
    let bundle = assemble(&grid, EndCondition::Transparent { mu: 0.0, n_modes: (ny - 1).min(12) })
        .unwrap();
    let r = smallest_eigs(&bundle.a, &EigenRequest::new(1, 0.0)).unwrap();
    assert!(r.all_converged(), "residuals {:?}", r.residuals);
    r.values[0]
}

#[test]
fn criterion_01_threshold_edge() {
    let t0 = Instant::now();
    // the ℓ = 0 limit of the window family: a uniform one-sided Dirichlet
    // strip whose spectrum starts exactly at the essential edge E₁
    let spec = WaveguideSpec::auxiliary(1.0, 0.0).unwrap();
    let fine = lowest_value(&spec, 10.0, 800, 40);
    let coarse = lowest_value(&spec, 10.0, 400, 20);
    let err_fine = (fine - E1).abs() / E1;
    let err_coarse = (coarse - E1).abs() / E1;
    assert!(err_fine < 2e-3, "threshold edge error {err_fine:.2e} exceeds 0.2%");
    assert!(err_fine < err_coarse, "no improvement under refinement: {err_fine:.2e} vs {err_coarse:.2e}");
    assert!(t0.elapsed().as_secs() < 10, "runtime {:?} exceeds 10 s", t0.elapsed());
    println!("criterion 1 PASS: edge error {err_fine:.2e} (coarse {err_coarse:.2e}), {:?}", t0.elapsed());
}

#[test]
fn criterion_02_oracle_rectangles() {
    let t0 = Instant::now();
    // pure-Dirichlet unit square, cell-centered five-point stencil, h = 1/64
    let n = 64;
    let h = 1.0 / n as f64;
    let c = 1.0 / (h * h);
    let mut t = vec![];
    let idx = |i: usize, j: usize| i * n + j;
    for i in 0..n {
        for j in 0..n {
            let mut diag = 0.0;
            for (di, dj) in [(-1i64, 0i64), (1, 0), (0, -1), (0, 1)] {
                let (ii, jj) = (i as i64 + di, j as i64 + dj);
                if ii >= 0 && ii < n as i64 && jj >= 0 && jj < n as i64 {
                    diag += c;
                    t.push((idx(i, j), idx(ii as usize, jj as usize), -c));
                } else {
                    diag += c + c; // Dirichlet ghost reflection adds 1/h² twice
                }
            }
            t.push((idx(i, j), idx(i, j), diag));
        }
    }
    let a = Csr::from_triplets(n * n, &t);
    let r = smallest_eigs(&a, &EigenRequest::new(3, 0.0)).unwrap();
    assert!(r.all_converged());
    let mut exact: Vec<f64> = vec![2.0, 5.0, 5.0].iter().map(|s| s * PI * PI).collect();
    exact.sort_by(|a, b| a.partial_cmp(b).unwrap());
    for (got, want) in r.values.iter().zip(&exact) {
        let rel = (got - want).abs() / want;
        assert!(rel < 5e-3, "Dirichlet square: {got} vs {want}, rel {rel:.2e}");
    }

    // Dirichlet/Neumann rectangle: Dirichlet ends and bottom, Neumann top
    let spec = WaveguideSpec::auxiliary(1.0, 0.0).unwrap();
    let grid = build_grid(spec, GridSpec::new(0.5, 64, 64)).unwrap();
    let bundle = assemble(&grid, EndCondition::Dirichlet).unwrap();
    let r = smallest_eigs(&bundle.a, &EigenRequest::new(3, 0.0)).unwrap();
    assert!(r.all_converged());
    let mut exact: Vec<f64> = vec![];
    for j in 1..=3i32 {
        for m in 1..=3i32 {
            exact.push(PI * PI * (j * j) as f64 + PI * PI * (m as f64 - 0.5).powi(2));
        }
    }
    exact.sort_by(|a, b| a.partial_cmp(b).unwrap());
    for (got, want) in r.values.iter().zip(&exact) {
        let rel = (got - want).abs() / want;
        assert!(rel < 5e-3, "D/N rectangle: {got} vs {want}, rel {rel:.2e}");
    }
    assert!(t0.elapsed().as_secs() < 5, "runtime {:?} exceeds 5 s", t0.elapsed());
    println!("criterion 2 PASS: rectangle oracles within 0.5%, {:?}", t0.elapsed());
}

#[test]
fn criterion_03_bracketing() {
    let t0 = Instant::now();
    let num = Numerics::default();
    for ell in [1.0, 2.0, 3.0] {
        let br = validate_bracketing(1.0, ell, &num).unwrap();
        for c in &br.checks {
            assert!(
                c.ok,
                "bracketing violated at ell={ell}, m={}: {} not in [{}, {:?}]",
                c.m, c.value, c.lower_bound, c.upper_bound
            );
        }
        assert!(!br.checks.is_empty(), "no eigenvalues to bracket at ell={ell}");
    }
    assert!(t0.elapsed().as_secs() < 120, "runtime {:?} exceeds 2 min", t0.elapsed());
    println!("criterion 3 PASS: zero bracket violations, {:?}", t0.elapsed());
}

#[test]
fn criterion_04_auxiliary_bounds_and_count_band() {
    let num = Numerics::default();
    for ell in [0.5, 1.5, 2.5, 3.5] {
        // validate_bracketing pairs the window ℓ/2 with the auxiliary window ℓ
        let br = validate_bracketing(1.0, ell / 2.0, &num).unwrap();
        assert!(br.aux_analytic_ok, "analytic bounds violated for auxiliary ell={ell}");
        let floor = ell.floor() as usize;
        let n_star = br.auxiliary.count;
        assert!(
            n_star >= floor && n_star <= floor + 1,
            "count band violated at ell={ell}: N*={n_star} not in [{floor}, {}]",
            floor + 1
        );
    }
    println!("criterion 4 PASS: auxiliary bounds and count bands hold");
}

#[test]
fn criterion_05_count_sandwich() {
    let num = Numerics::default();
    for ell in [1.0, 2.0, 3.0] {
        let br = validate_bracketing(1.0, ell, &num).unwrap();
        assert!(
            br.count_sandwich_ok,
            "count sandwich violated at ell={ell}: N={}, N*={}",
            br.twisted.count, br.auxiliary.count
        );
    }
    println!("criterion 5 PASS: count sandwich holds");
}

#[test]
fn criterion_06_parity_alternation() {
    let num = Numerics::default();
    let spec = WaveguideSpec::twisted(1.0, 3.0).unwrap();
    let rep = discrete_spectrum(&spec, &num).unwrap();
    assert!(rep.eigenvalues.len() >= 3, "need three eigenvalues, got {}", rep.eigenvalues.len());
    let want = [Parity::Even, Parity::Odd, Parity::Even];
    for (k, b) in rep.eigenvalues.iter().take(3).enumerate() {
        assert_eq!(b.parity, want[k], "eigenvalue {} has parity {}", k + 1, b.parity);
        assert!(b.parity_score < 1e-6, "parity score {:.2e} at m={}", b.parity_score, k + 1);
    }
    println!("criterion 6 PASS: parities even/odd/even with scores < 1e-6");
}

#[test]
fn criterion_07_critical_length() {
    let t0 = Instant::now();
    let grids = [
        CritGrid::with_spacing(3.5, 1.0 / 128.0, 16),
        CritGrid::with_spacing(3.5, 1.0 / 256.0, 32),
    ];
    let ind = critical_length_indicator(1.0, 1, Variant::Twisted, &grids, 42).unwrap();
    // the count detector runs on finer grids: it needs only inertia solves,
    // and its lattice quantization is set by the cell size
    let cgrids = [
        CritGrid::with_spacing(3.5, 1.0 / 512.0, 32),
        CritGrid::with_spacing(3.5, 1.0 / 1024.0, 64),
    ];
    let cnt =
        critical_length_count(1.0, 1, Variant::Twisted, &[0.02, 0.01, 0.005, 0.0025], &cgrids)
            .unwrap();
    let rel = (ind.value - cnt.value).abs() / ind.value;
    assert!(rel < 0.01, "detectors disagree: {:.6} vs {:.6} ({rel:.4})", ind.value, cnt.value);

    // upper bound ℓ₁ ≤ ℓ*₂/2 with ℓ*₂ located on the auxiliary lattice
    let ga = CritGrid::with_spacing(5.5, 1.0 / 128.0, 12);
    let hx = ga.hx();
    let mut k_lo = 1usize;
    let mut k_hi = (2.2 / hx) as usize;
    assert!(count_below(1.0, k_hi as f64 * hx, 1e-10, Variant::Auxiliary, &ga).unwrap() >= 2);
    while k_hi - k_lo > 1 {
        let mid = (k_lo + k_hi) / 2;
        if count_below(1.0, mid as f64 * hx, 1e-10, Variant::Auxiliary, &ga).unwrap() >= 2 {
            k_hi = mid;
        } else {
            k_lo = mid;
        }
    }
    let ell_star_2 = k_hi as f64 * hx;
    assert!(ind.value > 0.0);
    assert!(
        ind.value <= ell_star_2 / 2.0 + hx,
        "ell_1 = {:.6} exceeds ell*_2/2 = {:.6}",
        ind.value,
        ell_star_2 / 2.0
    );

    let drift = (ind.value - PINNED_ELL_1).abs();
    assert!(
        drift <= PINNED_ELL_1_TOL,
        "ell_1 = {:.7} drifted from pinned {PINNED_ELL_1} by {drift:.2e}",
        ind.value
    );
    assert!(t0.elapsed().as_secs() < 600, "runtime {:?} exceeds 10 min", t0.elapsed());
    println!(
        "criterion 7 PASS: ell_1 = {:.6} (count {:.6}, {rel:.4} apart), <= ell*_2/2 = {:.6}, {:?}",
        ind.value,
        cnt.value,
        ell_star_2 / 2.0,
        t0.elapsed()
    );
}

struct EmergeBundle {
    series: EmergenceSeries,
    mu1_integral: f64,
    mu1_alpha: f64,
    mu2: Mu2Report,
}

fn emerge_bundle() -> &'static EmergeBundle {
    static CELL: OnceLock<EmergeBundle> = OnceLock::new();
    CELL.get_or_init(|| {
        let g = CritGrid::with_spacing(3.5, 1.0 / 512.0, 32);
        let mut series =
            emergence_fit(1.0, 1, &g, &[0.02, 0.04, 0.08, 0.16], Some(0.26), 42).unwrap();
        let ell_c = grid_critical_ell(1.0, 1, &g).unwrap();
        let tm = threshold_mode(1.0, ell_c, 1, &g).unwrap();
        let mu1_integral = compute_mu1(&tm).unwrap();
        let cutoff = CutoffSpec::new(tm.ell).unwrap();
        let corr = solve_corrector(&tm, mu1_integral, &cutoff).unwrap();
        let mu2 = compute_mu2(&tm, &corr, mu1_integral, &cutoff).unwrap();
        series.mu1_integral = Some(mu1_integral);
        series.mu2_formula = Some(mu2.mu2);
        EmergeBundle { series, mu1_integral, mu1_alpha: mu1_from_alpha(tm.alpha1), mu2 }
    })
}

#[test]
fn criterion_08_emergence_law() {
    let t0 = Instant::now();
    let b = emerge_bundle();
    let s = &b.series;
    assert!(
        s.slope_loglog >= 0.9 && s.slope_loglog <= 1.1,
        "log-log slope {} outside [0.9, 1.1]",
        s.slope_loglog
    );
    let agree = s.mu1_agreement().unwrap();
    assert!(agree <= 0.05, "mu1 fit vs integral disagree by {agree:.4}");

    // two-term prediction error scales like ε³: between consecutive sweep
    // points with ε-ratio near 2 the effective halving factor is 8 ± 2
    let mut checked = 0;
    for w in 0..s.eps_grid.len() - 1 {
        let (e0, e1) = (s.eps_grid[w], s.eps_grid[w + 1]);
        let rho = e1 / e0;
        if !(1.7..=2.3).contains(&rho) {
            continue;
        }
        let r = |i: usize| {
            s.mu_grid[i] - s.mu1_fit * s.eps_grid[i] - s.mu2_fit * s.eps_grid[i] * s.eps_grid[i]
        };
        let (r0, r1) = (r(w), r(w + 1));
        assert!(r0 * r1 > 0.0, "two-term residuals change sign: {r0:.3e}, {r1:.3e}");
        let factor = (r1 / r0).abs().powf((2.0f64).ln() / rho.ln());
        assert!(
            (6.0..=10.0).contains(&factor),
            "halving factor {factor:.2} outside 8 ± 2 between eps {e0:.4} and {e1:.4}"
        );
        checked += 1;
    }
    assert!(checked >= 1, "no consecutive sweep points with eps-ratio near 2");
    assert!(t0.elapsed().as_secs() < 900, "runtime {:?} exceeds 15 min", t0.elapsed());
    println!(
        "criterion 8 PASS: slope {:.4}, mu1 agreement {agree:.4}, {checked} halving check(s), {:?}",
        s.slope_loglog,
        t0.elapsed()
    );
}

#[test]
fn criterion_09_mu1_triple_agreement() {
    let b = emerge_bundle();
    let vals = [b.series.mu1_fit, b.mu1_integral, b.mu1_alpha];
    let mut worst = 0.0f64;
    for i in 0..3 {
        for j in i + 1..3 {
            let rel = (vals[i] - vals[j]).abs() / vals[j].abs();
            worst = worst.max(rel);
        }
    }
    assert!(
        worst <= 0.05,
        "mu1 triple disagrees: fit {:.5}, integral {:.5}, corner {:.5} (worst {worst:.4})",
        vals[0],
        vals[1],
        vals[2]
    );
    println!(
        "criterion 9 PASS: mu1 fit {:.4} / integral {:.4} / corner {:.4}, worst pair {worst:.4}",
        vals[0], vals[1], vals[2]
    );
}

#[test]
fn criterion_10_mu2_agreement_and_variant_report() {
    let b = emerge_bundle();
    let agree = b.series.mu2_agreement().unwrap();
    assert!(
        agree <= 0.10,
        "mu2 formula {:.5} vs fit {:.5}: {agree:.4}",
        b.mu2.mu2,
        b.series.mu2_fit
    );
    assert!(b.mu2.mu2_variant.is_finite(), "variant evaluation failed");
    assert!(b.mu2.variant_discrepancy.is_finite());
    println!(
        "criterion 10 PASS: mu2 formula {:.4} vs fit {:.4} ({agree:.4}); variant {:.4}, discrepancy {:.4}",
        b.mu2.mu2, b.series.mu2_fit, b.mu2.mu2_variant, b.mu2.variant_discrepancy
    );
}

#[test]
fn criterion_11_truncation_decay() {
    let spec = WaveguideSpec::twisted(1.0, 1.0).unwrap();
    let hx = 1.0f64 / 16.0;
    let mut gaps = vec![];
    let mut lam1 = 0.0;
    let ls = [2.5, 3.5];
    for &l in &ls {
        let nx = (2.0 * l / hx).round() as usize;
        let grid = build_grid(spec, GridSpec::new(l, nx, 16)).unwrap();
        let ad = assemble(&grid, EndCondition::Dirichlet).unwrap();
        let an = assemble(&grid, EndCondition::Neumann).unwrap();
        let ld = smallest_eigs(&ad.a, &EigenRequest::new(1, 0.0)).unwrap().values[0];
        let ln_ = smallest_eigs(&an.a, &EigenRequest::new(1, 0.0)).unwrap().values[0];
        assert!(ld > ln_, "Dirichlet ends must lie above Neumann ends");
        gaps.push(ld - ln_);
        lam1 = 0.5 * (ld + ln_);
    }
    let slope = (gaps[0] / gaps[1]).ln() / (ls[1] - ls[0]);
    let target = 2.0 * (E1 - lam1).sqrt();
    let rel = (slope - target).abs() / target;
    assert!(rel < 0.20, "gap decay slope {slope:.3} vs 2*sqrt(E1-lambda1) = {target:.3} ({rel:.4})");
    println!("criterion 11 PASS: decay slope {slope:.3} vs {target:.3} ({rel:.4})");
}

#[test]
fn criterion_12_validate_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_twistrip");
    let run = |out: &str| {
        let st = std::process::Command::new(bin)
            .current_dir(dir.path())
            .args(["validate", "--quick", "--no-cache", "--seed", "42", "--out", out])
            .output()
            .unwrap();
        assert!(st.status.success(), "validate failed: {}", String::from_utf8_lossy(&st.stderr));
        std::fs::read(dir.path().join(format!("{out}.json"))).unwrap()
    };
    let a = run("a");
    let b = run("b");
    assert_eq!(a, b, "validate reports differ between identically seeded runs");
    println!("criterion 12 PASS: bit-identical validate reports ({} bytes)", a.len());
}
