//! Physics-level spectral queries: the discrete spectrum below the
//! threshold E₁ with truncation bracketing, parity classification,
//! auxiliary-operator comparisons, and sweeps over the window length.
//!
//! Every reported eigenvalue comes as a bracket: the same grid is solved
//! once with Neumann artificial ends (lower bound: the truncated Neumann
//! operator is form-smaller) and once with Dirichlet ends (upper bound),
//! and the midpoints are Richardson-extrapolated over a family of grid
//! refinements.
//!
//! # Example
//!
//! ```
//! use twistrip::spectrum::{validate_bracketing, Numerics};
//!
//! let num = Numerics { ny: 8, ..Numerics::default() };
//! let report = validate_bracketing(1.0, 1.0, &num)?;
//! // every twisted eigenvalue sits between its auxiliary neighbours
//! assert!(report.checks.iter().all(|c| c.ok));
//! assert!(report.aux_analytic_ok && report.count_sandwich_ok);
//! # Ok::<(), twistrip::Error>(())
//! ```

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::discretize::{assemble, build_grid, discrete_threshold, EndCondition, GridSpec};
use crate::eigensolve::{count_in_interval, eigs_in_interval, EigenRequest};
use crate::error::{Error, Result};
use crate::model::{Variant, WaveguideSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
    Undetermined,
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
            Parity::Undetermined => write!(f, "undetermined"),
        }
    }
}

/// One discrete eigenvalue with its truncation bracket.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketedEigenvalue {
    /// 1-based index below the threshold.
    pub m: usize,
    /// Neumann-end value on the finest grid (lower bound side).
    pub lower: f64,
    /// Dirichlet-end value on the finest grid (upper bound side).
    pub upper: f64,
    /// Richardson extrapolation of the bracket midpoints over the grid family.
    pub extrapolated: f64,
    pub parity: Parity,
    /// min(‖v − Pv‖, ‖v + Pv‖)/‖v‖ of the classified eigenvector.
    pub parity_score: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct GridLevel {
    pub nx: usize,
    pub ny: usize,
    pub hx: f64,
    pub hy: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub spec: WaveguideSpec,
    pub l_half: f64,
    pub levels: Vec<GridLevel>,
    /// Continuum threshold E₁ = π²/(4d²).
    pub e1: f64,
    /// Discrete threshold of the finest grid (counting reference).
    pub e1_disc: f64,
    /// Counting margin below the threshold; eigenvalues inside
    /// [Ê₁ − margin, Ê₁) are excluded from `count` and tallied separately.
    pub margin: f64,
    pub eigenvalues: Vec<BracketedEigenvalue>,
    /// Certified count strictly below Ê₁ − margin (finest grid, both ends).
    pub count: usize,
    /// Number of uncertified values in the margin band.
    pub near_threshold: usize,
}

/// Discretization parameters shared by the physics-level drivers.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Numerics {
    /// Truncation half-length; `None` picks ℓ + 3d.
    pub l_half: Option<f64>,
    /// Transverse cell count of the coarsest level.
    pub ny: usize,
    /// Number of grid levels (each doubles nx and ny); ≥ 2 for extrapolation.
    pub levels: usize,
    /// Eigensolver residual tolerance.
    pub tol: f64,
    pub seed: u64,
    /// Counting margin as a fraction of E₁.
    pub margin_frac: f64,
}

impl Default for Numerics {
    fn default() -> Self {
        Numerics { l_half: None, ny: 12, levels: 2, tol: 1e-8, seed: 42, margin_frac: 1e-3 }
    }
}

impl Numerics {
    pub fn resolve_l(&self, spec: &WaveguideSpec) -> f64 {
        self.l_half.unwrap_or(spec.ell + 3.0 * spec.d)
    }

    /// nx matching hx ≈ hy at the given level, forced even.
    pub fn nx_for(&self, spec: &WaveguideSpec, level: usize) -> usize {
        let ny = self.ny << level;
        let l = self.resolve_l(spec);
        let raw = (2.0 * l / spec.d * ny as f64).round() as usize;
        (raw + raw % 2).max(4)
    }

    pub fn ny_for(&self, level: usize) -> usize {
        self.ny << level
    }
}

/// Parity classification of a node vector against an index permutation.
/// Scores are ‖v ∓ Pv‖/‖v‖; a class is assigned when one score is < 1e−6.
pub fn classify_parity(perm: &[usize], v: &[f64]) -> (Parity, f64) {
    let mut even_dev = 0.0f64;
    let mut odd_dev = 0.0f64;
    let mut nrm = 0.0f64;
    for (i, &x) in v.iter().enumerate() {
        let px = v[perm[i]];
        even_dev += (x - px) * (x - px);
        odd_dev += (x + px) * (x + px);
        nrm += x * x;
    }
    let even_score = (even_dev / nrm).sqrt();
    let odd_score = (odd_dev / nrm).sqrt();
    let best = even_score.min(odd_score);
    let class = if best >= 1e-6 {
        Parity::Undetermined
    } else if even_score < odd_score {
        Parity::Even
    } else {
        Parity::Odd
    };
    (class, best)
}

/// x₁-reflection permutation (i, j) ↦ (nx−1−i, j) for the auxiliary layout.
pub fn reflection_perm(nx: usize, ny: usize) -> Vec<usize> {
    let mut p = vec![0usize; nx * ny];
    for i in 0..nx {
        for j in 0..ny {
            p[i * ny + j] = (nx - 1 - i) * ny + j;
        }
    }
    p
}

struct LevelSolve {
    lower: Vec<f64>,
    upper: Vec<f64>,
    vectors: Vec<Vec<f64>>, // Neumann-end eigenvectors
    near_threshold: usize,
    e1_disc: f64,
    grid: GridLevel,
    nx: usize,
    ny: usize,
}

fn solve_level(spec: &WaveguideSpec, num: &Numerics, level: usize) -> Result<LevelSolve> {
    let l = num.resolve_l(spec);
    let (nx, ny) = (num.nx_for(spec, level), num.ny_for(level));
    let grid = build_grid(*spec, GridSpec::new(l, nx, ny))?;
    let e1d = discrete_threshold(ny, spec.d);
    let margin = num.margin_frac * spec.threshold();
    let hi = e1d - margin;
    let mut req = EigenRequest::new(1, 0.0);
    req.tol = num.tol;
    req.seed = num.seed;
    req.max_iter = 400;
    req.force_iterative = true; // banded operators: Lanczos beats the dense path

    let bn = assemble(&grid, EndCondition::Neumann)?;
    let bd = assemble(&grid, EndCondition::Dirichlet)?;
    let rn = eigs_in_interval(&bn.a, 0.0, hi, &req)?;
    let rd = eigs_in_interval(&bd.a, 0.0, hi, &req)?;
    let near = count_in_interval(&bn.a, hi, e1d)?;
    Ok(LevelSolve {
        lower: rn.values,
        upper: rd.values,
        vectors: rn.vectors,
        near_threshold: near,
        e1_disc: e1d,
        grid: GridLevel { nx, ny, hx: grid.hx, hy: grid.hy },
        nx,
        ny,
    })
}

/// Richardson-extrapolate a sequence of per-level values (coarse → fine).
/// With ≥ 3 levels the convergence order is estimated from the data;
/// with 2 levels first order is assumed (the boundary-transition corner
/// limits the scheme to roughly O(h) for these eigenfunctions).
fn richardson(vals: &[f64]) -> f64 {
    match vals.len() {
        0 => f64::NAN,
        1 => vals[0],
        2 => {
            let p = 1.0f64;
            vals[1] + (vals[1] - vals[0]) / (2f64.powf(p) - 1.0)
        }
        _ => {
            let n = vals.len();
            let (v0, v1, v2) = (vals[n - 3], vals[n - 2], vals[n - 1]);
            let num = (v1 - v0) / (v2 - v1);
            let p = if num.is_finite() && num > 1.01 { num.log2().clamp(0.5, 2.0) } else { 1.0 };
            v2 + (v2 - v1) / (2f64.powf(p) - 1.0)
        }
    }
}

/// All eigenvalues below the threshold for one geometry, bracketed and
/// extrapolated over the grid family.
pub fn discrete_spectrum(spec: &WaveguideSpec, num: &Numerics) -> Result<SpectrumReport> {
    if num.levels < 1 {
        return Err(Error::config("need at least one grid level"));
    }
    let l = num.resolve_l(spec);
    if l < spec.ell + 3.0 * spec.d {
        return Err(Error::geometry(format!(
            "truncation half-length {l} is below the required ell + 3d = {}",
            spec.ell + 3.0 * spec.d
        )));
    }
    let solves: Vec<LevelSolve> =
        (0..num.levels).map(|lv| solve_level(spec, num, lv)).collect::<Result<_>>()?;
    let fine = solves.last().unwrap();
    let count = fine.lower.len().min(fine.upper.len());

    let perm = match spec.variant {
        Variant::Twisted => {
            let g = build_grid(*spec, GridSpec::new(l, fine.nx, fine.ny))?;
            g.parity_perm()
        }
        Variant::Auxiliary => reflection_perm(fine.nx, fine.ny),
    };

    let mut eigenvalues = Vec::with_capacity(count);
    for m in 0..count {
        let mids: Vec<f64> = solves
            .iter()
            .filter(|s| s.lower.len() > m && s.upper.len() > m)
            .map(|s| 0.5 * (s.lower[m] + s.upper[m]))
            .collect();
        let (parity, score) = classify_parity(&perm, &fine.vectors[m]);
        eigenvalues.push(BracketedEigenvalue {
            m: m + 1,
            lower: fine.lower[m],
            upper: fine.upper[m],
            extrapolated: richardson(&mids),
            parity,
            parity_score: score,
        });
    }
    // the Neumann-end side may see extra states the Dirichlet side pushes
    // above the margin; those are near-threshold, not certified
    let extra = fine.lower.len().abs_diff(fine.upper.len());

    Ok(SpectrumReport {
        spec: *spec,
        l_half: l,
        levels: solves.iter().map(|s| s.grid).collect(),
        e1: spec.threshold(),
        e1_disc: fine.e1_disc,
        margin: num.margin_frac * spec.threshold(),
        eigenvalues,
        count,
        near_threshold: fine.near_threshold + extra,
    })
}

/// One two-sided comparison Λ*₂ₘ₋₁(2ℓ) ≤ Λ_m(ℓ) ≤ Λ*₂ₘ(2ℓ).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketCheck {
    pub m: usize,
    pub lower_bound: f64,
    pub value: f64,
    pub upper_bound: Option<f64>,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketingReport {
    pub twisted: SpectrumReport,
    pub auxiliary: SpectrumReport,
    pub checks: Vec<BracketCheck>,
    /// Analytic two-sided bounds π²(m−1)²/(4a²) < Λ*_m(a) < π²m²/(4a²)
    /// on the auxiliary eigenvalues, a = 2ℓ.
    pub aux_analytic_ok: bool,
    /// ⌊N*(2ℓ)/2⌋ ≤ N(ℓ) ≤ ⌊N*(2ℓ)/2⌋ + 1 on certified counts.
    pub count_sandwich_ok: bool,
    pub all_ok: bool,
}

/// Checks the interlacing of the twisted spectrum at ℓ with the auxiliary
/// spectrum at 2ℓ, the analytic auxiliary bounds, and the count sandwich.
pub fn validate_bracketing(d: f64, ell: f64, num: &Numerics) -> Result<BracketingReport> {
    let tw_spec = WaveguideSpec::twisted(d, ell)?;
    let aux_spec = WaveguideSpec::auxiliary(d, 2.0 * ell)?;
    let mut aux_num = *num;
    // comparable resolution on the longer auxiliary domain
    aux_num.l_half = Some(num.resolve_l(&aux_spec).max(num.resolve_l(&tw_spec) + ell));
    let twisted = discrete_spectrum(&tw_spec, num)?;
    let auxiliary = discrete_spectrum(&aux_spec, &aux_num)?;

    // numerical slack: bracket widths plus extrapolation uncertainty
    let slack = |bev: &BracketedEigenvalue| (bev.upper - bev.lower).abs().max(1e-8);

    let mut checks = Vec::new();
    let mut all_ok = true;
    for bev in &twisted.eigenvalues {
        let m = bev.m;
        let lo_idx = 2 * m - 2; // Λ*_{2m-1}, 0-based
        let hi_idx = 2 * m - 1; // Λ*_{2m}
        let lower_bound = auxiliary
            .eigenvalues
            .get(lo_idx)
            .map(|a| a.extrapolated)
            .unwrap_or(f64::NEG_INFINITY);
        // Λ*_{2m} may sit in the essential band; then the upper bound is E₁
        let upper_bound = auxiliary.eigenvalues.get(hi_idx).map(|a| a.extrapolated);
        let tol = slack(bev)
            + auxiliary.eigenvalues.get(lo_idx).map(slack).unwrap_or(0.0)
            + auxiliary.eigenvalues.get(hi_idx).map(slack).unwrap_or(0.0);
        let ok_lo = lower_bound <= bev.extrapolated + tol;
        let ok_hi = upper_bound.map_or(bev.extrapolated < twisted.e1, |ub| bev.extrapolated <= ub + tol);
        let ok = ok_lo && ok_hi;
        all_ok &= ok;
        checks.push(BracketCheck { m, lower_bound, value: bev.extrapolated, upper_bound, ok });
    }

    let a = 2.0 * ell;
    let mut aux_analytic_ok = true;
    if a > 0.0 {
        for bev in &auxiliary.eigenvalues {
            let m = bev.m as f64;
            let lo = std::f64::consts::PI.powi(2) * (m - 1.0) * (m - 1.0) / (4.0 * a * a);
            let hi = std::f64::consts::PI.powi(2) * m * m / (4.0 * a * a);
            let tol = slack(bev);
            aux_analytic_ok &= bev.extrapolated >= lo - tol && bev.extrapolated <= hi + tol;
        }
    }

    let n_star = auxiliary.count;
    let n = twisted.count;
    let count_sandwich_ok = n_star / 2 <= n && n <= n_star / 2 + 1;

    let all_ok = all_ok && aux_analytic_ok && count_sandwich_ok;
    Ok(BracketingReport { twisted, auxiliary, checks, aux_analytic_ok, count_sandwich_ok, all_ok })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepReport {
    pub reports: Vec<SpectrumReport>,
    /// Λ_m non-increasing in ℓ within tolerance, for every common m.
    pub values_monotone: bool,
    /// Certified count non-decreasing in ℓ.
    pub counts_monotone: bool,
}

/// Spectra along an ascending list of window half-lengths; entries are
/// solved concurrently and merged in input order.
pub fn sweep(d: f64, variant: Variant, ells: &[f64], num: &Numerics) -> Result<SweepReport> {
    if ells.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::config("sweep lengths must be strictly ascending"));
    }
    let reports: Vec<SpectrumReport> = ells
        .par_iter()
        .map(|&ell| {
            let spec = WaveguideSpec::new(d, ell, variant)?;
            discrete_spectrum(&spec, num)
        })
        .collect::<Result<_>>()?;

    let mut values_monotone = true;
    let mut counts_monotone = true;
    for w in reports.windows(2) {
        counts_monotone &= w[0].count <= w[1].count;
        for (a, b) in w[0].eigenvalues.iter().zip(&w[1].eigenvalues) {
            let tol = (a.upper - a.lower).abs() + (b.upper - b.lower).abs() + 1e-8;
            values_monotone &= b.extrapolated <= a.extrapolated + tol;
        }
    }
    Ok(SweepReport { reports, values_monotone, counts_monotone })
}

pub const CSV_HEADER: &str = "ell,m,lower,upper,extrapolated,parity,E1,L,nx,ny";

impl SpectrumReport {
    /// CSV rows matching [`CSV_HEADER`], 17 significant digits.
    pub fn csv_rows(&self) -> String {
        let mut s = String::new();
        let fine = self.levels.last().unwrap();
        for bev in &self.eigenvalues {
            s.push_str(&format!(
                "{:.16e},{},{:.16e},{:.16e},{:.16e},{},{:.16e},{:.16e},{},{}\n",
                self.spec.ell,
                bev.m,
                bev.lower,
                bev.upper,
                bev.extrapolated,
                bev.parity,
                self.e1,
                self.l_half,
                fine.nx,
                fine.ny
            ));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn fast_num() -> Numerics {
        Numerics { ny: 8, levels: 2, tol: 1e-7, ..Default::default() }
    }

    #[test]
    fn short_window_has_empty_spectrum() {
        let spec = WaveguideSpec::twisted(1.0, 0.05).unwrap();
        let r = discrete_spectrum(&spec, &fast_num()).unwrap();
        assert_eq!(r.count, 0);
        assert!(r.eigenvalues.is_empty());
    }

    #[test]
    fn twisted_window_two_states_alternating_parity() {
        let spec = WaveguideSpec::twisted(1.0, 1.5).unwrap();
        let r = discrete_spectrum(&spec, &fast_num()).unwrap();
        assert_eq!(r.count, 2, "report: {:?}", r.eigenvalues);
        assert_eq!(r.eigenvalues[0].parity, Parity::Even);
        assert_eq!(r.eigenvalues[1].parity, Parity::Odd);
        for bev in &r.eigenvalues {
            assert!(bev.lower <= bev.upper + 1e-10);
            assert!(bev.upper < r.e1);
            assert!(bev.parity_score < 1e-6);
        }
        // simplicity: well-separated
        assert!(r.eigenvalues[1].extrapolated - r.eigenvalues[0].extrapolated > 1e-5);
    }

    #[test]
    fn auxiliary_count_in_band() {
        // certified count sits in the floor(ell/d) band
        let spec = WaveguideSpec::auxiliary(1.0, 2.5).unwrap();
        let r = discrete_spectrum(&spec, &fast_num()).unwrap();
        assert!(r.count == 2 || r.count == 3, "count {}", r.count);
        // x1-reflection parities alternate starting even
        for (i, bev) in r.eigenvalues.iter().enumerate() {
            let want = if i % 2 == 0 { Parity::Even } else { Parity::Odd };
            assert_eq!(bev.parity, want, "m = {}", bev.m);
        }
    }

    #[test]
    fn truncation_bracket_tightens_with_l() {
        let spec = WaveguideSpec::twisted(1.0, 1.0).unwrap();
        let mut gaps = vec![];
        for l in [4.0, 5.0] {
            let num = Numerics { l_half: Some(l), ny: 8, levels: 1, tol: 1e-8, ..Default::default() };
            let r = discrete_spectrum(&spec, &num).unwrap();
            assert!(r.count >= 1);
            gaps.push(r.eigenvalues[0].upper - r.eigenvalues[0].lower);
        }
        assert!(gaps[1] < gaps[0], "gaps {gaps:?}");
        // decay-rate consistency: gap ~ exp(-2 mu (L - ell))
        let spec_e1 = spec.threshold();
        let num = Numerics { l_half: Some(4.0), ny: 8, levels: 1, tol: 1e-8, ..Default::default() };
        let r = discrete_spectrum(&spec, &num).unwrap();
        let mu = (spec_e1 - r.eigenvalues[0].extrapolated).sqrt();
        let rate = (gaps[0] / gaps[1]).ln(); // over delta L = 1
        assert!((rate - 2.0 * mu).abs() / (2.0 * mu) < 0.5, "rate {rate} vs 2mu {}", 2.0 * mu);
    }

    #[test]
    fn bracketing_theorem_holds() {
        let r = validate_bracketing(1.0, 1.0, &fast_num()).unwrap();
        assert!(r.all_ok, "checks: {:?} aux_ok={} sandwich={}", r.checks, r.aux_analytic_ok, r.count_sandwich_ok);
        assert!(!r.checks.is_empty());
    }

    #[test]
    fn sweep_monotonicity() {
        let num = Numerics { ny: 8, levels: 1, tol: 1e-7, ..Default::default() };
        let r = sweep(1.0, Variant::Twisted, &[1.0, 1.5, 2.0], &num).unwrap();
        assert!(r.values_monotone);
        assert!(r.counts_monotone);
        assert_eq!(r.reports.len(), 3);
        // ground state strictly decreasing here
        let l1: Vec<f64> = r.reports.iter().map(|rep| rep.eigenvalues[0].extrapolated).collect();
        assert!(l1[0] > l1[1] && l1[1] > l1[2], "{l1:?}");
        assert!(sweep(1.0, Variant::Twisted, &[1.5, 1.0], &num).is_err());
    }

    #[test]
    fn parity_classifier() {
        let perm = reflection_perm(6, 4);
        let even: Vec<f64> = (0..24).map(|i| ((i / 4) as f64 - 2.5).abs() + (i % 4) as f64).collect();
        let (p, s) = classify_parity(&perm, &even);
        assert_eq!(p, Parity::Even);
        assert!(s < 1e-12);
        let odd: Vec<f64> = (0..24).map(|i| ((i / 4) as f64 - 2.5) * (1.0 + (i % 4) as f64)).collect();
        let (p, _) = classify_parity(&perm, &odd);
        assert_eq!(p, Parity::Odd);
        let rnd: Vec<f64> = (0..24).map(|i| ((i * 37 % 11) as f64).sin()).collect();
        let (p, _) = classify_parity(&perm, &rnd);
        assert_eq!(p, Parity::Undetermined);
    }

    #[test]
    fn csv_has_17_significant_digits() {
        let spec = WaveguideSpec::twisted(1.0, 1.5).unwrap();
        let r = discrete_spectrum(&spec, &fast_num()).unwrap();
        let rows = r.csv_rows();
        let first = rows.lines().next().unwrap();
        assert_eq!(first.split(',').count(), CSV_HEADER.split(',').count());
        // a 17-significant-digit float has 16 digits after the point
        let lower_field = first.split(',').nth(2).unwrap();
        let mantissa = lower_field.split('e').next().unwrap();
        assert_eq!(mantissa.split('.').nth(1).unwrap().len(), 16);
        // round-trips exactly
        let parsed: f64 = lower_field.parse().unwrap();
        assert_eq!(parsed, r.eigenvalues[0].lower);
    }

    #[test]
    fn richardson_behaviour() {
        // first-order sequence v(h) = 1 + h, levels h = 1, 1/2, 1/4
        let v = [2.0, 1.5, 1.25];
        assert_relative_eq!(super::richardson(&v), 1.0, epsilon = 1e-12);
        // second-order sequence v(h) = 1 + h^2
        let v = [2.0, 1.25, 1.0625];
        assert_relative_eq!(super::richardson(&v), 1.0, epsilon = 1e-12);
        assert_relative_eq!(super::richardson(&[3.0]), 3.0, epsilon = 1e-15);
    }
}
