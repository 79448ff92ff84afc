//! Emergence coefficients μ₁, μ₂ and the ε-sweep validation fit.
//!
//! Past a critical length ℓ*, branch n carries an eigenvalue
//! Λₙ(ℓ* + ε) = E₁ − μₙ(ε)² with μₙ(ε) = μ₁ε + μ₂ε² + O(ε³). The two
//! leading coefficients are computed from the generalized threshold mode φ:
//!
//! * μ₁ = (1/ℓ*)·∫_Π |∂φ/∂x₁|² — a Dirichlet energy of the threshold mode,
//!   with the equivalent corner identity μ₁ = πα₁²/4 as a cross-check.
//! * μ₂ comes from the first-order corrector ψ₁, the solution of
//!   −(Δ + E₁)ψ₁ = L₁φ with L₁ = −2ξ₁′∂₁² − ξ₁″∂₁, where ξ₁ is an odd C³
//!   cutoff with plateaus ±1 around ±ℓ*. The mode-1 channels at the matching
//!   cross-sections carry the inhomogeneous flux ∓μ₁·(mode-1 trace of φ);
//!   all decaying channels close transparently.
//!
//! The ε-sweep solves the nonlinear transparent eigenvalue problem exactly
//! per ε via inertia bisection on μ (the count of eigenvalues below Ê₁ − μ²
//! for the closure at offset μ is monotone in μ), then fits μ(ε) by weighted
//! least squares and compares the fitted coefficients with the formulas.
//!
//! # Example
//!
//! ```
//! use twistrip::perturbation::{mu1_from_alpha, CutoffSpec};
//!
//! let cutoff = CutoffSpec::new(0.26)?;
//! // odd profile: zero at the origin, plateau 1 around t = ell_star
//! assert_eq!(cutoff.xi(0.0), 0.0);
//! assert!((cutoff.xi(0.26) - 1.0).abs() < 1e-12);
//! assert_eq!(cutoff.xi(cutoff.support_radius() + 0.1), 0.0);
//! // the corner identity mu1 = pi * alpha1^2 / 4
//! assert!((mu1_from_alpha(2.0) - std::f64::consts::PI).abs() < 1e-12);
//! # Ok::<(), twistrip::Error>(())
//! ```

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::criticality::{
    count_below, default_n_modes, lattice_zero, search_cap, threshold_indicator, CritGrid,
    ThresholdMode,
};
use crate::discretize::{
    assemble, build_grid, discrete_threshold, transverse_modes, EndCondition, Grid, GridSpec,
};
use crate::error::{Error, Result};
use crate::linalg::SymBand;
use crate::model::{Side, Variant, WaveguideSpec};

/// Odd C³ cutoff profile ξ₁: plateau +1 for |t − ℓ*| < ℓ*/3, plateau −1
/// mirrored at −ℓ*, vanishing for |t ∓ ℓ*| > 2ℓ*/3, with septic-smoothstep
/// transition bands so that ξ₁‴ is continuous. The band edges may be moved
/// inside the admissible corridor to produce a second, independent profile.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CutoffSpec {
    pub ell_star: f64,
    /// Rising band [t0, t1] and falling band [t2, t3] of the t ≥ 0 half.
    pub t0: f64,
    pub t1: f64,
    pub t2: f64,
    pub t3: f64,
}

/// Septic smoothstep s(u) on [0, 1] with s(0)=0, s(1)=1 and three vanishing
/// derivatives at both ends.
fn smoothstep(u: f64) -> f64 {
    ((((-20.0 * u + 70.0) * u - 84.0) * u + 35.0) * u) * u * u * u
}

fn smoothstep_d1(u: f64) -> f64 {
    let w = u * (1.0 - u);
    140.0 * w * w * w
}

fn smoothstep_d2(u: f64) -> f64 {
    let w = u * (1.0 - u);
    420.0 * w * w * (1.0 - 2.0 * u)
}

fn smoothstep_d3(u: f64) -> f64 {
    840.0 * u * (1.0 - u) * (1.0 - 5.0 * u + 5.0 * u * u)
}

impl CutoffSpec {
    /// Default admissible profile: bands [ℓ*/3, 2ℓ*/3] and [4ℓ*/3, 5ℓ*/3].
    pub fn new(ell_star: f64) -> Result<CutoffSpec> {
        let a = ell_star / 3.0;
        CutoffSpec::with_bands(ell_star, a, 2.0 * a, 4.0 * a, 5.0 * a)
    }

    /// Custom band edges; they must stay inside the admissible corridor
    /// ℓ*/3 ≤ t0 < t1 ≤ 2ℓ*/3 and 4ℓ*/3 ≤ t2 < t3 ≤ 5ℓ*/3 so that the
    /// plateau and support constraints on ξ₁ hold.
    pub fn with_bands(ell_star: f64, t0: f64, t1: f64, t2: f64, t3: f64) -> Result<CutoffSpec> {
        if !(ell_star > 0.0) || !ell_star.is_finite() {
            return Err(Error::config(format!("ell_star must be positive, got {ell_star}")));
        }
        let a = ell_star / 3.0;
        let eps = 1e-12 * ell_star;
        if !(a - eps <= t0 && t0 < t1 && t1 <= 2.0 * a + eps) {
            return Err(Error::config(format!(
                "rising band [{t0}, {t1}] must lie inside [{}, {}]",
                a,
                2.0 * a
            )));
        }
        if !(4.0 * a - eps <= t2 && t2 < t3 && t3 <= 5.0 * a + eps) {
            return Err(Error::config(format!(
                "falling band [{t2}, {t3}] must lie inside [{}, {}]",
                4.0 * a,
                5.0 * a
            )));
        }
        Ok(CutoffSpec { ell_star, t0, t1, t2, t3 })
    }

    /// Value and first three derivatives of the t ≥ 0 half-profile.
    fn half(&self, t: f64, order: usize) -> f64 {
        debug_assert!(t >= 0.0);
        if t <= self.t0 || t >= self.t3 {
            return 0.0;
        }
        if t < self.t1 {
            let w = self.t1 - self.t0;
            let u = (t - self.t0) / w;
            let chain = w.powi(-(order as i32));
            return chain
                * match order {
                    0 => smoothstep(u),
                    1 => smoothstep_d1(u),
                    2 => smoothstep_d2(u),
                    _ => smoothstep_d3(u),
                };
        }
        if t <= self.t2 {
            return if order == 0 { 1.0 } else { 0.0 };
        }
        // falling band: value 1 → 0 as s((t3 − t)/w), each derivative picks
        // a factor −1/w from the inner function
        let w = self.t3 - self.t2;
        let u = (self.t3 - t) / w;
        let chain = (-1.0f64 / w).powi(order as i32);
        chain
            * match order {
                0 => smoothstep(u),
                1 => smoothstep_d1(u),
                2 => smoothstep_d2(u),
                _ => smoothstep_d3(u),
            }
    }

    fn eval(&self, t: f64, order: usize) -> f64 {
        // odd extension: even-order derivatives are odd, odd-order even
        if t >= 0.0 {
            self.half(t, order)
        } else {
            let sign = if order % 2 == 0 { -1.0 } else { 1.0 };
            sign * self.half(-t, order)
        }
    }

    pub fn xi(&self, t: f64) -> f64 {
        self.eval(t, 0)
    }

    pub fn dxi(&self, t: f64) -> f64 {
        self.eval(t, 1)
    }

    pub fn d2xi(&self, t: f64) -> f64 {
        self.eval(t, 2)
    }

    pub fn d3xi(&self, t: f64) -> f64 {
        self.eval(t, 3)
    }

    /// Outer edge of the support, 5ℓ*/3 at most.
    pub fn support_radius(&self) -> f64 {
        self.t3
    }
}

/// The corner identity μ₁ = πα₁²/4.
pub fn mu1_from_alpha(alpha1: f64) -> f64 {
    std::f64::consts::PI * alpha1 * alpha1 / 4.0
}

fn rebuild_grid(mode: &ThresholdMode) -> Result<Grid> {
    let spec = WaveguideSpec::twisted(mode.d, mode.ell)?;
    build_grid(spec, GridSpec::new(mode.grid.l_half, mode.grid.nx, mode.grid.ny))
}

/// Leading emergence coefficient μ₁ = (1/ℓ*)·∫_Π |∂φ/∂x₁|² dx, evaluated
/// by face differences of the threshold mode (midpoint quadrature in x₁,
/// exact cell quadrature in x₂). The integrand decays like the m = 2
/// channel, so the truncation at ±L is certified by checking that the last
/// d-wide slab carries a negligible share of the energy.
pub fn compute_mu1(mode: &ThresholdMode) -> Result<f64> {
    let grid = rebuild_grid(mode)?;
    let (nx, ny) = (mode.grid.nx, mode.grid.ny);
    let (hx, hy) = (grid.hx, grid.hy);
    let mut total = 0.0;
    let mut tail = 0.0;
    for i in 0..nx - 1 {
        let x_face = 0.5 * (grid.x1[i] + grid.x1[i + 1]);
        let mut col = 0.0;
        for j in 0..ny {
            let dphi = (mode.phi[(i + 1) * ny + j] - mode.phi[i * ny + j]) / hx;
            col += dphi * dphi;
        }
        let contrib = col * hx * hy;
        total += contrib;
        if x_face.abs() > mode.grid.l_half - mode.d {
            tail += contrib;
        }
    }
    if total <= 0.0 {
        return Err(Error::numerics("threshold mode carries no longitudinal energy"));
    }
    if tail / total > 0.01 {
        return Err(Error::numerics(format!(
            "longitudinal energy has not decayed at the truncation (tail share {:.2e}); \
             the mode is not a normalized critical mode",
            tail / total
        )));
    }
    Ok(total / mode.ell)
}

/// First-order corrector ψ₁ on the grid of the threshold mode, together
/// with solvability diagnostics.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Corrector {
    /// Node values of ψ₁, same layout as the threshold mode.
    pub psi1: Vec<f64>,
    pub grid: CritGrid,
    /// hx·hy·⟨rhs, φ⟩ — the discrete solvability functional, which vanishes
    /// (up to discretization) exactly when the flux data carries the true μ₁.
    pub solvability_mismatch: f64,
    /// Weak-form estimate hx·hy·⟨L₁φ, φ⟩/2 of μ₁ (diagnostic only).
    pub mu1_weak: f64,
    /// ⟨ψ₁, Pψ₁⟩/⟨ψ₁, ψ₁⟩ under the parity map; matches the parity of φ.
    pub parity_score: f64,
}

/// Assemble the discrete right-hand side L₁φ + flux load for the corrector
/// problem. Returns (rhs, interior part dotted with φ, full dot with φ).
fn corrector_rhs(
    mode: &ThresholdMode,
    grid: &Grid,
    cutoff: &CutoffSpec,
    mu1: f64,
) -> Result<(Vec<f64>, f64, f64)> {
    let (nx, ny) = (mode.grid.nx, mode.grid.ny);
    let (hx, hy) = (grid.hx, grid.hy);
    if cutoff.support_radius() >= mode.grid.l_half - 2.0 * hx {
        return Err(Error::geometry(
            "cutoff support reaches the truncation; enlarge l_half or shrink ell_star",
        ));
    }
    let phi = &mode.phi;
    let mut rhs = vec![0.0; nx * ny];
    for i in 1..nx - 1 {
        let xp = cutoff.dxi(grid.x1[i]);
        let xpp = cutoff.d2xi(grid.x1[i]);
        if xp == 0.0 && xpp == 0.0 {
            continue;
        }
        for j in 0..ny {
            let c = phi[i * ny + j];
            let e = phi[(i + 1) * ny + j];
            let w = phi[(i - 1) * ny + j];
            let d2 = (e - 2.0 * c + w) / (hx * hx);
            let d1 = (e - w) / (2.0 * hx);
            rhs[i * ny + j] = -2.0 * xp * d2 - xpp * d1;
        }
    }
    let mut dot_interior = 0.0;
    for (r, p) in rhs.iter().zip(phi.iter()) {
        dot_interior += r * p;
    }
    // inhomogeneous mode-1 flux at both matching cross-sections: the ghost
    // column loses hx·μ₁·(mode-1 trace of φ) in its mode-1 component
    let n_modes = default_n_modes(ny);
    for &(i_end, side) in &[(nx - 1, Side::Right), (0usize, Side::Left)] {
        let (vs, _) = transverse_modes(ny, mode.d, side, n_modes)?;
        let v1 = &vs[0];
        let mut comp = 0.0;
        for j in 0..ny {
            comp += v1[j] * phi[i_end * ny + j];
        }
        for j in 0..ny {
            rhs[i_end * ny + j] -= mu1 / hx * comp * v1[j];
        }
    }
    let mut dot_full = 0.0;
    for (r, p) in rhs.iter().zip(phi.iter()) {
        dot_full += r * p;
    }
    Ok((rhs, hx * hy * dot_interior, hx * hy * dot_full))
}

/// Solve −(Δ + E₁)ψ₁ = L₁φ with the inhomogeneous mode-1 flux and
/// transparent decaying channels, then fix the kernel direction by the
/// two-ended mode-1 normalization a₁(+L) + ℘·a₁(−L) = 0.
pub fn solve_corrector(mode: &ThresholdMode, mu1: f64, cutoff: &CutoffSpec) -> Result<Corrector> {
    if !(mu1 > 0.0) || !mu1.is_finite() {
        return Err(Error::config(format!("mu1 must be positive, got {mu1}")));
    }
    let grid = rebuild_grid(mode)?;
    let (nx, ny) = (mode.grid.nx, mode.grid.ny);
    let hy = grid.hy;
    let n_modes = default_n_modes(ny);
    let bundle = assemble(&grid, EndCondition::Transparent { mu: 0.0, n_modes })?;
    let e1d = discrete_threshold(ny, mode.d);
    let (rhs, dot_interior, dot_full) = corrector_rhs(mode, &grid, cutoff, mu1)?;
    let mu1_weak = dot_interior / 2.0;
    let solvability_mismatch = dot_full;

    let shifted = bundle.a.shifted(-e1d)?;
    let band = SymBand::from_csr(&shifted);
    let factor = match band.ldlt() {
        Ok(f) => f,
        Err(_) => {
            let band = SymBand::from_csr(&bundle.a.shifted(-(e1d - 1e-12))?);
            band.ldlt()?
        }
    };
    // near-kernel vector of the shifted operator by inverse iteration from
    // φ; the raw solve would otherwise amplify the discrete solvability
    // noise along this direction
    let mut u1 = mode.phi.clone();
    for _ in 0..2 {
        factor.solve(&mut u1);
        let nrm = u1.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !(nrm > 0.0) || !nrm.is_finite() {
            return Err(Error::numerics("kernel inverse iteration degenerated"));
        }
        for x in u1.iter_mut() {
            *x /= nrm;
        }
    }
    let project_out = |v: &mut [f64]| {
        let coef: f64 = v.iter().zip(&u1).map(|(a, b)| a * b).sum();
        for (x, u) in v.iter_mut().zip(&u1) {
            *x -= coef * u;
        }
    };
    let mut psi = rhs;
    project_out(&mut psi);
    factor.solve(&mut psi);
    project_out(&mut psi);

    // normalization: fix the remaining kernel freedom via the two-ended amplitude
    let amp = |v: &[f64], i_end: usize, side: Side| -> Result<f64> {
        let (vs, _) = transverse_modes(ny, mode.d, side, n_modes)?;
        let mut s = 0.0;
        for j in 0..ny {
            s += vs[0][j] * v[i_end * ny + j];
        }
        Ok(s * hy.sqrt())
    };
    let wp = mode.wp as f64;
    let a_plus = amp(&psi, nx - 1, Side::Right)?;
    let a_minus = amp(&psi, 0, Side::Left)?;
    let c = -(a_plus + wp * a_minus) / 2.0;
    for (p, f) in psi.iter_mut().zip(mode.phi.iter()) {
        *p += c * f;
    }

    let perm = grid.parity_perm();
    let mut num = 0.0;
    let mut den = 0.0;
    for (i, &x) in psi.iter().enumerate() {
        num += x * psi[perm[i]];
        den += x * x;
    }
    if den == 0.0 {
        return Err(Error::numerics("corrector vanished identically"));
    }
    Ok(Corrector {
        psi1: psi,
        grid: mode.grid,
        solvability_mismatch,
        mu1_weak,
        parity_score: num / den,
    })
}

/// Second emergence coefficient with its term-by-term breakdown and the
/// cutoff-free variant for comparison.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Mu2Report {
    pub mu2: f64,
    /// −(μ₁²/2)·‖φ‖² over the matching domain.
    pub term_mass: f64,
    /// ½·∫ φ(L₁ψ₁ + L₂φ).
    pub term_operators: f64,
    /// −μ₁²·Σ_{m≥2} a_m²/√(E_m − E₁).
    pub term_modes: f64,
    /// |last mode term| / |partial sum| of the mode series.
    pub mode_tail_ratio: f64,
    pub warning: Option<String>,
    /// Cutoff-free evaluation via the singular corrector
    /// φ̂ = ψ₁ − ξ₁∂₁φ − μ₁ℓ*φ (corner-regularized quadrature).
    pub mu2_variant: f64,
    /// |mu2_variant − mu2| / |mu2|.
    pub variant_discrepancy: f64,
}

/// Evaluate μ₂ = −(μ₁²/2)∫|φ|² + ½∫φ(L₁ψ₁ + L₂φ) − μ₁²Σ_{m≥2} a_m²/√(E_m−E₁)
/// over the matching domain, with L₂ = (ξ₁′² − 2ξ₁″ξ₁)∂₁² − ξ₁‴ξ₁∂₁.
pub fn compute_mu2(
    mode: &ThresholdMode,
    corr: &Corrector,
    mu1: f64,
    cutoff: &CutoffSpec,
) -> Result<Mu2Report> {
    if corr.grid != mode.grid {
        return Err(Error::config("corrector and threshold mode live on different grids"));
    }
    let grid = rebuild_grid(mode)?;
    let (nx, ny) = (mode.grid.nx, mode.grid.ny);
    let (hx, hy) = (grid.hx, grid.hy);
    let phi = &mode.phi;
    let ell = mode.ell;
    let wp = mode.wp as f64;
    let n_modes = default_n_modes(ny);

    // re-anchor the corrector's kernel normalization at the matching
    // sections x₁ = ±2ℓ* (the solver fixes it at the strip ends, which
    // differs by the linear mode-1 ramp picked up past the sections)
    let amp = |v: &[f64], i: usize, side: Side| -> Result<f64> {
        let (vs, _) = transverse_modes(ny, mode.d, side, n_modes)?;
        let mut s = 0.0;
        for j in 0..ny {
            s += vs[0][j] * v[i * ny + j];
        }
        Ok(s * hy.sqrt())
    };
    let section = |target: f64| -> usize {
        (0..nx)
            .min_by(|&a, &b| {
                (grid.x1[a] - target)
                    .abs()
                    .partial_cmp(&(grid.x1[b] - target).abs())
                    .unwrap()
            })
            .unwrap()
    };
    let (i_p, i_m) = (section(2.0 * ell), section(-2.0 * ell));
    let denom = amp(phi, i_p, Side::Right)? + wp * amp(phi, i_m, Side::Left)?;
    if denom.abs() < 1e-8 {
        return Err(Error::numerics("vanishing mode-1 content at the matching sections"));
    }
    let c_norm =
        -(amp(&corr.psi1, i_p, Side::Right)? + wp * amp(&corr.psi1, i_m, Side::Left)?) / denom;
    let psi: Vec<f64> =
        corr.psi1.iter().zip(phi.iter()).map(|(s, f)| s + c_norm * f).collect();
    let psi = &psi;

    // mass term over the matching domain |x₁| < 2ℓ* only
    let mut mass = 0.0;
    for i in 0..nx {
        if grid.x1[i].abs() >= 2.0 * ell {
            continue;
        }
        for j in 0..ny {
            let p = phi[i * ny + j];
            mass += p * p;
        }
    }
    mass *= hx * hy;
    let term_mass = -mu1 * mu1 / 2.0 * mass;

    let mut cross = 0.0;
    for i in 1..nx - 1 {
        let x = grid.x1[i];
        let (x0, x1v, x2v, x3v) = (cutoff.xi(x), cutoff.dxi(x), cutoff.d2xi(x), cutoff.d3xi(x));
        let c20 = x1v * x1v - 2.0 * x2v * x0; // coefficient of ∂₁² in L₂
        let c21 = -x3v * x0; // coefficient of ∂₁ in L₂
        if x1v == 0.0 && x2v == 0.0 && c20 == 0.0 && c21 == 0.0 {
            continue;
        }
        for j in 0..ny {
            let idx = i * ny + j;
            let (pc, pe, pw) = (phi[idx], phi[idx + ny], phi[idx - ny]);
            let (sc, se, sw) = (psi[idx], psi[idx + ny], psi[idx - ny]);
            let p2 = (pe - 2.0 * pc + pw) / (hx * hx);
            let p1 = (pe - pw) / (2.0 * hx);
            let s2 = (se - 2.0 * sc + sw) / (hx * hx);
            let s1 = (se - sw) / (2.0 * hx);
            let l1psi = -2.0 * x1v * s2 - x2v * s1;
            let l2phi = c20 * p2 + c21 * p1;
            cross += pc * (l1psi + l2phi);
        }
    }
    let term_operators = 0.5 * cross * hx * hy;

    // a_m* is the m-th channel amplitude of φ on the first cell column past
    // the window edge x₁ = ℓ*; the series sees the corner trace, so all
    // resolvable channels are kept and the tail is monitored
    let i_edge = (0..nx)
        .find(|&i| grid.x1[i] > ell)
        .ok_or_else(|| Error::geometry("window edge beyond the computational strip"))?;
    let all_modes = ny - 1;
    let (vs_edge, eh_edge) = transverse_modes(ny, mode.d, Side::Right, all_modes)?;
    let mut term_modes = 0.0;
    let mut partial = 0.0;
    let mut last = 0.0;
    for m_idx in 1..all_modes {
        let mut am = 0.0;
        for j in 0..ny {
            am += vs_edge[m_idx][j] * phi[i_edge * ny + j];
        }
        am *= hy.sqrt();
        let gap = eh_edge[m_idx] - eh_edge[0];
        if !(gap > 0.0) {
            return Err(Error::numerics("non-positive channel gap in the mode series"));
        }
        last = am * am / gap.sqrt();
        partial += last;
    }
    let mode_tail_ratio = if partial > 0.0 { last.abs() / partial } else { 0.0 };
    term_modes += -mu1 * mu1 * partial;
    let warning = if mode_tail_ratio > 0.01 {
        Some(format!(
            "mode-series tail ratio {mode_tail_ratio:.2e} exceeds 1%; increase the number of \
             transparent channels"
        ))
    } else {
        None
    };
    let mu2 = term_mass + term_operators + term_modes;

    // cutoff-free variant: φ̂ = ψ₁ − ξ₁∂₁φ − μ₁ℓ*φ, then
    // μ₂ = −(μ₁²/2)(‖φ‖²_{|x₁|<ℓ*} + ‖φ−χ₁‖²_{x₁>ℓ*} + ‖φ−℘χ₁‖²_{x₁<−ℓ*})
    //      + (1/ℓ*)∫ ∂₁φ ∂₁φ̂.
    // φ̂ is r^{−1/2}-singular at the window corner; the two leading singular
    // factors in ∂₁φ·∂₁φ̂ are angularly orthogonal, so excluding a small
    // disc around the corner regularizes the quadrature.
    let mu2_variant = {
        let ell = mode.ell;
        let mut phihat = vec![0.0; nx * ny];
        for i in 0..nx {
            let xi_here = cutoff.xi(grid.x1[i]);
            for j in 0..ny {
                let idx = i * ny + j;
                let dphi = if i == 0 {
                    (phi[idx + ny] - phi[idx]) / hx
                } else if i == nx - 1 {
                    (phi[idx] - phi[idx - ny]) / hx
                } else {
                    (phi[idx + ny] - phi[idx - ny]) / (2.0 * hx)
                };
                phihat[idx] = psi[idx] - xi_here * dphi - mu1 * ell * phi[idx];
            }
        }
        let n_modes = default_n_modes(ny);
        let (vr, _) = transverse_modes(ny, mode.d, Side::Right, n_modes)?;
        let (vl, _) = transverse_modes(ny, mode.d, Side::Left, n_modes)?;
        let chi_r: Vec<f64> = vr[0].iter().map(|v| v / hy.sqrt()).collect();
        let chi_l: Vec<f64> = vl[0].iter().map(|v| v / hy.sqrt()).collect();
        let wp = mode.wp as f64;
        let mut norms = 0.0;
        for i in 0..nx {
            let x = grid.x1[i];
            for j in 0..ny {
                let p = phi[i * ny + j];
                let dev = if x.abs() < ell {
                    p
                } else if x > 0.0 {
                    p - chi_r[j]
                } else {
                    p - wp * chi_l[j]
                };
                norms += dev * dev;
            }
        }
        norms *= hx * hy;
        let r_cut = 3.0 * hx.max(hy);
        let mut dirichlet_cross = 0.0;
        for i in 0..nx - 1 {
            let x_face = 0.5 * (grid.x1[i] + grid.x1[i + 1]);
            for j in 0..ny {
                let idx = i * ny + j;
                let dx = x_face - ell;
                let r2 = dx * dx + grid.x2[j] * grid.x2[j];
                if r2 < r_cut * r_cut {
                    continue;
                }
                let dphi = (phi[idx + ny] - phi[idx]) / hx;
                let dhat = (phihat[idx + ny] - phihat[idx]) / hx;
                dirichlet_cross += dphi * dhat;
            }
        }
        dirichlet_cross *= hx * hy;
        -mu1 * mu1 / 2.0 * norms + dirichlet_cross / ell
    };
    let variant_discrepancy =
        if mu2 != 0.0 { (mu2_variant - mu2).abs() / mu2.abs() } else { f64::INFINITY };

    Ok(Mu2Report {
        mu2,
        term_mass,
        term_operators,
        term_modes,
        mode_tail_ratio,
        warning,
        mu2_variant,
        variant_discrepancy,
    })
}

/// Smallest face-aligned window length at which branch n is bound on this
/// grid. The assembled operator is piecewise constant in ℓ (the boundary
/// tags only change at cell centers), so the grid-level critical length is
/// a lattice point, found here by pure inertia bisection — no iterative
/// eigensolve. This is the right anchor for corrector solves, which need
/// the near-kernel of this specific grid.
pub fn grid_critical_ell(d: f64, n: usize, g: &CritGrid) -> Result<f64> {
    if n == 0 {
        return Err(Error::config("branch index n must be >= 1"));
    }
    let hx = g.hx();
    let cap = search_cap(d, n, g.l_half)?;
    let cap_k = (cap / hx).floor() as usize;
    let bound = |k: usize| -> Result<bool> {
        Ok(count_below(d, k as f64 * hx, 1e-10, Variant::Twisted, g)? >= n)
    };
    let mut k_lo = 1usize;
    if bound(k_lo)? {
        return Err(Error::numerics(
            "branch already bound at the lower search edge; widen the window",
        ));
    }
    let stride = ((0.1 / hx).round() as usize).max(1);
    let mut k_hi = None;
    let mut k = k_lo;
    while k + stride <= cap_k {
        k += stride;
        if bound(k)? {
            k_hi = Some(k);
            break;
        }
        k_lo = k;
    }
    let mut k_hi = k_hi.ok_or_else(|| {
        Error::numerics(format!("branch {n} never binds below ell = {}", cap_k as f64 * hx))
    })?;
    while k_hi - k_lo > 1 {
        let mid = (k_hi + k_lo) / 2;
        if bound(mid)? {
            k_hi = mid;
        } else {
            k_lo = mid;
        }
    }
    Ok(k_hi as f64 * hx)
}

/// μ = √(Ê₁ − λₙ(ℓ)) for the transparent-closed operator, found by
/// bisection: "at least n eigenvalues below Ê₁ − μ²" (counted exactly by
/// inertia with the closure at offset μ) holds iff μ < μₙ.
pub fn mu_at(d: f64, ell: f64, n: usize, g: &CritGrid) -> Result<f64> {
    if n == 0 {
        return Err(Error::config("branch index n must be >= 1"));
    }
    let emerged = |mu: f64| -> Result<bool> {
        Ok(count_below(d, ell, mu * mu, Variant::Twisted, g)? >= n)
    };
    let mut lo = 1e-8;
    if !emerged(lo)? {
        return Err(Error::numerics(format!(
            "branch {n} has not emerged at ell = {ell}; the critical length estimate is off"
        )));
    }
    let e1d = discrete_threshold(g.ny, d);
    let cap = (0.999_999 * e1d).sqrt();
    let mut hi = 0.05_f64.min(cap);
    while emerged(hi)? {
        lo = hi;
        if hi >= cap {
            return Err(Error::numerics("eigenvalue bisection ran past the spectral bottom"));
        }
        hi = (2.0 * hi).min(cap);
    }
    for _ in 0..200 {
        if hi - lo <= 1e-12 * (1.0 + hi) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if emerged(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// ε-sweep of the emergence law Λₙ(ℓ* + ε) = Ê₁ − μ(ε)² with the two-term
/// weighted fit μ(ε) ≈ μ₁ε + μ₂ε².
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EmergenceSeries {
    pub n: usize,
    pub d: f64,
    /// Grid-level critical length that anchors ε = ℓ − ℓ*.
    pub ell_star: f64,
    pub hx: f64,
    pub mu1_fit: f64,
    pub mu2_fit: f64,
    /// Cubic guard coefficient; zero when fewer than four sweep points.
    pub mu3_fit: f64,
    /// Filled by the caller from `compute_mu1` for the cross-check report.
    pub mu1_integral: Option<f64>,
    /// Filled by the caller from `compute_mu2`.
    pub mu2_formula: Option<f64>,
    pub eps_grid: Vec<f64>,
    pub lambda_direct: Vec<f64>,
    pub mu_grid: Vec<f64>,
    pub mu_pred: Vec<f64>,
    /// log–log slope of μ vs ε over the two smallest ε (1 for a linear law).
    pub slope_loglog: f64,
    /// max over the grid of |μ − μ_pred|/μ.
    pub max_rel_residual: f64,
}

impl EmergenceSeries {
    pub const CSV_HEADER: &'static str = "eps,lambda,mu,mu_pred";

    pub fn csv(&self) -> String {
        let mut s = String::from(Self::CSV_HEADER);
        s.push('\n');
        for k in 0..self.eps_grid.len() {
            s.push_str(&format!(
                "{:.16e},{:.16e},{:.16e},{:.16e}\n",
                self.eps_grid[k], self.lambda_direct[k], self.mu_grid[k], self.mu_pred[k]
            ));
        }
        s
    }

    /// Relative disagreement between the fitted and the integral μ₁.
    pub fn mu1_agreement(&self) -> Option<f64> {
        self.mu1_integral.map(|m| (self.mu1_fit - m).abs() / m)
    }

    /// Relative disagreement between the fitted and the formula μ₂.
    pub fn mu2_agreement(&self) -> Option<f64> {
        self.mu2_formula.map(|m| (self.mu2_fit - m).abs() / m.abs())
    }
}

/// Run the ε-sweep on one grid. `eps_fracs` are window extensions as
/// fractions of ℓ* (each ε is snapped to the face-aligned ℓ-lattice);
/// `ell_hint` narrows the search for the grid-level critical length.
pub fn emergence_fit(
    d: f64,
    n: usize,
    g: &CritGrid,
    eps_fracs: &[f64],
    ell_hint: Option<f64>,
    seed: u64,
) -> Result<EmergenceSeries> {
    if eps_fracs.is_empty() {
        return Err(Error::config("need at least one epsilon"));
    }
    if eps_fracs.iter().any(|&f| !(f > 0.0 && f <= 0.25)) {
        return Err(Error::config("epsilon fractions must lie in (0, 0.25]"));
    }
    let hx = g.hx();
    let cap = search_cap(d, n, g.l_half)?;
    let cap_k = (cap / hx).floor() as usize;
    let lo_k = match ell_hint {
        Some(h) => (((h - 0.15) / hx).floor() as isize).max(1) as usize,
        None => 1,
    };
    let (ell_star, _) = lattice_zero(hx, lo_k, cap_k, |k| {
        threshold_indicator(d, k as f64 * hx, n, Variant::Twisted, g, seed)
    })?;

    // snap each target ε to the lattice, strictly past the critical length
    let mut ks: Vec<usize> = Vec::new();
    for &f in eps_fracs {
        let target = ell_star + f * ell_star;
        let mut k = (target / hx).round() as usize;
        if (k as f64) * hx <= ell_star {
            k += 1;
        }
        if k > cap_k {
            return Err(Error::geometry(format!(
                "epsilon fraction {f} pushes the window past the search cap"
            )));
        }
        if !ks.contains(&k) {
            ks.push(k);
        }
    }
    ks.sort_unstable();
    if ks.len() < 2 {
        return Err(Error::config(
            "epsilon grid collapses to fewer than two lattice points; refine the grid",
        ));
    }

    let e1d = discrete_threshold(g.ny, d);
    let results: Result<Vec<(f64, f64)>> = ks
        .par_iter()
        .map(|&k| {
            let ell = k as f64 * hx;
            let mu = mu_at(d, ell, n, g)?;
            Ok((ell - ell_star, mu))
        })
        .collect();
    let results = results?;
    let eps_grid: Vec<f64> = results.iter().map(|r| r.0).collect();
    let mu_grid: Vec<f64> = results.iter().map(|r| r.1).collect();
    let lambda_direct: Vec<f64> = mu_grid.iter().map(|m| e1d - m * m).collect();

    // weighted least squares μ = μ₁ε + μ₂ε² (+ μ₃ε³ when the grid affords
    // it; without the cubic guard the ε³ remainder biases μ₂), weights ε⁻²
    let cubic = eps_grid.len() >= 4;
    let np = if cubic { 3 } else { 2 };
    let mut ata = [[0.0f64; 3]; 3];
    let mut atb = [0.0f64; 3];
    for (&e, &m) in eps_grid.iter().zip(&mu_grid) {
        let w = 1.0 / (e * e);
        let row = [e, e * e, e * e * e];
        for p in 0..np {
            for q in 0..np {
                ata[p][q] += w * row[p] * row[q];
            }
            atb[p] += w * row[p] * m;
        }
    }
    // Gaussian elimination with partial pivoting on the tiny normal system
    let mut coef = [0.0f64; 3];
    {
        let mut a = ata;
        let mut b = atb;
        for c in 0..np {
            let piv = (c..np).max_by(|&x, &y| a[x][c].abs().partial_cmp(&a[y][c].abs()).unwrap()).unwrap();
            a.swap(c, piv);
            b.swap(c, piv);
            if a[c][c].abs() < 1e-30 {
                return Err(Error::numerics("epsilon grid is degenerate for the series fit"));
            }
            for r in c + 1..np {
                let f = a[r][c] / a[c][c];
                for k in c..np {
                    a[r][k] -= f * a[c][k];
                }
                b[r] -= f * b[c];
            }
        }
        for c in (0..np).rev() {
            let mut s = b[c];
            for k in c + 1..np {
                s -= a[c][k] * coef[k];
            }
            coef[c] = s / a[c][c];
        }
    }
    let (mu1_fit, mu2_fit, mu3_fit) = (coef[0], coef[1], coef[2]);

    let mu_pred: Vec<f64> = eps_grid
        .iter()
        .map(|&e| mu1_fit * e + mu2_fit * e * e + mu3_fit * e * e * e)
        .collect();
    let max_rel_residual = mu_grid
        .iter()
        .zip(&mu_pred)
        .map(|(&m, &p)| (m - p).abs() / m.max(1e-300))
        .fold(0.0_f64, f64::max);
    let slope_loglog = if eps_grid.len() >= 2 {
        (mu_grid[1] / mu_grid[0]).ln() / (eps_grid[1] / eps_grid[0]).ln()
    } else {
        f64::NAN
    };

    Ok(EmergenceSeries {
        n,
        d,
        ell_star,
        hx,
        mu1_fit,
        mu2_fit,
        mu3_fit,
        mu1_integral: None,
        mu2_formula: None,
        eps_grid,
        lambda_direct,
        mu_grid,
        mu_pred,
        slope_loglog,
        max_rel_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criticality::{critical_length_indicator, threshold_mode};
    use crate::discretize::EndCondition;
    use crate::eigensolve::{smallest_eigs, EigenRequest};
    use approx::assert_relative_eq;

    #[test]
    fn cutoff_shape() {
        let c = CutoffSpec::new(0.3).unwrap();
        let a = 0.1;
        assert_eq!(c.xi(0.0), 0.0);
        assert_eq!(c.xi(0.5 * a), 0.0);
        assert_eq!(c.xi(3.0 * a), 1.0);
        assert_eq!(c.xi(2.5 * a), 1.0);
        assert_eq!(c.xi(5.5 * a), 0.0);
        // odd
        for t in [0.07, 0.13, 0.22, 0.31, 0.44] {
            assert_relative_eq!(c.xi(-t), -c.xi(t), epsilon = 1e-15);
            assert_relative_eq!(c.dxi(-t), c.dxi(t), epsilon = 1e-15);
            assert_relative_eq!(c.d2xi(-t), -c.d2xi(t), epsilon = 1e-15);
            assert_relative_eq!(c.d3xi(-t), c.d3xi(t), epsilon = 1e-15);
        }
        // continuity of the third derivative at band edges (the jump shrinks
        // with eps at the fourth-derivative scale ~ 1/w⁴ with w = ℓ*/9... a)
        let eps = 1e-10;
        for edge in [a, 2.0 * a, 4.0 * a, 5.0 * a] {
            let scale = 1e4 / (a * a * a * a);
            assert!((c.d3xi(edge - eps) - c.d3xi(edge + eps)).abs() < eps * scale + 1e-6);
        }
    }

    #[test]
    fn cutoff_derivatives_match_finite_differences() {
        let c = CutoffSpec::new(0.26).unwrap();
        let h = 1e-5;
        for &t in &[0.12, 0.14, 0.16, 0.37, 0.40, 0.42, -0.13, -0.39] {
            let d1 = (c.xi(t + h) - c.xi(t - h)) / (2.0 * h);
            let d2 = (c.dxi(t + h) - c.dxi(t - h)) / (2.0 * h);
            let d3 = (c.d2xi(t + h) - c.d2xi(t - h)) / (2.0 * h);
            assert_relative_eq!(d1, c.dxi(t), epsilon = 1e-4 * (1.0 + c.dxi(t).abs()));
            assert_relative_eq!(d2, c.d2xi(t), epsilon = 1e-3 * (1.0 + c.d2xi(t).abs()));
            assert_relative_eq!(d3, c.d3xi(t), epsilon = 1e-2 * (1.0 + c.d3xi(t).abs()));
        }
    }

    #[test]
    fn cutoff_band_validation() {
        assert!(CutoffSpec::new(-1.0).is_err());
        assert!(CutoffSpec::with_bands(0.3, 0.05, 0.2, 0.4, 0.5).is_err()); // t0 below corridor
        assert!(CutoffSpec::with_bands(0.3, 0.11, 0.19, 0.41, 0.49).is_ok());
    }

    /// Moderate fixture exercising the iterative critical-length detector.
    fn fixture() -> (CritGrid, ThresholdMode) {
        let g = CritGrid::with_spacing(3.5, 1.0 / 48.0, 24);
        let lc = critical_length_indicator(1.0, 1, Variant::Twisted, &[g], 42).unwrap();
        let tm = threshold_mode(1.0, lc.per_level[0], 1, &g).unwrap();
        (g, tm)
    }

    /// Corrector-grade fixture: fine x-resolution (the cutoff bands span
    /// only ~ℓ*/4 and need many cells), modest transverse resolution, with
    /// the critical length located by pure inertia on the same lattice.
    fn fine_fixture() -> (CritGrid, ThresholdMode) {
        let g = CritGrid::with_spacing(3.5, 1.0 / 512.0, 12);
        let ell = grid_critical_ell(1.0, 1, &g).unwrap();
        let tm = threshold_mode(1.0, ell, 1, &g).unwrap();
        (g, tm)
    }

    #[test]
    fn mu1_positive_and_near_corner_identity() {
        let (_, tm) = fixture();
        let mu1 = compute_mu1(&tm).unwrap();
        assert!(mu1 > 0.0);
        // around 3.5 for d = 1; coarse-grid corner error is first order
        assert!(mu1 > 2.0 && mu1 < 5.0, "mu1 {mu1}");
        let mu1_alpha = mu1_from_alpha(tm.alpha1);
        assert_relative_eq!(mu1, mu1_alpha, max_relative = 0.25);
    }

    #[test]
    fn corrector_parity_and_solvability() {
        let (_, tm) = fine_fixture();
        let mu1 = compute_mu1(&tm).unwrap();
        let cutoff = CutoffSpec::new(tm.ell).unwrap();
        let corr = solve_corrector(&tm, mu1, &cutoff).unwrap();
        // ψ₁ inherits the parity of φ (here even)
        assert!(corr.parity_score > 0.9, "parity {}", corr.parity_score);
        // solvability selects μ₁: the mismatch grows when the flux carries
        // a wrong coefficient (scale of the functional is 2μ₁ ≈ 7)
        let wrong = solve_corrector(&tm, 1.3 * mu1, &cutoff).unwrap();
        assert!(
            corr.solvability_mismatch.abs() < 0.5 * wrong.solvability_mismatch.abs(),
            "right {} wrong {}",
            corr.solvability_mismatch,
            wrong.solvability_mismatch
        );
        // the weak form reproduces μ₁ loosely on a coarse grid
        assert_relative_eq!(corr.mu1_weak, mu1, max_relative = 0.25);
    }

    #[test]
    fn corrector_cutoff_independence() {
        let (_, tm) = fine_fixture();
        let mu1 = compute_mu1(&tm).unwrap();
        let a = tm.ell / 3.0;
        let c1 = CutoffSpec::new(tm.ell).unwrap();
        let c2 = CutoffSpec::with_bands(tm.ell, 1.15 * a, 1.9 * a, 4.1 * a, 4.9 * a).unwrap();
        let s1 = solve_corrector(&tm, mu1, &c1).unwrap();
        let s2 = solve_corrector(&tm, mu1, &c2).unwrap();
        // ψ̃₁ − ψ₁ = (ξ̃₁ − ξ₁)·∂₁φ up to discretization error
        let grid = rebuild_grid(&tm).unwrap();
        let (nx, ny) = (tm.grid.nx, tm.grid.ny);
        let hx = grid.hx;
        let mut err2 = 0.0;
        let mut ref2 = 0.0;
        for i in 1..nx - 1 {
            let dxi = c2.xi(grid.x1[i]) - c1.xi(grid.x1[i]);
            for j in 0..ny {
                let idx = i * ny + j;
                let dphi = (tm.phi[idx + ny] - tm.phi[idx - ny]) / (2.0 * hx);
                let predicted = dxi * dphi;
                let actual = s2.psi1[idx] - s1.psi1[idx];
                err2 += (actual - predicted) * (actual - predicted);
                ref2 += actual * actual;
            }
        }
        assert!(ref2 > 0.0);
        assert!(
            (err2 / ref2).sqrt() < 0.15,
            "cutoff-change identity violated: rel err {}",
            (err2 / ref2).sqrt()
        );
    }

    #[test]
    fn mu2_structure() {
        let (_, tm) = fine_fixture();
        let mu1 = compute_mu1(&tm).unwrap();
        let cutoff = CutoffSpec::new(tm.ell).unwrap();
        let corr = solve_corrector(&tm, mu1, &cutoff).unwrap();
        let rep = compute_mu2(&tm, &corr, mu1, &cutoff).unwrap();
        assert!(rep.mu2.is_finite());
        assert!(rep.term_mass < 0.0);
        assert!(rep.term_modes <= 0.0);
        assert!(rep.mode_tail_ratio < 0.01, "tail {}", rep.mode_tail_ratio);
        assert!(rep.warning.is_none());
        assert!(rep.mu2_variant.is_finite());
    }

    #[test]
    fn mu_at_matches_direct_eigenvalues() {
        let g = CritGrid::with_spacing(3.5, 1.0 / 32.0, 16);
        let mu = mu_at(1.0, 1.0, 1, &g).unwrap();
        assert!(mu > 0.0);
        // monotone in the window length
        let mu_smaller = mu_at(1.0, 0.6, 1, &g).unwrap();
        assert!(mu_smaller < mu);
        // λ = Ê₁ − μ² is pinched between the Neumann and Dirichlet end solves
        let e1d = discrete_threshold(g.ny, 1.0);
        let lambda = e1d - mu * mu;
        let spec = WaveguideSpec::twisted(1.0, 1.0).unwrap();
        let grid = build_grid(spec, GridSpec::new(g.l_half, g.nx, g.ny)).unwrap();
        let mut req = EigenRequest::new(1, 0.0);
        req.force_iterative = true;
        let lam_n = smallest_eigs(&assemble(&grid, EndCondition::Neumann).unwrap().a, &req)
            .unwrap()
            .values[0];
        let lam_d = smallest_eigs(&assemble(&grid, EndCondition::Dirichlet).unwrap().a, &req)
            .unwrap()
            .values[0];
        assert!(lam_n - 1e-10 <= lambda && lambda <= lam_d + 1e-10, "{lam_n} {lambda} {lam_d}");
        // not emerged below the critical length
        assert!(mu_at(1.0, 0.125, 1, &g).is_err());
    }

    #[test]
    fn emergence_fit_recovers_linear_law() {
        let g = CritGrid::with_spacing(3.5, 1.0 / 64.0, 16);
        let series =
            emergence_fit(1.0, 1, &g, &[0.04, 0.08, 0.16, 0.24], Some(0.26), 42).unwrap();
        assert!(series.ell_star > 0.2 && series.ell_star < 0.32, "{}", series.ell_star);
        // μ increases with ε and the law is linear at leading order
        for w in series.mu_grid.windows(2) {
            assert!(w[1] > w[0]);
        }
        assert!(
            series.slope_loglog > 0.8 && series.slope_loglog < 1.2,
            "slope {}",
            series.slope_loglog
        );
        assert!(series.mu1_fit > 2.0 && series.mu1_fit < 5.0, "mu1_fit {}", series.mu1_fit);
        assert!(series.max_rel_residual < 0.2, "residual {}", series.max_rel_residual);
        // all eigenvalues sit below the threshold
        let e1d = discrete_threshold(g.ny, 1.0);
        for &l in &series.lambda_direct {
            assert!(l < e1d);
        }
        // CSV round-trip shape
        let csv = series.csv();
        assert!(csv.starts_with(EmergenceSeries::CSV_HEADER));
        assert_eq!(csv.lines().count(), 1 + series.eps_grid.len());
    }

    #[test]
    fn bad_inputs_rejected() {
        let g = CritGrid::with_spacing(3.5, 1.0 / 32.0, 16);
        assert!(mu_at(1.0, 1.0, 0, &g).is_err());
        assert!(emergence_fit(1.0, 1, &g, &[], None, 42).is_err());
        assert!(emergence_fit(1.0, 1, &g, &[0.5], None, 42).is_err());
    }
}
