//! Analytic ingredients of the strip waveguide: geometry, boundary
//! partition, transverse modes, thresholds, and the point symmetry.
//!
//! The strip is Π = {0 < x₂ < d}. Two boundary-condition layouts are
//! supported, both parametrized by the window half-length ℓ:
//!
//! * **Twisted**: Dirichlet on {x₁ > ℓ, x₂ = 0} ∪ {x₁ < −ℓ, x₂ = d},
//!   Neumann on the rest. Point-symmetric under (x₁, x₂) ↦ (−x₁, d − x₂).
//! * **Auxiliary**: Dirichlet on {|x₁| > ℓ, x₂ = 0}, Neumann elsewhere.
//!   Reflection-symmetric in x₁; its spectrum brackets the twisted one.
//!
//! The continuum threshold is E₁ = π²/(4d²); the m-th transverse channel
//! opens at E_m = π²(m − ½)²/d².
//!
//! # Example
//!
//! ```
//! use twistrip::model::{threshold_energy, ParityMap, WaveguideSpec};
//!
//! let spec = WaveguideSpec::twisted(1.0, 1.5)?;
//! // Dirichlet sits on the bottom right of the window and the top left
//! assert!(spec.bottom_dirichlet(2.0) && !spec.bottom_dirichlet(0.0));
//! assert!(spec.top_dirichlet(-2.0) && !spec.top_dirichlet(0.0));
//! // the continuum threshold is the first transverse channel
//! assert_eq!(spec.threshold(), threshold_energy(1, 1.0)?);
//! // the half-turn symmetry is an involution
//! let p = ParityMap { d: 1.0 };
//! assert_eq!(p.apply(p.apply((0.5, 0.25))), (0.5, 0.25));
//! # Ok::<(), twistrip::Error>(())
//! ```

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Which boundary-condition layout the strip carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Variant {
    /// Dirichlet on the bottom right / top left of the window, point-symmetric.
    Twisted,
    /// Dirichlet on the bottom outside the window, top all Neumann.
    Auxiliary,
}

/// Physical geometry of the problem: strip width, window half-length, layout.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct WaveguideSpec {
    /// Strip width d > 0.
    pub d: f64,
    /// Window half-length ℓ ≥ 0.
    pub ell: f64,
    pub variant: Variant,
}

impl WaveguideSpec {
    pub fn new(d: f64, ell: f64, variant: Variant) -> Result<Self> {
        if !(d > 0.0) || !d.is_finite() {
            return Err(Error::domain(format!("strip width d must be > 0, got {d}")));
        }
        if !(ell >= 0.0) || !ell.is_finite() {
            return Err(Error::domain(format!("window half-length ell must be >= 0, got {ell}")));
        }
        Ok(Self { d, ell, variant })
    }

    pub fn twisted(d: f64, ell: f64) -> Result<Self> {
        Self::new(d, ell, Variant::Twisted)
    }

    pub fn auxiliary(d: f64, ell: f64) -> Result<Self> {
        Self::new(d, ell, Variant::Auxiliary)
    }

    /// Is the bottom boundary (x₂ = 0) Dirichlet at abscissa `x1`?
    /// Transition points x₁ = ±ℓ belong to the Neumann (open-complement) side.
    pub fn bottom_dirichlet(&self, x1: f64) -> bool {
        match self.variant {
            Variant::Twisted => x1 > self.ell,
            Variant::Auxiliary => x1.abs() > self.ell,
        }
    }

    /// Is the top boundary (x₂ = d) Dirichlet at abscissa `x1`?
    pub fn top_dirichlet(&self, x1: f64) -> bool {
        match self.variant {
            Variant::Twisted => x1 < -self.ell,
            Variant::Auxiliary => false,
        }
    }

    /// Threshold of the essential spectrum, E₁ = π²/(4d²).
    pub fn threshold(&self) -> f64 {
        threshold_energy(1, self.d).expect("validated width")
    }
}

/// Which half of the strip a transverse mode profile belongs to. The
/// twisted layout swaps the Dirichlet side of the cross-section between
/// x₁ > 0 and x₁ < 0, so χ_m has two branches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// x₁ > 0: Dirichlet at x₂ = 0, Neumann at x₂ = d.
    Right,
    /// x₁ < 0: Neumann at x₂ = 0, Dirichlet at x₂ = d.
    Left,
}

/// E_m = π²(m − ½)²/d², the m-th transverse channel energy.
pub fn threshold_energy(m: usize, d: f64) -> Result<f64> {
    if m == 0 {
        return Err(Error::domain("mode index m must be >= 1"));
    }
    if !(d > 0.0) || !d.is_finite() {
        return Err(Error::domain(format!("strip width d must be > 0, got {d}")));
    }
    let k = PI * (m as f64 - 0.5) / d;
    Ok(k * k)
}

/// Transverse mode profile χ_m(x₂), orthonormal on (0, d) per side.
///
/// Right branch √(2/d)·sin(√E_m x₂); left branch √(2/d)·sin(√E_m (d − x₂)).
pub fn chi(m: usize, side: Side, x2: f64, d: f64) -> Result<f64> {
    let em = threshold_energy(m, d)?;
    if !(0.0..=d).contains(&x2) {
        return Err(Error::domain(format!("x2 = {x2} outside [0, {d}]")));
    }
    let arg = match side {
        Side::Right => x2,
        Side::Left => d - x2,
    };
    Ok((2.0 / d).sqrt() * (em.sqrt() * arg).sin())
}

/// Exponential decay rate of the m-th mode at spectral offset μ below E₁:
/// k₁(μ) = μ and k_m(μ) = √(E_m − E₁ + μ²) for m ≥ 2.
pub fn decay_rate(m: usize, mu: f64, d: f64) -> Result<f64> {
    if m == 1 {
        if mu < 0.0 {
            return Err(Error::domain(format!("mode 1 requires mu >= 0, got {mu}")));
        }
        return Ok(mu);
    }
    let gap = threshold_energy(m, d)? - threshold_energy(1, d)?;
    let sq = gap + mu * mu;
    if sq < 0.0 {
        return Err(Error::domain(format!("negative radicand E_{m} - E_1 + mu^2 = {sq}")));
    }
    Ok(sq.sqrt())
}

/// The point symmetry (x₁, x₂) ↦ (−x₁, d − x₂) of the twisted layout.
#[derive(Debug, Clone, Copy)]
pub struct ParityMap {
    pub d: f64,
}

impl ParityMap {
    pub fn apply(&self, p: (f64, f64)) -> (f64, f64) {
        (-p.0, self.d - p.1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn threshold_values() {
        assert_relative_eq!(threshold_energy(1, 1.0).unwrap(), PI * PI / 4.0, max_relative = 1e-15);
        assert_relative_eq!(threshold_energy(2, 1.0).unwrap(), 9.0 * PI * PI / 4.0, max_relative = 1e-15);
        assert_relative_eq!(threshold_energy(1, 2.0).unwrap(), PI * PI / 16.0, max_relative = 1e-15);
        assert_relative_eq!(threshold_energy(1, 1.0).unwrap(), 2.46740110, max_relative = 1e-8);
        assert_relative_eq!(threshold_energy(2, 1.0).unwrap(), 22.2066099, max_relative = 1e-8);
        assert!(threshold_energy(0, 1.0).is_err());
        assert!(threshold_energy(1, -1.0).is_err());
    }

    #[test]
    fn channel_gap_identity() {
        // E_m - E_1 = pi^2 (m^2 - m) / d^2 exactly
        for d in [0.5, 1.0, 3.0] {
            for m in 1..8 {
                let gap = threshold_energy(m, d).unwrap() - threshold_energy(1, d).unwrap();
                let exact = PI * PI * ((m * m - m) as f64) / (d * d);
                assert_relative_eq!(gap, exact, max_relative = 1e-13, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn chi_values() {
        assert_relative_eq!(chi(1, Side::Right, 0.5, 1.0).unwrap(), 1.0, max_relative = 1e-15);
        assert_eq!(chi(1, Side::Right, 0.0, 1.0).unwrap(), 0.0);
        assert_relative_eq!(chi(1, Side::Left, 1.0, 1.0).unwrap(), 0.0, epsilon = 1e-15);
        assert!(chi(1, Side::Right, 1.5, 1.0).is_err());
    }

    #[test]
    fn chi_orthonormal_quadrature() {
        // midpoint rule on a fine transverse grid reproduces delta_mn
        let d = 1.3;
        let n = 4000;
        let h = d / n as f64;
        for side in [Side::Right, Side::Left] {
            for m in 1..4 {
                for mm in 1..4 {
                    let mut s = 0.0;
                    for j in 0..n {
                        let x2 = (j as f64 + 0.5) * h;
                        s += chi(m, side, x2, d).unwrap() * chi(mm, side, x2, d).unwrap() * h;
                    }
                    let expect = if m == mm { 1.0 } else { 0.0 };
                    assert_relative_eq!(s, expect, epsilon = 1e-6);
                }
            }
        }
    }

    #[test]
    fn decay_rates() {
        assert_relative_eq!(decay_rate(1, 0.3, 1.0).unwrap(), 0.3, max_relative = 1e-15);
        assert_relative_eq!(decay_rate(2, 0.0, 1.0).unwrap(), PI * 2.0_f64.sqrt(), max_relative = 1e-14);
        assert_relative_eq!(
            decay_rate(3, 0.1, 1.0).unwrap(),
            (6.0 * PI * PI + 0.01).sqrt(),
            max_relative = 1e-14
        );
        assert!(decay_rate(1, -0.1, 1.0).is_err());
    }

    #[test]
    fn parity_involution() {
        let p = ParityMap { d: 2.5 };
        let pt = (1.25, 0.75);
        assert_eq!(p.apply(p.apply(pt)), pt);
    }

    #[test]
    fn boundary_parity() {
        // Twisted: a bottom Dirichlet point maps to a top Dirichlet point
        let spec = WaveguideSpec::twisted(1.0, 0.8).unwrap();
        for x1 in [-3.0, -0.81, -0.5, 0.0, 0.5, 0.81, 3.0] {
            assert_eq!(spec.bottom_dirichlet(x1), spec.top_dirichlet(-x1));
        }
        // ell = 0 edge case: bottom Dirichlet iff x1 > 0
        let s0 = WaveguideSpec::twisted(1.0, 0.0).unwrap();
        assert!(s0.bottom_dirichlet(0.1));
        assert!(!s0.bottom_dirichlet(0.0));
        assert!(s0.top_dirichlet(-0.1));
    }

    #[test]
    fn auxiliary_layout() {
        let spec = WaveguideSpec::auxiliary(1.0, 1.0).unwrap();
        assert!(spec.bottom_dirichlet(1.5));
        assert!(spec.bottom_dirichlet(-1.5));
        assert!(!spec.bottom_dirichlet(0.0));
        assert!(!spec.top_dirichlet(5.0));
    }
}
