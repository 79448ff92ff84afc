//! Finite-difference discretization of the truncated strip
//! Π_L = (−L, L) × (0, d) on a cell-centered grid.
//!
//! Unknowns live at cell centers; every boundary condition is a ghost-cell
//! closure across a cell face (Dirichlet: ghost = −u, Neumann: ghost = +u),
//! so the matrix is symmetric by construction and no unknown is ever
//! eliminated. Crucially, the sampled transverse profiles sin(√E_m x₂)
//! (and their reflections) are *exact* eigenvectors of the cell-centered
//! transverse chain, which makes the transparent end closure below exact
//! mode-by-mode rather than asymptotic.
//!
//! Grid indexing is column-major in x₁: `idx = i * ny + j`, which keeps the
//! half bandwidth at `ny` and lets the band factorization scale linearly
//! in the strip length.
//!
//! # Example
//!
//! ```
//! use twistrip::discretize::{assemble, build_grid, decay_ratio, EndCondition, GridSpec};
//! use twistrip::model::WaveguideSpec;
//!
//! let spec = WaveguideSpec::twisted(1.0, 1.0)?;
//! let grid = build_grid(spec, GridSpec::new(3.0, 48, 8))?;
//! let bundle = assemble(&grid, EndCondition::Dirichlet)?;
//! // ghost-cell closures keep the operator exactly symmetric
//! assert_eq!(bundle.a.asymmetry(), 0.0);
//! // a mode at its own threshold does not decay at all
//! assert_eq!(decay_ratio(0.0), 1.0);
//! # Ok::<(), twistrip::Error>(())
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{threshold_energy, Side, Variant, WaveguideSpec};
use crate::sparse::Csr;

/// Where the window edge ±ℓ is allowed to sit relative to the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum OffsetPolicy {
    /// ±ℓ must fall strictly between cell centers (the default; the
    /// Dirichlet/Neumann transition is then unambiguous).
    MidcellAtEll,
    /// ±ℓ may coincide with a cell center; that cell's face is tagged
    /// Neumann (the transition point belongs to the open Neumann side).
    NodeAtEll,
}

/// Truncation and resolution parameters.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct GridSpec {
    /// Truncation half-length L: the computational domain is (−L, L) × (0, d).
    pub l_half: f64,
    /// Cell count along x₁ (must be even so the grid is parity-symmetric).
    pub nx: usize,
    /// Cell count along x₂.
    pub ny: usize,
    pub offset_policy: OffsetPolicy,
}

impl GridSpec {
    pub fn new(l_half: f64, nx: usize, ny: usize) -> Self {
        GridSpec { l_half, nx, ny, offset_policy: OffsetPolicy::MidcellAtEll }
    }

    pub fn hx(&self) -> f64 {
        2.0 * self.l_half / self.nx as f64
    }
}

/// Tagged cell-centered grid for one waveguide layout.
#[derive(Debug, Clone)]
pub struct Grid {
    pub spec: WaveguideSpec,
    pub gs: GridSpec,
    pub hx: f64,
    pub hy: f64,
    /// Cell-center abscissae, length nx, ascending, symmetric about 0.
    pub x1: Vec<f64>,
    /// Cell-center ordinates, length ny, ascending in (0, d).
    pub x2: Vec<f64>,
    /// Per-column boundary tag at x₂ = 0 (true = Dirichlet face).
    pub bottom_dirichlet: Vec<bool>,
    /// Per-column boundary tag at x₂ = d.
    pub top_dirichlet: Vec<bool>,
}

impl Grid {
    pub fn n(&self) -> usize {
        self.gs.nx * self.gs.ny
    }

    #[inline]
    pub fn idx(&self, i: usize, j: usize) -> usize {
        i * self.gs.ny + j
    }

    pub fn coords(&self, idx: usize) -> (f64, f64) {
        (self.x1[idx / self.gs.ny], self.x2[idx % self.gs.ny])
    }

    /// Index permutation realizing (x₁, x₂) ↦ (−x₁, d − x₂). Exact: with
    /// nx even the cell set maps onto itself with no fixed cell.
    pub fn parity_perm(&self) -> Vec<usize> {
        let (nx, ny) = (self.gs.nx, self.gs.ny);
        let mut p = vec![0usize; nx * ny];
        for i in 0..nx {
            for j in 0..ny {
                p[self.idx(i, j)] = self.idx(nx - 1 - i, ny - 1 - j);
            }
        }
        p
    }

    /// Human-readable dump: one line per cell, `i j x1 x2 bottom top`.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# nx={} ny={} hx={:.17e} hy={:.17e}", self.gs.nx, self.gs.ny, self.hx, self.hy);
        for i in 0..self.gs.nx {
            for j in 0..self.gs.ny {
                let _ = writeln!(
                    s,
                    "{} {} {:.17e} {:.17e} {} {}",
                    i,
                    j,
                    self.x1[i],
                    self.x2[j],
                    if self.bottom_dirichlet[i] { "D" } else { "N" },
                    if self.top_dirichlet[i] { "D" } else { "N" },
                );
            }
        }
        s
    }
}

pub fn build_grid(spec: WaveguideSpec, gs: GridSpec) -> Result<Grid> {
    if !(gs.l_half > spec.ell) {
        return Err(Error::geometry(format!(
            "truncation half-length L = {} must exceed the window half-length ell = {}",
            gs.l_half, spec.ell
        )));
    }
    if gs.nx < 4 || gs.ny < 4 {
        return Err(Error::geometry(format!("need nx, ny >= 4, got nx = {}, ny = {}", gs.nx, gs.ny)));
    }
    if gs.nx % 2 != 0 {
        return Err(Error::symmetry(format!("nx must be even for a parity-symmetric grid, got {}", gs.nx)));
    }
    let hx = 2.0 * gs.l_half / gs.nx as f64;
    let hy = spec.d / gs.ny as f64;
    let x1: Vec<f64> = (0..gs.nx).map(|i| (2 * i as i64 + 1 - gs.nx as i64) as f64 * hx / 2.0).collect();
    let x2: Vec<f64> = (0..gs.ny).map(|j| (2.0 * j as f64 + 1.0) * hy / 2.0).collect();
    if gs.offset_policy == OffsetPolicy::MidcellAtEll {
        let tol = hx * 1e-9;
        if x1.iter().any(|&x| (x.abs() - spec.ell).abs() < tol) {
            return Err(Error::geometry(format!(
                "a cell center coincides with x1 = +/-{} (hx = {hx}); move ell onto a cell face or use NodeAtEll",
                spec.ell
            )));
        }
    }
    let bottom_dirichlet: Vec<bool> = x1.iter().map(|&x| spec.bottom_dirichlet(x)).collect();
    let top_dirichlet: Vec<bool> = x1.iter().map(|&x| spec.top_dirichlet(x)).collect();
    Ok(Grid { spec, gs, hx, hy, x1, x2, bottom_dirichlet, top_dirichlet })
}

/// Closure applied at the artificial ends x₁ = ±L.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub enum EndCondition {
    /// Ghost column = −(end column): upper bound side of the bracketing.
    Dirichlet,
    /// Ghost column = +(end column): lower bound side.
    Neumann,
    /// Exact discrete outgoing-wave closure at energy Ê₁ − μ²: the ghost
    /// column is R·(end column) with R = Σ_m ρ_m v_m v_mᵀ over the first
    /// `n_modes` transverse modes (remaining modes get a hard-wall ghost).
    Transparent { mu: f64, n_modes: usize },
}

/// Discrete transverse modes of the cell-centered mixed chain on (0, d).
///
/// Returns `(v, ehat)` where `v[m][j]` is the unit-norm sampled profile of
/// mode m+1 at x₂ = (j+½)h_y and `ehat[m] = (2 − 2cos(√E_{m+1} h_y))/h_y²`
/// is its exact discrete transverse energy. `side` picks which end of the
/// cross-section carries the Dirichlet face.
pub fn transverse_modes(ny: usize, d: f64, side: Side, n_modes: usize) -> Result<(Vec<Vec<f64>>, Vec<f64>)> {
    if n_modes == 0 || n_modes > ny {
        return Err(Error::config(format!("n_modes must lie in 1..={ny}, got {n_modes}")));
    }
    let hy = d / ny as f64;
    let norm = (2.0 / ny as f64).sqrt();
    let mut vs = Vec::with_capacity(n_modes);
    let mut es = Vec::with_capacity(n_modes);
    for m in 1..=n_modes {
        let k = threshold_energy(m, d)?.sqrt();
        let v: Vec<f64> = (0..ny)
            .map(|j| {
                let y = (2.0 * j as f64 + 1.0) * hy / 2.0;
                let arg = match side {
                    Side::Right => y,
                    Side::Left => d - y,
                };
                norm * (k * arg).sin()
            })
            .collect();
        vs.push(v);
        es.push((2.0 - 2.0 * (k * hy).cos()) / (hy * hy));
    }
    Ok((vs, es))
}

/// Discrete threshold Ê₁ of the cell-centered transverse chain; converges
/// to E₁ = π²/(4d²) at second order in h_y.
pub fn discrete_threshold(ny: usize, d: f64) -> f64 {
    let hy = d / ny as f64;
    let k = std::f64::consts::PI / (2.0 * d);
    (2.0 - 2.0 * (k * hy).cos()) / (hy * hy)
}

/// Decaying x-ratio of mode m at spectral offset μ: the outgoing discrete
/// solution beyond the end satisfies u_{next} = ρ u, with ρ ∈ (0, 1] the
/// small root of ρ + 1/ρ = 2 + z, z = h_x²(Ê_m − Ê₁ + μ²).
pub fn decay_ratio(z: f64) -> f64 {
    1.0 + z / 2.0 - (z + z * z / 4.0).sqrt()
}

/// Assembled operator with its grid and symmetry data.
#[derive(Debug, Clone)]
pub struct OperatorBundle {
    pub a: Csr,
    pub grid: Grid,
    pub end: EndCondition,
    /// Present iff the layout commutes with the parity map (Twisted).
    pub parity_perm: Option<Vec<usize>>,
}

impl OperatorBundle {
    /// Coordinate-list dump, one `row col value` line per stored entry.
    pub fn dump_matrix(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# n={} nnz={}", self.a.n, self.a.nnz());
        for i in 0..self.a.n {
            let (cols, vals) = self.a.row(i);
            for (&j, &v) in cols.iter().zip(vals) {
                let _ = writeln!(s, "{i} {j} {v:.17e}");
            }
        }
        s
    }

    /// Max |(PAP − A)| over stored entries; exactly 0.0 for Twisted layouts.
    pub fn parity_commutator(&self) -> Option<f64> {
        let p = self.parity_perm.as_ref()?;
        let mut worst = 0.0f64;
        for i in 0..self.a.n {
            let (cols, vals) = self.a.row(i);
            for (&j, &v) in cols.iter().zip(vals) {
                worst = worst.max((v - self.a.get(p[i], p[j])).abs());
            }
        }
        Some(worst)
    }
}

pub fn assemble(grid: &Grid, end: EndCondition) -> Result<OperatorBundle> {
    let (nx, ny) = (grid.gs.nx, grid.gs.ny);
    let (hx, hy) = (grid.hx, grid.hy);
    let (cx, cy) = (1.0 / (hx * hx), 1.0 / (hy * hy));
    if let EndCondition::Transparent { mu, n_modes } = end {
        if !(mu >= 0.0) || !mu.is_finite() {
            return Err(Error::config(format!("transparent end requires mu >= 0, got {mu}")));
        }
        if n_modes == 0 || n_modes > ny {
            return Err(Error::config(format!("transparent n_modes must lie in 1..={ny}, got {n_modes}")));
        }
    }

    let mut t: Vec<(usize, usize, f64)> = Vec::with_capacity(5 * nx * ny + 2 * ny * ny);
    for i in 0..nx {
        for j in 0..ny {
            let r = grid.idx(i, j);
            let mut diag = 2.0 * cx + 2.0 * cy;
            // x-direction
            if i > 0 {
                t.push((r, grid.idx(i - 1, j), -cx));
            } else {
                match end {
                    EndCondition::Dirichlet => diag += cx,
                    EndCondition::Neumann => diag -= cx,
                    EndCondition::Transparent { .. } => {} // dense block added below
                }
            }
            if i + 1 < nx {
                t.push((r, grid.idx(i + 1, j), -cx));
            } else {
                match end {
                    EndCondition::Dirichlet => diag += cx,
                    EndCondition::Neumann => diag -= cx,
                    EndCondition::Transparent { .. } => {}
                }
            }
            // y-direction
            if j > 0 {
                t.push((r, grid.idx(i, j - 1), -cy));
            } else if grid.bottom_dirichlet[i] {
                diag += cy;
            } else {
                diag -= cy;
            }
            if j + 1 < ny {
                t.push((r, grid.idx(i, j + 1), -cy));
            } else if grid.top_dirichlet[i] {
                diag += cy;
            } else {
                diag -= cy;
            }
            t.push((r, r, diag));
        }
    }

    if let EndCondition::Transparent { mu, n_modes } = end {
        let e1 = discrete_threshold(ny, grid.spec.d);
        for &i_end in &[0usize, nx - 1] {
            let side = match (grid.bottom_dirichlet[i_end], grid.top_dirichlet[i_end]) {
                (true, false) => Side::Right,
                (false, true) => Side::Left,
                (b, tp) => {
                    return Err(Error::geometry(format!(
                        "transparent end needs a pure mixed cross-section at the end column, got bottom D={b}, top D={tp}"
                    )))
                }
            };
            let (vs, es) = transverse_modes(ny, grid.spec.d, side, n_modes)?;
            for (v, &em) in vs.iter().zip(&es) {
                let z = hx * hx * (em - e1 + mu * mu);
                let rho = decay_ratio(z);
                for j1 in 0..ny {
                    for j2 in 0..ny {
                        // the inner product commutes bitwise, so the block is exactly symmetric
                        t.push((grid.idx(i_end, j1), grid.idx(i_end, j2), (-cx * rho) * (v[j1] * v[j2])));
                    }
                }
            }
        }
    }

    let a = Csr::from_triplets(nx * ny, &t);
    let parity_perm = match grid.spec.variant {
        Variant::Twisted => Some(grid.parity_perm()),
        Variant::Auxiliary => None,
    };
    Ok(OperatorBundle { a, grid: grid.clone(), end, parity_perm })
}

/// Split a node vector into its parity-even and parity-odd parts,
/// (u ± u∘P)/2, using the bundle's permutation.
pub fn parity_split(perm: &[usize], u: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let even: Vec<f64> = u.iter().enumerate().map(|(i, &v)| 0.5 * (v + u[perm[i]])).collect();
    let odd: Vec<f64> = u.iter().enumerate().map(|(i, &v)| 0.5 * (v - u[perm[i]])).collect();
    (even, odd)
}

/// Signed parity indicator of a node vector: ⟨u, u∘P⟩ / ⟨u, u⟩ ∈ [−1, 1];
/// +1 for even, −1 for odd.
pub fn parity_score(perm: &[usize], u: &[f64]) -> f64 {
    let mut num = 0.0;
    let mut den = 0.0;
    for (i, &v) in u.iter().enumerate() {
        num += v * u[perm[i]];
        den += v * v;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ParityMap;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn twisted_grid(ell: f64, l_half: f64, nx: usize, ny: usize) -> Grid {
        let spec = WaveguideSpec::twisted(1.0, ell).unwrap();
        build_grid(spec, GridSpec::new(l_half, nx, ny)).unwrap()
    }

    #[test]
    fn grid_geometry_and_tags() {
        let g = twisted_grid(1.0, 4.0, 64, 8);
        assert_relative_eq!(g.hx, 0.125, max_relative = 1e-15);
        assert_relative_eq!(g.hy, 0.125, max_relative = 1e-15);
        // symmetric about 0, no cell at x1 = 0
        assert_relative_eq!(g.x1[0], -(g.x1[63]), max_relative = 1e-15);
        assert!(g.x1.iter().all(|&x| x != 0.0));
        // bottom Dirichlet exactly where x1 > 1
        for (i, &x) in g.x1.iter().enumerate() {
            assert_eq!(g.bottom_dirichlet[i], x > 1.0);
            assert_eq!(g.top_dirichlet[i], x < -1.0);
        }
        // parity permutation is an involution matching the coordinate map
        let p = g.parity_perm();
        let pm = ParityMap { d: 1.0 };
        for idx in 0..g.n() {
            assert_eq!(p[p[idx]], idx);
            assert_ne!(p[idx], idx);
            let (x1, x2) = g.coords(idx);
            let (mx1, mx2) = pm.apply((x1, x2));
            let (qx1, qx2) = g.coords(p[idx]);
            assert_relative_eq!(mx1, qx1, epsilon = 1e-14);
            assert_relative_eq!(mx2, qx2, epsilon = 1e-14);
        }
    }

    #[test]
    fn grid_validation_errors() {
        let spec = WaveguideSpec::twisted(1.0, 2.0).unwrap();
        assert!(build_grid(spec, GridSpec::new(1.5, 8, 4)).is_err()); // L <= ell
        let spec = WaveguideSpec::twisted(1.0, 0.5).unwrap();
        assert!(build_grid(spec, GridSpec::new(4.0, 9, 4)).is_err()); // nx odd
        assert!(build_grid(spec, GridSpec::new(4.0, 8, 2)).is_err()); // ny < 4
        // cell center lands on ell = 0.5 when hx = 1: centers at +/-0.5, ...
        let gs = GridSpec::new(2.0, 4, 4);
        assert!(build_grid(spec, gs).is_err());
        let gs = GridSpec { offset_policy: OffsetPolicy::NodeAtEll, ..gs };
        let g = build_grid(spec, gs).unwrap();
        // transition cell is Neumann (strict inequality)
        let i = g.x1.iter().position(|&x| (x - 0.5).abs() < 1e-12).unwrap();
        assert!(!g.bottom_dirichlet[i]);
    }

    #[test]
    fn interior_stencil_and_symmetry() {
        let g = twisted_grid(0.75, 3.0, 24, 8);
        for end in [EndCondition::Dirichlet, EndCondition::Neumann] {
            let b = assemble(&g, end).unwrap();
            assert_eq!(b.a.asymmetry(), 0.0);
            assert_eq!(b.parity_commutator(), Some(0.0));
            // interior row sums to zero
            let r = g.idx(10, 4);
            let (cols, vals) = b.a.row(r);
            assert_eq!(cols.len(), 5);
            let sum: f64 = vals.iter().sum();
            assert!(sum.abs() < 1e-10);
        }
    }

    #[test]
    fn end_conditions_differ_only_at_end_columns() {
        let g = twisted_grid(0.75, 3.0, 24, 6);
        let bd = assemble(&g, EndCondition::Dirichlet).unwrap();
        let bn = assemble(&g, EndCondition::Neumann).unwrap();
        for i in 0..24 {
            for j in 0..6 {
                let r = g.idx(i, j);
                let same = bd.a.get(r, r) == bn.a.get(r, r);
                assert_eq!(same, i != 0 && i != 23, "column {i}");
            }
        }
    }

    #[test]
    fn neumann_box_exact_eigenvector() {
        // Auxiliary layout with ell >= every |x1| tag boundary: all faces
        // Neumann. cos(m pi (x1+L)/(2L)) cos(n pi x2 / d) sampled at cell
        // centers is an exact discrete eigenvector.
        let spec = WaveguideSpec::auxiliary(1.0, 2.5).unwrap();
        let mut g = build_grid(spec, GridSpec::new(3.0, 12, 6)).unwrap();
        for b in g.bottom_dirichlet.iter_mut() {
            *b = false;
        }
        let b = assemble(&g, EndCondition::Neumann).unwrap();
        let (m, n) = (3.0, 2.0);
        let (k1, k2) = (m * PI / 6.0, n * PI);
        let u: Vec<f64> = (0..g.n())
            .map(|idx| {
                let (x1, x2) = g.coords(idx);
                (k1 * (x1 + 3.0)).cos() * (k2 * x2).cos()
            })
            .collect();
        let lam = (2.0 - 2.0 * (k1 * g.hx).cos()) / (g.hx * g.hx)
            + (2.0 - 2.0 * (k2 * g.hy).cos()) / (g.hy * g.hy);
        let au = b.a.matvec_alloc(&u);
        for (a, u) in au.iter().zip(&u) {
            assert_relative_eq!(*a, lam * u, epsilon = 1e-10, max_relative = 1e-12);
        }
    }

    #[test]
    fn strip_threshold_exact_eigenvector() {
        // Bottom Dirichlet everywhere, top Neumann, Neumann ends: the
        // sampled transverse mode chi_1 (constant in x1) is exact with
        // eigenvalue equal to the discrete threshold.
        let spec = WaveguideSpec::auxiliary(1.0, 0.0).unwrap();
        let g = build_grid(spec, GridSpec::new(2.0, 8, 16)).unwrap();
        assert!(g.bottom_dirichlet.iter().all(|&b| b));
        let b = assemble(&g, EndCondition::Neumann).unwrap();
        let e1 = discrete_threshold(16, 1.0);
        assert_relative_eq!(e1, PI * PI / 4.0, max_relative = 1e-3);
        let u: Vec<f64> = (0..g.n())
            .map(|idx| {
                let (_, x2) = g.coords(idx);
                (PI / 2.0 * x2).sin()
            })
            .collect();
        let au = b.a.matvec_alloc(&u);
        for (a, u) in au.iter().zip(&u) {
            assert_relative_eq!(*a, e1 * u, epsilon = 1e-11);
        }
    }

    #[test]
    fn transverse_modes_are_chain_eigenvectors() {
        let (ny, d) = (12usize, 1.3);
        let hy = d / ny as f64;
        for side in [Side::Right, Side::Left] {
            let (vs, es) = transverse_modes(ny, d, side, ny).unwrap();
            for (v, &em) in vs.iter().zip(&es) {
                // unit norm
                let nrm: f64 = v.iter().map(|x| x * x).sum();
                assert_relative_eq!(nrm, 1.0, epsilon = 1e-12);
                // chain with Dirichlet/Neumann ghosts per side
                for j in 0..ny {
                    let (bd, td) = match side {
                        Side::Right => (true, false),
                        Side::Left => (false, true),
                    };
                    let lo = if j > 0 { v[j - 1] } else if bd { -v[0] } else { v[0] };
                    let hi = if j + 1 < ny { v[j + 1] } else if td { -v[ny - 1] } else { v[ny - 1] };
                    let av = (-lo + 2.0 * v[j] - hi) / (hy * hy);
                    assert_relative_eq!(av, em * v[j], epsilon = 1e-10);
                }
            }
        }
    }

    #[test]
    fn transparent_end_passes_single_mode_exactly() {
        // Field u = rho^(nx-1-i) v_m(j) decays toward -L and is outgoing at
        // +L; every row except the left end column must see eigenvalue
        // Ehat_1 - mu^2 exactly.
        // uniform bottom-Dirichlet cross-section so one transverse mode
        // spans the whole strip
        let spec = WaveguideSpec::auxiliary(1.0, 0.0).unwrap();
        let g = build_grid(spec, GridSpec::new(2.0, 16, 8)).unwrap();
        let mu = 0.4;
        let b = assemble(&g, EndCondition::Transparent { mu, n_modes: 8 }).unwrap();
        assert!(b.a.asymmetry() == 0.0);
        let e1 = discrete_threshold(8, 1.0);
        let m = 2; // second transverse channel of the right section
        let (vs, es) = transverse_modes(8, 1.0, Side::Right, 8).unwrap();
        let z = g.hx * g.hx * (es[m] - e1 + mu * mu);
        let rho = decay_ratio(z);
        let u: Vec<f64> = (0..g.n())
            .map(|idx| {
                let (i, j) = (idx / 8, idx % 8);
                rho.powi((15 - i) as i32) * vs[m][j]
            })
            .collect();
        let lam = e1 - mu * mu;
        let au = b.a.matvec_alloc(&u);
        // the field decays toward -L, so it is outgoing at the left end and
        // every row except the right end column sees the eigenvalue exactly
        for idx in 0..g.n() - 8 {
            assert_relative_eq!(au[idx], lam * u[idx], epsilon = 1e-12, max_relative = 1e-10);
        }
        // decay ratio sanity: z = 0 -> 1, large z -> small
        assert_eq!(decay_ratio(0.0), 1.0);
        assert!(decay_ratio(10.0) < 0.1);
    }

    #[test]
    fn parity_split_and_score() {
        let g = twisted_grid(0.5, 2.0, 8, 4);
        let p = g.parity_perm();
        let u: Vec<f64> = (0..g.n()).map(|i| (i as f64 * 0.37).sin()).collect();
        let (even, odd) = parity_split(&p, &u);
        for i in 0..g.n() {
            assert_relative_eq!(even[i] + odd[i], u[i], epsilon = 1e-14);
            assert_relative_eq!(even[p[i]], even[i], epsilon = 1e-14);
            assert_relative_eq!(odd[p[i]], -odd[i], epsilon = 1e-14);
        }
        assert_relative_eq!(parity_score(&p, &even), 1.0, epsilon = 1e-12);
        assert_relative_eq!(parity_score(&p, &odd), -1.0, epsilon = 1e-12);
    }

    #[test]
    fn refinement_consistency_on_smooth_field() {
        // Away from boundaries the stencil reproduces -Laplacian at O(h^2):
        // compare on interior cells for a smooth function, two resolutions.
        let errs: Vec<f64> = [16usize, 32]
            .iter()
            .map(|&nx| {
                let g = twisted_grid(0.5, 2.0, nx, nx / 2);
                let b = assemble(&g, EndCondition::Dirichlet).unwrap();
                let f = |x: f64, y: f64| (0.7 * x).sin() * (1.3 * y + 0.2).cos();
                let lap = |x: f64, y: f64| (0.7f64 * 0.7 + 1.3 * 1.3) * f(x, y);
                let u: Vec<f64> = (0..g.n())
                    .map(|idx| {
                        let (x, y) = g.coords(idx);
                        f(x, y)
                    })
                    .collect();
                let au = b.a.matvec_alloc(&u);
                let mut worst = 0.0f64;
                for i in 2..nx - 2 {
                    for j in 2..nx / 2 - 2 {
                        let r = g.idx(i, j);
                        let (x, y) = g.coords(r);
                        worst = worst.max((au[r] - lap(x, y)).abs());
                    }
                }
                worst
            })
            .collect();
        // halving h divides the error by about 4
        assert!(errs[0] / errs[1] > 3.0, "ratio {}", errs[0] / errs[1]);
    }
}
