//! Discrete spectrum of the mixed Dirichlet/Neumann strip waveguide.
//!
//! The object of study is −Δ on the strip (−∞, ∞) × (0, d) with boundary
//! conditions that swap Dirichlet and Neumann across a window of half-length
//! ℓ ("twisted" layout), plus an auxiliary reflection-symmetric layout whose
//! eigenvalues bracket the twisted ones. The crate discretizes the truncated
//! strip with cell-centered finite differences, solves for eigenvalues below
//! the continuum threshold E₁ = π²/(4d²), locates critical window lengths,
//! and measures how eigenvalues emerge from the threshold as the window
//! grows past a critical length.
//!
//! Module map:
//! * [`model`] — geometry, transverse modes, thresholds, parity map
//! * [`discretize`] — grids, boundary tagging, operator assembly
//! * [`eigensolve`] — shift-invert Lanczos with inertia certification
//! * [`spectrum`] — bracketed eigenvalues, sweeps over ℓ
//! * [`criticality`] — threshold indicator, critical lengths, threshold mode
//! * [`perturbation`] — emergence coefficients μ₁, μ₂ and the ε-sweep fit
//! * [`cli`] — command-line front end with a content-addressed result cache
//!
//! # Quick start
//!
//! Compute the eigenvalues below the threshold for a twisted strip with
//! window half-length ℓ = 2, with two-sided truncation brackets:
//!
//! ```
//! use twistrip::model::WaveguideSpec;
//! use twistrip::spectrum::{discrete_spectrum, Numerics};
//!
//! let spec = WaveguideSpec::twisted(1.0, 2.0)?;
//! let num = Numerics { ny: 8, ..Numerics::default() };
//! let report = discrete_spectrum(&spec, &num)?;
//! assert!(report.count >= 1);
//! for ev in &report.eigenvalues {
//!     println!("m={}  [{:.6}, {:.6}]  {}", ev.m, ev.lower, ev.upper, ev.parity);
//! }
//! # Ok::<(), twistrip::Error>(())
//! ```

pub mod cli;
pub mod criticality;
pub mod discretize;
pub mod eigensolve;
pub mod error;
pub mod linalg;
pub mod model;
pub mod perturbation;
pub mod sparse;
pub mod spectrum;

pub use error::{Error, Result};
