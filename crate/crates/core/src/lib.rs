//! Information-theoretic measures of pseudoharmonic oscillator states.
//!
//! The pseudoharmonic potential `V(r) = D_e (r/r_e - r_e/r)^2` has closed-form
//! bound states built from generalized Laguerre polynomials. This crate
//! evaluates their position and momentum densities and computes Fisher
//! information, Shannon, Rényi and Tsallis entropies, Onicescu energy and the
//! impetus/length ratios, each by a closed form where one exists and by
//! adaptive quadrature.
//!
//! Modules, bottom up:
//!
//! * [`specfun`]: Laguerre polynomials, polynomial powers, partial Bell
//!   polynomials, the terminating symmetric Lauricella `F_A` and `Θ₀`.
//! * [`quadrature`]: adaptive Gauss–Kronrod on `[0, ∞)`.
//! * [`moldata`]: spectroscopic constants and the molecule file format.
//! * [`states`]: quantum states, densities and their radial derivatives.
//! * [`measures`]: the measures themselves.
//! * [`checks`]: the invariant suite behind `pseudoharmonic check`.
//! * [`cli`]: table, sweep and check commands.

pub mod checks;
pub mod cli;
pub mod error;
pub mod measures;
pub mod moldata;
pub mod quadrature;
pub mod specfun;
pub mod states;

pub use error::{Error, Result};
pub use measures::{MeasureKind, MeasureResult, Measures, Method};
pub use moldata::{builtin_molecules, load_molecules, MoleculeParams, MoleculeTable};
pub use quadrature::{integrate_halfline, QuadResult, QuadratureConfig};
pub use states::{make_state, NormMode, RadialDensity, Space, StateParams};
