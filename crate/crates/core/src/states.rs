//! Bound states of the pseudoharmonic potential and their radial densities.
//!
//! With `γ = γ_ℓ` and `α = γ + 1/2`, both densities share the shape
//!
//! ```text
//! P · x^{2γ} · exp(-g x²) · [L_n^α(h x²)]²
//! ```
//!
//! with `g = h = 2λ` in position space and `g = 2/λ`, `h = 1/(2λ)` in momentum
//! space. Only the prefactor `P` depends on the normalization mode.
//! Everything is evaluated in log space and exponentiated last, since `γ`
//! reaches the thirties in ℓ sweeps.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::moldata::MoleculeParams;
use crate::quadrature::{integrate_halfline, QuadResult, QuadratureConfig};
use crate::specfun::{laguerre, laguerre_with_derivative, ln_gamma, ln_laguerre_power_moment};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    Position,
    Momentum,
}

impl Space {
    pub const ALL: [Space; 2] = [Space::Position, Space::Momentum];

    pub fn as_str(self) -> &'static str {
        match self {
            Space::Position => "position",
            Space::Momentum => "momentum",
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "position" | "r" => Ok(Space::Position),
            "momentum" | "p" => Ok(Space::Momentum),
            _ => Err(Error::InvalidSpec(format!("unknown space `{s}`"))),
        }
    }
}

/// How the density prefactor is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormMode {
    /// The prefactors that reproduce the published tables: `N²` in position
    /// space and the squared momentum wavefunction prefactor
    /// `2 n! (2λ²)^{-γ/2-3/4} / Γ(n+γ+3/2)` in momentum space. Neither density
    /// integrates to one.
    PaperFaithful,
    /// Position as in `PaperFaithful`; momentum uses the density prefactor
    /// `2 n! (2λ)^{-γ-3/2} / Γ(n+γ+3/2)` exactly as printed.
    PrintedDensity,
    /// Prefactors rescaled so that `4π ∫ x² density dx = 1` in both spaces.
    Renormalized,
}

impl NormMode {
    pub fn as_str(self) -> &'static str {
        match self {
            NormMode::PaperFaithful => "paper",
            NormMode::PrintedDensity => "printed",
            NormMode::Renormalized => "normalized",
        }
    }
}

impl fmt::Display for NormMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NormMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "paper" => Ok(NormMode::PaperFaithful),
            "printed" => Ok(NormMode::PrintedDensity),
            "normalized" | "renormalized" => Ok(NormMode::Renormalized),
            _ => Err(Error::InvalidSpec(format!("unknown mode `{s}`"))),
        }
    }
}

/// `V(r) = D_e (r/r_e - r_e/r)²`.
pub fn potential(mol: &MoleculeParams, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain {
            what: "radius",
            value: r,
        });
    }
    let u = r / mol.r_e() - mol.r_e() / r;
    Ok(mol.d_e() * u * u)
}

/// `γ_ℓ = (-1 + sqrt((2ℓ+1)² + 8 D_e r_e²)) / 2`.
pub fn gamma_ell(d_e: f64, r_e: f64, ell: u32) -> f64 {
    let l = 2.0 * f64::from(ell) + 1.0;
    0.5 * (-1.0 + (l * l + 8.0 * d_e * r_e * r_e).sqrt())
}

/// `λ = sqrt(D_e / (2 r_e²))`.
pub fn lambda(d_e: f64, r_e: f64) -> f64 {
    (d_e / (2.0 * r_e * r_e)).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateParams {
    pub n: u32,
    pub ell: u32,
    pub gamma_ell: f64,
    pub lambda: f64,
    /// Position-space prefactor `N²`.
    pub norm_sq: f64,
    pub mode: NormMode,
    ln_prefactor: [f64; 2],
}

pub fn make_state(mol: &MoleculeParams, n: u32, ell: u32, mode: NormMode) -> StateParams {
    StateParams::new(
        n,
        ell,
        gamma_ell(mol.d_e(), mol.r_e(), ell),
        lambda(mol.d_e(), mol.r_e()),
        mode,
    )
}

impl StateParams {
    /// State from its derived parameters directly.
    pub fn new(n: u32, ell: u32, gamma_ell: f64, lambda: f64, mode: NormMode) -> Self {
        assert!(gamma_ell >= 0.0, "γ_ℓ must be non-negative, got {gamma_ell}");
        assert!(lambda > 0.0, "λ must be positive, got {lambda}");
        let nf = f64::from(n);
        let a = gamma_ell + 1.5;
        let ln_fact_ratio = ln_gamma(nf + 1.0) - ln_gamma(nf + a);
        let ln_two_lambda_sq = (2.0 * lambda * lambda).ln();
        let paper_position = 2f64.ln() + ln_fact_ratio + 0.5 * a * ln_two_lambda_sq;
        let mut state = Self {
            n,
            ell,
            gamma_ell,
            lambda,
            norm_sq: 0.0,
            mode,
            ln_prefactor: [paper_position, 0.0],
        };
        state.ln_prefactor[1] = match mode {
            NormMode::PaperFaithful => 2f64.ln() + ln_fact_ratio - 0.5 * a * ln_two_lambda_sq,
            NormMode::PrintedDensity => 2f64.ln() + ln_fact_ratio - a * (2.0 * lambda).ln(),
            NormMode::Renormalized => 0.0,
        };
        if mode == NormMode::Renormalized {
            for space in Space::ALL {
                let idx = space as usize;
                state.ln_prefactor[idx] = 0.0;
                state.ln_prefactor[idx] = -state.ln_analytic_radial_norm(space);
            }
        }
        state.norm_sq = state.ln_prefactor[0].exp();
        state
    }

    /// Laguerre parameter `α = γ_ℓ + 1/2`.
    pub fn alpha(&self) -> f64 {
        self.gamma_ell + 0.5
    }

    /// `ln P` for the density in `space`.
    pub fn ln_prefactor(&self, space: Space) -> f64 {
        self.ln_prefactor[space as usize]
    }

    /// Gaussian rate `g` and Laguerre scale `h` of the density in `space`.
    pub fn shape(&self, space: Space) -> (f64, f64) {
        match space {
            Space::Position => (2.0 * self.lambda, 2.0 * self.lambda),
            Space::Momentum => (2.0 / self.lambda, 0.5 / self.lambda),
        }
    }

    /// `ln 4π ∫ x² density dx`, in closed form.
    pub fn ln_analytic_radial_norm(&self, space: Space) -> f64 {
        let (g, h) = self.shape(space);
        let a = self.gamma_ell + 1.5;
        let moment = ln_laguerre_power_moment(a, self.n, self.alpha(), 2, g / h);
        (2.0 * PI).ln() + self.ln_prefactor(space) - a * h.ln() + moment.ln_value
    }

    pub fn density(&self, space: Space) -> RadialDensity {
        RadialDensity { space, state: *self }
    }
}

/// Radial density of one state in one space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialDensity {
    pub space: Space,
    pub state: StateParams,
}

impl RadialDensity {
    fn parts(&self) -> (f64, f64, f64) {
        let (g, h) = self.state.shape(self.space);
        (self.state.ln_prefactor(self.space), g, h)
    }

    /// `ln(P x^{2γ} e^{-g x²})` for `x > 0`.
    fn ln_envelope(&self, x: f64) -> f64 {
        let (ln_p, g, _) = self.parts();
        ln_p + 2.0 * self.state.gamma_ell * x.ln() - g * x * x
    }

    /// The polynomial factor `L_n^α(h x²)`; its sign changes mark the nodes.
    pub fn laguerre_factor(&self, x: f64) -> f64 {
        let (_, _, h) = self.parts();
        laguerre(self.state.n, self.state.alpha(), h * x * x)
    }

    pub fn ln_value(&self, x: f64) -> f64 {
        if x == 0.0 {
            return self.value(0.0).ln();
        }
        self.ln_envelope(x) + 2.0 * self.laguerre_factor(x).abs().ln()
    }

    pub fn value(&self, x: f64) -> f64 {
        debug_assert!(x >= 0.0, "density evaluated at negative radius {x}");
        if x == 0.0 {
            if self.state.gamma_ell > 0.0 {
                return 0.0;
            }
            let l0 = self.laguerre_factor(0.0);
            return self.state.ln_prefactor(self.space).exp() * l0 * l0;
        }
        self.ln_value(x).exp()
    }

    /// `d/dx` of the density, from `dL_n^α/dy = -L_{n-1}^{α+1}`.
    pub fn derivative(&self, x: f64) -> f64 {
        let gamma = self.state.gamma_ell;
        if x == 0.0 {
            return if gamma == 0.0 || 2.0 * gamma > 1.0 {
                0.0
            } else if 2.0 * gamma == 1.0 {
                self.value_without_power(0.0)
            } else {
                f64::INFINITY
            };
        }
        let (_, g, h) = self.parts();
        let (l, dl) = laguerre_with_derivative(self.state.n, self.state.alpha(), h * x * x);
        let env = self.ln_envelope(x).exp();
        env * l * ((2.0 * gamma / x - 2.0 * g * x) * l + 4.0 * h * x * dl)
    }

    fn value_without_power(&self, x: f64) -> f64 {
        let l = self.laguerre_factor(x);
        self.state.ln_prefactor(self.space).exp() * l * l
    }

    /// `4π x² (ρ')² / ρ`, written without the division so that it stays
    /// finite at the Laguerre nodes:
    /// `4π P x^{2γ} e^{-g x²} [(2γ - 2g x²) L + 4h x² L']²`.
    pub fn fisher_integrand(&self, x: f64) -> f64 {
        if x == 0.0 {
            return 0.0;
        }
        let gamma = self.state.gamma_ell;
        let (_, g, h) = self.parts();
        let y = h * x * x;
        let (l, dl) = laguerre_with_derivative(self.state.n, self.state.alpha(), y);
        let bracket = (2.0 * gamma - 2.0 * g * x * x) * l + 4.0 * y * dl;
        4.0 * PI * (self.ln_envelope(x) + 2.0 * bracket.abs().ln()).exp()
    }

    /// Characteristic length handed to the quadrature: the Gaussian width
    /// `1/sqrt(g)` stretched by `1 + sqrt(n + γ)` for the polynomial spread.
    pub fn scale(&self) -> f64 {
        let (_, g, _) = self.parts();
        (1.0 + (f64::from(self.state.n) + self.state.gamma_ell).sqrt()) / g.sqrt()
    }
}

pub fn position_density(s: &StateParams, r: f64) -> f64 {
    s.density(Space::Position).value(r)
}

pub fn momentum_density(s: &StateParams, p: f64) -> f64 {
    s.density(Space::Momentum).value(p)
}

pub fn density_derivative(s: &StateParams, space: Space, x: f64) -> f64 {
    s.density(space).derivative(x)
}

/// `4π ∫ x² density dx` by quadrature.
pub fn radial_norm(s: &StateParams, space: Space, cfg: &QuadratureConfig) -> Result<QuadResult> {
    let d = s.density(space);
    integrate_halfline(|x| 4.0 * PI * x * x * d.value(x), d.scale(), cfg)
}

/// `4π ∫ x² density dx` in closed form.
pub fn analytic_radial_norm(s: &StateParams, space: Space) -> f64 {
    s.ln_analytic_radial_norm(space).exp()
}
