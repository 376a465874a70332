//! Information measures of pseudoharmonic states.
//!
//! All radial integrals use the measure `4π x² dx`. Every measure is
//! available by quadrature; closed forms exist for the Fisher information
//! (position space for all `n`, momentum space for `n = 0`), for entropic
//! moments of integer order, and, asymptotically, for the Shannon entropy.
//!
//! Closed forms are derived for the `PaperFaithful` prefactors. In the other
//! modes, measures linear in the density (Fisher) are rescaled by the ratio
//! of prefactors; entropic moments are computed for the actual prefactor.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::quadrature::{integrate_halfline, QuadResult, QuadratureConfig};
use crate::specfun::{
    digamma, laguerre, ln_gamma, ln_laguerre_power_moment_bell, ln_theta0_certified,
};
use crate::states::{NormMode, RadialDensity, Space, StateParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeasureKind {
    Fisher,
    Shannon,
    Renyi,
    Tsallis,
    Onicescu,
    Wq,
}

impl MeasureKind {
    pub fn needs_q(self) -> bool {
        matches!(self, MeasureKind::Renyi | MeasureKind::Tsallis | MeasureKind::Wq)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MeasureKind::Fisher => "fisher",
            MeasureKind::Shannon => "shannon",
            MeasureKind::Renyi => "renyi",
            MeasureKind::Tsallis => "tsallis",
            MeasureKind::Onicescu => "onicescu",
            MeasureKind::Wq => "wq",
        }
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MeasureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "fisher" => MeasureKind::Fisher,
            "shannon" => MeasureKind::Shannon,
            "renyi" => MeasureKind::Renyi,
            "tsallis" => MeasureKind::Tsallis,
            "onicescu" => MeasureKind::Onicescu,
            "wq" => MeasureKind::Wq,
            _ => return Err(Error::InvalidSpec(format!("unknown measure `{s}`"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Analytic,
    Quadrature,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Analytic => "analytic",
            Method::Quadrature => "quadrature",
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "analytic" => Ok(Self::Analytic),
            "quadrature" => Ok(Self::Quadrature),
            other => Err(Error::InvalidSpec(format!("unknown method `{other}`"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureResult {
    pub kind: MeasureKind,
    pub space: Space,
    pub q: Option<f64>,
    pub value: f64,
    pub method: Method,
    pub err_estimate: f64,
    /// `|4π ∫ x² density dx - 1|` of the density the value was computed from.
    pub norm_deficit: f64,
    /// Set when the closed form is only asymptotically valid.
    pub approximate: bool,
    /// First quadrature cut-off, for quadrature results.
    pub truncation_radius: Option<f64>,
}

/// Orders above this are refused by the closed-form moment path.
pub const MAX_ANALYTIC_Q: f64 = 64.0;

/// Half-width of the band around `q = 1` where Rényi and Tsallis are refused.
pub const Q_ONE_BAND: f64 = 1e-6;

/// `ln W_q` with a relative error bound on `W_q`.
#[derive(Debug, Clone, Copy)]
struct LnMomentEstimate {
    ln_value: f64,
    rel_err: f64,
    radius: Option<f64>,
}

/// Measure calculator bound to one quadrature configuration.
#[derive(Debug, Clone, Copy, Default)]
pub struct Measures {
    pub cfg: QuadratureConfig,
}

impl Measures {
    pub fn new(cfg: QuadratureConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(Self { cfg })
    }

    fn result(
        &self,
        kind: MeasureKind,
        s: &StateParams,
        space: Space,
        q: Option<f64>,
        method: Method,
        value: f64,
        err_estimate: f64,
        radius: Option<f64>,
    ) -> MeasureResult {
        MeasureResult {
            kind,
            space,
            q,
            value,
            method,
            err_estimate,
            norm_deficit: (s.ln_analytic_radial_norm(space).exp() - 1.0).abs(),
            approximate: false,
            truncation_radius: radius,
        }
    }

    fn quad(&self, d: &RadialDensity, f: impl Fn(f64) -> f64) -> Result<(QuadResult, f64)> {
        let scale = d.scale();
        let r = integrate_halfline(f, scale, &self.cfg)?;
        Ok((r, self.cfg.tail_sigma * scale))
    }

    /// Entropic moment `W_q = 4π ∫ x² density^q dx`.
    pub fn wq(&self, s: &StateParams, q: f64, space: Space, method: Method) -> Result<MeasureResult> {
        let m = self.ln_moment(s, q, space, method)?;
        let value = m.ln_value.exp();
        Ok(self.result(MeasureKind::Wq, s, space, Some(q), method, value, value * m.rel_err, m.radius))
    }

    fn ln_moment(&self, s: &StateParams, q: f64, space: Space, method: Method) -> Result<LnMomentEstimate> {
        if !(q > 0.0 && q.is_finite()) {
            return Err(Error::Domain {
                what: "entropic moment order q",
                value: q,
            });
        }
        match method {
            Method::Analytic => analytic_ln_moment(s, q, space),
            Method::Quadrature => self.quadrature_ln_moment(s, q, space),
        }
    }

    fn quadrature_ln_moment(&self, s: &StateParams, q: f64, space: Space) -> Result<LnMomentEstimate> {
        let d = s.density(space);
        let ln_integrand = |x: f64| (4.0 * PI * x * x).ln() + q * d.ln_value(x);
        // factor out the peak so that the absolute tolerance is relative to it
        let hi = 6.0 * d.scale();
        let shift = (1..=256)
            .map(|i| ln_integrand(hi * f64::from(i) / 256.0))
            .filter(|v| v.is_finite())
            .fold(f64::NEG_INFINITY, f64::max);
        if !shift.is_finite() {
            return Err(Error::Domain {
                what: "density peak",
                value: shift,
            });
        }
        let (r, radius) = self.quad(&d, |x| {
            if x == 0.0 {
                return 0.0;
            }
            let v = ln_integrand(x) - shift;
            if v == f64::NEG_INFINITY {
                0.0
            } else {
                v.exp()
            }
        })?;
        Ok(LnMomentEstimate {
            ln_value: shift + r.value.ln(),
            rel_err: r.err_estimate / r.value.abs(),
            radius: Some(radius),
        })
    }

    pub fn fisher(&self, s: &StateParams, space: Space, method: Method) -> Result<MeasureResult> {
        let (value, err, radius) = match method {
            Method::Analytic => {
                let v = fisher_analytic(s, space)?;
                (v, 1e-14 * v.abs(), None)
            }
            Method::Quadrature => {
                let d = s.density(space);
                let (r, radius) = self.quad(&d, |x| d.fisher_integrand(x))?;
                (r.value, r.err_estimate, Some(radius))
            }
        };
        Ok(self.result(MeasureKind::Fisher, s, space, None, method, value, err, radius))
    }

    pub fn shannon(&self, s: &StateParams, space: Space, method: Method) -> Result<MeasureResult> {
        match method {
            Method::Analytic => {
                let value = shannon_analytic(s, space)?;
                let mut r = self.result(MeasureKind::Shannon, s, space, None, method, value, 0.0, None);
                // the dropped o(1) term is the dominant, unknown error
                r.err_estimate = f64::NAN;
                r.approximate = true;
                Ok(r)
            }
            Method::Quadrature => {
                let d = s.density(space);
                let (r, radius) = self.quad(&d, |x| {
                    let lv = d.ln_value(x);
                    if lv == f64::NEG_INFINITY {
                        0.0
                    } else {
                        -4.0 * PI * x * x * lv.exp() * lv
                    }
                })?;
                Ok(self.result(
                    MeasureKind::Shannon,
                    s,
                    space,
                    None,
                    method,
                    r.value,
                    r.err_estimate,
                    Some(radius),
                ))
            }
        }
    }

    /// `R_q = ln(W_q) / (1 - q)`, natural logarithm.
    pub fn renyi(&self, s: &StateParams, q: f64, space: Space, method: Method) -> Result<MeasureResult> {
        check_q(q)?;
        let m = self.ln_moment(s, q, space, method)?;
        let value = m.ln_value / (1.0 - q);
        let err = m.rel_err / (1.0 - q).abs();
        Ok(self.result(MeasureKind::Renyi, s, space, Some(q), method, value, err, m.radius))
    }

    /// `T_q = (1 - W_q) / (q - 1)`. In momentum space `q` plays the role of
    /// the conjugate index `m`.
    pub fn tsallis(&self, s: &StateParams, q: f64, space: Space, method: Method) -> Result<MeasureResult> {
        check_q(q)?;
        let m = self.ln_moment(s, q, space, method)?;
        let w = m.ln_value.exp();
        let value = (1.0 - w) / (q - 1.0);
        let err = w * m.rel_err / (q - 1.0).abs();
        Ok(self.result(MeasureKind::Tsallis, s, space, Some(q), method, value, err, m.radius))
    }

    /// Onicescu information energy, `W_2`.
    pub fn onicescu(&self, s: &StateParams, space: Space, method: Method) -> Result<MeasureResult> {
        let mut r = self.wq(s, 2.0, space, method)?;
        r.kind = MeasureKind::Onicescu;
        r.q = None;
        Ok(r)
    }

    /// Any measure by kind; `q` is required exactly when the kind needs it.
    pub fn compute(
        &self,
        kind: MeasureKind,
        s: &StateParams,
        space: Space,
        q: Option<f64>,
        method: Method,
    ) -> Result<MeasureResult> {
        let order = || q.ok_or_else(|| Error::InvalidSpec(format!("{kind} needs q")));
        if !kind.needs_q() && q.is_some() {
            return Err(Error::InvalidSpec(format!("{kind} takes no q")));
        }
        match kind {
            MeasureKind::Fisher => self.fisher(s, space, method),
            MeasureKind::Shannon => self.shannon(s, space, method),
            MeasureKind::Onicescu => self.onicescu(s, space, method),
            MeasureKind::Renyi => self.renyi(s, order()?, space, method),
            MeasureKind::Tsallis => self.tsallis(s, order()?, space, method),
            MeasureKind::Wq => self.wq(s, order()?, space, method),
        }
    }

    /// Impetus-to-length ratio of a measure, from quadrature values:
    /// Fisher `sqrt(I[ρ] / I[γ])`, Shannon `exp((S[γ] - S[ρ]) / 3)`, Rényi
    /// `exp((R_q[γ] - R_q[ρ]) / 3)`.
    pub fn ratio(&self, s: &StateParams, kind: MeasureKind, q: Option<f64>) -> Result<f64> {
        let m = Method::Quadrature;
        match kind {
            MeasureKind::Fisher => {
                let pos = self.fisher(s, Space::Position, m)?.value;
                let mom = self.fisher(s, Space::Momentum, m)?.value;
                Ok(pos.sqrt() / mom.sqrt())
            }
            MeasureKind::Shannon => {
                let pos = self.shannon(s, Space::Position, m)?.value;
                let mom = self.shannon(s, Space::Momentum, m)?.value;
                Ok(((mom - pos) / 3.0).exp())
            }
            MeasureKind::Renyi => {
                let q = q.ok_or_else(|| Error::InvalidSpec("renyi ratio needs q".into()))?;
                let pos = self.renyi(s, q, Space::Position, m)?.value;
                let mom = self.renyi(s, q, Space::Momentum, m)?.value;
                Ok(((mom - pos) / 3.0).exp())
            }
            other => Err(Error::InvalidSpec(format!("no impetus/length ratio for {other}"))),
        }
    }
}

fn check_q(q: f64) -> Result<()> {
    if (q - 1.0).abs() <= Q_ONE_BAND {
        return Err(Error::DegenerateQ(q));
    }
    Ok(())
}

/// Closed-form `ln W_q` for integer `q`.
///
/// Substituting `y = h x²` gives `W_q = 2π P^q h^{-a} M` with `a = qγ + 3/2`
/// and `M = ∫ y^{a-1} e^{-q (g/h) y} L^{2q} dy`. In position space `M` is
/// `q^{-a} Θ₀`; in momentum space it is expanded with Bell polynomials.
fn analytic_ln_moment(s: &StateParams, q: f64, space: Space) -> Result<LnMomentEstimate> {
    if q.fract() != 0.0 || !(1.0..=MAX_ANALYTIC_Q).contains(&q) {
        return Err(Error::Unsupported(format!(
            "closed-form entropic moments need an integer q in 1..={MAX_ANALYTIC_Q}, got {q}"
        )));
    }
    let qi = q as u32;
    let a = q * s.gamma_ell + 1.5;
    let (g, h) = s.shape(space);
    let (ln_m, sum_err) = match space {
        Space::Position => {
            let (ln_theta, sum) = ln_theta0_certified(qi, s.n, s.gamma_ell);
            (ln_theta - a * q.ln(), sum.rel_err)
        }
        Space::Momentum => {
            let m = ln_laguerre_power_moment_bell(a, s.n, s.alpha(), 2 * qi, q * g / h);
            (m.ln_value, m.sum.rel_err)
        }
    };
    let ln_p = s.ln_prefactor(space);
    let ln_value = (2.0 * PI).ln() + q * ln_p - a * h.ln() + ln_m;
    // log-gamma and prefactor rounding, amplified by the size of the logs
    let rounding = 1e-15 * (1.0 + (q * ln_p).abs() + (a * h.ln()).abs() + ln_m.abs());
    Ok(LnMomentEstimate {
        ln_value,
        rel_err: rounding + sum_err,
        radius: None,
    })
}

/// `ln` of the paper prefactor in `space`, used to rescale closed forms.
fn ln_paper_prefactor(s: &StateParams, space: Space) -> f64 {
    StateParams::new(s.n, s.ell, s.gamma_ell, s.lambda, NormMode::PaperFaithful).ln_prefactor(space)
}

fn fisher_analytic(s: &StateParams, space: Space) -> Result<f64> {
    let g = s.gamma_ell;
    let n = f64::from(s.n);
    let base = match space {
        Space::Position => {
            2f64.powf((13.0 - 2.0 * g) / 4.0) * PI * s.lambda / (1.0 + 2.0 * g)
                * ((4.0 * n + 3.0) + (8.0 * n + 4.0) * g)
        }
        Space::Momentum => {
            if s.n != 0 {
                return Err(Error::Unsupported(format!(
                    "closed-form momentum Fisher information exists only for n = 0, got n = {}",
                    s.n
                )));
            }
            2f64.powf((7.0 - 6.0 * g) / 4.0) * PI * (3.0 + 4.0 * g) / (s.lambda * (1.0 + 2.0 * g))
        }
    };
    Ok(base * (s.ln_prefactor(space) - ln_paper_prefactor(s, space)).exp())
}

fn shannon_analytic(s: &StateParams, space: Space) -> Result<f64> {
    if s.n == 0 {
        return Err(Error::Unsupported(
            "asymptotic Shannon entropy needs n >= 1 (its entropic integral contains ln n)".into(),
        ));
    }
    let g = s.gamma_ell;
    let n = f64::from(s.n);
    let a = n + g + 1.5;
    let common = 2.0 * n + g + 1.5 - ((2.0f64).ln() + ln_gamma(n + 1.0) - ln_gamma(a)) - g * digamma(a);
    let width = 1.5 * (2.0 * s.lambda).ln();
    let e = entropic_integral_asymptotic(s.n, g)?;
    Ok(match space {
        Space::Position => common - width + e,
        Space::Momentum => common + width + e,
    })
}

/// Large-`n` form of the entropic integral of orthonormal Laguerre
/// polynomials, `-2n + (γ+3/2) ln n - (γ+1/2) - 2 + ln 2π`.
pub fn entropic_integral_asymptotic(n: u32, gamma_ell: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain {
            what: "radial quantum number for the asymptotic entropic integral",
            value: 0.0,
        });
    }
    let nf = f64::from(n);
    Ok(-2.0 * nf + (gamma_ell + 1.5) * nf.ln() - (gamma_ell + 0.5) - 2.0 + (2.0 * PI).ln())
}

/// `E = -∫ t^α e^{-t} L̃² ln L̃² dt` with `α = γ + 1/2` and `L̃` the
/// orthonormal Laguerre polynomial, integrated in `x = sqrt(t)`.
pub fn entropic_integral_quadrature(n: u32, gamma_ell: f64, cfg: &QuadratureConfig) -> Result<QuadResult> {
    let alpha = gamma_ell + 0.5;
    let nf = f64::from(n);
    let ln_k = ln_gamma(nf + 1.0) - ln_gamma(nf + alpha + 1.0);
    let f = |x: f64| {
        let t = x * x;
        let l = laguerre(n, alpha, t);
        if x == 0.0 || l == 0.0 {
            return 0.0;
        }
        let ln_sq = ln_k + 2.0 * l.abs().ln();
        -2.0 * ((2.0 * alpha + 1.0) * x.ln() - t + ln_sq).exp() * ln_sq
    };
    integrate_halfline(f, 1.0 + (nf + alpha).sqrt(), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moldata::builtin_molecules;
    use crate::states::make_state;

    fn state(name: &str, n: u32, mode: NormMode) -> StateParams {
        make_state(builtin_molecules().get(name).unwrap(), n, 0, mode)
    }

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs()
    }

    #[test]
    fn fisher_position_spot_values() {
        let m = Measures::default();
        let s0 = state("Na2", 0, NormMode::PaperFaithful);
        let s1 = state("Na2", 1, NormMode::PaperFaithful);
        for method in [Method::Analytic, Method::Quadrature] {
            assert!(close(m.fisher(&s0, Space::Position, method).unwrap().value, 4.03449, 1e-4));
            assert!(close(m.fisher(&s1, Space::Position, method).unwrap().value, 11.6049, 1e-4));
        }
    }

    #[test]
    fn fisher_momentum_closed_form_is_ground_state_only() {
        let m = Measures::default();
        let s = state("Na2", 0, NormMode::PaperFaithful);
        let v = m.fisher(&s, Space::Momentum, Method::Analytic).unwrap().value;
        assert!(close(v, 3.68815, 5e-4), "{v}");
        let s = state("Na2", 2, NormMode::PaperFaithful);
        assert!(matches!(
            m.fisher(&s, Space::Momentum, Method::Analytic),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn analytic_fisher_tracks_mode() {
        let m = Measures::default();
        for mode in [NormMode::PaperFaithful, NormMode::PrintedDensity, NormMode::Renormalized] {
            let s = state("Cl2", 0, mode);
            for space in Space::ALL {
                let a = m.fisher(&s, space, Method::Analytic).unwrap().value;
                let q = m.fisher(&s, space, Method::Quadrature).unwrap().value;
                assert!(close(a, q, 1e-9), "{mode} {space}: {a} vs {q}");
            }
        }
    }

    #[test]
    fn ground_state_moment_closed_form() {
        // n = 0: W_q = 4π P^q Γ(a) / (2 (q g)^a), a = qγ + 3/2
        let m = Measures::default();
        let s = state("O2+", 0, NormMode::PaperFaithful);
        for q in [2.0, 3.0, 5.0] {
            let a = q * s.gamma_ell + 1.5;
            let (g, _) = s.shape(Space::Position);
            let expected = (4.0 * PI).ln() + q * s.ln_prefactor(Space::Position) + ln_gamma(a)
                - 2f64.ln()
                - a * (q * g).ln();
            let got = m.wq(&s, q, Space::Position, Method::Analytic).unwrap().value;
            assert!(close(got, expected.exp(), 1e-12), "q={q}");
        }
    }

    #[test]
    fn unit_norm_moment() {
        let m = Measures::default();
        let s = state("N2+", 3, NormMode::Renormalized);
        for space in Space::ALL {
            for method in [Method::Analytic, Method::Quadrature] {
                let w = m.wq(&s, 1.0, space, method).unwrap();
                assert!((w.value - 1.0).abs() < 1e-10, "{space} {method}: {w:?}");
                assert!(w.norm_deficit < 1e-12);
            }
        }
    }

    #[test]
    fn moment_paths_agree() {
        let m = Measures::default();
        for n in [0, 1, 4] {
            let s = state("Cl2", n, NormMode::PaperFaithful);
            for space in Space::ALL {
                for q in [2.0, 3.0] {
                    let a = m.wq(&s, q, space, Method::Analytic).unwrap();
                    let b = m.wq(&s, q, space, Method::Quadrature).unwrap();
                    let tol = (1e-8 * a.value).max(a.err_estimate + b.err_estimate);
                    assert!((a.value - b.value).abs() <= tol, "n={n} {space} q={q}: {a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn renyi_spot_values() {
        let m = Measures::default();
        let na2 = state("Na2", 0, NormMode::PaperFaithful);
        let r = m.renyi(&na2, 2.0, Space::Position, Method::Analytic).unwrap().value;
        assert!(close(r, 4.13494, 1e-4), "{r}");
        let r = m.renyi(&na2, 2.0, Space::Momentum, Method::Analytic).unwrap().value;
        assert!(close(r, 5.93170, 1e-4), "{r}");
        let cl2 = state("Cl2", 0, NormMode::PaperFaithful);
        let r = m.renyi(&cl2, 3.0, Space::Position, Method::Analytic).unwrap().value;
        assert!(close(r, 3.42934, 1e-5), "{r}");
    }

    #[test]
    fn degenerate_and_unsupported_orders() {
        let m = Measures::default();
        let s = state("Na2", 1, NormMode::PaperFaithful);
        assert!(matches!(
            m.renyi(&s, 1.0 + 1e-8, Space::Position, Method::Quadrature),
            Err(Error::DegenerateQ(_))
        ));
        assert!(matches!(
            m.tsallis(&s, 2.5, Space::Position, Method::Analytic),
            Err(Error::Unsupported(_))
        ));
        assert!(m.tsallis(&s, 2.5, Space::Position, Method::Quadrature).is_ok());
    }

    #[test]
    fn tsallis_spot_values() {
        let m = Measures::default();
        let s = state("Na2", 0, NormMode::PaperFaithful);
        let t = m.tsallis(&s, 2.0, Space::Position, Method::Analytic).unwrap().value;
        assert!(close(t, 0.983996, 1e-5));
        let t = m.tsallis(&s, 2.0 / 3.0, Space::Momentum, Method::Quadrature).unwrap().value;
        assert!(close(t, -2.07110, 1e-3), "{t}");
    }

    #[test]
    fn onicescu_links() {
        let m = Measures::default();
        let s = state("O2+", 0, NormMode::PaperFaithful);
        let e = m.onicescu(&s, Space::Position, Method::Analytic).unwrap().value;
        assert!(close(e, 0.278248, 2e-6), "{e}");
        let r2 = m.renyi(&s, 2.0, Space::Position, Method::Analytic).unwrap().value;
        let t2 = m.tsallis(&s, 2.0, Space::Position, Method::Analytic).unwrap().value;
        assert!((r2 + e.ln()).abs() < 1e-12);
        assert!((t2 - (1.0 - e)).abs() < 1e-12);
        let w2 = m.wq(&s, 2.0, Space::Position, Method::Analytic).unwrap().value;
        assert_eq!(w2, e);
    }

    #[test]
    fn shannon_quadrature_spot_values() {
        let m = Measures::default();
        let s = state("Na2", 0, NormMode::PaperFaithful);
        let v = m.shannon(&s, Space::Position, Method::Quadrature).unwrap().value;
        assert!((v - 12.4333).abs() < 1e-3, "{v}");
        let v = m.shannon(&s, Space::Momentum, Method::Quadrature).unwrap().value;
        assert!((v - 0.316484).abs() < 1e-3, "{v}");
    }

    #[test]
    fn shannon_closed_form_is_flagged() {
        let m = Measures::default();
        let s = state("Na2", 2, NormMode::PaperFaithful);
        let r = m.shannon(&s, Space::Position, Method::Analytic).unwrap();
        assert!(r.approximate && r.value.is_finite());
        let s0 = state("Na2", 0, NormMode::PaperFaithful);
        assert!(matches!(
            m.shannon(&s0, Space::Position, Method::Analytic),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn entropic_integral_forms() {
        let g = 3.2955;
        let e1 = entropic_integral_asymptotic(1, g).unwrap();
        assert!((e1 - (-(g + 4.5) + (2.0 * PI).ln())).abs() < 1e-14);
        assert!(entropic_integral_asymptotic(0, g).is_err());
        let cfg = QuadratureConfig::default();
        let gaps: Vec<f64> = [5, 10, 20, 50]
            .iter()
            .map(|&n| {
                let q = entropic_integral_quadrature(n, g, &cfg).unwrap().value;
                (entropic_integral_asymptotic(n, g).unwrap() - q).abs()
            })
            .collect();
        assert!(gaps.windows(2).all(|w| w[1] < w[0]), "{gaps:?}");
    }

    #[test]
    fn ratio_kinds() {
        let m = Measures::default();
        let s = state("NO+", 0, NormMode::PaperFaithful);
        let f = m.ratio(&s, MeasureKind::Fisher, None).unwrap();
        assert!(close(f, (29.0007f64 / 0.09247).sqrt(), 2e-3), "{f}");
        let sh = m.ratio(&s, MeasureKind::Shannon, None).unwrap();
        assert!(close(sh, ((0.214067f64 - 3.56137) / 3.0).exp(), 1e-3), "{sh}");
        assert!(m.ratio(&s, MeasureKind::Renyi, None).is_err());
        assert!(m.ratio(&s, MeasureKind::Tsallis, Some(2.0)).is_err());
    }

    #[test]
    fn compute_validates_q() {
        let m = Measures::default();
        let s = state("Na2", 0, NormMode::PaperFaithful);
        assert!(m.compute(MeasureKind::Renyi, &s, Space::Position, None, Method::Analytic).is_err());
        assert!(m
            .compute(MeasureKind::Fisher, &s, Space::Position, Some(2.0), Method::Analytic)
            .is_err());
    }
}
