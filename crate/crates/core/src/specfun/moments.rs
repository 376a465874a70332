//! Moments `∫_0^∞ y^{a-1} e^{-b y} [L_n^α(y)]^s dy` of Laguerre powers.
//!
//! Every entropic moment of a pseudoharmonic density reduces to this
//! integral after the substitution `y = h x²`. Writing
//! `L_n^α = C(n+α, n) T(y)` with `T_j = (-n)_j / ((α+1)_j j!)`, termwise
//! integration gives
//!
//! ```text
//! Γ(a) b^{-a} C(n+α, n)^s Σ_J [y^J] T(y)^s (a)_J b^{-J}
//! ```
//!
//! The sum is a symmetric terminating Lauricella function. It alternates
//! in sign and is evaluated through [`certified_sum`]. Two routes to the
//! coefficients of `T^s` are offered: repeated convolution (the Lauricella
//! reduction) and partial Bell polynomials.

use super::bell::power_coeffs_via_bell_in;
use super::lauricella::{hypergeometric_coeffs, symmetric_sum};
use super::real::{certified_sum, CertifiedSum, Real};
use super::{ln_binomial, ln_gamma};

/// Natural log of the moment together with the certification of its
/// hypergeometric factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LnMoment {
    pub ln_value: f64,
    pub sum: CertifiedSum,
}

fn assemble(a: f64, n: u32, alpha: f64, s: u32, b: f64, sum: CertifiedSum) -> LnMoment {
    let ln_value = ln_gamma(a) - a * b.ln() + f64::from(s) * ln_binomial(f64::from(n) + alpha, n)
        + sum.value.ln();
    LnMoment { ln_value, sum }
}

fn check_args(a: f64, alpha: f64, b: f64) {
    assert!(a > 0.0, "moment exponent must be positive, got {a}");
    assert!(alpha > -1.0, "Laguerre parameter must exceed -1, got {alpha}");
    assert!(b > 0.0, "decay rate must be positive, got {b}");
}

/// Moment via the symmetric Lauricella reduction.
pub fn ln_laguerre_power_moment(a: f64, n: u32, alpha: f64, s: u32, b: f64) -> LnMoment {
    check_args(a, alpha, b);
    let sum = certified_sum(|one| symmetric_sum(one, a, n, alpha + 1.0, s, 0, 1.0 / b));
    assemble(a, n, alpha, s, b, sum)
}

/// Moment via the Bell-polynomial expansion of `T(y)^s`.
pub fn ln_laguerre_power_moment_bell(a: f64, n: u32, alpha: f64, s: u32, b: f64) -> LnMoment {
    check_args(a, alpha, b);
    let sum = certified_sum(|one| bell_sum(one, a, n, alpha, s, 1.0 / b));
    assemble(a, n, alpha, s, b, sum)
}

fn bell_sum<R: Real>(one: &R, a: f64, n: u32, alpha: f64, s: u32, t: f64) -> (R, f64) {
    let tcoef = hypergeometric_coeffs(one, n, alpha + 1.0);
    let power = power_coeffs_via_bell_in(one, &tcoef, s as usize);
    let ar = one.lift(a);
    let tr = one.lift(t);
    // running (a)_k t^k
    let mut weight = one.clone();
    let mut sum = one.zero_like();
    let mut log2_max = f64::NEG_INFINITY;
    for (k, coef) in power.into_iter().enumerate() {
        let term = coef * weight.clone();
        log2_max = log2_max.max(term.log2_abs());
        sum = sum + term;
        weight = weight * (ar.clone() + one.lift(k as f64)) * tr.clone();
    }
    (sum, log2_max)
}
