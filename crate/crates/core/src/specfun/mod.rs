//! Special-function kernel.

pub mod bell;
pub mod laguerre;
pub mod lauricella;
pub mod moments;
pub mod real;

pub use bell::{
    bell_polynomial, bell_polynomial_by_partitions, power_coeffs_via_bell, power_coeffs_via_bell_in,
};
pub use laguerre::{
    laguerre, laguerre_series, laguerre_with_derivative, orthonormal_laguerre_coeffs,
    poly_power, PolyCoeffs,
};
pub use lauricella::{
    lauricella_fa_naive, lauricella_fa_symmetric, lauricella_fa_symmetric_certified, ln_theta0,
    ln_theta0_certified,
    theta0,
};
pub use moments::{ln_laguerre_power_moment, ln_laguerre_power_moment_bell, LnMoment};
pub use real::{certified_sum, CertifiedSum, Mp, Real};

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0, "ln_gamma needs a positive argument, got {x}");
    statrs::function::gamma::ln_gamma(x)
}

/// Digamma `ψ(x)`.
pub fn digamma(x: f64) -> f64 {
    statrs::function::gamma::digamma(x)
}

/// Pochhammer symbol `(a)_j = Γ(a+j)/Γ(a)`.
///
/// Non-positive `a` is handled as a finite product so that `(-n)_j = 0` for
/// `j > n` exactly; positive `a` goes through log-gamma.
pub fn pochhammer(a: f64, j: u32) -> f64 {
    if a <= 0.0 {
        return (0..j).map(|i| a + f64::from(i)).product();
    }
    (ln_gamma(a + f64::from(j)) - ln_gamma(a)).exp()
}

/// `ln C(a, k) = ln Γ(a+1) - ln Γ(k+1) - ln Γ(a-k+1)` for real `a > k - 1`.
pub fn ln_binomial(a: f64, k: u32) -> f64 {
    let kf = f64::from(k);
    ln_gamma(a + 1.0) - ln_gamma(kf + 1.0) - ln_gamma(a - kf + 1.0)
}

pub(crate) fn ln_binomial_int(n: u32, k: u32) -> f64 {
    ln_binomial(f64::from(n), k)
}
