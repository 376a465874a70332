use super::real::Real;
use super::{ln_binomial_int, ln_gamma};

/// Coefficients of a polynomial in ascending powers, `c[k]` multiplying `x^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyCoeffs(Vec<f64>);

impl PolyCoeffs {
    pub fn new(coeffs: Vec<f64>) -> Self {
        assert!(!coeffs.is_empty(), "a polynomial needs at least one coefficient");
        Self(coeffs)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

/// Generalized Laguerre polynomial `L_n^α(x)` by the three-term recurrence
/// `(k+1) L_{k+1} = (2k+1+α-x) L_k - (k+α) L_{k-1}`.
pub fn laguerre(n: u32, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let k = f64::from(k);
        let next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `(L_n^α(x), d/dx L_n^α(x))`, using `d/dx L_n^α = -L_{n-1}^{α+1}`.
pub fn laguerre_with_derivative(n: u32, alpha: f64, x: f64) -> (f64, f64) {
    let value = laguerre(n, alpha, x);
    let slope = if n == 0 {
        0.0
    } else {
        -laguerre(n - 1, alpha + 1.0, x)
    };
    (value, slope)
}

/// Explicit series `Σ_k (-1)^k C(n+α, n-k) x^k / k!`.
///
/// Independent of the recurrence in [`laguerre`]; kept as its cross-check and
/// generic so that it can be evaluated in extended precision.
pub fn laguerre_series<R: Real>(one: &R, n: u32, alpha: f64, x: f64) -> R {
    let n_us = n as usize;
    let mut coeffs = vec![one.zero_like(); n_us + 1];
    // a_n = (-1)^n / n!, then a_{k-1} = -a_k k (α+k) / (n-k+1)
    let mut a = one.clone();
    for k in 1..=n_us {
        a = a / one.lift(k as f64);
    }
    if n % 2 == 1 {
        a = -a;
    }
    coeffs[n_us] = a.clone();
    for k in (1..=n_us).rev() {
        let kf = k as f64;
        let num = one.lift(kf) * (one.lift(alpha) + one.lift(kf));
        a = -(a * num) / one.lift((n_us - k + 1) as f64);
        coeffs[k - 1] = a.clone();
    }
    let xr = one.lift(x);
    let mut pow = one.clone();
    let mut sum = one.zero_like();
    for c in coeffs {
        sum = sum + c * pow.clone();
        pow = pow * xr.clone();
    }
    sum
}

/// Coefficients of the orthonormal Laguerre polynomial
/// `L̃_n^α = sqrt(n!/Γ(n+α+1)) L_n^α`, i.e.
/// `c_k = sqrt(Γ(n+α+1)/n!) (-1)^k C(n,k) / Γ(α+k+1)`.
pub fn orthonormal_laguerre_coeffs(n: u32, alpha: f64) -> PolyCoeffs {
    let nf = f64::from(n);
    let half_norm = 0.5 * (ln_gamma(nf + alpha + 1.0) - ln_gamma(nf + 1.0));
    let coeffs = (0..=n)
        .map(|k| {
            let kf = f64::from(k);
            let mag = (half_norm - ln_gamma(alpha + kf + 1.0) + ln_binomial_int(n, k)).exp();
            if k % 2 == 0 {
                mag
            } else {
                -mag
            }
        })
        .collect();
    PolyCoeffs(coeffs)
}

/// `c(x)^s` by repeated convolution; `s = 0` gives the constant 1.
pub fn poly_power(c: &PolyCoeffs, s: u32) -> PolyCoeffs {
    PolyCoeffs(poly_power_in(&c.0, s))
}

pub(crate) fn poly_power_in<R: Real>(c: &[R], s: u32) -> Vec<R> {
    let mut acc = vec![c[0].one_like()];
    for _ in 0..s {
        acc = convolve(&acc, c);
    }
    acc
}

fn convolve<R: Real>(a: &[R], b: &[R]) -> Vec<R> {
    let zero = a[0].zero_like();
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + ai.clone() * bj.clone();
        }
    }
    out
}
