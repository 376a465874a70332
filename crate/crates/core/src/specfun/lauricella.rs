//! Terminating Lauricella `F_A` with repeated parameters, and the
//! linearization coefficient `Θ₀` built from it.
//!
//! The symmetric function evaluated here is
//!
//! ```text
//! F = F_A^{(s+1)}[a; -n,…,-n, -k; c,…,c, 1; t,…,t, 1]
//!   = Σ_{j_1..j_s, i} (a)_{Σj + i} Π (-n)_{j_r} t^{j_r} / ((c)_{j_r} j_r!) · (-k)_i / (i! i!)
//! ```
//!
//! The `s` identical variables only enter through `J = Σ j_r`, so with
//! `T(y) = Σ_j (-n)_j / ((c)_j j!) y^j` the multi-sum collapses to
//! `Σ_J Σ_i (a)_{J+i} [y^J] T(y)^s t^J (-k)_i / (i!)²`.

use super::laguerre::poly_power_in;
use super::real::{certified_sum, CertifiedSum, Real};
use super::{ln_binomial, ln_gamma};

/// `T_j = (-n)_j / ((c)_j j!)` for `j = 0..=n`.
///
/// `(-n)_j / j! = (-1)^j C(n, j)` is formed from exact integer factors so the
/// series terminates exactly.
pub(crate) fn hypergeometric_coeffs<R: Real>(one: &R, n: u32, c: f64) -> Vec<R> {
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    let mut cur = one.clone();
    coeffs.push(cur.clone());
    let cr = one.lift(c);
    for j in 0..n {
        let jf = f64::from(j);
        let num = one.lift(jf - f64::from(n));
        let den = (cr.clone() + one.lift(jf)) * one.lift(jf + 1.0);
        cur = cur * num / den;
        coeffs.push(cur.clone());
    }
    coeffs
}

/// Collapsed symmetric sum in working precision; returns the sum and
/// `log2` of its largest term.
pub(crate) fn symmetric_sum<R: Real>(
    one: &R,
    a: f64,
    n: u32,
    c: f64,
    s: u32,
    k: u32,
    t: f64,
) -> (R, f64) {
    let tcoef = hypergeometric_coeffs(one, n, c);
    let power = poly_power_in(&tcoef, s);

    // (-k)_i / (i! i!)
    let mut last = Vec::with_capacity(k as usize + 1);
    let mut w = one.clone();
    last.push(w.clone());
    for i in 0..k {
        let fi = f64::from(i);
        w = w * one.lift(fi - f64::from(k)) / (one.lift(fi + 1.0) * one.lift(fi + 1.0));
        last.push(w.clone());
    }

    let top = power.len() + k as usize;
    let ar = one.lift(a);
    let mut poch = Vec::with_capacity(top);
    let mut p = one.clone();
    for m in 0..top {
        poch.push(p.clone());
        p = p * (ar.clone() + one.lift(m as f64));
    }

    let tr = one.lift(t);
    let mut tpow = one.clone();
    let mut sum = one.zero_like();
    let mut log2_max = f64::NEG_INFINITY;
    for (big_j, coef) in power.iter().enumerate() {
        for (i, wi) in last.iter().enumerate() {
            let term = poch[big_j + i].clone() * coef.clone() * tpow.clone() * wi.clone();
            log2_max = log2_max.max(term.log2_abs());
            sum = sum + term;
        }
        tpow = tpow * tr.clone();
    }
    (sum, log2_max)
}

/// Symmetric terminating Lauricella function (see the module docs), with the
/// precision raised until cancellation is under control.
pub fn lauricella_fa_symmetric(a: f64, n: u32, c: f64, s: u32, k: u32, t: f64) -> f64 {
    lauricella_fa_symmetric_certified(a, n, c, s, k, t).value
}

pub fn lauricella_fa_symmetric_certified(
    a: f64,
    n: u32,
    c: f64,
    s: u32,
    k: u32,
    t: f64,
) -> CertifiedSum {
    certified_sum(|one| symmetric_sum(one, a, n, c, s, k, t))
}

/// Literal `(n+1)^s (k+1)`-term nested sum of the same function. Only usable
/// for small `n` and `s`; serves as an independent check of the reduction.
pub fn lauricella_fa_naive<R: Real>(
    one: &R,
    a: f64,
    n: u32,
    c: f64,
    s: u32,
    k: u32,
    t: f64,
) -> R {
    let single = hypergeometric_coeffs(one, n, c);
    let ar = one.lift(a);
    let poch = |m: usize| {
        (0..m).fold(one.clone(), |acc, i| acc * (ar.clone() + one.lift(i as f64)))
    };
    let tr = one.lift(t);
    let mut idx = vec![0u32; s as usize];
    let mut total = one.zero_like();
    loop {
        let big_j: u32 = idx.iter().sum();
        let mut prod = one.clone();
        for &j in &idx {
            prod = prod * single[j as usize].clone();
        }
        for _ in 0..big_j {
            prod = prod * tr.clone();
        }
        let mut w = one.clone();
        for i in 0..=k {
            if i > 0 {
                let fi = f64::from(i - 1);
                w = w * one.lift(fi - f64::from(k)) / (one.lift(fi + 1.0) * one.lift(fi + 1.0));
            }
            total = total + poch((big_j + i) as usize) * prod.clone() * w.clone();
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return total;
            }
            if idx[pos] < n {
                idx[pos] += 1;
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// `ln Θ₀` for integer order `q`:
/// `Γ(qγ+3/2) C(n+γ+1/2, n)^{2q} F_A^{(2q+1)}[qγ+3/2; -n,…,-n, 0; γ+3/2,…,γ+3/2, 1; 1/q,…,1/q, 1]`.
pub fn ln_theta0(q: u32, n: u32, gamma_ell: f64) -> f64 {
    ln_theta0_certified(q, n, gamma_ell).0
}

/// [`ln_theta0`] together with the certification of its Lauricella factor.
pub fn ln_theta0_certified(q: u32, n: u32, gamma_ell: f64) -> (f64, CertifiedSum) {
    assert!(q >= 1, "Θ₀ needs an integer order q ≥ 1");
    let qf = f64::from(q);
    let a = qf * gamma_ell + 1.5;
    let fa = lauricella_fa_symmetric_certified(a, n, gamma_ell + 1.5, 2 * q, 0, 1.0 / qf);
    let ln = ln_gamma(a) + 2.0 * qf * ln_binomial(f64::from(n) + gamma_ell + 0.5, n) + fa.value.ln();
    (ln, fa)
}

pub fn theta0(q: u32, n: u32, gamma_ell: f64) -> f64 {
    ln_theta0(q, n, gamma_ell).exp()
}
