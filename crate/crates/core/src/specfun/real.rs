//! Scalar abstraction shared by the f64 and extended-precision code paths.
//!
//! The terminating hypergeometric sums in this crate alternate in sign and
//! lose up to ~100 decimal digits to cancellation at the largest orders we
//! support. Every routine that forms such a sum is generic over [`Real`] and
//! can run either in `f64` or in a binary [`Mp`] float of chosen precision.

use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::{round::mode::HalfEven, FBig};

/// Binary arbitrary-precision float used for cancellation-prone sums.
pub type Mp = FBig<HalfEven, 2>;

pub trait Real:
    Clone
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// `x` at the working precision of `self`.
    fn lift(&self, x: f64) -> Self;

    fn to_f64(&self) -> f64;

    /// `log2 |self|`, or `-inf` for zero. Only needs to be accurate to a bit.
    fn log2_abs(&self) -> f64;

    fn zero_like(&self) -> Self {
        self.lift(0.0)
    }

    fn one_like(&self) -> Self {
        self.lift(1.0)
    }
}

impl Real for f64 {
    fn lift(&self, x: f64) -> Self {
        x
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn log2_abs(&self) -> f64 {
        self.abs().log2()
    }
}

impl Real for Mp {
    fn lift(&self, x: f64) -> Self {
        let exact = Mp::try_from(x).expect("finite constant");
        exact.with_precision(self.precision().max(64)).value()
    }

    fn to_f64(&self) -> f64 {
        self.to_f64().value()
    }

    fn log2_abs(&self) -> f64 {
        let repr = self.repr();
        if repr.significand().is_zero() {
            return f64::NEG_INFINITY;
        }
        repr.exponent() as f64 + repr.digits() as f64
    }
}

/// Unit value carrying `bits` of working precision.
pub fn mp_one(bits: usize) -> Mp {
    Mp::ONE.with_precision(bits).value()
}

/// A sum evaluated with enough precision to survive its own cancellation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertifiedSum {
    pub value: f64,
    /// Bound on the relative rounding error of `value`.
    pub rel_err: f64,
    /// Working precision that was finally used.
    pub bits: usize,
    /// `log2(max |term| / |sum|)`, i.e. bits lost to cancellation.
    pub lost_bits: f64,
}

const START_BITS: usize = 128;
const MAX_BITS: usize = 8192;
/// Bits that must survive cancellation before a result is accepted.
const GUARD_BITS: f64 = 64.0;

/// Runs `eval` at increasing precision until the result keeps at least
/// [`GUARD_BITS`] significant bits after cancellation.
///
/// `eval` receives a unit value at the working precision and returns the sum
/// together with `log2` of its largest term.
pub fn certified_sum<F>(eval: F) -> CertifiedSum
where
    F: Fn(&Mp) -> (Mp, f64),
{
    let mut bits = START_BITS;
    loop {
        let one = mp_one(bits);
        let (sum, log2_max) = eval(&one);
        let lost = (log2_max - sum.log2_abs()).max(0.0);
        let kept = bits as f64 - lost;
        if kept >= GUARD_BITS || bits >= MAX_BITS {
            let value = Real::to_f64(&sum);
            let rel_err = if value == 0.0 {
                f64::INFINITY
            } else {
                (-kept).exp2().max(f64::EPSILON)
            };
            return CertifiedSum {
                value,
                rel_err,
                bits,
                lost_bits: lost,
            };
        }
        let needed = (lost + 2.0 * GUARD_BITS).ceil() as usize;
        bits = needed.max(2 * bits).min(MAX_BITS);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lift_keeps_working_precision() {
        let one = mp_one(300);
        let third = one.clone() / one.lift(3.0);
        assert_eq!(third.precision(), 300);
        assert!((Real::to_f64(&third) - 1.0 / 3.0).abs() < 1e-17);
    }

    #[test]
    fn log2_abs_brackets_magnitude() {
        let one = mp_one(200);
        for &x in &[1.0, 3.5, 1e-30, -7e40] {
            let l = one.lift(x).log2_abs();
            assert!((l - x.abs().log2()).abs() <= 1.0, "{x}: {l}");
        }
        assert_eq!(one.zero_like().log2_abs(), f64::NEG_INFINITY);
    }

    #[test]
    fn certified_sum_recovers_cancelled_value() {
        // (1e40 + 1) - 1e40 = 1 needs ~133 bits
        let s = certified_sum(|one| {
            let big = one.lift(1e40);
            (big.clone() + one.clone() - big, 1e40f64.log2())
        });
        assert_eq!(s.value, 1.0);
        assert!(s.bits > 133);
        assert!(s.lost_bits > 130.0);
    }
}
