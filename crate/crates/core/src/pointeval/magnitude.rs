use std::cmp::Ordering;
use std::fmt;
use std::ops::{Div, Mul};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// A nonnegative real held as its natural logarithm.
///
/// Exact zero is the `-inf` sentinel; NaN is never stored.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ScaledMagnitude {
    ln: f64,
}

impl ScaledMagnitude {
    pub const ZERO: Self = Self { ln: f64::NEG_INFINITY };
    pub const ONE: Self = Self { ln: 0.0 };

    /// Wraps a log-value. Panics on NaN or `+inf`.
    pub fn from_ln(ln: f64) -> Self {
        assert!(!ln.is_nan() && ln != f64::INFINITY, "invalid log-magnitude {ln}");
        Self { ln }
    }

    /// Magnitude of `x`; the sign is dropped.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "non-finite magnitude {x}");
        Self { ln: x.abs().ln() }
    }

    pub fn from_bigint(x: &BigInt) -> Self {
        Self { ln: ln_abs_bigint(x) }
    }

    pub fn ln(self) -> f64 {
        self.ln
    }

    pub fn is_zero(self) -> bool {
        self.ln == f64::NEG_INFINITY
    }

    /// Plain value; overflows to `inf` past about `e^709`.
    pub fn to_f64(self) -> f64 {
        self.ln.exp()
    }

    /// `self^p` for `p > 0`.
    pub fn powf(self, p: f64) -> Self {
        assert!(p > 0.0, "exponent must be positive");
        Self { ln: self.ln * p }
    }

    /// `self + other` by log-sum-exp.
    pub fn add(self, other: Self) -> Self {
        let (hi, lo) = if self.ln >= other.ln { (self, other) } else { (other, self) };
        if lo.is_zero() {
            return hi;
        }
        Self {
            ln: hi.ln + (lo.ln - hi.ln).exp().ln_1p(),
        }
    }

    /// `self / other` as a plain float, the usual form of an asymptotic ratio.
    pub fn ratio(self, other: Self) -> f64 {
        (self.ln - other.ln).exp()
    }
}

impl Mul for ScaledMagnitude {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::ZERO;
        }
        Self { ln: self.ln + rhs.ln }
    }
}

impl Div for ScaledMagnitude {
    type Output = Self;

    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by a zero magnitude");
        if self.is_zero() {
            return Self::ZERO;
        }
        Self { ln: self.ln - rhs.ln }
    }
}

impl PartialOrd for ScaledMagnitude {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.ln.partial_cmp(&other.ln)
    }
}

impl fmt::Display for ScaledMagnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let log10 = self.ln / std::f64::consts::LN_10;
        let mut exp = log10.floor();
        let mut mantissa = 10f64.powf(log10 - exp);
        if mantissa >= 9.9999999995 {
            mantissa /= 10.0;
            exp += 1.0;
        }
        write!(f, "{:.9}e{}", mantissa, exp as i64)
    }
}

/// Natural log of `|x|`, `-inf` for zero, valid far beyond the `f64` range.
pub fn ln_abs_bigint(x: &BigInt) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let mag = x.abs();
    let bits = mag.bits();
    if bits <= 1000 {
        return mag.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    let top = (&mag >> shift).to_f64().expect("64-bit head");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}
