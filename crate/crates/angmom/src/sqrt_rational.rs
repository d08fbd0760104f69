use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::BigRational;

/// Exact value of the form `sign * sqrt(p/q)` with big-integer `p`, `q`.
///
/// The coupling coefficients produced by Racah's formulas are square roots
/// of rationals up to sign, so this type closes their arithmetic exactly.
/// Internally the value is the signed rational `sign * p/q` in lowest
/// terms; selection-rule zeros are exact (`sign = 0`), never small floats.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SqrtRational {
    signed_radicand: BigRational,
}

impl SqrtRational {
    pub fn zero() -> Self {
        SqrtRational { signed_radicand: BigRational::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.signed_radicand.is_zero()
    }

    /// `sqrt(radicand)` for `radicand >= 0`.
    pub fn sqrt_of(radicand: BigRational) -> Self {
        assert!(!radicand.is_negative(), "radicand must be nonnegative");
        SqrtRational { signed_radicand: radicand }
    }

    /// `scale * sqrt(radicand)` for `radicand >= 0`.
    ///
    /// This is the shape every Racah sum produces: a rational prefactor
    /// times the square root of a rational.
    pub fn scale_sqrt(scale: BigRational, radicand: BigRational) -> Self {
        assert!(!radicand.is_negative(), "radicand must be nonnegative");
        let magnitude = &scale * &scale * radicand;
        let signed = if scale.is_negative() { -magnitude } else { magnitude };
        SqrtRational { signed_radicand: signed }
    }

    /// Embeds an exact rational, `q = sign(q) * sqrt(q^2)`.
    pub fn from_ratio(q: BigRational) -> Self {
        Self::scale_sqrt(q, BigRational::from_integer(BigInt::from(1)))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_ratio(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn sign(&self) -> i8 {
        if self.signed_radicand.is_zero() {
            0
        } else if self.signed_radicand.is_negative() {
            -1
        } else {
            1
        }
    }

    /// The radicand `p/q >= 0` in lowest terms.
    pub fn radicand(&self) -> BigRational {
        self.signed_radicand.abs()
    }

    /// The exact square of the value (a rational).
    pub fn squared(&self) -> BigRational {
        self.radicand()
    }

    pub fn abs(&self) -> Self {
        SqrtRational { signed_radicand: self.radicand() }
    }

    pub fn to_f64(&self) -> f64 {
        f64::from(self.sign()) * sqrt_ratio_to_f64(&self.radicand())
    }

    /// Exact sum when the two radicands differ by the square of a rational,
    /// so the result is again of the form `sign * sqrt(p/q)`.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        let r1 = self.radicand();
        let r2 = other.radicand();
        let ratio = r1 / &r2;
        let root_num = ratio.numer().sqrt();
        if &root_num * &root_num != *ratio.numer() {
            return None;
        }
        let root_den = ratio.denom().sqrt();
        if &root_den * &root_den != *ratio.denom() {
            return None;
        }
        // self + other = (s1 * sqrt(ratio) + s2) * sqrt(r2)
        let root = BigRational::new(root_num, root_den);
        let s1 = BigRational::from_integer(BigInt::from(self.sign()));
        let s2 = BigRational::from_integer(BigInt::from(other.sign()));
        let scale = s1 * root + s2;
        Some(Self::scale_sqrt(scale, r2))
    }
}

impl Mul for SqrtRational {
    type Output = SqrtRational;
    fn mul(self, rhs: SqrtRational) -> SqrtRational {
        // (s1 sqrt(r1)) * (s2 sqrt(r2)) = s1 s2 sqrt(r1 r2); the signed
        // radicands multiply directly.
        SqrtRational { signed_radicand: self.signed_radicand * rhs.signed_radicand }
    }
}

impl Mul<&SqrtRational> for &SqrtRational {
    type Output = SqrtRational;
    fn mul(self, rhs: &SqrtRational) -> SqrtRational {
        SqrtRational { signed_radicand: &self.signed_radicand * &rhs.signed_radicand }
    }
}

impl Neg for SqrtRational {
    type Output = SqrtRational;
    fn neg(self) -> SqrtRational {
        SqrtRational { signed_radicand: -self.signed_radicand }
    }
}

impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign() {
            0 => write!(f, "0"),
            -1 => write!(f, "-sqrt({})", self.radicand()),
            _ => write!(f, "sqrt({})", self.radicand()),
        }
    }
}

/// `f64` value of a big rational, stable far beyond the range where
/// numerator and denominator individually overflow a double.
pub fn ratio_to_f64(r: &BigRational) -> f64 {
    scaled_quotient(r.numer(), r.denom(), false)
}

/// `sqrt(p/q)` as `f64` without materializing `p/q` in floating point,
/// so radicands up to squared-factorial scale stay finite.
pub fn sqrt_ratio_to_f64(r: &BigRational) -> f64 {
    assert!(!r.is_negative(), "radicand must be nonnegative");
    scaled_quotient(r.numer(), r.denom(), true)
}

fn scaled_quotient(num: &BigInt, den: &BigInt, sqrt: bool) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let negative = num.is_negative();
    let num = num.abs();
    // Scale by a power of two so the integer quotient keeps ~128
    // significant bits, then convert and undo the scaling.
    let mut shift = 128 - (num.bits() as i64 - den.bits() as i64);
    if sqrt && shift % 2 != 0 {
        shift += 1;
    }
    let quotient: BigInt = if shift >= 0 {
        (num << shift as u64) / den
    } else {
        num / (den << (-shift) as u64)
    };
    let q = quotient.to_f64().unwrap_or(f64::INFINITY);
    let value = if sqrt {
        q.sqrt() * 2f64.powi((-shift / 2) as i32)
    } else {
        q * 2f64.powi(-shift as i32)
    };
    if negative {
        -value
    } else {
        value
    }
}
