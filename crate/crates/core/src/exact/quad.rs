//! Exact arithmetic in quadratic extensions of the rationals.
//!
//! A [`QuadExt`] is an element `a + b*sqrt(d)` with rational `a`, `b` and a
//! square-free integer `d > 1`. Plain rationals are represented with `b = 0`
//! and `d = 0`; mixing elements from two different genuine extensions is an
//! error surfaced by the arithmetic helpers (the operator impls panic, the
//! pipeline validates fields up front).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Marker value of `d` for elements with no radical part.
const NO_FIELD: i64 = 0;

/// Element of Q or of a real quadratic field Q(sqrt(d)).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: BigRational,
    b: BigRational,
    /// Square-free `d` of the ambient field; 0 when `b = 0` and the element
    /// is a plain rational.
    d: i64,
}

impl QuadExt {
    pub fn new(a: BigRational, b: BigRational, d: i64) -> Result<Self> {
        if d == 1 || d < 0 {
            return Err(Error::InvalidParameter(format!(
                "field discriminant must be 0 or an integer > 1, got {d}"
            )));
        }
        if !b.is_zero() && d == 0 {
            return Err(Error::InvalidParameter(
                "nonzero radical part requires a field discriminant".into(),
            ));
        }
        Ok(Self::normalized(a, b, d))
    }

    fn normalized(a: BigRational, b: BigRational, d: i64) -> Self {
        if b.is_zero() {
            Self { a, b, d: NO_FIELD }
        } else {
            Self { a, b, d }
        }
    }

    pub fn from_rational(a: BigRational) -> Self {
        Self { a, b: BigRational::zero(), d: NO_FIELD }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `sqrt(d)` itself, with `d` reduced to its square-free part by the caller.
    pub fn sqrt_d(d: i64) -> Result<Self> {
        Self::new(BigRational::zero(), BigRational::one(), d)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.b
    }

    /// Field discriminant, `None` for plain rationals.
    pub fn field(&self) -> Option<i64> {
        if self.d == NO_FIELD {
            None
        } else {
            Some(self.d)
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    /// The Galois conjugate `a - b*sqrt(d)`.
    pub fn conjugate(&self) -> Self {
        Self::normalized(self.a.clone(), -self.b.clone(), self.d)
    }

    pub fn to_f64(&self) -> f64 {
        let a = rational_to_f64(&self.a);
        if self.b.is_zero() {
            a
        } else {
            a + rational_to_f64(&self.b) * (self.d as f64).sqrt()
        }
    }

    /// Largest bit length among the numerators and denominators of the two
    /// rational coordinates. Used by the coefficient-growth guard.
    pub fn bit_size(&self) -> u64 {
        let bits = |r: &BigRational| r.numer().bits().max(r.denom().bits());
        bits(&self.a).max(bits(&self.b))
    }

    fn unify_field(&self, other: &Self) -> Result<i64> {
        match (self.d, other.d) {
            (NO_FIELD, d) | (d, NO_FIELD) => Ok(d),
            (d1, d2) if d1 == d2 => Ok(d1),
            (d1, d2) => Err(Error::FieldMismatch(d1, d2)),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let d = self.unify_field(other)?;
        Ok(Self::normalized(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let d = self.unify_field(other)?;
        Ok(Self::normalized(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let d = self.unify_field(other)?;
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 + d b1 b2 + (a1 b2 + a2 b1) s
        let a = &self.a * &other.a + BigRational::from_integer(BigInt::from(d)) * &self.b * &other.b;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::normalized(a, b, d))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // 1/(a + b s) = (a - b s)/(a^2 - d b^2); the norm is nonzero because
        // d is not a perfect square.
        let norm = &self.a * &self.a
            - BigRational::from_integer(BigInt::from(self.d)) * &self.b * &self.b;
        debug_assert!(!norm.is_zero(), "norm vanished: d must not be a square");
        Some(Self::normalized(&self.a / &norm, -(&self.b / &norm), self.d))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let inv = other
            .inverse()
            .ok_or_else(|| Error::InvalidParameter("division by zero".into()))?;
        self.checked_mul(&inv)
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        Self::from_rational(BigRational::one())
    }
    fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: QuadExt) -> QuadExt {
        self.checked_add(&rhs).expect("field mismatch in add")
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: QuadExt) -> QuadExt {
        self.checked_sub(&rhs).expect("field mismatch in sub")
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: QuadExt) -> QuadExt {
        self.checked_mul(&rhs).expect("field mismatch in mul")
    }
}

impl Div for QuadExt {
    type Output = QuadExt;
    fn div(self, rhs: QuadExt) -> QuadExt {
        self.checked_div(&rhs).expect("field mismatch or zero divisor in div")
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::normalized(-self.a, -self.b, self.d)
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt({})", self.b, self.d);
        }
        if self.b.is_negative() {
            write!(f, "{} - {}*sqrt({})", self.a, -self.b.clone(), self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

/// Splits a positive integer into `s^2 * d` with `d` square-free and returns
/// `(s, d)`. Trial division up to a fixed bound; a huge residual cofactor is
/// kept as-is after a perfect-square check, which preserves the field axioms
/// (only squareness of `d` would break them).
pub fn square_free_split(n: &BigInt) -> Result<(BigInt, i64)> {
    if !n.is_positive() {
        return Err(Error::InvalidParameter(
            "square-free split requires a positive integer".into(),
        ));
    }
    let mut s = BigInt::one();
    let mut d = BigInt::one();
    let mut m = n.clone();
    let mut p = BigInt::from(2);
    let bound = BigInt::from(1_000_000u32);
    while &p * &p <= m && p <= bound {
        let mut count = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            count += 1;
        }
        if count > 0 {
            if count % 2 == 1 {
                d *= &p;
            }
            for _ in 0..count / 2 {
                s *= &p;
            }
        }
        p += 1;
    }
    if m > BigInt::one() {
        // Residual cofactor: extract it entirely if it is a perfect square.
        let r = num_integer::Roots::sqrt(&m);
        if &r * &r == m {
            s *= r;
        } else {
            d *= m;
        }
    }
    let d_i64 = num_traits::ToPrimitive::to_i64(&d)
        .ok_or_else(|| Error::UnsupportedField(format!("discriminant too large: {d}")))?;
    Ok((s, d_i64))
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    // BigRational::to_f64 via num-traits.
    num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

/// Parses "3", "-7/2", "0.25", "1e-3"-free decimal forms into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let err = || Error::Parse(format!("not an exact rational: {s:?}"));
    if s.is_empty() {
        return Err(err());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| err())?;
        let d: BigInt = den.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let i: BigInt = if int.is_empty() || int == "-" {
            BigInt::zero()
        } else {
            int.parse().map_err(|_| err())?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let f: BigInt = frac.parse().map_err(|_| err())?;
        let numer = &i * &scale + if neg { -f } else { f };
        return Ok(BigRational::new(numer, scale));
    }
    let n: BigInt = s.parse().map_err(|_| err())?;
    Ok(BigRational::from_integer(n))
}

/// Canonical exact string for a rational: integer or "p/q".
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn arithmetic_in_q_sqrt2() {
        let x = QuadExt::new(rat(1, 1), rat(1, 1), 2).unwrap(); // 1 + sqrt 2
        let y = x.clone() * x.clone(); // 3 + 2 sqrt 2
        assert_eq!(y.rational_part(), &rat(3, 1));
        assert_eq!(y.radical_part(), &rat(2, 1));
        let inv = x.inverse().unwrap(); // -1 + sqrt 2
        assert_eq!(inv.rational_part(), &rat(-1, 1));
        assert_eq!(inv.radical_part(), &rat(1, 1));
        assert!((x * inv).is_one());
    }

    #[test]
    fn conjugation_is_an_automorphism() {
        let x = QuadExt::new(rat(2, 3), rat(-1, 5), 13).unwrap();
        let y = QuadExt::new(rat(-4, 7), rat(2, 1), 13).unwrap();
        let lhs = x.clone().mul(y.clone()).conjugate();
        let rhs = x.conjugate() * y.conjugate();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_collapse_drops_field_tag() {
        let x = QuadExt::new(rat(0, 1), rat(1, 1), 5).unwrap();
        let y = x.clone() - x; // 0, must compare equal to plain zero
        assert!(y.is_zero());
        assert_eq!(y, QuadExt::zero());
    }

    #[test]
    fn field_mismatch_is_detected() {
        let x = QuadExt::sqrt_d(2).unwrap();
        let y = QuadExt::sqrt_d(3).unwrap();
        assert!(matches!(x.checked_add(&y), Err(Error::FieldMismatch(2, 3))));
    }

    #[test]
    fn square_free_split_small() {
        let (s, d) = square_free_split(&BigInt::from(8)).unwrap();
        assert_eq!((s, d), (BigInt::from(2), 2));
        let (s, d) = square_free_split(&BigInt::from(5)).unwrap();
        assert_eq!((s, d), (BigInt::from(1), 5));
        let (s, d) = square_free_split(&BigInt::from(36)).unwrap();
        assert_eq!((s, d), (BigInt::from(6), 1));
    }

    #[test]
    fn parse_and_format_rationals() {
        assert_eq!(parse_rational("3").unwrap(), rat(3, 1));
        assert_eq!(parse_rational("-7/2").unwrap(), rat(-7, 2));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert!(parse_rational("1e5").is_err());
        assert_eq!(format_rational(&rat(-7, 2)), "-7/2");
        assert_eq!(format_rational(&rat(4, 2)), "2");
    }
}
