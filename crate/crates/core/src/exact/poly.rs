//! Dense univariate polynomials over an arbitrary exact coefficient ring.
//!
//! Two instantiations matter here:
//! * [`QPoly`]: polynomials in one variable over [`QuadExt`] (a field), used
//!   for gcd computations and as the coefficient ring of the next layer;
//! * [`BiPoly`]: polynomials in `t` whose coefficients are polynomials in the
//!   perturbation indeterminate `Q`, i.e. elements of `F[Q][t]`.
//!
//! The indeterminate `Q` is never a float on this path; transcendence over
//! the base field is structural.

use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::quad::QuadExt;
use crate::error::{Error, Result};

/// Coefficient rings usable under [`Poly`].
pub trait Ring:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + fmt::Debug
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + fmt::Debug
{
}

/// Dense polynomial, coefficients low-to-high, no trailing zeros.
#[derive(Clone, PartialEq)]
pub struct Poly<T: Ring> {
    coeffs: Vec<T>,
}

pub type QPoly = Poly<QuadExt>;
pub type BiPoly = Poly<QPoly>;

impl<T: Ring> Poly<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn evaluate(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut term = T::zero();
            for _ in 0..k {
                term = term + c.clone();
            }
            out.push(term);
        }
        Self::from_coeffs(out)
    }
}

impl<T: Ring> Zero for Poly<T> {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Poly<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

impl<T: Ring> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::from_coeffs(out)
    }
}

impl<T: Ring> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::from_coeffs(out)
    }
}

impl<T: Ring> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::from_coeffs(self.coeffs.into_iter().map(Neg::neg).collect())
    }
}

impl<T: Ring> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({c:?})*x^{k}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

// ---------------------------------------------------------------------------
// Field-coefficient helpers (QuadExt coefficients).

impl QPoly {
    pub fn from_rationals(coeffs: Vec<num_rational::BigRational>) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(QuadExt::from_rational).collect())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => {
                let inv = lead.inverse().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, den: &Self) -> Result<(Self, Self)> {
        let dd = den
            .degree()
            .ok_or_else(|| Error::InvalidParameter("division by zero polynomial".into()))?;
        let lead_inv = den.leading().unwrap().inverse().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![QuadExt::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap().clone() * lead_inv.clone();
            let shift = rd - dd;
            quot[shift] = factor.clone();
            rem = rem - den.scale(&factor).shifted(shift);
        }
        Ok((Self::from_coeffs(quot), rem))
    }

    fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![QuadExt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(coeffs)
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Content of a `QPoly` viewed as living over the rationals is irrelevant
    /// here; this is the gcd of all coefficients' fields sanity hook. Returns
    /// the common field discriminant if any coefficient carries one.
    pub fn field(&self) -> Option<i64> {
        self.coeffs.iter().find_map(|c| c.field())
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(QuadExt::to_f64).collect()
    }

    pub fn max_bit_size(&self) -> u64 {
        self.coeffs.iter().map(QuadExt::bit_size).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn qp(coeffs: &[i64]) -> QPoly {
        QPoly::from_rationals(
            coeffs
                .iter()
                .map(|&n| BigRational::from_integer(BigInt::from(n)))
                .collect(),
        )
    }

    #[test]
    fn mul_and_degree() {
        // (x + 1)(x - 1) = x^2 - 1
        let p = qp(&[1, 1]) * qp(&[-1, 1]);
        assert_eq!(p, qp(&[-1, 0, 1]));
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn div_rem_exact_and_with_remainder() {
        let num = qp(&[-1, 0, 1]); // x^2 - 1
        let (q, r) = num.div_rem(&qp(&[1, 1])).unwrap();
        assert_eq!(q, qp(&[-1, 1]));
        assert!(r.is_zero());

        let (q, r) = qp(&[1, 0, 1]).div_rem(&qp(&[1, 1])).unwrap();
        assert_eq!(q, qp(&[-1, 1]));
        assert_eq!(r, qp(&[2]));
    }

    #[test]
    fn gcd_is_monic() {
        // gcd(2x^2 - 2, 4x + 4) = x + 1
        let g = qp(&[-2, 0, 2]).gcd(&qp(&[4, 4]));
        assert_eq!(g, qp(&[1, 1]));
        // coprime
        let g = qp(&[-2, 0, 1]).gcd(&qp(&[0, 1]));
        assert!(g.is_one());
    }

    #[test]
    fn derivative_counts_multiplicity() {
        let p = qp(&[0, 0, 0, 2]); // 2x^3
        assert_eq!(p.derivative(), qp(&[0, 0, 6]));
    }
}
