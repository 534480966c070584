//! Operations on `F[Q][t]`: exact division, trace extraction, evaluation,
//! the linear-in-Q irreducibility test, and a subresultant-style gcd used by
//! the square-freeness property checks.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{BiPoly, Poly, QPoly};
use super::quad::QuadExt;
use crate::error::{Error, Result};

/// Trace of a monic polynomial split as `q_coeff * Q + field_part`.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceSplit {
    pub q_coeff: BigRational,
    pub field_part: QuadExt,
}

impl BiPoly {
    /// Degree in `t`; `None` for the zero polynomial.
    pub fn t_degree(&self) -> Option<usize> {
        self.degree()
    }

    /// Degree in `Q` across all `t`-coefficients; `None` for zero.
    pub fn q_degree(&self) -> Option<usize> {
        self.coeffs().iter().filter_map(|c| c.degree()).max()
    }

    pub fn is_monic_in_t(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Lift of a `Q`-free polynomial into `F[Q][t]`.
    pub fn from_qpoly_in_t(p: &QPoly) -> Self {
        Poly::from_coeffs(p.coeffs().iter().map(|c| QPoly::constant(c.clone())).collect())
    }

    /// The polynomial `t - Q`.
    pub fn t_minus_q() -> Self {
        Poly::from_coeffs(vec![
            Poly::monomial(-QuadExt::one(), 1),
            QPoly::one(),
        ])
    }

    /// Exact quotient `self / den` for `den` monic in `t`; errors with
    /// `NotAFactor` if the remainder is nonzero.
    pub fn divide_exact(&self, den: &Self) -> Result<Self> {
        if !den.is_monic_in_t() {
            return Err(Error::NonMonic);
        }
        let dd = den.t_degree().expect("monic polynomial is nonzero");
        let mut rem = self.clone();
        let nd = match rem.t_degree() {
            None => return Err(Error::NotAFactor),
            Some(nd) if nd < dd => return Err(Error::NotAFactor),
            Some(nd) => nd,
        };
        let mut quot = vec![QPoly::zero(); nd - dd + 1];
        while let Some(rd) = rem.t_degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap().clone();
            let shift = rd - dd;
            quot[shift] = factor.clone();
            let sub = den.scale(&factor).shift_t(shift);
            rem = rem - sub;
        }
        if !rem.is_zero() {
            return Err(Error::NotAFactor);
        }
        Ok(Poly::from_coeffs(quot))
    }

    fn shift_t(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![QPoly::zero(); k];
        coeffs.extend(self.coeffs().iter().cloned());
        Poly::from_coeffs(coeffs)
    }

    /// Trace (sum of roots) of a monic polynomial: the negated coefficient of
    /// `t^{deg-1}`, split into its `Q`-linear and field parts. Errors if the
    /// input is not monic in `t`, if the trace is not linear in `Q`, or if
    /// the `Q`-coefficient is not rational.
    pub fn trace_split(&self) -> Result<TraceSplit> {
        if !self.is_monic_in_t() {
            return Err(Error::NonMonic);
        }
        let deg = self.t_degree().unwrap();
        if deg < 1 {
            return Err(Error::InvalidShape("trace needs t-degree >= 1".into()));
        }
        let tr = -self.coeff(deg - 1);
        if tr.degree().is_some_and(|d| d > 1) {
            return Err(Error::InvalidShape("trace is not linear in Q".into()));
        }
        let q_part = tr.coeff(1);
        let q_coeff = q_part
            .as_rational()
            .cloned()
            .ok_or_else(|| Error::InvalidShape("Q-coefficient of trace is irrational".into()))?;
        Ok(TraceSplit { q_coeff, field_part: tr.coeff(0) })
    }

    /// Floating-point coefficients in `t` after substituting `Q = q`.
    /// The coefficient list keeps its length, so the structural degree is
    /// preserved even if the leading term happens to vanish numerically.
    pub fn evaluate_at_q(&self, q: f64) -> Vec<f64> {
        self.coeffs()
            .iter()
            .map(|c| {
                c.coeffs()
                    .iter()
                    .rev()
                    .fold(0.0, |acc, k| acc * q + k.to_f64())
            })
            .collect()
    }

    /// Exact substitution of a field element for `Q`.
    pub fn eval_q_exact(&self, q: &QuadExt) -> Result<Self> {
        let mut out = Vec::with_capacity(self.coeffs().len());
        for c in self.coeffs() {
            let mut acc = QuadExt::zero();
            for k in c.coeffs().iter().rev() {
                acc = acc.checked_mul(q)?.checked_add(k)?;
            }
            out.push(QPoly::constant(acc));
        }
        Ok(Poly::from_coeffs(out))
    }

    /// Writes a `Q`-degree-1 polynomial as `B(t) + Q * A(t)`.
    pub fn split_linear_q(&self) -> Result<(QPoly, QPoly)> {
        if self.q_degree() != Some(1) {
            return Err(Error::InvalidShape("expected Q-degree exactly 1".into()));
        }
        let b = Poly::from_coeffs(self.coeffs().iter().map(|c| c.coeff(0)).collect());
        let a = Poly::from_coeffs(self.coeffs().iter().map(|c| c.coeff(1)).collect());
        Ok((b, a))
    }

    /// Irreducibility of a `Q`-degree-1 polynomial over `F(Q)`: with
    /// `p = B(t) + Q*A(t)`, any factorization must contain a `Q`-free factor
    /// dividing both `A` and `B`, so `p` is irreducible iff `gcd(A, B)` is a
    /// nonzero constant.
    pub fn irreducible_linear_in_q(&self) -> Result<bool> {
        let (b, a) = self.split_linear_q()?;
        let g = a.gcd(&b);
        Ok(g.is_constant() && !g.is_zero())
    }

    /// Galois conjugation applied to every coefficient.
    pub fn conjugate(&self) -> Self {
        Poly::from_coeffs(
            self.coeffs()
                .iter()
                .map(|c| Poly::from_coeffs(c.coeffs().iter().map(QuadExt::conjugate).collect()))
                .collect(),
        )
    }

    pub fn max_bit_size(&self) -> u64 {
        self.coeffs().iter().map(QPoly::max_bit_size).max().unwrap_or(0)
    }

    /// Partial derivative with respect to `t`.
    pub fn derivative_t(&self) -> Self {
        self.derivative()
    }

    /// Gcd of `self` and `other` viewed in `F(Q)[t]`, computed by a primitive
    /// polynomial remainder sequence so that all intermediate data stays in
    /// `F[Q][t]`. Returns a primitive representative; constant gcd (coprime
    /// inputs) comes back as 1.
    pub fn gcd_in_t(&self, other: &Self) -> Self {
        let mut a = self.primitive_in_q();
        let mut b = other.primitive_in_q();
        if a.is_zero() {
            return b;
        }
        loop {
            if b.is_zero() {
                break;
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_in_q();
        }
        if a.t_degree() == Some(0) {
            Poly::one()
        } else {
            a.primitive_in_q()
        }
    }

    /// Pseudo-remainder: `lead(den)^(deg diff + 1) * self mod den` in `t`.
    fn pseudo_rem(&self, den: &Self) -> Self {
        let dd = den.t_degree().expect("nonzero divisor");
        let lead = den.leading().unwrap().clone();
        let mut rem = self.clone();
        while let Some(rd) = rem.t_degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap().clone();
            let shift = rd - dd;
            rem = rem.scale(&lead.clone()) - den.scale(&factor).shift_t(shift);
        }
        rem
    }

    /// Divides out the gcd (in `F[Q]`) of all `t`-coefficients.
    fn primitive_in_q(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut content = QPoly::zero();
        for c in self.coeffs() {
            content = content.gcd(c);
        }
        if content.is_constant() {
            let inv = content.leading().unwrap().inverse().unwrap();
            return self.scale(&QPoly::constant(inv));
        }
        let out: Vec<QPoly> = self
            .coeffs()
            .iter()
            .map(|c| {
                let (q, r) = c.div_rem(&content).expect("content divides");
                debug_assert!(r.is_zero());
                q
            })
            .collect();
        Poly::from_coeffs(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    /// `t^2 - Q t - 2`.
    fn sample_min_poly() -> BiPoly {
        Poly::from_coeffs(vec![
            QPoly::constant(QuadExt::from_int(-2)),
            Poly::monomial(-QuadExt::one(), 1),
            QPoly::one(),
        ])
    }

    #[test]
    fn degrees_and_monicity() {
        let p = sample_min_poly();
        assert_eq!(p.t_degree(), Some(2));
        assert_eq!(p.q_degree(), Some(1));
        assert!(p.is_monic_in_t());
    }

    #[test]
    fn exact_division_round_trips() {
        let p = sample_min_poly();
        let prod = p.clone() * BiPoly::t_minus_q();
        let q = prod.divide_exact(&BiPoly::t_minus_q()).unwrap();
        assert_eq!(q, p);
        assert!(p.divide_exact(&p).unwrap().is_one());
    }

    #[test]
    fn division_rejects_non_factor() {
        // (t^2 - 1) / (t - Q)
        let num = BiPoly::from_qpoly_in_t(&QPoly::from_rationals(vec![rat(-1), rat(0), rat(1)]));
        assert!(matches!(num.divide_exact(&BiPoly::t_minus_q()), Err(Error::NotAFactor)));
    }

    #[test]
    fn trace_split_examples() {
        let p = sample_min_poly();
        let tr = p.trace_split().unwrap();
        assert_eq!(tr.q_coeff, rat(1));
        assert!(tr.field_part.is_zero());

        let tr = BiPoly::t_minus_q().trace_split().unwrap();
        assert_eq!(tr.q_coeff, rat(1));
        assert!(tr.field_part.is_zero());
    }

    #[test]
    fn evaluate_at_q_keeps_degree() {
        let p = sample_min_poly();
        let c = p.evaluate_at_q(0.0);
        assert_eq!(c, vec![-2.0, 0.0, 1.0]);
        let c = p.evaluate_at_q(std::f64::consts::PI);
        assert!((c[1] + std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn irreducibility_gcd_shortcut() {
        // t^2 - Qt - 2: A = -t, B = t^2 - 2, coprime.
        assert!(sample_min_poly().irreducible_linear_in_q().unwrap());
        // Q t + t^2: A = t, B = t^2 share the factor t.
        let p: BiPoly = Poly::from_coeffs(vec![
            QPoly::zero(),
            Poly::monomial(QuadExt::one(), 1),
            QPoly::one(),
        ]);
        assert!(!p.irreducible_linear_in_q().unwrap());
        // t - Q: A constant.
        assert!(BiPoly::t_minus_q().irreducible_linear_in_q().unwrap());
    }

    #[test]
    fn square_free_gcd_with_derivative() {
        let p = sample_min_poly();
        let g = p.gcd_in_t(&p.derivative_t());
        assert!(g.is_one());
        // A forced square: (t - Q)^2 has gcd (t - Q) with its derivative.
        let sq = BiPoly::t_minus_q() * BiPoly::t_minus_q();
        let g = sq.gcd_in_t(&sq.derivative_t());
        assert_eq!(g.t_degree(), Some(1));
    }
}
