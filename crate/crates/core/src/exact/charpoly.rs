//! Characteristic polynomial over `F[Q]` by the Faddeev-LeVerrier recurrence.
//!
//! The recurrence only ever divides by integers, so it is valid verbatim over
//! the polynomial ring `Q[Q]` without passing through fractions.

use num_traits::One;

use super::matrix::SqMat;
use super::poly::{BiPoly, Poly, QPoly};
use super::quad::QuadExt;
use super::ExactLimits;
use crate::error::Result;

/// Characteristic polynomial `det(t I - A)` of a matrix over `F[Q]`,
/// monic of `t`-degree `n`.
pub fn char_poly(a: &SqMat<QPoly>, limits: &ExactLimits) -> Result<BiPoly> {
    let n = a.n();
    if n == 0 {
        return Ok(BiPoly::one());
    }
    // c[k] is the coefficient of t^(n-k); c[0] = 1.
    let mut coeffs_hi_to_lo: Vec<QPoly> = Vec::with_capacity(n + 1);
    coeffs_hi_to_lo.push(QPoly::one());

    let mut nk = a.clone();
    for k in 1..=n {
        let tr = nk.trace();
        let ck = divide_by_int(&tr, k as i64);
        let ck = -ck;
        limits.check_poly(&ck)?;
        coeffs_hi_to_lo.push(ck.clone());
        if k < n {
            let mut shifted = nk;
            shifted.add_diagonal(&ck);
            nk = a.mul(&shifted);
            limits.check_matrix(&nk)?;
        }
    }

    coeffs_hi_to_lo.reverse();
    Ok(Poly::from_coeffs(coeffs_hi_to_lo))
}

fn divide_by_int(p: &QPoly, k: i64) -> QPoly {
    let inv = QuadExt::from_int(k).inverse().expect("k >= 1");
    p.scale(&inv)
}

/// Substitutes the matrix into the polynomial (coefficients lifted to
/// scalar matrices): Horner over `SqMat<QPoly>`.
pub fn substitute_matrix(p: &BiPoly, a: &SqMat<QPoly>) -> SqMat<QPoly> {
    let n = a.n();
    let mut acc = SqMat::<QPoly>::zeros(n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(a);
        acc.add_diagonal(c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_var() -> QPoly {
        Poly::monomial(QuadExt::one(), 1)
    }

    /// M^K for the 1x1 zero matrix with K = {0}: just [Q].
    #[test]
    fn one_by_one() {
        let mut a = SqMat::<QPoly>::zeros(1);
        a[(0, 0)] = q_var();
        let phi = char_poly(&a, &ExactLimits::default()).unwrap();
        // t - Q
        assert_eq!(phi, BiPoly::t_minus_q());
    }

    /// Single edge with K = {0, 1}: phi = (t - Q)^2 - 1.
    #[test]
    fn single_edge_full_k() {
        let mut a = SqMat::<QPoly>::zeros(2);
        a[(0, 0)] = q_var();
        a[(1, 1)] = q_var();
        a[(0, 1)] = QPoly::one();
        a[(1, 0)] = QPoly::one();
        let phi = char_poly(&a, &ExactLimits::default()).unwrap();
        let expected = BiPoly::t_minus_q() * BiPoly::t_minus_q()
            - BiPoly::from_qpoly_in_t(&QPoly::one());
        assert_eq!(phi, expected);
    }

    /// Path 0-1-2 with K = {0, 2}: phi = (t - Q)(t^2 - Qt - 2), checked by
    /// direct determinant expansion of the 3x3.
    #[test]
    fn path_three_matches_determinant_expansion() {
        let mut a = SqMat::<QPoly>::zeros(3);
        a[(0, 0)] = q_var();
        a[(2, 2)] = q_var();
        for (i, j) in [(0, 1), (1, 0), (1, 2), (2, 1)] {
            a[(i, j)] = QPoly::one();
        }
        let phi = char_poly(&a, &ExactLimits::default()).unwrap();

        // det(tI - A) expanded by hand:
        // (t-Q)[t(t-Q) - 1] - (-1)[-(t-Q)] = (t-Q)(t^2 - Qt - 2)
        let tq = BiPoly::t_minus_q();
        let t2 = {
            // t^2 - Qt - 2
            Poly::from_coeffs(vec![
                QPoly::constant(QuadExt::from_int(-2)),
                Poly::monomial(-QuadExt::one(), 1),
                QPoly::one(),
            ])
        };
        assert_eq!(phi, tq * t2);
    }

    /// Cayley-Hamilton by exact substitution.
    #[test]
    fn cayley_hamilton_small() {
        let mut a = SqMat::<QPoly>::zeros(3);
        a[(0, 0)] = q_var();
        a[(2, 2)] = q_var();
        for (i, j) in [(0, 1), (1, 0), (1, 2), (2, 1)] {
            a[(i, j)] = QPoly::one();
        }
        let phi = char_poly(&a, &ExactLimits::default()).unwrap();
        let z = substitute_matrix(&phi, &a);
        assert!(z.is_zero_matrix());
    }
}
