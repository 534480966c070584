//! Relative minimal polynomials over `F[Q]` by fraction-free (Bareiss)
//! elimination of the Krylov matrix.
//!
//! The Krylov vectors `v, Mv, M^2 v, ...` are rows of a matrix over `F[Q]`,
//! augmented with unit tracking columns. Bareiss updates keep every entry a
//! minor of the original matrix, so all divisions are exact and no rational
//! functions in `Q` ever appear. When a row reduces to zero the tracking
//! part holds the dependency, i.e. the minimal polynomial up to a scalar
//! in `F[Q]`; integrality of monic divisors of the monic characteristic
//! polynomial guarantees the final normalization divides exactly.

use num_traits::{One, Zero};

use super::matrix::SqMat;
use super::poly::{BiPoly, Poly, QPoly};
use super::quad::QuadExt;
use super::ExactLimits;
use crate::error::{Error, Result};

struct PivotRow {
    main: Vec<QPoly>,
    track: Vec<QPoly>,
    col: usize,
}

/// Smallest-degree monic `p` with `p(A) v0 = 0`, identically in `Q`.
///
/// `A` is a matrix over `F[Q]` (in practice `M + Q D_K`), `v0` a nonzero
/// vector over the field. The result is verified by exact substitution
/// before being returned.
pub fn relative_min_poly(
    a: &SqMat<QPoly>,
    v0: &[QuadExt],
    limits: &ExactLimits,
) -> Result<BiPoly> {
    let n = a.n();
    if v0.len() != n {
        return Err(Error::SizeMismatch(format!(
            "vector length {} vs matrix size {n}",
            v0.len()
        )));
    }
    if v0.iter().all(Zero::is_zero) {
        return Err(Error::InvalidVector("relative minimal polynomial of 0".into()));
    }

    let mut krylov: Vec<Vec<QPoly>> =
        vec![v0.iter().map(|c| QPoly::constant(c.clone())).collect()];
    let mut pivots: Vec<QPoly> = Vec::new();
    let mut rows: Vec<PivotRow> = Vec::new();

    for step in 0..=n {
        let mut main = krylov[step].clone();
        let mut track = vec![QPoly::zero(); step + 1];
        track[step] = QPoly::one();

        for (i, prow) in rows.iter().enumerate() {
            let p_prev = if i == 0 { QPoly::one() } else { pivots[i - 1].clone() };
            let p_cur = pivots[i].clone();
            let factor = main[prow.col].clone();
            bareiss_update(&mut main, &p_cur, &factor, &prow.main, &p_prev);
            bareiss_update(&mut track, &p_cur, &factor, &prow.track, &p_prev);
            limits.check_row(&main)?;
        }

        if main.iter().all(Zero::is_zero) {
            // First dependency: track holds l_0..l_step with
            // sum_m l_m * A^m v0 = 0 and l_step != 0.
            let lead = track[step].clone();
            debug_assert!(!lead.is_zero());
            let coeffs: Vec<QPoly> = track
                .iter()
                .map(|t| {
                    let (q, r) = exact_div(t, &lead);
                    debug_assert!(r, "minimal polynomial normalization must divide exactly");
                    q
                })
                .collect();
            let p = Poly::from_coeffs(coeffs);
            verify_annihilates(&p, &krylov)?;
            return Ok(p);
        }

        let col = main
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero row has a pivot");
        pivots.push(main[col].clone());
        rows.push(PivotRow { main, track, col });

        let next = a.apply(&krylov[step]);
        limits.check_row(&next)?;
        krylov.push(next);
    }

    // A dependency must appear by step n (Cayley-Hamilton).
    unreachable!("Krylov sequence of length n+1 is always dependent")
}

/// In-place row update `row := (p_cur * row - factor * pivot) / p_prev`.
/// `pivot` may be shorter than `row` (tracking columns grow per step).
fn bareiss_update(
    row: &mut [QPoly],
    p_cur: &QPoly,
    factor: &QPoly,
    pivot: &[QPoly],
    p_prev: &QPoly,
) {
    for (j, x) in row.iter_mut().enumerate() {
        let pv = pivot.get(j).cloned().unwrap_or_else(QPoly::zero);
        let num = x.clone() * p_cur.clone() - factor.clone() * pv;
        if num.is_zero() {
            *x = QPoly::zero();
            continue;
        }
        let (q, exact) = exact_div(&num, p_prev);
        debug_assert!(exact, "Bareiss division must be exact");
        *x = q;
    }
}

/// Division in `F[Q]` returning `(quotient, remainder_is_zero)`.
fn exact_div(num: &QPoly, den: &QPoly) -> (QPoly, bool) {
    if num.is_zero() {
        return (QPoly::zero(), true);
    }
    let (q, r) = num.div_rem(den).expect("nonzero divisor");
    (q, r.is_zero())
}

/// Exact substitution check: `sum_m coeff_m * (A^m v0) = 0`.
fn verify_annihilates(p: &BiPoly, krylov: &[Vec<QPoly>]) -> Result<()> {
    let n = krylov[0].len();
    let mut acc = vec![QPoly::zero(); n];
    for (m, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (j, entry) in krylov[m].iter().enumerate() {
            acc[j] = acc[j].clone() + c.clone() * entry.clone();
        }
    }
    if acc.iter().all(Zero::is_zero) {
        Ok(())
    } else {
        Err(Error::InvalidShape(
            "internal: candidate minimal polynomial fails exact substitution".into(),
        ))
    }
}

/// Builds `M + Q D_K` over `F[Q]` from an exact symmetric matrix and the
/// perturbed index set.
pub fn perturbed_matrix(m: &SqMat<QuadExt>, k_set: &[usize]) -> SqMat<QPoly> {
    let mut a = m.map(|c| QPoly::constant(c.clone()));
    for &v in k_set {
        let cur = a[(v, v)].clone();
        a[(v, v)] = cur + Poly::monomial(QuadExt::one(), 1);
    }
    a
}

/// Zero-extension of a vector given on `K` to the full index set.
pub fn extend_by_zeros(v_on_k: &[QuadExt], k_set: &[usize], n: usize) -> Vec<QuadExt> {
    let mut out = vec![QuadExt::zero(); n];
    for (value, &idx) in v_on_k.iter().zip(k_set.iter()) {
        out[idx] = value.clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3_mk() -> SqMat<QPoly> {
        let mut m = SqMat::<QuadExt>::zeros(3);
        for (i, j) in [(0, 1), (1, 0), (1, 2), (2, 1)] {
            m[(i, j)] = QuadExt::one();
        }
        perturbed_matrix(&m, &[0, 2])
    }

    /// Hand Krylov oracle: with v0 = e0 + e2,
    /// M^K v0 = Q v0 + 2 e1 and (M^K)^2 v0 = (Q^2 + 2) v0 + 2Q e1,
    /// so the first dependency is t^2 - Q t - 2.
    #[test]
    fn path_three_symmetric_seed() {
        let a = path3_mk();
        let v0 = extend_by_zeros(&[QuadExt::one(), QuadExt::one()], &[0, 2], 3);
        let p = relative_min_poly(&a, &v0, &ExactLimits::default()).unwrap();
        let expected: BiPoly = Poly::from_coeffs(vec![
            QPoly::constant(QuadExt::from_int(-2)),
            Poly::monomial(-QuadExt::one(), 1),
            QPoly::one(),
        ]);
        assert_eq!(p, expected);
    }

    /// v0 = -e0 + e2 is an exact eigenvector of M^K: degree-1 output t - Q.
    #[test]
    fn path_three_antisymmetric_seed() {
        let a = path3_mk();
        let v0 = extend_by_zeros(&[-QuadExt::one(), QuadExt::one()], &[0, 2], 3);
        let p = relative_min_poly(&a, &v0, &ExactLimits::default()).unwrap();
        assert_eq!(p, BiPoly::t_minus_q());
    }

    #[test]
    fn zero_vector_rejected() {
        let a = path3_mk();
        let v0 = vec![QuadExt::zero(); 3];
        assert!(matches!(
            relative_min_poly(&a, &v0, &ExactLimits::default()),
            Err(Error::InvalidVector(_))
        ));
    }
}
