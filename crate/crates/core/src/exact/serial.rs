//! JSON form of bivariate polynomials.
//!
//! Layout: `{"d": int|null, "coeffs": [...]}` where `coeffs` is t-major and
//! Q-minor — the outer array runs over ascending powers of `t`, each entry an
//! array over ascending powers of `Q`, and each coefficient a two-element
//! array `[a, b]` of exact fraction strings meaning `a + b*sqrt(d)`.

use serde::{Deserialize, Serialize};

use super::poly::{BiPoly, Poly, QPoly};
use super::quad::{format_rational, parse_rational, QuadExt};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
pub struct BiPolyJson {
    pub d: Option<i64>,
    pub coeffs: Vec<Vec<[String; 2]>>,
}

pub fn bipoly_to_json(p: &BiPoly) -> BiPolyJson {
    let d = p.coeffs().iter().find_map(QPoly::field);
    let coeffs = p
        .coeffs()
        .iter()
        .map(|qc| {
            qc.coeffs()
                .iter()
                .map(|c| [format_rational(c.rational_part()), format_rational(c.radical_part())])
                .collect()
        })
        .collect();
    BiPolyJson { d, coeffs }
}

pub fn bipoly_from_json(j: &BiPolyJson) -> Result<BiPoly> {
    let d = j.d.unwrap_or(0);
    if d == 1 || d < 0 {
        return Err(Error::InvalidParameter(format!("bad field descriptor d={d}")));
    }
    let mut t_coeffs = Vec::with_capacity(j.coeffs.len());
    for qc in &j.coeffs {
        let mut q_coeffs = Vec::with_capacity(qc.len());
        for [a, b] in qc {
            let a = parse_rational(a)?;
            let b = parse_rational(b)?;
            q_coeffs.push(QuadExt::new(a, b, d)?);
        }
        t_coeffs.push(QPoly::from_coeffs(q_coeffs));
    }
    Ok(Poly::from_coeffs(t_coeffs))
}
