//! Exact arithmetic: rationals, quadratic extensions, polynomials in `(Q, t)`,
//! characteristic and relative minimal polynomials.

pub mod bivar;
pub mod charpoly;
pub mod krylov;
pub mod matrix;
pub mod poly;
pub mod quad;
pub mod serial;

pub use bivar::TraceSplit;
pub use matrix::SqMat;
pub use poly::{BiPoly, Poly, QPoly};
pub use quad::{format_rational, parse_rational, square_free_split, QuadExt};

use crate::error::{Error, Result};

/// Guard against runaway coefficient growth on the exact path.
#[derive(Clone, Copy, Debug)]
pub struct ExactLimits {
    /// Abort when any rational numerator or denominator exceeds this many bits.
    pub max_coeff_bits: u64,
}

impl Default for ExactLimits {
    fn default() -> Self {
        Self { max_coeff_bits: 16384 }
    }
}

impl ExactLimits {
    fn exceeded(&self, bits: u64) -> Result<()> {
        if bits > self.max_coeff_bits {
            Err(Error::ResourceExceeded(format!(
                "coefficient of {bits} bits exceeds the {}-bit bound",
                self.max_coeff_bits
            )))
        } else {
            Ok(())
        }
    }

    pub fn check_poly(&self, p: &QPoly) -> Result<()> {
        self.exceeded(p.max_bit_size())
    }

    pub fn check_row(&self, row: &[QPoly]) -> Result<()> {
        self.exceeded(row.iter().map(QPoly::max_bit_size).max().unwrap_or(0))
    }

    pub fn check_matrix(&self, m: &SqMat<QPoly>) -> Result<()> {
        let mut worst = 0;
        for i in 0..m.n() {
            for j in 0..m.n() {
                worst = worst.max(m[(i, j)].max_bit_size());
            }
        }
        self.exceeded(worst)
    }
}
