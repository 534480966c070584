//! Small dense square matrices over exact coefficient rings.
//!
//! Sizes here are graph-sized (n <= a few dozen), so naive O(n^3) products
//! are fine and keep everything exact.

use num_traits::Zero;

use super::poly::Ring;

/// Row-major dense square matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct SqMat<T: Ring> {
    n: usize,
    data: Vec<T>,
}

impl<T: Ring> SqMat<T> {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![T::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn trace(&self) -> T {
        let mut acc = T::zero();
        for i in 0..self.n {
            acc = acc + self[(i, i)].clone();
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)].clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other[(k, j)].clone();
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * b;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(other.data.iter()) {
            *x = x.clone() + y.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(other.data.iter()) {
            *x = x.clone() - y.clone();
        }
        out
    }

    /// Adds `c` to every diagonal entry in place.
    pub fn add_diagonal(&mut self, c: &T) {
        for i in 0..self.n {
            self[(i, i)] = self[(i, i)].clone() + c.clone();
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x = x.clone() * c.clone();
        }
        out
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.n, v.len());
        (0..self.n)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.n {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc + self[(i, j)].clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Restriction to the rows and columns listed in `idx`.
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), |i, j| self[(idx[i], idx[j])].clone())
    }

    /// Successive powers `I, M, M^2, ..., M^(count-1)`.
    pub fn powers(&self, count: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(count);
        out.push(Self::identity(self.n));
        for k in 1..count {
            let next = out[k - 1].mul(self);
            out.push(next);
        }
        out
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> SqMat<U> {
        SqMat { n: self.n, data: self.data.iter().map(f).collect() }
    }
}

impl<T: Ring> std::ops::Index<(usize, usize)> for SqMat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.n + j]
    }
}

impl<T: Ring> std::ops::IndexMut<(usize, usize)> for SqMat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.n + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::quad::QuadExt;
    use num_traits::One;

    #[test]
    fn powers_of_a_path() {
        // P_3 adjacency: walks of length 2 from 0 to 2 pass through 1.
        let mut m = SqMat::<QuadExt>::zeros(3);
        m[(0, 1)] = QuadExt::one();
        m[(1, 0)] = QuadExt::one();
        m[(1, 2)] = QuadExt::one();
        m[(2, 1)] = QuadExt::one();
        let pows = m.powers(3);
        assert_eq!(pows[2][(0, 2)], QuadExt::one());
        assert_eq!(pows[2][(1, 1)], QuadExt::from_int(2));
    }
}
