use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Pivots smaller than this in magnitude count as singular.
pub const PIVOT_TOL: f64 = 1e-12;

/// LU factorization with partial pivoting of a dense row-major `n x n` matrix.
#[derive(Debug, Clone)]
pub struct Lu {
    n: usize,
    lu: Vec<f64>,
    perm: Vec<usize>,
    sign: f64,
}

impl Lu {
    pub fn new(mut a: Vec<f64>, n: usize) -> Result<Self> {
        if a.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: a.len(),
            });
        }
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        for k in 0..n {
            let (p, best) = (k..n)
                .map(|i| (i, a[i * n + k].abs()))
                .fold((k, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if best.is_nan() || best < PIVOT_TOL {
                return Err(Error::Singular { pivot: a[p * n + k] });
            }
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
                sign = -sign;
            }
            let pivot = a[k * n + k];
            for i in k + 1..n {
                let f = a[i * n + k] / pivot;
                a[i * n + k] = f;
                for j in k + 1..n {
                    a[i * n + j] -= f * a[k * n + j];
                }
            }
        }
        Ok(Lu { n, lu: a, perm, sign })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn det(&self) -> f64 {
        self.sign * (0..self.n).map(|i| self.lu[i * self.n + i]).product::<f64>()
    }

    /// `log |det|`, computed from the pivots to avoid overflow.
    pub fn log_abs_det(&self) -> f64 {
        (0..self.n).map(|i| libm::log(self.lu[i * self.n + i].abs())).sum()
    }

    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.n;
        assert_eq!(b.len(), n, "right-hand side has the wrong length");
        let mut x: Vec<f64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                x[i] -= self.lu[i * n + j] * x[j];
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                x[i] -= self.lu[i * n + j] * x[j];
            }
            x[i] /= self.lu[i * n + i];
        }
        x
    }

    pub fn inverse(&self) -> Vec<f64> {
        let n = self.n;
        let mut inv = vec![0.0; n * n];
        let mut e = vec![0.0; n];
        for j in 0..n {
            e.iter_mut().for_each(|x| *x = 0.0);
            e[j] = 1.0;
            for (i, x) in self.solve(&e).into_iter().enumerate() {
                inv[i * n + j] = x;
            }
        }
        inv
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_and_inverts() {
        let a = vec![0.0, 2.0, 1.0, 1.0, 1.0, 0.0, 3.0, 0.0, 1.0];
        let lu = Lu::new(a.clone(), 3).unwrap();
        // det by cofactor expansion along the first row
        let det = 0.0 * (1.0 * 1.0 - 0.0 * 0.0) - 2.0 * (1.0 * 1.0 - 0.0 * 3.0) + 1.0 * (1.0 * 0.0 - 1.0 * 3.0);
        assert!((lu.det() - det).abs() < 1e-14);
        let inv = lu.inverse();
        for i in 0..3 {
            for j in 0..3 {
                let s: f64 = (0..3).map(|k| a[i * 3 + k] * inv[k * 3 + j]).sum();
                assert!((s - f64::from(u8::from(i == j))).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn singular_is_reported() {
        assert!(matches!(Lu::new(vec![1.0, 2.0, 2.0, 4.0], 2), Err(Error::Singular { .. })));
        assert!(Lu::new(vec![1.0; 3], 2).is_err());
    }
}
