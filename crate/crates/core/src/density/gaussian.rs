use alloc::vec;
use alloc::vec::Vec;

use super::linalg::{Lu, PIVOT_TOL};
use super::{normal, UnitPoint};
use crate::error::{Error, Result};
use crate::set::{Vertex, VertexSet};
use crate::structures::JunctionTree;

/// Symmetric positive definite matrix with unit diagonal. Row/column `i`
/// (0-based) belongs to vertex `i + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationMatrix {
    d: usize,
    data: Vec<f64>,
}

impl CorrelationMatrix {
    /// Checks exact symmetry, a unit diagonal (to 1e-12) and positive
    /// definiteness.
    pub fn new(d: usize, mut data: Vec<f64>) -> Result<Self> {
        if data.len() != d * d {
            return Err(Error::DimensionMismatch {
                expected: d * d,
                found: data.len(),
            });
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(Error::NotCorrelation("non-finite entry"));
        }
        for i in 0..d {
            if (data[i * d + i] - 1.0).abs() > 1e-12 {
                return Err(Error::NotCorrelation("diagonal entries must be 1"));
            }
            data[i * d + i] = 1.0;
            for j in 0..i {
                if data[i * d + j] != data[j * d + i] {
                    return Err(Error::NotCorrelation("matrix is not symmetric"));
                }
            }
        }
        if !cholesky_ok(&data, d) {
            return Err(Error::NotCorrelation("matrix is not positive definite"));
        }
        Ok(CorrelationMatrix { d, data })
    }

    pub fn identity(d: usize) -> Self {
        let mut data = vec![0.0; d * d];
        for i in 0..d {
            data[i * d + i] = 1.0;
        }
        CorrelationMatrix { d, data }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Entry for vertices `a`, `b` (1-based).
    pub fn entry(&self, a: Vertex, b: Vertex) -> Result<f64> {
        let (i, j) = (self.index(a)?, self.index(b)?);
        Ok(self.data[i * self.d + j])
    }

    /// Principal submatrix on `vertices`, in the given order.
    pub fn submatrix(&self, vertices: &[Vertex]) -> Result<Vec<f64>> {
        let idx: Vec<usize> = vertices.iter().map(|&v| self.index(v)).collect::<Result<_>>()?;
        let mut out = Vec::with_capacity(idx.len() * idx.len());
        for &i in &idx {
            for &j in &idx {
                out.push(self.data[i * self.d + j]);
            }
        }
        Ok(out)
    }

    fn index(&self, v: Vertex) -> Result<usize> {
        match v as usize {
            i @ 1.. if i <= self.d => Ok(i - 1),
            _ => Err(Error::VertexOutOfRange(v)),
        }
    }
}

fn cholesky_ok(a: &[f64], n: usize) -> bool {
    let mut l = vec![0.0; n * n];
    for j in 0..n {
        let s = a[j * n + j] - (0..j).map(|k| l[j * n + k] * l[j * n + k]).sum::<f64>();
        if s.is_nan() || s <= PIVOT_TOL {
            return false;
        }
        let ljj = libm::sqrt(s);
        l[j * n + j] = ljj;
        for i in j + 1..n {
            let s = a[i * n + j] - (0..j).map(|k| l[i * n + k] * l[j * n + k]).sum::<f64>();
            l[i * n + j] = s / ljj;
        }
    }
    true
}

fn check_dim(sigma: &CorrelationMatrix, u: &UnitPoint) -> Result<()> {
    if sigma.dim() != u.dim() {
        return Err(Error::DimensionMismatch {
            expected: sigma.dim(),
            found: u.dim(),
        });
    }
    Ok(())
}

/// Log density of the Gaussian copula marginal on `vertices`.
fn block_log_density(sigma: &CorrelationMatrix, vertices: &[Vertex], u: &UnitPoint) -> Result<f64> {
    if vertices.is_empty() {
        return Ok(0.0);
    }
    let lu = Lu::new(sigma.submatrix(vertices)?, vertices.len())?;
    let z: Vec<f64> = vertices.iter().map(|&v| u.at(v).map(normal::ppf)).collect::<Result<_>>()?;
    let x = lu.solve(&z);
    let quad: f64 = z.iter().zip(&x).map(|(zi, xi)| zi * xi - zi * zi).sum();
    Ok(-0.5 * lu.log_abs_det() - 0.5 * quad)
}

/// `log c_Σ(u) = -½ log det Σ - ½ zᵀ(Σ⁻¹ - I)z` with `z = Φ⁻¹(u)`.
pub fn gaussian_copula_log_density(sigma: &CorrelationMatrix, u: &UnitPoint) -> Result<f64> {
    check_dim(sigma, u)?;
    let all: Vec<Vertex> = VertexSet::range(sigma.dim()).iter().collect();
    block_log_density(sigma, &all, u)
}

/// Log density of the cherry-tree (junction-tree) copula built from the
/// Gaussian marginals of `sigma`: cluster terms minus one separator term per
/// edge.
pub fn cherry_log_density(jt: &JunctionTree, sigma: &CorrelationMatrix, u: &UnitPoint) -> Result<f64> {
    check_dim(sigma, u)?;
    let mut total = 0.0;
    for c in jt.clusters() {
        total += block_log_density(sigma, c.as_slice(), u)?;
    }
    for s in jt.separators() {
        total -= block_log_density(sigma, s.as_slice(), u)?;
    }
    Ok(total)
}

/// The correlation matrix of the Gaussian distribution that factorizes over
/// `jt` and agrees with `sigma` on every cluster. Its precision is assembled
/// from the inverse cluster blocks minus the inverse separator blocks.
pub fn markov_projection(sigma: &CorrelationMatrix, jt: &JunctionTree) -> Result<CorrelationMatrix> {
    let d = sigma.dim();
    if *jt.vertices() != VertexSet::range(d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: jt.vertices().len(),
        });
    }
    let mut precision = vec![0.0; d * d];
    let mut add = |set: &VertexSet, sign: f64| -> Result<()> {
        if set.is_empty() {
            return Ok(());
        }
        let n = set.len();
        let inv = Lu::new(sigma.submatrix(set.as_slice())?, n)?.inverse();
        for (a, va) in set.iter().enumerate() {
            for (b, vb) in set.iter().enumerate() {
                precision[(va as usize - 1) * d + (vb as usize - 1)] += sign * inv[a * n + b];
            }
        }
        Ok(())
    };
    for c in jt.clusters() {
        add(c, 1.0)?;
    }
    for s in jt.separators() {
        add(s, -1.0)?;
    }
    let cov = Lu::new(precision, d)?.inverse();
    let scale: Vec<f64> = (0..d).map(|i| libm::sqrt(cov[i * d + i])).collect();
    let mut out = vec![0.0; d * d];
    for i in 0..d {
        out[i * d + i] = 1.0;
        for j in 0..i {
            let r = 0.5 * (cov[i * d + j] + cov[j * d + i]) / (scale[i] * scale[j]);
            out[i * d + j] = r;
            out[j * d + i] = r;
        }
    }
    CorrelationMatrix::new(d, out)
}

/// Partial correlation `ρ_{a,b;S}`, read off the inverse of the submatrix on
/// `{a, b} ∪ S`.
pub fn partial_correlation(sigma: &CorrelationMatrix, a: Vertex, b: Vertex, given: &VertexSet) -> Result<f64> {
    if a == b {
        return Err(Error::BadQuery("conditioned vertices must differ"));
    }
    if given.contains(a) || given.contains(b) {
        return Err(Error::BadQuery("conditioned vertex inside the conditioning set"));
    }
    let mut order = vec![a, b];
    order.extend(given.iter());
    let n = order.len();
    let p = Lu::new(sigma.submatrix(&order)?, n)?.inverse();
    Ok(-p[1] / libm::sqrt(p[0] * p[n + 1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::ClusterGraph;

    fn chain3(r12: f64, r23: f64, r13: f64) -> CorrelationMatrix {
        CorrelationMatrix::new(3, vec![1.0, r12, r13, r12, 1.0, r23, r13, r23, 1.0]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(CorrelationMatrix::new(2, vec![1.0, 0.5, 0.4, 1.0]).is_err());
        assert!(CorrelationMatrix::new(2, vec![1.1, 0.5, 0.5, 1.0]).is_err());
        assert!(CorrelationMatrix::new(2, vec![1.0, 1.0, 1.0, 1.0]).is_err());
        assert!(CorrelationMatrix::new(2, vec![1.0, 0.0, 0.0]).is_err());
        let m = CorrelationMatrix::new(2, vec![1.0, 0.5, 0.5, 1.0]).unwrap();
        assert_eq!(m.entry(1, 2).unwrap(), 0.5);
        assert!(m.entry(0, 1).is_err());
        assert!(m.entry(1, 3).is_err());
    }

    #[test]
    fn median_density() {
        // at the median z = 0, so only the determinant term survives
        let m = CorrelationMatrix::new(2, vec![1.0, 0.5, 0.5, 1.0]).unwrap();
        let u = UnitPoint::new(vec![0.5, 0.5]).unwrap();
        let got = gaussian_copula_log_density(&m, &u).unwrap();
        assert!((got - libm::log(1.0 / libm::sqrt(0.75))).abs() < 1e-14);
    }

    #[test]
    fn partial_correlation_textbook() {
        // ρ_{23;1} = (ρ23 - ρ12 ρ13) / sqrt((1 - ρ12²)(1 - ρ13²))
        let m = chain3(0.5, 0.5, 0.5);
        let got = partial_correlation(&m, 2, 3, &VertexSet::from([1])).unwrap();
        assert!((got - 1.0 / 3.0).abs() < 1e-14);
        assert!(partial_correlation(&m, 2, 2, &VertexSet::empty()).is_err());
        assert!(partial_correlation(&m, 2, 3, &VertexSet::from([3])).is_err());
    }

    #[test]
    fn chain_projection() {
        // the Markov chain 1 - 2 - 3 forces ρ13 = ρ12 ρ23
        let m = chain3(0.6, 0.5, 0.1);
        let jt = JunctionTree::new(ClusterGraph::new(
            VertexSet::range(3),
            vec![VertexSet::from([1, 2]), VertexSet::from([2, 3])],
            vec![(0, 1)],
        ))
        .unwrap();
        let p = markov_projection(&m, &jt).unwrap();
        assert!((p.entry(1, 3).unwrap() - 0.30).abs() < 1e-12);
        assert!((p.entry(1, 2).unwrap() - 0.6).abs() < 1e-12);
        let u = UnitPoint::new(vec![0.2, 0.7, 0.9]).unwrap();
        let a = cherry_log_density(&jt, &m, &u).unwrap();
        let b = gaussian_copula_log_density(&p, &u).unwrap();
        assert!((a - b).abs() < 1e-10);
    }
}
