use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::gaussian::{partial_correlation, CorrelationMatrix};
use super::pair::{PairCopula, Prob};
use super::UnitPoint;
use crate::error::{Error, Result};
use crate::set::{Vertex, VertexSet};
use crate::vine::{edge_labels, EdgeLabel, TruncatedRVine};

/// Pair-copula for every edge label of a vine.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CopulaAssignment {
    map: BTreeMap<EdgeLabel, PairCopula>,
}

impl CopulaAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Independence on every label of `vine`.
    pub fn independence(vine: &TruncatedRVine) -> Self {
        edge_labels(vine).into_iter().map(|l| (l, PairCopula::INDEPENDENCE)).collect()
    }

    /// Gaussian pair-copulas with the partial correlations induced by
    /// `sigma`.
    pub fn gaussian(vine: &TruncatedRVine, sigma: &CorrelationMatrix) -> Result<Self> {
        let mut out = Self::new();
        for l in edge_labels(vine) {
            let (a, b) = l.conditioned();
            let rho = partial_correlation(sigma, a, b, l.conditioning())?;
            out.insert(l, PairCopula::gaussian(rho)?);
        }
        Ok(out)
    }

    pub fn insert(&mut self, label: EdgeLabel, copula: PairCopula) -> Option<PairCopula> {
        self.map.insert(label, copula)
    }

    pub fn get(&self, label: &EdgeLabel) -> Option<&PairCopula> {
        self.map.get(label)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&EdgeLabel, &PairCopula)> {
        self.map.iter()
    }
}

impl FromIterator<(EdgeLabel, PairCopula)> for CopulaAssignment {
    fn from_iter<I: IntoIterator<Item = (EdgeLabel, PairCopula)>>(iter: I) -> Self {
        CopulaAssignment {
            map: iter.into_iter().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Node {
    Marginal(Vertex),
    /// `h_label(F(arg), F(given))`.
    H { label: usize, arg: usize, given: usize },
}

/// Evaluation order for the h-function recursion of a vine density. Each
/// node is a conditional distribution `F(x | S)`; building it once lets many
/// points and assignments share the work.
#[derive(Debug, Clone)]
pub struct VinePlan {
    dim: usize,
    labels: Vec<EdgeLabel>,
    nodes: Vec<Node>,
    terms: Vec<(usize, usize, usize)>,
}

struct Builder {
    labels: Vec<EdgeLabel>,
    by_support: BTreeMap<VertexSet, usize>,
    nodes: Vec<Node>,
    index: BTreeMap<(Vertex, VertexSet), usize>,
}

impl Builder {
    /// Node for `F(x | cond)`. `cond ∪ {x}` must be the support of a label
    /// whose conditioned pair contains `x`; its partner is the pivot.
    fn node(&mut self, x: Vertex, cond: VertexSet, for_label: usize) -> Result<usize> {
        if let Some(&i) = self.index.get(&(x, cond.clone())) {
            return Ok(i);
        }
        let node = if cond.is_empty() {
            Node::Marginal(x)
        } else {
            let union = cond.with(x);
            let found = self
                .by_support
                .get(&union)
                .and_then(|&m| self.labels[m].partner(x).map(|p| (m, p)));
            let Some((m, pivot)) = found else {
                return Err(Error::PivotNotFound {
                    label: self.labels[for_label].clone(),
                    union,
                });
            };
            let rest = cond.without(pivot);
            let arg = self.node(x, rest.clone(), m)?;
            let given = self.node(pivot, rest, m)?;
            Node::H { label: m, arg, given }
        };
        self.nodes.push(node);
        let i = self.nodes.len() - 1;
        self.index.insert((x, cond), i);
        Ok(i)
    }
}

impl VinePlan {
    pub fn new(vine: &TruncatedRVine) -> Result<Self> {
        let labels = edge_labels(vine);
        let by_support = labels.iter().enumerate().map(|(i, l)| (l.support(), i)).collect();
        let mut b = Builder {
            labels,
            by_support,
            nodes: Vec::new(),
            index: BTreeMap::new(),
        };
        let mut terms = Vec::with_capacity(b.labels.len());
        for i in 0..b.labels.len() {
            let (x, y) = b.labels[i].conditioned();
            let s = b.labels[i].conditioning().clone();
            let nx = b.node(x, s.clone(), i)?;
            let ny = b.node(y, s, i)?;
            terms.push((i, nx, ny));
        }
        Ok(VinePlan {
            dim: vine.dimension(),
            labels: b.labels,
            nodes: b.nodes,
            terms,
        })
    }

    pub fn labels(&self) -> &[EdgeLabel] {
        &self.labels
    }

    pub fn log_density(&self, assignment: &CopulaAssignment, u: &UnitPoint) -> Result<f64> {
        if u.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: u.dim(),
            });
        }
        let copulas: Vec<&PairCopula> = self
            .labels
            .iter()
            .map(|l| assignment.get(l).ok_or_else(|| Error::UnassignedLabel(l.clone())))
            .collect::<Result<_>>()?;
        let mut values = Vec::with_capacity(self.nodes.len());
        for node in &self.nodes {
            let v = match *node {
                Node::Marginal(x) => Prob::new(u.at(x)?),
                Node::H { label, arg, given } => copulas[label].h_prob(values[arg], values[given]),
            };
            values.push(v);
        }
        Ok(self
            .terms
            .iter()
            .map(|&(l, a, b)| copulas[l].log_density_prob(values[a], values[b]))
            .sum())
    }
}

/// Log density of the pair-copula construction on `vine`. Builds a fresh
/// [`VinePlan`]; reuse one for repeated evaluation.
pub fn vine_log_density(vine: &TruncatedRVine, assignment: &CopulaAssignment, u: &UnitPoint) -> Result<f64> {
    VinePlan::new(vine)?.log_density(assignment, u)
}
