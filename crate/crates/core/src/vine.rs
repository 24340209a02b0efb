//! Truncated R-vines represented as a base tree followed by cherry-trees of
//! increasing order, and the pair-copula labels attached to their links.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::set::{Vertex, VertexSet};
use crate::structures::{CherryTree, ValidationReport, Violation};
use crate::tree::UnionFind;

/// First tree of a vine: a spanning tree on the vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseTree {
    vertices: VertexSet,
    edges: Vec<(Vertex, Vertex)>,
}

impl BaseTree {
    /// Edges are stored as `(min, max)` in the given order.
    pub fn new(vertices: VertexSet, edges: Vec<(Vertex, Vertex)>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidBaseTree("no vertices"));
        }
        if vertices.first() == Some(0) {
            return Err(Error::InvalidBaseTree("vertex ids must be positive"));
        }
        if edges.len() + 1 != vertices.len() {
            return Err(Error::InvalidBaseTree("a tree on d vertices has d - 1 edges"));
        }
        let index = |v: Vertex| vertices.as_slice().binary_search(&v).ok();
        let mut uf = UnionFind::new(vertices.len());
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let (Some(ia), Some(ib)) = (index(a), index(b)) else {
                return Err(Error::InvalidBaseTree("edge endpoint outside the vertex set"));
            };
            if a == b {
                return Err(Error::InvalidBaseTree("self loop"));
            }
            if !uf.union(ia, ib) {
                return Err(Error::InvalidBaseTree("edges contain a cycle"));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        Ok(BaseTree {
            vertices,
            edges: normalized,
        })
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge_sets(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.edges.iter().map(|&(a, b)| VertexSet::from([a, b]))
    }
}

/// A vine truncated at level `k`: the base tree `T_1` and the cherry-trees
/// `T_2, ..., T_k`, where `levels[i]` has order `i + 2`. A base tree with no
/// levels is a vine truncated at level 1; a full R-vine is `k = d - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedRVine {
    base: BaseTree,
    levels: Vec<CherryTree>,
}

impl TruncatedRVine {
    pub fn new(base: BaseTree, levels: Vec<CherryTree>) -> Result<Self> {
        let report = validate_sequence(&base, &levels);
        if !report.is_ok() {
            return Err(Error::InvalidVine(report));
        }
        Ok(TruncatedRVine { base, levels })
    }

    pub fn base(&self) -> &BaseTree {
        &self.base
    }

    pub fn levels(&self) -> &[CherryTree] {
        &self.levels
    }

    /// Cherry-tree of the given order (2..=k).
    pub fn level(&self, order: usize) -> Option<&CherryTree> {
        order.checked_sub(2).and_then(|i| self.levels.get(i))
    }

    pub fn top(&self) -> Option<&CherryTree> {
        self.levels.last()
    }

    pub fn dimension(&self) -> usize {
        self.base.vertices.len()
    }

    pub fn truncation_level(&self) -> usize {
        self.levels.len() + 1
    }
}

/// Checks the cherry-vine construction rules at every level: level 2's
/// clusters are the base edges, every higher cluster is the union of two
/// clusters linked one level below, and level `l` is an order-`l`
/// cherry-tree with `d - l + 1` clusters over the base vertex set.
pub fn validate_sequence(base: &BaseTree, levels: &[CherryTree]) -> ValidationReport {
    let mut report = ValidationReport::default();
    let d = base.vertices.len();
    for (i, level) in levels.iter().enumerate() {
        let order = i + 2;
        if level.order() != order {
            report.push(Violation::LevelOrder { level: order, found: level.order() });
        }
        if level.vertices() != &base.vertices {
            report.push(Violation::LevelVertices { level: order });
        }
        let expected = (d + 1).saturating_sub(order);
        if level.len() != expected {
            report.push(Violation::LevelClusterCount {
                level: order,
                expected,
                found: level.len(),
            });
        }
        if order == 2 {
            let edges: BTreeSet<VertexSet> = base.edge_sets().collect();
            let clusters: BTreeSet<&VertexSet> = level.clusters().iter().collect();
            for c in level.clusters() {
                if !edges.contains(c) {
                    report.push(Violation::NotBaseEdge { cluster: c.clone() });
                }
            }
            for e in &edges {
                if !clusters.contains(e) {
                    report.push(Violation::MissingBaseEdge { edge: e.clone() });
                }
            }
        } else {
            let below = &levels[i - 1];
            let unions: BTreeSet<VertexSet> = below
                .edges()
                .iter()
                .map(|&(a, b)| below.clusters()[a].union(&below.clusters()[b]))
                .collect();
            for c in level.clusters() {
                if !unions.contains(c) {
                    report.push(Violation::NotLinkedUnion { level: order, cluster: c.clone() });
                }
            }
        }
    }
    report
}

/// Independent re-check of a level sequence against the classical R-vine
/// definition: the nodes of `T_{i+1}` are exactly the edges of `T_i`, and two
/// nodes may only be joined when their edges share a node of `T_i`
/// (proximity) and differ in exactly two vertices.
pub fn proximity_equiv(base: &BaseTree, levels: &[CherryTree]) -> bool {
    // Edges of the tree below, each as the pair of node sets it joins.
    let mut below: Vec<(VertexSet, VertexSet)> = base
        .edges
        .iter()
        .map(|&(a, b)| (VertexSet::singleton(a), VertexSet::singleton(b)))
        .collect();
    for (i, level) in levels.iter().enumerate() {
        if level.order() != i + 2 || level.vertices() != &base.vertices {
            return false;
        }
        // Node identity: every edge below becomes exactly one node here.
        let mut node_edge: BTreeMap<&VertexSet, usize> = BTreeMap::new();
        let mut used = alloc::vec![false; below.len()];
        for c in level.clusters() {
            let mut hits = below.iter().enumerate().filter(|(_, (x, y))| &x.union(y) == c);
            match (hits.next(), hits.next()) {
                (Some((e, _)), None) if !used[e] => {
                    used[e] = true;
                    node_edge.insert(c, e);
                }
                _ => return false,
            }
        }
        if used.iter().any(|u| !u) {
            return false;
        }
        for &(a, b) in level.edges() {
            let (ca, cb) = (&level.clusters()[a], &level.clusters()[b]);
            let (ea, eb) = (&below[node_edge[ca]], &below[node_edge[cb]]);
            let share = ea.0 == eb.0 || ea.0 == eb.1 || ea.1 == eb.0 || ea.1 == eb.1;
            if !share || ca.symmetric_difference(cb).len() != 2 {
                return false;
            }
        }
        below = level
            .edges()
            .iter()
            .map(|&(a, b)| (level.clusters()[a].clone(), level.clusters()[b].clone()))
            .collect();
    }
    true
}

/// Pair-copula label `c_{a,b|S}`. The conditioned pair is stored with
/// `a < b`; `level` is `|S| + 1` (base edges are level 1 with `S = ∅`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeLabel {
    level: usize,
    conditioning: VertexSet,
    conditioned: (Vertex, Vertex),
}

impl EdgeLabel {
    /// Returns `None` if `a == b` or either lies in `conditioning`.
    pub fn new(a: Vertex, b: Vertex, conditioning: VertexSet) -> Option<Self> {
        if a == b || conditioning.contains(a) || conditioning.contains(b) {
            return None;
        }
        Some(EdgeLabel {
            level: conditioning.len() + 1,
            conditioning,
            conditioned: (a.min(b), a.max(b)),
        })
    }

    pub fn conditioned(&self) -> (Vertex, Vertex) {
        self.conditioned
    }

    pub fn conditioning(&self) -> &VertexSet {
        &self.conditioning
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Conditioned pair plus conditioning set.
    pub fn support(&self) -> VertexSet {
        self.conditioning.with(self.conditioned.0).with(self.conditioned.1)
    }

    /// The other conditioned vertex, if `v` is one of them.
    pub fn partner(&self, v: Vertex) -> Option<Vertex> {
        match self.conditioned {
            (a, b) if a == v => Some(b),
            (a, b) if b == v => Some(a),
            _ => None,
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.conditioned;
        write!(f, "c_{{{a},{b}")?;
        if !self.conditioning.is_empty() {
            f.write_str("|")?;
            for (i, v) in self.conditioning.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        f.write_str("}")
    }
}

/// All labels of the vine: one per base edge, then one per link of each
/// level in storage order. For a link `A - B`, `S = A ∩ B`, `a = A \ S` and
/// `b = B \ S`.
pub fn edge_labels(v: &TruncatedRVine) -> Vec<EdgeLabel> {
    let mut out = Vec::new();
    for &(a, b) in &v.base.edges {
        out.push(EdgeLabel::new(a, b, VertexSet::empty()).expect("base edges join distinct vertices"));
    }
    for level in &v.levels {
        for (&(i, j), s) in level.edges().iter().zip(level.separators()) {
            let a = level.clusters()[i].difference(s).only();
            let b = level.clusters()[j].difference(s).only();
            let (Some(a), Some(b)) = (a, b) else {
                unreachable!("cherry-tree separators leave one vertex on each side");
            };
            out.push(EdgeLabel::new(a, b, s.clone()).expect("a and b lie outside the separator"));
        }
    }
    out
}
