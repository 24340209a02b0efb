//! Junction trees, separator tables and cherry-trees.
//!
//! A [`ClusterGraph`] is the raw, unchecked description of clusters linked by
//! edges. [`check_rip`] inspects one and reports every structural violation;
//! [`JunctionTree::new`] only accepts graphs whose report is clean, so holding
//! a `JunctionTree` means the running intersection property holds. A
//! [`CherryTree`] further fixes all cluster sizes to `k` and all separator
//! sizes to `k - 1`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

use crate::error::{Error, Result};
use crate::set::VertexSet;
use crate::tree::{adjacency, kruskal, parents_from, UnionFind};

/// Clusters over a vertex set, linked by edges given as cluster-index pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterGraph {
    pub vertices: VertexSet,
    pub clusters: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

impl ClusterGraph {
    pub fn new(vertices: VertexSet, clusters: Vec<VertexSet>, edges: Vec<(usize, usize)>) -> Self {
        ClusterGraph {
            vertices,
            clusters,
            edges,
        }
    }
}

/// One failed invariant. Structure-level and vine-level violations share
/// this type so that both validators produce the same report shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NonPositiveVertex { cluster: VertexSet },
    EmptyCluster { index: usize },
    EdgeCount { expected: usize, found: usize },
    Cycle { left: VertexSet, right: VertexSet },
    Disconnected { left: VertexSet, right: VertexSet },
    NotAntichain { subset: VertexSet, superset: VertexSet },
    Coverage { missing: VertexSet, extra: VertexSet },
    /// `left ∩ right` is not contained in `via`, which lies on the tree path
    /// between them.
    RunningIntersection { left: VertexSet, right: VertexSet, via: VertexSet },
    LevelOrder { level: usize, found: usize },
    LevelVertices { level: usize },
    LevelClusterCount { level: usize, expected: usize, found: usize },
    NotBaseEdge { cluster: VertexSet },
    MissingBaseEdge { edge: VertexSet },
    /// Cluster of `level` is not the union of two clusters linked one level below.
    NotLinkedUnion { level: usize, cluster: VertexSet },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            NonPositiveVertex { cluster } => write!(f, "cluster {cluster} contains vertex 0"),
            EmptyCluster { index } => write!(f, "cluster #{index} is empty"),
            EdgeCount { expected, found } => write!(f, "expected {expected} edges, found {found}"),
            Cycle { left, right } => write!(f, "edge {left}-{right} closes a cycle"),
            Disconnected { left, right } => write!(f, "clusters {left} and {right} are not connected"),
            NotAntichain { subset, superset } => {
                write!(f, "cluster {subset} is contained in cluster {superset}")
            }
            Coverage { missing, extra } => {
                write!(f, "cluster union differs from the vertex set (missing {missing}, extra {extra})")
            }
            RunningIntersection { left, right, via } => write!(
                f,
                "running intersection fails: {left} and {right} share {} but {via} on the path between them does not contain it",
                left.intersection(right)
            ),
            LevelOrder { level, found } => write!(f, "level {level} has order {found}"),
            LevelVertices { level } => write!(f, "level {level} is over a different vertex set"),
            LevelClusterCount { level, expected, found } => {
                write!(f, "level {level} has {found} clusters, expected {expected}")
            }
            NotBaseEdge { cluster } => write!(f, "level 2 cluster {cluster} is not an edge of the base tree"),
            MissingBaseEdge { edge } => write!(f, "base edge {edge} is not a level 2 cluster"),
            NotLinkedUnion { level, cluster } => write!(
                f,
                "level {level} cluster {cluster} is not the union of two clusters linked at level {}",
                level - 1
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub(crate) fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks connectivity, acyclicity, the antichain property, vertex coverage
/// and the running intersection property.
///
/// Malformed input (no clusters, edge indices out of range, self loops) is an
/// `Err`; invariant failures are collected in the returned report.
pub fn check_rip(graph: &ClusterGraph) -> Result<ValidationReport> {
    let n = graph.clusters.len();
    if n == 0 {
        return Err(Error::NoClusters);
    }
    for (edge, &(left, right)) in graph.edges.iter().enumerate() {
        let reason = if left >= n || right >= n {
            "cluster index out of range"
        } else if left == right {
            "self loop"
        } else {
            continue;
        };
        return Err(Error::MalformedEdge {
            edge,
            left,
            right,
            reason,
        });
    }

    let clusters = &graph.clusters;
    let mut report = ValidationReport::default();

    for (index, c) in clusters.iter().enumerate() {
        if c.is_empty() {
            report.push(Violation::EmptyCluster { index });
        }
        if c.first() == Some(0) {
            report.push(Violation::NonPositiveVertex { cluster: c.clone() });
        }
    }

    if graph.edges.len() != n - 1 {
        report.push(Violation::EdgeCount {
            expected: n - 1,
            found: graph.edges.len(),
        });
    }
    let mut uf = UnionFind::new(n);
    let mut is_tree = true;
    for &(a, b) in &graph.edges {
        if !uf.union(a, b) {
            is_tree = false;
            report.push(Violation::Cycle {
                left: clusters[a].clone(),
                right: clusters[b].clone(),
            });
        }
    }
    let root = uf.find(0);
    if let Some(other) = (1..n).find(|&i| uf.find(i) != root) {
        is_tree = false;
        report.push(Violation::Disconnected {
            left: clusters[0].clone(),
            right: clusters[other].clone(),
        });
    }

    for i in 0..n {
        for j in 0..n {
            if i != j && clusters[i].is_subset(&clusters[j]) && (clusters[i] != clusters[j] || i < j) {
                report.push(Violation::NotAntichain {
                    subset: clusters[i].clone(),
                    superset: clusters[j].clone(),
                });
            }
        }
    }

    let covered: VertexSet = clusters.iter().flat_map(|c| c.iter()).collect();
    if covered != graph.vertices {
        report.push(Violation::Coverage {
            missing: graph.vertices.difference(&covered),
            extra: covered.difference(&graph.vertices),
        });
    }

    if is_tree {
        let adj = adjacency(n, &graph.edges);
        for i in 0..n {
            let parent = parents_from(&adj, i);
            for j in (i + 1)..n {
                let shared = clusters[i].intersection(&clusters[j]);
                let mut cur = parent[j];
                while let Some(c) = cur {
                    if c == i {
                        break;
                    }
                    if !shared.is_subset(&clusters[c]) {
                        report.push(Violation::RunningIntersection {
                            left: clusters[i].clone(),
                            right: clusters[j].clone(),
                            via: clusters[c].clone(),
                        });
                        break;
                    }
                    cur = parent[c];
                }
            }
        }
    }

    Ok(report)
}

/// A cluster tree satisfying every invariant checked by [`check_rip`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JunctionTree {
    vertices: VertexSet,
    clusters: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    separators: Vec<VertexSet>,
}

impl JunctionTree {
    pub fn new(graph: ClusterGraph) -> Result<Self> {
        let report = check_rip(&graph)?;
        if !report.is_ok() {
            return Err(Error::InvalidJunctionTree(report));
        }
        let separators = graph
            .edges
            .iter()
            .map(|&(a, b)| graph.clusters[a].intersection(&graph.clusters[b]))
            .collect();
        Ok(JunctionTree {
            vertices: graph.vertices,
            clusters: graph.clusters,
            edges: graph.edges,
            separators,
        })
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn clusters(&self) -> &[VertexSet] {
        &self.clusters
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Separator of each edge, aligned with [`edges`](Self::edges).
    pub fn separators(&self) -> &[VertexSet] {
        &self.separators
    }

    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    pub fn degree(&self, cluster: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == cluster || b == cluster).count()
    }

    /// Distinct separators on the edges incident to `cluster`, sorted.
    pub fn incident_separators(&self, cluster: usize) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self
            .edges
            .iter()
            .zip(&self.separators)
            .filter(|(&(a, b), _)| a == cluster || b == cluster)
            .map(|(_, s)| s.clone())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn position(&self, cluster: &VertexSet) -> Option<usize> {
        self.clusters.iter().position(|c| c == cluster)
    }

    pub fn to_graph(&self) -> ClusterGraph {
        ClusterGraph::new(self.vertices.clone(), self.clusters.clone(), self.edges.clone())
    }

    /// Cluster set as a sorted list, independent of storage order.
    pub fn sorted_clusters(&self) -> Vec<VertexSet> {
        let mut c = self.clusters.clone();
        c.sort();
        c
    }

    /// Edges as sorted pairs of cluster contents, independent of storage order.
    pub fn edge_contents(&self) -> Vec<(VertexSet, VertexSet)> {
        let mut e: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (self.clusters[a].clone(), self.clusters[b].clone());
                if x <= y { (x, y) } else { (y, x) }
            })
            .collect();
        e.sort();
        e
    }
}

/// Distinct separators with their multiplicities `ν_S`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SeparatorTable {
    entries: Vec<(VertexSet, usize)>,
}

impl SeparatorTable {
    /// `(separator, ν_S)` sorted by separator.
    pub fn entries(&self) -> &[(VertexSet, usize)] {
        &self.entries
    }

    pub fn multiplicity(&self, separator: &VertexSet) -> Option<usize> {
        self.entries
            .binary_search_by(|(s, _)| s.cmp(separator))
            .ok()
            .map(|i| self.entries[i].1)
    }

    pub fn separators(&self) -> impl Iterator<Item = &VertexSet> {
        self.entries.iter().map(|(s, _)| s)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Groups edge separators. `ν_S` is one more than the number of edges
/// labelled `S`; in a cherry-tree those edges form a connected subtree, so
/// this equals the number of clusters linked through `S`.
pub fn separator_table(jt: &JunctionTree) -> SeparatorTable {
    let mut counts: BTreeMap<VertexSet, usize> = BTreeMap::new();
    for s in jt.separators() {
        *counts.entry(s.clone()).or_insert(1) += 1;
    }
    SeparatorTable {
        entries: counts.into_iter().collect(),
    }
}

/// Junction tree whose clusters all have size `k` and whose separators all
/// have size `k - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CherryTree {
    tree: JunctionTree,
    order: usize,
}

impl CherryTree {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn junction_tree(&self) -> &JunctionTree {
        &self.tree
    }

    pub fn into_junction_tree(self) -> JunctionTree {
        self.tree
    }

    /// Convenience: build and validate in one step.
    pub fn from_graph(graph: ClusterGraph, order: usize) -> Result<Self> {
        validate_cherry(JunctionTree::new(graph)?, order)
    }
}

impl Deref for CherryTree {
    type Target = JunctionTree;

    fn deref(&self) -> &JunctionTree {
        &self.tree
    }
}

/// Checks the cherry-tree size constraints. Order 1 is accepted (singleton
/// clusters, empty separators); it only arises as the separator tree of an
/// order-2 cherry-tree.
pub fn validate_cherry(jt: JunctionTree, k: usize) -> Result<CherryTree> {
    if k == 0 {
        return Err(Error::ZeroOrder);
    }
    if let Some(c) = jt.clusters.iter().find(|c| c.len() != k) {
        return Err(Error::ClusterSize {
            cluster: c.clone(),
            expected: k,
            found: c.len(),
        });
    }
    for (&(a, b), s) in jt.edges.iter().zip(&jt.separators) {
        if s.len() != k - 1 {
            return Err(Error::SeparatorSize {
                left: jt.clusters[a].clone(),
                right: jt.clusters[b].clone(),
                separator: s.clone(),
                expected: k - 1,
                found: s.len(),
            });
        }
    }
    Ok(CherryTree { tree: jt, order: k })
}

/// Re-links every group of clusters sharing a separator as a star around the
/// lexicographically smallest member, so that one cluster carries all links
/// of a given separator. Cluster order is kept; each group's star edges take
/// the place of the group's first edge.
pub fn canonicalize(ct: &CherryTree) -> CherryTree {
    let jt = &ct.tree;
    let mut groups: BTreeMap<&VertexSet, Vec<usize>> = BTreeMap::new();
    for (e, s) in jt.separators.iter().enumerate() {
        groups.entry(s).or_default().push(e);
    }

    let mut emitted: BTreeMap<&VertexSet, bool> = BTreeMap::new();
    let mut edges = Vec::with_capacity(jt.edges.len());
    for (e, s) in jt.separators.iter().enumerate() {
        let group = &groups[s];
        if group.len() == 1 {
            edges.push(jt.edges[e]);
            continue;
        }
        if core::mem::replace(emitted.entry(s).or_insert(false), true) {
            continue;
        }
        let mut members: Vec<usize> = group.iter().flat_map(|&g| [jt.edges[g].0, jt.edges[g].1]).collect();
        members.sort_by(|&a, &b| jt.clusters[a].cmp(&jt.clusters[b]).then(a.cmp(&b)));
        members.dedup();
        let hub = members[0];
        edges.extend(members[1..].iter().map(|&m| (hub, m)));
    }

    let graph = ClusterGraph::new(jt.vertices.clone(), jt.clusters.clone(), edges);
    CherryTree::from_graph(graph, ct.order).expect("re-linking a separator group as a star preserves the cherry-tree")
}

/// Finds a junction tree over the given clusters if one exists, using the
/// maximum-weight spanning tree of the cluster intersection graph (weights
/// `|A ∩ B|`, ties broken lexicographically by cluster content). A clique set
/// admits a junction tree iff this tree is one.
pub fn junction_tree_exists(clusters: &[VertexSet]) -> Option<JunctionTree> {
    if clusters.is_empty() {
        return None;
    }
    let n = clusters.len();
    let mut candidates: Vec<(usize, usize, usize)> = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            candidates.push((clusters[i].intersection_len(&clusters[j]), i, j));
        }
    }
    let key = |i: usize, j: usize| {
        if clusters[i] <= clusters[j] {
            (&clusters[i], &clusters[j])
        } else {
            (&clusters[j], &clusters[i])
        }
    };
    candidates.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| key(a.1, a.2).cmp(&key(b.1, b.2))));
    let edges = kruskal(n, candidates.into_iter().map(|(_, i, j)| (i, j)));
    let vertices: VertexSet = clusters.iter().flat_map(|c| c.iter()).collect();
    JunctionTree::new(ClusterGraph::new(vertices, clusters.to_vec(), edges)).ok()
}
