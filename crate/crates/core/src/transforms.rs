//! Recognition of truncated R-vines among cherry-trees, the backward
//! construction of a vine from its top tree, and the order-(k+1) embedding.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::set::{Vertex, VertexSet};
use crate::structures::{
    canonicalize, junction_tree_exists, separator_table, validate_cherry, CherryTree, ClusterGraph,
};
use crate::tree::{adjacency, kruskal};
use crate::vine::{BaseTree, TruncatedRVine};

/// Cluster linked to its neighbours through three or more distinct
/// separators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Offender {
    pub cluster: VertexSet,
    pub separators: Vec<VertexSet>,
}

impl fmt::Display for Offender {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cluster {} has {} distinct separators", self.cluster, self.separators.len())?;
        for s in &self.separators {
            write!(f, " {s}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TruncationWitness {
    /// The distinct separators form a cherry-tree of order `k - 1`. It is
    /// `None` only when the input has a single cluster (no separators).
    Truncated { separator_tree: Option<CherryTree> },
    /// `offender` is `None` only if no cluster has three separators even
    /// though the separator tree test failed, which would contradict the
    /// two-separator characterisation.
    NotTruncated { offender: Option<Offender> },
}

impl TruncationWitness {
    pub fn verdict(&self) -> bool {
        matches!(self, TruncationWitness::Truncated { .. })
    }

    pub fn separator_tree(&self) -> Option<&CherryTree> {
        match self {
            TruncationWitness::Truncated { separator_tree } => separator_tree.as_ref(),
            TruncationWitness::NotTruncated { .. } => None,
        }
    }

    pub fn offender(&self) -> Option<&Offender> {
        match self {
            TruncationWitness::NotTruncated { offender } => offender.as_ref(),
            TruncationWitness::Truncated { .. } => None,
        }
    }
}

fn distinct_separators(ct: &CherryTree) -> Vec<VertexSet> {
    separator_table(ct).separators().cloned().collect()
}

/// Cluster with the most distinct incident separators, if that is three or
/// more. Ties go to the lexicographically smallest cluster.
fn find_offender(ct: &CherryTree) -> Option<Offender> {
    (0..ct.len())
        .map(|i| (ct.incident_separators(i), &ct.clusters()[i]))
        .filter(|(seps, _)| seps.len() >= 3)
        .max_by(|(a, ca), (b, cb)| a.len().cmp(&b.len()).then_with(|| cb.cmp(ca)))
        .map(|(separators, cluster)| Offender {
            cluster: cluster.clone(),
            separators,
        })
}

/// A cherry-tree of order `k` is a truncated R-vine iff its distinct
/// separators, taken as clusters, form a cherry-tree of order `k - 1`.
///
/// Order-2 trees always pass: their separators are singletons, which form an
/// order-1 tree.
pub fn is_truncated_rvine(ct: &CherryTree) -> TruncationWitness {
    if ct.len() == 1 {
        return TruncationWitness::Truncated { separator_tree: None };
    }
    let seps = distinct_separators(ct);
    let tree = junction_tree_exists(&seps).and_then(|jt| validate_cherry(jt, ct.order() - 1).ok());
    match tree {
        Some(t) => TruncationWitness::Truncated { separator_tree: Some(t) },
        None => TruncationWitness::NotTruncated {
            offender: find_offender(&canonicalize(ct)),
        },
    }
}

/// Local criterion: every cluster touches at most two distinct separators.
///
/// This does not go through the spanning-tree search of
/// [`is_truncated_rvine`]; on success the separator tree is assembled
/// directly by linking the two separators of each cluster that has two.
pub fn two_separator_check(ct: &CherryTree) -> TruncationWitness {
    let canon = canonicalize(ct);
    if let Some(offender) = find_offender(&canon) {
        return TruncationWitness::NotTruncated { offender: Some(offender) };
    }
    if canon.len() == 1 {
        return TruncationWitness::Truncated { separator_tree: None };
    }
    let seps = distinct_separators(&canon);
    let index = |s: &VertexSet| seps.binary_search(s).expect("incident separators are tree separators");
    let mut links = Vec::new();
    for i in 0..canon.len() {
        if let [s1, s2] = canon.incident_separators(i).as_slice() {
            links.push((index(s1), index(s2)));
        }
    }
    links.sort_unstable();
    links.dedup();
    let vertices = seps.iter().flat_map(|s| s.iter()).collect();
    match CherryTree::from_graph(ClusterGraph::new(vertices, seps, links), canon.order() - 1) {
        Ok(t) => TruncationWitness::Truncated { separator_tree: Some(t) },
        Err(_) => TruncationWitness::NotTruncated { offender: None },
    }
}

/// Upper bound on deletion-choice combinations tried for one level.
const MAX_CHOICES_PER_LEVEL: usize = 1 << 12;

/// Builds a truncated R-vine whose top level is `ct` (kept verbatim), by
/// repeatedly turning the separators of the current tree into the clusters of
/// the next lower one and shrinking its leaf clusters by one non-simplicial
/// vertex.
pub fn backward(ct: &CherryTree) -> Result<TruncatedRVine> {
    if ct.order() < 2 {
        return Err(Error::NoValidSequence);
    }
    if let TruncationWitness::NotTruncated { offender } = is_truncated_rvine(ct) {
        return Err(Error::NotTruncated { offender });
    }
    let mut levels = descend(ct).ok_or(Error::NoValidSequence)?;
    levels.push(ct.clone());
    let base_edges = levels[0]
        .clusters()
        .iter()
        .map(|c| (c.as_slice()[0], c.as_slice()[1]))
        .collect();
    let base = BaseTree::new(ct.vertices().clone(), base_edges)?;
    TruncatedRVine::new(base, levels).map_err(|_| Error::NoValidSequence)
}

/// Lower levels (orders `2..m`) below `current`, in increasing order, or
/// `None` if every deletion choice fails.
fn descend(current: &CherryTree) -> Option<Vec<CherryTree>> {
    if current.order() == 2 {
        return Some(Vec::new());
    }
    let plan = LowerLevelPlan::new(current);
    let mut choice = vec![0usize; plan.groups.len()];
    for _ in 0..MAX_CHOICES_PER_LEVEL {
        if let Some(lower) = plan.build(&choice) {
            let ok = lower.order() < 3 || is_truncated_rvine(&lower).verdict();
            if ok {
                if let Some(mut below) = descend(&lower) {
                    below.push(lower);
                    return Some(below);
                }
            }
        }
        if !plan.advance(&mut choice) {
            break;
        }
    }
    None
}

struct LeafGroup {
    separator: usize,
    leaves: Vec<usize>,
    /// Deletion candidates in preference order.
    candidates: Vec<Vertex>,
}

/// Everything about one backward step that does not depend on the
/// deletion choices.
struct LowerLevelPlan<'a> {
    current: &'a CherryTree,
    separators: Vec<VertexSet>,
    links: Vec<(usize, usize)>,
    groups: Vec<LeafGroup>,
    /// Set when `current` is a single cluster: candidate splits `(x, y)` into
    /// `C \ {x}` and `C \ {y}`.
    splits: Vec<(Vertex, Vertex)>,
}

impl<'a> LowerLevelPlan<'a> {
    fn new(current: &'a CherryTree) -> Self {
        if current.len() == 1 {
            let c = &current.clusters()[0];
            let splits = c
                .iter()
                .flat_map(|x| c.iter().filter(move |&y| y > x).map(move |y| (x, y)))
                .collect();
            return LowerLevelPlan {
                current,
                separators: Vec::new(),
                links: Vec::new(),
                groups: vec![LeafGroup {
                    separator: 0,
                    leaves: Vec::new(),
                    candidates: Vec::new(),
                }],
                splits,
            };
        }

        let separators = distinct_separators(current);
        let index = |s: &VertexSet| separators.binary_search(s).expect("incident separators are tree separators");
        let incident: Vec<Vec<usize>> = (0..current.len())
            .map(|i| current.incident_separators(i).iter().map(index).collect())
            .collect();

        // Step 1: distinct separators sharing a cluster are linked.
        let mut links: Vec<(usize, usize)> = incident
            .iter()
            .filter_map(|inc| match inc.as_slice() {
                [a, b] => Some((*a, *b)),
                _ => None,
            })
            .collect();
        links.sort_unstable();
        links.dedup();
        if links.len() + 1 != separators.len() {
            let mut weighted: Vec<_> = links
                .iter()
                .map(|&(a, b)| (separators[a].intersection_len(&separators[b]), a, b))
                .collect();
            weighted.sort_by(|x, y| {
                y.0.cmp(&x.0)
                    .then_with(|| (&separators[x.1], &separators[x.2]).cmp(&(&separators[y.1], &separators[y.2])))
            });
            links = kruskal(separators.len(), weighted.into_iter().map(|(_, a, b)| (a, b)));
        }

        // Step 2 bookkeeping: leaves grouped by their separator. A deletion is
        // admissible when the Step-1 cluster keeps at most two distinct
        // separators; admissible vertices come first, smallest id first.
        let mut groups: Vec<LeafGroup> = Vec::new();
        for (i, inc) in incident.iter().enumerate() {
            if inc.len() != 1 {
                continue;
            }
            match groups.iter_mut().find(|g| g.separator == inc[0]) {
                Some(g) => g.leaves.push(i),
                None => groups.push(LeafGroup {
                    separator: inc[0],
                    leaves: vec![i],
                    candidates: Vec::new(),
                }),
            }
        }
        for g in &mut groups {
            let s = &separators[g.separator];
            let mut existing: Vec<VertexSet> = links
                .iter()
                .filter_map(|&(a, b)| match (a == g.separator, b == g.separator) {
                    (true, _) => Some(s.intersection(&separators[b])),
                    (_, true) => Some(s.intersection(&separators[a])),
                    _ => None,
                })
                .collect();
            existing.sort();
            existing.dedup();
            let admissible = |v: Vertex| existing.len() + usize::from(!existing.contains(&s.without(v))) <= 2;
            let mut cands: Vec<Vertex> = s.iter().collect();
            cands.sort_by_key(|&v| (!admissible(v), v));
            g.candidates = cands;
        }
        groups.sort_by_key(|g| g.separator);

        LowerLevelPlan {
            current,
            separators,
            links,
            groups,
            splits: Vec::new(),
        }
    }

    fn advance(&self, choice: &mut [usize]) -> bool {
        if !self.splits.is_empty() {
            choice[0] += 1;
            return choice[0] < self.splits.len();
        }
        for (c, g) in choice.iter_mut().zip(&self.groups) {
            *c += 1;
            if *c < g.candidates.len() {
                return true;
            }
            *c = 0;
        }
        false
    }

    fn build(&self, choice: &[usize]) -> Option<CherryTree> {
        let order = self.current.order() - 1;
        let (clusters, edges) = if !self.splits.is_empty() {
            let c = &self.current.clusters()[0];
            let (x, y) = self.splits[choice[0]];
            (vec![c.without(y), c.without(x)], vec![(0, 1)])
        } else {
            let mut clusters = self.separators.clone();
            let mut edges = self.links.clone();
            for (g, &c) in self.groups.iter().zip(choice) {
                let v = g.candidates[c];
                for &leaf in &g.leaves {
                    clusters.push(self.current.clusters()[leaf].without(v));
                    edges.push((g.separator, clusters.len() - 1));
                }
            }
            (clusters, edges)
        };
        let graph = sorted_graph(self.current.vertices().clone(), clusters, edges);
        CherryTree::from_graph(graph, order).ok()
    }
}

/// Reorders clusters lexicographically and remaps edges accordingly; edges
/// are then sorted by index pair.
fn sorted_graph(vertices: VertexSet, clusters: Vec<VertexSet>, edges: Vec<(usize, usize)>) -> ClusterGraph {
    let mut order: Vec<usize> = (0..clusters.len()).collect();
    order.sort_by(|&a, &b| clusters[a].cmp(&clusters[b]));
    let mut rank = vec![0; clusters.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    let mut edges: Vec<(usize, usize)> = edges
        .into_iter()
        .map(|(a, b)| (rank[a].min(rank[b]), rank[a].max(rank[b])))
        .collect();
    edges.sort_unstable();
    let clusters = order.into_iter().map(|i| clusters[i].clone()).collect();
    ClusterGraph::new(vertices, clusters, edges)
}

/// Joins neighbouring clusters of the canonical form of `ct` into an
/// order-(k+1) cherry-tree that is always a truncated R-vine.
///
/// The canonical tree is rooted at its highest-degree cluster. Every other
/// cluster `c` with parent `p` yields `c ∪ p`; `c ∪ p` is linked to
/// `p ∪ parent(p)`, and the unions of the root's children are star-linked
/// through the first child's union.
pub fn embed(ct: &CherryTree) -> Result<CherryTree> {
    if ct.len() < 2 {
        return Err(Error::NothingToJoin);
    }
    let canon = canonicalize(ct);
    let clusters = canon.clusters();
    let n = clusters.len();
    let root = (0..n)
        .max_by(|&a, &b| canon.degree(a).cmp(&canon.degree(b)).then_with(|| clusters[b].cmp(&clusters[a])))
        .expect("at least two clusters");

    let mut adj = adjacency(n, canon.edges());
    for list in &mut adj {
        list.sort_by(|&a, &b| clusters[a].cmp(&clusters[b]));
    }
    let mut parent = vec![None; n];
    let mut visit = vec![root];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut head = 0;
    while head < visit.len() {
        let x = visit[head];
        head += 1;
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some(x);
                visit.push(y);
            }
        }
    }

    let mut new_index = vec![usize::MAX; n];
    let mut joined = Vec::with_capacity(n - 1);
    for &c in &visit[1..] {
        let p = parent[c].expect("non-root clusters have a parent");
        new_index[c] = joined.len();
        joined.push(clusters[c].union(&clusters[p]));
    }
    let first_child = visit[1];
    let mut edges = Vec::with_capacity(n.saturating_sub(2));
    for &c in &visit[2..] {
        let p = parent[c].expect("non-root clusters have a parent");
        if p == root {
            edges.push((new_index[first_child], new_index[c]));
        } else {
            edges.push((new_index[p], new_index[c]));
        }
    }

    let graph = ClusterGraph::new(ct.vertices().clone(), joined, edges);
    Ok(CherryTree::from_graph(graph, ct.order() + 1).expect("joined neighbours form an order-(k+1) cherry-tree"))
}
