//! Seeded random structures for property tests and self-checks.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::density::{CorrelationMatrix, UnitPoint};
use crate::set::{Vertex, VertexSet};
use crate::structures::{CherryTree, ClusterGraph, JunctionTree};
use crate::tree::kruskal;
use crate::vine::{BaseTree, TruncatedRVine};

fn permutation<R: Rng + ?Sized>(rng: &mut R, d: usize) -> Vec<Vertex> {
    let mut p: Vec<Vertex> = (1..=d as Vertex).collect();
    p.shuffle(rng);
    p
}

/// Random order-`k` cherry-tree on `{1..d}` (a `k`-tree grown one vertex at
/// a time, each new cluster hanging off a uniformly chosen one). Panics
/// unless `1 <= k <= d`.
pub fn random_cherry_tree<R: Rng + ?Sized>(rng: &mut R, d: usize, k: usize) -> CherryTree {
    grow_cherry_tree(rng, d, k, |rng, n| rng.gen_range(0..n))
}

/// Like [`random_cherry_tree`], but new clusters attach to the first cluster
/// two times out of three. That hub usually ends up with three or more
/// distinct separators, so most of these trees are not truncated R-vines.
pub fn random_bushy_cherry_tree<R: Rng + ?Sized>(rng: &mut R, d: usize, k: usize) -> CherryTree {
    grow_cherry_tree(rng, d, k, |rng, n| if rng.gen_bool(2.0 / 3.0) { 0 } else { rng.gen_range(0..n) })
}

fn grow_cherry_tree<R: Rng + ?Sized>(
    rng: &mut R,
    d: usize,
    k: usize,
    pick_host: impl Fn(&mut R, usize) -> usize,
) -> CherryTree {
    assert!(1 <= k && k <= d, "need 1 <= k <= d");
    let perm = permutation(rng, d);
    let mut clusters = vec![perm[..k].iter().copied().collect::<VertexSet>()];
    let mut edges = Vec::new();
    for &v in &perm[k..] {
        let host = pick_host(rng, clusters.len());
        let c = &clusters[host];
        let drop = c.as_slice()[rng.gen_range(0..k)];
        let next = c.without(drop).with(v);
        clusters.push(next);
        edges.push((host, clusters.len() - 1));
    }
    CherryTree::from_graph(ClusterGraph::new(VertexSet::range(d), clusters, edges), k)
        .expect("k-tree growth yields a cherry-tree")
}

/// Random junction tree on `{1..d}` with clusters of size at most
/// `max_cluster`. Separators may be empty.
pub fn random_junction_tree<R: Rng + ?Sized>(rng: &mut R, d: usize, max_cluster: usize) -> JunctionTree {
    assert!(d >= 1 && max_cluster >= 1, "need d >= 1 and max_cluster >= 1");
    let perm = permutation(rng, d);
    let first = rng.gen_range(1..=max_cluster.min(d));
    let mut clusters = vec![perm[..first].iter().copied().collect::<VertexSet>()];
    let mut edges = Vec::new();
    let mut next = first;
    while next < d {
        let host = rng.gen_range(0..clusters.len());
        let c = clusters[host].as_slice().to_vec();
        // keep the separator a proper subset so no cluster contains another
        let sep_len = rng.gen_range(0..c.len()).min(max_cluster - 1);
        let fresh = rng.gen_range(1..=(max_cluster - sep_len).min(d - next));
        let mut picked = c;
        picked.shuffle(rng);
        picked.truncate(sep_len);
        picked.extend_from_slice(&perm[next..next + fresh]);
        next += fresh;
        clusters.push(picked.into_iter().collect());
        edges.push((host, clusters.len() - 1));
    }
    JunctionTree::new(ClusterGraph::new(VertexSet::range(d), clusters, edges))
        .expect("growth from proper separators yields a junction tree")
}

/// Random vine on `{1..d}` truncated at level `k` (`1 <= k <= d`, and
/// `d >= 2` when `k >= 2`). Every tree is a uniform-ish random spanning tree
/// of the proximity graph over the edges below.
pub fn random_vine<R: Rng + ?Sized>(rng: &mut R, d: usize, k: usize) -> TruncatedRVine {
    assert!(d >= 1 && 1 <= k && k <= d.max(1), "need 1 <= k <= d");
    let perm = permutation(rng, d);
    let mut base_edges = Vec::with_capacity(d.saturating_sub(1));
    for i in 1..d {
        let j = rng.gen_range(0..i);
        base_edges.push((perm[j], perm[i]));
    }
    let base = BaseTree::new(VertexSet::range(d), base_edges.clone()).expect("random attachment gives a tree");

    // Nodes of the current tree with the pair of nodes below they join.
    let mut nodes: Vec<(VertexSet, (usize, usize))> = base_edges
        .iter()
        .map(|&(a, b)| (VertexSet::from([a, b]), (a as usize - 1, b as usize - 1)))
        .collect();
    let mut levels = Vec::new();
    for order in 2..=k {
        let n = nodes.len();
        let mut cand = Vec::new();
        for p in 0..n {
            for q in p + 1..n {
                let ((a, b), (x, y)) = (nodes[p].1, nodes[q].1);
                if a == x || a == y || b == x || b == y {
                    cand.push((p, q));
                }
            }
        }
        cand.shuffle(rng);
        let links = kruskal(n, cand);
        let clusters: Vec<VertexSet> = nodes.iter().map(|(c, _)| c.clone()).collect();
        let tree = CherryTree::from_graph(ClusterGraph::new(VertexSet::range(d), clusters, links.clone()), order)
            .expect("proximity trees over a vine level are cherry-trees");
        nodes = links
            .iter()
            .map(|&(p, q)| (nodes[p].0.union(&nodes[q].0), (p, q)))
            .collect();
        levels.push(tree);
    }
    TruncatedRVine::new(base, levels).expect("forward construction yields a valid vine")
}

/// Random correlation matrix: `A Aᵀ + 0.1 I` with uniform `A`, rescaled to a
/// unit diagonal.
pub fn random_correlation<R: Rng + ?Sized>(rng: &mut R, d: usize) -> CorrelationMatrix {
    let a: Vec<f64> = (0..d * d).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let mut s = vec![0.0; d * d];
    for i in 0..d {
        for j in 0..=i {
            let mut x: f64 = (0..d).map(|t| a[i * d + t] * a[j * d + t]).sum();
            if i == j {
                x += 0.1;
            }
            s[i * d + j] = x;
            s[j * d + i] = x;
        }
    }
    let scale: Vec<f64> = (0..d).map(|i| libm::sqrt(s[i * d + i])).collect();
    for i in 0..d {
        for j in 0..d {
            s[i * d + j] = if i == j { 1.0 } else { s[i * d + j] / (scale[i] * scale[j]) };
        }
    }
    CorrelationMatrix::new(d, s).expect("AAᵀ + 0.1 I is positive definite")
}

/// Uniform point in the open unit cube.
pub fn random_unit_point<R: Rng + ?Sized>(rng: &mut R, d: usize) -> UnitPoint {
    UnitPoint::new((0..d).map(|_| rng.gen_range(0.0..1.0)).collect()).expect("samples lie in [0, 1)")
}
