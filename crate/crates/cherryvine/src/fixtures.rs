//! Worked examples: the cherry-trees and the six-variable vine used in the
//! demos and golden tests.

use cherryvine_core::{backward, embed, BaseTree, CherryTree, ClusterGraph, TruncatedRVine, VertexSet};

fn cherry(d: usize, k: usize, clusters: &[&[u32]], links: &[(usize, usize)]) -> CherryTree {
    let graph = ClusterGraph::new(
        VertexSet::range(d),
        clusters.iter().map(|&c| VertexSet::from(c)).collect(),
        links.to_vec(),
    );
    CherryTree::from_graph(graph, k).expect("fixture is a valid cherry-tree")
}

/// Chain 123 - 234 - 345.
pub fn fig1() -> CherryTree {
    cherry(5, 3, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]], &[(0, 1), (1, 2)])
}

/// 123, 236 and 345 attached to 234.
pub fn fig3() -> CherryTree {
    cherry(6, 3, &[&[1, 2, 3], &[2, 3, 4], &[2, 3, 6], &[3, 4, 5]], &[(0, 1), (1, 2), (1, 3)])
}

/// The vine obtained from [`fig3`] by the backward construction.
pub fn fig4() -> TruncatedRVine {
    backward(&fig3()).expect("fig3 is a truncated R-vine")
}

/// Order 4 star whose centre 1234 has three distinct separators.
pub fn fig5() -> CherryTree {
    cherry(
        7,
        4,
        &[&[1, 2, 3, 4], &[1, 2, 3, 5], &[1, 3, 4, 6], &[1, 2, 4, 7]],
        &[(0, 1), (0, 2), (0, 3)],
    )
}

/// Order 4 tree that is not a truncated R-vine, and its order 5 embedding.
pub fn fig7() -> (CherryTree, CherryTree) {
    let ct = cherry(
        8,
        4,
        &[&[1, 2, 3, 4], &[2, 3, 4, 5], &[1, 2, 3, 6], &[1, 2, 4, 7], &[3, 4, 5, 8]],
        &[(0, 1), (0, 2), (0, 3), (1, 4)],
    );
    let up = embed(&ct).expect("fig7 has more than one cluster");
    (ct, up)
}

/// Six-variable vine with base tree 12, 23, 26, 34, 45. Links are stored in
/// the order the labels are enumerated in the worked example, so
/// [`cherryvine_core::edge_labels`] lists them in that order.
pub fn example22() -> TruncatedRVine {
    let base = BaseTree::new(VertexSet::range(6), vec![(1, 2), (2, 3), (2, 6), (3, 4), (4, 5)])
        .expect("valid base tree");
    let t2 = cherry(
        6,
        2,
        &[&[1, 2], &[2, 3], &[2, 6], &[3, 4], &[4, 5]],
        &[(0, 1), (1, 2), (1, 3), (3, 4)],
    );
    let t3 = cherry(6, 3, &[&[1, 2, 3], &[2, 3, 4], &[2, 3, 6], &[3, 4, 5]], &[(0, 1), (1, 2), (1, 3)]);
    let t4 = cherry(6, 4, &[&[1, 2, 3, 4], &[2, 3, 4, 5], &[2, 3, 4, 6]], &[(0, 1), (1, 2)]);
    let t5 = cherry(6, 5, &[&[1, 2, 3, 4, 5], &[2, 3, 4, 5, 6]], &[(0, 1)]);
    TruncatedRVine::new(base, vec![t2, t3, t4, t5]).expect("valid vine")
}
