//! Small tree/graph helpers shared by the structure modules.

use alloc::vec;
use alloc::vec::Vec;

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already connected.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            core::cmp::Ordering::Less => self.parent[ra] = rb,
            core::cmp::Ordering::Greater => self.parent[rb] = ra,
            core::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Kruskal over candidates that the caller has already sorted by preference
/// (heaviest first for a maximum spanning tree). Returns the accepted edges in
/// acceptance order; the result is a spanning forest.
pub(crate) fn kruskal(n: usize, sorted: impl IntoIterator<Item = (usize, usize)>) -> Vec<(usize, usize)> {
    let mut uf = UnionFind::new(n);
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    for (a, b) in sorted {
        if uf.union(a, b) {
            out.push((a, b));
            if out.len() + 1 == n {
                break;
            }
        }
    }
    out
}

pub(crate) fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// BFS parent pointers from `root` in a tree (or forest component).
pub(crate) fn parents_from(adj: &[Vec<usize>], root: usize) -> Vec<Option<usize>> {
    let mut parent = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    let mut queue = alloc::collections::VecDeque::new();
    seen[root] = true;
    queue.push_back(root);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some(x);
                queue.push_back(y);
            }
        }
    }
    parent
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kruskal_takes_preferred_edges() {
        let picked = kruskal(4, [(0, 1), (1, 0), (1, 2), (0, 2), (2, 3)]);
        assert_eq!(picked, vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn parents_on_path() {
        let adj = adjacency(3, &[(0, 1), (1, 2)]);
        assert_eq!(parents_from(&adj, 2), vec![Some(1), Some(2), None]);
    }
}
