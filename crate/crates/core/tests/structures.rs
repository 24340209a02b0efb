mod common;

use cherryvine_core::generate::{random_cherry_tree, random_junction_tree};
use cherryvine_core::{
    canonicalize, check_rip, junction_tree_exists, separator_table, ClusterGraph, JunctionTree, VertexSet,
};
use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Path between two clusters of a tree, both endpoints included.
fn path(jt: &JunctionTree, from: usize, to: usize) -> Vec<usize> {
    let n = jt.len();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in jt.edges() {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut prev = vec![usize::MAX; n];
    let mut stack = vec![from];
    prev[from] = from;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if prev[y] == usize::MAX {
                prev[y] = x;
                stack.push(y);
            }
        }
    }
    let mut out = vec![to];
    let mut cur = to;
    while cur != from {
        cur = prev[cur];
        out.push(cur);
    }
    out
}

fn rip_by_paths(jt: &JunctionTree) -> bool {
    let c = jt.clusters();
    (0..c.len()).all(|i| {
        (i + 1..c.len()).all(|j| {
            let cap = c[i].intersection(&c[j]);
            path(jt, i, j).iter().all(|&p| cap.is_subset(&c[p]))
        })
    })
}

/// Separator multiplicities recomputed from scratch: ν_S is one more than
/// the number of edges labelled S.
fn table_by_hand(jt: &JunctionTree) -> Vec<(VertexSet, usize)> {
    let mut seps: Vec<VertexSet> = jt
        .edges()
        .iter()
        .map(|&(a, b)| jt.clusters()[a].intersection(&jt.clusters()[b]))
        .collect();
    seps.sort();
    let mut out: Vec<(VertexSet, usize)> = Vec::new();
    for s in seps {
        match out.last_mut() {
            Some((t, n)) if *t == s => *n += 1,
            _ => out.push((s, 2)),
        }
    }
    out
}

#[test]
fn accepted_trees_satisfy_rip_along_every_path() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..300 {
        let d = rng.gen_range(1..10);
        let jt = random_junction_tree(&mut rng, d, 4);
        assert!(rip_by_paths(&jt));
        let table = separator_table(&jt);
        let total: usize = table.entries().iter().map(|(_, n)| n - 1).sum();
        assert_eq!(total + 1, jt.len());
        assert_eq!(table.entries(), table_by_hand(&jt).as_slice());
    }
}

#[test]
fn rejected_graphs_fail_the_path_restatement() {
    // swap one edge endpoint and compare the validator with brute force
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut rejected = 0;
    for _ in 0..300 {
        let d = rng.gen_range(4..10);
        let jt = random_junction_tree(&mut rng, d, 4);
        if jt.len() < 3 {
            continue;
        }
        let mut edges = jt.edges().to_vec();
        let e = rng.gen_range(0..edges.len());
        let other = rng.gen_range(0..jt.len());
        edges[e].1 = other;
        if edges[e].0 == other {
            continue;
        }
        let g = ClusterGraph::new(jt.vertices().clone(), jt.clusters().to_vec(), edges.clone());
        let report = check_rip(&g).unwrap();
        let brute = match JunctionTree::new(g) {
            Ok(t) => rip_by_paths(&t),
            Err(_) => false,
        };
        // tree shape is required by both sides; RIP is compared directly
        let tree = {
            let n = jt.len();
            let mut seen = vec![false; n];
            let mut adj = vec![Vec::new(); n];
            for &(a, b) in &edges {
                adj[a].push(b);
                adj[b].push(a);
            }
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            seen.iter().all(|&s| s)
        };
        if tree {
            let probe = JunctionTree::new(ClusterGraph::new(
                jt.vertices().clone(),
                jt.clusters().to_vec(),
                edges.clone(),
            ));
            assert_eq!(report.is_ok(), probe.is_ok());
            assert_eq!(report.is_ok(), brute);
        } else {
            assert!(!report.is_ok());
        }
        if !report.is_ok() {
            rejected += 1;
        }
    }
    assert!(rejected > 20, "perturbations should break some trees");
}

#[test]
fn junction_tree_exists_matches_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut yes, mut no) = (0, 0);
    for _ in 0..400 {
        let n = rng.gen_range(1..=6);
        let mut clusters: Vec<VertexSet> = Vec::new();
        for _ in 0..1000 {
            if clusters.len() == n {
                break;
            }
            let size = rng.gen_range(1..=3);
            let c: VertexSet = (0..size).map(|_| rng.gen_range(1..=6u32)).collect();
            if clusters.iter().all(|o| !o.is_subset(&c) && !c.is_subset(o)) {
                clusters.push(c);
            }
        }
        let n = clusters.len();
        let vertices = clusters.iter().fold(VertexSet::empty(), |acc, c| acc.union(c));
        let brute = if n == 1 {
            true
        } else {
            all_trees(n).into_iter().any(|edges| {
                check_rip(&ClusterGraph::new(vertices.clone(), clusters.clone(), edges))
                    .unwrap()
                    .is_ok()
            })
        };
        let found = junction_tree_exists(&clusters);
        if let Some(t) = &found {
            assert!(check_rip(&t.to_graph()).unwrap().is_ok());
            let mut a = t.clusters().to_vec();
            let mut b = clusters.clone();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
        assert_eq!(found.is_some(), brute, "clusters {clusters:?}");
        if brute {
            yes += 1;
        } else {
            no += 1;
        }
    }
    assert!(yes > 50 && no > 50, "both outcomes exercised ({yes} / {no})");
}

#[test]
fn junction_tree_exists_fixtures() {
    assert!(junction_tree_exists(&[set(&[1, 2, 3]), set(&[2, 3, 4]), set(&[3, 4, 5])]).is_some());
    assert!(junction_tree_exists(&[set(&[1, 2, 3]), set(&[1, 3, 4]), set(&[1, 2, 4])]).is_none());
    let single = junction_tree_exists(&[set(&[1, 2])]).unwrap();
    assert!(single.edges().is_empty());
}

#[test]
fn canonical_chain_becomes_a_star() {
    let chain = cherry(5, 3, &[&[1, 2, 3], &[2, 3, 4], &[2, 3, 5]], &[(0, 1), (1, 2)]);
    let canon = canonicalize(&chain);
    let hub = canon.position(&set(&[1, 2, 3])).unwrap();
    assert_eq!(canon.degree(hub), 2);
    assert_eq!(table_by_hand(&canon), table_by_hand(&chain));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonicalize_is_idempotent_and_preserves_tables(seed in any::<u64>(), d in 2usize..12, k in 2usize..6) {
        prop_assume!(k <= d);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ct = random_cherry_tree(&mut rng, d, k);
        let once = canonicalize(&ct);
        let twice = canonicalize(&once);
        prop_assert_eq!(once.edge_contents(), twice.edge_contents());
        prop_assert_eq!(once.sorted_clusters(), ct.sorted_clusters());
        prop_assert_eq!(table_by_hand(&once), table_by_hand(&ct));
        prop_assert!(rip_by_paths(&once));
        // in canonical form every separator group is a star: one hub per separator
        for (s, n) in table_by_hand(&once) {
            let with_s: Vec<usize> = once
                .edges()
                .iter()
                .filter(|&&(a, b)| once.clusters()[a].intersection(&once.clusters()[b]) == s)
                .flat_map(|&(a, b)| [a, b])
                .collect();
            let hubs = (0..once.len()).filter(|c| with_s.iter().filter(|&&x| x == *c).count() == n - 1).count();
            prop_assert!(hubs >= 1);
        }
    }
}
