//! Fixtures and independent numerical oracles shared by the integration
//! tests.
#![allow(dead_code)]

use cherryvine_core::{BaseTree, CherryTree, ClusterGraph, JunctionTree, TruncatedRVine, VertexSet};

pub fn set(v: &[u32]) -> VertexSet {
    VertexSet::from(v)
}

pub fn jt(d: usize, clusters: &[&[u32]], edges: &[(usize, usize)]) -> JunctionTree {
    JunctionTree::new(ClusterGraph::new(
        VertexSet::range(d),
        clusters.iter().map(|c| set(c)).collect(),
        edges.to_vec(),
    ))
    .unwrap()
}

pub fn cherry(d: usize, k: usize, clusters: &[&[u32]], edges: &[(usize, usize)]) -> CherryTree {
    CherryTree::from_graph(
        ClusterGraph::new(VertexSet::range(d), clusters.iter().map(|c| set(c)).collect(), edges.to_vec()),
        k,
    )
    .unwrap()
}

/// Path 123 - 234 - 345.
pub fn fig1c() -> CherryTree {
    cherry(5, 3, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]], &[(0, 1), (1, 2)])
}

/// 123, 236 and 234 share {2,3}; 345 hangs off 234.
pub fn fig3() -> CherryTree {
    cherry(6, 3, &[&[1, 2, 3], &[2, 3, 4], &[2, 3, 6], &[3, 4, 5]], &[(0, 1), (1, 2), (1, 3)])
}

/// Star around 1234 with three different separators.
pub fn fig5() -> CherryTree {
    cherry(
        7,
        4,
        &[&[1, 2, 3, 4], &[1, 2, 3, 5], &[1, 3, 4, 6], &[1, 2, 4, 7]],
        &[(0, 1), (0, 2), (0, 3)],
    )
}

pub fn fig7a() -> CherryTree {
    cherry(
        8,
        4,
        &[&[1, 2, 3, 4], &[2, 3, 4, 5], &[1, 2, 3, 6], &[1, 2, 4, 7], &[3, 4, 5, 8]],
        &[(0, 1), (0, 2), (0, 3), (1, 4)],
    )
}

/// The six-variable vine with base tree 12, 23, 26, 34, 45.
pub fn example22() -> TruncatedRVine {
    let base = BaseTree::new(VertexSet::range(6), vec![(1, 2), (2, 3), (2, 6), (3, 4), (4, 5)]).unwrap();
    let t2 = cherry(
        6,
        2,
        &[&[1, 2], &[2, 3], &[2, 6], &[3, 4], &[4, 5]],
        &[(0, 1), (1, 2), (1, 3), (3, 4)],
    );
    let t3 = cherry(6, 3, &[&[1, 2, 3], &[2, 3, 6], &[2, 3, 4], &[3, 4, 5]], &[(0, 2), (1, 2), (2, 3)]);
    let t4 = cherry(6, 4, &[&[1, 2, 3, 4], &[2, 3, 4, 6], &[2, 3, 4, 5]], &[(0, 2), (1, 2)]);
    let t5 = cherry(6, 5, &[&[1, 2, 3, 4, 5], &[2, 3, 4, 5, 6]], &[(0, 1)]);
    TruncatedRVine::new(base, vec![t2, t3, t4, t5]).unwrap()
}

/// Decodes a Prüfer sequence over `n` labels into tree edges.
pub fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&i| degree[i] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&i| degree[i] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Every labelled tree on `n >= 2` nodes.
pub fn all_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 2 {
        return vec![vec![(0, 1)]];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let x = code % n;
                    code /= n;
                    x
                })
                .collect();
            prufer_edges(&seq, n)
        })
        .collect()
}

/// Standard normal CDF by quadrature of the density (independent of the
/// library's `erfc`-based implementation).
pub fn phi_cdf(x: f64) -> f64 {
    // composite Simpson on the density from 0, with symmetry
    let n = 4000;
    let a = x.abs();
    let h = a / n as f64;
    let f = |t: f64| (-0.5 * t * t).exp() / (2.0 * std::f64::consts::PI).sqrt();
    let mut s = f(0.0) + f(a);
    for i in 1..n {
        let t = i as f64 * h;
        s += if i % 2 == 1 { 4.0 * f(t) } else { 2.0 * f(t) };
    }
    let half = s * h / 3.0;
    if x >= 0.0 {
        0.5 + half
    } else {
        0.5 - half
    }
}

/// Bivariate standard normal CDF through Plackett's identity
/// `Φ₂(x, y; ρ) = Φ(x)Φ(y) + ∫₀^ρ φ₂(x, y; r) dr`, integrated with 10-point
/// Gauss-Legendre on 64 panels.
pub fn bvn_cdf(x: f64, y: f64, rho: f64, phi_x: f64, phi_y: f64) -> f64 {
    let dens = |r: f64| {
        let s = 1.0 - r * r;
        (-(x * x - 2.0 * r * x * y + y * y) / (2.0 * s)).exp() / (2.0 * std::f64::consts::PI * s.sqrt())
    };
    phi_x * phi_y + gauss_legendre(dens, 0.0, rho, 64)
}

pub fn gauss_legendre(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    const X: [f64; 5] = [
        0.148_874_338_981_631_21,
        0.433_395_394_129_247_2,
        0.679_409_568_299_024_4,
        0.865_063_366_688_984_5,
        0.973_906_528_517_171_7,
    ];
    const W: [f64; 5] = [
        0.295_524_224_714_752_87,
        0.269_266_719_309_996_35,
        0.219_086_362_515_982_04,
        0.149_451_349_150_580_6,
        0.066_671_344_308_688_14,
    ];
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let mid = a + (p as f64 + 0.5) * h;
        let half = 0.5 * h;
        for i in 0..5 {
            total += W[i] * half * (f(mid - half * X[i]) + f(mid + half * X[i]));
        }
    }
    total
}

/// Gaussian copula CDF `C(u, v) = Φ₂(Φ⁻¹(u), Φ⁻¹(v); ρ)`.
pub fn gaussian_copula_cdf(u: f64, v: f64, rho: f64) -> f64 {
    use cherryvine_core::density::normal::ppf;
    bvn_cdf(ppf(u), ppf(v), rho, u, v)
}

pub fn clayton_cdf(u: f64, v: f64, theta: f64) -> f64 {
    (u.powf(-theta) + v.powf(-theta) - 1.0).powf(-1.0 / theta)
}

/// Exhaustive check that some vine sequence ends in `ct`. Every cluster
/// with two distinct separators must be the union of exactly those two one
/// level down, and every leaf `S ∪ {x}` must come from linking `S` with
/// `S \ {v} ∪ {x}` for some `v ∈ S`; each leaf's `v` is chosen
/// independently here.
pub fn vine_below_exists(ct: &CherryTree) -> bool {
    let m = ct.order();
    if m <= 2 || ct.len() == 1 {
        return true;
    }
    let mut seps: Vec<VertexSet> = ct.separators().to_vec();
    seps.sort();
    seps.dedup();
    let mut forced = Vec::new();
    let mut leaves = Vec::new();
    for c in ct.clusters() {
        let mine: Vec<usize> = (0..seps.len()).filter(|&i| seps[i].is_subset(c)).collect();
        match mine.as_slice() {
            [s] => leaves.push((c.clone(), *s)),
            [a, b] => forced.push((*a, *b)),
            _ => return false,
        }
    }
    let mut choice = vec![0usize; leaves.len()];
    loop {
        let mut clusters = seps.clone();
        let mut edges = forced.clone();
        for ((leaf, s), &c) in leaves.iter().zip(&choice) {
            let v = seps[*s].as_slice()[c];
            clusters.push(leaf.without(v));
            edges.push((*s, clusters.len() - 1));
        }
        if let Ok(lower) = CherryTree::from_graph(ClusterGraph::new(ct.vertices().clone(), clusters, edges), m - 1) {
            if vine_below_exists(&lower) {
                return true;
            }
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return false;
            }
            choice[i] += 1;
            if choice[i] < m - 1 {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}
