//! Random instance families for the benchmarks.

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};
use vcwidth_core::Graph;

/// A graph on `k + s` vertices whose first `k` vertices form a minimum
/// vertex cover. Cover vertex `i < s` is matched to side vertex `k + i`, which
/// pins the cover number at `k` when `s ≥ k`. Other cover pairs are joined
/// with probability `p_cover`, cover–side pairs with probability `p_side`.
pub fn planted_cover(k: usize, s: usize, p_cover: f64, p_side: f64, seed: u64) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            if rng.random_bool(p_cover) {
                edges.push((u, v));
            }
        }
        for w in 0..s {
            if w == u || rng.random_bool(p_side) {
                edges.push((u, k + w));
            }
        }
    }
    Graph::from_edges(k + s, edges).expect("generated edges are distinct")
}

/// A dense graph whose complement is `blocks` disjoint copies of `K4` plus
/// random edges among three chosen vertices per block, so the complement's
/// cover number is exactly `3 * blocks`.
pub fn dense_complement(blocks: usize, p_extra: f64, seed: u64) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = 4 * blocks;
    let mut missing = vec![vec![false; n]; n];
    for b in 0..blocks {
        for i in 0..4 {
            for j in i + 1..4 {
                missing[4 * b + i][4 * b + j] = true;
            }
        }
    }
    let core: Vec<usize> = (0..n).filter(|v| v % 4 != 3).collect();
    for (i, &u) in core.iter().enumerate() {
        for &v in &core[i + 1..] {
            if rng.random_bool(p_extra) {
                missing[u][v] = true;
            }
        }
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !missing[u][v]);
    Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("generated edges are distinct")
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.random_bool(p)).collect();
    Graph::from_edges(n, edges).expect("generated edges are distinct")
}
