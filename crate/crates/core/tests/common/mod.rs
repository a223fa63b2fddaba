#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};
use vcwidth_core::{emit_gr, emit_td, treewidth_vc_4k, Graph};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn erdos_renyi(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.random_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

/// First `k` vertices form a minimum vertex cover: cover vertex `i < s` is
/// matched to side vertex `k + i`.
pub fn planted_cover(rng: &mut StdRng, k: usize, s: usize, p_cover: f64, p_side: f64) -> Graph {
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
    Graph::from_edges(k + s, edges).unwrap()
}

/// Complement is `blocks` disjoint `K4` plus random edges among three
/// vertices per block, so its cover number is `3 * blocks`.
pub fn dense_complement(rng: &mut StdRng, blocks: usize, p_extra: f64) -> Graph {
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
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !missing[u][v]).collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Adds `x` as a universal vertex by hand (independent of the library).
pub fn with_universal(g: &Graph) -> Graph {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().chain((0..n).map(|v| (v, n))).collect();
    Graph::from_edges(n + 1, edges).unwrap()
}

/// Text documents damaged in assorted ways, starting from valid `.gr` and
/// `.td` files.
pub fn fuzz_corpus(rng: &mut StdRng, count: usize) -> Vec<Vec<u8>> {
    let mut seeds: Vec<Vec<u8>> = Vec::new();
    for i in 0..20 {
        let g = erdos_renyi(rng, 3 + i % 6, 0.5);
        seeds.push(emit_gr(&g).into_bytes());
        let d = treewidth_vc_4k(&g, None).unwrap().witness;
        seeds.push(emit_td(&d, g.n()).into_bytes());
    }
    let junk: [&[u8]; 12] = [
        b"p", b"td", b"s", b"b", b"c", b"-1", b"0", b"99999999999999999999", b"x", b"\xff\xfe", b"\n", b" ",
    ];
    (0..count)
        .map(|_| {
            let mut doc = seeds[rng.random_range(0..seeds.len())].clone();
            for _ in 0..rng.random_range(1..5) {
                let len = doc.len();
                match rng.random_range(0..7) {
                    0 if len > 0 => {
                        doc.remove(rng.random_range(0..len));
                    }
                    1 => {
                        let at = rng.random_range(0..=len);
                        doc.insert(at, rng.random());
                    }
                    2 => {
                        let at = rng.random_range(0..=len);
                        let j = junk[rng.random_range(0..junk.len())];
                        doc.splice(at..at, j.iter().copied());
                    }
                    3 if len > 0 => {
                        doc.truncate(rng.random_range(0..len));
                    }
                    4 => {
                        let lines: Vec<&[u8]> = doc.split(|&b| b == b'\n').collect();
                        let pick = lines[rng.random_range(0..lines.len())].to_vec();
                        doc.extend_from_slice(b"\n");
                        doc.extend_from_slice(&pick);
                    }
                    5 if len > 0 => {
                        let at = rng.random_range(0..len);
                        doc[at] = b"0123456789 \n"[rng.random_range(0..12)];
                    }
                    _ => {
                        let mut lines: Vec<Vec<u8>> = doc.split(|&b| b == b'\n').map(|l| l.to_vec()).collect();
                        if lines.len() > 1 {
                            let a = rng.random_range(0..lines.len());
                            let b = rng.random_range(0..lines.len());
                            lines.swap(a, b);
                        }
                        doc = lines.join(&b'\n');
                    }
                }
            }
            doc
        })
        .collect()
}
