//! Exact treewidth and pathwidth by `O*(2^n)` subset dynamic programming,
//! used as ground truth for the cover-parameterized solvers.
//!
//! Nothing here shares code with the solvers beyond the [`Graph`] type.

use thiserror::Error;

use crate::graph::Graph;

/// Largest vertex count the oracles accept.
pub const MAX_ORACLE_N: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices; the exact oracles stop at {limit}")]
    TooLarge { n: usize, limit: usize },
}

fn masks(g: &Graph) -> Result<Vec<u32>, OracleError> {
    let n = g.n();
    if n > MAX_ORACLE_N {
        return Err(OracleError::TooLarge { n, limit: MAX_ORACLE_N });
    }
    Ok((0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u)).collect())
}

fn open_neighborhood(adj: &[u32], set: u32) -> u32 {
    let mut out = 0;
    let mut m = set;
    while m != 0 {
        out |= adj[m.trailing_zeros() as usize];
        m &= m - 1;
    }
    out & !set
}

/// Vertices outside `s ∪ {v}` reachable from `v` by a path whose interior
/// lies in `s`.
fn q_size(adj: &[u32], s: u32, v: usize) -> u32 {
    let mut reach = 1u32 << v;
    loop {
        let grown = reach | (open_neighborhood(adj, reach) & s);
        if grown == reach {
            break;
        }
        reach = grown;
    }
    (open_neighborhood(adj, reach) & !s).count_ones()
}

/// Exact treewidth by eliminating vertices in every order:
/// `TW(S) = min_{v∈S} max(TW(S∖v), |Q(S∖v, v)|)`. The empty graph has −1.
pub fn treewidth_exact(g: &Graph) -> Result<i32, OracleError> {
    let adj = masks(g)?;
    let n = g.n();
    if n == 0 {
        return Ok(-1);
    }
    let size = 1usize << n;
    let mut tw = vec![i8::MAX; size];
    tw[0] = i8::MIN;
    for s in 1..size as u32 {
        let mut best = i8::MAX;
        let mut m = s;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let rest = s & !(1 << v);
            let prev = tw[rest as usize];
            if prev >= best {
                continue;
            }
            let q = q_size(&adj, rest, v) as i8;
            best = best.min(prev.max(q));
        }
        tw[s as usize] = best;
    }
    Ok(tw[size - 1] as i32)
}

/// Exact pathwidth as vertex separation number:
/// `vs(L) = max(|N(L)|, min_{v∈L} vs(L∖v))`. The empty graph has −1.
pub fn pathwidth_exact(g: &Graph) -> Result<i32, OracleError> {
    let adj = masks(g)?;
    let n = g.n();
    if n == 0 {
        return Ok(-1);
    }
    let size = 1usize << n;
    let mut vs = vec![0u8; size];
    for l in 1..size as u32 {
        let mut best = u8::MAX;
        let mut m = l;
        while m != 0 {
            let v = m.trailing_zeros();
            m &= m - 1;
            best = best.min(vs[(l & !(1 << v)) as usize]);
        }
        vs[l as usize] = best.max(open_neighborhood(&adj, l).count_ones() as u8);
    }
    Ok(vs[size - 1] as i32)
}

/// Every labelled graph on `n` vertices, one per subset of the vertex pairs.
pub fn enumerate_small_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 11, "2^(n choose 2) graphs do not fit a counter for n = {n}");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |bits| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("pairs are distinct and in range")
    })
}
