//! Treewidth in `O*(3^k)`: the quintuple DP is run in layers by join depth,
//! and the join values of each layer come from subset convolutions of
//! threshold indicators of the previous layer, one convolution family per
//! bag set `X`.
//!
//! For a fixed `X`, write `v(c)` for the previous layer's value at the join
//! slot of the triple whose `L` is the union of components `c`, and `l(c)`
//! for the number of side vertices seeing `L` but not `R`. A join of parts
//! `c1, c2` costs `max(v(c1), v(c2), A(c) - l(c1) - l(c2))` where `A(c)`
//! depends on `c` only. For every threshold `t` on `v`, the convolution of
//! the indicators `[v ≤ t, l = i]` tells which sums `l(c1) + l(c2)` are
//! reachable, so the best join value is a minimum over thresholds.

use crate::convolution::{mobius_wrapping, zeta_wrapping};
use crate::cover::Cover;
use crate::graph::Graph;
use crate::space::INF;
use crate::states::ValidTriple;
use crate::treewidth::{base_stats, final_value, finish_tw, join_local, join_table, sweep, TwCore};
use crate::{prepare, Solution, SolveError};

/// Scratch buffers for the convolutions at one `X`.
#[derive(Default)]
struct Scratch {
    ranked: Vec<u32>,
    prod: Vec<u32>,
    best: Vec<i32>,
}

/// Join values of one layer, from the previous layer's table. Returns the
/// per-triple values and the number of subset cells handled.
fn join_layer(core: &TwCore, prev: &[u16], scratch: &mut Scratch) -> (Vec<u16>, u64) {
    let space = &core.space;
    let univ = 1u32 << (space.k - 1);
    let tot = core.total_side() as i32;
    let mut out = vec![INF; space.num_triples()];
    let mut cells = 0u64;
    let mut v = Vec::new();
    for x in 0..=space.full {
        if x & univ == 0 {
            continue;
        }
        let s = space.comps(x).len();
        let size = 1usize << s;
        cells += size as u64;
        if s < 2 {
            continue;
        }
        let base = space.base(x);
        let all = (size - 1) as u32;
        v.clear();
        v.extend((0..size).map(|c| if c == all as usize { INF } else { core.join_slot_value(prev, base + c) }));
        let lv = |c: usize| core.lval[base + c] as i32;
        let nx = x.count_ones() as i32 - 1;
        let f = core.fcount[x as usize] as i32;
        let target = &mut out[base..base + size];

        let mut thresholds: Vec<u16> = v.iter().copied().filter(|&t| t != INF).collect();
        thresholds.sort_unstable();
        thresholds.dedup();
        for &t in &thresholds {
            let worst = (0..size).filter(|c| c.count_ones() >= 2).map(|c| target[c]).max().unwrap_or(0);
            if t >= worst {
                break;
            }
            let mut levels: Vec<i32> = (0..size).filter(|&c| v[c] <= t).map(lv).collect();
            levels.sort_unstable();
            levels.dedup();
            let nl = levels.len();
            let stride = (s + 1) * size;
            scratch.ranked.clear();
            scratch.ranked.resize(nl * stride, 0);
            for c in (0..size).filter(|&c| v[c] <= t) {
                let li = levels.binary_search(&lv(c)).unwrap();
                scratch.ranked[li * stride + c.count_ones() as usize * size + c] = 1;
            }
            for li in 0..nl {
                for r in 1..s {
                    let o = li * stride + r * size;
                    zeta_wrapping(&mut scratch.ranked[o..o + size]);
                }
            }
            scratch.best.clear();
            scratch.best.resize(size, -1);
            let mut sums: Vec<i32> = levels.iter().flat_map(|&a| levels.iter().map(move |&b| a + b)).collect();
            sums.sort_unstable();
            sums.dedup();
            scratch.prod.resize(size, 0);
            for r in 2..=s {
                for &sigma in sums.iter().rev() {
                    let prod = &mut scratch.prod;
                    prod.iter_mut().for_each(|p| *p = 0);
                    for (i1, &l1) in levels.iter().enumerate() {
                        let Ok(i2) = levels.binary_search(&(sigma - l1)) else { continue };
                        for r1 in 1..r {
                            let a = &scratch.ranked[i1 * stride + r1 * size..][..size];
                            let b = &scratch.ranked[i2 * stride + (r - r1) * size..][..size];
                            for ((p, &x1), &x2) in prod.iter_mut().zip(a).zip(b) {
                                *p = p.wrapping_add(x1.wrapping_mul(x2));
                            }
                        }
                    }
                    mobius_wrapping(prod);
                    for c in (0..size).filter(|c| c.count_ones() as usize == r) {
                        if prod[c] != 0 && scratch.best[c] < sigma {
                            scratch.best[c] = sigma;
                        }
                    }
                }
            }
            for (c, (slot, &best)) in target.iter_mut().zip(scratch.best.iter()).enumerate() {
                if best < 0 {
                    continue;
                }
                let a = nx + tot - f - lv(all as usize & !c);
                let cand = (t as i32).max(a - best);
                if cand < *slot as i32 {
                    *slot = cand as u16;
                }
            }
        }
    }
    (out, cells)
}

/// Layer-by-layer record of a run of [`treewidth_vc_3k`].
#[derive(Debug, Clone)]
pub struct LayeredRun {
    pub solution: Solution,
    /// Width read off each layer, starting with the join-free layer 0;
    /// `None` where the final state is not yet reachable.
    pub layer_widths: Vec<Option<i32>>,
    /// Whether every layer was pointwise at most the one before it.
    pub monotone: bool,
    /// Join value per valid triple in the last layer.
    pub join_values: Vec<(ValidTriple, Option<u32>)>,
}

/// Treewidth of `g` and an optimal tree decomposition via join-depth layers.
/// Computes a minimum vertex cover unless one is supplied.
pub fn treewidth_vc_3k(g: &Graph, cover: Option<&Cover>) -> Result<Solution, SolveError> {
    treewidth_vc_3k_layers(g, cover).map(|run| run.solution)
}

/// As [`treewidth_vc_3k`], also returning the per-layer record.
pub fn treewidth_vc_3k_layers(g: &Graph, cover: Option<&Cover>) -> Result<LayeredRun, SolveError> {
    let prep = prepare(g, cover)?;
    let core = TwCore::new(&prep.cg);
    let k = core.space.k;
    let mut scratch = Scratch::default();
    let mut join = vec![INF; core.space.num_triples()];
    let (mut value, mut choice) = sweep(&core, |_, _, _, _| INF);
    let mut widths = vec![final_value(&core, &value).map(|v| v as i32 - 1)];
    let mut monotone = true;
    let mut cells = 0u64;
    let mut layers = 0;
    // Join depth never exceeds the cover size, so layer k + 1 repeats layer k.
    while layers <= k {
        let (next_join, c) = join_layer(&core, &value, &mut scratch);
        cells += c;
        layers += 1;
        if next_join == join {
            break;
        }
        join = next_join;
        let (v, ch) = sweep(&core, |_, idx, _, _| join[idx]);
        monotone &= v.iter().zip(&value).all(|(a, b)| a <= b);
        widths.push(final_value(&core, &v).map(|v| v as i32 - 1));
        value = v;
        choice = ch;
    }
    let mut stats = base_stats(&core, &value);
    stats.layers = layers;
    stats.join_cells = cells;
    let join_values = join_table(&core, |idx| join[idx]);
    let space = &core.space;
    let solution = finish_tw(
        g,
        prep.univ,
        &core,
        &value,
        &choice,
        |idx, x, cm| {
            let base = space.base(x);
            let low = cm & cm.wrapping_neg();
            let rest = cm & !low;
            let mut sub = rest;
            loop {
                let c1 = sub | low;
                let c2 = cm ^ c1;
                if c2 != 0 {
                    let v1 = core.join_slot_value(&value, base + c1 as usize);
                    let v2 = core.join_slot_value(&value, base + c2 as usize);
                    if v1 != INF && v2 != INF {
                        let v = (v1 as i32).max(v2 as i32).max(join_local(&core, x, cm, c1));
                        if v == join[idx] as i32 {
                            return c1;
                        }
                    }
                }
                if sub == 0 {
                    return low;
                }
                sub = (sub - 1) & rest;
            }
        },
        stats,
    )?;
    Ok(LayeredRun { solution, layer_widths: widths, monotone, join_values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::validate;
    use crate::treewidth::{join_values_4k, treewidth_vc_4k};

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn check(g: &Graph, expected: i32) {
        let sol = treewidth_vc_3k(g, None).unwrap();
        assert_eq!(sol.width, expected);
        assert_eq!(validate(g, &sol.witness), Ok(expected));
    }

    #[test]
    fn small_graphs() {
        check(&graph(0, &[]), -1);
        check(&graph(1, &[]), 0);
        check(&graph(2, &[(0, 1)]), 1);
        check(&complete(5), 4);
        check(&graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]), 2);
    }

    #[test]
    fn star_needs_joins_and_matches_explicit_parts() {
        let g = graph(9, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (0, 7), (7, 8)]);
        let run = treewidth_vc_3k_layers(&g, None).unwrap();
        assert_eq!(run.solution.width, 1);
        assert!(run.monotone);
        assert_eq!(run.join_values, join_values_4k(&g, None).unwrap());
        assert_eq!(treewidth_vc_4k(&g, None).unwrap().width, 1);
    }

    #[test]
    fn layer_zero_solves_paths() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        let run = treewidth_vc_3k_layers(&g, None).unwrap();
        assert_eq!(run.layer_widths[0], Some(1));
    }

    #[test]
    fn widths_never_increase_across_layers() {
        let g = graph(8, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6), (6, 7), (7, 0)]);
        let run = treewidth_vc_3k_layers(&g, None).unwrap();
        assert!(run.monotone);
        let finite: Vec<i32> = run.layer_widths.iter().flatten().copied().collect();
        assert!(finite.windows(2).all(|w| w[1] <= w[0]));
        assert_eq!(*finite.last().unwrap(), run.solution.width);
    }
}
