//! Pathwidth by dynamic programming over valid quintuples of a vertex cover,
//! in `O*(3^k)` time, with path decomposition reconstruction.

use crate::cover::Cover;
use crate::decomposition::Decomposition;
use crate::graph::{Graph, VertexId};
use crate::space::{TripleSpace, INF};
use crate::states::{CoverGraph, CoverMask, OpTag, Quintuple, ValidTriple};
use crate::{prepare, Solution, SolveError, SolveStats};

const NO_OP: u8 = u8::MAX;

/// Minimum partial pathwidth per `(triple, upper operation)`, with the lower
/// operation attaining it.
pub struct PwTable {
    space: TripleSpace,
    value: Vec<u16>,
    arg: Vec<u8>,
}

/// Lower operation codes: `u` for introduce, `k + u` for forget.
fn decode(code: u8, k: usize) -> OpTag {
    let c = code as usize;
    if c < k {
        OpTag::Introduce(c)
    } else {
        OpTag::Forget(c - k)
    }
}

impl PwTable {
    /// Fills the table in precedence order.
    pub fn build(cg: &CoverGraph) -> Self {
        let space = TripleSpace::new(cg, false);
        let k = space.k;
        let full = space.full;
        let mut value = vec![INF; space.num_slots()];
        let mut arg = vec![NO_OP; space.num_slots()];
        let mut lowers: Vec<(u8, u32, i32)> = Vec::with_capacity(2 * k);
        for (x, cm) in space.order() {
            let idx = space.base(x) + cm as usize;
            let slots = space.slots(idx);
            if slots.is_empty() {
                continue;
            }
            let l = space.lmask(x, cm);
            let r = full & !x & !l;
            let fg = space.forgettable(x, r);

            let mut xtr = 0i32;
            let mut xl = [0i32; 32];
            let mut xr = [0i32; 32];
            let mut f_any = false;
            let mut w_any = 0u32;
            let mut w = [0u32; 32];
            for t in &cg.types {
                let (m, c) = (t.mask, t.count() as i32);
                let sees_l = m & l != 0;
                let sees_r = m & r != 0;
                if sees_l && sees_r {
                    xtr += c;
                } else if sees_l {
                    for u in CoverMask(m & x).iter() {
                        xl[u] += c;
                    }
                } else if sees_r {
                    for v in CoverMask(m & x).iter() {
                        xr[v] += c;
                    }
                } else if m & !x == 0 {
                    f_any = true;
                    w_any |= m;
                    for u in CoverMask(m).iter() {
                        w[u] |= m;
                    }
                }
            }

            lowers.clear();
            for u in CoverMask(x).iter() {
                if space.adj[u] & l != 0 {
                    continue;
                }
                let p = if l == 0 && x == 1 << u {
                    0
                } else {
                    let pred = space.index(l, x & !(1 << u));
                    let slot = space.slots(pred).start + TripleSpace::intro_slot(r | 1 << u, u);
                    value[slot]
                };
                if p != INF {
                    lowers.push((u as u8, 1 << u, p as i32));
                }
            }
            for u in CoverMask(l).iter() {
                let px = x | 1 << u;
                let pred = space.index(l & !(1 << u), px);
                let slot = space.slots(pred).start + TripleSpace::forget_slot(r, space.forgettable(px, r), u);
                let p = value[slot];
                if p != INF {
                    lowers.push(((k + u) as u8, 0, p as i32));
                }
            }
            if lowers.is_empty() {
                continue;
            }

            let base = x.count_ones() as i32 + xtr - 1;
            let mut put = |slot: usize, xr_v: i32, need_upper: Option<usize>| {
                let mut best = i32::MAX;
                let mut best_code = NO_OP;
                for &(code, intro_bit, p) in &lowers {
                    let (xl_v, eps) = match (intro_bit != 0, need_upper) {
                        (true, Some(v)) => {
                            let u = intro_bit.trailing_zeros() as usize;
                            (xl[u], w[u] >> v & 1 == 1)
                        }
                        (true, None) => {
                            let u = intro_bit.trailing_zeros() as usize;
                            (xl[u], w_any >> u & 1 == 1)
                        }
                        (false, Some(v)) => (0, w_any >> v & 1 == 1),
                        (false, None) => (0, f_any),
                    };
                    let val = (base + xl_v.max(xr_v).max(eps as i32)).max(p);
                    if val < best {
                        best = val;
                        best_code = code;
                    }
                }
                value[slot] = best.clamp(0, INF as i32 - 1) as u16;
                arg[slot] = best_code;
            };
            for v in CoverMask(r).iter() {
                put(slots.start + TripleSpace::intro_slot(r, v), 0, None);
            }
            for v in CoverMask(fg).iter() {
                put(slots.start + TripleSpace::forget_slot(r, fg, v), xr[v], Some(v));
            }
        }
        PwTable { space, value, arg }
    }

    fn slot_of(&self, l: u32, x: u32, upper: OpTag) -> usize {
        let idx = self.space.index(l, x);
        let r = self.space.full & !x & !l;
        let off = match upper {
            OpTag::Introduce(v) => TripleSpace::intro_slot(r, v),
            OpTag::Forget(v) => TripleSpace::forget_slot(r, self.space.forgettable(x, r), v),
            _ => unreachable!("pathwidth has no joins"),
        };
        self.space.slots(idx).start + off
    }

    /// Stored minimum for `(triple, upper)`; `None` if unreachable.
    pub fn get(&self, t: &ValidTriple, upper: OpTag) -> Option<u32> {
        let v = self.value[self.slot_of(t.l.0, t.x.0, upper)];
        (v != INF).then_some(v as u32)
    }

    /// Lower operation attaining [`PwTable::get`].
    pub fn argmin(&self, t: &ValidTriple, upper: OpTag) -> Option<OpTag> {
        let a = self.arg[self.slot_of(t.l.0, t.x.0, upper)];
        (a != NO_OP).then(|| decode(a, self.space.k))
    }

    pub fn num_triples(&self) -> usize {
        self.space.num_triples()
    }

    pub fn num_entries(&self) -> usize {
        self.value.len()
    }

    pub fn num_finite(&self) -> usize {
        self.value.iter().filter(|&&v| v != INF).count()
    }

    /// Quintuples from the introduce-singleton start to `last`, following
    /// the stored minima.
    pub fn chain(&self, last: Quintuple) -> Vec<Quintuple> {
        let full = self.space.full;
        let mut out = Vec::new();
        let mut t = last.triple;
        let mut upper = last.upper;
        loop {
            let lower = self.argmin(&t, upper).expect("chain reaches only finite states");
            out.push(Quintuple { lower: Some(lower), triple: t, upper });
            let (l, x) = (t.l.0, t.x.0);
            let (pl, px) = match lower {
                OpTag::Introduce(u) if l == 0 && x == 1 << u => break,
                OpTag::Introduce(u) => (l, x & !(1 << u)),
                OpTag::Forget(u) => (l & !(1 << u), x | 1 << u),
                _ => unreachable!(),
            };
            t = ValidTriple { l: CoverMask(pl), x: CoverMask(px), r: CoverMask(full & !pl & !px) };
            upper = lower;
        }
        out.reverse();
        out
    }
}

/// Bags for a quintuple chain: each quintuple becomes `|XF| + 2` copies of
/// its cover bag plus `XTR`, with `XL` on the first copy, `XR` on the last,
/// and each new `XF` vertex alone in one interior copy.
fn chain_bags(cg: &CoverGraph, chain: &[Quintuple]) -> Vec<Vec<VertexId>> {
    let mut placed = vec![false; cg.n()];
    let mut bags = Vec::new();
    for q in chain {
        let b = crate::states::boundary_sets_pw(cg, q);
        let mut core = cg.vertices_of(q.triple.x);
        core.extend(b.xtr.iter());
        let mut first = core.clone();
        first.extend(b.xl.iter());
        bags.push(first);
        for v in b.xf.iter() {
            let mut bag = core.clone();
            if !placed[v] {
                placed[v] = true;
                bag.push(v);
            }
            bags.push(bag);
        }
        let mut last = core;
        last.extend(b.xr.iter());
        bags.push(last);
    }
    bags
}

/// Pathwidth of `g` and an optimal path decomposition. Computes a minimum
/// vertex cover unless one is supplied.
pub fn pathwidth_vc(g: &Graph, cover: Option<&Cover>) -> Result<Solution, SolveError> {
    let prep = prepare(g, cover)?;
    let cg = &prep.cg;
    let table = PwTable::build(cg);
    let u = cg.k() - 1;
    let last = Quintuple {
        lower: None,
        triple: ValidTriple { l: cg.full().without(u), x: CoverMask::single(u), r: CoverMask::EMPTY },
        upper: OpTag::Forget(u),
    };
    let best = table
        .get(&last.triple, last.upper)
        .ok_or_else(|| SolveError::Internal("final pathwidth state unreachable".into()))?;
    let width = best as i32 - 1;
    let chain = table.chain(last);
    let mut witness = Decomposition::path(chain_bags(cg, &chain));
    witness.remove_vertex(prep.univ);
    witness.contract_subset_bags();
    let stats = SolveStats {
        cover_size: cg.k() - 1,
        valid_triples: table.num_triples(),
        states: table.num_finite(),
        table_entries: table.num_entries(),
        ..SolveStats::default()
    };
    crate::finish(g, width, witness, stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::validate;
    use crate::graph::VertexSet;
    use crate::states::{boundary_sets_pw, pw_ops};

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn check(g: &Graph, expected: i32) {
        let sol = pathwidth_vc(g, None).unwrap();
        assert_eq!(sol.width, expected);
        assert_eq!(validate(g, &sol.witness), Ok(expected));
    }

    #[test]
    fn small_graphs() {
        check(&graph(0, &[]), -1);
        check(&graph(1, &[]), 0);
        check(&graph(3, &[]), 0);
        check(&graph(2, &[(0, 1)]), 1);
        check(&graph(3, &[(0, 1), (1, 2)]), 1);
        check(&graph(4, &[(0, 1), (1, 2), (2, 3)]), 1);
        check(&graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]), 3);
        check(&graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]), 2);
    }

    #[test]
    fn cover_equal_to_all_vertices() {
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let cover = Cover::new(&k4, VertexSet::full(4)).unwrap();
        assert_eq!(pathwidth_vc(&k4, Some(&cover)).unwrap().width, 3);
    }

    #[test]
    fn base_state_equals_local_width() {
        let g = graph(3, &[(0, 1), (1, 2)]);
        let prep = prepare(&g, None).unwrap();
        let cg = &prep.cg;
        let table = PwTable::build(cg);
        for u in 0..cg.k() {
            let t = ValidTriple { l: CoverMask::EMPTY, x: CoverMask::single(u), r: cg.full().without(u) };
            for upper in pw_ops(cg, &t).1 {
                let q = Quintuple { lower: Some(OpTag::Introduce(u)), triple: t, upper };
                let b = boundary_sets_pw(cg, &q);
                let loc = 1 + b.xtr.len() as u32 + b.xl.len().max(b.xr.len()).max(b.epsilon as usize) as u32 - 1;
                assert_eq!(table.get(&t, upper), Some(loc));
            }
        }
    }

    #[test]
    fn stored_values_bound_local_width() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5), (4, 5)]);
        let prep = prepare(&g, None).unwrap();
        let cg = &prep.cg;
        let table = PwTable::build(cg);
        for t in crate::states::enumerate_valid_triples(cg) {
            let (lower, upper) = pw_ops(cg, &t);
            for up in upper {
                let Some(v) = table.get(&t, up) else { continue };
                assert!(v as i32 >= t.x.len() as i32 - 1);
                let lo = table.argmin(&t, up).unwrap();
                assert!(lower.contains(&lo));
                let b = boundary_sets_pw(cg, &Quintuple { lower: Some(lo), triple: t, upper: up });
                let loc = t.x.len() + b.xtr.len() + b.xl.len().max(b.xr.len()).max(b.epsilon as usize);
                assert!(v as i32 >= loc as i32 - 1);
            }
        }
    }
}
