//! Treewidth by dynamic programming over valid quintuples of a vertex cover.
//!
//! This module holds the machinery shared by both treewidth solvers (the
//! introduce/forget sweep and tree reconstruction) and the `O*(4^k)` solver,
//! which minimizes over explicit join parts.

use crate::cover::Cover;
use crate::decomposition::{Decomposition, DecompositionKind};
use crate::graph::{Graph, VertexId};
use crate::space::{SideView, TripleSpace, INF};
use crate::states::{boundary_sets_tw, CoverGraph, CoverMask, OpTag, Quintuple, ValidTriple};
use crate::{prepare, Solution, SolveError, SolveStats};

pub(crate) const CHOICE_NONE: u8 = u8::MAX;
pub(crate) const CHOICE_JOIN: u8 = u8::MAX - 1;

/// Triple indexing plus the side-vertex counts every layer needs.
pub(crate) struct TwCore<'a> {
    pub cg: &'a CoverGraph,
    pub space: TripleSpace,
    pub order: Vec<(u32, u32)>,
    /// Per triple: side vertices whose neighborhood meets `L` and avoids `R`.
    pub lval: Vec<u32>,
    /// Per `X`: side vertices whose neighborhood lies inside `X`.
    pub fcount: Vec<u32>,
    /// Per `X`: whether some side vertex has neighborhood exactly `X`.
    pub eps: Vec<bool>,
}

impl<'a> TwCore<'a> {
    pub fn new(cg: &'a CoverGraph) -> Self {
        let space = TripleSpace::new(cg, true);
        let order = space.order();
        let masks = 1usize << space.k;
        let mut lval = vec![0u32; space.num_triples()];
        let mut fcount = vec![0u32; masks];
        let mut eps = vec![false; masks];
        for x in 0..masks as u32 {
            let view = SideView::new(&space, cg, x);
            let base = space.base(x);
            let s = space.comps(x).len();
            let cell = &mut lval[base..base + (1 << s)];
            for &(sig, mask, cnt) in &view.types {
                if sig == 0 {
                    fcount[x as usize] += cnt;
                    eps[x as usize] |= mask == x;
                } else {
                    cell[sig as usize] += cnt;
                }
            }
            for b in 0..s {
                for c in 0..1usize << s {
                    if c >> b & 1 == 1 {
                        cell[c] += cell[c ^ 1 << b];
                    }
                }
            }
        }
        TwCore { cg, space, order, lval, fcount, eps }
    }

    pub fn total_side(&self) -> u32 {
        self.cg.types.iter().map(|t| t.count()).sum()
    }

    /// Value stored at the join slot of triple `idx`.
    pub fn join_slot_value(&self, value: &[u16], idx: usize) -> u16 {
        value[self.space.slots(idx).start + self.space.join_slot(idx)]
    }
}

/// One full introduce/forget sweep. `join` supplies, per triple with a
/// non-empty `L`, the best value over join lower operations (or `INF`); it
/// may read entries of triples already swept.
pub(crate) fn sweep(
    core: &TwCore,
    mut join: impl FnMut(&[u16], usize, u32, u32) -> u16,
) -> (Vec<u16>, Vec<u8>) {
    let space = &core.space;
    let k = space.k;
    let full = space.full;
    let mut value = vec![INF; space.num_slots()];
    let mut choice = vec![CHOICE_NONE; space.num_triples()];
    for &(x, cm) in &core.order {
        let idx = space.base(x) + cm as usize;
        let slots = space.slots(idx);
        if slots.is_empty() {
            continue;
        }
        let l = space.lmask(x, cm);
        let r = full & !x & !l;
        let fg = space.forgettable(x, r);
        let nx = x.count_ones() as i32 - 1;
        let eps = core.eps[x as usize] as i32;

        let mut xtr = 0i32;
        let mut xl = [0i32; 32];
        let mut xr = [0i32; 32];
        for t in &core.cg.types {
            let (m, c) = (t.mask, t.count() as i32);
            match (m & l != 0, m & r != 0) {
                (true, true) => xtr += c,
                (true, false) => {
                    for u in CoverMask(m & x).iter() {
                        xl[u] += c;
                    }
                }
                (false, true) => {
                    for v in CoverMask(m & x).iter() {
                        xr[v] += c;
                    }
                }
                _ => {}
            }
        }

        if l == 0 {
            for v in CoverMask(fg).iter() {
                let slot = slots.start + TripleSpace::forget_slot(r, fg, v);
                value[slot] = (nx + xr[v].max(eps)) as u16;
            }
            continue;
        }

        let mut best = i32::MAX;
        let mut best_code = CHOICE_NONE;
        for u in CoverMask(x).iter() {
            if space.adj[u] & l != 0 {
                continue;
            }
            let pred = space.index(l, x & !(1 << u));
            let p = value[space.slots(pred).start + TripleSpace::intro_slot(r | 1 << u, u)];
            if p == INF {
                continue;
            }
            let cand = (nx + xtr + xl[u]).max(p as i32);
            if cand < best {
                best = cand;
                best_code = u as u8;
            }
        }
        for u in CoverMask(l).iter() {
            let px = x | 1 << u;
            let pred = space.index(l & !(1 << u), px);
            let p = value[space.slots(pred).start + TripleSpace::forget_slot(r, space.forgettable(px, r), u)];
            if p == INF {
                continue;
            }
            let cand = (nx + xtr).max(p as i32);
            if cand < best {
                best = cand;
                best_code = (k + u) as u8;
            }
        }
        let j = join(&value, idx, x, cm);
        if j != INF && (j as i32) < best {
            best = j as i32;
            best_code = CHOICE_JOIN;
        }
        if best_code == CHOICE_NONE {
            continue;
        }
        choice[idx] = best_code;
        let plain = (nx + xtr.max(eps)).max(best) as u16;
        for v in CoverMask(r).iter() {
            value[slots.start + TripleSpace::intro_slot(r, v)] = plain;
        }
        for v in CoverMask(fg).iter() {
            value[slots.start + TripleSpace::forget_slot(r, fg, v)] = (nx + (xtr + xr[v]).max(eps)).max(best) as u16;
        }
        if r != 0 {
            value[slots.start + space.join_slot(idx)] = plain;
        }
    }
    (value, choice)
}

/// Side vertices seeing both join parts and not `R`, given part component masks.
pub(crate) fn join_local(core: &TwCore, x: u32, cm: u32, c1: u32) -> i32 {
    let base = core.space.base(x);
    let s = core.space.comps(x).len();
    let all = (1u32 << s) - 1;
    let lv = |c: u32| core.lval[base + c as usize] as i32;
    let xtr = core.total_side() as i32 - core.fcount[x as usize] as i32 - lv(cm) - lv(all & !cm);
    x.count_ones() as i32 - 1 + xtr + lv(cm) - lv(c1) - lv(cm ^ c1)
}

/// Walks the choices from the final state and builds the quintuple tree
/// as `(quintuple, parent)` in preorder. `part` yields the first join part
/// (as a component mask) for a triple whose choice is a join.
pub(crate) fn quintuple_tree(
    core: &TwCore,
    choice: &[u8],
    mut part: impl FnMut(usize, u32, u32) -> u32,
) -> Vec<(Quintuple, Option<usize>)> {
    let space = &core.space;
    let k = space.k;
    let full = space.full;
    let u = k - 1;
    let mut out = Vec::new();
    let mut stack = vec![(full & !(1 << u), 1u32 << u, OpTag::Forget(u), None)];
    while let Some((l, x, upper, parent)) = stack.pop() {
        let r = full & !x & !l;
        let triple = ValidTriple { l: CoverMask(l), x: CoverMask(x), r: CoverMask(r) };
        let me = out.len();
        if l == 0 {
            out.push((Quintuple { lower: None, triple, upper }, parent));
            continue;
        }
        let idx = space.index(l, x);
        let code = choice[idx];
        let lower = match code {
            CHOICE_JOIN => {
                let cm = space.cmask(x, l);
                let c1 = part(idx, x, cm);
                let l1 = space.lmask(x, c1);
                let l2 = l & !l1;
                stack.push((l2, x, OpTag::Join, Some(me)));
                stack.push((l1, x, OpTag::Join, Some(me)));
                OpTag::JoinWithParts(CoverMask(l1))
            }
            c if (c as usize) < k => {
                let u = c as usize;
                stack.push((l, x & !(1 << u), OpTag::Introduce(u), Some(me)));
                OpTag::Introduce(u)
            }
            c => {
                let u = c as usize - k;
                stack.push((l & !(1 << u), x | 1 << u, OpTag::Forget(u), Some(me)));
                OpTag::Forget(u)
            }
        };
        out.push((Quintuple { lower: Some(lower), triple, upper }, parent));
    }
    out
}

/// Expands each quintuple into a three-bag path and attaches pending
/// closed-neighborhood bags for side vertices confined to `X`.
pub(crate) fn tree_bags(cg: &CoverGraph, tree: &[(Quintuple, Option<usize>)]) -> Decomposition {
    let mut placed = vec![false; cg.n()];
    let mut side_mask = vec![0u32; cg.n()];
    for t in &cg.types {
        for &v in &t.members {
            side_mask[v] = t.mask;
        }
    }
    let mut bags: Vec<Vec<VertexId>> = Vec::new();
    let mut edges = Vec::new();
    let mut min_of = Vec::with_capacity(tree.len());
    for (q, parent) in tree {
        let b = boundary_sets_tw(cg, q);
        let mut core = cg.vertices_of(q.triple.x);
        core.extend(b.xtr.iter());
        let imin = bags.len();
        let mut low = core.clone();
        low.extend(b.xl.iter());
        let mut high = core.clone();
        high.extend(b.xr.iter());
        bags.push(low);
        bags.push(core.clone());
        bags.push(high);
        edges.push((imin, imin + 1));
        edges.push((imin + 1, imin + 2));
        min_of.push(imin);
        if let Some(p) = parent {
            edges.push((imin + 2, min_of[*p]));
        }
        for v in b.xf.iter() {
            if !placed[v] {
                placed[v] = true;
                let mut bag = cg.vertices_of(CoverMask(side_mask[v]));
                bag.push(v);
                edges.push((imin + 1, bags.len()));
                bags.push(bag);
            }
        }
    }
    let mut d = Decomposition { kind: DecompositionKind::Tree, bags, edges, root: 2 };
    d.normalize_bags();
    d
}

/// Builds the witness for a finished table and checks it against `g`.
pub(crate) fn finish_tw(
    g: &Graph,
    univ: VertexId,
    core: &TwCore,
    value: &[u16],
    choice: &[u8],
    part: impl FnMut(usize, u32, u32) -> u32,
    stats: SolveStats,
) -> Result<Solution, SolveError> {
    let best = final_value(core, value).ok_or_else(|| SolveError::Internal("final treewidth state unreachable".into()))?;
    let tree = quintuple_tree(core, choice, part);
    let mut witness = tree_bags(core.cg, &tree);
    witness.remove_vertex(univ);
    witness.contract_subset_bags();
    crate::finish(g, best as i32 - 1, witness, stats)
}

/// Entry of the last state `(C ∖ {univ}, {univ}, ∅)` with upper forget.
pub(crate) fn final_value(core: &TwCore, value: &[u16]) -> Option<u32> {
    let u = core.space.k - 1;
    let idx = core.space.index(core.space.full & !(1 << u), 1 << u);
    let v = value[core.space.slots(idx).start];
    (v != INF).then_some(v as u32)
}

pub(crate) fn base_stats(core: &TwCore, value: &[u16]) -> SolveStats {
    SolveStats {
        cover_size: core.space.k - 1,
        valid_triples: core.space.num_triples(),
        states: value.iter().filter(|&&v| v != INF).count(),
        table_entries: value.len(),
        ..SolveStats::default()
    }
}

struct FourK {
    value: Vec<u16>,
    choice: Vec<u8>,
    /// Per triple: best join value and its first part (component mask).
    join: Vec<(u16, u32)>,
}

fn run_4k(core: &TwCore) -> FourK {
    let mut join = vec![(INF, 0u32); core.space.num_triples()];
    let (value, choice) = sweep(core, |value, idx, x, cm| {
        if cm.count_ones() < 2 {
            return INF;
        }
        let base = core.space.base(x);
        let low = cm & cm.wrapping_neg();
        let rest = cm & !low;
        let mut best = (INF, 0);
        let mut sub = rest;
        loop {
            let c1 = sub | low;
            let c2 = cm ^ c1;
            if c2 != 0 {
                let v1 = core.join_slot_value(value, base + c1 as usize);
                let v2 = core.join_slot_value(value, base + c2 as usize);
                if v1 != INF && v2 != INF {
                    let v = (v1 as i32).max(v2 as i32).max(join_local(core, x, cm, c1));
                    if v < best.0 as i32 {
                        best = (v as u16, c1);
                    }
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        join[idx] = best;
        best.0
    });
    FourK { value, choice, join }
}

/// Treewidth of `g` and an optimal tree decomposition, minimizing over all
/// join parts explicitly. Computes a minimum vertex cover unless one is
/// supplied.
pub fn treewidth_vc_4k(g: &Graph, cover: Option<&Cover>) -> Result<Solution, SolveError> {
    let prep = prepare(g, cover)?;
    let core = TwCore::new(&prep.cg);
    let run = run_4k(&core);
    let stats = base_stats(&core, &run.value);
    finish_tw(g, prep.univ, &core, &run.value, &run.choice, |idx, _, _| run.join[idx].1, stats)
}

/// Best value over join parts for every valid triple, as computed by the
/// explicit-part solver; `None` where no join applies or none is finite.
pub fn join_values_4k(g: &Graph, cover: Option<&Cover>) -> Result<Vec<(ValidTriple, Option<u32>)>, SolveError> {
    let prep = prepare(g, cover)?;
    let core = TwCore::new(&prep.cg);
    let run = run_4k(&core);
    Ok(join_table(&core, |idx| run.join[idx].0))
}

pub(crate) fn join_table(core: &TwCore, get: impl Fn(usize) -> u16) -> Vec<(ValidTriple, Option<u32>)> {
    let full = core.space.full;
    let mut out = Vec::with_capacity(core.space.num_triples());
    for x in 0..=full {
        for cm in 0..core.space.num_triples_at(x) as u32 {
            let l = core.space.lmask(x, cm);
            let t = ValidTriple { l: CoverMask(l), x: CoverMask(x), r: CoverMask(full & !x & !l) };
            let v = get(core.space.base(x) + cm as usize);
            out.push((t, (v != INF).then_some(v as u32)));
        }
    }
    out
}
