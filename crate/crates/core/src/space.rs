//! Dense indexing of valid triples and of the per-triple upper-operation
//! slots used by the width tables.
//!
//! For fixed `X`, valid `L` are unions of components of the cover minus `X`,
//! so a triple is addressed as `base[X] + (bitmask over those components)`.

use crate::states::{components, CoverGraph};

pub(crate) const INF: u16 = u16::MAX;

pub(crate) struct TripleSpace {
    pub k: usize,
    pub full: u32,
    pub adj: Vec<u32>,
    comp_start: Vec<usize>,
    comps: Vec<u32>,
    base: Vec<usize>,
    with_join: bool,
    slot_start: Vec<usize>,
}

impl TripleSpace {
    pub fn new(cg: &CoverGraph, with_join: bool) -> Self {
        let k = cg.k();
        let full = cg.full().0;
        let adj = cg.adj().to_vec();
        let masks = 1usize << k;
        let mut comp_start = Vec::with_capacity(masks + 1);
        let mut comps = Vec::new();
        let mut base = Vec::with_capacity(masks + 1);
        let mut total = 0usize;
        for x in 0..masks as u32 {
            comp_start.push(comps.len());
            base.push(total);
            let c = components(&adj, full & !x);
            total += 1 << c.len();
            comps.extend(c);
        }
        comp_start.push(comps.len());
        base.push(total);
        let mut space = TripleSpace { k, full, adj, comp_start, comps, base, with_join, slot_start: Vec::new() };
        let mut slot_start = Vec::with_capacity(total + 1);
        let mut slots = 0usize;
        for x in 0..masks as u32 {
            for cm in 0..space.num_triples_at(x) as u32 {
                slot_start.push(slots);
                let l = space.lmask(x, cm);
                slots += space.num_uppers(x, full & !x & !l);
            }
        }
        slot_start.push(slots);
        space.slot_start = slot_start;
        space
    }

    pub fn num_triples(&self) -> usize {
        *self.base.last().unwrap()
    }

    pub fn num_slots(&self) -> usize {
        *self.slot_start.last().unwrap()
    }

    pub fn comps(&self, x: u32) -> &[u32] {
        &self.comps[self.comp_start[x as usize]..self.comp_start[x as usize + 1]]
    }

    pub fn num_triples_at(&self, x: u32) -> usize {
        self.base[x as usize + 1] - self.base[x as usize]
    }

    pub fn base(&self, x: u32) -> usize {
        self.base[x as usize]
    }

    /// Cover mask of the components picked by `cm`.
    pub fn lmask(&self, x: u32, cm: u32) -> u32 {
        let mut l = 0;
        let mut m = cm;
        let comps = self.comps(x);
        while m != 0 {
            l |= comps[m.trailing_zeros() as usize];
            m &= m - 1;
        }
        l
    }

    /// Component bitmask of `l`, which must be a union of components.
    pub fn cmask(&self, x: u32, l: u32) -> u32 {
        let mut cm = 0;
        for (i, &c) in self.comps(x).iter().enumerate() {
            if c & l != 0 {
                debug_assert_eq!(c & l, c, "L splits a component");
                cm |= 1 << i;
            }
        }
        cm
    }

    pub fn index(&self, l: u32, x: u32) -> usize {
        self.base[x as usize] + self.cmask(x, l) as usize
    }

    /// Members of `X` with no cover neighbor in `R`.
    pub fn forgettable(&self, x: u32, r: u32) -> u32 {
        let mut out = 0;
        let mut m = x;
        while m != 0 {
            let v = m.trailing_zeros();
            m &= m - 1;
            if self.adj[v as usize] & r == 0 {
                out |= 1 << v;
            }
        }
        out
    }

    pub fn num_uppers(&self, x: u32, r: u32) -> usize {
        let join = usize::from(self.with_join && r != 0);
        r.count_ones() as usize + self.forgettable(x, r).count_ones() as usize + join
    }

    pub fn slots(&self, idx: usize) -> std::ops::Range<usize> {
        self.slot_start[idx]..self.slot_start[idx + 1]
    }

    /// Slot offset of `introduce(v)` above a triple with rest `r`.
    pub fn intro_slot(r: u32, v: usize) -> usize {
        (r & ((1 << v) - 1)).count_ones() as usize
    }

    /// Slot offset of `forget(v)`, given the triple's forgettable set.
    pub fn forget_slot(r: u32, forgettable: u32, v: usize) -> usize {
        r.count_ones() as usize + (forgettable & ((1 << v) - 1)).count_ones() as usize
    }

    /// Slot offset of the upper join (always the last slot).
    pub fn join_slot(&self, idx: usize) -> usize {
        self.slot_start[idx + 1] - 1 - self.slot_start[idx]
    }

    /// Triples as `(X, component mask)` ordered by `|L|`, then `|X|`, which
    /// extends the precedence order.
    pub fn order(&self) -> Vec<(u32, u32)> {
        let buckets = (self.k + 1) * (self.k + 1);
        let key = |x: u32, cm: u32| self.lmask(x, cm).count_ones() as usize * (self.k + 1) + x.count_ones() as usize;
        let mut counts = vec![0usize; buckets + 1];
        for x in 0..=self.full {
            for cm in 0..self.num_triples_at(x) as u32 {
                counts[key(x, cm) + 1] += 1;
            }
        }
        for i in 0..buckets {
            counts[i + 1] += counts[i];
        }
        let mut out = vec![(0, 0); self.num_triples()];
        for x in 0..=self.full {
            for cm in 0..self.num_triples_at(x) as u32 {
                let b = key(x, cm);
                out[counts[b]] = (x, cm);
                counts[b] += 1;
            }
        }
        out
    }
}

/// Per-`X` view of the independent side: each neighborhood type reduced to
/// the set of components (of the cover minus `X`) it touches.
pub(crate) struct SideView {
    /// `(component signature, full cover mask, multiplicity)` per type.
    pub types: Vec<(u32, u32, u32)>,
}

impl SideView {
    pub fn new(space: &TripleSpace, cg: &CoverGraph, x: u32) -> Self {
        let comps = space.comps(x);
        let types = cg
            .types
            .iter()
            .map(|t| {
                let sig = comps.iter().enumerate().filter(|(_, &c)| c & t.mask != 0).fold(0, |s, (i, _)| s | 1 << i);
                (sig, t.mask, t.count())
            })
            .collect();
        SideView { types }
    }
}
