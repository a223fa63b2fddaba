//! Three-partitions of a vertex cover, the operations that may enter and
//! leave them, and the independent-side vertex sets they force into bags.
//!
//! Cover vertices are addressed by their index in [`CoverGraph`], so sets of
//! them fit in a [`CoverMask`].

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexId, VertexSet};
use crate::MAX_COVER;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StateError {
    #[error("edge ({}, {}) is not covered", .0 + 1, .1 + 1)]
    NotACover(VertexId, VertexId),
    #[error("cover of size {0} does not fit a {MAX_COVER}-bit mask")]
    TooLarge(usize),
    #[error("vertex set over universe {found} used with a graph on {expected} vertices")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("sets do not partition the cover")]
    NotAPartition,
}

/// Subset of the cover, bit `i` standing for cover vertex `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CoverMask(pub u32);

impl CoverMask {
    pub const EMPTY: CoverMask = CoverMask(0);

    pub fn single(i: usize) -> Self {
        CoverMask(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, i: usize) -> Self {
        CoverMask(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        CoverMask(self.0 & !(1 << i))
    }

    pub fn union(self, o: Self) -> Self {
        CoverMask(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        CoverMask(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        CoverMask(self.0 & !o.0)
    }

    pub fn is_disjoint(self, o: Self) -> bool {
        self.0 & o.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            (m != 0).then(|| {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                i
            })
        })
    }
}

impl fmt::Debug for CoverMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A partition `(L, X, R)` of the cover with no cover edge between `L` and `R`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ValidTriple {
    pub l: CoverMask,
    pub x: CoverMask,
    pub r: CoverMask,
}

/// Operation entering a triple from below or leaving it above. Vertices are
/// cover indices. `JoinWithParts` names the first part of a join below.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OpTag {
    Introduce(usize),
    Forget(usize),
    Join,
    JoinWithParts(CoverMask),
}

/// A triple with its lower and upper operations. `lower` is `None` exactly
/// for degenerate quintuples (empty `L`, seeding the treewidth recursion).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Quintuple {
    pub lower: Option<OpTag>,
    pub triple: ValidTriple,
    pub upper: OpTag,
}

impl Quintuple {
    pub fn is_degenerate(&self) -> bool {
        self.lower.is_none()
    }
}

/// Independent-side vertices a quintuple forces into bags, as vertex ids of
/// the graph the [`CoverGraph`] was built from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundarySets {
    pub xtr: VertexSet,
    pub xl: VertexSet,
    pub xr: VertexSet,
    pub xf: VertexSet,
    pub epsilon: bool,
}

/// Independent-side vertices sharing one cover neighborhood.
#[derive(Clone, Debug)]
pub(crate) struct SideType {
    pub mask: u32,
    pub members: Vec<VertexId>,
}

impl SideType {
    pub fn count(&self) -> u32 {
        self.members.len() as u32
    }
}

/// A graph seen through one of its vertex covers: the cover-induced
/// subgraph as adjacency masks, and the remaining (independent) vertices
/// grouped by their neighborhoods.
#[derive(Clone, Debug)]
pub struct CoverGraph {
    n: usize,
    cover: Vec<VertexId>,
    index_of: Vec<Option<usize>>,
    adj: Vec<u32>,
    pub(crate) types: Vec<SideType>,
}

impl CoverGraph {
    /// Indexes `cover` in increasing vertex order.
    pub fn new(g: &Graph, cover: &VertexSet) -> Result<Self, StateError> {
        let n = g.n();
        if cover.universe() != n {
            return Err(StateError::UniverseMismatch { expected: n, found: cover.universe() });
        }
        if cover.len() > MAX_COVER + 1 {
            return Err(StateError::TooLarge(cover.len()));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| !cover.contains(u) && !cover.contains(v)) {
            return Err(StateError::NotACover(u, v));
        }
        let list: Vec<VertexId> = cover.iter().collect();
        let mut index_of = vec![None; n];
        for (i, &v) in list.iter().enumerate() {
            index_of[v] = Some(i);
        }
        let mask_of = |v: VertexId| -> u32 {
            g.neighbors(v).iter().filter_map(|&u| index_of[u]).fold(0, |m, i| m | 1 << i)
        };
        let adj = list.iter().map(|&v| mask_of(v)).collect();
        let mut types: Vec<SideType> = Vec::new();
        for v in (0..n).filter(|&v| index_of[v].is_none()) {
            let mask = mask_of(v);
            match types.iter_mut().find(|t| t.mask == mask) {
                Some(t) => t.members.push(v),
                None => types.push(SideType { mask, members: vec![v] }),
            }
        }
        types.sort_by_key(|t| t.mask);
        Ok(CoverGraph { n, cover: list, index_of, adj, types })
    }

    /// Number of cover vertices.
    pub fn k(&self) -> usize {
        self.cover.len()
    }

    /// Vertex count of the underlying graph.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> CoverMask {
        CoverMask(((1u64 << self.k()) - 1) as u32)
    }

    /// Graph vertex behind cover index `i`.
    pub fn vertex(&self, i: usize) -> VertexId {
        self.cover[i]
    }

    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.index_of.get(v).copied().flatten()
    }

    /// Cover neighbors of cover vertex `i`.
    pub fn neighbors(&self, i: usize) -> CoverMask {
        CoverMask(self.adj[i])
    }

    pub(crate) fn adj(&self) -> &[u32] {
        &self.adj
    }

    pub fn side_vertices(&self) -> Vec<VertexId> {
        let mut all: Vec<VertexId> = self.types.iter().flat_map(|t| t.members.iter().copied()).collect();
        all.sort_unstable();
        all
    }

    /// Graph vertices behind a mask.
    pub fn vertices_of(&self, m: CoverMask) -> Vec<VertexId> {
        m.iter().map(|i| self.cover[i]).collect()
    }

    fn side_set(&self, keep: impl Fn(u32) -> bool) -> VertexSet {
        VertexSet::from_vertices(
            self.n,
            self.types.iter().filter(|t| keep(t.mask)).flat_map(|t| t.members.iter().copied()),
        )
    }
}

fn is_partition(cg: &CoverGraph, t: &ValidTriple) -> bool {
    t.l.is_disjoint(t.x) && t.l.is_disjoint(t.r) && t.x.is_disjoint(t.r) && t.l.union(t.x).union(t.r) == cg.full()
}

/// True iff no cover edge joins `L` and `R`, which is the same as `X`
/// separating them in the cover-induced subgraph.
pub fn is_valid_triple(cg: &CoverGraph, t: &ValidTriple) -> Result<bool, StateError> {
    if !is_partition(cg, t) {
        return Err(StateError::NotAPartition);
    }
    Ok(t.l.iter().all(|u| cg.adj[u] & t.r.0 == 0))
}

/// Connected components of the cover-induced subgraph restricted to `within`.
pub(crate) fn components(adj: &[u32], within: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut left = within;
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let i = f.trailing_zeros();
                f &= f - 1;
                next |= adj[i as usize];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

/// All valid triples, ordered by `|L|`, then `|X|`, then by mask values.
/// For a fixed `X`, the valid `L` are exactly the unions of components of
/// the cover minus `X`.
pub fn enumerate_valid_triples(cg: &CoverGraph) -> Vec<ValidTriple> {
    let full = cg.full().0;
    let mut out = Vec::new();
    for x in 0..=full {
        let comps = components(&cg.adj, full & !x);
        for pick in 0u32..1 << comps.len() {
            let l = comps.iter().enumerate().filter(|(i, _)| pick >> i & 1 == 1).fold(0, |m, (_, c)| m | c);
            out.push(ValidTriple { l: CoverMask(l), x: CoverMask(x), r: CoverMask(full & !x & !l) });
        }
    }
    out.sort_by_key(|t| (t.l.len(), t.x.len(), t.l.0, t.x.0));
    out
}

fn forgettable<'a>(cg: &'a CoverGraph, t: &ValidTriple) -> impl Iterator<Item = usize> + 'a {
    let (x, r) = (t.x, t.r);
    x.iter().filter(move |&v| cg.adj[v] & r.0 == 0)
}

/// Lower operations of a treewidth quintuple on `t` (none when `L` is empty).
/// Join parts are listed once per unordered split, with the first part
/// holding the lowest vertex of `L`.
pub fn tw_lower_ops(cg: &CoverGraph, t: &ValidTriple) -> Vec<OpTag> {
    if t.l.is_empty() {
        return Vec::new();
    }
    let mut ops: Vec<OpTag> = t.x.iter().filter(|&u| cg.adj[u] & t.l.0 == 0).map(OpTag::Introduce).collect();
    ops.extend(t.l.iter().map(OpTag::Forget));
    let low = t.l.0 & t.l.0.wrapping_neg();
    let rest = t.l.0 & !low;
    // Submasks of `rest`, each extended by the lowest bit.
    let mut sub = rest;
    loop {
        let l1 = sub | low;
        let l2 = t.l.0 & !l1;
        if l2 != 0 && t.l.iter().filter(|&u| l1 >> u & 1 == 1).all(|u| cg.adj[u] & l2 == 0) {
            ops.push(OpTag::JoinWithParts(CoverMask(l1)));
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & rest;
    }
    ops
}

/// Upper operations of a treewidth quintuple on `t`. A join above needs a
/// non-empty part of `R` that can be split off, which exists iff `R` is
/// non-empty (take all of `R`).
pub fn tw_upper_ops(cg: &CoverGraph, t: &ValidTriple) -> Vec<OpTag> {
    let mut ops: Vec<OpTag> = t.r.iter().map(OpTag::Introduce).collect();
    ops.extend(forgettable(cg, t).map(OpTag::Forget));
    if !t.r.is_empty() {
        ops.push(OpTag::Join);
    }
    ops
}

/// Lower and upper operations of a pathwidth quintuple on `t`.
pub fn pw_ops(cg: &CoverGraph, t: &ValidTriple) -> (Vec<OpTag>, Vec<OpTag>) {
    let mut lower: Vec<OpTag> = t.x.iter().filter(|&u| cg.adj[u] & t.l.0 == 0).map(OpTag::Introduce).collect();
    lower.extend(t.l.iter().map(OpTag::Forget));
    let mut upper: Vec<OpTag> = t.r.iter().map(OpTag::Introduce).collect();
    upper.extend(forgettable(cg, t).map(OpTag::Forget));
    (lower, upper)
}

/// Lower-boundary set, shared by both widths: who must sit in the lowest
/// bag of the triple's stretch.
fn xl_set(cg: &CoverGraph, q: &Quintuple) -> VertexSet {
    let (l, r) = (q.triple.l.0, q.triple.r.0);
    match q.lower {
        Some(OpTag::Introduce(u)) => cg.side_set(|m| m >> u & 1 == 1 && m & l != 0 && m & r == 0),
        Some(OpTag::JoinWithParts(l1)) => {
            let l2 = l & !l1.0;
            cg.side_set(|m| m & l1.0 != 0 && m & l2 != 0 && m & r == 0)
        }
        _ => VertexSet::new(cg.n),
    }
}

fn xr_set(cg: &CoverGraph, q: &Quintuple) -> VertexSet {
    let (l, r) = (q.triple.l.0, q.triple.r.0);
    match q.upper {
        OpTag::Forget(v) => cg.side_set(|m| m >> v & 1 == 1 && m & r != 0 && m & l == 0),
        _ => VertexSet::new(cg.n),
    }
}

fn xtr_set(cg: &CoverGraph, q: &Quintuple) -> VertexSet {
    let (l, r) = (q.triple.l.0, q.triple.r.0);
    cg.side_set(|m| m & l != 0 && m & r != 0)
}

/// Boundary sets under the treewidth rules: `XF` holds the vertices whose
/// whole neighborhood lies in `X`, and `ε` asks for one seeing all of `X`.
pub fn boundary_sets_tw(cg: &CoverGraph, q: &Quintuple) -> BoundarySets {
    let x = q.triple.x.0;
    BoundarySets {
        xtr: xtr_set(cg, q),
        xl: xl_set(cg, q),
        xr: xr_set(cg, q),
        xf: cg.side_set(|m| m & !x == 0),
        epsilon: cg.types.iter().any(|t| t.mask == x),
    }
}

/// Boundary sets under the pathwidth rules: a vertex whose neighborhood
/// already fits the bag before the lower introduce, or after the upper
/// forget, is not counted in `XF`.
pub fn boundary_sets_pw(cg: &CoverGraph, q: &Quintuple) -> BoundarySets {
    let x = q.triple.x.0;
    let need_lower = match q.lower {
        Some(OpTag::Introduce(u)) => 1 << u,
        _ => 0,
    };
    let need_upper = match q.upper {
        OpTag::Forget(v) => 1 << v,
        _ => 0,
    };
    let xf = cg.side_set(|m| m & !x == 0 && m & need_lower == need_lower && m & need_upper == need_upper);
    let epsilon = !xf.is_empty();
    BoundarySets { xtr: xtr_set(cg, q), xl: xl_set(cg, q), xr: xr_set(cg, q), xf, epsilon }
}

/// Local treewidth: `|X| + max(|XTR| + |XL|, |XTR| + |XR|, ε) − 1`.
pub fn loctw(cg: &CoverGraph, q: &Quintuple) -> i32 {
    let b = boundary_sets_tw(cg, q);
    let xtr = b.xtr.len();
    q.triple.x.len() as i32 + (xtr + b.xl.len()).max(xtr + b.xr.len()).max(b.epsilon as usize) as i32 - 1
}

/// Local pathwidth: `|X| + |XTR| + max(|XL|, |XR|, ε) − 1`.
pub fn locpw(cg: &CoverGraph, q: &Quintuple) -> i32 {
    let b = boundary_sets_pw(cg, q);
    (q.triple.x.len() + b.xtr.len() + b.xl.len().max(b.xr.len()).max(b.epsilon as usize)) as i32 - 1
}

/// Number of side vertices whose neighborhood meets `L` and misses
/// `R = C ∖ (L ∪ X)`.
pub fn side_count_l(cg: &CoverGraph, l: CoverMask, x: CoverMask) -> usize {
    let r = cg.full().0 & !l.0 & !x.0;
    cg.types.iter().filter(|t| t.mask & l.0 != 0 && t.mask & r == 0).map(|t| t.members.len()).sum()
}
