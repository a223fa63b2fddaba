//! Pathwidth parameterized by the vertex cover number of the complement.
//!
//! If `C` covers the complement of `G`, then `S = V ∖ C` is a clique of `G`
//! and some bag holds all of `S`. Left of that bag sits a layout of some
//! `L ⊆ C`, right of it a reversed layout of `R = C ∖ N[L]`, and each side
//! is a rooted vertex-separation problem over subsets of `C`.

use thiserror::Error;

use crate::decomposition::Decomposition;
use crate::graph::{Graph, VertexId, VertexSet};
use crate::{minimum_vertex_cover, Solution, SolveStats};

/// Default limit on the complement's cover size.
pub const MAX_COMPLEMENT_COVER: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CvcError {
    #[error("vertices {} and {} lie outside the set but are not adjacent", .0 + 1, .1 + 1)]
    NotAComplementCover(VertexId, VertexId),
    #[error("vertex set over universe {found} does not match graph on {expected} vertices")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("complement vertex cover of size {k} exceeds the limit of {limit}")]
    CoverTooLarge { k: usize, limit: usize },
    #[error("internal error: {0}")]
    Internal(String),
}

/// Rooted vertex separation `pw(G[N[L]]; N(L))` for every `L ⊆ C`, with the
/// vertex placed last in an optimal layout of `L`.
#[derive(Debug, Clone)]
pub struct RootedPwTable {
    cover: Vec<VertexId>,
    value: Vec<u16>,
    last: Vec<u8>,
}

impl RootedPwTable {
    pub fn cover(&self) -> &[VertexId] {
        &self.cover
    }

    /// Value for the subset of `cover()` given by bitmask `l`.
    pub fn get(&self, l: u32) -> u32 {
        self.value[l as usize] as u32
    }

    /// Cover index of the last vertex of an optimal layout of `l` (`l ≠ 0`).
    pub fn last(&self, l: u32) -> usize {
        self.last[l as usize] as usize
    }

    pub fn len(&self) -> usize {
        self.value.len()
    }

    pub fn is_empty(&self) -> bool {
        self.value.is_empty()
    }

    /// Layout of `l` ending in the stored last vertices, first vertex first.
    fn layout(&self, mut l: u32) -> Vec<usize> {
        let mut out = Vec::with_capacity(l.count_ones() as usize);
        while l != 0 {
            let u = self.last(l);
            out.push(u);
            l &= !(1 << u);
        }
        out.reverse();
        out
    }
}

/// Neighborhood structure of `g` relative to a vertex subset `C`, as masks
/// over the indices of `C`.
struct Frame {
    cover: Vec<VertexId>,
    /// `(mask of cover neighbors, multiplicity)` of the vertices outside `C`.
    outside: Vec<(u32, u32)>,
    /// Cover neighbors of each cover vertex.
    adj: Vec<u32>,
}

impl Frame {
    fn new(g: &Graph, c: &VertexSet) -> Result<Self, CvcError> {
        if c.universe() != g.n() {
            return Err(CvcError::UniverseMismatch { expected: g.n(), found: c.universe() });
        }
        let cover: Vec<VertexId> = c.iter().collect();
        if cover.len() > 31 {
            return Err(CvcError::CoverTooLarge { k: cover.len(), limit: 31 });
        }
        let s: Vec<VertexId> = (0..g.n()).filter(|&v| !c.contains(v)).collect();
        for (i, &a) in s.iter().enumerate() {
            if let Some(&b) = s[i + 1..].iter().find(|&&b| !g.has_edge(a, b)) {
                return Err(CvcError::NotAComplementCover(a, b));
            }
        }
        let mut index = vec![usize::MAX; g.n()];
        for (i, &v) in cover.iter().enumerate() {
            index[v] = i;
        }
        let mask = |v: VertexId| {
            g.neighbors(v).iter().filter(|&&u| index[u] != usize::MAX).fold(0u32, |m, &u| m | 1 << index[u])
        };
        let adj = cover.iter().map(|&v| mask(v)).collect();
        let mut outside: Vec<(u32, u32)> = Vec::new();
        for &v in &s {
            let m = mask(v);
            match outside.iter_mut().find(|e| e.0 == m) {
                Some(e) => e.1 += 1,
                None => outside.push((m, 1)),
            }
        }
        Ok(Frame { cover, outside, adj })
    }

    /// `|N(L)|` in the whole graph.
    fn boundary(&self, l: u32) -> u32 {
        let inside = self.adj.iter().enumerate().filter(|&(i, &a)| l >> i & 1 == 0 && a & l != 0).count() as u32;
        inside + self.outside.iter().filter(|e| e.0 & l != 0).map(|e| e.1).sum::<u32>()
    }

    /// Cover part of `N(L)`.
    fn cover_boundary(&self, l: u32) -> u32 {
        self.adj.iter().enumerate().filter(|&(i, &a)| l >> i & 1 == 0 && a & l != 0).fold(0, |m, (i, _)| m | 1 << i)
    }

    /// `N(L)` as graph vertices.
    fn boundary_vertices(&self, g: &Graph, l: u32) -> Vec<VertexId> {
        let members: Vec<VertexId> = (0..self.cover.len()).filter(|&i| l >> i & 1 == 1).map(|i| self.cover[i]).collect();
        g.set_neighborhood(&VertexSet::from_vertices(g.n(), members)).expect("set over the graph's universe").iter().collect()
    }
}

/// Rooted pathwidth table over all subsets of `c`, filled by increasing
/// subset size. `V ∖ c` must be a clique of `g`.
pub fn rooted_pw_table(g: &Graph, c: &VertexSet) -> Result<RootedPwTable, CvcError> {
    let frame = Frame::new(g, c)?;
    Ok(table_of(&frame))
}

fn table_of(frame: &Frame) -> RootedPwTable {
    let k = frame.cover.len();
    let size = 1usize << k;
    let mut value = vec![0u16; size];
    let mut last = vec![u8::MAX; size];
    // Submasks are smaller integers, so increasing order is a valid order.
    for l in 1..size as u32 {
        let mut best = u16::MAX;
        let mut arg = 0u8;
        let mut m = l;
        while m != 0 {
            let u = m.trailing_zeros();
            m &= m - 1;
            let v = value[(l & !(1 << u)) as usize];
            if v < best {
                best = v;
                arg = u as u8;
            }
        }
        value[l as usize] = best.max(frame.boundary(l) as u16);
        last[l as usize] = arg;
    }
    RootedPwTable { cover: frame.cover.clone(), value, last }
}

/// Pathwidth of `g` and an optimal path decomposition, in time exponential
/// only in the vertex cover number of the complement of `g`.
pub fn pathwidth_cvc(g: &Graph) -> Result<Solution, CvcError> {
    pathwidth_cvc_capped(g, MAX_COMPLEMENT_COVER)
}

/// As [`pathwidth_cvc`], refusing complement covers larger than `limit`.
pub fn pathwidth_cvc_capped(g: &Graph, limit: usize) -> Result<Solution, CvcError> {
    let c = minimum_vertex_cover(&g.complement()).vertices;
    if c.len() > limit {
        return Err(CvcError::CoverTooLarge { k: c.len(), limit });
    }
    pathwidth_cvc_with(g, &c)
}

/// As [`pathwidth_cvc`] with a given cover `c` of the complement.
pub fn pathwidth_cvc_with(g: &Graph, c: &VertexSet) -> Result<Solution, CvcError> {
    let frame = Frame::new(g, c)?;
    let table = table_of(&frame);
    let k = frame.cover.len();
    let full = ((1u64 << k) - 1) as u32;
    let s = (g.n() - k) as i32;
    let mut best = (i32::MAX, 0u32);
    for l in 0..=full {
        let nl = frame.cover_boundary(l);
        let r = full & !l & !nl;
        // An empty side contributes no bags.
        let side_width = |m: u32| if m == 0 { -1 } else { table.get(m) as i32 };
        let w = side_width(l).max(side_width(r)).max(s + nl.count_ones() as i32 - 1);
        if w < best.0 {
            best = (w, l);
        }
    }
    let (width, l) = best;
    let r = full & !l & !frame.cover_boundary(l);

    let side = |set: u32| -> Vec<Vec<VertexId>> {
        let mut prefix = 0u32;
        table
            .layout(set)
            .into_iter()
            .map(|u| {
                prefix |= 1 << u;
                let mut bag = frame.boundary_vertices(g, prefix);
                bag.push(frame.cover[u]);
                bag
            })
            .collect()
    };
    let mut bags = side(l);
    let mut middle: Vec<VertexId> = (0..g.n()).filter(|&v| !c.contains(v)).collect();
    middle.extend(frame.boundary_vertices(g, l));
    bags.push(middle);
    let mut right = side(r);
    right.reverse();
    bags.extend(right);
    let mut witness = Decomposition::path(bags);
    witness.contract_subset_bags();
    let stats = SolveStats { cover_size: k, table_entries: table.len(), states: table.len(), ..SolveStats::default() };
    crate::finish(g, width, witness, stats).map_err(|e| CvcError::Internal(e.to_string()))
}
