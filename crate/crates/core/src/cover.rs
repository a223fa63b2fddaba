//! Exact minimum vertex cover by branching, and cover verification.

use thiserror::Error;

use crate::graph::{Graph, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("vertex set over universe {found} does not match graph on {expected} vertices")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("edge ({}, {}) has no endpoint in the cover", .0 + 1, .1 + 1)]
    Uncovered(VertexId, VertexId),
}

/// A vertex cover of some graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    pub vertices: VertexSet,
}

impl Cover {
    /// Wraps `vertices` after checking that it covers every edge of `g`.
    pub fn new(g: &Graph, vertices: VertexSet) -> Result<Self, CoverError> {
        if vertices.universe() != g.n() {
            return Err(CoverError::UniverseMismatch { expected: g.n(), found: vertices.universe() });
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| !vertices.contains(u) && !vertices.contains(v)) {
            return Err(CoverError::Uncovered(u, v));
        }
        Ok(Cover { vertices })
    }

    pub fn k(&self) -> usize {
        self.vertices.len()
    }
}

pub fn is_vertex_cover(g: &Graph, w: &VertexSet) -> bool {
    w.universe() == g.n() && g.edges().all(|(u, v)| w.contains(u) || w.contains(v))
}

/// Minimum vertex cover. Branches on a maximum-degree vertex (lowest id on
/// ties): either it joins the cover or all its neighbors do. Vertices of
/// degree at most one are resolved without branching, and a greedy maximal
/// matching bounds the remaining cover from below.
pub fn minimum_vertex_cover(g: &Graph) -> Cover {
    let n = g.n();
    let mut search = Search { g, best: VertexSet::full(n), best_len: n, chosen: Vec::new() };
    // Every non-isolated vertex, an easy upper bound for pruning.
    let start: Vec<VertexId> = (0..n).filter(|&v| g.degree(v) > 0).collect();
    search.best = VertexSet::from_vertices(n, start.iter().copied());
    search.best_len = start.len();
    search.branch(VertexSet::full(n));
    Cover { vertices: search.best }
}

struct Search<'a> {
    g: &'a Graph,
    best: VertexSet,
    best_len: usize,
    chosen: Vec<VertexId>,
}

impl Search<'_> {
    fn degree_in(&self, v: VertexId, alive: &VertexSet) -> usize {
        self.g.neighbors(v).iter().filter(|&&u| alive.contains(u)).count()
    }

    fn branch(&mut self, mut alive: VertexSet) {
        let mark = self.chosen.len();
        self.reduce(&mut alive);
        if self.chosen.len() >= self.best_len {
            self.chosen.truncate(mark);
            return;
        }
        let mut pick = None;
        let mut pick_deg = 0;
        for v in alive.iter() {
            let d = self.degree_in(v, &alive);
            if d > pick_deg {
                pick = Some(v);
                pick_deg = d;
            }
        }
        let Some(v) = pick else {
            self.best = VertexSet::from_vertices(self.g.n(), self.chosen.iter().copied());
            self.best_len = self.chosen.len();
            self.chosen.truncate(mark);
            return;
        };
        if self.chosen.len() + self.matching_bound(&alive) >= self.best_len {
            self.chosen.truncate(mark);
            return;
        }

        let mut without_v = alive.clone();
        without_v.remove(v);
        self.chosen.push(v);
        self.branch(without_v);
        self.chosen.pop();

        let neighbors: Vec<VertexId> = self.g.neighbors(v).iter().copied().filter(|&u| alive.contains(u)).collect();
        if self.chosen.len() + neighbors.len() < self.best_len {
            let mut rest = alive;
            rest.remove(v);
            for &u in &neighbors {
                rest.remove(u);
            }
            let len = self.chosen.len();
            self.chosen.extend(neighbors);
            self.branch(rest);
            self.chosen.truncate(len);
        }
        self.chosen.truncate(mark);
    }

    /// Drops isolated vertices and takes the neighbor of every degree-one
    /// vertex, until neither rule applies.
    fn reduce(&mut self, alive: &mut VertexSet) {
        loop {
            let mut changed = false;
            for v in alive.to_vec() {
                if !alive.contains(v) {
                    continue;
                }
                match self.degree_in(v, alive) {
                    0 => {
                        alive.remove(v);
                        changed = true;
                    }
                    1 => {
                        let u = *self.g.neighbors(v).iter().find(|&&u| alive.contains(u)).unwrap();
                        self.chosen.push(u);
                        alive.remove(u);
                        alive.remove(v);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
    }

    fn matching_bound(&self, alive: &VertexSet) -> usize {
        let mut free = alive.clone();
        let mut size = 0;
        for v in alive.iter() {
            if !free.contains(v) {
                continue;
            }
            if let Some(&u) = self.g.neighbors(v).iter().find(|&&u| free.contains(u)) {
                free.remove(u);
                free.remove(v);
                size += 1;
            }
        }
        size
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_force(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&mask| g.edges().all(|(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1))
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn triangle() {
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let c = minimum_vertex_cover(&k3);
        assert_eq!(c.k(), 2);
        assert!(is_vertex_cover(&k3, &c.vertices));
    }

    #[test]
    fn edgeless() {
        assert_eq!(minimum_vertex_cover(&Graph::empty(5)).k(), 0);
        assert_eq!(minimum_vertex_cover(&Graph::empty(0)).k(), 0);
    }

    #[test]
    fn path_on_four() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = minimum_vertex_cover(&p4);
        assert_eq!(c.k(), 2);
        assert_eq!(c.k(), brute_force(&p4));
    }

    #[test]
    fn verification() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(is_vertex_cover(&p3, &VertexSet::from_vertices(3, [1])));
        assert!(!is_vertex_cover(&p3, &VertexSet::from_vertices(3, [0])));
        assert!(is_vertex_cover(&p3, &VertexSet::full(3)));
        assert_eq!(Cover::new(&p3, VertexSet::from_vertices(3, [0])), Err(CoverError::Uncovered(1, 2)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(600))]
        #[test]
        fn matches_brute_force(n in 0usize..=10, bits in any::<u64>(), density in 1u32..=9) {
            let mut edges = Vec::new();
            let mut state = bits;
            for u in 0..n {
                for v in u + 1..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if (state >> 33) % 10 < density as u64 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let c = minimum_vertex_cover(&g);
            prop_assert!(is_vertex_cover(&g, &c.vertices));
            prop_assert_eq!(c.k(), brute_force(&g));
            let rest = c.vertices.complement();
            prop_assert!(g.edges().all(|(u, v)| !(rest.contains(u) && rest.contains(v))));
        }
    }
}
