//! Tree and path decompositions: validation, width, nice form and traces.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexId, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecompositionKind {
    Tree,
    Path,
}

/// Bags over a tree (or path). Bags are sorted vertex lists; `root` is only
/// meaningful when the decomposition is non-empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    pub bags: Vec<Vec<VertexId>>,
    pub edges: Vec<(usize, usize)>,
    pub root: usize,
}

/// One reason a decomposition fails to decompose a graph. Vertex and bag
/// numbers in the `Display` output are 1-based, matching the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("bag {} mentions vertex {} outside 1..={n}", bag + 1, vertex + 1)]
    VertexOutOfRange { bag: usize, vertex: VertexId, n: usize },
    #[error("bag {} lists vertex {} more than once", bag + 1, vertex + 1)]
    RepeatedVertex { bag: usize, vertex: VertexId },
    #[error("tree edge ({}, {}) refers to a missing bag", .0 + 1, .1 + 1)]
    DanglingTreeEdge(usize, usize),
    #[error("bag graph is not a tree ({nodes} bags, {edges} edges, {components} components)")]
    NotATree { nodes: usize, edges: usize, components: usize },
    #[error("bag {} has {degree} neighbors in a path decomposition", bag + 1)]
    NotAPath { bag: usize, degree: usize },
    #[error("vertex {} is in no bag", .0 + 1)]
    VertexUncovered(VertexId),
    #[error("edge ({}, {}) is in no bag", .0 + 1, .1 + 1)]
    EdgeUncovered(VertexId, VertexId),
    #[error("bags containing vertex {} are disconnected (e.g. bags {} and {})", vertex + 1, first + 1, second + 1)]
    Disconnected { vertex: VertexId, first: usize, second: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("invalid decomposition: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("the empty graph has no nice decomposition")]
    EmptyGraph,
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

impl Decomposition {
    /// A single bag holding `vertices`.
    pub fn single_bag(kind: DecompositionKind, mut vertices: Vec<VertexId>) -> Self {
        vertices.sort_unstable();
        Decomposition { kind, bags: vec![vertices], edges: Vec::new(), root: 0 }
    }

    /// Bags chained in order `0 - 1 - ... - N-1`.
    pub fn path(bags: Vec<Vec<VertexId>>) -> Self {
        let edges = (1..bags.len()).map(|i| (i - 1, i)).collect();
        let mut d = Decomposition { kind: DecompositionKind::Path, bags, edges, root: 0 };
        d.normalize_bags();
        d
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// Largest bag size minus one; −1 for a decomposition without vertices.
    pub fn width(&self) -> i32 {
        self.bags.iter().map(|b| b.len() as i32).max().unwrap_or(0) - 1
    }

    pub(crate) fn normalize_bags(&mut self) {
        for b in &mut self.bags {
            b.sort_unstable();
            b.dedup();
        }
    }

    /// Drops `v` from every bag and shifts higher ids down by one.
    pub fn remove_vertex(&mut self, v: VertexId) {
        for bag in &mut self.bags {
            bag.retain(|&u| u != v);
            for u in bag.iter_mut() {
                if *u > v {
                    *u -= 1;
                }
            }
        }
    }

    /// Merges every empty bag into a neighbor. A lone empty bag is removed.
    pub fn contract_empty_bags(&mut self) {
        while let Some(e) = self.bags.iter().position(|b| b.is_empty()) {
            if self.bags.len() == 1 {
                self.bags.clear();
                self.edges.clear();
                self.root = 0;
                break;
            }
            let neighbor = self.edges.iter().find_map(|&(a, b)| {
                if a == e {
                    Some(b)
                } else if b == e {
                    Some(a)
                } else {
                    None
                }
            });
            let Some(keep) = neighbor else { break };
            self.contract_into(e, keep);
        }
        if self.kind == DecompositionKind::Path {
            self.reorder_path();
        }
    }

    /// Merges every bag into a neighboring superset, leaving no bag contained
    /// in an adjacent one. Empty bags go too, as with
    /// [`contract_empty_bags`](Self::contract_empty_bags).
    pub fn contract_subset_bags(&mut self) {
        self.contract_empty_bags();
        'outer: loop {
            for i in 0..self.edges.len() {
                let (a, b) = self.edges[i];
                if is_sorted_subset(&self.bags[a], &self.bags[b]) {
                    self.contract_into(a, b);
                    continue 'outer;
                }
                if is_sorted_subset(&self.bags[b], &self.bags[a]) {
                    self.contract_into(b, a);
                    continue 'outer;
                }
            }
            break;
        }
        if self.kind == DecompositionKind::Path {
            self.reorder_path();
        }
    }

    /// Deletes bag `e`, reattaching its other neighbors to its neighbor `keep`.
    fn contract_into(&mut self, e: usize, keep: usize) {
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| !((a == e && b == keep) || (a == keep && b == e)))
            .map(|&(a, b)| (if a == e { keep } else { a }, if b == e { keep } else { b }))
            .collect();
        let last = self.bags.len() - 1;
        self.bags.swap_remove(e);
        for (a, b) in edges.iter_mut() {
            if *a == last {
                *a = e;
            }
            if *b == last {
                *b = e;
            }
        }
        self.edges = edges;
        if self.root == e {
            self.root = if keep == last { e } else { keep };
        } else if self.root == last {
            self.root = e;
        }
    }

    /// Renumbers a path decomposition so bags appear in path order.
    fn reorder_path(&mut self) {
        let n = self.bags.len();
        if n == 0 {
            return;
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let Some(start) = (0..n).find(|&i| adj[i].len() <= 1) else { return };
        let mut order = Vec::with_capacity(n);
        let (mut prev, mut cur) = (usize::MAX, start);
        loop {
            order.push(cur);
            match adj[cur].iter().find(|&&x| x != prev) {
                Some(&next) if order.len() < n => {
                    prev = cur;
                    cur = next;
                }
                _ => break,
            }
        }
        if order.len() != n {
            return;
        }
        let bags = order.iter().map(|&i| std::mem::take(&mut self.bags[i])).collect();
        *self = Decomposition::path(bags);
    }
}

fn is_sorted_subset(a: &[VertexId], b: &[VertexId]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// Checks the three decomposition axioms plus the tree (or path) shape, and
/// returns the width or every violation found.
pub fn validate(g: &Graph, d: &Decomposition) -> Result<i32, Vec<Violation>> {
    let n = g.n();
    let nodes = d.bags.len();
    let mut violations = Vec::new();

    for (i, bag) in d.bags.iter().enumerate() {
        let mut seen = VertexSet::new(n);
        for &v in bag {
            if v >= n {
                violations.push(Violation::VertexOutOfRange { bag: i, vertex: v, n });
            } else if !seen.insert(v) {
                violations.push(Violation::RepeatedVertex { bag: i, vertex: v });
            }
        }
    }

    let mut adj = vec![Vec::new(); nodes];
    for &(a, b) in &d.edges {
        if a >= nodes || b >= nodes || a == b {
            violations.push(Violation::DanglingTreeEdge(a, b));
        } else {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let components = count_components(&adj);
    if nodes > 0 && (d.edges.len() != nodes - 1 || components != 1) {
        violations.push(Violation::NotATree { nodes, edges: d.edges.len(), components });
    }
    if d.kind == DecompositionKind::Path {
        for (bag, nb) in adj.iter().enumerate() {
            if nb.len() > 2 {
                violations.push(Violation::NotAPath { bag, degree: nb.len() });
            }
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }

    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in d.bags.iter().enumerate() {
        for &v in bag {
            holders[v].push(i);
        }
    }
    for (v, h) in holders.iter().enumerate() {
        if h.is_empty() {
            violations.push(Violation::VertexUncovered(v));
        }
    }
    for (u, v) in g.edges() {
        if !sorted_intersect(&holders[u], &holders[v]) {
            violations.push(Violation::EdgeUncovered(u, v));
        }
    }
    for (v, h) in holders.iter().enumerate() {
        if h.len() > 1 {
            if let Some((first, second)) = disconnected_pair(&adj, h) {
                violations.push(Violation::Disconnected { vertex: v, first, second });
            }
        }
    }
    if violations.is_empty() {
        Ok(d.width())
    } else {
        Err(violations)
    }
}

fn count_components(adj: &[Vec<usize>]) -> usize {
    let mut seen = vec![false; adj.len()];
    let mut count = 0;
    for s in 0..adj.len() {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    count
}

fn sorted_intersect(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Searches from the first holder through holder bags only; returns a holder
/// that cannot be reached.
fn disconnected_pair(adj: &[Vec<usize>], holders: &[usize]) -> Option<(usize, usize)> {
    let mut is_holder = vec![false; adj.len()];
    for &h in holders {
        is_holder[h] = true;
    }
    let mut seen = vec![false; adj.len()];
    seen[holders[0]] = true;
    let mut stack = vec![holders[0]];
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if is_holder[y] && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    holders.iter().find(|&&h| !seen[h]).map(|&h| (holders[0], h))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NiceKind {
    Leaf,
    Introduce(VertexId),
    Forget(VertexId),
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NiceKind,
    pub bag: Vec<VertexId>,
    pub children: Vec<usize>,
}

/// Rooted nice decomposition. Node ids are indices into `nodes`; children
/// always have smaller ids than their parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceDecomposition {
    pub kind: DecompositionKind,
    pub nodes: Vec<NiceNode>,
    pub root: usize,
    n: usize,
}

impl NiceDecomposition {
    pub fn width(&self) -> i32 {
        self.nodes.iter().map(|x| x.bag.len() as i32).max().unwrap_or(0) - 1
    }

    /// Plain (unrooted) view, for validation and serialization.
    pub fn to_decomposition(&self) -> Decomposition {
        let bags = self.nodes.iter().map(|x| x.bag.clone()).collect();
        let edges = self
            .nodes
            .iter()
            .enumerate()
            .flat_map(|(i, x)| x.children.iter().map(move |&c| (c, i)))
            .collect();
        Decomposition { kind: self.kind, bags, edges, root: self.root }
    }

    /// Checks the node-type rules: leaf bags are singletons, introduce and
    /// forget change the child's bag by exactly the tagged vertex, joins have
    /// two children with equal bags, and the root bag is a singleton.
    pub fn is_nice(&self) -> bool {
        let ok = |node: &NiceNode| match node.kind {
            NiceKind::Leaf => node.children.is_empty() && node.bag.len() == 1,
            NiceKind::Introduce(v) => {
                node.children.len() == 1 && {
                    let child = &self.nodes[node.children[0]].bag;
                    !child.contains(&v) && node.bag.contains(&v) && node.bag.len() == child.len() + 1
                        && child.iter().all(|u| node.bag.contains(u))
                }
            }
            NiceKind::Forget(v) => {
                node.children.len() == 1 && {
                    let child = &self.nodes[node.children[0]].bag;
                    child.contains(&v) && !node.bag.contains(&v) && child.len() == node.bag.len() + 1
                        && node.bag.iter().all(|u| child.contains(u))
                }
            }
            NiceKind::Join => {
                node.children.len() == 2
                    && node.children.iter().all(|&c| self.nodes[c].bag == node.bag)
            }
        };
        !self.nodes.is_empty()
            && self.nodes[self.root].bag.len() == 1
            && self.nodes.iter().all(ok)
            && (self.kind == DecompositionKind::Tree
                || self.nodes.iter().all(|x| x.kind != NiceKind::Join))
    }

    /// Vertex union of the bags in the subtree rooted at `i`.
    fn subtree_vertices(&self, i: usize) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        let mut stack = vec![i];
        while let Some(x) = stack.pop() {
            for &v in &self.nodes[x].bag {
                out.insert(v);
            }
            stack.extend(&self.nodes[x].children);
        }
        out
    }
}

/// Refines a valid decomposition into a nice one without increasing width.
///
/// Tree decompositions are rooted at bag 0, path decompositions at their
/// lowest-numbered end. Children are expanded in increasing id order, each
/// edge becoming a run of forgets followed by a run of introduces.
pub fn make_nice(g: &Graph, d: &Decomposition) -> Result<NiceDecomposition, DecompositionError> {
    validate(g, d).map_err(DecompositionError::Invalid)?;
    if g.n() == 0 {
        return Err(DecompositionError::EmptyGraph);
    }
    let mut d = d.clone();
    d.normalize_bags();
    d.contract_empty_bags();

    let nodes = d.bags.len();
    let mut adj = vec![Vec::new(); nodes];
    for &(a, b) in &d.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let root = match d.kind {
        DecompositionKind::Tree => 0,
        DecompositionKind::Path => (0..nodes).find(|&i| adj[i].len() <= 1).unwrap_or(0),
    };

    // BFS order from the root; children are processed before parents by
    // walking it backwards.
    let mut parent = vec![usize::MAX; nodes];
    let mut order = Vec::with_capacity(nodes);
    let mut queue = VecDeque::from([root]);
    parent[root] = root;
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &y in &adj[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }

    let mut out: Vec<NiceNode> = Vec::new();
    let mut top = vec![usize::MAX; nodes];
    for &x in order.iter().rev() {
        let bag = &d.bags[x];
        let children: Vec<usize> = adj[x].iter().copied().filter(|&y| parent[y] == x && y != x).collect();
        let mut tops = Vec::with_capacity(children.len());
        for &c in &children {
            tops.push(bridge(&mut out, top[c], &d.bags[c], bag));
        }
        top[x] = match tops.len() {
            0 => {
                out.push(NiceNode { kind: NiceKind::Leaf, bag: vec![bag[0]], children: vec![] });
                let leaf = out.len() - 1;
                bridge(&mut out, leaf, &bag[..1], bag)
            }
            _ => {
                let mut acc = tops[0];
                for &t in &tops[1..] {
                    out.push(NiceNode { kind: NiceKind::Join, bag: bag.clone(), children: vec![acc, t] });
                    acc = out.len() - 1;
                }
                acc
            }
        };
    }
    let root_bag = &d.bags[root];
    let last = bridge(&mut out, top[root], root_bag, &root_bag[..1]);
    Ok(NiceDecomposition { kind: d.kind, nodes: out, root: last, n: g.n() })
}

/// Appends forget nodes for `from \ to`, then introduce nodes for `to \ from`,
/// on top of node `start` (whose bag is `from`). Returns the new top.
fn bridge(out: &mut Vec<NiceNode>, start: usize, from: &[VertexId], to: &[VertexId]) -> usize {
    let mut cur = start;
    let mut bag: Vec<VertexId> = from.to_vec();
    for &v in from.iter().filter(|v| !to.contains(v)) {
        bag.retain(|&u| u != v);
        out.push(NiceNode { kind: NiceKind::Forget(v), bag: bag.clone(), children: vec![cur] });
        cur = out.len() - 1;
    }
    for &v in to.iter().filter(|v| !from.contains(v)) {
        bag.push(v);
        bag.sort_unstable();
        out.push(NiceNode { kind: NiceKind::Introduce(v), bag: bag.clone(), children: vec![cur] });
        cur = out.len() - 1;
    }
    cur
}

/// The partition `(L, X, R)` a node induces on `c`: vertices seen only
/// strictly below the node, vertices in its bag, and the rest.
#[derive(Clone, PartialEq, Eq)]
pub struct Trace {
    pub lower: VertexSet,
    pub bag: VertexSet,
    pub rest: VertexSet,
}

impl fmt::Debug for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}, {:?})", self.lower, self.bag, self.rest)
    }
}

pub fn trace_of_node(nd: &NiceDecomposition, i: usize, c: &VertexSet) -> Trace {
    let below = nd.subtree_vertices(i);
    let bag = VertexSet::from_vertices(nd.n, nd.nodes[i].bag.iter().copied());
    let lower = below.difference(&bag).intersection(c);
    let bag = bag.intersection(c);
    let rest = c.difference(&lower).difference(&bag);
    Trace { lower, bag, rest }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn tree(bags: Vec<Vec<usize>>, edges: Vec<(usize, usize)>) -> Decomposition {
        Decomposition { kind: DecompositionKind::Tree, bags, edges, root: 0 }
    }

    #[test]
    fn single_bag_on_k4() {
        let k4 = Graph::from_edges(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap();
        let d = Decomposition::single_bag(DecompositionKind::Tree, vec![0, 1, 2, 3]);
        assert_eq!(validate(&k4, &d), Ok(3));
    }

    #[test]
    fn p3_path_decomposition() {
        let d = tree(vec![vec![0, 1], vec![1, 2]], vec![(0, 1)]);
        assert_eq!(validate(&p3(), &d), Ok(1));
    }

    #[test]
    fn reports_uncovered_edge() {
        let d = tree(vec![vec![0, 1], vec![2]], vec![(0, 1)]);
        let err = validate(&p3(), &d).unwrap_err();
        assert_eq!(err, vec![Violation::EdgeUncovered(1, 2)]);
        assert_eq!(err[0].to_string(), "edge (2, 3) is in no bag");
    }

    #[test]
    fn reports_disconnected_occurrences() {
        let d = tree(vec![vec![0, 1], vec![2], vec![1, 2]], vec![(0, 1), (1, 2)]);
        let err = validate(&p3(), &d).unwrap_err();
        assert_eq!(err, vec![Violation::Disconnected { vertex: 1, first: 0, second: 2 }]);
    }

    #[test]
    fn reports_structural_problems() {
        let g = p3();
        let cyclic = tree(vec![vec![0, 1], vec![1, 2], vec![1]], vec![(0, 1), (1, 2), (2, 0)]);
        assert!(matches!(validate(&g, &cyclic).unwrap_err()[0], Violation::NotATree { .. }));
        let mut star = tree(vec![vec![1], vec![0, 1], vec![1, 2], vec![1]], vec![(0, 1), (0, 2), (0, 3)]);
        star.kind = DecompositionKind::Path;
        assert!(matches!(validate(&g, &star).unwrap_err()[0], Violation::NotAPath { bag: 0, degree: 3 }));
        let missing = tree(vec![vec![0, 1]], vec![]);
        let err = validate(&g, &missing).unwrap_err();
        assert!(err.contains(&Violation::VertexUncovered(2)));
        let out_of_range = tree(vec![vec![0, 1, 2, 7]], vec![]);
        assert!(matches!(validate(&g, &out_of_range).unwrap_err()[0], Violation::VertexOutOfRange { .. }));
    }

    #[test]
    fn empty_graph_has_width_minus_one() {
        let d = tree(vec![], vec![]);
        assert_eq!(validate(&Graph::empty(0), &d), Ok(-1));
        assert_eq!(make_nice(&Graph::empty(0), &d), Err(DecompositionError::EmptyGraph));
    }

    #[test]
    fn nice_form_of_single_bag() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let d = Decomposition::single_bag(DecompositionKind::Tree, vec![0, 1]);
        let nd = make_nice(&g, &d).unwrap();
        assert!(nd.is_nice());
        assert_eq!(nd.width(), 1);
        let kinds: Vec<NiceKind> = nd.nodes.iter().map(|x| x.kind).collect();
        assert_eq!(kinds, vec![NiceKind::Leaf, NiceKind::Introduce(1), NiceKind::Forget(1)]);
        assert_eq!(validate(&g, &nd.to_decomposition()), Ok(1));
    }

    #[test]
    fn nice_form_is_idempotent_on_width() {
        let g = p3();
        let d = tree(vec![vec![0, 1], vec![1, 2]], vec![(0, 1)]);
        let once = make_nice(&g, &d).unwrap();
        let twice = make_nice(&g, &once.to_decomposition()).unwrap();
        assert_eq!(once.width(), twice.width());
        assert!(twice.is_nice());
    }

    #[test]
    fn nice_path_has_no_joins() {
        let g = p3();
        let d = Decomposition::path(vec![vec![0, 1], vec![1, 2]]);
        let nd = make_nice(&g, &d).unwrap();
        assert!(nd.is_nice());
        assert!(nd.nodes.iter().all(|x| x.kind != NiceKind::Join));
    }

    #[test]
    fn traces_of_root_and_leaf() {
        // Star around a universal vertex 3.
        let g = Graph::from_edges(4, [(0, 3), (1, 3), (2, 3), (0, 1)]).unwrap();
        let d = tree(vec![vec![0, 1, 3], vec![2, 3]], vec![(0, 1)]);
        let nd = make_nice(&g, &d).unwrap();
        let c = VertexSet::from_vertices(4, [0, 2, 3]);
        // Forget down to the universal vertex explicitly so the root bag is {3}.
        let mut nd = nd;
        if nd.nodes[nd.root].bag != vec![3] {
            let root_bag = nd.nodes[nd.root].bag.clone();
            let r = nd.root;
            nd.nodes.push(NiceNode { kind: NiceKind::Introduce(3), bag: vec![root_bag[0], 3], children: vec![r] });
            let i = nd.nodes.len() - 1;
            nd.nodes.push(NiceNode { kind: NiceKind::Forget(root_bag[0]), bag: vec![3], children: vec![i] });
            nd.root = nd.nodes.len() - 1;
        }
        let t = trace_of_node(&nd, nd.root, &c);
        assert_eq!(t.lower, VertexSet::from_vertices(4, [0, 2]));
        assert_eq!(t.bag, VertexSet::from_vertices(4, [3]));
        assert!(t.rest.is_empty());
        let leaf = nd.nodes.iter().position(|x| x.kind == NiceKind::Leaf).unwrap();
        let v = nd.nodes[leaf].bag[0];
        let t = trace_of_node(&nd, leaf, &c);
        assert!(t.lower.is_empty());
        if c.contains(v) {
            assert_eq!(t.bag.to_vec(), vec![v]);
        }
        for i in 0..nd.nodes.len() {
            let t = trace_of_node(&nd, i, &c);
            assert!(t.lower.is_disjoint(&t.bag) && t.lower.is_disjoint(&t.rest) && t.bag.is_disjoint(&t.rest));
            assert_eq!(t.lower.union(&t.bag).union(&t.rest), c);
        }
    }

    #[test]
    fn contracting_empty_bags_keeps_validity() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let mut d = tree(vec![vec![0, 1], vec![], vec![2, 3], vec![]], vec![(0, 1), (1, 2), (1, 3)]);
        assert_eq!(validate(&g, &d), Ok(1));
        d.contract_empty_bags();
        assert_eq!(d.len(), 2);
        assert_eq!(validate(&g, &d), Ok(1));
    }

    #[test]
    fn contracting_subset_bags() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let mut d = Decomposition::path(vec![vec![0], vec![0, 1], vec![1], vec![1, 2], vec![2, 3], vec![3], vec![]]);
        assert_eq!(validate(&g, &d), Ok(1));
        d.contract_subset_bags();
        assert_eq!(d.bags, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(validate(&g, &d), Ok(1));
        let mut t = tree(vec![vec![0, 1, 2], vec![1, 2], vec![2, 3], vec![1]], vec![(0, 1), (1, 2), (1, 3)]);
        t.contract_subset_bags();
        assert_eq!(t.len(), 2);
        assert_eq!(validate(&g, &t), Ok(2));
    }
}
