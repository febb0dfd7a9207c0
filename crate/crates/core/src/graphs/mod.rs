//! Simple graphs, the weighted multigraphs used by the deletion-contraction
//! engine, and builders for every graph family in the crate.
//!
//! Vertex numbering is fixed per family: body vertices first, then attached
//! paths in declaration order, each path listed from its attachment point
//! outwards.

mod builders;
mod spec;
pub(crate) mod unionfind;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Partition;

pub use builders::{
    add_complete, attach, build_dumbbell, build_elementary, build_spider, build_sun, build_tail_graph, disjoint_union,
    edge_subset_type, line_graph, BodyKind, DumbbellKind, ElementaryKind, TailKind,
};
pub use spec::GraphSpec;

/// Vertex sets are stored as 64-bit masks.
pub const MAX_VERTICES: usize = 64;

pub type Edge = (usize, usize);

/// A finite simple undirected graph on vertices `0..vertex_count`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GuardExceeded { what: "vertex count", value: n, limit: MAX_VERTICES });
        }
        Ok(Graph { n, edges: BTreeSet::new(), adj: vec![0; n] })
    }

    /// Rejects loops, repeated edges and out-of-range endpoints.
    pub fn from_edges<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if g.has_edge(u, v) {
                return Err(Error::Domain(format!("repeated edge ({u},{v})")));
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, count: self.n });
            }
        }
        if u == v {
            return Err(Error::Domain(format!("loop at vertex {u}")));
        }
        self.edges.insert((u.min(v), u.max(v)));
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges().collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn all_vertices(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Connected components of the subgraph induced by `mask`.
    pub fn components_of(&self, mask: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut rest = mask;
        while rest != 0 {
            let comp = self.reach(rest.trailing_zeros() as usize, rest);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Vertices of `within` reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[v] & within & !seen;
            seen |= new;
            frontier |= new;
        }
        seen
    }

    pub fn induces_connected(&self, mask: u64) -> bool {
        mask != 0 && self.reach(mask.trailing_zeros() as usize, mask) == mask
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.induces_connected(self.all_vertices())
    }

    /// Component sizes of the whole graph as a partition of the vertex count.
    pub fn component_type(&self) -> Partition {
        Partition::from_parts(self.components_of(self.all_vertices()).iter().map(|c| c.count_ones() as usize).collect())
    }

    pub fn without_edges(&self, remove: &[Edge]) -> Result<Graph> {
        let mut g = Graph::empty(self.n)?;
        let drop: BTreeSet<Edge> = remove.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        for &(u, v) in &drop {
            if !self.has_edge(u, v) {
                return Err(Error::Precondition(format!("({u},{v}) is not an edge")));
            }
        }
        for e in self.edges().filter(|e| !drop.contains(e)) {
            g.add_edge(e.0, e.1)?;
        }
        Ok(g)
    }

    /// All triangles `(a, b, c)` with `a < b < c`.
    pub fn triangles(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            let mut common = self.adj[a] & self.adj[b] & !((2u64 << b) - 1);
            while common != 0 {
                let c = common.trailing_zeros() as usize;
                common &= common - 1;
                out.push((a, b, c));
            }
        }
        out
    }

    /// Checks that `map` (a bijection from our vertices to `other`'s) carries
    /// the edge set exactly onto the edge set of `other`.
    pub fn is_isomorphism(&self, other: &Graph, map: &[usize]) -> bool {
        if self.n != other.n || self.edge_count() != other.edge_count() || map.len() != self.n {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &m in map {
            if m >= self.n || seen[m] {
                return false;
            }
            seen[m] = true;
        }
        self.edges().all(|(u, v)| other.has_edge(map[u], map[v]))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.n, self.edges)
    }
}

/// Vertex-weighted multigraph; loops and parallel edges are representable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedMultigraph {
    pub weights: Vec<usize>,
    pub edges: Vec<Edge>,
}

impl WeightedMultigraph {
    pub fn new(weights: Vec<usize>, edges: Vec<Edge>) -> Result<Self> {
        if let Some(&w) = weights.iter().find(|&&w| w == 0) {
            return Err(Error::Domain(format!("vertex weight {w} must be positive")));
        }
        for &(u, v) in &edges {
            for x in [u, v] {
                if x >= weights.len() {
                    return Err(Error::VertexOutOfRange { vertex: x, count: weights.len() });
                }
            }
        }
        Ok(WeightedMultigraph { weights, edges })
    }

    /// Unit weights on every vertex of a simple graph.
    pub fn from_graph(g: &Graph) -> Self {
        WeightedMultigraph { weights: vec![1; g.vertex_count()], edges: g.edge_list() }
    }

    pub fn total_weight(&self) -> usize {
        self.weights.iter().sum()
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    /// Removes the edge at `idx`.
    pub fn delete(&self, idx: usize) -> Self {
        let mut edges = self.edges.clone();
        edges.swap_remove(idx);
        WeightedMultigraph { weights: self.weights.clone(), edges }
    }

    /// Contracts the edge at `idx`: its endpoints merge and their weights add.
    /// Other edges between the two endpoints become loops.
    pub fn contract(&self, idx: usize) -> Self {
        let (a, b) = self.edges[idx];
        let (keep, gone) = (a.min(b), a.max(b));
        let relabel = |x: usize| {
            let x = if x == gone { keep } else { x };
            if x > gone {
                x - 1
            } else {
                x
            }
        };
        let mut weights = self.weights.clone();
        if keep != gone {
            weights[keep] += weights[gone];
            weights.remove(gone);
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, &(u, v))| (relabel(u), relabel(v)))
            .collect();
        WeightedMultigraph { weights, edges }
    }

    /// Drops every parallel copy of an edge beyond the first.
    pub fn simplify_parallel(&self) -> Self {
        let mut seen = BTreeSet::new();
        let edges = self.edges.iter().filter(|&&(u, v)| seen.insert((u.min(v), u.max(v)))).copied().collect();
        WeightedMultigraph { weights: self.weights.clone(), edges }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Graph::from_edges(2, [(0, 0)]), Err(Error::Domain(_))));
        assert!(matches!(Graph::from_edges(2, [(0, 2)]), Err(Error::VertexOutOfRange { .. })));
        assert!(matches!(Graph::from_edges(2, [(0, 1), (1, 0)]), Err(Error::Domain(_))));
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn connectivity_and_components() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.component_type(), Partition::from_parts(vec![3, 2]));
        assert!(g.induces_connected(0b00111));
        assert!(!g.induces_connected(0b00101));
        assert!(Graph::empty(0).unwrap().is_connected());
    }

    #[test]
    fn triangles_found() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert_eq!(g.triangles(), vec![(0, 1, 2)]);
    }

    #[test]
    fn contraction_merges_weights() {
        let m = WeightedMultigraph::new(vec![1, 2, 3], vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let c = m.contract(0);
        assert_eq!(c.weights, vec![3, 3]);
        assert_eq!(c.edges.len(), 2);
        assert!(!c.has_loop());
        assert_eq!(c.simplify_parallel().edges.len(), 1);
        let tri = m.contract(0).contract(0);
        assert_eq!(tri.weights, vec![6]);
        assert!(tri.has_loop());
        assert!(WeightedMultigraph::new(vec![0], vec![]).is_err());
    }

    #[test]
    fn isomorphism_certificate() {
        let a = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, [(0, 2), (2, 1)]).unwrap();
        assert!(a.is_isomorphism(&b, &[0, 2, 1]));
        assert!(!a.is_isomorphism(&b, &[0, 1, 2]));
        assert!(!a.is_isomorphism(&b, &[0, 0, 1]));
    }
}
