//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is a bit mask per vertex, so neighbor lists come out sorted and
//! set-valued neighborhood operations are word operations. The all-pairs
//! distance table is filled at construction; every graph this crate handles
//! is small enough that one BFS per vertex is negligible.

use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

use crate::vertex_set::{VertexSet, MAX_VERTICES};

const UNREACHABLE: u8 = u8::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    TooManyVertices { n: usize },
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    Asymmetric { u: usize, v: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::TooManyVertices { n } => {
                write!(f, "{n} vertices exceeds the limit of {MAX_VERTICES}")
            }
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {u}-{v}"),
            GraphError::Asymmetric { u, v } => {
                write!(f, "adjacency is not symmetric: {u} lists {v} but not conversely")
            }
        }
    }
}

impl core::error::Error for GraphError {}

#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    dist: Vec<u8>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Graph::from_adjacency(vec![VertexSet::EMPTY; n])
    }

    /// Builds a graph from an edge list. Duplicate edges and loops are errors.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if adj[u].contains(v) {
                return Err(GraphError::DuplicateEdge { u: u.min(v), v: u.max(v) });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph::from_valid_adjacency(adj))
    }

    /// Builds a graph from one neighbor mask per vertex, checking symmetry.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let universe = VertexSet::full(n);
        for (u, &nbrs) in adj.iter().enumerate() {
            if let Some(v) = (nbrs - universe).first() {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if nbrs.contains(u) {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            for v in nbrs {
                if !adj[v].contains(u) {
                    return Err(GraphError::Asymmetric { u, v });
                }
            }
        }
        Ok(Graph::from_valid_adjacency(adj))
    }

    pub(crate) fn from_valid_adjacency(adj: Vec<VertexSet>) -> Graph {
        let n = adj.len();
        let mut dist = vec![UNREACHABLE; n * n];
        for src in 0..n {
            let row = &mut dist[src * n..(src + 1) * n];
            let mut seen = VertexSet::singleton(src);
            let mut frontier = seen;
            let mut d = 0u8;
            row[src] = 0;
            while !frontier.is_empty() {
                d += 1;
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next |= adj[v];
                }
                next -= seen;
                for v in next {
                    row[v] = d;
                }
                seen |= next;
                frontier = next;
            }
        }
        Graph { n, adj, dist }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn neighbor_list(&self, v: usize) -> Vec<usize> {
        self.adj[v].to_vec()
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (self.adj[u] - VertexSet::full(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// `N(S)`: vertices adjacent to some member of `s` (members included when
    /// they are adjacent to each other).
    pub fn open_neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in s {
            out |= self.adj[v];
        }
        out
    }

    /// `N[S] = S ∪ N(S)`.
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        self.open_neighborhood(s) | s
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Shortest-path length; `None` when `u` and `v` are in different components.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.dist_unchecked(u, v))
    }

    #[inline]
    pub(crate) fn dist_unchecked(&self, u: usize, v: usize) -> Option<usize> {
        match self.dist[u * self.n + v] {
            UNREACHABLE => None,
            d => Some(d as usize),
        }
    }

    /// Distance from `v` to the nearest member of `s`.
    pub fn distance_to_set(&self, v: usize, s: VertexSet) -> Option<usize> {
        s.iter().filter_map(|u| self.dist_unchecked(u, v)).min()
    }

    /// `N_r[S]`: every vertex within distance `radius` of `s`.
    pub fn ball(&self, s: VertexSet, radius: usize) -> VertexSet {
        let mut seen = s;
        let mut frontier = s;
        for _ in 0..radius {
            let next = self.open_neighborhood(frontier) - seen;
            if next.is_empty() {
                break;
            }
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// `∂_i(S)`: vertices at distance exactly `i` from `s`. For `i == 0` this
    /// is `s` itself.
    pub fn boundary(&self, s: VertexSet, i: usize) -> VertexSet {
        match i {
            0 => s,
            _ => self.ball(s, i) - self.ball(s, i - 1),
        }
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut depth = vec![0usize; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = Vec::with_capacity(self.n);
        for root in 0..self.n {
            let mut seen = VertexSet::singleton(root);
            queue.clear();
            queue.push(root);
            depth[root] = 0;
            parent[root] = usize::MAX;
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                if let Some(b) = best {
                    // Cycles closed from depth d or deeper have length >= 2d.
                    if 2 * depth[u] >= b {
                        break;
                    }
                }
                for w in self.adj[u] {
                    if !seen.contains(w) {
                        seen.insert(w);
                        depth[w] = depth[u] + 1;
                        parent[w] = u;
                        queue.push(w);
                    } else if parent[u] != w {
                        let len = depth[u] + depth[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// `G²`: same vertices, `uv` an edge iff `1 ≤ d(u, v) ≤ 2`.
    pub fn square(&self) -> Graph {
        let adj = (0..self.n)
            .map(|v| self.ball(VertexSet::singleton(v), 2).without(v))
            .collect();
        Graph::from_valid_adjacency(adj)
    }

    /// The subgraph induced by `s`, relabeled to `0..|s|` in increasing
    /// order, together with the map from new indices back to this graph.
    pub fn induced(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let map = s.to_vec();
        let mut adj = vec![VertexSet::EMPTY; map.len()];
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate() {
                if self.adj[u].contains(v) {
                    adj[i].insert(j);
                }
            }
        }
        (Graph::from_valid_adjacency(adj), map)
    }

    /// Applies a relabeling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph::from_valid_adjacency(adj)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || (0..self.n).all(|v| self.dist[v] != UNREACHABLE)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|a| a.len() == 3)
    }

    /// `true` iff every pair of distinct members is at distance at least 3.
    pub fn is_packing(&self, s: VertexSet) -> bool {
        self.packing_conflict(s).is_none()
    }

    /// A pair of members at distance at most 2, if any.
    pub fn packing_conflict(&self, s: VertexSet) -> Option<(usize, usize)> {
        for u in s {
            let close = self.ball(VertexSet::singleton(u), 2).without(u) & s;
            if let Some(v) = close.first() {
                return Some((u.min(v), u.max(v)));
            }
        }
        None
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_dominating(&self, s: VertexSet) -> bool {
        self.closed_neighborhood(s) == self.vertices()
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v]))
    }
}
