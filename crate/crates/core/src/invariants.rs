//! Exact solvers for α, γ, i, ρ and the clique number, plus enumeration of
//! maximal independent sets and maximal packings.
//!
//! All solvers are exponential branch-and-bound searches over bit masks. They
//! are meant for the small graphs this crate studies (tens of vertices).

use alloc::vec::Vec;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// α, γ, i, ρ and ω(G²) of one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub alpha: usize,
    pub gamma: usize,
    pub idom: usize,
    pub rho: usize,
    pub clique2: usize,
}

impl InvariantReport {
    pub fn compute(g: &Graph) -> InvariantReport {
        let sq = g.square();
        InvariantReport {
            alpha: alpha(g),
            gamma: gamma(g),
            idom: idom(g),
            rho: alpha(&sq),
            clique2: clique_number(&sq),
        }
    }

    /// `ρ ≤ γ ≤ i ≤ α`.
    pub fn is_consistent(&self) -> bool {
        self.rho <= self.gamma && self.gamma <= self.idom && self.idom <= self.alpha
    }
}

// ---------------------------------------------------------------------------
// Maximum independent set
// ---------------------------------------------------------------------------

pub fn alpha(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

/// A maximum independent set, found by branching on a maximum-degree vertex
/// and bounding with a greedy clique cover.
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let mut search = MisSearch {
        adj: g.adjacency(),
        best: VertexSet::EMPTY,
    };
    search.run(g.vertices(), VertexSet::EMPTY);
    search.best
}

struct MisSearch<'a> {
    adj: &'a [VertexSet],
    best: VertexSet,
}

impl MisSearch<'_> {
    fn run(&mut self, mut cand: VertexSet, mut chosen: VertexSet) {
        // Vertices of degree <= 1 inside `cand` can always be taken.
        loop {
            let mut took = false;
            for v in cand {
                if !cand.contains(v) {
                    continue;
                }
                if (self.adj[v] & cand).len() <= 1 {
                    chosen.insert(v);
                    cand -= self.adj[v].with(v);
                    took = true;
                }
            }
            if !took {
                break;
            }
        }
        if cand.is_empty() {
            if chosen.len() > self.best.len() {
                self.best = chosen;
            }
            return;
        }
        if chosen.len() + clique_cover_bound(self.adj, cand) <= self.best.len() {
            return;
        }
        let pivot = cand
            .iter()
            .max_by_key(|&v| ((self.adj[v] & cand).len(), usize::MAX - v))
            .expect("cand is nonempty");
        self.run(cand - self.adj[pivot].with(pivot), chosen.with(pivot));
        self.run(cand.without(pivot), chosen);
    }
}

/// Number of cliques in a greedy clique partition of `cand`; an upper bound
/// on the independence number of the induced subgraph.
fn clique_cover_bound(adj: &[VertexSet], cand: VertexSet) -> usize {
    let mut rest = cand;
    let mut cliques = 0;
    while let Some(v) = rest.first() {
        let mut common = adj[v] & rest;
        rest.remove(v);
        while let Some(w) = common.first() {
            rest.remove(w);
            common = common.without(w) & adj[w];
        }
        cliques += 1;
    }
    cliques
}

// ---------------------------------------------------------------------------
// Domination
// ---------------------------------------------------------------------------

pub fn gamma(g: &Graph) -> usize {
    minimum_dominating_set(g).len()
}

/// A minimum dominating set: branch over the closed neighborhood of the
/// undominated vertex with the fewest options.
pub fn minimum_dominating_set(g: &Graph) -> VertexSet {
    let closed: Vec<VertexSet> = (0..g.n()).map(|v| g.closed_neighbors(v)).collect();
    let mut search = DomSearch {
        closed: &closed,
        max_cover: g.max_degree() + 1,
        best: g.vertices(),
        independent: false,
    };
    search.run(VertexSet::EMPTY, g.vertices(), g.vertices());
    search.best
}

pub fn idom(g: &Graph) -> usize {
    minimum_independent_dominating_set(g).len()
}

/// A minimum independent dominating set (a smallest maximal independent set).
///
/// Branches on the least-index undominated vertex `u`, trying each member of
/// `N[u]` that is still undominated, in increasing index order.
pub fn minimum_independent_dominating_set(g: &Graph) -> VertexSet {
    let closed: Vec<VertexSet> = (0..g.n()).map(|v| g.closed_neighbors(v)).collect();
    let mut search = DomSearch {
        closed: &closed,
        max_cover: g.max_degree() + 1,
        best: g.vertices(),
        independent: true,
    };
    // Any maximal independent set is a valid incumbent.
    search.best = greedy_maximal_independent_set(g, g.vertices());
    search.run(VertexSet::EMPTY, g.vertices(), g.vertices());
    search.best
}

struct DomSearch<'a> {
    closed: &'a [VertexSet],
    max_cover: usize,
    best: VertexSet,
    independent: bool,
}

impl DomSearch<'_> {
    /// `undominated`: vertices not yet dominated; `allowed`: vertices that may
    /// still be added.
    fn run(&mut self, chosen: VertexSet, undominated: VertexSet, allowed: VertexSet) {
        if undominated.is_empty() {
            if chosen.len() < self.best.len() {
                self.best = chosen;
            }
            return;
        }
        let lower = chosen.len() + undominated.len().div_ceil(self.max_cover);
        if lower >= self.best.len() {
            return;
        }
        let u = if self.independent {
            undominated.first().expect("nonempty")
        } else {
            undominated
                .iter()
                .min_by_key(|&u| ((self.closed[u] & allowed).len(), u))
                .expect("nonempty")
        };
        let options = self.closed[u] & allowed;
        let mut allowed_here = allowed;
        for w in options {
            let next_allowed = if self.independent {
                allowed - self.closed[w]
            } else {
                allowed_here.without(w)
            };
            self.run(chosen.with(w), undominated - self.closed[w], next_allowed);
            if !self.independent {
                // Later branches need not revisit `w`.
                allowed_here.remove(w);
            }
        }
    }
}

/// Lexicographic greedy maximal independent set of `G[within]`: scan in
/// increasing order and keep every vertex with no kept neighbor.
pub fn greedy_maximal_independent_set(g: &Graph, within: VertexSet) -> VertexSet {
    let mut chosen = VertexSet::EMPTY;
    for v in within {
        if g.neighbors(v).is_disjoint(chosen) {
            chosen.insert(v);
        }
    }
    chosen
}

// ---------------------------------------------------------------------------
// Packing
// ---------------------------------------------------------------------------

/// Packing number, computed as `α(G²)`.
pub fn rho(g: &Graph) -> usize {
    alpha(&g.square())
}

pub fn maximum_packing(g: &Graph) -> VertexSet {
    maximum_independent_set(&g.square())
}

/// Packing number by direct search over sets with pairwise distance at
/// least 3, without forming `G²`. Used to cross-check [`rho`].
pub fn packing_number_direct(g: &Graph) -> usize {
    fn go(g: &Graph, cand: VertexSet, size: usize, best: &mut usize) {
        if size + cand.len() <= *best {
            return;
        }
        let Some(v) = cand.first() else {
            *best = size;
            return;
        };
        let near = g.ball(VertexSet::singleton(v), 2);
        go(g, cand - near, size + 1, best);
        go(g, cand.without(v), size, best);
    }
    let mut best = 0;
    go(g, g.vertices(), 0, &mut best);
    best
}

// ---------------------------------------------------------------------------
// Cliques
// ---------------------------------------------------------------------------

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

pub fn maximum_clique(g: &Graph) -> VertexSet {
    fn go(adj: &[VertexSet], r: VertexSet, mut p: VertexSet, best: &mut VertexSet) {
        if p.is_empty() {
            if r.len() > best.len() {
                *best = r;
            }
            return;
        }
        if r.len() + p.len() <= best.len() {
            return;
        }
        let pivot = p
            .iter()
            .max_by_key(|&u| (adj[u] & p).len())
            .expect("p is nonempty");
        for v in p - adj[pivot] {
            if r.len() + p.len() <= best.len() {
                return;
            }
            go(adj, r.with(v), p & adj[v], best);
            p.remove(v);
        }
    }
    let mut best = VertexSet::EMPTY;
    go(g.adjacency(), VertexSet::EMPTY, g.vertices(), &mut best);
    best
}

/// Calls `visit` once for each maximal clique (Bron–Kerbosch with Tomita
/// pivoting).
pub fn for_each_maximal_clique<F: FnMut(VertexSet)>(g: &Graph, mut visit: F) {
    bron_kerbosch(g.adjacency(), VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut visit);
}

pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for_each_maximal_clique(g, |c| out.push(c));
    out
}

fn bron_kerbosch<F: FnMut(VertexSet)>(
    adj: &[VertexSet],
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    visit: &mut F,
) {
    if p.is_empty() {
        if x.is_empty() {
            visit(r);
        }
        return;
    }
    let pivot = (p | x)
        .iter()
        .max_by_key(|&u| (adj[u] & p).len())
        .expect("p ∪ x is nonempty");
    for v in p - adj[pivot] {
        bron_kerbosch(adj, r.with(v), p & adj[v], x & adj[v], visit);
        p.remove(v);
        x.insert(v);
    }
}

/// Calls `visit` once for every clique (not only maximal ones), each listed
/// once with members added in increasing index order. The empty clique is
/// skipped.
pub fn for_each_clique<F: FnMut(VertexSet)>(g: &Graph, mut visit: F) {
    fn go<F: FnMut(VertexSet)>(adj: &[VertexSet], r: VertexSet, p: VertexSet, visit: &mut F) {
        for v in p {
            let next = r.with(v);
            visit(next);
            // Only extend with larger indices.
            let above = p - VertexSet::full(v + 1);
            go(adj, next, above & adj[v], visit);
        }
    }
    go(g.adjacency(), VertexSet::EMPTY, g.vertices(), &mut visit);
}

// ---------------------------------------------------------------------------
// Maximal independent sets and maximal packings
// ---------------------------------------------------------------------------

/// Calls `visit` once for each maximal independent set: Bron–Kerbosch on
/// the complement graph.
pub fn for_each_maximal_independent_set<F: FnMut(VertexSet)>(g: &Graph, mut visit: F) {
    let universe = g.vertices();
    let co_adj: Vec<VertexSet> = (0..g.n())
        .map(|v| (universe - g.neighbors(v)).without(v))
        .collect();
    bron_kerbosch(&co_adj, VertexSet::EMPTY, universe, VertexSet::EMPTY, &mut visit);
}

/// Every maximal independent set, sorted lexicographically.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for_each_maximal_independent_set(g, |s| out.push(s));
    out.sort_by(|a, b| a.lex_cmp(*b));
    out
}

/// Every maximal packing (maximal independent set of `G²`), sorted
/// lexicographically.
pub fn maximal_packings(g: &Graph) -> Vec<VertexSet> {
    maximal_independent_sets(&g.square())
}

/// `true` iff some pair of vertices has at least three common neighbors.
pub fn has_k23_subgraph(g: &Graph) -> bool {
    (0..g.n()).any(|u| (u + 1..g.n()).any(|v| (g.neighbors(u) & g.neighbors(v)).len() >= 3))
}
