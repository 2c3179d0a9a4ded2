//! Exhaustive generation of small connected graphs, one per isomorphism
//! class.
//!
//! Cubic graphs grow one edge at a time from a single edge. Every state is a
//! connected graph plus isolated vertices. A deficient vertex `x` of the
//! connected part is chosen and joined to every admissible partner (a
//! deficient non-neighbor in the connected part, or one isolated vertex).
//! Any cubic supergraph of a state contains an edge at `x` that is not yet
//! present, so each target graph stays reachable whichever `x` is chosen.
//!
//! General connected graphs grow one vertex at a time: a new vertex is
//! joined to a nonempty set of existing vertices. Every connected graph has a
//! vertex whose removal leaves it connected, so every class is reached.
//!
//! States are deduplicated by canonical form at every level, and results are
//! returned canonically labeled, sorted by canonical form.

use core::fmt;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::canon::{canonical_form_adj, CanonicalForm};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest order accepted by [`enum_connected_cubic`] without a girth bound.
pub const MAX_CUBIC_ORDER: usize = 14;
/// Largest order accepted by [`enum_connected_cubic`] with girth at least 5.
pub const MAX_CUBIC_ORDER_GIRTH5: usize = 16;
/// Largest order accepted by [`enum_connected_subcubic`] and
/// [`enum_connected_graphs`].
pub const MAX_GENERAL_ORDER: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumError {
    OddOrder { n: usize },
    OutOfRange { n: usize, min: usize, max: usize },
}

impl fmt::Display for EnumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumError::OddOrder { n } => write!(f, "cubic graphs need an even order, got {n}"),
            EnumError::OutOfRange { n, min, max } => {
                write!(f, "order {n} outside the supported range {min}..={max}")
            }
        }
    }
}

impl core::error::Error for EnumError {}

/// Connected cubic graphs on `n` vertices, optionally with girth at least
/// `min_girth`.
pub fn enum_connected_cubic(n: usize, min_girth: Option<usize>) -> Result<Vec<Graph>, EnumError> {
    let max = if min_girth.is_some_and(|g| g >= 5) {
        MAX_CUBIC_ORDER_GIRTH5
    } else {
        MAX_CUBIC_ORDER
    };
    if !(4..=max).contains(&n) {
        return Err(EnumError::OutOfRange { n, min: 4, max });
    }
    if n % 2 == 1 {
        return Err(EnumError::OddOrder { n });
    }
    let girth = min_girth.unwrap_or(3).max(3);

    let mut start = vec![VertexSet::EMPTY; n];
    start[0].insert(1);
    start[1].insert(0);
    let mut level: BTreeMap<CanonicalForm, Vec<VertexSet>> = BTreeMap::new();
    level.insert(canonical_form_adj(&start), start);

    for _ in 1..3 * n / 2 {
        let mut next: BTreeMap<CanonicalForm, Vec<VertexSet>> = BTreeMap::new();
        for adj in level.values() {
            extend_cubic(adj, girth, |child| {
                next.entry(canonical_form_adj(&child)).or_insert(child);
            });
        }
        level = next;
    }
    Ok(level.into_values().map(canonical).collect())
}

fn extend_cubic<F: FnMut(Vec<VertexSet>)>(adj: &[VertexSet], girth: usize, mut emit: F) {
    let n = adj.len();
    let mut placed = VertexSet::EMPTY;
    let mut open = VertexSet::EMPTY;
    for (v, nb) in adj.iter().enumerate() {
        if !nb.is_empty() {
            placed.insert(v);
            if nb.len() < 3 {
                open.insert(v);
            }
        }
    }
    let isolated = VertexSet::full(n) - placed;
    if open.is_empty() {
        return;
    }
    // Candidate partners of each open vertex; a vertex that cannot reach its
    // degree kills the state.
    let partners = |v: usize| -> VertexSet {
        let near = ball(adj, v, girth.saturating_sub(2));
        let mut p = (open - near - adj[v]).without(v);
        if let Some(i) = isolated.first() {
            p.insert(i);
        }
        p
    };
    let mut x = usize::MAX;
    for v in open {
        let need = 3 - adj[v].len();
        let avail = partners(v);
        let avail_count = (avail - isolated).len() + isolated.len().min(need);
        if avail_count < need {
            return;
        }
        if x == usize::MAX || adj[v].len() > adj[x].len() {
            x = v;
        }
    }
    for y in partners(x) {
        let mut child = adj.to_vec();
        child[x].insert(y);
        child[y].insert(x);
        emit(child);
    }
}

/// Vertices within distance `r` of `v`.
fn ball(adj: &[VertexSet], v: usize, r: usize) -> VertexSet {
    let mut seen = VertexSet::singleton(v);
    let mut frontier = seen;
    for _ in 0..r {
        let mut next = VertexSet::EMPTY;
        for u in frontier {
            next |= adj[u];
        }
        frontier = next - seen;
        if frontier.is_empty() {
            break;
        }
        seen |= frontier;
    }
    seen
}

/// Connected graphs with maximum degree at most 3 on `n` vertices.
pub fn enum_connected_subcubic(n: usize) -> Result<Vec<Graph>, EnumError> {
    enum_connected_graphs(n, 3)
}

/// Connected graphs on `n` vertices with maximum degree at most
/// `max_degree`.
pub fn enum_connected_graphs(n: usize, max_degree: usize) -> Result<Vec<Graph>, EnumError> {
    if !(1..=MAX_GENERAL_ORDER).contains(&n) {
        return Err(EnumError::OutOfRange {
            n,
            min: 1,
            max: MAX_GENERAL_ORDER,
        });
    }
    let mut level: BTreeMap<CanonicalForm, Vec<VertexSet>> = BTreeMap::new();
    let single = vec![VertexSet::EMPTY];
    level.insert(canonical_form_adj(&single), single);
    for k in 1..n {
        let mut next: BTreeMap<CanonicalForm, Vec<VertexSet>> = BTreeMap::new();
        for adj in level.values() {
            let room: Vec<usize> = (0..k).filter(|&v| adj[v].len() < max_degree).collect();
            for mask in 1u64..1 << room.len() {
                if mask.count_ones() as usize > max_degree {
                    continue;
                }
                let mut child = adj.clone();
                let mut nb = VertexSet::EMPTY;
                for (i, &v) in room.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        child[v].insert(k);
                        nb.insert(v);
                    }
                }
                child.push(nb);
                next.entry(canonical_form_adj(&child)).or_insert(child);
            }
        }
        level = next;
    }
    Ok(level.into_values().map(canonical).collect())
}

fn canonical(adj: Vec<VertexSet>) -> Graph {
    crate::canon::canonical_graph(&Graph::from_valid_adjacency(adj))
}
