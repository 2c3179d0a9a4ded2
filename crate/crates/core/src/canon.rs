//! Canonical labeling and isomorphism testing.
//!
//! Ordered-partition refinement by neighbor counts, then a backtracking search
//! that individualizes each vertex of the first non-singleton cell. The
//! canonical labeling is the leaf whose relabeled adjacency rows are
//! lexicographically least. Automorphisms found at equal leaves prune
//! children that lie in one orbit of the prefix stabilizer.

use core::cmp::Ordering;

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Identifies an isomorphism class: the vertex count followed by the upper
/// triangle of the adjacency matrix under the canonical labeling, packed
/// eight bits per byte.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub cert: Vec<u8>,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_form_adj(g.adjacency())
}

/// `lab[k]` is the vertex placed at position `k` by the canonical labeling.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    Search::run(g.adjacency())
}

/// `g` relabeled canonically; isomorphic graphs give equal results.
pub fn canonical_graph(g: &Graph) -> Graph {
    let lab = canonical_labeling(g);
    let mut perm = vec![0; g.n()];
    for (k, &v) in lab.iter().enumerate() {
        perm[v] = k;
    }
    g.relabel(&perm)
}

/// Cheap invariant screen (order, degree multiset, girth), then certificate
/// comparison.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let degrees = |g: &Graph| {
        let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(g1) != degrees(g2) || g1.girth() != g2.girth() {
        return false;
    }
    canonical_form(g1) == canonical_form(g2)
}

pub(crate) fn canonical_form_adj(adj: &[VertexSet]) -> CanonicalForm {
    let lab = Search::run(adj);
    CanonicalForm {
        cert: encode(adj, &lab),
    }
}

fn encode(adj: &[VertexSet], lab: &[usize]) -> Vec<u8> {
    let n = lab.len();
    let mut cert = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(8));
    cert.push(n as u8);
    let mut byte = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            byte = byte << 1 | u8::from(adj[lab[i]].contains(lab[j]));
            k += 1;
            if k == 8 {
                cert.push(byte);
                byte = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        cert.push(byte << (8 - k));
    }
    cert
}

type Partition = Vec<VertexSet>;

/// Splits every cell by the number of neighbors in each cell until stable.
/// Parts of a split cell are ordered by increasing count.
fn refine(adj: &[VertexSet], cells: &mut Partition) {
    let mut scratch: Vec<(usize, usize)> = Vec::new();
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < cells.len() {
            let splitter = cells[w];
            let mut i = 0;
            while i < cells.len() {
                let c = cells[i];
                if c.len() == 1 {
                    i += 1;
                    continue;
                }
                scratch.clear();
                scratch.extend(c.iter().map(|v| ((adj[v] & splitter).len(), v)));
                let first = scratch[0].0;
                if scratch.iter().all(|&(k, _)| k == first) {
                    i += 1;
                    continue;
                }
                scratch.sort_unstable();
                let mut parts: Vec<VertexSet> = Vec::new();
                let mut last = usize::MAX;
                for &(k, v) in &scratch {
                    if k != last {
                        parts.push(VertexSet::EMPTY);
                        last = k;
                    }
                    parts.last_mut().expect("pushed above").insert(v);
                }
                let added = parts.len();
                cells.splice(i..=i, parts);
                i += added;
                changed = true;
            }
            w += 1;
        }
        if !changed {
            return;
        }
    }
}

struct Search<'a> {
    adj: &'a [VertexSet],
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

const MAX_STORED_AUTOMORPHISMS: usize = 256;

impl<'a> Search<'a> {
    fn run(adj: &'a [VertexSet]) -> Vec<usize> {
        let n = adj.len();
        if n == 0 {
            return Vec::new();
        }
        let mut s = Search {
            adj,
            best: None,
            automorphisms: Vec::new(),
        };
        let mut cells = vec![VertexSet::full(n)];
        refine(adj, &mut cells);
        s.descend(cells, &mut Vec::new());
        s.best.expect("search reaches at least one leaf").1
    }

    fn rows(&self, lab: &[usize]) -> Vec<u64> {
        lab.iter()
            .map(|&v| {
                lab.iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, &u)| acc | u64::from(self.adj[v].contains(u)) << j)
            })
            .collect()
    }

    fn leaf(&mut self, lab: Vec<usize>) {
        let rows = self.rows(&lab);
        match &self.best {
            None => self.best = Some((rows, lab)),
            Some((best_rows, best_lab)) => match rows.cmp(best_rows) {
                Ordering::Less => self.best = Some((rows, lab)),
                Ordering::Equal => {
                    if self.automorphisms.len() < MAX_STORED_AUTOMORPHISMS {
                        let mut gamma = vec![0; lab.len()];
                        for (k, &v) in lab.iter().enumerate() {
                            gamma[v] = best_lab[k];
                        }
                        self.automorphisms.push(gamma);
                    }
                }
                Ordering::Greater => {}
            },
        }
    }

    fn descend(&mut self, cells: Partition, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let lab = cells.iter().map(|c| c.first().expect("cells are nonempty")).collect();
            self.leaf(lab);
            return;
        };
        let cell = cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for v in cell {
            if !tried.is_empty() && self.equivalent_to_tried(prefix, &tried, v) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(VertexSet::singleton(v));
            next.push(cell.without(v));
            next.extend_from_slice(&cells[target + 1..]);
            refine(self.adj, &mut next);
            prefix.push(v);
            self.descend(next, prefix);
            prefix.pop();
        }
    }

    /// `true` if `v` shares an orbit with a tried vertex under the group
    /// generated by the stored automorphisms that fix `prefix` pointwise.
    fn equivalent_to_tried(&self, prefix: &[usize], tried: &[usize], v: usize) -> bool {
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().all(|&p| gamma[p] == p) {
                any = true;
                for x in 0..n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x]));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == root)
    }
}
