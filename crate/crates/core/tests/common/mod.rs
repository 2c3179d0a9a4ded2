#![allow(dead_code)]

use proptest::prelude::*;
use subcubic_core::{Graph, VertexSet};

// ---------------------------------------------------------------------------
// Exhaustive subset oracles
// ---------------------------------------------------------------------------

fn adj_matrix(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

fn independent(m: &[Vec<bool>], s: u64) -> bool {
    let n = m.len();
    (0..n).all(|u| s >> u & 1 == 0 || (u + 1..n).all(|v| s >> v & 1 == 0 || !m[u][v]))
}

fn dominating(m: &[Vec<bool>], s: u64) -> bool {
    let n = m.len();
    (0..n).all(|v| s >> v & 1 == 1 || (0..n).any(|u| s >> u & 1 == 1 && m[u][v]))
}

/// All-pairs distances by Floyd–Warshall.
pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

fn packing(d: &[Vec<usize>], s: u64) -> bool {
    let n = d.len();
    (0..n).all(|u| s >> u & 1 == 0 || (u + 1..n).all(|v| s >> v & 1 == 0 || d[u][v] >= 3))
}

#[derive(Debug, PartialEq, Eq)]
pub struct Brute {
    pub alpha: usize,
    pub gamma: usize,
    pub idom: usize,
    pub rho: usize,
}

pub fn brute_invariants(g: &Graph) -> Brute {
    let n = g.n();
    let m = adj_matrix(g);
    let d = distances(g);
    let mut b = Brute {
        alpha: 0,
        gamma: usize::MAX,
        idom: usize::MAX,
        rho: 0,
    };
    for s in 0u64..1 << n {
        let k = s.count_ones() as usize;
        let ind = independent(&m, s);
        let dom = dominating(&m, s);
        if ind {
            b.alpha = b.alpha.max(k);
        }
        if dom {
            b.gamma = b.gamma.min(k);
        }
        if ind && dom {
            b.idom = b.idom.min(k);
        }
        if packing(&d, s) {
            b.rho = b.rho.max(k);
        }
    }
    b
}

pub fn brute_maximal_packings(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let d = distances(g);
    let mut out: Vec<u64> = (0u64..1 << n)
        .filter(|&s| s != 0 && packing(&d, s))
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || !packing(&d, s | 1 << v)))
        .collect();
    out.sort_unstable();
    out
}

// ---------------------------------------------------------------------------
// Isomorphism by plain backtracking
// ---------------------------------------------------------------------------

pub fn iso_backtrack(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    if n != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    fn go(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let u = map.len();
        if u == a.n() {
            return true;
        }
        for t in 0..b.n() {
            if used[t] || a.degree(u) != b.degree(t) {
                continue;
            }
            if (0..u).all(|w| a.has_edge(u, w) == b.has_edge(t, map[w])) {
                used[t] = true;
                map.push(t);
                if go(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[t] = false;
            }
        }
        false
    }
    go(a, b, &mut Vec::new(), &mut vec![false; n])
}

/// Keeps one graph per isomorphism class.
pub fn dedup_by_backtracking(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut reps: Vec<Graph> = Vec::new();
    for g in graphs {
        if !reps.iter().any(|r| iso_backtrack(r, &g)) {
            reps.push(g);
        }
    }
    reps
}

/// Every labeled graph on `n` vertices with degrees in `lo..=hi`: each
/// vertex in turn picks its neighbors of larger index.
pub fn labeled_graphs(n: usize, lo: usize, hi: usize, mut visit: impl FnMut(&Graph)) {
    fn go(
        v: usize,
        n: usize,
        lo: usize,
        hi: usize,
        adj: &mut Vec<u64>,
        visit: &mut dyn FnMut(&Graph),
    ) {
        if v == n {
            let g = Graph::from_adjacency(adj.iter().map(|&b| VertexSet::from_bits(b)).collect()).unwrap();
            visit(&g);
            return;
        }
        let have = adj[v].count_ones() as usize;
        if have > hi {
            return;
        }
        let later: Vec<usize> = (v + 1..n).filter(|&u| (adj[u].count_ones() as usize) < hi).collect();
        for mask in 0u64..1 << later.len() {
            let k = mask.count_ones() as usize;
            if have + k > hi || have + k < lo {
                continue;
            }
            for (i, &u) in later.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    adj[v] |= 1 << u;
                    adj[u] |= 1 << v;
                }
            }
            go(v + 1, n, lo, hi, adj, visit);
            for (i, &u) in later.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    adj[v] &= !(1 << u);
                    adj[u] &= !(1 << v);
                }
            }
        }
    }
    go(0, n, lo, hi, &mut vec![0; n], &mut visit);
}

// ---------------------------------------------------------------------------
// Strategies
// ---------------------------------------------------------------------------

/// Any graph on `1..=max_n` vertices.
pub fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, all.zip(bits).filter(|&(_, b)| b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Connected graph with maximum degree 3 on `1..=max_n` vertices: a random
/// tree plus random extra edges.
pub fn connected_subcubic(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        (
            Just(n),
            proptest::collection::vec(any::<u32>(), n),
            proptest::collection::vec((0..n, 0..n), 0..=2 * n),
        )
            .prop_map(|(n, parents, extra)| {
                let mut deg = vec![0usize; n];
                let mut edges: Vec<(usize, usize)> = Vec::new();
                for v in 1..n {
                    let open: Vec<usize> = (0..v).filter(|&u| deg[u] < 3).collect();
                    let u = open[parents[v] as usize % open.len()];
                    edges.push((u, v));
                    deg[u] += 1;
                    deg[v] += 1;
                }
                for (u, v) in extra {
                    let (u, v) = (u.min(v), u.max(v));
                    if u != v && deg[u] < 3 && deg[v] < 3 && !edges.contains(&(u, v)) {
                        edges.push((u, v));
                        deg[u] += 1;
                        deg[v] += 1;
                    }
                }
                Graph::new(n, edges).unwrap()
            })
    })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}
