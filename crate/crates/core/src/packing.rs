//! Greedy packings and the finite checks behind the lower bound
//! `ρ(G) ≥ (n+1)/8` for cubic graphs of girth 5 on at least 12 vertices.

use core::fmt;

use alloc::vec::Vec;

use crate::graph::{Graph, GraphError};
use crate::invariants;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyTrace {
    /// Chosen vertices, in order.
    pub order: Vec<usize>,
    /// Vertices newly within distance 2 of the packing after each choice.
    pub eliminated_per_step: Vec<usize>,
    pub packing: VertexSet,
}

/// Starts from `{start}` and repeatedly adds the least vertex at distance
/// exactly 3 from the current set until every vertex is within distance 2.
///
/// On a disconnected graph a component that has not been reached yet is
/// entered at its least uncovered vertex.
pub fn greedy_packing(g: &Graph, start: usize) -> Result<GreedyTrace, GraphError> {
    if start >= g.n() {
        return Err(GraphError::VertexOutOfRange {
            vertex: start,
            n: g.n(),
        });
    }
    let mut packing = VertexSet::EMPTY;
    let mut covered = VertexSet::EMPTY;
    let mut order = Vec::new();
    let mut eliminated_per_step = Vec::new();
    let mut next = Some(start);
    while let Some(v) = next {
        packing.insert(v);
        order.push(v);
        let ball = g.ball(VertexSet::singleton(v), 2);
        eliminated_per_step.push((ball - covered).len());
        covered |= ball;
        let rest = g.vertices() - covered;
        next = g.boundary(packing, 3).first().or(rest.first());
    }
    Ok(GreedyTrace {
        order,
        eliminated_per_step,
        packing,
    })
}

/// The graph is not cubic of girth 5 on at least 12 vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HypothesisNotMet {
    pub n: usize,
    pub cubic: bool,
    pub girth: Option<usize>,
}

impl fmt::Display for HypothesisNotMet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "needs a cubic graph of girth 5 with n >= 12 (n = {}, cubic = {}, girth = ",
            self.n, self.cubic
        )?;
        match self.girth {
            Some(g) => write!(f, "{g})"),
            None => f.write_str("none)"),
        }
    }
}

impl core::error::Error for HypothesisNotMet {}

pub fn check_hypotheses(g: &Graph) -> Result<(), HypothesisNotMet> {
    let girth = g.girth();
    let cubic = g.is_cubic();
    if cubic && girth == Some(5) && g.n() >= 12 {
        Ok(())
    } else {
        Err(HypothesisNotMet {
            n: g.n(),
            cubic,
            girth,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Pass,
    Fail(W),
}

impl<W> Verdict<W> {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    fn from_witness(w: Option<W>) -> Self {
        w.map_or(Verdict::Pass, Verdict::Fail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OverlapWitness {
    pub u1: usize,
    pub u2: usize,
    pub overlap: usize,
}

/// `|N_2[u1] ∩ N_2[u2]| ≤ 4` for every pair at distance exactly 3.
pub fn check_n2_overlap(g: &Graph) -> Result<Verdict<OverlapWitness>, HypothesisNotMet> {
    check_hypotheses(g)?;
    let balls: Vec<VertexSet> = (0..g.n()).map(|v| g.ball(VertexSet::singleton(v), 2)).collect();
    let witness = (0..g.n()).find_map(|u1| {
        g.boundary(VertexSet::singleton(u1), 3)
            .iter()
            .filter(|&u2| u2 > u1)
            .map(|u2| OverlapWitness {
                u1,
                u2,
                overlap: (balls[u1] & balls[u2]).len(),
            })
            .find(|w| w.overlap > 4)
    });
    Ok(Verdict::from_witness(witness))
}

/// Every 5-cycle once, as `[a, b, c, d, e]` with `a` the least vertex and
/// `b < e`.
pub fn five_cycles(g: &Graph) -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        let above = g.vertices() - VertexSet::full(a + 1);
        for b in g.neighbors(a) & above {
            for c in g.neighbors(b) & above {
                for d in (g.neighbors(c) & above).without(b) {
                    for e in (g.neighbors(d) & g.neighbors(a) & above) - VertexSet::EMPTY.with(b).with(c) {
                        if b < e {
                            out.push([a, b, c, d, e]);
                        }
                    }
                }
            }
        }
    }
    out
}

fn cycle_edges(c: &[usize; 5]) -> [(usize, usize); 5] {
    core::array::from_fn(|i| {
        let (u, v) = (c[i], c[(i + 1) % 5]);
        (u.min(v), u.max(v))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct C5Witness {
    pub first: [usize; 5],
    pub second: [usize; 5],
    pub shared_edges: usize,
}

/// Two distinct 5-cycles share at most one edge.
pub fn check_c5_sharing(g: &Graph) -> Result<Verdict<C5Witness>, HypothesisNotMet> {
    check_hypotheses(g)?;
    Ok(Verdict::from_witness(c5_sharing_violation(g)))
}

/// The pairwise comparison behind [`check_c5_sharing`], without hypotheses.
pub fn c5_sharing_violation(g: &Graph) -> Option<C5Witness> {
    let cycles = five_cycles(g);
    let edges: Vec<[(usize, usize); 5]> = cycles.iter().map(cycle_edges).collect();
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            let shared = edges[i].iter().filter(|e| edges[j].contains(e)).count();
            if shared > 1 {
                return Some(C5Witness {
                    first: cycles[i],
                    second: cycles[j],
                    shared_edges: shared,
                });
            }
        }
    }
    None
}

/// `ω(G²) ≤ 5`; a failure carries a maximum clique of `G²`.
pub fn check_square_clique(g: &Graph) -> Result<Verdict<VertexSet>, HypothesisNotMet> {
    check_hypotheses(g)?;
    let clique = invariants::maximum_clique(&g.square());
    Ok(if clique.len() <= 5 {
        Verdict::Pass
    } else {
        Verdict::Fail(clique)
    })
}

/// `ω(G²)` with no hypotheses.
pub fn square_clique_number(g: &Graph) -> usize {
    invariants::clique_number(&g.square())
}

/// Checks that every clique `X` of `gsq` has a vertex `x` with
/// `deg(x) < p - |X|`. Returns `⌈2n/p⌉`, the implied lower bound on
/// `α(gsq)`, or a clique violating the condition.
///
/// Every clique is examined, not only the maximal ones: the condition on a
/// clique does not follow from the condition on a clique containing it.
///
/// # Panics
///
/// If `p == 0`.
pub fn check_henning_condition(gsq: &Graph, p: usize) -> Result<usize, VertexSet> {
    assert!(p >= 1, "p must be positive");
    let mut bad = None;
    invariants::for_each_clique(gsq, |x| {
        if bad.is_none() && !x.iter().any(|v| gsq.degree(v) + x.len() < p) {
            bad = Some(x);
        }
    });
    match bad {
        Some(x) => Err(x),
        None => Ok((2 * gsq.n()).div_ceil(p)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem3Report {
    pub n: usize,
    pub girth: usize,
    pub rho: usize,
    /// `⌈(n+1)/8⌉`.
    pub bound_n_plus_1_over_8: usize,
    /// `⌈2n/15⌉`.
    pub bound_2n_over_15: usize,
    pub claim12: Verdict<OverlapWitness>,
    pub claim13: Verdict<C5Witness>,
    pub claim15: Verdict<VertexSet>,
    /// The clique condition on `G²` with `p = 15`.
    pub lemma11: Verdict<VertexSet>,
}

impl Theorem3Report {
    pub fn passed(&self) -> bool {
        self.rho >= self.bound_n_plus_1_over_8
            && self.rho >= self.bound_2n_over_15
            && self.claim12.passed()
            && self.claim13.passed()
            && self.claim15.passed()
            && self.lemma11.passed()
    }
}

pub fn theorem3_check(g: &Graph) -> Result<Theorem3Report, HypothesisNotMet> {
    check_hypotheses(g)?;
    let n = g.n();
    let gsq = g.square();
    Ok(Theorem3Report {
        n,
        girth: 5,
        rho: invariants::alpha(&gsq),
        bound_n_plus_1_over_8: (n + 1).div_ceil(8),
        bound_2n_over_15: (2 * n).div_ceil(15),
        claim12: check_n2_overlap(g)?,
        claim13: check_c5_sharing(g)?,
        claim15: check_square_clique(g)?,
        lemma11: check_henning_condition(&gsq, 15).map_or_else(Verdict::Fail, |_| Verdict::Pass),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, Named};

    #[test]
    fn greedy_examples() {
        let p = Named::Petersen.graph();
        for v in 0..10 {
            let t = greedy_packing(&p, v).unwrap();
            assert_eq!(t.order, [v]);
            assert_eq!(t.eliminated_per_step, [10]);
        }
        let t = greedy_packing(&catalog::path(4), 0).unwrap();
        assert_eq!(t.packing.to_vec(), [0, 3]);
        assert_eq!(t.eliminated_per_step, [3, 1]);
        assert!(greedy_packing(&p, 10).is_err());
    }

    #[test]
    fn greedy_is_maximal_packing() {
        for h in Named::ALL {
            let g = h.graph();
            for v in 0..g.n() {
                let t = greedy_packing(&g, v).unwrap();
                assert!(g.is_packing(t.packing));
                assert_eq!(g.ball(t.packing, 2), g.vertices());
                assert_eq!(t.eliminated_per_step.iter().sum::<usize>(), g.n());
            }
        }
        let g = Graph::new(5, [(0, 1), (3, 4)]).unwrap();
        let t = greedy_packing(&g, 0).unwrap();
        assert_eq!(t.order, [0, 2, 3]);
    }

    #[test]
    fn hypotheses() {
        assert_eq!(
            check_n2_overlap(&Named::Petersen.graph()),
            Err(HypothesisNotMet {
                n: 10,
                cubic: true,
                girth: Some(5)
            })
        );
        assert!(check_c5_sharing(&Named::Heawood.graph()).is_err());
        assert!(theorem3_check(&Named::Petersen.graph()).is_err());
    }

    #[test]
    fn five_cycle_enumeration() {
        assert_eq!(five_cycles(&catalog::cycle(5)), [[0, 1, 2, 3, 4]]);
        assert_eq!(five_cycles(&Named::Petersen.graph()).len(), 12);
        assert_eq!(five_cycles(&catalog::complete(5)).len(), 12);
        assert!(five_cycles(&Named::Heawood.graph()).is_empty());
        assert_eq!(five_cycles(&Named::C5xK2.graph()).len(), 2);
        // Petersen's 5-cycles share paths of length 2.
        let w = c5_sharing_violation(&Named::Petersen.graph()).unwrap();
        assert!(w.shared_edges >= 2);
        assert_eq!(c5_sharing_violation(&Named::Heawood.graph()), None);
    }

    #[test]
    fn square_cliques() {
        assert_eq!(square_clique_number(&catalog::cycle(12)), 3);
        assert_eq!(square_clique_number(&Named::Petersen.graph()), 10);
    }

    #[test]
    fn henning_condition_examples() {
        assert_eq!(check_henning_condition(&Graph::empty(7).unwrap(), 2), Ok(7));
        let k6 = catalog::complete(6);
        assert_eq!(check_henning_condition(&k6, 6).unwrap_err().len(), 1);
        // K3 with a pendant path: every single vertex is fine for p = 4 but
        // the triangle {0,1,2} has degrees 2, 2, 3 and 2 + 3 is not < 4.
        let g = Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert!(check_henning_condition(&g, 4).is_err());
        assert_eq!(check_henning_condition(&g, 6), Ok(2));
    }

    #[test]
    fn henning_condition_needs_non_maximal_cliques() {
        // Triangle 0-1-2 where 1 and 2 each carry two leaves. With p = 6
        // every maximal clique passes, but the edge {1, 2} does not.
        let g = Graph::new(7, [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        let mut maximal_ok = true;
        invariants::for_each_maximal_clique(&g, |x| {
            maximal_ok &= x.iter().any(|v| g.degree(v) + x.len() < 6);
        });
        assert!(maximal_ok);
        assert_eq!(check_henning_condition(&g, 6), Err([1, 2].into_iter().collect()));
    }
}
