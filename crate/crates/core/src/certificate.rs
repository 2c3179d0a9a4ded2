//! Independent dominating sets of size at most `3|S|` built from a maximal
//! packing `S` of a subcubic graph, with machine-checkable witnesses.
//!
//! The pipeline is [`decompose`] → [`select_a`] → [`build_certificate`]:
//!
//! * `N = N(S)`, `R = V \ N[S]`, `H = G[N]` (maximum degree at most 2, so a
//!   disjoint union of isolated vertices, paths and cycles), `M` the
//!   single-edge components of `H` and `W` their endpoints.
//! * `A ⊆ N` is a maximal independent set of `H` containing both ends of every
//!   `H`-path on at least three vertices, chosen to minimise `|X(A)|`, then
//!   the number of undominated degree-3 packing vertices, then
//!   lexicographically.
//! * `Â = A ∪ S^A ∪ Z`, where `S^A` are the packing vertices with no neighbor
//!   in `A` and `Z` is a greedy maximal independent set of the part `T` of `R`
//!   left undominated by `A`.
//! * `f` maps `Â` injectively into `N ∪ S^A_1 ∪ S^A_2`; it fixes
//!   `A ∪ S^A_1 ∪ S^A_2` and sends each vertex of `S^A_3 ∪ Z` to a neighbor
//!   in `N`. The neighbor images are assigned by bipartite matching.
//!
//! Since `|N| = |S_1| + 2|S_2| + 3|S_3|`, injectivity of `f` gives
//! `|Â| ≤ 3|S|`.

use core::cmp::Ordering;
use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::invariants::{self, greedy_maximal_independent_set};
use crate::vertex_set::VertexSet;

// ---------------------------------------------------------------------------
// Decomposition
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    Isolated,
    Path,
    Cycle,
}

/// A component of `H`. Paths are listed from the smaller-index endpoint;
/// cycles start at their smallest vertex and continue toward its smaller
/// neighbor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HComponent {
    pub kind: ComponentKind,
    pub vertices: Vec<usize>,
}

impl HComponent {
    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// Both endpoints, for paths on at least three vertices.
    pub fn forced_endpoints(&self) -> Option<(usize, usize)> {
        match self.kind {
            ComponentKind::Path if self.vertices.len() >= 3 => {
                Some((self.vertices[0], *self.vertices.last().expect("nonempty")))
            }
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// The maximal packing `S`.
    pub packing: VertexSet,
    /// `N = N(S)`.
    pub n_set: VertexSet,
    /// `R = V \ N[S]`.
    pub r_set: VertexSet,
    /// `H = G[N]`, with `h_map[i]` the vertex of `G` behind vertex `i` of `H`.
    pub h: Graph,
    pub h_map: Vec<usize>,
    /// Edges of the single-edge components of `H`, in `G`'s labels.
    pub matching: Vec<(usize, usize)>,
    /// Endpoints of `matching`.
    pub w_set: VertexSet,
    pub components: Vec<HComponent>,
    /// `S_1, S_2, S_3`: packing vertices of degree 1, 2, 3.
    pub s_parts: [VertexSet; 3],
}

impl Decomposition {
    /// `d_H(v)` for `v ∈ N`.
    pub fn h_degree(&self, g: &Graph, v: usize) -> usize {
        (g.neighbors(v) & self.n_set).len()
    }

    /// Every `H`-edge in `G`'s labels, `(u, v)` with `u < v`.
    pub fn h_edges(&self) -> Vec<(usize, usize)> {
        self.h
            .edges()
            .map(|(a, b)| (self.h_map[a], self.h_map[b]))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecomposeError {
    NotSubcubic { vertex: usize, degree: usize },
    EmptyPacking,
    VertexOutOfRange { vertex: usize },
    NotPacking { u: usize, v: usize },
    NotMaximal { vertex: usize },
    IsolatedPackingVertex { vertex: usize },
}

impl fmt::Display for DecomposeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecomposeError::NotSubcubic { vertex, degree } => {
                write!(f, "graph is not subcubic: vertex {vertex} has degree {degree}")
            }
            DecomposeError::EmptyPacking => f.write_str("packing is empty"),
            DecomposeError::VertexOutOfRange { vertex } => {
                write!(f, "packing vertex {vertex} is out of range")
            }
            DecomposeError::NotPacking { u, v } => {
                write!(f, "not a packing: {u} and {v} are at distance at most 2")
            }
            DecomposeError::NotMaximal { vertex } => {
                write!(f, "packing is not maximal: vertex {vertex} can be added")
            }
            DecomposeError::IsolatedPackingVertex { vertex } => {
                write!(f, "packing vertex {vertex} is isolated")
            }
        }
    }
}

impl core::error::Error for DecomposeError {}

pub fn decompose(g: &Graph, s: VertexSet) -> Result<Decomposition, DecomposeError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) > 3) {
        return Err(DecomposeError::NotSubcubic {
            vertex: v,
            degree: g.degree(v),
        });
    }
    if s.is_empty() {
        return Err(DecomposeError::EmptyPacking);
    }
    if let Some(v) = (s - g.vertices()).first() {
        return Err(DecomposeError::VertexOutOfRange { vertex: v });
    }
    if let Some((u, v)) = g.packing_conflict(s) {
        return Err(DecomposeError::NotPacking { u, v });
    }
    if let Some(v) = (g.vertices() - g.ball(s, 2)).first() {
        return Err(DecomposeError::NotMaximal { vertex: v });
    }
    if let Some(v) = s.iter().find(|&v| g.degree(v) == 0) {
        return Err(DecomposeError::IsolatedPackingVertex { vertex: v });
    }

    let n_set = g.open_neighborhood(s);
    let r_set = g.vertices() - n_set - s;
    let (h, h_map) = g.induced(n_set);
    let components = h_components(g, n_set);
    let mut matching = Vec::new();
    let mut w_set = VertexSet::EMPTY;
    for c in &components {
        if c.kind == ComponentKind::Path && c.vertices.len() == 2 {
            let (a, b) = (c.vertices[0], c.vertices[1]);
            matching.push((a.min(b), a.max(b)));
            w_set = w_set.with(a).with(b);
        }
    }
    let mut s_parts = [VertexSet::EMPTY; 3];
    for v in s {
        s_parts[g.degree(v) - 1].insert(v);
    }
    debug_assert_eq!(
        n_set.len(),
        s_parts[0].len() + 2 * s_parts[1].len() + 3 * s_parts[2].len()
    );
    Ok(Decomposition {
        packing: s,
        n_set,
        r_set,
        h,
        h_map,
        matching,
        w_set,
        components,
        s_parts,
    })
}

fn h_components(g: &Graph, n_set: VertexSet) -> Vec<HComponent> {
    let nbrs = |v: usize| g.neighbors(v) & n_set;
    let mut out = Vec::new();
    let mut unseen = n_set;
    while let Some(start) = unseen.first() {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= nbrs(v);
            }
            frontier = next - comp;
            comp |= next;
        }
        unseen -= comp;

        let (kind, first) = if comp.len() == 1 {
            (ComponentKind::Isolated, start)
        } else if comp.iter().all(|v| nbrs(v).len() == 2) {
            (ComponentKind::Cycle, start)
        } else {
            let end = comp
                .iter()
                .find(|&v| nbrs(v).len() == 1)
                .expect("a component with max degree 2 that is not a cycle has an endpoint");
            (ComponentKind::Path, end)
        };
        let mut vertices = vec![first];
        let mut visited = VertexSet::singleton(first);
        let mut cur = first;
        while vertices.len() < comp.len() {
            let next = (nbrs(cur) - visited)
                .first()
                .expect("walk continues until the component is exhausted");
            vertices.push(next);
            visited.insert(next);
            cur = next;
        }
        out.push(HComponent { kind, vertices });
    }
    out
}

// ---------------------------------------------------------------------------
// Choosing A
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ASelection {
    pub a_set: VertexSet,
    /// `X(A)`: degree-3 packing vertices whose neighbors all lie in `W \ A`.
    pub x_of_a: VertexSet,
    /// `S_1, S_2, S_3`.
    pub s_parts: [VertexSet; 3],
    /// `S^A_1, S^A_2, S^A_3`: packing vertices with no neighbor in `A`.
    pub sa_parts: [VertexSet; 3],
    /// `(|X(A)|, |S^A_3|)`, minimised lexicographically.
    pub objective: (usize, usize),
}

impl ASelection {
    pub fn sa(&self) -> VertexSet {
        self.sa_parts[0] | self.sa_parts[1] | self.sa_parts[2]
    }
}

/// `X(B)` for any `B ⊆ N`.
pub fn x_of(g: &Graph, d: &Decomposition, b: VertexSet) -> VertexSet {
    let allowed = d.w_set - b;
    d.s_parts[2]
        .iter()
        .filter(|&s| g.neighbors(s).is_subset(allowed))
        .collect()
}

/// `true` iff `b` is a maximal independent set of `H` containing both ends of
/// every `H`-path on at least three vertices.
pub fn is_admissible(g: &Graph, d: &Decomposition, b: VertexSet) -> bool {
    if !b.is_subset(d.n_set) || !g.is_independent(b) {
        return false;
    }
    if !d
        .n_set
        .iter()
        .all(|v| b.contains(v) || !(g.neighbors(v) & b).is_empty())
    {
        return false;
    }
    d.components
        .iter()
        .filter_map(HComponent::forced_endpoints)
        .all(|(x, y)| b.contains(x) && b.contains(y))
}

fn selection_for(g: &Graph, d: &Decomposition, a_set: VertexSet) -> ASelection {
    let mut sa_parts = [VertexSet::EMPTY; 3];
    for (k, part) in d.s_parts.iter().enumerate() {
        sa_parts[k] = part.iter().filter(|&s| g.neighbors(s).is_disjoint(a_set)).collect();
    }
    let x_of_a = x_of(g, d, a_set);
    ASelection {
        a_set,
        x_of_a,
        s_parts: d.s_parts,
        sa_parts,
        objective: (x_of_a.len(), sa_parts[2].len()),
    }
}

/// Admissible restrictions of `A` to one component of `H`.
fn component_options(g: &Graph, c: &HComponent) -> Vec<VertexSet> {
    let (sub, map) = g.induced(c.vertex_set());
    let forced = c.forced_endpoints();
    invariants::maximal_independent_sets(&sub)
        .into_iter()
        .map(|local| local.iter().map(|i| map[i]).collect::<VertexSet>())
        .filter(|b| forced.is_none_or(|(x, y)| b.contains(x) && b.contains(y)))
        .collect()
}

/// Chooses `A` exhaustively over the product of per-component options, with
/// branch-and-bound on the objective. Ties go to the lexicographically
/// smallest `A`.
pub fn select_a(g: &Graph, d: &Decomposition) -> ASelection {
    let options: Vec<Vec<VertexSet>> = d.components.iter().map(|c| component_options(g, c)).collect();
    // Packing vertices of degree 3 become fully decided once every component
    // touching their neighborhood has been assigned.
    let comp_sets: Vec<VertexSet> = d.components.iter().map(HComponent::vertex_set).collect();
    let mut search = SelectSearch {
        g,
        d,
        options: &options,
        comp_sets: &comp_sets,
        best: None,
    };
    search.run(0, VertexSet::EMPTY, VertexSet::EMPTY);
    let a_set = search.best.expect("every component has at least one admissible option").1;
    selection_for(g, d, a_set)
}

struct SelectSearch<'a> {
    g: &'a Graph,
    d: &'a Decomposition,
    options: &'a [Vec<VertexSet>],
    comp_sets: &'a [VertexSet],
    best: Option<((usize, usize), VertexSet)>,
}

impl SelectSearch<'_> {
    /// Objective counted over the degree-3 packing vertices whose whole
    /// neighborhood lies in `assigned`; a lower bound for any completion.
    fn decided_objective(&self, a: VertexSet, assigned: VertexSet) -> (usize, usize) {
        let allowed = self.d.w_set - a;
        let mut x = 0;
        let mut sa3 = 0;
        for s in self.d.s_parts[2] {
            let nb = self.g.neighbors(s);
            if nb.is_subset(assigned) {
                if nb.is_subset(allowed) {
                    x += 1;
                }
                if nb.is_disjoint(a) {
                    sa3 += 1;
                }
            }
        }
        (x, sa3)
    }

    fn run(&mut self, idx: usize, a: VertexSet, assigned: VertexSet) {
        let bound = self.decided_objective(a, assigned);
        if let Some((best_obj, _)) = self.best {
            if bound > best_obj {
                return;
            }
        }
        if idx == self.options.len() {
            let better = match self.best {
                None => true,
                Some((obj, best_a)) => match bound.cmp(&obj) {
                    Ordering::Less => true,
                    Ordering::Equal => a.lex_cmp(best_a) == Ordering::Less,
                    Ordering::Greater => false,
                },
            };
            if better {
                self.best = Some((bound, a));
            }
            return;
        }
        for &b in &self.options[idx] {
            self.run(idx + 1, a | b, assigned | self.comp_sets[idx]);
        }
    }
}

// ---------------------------------------------------------------------------
// Certificate
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub packing: VertexSet,
    pub n_set: VertexSet,
    pub r_set: VertexSet,
    pub a_set: VertexSet,
    pub sa_parts: [VertexSet; 3],
    /// `T`: vertices of `R` not dominated by `A`.
    pub t_set: VertexSet,
    /// `Z`: lexicographic greedy maximal independent set of `G[T]`.
    pub z_set: VertexSet,
    /// `Â = A ∪ S^A ∪ Z`.
    pub ahat: VertexSet,
    /// `f` as `(v, f(v))` pairs sorted by `v`.
    pub f_map: Vec<(usize, usize)>,
    /// `Z* = f(Z)`.
    pub z_star: VertexSet,
    /// `Z̄ = R \ Z`.
    pub z_bar: VertexSet,
    /// Set when picking each neighbor image greedily (smallest free
    /// admissible neighbor, in vertex order) would not have produced an
    /// injective map.
    pub greedy_images_fail: bool,
}

impl Certificate {
    pub fn sa(&self) -> VertexSet {
        self.sa_parts[0] | self.sa_parts[1] | self.sa_parts[2]
    }

    pub fn bound_3s(&self) -> usize {
        3 * self.packing.len()
    }

    pub fn image(&self, v: usize) -> Option<usize> {
        self.f_map
            .binary_search_by_key(&v, |&(x, _)| x)
            .ok()
            .map(|i| self.f_map[i].1)
    }

    /// Checks every claimed property: `Â` is independent and dominating,
    /// `|Â| ≤ 3|S|`, and `f` satisfies [`verify_property1`].
    pub fn validate(&self, g: &Graph) -> Result<(), CertificateViolation> {
        if let Some((u, v)) = g.edges().find(|&(u, v)| self.ahat.contains(u) && self.ahat.contains(v)) {
            return Err(CertificateViolation::NotIndependent { u, v });
        }
        if let Some(v) = (g.vertices() - g.closed_neighborhood(self.ahat)).first() {
            return Err(CertificateViolation::NotDominating { vertex: v });
        }
        if self.ahat.len() > self.bound_3s() {
            return Err(CertificateViolation::TooLarge {
                size: self.ahat.len(),
                bound: self.bound_3s(),
            });
        }
        verify_property1(g, self).map_err(CertificateViolation::Map)
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.validate(g).is_ok()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ImageRole {
    /// A degree-3 packing vertex left undominated by `A`.
    UndominatedDegree3,
    /// A member of `Z`.
    Z,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateError {
    /// A vertex of `S^A_3 ∪ Z` has no admissible image at all.
    NoAdmissibleImage { vertex: usize, role: ImageRole },
    /// No injective assignment of images exists; `vertex` stayed unmatched.
    MatchingFailure { vertex: usize },
}

impl fmt::Display for CertificateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateError::NoAdmissibleImage { vertex, role } => {
                write!(f, "vertex {vertex} ({role:?}) has no admissible image under f")
            }
            CertificateError::MatchingFailure { vertex } => {
                write!(f, "no injective f exists: vertex {vertex} cannot be matched")
            }
        }
    }
}

impl core::error::Error for CertificateError {}

pub fn build_certificate(
    g: &Graph,
    d: &Decomposition,
    sel: &ASelection,
) -> Result<Certificate, CertificateError> {
    let a = sel.a_set;
    let t_set = d.r_set - g.open_neighborhood(a);
    let z_set = greedy_maximal_independent_set(g, t_set);
    let sa = sel.sa();
    let ahat = a | sa | z_set;

    // Vertices that need a neighbor image, with their admissible images.
    let mut left: Vec<(usize, VertexSet)> = Vec::new();
    for v in sel.sa_parts[2] | z_set {
        let role = if z_set.contains(v) {
            ImageRole::Z
        } else {
            ImageRole::UndominatedDegree3
        };
        let candidates: VertexSet = match role {
            ImageRole::Z => g.neighbors(v) & d.n_set,
            ImageRole::UndominatedDegree3 => g
                .neighbors(v)
                .iter()
                .filter(|&u| (g.neighbors(u) & d.n_set).len() >= 2)
                .collect(),
        } - a;
        if candidates.is_empty() {
            return Err(CertificateError::NoAdmissibleImage { vertex: v, role });
        }
        left.push((v, candidates));
    }

    let greedy_images_fail = {
        let mut used = VertexSet::EMPTY;
        left.iter().any(|&(_, cand)| match (cand - used).first() {
            Some(u) => {
                used.insert(u);
                false
            }
            None => true,
        })
    };

    let mut owner: [Option<usize>; 64] = [None; 64];
    for i in 0..left.len() {
        let mut visited = VertexSet::EMPTY;
        if !augment(i, &left, &mut owner, &mut visited) {
            return Err(CertificateError::MatchingFailure { vertex: left[i].0 });
        }
    }

    let mut f_map: Vec<(usize, usize)> = (a | sel.sa_parts[0] | sel.sa_parts[1])
        .iter()
        .map(|v| (v, v))
        .collect();
    let mut z_star = VertexSet::EMPTY;
    for (img, o) in owner.iter().enumerate() {
        if let Some(i) = *o {
            let v = left[i].0;
            f_map.push((v, img));
            if z_set.contains(v) {
                z_star.insert(img);
            }
        }
    }
    f_map.sort_unstable();

    Ok(Certificate {
        packing: d.packing,
        n_set: d.n_set,
        r_set: d.r_set,
        a_set: a,
        sa_parts: sel.sa_parts,
        t_set,
        z_set,
        ahat,
        f_map,
        z_star,
        z_bar: d.r_set - z_set,
        greedy_images_fail,
    })
}

/// Kuhn's augmenting path step for left vertex `i`.
fn augment(
    i: usize,
    left: &[(usize, VertexSet)],
    owner: &mut [Option<usize>; 64],
    visited: &mut VertexSet,
) -> bool {
    for u in left[i].1 {
        if visited.contains(u) {
            continue;
        }
        visited.insert(u);
        let free = match owner[u] {
            None => true,
            Some(j) => augment(j, left, owner, visited),
        };
        if free {
            owner[u] = Some(i);
            return true;
        }
    }
    false
}

// ---------------------------------------------------------------------------
// Verifiers
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Property1Violation {
    /// A vertex of `Â` has no image.
    Missing { vertex: usize },
    /// `f` is defined on a vertex outside `Â`.
    Extraneous { vertex: usize },
    /// `f` moves a vertex of `A ∪ S^A_1 ∪ S^A_2`.
    NotIdentity { vertex: usize, image: usize },
    /// The image of a vertex of `S^A_3 ∪ Z` is not one of its neighbors.
    NotNeighbor { vertex: usize, image: usize },
    /// The image of a vertex of `S^A_3` has fewer than two neighbors in `N`.
    LacksTwoNNeighbors { vertex: usize, image: usize },
    /// An image outside `N ∪ S^A_1 ∪ S^A_2`.
    OutsideCodomain { vertex: usize, image: usize },
    /// Two vertices share an image.
    Collision { first: usize, second: usize, image: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateViolation {
    NotIndependent { u: usize, v: usize },
    NotDominating { vertex: usize },
    TooLarge { size: usize, bound: usize },
    Map(Property1Violation),
}

impl fmt::Display for Property1Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for CertificateViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateViolation::NotIndependent { u, v } => {
                write!(f, "Â is not independent: edge {u}-{v}")
            }
            CertificateViolation::NotDominating { vertex } => {
                write!(f, "Â does not dominate vertex {vertex}")
            }
            CertificateViolation::TooLarge { size, bound } => {
                write!(f, "|Â| = {size} exceeds 3|S| = {bound}")
            }
            CertificateViolation::Map(v) => write!(f, "map f: {v}"),
        }
    }
}

impl core::error::Error for Property1Violation {}
impl core::error::Error for CertificateViolation {}

/// Checks that `f` fixes `A ∪ S^A_1 ∪ S^A_2`, sends each vertex of
/// `S^A_3 ∪ Z` to a neighbor (one with two neighbors in `N` for `S^A_3`),
/// lands in `N ∪ S^A_1 ∪ S^A_2`, and is injective on exactly `Â`.
pub fn verify_property1(g: &Graph, cert: &Certificate) -> Result<(), Property1Violation> {
    let fixed = cert.a_set | cert.sa_parts[0] | cert.sa_parts[1];
    let moved = cert.sa_parts[2] | cert.z_set;
    let codomain = cert.n_set | cert.sa_parts[0] | cert.sa_parts[1];
    let mut domain = VertexSet::EMPTY;
    let mut owner: [Option<usize>; 64] = [None; 64];
    for &(v, img) in &cert.f_map {
        if !cert.ahat.contains(v) {
            return Err(Property1Violation::Extraneous { vertex: v });
        }
        domain.insert(v);
        if fixed.contains(v) && img != v {
            return Err(Property1Violation::NotIdentity { vertex: v, image: img });
        }
        if moved.contains(v) {
            if !g.has_edge(v, img) {
                return Err(Property1Violation::NotNeighbor { vertex: v, image: img });
            }
            if cert.sa_parts[2].contains(v) && (g.neighbors(img) & cert.n_set).len() < 2 {
                return Err(Property1Violation::LacksTwoNNeighbors { vertex: v, image: img });
            }
        }
        if !codomain.contains(img) {
            return Err(Property1Violation::OutsideCodomain { vertex: v, image: img });
        }
        if let Some(first) = owner[img] {
            return Err(Property1Violation::Collision {
                first,
                second: v,
                image: img,
            });
        }
        owner[img] = Some(v);
    }
    if let Some(v) = (cert.ahat - domain).first() {
        return Err(Property1Violation::Missing { vertex: v });
    }
    Ok(())
}

/// Outcome of the checks that must hold on a graph with `i(G) = 3ρ(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EqualityDiagnostics {
    NotApplicable { idom: usize, rho: usize },
    Checked(LemmaChecks),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LemmaChecks {
    /// `|Â| = 3|S|`.
    pub ahat_is_3s: bool,
    /// `S_1 = ∅`.
    pub s1_empty: bool,
    /// `S_2 = S^A_2`.
    pub s2_undominated: bool,
    /// `f` is a bijection from `Â` onto `N ∪ S^A_2`.
    pub f_bijective: bool,
    /// Every `x ∈ N \ A` with `d_H(x) = 1` lies in `W`.
    pub degree_one_in_w: bool,
}

impl LemmaChecks {
    pub fn passed(&self) -> bool {
        self.ahat_is_3s
            && self.s1_empty
            && self.s2_undominated
            && self.f_bijective
            && self.degree_one_in_w
    }
}

impl EqualityDiagnostics {
    pub fn passed(&self) -> Option<bool> {
        match self {
            EqualityDiagnostics::NotApplicable { .. } => None,
            EqualityDiagnostics::Checked(c) => Some(c.passed()),
        }
    }
}

/// Computes `i` and `ρ` and, when `i = 3ρ`, runs [`lemma_checks`].
pub fn verify_equality_diagnostics(
    g: &Graph,
    d: &Decomposition,
    sel: &ASelection,
    cert: &Certificate,
) -> EqualityDiagnostics {
    let (idom, rho) = (invariants::idom(g), invariants::rho(g));
    if idom != 3 * rho {
        return EqualityDiagnostics::NotApplicable { idom, rho };
    }
    EqualityDiagnostics::Checked(lemma_checks(g, d, sel, cert))
}

/// The structural consequences of `|Â| = 3|S|` for one packing. Meaningful
/// only on graphs with `i = 3ρ`.
pub fn lemma_checks(g: &Graph, d: &Decomposition, sel: &ASelection, cert: &Certificate) -> LemmaChecks {
    let images: VertexSet = cert.f_map.iter().map(|&(_, img)| img).collect();
    let injective = images.len() == cert.f_map.len();
    let target = d.n_set | sel.sa_parts[1];
    LemmaChecks {
        ahat_is_3s: cert.ahat.len() == cert.bound_3s(),
        s1_empty: d.s_parts[0].is_empty(),
        s2_undominated: d.s_parts[1] == sel.sa_parts[1],
        f_bijective: injective && images == target,
        degree_one_in_w: (d.n_set - sel.a_set)
            .iter()
            .filter(|&x| d.h_degree(g, x) == 1)
            .all(|x| d.w_set.contains(x)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureReport {
    NotApplicable { idom: usize, rho: usize },
    Checked(StructureChecks),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructureChecks {
    /// `G` is cubic.
    pub cubic: bool,
    /// `|S| = ρ(G)`.
    pub packing_is_maximum: bool,
    /// `Δ(G[N(S)]) ≤ 1`.
    pub h_is_matching: bool,
    /// Present when `S^A_3 = ∅`.
    pub partition: Option<PartitionChecks>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartitionChecks {
    /// `{Z*, A}` partitions `N`.
    pub zstar_a_partition_n: bool,
    /// Each `z ∈ Z` has exactly one neighbor in `Z*` and two in `Z̄`.
    pub z_neighbors: bool,
    /// Each vertex of `A` has a neighbor in `Z̄`.
    pub a_has_zbar_neighbor: bool,
    /// Each `H`-edge has one end in `A` and the other in `Z*`.
    pub h_edges_split: bool,
}

impl PartitionChecks {
    pub fn passed(&self) -> bool {
        self.zstar_a_partition_n && self.z_neighbors && self.a_has_zbar_neighbor && self.h_edges_split
    }
}

impl StructureChecks {
    /// `S^A_3 = ∅` is required for the partition facts; its absence is a
    /// failure.
    pub fn passed(&self) -> bool {
        self.cubic
            && self.packing_is_maximum
            && self.h_is_matching
            && self.partition.is_some_and(|p| p.passed())
    }
}

impl StructureReport {
    pub fn passed(&self) -> Option<bool> {
        match self {
            StructureReport::NotApplicable { .. } => None,
            StructureReport::Checked(c) => Some(c.passed()),
        }
    }
}

pub fn verify_structure_props(
    g: &Graph,
    d: &Decomposition,
    sel: &ASelection,
    cert: &Certificate,
) -> StructureReport {
    let (idom, rho) = (invariants::idom(g), invariants::rho(g));
    if idom != 3 * rho {
        return StructureReport::NotApplicable { idom, rho };
    }
    StructureReport::Checked(structure_checks(g, d, sel, cert, rho))
}

/// Checks for graphs with `i = 3ρ`, given `ρ(G)`.
pub fn structure_checks(
    g: &Graph,
    d: &Decomposition,
    sel: &ASelection,
    cert: &Certificate,
    rho: usize,
) -> StructureChecks {
    let h_edges = d.h_edges();
    let partition = sel.sa_parts[2].is_empty().then(|| {
        let a = sel.a_set;
        let zs = cert.z_star;
        let zb = cert.z_bar;
        PartitionChecks {
            zstar_a_partition_n: zs.is_disjoint(a) && (zs | a) == d.n_set,
            z_neighbors: cert
                .z_set
                .iter()
                .all(|z| (g.neighbors(z) & zs).len() == 1 && (g.neighbors(z) & zb).len() == 2),
            a_has_zbar_neighbor: a.iter().all(|v| !(g.neighbors(v) & zb).is_empty()),
            h_edges_split: h_edges.iter().all(|&(u, v)| {
                (a.contains(u) && zs.contains(v)) || (a.contains(v) && zs.contains(u))
            }),
        }
    });
    StructureChecks {
        cubic: g.is_cubic(),
        packing_is_maximum: d.packing.len() == rho,
        h_is_matching: d.h.max_degree() <= 1,
        partition,
    }
}

// ---------------------------------------------------------------------------
// Whole-graph driver
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertifyError {
    NotConnected,
    Decompose(DecomposeError),
    Build { packing: VertexSet, error: CertificateError },
    Invalid { packing: VertexSet, violation: CertificateViolation },
    /// `i(G) > 3ρ(G)`.
    BoundViolated { idom: usize, rho: usize },
}

impl fmt::Display for CertifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertifyError::NotConnected => f.write_str("graph is not connected"),
            CertifyError::Decompose(e) => write!(f, "{e}"),
            CertifyError::Build { packing, error } => write!(f, "packing {packing:?}: {error}"),
            CertifyError::Invalid { packing, violation } => {
                write!(f, "packing {packing:?}: {violation}")
            }
            CertifyError::BoundViolated { idom, rho } => {
                write!(f, "i = {idom} exceeds 3*rho = {}", 3 * rho)
            }
        }
    }
}

impl core::error::Error for CertifyError {}

impl From<DecomposeError> for CertifyError {
    fn from(e: DecomposeError) -> Self {
        CertifyError::Decompose(e)
    }
}

/// Everything built for one packing.
#[derive(Clone, Debug)]
pub struct PackingRun {
    pub decomposition: Decomposition,
    pub selection: ASelection,
    pub certificate: Certificate,
}

/// Runs the full pipeline on one packing and validates the certificate.
pub fn certify_packing(g: &Graph, s: VertexSet) -> Result<PackingRun, CertifyError> {
    let decomposition = decompose(g, s)?;
    let selection = select_a(g, &decomposition);
    let certificate = build_certificate(g, &decomposition, &selection)
        .map_err(|error| CertifyError::Build { packing: s, error })?;
    certificate
        .validate(g)
        .map_err(|violation| CertifyError::Invalid { packing: s, violation })?;
    Ok(PackingRun {
        decomposition,
        selection,
        certificate,
    })
}

#[derive(Clone, Debug)]
pub struct CertifySummary {
    /// Number of maximal packings certified.
    pub packings: usize,
    pub max_ahat: usize,
    pub min_s: usize,
    pub idom: usize,
    pub rho: usize,
    /// `i(G) ≤ 3ρ(G)`.
    pub bound_holds: bool,
    /// Smallest certificate found (ties: first packing in lexicographic order).
    pub witness: Certificate,
    /// Packings on which greedy image picking would have failed.
    pub greedy_failures: usize,
}

/// Certifies every maximal packing of a connected subcubic graph.
pub fn certify_all_packings(g: &Graph) -> Result<CertifySummary, CertifyError> {
    if !g.is_connected() {
        return Err(CertifyError::NotConnected);
    }
    let packings = invariants::maximal_packings(g);
    let mut witness: Option<Certificate> = None;
    let mut max_ahat = 0;
    let mut min_s = usize::MAX;
    let mut greedy_failures = 0;
    for &s in &packings {
        let run = certify_packing(g, s)?;
        let cert = run.certificate;
        max_ahat = max_ahat.max(cert.ahat.len());
        min_s = min_s.min(s.len());
        greedy_failures += usize::from(cert.greedy_images_fail);
        if witness.as_ref().is_none_or(|w| cert.ahat.len() < w.ahat.len()) {
            witness = Some(cert);
        }
    }
    let witness = witness.ok_or(CertifyError::Decompose(DecomposeError::EmptyPacking))?;
    let idom = invariants::idom(g);
    let rho = invariants::rho(g);
    if idom > 3 * rho {
        return Err(CertifyError::BoundViolated { idom, rho });
    }
    Ok(CertifySummary {
        packings: packings.len(),
        max_ahat,
        min_s,
        idom,
        rho,
        bound_holds: true,
        witness,
        greedy_failures,
    })
}
