//! Named graphs and small graph families.
//!
//! Each named graph has a fixed labeling so that results quoted against
//! vertex indices are reproducible:
//!
//! * `H1`: the 8-cycle `0..8` with chords `0-2, 1-5, 3-6, 4-7`.
//! * `H2`: `K_{3,3}` with sides `{0,1,2}` and `{3,4,5}`.
//! * `H3`: the 8-cycle `0..8` with the four long diagonals `i-(i+4)` (Wagner graph).
//! * `H4`: outer 5-cycle `0..5`, spokes `i-(i+5)`, inner pentagram on `5..10`.
//! * `petersen`: the Kneser graph on the 2-subsets of `{0..5}` in lexicographic
//!   order (isomorphic to `H4`, deliberately labeled differently).
//! * `heawood`: LCF `[5,-5]^7` on the 14-cycle.
//! * `c5xk2`: two 5-cycles `0..5` and `5..10` joined by `i-(i+5)`.
//! * `k33`: `K_{3,3}` with sides the even and odd vertices (isomorphic to `H2`).

use core::fmt;
use core::str::FromStr;

use alloc::vec::Vec;

use crate::graph::Graph;

/// Invariants recorded for a catalog graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KnownInvariants {
    pub idom: usize,
    pub rho: usize,
    pub provenance: &'static str,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: Graph,
    pub expected: Option<KnownInvariants>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Named {
    H1,
    H2,
    H3,
    H4,
    Petersen,
    Heawood,
    C5xK2,
    K33,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownGraphName(pub alloc::string::String);

impl fmt::Display for UnknownGraphName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown catalog graph {:?} (known: ", self.0)?;
        for (i, g) in Named::ALL.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(g.name())?;
        }
        f.write_str(")")
    }
}

impl core::error::Error for UnknownGraphName {}

const EXTREMAL: KnownInvariants = KnownInvariants {
    idom: 3,
    rho: 1,
    provenance: "extremal graph: i = 3, rho = 1",
};

impl Named {
    pub const ALL: [Named; 8] = [
        Named::H1,
        Named::H2,
        Named::H3,
        Named::H4,
        Named::Petersen,
        Named::Heawood,
        Named::C5xK2,
        Named::K33,
    ];

    /// The four graphs attaining `i = 3ρ`.
    pub const EXTREMAL: [Named; 4] = [Named::H1, Named::H2, Named::H3, Named::H4];

    pub fn name(self) -> &'static str {
        match self {
            Named::H1 => "H1",
            Named::H2 => "H2",
            Named::H3 => "H3",
            Named::H4 => "H4",
            Named::Petersen => "petersen",
            Named::Heawood => "heawood",
            Named::C5xK2 => "c5xk2",
            Named::K33 => "k33",
        }
    }

    pub fn graph(self) -> Graph {
        match self {
            Named::H1 => cycle_with_chords(8, &[(0, 2), (1, 5), (3, 6), (4, 7)]),
            Named::H2 => complete_bipartite(3, 3),
            Named::H3 => cycle_with_chords(8, &[(0, 4), (1, 5), (2, 6), (3, 7)]),
            Named::H4 => {
                let mut edges = Vec::with_capacity(15);
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((i, i + 5));
                }
                for (a, b) in [(0, 2), (1, 3), (2, 4), (3, 0), (4, 1)] {
                    edges.push((5 + a, 5 + b));
                }
                Graph::new(10, edges).expect("H4 edge list is simple")
            }
            Named::Petersen => {
                let pairs: Vec<(usize, usize)> = (0..5)
                    .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
                    .collect();
                let mut edges = Vec::new();
                for (i, &(a, b)) in pairs.iter().enumerate() {
                    for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
                        if a != c && a != d && b != c && b != d {
                            edges.push((i, j));
                        }
                    }
                }
                Graph::new(10, edges).expect("Kneser graph edge list is simple")
            }
            Named::Heawood => lcf(14, &[5, -5], 7),
            Named::C5xK2 => prism(5),
            Named::K33 => {
                let edges = (0..6)
                    .step_by(2)
                    .flat_map(|a| (1..6).step_by(2).map(move |b| (a, b)));
                Graph::new(6, edges).expect("K33 edge list is simple")
            }
        }
    }

    pub fn expected(self) -> Option<KnownInvariants> {
        match self {
            Named::H1 | Named::H2 | Named::H3 | Named::H4 | Named::Petersen | Named::K33 => {
                Some(EXTREMAL)
            }
            Named::Heawood => Some(KnownInvariants {
                idom: 4,
                rho: 2,
                provenance: "Heawood graph: i = 4, rho = 2",
            }),
            Named::C5xK2 => None,
        }
    }

    pub fn entry(self) -> CatalogEntry {
        CatalogEntry {
            name: self.name(),
            graph: self.graph(),
            expected: self.expected(),
        }
    }
}

impl FromStr for Named {
    type Err = UnknownGraphName;

    fn from_str(s: &str) -> Result<Named, UnknownGraphName> {
        Named::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownGraphName(s.into()))
    }
}

/// Looks up a catalog graph by name (case-insensitive).
pub fn catalog(name: &str) -> Result<CatalogEntry, UnknownGraphName> {
    name.parse::<Named>().map(Named::entry)
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

/// `C_n` for `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).expect("K_n is simple")
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
        .expect("K_{a,b} is simple")
}

/// `C_k □ K_2`: cycles `0..k` and `k..2k` joined by `i-(i+k)`.
pub fn prism(k: usize) -> Graph {
    let mut edges = Vec::with_capacity(3 * k);
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((k + i, k + (i + 1) % k));
        edges.push((i, k + i));
    }
    Graph::new(2 * k, edges).expect("prism is simple")
}

/// LCF notation: an `n`-cycle where vertex `i` also joins `i + shifts[i mod len]`.
/// `shifts` repeated `repeats` times must cover the cycle exactly.
pub fn lcf(n: usize, shifts: &[isize], repeats: usize) -> Graph {
    assert_eq!(shifts.len() * repeats, n, "LCF code must cover every vertex");
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let j = (i as isize + shifts[i % shifts.len()]).rem_euclid(n as isize) as usize;
        if i < j {
            edges.push((i, j));
        }
    }
    Graph::new(n, edges).expect("LCF code describes a simple graph")
}

fn cycle_with_chords(n: usize, chords: &[(usize, usize)]) -> Graph {
    let edges = (0..n).map(|i| (i, (i + 1) % n)).chain(chords.iter().copied());
    Graph::new(n, edges).expect("chords are distinct from cycle edges")
}
