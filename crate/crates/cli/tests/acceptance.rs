//! End-to-end acceptance run: one PASS/FAIL line per criterion.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use subcubic::checks::{scan_record, Check};
use subcubic::graph6;
use subcubic_core::canon::are_isomorphic;
use subcubic_core::catalog::{self, Named};
use subcubic_core::certificate::{certify_packing, verify_equality_diagnostics, verify_property1, verify_structure_props};
use subcubic_core::generate::{enum_connected_cubic, enum_connected_graphs, enum_connected_subcubic};
use subcubic_core::invariants::{self, has_k23_subgraph, maximal_packings, packing_number_direct};
use subcubic_core::packing::{greedy_packing, theorem3_check};
use subcubic_core::Graph;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn all_subcubic(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| enum_connected_subcubic(n).unwrap()).collect()
}

fn all_cubic(max_n: usize) -> Vec<Graph> {
    (4..=max_n).step_by(2).flat_map(|n| enum_connected_cubic(n, None).unwrap()).collect()
}

fn girth5_corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = [12, 14]
        .into_iter()
        .flat_map(|n| enum_connected_cubic(n, Some(5)).unwrap())
        .collect();
    let text = include_str!("data/cubic_g5_n16.g6");
    out.extend(text.lines().map(|l| graph6::decode(l).unwrap()));
    out.retain(|g| g.girth() == Some(5));
    out
}

/// alpha, gamma, i and rho by trying every vertex subset, with distances
/// from a local BFS.
fn subset_oracle(g: &Graph) -> [usize; 4] {
    let n = g.n();
    assert!(n <= 16);
    let adj: Vec<u32> = (0..n)
        .map(|u| (0..n).filter(|&v| g.has_edge(u, v)).fold(0, |m, v| m | 1 << v))
        .collect();
    let within2: Vec<u32> = (0..n)
        .map(|u| {
            let near = adj[u] | 1 << u;
            (0..n).filter(|&v| near >> v & 1 == 1).fold(near, |m, v| m | adj[v])
        })
        .collect();
    let all = (1u32 << n) - 1;
    let (mut alpha, mut gamma, mut idom, mut rho) = (0, usize::MAX, usize::MAX, 0);
    for s in 0..=all {
        let members = || (0..n).filter(move |&v| s >> v & 1 == 1);
        let size = s.count_ones() as usize;
        let independent = members().all(|v| adj[v] & s == 0);
        let dominated = members().fold(s, |m, v| m | adj[v]);
        let packing = members().all(|v| within2[v] & s == 1 << v);
        if independent {
            alpha = alpha.max(size);
        }
        if dominated == all {
            gamma = gamma.min(size);
            if independent {
                idom = idom.min(size);
            }
        }
        if packing {
            rho = rho.max(size);
        }
    }
    [alpha, gamma, idom, rho]
}

fn c1_catalog_equalities() -> Outcome {
    let t = Instant::now();
    for h in Named::EXTREMAL {
        let g = h.graph();
        let (i, r) = (invariants::idom(&g), invariants::rho(&g));
        ensure!(i == 3 && r == 1, "{}: i = {i}, rho = {r}", h.name());
    }
    let elapsed = t.elapsed();
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("i = 3, rho = 1 on H1..H4 in {elapsed:?}"))
}

fn c2_certificates() -> Outcome {
    let (mut graphs, mut packings) = (0, 0);
    for g in all_subcubic(10).into_iter().filter(|g| g.n() >= 2) {
        graphs += 1;
        for s in maximal_packings(&g) {
            packings += 1;
            let run = certify_packing(&g, s).map_err(|e| format!("{}: {e}", graph6::encode(&g)))?;
            let ahat = run.certificate.ahat;
            ensure!(
                g.is_independent(ahat) && g.is_dominating(ahat) && ahat.len() <= 3 * s.len(),
                "{}: bad certificate for {s:?}",
                graph6::encode(&g)
            );
            verify_property1(&g, &run.certificate).map_err(|e| format!("{}: {e}", graph6::encode(&g)))?;
        }
        let (i, r) = (invariants::idom(&g), invariants::rho(&g));
        ensure!(i <= 3 * r, "{}: i = {i} > 3 rho = {}", graph6::encode(&g), 3 * r);
    }
    Ok(format!("{packings} maximal packings over {graphs} graphs, zero violations"))
}

fn c3_equality_scan() -> Outcome {
    let corpus: Vec<Graph> = all_cubic(14)
        .into_iter()
        .chain(all_subcubic(10).into_iter().filter(|g| !g.is_cubic()))
        .collect();
    let mut found = Vec::new();
    for g in &corpus {
        let rec = scan_record(graph6::encode(g), g, &[Check::Equality]);
        ensure!(rec.checks["equality"] == subcubic::records::CheckStatus::Pass, "{rec:?}");
        if rec.equality {
            found.push((rec.catalog_match.clone(), g));
        }
    }
    ensure!(found.len() == 4, "{} graphs with i = 3 rho", found.len());
    for h in Named::EXTREMAL {
        let hits = found.iter().filter(|(_, g)| are_isomorphic(g, &h.graph())).count();
        ensure!(hits == 1, "{} found {hits} times", h.name());
    }
    let mut names: Vec<_> = found.into_iter().filter_map(|(m, _)| m).collect();
    names.sort();
    ensure!(names == ["H1", "H2", "H3", "H4"], "catalog matches {names:?}");
    Ok(format!("{} graphs scanned, equality exactly on H1..H4", corpus.len()))
}

fn c4_girth_five() -> Outcome {
    let corpus = girth5_corpus();
    let mut fails = [0usize; 5];
    let names = ["rho bound", "claim 12", "claim 13", "claim 15", "lemma 11 (A)"];
    let mut orders = [0usize; 3];
    for g in &corpus {
        let r = theorem3_check(g).map_err(|e| e.to_string())?;
        orders[(g.n() - 12) / 2] += 1;
        let ok = [
            r.rho >= r.bound_n_plus_1_over_8 && r.rho >= r.bound_2n_over_15,
            r.claim12.passed(),
            r.claim13.passed(),
            r.claim15.passed(),
            r.lemma11.passed(),
        ];
        for (f, ok) in fails.iter_mut().zip(ok) {
            *f += usize::from(!ok);
        }
    }
    let summary: Vec<String> = names.iter().zip(fails).map(|(n, f)| format!("{n}: {f}")).collect();
    let detail = format!(
        "{} girth-5 graphs (n=12: {}, n=14: {}, n=16: {}); violations {}",
        corpus.len(),
        orders[0],
        orders[1],
        orders[2],
        summary.join(", ")
    );
    ensure!(orders.iter().all(|&k| k > 0), "{detail}");
    ensure!(fails.iter().all(|&f| f == 0), "{detail}");
    Ok(detail)
}

fn c5_packing_is_square_independence() -> Outcome {
    let mut corpus = all_subcubic(10);
    corpus.extend(all_cubic(14).into_iter().filter(|g| g.n() > 10));
    corpus.extend(girth5_corpus());
    corpus.extend(Named::ALL.map(Named::graph));
    for g in &corpus {
        let (direct, square) = (packing_number_direct(g), invariants::alpha(&g.square()));
        ensure!(direct == square, "{}: rho = {direct}, alpha(G^2) = {square}", graph6::encode(g));
    }
    Ok(format!("rho = alpha(G^2) on {} graphs", corpus.len()))
}

fn c6_heawood_petersen() -> Outcome {
    let h = Named::Heawood.graph();
    let (i, r) = (invariants::idom(&h), invariants::rho(&h));
    ensure!(i == 4 && r == 2, "heawood: i = {i}, rho = {r}");
    let p = Named::Petersen.graph();
    ensure!(invariants::rho(&p) == 1, "petersen rho = {}", invariants::rho(&p));
    for v in 0..p.n() {
        let t = greedy_packing(&p, v).map_err(|e| e.to_string())?;
        ensure!(t.packing.len() == 1, "petersen greedy from {v}: {:?}", t.packing);
    }
    Ok("heawood i = 4, rho = 2; petersen rho = 1, greedy size 1 from all 10 starts".into())
}

fn c7_lemma9() -> Outcome {
    let c5k2 = Named::C5xK2.graph();
    let mut covered = 0;
    for g in all_cubic(14) {
        if has_k23_subgraph(&g) || are_isomorphic(&g, &c5k2) {
            continue;
        }
        covered += 1;
        let i = invariants::idom(&g);
        ensure!(8 * i <= 3 * g.n(), "{}: i = {i}, n = {}", graph6::encode(&g), g.n());
    }
    let [_, _, i, _] = subset_oracle(&c5k2);
    ensure!(i == 4 && invariants::idom(&c5k2) == 4, "c5xk2: i = {i}");
    ensure!(!has_k23_subgraph(&c5k2), "c5xk2 has a K23 subgraph");
    Ok(format!("i <= 3n/8 on {covered} graphs; c5xk2 has i = 4 > 30/8"))
}

fn c8_extremal_structure() -> Outcome {
    let mut runs = 0;
    for h in Named::EXTREMAL {
        let g = h.graph();
        for s in maximal_packings(&g) {
            let run = certify_packing(&g, s).map_err(|e| format!("{}: {e}", h.name()))?;
            let (d, sel, c) = (&run.decomposition, &run.selection, &run.certificate);
            let lemma = verify_equality_diagnostics(&g, d, sel, c);
            let props = verify_structure_props(&g, d, sel, c);
            ensure!(lemma.passed() == Some(true), "{} {s:?}: {lemma:?}", h.name());
            ensure!(props.passed() == Some(true), "{} {s:?}: {props:?}", h.name());
            runs += 1;
        }
    }
    Ok(format!("{runs} maximal packings of H1..H4 pass both verifiers"))
}

fn c9_solver_oracle() -> Outcome {
    let mut count = 0;
    for n in 1..=8 {
        for g in enum_connected_graphs(n, n).unwrap() {
            let fast = [
                invariants::alpha(&g),
                invariants::gamma(&g),
                invariants::idom(&g),
                invariants::rho(&g),
            ];
            let slow = subset_oracle(&g);
            ensure!(fast == slow, "{}: solvers {fast:?}, oracle {slow:?}", graph6::encode(&g));
            count += 1;
        }
    }
    ensure!(count == 1 + 1 + 2 + 6 + 21 + 112 + 853 + 11117, "{count} graphs");
    Ok(format!("{count} connected graphs on n <= 8 match the subset oracle"))
}

fn c10_graph6() -> Outcome {
    ensure!(graph6::encode(&catalog::complete(4)) == "C~", "K4");
    ensure!(graph6::encode(&catalog::path(2)) == "A_", "single edge");
    ensure!(graph6::decode("C~").ok() == Some(catalog::complete(4)), "decode C~");
    ensure!(graph6::decode("A_").ok() == Some(catalog::path(2)), "decode A_");
    for h in Named::ALL {
        let g = h.graph();
        ensure!(graph6::decode(&graph6::encode(&g)).ok() == Some(g), "{}", h.name());
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_6a6a);
    for k in 0..10_000 {
        let n = rng.random_range(0..=30);
        let p = rng.random::<f64>();
        let edges: Vec<_> = (0..n)
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .filter(|_| rng.random_bool(p))
            .collect();
        let g = Graph::new(n, edges).unwrap();
        let s = graph6::encode(&g);
        ensure!(graph6::decode(&s).ok() == Some(g), "random graph {k}: {s}");
    }
    Ok("10000 random graphs and the catalog round-trip; C~ and A_ match".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("catalog equalities", c1_catalog_equalities),
        ("3|S| certificates on subcubic n <= 10", c2_certificates),
        ("i = 3 rho only on H1..H4", c3_equality_scan),
        ("girth-5 packing bound and claims", c4_girth_five),
        ("rho = alpha(G^2)", c5_packing_is_square_independence),
        ("heawood and petersen numbers", c6_heawood_petersen),
        ("i <= 3n/8 without K23", c7_lemma9),
        ("structure of extremal graphs", c8_extremal_structure),
        ("solvers against subset oracle", c9_solver_oracle),
        ("graph6 round trip", c10_graph6),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, check)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS ({name}) {detail} [{secs:.2}s]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL ({name}) {detail} [{secs:.2}s]", k + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
