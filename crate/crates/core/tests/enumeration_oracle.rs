mod common;

use std::collections::BTreeSet;

use common::{dedup_by_backtracking, iso_backtrack, labeled_graphs};
use subcubic_core::canon::canonical_form;
use subcubic_core::generate::{enum_connected_cubic, enum_connected_graphs, enum_connected_subcubic};
use subcubic_core::{Graph, Named};

fn oracle_classes(n: usize, lo: usize, hi: usize, min_girth: usize) -> Vec<Graph> {
    let mut found = Vec::new();
    labeled_graphs(n, lo, hi, |g| {
        if g.is_connected() && g.girth().is_none_or(|k| k >= min_girth) {
            found.push(g.clone());
        }
    });
    dedup_by_backtracking(found)
}

/// Same classes on both sides, matched one to one.
fn assert_same_classes(generated: &[Graph], oracle: &[Graph]) {
    assert_eq!(generated.len(), oracle.len());
    for o in oracle {
        assert_eq!(generated.iter().filter(|g| iso_backtrack(g, o)).count(), 1);
    }
}

fn assert_distinct(graphs: &[Graph]) {
    let certs: BTreeSet<_> = graphs.iter().map(canonical_form).collect();
    assert_eq!(certs.len(), graphs.len());
}

#[test]
fn cubic_matches_labeled_oracle_up_to_eight() {
    for n in [4, 6, 8] {
        let generated = enum_connected_cubic(n, None).unwrap();
        assert_same_classes(&generated, &oracle_classes(n, 3, 3, 3));
    }
}

#[test]
fn cubic_girth_four_matches_oracle() {
    for n in [6, 8] {
        let generated = enum_connected_cubic(n, Some(4)).unwrap();
        assert_same_classes(&generated, &oracle_classes(n, 3, 3, 4));
    }
}

#[test]
fn subcubic_matches_labeled_oracle_up_to_seven() {
    for n in 1..=7 {
        let generated = enum_connected_subcubic(n).unwrap();
        assert_same_classes(&generated, &oracle_classes(n, 0, 3, 3));
    }
}

#[test]
fn connected_graphs_match_labeled_oracle_up_to_six() {
    for n in 1..=6 {
        let generated = enum_connected_graphs(n, n).unwrap();
        assert_same_classes(&generated, &oracle_classes(n, 0, n, 3));
    }
}

/// A cubic graph of girth 5 on 10 vertices has exactly 10 vertices within
/// distance 2 of any vertex, so it is a depth-2 tree rooted at 0 (children
/// 1, 2, 3; grandchildren 4..10) plus six edges among the grandchildren.
#[test]
fn girth_five_order_ten_by_tree_completion() {
    let tree = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)];
    let leaf_pairs: Vec<(usize, usize)> = (4..10).flat_map(|a| (a + 1..10).map(move |b| (a, b))).collect();
    let mut found = Vec::new();
    for mask in 0u32..1 << leaf_pairs.len() {
        if mask.count_ones() != 6 {
            continue;
        }
        let extra = leaf_pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        let g = Graph::new(10, tree.iter().copied().chain(extra)).unwrap();
        if g.is_cubic() && g.girth() == Some(5) {
            found.push(g);
        }
    }
    assert!(!found.is_empty());
    let classes = dedup_by_backtracking(found);
    assert_eq!(classes.len(), 1);
    assert!(iso_backtrack(&classes[0], &Named::Petersen.graph()));

    let generated = enum_connected_cubic(10, Some(5)).unwrap();
    assert_same_classes(&generated, &classes);
}

#[test]
fn frozen_counts_beyond_oracle_range() {
    let cubic: Vec<usize> = (4..=14).step_by(2).map(|n| enum_connected_cubic(n, None).unwrap().len()).collect();
    assert_eq!(cubic, [1, 2, 5, 19, 85, 509]);
    let girth5: Vec<usize> = (10..=16).step_by(2).map(|n| enum_connected_cubic(n, Some(5)).unwrap().len()).collect();
    assert_eq!(girth5, [1, 2, 9, 49]);
    let subcubic: Vec<usize> = (1..=10).map(|n| enum_connected_subcubic(n).unwrap().len()).collect();
    assert_eq!(subcubic, [1, 1, 2, 6, 10, 29, 64, 194, 531, 1733]);
    let general: Vec<usize> = (1..=8).map(|n| enum_connected_graphs(n, n).unwrap().len()).collect();
    assert_eq!(general, [1, 1, 2, 6, 21, 112, 853, 11117]);
}

#[test]
fn outputs_are_distinct_and_well_formed() {
    for n in (4..=14).step_by(2) {
        let gs = enum_connected_cubic(n, None).unwrap();
        assert!(gs.iter().all(|g| g.n() == n && g.is_cubic() && g.is_connected()));
        assert_distinct(&gs);
    }
    for n in [12, 14, 16] {
        let gs = enum_connected_cubic(n, Some(5)).unwrap();
        assert!(gs.iter().all(|g| g.is_cubic() && g.is_connected() && g.girth() >= Some(5)));
        assert_distinct(&gs);
    }
    for n in 1..=10 {
        let gs = enum_connected_subcubic(n).unwrap();
        assert!(gs.iter().all(|g| g.n() == n && g.is_subcubic() && g.is_connected()));
        assert_distinct(&gs);
    }
    // Certificates agree with the backtracking test on the n = 10 cubic
    // classes.
    let ten = enum_connected_cubic(10, None).unwrap();
    for (i, a) in ten.iter().enumerate() {
        for b in &ten[i + 1..] {
            assert!(!iso_backtrack(a, b));
        }
    }
}

#[test]
fn generation_is_deterministic() {
    assert_eq!(enum_connected_cubic(12, None).unwrap(), enum_connected_cubic(12, None).unwrap());
    assert_eq!(enum_connected_subcubic(8).unwrap(), enum_connected_subcubic(8).unwrap());
}
