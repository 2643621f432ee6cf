mod common;

use std::collections::BTreeSet;

use common::*;
use eqdeg::enumerator::{canonical_form, enumerate_graphs, Enumeration};

const KNOWN: [u64; 9] = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668];

#[test]
fn class_counts_match_known_census() {
    for (i, &want) in KNOWN.iter().enumerate() {
        let v = i + 1;
        assert_eq!(Enumeration::new(v).unwrap().count().unwrap(), want, "v = {v}");
    }
}

#[test]
fn per_edge_counts_match_burnside() {
    for v in 1..=8 {
        let expected = burnside_census(v);
        let mut got = vec![0u128; expected.len()];
        enumerate_graphs(v, (0, expected.len() - 1), |g| got[g.edge_count()] += 1).unwrap();
        assert_eq!(got, expected, "v = {v}");
    }
}

#[test]
fn labelled_brute_force_agrees_up_to_six() {
    for v in 1..=6 {
        let perms = permutations(v);
        let brute: BTreeSet<u64> = labelled_graphs(v).map(|m| brute_canonical(&m, &perms)).collect();
        let ours: BTreeSet<u64> = classes(v).iter().map(|g| brute_canonical(&matrix(g), &perms)).collect();
        assert_eq!(ours.len(), classes(v).len(), "duplicate classes at v = {v}");
        assert_eq!(ours, brute, "v = {v}");
    }
}

#[test]
fn orbit_sizes_cover_every_labelled_graph_at_seven() {
    // Each class contributes v!/|Aut| labelled graphs; the total must be
    // 2^(v choose 2), and distinct classes must be non-isomorphic.
    let v = 7;
    let perms = permutations(v);
    let cls = classes(v);
    let labelled: u64 = cls.iter().map(|g| factorial(v) / brute_aut(&matrix(g), &perms)).sum();
    assert_eq!(labelled, 1 << 21);
    let forms: BTreeSet<_> = cls.iter().map(|g| canonical_form(g).unwrap()).collect();
    assert_eq!(forms.len(), cls.len());
}

#[test]
fn edge_filter_equals_post_filter() {
    for v in 5..=8 {
        let all = classes(v);
        let max = v * (v - 1) / 2;
        for (lo, hi) in [(0, 3), (4, 9), (v, v + 2), (10, max), (max, max)] {
            let mut filtered = Vec::new();
            enumerate_graphs(v, (lo, hi), |g| filtered.push(g.to_graph6())).unwrap();
            let post: Vec<String> =
                all.iter().filter(|g| (lo..=hi).contains(&g.edge_count())).map(|g| g.to_graph6()).collect();
            assert_eq!(filtered, post, "v = {v}, edges {lo}..={hi}");
        }
    }
}

#[test]
fn parallel_order_is_deterministic() {
    for v in [6, 8] {
        let run = |jobs| {
            Enumeration::new(v)
                .unwrap()
                .jobs(jobs)
                .fold_subtrees(Vec::new, |acc, g| acc.push(g.to_graph6()))
                .unwrap()
                .concat()
        };
        let serial = run(1);
        assert_eq!(serial.len() as u64, KNOWN[v - 1]);
        assert_eq!(run(4), serial);
        let mut seq = Vec::new();
        Enumeration::new(v).unwrap().for_each(|g| seq.push(g.to_graph6()));
        assert_eq!(seq, serial);
    }
}

#[test]
fn order_limits() {
    assert!(Enumeration::new(0).is_err());
    assert!(Enumeration::new(eqdeg::enumerator::MAX_ENUM_ORDER + 1).is_err());
}
