//! Acceptance run: one PASS/FAIL line per criterion. Exits non-zero if
//! any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::*;
use eqdeg::certificates::{COMPLEMENT_IDENTITY, ZERO_BLOCKS};
use eqdeg::detector::{find_equal_degree_path3, has_equal_degree_path, verify_witness};
use eqdeg::enumerator::{are_isomorphic, Enumeration};
use eqdeg::graph::{complete_bipartite, half_graph, WideGraph};
use eqdeg::lambda::{lambda_grid, LambdaInstance};
use eqdeg::search::{certificate_sweep, sharpness, verify_theorem, SearchOptions};
use eqdeg::Graph;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn options() -> SearchOptions {
    SearchOptions::with_jobs(std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn within(label: &str, elapsed: Duration, budget: Duration) -> Result<(), String> {
    if elapsed <= budget {
        Ok(())
    } else {
        Err(format!("{label} took {elapsed:.1?}, budget {budget:?}"))
    }
}

fn theorem(cases: &[(usize, usize, usize, usize, u64)]) -> Check {
    let mut notes = Vec::new();
    for &(v, p, a, b, budget_s) in cases {
        let start = Instant::now();
        let r = verify_theorem(v, &options()).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        if r.p != p || r.extremal.len() != 1 {
            return Err(format!("v={v}: p={} with {} extremal graphs", r.p, r.extremal.len()));
        }
        let g = Graph::from_graph6(&r.extremal[0]).map_err(|e| e.to_string())?;
        if !are_isomorphic(&g, &complete_bipartite(a, b).unwrap()).unwrap() {
            return Err(format!("v={v}: extremal graph {} is not K_{{{a},{b}}}", r.extremal[0]));
        }
        within(&format!("v={v}"), elapsed, Duration::from_secs(budget_s))?;
        notes.push(format!("v={v}: p={p} unique K_{{{a},{b}}} ({elapsed:.2?})"));
    }
    Ok(notes.join("; "))
}

fn criterion_1() -> Check {
    theorem(&[(5, 6, 2, 3, 1), (7, 12, 3, 4, 1), (9, 20, 4, 5, 60)])
}

fn criterion_2() -> Check {
    theorem(&[(6, 8, 2, 4, 1), (8, 15, 3, 5, 60), (10, 24, 4, 6, 1800)])
}

fn criterion_3() -> Check {
    let s = sharpness(9, 21, &options()).map_err(|e| e.to_string())?;
    if s.checked == 0 {
        return Err("no graphs with at least 21 edges were checked".into());
    }
    if !s.exceptions.is_empty() {
        return Err(format!("property-free graphs with >= 21 edges: {:?}", s.exceptions));
    }
    Ok(format!("{} classes with >= 21 edges, all contain the configuration", s.checked))
}

fn criterion_4() -> Check {
    let mut notes = Vec::new();
    for v in 5..=9 {
        let report = certificate_sweep(v, &options()).map_err(|e| e.to_string())?;
        if !report.is_clean() {
            let first: Vec<_> =
                report.records().flat_map(|r| r.violations.iter().map(move |x| (&r.check, x))).take(3).collect();
            return Err(format!("v={v}: {} violations, e.g. {first:?}", report.total_violations()));
        }
        let counts: Vec<u64> =
            [ZERO_BLOCKS, COMPLEMENT_IDENTITY].iter().map(|id| report.record(id).map_or(0, |r| r.instances)).collect();
        if counts.contains(&0) {
            return Err(format!("v={v}: vacuous identity checks {counts:?}"));
        }
        notes.push(format!("v={v}: {} identity instances", counts[0]));
    }
    Ok(notes.join("; "))
}

fn criterion_5() -> Check {
    let rows = lambda_grid(6..=8).map_err(|e| e.to_string())?;
    let expected: usize = (6..=8).map(|n| LambdaInstance::grid(n).len()).sum();
    if rows.len() != expected {
        return Err(format!("{} rows, expected {expected}", rows.len()));
    }
    match rows.iter().find(|r| !r.equal) {
        Some(r) => Err(format!("closed {} != oracle {} at {:?}", r.closed, r.oracle, r)),
        None => Ok(format!("{} instances, closed form = oracle on all", rows.len())),
    }
}

fn criterion_6() -> Check {
    let start = Instant::now();
    for n in 1..=100 {
        let g = WideGraph::complete_bipartite(n, n + 1).map_err(|e| e.to_string())?;
        if let Some(w) = find_equal_degree_path3(&g) {
            return Err(format!("K_{{{n},{}}} has witness {:?}", n + 1, w));
        }
    }
    let elapsed = start.elapsed();
    within("complete bipartite sweep", elapsed, Duration::from_secs(10))?;
    for n in 1..=5 {
        let h = half_graph(n).map_err(|e| e.to_string())?;
        if h.edge_count() != n * (n + 1) / 2 {
            return Err(format!("half_graph({n}) has {} edges", h.edge_count()));
        }
        for len in [2, 4] {
            if has_equal_degree_path(&h, len).map_err(|e| e.to_string())? || naive_has_path(&matrix(&h), len) {
                return Err(format!("half_graph({n}) contains an equal-degree path of length {len}"));
            }
        }
    }
    Ok(format!("K_{{n,n+1}} negative for n <= 100 ({elapsed:.2?}); half graphs n <= 5 negative for lengths 2, 4"))
}

fn criterion_7() -> Check {
    const KNOWN: [u64; 10] = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168];
    for (i, &want) in KNOWN.iter().enumerate() {
        let v = i + 1;
        let got = Enumeration::new(v).and_then(|e| e.jobs(options().jobs).count()).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("v={v}: {got} classes, expected {want}"));
        }
    }
    for v in 1..=6 {
        let perms = permutations(v);
        let brute: BTreeSet<u64> = labelled_graphs(v).map(|m| brute_canonical(&m, &perms)).collect();
        let ours: BTreeSet<u64> = classes(v).iter().map(|g| brute_canonical(&matrix(g), &perms)).collect();
        if brute != ours || ours.len() as u64 != KNOWN[v - 1] {
            return Err(format!("v={v}: labelled brute force finds {} classes", brute.len()));
        }
    }
    let perms = permutations(7);
    let labelled: u64 = classes(7).iter().map(|g| factorial(7) / brute_aut(&matrix(g), &perms)).sum();
    if labelled != 1 << 21 {
        return Err(format!("v=7: orbit sizes sum to {labelled}, expected 2^21"));
    }
    Ok("v=1..10 match; v<=6 equal to labelled brute force, v=7 orbit sizes cover all 2^21 labelled graphs".into())
}

fn criterion_8() -> Check {
    let mut total = 0;
    for v in 1..=7 {
        for g in classes(v) {
            let m = matrix(&g);
            let w = find_equal_degree_path3(&g);
            if w.is_some() != naive_has_path(&m, 3) {
                return Err(format!(
                    "{}: detector {} naive",
                    g.to_graph6(),
                    if w.is_some() { "positive," } else { "negative," }
                ));
            }
            if let Some(w) = w {
                if !verify_witness(&g, &w) || !valid_witness(&m, w.vertices(), 3) {
                    return Err(format!("{}: invalid witness {:?}", g.to_graph6(), w));
                }
            }
            total += 1;
        }
    }
    Ok(format!("{total} classes agree with naive path enumeration"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("odd-order theorem at v = 5, 7, 9", criterion_1),
        ("even-order theorem at v = 6, 8, 10", criterion_2),
        ("sharpness at v = 9", criterion_3),
        ("certificate sweep v = 5..9", criterion_4),
        ("lambda closed form vs oracle, n = 6..8", criterion_5),
        ("construction checks", criterion_6),
        ("enumeration census v = 1..10", criterion_7),
        ("detector vs naive oracle, v <= 7", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail} [{elapsed:.2?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!("N/A  criterion 9: general-n theorems are not checkable by enumeration; their inequalities and the degree-sum maximisation are exercised by criteria 4 and 5");
    if failed > 0 {
        std::process::exit(1);
    }
}
