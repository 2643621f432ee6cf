use super::counting::c_lemma_outcome;
use super::{CertificateReport, CheckOutcome};
use crate::detector::has_equal_degree_path3;
use crate::enumerator::{are_isomorphic, CANON_MAX};
use crate::error::{Error, Result};
use crate::graph::{complete_bipartite, Graph, VertexSet};
use crate::lambda::appendix_split;

/// Check ids.
pub const BETA_UPPER_BOUND: &str = "beta-upper-bound";
pub const BETA_LOWER_BOUND: &str = "beta-lower-bound";
pub const BETA_DICHOTOMY: &str = "beta-dichotomy";
pub const MAX_DEGREE_BOUND: &str = "max-degree-bound";
pub const COMMON_NEIGHBOUR_DEGREES: &str = "common-neighbour-degrees";
pub const NO_THREE_EQUAL_DEGREES: &str = "no-three-equal-degrees";
pub const DEGREE_SPLIT: &str = "degree-split-bound";
pub const PAIR_PARTITION: &str = "pair-partition";
pub const ZERO_BLOCKS: &str = "zero-blocks";
pub const COMPLEMENT_IDENTITY: &str = "complement-identity";
pub const C_LEMMA: &str = "large-excess-bound";

pub const GLOBAL_CHECKS: [&str; 7] = [
    BETA_UPPER_BOUND,
    BETA_LOWER_BOUND,
    BETA_DICHOTOMY,
    MAX_DEGREE_BOUND,
    COMMON_NEIGHBOUR_DEGREES,
    NO_THREE_EQUAL_DEGREES,
    DEGREE_SPLIT,
];

/// Largest degree shared by at least two vertices.
pub fn beta(g: &Graph) -> Option<usize> {
    let seq = g.degree_sequence();
    seq.windows(2).find(|w| w[0] == w[1]).map(|w| w[0])
}

/// Exact test for `g` being `K_{a,b}` up to isomorphism.
fn is_complete_bipartite(g: &Graph, a: usize, b: usize) -> bool {
    if g.order() != a + b || g.edge_count() != a * b {
        return false;
    }
    if g.order() <= CANON_MAX {
        return complete_bipartite(a, b).and_then(|k| are_isomorphic(g, &k)).unwrap_or(false);
    }
    // Complete bipartite iff vertex 0 and its non-neighbours form one
    // independent side that is completely joined to the rest.
    let side = g.vertices().difference(g.neighbors(0));
    let other = g.vertices().difference(side);
    let sizes = (side.len(), other.len());
    (sizes == (a, b) || sizes == (b, a))
        && g.edges_within(side) == 0
        && g.edges_within(other) == 0
        && g.non_edges_between(side, other) == 0
}

/// Edge threshold at which the extremal statements for this order apply,
/// with the half order `n`. `None` below the smallest order covered.
fn edge_threshold(order: usize) -> Option<(usize, usize)> {
    let n = order / 2;
    if order % 2 == 1 {
        (n >= 2).then_some((n, n * n + n))
    } else {
        (n >= 3).then_some((n, n * n - 1))
    }
}

/// Runs every global structural check whose hypotheses `g` satisfies.
///
/// Every check id appears in the report, with zero instances when its
/// hypotheses fail, so vacuous passes stay visible.
pub fn check_global_lemmas(g: &Graph) -> Result<CertificateReport> {
    if has_equal_degree_path3(g) {
        return Err(Error::NotPropertyFree(3));
    }
    Ok(global_lemmas_report(g))
}

/// Body of [`check_global_lemmas`] for a graph already known to be free of
/// equal-degree paths of length three.
pub(crate) fn global_lemmas_report(g: &Graph) -> CertificateReport {
    let order = g.order();
    let g6 = g.to_graph6();
    let mut report = CertificateReport::new();
    for id in GLOBAL_CHECKS {
        report.touch(id, order);
    }
    let odd = order % 2 == 1;
    let delta = g.max_degree();
    let beta = beta(g);
    let e = g.edge_count();

    if let (Some((n, threshold)), Some(beta)) = (edge_threshold(order), beta) {
        if e >= threshold {
            let mut out = CheckOutcome::default();
            out.record("beta", beta as i64);
            out.expect(beta <= n + 1, || format!("beta = {beta} exceeds n + 1 = {}", n + 1));
            if beta == n + 1 {
                let (a, b) = if odd { (n, n + 1) } else { (n + 1, n - 1) };
                out.expect(is_complete_bipartite(g, a, b), || format!("beta = n + 1 but g is not K_{{{a},{b}}}"));
            }
            report.add(BETA_UPPER_BOUND, order, &g6, None, &out);

            let mut out = CheckOutcome::default();
            out.expect(beta >= 3, || format!("beta = {beta} < 3"));
            if !odd {
                out.expect(beta <= delta, || format!("beta = {beta} exceeds max degree {delta}"));
            }
            report.add(BETA_LOWER_BOUND, order, &g6, None, &out);

            let (min_n, cap) = if odd { (5, n + 1) } else { (6, n + 2) };
            if n >= min_n {
                let mut out = CheckOutcome::default();
                out.expect(beta + 1 >= delta || delta <= cap, || {
                    format!("beta = {beta} < max degree - 1 = {} and max degree {delta} > {cap}", delta - 1)
                });
                report.add(BETA_DICHOTOMY, order, &g6, None, &out);
            }

            // Stated for graphs other than the extremal one, i.e. beta <= n.
            let small = if odd { (2..=4).contains(&n) } else { (3..=5).contains(&n) };
            if small && beta <= n {
                let cap = if odd { 2 * n - 2 } else { 2 * n - 3 };
                let mut out = CheckOutcome::default();
                out.expect(delta <= cap, || format!("max degree {delta} exceeds {cap}"));
                report.add(MAX_DEGREE_BOUND, order, &g6, None, &out);
            }
        }
    }

    for v in 0..order {
        let nv = g.neighbors(v);
        for u in nv {
            if g.neighbors(u).intersection(nv).len() < 2 {
                continue;
            }
            let mut out = CheckOutcome::default();
            for w in nv.difference(VertexSet::singleton(u)) {
                out.expect(g.degree(w) != g.degree(u), || {
                    format!("neighbour {w} of {v} shares degree {} with {u}", g.degree(u))
                });
            }
            report.add(COMMON_NEIGHBOUR_DEGREES, order, &g6, Some([v, u]), &out);
        }
    }

    if order >= 3 && delta == order - 2 {
        let tops = g.degree_class(delta);
        if let (1, Some(beta)) = (tops.len(), beta) {
            let v0 = tops.first().expect("one vertex of maximum degree");
            let outside = g.vertices().difference(g.neighbors(v0)).difference(VertexSet::singleton(v0));
            let v1 = outside.first().expect("exactly one non-neighbour");
            if g.degree(v1) != beta {
                let mut out = CheckOutcome::default();
                let mut counts = vec![0usize; order];
                for d in g.degrees() {
                    counts[d] += 1;
                }
                for (d, &k) in counts.iter().enumerate().skip(3) {
                    out.expect(k < 3, || format!("{k} vertices share degree {d}"));
                }
                report.add(NO_THREE_EQUAL_DEGREES, order, &g6, Some([v0, v1]), &out);
            }
        }
    }

    if !odd {
        if let Some(beta) = beta {
            let n = order / 2;
            if beta + 2 <= delta && delta >= n + 3 {
                let v0 = g.degree_class(delta).first().expect("a vertex of maximum degree");
                let split = appendix_split(g, v0).expect("v0 has maximum degree and the order is even");
                let mut out = CheckOutcome::default();
                let need = 2 * n + 2 - delta;
                out.record("b_size", split.b.len() as i64);
                out.record("threshold", need as i64);
                out.expect(g.degree_class(delta).len() == 1, || "maximum degree is not unique".into());
                out.expect(split.b.len() >= need, || format!("|B| = {} < {need}", split.b.len()));
                let mut seen = VertexSet::EMPTY;
                for w in split.a {
                    let d = g.degree(w);
                    out.expect((need..delta).contains(&d), || format!("degree {d} of {w} outside [{need}, {delta})"));
                    out.expect(!seen.contains(d), || format!("two vertices of A share degree {d}"));
                    seen.insert(d);
                }
                report.add(DEGREE_SPLIT, order, &g6, None, &out);
            }
        }
    }
    report
}

/// Runs the partition, zero-block, complement and large-excess checks on
/// every equal-degree pair of `g`.
pub fn check_pairs(g: &Graph) -> Result<CertificateReport> {
    if has_equal_degree_path3(g) {
        return Err(Error::NotPropertyFree(3));
    }
    let mut report = CertificateReport::new();
    pair_checks(g, &mut report);
    Ok(report)
}

/// Every pair check and every global check on a property-free graph.
pub fn certify_graph(g: &Graph) -> Result<CertificateReport> {
    let mut report = check_pairs(g)?;
    report.merge(global_lemmas_report(g));
    Ok(report)
}

fn pair_checks(g: &Graph, report: &mut CertificateReport) {
    use super::counting::{check_complement_identity, check_zero_blocks};
    use super::PairPartition;
    use crate::detector::path3_exists_between;

    let order = g.order();
    let g6 = g.to_graph6();
    for id in [PAIR_PARTITION, ZERO_BLOCKS, COMPLEMENT_IDENTITY, C_LEMMA] {
        report.touch(id, order);
    }
    for u in 0..order {
        for v in u + 1..order {
            if g.degree(u) != g.degree(v) {
                continue;
            }
            let pair = Some([u, v]);
            let p = PairPartition::new(g, u, v).expect("equal-degree pair");
            let out = CheckOutcome { failures: p.size_identity_failures(g), ..Default::default() };
            report.add(PAIR_PARTITION, order, &g6, pair, &out);

            let zero = check_zero_blocks(g, &p);
            let path = path3_exists_between(g, u, v).expect("distinct in-range vertices");
            let mut out = CheckOutcome::default();
            out.expect(zero != path, || format!("zero blocks = {zero} but path of length three = {path}"));
            out.expect(zero, || "zero blocks fail in a property-free graph".into());
            report.add(ZERO_BLOCKS, order, &g6, pair, &out);
            if !zero {
                continue;
            }
            let out = check_complement_identity(g, &p).expect("zero blocks hold");
            report.add(COMPLEMENT_IDENTITY, order, &g6, pair, &out);
            if p.c >= 1 {
                report.add(C_LEMMA, order, &g6, pair, &c_lemma_outcome(g, &p));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_values() {
        assert_eq!(beta(&complete_bipartite(4, 5).unwrap()), Some(5));
        assert_eq!(beta(&Graph::path(4).unwrap()), Some(2));
        assert_eq!(beta(&Graph::empty(1).unwrap()), None);
    }

    #[test]
    fn extremal_bipartite_graphs_pass() {
        let k45 = complete_bipartite(4, 5).unwrap();
        let r = check_global_lemmas(&k45).unwrap();
        assert!(r.is_clean());
        assert_eq!(r.record(BETA_UPPER_BOUND).unwrap().instances, 1);
        let k35 = complete_bipartite(3, 5).unwrap();
        let r = check_global_lemmas(&k35).unwrap();
        assert!(r.is_clean());
        assert_eq!(r.record(BETA_UPPER_BOUND).unwrap().instances, 1);
        assert!(is_complete_bipartite(&k35, 5, 3));
    }

    #[test]
    fn star_is_vacuous() {
        let star = Graph::star(4).unwrap();
        let r = check_global_lemmas(&star).unwrap();
        assert!(r.is_clean());
        for id in [BETA_UPPER_BOUND, BETA_LOWER_BOUND, MAX_DEGREE_BOUND, COMMON_NEIGHBOUR_DEGREES] {
            assert_eq!(r.record(id).unwrap().instances, 0, "{id}");
        }
        assert_eq!(r.records().count(), GLOBAL_CHECKS.len());
    }

    #[test]
    fn rejects_graphs_with_the_configuration() {
        assert_eq!(check_global_lemmas(&Graph::path(4).unwrap()), Err(Error::NotPropertyFree(3)));
    }

    #[test]
    fn large_bipartite_uses_structural_test() {
        let g = complete_bipartite(6, 7).unwrap();
        assert!(is_complete_bipartite(&g, 6, 7));
        assert!(!is_complete_bipartite(&Graph::cycle(13).unwrap(), 6, 7));
    }
}
