use super::partition::{PairPartition, SecondLevelPartition};
use super::{choose2, CheckOutcome};
use crate::detector::has_equal_degree_path3;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Whether `e(A_u, B)`, `e(A_v, B)`, `e(B)` and `e(A_u, A_v)` all vanish,
/// which is exactly the absence of a path of length three from `u` to `v`.
pub fn check_zero_blocks(g: &Graph, p: &PairPartition) -> bool {
    g.edges_between(p.a_u, p.b) == 0
        && g.edges_between(p.a_v, p.b) == 0
        && g.edges_within(p.b) == 0
        && g.edges_between(p.a_u, p.a_v) == 0
}

fn ebar(g: &Graph, s: VertexSet, t: VertexSet) -> i64 {
    g.non_edges_between(s, t) as i64
}

fn ebar_in(g: &Graph, s: VertexSet) -> i64 {
    g.non_edges_within(s) as i64
}

fn complement_edges(g: &Graph) -> i64 {
    let n = g.order() as i64;
    choose2(n) - g.edge_count() as i64
}

/// Checks the complement count of `V \ D` against its closed form and the
/// resulting lower bound on `e(complement of g)`.
///
/// Requires the zero blocks to hold for `p`.
pub fn check_complement_identity(g: &Graph, p: &PairPartition) -> Result<CheckOutcome> {
    if !check_zero_blocks(g, p) {
        return Err(Error::Precondition(format!(
            "a path of length three joins {} and {}, so the block identities do not apply",
            p.u, p.v
        )));
    }
    let mut out = CheckOutcome::default();
    let (beta, x, ind, n) = (p.beta as i64, p.x as i64, p.ind(), p.n as i64);
    let su = VertexSet::singleton(p.u);
    let sv = VertexSet::singleton(p.v);

    out.expect_eq("x^2 + 5x parity", (x * x + 5 * x) % 2, 0);
    out.expect_eq("x^2 + x parity", (x * x + x) % 2, 0);
    let closed = out.record("closed_form", (beta + 1 - ind).pow(2) - (x * x + 5 * x) / 2 - ind);
    let blocks = out.record(
        "block_sum",
        ebar(g, su, p.a_v)
            + ebar(g, sv, p.a_u)
            + ebar(g, p.a_u, p.a_v)
            + ebar(g, p.b, p.a_u)
            + ebar(g, p.b, p.a_v)
            + ebar_in(g, p.b)
            + ebar(g, su, sv),
    );
    out.expect_eq("block sum vs closed form", blocks, closed);

    // The block sum leaves out the pairs inside A_u and inside A_v; every
    // other pair in V \ D is an edge.
    let outside_d = out.record("complement_outside_d", ebar_in(g, g.vertices().difference(p.d)));
    let remainder = ebar(g, su, p.b)
        + ebar(g, su, p.a_u)
        + ebar(g, sv, p.b)
        + ebar(g, sv, p.a_v)
        + ebar_in(g, p.a_u)
        + ebar_in(g, p.a_v);
    out.expect_eq("complement of V \\ D vs block sum plus remainder", outside_d, blocks + remainder);
    out.expect_ge("complement of V \\ D vs closed form", outside_d, closed);

    let d_size = p.d.len() as i64;
    let pair_to_d = out.record("complement_pair_d", ebar(g, su.union(sv), p.d));
    out.expect_eq("complement between {u,v} and D", pair_to_d, 2 * d_size);

    let odd = p.is_odd_order(g);
    let bd = out.record("complement_b_d", ebar(g, p.b, p.d));
    let dd = out.record("complement_d", ebar_in(g, p.d));
    let offset = if odd { 2 } else { 4 };
    let bound = out.record("lower_bound", (beta - 1 - ind).pow(2) + 4 * n - (x * x + x) / 2 - offset - ind + bd + dd);
    let order_term = if odd { 2 * n + x - 2 * beta + 2 * ind - 1 } else { 2 * n + x - 2 * beta + 2 * ind - 2 };
    out.expect_eq("|D| formula", d_size, order_term);
    out.expect_eq("lower bound simplification", closed + 2 * order_term + bd + dd, bound);
    let total = out.record("complement_edges", complement_edges(g));
    out.expect_ge("complement edges vs lower bound", total, bound);
    Ok(out)
}

/// Checks every step of the large-excess bound for the pair `(u, v)`:
/// the second-level partition, its zero blocks, the bounds on `ē(D)` and
/// `ē(B, D)`, and the final lower bound on `e(complement of g)`.
///
/// Requires `g` to contain no equal-degree path of length three and the
/// pair to have `c >= 1`.
pub fn check_c_lemma(g: &Graph, u: usize, v: usize) -> Result<CheckOutcome> {
    if has_equal_degree_path3(g) {
        return Err(Error::NotPropertyFree(3));
    }
    let p = PairPartition::new(g, u, v)?;
    if p.c < 1 {
        return Err(Error::Precondition(format!("pair ({u},{v}) has c = {} < 1", p.c)));
    }
    Ok(c_lemma_outcome(g, &p))
}

/// Body of [`check_c_lemma`] for a graph already known to be free of
/// equal-degree paths of length three.
pub(crate) fn c_lemma_outcome(g: &Graph, p: &PairPartition) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let odd = p.is_odd_order(g);
    let (beta, x, ind, n, c) = (p.beta as i64, p.x as i64, p.ind(), p.n as i64, p.c);
    let d_size = p.d.len() as i64;
    let s = if odd { 2 * c + 1 } else { 2 * c + 2 };
    out.record("c", c);
    out.expect_eq("|B| - |D|", x - d_size, s);

    let Some(sl) = SecondLevelPartition::new(g, p) else {
        out.failures.push("no two vertices of B have the same number of neighbours in D".into());
        return out;
    };
    let (gamma, y) = (sl.gamma as i64, sl.y as i64);
    out.record("gamma", gamma);
    out.record("y", y);
    out.record("u1", sl.u1 as i64);
    out.record("v1", sl.v1 as i64);
    out.expect(!g.has_edge(sl.u1, sl.v1), || format!("u1={} and v1={} are adjacent", sl.u1, sl.v1));
    out.expect_eq("d(u1) vs d(v1)", g.degree(sl.u1) as i64, g.degree(sl.v1) as i64);
    out.expect_eq("|A_u1|", sl.a_u1.len() as i64, gamma - y);
    out.expect_eq("|A_v1|", sl.a_v1.len() as i64, gamma - y);
    let zero = g.edges_between(sl.a_u1, sl.b1)
        + g.edges_between(sl.a_v1, sl.b1)
        + g.edges_within(sl.b1)
        + g.edges_between(sl.a_u1, sl.a_v1);
    out.expect_eq("second-level zero blocks", zero as i64, 0);

    let four = out.record(
        "second_level_sum",
        ebar(g, sl.a_u1, sl.b1) + ebar(g, sl.a_v1, sl.b1) + ebar_in(g, sl.b1) + ebar(g, sl.a_u1, sl.a_v1),
    );
    out.expect_eq("second-level sum closed form", four, gamma * gamma - (y * y + y) / 2);
    out.expect_ge("second-level sum vs C(gamma,2)", four, choose2(gamma));
    let dd = out.record("complement_d", ebar_in(g, p.d));
    out.expect_ge("complement of D vs second-level sum", dd, four);

    let e_bd = out.record("edges_b_d", g.edges_between(p.b, p.d) as i64);
    out.expect_ge("e(B,D) upper bound", gamma * x + (d_size - gamma) * (d_size - gamma + 1) / 2, e_bd);
    let bd = out.record("complement_b_d", ebar(g, p.b, p.d));
    let half = out.record("complement_b_d_bound", (d_size - gamma) * (2 * x - d_size + gamma - 1) / 2);
    out.expect_ge("complement of (B,D) vs bound", bd, half);
    let expanded = if odd {
        choose2(x + 1) - choose2(gamma) - 2 * c * c - c - (2 * c + 1) * gamma - x
    } else {
        choose2(x + 1) - choose2(gamma) - 2 * c * c - 3 * c - (2 * c + 2) * gamma - x - 1
    };
    out.expect_eq("complement of (B,D) bound expansion", half, expanded);
    let relaxed = if odd {
        choose2(x + 1) - choose2(gamma) + 2 * c * c + 3 * c + 1 - 2 * (c + 1) * x
    } else {
        choose2(x + 1) - choose2(gamma) + 2 * c * c + 5 * c + 3 - (2 * c + 3) * x
    };
    out.record("complement_b_d_relaxed", relaxed);
    out.expect(gamma <= d_size, || format!("gamma = {gamma} exceeds |D| = {d_size}"));
    out.expect_ge("complement of (B,D) bound vs relaxed form", half, relaxed);

    let total = out.record("complement_edges", complement_edges(g));
    let middle = if odd {
        (beta - 1 - ind).pow(2) + 4 * n - 2 - ind + 2 * c * c + 3 * c + 1 - 2 * (c + 1) * x
    } else {
        (beta - 1 - ind).pow(2) + 4 * n - 4 - ind + 2 * c * c + 5 * c + 3 - (2 * c + 3) * x
    };
    out.record("intermediate_bound", middle);
    out.expect_ge("complement edges vs intermediate bound", total, middle);
    out.expect(x <= beta - ind, || format!("x = {x} exceeds beta - ind = {}", beta - ind));
    let fin = if odd { n * n + c * c - c - ind } else { (n * n - n + 1) + c * c - 1 - ind };
    out.record("final_bound", fin);
    out.expect_ge("intermediate bound vs final bound", middle, fin);
    out.expect_ge("complement edges vs final bound", total, fin);
    out
}
