//! Exhaustive computation of `p_ℓ(v)`, the largest edge count of a
//! `v`-vertex graph with no two equal-degree vertices joined by a path of
//! length `ℓ`, plus theorem verification, certificate sweeps and tables.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::certificates::{certify_graph, CertificateReport, COMPLEMENT_IDENTITY, ZERO_BLOCKS};
use crate::detector::{has_equal_degree_path, has_equal_degree_path3, MAX_PATH_LENGTH};
use crate::enumerator::{are_isomorphic, Enumeration, MAX_ENUM_ORDER};
use crate::error::{Error, Result};
use crate::graph::{complete_bipartite, half_graph, Graph};

pub const SEARCH_RESULT_VERSION: &str = "search-result/1";

/// Largest order searched for path lengths above 3 unless
/// [`SearchOptions::uncapped`] is set.
pub const LONG_PATH_ORDER_CAP: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
    /// Record wall-clock seconds. Off by default so output is reproducible.
    pub timing: bool,
    /// Classify every edge count instead of starting at a known lower bound.
    pub full_histogram: bool,
    /// Lift [`LONG_PATH_ORDER_CAP`].
    pub uncapped: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { jobs: 1, timing: false, full_histogram: false, uncapped: false }
    }
}

impl SearchOptions {
    pub fn with_jobs(jobs: usize) -> Self {
        SearchOptions { jobs: jobs.max(1), ..Self::default() }
    }
}

/// Outcome of a search over one order and path length.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchResult {
    pub version: &'static str,
    pub v: usize,
    pub ell: usize,
    /// Largest edge count of a property-free graph in the searched range.
    pub p: usize,
    /// Property-free graphs with `p` edges, graph6, sorted.
    pub extremal: Vec<String>,
    /// Property-free classes per edge count, over the searched range.
    pub histogram: BTreeMap<usize, u64>,
    /// Classes examined.
    pub enumerated: u64,
    /// Smallest edge count searched; classes below it are not classified.
    pub min_edges: usize,
    pub seconds: f64,
}

/// Whether `g` contains two equal-degree vertices joined by a path of
/// length `ell`.
pub fn has_configuration(g: &Graph, ell: usize) -> Result<bool> {
    if ell == 3 {
        Ok(has_equal_degree_path3(g))
    } else {
        has_equal_degree_path(g, ell)
    }
}

fn check_limits(v: usize, ell: usize, opts: &SearchOptions) -> Result<()> {
    if !(1..=MAX_ENUM_ORDER).contains(&v) {
        return Err(Error::OrderOutOfRange(v, MAX_ENUM_ORDER));
    }
    if !(1..=MAX_PATH_LENGTH).contains(&ell) {
        return Err(Error::PathLengthOutOfRange(ell));
    }
    if ell > 3 && v > LONG_PATH_ORDER_CAP && !opts.uncapped {
        return Err(Error::Precondition(format!(
            "path length {ell} searches are capped at {LONG_PATH_ORDER_CAP} vertices"
        )));
    }
    Ok(())
}

#[derive(Default)]
struct ScanAcc {
    enumerated: u64,
    histogram: BTreeMap<usize, u64>,
    best: Option<usize>,
    extremal: Vec<Graph>,
}

impl ScanAcc {
    fn visit(&mut self, g: &Graph, ell: usize) {
        self.enumerated += 1;
        if has_configuration(g, ell).expect("path length validated") {
            return;
        }
        let e = g.edge_count();
        *self.histogram.entry(e).or_default() += 1;
        match self.best {
            Some(b) if e < b => {}
            Some(b) if e == b => self.extremal.push(g.clone()),
            _ => {
                self.best = Some(e);
                self.extremal.clear();
                self.extremal.push(g.clone());
            }
        }
    }

    fn merge(&mut self, other: ScanAcc) {
        self.enumerated += other.enumerated;
        for (e, k) in other.histogram {
            *self.histogram.entry(e).or_default() += k;
        }
        match (self.best, other.best) {
            (_, None) => {}
            (Some(a), Some(b)) if b < a => {}
            (Some(a), Some(b)) if a == b => self.extremal.extend(other.extremal),
            _ => {
                self.best = other.best;
                self.extremal = other.extremal;
            }
        }
    }
}

/// Examines every class of `v`-vertex graphs with `lo..=hi` edges and
/// reports the property-free ones. `p` is `None` when none is found.
pub fn scan(v: usize, ell: usize, lo: usize, hi: usize, opts: &SearchOptions) -> Result<(Option<usize>, SearchResult)> {
    check_limits(v, ell, opts)?;
    let start = Instant::now();
    let en = Enumeration::new(v)?.edges(lo, hi)?.jobs(opts.jobs);
    let parts = en.fold_subtrees(ScanAcc::default, |acc, g| acc.visit(g, ell))?;
    let mut acc = ScanAcc::default();
    for part in parts {
        acc.merge(part);
    }
    let mut extremal = Vec::with_capacity(acc.extremal.len());
    for g in &acc.extremal {
        if has_configuration(g, ell)? || Some(g.edge_count()) != acc.best {
            return Err(Error::Internal(format!("extremal graph {} failed its re-check", g.to_graph6())));
        }
        extremal.push(g.to_graph6());
    }
    extremal.sort();
    let result = SearchResult {
        version: SEARCH_RESULT_VERSION,
        v,
        ell,
        p: acc.best.unwrap_or(0),
        extremal,
        histogram: acc.histogram,
        enumerated: acc.enumerated,
        min_edges: lo,
        seconds: if opts.timing { start.elapsed().as_secs_f64() } else { 0.0 },
    };
    Ok((acc.best, result))
}

/// Edge count of the densest property-free graph among a few fixed
/// constructions: complete bipartite graphs, the half graph, and the empty
/// graph.
pub fn construction_floor(v: usize, ell: usize) -> Result<usize> {
    let mut best = 0;
    for a in 1..v {
        let g = complete_bipartite(a, v - a)?;
        if g.edge_count() > best && !has_configuration(&g, ell)? {
            best = g.edge_count();
        }
    }
    if v.is_multiple_of(2) && v >= 2 {
        let g = half_graph(v / 2)?;
        if g.edge_count() > best && !has_configuration(&g, ell)? {
            best = g.edge_count();
        }
    }
    Ok(best)
}

/// Exact `p_ℓ(v)` with every extremal graph.
///
/// Unless a full histogram is requested, only classes with at least as
/// many edges as a property-free construction are classified.
pub fn compute_extremal(v: usize, ell: usize, opts: &SearchOptions) -> Result<SearchResult> {
    check_limits(v, ell, opts)?;
    let max = v * (v - 1) / 2;
    let floor = if opts.full_histogram { 0 } else { construction_floor(v, ell)? };
    let start = Instant::now();
    let (best, mut result) = scan(v, ell, floor, max, opts)?;
    if best.is_none() && floor > 0 {
        result = scan(v, ell, 0, max, opts)?.1;
    }
    if opts.timing {
        result.seconds = start.elapsed().as_secs_f64();
    }
    Ok(result)
}

/// Outcome of [`verify_theorem`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub v: usize,
    pub n: usize,
    /// Edge threshold: `n^2 + n` for odd `v`, `n^2 - 1` for even `v`.
    pub threshold: usize,
    pub p: usize,
    pub extremal: Vec<String>,
    /// The complete bipartite graph the extremal graph must be.
    pub expected: String,
    /// Classes with at least `threshold` edges examined.
    pub enumerated: u64,
}

/// Expected extremal graph and edge count for `v` vertices and length 3.
pub fn theorem_prediction(v: usize) -> Result<(usize, usize, Graph)> {
    if !(5..=MAX_ENUM_ORDER).contains(&v) {
        return Err(Error::Precondition(format!("theorem checks need 5 <= v <= {MAX_ENUM_ORDER}, got {v}")));
    }
    let n = v / 2;
    Ok(if v % 2 == 1 {
        (n, n * n + n, complete_bipartite(n, n + 1)?)
    } else {
        (n, n * n - 1, complete_bipartite(n - 1, n + 1)?)
    })
}

/// Checks that the only property-free `v`-vertex graph (length 3) with at
/// least the threshold number of edges is the predicted complete bipartite
/// graph, with exactly the threshold number of edges.
pub fn verify_theorem(v: usize, opts: &SearchOptions) -> Result<TheoremReport> {
    let (n, threshold, expected) = theorem_prediction(v)?;
    let max = v * (v - 1) / 2;
    let (best, result) = scan(v, 3, threshold, max, opts)?;
    let fail = |msg: String| Err(Error::TheoremFalsified(format!("v = {v}: {msg}")));
    if best != Some(threshold) {
        return fail(format!("densest property-free graph at or above {threshold} edges has {best:?} edges"));
    }
    if result.extremal.len() != 1 {
        return fail(format!("{} extremal graphs: {:?}", result.extremal.len(), result.extremal));
    }
    if result.histogram.len() != 1 {
        return fail(format!("property-free graphs at edge counts {:?}", result.histogram.keys().collect::<Vec<_>>()));
    }
    let g = Graph::from_graph6(&result.extremal[0])?;
    if !are_isomorphic(&g, &expected)? {
        return fail(format!("extremal graph {} is not {}", result.extremal[0], expected.to_graph6()));
    }
    Ok(TheoremReport {
        v,
        n,
        threshold,
        p: threshold,
        extremal: result.extremal,
        expected: expected.to_graph6(),
        enumerated: result.enumerated,
    })
}

/// Graphs with more edges than the odd-order threshold, and how many of
/// them avoid the configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SharpnessReport {
    pub v: usize,
    pub min_edges: usize,
    pub checked: u64,
    /// graph6 of the densest checked graphs without the configuration;
    /// empty exactly when every checked graph contains it.
    pub exceptions: Vec<String>,
}

/// Runs the detector (length 3) on every class of `v`-vertex graphs with
/// at least `min_edges` edges.
pub fn sharpness(v: usize, min_edges: usize, opts: &SearchOptions) -> Result<SharpnessReport> {
    let max = v * (v - 1) / 2;
    if min_edges > max {
        return Ok(SharpnessReport { v, min_edges, checked: 0, exceptions: Vec::new() });
    }
    let (_, result) = scan(v, 3, min_edges, max, opts)?;
    Ok(SharpnessReport { v, min_edges, checked: result.enumerated, exceptions: result.extremal })
}

/// Runs every certificate check on every property-free `v`-vertex graph
/// (length 3).
pub fn certificate_sweep(v: usize, opts: &SearchOptions) -> Result<CertificateReport> {
    if !(1..=MAX_ENUM_ORDER).contains(&v) {
        return Err(Error::OrderOutOfRange(v, MAX_ENUM_ORDER));
    }
    let en = Enumeration::new(v)?.jobs(opts.jobs);
    let parts = en.fold_subtrees(CertificateReport::new, |report, g| {
        if !has_equal_degree_path3(g) {
            report.merge(certify_graph(g).expect("graph is property-free"));
        }
    })?;
    let mut report = CertificateReport::new();
    for id in crate::certificates::GLOBAL_CHECKS.iter().chain(&[ZERO_BLOCKS, COMPLEMENT_IDENTITY]) {
        report.touch(id, v);
    }
    for part in parts {
        report.merge(part);
    }
    Ok(report)
}

/// One row of an extremal table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub ell: usize,
    pub v: usize,
    pub p: usize,
    pub extremal_count: usize,
    /// `(n^2 + n) / 2` for even `v = 2n` and even `ell`.
    pub half_graph_bound: Option<usize>,
    /// Whether `p` equals the half-graph bound.
    pub attained: Option<bool>,
    pub seconds: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct ExtremalTable {
    pub rows: Vec<TableRow>,
}

pub const TABLE_CSV_HEADER: &str = "ell,v,p,extremal_count,half_graph_bound,attained,seconds";

impl ExtremalTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(TABLE_CSV_HEADER);
        out.push('\n');
        let opt = |x: Option<String>| x.unwrap_or_default();
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                r.ell,
                r.v,
                r.p,
                r.extremal_count,
                opt(r.half_graph_bound.map(|b| b.to_string())),
                opt(r.attained.map(|b| b.to_string())),
                r.seconds
            ));
        }
        out
    }
}

/// One row per `(ell, v)` pair, in the order given.
pub fn build_table(ells: &[usize], vs: &[usize], opts: &SearchOptions) -> Result<ExtremalTable> {
    let mut rows = Vec::new();
    for &ell in ells {
        for &v in vs {
            let r = compute_extremal(v, ell, opts)?;
            let half = (v % 2 == 0 && ell % 2 == 0).then(|| {
                let n = v / 2;
                (n * n + n) / 2
            });
            rows.push(TableRow {
                ell,
                v,
                p: r.p,
                extremal_count: r.extremal.len(),
                half_graph_bound: half,
                attained: half.map(|b| r.p == b),
                seconds: r.seconds,
            });
        }
    }
    Ok(ExtremalTable { rows })
}
