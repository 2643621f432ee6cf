//! Exact-integer checkers for the counting identities and lemma
//! inequalities behind the extremal bound, evaluated on concrete graphs.

mod counting;
mod lemmas;
mod partition;

pub use counting::{check_c_lemma, check_complement_identity, check_zero_blocks};
pub use lemmas::{
    beta, certify_graph, check_global_lemmas, check_pairs, BETA_DICHOTOMY, BETA_LOWER_BOUND, BETA_UPPER_BOUND,
    COMMON_NEIGHBOUR_DEGREES, COMPLEMENT_IDENTITY, C_LEMMA, DEGREE_SPLIT, GLOBAL_CHECKS, MAX_DEGREE_BOUND,
    NO_THREE_EQUAL_DEGREES, PAIR_PARTITION, ZERO_BLOCKS,
};
pub use partition::{PairPartition, SecondLevelPartition};

use std::collections::BTreeMap;

use serde::Serialize;

/// Schema tag carried by every serialized check record.
pub const CERT_REPORT_VERSION: &str = "cert-report/1";

/// Result of one check on one instance: the quantities it compared and
/// the comparisons that failed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub quantities: BTreeMap<String, i64>,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.quantities.get(name).copied()
    }

    fn record(&mut self, name: &str, value: i64) -> i64 {
        self.quantities.insert(name.to_string(), value);
        value
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn expect_eq(&mut self, label: &str, left: i64, right: i64) {
        self.expect(left == right, || format!("{label}: {left} != {right}"));
    }

    fn expect_ge(&mut self, label: &str, left: i64, right: i64) {
        self.expect(left >= right, || format!("{label}: {left} < {right}"));
    }
}

/// One failed instance of a check.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub graph6: String,
    /// The vertex pair the check was applied to, if any.
    pub pair: Option<[usize; 2]>,
    pub detail: String,
}

/// Instance and violation counts of one check over a set of graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub version: &'static str,
    pub check: String,
    pub order: usize,
    /// Instances whose hypotheses held and whose conclusion was tested.
    pub instances: u64,
    pub violations: Vec<Violation>,
}

impl CheckRecord {
    pub fn new(check: &str, order: usize) -> Self {
        CheckRecord {
            version: CERT_REPORT_VERSION,
            check: check.to_string(),
            order,
            instances: 0,
            violations: Vec::new(),
        }
    }
}

/// Check records keyed by check id, serialized as a JSON array in id order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CertificateReport {
    records: BTreeMap<String, CheckRecord>,
}

impl CertificateReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn records(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.values()
    }

    pub fn record(&self, check: &str) -> Option<&CheckRecord> {
        self.records.get(check)
    }

    /// Registers `check` so it is reported even with zero instances.
    pub fn touch(&mut self, check: &str, order: usize) -> &mut CheckRecord {
        self.records.entry(check.to_string()).or_insert_with(|| CheckRecord::new(check, order))
    }

    /// Counts one instance of `check` and records its failures, if any.
    pub fn add(&mut self, check: &str, order: usize, graph6: &str, pair: Option<[usize; 2]>, outcome: &CheckOutcome) {
        let rec = self.touch(check, order);
        rec.instances += 1;
        for f in &outcome.failures {
            rec.violations.push(Violation { graph6: graph6.to_string(), pair, detail: f.clone() });
        }
    }

    /// Adds the counts of `other` into `self`; violations are kept sorted.
    pub fn merge(&mut self, other: CertificateReport) {
        for (id, rec) in other.records {
            let mine = self.touch(&id, rec.order);
            mine.instances += rec.instances;
            mine.violations.extend(rec.violations);
            mine.violations.sort();
        }
    }

    pub fn total_violations(&self) -> usize {
        self.records.values().map(|r| r.violations.len()).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.total_violations() == 0
    }
}

impl Serialize for CertificateReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.records.values())
    }
}

/// `k choose 2` for any integer `k` (zero for `k < 2`).
pub(crate) fn choose2(k: i64) -> i64 {
    if k < 2 {
        0
    } else {
        k * (k - 1) / 2
    }
}
