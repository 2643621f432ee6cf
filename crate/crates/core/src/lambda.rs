//! The degree-sum maximisation `λ(n, Δ, β, |B|)` over the neighbourhood of
//! a maximum-degree vertex in an even-order graph.
//!
//! `𝒜` is a sequence of `Δ - |B|` distinct integers in `1..Δ`, `ℬ` a
//! sequence of `2n - 1 - Δ` integers in `0..Δ`, and no value above `β`
//! may occur twice in `𝒜 ∪ ℬ`. `λ` is the largest possible total.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest `|𝒜| + |ℬ|` accepted by [`lambda_bruteforce`].
pub const BRUTEFORCE_MAX_ELEMENTS: usize = 12;

/// Largest number of `(𝒜, ℬ)` pairs [`lambda_naive`] will visit.
pub const NAIVE_MAX_CONFIGURATIONS: u128 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LambdaCase {
    /// `|B| <= β`.
    One,
    /// `|B| > β` and `Δ + |B| - 2n >= β`.
    Two,
    /// `|B| > β` and `Δ + |B| - 2n < β`.
    Three,
}

impl LambdaCase {
    pub fn number(self) -> u8 {
        match self {
            LambdaCase::One => 1,
            LambdaCase::Two => 2,
            LambdaCase::Three => 3,
        }
    }
}

impl fmt::Display for LambdaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// Parameters of one maximisation, validated against the domain
/// `n >= 6`, `n + 3 <= Δ <= 2n - 1`, `3 <= β <= Δ - 2`,
/// `2n - Δ + 2 <= |B| <= Δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LambdaInstance {
    pub n: usize,
    pub delta: usize,
    pub beta: usize,
    pub b_size: usize,
}

impl LambdaInstance {
    pub fn new(n: usize, delta: usize, beta: usize, b_size: usize) -> Result<Self> {
        let bad = |what: String| {
            Err(Error::LambdaDomain(format!("(n={n}, delta={delta}, beta={beta}, |B|={b_size}): {what}")))
        };
        if n < 6 {
            return bad("need n >= 6".into());
        }
        if delta < n + 3 || delta > 2 * n - 1 {
            return bad(format!("need {} <= delta <= {}", n + 3, 2 * n - 1));
        }
        if beta < 3 || beta + 2 > delta {
            return bad(format!("need 3 <= beta <= {}", delta - 2));
        }
        if b_size + delta < 2 * n + 2 || b_size > delta {
            return bad(format!("need {} <= |B| <= {delta}", 2 * n + 2 - delta));
        }
        Ok(LambdaInstance { n, delta, beta, b_size })
    }

    /// Length of `𝒜`.
    pub fn size_a(&self) -> usize {
        self.delta - self.b_size
    }

    /// Length of `ℬ`.
    pub fn size_b(&self) -> usize {
        2 * self.n - 1 - self.delta
    }

    pub fn case(&self) -> LambdaCase {
        if self.b_size <= self.beta {
            LambdaCase::One
        } else if self.delta + self.b_size >= 2 * self.n + self.beta {
            LambdaCase::Two
        } else {
            LambdaCase::Three
        }
    }

    /// Every instance in the domain for this `n`, ordered by
    /// `(delta, beta, b_size)`.
    pub fn grid(n: usize) -> Vec<LambdaInstance> {
        let mut out = Vec::new();
        if n < 6 {
            return out;
        }
        for delta in n + 3..=2 * n - 1 {
            for beta in 3..=delta - 2 {
                for b_size in 2 * n + 2 - delta..=delta {
                    out.push(LambdaInstance { n, delta, beta, b_size });
                }
            }
        }
        out
    }
}

/// `lo + (lo + 1) + ... + hi`, zero when `lo > hi`.
fn range_sum(lo: usize, hi: usize) -> u64 {
    if lo > hi {
        return 0;
    }
    let (lo, hi) = (lo as u64, hi as u64);
    (lo + hi) * (hi - lo + 1) / 2
}

/// `λ` from the closed form of the instance's case.
pub fn lambda_closed(inst: &LambdaInstance) -> u64 {
    let LambdaInstance { n, delta, beta, b_size } = *inst;
    match inst.case() {
        LambdaCase::One => range_sum(b_size, delta - 1) + (2 * n - 1 - delta) as u64 * beta as u64,
        LambdaCase::Two => range_sum(delta + b_size + 1 - 2 * n, delta - 1),
        LambdaCase::Three => range_sum(beta + 1, delta - 1) + (2 * n + beta - b_size - delta) as u64 * beta as u64,
    }
}

/// `λ` by exhaustive search over how the values above `β` are shared
/// between `𝒜`, `ℬ` and neither, and over every choice of the remaining
/// `𝒜` values in `1..=β`; the rest of `ℬ` is filled with `β`.
pub fn lambda_bruteforce(inst: &LambdaInstance) -> Result<u64> {
    let (size_a, size_b) = (inst.size_a(), inst.size_b());
    if size_a + size_b > BRUTEFORCE_MAX_ELEMENTS {
        return Err(Error::LambdaTooLarge(size_a + size_b));
    }
    let beta = inst.beta;
    // best_low[k]: largest sum of k distinct values in 1..=beta.
    let mut best_low = vec![None::<u64>; beta + 1];
    for mask in 0u32..1 << beta {
        let k = mask.count_ones() as usize;
        let sum: u64 = (0..beta).filter(|&i| mask >> i & 1 == 1).map(|i| i as u64 + 1).sum();
        if best_low[k].is_none_or(|b| sum > b) {
            best_low[k] = Some(sum);
        }
    }
    let high: Vec<u64> = (beta + 1..inst.delta).map(|v| v as u64).collect();
    let mut best = None::<u64>;
    let mut digits = vec![0u8; high.len()];
    loop {
        let (mut na, mut nb, mut sa, mut sb) = (0usize, 0usize, 0u64, 0u64);
        for (&d, &h) in digits.iter().zip(&high) {
            match d {
                1 => (na, sa) = (na + 1, sa + h),
                2 => (nb, sb) = (nb + 1, sb + h),
                _ => {}
            }
        }
        if na <= size_a && size_a - na <= beta && nb <= size_b {
            if let Some(low) = best_low[size_a - na] {
                let total = sa + sb + low + (size_b - nb) as u64 * beta as u64;
                best = Some(best.map_or(total, |b: u64| b.max(total)));
            }
        }
        // Next assignment in base 3.
        let mut i = 0;
        while i < digits.len() && digits[i] == 2 {
            digits[i] = 0;
            i += 1;
        }
        if i == digits.len() {
            break;
        }
        digits[i] += 1;
    }
    best.ok_or_else(|| Error::LambdaDomain(format!("{inst:?} admits no configuration")))
}

/// Outcome of [`lambda_naive`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NaiveLambda {
    pub max: u64,
    /// Best total among configurations with some `ℬ` value below `β`.
    pub max_with_small_b: Option<u64>,
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `λ` by enumerating every subset `𝒜` and every multiset `ℬ` literally.
/// Used to validate the reduction in [`lambda_bruteforce`] on small
/// instances.
pub fn lambda_naive(inst: &LambdaInstance) -> Result<NaiveLambda> {
    let (size_a, size_b, delta, beta) = (inst.size_a(), inst.size_b(), inst.delta, inst.beta);
    let configs = binomial(delta as u128 - 1, size_a as u128) * binomial((delta + size_b) as u128 - 1, size_b as u128);
    if configs > NAIVE_MAX_CONFIGURATIONS {
        return Err(Error::LambdaTooLarge(size_a + size_b));
    }
    let mut result = NaiveLambda { max: 0, max_with_small_b: None };
    let mut found = false;
    let mut b = vec![0usize; size_b];
    // 𝒜 as a bitmask over 1..delta (bit k-1 for value k).
    for a_mask in 0u32..1 << (delta - 1) {
        if a_mask.count_ones() as usize != size_a {
            continue;
        }
        let a_sum: u64 = (0..delta - 1).filter(|&i| a_mask >> i & 1 == 1).map(|i| i as u64 + 1).sum();
        // ℬ as a non-decreasing sequence over 0..delta.
        b.iter_mut().for_each(|x| *x = 0);
        loop {
            let mut used = a_mask;
            let mut ok = true;
            for &x in &b {
                if x > beta {
                    if used >> (x - 1) & 1 == 1 {
                        ok = false;
                        break;
                    }
                    used |= 1 << (x - 1);
                }
            }
            if ok {
                let total = a_sum + b.iter().map(|&x| x as u64).sum::<u64>();
                if !found || total > result.max {
                    result.max = total;
                    found = true;
                }
                if b.iter().any(|&x| x < beta) && result.max_with_small_b.is_none_or(|m| total > m) {
                    result.max_with_small_b = Some(total);
                }
            }
            // Next non-decreasing sequence.
            let Some(i) = (0..size_b).rev().find(|&i| b[i] + 1 < delta) else { break };
            let next = b[i] + 1;
            b[i..].iter_mut().for_each(|x| *x = next);
        }
    }
    if !found {
        return Err(Error::LambdaDomain(format!("{inst:?} admits no configuration")));
    }
    Ok(result)
}

/// Neighbourhood of `v0` split by degree at `threshold = 2n - Δ + 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSplit {
    pub threshold: usize,
    /// Neighbours of degree at least `threshold`.
    pub a: VertexSet,
    /// Neighbours of degree below `threshold`.
    pub b: VertexSet,
}

/// Splits `N(v0)` of an even-order graph by degree, where `v0` has maximum
/// degree `Δ`.
pub fn appendix_split(g: &Graph, v0: usize) -> Result<DegreeSplit> {
    let order = g.order();
    if v0 >= order {
        return Err(Error::VertexOutOfRange { vertex: v0, order });
    }
    if order % 2 == 1 {
        return Err(Error::Precondition(format!("the split needs even order, got {order}")));
    }
    let delta = g.max_degree();
    if g.degree(v0) != delta {
        return Err(Error::Precondition(format!("vertex {v0} has degree {} below the maximum {delta}", g.degree(v0))));
    }
    let threshold = order + 2 - delta;
    let nbrs = g.neighbors(v0);
    let a: VertexSet = nbrs.iter().filter(|&w| g.degree(w) >= threshold).collect();
    Ok(DegreeSplit { threshold, a, b: nbrs.difference(a) })
}

/// One row of a grid sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaRow {
    pub n: usize,
    pub delta: usize,
    pub beta: usize,
    pub b_size: usize,
    pub case: u8,
    pub closed: u64,
    pub oracle: u64,
    pub equal: bool,
}

pub const LAMBDA_CSV_HEADER: &str = "n,delta,beta,b_size,case,closed,oracle,equal";

impl LambdaRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.n, self.delta, self.beta, self.b_size, self.case, self.closed, self.oracle, self.equal
        )
    }
}

/// Closed form and oracle on every domain instance for each `n` in `ns`,
/// in grid order.
pub fn lambda_grid(ns: impl IntoIterator<Item = usize>) -> Result<Vec<LambdaRow>> {
    let insts: Vec<LambdaInstance> = ns.into_iter().flat_map(LambdaInstance::grid).collect();
    insts
        .par_iter()
        .map(|inst| {
            let closed = lambda_closed(inst);
            let oracle = lambda_bruteforce(inst)?;
            Ok(LambdaRow {
                n: inst.n,
                delta: inst.delta,
                beta: inst.beta,
                b_size: inst.b_size,
                case: inst.case().number(),
                closed,
                oracle,
                equal: closed == oracle,
            })
        })
        .collect()
}
