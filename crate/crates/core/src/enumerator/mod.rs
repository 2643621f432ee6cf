//! Isomorphism-free generation of simple graphs by canonical augmentation.
//!
//! A graph on `m + 1` vertices is produced from its parent on `m` vertices
//! by adding vertex `m` with neighbourhood `S`. The child is kept only if
//! the new vertex lies in the canonical deletion orbit: among vertices of
//! minimum degree, those maximising the sum of neighbour degrees, the orbit
//! of the one placed first by the canonical labelling. Siblings are
//! deduplicated by keeping only the lexicographically smallest `S` in each
//! orbit of the parent's automorphism group on subsets.

mod canon;

pub use canon::CANON_MAX;
pub(crate) use canon::{canonicalize, Perm};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order the enumerator and canonical labeller accept.
pub const MAX_ENUM_ORDER: usize = CANON_MAX;

/// Canonical adjacency code: the relabelled upper triangle in graph6 bit
/// order, minimal over the refinement search tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    order: u8,
    code: u64,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Upper-triangle bits, packed big-endian into bytes and zero padded.
    pub fn to_bytes(&self) -> Vec<u8> {
        let n = self.order as usize;
        let nbits = n * n.saturating_sub(1) / 2;
        let aligned = if nbits == 0 { 0 } else { self.code << (64 - nbits) };
        aligned.to_be_bytes()[..nbits.div_ceil(8)].to_vec()
    }

    /// The canonically labelled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.order as usize;
        let nbits = n * n.saturating_sub(1) / 2;
        let mut rows = vec![0u64; n];
        let mut k = nbits;
        for j in 1..n {
            for i in 0..j {
                k -= 1;
                if self.code >> k & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
        }
        Graph::from_rows_unchecked(&rows)
    }
}

fn check_canon_order(g: &Graph) -> Result<()> {
    if g.order() > MAX_ENUM_ORDER {
        return Err(Error::OrderOutOfRange(g.order(), MAX_ENUM_ORDER));
    }
    Ok(())
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    check_canon_order(g)?;
    let c = canonicalize(g.rows(), 0);
    Ok(CanonicalForm { order: g.order() as u8, code: c.code })
}

/// `perm[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    check_canon_order(g)?;
    let c = canonicalize(g.rows(), 0);
    let mut perm = vec![0; g.order()];
    for (pos, &v) in c.lab[..g.order()].iter().enumerate() {
        perm[v as usize] = pos;
    }
    Ok(perm)
}

pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(canonical_form(g)?.to_graph())
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    check_canon_order(g)?;
    check_canon_order(h)?;
    if g.order() != h.order() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// Smallest vertex of each vertex's automorphism orbit.
pub fn automorphism_orbits(g: &Graph) -> Result<Vec<usize>> {
    check_canon_order(g)?;
    let c = canonicalize(g.rows(), 0);
    Ok(c.orbits()[..g.order()].iter().map(|&o| o as usize).collect())
}

/// One generated graph, with automorphism generators when it will be
/// extended further.
#[derive(Clone)]
struct Node {
    order: usize,
    edges: usize,
    rows: [u64; MAX_ENUM_ORDER],
    gens: Vec<Perm>,
}

impl Node {
    fn root() -> Self {
        Node { order: 1, edges: 0, rows: [0; MAX_ENUM_ORDER], gens: Vec::new() }
    }

    fn graph(&self) -> Graph {
        Graph::from_rows_unchecked(&self.rows[..self.order])
    }
}

/// Mask images under one permutation, split into low and high 6-bit halves.
struct MaskPerm {
    lo: [u16; 64],
    hi: [u16; 32],
}

impl MaskPerm {
    fn new(p: &Perm, m: usize) -> Self {
        let mut lo = [0u16; 64];
        let mut hi = [0u16; 32];
        for (mask, slot) in lo.iter_mut().enumerate() {
            *slot = (0..6.min(m)).filter(|&b| mask >> b & 1 == 1).fold(0, |a, b| a | 1 << p[b]);
        }
        for (mask, slot) in hi.iter_mut().enumerate() {
            *slot = (6..m).filter(|&b| mask >> (b - 6) & 1 == 1).fold(0, |a, b| a | 1 << p[b]);
        }
        MaskPerm { lo, hi }
    }

    #[inline]
    fn apply(&self, mask: u16) -> u16 {
        self.lo[(mask & 63) as usize] | self.hi[(mask >> 6) as usize]
    }
}

/// Whether `s` is the smallest mask in its orbit under the group generated
/// by `perms`.
fn is_orbit_minimum(s: u16, perms: &[MaskPerm], stack: &mut Vec<u16>, seen: &mut Vec<u16>) -> bool {
    stack.clear();
    seen.clear();
    stack.push(s);
    seen.push(s);
    while let Some(x) = stack.pop() {
        for p in perms {
            let y = p.apply(x);
            if y < s {
                return false;
            }
            if !seen.contains(&y) {
                seen.push(y);
                stack.push(y);
            }
        }
    }
    true
}

/// Generation parameters shared by all subtrees.
#[derive(Clone, Copy, Debug)]
struct Generator {
    target: usize,
    lo: usize,
    hi: usize,
}

impl Generator {
    /// Largest number of edges the remaining vertices can still add.
    fn headroom(&self, order: usize) -> usize {
        (self.target * (self.target - 1) - order * (order - 1)) / 2
    }

    fn feasible(&self, order: usize, edges: usize) -> bool {
        edges <= self.hi && edges + self.headroom(order) >= self.lo
    }

    /// Calls `out` for every accepted child of `node`, in increasing order
    /// of the new vertex's neighbourhood mask.
    fn children(&self, node: &Node, mut out: impl FnMut(Node)) {
        let m = node.order;
        let child_order = m + 1;
        let need_gens = child_order < self.target;
        let mut deg = [0usize; MAX_ENUM_ORDER];
        for (v, d) in deg.iter_mut().enumerate().take(m) {
            *d = node.rows[v].count_ones() as usize;
        }
        let min_deg = deg[..m].iter().copied().min().unwrap_or(0);
        // below[k]: vertices of degree < k.
        let mut below = [0u16; MAX_ENUM_ORDER + 2];
        for (k, b) in below.iter_mut().enumerate() {
            *b = (0..m).filter(|&v| deg[v] < k).fold(0, |a, v| a | 1 << v);
        }
        let perms: Vec<MaskPerm> = node.gens.iter().map(|g| MaskPerm::new(g, m)).collect();
        let mut stack = Vec::new();
        let mut seen = Vec::new();
        let max_k = (min_deg + 1).min(m);
        for s in 0u16..(1u16 << m) {
            let k = s.count_ones() as usize;
            if k > max_k {
                continue;
            }
            // The new vertex must have minimum degree in the child: every
            // vertex of degree < k needs to gain an edge from it.
            if below[k] & !s != 0 {
                continue;
            }
            let edges = node.edges + k;
            if !self.feasible(child_order, edges) {
                continue;
            }
            if !perms.is_empty() && !is_orbit_minimum(s, &perms, &mut stack, &mut seen) {
                continue;
            }
            let mut rows = node.rows;
            rows[m] = s as u64;
            for v in VertexSet::from_bits(s as u64) {
                rows[v] |= 1 << m;
            }
            if let Some(gens) = accept(&rows[..child_order], k, need_gens) {
                out(Node { order: child_order, edges, rows, gens });
            }
        }
    }

    fn descend(&self, node: Node, stop: usize, sink: &mut impl FnMut(Node)) {
        if node.order == stop {
            sink(node);
            return;
        }
        self.children(&node, |child| self.descend(child, stop, sink));
    }
}

/// Canonical deletion test for the last vertex of `rows`, whose degree is
/// `k` (already the minimum degree). Returns the automorphism generators
/// of the child when accepted, computing them only if `need_gens`.
fn accept(rows: &[u64], k: usize, need_gens: bool) -> Option<Vec<Perm>> {
    let n = rows.len();
    let last = n - 1;
    let mut cand = 0u64;
    for (v, r) in rows.iter().enumerate() {
        if r.count_ones() as usize == k {
            cand |= 1 << v;
        }
    }
    if cand.count_ones() > 1 {
        let score = |v: usize| -> u32 { VertexSet::from_bits(rows[v]).iter().map(|y| rows[y].count_ones()).sum() };
        let mut best = 0;
        let mut top = 0u64;
        for v in VertexSet::from_bits(cand) {
            let f = score(v);
            if f > best || top == 0 {
                if f > best {
                    top = 0;
                }
                best = best.max(f);
                top |= 1 << v;
            } else if f == best {
                top |= 1 << v;
            }
        }
        cand = top;
    }
    if cand >> last & 1 == 0 {
        return None;
    }
    if cand.count_ones() == 1 {
        return Some(if need_gens { canonicalize(rows, 0).gens } else { Vec::new() });
    }
    let c = canonicalize(rows, cand);
    let orbits = c.orbits();
    (orbits[last] == orbits[c.lab[0] as usize]).then_some(c.gens)
}

/// Enumeration of one representative per isomorphism class of graphs on a
/// fixed number of vertices, optionally restricted to an edge-count range.
#[derive(Clone, Debug)]
pub struct Enumeration {
    gen: Generator,
    jobs: usize,
}

impl Enumeration {
    pub fn new(vertices: usize) -> Result<Self> {
        if !(1..=MAX_ENUM_ORDER).contains(&vertices) {
            return Err(Error::OrderOutOfRange(vertices, MAX_ENUM_ORDER));
        }
        let max = vertices * (vertices - 1) / 2;
        Ok(Enumeration { gen: Generator { target: vertices, lo: 0, hi: max }, jobs: 1 })
    }

    /// Restricts to graphs with `lo..=hi` edges.
    pub fn edges(mut self, lo: usize, hi: usize) -> Result<Self> {
        let max = self.gen.target * (self.gen.target - 1) / 2;
        if lo > hi || hi > max {
            return Err(Error::Precondition(format!(
                "edge range {lo}..={hi} invalid for {} vertices",
                self.gen.target
            )));
        }
        self.gen.lo = lo;
        self.gen.hi = hi;
        Ok(self)
    }

    /// Worker threads for [`Enumeration::fold_subtrees`]; at least 1.
    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn vertices(&self) -> usize {
        self.gen.target
    }

    /// Visits every class in a fixed order on the calling thread.
    pub fn for_each(&self, mut visit: impl FnMut(&Graph)) -> u64 {
        let mut count = 0;
        if !self.gen.feasible(1, 0) {
            return 0;
        }
        self.gen.descend(Node::root(), self.gen.target, &mut |node: Node| {
            count += 1;
            visit(&node.graph());
        });
        count
    }

    /// Level at which the search tree is cut into independent subtrees.
    fn split_level(&self) -> usize {
        self.gen.target.saturating_sub(3).max(1)
    }

    /// Folds each top-level subtree into its own accumulator, possibly in
    /// parallel, and returns the accumulators in subtree order. Graphs
    /// inside a subtree are folded in the same order as [`for_each`].
    ///
    /// [`for_each`]: Enumeration::for_each
    pub fn fold_subtrees<A, I, F>(&self, init: I, fold: F) -> Result<Vec<A>>
    where
        A: Send,
        I: Fn() -> A + Sync,
        F: Fn(&mut A, &Graph) + Sync,
    {
        if !self.gen.feasible(1, 0) {
            return Ok(Vec::new());
        }
        let split = self.split_level();
        let mut roots = Vec::new();
        self.gen.descend(Node::root(), split, &mut |node| roots.push(node));
        let work = |root: Node| -> A {
            let mut acc = init();
            self.gen.descend(root, self.gen.target, &mut |node: Node| fold(&mut acc, &node.graph()));
            acc
        };
        if self.jobs == 1 {
            return Ok(roots.into_iter().map(work).collect());
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
        Ok(pool.install(|| roots.into_par_iter().map(work).collect()))
    }

    /// Number of classes, counted in parallel when `jobs > 1`.
    pub fn count(&self) -> Result<u64> {
        Ok(self.fold_subtrees(|| 0u64, |c, _| *c += 1)?.into_iter().sum())
    }
}

/// Visits one representative per isomorphism class of `v`-vertex graphs
/// with `lo..=hi` edges and returns how many were visited.
pub fn enumerate_graphs(v: usize, edge_range: (usize, usize), visitor: impl FnMut(&Graph)) -> Result<u64> {
    Ok(Enumeration::new(v)?.edges(edge_range.0, edge_range.1)?.for_each(visitor))
}
