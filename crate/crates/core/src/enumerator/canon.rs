//! Canonical labelling by individualisation and equitable refinement.
//!
//! The search tree is explored depth first; two leaves with the same
//! relabelled adjacency code yield an automorphism, and automorphisms that
//! fix the current prefix prune sibling branches in the same orbit. The
//! canonical code is the minimum over the leaves that are reached.

/// Largest order handled by the canonical labeller (`C(11,2) = 55` code bits).
pub const CANON_MAX: usize = 11;

pub(crate) type Perm = [u8; CANON_MAX];

#[derive(Clone, Copy)]
struct Partition {
    n: u8,
    cells: u8,
    /// Vertex at each position.
    lab: [u8; CANON_MAX],
    /// Cell length, valid at the first position of each cell.
    len: [u8; CANON_MAX],
}

impl Partition {
    /// Ordered partition from consecutive blocks of `order`.
    fn from_blocks(n: usize, order: &[u8], blocks: &[usize]) -> Self {
        let mut p = Partition { n: n as u8, cells: 0, lab: [0; CANON_MAX], len: [0; CANON_MAX] };
        p.lab[..n].copy_from_slice(&order[..n]);
        let mut s = 0;
        for &b in blocks.iter().filter(|&&b| b > 0) {
            p.len[s] = b as u8;
            p.cells += 1;
            s += b;
        }
        debug_assert_eq!(s, n);
        p
    }

    #[inline]
    fn is_discrete(&self) -> bool {
        self.cells == self.n
    }

    #[inline]
    fn cell_mask(&self, s: usize) -> u64 {
        self.lab[s..s + self.len[s] as usize].iter().fold(0, |m, &v| m | 1 << v)
    }

    /// Refines to the coarsest equitable partition finer than `self`,
    /// using the cells starting at the positions in `active` as the initial
    /// splitters.
    fn refine(&mut self, rows: &[u64], mut active: u16) {
        let n = self.n as usize;
        while active != 0 && !self.is_discrete() {
            let w = active.trailing_zeros() as usize;
            active &= active - 1;
            let wmask = self.cell_mask(w);
            let mut s = 0;
            while s < n {
                let l = self.len[s] as usize;
                if l > 1 {
                    let mut cnt = [0u8; CANON_MAX];
                    let mut differ = false;
                    for k in s..s + l {
                        cnt[k] = (rows[self.lab[k] as usize] & wmask).count_ones() as u8;
                        differ |= cnt[k] != cnt[s];
                    }
                    if differ {
                        // Insertion sort of the cell by count.
                        for k in s + 1..s + l {
                            let (c, v) = (cnt[k], self.lab[k]);
                            let mut j = k;
                            while j > s && cnt[j - 1] > c {
                                cnt[j] = cnt[j - 1];
                                self.lab[j] = self.lab[j - 1];
                                j -= 1;
                            }
                            cnt[j] = c;
                            self.lab[j] = v;
                        }
                        let was_active = active >> s & 1 == 1;
                        let mut frags = [(0usize, 0usize); CANON_MAX];
                        let mut nf = 0;
                        let mut start = s;
                        for k in s + 1..=s + l {
                            if k == s + l || cnt[k] != cnt[start] {
                                frags[nf] = (start, k - start);
                                nf += 1;
                                start = k;
                            }
                        }
                        let largest = (0..nf).fold(0, |b, i| if frags[i].1 > frags[b].1 { i } else { b });
                        for (i, &(fs, fl)) in frags[..nf].iter().enumerate() {
                            self.len[fs] = fl as u8;
                            if was_active || i != largest {
                                active |= 1 << fs;
                            }
                        }
                        self.cells += nf as u8 - 1;
                    }
                }
                s += l;
            }
        }
    }

    fn first_nontrivial_cell(&self) -> Option<usize> {
        let n = self.n as usize;
        let mut s = 0;
        while s < n {
            if self.len[s] > 1 {
                return Some(s);
            }
            s += self.len[s] as usize;
        }
        None
    }

    fn individualize(&mut self, s: usize, v: u8, rows: &[u64]) {
        let k = (s..s + self.len[s] as usize).find(|&k| self.lab[k] == v).expect("vertex in target cell");
        self.lab.swap(s, k);
        self.len[s + 1] = self.len[s] - 1;
        self.len[s] = 1;
        self.cells += 1;
        self.refine(rows, 1 << s);
    }
}

/// Adjacency code of `rows` relabelled so that position `i` holds `lab[i]`,
/// bits in graph6 order, first bit most significant.
#[inline]
fn leaf_code(rows: &[u64], lab: &[u8]) -> u64 {
    let mut code = 0u64;
    for j in 1..lab.len() {
        let r = rows[lab[j] as usize];
        for &li in &lab[..j] {
            code = code << 1 | (r >> li & 1);
        }
    }
    code
}

/// Result of a canonical labelling run.
#[derive(Clone, Debug)]
pub(crate) struct Canon {
    pub n: usize,
    pub code: u64,
    /// Canonical order: position `i` holds the original vertex `lab[i]`.
    pub lab: Perm,
    /// Generators of the automorphism group (as vertex images).
    pub gens: Vec<Perm>,
}

impl Canon {
    /// Orbit representative (smallest vertex) of each vertex.
    pub fn orbits(&self) -> [u8; CANON_MAX] {
        orbits_of(self.n, &self.gens, 0)
    }
}

fn find(parent: &mut [u8; CANON_MAX], mut x: u8) -> u8 {
    while parent[x as usize] != x {
        let p = parent[x as usize];
        parent[x as usize] = parent[p as usize];
        x = p;
    }
    x
}

/// Orbits of the group generated by those `gens` that fix every vertex of
/// `fixed`; each entry is the smallest vertex of its orbit.
pub(crate) fn orbits_of(n: usize, gens: &[Perm], fixed: u64) -> [u8; CANON_MAX] {
    let mut parent = [0u8; CANON_MAX];
    for (i, p) in parent.iter_mut().enumerate().take(n) {
        *p = i as u8;
    }
    for g in gens {
        if (0..n).any(|v| fixed >> v & 1 == 1 && g[v] as usize != v) {
            continue;
        }
        for (v, &image) in g.iter().enumerate().take(n) {
            let a = find(&mut parent, v as u8);
            let b = find(&mut parent, image);
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi as usize] = lo;
            }
        }
    }
    for v in 0..n {
        parent[v] = find(&mut parent, v as u8);
    }
    parent
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    first: Option<(u64, Perm)>,
    best: (u64, Perm),
    gens: Vec<Perm>,
}

impl Search<'_> {
    fn record_automorphism(&mut self, from: &Perm, to: &Perm) {
        let mut g = [0u8; CANON_MAX];
        for i in 0..self.n {
            g[from[i] as usize] = to[i];
        }
        if (0..self.n).any(|v| g[v] as usize != v) && !self.gens.contains(&g) {
            self.gens.push(g);
        }
    }

    fn leaf(&mut self, p: &Partition) {
        let code = leaf_code(self.rows, &p.lab[..self.n]);
        match self.first {
            None => {
                self.first = Some((code, p.lab));
                self.best = (code, p.lab);
            }
            Some((fc, flab)) => {
                if code == fc {
                    self.record_automorphism(&flab, &p.lab);
                } else if code == self.best.0 {
                    let blab = self.best.1;
                    self.record_automorphism(&blab, &p.lab);
                } else if code < self.best.0 {
                    self.best = (code, p.lab);
                }
            }
        }
    }

    fn explore(&mut self, p: &Partition, fixed: u64) {
        let Some(s) = p.first_nontrivial_cell() else {
            self.leaf(p);
            return;
        };
        let len = p.len[s] as usize;
        let mut cell = [0u8; CANON_MAX];
        cell[..len].copy_from_slice(&p.lab[s..s + len]);
        let mut explored = 0u64;
        let mut orbit_gens = 0;
        let mut orbit = [0u8; CANON_MAX];
        for &v in &cell[..len] {
            if explored != 0 && !self.gens.is_empty() {
                if orbit_gens != self.gens.len() {
                    orbit = orbits_of(self.n, &self.gens, fixed);
                    orbit_gens = self.gens.len();
                }
                let rep = orbit[v as usize];
                if (0..self.n).any(|u| explored >> u & 1 == 1 && orbit[u] == rep) {
                    continue;
                }
            }
            explored |= 1 << v;
            let mut child = *p;
            child.individualize(s, v, self.rows);
            self.explore(&child, fixed | 1 << v);
        }
    }
}

/// Canonically labels the graph given by `rows` (order `rows.len() <= 11`).
///
/// `first_cell`, when non-empty, is placed as the first cell of the initial
/// ordered partition; it must be defined by an isomorphism invariant for
/// the result to be canonical.
pub(crate) fn canonicalize(rows: &[u64], first_cell: u64) -> Canon {
    let n = rows.len();
    assert!(n <= CANON_MAX, "canonical labelling supports at most {CANON_MAX} vertices");
    let mut order = [0u8; CANON_MAX];
    let mut k = 0;
    for v in 0..n {
        if first_cell >> v & 1 == 1 {
            order[k] = v as u8;
            k += 1;
        }
    }
    let head = k;
    for v in 0..n {
        if first_cell >> v & 1 == 0 {
            order[k] = v as u8;
            k += 1;
        }
    }
    let mut p = Partition::from_blocks(n, &order, &[head, n - head]);
    if n > 0 {
        let active = if head > 0 && head < n { 1 | 1 << head } else { 1 };
        p.refine(rows, active);
    }
    let mut search = Search { rows, n, first: None, best: (0, [0; CANON_MAX]), gens: Vec::new() };
    search.explore(&p, 0);
    Canon { n, code: search.best.0, lab: search.best.1, gens: search.gens }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows_of(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
        let mut r = vec![0u64; n];
        for &(a, b) in edges {
            r[a] |= 1 << b;
            r[b] |= 1 << a;
        }
        r
    }

    fn permute(rows: &[u64], perm: &[usize]) -> Vec<u64> {
        let mut out = vec![0u64; rows.len()];
        for (i, &r) in rows.iter().enumerate() {
            for j in 0..rows.len() {
                if r >> j & 1 == 1 {
                    out[perm[i]] |= 1 << perm[j];
                }
            }
        }
        out
    }

    #[test]
    fn cycle_relabelled_has_same_code() {
        let c4 = rows_of(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let other = permute(&c4, &[2, 0, 3, 1]);
        assert_eq!(canonicalize(&c4, 0).code, canonicalize(&other, 0).code);
    }

    #[test]
    fn symmetric_graphs_terminate_with_full_orbits() {
        let empty = vec![0u64; 11];
        let c = canonicalize(&empty, 0);
        assert_eq!(c.code, 0);
        assert!(c.orbits()[..11].iter().all(|&o| o == 0));
        let complete: Vec<u64> = (0..11).map(|i| ((1u64 << 11) - 1) & !(1 << i)).collect();
        let c = canonicalize(&complete, 0);
        assert_eq!(c.code, (1u64 << 55) - 1);
        // Petersen graph: vertex transitive.
        let pet = rows_of(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        );
        let c = canonicalize(&pet, 0);
        assert!(c.orbits()[..10].iter().all(|&o| o == 0));
    }

    #[test]
    fn canonical_order_reproduces_code() {
        let g = rows_of(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (0, 5)]);
        let c = canonicalize(&g, 0);
        assert_eq!(leaf_code(&g, &c.lab[..6]), c.code);
    }
}
