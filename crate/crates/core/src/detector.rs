//! Detection of two equal-degree vertices joined by a simple path of a
//! given length.
//!
//! All paths here are simple: a path of length `len` visits `len + 1`
//! distinct vertices. When several witnesses exist the lexicographically
//! smallest vertex sequence is returned.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Adjacency, Graph, VertexSet};

/// Longest path length the general detector accepts.
pub const MAX_PATH_LENGTH: usize = 8;

/// A simple path whose two endpoints have the same degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Witness {
    vertices: Vec<usize>,
}

impl Witness {
    pub fn new(vertices: Vec<usize>) -> Self {
        Witness { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges on the path.
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }
}

fn check_length(len: usize) -> Result<()> {
    if (1..=MAX_PATH_LENGTH).contains(&len) {
        Ok(())
    } else {
        Err(Error::PathLengthOutOfRange(len))
    }
}

/// Length-3 detector: buckets `N(a)\{b}` by degree for every edge `ab` and
/// looks for a matching degree in `N(b)\{a}`. Runs in `O(sum of deg^2)`.
fn path3_exists_by_buckets<G: Adjacency>(g: &G) -> bool {
    let n = g.order();
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let maxd = deg.iter().copied().max().unwrap_or(0);
    // Per degree: how many bucketed vertices, and one of them.
    let mut count = vec![0u32; maxd + 1];
    let mut some = vec![usize::MAX; maxd + 1];
    let mut touched = Vec::new();
    for a in 0..n {
        for b in g.neighbor_iter(a).filter(|&b| b > a) {
            for x in g.neighbor_iter(a).filter(|&x| x != b) {
                let d = deg[x];
                if count[d] == 0 {
                    touched.push(d);
                    some[d] = x;
                }
                count[d] += 1;
            }
            let hit = g.neighbor_iter(b).filter(|&y| y != a).any(|y| {
                let d = deg[y];
                count[d] >= 2 || (count[d] == 1 && some[d] != y)
            });
            for d in touched.drain(..) {
                count[d] = 0;
            }
            if hit {
                return true;
            }
        }
    }
    false
}

/// Smallest `(x, a, b, y)` with `x-a-b-y` a simple path and `d(x) = d(y)`.
fn smallest_path3<G: Adjacency>(g: &G) -> Option<Witness> {
    let n = g.order();
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut class_size = vec![0usize; n];
    for &d in &deg {
        class_size[d] += 1;
    }
    for x in 0..n {
        if class_size[deg[x]] < 2 {
            continue;
        }
        for a in g.neighbor_iter(x) {
            for b in g.neighbor_iter(a).filter(|&b| b != x) {
                if let Some(y) = g.neighbor_iter(b).find(|&y| y != a && y != x && deg[y] == deg[x]) {
                    return Some(Witness::new(vec![x, a, b, y]));
                }
            }
        }
    }
    None
}

/// Lexicographically smallest equal-degree path of length three, if any.
pub fn find_equal_degree_path3<G: Adjacency>(g: &G) -> Option<Witness> {
    if !path3_exists_by_buckets(g) {
        return None;
    }
    let w = smallest_path3(g);
    debug_assert!(w.is_some());
    w
}

/// Boolean length-3 check on a bitset graph; the hot path of the search.
pub fn has_equal_degree_path3(g: &Graph) -> bool {
    let n = g.order();
    let rows = g.rows();
    // Degree classes with at least two members, as bit masks.
    let mut class = [0u64; 65];
    let mut present = 0u128;
    for (v, r) in rows.iter().enumerate() {
        let d = r.count_ones() as usize;
        class[d] |= 1 << v;
        present |= 1 << d;
    }
    let mut masks = [0u64; 65];
    let mut m = 0;
    while present != 0 {
        let d = present.trailing_zeros() as usize;
        present &= present - 1;
        if class[d].count_ones() >= 2 {
            masks[m] = class[d];
            m += 1;
        }
    }
    if m == 0 {
        return false;
    }
    for a in 0..n {
        let ra = rows[a];
        for b in VertexSet::from_bits(ra & crate::graph::above(a)) {
            let xs = ra & !(1 << b);
            let ys = rows[b] & !(1 << a);
            if xs == 0 || ys == 0 {
                continue;
            }
            for &mask in &masks[..m] {
                let x = xs & mask;
                let y = ys & mask;
                if x != 0 && y != 0 && !(x == y && x.is_power_of_two()) {
                    return true;
                }
            }
        }
    }
    false
}

/// Lexicographically smallest equal-degree path of length `len`.
pub fn find_equal_degree_path<G: Adjacency>(g: &G, len: usize) -> Result<Option<Witness>> {
    check_length(len)?;
    if len == 3 {
        return Ok(find_equal_degree_path3(g));
    }
    Ok(smallest_path_dfs(g, len))
}

fn smallest_path_dfs<G: Adjacency>(g: &G, len: usize) -> Option<Witness> {
    let n = g.order();
    if len >= n {
        return None;
    }
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut class_size = vec![0usize; n];
    for &d in &deg {
        class_size[d] += 1;
    }
    let mut path = Vec::with_capacity(len + 1);
    let mut on_path = vec![false; n];
    for x in 0..n {
        if class_size[deg[x]] < 2 {
            continue;
        }
        path.push(x);
        on_path[x] = true;
        if extend(g, &deg, len, &mut path, &mut on_path) {
            return Some(Witness::new(path));
        }
        on_path[x] = false;
        path.pop();
    }
    None
}

fn extend<G: Adjacency>(g: &G, deg: &[usize], len: usize, path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
    let cur = *path.last().expect("path is never empty");
    let target = deg[path[0]];
    if path.len() == len {
        if let Some(y) = g.neighbor_iter(cur).find(|&y| !on_path[y] && deg[y] == target) {
            path.push(y);
            return true;
        }
        return false;
    }
    for next in g.neighbor_iter(cur) {
        if on_path[next] {
            continue;
        }
        path.push(next);
        on_path[next] = true;
        if extend(g, deg, len, path, on_path) {
            return true;
        }
        on_path[next] = false;
        path.pop();
    }
    false
}

/// Boolean check for any supported length, using bitsets.
pub fn has_equal_degree_path(g: &Graph, len: usize) -> Result<bool> {
    check_length(len)?;
    if len == 3 {
        return Ok(has_equal_degree_path3(g));
    }
    let n = g.order();
    if len >= n {
        return Ok(false);
    }
    let rows = g.rows();
    let mut class = [0u64; 65];
    for (v, r) in rows.iter().enumerate() {
        class[r.count_ones() as usize] |= 1 << v;
    }
    for x in 0..n {
        let target = class[g.degree(x)] & !(1 << x);
        if target == 0 {
            continue;
        }
        if dfs_bits(rows, x, 1 << x, len, target) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn dfs_bits(rows: &[u64], cur: usize, visited: u64, remaining: usize, target: u64) -> bool {
    let next = rows[cur] & !visited;
    if remaining == 1 {
        return next & target != 0;
    }
    VertexSet::from_bits(next).iter().any(|w| dfs_bits(rows, w, visited | 1 << w, remaining - 1, target))
}

/// Whether a simple path `u - a - b - v` exists.
pub fn path3_exists_between(g: &Graph, u: usize, v: usize) -> Result<bool> {
    for w in [u, v] {
        if w >= g.order() {
            return Err(Error::VertexOutOfRange { vertex: w, order: g.order() });
        }
    }
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let rows = g.rows();
    let nv = rows[v] & !(1 << u);
    Ok(VertexSet::from_bits(rows[u] & !(1 << v)).iter().any(|a| rows[a] & nv != 0))
}

/// Checks every witness invariant against `g`.
pub fn verify_witness<G: Adjacency>(g: &G, w: &Witness) -> bool {
    let vs = w.vertices();
    let n = g.order();
    if vs.len() < 2 || vs.iter().any(|&v| v >= n) {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in vs {
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    vs.windows(2).all(|p| g.is_adjacent(p[0], p[1])) && g.degree(vs[0]) == g.degree(vs[vs.len() - 1])
}
