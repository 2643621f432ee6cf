//! Immutable simple graphs on at most 64 vertices.
//!
//! Each vertex's neighbourhood is one `u64`, so set operations on
//! neighbourhoods are single instructions. Vertices are dense labels
//! `0..order`.

mod graph6;
mod vertex_set;
mod wide;

pub use graph6::{from_graph6, read_graph6_lines, to_graph6};
pub use vertex_set::{Members, VertexSet};
pub use wide::WideGraph;

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

/// Read-only adjacency queries shared by [`Graph`] and [`WideGraph`].
pub trait Adjacency {
    fn order(&self) -> usize;
    fn degree(&self, v: usize) -> usize;
    fn is_adjacent(&self, u: usize, v: usize) -> bool;
    /// Neighbours of `v` in increasing order.
    fn neighbor_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_;
}

/// A simple undirected graph with `1..=64` vertices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    order: usize,
    rows: Vec<u64>,
}

/// Edge count inside a block and the number of missing pairs there.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockCount {
    /// `e(S,T)`, or `e(S)` when `S = T`.
    pub edges: u64,
    /// `|S||T| - e(S,T)`, or `C(|S|,2) - e(S)`.
    pub non_edges: u64,
}

/// Bits strictly above position `i`.
#[inline]
pub(crate) fn above(i: usize) -> u64 {
    u64::MAX.checked_shl(i as u32 + 1).unwrap_or(0)
}

fn check_order(order: usize) -> Result<()> {
    if (1..=MAX_ORDER).contains(&order) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange(order, MAX_ORDER))
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        check_order(order)?;
        let mut rows = vec![0u64; order];
        for (i, j) in edges {
            for v in [i, j] {
                if v >= order {
                    return Err(Error::VertexOutOfRange { vertex: v, order });
                }
            }
            if i == j {
                return Err(Error::LoopEdge(i));
            }
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
        Ok(Graph { order, rows })
    }

    /// Builds a graph from neighbourhood bit rows, validating symmetry.
    pub fn from_rows(rows: &[u64]) -> Result<Self> {
        let order = rows.len();
        check_order(order)?;
        let mask = VertexSet::range(order).bits();
        for (i, &r) in rows.iter().enumerate() {
            if r & !mask != 0 {
                let vertex = (r & !mask).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, order });
            }
            if r >> i & 1 == 1 {
                return Err(Error::LoopEdge(i));
            }
            for j in VertexSet::from_bits(r) {
                if rows[j] >> i & 1 == 0 {
                    return Err(Error::Precondition(format!("adjacency rows not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(Graph { order, rows: rows.to_vec() })
    }

    /// Caller guarantees the rows are symmetric, loop-free and in range.
    pub(crate) fn from_rows_unchecked(rows: &[u64]) -> Self {
        debug_assert!(Graph::from_rows(rows).is_ok());
        Graph { order: rows.len(), rows: rows.to_vec() }
    }

    pub fn empty(order: usize) -> Result<Self> {
        Graph::new(order, [])
    }

    pub fn complete(order: usize) -> Result<Self> {
        check_order(order)?;
        let all = VertexSet::range(order).bits();
        let rows = (0..order).map(|i| all & !(1 << i)).collect();
        Ok(Graph { order, rows })
    }

    /// Path `0 - 1 - … - (order-1)`.
    pub fn path(order: usize) -> Result<Self> {
        Graph::new(order, (1..order).map(|i| (i - 1, i)))
    }

    /// Cycle `0 - 1 - … - (order-1) - 0`; needs `order >= 3`.
    pub fn cycle(order: usize) -> Result<Self> {
        if order < 3 {
            return Err(Error::Precondition(format!("cycle needs at least 3 vertices, got {order}")));
        }
        Graph::new(order, (0..order).map(|i| (i, (i + 1) % order)))
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Result<Self> {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Neighbourhood bit rows, one per vertex.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(self.order)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.rows[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Degrees indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Vertices whose degree is exactly `d`.
    pub fn degree_class(&self, d: usize) -> VertexSet {
        (0..self.order).filter(|&v| self.degree(v) == d).collect()
    }

    /// Edges `(i, j)` with `i < j`, lexicographically ordered.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |i| VertexSet::from_bits(self.rows[i] & above(i)).iter().map(move |j| (i, j)))
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::range(self.order).bits();
        let rows = self.rows.iter().enumerate().map(|(i, r)| !r & all & !(1 << i)).collect();
        Graph { order: self.order, rows }
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order {
            return Err(Error::Precondition(format!(
                "permutation has length {}, graph has order {}",
                perm.len(),
                self.order
            )));
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            if p >= self.order || seen.contains(p) {
                return Err(Error::Precondition("not a permutation".into()));
            }
            seen.insert(p);
        }
        Graph::new(self.order, self.edges().map(|(i, j)| (perm[i], perm[j])))
    }

    /// Induced subgraph on `keep`, relabelled to `0..keep.len()` in order.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph> {
        let idx: Vec<usize> = keep.iter().collect();
        if let Some(&v) = idx.iter().find(|&&v| v >= self.order) {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.order });
        }
        let mut rows = vec![0u64; idx.len()];
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                if self.has_edge(i, j) {
                    rows[a] |= 1 << b;
                }
            }
        }
        Graph::from_rows(&rows)
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, order: self.order }),
            None => Ok(()),
        }
    }

    /// `e(S)`: edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> u64 {
        s.iter().map(|v| (self.rows[v] & s.bits()).count_ones() as u64).sum::<u64>() / 2
    }

    /// `e(S,T)` for disjoint `s`, `t`.
    pub fn edges_between(&self, s: VertexSet, t: VertexSet) -> u64 {
        s.iter().map(|v| (self.rows[v] & t.bits()).count_ones() as u64).sum()
    }

    /// `ē(S) = C(|S|,2) - e(S)`.
    pub fn non_edges_within(&self, s: VertexSet) -> u64 {
        let k = s.len() as u64;
        k * k.saturating_sub(1) / 2 - self.edges_within(s)
    }

    /// `ē(S,T) = |S||T| - e(S,T)` for disjoint `s`, `t`.
    pub fn non_edges_between(&self, s: VertexSet, t: VertexSet) -> u64 {
        (s.len() * t.len()) as u64 - self.edges_between(s, t)
    }

    /// Edge and non-edge counts of the block `(s, t)`. Passing the same
    /// set twice counts inside it; distinct sets must be disjoint.
    pub fn block_counts(&self, s: VertexSet, t: VertexSet) -> Result<BlockCount> {
        self.check_set(s)?;
        self.check_set(t)?;
        if s == t {
            return Ok(BlockCount { edges: self.edges_within(s), non_edges: self.non_edges_within(s) });
        }
        if !s.is_disjoint(t) {
            return Err(Error::OverlappingSets);
        }
        Ok(BlockCount { edges: self.edges_between(s, t), non_edges: self.non_edges_between(s, t) })
    }

    pub fn to_graph6(&self) -> String {
        to_graph6(self)
    }

    pub fn from_graph6(text: &str) -> Result<Self> {
        from_graph6(text)
    }
}

impl Adjacency for Graph {
    fn order(&self) -> usize {
        self.order
    }

    fn degree(&self, v: usize) -> usize {
        Graph::degree(self, v)
    }

    fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v)
    }

    fn neighbor_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.neighbors(v).iter()
    }
}

/// `K_{a,b}`: vertices `0..a` form one side, `a..a+b` the other.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::Precondition(format!("complete bipartite sides must be non-empty, got ({a},{b})")));
    }
    check_order(a + b)?;
    Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
}

/// Half graph on `a_1..a_n` (labels `0..n`) and `b_1..b_n` (labels
/// `n..2n`) with `a_i ~ b_j` iff `i <= j`.
pub fn half_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Precondition("half graph needs n >= 1".into()));
    }
    check_order(2 * n)?;
    Graph::new(2 * n, (0..n).flat_map(|i| (i..n).map(move |j| (i, n + j))))
}

/// Disjoint union, `h` relabelled after `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let off = g.order();
    Graph::new(off + h.order(), g.edges().chain(h.edges().map(|(i, j)| (i + off, j + off))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_path_and_degrees() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.degrees(), vec![1, 2, 2, 1]);
        assert_eq!(p4.edge_count(), 3);
        assert_eq!(Graph::empty(3).unwrap().edge_count(), 0);
        let dup = Graph::new(4, [(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn build_errors() {
        assert_eq!(Graph::new(0, []), Err(Error::OrderOutOfRange(0, 64)));
        assert_eq!(Graph::new(65, []), Err(Error::OrderOutOfRange(65, 64)));
        assert_eq!(Graph::new(3, [(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, order: 3 }));
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::LoopEdge(1)));
        assert!(Graph::from_rows(&[0b10, 0b00]).is_err());
        assert!(Graph::new(64, [(0, 63)]).is_ok());
    }

    #[test]
    fn complement_examples() {
        let k23 = complete_bipartite(2, 3).unwrap();
        let c = k23.complement();
        assert_eq!(c.edge_count(), 4);
        let k2 = Graph::complete(2).unwrap();
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(c, disjoint_union(&k2, &k3).unwrap());
        assert_eq!(Graph::empty(5).unwrap().complement(), Graph::complete(5).unwrap());
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.complement().complement(), p4);
    }

    #[test]
    fn block_count_examples() {
        let k23 = complete_bipartite(2, 3).unwrap();
        let left: VertexSet = [0, 1].into_iter().collect();
        let right: VertexSet = [2, 3, 4].into_iter().collect();
        assert_eq!(k23.block_counts(left, right).unwrap(), BlockCount { edges: 6, non_edges: 0 });
        assert_eq!(k23.block_counts(right, right).unwrap(), BlockCount { edges: 0, non_edges: 3 });
        let p4 = Graph::path(4).unwrap();
        let s: VertexSet = [0, 1].into_iter().collect();
        let t: VertexSet = [2, 3].into_iter().collect();
        assert_eq!(p4.block_counts(s, t).unwrap(), BlockCount { edges: 1, non_edges: 3 });
        let overlap: VertexSet = [1, 2].into_iter().collect();
        assert_eq!(p4.block_counts(s, overlap), Err(Error::OverlappingSets));
        assert!(p4.block_counts(VertexSet::singleton(9), s).is_err());
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(complete_bipartite(4, 5).unwrap().degree_sequence(), vec![5, 5, 5, 5, 4, 4, 4, 4, 4]);
        assert_eq!(half_graph(3).unwrap().degree_sequence(), vec![3, 3, 2, 2, 1, 1]);
        assert_eq!(Graph::empty(3).unwrap().degree_sequence(), vec![0, 0, 0]);
    }

    #[test]
    fn named_constructions() {
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert_eq!(k23.degree_sequence(), vec![3, 3, 2, 2, 2]);
        assert_eq!(complete_bipartite(4, 5).unwrap().edge_count(), 20);
        assert_eq!(complete_bipartite(1, 1).unwrap().edge_count(), 1);
        assert!(complete_bipartite(40, 25).is_err());
        assert!(complete_bipartite(0, 3).is_err());

        assert_eq!(half_graph(3).unwrap().edge_count(), 6);
        assert_eq!(half_graph(1).unwrap().edge_count(), 1);
        let h4 = half_graph(4).unwrap();
        assert_eq!(h4.edge_count(), 10);
        assert_eq!(h4.degree_sequence(), vec![4, 4, 3, 3, 2, 2, 1, 1]);
        assert!(half_graph(33).is_err());
    }

    #[test]
    fn induced_and_relabel() {
        let c5 = Graph::cycle(5).unwrap();
        let sub = c5.induced([0, 1, 2].into_iter().collect()).unwrap();
        assert_eq!(sub, Graph::path(3).unwrap());
        let r = c5.relabel(&[4, 3, 2, 1, 0]).unwrap();
        assert_eq!(r, c5);
        assert!(c5.relabel(&[0, 0, 1, 2, 3]).is_err());
    }
}
