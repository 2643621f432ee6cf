use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Decomposition of the vertex set around two vertices `u`, `v` of equal
/// degree: common neighbours `b`, private neighbours `a_u` and `a_v`, and
/// the vertices `d` adjacent to neither.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairPartition {
    pub u: usize,
    pub v: usize,
    /// Common degree of `u` and `v`.
    pub beta: usize,
    /// Whether `uv` is an edge.
    pub adjacent: bool,
    pub b: VertexSet,
    pub a_u: VertexSet,
    pub a_v: VertexSet,
    pub d: VertexSet,
    /// Half order: the order is `2n + 1` or `2n`.
    pub n: usize,
    /// `|B|`.
    pub x: usize,
    /// `beta - n - [uv is an edge]`.
    pub c: i64,
}

impl PairPartition {
    pub fn new(g: &Graph, u: usize, v: usize) -> Result<Self> {
        for w in [u, v] {
            if w >= g.order() {
                return Err(Error::VertexOutOfRange { vertex: w, order: g.order() });
            }
        }
        if u == v {
            return Err(Error::SameVertex(u));
        }
        let (du, dv) = (g.degree(u), g.degree(v));
        if du != dv {
            return Err(Error::UnequalDegrees { u, v, du, dv });
        }
        let nu = g.neighbors(u);
        let nv = g.neighbors(v);
        let pair = VertexSet::singleton(u).union(VertexSet::singleton(v));
        let b = nu.intersection(nv);
        let a_u = nu.difference(b).difference(pair);
        let a_v = nv.difference(b).difference(pair);
        let d = g.vertices().difference(nu.union(nv).union(pair));
        let adjacent = g.has_edge(u, v);
        let n = g.order() / 2;
        Ok(PairPartition {
            u,
            v,
            beta: du,
            adjacent,
            b,
            a_u,
            a_v,
            d,
            n,
            x: b.len(),
            c: du as i64 - n as i64 - adjacent as i64,
        })
    }

    pub fn ind(&self) -> i64 {
        self.adjacent as i64
    }

    pub fn is_odd_order(&self, g: &Graph) -> bool {
        g.order() % 2 == 1
    }

    /// Expected `|D|` from `x` and `c`: `x - 2c - 1` for odd order and
    /// `x - 2c - 2` for even order.
    pub fn expected_d_size(&self, g: &Graph) -> i64 {
        let offset = if self.is_odd_order(g) { 1 } else { 2 };
        self.x as i64 - 2 * self.c - offset
    }

    /// Failed size identities, empty when the partition is consistent.
    pub fn size_identity_failures(&self, g: &Graph) -> Vec<String> {
        let mut out = Vec::new();
        let pair = VertexSet::singleton(self.u).union(VertexSet::singleton(self.v));
        let parts = [pair, self.b, self.a_u, self.a_v, self.d];
        let total: usize = parts.iter().map(|p| p.len()).sum();
        let union = parts.iter().fold(VertexSet::EMPTY, |a, &p| a.union(p));
        if total != g.order() || union != g.vertices() {
            out.push(format!("parts do not tile V: sizes sum to {total}"));
        }
        let private = self.beta as i64 - self.x as i64 - self.ind();
        for (name, set) in [("A_u", self.a_u), ("A_v", self.a_v)] {
            if set.len() as i64 != private {
                out.push(format!("|{name}| = {} but beta - x - ind = {private}", set.len()));
            }
        }
        let expect = self.expected_d_size(g);
        if self.d.len() as i64 != expect {
            out.push(format!("|D| = {} but the size formula gives {expect}", self.d.len()));
        }
        out
    }
}

/// Second-level decomposition inside `D`, around the two vertices of `B`
/// with the largest repeated number `gamma` of neighbours in `D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SecondLevelPartition {
    pub u1: usize,
    pub v1: usize,
    pub gamma: usize,
    pub b1: VertexSet,
    pub a_u1: VertexSet,
    pub a_v1: VertexSet,
    /// `|B1|`.
    pub y: usize,
}

impl SecondLevelPartition {
    /// `None` when no two vertices of `B` have the same number of
    /// neighbours in `D`. Ties in `gamma` go to the two smallest vertices.
    pub fn new(g: &Graph, p: &PairPartition) -> Option<Self> {
        let count = |w: usize| g.neighbors(w).intersection(p.d).len();
        let gamma = (0..=p.d.len()).rev().find(|&k| p.b.iter().filter(|&w| count(w) == k).count() >= 2)?;
        let mut realisers = p.b.iter().filter(|&w| count(w) == gamma);
        let u1 = realisers.next()?;
        let v1 = realisers.next()?;
        let nu = g.neighbors(u1).intersection(p.d);
        let nv = g.neighbors(v1).intersection(p.d);
        let b1 = nu.intersection(nv);
        Some(SecondLevelPartition { u1, v1, gamma, b1, a_u1: nu.difference(b1), a_v1: nv.difference(b1), y: b1.len() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_bipartite;

    #[test]
    fn bipartite_pairs() {
        let k23 = complete_bipartite(2, 3).unwrap();
        let p = PairPartition::new(&k23, 0, 1).unwrap();
        assert_eq!((p.beta, p.adjacent, p.x, p.c), (3, false, 3, 1));
        assert!(p.a_u.is_empty() && p.a_v.is_empty() && p.d.is_empty());
        assert!(p.size_identity_failures(&k23).is_empty());

        let k34 = complete_bipartite(3, 4).unwrap();
        let p = PairPartition::new(&k34, 0, 1).unwrap();
        assert_eq!((p.beta, p.x, p.c), (4, 4, 1));
        assert_eq!(p.d, VertexSet::singleton(2));
        assert!(p.size_identity_failures(&k34).is_empty());
    }

    #[test]
    fn cycle_pair() {
        let c4 = Graph::cycle(4).unwrap();
        let p = PairPartition::new(&c4, 0, 1).unwrap();
        assert_eq!((p.beta, p.adjacent, p.x), (2, true, 0));
        assert_eq!((p.a_u.len(), p.a_v.len(), p.d.len()), (1, 1, 0));
        assert!(p.size_identity_failures(&c4).is_empty());
    }

    #[test]
    fn rejects_bad_pairs() {
        let p4 = Graph::path(4).unwrap();
        assert!(matches!(PairPartition::new(&p4, 0, 1), Err(Error::UnequalDegrees { .. })));
        assert_eq!(PairPartition::new(&p4, 1, 1), Err(Error::SameVertex(1)));
    }

    #[test]
    fn second_level_in_k34_pair() {
        let k34 = complete_bipartite(3, 4).unwrap();
        let p = PairPartition::new(&k34, 0, 1).unwrap();
        let s = SecondLevelPartition::new(&k34, &p).unwrap();
        // Every vertex of B sees the single vertex of D.
        assert_eq!((s.u1, s.v1, s.gamma, s.y), (3, 4, 1, 1));
        assert!(s.a_u1.is_empty() && s.a_v1.is_empty());
    }
}
