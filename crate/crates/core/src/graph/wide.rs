use super::{Adjacency, Graph};
use crate::error::{Error, Result};

/// Adjacency-list graph without the 64-vertex cap.
///
/// Only used to run the detector on large constructions; everything
/// else works on [`Graph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WideGraph {
    adj: Vec<Vec<usize>>,
}

impl WideGraph {
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if order == 0 {
            return Err(Error::OrderOutOfRange(0, usize::MAX));
        }
        let mut adj = vec![Vec::new(); order];
        for (i, j) in edges {
            for v in [i, j] {
                if v >= order {
                    return Err(Error::VertexOutOfRange { vertex: v, order });
                }
            }
            if i == j {
                return Err(Error::LoopEdge(i));
            }
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(WideGraph { adj })
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::Precondition(format!("complete bipartite sides must be non-empty, got ({a},{b})")));
        }
        WideGraph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
    }

    pub fn half_graph(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("half graph needs n >= 1".into()));
        }
        WideGraph::new(2 * n, (0..n).flat_map(|i| (i..n).map(move |j| (i, n + j))))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }
}

impl From<&Graph> for WideGraph {
    fn from(g: &Graph) -> Self {
        WideGraph { adj: (0..g.order()).map(|v| g.neighbors(v).iter().collect()).collect() }
    }
}

impl Adjacency for WideGraph {
    fn order(&self) -> usize {
        self.adj.len()
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    fn neighbor_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, half_graph};

    #[test]
    fn agrees_with_bitset_graph() {
        let g = complete_bipartite(3, 4).unwrap();
        assert_eq!(WideGraph::from(&g), WideGraph::complete_bipartite(3, 4).unwrap());
        let h = half_graph(5).unwrap();
        assert_eq!(WideGraph::from(&h), WideGraph::half_graph(5).unwrap());
        let big = WideGraph::complete_bipartite(100, 101).unwrap();
        assert_eq!(big.edge_count(), 100 * 101);
        assert_eq!(big.order(), 201);
        assert!(big.is_adjacent(0, 150));
        assert!(!big.is_adjacent(0, 1));
    }
}
