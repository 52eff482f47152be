//! Finite simple undirected graphs on dense vertex indices.
//!
//! Adjacency is stored twice: as a 64-bit mask per vertex for constant-time
//! membership and set algebra, and as a sorted neighbour list for iteration.
//! This caps graphs at [`MAX_VERTICES`] vertices, far above what the exact
//! solvers can handle anyway.

use alloc::vec::Vec;

use crate::error::GraphError;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// Vertex set encoded as a bit mask.
pub type VertexSet = u64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    nbrs: Vec<Vec<usize>>,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge { n, max: MAX_VERTICES });
        }
        Ok(Graph {
            adj: alloc::vec![0; n],
            nbrs: alloc::vec![Vec::new(); n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::empty(n)?;
        let mut masks = alloc::vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        Ok(Self::from_masks(masks))
    }

    /// Builds a graph from symmetric, irreflexive adjacency masks.
    pub(crate) fn from_masks(adj: Vec<VertexSet>) -> Self {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_VERTICES);
        debug_assert!((0..adj.len()).all(|v| adj[v] & (1 << v) == 0));
        debug_assert!((0..adj.len())
            .all(|u| (0..adj.len()).all(|v| (adj[u] >> v & 1) == (adj[v] >> u & 1))));
        let nbrs = adj.iter().map(|&m| bits(m).collect()).collect();
        Graph { adj, nbrs }
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    #[inline]
    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// N[v], the closed neighbourhood.
    #[inline]
    pub fn closed_neighbor_set(&self, v: usize) -> VertexSet {
        self.adj[v] | (1 << v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// True when `u == v` or `u` and `v` are adjacent.
    #[inline]
    pub fn dominates(&self, u: usize, v: usize) -> bool {
        self.closed_neighbor_set(u) >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Mask with every vertex set.
    #[inline]
    pub fn all_vertices(&self) -> VertexSet {
        full_mask(self.order())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            self.nbrs[u].iter().copied().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    /// Subgraph induced by `vertices`, relabelled in the order given.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let n = self.order();
        if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n });
        }
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edge_list(vertices.len(), &edges)
    }

    /// Graph with vertex `v` of `self` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut adj = alloc::vec![0u64; self.order()];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph::from_masks(adj)
    }
}

/// Mask of the first `n` vertices.
#[inline]
pub fn full_mask(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates over the set bits of a mask in increasing order.
#[inline]
pub fn bits(mut mask: VertexSet) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 3);
        assert!((0..3).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn loop_rejected() {
        assert_eq!(Graph::from_edge_list(2, &[(0, 0)]), Err(GraphError::Loop(0)));
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::from_edge_list(0, &[]), Err(GraphError::Empty));
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g.edges().collect::<Vec<_>>(), [(0, 1)]);
    }

    #[test]
    fn five_cycle_is_two_regular() {
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!((0..5).all(|v| g.degree(v) == 2));
        assert_eq!(crate::invariants::girth(&g), Some(5));
    }

    #[test]
    fn symmetric_and_irreflexive() {
        let g = Graph::from_edge_list(4, &[(0, 3), (2, 1), (1, 3)]).unwrap();
        for u in 0..4 {
            assert!(!g.has_edge(u, u));
            for v in 0..4 {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }
}
