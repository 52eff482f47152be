//! Hypergraphs, their Berge girth and line graphs.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::error::GraphError;
use crate::graph::Graph;

/// Vertex set `0..n` plus a list of hyperedges, each a sorted set of at
/// least two vertices. Hyperedges are pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for mut e in edges {
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            e.sort_unstable();
            e.dedup();
            if e.len() < 2 {
                return Err(GraphError::InvalidParameter("hyperedges need at least two vertices"));
            }
            if !seen.insert(e.clone()) {
                return Err(GraphError::InvalidParameter("duplicate hyperedge"));
            }
            normalized.push(e);
        }
        Ok(Hypergraph { n, edges: normalized })
    }

    /// One 2-element hyperedge per edge of `g`, in edge order.
    pub fn from_graph(g: &Graph) -> Self {
        Hypergraph {
            n: g.order(),
            edges: g.edges().map(|(u, v)| alloc::vec![u, v]).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Number of hyperedges containing `v`.
    pub fn vertex_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count()
    }

    fn intersection_size(a: &[usize], b: &[usize]) -> usize {
        a.iter().filter(|v| b.binary_search(v).is_ok()).count()
    }

    pub fn properties(&self) -> HyperProperties {
        let uniform_k = match self.edges.first() {
            Some(e) if self.edges.iter().all(|f| f.len() == e.len()) => Some(e.len()),
            _ => None,
        };
        let mut is_linear = true;
        for (i, a) in self.edges.iter().enumerate() {
            for b in &self.edges[i + 1..] {
                if Self::intersection_size(a, b) > 1 {
                    is_linear = false;
                }
            }
        }
        HyperProperties {
            uniform_k,
            is_linear,
            min_vertex_degree: (0..self.n).map(|v| self.vertex_degree(v)).min().unwrap_or(0),
            berge_girth: self.berge_girth(),
        }
    }

    /// Length of the shortest Berge cycle, `None` if there is none.
    ///
    /// A Berge cycle of length `t` is a cycle of length `2t` in the
    /// vertex/hyperedge incidence graph, so this is half that girth.
    pub fn berge_girth(&self) -> Option<usize> {
        let m = self.edges.len();
        let total = self.n + m;
        let mut adj = alloc::vec![Vec::new(); total];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                adj[v].push(self.n + i);
                adj[self.n + i].push(v);
            }
        }
        let mut best: Option<usize> = None;
        let mut dist = alloc::vec![usize::MAX; total];
        let mut parent = alloc::vec![usize::MAX; total];
        for root in 0..self.n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best.map(|len| len / 2)
    }

    /// One vertex per hyperedge, adjacent when the hyperedges intersect.
    pub fn line_graph(&self) -> Result<Graph, GraphError> {
        let m = self.edges.len();
        let mut pairs = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                if Self::intersection_size(&self.edges[i], &self.edges[j]) > 0 {
                    pairs.push((i, j));
                }
            }
        }
        Graph::from_edge_list(m, &pairs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperProperties {
    /// Common hyperedge size, if all hyperedges share one.
    pub uniform_k: Option<usize>,
    pub is_linear: bool,
    pub min_vertex_degree: usize,
    pub berge_girth: Option<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, path, petersen};
    use crate::invariants::girth;

    /// Exhaustive Berge-cycle search: extend alternating vertex/edge
    /// sequences from each start vertex, never reusing either.
    fn brute_berge_girth(h: &Hypergraph) -> Option<usize> {
        fn extend(h: &Hypergraph, start: usize, cur: usize, vs: &mut Vec<usize>, es: &mut Vec<usize>, best: &mut Option<usize>) {
            for (i, e) in h.edges().iter().enumerate() {
                if es.contains(&i) || e.binary_search(&cur).is_err() {
                    continue;
                }
                es.push(i);
                for &w in e {
                    if w == start && vs.len() >= 2 {
                        let t = vs.len();
                        *best = Some(best.map_or(t, |b: usize| b.min(t)));
                    } else if w != cur && !vs.contains(&w) && best.is_none_or(|b| vs.len() + 1 < b) {
                        vs.push(w);
                        extend(h, start, w, vs, es, best);
                        vs.pop();
                    }
                }
                es.pop();
            }
        }
        let mut best = None;
        for s in 0..h.order() {
            extend(h, s, s, &mut alloc::vec![s], &mut Vec::new(), &mut best);
        }
        best
    }

    #[test]
    fn petersen_as_hypergraph() {
        let h = Hypergraph::from_graph(&petersen());
        assert_eq!(h.edges().len(), 15);
        let p = h.properties();
        assert_eq!(p.uniform_k, Some(2));
        assert!(p.is_linear);
        assert_eq!(p.min_vertex_degree, 3);
        assert_eq!(p.berge_girth, Some(5));
        assert_eq!(brute_berge_girth(&h), Some(5));
    }

    #[test]
    fn nonlinear_pair() {
        let h = Hypergraph::new(4, alloc::vec![alloc::vec![0, 1, 2], alloc::vec![0, 1, 3]]).unwrap();
        let p = h.properties();
        assert!(!p.is_linear);
        assert_eq!(p.berge_girth, Some(2));
        assert_eq!(brute_berge_girth(&h), Some(2));
    }

    #[test]
    fn single_hyperedge() {
        let h = Hypergraph::new(3, alloc::vec![alloc::vec![0, 1, 2]]).unwrap();
        let p = h.properties();
        assert_eq!(p.uniform_k, Some(3));
        assert!(p.is_linear);
        assert_eq!(p.min_vertex_degree, 1);
        assert_eq!(p.berge_girth, None);
        assert_eq!(h.line_graph().unwrap().order(), 1);
    }

    #[test]
    fn triple_system_girth_matches_brute_force() {
        // Fano plane: linear, Berge girth 3
        let fano = Hypergraph::new(
            7,
            [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]]
                .iter()
                .map(|e| e.to_vec())
                .collect(),
        )
        .unwrap();
        assert_eq!(fano.berge_girth(), Some(3));
        assert_eq!(brute_berge_girth(&fano), Some(3));
        assert!(fano.properties().is_linear);
    }

    #[test]
    fn line_graphs() {
        let lp = Hypergraph::from_graph(&petersen()).line_graph().unwrap();
        assert_eq!(lp.order(), 15);
        assert!((0..15).all(|v| lp.degree(v) == 4));

        let lc4 = Hypergraph::from_graph(&cycle(4).unwrap()).line_graph().unwrap();
        assert_eq!(lc4.size(), 4);
        assert!((0..4).all(|v| lc4.degree(v) == 2));
        assert_eq!(girth(&lc4), Some(4));
    }

    #[test]
    fn from_graph_counts() {
        assert_eq!(Hypergraph::from_graph(&complete(3).unwrap()).edges().len(), 3);
        assert_eq!(Hypergraph::from_graph(&path(2).unwrap()).edges().len(), 1);
    }

    #[test]
    fn validation() {
        assert!(Hypergraph::new(3, alloc::vec![alloc::vec![0]]).is_err());
        assert!(Hypergraph::new(3, alloc::vec![alloc::vec![0, 3]]).is_err());
        assert!(Hypergraph::new(3, alloc::vec![alloc::vec![0, 1], alloc::vec![1, 0]]).is_err());
    }
}
