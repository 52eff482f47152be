//! Exact graph invariants: distances, girth, bipartiteness, domination,
//! universal vertices, induced stars and isometric paths.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::error::GraphError;
use crate::graph::{bits, Graph, VertexSet};

/// Breadth-first distances from `source`; `None` for unreachable vertices.
pub fn distances_from(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = alloc::vec![None; g.order()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// All-pairs distance table, `usize::MAX` for unreachable pairs.
#[derive(Clone, Debug)]
pub struct DistanceTable {
    n: usize,
    d: Vec<usize>,
}

impl DistanceTable {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut d = alloc::vec![usize::MAX; n * n];
        for s in 0..n {
            for (t, dist) in distances_from(g, s).into_iter().enumerate() {
                if let Some(x) = dist {
                    d[s * n + t] = x;
                }
            }
        }
        DistanceTable { n, d }
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.d[u * self.n + v]
    }
}

pub fn is_connected(g: &Graph) -> bool {
    distances_from(g, 0).iter().all(Option::is_some)
}

/// Length of the shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = alloc::vec![usize::MAX; n];
    let mut parent = alloc::vec![usize::MAX; n];
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for &w in g.neighbors(u) {
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
    best
}

/// Two-colouring of a bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<u8>,
}

impl Bipartition {
    /// Side (0 or 1) of vertex `v`.
    #[inline]
    pub fn side(&self, v: usize) -> u8 {
        self.side[v]
    }

    pub fn sides(&self) -> &[u8] {
        &self.side
    }
}

/// Proper two-colouring with the lowest vertex of each component on side 0,
/// or `None` if the graph has an odd cycle.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    let n = g.order();
    let mut side = alloc::vec![u8::MAX; n];
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return None;
                }
            }
        }
    }
    Some(Bipartition { side })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicInvariants {
    pub min_degree: usize,
    /// `None` when the graph is disconnected.
    pub diameter: Option<usize>,
    pub is_connected: bool,
    pub bipartition: Option<Bipartition>,
}

pub fn invariants_basic(g: &Graph) -> BasicInvariants {
    let min_degree = (0..g.order()).map(|v| g.degree(v)).min().unwrap_or(0);
    let mut diameter = Some(0);
    for s in 0..g.order() {
        for d in distances_from(g, s) {
            diameter = match (diameter, d) {
                (Some(a), Some(b)) => Some(a.max(b)),
                _ => None,
            };
        }
    }
    BasicInvariants {
        min_degree,
        diameter,
        is_connected: diameter.is_some(),
        bipartition: bipartition(g),
    }
}

pub fn diameter(g: &Graph) -> Option<usize> {
    invariants_basic(g).diameter
}

/// Largest graph accepted by [`domination_number`].
pub const DOMINATION_LIMIT: usize = 32;

/// Domination number with a minimum dominating set (sorted).
///
/// Searches cardinalities upward from 1, capped by a greedy solution, and
/// branches on the closed neighbourhood of the lowest undominated vertex.
pub fn domination_number(g: &Graph) -> Result<(usize, Vec<usize>), GraphError> {
    let n = g.order();
    if n > DOMINATION_LIMIT {
        return Err(GraphError::SearchLimit { n, max: DOMINATION_LIMIT });
    }
    let greedy = greedy_dominating_set(g);
    let cover: Vec<VertexSet> = (0..n).map(|v| g.closed_neighbor_set(v)).collect();
    let reach = 1 + g.max_degree();
    for k in 1..greedy.len() {
        let mut chosen = Vec::with_capacity(k);
        if dominate(&cover, g.all_vertices(), 0, k, reach, &mut chosen) {
            chosen.sort_unstable();
            return Ok((k, chosen));
        }
    }
    Ok((greedy.len(), greedy))
}

fn dominate(
    cover: &[VertexSet],
    all: VertexSet,
    dominated: VertexSet,
    budget: usize,
    reach: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    let open = all & !dominated;
    if open == 0 {
        return true;
    }
    if budget == 0 || budget * reach < open.count_ones() as usize {
        return false;
    }
    let u = open.trailing_zeros() as usize;
    for w in bits(cover[u]) {
        chosen.push(w);
        if dominate(cover, all, dominated | cover[w], budget - 1, reach, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn greedy_dominating_set(g: &Graph) -> Vec<usize> {
    let mut dominated = 0;
    let mut set = Vec::new();
    while dominated != g.all_vertices() {
        let best = (0..g.order())
            .max_by_key(|&v| ((g.closed_neighbor_set(v) & !dominated).count_ones(), usize::MAX - v))
            .unwrap();
        set.push(best);
        dominated |= g.closed_neighbor_set(best);
    }
    set.sort_unstable();
    set
}

/// True iff the closed neighbourhoods of `set` cover every vertex.
pub fn is_dominating(g: &Graph, set: &[usize]) -> bool {
    set.iter().fold(0, |acc, &v| acc | g.closed_neighbor_set(v)) == g.all_vertices()
}

pub fn universal_vertex(g: &Graph) -> Option<usize> {
    (0..g.order()).find(|&v| g.closed_neighbor_set(v) == g.all_vertices())
}

pub fn has_universal_vertex(g: &Graph) -> bool {
    universal_vertex(g).is_some()
}

/// True iff no vertex has `m` pairwise non-adjacent neighbours.
pub fn is_k1m_free(g: &Graph, m: usize) -> bool {
    assert!(m >= 2, "K_{{1,m}} needs m >= 2");
    (0..g.order()).all(|v| !has_independent_subset(g, g.neighbor_set(v), m))
}

/// Whether `candidates` contains an independent set of size `size`.
fn has_independent_subset(g: &Graph, candidates: VertexSet, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    if (candidates.count_ones() as usize) < size {
        return false;
    }
    let v = candidates.trailing_zeros() as usize;
    let rest = candidates & !(1 << v);
    has_independent_subset(g, rest & !g.neighbor_set(v), size - 1)
        || has_independent_subset(g, rest, size)
}

/// Least `m >= from` such that `g` is `K_{1,m}`-free.
pub fn least_free_star(g: &Graph, from: usize) -> usize {
    (from..).find(|&m| is_k1m_free(g, m)).unwrap()
}

/// A shortest `u`–`v` path, listed from `u` to `v`.
pub fn isometric_shortest_path(g: &Graph, u: usize, v: usize) -> Result<Vec<usize>, GraphError> {
    let n = g.order();
    for w in [u, v] {
        if w >= n {
            return Err(GraphError::VertexOutOfRange { vertex: w, n });
        }
    }
    // walk from u towards v along strictly decreasing distance to v,
    // taking the lowest-indexed neighbour at each step
    let to_v = distances_from(g, v);
    if to_v[u].is_none() {
        return Err(GraphError::Unreachable { from: u, to: v });
    }
    let mut path = alloc::vec![u];
    let mut cur = u;
    while cur != v {
        let d = to_v[cur].unwrap();
        cur = *g.neighbors(cur).iter().find(|&&w| to_v[w] == Some(d - 1)).unwrap();
        path.push(cur);
    }
    Ok(path)
}

/// True iff `path` is a walk of distinct adjacent vertices whose
/// positions differ exactly by their distance in `g`.
pub fn is_isometric(g: &Graph, path: &[usize]) -> bool {
    if path.is_empty() || path.iter().any(|&v| v >= g.order()) {
        return false;
    }
    for (i, &p) in path.iter().enumerate() {
        let dist = distances_from(g, p);
        for (j, &q) in path.iter().enumerate() {
            if dist[q] != Some(i.abs_diff(j)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, complete_bipartite, cycle, path, petersen, star};

    /// Enumerates all simple cycles through brute-force DFS from each
    /// lowest vertex.
    fn brute_girth(g: &Graph) -> Option<usize> {
        fn dfs(g: &Graph, start: usize, cur: usize, seen: &mut Vec<bool>, len: usize, best: &mut Option<usize>) {
            for &w in g.neighbors(cur) {
                if w == start && len >= 3 {
                    *best = Some(best.map_or(len, |b: usize| b.min(len)));
                } else if w > start && !seen[w] {
                    seen[w] = true;
                    dfs(g, start, w, seen, len + 1, best);
                    seen[w] = false;
                }
            }
        }
        let mut best = None;
        for s in 0..g.order() {
            let mut seen = alloc::vec![false; g.order()];
            seen[s] = true;
            dfs(g, s, s, &mut seen, 1, &mut best);
        }
        best
    }

    #[test]
    fn girth_of_cycles_and_trees() {
        for n in 3..=20 {
            assert_eq!(girth(&cycle(n).unwrap()), Some(n));
        }
        assert_eq!(girth(&path(6).unwrap()), None);
        assert_eq!(girth(&star(4).unwrap()), None);
    }

    #[test]
    fn petersen_girth_matches_enumeration() {
        let p = petersen();
        assert_eq!(brute_girth(&p), Some(5));
        assert_eq!(girth(&p), Some(5));
        assert_eq!(girth(&complete(4).unwrap()), brute_girth(&complete(4).unwrap()));
    }

    #[test]
    fn basic_invariants() {
        let p = invariants_basic(&petersen());
        assert_eq!((p.min_degree, p.diameter, p.is_connected), (3, Some(2), true));
        assert!(p.bipartition.is_none());

        let c6 = invariants_basic(&cycle(6).unwrap());
        assert_eq!((c6.min_degree, c6.diameter), (2, Some(3)));
        let sides = c6.bipartition.unwrap();
        assert_eq!(sides.sides(), &[0, 1, 0, 1, 0, 1]);

        let k33 = invariants_basic(&complete_bipartite(3, 3).unwrap());
        assert_eq!((k33.min_degree, k33.diameter), (3, Some(2)));
        assert!(k33.bipartition.is_some());

        let split = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        let inv = invariants_basic(&split);
        assert!(!inv.is_connected);
        assert_eq!(inv.diameter, None);
    }

    /// Brute force: smallest subset whose closed neighbourhoods cover V.
    fn brute_domination(g: &Graph) -> usize {
        let n = g.order();
        (0u64..1 << n)
            .filter(|&s| bits(s).fold(0, |acc, v| acc | g.closed_neighbor_set(v)) == g.all_vertices())
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn domination_examples() {
        let (k, w) = domination_number(&complete(5).unwrap()).unwrap();
        assert_eq!((k, w.len()), (1, 1));

        let c7 = cycle(7).unwrap();
        let (k, w) = domination_number(&c7).unwrap();
        assert_eq!(k, 3);
        assert_eq!(brute_domination(&c7), 3);
        assert!(is_dominating(&c7, &w));
        assert!(is_dominating(&c7, &[0, 3, 5]));

        let p = petersen();
        let (k, w) = domination_number(&p).unwrap();
        assert_eq!(k, 3);
        assert_eq!(brute_domination(&p), 3);
        assert!(is_dominating(&p, &w));
    }

    #[test]
    fn domination_limit() {
        let big = path(33).unwrap();
        assert_eq!(
            domination_number(&big),
            Err(GraphError::SearchLimit { n: 33, max: DOMINATION_LIMIT })
        );
    }

    #[test]
    fn universal_vertices() {
        assert!(has_universal_vertex(&star(4).unwrap()));
        assert!(!has_universal_vertex(&cycle(5).unwrap()));
        assert_eq!(universal_vertex(&path(3).unwrap()), Some(1));
    }

    #[test]
    fn induced_stars() {
        assert!(!is_k1m_free(&star(3).unwrap(), 3));
        assert!(is_k1m_free(&cycle(6).unwrap(), 3));
        assert!(!is_k1m_free(&cycle(6).unwrap(), 2));
        assert_eq!(least_free_star(&star(5).unwrap(), 3), 6);
    }

    #[test]
    fn isometric_paths() {
        let c6 = cycle(6).unwrap();
        let p = isometric_shortest_path(&c6, 0, 3).unwrap();
        assert_eq!(p.len(), 4);
        assert!(is_isometric(&c6, &p));

        let pet = petersen();
        let table = DistanceTable::new(&pet);
        for u in 0..10 {
            for v in 0..10 {
                if table.get(u, v) == 2 {
                    let p = isometric_shortest_path(&pet, u, v).unwrap();
                    assert_eq!(p.len(), 3);
                    assert!(is_isometric(&pet, &p));
                }
            }
        }

        assert!(!is_isometric(&cycle(4).unwrap(), &[0, 1, 2, 3]));
        let split = Graph::from_edge_list(2, &[]).unwrap();
        assert_eq!(
            isometric_shortest_path(&split, 0, 1),
            Err(GraphError::Unreachable { from: 0, to: 1 })
        );
    }
}
