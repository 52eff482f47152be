//! Exhaustive enumeration of small connected graphs up to isomorphism.
//!
//! Every connected graph on `n` vertices arises from a connected graph on
//! `n - 1` vertices by adding a vertex with a nonempty neighbourhood (drop
//! any non-cut vertex), so the catalogue grows one vertex at a time and is
//! deduplicated through a canonical code.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};

/// Largest order [`connected_graphs`] accepts.
pub const ENUMERATION_LIMIT: usize = 8;

/// Canonical code: the lexicographically least upper-triangle bit string
/// over all relabellings that list vertices by nonincreasing degree.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= 11, "canonical codes are limited to 11 vertices");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| core::cmp::Reverse(g.degree(v)));
    let class_of_slot: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let mut best = u64::MAX;
    let mut slots = Vec::with_capacity(n);
    search(g, &class_of_slot, 0, &mut slots, &mut best);
    best
}

fn search(g: &Graph, class: &[usize], used: VertexSet, slots: &mut Vec<usize>, best: &mut u64) {
    let n = g.order();
    if slots.len() == n {
        let code = code_of(g, slots);
        if code < *best {
            *best = code;
        }
        return;
    }
    let want = class[slots.len()];
    for v in 0..n {
        if used >> v & 1 == 0 && g.degree(v) == want {
            slots.push(v);
            search(g, class, used | 1 << v, slots, best);
            slots.pop();
        }
    }
}

fn code_of(g: &Graph, slots: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..slots.len() {
        for i in 0..j {
            code = code << 1 | g.has_edge(slots[i], slots[j]) as u64;
        }
    }
    code
}

/// Graph with the given canonical code on `n` vertices.
fn decode(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// One representative of every isomorphism class of connected graphs on
/// `n` vertices, in canonical-code order.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=ENUMERATION_LIMIT).contains(&n), "order must be in 1..={ENUMERATION_LIMIT}");
    let mut layer: BTreeSet<u64> = BTreeSet::new();
    layer.insert(0);
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &layer {
            let base = decode(m - 1, code);
            for nbrs in 1u64..1 << (m - 1) {
                let mut edges: Vec<_> = base.edges().collect();
                edges.extend(crate::graph::bits(nbrs).map(|u| (u, m - 1)));
                let g = Graph::from_edge_list(m, &edges).unwrap();
                next.insert(canonical_code(&g));
            }
        }
        layer = next;
    }
    layer.into_iter().map(|code| decode(n, code)).collect()
}

/// All connected graphs with between 1 and `max_n` vertices.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, path};

    #[test]
    fn catalogue_sizes() {
        let counts: Vec<_> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn seven_vertex_catalogue() {
        assert_eq!(connected_graphs(7).len(), 853);
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        let p = path(5).unwrap();
        let relabelled = p.permuted(&[3, 0, 4, 1, 2]);
        assert_eq!(canonical_code(&p), canonical_code(&relabelled));
        assert_ne!(canonical_code(&p), canonical_code(&cycle(5).unwrap()));
    }

    #[test]
    fn enumerated_graphs_are_connected() {
        for g in connected_graphs_up_to(5) {
            assert!(crate::invariants::is_connected(&g));
        }
    }
}
