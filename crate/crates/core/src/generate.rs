//! Named graph families and seeded random generators.
//!
//! Random families draw from a ChaCha8 stream seeded with the caller's
//! 64-bit seed, so a `(family, seed)` pair always yields the same graph.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;
use crate::graph::Graph;
use crate::invariants::is_connected;

/// Default number of draws before connected rejection sampling gives up.
pub const DEFAULT_REJECTION_BUDGET: u32 = 1000;

/// A graph family together with its size parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Family {
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    /// `K_{1,m}` with centre 0.
    Star { m: usize },
    Petersen,
    Gnp { n: usize, p: f64 },
    ConnectedGnp { n: usize, p: f64 },
    RandomConnectedBipartite { a: usize, b: usize, p: f64 },
    MaximalOuterplanar { n: usize },
}

impl Family {
    /// Stable identifier used in reports and on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            Family::Cycle { .. } => "cycle",
            Family::Path { .. } => "path",
            Family::Complete { .. } => "complete",
            Family::CompleteBipartite { .. } => "complete-bipartite",
            Family::Star { .. } => "star",
            Family::Petersen => "petersen",
            Family::Gnp { .. } => "gnp",
            Family::ConnectedGnp { .. } => "connected-gnp",
            Family::RandomConnectedBipartite { .. } => "random-connected-bipartite",
            Family::MaximalOuterplanar { .. } => "maximal-outerplanar",
        }
    }

    /// Whether the output depends on the seed.
    pub fn is_random(&self) -> bool {
        matches!(
            self,
            Family::Gnp { .. }
                | Family::ConnectedGnp { .. }
                | Family::RandomConnectedBipartite { .. }
                | Family::MaximalOuterplanar { .. }
        )
    }
}

/// Builds a member of `family`; deterministic in `seed`.
pub fn generate(family: &Family, seed: u64) -> Result<Graph, GraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match *family {
        Family::Cycle { n } => cycle(n),
        Family::Path { n } => path(n),
        Family::Complete { n } => complete(n),
        Family::CompleteBipartite { a, b } => complete_bipartite(a, b),
        Family::Star { m } => star(m),
        Family::Petersen => Ok(petersen()),
        Family::Gnp { n, p } => gnp(n, p, &mut rng),
        Family::ConnectedGnp { n, p } => connected_gnp(n, p, DEFAULT_REJECTION_BUDGET, &mut rng),
        Family::RandomConnectedBipartite { a, b, p } => {
            random_connected_bipartite(a, b, p, DEFAULT_REJECTION_BUDGET, &mut rng)
        }
        Family::MaximalOuterplanar { n } => maximal_outerplanar(n, &mut rng),
    }
}

/// Seed of the `index`-th instance of a corpus (splitmix64 of the pair).
pub fn instance_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A reproducible batch of generated instances.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorpusSpec {
    pub family: Family,
    pub count: usize,
    pub seed: u64,
}

impl CorpusSpec {
    /// `(instance seed, graph)` pairs in index order.
    pub fn instances(&self) -> Result<Vec<(u64, Graph)>, GraphError> {
        (0..self.count as u64)
            .map(|i| {
                let s = instance_seed(self.seed, i);
                generate(&self.family, s).map(|g| (s, g))
            })
            .collect()
    }
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter("cycle needs n >= 3"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

/// Path on `n` vertices `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a == 0 || b == 0 {
        return Err(GraphError::InvalidParameter("both parts must be nonempty"));
    }
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    Graph::from_edge_list(a + b, &edges)
}

pub fn star(m: usize) -> Result<Graph, GraphError> {
    if m == 0 {
        return Err(GraphError::InvalidParameter("star needs m >= 1"));
    }
    complete_bipartite(1, m)
}

/// Path `1..=n` plus an apex 0 joined to every path vertex.
pub fn fan(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter("fan needs n >= 1"));
    }
    let mut edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    edges.extend((2..=n).map(|i| (i - 1, i)));
    Graph::from_edge_list(n + 1, &edges)
}

/// Petersen graph: outer cycle 0..4, inner pentagram 5..9 joined by
/// step-2 chords, spokes `i - i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edge_list(10, &edges).unwrap()
}

fn check_probability(p: f64) -> Result<(), GraphError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GraphError::InvalidParameter("p must lie in [0, 1]"))
    }
}

/// Binomial random graph: each pair independently with probability `p`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph, GraphError> {
    check_probability(p)?;
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// `G(n, p)` conditioned on connectivity by rejection.
pub fn connected_gnp<R: Rng>(n: usize, p: f64, budget: u32, rng: &mut R) -> Result<Graph, GraphError> {
    check_probability(p)?;
    for _ in 0..budget {
        let g = gnp(n, p, rng)?;
        if is_connected(&g) {
            return Ok(g);
        }
    }
    Err(GraphError::RejectionBudget(budget))
}

/// Random bipartite graph on parts `0..a`, `a..a+b` (each cross pair with
/// probability `p`), conditioned on connectivity by rejection.
pub fn random_connected_bipartite<R: Rng>(
    a: usize,
    b: usize,
    p: f64,
    budget: u32,
    rng: &mut R,
) -> Result<Graph, GraphError> {
    check_probability(p)?;
    if a == 0 || b == 0 {
        return Err(GraphError::InvalidParameter("both parts must be nonempty"));
    }
    for _ in 0..budget {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(a + b, &edges)?;
        if is_connected(&g) {
            return Ok(g);
        }
    }
    Err(GraphError::RejectionBudget(budget))
}

/// Uniformly random triangulation of a convex `n`-gon with vertices
/// `0..n` in boundary order.
pub fn maximal_outerplanar<R: Rng>(n: usize, rng: &mut R) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter("maximal outerplanar needs n >= 3"));
    }
    if n > 62 {
        return Err(GraphError::InvalidParameter("maximal outerplanar supports n <= 62"));
    }
    let catalan = catalan_table(n);
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    // each entry is a polygon side (i, j) whose far region i..=j is untriangulated
    let mut stack = alloc::vec![(0usize, n - 1)];
    while let Some((i, j)) = stack.pop() {
        if j - i < 2 {
            continue;
        }
        // apex k splits i..=j into i..=k and k..=j; weight by the number of
        // triangulations on each side
        let total = catalan[j - i - 1];
        let mut pick = rng.gen_range(0..total);
        let mut apex = i + 1;
        for k in i + 1..j {
            let w = catalan[k - i - 1] * catalan[j - k - 1];
            if pick < w {
                apex = k;
                break;
            }
            pick -= w;
        }
        if apex - i >= 2 {
            edges.push((i, apex));
        }
        if j - apex >= 2 {
            edges.push((apex, j));
        }
        stack.push((i, apex));
        stack.push((apex, j));
    }
    Graph::from_edge_list(n, &edges)
}

/// `catalan[m]` = number of triangulations of a polygon with `m + 2` sides.
fn catalan_table(n: usize) -> Vec<u128> {
    let mut c = alloc::vec![0u128; n.max(2)];
    c[0] = 1;
    for m in 1..c.len() {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{diameter, girth, invariants_basic};

    #[test]
    fn named_families() {
        let c7 = generate(&Family::Cycle { n: 7 }, 0).unwrap();
        assert_eq!(c7.order(), 7);
        assert!((0..7).all(|v| c7.degree(v) == 2));
        assert_eq!(girth(&c7), Some(7));

        let p = generate(&Family::Petersen, 0).unwrap();
        assert_eq!(p.order(), 10);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(girth(&p), Some(5));
        assert_eq!(diameter(&p), Some(2));

        assert_eq!(fan(4).unwrap().size(), 7);
        assert!(cycle(2).is_err());
    }

    #[test]
    fn maximal_outerplanar_edge_count() {
        let g = generate(&Family::MaximalOuterplanar { n: 8 }, 1).unwrap();
        assert!(invariants_basic(&g).is_connected);
        assert_eq!(g.size(), 13);
        for seed in 0..50 {
            for n in 3..=12 {
                let g = generate(&Family::MaximalOuterplanar { n }, seed).unwrap();
                assert_eq!(g.size(), 2 * n - 3);
                assert!(invariants_basic(&g).is_connected);
            }
        }
    }

    #[test]
    fn catalan_numbers() {
        assert_eq!(&catalan_table(8)[..], &[1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn triangulations_of_hexagon_are_all_hit() {
        // a hexagon has 14 triangulations; 2000 draws should see every one
        let mut seen = alloc::collections::BTreeSet::new();
        for seed in 0..2000 {
            let g = generate(&Family::MaximalOuterplanar { n: 6 }, seed).unwrap();
            let mut chords: Vec<_> = g.edges().filter(|&(u, v)| v - u != 1 && !(u == 0 && v == 5)).collect();
            chords.sort();
            seen.insert(chords);
        }
        assert_eq!(seen.len(), 14);
    }

    #[test]
    fn bad_parameters() {
        assert_eq!(
            generate(&Family::Gnp { n: 5, p: 1.5 }, 0),
            Err(GraphError::InvalidParameter("p must lie in [0, 1]"))
        );
        assert_eq!(
            generate(&Family::ConnectedGnp { n: 6, p: 0.0 }, 0),
            Err(GraphError::RejectionBudget(DEFAULT_REJECTION_BUDGET))
        );
        assert!(generate(&Family::MaximalOuterplanar { n: 2 }, 0).is_err());
    }

    #[test]
    fn seeded_corpora_repeat() {
        let spec = CorpusSpec { family: Family::ConnectedGnp { n: 8, p: 0.5 }, count: 20, seed: 42 };
        assert_eq!(spec.instances().unwrap(), spec.instances().unwrap());
        let other = CorpusSpec { seed: 43, ..spec };
        assert_ne!(spec.instances().unwrap(), other.instances().unwrap());
    }

    #[test]
    fn bipartite_generator() {
        for seed in 0..20 {
            let g = generate(&Family::RandomConnectedBipartite { a: 4, b: 4, p: 0.45 }, seed).unwrap();
            let inv = invariants_basic(&g);
            assert!(inv.is_connected);
            assert!(inv.bipartition.is_some());
        }
    }
}
