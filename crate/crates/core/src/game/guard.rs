//! The guarding game on an isometric path.
//!
//! The robber starts anywhere, the guards answer by placing themselves on
//! the path, and then the robber moves first. Guards never leave the path.
//! The robber wins as soon as one of his moves ends on the path (attacking
//! a lone guard included) and the guards cannot capture him with their
//! very next move; play that never produces such an entry is a guard win.

use alloc::vec::Vec;

use super::index::MultisetIndex;
use super::Variant;
use crate::error::GameError;
use crate::graph::{Graph, VertexSet};
use crate::invariants::is_isometric;

#[derive(Clone, Debug)]
pub struct GuardInstance<'a> {
    pub graph: &'a Graph,
    /// Vertices of the guarded path, in path order.
    pub path: Vec<usize>,
    pub guards: usize,
    pub variant: Variant,
}

/// Whether `guards` guards can keep the path safe against every robber
/// start.
pub fn guardable(inst: &GuardInstance<'_>) -> Result<bool, GameError> {
    Ok(solve_guard_game(inst)?.iter().all(|&safe| safe))
}

/// For each robber start, whether some guard placement wins.
pub fn solve_guard_game(inst: &GuardInstance<'_>) -> Result<Vec<bool>, GameError> {
    let g = inst.graph;
    if inst.guards == 0 {
        return Err(GameError::NoCops);
    }
    if !is_isometric(g, &inst.path) {
        return Err(GameError::NotIsometric);
    }
    let n = g.order();
    let h = inst.path.len();
    let k = inst.guards;
    let on_path: VertexSet = inst.path.iter().fold(0, |m, &v| m | 1 << v);
    let index = MultisetIndex::new(h, k);
    let placements = index.size_range(k);

    // guard positions as graph vertices, per multiset of path slots
    let guard_vertices: Vec<Vec<usize>> = (0..index.total())
        .map(|m| index.members(m).iter().map(|&i| inst.path[i as usize]).collect())
        .collect();

    // guard moves: each guard stays or steps to an adjacent path slot
    let moves: Vec<Vec<usize>> = (0..index.total())
        .map(|m| {
            if !placements.contains(&m) {
                return Vec::new();
            }
            let slots: Vec<usize> = index.members(m).iter().map(|&i| i as usize).collect();
            let mut out: Vec<usize> = slot_moves(&slots, h).iter().map(|ms| index.rank(ms)).collect();
            out.sort_unstable();
            out.dedup();
            out
        })
        .collect();

    // outcome of the robber stepping onto path vertex `v` against guards `m`
    let entry_is_safe_for_guards = |m: usize, v: usize| -> bool {
        let guards = &guard_vertices[m];
        let here = guards.iter().filter(|&&x| x == v).count();
        match (inst.variant, here) {
            (Variant::Classic, 1..) => true,
            (Variant::Attacking, 2..) => true,
            (Variant::Attacking, 1) => guards.iter().any(|&x| x != v && g.has_edge(x, v)),
            (_, 0) => guards.iter().any(|&x| g.has_edge(x, v)),
        }
    };

    // robber_wins[(m, r, side)]: side 0 = guards to move, 1 = robber to move
    let id = |m: usize, r: usize, side: usize| (m * n + r) * 2 + side;
    let mut robber_wins = alloc::vec![false; index.total() * n * 2];
    loop {
        let mut changed = false;
        for m in placements.clone() {
            for r in 0..n {
                let rm = id(m, r, 1);
                if !robber_wins[rm] {
                    let mut targets = core::iter::once(r).chain(g.neighbors(r).iter().copied());
                    let wins = targets.any(|u| {
                        if on_path >> u & 1 == 1 {
                            !entry_is_safe_for_guards(m, u)
                        } else {
                            robber_wins[id(m, u, 0)]
                        }
                    });
                    if wins {
                        robber_wins[rm] = true;
                        changed = true;
                    }
                }
                let gm = id(m, r, 0);
                if on_path >> r & 1 == 0 && !robber_wins[gm] && moves[m].iter().all(|&m2| robber_wins[id(m2, r, 1)]) {
                    robber_wins[gm] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }

    Ok((0..n)
        .map(|r| {
            placements
                .clone()
                .any(|m| guard_vertices[m].contains(&r) || !robber_wins[id(m, r, 1)])
        })
        .collect())
}

/// Sorted slot multisets reachable when each guard moves at most one slot
/// along the path.
fn slot_moves(slots: &[usize], h: usize) -> Vec<Vec<usize>> {
    let mut out = alloc::vec![Vec::new()];
    for &s in slots {
        let mut options = alloc::vec![s];
        if s > 0 {
            options.push(s - 1);
        }
        if s + 1 < h {
            options.push(s + 1);
        }
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                options.iter().map(move |&o| {
                    let mut p = prefix.clone();
                    p.push(o);
                    p
                })
            })
            .collect();
    }
    for ms in &mut out {
        ms.sort_unstable();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, path, petersen};
    use crate::invariants::isometric_shortest_path;

    #[test]
    fn six_cycle_one_guard_classic() {
        let c6 = cycle(6).unwrap();
        for u in 0..6 {
            for v in 0..6 {
                let p = isometric_shortest_path(&c6, u, v).unwrap();
                let inst = GuardInstance { graph: &c6, path: p, guards: 1, variant: Variant::Classic };
                assert!(guardable(&inst).unwrap(), "path {u}->{v}");
            }
        }
    }

    #[test]
    fn clique_edge_needs_care_under_attack() {
        // a single vertex of K_3 is trivially guarded by one guard standing on it
        let k3 = complete(3).unwrap();
        let inst = GuardInstance { graph: &k3, path: alloc::vec![0], guards: 1, variant: Variant::Classic };
        assert!(guardable(&inst).unwrap());
        // under attack rules the robber strikes the lone guard and is left standing
        let inst = GuardInstance { variant: Variant::Attacking, ..inst };
        assert!(!guardable(&inst).unwrap());
        let inst = GuardInstance { guards: 2, ..inst };
        assert!(guardable(&inst).unwrap());
    }

    #[test]
    fn petersen_paths_two_guards() {
        let p = petersen();
        let inst = GuardInstance {
            graph: &p,
            path: isometric_shortest_path(&p, 0, 7).unwrap(),
            guards: 2,
            variant: Variant::Attacking,
        };
        assert!(guardable(&inst).unwrap());
    }

    #[test]
    fn rejects_non_isometric() {
        let c4 = cycle(4).unwrap();
        let inst = GuardInstance { graph: &c4, path: alloc::vec![0, 1, 2, 3], guards: 1, variant: Variant::Classic };
        assert_eq!(guardable(&inst), Err(GameError::NotIsometric));
        let p3 = path(3).unwrap();
        let inst = GuardInstance { graph: &p3, path: alloc::vec![0, 1], guards: 0, variant: Variant::Classic };
        assert_eq!(guardable(&inst), Err(GameError::NoCops));
    }
}
