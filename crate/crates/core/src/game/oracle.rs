//! Reference decision procedure for tiny games.
//!
//! Computes "cops force capture within d plies" for d = 1, 2, ... by plain
//! forward evaluation of every position, until the sets stop growing or d
//! exceeds the number of live positions. Positions live in an ordered map
//! and moves are regenerated from the rules each time; nothing is shared
//! with the retrograde solver.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{Ruleset, Variant};
use crate::error::GameError;
use crate::graph::Graph;
use crate::invariants::is_connected;

/// Largest number of live positions the oracle accepts.
pub const ORACLE_LIMIT: u64 = 100_000;

type Position = (Vec<usize>, usize, bool);

/// Cops' possible next placements: every cop independently stays or moves.
fn cop_options(g: &Graph, cops: &[usize]) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> = alloc::vec![Vec::new()];
    for &c in cops {
        let mut next = Vec::new();
        for partial in &all {
            for t in core::iter::once(c).chain(g.neighbors(c).iter().copied()) {
                let mut p = partial.clone();
                p.push(t);
                next.push(p);
            }
        }
        all = next;
    }
    for p in &mut all {
        p.sort_unstable();
    }
    all.sort();
    all.dedup();
    all
}

fn multisets(n: usize, size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for smaller in multisets(n, size - 1) {
        let lo = smaller.last().copied().unwrap_or(0);
        for v in lo..n {
            let mut m = smaller.clone();
            m.push(v);
            out.push(m);
        }
    }
    out
}

/// Decides whether `rules.cops` cops win on `g`.
pub fn minimax_oracle(g: &Graph, rules: Ruleset) -> Result<bool, GameError> {
    if rules.cops == 0 {
        return Err(GameError::NoCops);
    }
    if !is_connected(g) {
        return Err(GameError::Disconnected);
    }
    let n = g.order();
    let sizes: Vec<usize> = match rules.variant {
        Variant::Classic => alloc::vec![rules.cops],
        Variant::Attacking => (0..=rules.cops).collect(),
    };
    let mut positions: Vec<Position> = Vec::new();
    for &j in &sizes {
        for ms in multisets(n, j) {
            for r in (0..n).filter(|r| !ms.contains(r)) {
                positions.push((ms.clone(), r, true));
                positions.push((ms.clone(), r, false));
                if positions.len() as u64 > ORACLE_LIMIT {
                    return Err(GameError::TooLarge { states: positions.len() as u64, limit: ORACLE_LIMIT });
                }
            }
        }
    }

    // win[p] == true: cops force capture from p within the current horizon
    let mut win: BTreeMap<Position, bool> = positions.iter().map(|p| (p.clone(), false)).collect();
    let horizon = positions.len() + 1;
    for _ in 0..horizon {
        let mut next = win.clone();
        let mut grew = false;
        for p in &positions {
            if win[p] {
                continue;
            }
            let (cops, r, cops_turn) = p;
            let value = if *cops_turn {
                cop_options(g, cops).into_iter().any(|m| m.contains(r) || win[&(m, *r, false)])
            } else {
                robber_options(g, rules.variant, cops, *r).into_iter().all(|o| match o {
                    RobberOption::Caught => true,
                    RobberOption::Go(m, u) => !m.is_empty() && win[&(m, u, true)],
                })
            };
            if value {
                next.insert(p.clone(), true);
                grew = true;
            }
        }
        win = next;
        if !grew {
            break;
        }
    }

    Ok(multisets(n, rules.cops).into_iter().any(|placement| {
        (0..n)
            .filter(|r| !placement.contains(r))
            .all(|r| win[&(placement.clone(), r, true)])
    }))
}

enum RobberOption {
    Caught,
    Go(Vec<usize>, usize),
}

fn robber_options(g: &Graph, variant: Variant, cops: &[usize], r: usize) -> Vec<RobberOption> {
    let mut out = alloc::vec![RobberOption::Go(cops.to_vec(), r)];
    for &u in g.neighbors(r) {
        let on_u = cops.iter().filter(|&&c| c == u).count();
        out.push(if on_u == 0 {
            RobberOption::Go(cops.to_vec(), u)
        } else if variant == Variant::Attacking && on_u == 1 {
            RobberOption::Go(cops.iter().copied().filter(|&c| c != u).collect(), u)
        } else {
            RobberOption::Caught
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, path};

    #[test]
    fn triangle_one_cop_attacking() {
        assert!(minimax_oracle(&complete(3).unwrap(), Ruleset::new(Variant::Attacking, 1).unwrap()).unwrap());
    }

    #[test]
    fn edge_one_cop_classic() {
        assert!(minimax_oracle(&path(2).unwrap(), Ruleset::new(Variant::Classic, 1).unwrap()).unwrap());
    }

    #[test]
    fn four_cycle() {
        let c4 = cycle(4).unwrap();
        assert!(!minimax_oracle(&c4, Ruleset::new(Variant::Classic, 1).unwrap()).unwrap());
        assert!(minimax_oracle(&c4, Ruleset::new(Variant::Classic, 2).unwrap()).unwrap());
        assert!(!minimax_oracle(&c4, Ruleset::new(Variant::Attacking, 1).unwrap()).unwrap());
        assert!(minimax_oracle(&c4, Ruleset::new(Variant::Attacking, 2).unwrap()).unwrap());
    }

    #[test]
    fn size_limit() {
        let big = cycle(30).unwrap();
        assert!(matches!(
            minimax_oracle(&big, Ruleset::new(Variant::Attacking, 3).unwrap()),
            Err(GameError::TooLarge { .. })
        ));
    }
}
