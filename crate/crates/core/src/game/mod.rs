//! Cops and Robbers, classic and attacking.
//!
//! Cops are interchangeable, so a position stores them as a sorted multiset.
//! In the attacking variant a robber moving onto a vertex holding exactly
//! one cop removes that cop; moving onto two or more cops is a capture.
//! Infinite play is a robber win.

use alloc::vec::Vec;

use crate::error::GameError;
use crate::graph::Graph;

pub mod guard;
pub mod index;
pub mod oracle;
pub mod simulate;
pub mod solve;

pub use guard::{guardable, GuardInstance};
pub use oracle::minimax_oracle;
pub use simulate::{simulate, CopPolicy, Event, Outcome, RobberMove, RobberPolicy, Transcript};
pub use simulate::{IdleCops, OptimalCops, OptimalRobber, PassingRobber};
pub use solve::{cop_number, solve_k, solve_k_with, CopNumber, Metrics, SolveOptions, SolveResult, DEFAULT_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Classic,
    Attacking,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Classic => "classic",
            Variant::Attacking => "attacking",
        }
    }
}

/// Which game is played and with how many cops.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ruleset {
    pub variant: Variant,
    pub cops: usize,
}

impl Ruleset {
    pub fn new(variant: Variant, cops: usize) -> Result<Self, GameError> {
        if cops == 0 {
            return Err(GameError::NoCops);
        }
        Ok(Ruleset { variant, cops })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Cops,
    Robber,
}

/// A position: surviving cops (sorted), the robber, and who moves next.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GameState {
    pub cops: Vec<usize>,
    pub robber: usize,
    pub to_move: Side,
}

impl GameState {
    pub fn new(mut cops: Vec<usize>, robber: usize, to_move: Side) -> Self {
        cops.sort_unstable();
        GameState { cops, robber, to_move }
    }

    /// Number of cops standing on `v`.
    pub fn cops_at(&self, v: usize) -> usize {
        self.cops.iter().filter(|&&c| c == v).count()
    }
}

/// Who has already won when a transition ends the game.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Winner {
    Cops,
    Robber,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Successor {
    pub state: GameState,
    /// `Some(Cops)` for a capture, `Some(Robber)` once no cops remain.
    pub terminal: Option<Winner>,
}

/// Robber options from `s`: pass, or step to a neighbour.
pub fn robber_successors(g: &Graph, rules: Ruleset, s: &GameState) -> Result<Vec<Successor>, GameError> {
    if s.to_move != Side::Robber {
        return Err(GameError::Malformed("robber_successors needs a robber-to-move state"));
    }
    if s.robber >= g.order() || s.cops.iter().any(|&c| c >= g.order()) {
        return Err(GameError::Malformed("vertex out of range"));
    }
    if s.cops_at(s.robber) > 0 {
        return Err(GameError::Malformed("robber shares a vertex with a cop"));
    }
    let mut out = Vec::with_capacity(g.degree(s.robber) + 1);
    let pass = GameState::new(s.cops.clone(), s.robber, Side::Cops);
    let pass_terminal = s.cops.is_empty().then_some(Winner::Robber);
    out.push(Successor { state: pass, terminal: pass_terminal });
    for &u in g.neighbors(s.robber) {
        let here = s.cops_at(u);
        let (cops, terminal) = match (rules.variant, here) {
            (_, 0) => (s.cops.clone(), None),
            (Variant::Attacking, 1) => {
                let cops: Vec<usize> = s.cops.iter().copied().filter(|&c| c != u).collect();
                let t = cops.is_empty().then_some(Winner::Robber);
                (cops, t)
            }
            _ => (s.cops.clone(), Some(Winner::Cops)),
        };
        let terminal = terminal.or_else(|| cops.is_empty().then_some(Winner::Robber));
        out.push(Successor { state: GameState::new(cops, u, Side::Cops), terminal });
    }
    Ok(out)
}

/// Every distinct cop response from `s`: each cop stays or steps to a
/// neighbour. Placing a cop on the robber is a capture.
pub fn cop_successors(g: &Graph, s: &GameState) -> Result<Vec<Successor>, GameError> {
    if s.to_move != Side::Cops {
        return Err(GameError::Malformed("cop_successors needs a cops-to-move state"));
    }
    if s.robber >= g.order() || s.cops.iter().any(|&c| c >= g.order()) {
        return Err(GameError::Malformed("vertex out of range"));
    }
    let mut moves = cop_moves(g, &s.cops);
    moves.sort();
    moves.dedup();
    Ok(moves
        .into_iter()
        .map(|cops| {
            let capture = cops.contains(&s.robber);
            let terminal = if capture {
                Some(Winner::Cops)
            } else if cops.is_empty() {
                Some(Winner::Robber)
            } else {
                None
            };
            Successor { state: GameState::new(cops, s.robber, Side::Robber), terminal }
        })
        .collect())
}

/// All sorted multisets reachable by moving each cop in `cops` (sorted) to
/// a vertex of its closed neighbourhood. May contain duplicates.
pub(crate) fn cop_moves(g: &Graph, cops: &[usize]) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, cops: &[usize], i: usize, last_choice: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cops.len() {
            let mut ms = cur.clone();
            ms.sort_unstable();
            out.push(ms);
            return;
        }
        let c = cops[i];
        // identical cops are interchangeable: keep their choices nondecreasing
        let start = if i > 0 && cops[i - 1] == c { last_choice } else { 0 };
        let options = g.degree(c) + 1;
        for choice in start..options {
            let target = if choice == 0 { c } else { g.neighbors(c)[choice - 1] };
            cur.push(target);
            rec(g, cops, i + 1, choice, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(g, cops, 0, 0, &mut Vec::with_capacity(cops.len()), &mut out);
    out
}

/// Whether the sorted multiset `to` can be reached from `from` in one
/// cop move (a perfect matching of cops onto targets within distance 1).
pub fn is_cop_move(g: &Graph, from: &[usize], to: &[usize]) -> bool {
    fn assign(g: &Graph, from: &[usize], to: &[usize], used: &mut [bool], i: usize) -> bool {
        if i == from.len() {
            return true;
        }
        for j in 0..to.len() {
            if !used[j] && g.dominates(from[i], to[j]) {
                used[j] = true;
                if assign(g, from, to, used, i + 1) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    from.len() == to.len()
        && to.iter().all(|&v| v < g.order())
        && assign(g, from, to, &mut alloc::vec![false; to.len()], 0)
}
