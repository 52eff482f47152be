//! Playing out a game between two policies, with full move validation.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::solve::SolveResult;
use super::{is_cop_move, GameState, Ruleset, Side, Variant};
use crate::error::GameError;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RobberMove {
    Pass,
    To(usize),
}

pub trait CopPolicy {
    /// Initial positions of all `cops` cops.
    fn place(&mut self, g: &Graph, cops: usize) -> Vec<usize>;
    /// New cop positions (any order) from a cops-to-move state.
    fn respond(&mut self, g: &Graph, s: &GameState) -> Vec<usize>;
    /// True if the policy's choices depend only on the current state.
    fn is_positional(&self) -> bool {
        false
    }
}

pub trait RobberPolicy {
    /// Starting vertex against the placed cops; `None` if every vertex is
    /// taken.
    fn place(&mut self, g: &Graph, cops: &[usize]) -> Option<usize>;
    fn respond(&mut self, g: &Graph, s: &GameState) -> RobberMove;
    fn is_positional(&self) -> bool {
        false
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Event {
    Placed { cops: Vec<usize>, robber: Option<usize> },
    CopsMoved { cops: Vec<usize> },
    RobberMoved { to: RobberMove },
    /// The robber removed the lone cop on `vertex`.
    Attack { vertex: usize },
    Capture { vertex: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Captured after `plies` moves following placement.
    Captured { plies: usize },
    /// Every cop was eliminated.
    Disarmed { plies: usize },
    /// No capture within the round limit, or a position repeated under
    /// positional policies (so the play would cycle forever).
    Survived { plies: usize, repeated: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transcript {
    pub events: Vec<Event>,
    /// Position before every move, starting with the first cops' move.
    pub states: Vec<GameState>,
    pub outcome: Outcome,
}

/// Plays `cops` against `robber` for at most `max_rounds` cop moves.
pub fn simulate(
    g: &Graph,
    rules: Ruleset,
    cops: &mut dyn CopPolicy,
    robber: &mut dyn RobberPolicy,
    max_rounds: usize,
) -> Result<Transcript, GameError> {
    let n = g.order();
    let mut events = Vec::new();
    let mut states = Vec::new();
    let illegal = |round, reason| GameError::IllegalMove { round, reason };

    let mut placed = cops.place(g, rules.cops);
    placed.sort_unstable();
    if placed.len() != rules.cops || placed.iter().any(|&c| c >= n) {
        return Err(illegal(0, "cop placement must put every cop on a vertex"));
    }
    let start = robber.place(g, &placed);
    events.push(Event::Placed { cops: placed.clone(), robber: start });
    let Some(start) = start else {
        if (0..n).all(|v| placed.contains(&v)) {
            return Ok(Transcript { events, states, outcome: Outcome::Captured { plies: 0 } });
        }
        return Err(illegal(0, "robber declined to place"));
    };
    if start >= n || placed.contains(&start) {
        return Err(illegal(0, "robber must start on a cop-free vertex"));
    }

    let positional = cops.is_positional() && robber.is_positional();
    let mut seen = BTreeSet::new();
    let mut s = GameState { cops: placed, robber: start, to_move: Side::Cops };
    let mut plies = 0;
    for round in 1..=max_rounds {
        if positional && !seen.insert(s.clone()) {
            return Ok(Transcript { events, states, outcome: Outcome::Survived { plies, repeated: true } });
        }
        states.push(s.clone());
        let mut next = cops.respond(g, &s);
        next.sort_unstable();
        if !is_cop_move(g, &s.cops, &next) {
            return Err(illegal(round, "cops may only stay or step to a neighbour"));
        }
        plies += 1;
        events.push(Event::CopsMoved { cops: next.clone() });
        if next.contains(&s.robber) {
            events.push(Event::Capture { vertex: s.robber });
            return Ok(Transcript { events, states, outcome: Outcome::Captured { plies } });
        }
        s = GameState { cops: next, robber: s.robber, to_move: Side::Robber };

        states.push(s.clone());
        let mv = robber.respond(g, &s);
        let to = match mv {
            RobberMove::Pass => s.robber,
            RobberMove::To(u) if u < n && g.has_edge(s.robber, u) => u,
            RobberMove::To(_) => return Err(illegal(round, "robber may only pass or step to a neighbour")),
        };
        plies += 1;
        events.push(Event::RobberMoved { to: mv });
        let here = s.cops_at(to);
        if here > 0 {
            if rules.variant == Variant::Attacking && here == 1 {
                events.push(Event::Attack { vertex: to });
                s.cops.retain(|&c| c != to);
                if s.cops.is_empty() {
                    return Ok(Transcript { events, states, outcome: Outcome::Disarmed { plies } });
                }
            } else {
                events.push(Event::Capture { vertex: to });
                return Ok(Transcript { events, states, outcome: Outcome::Captured { plies } });
            }
        }
        s = GameState { cops: s.cops, robber: to, to_move: Side::Cops };
    }
    Ok(Transcript { events, states, outcome: Outcome::Survived { plies, repeated: false } })
}

/// Cops following a solved strategy; they stay put where no winning
/// move exists.
pub struct OptimalCops<'a> {
    pub solution: &'a SolveResult,
}

impl CopPolicy for OptimalCops<'_> {
    fn place(&mut self, _g: &Graph, _cops: usize) -> Vec<usize> {
        self.solution.initial_cops().to_vec()
    }

    fn respond(&mut self, _g: &Graph, s: &GameState) -> Vec<usize> {
        self.solution.best_cop_move(s).map_or_else(|| s.cops.clone(), |t| t.cops)
    }

    fn is_positional(&self) -> bool {
        true
    }
}

/// Robber following a solved strategy.
pub struct OptimalRobber<'a> {
    pub solution: &'a SolveResult,
}

impl RobberPolicy for OptimalRobber<'_> {
    fn place(&mut self, g: &Graph, cops: &[usize]) -> Option<usize> {
        (0..g.order())
            .filter(|v| !cops.contains(v))
            .map(|v| (self.solution.placement_rank(cops, v).unwrap_or(u32::MAX), v))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|(_, v)| v)
    }

    fn respond(&mut self, _g: &Graph, s: &GameState) -> RobberMove {
        self.solution.best_robber_move(s).unwrap_or(RobberMove::Pass)
    }

    fn is_positional(&self) -> bool {
        true
    }
}

/// Never moves after placing on the lowest cop-free vertex (or `start`).
pub struct PassingRobber {
    pub start: Option<usize>,
}

impl RobberPolicy for PassingRobber {
    fn place(&mut self, g: &Graph, cops: &[usize]) -> Option<usize> {
        self.start.or_else(|| (0..g.order()).find(|v| !cops.contains(v)))
    }

    fn respond(&mut self, _g: &Graph, _s: &GameState) -> RobberMove {
        RobberMove::Pass
    }

    fn is_positional(&self) -> bool {
        true
    }
}

/// Cops that never leave their starting vertices.
pub struct IdleCops {
    pub at: Vec<usize>,
}

impl CopPolicy for IdleCops {
    fn place(&mut self, _g: &Graph, _cops: usize) -> Vec<usize> {
        self.at.clone()
    }

    fn respond(&mut self, _g: &Graph, s: &GameState) -> Vec<usize> {
        s.cops.clone()
    }

    fn is_positional(&self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::solve::solve_k;
    use crate::generate::{cycle, path};

    #[test]
    fn optimal_play_on_five_cycle() {
        let c5 = cycle(5).unwrap();
        let one = solve_k(&c5, Ruleset::new(Variant::Attacking, 1).unwrap()).unwrap();
        assert!(!one.cops_win());
        let t = simulate(&c5, one.rules(), &mut OptimalCops { solution: &one }, &mut OptimalRobber { solution: &one }, 100)
            .unwrap();
        assert!(matches!(t.outcome, Outcome::Survived { .. } | Outcome::Disarmed { .. }));

        let two = solve_k(&c5, Ruleset::new(Variant::Attacking, 2).unwrap()).unwrap();
        assert!(two.cops_win());
        let start_rank = two.placement_rank(two.initial_cops(), two.initial_robber().unwrap()).unwrap();
        let t = simulate(&c5, two.rules(), &mut OptimalCops { solution: &two }, &mut OptimalRobber { solution: &two }, 100)
            .unwrap();
        assert_eq!(t.outcome, Outcome::Captured { plies: start_rank as usize });
    }

    #[test]
    fn passing_robber_on_path() {
        let p4 = path(4).unwrap();
        let res = solve_k(&p4, Ruleset::new(Variant::Attacking, 2).unwrap()).unwrap();
        let t = simulate(&p4, res.rules(), &mut OptimalCops { solution: &res }, &mut PassingRobber { start: None }, 50)
            .unwrap();
        let Outcome::Captured { plies } = t.outcome else { panic!("{:?}", t.outcome) };
        let r0 = match t.events[0] {
            Event::Placed { robber, .. } => robber.unwrap(),
            _ => unreachable!(),
        };
        assert!(plies as u32 <= res.placement_rank(res.initial_cops(), r0).unwrap());
    }

    #[test]
    fn idle_cop_never_catches() {
        let c4 = cycle(4).unwrap();
        let res = solve_k(&c4, Ruleset::new(Variant::Classic, 1).unwrap()).unwrap();
        let t = simulate(&c4, res.rules(), &mut IdleCops { at: alloc::vec![0] }, &mut OptimalRobber { solution: &res }, 30)
            .unwrap();
        assert!(matches!(t.outcome, Outcome::Survived { .. }));
    }

    struct Teleport;
    impl CopPolicy for Teleport {
        fn place(&mut self, _g: &Graph, _k: usize) -> Vec<usize> {
            alloc::vec![0]
        }
        fn respond(&mut self, _g: &Graph, _s: &GameState) -> Vec<usize> {
            alloc::vec![3]
        }
    }

    #[test]
    fn illegal_cop_move_reported() {
        let p5 = path(5).unwrap();
        let rules = Ruleset::new(Variant::Classic, 1).unwrap();
        let err = simulate(&p5, rules, &mut Teleport, &mut PassingRobber { start: Some(4) }, 5).unwrap_err();
        assert_eq!(err, GameError::IllegalMove { round: 1, reason: "cops may only stay or step to a neighbour" });
    }
}
