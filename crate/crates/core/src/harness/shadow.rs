//! Exhaustive test of the shadow strategy on bipartite graphs.
//!
//! `k = c(G)` real cops each track a virtual shadow that plays the solved
//! classic strategy. Play starts from every shadow placement and robber
//! vertex that the classic strategy wins from, with each cop on her shadow
//! and the pair on the first shadow. Cop `i` moves (a) onto her shadow's old vertex if she
//! is off it, (b) with her shadow if the shadow's new vertex is not
//! adjacent to the robber, (c) not at all otherwise. Two further cops share
//! a vertex and step along a shortest path towards the robber every round.
//! When the robber passes, the real cops and shadows pass too and only the
//! pair advances.
//!
//! The composed cop behaviour is deterministic, so every robber behaviour
//! is explored: after each cop move we require (1) every shadow within
//! distance 1 of its cop, (2) a cop off its shadow implies shadow and
//! robber on different sides, (3) no lone cop adjacent to the robber. The
//! reachable position graph must also be acyclic, i.e. every play ends in
//! capture.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{CheckId, CheckOutcome, Instance};
use crate::game::index::next_multiset;
use crate::game::{cop_number, GameState, Side, SolveOptions, SolveResult, Variant};
use crate::graph::Graph;
use crate::invariants::{invariants_basic, Bipartition, DistanceTable};

/// Default cap on explored cops-to-move positions.
pub const DEFAULT_SHADOW_LIMIT: usize = 2_000_000;

/// Positions at the moment the cops are about to move.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Position {
    shadows: Vec<usize>,
    cops: Vec<usize>,
    pair: usize,
    robber: usize,
    robber_passed: bool,
}

/// One frame of a shadow trace, taken right after a cop move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowFrame {
    pub shadows: Vec<usize>,
    pub cops: Vec<usize>,
    pub pair: usize,
    pub robber: usize,
    pub shadow_near_cop: bool,
    pub parity: bool,
    pub no_attack: bool,
}

/// Play leading to the first failure.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ShadowTrace {
    pub frames: Vec<ShadowFrame>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ShadowReport {
    /// Starting positions: shadow placement and robber start with a
    /// classic win for the shadows.
    pub starts: usize,
    pub positions: usize,
    pub captures: usize,
    pub attack_opportunities: usize,
    pub invariant1_violations: usize,
    pub invariant2_violations: usize,
    pub invariant3_violations: usize,
    /// Shadow states with no strategy entry (shadows passed there).
    pub unmapped_shadow_states: usize,
    pub cycle_found: bool,
}

impl ShadowReport {
    pub fn clean(&self) -> bool {
        self.attack_opportunities == 0
            && self.invariant1_violations == 0
            && self.invariant2_violations == 0
            && self.invariant3_violations == 0
            && self.unmapped_shadow_states == 0
            && !self.cycle_found
    }
}

struct Explorer<'a> {
    g: &'a Graph,
    sides: Bipartition,
    dist: DistanceTable,
    strategy: &'a SolveResult,
}

/// Result of one cop move.
struct CopStep {
    next: Position,
    capture: bool,
    frame: ShadowFrame,
    unmapped: bool,
}

impl Explorer<'_> {
    /// Labels the shadows' new multiset: the lexicographically first
    /// assignment moving shadow `i` within distance 1.
    fn assign(&self, old: &[usize], new: &[usize]) -> Vec<usize> {
        fn rec(g: &Graph, old: &[usize], new: &[usize], used: &mut Vec<bool>, out: &mut Vec<usize>) -> bool {
            let i = out.len();
            if i == old.len() {
                return true;
            }
            for j in 0..new.len() {
                if !used[j] && g.dominates(old[i], new[j]) {
                    used[j] = true;
                    out.push(new[j]);
                    if rec(g, old, new, used, out) {
                        return true;
                    }
                    out.pop();
                    used[j] = false;
                }
            }
            false
        }
        let mut out = Vec::with_capacity(old.len());
        let ok = rec(self.g, old, new, &mut alloc::vec![false; new.len()], &mut out);
        debug_assert!(ok, "strategy produced an unreachable cop placement");
        out
    }

    fn cop_step(&self, p: &Position) -> CopStep {
        let r = p.robber;
        let mut unmapped = false;
        let new_shadows = if p.robber_passed || p.shadows.contains(&r) {
            p.shadows.clone()
        } else {
            let state = GameState::new(p.shadows.clone(), r, Side::Cops);
            match self.strategy.best_cop_move(&state) {
                Some(t) => self.assign(&p.shadows, &t.cops),
                None => {
                    unmapped = true;
                    p.shadows.clone()
                }
            }
        };

        let cops: Vec<usize> = if p.robber_passed {
            p.cops.clone()
        } else {
            (0..p.cops.len())
                .map(|i| {
                    if p.cops[i] != p.shadows[i] {
                        p.shadows[i]
                    } else if !self.g.has_edge(new_shadows[i], r) {
                        new_shadows[i]
                    } else {
                        p.cops[i]
                    }
                })
                .collect()
        };

        let pair = if self.g.has_edge(p.pair, r) {
            r
        } else {
            let d = self.dist.get(p.pair, r);
            *self.g.neighbors(p.pair).iter().find(|&&w| self.dist.get(w, r) + 1 == d).unwrap()
        };

        let capture = pair == r || cops.contains(&r);
        let frame = ShadowFrame {
            shadow_near_cop: (0..cops.len()).all(|i| self.g.dominates(cops[i], new_shadows[i])),
            parity: (0..cops.len())
                .all(|i| cops[i] == new_shadows[i] || self.sides.side(new_shadows[i]) != self.sides.side(r)),
            no_attack: capture || cops.iter().all(|&c| !self.g.has_edge(c, r)),
            shadows: new_shadows.clone(),
            cops: cops.clone(),
            pair,
            robber: r,
        };
        CopStep {
            next: Position { shadows: new_shadows, cops, pair, robber: r, robber_passed: false },
            capture,
            frame,
            unmapped,
        }
    }
}

/// Explores every robber behaviour against the composed `c(G) + 2` cop
/// strategy on a connected bipartite graph.
pub fn shadow_strategy_exhaustive(
    g: &Graph,
    inst: Instance,
    opts: SolveOptions,
    limit: usize,
) -> (CheckOutcome, ShadowReport, Option<ShadowTrace>) {
    let out = CheckOutcome::new(CheckId::ShadowStrategy, inst);
    let basic = invariants_basic(g);
    let Some(sides) = basic.bipartition else {
        return (out.skipped("not bipartite"), ShadowReport::default(), None);
    };
    if !basic.is_connected {
        return (out.skipped("not connected"), ShadowReport::default(), None);
    }
    let classic = match cop_number(g, Variant::Classic, &opts) {
        Ok(c) => c,
        Err(e) => return (out.skipped(alloc::string::ToString::to_string(&e)), ShadowReport::default(), None),
    };
    let k = classic.value;
    let ex = Explorer { g, sides, dist: DistanceTable::new(g), strategy: &classic.solution };
    let out = out.with("c", k).with("cops", k + 2);

    let mut report = ShadowReport::default();

    // cops-to-move positions, their successors, and how each was reached
    let mut ids: BTreeMap<Position, usize> = BTreeMap::new();
    let mut nodes: Vec<Position> = Vec::new();
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut parent: Vec<Option<(usize, ShadowFrame)>> = Vec::new();
    let mut queue = VecDeque::new();
    let mut failure: Option<(usize, ShadowFrame)> = None;

    let intern = |p: Position,
                  from: Option<(usize, ShadowFrame)>,
                  ids: &mut BTreeMap<Position, usize>,
                  nodes: &mut Vec<Position>,
                  edges: &mut Vec<Vec<usize>>,
                  parent: &mut Vec<Option<(usize, ShadowFrame)>>,
                  queue: &mut VecDeque<usize>| {
        if let Some(&id) = ids.get(&p) {
            return id;
        }
        let id = nodes.len();
        ids.insert(p.clone(), id);
        nodes.push(p);
        edges.push(Vec::new());
        parent.push(from);
        queue.push_back(id);
        id
    };

    // every start from which the shadows' classic strategy wins
    let mut placement = alloc::vec![0usize; k];
    loop {
        for r in 0..g.order() {
            if placement.contains(&r) || classic.solution.placement_rank(&placement, r).is_none() {
                continue;
            }
            let start = Position {
                shadows: placement.clone(),
                cops: placement.clone(),
                pair: placement[0],
                robber: r,
                robber_passed: false,
            };
            intern(start, None, &mut ids, &mut nodes, &mut edges, &mut parent, &mut queue);
            report.starts += 1;
        }
        if !next_multiset(&mut placement, g.order()) {
            break;
        }
    }

    while let Some(id) = queue.pop_front() {
        if nodes.len() > limit {
            let out = out.with("positions", nodes.len()).skipped(format!("more than {limit} positions"));
            report.positions = nodes.len();
            return (out, report, None);
        }
        let step = ex.cop_step(&nodes[id]);
        let f = &step.frame;
        let mut bad = false;
        if step.unmapped {
            report.unmapped_shadow_states += 1;
            bad = true;
        }
        if !f.shadow_near_cop {
            report.invariant1_violations += 1;
            bad = true;
        }
        if !f.parity {
            report.invariant2_violations += 1;
            bad = true;
        }
        if !f.no_attack {
            report.invariant3_violations += 1;
            bad = true;
        }
        if bad && failure.is_none() {
            failure = Some((id, step.frame.clone()));
        }
        if step.capture {
            report.captures += 1;
            continue;
        }

        let after = step.next;
        let r = after.robber;
        let options = core::iter::once(r).chain(g.neighbors(r).iter().copied());
        for u in options {
            let lone = after.cops.iter().filter(|&&c| c == u).count();
            let total = lone + if after.pair == u { 2 } else { 0 };
            if u != r && total >= 2 {
                report.captures += 1;
                continue;
            }
            if u != r && total == 1 {
                report.attack_opportunities += 1;
                if failure.is_none() {
                    failure = Some((id, step.frame.clone()));
                }
                continue;
            }
            let next = Position { robber: u, robber_passed: u == r, ..after.clone() };
            let child = intern(
                next,
                Some((id, step.frame.clone())),
                &mut ids,
                &mut nodes,
                &mut edges,
                &mut parent,
                &mut queue,
            );
            edges[id].push(child);
        }
    }
    report.positions = nodes.len();

    // Kahn's algorithm: leftovers lie on or lead into a cycle
    let mut indeg = alloc::vec![0usize; nodes.len()];
    for succ in &edges {
        for &t in succ {
            indeg[t] += 1;
        }
    }
    let mut ready: Vec<usize> = (0..nodes.len()).filter(|&i| indeg[i] == 0).collect();
    let mut removed = 0;
    while let Some(i) = ready.pop() {
        removed += 1;
        for &t in &edges[i] {
            indeg[t] -= 1;
            if indeg[t] == 0 {
                ready.push(t);
            }
        }
    }
    if removed < nodes.len() {
        report.cycle_found = true;
        if failure.is_none() {
            let on_cycle = (0..nodes.len()).find(|&i| indeg[i] > 0).unwrap();
            failure = Some((on_cycle, ex.cop_step(&nodes[on_cycle]).frame));
        }
    }

    let out = out
        .with("starts", report.starts)
        .with("positions", report.positions)
        .with("captures", report.captures)
        .with("attack_opportunities", report.attack_opportunities)
        .with("invariant1_violations", report.invariant1_violations)
        .with("invariant2_violations", report.invariant2_violations)
        .with("invariant3_violations", report.invariant3_violations)
        .with("cycle_found", report.cycle_found);
    let clean = report.clean();
    let mut out = out.verdict(clean);
    if !clean {
        out.note = describe(&report);
    }
    let trace = failure.map(|(id, last)| {
        let mut frames = alloc::vec![last];
        let mut cur = id;
        while let Some((prev, frame)) = &parent[cur] {
            frames.push(frame.clone());
            cur = *prev;
        }
        frames.reverse();
        ShadowTrace { frames }
    });
    (out, report, trace)
}

fn describe(r: &ShadowReport) -> String {
    format!(
        "attacks {} inv1 {} inv2 {} inv3 {} unmapped {} cycle {}",
        r.attack_opportunities,
        r.invariant1_violations,
        r.invariant2_violations,
        r.invariant3_violations,
        r.unmapped_shadow_states,
        r.cycle_found
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete_bipartite, cycle, path};
    use crate::harness::Verdict;

    fn run(g: &Graph) -> (CheckOutcome, ShadowReport) {
        let (out, rep, trace) = shadow_strategy_exhaustive(g, Instance::of(g), SolveOptions::default(), DEFAULT_SHADOW_LIMIT);
        assert_eq!(trace.is_some(), !rep.clean(), "{trace:?}");
        (out, rep)
    }

    #[test]
    fn six_cycle() {
        let (out, rep) = run(&cycle(6).unwrap());
        assert_eq!(out.verdict, Verdict::Pass, "{}", out.note);
        assert!(rep.captures > 0);
    }

    #[test]
    fn five_path() {
        let (out, _) = run(&path(5).unwrap());
        assert_eq!(out.verdict, Verdict::Pass, "{}", out.note);
    }

    #[test]
    fn complete_bipartite_and_long_cycle() {
        for g in [complete_bipartite(2, 3).unwrap(), cycle(8).unwrap()] {
            let (out, _) = run(&g);
            assert_eq!(out.verdict, Verdict::Pass, "{}", out.note);
        }
    }

    #[test]
    fn odd_cycle_skipped() {
        assert_eq!(run(&cycle(5).unwrap()).0.verdict, Verdict::Skipped);
    }
}
