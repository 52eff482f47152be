//! Retrograde solver: labels every cop-winning position by backward
//! induction from the capture positions.
//!
//! A cops-to-move position is winning as soon as one successor is; a
//! robber-to-move position once all of its successors are, tracked with a
//! per-position counter of unresolved successors. Positions left unlabeled
//! at the fixpoint are robber wins. Processing the queue in FIFO order makes
//! every label the optimal capture distance in plies.

use alloc::vec::Vec;

use super::index::MultisetIndex;
use super::simulate::RobberMove;
use super::{cop_moves, GameState, Ruleset, Side, Variant};
use crate::error::GameError;
use crate::graph::{Graph, VertexSet};
use crate::invariants::{domination_number, is_connected};

/// Default transition budget.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Largest dense state table the solver will allocate.
pub const MAX_STATES: u64 = 1 << 31;

const UNLABELED: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Maximum number of transitions generated before giving up.
    pub budget: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { budget: DEFAULT_BUDGET }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Metrics {
    /// Live positions (no cop on the robber) in the state space.
    pub states: u64,
    pub transitions: u64,
}

/// Solved game. Immutable once built.
#[derive(Clone, Debug)]
pub struct SolveResult {
    graph: Graph,
    rules: Ruleset,
    index: MultisetIndex,
    /// Vertices within distance 1 of some cop, per multiset.
    dominated: Vec<VertexSet>,
    /// Vertices carrying a cop, per multiset.
    occupied: Vec<VertexSet>,
    succ_start: Vec<u32>,
    succ: Vec<u32>,
    rank: Vec<u32>,
    cops_win: bool,
    initial_cops: Vec<usize>,
    initial_robber: Option<usize>,
    metrics: Metrics,
}

struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    #[inline]
    fn spend(&mut self, n: u64, states: u64) -> Result<(), GameError> {
        self.used += n;
        if self.used > self.limit {
            Err(GameError::Budget { budget: self.limit, states })
        } else {
            Ok(())
        }
    }
}

pub fn solve_k(g: &Graph, rules: Ruleset) -> Result<SolveResult, GameError> {
    solve_k_with(g, rules, &SolveOptions::default())
}

pub fn solve_k_with(g: &Graph, rules: Ruleset, opts: &SolveOptions) -> Result<SolveResult, GameError> {
    if rules.cops == 0 {
        return Err(GameError::NoCops);
    }
    if !is_connected(g) {
        return Err(GameError::Disconnected);
    }
    let n = g.order();
    let k = rules.cops;
    if k > 16 {
        return Err(GameError::TooLarge { states: u64::MAX, limit: MAX_STATES });
    }
    let ms_total: u64 = (0..=k).map(|j| super::index::multiset_count(n, j)).sum();
    let total_states = ms_total.saturating_mul(2 * n as u64);
    if total_states > MAX_STATES {
        return Err(GameError::TooLarge { states: total_states, limit: MAX_STATES });
    }

    let index = MultisetIndex::new(n, k);
    let mut budget = Budget { limit: opts.budget, used: 0 };
    let min_size = match rules.variant {
        Variant::Classic => k,
        Variant::Attacking => 0,
    };
    let in_play = index.offsets_from(min_size);

    let mut dominated = alloc::vec![0u64; index.total()];
    let mut occupied = alloc::vec![0u64; index.total()];
    let mut live_states = 0u64;
    for m in in_play.clone() {
        for &c in index.members(m) {
            dominated[m] |= g.closed_neighbor_set(c as usize);
            occupied[m] |= 1 << c;
        }
        live_states += 2 * (n - occupied[m].count_ones() as usize) as u64;
    }

    // cop-move successors per multiset; the relation is symmetric, so the
    // same lists serve as predecessor lists
    let mut succ_start = alloc::vec![0u32; index.total() + 1];
    let mut succ = Vec::new();
    let mut cops = Vec::with_capacity(k);
    for m in 0..index.total() {
        if m >= in_play.start {
            cops.clear();
            cops.extend(index.members(m).iter().map(|&c| c as usize));
            let mut targets: Vec<u32> = cop_moves(g, &cops).iter().map(|ms| index.rank(ms) as u32).collect();
            budget.spend(targets.len() as u64, live_states)?;
            targets.sort_unstable();
            targets.dedup();
            succ.extend_from_slice(&targets);
        }
        succ_start[m + 1] = succ.len() as u32;
    }

    let attacking = rules.variant == Variant::Attacking;
    let states = index.total() * n * 2;
    let mut rank = alloc::vec![UNLABELED; states];
    let mut pending = alloc::vec![0u8; states];
    let mut queue: Vec<u32> = Vec::new();
    let id = |m: usize, r: usize, side: Side| (m * n + r) * 2 + side as usize;

    for m in in_play.clone() {
        let occ = occupied[m];
        let counts = |v: usize| index.members(m).iter().filter(|&&c| c as usize == v).count();
        for r in 0..n {
            if occ >> r & 1 == 1 {
                continue;
            }
            if dominated[m] >> r & 1 == 1 {
                rank[id(m, r, Side::Cops)] = 1;
                queue.push(id(m, r, Side::Cops) as u32);
            }
            let mut open = 1u8;
            for &u in g.neighbors(r) {
                match counts(u) {
                    0 => open += 1,
                    1 if attacking => open += 1,
                    _ => {}
                }
            }
            pending[id(m, r, Side::Robber)] = open;
            budget.spend(g.degree(r) as u64 + 1, live_states)?;
        }
    }

    let mut head = 0;
    let mut grown = Vec::with_capacity(k);
    while head < queue.len() {
        let s = queue[head] as usize;
        head += 1;
        let next = rank[s] + 1;
        let side = s & 1;
        let r = (s >> 1) % n;
        let m = (s >> 1) / n;
        if side == Side::Cops as usize {
            // robber-to-move predecessors: pass or step into r
            let visit = |p: usize, rank: &mut [u32], pending: &mut [u8], queue: &mut Vec<u32>| {
                if rank[p] == UNLABELED {
                    pending[p] -= 1;
                    if pending[p] == 0 {
                        rank[p] = next;
                        queue.push(p as u32);
                    }
                }
            };
            visit(id(m, r, Side::Robber), &mut rank, &mut pending, &mut queue);
            let occ = occupied[m];
            for &r0 in g.neighbors(r) {
                if occ >> r0 & 1 == 0 {
                    visit(id(m, r0, Side::Robber), &mut rank, &mut pending, &mut queue);
                }
            }
            // attack predecessors: a lone cop stood on r before the robber struck
            if attacking && index.len_of(m) < k {
                grown.clear();
                grown.extend(index.members(m).iter().map(|&c| c as usize));
                let at = grown.partition_point(|&c| c < r);
                grown.insert(at, r);
                let m2 = index.rank(&grown);
                let occ2 = occupied[m2];
                for &r0 in g.neighbors(r) {
                    if occ2 >> r0 & 1 == 0 {
                        visit(id(m2, r0, Side::Robber), &mut rank, &mut pending, &mut queue);
                    }
                }
            }
            budget.spend(2 * g.degree(r) as u64 + 1, live_states)?;
        } else {
            let preds = &succ[succ_start[m] as usize..succ_start[m + 1] as usize];
            for &m0 in preds {
                let m0 = m0 as usize;
                if occupied[m0] >> r & 1 == 0 {
                    let p = id(m0, r, Side::Cops);
                    if rank[p] == UNLABELED {
                        rank[p] = next;
                        queue.push(p as u32);
                    }
                }
            }
            budget.spend(preds.len() as u64, live_states)?;
        }
    }

    let mut result = SolveResult {
        graph: g.clone(),
        rules,
        index,
        dominated,
        occupied,
        succ_start,
        succ,
        rank,
        cops_win: false,
        initial_cops: Vec::new(),
        initial_robber: None,
        metrics: Metrics { states: live_states, transitions: budget.used },
    };
    result.choose_initial();
    Ok(result)
}

impl SolveResult {
    fn id(&self, m: usize, r: usize, side: Side) -> usize {
        (m * self.graph.order() + r) * 2 + side as usize
    }

    fn cops_of(&self, m: usize) -> Vec<usize> {
        self.index.members(m).iter().map(|&c| c as usize).collect()
    }

    /// Worst robber placement against the cops placed as multiset `m`:
    /// `(max rank, vertex)`, with `u32::MAX` marking a robber win.
    fn worst_placement(&self, m: usize) -> Option<(u32, usize)> {
        let n = self.graph.order();
        (0..n)
            .filter(|&r| self.occupied[m] >> r & 1 == 0)
            .map(|r| (self.rank[self.id(m, r, Side::Cops)], r))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
    }

    fn choose_initial(&mut self) {
        let k = self.rules.cops;
        let mut best: Option<(u32, usize)> = None;
        for m in self.index.size_range(k) {
            let worst = self.worst_placement(m).map_or(0, |w| w.0);
            if worst != UNLABELED && best.is_none_or(|b| worst < b.0) {
                best = Some((worst, m));
            }
        }
        let m = match best {
            Some((_, m)) => {
                self.cops_win = true;
                m
            }
            None => self.index.size_range(k).start,
        };
        self.initial_cops = self.cops_of(m);
        self.initial_robber = self.worst_placement(m).map(|w| w.1);
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rules(&self) -> Ruleset {
        self.rules
    }

    /// Whether some placement of all cops wins against every robber placement.
    pub fn cops_win(&self) -> bool {
        self.cops_win
    }

    pub fn metrics(&self) -> Metrics {
        self.metrics
    }

    /// Winning cop placement when `cops_win`, otherwise all cops on vertex 0.
    pub fn initial_cops(&self) -> &[usize] {
        &self.initial_cops
    }

    /// Robber placement that delays capture longest (or escapes) against
    /// [`Self::initial_cops`]; `None` if the cops cover every vertex.
    pub fn initial_robber(&self) -> Option<usize> {
        self.initial_robber
    }

    /// Dense index of a live in-play state.
    pub fn state_index(&self, s: &GameState) -> Option<usize> {
        let n = self.graph.order();
        let min = match self.rules.variant {
            Variant::Classic => self.rules.cops,
            Variant::Attacking => 0,
        };
        if s.robber >= n || s.cops.len() > self.rules.cops || s.cops.len() < min || s.cops.iter().any(|&c| c >= n) {
            return None;
        }
        let m = self.index.rank(&s.cops);
        if self.occupied[m] >> s.robber & 1 == 1 {
            return None;
        }
        Some(self.id(m, s.robber, s.to_move))
    }

    /// Optimal capture distance in plies for a cop-winning state.
    pub fn rank(&self, s: &GameState) -> Option<u32> {
        self.state_index(s).map(|i| self.rank[i]).filter(|&r| r != UNLABELED)
    }

    pub fn is_cop_win(&self, s: &GameState) -> bool {
        self.rank(s).is_some()
    }

    /// Rank of the cops-to-move position after the robber places at `r`
    /// against `cops`; `Some(0)` if `r` holds a cop.
    pub fn placement_rank(&self, cops: &[usize], r: usize) -> Option<u32> {
        if cops.contains(&r) {
            return Some(0);
        }
        self.rank(&GameState::new(cops.to_vec(), r, Side::Cops))
    }

    /// Fastest capturing cop response from a winning cops-to-move state,
    /// as the resulting robber-to-move state. A capture puts a cop on the
    /// robber's vertex. `None` when the cops cannot force a win.
    pub fn best_cop_move(&self, s: &GameState) -> Option<GameState> {
        let i = self.state_index(s)?;
        if s.to_move != Side::Cops || self.rank[i] == UNLABELED {
            return None;
        }
        let m = self.index.rank(&s.cops);
        let r = s.robber;
        let options = &self.succ[self.succ_start[m] as usize..self.succ_start[m + 1] as usize];
        let chosen = if self.dominated[m] >> r & 1 == 1 {
            options.iter().copied().find(|&m2| self.occupied[m2 as usize] >> r & 1 == 1)
        } else {
            options
                .iter()
                .copied()
                .filter(|&m2| self.occupied[m2 as usize] >> r & 1 == 0)
                .map(|m2| (self.rank[self.id(m2 as usize, r, Side::Robber)], m2))
                .filter(|&(rk, _)| rk != UNLABELED)
                .min()
                .map(|(_, m2)| m2)
        };
        chosen.map(|m2| GameState { cops: self.cops_of(m2 as usize), robber: r, to_move: Side::Robber })
    }

    /// Robber reply from a robber-to-move state: the longest-surviving move
    /// when the cops are winning, otherwise a move into a robber-winning
    /// position. Ties go to the smallest state index.
    pub fn best_robber_move(&self, s: &GameState) -> Option<RobberMove> {
        let i = self.state_index(s)?;
        if s.to_move != Side::Robber {
            return None;
        }
        let r = s.robber;
        let m = self.index.rank(&s.cops);
        let mut options: Vec<(usize, RobberMove)> = Vec::with_capacity(self.graph.degree(r) + 1);
        options.push((self.id(m, r, Side::Cops), RobberMove::Pass));
        for &u in self.graph.neighbors(r) {
            match s.cops_at(u) {
                0 => options.push((self.id(m, u, Side::Cops), RobberMove::To(u))),
                1 if self.rules.variant == Variant::Attacking => {
                    let rest: Vec<usize> = s.cops.iter().copied().filter(|&c| c != u).collect();
                    options.push((self.id(self.index.rank(&rest), u, Side::Cops), RobberMove::To(u)));
                }
                _ => {}
            }
        }
        let pick = if self.rank[i] == UNLABELED {
            options.iter().filter(|o| self.rank[o.0] == UNLABELED).min_by_key(|o| o.0)
        } else {
            options.iter().max_by(|a, b| self.rank[a.0].cmp(&self.rank[b.0]).then(b.0.cmp(&a.0)))
        };
        pick.map(|o| o.1)
    }

    /// Every winning cops-to-move state with its chosen response.
    pub fn cop_strategy(&self) -> Vec<(GameState, GameState)> {
        self.live_states(Side::Cops)
            .filter_map(|s| self.best_cop_move(&s).map(|t| (s, t)))
            .collect()
    }

    /// Every robber-to-move state with the robber's chosen response.
    pub fn robber_strategy(&self) -> Vec<(GameState, RobberMove)> {
        self.live_states(Side::Robber)
            .filter_map(|s| self.best_robber_move(&s).map(|t| (s, t)))
            .collect()
    }

    /// Live in-play states with `side` to move, in index order.
    pub fn live_states(&self, side: Side) -> impl Iterator<Item = GameState> + '_ {
        let min = match self.rules.variant {
            Variant::Classic => self.rules.cops,
            Variant::Attacking => 0,
        };
        let n = self.graph.order();
        self.index.offsets_from(min).flat_map(move |m| {
            (0..n)
                .filter(move |&r| self.occupied[m] >> r & 1 == 0)
                .map(move |r| GameState { cops: self.cops_of(m), robber: r, to_move: side })
        })
    }
}

/// Cop number of one variant together with the winning solve.
#[derive(Clone, Debug)]
pub struct CopNumber {
    pub value: usize,
    pub solution: SolveResult,
    /// Domination number, the cutoff for the search.
    pub domination: usize,
}

/// Least `k` for which `k` cops win, searched upward from 1. Cops on a
/// minimum dominating set capture on their first move, so the search never
/// passes the domination number.
pub fn cop_number(g: &Graph, variant: Variant, opts: &SolveOptions) -> Result<CopNumber, GameError> {
    if !is_connected(g) {
        return Err(GameError::Disconnected);
    }
    let (gamma, _) = domination_number(g)?;
    for k in 1..=gamma {
        let res = solve_k_with(g, Ruleset { variant, cops: k }, opts)?;
        if res.cops_win() {
            return Ok(CopNumber { value: k, solution: res, domination: gamma });
        }
    }
    Err(GameError::Malformed("cops on a dominating set failed to win"))
}

impl MultisetIndex {
    /// Indices of all multisets with at least `min` members.
    pub(crate) fn offsets_from(&self, min: usize) -> core::ops::Range<usize> {
        self.size_range(min).start..self.total()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, path, petersen};
    use crate::hypergraph::Hypergraph;

    fn wins(g: &Graph, variant: Variant, k: usize) -> bool {
        solve_k(g, Ruleset::new(variant, k).unwrap()).unwrap().cops_win()
    }

    #[test]
    fn seven_cycle_attacking() {
        let c7 = cycle(7).unwrap();
        assert!(!wins(&c7, Variant::Attacking, 2));
        assert!(wins(&c7, Variant::Attacking, 3));
    }

    #[test]
    fn complete_graphs_need_one_cop() {
        for n in 1..=6 {
            assert!(wins(&complete(n).unwrap(), Variant::Attacking, 1));
        }
    }

    #[test]
    fn classic_petersen() {
        let c = cop_number(&petersen(), Variant::Classic, &SolveOptions::default()).unwrap();
        assert_eq!(c.value, 3);
        assert_eq!(c.domination, 3);
    }

    #[test]
    fn path_attacking_needs_two() {
        let c = cop_number(&path(4).unwrap(), Variant::Attacking, &SolveOptions::default()).unwrap();
        assert_eq!(c.value, 2);
        let c = cop_number(&path(4).unwrap(), Variant::Classic, &SolveOptions::default()).unwrap();
        assert_eq!(c.value, 1);
    }

    #[test]
    fn cycle_table() {
        let expect = [1, 2, 2, 2, 3, 3, 3, 3, 3, 3];
        for (n, &want) in (3..=12).zip(&expect) {
            let got = cop_number(&cycle(n).unwrap(), Variant::Attacking, &SolveOptions::default()).unwrap();
            assert_eq!(got.value, want, "cc(C_{n})");
        }
    }

    #[test]
    fn classic_line_graph_of_petersen() {
        let lp = Hypergraph::from_graph(&petersen()).line_graph().unwrap();
        let c = cop_number(&lp, Variant::Classic, &SolveOptions::default()).unwrap();
        assert_eq!(c.value, 2);
    }

    #[test]
    fn state_count_on_c4() {
        // direct enumeration of live states: multisets of size <= 2 over
        // 4 vertices, robber on a cop-free vertex, either side to move
        let mut live = 0u64;
        for j in 0..=2usize {
            let mut count = 0;
            for a in 0..4 {
                for b in a..4 {
                    let ms: Vec<usize> = [a, b].into_iter().take(j).collect();
                    if j == 1 && b != a {
                        continue;
                    }
                    if j == 0 && (a, b) != (0, 0) {
                        continue;
                    }
                    count += 1;
                    live += 2 * (0..4).filter(|r| !ms.contains(r)).count() as u64;
                }
            }
            assert_eq!(count, crate::game::index::multiset_count(4, j));
        }
        let res = solve_k(&cycle(4).unwrap(), Ruleset::new(Variant::Attacking, 2).unwrap()).unwrap();
        assert_eq!(res.metrics().states, live);
        assert_eq!(live, 2 * (4 + 4 * 3 + 4 * 3 + 6 * 2));
    }

    #[test]
    fn zero_cop_states_never_win() {
        let res = solve_k(&cycle(5).unwrap(), Ruleset::new(Variant::Attacking, 2).unwrap()).unwrap();
        for side in [Side::Cops, Side::Robber] {
            for s in res.live_states(side).filter(|s| s.cops.is_empty()) {
                assert!(!res.is_cop_win(&s));
            }
        }
    }

    #[test]
    fn rank_soundness_on_small_graphs() {
        for g in [cycle(5).unwrap(), path(5).unwrap(), petersen()] {
            for variant in [Variant::Classic, Variant::Attacking] {
                let res = solve_k(&g, Ruleset::new(variant, 2).unwrap()).unwrap();
                for s in res.live_states(Side::Cops) {
                    let Some(rank) = res.rank(&s) else { continue };
                    let mut cur = s.clone();
                    let mut plies = 0;
                    loop {
                        plies += 1;
                        if cur.to_move == Side::Cops {
                            let next = res.best_cop_move(&cur).unwrap();
                            if next.cops.contains(&next.robber) {
                                break;
                            }
                            assert_eq!(res.rank(&next), Some(rank - plies));
                            cur = next;
                        } else {
                            let mv = res.best_robber_move(&cur).unwrap();
                            let to = match mv {
                                RobberMove::Pass => cur.robber,
                                RobberMove::To(u) => u,
                            };
                            let cops: Vec<usize> = if cur.cops_at(to) == 1 && variant == Variant::Attacking {
                                cur.cops.iter().copied().filter(|&c| c != to).collect()
                            } else {
                                cur.cops.clone()
                            };
                            if cur.cops_at(to) > 0 && cops.len() == cur.cops.len() {
                                break;
                            }
                            cur = GameState::new(cops, to, Side::Cops);
                            assert_eq!(res.rank(&cur), Some(rank - plies));
                        }
                    }
                    assert_eq!(plies, rank);
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let err = solve_k_with(&petersen(), Ruleset::new(Variant::Attacking, 3).unwrap(), &SolveOptions { budget: 1000 })
            .unwrap_err();
        assert!(matches!(err, GameError::Budget { budget: 1000, .. }));
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert_eq!(
            solve_k(&g, Ruleset::new(Variant::Classic, 1).unwrap()).unwrap_err(),
            GameError::Disconnected
        );
    }
}
