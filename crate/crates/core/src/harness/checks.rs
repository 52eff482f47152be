use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use super::{CheckId, CheckOutcome, Instance, Profile};
use crate::enumerate::connected_graphs;
use crate::game::guard::{guardable, GuardInstance};
use crate::game::{minimax_oracle, solve_k_with, Ruleset, SolveOptions, Variant};
use crate::generate::{cycle, Family};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::invariants::{
    diameter, girth, has_universal_vertex, invariants_basic, is_k1m_free, isometric_shortest_path,
    least_free_star,
};

/// Unwraps a solver result or turns the outcome into a skip.
macro_rules! need {
    ($out:expr, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return $out.skipped(err.to_string()),
        }
    };
}

/// c(G) <= cc(G) <= min(2 c(G), γ(G)).
pub fn check_sandwich(p: &Profile<'_>, inst: Instance) -> CheckOutcome {
    let out = CheckOutcome::new(CheckId::Sandwich, inst);
    let c = need!(out, p.c());
    let cc = need!(out, p.cc());
    let gamma = need!(out, p.gamma());
    out.with("c", c).with("cc", cc).with("gamma", gamma).verdict(c <= cc && cc <= (2 * c).min(gamma))
}

/// Expected cc(C_n): 1 for the triangle, 2 up to the hexagon, 3 beyond.
pub fn expected_cycle_cc(n: usize) -> usize {
    match n {
        3 => 1,
        4..=6 => 2,
        _ => 3,
    }
}

pub fn check_cycle_formula(n_lo: usize, n_hi: usize, opts: SolveOptions) -> Vec<CheckOutcome> {
    assert!(3 <= n_lo && n_lo <= n_hi, "cycle range must satisfy 3 <= lo <= hi");
    (n_lo..=n_hi)
        .map(|n| {
            let g = cycle(n).unwrap();
            let inst = Instance::from_family(Family::Cycle { n }, 0, &g);
            let out = CheckOutcome::new(CheckId::CycleFormula, inst).with("n", n);
            let cc = need!(out, Profile::new(&g, opts).cc());
            let want = expected_cycle_cc(n);
            out.with("cc", cc).with("expected", want).verdict(cc == want)
        })
        .collect()
}

/// Report-only: girth >= 5 and cc(G) >= δ(G) + 1.
pub fn check_girth_bound(p: &Profile<'_>, inst: Instance) -> CheckOutcome {
    let g = girth(p.graph);
    let delta = invariants_basic(p.graph).min_degree;
    let out = CheckOutcome::new(CheckId::GirthBound, inst).with("girth", g).with("delta", delta);
    if g.is_some_and(|g| g < 5) {
        return out.skipped("girth below 5");
    }
    let cc = need!(out, p.cc());
    let holds = cc > delta;
    let mut out = out.with("cc", cc).verdict(holds);
    if !holds {
        out.note = format!("cc = {cc} < delta + 1 = {}", delta + 1);
    }
    out
}

/// cc = 1 exactly with a universal vertex; cop-win without a universal
/// vertex gives cc = 2; c >= 2 with γ = 2 gives cc = 2.
pub fn check_cc1_and_cc2(p: &Profile<'_>, inst: Instance) -> CheckOutcome {
    let out = CheckOutcome::new(CheckId::Cc1Cc2, inst);
    let c = need!(out, p.c());
    let cc = need!(out, p.cc());
    let gamma = need!(out, p.gamma());
    let universal = has_universal_vertex(p.graph);
    let a = (cc == 1) == universal;
    let b = !(c == 1 && !universal) || cc == 2;
    let d = !(c >= 2 && gamma == 2) || cc == 2;
    let mut out = out.with("c", c).with("cc", cc).with("gamma", gamma).with("universal", universal).verdict(a && b && d);
    if !(a && b && d) {
        out.note = format!("clauses a={a} b={b} c={d}");
    }
    out
}

/// cc(G) <= c(G) + 2 on connected bipartite graphs.
pub fn check_bipartite_bound(p: &Profile<'_>, inst: Instance) -> CheckOutcome {
    let out = CheckOutcome::new(CheckId::BipartiteBound, inst);
    if invariants_basic(p.graph).bipartition.is_none() {
        return out.skipped("not bipartite");
    }
    let c = need!(out, p.c());
    let cc = need!(out, p.cc());
    out.with("c", c).with("cc", cc).verdict(cc <= c + 2)
}

/// cc(G) <= c(G) + 2m - 2 for K_{1,m}-free graphs of diameter 2. With
/// `m = None` the least admissible `m >= 3` is used.
pub fn check_k1m_diam2(p: &Profile<'_>, inst: Instance, m: Option<usize>) -> CheckOutcome {
    let d = diameter(p.graph);
    let out = CheckOutcome::new(CheckId::K1mDiameter2, inst).with("diameter", d);
    if d != Some(2) {
        return out.skipped("diameter is not 2");
    }
    let m = match m {
        Some(m) if m < 3 => return out.skipped("m must be at least 3"),
        Some(m) if !is_k1m_free(p.graph, m) => return out.with("m", m).skipped("graph contains an induced K_{1,m}"),
        Some(m) => m,
        None => least_free_star(p.graph, 3),
    };
    let out = out.with("m", m);
    let c = need!(out, p.c());
    let cc = need!(out, p.cc());
    out.with("c", c).with("cc", cc).verdict(cc + 2 <= c + 2 * m)
}

/// cc(G) <= 3 for an outerplanar input (outerplanarity is the caller's
/// responsibility).
pub fn check_outerplanar(p: &Profile<'_>, inst: Instance) -> CheckOutcome {
    let out = CheckOutcome::new(CheckId::Outerplanar, inst);
    let cc = need!(out, p.cc());
    out.with("cc", cc).verdict(cc <= 3)
}

/// Hypotheses of the hypergraph lower bound, then cc(L(H)) >= 2k by
/// showing that 2k - 1 attacking cops lose.
pub fn check_hyper_lower(h: &Hypergraph, k: usize, opts: SolveOptions) -> CheckOutcome {
    let props = h.properties();
    let line = h.line_graph();
    let inst = match &line {
        Ok(l) => Instance::labelled("line graph of hypergraph", l),
        Err(_) => Instance { family: None, seed: None, label: Some("line graph of hypergraph".into()), graph6: Default::default() },
    };
    let out = CheckOutcome::new(CheckId::HyperLower, inst)
        .with("k", k)
        .with("linear", props.is_linear)
        .with("min_vertex_degree", props.min_vertex_degree)
        .with("berge_girth", props.berge_girth);
    if k == 0 {
        return out.skipped("k must be positive");
    }
    if !props.is_linear {
        return out.skipped("hypergraph is not linear");
    }
    if props.uniform_k != Some(k) {
        return out.skipped(format!("hypergraph is not {k}-uniform"));
    }
    if props.min_vertex_degree < 3 {
        return out.skipped("minimum vertex degree below 3");
    }
    if props.berge_girth.is_some_and(|g| g < 5) {
        return out.skipped("Berge girth below 5");
    }
    let line = need!(out, line);
    let gamma = need!(out, crate::invariants::domination_number(&line)).0;
    let out = out.with("gamma", gamma);
    if gamma < 2 * k {
        return out.skipped(format!("domination number of the line graph below {}", 2 * k));
    }
    if !crate::invariants::is_connected(&line) {
        return out.skipped("line graph is disconnected");
    }
    let fewer = need!(out, solve_k_with(&line, Ruleset { variant: Variant::Attacking, cops: 2 * k - 1 }, &opts));
    out.with("cc_at_least", if fewer.cops_win() { 2 * k - 1 } else { 2 * k })
        .verdict(!fewer.cops_win())
}

/// Every vertex pair's shortest path is guardable by `guards` guards.
/// Also records how many of these paths a single attacking guard fails on.
pub fn check_path_guarding(g: &Graph, inst: Instance, guards: usize, variant: Variant) -> CheckOutcome {
    let mut out = CheckOutcome::new(CheckId::PathGuarding, inst).with("guards", guards);
    let n = g.order();
    let mut paths = 0usize;
    let mut failures = 0usize;
    let mut single_failures = 0usize;
    for u in 0..n {
        for v in u..n {
            let path = need!(out, isometric_shortest_path(g, u, v));
            paths += 1;
            let gi = GuardInstance { graph: g, path, guards, variant };
            if !need!(out, guardable(&gi)) {
                failures += 1;
                if out.note.is_empty() {
                    out.note = format!("path {:?} not {guards}-guardable", gi.path);
                }
            }
            let one = GuardInstance { guards: 1, variant: Variant::Attacking, ..gi };
            if !need!(out, guardable(&one)) {
                single_failures += 1;
            }
        }
    }
    out.with("paths", paths).with("unguarded", failures).with("one_guard_failures", single_failures).verdict(failures == 0)
}

/// A connected graph on at most `max_n` vertices with an isometric path of
/// at least two vertices that two attacking guards hold but one does not.
pub fn one_guard_witness(max_n: usize) -> Option<(Graph, Vec<usize>)> {
    for n in 1..=max_n {
        for g in connected_graphs(n) {
            for u in 0..n {
                for v in u + 1..n {
                    let path = isometric_shortest_path(&g, u, v).ok()?;
                    let one = GuardInstance { graph: &g, path: path.clone(), guards: 1, variant: Variant::Attacking };
                    let two = GuardInstance { guards: 2, ..one.clone() };
                    if guardable(&one) == Ok(false) && guardable(&two) == Ok(true) {
                        return Some((g.clone(), path));
                    }
                }
            }
        }
    }
    None
}

pub fn check_one_guard_witness(max_n: usize) -> CheckOutcome {
    match one_guard_witness(max_n) {
        Some((g, path)) => CheckOutcome::new(CheckId::OneGuardWitness, Instance::labelled("witness search", &g))
            .with("n", g.order())
            .with("path_length", path.len())
            .note(format!("path {path:?} in graph6 {}", crate::graph6::to_graph6(&g).unwrap_or_default()))
            .verdict(true),
        None => CheckOutcome::new(CheckId::OneGuardWitness, Instance::labelled("witness search", &cycle(3).unwrap()))
            .with("max_n", max_n)
            .note("no witness found")
            .verdict(false),
    }
}

/// Retrograde solver and reference oracle agree for `1..=max_k` cops in
/// both variants.
pub fn check_oracle(g: &Graph, inst: Instance, max_k: usize, opts: SolveOptions) -> CheckOutcome {
    let mut out = CheckOutcome::new(CheckId::OracleEquivalence, inst).with("max_k", max_k);
    let mut agree = true;
    for k in 1..=max_k {
        for variant in [Variant::Classic, Variant::Attacking] {
            let rules = Ruleset { variant, cops: k };
            let fast = need!(out, solve_k_with(g, rules, &opts)).cops_win();
            let slow = need!(out, minimax_oracle(g, rules));
            if fast != slow {
                agree = false;
                out.note = format!("{} with {k} cops: solver {fast}, oracle {slow}", variant.name());
            }
        }
    }
    out.verdict(agree)
}

/// Compares a computed invariant `name` with a claimed value.
pub fn check_known_value<E: ToString>(
    inst: Instance,
    name: &'static str,
    expected: usize,
    computed: Result<usize, E>,
) -> CheckOutcome {
    let out = CheckOutcome::new(CheckId::KnownValue, inst).with("expected", expected);
    let value = need!(out, computed);
    let out = out.with(name, value).verdict(value == expected);
    if value != expected {
        let note = format!("{name} = {value}, expected {expected}");
        return out.note(note);
    }
    out
}
