//! Named verification suites.

use std::time::Instant;

use serde::Serialize;
use strikeback_core::enumerate::connected_graphs_up_to;
use strikeback_core::generate::{generate, instance_seed, petersen, Family};
use strikeback_core::harness::{
    check_cycle_formula, check_hyper_lower, check_k1m_diam2, check_known_value, check_one_guard_witness, CheckId,
    CheckOutcome, Instance, Profile, Verdict,
};
use strikeback_core::invariants::{diameter, domination_number, is_k1m_free};
use strikeback_core::{Graph, GraphError, Hypergraph};

use crate::corpus::{Job, Runner};
use crate::report::{aggregate, outcome_json, Aggregate, OutcomeJson};

pub const SUITES: [&str; 12] = [
    "cycles",
    "petersen",
    "petersen-line",
    "sandwich",
    "cc12",
    "bipartite",
    "shadow",
    "k1m",
    "outerplanar",
    "guard",
    "girth",
    "oracle",
];

pub struct Section {
    pub suite: &'static str,
    pub outcomes: Vec<CheckOutcome>,
    pub elapsed_ms: u64,
}

fn enumerated(max_n: usize) -> Vec<Job> {
    connected_graphs_up_to(max_n).into_iter().map(|g| Job::new(Instance::labelled("connected", &g), g)).collect()
}

fn seeded(seed: u64, count: usize, family: impl Fn(usize) -> Family) -> Result<Vec<Job>, GraphError> {
    (0..count)
        .map(|i| {
            let f = family(i);
            let s = instance_seed(seed, i as u64);
            let g = generate(&f, s)?;
            Ok(Job::new(Instance::from_family(f, s, &g), g))
        })
        .collect()
}

fn fixed(f: Family) -> Job {
    let g = generate(&f, 0).expect("fixed family parameters are valid");
    Job::new(Instance::from_family(f, 0, &g), g)
}

pub fn line_of_petersen() -> Graph {
    Hypergraph::from_graph(&petersen()).line_graph().expect("15 vertices")
}

fn petersen_line(runner: &Runner) -> Vec<CheckOutcome> {
    let lp = line_of_petersen();
    let label = "line graph of petersen";
    let p = Profile::new(&lp, runner.opts);
    let mut cc = check_known_value(Instance::labelled(label, &lp), "cc", 4, p.cc());
    if cc.verdict == Verdict::Violation {
        if let Ok((gamma, set)) = domination_number(&lp) {
            cc.set("gamma", gamma);
            cc.note = format!("{}; vertices {set:?} dominate", cc.note);
        }
    }
    vec![
        check_known_value(Instance::labelled(label, &lp), "c", 2, p.c()),
        cc,
        check_hyper_lower(&Hypergraph::from_graph(&petersen()), 2, runner.opts),
        check_k1m_diam2(&p, Instance::labelled(label, &lp), Some(3)),
    ]
}

/// Claw-free graphs of diameter 2: all small connected ones, seeded
/// gnp(9, 0.5) survivors, and the line graph of Petersen if it qualifies.
fn k1m_jobs(seed: u64) -> Result<Vec<Job>, GraphError> {
    let qualifies = |g: &Graph| diameter(g) == Some(2) && is_k1m_free(g, 3);
    let mut jobs: Vec<Job> = enumerated(7).into_iter().filter(|j| qualifies(&j.graph)).collect();
    jobs.extend(seeded(seed, 200, |_| Family::ConnectedGnp { n: 9, p: 0.5 })?.into_iter().filter(|j| qualifies(&j.graph)));
    let lp = line_of_petersen();
    if qualifies(&lp) {
        jobs.push(Job::new(Instance::labelled("line graph of petersen", &lp), lp));
    }
    Ok(jobs)
}

fn girth_jobs() -> Vec<Job> {
    let mut jobs: Vec<Job> = (3..=12).map(|n| fixed(Family::Cycle { n })).collect();
    jobs.push(fixed(Family::Petersen));
    jobs
}

pub fn run_suite(name: &str, runner: &Runner, seed: u64) -> Result<Vec<Section>, GraphError> {
    if name == "all" {
        let mut all = Vec::new();
        for s in SUITES {
            all.extend(run_suite(s, runner, seed)?);
        }
        return Ok(all);
    }
    let suite = *SUITES.iter().find(|&&s| s == name).ok_or(GraphError::InvalidParameter("unknown suite"))?;
    let start = Instant::now();
    let outcomes = match suite {
        "cycles" => check_cycle_formula(3, 12, runner.opts),
        "petersen" => {
            let g = petersen();
            let p = Profile::new(&g, runner.opts);
            let inst = Instance::from_family(Family::Petersen, 0, &g);
            let mut out = vec![check_known_value(inst, "c", 3, p.c())];
            out.extend(runner.run(&[fixed(Family::Petersen)], &[CheckId::Sandwich]));
            out
        }
        "petersen-line" => petersen_line(runner),
        "sandwich" => {
            let mut jobs = enumerated(6);
            jobs.extend(seeded(seed, 200, |_| Family::ConnectedGnp { n: 8, p: 0.5 })?);
            runner.run(&jobs, &[CheckId::Sandwich])
        }
        "cc12" => runner.run(&enumerated(6), &[CheckId::Cc1Cc2]),
        "bipartite" => {
            let mut jobs = seeded(seed, 100, |i| Family::RandomConnectedBipartite {
                a: 2 + i % 4,
                b: 2 + (i / 4) % 4,
                p: 0.45,
            })?;
            jobs.extend((4..=12).step_by(2).map(|n| fixed(Family::Cycle { n })));
            jobs.extend((2..=10).map(|n| fixed(Family::Path { n })));
            runner.run(&jobs, &[CheckId::BipartiteBound])
        }
        "shadow" => {
            let mut jobs = vec![
                fixed(Family::Cycle { n: 6 }),
                fixed(Family::Path { n: 5 }),
                fixed(Family::Cycle { n: 8 }),
                fixed(Family::CompleteBipartite { a: 2, b: 3 }),
            ];
            jobs.extend(seeded(seed, 20, |i| Family::RandomConnectedBipartite { a: 3 + i % 2, b: 4, p: 0.45 })?);
            runner.run(&jobs, &[CheckId::ShadowStrategy])
        }
        "k1m" => runner.run(&k1m_jobs(seed)?, &[CheckId::K1mDiameter2]),
        "outerplanar" => {
            let jobs = seeded(seed, 50, |i| Family::MaximalOuterplanar { n: 3 + i % 10 })?;
            runner.run(&jobs, &[CheckId::Outerplanar])
        }
        "guard" => {
            let jobs = seeded(seed, 30, |i| Family::ConnectedGnp { n: 5 + i % 5, p: 0.4 })?;
            let mut out = runner.run(&jobs, &[CheckId::PathGuarding]);
            out.push(check_one_guard_witness(7));
            out
        }
        "girth" => runner.run(&girth_jobs(), &[CheckId::GirthBound]),
        "oracle" => runner.run(&enumerated(5), &[CheckId::OracleEquivalence]),
        _ => unreachable!(),
    };
    Ok(vec![Section { suite, outcomes, elapsed_ms: start.elapsed().as_millis() as u64 }])
}

#[derive(Serialize)]
pub struct SectionJson {
    pub suite: &'static str,
    pub outcomes: Vec<OutcomeJson>,
    pub aggregate: Aggregate,
}

#[derive(Serialize)]
pub struct VerifyJson {
    pub suite: String,
    pub seed: u64,
    pub sections: Vec<SectionJson>,
    #[serde(flatten)]
    pub totals: Aggregate,
    /// Assert-style violations; the run fails when this is non-zero.
    pub failures: usize,
    /// Girth-bound violations, listed apart because they never fail a run.
    pub discrepancies: Vec<OutcomeJson>,
}

pub fn verify_json(suite: &str, seed: u64, sections: &[Section], timings: bool) -> VerifyJson {
    let all: Vec<CheckOutcome> = sections.iter().flat_map(|s| s.outcomes.iter().cloned()).collect();
    let mut totals = aggregate(&all);
    if timings {
        totals.elapsed_ms = Some(sections.iter().map(|s| s.elapsed_ms).sum());
    }
    VerifyJson {
        suite: suite.to_string(),
        seed,
        sections: sections
            .iter()
            .map(|s| {
                let mut agg = aggregate(&s.outcomes);
                if timings {
                    agg.elapsed_ms = Some(s.elapsed_ms);
                }
                SectionJson { suite: s.suite, outcomes: s.outcomes.iter().map(outcome_json).collect(), aggregate: agg }
            })
            .collect(),
        totals,
        failures: all.iter().filter(|o| o.is_failure()).count(),
        discrepancies: discrepancies(&all).map(outcome_json).collect(),
    }
}

pub fn discrepancies(all: &[CheckOutcome]) -> impl Iterator<Item = &CheckOutcome> {
    all.iter().filter(|o| o.verdict == Verdict::Violation && !o.check.asserts())
}
