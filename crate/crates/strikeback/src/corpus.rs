//! Running per-graph checks over batches of instances on a worker pool.

use std::time::Instant;

use rayon::prelude::*;
use rayon::ThreadPool;
use strikeback_core::game::{SolveOptions, Variant};
use strikeback_core::generate::CorpusSpec;
use strikeback_core::harness::{
    check_bipartite_bound, check_cc1_and_cc2, check_girth_bound, check_k1m_diam2, check_oracle,
    check_outerplanar, check_path_guarding, check_sandwich, shadow::DEFAULT_SHADOW_LIMIT, shadow_strategy_exhaustive,
    CheckId, CheckOutcome, Instance, Profile,
};
use strikeback_core::{Graph, GraphError};

use crate::report::{aggregate, Aggregate};

/// A graph together with its report descriptor.
#[derive(Clone, Debug)]
pub struct Job {
    pub instance: Instance,
    pub graph: Graph,
}

impl Job {
    pub fn new(instance: Instance, graph: Graph) -> Self {
        Job { instance, graph }
    }
}

pub struct Runner {
    pool: ThreadPool,
    pub opts: SolveOptions,
}

impl Runner {
    /// `jobs = 0` uses one worker per available processor.
    pub fn new(jobs: usize, opts: SolveOptions) -> Self {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("worker pool");
        Runner { pool, opts }
    }

    /// Runs `checks` on every job. Outcomes come back in job order, then
    /// check order, whatever the completion order.
    pub fn run(&self, jobs: &[Job], checks: &[CheckId]) -> Vec<CheckOutcome> {
        let opts = self.opts;
        self.pool.install(|| {
            jobs.par_iter()
                .map(|job| {
                    let p = Profile::new(&job.graph, opts);
                    checks.iter().map(|&id| run_check(id, &p, job.instance.clone())).collect::<Vec<_>>()
                })
                .collect::<Vec<_>>()
                .into_iter()
                .flatten()
                .collect()
        })
    }

    /// Maps `f` over `items` on the pool, keeping input order.
    pub fn map<T: Sync, R: Send>(&self, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
        self.pool.install(|| items.par_iter().map(f).collect())
    }
}

/// Dispatches a per-graph check with its default parameters.
///
/// Panics for checks that need more than one graph as input.
pub fn run_check(id: CheckId, p: &Profile<'_>, inst: Instance) -> CheckOutcome {
    match id {
        CheckId::Sandwich => check_sandwich(p, inst),
        CheckId::GirthBound => check_girth_bound(p, inst),
        CheckId::Cc1Cc2 => check_cc1_and_cc2(p, inst),
        CheckId::BipartiteBound => check_bipartite_bound(p, inst),
        CheckId::ShadowStrategy => shadow_strategy_exhaustive(p.graph, inst, p.opts, DEFAULT_SHADOW_LIMIT).0,
        CheckId::K1mDiameter2 => check_k1m_diam2(p, inst, None),
        CheckId::Outerplanar => check_outerplanar(p, inst),
        CheckId::PathGuarding => check_path_guarding(p.graph, inst, 2, Variant::Attacking),
        CheckId::OracleEquivalence => check_oracle(p.graph, inst, 2, p.opts),
        other => panic!("{} is not a per-graph check", other.name()),
    }
}

/// Generates the corpus and runs `checks` over it.
pub fn run_corpus(
    runner: &Runner,
    spec: &CorpusSpec,
    checks: &[CheckId],
) -> Result<(Vec<CheckOutcome>, Aggregate), GraphError> {
    let start = Instant::now();
    let jobs: Vec<Job> = spec
        .instances()?
        .into_iter()
        .map(|(seed, g)| Job::new(Instance::from_family(spec.family, seed, &g), g))
        .collect();
    let outcomes = runner.run(&jobs, checks);
    let mut agg = aggregate(&outcomes);
    agg.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    Ok((outcomes, agg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use strikeback_core::generate::Family;

    #[test]
    fn corpus_is_deterministic_across_pool_sizes() {
        let spec = CorpusSpec { family: Family::ConnectedGnp { n: 7, p: 0.5 }, count: 12, seed: 42 };
        let checks = [CheckId::Sandwich, CheckId::Cc1Cc2];
        let (a, agg) = run_corpus(&Runner::new(1, SolveOptions::default()), &spec, &checks).unwrap();
        let (b, _) = run_corpus(&Runner::new(4, SolveOptions::default()), &spec, &checks).unwrap();
        assert_eq!(a, b);
        assert_eq!((agg.pass, agg.violation), (24, 0));
    }
}
