use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use strikeback_core::game::{cop_number, solve_k_with, RobberMove, Ruleset, SolveOptions, SolveResult};
use strikeback_core::generate::{generate, instance_seed, CorpusSpec, Family};
use strikeback_core::graph6::{parse_graph6, to_graph6};
use strikeback_core::harness::CheckId;
use strikeback_core::invariants::{
    domination_number, girth, invariants_basic, is_k1m_free, least_free_star, universal_vertex,
};
use strikeback_core::{GameError, Graph, Hypergraph, Variant};

use strikeback::corpus::{run_corpus, Runner};
use strikeback::io::{parse_graph_text, parse_hypergraph, read_file, InputError};
use strikeback::play::{play, Human, PlayEnd};
use strikeback::report::{outcome_json, outcome_line};
use strikeback::suites::{discrepancies, run_suite, verify_json, SUITES};
use strikeback::solve_options;

#[derive(Parser)]
#[command(name = "strikeback", version, about = "Cops and (attacking) robbers: exact solver and property checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a game with k cops, or compute c / cc when k is omitted.
    Solve(SolveArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Run per-graph checks over a seeded corpus.
    Corpus(CorpusArgs),
    /// Print graph6 for a family member.
    Generate(GenerateArgs),
    /// Print girth, minimum degree, diameter, domination number and more.
    Invariants(InvariantsArgs),
    /// Play against the solved strategy.
    Play(PlayArgs),
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// cycle, path, complete, complete-bipartite, star, petersen, gnp,
    /// connected-gnp, random-connected-bipartite, maximal-outerplanar
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// First part size (bipartite families).
    #[arg(long)]
    a: Option<usize>,
    /// Second part size (bipartite families).
    #[arg(long)]
    b: Option<usize>,
    /// Leaves of a star.
    #[arg(long)]
    m: Option<usize>,
    /// Edge probability.
    #[arg(long)]
    p: Option<f64>,
}

#[derive(Args, Clone)]
struct InputArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Seed for random families.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    graph6: Option<String>,
    /// Edge-list or graph6 file.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Hypergraph file; the graph used is its line graph.
    #[arg(long)]
    hypergraph: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Classic,
    Attacking,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Classic => Variant::Classic,
            VariantArg::Attacking => Variant::Attacking,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "attacking")]
    variant: VariantArg,
    /// Number of cops; omit to compute the cop number.
    #[arg(long)]
    k: Option<usize>,
    /// Transition budget (overrides STRIKEBACK_BUDGET).
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    json: bool,
    /// Write both players' strategy tables to this JSON file.
    #[arg(long)]
    export: Option<PathBuf>,
    /// Include wall-clock time in the output.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of the suite names, or "all".
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
    /// Worker threads (0: one per processor).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct CorpusArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated check names.
    #[arg(long, value_delimiter = ',', default_value = "sandwich")]
    checks: Vec<String>,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of instances, with per-instance seeds derived from --seed.
    #[arg(long)]
    count: Option<usize>,
}

#[derive(Args)]
struct InvariantsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum HumanArg {
    Robber,
    Cops,
    None,
}

#[derive(Args)]
struct PlayArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "attacking")]
    variant: VariantArg,
    /// Number of cops; defaults to the cop number.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "robber")]
    human: HumanArg,
    /// Read moves from this file instead of the terminal.
    #[arg(long)]
    script: Option<PathBuf>,
    /// Cop moves before the robber is declared the survivor.
    #[arg(long, default_value_t = 1000)]
    rounds: usize,
    #[arg(long)]
    budget: Option<u64>,
}

/// Exit statuses.
enum Failure {
    Violation,
    BadInput(String),
    Budget(String),
    IllegalScript,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Violation => 1,
            Failure::BadInput(_) => 2,
            Failure::Budget(_) => 3,
            Failure::IllegalScript => 4,
        }
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::BadInput(e.to_string())
    }
}

impl From<strikeback_core::GraphError> for Failure {
    fn from(e: strikeback_core::GraphError) -> Self {
        Failure::BadInput(e.to_string())
    }
}

impl From<GameError> for Failure {
    fn from(e: GameError) -> Self {
        match e {
            GameError::Budget { .. } | GameError::TooLarge { .. } => Failure::Budget(e.to_string()),
            other => Failure::BadInput(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::BadInput(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn bad(msg: impl Into<String>) -> Failure {
    Failure::BadInput(msg.into())
}

impl FamilyArgs {
    fn family(&self) -> Result<Family, Failure> {
        let name = self.family.as_deref().ok_or_else(|| bad("--family is required"))?;
        let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| bad(format!("{name} needs --{flag}")));
        let p = || self.p.ok_or_else(|| bad(format!("{name} needs --p")));
        Ok(match name {
            "cycle" => Family::Cycle { n: need(self.n, "n")? },
            "path" => Family::Path { n: need(self.n, "n")? },
            "complete" => Family::Complete { n: need(self.n, "n")? },
            "complete-bipartite" => Family::CompleteBipartite { a: need(self.a, "a")?, b: need(self.b, "b")? },
            "star" => Family::Star { m: need(self.m, "m")? },
            "petersen" => Family::Petersen,
            "gnp" => Family::Gnp { n: need(self.n, "n")?, p: p()? },
            "connected-gnp" => Family::ConnectedGnp { n: need(self.n, "n")?, p: p()? },
            "random-connected-bipartite" => {
                Family::RandomConnectedBipartite { a: need(self.a, "a")?, b: need(self.b, "b")?, p: p()? }
            }
            "maximal-outerplanar" => Family::MaximalOuterplanar { n: need(self.n, "n")? },
            other => return Err(bad(format!("unknown family {other:?}"))),
        })
    }
}

impl InputArgs {
    fn graph(&self) -> Result<Graph, Failure> {
        let given = [self.family.family.is_some(), self.graph6.is_some(), self.file.is_some(), self.hypergraph.is_some()];
        if given.iter().filter(|&&b| b).count() != 1 {
            return Err(bad("give exactly one of --family, --graph6, --file, --hypergraph"));
        }
        if let Some(text) = &self.graph6 {
            return Ok(parse_graph6(text)?);
        }
        if let Some(path) = &self.file {
            return Ok(parse_graph_text(&read_file(path)?)?);
        }
        if let Some(h) = self.hyper()? {
            return Ok(h.line_graph()?);
        }
        Ok(generate(&self.family.family()?, self.seed)?)
    }

    fn hyper(&self) -> Result<Option<Hypergraph>, Failure> {
        match &self.hypergraph {
            Some(path) => Ok(Some(parse_hypergraph(&read_file(path)?)?)),
            None => Ok(None),
        }
    }
}

fn options(budget: Option<u64>) -> Result<SolveOptions, Failure> {
    solve_options(budget).map_err(Failure::BadInput)
}

fn print_json(v: &impl serde::Serialize) -> Outcome {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v).map_err(|e| bad(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn symbol(v: Variant) -> &'static str {
    match v {
        Variant::Classic => "c",
        Variant::Attacking => "cc",
    }
}

fn export_strategy(path: &PathBuf, sol: &SolveResult) -> Outcome {
    let cops: Vec<_> = sol
        .cop_strategy()
        .into_iter()
        .map(|(s, t)| json!({ "cops": s.cops, "robber": s.robber, "move_to": t.cops }))
        .collect();
    let robber: Vec<_> = sol
        .robber_strategy()
        .into_iter()
        .map(|(s, m)| {
            let to = match m {
                RobberMove::Pass => json!("pass"),
                RobberMove::To(v) => json!(v),
            };
            json!({ "cops": s.cops, "robber": s.robber, "move": to })
        })
        .collect();
    let doc = json!({
        "variant": sol.rules().variant.name(),
        "cops": sol.rules().cops,
        "cops_win": sol.cops_win(),
        "initial_cops": sol.initial_cops(),
        "cop_strategy": cops,
        "robber_strategy": robber,
    });
    let text = serde_json::to_string_pretty(&doc).map_err(|e| bad(e.to_string()))?;
    std::fs::write(path, text + "\n").map_err(|e| bad(format!("cannot write {}: {e}", path.display())))
}

fn cmd_solve(a: SolveArgs) -> Outcome {
    let g = a.input.graph()?;
    let opts = options(a.budget)?;
    let variant: Variant = a.variant.into();
    let start = Instant::now();
    let (sol, value) = match a.k {
        Some(k) => (solve_k_with(&g, Ruleset::new(variant, k)?, &opts)?, None),
        None => {
            let c = cop_number(&g, variant, &opts)?;
            (c.solution, Some(c.value))
        }
    };
    let elapsed = start.elapsed().as_millis() as u64;
    let m = sol.metrics();
    if let Some(path) = &a.export {
        export_strategy(path, &sol)?;
    }
    if a.json {
        let mut doc = json!({
            "graph6": to_graph6(&g).unwrap_or_default(),
            "variant": variant.name(),
            "cops": sol.rules().cops,
            "cops_win": sol.cops_win(),
            "initial_cops": sol.initial_cops(),
            "initial_robber": sol.initial_robber(),
            "states": m.states,
            "transitions": m.transitions,
        });
        if let Some(v) = value {
            doc[symbol(variant)] = json!(v);
        }
        if a.timings {
            doc["elapsed_ms"] = json!(elapsed);
        }
        return print_json(&doc);
    }
    match value {
        Some(v) => {
            println!("{} = {v}", symbol(variant));
            println!("placement: {:?}", sol.initial_cops());
        }
        None => {
            let k = sol.rules().cops;
            println!("{} with {k} cop{}: {} win", variant.name(), if k == 1 { "" } else { "s" }, if sol.cops_win() { "cops" } else { "robber" });
            if sol.cops_win() {
                println!("placement: {:?}", sol.initial_cops());
            }
        }
    }
    println!("states: {}, transitions: {}", m.states, m.transitions);
    if a.timings {
        println!("elapsed: {elapsed} ms");
    }
    Ok(())
}

fn cmd_verify(a: VerifyArgs) -> Outcome {
    if a.suite != "all" && !SUITES.contains(&a.suite.as_str()) {
        return Err(bad(format!("unknown suite {:?}; expected all or one of {}", a.suite, SUITES.join(", "))));
    }
    let runner = Runner::new(a.jobs, options(a.budget)?);
    let sections = run_suite(&a.suite, &runner, a.seed)?;
    let report = verify_json(&a.suite, a.seed, &sections, a.timings);
    if a.json {
        print_json(&report)?;
    } else {
        for s in &sections {
            println!("== {}", s.suite);
            for o in &s.outcomes {
                println!("{}", outcome_line(o));
            }
        }
        let all: Vec<_> = sections.iter().flat_map(|s| s.outcomes.iter().cloned()).collect();
        let listed: Vec<_> = discrepancies(&all).collect();
        if !listed.is_empty() {
            println!("== girth-bound discrepancies (reported, not failed)");
            for o in listed {
                println!("{}", outcome_line(o));
            }
        }
        let t = &report.totals;
        println!("pass {} violation {} skipped {} failures {}", t.pass, t.violation, t.skipped, report.failures);
        if let Some(ms) = t.elapsed_ms {
            println!("elapsed: {ms} ms");
        }
    }
    if report.failures > 0 {
        Err(Failure::Violation)
    } else {
        Ok(())
    }
}

fn cmd_corpus(a: CorpusArgs) -> Outcome {
    let family = a.family.family()?;
    let checks = a
        .checks
        .iter()
        .map(|name| match CheckId::from_name(name) {
            Some(id) if id.is_per_graph() => Ok(id),
            Some(_) => Err(bad(format!("{name} does not run on single graphs"))),
            None => Err(bad(format!("unknown check {name:?}"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let runner = Runner::new(a.jobs, options(a.budget)?);
    let (outcomes, mut agg) = run_corpus(&runner, &CorpusSpec { family, count: a.count, seed: a.seed }, &checks)?;
    if !a.timings {
        agg.elapsed_ms = None;
    }
    if a.json {
        let items: Vec<_> = outcomes.iter().map(outcome_json).collect();
        print_json(&json!({ "outcomes": items, "aggregate": agg }))?;
    } else {
        for o in &outcomes {
            println!("{}", outcome_line(o));
        }
        println!("pass {} violation {} skipped {}", agg.pass, agg.violation, agg.skipped);
        let hist: Vec<String> = agg.ratio_histogram.iter().map(|(k, v)| format!("{k}: {v}")).collect();
        println!("cc/c ratios: {}", hist.join(", "));
        if let Some(ms) = agg.elapsed_ms {
            println!("elapsed: {ms} ms");
        }
    }
    if outcomes.iter().any(|o| o.is_failure()) {
        Err(Failure::Violation)
    } else {
        Ok(())
    }
}

fn cmd_generate(a: GenerateArgs) -> Outcome {
    let family = a.family.family()?;
    let seeds: Vec<u64> = match a.count {
        None => vec![a.seed],
        Some(c) => (0..c as u64).map(|i| instance_seed(a.seed, i)).collect(),
    };
    for s in seeds {
        println!("{}", to_graph6(&generate(&family, s)?)?);
    }
    Ok(())
}

fn cmd_invariants(a: InvariantsArgs) -> Outcome {
    let g = a.input.graph()?;
    let basic = invariants_basic(&g);
    let gamma = domination_number(&g).map(|d| d.0).ok();
    let star = if g.order() >= 2 { Some(least_free_star(&g, 2)) } else { None };
    let hyper = a.input.hyper()?.map(|h| h.properties());
    if a.json {
        let mut doc = json!({
            "graph6": to_graph6(&g).unwrap_or_default(),
            "n": g.order(),
            "m": g.size(),
            "girth": girth(&g),
            "min_degree": basic.min_degree,
            "max_degree": g.max_degree(),
            "diameter": basic.diameter,
            "connected": basic.is_connected,
            "domination_number": gamma,
            "bipartite": basic.bipartition.is_some(),
            "universal_vertex": universal_vertex(&g),
            "claw_free": g.order() < 4 || is_k1m_free(&g, 3),
            "least_free_star": star,
        });
        if let Some(p) = hyper {
            doc["hypergraph"] = json!({
                "uniform": p.uniform_k,
                "linear": p.is_linear,
                "min_vertex_degree": p.min_vertex_degree,
                "berge_girth": p.berge_girth,
            });
        }
        return print_json(&doc);
    }
    let opt = |v: Option<usize>| v.map_or("inf".to_string(), |v| v.to_string());
    println!("n {} m {}", g.order(), g.size());
    println!("girth {}", opt(girth(&g)));
    println!("min degree {}", basic.min_degree);
    println!("max degree {}", g.max_degree());
    println!("diameter {}", opt(basic.diameter));
    println!("connected {}", basic.is_connected);
    println!("domination number {}", gamma.map_or("too large".into(), |v| v.to_string()));
    println!("bipartite {}", basic.bipartition.is_some());
    println!("universal vertex {}", universal_vertex(&g).map_or("none".into(), |v| v.to_string()));
    if let Some(m) = star {
        println!("least m with K_1,m-free {m}");
    }
    if let Some(p) = hyper {
        println!("hypergraph uniform {}", p.uniform_k.map_or("no".into(), |k| k.to_string()));
        println!("hypergraph linear {}", p.is_linear);
        println!("hypergraph min vertex degree {}", p.min_vertex_degree);
        println!("hypergraph berge girth {}", opt(p.berge_girth));
    }
    Ok(())
}

fn cmd_play(a: PlayArgs) -> Outcome {
    let g = a.input.graph()?;
    let opts = options(a.budget)?;
    let variant: Variant = a.variant.into();
    let sol = match a.k {
        Some(k) => solve_k_with(&g, Ruleset::new(variant, k)?, &opts)?,
        None => cop_number(&g, variant, &opts)?.solution,
    };
    let human = match a.human {
        HumanArg::Robber => Human::Robber,
        HumanArg::Cops => Human::Cops,
        HumanArg::None => Human::Nobody,
    };
    println!("{} game with {} cops on {} vertices", variant.name(), sol.rules().cops, g.order());
    let mut out = io::stdout().lock();
    let end = match &a.script {
        Some(path) => {
            let file = std::fs::File::open(path).map_err(|e| bad(format!("cannot read {}: {e}", path.display())))?;
            play(&sol, human, &mut BufReader::new(file), &mut out, true, a.rounds)?
        }
        None => play(&sol, human, &mut io::stdin().lock(), &mut out, false, a.rounds)?,
    };
    match end {
        PlayEnd::Illegal { .. } => Err(Failure::IllegalScript),
        PlayEnd::Finished(_) => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Corpus(a) => cmd_corpus(a),
        Command::Generate(a) => cmd_generate(a),
        Command::Invariants(a) => cmd_invariants(a),
        Command::Play(a) => cmd_play(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::BadInput(msg) => eprintln!("error: {msg}"),
                Failure::Budget(msg) => eprintln!("budget exceeded: {msg}"),
                Failure::Violation | Failure::IllegalScript => {}
            }
            ExitCode::from(f.code())
        }
    }
}
