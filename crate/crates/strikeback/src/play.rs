//! Terminal play against a solved strategy.

use std::io::{self, BufRead, Write};

use strikeback_core::game::{
    is_cop_move, simulate, Event, GameState, OptimalCops, OptimalRobber, Outcome, RobberMove, SolveResult,
};
use strikeback_core::game::{CopPolicy, RobberPolicy};
use strikeback_core::{GameError, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Human {
    Robber,
    Cops,
    /// Both sides follow the solved strategy.
    Nobody,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlayEnd {
    Finished(Outcome),
    /// A scripted move broke the rules.
    Illegal { round: usize, reason: String },
}

/// Line-oriented move input. In scripted mode illegal moves end the session
/// and an exhausted script keeps passing (robber) or standing still (cops).
struct Console<'a> {
    input: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
    scripted: bool,
    illegal: Option<String>,
    exhausted: bool,
}

impl Console<'_> {
    fn next_line(&mut self, prompt: &str) -> Option<String> {
        if !self.scripted {
            let _ = write!(self.out, "{prompt}> ");
            let _ = self.out.flush();
        }
        loop {
            let mut line = String::new();
            match self.input.read_line(&mut line) {
                Ok(0) | Err(_) => {
                    self.exhausted = true;
                    return None;
                }
                Ok(_) => {}
            }
            let line = line.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                return Some(line.to_string());
            }
        }
    }

    /// Reads until `parse` accepts; scripted input gets one attempt.
    fn ask<T>(&mut self, prompt: &str, parse: impl Fn(&str) -> Result<T, String>) -> Result<Option<T>, ()> {
        loop {
            let Some(line) = self.next_line(prompt) else {
                return Ok(None);
            };
            match parse(&line) {
                Ok(v) => return Ok(Some(v)),
                Err(msg) if self.scripted => {
                    self.illegal = Some(format!("{line:?}: {msg}"));
                    return Err(());
                }
                Err(msg) => {
                    let _ = writeln!(self.out, "illegal: {msg}");
                }
            }
        }
    }

    fn show(&mut self, s: &GameState) {
        if !self.scripted {
            let _ = writeln!(self.out, "cops at {}, robber at {}", list(&s.cops), s.robber);
        }
    }
}

fn list(vs: &[usize]) -> String {
    if vs.is_empty() {
        return "(none)".into();
    }
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn parse_vertices(text: &str, n: usize) -> Result<Vec<usize>, String> {
    let vs: Vec<usize> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("{t:?} is not a vertex")))
        .collect::<Result<_, _>>()?;
    if let Some(v) = vs.iter().find(|&&v| v >= n) {
        return Err(format!("vertex {v} out of range 0..{n}"));
    }
    Ok(vs)
}

struct HumanRobber<'c, 'a> {
    console: &'c mut Console<'a>,
}

impl RobberPolicy for HumanRobber<'_, '_> {
    fn place(&mut self, g: &Graph, cops: &[usize]) -> Option<usize> {
        if !self.console.scripted {
            let _ = writeln!(self.console.out, "cops placed at {}", list(cops));
        }
        let n = g.order();
        let parse = |t: &str| match parse_vertices(t, n)?[..] {
            [v] if cops.contains(&v) => Err(format!("vertex {v} holds a cop")),
            [v] => Ok(v),
            _ => Err("give one vertex".into()),
        };
        match self.console.ask("robber start", parse) {
            Ok(Some(v)) => Some(v),
            Ok(None) => (0..n).find(|v| !cops.contains(v)),
            Err(()) => Some(usize::MAX),
        }
    }

    fn respond(&mut self, g: &Graph, s: &GameState) -> RobberMove {
        self.console.show(s);
        let n = g.order();
        let parse = |t: &str| {
            if t == "pass" || t == "p" {
                return Ok(RobberMove::Pass);
            }
            match parse_vertices(t, n)?[..] {
                [v] if g.has_edge(s.robber, v) => Ok(RobberMove::To(v)),
                [v] => Err(format!("{v} is not adjacent to {}", s.robber)),
                _ => Err("give one vertex or \"pass\"".into()),
            }
        };
        match self.console.ask("robber move", parse) {
            Ok(Some(m)) => m,
            Ok(None) => RobberMove::Pass,
            Err(()) => RobberMove::To(usize::MAX),
        }
    }
}

struct HumanCops<'c, 'a> {
    console: &'c mut Console<'a>,
}

impl CopPolicy for HumanCops<'_, '_> {
    fn place(&mut self, g: &Graph, cops: usize) -> Vec<usize> {
        let n = g.order();
        let parse = |t: &str| {
            let vs = parse_vertices(t, n)?;
            if vs.len() == cops {
                Ok(vs)
            } else {
                Err(format!("give {cops} vertices"))
            }
        };
        match self.console.ask("cop placement", parse) {
            Ok(Some(vs)) => vs,
            Ok(None) => vec![0; cops],
            Err(()) => Vec::new(),
        }
    }

    fn respond(&mut self, g: &Graph, s: &GameState) -> Vec<usize> {
        self.console.show(s);
        let n = g.order();
        let parse = |t: &str| {
            let mut vs = parse_vertices(t, n)?;
            vs.sort_unstable();
            if is_cop_move(g, &s.cops, &vs) {
                Ok(vs)
            } else {
                Err(format!("{} cops must each stay or step to a neighbour", s.cops.len()))
            }
        };
        match self.console.ask("cops move", parse) {
            Ok(Some(vs)) => vs,
            Ok(None) => s.cops.clone(),
            Err(()) => Vec::new(),
        }
    }
}

/// Human-readable transcript, one line per event plus a verdict line.
pub fn transcript_lines(events: &[Event], end: &PlayEnd) -> Vec<String> {
    let mut lines: Vec<String> = events
        .iter()
        .map(|e| match e {
            Event::Placed { cops, robber: Some(r) } => format!("cops place at {}; robber starts at {r}", list(cops)),
            Event::Placed { cops, robber: None } => format!("cops place at {}; no free vertex", list(cops)),
            Event::CopsMoved { cops } => format!("cops move to {}", list(cops)),
            Event::RobberMoved { to: RobberMove::Pass } => "robber passes".into(),
            Event::RobberMoved { to: RobberMove::To(v) } => format!("robber moves to {v}"),
            Event::Attack { vertex } => format!("robber attacks the cop at {vertex}; she is eliminated"),
            Event::Capture { vertex } => format!("robber captured at {vertex}"),
        })
        .collect();
    lines.push(match end {
        PlayEnd::Finished(Outcome::Captured { plies }) => format!("captured after {plies} plies"),
        PlayEnd::Finished(Outcome::Disarmed { plies }) => {
            format!("robber survives: every cop eliminated after {plies} plies")
        }
        PlayEnd::Finished(Outcome::Survived { plies, repeated: true }) => {
            format!("robber survives: position repeats after {plies} plies")
        }
        PlayEnd::Finished(Outcome::Survived { plies, repeated: false }) => {
            format!("robber survives: no capture within {plies} plies")
        }
        PlayEnd::Illegal { round, reason } => format!("illegal move in round {round}: {reason}"),
    });
    lines
}

/// Plays one game and writes its transcript to `out`.
pub fn play(
    solution: &SolveResult,
    human: Human,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    scripted: bool,
    max_rounds: usize,
) -> io::Result<PlayEnd> {
    let g = solution.graph();
    let rules = solution.rules();
    let mut console = Console { input, out, scripted, illegal: None, exhausted: false };
    let result = match human {
        Human::Robber => simulate(
            g,
            rules,
            &mut OptimalCops { solution },
            &mut HumanRobber { console: &mut console },
            max_rounds,
        ),
        Human::Cops => simulate(
            g,
            rules,
            &mut HumanCops { console: &mut console },
            &mut OptimalRobber { solution },
            max_rounds,
        ),
        Human::Nobody => {
            simulate(g, rules, &mut OptimalCops { solution }, &mut OptimalRobber { solution }, max_rounds)
        }
    };
    let (events, end) = match result {
        Ok(t) => (t.events, PlayEnd::Finished(t.outcome)),
        Err(GameError::IllegalMove { round, reason }) => {
            let reason = console.illegal.take().unwrap_or_else(|| reason.to_string());
            (Vec::new(), PlayEnd::Illegal { round, reason })
        }
        Err(e) => return Err(io::Error::other(e.to_string())),
    };
    let exhausted = console.exhausted && scripted;
    let out = console.out;
    if exhausted {
        writeln!(out, "(script exhausted; remaining moves pass)")?;
    }
    for line in transcript_lines(&events, &end) {
        writeln!(out, "{line}")?;
    }
    Ok(end)
}

#[cfg(test)]
mod tests {
    use super::*;
    use strikeback_core::game::{solve_k, Ruleset, Variant};
    use strikeback_core::generate::cycle;

    fn run(k: usize, human: Human, script: &str) -> (PlayEnd, String) {
        let sol = solve_k(&cycle(7).unwrap(), Ruleset::new(Variant::Attacking, k).unwrap()).unwrap();
        let mut out = Vec::new();
        let end = play(&sol, human, &mut script.as_bytes(), &mut out, true, 500).unwrap();
        (end, String::from_utf8(out).unwrap())
    }

    #[test]
    fn optimal_robber_survives_two_cops() {
        let (end, text) = run(2, Human::Nobody, "");
        assert!(matches!(end, PlayEnd::Finished(Outcome::Survived { repeated: true, .. })), "{text}");
        assert!(text.contains("robber survives"));
    }

    #[test]
    fn three_cops_capture_scripted_robber() {
        let (end, text) = run(3, Human::Robber, "3\npass\n4\n5\n");
        assert!(matches!(end, PlayEnd::Finished(Outcome::Captured { .. })), "{text}");
        assert!(text.contains("captured"));
    }

    #[test]
    fn scripted_illegal_move() {
        let sol = solve_k(&cycle(7).unwrap(), Ruleset::new(Variant::Attacking, 3).unwrap()).unwrap();
        let taken = sol.initial_cops()[0];
        let (end, text) = run(3, Human::Robber, &format!("{taken}\n"));
        assert!(matches!(end, PlayEnd::Illegal { round: 0, .. }), "{text}");
        let (end, text) = run(2, Human::Robber, "pass\n");
        assert!(matches!(end, PlayEnd::Illegal { .. }), "{text}");
    }

    #[test]
    fn replay_is_identical() {
        assert_eq!(run(2, Human::Robber, "4\n5\n6\n").1, run(2, Human::Robber, "4\n5\n6\n").1);
    }

    #[test]
    fn human_cops() {
        let (end, text) = run(3, Human::Cops, "0 2 4\n0 3 5\n");
        assert!(matches!(end, PlayEnd::Finished(_)), "{text}");
    }
}
