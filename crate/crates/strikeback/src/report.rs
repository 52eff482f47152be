//! JSON and text renderings of check outcomes.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Map, Value};
use strikeback_core::generate::Family;
use strikeback_core::harness::{CheckOutcome, Quantity, Verdict};

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct InstanceJson {
    pub family: Option<&'static str>,
    pub params: Map<String, Value>,
    pub seed: Option<u64>,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct OutcomeJson {
    pub check: &'static str,
    pub instance: InstanceJson,
    pub quantities: Map<String, Value>,
    pub verdict: &'static str,
    pub note: String,
}

/// Totals over a batch of outcomes.
#[derive(Clone, Debug, Default, Serialize, PartialEq)]
pub struct Aggregate {
    pub pass: usize,
    pub violation: usize,
    pub skipped: usize,
    /// cc/c per distinct instance, keyed by the reduced fraction.
    pub ratio_histogram: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

pub fn family_params(f: &Family) -> Map<String, Value> {
    let v = match *f {
        Family::Cycle { n } | Family::Path { n } | Family::Complete { n } | Family::MaximalOuterplanar { n } => {
            json!({ "n": n })
        }
        Family::CompleteBipartite { a, b } => json!({ "a": a, "b": b }),
        Family::Star { m } => json!({ "m": m }),
        Family::Petersen => json!({}),
        Family::Gnp { n, p } | Family::ConnectedGnp { n, p } => json!({ "n": n, "p": p }),
        Family::RandomConnectedBipartite { a, b, p } => json!({ "a": a, "b": b, "p": p }),
    };
    match v {
        Value::Object(m) => m,
        _ => unreachable!(),
    }
}

pub fn quantity_json(q: Quantity) -> Value {
    match q {
        Quantity::Finite(v) => json!(v),
        Quantity::Infinite => json!("inf"),
        Quantity::Flag(b) => json!(b),
    }
}

pub fn outcome_json(o: &CheckOutcome) -> OutcomeJson {
    OutcomeJson {
        check: o.check.name(),
        instance: InstanceJson {
            family: o.instance.family.as_ref().map(|f| f.name()),
            params: o.instance.family.as_ref().map(family_params).unwrap_or_default(),
            seed: o.instance.seed,
            graph6: o.instance.graph6.clone(),
            label: o.instance.label.clone(),
        },
        quantities: o.quantities.iter().map(|(k, &q)| (k.to_string(), quantity_json(q))).collect(),
        verdict: o.verdict.name(),
        note: o.note.clone(),
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn aggregate(outcomes: &[CheckOutcome]) -> Aggregate {
    let mut agg = Aggregate::default();
    // one ratio per distinct graph
    let mut ratios: BTreeMap<&str, (u64, u64)> = BTreeMap::new();
    for o in outcomes {
        match o.verdict {
            Verdict::Pass => agg.pass += 1,
            Verdict::Violation => agg.violation += 1,
            Verdict::Skipped => agg.skipped += 1,
        }
        if let (Some(Quantity::Finite(c)), Some(Quantity::Finite(cc))) = (o.get("c"), o.get("cc")) {
            if c > 0 && !o.instance.graph6.is_empty() {
                ratios.insert(&o.instance.graph6, (cc, c));
            }
        }
    }
    for (cc, c) in ratios.into_values() {
        let d = gcd(cc, c);
        let key = if c / d == 1 { format!("{}", cc / d) } else { format!("{}/{}", cc / d, c / d) };
        *agg.ratio_histogram.entry(key).or_default() += 1;
    }
    agg
}

/// One line per outcome: verdict, check, origin, quantities, note.
pub fn outcome_line(o: &CheckOutcome) -> String {
    let origin = match (&o.instance.family, &o.instance.label) {
        (Some(f), _) => {
            let params: Vec<String> = family_params(f).iter().map(|(k, v)| format!("{k}={v}")).collect();
            let mut s = f.name().to_string();
            if !params.is_empty() {
                s = format!("{s}({})", params.join(","));
            }
            if let Some(seed) = o.instance.seed {
                s.push_str(&format!(" seed={seed}"));
            }
            s
        }
        (None, Some(label)) => label.clone(),
        (None, None) => format!("graph6 {}", o.instance.graph6),
    };
    let qs: Vec<String> = o
        .quantities
        .iter()
        .map(|(k, q)| match q {
            Quantity::Finite(v) => format!("{k}={v}"),
            Quantity::Infinite => format!("{k}=inf"),
            Quantity::Flag(b) => format!("{k}={b}"),
        })
        .collect();
    let mut line = format!("{:<9} {:<18} {:<40} {}", o.verdict.name(), o.check.name(), origin, qs.join(" "));
    if !o.note.is_empty() {
        line.push_str(&format!("  ({})", o.note));
    }
    line.trim_end().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use strikeback_core::generate::cycle;
    use strikeback_core::harness::{CheckId, Instance};

    #[test]
    fn schema_fields() {
        let g = cycle(5).unwrap();
        let o = CheckOutcome::new(CheckId::Sandwich, Instance::from_family(Family::Cycle { n: 5 }, 9, &g))
            .with("c", 2usize)
            .with("cc", 2usize)
            .with("girth", None::<usize>)
            .verdict(true);
        let v = serde_json::to_value(outcome_json(&o)).unwrap();
        assert_eq!(v["check"], "sandwich");
        assert_eq!(v["instance"]["family"], "cycle");
        assert_eq!(v["instance"]["params"]["n"], 5);
        assert_eq!(v["instance"]["seed"], Value::Null);
        assert_eq!(v["instance"]["graph6"], "Dhc");
        assert_eq!(v["quantities"]["girth"], "inf");
        assert_eq!(v["verdict"], "PASS");
    }

    #[test]
    fn ratios_are_reduced_and_deduplicated() {
        let a = cycle(5).unwrap();
        let b = cycle(8).unwrap();
        let mk = |g, c: usize, cc: usize| {
            CheckOutcome::new(CheckId::Sandwich, Instance::of(g)).with("c", c).with("cc", cc)
        };
        let agg = aggregate(&[mk(&a, 2, 2), mk(&a, 2, 2), mk(&b, 2, 3)]);
        assert_eq!(agg.ratio_histogram, BTreeMap::from([("1".to_string(), 1), ("3/2".to_string(), 1)]));
        assert_eq!(agg.pass, 3);
    }
}
