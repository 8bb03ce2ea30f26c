//! JSON spec files, canonical report serialization, and seeded instance
//! generation.
//!
//! Rationals travel as strings (`"3/5"`). Reports are built as
//! `serde_json::Value` objects, whose maps are key-sorted, so identical
//! inputs serialize to identical bytes.

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graphview;
use crate::liealg::{so_dim, ExactMatrix};
use crate::permgroup::BasisIndexPair;
use crate::rational::{format_rational, parse_rational};
use crate::systems::{uniform_distribution, ControllabilityReport, Family, ProbeReport, SystemSpec};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// On-disk spec document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub family: Family,
    pub n: usize,
    #[serde(default)]
    pub controls: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub drift: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agent_space_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial_distribution: Option<Vec<String>>,
    /// Dense matrix generators (rows of rational strings); probe input only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<Vec<String>>>>,
}

fn to_pair([a, b]: [usize; 2]) -> Result<BasisIndexPair> {
    BasisIndexPair::unordered(a, b)
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn is_probe(&self) -> bool {
        self.generators.is_some()
    }

    pub fn to_system_spec(&self) -> Result<SystemSpec> {
        if self.is_probe() {
            return Err(Error::InvalidSpec("matrix generators given; use the probe subcommand".into()));
        }
        let controls = self.controls.iter().map(|&p| to_pair(p)).collect::<Result<Vec<_>>>()?;
        let mut spec = SystemSpec::new(self.family, self.n, controls);
        spec.drift = self.drift.map(to_pair).transpose()?;
        spec.agent_space_dim = self.agent_space_dim;
        spec.initial_distribution = self
            .initial_distribution
            .as_ref()
            .map(|v| v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .transpose()?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn probe_generators(&self) -> Result<Vec<ExactMatrix>> {
        let gens = self
            .generators
            .as_ref()
            .ok_or_else(|| Error::InvalidSpec("probe needs a `generators` list".into()))?;
        gens.iter()
            .map(|rows| {
                let rows = rows
                    .iter()
                    .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                let m = ExactMatrix::from_rows(rows)?;
                if m.n() != self.n {
                    return Err(Error::SizeMismatch { left: m.n(), right: self.n });
                }
                Ok(m)
            })
            .collect()
    }

    pub fn from_system_spec(spec: &SystemSpec) -> Self {
        let pair = |p: &BasisIndexPair| [p.i(), p.j()];
        Self {
            family: spec.family,
            n: spec.n,
            controls: spec.controls.iter().map(pair).collect(),
            drift: spec.drift.as_ref().map(pair),
            agent_space_dim: spec.agent_space_dim,
            initial_distribution: spec
                .initial_distribution
                .as_ref()
                .map(|v| v.iter().map(format_rational).collect()),
            generators: None,
        }
    }

    /// Key-sorted compact JSON.
    pub fn canonical_json(&self) -> String {
        let value = serde_json::to_value(self).expect("spec serializes");
        serde_json::to_string(&value).expect("value serializes")
    }
}

pub fn spec_digest(spec: &SystemSpec) -> String {
    hex::encode(Sha256::digest(SpecFile::from_system_spec(spec).canonical_json().as_bytes()))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ReportOptions {
    pub dot: bool,
    pub dump_basis: bool,
}

fn pair_json(p: &BasisIndexPair) -> Value {
    json!([p.i(), p.j()])
}

pub fn report_json(report: &ControllabilityReport, spec: &SystemSpec, options: ReportOptions) -> Result<Value> {
    let sub = &report.submanifold;
    let components: Vec<Value> = sub
        .components
        .iter()
        .map(|c| json!({ "orbit": c.orbit, "generators": c.generators, "dim": c.dim }))
        .collect();
    let conserved = sub.markov_conserved_sums.as_ref().map(|v| {
        v.iter().map(|(o, s)| json!({ "orbit": o, "sum": format_rational(s) })).collect::<Vec<_>>()
    });
    let frozen = sub.frozen_states.as_ref().map(|v| {
        v.iter().map(|(l, p)| json!({ "state": l, "value": format_rational(p) })).collect::<Vec<_>>()
    });
    let oracle = report.oracle.as_ref().map(|o| {
        json!({
            "dim": o.dim,
            "target_dim": o.target_dim,
            "controllable": o.controllable,
            "orbits": o.orbits.orbits(),
            "agrees": o.agrees,
        })
    });
    let markov = report.markov.as_ref().map(|m| {
        json!({ "irreducible": m.irreducible, "communication_classes": m.communication_classes })
    });
    let mut out = json!({
        "family": report.family,
        "n": report.n,
        "controls": spec.controls.iter().map(pair_json).collect::<Vec<_>>(),
        "drift": report.drift.as_ref().map(pair_json),
        "controllable": report.controllable,
        "method_class": report.method_class.to_string(),
        "orbits": report.orbits(),
        "fixed_points": report.fixed_points,
        "min_controls_satisfied": report.min_controls_satisfied,
        "oracle_dim": report.oracle_dim(),
        "oracle_agrees": report.oracle_agrees(),
        "oracle": oracle,
        "markov": markov,
        "submanifold": {
            "components": components,
            "total_dim": sub.total_dim,
            "state_space_label": sub.state_space_label,
            "markov_conserved_sums": conserved,
            "frozen_states": frozen,
        },
        "provenance": {
            "tool_version": TOOL_VERSION,
            "spec_digest": spec_digest(spec),
            "oracle_ran": report.oracle.is_some(),
        },
    });
    if options.dot {
        out["dot"] = json!(graphview::build_graph(spec)?.to_dot());
    }
    if options.dump_basis {
        let basis: Vec<String> = report
            .oracle
            .as_ref()
            .map(|o| o.closure.basis().iter().map(ToString::to_string).collect())
            .unwrap_or_default();
        out["basis"] = json!(basis);
    }
    Ok(out)
}

pub fn to_canonical_string(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("value serializes")
}

pub fn report_text(report: &ControllabilityReport, spec: &SystemSpec, options: ReportOptions) -> Result<String> {
    let mut lines = vec![
        format!("family: {}  n: {}", report.family, report.n),
        format!("verdict: {}", if report.controllable { "controllable" } else { "not controllable" }),
        format!("class: {}", report.method_class),
        format!("fixed points: {:?}", report.fixed_points),
        format!("state space: {}", report.submanifold.state_space_label),
        format!("min controls satisfied: {}", report.min_controls_satisfied),
    ];
    for c in &report.submanifold.components {
        let dim = c.dim.map_or("?".to_string(), |d| d.to_string());
        lines.push(format!("  orbit {:?}: dim {dim}, fields {}", c.orbit, c.generators.join(", ")));
    }
    if let Some(sums) = &report.submanifold.markov_conserved_sums {
        for (o, s) in sums {
            lines.push(format!("  conserved sum over {o:?}: {}", format_rational(s)));
        }
    }
    if let Some(frozen) = &report.submanifold.frozen_states {
        for (l, p) in frozen {
            lines.push(format!("  frozen p_{l} = {}", format_rational(p)));
        }
    }
    if let Some(m) = &report.markov {
        lines.push(format!("irreducible: {}  classes: {:?}", m.irreducible, m.communication_classes));
    }
    if let Some(o) = &report.oracle {
        lines.push(format!(
            "oracle: dim {} of {}, {}, orbits {}, agrees: {}",
            o.dim,
            o.target_dim,
            if o.controllable { "controllable" } else { "not controllable" },
            o.orbits,
            o.agrees
        ));
    }
    if options.dot {
        lines.push(graphview::build_graph(spec)?.to_dot());
    }
    if options.dump_basis {
        if let Some(o) = &report.oracle {
            lines.push(format!("basis:\n{}", o.closure.render()));
        }
    }
    Ok(lines.join("\n"))
}

pub fn probe_json(r: &ProbeReport) -> Value {
    json!({
        "experimental": r.experimental,
        "n": r.n,
        "permutations": r.permutations.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "subgroup_order": r.subgroup.order,
        "subgroup_is_full_symmetric": r.subgroup.is_full_symmetric,
        "subgroup_truncated": r.subgroup.truncated,
        "larc_dim": r.larc_dim,
        "so_dim": r.so_dim,
        "larc_controllable": r.larc_controllable,
    })
}

pub fn probe_text(r: &ProbeReport) -> String {
    let perms: Vec<String> = r.permutations.iter().map(ToString::to_string).collect();
    [
        "EXPERIMENTAL: subgroup criterion is a diagnostic, not a proven test".to_string(),
        format!("permutation images: {}", perms.join(", ")),
        format!(
            "subgroup order: {}{}{}",
            r.subgroup.order,
            if r.subgroup.is_full_symmetric { " (full symmetric group)" } else { "" },
            if r.subgroup.truncated { " (truncated)" } else { "" }
        ),
        format!(
            "LARC dim: {} of {} -> {}",
            r.larc_dim,
            r.so_dim,
            if r.larc_controllable { "controllable" } else { "not controllable" }
        ),
    ]
    .join("\n")
}

/// `m` distinct uniformly chosen pairs on `n` letters, drawn with ChaCha8.
pub fn random_spec_with(rng: &mut ChaCha8Rng, family: Family, n: usize, m: usize) -> Result<SystemSpec> {
    let total = so_dim(n);
    if n < 2 || m > total || (m == 0 && family != Family::Markov) {
        return Err(Error::InvalidSpec(format!("cannot draw {m} distinct pairs on {n} letters")));
    }
    let all: Vec<BasisIndexPair> =
        (1..=n).flat_map(|i| (i + 1..=n).map(move |j| BasisIndexPair::new(i, j).expect("i < j"))).collect();
    let mut picked: Vec<usize> = index::sample(rng, total, m).into_vec();
    picked.sort_unstable();
    let mut spec = SystemSpec::new(family, n, picked.into_iter().map(|k| all[k]));
    if family == Family::Markov {
        spec.initial_distribution = Some(uniform_distribution(n));
    }
    Ok(spec)
}

/// Deterministic for a given seed.
pub fn random_spec(family: Family, n: usize, m: usize, seed: u64) -> Result<SystemSpec> {
    random_spec_with(&mut ChaCha8Rng::seed_from_u64(seed), family, n, m)
}

/// `count` instances from one ChaCha8 stream seeded with `seed`.
pub fn random_specs(family: Family, n: usize, m: usize, seed: u64, count: usize) -> Result<Vec<SystemSpec>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_spec_with(&mut rng, family, n, m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::systems::{analyze, analyze_with_oracle, OracleLimits};

    #[test]
    fn spec_file_round_trip() {
        let text = r#"{"family":"markov","n":3,"controls":[[2,1],[2,3]],"initial_distribution":["1/2","1/4","1/4"]}"#;
        let file = SpecFile::parse(text).unwrap();
        let spec = file.to_system_spec().unwrap();
        assert_eq!(spec.controls[0], BasisIndexPair::new(1, 2).unwrap());
        let again = SpecFile::from_system_spec(&spec).to_system_spec().unwrap();
        assert_eq!(again, spec);
        assert_eq!(
            SpecFile::from_system_spec(&spec).canonical_json(),
            r#"{"controls":[[1,2],[2,3]],"family":"markov","initial_distribution":["1/2","1/4","1/4"],"n":3}"#
        );
    }

    #[test]
    fn spec_file_errors() {
        let bad = |t: &str| SpecFile::parse(t).and_then(|f| f.to_system_spec()).is_err();
        assert!(bad(r#"{"family":"so_n","n":3,"controls":[[0,1]]}"#));
        assert!(bad(r#"{"family":"so_n","n":3,"controls":[[2,2]]}"#));
        assert!(bad(r#"{"family":"so_n","n":3,"controls":[[1,4]]}"#));
        assert!(bad(r#"{"family":"so_x","n":3,"controls":[[1,2]]}"#));
        assert!(bad(r#"{"family":"so_n","n":3,"controls":[[1,2]],"extra":1}"#));
        assert!(bad(r#"{"family":"markov","n":2,"controls":[[1,2]],"initial_distribution":["1/2","x"]}"#));
        assert!(bad(r#"{"family":"so_n","n":2,"generators":[[["0","1"],["-1","0"]]]}"#));
    }

    #[test]
    fn probe_file_generators() {
        let f = SpecFile::parse(r#"{"family":"so_n","n":2,"generators":[[["0","1"],["-1","0"]]]}"#).unwrap();
        assert!(f.is_probe());
        assert_eq!(f.probe_generators().unwrap()[0].to_string(), "0 1\n-1 0");
        let wrong = SpecFile::parse(r#"{"family":"so_n","n":3,"generators":[[["0","1"],["-1","0"]]]}"#).unwrap();
        assert!(wrong.probe_generators().is_err());
    }

    #[test]
    fn report_is_deterministic_and_sorted() {
        let spec = random_spec(Family::SOn, 5, 3, 11).unwrap();
        let opts = ReportOptions { dot: true, dump_basis: true };
        let a = to_canonical_string(&report_json(&analyze_with_oracle(&spec, OracleLimits::default()).unwrap(), &spec, opts).unwrap());
        let b = to_canonical_string(&report_json(&analyze_with_oracle(&spec, OracleLimits::default()).unwrap(), &spec, opts).unwrap());
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(v["provenance"]["oracle_ran"], json!(true));
    }

    #[test]
    fn markov_report_fields() {
        let spec = SpecFile::parse(r#"{"family":"markov","n":5,"controls":[[1,2],[4,5]],"initial_distribution":["1/5","1/5","1/5","1/5","1/5"]}"#)
            .unwrap()
            .to_system_spec()
            .unwrap();
        let v = report_json(&analyze(&spec).unwrap(), &spec, ReportOptions::default()).unwrap();
        assert_eq!(v["submanifold"]["frozen_states"], json!([{ "state": 3, "value": "1/5" }]));
        assert_eq!(v["markov"]["communication_classes"], json!([[1, 2], [3], [4, 5]]));
        assert_eq!(v["oracle_dim"], Value::Null);
    }

    #[test]
    fn generation_is_seeded() {
        let a = random_spec(Family::SOn, 5, 4, 7).unwrap();
        assert_eq!(a, random_spec(Family::SOn, 5, 4, 7).unwrap());
        assert_eq!(a.controls.len(), 4);
        let m = random_spec(Family::Markov, 6, 5, 3).unwrap();
        assert_eq!(m.family, Family::Markov);
        assert!(m.initial_distribution.is_some());
        assert!(random_spec(Family::SOn, 4, 7, 1).is_err());
        let batch = random_specs(Family::MultiAgent, 4, 3, 9, 10).unwrap();
        assert_eq!(batch, random_specs(Family::MultiAgent, 4, 3, 9, 10).unwrap());
    }
}
