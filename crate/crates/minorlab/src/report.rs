//! Serializable records for the command-line reports and the JSON/CSV/text
//! emitters.

use std::io::{self, Write};

use minorlab_core::adversary::AdversaryQuantities;
use minorlab_core::graph::{ContainmentKind, ContainmentWitness};
use minorlab_core::minor_theory::{EdgeClassification, EdgeKind};
use minorlab_core::walk::{Checking, CostBreakdown, ExponentRow};
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Serialize)]
pub struct BetaReport {
    pub beta: usize,
    pub internal_edges: Vec<[usize; 2]>,
    pub external_edges: Vec<[usize; 2]>,
}

impl From<&EdgeClassification> for BetaReport {
    fn from(c: &EdgeClassification) -> Self {
        let pairs = |es: Vec<(usize, usize)>| es.into_iter().map(|(u, v)| [u, v]).collect::<Vec<_>>();
        BetaReport { beta: c.internal_edges().len(), internal_edges: pairs(c.internal_edges()), external_edges: pairs(c.external_edges()) }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeLabel {
    pub u: usize,
    pub v: usize,
    pub kind: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub n: usize,
    pub m: usize,
    pub beta: usize,
    pub star_subdivision_family: bool,
    pub path_or_claw_family: bool,
    pub edges: Vec<EdgeLabel>,
    pub dangling_paths: Vec<Vec<usize>>,
    pub graph6: String,
    pub canonical: String,
}

pub fn edge_labels(c: &EdgeClassification) -> Vec<EdgeLabel> {
    c.labels
        .iter()
        .map(|&((u, v), k)| EdgeLabel { u, v, kind: if k == EdgeKind::Internal { "internal" } else { "external" } })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub kind: &'static str,
    pub vertex_map: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub branch_sets: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub paths: Vec<Vec<usize>>,
}

pub fn kind_name(k: ContainmentKind) -> &'static str {
    match k {
        ContainmentKind::Subgraph => "subgraph",
        ContainmentKind::Induced => "induced",
        ContainmentKind::Minor => "minor",
        ContainmentKind::TopologicalMinor => "topological",
    }
}

impl From<&ContainmentWitness> for WitnessReport {
    fn from(w: &ContainmentWitness) -> Self {
        WitnessReport { kind: kind_name(w.kind), vertex_map: w.vertex_map.clone(), branch_sets: w.branch_sets.clone(), paths: w.paths.clone() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ContainReport {
    pub relation: &'static str,
    pub contained: bool,
    pub witness: Option<WitnessReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VcReport {
    pub size: usize,
    pub cover: Vec<usize>,
    /// Closed-form value when the graph is a path or a subdivided claw.
    pub formula: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExplicitCheck {
    pub m: u64,
    pub m_prime: u64,
    pub l_max: u64,
    pub agrees: bool,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum MainlbCheck {
    Suitable { lmax: usize },
    Unsuitable { p: usize, q: usize, lmax: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct AdversaryReport {
    pub family: String,
    pub n: usize,
    pub m: u64,
    pub m_prime: u64,
    pub l_max: u64,
    pub quantum_bound: f64,
    pub classical_bound: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub explicit: Option<ExplicitCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mainlb_check: Option<MainlbCheck>,
}

impl AdversaryReport {
    pub fn new(family: String, n: usize, q: &AdversaryQuantities) -> Self {
        AdversaryReport {
            family,
            n,
            m: q.m,
            m_prime: q.m_prime,
            l_max: q.l_max,
            quantum_bound: q.quantum_bound,
            classical_bound: q.classical_bound,
            explicit: None,
            mainlb_check: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BucketReport {
    pub q: f64,
    pub t: f64,
    pub k: f64,
    pub alpha: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CostReport {
    pub problem: String,
    pub n: f64,
    pub vc_target: usize,
    pub checking: &'static str,
    pub sparsity_bound: f64,
    pub buckets: Vec<BucketReport>,
    pub s: f64,
    pub u: f64,
    pub c: f64,
    pub delta: f64,
    pub epsilon: f64,
    pub total: f64,
    pub lower_order: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fitted_exponent: Option<f64>,
}

impl CostReport {
    pub fn new(problem: String, n: f64, b: &CostBreakdown) -> Self {
        CostReport {
            problem,
            n,
            vc_target: b.plan.vc_target,
            checking: match b.plan.checking {
                Checking::None => "none",
                Checking::TwoBucket => "two_bucket",
                Checking::ThreeBucket => "three_bucket",
                Checking::AdjacentToTwo => "adjacent_to_two",
            },
            sparsity_bound: b.plan.sparsity_bound,
            buckets: b.plan.buckets.iter().map(|x| BucketReport { q: x.q, t: x.t, k: x.k, alpha: x.alpha }).collect(),
            s: b.s,
            u: b.u,
            c: b.c,
            delta: b.delta,
            epsilon: b.epsilon,
            total: b.total,
            lower_order: b.lower_order,
            fitted_exponent: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExponentReport {
    pub problem: String,
    pub predicted_exponent: f64,
    pub fitted_exponent: f64,
    pub residual: f64,
}

impl From<&ExponentRow> for ExponentReport {
    fn from(r: &ExponentRow) -> Self {
        ExponentReport { problem: r.problem.clone(), predicted_exponent: r.predicted, fitted_exponent: r.fitted, residual: r.residual }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DetectReport {
    pub found: bool,
    /// Image of each pattern vertex.
    pub witness: Option<Vec<usize>>,
    pub probes: u64,
    pub rounds: u64,
    pub gated: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ThresholdReport {
    pub family: String,
    pub n: f64,
    pub c: f64,
    pub threshold: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct PipelineReport {
    pub family: String,
    pub n: f64,
    pub c: f64,
    pub detect_cost: f64,
    pub extract_cost: f64,
    pub total: f64,
}

/// Scalars as CSV/text cells; nested values as compact JSON.
fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Writes the records. JSON: a single object for one record, an array
/// otherwise. CSV: a header from the first record's fields. Text: `key: value`
/// lines with a blank line between records.
pub fn emit(out: &mut dyn Write, format: Format, records: &[Value]) -> io::Result<()> {
    match format {
        Format::Json => {
            let s = match records {
                [one] => serde_json::to_string_pretty(one),
                many => serde_json::to_string_pretty(many),
            }
            .map_err(io::Error::other)?;
            writeln!(out, "{s}")
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let header: Vec<String> = match records.first() {
                Some(Value::Object(o)) => o.keys().cloned().collect(),
                _ => Vec::new(),
            };
            w.write_record(&header)?;
            for r in records {
                let row: Vec<String> = header.iter().map(|k| r.get(k).map(cell).unwrap_or_default()).collect();
                w.write_record(&row)?;
            }
            w.flush()
        }
        Format::Text => {
            for (i, r) in records.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                if let Value::Object(o) = r {
                    for (k, v) in o {
                        writeln!(out, "{k}: {}", cell(v))?;
                    }
                } else {
                    writeln!(out, "{}", cell(r))?;
                }
            }
            Ok(())
        }
    }
}
