//! Command-line driver. [`run`] parses arguments, dispatches to the core
//! modules and writes records; the exit code is 0 on success, 1 on a domain
//! error and 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use minorlab_core::adversary::{
    family_forest, family_mainlb, family_subgraphlb, quantities_explicit_family, quantities_symmetric, RelationFamily,
};
use minorlab_core::detector::{detect_subgraph, DetectConfig, Mode, OracleGraph};
use minorlab_core::graph::cover::min_vertex_cover;
use minorlab_core::graph::minor::is_minor;
use minorlab_core::graph::subgraph::is_subgraph;
use minorlab_core::graph::topological::is_topological_minor;
use minorlab_core::minor_theory::{
    check_mainlb_edge, classify_edges, is_path_or_claw_family, is_star_subdivision_family, vc_claw, vc_path, ForbiddenFamily,
    MainlbVerdict,
};
use minorlab_core::walk::{
    edge_threshold, exponent_table, fit_exponent, fit_sizes, plan_bipartite, plan_fourcycle, plan_fourcycle_with_budget, plan_paths,
    plan_pseudosparse, plan_vcbasic, plan_vcdangling, sparse_pipeline_cost, CostBreakdown, Threshold, WalkError,
};
use minorlab_core::{Graph, Limits};
use serde::Serialize;
use serde_json::Value;

use crate::builtin::builtin;
use crate::format::{parse_graph, to_canonical_hex, to_graph6};
use crate::report::*;

pub const MAX_VERTICES_ENV: &str = "MINORLAB_MAX_VERTICES";

#[derive(Debug, Parser)]
#[command(name = "minorlab", version, about = "Graph minors, adversary bounds and quantum walk cost models")]
struct Cli {
    /// Output format (default: csv for `exponents`, json otherwise).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Relation {
    Subgraph,
    Induced,
    Topological,
    Minor,
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Forest,
    Subgraphlb,
    Mainlb,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Problem {
    Vcbasic,
    Vcdangling,
    Pseudosparse,
    Bipartite,
    Paths,
    Fourcycle,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Basic,
    Dangling,
    Paths,
    Fourcycle,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ThresholdFamily {
    Kst,
    Bs,
    Sparse,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Test whether --pattern is contained in --graph.
    Contain {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value = "subgraph")]
        relation: Relation,
    },
    /// Internal-edge count with the edge lists.
    Beta {
        #[arg(long)]
        graph: String,
    },
    /// Per-edge classification, dangling paths and canonical forms.
    Classify {
        #[arg(long)]
        graph: String,
    },
    /// Minimum vertex cover.
    Vc {
        #[arg(long)]
        graph: String,
    },
    /// Adversary quantities for a relation family.
    Adversary {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// One or more sizes, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        /// Clique size for subgraphlb.
        #[arg(long)]
        d: Option<usize>,
        /// Base graph for mainlb.
        #[arg(long)]
        graph: Option<String>,
        /// Edge `u,v` of the base graph for mainlb.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        edge: Option<Vec<usize>>,
        /// For mainlb: also test replacements of the edge by paths of length up to this bound.
        #[arg(long)]
        lmax: Option<usize>,
        /// Forbidden topological minors for the --lmax check (default: the base graph).
        #[arg(long)]
        forbid: Vec<String>,
        /// Recount by labeled enumeration and compare.
        #[arg(long)]
        check_explicit: bool,
    },
    /// Walk cost breakdown for one plan.
    WalkCost {
        #[arg(long, value_enum)]
        problem: Problem,
        #[arg(long)]
        n: f64,
        #[arg(long)]
        pattern: Option<String>,
        /// Path length for `paths`.
        #[arg(long)]
        k: Option<usize>,
        /// Pattern size for `bipartite`.
        #[arg(long)]
        d: Option<usize>,
        /// Bucket sizes, comma separated.
        #[arg(long, value_delimiter = ',')]
        t: Option<Vec<f64>>,
        /// Edge budget for pseudosparse and fourcycle.
        #[arg(long)]
        mbar: Option<f64>,
        #[arg(long, default_value_t = 1.0)]
        c_param: f64,
        /// Add the slope of the leading-order cost fitted over n = 2^10..2^24.
        #[arg(long)]
        fit: bool,
    },
    /// Predicted and fitted exponents for every modeled algorithm.
    Exponents,
    /// Run the classical reference detector.
    Detect {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        pattern: String,
        #[arg(long, value_enum, default_value = "basic")]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.9)]
        confidence: f64,
        /// Gate constant; see the detector docs for the default.
        #[arg(long)]
        c_param: Option<f64>,
    },
    /// Extremal edge thresholds and the sparse pipeline cost.
    Thresholds {
        #[arg(long, value_enum)]
        family: ThresholdFamily,
        #[arg(long)]
        n: f64,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long)]
        t: Option<u32>,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long, default_value_t = 1.0)]
        c_param: f64,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// A file path, or `builtin:NAME`.
fn load(arg: &str) -> Result<Graph, Failure> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return builtin(name).map_err(|e| usage(e.to_string()));
    }
    let text = std::fs::read_to_string(arg).map_err(|e| domain(format!("{arg}: {e}")))?;
    parse_graph(&text).map_err(|e| domain(format!("{arg}: {e}")))
}

fn to_values<T: Serialize>(records: &[T]) -> Vec<Value> {
    records.iter().map(|r| serde_json::to_value(r).expect("records serialize")).collect()
}

/// Arm lengths when `g` is a single path (one arm) or a subdivided claw.
fn path_or_claw_arms(g: &Graph) -> Option<Vec<usize>> {
    if g.m() == 0 || !g.is_connected() || g.m() + 1 != g.n() {
        return None;
    }
    let heavy: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
    match heavy.as_slice() {
        [] => Some(vec![g.m()]),
        [c] if g.degree(*c) == 3 => {
            let arms = g
                .neighbor_list(*c)
                .into_iter()
                .map(|mut cur| {
                    let (mut prev, mut len) = (*c, 1);
                    while g.degree(cur) == 2 {
                        let next = g.neighbor_list(cur).into_iter().find(|&w| w != prev).expect("degree 2");
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            Some(arms)
        }
        _ => None,
    }
}

fn adversary_record(
    family: &dyn RelationFamily,
    check_explicit: bool,
) -> Result<AdversaryReport, Failure> {
    let sym = quantities_symmetric(family).map_err(domain)?.quantities;
    let mut rec = AdversaryReport::new(family.name(), family.n(), &sym);
    if check_explicit {
        let exp = quantities_explicit_family(family).map_err(domain)?;
        rec.explicit = Some(ExplicitCheck { m: exp.m, m_prime: exp.m_prime, l_max: exp.l_max, agrees: exp.same_counts(&sym) });
    }
    Ok(rec)
}

#[allow(clippy::too_many_arguments)]
fn cost_of(
    problem: Problem,
    n: f64,
    h: Option<&Graph>,
    k: Option<usize>,
    d: Option<usize>,
    t: Option<&[f64]>,
    mbar: Option<f64>,
    c: f64,
) -> Result<CostBreakdown, WalkError> {
    let need_h = || h.ok_or(WalkError::InvalidParameter("this problem needs --pattern"));
    match problem {
        Problem::Vcbasic => plan_vcbasic(need_h()?, n, t, c),
        Problem::Vcdangling => plan_vcdangling(need_h()?, n, t, c),
        Problem::Pseudosparse => plan_pseudosparse(need_h()?, n, mbar.ok_or(WalkError::InvalidParameter("pseudosparse needs --mbar"))?),
        Problem::Bipartite => plan_bipartite(d.ok_or(WalkError::InvalidParameter("bipartite needs --d"))?, n, c),
        Problem::Paths => plan_paths(k.ok_or(WalkError::InvalidParameter("paths needs --k"))?, n, t, c),
        Problem::Fourcycle => match mbar {
            Some(m) => plan_fourcycle_with_budget(n, m),
            None => plan_fourcycle(n),
        },
    }
}

fn execute(cmd: Command, limits: &Limits) -> Result<Vec<Value>, Failure> {
    let out = match cmd {
        Command::Contain { pattern, graph, relation } => {
            let (h, g) = (load(&pattern)?, load(&graph)?);
            let relations: &[Relation] = match relation {
                Relation::All => &[Relation::Subgraph, Relation::Induced, Relation::Topological, Relation::Minor],
                ref r => std::slice::from_ref(r),
            };
            let mut recs = Vec::new();
            for r in relations {
                let (name, w) = match r {
                    Relation::Subgraph => ("subgraph", is_subgraph(&h, &g, false, limits)),
                    Relation::Induced => ("induced", is_subgraph(&h, &g, true, limits)),
                    Relation::Topological => ("topological", is_topological_minor(&h, &g, limits)),
                    Relation::Minor => ("minor", is_minor(&h, &g, limits)),
                    Relation::All => unreachable!(),
                };
                let w = w.map_err(domain)?;
                recs.push(ContainReport { relation: name, contained: w.is_some(), witness: w.as_ref().map(WitnessReport::from) });
            }
            to_values(&recs)
        }
        Command::Beta { graph } => to_values(&[BetaReport::from(&classify_edges(&load(&graph)?))]),
        Command::Classify { graph } => {
            let g = load(&graph)?;
            let c = classify_edges(&g);
            to_values(&[ClassifyReport {
                n: g.n(),
                m: g.m(),
                beta: c.internal_edges().len(),
                star_subdivision_family: is_star_subdivision_family(&g),
                path_or_claw_family: is_path_or_claw_family(&g),
                edges: edge_labels(&c),
                dangling_paths: c.dangling_paths.clone(),
                graph6: to_graph6(&g),
                canonical: to_canonical_hex(&g),
            }])
        }
        Command::Vc { graph } => {
            let g = load(&graph)?;
            if g.n() > limits.containment {
                return Err(domain(format!("graph with {} vertices exceeds the cap of {}", g.n(), limits.containment)));
            }
            let (size, cover) = min_vertex_cover(&g);
            let formula = path_or_claw_arms(&g).map(|arms| match arms.as_slice() {
                [k] => vc_path(*k),
                a => vc_claw(a[0], a[1], a[2]),
            });
            to_values(&[VcReport { size, cover, formula }])
        }
        Command::Adversary { family, n, d, graph, edge, lmax, forbid, check_explicit } => {
            let mut recs = Vec::new();
            for &n in &n {
                let rec = match family {
                    FamilyArg::Forest => adversary_record(&family_forest(n).map_err(domain)?, check_explicit)?,
                    FamilyArg::Subgraphlb => {
                        let d = d.ok_or_else(|| usage("subgraphlb needs --d"))?;
                        adversary_record(&family_subgraphlb(n, d).map_err(domain)?, check_explicit)?
                    }
                    FamilyArg::Mainlb => {
                        let g = load(graph.as_deref().ok_or_else(|| usage("mainlb needs --graph"))?)?;
                        let (u, v) = match edge.as_deref() {
                            Some(&[u, v]) => (u, v),
                            _ => return Err(usage("mainlb needs --edge u,v")),
                        };
                        let mut rec = adversary_record(&family_mainlb(&g, u, v, n).map_err(domain)?, check_explicit)?;
                        if let Some(lmax) = lmax {
                            let forbidden = if forbid.is_empty() {
                                vec![g.clone()]
                            } else {
                                forbid.iter().map(|f| load(f)).collect::<Result<_, _>>()?
                            };
                            let fam = ForbiddenFamily::new(&forbidden, &[]);
                            rec.mainlb_check = Some(match check_mainlb_edge(&fam, &g, u, v, lmax, limits).map_err(domain)? {
                                MainlbVerdict::SuitableUpTo(l) => MainlbCheck::Suitable { lmax: l },
                                MainlbVerdict::Unsuitable { p, q } => MainlbCheck::Unsuitable { p, q, lmax },
                            });
                        }
                        rec
                    }
                };
                recs.push(rec);
            }
            to_values(&recs)
        }
        Command::WalkCost { problem, n, pattern, k, d, t, mbar, c_param, fit } => {
            let h = pattern.as_deref().map(load).transpose()?;
            let b = cost_of(problem, n, h.as_ref(), k, d, t.as_deref(), mbar, c_param).map_err(domain)?;
            let name = format!("{problem:?}").to_lowercase();
            let mut rec = CostReport::new(name, n, &b);
            if fit {
                if t.is_some() || (mbar.is_some() && !matches!(problem, Problem::Fourcycle | Problem::Pseudosparse)) {
                    return Err(usage("--fit sweeps n and cannot be combined with --t"));
                }
                // a fixed m̄ would not scale with n; sweep the ratio m̄/n instead
                let ratio = mbar.map(|m| m / n);
                let f = fit_exponent(|x| Ok(cost_of(problem, x, h.as_ref(), k, d, None, ratio.map(|r| r * x), c_param)?.leading()), &fit_sizes())
                    .map_err(domain)?;
                rec.fitted_exponent = Some(f.slope);
            }
            to_values(&[rec])
        }
        Command::Exponents => {
            let rows = exponent_table().map_err(domain)?;
            to_values(&rows.iter().map(ExponentReport::from).collect::<Vec<_>>())
        }
        Command::Detect { graph, pattern, mode, seed, confidence, c_param } => {
            let (g, h) = (load(&graph)?, load(&pattern)?);
            let mode = match mode {
                ModeArg::Basic => Mode::Basic,
                ModeArg::Dangling => Mode::Dangling,
                ModeArg::Paths => Mode::Paths,
                ModeArg::Fourcycle => Mode::FourCycle,
            };
            let cfg = DetectConfig { seed, confidence, c: c_param };
            let r = detect_subgraph(&OracleGraph::new(g), &h, mode, &cfg).map_err(domain)?;
            to_values(&[DetectReport {
                found: r.found,
                witness: r.witness.map(|w| w.vertex_map),
                probes: r.probes,
                rounds: r.rounds,
                gated: r.gated,
            }])
        }
        Command::Thresholds { family, n, s, t, l, c_param } => match family {
            ThresholdFamily::Kst => {
                let (s, t) = (s.ok_or_else(|| usage("kst needs --s"))?, t.ok_or_else(|| usage("kst needs --t"))?);
                let threshold = edge_threshold(Threshold::Kst { s, t }, n, c_param).map_err(domain)?;
                to_values(&[ThresholdReport { family: format!("K_{{{s},{t}}}"), n, c: c_param, threshold }])
            }
            ThresholdFamily::Bs => {
                let l = l.ok_or_else(|| usage("bs needs --l"))?;
                let threshold = edge_threshold(Threshold::BondySimonovits { l }, n, c_param).map_err(domain)?;
                to_values(&[ThresholdReport { family: format!("C_{}", 2 * l), n, c: c_param, threshold }])
            }
            ThresholdFamily::Sparse => {
                let (detect_cost, extract_cost) = sparse_pipeline_cost(n, c_param).map_err(domain)?;
                to_values(&[PipelineReport {
                    family: "sparse".into(),
                    n,
                    c: c_param,
                    detect_cost,
                    extract_cost,
                    total: detect_cost + extract_cost,
                }])
            }
        },
    };
    Ok(out)
}

fn limits_from(max_vertices: Option<&str>) -> Result<Limits, Failure> {
    match max_vertices {
        None => Ok(Limits::DEFAULT),
        Some(s) => s
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&c| c >= 1)
            .map(Limits::uniform)
            .ok_or_else(|| usage(format!("{MAX_VERTICES_ENV} must be a positive integer, got {s:?}"))),
    }
}

/// Runs one command. `max_vertices` is the value of `MINORLAB_MAX_VERTICES`.
pub fn run<I, T>(args: I, max_vertices: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let format = cli.format.unwrap_or(match cli.command {
        Command::Exponents => Format::Csv,
        _ => Format::Json,
    });
    let result = limits_from(max_vertices).and_then(|limits| execute(cli.command, &limits));
    match result {
        Ok(records) => match emit(out, format, &records) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                1
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}
