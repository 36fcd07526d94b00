//! Named patterns: `kpath:N`, `cycle:N`, `claw:a,b,c`, `clique:N`,
//! `biclique:s,t`, `star:N`, `c4`, `petersen`.

use minorlab_core::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown builtin {0:?}; expected kpath:N, cycle:N, claw:a,b,c, clique:N, biclique:s,t, star:N, c4 or petersen")]
pub struct UnknownBuiltin(pub String);

pub fn builtin(name: &str) -> Result<Graph, UnknownBuiltin> {
    let err = || UnknownBuiltin(name.to_string());
    let (kind, args) = name.split_once(':').unwrap_or((name, ""));
    let nums: Vec<usize> = if args.is_empty() {
        Vec::new()
    } else {
        args.split(',').map(|a| a.trim().parse().map_err(|_| err())).collect::<Result<_, _>>()?
    };
    let fits = |vertices: usize| vertices <= minorlab_core::graph::MAX_VERTICES;
    let g = match (kind, nums.as_slice()) {
        ("kpath", &[k]) if fits(k + 1) => Graph::path(k),
        ("cycle", &[k]) if k >= 3 && fits(k) => Graph::cycle(k),
        ("claw", &[a, b, c]) if a.min(b).min(c) >= 1 && fits(a + b + c + 1) => Graph::subdivided_claw(a, b, c),
        ("clique", &[k]) if fits(k) => Graph::complete(k),
        ("biclique", &[s, t]) if fits(s + t) => Graph::complete_bipartite(s, t),
        ("star", &[t]) if fits(t + 1) => Graph::star(t),
        ("c4", &[]) => Graph::cycle(4),
        ("petersen", &[]) => Graph::petersen(),
        _ => return Err(err()),
    };
    Ok(g)
}
