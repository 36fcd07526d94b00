use minorlab_core::graph::cover::min_vertex_cover;
use minorlab_core::graph::enumerate::all_graphs;
use minorlab_core::graph::iso::is_isomorphic;
use minorlab_core::graph::subgraph::is_subgraph;
use minorlab_core::graph::topological::enumerate_subdivisions;
use minorlab_core::minor_theory::*;
use minorlab_core::{Graph, Limits};
use proptest::prelude::*;

const L: Limits = Limits::DEFAULT;

/// Internal by the textbook reading: the edge lies on a cycle, or removing it
/// separates two sides that each contain a vertex of degree at least 3.
fn internal_by_cuts(g: &Graph, u: usize, v: usize) -> bool {
    let mut h = g.clone();
    h.remove_edge(u, v);
    let side_u = h.reach(u, h.vertex_mask());
    if side_u >> v & 1 == 1 {
        return true;
    }
    let side_v = h.reach(v, h.vertex_mask());
    let heavy = |side: u64| (0..g.n()).any(|w| side >> w & 1 == 1 && g.degree(w) >= 3);
    heavy(side_u) && heavy(side_v)
}

fn small_graphs(max_n: usize) -> Vec<Graph> {
    all_graphs(max_n).into_iter().flatten().collect()
}

#[test]
fn classification_examples() {
    assert_eq!(classify_edges(&Graph::cycle(5)).internal_edges().len(), 5);
    assert_eq!(classify_edges(&Graph::path(6)).external_edges().len(), 6);
    assert_eq!(classify_edges(&Graph::subdivided_claw(2, 2, 2)).external_edges().len(), 6);
    assert_eq!(classify_edges(&Graph::path(1)).external_edges(), vec![(0, 1)]);
    assert_eq!(beta(&Graph::new(0)), 0);
}

#[test]
fn beta_examples() {
    assert_eq!(beta(&Graph::cycle(3)), 3);
    assert_eq!(beta(&Graph::complete(4)), 6);
    // two triangles joined by a 3-path
    let mut g = Graph::cycle(3).disjoint_union(&Graph::cycle(3)).unwrap();
    let a = g.add_vertex().unwrap();
    let b = g.add_vertex().unwrap();
    for (x, y) in [(2, a), (a, b), (b, 3)] {
        g.add_edge(x, y);
    }
    assert_eq!(beta(&g), 9);
}

#[test]
fn classification_matches_cut_oracle() {
    for g in small_graphs(7) {
        let c = classify_edges(&g);
        assert_eq!(c.labels.len(), g.m());
        for &((u, v), kind) in &c.labels {
            assert_eq!(kind == EdgeKind::Internal, internal_by_cuts(&g, u, v), "{g:?} ({u}, {v})");
        }
        // every external edge sits on a listed dangling path
        for (u, v) in c.external_edges() {
            assert!(c.dangling_paths.iter().any(|p| p.windows(2).any(|w| (w[0], w[1]) == (u, v) || (w[1], w[0]) == (u, v))));
        }
    }
}

#[test]
fn replacement_examples() {
    let c3 = Graph::cycle(3);
    for (u, v) in c3.edges() {
        let r = replace_edge_with_paths(&c3, u, v, 1, 1).unwrap();
        assert_eq!((r.n(), r.m()), (5, 4));
        assert!(r.is_connected());
        assert_eq!(beta(&r), 0);
    }
    let k4 = Graph::complete(4);
    for (u, v) in k4.edges() {
        let r = replace_edge_with_paths(&k4, u, v, 2, 3).unwrap();
        assert_eq!(r.n(), 9);
        assert_eq!(beta(&r), 5);
    }
    assert!(replace_edge_with_paths(&c3, 0, 0, 1, 1).is_err());
    assert!(replace_edge_with_paths(&Graph::path(2), 0, 2, 1, 1).is_err());
}

#[test]
fn beta_is_monotone_under_single_steps() {
    for h in small_graphs(6) {
        let b = beta(&h);
        let mut steps = Vec::new();
        for u in 0..h.n() {
            for v in u + 1..h.n() {
                if !h.has_edge(u, v) {
                    let mut g = h.clone();
                    g.add_edge(u, v);
                    steps.push(g);
                } else {
                    steps.push(h.subdivide_edge(u, v).unwrap());
                }
            }
        }
        steps.push(h.disjoint_union(&Graph::new(1)).unwrap());
        for g in steps {
            assert!(beta(&g) >= b, "{h:?} -> {g:?}");
        }
    }
}

#[test]
fn replacing_internal_edges_lowers_beta() {
    for g in small_graphs(6) {
        let b = beta(&g);
        for (u, v) in classify_edges(&g).internal_edges() {
            for p in 1..=3 {
                for q in 1..=3 {
                    assert!(beta(&replace_edge_with_paths(&g, u, v, p, q).unwrap()) < b);
                }
            }
        }
    }
}

#[test]
fn star_family_examples() {
    for k in 1..8 {
        assert!(is_star_subdivision_family(&Graph::path(k)));
    }
    assert!(!is_star_subdivision_family(&Graph::cycle(4)));
    let g = Graph::subdivided_claw(1, 2, 3).disjoint_union(&Graph::path(4)).unwrap();
    assert!(is_star_subdivision_family(&g));
}

#[test]
fn star_family_is_beta_zero() {
    for g in small_graphs(8) {
        assert_eq!(is_star_subdivision_family(&g), beta(&g) == 0, "{g:?}");
    }
}

#[test]
fn path_or_claw_examples() {
    assert!(is_path_or_claw_family(&Graph::subdivided_claw(2, 2, 2)));
    assert!(!is_path_or_claw_family(&Graph::star(4)));
    assert!(!is_path_or_claw_family(&Graph::cycle(3)));
    assert!(is_path_or_claw_family(&Graph::path(3).disjoint_union(&Graph::star(3)).unwrap()));
}

#[test]
fn beta_zero_graphs_sit_inside_their_subdivisions() {
    for h in small_graphs(5).into_iter().filter(|h| beta(h) == 0) {
        for s in enumerate_subdivisions(&h, h.n()).unwrap() {
            assert!(is_subgraph(&h, &s, false, &L).unwrap().is_some(), "{h:?} in {s:?}");
        }
        assert!(subdivision_without_copy(&h, 3, &L).unwrap().is_none());
    }
}

#[test]
fn positive_beta_has_a_subdivision_without_a_copy() {
    for h in small_graphs(6).into_iter().filter(|h| beta(h) > 0) {
        let (s, g) = subdivision_without_copy(&h, 6, &L).unwrap().expect("construction");
        assert_eq!(g.n(), h.n() + s * h.m());
        assert!(is_subgraph(&h, &g, false, &L).unwrap().is_none());
    }
}

#[test]
fn uniform_subdivision_shape() {
    let g = subdivide_all(&Graph::cycle(3), 2).unwrap();
    assert!(is_isomorphic(&g, &Graph::cycle(9)));
    let g = subdivide_all(&Graph::star(3), 1).unwrap();
    assert!(is_isomorphic(&g, &Graph::subdivided_claw(2, 2, 2)));
}

#[test]
fn vc_formulas_match_search() {
    assert_eq!(vc_path(5), 3);
    assert_eq!(vc_claw(2, 2, 2), 3);
    assert_eq!(vc_claw(1, 1, 1), 1);
    for k in 1..=10 {
        assert_eq!(vc_path(k), min_vertex_cover(&Graph::path(k)).0);
    }
    for a in 1..=4 {
        for b in 1..=4 {
            for c in 1..=4 {
                assert_eq!(vc_claw(a, b, c), min_vertex_cover(&Graph::subdivided_claw(a, b, c)).0, "{a} {b} {c}");
            }
        }
    }
}

#[test]
fn mainlb_checker_examples() {
    let c3 = ForbiddenFamily::new(&[Graph::cycle(3)], &[]);
    assert_eq!(check_mainlb_edge(&c3, &Graph::cycle(3), 0, 1, 4, &L).unwrap(), MainlbVerdict::SuitableUpTo(4));
    let k4 = ForbiddenFamily::new(&[Graph::complete(4)], &[]);
    assert_eq!(check_mainlb_edge(&k4, &Graph::complete(4), 0, 1, 3, &L).unwrap(), MainlbVerdict::SuitableUpTo(3));
    let p2 = ForbiddenFamily::new(&[], &[Graph::path(2)]);
    assert_eq!(check_mainlb_edge(&p2, &Graph::path(3), 1, 2, 2, &L).unwrap(), MainlbVerdict::Unsuitable { p: 1, q: 1 });
    // refuses when the largest replacement exceeds the cap
    assert!(check_mainlb_edge(&c3, &Graph::cycle(3), 0, 1, 6, &L).is_err());
    assert!(check_mainlb_edge(&c3, &Graph::cycle(3), 0, 2, 0, &L).is_err());
}

#[test]
fn forbidden_family_deduplicates() {
    let f = ForbiddenFamily::new(&[Graph::cycle(4), Graph::complete_bipartite(2, 2)], &[Graph::path(2), Graph::path(2)]);
    assert_eq!((f.topological.len(), f.subgraphs.len()), (1, 1));
}

#[test]
fn stripping_leaves() {
    let (core, kept) = strip_dangling_leaves(&Graph::path(5));
    assert!(is_isomorphic(&core, &Graph::path(3)));
    assert_eq!(kept, vec![1, 2, 3, 4]);
    let (core, _) = strip_dangling_leaves(&Graph::path(1));
    assert_eq!(core.m(), 1);
}

proptest! {
    #[test]
    fn internal_plus_external_is_m(bits in proptest::collection::vec(any::<bool>(), 36)) {
        let mut g = Graph::new(9);
        let mut it = bits.into_iter();
        for v in 1..9 {
            for u in 0..v {
                if it.next().unwrap() {
                    g.add_edge(u, v);
                }
            }
        }
        let c = classify_edges(&g);
        prop_assert_eq!(c.internal_edges().len() + c.external_edges().len(), g.m());
        prop_assert_eq!(beta(&g), c.internal_edges().len());
    }
}
