use minorlab_core::adversary::*;
use minorlab_core::graph::iso::is_isomorphic;
use minorlab_core::graph::topological::is_topological_minor;
use minorlab_core::graph::{pair_count, Graph};
use minorlab_core::minor_theory::beta;
use minorlab_core::Limits;
use num_rational::Ratio;

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn boxed<F: RelationFamily + 'static>(f: F) -> Box<dyn RelationFamily> {
    Box::new(f)
}

fn acyclic(g: &Graph) -> bool {
    g.m() + g.components().len() == g.n()
}

/// Recomputes l_max and v from the stored per-index tables.
fn recount(r: &SymmetricReport) -> (u64, Ratio<u64>) {
    let q = &r.quantities;
    let mut l_max = 0;
    let mut v = Ratio::new(0, 1);
    for w in &r.witnesses {
        let lx = r.x_tables[w.x_rep][w.x_bit];
        let ly = r.y_tables[w.y_rep][w.y_bit];
        l_max = l_max.max(lx * ly);
        v = v.max(Ratio::new(lx, q.m).min(Ratio::new(ly, q.m_prime)));
    }
    (l_max, v)
}

#[test]
fn unstructured_search() {
    let n = 12;
    let ys: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    let q = quantities_explicit(n, &[0], &ys, |_, _| true).unwrap();
    assert_eq!((q.m, q.m_prime, q.l_max), (12, 1, 1));
    assert!((q.quantum_bound - 12f64.sqrt()).abs() < 1e-12);
    assert_eq!(q.classical_bound, 12.0);
}

#[test]
fn degenerate_inputs_are_rejected() {
    assert!(matches!(quantities_explicit(4, &[], &[1], |_, _| true), Err(AdversaryError::Degenerate(_))));
    assert!(matches!(quantities_explicit(4, &[0], &[1], |_, _| false), Err(AdversaryError::Degenerate(_))));
    assert!(family_forest(8).is_err());
    assert!(family_subgraphlb(5, 6).is_err());
    assert!(family_subgraphlb(5, 1).is_err());
    assert!(matches!(
        scaling_fit(|n| Ok(boxed(family_forest(n)?)), &[12, 18, 27]),
        Err(AdversaryError::TooFewPoints { needed: 4, got: 3 })
    ));
    let c3 = Graph::cycle(3);
    assert!(family_mainlb(&c3, 0, 0, 12).is_err());
    assert!(family_mainlb(&c3, 0, 1, 3).is_err());
}

#[test]
fn subgraphlb_six_three() {
    let f = family_subgraphlb(6, 3).unwrap();
    assert_eq!(f.y_representatives().len(), 1);
    assert_eq!(f.related_y(&Graph::new(6)).len(), 20);
    let s = quantities_symmetric(&f).unwrap();
    let e = quantities_explicit_family(&f).unwrap();
    let q = &s.quantities;
    assert_eq!((q.m, q.m_prime, q.l_max), (20, 1, 4));
    // every pair lies in C(4,1) = 4 of the triangles
    assert!(s.x_tables[0].iter().all(|&l| l == 4));
    assert!(q.same_counts(&e));
    assert!((q.quantum_bound - 5f64.sqrt()).abs() < 1e-12);
    assert_eq!(family_subgraphlb(5, 5).unwrap().related_y(&Graph::new(5)).len(), 1);
}

#[test]
fn subgraphlb_symmetric_equals_explicit() {
    for (n, d) in [(6, 3), (7, 3), (7, 4), (8, 2)] {
        let f = family_subgraphlb(n, d).unwrap();
        let s = quantities_symmetric(&f).unwrap().quantities;
        let e = quantities_explicit_family(&f).unwrap();
        assert!(s.same_counts(&e), "({n}, {d}): {s:?} vs {e:?}");
    }
}

#[test]
fn subgraphlb_counts_follow_binomials() {
    for n in [5u64, 9, 16, 33, 64] {
        for d in [2u64, 3, 4] {
            let q = quantities_symmetric(&family_subgraphlb(n as usize, d as usize).unwrap()).unwrap().quantities;
            assert_eq!(q.m, binom(n, d));
            assert_eq!(q.m_prime, 1);
            assert_eq!(q.l_max, binom(n - 2, d - 2));
        }
    }
    let bound = |n: u64| (binom(n, 3) as f64 / binom(n - 2, 1) as f64).sqrt();
    for n in 8..=32u64 {
        let q1 = quantities_symmetric(&family_subgraphlb(n as usize, 3).unwrap()).unwrap().quantities;
        let q2 = quantities_symmetric(&family_subgraphlb(2 * n as usize, 3).unwrap()).unwrap().quantities;
        assert!((q1.quantum_bound - bound(n)).abs() < 1e-9);
        let ratio = q2.quantum_bound / q1.quantum_bound;
        assert!((ratio - 2.0).abs() <= 0.2, "n = {n}: {ratio}");
    }
}

#[test]
fn forest_representatives() {
    let f = family_forest(9).unwrap();
    let mut splits: Vec<(usize, usize)> = f
        .y_representatives()
        .iter()
        .map(|y| {
            let cyc = y.components().into_iter().find(|&c| (0..9).filter(|&v| c >> v & 1 == 1).all(|v| y.degree(v) == 2)).unwrap();
            let c = cyc.count_ones() as usize;
            (c, 9 - c)
        })
        .collect();
    splits.sort();
    assert_eq!(splits, vec![(4, 5), (5, 4)]);
    assert_eq!(f.x_representatives().len(), 1);
    assert!(is_isomorphic(&f.x_representatives()[0], &Graph::path(8)));
}

#[test]
fn forest_swap_of_the_ten_path() {
    let mut target = Graph::cycle(6).disjoint_union(&Graph::path(3)).unwrap();
    assert_eq!(target.n(), 10);
    let outcomes = swap_outcomes(&Graph::path(9));
    assert!(outcomes.iter().any(|y| is_isomorphic(y, &target)));
    // the swap exchanges ab, cd for ac, bd
    let mut x = Graph::path(9);
    x.remove_edge(1, 2);
    x.remove_edge(7, 8);
    x.add_edge(1, 8);
    x.add_edge(2, 7);
    assert!(is_isomorphic(&x, &target));
    target = x;
    let f = family_forest(10).unwrap();
    assert!(f.is_y(&target));
    assert!(f.related_x(&target).iter().any(|p| *p == Graph::path(9)));
}

#[test]
fn related_pairs_are_four_bit_swaps_across_the_property() {
    for n in 9..=13 {
        let f = family_forest(n).unwrap();
        for x in f.x_representatives() {
            assert!(acyclic(x));
            for y in f.related_y(x) {
                assert!(!acyclic(&y));
                assert!(f.is_y(&y));
                let diff: u32 = (0..n).map(|v| (x.neighbors(v) ^ y.neighbors(v)).count_ones()).sum();
                assert_eq!(diff, 8, "4 pairs, each counted at both ends");
            }
        }
        for y in f.y_representatives() {
            for x in f.related_x(y) {
                assert!(f.is_x(&x));
            }
        }
    }
}

#[test]
fn swap_masks_match_graph_swaps() {
    let g = Graph::path(7);
    let mut a: Vec<u64> = swap_outcomes(&g).iter().map(|h| h.to_mask().unwrap()).collect();
    let mut b = swap_outcome_masks(8, g.to_mask().unwrap());
    a.sort();
    a.dedup();
    b.sort();
    b.dedup();
    assert_eq!(a, b);
}

#[test]
fn forest_symmetric_equals_explicit() {
    for (n, expect) in [(9, (7, 30, 10)), (10, (12, 36, 16))] {
        let f = family_forest(n).unwrap();
        let s = quantities_symmetric(&f).unwrap();
        let e = quantities_explicit_family(&f).unwrap();
        let q = &s.quantities;
        assert_eq!((q.m, q.m_prime, q.l_max), expect);
        assert!(q.same_counts(&e), "n = {n}");
    }
}

#[test]
fn bound_identity_and_table_recount() {
    let families: Vec<Box<dyn RelationFamily>> = vec![
        boxed(family_forest(9).unwrap()),
        boxed(family_forest(16).unwrap()),
        boxed(family_subgraphlb(10, 3).unwrap()),
        boxed(family_mainlb(&Graph::complete(4), 0, 1, 14).unwrap()),
    ];
    for f in &families {
        let r = quantities_symmetric(f.as_ref()).unwrap();
        let q = &r.quantities;
        let sq = q.quantum_bound_squared();
        assert_eq!(sq * Ratio::from_integer(q.l_max as u128), Ratio::from_integer(q.m as u128 * q.m_prime as u128));
        assert!((q.quantum_bound * q.quantum_bound - *sq.numer() as f64 / *sq.denom() as f64).abs() < 1e-6);
        assert_eq!(recount(&r), (q.l_max, q.v), "{}", f.name());
        assert_eq!(q.m, *r.x_degrees.iter().min().unwrap());
        assert_eq!(q.m_prime, *r.y_degrees.iter().min().unwrap());
        assert_eq!(q.classical_bound, *q.v.denom() as f64 / *q.v.numer() as f64);
    }
}

#[test]
fn forest_l_max_grows_linearly() {
    let l: Vec<u64> = (0..=64)
        .map(|n| if n < 9 { 0 } else { quantities_symmetric(&family_forest(n).unwrap()).unwrap().quantities.l_max })
        .collect();
    assert_eq!(&l[12..=16], &[20, 24, 28, 28, 32]);
    // the smallest size sits above the asymptotic ratio of 2
    assert_eq!(Ratio::new(l[24], l[12]), Ratio::new(13, 5));
    for n in 13..=32 {
        let ratio = l[2 * n] as f64 / l[n] as f64;
        assert!(ratio <= 2.5, "n = {n}: {ratio}");
    }
}

#[test]
fn scaling_slopes() {
    let forest = scaling_fit(|n| Ok(boxed(family_forest(n)?)), &[12, 18, 27, 40, 60]).unwrap();
    assert!((forest.slope - 1.5).abs() <= 0.15, "{forest:?}");
    let sub = scaling_fit(|n| Ok(boxed(family_subgraphlb(n, 3)?)), &[8, 16, 32, 64]).unwrap();
    assert!((sub.slope - 1.0).abs() <= 0.1, "{sub:?}");
    let flat = scaling_fit(|n| Ok(boxed(family_subgraphlb(n, n)?)), &[4, 8, 16, 32]).unwrap();
    assert!(flat.slope.abs() < 1e-12);
}

#[test]
fn mainlb_on_the_triangle_is_the_forest_family() {
    for n in 9..=13 {
        let a = family_mainlb(&Graph::cycle(3), 0, 1, n).unwrap();
        let b = family_forest(n).unwrap();
        for (xs, ys) in [(a.x_representatives(), b.x_representatives()), (a.y_representatives(), b.y_representatives())] {
            assert_eq!(xs.len(), ys.len());
            assert!(xs.iter().all(|x| ys.iter().any(|y| is_isomorphic(x, y))));
        }
        let qa = quantities_symmetric(&a).unwrap().quantities;
        let qb = quantities_symmetric(&b).unwrap().quantities;
        assert!(qa.same_counts(&qb));
    }
}

#[test]
fn mainlb_representatives_straddle_the_property() {
    let limits = Limits::uniform(14);
    let bases = [
        (Graph::cycle(3), (0, 1)),
        (Graph::cycle(4), (0, 1)),
        (Graph::complete(4), (0, 1)),
        (Graph::cycle(5), (1, 2)),
        (Graph::complete_bipartite(2, 3), (0, 2)),
    ];
    for (g, (u, v)) in &bases {
        let mut built = 0;
        for n in [12, 13, 14] {
            // not every size leaves room for both parts
            let Ok(f) = family_mainlb(g, *u, *v, n) else { continue };
            built += 1;
            assert_eq!(f.base_graph(), g);
            assert_eq!(f.edge(), (*u, *v));
            for x in f.x_representatives() {
                assert_eq!(x.n(), n);
                assert!(is_topological_minor(g, x, &limits).unwrap().is_none());
                assert!(beta(x) < beta(g) || beta(g) == 0);
            }
            for y in f.y_representatives() {
                assert_eq!(y.n(), n);
                assert!(is_topological_minor(g, y, &limits).unwrap().is_some());
            }
        }
        assert!(built > 0);
    }
}

#[test]
fn mainlb_k4_at_fourteen() {
    let f = family_mainlb(&Graph::complete(4), 0, 1, 14).unwrap();
    let q = quantities_symmetric(&f).unwrap().quantities;
    assert!(q.quantum_bound > 0.0);
    assert!(q.m > 0 && q.m_prime > 0 && q.l_max > 0);
}

#[test]
fn mainlb_symmetric_equals_explicit_on_small_hosts() {
    let f = family_mainlb(&Graph::cycle(4), 0, 1, 10).unwrap();
    let s = quantities_symmetric(&f).unwrap().quantities;
    let e = quantities_explicit_family(&f).unwrap();
    assert!(s.same_counts(&e), "{s:?} vs {e:?}");
}

#[test]
fn explicit_engine_size_cap() {
    assert_eq!(EXPLICIT_MAX_N, 11);
    assert!(quantities_explicit_family(&family_forest(12).unwrap()).is_err());
    assert_eq!(pair_count(EXPLICIT_MAX_N), 55);
}
