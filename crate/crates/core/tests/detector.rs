use minorlab_core::detector::*;
use minorlab_core::graph::enumerate::{plant, random_gnm};
use minorlab_core::Graph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Plain backtracking over injective maps, independent of the library search.
fn brute_subgraph(h: &Graph, g: &Graph) -> bool {
    fn go(h: &Graph, g: &Graph, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == h.n() {
            return true;
        }
        for v in 0..g.n() {
            if map.contains(&v) {
                continue;
            }
            if (0..i).all(|j| !h.has_edge(i, j) || g.has_edge(v, map[j])) {
                map.push(v);
                if go(h, g, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    go(h, g, &mut Vec::new())
}

fn replays(h: &Graph, map: &[usize], g: &Graph) -> bool {
    let mut seen = map.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == h.n() && h.edges().iter().all(|&(a, b)| g.has_edge(map[a], map[b]))
}

fn sparse(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let m = rng.gen_range(0..=3 * n / 2);
    random_gnm(rng, n, m)
}

fn c4_through(g: &Graph, v: usize) -> bool {
    let nv = g.neighbor_list(v);
    (0..g.n()).any(|w| w != v && nv.iter().filter(|&&a| a != w && g.has_edge(a, w)).count() >= 2)
}

#[test]
fn buckets_of_small_examples() {
    let cube = {
        let mut g = Graph::new(8);
        for v in 0..8usize {
            for b in 0..3 {
                let w = v ^ (1 << b);
                if v < w {
                    g.add_edge(v, w);
                }
            }
        }
        g
    };
    let b = degree_buckets(&OracleGraph::new(cube));
    let holding: Vec<(usize, usize)> = b.iter().filter(|x| x.vertices.len() == 8).map(|x| (x.lo, x.hi)).collect();
    assert_eq!(holding, vec![(1, 4), (2, 8)]);

    let b = degree_buckets(&OracleGraph::new(Graph::star(8)));
    let find = |lo: usize| b.iter().find(|x| x.lo == lo).unwrap();
    assert!(find(4).vertices.contains(&0));
    assert_eq!(find(1).vertices, (1..9).collect::<Vec<_>>());
}

#[test]
fn isolated_vertices_sit_in_no_bucket() {
    let mut g = Graph::new(5);
    g.add_edge(0, 1);
    let b = degree_buckets(&OracleGraph::new(g));
    assert!(b.iter().all(|x| !x.vertices.contains(&4)));
}

#[test]
fn bucket_coverage_and_margins() {
    for d in 1..=10_000usize {
        let cover = covering_intervals(d);
        if d == 1 {
            assert_eq!(cover, vec![(1, 4)]);
        } else {
            assert!(cover.len() >= 2, "d = {d}");
        }
        // far from the top of some interval, and from both ends of another
        assert!(cover.iter().any(|&(_, hi)| 2 * (hi - d) >= d), "d = {d}");
        assert!(d == 1 || cover.iter().any(|&(lo, hi)| 3 * (d - lo) >= d && 3 * (hi - d) >= d), "d = {d}");
    }
}

#[test]
fn probes_are_counted_one_by_one() {
    let g = OracleGraph::new(Graph::cycle(6));
    assert!(g.probe(0, 1));
    assert!(!g.probe(0, 3));
    assert!(!g.probe(2, 2));
    assert_eq!(g.probe_count(), 3);
    assert_eq!(g.recorded(1, 0), Some(true));
    assert_eq!(g.recorded(0, 3), Some(false));
    assert_eq!(g.recorded(4, 5), None);
    assert_eq!(g.recorded_graph().m(), 1);
    g.probe_all();
    assert_eq!(g.probe_count(), 3 + 15);
    assert_eq!(g.recorded_graph(), Graph::cycle(6));
}

#[test]
fn triangle_predicate_examples() {
    let mut g = Graph::new(5);
    for (a, b) in [(0, 1), (0, 2), (1, 2), (3, 2), (4, 2), (3, 0), (4, 0)] {
        g.add_edge(a, b);
    }
    let o = OracleGraph::new(g.clone());
    let w = marked_predicate(&TupleState::probe(&o, &[0, 1]), &Graph::cycle(3)).expect("adjacent with a common neighbor");
    assert!(w.verify(&Graph::cycle(3), &g));
    // 3 and 4 share neighbors 0 and 2 but are not adjacent
    assert!(marked_predicate(&TupleState::probe(&o, &[3, 4]), &Graph::cycle(3)).is_none());
}

#[test]
fn planted_cover_is_recognized() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let patterns = [Graph::cycle(3), Graph::cycle(4), Graph::path(5), Graph::star(3), Graph::complete(4), Graph::cycle(5)];
    for round in 0..60 {
        let h = &patterns[round % patterns.len()];
        let mut g = sparse(&mut rng, 24);
        let place = plant(&mut rng, &mut g, h);
        let covers = min_vertex_covers(h);
        let cover = covers[rng.gen_range(0..covers.len())];
        let stored: Vec<usize> = (0..h.n()).filter(|&v| cover >> v & 1 == 1).map(|v| place[v]).collect();
        let o = OracleGraph::new(g.clone());
        let w = marked_predicate(&TupleState::probe(&o, &stored), h).expect("planted copy");
        assert!(w.verify(h, &g));
        assert!(brute_subgraph(h, &g));
    }
}

#[test]
fn vertex_covers_are_minimum_and_complete() {
    assert_eq!(min_vertex_covers(&Graph::cycle(3)).len(), 3);
    assert_eq!(min_vertex_covers(&Graph::path(3)), vec![0b0110, 0b1010, 0b0101].into_iter().fold(Vec::new(), |mut v, x| {
        v.push(x);
        v.sort();
        v
    }));
    assert_eq!(min_vertex_covers(&Graph::star(4)), vec![1]);
}

fn five_path_instance() -> (Graph, Vec<usize>) {
    let mut g = Graph::new(12);
    let place = vec![3, 7, 1, 9, 4, 10];
    for i in 0..5 {
        g.add_edge(place[i], place[i + 1]);
    }
    g.add_edge(0, 7);
    g.add_edge(2, 1);
    g.add_edge(11, 5);
    (g, place)
}

#[test]
fn dangling_five_path_with_planted_colors() {
    let (g, place) = five_path_instance();
    let h = Graph::path(5);
    assert_eq!(dangling_leaves(&h), vec![0, 5]);
    let mut labels = vec![3u8; 12];
    labels[place[0]] = 1;
    labels[place[5]] = 2;
    let colors = ColorAssignment::from_labels(labels.clone(), 2).unwrap();
    let o = OracleGraph::new(g.clone());
    // H' is the 3-path 1-2-3-4 with cover {2, 3}
    let state = TupleState::probe_with_flags(&o, &[place[2], place[3]], &colors);
    let w = marked_predicate_dangling(&state, &h, &colors).unwrap().expect("correct coloring");
    assert!(w.verify(&h, &g));

    // both leaves labeled 1: no vertex carries label 2
    labels[place[5]] = 1;
    let bad = ColorAssignment::from_labels(labels, 2).unwrap();
    let state = TupleState::probe_with_flags(&o, &[place[2], place[3]], &bad);
    assert!(marked_predicate_dangling(&state, &h, &bad).unwrap().is_none());

    let plain = TupleState::probe(&o, &[place[2], place[3]]);
    assert_eq!(marked_predicate_dangling(&plain, &h, &colors), Err(DetectorError::MissingFlags));
}

#[test]
fn labels_are_validated() {
    assert_eq!(ColorAssignment::from_labels(vec![1, 0], 1), Err(DetectorError::InvalidLabels));
    assert_eq!(ColorAssignment::from_labels(vec![1, 3], 1), Err(DetectorError::InvalidLabels));
    let c = ColorAssignment::from_labels(vec![1, 2], 1).unwrap();
    assert_eq!(c.core_label(), 2);
}

#[test]
fn no_leaves_matches_basic_predicate() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let g = random_gnm(&mut rng, 10, 14);
        let h = [Graph::cycle(3), Graph::cycle(4), Graph::complete(4)][rng.gen_range(0..3)].clone();
        assert!(dangling_leaves(&h).is_empty());
        let k = min_vertex_covers(&h)[0].count_ones() as usize;
        let mut verts: Vec<usize> = (0..10).collect();
        for i in 0..k {
            let j = rng.gen_range(i..10);
            verts.swap(i, j);
        }
        let o = OracleGraph::new(g);
        let colors = ColorAssignment::from_labels(vec![1; 10], 0).unwrap();
        let state = TupleState::probe_with_flags(&o, &verts[..k], &colors);
        assert_eq!(marked_predicate(&state, &h), marked_predicate_dangling(&state, &h, &colors).unwrap());
    }
}

#[test]
fn color_round_counts() {
    assert_eq!(color_rounds(&Graph::path(5), 0.9).unwrap(), 1678);
    let direct = (0.1f64.ln() / (1.0 - 3f64.powi(-6)).ln()).ceil() as u64;
    assert_eq!(direct, 1678);
    assert_eq!(color_rounds(&Graph::cycle(4), 0.99).unwrap(), 1);
    assert_eq!(color_rounds(&Graph::path(1), 0.9).unwrap(), 1);
    assert_eq!(color_rounds(&Graph::path(5), 1.0), Err(DetectorError::InvalidConfidence));
    assert_eq!(color_rounds(&Graph::path(5), 0.0), Err(DetectorError::InvalidConfidence));
    // claw: three leaves, four vertices
    let p = 4f64.powi(-4);
    let r = color_rounds(&Graph::star(3), 0.9).unwrap();
    assert!(1.0 - (1.0 - p).powi(r as i32) >= 0.9);
    assert!(1.0 - (1.0 - p).powi(r as i32 - 1) < 0.9);
}

#[test]
fn three_path_checks() {
    let mut g = Graph::new(8);
    for (a, b) in [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6)] {
        g.add_edge(a, b);
    }
    let o = OracleGraph::new(g);
    let s = TupleState::probe(&o, &[0, 3, 4]);
    assert_eq!(check_3path(0, 3, &s, &o), Some((1, 2)));
    assert_eq!(check_3path(0, 4, &s, &o), None);
}

#[test]
fn three_path_probe_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let g = random_gnm(&mut rng, 20, 30);
        let (u, v) = (rng.gen_range(0..20), rng.gen_range(0..20));
        if u == v {
            continue;
        }
        let o = OracleGraph::new(g.clone());
        let s = TupleState::probe(&o, &[u, v]);
        let before = o.probe_count();
        let hit = check_3path(u, v, &s, &o);
        assert!(o.probe_count() - before <= (g.degree(u) * g.degree(v)) as u64);
        let expect = g.neighbor_list(u).iter().any(|&a| {
            a != v && g.neighbor_list(v).iter().any(|&b| b != u && b != a && g.has_edge(a, b))
        });
        assert_eq!(hit.is_some(), expect);
        if let Some((a, b)) = hit {
            assert!(g.has_edge(u, a) && g.has_edge(a, b) && g.has_edge(b, v));
        }
    }
}

#[test]
fn adjacent_to_two_checks() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for n in [8usize, 16, 32, 64] {
        for _ in 0..20 {
            let g = random_gnm(&mut rng, n, 3 * n / 2);
            let o = OracleGraph::new(g.clone());
            for v in 0..n {
                let s = TupleState::probe(&o, &[v]);
                let before = o.probe_count();
                let hit = check_adjacent_to_two(v, &s, &o);
                assert!(o.probe_count() - before <= (n * g.degree(v)) as u64);
                assert_eq!(hit.is_some(), c4_through(&g, v));
                if let Some((a, w, b)) = hit {
                    assert!(g.has_edge(v, a) && g.has_edge(a, w) && g.has_edge(w, b) && g.has_edge(b, v));
                }
            }
        }
    }
    // trees have no C4
    let mut tree = Graph::new(20);
    for v in 1..20 {
        tree.add_edge(v, rng.gen_range(0..v));
    }
    let o = OracleGraph::new(tree);
    for v in 0..20 {
        assert!(check_adjacent_to_two(v, &TupleState::probe(&o, &[v]), &o).is_none());
    }
    let mut g = Graph::new(10);
    plant(&mut rng, &mut g, &Graph::cycle(4));
    let o = OracleGraph::new(g.clone());
    let on_cycle = (0..10).find(|&v| g.degree(v) == 2).unwrap();
    assert!(check_adjacent_to_two(on_cycle, &TupleState::probe(&o, &[on_cycle]), &o).is_some());
}

fn cfg(seed: u64) -> DetectConfig {
    DetectConfig { seed, ..DetectConfig::default() }
}

#[test]
fn basic_mode_agrees_with_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let patterns = [Graph::cycle(3), Graph::cycle(4), Graph::path(3), Graph::star(3), Graph::complete(4), Graph::path(5)];
    for i in 0..300 {
        let h = &patterns[i % patterns.len()];
        let n = rng.gen_range(h.n()..=16);
        let mut g = sparse(&mut rng, n);
        if i % 2 == 0 {
            plant(&mut rng, &mut g, h);
        }
        let o = OracleGraph::new(g.clone());
        let d = detect_subgraph(&o, h, Mode::Basic, &cfg(i as u64)).unwrap();
        assert_eq!(d.found, brute_subgraph(h, &g), "instance {i}");
        assert_eq!(d.probes, o.probe_count());
        if let Some(w) = &d.witness {
            assert!(w.verify(h, &o.recorded_graph()));
        }
    }
}

#[test]
fn dangling_mode_is_sound_and_finds_planted_copies() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let patterns = [Graph::star(3), Graph::path(4), Graph::subdivided_claw(1, 1, 2)];
    let mut hits = 0;
    let mut planted = 0;
    for i in 0..60 {
        let h = &patterns[i % patterns.len()];
        let mut g = sparse(&mut rng, 14);
        if i % 2 == 0 {
            plant(&mut rng, &mut g, h);
            planted += 1;
        }
        let o = OracleGraph::new(g.clone());
        let d = detect_subgraph(&o, h, Mode::Dangling, &cfg(i as u64)).unwrap();
        let truth = brute_subgraph(h, &g);
        assert!(!d.found || truth, "instance {i}");
        if let Some(w) = &d.witness {
            assert!(w.verify(h, &o.recorded_graph()));
        }
        if i % 2 == 0 {
            hits += d.found as usize;
        }
    }
    let rate = hits as f64 / planted as f64;
    let slack = 3.0 * (0.9f64 * 0.1 / planted as f64).sqrt();
    assert!(rate >= 0.9 - slack, "rate {rate}");
}

#[test]
fn paths_mode_finds_a_planted_seven_path() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let h = Graph::path(7);
    let mut g = random_gnm(&mut rng, 12, 8);
    plant(&mut rng, &mut g, &h);
    let o = OracleGraph::new(g.clone());
    let d = detect_subgraph(&o, &h, Mode::Paths, &DetectConfig { seed: 1, confidence: 0.9, c: None }).unwrap();
    assert!(d.found);
    let w = d.witness.unwrap();
    assert!(w.verify(&h, &o.recorded_graph()));

    // a 6-path alone has no 7-path
    let o = OracleGraph::new(Graph::path(6).disjoint_union(&Graph::cycle(3)).unwrap());
    let d = detect_subgraph(&o, &h, Mode::Paths, &DetectConfig { seed: 1, confidence: 0.5, c: None }).unwrap();
    assert!(!d.found);
}

#[test]
fn paths_mode_falls_back_for_short_paths() {
    let (g, _) = five_path_instance();
    let o = OracleGraph::new(g.clone());
    let d = detect_subgraph(&o, &Graph::path(5), Mode::Paths, &cfg(2)).unwrap();
    assert!(d.found);
    assert!(d.witness.unwrap().verify(&Graph::path(5), &g));
}

#[test]
fn four_cycle_mode() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for i in 0..100 {
        let m = rng.gen_range(10..30);
        let g = random_gnm(&mut rng, 20, m);
        let o = OracleGraph::new(g.clone());
        let d = detect_subgraph(&o, &Graph::cycle(4), Mode::FourCycle, &cfg(i)).unwrap();
        assert_eq!(d.found, brute_subgraph(&Graph::cycle(4), &g));
        assert!(!d.gated);
        if let Some(w) = d.witness {
            assert!(w.verify(&Graph::cycle(4), &o.recorded_graph()));
        }
    }
    // dense input: accepted by the edge count alone
    let o = OracleGraph::new(Graph::complete(12));
    let d = detect_subgraph(&o, &Graph::cycle(4), Mode::FourCycle, &cfg(0)).unwrap();
    assert!(d.found && d.gated && d.witness.is_none());
    assert_eq!(d.probes, 66);
}

#[test]
fn gate_is_sound_for_forests() {
    // K7 blocks: 3n edges, no path on 8 vertices
    let mut g = Graph::new(0);
    for _ in 0..3 {
        g = g.disjoint_union(&Graph::complete(7)).unwrap();
    }
    let o = OracleGraph::new(g.clone());
    let d = detect_subgraph(&o, &Graph::path(7), Mode::Dangling, &DetectConfig { seed: 0, confidence: 0.2, c: None }).unwrap();
    assert!(!d.found && !d.gated);
    // an explicit constant overrides the choice
    let o = OracleGraph::new(g);
    let d = detect_subgraph(&o, &Graph::path(7), Mode::Dangling, &DetectConfig { seed: 0, confidence: 0.2, c: Some(1.0) }).unwrap();
    assert!(d.found && d.gated);
}

#[test]
fn mode_and_config_errors() {
    let o = OracleGraph::new(Graph::cycle(5));
    assert!(matches!(
        detect_subgraph(&o, &Graph::cycle(3), Mode::Paths, &cfg(0)),
        Err(DetectorError::ModeMismatch(_))
    ));
    assert!(matches!(
        detect_subgraph(&o, &Graph::path(4), Mode::FourCycle, &cfg(0)),
        Err(DetectorError::ModeMismatch(_))
    ));
    let bad = DetectConfig { confidence: 1.5, ..cfg(0) };
    assert_eq!(detect_subgraph(&o, &Graph::cycle(3), Mode::Basic, &bad), Err(DetectorError::InvalidConfidence));
    let bad = DetectConfig { c: Some(0.0), ..cfg(0) };
    assert_eq!(detect_subgraph(&o, &Graph::cycle(3), Mode::Basic, &bad), Err(DetectorError::InvalidGate));
}

#[test]
fn edgeless_patterns_need_only_vertices() {
    let o = OracleGraph::new(Graph::new(4));
    let d = detect_subgraph(&o, &Graph::new(4), Mode::Basic, &cfg(0)).unwrap();
    assert!(d.found && d.probes == 0);
    let d = detect_subgraph(&o, &Graph::new(5), Mode::Dangling, &cfg(0)).unwrap();
    assert!(!d.found);
    let d = detect_subgraph(&o, &Graph::new(1), Mode::Basic, &cfg(0)).unwrap();
    assert!(d.found);
}

#[test]
fn fixed_seed_replays_identically() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut g = random_gnm(&mut rng, 16, 16);
    plant(&mut rng, &mut g, &Graph::path(5));
    let run = || {
        let o = OracleGraph::new(g.clone());
        detect_subgraph(&o, &Graph::path(5), Mode::Dangling, &cfg(42)).unwrap()
    };
    assert_eq!(run(), run());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basic_witnesses_replay(seed in any::<u64>(), n in 4usize..14, extra in 0usize..20) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_gnm(&mut rng, n, extra.min(n * (n - 1) / 2));
        let h = Graph::cycle(3);
        let o = OracleGraph::new(g.clone());
        let d = detect_subgraph(&o, &h, Mode::Basic, &cfg(seed)).unwrap();
        prop_assert_eq!(d.found, brute_subgraph(&h, &g));
        if let Some(w) = d.witness {
            prop_assert!(replays(&h, &w.vertex_map, &o.recorded_graph()));
        }
    }

    #[test]
    fn colors_are_in_range(seed in any::<u64>(), n in 1usize..64, ell in 0usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = ColorAssignment::random(&mut rng, n, ell);
        prop_assert!(c.labels().iter().all(|&l| l >= 1 && l as usize <= ell + 1));
    }
}
