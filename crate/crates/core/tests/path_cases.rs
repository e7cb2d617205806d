//! Hosts built so that the path-shape construction takes each of its
//! branches, including the ones inside a completed end.

use std::collections::HashSet;

use nonsep_core::generate::gen_blob_graph;
use nonsep_core::graph::{Graph, GraphBuilder};
use nonsep_core::graph_finder::{find_path_shape_traced, PathCase};
use nonsep_core::oracle::verify_nonseparating;
use nonsep_core::shapes::ShapeSpec;

fn clique(g: &mut GraphBuilder, xs: &[usize]) {
    for (i, &u) in xs.iter().enumerate() {
        for &v in &xs[i + 1..] {
            g.add_edge_if_absent(u, v);
        }
    }
}

/// A core clique of order `c` with two hanging blobs. Each blob is a clique
/// of order `a` joined to core vertex x and a clique of order `b` joined to
/// core vertex y, with two edges between the cliques. Blob one hangs on
/// (0, 1), blob two on (2, 3).
fn two_fragile_blobs(c: usize, a: usize, b: usize) -> Graph {
    let n = c + 2 * (a + b);
    let mut g = GraphBuilder::new(n);
    clique(&mut g, &(0..c).collect::<Vec<_>>());
    for (blob, (x, y)) in [(0, 1), (2, 3)].into_iter().enumerate() {
        let base = c + blob * (a + b);
        let ka: Vec<_> = (base..base + a).collect();
        let kb: Vec<_> = (base + a..base + a + b).collect();
        clique(&mut g, &ka);
        clique(&mut g, &kb);
        for &u in &ka {
            g.add_edge_if_absent(x, u);
        }
        for &u in &kb {
            g.add_edge_if_absent(y, u);
        }
        g.add_edge_if_absent(ka[0], kb[0]);
        g.add_edge_if_absent(ka[a - 1], kb[b - 1]);
    }
    g.build()
}

fn cases(g: &Graph, spec: &ShapeSpec) -> Vec<(PathCase, usize)> {
    let run = find_path_shape_traced(g, spec).unwrap();
    assert!(spec.family().contains(&run.tree.shape), "{}", run.tree);
    assert!(verify_nonseparating(g, &run.tree, 2).unwrap(), "{}", run.tree);
    run.trace.iter().map(|s| (s.case, s.depth)).collect()
}

#[test]
fn center_meets_end_after_descent() {
    let g = two_fragile_blobs(15, 12, 7);
    for r in 1..=2 {
        let trace = cases(&g, &ShapeSpec::path_star(r, 5).unwrap());
        assert_eq!(trace, vec![(PathCase::Descend, 0), (PathCase::CenterMeetsEnd, 1)]);
    }
}

#[test]
fn leaf_meets_end_after_descent() {
    let g = two_fragile_blobs(13, 10, 10);
    for r in 1..=2 {
        let trace = cases(&g, &ShapeSpec::path_star(r, 5).unwrap());
        assert_eq!(trace, vec![(PathCase::Descend, 0), (PathCase::LeafMeetsEnd, 1)]);
    }
}

#[test]
fn path_double_stars_on_fragile_hosts() {
    let g = two_fragile_blobs(16, 12, 9);
    let mut seen = HashSet::new();
    for second in [false, true] {
        for r in 1..=2 {
            let spec = ShapeSpec::path_double_star(second, r, 6, ShapeSpec::default_pds_split(r, 6)).unwrap();
            seen.extend(cases(&g, &spec));
        }
    }
    assert!(seen.contains(&(PathCase::Descend, 0)), "{seen:?}");
}

#[test]
fn blob_hosts_and_a_clique_reach_every_top_level_branch() {
    let mut seen: HashSet<_> = cases(&Graph::complete(8), &ShapeSpec::path_star(2, 5).unwrap())
        .into_iter()
        .collect();
    for seed in 0..40 {
        let g = gen_blob_graph(8, 6, 1 + seed as usize % 3, seed).unwrap();
        for r in 1..=2 {
            seen.extend(cases(&g, &ShapeSpec::path_star(r, 5).unwrap()));
        }
    }
    for case in [
        PathCase::HeadThreeConnected,
        PathCase::LeafMeetsEnd,
        PathCase::CenterMeetsEnd,
        PathCase::Descend,
    ] {
        assert!(seen.contains(&(case, 0)), "{case} missing from {seen:?}");
    }
}
