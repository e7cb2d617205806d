//! Hand-built digraphs that drive the improvement loop through its rarer
//! branches. Each host is tight (semi-degree exactly m + 1 on the vertices
//! that matter) so the cheaper branches cannot fire first.

use nonsep_core::digraph_finder::{run_oriented_double_star_from, run_oriented_star_from, Case, Run};
use nonsep_core::graph::{Digraph, DigraphBuilder, VertexSet};
use nonsep_core::oracle::verify_nonseparating;
use nonsep_core::shapes::{double_star_from_arc, embed_shape, ShapeKind, ShapeSpec};

/// Bidirected clique on `clique` plus the extra arcs.
fn build(n: usize, clique: std::ops::Range<usize>, arcs: &[(usize, usize)]) -> Digraph {
    let mut b = DigraphBuilder::new(n);
    for u in clique.clone() {
        for v in clique.clone() {
            if u != v {
                b.add_arc_if_absent(u, v);
            }
        }
    }
    for &(u, v) in arcs {
        b.add_arc_if_absent(u, v);
    }
    b.build()
}

fn check(d: &Digraph, run: &Run, expected: Case) {
    let cases: Vec<Case> = run.trace.iter().map(|e| e.case).collect();
    assert!(cases.contains(&expected), "{cases:?}");
    assert!(verify_nonseparating(d, &run.tree, 1).unwrap(), "{}", run.tree);
}

#[test]
fn in_star_reroute_on_long_path() {
    // B = 0..8, path 0 → 8 → 9 → 10 → 1, out-neighbors 11, 12, 13 of 8
    let (p1, p2, p3) = (8, 9, 10);
    let mut arcs = vec![(0, p1), (p1, p2), (p2, p3), (p3, 1), (p3, 2), (p3, 3)];
    for q in 11..14 {
        arcs.extend([(p1, q), (q, p1), (q, p2), (q, p3), (p2, q), (p3, q)]);
    }
    arcs.extend([(11, 12), (12, 13), (13, 11)]);
    let d = build(14, 0..8, &arcs);
    assert_eq!(d.semi_degree().unwrap(), 4);
    let spec = ShapeSpec::out_star(3).unwrap();
    let init = embed_shape(&d, &spec, &VertexSet::new(14), &[(0, p3)])
        .unwrap()
        .unwrap();
    assert!(!verify_nonseparating(&d, &init, 1).unwrap());
    let run = run_oriented_star_from(&d, 3, init).unwrap();
    check(&d, &run, Case::T4InStarReroute);
}

#[test]
fn out_in_double_star_reroute_on_long_path() {
    // B = 0..8, path 0 → 8 → 9 → 10 → 1, out-neighbors 11..15 of 8
    let (p1, p2, p3) = (8, 9, 10);
    let mut arcs = vec![(0, p1), (p1, p2), (p2, p3), (p3, 1)];
    for q in 11..15 {
        arcs.extend([(p1, q), (q, p1), (q, p2), (q, p3), (p2, q), (p3, q)]);
    }
    arcs.extend([
        (11, 12),
        (11, 13),
        (12, 13),
        (12, 14),
        (13, 14),
        (13, 11),
        (14, 11),
        (14, 12),
    ]);
    let d = build(15, 0..8, &arcs);
    assert_eq!(d.semi_degree().unwrap(), 5);
    let init = double_star_from_arc(&d, p3, 11, ShapeKind::OutDoubleStar, 4, 1, 1, &VertexSet::new(15))
        .unwrap()
        .unwrap();
    assert!(!verify_nonseparating(&d, &init, 1).unwrap());
    let run = run_oriented_double_star_from(&d, 4, 1, 1, init).unwrap();
    check(&d, &run, Case::T4OutInDoubleReroute);
}

#[test]
fn in_double_star_on_path_of_length_three() {
    // B = 0..8, 8 is fed by B, X = 9..15 is a bidirected clique pointing back into B
    let p1 = 8;
    let mut arcs: Vec<(usize, usize)> = (0..5).map(|b| (b, p1)).collect();
    for x in 9..15 {
        arcs.push((p1, x));
        arcs.extend((0..3).map(|b| (x, b)));
        arcs.extend((9..15).filter(|&y| y != x).map(|y| (x, y)));
    }
    let d = build(15, 0..8, &arcs);
    assert_eq!(d.semi_degree().unwrap(), 5);
    let init = double_star_from_arc(&d, p1, 14, ShapeKind::OutDoubleStar, 4, 1, 1, &VertexSet::new(15))
        .unwrap()
        .unwrap();
    let run = run_oriented_double_star_from(&d, 4, 1, 1, init).unwrap();
    check(&d, &run, Case::T3InDouble);
}

#[test]
fn in_double_star_reroute_on_long_path() {
    // B = 0..10, path 0 → 10 → 11 → 12 → 13 → 1; 14 has the out-neighbors
    // 18..23, each of which points at the path and at one further vertex
    let (p1, p2, p3, p4) = (10, 11, 12, 13);
    let (q1, q2, q3, q4) = (14, 15, 16, 17);
    let ws = [18, 19, 20, 21];
    let z = 22;
    let mut arcs = vec![
        (0, p1),
        (p1, p2),
        (p2, p3),
        (p3, p4),
        (p4, 1),
        (p4, 2),
        (p4, 3),
        (p4, 4),
    ];
    arcs.extend([(p4, q2), (p4, q4), (q1, p2), (q1, p3)]);
    for q in [q1, q2, q3, q4] {
        arcs.extend([(p1, q), (p2, q), (p3, q)]);
    }
    for q in [q2, q3, q4] {
        arcs.extend([(q, p1), (q, p2), (q, p3)]);
    }
    arcs.extend([(q2, q1), (q2, q3), (q3, q1), (q3, q4), (q4, q2), (q4, q3)]);
    for w in ws.into_iter().chain([z]) {
        arcs.extend([(q1, w), (w, p1), (w, p2), (w, p3), (w, p4), (p2, w), (p3, w), (p4, w)]);
    }
    arcs.extend([(ws[0], ws[1]), (ws[1], ws[2]), (ws[2], ws[0]), (ws[3], z), (z, ws[3])]);
    let d = build(23, 0..10, &arcs);
    assert_eq!(d.semi_degree().unwrap(), 5);
    let avoid = VertexSet::from_iter_in(23, (0..11).chain([ws[0], ws[1], ws[2]]));
    let init = double_star_from_arc(&d, p4, q2, ShapeKind::OutDoubleStar, 4, 1, 1, &avoid)
        .unwrap()
        .unwrap();
    assert!(!verify_nonseparating(&d, &init, 1).unwrap());
    let run = run_oriented_double_star_from(&d, 4, 1, 1, init).unwrap();
    check(&d, &run, Case::T4InDoubleReroute);
}
