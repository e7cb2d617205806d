//! Seeded instance generators.
//!
//! Every generator is a pure function of its arguments: the same seed gives
//! the same graph on every platform (ChaCha8).

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connectivity::{components_within, is_k_connected, min_separator, strong_components};
use crate::error::{Error, Result};
use crate::graph::{Digraph, DigraphBuilder, Graph, GraphBuilder, VertexSet};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph with minimum degree at least `delta_min` and κ ≥ `k`.
///
/// A random base density is drawn first; low-degree vertices then get edges
/// to random non-neighbors, and while some minimum separator exists that is
/// too small an edge is added across it.
pub fn gen_random_graph(n: usize, delta_min: usize, k: usize, seed: u64) -> Result<Graph> {
    if n == 0 || delta_min >= n || k >= n {
        return Err(Error::Input(format!(
            "infeasible: n = {n}, δ = {delta_min}, κ = {k} (need δ < n and κ < n)"
        )));
    }
    let mut rng = rng(seed);
    let mut b = GraphBuilder::new(n);
    let p: f64 = rng.gen_range(0.0..0.35);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge_if_absent(u, v);
            }
        }
    }
    let mut deg: Vec<usize> = (0..n).map(|v| (0..n).filter(|&w| b.has_edge(v, w)).count()).collect();
    for v in 0..n {
        let mut others: Vec<_> = (0..n).filter(|&w| w != v && !b.has_edge(v, w)).collect();
        others.shuffle(&mut rng);
        for w in others {
            if deg[v] >= delta_min {
                break;
            }
            b.add_edge_if_absent(v, w);
            deg[v] += 1;
            deg[w] += 1;
        }
    }
    let mut g = b.build();
    while !is_k_connected(&g, k) {
        let s = min_separator(&g).expect("a complete graph is k-connected");
        let comps = components_within(&g, &s.complement());
        let pick = |rng: &mut ChaCha8Rng, c: &VertexSet| {
            let members = c.to_vec();
            members[rng.gen_range(0..members.len())]
        };
        let a = pick(&mut rng, &comps[0]);
        let j = rng.gen_range(1..comps.len());
        let z = pick(&mut rng, &comps[j]);
        g = g.with_edges([(a, z)]);
    }
    Ok(g)
}

/// Random strongly connected digraph with minimum semi-degree at least
/// `semidelta_min`.
pub fn gen_random_digraph(n: usize, semidelta_min: usize, seed: u64) -> Result<Digraph> {
    if n == 0 || semidelta_min >= n {
        return Err(Error::Input(format!(
            "infeasible: n = {n}, semi-degree {semidelta_min} (need semi-degree < n)"
        )));
    }
    let mut rng = rng(seed);
    let mut b = DigraphBuilder::new(n);
    let p: f64 = rng.gen_range(0.0..0.3);
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                b.add_arc_if_absent(u, v);
            }
        }
    }
    let d = b.build();
    let mut outdeg: Vec<usize> = (0..n).map(|v| d.out_degree(v)).collect();
    let mut indeg: Vec<usize> = (0..n).map(|v| d.in_degree(v)).collect();
    let mut b = DigraphBuilder::new(n);
    for (u, v) in d.arcs() {
        b.add_arc_if_absent(u, v);
    }
    for v in 0..n {
        let mut others: Vec<_> = (0..n).filter(|&w| w != v).collect();
        others.shuffle(&mut rng);
        for &w in &others {
            if outdeg[v] >= semidelta_min {
                break;
            }
            if b.add_arc_if_absent(v, w) {
                outdeg[v] += 1;
                indeg[w] += 1;
            }
        }
        others.shuffle(&mut rng);
        for &w in &others {
            if indeg[v] >= semidelta_min {
                break;
            }
            if b.add_arc_if_absent(w, v) {
                indeg[v] += 1;
                outdeg[w] += 1;
            }
        }
    }
    let mut d = b.build();
    loop {
        let order = strong_components(&d)?;
        if order.len() == 1 {
            return Ok(d);
        }
        let sink = order.last().expect("components").to_vec();
        let source = order.first().expect("components").to_vec();
        let from = sink[rng.gen_range(0..sink.len())];
        let to = source[rng.gen_range(0..source.len())];
        let mut b = DigraphBuilder::new(n);
        for (u, v) in d.arcs() {
            b.add_arc_if_absent(u, v);
        }
        b.add_arc_if_absent(from, to);
        d = b.build();
    }
}

/// Bidirected cliques of order `size` arranged in a directed ring; block i
/// sends `links` random arcs to block i + 1. Semi-degree is `size − 1`.
pub fn gen_clique_ring_digraph(blocks: usize, size: usize, links: usize, seed: u64) -> Result<Digraph> {
    if blocks < 2 || size < 1 || links < 1 || links > size * size {
        return Err(Error::Input(
            "ring needs at least two blocks and 1 ≤ links ≤ size²".into(),
        ));
    }
    let mut rng = rng(seed);
    let n = blocks * size;
    let mut b = DigraphBuilder::new(n);
    for blk in 0..blocks {
        let base = blk * size;
        for u in base..base + size {
            for v in base..base + size {
                if u != v {
                    b.add_arc_if_absent(u, v);
                }
            }
        }
        let next = ((blk + 1) % blocks) * size;
        let mut added = 0;
        while added < links {
            let u = base + rng.gen_range(0..size);
            let v = next + rng.gen_range(0..size);
            if b.add_arc_if_absent(u, v) {
                added += 1;
            }
        }
    }
    Ok(b.build())
}

/// A clique of order `core` with `blobs` cliques of order `blob` hung on
/// it. Each blob is joined completely to two distinct earlier vertices,
/// drawn from the core or from earlier blobs, so blobs can nest. The
/// result is 2-connected with minimum degree `min(core − 1, blob + 1)`
/// (attachment vertices only gain degree).
pub fn gen_blob_graph(core: usize, blob: usize, blobs: usize, seed: u64) -> Result<Graph> {
    if core < 3 || blob < 1 {
        return Err(Error::Input("blob graph needs core ≥ 3 and blob ≥ 1".into()));
    }
    let mut rng = rng(seed);
    let n = core + blob * blobs;
    let mut b = GraphBuilder::new(n);
    for u in 0..core {
        for v in u + 1..core {
            b.add_edge_if_absent(u, v);
        }
    }
    for i in 0..blobs {
        let start = core + i * blob;
        let x = rng.gen_range(0..start);
        let mut y = rng.gen_range(0..start - 1);
        if y >= x {
            y += 1;
        }
        for u in start..start + blob {
            b.add_edge_if_absent(u, x);
            b.add_edge_if_absent(u, y);
            for v in u + 1..start + blob {
                b.add_edge_if_absent(u, v);
            }
        }
    }
    Ok(b.build())
}
