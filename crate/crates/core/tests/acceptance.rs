//! Acceptance criteria, one PASS/FAIL line each. Runs as a plain binary
//! (`harness = false`) so the lines are always printed.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nonsep_core::connectivity::{
    components_within, ends, hamidoune_check, hamidoune_end_check, kappa, minimum_separators,
};
use nonsep_core::digraph_finder::{find_nonsep_oriented_double_star_traced, find_nonsep_oriented_star_traced, Run};
use nonsep_core::error::Error;
use nonsep_core::generate::{gen_blob_graph, gen_clique_ring_digraph, gen_random_digraph, gen_random_graph};
use nonsep_core::graph::{AnyGraph, Digraph, DigraphBuilder, Graph, GraphBuilder, VertexSet};
use nonsep_core::graph_finder::{find_path_shape_traced, lift_through_separator};
use nonsep_core::harness::{check_preconditions, default_k, solve};
use nonsep_core::oracle::{exists_in_family, is_k_connected_brute, verify_nonseparating};
use nonsep_core::shapes::{double_star_from_arc, Embedding, ShapeKind, ShapeSpec};

/// Per-instance wall-clock limit for the oriented-star sweep.
const STAR_LIMIT_MS: f64 = 1_000.0;
/// Per-run wall-clock limit for the path-shape sweep.
const PATH_LIMIT_MS: f64 = 10_000.0;
const DIGRAPH_SWEEP: usize = 500;
/// Clique rings added to the digraph sweeps; unlike random digraphs they
/// usually need improvement steps.
const RING_HOSTS: usize = 300;
const PATH_SWEEP: usize = 200;
const EQUIVALENCE_MAX_N: usize = 10;
const SEPARATOR_GRAPHS: usize = 100;
const ARC_TUPLES: usize = 1_000;
const LIFT_SAMPLES: usize = 200;
const KAPPA_MAX_N: usize = 8;

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: String) -> Verdict {
    Verdict { ok, detail }
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn in_family(tree: &Embedding, spec: &ShapeSpec) -> bool {
    spec.family().contains(&tree.shape)
}

fn b_sizes_increase(run: &Run, n: usize) -> bool {
    run.trace.windows(2).all(|w| w[0].b_size < w[1].b_size) && run.iterations() <= n
}

fn digraph_hosts(seed: u64, m_base: usize) -> Vec<(usize, Digraph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for i in 0..DIGRAPH_SWEEP {
        let m = m_base + i % 3;
        let n = rng.gen_range(m + 2..=30);
        out.push((
            m,
            gen_random_digraph(n, m + 1, seed * 10_000 + i as u64).expect("feasible"),
        ));
    }
    for i in 0..RING_HOSTS {
        let m = m_base + i % 3;
        let size = m + 2 + i % 2;
        let ring = gen_clique_ring_digraph(2 + i % 4, size, 1 + i % 3, seed * 10_000 + i as u64).expect("feasible");
        out.push((m, ring));
    }
    out
}

fn oriented_star_sweep() -> Verdict {
    let hosts = digraph_hosts(1, 3);
    let (mut found, mut contradictions, mut looped, mut monotone, mut slowest) = (0, 0, 0, 0, 0.0f64);
    let mut failures = Vec::new();
    for (i, (m, d)) in hosts.iter().enumerate() {
        let m = *m;
        let start = Instant::now();
        let result = find_nonsep_oriented_star_traced(d, m);
        slowest = slowest.max(ms(start));
        match result {
            Ok(run)
                if in_family(&run.tree, &ShapeSpec::out_star(m).unwrap())
                    && verify_nonseparating(d, &run.tree, 1).unwrap_or(false) =>
            {
                found += 1;
                if run.iterations() > 0 {
                    looped += 1;
                    monotone += usize::from(b_sizes_increase(&run, d.order()));
                }
            }
            Err(Error::Contradiction(_)) => contradictions += 1,
            other => failures.push(format!("#{i}: {other:?}")),
        }
    }
    verdict(
        found == hosts.len() && contradictions == 0 && monotone == looped && slowest < STAR_LIMIT_MS,
        format!(
            "{found}/{} verified ({DIGRAPH_SWEEP} random, {RING_HOSTS} clique rings), {contradictions} contradictions, {monotone}/{looped} looping runs grow |B| strictly, slowest {slowest:.2} ms (limit {STAR_LIMIT_MS} ms){}",
            hosts.len(),
            failures.first().map(|f| format!("; first failure {f}")).unwrap_or_default()
        ),
    )
}

fn oriented_double_star_sweep() -> Verdict {
    let hosts = digraph_hosts(2, 4);
    let (mut runs, mut found, mut looped, mut monotone) = (0, 0, 0, 0);
    for (m, d) in &hosts {
        let m = *m;
        for r in 1..=m - 3 {
            let s = m - 2 - r;
            runs += 1;
            let spec = ShapeSpec::oriented_double_star(ShapeKind::OutDoubleStar, m, r, s).unwrap();
            if let Ok(run) = find_nonsep_oriented_double_star_traced(d, m, r, s) {
                if in_family(&run.tree, &spec) && verify_nonseparating(d, &run.tree, 1).unwrap_or(false) {
                    found += 1;
                }
                if run.iterations() > 0 {
                    looped += 1;
                    monotone += usize::from(b_sizes_increase(&run, d.order()));
                }
            }
        }
    }
    verdict(
        found == runs && monotone == looped,
        format!(
            "{found}/{runs} runs verified over {} digraphs ({DIGRAPH_SWEEP} random, {RING_HOSTS} clique rings); {monotone}/{looped} looping runs grow |B| strictly within n steps",
            hosts.len()
        ),
    )
}

fn path_shapes(m: usize) -> Vec<ShapeSpec> {
    let mut out = BTreeSet::new();
    for r in 1..=m - 3 {
        out.insert(ShapeSpec::path_star(r, m).unwrap().to_string());
    }
    for r in 1..=m.saturating_sub(4) {
        for a in 0..m {
            for second in [false, true] {
                if let Ok(spec) = ShapeSpec::path_double_star(second, r, m, a) {
                    out.insert(spec.to_string());
                }
            }
        }
    }
    out.iter().map(|s| s.parse().unwrap()).collect()
}

fn path_shape_sweep() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x33);
    let (mut runs, mut found, mut slowest) = (0, 0, 0.0f64);
    let mut failures = Vec::new();
    for i in 0..PATH_SWEEP {
        let m = 4 + i % 3;
        let n = rng.gen_range(m + 3..=25);
        let g = gen_random_graph(n, m + 2, 2, 3_000 + i as u64).expect("feasible");
        for spec in path_shapes(m) {
            runs += 1;
            let start = Instant::now();
            let result = find_path_shape_traced(&g, &spec);
            slowest = slowest.max(ms(start));
            match result {
                Ok(run) if in_family(&run.tree, &spec) && verify_nonseparating(&g, &run.tree, 2).unwrap_or(false) => {
                    found += 1
                }
                other => failures.push(format!("#{i} {spec}: {other:?}")),
            }
        }
    }
    verdict(
        found == runs && slowest < PATH_LIMIT_MS,
        format!(
            "{found}/{runs} runs verified over {PATH_SWEEP} graphs, slowest {slowest:.2} ms (limit {PATH_LIMIT_MS} ms){}",
            failures.first().map(|f| format!("; first failure {f}")).unwrap_or_default()
        ),
    )
}

fn directed_circulant(n: usize, jumps: &[usize]) -> Digraph {
    let mut b = DigraphBuilder::new(n);
    for v in 0..n {
        for &j in jumps {
            b.add_arc_if_absent(v, (v + j) % n);
        }
    }
    b.build()
}

fn small_corpus() -> Vec<AnyGraph> {
    let mut hosts: Vec<AnyGraph> = Vec::new();
    for n in 5..=EQUIVALENCE_MAX_N {
        hosts.push(Graph::complete(n).into());
        hosts.push(Digraph::complete(n).into());
        hosts.push(Graph::wheel(n - 1).into());
        for jumps in (1..=n / 2).powerset().filter(|j| j.len() >= 2) {
            hosts.push(Graph::circulant(n, &jumps).into());
        }
        for jumps in (1..n).combinations(4) {
            hosts.push(directed_circulant(n, &jumps).into());
        }
    }
    hosts.push(Graph::petersen().into());
    for a in 3..=5 {
        for b in a..=5 {
            hosts.push(Graph::complete_bipartite(a, b).into());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x44);
    for seed in 0..60u64 {
        let n = rng.gen_range(7..=EQUIVALENCE_MAX_N);
        let delta = rng.gen_range(4..n);
        hosts.push(gen_random_graph(n, delta, 2, 4_000 + seed).unwrap().into());
        hosts.push(gen_random_digraph(n, delta, 5_000 + seed).unwrap().into());
    }
    hosts
}

fn oracle_equivalence() -> Verdict {
    let shapes: Vec<ShapeSpec> = [
        "star:3",
        "star:4",
        "star:5",
        "path:3",
        "path:4",
        "dstar:4:1",
        "dstar:5:1",
        "dstar:6:2",
        "ps:1:4",
        "ps:1:5",
        "ps:2:5",
        "ps:3:6",
        "pds1:1:5",
        "pds1:1:6",
        "pds2:1:6",
        "pds1:2:6",
        "os:3",
        "is:4",
        "os:5",
        "ods:4:1:1",
        "ids:4:1:1",
        "oids:4:1:1",
        "ods:5:2:1",
        "oids:5:1:2",
        "ids:6:2:2",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect();
    let hosts = small_corpus();
    let (mut eligible, mut agree) = (0, 0);
    let mut mismatches = Vec::new();
    for (h, host) in hosts.iter().enumerate() {
        for spec in &shapes {
            let k = default_k(spec);
            if check_preconditions(host, spec, k).is_err() {
                continue;
            }
            eligible += 1;
            let finder = solve(host, spec, Some(k))
                .map(|s| verify_nonseparating(host, &s.tree, k).unwrap_or(false))
                .unwrap_or(false);
            let oracle = exists_in_family(host, spec, k).expect("oracle runs").is_some();
            if finder == oracle {
                agree += 1;
            } else {
                mismatches.push(format!("host #{h} {spec}: finder {finder}, oracle {oracle}"));
            }
        }
    }
    verdict(
        eligible > 0 && agree == eligible,
        format!(
            "{agree}/{eligible} eligible (host, shape) pairs agree over {} hosts with n ≤ {EQUIVALENCE_MAX_N}{}",
            hosts.len(),
            mismatches
                .first()
                .map(|f| format!("; first mismatch {f}"))
                .unwrap_or_default()
        ),
    )
}

fn two_connected_with_kappa_two(count: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x55);
    let mut out = Vec::new();
    let mut seed = 6_000u64;
    while out.len() < count {
        seed += 1;
        let g = if seed.is_multiple_of(2) {
            let core = rng.gen_range(4..=7);
            gen_blob_graph(core, rng.gen_range(1..=4), rng.gen_range(1..=4), seed).unwrap()
        } else {
            let n = rng.gen_range(7..=16);
            gen_random_graph(n, rng.gen_range(2..=4), 2, seed).unwrap()
        };
        if kappa(&g).unwrap() == 2 {
            out.push(g);
        }
    }
    out
}

fn separator_invariants() -> Verdict {
    let graphs = two_connected_with_kappa_two(SEPARATOR_GRAPHS);
    let (mut checks, mut passed, mut end_checks, mut end_passed) = (0, 0, 0, 0);
    for g in &graphs {
        let n = g.order();
        for s in minimum_separators(g).unwrap() {
            let comps = components_within(g, &s.complement());
            for pick in (0..comps.len())
                .powerset()
                .filter(|p| !p.is_empty() && p.len() < comps.len())
            {
                let mut f = VertexSet::new(n);
                for &i in &pick {
                    f.union_with(&comps[i]);
                }
                checks += 1;
                if hamidoune_check(g, &s, &f, 2).unwrap_or(false) {
                    passed += 1;
                }
            }
        }
        for end in ends(g).unwrap().iter().filter(|e| e.fragment.len() >= 2) {
            end_checks += 1;
            if hamidoune_end_check(g, &end.separator, &end.fragment).unwrap_or(false) {
                end_passed += 1;
            }
        }
    }
    verdict(
        checks > 0 && passed == checks && end_passed == end_checks,
        format!(
            "{passed}/{checks} (separator, fragment) pairs 2-connected, {end_passed}/{end_checks} ends 3-connected, over {} graphs with κ = 2",
            graphs.len()
        ),
    )
}

fn random_digraph(rng: &mut ChaCha8Rng, n: usize) -> Digraph {
    let p: f64 = rng.gen_range(0.2..0.7);
    let mut b = DigraphBuilder::new(n);
    b.add_arc_if_absent(0, 1);
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                b.add_arc_if_absent(u, v);
            }
        }
    }
    b.build()
}

fn arc_builder_property() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x66);
    let kinds = [
        ShapeKind::OutDoubleStar,
        ShapeKind::InDoubleStar,
        ShapeKind::OutInDoubleStar,
    ];
    let (mut held, mut built, mut agree) = (0, 0, 0);
    for _ in 0..ARC_TUPLES {
        let n = rng.gen_range(6..=14);
        let d = random_digraph(&mut rng, n);
        let arcs: Vec<_> = d.arcs().collect();
        let (u, v) = arcs[rng.gen_range(0..arcs.len())];
        let m = rng.gen_range(4..=8);
        let r = rng.gen_range(1..=m - 3);
        let s = m - 2 - r;
        let kind = kinds[rng.gen_range(0..3)];
        let forbidden = VertexSet::from_iter_in(n, (0..n).filter(|&x| x != u && x != v && rng.gen_bool(0.2)));
        let (nu, nv) = match kind {
            ShapeKind::OutDoubleStar => (d.out_neighbors(u), d.out_neighbors(v)),
            ShapeKind::InDoubleStar => (d.in_neighbors(u), d.in_neighbors(v)),
            _ => (d.out_neighbors(u), d.in_neighbors(v)),
        };
        let free = |xs: &[usize]| -> BTreeSet<usize> {
            xs.iter()
                .copied()
                .filter(|&x| x != u && x != v && !forbidden.contains(x))
                .collect()
        };
        let (fu, fv) = (free(nu), free(nv));
        let hypotheses = fu.len() >= r && fv.len() >= s && fu.union(&fv).count() >= m - 2;
        let result = double_star_from_arc(&d, u, v, kind, m, r, s, &forbidden).expect("arc exists");
        let valid = result.as_ref().is_some_and(|e| {
            e.validate(&d).is_ok()
                && e.shape == ShapeSpec::oriented_double_star(kind, m, r, s).unwrap()
                && e.map[..2] == [u, v]
                && e.map.iter().all(|&x| !forbidden.contains(x))
        });
        held += usize::from(hypotheses);
        built += usize::from(valid);
        agree += usize::from(hypotheses == valid);
    }
    verdict(
        agree == ARC_TUPLES && held > 0,
        format!("{agree}/{ARC_TUPLES} tuples agree (hypotheses hold on {held}, valid double-star built on {built})"),
    )
}

fn lift_soundness() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x77);
    let (mut samples, mut confirmed, mut attempts) = (0, 0, 0);
    let mut seed = 7_000u64;
    while samples < LIFT_SAMPLES && attempts < 50 * LIFT_SAMPLES {
        seed += 1;
        let m = rng.gen_range(2..=4);
        let g = gen_blob_graph(
            m + 3 + rng.gen_range(0..3),
            m + 1 + rng.gen_range(0..2),
            rng.gen_range(1..=3),
            seed,
        )
        .unwrap();
        let n = g.order();
        let seps = minimum_separators(&g).unwrap();
        let s = &seps[rng.gen_range(0..seps.len())];
        let comps = components_within(&g, &s.complement());
        for f in &comps {
            attempts += 1;
            let outside: Vec<usize> = s.union(f).complement().to_vec();
            let size = rng.gen_range(1..=m.min(outside.len()));
            let w = VertexSet::from_iter_in(n, outside.choose_multiple_sorted(&mut rng, size));
            if let Ok(true) = lift_through_separator(&g, s, f, &w, 2, m) {
                samples += 1;
                let alive: Vec<bool> = (0..n).map(|x| !w.contains(x)).collect();
                if is_k_connected_brute(&g, &alive, 2) {
                    confirmed += 1;
                }
            }
        }
    }
    verdict(
        samples >= LIFT_SAMPLES && confirmed == samples,
        format!("{confirmed}/{samples} lifted samples have κ(G − W) ≥ 2 by subset removal ({attempts} attempts)"),
    )
}

trait ChooseSorted {
    fn choose_multiple_sorted(&self, rng: &mut ChaCha8Rng, k: usize) -> Vec<usize>;
}

impl ChooseSorted for Vec<usize> {
    fn choose_multiple_sorted(&self, rng: &mut ChaCha8Rng, k: usize) -> Vec<usize> {
        use rand::seq::SliceRandom;
        let mut picked: Vec<usize> = self.choose_multiple(rng, k).copied().collect();
        picked.sort_unstable();
        picked
    }
}

fn kappa_brute(g: &Graph) -> usize {
    let alive = vec![true; g.order()];
    (1..g.order())
        .take_while(|&k| is_k_connected_brute(g, &alive, k))
        .count()
}

fn kappa_kernel() -> Verdict {
    let mut graphs = Vec::new();
    for n in 1..=KAPPA_MAX_N {
        graphs.push(Graph::complete(n));
        graphs.push(Graph::path(n));
    }
    for n in 3..=KAPPA_MAX_N {
        graphs.push(Graph::cycle(n));
    }
    for rim in 3..KAPPA_MAX_N {
        graphs.push(Graph::wheel(rim));
    }
    for a in 1..KAPPA_MAX_N {
        for b in a..=KAPPA_MAX_N - a {
            graphs.push(Graph::complete_bipartite(a, b));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x88);
    for _ in 0..300 {
        let n = rng.gen_range(2..=KAPPA_MAX_N);
        let p: f64 = rng.gen_range(0.2..0.95);
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    b.add_edge_if_absent(u, v);
                }
            }
        }
        graphs.push(b.build());
    }
    let mismatches: Vec<String> = graphs
        .iter()
        .filter_map(|g| {
            let (fast, slow) = (kappa(g).unwrap(), kappa_brute(g));
            (fast != slow).then(|| format!("{g:?}: {fast} vs {slow}"))
        })
        .collect();
    verdict(
        mismatches.is_empty(),
        format!(
            "{}/{} graphs with n ≤ {KAPPA_MAX_N} agree{}",
            graphs.len() - mismatches.len(),
            graphs.len(),
            mismatches
                .first()
                .map(|f| format!("; first mismatch {f}"))
                .unwrap_or_default()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("oriented-star sweep", oriented_star_sweep),
        ("oriented double-star sweep", oriented_double_star_sweep),
        ("path-star and path-double-star sweep", path_shape_sweep),
        ("finder/oracle equivalence", oracle_equivalence),
        ("separator and end connectivity", separator_invariants),
        ("double-star from arc", arc_builder_property),
        ("lifting through a separator", lift_soundness),
        ("connectivity kernel", kappa_kernel),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = check();
        failed += usize::from(!v.ok);
        println!(
            "{} {}. {name}: {} [{:.1} s]",
            if v.ok { "PASS" } else { "FAIL" },
            i + 1,
            v.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {}/{} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
