//! Nonseparating trees in 2-connected graphs.
//!
//! Stars, double-stars and paths come from bounded backtracking searches.
//! Path-stars and path-double-stars are assembled from those: take a
//! nonseparating head (star or double-star of order m − r) and hang a
//! nonseparating path off one of its leaves. When the remainder is only
//! 2-connected the path is grown inside an end of the remainder, and the
//! result is lifted back through the end's separator. If no end touches
//! the head, the whole construction moves into the completed end, where
//! the separator pair becomes a clique the tree has to avoid.

use std::cmp::Reverse;
use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::connectivity::{check_fragment, completion, ends, is_k_connected, is_k_connected_without, kpair_check};
use crate::error::{Error, Result, Witness};
use crate::graph::{AnyGraph, Graph, Relabel, VertexId, VertexSet};
use crate::shapes::{for_each_embedding, Embedding, ShapeKind, ShapeSpec};

/// Copies examined by one search before it gives up.
pub const SEARCH_BUDGET: usize = 2_000_000;

/// A graph with a k-clique `c` whose vertices outside `c` have degree at
/// least ⌊3k/2⌋ + m − 1, with κ ≥ k (or κ ≥ k + 1 when `plus`).
#[derive(Clone, Debug)]
pub struct KPair {
    pub g: Graph,
    pub c: VertexSet,
    pub k: usize,
    pub m: usize,
    pub plus: bool,
}

impl KPair {
    pub fn new(g: Graph, c: VertexSet, k: usize, m: usize, plus: bool) -> Result<Self> {
        if !kpair_check(&g, &c, k, m, plus) {
            return Err(Error::Precondition(format!(
                "({}, {:?}) is not a pair for k = {k}, m = {m}{}",
                g.order(),
                c,
                if plus { " with κ ≥ k + 1" } else { "" }
            )));
        }
        Ok(Self { g, c, k, m, plus })
    }
}

fn witness(g: &Graph, message: impl Into<String>, detail: impl Into<String>) -> Box<Witness> {
    Box::new(Witness::new(message, AnyGraph::from(g.clone()).to_edge_list(), detail))
}

fn contradiction(g: &Graph, message: impl Into<String>, detail: impl Into<String>) -> Error {
    Error::Contradiction(witness(g, message, detail))
}

fn not_found(g: &Graph, message: impl Into<String>, detail: impl Into<String>) -> Error {
    Error::NotFound(witness(g, message, detail))
}

/// Vertices outside `forbidden` by decreasing degree, then id.
fn roots_by_degree(g: &Graph, forbidden: &VertexSet) -> Vec<VertexId> {
    let mut roots: Vec<_> = (0..g.order()).filter(|&v| !forbidden.contains(v)).collect();
    roots.sort_by_key(|&v| (Reverse(g.degree(v)), v));
    roots
}

/// First copy of `spec` avoiding `forbidden`, with shape vertex 0 tried at
/// `roots` in order, whose removal leaves `g` k-connected.
fn first_nonseparating(
    g: &Graph,
    spec: &ShapeSpec,
    forbidden: &VertexSet,
    roots: &[VertexId],
    k: usize,
) -> Result<Option<Embedding>> {
    let n = g.order();
    let mut examined = 0usize;
    let mut removed = VertexSet::new(n);
    for &root in roots {
        let mut found = None;
        let flow = for_each_embedding(g, spec, forbidden, &[(0, root)], |map| {
            examined += 1;
            if examined > SEARCH_BUDGET {
                return ControlFlow::Break(());
            }
            for &v in map {
                removed.insert(v);
            }
            let ok = is_k_connected_without(g, &removed, k);
            for &v in map {
                removed.remove(v);
            }
            if ok {
                found = Some(map.to_vec());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?;
        if let Some(map) = found {
            return Ok(Some(Embedding::new(*spec, map)));
        }
        if flow.is_break() {
            return Err(not_found(
                g,
                format!("search for {spec} exceeded {SEARCH_BUDGET} copies"),
                format!("k = {k}, forbidden {forbidden:?}"),
            ));
        }
    }
    Ok(None)
}

fn require_two_connected(g: &Graph, min_degree: usize) -> Result<()> {
    if !is_k_connected(g, 2) {
        return Err(Error::Precondition("graph is not 2-connected".into()));
    }
    let delta = g.min_degree()?;
    if delta < min_degree {
        return Err(Error::Precondition(format!(
            "minimum degree {delta} is below {min_degree}"
        )));
    }
    Ok(())
}

fn verified(g: &Graph, t: Embedding, k: usize) -> Result<Embedding> {
    t.validate(g)?;
    if !is_k_connected_without(g, &t.vertex_set(g.order()), k) {
        return Err(contradiction(
            g,
            format!("returned tree separates: {t}"),
            format!("k = {k}"),
        ));
    }
    Ok(t)
}

/// Star of order `m` whose removal leaves `g` 2-connected, for a
/// 2-connected `g` with minimum degree at least m + 2.
pub fn find_nonsep_star_k2(g: &Graph, m: usize) -> Result<Embedding> {
    let spec = ShapeSpec::star(m)?;
    require_two_connected(g, m + 2)?;
    let none = VertexSet::new(g.order());
    first_nonseparating(g, &spec, &none, &roots_by_degree(g, &none), 2)?
        .ok_or_else(|| not_found(g, format!("no nonseparating {spec}"), "2-connected, δ ≥ m + 2"))
}

/// Double-star of order `m` with `a` leaves at the first center, whose
/// removal leaves `g` 2-connected; same preconditions as the star.
pub fn find_nonsep_double_star_k2(g: &Graph, m: usize, a: usize) -> Result<Embedding> {
    let spec = ShapeSpec::double_star(m, a)?;
    require_two_connected(g, m + 2)?;
    let none = VertexSet::new(g.order());
    first_nonseparating(g, &spec, &none, &roots_by_degree(g, &none), 2)?
        .ok_or_else(|| not_found(g, format!("no nonseparating {spec}"), "2-connected, δ ≥ m + 2"))
}

/// Path of order `m` whose removal leaves `g` k-connected, for a
/// k-connected `g` with minimum degree at least ⌊3k/2⌋ + m − 1.
pub fn find_nonsep_path(g: &Graph, m: usize, k: usize) -> Result<Embedding> {
    let spec = ShapeSpec::path(m)?;
    if k == 0 {
        return Err(Error::Input("k must be at least 1".into()));
    }
    if !is_k_connected(g, k) {
        return Err(Error::Precondition(format!("graph is not {k}-connected")));
    }
    let need = 3 * k / 2 + m - 1;
    let delta = g.min_degree()?;
    if delta < need {
        return Err(Error::Precondition(format!("minimum degree {delta} is below {need}")));
    }
    let none = VertexSet::new(g.order());
    first_nonseparating(g, &spec, &none, &roots_by_degree(g, &none), k)?
        .ok_or_else(|| not_found(g, format!("no nonseparating {spec}"), format!("k = {k}")))
}

/// Path of order `r` starting at `p` inside `G − C`, leaving the pair's
/// graph k-connected. The pair must satisfy the plus condition for `r`.
pub fn find_rooted_nonsep_path(pair: &KPair, p: VertexId, r: usize) -> Result<Embedding> {
    let g = &pair.g;
    if !kpair_check(g, &pair.c, pair.k, r, true) {
        return Err(Error::Precondition(format!(
            "pair does not satisfy the plus condition for paths of order {r}"
        )));
    }
    if p >= g.order() || pair.c.contains(p) {
        return Err(Error::Input(format!("start {p} must be a vertex outside the clique")));
    }
    let spec = ShapeSpec::path(r)?;
    first_nonseparating(g, &spec, &pair.c, &[p], pair.k)?.ok_or_else(|| {
        not_found(
            g,
            format!("no nonseparating path of order {r} from {p}"),
            format!("clique {:?}, k = {}", pair.c, pair.k),
        )
    })
}

/// Path of order `r` starting at `p` whose removal leaves `g` k-connected,
/// for a (k+1)-connected `g` with minimum degree at least ⌊3k/2⌋ + r − 1.
pub fn find_rooted_nonsep_path_plain(g: &Graph, p: VertexId, r: usize, k: usize) -> Result<Embedding> {
    let spec = ShapeSpec::path(r)?;
    if p >= g.order() {
        return Err(Error::Input(format!("start {p} is not a vertex")));
    }
    if !is_k_connected(g, k + 1) {
        return Err(Error::Precondition(format!("graph is not {}-connected", k + 1)));
    }
    let need = 3 * k / 2 + r - 1;
    let delta = g.min_degree()?;
    if delta < need {
        return Err(Error::Precondition(format!("minimum degree {delta} is below {need}")));
    }
    let none = VertexSet::new(g.order());
    first_nonseparating(g, &spec, &none, &[p], k)?.ok_or_else(|| {
        not_found(
            g,
            format!("no nonseparating path of order {r} from {p}"),
            format!("k = {k}"),
        )
    })
}

/// Path, star or double-star inside `G − C` whose removal leaves the
/// pair's graph k-connected (stars and double-stars need k = 2).
pub fn find_nonsep_shape_in_pair(pair: &KPair, spec: &ShapeSpec) -> Result<Embedding> {
    spec.validate()?;
    let g = &pair.g;
    match spec.kind {
        ShapeKind::Path => {}
        ShapeKind::Star | ShapeKind::DoubleStar if pair.k == 2 => {}
        ShapeKind::Star | ShapeKind::DoubleStar => return Err(Error::Input(format!("{spec} in a pair needs k = 2"))),
        _ => return Err(Error::Input(format!("{spec} is not a path, star or double-star"))),
    }
    if !kpair_check(g, &pair.c, pair.k, spec.m, false) {
        return Err(Error::Precondition(format!("pair does not hold for m = {}", spec.m)));
    }
    first_nonseparating(g, spec, &pair.c, &roots_by_degree(g, &pair.c), pair.k)?.ok_or_else(|| {
        not_found(
            g,
            format!("no nonseparating {spec} avoiding the clique"),
            format!("clique {:?}", pair.c),
        )
    })
}

fn check_lift_input(g: &Graph, s: &VertexSet, f: &VertexSet, w: &VertexSet, k: usize, m: usize) -> Result<()> {
    let n = g.order();
    if s.universe() != n || f.universe() != n || w.universe() != n {
        return Err(Error::Input("vertex sets over the wrong universe".into()));
    }
    if !is_k_connected(g, k) {
        return Err(Error::Precondition(format!("graph is not {k}-connected")));
    }
    if s.len() != k {
        return Err(Error::Precondition(format!("|S| = {} but k = {k}", s.len())));
    }
    let complement = check_fragment(g, s, f).map_err(|e| Error::Precondition(e.to_string()))?;
    if !w.is_subset(&complement) {
        return Err(Error::Precondition("W must lie outside S ∪ F".into()));
    }
    if w.len() > m {
        return Err(Error::Precondition(format!("|W| = {} exceeds m = {m}", w.len())));
    }
    Ok(())
}

/// κ(G[S] − (F ∪ W)) ≥ k, which implies κ(G − W) ≥ k when S is a k-separator,
/// F a fragment to S, W ⊆ G − (S ∪ F) with |W| ≤ m and δ(G) ≥ ⌊3k/2⌋ + m − 1.
/// The hypotheses are checked; the return value is the lifted claim.
pub fn lift_through_separator(
    g: &Graph,
    s: &VertexSet,
    f: &VertexSet,
    w: &VertexSet,
    k: usize,
    m: usize,
) -> Result<bool> {
    check_lift_input(g, s, f, w, k, m)?;
    let need = 3 * k / 2 + m;
    let delta = g.min_degree()?;
    if delta + 1 < need {
        return Err(Error::Precondition(format!(
            "minimum degree {delta} is below ⌊3k/2⌋ + m − 1"
        )));
    }
    Ok(is_k_connected_without(&completion(g, s), &f.union(w), k))
}

/// Same lift inside a pair: the degree bound is only required outside the
/// clique, which must lie in F ∪ S.
pub fn lift_through_separator_in_pair(pair: &KPair, s: &VertexSet, f: &VertexSet, w: &VertexSet) -> Result<bool> {
    let g = &pair.g;
    if !kpair_check(g, &pair.c, pair.k, pair.m, false) {
        return Err(Error::Precondition("pair condition fails".into()));
    }
    check_lift_input(g, s, f, w, pair.k, pair.m)?;
    if !pair.c.is_subset(&f.union(s)) {
        return Err(Error::Precondition("clique must lie in F ∪ S".into()));
    }
    Ok(is_k_connected_without(&completion(g, s), &f.union(w), pair.k))
}

/// Branches of the path-shape construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PathCase {
    /// The remainder after the head is 3-connected; the path hangs anywhere.
    HeadThreeConnected,
    /// A head leaf has a neighbor in an end of the remainder.
    LeafMeetsEnd,
    /// Only a center meets the end: a leaf is traded for a longer path.
    CenterMeetsEnd,
    /// No end meets the head: continue inside the completed end.
    Descend,
}

impl fmt::Display for PathCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathStep {
    pub case: PathCase,
    pub depth: usize,
    /// Order of the graph worked on at this depth.
    pub order: usize,
}

#[derive(Clone, Debug)]
pub struct PathRun {
    pub tree: Embedding,
    pub trace: Vec<PathStep>,
}

/// Head positions of leaves and centers, in the order they are tried.
struct HeadLayout {
    leaves: Vec<usize>,
    centers: Vec<usize>,
    /// Leaf positions of each center, keyed by center position.
    leaves_of: Vec<(usize, Vec<usize>)>,
}

fn head_spec(target: &ShapeSpec) -> Result<ShapeSpec> {
    let q = target.m - target.r;
    match target.kind {
        ShapeKind::PathStar => ShapeSpec::star(q),
        ShapeKind::PathDoubleStar1 | ShapeKind::PathDoubleStar2 => ShapeSpec::double_star(q, target.s),
        _ => Err(Error::Input(format!("{target} is not a path-star or path-double-star"))),
    }
}

fn head_layout(target: &ShapeSpec) -> HeadLayout {
    let q = target.m - target.r;
    if target.kind == ShapeKind::PathStar {
        let leaves: Vec<usize> = (1..q).collect();
        return HeadLayout {
            centers: vec![0],
            leaves_of: vec![(0, leaves.clone())],
            leaves,
        };
    }
    let big: Vec<usize> = (2..2 + target.s).collect();
    let small: Vec<usize> = (2 + target.s..q).collect();
    let (first, second) = if target.kind == ShapeKind::PathDoubleStar2 {
        ((1, small), (0, big))
    } else {
        ((0, big), (1, small))
    };
    HeadLayout {
        leaves: first.1.iter().chain(&second.1).copied().collect(),
        centers: vec![first.0, second.0],
        leaves_of: vec![first, second],
    }
}

/// The path shape made of `head` with `tail` hanging off head position `at`.
fn assemble(target: &ShapeSpec, head: &[VertexId], at: usize, tail: &[VertexId]) -> Result<Embedding> {
    let (m, r) = (target.m, target.r);
    let q = head.len();
    let mut map = Vec::with_capacity(m);
    let spec = if target.kind == ShapeKind::PathStar {
        map.push(head[0]);
        map.push(head[at]);
        map.extend((1..q).filter(|&i| i != at).map(|i| head[i]));
        ShapeSpec::path_star(r, m)?
    } else {
        let s = target.s;
        let big = 2..2 + s;
        let small = 2 + s..q;
        let balanced = 2 * s + 2 == q;
        if big.contains(&at) {
            map.extend([head[0], head[1], head[at]]);
            map.extend(big.filter(|&i| i != at).map(|i| head[i]));
            map.extend(small.map(|i| head[i]));
            ShapeSpec::path_double_star(false, r, m, s)?
        } else if balanced {
            map.extend([head[1], head[0], head[at]]);
            map.extend(small.filter(|&i| i != at).map(|i| head[i]));
            map.extend(big.map(|i| head[i]));
            ShapeSpec::path_double_star(false, r, m, s)?
        } else {
            map.extend([head[0], head[1]]);
            map.extend(big.map(|i| head[i]));
            map.push(head[at]);
            map.extend(small.filter(|&i| i != at).map(|i| head[i]));
            ShapeSpec::path_double_star(true, r, m, s)?
        }
    };
    map.extend_from_slice(tail);
    Ok(Embedding::new(spec, map))
}

/// Smallest neighbor of `v` inside `within`.
fn neighbor_in(g: &Graph, v: VertexId, within: &VertexSet) -> Option<VertexId> {
    g.neighbors(v).iter().copied().find(|&w| within.contains(w))
}

/// `completion(g, s) − drop`, with `s` carried into the new coordinates.
fn completed_part(g: &Graph, s: &VertexSet, drop: &VertexSet) -> Result<(Graph, Relabel, VertexSet)> {
    let (h, map) = completion(g, s).delete(drop)?;
    let c = map.project_set(s);
    Ok((h, map, c))
}

/// The clique-avoiding pair on a subgraph, or a contradiction when the
/// bookkeeping that should guarantee it fails.
fn pair_or_contradiction(g: Graph, c: VertexSet, m: usize, plus: bool, what: &str) -> Result<KPair> {
    if kpair_check(&g, &c, 2, m, plus) {
        return Ok(KPair { g, c, k: 2, m, plus });
    }
    Err(contradiction(
        &g,
        format!("{what}: pair condition fails"),
        format!("clique {c:?}, m = {m}, plus = {plus}"),
    ))
}

/// Lifts a set `w ⊆ G − (S ∪ F)` of `g`, or reports the failed lift.
fn lift_or_contradiction(
    g: &Graph,
    clique: Option<&VertexSet>,
    s: &VertexSet,
    f: &VertexSet,
    w: &VertexSet,
    what: &str,
) -> Result<()> {
    let ok = match clique {
        None => lift_through_separator(g, s, f, w, 2, w.len())?,
        Some(c) => {
            let pair = pair_or_contradiction(g.clone(), c.clone(), w.len(), false, what)?;
            lift_through_separator_in_pair(&pair, s, f, w)?
        }
    };
    if ok {
        Ok(())
    } else {
        Err(contradiction(
            g,
            format!("{what}: completed end separates"),
            format!("S {s:?}, W {w:?}"),
        ))
    }
}

struct Grower<'a> {
    target: ShapeSpec,
    guard: usize,
    trace: &'a mut Vec<PathStep>,
}

impl Grower<'_> {
    /// A copy of the target inside `g − clique` whose removal leaves `g`
    /// 2-connected. At the top level `g` is 2-connected with δ ≥ m + 2; at
    /// deeper levels (g, clique) is a pair for m.
    fn grow(&mut self, g: &Graph, clique: Option<&VertexSet>, depth: usize) -> Result<Embedding> {
        if depth > self.guard {
            return Err(contradiction(
                g,
                "recursion depth guard exceeded",
                format!("depth {depth}"),
            ));
        }
        let n = g.order();
        let target = self.target;
        let r = target.r;
        let avoid = clique.cloned().unwrap_or_else(|| VertexSet::new(n));
        let hspec = head_spec(&target)?;
        let layout = head_layout(&target);
        let head = match clique {
            None => first_nonseparating(g, &hspec, &avoid, &roots_by_degree(g, &avoid), 2)?,
            Some(c) => {
                let pair = pair_or_contradiction(g.clone(), c.clone(), hspec.m, false, "head")?;
                Some(find_nonsep_shape_in_pair(&pair, &hspec)?)
            }
        }
        .ok_or_else(|| not_found(g, format!("no nonseparating head {hspec}"), format!("depth {depth}")))?;
        let head_set = head.vertex_set(n);
        let (g1, map1) = g.delete(&head_set)?;
        let avoid1 = map1.project_set(&avoid);
        let step = |case| PathStep { case, depth, order: n };

        if is_k_connected(&g1, 3) {
            self.trace.push(step(PathCase::HeadThreeConnected));
            let at = layout.leaves[0];
            let allowed = head_set.union(&avoid).complement();
            let w = neighbor_in(g, head.map[at], &allowed)
                .ok_or_else(|| contradiction(g, "head leaf has no neighbor to extend", format!("{head}")))?;
            let w1 = map1.from_host[w].expect("w survives");
            let path = match clique {
                None => find_rooted_nonsep_path_plain(&g1, w1, r, 2)?,
                Some(_) => {
                    let pair = pair_or_contradiction(g1.clone(), avoid1.clone(), r, true, "extension")?;
                    find_rooted_nonsep_path(&pair, w1, r)?
                }
            };
            let tail: Vec<_> = path.map.iter().map(|&v| map1.lift(v)).collect();
            return assemble(&target, &head.map, at, &tail);
        }

        let ends: Vec<_> = ends(&g1)?
            .into_iter()
            .filter(|e| e.fragment.is_disjoint(&avoid1))
            .collect();
        if ends.is_empty() {
            return Err(contradiction(
                g,
                "remainder has no end avoiding the clique",
                format!("{head}"),
            ));
        }
        for end in &ends {
            let s_host = map1.lift_set(&end.separator);
            let f_host = map1.lift_set(&end.fragment);
            let hit = layout
                .leaves
                .iter()
                .find_map(|&at| neighbor_in(g, head.map[at], &f_host).map(|w| (at, w)));
            if let Some((at, w)) = hit {
                self.trace.push(step(PathCase::LeafMeetsEnd));
                let rest = end.separator.union(&end.fragment).complement();
                let (h, map2, c2) = completed_part(&g1, &end.separator, &rest)?;
                let pair = pair_or_contradiction(h, c2, r, true, "leaf extension")?;
                let start = map2.from_host[map1.from_host[w].expect("w in g1")].expect("w in end");
                let path = find_rooted_nonsep_path(&pair, start, r)?;
                let w1 = VertexSet::from_iter_in(g1.order(), path.map.iter().map(|&v| map2.lift(v)));
                let c1 = clique.map(|_| avoid1.clone());
                lift_or_contradiction(&g1, c1.as_ref(), &end.separator, &rest, &w1, "leaf extension")?;
                let tail: Vec<_> = path.map.iter().map(|&v| map1.lift(map2.lift(v))).collect();
                return assemble(&target, &head.map, at, &tail);
            }
            let hit = layout
                .centers
                .iter()
                .find_map(|&c| neighbor_in(g, head.map[c], &f_host).map(|w| (c, w)));
            if let Some((center, w)) = hit {
                self.trace.push(step(PathCase::CenterMeetsEnd));
                let drop_at = *layout
                    .leaves_of
                    .iter()
                    .find(|(c, _)| *c == center)
                    .and_then(|(_, ls)| ls.last())
                    .expect("every center has a leaf");
                let mut t2 = head_set.clone();
                t2.remove(head.map[drop_at]);
                let (g2, map_g2) = g.delete(&t2)?;
                let s2 = map_g2.project_set(&s_host);
                let f2 = map_g2.project_set(&f_host);
                let rest2 = s2.union(&f2).complement();
                let (h, map3, c3) = completed_part(&g2, &s2, &rest2)?;
                let pair = pair_or_contradiction(h, c3, r + 1, true, "traded leaf")?;
                let start = map3.from_host[map_g2.from_host[w].expect("w in g2")].expect("w in end");
                let path = find_rooted_nonsep_path(&pair, start, r + 1)?;
                let w2 = VertexSet::from_iter_in(g2.order(), path.map.iter().map(|&v| map3.lift(v)));
                let c2 = clique.map(|_| map_g2.project_set(&avoid));
                lift_or_contradiction(&g2, c2.as_ref(), &s2, &rest2, &w2, "traded leaf")?;
                let lifted: Vec<_> = path.map.iter().map(|&v| map_g2.lift(map3.lift(v))).collect();
                let mut new_head = head.map.clone();
                new_head[drop_at] = lifted[0];
                return assemble(&target, &new_head, drop_at, &lifted[1..]);
            }
        }

        self.trace.push(step(PathCase::Descend));
        let end = &ends[0];
        let s_host = map1.lift_set(&end.separator);
        let f_host = map1.lift_set(&end.fragment);
        if g.neighborhood(&f_host) != s_host {
            return Err(contradiction(
                g,
                "untouched end is not an end of the host",
                format!("S {s_host:?}"),
            ));
        }
        let rest = s_host.union(&f_host).complement();
        let (gp, mapp, cp) = completed_part(g, &s_host, &rest)?;
        if gp.order() >= n {
            return Err(contradiction(
                g,
                "descent did not shrink the graph",
                format!("S {s_host:?}"),
            ));
        }
        let sub = self.grow(&gp, Some(&cp), depth + 1)?;
        let map: Vec<_> = sub.map.iter().map(|&v| mapp.lift(v)).collect();
        let w = VertexSet::from_iter_in(n, map.iter().copied());
        lift_or_contradiction(g, clique, &s_host, &rest, &w, "descent")?;
        Ok(Embedding::new(sub.shape, map))
    }
}

/// Replaces the local instance in a witness by the caller's host.
fn rehost(e: Error, g: &Graph) -> Error {
    let swap = |w: Box<Witness>| {
        Box::new(Witness::new(
            w.message,
            AnyGraph::from(g.clone()).to_edge_list(),
            w.detail,
        ))
    };
    match e {
        Error::NotFound(w) => Error::NotFound(swap(w)),
        Error::Contradiction(w) => Error::Contradiction(swap(w)),
        other => other,
    }
}

/// Path-star or path-double-star with 2-connected remainder, with the
/// branches taken. The path-double-star result may use the other variant.
pub fn find_path_shape_traced(g: &Graph, spec: &ShapeSpec) -> Result<PathRun> {
    spec.validate()?;
    head_spec(spec)?;
    require_two_connected(g, spec.m + 2)?;
    let mut trace = Vec::new();
    let mut grower = Grower {
        target: *spec,
        guard: g.order(),
        trace: &mut trace,
    };
    let tree = grower.grow(g, None, 0).map_err(|e| rehost(e, g))?;
    let tree = verified(g, tree, 2)?;
    Ok(PathRun { tree, trace })
}

/// PS(r, m − r) whose removal leaves `g` 2-connected, for a 2-connected `g`
/// with δ ≥ m + 2 and 1 ≤ r ≤ m − 3.
pub fn find_path_star(g: &Graph, m: usize, r: usize) -> Result<Embedding> {
    Ok(find_path_shape_traced(g, &ShapeSpec::path_star(r, m)?)?.tree)
}

/// Path-double-star of order `m` with path length `r` and `a` leaves at the
/// larger center; `second` asks for the path at the smaller center. The
/// result is whichever variant the construction reaches.
pub fn find_path_double_star(g: &Graph, m: usize, r: usize, second: bool, a: usize) -> Result<Embedding> {
    Ok(find_path_shape_traced(g, &ShapeSpec::path_double_star(second, r, m, a)?)?.tree)
}
