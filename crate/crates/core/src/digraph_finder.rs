//! Nonseparating oriented stars and double-stars in strongly connected
//! digraphs with minimum semi-degree at least m + 1.
//!
//! Start from any copy T of the shape. While D − V(T) is not strongly
//! connected, let B be its largest strong component and P a shortest dipath
//! that leaves B and comes back. Each step builds a new tree avoiding B ∪ P
//! (or a rerouted P'), so the new largest component contains B ∪ P and is
//! strictly larger. At most n steps are needed.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::connectivity::{is_strongly_connected, strong_components_within, ComponentOrder};
use crate::error::{Error, Result, Witness};
use crate::graph::{AnyGraph, Digraph, VertexId, VertexSet};
use crate::shapes::{double_star_from_arc, embed_shape, Embedding, ShapeKind, ShapeSpec};

/// A shortest dipath `p0 p1 … pt` (t ≥ 2) with `p0, pt` in a vertex set H
/// and all interior vertices outside it. `p0 = pt` is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReentrantPath {
    pub vertices: Vec<VertexId>,
}

impl ReentrantPath {
    pub fn t(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn p(&self, i: usize) -> VertexId {
        self.vertices[i]
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_iter_in(n, self.vertices.iter().copied())
    }
}

/// Shortest re-entrant path for `h`, with the lexicographically smallest
/// interior among the shortest ones.
pub fn reentrant_path(d: &Digraph, h: &VertexSet) -> Result<ReentrantPath> {
    let n = d.order();
    if h.universe() != n {
        return Err(Error::Input("vertex set over the wrong universe".into()));
    }
    if h.is_empty() || h.len() == n {
        return Err(Error::Input("H must be a nonempty proper subset".into()));
    }
    if !is_strongly_connected(d) {
        return Err(Error::Input("digraph is not strongly connected".into()));
    }
    // back[x]: arcs needed from x ∉ H to reach H through vertices outside H
    let mut back = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for (x, b) in back.iter_mut().enumerate() {
        if !h.contains(x) && d.out_neighbors(x).iter().any(|&y| h.contains(y)) {
            *b = 1;
            queue.push_back(x);
        }
    }
    while let Some(y) = queue.pop_front() {
        for &x in d.in_neighbors(y) {
            if !h.contains(x) && back[x] == usize::MAX {
                back[x] = back[y] + 1;
                queue.push_back(x);
            }
        }
    }
    let p1 = (0..n)
        .filter(|&x| !h.contains(x) && back[x] != usize::MAX)
        .filter(|&x| d.in_neighbors(x).iter().any(|&y| h.contains(y)))
        .min_by_key(|&x| (back[x], x))
        .expect("strong connectivity gives an arc out of H and a way back");
    let p0 = *d
        .in_neighbors(p1)
        .iter()
        .find(|&&y| h.contains(y))
        .expect("p1 has an in-neighbor in H");
    let mut vertices = vec![p0, p1];
    let mut cur = p1;
    while back[cur] > 1 {
        cur = *d
            .out_neighbors(cur)
            .iter()
            .find(|&&y| !h.contains(y) && back[y] + 1 == back[cur])
            .expect("BFS layer has a successor");
        vertices.push(cur);
    }
    let last = *d
        .out_neighbors(cur)
        .iter()
        .find(|&&y| h.contains(y))
        .expect("last interior vertex points into H");
    vertices.push(last);
    Ok(ReentrantPath { vertices })
}

/// Which construction produced a step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Case {
    Initial,
    /// t = 2, B is the first component: out-star in the last one.
    T2OutStar,
    /// t = 2, B is not first: in-star in the first component.
    T2InStar,
    T3OutStar,
    T3InStar,
    /// t ≥ 4, some q_j has m − 1 free out-neighbors.
    T4OutStar,
    /// t ≥ 4, in-star at p2 over q1 … q_{m−1}, path rerouted through q_m.
    T4InStarReroute,
    T2OutDouble,
    T2InDouble,
    /// t = 3, center arc (q, w), w sends nothing into B.
    T3OutDouble,
    /// t = 3, center arc (q, w), w sends into B.
    T3OutInDoubleQW,
    /// t = 3, center arc (w', q), w' sends nothing into B.
    T3OutInDoubleWQ,
    /// t = 3, center arc (w', q), w' sends into B.
    T3InDouble,
    /// t ≥ 4, center arc (q_j, w), w sends into B.
    T4OutInDoubleW,
    /// t ≥ 4, center arc (q_j, w), w receives from B.
    T4OutDoubleW,
    /// t ≥ 4, center arc (q_j, w_k), w_k with m − 2 free out-neighbors.
    T4OutDoubleWk,
    /// t ≥ 4, in-double-star on (p2, p3), path rerouted through q_j w_{m−1}.
    T4InDoubleReroute,
    /// t ≥ 4, out-in-double-star on (q1, p2), path rerouted through q_x.
    T4OutInDoubleReroute,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub case: Case,
    /// |B| after the step.
    pub b_size: usize,
}

/// Loop state: current tree, the component order of D − V(T), its largest
/// component B and a re-entrant path for B (absent once D − V(T) is
/// strongly connected).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImproveState {
    pub tree: Embedding,
    pub order: ComponentOrder,
    pub big: VertexSet,
    pub path: Option<ReentrantPath>,
    pub trace: Vec<TraceEntry>,
}

impl ImproveState {
    pub fn new(d: &Digraph, tree: Embedding) -> Result<Self> {
        tree.validate(d)?;
        let mut state = Self::analyze(d, tree)?;
        state.trace.push(TraceEntry {
            case: Case::Initial,
            b_size: state.big.len(),
        });
        Ok(state)
    }

    fn analyze(d: &Digraph, tree: Embedding) -> Result<Self> {
        let n = d.order();
        let rest = tree.vertex_set(n).complement();
        if rest.is_empty() {
            return Err(Error::Input("tree covers the whole digraph".into()));
        }
        let order = strong_components_within(d, &rest);
        let big = order.largest().expect("nonempty remainder").clone();
        let path = if order.len() > 1 {
            Some(reentrant_path(d, &big)?)
        } else {
            None
        };
        Ok(Self {
            tree,
            order,
            big,
            path,
            trace: Vec::new(),
        })
    }

    /// D − V(T) is strongly connected.
    pub fn is_done(&self) -> bool {
        self.order.len() == 1
    }
}

/// Result of a finder run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Run {
    pub tree: Embedding,
    /// First entry is the initial tree; one entry per improvement step after.
    pub trace: Vec<TraceEntry>,
}

impl Run {
    pub fn iterations(&self) -> usize {
        self.trace.len() - 1
    }
}

fn contradiction(d: &Digraph, msg: impl Into<String>, state: &ImproveState, extra: &str) -> Error {
    let detail = format!(
        "tree {}; B = {:?}; P = {:?}; components = {:?}; {extra}",
        state.tree,
        state.big,
        state.path.as_ref().map(|p| &p.vertices),
        state.order.components,
    );
    Error::Contradiction(Box::new(Witness::new(
        msg,
        AnyGraph::Directed(d.clone()).to_edge_list(),
        detail,
    )))
}

fn free(list: &[VertexId], blocked: &VertexSet) -> Vec<VertexId> {
    list.iter().copied().filter(|&v| !blocked.contains(v)).collect()
}

fn meets(list: &[VertexId], set: &VertexSet) -> bool {
    list.iter().any(|&v| set.contains(v))
}

/// Checks the new tree against the proof's promises and builds the next
/// state: T' avoids B ∪ P_used, B ∪ P_used lies in one strong component of
/// D − V(T'), and the largest component grew.
fn commit(
    d: &Digraph,
    state: &ImproveState,
    tree: Option<Embedding>,
    path_used: &[VertexId],
    case: Case,
) -> Result<ImproveState> {
    let n = d.order();
    let Some(tree) = tree else {
        return Err(contradiction(
            d,
            format!("{case}: construction found no tree"),
            state,
            "",
        ));
    };
    let extra = format!("case {case}; new tree {tree}; path used {path_used:?}");
    if let Err(e) = tree.validate(d) {
        return Err(contradiction(d, format!("{case}: invalid tree: {e}"), state, &extra));
    }
    for w in path_used.windows(2) {
        if !d.has_arc(w[0], w[1]) {
            return Err(contradiction(
                d,
                format!("{case}: rerouted path is not a dipath"),
                state,
                &extra,
            ));
        }
    }
    let mut kept = state.big.clone();
    kept.union_with(&VertexSet::from_iter_in(n, path_used.iter().copied()));
    if !tree.vertex_set(n).is_disjoint(&kept) {
        return Err(contradiction(d, format!("{case}: tree meets B ∪ P"), state, &extra));
    }
    let mut next = ImproveState::analyze(d, tree)?;
    let home = next.order.position(kept.first().expect("B is nonempty"));
    if kept.iter().any(|v| next.order.position(v) != home) {
        return Err(contradiction(
            d,
            format!("{case}: B ∪ P split across components"),
            state,
            &extra,
        ));
    }
    if next.big.len() <= state.big.len() {
        return Err(contradiction(d, format!("{case}: |B| did not grow"), state, &extra));
    }
    next.trace = state.trace.clone();
    next.trace.push(TraceEntry {
        case,
        b_size: next.big.len(),
    });
    Ok(next)
}

struct StepContext<'a> {
    d: &'a Digraph,
    n: usize,
    big: &'a VertexSet,
    path: &'a ReentrantPath,
    /// B ∪ V(P)
    bp: VertexSet,
}

impl<'a> StepContext<'a> {
    fn new(d: &'a Digraph, state: &'a ImproveState) -> Result<Self> {
        let path = state
            .path
            .as_ref()
            .ok_or_else(|| Error::Input("remainder is already strongly connected".into()))?;
        let n = d.order();
        let mut bp = state.big.clone();
        bp.union_with(&path.vertex_set(n));
        Ok(Self {
            d,
            n,
            big: &state.big,
            path,
            bp,
        })
    }

    fn free_out(&self, v: VertexId) -> Vec<VertexId> {
        free(self.d.out_neighbors(v), &self.bp)
    }

    fn free_in(&self, v: VertexId) -> Vec<VertexId> {
        free(self.d.in_neighbors(v), &self.bp)
    }

    fn enters_b(&self, v: VertexId) -> bool {
        meets(self.d.out_neighbors(v), self.big)
    }

    fn leaves_b(&self, v: VertexId) -> bool {
        meets(self.d.in_neighbors(v), self.big)
    }

    /// B ∪ V(P') as a forbidden set.
    fn forbid_with(&self, path: &[VertexId]) -> VertexSet {
        let mut f = self.big.clone();
        f.union_with(&VertexSet::from_iter_in(self.n, path.iter().copied()));
        f
    }

    /// First m vertices of N⁺(p1) outside B ∪ P.
    fn qs(&self, m: usize, state: &ImproveState) -> Result<Vec<VertexId>> {
        let qs: Vec<_> = self.free_out(self.path.p(1)).into_iter().take(m).collect();
        if qs.len() < m {
            return Err(contradiction(
                self.d,
                "p1 has fewer than m out-neighbors outside B ∪ P",
                state,
                "",
            ));
        }
        Ok(qs)
    }
}

fn check_step_pre(d: &Digraph, state: &ImproveState, m: usize) -> Result<()> {
    if state.path.is_none() {
        return Err(Error::Input("remainder is already strongly connected".into()));
    }
    if d.semi_degree()? < m + 1 {
        return Err(Error::Precondition(format!("minimum semi-degree below {}", m + 1)));
    }
    Ok(())
}

/// One improvement step for oriented stars of order `m`.
pub fn improve_star_step(d: &Digraph, state: &ImproveState, m: usize) -> Result<ImproveState> {
    check_step_pre(d, state, m)?;
    let cx = StepContext::new(d, state)?;
    let out = ShapeSpec::out_star(m)?;
    let inn = ShapeSpec::in_star(m)?;
    let p = cx.path;
    let t = p.t();
    let rooted = |spec: &ShapeSpec, root: VertexId, forbidden: &VertexSet| {
        if forbidden.contains(root) {
            return Ok(None);
        }
        embed_shape(d, spec, forbidden, &[(0, root)])
    };
    match t {
        2 => {
            let first = state.order.first().expect("components");
            if *first == state.big {
                let c = state.order.last().and_then(|c| c.first()).expect("components");
                let tree = rooted(&out, c, &cx.bp)?;
                commit(d, state, tree, &p.vertices, Case::T2OutStar)
            } else {
                let c = first.first().expect("nonempty component");
                let tree = rooted(&inn, c, &cx.bp)?;
                commit(d, state, tree, &p.vertices, Case::T2InStar)
            }
        }
        3 => {
            let Some(&q) = cx.free_out(p.p(1)).first() else {
                return Err(contradiction(d, "t = 3: p1 has no free out-neighbor", state, ""));
            };
            if !cx.enters_b(q) {
                let tree = rooted(&out, q, &cx.bp)?;
                commit(d, state, tree, &p.vertices, Case::T3OutStar)
            } else {
                let tree = rooted(&inn, q, &cx.bp)?;
                commit(d, state, tree, &p.vertices, Case::T3InStar)
            }
        }
        _ => {
            let qs = cx.qs(m, state)?;
            if let Some(&q) = qs.iter().find(|&&q| cx.free_out(q).len() + 1 >= m) {
                let tree = rooted(&out, q, &cx.bp)?;
                return commit(d, state, tree, &p.vertices, Case::T4OutStar);
            }
            // every q_j points to exactly p1, p2, p3 inside B ∪ P; only the
            // arcs q_j → p2 are needed for the in-star
            let mut map = vec![p.p(2)];
            map.extend(&qs[..m - 1]);
            let tree = Embedding::new(inn, map);
            let mut rerouted = vec![p.p(0), p.p(1), qs[m - 1]];
            rerouted.extend(&p.vertices[3..]);
            commit(d, state, Some(tree), &rerouted, Case::T4InStarReroute)
        }
    }
}

/// One improvement step for oriented double-stars of order `m` with leaf
/// split (r, s).
pub fn improve_double_star_step(
    d: &Digraph,
    state: &ImproveState,
    m: usize,
    r: usize,
    s: usize,
) -> Result<ImproveState> {
    ShapeSpec::oriented_double_star(ShapeKind::OutDoubleStar, m, r, s)?;
    check_step_pre(d, state, m)?;
    let cx = StepContext::new(d, state)?;
    let p = cx.path;
    let t = p.t();
    let build = |kind, u, v, forbidden: &VertexSet| {
        if !d.has_arc(u, v) {
            return Ok(None);
        }
        double_star_from_arc(d, u, v, kind, m, r, s, forbidden)
    };
    use ShapeKind::{InDoubleStar as Ids, OutDoubleStar as Ods, OutInDoubleStar as Oids};
    match t {
        2 => {
            let first = state.order.first().expect("components");
            let (comp, kind, case) = if *first == state.big {
                (state.order.last().expect("components"), Ods, Case::T2OutDouble)
            } else {
                (first, Ids, Case::T2InDouble)
            };
            let c = comp.first().expect("nonempty component");
            let Some(&c2) = d.out_neighbors(c).iter().find(|&&x| comp.contains(x)) else {
                return Err(contradiction(d, "t = 2: component has no inner arc", state, ""));
            };
            let tree = build(kind, c, c2, &cx.bp)?;
            commit(d, state, tree, &p.vertices, case)
        }
        3 => {
            let Some(&q) = cx.free_out(p.p(1)).first() else {
                return Err(contradiction(d, "t = 3: p1 has no free out-neighbor", state, ""));
            };
            if !cx.enters_b(q) {
                let Some(&w) = cx.free_out(q).first() else {
                    return Err(contradiction(d, "t = 3: q has no free out-neighbor", state, ""));
                };
                let (kind, case) = if !cx.enters_b(w) {
                    (Ods, Case::T3OutDouble)
                } else {
                    (Oids, Case::T3OutInDoubleQW)
                };
                let tree = build(kind, q, w, &cx.bp)?;
                commit(d, state, tree, &p.vertices, case)
            } else {
                let Some(&w) = cx.free_in(q).first() else {
                    return Err(contradiction(d, "t = 3: q has no free in-neighbor", state, ""));
                };
                let (kind, case) = if !cx.enters_b(w) {
                    (Oids, Case::T3OutInDoubleWQ)
                } else {
                    (Ids, Case::T3InDouble)
                };
                let tree = build(kind, w, q, &cx.bp)?;
                commit(d, state, tree, &p.vertices, case)
            }
        }
        _ => {
            let qs = cx.qs(m, state)?;
            for &q in &qs {
                for w in cx.free_out(q) {
                    if cx.enters_b(w) {
                        let tree = build(Oids, q, w, &cx.bp)?;
                        return commit(d, state, tree, &p.vertices, Case::T4OutInDoubleW);
                    }
                    if cx.leaves_b(w) {
                        let tree = build(Ods, q, w, &cx.bp)?;
                        return commit(d, state, tree, &p.vertices, Case::T4OutDoubleW);
                    }
                }
            }
            if let Some(&q) = qs.iter().find(|&&q| cx.free_out(q).len() + 1 >= m) {
                let ws: Vec<_> = cx.free_out(q).into_iter().take(m - 1).collect();
                // the printed condition counts N⁺(w_k) ∩ (B ∪ P); the
                // argument needs the free side N⁺(w_k) ∖ (B ∪ P)
                if let Some(&w) = ws.iter().find(|&&w| cx.free_out(w).len() + 2 >= m) {
                    let tree = build(Ods, q, w, &cx.bp)?;
                    return commit(d, state, tree, &p.vertices, Case::T4OutDoubleWk);
                }
                let mut rerouted = vec![p.p(0), p.p(1), q, ws[m - 2]];
                rerouted.extend(&p.vertices[4..]);
                // leaves are exactly w_1 … w_{m−2}
                let allowed = VertexSet::from_iter_in(cx.n, ws[..m - 2].iter().copied().chain([p.p(2), p.p(3)]));
                let tree = build(Ids, p.p(2), p.p(3), &allowed.complement())?;
                return commit(d, state, tree, &rerouted, Case::T4InDoubleReroute);
            }
            let q1 = qs[0];
            let Some(&qx) = qs[1..].iter().find(|&&q| !d.has_arc(q1, q)) else {
                return Err(contradiction(d, "t ≥ 4: q1 points to every other q_j", state, ""));
            };
            let mut rerouted = vec![p.p(0), p.p(1), qx];
            rerouted.extend(&p.vertices[3..]);
            let tree = build(Oids, q1, p.p(2), &cx.forbid_with(&rerouted))?;
            commit(d, state, tree, &rerouted, Case::T4OutInDoubleReroute)
        }
    }
}

fn check_finder_pre(d: &Digraph, m: usize) -> Result<()> {
    let n = d.order();
    if n == 0 {
        return Err(Error::Input("empty digraph".into()));
    }
    if !is_strongly_connected(d) {
        return Err(Error::Precondition("digraph is not strongly connected".into()));
    }
    let delta = d.semi_degree()?;
    if delta < m + 1 {
        return Err(Error::Precondition(format!(
            "minimum semi-degree {delta} is below m + 1 = {}",
            m + 1
        )));
    }
    if n < m + 2 {
        return Err(Error::Precondition(format!(
            "need at least m + 2 = {} vertices, got {n}",
            m + 2
        )));
    }
    Ok(())
}

fn run_loop<F>(d: &Digraph, initial: Embedding, mut step: F) -> Result<Run>
where
    F: FnMut(&ImproveState) -> Result<ImproveState>,
{
    let mut state = ImproveState::new(d, initial)?;
    for _ in 0..=d.order() {
        if state.is_done() {
            let rest = state.tree.vertex_set(d.order());
            if !crate::connectivity::is_strongly_connected_without(d, &rest) {
                return Err(contradiction(
                    d,
                    "final remainder is not strongly connected",
                    &state,
                    "",
                ));
            }
            return Ok(Run {
                tree: state.tree,
                trace: state.trace,
            });
        }
        state = step(&state)?;
    }
    Err(contradiction(d, "more than n improvement steps", &state, ""))
}

/// Runs the oriented-star loop from a given out-star or in-star of order m.
pub fn run_oriented_star_from(d: &Digraph, m: usize, initial: Embedding) -> Result<Run> {
    check_finder_pre(d, m)?;
    if !matches!(initial.shape.kind, ShapeKind::OutStar | ShapeKind::InStar) || initial.shape.m != m {
        return Err(Error::Input(format!(
            "initial tree {initial} is not an oriented star of order {m}"
        )));
    }
    run_loop(d, initial, |st| improve_star_step(d, st, m))
}

/// Out-star or in-star of order `m` whose removal keeps `d` strongly
/// connected, with the improvement trace.
pub fn find_nonsep_oriented_star_traced(d: &Digraph, m: usize) -> Result<Run> {
    let spec = ShapeSpec::out_star(m)?;
    check_finder_pre(d, m)?;
    let initial = embed_shape(d, &spec, &VertexSet::new(d.order()), &[])?
        .ok_or_else(|| Error::Precondition("no out-star of order m at all".into()))?;
    run_oriented_star_from(d, m, initial)
}

/// Out-star or in-star of order `m` whose removal keeps `d` strongly
/// connected. Needs strong connectivity, minimum semi-degree m + 1 and at
/// least m + 2 vertices.
pub fn find_nonsep_oriented_star(d: &Digraph, m: usize) -> Result<Embedding> {
    Ok(find_nonsep_oriented_star_traced(d, m)?.tree)
}

/// Runs the double-star loop from a given ODS/IDS/OIDS(m; r, s).
pub fn run_oriented_double_star_from(d: &Digraph, m: usize, r: usize, s: usize, initial: Embedding) -> Result<Run> {
    let spec = ShapeSpec::oriented_double_star(ShapeKind::OutDoubleStar, m, r, s)?;
    check_finder_pre(d, m)?;
    if !spec.family().contains(&initial.shape) {
        return Err(Error::Input(format!(
            "initial tree {initial} is not an oriented double-star ({m}; {r}, {s})"
        )));
    }
    run_loop(d, initial, |st| improve_double_star_step(d, st, m, r, s))
}

/// Member of {ODS, IDS, OIDS}(m; r, s) whose removal keeps `d` strongly
/// connected, with the improvement trace.
pub fn find_nonsep_oriented_double_star_traced(d: &Digraph, m: usize, r: usize, s: usize) -> Result<Run> {
    ShapeSpec::oriented_double_star(ShapeKind::OutDoubleStar, m, r, s)?;
    check_finder_pre(d, m)?;
    let (u, v) = d.arcs().next().expect("semi-degree ≥ 1 gives an arc");
    let initial = double_star_from_arc(d, u, v, ShapeKind::OutDoubleStar, m, r, s, &VertexSet::new(d.order()))?
        .ok_or_else(|| Error::Precondition("first arc does not carry a double-star".into()))?;
    run_oriented_double_star_from(d, m, r, s, initial)
}

pub fn find_nonsep_oriented_double_star(d: &Digraph, m: usize, r: usize, s: usize) -> Result<Embedding> {
    Ok(find_nonsep_oriented_double_star_traced(d, m, r, s)?.tree)
}
