//! Vertex connectivity, strong components, minimum separators, fragments and
//! ends, and the completion operator.
//!
//! κ is computed with Menger's theorem: unit vertex capacities (each vertex
//! split into an in/out pair) and augmenting paths between non-adjacent pairs,
//! using Even's pair schedule. Connectivity targets up to 2 go through DFS
//! instead (components and articulation points).

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, VertexId, VertexSet};

/// Connected components of `g[alive]`, each sorted, ordered by smallest member.
pub fn components_within(g: &Graph, alive: &VertexSet) -> Vec<VertexSet> {
    let n = g.order();
    let mut seen = VertexSet::new(n);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for root in alive.iter() {
        if seen.contains(root) {
            continue;
        }
        let mut comp = VertexSet::new(n);
        seen.insert(root);
        stack.push(root);
        while let Some(u) = stack.pop() {
            comp.insert(u);
            for &v in g.neighbors(u) {
                if alive.contains(v) && !seen.contains(v) {
                    seen.insert(v);
                    stack.push(v);
                }
            }
        }
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    g.order() > 0 && components_within(g, &VertexSet::full(g.order())).len() == 1
}

fn is_complete(g: &Graph) -> bool {
    let n = g.order();
    (0..n).all(|v| g.degree(v) + 1 == n)
}

/// `g[alive]` is connected, has at least three vertices and no cut vertex.
fn biconnected_within(g: &Graph, alive: &VertexSet) -> bool {
    let n = g.order();
    let size = alive.len();
    if size < 3 {
        return false;
    }
    let root = alive.first().expect("nonempty");
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0usize;
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(VertexId, VertexId, usize)> = vec![(root, usize::MAX, 0)];
    disc[root] = time;
    low[root] = time;
    time += 1;
    let mut root_children = 0;
    while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
        let nbrs = g.neighbors(u);
        if *idx < nbrs.len() {
            let v = nbrs[*idx];
            *idx += 1;
            if !alive.contains(v) || v == parent {
                continue;
            }
            if disc[v] == usize::MAX {
                disc[v] = time;
                low[v] = time;
                time += 1;
                if u == root {
                    root_children += 1;
                }
                stack.push((v, u, 0));
            } else {
                low[u] = low[u].min(disc[v]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[u]);
                if p != root && low[u] >= disc[p] {
                    return false;
                }
            }
        }
    }
    time == size && root_children == 1
}

/// Unit-vertex-capacity flow network for one (s, t) pair.
struct VertexFlow {
    head: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u32>,
    next: Vec<usize>,
}

const NIL: usize = usize::MAX;

impl VertexFlow {
    fn new(g: &Graph, s: VertexId, t: VertexId) -> Self {
        let n = g.order();
        let mut f = VertexFlow {
            head: vec![NIL; 2 * n],
            to: Vec::new(),
            cap: Vec::new(),
            next: Vec::new(),
        };
        let big = n as u32 + 1;
        for v in 0..n {
            let c = if v == s || v == t { big } else { 1 };
            f.add(2 * v, 2 * v + 1, c);
        }
        for (u, v) in g.edges() {
            f.add(2 * u + 1, 2 * v, big);
            f.add(2 * v + 1, 2 * u, big);
        }
        f
    }

    fn add(&mut self, a: usize, b: usize, c: u32) {
        for (x, y, cc) in [(a, b, c), (b, a, 0)] {
            self.to.push(y);
            self.cap.push(cc);
            self.next.push(self.head[x]);
            self.head[x] = self.to.len() - 1;
        }
    }

    /// Augments up to `limit` units from `src` to `dst`.
    fn run(&mut self, src: usize, dst: usize, limit: usize) -> usize {
        let nodes = self.head.len();
        let mut flow = 0;
        let mut pred = vec![NIL; nodes];
        while flow < limit {
            pred.iter_mut().for_each(|p| *p = NIL);
            let mut queue = VecDeque::from([src]);
            let mut reached = false;
            'bfs: while let Some(x) = queue.pop_front() {
                let mut e = self.head[x];
                while e != NIL {
                    let y = self.to[e];
                    if self.cap[e] > 0 && pred[y] == NIL && y != src {
                        pred[y] = e;
                        if y == dst {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                    e = self.next[e];
                }
            }
            if !reached {
                break;
            }
            let mut y = dst;
            while y != src {
                let e = pred[y];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                y = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }

    /// After a maximum flow: vertices whose split arc crosses the residual cut.
    fn cut(&self, src: usize, n: usize) -> VertexSet {
        let mut seen = vec![false; self.head.len()];
        let mut stack = vec![src];
        seen[src] = true;
        while let Some(x) = stack.pop() {
            let mut e = self.head[x];
            while e != NIL {
                let y = self.to[e];
                if self.cap[e] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
                e = self.next[e];
            }
        }
        VertexSet::from_iter_in(n, (0..n).filter(|&v| seen[2 * v] && !seen[2 * v + 1]))
    }
}

/// Number of internally disjoint s–t paths, capped at `limit`.
fn local_connectivity(g: &Graph, s: VertexId, t: VertexId, limit: usize) -> usize {
    let mut f = VertexFlow::new(g, s, t);
    f.run(2 * s + 1, 2 * t, limit)
}

/// A minimum separating set, or `None` for complete graphs. Disconnected
/// graphs yield the empty set.
pub fn min_separator(g: &Graph) -> Option<VertexSet> {
    let n = g.order();
    if is_complete(g) {
        return None;
    }
    let full = VertexSet::full(n);
    if components_within(g, &full).len() > 1 {
        return Some(VertexSet::new(n));
    }
    let v_min = (0..n).min_by_key(|&v| (g.degree(v), v)).expect("n > 0");
    let mut best = g.degree(v_min);
    let mut best_cut = g.neighbor_set(v_min);
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                continue;
            }
            let mut f = VertexFlow::new(g, i, j);
            let value = f.run(2 * i + 1, 2 * j, best);
            if value < best {
                best = value;
                best_cut = f.cut(2 * i + 1, n);
            }
        }
        i += 1;
    }
    Some(best_cut)
}

/// Vertex connectivity κ(g): `n - 1` for complete graphs, `0` when
/// disconnected (and for a single vertex).
pub fn kappa(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Input("connectivity of the empty graph".into()));
    }
    if is_complete(g) {
        return Ok(n - 1);
    }
    let full = VertexSet::full(n);
    if components_within(g, &full).len() > 1 {
        return Ok(0);
    }
    if !biconnected_within(g, &full) {
        return Ok(1);
    }
    Ok(min_separator(g).expect("not complete").len())
}

/// κ(g) ≥ k and |g| ≥ k + 1.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if n < k + 1 {
        return false;
    }
    let full = VertexSet::full(n);
    match k {
        0 => true,
        1 => components_within(g, &full).len() == 1,
        2 => biconnected_within(g, &full),
        _ => {
            if is_complete(g) {
                return true;
            }
            if !biconnected_within(g, &full) {
                return false;
            }
            for i in 0..k.min(n) {
                for j in i + 1..n {
                    if !g.has_edge(i, j) && local_connectivity(g, i, j, k) < k {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// κ(g − removed) ≥ k, without materializing the subgraph when k ≤ 2.
pub fn is_k_connected_without(g: &Graph, removed: &VertexSet, k: usize) -> bool {
    let alive = removed.complement();
    match k {
        0 => !alive.is_empty(),
        1 => alive.len() >= 2 && components_within(g, &alive).len() == 1,
        2 => biconnected_within(g, &alive),
        _ => {
            let (h, _) = g.delete(removed).expect("same universe");
            is_k_connected(&h, k)
        }
    }
}

/// `G ∪ K(S)`: `g` plus every missing edge inside `s`.
pub fn completion(g: &Graph, s: &VertexSet) -> Graph {
    let members = s.to_vec();
    let mut extra = Vec::new();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            extra.push((u, v));
        }
    }
    g.with_edges(extra)
}

/// Strong components in topological order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentOrder {
    /// No arc goes from a later component to an earlier one.
    pub components: Vec<VertexSet>,
}

impl ComponentOrder {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn first(&self) -> Option<&VertexSet> {
        self.components.first()
    }

    pub fn last(&self) -> Option<&VertexSet> {
        self.components.last()
    }

    /// Largest component; ties go to the one holding the smallest vertex.
    pub fn largest(&self) -> Option<&VertexSet> {
        self.components.iter().min_by_key(|c| (Reverse(c.len()), c.first()))
    }

    /// Index of the component containing `v`.
    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.components.iter().position(|c| c.contains(v))
    }
}

/// Kosaraju labelling of `d[alive]`; returns (component id per vertex, count).
fn scc_labels(d: &Digraph, alive: &VertexSet) -> (Vec<usize>, usize) {
    let n = d.order();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in alive.iter() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![(root, 0usize)];
        while let Some(&mut (u, ref mut idx)) = stack.last_mut() {
            let outs = d.out_neighbors(u);
            if *idx < outs.len() {
                let v = outs[*idx];
                *idx += 1;
                if alive.contains(v) && !seen[v] {
                    seen[v] = true;
                    stack.push((v, 0));
                }
            } else {
                order.push(u);
                stack.pop();
            }
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    for &root in order.iter().rev() {
        if label[root] != usize::MAX {
            continue;
        }
        label[root] = count;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &v in d.in_neighbors(u) {
                if alive.contains(v) && label[v] == usize::MAX {
                    label[v] = count;
                    stack.push(v);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

/// Strong components of `d[alive]` in topological order; incomparable
/// components are ordered by their smallest vertex.
pub fn strong_components_within(d: &Digraph, alive: &VertexSet) -> ComponentOrder {
    let n = d.order();
    let (label, count) = scc_labels(d, alive);
    let mut comps = vec![VertexSet::new(n); count];
    for v in alive.iter() {
        comps[label[v]].insert(v);
    }
    let mut indeg = vec![0usize; count];
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); count];
    for u in alive.iter() {
        for &v in d.out_neighbors(u) {
            if alive.contains(v) && label[u] != label[v] {
                succ[label[u]].push(label[v]);
            }
        }
    }
    for list in &mut succ {
        list.sort_unstable();
        list.dedup();
        for &c in list.iter() {
            indeg[c] += 1;
        }
    }
    let key = |c: usize| comps[c].first().expect("components are nonempty");
    let mut heap: BinaryHeap<Reverse<(VertexId, usize)>> = (0..count)
        .filter(|&c| indeg[c] == 0)
        .map(|c| Reverse((key(c), c)))
        .collect();
    let mut ordered = Vec::with_capacity(count);
    while let Some(Reverse((_, c))) = heap.pop() {
        ordered.push(c);
        for &s in &succ[c] {
            indeg[s] -= 1;
            if indeg[s] == 0 {
                heap.push(Reverse((key(s), s)));
            }
        }
    }
    ComponentOrder {
        components: ordered.into_iter().map(|c| comps[c].clone()).collect(),
    }
}

pub fn strong_components(d: &Digraph) -> Result<ComponentOrder> {
    if d.order() == 0 {
        return Err(Error::Input("strong components of the empty digraph".into()));
    }
    Ok(strong_components_within(d, &VertexSet::full(d.order())))
}

/// A largest strong component (ties: smallest contained vertex).
pub fn max_strong_component(d: &Digraph) -> Result<VertexSet> {
    Ok(strong_components(d)?.largest().expect("nonempty digraph").clone())
}

/// One strong component and at least one vertex.
pub fn is_strongly_connected(d: &Digraph) -> bool {
    d.order() > 0 && scc_labels(d, &VertexSet::full(d.order())).1 == 1
}

/// `d − removed` is strongly connected (and nonempty).
pub fn is_strongly_connected_without(d: &Digraph, removed: &VertexSet) -> bool {
    let alive = removed.complement();
    !alive.is_empty() && scc_labels(d, &alive).1 == 1
}

/// Every κ(g)-subset whose removal disconnects `g`, in lexicographic order.
pub fn minimum_separators(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.order();
    if n == 0 || is_complete(g) {
        return Err(Error::NoSeparatingSet);
    }
    if !is_connected(g) {
        return Err(Error::Input("minimum separators need a connected graph".into()));
    }
    let k = kappa(g)?;
    let mut out = Vec::new();
    let mut combo: Vec<VertexId> = (0..k).collect();
    loop {
        let s = VertexSet::from_iter_in(n, combo.iter().copied());
        if components_within(g, &s.complement()).len() > 1 {
            out.push(s);
        }
        // next k-combination of 0..n in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if combo[i] < n - k + i {
                combo[i] += 1;
                for j in i + 1..k {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// A component of `G − S` together with its complementary fragment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fragment {
    pub vertices: VertexSet,
    /// `V − (S ∪ F)`
    pub complement: VertexSet,
    pub is_end: bool,
}

/// A minimum separating set and its single-component fragments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationContext {
    pub separator: VertexSet,
    pub fragments: Vec<Fragment>,
}

/// (separator, single-component fragment) for every minimum separator.
fn all_fragments(g: &Graph) -> Result<Vec<(VertexSet, VertexSet)>> {
    let mut out = Vec::new();
    for s in minimum_separators(g)? {
        for comp in components_within(g, &s.complement()) {
            out.push((s.clone(), comp));
        }
    }
    Ok(out)
}

fn contains_other_fragment(f: &VertexSet, all: &[(VertexSet, VertexSet)]) -> bool {
    all.iter().any(|(_, other)| other != f && other.is_subset(f))
}

/// Single-component fragments of `g` to the minimum separator `s`.
///
/// Multi-component fragments are not listed: each one contains a
/// single-component fragment, so ends are always single components.
pub fn fragments(g: &Graph, s: &VertexSet) -> Result<SeparationContext> {
    let n = g.order();
    if s.universe() != n {
        return Err(Error::Input("separator over the wrong vertex universe".into()));
    }
    let k = kappa(g)?;
    if is_complete(g) {
        return Err(Error::NoSeparatingSet);
    }
    if s.len() != k {
        return Err(Error::Input(format!(
            "|S| = {} but κ = {k}; S is not a minimum separating set",
            s.len()
        )));
    }
    let comps = components_within(g, &s.complement());
    if comps.len() < 2 {
        return Err(Error::Input("S does not separate the graph".into()));
    }
    let all = all_fragments(g)?;
    let rest = s.complement();
    let fragments = comps
        .into_iter()
        .map(|f| Fragment {
            complement: rest.difference(&f),
            is_end: !contains_other_fragment(&f, &all),
            vertices: f,
        })
        .collect();
    Ok(SeparationContext {
        separator: s.clone(),
        fragments,
    })
}

/// An end together with its separator `S = N(F)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct End {
    pub separator: VertexSet,
    pub fragment: VertexSet,
}

/// Every end of `g`, sorted by (|F|, S, F).
pub fn ends(g: &Graph) -> Result<Vec<End>> {
    let all = all_fragments(g)?;
    let mut out: Vec<End> = all
        .iter()
        .filter(|(_, f)| !contains_other_fragment(f, &all))
        .map(|(s, f)| End {
            separator: s.clone(),
            fragment: f.clone(),
        })
        .collect();
    out.sort_by(|a, b| {
        (a.fragment.len(), &a.separator, &a.fragment).cmp(&(b.fragment.len(), &b.separator, &b.fragment))
    });
    out.dedup();
    Ok(out)
}

/// Checks that `f` is a fragment to `s`: a nonempty union of some but not
/// all components of `G − S`.
pub(crate) fn check_fragment(g: &Graph, s: &VertexSet, f: &VertexSet) -> Result<VertexSet> {
    if f.is_empty() || !f.is_disjoint(s) {
        return Err(Error::Input("fragment must be nonempty and avoid S".into()));
    }
    let comps = components_within(g, &s.complement());
    let mut covered = VertexSet::new(g.order());
    let mut used = 0;
    for c in &comps {
        if c.is_subset(f) {
            covered.union_with(c);
            used += 1;
        } else if !c.is_disjoint(f) {
            return Err(Error::Input("fragment splits a component of G − S".into()));
        }
    }
    if covered != *f || used == comps.len() {
        return Err(Error::Input(
            "fragment must be a union of some but not all components of G − S".into(),
        ));
    }
    Ok(s.union(f).complement())
}

/// `G[S] − V(F̄)` is k-connected, for |S| = k = κ(g) and F a fragment to S.
pub fn hamidoune_check(g: &Graph, s: &VertexSet, f: &VertexSet, k: usize) -> Result<bool> {
    let kap = kappa(g)?;
    if s.len() != k || kap != k {
        return Err(Error::Input(format!(
            "need |S| = k = κ(G); got |S| = {}, k = {k}, κ = {kap}",
            s.len()
        )));
    }
    let complement = check_fragment(g, s, f)?;
    Ok(is_k_connected_without(&completion(g, s), &complement, k))
}

/// `G[S] − V(F̄)` is (κ+1)-connected, for an end F with |F| ≥ 2.
pub fn hamidoune_end_check(g: &Graph, s: &VertexSet, f: &VertexSet) -> Result<bool> {
    let k = kappa(g)?;
    if f.len() < 2 {
        return Err(Error::Input("end must have at least two vertices".into()));
    }
    let is_end = ends(g)?.iter().any(|e| e.separator == *s && e.fragment == *f);
    if !is_end {
        return Err(Error::Input("F is not an end to S".into()));
    }
    let complement = check_fragment(g, s, f)?;
    Ok(is_k_connected_without(&completion(g, s), &complement, k + 1))
}

/// Membership of `(g, c)` in the class of pairs with a k-clique `c` in a
/// k-connected `g` whose vertices outside `c` have degree at least
/// ⌊3k/2⌋ + m − 1; `plus` additionally asks κ(g) ≥ k + 1.
pub fn kpair_check(g: &Graph, c: &VertexSet, k: usize, m: usize, plus: bool) -> bool {
    let n = g.order();
    if c.universe() != n || n < k + 1 || c.len() != k {
        return false;
    }
    let members = c.to_vec();
    let clique = members
        .iter()
        .enumerate()
        .all(|(i, &u)| members[i + 1..].iter().all(|&v| g.has_edge(u, v)));
    if !clique {
        return false;
    }
    let need = 3 * k / 2 + m;
    // ⌊3k/2⌋ + m − 1 without underflow
    let degree_ok = (0..n).filter(|&v| !c.contains(v)).all(|v| g.degree(v) + 1 >= need);
    degree_ok && is_k_connected(g, if plus { k + 1 } else { k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;

    fn set(n: usize, xs: &[usize]) -> VertexSet {
        VertexSet::from_iter_in(n, xs.iter().copied())
    }

    /// Brute force: smallest vertex subset whose removal disconnects g.
    fn kappa_brute(g: &Graph) -> usize {
        let n = g.order();
        let mut best = n.saturating_sub(1);
        for mask in 0u32..(1 << n) {
            let size = mask.count_ones() as usize;
            if size >= best {
                continue;
            }
            let alive = set(n, &(0..n).filter(|v| mask >> v & 1 == 0).collect::<Vec<_>>());
            if alive.len() >= 2 && components_within(g, &alive).len() > 1 {
                best = size;
            }
        }
        best
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa(&Graph::cycle(5)).unwrap(), 2);
        assert_eq!(kappa(&Graph::complete(6)).unwrap(), 5);
        assert_eq!(kappa(&Graph::petersen()).unwrap(), 3);
        assert_eq!(kappa_brute(&Graph::petersen()), 3);
        assert_eq!(kappa(&Graph::empty(1)).unwrap(), 0);
        assert_eq!(kappa(&Graph::empty(3)).unwrap(), 0);
        assert_eq!(kappa(&Graph::path(4)).unwrap(), 1);
        assert!(kappa(&Graph::empty(0)).is_err());
    }

    #[test]
    fn is_k_connected_examples() {
        assert!(is_k_connected(&Graph::cycle(5), 2));
        assert!(!is_k_connected(&Graph::cycle(5), 3));
        let k4_minus = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(is_k_connected(&k4_minus, 2));
        assert!(!is_k_connected(&k4_minus, 3));
        assert!(is_k_connected(&Graph::petersen(), 3));
        assert!(!is_k_connected(&Graph::petersen(), 4));
        assert!(is_k_connected(&Graph::complete(5), 4));
        assert!(!is_k_connected(&Graph::complete(5), 5));
    }

    #[test]
    fn strong_component_examples() {
        let d = Digraph::from_arcs(4, &[(0, 1), (1, 0), (1, 2), (2, 3), (3, 2)]).unwrap();
        let order = strong_components(&d).unwrap();
        assert_eq!(order.components, vec![set(4, &[0, 1]), set(4, &[2, 3])]);
        assert_eq!(max_strong_component(&d).unwrap(), set(4, &[0, 1]));

        let c6 = Digraph::bidirected(&Graph::cycle(6));
        assert_eq!(strong_components(&c6).unwrap().len(), 1);
        assert_eq!(max_strong_component(&c6).unwrap(), VertexSet::full(6));

        let path = Digraph::from_arcs(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            strong_components(&path).unwrap().components,
            vec![set(3, &[0]), set(3, &[1]), set(3, &[2])]
        );
        // reversed path: order follows arcs, not ids
        let rev = Digraph::from_arcs(3, &[(2, 1), (1, 0)]).unwrap();
        assert_eq!(
            strong_components(&rev).unwrap().components,
            vec![set(3, &[2]), set(3, &[1]), set(3, &[0])]
        );
    }

    #[test]
    fn strong_connectivity_examples() {
        assert!(is_strongly_connected(&Digraph::cycle(4)));
        assert!(!is_strongly_connected(
            &Digraph::from_arcs(3, &[(0, 1), (1, 2)]).unwrap()
        ));
        let mut arcs: Vec<_> = Digraph::complete(4).arcs().filter(|&(u, _)| u != 2).collect();
        arcs.sort();
        assert!(!is_strongly_connected(&Digraph::from_arcs(4, &arcs).unwrap()));
        assert!(is_strongly_connected(&Digraph::from_arcs(1, &[]).unwrap()));
        assert!(!is_strongly_connected(&Digraph::from_arcs(0, &[]).unwrap()));
    }

    #[test]
    fn separator_examples() {
        assert_eq!(
            minimum_separators(&Graph::cycle(4)).unwrap(),
            vec![set(4, &[0, 2]), set(4, &[1, 3])]
        );
        let c5 = minimum_separators(&Graph::cycle(5)).unwrap();
        assert_eq!(c5.len(), 5);
        assert!(c5.iter().all(|s| {
            let v = s.to_vec();
            !Graph::cycle(5).has_edge(v[0], v[1])
        }));
        assert!(matches!(
            minimum_separators(&Graph::complete(4)),
            Err(Error::NoSeparatingSet)
        ));
    }

    #[test]
    fn petersen_separators_are_neighborhoods() {
        let g = Graph::petersen();
        let seps = minimum_separators(&g).unwrap();
        // exhaustive 3-subset scan
        let mut brute = Vec::new();
        for a in 0..10 {
            for b in a + 1..10 {
                for c in b + 1..10 {
                    let s = set(10, &[a, b, c]);
                    if components_within(&g, &s.complement()).len() > 1 {
                        brute.push(s);
                    }
                }
            }
        }
        assert_eq!(seps, brute);
        let mut nbhds: Vec<_> = (0..10).map(|v| g.neighbor_set(v)).collect();
        nbhds.sort();
        assert_eq!(seps, nbhds);
    }

    #[test]
    fn fragment_examples() {
        let c4 = Graph::cycle(4);
        let ctx = fragments(&c4, &set(4, &[0, 2])).unwrap();
        assert_eq!(ctx.fragments.len(), 2);
        assert!(ctx.fragments.iter().all(|f| f.is_end && f.vertices.len() == 1));

        let c5 = Graph::cycle(5);
        let ctx = fragments(&c5, &set(5, &[0, 2])).unwrap();
        let single = ctx.fragments.iter().find(|f| f.vertices.len() == 1).unwrap();
        let pair = ctx.fragments.iter().find(|f| f.vertices.len() == 2).unwrap();
        assert!(single.is_end);
        assert!(!pair.is_end);
        assert_eq!(pair.complement, set(5, &[1]));

        assert!(fragments(&c5, &set(5, &[0, 1])).is_err());
        assert!(fragments(&c5, &set(5, &[0])).is_err());
    }

    #[test]
    fn end_examples() {
        assert_eq!(ends(&Graph::cycle(4)).unwrap().len(), 4);
        let c5 = ends(&Graph::cycle(5)).unwrap();
        assert_eq!(c5.len(), 5);
        assert!(c5.iter().all(|e| e.fragment.len() == 1));
        assert!(ends(&Graph::complete(5)).is_err());
    }

    #[test]
    fn completion_examples() {
        let p = Graph::path(3);
        assert_eq!(completion(&p, &set(3, &[0, 2])), Graph::complete(3));
        let g = Graph::petersen();
        assert_eq!(completion(&g, &set(10, &[4])), g);
        let s = set(10, &[0, 2, 7]);
        let once = completion(&g, &s);
        assert_eq!(completion(&once, &s), once);
    }

    #[test]
    fn hamidoune_examples() {
        let c4 = Graph::cycle(4);
        assert!(hamidoune_check(&c4, &set(4, &[0, 2]), &set(4, &[1]), 2).unwrap());
        let c5 = Graph::cycle(5);
        assert!(hamidoune_check(&c5, &set(5, &[0, 2]), &set(5, &[1]), 2).unwrap());
        assert!(hamidoune_check(&c5, &set(5, &[0, 2]), &set(5, &[3, 4]), 2).unwrap());
        assert!(hamidoune_check(&c5, &set(5, &[0, 2]), &set(5, &[1]), 3).is_err());
        assert!(hamidoune_end_check(&c5, &set(5, &[0, 2]), &set(5, &[1])).is_err());
    }

    #[test]
    fn hamidoune_end_with_two_vertices() {
        // two K4's glued through a 2-separator {0, 1}
        let mut b = GraphBuilder::new(8);
        let left = [0, 1, 2, 3, 4];
        let right = [0, 1, 5, 6, 7];
        for side in [left, right] {
            for i in 0..5 {
                for j in i + 1..5 {
                    b.add_edge_if_absent(side[i], side[j]);
                }
            }
        }
        let g = b.build();
        assert_eq!(kappa(&g).unwrap(), 2);
        let es = ends(&g).unwrap();
        assert_eq!(es.len(), 2);
        for e in es {
            assert!(e.fragment.len() >= 2);
            assert!(hamidoune_end_check(&g, &e.separator, &e.fragment).unwrap());
        }
    }

    #[test]
    fn kpair_examples() {
        let k6 = Graph::complete(6);
        assert!(kpair_check(&k6, &set(6, &[0, 1]), 2, 2, false));
        assert!(kpair_check(&k6, &set(6, &[0, 1]), 2, 2, true));
        // δ outside C is 5; ⌊3⌋ + 3 − 1 = 5 passes, m = 4 fails
        assert!(kpair_check(&k6, &set(6, &[0, 1]), 2, 3, false));
        assert!(!kpair_check(&k6, &set(6, &[0, 1]), 2, 4, false));
        assert!(!kpair_check(&Graph::cycle(5), &set(5, &[0, 1]), 2, 1, false));
        // wrong clique size
        assert!(!kpair_check(&k6, &set(6, &[0]), 2, 1, false));
        // not a clique
        let c5 = Graph::cycle(5);
        assert!(!kpair_check(&c5, &set(5, &[0, 2]), 2, 0, false));
        // degree bound alone holds but plus-connectivity fails
        assert!(kpair_check(&c5, &set(5, &[0, 1]), 2, 0, false));
        assert!(!kpair_check(&c5, &set(5, &[0, 1]), 2, 0, true));
    }

    #[test]
    fn min_separator_is_minimum_and_separating() {
        for g in [
            Graph::petersen(),
            Graph::cycle(7),
            Graph::wheel(6),
            Graph::complete_bipartite(3, 4),
        ] {
            let s = min_separator(&g).unwrap();
            assert_eq!(s.len(), kappa_brute(&g));
            assert!(components_within(&g, &s.complement()).len() > 1);
        }
        assert!(min_separator(&Graph::complete(4)).is_none());
    }
}
