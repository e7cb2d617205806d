//! Brute-force ground truth.
//!
//! Nothing here touches the flow code or the finders: connectivity is
//! decided by removing every small vertex subset and running a plain DFS,
//! and embeddings come from enumerating injective maps.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{Host, VertexId};
use crate::shapes::{Embedding, ShapeSpec};

fn reach<H: Host + ?Sized>(host: &H, alive: &[bool], start: VertexId, forward: bool) -> Vec<bool> {
    let mut seen = vec![false; host.order()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        let next = if forward {
            host.out_neighbors(u)
        } else {
            host.in_neighbors(u)
        };
        for &v in next {
            if alive[v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen
}

/// Connected (undirected) or strongly connected (directed), and nonempty.
fn strongly_connected_alive<H: Host + ?Sized>(host: &H, alive: &[bool]) -> bool {
    let Some(start) = alive.iter().position(|&a| a) else {
        return false;
    };
    let fwd = reach(host, alive, start, true);
    if (0..alive.len()).any(|v| alive[v] && !fwd[v]) {
        return false;
    }
    if !host.is_directed() {
        return true;
    }
    let back = reach(host, alive, start, false);
    (0..alive.len()).all(|v| !alive[v] || back[v])
}

/// κ(host[alive]) ≥ k by removing every subset of fewer than k vertices.
pub fn is_k_connected_brute<H: Host + ?Sized>(host: &H, alive: &[bool], k: usize) -> bool {
    let members: Vec<VertexId> = (0..alive.len()).filter(|&v| alive[v]).collect();
    if members.len() < k + 1 {
        return false;
    }
    if k == 0 {
        return true;
    }
    let mut mask = alive.to_vec();
    for size in 0..k {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            for &i in &combo {
                mask[members[i]] = false;
            }
            let ok = strongly_connected_alive(host, &mask);
            for &i in &combo {
                mask[members[i]] = true;
            }
            if !ok {
                return false;
            }
            // next combination of indices into `members`
            let len = members.len();
            let mut i = size;
            let advanced = loop {
                if i == 0 {
                    break false;
                }
                i -= 1;
                if combo[i] < len - size + i {
                    combo[i] += 1;
                    for j in i + 1..size {
                        combo[j] = combo[j - 1] + 1;
                    }
                    break true;
                }
            };
            if !advanced {
                break;
            }
        }
    }
    true
}

/// Own check of an embedding against the shape definition.
fn check_embedding<H: Host + ?Sized>(host: &H, t: &Embedding) -> Result<()> {
    let spec = &t.shape;
    spec.validate()?;
    let n = host.order();
    let mut problems = Vec::new();
    if spec.is_directed() != host.is_directed() {
        problems.push("shape and host disagree on directedness".to_string());
    }
    if t.map.len() != spec.m {
        problems.push(format!("map has {} entries, shape order is {}", t.map.len(), spec.m));
    }
    let mut used = vec![false; n];
    for (i, &v) in t.map.iter().enumerate() {
        if v >= n {
            problems.push(format!("shape vertex {i} ↦ {v} is outside 0..{n}"));
        } else if used[v] {
            problems.push(format!("host vertex {v} is hit twice"));
        } else {
            used[v] = true;
        }
    }
    if problems.is_empty() {
        for (a, b) in spec.links() {
            if !host.has_link(t.map[a], t.map[b]) {
                problems.push(format!(
                    "shape link ({a}, {b}) ↦ ({}, {}) missing in host",
                    t.map[a], t.map[b]
                ));
            }
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Error::Input(format!("invalid embedding {t}: {}", problems.join("; "))))
    }
}

/// The embedding is a faithful copy of its shape and the rest of the host is
/// k-connected (strongly, for digraphs).
pub fn verify_nonseparating<H: Host + ?Sized>(host: &H, t: &Embedding, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::Input("k must be at least 1".into()));
    }
    check_embedding(host, t)?;
    let mut alive = vec![true; host.order()];
    for &v in &t.map {
        alive[v] = false;
    }
    Ok(is_k_connected_brute(host, &alive, k))
}

/// Vertex set and link set of an embedded copy, both sorted.
type ImageKey = (Vec<VertexId>, Vec<(VertexId, VertexId)>);

/// Visits every distinct copy of `spec` in `host` (distinct vertex and link
/// sets) in lexicographic order of the first map reaching it.
fn visit_copies<H, F>(host: &H, spec: &ShapeSpec, mut f: F) -> Result<()>
where
    H: Host + ?Sized,
    F: FnMut(Embedding) -> ControlFlow<()>,
{
    spec.validate()?;
    if spec.is_directed() != host.is_directed() {
        return Ok(());
    }
    let m = spec.m;
    let n = host.order();
    // links whose larger endpoint is i, checked as soon as i is placed
    let mut checks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
    for (a, b) in spec.links() {
        checks[a.max(b)].push((a, b));
    }
    let mut seen: HashSet<ImageKey> = HashSet::new();
    let mut map = vec![0usize; m];
    let mut used = vec![false; n];
    let mut depth = 0usize;
    let mut next = vec![0usize; m + 1];
    // iterative search over injective maps
    loop {
        if depth == m {
            let mut verts = map.clone();
            verts.sort_unstable();
            let mut links: Vec<_> = spec
                .links()
                .into_iter()
                .map(|(a, b)| {
                    let (x, y) = (map[a], map[b]);
                    if host.is_directed() {
                        (x, y)
                    } else {
                        (x.min(y), x.max(y))
                    }
                })
                .collect();
            links.sort_unstable();
            if seen.insert((verts, links)) {
                if let ControlFlow::Break(()) = f(Embedding::new(*spec, map.clone())) {
                    return Ok(());
                }
            }
            depth -= 1;
            used[map[depth]] = false;
            continue;
        }
        let mut placed = false;
        while next[depth] < n {
            let v = next[depth];
            next[depth] += 1;
            if used[v] {
                continue;
            }
            map[depth] = v;
            if checks[depth].iter().all(|&(a, b)| host.has_link(map[a], map[b])) {
                used[v] = true;
                depth += 1;
                next[depth] = 0;
                placed = true;
                break;
            }
        }
        if !placed {
            if depth == 0 {
                return Ok(());
            }
            depth -= 1;
            used[map[depth]] = false;
        }
    }
}

/// All distinct copies of `spec` in `host`, or the first `limit` of them.
pub fn enumerate_embeddings<H: Host + ?Sized>(
    host: &H,
    spec: &ShapeSpec,
    limit: Option<usize>,
) -> Result<Vec<Embedding>> {
    let mut out = Vec::new();
    if limit == Some(0) {
        return Ok(out);
    }
    visit_copies(host, spec, |e| {
        out.push(e);
        if limit.is_some_and(|l| out.len() >= l) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(out)
}

/// First copy of `spec` whose removal leaves the host k-connected.
pub fn exists_nonseparating_bruteforce<H: Host + ?Sized>(
    host: &H,
    spec: &ShapeSpec,
    k: usize,
) -> Result<Option<Embedding>> {
    if k == 0 {
        return Err(Error::Input("k must be at least 1".into()));
    }
    let mut found = None;
    let mut alive = vec![true; host.order()];
    visit_copies(host, spec, |e| {
        for &v in &e.map {
            alive[v] = false;
        }
        let ok = is_k_connected_brute(host, &alive, k);
        for &v in &e.map {
            alive[v] = true;
        }
        if ok {
            found = Some(e);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}

/// Whether any member of `spec`'s family has a nonseparating copy.
pub fn exists_in_family<H: Host + ?Sized>(host: &H, spec: &ShapeSpec, k: usize) -> Result<Option<Embedding>> {
    for member in spec.family() {
        if let Some(e) = exists_nonseparating_bruteforce(host, &member, k)? {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Digraph, Graph};

    #[test]
    fn verify_examples() {
        let k6 = Graph::complete(6);
        let t = Embedding::new(ShapeSpec::star(3).unwrap(), vec![0, 1, 2]);
        assert!(verify_nonseparating(&k6, &t, 2).unwrap());
        let c5 = Graph::cycle(5);
        let t = Embedding::new(ShapeSpec::star(1).unwrap(), vec![0]);
        assert!(!verify_nonseparating(&c5, &t, 2).unwrap());
        assert!(verify_nonseparating(&c5, &t, 1).unwrap());
    }

    #[test]
    fn verify_reports_bad_embeddings() {
        let c5 = Graph::cycle(5);
        let t = Embedding::new(ShapeSpec::star(3).unwrap(), vec![0, 2, 1]);
        let err = verify_nonseparating(&c5, &t, 1).unwrap_err().to_string();
        assert!(err.contains("missing"), "{err}");
        let t = Embedding::new(ShapeSpec::star(3).unwrap(), vec![0, 1, 1]);
        assert!(verify_nonseparating(&c5, &t, 1)
            .unwrap_err()
            .to_string()
            .contains("twice"));
        let t = Embedding::new(ShapeSpec::out_star(2).unwrap(), vec![0, 1]);
        assert!(verify_nonseparating(&c5, &t, 1).is_err());
    }

    #[test]
    fn enumerate_examples() {
        assert!(
            enumerate_embeddings(&Digraph::cycle(4), &ShapeSpec::out_star(3).unwrap(), None)
                .unwrap()
                .is_empty()
        );
        let k4 = Graph::complete(4);
        let star3 = ShapeSpec::star(3).unwrap();
        assert_eq!(enumerate_embeddings(&k4, &star3, None).unwrap().len(), 12);
        assert_eq!(enumerate_embeddings(&k4, &star3, Some(5)).unwrap().len(), 5);
        // a path of order 3 is the same shape as a star of order 3
        assert_eq!(
            enumerate_embeddings(&k4, &ShapeSpec::path(3).unwrap(), None)
                .unwrap()
                .len(),
            12
        );
        // the edge K2 has one copy per host edge
        assert_eq!(
            enumerate_embeddings(&k4, &ShapeSpec::star(2).unwrap(), None)
                .unwrap()
                .len(),
            6
        );
    }

    #[test]
    fn brute_existence_examples() {
        for m in 3..6 {
            let g = Graph::complete(m + 3);
            let spec = ShapeSpec::star(m).unwrap();
            assert!(exists_nonseparating_bruteforce(&g, &spec, 2).unwrap().is_some());
        }
        let c4 = Digraph::cycle(4);
        assert!(
            exists_nonseparating_bruteforce(&c4, &ShapeSpec::out_star(3).unwrap(), 1)
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn brute_connectivity_matches_known_values() {
        let p = Graph::petersen();
        let alive = vec![true; 10];
        assert!(is_k_connected_brute(&p, &alive, 3));
        assert!(!is_k_connected_brute(&p, &alive, 4));
        let d = Digraph::cycle(5);
        assert!(is_k_connected_brute(&d, &[true; 5], 1));
        assert!(!is_k_connected_brute(&d, &[true; 5], 2));
    }
}
