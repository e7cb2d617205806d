//! Tree shapes, their canonical construction, and embeddings into hosts.
//!
//! Canonical numbering puts centers first, then leaves, then path vertices.
//! Every vertex `i ≥ 1` has exactly one shape neighbor with a smaller index,
//! which the backtracking search uses as its parent.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{AnyGraph, Digraph, Graph, Host, VertexId, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ShapeKind {
    Star,
    Path,
    DoubleStar,
    PathStar,
    PathDoubleStar1,
    PathDoubleStar2,
    OutStar,
    InStar,
    OutDoubleStar,
    InDoubleStar,
    OutInDoubleStar,
}

impl ShapeKind {
    pub fn is_directed(self) -> bool {
        matches!(
            self,
            ShapeKind::OutStar
                | ShapeKind::InStar
                | ShapeKind::OutDoubleStar
                | ShapeKind::InDoubleStar
                | ShapeKind::OutInDoubleStar
        )
    }

    pub fn tag(self) -> &'static str {
        match self {
            ShapeKind::Star => "star",
            ShapeKind::Path => "path",
            ShapeKind::DoubleStar => "dstar",
            ShapeKind::PathStar => "ps",
            ShapeKind::PathDoubleStar1 => "pds1",
            ShapeKind::PathDoubleStar2 => "pds2",
            ShapeKind::OutStar => "os",
            ShapeKind::InStar => "is",
            ShapeKind::OutDoubleStar => "ods",
            ShapeKind::InDoubleStar => "ids",
            ShapeKind::OutInDoubleStar => "oids",
        }
    }
}

/// A shape of order `m`.
///
/// Meaning of `r` and `s` by kind:
/// - `Star`, `Path`, `OutStar`, `InStar`: unused (zero).
/// - `DoubleStar` and the oriented double-stars: leaf counts at the centers
///   `u` and `v`, with `r + s = m − 2`.
/// - `PathStar`: `r` is the path length (path order `r + 1`).
/// - `PathDoubleStar1/2`: `r` is the path length and `s` the leaf count of
///   the larger center of the double-star part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShapeSpec {
    pub kind: ShapeKind,
    pub m: usize,
    pub r: usize,
    pub s: usize,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

impl ShapeSpec {
    pub fn star(m: usize) -> Result<Self> {
        Self::checked(ShapeKind::Star, m, 0, 0)
    }

    pub fn path(m: usize) -> Result<Self> {
        Self::checked(ShapeKind::Path, m, 0, 0)
    }

    /// Double-star whose centers have `a` and `m − 2 − a` leaves.
    pub fn double_star(m: usize, a: usize) -> Result<Self> {
        if a + 2 > m {
            return Err(invalid(format!(
                "double-star of order {m} cannot have {a} leaves at one center"
            )));
        }
        Self::checked(ShapeKind::DoubleStar, m, a, m - 2 - a)
    }

    pub fn path_star(r: usize, m: usize) -> Result<Self> {
        Self::checked(ShapeKind::PathStar, m, r, 0)
    }

    /// Default split for the double-star part: the larger center takes
    /// ⌈(m − r − 2)/2⌉ leaves.
    pub fn default_pds_split(r: usize, m: usize) -> usize {
        m.saturating_sub(r + 2).div_ceil(2)
    }

    /// Path-double-star; `second` selects attachment at the smaller center.
    /// Equal centers make the two variants isomorphic, so that case is
    /// normalized to the first variant.
    pub fn path_double_star(second: bool, r: usize, m: usize, a: usize) -> Result<Self> {
        let q = m.saturating_sub(r);
        let balanced = q >= 2 && 2 * a == q - 2;
        let kind = if second && !balanced {
            ShapeKind::PathDoubleStar2
        } else {
            ShapeKind::PathDoubleStar1
        };
        Self::checked(kind, m, r, a)
    }

    pub fn out_star(m: usize) -> Result<Self> {
        Self::checked(ShapeKind::OutStar, m, 0, 0)
    }

    pub fn in_star(m: usize) -> Result<Self> {
        Self::checked(ShapeKind::InStar, m, 0, 0)
    }

    /// One of `OutDoubleStar`, `InDoubleStar`, `OutInDoubleStar`.
    pub fn oriented_double_star(kind: ShapeKind, m: usize, r: usize, s: usize) -> Result<Self> {
        if !matches!(
            kind,
            ShapeKind::OutDoubleStar | ShapeKind::InDoubleStar | ShapeKind::OutInDoubleStar
        ) {
            return Err(invalid(format!("{kind:?} is not an oriented double-star")));
        }
        Self::checked(kind, m, r, s)
    }

    fn checked(kind: ShapeKind, m: usize, r: usize, s: usize) -> Result<Self> {
        let spec = ShapeSpec { kind, m, r, s };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let ShapeSpec { kind, m, r, s } = *self;
        let tag = kind.tag();
        match kind {
            ShapeKind::Star | ShapeKind::Path | ShapeKind::OutStar | ShapeKind::InStar => {
                if m == 0 {
                    return Err(invalid(format!("{tag}: order must be at least 1")));
                }
                if r != 0 || s != 0 {
                    return Err(invalid(format!("{tag}: takes no split parameters")));
                }
            }
            ShapeKind::DoubleStar | ShapeKind::OutDoubleStar | ShapeKind::InDoubleStar | ShapeKind::OutInDoubleStar => {
                if m < 4 || r < 1 || s < 1 || r + s + 2 != m {
                    return Err(invalid(format!(
                        "{tag}: need 1 ≤ r, s ≤ m − 3 and r + s = m − 2 (m = {m}, r = {r}, s = {s})"
                    )));
                }
            }
            ShapeKind::PathStar => {
                if r < 1 || r + 3 > m || s != 0 {
                    return Err(invalid(format!("{tag}: need 1 ≤ r ≤ m − 3 (m = {m}, r = {r})")));
                }
            }
            ShapeKind::PathDoubleStar1 | ShapeKind::PathDoubleStar2 => {
                if r < 1 || r + 4 > m {
                    return Err(invalid(format!("{tag}: need 1 ≤ r ≤ m − 4 (m = {m}, r = {r})")));
                }
                let q = m - r;
                if s + 3 > q || 2 * s + 2 < q {
                    return Err(invalid(format!(
                        "{tag}: larger center needs between ⌈{}/2⌉ and {} leaves, got {s}",
                        q - 2,
                        q - 3
                    )));
                }
                if kind == ShapeKind::PathDoubleStar2 && 2 * s + 2 == q {
                    return Err(invalid(format!("{tag}: centers have equal degree; use pds1")));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn is_directed(&self) -> bool {
        self.kind.is_directed()
    }

    /// The shapes a finder for this spec may return.
    pub fn family(&self) -> Vec<ShapeSpec> {
        let with = |kind| ShapeSpec { kind, ..*self };
        match self.kind {
            ShapeKind::OutStar | ShapeKind::InStar => {
                vec![with(ShapeKind::OutStar), with(ShapeKind::InStar)]
            }
            ShapeKind::OutDoubleStar | ShapeKind::InDoubleStar | ShapeKind::OutInDoubleStar => vec![
                with(ShapeKind::OutDoubleStar),
                with(ShapeKind::InDoubleStar),
                with(ShapeKind::OutInDoubleStar),
            ],
            ShapeKind::PathDoubleStar1 | ShapeKind::PathDoubleStar2 => {
                let mut v = vec![with(ShapeKind::PathDoubleStar1)];
                if with(ShapeKind::PathDoubleStar2).validate().is_ok() {
                    v.push(with(ShapeKind::PathDoubleStar2));
                }
                v
            }
            _ => vec![*self],
        }
    }

    /// Order of the star or double-star part of a path shape.
    fn head_order(&self) -> usize {
        self.m - self.r
    }

    /// Shape vertex where the path hangs, for path shapes.
    pub fn attachment_index(&self) -> Option<usize> {
        match self.kind {
            ShapeKind::PathStar => Some(1),
            ShapeKind::PathDoubleStar1 => Some(2),
            ShapeKind::PathDoubleStar2 => Some(2 + self.s),
            _ => None,
        }
    }

    /// Edges (undirected, `a < b` not guaranteed) or arcs of the canonical
    /// shape, listed so that the second endpoint of the parent link is the
    /// child.
    pub fn links(&self) -> Vec<(usize, usize)> {
        let ShapeSpec { kind, m, r, s } = *self;
        let mut out = Vec::with_capacity(m.saturating_sub(1));
        match kind {
            ShapeKind::Star | ShapeKind::OutStar => out.extend((1..m).map(|i| (0, i))),
            ShapeKind::InStar => out.extend((1..m).map(|i| (i, 0))),
            ShapeKind::Path => out.extend((1..m).map(|i| (i - 1, i))),
            ShapeKind::DoubleStar | ShapeKind::OutDoubleStar => {
                out.push((0, 1));
                out.extend((2..2 + r).map(|i| (0, i)));
                out.extend((2 + r..m).map(|i| (1, i)));
            }
            ShapeKind::InDoubleStar => {
                out.push((0, 1));
                out.extend((2..2 + r).map(|i| (i, 0)));
                out.extend((2 + r..m).map(|i| (i, 1)));
            }
            ShapeKind::OutInDoubleStar => {
                out.push((0, 1));
                out.extend((2..2 + r).map(|i| (0, i)));
                out.extend((2 + r..m).map(|i| (i, 1)));
            }
            ShapeKind::PathStar => {
                let q = self.head_order();
                out.extend((1..q).map(|i| (0, i)));
                out.push((1, q));
                out.extend((q + 1..m).map(|i| (i - 1, i)));
            }
            ShapeKind::PathDoubleStar1 | ShapeKind::PathDoubleStar2 => {
                let q = self.head_order();
                out.push((0, 1));
                out.extend((2..2 + s).map(|i| (0, i)));
                out.extend((2 + s..q).map(|i| (1, i)));
                out.push((self.attachment_index().expect("path shape"), q));
                out.extend((q + 1..m).map(|i| (i - 1, i)));
            }
        }
        out
    }
}

impl fmt::Display for ShapeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ShapeSpec { kind, m, r, s } = *self;
        let tag = kind.tag();
        match kind {
            ShapeKind::Star | ShapeKind::Path | ShapeKind::OutStar | ShapeKind::InStar => {
                write!(f, "{tag}:{m}")
            }
            ShapeKind::DoubleStar => write!(f, "{tag}:{m}:{r}"),
            ShapeKind::PathStar => write!(f, "{tag}:{r}:{m}"),
            ShapeKind::PathDoubleStar1 | ShapeKind::PathDoubleStar2 => {
                write!(f, "{tag}:{r}:{m}:{s}")
            }
            _ => write!(f, "{tag}:{m}:{r}:{s}"),
        }
    }
}

impl FromStr for ShapeSpec {
    type Err = Error;

    /// Grammar: `star:m`, `path:m`, `dstar:m:a`, `ps:r:m`, `pds1:r:m[:a]`,
    /// `pds2:r:m[:a]`, `os:m`, `is:m`, `ods:m:r:s`, `ids:m:r:s`, `oids:m:r:s`.
    fn from_str(text: &str) -> Result<Self> {
        let mut parts = text.trim().split(':');
        let tag = parts.next().unwrap_or("");
        let nums = parts
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| invalid(format!("shape `{text}`: `{p}` is not a number")))
            })
            .collect::<Result<Vec<_>>>()?;
        let arity = |want: &[usize]| {
            if want.contains(&nums.len()) {
                Ok(())
            } else {
                Err(invalid(format!(
                    "shape `{text}`: `{tag}` takes {want:?} numbers, got {}",
                    nums.len()
                )))
            }
        };
        match tag {
            "star" => arity(&[1]).and_then(|_| ShapeSpec::star(nums[0])),
            "path" => arity(&[1]).and_then(|_| ShapeSpec::path(nums[0])),
            "os" => arity(&[1]).and_then(|_| ShapeSpec::out_star(nums[0])),
            "is" => arity(&[1]).and_then(|_| ShapeSpec::in_star(nums[0])),
            "dstar" => arity(&[2]).and_then(|_| ShapeSpec::double_star(nums[0], nums[1])),
            "ps" => arity(&[2]).and_then(|_| ShapeSpec::path_star(nums[0], nums[1])),
            "pds1" | "pds2" => arity(&[2, 3]).and_then(|_| {
                let (r, m) = (nums[0], nums[1]);
                let a = nums
                    .get(2)
                    .copied()
                    .unwrap_or_else(|| ShapeSpec::default_pds_split(r, m));
                ShapeSpec::path_double_star(tag == "pds2", r, m, a)
            }),
            "ods" | "ids" | "oids" => arity(&[3]).and_then(|_| {
                let kind = match tag {
                    "ods" => ShapeKind::OutDoubleStar,
                    "ids" => ShapeKind::InDoubleStar,
                    _ => ShapeKind::OutInDoubleStar,
                };
                ShapeSpec::oriented_double_star(kind, nums[0], nums[1], nums[2])
            }),
            _ => Err(invalid(format!("unknown shape `{tag}` in `{text}`"))),
        }
    }
}

/// The abstract shape as a concrete graph or digraph.
pub fn build_shape(spec: &ShapeSpec) -> Result<AnyGraph> {
    spec.validate()?;
    let links = spec.links();
    Ok(if spec.is_directed() {
        AnyGraph::Directed(Digraph::from_arcs(spec.m, &links)?)
    } else {
        AnyGraph::Undirected(Graph::from_edges(spec.m, &links)?)
    })
}

/// Injective map from shape vertices (canonical numbering) into a host.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Embedding {
    pub shape: ShapeSpec,
    /// `map[i]` is the host vertex of shape vertex `i`.
    pub map: Vec<VertexId>,
}

impl Embedding {
    pub fn new(shape: ShapeSpec, map: Vec<VertexId>) -> Self {
        Self { shape, map }
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_iter_in(n, self.map.iter().copied())
    }

    /// Host images of the shape's edges or arcs.
    pub fn host_links(&self) -> Vec<(VertexId, VertexId)> {
        self.shape
            .links()
            .into_iter()
            .map(|(a, b)| (self.map[a], self.map[b]))
            .collect()
    }

    pub fn centers(&self) -> Vec<VertexId> {
        match self.shape.kind {
            ShapeKind::Path => Vec::new(),
            ShapeKind::Star | ShapeKind::OutStar | ShapeKind::InStar | ShapeKind::PathStar => {
                vec![self.map[0]]
            }
            _ => vec![self.map[0], self.map[1]],
        }
    }

    /// Center edge or center arc `(u, v)` of double-star shapes.
    pub fn center_arc(&self) -> Option<(VertexId, VertexId)> {
        match self.shape.kind {
            ShapeKind::DoubleStar
            | ShapeKind::OutDoubleStar
            | ShapeKind::InDoubleStar
            | ShapeKind::OutInDoubleStar
            | ShapeKind::PathDoubleStar1
            | ShapeKind::PathDoubleStar2 => Some((self.map[0], self.map[1])),
            _ => None,
        }
    }

    /// Host vertex where the path part hangs.
    pub fn attachment(&self) -> Option<VertexId> {
        self.shape.attachment_index().map(|i| self.map[i])
    }

    /// Injectivity, range, and edge/arc fidelity against `host`.
    pub fn validate<H: Host + ?Sized>(&self, host: &H) -> Result<()> {
        self.shape.validate()?;
        if self.shape.is_directed() != host.is_directed() {
            return Err(invalid(format!(
                "{} shape in a {} host",
                if self.shape.is_directed() {
                    "directed"
                } else {
                    "undirected"
                },
                if host.is_directed() { "directed" } else { "undirected" },
            )));
        }
        if self.map.len() != self.shape.m {
            return Err(invalid(format!(
                "map has {} entries for a shape of order {}",
                self.map.len(),
                self.shape.m
            )));
        }
        let n = host.order();
        let mut seen = VertexSet::new(n);
        for (i, &v) in self.map.iter().enumerate() {
            if v >= n {
                return Err(invalid(format!("shape vertex {i} maps to {v}, outside the host")));
            }
            if seen.contains(v) {
                return Err(invalid(format!("host vertex {v} used twice")));
            }
            seen.insert(v);
        }
        for (a, b) in self.shape.links() {
            let (x, y) = (self.map[a], self.map[b]);
            if !host.has_link(x, y) {
                return Err(invalid(format!(
                    "shape link {a}–{b} maps to {x}–{y}, which the host lacks"
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.shape, self.map)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Dir {
    /// parent → child, or undirected
    Out,
    /// child → parent
    In,
}

struct Plan {
    parent: Vec<Option<(usize, Dir)>>,
    /// Previous free sibling leaf whose image must be smaller.
    order_after: Vec<Option<usize>>,
}

fn plan(spec: &ShapeSpec, pinned: &[Option<VertexId>]) -> Plan {
    let m = spec.m;
    let links = spec.links();
    let mut degree = vec![0usize; m];
    let mut parent = vec![None; m];
    for &(a, b) in &links {
        degree[a] += 1;
        degree[b] += 1;
        let (p, c, dir) = if a < b { (a, b, Dir::Out) } else { (b, a, Dir::In) };
        let dir = if spec.is_directed() { dir } else { Dir::Out };
        parent[c] = Some((p, dir));
    }
    let mut order_after = vec![None; m];
    for i in 1..m {
        if degree[i] != 1 || pinned[i].is_some() {
            continue;
        }
        order_after[i] = (1..i)
            .rev()
            .find(|&j| degree[j] == 1 && pinned[j].is_none() && parent[j] == parent[i]);
    }
    Plan { parent, order_after }
}

fn resolve_pins(
    n: usize,
    spec: &ShapeSpec,
    forbidden: &VertexSet,
    anchors: &[(usize, VertexId)],
) -> Result<Vec<Option<VertexId>>> {
    let mut pinned = vec![None; spec.m];
    for &(i, v) in anchors {
        if i >= spec.m || v >= n {
            return Err(invalid(format!("anchor {i} → {v} is out of range")));
        }
        if forbidden.contains(v) {
            return Err(invalid(format!("anchor {i} → {v} hits a forbidden vertex")));
        }
        match pinned[i] {
            Some(w) if w != v => return Err(invalid(format!("shape vertex {i} anchored to both {w} and {v}"))),
            _ => pinned[i] = Some(v),
        }
    }
    let mut hosts: Vec<_> = pinned.iter().flatten().collect();
    hosts.sort();
    if hosts.windows(2).any(|w| w[0] == w[1]) {
        return Err(invalid("two shape vertices anchored to one host vertex"));
    }
    Ok(pinned)
}

/// Calls `visit` on every embedding avoiding `forbidden` and honoring
/// `anchors` (shape vertex, host vertex), in lexicographic order of the map.
/// Interchangeable leaves of one center are enumerated once, as increasing
/// host ids. Stops early when `visit` breaks.
pub fn for_each_embedding<H, F>(
    host: &H,
    spec: &ShapeSpec,
    forbidden: &VertexSet,
    anchors: &[(usize, VertexId)],
    mut visit: F,
) -> Result<ControlFlow<()>>
where
    H: Host + ?Sized,
    F: FnMut(&[VertexId]) -> ControlFlow<()>,
{
    spec.validate()?;
    let n = host.order();
    if spec.is_directed() != host.is_directed() {
        return Err(invalid(format!("shape {spec} does not match the host's directedness")));
    }
    if forbidden.universe() != n {
        return Err(invalid("forbidden set over the wrong vertex universe"));
    }
    let pinned = resolve_pins(n, spec, forbidden, anchors)?;
    let plan = plan(spec, &pinned);
    let mut used = vec![false; n];
    let mut map = Vec::with_capacity(spec.m);
    Ok(extend(
        host, spec.m, forbidden, &pinned, &plan, &mut used, &mut map, &mut visit,
    ))
}

#[allow(clippy::too_many_arguments)]
fn extend<H, F>(
    host: &H,
    m: usize,
    forbidden: &VertexSet,
    pinned: &[Option<VertexId>],
    plan: &Plan,
    used: &mut [bool],
    map: &mut Vec<VertexId>,
    visit: &mut F,
) -> ControlFlow<()>
where
    H: Host + ?Sized,
    F: FnMut(&[VertexId]) -> ControlFlow<()>,
{
    let i = map.len();
    if i == m {
        return visit(map);
    }
    let lower = plan.order_after[i].map(|j| map[j]);
    let mut try_vertex = |v: VertexId, used: &mut [bool], map: &mut Vec<VertexId>| {
        if used[v] || forbidden.contains(v) || lower.is_some_and(|l| v <= l) {
            return ControlFlow::Continue(());
        }
        used[v] = true;
        map.push(v);
        let flow = extend(host, m, forbidden, pinned, plan, used, map, visit);
        map.pop();
        used[v] = false;
        flow
    };
    match (plan.parent[i], pinned[i]) {
        (None, Some(v)) => try_vertex(v, used, map),
        (None, None) => {
            for v in 0..host.order() {
                try_vertex(v, used, map)?;
            }
            ControlFlow::Continue(())
        }
        (Some((p, dir)), pin) => {
            let x = map[p];
            let candidates = match dir {
                Dir::Out => host.out_neighbors(x),
                Dir::In => host.in_neighbors(x),
            };
            match pin {
                Some(v) if candidates.binary_search(&v).is_ok() => try_vertex(v, used, map),
                Some(_) => ControlFlow::Continue(()),
                None => {
                    for &v in candidates {
                        try_vertex(v, used, map)?;
                    }
                    ControlFlow::Continue(())
                }
            }
        }
    }
}

/// First embedding (lexicographic) avoiding `forbidden` and honoring
/// `anchors`, or `None` when the exhaustive search finds nothing.
pub fn embed_shape<H: Host + ?Sized>(
    host: &H,
    spec: &ShapeSpec,
    forbidden: &VertexSet,
    anchors: &[(usize, VertexId)],
) -> Result<Option<Embedding>> {
    let mut found = None;
    let _ = for_each_embedding(host, spec, forbidden, anchors, |map| {
        found = Some(map.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(found.map(|map| Embedding::new(*spec, map)))
}

/// Leaf pools of the two centers for an oriented double-star on arc (u, v).
fn leaf_pools(
    d: &Digraph,
    u: VertexId,
    v: VertexId,
    kind: ShapeKind,
    forbidden: &VertexSet,
) -> (Vec<VertexId>, Vec<VertexId>) {
    let (pu, pv) = match kind {
        ShapeKind::OutDoubleStar => (d.out_neighbors(u), d.out_neighbors(v)),
        ShapeKind::InDoubleStar => (d.in_neighbors(u), d.in_neighbors(v)),
        _ => (d.out_neighbors(u), d.in_neighbors(v)),
    };
    let keep = |x: &&VertexId| **x != u && **x != v && !forbidden.contains(**x);
    (
        pu.iter().filter(keep).copied().collect(),
        pv.iter().filter(keep).copied().collect(),
    )
}

/// Oriented double-star of the given kind with center arc `(u, v)`, `r`
/// leaves at `u` and `s` at `v`, avoiding `forbidden`.
///
/// Leaves are assigned exactly: each center first takes its exclusive
/// candidates (smallest first), then the shared ones fill the remaining
/// demand. Returns `None` iff no assignment exists.
#[allow(clippy::too_many_arguments)]
pub fn double_star_from_arc(
    d: &Digraph,
    u: VertexId,
    v: VertexId,
    kind: ShapeKind,
    m: usize,
    r: usize,
    s: usize,
    forbidden: &VertexSet,
) -> Result<Option<Embedding>> {
    let spec = ShapeSpec::oriented_double_star(kind, m, r, s)?;
    let n = d.order();
    if u >= n || v >= n || !d.has_arc(u, v) {
        return Err(invalid(format!("({u}, {v}) is not an arc")));
    }
    if forbidden.universe() != n {
        return Err(invalid("forbidden set over the wrong vertex universe"));
    }
    if forbidden.contains(u) || forbidden.contains(v) {
        return Ok(None);
    }
    let (pool_u, pool_v) = leaf_pools(d, u, v, kind, forbidden);
    let in_u = VertexSet::from_iter_in(n, pool_u.iter().copied());
    let in_v = VertexSet::from_iter_in(n, pool_v.iter().copied());
    if in_u.len() < r || in_v.len() < s || in_u.union(&in_v).len() < r + s {
        return Ok(None);
    }
    let only_u = in_u.difference(&in_v);
    let only_v = in_v.difference(&in_u);
    let common = in_u.intersection(&in_v);
    let mut shared = common.iter();
    let mut leaves_u: Vec<_> = only_u.iter().take(r).collect();
    while leaves_u.len() < r {
        leaves_u.push(shared.next().expect("counting bound"));
    }
    let mut leaves_v: Vec<_> = only_v.iter().take(s).collect();
    while leaves_v.len() < s {
        leaves_v.push(shared.next().expect("counting bound"));
    }
    leaves_u.sort_unstable();
    leaves_v.sort_unstable();
    let mut map = vec![u, v];
    map.extend(leaves_u);
    map.extend(leaves_v);
    let emb = Embedding::new(spec, map);
    emb.validate(d)?;
    Ok(Some(emb))
}
