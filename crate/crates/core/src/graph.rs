//! Simple graphs and digraphs over dense `0..n` vertex ids.
//!
//! Both representations are immutable once built. Each vertex keeps a sorted
//! neighbor list (iteration in id order is what makes every search in this
//! crate deterministic) plus a bitset row for constant-time adjacency tests.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// A set of vertices of a host graph of fixed order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        Self { bits }
    }

    /// Builds a set from members; panics if a member is `>= n`.
    pub fn from_iter_in(n: usize, members: impl IntoIterator<Item = VertexId>) -> Self {
        let mut set = Self::new(n);
        for v in members {
            set.insert(v);
        }
        set
    }

    /// Builds a set from untrusted members.
    pub fn try_from_slice(n: usize, members: &[VertexId]) -> Result<Self> {
        let mut set = Self::new(n);
        for &v in members {
            if v >= n {
                return Err(Error::Input(format!("vertex {v} out of range for order {n}")));
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Order of the host this set lives in.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, v: VertexId) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: VertexId) {
        self.bits.set(v, false);
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<VertexId> {
        self.bits.minimum()
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Self { bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Self { bits }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        Self { bits }
    }

    pub fn complement(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        Self { bits }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union_with(&mut self, other: &Self) {
        self.bits.union_with(&other.bits);
    }
}

impl Ord for VertexSet {
    /// Lexicographic on the sorted member lists.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Adjacency access shared by graphs and digraphs. For undirected graphs
/// out- and in-neighborhoods coincide.
pub trait Host {
    fn order(&self) -> usize;
    fn is_directed(&self) -> bool;
    /// Edge `{u, v}` or arc `(u, v)`.
    fn has_link(&self, u: VertexId, v: VertexId) -> bool;
    fn out_neighbors(&self, u: VertexId) -> &[VertexId];
    fn in_neighbors(&self, u: VertexId) -> &[VertexId];
}

fn check_vertex(n: usize, v: VertexId) -> Result<()> {
    if v >= n {
        Err(Error::Input(format!("vertex {v} out of range for order {n}")))
    } else {
        Ok(())
    }
}

fn bit_rows(n: usize, lists: &[Vec<VertexId>]) -> Vec<FixedBitSet> {
    lists
        .iter()
        .map(|list| {
            let mut row = FixedBitSet::with_capacity(n);
            for &v in list {
                row.insert(v);
            }
            row
        })
        .collect()
}

/// Vertex correspondence between a host and one of its induced subgraphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabel {
    /// `to_host[new] = old`
    pub to_host: Vec<VertexId>,
    /// `from_host[old] = Some(new)` for kept vertices.
    pub from_host: Vec<Option<VertexId>>,
}

impl Relabel {
    fn from_keep(keep: &VertexSet) -> Self {
        let to_host = keep.to_vec();
        let mut from_host = vec![None; keep.universe()];
        for (new, &old) in to_host.iter().enumerate() {
            from_host[old] = Some(new);
        }
        Self { to_host, from_host }
    }

    pub fn lift(&self, v: VertexId) -> VertexId {
        self.to_host[v]
    }

    /// Host set → set in subgraph coordinates, dropping vertices not kept.
    pub fn project_set(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_iter_in(self.to_host.len(), set.iter().filter_map(|v| self.from_host[v]))
    }

    pub fn lift_set(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_iter_in(self.from_host.len(), set.iter().map(|v| self.to_host[v]))
    }
}

/// Simple undirected graph.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    rows: Vec<FixedBitSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph; loops, duplicate edges and out-of-range ids are errors.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut builder = GraphBuilder::new(n);
        for &(u, v) in edges {
            builder.add_edge(u, v)?;
        }
        Ok(builder.build())
    }

    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    pub fn complete(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.add_edge(u, v).expect("fresh edge");
            }
        }
        b.build()
    }

    pub fn cycle(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            b.add_edge(u, (u + 1) % n).expect("simple cycle needs n >= 3");
        }
        b.build()
    }

    pub fn path(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for u in 1..n {
            b.add_edge(u - 1, u).expect("fresh edge");
        }
        b.build()
    }

    /// Circulant graph: `u ~ u ± j (mod n)` for each jump `j`.
    pub fn circulant(n: usize, jumps: &[usize]) -> Self {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for &j in jumps {
                let v = (u + j) % n;
                if v != u {
                    b.add_edge_if_absent(u, v);
                }
            }
        }
        b.build()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = GraphBuilder::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
        g.build()
    }

    /// Wheel: hub `0` joined to every vertex of a rim cycle `1..=rim`.
    pub fn wheel(rim: usize) -> Self {
        let mut b = GraphBuilder::new(rim + 1);
        for i in 0..rim {
            b.add_edge(0, i + 1).expect("fresh edge");
            b.add_edge(i + 1, (i + 1) % rim + 1).expect("rim >= 3");
        }
        b.build()
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Self::from_edges(10, &edges).expect("petersen is simple")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.adj[u]
    }

    pub fn neighbor_set(&self, u: VertexId) -> VertexSet {
        VertexSet {
            bits: self.rows[u].clone(),
        }
    }

    pub fn degree(&self, u: VertexId) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.rows[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// `N(U)`: vertices outside `set` adjacent to some member.
    pub fn neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.order());
        for u in set.iter() {
            for &v in &self.adj[u] {
                out.insert(v);
            }
        }
        out.difference(set)
    }

    /// Minimum degree; errors on the empty graph.
    pub fn min_degree(&self) -> Result<usize> {
        self.adj
            .iter()
            .map(Vec::len)
            .min()
            .ok_or_else(|| Error::Input("minimum degree of the empty graph".into()))
    }

    /// Subgraph induced by `keep`, with the relabeling back to `self`.
    pub fn induced(&self, keep: &VertexSet) -> Result<(Graph, Relabel)> {
        if keep.universe() != self.order() {
            return Err(Error::Input(format!(
                "vertex set over {} vertices used with a graph of order {}",
                keep.universe(),
                self.order()
            )));
        }
        let map = Relabel::from_keep(keep);
        let mut b = GraphBuilder::new(map.to_host.len());
        for (new_u, &u) in map.to_host.iter().enumerate() {
            for &v in &self.adj[u] {
                if let Some(new_v) = map.from_host[v] {
                    if new_u < new_v {
                        b.add_edge(new_u, new_v).expect("induced edge is fresh");
                    }
                }
            }
        }
        Ok((b.build(), map))
    }

    /// `G - U`.
    pub fn delete(&self, drop: &VertexSet) -> Result<(Graph, Relabel)> {
        if drop.universe() != self.order() {
            return Err(Error::Input(format!(
                "vertex set over {} vertices used with a graph of order {}",
                drop.universe(),
                self.order()
            )));
        }
        self.induced(&drop.complement())
    }

    /// Same vertex set with extra edges added (duplicates ignored).
    pub fn with_edges(&self, extra: impl IntoIterator<Item = (VertexId, VertexId)>) -> Graph {
        let mut b = GraphBuilder::from_graph(self);
        for (u, v) in extra {
            if u != v {
                b.add_edge_if_absent(u, v);
            }
        }
        b.build()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Host for Graph {
    fn order(&self) -> usize {
        self.adj.len()
    }
    fn is_directed(&self) -> bool {
        false
    }
    fn has_link(&self, u: VertexId, v: VertexId) -> bool {
        self.has_edge(u, v)
    }
    fn out_neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.adj[u]
    }
    fn in_neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.adj[u]
    }
}

/// Single-owner builder for [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    edges: BTreeSet<(VertexId, VertexId)>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        Self {
            n: g.order(),
            edges: g.edges().collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        check_vertex(self.n, u)?;
        check_vertex(self.n, v)?;
        if u == v {
            return Err(Error::Input(format!("loop at vertex {u}")));
        }
        if !self.edges.insert((u.min(v), u.max(v))) {
            return Err(Error::Input(format!("duplicate edge {u} {v}")));
        }
        Ok(())
    }

    /// Returns whether the edge was new. Panics on loops or bad ids.
    pub fn add_edge_if_absent(&mut self, u: VertexId, v: VertexId) -> bool {
        assert!(u != v && u < self.n && v < self.n, "bad edge {u} {v}");
        self.edges.insert((u.min(v), u.max(v)))
    }

    pub fn build(self) -> Graph {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let rows = bit_rows(self.n, &adj);
        Graph {
            adj,
            rows,
            edge_count: self.edges.len(),
        }
    }
}

/// Simple digraph: no loops, no parallel arcs; digons are allowed.
#[derive(Clone)]
pub struct Digraph {
    out: Vec<Vec<VertexId>>,
    inn: Vec<Vec<VertexId>>,
    out_rows: Vec<FixedBitSet>,
    arc_count: usize,
}

impl Digraph {
    pub fn from_arcs(n: usize, arcs: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut b = DigraphBuilder::new(n);
        for &(u, v) in arcs {
            b.add_arc(u, v)?;
        }
        Ok(b.build())
    }

    /// Every ordered pair of distinct vertices is an arc.
    pub fn complete(n: usize) -> Self {
        let mut b = DigraphBuilder::new(n);
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    b.add_arc(u, v).expect("fresh arc");
                }
            }
        }
        b.build()
    }

    /// Directed cycle `0 → 1 → … → n-1 → 0`.
    pub fn cycle(n: usize) -> Self {
        let arcs: Vec<_> = (0..n).map(|u| (u, (u + 1) % n)).collect();
        Self::from_arcs(n, &arcs).expect("n >= 2")
    }

    /// Both orientations of every edge of `g`.
    pub fn bidirected(g: &Graph) -> Self {
        let mut b = DigraphBuilder::new(g.order());
        for (u, v) in g.edges() {
            b.add_arc(u, v).expect("fresh arc");
            b.add_arc(v, u).expect("fresh arc");
        }
        b.build()
    }

    pub fn order(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn out_neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.out[u]
    }

    pub fn in_neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.inn[u]
    }

    pub fn out_degree(&self, u: VertexId) -> usize {
        self.out[u].len()
    }

    pub fn in_degree(&self, u: VertexId) -> usize {
        self.inn[u].len()
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.out_rows[u].contains(v)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    pub fn min_out_degree(&self) -> Result<usize> {
        self.out
            .iter()
            .map(Vec::len)
            .min()
            .ok_or_else(|| Error::Input("minimum outdegree of the empty digraph".into()))
    }

    pub fn min_in_degree(&self) -> Result<usize> {
        self.inn
            .iter()
            .map(Vec::len)
            .min()
            .ok_or_else(|| Error::Input("minimum indegree of the empty digraph".into()))
    }

    /// Minimum semi-degree `min(δ⁺, δ⁻)`.
    pub fn semi_degree(&self) -> Result<usize> {
        Ok(self.min_out_degree()?.min(self.min_in_degree()?))
    }

    pub fn induced(&self, keep: &VertexSet) -> Result<(Digraph, Relabel)> {
        if keep.universe() != self.order() {
            return Err(Error::Input(format!(
                "vertex set over {} vertices used with a digraph of order {}",
                keep.universe(),
                self.order()
            )));
        }
        let map = Relabel::from_keep(keep);
        let mut b = DigraphBuilder::new(map.to_host.len());
        for (new_u, &u) in map.to_host.iter().enumerate() {
            for &v in &self.out[u] {
                if let Some(new_v) = map.from_host[v] {
                    b.add_arc(new_u, new_v).expect("induced arc is fresh");
                }
            }
        }
        Ok((b.build(), map))
    }

    pub fn delete(&self, drop: &VertexSet) -> Result<(Digraph, Relabel)> {
        if drop.universe() != self.order() {
            return Err(Error::Input(format!(
                "vertex set over {} vertices used with a digraph of order {}",
                drop.universe(),
                self.order()
            )));
        }
        self.induced(&drop.complement())
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.order())
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.out == other.out
    }
}

impl Eq for Digraph {}

impl Host for Digraph {
    fn order(&self) -> usize {
        self.out.len()
    }
    fn is_directed(&self) -> bool {
        true
    }
    fn has_link(&self, u: VertexId, v: VertexId) -> bool {
        self.has_arc(u, v)
    }
    fn out_neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.out[u]
    }
    fn in_neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.inn[u]
    }
}

#[derive(Clone, Debug)]
pub struct DigraphBuilder {
    n: usize,
    arcs: BTreeSet<(VertexId, VertexId)>,
}

impl DigraphBuilder {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            arcs: BTreeSet::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.arcs.contains(&(u, v))
    }

    pub fn add_arc(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        check_vertex(self.n, u)?;
        check_vertex(self.n, v)?;
        if u == v {
            return Err(Error::Input(format!("loop at vertex {u}")));
        }
        if !self.arcs.insert((u, v)) {
            return Err(Error::Input(format!("duplicate arc {u} {v}")));
        }
        Ok(())
    }

    pub fn add_arc_if_absent(&mut self, u: VertexId, v: VertexId) -> bool {
        assert!(u != v && u < self.n && v < self.n, "bad arc {u} {v}");
        self.arcs.insert((u, v))
    }

    pub fn build(self) -> Digraph {
        let mut out = vec![Vec::new(); self.n];
        let mut inn = vec![Vec::new(); self.n];
        for &(u, v) in &self.arcs {
            out[u].push(v);
            inn[v].push(u);
        }
        for list in out.iter_mut().chain(inn.iter_mut()) {
            list.sort_unstable();
        }
        let out_rows = bit_rows(self.n, &out);
        Digraph {
            out,
            inn,
            out_rows,
            arc_count: self.arcs.len(),
        }
    }
}

/// Either kind of host, as read from an edge-list file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyGraph {
    Undirected(Graph),
    Directed(Digraph),
}

impl AnyGraph {
    pub fn as_graph(&self) -> Option<&Graph> {
        match self {
            AnyGraph::Undirected(g) => Some(g),
            AnyGraph::Directed(_) => None,
        }
    }

    pub fn as_digraph(&self) -> Option<&Digraph> {
        match self {
            AnyGraph::Directed(d) => Some(d),
            AnyGraph::Undirected(_) => None,
        }
    }

    /// Parses the edge-list text format:
    ///
    /// ```text
    /// # comment
    /// n m directed|undirected
    /// u v
    /// ...
    /// ```
    ///
    /// Exactly `m` edge lines must follow. Loops and duplicates are rejected.
    pub fn parse_edge_list(text: &str) -> Result<AnyGraph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "missing header line".into(),
        })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: hline,
                msg: format!("expected `n m directed|undirected`, got `{header}`"),
            });
        }
        let parse_count = |s: &str, what: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line: hline,
                msg: format!("bad {what} `{s}`"),
            })
        };
        let n = parse_count(fields[0], "vertex count")?;
        let m = parse_count(fields[1], "edge count")?;
        let directed = match fields[2] {
            "directed" => true,
            "undirected" => false,
            other => {
                return Err(Error::Parse {
                    line: hline,
                    msg: format!("expected `directed` or `undirected`, got `{other}`"),
                })
            }
        };

        let mut gb = GraphBuilder::new(n);
        let mut db = DigraphBuilder::new(n);
        let mut seen = 0usize;
        for (lineno, line) in lines {
            let ends: Vec<&str> = line.split_whitespace().collect();
            if ends.len() != 2 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("expected `u v`, got `{line}`"),
                });
            }
            let parse_end = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("bad vertex id `{s}`"),
                })
            };
            let (u, v) = (parse_end(ends[0])?, parse_end(ends[1])?);
            let added = if directed { db.add_arc(u, v) } else { gb.add_edge(u, v) };
            added.map_err(|e| Error::Parse {
                line: lineno,
                msg: e.to_string(),
            })?;
            seen += 1;
        }
        if seen != m {
            return Err(Error::Parse {
                line: hline,
                msg: format!("header declares {m} edges, found {seen}"),
            });
        }
        Ok(if directed {
            AnyGraph::Directed(db.build())
        } else {
            AnyGraph::Undirected(gb.build())
        })
    }

    /// Canonical edge-list text: sorted edges (`u < v`) or sorted arcs.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        match self {
            AnyGraph::Undirected(g) => {
                out.push_str(&format!("{} {} undirected\n", g.order(), g.edge_count()));
                for (u, v) in g.edges() {
                    out.push_str(&format!("{u} {v}\n"));
                }
            }
            AnyGraph::Directed(d) => {
                out.push_str(&format!("{} {} directed\n", d.order(), d.arc_count()));
                for (u, v) in d.arcs() {
                    out.push_str(&format!("{u} {v}\n"));
                }
            }
        }
        out
    }
}

impl Host for AnyGraph {
    fn order(&self) -> usize {
        match self {
            AnyGraph::Undirected(g) => g.order(),
            AnyGraph::Directed(d) => d.order(),
        }
    }
    fn is_directed(&self) -> bool {
        matches!(self, AnyGraph::Directed(_))
    }
    fn has_link(&self, u: VertexId, v: VertexId) -> bool {
        match self {
            AnyGraph::Undirected(g) => g.has_edge(u, v),
            AnyGraph::Directed(d) => d.has_arc(u, v),
        }
    }
    fn out_neighbors(&self, u: VertexId) -> &[VertexId] {
        match self {
            AnyGraph::Undirected(g) => g.neighbors(u),
            AnyGraph::Directed(d) => d.out_neighbors(u),
        }
    }
    fn in_neighbors(&self, u: VertexId) -> &[VertexId] {
        match self {
            AnyGraph::Undirected(g) => g.neighbors(u),
            AnyGraph::Directed(d) => d.in_neighbors(u),
        }
    }
}

impl From<Graph> for AnyGraph {
    fn from(g: Graph) -> Self {
        AnyGraph::Undirected(g)
    }
}

impl From<Digraph> for AnyGraph {
    fn from(d: Digraph) -> Self {
        AnyGraph::Directed(d)
    }
}
