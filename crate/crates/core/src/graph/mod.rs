//! Directed mixed graphs.
//!
//! A [`Dmg`] has directed edges (ordered pairs) and bidirected edges
//! (unordered pairs). Loops of both kinds are allowed, so a vertex pair
//! carries at most `α → β`, `β → α` and `α ↔ β`, and a vertex carries at most
//! one directed and one bidirected loop.
//!
//! Graphs are immutable: every operation that changes the edge set returns a
//! new graph.

mod undirected;
mod walk;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{DmgError, Result};
use crate::vertex_set::VertexSet;

pub use undirected::UndirectedGraph;
pub use walk::{Route, Step, Walk};

/// Dense vertex index into a graph's label table.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(u32);

impl VertexId {
    pub fn new(index: usize) -> Self {
        VertexId(u32::try_from(index).expect("vertex index exceeds u32"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl From<usize> for VertexId {
    fn from(index: usize) -> Self {
        VertexId::new(index)
    }
}

/// Edge mark at one end of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mark {
    Tail,
    Head,
}

/// A directed or bidirected edge.
///
/// Bidirected edges are stored with the smaller index first; use
/// [`Edge::bidirected`] to build one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Edge {
    Directed { from: VertexId, to: VertexId },
    Bidirected(VertexId, VertexId),
}

impl Edge {
    pub fn directed(from: VertexId, to: VertexId) -> Self {
        Edge::Directed { from, to }
    }

    pub fn bidirected(a: VertexId, b: VertexId) -> Self {
        Edge::Bidirected(a.min(b), a.max(b))
    }

    /// Same edge with bidirected endpoints sorted.
    pub fn canonical(self) -> Self {
        match self {
            Edge::Bidirected(a, b) => Edge::bidirected(a, b),
            e => e,
        }
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        match self {
            Edge::Directed { from, to } => (from, to),
            Edge::Bidirected(a, b) => (a, b),
        }
    }

    pub fn is_loop(self) -> bool {
        let (a, b) = self.endpoints();
        a == b
    }

    pub fn is_directed(self) -> bool {
        matches!(self, Edge::Directed { .. })
    }

    /// Renders the edge with vertex labels, e.g. `a -> b` or `a <-> b`.
    pub fn display(self, g: &Dmg) -> String {
        match self {
            Edge::Directed { from, to } => format!("{} -> {}", g.label(from), g.label(to)),
            Edge::Bidirected(a, b) => format!("{} <-> {}", g.label(a), g.label(b)),
        }
    }
}

/// One way of traversing an edge out of a vertex.
///
/// `depart` is the mark at the vertex being left and `arrive` the mark at
/// `next`. A directed loop yields two moves, one per orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub edge: Edge,
    pub depart: Mark,
    pub arrive: Mark,
    pub next: VertexId,
}

#[derive(Clone)]
pub struct Dmg {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    directed: BTreeSet<(VertexId, VertexId)>,
    bidirected: BTreeSet<(VertexId, VertexId)>,
    moves: Vec<Vec<Move>>,
    parents: Vec<Vec<VertexId>>,
}

impl Dmg {
    /// Edgeless graph on the given labels.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::from_ids(
            labels.into_iter().map(Into::into).collect(),
            std::iter::empty(),
            std::iter::empty(),
        )
    }

    /// Builds a graph from labels and label pairs. Duplicate edges are
    /// rejected; `(a, b)` and `(b, a)` are the same bidirected edge.
    pub fn from_label_edges(
        labels: &[&str],
        directed: &[(&str, &str)],
        bidirected: &[(&str, &str)],
    ) -> Result<Self> {
        let g = Self::new(labels.iter().copied())?;
        let lookup = |l: &str| g.vertex(l).ok_or_else(|| DmgError::UnknownLabel(l.to_owned()));
        let d = directed
            .iter()
            .map(|&(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let bi = bidirected
            .iter()
            .map(|&(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_ids(g.labels, d, bi)
    }

    /// Builds a graph from a compact edge notation: each entry is
    /// `"a -> b"`, `"a <- b"` or `"a <-> b"`.
    ///
    /// ```
    /// use dmg_core::Dmg;
    ///
    /// let g = Dmg::from_edges(&["a", "b"], &["a -> b", "b <-> b"]).unwrap();
    /// assert_eq!(g.edge_count(), 2);
    /// ```
    pub fn from_edges(labels: &[&str], edges: &[&str]) -> Result<Self> {
        let g = Self::new(labels.iter().copied())?;
        let edges = edges.iter().map(|spec| g.parse_edge(spec)).collect::<Result<Vec<_>>>()?;
        g.with_edges(edges)
    }

    /// Parses `"a -> b"`, `"a <- b"` or `"a <-> b"` against this graph's
    /// labels. The edge need not be present.
    pub fn parse_edge(&self, spec: &str) -> Result<Edge> {
        let tokens: Vec<&str> = spec.split_whitespace().collect();
        let (a, arrow, b) = match tokens.as_slice() {
            [a, arrow, b] => (self.require(a)?, *arrow, self.require(b)?),
            _ => return Err(DmgError::EdgeSyntax(spec.to_owned())),
        };
        match arrow {
            "->" => Ok(Edge::directed(a, b)),
            "<-" => Ok(Edge::directed(b, a)),
            "<->" => Ok(Edge::bidirected(a, b)),
            _ => Err(DmgError::EdgeSyntax(spec.to_owned())),
        }
    }

    /// Builds a graph over `labels` from vertex-index pairs.
    pub fn from_ids<D, B>(labels: Vec<String>, directed: D, bidirected: B) -> Result<Self>
    where
        D: IntoIterator<Item = (VertexId, VertexId)>,
        B: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(DmgError::EmptyLabel);
            }
            if index.insert(l.clone(), VertexId::new(i)).is_some() {
                return Err(DmgError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        let check = |v: VertexId| {
            if v.index() < n {
                Ok(())
            } else {
                Err(DmgError::VertexOutOfRange { index: v.index(), order: n })
            }
        };
        let mut d = BTreeSet::new();
        let mut b = BTreeSet::new();
        for (x, y) in directed {
            check(x)?;
            check(y)?;
            if !d.insert((x, y)) {
                return Err(DmgError::DuplicateEdge(format!(
                    "{} -> {}",
                    labels[x.index()],
                    labels[y.index()]
                )));
            }
        }
        for (x, y) in bidirected {
            check(x)?;
            check(y)?;
            if !b.insert((x.min(y), x.max(y))) {
                return Err(DmgError::DuplicateEdge(format!(
                    "{} <-> {}",
                    labels[x.index()],
                    labels[y.index()]
                )));
            }
        }
        Ok(Self::assemble(labels, index, d, b))
    }

    fn assemble(
        labels: Vec<String>,
        index: HashMap<String, VertexId>,
        directed: BTreeSet<(VertexId, VertexId)>,
        bidirected: BTreeSet<(VertexId, VertexId)>,
    ) -> Self {
        let n = labels.len();
        let mut moves = vec![Vec::new(); n];
        let mut parents = vec![Vec::new(); n];
        for &(a, b) in &directed {
            let edge = Edge::directed(a, b);
            parents[b.index()].push(a);
            moves[a.index()].push(Move { edge, depart: Mark::Tail, arrive: Mark::Head, next: b });
            moves[b.index()].push(Move { edge, depart: Mark::Head, arrive: Mark::Tail, next: a });
        }
        for &(a, b) in &bidirected {
            let edge = Edge::bidirected(a, b);
            moves[a.index()].push(Move { edge, depart: Mark::Head, arrive: Mark::Head, next: b });
            if a != b {
                moves[b.index()].push(Move { edge, depart: Mark::Head, arrive: Mark::Head, next: a });
            }
        }
        Dmg { labels, index, directed, bidirected, moves, parents }
    }

    fn rebuild(
        &self,
        directed: BTreeSet<(VertexId, VertexId)>,
        bidirected: BTreeSet<(VertexId, VertexId)>,
    ) -> Self {
        Self::assemble(self.labels.clone(), self.index.clone(), directed, bidirected)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.index()]
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    /// Resolves a label, reporting unknown labels as errors.
    pub fn require(&self, label: &str) -> Result<VertexId> {
        self.vertex(label)
            .ok_or_else(|| DmgError::UnknownLabel(label.to_owned()))
    }

    pub fn vertex_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        labels.iter().map(|l| self.require(l.as_ref())).collect()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.order()).map(VertexId::new)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn directed_edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.directed.iter().copied()
    }

    pub fn bidirected_edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.bidirected.iter().copied()
    }

    /// All edges, directed first, each group in ascending index order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.directed
            .iter()
            .map(|&(a, b)| Edge::directed(a, b))
            .chain(self.bidirected.iter().map(|&(a, b)| Edge::Bidirected(a, b)))
    }

    pub fn edge_count(&self) -> usize {
        self.directed.len() + self.bidirected.len()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        match e.canonical() {
            Edge::Directed { from, to } => self.directed.contains(&(from, to)),
            Edge::Bidirected(a, b) => self.bidirected.contains(&(a, b)),
        }
    }

    pub fn has_directed(&self, from: VertexId, to: VertexId) -> bool {
        self.directed.contains(&(from, to))
    }

    pub fn has_bidirected(&self, a: VertexId, b: VertexId) -> bool {
        self.bidirected.contains(&(a.min(b), a.max(b)))
    }

    /// True when the graph has no bidirected edges.
    pub fn is_dg(&self) -> bool {
        self.bidirected.is_empty()
    }

    /// The traversals available out of `v`.
    pub fn moves(&self, v: VertexId) -> &[Move] {
        &self.moves[v.index()]
    }

    pub(crate) fn parent_list(&self, v: VertexId) -> &[VertexId] {
        &self.parents[v.index()]
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.index() < self.order() {
            Ok(())
        } else {
            Err(DmgError::VertexOutOfRange { index: v.index(), order: self.order() })
        }
    }

    pub fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.last() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    fn check_edge(&self, e: Edge) -> Result<()> {
        let (a, b) = e.endpoints();
        self.check_vertex(a)?;
        self.check_vertex(b)
    }

    /// `An(c)`: every vertex with a directed path, possibly trivial, into `c`.
    pub fn ancestors(&self, c: &VertexSet) -> Result<VertexSet> {
        self.check_set(c)?;
        Ok(self.ancestors_unchecked(c))
    }

    pub(crate) fn ancestors_unchecked(&self, c: &VertexSet) -> VertexSet {
        let mut seen = c.clone();
        let mut queue: VecDeque<VertexId> = c.iter().collect();
        while let Some(v) = queue.pop_front() {
            for &p in self.parent_list(v) {
                if seen.insert(p) {
                    queue.push_back(p);
                }
            }
        }
        seen
    }

    /// `pa(β)`; a vertex with a directed loop is its own parent.
    pub fn parents(&self, beta: VertexId) -> Result<VertexSet> {
        self.check_vertex(beta)?;
        Ok(self.parent_list(beta).iter().copied().collect())
    }

    /// Vertices joined to `beta` by a bidirected edge, including `beta` itself
    /// when it has a bidirected loop.
    pub fn siblings(&self, beta: VertexId) -> Result<VertexSet> {
        self.check_vertex(beta)?;
        Ok(self
            .moves(beta)
            .iter()
            .filter(|m| !m.edge.is_directed())
            .map(|m| m.next)
            .collect())
    }

    /// Subgraph induced by `o`; vertices keep their relative order.
    pub fn induced_subgraph(&self, o: &VertexSet) -> Result<Dmg> {
        self.check_set(o)?;
        let mut remap = vec![None; self.order()];
        let labels: Vec<String> = o
            .iter()
            .enumerate()
            .map(|(i, v)| {
                remap[v.index()] = Some(VertexId::new(i));
                self.labels[v.index()].clone()
            })
            .collect();
        let pick = |&(a, b): &(VertexId, VertexId)| Some((remap[a.index()]?, remap[b.index()]?));
        let directed: Vec<_> = self.directed.iter().filter_map(pick).collect();
        let bidirected: Vec<_> = self.bidirected.iter().filter_map(pick).collect();
        Self::from_ids(labels, directed, bidirected)
    }

    /// Re-expresses `other` over this graph's vertex order. Fails unless both
    /// graphs have the same label set.
    pub fn align(&self, other: &Dmg) -> Result<Dmg> {
        if self.order() != other.order() {
            return Err(DmgError::VertexSetMismatch);
        }
        let map = other
            .labels
            .iter()
            .map(|l| self.vertex(l).ok_or(DmgError::VertexSetMismatch))
            .collect::<Result<Vec<_>>>()?;
        let f = |&(a, b): &(VertexId, VertexId)| (map[a.index()], map[b.index()]);
        Self::from_ids(
            self.labels.clone(),
            other.directed.iter().map(f).collect::<Vec<_>>(),
            other.bidirected.iter().map(f).collect::<Vec<_>>(),
        )
    }

    /// True iff every edge of `other` is an edge of `self`.
    pub fn is_supergraph(&self, other: &Dmg) -> Result<bool> {
        let other = self.align(other)?;
        Ok(other.directed.is_subset(&self.directed) && other.bidirected.is_subset(&self.bidirected))
    }

    /// Returns `self` plus `e`.
    pub fn add_edge(&self, e: Edge) -> Result<Dmg> {
        self.check_edge(e)?;
        if self.has_edge(e) {
            return Err(DmgError::DuplicateEdge(e.display(self)));
        }
        let (mut d, mut b) = (self.directed.clone(), self.bidirected.clone());
        match e.canonical() {
            Edge::Directed { from, to } => d.insert((from, to)),
            Edge::Bidirected(x, y) => b.insert((x, y)),
        };
        Ok(self.rebuild(d, b))
    }

    /// Returns `self` without `e`.
    pub fn remove_edge(&self, e: Edge) -> Result<Dmg> {
        self.check_edge(e)?;
        if !self.has_edge(e) {
            return Err(DmgError::MissingEdge(e.display(self)));
        }
        let (mut d, mut b) = (self.directed.clone(), self.bidirected.clone());
        match e.canonical() {
            Edge::Directed { from, to } => d.remove(&(from, to)),
            Edge::Bidirected(x, y) => b.remove(&(x, y)),
        };
        Ok(self.rebuild(d, b))
    }

    /// Same vertices, edge set replaced.
    pub fn with_edges<I: IntoIterator<Item = Edge>>(&self, edges: I) -> Result<Dmg> {
        let (mut d, mut b) = (Vec::new(), Vec::new());
        for e in edges {
            match e {
                Edge::Directed { from, to } => d.push((from, to)),
                Edge::Bidirected(x, y) => b.push((x, y)),
            }
        }
        Self::from_ids(self.labels.clone(), d, b)
    }

    /// Whether every bidirected edge `α ↔ β` comes with both `α ↔ α` and
    /// `β ↔ β`. Graphs obtained by projecting a directed graph have this
    /// property.
    pub fn satisfies_self_sibling_property(&self) -> bool {
        self.bidirected
            .iter()
            .all(|&(a, b)| self.bidirected.contains(&(a, a)) && self.bidirected.contains(&(b, b)))
    }

    /// Replaces every bidirected edge `α ↔ β` by a fresh parent `mα_β` with
    /// edges into both endpoints (one edge for a bidirected loop).
    ///
    /// Auxiliary labels get a `'` suffix until they are unique.
    pub fn canonical_dg(&self) -> Dmg {
        let mut labels = self.labels.clone();
        let mut taken: BTreeSet<String> = labels.iter().cloned().collect();
        let mut directed: Vec<_> = self.directed.iter().copied().collect();
        for &(a, b) in &self.bidirected {
            let mut name = format!("m{}_{}", self.label(a), self.label(b));
            while taken.contains(&name) {
                name.push('\'');
            }
            taken.insert(name.clone());
            let m = VertexId::new(labels.len());
            labels.push(name);
            directed.push((m, a));
            if a != b {
                directed.push((m, b));
            }
        }
        Self::from_ids(labels, directed, std::iter::empty())
            .expect("auxiliary vertices are fresh")
    }
}

impl PartialEq for Dmg {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
            && self.directed == other.directed
            && self.bidirected == other.bidirected
    }
}

impl Eq for Dmg {}

impl Hash for Dmg {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.labels.hash(state);
        self.directed.hash(state);
        self.bidirected.hash(state);
    }
}

impl fmt::Display for Dmg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.labels.join(", "))?;
        for e in self.edges() {
            write!(f, " {};", e.display(self))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Dmg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dmg({self})")
    }
}
