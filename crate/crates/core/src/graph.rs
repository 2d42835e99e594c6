//! Simple undirected graphs on vertices `0..order`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on the order of any graph built by this crate.
pub const MAX_ORDER: usize = 1_000_000;

/// A finite simple graph. Edges are kept as `(min, max)` pairs in a sorted
/// set, so equality does not depend on insertion order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    order: usize,
    edges: BTreeSet<(usize, usize)>,
    names: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    order: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(repr: GraphRepr) -> Result<Self> {
        let g = Graph::new(repr.order, repr.edges.into_iter().map(|[u, v]| (u, v)))?;
        match repr.names {
            Some(names) => g.with_names(names),
            None => Ok(g),
        }
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            order: g.order,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
            names: g.names,
        }
    }
}

fn check_order(what: &str, order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::InvalidOrder {
            what: what.to_string(),
            order,
        });
    }
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: order as u128,
            max: MAX_ORDER,
        });
    }
    Ok(())
}

impl Graph {
    /// Builds a graph, rejecting self-loops, out-of-range endpoints and
    /// repeated edges (in either orientation).
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        check_order("graph", order)?;
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { u, v });
            }
            if u >= order || v >= order {
                return Err(Error::EdgeOutOfRange { u, v, order });
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::ParallelEdge { u, v });
            }
        }
        Ok(Self {
            order,
            edges: set,
            names: None,
        })
    }

    /// Crate-internal constructor for edge sets that are canonical and
    /// valid by construction.
    pub(crate) fn from_canonical(order: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < order));
        Self {
            order,
            edges,
            names: None,
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.order {
            return Err(Error::NameCount {
                expected: self.order,
                got: names.len(),
            });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of `v`: its given name, or the index.
    pub fn name(&self, v: usize) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.order];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Component index of every vertex, numbered in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.order];
        let mut next = 0;
        for start in 0..self.order {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// Two-colours each component by BFS; `None` if some edge is
    /// monochromatic.
    fn two_colouring(&self) -> Option<Vec<Side>> {
        let adj = self.adjacency();
        let mut side: Vec<Option<Side>> = vec![None; self.order];
        for start in 0..self.order {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(Side::One);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].expect("queued vertices are coloured");
                for &w in &adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(su.other());
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.expect("all coloured")).collect())
    }

    /// A bipartition with both sides non-empty, or `None`.
    ///
    /// `K_1` has no bipartition (one side would be empty) even though it has
    /// no odd cycle.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let side_of = self.two_colouring()?;
        let b = Bipartition { side_of };
        if b.side(Side::One).is_empty() || b.side(Side::Two).is_empty() {
            return None;
        }
        Some(b)
    }

    /// `true` iff some component is not bipartite.
    pub fn has_odd_cycle(&self) -> bool {
        self.two_colouring().is_none()
    }

    /// Graphviz rendering; edges are listed in canonical order.
    pub fn to_dot(&self) -> String {
        self.to_dot_with(|_, _| None)
    }

    /// Graphviz rendering where `edge_attrs` may add attributes per edge.
    pub fn to_dot_with(&self, edge_attrs: impl Fn(usize, usize) -> Option<String>) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.order {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", escape(&self.name(v)));
        }
        for (u, v) in self.edges() {
            match edge_attrs(u, v) {
                Some(attrs) => {
                    let _ = writeln!(out, "  {u} -- {v} [{attrs}];");
                }
                None => {
                    let _ = writeln!(out, "  {u} -- {v};");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::One => Side::Two,
            Side::Two => Side::One,
        }
    }
}

/// A proper 2-colouring with both colour classes non-empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side_of: Vec<Side>,
}

impl Bipartition {
    pub fn side_of(&self, v: usize) -> Side {
        self.side_of[v]
    }

    /// Vertices on `side`, ascending.
    pub fn side(&self, side: Side) -> Vec<usize> {
        (0..self.side_of.len()).filter(|&v| self.side_of[v] == side).collect()
    }

    /// Position of `v` within its own side (0-based, ascending order).
    pub fn rank_within_side(&self) -> Vec<usize> {
        let mut counts = [0usize; 2];
        self.side_of
            .iter()
            .map(|s| {
                let k = match s {
                    Side::One => 0,
                    Side::Two => 1,
                };
                counts[k] += 1;
                counts[k] - 1
            })
            .collect()
    }
}

/// Path `v_1 v_2 ... v_n` on indices `0..n`.
pub fn make_path(n: usize) -> Result<Graph> {
    check_order("path", n)?;
    Ok(Graph::from_canonical(n, (1..n).map(|i| (i - 1, i)).collect()))
}

pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidOrder {
            what: "cycle (needs at least 3 vertices)".to_string(),
            order: n,
        });
    }
    check_order("cycle", n)?;
    let mut edges: BTreeSet<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.insert((0, n - 1));
    Ok(Graph::from_canonical(n, edges))
}

pub fn make_complete(n: usize) -> Result<Graph> {
    check_order("complete graph", n)?;
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok(Graph::from_canonical(n, edges))
}

/// Star on `n` vertices: centre 0 joined to leaves `1..n`.
pub fn make_star(n: usize) -> Result<Graph> {
    check_order("star", n)?;
    Ok(Graph::from_canonical(n, (1..n).map(|v| (0, v)).collect()))
}

/// A textual graph family spec such as `path:5` or `edges:4:0-1,1-2,2-3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Edges(usize, Vec<(usize, usize)>),
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Family::Path(n) => make_path(*n),
            Family::Cycle(n) => make_cycle(*n),
            Family::Complete(n) => make_complete(*n),
            Family::Star(n) => make_star(*n),
            Family::Edges(n, edges) => Graph::new(*n, edges.iter().copied()),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::BadFamilySpec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let (kind, rest) = s.split_once(':').ok_or_else(|| bad("expected kind:order"))?;
        let parse_n = |t: &str| t.trim().parse::<usize>().map_err(|_| bad("order is not a number"));
        match kind.trim() {
            "path" => Ok(Family::Path(parse_n(rest)?)),
            "cycle" => Ok(Family::Cycle(parse_n(rest)?)),
            "complete" => Ok(Family::Complete(parse_n(rest)?)),
            "star" => Ok(Family::Star(parse_n(rest)?)),
            "edges" => {
                let (n, list) = rest.split_once(':').unwrap_or((rest, ""));
                let n = parse_n(n)?;
                let mut edges = Vec::new();
                for item in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                    let (u, v) = item.split_once('-').ok_or_else(|| bad("edge must be u-v"))?;
                    let u = u.trim().parse().map_err(|_| bad("bad edge endpoint"))?;
                    let v = v.trim().parse().map_err(|_| bad("bad edge endpoint"))?;
                    edges.push((u, v));
                }
                Ok(Family::Edges(n, edges))
            }
            _ => Err(bad("unknown family (path, cycle, complete, star, edges)")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::Edges(n, edges) => {
                write!(f, "edges:{n}:")?;
                for (i, (u, v)) in edges.iter().enumerate() {
                    if i > 0 {
                        f.write_char(',')?;
                    }
                    write!(f, "{u}-{v}")?;
                }
                Ok(())
            }
        }
    }
}

/// A graph given either inline as JSON or as a family spec string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphSource {
    Family(String),
    Graph(Graph),
}

impl GraphSource {
    pub fn resolve(self) -> Result<Graph> {
        match self {
            GraphSource::Family(spec) => spec.parse::<Family>()?.build(),
            GraphSource::Graph(g) => Ok(g),
        }
    }
}
