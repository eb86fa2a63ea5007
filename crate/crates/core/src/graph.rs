//! Simple undirected graphs on dense vertex ids, plus the edge-list reader and
//! writer and the isolated-vertex split used by the cover-count reduction.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::fs;
use std::path::Path;

use thiserror::Error;

/// Vertex identifier, dense in `[0, n)`.
pub type Vertex = usize;

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    /// Builds the canonical edge `{a, b}`; `None` for a self-loop.
    pub fn new(a: Vertex, b: Vertex) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Some(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn u(&self) -> Vertex {
        self.u
    }

    pub fn v(&self) -> Vertex {
        self.v
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(Vertex, Vertex),
}

/// Immutable simple undirected graph.
///
/// Edges are kept sorted by `(u, v)`; bit `i` of an edge-subset mask always
/// refers to `edges()[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range ids.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            let e = Edge::new(a, b).ok_or(GraphError::SelfLoop(a))?;
            if !set.insert(e) {
                return Err(GraphError::DuplicateEdge(e.u, e.v));
            }
        }
        Ok(Self::from_sorted(n, set.into_iter().collect()))
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for e in &edges {
            adjacency[e.u].push(e.v);
            adjacency[e.v].push(e.u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adjacency,
        }
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.n && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Returns a copy with one more edge.
    pub fn with_edge(&self, a: Vertex, b: Vertex) -> Result<Self, GraphError> {
        Graph::new(
            self.n,
            self.edges
                .iter()
                .map(Edge::endpoints)
                .chain(std::iter::once((a, b))),
        )
    }

    /// Returns a copy with `count` extra degree-0 vertices appended.
    pub fn with_isolated(&self, count: usize) -> Self {
        Self::from_sorted(self.n + count, self.edges.clone())
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|e| Edge {
                u: e.u + shift,
                v: e.v + shift,
            }))
            .collect();
        Self::from_sorted(self.n + other.n, edges)
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Self {
        let mut relabel = vec![usize::MAX; self.n];
        for (new, &old) in vertices.iter().enumerate() {
            relabel[old] = new;
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter_map(|e| {
                let (a, b) = (relabel[e.u], relabel[e.v]);
                if a == usize::MAX || b == usize::MAX {
                    None
                } else {
                    Edge::new(a, b)
                }
            })
            .collect();
        edges.sort_unstable();
        Self::from_sorted(vertices.len(), edges)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Serializes to the plain edge-list format.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", e.u, e.v));
        }
        out
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} E=[", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

/// Isolated vertices `I` and the remainder `H = G - I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatedSplit {
    pub isolated: Vec<Vertex>,
    pub stripped: Graph,
    /// `relabel[v]` is `Some(id in stripped)` for non-isolated `v`.
    pub relabel: Vec<Option<Vertex>>,
}

impl IsolatedSplit {
    pub fn isolated_count(&self) -> usize {
        self.isolated.len()
    }
}

/// Removes every degree-0 vertex, relabelling the rest contiguously in
/// increasing id order.
pub fn strip_isolated(g: &Graph) -> IsolatedSplit {
    let mut isolated = Vec::new();
    let mut relabel = vec![None; g.n];
    let mut next = 0;
    for (v, slot) in relabel.iter_mut().enumerate() {
        if g.degree(v) == 0 {
            isolated.push(v);
        } else {
            *slot = Some(next);
            next += 1;
        }
    }
    // Relabelling is monotone, so canonical edge order is preserved.
    let edges = g
        .edges
        .iter()
        .map(|e| Edge {
            u: relabel[e.u].expect("endpoint has positive degree"),
            v: relabel[e.v].expect("endpoint has positive degree"),
        })
        .collect();
    IsolatedSplit {
        isolated,
        stripped: Graph::from_sorted(next, edges),
        relabel,
    }
}

/// Structural summary of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    /// `Some(d)` when every vertex has degree `d`.
    pub regular_degree: Option<usize>,
    pub is_bipartite: bool,
    pub is_connected: bool,
    pub components: Vec<Vec<Vertex>>,
}

pub fn check_properties(g: &Graph) -> PropertyReport {
    let regular_degree = match g.n {
        0 => None,
        _ => {
            let d = g.degree(0);
            (1..g.n).all(|v| g.degree(v) == d).then_some(d)
        }
    };

    let components = g.components();
    let mut color: Vec<Option<bool>> = vec![None; g.n];
    let mut is_bipartite = true;
    'outer: for comp in &components {
        let root = comp[0];
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let c = color[v].expect("queued vertices are colored");
            for &w in g.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!c);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == c => {
                        is_bipartite = false;
                        break 'outer;
                    }
                    Some(_) => {}
                }
            }
        }
    }

    PropertyReport {
        regular_degree,
        is_bipartite,
        is_connected: components.len() <= 1,
        components,
    }
}

/// Which text format an input file used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    /// `n m` header, 0-indexed `u v` lines.
    EdgeList,
    /// `p edge n m` header, 1-indexed `e u v` lines.
    Dimacs,
}

impl InputFormat {
    /// Label the vertex carried in the source file.
    pub fn original_label(self, v: Vertex) -> usize {
        match self {
            InputFormat::EdgeList => v,
            InputFormat::Dimacs => v + 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("input is not valid UTF-8")]
    Encoding,
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: malformed header {text:?}")]
    MalformedHeader { line: usize, text: String },
    #[error("line {line}: malformed edge line {text:?}")]
    MalformedEdge { line: usize, text: String },
    #[error("line {line}: vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: header declares {declared} edges but {found} were given")]
    EdgeCountMismatch {
        line: usize,
        declared: usize,
        found: usize,
    },
}

impl ParseError {
    /// Line number (1-based) the diagnostic refers to, if any.
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::Encoding | ParseError::MissingHeader => None,
            ParseError::MalformedHeader { line, .. }
            | ParseError::MalformedEdge { line, .. }
            | ParseError::VertexOutOfRange { line, .. }
            | ParseError::SelfLoop { line, .. }
            | ParseError::DuplicateEdge { line, .. }
            | ParseError::EdgeCountMismatch { line, .. } => Some(*line),
        }
    }
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        #[source]
        source: ParseError,
    },
}

/// Parses either supported format; see [`parse_graph`].
pub fn parse_edge_list(text: &[u8]) -> Result<Graph, ParseError> {
    parse_graph(text).map(|(g, _)| g)
}

/// Parses a graph, detecting the format from the first significant line.
///
/// Lines starting with `#` (and `c` in DIMACS input) and blank lines are
/// skipped.
pub fn parse_graph(text: &[u8]) -> Result<(Graph, InputFormat), ParseError> {
    let text = std::str::from_utf8(text).map_err(|_| ParseError::Encoding)?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));

    // DIMACS comments may precede the header; edge-list headers start with a digit.
    let (hline, header) = lines
        .by_ref()
        .find(|(_, l)| !l.starts_with('c'))
        .ok_or(ParseError::MissingHeader)?;
    let malformed_header = || ParseError::MalformedHeader {
        line: hline,
        text: header.to_string(),
    };

    let (format, n, m) = if header.starts_with('p') {
        let f: Vec<&str> = header.split_whitespace().collect();
        match f.as_slice() {
            ["p", "edge" | "col", n, m] => (
                InputFormat::Dimacs,
                parse_count(n).ok_or_else(malformed_header)?,
                parse_count(m).ok_or_else(malformed_header)?,
            ),
            _ => return Err(malformed_header()),
        }
    } else {
        let (n, m) = split_pair(header).ok_or_else(malformed_header)?;
        (
            InputFormat::EdgeList,
            parse_count(n).ok_or_else(malformed_header)?,
            parse_count(m).ok_or_else(malformed_header)?,
        )
    };

    let mut seen = BTreeSet::new();
    let mut last_line = hline;
    for (line, body) in lines {
        if format == InputFormat::Dimacs && body.starts_with('c') {
            continue;
        }
        last_line = line;
        if seen.len() == m {
            return Err(ParseError::EdgeCountMismatch {
                line,
                declared: m,
                found: m + 1,
            });
        }
        let malformed = || ParseError::MalformedEdge {
            line,
            text: body.to_string(),
        };
        let (a, b) = match format {
            InputFormat::EdgeList => {
                let (a, b) = split_pair(body).ok_or_else(malformed)?;
                (
                    parse_count(a).ok_or_else(malformed)?,
                    parse_count(b).ok_or_else(malformed)?,
                )
            }
            InputFormat::Dimacs => {
                let f: Vec<&str> = body.split_whitespace().collect();
                match f.as_slice() {
                    ["e", a, b] => {
                        let a = parse_count(a).ok_or_else(malformed)?;
                        let b = parse_count(b).ok_or_else(malformed)?;
                        for x in [a, b] {
                            if x == 0 || x > n {
                                return Err(ParseError::VertexOutOfRange { line, vertex: x, n });
                            }
                        }
                        (a - 1, b - 1)
                    }
                    _ => return Err(malformed()),
                }
            }
        };
        for x in [a, b] {
            if x >= n {
                return Err(ParseError::VertexOutOfRange { line, vertex: x, n });
            }
        }
        let e = Edge::new(a, b).ok_or(ParseError::SelfLoop {
            line,
            vertex: format.original_label(a),
        })?;
        if !seen.insert(e) {
            return Err(ParseError::DuplicateEdge {
                line,
                u: format.original_label(e.u),
                v: format.original_label(e.v),
            });
        }
    }
    if seen.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            line: last_line,
            declared: m,
            found: seen.len(),
        });
    }
    Ok((Graph::from_sorted(n, seen.into_iter().collect()), format))
}

/// Reads and parses a graph file.
pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph, ReadError> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|source| ReadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_edge_list(&bytes).map_err(|source| ReadError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn split_pair(s: &str) -> Option<(&str, &str)> {
    let (a, b) = s.split_once(' ')?;
    if b.contains(' ') {
        return None;
    }
    Some((a, b))
}

fn parse_count(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}
