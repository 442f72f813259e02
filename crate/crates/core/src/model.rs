//! Finite hypergraphs, their structural predicates and the boundary operators.
//!
//! Vertices are the integers `0..n`. Each edge is stored as a strictly
//! increasing vertex list and keeps the index it was given at construction,
//! so cut witnesses can refer to edges by position. Multi-edges are allowed;
//! edges with fewer than two vertices are not.
//!
//! The text format is line oriented:
//!
//! ```text
//! # comments start with '#'
//! h <n> <m>
//! e v1 v2 ... vk      (m lines)
//! ```

use std::collections::{HashMap, VecDeque};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};

pub type Vertex = usize;

/// Index of an edge in [`Hypergraph::edges`].
pub type EdgeIndex = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<Vertex>>,
    incidence: Vec<Vec<EdgeIndex>>,
}

/// Outcome of [`Hypergraph::uniformity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Uniformity {
    Uniform(usize),
    Mixed,
    NoEdges,
}

/// Outcome of [`Hypergraph::linearity`]. A non-linear verdict names a vertex
/// pair and the first two edges found to contain it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Linearity {
    Linear,
    NonLinear {
        pair: (Vertex, Vertex),
        edges: (EdgeIndex, EdgeIndex),
    },
}

impl Linearity {
    pub fn is_linear(&self) -> bool {
        matches!(self, Linearity::Linear)
    }
}

/// Edge counts by the number of their vertices inside a set `X`.
///
/// `count(i)` is the number of edges with exactly `i` vertices in `X`, for
/// `i = 1..=k`. The slot `i = k` counts edges lying entirely inside `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryProfile {
    k: usize,
    counts: Vec<usize>,
}

impl BoundaryProfile {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn count(&self, i: usize) -> usize {
        assert!(
            (1..=self.k).contains(&i),
            "layer {i} outside 1..={}",
            self.k
        );
        self.counts[i - 1]
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Sum of the layers `1..k`, which is the size of the boundary.
    pub fn boundary_size(&self) -> usize {
        self.counts[..self.k - 1].iter().sum()
    }
}

/// Per-vertex incidence counts relative to a set `X` containing the vertex.
///
/// For a vertex `x` in `X`, `a(i)` counts the pairs `(w, e)` with `e` an edge
/// through `x` having exactly `i` vertices in `X`, and `w != x` a vertex of `e`
/// inside `X`. `b(i)` is the same count for `w` outside `X`. Counting pairs
/// rather than distinct neighbours makes the deletion identity exact for any
/// uniform input; on linear inputs both readings agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexProfile {
    k: usize,
    a: Vec<usize>,
    b: Vec<usize>,
}

impl VertexProfile {
    pub fn k(&self) -> usize {
        self.k
    }

    /// `a_i` for `i = 1..=k`.
    pub fn a(&self, i: usize) -> usize {
        assert!(
            (1..=self.k).contains(&i),
            "layer {i} outside 1..={}",
            self.k
        );
        self.a[i - 1]
    }

    /// `b_i` for `i = 1..k`.
    pub fn b(&self, i: usize) -> usize {
        assert!((1..self.k).contains(&i), "layer {i} outside 1..{}", self.k);
        self.b[i - 1]
    }

    pub fn a_values(&self) -> &[usize] {
        &self.a
    }

    pub fn b_values(&self) -> &[usize] {
        &self.b
    }
}

impl Hypergraph {
    /// Builds a hypergraph, sorting the vertices inside each edge. Edge order is kept.
    pub fn new(n: usize, edges: Vec<Vec<Vertex>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut sorted = Vec::with_capacity(edges.len());
        for (index, mut edge) in edges.into_iter().enumerate() {
            if edge.len() < 2 {
                return Err(Error::EdgeTooSmall {
                    index,
                    size: edge.len(),
                });
            }
            edge.sort_unstable();
            if let Some(&vertex) = edge.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVertex {
                    index,
                    vertex: w[0],
                });
            }
            sorted.push(edge);
        }
        Ok(Self::from_sorted(n, sorted))
    }

    /// Builds a hypergraph from generator output: edges are validated, put in
    /// lexicographic order and deduplicated.
    pub fn from_generated(n: usize, edges: Vec<Vec<Vertex>>) -> Result<Self> {
        let h = Self::new(n, edges)?;
        let mut edges = h.edges;
        edges.sort();
        edges.dedup();
        Ok(Self::from_sorted(n, edges))
    }

    fn from_sorted(n: usize, edges: Vec<Vec<Vertex>>) -> Self {
        let mut incidence = vec![Vec::new(); n];
        for (i, edge) in edges.iter().enumerate() {
            for &v in edge {
                incidence[v].push(i);
            }
        }
        Self {
            n,
            edges,
            incidence,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn edge(&self, index: EdgeIndex) -> &[Vertex] {
        &self.edges[index]
    }

    /// Indices of the edges containing `v`, ascending.
    pub fn incident_edges(&self, v: Vertex) -> &[EdgeIndex] {
        &self.incidence[v]
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Number of edges containing `v`, counting repeated edges with multiplicity.
    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.incidence[v].len())
    }

    /// Minimum and maximum degree.
    pub fn degree_extremes(&self) -> (usize, usize) {
        let mut degrees = self.incidence.iter().map(Vec::len);
        let first = degrees.next().unwrap_or(0);
        degrees.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d)))
    }

    pub fn min_degree(&self) -> usize {
        self.degree_extremes().0
    }

    pub fn uniformity(&self) -> Uniformity {
        match self.edges.first() {
            None => Uniformity::NoEdges,
            Some(first) => {
                let k = first.len();
                if self.edges.iter().all(|e| e.len() == k) {
                    Uniformity::Uniform(k)
                } else {
                    Uniformity::Mixed
                }
            }
        }
    }

    /// The common edge size, if every edge has the same size and there is at least one edge.
    pub fn uniform_k(&self) -> Option<usize> {
        match self.uniformity() {
            Uniformity::Uniform(k) => Some(k),
            _ => None,
        }
    }

    /// Distinct edge sizes with their multiplicities, ascending by size.
    pub fn edge_size_counts(&self) -> Vec<(usize, usize)> {
        let mut sizes: Vec<usize> = self.edges.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        let mut out: Vec<(usize, usize)> = Vec::new();
        for s in sizes {
            match out.last_mut() {
                Some((size, count)) if *size == s => *count += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }

    pub fn linearity(&self) -> Linearity {
        let mut owner: HashMap<(Vertex, Vertex), EdgeIndex> = HashMap::new();
        for (i, edge) in self.edges.iter().enumerate() {
            for (p, &u) in edge.iter().enumerate() {
                for &v in &edge[p + 1..] {
                    if let Some(&j) = owner.get(&(u, v)) {
                        return Linearity::NonLinear {
                            pair: (u, v),
                            edges: (j, i),
                        };
                    }
                    owner.insert((u, v), i);
                }
            }
        }
        Linearity::Linear
    }

    pub fn is_linear(&self) -> bool {
        self.linearity().is_linear()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_without(&[])
    }

    /// Components of the hypergraph after deleting the listed edges.
    pub fn components_without(&self, deleted: &[EdgeIndex]) -> Vec<Vec<Vertex>> {
        let mut removed = vec![false; self.edges.len()];
        for &e in deleted {
            removed[e] = true;
        }
        let mut seen = vec![false; self.n];
        let mut edge_seen = removed;
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut class = Vec::new();
            while let Some(v) = queue.pop_front() {
                class.push(v);
                for &e in &self.incidence[v] {
                    if edge_seen[e] {
                        continue;
                    }
                    edge_seen[e] = true;
                    for &w in &self.edges[e] {
                        if !seen[w] {
                            seen[w] = true;
                            queue.push_back(w);
                        }
                    }
                }
            }
            class.sort_unstable();
            out.push(class);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Membership mask of `set`.
    ///
    /// # Panics
    ///
    /// If `set` names a vertex outside `0..n`.
    pub fn membership(&self, set: &[Vertex]) -> Vec<bool> {
        let mut mask = vec![false; self.n];
        for &v in set {
            assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
            mask[v] = true;
        }
        mask
    }

    /// Indices of the edges with at least one vertex in `set` and one outside it.
    pub fn boundary(&self, set: &[Vertex]) -> Vec<EdgeIndex> {
        let inside = self.membership(set);
        self.boundary_of_mask(&inside)
    }

    pub(crate) fn boundary_of_mask(&self, inside: &[bool]) -> Vec<EdgeIndex> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| {
                let hits = e.iter().filter(|&&v| inside[v]).count();
                hits > 0 && hits < e.len()
            })
            .map(|(i, _)| i)
            .collect()
    }

    pub fn boundary_size(&self, set: &[Vertex]) -> usize {
        self.boundary(set).len()
    }

    pub fn boundary_profile(&self, set: &[Vertex]) -> Result<BoundaryProfile> {
        let k = self.uniform_k().ok_or(Error::NotUniform)?;
        let inside = self.membership(set);
        let mut counts = vec![0; k];
        for e in &self.edges {
            let hits = e.iter().filter(|&&v| inside[v]).count();
            if hits > 0 {
                counts[hits - 1] += 1;
            }
        }
        Ok(BoundaryProfile { k, counts })
    }

    pub fn vertex_profile(&self, set: &[Vertex], x: Vertex) -> Result<VertexProfile> {
        let k = self.uniform_k().ok_or(Error::NotUniform)?;
        self.check_vertex(x)?;
        let inside = self.membership(set);
        if !inside[x] {
            return Err(Error::NotInSet { vertex: x });
        }
        let mut a = vec![0; k];
        let mut b = vec![0; k - 1];
        for &e in &self.incidence[x] {
            let edge = &self.edges[e];
            let hits = edge.iter().filter(|&&v| inside[v]).count();
            a[hits - 1] += hits - 1;
            if hits < k {
                b[hits - 1] += k - hits;
            }
        }
        Ok(VertexProfile { k, a, b })
    }

    /// Complement of `set` in `0..n`, sorted.
    pub fn complement(&self, set: &[Vertex]) -> Vec<Vertex> {
        let inside = self.membership(set);
        (0..self.n).filter(|&v| !inside[v]).collect()
    }

    /// Edges in lexicographic order, the form used by the serializer.
    pub fn canonical_edges(&self) -> Vec<Vec<Vertex>> {
        let mut edges = self.edges.clone();
        edges.sort();
        edges
    }

    /// Equality ignoring the order of the edges.
    pub fn same_up_to_edge_order(&self, other: &Self) -> bool {
        self.n == other.n && self.canonical_edges() == other.canonical_edges()
    }

    /// Hypergraph with the given edges removed; remaining edges keep their relative order.
    pub fn without_edges(&self, deleted: &[EdgeIndex]) -> Self {
        let mut removed = vec![false; self.edges.len()];
        for &e in deleted {
            removed[e] = true;
        }
        let edges = self
            .edges
            .iter()
            .zip(&removed)
            .filter(|(_, &r)| !r)
            .map(|(e, _)| e.clone())
            .collect();
        Self::from_sorted(self.n, edges)
    }

    /// Hypergraph with one more edge appended.
    pub fn with_edge(&self, edge: Vec<Vertex>) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.push(edge);
        Self::new(self.n, edges)
    }

    /// Canonical text form: header, then edges in lexicographic order.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        writeln!(out, "h {} {}", self.n, self.edges.len()).unwrap();
        for edge in self.canonical_edges() {
            out.push('e');
            for v in edge {
                write!(out, " {v}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut edges = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            last_line = line;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut tokens = trimmed.split_ascii_whitespace();
            let tag = tokens.next();
            match header {
                None => {
                    let bad = || ParseError::MalformedHeader {
                        line,
                        found: trimmed.to_string(),
                    };
                    if tag != Some("h") {
                        return Err(bad());
                    }
                    let n: usize = tokens.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                    let m: usize = tokens.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                    if tokens.next().is_some() {
                        return Err(bad());
                    }
                    if n == 0 {
                        return Err(ParseError::NoVertices { line });
                    }
                    header = Some((n, m, line));
                }
                Some((n, m, _)) => {
                    let bad = || ParseError::MalformedEdge {
                        line,
                        found: trimmed.to_string(),
                    };
                    if tag != Some("e") {
                        return Err(bad());
                    }
                    if edges.len() == m {
                        return Err(ParseError::EdgeCountMismatch {
                            line,
                            declared: m,
                            found: m + 1,
                        });
                    }
                    let mut edge = Vec::new();
                    for token in tokens {
                        let v: u64 = token.parse().map_err(|_| bad())?;
                        if v >= n as u64 {
                            return Err(ParseError::VertexOutOfRange { line, vertex: v, n });
                        }
                        edge.push(v as Vertex);
                    }
                    if edge.len() < 2 {
                        return Err(ParseError::EdgeTooSmall {
                            line,
                            size: edge.len(),
                        });
                    }
                    edge.sort_unstable();
                    if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                        return Err(ParseError::RepeatedVertex { line, vertex: w[0] });
                    }
                    edges.push(edge);
                }
            }
        }
        let (n, m, header_line) = header.ok_or(ParseError::MissingHeader)?;
        if edges.len() != m {
            return Err(ParseError::EdgeCountMismatch {
                line: last_line.max(header_line),
                declared: m,
                found: edges.len(),
            });
        }
        Ok(Self::from_sorted(n, edges))
    }
}

impl FromStr for Hypergraph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Self::parse(s)
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}
