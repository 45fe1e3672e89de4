//! Finite paths and the prefix partial order.
//!
//! A path is either a vertex (length 0) or a sequence of edges whose
//! endpoints match up. Length-0 paths are first-class values: admissible
//! path homomorphisms may send a loop edge to a bare vertex, so the
//! algebra downstream has to handle them everywhere.

use std::cmp::Ordering;

use crate::error::Error;
use crate::graph::{EdgeId, Graph, VertexId};

/// A finite path. `source` and `target` are cached so endpoint queries do
/// not need the graph; for a nonempty path `source = src(edges[0])` and
/// `target = tgt(edges.last())`, for a vertex path both equal the vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    source: VertexId,
    target: VertexId,
    edges: Vec<EdgeId>,
}

impl Path {
    /// The length-0 path sitting at a vertex.
    pub fn vertex(v: VertexId) -> Path {
        Path {
            source: v,
            target: v,
            edges: Vec::new(),
        }
    }

    /// The length-1 path of a single edge.
    pub fn edge(graph: &Graph, e: EdgeId) -> Path {
        Path {
            source: graph.src(e),
            target: graph.tgt(e),
            edges: vec![e],
        }
    }

    /// A path from a nonempty edge sequence; checks that consecutive
    /// edges concatenate.
    pub fn from_edges(graph: &Graph, edges: &[EdgeId]) -> Result<Path, Error> {
        let (first, rest) = edges.split_first().ok_or(Error::EmptyPath)?;
        let mut target = graph.tgt(*first);
        for e in rest {
            if graph.src(*e) != target {
                return Err(Error::PathBreak(
                    graph.edge_name(*e).to_owned(),
                    graph.vertex_name(target).to_owned(),
                ));
            }
            target = graph.tgt(*e);
        }
        Ok(Path {
            source: graph.src(*first),
            target,
            edges: edges.to_vec(),
        })
    }

    /// Extended source map `s` — for a vertex path, the vertex itself.
    pub fn source(&self) -> VertexId {
        self.source
    }

    /// Extended target map `t` — for a vertex path, the vertex itself.
    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Concatenation `pq`; vertices act as identities. Fails unless
    /// `t(p) = s(q)`.
    pub fn concat(&self, q: &Path) -> Result<Path, Error> {
        if self.target != q.source {
            return Err(Error::ConcatMismatch(
                format!("{:?}", self.target),
                format!("{:?}", q.source),
            ));
        }
        let mut edges = Vec::with_capacity(self.edges.len() + q.edges.len());
        edges.extend_from_slice(&self.edges);
        edges.extend_from_slice(&q.edges);
        Ok(Path {
            source: self.source,
            target: q.target,
            edges,
        })
    }

    /// The prefix order: `self ⪯ other` iff `other = self · γ` for some path γ.
    pub fn is_prefix_of(&self, other: &Path) -> bool {
        if self.edges.is_empty() {
            return self.source == other.source;
        }
        other.edges.len() >= self.edges.len() && other.edges[..self.edges.len()] == self.edges[..]
    }

    /// The γ with `other = self · γ`, if `self ⪯ other`.
    pub fn strip_prefix(&self, other: &Path) -> Option<Path> {
        if !self.is_prefix_of(other) {
            return None;
        }
        Some(Path {
            source: self.target,
            target: other.target,
            edges: other.edges[self.edges.len()..].to_vec(),
        })
    }

    /// The path shortened by its final edge, together with that edge.
    pub fn shorten(&self, graph: &Graph) -> Option<(Path, EdgeId)> {
        let (last, init) = self.edges.split_last()?;
        let target = graph.src(*last);
        Some((
            Path {
                source: if init.is_empty() { target } else { self.source },
                target,
                edges: init.to_vec(),
            },
            *last,
        ))
    }

    /// The path extended by one more edge; caller guarantees `s(e) = t(self)`.
    pub fn extend(&self, graph: &Graph, e: EdgeId) -> Result<Path, Error> {
        self.concat(&Path::edge(graph, e))
    }

    /// Validates the defining conditions against a graph: consecutive edges
    /// concatenate and the cached endpoints agree with the edge data.
    pub fn validate(&self, graph: &Graph) -> bool {
        if self.edges.is_empty() {
            return self.source == self.target && self.source.index() < graph.vertex_count();
        }
        if self.source != graph.src(self.edges[0]) {
            return false;
        }
        for w in self.edges.windows(2) {
            if graph.tgt(w[0]) != graph.src(w[1]) {
                return false;
            }
        }
        self.target == graph.tgt(*self.edges.last().unwrap())
    }

    /// Stable text form, e.g. `e1 e2` or `(v)` for a vertex path.
    pub fn render(&self, graph: &Graph) -> String {
        if self.edges.is_empty() {
            format!("({})", graph.vertex_name(self.source))
        } else {
            self.edges
                .iter()
                .map(|&e| graph.edge_name(e))
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

// Graded order: by length first, then edge sequence, then base vertex.
// Gives BTreeMap-backed sums a stable, human-friendly term order with
// projections in front.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.edges
            .len()
            .cmp(&other.edges.len())
            .then_with(|| self.edges.cmp(&other.edges))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
