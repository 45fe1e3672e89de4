//! Finite directed graphs with named vertices and edges.
//!
//! A graph is a quadruple `(E^0, E^1, src, tgt)` of finite vertex and edge
//! sets together with total source and target maps. Identifiers are ordered:
//! every iteration in this crate follows insertion order, which is what makes
//! all downstream symbolic output deterministic.
//!
//! Besides the free-form builder the module provides the four graph families
//! the embedding pipeline is built from:
//!
//! * [`Graph::rose`] — one vertex with `n` loops; its algebra is `O_n`,
//! * [`Graph::line`] — the directed `k`-line; its algebra is `M_k`,
//! * [`Graph::matrix_rose`] — the `k`-line with `m` back edges `v_k -> v_1`;
//!   its algebra is `M_k(O_m)`,
//! * [`Graph::pivot`] — the `k`-line with `n` edges ending at every vertex,
//!   the mediating object between a rose and a matrix rose.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::Error;

/// Index of a vertex inside its graph, in insertion order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

/// Index of an edge inside its graph, in insertion order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct EdgeData {
    name: String,
    src: VertexId,
    tgt: VertexId,
}

/// A finite directed graph. Immutable once built.
#[derive(Debug, Clone)]
pub struct Graph {
    vertex_names: Vec<String>,
    edges: Vec<EdgeData>,
    // out_edges[v] lists s⁻¹(v) in insertion order; likewise in_edges for t⁻¹(v).
    out_edges: Vec<Vec<EdgeId>>,
    in_edges: Vec<Vec<EdgeId>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_names == other.vertex_names && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from vertex names and `(edge, src, tgt)` triples.
    ///
    /// Identifiers must be unique and endpoints must refer to listed
    /// vertices. Iteration order everywhere is the order given here.
    pub fn build<S: AsRef<str>>(
        vertices: &[S],
        edge_triples: &[(S, S, S)],
    ) -> Result<Arc<Graph>, Error> {
        let mut vertex_names = Vec::with_capacity(vertices.len());
        let mut vertex_index: HashMap<String, VertexId> = HashMap::new();
        for name in vertices {
            let name = name.as_ref().to_owned();
            if vertex_index
                .insert(name.clone(), VertexId(vertex_names.len() as u32))
                .is_some()
            {
                return Err(Error::DuplicateVertex(name));
            }
            vertex_names.push(name);
        }
        let mut edges = Vec::with_capacity(edge_triples.len());
        let mut edge_seen: HashMap<String, ()> = HashMap::new();
        for (name, src, tgt) in edge_triples {
            let name = name.as_ref().to_owned();
            if edge_seen.insert(name.clone(), ()).is_some() {
                return Err(Error::DuplicateEdge(name));
            }
            let src = *vertex_index
                .get(src.as_ref())
                .ok_or_else(|| Error::DanglingEndpoint {
                    edge: name.clone(),
                    vertex: src.as_ref().to_owned(),
                })?;
            let tgt = *vertex_index
                .get(tgt.as_ref())
                .ok_or_else(|| Error::DanglingEndpoint {
                    edge: name.clone(),
                    vertex: tgt.as_ref().to_owned(),
                })?;
            edges.push(EdgeData { name, src, tgt });
        }
        let mut out_edges = vec![Vec::new(); vertex_names.len()];
        let mut in_edges = vec![Vec::new(); vertex_names.len()];
        for (i, e) in edges.iter().enumerate() {
            out_edges[e.src.index()].push(EdgeId(i as u32));
            in_edges[e.tgt.index()].push(EdgeId(i as u32));
        }
        Ok(Arc::new(Graph {
            vertex_names,
            edges,
            out_edges,
            in_edges,
        }))
    }

    /// The rose with `n >= 2` loops `e1..en` on a single vertex `v`.
    pub fn rose(n: u32) -> Result<Arc<Graph>, Error> {
        if n < 2 {
            return Err(Error::RoseTooSmall(n));
        }
        let loops: Vec<(String, String, String)> = (1..=n)
            .map(|i| (format!("e{i}"), "v".to_owned(), "v".to_owned()))
            .collect();
        Graph::build(&["v".to_owned()], &loops)
    }

    /// The directed line `v1 -> v2 -> ... -> vk` with edges `l1..l(k-1)`.
    pub fn line(k: u32) -> Result<Arc<Graph>, Error> {
        if k < 1 {
            return Err(Error::LineTooSmall(k));
        }
        let vertices: Vec<String> = (1..=k).map(|j| format!("v{j}")).collect();
        let edges: Vec<(String, String, String)> = (1..k)
            .map(|j| (format!("l{j}"), format!("v{j}"), format!("v{}", j + 1)))
            .collect();
        Graph::build(&vertices, &edges)
    }

    /// The `k`-line with `m >= 2` extra edges `e1..em`, all from `vk` to `v1`.
    /// Its graph algebra is `M_k(O_m)`.
    pub fn matrix_rose(m: u32, k: u32) -> Result<Arc<Graph>, Error> {
        if m < 2 {
            return Err(Error::BadParameter(format!("matrix rose needs m >= 2, got {m}")));
        }
        if k < 1 {
            return Err(Error::BadParameter(format!("matrix rose needs k >= 1, got {k}")));
        }
        let vertices: Vec<String> = (1..=k).map(|j| format!("v{j}")).collect();
        let mut edges: Vec<(String, String, String)> = (1..k)
            .map(|j| (format!("l{j}"), format!("v{j}"), format!("v{}", j + 1)))
            .collect();
        for i in 1..=m {
            edges.push((format!("e{i}"), format!("v{k}"), "v1".to_owned()));
        }
        Graph::build(&vertices, &edges)
    }

    /// The pivot graph for `m - 1 = (n - 1)k`: the `k`-line plus `m` edges
    /// `e1..em` out of `vk`, with exactly `n` edges ending at each vertex.
    ///
    /// Targets follow the fixed batch labeling `tgt(e_i) = v_{k - ⌊(i-1)/(n-1)⌋}`
    /// for `i < m` and `tgt(e_m) = v1`: the first `n - 1` edges loop at `vk`,
    /// each following batch of `n - 1` ends one vertex earlier, and `e_m`
    /// closes the cycle at `v1`.
    pub fn pivot(m: u32, n: u32) -> Result<Arc<Graph>, Error> {
        if m < 2 || n < 2 {
            return Err(Error::BadParameter(format!(
                "pivot graph needs m, n >= 2, got m={m}, n={n}"
            )));
        }
        if !(m - 1).is_multiple_of(n - 1) {
            return Err(Error::Indivisible(n, m));
        }
        let k = (m - 1) / (n - 1);
        let vertices: Vec<String> = (1..=k).map(|j| format!("v{j}")).collect();
        let mut edges: Vec<(String, String, String)> = (1..k)
            .map(|j| (format!("l{j}"), format!("v{j}"), format!("v{}", j + 1)))
            .collect();
        for i in 1..=m {
            let tgt = if i == m { 1 } else { k - (i - 1) / (n - 1) };
            edges.push((format!("e{i}"), format!("v{k}"), format!("v{tgt}")));
        }
        Graph::build(&vertices, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> {
        (0..self.vertex_names.len() as u32).map(VertexId)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = EdgeId> {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    pub fn src(&self, e: EdgeId) -> VertexId {
        self.edges[e.index()].src
    }

    pub fn tgt(&self, e: EdgeId) -> VertexId {
        self.edges[e.index()].tgt
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.index()]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.index()].name
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertex_names
            .iter()
            .position(|n| n == name)
            .map(|i| VertexId(i as u32))
    }

    pub fn edge_by_name(&self, name: &str) -> Option<EdgeId> {
        self.edges
            .iter()
            .position(|e| e.name == name)
            .map(|i| EdgeId(i as u32))
    }

    /// `s⁻¹(v)` in insertion order.
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v.index()]
    }

    /// `t⁻¹(v)` in insertion order.
    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.in_edges[v.index()]
    }

    pub fn is_sink(&self, v: VertexId) -> bool {
        self.out_edges[v.index()].is_empty()
    }

    /// A vertex is regular iff it is not a sink (out-degrees are always
    /// finite here).
    pub fn is_regular(&self, v: VertexId) -> bool {
        !self.is_sink(v)
    }

    /// A vertex is 0-regular iff its only outgoing edge is a loop at it.
    pub fn is_zero_regular(&self, v: VertexId) -> bool {
        match self.out_edges(v) {
            [e] => self.tgt(*e) == v,
            _ => false,
        }
    }

    /// The regular vertices and the 0-regular vertices, in insertion order.
    pub fn regular_vertices(&self) -> (Vec<VertexId>, Vec<VertexId>) {
        let reg: Vec<VertexId> = self.vertices().filter(|&v| self.is_regular(v)).collect();
        let reg0: Vec<VertexId> = reg
            .iter()
            .copied()
            .filter(|&v| self.is_zero_regular(v))
            .collect();
        (reg, reg0)
    }

    /// The distinguished outgoing edge used by the normal form: the last
    /// element of `s⁻¹(v)` in insertion order. `None` at sinks.
    pub fn special_edge(&self, v: VertexId) -> Option<EdgeId> {
        self.out_edges(v).last().copied()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph with vertices [")?;
        for (i, v) in self.vertex_names.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "] and edges [")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(
                f,
                "{}: {} -> {}",
                e.name,
                self.vertex_name(e.src),
                self.vertex_name(e.tgt)
            )?;
        }
        write!(f, "]")
    }
}

/// True when the two references denote the same graph, by pointer or by
/// structural equality. Structural equality keeps independently built
/// copies of the same family interchangeable.
pub fn same_graph(a: &Arc<Graph>, b: &Arc<Graph>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
