//! Graph homomorphisms, path homomorphisms, and the two admissibility
//! decision procedures.
//!
//! A graph homomorphism is an edge-to-edge, vertex-to-vertex map commuting
//! with source and target. A path homomorphism sends vertices to vertices
//! and edges to finite paths (possibly of length 0) with matching
//! endpoints; it extends uniquely to all finite paths by concatenation.
//!
//! Each kind has its own admissibility notion, and only admissible
//! morphisms induce *-homomorphisms of the graph algebras:
//!
//! * graph homomorphisms `g: F -> E` must be proper, target-bijective on
//!   edge preimages, and pull regular vertices back to regular vertices
//!   (the contravariant direction `g*`);
//! * path homomorphisms `f: E -> F` must be injective on vertices, send
//!   distinct edges to prefix-incomparable paths, and satisfy the
//!   regularity condition: at every regular vertex the edge images form a
//!   complete leaf set, except that a 0-regular vertex may instead collapse
//!   its loop onto a vertex (the covariant direction `f_*`).
//!
//! Checks return machine-readable [`Report`]s whose records carry the
//! violated clause and a concrete witness.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{same_graph, EdgeId, Graph, VertexId};
use crate::path::Path;

/// A homomorphism of graphs: vertex and edge maps intertwining src/tgt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphHom {
    source: Arc<Graph>,
    target: Arc<Graph>,
    vmap: Vec<VertexId>,
    emap: Vec<EdgeId>,
}

impl GraphHom {
    /// Builds the morphism from total maps given as parallel vectors
    /// (indexed by source vertex/edge). Totality is enforced; the
    /// intertwining equations are checked separately by [`GraphHom::is_valid`].
    pub fn new(
        source: Arc<Graph>,
        target: Arc<Graph>,
        vmap: Vec<VertexId>,
        emap: Vec<EdgeId>,
    ) -> Result<GraphHom, Error> {
        if vmap.len() != source.vertex_count() {
            return Err(Error::IncompleteMorphism("every vertex".into()));
        }
        if emap.len() != source.edge_count() {
            return Err(Error::IncompleteMorphism("every edge".into()));
        }
        if let Some(v) = vmap.iter().find(|v| v.index() >= target.vertex_count()) {
            return Err(Error::UnknownVertex(format!("{v:?}")));
        }
        if let Some(e) = emap.iter().find(|e| e.index() >= target.edge_count()) {
            return Err(Error::UnknownEdge(format!("{e:?}")));
        }
        Ok(GraphHom {
            source,
            target,
            vmap,
            emap,
        })
    }

    pub fn identity(graph: Arc<Graph>) -> GraphHom {
        GraphHom {
            vmap: graph.vertices().collect(),
            emap: graph.edges().collect(),
            source: graph.clone(),
            target: graph,
        }
    }

    pub fn source(&self) -> &Arc<Graph> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Graph> {
        &self.target
    }

    pub fn vertex_image(&self, v: VertexId) -> VertexId {
        self.vmap[v.index()]
    }

    pub fn edge_image(&self, e: EdgeId) -> EdgeId {
        self.emap[e.index()]
    }

    /// Both intertwining equations, on every edge.
    pub fn is_valid(&self) -> bool {
        self.source.edges().all(|e| {
            let img = self.edge_image(e);
            self.target.src(img) == self.vertex_image(self.source.src(e))
                && self.target.tgt(img) == self.vertex_image(self.source.tgt(e))
        })
    }

    /// Composition `other ∘ self` (self: A -> B, other: B -> C).
    pub fn then(&self, other: &GraphHom) -> Result<GraphHom, Error> {
        if !same_graph(&self.target, &other.source) {
            return Err(Error::CompositionMismatch);
        }
        Ok(GraphHom {
            source: self.source.clone(),
            target: other.target.clone(),
            vmap: self.vmap.iter().map(|&v| other.vertex_image(v)).collect(),
            emap: self.emap.iter().map(|&e| other.edge_image(e)).collect(),
        })
    }

    /// The induced length-preserving path homomorphism.
    pub fn lift(&self) -> PathHom {
        PathHom {
            source: self.source.clone(),
            target: self.target.clone(),
            vmap: self.vmap.clone(),
            emap: self
                .emap
                .iter()
                .map(|&e| Path::edge(&self.target, e))
                .collect(),
        }
    }
}

/// A path homomorphism, stored by its values on vertices and edges; the
/// extension to all finite paths is forced by multiplicativity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathHom {
    source: Arc<Graph>,
    target: Arc<Graph>,
    vmap: Vec<VertexId>,
    emap: Vec<Path>,
}

impl PathHom {
    pub fn new(
        source: Arc<Graph>,
        target: Arc<Graph>,
        vmap: Vec<VertexId>,
        emap: Vec<Path>,
    ) -> Result<PathHom, Error> {
        if vmap.len() != source.vertex_count() {
            return Err(Error::IncompleteMorphism("every vertex".into()));
        }
        if emap.len() != source.edge_count() {
            return Err(Error::IncompleteMorphism("every edge".into()));
        }
        if let Some(v) = vmap.iter().find(|v| v.index() >= target.vertex_count()) {
            return Err(Error::UnknownVertex(format!("{v:?}")));
        }
        if let Some(p) = emap.iter().find(|p| !p.validate(&target)) {
            return Err(Error::NotAPathHom(format!(
                "edge image {p:?} is not a path of the target"
            )));
        }
        Ok(PathHom {
            source,
            target,
            vmap,
            emap,
        })
    }

    pub fn identity(graph: Arc<Graph>) -> PathHom {
        GraphHom::identity(graph).lift()
    }

    pub fn source(&self) -> &Arc<Graph> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Graph> {
        &self.target
    }

    pub fn vertex_image(&self, v: VertexId) -> VertexId {
        self.vmap[v.index()]
    }

    pub fn edge_image(&self, e: EdgeId) -> &Path {
        &self.emap[e.index()]
    }

    /// Endpoint equivariance on every edge (vertex images are vertices by
    /// construction, and the concatenation extension is then well defined).
    pub fn is_valid(&self) -> bool {
        self.source.edges().all(|e| {
            let img = self.edge_image(e);
            img.source() == self.vertex_image(self.source.src(e))
                && img.target() == self.vertex_image(self.source.tgt(e))
        })
    }

    /// The multiplicative extension to an arbitrary finite path.
    pub fn path_image(&self, p: &Path) -> Path {
        let mut out = Path::vertex(self.vertex_image(p.source()));
        for &e in p.edges() {
            out = out
                .concat(self.edge_image(e))
                .expect("endpoint equivariance");
        }
        out
    }

    /// Composition `other ∘ self` (self: A -> B, other: B -> C).
    pub fn then(&self, other: &PathHom) -> Result<PathHom, Error> {
        if !same_graph(&self.target, &other.source) {
            return Err(Error::CompositionMismatch);
        }
        Ok(PathHom {
            source: self.source.clone(),
            target: other.target.clone(),
            vmap: self.vmap.iter().map(|&v| other.vertex_image(v)).collect(),
            emap: self.emap.iter().map(|p| other.path_image(p)).collect(),
        })
    }

    /// True when every edge image has length 1, i.e. the morphism is the
    /// lift of a graph homomorphism.
    pub fn is_length_preserving(&self) -> bool {
        self.emap.iter().all(|p| p.len() == 1)
    }
}

/// Clause identifiers for admissibility reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Clause {
    /// Graph homomorphisms: both maps finite-to-one (automatic here).
    Properness,
    /// Graph homomorphisms: edge preimages biject onto vertex preimages
    /// along targets.
    TargetBijectivity,
    /// Graph homomorphisms: regular vertices pull back to regular vertices.
    RegularityPullback,
    /// Path homomorphisms: injective on vertices.
    VertexInjectivity,
    /// Path homomorphisms: no edge image is a prefix of another's.
    Monotonicity,
    /// Path homomorphisms: edge images at each regular vertex form a
    /// complete leaf set (or the 0-regular collapse).
    Regularity,
}

impl Clause {
    pub fn as_str(self) -> &'static str {
        match self {
            Clause::Properness => "properness",
            Clause::TargetBijectivity => "target-bijectivity",
            Clause::RegularityPullback => "regularity-pullback",
            Clause::VertexInjectivity => "vertex-injectivity",
            Clause::Monotonicity => "monotonicity",
            Clause::Regularity => "regularity",
        }
    }
}

/// A concrete witness for a failed clause, in terms of identifier names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Witness {
    /// Preimage edges of `target_edge` whose target multiset does not
    /// biject onto the vertex preimage.
    PreimageMismatch {
        target_edge: String,
        preimage_edges: Vec<String>,
        preimage_targets: Vec<String>,
        expected_vertices: Vec<String>,
    },
    /// `vertex` maps to a regular vertex but is not regular itself.
    IrregularPullback { vertex: String, image: String },
    /// Two distinct vertices with a common image.
    VertexCollision {
        first: String,
        second: String,
        image: String,
    },
    /// `f(first) ⪯ f(second)` for distinct edges.
    PrefixOverlap {
        first: String,
        second: String,
        first_image: Vec<String>,
        second_image: Vec<String>,
    },
    /// Two distinct edges at `vertex` with the same image path.
    EdgeCollision {
        vertex: String,
        first: String,
        second: String,
    },
    /// An edge at `vertex` mapping to a length-0 path where a complete
    /// leaf set is required.
    ZeroLengthImage { vertex: String, edge: String },
    /// A member of the image set at `vertex` extending another member.
    LeafOverlap {
        vertex: String,
        shorter: Vec<String>,
        longer: Vec<String>,
    },
    /// No member of the image set at `vertex` starts with
    /// `prefix + [missing]` even though some member takes the `prefix`
    /// route through the source of `missing`.
    IncompleteSiblings {
        vertex: String,
        member: Vec<String>,
        position: usize,
        prefix: Vec<String>,
        missing: String,
    },
}

/// One clause verdict; `witness` is populated exactly on failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseRecord {
    pub clause: Clause,
    pub subject: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl ClauseRecord {
    fn pass(clause: Clause, subject: impl Into<String>) -> ClauseRecord {
        ClauseRecord {
            clause,
            subject: subject.into(),
            pass: true,
            witness: None,
        }
    }

    fn fail(clause: Clause, subject: impl Into<String>, witness: Witness) -> ClauseRecord {
        ClauseRecord {
            clause,
            subject: subject.into(),
            pass: false,
            witness: Some(witness),
        }
    }
}

/// The aggregated verdict of an admissibility check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub records: Vec<ClauseRecord>,
    pub pass: bool,
}

impl Report {
    fn from_records(records: Vec<ClauseRecord>) -> Report {
        let pass = records.iter().all(|r| r.pass);
        Report { records, pass }
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClauseRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    /// The failed records for one clause.
    pub fn failures_for(&self, clause: Clause) -> Vec<&ClauseRecord> {
        self.failures().filter(|r| r.clause == clause).collect()
    }
}

fn names(graph: &Graph, edges: &[EdgeId]) -> Vec<String> {
    edges
        .iter()
        .map(|&e| graph.edge_name(e).to_owned())
        .collect()
}

fn path_names(graph: &Graph, p: &Path) -> Vec<String> {
    names(graph, p.edges())
}

/// Decides admissibility of a valid graph homomorphism `g: F -> E` for the
/// contravariant induction. Callers should check [`GraphHom::is_valid`]
/// first; the verdicts assume it.
pub fn check_graph_hom(h: &GraphHom) -> Report {
    let src = &h.source;
    let tgt = &h.target;
    let mut records = Vec::new();

    // (1) properness: finite graphs only, so every preimage is finite.
    records.push(ClauseRecord::pass(Clause::Properness, "finite graphs"));

    // vertex preimages, in source insertion order
    let mut vertex_preimage: Vec<Vec<VertexId>> = vec![Vec::new(); tgt.vertex_count()];
    for v in src.vertices() {
        vertex_preimage[h.vertex_image(v).index()].push(v);
    }
    let mut edge_preimage: Vec<Vec<EdgeId>> = vec![Vec::new(); tgt.edge_count()];
    for e in src.edges() {
        edge_preimage[h.edge_image(e).index()].push(e);
    }

    // (2) target-bijectivity: e ↦ t(e) maps (g¹)⁻¹(x) bijectively onto
    // (g⁰)⁻¹(t(x)) for every target edge x.
    for x in tgt.edges() {
        let pre = &edge_preimage[x.index()];
        let expected = &vertex_preimage[tgt.tgt(x).index()];
        let mut seen: Vec<VertexId> = pre.iter().map(|&e| src.tgt(e)).collect();
        let subject = format!("edge {}", tgt.edge_name(x));
        let mut sorted = seen.clone();
        sorted.sort();
        sorted.dedup();
        let bijective = seen.len() == expected.len()
            && sorted.len() == seen.len()
            && expected.iter().all(|v| sorted.binary_search(v).is_ok());
        if bijective {
            records.push(ClauseRecord::pass(Clause::TargetBijectivity, subject));
        } else {
            seen.sort();
            records.push(ClauseRecord::fail(
                Clause::TargetBijectivity,
                subject,
                Witness::PreimageMismatch {
                    target_edge: tgt.edge_name(x).to_owned(),
                    preimage_edges: names(src, pre),
                    preimage_targets: seen
                        .iter()
                        .map(|&v| src.vertex_name(v).to_owned())
                        .collect(),
                    expected_vertices: expected
                        .iter()
                        .map(|&v| src.vertex_name(v).to_owned())
                        .collect(),
                },
            ));
        }
    }

    // (3) regularity: preimages of regular vertices are regular.
    for v in src.vertices() {
        let img = h.vertex_image(v);
        if tgt.is_regular(img) {
            let subject = format!("vertex {}", src.vertex_name(v));
            if src.is_regular(v) {
                records.push(ClauseRecord::pass(Clause::RegularityPullback, subject));
            } else {
                records.push(ClauseRecord::fail(
                    Clause::RegularityPullback,
                    subject,
                    Witness::IrregularPullback {
                        vertex: src.vertex_name(v).to_owned(),
                        image: tgt.vertex_name(img).to_owned(),
                    },
                ));
            }
        }
    }

    Report::from_records(records)
}

/// Whether the image set of `s⁻¹(v)` is a complete leaf set, reported
/// record by record. Shared between the regular and 0-regular cases.
fn leaf_set_records(
    f: &PathHom,
    v: VertexId,
    records: &mut Vec<ClauseRecord>,
) {
    let src = &f.source;
    let tgt = &f.target;
    let subject = format!("vertex {}", src.vertex_name(v));
    let star = src.out_edges(v);
    let images: Vec<&Path> = star.iter().map(|&e| f.edge_image(e)).collect();

    // (a) injectivity on the star
    let mut inj_ok = true;
    for i in 0..star.len() {
        for j in (i + 1)..star.len() {
            if images[i] == images[j] {
                inj_ok = false;
                records.push(ClauseRecord::fail(
                    Clause::Regularity,
                    subject.clone(),
                    Witness::EdgeCollision {
                        vertex: src.vertex_name(v).to_owned(),
                        first: src.edge_name(star[i]).to_owned(),
                        second: src.edge_name(star[j]).to_owned(),
                    },
                ));
            }
        }
    }

    // (b)(i) members are genuine paths of positive length
    let mut len_ok = true;
    for (idx, p) in images.iter().enumerate() {
        if p.is_empty() {
            len_ok = false;
            records.push(ClauseRecord::fail(
                Clause::Regularity,
                subject.clone(),
                Witness::ZeroLengthImage {
                    vertex: src.vertex_name(v).to_owned(),
                    edge: src.edge_name(star[idx]).to_owned(),
                },
            ));
        }
    }

    // (b)(ii) antichain: no member strictly extends another. Length-0
    // members are already flagged by (i), so only genuine words compare.
    let mut chain_ok = true;
    for p in &images {
        for q in &images {
            if !p.is_empty() && p.len() < q.len() && p.is_prefix_of(q) {
                chain_ok = false;
                records.push(ClauseRecord::fail(
                    Clause::Regularity,
                    subject.clone(),
                    Witness::LeafOverlap {
                        vertex: src.vertex_name(v).to_owned(),
                        shorter: path_names(tgt, p),
                        longer: path_names(tgt, q),
                    },
                ));
            }
        }
    }

    // (b)(iii) sibling completeness: wherever a member crosses an edge, all
    // sibling edges must start some member with the same prefix. Any
    // witness extension would itself extend to a member, so scanning
    // members suffices.
    let mut sib_ok = true;
    for p in &images {
        for i in 0..p.len() {
            let prefix = &p.edges()[..i];
            let here = tgt.src(p.edges()[i]);
            'sib: for &e in tgt.out_edges(here) {
                let mut want: Vec<EdgeId> = prefix.to_vec();
                want.push(e);
                for q in &images {
                    if q.len() >= want.len() && q.edges()[..want.len()] == want[..] {
                        continue 'sib;
                    }
                }
                sib_ok = false;
                records.push(ClauseRecord::fail(
                    Clause::Regularity,
                    subject.clone(),
                    Witness::IncompleteSiblings {
                        vertex: src.vertex_name(v).to_owned(),
                        member: path_names(tgt, p),
                        position: i + 1,
                        prefix: names(tgt, prefix),
                        missing: tgt.edge_name(e).to_owned(),
                    },
                ));
            }
        }
    }

    if inj_ok && len_ok && chain_ok && sib_ok {
        records.push(ClauseRecord::pass(Clause::Regularity, subject));
    }
}

/// Decides admissibility of a valid path homomorphism for the covariant
/// induction. Callers should check [`PathHom::is_valid`] first.
pub fn check_path_hom(f: &PathHom) -> Report {
    let src = &f.source;
    let tgt = &f.target;
    let mut records = Vec::new();

    // (1) vertex-injectivity
    let mut seen: HashMap<VertexId, VertexId> = HashMap::new();
    let mut inj_ok = true;
    for v in src.vertices() {
        let img = f.vertex_image(v);
        if let Some(&prev) = seen.get(&img) {
            inj_ok = false;
            records.push(ClauseRecord::fail(
                Clause::VertexInjectivity,
                format!("vertex {}", src.vertex_name(v)),
                Witness::VertexCollision {
                    first: src.vertex_name(prev).to_owned(),
                    second: src.vertex_name(v).to_owned(),
                    image: tgt.vertex_name(img).to_owned(),
                },
            ));
        } else {
            seen.insert(img, v);
        }
    }
    if inj_ok {
        records.push(ClauseRecord::pass(Clause::VertexInjectivity, "all vertices"));
    }

    // (2) monotonicity on distinct edge pairs (the e = e′ case is vacuous)
    let mut mono_ok = true;
    for e1 in src.edges() {
        for e2 in src.edges() {
            if e1 == e2 {
                continue;
            }
            let p1 = f.edge_image(e1);
            let p2 = f.edge_image(e2);
            if p1.is_prefix_of(p2) {
                mono_ok = false;
                records.push(ClauseRecord::fail(
                    Clause::Monotonicity,
                    format!(
                        "edges {}, {}",
                        src.edge_name(e1),
                        src.edge_name(e2)
                    ),
                    Witness::PrefixOverlap {
                        first: src.edge_name(e1).to_owned(),
                        second: src.edge_name(e2).to_owned(),
                        first_image: path_names(tgt, p1),
                        second_image: path_names(tgt, p2),
                    },
                ));
            }
        }
    }
    if mono_ok {
        records.push(ClauseRecord::pass(Clause::Monotonicity, "all edge pairs"));
    }

    // (3) regularity
    let (reg, reg0) = src.regular_vertices();
    for v in reg {
        if reg0.contains(&v) {
            // the collapse alternative: the single loop maps to its vertex
            let e = src.out_edges(v)[0];
            let img = f.edge_image(e);
            if img.is_empty() && img.source() == f.vertex_image(v) {
                records.push(ClauseRecord::pass(
                    Clause::Regularity,
                    format!("vertex {} (collapsed loop)", src.vertex_name(v)),
                ));
                continue;
            }
        }
        leaf_set_records(f, v, &mut records);
    }

    Report::from_records(records)
}
