//! The wire formats: JSON schemas for graphs, elements, morphisms,
//! generator assignments, reports, and embedding results.
//!
//! Schemas use identifier names throughout, so files are portable across
//! processes. Maps serialize as sorted JSON objects; everything else keeps
//! construction order. Conversions into domain values validate against the
//! carried graphs and fail with a descriptive error.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{Element, Term};
use crate::cuntz::{CongruenceWitness, EmbeddingResult};
use crate::error::Error;
use crate::graph::{EdgeId, Graph};
use crate::matrix::{MatrixElement, MatrixReport};
use crate::morphism::{GraphHom, PathHom};
use crate::path::Path;
use crate::report::{RelationRecord, VerifyReport};
use crate::starhom::{StarHom, StarHomReport};

/// `{"vertices": [..], "edges": [{"id", "src", "tgt"}, ..]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> GraphJson {
        GraphJson {
            vertices: g.vertices().map(|v| g.vertex_name(v).to_owned()).collect(),
            edges: g
                .edges()
                .map(|e| EdgeJson {
                    id: g.edge_name(e).to_owned(),
                    src: g.vertex_name(g.src(e)).to_owned(),
                    tgt: g.vertex_name(g.tgt(e)).to_owned(),
                })
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Arc<Graph>, Error> {
        let triples: Vec<(String, String, String)> = self
            .edges
            .iter()
            .map(|e| (e.id.clone(), e.src.clone(), e.tgt.clone()))
            .collect();
        Graph::build(&self.vertices, &triples)
    }
}

/// A path as a list of edge ids, or `{"vertex": id}` for a length-0 path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PathJson {
    Edges(Vec<String>),
    Vertex { vertex: String },
}

impl PathJson {
    pub fn from_path(graph: &Graph, p: &Path) -> PathJson {
        if p.is_empty() {
            PathJson::Vertex {
                vertex: graph.vertex_name(p.source()).to_owned(),
            }
        } else {
            PathJson::Edges(
                p.edges()
                    .iter()
                    .map(|&e| graph.edge_name(e).to_owned())
                    .collect(),
            )
        }
    }

    pub fn to_path(&self, graph: &Graph) -> Result<Path, Error> {
        match self {
            PathJson::Vertex { vertex } => {
                let v = graph
                    .vertex_by_name(vertex)
                    .ok_or_else(|| Error::UnknownVertex(vertex.clone()))?;
                Ok(Path::vertex(v))
            }
            PathJson::Edges(ids) => {
                if ids.is_empty() {
                    return Err(Error::BadInput(
                        "an empty edge list does not determine a path; use {\"vertex\": id}"
                            .into(),
                    ));
                }
                let edges: Vec<EdgeId> = ids
                    .iter()
                    .map(|id| {
                        graph
                            .edge_by_name(id)
                            .ok_or_else(|| Error::UnknownEdge(id.clone()))
                    })
                    .collect::<Result<_, _>>()?;
                Path::from_edges(graph, &edges)
            }
        }
    }
}

/// One monomial with its coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: i64,
    pub alpha: PathJson,
    pub beta: PathJson,
}

/// An element as a list of monomials.
pub type ElementJson = Vec<TermJson>;

pub fn element_to_json(x: &Element) -> ElementJson {
    let g = x.graph();
    x.terms()
        .map(|(t, c)| TermJson {
            coeff: c,
            alpha: PathJson::from_path(g, t.alpha()),
            beta: PathJson::from_path(g, t.beta()),
        })
        .collect()
}

pub fn element_from_json(graph: &Arc<Graph>, json: &ElementJson) -> Result<Element, Error> {
    let mut acc = Element::zero(graph.clone());
    for tj in json {
        let alpha = tj.alpha.to_path(graph)?;
        let beta = tj.beta.to_path(graph)?;
        let term = Term::new(graph, alpha, beta)?;
        acc = &acc + &Element::from_term(graph.clone(), term, tj.coeff);
    }
    Ok(acc)
}

/// Morphism schema shared by graph homomorphisms (all edge images are
/// single-edge lists) and path homomorphisms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismJson {
    pub source: GraphJson,
    pub target: GraphJson,
    pub vmap: BTreeMap<String, String>,
    pub emap: BTreeMap<String, PathJson>,
}

fn morphism_maps(
    source: &Arc<Graph>,
    target: &Arc<Graph>,
    json: &MorphismJson,
) -> Result<(Vec<crate::graph::VertexId>, Vec<Path>), Error> {
    let mut vmap = Vec::with_capacity(source.vertex_count());
    for v in source.vertices() {
        let name = source.vertex_name(v);
        let image = json
            .vmap
            .get(name)
            .ok_or_else(|| Error::IncompleteMorphism(format!("vertex {name}")))?;
        vmap.push(
            target
                .vertex_by_name(image)
                .ok_or_else(|| Error::UnknownVertex(image.clone()))?,
        );
    }
    let mut emap = Vec::with_capacity(source.edge_count());
    for e in source.edges() {
        let name = source.edge_name(e);
        let image = json
            .emap
            .get(name)
            .ok_or_else(|| Error::IncompleteMorphism(format!("edge {name}")))?;
        emap.push(image.to_path(target)?);
    }
    Ok((vmap, emap))
}

impl MorphismJson {
    pub fn from_path_hom(f: &PathHom) -> MorphismJson {
        let src = f.source();
        let tgt = f.target();
        MorphismJson {
            source: GraphJson::from_graph(src),
            target: GraphJson::from_graph(tgt),
            vmap: src
                .vertices()
                .map(|v| {
                    (
                        src.vertex_name(v).to_owned(),
                        tgt.vertex_name(f.vertex_image(v)).to_owned(),
                    )
                })
                .collect(),
            emap: src
                .edges()
                .map(|e| {
                    (
                        src.edge_name(e).to_owned(),
                        PathJson::from_path(tgt, f.edge_image(e)),
                    )
                })
                .collect(),
        }
    }

    pub fn from_graph_hom(h: &GraphHom) -> MorphismJson {
        MorphismJson::from_path_hom(&h.lift())
    }

    pub fn to_path_hom(&self) -> Result<PathHom, Error> {
        let source = self.source.to_graph()?;
        let target = self.target.to_graph()?;
        let (vmap, emap) = morphism_maps(&source, &target, self)?;
        PathHom::new(source, target, vmap, emap)
    }

    /// Reads the schema as a graph homomorphism; every edge image must be a
    /// single edge.
    pub fn to_graph_hom(&self) -> Result<GraphHom, Error> {
        let source = self.source.to_graph()?;
        let target = self.target.to_graph()?;
        let (vmap, emap) = morphism_maps(&source, &target, self)?;
        let emap = emap
            .iter()
            .enumerate()
            .map(|(i, p)| match p.edges() {
                [e] => Ok(*e),
                _ => Err(Error::NotAGraphHom(format!(
                    "image of {} has length {}",
                    source.edge_name(crate::graph::EdgeId(i as u32)),
                    p.len()
                ))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        GraphHom::new(source, target, vmap, emap)
    }
}

/// Generator assignment schema mirroring the morphism schema with element
/// values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarHomJson {
    pub source: GraphJson,
    pub target: GraphJson,
    pub pmap: BTreeMap<String, ElementJson>,
    pub smap: BTreeMap<String, ElementJson>,
}

impl StarHomJson {
    pub fn from_star_hom(h: &StarHom) -> StarHomJson {
        let src = h.source();
        let tgt = h.target();
        StarHomJson {
            source: GraphJson::from_graph(src),
            target: GraphJson::from_graph(tgt),
            pmap: src
                .vertices()
                .map(|v| {
                    (
                        src.vertex_name(v).to_owned(),
                        element_to_json(h.vertex_image(v)),
                    )
                })
                .collect(),
            smap: src
                .edges()
                .map(|e| {
                    (
                        src.edge_name(e).to_owned(),
                        element_to_json(h.edge_image(e)),
                    )
                })
                .collect(),
        }
    }

    pub fn to_star_hom(&self) -> Result<StarHom, Error> {
        let source = self.source.to_graph()?;
        let target = self.target.to_graph()?;
        let mut pmap = Vec::with_capacity(source.vertex_count());
        for v in source.vertices() {
            let name = source.vertex_name(v);
            let ej = self
                .pmap
                .get(name)
                .ok_or_else(|| Error::IncompleteMorphism(format!("vertex {name}")))?;
            pmap.push(element_from_json(&target, ej)?);
        }
        let mut smap = Vec::with_capacity(source.edge_count());
        for e in source.edges() {
            let name = source.edge_name(e);
            let ej = self
                .smap
                .get(name)
                .ok_or_else(|| Error::IncompleteMorphism(format!("edge {name}")))?;
            smap.push(element_from_json(&target, ej)?);
        }
        StarHom::new(source, target, pmap, smap)
    }
}

/// A matrix with element entries (row-major nested lists).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub size: usize,
    pub entries: Vec<Vec<ElementJson>>,
}

pub fn matrix_to_json(m: &MatrixElement) -> MatrixJson {
    MatrixJson {
        size: m.size(),
        entries: m
            .rows()
            .map(|r| r.iter().map(element_to_json).collect())
            .collect(),
    }
}

/// Relation-check record with the counterexample serialized.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationRecordJson<C> {
    pub relation: String,
    pub subject: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<C>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReportJson<C> {
    pub records: Vec<RelationRecordJson<C>>,
    pub pass: bool,
    pub unital: bool,
    pub nonzero: bool,
}

fn report_json<C, D, F: Fn(&C) -> D>(r: &VerifyReport<C>, f: F) -> VerifyReportJson<D> {
    VerifyReportJson {
        records: r
            .records
            .iter()
            .map(|rec: &RelationRecord<C>| RelationRecordJson {
                relation: rec.relation.as_str().to_owned(),
                subject: rec.subject.clone(),
                pass: rec.pass,
                counterexample: rec.counterexample.as_ref().map(&f),
            })
            .collect(),
        pass: r.pass,
        unital: r.unital,
        nonzero: r.nonzero,
    }
}

pub fn star_report_to_json(r: &StarHomReport) -> VerifyReportJson<ElementJson> {
    report_json(r, element_to_json)
}

pub fn matrix_report_to_json(r: &MatrixReport) -> VerifyReportJson<MatrixJson> {
    report_json(r, matrix_to_json)
}

/// The chain of morphisms an embedding is composed from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainJson {
    pub kawamura: MorphismJson,
    pub collapse: MorphismJson,
    pub straighten: MorphismJson,
    pub line_lift: MorphismJson,
}

/// Full embedding output: witness, generator images, chain, reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingJson {
    pub witness: CongruenceWitness,
    pub m: u32,
    pub generator_images: Vec<MatrixJson>,
    pub chain: ChainJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub star_report: Option<VerifyReportJson<ElementJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix_report: Option<VerifyReportJson<MatrixJson>>,
}

pub fn embedding_to_json(r: &EmbeddingResult) -> EmbeddingJson {
    EmbeddingJson {
        witness: r.witness,
        m: r.m,
        generator_images: r.generator_images.iter().map(matrix_to_json).collect(),
        chain: ChainJson {
            kawamura: MorphismJson::from_path_hom(&r.chain.kawamura),
            collapse: MorphismJson::from_graph_hom(&r.chain.collapse),
            straighten: MorphismJson::from_path_hom(&r.chain.straighten),
            line_lift: MorphismJson::from_path_hom(&r.chain.line_lift),
        },
        star_report: r.reports.as_ref().map(|rep| star_report_to_json(&rep.star)),
        matrix_report: r
            .reports
            .as_ref()
            .map(|rep| matrix_report_to_json(&rep.matrix)),
    }
}

/// Input schema for canonicalization: the graph and the element over it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonInput {
    pub graph: GraphJson,
    pub element: ElementJson,
}
