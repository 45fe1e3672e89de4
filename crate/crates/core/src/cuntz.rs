//! Cuntz-algebra constructions and the verified embedding pipeline.
//!
//! `O_n` is modeled as the algebra of the rose with `n` loops, and
//! `M_k(O_m)` as the algebra of the matrix rose (the `k`-line with `m` back
//! edges). The pivot graph mediates between the two: collapsing it onto the
//! rose induces a unital *-homomorphism contravariantly, and straightening
//! its edges into the matrix rose induces one covariantly. Composing
//!
//! ```text
//! C*(rose(p)) --collapse*--> C*(pivot(m,p)) --straighten_*--> C*(matrix_rose(m,k))
//!             --line_lift_*--> C*(matrix_rose(q,k)) --matrix iso--> M_k(O_q)
//! ```
//!
//! with `m = (q-1)s + 1` chosen from the congruence `(p-1)k = (q-1)s`
//! yields explicit polynomial formulas for a unital embedding
//! `O_p -> M_k(O_q)`, and every link of the chain is machine-verified.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{Element, Term};
use crate::error::Error;
use crate::graph::{same_graph, EdgeId, Graph, VertexId};
use crate::matrix::{matrix_check, MatrixElement, MatrixReport};
use crate::morphism::{GraphHom, PathHom};
use crate::path::Path;
use crate::report::verify_generator_assignment;
use crate::starhom::{induce_contravariant, induce_covariant, StarHom, StarHomReport};

/// Witness of the K-theory congruence `(p-1)k = (q-1)s`, the necessary
/// condition for a unital embedding `O_p -> M_k(O_q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceWitness {
    pub p: u32,
    pub q: u32,
    pub k: u32,
    pub s: u32,
}

/// Solves `(p-1)k = (q-1)s` for s. Fails when `q-1` does not divide
/// `(p-1)k` — then no unital embedding exists.
pub fn congruence(p: u32, q: u32, k: u32) -> Result<CongruenceWitness, Error> {
    if p < 2 || q < 2 {
        return Err(Error::BadParameter(format!(
            "Cuntz algebra indices must be >= 2, got p={p}, q={q}"
        )));
    }
    if k < 1 {
        return Err(Error::BadParameter(format!("matrix size must be >= 1, got k={k}")));
    }
    let lhs = (p - 1) * k;
    if !lhs.is_multiple_of(q - 1) {
        return Err(Error::CongruenceUnsatisfied { p, q, k });
    }
    Ok(CongruenceWitness {
        p,
        q,
        k,
        s: lhs / (q - 1),
    })
}

/// The Kawamura path homomorphism `rose(m) -> rose(n)` for `n-1 | m-1`,
/// inducing the classical unital embedding `O_m -> O_n`.
///
/// The first `m-1` loops split into `k = (m-1)/(n-1)` batches of `n-1`;
/// batch `l` maps `e_{(l-1)(n-1)+j} ↦ e_n^{l-1} e_j`, and the last loop
/// maps to `e_n^k`.
pub fn kawamura(m: u32, n: u32) -> Result<PathHom, Error> {
    if m < 2 || n < 2 {
        return Err(Error::BadParameter(format!(
            "rose sizes must be >= 2, got m={m}, n={n}"
        )));
    }
    if !(m - 1).is_multiple_of(n - 1) {
        return Err(Error::Indivisible(n, m));
    }
    let k = (m - 1) / (n - 1);
    let source = Graph::rose(m)?;
    let target = Graph::rose(n)?;
    let last = EdgeId(n - 1);
    let mut emap = Vec::with_capacity(m as usize);
    for i in 1..=m {
        let word: Vec<EdgeId> = if i == m {
            vec![last; k as usize]
        } else {
            let batch = (i - 1) / (n - 1);
            let j = (i - 1) % (n - 1);
            let mut w = vec![last; batch as usize];
            w.push(EdgeId(j));
            w
        };
        emap.push(Path::from_edges(&target, &word)?);
    }
    PathHom::new(source, target, vec![VertexId(0)], emap)
}

/// The graph homomorphism collapsing `pivot(m, n)` onto `rose(n)`: all
/// vertices to the rose vertex, and each of the `k` edges ending at a
/// common batch position to one loop. Line edges and the cycle-closing
/// edge `e_m` go to the last loop.
pub fn pivot_collapse(m: u32, n: u32) -> Result<GraphHom, Error> {
    let source = Graph::pivot(m, n)?;
    let target = Graph::rose(n)?;
    let k = (m - 1) / (n - 1);
    let vmap = vec![VertexId(0); k as usize];
    let mut emap = Vec::with_capacity(source.edge_count());
    // line edges first, in graph order
    for _j in 1..k {
        emap.push(EdgeId(n - 1));
    }
    for i in 1..=m {
        if i == m {
            emap.push(EdgeId(n - 1));
        } else {
            emap.push(EdgeId((i - 1) % (n - 1)));
        }
    }
    GraphHom::new(source, target, vmap, emap)
}

/// The path homomorphism straightening `pivot(m, n)` into
/// `matrix_rose(m, k)`: line edges map to line edges, and the back edge
/// `e_i` (which ends `j` vertices short of `v_1`'s cycle) maps to
/// `e_i l_1 … l_j` so that every image closes through the line.
pub fn pivot_straighten(m: u32, n: u32) -> Result<PathHom, Error> {
    let source = Graph::pivot(m, n)?;
    let k = (m - 1) / (n - 1);
    let target = Graph::matrix_rose(m, k)?;
    let vmap: Vec<VertexId> = source.vertices().collect();
    let mut emap = Vec::with_capacity(source.edge_count());
    for j in 1..k {
        emap.push(Path::edge(&target, EdgeId(j - 1)));
    }
    for i in 1..=m {
        let back = EdgeId(k - 1 + i - 1);
        let line_tail = if i > (n - 1) * (k - 1) {
            0
        } else {
            k - 1 - (i - 1) / (n - 1)
        };
        let mut edges = vec![back];
        for j in 1..=line_tail {
            edges.push(EdgeId(j - 1));
        }
        emap.push(Path::from_edges(&target, &edges)?);
    }
    PathHom::new(source, target, vmap, emap)
}

/// The lift of [`kawamura`]`(m, q)` across the `k`-line: the path
/// homomorphism `matrix_rose(m, k) -> matrix_rose(q, k)` that fixes the
/// line and sends each back edge to its Kawamura word with a full line
/// traversal interleaved between consecutive letters.
pub fn line_lift(m: u32, q: u32, k: u32) -> Result<PathHom, Error> {
    let kw = kawamura(m, q)?;
    let source = Graph::matrix_rose(m, k)?;
    let target = Graph::matrix_rose(q, k)?;
    let vmap: Vec<VertexId> = source.vertices().collect();
    let mut emap = Vec::with_capacity(source.edge_count());
    for j in 1..k {
        emap.push(Path::edge(&target, EdgeId(j - 1)));
    }
    for i in 1..=m {
        let word = kw.edge_image(EdgeId(i - 1));
        let mut edges: Vec<EdgeId> = Vec::new();
        for (pos, &w) in word.edges().iter().enumerate() {
            if pos > 0 {
                // full line traversal L = l_1 … l_{k-1}
                for j in 1..k {
                    edges.push(EdgeId(j - 1));
                }
            }
            edges.push(EdgeId(k - 1 + w.0));
        }
        emap.push(Path::from_edges(&target, &edges)?);
    }
    PathHom::new(source, target, vmap, emap)
}

/// The generator dictionary of the *-isomorphism
/// `C*(matrix_rose(m, k)) -> M_k(O_m)`:
///
/// * `P_{v_j} ↦` unit at entry `(j, j)`,
/// * `S_{l_j} ↦` unit at entry `(j, j+1)`,
/// * `S_{e_i} ↦ S_{e_i}` at entry `(k, 1)`,
///
/// extended multiplicatively to monomials and linearly to elements.
#[derive(Debug, Clone)]
pub struct MatrixIso {
    source: Arc<Graph>,
    rose: Arc<Graph>,
    k: u32,
}

impl MatrixIso {
    pub fn new(m: u32, k: u32) -> Result<MatrixIso, Error> {
        Ok(MatrixIso {
            source: Graph::matrix_rose(m, k)?,
            rose: Graph::rose(m)?,
            k,
        })
    }

    /// The algebra the dictionary maps out of.
    pub fn source(&self) -> &Arc<Graph> {
        &self.source
    }

    /// The rose whose algebra fills the matrix entries.
    pub fn rose(&self) -> &Arc<Graph> {
        &self.rose
    }

    pub fn size(&self) -> usize {
        self.k as usize
    }

    // A path of the matrix rose as (start row, word of back-edge crossings).
    fn word(&self, p: &Path) -> (usize, Vec<EdgeId>) {
        let line_count = (self.k - 1) as usize;
        let word = p
            .edges()
            .iter()
            .filter(|e| e.index() >= line_count)
            .map(|e| EdgeId((e.index() - line_count) as u32))
            .collect();
        (p.source().index(), word)
    }

    fn rose_path(&self, word: &[EdgeId]) -> Path {
        if word.is_empty() {
            Path::vertex(VertexId(0))
        } else {
            Path::from_edges(&self.rose, word).expect("rose paths always concatenate")
        }
    }

    /// Image of an element of the matrix-rose algebra, entry by entry.
    pub fn apply(&self, x: &Element) -> Result<MatrixElement, Error> {
        if !same_graph(x.graph(), &self.source) {
            return Err(Error::GraphMismatch);
        }
        let k = self.size();
        let mut entries: Vec<Element> = (0..k * k)
            .map(|_| Element::zero(self.rose.clone()))
            .collect();
        for (t, c) in x.terms() {
            let (row, wa) = self.word(t.alpha());
            let (col, wb) = self.word(t.beta());
            let alpha = self.rose_path(&wa);
            let beta = self.rose_path(&wb);
            let term = Term::new(&self.rose, alpha, beta).expect("rose monomials always close");
            let cell = &mut entries[row * k + col];
            *cell = &*cell + &Element::from_term(self.rose.clone(), term, c);
        }
        MatrixElement::from_entries(self.rose.clone(), k, entries)
    }

    /// The source generator whose dictionary image equals the given matrix,
    /// if any — the inverse of the dictionary on generators.
    pub fn invert_generator(&self, mx: &MatrixElement) -> Option<Element> {
        for v in self.source.vertices() {
            let gen = Element::projection(self.source.clone(), v);
            if self.apply(&gen).expect("same graph").equals(mx) {
                return Some(gen);
            }
        }
        for e in self.source.edges() {
            let gen = Element::isometry(self.source.clone(), e);
            if self.apply(&gen).expect("same graph").equals(mx) {
                return Some(gen);
            }
        }
        None
    }

    /// Verifies that the dictionary images satisfy every defining relation
    /// of the matrix-rose algebra inside exact matrix arithmetic — the
    /// *-homomorphism property of the dictionary, machine-checked.
    pub fn relation_report(&self) -> MatrixReport {
        let pmap: Vec<MatrixElement> = self
            .source
            .vertices()
            .map(|v| {
                self.apply(&Element::projection(self.source.clone(), v))
                    .expect("same graph")
            })
            .collect();
        let smap: Vec<MatrixElement> = self
            .source
            .edges()
            .map(|e| {
                self.apply(&Element::isometry(self.source.clone(), e))
                    .expect("same graph")
            })
            .collect();
        verify_generator_assignment(
            &self.source,
            &pmap,
            &smap,
            &MatrixElement::zero(self.rose.clone(), self.size()),
            &MatrixElement::identity(self.rose.clone(), self.size()),
        )
    }
}

/// The morphisms the embedding is composed from. The Kawamura
/// pre-composition is the identity under the parameter choice used here
/// (the source rose is already `rose(p)`); it is recorded anyway so the
/// chain mirrors the construction.
#[derive(Debug, Clone)]
pub struct MorphismChain {
    /// Identity on `rose(p)`.
    pub kawamura: PathHom,
    /// `pivot(m, p) -> rose(p)`, induced contravariantly.
    pub collapse: GraphHom,
    /// `pivot(m, p) -> matrix_rose(m, k)`, induced covariantly.
    pub straighten: PathHom,
    /// `matrix_rose(m, k) -> matrix_rose(q, k)`, induced covariantly.
    pub line_lift: PathHom,
}

/// Verification transcripts of an embedding run.
#[derive(Debug, Clone)]
pub struct EmbeddingReports {
    /// Relations of `C*(rose(p))` under the composed generator assignment.
    pub star: StarHomReport,
    /// Cuntz relations of the `p` generator images in `M_k(O_q)`.
    pub matrix: MatrixReport,
}

/// A verified unital embedding `O_p -> M_k(O_q)`.
#[derive(Debug, Clone)]
pub struct EmbeddingResult {
    pub witness: CongruenceWitness,
    /// Size of the intermediate rose: `m = (q-1)s + 1`.
    pub m: u32,
    /// Images of the `p` Cuntz generators as `k×k` matrices over `rose(q)`.
    pub generator_images: Vec<MatrixElement>,
    pub chain: MorphismChain,
    /// The composed assignment `C*(rose(p)) -> C*(matrix_rose(q, k))`.
    pub composed: StarHom,
    /// `None` when verification was explicitly skipped.
    pub reports: Option<EmbeddingReports>,
}

/// Options for [`embed_with`].
#[derive(Debug, Clone, Copy)]
pub struct EmbedOptions {
    /// Override for the congruence parameter s; must equal `(p-1)k/(q-1)`,
    /// the unique solution, or the run is refused.
    pub s: Option<u32>,
    /// Run the relation and matrix verification (default). The result then
    /// carries passing reports or the call fails.
    pub verify: bool,
}

impl Default for EmbedOptions {
    fn default() -> Self {
        EmbedOptions {
            s: None,
            verify: true,
        }
    }
}

/// Builds and fully verifies the embedding `O_p -> M_k(O_q)`.
pub fn embed(p: u32, q: u32, k: u32) -> Result<EmbeddingResult, Error> {
    embed_with(p, q, k, EmbedOptions::default())
}

pub fn embed_with(p: u32, q: u32, k: u32, opts: EmbedOptions) -> Result<EmbeddingResult, Error> {
    let witness = congruence(p, q, k)?;
    if let Some(s) = opts.s {
        if s != witness.s {
            return Err(Error::BadParameter(format!(
                "s={s} is incompatible: (p-1)k = (q-1)s forces s={}",
                witness.s
            )));
        }
    }
    let s = witness.s;
    let m = (q - 1) * s + 1;
    // m - 1 = (q-1)s = (p-1)k, so both divisibility requirements hold.

    let collapse = pivot_collapse(m, p)?;
    let straighten = pivot_straighten(m, p)?;
    let lift = line_lift(m, q, k)?;

    let g_star = induce_contravariant(&collapse)
        .map_err(|r| Error::Inadmissible(format!("pivot collapse failed admissibility: {r:?}")))?;
    let f_star = induce_covariant(&straighten)
        .map_err(|r| Error::Inadmissible(format!("straightening failed admissibility: {r:?}")))?;
    let e_star = induce_covariant(&lift)
        .map_err(|r| Error::Inadmissible(format!("line lift failed admissibility: {r:?}")))?;

    let composed = g_star.then(&f_star)?.then(&e_star)?;

    let iso = MatrixIso::new(q, k)?;
    let source_rose = composed.source().clone();
    let generator_images: Vec<MatrixElement> = source_rose
        .edges()
        .map(|e| iso.apply(composed.edge_image(e)))
        .collect::<Result<Vec<_>, _>>()?;

    let reports = if opts.verify {
        let star = composed.verify();
        let matrix = matrix_check(&generator_images);
        if !star.pass || !star.unital || !star.nonzero {
            return Err(Error::Inadmissible(format!(
                "composed assignment failed relation verification: {:?}",
                star.failures().map(|r| &r.subject).collect::<Vec<_>>()
            )));
        }
        if !matrix.pass {
            return Err(Error::Inadmissible(format!(
                "generator images failed the matrix Cuntz relations: {:?}",
                matrix.failures().map(|r| &r.subject).collect::<Vec<_>>()
            )));
        }
        Some(EmbeddingReports { star, matrix })
    } else {
        None
    };

    Ok(EmbeddingResult {
        witness,
        m,
        generator_images,
        chain: MorphismChain {
            kawamura: PathHom::identity(source_rose),
            collapse,
            straighten,
            line_lift: lift,
        },
        composed,
        reports,
    })
}

impl EmbeddingResult {
    /// Stable text rendering: the witness line, one matrix per generator,
    /// and the verification summary.
    pub fn render_text(&self) -> String {
        let w = &self.witness;
        let mut out = format!(
            "unital embedding O_{} -> M_{}(O_{})   (p={}, q={}, k={}, s={}, m={})\n",
            w.p, w.k, w.q, w.p, w.q, w.k, w.s, self.m
        );
        for (i, t) in self.generator_images.iter().enumerate() {
            out.push_str(&format!("T_{} = {}\n", i + 1, t.render_cuntz()));
        }
        match &self.reports {
            Some(r) => {
                out.push_str(&format!(
                    "verification: relations {} ({} records), matrix form {} ({} records)\n",
                    if r.star.pass { "PASS" } else { "FAIL" },
                    r.star.records.len(),
                    if r.matrix.pass { "PASS" } else { "FAIL" },
                    r.matrix.records.len(),
                ));
            }
            None => out.push_str("verification: skipped\n"),
        }
        out
    }

    /// LaTeX rendering: one displayed equation per generator image.
    pub fn render_latex(&self) -> String {
        let w = &self.witness;
        let mut out = format!(
            "% unital embedding $\\mathcal{{O}}_{{{}}} \\to M_{{{}}}(\\mathcal{{O}}_{{{}}})$, s = {}, m = {}\n",
            w.p, w.k, w.q, w.s, self.m
        );
        for (i, t) in self.generator_images.iter().enumerate() {
            out.push_str(&format!(
                "\\[ T_{{{}}} = {} \\]\n",
                i + 1,
                crate::latex::matrix_cuntz(t)
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::{check_graph_hom, check_path_hom};

    fn path_names(g: &Graph, p: &Path) -> String {
        p.edges()
            .iter()
            .map(|&e| g.edge_name(e))
            .collect::<Vec<_>>()
            .join(" ")
    }

    #[test]
    fn congruence_solves_or_refuses() {
        assert_eq!(congruence(2, 2, 2).unwrap().s, 2);
        assert_eq!(congruence(3, 2, 1).unwrap().s, 2);
        assert_eq!(
            congruence(4, 3, 1).unwrap_err(),
            Error::CongruenceUnsatisfied { p: 4, q: 3, k: 1 }
        );
        assert!(congruence(1, 2, 1).is_err());
    }

    #[test]
    fn kawamura_of_equal_sizes_is_the_identity() {
        let h = kawamura(4, 4).unwrap();
        assert_eq!(h, PathHom::identity(Graph::rose(4).unwrap()));
    }

    #[test]
    fn kawamura_3_2_words() {
        let h = kawamura(3, 2).unwrap();
        let g = h.target().clone();
        let words: Vec<String> = Graph::rose(3)
            .unwrap()
            .edges()
            .map(|e| path_names(&g, h.edge_image(e)))
            .collect();
        assert_eq!(words, ["e1", "e2 e1", "e2 e2"]);
        assert!(h.is_valid());
        assert!(check_path_hom(&h).pass);
    }

    #[test]
    fn kawamura_5_3_words() {
        let h = kawamura(5, 3).unwrap();
        let g = h.target().clone();
        let words: Vec<String> = Graph::rose(5)
            .unwrap()
            .edges()
            .map(|e| path_names(&g, h.edge_image(e)))
            .collect();
        assert_eq!(words, ["e1", "e2", "e3 e1", "e3 e2", "e3 e3"]);
    }

    #[test]
    fn pivot_collapse_3_2_assignment() {
        let h = pivot_collapse(3, 2).unwrap();
        assert!(h.is_valid());
        let src = h.source().clone();
        let tgt = h.target().clone();
        let image = |name: &str| {
            tgt.edge_name(h.edge_image(src.edge_by_name(name).unwrap()))
                .to_owned()
        };
        assert_eq!(image("e1"), "e1");
        assert_eq!(image("e2"), "e1");
        assert_eq!(image("l1"), "e2");
        assert_eq!(image("e3"), "e2");
        assert!(check_graph_hom(&h).pass);
    }

    #[test]
    fn pivot_collapse_grid_is_admissible() {
        for (m, n) in [(3u32, 2u32), (5, 3), (7, 3), (5, 2)] {
            let h = pivot_collapse(m, n).unwrap();
            assert!(h.is_valid(), "collapse({m},{n}) valid");
            assert!(check_graph_hom(&h).pass, "collapse({m},{n}) admissible");
        }
    }

    #[test]
    fn straighten_3_2_assignment() {
        let f = pivot_straighten(3, 2).unwrap();
        assert!(f.is_valid());
        let src = f.source().clone();
        let tgt = f.target().clone();
        let image = |name: &str| path_names(&tgt, f.edge_image(src.edge_by_name(name).unwrap()));
        assert_eq!(image("e1"), "e1 l1");
        assert_eq!(image("e2"), "e2");
        assert_eq!(image("e3"), "e3");
        assert_eq!(image("l1"), "l1");
        assert!(check_path_hom(&f).pass);
    }

    #[test]
    fn straighten_without_the_line_tail_is_invalid() {
        // sending the looping back edge to the bare back edge breaks
        // endpoint equivariance: e1 ends at v1, but the loop ends at v2
        let f = pivot_straighten(3, 2).unwrap();
        let src = f.source().clone();
        let tgt = f.target().clone();
        let mut emap: Vec<Path> = src.edges().map(|e| f.edge_image(e).clone()).collect();
        let e1_pos = src.edge_by_name("e1").unwrap().index();
        emap[e1_pos] = Path::edge(&tgt, tgt.edge_by_name("e1").unwrap());
        let broken = PathHom::new(src.clone(), tgt, src.vertices().collect(), emap).unwrap();
        assert!(!broken.is_valid());
    }

    #[test]
    fn straighten_of_rose_parameters_is_identity_like() {
        let f = pivot_straighten(3, 3).unwrap();
        assert!(f.is_valid());
        assert!(f.is_length_preserving());
        assert!(check_path_hom(&f).pass);
    }

    #[test]
    fn line_lift_3_2_2_assignment() {
        let f = line_lift(3, 2, 2).unwrap();
        assert!(f.is_valid());
        let src = f.source().clone();
        let tgt = f.target().clone();
        let image = |name: &str| path_names(&tgt, f.edge_image(src.edge_by_name(name).unwrap()));
        assert_eq!(image("e1"), "e1");
        assert_eq!(image("e2"), "e2 l1 e1");
        assert_eq!(image("e3"), "e2 l1 e2");
        assert_eq!(image("l1"), "l1");
        assert!(check_path_hom(&f).pass);
    }

    #[test]
    fn line_lift_with_trivial_line_is_kawamura() {
        let f = line_lift(5, 3, 1).unwrap();
        let kw = kawamura(5, 3).unwrap();
        for (e, e2) in f.source().edges().zip(kw.source().edges()) {
            assert_eq!(
                f.edge_image(e).edges(),
                kw.edge_image(e2).edges(),
                "same words up to relabeling"
            );
        }
    }

    #[test]
    fn matrix_iso_dictionary_images() {
        let iso = MatrixIso::new(2, 2).unwrap();
        let g = iso.source().clone();
        let rose = iso.rose().clone();
        let one = Element::one(rose.clone());

        // P_{v1} ↦ unit at (1,1)
        let p1 = iso
            .apply(&Element::projection(g.clone(), g.vertex_by_name("v1").unwrap()))
            .unwrap();
        assert_eq!(*p1.entry(0, 0), one);
        assert!(p1.entry(0, 1).is_zero());

        // S_{l1} ↦ unit at (1,2)
        let l1 = iso
            .apply(&Element::isometry(g.clone(), g.edge_by_name("l1").unwrap()))
            .unwrap();
        assert_eq!(*l1.entry(0, 1), one);

        // S_{e1 l1} ↦ S_1 at (2,2); S_{e2 l1 e1} ↦ S_2 S_1 at (2,1)
        let e1l1 = Path::from_edges(
            &g,
            &[g.edge_by_name("e1").unwrap(), g.edge_by_name("l1").unwrap()],
        )
        .unwrap();
        let mx = iso.apply(&Element::of_path(g.clone(), e1l1)).unwrap();
        assert_eq!(
            mx.entry(1, 1).render(),
            Element::isometry(rose.clone(), rose.edge_by_name("e1").unwrap()).render()
        );

        let w = Path::from_edges(
            &g,
            &[
                g.edge_by_name("e2").unwrap(),
                g.edge_by_name("l1").unwrap(),
                g.edge_by_name("e1").unwrap(),
            ],
        )
        .unwrap();
        let mx = iso.apply(&Element::of_path(g.clone(), w)).unwrap();
        assert!(mx.entry(0, 0).is_zero());
        let s2s1 = {
            let s2 = Element::isometry(rose.clone(), rose.edge_by_name("e2").unwrap());
            let s1 = Element::isometry(rose.clone(), rose.edge_by_name("e1").unwrap());
            &s2 * &s1
        };
        assert_eq!(*mx.entry(1, 0), s2s1);
    }

    #[test]
    fn matrix_iso_with_trivial_line_is_relabeling() {
        let iso = MatrixIso::new(3, 1).unwrap();
        let g = iso.source().clone();
        for e in g.edges() {
            let mx = iso.apply(&Element::isometry(g.clone(), e)).unwrap();
            assert_eq!(mx.size(), 1);
            assert_eq!(mx.entry(0, 0).term_count(), 1);
        }
    }

    #[test]
    fn matrix_iso_generator_round_trip() {
        for (m, k) in [(2u32, 2u32), (3, 2), (2, 3)] {
            let iso = MatrixIso::new(m, k).unwrap();
            let g = iso.source().clone();
            for v in g.vertices() {
                let gen = Element::projection(g.clone(), v);
                let back = iso.invert_generator(&iso.apply(&gen).unwrap()).unwrap();
                assert_eq!(back, gen);
            }
            for e in g.edges() {
                let gen = Element::isometry(g.clone(), e);
                let back = iso.invert_generator(&iso.apply(&gen).unwrap()).unwrap();
                assert_eq!(back, gen);
            }
        }
    }

    #[test]
    fn matrix_iso_relations_hold_in_matrix_arithmetic() {
        for (m, k) in [(2u32, 2u32), (3, 2), (4, 3)] {
            let report = MatrixIso::new(m, k).unwrap().relation_report();
            assert!(report.pass, "dictionary relations for ({m},{k}): {report:?}");
            assert!(report.unital);
        }
    }

    #[test]
    fn embed_2_2_1_is_the_identity_on_o2() {
        let r = embed(2, 2, 1).unwrap();
        assert_eq!(r.m, 2);
        let rose = r.generator_images[0].graph().clone();
        for (i, t) in r.generator_images.iter().enumerate() {
            assert_eq!(t.size(), 1);
            let expect = Element::isometry(rose.clone(), EdgeId(i as u32));
            assert!(t.entry(0, 0).equals(&expect));
        }
    }

    #[test]
    fn embed_3_2_1_matches_kawamura_words() {
        let r = embed(3, 2, 1).unwrap();
        let rose = r.generator_images[0].graph().clone();
        let s = |i: u32| Element::isometry(rose.clone(), EdgeId(i));
        let expect = [s(0), &s(1) * &s(0), &s(1) * &s(1)];
        for (t, want) in r.generator_images.iter().zip(&expect) {
            assert!(t.entry(0, 0).equals(want));
        }
    }

    #[test]
    fn embed_2_2_2_matches_the_worked_matrices() {
        let r = embed(2, 2, 2).unwrap();
        assert!(r.reports.as_ref().unwrap().star.pass);
        assert!(r.reports.as_ref().unwrap().matrix.pass);
        let rose = r.generator_images[0].graph().clone();
        let s = |i: u32| Element::isometry(rose.clone(), EdgeId(i));
        let one = Element::one(rose.clone());
        let zero = Element::zero(rose.clone());

        // T_1 = [[0, 0], [S_2 S_1, S_1]]
        let t1 = &r.generator_images[0];
        assert!(t1.entry(0, 0).equals(&zero));
        assert!(t1.entry(0, 1).equals(&zero));
        assert!(t1.entry(1, 0).equals(&(&s(1) * &s(0))));
        assert!(t1.entry(1, 1).equals(&s(0)));

        // T_2 = [[0, 1], [S_2 S_2, 0]]
        let t2 = &r.generator_images[1];
        assert!(t2.entry(0, 0).equals(&zero));
        assert!(t2.entry(0, 1).equals(&one));
        assert!(t2.entry(1, 0).equals(&(&s(1) * &s(1))));
        assert!(t2.entry(1, 1).equals(&zero));
    }

    #[test]
    fn embed_refuses_unsatisfied_congruence() {
        assert!(matches!(
            embed(4, 3, 1),
            Err(Error::CongruenceUnsatisfied { .. })
        ));
    }

    #[test]
    fn embed_s_override_must_match() {
        let opts = EmbedOptions {
            s: Some(3),
            verify: true,
        };
        assert!(embed_with(2, 2, 2, opts).is_err());
        let opts = EmbedOptions {
            s: Some(2),
            verify: true,
        };
        assert!(embed_with(2, 2, 2, opts).is_ok());
    }

    #[test]
    fn embed_without_verification_skips_reports() {
        let r = embed_with(
            3,
            2,
            1,
            EmbedOptions {
                s: None,
                verify: false,
            },
        )
        .unwrap();
        assert!(r.reports.is_none());
        assert!(r.render_text().contains("verification: skipped"));
    }
}
