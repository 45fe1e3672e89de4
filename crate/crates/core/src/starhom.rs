//! Generator assignments between graph algebras and their verification.
//!
//! A [`StarHom`] stores where each vertex projection and each edge isometry
//! of the source algebra goes. It extends to arbitrary elements by the
//! *-algebra rules: a monomial `S_α S_β*` maps to `Φ(S_α)·Φ(S_β)*` with
//! `Φ(S_α)` the ordered product over the edges of α, and the extension is
//! linear.
//!
//! [`StarHom::verify`] re-derives every defining relation of the source
//! algebra inside the target by exact computation. A passing report
//! certifies that the assignment extends to a *-homomorphism; the
//! `nonzero` records are evidence (not proof) of injectivity, and
//! unitality is reported separately.
//!
//! The two constructors [`induce_contravariant`] and [`induce_covariant`]
//! materialize the functorial assignments `g*(S_p) = Σ_{q ∈ g⁻¹(p)} S_q`
//! and `f_*(S_p) = S_{f(p)}`; both insist on an admissible input and hand
//! back the failed admissibility report otherwise.

use std::sync::Arc;

use crate::algebra::Element;
use crate::error::Error;
use crate::graph::{same_graph, Graph};
use crate::morphism::{check_graph_hom, check_path_hom, GraphHom, PathHom, Report};
use crate::path::Path;
use crate::report::{verify_generator_assignment, VerifyReport};

/// Relation report over plain algebra elements.
pub type StarHomReport = VerifyReport<Element>;

/// A generator assignment from the algebra of `source` to the algebra of
/// `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarHom {
    source: Arc<Graph>,
    target: Arc<Graph>,
    pmap: Vec<Element>,
    smap: Vec<Element>,
}

impl StarHom {
    pub fn new(
        source: Arc<Graph>,
        target: Arc<Graph>,
        pmap: Vec<Element>,
        smap: Vec<Element>,
    ) -> Result<StarHom, Error> {
        if pmap.len() != source.vertex_count() || smap.len() != source.edge_count() {
            return Err(Error::IncompleteMorphism("every generator".into()));
        }
        if pmap
            .iter()
            .chain(smap.iter())
            .any(|x| !same_graph(x.graph(), &target))
        {
            return Err(Error::GraphMismatch);
        }
        Ok(StarHom {
            source,
            target,
            pmap,
            smap,
        })
    }

    pub fn identity(graph: Arc<Graph>) -> StarHom {
        StarHom {
            pmap: graph
                .vertices()
                .map(|v| Element::projection(graph.clone(), v))
                .collect(),
            smap: graph
                .edges()
                .map(|e| Element::isometry(graph.clone(), e))
                .collect(),
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

    /// Image of the vertex projection `P_v`.
    pub fn vertex_image(&self, v: crate::graph::VertexId) -> &Element {
        &self.pmap[v.index()]
    }

    /// Image of the edge isometry `S_e`.
    pub fn edge_image(&self, e: crate::graph::EdgeId) -> &Element {
        &self.smap[e.index()]
    }

    /// Image of `S_p` for a path p of the source.
    pub fn path_image(&self, p: &Path) -> Element {
        let mut acc = Element::one(self.target.clone());
        if p.is_empty() {
            return self.pmap[p.source().index()].clone();
        }
        for &e in p.edges() {
            acc = &acc * &self.smap[e.index()];
        }
        acc
    }

    /// The extension-rule image of an arbitrary element, in canonical form.
    pub fn apply(&self, x: &Element) -> Result<Element, Error> {
        if !same_graph(x.graph(), &self.source) {
            return Err(Error::GraphMismatch);
        }
        let mut acc = Element::zero(self.target.clone());
        for (t, c) in x.terms() {
            let a = self.path_image(t.alpha());
            let b = self.path_image(t.beta());
            acc = &acc + &(&a * &b.adjoint()).scale(c);
        }
        Ok(acc.canonical_form())
    }

    /// Composition `other ∘ self` (self: A -> B, other: B -> C).
    pub fn then(&self, other: &StarHom) -> Result<StarHom, Error> {
        if !same_graph(&self.target, &other.source) {
            return Err(Error::CompositionMismatch);
        }
        let pmap = self
            .pmap
            .iter()
            .map(|x| other.apply(x))
            .collect::<Result<Vec<_>, _>>()?;
        let smap = self
            .smap
            .iter()
            .map(|x| other.apply(x))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(StarHom {
            source: self.source.clone(),
            target: other.target.clone(),
            pmap,
            smap,
        })
    }

    /// Checks every defining relation of the source algebra on the assigned
    /// generators, by exact computation over the target.
    pub fn verify(&self) -> StarHomReport {
        verify_generator_assignment(
            &self.source,
            &self.pmap,
            &self.smap,
            &Element::zero(self.target.clone()),
            &Element::one(self.target.clone()),
        )
    }
}

/// The contravariant induction: an admissible `g: F -> E` yields
/// `g*: C*(E) -> C*(F)` with `P_v ↦ Σ P_w` and `S_e ↦ Σ S_x` over the
/// preimages. Inadmissible input is rejected with its report.
pub fn induce_contravariant(g: &GraphHom) -> Result<StarHom, Report> {
    debug_assert!(g.is_valid(), "caller must validate the homomorphism");
    let report = check_graph_hom(g);
    if !report.pass {
        return Err(report);
    }
    // source of the star-hom is the algebra of g's target
    let alg_source = g.target().clone();
    let alg_target = g.source().clone();
    let mut pmap: Vec<Element> = alg_source
        .vertices()
        .map(|_| Element::zero(alg_target.clone()))
        .collect();
    for w in alg_target.vertices() {
        let v = g.vertex_image(w);
        pmap[v.index()] = &pmap[v.index()] + &Element::projection(alg_target.clone(), w);
    }
    let mut smap: Vec<Element> = alg_source
        .edges()
        .map(|_| Element::zero(alg_target.clone()))
        .collect();
    for x in alg_target.edges() {
        let e = g.edge_image(x);
        smap[e.index()] = &smap[e.index()] + &Element::isometry(alg_target.clone(), x);
    }
    Ok(StarHom {
        source: alg_source,
        target: alg_target,
        pmap,
        smap,
    })
}

/// The covariant induction: an admissible `f: E -> F` yields
/// `f_*: C*(E) -> C*(F)` with `S_p ↦ S_{f(p)}`. Inadmissible input is
/// rejected with its report.
pub fn induce_covariant(f: &PathHom) -> Result<StarHom, Report> {
    debug_assert!(f.is_valid(), "caller must validate the path homomorphism");
    let report = check_path_hom(f);
    if !report.pass {
        return Err(report);
    }
    let alg_source = f.source().clone();
    let alg_target = f.target().clone();
    let pmap: Vec<Element> = alg_source
        .vertices()
        .map(|v| Element::projection(alg_target.clone(), f.vertex_image(v)))
        .collect();
    let smap: Vec<Element> = alg_source
        .edges()
        .map(|e| Element::of_path(alg_target.clone(), f.edge_image(e).clone()))
        .collect();
    Ok(StarHom {
        source: alg_source,
        target: alg_target,
        pmap,
        smap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::morphism::Clause;
    use crate::report::RelationId;

    #[test]
    fn identity_star_hom_verifies() {
        for g in [Graph::rose(3).unwrap(), Graph::matrix_rose(3, 2).unwrap()] {
            let id = StarHom::identity(g);
            let report = id.verify();
            assert!(report.pass, "{report:?}");
            assert!(report.unital);
        }
    }

    #[test]
    fn apply_fixes_the_unit_for_unital_homs() {
        let g = Graph::rose(2).unwrap();
        let id = StarHom::identity(g.clone());
        let one = Element::one(g);
        assert_eq!(id.apply(&one).unwrap(), one.canonical_form());
    }

    #[test]
    fn apply_respects_adjoints() {
        let g = Graph::rose(2).unwrap();
        let id = StarHom::identity(g.clone());
        let e1 = Element::isometry(g.clone(), g.edge_by_name("e1").unwrap());
        let e2 = Element::isometry(g.clone(), g.edge_by_name("e2").unwrap());
        let x = &(&e1 * &e2.adjoint()) - &Element::one(g).scale(2);
        assert_eq!(
            id.apply(&x.adjoint()).unwrap(),
            id.apply(&x).unwrap().adjoint()
        );
    }

    #[test]
    fn inadmissible_input_is_rejected_with_the_report() {
        // fold both loops of rose(2) onto e1: fails target-bijectivity
        let r = Graph::rose(2).unwrap();
        let e1 = r.edge_by_name("e1").unwrap();
        let h = GraphHom::new(
            r.clone(),
            r.clone(),
            vec![r.vertex_by_name("v").unwrap()],
            vec![e1, e1],
        )
        .unwrap();
        let err = induce_contravariant(&h).unwrap_err();
        assert!(!err.pass);
        assert!(!err.failures_for(Clause::TargetBijectivity).is_empty());
    }

    #[test]
    fn corrupting_an_assignment_pinpoints_the_broken_relation() {
        let g = Graph::rose(2).unwrap();
        let id = StarHom::identity(g.clone());

        // smap(e1) replaced by its adjoint: the isometry relation for e1
        // breaks and is reported with a nonzero counterexample.
        let mut smap: Vec<Element> = g
            .edges()
            .map(|e| Element::isometry(g.clone(), e))
            .collect();
        smap[0] = smap[0].adjoint();
        let bad = StarHom::new(g.clone(), g.clone(), id.pmap.clone(), smap).unwrap();
        let report = bad.verify();
        assert!(!report.pass);
        let ck1 = report.failures_for(RelationId::Ck1);
        assert_eq!(ck1.len(), 1);
        assert_eq!(ck1[0].subject, "S_e1* S_e1");
        assert!(ck1[0].counterexample.is_some());

        // smap(e1) replaced by its range projection: only the isometry
        // relation for e1 fails, every other record still passes.
        let e1 = Element::isometry(g.clone(), g.edge_by_name("e1").unwrap());
        let mut smap: Vec<Element> = g
            .edges()
            .map(|e| Element::isometry(g.clone(), e))
            .collect();
        smap[0] = &e1 * &e1.adjoint();
        let bad = StarHom::new(g.clone(), g.clone(), id.pmap.clone(), smap).unwrap();
        let report = bad.verify();
        assert!(!report.pass);
        assert!(report
            .failures()
            .all(|r| r.relation == RelationId::Ck1 && r.subject == "S_e1* S_e1"));
    }

    #[test]
    fn apply_is_multiplicative_for_verified_assignments() {
        let hom = induce_covariant(&crate::cuntz::kawamura(3, 2).unwrap()).unwrap();
        assert!(hom.verify().pass);
        let g = hom.source().clone();
        let e = |name: &str| Element::isometry(g.clone(), g.edge_by_name(name).unwrap());
        let samples = [
            e("e1"),
            &e("e2") * &e("e3").adjoint(),
            &(&e("e3") * &e("e1")) - &Element::one(g.clone()).scale(2),
            Element::one(g.clone()),
        ];
        for x in &samples {
            for y in &samples {
                let lhs = hom.apply(&(x * y)).unwrap();
                let rhs = &hom.apply(x).unwrap() * &hom.apply(y).unwrap();
                assert!(lhs.equals(&rhs), "apply not multiplicative on {x} | {y}");
            }
        }
    }

    #[test]
    fn covariant_induction_can_be_non_unital() {
        // line(2) includes into line(3) admissibly, but misses P_{v3}: the
        // relations hold while unitality fails.
        let small = Graph::line(2).unwrap();
        let big = Graph::line(3).unwrap();
        let f = PathHom::new(
            small,
            big.clone(),
            vec![big.vertex_by_name("v1").unwrap(), big.vertex_by_name("v2").unwrap()],
            vec![Path::edge(&big, big.edge_by_name("l1").unwrap())],
        )
        .unwrap();
        assert!(f.is_valid());
        assert!(check_path_hom(&f).pass);
        let report = induce_covariant(&f).unwrap().verify();
        assert!(report.pass);
        assert!(!report.unital);
    }

    #[test]
    fn covariant_images_expand_directly() {
        // the image of S_{e3} S_{e3}* under the classical three-generator
        // embedding is the rank-one word S_{e2 e2} S_{e2 e2}*
        let h = crate::cuntz::kawamura(3, 2).unwrap();
        let hom = induce_covariant(&h).unwrap();
        let src = hom.source().clone();
        let tgt = hom.target().clone();
        let e3 = Element::isometry(src.clone(), src.edge_by_name("e3").unwrap());
        let x = &e3 * &e3.adjoint();
        let image = hom.apply(&x).unwrap();
        let e2 = Element::isometry(tgt.clone(), tgt.edge_by_name("e2").unwrap());
        let word = &e2 * &e2;
        assert!(image.equals(&(&word * &word.adjoint())));
    }

    #[test]
    fn contravariant_pivot_images_are_preimage_sums() {
        let g = crate::cuntz::pivot_collapse(3, 2).unwrap();
        let hom = induce_contravariant(&g).unwrap();
        let rose = hom.source().clone();
        let pivot = hom.target().clone();
        let s = |name: &str| Element::isometry(pivot.clone(), pivot.edge_by_name(name).unwrap());
        let expect1 = &s("e1") + &s("e2");
        let expect2 = &s("l1") + &s("e3");
        assert_eq!(*hom.edge_image(rose.edge_by_name("e1").unwrap()), expect1);
        assert_eq!(*hom.edge_image(rose.edge_by_name("e2").unwrap()), expect2);
        let p = hom.vertex_image(rose.vertex_by_name("v").unwrap());
        assert_eq!(p.term_count(), 2);
        let report = hom.verify();
        assert!(report.pass);
        assert!(report.unital);
    }

    #[test]
    fn composition_with_identity_is_identity() {
        let g = Graph::rose(2).unwrap();
        let id = StarHom::identity(g.clone());
        let composed = id.then(&id).unwrap();
        // canonical forms of generators agree
        for v in g.vertices() {
            assert!(composed
                .vertex_image(v)
                .equals(id.vertex_image(v)));
        }
        for e in g.edges() {
            assert!(composed.edge_image(e).equals(id.edge_image(e)));
        }
    }
}
