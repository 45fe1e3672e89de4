//! Exact arithmetic in the dense *-subalgebra of a graph C*-algebra.
//!
//! Elements are integer combinations of monomials `S_α S_β*` where α, β are
//! finite paths with a common target (`P_v` is the monomial with α = β = v).
//! Multiplication is driven by the relation `S_e* S_e = P_{t(e)}`: the
//! product `(S_α S_β*)(S_γ S_δ*)` survives only when β and γ are
//! prefix-comparable.
//!
//! The relation `P_v = Σ_{s(e)=v} S_e S_e*` at regular vertices is the only
//! source of linear dependence among monomials. It is oriented into a
//! rewrite rule by distinguishing, at each regular vertex, the *last*
//! outgoing edge in insertion order: a monomial whose α and β share that
//! final special edge is expanded through the relation. Rewriting
//! terminates (each step either shortens a monomial or removes its special
//! final edge) and the resulting normal form is a basis representation, so
//! it decides equality of algebra elements.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::Error;
use crate::graph::{same_graph, EdgeId, Graph, VertexId};
use crate::path::Path;

/// The monomial `S_α S_β*`. Requires `t(α) = t(β)`; with α = β = v this is
/// the vertex projection `P_v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    alpha: Path,
    beta: Path,
}

impl Term {
    pub fn new(graph: &Graph, alpha: Path, beta: Path) -> Result<Term, Error> {
        if alpha.target() != beta.target() {
            return Err(Error::TermEndpointMismatch(
                graph.vertex_name(alpha.target()).to_owned(),
                graph.vertex_name(beta.target()).to_owned(),
            ));
        }
        Ok(Term { alpha, beta })
    }

    /// The vertex projection `P_v`.
    pub fn projection(v: VertexId) -> Term {
        let p = Path::vertex(v);
        Term {
            alpha: p.clone(),
            beta: p,
        }
    }

    /// The partial isometry `S_e` (β is the target vertex of e).
    pub fn isometry(graph: &Graph, e: EdgeId) -> Term {
        Term {
            alpha: Path::edge(graph, e),
            beta: Path::vertex(graph.tgt(e)),
        }
    }

    /// `S_p` for a path p: `S_p S_{t(p)}*`, which is `P_v` when p = v.
    pub fn of_path(p: Path) -> Term {
        let beta = Path::vertex(p.target());
        Term { alpha: p, beta }
    }

    pub fn alpha(&self) -> &Path {
        &self.alpha
    }

    pub fn beta(&self) -> &Path {
        &self.beta
    }

    pub fn adjoint(&self) -> Term {
        Term {
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
        }
    }

    pub fn is_projection(&self) -> bool {
        self.alpha.is_empty() && self.beta.is_empty()
    }

    /// The monomial product. `None` is the zero product (β and γ
    /// prefix-incomparable).
    pub fn mul(&self, other: &Term) -> Option<Term> {
        if let Some(gamma1) = self.beta.strip_prefix(&other.alpha) {
            // γ = β·γ′  ⇒  S_{αγ′} S_δ*
            let alpha = self.alpha.concat(&gamma1).expect("endpoints match");
            return Some(Term {
                alpha,
                beta: other.beta.clone(),
            });
        }
        if let Some(beta1) = other.alpha.strip_prefix(&self.beta) {
            // β = γ·β′  ⇒  S_α S_{δβ′}*
            let beta = other.beta.concat(&beta1).expect("endpoints match");
            return Some(Term {
                alpha: self.alpha.clone(),
                beta,
            });
        }
        None
    }

    pub fn render(&self, graph: &Graph) -> String {
        render_term(graph, self, false)
    }
}

// Graded by total monomial length so projections sort first; then by the
// two paths. Fixes the term order inside every Element.
impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.alpha.len() + self.beta.len();
        let e = other.alpha.len() + other.beta.len();
        d.cmp(&e)
            .then_with(|| self.alpha.cmp(&other.alpha))
            .then_with(|| self.beta.cmp(&other.beta))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn render_path_factor(graph: &Graph, p: &Path, star: bool) -> String {
    let ids: Vec<&str> = p.edges().iter().map(|&e| graph.edge_name(e)).collect();
    let sub = ids.join(" ");
    if star {
        format!("S_{{{sub}}}*")
    } else {
        format!("S_{{{sub}}}")
    }
}

fn render_term(graph: &Graph, t: &Term, _latex: bool) -> String {
    if t.is_projection() {
        return format!("P_{{{}}}", graph.vertex_name(t.alpha.source()));
    }
    match (t.alpha.is_empty(), t.beta.is_empty()) {
        (false, true) => render_path_factor(graph, &t.alpha, false),
        (true, false) => render_path_factor(graph, &t.beta, true),
        _ => format!(
            "{} {}",
            render_path_factor(graph, &t.alpha, false),
            render_path_factor(graph, &t.beta, true)
        ),
    }
}

/// An integer combination of monomials over a fixed graph. The zero element
/// is the empty sum; zero coefficients are never stored.
#[derive(Debug, Clone)]
pub struct Element {
    graph: Arc<Graph>,
    terms: BTreeMap<Term, i64>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        same_graph(&self.graph, &other.graph) && self.terms == other.terms
    }
}

impl Eq for Element {}

impl Element {
    pub fn zero(graph: Arc<Graph>) -> Element {
        Element {
            graph,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `Σ_v P_v` of the algebra of a finite graph.
    pub fn one(graph: Arc<Graph>) -> Element {
        let mut terms = BTreeMap::new();
        for v in graph.vertices() {
            terms.insert(Term::projection(v), 1);
        }
        Element { graph, terms }
    }

    pub fn from_term(graph: Arc<Graph>, term: Term, coeff: i64) -> Element {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(term, coeff);
        }
        Element { graph, terms }
    }

    /// `P_v`.
    pub fn projection(graph: Arc<Graph>, v: VertexId) -> Element {
        Element::from_term(graph, Term::projection(v), 1)
    }

    /// `S_e`.
    pub fn isometry(graph: Arc<Graph>, e: EdgeId) -> Element {
        let t = Term::isometry(&graph, e);
        Element::from_term(graph, t, 1)
    }

    /// `S_p` for a path p.
    pub fn of_path(graph: Arc<Graph>, p: Path) -> Element {
        Element::from_term(graph, Term::of_path(p), 1)
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, i64)> {
        self.terms.iter().map(|(t, &c)| (t, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(terms: &mut BTreeMap<Term, i64>, t: Term, c: i64) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match terms.entry(t) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = *e.get() + c;
                if s == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: i64) -> Element {
        if c == 0 {
            return Element::zero(self.graph.clone());
        }
        Element {
            graph: self.graph.clone(),
            terms: self.terms.iter().map(|(t, &k)| (t.clone(), k * c)).collect(),
        }
    }

    /// The *-involution: each `S_α S_β*` maps to `S_β S_α*`, coefficients
    /// unchanged (they are integers, hence self-conjugate).
    pub fn adjoint(&self) -> Element {
        let mut terms = BTreeMap::new();
        for (t, &c) in &self.terms {
            Element::insert(&mut terms, t.adjoint(), c);
        }
        Element {
            graph: self.graph.clone(),
            terms,
        }
    }

    fn assert_same_graph(&self, other: &Element) {
        assert!(
            same_graph(&self.graph, &other.graph),
            "elements live over different graphs"
        );
    }

    /// True when a monomial is reducible: α and β share a final edge which
    /// is the special edge at its source vertex.
    fn reducible_edge(&self, t: &Term) -> Option<EdgeId> {
        let a = *t.alpha().edges().last()?;
        let b = *t.beta().edges().last()?;
        if a != b {
            return None;
        }
        let v = self.graph.src(a);
        (self.graph.special_edge(v) == Some(a)).then_some(a)
    }

    /// Rewrites to the canonical basis representation: no surviving
    /// monomial has α and β ending in a common special edge. Equal algebra
    /// elements (modulo the defining relations) have equal canonical forms.
    pub fn canonical_form(&self) -> Element {
        self.canonical_form_with(|stack| stack.len() - 1)
    }

    /// Canonical form with a randomized choice of which reducible monomial
    /// to rewrite next. The result is independent of the seed; exercised by
    /// the confluence tests.
    pub fn canonical_form_shuffled(&self, seed: u64) -> Element {
        let mut state = seed.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
        self.canonical_form_with(move |stack| {
            // xorshift* step; any deterministic sequence works here
            state ^= state >> 12;
            state ^= state << 25;
            state ^= state >> 27;
            (state.wrapping_mul(0x2545F4914F6CDD1D) % stack.len() as u64) as usize
        })
    }

    fn canonical_form_with<F>(&self, mut pick: F) -> Element
    where
        F: FnMut(&[(Term, i64)]) -> usize,
    {
        let graph = &self.graph;
        let mut out: BTreeMap<Term, i64> = BTreeMap::new();
        let mut work: Vec<(Term, i64)> = Vec::new();
        for (t, &c) in &self.terms {
            match self.reducible_edge(t) {
                Some(_) => work.push((t.clone(), c)),
                None => Element::insert(&mut out, t.clone(), c),
            }
        }
        while !work.is_empty() {
            let idx = pick(&work);
            let (t, c) = work.swap_remove(idx);
            let e = self
                .reducible_edge(&t)
                .expect("work list holds reducible monomials");
            let v = graph.src(e);
            // S_{αe} S_{βe}* = S_α S_β* − Σ_{f ∈ s⁻¹(v), f ≠ e} S_{αf} S_{βf}*
            let (alpha, _) = t.alpha().shorten(graph).expect("nonempty");
            let (beta, _) = t.beta().shorten(graph).expect("nonempty");
            let shorter = Term {
                alpha: alpha.clone(),
                beta: beta.clone(),
            };
            match self.reducible_edge(&shorter) {
                Some(_) => work.push((shorter, c)),
                None => Element::insert(&mut out, shorter, c),
            }
            for &f in graph.out_edges(v) {
                if f == e {
                    continue;
                }
                let sibling = Term {
                    alpha: alpha.extend(graph, f).expect("s(f) = v = t(α)"),
                    beta: beta.extend(graph, f).expect("s(f) = v = t(β)"),
                };
                // the final edge f is not special at v, so irreducible
                Element::insert(&mut out, sibling, -c);
            }
        }
        Element {
            graph: graph.clone(),
            terms: out,
        }
    }

    /// Decides equality modulo the defining relations.
    pub fn equals(&self, other: &Element) -> bool {
        self.assert_same_graph(other);
        (self - other).canonical_form().is_zero()
    }

    pub fn render(&self) -> String {
        self.render_with(|t| render_term(&self.graph, t, false))
    }

    /// Cuntz-style rendering for single-vertex graphs: generators are
    /// numbered `S_1..S_n` in edge order, `P_v` prints as `1`.
    pub fn render_cuntz(&self) -> String {
        self.render_with(|t| {
            let letter = |e: &EdgeId| format!("S_{}", e.index() + 1);
            let mut parts: Vec<String> = t.alpha().edges().iter().map(&letter).collect();
            // a starred word multiplies out in reverse order
            parts.extend(t.beta().edges().iter().rev().map(|e| letter(e) + "*"));
            if parts.is_empty() {
                "1".to_owned()
            } else {
                parts.join(" ")
            }
        })
    }

    fn render_with<F: Fn(&Term) -> String>(&self, term_fmt: F) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        if *self == Element::one(self.graph.clone()) {
            return "1".to_owned();
        }
        let mut out = String::new();
        for (i, (t, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if *c < 0 {
                    out.push('-');
                }
            } else if *c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if mag != 1 {
                out.push_str(&format!("{mag} "));
            }
            out.push_str(&term_fmt(t));
        }
        out
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        self.assert_same_graph(rhs);
        let mut terms = self.terms.clone();
        for (t, &c) in &rhs.terms {
            Element::insert(&mut terms, t.clone(), c);
        }
        Element {
            graph: self.graph.clone(),
            terms,
        }
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        self.assert_same_graph(rhs);
        let mut terms = self.terms.clone();
        for (t, &c) in &rhs.terms {
            Element::insert(&mut terms, t.clone(), -c);
        }
        Element {
            graph: self.graph.clone(),
            terms,
        }
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        self.scale(-1)
    }
}

impl crate::report::StarRing for Element {
    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn adjoint(&self) -> Self {
        Element::adjoint(self)
    }

    fn canonical_form(&self) -> Self {
        Element::canonical_form(self)
    }

    fn is_zero(&self) -> bool {
        Element::is_zero(self)
    }
}

impl Mul for &Element {
    type Output = Element;

    fn mul(self, rhs: &Element) -> Element {
        self.assert_same_graph(rhs);
        let mut terms = BTreeMap::new();
        for (s, &a) in &self.terms {
            for (t, &b) in &rhs.terms {
                if let Some(st) = s.mul(t) {
                    Element::insert(&mut terms, st, a * b);
                }
            }
        }
        Element {
            graph: self.graph.clone(),
            terms,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn rose2() -> Arc<Graph> {
        Graph::rose(2).unwrap()
    }

    fn s(g: &Arc<Graph>, name: &str) -> Element {
        Element::isometry(g.clone(), g.edge_by_name(name).unwrap())
    }

    fn s_adj(g: &Arc<Graph>, name: &str) -> Element {
        s(g, name).adjoint()
    }

    fn range_proj(g: &Arc<Graph>, name: &str) -> Element {
        let e = s(g, name);
        &e * &e.adjoint()
    }

    #[test]
    fn monomial_product_middle_cancellation() {
        // (S_{e1} S_{e2}*)(S_{e2} S_{e1}*) = S_{e1} S_{e1}*
        let g = rose2();
        let a = &s(&g, "e1") * &s_adj(&g, "e2");
        let b = &s(&g, "e2") * &s_adj(&g, "e1");
        let prod = &a * &b;
        assert_eq!(prod, range_proj(&g, "e1"));
    }

    #[test]
    fn projection_is_a_left_unit_on_its_corner() {
        let g = rose2();
        let v = g.vertex_by_name("v").unwrap();
        let p = Element::projection(g.clone(), v);
        let x = range_proj(&g, "e1");
        assert_eq!(&p * &x, x);
    }

    #[test]
    fn orthogonal_ranges_multiply_to_zero() {
        let g = rose2();
        let prod = &range_proj(&g, "e1") * &range_proj(&g, "e2");
        assert!(prod.is_zero());
        // S_{e1}* S_{e2} = 0 too
        let prod = &s_adj(&g, "e1") * &s(&g, "e2");
        assert!(prod.is_zero());
    }

    #[test]
    fn adjoint_is_an_involution() {
        let g = rose2();
        let x = &(&s(&g, "e1") * &s_adj(&g, "e2")) - &Element::one(g.clone()).scale(3);
        assert_eq!(x.adjoint().adjoint(), x);
        let v = g.vertex_by_name("v").unwrap();
        let p = Element::projection(g.clone(), v);
        assert_eq!(p.adjoint(), p);
        // adjoint of S_{e1} swaps the paths
        let e1 = s(&g, "e1");
        let adj = e1.adjoint();
        let (t, c) = adj.terms().next().unwrap();
        assert_eq!(c, 1);
        assert!(t.alpha().is_empty());
        assert_eq!(t.beta().len(), 1);
    }

    #[test]
    fn canonical_form_expands_the_special_pair() {
        // sp(v) = e2 in rose(2): S_{e2}S_{e2}* = P_v − S_{e1}S_{e1}*
        let g = rose2();
        let v = g.vertex_by_name("v").unwrap();
        let lhs = range_proj(&g, "e2").canonical_form();
        let expect = &Element::projection(g.clone(), v) - &range_proj(&g, "e1");
        assert_eq!(lhs, expect);

        // P_v is already canonical
        let p = Element::projection(g.clone(), v);
        assert_eq!(p.canonical_form(), p);
    }

    #[test]
    fn cuntz_relation_sums_to_the_projection() {
        // S_{e1}S_{e1}* + S_{e2}S_{e2}* = P_v = 1 in rose(2)
        let g = rose2();
        let sum = &range_proj(&g, "e1") + &range_proj(&g, "e2");
        assert_eq!(sum.canonical_form(), Element::one(g.clone()));
        assert!(sum.equals(&Element::one(g)));
    }

    #[test]
    fn equals_decides_the_ck1_relation() {
        let g = rose2();
        let v = g.vertex_by_name("v").unwrap();
        for name in ["e1", "e2"] {
            let lhs = &s_adj(&g, name) * &s(&g, name);
            assert!(lhs.equals(&Element::projection(g.clone(), v)));
        }
    }

    #[test]
    fn one_is_a_unit() {
        let g = Graph::matrix_rose(3, 2).unwrap();
        let one = Element::one(g.clone());
        assert_eq!(one.term_count(), 2);
        let x = Element::isometry(g.clone(), g.edge_by_name("e2").unwrap());
        assert!((&one * &x).equals(&x));
        assert!((&x * &one).equals(&x));
    }

    #[test]
    fn rewriting_at_a_single_out_edge_vertex_drops_the_edge() {
        // line(2): s⁻¹(v1) = {l1}, so S_{l1}S_{l1}* = P_{v1} with no siblings.
        let g = Graph::line(2).unwrap();
        let x = range_proj(&g, "l1").canonical_form();
        let v1 = g.vertex_by_name("v1").unwrap();
        assert_eq!(x, Element::projection(g, v1));
    }

    #[test]
    fn no_rewrite_at_sinks() {
        // Terms ending at a sink stay basic: in line(2) the projection P_{v2}
        // is canonical and S_{l1} itself is canonical.
        let g = Graph::line(2).unwrap();
        let v2 = g.vertex_by_name("v2").unwrap();
        let p = Element::projection(g.clone(), v2);
        assert_eq!(p.canonical_form(), p);
        let x = s(&g, "l1");
        assert_eq!(x.canonical_form(), x);
    }

    #[test]
    fn display_is_stable() {
        let g = rose2();
        let x = &range_proj(&g, "e2").canonical_form() - &s(&g, "e1").scale(2);
        assert_eq!(x.to_string(), "P_{v} - 2 S_{e1} - S_{e1} S_{e1}*");
        assert_eq!(Element::zero(g.clone()).to_string(), "0");
        assert_eq!(Element::one(g).to_string(), "1");
    }
}
