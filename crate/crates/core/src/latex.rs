//! LaTeX rendering of paths, elements, and matrices.
//!
//! Identifiers of the form letters-then-digits typeset as subscripted
//! symbols (`e12` becomes `e_{12}`); anything else is passed through in
//! `\mathit`. Over a rose, the Cuntz-style renderers number the generators
//! `S_1..S_n` and print the unit as `1`, with primes available for
//! distinguishing target generators.

use crate::algebra::{Element, Term};
use crate::graph::Graph;
use crate::matrix::MatrixElement;
use crate::path::Path;

fn subscript_id(id: &str) -> String {
    let split = id.find(|c: char| c.is_ascii_digit());
    match split {
        Some(i) if id[i..].chars().all(|c| c.is_ascii_digit()) && i > 0 => {
            format!("{}_{{{}}}", &id[..i], &id[i..])
        }
        _ => format!("\\mathit{{{id}}}"),
    }
}

/// A path as a product of subscripted edge symbols, or the vertex symbol.
pub fn path(graph: &Graph, p: &Path, primed: bool) -> String {
    let prime = if primed { "'" } else { "" };
    if p.is_empty() {
        return format!("{}{}", subscript_id(graph.vertex_name(p.source())), prime);
    }
    p.edges()
        .iter()
        .map(|&e| {
            let s = subscript_id(graph.edge_name(e));
            match s.find('_') {
                Some(i) => format!("{}{}{}", &s[..i], prime, &s[i..]),
                None => format!("{s}{prime}"),
            }
        })
        .collect::<Vec<_>>()
        .join("")
}

fn term(graph: &Graph, t: &Term) -> String {
    if t.alpha().is_empty() && t.beta().is_empty() {
        return format!("P_{{{}}}", graph.vertex_name(t.alpha().source()));
    }
    let mut out = String::new();
    if !t.alpha().is_empty() {
        out.push_str(&format!("S_{{{}}}", path(graph, t.alpha(), false)));
    }
    if !t.beta().is_empty() {
        out.push_str(&format!("S_{{{}}}^*", path(graph, t.beta(), false)));
    }
    out
}

fn term_cuntz(t: &Term) -> String {
    let mut parts: Vec<String> = t
        .alpha()
        .edges()
        .iter()
        .map(|e| format!("S_{{{}}}", e.index() + 1))
        .collect();
    parts.extend(
        t.beta()
            .edges()
            .iter()
            .rev()
            .map(|e| format!("S_{{{}}}^*", e.index() + 1)),
    );
    if parts.is_empty() {
        "1".to_owned()
    } else {
        parts.join("")
    }
}

fn sum<F: Fn(&Term) -> String>(x: &Element, f: F) -> String {
    if x.is_zero() {
        return "0".to_owned();
    }
    if *x == Element::one(x.graph().clone()) {
        return "1".to_owned();
    }
    let mut out = String::new();
    for (i, (t, c)) in x.terms().enumerate() {
        let mag = c.abs();
        if i == 0 {
            if c < 0 {
                out.push('-');
            }
        } else if c < 0 {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if mag != 1 {
            out.push_str(&format!("{mag}\\,"));
        }
        out.push_str(&f(t));
    }
    out
}

/// An element as a signed sum of monomials `S_\alpha S_\beta^*`.
pub fn element(x: &Element) -> String {
    sum(x, |t| term(x.graph(), t))
}

/// Cuntz-style element over a rose: numbered generators, unit as `1`.
pub fn element_cuntz(x: &Element) -> String {
    sum(x, term_cuntz)
}

/// A matrix as a `pmatrix` with Cuntz-style entries.
pub fn matrix_cuntz(m: &MatrixElement) -> String {
    let rows: Vec<String> = m
        .rows()
        .map(|r| {
            r.iter()
                .map(element_cuntz)
                .collect::<Vec<_>>()
                .join(" & ")
        })
        .collect();
    format!(
        "\\begin{{pmatrix}} {} \\end{{pmatrix}}",
        rows.join(" \\\\ ")
    )
}
