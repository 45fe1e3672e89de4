//! Square matrices over a graph algebra, with exact entrywise arithmetic.

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::Arc;

use crate::algebra::Element;
use crate::error::Error;
use crate::graph::{same_graph, Graph};
use crate::report::{RelationId, RelationRecord, VerifyReport};

/// Relation report over matrices.
pub type MatrixReport = VerifyReport<MatrixElement>;

/// A `size × size` matrix of algebra elements over one graph, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixElement {
    graph: Arc<Graph>,
    size: usize,
    entries: Vec<Element>,
}

impl MatrixElement {
    pub fn zero(graph: Arc<Graph>, size: usize) -> MatrixElement {
        let entries = (0..size * size)
            .map(|_| Element::zero(graph.clone()))
            .collect();
        MatrixElement {
            graph,
            size,
            entries,
        }
    }

    /// The identity matrix: the algebra unit down the diagonal.
    pub fn identity(graph: Arc<Graph>, size: usize) -> MatrixElement {
        let mut m = MatrixElement::zero(graph.clone(), size);
        for i in 0..size {
            m.entries[i * size + i] = Element::one(graph.clone());
        }
        m
    }

    /// A matrix from a row-major entry vector of length `size²`.
    pub fn from_entries(
        graph: Arc<Graph>,
        size: usize,
        entries: Vec<Element>,
    ) -> Result<MatrixElement, Error> {
        if entries.len() != size * size {
            return Err(Error::MatrixSizeMismatch(entries.len(), size * size));
        }
        if entries.iter().any(|x| !same_graph(x.graph(), &graph)) {
            return Err(Error::GraphMismatch);
        }
        Ok(MatrixElement {
            graph,
            size,
            entries,
        })
    }

    /// A matrix with a single nonzero entry (0-based indices).
    pub fn single(
        graph: Arc<Graph>,
        size: usize,
        row: usize,
        col: usize,
        value: Element,
    ) -> Result<MatrixElement, Error> {
        if row >= size || col >= size {
            return Err(Error::MatrixIndexOutOfRange(row, col, size));
        }
        if !same_graph(value.graph(), &graph) {
            return Err(Error::GraphMismatch);
        }
        let mut m = MatrixElement::zero(graph, size);
        m.entries[row * size + col] = value;
        Ok(m)
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, row: usize, col: usize) -> &Element {
        &self.entries[row * self.size + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Element]> {
        self.entries.chunks(self.size)
    }

    /// Conjugate transpose: entrywise adjoint of the transposed array.
    pub fn adjoint(&self) -> MatrixElement {
        let mut m = MatrixElement::zero(self.graph.clone(), self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                m.entries[j * self.size + i] = self.entry(i, j).adjoint();
            }
        }
        m
    }

    pub fn canonical_form(&self) -> MatrixElement {
        MatrixElement {
            graph: self.graph.clone(),
            size: self.size,
            entries: self.entries.iter().map(|x| x.canonical_form()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    /// Entrywise equality modulo the defining relations.
    pub fn equals(&self, other: &MatrixElement) -> bool {
        self.size == other.size
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.equals(b))
    }

    fn assert_compatible(&self, other: &MatrixElement) {
        assert!(
            same_graph(&self.graph, &other.graph),
            "matrices live over different graphs"
        );
        assert_eq!(self.size, other.size, "matrix size mismatch");
    }

    pub fn render(&self) -> String {
        self.render_with(Element::render)
    }

    /// Row-major rendering with Cuntz-numbered entries (for matrices over a
    /// rose).
    pub fn render_cuntz(&self) -> String {
        self.render_with(Element::render_cuntz)
    }

    fn render_with<F: Fn(&Element) -> String>(&self, cell: F) -> String {
        let rows: Vec<String> = self
            .rows()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(&cell).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

impl fmt::Display for MatrixElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl crate::report::StarRing for MatrixElement {
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
        MatrixElement::adjoint(self)
    }

    fn canonical_form(&self) -> Self {
        MatrixElement::canonical_form(self)
    }

    fn is_zero(&self) -> bool {
        MatrixElement::is_zero(self)
    }
}

impl Add for &MatrixElement {
    type Output = MatrixElement;

    fn add(self, rhs: &MatrixElement) -> MatrixElement {
        self.assert_compatible(rhs);
        MatrixElement {
            graph: self.graph.clone(),
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &MatrixElement {
    type Output = MatrixElement;

    fn sub(self, rhs: &MatrixElement) -> MatrixElement {
        self.assert_compatible(rhs);
        MatrixElement {
            graph: self.graph.clone(),
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &MatrixElement {
    type Output = MatrixElement;

    fn mul(self, rhs: &MatrixElement) -> MatrixElement {
        self.assert_compatible(rhs);
        let n = self.size;
        let mut m = MatrixElement::zero(self.graph.clone(), n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Element::zero(self.graph.clone());
                for t in 0..n {
                    acc = &acc + &(self.entry(i, t) * rhs.entry(t, j));
                }
                m.entries[i * n + j] = acc;
            }
        }
        m
    }
}

/// Checks that a family of matrices satisfies the defining relations of a
/// Cuntz algebra: `T_i* T_j = δ_ij · 1` and `Σ T_i T_i* = 1`.
pub fn matrix_check(images: &[MatrixElement]) -> MatrixReport {
    let mut records: Vec<RelationRecord<MatrixElement>> = Vec::new();
    let Some(first) = images.first() else {
        return VerifyReport::from_records(records);
    };
    let graph = first.graph().clone();
    let size = first.size();
    let one = MatrixElement::identity(graph.clone(), size);

    let diff = |lhs: &MatrixElement, rhs: &MatrixElement| -> Option<MatrixElement> {
        let d = (lhs - rhs).canonical_form();
        (!d.is_zero()).then_some(d)
    };

    for (i, t) in images.iter().enumerate() {
        let lhs = &t.adjoint() * t;
        records.push(RelationRecord::check(
            RelationId::Ck1,
            format!("T_{}* T_{}", i + 1, i + 1),
            diff(&lhs, &one),
        ));
    }
    for (i, s) in images.iter().enumerate() {
        for (j, t) in images.iter().enumerate() {
            if i == j {
                continue;
            }
            let lhs = &s.adjoint() * t;
            let z = MatrixElement::zero(graph.clone(), size);
            records.push(RelationRecord::check(
                RelationId::OrthRange,
                format!("T_{}* T_{}", i + 1, j + 1),
                diff(&lhs, &z),
            ));
        }
    }
    let mut sum = MatrixElement::zero(graph.clone(), size);
    for t in images {
        sum = &sum + &(t * &t.adjoint());
    }
    records.push(RelationRecord::check(
        RelationId::Ck2,
        "sum of range projections",
        diff(&sum, &one),
    ));

    VerifyReport::from_records(records)
}
