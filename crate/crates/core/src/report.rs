//! Relation-check reports for generator assignments.
//!
//! Records are tagged with the defining relation they verify; the tags are
//! stable strings used in JSON output and asserted on by tests. The
//! verifier itself is generic over the receiving *-ring, so the same code
//! checks assignments into a graph algebra and into a matrix algebra over
//! one.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Which defining relation a record checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RelationId {
    /// `S_e* S_e = P_{t(e)}`.
    #[serde(rename = "(1)")]
    Ck1,
    /// `P_v = Σ_{s(e)=v} S_e S_e*` at regular vertices.
    #[serde(rename = "(2)")]
    Ck2,
    /// Left-support form of `S_e S_e* ≤ P_{s(e)}`: `P_{s(e)} S_e = S_e`.
    #[serde(rename = "(3)")]
    Ck3,
    /// Vertex projections are self-adjoint idempotents with mutually
    /// orthogonal images.
    #[serde(rename = "orth-proj")]
    OrthProj,
    /// Distinct edges have orthogonal ranges: `S_e* S_f = 0`.
    #[serde(rename = "orth-range")]
    OrthRange,
    /// The vertex projections sum to the unit of the target.
    #[serde(rename = "unital")]
    Unital,
    /// Non-vanishing evidence: no vertex projection maps to zero.
    #[serde(rename = "nonzero")]
    Nonzero,
}

impl RelationId {
    pub fn as_str(self) -> &'static str {
        match self {
            RelationId::Ck1 => "(1)",
            RelationId::Ck2 => "(2)",
            RelationId::Ck3 => "(3)",
            RelationId::OrthProj => "orth-proj",
            RelationId::OrthRange => "orth-range",
            RelationId::Unital => "unital",
            RelationId::Nonzero => "nonzero",
        }
    }
}

/// One verified relation instance. `counterexample` holds the nonzero
/// discrepancy when the check fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationRecord<C> {
    pub relation: RelationId,
    pub subject: String,
    pub pass: bool,
    pub counterexample: Option<C>,
}

impl<C> RelationRecord<C> {
    pub fn check(relation: RelationId, subject: impl Into<String>, diff: Option<C>) -> Self {
        RelationRecord {
            relation,
            subject: subject.into(),
            pass: diff.is_none(),
            counterexample: diff,
        }
    }
}

/// Aggregated verdict of a relation check run.
///
/// The three flags are deliberately separate. `pass` covers exactly the
/// *-homomorphism relations, which is what admissibility guarantees. An
/// assignment can be a perfectly good non-unital *-homomorphism (a
/// covariant induction whose vertex map is not onto), and a unital one can
/// still kill a vertex projection (a contravariant induction with an empty
/// vertex preimage), so unitality and the non-vanishing evidence are
/// reported on their own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport<C> {
    pub records: Vec<RelationRecord<C>>,
    /// True iff every *-homomorphism relation record passed.
    pub pass: bool,
    /// True iff the unitality record passed.
    pub unital: bool,
    /// True iff no vertex projection maps to zero (injectivity evidence,
    /// not a proof of injectivity).
    pub nonzero: bool,
}

impl<C> VerifyReport<C> {
    pub fn from_records(records: Vec<RelationRecord<C>>) -> Self {
        let tier = |id: RelationId| {
            records
                .iter()
                .filter(|r| r.relation == id)
                .all(|r: &RelationRecord<C>| r.pass)
        };
        let pass = records
            .iter()
            .filter(|r| r.relation != RelationId::Unital && r.relation != RelationId::Nonzero)
            .all(|r| r.pass);
        VerifyReport {
            pass,
            unital: tier(RelationId::Unital),
            nonzero: tier(RelationId::Nonzero),
            records,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationRecord<C>> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn failures_for(&self, relation: RelationId) -> Vec<&RelationRecord<C>> {
        self.failures().filter(|r| r.relation == relation).collect()
    }
}

/// The operations a relation check needs from the receiving ring.
pub trait StarRing: Clone {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn adjoint(&self) -> Self;
    fn canonical_form(&self) -> Self;
    fn is_zero(&self) -> bool;
}

/// Checks every defining relation of the algebra of `source` on assigned
/// generator images, by exact computation in the receiving ring.
///
/// `pmap` and `smap` are indexed by source vertex and edge. The relation
/// set: vertex images are mutually orthogonal self-adjoint idempotents;
/// `S_e* S_e = P_{t(e)}`; distinct edges have orthogonal ranges;
/// `P_{s(e)} S_e = S_e`; `P_v = Σ_{s(e)=v} S_e S_e*` at regular vertices;
/// the vertex images sum to the unit; and no vertex image vanishes
/// (injectivity evidence, not a proof of injectivity).
pub fn verify_generator_assignment<R: StarRing>(
    source: &Graph,
    pmap: &[R],
    smap: &[R],
    zero: &R,
    one: &R,
) -> VerifyReport<R> {
    let mut records: Vec<RelationRecord<R>> = Vec::new();

    let diff = |lhs: &R, rhs: &R| -> Option<R> {
        let d = lhs.sub(rhs).canonical_form();
        (!d.is_zero()).then_some(d)
    };

    // mutually orthogonal self-adjoint idempotents
    for v in source.vertices() {
        let p = &pmap[v.index()];
        let subject = format!("P_{}", source.vertex_name(v));
        records.push(RelationRecord::check(
            RelationId::OrthProj,
            format!("{subject} self-adjoint"),
            diff(&p.adjoint(), p),
        ));
        records.push(RelationRecord::check(
            RelationId::OrthProj,
            format!("{subject} idempotent"),
            diff(&p.mul(p), p),
        ));
    }
    for v in source.vertices() {
        for w in source.vertices() {
            if v >= w {
                continue;
            }
            let prod = pmap[v.index()].mul(&pmap[w.index()]);
            records.push(RelationRecord::check(
                RelationId::OrthProj,
                format!("P_{} P_{}", source.vertex_name(v), source.vertex_name(w)),
                diff(&prod, zero),
            ));
        }
    }

    // (1): S_e* S_e = P_{t(e)}
    for e in source.edges() {
        let s = &smap[e.index()];
        let lhs = s.adjoint().mul(s);
        records.push(RelationRecord::check(
            RelationId::Ck1,
            format!("S_{}* S_{}", source.edge_name(e), source.edge_name(e)),
            diff(&lhs, &pmap[source.tgt(e).index()]),
        ));
    }

    // orthogonal ranges for distinct edges
    for e in source.edges() {
        for f in source.edges() {
            if e >= f {
                continue;
            }
            let lhs = smap[e.index()].adjoint().mul(&smap[f.index()]);
            records.push(RelationRecord::check(
                RelationId::OrthRange,
                format!("S_{}* S_{}", source.edge_name(e), source.edge_name(f)),
                diff(&lhs, zero),
            ));
        }
    }

    // (3) in left-support form: P_{s(e)} S_e = S_e
    for e in source.edges() {
        let s = &smap[e.index()];
        let lhs = pmap[source.src(e).index()].mul(s);
        records.push(RelationRecord::check(
            RelationId::Ck3,
            format!(
                "P_{} S_{}",
                source.vertex_name(source.src(e)),
                source.edge_name(e)
            ),
            diff(&lhs, s),
        ));
    }

    // (2): P_v = Σ_{s(e)=v} S_e S_e* at regular vertices
    for v in source.vertices() {
        if !source.is_regular(v) {
            continue;
        }
        let mut sum = zero.clone();
        for &e in source.out_edges(v) {
            let s = &smap[e.index()];
            sum = sum.add(&s.mul(&s.adjoint()));
        }
        records.push(RelationRecord::check(
            RelationId::Ck2,
            format!("P_{}", source.vertex_name(v)),
            diff(&pmap[v.index()], &sum),
        ));
    }

    // unitality
    let mut total = zero.clone();
    for p in pmap {
        total = total.add(p);
    }
    records.push(RelationRecord::check(
        RelationId::Unital,
        "sum of vertex projections",
        diff(&total, one),
    ));

    // injectivity evidence: no vertex projection vanishes
    for v in source.vertices() {
        let p = pmap[v.index()].canonical_form();
        let subject = format!("P_{}", source.vertex_name(v));
        if p.is_zero() {
            records.push(RelationRecord {
                relation: RelationId::Nonzero,
                subject,
                pass: false,
                counterexample: Some(p),
            });
        } else {
            records.push(RelationRecord::check(RelationId::Nonzero, subject, None));
        }
    }

    VerifyReport::from_records(records)
}
