//! Exact symbolic computation in the dense *-subalgebras of graph C*-algebras.
//!
//! The library works with finite directed graphs and the universal algebras
//! attached to them: vertex projections `P_v` and edge partial isometries
//! `S_e` subject to the Cuntz-Krieger relations. All arithmetic is exact
//! (integer coefficients, no floating point), and equality of algebra
//! elements is decided by a canonical normal form.
//!
//! On top of the algebra engine sit the two functors that turn graph
//! morphisms into *-homomorphisms:
//!
//! * admissible graph homomorphisms induce contravariantly
//!   (`g*(S_p) = Σ_{q ∈ g⁻¹(p)} S_q`),
//! * admissible path homomorphisms induce covariantly
//!   (`f_*(S_p) = S_{f(p)}`),
//!
//! and every induced generator assignment can be machine-verified against
//! the defining relations. The [`cuntz`] module chains these functors to
//! produce explicit, relation-checked polynomial formulas for all unital
//! embeddings `O_p -> M_k(O_q)` permitted by the K-theory congruence
//! `(p-1)k = (q-1)s`.

pub mod algebra;
pub mod cuntz;
pub mod dot;
pub mod error;
pub mod graph;
pub mod json;
pub mod latex;
pub mod matrix;
pub mod morphism;
pub mod path;
pub mod report;
pub mod starhom;

pub use algebra::{Element, Term};
pub use error::Error;
pub use graph::{EdgeId, Graph, VertexId};
pub use matrix::MatrixElement;
pub use morphism::{GraphHom, PathHom};
pub use path::Path;
pub use starhom::StarHom;
