//! Exact-arithmetic differential Gerstenhaber algebra engine for nilpotent
//! Lie algebras with abelian complex structures.
//!
//! The crate compiles a real nilpotent Lie algebra plus a complex structure
//! into a finite-dimensional exterior algebra of (1,0)-vectors and
//! (0,1)-forms, and computes there with no rounding anywhere: scalars are
//! Gaussian rationals. On top of that base it provides
//!
//! - the Schouten–Nijenhuis bracket and the differential `∂̄` ([`ops`]),
//! - bidegree-wise splittings `g^{p,q} = H ⊕ D ⊕ G` with a deterministic
//!   Green preimage operator ([`hodge`]),
//! - order-by-order solution of the Maurer–Cartan equation with obstruction
//!   tracking, plus the closed-form solution on Kodaira models
//!   ([`kuranishi`]),
//! - certification of the deformation frame map Φ as an isomorphism of
//!   differential Gerstenhaber algebras, and an ascending-basis /
//!   holomorphic-Poisson probe for general 2-step models ([`kodaira`]),
//! - the degree-2 bracket table with reference comparison ([`table`]) and
//!   the report-producing verification suites behind the `verify` binary
//!   ([`report`]).
//!
//! See the crate examples for one runnable program per capability.

pub mod axioms;
pub mod error;
pub mod exterior;
pub mod hodge;
pub mod kodaira;
pub mod kuranishi;
pub mod linalg;
pub mod model;
mod ops;
pub mod report;
pub mod scalar;
pub mod table;

pub use error::{Error, Result};
pub use exterior::{GenKind, GenTag, GeneratorId, Monomial, Multivector};
pub use hodge::{dbar_matrix, hodge_split, HodgeSplit};
pub use kodaira::{build_phi, conjecture_probe, verify_isomorphism, PhiMap};
pub use kuranishi::{
    closed_form_kodaira, compare_series_to_closed_form, kuranishi_solve, KodairaSeedParams,
    MCSeries,
};
pub use model::{build_kodaira, compile_model, AlgebraModel, ComplexStructureSpec, LieAlgebraSpec};
pub use scalar::GaussianRational;
