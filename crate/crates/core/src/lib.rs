//! Exact-arithmetic workbench for finite-dimensional nonassociative algebras
//! presented by structure constants.
//!
//! The library works over three exact scalar domains: rationals, a single
//! quadratic extension `Q(sqrt(d))`, and prime fields `F_p`. On top of that it
//! provides:
//!
//! * structure-constant algebras, bilinear forms, linear maps and Lie-algebra
//!   representations ([`algebra`], [`form`], [`rep`]);
//! * a catalog of multilinear identities (anti-pre-Lie, pre-Lie, Novikov,
//!   admissible Novikov, associativity variants, Jacobi) with counterexample
//!   reporting ([`identities`]);
//! * exact solvers for bilinear-form conditions (commutative 2-cocycles,
//!   invariant forms) and the induced compatible products ([`cocycles`]);
//! * anti-O-operator / anti-Rota-Baxter verification plus finite-field
//!   exhaustive oracles ([`operators`]);
//! * the generative constructions: linear functions, symmetric forms,
//!   q-algebra transforms, admissible pairs, semidirect and tensor brackets,
//!   affinization certificates ([`constructions`]);
//! * two-operation Poisson-type structures ([`poisson`]);
//! * the named-algebra catalog, isomorphism fingerprints and stored
//!   isomorphism witnesses ([`classify`]).
//!
//! Everything is deterministic: given equal inputs, every function produces
//! bit-identical output.
//!
//! ```
//! use apla_core::classify::{self, CatalogId};
//! use apla_core::cocycles::{self, FormMode};
//! use apla_core::identities::{check_identity, IdentityId};
//!
//! # fn main() -> Result<(), apla_core::Error> {
//! // solve for commutative 2-cocycles on sl(2), pick a nondegenerate one,
//! // induce the compatible product and check the anti-pre-Lie identities
//! let sl2 = classify::catalog(&CatalogId::Sl2Lie)?.into_algebra();
//! let space = cocycles::solve_form_space(&sl2, FormMode::Cocycle, true)?;
//! let b = cocycles::nondegenerate_member(&space, 3).expect("nondegenerate member");
//! let apl = cocycles::induce_compatible_product(&sl2, &b)?;
//! assert!(check_identity(&apl, IdentityId::AntiPreLie1).pass);
//! assert!(check_identity(&apl, IdentityId::AntiPreLie2).pass);
//! # Ok(())
//! # }
//! ```

pub mod algebra;
pub mod classify;
pub mod cocycles;
pub mod constructions;
pub mod dim2;
pub mod error;
pub mod form;
pub mod identities;
pub mod linalg;
pub mod operators;
pub mod poisson;
pub mod poly;
pub mod rep;
pub mod report;
pub mod scalar;

pub use algebra::{Algebra, AlgebraRole, SecondRole, Side, TwoOpAlgebra};
pub use error::Error;
pub use form::BilinearForm;
pub use linalg::{LinearMap, Matrix};
pub use rep::Representation;
pub use report::{CheckReport, Witness};
pub use scalar::{FieldMode, Scalar};
