//! Singularities of univariate sparse resultants.
//!
//! For two Laurent polynomials with fixed supports `B1`, `B2 ⊂ Z` the
//! sparse resultant `R_B` is a hypersurface in the coefficient space
//! `C^{B1} × C^{B2}`. This crate classifies support pairs by the
//! combinatorial conditions that decide whether the generic singularities of
//! `R_B` are nodes, computes `R_B` exactly, stratifies the coefficient space
//! by root-multiplicity labels and probes stratum codimensions, and checks
//! the root-of-unity minor identities behind those statements.

pub mod app;
pub mod exact;
pub mod laurent;
pub mod minors;
pub mod mpoly;
pub mod numeric;
pub mod resultant;
pub mod scalar;
pub mod singularity;
pub mod strata;
pub mod support;

pub use exact::{CycloElement, Rational, UniPoly};
pub use laurent::{LaurentPoly, PointClass, ProjPoint, RootRecord};
pub use mpoly::MPoly;
pub use strata::StratumLabel;
pub use support::{SupportPair, SupportSet};
