//! Exact construction of the Cardy-Frobenius algebra `H = A ⊕ B` attached to
//! a finite group `G` and a subgroup `K`, verification of its axioms, and
//! evaluation of Hurwitz numbers of `G`-coverings of surfaces by seamed
//! surfaces, cross-checked by brute-force oracles.

pub mod action;
pub mod cardy;
pub mod error;
pub mod frobenius;
pub mod group;
pub mod hurwitz;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod rational;
pub mod report;

pub use action::{build_catalog, conjugation_nset, BoundaryField, ConjugationAction, FieldCatalog, InteriorField, NSet};
pub use cardy::{hecke_check, CardyFrobeniusAlgebra, HeckeReport};
pub use error::{Error, Result};
pub use frobenius::{AlgebraElement, EquippedFrobeniusAlgebra};
pub use group::{build_group, ConjugacyClass, FiniteGroup, Subgroup, DEFAULT_ORDER_BOUND};
pub use hurwitz::{evaluate, HurwitzResult, SurfaceSpec};
pub use oracle::{OracleResult, DEFAULT_TUPLE_BOUND};
pub use rational::Rational;
pub use report::{Check, Report, Status};
