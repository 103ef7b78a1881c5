//! Exact invariants of multiparameter quantum tori and predicted GK
//! dimensions of their simple modules.

pub mod algebra;
pub mod catalog;
pub mod input;
pub mod invariants;
pub mod lattice;
pub mod oracle;
pub mod predict;
pub mod report;
pub mod scalars;
pub mod selftest;

pub use algebra::{QTorusPresentation, ScalarAutomorphismSpec};
pub use invariants::{KdimEstimate, KdimOptions};
pub use lattice::{IntegerMatrix, Sublattice};
pub use predict::{DimSemantics, DimSet};
pub use scalars::{ExponentVector, GeneratorBasis, ScalarMode};
