//! Exact analysis of arrangements of lines and conics in the complex
//! projective plane.
//!
//! Geometric arrangements are given by rational equations; their singular
//! points are computed exactly ([`intersection`]) and summarized as a
//! [`CombinatorialType`]. Every invariant in [`invariants`] is a pure function
//! of that type, so arrangements known only by their incidence data enter the
//! same pipeline.

pub mod arith;
pub mod arrangement;
pub mod catalog;
pub mod error;
pub mod format;
pub mod intersection;
pub mod invariants;
pub mod report;
pub mod search;

pub use arrangement::{Arrangement, CombinatorialType, CurveKind, PlaneCurve};
pub use error::{Error, ParseError, Result};
