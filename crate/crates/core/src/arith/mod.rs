//! Exact scalar and polynomial arithmetic.

pub mod algebraic;
pub mod complex;
pub mod form;
pub mod rational;
pub mod upoly;

pub use algebraic::{alg_equal, isolate_roots, AlgebraicNumber};
pub use complex::{ComplexBox, Interval};
pub use form::{resultant, Monomial, TernaryForm, Var};
pub use rational::{format_rational, parse_rational, Rational};
pub use upoly::UnivariatePoly;
