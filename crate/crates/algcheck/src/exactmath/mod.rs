//! Exact scalar arithmetic and exact linear algebra.
//!
//! Scalars: arbitrary-precision [`Rational`]s (backed by `num-rational`),
//! Gaussian rationals ([`ComplexRational`]), rational [`Quaternion`]s,
//! [`Cyclotomic`] numbers in canonical reduced form, and small finite fields
//! ([`GFElement`]). Matrices over any of the commutative scalars go through
//! the [`Scalar`] trait; [`signature`] and the span/closure helpers are the
//! workhorses used by every other module.

mod cyclotomic;
mod gf;
mod matrix;
mod quaternion;
mod rational;

pub use cyclotomic::{phi, Cyclotomic};
pub use gf::{FieldId, GFElement};
pub use matrix::{
    closure_span, signature, signature_hermitian_complex, signature_hermitian_quaternion,
    span_dimension, ExactMatrix, MatrixError, SpanBasis,
};
pub use quaternion::Quaternion;
pub use rational::{
    format_decimal, parse_decimal, rat, ratio, sqrt_floor_decimal, ComplexRational, Rational,
};

/// Commutative exact scalar usable as a matrix entry.
///
/// `zero_like`/`one_like` take a sample value so that context-carrying types
/// (finite-field elements, which remember their field) can produce constants
/// of the right field.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
}
