//! Clifford algebra layer: the concrete 64-dimensional gamma-quaternion
//! algebra, abstract Clifford algebras on declared generators, and the
//! verification operations (generator sets, pseudoscalars, commuting
//! subalgebras, idempotent splittings, Lie closures, grade decomposition).

mod abstract_algebra;
mod blade;
mod fixtures;
mod ops;
mod parse;

pub use abstract_algebra::{AbElement, AbstractClifford};
pub use blade::{blade_mul, Blade, MultiVector};
pub use fixtures::{
    AlgebraKind, CommutingPairFixture, FixtureEntry, FixtureFile, GeneratorFixture,
    IdempotentFixture, LiePairFixture, ParsedGenerators,
};
pub use ops::{
    associative_closure, commuting_subalgebras, grade_decomposition, idempotent_split,
    lie_closure, pseudoscalar, pseudoscalar_invariance, sign_match, verify_generators,
    GeneratorReport, IdempotentReport,
};
pub use parse::{parse_abstract_word, parse_gamma_expr};

use crate::exactmath::Rational;

/// Common surface of the two exact algebra representations, enough for the
/// generic verification operations.
pub trait AlgebraElement: Clone + PartialEq {
    fn ambient_dim(&self) -> usize;
    fn coords(&self) -> Vec<Rational>;
    fn mul(&self, rhs: &Self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, s: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    /// Some(c) iff the element is c times the identity.
    fn try_scalar(&self) -> Option<Rational>;
    fn one_like(&self) -> Self;

    fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }
    fn anticommutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).add(&rhs.mul(self))
    }
    fn commutes_with(&self, rhs: &Self) -> bool {
        self.commutator(rhs).is_zero()
    }
}

impl AlgebraElement for MultiVector {
    fn ambient_dim(&self) -> usize {
        64
    }
    fn coords(&self) -> Vec<Rational> {
        MultiVector::coords(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        MultiVector::mul(self, rhs)
    }
    fn add(&self, rhs: &Self) -> Self {
        MultiVector::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        MultiVector::sub(self, rhs)
    }
    fn neg(&self) -> Self {
        MultiVector::neg(self)
    }
    fn scale(&self, s: &Rational) -> Self {
        MultiVector::scale(self, s)
    }
    fn is_zero(&self) -> bool {
        MultiVector::is_zero(self)
    }
    fn try_scalar(&self) -> Option<Rational> {
        MultiVector::try_scalar(self)
    }
    fn one_like(&self) -> Self {
        MultiVector::one()
    }
}

impl AlgebraElement for AbElement {
    fn ambient_dim(&self) -> usize {
        self.algebra.dim()
    }
    fn coords(&self) -> Vec<Rational> {
        AbElement::coords(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        AbElement::mul(self, rhs)
    }
    fn add(&self, rhs: &Self) -> Self {
        AbElement::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        AbElement::sub(self, rhs)
    }
    fn neg(&self) -> Self {
        AbElement::neg(self)
    }
    fn scale(&self, s: &Rational) -> Self {
        AbElement::scale(self, s)
    }
    fn is_zero(&self) -> bool {
        AbElement::is_zero(self)
    }
    fn try_scalar(&self) -> Option<Rational> {
        AbElement::try_scalar(self)
    }
    fn one_like(&self) -> Self {
        AbElement::one(self.algebra.clone())
    }
}
