//! Exact-arithmetic verification toolkit.
//!
//! Everything here computes over exact scalars (arbitrary-precision rationals,
//! quaternions, cyclotomic numbers, small finite fields). No floating point is
//! used anywhere in a verification path; decimal output is produced by exact
//! rounding at the report layer.
//!
//! The crate is organised around the objects it checks:
//!
//! - [`exactmath`] — scalar types and exact linear algebra (rank, nullspace,
//!   signature of a symmetric form, span closure).
//! - [`clifford`] — the 64-dimensional gamma-quaternion algebra, abstract
//!   Clifford algebras on up to six generators, and the fixture registry of
//!   named generator sets with their claimed signatures and pseudoscalars.
//! - [`permgroup`] — finite permutation groups: closure, conjugacy classes,
//!   coset actions, orbit partitions, subgroup-class search.
//! - [`repkit`] — exact character tables (Dixon's modular method),
//!   Frobenius–Schur indicators, real Wedderburn decompositions and their
//!   Lie-group labels, tensor/symmetric/alternating squares, restriction.
//! - [`finfield`] — matrix groups over GF(2)/GF(4)/GF(9), the bit-string and
//!   vector particle models, orbit counts, SL(2,q) structure checks.
//! - [`klein`] — antisymmetric squares of the four 15-dimensional real Lie
//!   algebras acting on 4-space, invariant 6-dimensional quadratic forms and
//!   their signatures, vector stabilizers.
//! - [`masspred`] — mass-formula evaluations with first-order uncertainty
//!   propagation over exact decimal inputs.
//! - [`report`] / [`suites`] / [`runner`] — the verification suites, the
//!   machine-readable report format and the (optionally parallel) runner.

pub mod clifford;
pub mod exactmath;
pub mod finfield;
pub mod klein;
pub mod masspred;
pub mod permgroup;
pub mod registry;
pub mod repkit;
pub mod report;
pub mod runner;
pub mod suites;
