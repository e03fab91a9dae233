//! The verification suites: each builds a list of independent tasks that
//! produce check records.

mod clifford;
mod finfield;
mod groups;
mod klein;
mod mass;
mod repkit;

pub use clifford::clifford_suite;
pub use finfield::finfield_suite;
pub use groups::groups_suite;
pub use klein::klein_suite;
pub use mass::mass_suite;
pub use repkit::repkit_suite;
