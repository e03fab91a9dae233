//! Matrix groups over small finite fields and the two particle models: the
//! Sym(6) bit-string model over GF(2) and the triple-cover model over GF(4),
//! plus SL(2,q) structural checks.

mod gf2model;
mod gf4model;
mod matrices;
mod sl2q;

pub use gf2model::{
    b_form, letters_from_mask, mask_from_letters, permute_mask, q_form, quotient_rep, Gf2Model,
    ParticleFile, ParticleRecord,
};
pub use gf4model::{
    generation_action, generators as gf4_generators, parse_gf4_vector, projective_rep,
    GenerationReport, Gf4Model,
};
pub use matrices::{nonzero_vectors, GFMatrix, GFMatrixGroup};
pub use sl2q::{
    build_sl23, build_sl29, find_index6_subgroup, iso_quaternion_to_sl23, projective_action,
    projective_line, quaternion_2alt4, sl29_structure, two_transitive, ProjectiveAction,
    Sl29Report,
};
