//! Exact character theory: Dixon tables, Frobenius–Schur indicators, real
//! Wedderburn decompositions with Lie-group labels, squares and restriction,
//! and the table export/cache format.

pub mod cache;
mod dixon;
mod table;
mod wedderburn;

pub use dixon::{character_table, dixon_prime};
pub use table::{fusion_map, restrict_values, CharRow, CharacterTable};
pub use wedderburn::{
    decompose_real, lie_label, real_columns, real_irreps, real_table_values, real_wedderburn,
    regular_real_multiplicities, values_equal_ints, DivisionType, RealIrrep, WedderburnSummand,
};
