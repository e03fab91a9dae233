//! Real Wedderburn decomposition of the group algebra from the complex table
//! plus Frobenius–Schur indicators, the Lie-group labelling rule, and the
//! merged real character table.

use crate::exactmath::{rat, Cyclotomic};

use super::table::CharacterTable;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DivisionType {
    R,
    C,
    H,
}

impl std::fmt::Display for DivisionType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DivisionType::R => write!(f, "R"),
            DivisionType::C => write!(f, "C"),
            DivisionType::H => write!(f, "H"),
        }
    }
}

/// One matrix-algebra summand M_size(division) of the real group algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct WedderburnSummand {
    pub division: DivisionType,
    pub matrix_size: usize,
    /// Real dimension of the summand algebra: size²·dim_R(division).
    pub real_dim: usize,
    /// Dimension of the real irreducible representation it acts on.
    pub real_irrep_dim: usize,
    /// Complex table rows merged into this summand.
    pub rows: Vec<usize>,
}

impl WedderburnSummand {
    pub fn label(&self) -> String {
        match (self.division, self.matrix_size) {
            (DivisionType::R, 1) => "R".into(),
            (DivisionType::C, 1) => "C".into(),
            (DivisionType::H, 1) => "H".into(),
            (DivisionType::R, n) => format!("M{}(R)", n),
            (DivisionType::C, n) => format!("M{}(C)", n),
            (DivisionType::H, n) => format!("M{}(H)", n),
        }
    }
}

/// Compute the real Wedderburn summands: indicator +1 of degree d gives
/// M_d(R); an indicator-0 conjugate pair of degree d gives M_d(C); indicator
/// -1 of degree d gives M_{d/2}(H). Ordered by real irreducible dimension,
/// then by summand dimension.
pub fn real_wedderburn(
    table: &CharacterTable,
    indicators: &[i8],
) -> Result<Vec<WedderburnSummand>, String> {
    let mut used = vec![false; table.rows.len()];
    let mut out = Vec::new();
    for i in 0..table.rows.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let d = table.rows[i].degree;
        match indicators[i] {
            1 => out.push(WedderburnSummand {
                division: DivisionType::R,
                matrix_size: d,
                real_dim: d * d,
                real_irrep_dim: d,
                rows: vec![i],
            }),
            -1 => {
                if d % 2 != 0 {
                    return Err(format!(
                        "indicator -1 with odd degree {d} for {}", table.rows[i].name
                    ));
                }
                out.push(WedderburnSummand {
                    division: DivisionType::H,
                    matrix_size: d / 2,
                    real_dim: d * d,
                    real_irrep_dim: 2 * d,
                    rows: vec![i],
                });
            }
            0 => {
                let partner = table
                    .conjugate_row(i)
                    .ok_or_else(|| format!("no conjugate partner for {}", table.rows[i].name))?;
                if partner == i || used[partner] {
                    return Err(format!("bad conjugate pairing for {}", table.rows[i].name));
                }
                used[partner] = true;
                out.push(WedderburnSummand {
                    division: DivisionType::C,
                    matrix_size: d,
                    real_dim: 2 * d * d,
                    real_irrep_dim: 2 * d,
                    rows: vec![i, partner],
                });
            }
            other => return Err(format!("invalid indicator {other}")),
        }
    }
    let total: usize = out.iter().map(|s| s.real_dim).sum();
    if total != table.group.order() {
        return Err(format!("summand dimensions {total} ≠ |G| = {}", table.group.order()));
    }
    out.sort_by_key(|s| (s.real_irrep_dim, s.real_dim, s.matrix_size));
    Ok(out)
}

/// The Lie-group label: drop R summands (a real scale factor only), map C to
/// U(1), H to SU(2), M_n(R/C/H) to SL(n, R/C/H); join with " × ".
pub fn lie_label(summands: &[WedderburnSummand]) -> String {
    let mut parts = Vec::new();
    for s in summands {
        let piece = match (s.division, s.matrix_size) {
            (DivisionType::R, 1) => continue,
            (DivisionType::C, 1) => "U(1)".to_string(),
            (DivisionType::H, 1) => "SU(2)".to_string(),
            (DivisionType::R, n) => format!("SL({},R)", n),
            (DivisionType::C, n) => format!("SL({},C)", n),
            (DivisionType::H, n) => format!("SL({},H)", n),
        };
        parts.push(piece);
    }
    parts.join(" × ")
}

/// A real irreducible representation: an R-row as is, a merged conjugate
/// pair (χ + χ̄), or a doubled quaternionic row (2χ).
#[derive(Clone, Debug)]
pub struct RealIrrep {
    pub kind: DivisionType,
    /// Complex rows merged into this real irreducible.
    pub rows: Vec<usize>,
    pub real_degree: usize,
    /// Real character values per class (cyclotomic but conjugation-fixed).
    pub values: Vec<Cyclotomic>,
}

/// The real irreducible characters implied by the table and indicators,
/// in summand order.
pub fn real_irreps(
    table: &CharacterTable,
    summands: &[WedderburnSummand],
) -> Vec<RealIrrep> {
    summands
        .iter()
        .map(|s| {
            let values = match s.division {
                DivisionType::R => table.rows[s.rows[0]].values.clone(),
                DivisionType::C => {
                    let a = &table.rows[s.rows[0]].values;
                    let b = &table.rows[s.rows[1]].values;
                    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
                }
                DivisionType::H => table.rows[s.rows[0]]
                    .values
                    .iter()
                    .map(|v| v.scale(&rat(2)))
                    .collect(),
            };
            RealIrrep { kind: s.division, rows: s.rows.clone(), real_degree: s.real_irrep_dim, values }
        })
        .collect()
}

/// Decompose a permutation (or any rational) character into real
/// irreducibles: complex multiplicities are merged per summand, checking the
/// evenness / equal-pair constraints.
pub fn decompose_real(
    table: &CharacterTable,
    summands: &[WedderburnSummand],
    values: &[Cyclotomic],
) -> Result<Vec<usize>, String> {
    let mults = table.decompose(values)?;
    summands
        .iter()
        .map(|s| match s.division {
            DivisionType::R => Ok(mults[s.rows[0]]),
            DivisionType::C => {
                let (a, b) = (mults[s.rows[0]], mults[s.rows[1]]);
                if a != b {
                    return Err(format!("conjugate pair with unequal multiplicities {a} vs {b}"));
                }
                Ok(a)
            }
            DivisionType::H => {
                let m = mults[s.rows[0]];
                if m % 2 != 0 {
                    return Err(format!("odd multiplicity {m} for a quaternionic row"));
                }
                Ok(m / 2)
            }
        })
        .collect()
}

/// Classes merged under inversion (g ~ g⁻¹): the columns of the real table.
pub fn real_columns(table: &CharacterTable) -> Vec<Vec<usize>> {
    let mut seen = vec![false; table.num_classes()];
    let mut out = Vec::new();
    for j in 0..table.num_classes() {
        if seen[j] {
            continue;
        }
        let jinv = table.conj.inverse_class(j);
        seen[j] = true;
        let mut group = vec![j];
        if jinv != j {
            seen[jinv] = true;
            group.push(jinv);
        }
        out.push(group);
    }
    out
}

/// Evaluate a real irreducible on merged columns; the value must be constant
/// across each merged column (real characters cannot separate g from g⁻¹).
pub fn real_table_values(
    irrep: &RealIrrep,
    columns: &[Vec<usize>],
) -> Result<Vec<Cyclotomic>, String> {
    columns
        .iter()
        .map(|col| {
            let v = irrep.values[col[0]].clone();
            for &j in &col[1..] {
                if irrep.values[j] != v {
                    return Err("real character value differs on an inverse pair".to_string());
                }
            }
            Ok(v)
        })
        .collect()
}

/// Check a list of cyclotomic values against expected integers.
pub fn values_equal_ints(values: &[Cyclotomic], expected: &[i64]) -> bool {
    values.len() == expected.len()
        && values.iter().zip(expected).all(|(v, e)| *v == Cyclotomic::from_int(*e))
}

/// Real-regular-representation multiplicity law: an R summand of degree d
/// appears d times, a C pair appears d times, an H summand of quaternionic
/// size m appears... verified concretely against the regular character.
pub fn regular_real_multiplicities(
    table: &CharacterTable,
    summands: &[WedderburnSummand],
) -> Result<Vec<usize>, String> {
    let mut reg = vec![Cyclotomic::zero(); table.num_classes()];
    reg[0] = Cyclotomic::from_int(table.group.order() as i64);
    decompose_real(table, summands, &reg)
}

#[cfg(test)]
mod tests {
    use super::super::dixon::character_table;
    use super::*;
    use crate::permgroup::{Perm, PermGroup};
    use std::sync::Arc;

    #[test]
    fn sym3_wedderburn() {
        let a = Perm::from_cycles(3, &[&[0, 1, 2]]);
        let b = Perm::from_cycles(3, &[&[0, 1]]);
        let t = character_table(Arc::new(PermGroup::close(vec![a, b], 100).unwrap())).unwrap();
        let fs = t.fs_indicators().unwrap();
        let w = real_wedderburn(&t, &fs).unwrap();
        let labels: Vec<String> = w.iter().map(|s| s.label()).collect();
        assert_eq!(labels, vec!["R", "R", "M2(R)"]);
        assert_eq!(lie_label(&w), "SL(2,R)");
        // regular representation: each R-type of degree d appears d times
        let reg = regular_real_multiplicities(&t, &w).unwrap();
        assert_eq!(reg, vec![1, 1, 2]);
    }

    #[test]
    fn trivial_group_label_is_empty() {
        let t = character_table(Arc::new(
            PermGroup::close(vec![Perm::identity(1)], 10).unwrap(),
        ))
        .unwrap();
        let fs = t.fs_indicators().unwrap();
        let w = real_wedderburn(&t, &fs).unwrap();
        assert_eq!(lie_label(&w), "");
    }
}
