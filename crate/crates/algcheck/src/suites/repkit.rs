//! Verification tasks for character tables, Wedderburn decompositions,
//! Lie-group labels, squares, and restriction branching.

use std::sync::Arc;

use serde_json::json;

use crate::exactmath::Cyclotomic;
use crate::permgroup::GroupAction;
use crate::repkit::{
    decompose_real, fusion_map, lie_label, real_columns, real_irreps, real_table_values,
    real_wedderburn, regular_real_multiplicities, CharacterTable, DivisionType, RealIrrep,
};
use crate::report::CheckRecord;
use crate::runner::{SuiteContext, Task};

fn degrees_of(t: &CharacterTable) -> Vec<usize> {
    t.rows.iter().map(|r| r.degree).collect()
}

/// Letter naming of the five real irreducibles of the binary tetrahedral
/// group: T(rivial), U(nitary), V(ector), R(eal), S(pinor).
fn letter_of(ri: &RealIrrep) -> Option<&'static str> {
    match (ri.kind, ri.real_degree) {
        (DivisionType::R, 1) => Some("T"),
        (DivisionType::C, 2) => Some("U"),
        (DivisionType::R, 3) => Some("V"),
        (DivisionType::H, 4) => Some("R"),
        (DivisionType::C, 4) => Some("S"),
        _ => None,
    }
}

fn format_letters(mults: &[usize], letters: &[&'static str]) -> String {
    let mut parts = Vec::new();
    for (m, l) in mults.iter().zip(letters) {
        match m {
            0 => {}
            1 => parts.push((*l).to_string()),
            _ => parts.push(format!("{m}{l}")),
        }
    }
    parts.join("+")
}

fn binary_tetrahedral_table_records(ctx: &SuiteContext) -> Vec<CheckRecord> {
    let mut records = Vec::new();
    let table = match ctx.registry.table("2alt4-quaternion") {
        Ok(t) => t,
        Err(e) => return vec![CheckRecord::error("repkit.2alt4.table", "table computes", &e)],
    };
    let mut degrees = degrees_of(&table);
    degrees.sort_unstable();
    records.push(
        CheckRecord::new(
            "repkit.2alt4.degrees",
            "complex irreducible degrees are 1,1,1,2,2,2,3 with Σd² = 24",
            degrees == vec![1, 1, 1, 2, 2, 2, 3],
        )
        .with_witness(json!({ "degrees": degrees })),
    );
    let fs = match table.fs_indicators() {
        Ok(f) => f,
        Err(e) => return vec![CheckRecord::error("repkit.2alt4.indicators", "indicators", &e)],
    };
    // indicator examples: trivial +1; one quaternionic degree 2; the two
    // conjugate linear characters have indicator 0
    let trivial = table
        .rows
        .iter()
        .position(|r| r.degree == 1 && r.values.iter().all(|v| *v == Cyclotomic::from_int(1)))
        .expect("trivial row");
    let linear_zeros =
        (0..table.rows.len()).filter(|&i| table.rows[i].degree == 1 && fs[i] == 0).count();
    let quaternionic_twos =
        (0..table.rows.len()).filter(|&i| table.rows[i].degree == 2 && fs[i] == -1).count();
    let complex_twos =
        (0..table.rows.len()).filter(|&i| table.rows[i].degree == 2 && fs[i] == 0).count();
    records.push(
        CheckRecord::new(
            "repkit.2alt4.indicators",
            "indicators: trivial +1, two linear characters 0, one quaternionic and one conjugate pair among the degree-2 characters",
            fs[trivial] == 1 && linear_zeros == 2 && quaternionic_twos == 1 && complex_twos == 2,
        )
        .with_witness(json!({ "indicators": fs })),
    );
    let summands = match real_wedderburn(&table, &fs) {
        Ok(s) => s,
        Err(e) => return vec![CheckRecord::error("repkit.2alt4.wedderburn", "summands", &e)],
    };
    let labels: Vec<String> = summands.iter().map(|s| s.label()).collect();
    records.push(
        CheckRecord::new(
            "repkit.2alt4.wedderburn",
            "real group algebra is R + C + M3(R) + H + M2(C), dimensions 1+2+9+4+8 = 24",
            labels == ["R", "C", "M3(R)", "H", "M2(C)"],
        )
        .with_witness(json!({ "labels": labels })),
    );
    let label = lie_label(&summands);
    records.push(
        CheckRecord::new(
            "repkit.2alt4.lie-label",
            "Lie-group label is U(1) × SL(3,R) × SU(2) × SL(2,C)",
            label == "U(1) × SL(3,R) × SU(2) × SL(2,C)",
        )
        .with_witness(json!({ "label": label })),
    );

    // merged real table against the five listed columns
    let irreps = real_irreps(&table, &summands);
    let letters: Vec<&'static str> = irreps.iter().map(|ri| letter_of(ri).unwrap_or("?")).collect();
    let columns = real_columns(&table);
    let column_orders: Vec<usize> = columns.iter().map(|c| table.conj.orders[c[0]]).collect();
    // expected real character values keyed by (letter, element order)
    let expected: std::collections::HashMap<(&str, usize), i64> = [
        (("T", 1), 1), (("T", 2), 1), (("T", 4), 1), (("T", 3), 1), (("T", 6), 1),
        (("U", 1), 2), (("U", 2), 2), (("U", 4), 2), (("U", 3), -1), (("U", 6), -1),
        (("V", 1), 3), (("V", 2), 3), (("V", 4), -1), (("V", 3), 0), (("V", 6), 0),
        (("R", 1), 4), (("R", 2), -4), (("R", 4), 0), (("R", 3), -2), (("R", 6), 2),
        (("S", 1), 4), (("S", 2), -4), (("S", 4), 0), (("S", 3), 1), (("S", 6), -1),
    ]
    .into_iter()
    .collect();
    let mut table_ok = columns.len() == 5 && letters.iter().all(|l| *l != "?");
    let mut rendered = Vec::new();
    for (ri, letter) in irreps.iter().zip(&letters) {
        match real_table_values(ri, &columns) {
            Ok(values) => {
                let mut row_render = Vec::new();
                for (v, &ord) in values.iter().zip(&column_orders) {
                    let expect = expected.get(&(*letter, ord));
                    match expect {
                        Some(&e) if *v == Cyclotomic::from_int(e) => {
                            row_render.push(e.to_string());
                        }
                        _ => {
                            table_ok = false;
                            row_render.push(format!("{v}?"));
                        }
                    }
                }
                rendered.push(format!("{letter}: {}", row_render.join(" ")));
            }
            Err(e) => {
                table_ok = false;
                rendered.push(format!("{letter}: {e}"));
            }
        }
    }
    records.push(
        CheckRecord::new(
            "repkit.2alt4.real-table",
            "the merged real character table matches the five listed columns exactly",
            table_ok,
        )
        .with_witness(json!({ "rows": rendered, "column_orders": column_orders })),
    );

    // regular representation = T + U + 3V + R + 2S
    match regular_real_multiplicities(&table, &summands) {
        Ok(mults) => {
            let rendered = format_letters(&mults, &letters);
            records.push(
                CheckRecord::new(
                    "repkit.2alt4.regular",
                    "the regular representation decomposes as T+U+3V+R+2S",
                    rendered == "T+U+3V+R+2S",
                )
                .with_witness(json!({ "decomposition": rendered })),
            );
        }
        Err(e) => records.push(CheckRecord::error("repkit.2alt4.regular", "regular", &e)),
    }

    // the signed 8-point action decomposes as S + T + V
    let act = GroupAction::natural(table.group.clone());
    let perm_char = table.permutation_character(&act.fixed_point_counts());
    match decompose_real(&table, &summands, &perm_char) {
        Ok(mults) => {
            let rendered = format_letters(&mults, &letters);
            records.push(
                CheckRecord::new(
                    "repkit.2alt4.eight-point",
                    "the signed 8-point representation decomposes as S+T+V",
                    rendered == "T+V+S",
                )
                .with_witness(json!({ "decomposition": rendered })),
            );
        }
        Err(e) => records.push(CheckRecord::error("repkit.2alt4.eight-point", "8-point", &e)),
    }
    records
}

fn binary_octahedral_records(ctx: &SuiteContext) -> Vec<CheckRecord> {
    let mut records = Vec::new();
    let table = match ctx.registry.table("2sym4") {
        Ok(t) => t,
        Err(e) => return vec![CheckRecord::error("repkit.2sym4.table", "table computes", &e)],
    };
    let fs = match table.fs_indicators() {
        Ok(f) => f,
        Err(e) => return vec![CheckRecord::error("repkit.2sym4.indicators", "indicators", &e)],
    };
    match real_wedderburn(&table, &fs) {
        Ok(summands) => {
            let labels: Vec<String> = summands.iter().map(|s| s.label()).collect();
            let total: usize = summands.iter().map(|s| s.real_dim).sum();
            records.push(
                CheckRecord::new(
                    "repkit.2sym4.wedderburn",
                    "real group algebra is 2R + M2(R) + 2M3(R) + 2H + M2(H), dimensions 2+4+18+8+16 = 48",
                    labels == ["R", "R", "M2(R)", "M3(R)", "M3(R)", "H", "H", "M2(H)"]
                        && total == 48,
                )
                .with_witness(json!({ "labels": labels, "total": total })),
            );
            let label = lie_label(&summands);
            records.push(
                CheckRecord::new(
                    "repkit.2sym4.lie-label",
                    "Lie-group label is SL(2,R) × SL(3,R) × SL(3,R) × SU(2) × SU(2) × SL(2,H)",
                    label == "SL(2,R) × SL(3,R) × SL(3,R) × SU(2) × SU(2) × SL(2,H)",
                )
                .with_witness(json!({ "label": label })),
            );
        }
        Err(e) => records.push(CheckRecord::error("repkit.2sym4.wedderburn", "summands", &e)),
    }
    records
}

fn icosahedral_double_cover_records(ctx: &SuiteContext) -> Vec<CheckRecord> {
    let mut records = Vec::new();
    let table = match ctx.registry.table("2alt5") {
        Ok(t) => t,
        Err(e) => return vec![CheckRecord::error("repkit.2alt5.table", "table computes", &e)],
    };
    let fs = match table.fs_indicators() {
        Ok(f) => f,
        Err(e) => return vec![CheckRecord::error("repkit.2alt5.indicators", "indicators", &e)],
    };
    let mut bosonic: Vec<usize> = Vec::new();
    let mut quaternionic_dims: Vec<usize> = Vec::new();
    for (i, row) in table.rows.iter().enumerate() {
        match fs[i] {
            1 => bosonic.push(row.degree),
            -1 => quaternionic_dims.push(row.degree / 2),
            _ => {}
        }
    }
    bosonic.sort_unstable();
    quaternionic_dims.sort_unstable();
    let bos_dim: usize = bosonic.iter().map(|d| d * d).sum();
    records.push(
        CheckRecord::new(
            "repkit.2alt5.real-types",
            "bosonic real degrees are {1,3,3,4,5} and quaternionic dimensions {1,1,2,3}; summands total 60 + 60 = 120",
            bosonic == vec![1, 3, 3, 4, 5]
                && quaternionic_dims == vec![1, 1, 2, 3]
                && bos_dim == 60,
        )
        .with_witness(json!({ "bosonic": bosonic, "quaternionic": quaternionic_dims })),
    );
    match real_wedderburn(&table, &fs) {
        Ok(summands) => {
            let total: usize = summands.iter().map(|s| s.real_dim).sum();
            records.push(CheckRecord::new(
                "repkit.2alt5.wedderburn-total",
                "Wedderburn summand dimensions sum to |G| = 120",
                total == 120,
            ));
        }
        Err(e) => records.push(CheckRecord::error("repkit.2alt5.wedderburn-total", "summands", &e)),
    }
    records
}

/// Names of constituents with multiplicities, e.g. {degree 3: 2 rows}.
fn constituent_degrees(t: &CharacterTable, mults: &[usize]) -> Vec<(usize, usize)> {
    mults
        .iter()
        .enumerate()
        .filter(|(_, m)| **m > 0)
        .map(|(i, m)| (t.rows[i].degree, *m))
        .collect()
}

fn double_cover_branching_records(ctx: &SuiteContext) -> Vec<CheckRecord> {
    let mut records = Vec::new();
    let run = || -> Result<Vec<CheckRecord>, String> {
        let t6 = ctx.registry.table("2alt6")?;
        let t5 = ctx.registry.table("2alt5")?;
        let fusion = fusion_map(&t6, &t5)?;
        let mut records = Vec::new();

        let mut degrees = degrees_of(&t6);
        degrees.sort_unstable();
        records.push(
            CheckRecord::new(
                "repkit.2alt6.degrees",
                "complex degrees are 1,4,4,5,5,8,8,8,8,9,10,10,10 with Σd² = 720",
                degrees == vec![1, 4, 4, 5, 5, 8, 8, 8, 8, 9, 10, 10, 10],
            )
            .with_witness(json!({ "degrees": degrees })),
        );

        let fours: Vec<usize> =
            (0..t6.rows.len()).filter(|&i| t6.rows[i].degree == 4).collect();
        if fours.len() != 2 {
            return Err("expected two degree-4 characters".into());
        }
        // one of the two restricts as 2+2, the other stays irreducible
        let mut splitting = None;
        let mut irreducible = None;
        for &i in &fours {
            let restricted = crate::repkit::restrict_values(&t6.rows[i].values, &fusion);
            let mults = t5.decompose(&restricted)?;
            let constituents = constituent_degrees(&t5, &mults);
            if constituents.iter().map(|(d, m)| d * m).sum::<usize>() != 4 {
                return Err("restriction lost dimensions".into());
            }
            if constituents == vec![(4, 1)] {
                irreducible = Some(i);
            } else if constituents.iter().all(|(d, _)| *d == 2) {
                splitting = Some(i);
            }
        }
        let (Some(dirac4), Some(other4)) = (splitting, irreducible) else {
            return Err("the two degree-4 characters did not split as expected".into());
        };
        records.push(CheckRecord::new(
            "repkit.branching.fours-restrict",
            "one degree-4 character restricts as a sum of two quaternionic 2s, the other stays irreducible",
            true,
        ));

        // Λ²(4) = 1 + 5 and S²(4) = an irreducible 10
        let (sym, alt) = t6.sym_alt_square(&t6.rows[dirac4].values);
        let alt_m = t6.decompose(&alt)?;
        let alt_parts = constituent_degrees(&t6, &alt_m);
        let five_row = alt_m
            .iter()
            .enumerate()
            .find(|(i, m)| **m == 1 && t6.rows[*i].degree == 5)
            .map(|(i, _)| i);
        records.push(
            CheckRecord::new(
                "repkit.branching.alt-square-4",
                "the antisymmetric square of the spinor 4 is 1 + 5",
                alt_parts == vec![(1, 1), (5, 1)],
            )
            .with_witness(json!({ "constituents": alt_parts })),
        );
        let sym_m = t6.decompose(&sym)?;
        let sym_parts = constituent_degrees(&t6, &sym_m);
        let ten_row = sym_m
            .iter()
            .enumerate()
            .find(|(i, m)| **m == 1 && t6.rows[*i].degree == 10)
            .map(|(i, _)| i);
        records.push(
            CheckRecord::new(
                "repkit.branching.sym-square-4",
                "the symmetric square of the spinor 4 is an irreducible 10",
                sym_parts == vec![(10, 1)],
            )
            .with_witness(json!({ "constituents": sym_parts })),
        );

        // 5 ↓ = 1 + 4 (bosonic), 10 ↓ = 3a + 3b + 4
        if let Some(five) = five_row {
            let restricted = crate::repkit::restrict_values(&t6.rows[five].values, &fusion);
            let mults = t5.decompose(&restricted)?;
            let parts = constituent_degrees(&t5, &mults);
            records.push(
                CheckRecord::new(
                    "repkit.branching.five-restricts",
                    "the 5 in the antisymmetric square restricts as 1 + 4",
                    parts == vec![(1, 1), (4, 1)],
                )
                .with_witness(json!({ "constituents": parts, "rendered": t5.format_decomposition(&mults) })),
            );
        }
        if let Some(ten) = ten_row {
            let restricted = crate::repkit::restrict_values(&t6.rows[ten].values, &fusion);
            let mults = t5.decompose(&restricted)?;
            let parts = constituent_degrees(&t5, &mults);
            // two distinct degree-3 constituents plus one degree-4
            let threes: usize = mults
                .iter()
                .enumerate()
                .filter(|(i, m)| t5.rows[*i].degree == 3 && **m == 1)
                .count();
            records.push(
                CheckRecord::new(
                    "repkit.branching.ten-restricts",
                    "the symmetric-square 10 restricts as 3a + 3b + 4",
                    threes == 2 && parts.iter().map(|(d, m)| d * m).sum::<usize>() == 10
                        && parts.contains(&(4, 1)),
                )
                .with_witness(json!({ "rendered": t5.format_decomposition(&mults) })),
            );
        }

        // 4 ⊗ 4' = 8a + 8b, restricting further as 3a + 5 + 3b + 5
        let tensor = t6.tensor(&t6.rows[dirac4].values, &t6.rows[other4].values);
        let mults = t6.decompose(&tensor)?;
        let parts = constituent_degrees(&t6, &mults);
        let eights: usize = mults
            .iter()
            .enumerate()
            .filter(|(i, m)| t6.rows[*i].degree == 8 && **m == 1)
            .count();
        records.push(
            CheckRecord::new(
                "repkit.branching.tensor-8a-8b",
                "the tensor of the two spinor 4s decomposes as 8a + 8b",
                eights == 2 && parts.iter().map(|(d, m)| d * m).sum::<usize>() == 16,
            )
            .with_witness(json!({ "rendered": t6.format_decomposition(&mults) })),
        );
        let restricted = crate::repkit::restrict_values(&tensor, &fusion);
        let mults = t5.decompose(&restricted)?;
        let parts = constituent_degrees(&t5, &mults);
        records.push(
            CheckRecord::new(
                "repkit.branching.tensor-restricts",
                "the 16-dimensional tensor restricts as 3a + 5 + 3b + 5",
                parts == vec![(3, 1), (3, 1), (5, 2)],
            )
            .with_witness(json!({ "rendered": t5.format_decomposition(&mults) })),
        );

        // The second 4: over the subgroup, Λ² = 1+5. Its restriction is the
        // symplectic degree-4 (indicator -1), so the invariant form sits in
        // the antisymmetric square and the trivial character cannot appear
        // in S²; the exact symmetric square is 3a + 3b + 4.
        let other_restricted = crate::repkit::restrict_values(&t6.rows[other4].values, &fusion);
        let (sym5, alt5v) = t5.sym_alt_square(&other_restricted);
        let alt_mults = t5.decompose(&alt5v)?;
        let sym_mults = t5.decompose(&sym5)?;
        let alt_parts = constituent_degrees(&t5, &alt_mults);
        let sym_parts = constituent_degrees(&t5, &sym_mults);
        let fs5 = t5.fs_indicators()?;
        let restricted_row = t5
            .rows
            .iter()
            .position(|r| r.values == other_restricted)
            .ok_or("irreducible restriction not found in the subgroup table")?;
        let threes: usize = sym_mults
            .iter()
            .enumerate()
            .filter(|(i, m)| t5.rows[*i].degree == 3 && **m == 1)
            .count();
        let trivial_in_sym = sym_mults
            .iter()
            .enumerate()
            .any(|(i, m)| *m > 0 && t5.rows[i].degree == 1);
        records.push(
            CheckRecord::new(
                "repkit.branching.other-four",
                "the second 4 stays irreducible and symplectic over the subgroup with Λ² = 1+5; its symmetric square is 3a+3b+4 (the invariant form lies in Λ², so the trivial character cannot occur in S²)",
                alt_parts == vec![(1, 1), (5, 1)]
                    && fs5[restricted_row] == -1
                    && threes == 2
                    && sym_parts.contains(&(4, 1))
                    && !trivial_in_sym,
            )
            .with_witness(json!({
                "alt": t5.format_decomposition(&alt_mults),
                "sym": t5.format_decomposition(&sym_mults),
                "restricted_indicator": fs5[restricted_row],
            })),
        );
        Ok(records)
    };
    match run() {
        Ok(mut r) => records.append(&mut r),
        Err(e) => records.push(CheckRecord::error("repkit.branching", "double-cover branching", &e)),
    }
    records
}

fn triple_cover_records(ctx: &SuiteContext) -> Vec<CheckRecord> {
    let run = || -> Result<Vec<CheckRecord>, String> {
        let t3 = ctx.registry.table("3alt6-gf4")?;
        let mut records = Vec::new();
        let mut degrees = degrees_of(&t3);
        degrees.sort_unstable();
        records.push(
            CheckRecord::new(
                "repkit.3alt6.degrees",
                "complex degrees are 1,3,3,3,3,5,5,6,6,8,8,9,9,9,10,15,15 with Σd² = 1080",
                degrees == vec![1, 3, 3, 3, 3, 5, 5, 6, 6, 8, 8, 9, 9, 9, 10, 15, 15],
            )
            .with_witness(json!({ "degrees": degrees })),
        );
        let threes: Vec<usize> =
            (0..t3.rows.len()).filter(|&i| t3.rows[i].degree == 3).collect();
        if threes.len() != 4 {
            return Err("expected four degree-3 characters".into());
        }
        // dual pairs via complex conjugation
        let x = threes[0];
        let x_conj = t3.conjugate_row(x).ok_or("no conjugate for the first 3")?;
        let y = *threes
            .iter()
            .find(|&&i| i != x && i != x_conj)
            .ok_or("no second dual pair")?;
        let y_conj = t3.conjugate_row(y).ok_or("no conjugate for the second 3")?;
        records.push(CheckRecord::new(
            "repkit.3alt6.dual-pairs",
            "the four 3-dimensional characters form two dual pairs",
            x_conj != x && y_conj != y && threes.contains(&x_conj) && threes.contains(&y_conj),
        ));
        // the two pairs differ in the sign of √5: their values are not
        // related by complex conjugation
        records.push(CheckRecord::new(
            "repkit.3alt6.sqrt5",
            "the two dual pairs are genuinely different characters (the √5 sign distinguishes them); the first pair in table order is labelled A by convention",
            y != x && y != x_conj,
        ));
        // 3A ⊗ 3A* = 1 + 8
        let conj_values: Vec<Cyclotomic> =
            t3.rows[x].values.iter().map(|v| v.conj()).collect();
        let tensor = t3.tensor(&t3.rows[x].values, &conj_values);
        let parts = constituent_degrees(&t3, &t3.decompose(&tensor)?);
        records.push(
            CheckRecord::new(
                "repkit.3alt6.tensor-self-dual",
                "3A ⊗ 3A* decomposes as 1 + 8",
                parts == vec![(1, 1), (8, 1)],
            )
            .with_witness(json!({ "constituents": parts })),
        );
        // 3A ⊗ 3B* is an irreducible 9
        let conj_b: Vec<Cyclotomic> = t3.rows[y].values.iter().map(|v| v.conj()).collect();
        let tensor = t3.tensor(&t3.rows[x].values, &conj_b);
        let parts = constituent_degrees(&t3, &t3.decompose(&tensor)?);
        records.push(
            CheckRecord::new(
                "repkit.3alt6.tensor-cross-dual",
                "3A ⊗ 3B* is an irreducible 9-dimensional character",
                parts == vec![(9, 1)],
            )
            .with_witness(json!({ "constituents": parts })),
        );
        Ok(records)
    };
    match run() {
        Ok(r) => r,
        Err(e) => vec![CheckRecord::error("repkit.3alt6", "triple-cover characters", &e)],
    }
}

pub fn repkit_suite(ctx: &Arc<SuiteContext>) -> Result<Vec<Task>, String> {
    let mut tasks: Vec<Task> = Vec::new();
    let c = ctx.clone();
    tasks.push(Box::new(move || binary_tetrahedral_table_records(&c)));
    let c = ctx.clone();
    tasks.push(Box::new(move || binary_octahedral_records(&c)));
    let c = ctx.clone();
    tasks.push(Box::new(move || icosahedral_double_cover_records(&c)));
    let c = ctx.clone();
    tasks.push(Box::new(move || double_cover_branching_records(&c)));
    let c = ctx.clone();
    tasks.push(Box::new(move || triple_cover_records(&c)));
    Ok(tasks)
}
