//! Verification tasks for the permutation-group structure claims.

use std::sync::Arc;

use serde_json::json;

use crate::exactmath::Quaternion;
use crate::permgroup::{
    class_split_under, close_indices, enumerate_group, subgroup_classes, two_generated_subgroups,
    GroupAction, Subgroup,
};
use crate::report::CheckRecord;
use crate::runner::{SuiteContext, Task};

/// Order census of the quaternion binary tetrahedral group plus its defining
/// relations.
fn binary_tetrahedral_records() -> Vec<CheckRecord> {
    let mut records = Vec::new();
    let a = Quaternion::i();
    let b = Quaternion::half(-1, 1, 1, 1);
    let elements =
        enumerate_group(&[a.clone(), b.clone()], |x, y| x.mul(y), Quaternion::one(), 100);
    match elements {
        Ok(els) => {
            records.push(CheckRecord::new(
                "groups.2alt4.order",
                "the quaternions i and (-1+i+j+k)/2 generate a group of order 24",
                els.len() == 24,
            ));
            let mut census: std::collections::BTreeMap<usize, usize> = Default::default();
            for q in &els {
                let mut acc = q.clone();
                let mut ord = 1;
                while acc != Quaternion::one() {
                    acc = acc.mul(q);
                    ord += 1;
                }
                *census.entry(ord).or_default() += 1;
            }
            let expected: std::collections::BTreeMap<usize, usize> =
                [(1, 1), (2, 1), (3, 8), (4, 6), (6, 8)].into_iter().collect();
            records.push(
                CheckRecord::new(
                    "groups.2alt4.order-census",
                    "element-order census is {1:1, 2:1, 3:8, 4:6, 6:8}",
                    census == expected,
                )
                .with_witness(json!({ "census": census })),
            );
            // a⁴ = b³ = (ab)³ = 1 and a²b = ba²
            let one = Quaternion::one();
            let a2 = a.mul(&a);
            let ab = a.mul(&b);
            let relations = a2.mul(&a2) == one
                && b.mul(&b).mul(&b) == one
                && ab.mul(&ab).mul(&ab) == one
                && a2.mul(&b) == b.mul(&a2);
            records.push(CheckRecord::new(
                "groups.2alt4.relations",
                "the realization satisfies a⁴ = b³ = (ab)³ = 1 and a²b = ba²",
                relations,
            ));
        }
        Err(e) => records.push(CheckRecord::error("groups.2alt4.order", "closure", &e)),
    }
    records
}

/// Subgroup classes of the degree-6 alternating group and the transitive
/// degrees of their coset actions.
fn alt6_records(ctx: &SuiteContext) -> Vec<CheckRecord> {
    let mut records = Vec::new();
    let alt6 = match ctx.registry.group("alt6") {
        Ok(g) => g,
        Err(e) => return vec![CheckRecord::error("groups.alt6.build", "registry", &e)],
    };
    let catalog = two_generated_subgroups(&alt6, 60);
    let class_counts = [(60usize, 2usize), (24, 2), (6, 2), (8, 1), (36, 1)];
    let mut classes_of: std::collections::HashMap<usize, Vec<Vec<Subgroup>>> = Default::default();
    for (order, expected) in class_counts {
        let classes = subgroup_classes(&alt6, &catalog, order);
        records.push(
            CheckRecord::new(
                format!("groups.alt6.subgroups-{order}"),
                format!("exactly {expected} conjugacy classes of order-{order} subgroups (within the two-generator search)"),
                classes.len() == expected,
            )
            .with_witness(json!({ "found": classes.len() })),
        );
        classes_of.insert(order, classes);
    }

    // coset action degrees 6, 6, 15, 15, 10, 45
    let mut degrees = Vec::new();
    for order in [60usize, 24, 36, 8] {
        if let Some(classes) = classes_of.get(&order) {
            for class in classes {
                let rep = &class[0];
                match GroupAction::on_cosets(alt6.clone(), &rep.elements) {
                    Ok(act) => {
                        degrees.push(act.degree);
                        if !act.is_transitive() || !act.homomorphism_spot_check(32, ctx.seed) {
                            records.push(CheckRecord::new(
                                format!("groups.alt6.coset-degree-{}", act.degree),
                                "coset action is a transitive homomorphism",
                                false,
                            ));
                        }
                    }
                    Err(e) => records.push(CheckRecord::error(
                        "groups.alt6.coset",
                        "coset action builds",
                        &e,
                    )),
                }
            }
        }
    }
    degrees.sort_unstable();
    records.push(
        CheckRecord::new(
            "groups.alt6.transitive-degrees",
            "the discovered subgroup classes give transitive actions of degrees 6, 6, 10, 15, 15 and 45",
            degrees == vec![6, 6, 10, 15, 15, 45],
        )
        .with_witness(json!({ "degrees": degrees })),
    );

    // the two degree-6 actions are inequivalent: different fixed-point
    // vectors across conjugacy classes
    if let Some(a5_classes) = classes_of.get(&60) {
        if a5_classes.len() == 2 {
            let conj = alt6.conjugacy_classes();
            let mut profiles = Vec::new();
            for class in a5_classes {
                if let Ok(act) = GroupAction::on_cosets(alt6.clone(), &class[0].elements) {
                    let fixed = act.fixed_point_counts();
                    let profile: Vec<usize> =
                        conj.reps.iter().map(|&rep| fixed[rep]).collect();
                    profiles.push(profile);
                }
            }
            records.push(
                CheckRecord::new(
                    "groups.alt6.inequivalent-6-point-actions",
                    "the two order-60 subgroup classes give inequivalent degree-6 actions",
                    profiles.len() == 2 && profiles[0] != profiles[1],
                )
                .with_witness(json!({ "fixed_point_profiles": profiles })),
            );
        }
    }

    // orbit signatures on the 15 two-subsets
    let pairs = GroupAction::on_pairs(alt6.clone());
    if let Some(s3_classes) = classes_of.get(&6) {
        let signatures: Vec<Vec<usize>> = s3_classes
            .iter()
            .map(|class| pairs.orbit_sizes(&class[0].elements))
            .collect();
        records.push(
            CheckRecord::new(
                "groups.alt6.s3-orbits-on-15",
                "some order-6 subgroup class acts on the 15 pairs with orbits 1+2+3+3+6",
                signatures.iter().any(|s| *s == vec![1, 2, 3, 3, 6]),
            )
            .with_witness(json!({ "signatures": signatures })),
        );
    }
    if let Some(a5_classes) = classes_of.get(&60) {
        // 5+10 for some order-60 class, refining under one of its order-6
        // subgroups as (2+3) + (1+3+6)
        let mut witness = Vec::new();
        let mut found = false;
        for class in a5_classes {
            let h = &class[0];
            let sizes = pairs.orbit_sizes(&h.elements);
            witness.push(sizes.clone());
            if sizes != vec![5, 10] {
                continue;
            }
            // search order-6 subgroups generated by pairs inside H
            'search: for &x in &h.elements {
                for &y in &h.elements {
                    let Some(sub) = close_indices(&alt6, &[x, y], 6) else {
                        continue;
                    };
                    if sub.len() != 6 {
                        continue;
                    }
                    // orbits of the subgroup, split by which H-orbit the
                    // points lie in
                    let orbit5: Vec<usize> = {
                        // points of the 5-orbit of H
                        let mut seen = vec![false; 15];
                        let mut five = Vec::new();
                        for start in 0..15 {
                            if seen[start] {
                                continue;
                            }
                            let mut members = vec![start];
                            seen[start] = true;
                            let mut head = 0;
                            while head < members.len() {
                                let p = members[head];
                                head += 1;
                                for &g in &h.elements {
                                    let q = pairs.imgs[g].apply(p);
                                    if !seen[q] {
                                        seen[q] = true;
                                        members.push(q);
                                    }
                                }
                            }
                            if members.len() == 5 {
                                five = members;
                            }
                        }
                        five
                    };
                    let in5 = |p: usize| orbit5.contains(&p);
                    // orbit sizes of the subgroup within each part
                    let mut seen = vec![false; 15];
                    let mut part5 = Vec::new();
                    let mut part10 = Vec::new();
                    for start in 0..15 {
                        if seen[start] {
                            continue;
                        }
                        let mut members = vec![start];
                        seen[start] = true;
                        let mut head = 0;
                        while head < members.len() {
                            let p = members[head];
                            head += 1;
                            for &g in &sub {
                                let q = pairs.imgs[g].apply(p);
                                if !seen[q] {
                                    seen[q] = true;
                                    members.push(q);
                                }
                            }
                        }
                        if in5(start) {
                            part5.push(members.len());
                        } else {
                            part10.push(members.len());
                        }
                    }
                    part5.sort_unstable();
                    part10.sort_unstable();
                    if part5 == vec![2, 3] && part10 == vec![1, 3, 6] {
                        found = true;
                        break 'search;
                    }
                }
            }
        }
        records.push(
            CheckRecord::new(
                "groups.alt6.a5-5-plus-10",
                "an order-60 class splits the 15 pairs as 5+10, refined by one of its order-6 subgroups as (2+3)+(1+3+6)",
                found,
            )
            .with_witness(json!({ "a5_orbit_signatures": witness })),
        );
    }

    // orbit–stabilizer on the 45-point action
    if let Some(sylow) = classes_of.get(&8).and_then(|c| c.first()) {
        if let Ok(act) = GroupAction::on_cosets(alt6.clone(), &sylow[0].elements) {
            let ok = act.degree == 45
                && (0..act.degree).step_by(11).all(|p| {
                    act.orbit_of(p).len() * act.stabilizer(p).len() == alt6.order()
                });
            records.push(CheckRecord::new(
                "groups.alt6.orbit-stabilizer-45",
                "the degree-45 action satisfies |orbit|·|stabilizer| = |G| at sampled points",
                ok,
            ));
        }
    }
    records
}

fn sym4_split_record(ctx: &SuiteContext) -> Vec<CheckRecord> {
    let sym4 = match ctx.registry.group("sym4") {
        Ok(g) => g,
        Err(e) => return vec![CheckRecord::error("groups.sym4.build", "registry", &e)],
    };
    let conj = sym4.conjugacy_classes();
    let stab = sym4.point_stabilizer(3);
    let split = class_split_under(&sym4, &conj.class_of, conj.num_classes(), &stab);
    // classes ordered (1,1), (2,3), (2,6), (3,8), (4,6): fixing one letter
    // splits them as 1, 3, (3+3), (2+6), 6
    let expected =
        vec![vec![1], vec![3], vec![3, 3], vec![2, 6], vec![6]];
    vec![CheckRecord::new(
        "groups.sym4.class-split",
        "fixing one of four letters splits the classes as 1, 3, (2+6), (3+3), 6",
        split == expected,
    )
    .with_witness(json!({ "split": split }))]
}

pub fn groups_suite(ctx: &Arc<SuiteContext>) -> Result<Vec<Task>, String> {
    let mut tasks: Vec<Task> = Vec::new();
    tasks.push(Box::new(binary_tetrahedral_records));
    let c = ctx.clone();
    tasks.push(Box::new(move || alt6_records(&c)));
    let c = ctx.clone();
    tasks.push(Box::new(move || sym4_split_record(&c)));
    // class equation for every registry permutation group
    let c = ctx.clone();
    tasks.push(Box::new(move || {
        let mut records = Vec::new();
        for name in ["alt5", "alt6", "sym4", "sym6", "2alt4-quaternion", "sl23"] {
            match c.registry.group(name) {
                Ok(g) => {
                    let conj = g.conjugacy_classes();
                    let sum: usize = conj.sizes.iter().sum();
                    let divides = conj.sizes.iter().all(|s| g.order() % s == 0);
                    records.push(CheckRecord::new(
                        format!("groups.{name}.class-equation"),
                        format!("{name}: class sizes sum to |G| and divide |G|"),
                        sum == g.order() && divides,
                    ));
                }
                Err(e) => {
                    records.push(CheckRecord::error(
                        format!("groups.{name}.class-equation"),
                        "registry",
                        &e,
                    ));
                }
            }
        }
        records
    }));
    Ok(tasks)
}
