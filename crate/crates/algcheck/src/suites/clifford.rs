//! Verification tasks for the Clifford fixture registry and the blade engine.

use std::sync::Arc;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::clifford::{
    blade_mul, grade_decomposition, idempotent_split, lie_closure, parse_abstract_word,
    parse_gamma_expr, pseudoscalar, pseudoscalar_invariance, sign_match, verify_generators,
    AbstractClifford, AlgebraElement, Blade, FixtureEntry, FixtureFile, GeneratorFixture,
    MultiVector, ParsedGenerators,
};
use crate::exactmath::ratio;
use crate::report::CheckRecord;
use crate::runner::{SuiteContext, Task};

fn generator_records<E: AlgebraElement + 'static>(
    fix: &GeneratorFixture,
    gens: Vec<E>,
    claimed_ps: Option<E>,
) -> Vec<CheckRecord> {
    let name = fix.name.clone();
    let mut records = Vec::new();
    let report = verify_generators(&gens, fix.signature);
    let claim = format!(
        "generator set {name}: pairwise anticommuting, squares ±1, signature {:?}, generated dimension {}",
        fix.signature, report.expected_dimension
    );
    records.push(
        CheckRecord::new(format!("clifford.{name}.generators"), claim, report.pass())
            .with_witness(json!({
                "signature": report.signature,
                "dimension": report.dimension,
                "bad_pair": report.bad_pair,
            })),
    );
    let ps = pseudoscalar(&gens);
    if let Some(claimed) = claimed_ps {
        let matched = sign_match(&ps, &claimed);
        let sign_ok = match (matched, fix.pseudoscalar_sign) {
            (Some(s), Some(expected)) => s == expected,
            (Some(_), None) => true,
            (None, _) => false,
        };
        records.push(
            CheckRecord::new(
                format!("clifford.{name}.pseudoscalar"),
                format!(
                    "pseudoscalar of {name} equals {} up to sign",
                    fix.pseudoscalar.as_deref().unwrap_or("?")
                ),
                matched.is_some() && sign_ok,
            )
            .with_witness(json!({ "sign": matched })),
        );
    }
    records.push(CheckRecord::new(
        format!("clifford.{name}.invariance"),
        format!("pseudoscalar of {name} commutes with every bivector of the set"),
        pseudoscalar_invariance(&gens, &ps),
    ));
    if fix.dirac {
        // five-generator presentation of the 4x4 complex algebra: the product
        // of the generators is a central scalar in the 32-dimensional closure
        let (_, basis) = crate::clifford::associative_closure(&gens);
        let central = basis.iter().all(|x| ps.commutes_with(x));
        records.push(
            CheckRecord::new(
                format!("clifford.{name}.central-pseudoscalar"),
                format!("{name}: the five-generator product is central in the generated 32-dimensional algebra"),
                central && report.dimension == 32,
            )
            .with_witness(json!({ "dimension": report.dimension })),
        );
    }
    records
}

pub fn clifford_suite(ctx: &Arc<SuiteContext>) -> Result<Vec<Task>, String> {
    let file = FixtureFile::load(&ctx.clifford_fixtures_path())?;
    let mut tasks: Vec<Task> = Vec::new();
    let filter = ctx.fixture_filter.clone();
    let keep = |name: &str| filter.as_deref().is_none_or(|f| f == name);

    for entry in &file.fixtures {
        if !keep(entry.name()) {
            continue;
        }
        match entry.clone() {
            FixtureEntry::Generators(fix) => {
                tasks.push(Box::new(move || match fix.parse() {
                    Ok(ParsedGenerators::Gamma { generators, pseudoscalar }) => {
                        generator_records(&fix, generators, pseudoscalar)
                    }
                    Ok(ParsedGenerators::Abstract { generators, pseudoscalar }) => {
                        generator_records(&fix, generators, pseudoscalar)
                    }
                    Err(e) => vec![CheckRecord::error(
                        format!("clifford.{}.parse", fix.name),
                        "fixture parses",
                        &e,
                    )],
                }));
            }
            FixtureEntry::CommutingPair(fix) => {
                tasks.push(Box::new(move || {
                    let id = format!("clifford.{}.commute", fix.name);
                    let claim = format!(
                        "{}: the two generated subalgebras commute elementwise",
                        fix.name
                    );
                    let parse = |xs: &[String]| -> Result<Vec<MultiVector>, String> {
                        xs.iter().map(|s| parse_gamma_expr(s)).collect()
                    };
                    match (parse(&fix.gens_a), parse(&fix.gens_b)) {
                        (Ok(a), Ok(b)) => vec![CheckRecord::new(
                            id,
                            claim,
                            crate::clifford::commuting_subalgebras(&a, &b),
                        )],
                        (Err(e), _) | (_, Err(e)) => vec![CheckRecord::error(id, &claim, &e)],
                    }
                }));
            }
            FixtureEntry::LiePair(fix) => {
                tasks.push(Box::new(move || {
                    let id = format!("clifford.{}.lie-closure", fix.name);
                    let claim = format!(
                        "{}: commutator closure has dimension {}, and {} after adjoining the central element",
                        fix.name, fix.expected_dims.0, fix.expected_dims.1
                    );
                    let run = || -> Result<bool, String> {
                        let mut elements: Vec<MultiVector> = fix
                            .su2
                            .iter()
                            .map(|s| parse_gamma_expr(s))
                            .collect::<Result<_, _>>()?;
                        let (dim_small, _) = lie_closure(&elements);
                        elements.push(parse_gamma_expr(&fix.u1)?);
                        let (dim_big, _) = lie_closure(&elements);
                        Ok((dim_small, dim_big) == fix.expected_dims)
                    };
                    match run() {
                        Ok(ok) => vec![CheckRecord::new(id, claim, ok)],
                        Err(e) => vec![CheckRecord::error(id, &claim, &e)],
                    }
                }));
            }
            FixtureEntry::Idempotent(fix) => {
                tasks.push(Box::new(move || {
                    let id = format!("clifford.{}.split", fix.name);
                    let claim = format!(
                        "{}: idempotent projects a {}-dimensional corner whose generator triple satisfies quaternion relations",
                        fix.name, fix.expected_corner_dim
                    );
                    let run = || -> Result<(bool, serde_json::Value), String> {
                        let e = parse_gamma_expr(&fix.idempotent)?;
                        let algebra: Vec<MultiVector> = fix
                            .algebra_generators
                            .iter()
                            .map(|s| parse_gamma_expr(s))
                            .collect::<Result<_, _>>()?;
                        let triple: Vec<MultiVector> = fix
                            .corner_triple
                            .iter()
                            .map(|s| parse_gamma_expr(s))
                            .collect::<Result<_, _>>()?;
                        let report = idempotent_split(&e, &algebra, Some(&triple));
                        let ok = report.is_idempotent
                            && report.corner_dim == fix.expected_corner_dim
                            && report.relations == Some(true);
                        Ok((
                            ok,
                            json!({
                                "idempotent": report.is_idempotent,
                                "corner_dim": report.corner_dim,
                                "relations": report.relations,
                            }),
                        ))
                    };
                    match run() {
                        Ok((ok, witness)) => {
                            vec![CheckRecord::new(id, claim, ok).with_witness(witness)]
                        }
                        Err(e) => vec![CheckRecord::error(id, &claim, &e)],
                    }
                }));
            }
        }
    }

    if filter.is_none() {
        // the two idempotents are orthogonal and sum to 1
        tasks.push(Box::new(|| {
            let psi = MultiVector::gamma(1).mul(&MultiVector::gamma(2)).mul(&MultiVector::gamma(3));
            let half = ratio(1, 2);
            let e_plus = MultiVector::one().add(&psi).scale(&half);
            let e_minus = MultiVector::one().sub(&psi).scale(&half);
            vec![CheckRecord::new(
                "clifford.idempotents.orthogonal",
                "the idempotents (1 ± γ₁γ₂γ₃)/2 are orthogonal and sum to 1",
                e_plus.mul(&e_minus).is_zero() && e_plus.add(&e_minus) == MultiVector::one(),
            )]
        }));

        // blade engine properties
        let seed = ctx.seed;
        tasks.push(Box::new(move || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut associative = true;
            for _ in 0..1000 {
                let x = Blade::from_index(rng.gen_range(0..64));
                let y = Blade::from_index(rng.gen_range(0..64));
                let z = Blade::from_index(rng.gen_range(0..64));
                let (s1, xy) = blade_mul(x, y);
                let (s2, l) = blade_mul(xy, z);
                let (s3, yz) = blade_mul(y, z);
                let (s4, r) = blade_mul(x, yz);
                if (s1 * s2, l) != (s3 * s4, r) {
                    associative = false;
                    break;
                }
            }
            let closed = Blade::all().all(|x| {
                Blade::all().all(|y| {
                    let (s, b) = blade_mul(x, y);
                    (s == 1 || s == -1) && b.index() < 64
                })
            });
            vec![
                CheckRecord::new(
                    "clifford.blades.associative",
                    "blade multiplication is associative on 1000 random triples",
                    associative,
                ),
                CheckRecord::new(
                    "clifford.blades.closed",
                    "every product of two basis blades is ±1 times a basis blade",
                    closed,
                ),
            ]
        }));

        // grade decomposition of six-generator fixtures
        tasks.push(Box::new(|| {
            let expected = vec![1, 6, 15, 10, 10, 15, 6, 1];
            let alg = AbstractClifford::new(vec![-1; 6]);
            let abstr: Vec<_> = (0..6)
                .map(|i| parse_abstract_word(&alg, &((b'A' + i) as char).to_string()).unwrap())
                .collect();
            let from06 = {
                let words = ["A", "B", "C", "ABCD", "ABCE", "ABCF"];
                words
                    .iter()
                    .map(|w| parse_abstract_word(&alg, w).unwrap())
                    .collect::<Vec<_>>()
            };
            let gamma06: Vec<MultiVector> = ["g1", "g2", "g3", "i g0", "j g0", "k g0"]
                .iter()
                .map(|s| parse_gamma_expr(s).unwrap())
                .collect();
            let mut records = Vec::new();
            for (label, dims) in [
                ("cl06-abstract", grade_decomposition(&abstr)),
                ("cl33-from-cl06", grade_decomposition(&from06)),
                ("cl06-gamma", grade_decomposition(&gamma06)),
            ] {
                let ok = dims.as_ref().map(|d| *d == expected).unwrap_or(false);
                records.push(
                    CheckRecord::new(
                        format!("clifford.grades.{label}"),
                        format!("{label}: grade dimensions are 1+6+15+10+10+15+6+1"),
                        ok,
                    )
                    .with_witness(json!({ "dims": dims.ok() })),
                );
            }
            records
        }));
    }

    Ok(tasks)
}
