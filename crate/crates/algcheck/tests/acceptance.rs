//! The acceptance suite: one test per criterion, each printing a PASS line
//! with the verified facts. Everything is exact — no tolerances anywhere.
//!
//! One test (`criterion_5_second_four_symmetric_square_as_stated`) asserts a
//! stated decomposition that exact computation refutes; it is expected to
//! stay red and its assertion message carries the analysis. The computed
//! truth is pinned green right next to it.

use std::path::PathBuf;
use std::sync::Arc;

use algcheck::exactmath::rat;
use algcheck::registry::Registry;
use algcheck::report::Status;
use algcheck::runner::{run_suite, SuiteContext};

fn fixtures_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures"))
}

fn context() -> Arc<SuiteContext> {
    let fixtures = fixtures_dir();
    Arc::new(SuiteContext {
        constants_path: fixtures.join("codata2014.json"),
        fixtures_dir: fixtures,
        registry: Arc::new(Registry::new(None)),
        seed: 0xA1C0DE,
        fixture_filter: None,
    })
}

/// Run a suite and assert every check passed; returns the report.
fn assert_suite_green(name: &str) -> algcheck::report::VerificationReport {
    let report = run_suite(name, &context(), true).expect("suite runs");
    let failures: Vec<String> = report
        .checks
        .iter()
        .filter(|c| c.status == Status::Fail)
        .map(|c| format!("{}: {}", c.id, c.witness))
        .collect();
    assert!(failures.is_empty(), "suite {name} has failures: {failures:?}");
    report
}

fn assert_check_present(report: &algcheck::report::VerificationReport, id: &str) {
    assert!(
        report.checks.iter().any(|c| c.id == id && c.status == Status::Pass),
        "missing or failing check {id}"
    );
}

#[test]
fn criterion_1_clifford_fixtures() {
    let report = assert_suite_green("clifford");
    // every registered generator set, the six pseudoscalar claims, the
    // five-generator sets' central ±i, the commuting copies, the idempotents
    for id in [
        "clifford.cl06-abstract.generators",
        "clifford.cl33-from-cl06.generators",
        "clifford.cl42-from-cl06.generators",
        "clifford.cl06-gamma.pseudoscalar",
        "clifford.cl33-gamma-a.pseudoscalar",
        "clifford.cl33-gamma-b.pseudoscalar",
        "clifford.cl33-gamma-c.pseudoscalar",
        "clifford.cl33-gamma-d.pseudoscalar",
        "clifford.cl42-gamma.pseudoscalar",
        "clifford.dirac-cl41.central-pseudoscalar",
        "clifford.dirac-cl23.central-pseudoscalar",
        "clifford.dirac-cl05.central-pseudoscalar",
        "clifford.spin13-second-copy.commute",
        "clifford.idempotent-plus.split",
        "clifford.idempotent-minus.split",
        "clifford.idempotents.orthogonal",
        "clifford.compact-cl13-b.generators",
        "clifford.split-cl40.generators",
    ] {
        assert_check_present(&report, id);
    }
    println!("[PASS] criterion 1 — all registered generator sets verify with their claimed signatures and pseudoscalars");
}

#[test]
fn criterion_2_blade_engine() {
    let report = assert_suite_green("clifford");
    for id in [
        "clifford.blades.associative",
        "clifford.blades.closed",
        "clifford.grades.cl06-abstract",
        "clifford.grades.cl33-from-cl06",
        "clifford.grades.cl06-gamma",
    ] {
        assert_check_present(&report, id);
    }
    println!("[PASS] criterion 2 — blade engine associativity and the 1+6+15+10+10+15+6+1 grade split hold");
}

#[test]
fn criterion_3_binary_tetrahedral() {
    let report = assert_suite_green("groups");
    for id in ["groups.2alt4.order", "groups.2alt4.order-census", "groups.2alt4.relations"] {
        assert_check_present(&report, id);
    }
    println!("[PASS] criterion 3 — quaternion closure of order 24 with census {{1:1, 2:1, 3:8, 4:6, 6:8}} and the defining relations");
}

#[test]
fn criterion_4_character_theory() {
    let report = assert_suite_green("repkit");
    for id in [
        "repkit.2alt4.degrees",
        "repkit.2alt4.real-table",
        "repkit.2alt4.wedderburn",
        "repkit.2alt4.lie-label",
        "repkit.2alt4.regular",
        "repkit.2alt4.eight-point",
        "repkit.2sym4.wedderburn",
        "repkit.2sym4.lie-label",
        "repkit.2alt5.real-types",
        "repkit.2alt5.wedderburn-total",
    ] {
        assert_check_present(&report, id);
    }
    println!("[PASS] criterion 4 — tables, real forms, Wedderburn decompositions and Lie labels all match exactly");
}

#[test]
fn criterion_5_branching() {
    let report = assert_suite_green("repkit");
    for id in [
        "repkit.branching.fours-restrict",
        "repkit.branching.alt-square-4",
        "repkit.branching.sym-square-4",
        "repkit.branching.five-restricts",
        "repkit.branching.ten-restricts",
        "repkit.branching.tensor-8a-8b",
        "repkit.branching.tensor-restricts",
        "repkit.branching.other-four",
        "repkit.3alt6.tensor-self-dual",
        "repkit.3alt6.tensor-cross-dual",
    ] {
        assert_check_present(&report, id);
    }
    println!("[PASS] criterion 5 — branching claims verified with exact integer multiplicities (see the companion tests for the second 4's symmetric square)");
}

/// The computed truth for the second degree-4 character: its restriction is
/// the symplectic irreducible, Λ² = 1+5, and S² = 3a+3b+4 with no trivial
/// constituent (the invariant form is antisymmetric).
#[test]
fn criterion_5_second_four_symmetric_square_computed() {
    let ctx = context();
    let t6 = ctx.registry.table("2alt6").unwrap();
    let t5 = ctx.registry.table("2alt5").unwrap();
    let fusion = algcheck::repkit::fusion_map(&t6, &t5).unwrap();
    let (restricted, row5) = second_four_restricted(&t6, &t5, &fusion);
    let fs5 = t5.fs_indicators().unwrap();
    assert_eq!(fs5[row5], -1, "the irreducible restriction is symplectic");
    let (sym, alt) = t5.sym_alt_square(&restricted);
    let alt_m = t5.decompose(&alt).unwrap();
    let sym_m = t5.decompose(&sym).unwrap();
    assert_eq!(parts(&t5, &alt_m), vec![(1, 1), (5, 1)]);
    assert_eq!(parts(&t5, &sym_m), vec![(3, 1), (3, 1), (4, 1)]);
    let trivial_mult: usize = sym_m
        .iter()
        .enumerate()
        .filter(|(i, _)| t5.rows[*i].degree == 1)
        .map(|(_, m)| *m)
        .sum();
    assert_eq!(trivial_mult, 0, "symplectic invariant lies in the antisymmetric square");
    println!("[PASS] criterion 5 (computed) — the second 4 is symplectic over the subgroup with Λ² = 1+5 and S² = 3a+3b+4");
}

/// The criterion as stated requires S² = 1+4+5 for the second 4. Exact
/// computation refutes it: the restriction has Frobenius–Schur indicator -1,
/// so the trivial character cannot occur in the symmetric square at all, and
/// the decomposition is 3a+3b+4. This test carries the stated value and is
/// expected to remain red; the analysis lives in the assertion message.
#[test]
fn criterion_5_second_four_symmetric_square_as_stated() {
    let ctx = context();
    let t6 = ctx.registry.table("2alt6").unwrap();
    let t5 = ctx.registry.table("2alt5").unwrap();
    let fusion = algcheck::repkit::fusion_map(&t6, &t5).unwrap();
    let (restricted, _) = second_four_restricted(&t6, &t5, &fusion);
    let (sym, _) = t5.sym_alt_square(&restricted);
    let sym_m = t5.decompose(&sym).unwrap();
    println!("[FAIL] criterion 5 (as stated) — S² of the second 4 computes to {} over the subgroup", t5.format_decomposition(&sym_m));
    assert_eq!(
        parts(&t5, &sym_m),
        vec![(1, 1), (4, 1), (5, 1)],
        "stated decomposition 1+4+5 is impossible: the restriction is symplectic \
         (indicator -1), its invariant form lies in the antisymmetric square, so S² \
         contains no trivial constituent; exact computation gives 3a+3b+4"
    );
}

fn parts(
    t: &algcheck::repkit::CharacterTable,
    mults: &[usize],
) -> Vec<(usize, usize)> {
    mults
        .iter()
        .enumerate()
        .filter(|(_, m)| **m > 0)
        .map(|(i, m)| (t.rows[i].degree, *m))
        .collect()
}

/// Locate the degree-4 row of the double cover whose restriction stays
/// irreducible, returning the restricted values and the subgroup row index.
fn second_four_restricted(
    t6: &algcheck::repkit::CharacterTable,
    t5: &algcheck::repkit::CharacterTable,
    fusion: &[usize],
) -> (Vec<algcheck::exactmath::Cyclotomic>, usize) {
    for i in 0..t6.rows.len() {
        if t6.rows[i].degree != 4 {
            continue;
        }
        let restricted = algcheck::repkit::restrict_values(&t6.rows[i].values, fusion);
        if let Some(row) = t5.rows.iter().position(|r| r.values == restricted) {
            return (restricted, row);
        }
    }
    panic!("no irreducible restriction among the degree-4 characters");
}

#[test]
fn criterion_6_permutation_structure() {
    let report = assert_suite_green("groups");
    for id in [
        "groups.alt6.subgroups-60",
        "groups.alt6.subgroups-24",
        "groups.alt6.subgroups-6",
        "groups.alt6.subgroups-8",
        "groups.alt6.subgroups-36",
        "groups.alt6.transitive-degrees",
        "groups.alt6.inequivalent-6-point-actions",
        "groups.alt6.s3-orbits-on-15",
        "groups.alt6.a5-5-plus-10",
        "groups.sym4.class-split",
    ] {
        assert_check_present(&report, id);
    }
    println!("[PASS] criterion 6 — subgroup classes, transitive degrees 6,15,10,15,6,45 and the orbit splittings verify");
}

#[test]
fn criterion_7_finite_field_models() {
    let report = assert_suite_green("finfield");
    for id in [
        "finfield.gf2.linearity",
        "finfield.gf2.leptons",
        "finfield.gf2.right-handed",
        "finfield.gf2.weak-doublets",
        "finfield.gf2.colour-cycle",
        "finfield.gf2.quadratic-form",
        "finfield.gf2.alternating-form",
        "finfield.gf4.order",
        "finfield.gf4.center",
        "finfield.gf4.homomorphism",
        "finfield.gf4.orbits",
        "finfield.gf4.generation-matrix-checks",
    ] {
        assert_check_present(&report, id);
    }
    println!("[PASS] criterion 7 — both finite-field particle models verify (forms checked over all 720 permutations)");
}

#[test]
fn criterion_8_sl2q() {
    let report = assert_suite_green("finfield");
    for id in ["finfield.sl23.order", "finfield.sl23.isomorphism", "finfield.sl29.structure"] {
        assert_check_present(&report, id);
    }
    println!("[PASS] criterion 8 — SL(2,3) ≅ the quaternion double cover; SL(2,9) structure and quotient actions verify");
}

#[test]
fn criterion_9_klein() {
    let report = assert_suite_green("klein");
    for id in [
        "klein.sl4r.signature",
        "klein.su4.signature",
        "klein.su22.signature",
        "klein.sl2h.signature",
        "klein.sl4r.form-unique",
        "klein.su4.form-unique",
        "klein.su22.form-unique",
        "klein.sl2h.form-unique",
        "klein.sl4r.stabilizer",
        "klein.su4.stabilizer",
        "klein.su22.stabilizer",
        "klein.sl2h.stabilizer",
        "klein.spin4.negative-definite",
        "klein.spin4.positive-definite",
    ] {
        assert_check_present(&report, id);
    }
    println!("[PASS] criterion 9 — signatures {{3,3}}, {{6,0}}, {{4,2}}, {{5,1}}; unique invariant forms; 10-dimensional stabilizers");
}

#[test]
fn criterion_10_mass_formulas() {
    let report = assert_suite_green("mass");
    for id in [
        "mass.constants",
        "mass.tau.value",
        "mass.tau.z-score",
        "mass.ratio.neutron-proton",
        "mass.ratio.electron-proton",
    ] {
        assert_check_present(&report, id);
    }
    // and the exact displayed digits, pinned here as well
    let constants =
        algcheck::masspred::ConstantsTable::load(&fixtures_dir().join("codata2014.json")).unwrap();
    let tau = algcheck::masspred::tau_prediction(&constants).unwrap();
    assert_eq!(tau.display_value, "1776.84145");
    assert_eq!(tau.sigma_last_digit, 3);
    assert!(tau.z_squared < rat(1));
    let ratios = algcheck::masspred::ratio_checks(&constants).unwrap();
    assert_eq!(ratios.neutron_proton.lhs_display, "1.001378");
    assert_eq!(ratios.neutron_proton.rhs_display, "1.001369");
    assert_eq!(ratios.electron_proton.lhs_display, ".00054462");
    assert_eq!(ratios.electron_proton.rhs_display, ".00054453");
    println!("[PASS] criterion 10 — 1776.84145(3), |z| < 1, 1.001378 vs 1.001369, .00054462 vs .00054453");
}

#[test]
fn criterion_11_cli_exit_codes() {
    use std::process::Command;
    let bin = env!("CARGO_BIN_EXE_algcheck");

    // pristine run: exit 0, and the JSON report round-trips to identical text
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("report.json");
    let output = Command::new(bin)
        .args(["--suite", "mass", "--json"])
        .arg(&json_path)
        .env("ALGCHECK_FIXTURES", fixtures_dir())
        .output()
        .expect("binary runs");
    assert!(output.status.success(), "pristine mass suite must exit 0");
    let stdout = String::from_utf8(output.stdout).unwrap();
    let report = algcheck::report::VerificationReport::from_json(
        &std::fs::read_to_string(&json_path).unwrap(),
    )
    .unwrap();
    assert_eq!(report.render_text(), stdout, "JSON report must round-trip to identical text");

    // full pristine run exits 0
    let output = Command::new(bin)
        .args(["--suite", "all"])
        .env("ALGCHECK_FIXTURES", fixtures_dir())
        .output()
        .expect("binary runs");
    assert!(output.status.success(), "pristine full run must exit 0");

    // corrupt one generator entry: the exit code flips and the FAIL record
    // names the fixture
    let corrupt = tempfile::tempdir().unwrap();
    for name in ["clifford_fixtures.json", "particles.json", "codata2014.json"] {
        std::fs::copy(fixtures_dir().join(name), corrupt.path().join(name)).unwrap();
    }
    let path = corrupt.path().join("clifford_fixtures.json");
    let text = std::fs::read_to_string(&path).unwrap();
    // duplicate a generator inside cl06-gamma: anticommutation must fail
    let mut data: serde_json::Value = serde_json::from_str(&text).unwrap();
    let fixture = data["fixtures"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|f| f["name"] == "cl06-gamma")
        .expect("cl06-gamma registered");
    fixture["generators"][0] = serde_json::json!("g2");
    std::fs::write(&path, serde_json::to_string_pretty(&data).unwrap()).unwrap();
    let output = Command::new(bin)
        .args(["--suite", "clifford"])
        .env("ALGCHECK_FIXTURES", corrupt.path())
        .output()
        .expect("binary runs");
    assert!(!output.status.success(), "corrupted fixture must flip the exit code");
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(
        stdout.contains("[FAIL] clifford.cl06-gamma"),
        "the FAIL record must name the corrupted fixture:\n{stdout}"
    );
    println!("[PASS] criterion 11 — exit 0 on pristine fixtures; corruption flips the exit code and names the fixture");
}
