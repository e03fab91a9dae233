//! Verification tasks for the six-dimensional isomorphism family.

use std::sync::Arc;

use serde_json::json;

use crate::klein::{spin4_split_check, KleinForm};
use crate::report::CheckRecord;
use crate::runner::{SuiteContext, Task};

fn form_records(name: &'static str, expected: (usize, usize)) -> Vec<CheckRecord> {
    match KleinForm::build(name) {
        Ok(form) => {
            let sig = form.signature_unordered();
            vec![
                CheckRecord::new(
                    format!("klein.{name}.form-unique"),
                    format!("{name}: the space of invariant symmetric forms on the 6-space is 1-dimensional"),
                    form.form_space_dim == 1,
                ),
                CheckRecord::new(
                    format!("klein.{name}.signature"),
                    format!("{name}: the invariant form has unordered signature {expected:?}"),
                    sig == expected,
                )
                .with_witness(json!({ "signature": sig })),
            ]
        }
        Err(e) => vec![CheckRecord::error(
            format!("klein.{name}.signature"),
            "form construction",
            &e,
        )],
    }
}

fn stabilizer_records(
    name: &'static str,
    target: Option<(usize, usize)>,
) -> Vec<CheckRecord> {
    let form = match KleinForm::build(name) {
        Ok(f) => f,
        Err(e) => {
            return vec![CheckRecord::error(
                format!("klein.{name}.stabilizer"),
                "form construction",
                &e,
            )]
        }
    };
    let v = match target {
        Some(t) => form.find_vector_with_restricted_signature(t),
        None => {
            // any anisotropic vector
            let mut found = None;
            for i in 0..6 {
                let mut v = vec![crate::exactmath::rat(0); 6];
                v[i] = crate::exactmath::rat(1);
                if !num_traits::Zero::is_zero(&form.norm_of(&v)) {
                    found = Some(v);
                    break;
                }
            }
            found
        }
    };
    let Some(v) = v else {
        return vec![CheckRecord::new(
            format!("klein.{name}.stabilizer"),
            "an anisotropic vector with the target complement signature exists",
            false,
        )];
    };
    match form.vector_stabilizer(&v) {
        Ok(report) => {
            let claim = match target {
                Some(t) => format!(
                    "{name}: a vector stabilizer of dimension 10 exists, the complement has signature {t:?}, and an invariant nondegenerate antisymmetric form lives on the 4-space"
                ),
                None => format!(
                    "{name}: a vector stabilizer of dimension 10 exists with an invariant antisymmetric form on the 4-space"
                ),
            };
            let ok = report.dim == 10
                && report.antisymmetric_form_exists
                && target.map_or(true, |t| report.restricted_signature == t);
            vec![CheckRecord::new(format!("klein.{name}.stabilizer"), claim, ok).with_witness(
                json!({
                    "dim": report.dim,
                    "restricted_signature": report.restricted_signature,
                    "antisymmetric_form": report.antisymmetric_form_exists,
                }),
            )]
        }
        Err(e) => vec![CheckRecord::error(
            format!("klein.{name}.stabilizer"),
            "stabilizer",
            &e,
        )],
    }
}

pub fn klein_suite(_ctx: &Arc<SuiteContext>) -> Result<Vec<Task>, String> {
    let mut tasks: Vec<Task> = Vec::new();
    for (name, sig) in
        [("sl4r", (3, 3)), ("su4", (6, 0)), ("su22", (4, 2)), ("sl2h", (5, 1))]
    {
        tasks.push(Box::new(move || form_records(name, sig)));
    }
    for (name, target) in [
        ("sl4r", Some((3, 2))),
        ("su4", Some((5, 0))),
        ("su22", Some((4, 1))),
        ("sl2h", None),
    ] {
        tasks.push(Box::new(move || stabilizer_records(name, target)));
    }
    tasks.push(Box::new(|| {
        let (cl04, cl40) = spin4_split_check();
        vec![
            CheckRecord::new(
                "klein.spin4.negative-definite",
                "the even part of the negative-definite 4-generator set is 8-dimensional and splits into two 4-dimensional quaternion corners",
                cl04.pass(),
            )
            .with_witness(json!({
                "even_dim": cl04.even_dimension,
                "corners": cl04.corner_dims,
            })),
            CheckRecord::new(
                "klein.spin4.positive-definite",
                "the even part of the positive-definite 4-generator set splits the same way, with the pseudoscalar squaring to +1",
                cl40.pass(),
            )
            .with_witness(json!({
                "even_dim": cl40.even_dimension,
                "corners": cl40.corner_dims,
            })),
        ]
    }));
    Ok(tasks)
}
