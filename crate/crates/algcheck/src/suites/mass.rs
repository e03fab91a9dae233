//! Verification tasks for the mass-formula evaluations.

use std::sync::Arc;

use serde_json::json;

use crate::exactmath::{format_decimal, rat};
use crate::masspred::{ratio_checks, tau_prediction, ConstantsTable};
use crate::report::CheckRecord;
use crate::runner::{SuiteContext, Task};

/// The displayed source values, digit for digit; any drift in the shipped
/// fixture is caught here.
const EXPECTED_CONSTANTS: [(&str, &str, &str); 7] = [
    ("m_e", "0.5109989461", "0.0000000031"),
    ("m_mu", "105.6583745", "0.0000024"),
    ("m_p", "938.2720813", "0.0000058"),
    ("m_n", "939.5654133", "0.0000058"),
    ("m_tau_experimental", "1776.86", "0.12"),
    ("year_days", "365.26", "0"),
    ("axial_tilt_deg", "23.44", "0"),
];

fn mass_records(ctx: &SuiteContext) -> Vec<CheckRecord> {
    let mut records = Vec::new();
    let constants = match ConstantsTable::load(&ctx.constants_path) {
        Ok(c) => c,
        Err(e) => return vec![CheckRecord::error("mass.constants", "constants load", &e)],
    };
    // fixture digits
    let mut digits_ok = true;
    for (name, value, sigma) in EXPECTED_CONSTANTS {
        match constants.get(name) {
            Ok(q) => {
                let v = crate::exactmath::parse_decimal(value).unwrap();
                let s = crate::exactmath::parse_decimal(sigma).unwrap();
                if q.value != v || q.sigma != s {
                    digits_ok = false;
                }
            }
            Err(_) => digits_ok = false,
        }
    }
    records.push(CheckRecord::new(
        "mass.constants",
        "the shipped constants match the quoted 2014 values digit for digit",
        digits_ok,
    ));

    match tau_prediction(&constants) {
        Ok(tau) => {
            records.push(
                CheckRecord::new(
                    "mass.tau.value",
                    "5·m(n) − 3·m(p) − m(μ) − m(e) prints 1776.84145 with propagated uncertainty rounding to 3 in the last digit",
                    tau.display_value == "1776.84145" && tau.sigma_last_digit == 3,
                )
                .with_witness(json!({
                    "value": tau.display_value,
                    "sigma_last_digit": tau.sigma_last_digit,
                    "sigma": format_decimal(&tau.prediction.sigma_approx(10), 7, false),
                })),
            );
            records.push(
                CheckRecord::new(
                    "mass.tau.z-score",
                    "the prediction agrees with the measured 1776.86(12) within one combined standard deviation",
                    tau.z_squared < rat(1),
                )
                .with_witness(json!({ "z": tau.z_display })),
            );
        }
        Err(e) => records.push(CheckRecord::error("mass.tau.value", "tau prediction", &e)),
    }

    match ratio_checks(&constants) {
        Ok(r) => {
            records.push(
                CheckRecord::new(
                    "mass.ratio.neutron-proton",
                    "m(n)/m(p) prints 1.001378 against 1 + d/2 = 1.001369 at six decimals",
                    r.neutron_proton.lhs_display == "1.001378"
                        && r.neutron_proton.rhs_display == "1.001369",
                )
                .with_witness(json!({
                    "lhs": r.neutron_proton.lhs_display,
                    "rhs": r.neutron_proton.rhs_display,
                    "relative_deviation": format_decimal(&r.neutron_proton.relative_deviation, 8, false),
                })),
            );
            records.push(
                CheckRecord::new(
                    "mass.ratio.electron-proton",
                    "m(e)/m(p) prints .00054462 against (d/2)·sin θ = .00054453 at eight decimals",
                    r.electron_proton.lhs_display == ".00054462"
                        && r.electron_proton.rhs_display == ".00054453",
                )
                .with_witness(json!({
                    "lhs": r.electron_proton.lhs_display,
                    "rhs": r.electron_proton.rhs_display,
                    "relative_deviation": format_decimal(&r.electron_proton.relative_deviation, 8, false),
                })),
            );
        }
        Err(e) => records.push(CheckRecord::error("mass.ratio", "ratio checks", &e)),
    }
    records
}

pub fn mass_suite(ctx: &Arc<SuiteContext>) -> Result<Vec<Task>, String> {
    let c = ctx.clone();
    Ok(vec![Box::new(move || mass_records(&c))])
}
