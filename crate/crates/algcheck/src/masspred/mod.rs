//! Mass-formula checks: the tau-mass combination with first-order
//! uncertainty propagation, and the two ratio comparisons against day/year
//! and axial-tilt quantities. All arithmetic is exact rational; decimal
//! rounding happens only at the display layer.

use std::collections::HashMap;
use std::path::Path;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exactmath::{format_decimal, parse_decimal, rat, sqrt_floor_decimal, Rational};

/// A physical value with standard uncertainty.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasuredQuantity {
    pub value: Rational,
    pub sigma: Rational,
    pub unit: String,
}

#[derive(Serialize, Deserialize)]
struct RawQuantity {
    value: String,
    sigma: String,
    unit: String,
}

/// The named constants the formulas need.
pub struct ConstantsTable {
    entries: HashMap<String, MeasuredQuantity>,
}

pub const REQUIRED_KEYS: [&str; 7] =
    ["m_e", "m_mu", "m_p", "m_n", "m_tau_experimental", "year_days", "axial_tilt_deg"];

impl ConstantsTable {
    pub fn load(path: &Path) -> Result<ConstantsTable, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<ConstantsTable, String> {
        let raw: HashMap<String, RawQuantity> =
            serde_json::from_str(text).map_err(|e| format!("bad constants file: {e}"))?;
        let mut entries = HashMap::new();
        for (name, q) in raw {
            let value = parse_decimal(&q.value)?;
            let sigma = parse_decimal(&q.sigma)?;
            if sigma.is_negative() {
                return Err(format!("negative sigma for {name}"));
            }
            entries.insert(name, MeasuredQuantity { value, sigma, unit: q.unit });
        }
        for key in REQUIRED_KEYS {
            if !entries.contains_key(key) {
                return Err(format!("constants file misses {key}"));
            }
        }
        Ok(ConstantsTable { entries })
    }

    pub fn get(&self, name: &str) -> Result<&MeasuredQuantity, String> {
        self.entries.get(name).ok_or_else(|| format!("missing constant {name}"))
    }

    /// The day/year ratio d = 1/year_days, exact.
    pub fn day_year_ratio(&self) -> Result<Rational, String> {
        let year = self.get("year_days")?;
        if year.value.is_zero() {
            return Err("year length is zero".into());
        }
        Ok(rat(1) / year.value.clone())
    }
}

/// Exact linear combination with first-order quadrature: value = Σ cᵢvᵢ,
/// variance = Σ (cᵢσᵢ)².
pub struct Propagated {
    pub value: Rational,
    pub variance: Rational,
    pub unit: String,
}

impl Propagated {
    /// Decimal approximation of sigma = sqrt(variance), `digits` digits.
    pub fn sigma_approx(&self, digits: u32) -> Rational {
        sqrt_floor_decimal(&self.variance, digits)
    }
}

pub fn propagate_linear(terms: &[(Rational, &MeasuredQuantity)]) -> Result<Propagated, String> {
    let unit = terms.first().map(|(_, q)| q.unit.clone()).unwrap_or_default();
    if terms.iter().any(|(_, q)| q.unit != unit) {
        return Err("unit mismatch in linear combination".into());
    }
    let mut value = rat(0);
    let mut variance = rat(0);
    for (c, q) in terms {
        value += c * &q.value;
        let cs = c * &q.sigma;
        variance += &cs * &cs;
    }
    Ok(Propagated { value, variance, unit })
}

/// The tau-mass prediction 5·m(n) - 3·m(p) - m(μ) - m(e), with the
/// comparison against the measured value.
pub struct TauPrediction {
    pub prediction: Propagated,
    /// Paper-style rendering of the predicted value (5 decimals).
    pub display_value: String,
    /// Propagated sigma rounded at the last displayed digit (units of 1e-5).
    pub sigma_last_digit: i64,
    pub target: MeasuredQuantity,
    /// Exact z² = (pred - target)² / (σ_pred² + σ_target²).
    pub z_squared: Rational,
    pub z_display: String,
}

pub fn tau_prediction(c: &ConstantsTable) -> Result<TauPrediction, String> {
    let m_n = c.get("m_n")?;
    let m_p = c.get("m_p")?;
    let m_mu = c.get("m_mu")?;
    let m_e = c.get("m_e")?;
    let prediction = propagate_linear(&[
        (rat(5), m_n),
        (rat(-3), m_p),
        (rat(-1), m_mu),
        (rat(-1), m_e),
    ])?;
    let display_value = format_decimal(&prediction.value, 5, false);
    // round sigma to the 1e-5 place
    let sigma = prediction.sigma_approx(12);
    let scaled = &sigma * rat(100_000);
    let sigma_last_digit = {
        let rounded = format_decimal(&scaled, 0, false);
        rounded.parse::<i64>().map_err(|e| e.to_string())?
    };
    let target = c.get("m_tau_experimental")?.clone();
    let delta = &prediction.value - &target.value;
    let total_var = &prediction.variance + &target.sigma * &target.sigma;
    if total_var.is_zero() {
        return Err("zero combined variance".into());
    }
    let z_squared = &delta * &delta / &total_var;
    let z = sqrt_floor_decimal(&z_squared, 6);
    let z_display = format_decimal(&z, 4, false);
    Ok(TauPrediction {
        prediction,
        display_value,
        sigma_last_digit,
        target,
        z_squared,
        z_display,
    })
}

/// One side-by-side ratio comparison at the paper's display precision.
pub struct RatioCheck {
    pub lhs: Rational,
    pub rhs: Rational,
    pub lhs_display: String,
    pub rhs_display: String,
    /// |lhs - rhs| / rhs, exact.
    pub relative_deviation: Rational,
}

fn ratio_check(lhs: Rational, rhs: Rational, decimals: usize, strip: bool) -> RatioCheck {
    // against a zero right side, fall back to the absolute deviation
    let relative_deviation = if rhs.is_zero() {
        lhs.abs()
    } else {
        ((&lhs - &rhs) / &rhs).abs()
    };
    RatioCheck {
        lhs_display: format_decimal(&lhs, decimals, strip),
        rhs_display: format_decimal(&rhs, decimals, strip),
        lhs,
        rhs,
        relative_deviation,
    }
}

/// π to 35 decimal digits, far beyond the 12 significant digits the sine
/// evaluation promises.
fn pi() -> Rational {
    parse_decimal("3.14159265358979323846264338327950288").expect("pi literal")
}

/// sin(x) by the Taylor series with exact rational terms, truncated once the
/// term magnitude drops below 10^-24 (|x| < 1 in all uses here).
pub fn sin_rational(x: &Rational) -> Rational {
    let bound = Rational::new(1.into(), num_bigint::BigInt::from(10u8).pow(24));
    let x2 = x * x;
    let mut term = x.clone();
    let mut acc = rat(0);
    let mut k: i64 = 1;
    loop {
        acc += &term;
        // next odd term
        term = -term * &x2 / rat((k + 1) * (k + 2));
        k += 2;
        if term.abs() < bound {
            break;
        }
        if k > 60 {
            break;
        }
    }
    acc
}

pub struct RatioChecks {
    /// m(n)/m(p) vs 1 + d/2, at 6 decimals.
    pub neutron_proton: RatioCheck,
    /// m(e)/m(p) vs (d/2)·sin θ, at 8 decimals with the leading zero
    /// stripped, matching the source display.
    pub electron_proton: RatioCheck,
}

pub fn ratio_checks(c: &ConstantsTable) -> Result<RatioChecks, String> {
    let d = c.day_year_ratio()?;
    let half_d = &d / rat(2);
    let m_n = &c.get("m_n")?.value;
    let m_p = &c.get("m_p")?.value;
    let m_e = &c.get("m_e")?.value;
    let theta_deg = &c.get("axial_tilt_deg")?.value;
    let theta = theta_deg * pi() / rat(180);
    let sin_theta = sin_rational(&theta);
    let neutron_proton = ratio_check(m_n / m_p, rat(1) + half_d.clone(), 6, false);
    let electron_proton = ratio_check(m_e / m_p, half_d * sin_theta, 8, true);
    Ok(RatioChecks { neutron_proton, electron_proton })
}
