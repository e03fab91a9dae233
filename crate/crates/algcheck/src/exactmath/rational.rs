//! Rational scalars, Gaussian rationals, and exact decimal formatting.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Scalar;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (guaranteed by `num-rational`).
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Parse a plain decimal string like `"938.2720813"`, `".5109989461"`,
/// `"-1/3"` (a slash form is accepted for exact non-decimal constants).
pub fn parse_decimal(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
        let d: BigInt = d.trim().parse().map_err(|e| format!("bad denominator: {e}"))?;
        if d.is_zero() {
            return Err("zero denominator".into());
        }
        return Ok(Rational::new(n, d));
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(format!("empty decimal: {s:?}"));
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return Err(format!("not a decimal: {s:?}"));
    }
    let digits = format!("{int_part}{frac_part}");
    let num: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|e| format!("{e}"))?
    };
    let den = BigInt::from(10u32).pow(frac_part.len() as u32);
    Ok(Rational::new(BigInt::from(sign) * num, den))
}

/// Round a rational to `decimals` places, half away from zero, and format it.
///
/// With `strip_leading_zero`, a value in (-1, 1) is printed in the style
/// `.00054462` rather than `0.00054462`.
pub fn format_decimal(r: &Rational, decimals: usize, strip_leading_zero: bool) -> String {
    let scale = BigInt::from(10u32).pow(decimals as u32);
    let scaled = r * Rational::from_integer(scale.clone());
    // round half away from zero
    let (num, den) = (scaled.numer().clone(), scaled.denom().clone());
    let two = BigInt::from(2);
    let rounded: BigInt = if num.is_negative() {
        -((-&num * &two + &den) / (&den * &two))
    } else {
        (&num * &two + &den) / (&den * &two)
    };
    let negative = rounded.is_negative();
    let abs = rounded.magnitude().clone();
    let (int, frac) = abs.div_rem(&scale.magnitude().clone());
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    let int_str = int.to_string();
    if !(strip_leading_zero && int_str == "0" && decimals > 0) {
        out.push_str(&int_str);
    }
    if decimals > 0 {
        out.push('.');
        let frac_str = frac.to_string();
        for _ in frac_str.len()..decimals {
            out.push('0');
        }
        out.push_str(&frac_str);
    }
    out
}

/// Floor of sqrt(r) computed to `digits` decimal digits, as an exact rational
/// `isqrt(r * 10^(2*digits)) / 10^digits`. Requires `r >= 0`.
pub fn sqrt_floor_decimal(r: &Rational, digits: u32) -> Rational {
    assert!(!r.is_negative(), "sqrt of negative rational");
    let scale = BigUint::from(10u32).pow(digits);
    let scale2 = &scale * &scale;
    let scaled = r * Rational::from_integer(BigInt::from(scale2));
    // floor the scaled value, then integer sqrt
    let floored: BigInt = scaled.floor().to_integer();
    let root = floored.magnitude().sqrt();
    Rational::new(BigInt::from(root), BigInt::from(scale))
}

/// Gaussian rational `re + im*i`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct ComplexRational {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        ComplexRational { re, im }
    }
    pub fn from_real(re: Rational) -> Self {
        ComplexRational { re, im: Rational::zero() }
    }
    pub fn zero() -> Self {
        Self::from_real(Rational::zero())
    }
    pub fn one() -> Self {
        Self::from_real(Rational::one())
    }
    pub fn i() -> Self {
        ComplexRational { re: Rational::zero(), im: Rational::one() }
    }
    pub fn conj(&self) -> Self {
        ComplexRational { re: self.re.clone(), im: -self.im.clone() }
    }
    /// Squared modulus `re² + im²`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }
}

impl std::fmt::Display for ComplexRational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if Zero::is_zero(&self.im) {
            write!(f, "{}", self.re)
        } else if Zero::is_zero(&self.re) {
            write!(f, "{}i", self.im)
        } else {
            write!(f, "{}{}{}i", self.re, if self.im.is_negative() { "" } else { "+" }, self.im)
        }
    }
}

impl Scalar for ComplexRational {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        ComplexRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
    fn sub(&self, rhs: &Self) -> Self {
        ComplexRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
    fn mul(&self, rhs: &Self) -> Self {
        ComplexRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
    fn neg(&self) -> Self {
        ComplexRational { re: -self.re.clone(), im: -self.im.clone() }
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if Zero::is_zero(&n) {
            return None;
        }
        Some(ComplexRational { re: &self.re / &n, im: -&self.im / &n })
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trips() {
        assert_eq!(parse_decimal("938.2720813").unwrap(), ratio(9_382_720_813, 10_000_000));
        assert_eq!(parse_decimal(".5").unwrap(), ratio(1, 2));
        assert_eq!(parse_decimal("-0.25").unwrap(), ratio(-1, 4));
        assert_eq!(parse_decimal("1/3").unwrap(), ratio(1, 3));
        assert!(parse_decimal("abc").is_err());
    }

    #[test]
    fn decimal_formatting_rounds_half_away() {
        assert_eq!(format_decimal(&ratio(5, 1000), 2, false), "0.01");
        assert_eq!(format_decimal(&ratio(-5, 1000), 2, false), "-0.01");
        assert_eq!(format_decimal(&ratio(10013784, 10000000), 6, false), "1.001378");
        assert_eq!(format_decimal(&ratio(54462, 100000000), 8, true), ".00054462");
        assert_eq!(format_decimal(&rat(3), 0, false), "3");
    }

    #[test]
    fn sqrt_floor_matches_squares() {
        let r = sqrt_floor_decimal(&rat(2), 12);
        let two = rat(2);
        assert!(&r * &r <= two);
        let step = Rational::new(BigInt::from(1), BigInt::from(10u32).pow(12u32));
        let upper = &r + &step;
        assert!(&upper * &upper > rat(2));
        assert_eq!(sqrt_floor_decimal(&rat(49), 5), rat(7));
    }

    #[test]
    fn complex_field_ops() {
        let i = ComplexRational::i();
        assert_eq!(i.mul(&i), ComplexRational::from_real(rat(-1)));
        let z = ComplexRational::new(rat(3), rat(4));
        assert_eq!(z.norm(), rat(25));
        let inv = z.inv().unwrap();
        assert_eq!(z.mul(&inv), ComplexRational::one());
        assert_eq!(z.mul(&z.conj()), ComplexRational::from_real(rat(25)));
    }
}
