//! Tiny expression parser for the fixture data files.
//!
//! Gamma expressions are sums of space-separated terms:
//! `"i g0"`, `"j g0 g5"`, `"1/2 + 1/2 g1 g2 g3"`, `"g1 + g2 g3"`.
//! Factors: `1`, `i`, `j`, `k`, `g0..g3`, `g5`; an optional leading rational
//! coefficient per term. Abstract words are letter strings like `"ABCD"`.

use std::sync::Arc;

use crate::exactmath::{parse_decimal, rat, Rational};

use super::abstract_algebra::{AbElement, AbstractClifford};
use super::blade::MultiVector;

fn factor(token: &str) -> Option<MultiVector> {
    Some(match token {
        "1" => MultiVector::one(),
        "i" => MultiVector::unit_i(),
        "j" => MultiVector::unit_j(),
        "k" => MultiVector::unit_k(),
        "g0" => MultiVector::gamma(0),
        "g1" => MultiVector::gamma(1),
        "g2" => MultiVector::gamma(2),
        "g3" => MultiVector::gamma(3),
        "g5" => MultiVector::gamma5(),
        _ => return None,
    })
}

fn is_rational_token(token: &str) -> bool {
    token.chars().next().is_some_and(|c| c.is_ascii_digit())
        || (token.len() > 1 && token.starts_with('-') && token[1..].chars().all(|c| c.is_ascii_digit() || c == '/'))
}

/// Parse one gamma-algebra expression.
pub fn parse_gamma_expr(s: &str) -> Result<MultiVector, String> {
    let tokens: Vec<&str> = s.split_whitespace().collect();
    if tokens.is_empty() {
        return Err("empty expression".into());
    }
    let mut result = MultiVector::zero();
    let mut sign = rat(1);
    let mut term: Option<MultiVector> = None;
    let flush = |term: &mut Option<MultiVector>, sign: &mut Rational, result: &mut MultiVector| -> Result<(), String> {
        match term.take() {
            Some(t) => {
                *result = result.add(&t.scale(sign));
                Ok(())
            }
            None => Err(format!("empty term in {s:?}")),
        }
    };
    for tok in tokens {
        match tok {
            "+" => {
                flush(&mut term, &mut sign, &mut result)?;
                sign = rat(1);
            }
            "-" => {
                flush(&mut term, &mut sign, &mut result)?;
                sign = rat(-1);
            }
            _ => {
                let piece = if is_rational_token(tok) {
                    // "1" is also a valid factor; treating it as a coefficient
                    // is equivalent
                    MultiVector::scalar(parse_decimal(tok).map_err(|e| format!("{e} in {s:?}"))?)
                } else {
                    factor(tok).ok_or_else(|| format!("unknown factor {tok:?} in {s:?}"))?
                };
                term = Some(match term.take() {
                    Some(t) => t.mul(&piece),
                    None => piece,
                });
            }
        }
    }
    flush(&mut term, &mut sign, &mut result)?;
    Ok(result)
}

/// Parse an abstract monomial like `"ABCD"` (letters A..F, ascending product).
pub fn parse_abstract_word(
    algebra: &Arc<AbstractClifford>,
    word: &str,
) -> Result<AbElement, String> {
    let mut el = AbElement::one(algebra.clone());
    for ch in word.chars() {
        let idx = match ch {
            'A'..='F' => (ch as u8 - b'A') as usize,
            _ => return Err(format!("unknown abstract generator {ch:?}")),
        };
        if idx >= algebra.n() {
            return Err(format!("generator {ch:?} outside the declared algebra"));
        }
        el = el.mul(&AbElement::generator(algebra.clone(), idx));
    }
    Ok(el)
}
