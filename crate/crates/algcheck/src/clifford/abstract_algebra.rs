//! Abstract Clifford algebra on up to six named generators with declared
//! squares, e.g. six elements A..F squaring to -1 and anticommuting pairwise.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::exactmath::{rat, Rational};

/// Descriptor shared by all elements of one abstract algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbstractClifford {
    /// Sign of each generator's square, length = number of generators (≤ 6).
    pub squares: Vec<i8>,
}

impl AbstractClifford {
    pub fn new(squares: Vec<i8>) -> Arc<Self> {
        assert!(squares.len() <= 6, "at most six generators supported");
        assert!(squares.iter().all(|s| *s == 1 || *s == -1));
        Arc::new(AbstractClifford { squares })
    }

    pub fn n(&self) -> usize {
        self.squares.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.n()
    }
}

/// Element: rational combination of basis monomials, each a subset of the
/// generators in ascending order (bitmask).
#[derive(Clone, Debug)]
pub struct AbElement {
    pub algebra: Arc<AbstractClifford>,
    terms: BTreeMap<u8, Rational>,
}

impl PartialEq for AbElement {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.terms == other.terms
    }
}
impl Eq for AbElement {}

impl AbElement {
    pub fn zero(algebra: Arc<AbstractClifford>) -> Self {
        AbElement { algebra, terms: BTreeMap::new() }
    }

    pub fn one(algebra: Arc<AbstractClifford>) -> Self {
        Self::from_mask(algebra, 0)
    }

    pub fn generator(algebra: Arc<AbstractClifford>, idx: usize) -> Self {
        assert!(idx < algebra.n());
        Self::from_mask(algebra, 1 << idx)
    }

    /// Basis monomial: ascending product of the generators in `mask`.
    pub fn from_mask(algebra: Arc<AbstractClifford>, mask: u8) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(mask, Rational::one());
        AbElement { algebra, terms }
    }

    pub fn scalar(algebra: Arc<AbstractClifford>, c: Rational) -> Self {
        let mut el = Self::zero(algebra);
        el.add_term(0, c);
        el
    }

    fn add_term(&mut self, mask: u8, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mask).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        AbElement {
            algebra: self.algebra.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.algebra.clone());
        }
        AbElement {
            algebra: self.algebra.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    /// Product of two basis masks under the generator relations.
    fn mask_mul(&self, a: u8, b: u8) -> (i8, u8) {
        let mut sign = 1i8;
        let mut result = a;
        for t in 0..self.algebra.n() as u8 {
            if b & (1 << t) == 0 {
                continue;
            }
            let higher = (result >> (t + 1)) << (t + 1);
            if higher.count_ones() % 2 == 1 {
                sign = -sign;
            }
            if result & (1 << t) != 0 {
                sign *= self.algebra.squares[t as usize];
                result &= !(1 << t);
            } else {
                result |= 1 << t;
            }
        }
        (sign, result)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert!(self.algebra == rhs.algebra);
        let mut out = Self::zero(self.algebra.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let (sign, mask) = self.mask_mul(*ma, *mb);
                let c = ca * cb;
                out.add_term(mask, if sign < 0 { -c } else { c });
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn anticommutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).add(&rhs.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scalar_part(&self) -> Rational {
        self.terms.get(&0).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn try_scalar(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn coords(&self) -> Vec<Rational> {
        let mut v = vec![rat(0); self.algebra.dim()];
        for (m, c) in &self.terms {
            v[*m as usize] = c.clone();
        }
        v
    }

    pub fn masks(&self) -> impl Iterator<Item = (&u8, &Rational)> {
        self.terms.iter()
    }
}

impl std::fmt::Display for AbElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let letters = ["A", "B", "C", "D", "E", "F"];
        let mut first = true;
        for (m, c) in &self.terms {
            let mut word = String::new();
            for b in 0..6 {
                if m & (1 << b) != 0 {
                    word.push_str(letters[b]);
                }
            }
            if word.is_empty() {
                word.push('1');
            }
            let term = if c.is_one() {
                word
            } else if (-c).is_one() {
                format!("-{}", word)
            } else {
                format!("{} {}", c, word)
            };
            if first {
                write!(f, "{}", term)?;
                first = false;
            } else if let Some(rest) = term.strip_prefix('-') {
                write!(f, " - {}", rest)?;
            } else {
                write!(f, " + {}", term)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_anticommuting_generators() {
        let alg = AbstractClifford::new(vec![-1; 6]);
        let gens: Vec<AbElement> =
            (0..6).map(|i| AbElement::generator(alg.clone(), i)).collect();
        for a in 0..6 {
            assert_eq!(gens[a].mul(&gens[a]), AbElement::scalar(alg.clone(), rat(-1)));
            for b in 0..a {
                assert!(gens[a].anticommutator(&gens[b]).is_zero());
            }
        }
    }

    #[test]
    fn abcd_squares_plus_one() {
        // (ABCD)² = +1 when A..F all square to -1
        let alg = AbstractClifford::new(vec![-1; 6]);
        let abcd = AbElement::from_mask(alg.clone(), 0b1111);
        assert_eq!(abcd.mul(&abcd), AbElement::one(alg));
    }
}
