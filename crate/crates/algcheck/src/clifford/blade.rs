//! The 64-element blade basis of the gamma-quaternion algebra and sparse
//! multivectors over it.
//!
//! A blade is a product of gamma matrices in ascending index order times one
//! quaternion unit. Sign bookkeeping: γ₀² = +1, γ₁² = γ₂² = γ₃² = -1, distinct
//! gammas anticommute, i/j/k multiply by the quaternion table and commute with
//! every gamma.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::exactmath::{rat, Rational};

/// One of the 64 basis blades: a subset of {γ₀,γ₁,γ₂,γ₃} and a unit 1/i/j/k.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Blade {
    /// Bit b set means γ_b is a factor (b in 0..=3).
    pub gammas: u8,
    /// 0 = 1, 1 = i, 2 = j, 3 = k.
    pub unit: u8,
}

/// Quaternion unit multiplication: QMUL[a][b] = (sign, unit) for unit_a·unit_b.
const QMUL: [[(i8, u8); 4]; 4] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0)],
];

impl Blade {
    pub const ONE: Blade = Blade { gammas: 0, unit: 0 };

    pub fn gamma(idx: u8) -> Blade {
        assert!(idx < 4);
        Blade { gammas: 1 << idx, unit: 0 }
    }

    pub fn unit_i() -> Blade {
        Blade { gammas: 0, unit: 1 }
    }
    pub fn unit_j() -> Blade {
        Blade { gammas: 0, unit: 2 }
    }
    pub fn unit_k() -> Blade {
        Blade { gammas: 0, unit: 3 }
    }

    /// γ₅ = i·γ₀γ₁γ₂γ₃ is itself a basis blade.
    pub fn gamma5() -> Blade {
        Blade { gammas: 0b1111, unit: 1 }
    }

    /// Linear index 0..63.
    pub fn index(&self) -> usize {
        (self.gammas as usize) * 4 + self.unit as usize
    }

    pub fn from_index(idx: usize) -> Blade {
        Blade { gammas: (idx / 4) as u8, unit: (idx % 4) as u8 }
    }

    pub fn all() -> impl Iterator<Item = Blade> {
        (0..64).map(Blade::from_index)
    }
}

/// Product of two gamma masks: returns (sign, merged mask).
/// `squares[b]` is the sign of γ_b².
fn merge_masks(a: u8, b: u8, squares: impl Fn(u8) -> i8) -> (i8, u8) {
    let mut sign = 1i8;
    let mut result = a;
    for t in 0..7u8 {
        if b & (1 << t) == 0 {
            continue;
        }
        // move γ_t left past every factor of `result` with larger index
        let higher = (result >> (t + 1)) << (t + 1);
        if higher.count_ones() % 2 == 1 {
            sign = -sign;
        }
        if result & (1 << t) != 0 {
            sign *= squares(t);
            result &= !(1 << t);
        } else {
            result |= 1 << t;
        }
    }
    (sign, result)
}

/// Product of two basis blades: (sign, blade).
pub fn blade_mul(x: Blade, y: Blade) -> (i8, Blade) {
    let (gsign, gammas) = merge_masks(x.gammas, y.gammas, |b| if b == 0 { 1 } else { -1 });
    let (usign, unit) = QMUL[x.unit as usize][y.unit as usize];
    (gsign * usign, Blade { gammas, unit })
}

impl std::fmt::Display for Blade {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.gammas == 0 && self.unit == 0 {
            return write!(f, "1");
        }
        let units = ["", "i", "j", "k"];
        write!(f, "{}", units[self.unit as usize])?;
        for b in 0..4 {
            if self.gammas & (1 << b) != 0 {
                write!(f, "g{}", b)?;
            }
        }
        Ok(())
    }
}

/// Sparse element of the 64-dimensional algebra with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiVector {
    terms: BTreeMap<Blade, Rational>,
}

impl MultiVector {
    pub fn zero() -> Self {
        MultiVector::default()
    }

    pub fn one() -> Self {
        Self::from_blade(Blade::ONE)
    }

    pub fn from_blade(b: Blade) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(b, Rational::one());
        MultiVector { terms }
    }

    pub fn from_term(b: Blade, c: Rational) -> Self {
        let mut mv = MultiVector::default();
        if !c.is_zero() {
            mv.terms.insert(b, c);
        }
        mv
    }

    pub fn gamma(idx: u8) -> Self {
        Self::from_blade(Blade::gamma(idx))
    }

    pub fn unit_i() -> Self {
        Self::from_blade(Blade::unit_i())
    }
    pub fn unit_j() -> Self {
        Self::from_blade(Blade::unit_j())
    }
    pub fn unit_k() -> Self {
        Self::from_blade(Blade::unit_k())
    }
    pub fn gamma5() -> Self {
        Self::from_blade(Blade::gamma5())
    }

    pub fn scalar(c: Rational) -> Self {
        Self::from_term(Blade::ONE, c)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, b: Blade, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(b).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in rhs.terms() {
            out.add_term(*b, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        MultiVector { terms: self.terms.iter().map(|(b, c)| (*b, -c)).collect() }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return MultiVector::zero();
        }
        MultiVector { terms: self.terms.iter().map(|(b, c)| (*b, c * s)).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = MultiVector::zero();
        for (bx, cx) in self.terms() {
            for (by, cy) in rhs.terms() {
                let (sign, blade) = blade_mul(*bx, *by);
                let c = cx * cy;
                out.add_term(blade, if sign < 0 { -c } else { c });
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

    /// Coefficient of the identity blade.
    pub fn scalar_part(&self) -> Rational {
        self.terms.get(&Blade::ONE).cloned().unwrap_or_else(Rational::zero)
    }

    /// Some(c) iff the element equals c·1.
    pub fn try_scalar(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Blade::ONE).cloned(),
            _ => None,
        }
    }

    /// Dense coordinates over the 64-blade basis.
    pub fn coords(&self) -> Vec<Rational> {
        let mut v = vec![rat(0); 64];
        for (b, c) in self.terms() {
            v[b.index()] = c.clone();
        }
        v
    }
}

impl std::fmt::Display for MultiVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (b, c) in self.terms() {
            let coef = if c.is_one() && *b != Blade::ONE {
                String::new()
            } else if (-c).is_one() && *b != Blade::ONE {
                "-".to_string()
            } else {
                format!("{}", c)
            };
            let blade = if *b == Blade::ONE { String::new() } else { format!("{}", b) };
            let sepcoef = if coef.is_empty() || blade.is_empty() { coef.clone() } else { format!("{} ", coef) };
            let term = format!("{}{}", sepcoef, blade);
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
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn gamma_squares_and_anticommutation() {
        let g: Vec<MultiVector> = (0..4).map(MultiVector::gamma).collect();
        assert_eq!(g[0].mul(&g[0]), MultiVector::scalar(rat(1)));
        for a in 1..4 {
            assert_eq!(g[a].mul(&g[a]), MultiVector::scalar(rat(-1)));
        }
        for a in 0..4 {
            for b in 0..a {
                assert!(g[a].anticommutator(&g[b]).is_zero());
            }
        }
    }

    #[test]
    fn units_commute_with_gammas() {
        for u in [MultiVector::unit_i(), MultiVector::unit_j(), MultiVector::unit_k()] {
            for a in 0..4 {
                assert!(u.commutator(&MultiVector::gamma(a)).is_zero());
            }
        }
    }

    #[test]
    fn spec_sign_examples() {
        // γ₀γ₁ · γ₁ = -γ₀  (independent reordering oracle value)
        let g01 = Blade { gammas: 0b0011, unit: 0 };
        let g1 = Blade::gamma(1);
        assert_eq!(blade_mul(g01, g1), (-1, Blade::gamma(0)));
        // i · j = k
        assert_eq!(blade_mul(Blade::unit_i(), Blade::unit_j()), (1, Blade::unit_k()));
        // (γ₀γ₁γ₂γ₃)² = -1
        let g0123 = Blade { gammas: 0b1111, unit: 0 };
        assert_eq!(blade_mul(g0123, g0123), (-1, Blade::ONE));
    }

    #[test]
    fn gamma5_identities() {
        // γ₅ = iγ₀γ₁γ₂γ₃ squares to +1 and anticommutes with each gamma
        let g5 = MultiVector::gamma5();
        assert_eq!(g5.mul(&g5), MultiVector::one());
        for a in 0..4 {
            assert!(g5.anticommutator(&MultiVector::gamma(a)).is_zero());
        }
        // and i·γ₀γ₁γ₂γ₃ really is the γ₅ blade
        let product = MultiVector::unit_i()
            .mul(&MultiVector::gamma(0))
            .mul(&MultiVector::gamma(1))
            .mul(&MultiVector::gamma(2))
            .mul(&MultiVector::gamma(3));
        assert_eq!(product, g5);
    }

    /// Naive oracle: multiply blades as explicit generator words, reordering
    /// one transposition at a time.
    fn naive_blade_mul(x: Blade, y: Blade) -> (i8, Blade) {
        // word of generator indices: 0..3 = γ, 4..6 = i,j,k handled separately
        let mut word: Vec<u8> = Vec::new();
        for b in 0..4 {
            if x.gammas & (1 << b) != 0 {
                word.push(b);
            }
        }
        for b in 0..4 {
            if y.gammas & (1 << b) != 0 {
                word.push(b);
            }
        }
        let mut sign = 1i8;
        // bubble sort with sign; cancel equal adjacent pairs
        loop {
            let mut changed = false;
            let mut idx = 0;
            while idx + 1 < word.len() {
                if word[idx] == word[idx + 1] {
                    sign *= if word[idx] == 0 { 1 } else { -1 };
                    word.drain(idx..idx + 2);
                    changed = true;
                } else if word[idx] > word[idx + 1] {
                    word.swap(idx, idx + 1);
                    sign = -sign;
                    changed = true;
                } else {
                    idx += 1;
                }
            }
            if !changed {
                break;
            }
        }
        let mut gammas = 0u8;
        for b in word {
            gammas |= 1 << b;
        }
        let (usign, unit) = QMUL[x.unit as usize][y.unit as usize];
        (sign * usign, Blade { gammas, unit })
    }

    #[test]
    fn blade_mul_matches_naive_oracle_on_all_pairs() {
        for x in Blade::all() {
            for y in Blade::all() {
                assert_eq!(blade_mul(x, y), naive_blade_mul(x, y), "{} * {}", x, y);
            }
        }
    }

    #[test]
    fn blade_mul_associative_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let x = Blade::from_index(rng.gen_range(0..64));
            let y = Blade::from_index(rng.gen_range(0..64));
            let z = Blade::from_index(rng.gen_range(0..64));
            let (s1, xy) = blade_mul(x, y);
            let (s2, xyz_l) = blade_mul(xy, z);
            let (s3, yz) = blade_mul(y, z);
            let (s4, xyz_r) = blade_mul(x, yz);
            assert_eq!((s1 * s2, xyz_l), (s3 * s4, xyz_r));
        }
    }

    #[test]
    fn basis_is_closed() {
        for x in Blade::all() {
            for y in Blade::all() {
                let (s, b) = blade_mul(x, y);
                assert!(s == 1 || s == -1);
                assert!(b.index() < 64);
            }
        }
    }
}
