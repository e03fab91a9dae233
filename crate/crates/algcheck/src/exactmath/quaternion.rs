//! Rational quaternions on the basis 1, i, j, k.

use num_traits::{One, Zero};

use super::rational::{rat, Rational};

/// Quaternion with exact rational coefficients.
///
/// Satisfies `i² = j² = k² = -1` and `ij = k = -ji`; the multiplication table
/// is spot-verified in the unit tests below.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Quaternion {
    /// Coefficients on 1, i, j, k in that order.
    pub c: [Rational; 4],
}

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion { c: [w, x, y, z] }
    }
    pub fn zero() -> Self {
        Quaternion { c: [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()] }
    }
    pub fn one() -> Self {
        let mut q = Self::zero();
        q.c[0] = Rational::one();
        q
    }
    /// The basis unit with index 0..=3 (1, i, j, k).
    pub fn unit(idx: usize) -> Self {
        let mut q = Self::zero();
        q.c[idx] = Rational::one();
        q
    }
    pub fn i() -> Self {
        Self::unit(1)
    }
    pub fn j() -> Self {
        Self::unit(2)
    }
    pub fn k() -> Self {
        Self::unit(3)
    }
    /// `(-1 + i + j + k)/2`, an element of order 3 in the unit quaternions.
    pub fn half(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion {
            c: [
                Rational::new(w.into(), 2.into()),
                Rational::new(x.into(), 2.into()),
                Rational::new(y.into(), 2.into()),
                Rational::new(z.into(), 2.into()),
            ],
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Quaternion {
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
                &self.c[3] + &rhs.c[3],
            ],
        }
    }

    pub fn neg(&self) -> Self {
        Quaternion { c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]] }
    }

    /// Hamilton product.
    pub fn mul(&self, rhs: &Self) -> Self {
        let [a, b, c, d] = &self.c;
        let [e, f, g, h] = &rhs.c;
        Quaternion {
            c: [
                a * e - b * f - c * g - d * h,
                a * f + b * e + c * h - d * g,
                a * g - b * h + c * e + d * f,
                a * h + b * g - c * f + d * e,
            ],
        }
    }

    pub fn conj(&self) -> Self {
        Quaternion { c: [self.c[0].clone(), -&self.c[1], -&self.c[2], -&self.c[3]] }
    }

    /// Squared norm; multiplicative.
    pub fn norm(&self) -> Rational {
        self.c.iter().map(|x| x * x).sum()
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let conj = self.conj();
        Some(Quaternion { c: conj.c.map(|x| x / &n) })
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Quaternion { c: [&self.c[0] * s, &self.c[1] * s, &self.c[2] * s, &self.c[3] * s] }
    }

    pub fn real_part(&self) -> &Rational {
        &self.c[0]
    }
}

impl std::fmt::Display for Quaternion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names = ["", "i", "j", "k"];
        let mut first = true;
        for (idx, coef) in self.c.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            if first {
                write!(f, "{}{}", coef, names[idx])?;
                first = false;
            } else if coef < &rat(0) {
                write!(f, " - {}{}", -coef, names[idx])?;
            } else {
                write!(f, " + {}{}", coef, names[idx])?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn defining_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        let minus_one = Quaternion::one().neg();
        assert_eq!(i.mul(&i), minus_one);
        assert_eq!(j.mul(&j), minus_one);
        assert_eq!(k.mul(&k), minus_one);
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&i), k.neg());
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
    }

    #[test]
    fn order_three_element() {
        // b = (-1+i+j+k)/2 cubes to 1
        let b = Quaternion::half(-1, 1, 1, 1);
        let b3 = b.mul(&b).mul(&b);
        assert_eq!(b3, Quaternion::one());
        assert_ne!(b.mul(&b), Quaternion::one());
    }

    #[test]
    fn i_squares_to_minus_one() {
        let a = Quaternion::i();
        assert_eq!(a.mul(&a), Quaternion::one().neg());
    }

    fn arb_quat() -> impl Strategy<Value = Quaternion> {
        let coeff = (-6i64..7, 1i64..4).prop_map(|(n, d)| Rational::new(n.into(), d.into()));
        [coeff.clone(), coeff.clone(), coeff.clone(), coeff]
            .prop_map(|c| Quaternion { c })
    }

    proptest! {
        #[test]
        fn mul_associative(a in arb_quat(), b in arb_quat(), c in arb_quat()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn norm_multiplicative(a in arb_quat(), b in arb_quat()) {
            prop_assert_eq!(a.mul(&b).norm(), a.norm() * b.norm());
        }
    }
}
