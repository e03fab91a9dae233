//! Exact cyclotomic numbers in canonical reduced form.
//!
//! An element of the `e`-th cyclotomic field is stored as a polynomial in
//! `ζ_e` reduced modulo the `e`-th cyclotomic polynomial `Φ_e`, so the
//! coefficient vector on the basis `ζ^0 .. ζ^{φ(e)-1}` is canonical and
//! equality is coefficient comparison (after lifting to a common order).

use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::{rat, Rational};

/// Euler's totient.
pub fn phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Monic cyclotomic polynomial Φ_n, ascending integer coefficients
/// (as rationals, for direct use in remainder computations).
fn cyclotomic_poly(n: u64) -> Vec<Rational> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<Rational>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // Φ_n = (x^n - 1) / Π_{d|n, d<n} Φ_d
    let mut num = vec![rat(0); n as usize + 1];
    num[0] = rat(-1);
    num[n as usize] = rat(1);
    let mut result = num;
    for d in 1..n {
        if n % d == 0 {
            let div = cyclotomic_poly(d);
            result = poly_div_exact(&result, &div);
        }
    }
    cache.lock().unwrap().insert(n, result.clone());
    result
}

/// Exact division of polynomials with ascending coefficients; panics if the
/// division is not exact (cyclotomic factorizations always are).
fn poly_div_exact(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
    let mut rem: Vec<Rational> = num.to_vec();
    let dd = den.len() - 1;
    assert!(!den[dd].is_zero());
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![rat(0); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let factor = &rem[k + dd] / &den[dd];
        quot[k] = factor.clone();
        for i in 0..=dd {
            let val = &rem[k + i] - &(&den[i] * &factor);
            rem[k + i] = val;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

/// Reduce an ascending coefficient vector modulo Φ_order, returning exactly
/// φ(order) coefficients.
fn reduce_mod_phi(order: u64, mut coeffs: Vec<Rational>) -> Vec<Rational> {
    let modulus = cyclotomic_poly(order);
    let deg = modulus.len() - 1; // = φ(order)
    while coeffs.len() > deg {
        let top = coeffs.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let k = coeffs.len() - deg;
        for i in 0..deg {
            let val = &coeffs[k + i] - &(&modulus[i] * &top);
            coeffs[k + i] = val;
        }
    }
    coeffs.resize(deg, rat(0));
    coeffs
}

/// Cyclotomic number: element of Q(ζ_order) in canonical reduced form.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u64,
    /// Length φ(order); coefficient of ζ^t at index t.
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Zero in the rationals (order 1).
    pub fn zero() -> Self {
        Cyclotomic { order: 1, coeffs: vec![rat(0)] }
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic { order: 1, coeffs: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    /// ζ_order^exp.
    pub fn root_of_unity(order: u64, exp: i64) -> Self {
        assert!(order > 0, "cyclotomic order must be positive");
        let e = exp.rem_euclid(order as i64) as usize;
        let mut coeffs = vec![rat(0); e + 1];
        coeffs[e] = rat(1);
        Cyclotomic { order, coeffs: reduce_mod_phi(order, coeffs) }
    }

    /// Canonicalize an association of exponents to coefficients.
    /// Errors on order 0.
    pub fn reduce(order: u64, terms: &[(i64, Rational)]) -> Result<Self, String> {
        if order == 0 {
            return Err("cyclotomic order must be positive".into());
        }
        let mut coeffs = vec![rat(0); order as usize];
        for (exp, c) in terms {
            let e = exp.rem_euclid(order as i64) as usize;
            let val = &coeffs[e] + c;
            coeffs[e] = val;
        }
        Ok(Cyclotomic { order, coeffs: reduce_mod_phi(order, coeffs) })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Canonical coefficients on the basis ζ^0 .. ζ^{φ(order)-1}.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Rewrite in the field of order `target` (must be a multiple of the
    /// current order).
    pub fn lift(&self, target: u64) -> Self {
        assert!(target % self.order == 0);
        if target == self.order {
            return self.clone();
        }
        let step = (target / self.order) as usize;
        let mut coeffs = vec![rat(0); (self.coeffs.len() - 1) * step + 1];
        for (t, c) in self.coeffs.iter().enumerate() {
            coeffs[t * step] = c.clone();
        }
        Cyclotomic { order: target, coeffs: reduce_mod_phi(target, coeffs) }
    }

    fn common(&self, rhs: &Self) -> (Self, Self) {
        let l = self.order.lcm(&rhs.order);
        (self.lift(l), rhs.lift(l))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (mut a, b) = self.common(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x = &*x + y;
        }
        a
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = self.common(rhs);
        let mut prod = vec![rat(0); a.coeffs.len() + b.coeffs.len() - 1];
        for (s, cs) in a.coeffs.iter().enumerate() {
            if cs.is_zero() {
                continue;
            }
            for (t, ct) in b.coeffs.iter().enumerate() {
                if ct.is_zero() {
                    continue;
                }
                let val = &prod[s + t] + &(cs * ct);
                prod[s + t] = val;
            }
        }
        Cyclotomic { order: a.order, coeffs: reduce_mod_phi(a.order, prod) }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Complex conjugation: maps exponent t to order - t.
    pub fn conj(&self) -> Self {
        let order = self.order;
        let mut coeffs = vec![rat(0); order as usize];
        for (t, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = ((order - t as u64 % order) % order) as usize;
            let val = &coeffs[e] + c;
            coeffs[e] = val;
        }
        Cyclotomic { order, coeffs: reduce_mod_phi(order, coeffs) }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in Q.
    pub fn try_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}
impl Eq for Cyclotomic {}

impl std::fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (t, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = if t == 0 {
                format!("{}", c)
            } else {
                let base = if t == 1 {
                    format!("z{}", self.order)
                } else {
                    format!("z{}^{}", self.order, t)
                };
                if c.is_one() {
                    base
                } else if (-c).is_one() {
                    format!("-{}", base)
                } else {
                    format!("{}*{}", c, base)
                }
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
    use crate::exactmath::ratio;
    use proptest::prelude::*;

    #[test]
    fn cube_roots_sum_to_minus_one() {
        let z = Cyclotomic::root_of_unity(3, 1);
        let z2 = Cyclotomic::root_of_unity(3, 2);
        assert_eq!(z.add(&z2), Cyclotomic::from_int(-1));
    }

    #[test]
    fn fourth_root_squares_to_minus_one() {
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(i.mul(&i), Cyclotomic::from_int(-1));
    }

    #[test]
    fn golden_ratio_combination() {
        // x = ζ5 + ζ5^4 satisfies x² + x - 1 = 0 (x = (-1+√5)/2), which is
        // the independent minimal-polynomial oracle for the reduced form.
        let x = Cyclotomic::root_of_unity(5, 1).add(&Cyclotomic::root_of_unity(5, 4));
        let check = x.mul(&x).add(&x).sub(&Cyclotomic::from_int(1));
        assert!(check.is_zero());
        // and the canonical form is -1 - ζ² - ζ³
        assert_eq!(x.coeffs(), &[rat(-1), rat(0), rat(-1), rat(-1)]);
    }

    #[test]
    fn reduce_rejects_order_zero() {
        assert!(Cyclotomic::reduce(0, &[(0, rat(1))]).is_err());
    }

    #[test]
    fn mixed_order_equality() {
        // ζ6 = -ζ3² : same number expressed at different orders
        let a = Cyclotomic::root_of_unity(6, 1);
        let b = Cyclotomic::root_of_unity(3, 2).neg();
        assert_eq!(a, b);
    }

    #[test]
    fn sqrt2_from_eighth_roots() {
        let s = Cyclotomic::root_of_unity(8, 1).add(&Cyclotomic::root_of_unity(8, -1));
        assert_eq!(s.mul(&s), Cyclotomic::from_int(2));
        assert!(s.is_real());
    }

    fn arb_cyc() -> impl Strategy<Value = Cyclotomic> {
        (prop::sample::select(vec![1u64, 3, 4, 5, 8, 12]), prop::collection::vec((-10i64..11, 0i64..12), 1..4))
            .prop_map(|(order, terms)| {
                let terms: Vec<(i64, Rational)> =
                    terms.into_iter().map(|(c, e)| (e, ratio(c, 1))).collect();
                Cyclotomic::reduce(order, &terms).unwrap()
            })
    }

    proptest! {
        #[test]
        fn conjugation_is_involutive_automorphism(a in arb_cyc(), b in arb_cyc()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
            prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
        }

        #[test]
        fn norm_is_real(a in arb_cyc()) {
            let n = a.mul(&a.conj());
            prop_assert!(n.is_real());
        }

        #[test]
        fn reduction_idempotent(a in arb_cyc()) {
            // re-reducing the canonical coefficients changes nothing
            let terms: Vec<(i64, Rational)> = a
                .coeffs()
                .iter()
                .enumerate()
                .map(|(t, c)| (t as i64, c.clone()))
                .collect();
            let again = Cyclotomic::reduce(a.order(), &terms).unwrap();
            prop_assert_eq!(again, a);
        }
    }
}
