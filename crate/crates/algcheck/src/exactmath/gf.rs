//! Small finite fields: GF(2), GF(4), GF(9) and GF(p).
//!
//! GF(4) is {0, 1, v, w} with 1+1 = 0, vw = 1 and 1+v+w = 0.
//! GF(9) is the integers mod 3 with an adjoined square root of -1.

use super::Scalar;

/// Identifies which field an element lives in.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum FieldId {
    F2,
    F4,
    F9,
    Fp(u64),
}

impl FieldId {
    pub fn size(&self) -> u64 {
        match self {
            FieldId::F2 => 2,
            FieldId::F4 => 4,
            FieldId::F9 => 9,
            FieldId::Fp(p) => *p,
        }
    }
}

/// Element of one of the supported finite fields.
///
/// GF(4) values: 0, 1, 2 (= v), 3 (= w = v+1), stored as bit pairs over GF(2)
/// so addition is XOR. GF(9) values: a + b·s with s² = -1, packed as a + 3b.
/// Mixed-field arithmetic is a programming error and panics.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct GFElement {
    pub field: FieldId,
    pub value: u64,
}

impl GFElement {
    pub fn new(field: FieldId, value: u64) -> Self {
        debug_assert!(value < field.size());
        GFElement { field, value }
    }

    pub fn zero(field: FieldId) -> Self {
        GFElement { field, value: 0 }
    }

    pub fn one(field: FieldId) -> Self {
        GFElement { field, value: 1 }
    }

    /// v in GF(4).
    pub fn v4() -> Self {
        GFElement { field: FieldId::F4, value: 2 }
    }

    /// w in GF(4).
    pub fn w4() -> Self {
        GFElement { field: FieldId::F4, value: 3 }
    }

    /// All elements of the field, in a fixed order.
    pub fn all(field: FieldId) -> Vec<Self> {
        (0..field.size()).map(|v| GFElement::new(field, v)).collect()
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(self.field, rhs.field, "mixed finite-field arithmetic");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let value = match self.field {
            FieldId::F2 | FieldId::F4 => self.value ^ rhs.value,
            FieldId::F9 => {
                let (a1, b1) = (self.value % 3, self.value / 3);
                let (a2, b2) = (rhs.value % 3, rhs.value / 3);
                (a1 + a2) % 3 + ((b1 + b2) % 3) * 3
            }
            FieldId::Fp(p) => (self.value + rhs.value) % p,
        };
        GFElement { field: self.field, value }
    }

    pub fn neg(&self) -> Self {
        let value = match self.field {
            FieldId::F2 | FieldId::F4 => self.value,
            FieldId::F9 => {
                let (a, b) = (self.value % 3, self.value / 3);
                (3 - a) % 3 + ((3 - b) % 3) * 3
            }
            FieldId::Fp(p) => (p - self.value) % p,
        };
        GFElement { field: self.field, value }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let value = match self.field {
            FieldId::F2 => self.value & rhs.value,
            FieldId::F4 => {
                // polynomial multiplication mod v² + v + 1
                let (a, b) = (self.value, rhs.value);
                let mut prod = 0u64;
                if b & 1 != 0 {
                    prod ^= a;
                }
                if b & 2 != 0 {
                    prod ^= a << 1;
                }
                // reduce bits 2,3 by v² = v + 1
                if prod & 4 != 0 {
                    prod = (prod & !4) ^ 0b11;
                }
                debug_assert!(prod < 4);
                prod
            }
            FieldId::F9 => {
                let (a1, b1) = (self.value % 3, self.value / 3);
                let (a2, b2) = (rhs.value % 3, rhs.value / 3);
                // (a1 + b1 s)(a2 + b2 s) with s² = -1 ≡ 2 (mod 3)
                let a = (a1 * a2 + 2 * b1 * b2) % 3;
                let b = (a1 * b2 + b1 * a2) % 3;
                a + b * 3
            }
            FieldId::Fp(p) => (self.value * rhs.value) % p,
        };
        GFElement { field: self.field, value }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // fields are tiny; scan for the inverse
        GFElement::all(self.field)
            .into_iter()
            .find(|x| self.mul(x).value == 1)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = GFElement::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl std::fmt::Display for GFElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.field {
            FieldId::F4 => write!(f, "{}", ["0", "1", "v", "w"][self.value as usize]),
            FieldId::F9 => {
                let (a, b) = (self.value % 3, self.value / 3);
                match (a, b) {
                    (a, 0) => write!(f, "{a}"),
                    (0, 1) => write!(f, "s"),
                    (0, 2) => write!(f, "2s"),
                    (a, 1) => write!(f, "{a}+s"),
                    (a, _) => write!(f, "{a}+2s"),
                }
            }
            _ => write!(f, "{}", self.value),
        }
    }
}

impl Scalar for GFElement {
    fn zero_like(&self) -> Self {
        GFElement::zero(self.field)
    }
    fn one_like(&self) -> Self {
        GFElement::one(self.field)
    }
    fn add(&self, rhs: &Self) -> Self {
        GFElement::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        GFElement::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        GFElement::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        GFElement::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        GFElement::inv(self)
    }
    fn is_zero(&self) -> bool {
        GFElement::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_defining_relations() {
        let one = GFElement::one(FieldId::F4);
        let v = GFElement::v4();
        let w = GFElement::w4();
        assert!(one.add(&one).is_zero()); // 1+1 = 0
        assert_eq!(v.mul(&w), one); // vw = 1
        assert!(one.add(&v).add(&w).is_zero()); // 1+v+w = 0
        assert_eq!(v.mul(&v), w); // v² = v+1 = w
    }

    #[test]
    fn gf4_frobenius_fixed_points() {
        for x in GFElement::all(FieldId::F4) {
            assert_eq!(x.pow(4), x); // x⁴ = x
        }
    }

    #[test]
    fn gf9_is_mod3_with_root_of_minus_one() {
        let s = GFElement::new(FieldId::F9, 3); // 0 + 1·s
        let minus_one = GFElement::one(FieldId::F9).neg();
        assert_eq!(s.mul(&s), minus_one);
        for x in GFElement::all(FieldId::F9) {
            assert_eq!(x.pow(9), x); // x⁹ = x
        }
    }

    #[test]
    fn field_axioms_by_exhaustion() {
        for field in [FieldId::F2, FieldId::F4, FieldId::F9, FieldId::Fp(7)] {
            let all = GFElement::all(field);
            for a in &all {
                if !a.is_zero() {
                    let inv = a.inv().unwrap();
                    assert_eq!(a.mul(&inv), GFElement::one(field));
                }
                for b in &all {
                    assert_eq!(a.add(b), b.add(a));
                    assert_eq!(a.mul(b), b.mul(a));
                    for c in &all {
                        assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
                        assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                    }
                }
            }
        }
    }
}
