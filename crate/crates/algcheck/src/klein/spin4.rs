//! The four-dimensional split: the even subalgebra of a Cl(0,4)/Cl(4,0)
//! generator set decomposes under the idempotents (1 ± pseudoscalar)/2 into
//! two commuting quaternion algebras.

use crate::clifford::{associative_closure, idempotent_split, pseudoscalar, MultiVector};
use crate::exactmath::{rat, ratio};

#[derive(Debug)]
pub struct Spin4Report {
    pub pseudoscalar_squares_to_one: bool,
    pub even_dimension: usize,
    pub corner_dims: (usize, usize),
    pub corner_relations: (bool, bool),
    pub idempotents_orthogonal: bool,
}

impl Spin4Report {
    pub fn pass(&self) -> bool {
        self.pseudoscalar_squares_to_one
            && self.even_dimension == 8
            && self.corner_dims == (4, 4)
            && self.corner_relations == (true, true)
            && self.idempotents_orthogonal
    }
}

/// Run the split check on one 4-generator set.
pub fn spin4_split(gens: &[MultiVector; 4]) -> Spin4Report {
    let omega = pseudoscalar(gens);
    let pseudoscalar_squares_to_one = omega.mul(&omega).try_scalar() == Some(rat(1));
    // even subalgebra: closure of the six bivectors
    let mut bivectors = Vec::new();
    for a in 0..4 {
        for b in 0..a {
            bivectors.push(gens[b].mul(&gens[a]));
        }
    }
    let (even_dimension, _) = associative_closure(&bivectors);
    let half = ratio(1, 2);
    let e_plus = MultiVector::one().add(&omega).scale(&half);
    let e_minus = MultiVector::one().sub(&omega).scale(&half);
    let idempotents_orthogonal = e_plus.mul(&e_minus).is_zero()
        && e_plus.add(&e_minus) == MultiVector::one();
    // the quaternion triple inside the even part: bivectors of the first
    // three generators
    let triple = [gens[1].mul(&gens[2]), gens[2].mul(&gens[0]), gens[0].mul(&gens[1])];
    let rp = idempotent_split(&e_plus, &bivectors, Some(&triple));
    let rm = idempotent_split(&e_minus, &bivectors, Some(&triple));
    Spin4Report {
        pseudoscalar_squares_to_one,
        even_dimension,
        corner_dims: (rp.corner_dim, rm.corner_dim),
        corner_relations: (
            rp.relations.unwrap_or(false),
            rm.relations.unwrap_or(false),
        ),
        idempotents_orthogonal,
    }
}

/// The two registered 4-generator sets: (γ₁, γ₂, γ₃, γ₀γ₁γ₂γ₃) for the
/// negative-definite case and (iγ₀γ₁γ₂γ₃, jγ₀γ₁γ₂γ₃, kγ₀γ₁γ₂γ₃, γ₁γ₂γ₃)
/// for the positive-definite one.
pub fn spin4_split_check() -> (Spin4Report, Spin4Report) {
    let g = |k: u8| MultiVector::gamma(k);
    let big = g(0).mul(&g(1)).mul(&g(2)).mul(&g(3));
    let cl04 = [g(1), g(2), g(3), big.clone()];
    let cl40 = [
        MultiVector::unit_i().mul(&big),
        MultiVector::unit_j().mul(&big),
        MultiVector::unit_k().mul(&big),
        g(1).mul(&g(2)).mul(&g(3)),
    ];
    (spin4_split(&cl04), spin4_split(&cl40))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_cases_split_into_two_quaternion_corners() {
        let (cl04, cl40) = spin4_split_check();
        assert!(cl04.pass(), "{cl04:?}");
        assert!(cl40.pass(), "{cl40:?}");
    }
}
