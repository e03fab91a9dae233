//! The exceptional isomorphisms in six dimensions, verified at the Lie
//! algebra level: each of the four 15-dimensional real forms acting on
//! 4-space gets its antisymmetric square on 6-space, the invariant real
//! quadratic form is solved for exactly, and its signature is read off.
//! Vector stabilizers give the five-dimensional symplectic family.

mod forms;
mod spin4;
mod wedge;

pub use forms::{lie_basis, KleinForm, StabilizerReport, REAL_FORM_NAMES};
pub use spin4::{spin4_split, spin4_split_check, Spin4Report};
pub use wedge::wedge_matrix;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ComplexRational, ExactMatrix, Scalar};

    #[test]
    fn wedge_of_diagonal() {
        // Λ²(diag(a,b,c,d)) = diag(a+b, a+c, a+d, b+c, b+d, c+d)
        let d = |v: [i64; 4]| {
            let mut m = ExactMatrix::zero_like(4, 4, &ComplexRational::zero());
            for (k, x) in v.into_iter().enumerate() {
                m.set(k, k, ComplexRational::from_real(rat(x)));
            }
            m
        };
        let w = wedge_matrix(&d([1, 2, 3, 4]));
        let expected = [3, 4, 5, 5, 6, 7];
        for (k, e) in expected.into_iter().enumerate() {
            assert_eq!(*w.at(k, k), ComplexRational::from_real(rat(e)));
        }
        // zero maps to zero
        assert!(wedge_matrix(&d([0, 0, 0, 0])).is_zero());
    }

    #[test]
    fn nilpotent_wedge_entries() {
        // X = E12: image has entries in {0, ±1}
        let mut e12 = ExactMatrix::zero_like(4, 4, &ComplexRational::zero());
        e12.set(0, 1, ComplexRational::one());
        let w = wedge_matrix(&e12);
        for r in 0..6 {
            for c in 0..6 {
                let v = w.at(r, c);
                assert!(
                    v.is_zero()
                        || *v == ComplexRational::one()
                        || *v == ComplexRational::one().neg()
                );
            }
        }
        assert!(!w.is_zero());
    }

    #[test]
    fn all_four_real_forms() {
        let expected = [
            ("sl4r", (3, 3)),
            ("su4", (6, 0)),
            ("su22", (4, 2)),
            ("sl2h", (5, 1)),
        ];
        for (name, sig) in expected {
            let form = KleinForm::build(name).unwrap();
            assert_eq!(form.form_space_dim, 1, "{name}: invariant form not unique");
            assert_eq!(form.signature_unordered(), sig, "{name}");
        }
    }

    #[test]
    fn stabilizers_are_ten_dimensional_symplectic() {
        // sl4r: any anisotropic vector leaves residual signature {3,2}
        let sl4r = KleinForm::build("sl4r").unwrap();
        let v = sl4r.find_vector_with_restricted_signature((3, 2)).unwrap();
        let stab = sl4r.vector_stabilizer(&v).unwrap();
        assert_eq!(stab.dim, 10);
        assert_eq!(stab.restricted_signature, (3, 2));
        assert!(stab.antisymmetric_form_exists);

        let su4 = KleinForm::build("su4").unwrap();
        let v = su4.find_vector_with_restricted_signature((5, 0)).unwrap();
        let stab = su4.vector_stabilizer(&v).unwrap();
        assert_eq!(stab.dim, 10);
        assert_eq!(stab.restricted_signature, (5, 0));
        assert!(stab.antisymmetric_form_exists);

        let su22 = KleinForm::build("su22").unwrap();
        let v = su22.find_vector_with_restricted_signature((4, 1)).unwrap();
        let stab = su22.vector_stabilizer(&v).unwrap();
        assert_eq!(stab.dim, 10);
        assert_eq!(stab.restricted_signature, (4, 1));
        assert!(stab.antisymmetric_form_exists);
    }

    #[test]
    fn isotropic_vectors_are_rejected() {
        let sl4r = KleinForm::build("sl4r").unwrap();
        // find an isotropic vector of the split form by brute search
        let mut found = false;
        'outer: for i in 0..6usize {
            for j in 0..6usize {
                if i == j {
                    continue;
                }
                let mut v = vec![rat(0); 6];
                v[i] = rat(1);
                v[j] = rat(1);
                if sl4r.norm_of(&v) == rat(0) {
                    assert!(sl4r.vector_stabilizer(&v).is_err());
                    found = true;
                    break 'outer;
                }
            }
        }
        assert!(found, "split form should have an isotropic vector");
    }

    #[test]
    fn signature_stable_under_base_change() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for name in ["sl4r", "su22"] {
            let form = KleinForm::build(name).unwrap();
            let base = lie_basis(name).unwrap();
            // random invertible rational 4x4 conjugation
            let g = loop {
                let mut m = ExactMatrix::zero_like(4, 4, &ComplexRational::zero());
                for r in 0..4 {
                    for c in 0..4 {
                        m.set(r, c, ComplexRational::from_real(rat(rng.gen_range(-2..3))));
                    }
                }
                if m.inverse().is_some() {
                    break m;
                }
            };
            let ginv = g.inverse().unwrap();
            let conjugated: Vec<_> = base.iter().map(|x| g.mul(x).mul(&ginv)).collect();
            let moved = KleinForm::build_from_basis(name, conjugated).unwrap();
            assert_eq!(moved.signature_unordered(), form.signature_unordered(), "{name}");
        }
    }
}
