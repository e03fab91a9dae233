//! The antisymmetric square: a 4x4 matrix acting on Λ²(C⁴).

use crate::exactmath::{ComplexRational, ExactMatrix, Scalar};

/// Basis pairs of Λ²(C⁴) in order e0∧e1, e0∧e2, e0∧e3, e1∧e2, e1∧e3, e2∧e3.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn pair_index(a: usize, b: usize) -> (usize, bool) {
    let (lo, hi, flip) = if a < b { (a, b, false) } else { (b, a, true) };
    let idx = PAIRS.iter().position(|&p| p == (lo, hi)).unwrap();
    (idx, flip)
}

/// Λ²(X)(e_i∧e_j) = X e_i ∧ e_j + e_i ∧ X e_j, as a 6x6 matrix.
pub fn wedge_matrix(x: &ExactMatrix<ComplexRational>) -> ExactMatrix<ComplexRational> {
    assert_eq!((x.rows, x.cols), (4, 4));
    let mut w = ExactMatrix::zero_like(6, 6, &ComplexRational::zero());
    for (col, &(i, j)) in PAIRS.iter().enumerate() {
        for k in 0..4 {
            // X[k][i] · e_k ∧ e_j
            if k != j {
                let (row, flip) = pair_index(k, j);
                let coef = x.at(k, i).clone();
                let coef = if flip { coef.neg() } else { coef };
                w.set(row, col, w.at(row, col).add(&coef));
            }
            // X[k][j] · e_i ∧ e_k
            if k != i {
                let (row, flip) = pair_index(i, k);
                let coef = x.at(k, j).clone();
                let coef = if flip { coef.neg() } else { coef };
                w.set(row, col, w.at(row, col).add(&coef));
            }
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn bracket(
        a: &ExactMatrix<ComplexRational>,
        b: &ExactMatrix<ComplexRational>,
    ) -> ExactMatrix<ComplexRational> {
        a.mul(b).sub(&b.mul(a))
    }

    #[test]
    fn wedge_preserves_brackets() {
        // two arbitrary integer matrices
        let a = ExactMatrix::from_rows(
            (0..4)
                .map(|r| (0..4).map(|c| ComplexRational::from_real(rat(((r * 3 + c) % 5) as i64 - 2))).collect())
                .collect(),
        );
        let b = ExactMatrix::from_rows(
            (0..4)
                .map(|r| {
                    (0..4)
                        .map(|c| ComplexRational::new(rat(((r + 2 * c) % 3) as i64), rat((r as i64) - (c as i64))))
                        .collect()
                })
                .collect(),
        );
        let lhs = wedge_matrix(&bracket(&a, &b));
        let rhs = bracket(&wedge_matrix(&a), &wedge_matrix(&b));
        assert_eq!(lhs, rhs);
    }
}
