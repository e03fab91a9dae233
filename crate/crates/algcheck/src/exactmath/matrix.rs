//! Dense exact matrices over any [`Scalar`], plus the signature of a rational
//! symmetric form (Sylvester's law via symmetric Gaussian elimination) and
//! span/closure dimension helpers.

use num_traits::Signed;
use thiserror::Error;

use super::quaternion::Quaternion;
use super::rational::{ComplexRational, Rational};
use super::Scalar;

#[derive(Error, Debug, PartialEq)]
pub enum MatrixError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Rectangular matrix with entries in an exact scalar field.
#[derive(Clone, PartialEq, Debug)]
pub struct ExactMatrix<S: Scalar> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> ExactMatrix<S> {
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn zero_like(rows: usize, cols: usize, sample: &S) -> Self {
        ExactMatrix { rows, cols, data: vec![sample.zero_like(); rows * cols] }
    }

    pub fn identity_like(n: usize, sample: &S) -> Self {
        let mut m = Self::zero_like(n, n, sample);
        for k in 0..n {
            m.set(k, k, sample.one_like());
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero_like(self.cols, self.rows, &self.data[0]);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c).clone());
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Self::zero_like(self.rows, rhs.cols, &self.data[0]);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = self.data[0].zero_like();
                for k in 0..self.cols {
                    if !self.at(r, k).is_zero() && !rhs.at(k, c).is_zero() {
                        acc = acc.add(&self.at(r, k).mul(rhs.at(k, c)));
                    }
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(s)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = self.data[0].zero_like();
                for (k, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc = acc.add(&self.at(r, k).mul(x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Reduced row echelon form; returns the pivot column of each pivot row.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    let a = m.at(pr, c).clone();
                    let b = m.at(row, c).clone();
                    m.set(pr, c, b);
                    m.set(row, c, a);
                }
            }
            let inv = m.at(row, col).inv().expect("nonzero pivot must be invertible");
            for c in 0..m.cols {
                m.set(row, c, m.at(row, c).mul(&inv));
            }
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let f = m.at(r, col).clone();
                    for c in 0..m.cols {
                        let v = m.at(r, c).sub(&f.mul(m.at(row, c)));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right nullspace.
    pub fn nullspace(&self) -> Vec<Vec<S>> {
        let (r, pivots) = self.rref();
        let zero = self.data[0].zero_like();
        let one = self.data[0].one_like();
        let mut basis = Vec::new();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![zero.clone(); self.cols];
            v[free] = one.clone();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = r.at(prow, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = ExactMatrix::zero_like(n, 2 * n, &self.data[0]);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, n + r, self.data[0].one_like());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut out = ExactMatrix::zero_like(n, n, &self.data[0]);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, red.at(r, n + c).clone());
            }
        }
        Some(out)
    }
}

/// Inertia (p, q, r) of a rational symmetric form: counts of positive,
/// negative and zero squares after exact congruence diagonalization.
pub fn signature(m: &ExactMatrix<Rational>) -> Result<(usize, usize, usize), MatrixError> {
    if m.rows != m.cols {
        return Err(MatrixError::NotSquare);
    }
    let n = m.rows;
    for r in 0..n {
        for c in 0..r {
            if m.at(r, c) != m.at(c, r) {
                return Err(MatrixError::NotSymmetric);
            }
        }
    }
    let mut a = m.clone();
    let (mut p, mut q, mut r_cnt) = (0usize, 0usize, 0usize);
    for k in 0..n {
        if a.at(k, k).is_zero() {
            if let Some(l) = ((k + 1)..n).find(|&l| !a.at(l, l).is_zero()) {
                // swap basis vectors k and l
                for c in 0..n {
                    let x = a.at(k, c).clone();
                    let y = a.at(l, c).clone();
                    a.set(k, c, y);
                    a.set(l, c, x);
                }
                for r in 0..n {
                    let x = a.at(r, k).clone();
                    let y = a.at(r, l).clone();
                    a.set(r, k, y);
                    a.set(r, l, x);
                }
            } else if let Some(l) = ((k + 1)..n).find(|&l| !a.at(k, l).is_zero()) {
                // no nonzero diagonal left: e_k += e_l creates 2*a[k][l] on the diagonal
                for c in 0..n {
                    let v = a.at(k, c).add(a.at(l, c));
                    a.set(k, c, v);
                }
                for r in 0..n {
                    let v = a.at(r, k).add(a.at(r, l));
                    a.set(r, k, v);
                }
            } else {
                r_cnt += 1;
                continue;
            }
        }
        let pivot = a.at(k, k).clone();
        if pivot.is_positive() {
            p += 1;
        } else {
            q += 1;
        }
        for i in (k + 1)..n {
            if !a.at(i, k).is_zero() {
                let f = a.at(i, k) / &pivot;
                for c in 0..n {
                    let v = a.at(i, c) - &(&f * a.at(k, c));
                    a.set(i, c, v);
                }
                for r in 0..n {
                    let v = a.at(r, i) - &(&f * a.at(r, k));
                    a.set(r, i, v);
                }
            }
        }
    }
    Ok((p, q, r_cnt))
}

/// Signature of a Hermitian complex form, computed after expansion to the
/// real symmetric form [[Re, -Im], [Im, Re]] (each inertia count doubles).
pub fn signature_hermitian_complex(
    m: &ExactMatrix<ComplexRational>,
) -> Result<(usize, usize, usize), MatrixError> {
    if m.rows != m.cols {
        return Err(MatrixError::NotSquare);
    }
    let n = m.rows;
    for r in 0..n {
        for c in 0..n {
            if *m.at(r, c) != m.at(c, r).conj() {
                return Err(MatrixError::NotSymmetric);
            }
        }
    }
    let zero = crate::exactmath::rat(0);
    let mut real = ExactMatrix::zero_like(2 * n, 2 * n, &zero);
    for r in 0..n {
        for c in 0..n {
            let z = m.at(r, c);
            real.set(r, c, z.re.clone());
            real.set(r, n + c, -&z.im);
            real.set(n + r, c, z.im.clone());
            real.set(n + r, n + c, z.re.clone());
        }
    }
    let (p, q, z) = signature(&real)?;
    debug_assert!(p % 2 == 0 && q % 2 == 0 && z % 2 == 0);
    Ok((p / 2, q / 2, z / 2))
}

/// Signature of a quaternionic Hermitian form (entries `h[r][c]` with
/// `h[c][r] = conj(h[r][c])`), via the real 4n-dimensional expansion where
/// each quaternion a+bi+cj+dk becomes its left-multiplication 4x4 block.
pub fn signature_hermitian_quaternion(
    h: &[Vec<Quaternion>],
) -> Result<(usize, usize, usize), MatrixError> {
    let n = h.len();
    if h.iter().any(|row| row.len() != n) {
        return Err(MatrixError::NotSquare);
    }
    for r in 0..n {
        for c in 0..n {
            if h[r][c] != h[c][r].conj() {
                return Err(MatrixError::NotSymmetric);
            }
        }
    }
    let zero = crate::exactmath::rat(0);
    let mut real = ExactMatrix::zero_like(4 * n, 4 * n, &zero);
    for r in 0..n {
        for c in 0..n {
            let q = &h[r][c];
            let block = quaternion_left_block(q);
            for (br, row) in block.iter().enumerate() {
                for (bc, v) in row.iter().enumerate() {
                    real.set(4 * r + br, 4 * c + bc, v.clone());
                }
            }
        }
    }
    let (p, q, z) = signature(&real)?;
    debug_assert!(p % 4 == 0 && q % 4 == 0 && z % 4 == 0);
    Ok((p / 4, q / 4, z / 4))
}

/// 4x4 real matrix of left multiplication by a quaternion on basis 1,i,j,k.
fn quaternion_left_block(q: &Quaternion) -> [[Rational; 4]; 4] {
    let [a, b, c, d] = &q.c;
    [
        [a.clone(), -b, -c, -d],
        [b.clone(), a.clone(), -d, c.clone()],
        [c.clone(), d.clone(), a.clone(), -b],
        [d.clone(), -c, b.clone(), a.clone()],
    ]
}

/// Incrementally maintained row space over a scalar field.
pub struct SpanBasis<S: Scalar> {
    /// Echelonized rows, each with its pivot column.
    rows: Vec<(usize, Vec<S>)>,
}

impl<S: Scalar> Default for SpanBasis<S> {
    fn default() -> Self {
        SpanBasis { rows: Vec::new() }
    }
}

impl<S: Scalar> SpanBasis<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the basis; insert if independent. Returns true when
    /// the dimension grew.
    pub fn insert(&mut self, mut v: Vec<S>) -> bool {
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let f = v[*pivot].clone();
                for (x, y) in v.iter_mut().zip(row.iter()) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].inv().expect("field element must invert");
        for x in v.iter_mut() {
            *x = x.mul(&inv);
        }
        self.rows.push((pivot, v));
        true
    }

    pub fn contains(&self, v: &[S]) -> bool {
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let f = v[*pivot].clone();
                for (x, y) in v.iter_mut().zip(row.iter()) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }
}

/// Exact dimension of the span of the given coordinate vectors.
pub fn span_dimension(vectors: &[Vec<Rational>]) -> usize {
    let mut basis = SpanBasis::new();
    for v in vectors {
        basis.insert(v.clone());
    }
    basis.dim()
}

/// Close a set of algebra elements under a product rule until the linear span
/// stabilizes. Returns the dimension and representatives spanning the result.
///
/// `cap` bounds the dimension (the ambient dimension in all callers); hitting
/// the cap just stops the iteration since the span can grow no further.
pub fn closure_span<T: Clone, S: Scalar>(
    seed: &[T],
    to_coords: impl Fn(&T) -> Vec<S>,
    mul: impl Fn(&T, &T) -> T,
    cap: usize,
) -> (usize, Vec<T>) {
    let mut basis: SpanBasis<S> = SpanBasis::new();
    let mut reps: Vec<T> = Vec::new();
    let mut queue: Vec<T> = seed.to_vec();
    while let Some(x) = queue.pop() {
        if basis.dim() >= cap {
            break;
        }
        if basis.insert(to_coords(&x)) {
            queue.push(mul(&x, &x));
            for r in &reps {
                queue.push(mul(&x, r));
                queue.push(mul(r, &x));
            }
            reps.push(x);
        }
    }
    (basis.dim(), reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio};
    use proptest::prelude::*;

    fn diag(entries: &[i64]) -> ExactMatrix<Rational> {
        let n = entries.len();
        let mut m = ExactMatrix::zero_like(n, n, &rat(0));
        for (k, &e) in entries.iter().enumerate() {
            m.set(k, k, rat(e));
        }
        m
    }

    #[test]
    fn signature_of_diagonal() {
        assert_eq!(signature(&diag(&[1, 1, -1])).unwrap(), (2, 1, 0));
        assert_eq!(signature(&diag(&[0, 2, -3])).unwrap(), (1, 1, 1));
    }

    #[test]
    fn signature_rejects_non_symmetric() {
        let m = ExactMatrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(2), rat(0)]]);
        assert_eq!(signature(&m), Err(MatrixError::NotSymmetric));
    }

    #[test]
    fn wedge_pairing_on_lambda2_r4_is_split() {
        // Basis e12,e13,e14,e23,e24,e34 of Λ²(R⁴); pairing u∧v = B(u,v)·e1234.
        // B is the sign of the complementary permutation, built explicitly.
        let pairs = [(0usize, 1usize), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut b = ExactMatrix::zero_like(6, 6, &rat(0));
        for (r, &(i, j)) in pairs.iter().enumerate() {
            for (c, &(k, l)) in pairs.iter().enumerate() {
                let mut perm = vec![i, j, k, l];
                perm.sort_unstable();
                perm.dedup();
                if perm.len() == 4 {
                    // sign of permutation (i,j,k,l) of (0,1,2,3)
                    let arr = [i, j, k, l];
                    let mut sign = 1i64;
                    for a in 0..4 {
                        for bb in (a + 1)..4 {
                            if arr[a] > arr[bb] {
                                sign = -sign;
                            }
                        }
                    }
                    b.set(r, c, rat(sign));
                }
            }
        }
        assert_eq!(signature(&b).unwrap(), (3, 3, 0));
    }

    #[test]
    fn hermitian_complex_expansion() {
        // diag(1, -2) as a complex Hermitian form
        let m = ExactMatrix::from_rows(vec![
            vec![ComplexRational::from_real(rat(1)), ComplexRational::zero()],
            vec![ComplexRational::zero(), ComplexRational::from_real(rat(-2))],
        ]);
        assert_eq!(signature_hermitian_complex(&m).unwrap(), (1, 1, 0));
        // a form with a genuinely complex off-diagonal entry: [[0, i], [-i, 0]]
        let off = ExactMatrix::from_rows(vec![
            vec![ComplexRational::zero(), ComplexRational::i()],
            vec![ComplexRational::i().neg(), ComplexRational::zero()],
        ]);
        assert_eq!(signature_hermitian_complex(&off).unwrap(), (1, 1, 0));
    }

    #[test]
    fn hermitian_quaternion_expansion() {
        let one = Quaternion::one();
        let h = vec![
            vec![one.clone(), Quaternion::j()],
            vec![Quaternion::j().neg(), one.neg()],
        ];
        // eigenvalues of [[1, j], [-j, -1]] are ±√2, signature (1,1)
        assert_eq!(signature_hermitian_quaternion(&h).unwrap(), (1, 1, 0));
    }

    #[test]
    fn span_examples() {
        let e1 = vec![rat(1), rat(0)];
        let e2 = vec![rat(0), rat(1)];
        let sum = vec![rat(1), rat(1)];
        assert_eq!(span_dimension(&[e1, e2, sum]), 2);
    }

    #[test]
    fn nullspace_dimensions() {
        let m = ExactMatrix::from_rows(vec![vec![rat(1), rat(2), rat(3)]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(m.apply(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = ExactMatrix::from_rows(vec![
            vec![rat(2), rat(1)],
            vec![rat(1), rat(1)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), ExactMatrix::identity_like(2, &rat(0)));
        let singular = ExactMatrix::from_rows(vec![
            vec![rat(1), rat(2)],
            vec![rat(2), rat(4)],
        ]);
        assert!(singular.inverse().is_none());
    }

    fn arb_sym3() -> impl Strategy<Value = ExactMatrix<Rational>> {
        prop::collection::vec(-5i64..6, 6).prop_map(|v| {
            let m = ExactMatrix::from_rows(vec![
                vec![rat(v[0]), rat(v[1]), rat(v[2])],
                vec![rat(v[1]), rat(v[3]), rat(v[4])],
                vec![rat(v[2]), rat(v[4]), rat(v[5])],
            ]);
            m
        })
    }

    fn arb_invertible3() -> impl Strategy<Value = ExactMatrix<Rational>> {
        prop::collection::vec(-3i64..4, 9)
            .prop_map(|v| {
                ExactMatrix::from_rows(vec![
                    vec![rat(v[0]), rat(v[1]), rat(v[2])],
                    vec![rat(v[3]), rat(v[4]), rat(v[5])],
                    vec![rat(v[6]), rat(v[7]), rat(v[8])],
                ])
            })
            .prop_filter("invertible", |m| m.rank() == 3)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn signature_invariant_under_congruence(f in arb_sym3(), a in arb_invertible3()) {
            let sig = signature(&f).unwrap();
            let congruent = a.transpose().mul(&f).mul(&a);
            prop_assert_eq!(signature(&congruent).unwrap(), sig);
        }

        #[test]
        fn inertia_sums_to_dimension(f in arb_sym3()) {
            let (p, q, r) = signature(&f).unwrap();
            prop_assert_eq!(p + q + r, 3);
        }
    }

    #[test]
    fn rational_ratio_sanity() {
        assert_eq!(ratio(2, 4), ratio(1, 2));
    }
}
