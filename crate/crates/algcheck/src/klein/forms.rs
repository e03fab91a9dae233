//! The four 15-dimensional real forms on 4-space, their invariant
//! 6-dimensional quadratic spaces, and vector stabilizers.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exactmath::{
    rat, signature, ComplexRational, ExactMatrix, Quaternion, Rational, Scalar, SpanBasis,
};

use super::wedge::wedge_matrix;

pub const REAL_FORM_NAMES: [&str; 4] = ["sl4r", "su4", "su22", "sl2h"];

type CMat = ExactMatrix<ComplexRational>;

fn czero() -> ComplexRational {
    ComplexRational::zero()
}

fn c_from(re: i64, im: i64) -> ComplexRational {
    ComplexRational::new(rat(re), rat(im))
}

fn unit(r: usize, c: usize, v: ComplexRational) -> CMat {
    let mut m = ExactMatrix::zero_like(4, 4, &czero());
    m.set(r, c, v);
    m
}

/// Standard exact basis of the named real form (15 complex 4x4 matrices).
pub fn lie_basis(name: &str) -> Result<Vec<CMat>, String> {
    let mut basis = Vec::with_capacity(15);
    match name {
        "sl4r" => {
            for r in 0..4 {
                for c in 0..4 {
                    if r != c {
                        basis.push(unit(r, c, c_from(1, 0)));
                    }
                }
            }
            for k in 0..3 {
                let mut m = unit(k, k, c_from(1, 0));
                m.set(k + 1, k + 1, c_from(-1, 0));
                basis.push(m);
            }
        }
        "su4" | "su22" => {
            // anti-Hermitian w.r.t. diag(1,1,1,1) or diag(1,1,-1,-1)
            let eta: [i64; 4] = if name == "su4" { [1, 1, 1, 1] } else { [1, 1, -1, -1] };
            // imaginary diagonal, traceless
            for k in 0..3 {
                let mut m = unit(k, k, c_from(0, 1));
                m.set(k + 1, k + 1, c_from(0, -1));
                basis.push(m);
            }
            // off-diagonal pairs: X[c][r] = -sign · conj(X[r][c]) with
            // sign = η_r·η_c
            for r in 0..4 {
                for c in (r + 1)..4 {
                    let sign = eta[r] * eta[c];
                    let mut m = unit(r, c, c_from(1, 0));
                    m.set(c, r, c_from(-sign, 0));
                    basis.push(m);
                    let mut m = unit(r, c, c_from(0, 1));
                    m.set(c, r, c_from(0, sign));
                    basis.push(m);
                }
            }
        }
        "sl2h" => {
            // 2x2 quaternionic matrices with zero real trace, embedded as
            // complex 4x4 via q = z + wj ↦ [[z, w], [-conj(w), conj(z)]]
            let embed = |pos: (usize, usize), q: &Quaternion| -> CMat {
                let mut m = ExactMatrix::zero_like(4, 4, &czero());
                let (r, c) = (2 * pos.0, 2 * pos.1);
                let z = ComplexRational::new(q.c[0].clone(), q.c[1].clone());
                let w = ComplexRational::new(q.c[2].clone(), q.c[3].clone());
                m.set(r, c, z.clone());
                m.set(r, c + 1, w.clone());
                m.set(r + 1, c, w.conj().neg());
                m.set(r + 1, c + 1, z.conj());
                m
            };
            let units = [Quaternion::i(), Quaternion::j(), Quaternion::k()];
            for u in &units {
                basis.push(embed((0, 0), u));
                basis.push(embed((1, 1), u));
            }
            // real diagonal, trace zero
            let mut diag = embed((0, 0), &Quaternion::one());
            let minus = embed((1, 1), &Quaternion::one()).neg();
            diag = diag.add(&minus);
            basis.push(diag);
            for u in [Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()] {
                basis.push(embed((0, 1), &u));
                basis.push(embed((1, 0), &u));
            }
        }
        _ => return Err(format!("unknown real form {name:?}")),
    }
    if basis.len() != 15 {
        return Err(format!("{name}: built {} basis matrices", basis.len()));
    }
    Ok(basis)
}

/// Flatten a complex matrix into real rational coordinates.
fn real_coords(m: &CMat) -> Vec<Rational> {
    let mut v = Vec::with_capacity(2 * m.rows * m.cols);
    for r in 0..m.rows {
        for c in 0..m.cols {
            v.push(m.at(r, c).re.clone());
        }
    }
    for r in 0..m.rows {
        for c in 0..m.cols {
            v.push(m.at(r, c).im.clone());
        }
    }
    v
}

/// μ ∈ Q(i) with |μ|² = c, for positive rational c whose numerator·denominator
/// is a sum of two squares (always the case for the intertwiner scalars that
/// arise here).
fn gaussian_norm_solution(c: &Rational) -> Option<ComplexRational> {
    if !c.is_positive() {
        return None;
    }
    let n = c.numer().clone() * c.denom().clone();
    let n: u128 = n.try_into().ok()?;
    let mut x: u128 = 0;
    while x * x <= n {
        let rest = n - x * x;
        let y = rest.isqrt();
        if y * y == rest {
            let den = Rational::from_integer(BigInt::from(c.denom().clone()));
            return Some(ComplexRational::new(
                Rational::from_integer(BigInt::from(x)) / den.clone(),
                Rational::from_integer(BigInt::from(y)) / den,
            ));
        }
        x += 1;
    }
    None
}

/// One of the four real forms together with its invariant 6-space data.
pub struct KleinForm {
    pub name: String,
    /// 15 basis matrices of the real Lie algebra.
    pub basis: Vec<CMat>,
    /// Their antisymmetric squares on 6-space.
    pub wedge: Vec<CMat>,
    /// Complex coordinates of the 6 real-structure-fixed basis vectors.
    pub real_basis: Vec<Vec<ComplexRational>>,
    /// The algebra action restricted to the invariant real 6-space.
    pub restricted: Vec<ExactMatrix<Rational>>,
    /// The invariant symmetric bilinear form on the real 6-space.
    pub form: ExactMatrix<Rational>,
    /// Dimension of the space of invariant forms (must be 1).
    pub form_space_dim: usize,
    pub signature: (usize, usize),
}

/// Stabilizer data for one anisotropic vector.
#[derive(Debug)]
pub struct StabilizerReport {
    pub dim: usize,
    /// Signature of the form restricted to the orthogonal complement,
    /// as an unordered (max, min) pair.
    pub restricted_signature: (usize, usize),
    /// A nondegenerate invariant antisymmetric bilinear form exists on the
    /// 4-space.
    pub antisymmetric_form_exists: bool,
}

impl KleinForm {
    pub fn build(name: &str) -> Result<KleinForm, String> {
        Self::build_from_basis(name, lie_basis(name)?)
    }

    pub fn build_from_basis(name: &str, basis: Vec<CMat>) -> Result<KleinForm, String> {
        // the basis must span 15 real dimensions and close under brackets
        let mut span = SpanBasis::new();
        for m in &basis {
            span.insert(real_coords(m));
        }
        if span.dim() != 15 {
            return Err(format!("{name}: basis spans {} dimensions", span.dim()));
        }
        for a in 0..basis.len() {
            for b in 0..a {
                let br = basis[a].mul(&basis[b]).sub(&basis[b].mul(&basis[a]));
                if !span.contains(&real_coords(&br)) {
                    return Err(format!("{name}: not closed under brackets"));
                }
            }
        }
        let wedge: Vec<CMat> = basis.iter().map(wedge_matrix).collect();
        // bracket compatibility of the antisymmetric square
        for a in 0..basis.len() {
            for b in 0..a {
                let br = basis[a].mul(&basis[b]).sub(&basis[b].mul(&basis[a]));
                let lhs = wedge_matrix(&br);
                let rhs = wedge[a].mul(&wedge[b]).sub(&wedge[b].mul(&wedge[a]));
                if lhs != rhs {
                    return Err(format!("{name}: antisymmetric square broke a bracket"));
                }
            }
        }

        // equivariant antilinear map J(v) = K·conj(v): K·conj(W) = W·K
        let mut rows = Vec::new();
        for w in &wedge {
            let wc = conj_matrix(w);
            for r in 0..6 {
                for c in 0..6 {
                    let mut row = vec![czero(); 36];
                    for k in 0..6 {
                        // K[r][k]·conj(W)[k][c]
                        row[6 * r + k] = row[6 * r + k].add(wc.at(k, c));
                        // -W[r][k]·K[k][c]
                        row[6 * k + c] = row[6 * k + c].sub(w.at(r, k));
                    }
                    rows.push(row);
                }
            }
        }
        let kernel = ExactMatrix::from_rows(rows).nullspace();
        if kernel.len() != 1 {
            return Err(format!(
                "{name}: antilinear intertwiner space has dimension {}",
                kernel.len()
            ));
        }
        let mut k_mat = ExactMatrix::zero_like(6, 6, &czero());
        for r in 0..6 {
            for c in 0..6 {
                k_mat.set(r, c, kernel[0][6 * r + c].clone());
            }
        }
        // K·conj(K) = c·I with c a positive rational (real type)
        let d = k_mat.mul(&conj_matrix(&k_mat));
        let c_scalar = d.at(0, 0).clone();
        if !c_scalar.is_real() {
            return Err(format!("{name}: J² is not real"));
        }
        let ident = ExactMatrix::identity_like(6, &czero());
        if d != ident.scale(&c_scalar) {
            return Err(format!("{name}: J² is not scalar"));
        }
        let mu = gaussian_norm_solution(&c_scalar.re)
            .ok_or_else(|| format!("{name}: cannot normalize J² = {} to 1", c_scalar))?;
        let k_norm = k_mat.scale(&mu.inv().expect("nonzero"));

        // fixed space of J over the reals: K'·conj(v) = v
        let (p, q) = split_re_im(&k_norm);
        let mut m12 = ExactMatrix::zero_like(12, 12, &rat(0));
        for r in 0..6 {
            for c in 0..6 {
                // (P - I)x + Q y = 0 ; Q x - (P + I) y = 0
                let delta = if r == c { rat(1) } else { rat(0) };
                m12.set(r, c, p.at(r, c) - &delta);
                m12.set(r, 6 + c, q.at(r, c).clone());
                m12.set(6 + r, c, q.at(r, c).clone());
                m12.set(6 + r, 6 + c, -(p.at(r, c) + &delta));
            }
        }
        let fixed = m12.nullspace();
        if fixed.len() != 6 {
            return Err(format!("{name}: J-fixed space has dimension {}", fixed.len()));
        }
        let real_basis: Vec<Vec<ComplexRational>> = fixed
            .iter()
            .map(|v| {
                (0..6)
                    .map(|k| ComplexRational::new(v[k].clone(), v[6 + k].clone()))
                    .collect()
            })
            .collect();

        // restrict each wedge action to the fixed space with real coefficients
        let basis_cols: Vec<Vec<Rational>> = real_basis.iter().map(|z| complex_to_real12(z)).collect();
        let restricted: Vec<ExactMatrix<Rational>> = wedge
            .iter()
            .map(|w| {
                let mut m = ExactMatrix::zero_like(6, 6, &rat(0));
                for (b, z) in real_basis.iter().enumerate() {
                    let img: Vec<ComplexRational> = w.apply(z);
                    let coords = express_real(&basis_cols, &complex_to_real12(&img))
                        .ok_or_else(|| format!("{name}: action leaves the real 6-space"))?;
                    for (r, coef) in coords.into_iter().enumerate() {
                        m.set(r, b, coef);
                    }
                }
                Ok(m)
            })
            .collect::<Result<_, String>>()?;

        // invariant symmetric form: RᵀS + SR = 0 for all restricted actions
        let sym_pairs: Vec<(usize, usize)> =
            (0..6).flat_map(|r| (r..6).map(move |c| (r, c))).collect();
        let mut rows = Vec::new();
        for rm in &restricted {
            for r in 0..6 {
                for c in 0..6 {
                    // Σ_k R[k][r]·S[k][c] + S[r][k]·R[k][c] = 0
                    let mut row = vec![rat(0); sym_pairs.len()];
                    for k in 0..6 {
                        let idx1 = sym_index(&sym_pairs, k, c);
                        row[idx1] = &row[idx1] + rm.at(k, r);
                        let idx2 = sym_index(&sym_pairs, r, k);
                        row[idx2] = &row[idx2] + rm.at(k, c);
                    }
                    rows.push(row);
                }
            }
        }
        let form_kernel = ExactMatrix::from_rows(rows).nullspace();
        let form_space_dim = form_kernel.len();
        if form_space_dim != 1 {
            return Err(format!("{name}: invariant form space has dimension {form_space_dim}"));
        }
        let mut form = ExactMatrix::zero_like(6, 6, &rat(0));
        for (idx, &(r, c)) in sym_pairs.iter().enumerate() {
            form.set(r, c, form_kernel[0][idx].clone());
            form.set(c, r, form_kernel[0][idx].clone());
        }
        let (sp, sq, sz) = signature(&form).map_err(|e| e.to_string())?;
        if sz != 0 {
            return Err(format!("{name}: invariant form is degenerate"));
        }
        Ok(KleinForm {
            name: name.to_string(),
            basis,
            wedge,
            real_basis,
            restricted,
            form,
            form_space_dim,
            signature: (sp, sq),
        })
    }

    /// Signature as an unordered pair (max, min): the form is determined only
    /// up to a real scalar, so the sign is a convention.
    pub fn signature_unordered(&self) -> (usize, usize) {
        let (p, q) = self.signature;
        (p.max(q), p.min(q))
    }

    /// B(v, v) for a vector in real-6-space coordinates.
    pub fn norm_of(&self, v: &[Rational]) -> Rational {
        let sv = self.form.apply(v);
        v.iter().zip(&sv).map(|(a, b)| a * b).sum()
    }

    /// Signature of the form restricted to the orthogonal complement of v.
    pub fn restricted_signature_of(&self, v: &[Rational]) -> Result<(usize, usize), String> {
        let sv = self.form.apply(v);
        let comp = ExactMatrix::from_rows(vec![sv]).nullspace();
        if comp.len() != 5 {
            return Err("orthogonal complement is not 5-dimensional".into());
        }
        let mut restricted = ExactMatrix::zero_like(5, 5, &rat(0));
        for (r, w1) in comp.iter().enumerate() {
            let sw = self.form.apply(w1);
            for (c, w2) in comp.iter().enumerate() {
                let val: Rational = w2.iter().zip(&sw).map(|(a, b)| a * b).sum();
                restricted.set(r, c, val);
            }
        }
        let (p, q, z) = signature(&restricted).map_err(|e| e.to_string())?;
        if z != 0 {
            return Err("restricted form is degenerate".into());
        }
        Ok((p.max(q), p.min(q)))
    }

    /// Deterministic search for an anisotropic vector whose complement has
    /// the target unordered signature.
    pub fn find_vector_with_restricted_signature(
        &self,
        target: (usize, usize),
    ) -> Option<Vec<Rational>> {
        let mut candidates = Vec::new();
        for i in 0..6 {
            let mut v = vec![rat(0); 6];
            v[i] = rat(1);
            candidates.push(v);
        }
        for i in 0..6 {
            for j in 0..6 {
                if i == j {
                    continue;
                }
                for s in [1i64, -1] {
                    let mut v = vec![rat(0); 6];
                    v[i] = rat(1);
                    v[j] = rat(s);
                    candidates.push(v);
                }
            }
        }
        candidates.into_iter().find(|v| {
            !Zero::is_zero(&self.norm_of(v))
                && self.restricted_signature_of(v).map_or(false, |s| s == target)
        })
    }

    /// Stabilizer of an anisotropic vector: its dimension, the signature on
    /// the complement, and the existence of an invariant nondegenerate
    /// antisymmetric form on the 4-space.
    pub fn vector_stabilizer(&self, v: &[Rational]) -> Result<StabilizerReport, String> {
        if Zero::is_zero(&self.norm_of(v)) {
            return Err("isotropic vector".into());
        }
        // {t : Σ t_a R_a v = 0}
        let mut rows = vec![vec![rat(0); 15]; 6];
        for (a, rm) in self.restricted.iter().enumerate() {
            let img = rm.apply(v);
            for r in 0..6 {
                rows[r][a] = img[r].clone();
            }
        }
        let stab = ExactMatrix::from_rows(rows).nullspace();
        let dim = stab.len();
        let restricted_signature = self.restricted_signature_of(v)?;

        // stabilizer elements as 4x4 matrices
        let stab_mats: Vec<CMat> = stab
            .iter()
            .map(|t| {
                let mut acc = ExactMatrix::zero_like(4, 4, &czero());
                for (a, coef) in t.iter().enumerate() {
                    if !Zero::is_zero(coef) {
                        acc = acc.add(
                            &self.basis[a].scale(&ComplexRational::from_real(coef.clone())),
                        );
                    }
                }
                acc
            })
            .collect();
        // invariant antisymmetric form: XᵀA + AX = 0, A antisymmetric
        let anti_pairs: Vec<(usize, usize)> =
            (0..4).flat_map(|r| ((r + 1)..4).map(move |c| (r, c))).collect();
        let mut rows = Vec::new();
        for x in &stab_mats {
            for r in 0..4 {
                for c in 0..4 {
                    let mut row = vec![czero(); 6];
                    for k in 0..4 {
                        // Σ_k X[k][r]·A[k][c] + A[r][k]·X[k][c]
                        add_anti(&mut row, &anti_pairs, k, c, x.at(k, r));
                        add_anti(&mut row, &anti_pairs, r, k, x.at(k, c));
                    }
                    rows.push(row);
                }
            }
        }
        let forms = ExactMatrix::from_rows(rows).nullspace();
        let antisymmetric_form_exists = forms.iter().any(|sol| {
            let mut a = ExactMatrix::zero_like(4, 4, &czero());
            for (idx, &(r, c)) in anti_pairs.iter().enumerate() {
                a.set(r, c, sol[idx].clone());
                a.set(c, r, sol[idx].neg());
            }
            a.rank() == 4
        });
        Ok(StabilizerReport { dim, restricted_signature, antisymmetric_form_exists })
    }
}

fn conj_matrix(m: &CMat) -> CMat {
    let mut out = m.clone();
    for r in 0..m.rows {
        for c in 0..m.cols {
            out.set(r, c, m.at(r, c).conj());
        }
    }
    out
}

fn split_re_im(m: &CMat) -> (ExactMatrix<Rational>, ExactMatrix<Rational>) {
    let mut p = ExactMatrix::zero_like(m.rows, m.cols, &rat(0));
    let mut q = ExactMatrix::zero_like(m.rows, m.cols, &rat(0));
    for r in 0..m.rows {
        for c in 0..m.cols {
            p.set(r, c, m.at(r, c).re.clone());
            q.set(r, c, m.at(r, c).im.clone());
        }
    }
    (p, q)
}

fn complex_to_real12(v: &[ComplexRational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = v.iter().map(|z| z.re.clone()).collect();
    out.extend(v.iter().map(|z| z.im.clone()));
    out
}

/// Express target in the given real basis columns (all length-12 vectors).
fn express_real(basis: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let rows = target.len();
    let b = basis.len();
    let mut aug = Vec::with_capacity(rows);
    for r in 0..rows {
        let mut row: Vec<Rational> = basis.iter().map(|col| col[r].clone()).collect();
        row.push(target[r].clone());
        aug.push(row);
    }
    let (red, pivots) = ExactMatrix::from_rows(aug).rref();
    if pivots.iter().any(|&p| p >= b) {
        return None;
    }
    let mut coords = vec![rat(0); b];
    for (prow, &pcol) in pivots.iter().enumerate() {
        coords[pcol] = red.at(prow, b).clone();
    }
    Some(coords)
}

fn sym_index(pairs: &[(usize, usize)], r: usize, c: usize) -> usize {
    let key = (r.min(c), r.max(c));
    pairs.iter().position(|&p| p == key).unwrap()
}

fn add_anti(
    row: &mut [ComplexRational],
    pairs: &[(usize, usize)],
    r: usize,
    c: usize,
    coef: &ComplexRational,
) {
    if r == c {
        return;
    }
    let key = (r.min(c), r.max(c));
    let idx = pairs.iter().position(|&p| p == key).unwrap();
    // A[c][r] = -A[r][c] for r < c
    if r < c {
        row[idx] = row[idx].add(coef);
    } else {
        row[idx] = row[idx].sub(coef);
    }
}
