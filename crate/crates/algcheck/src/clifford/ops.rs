//! Verification operations over either algebra representation.

use num_traits::{Signed, Zero};

use super::AlgebraElement;
use crate::exactmath::{closure_span, rat, ComplexRational, ExactMatrix, Rational, SpanBasis};

/// Outcome of checking one generator set against its claimed signature.
#[derive(Clone, Debug)]
pub struct GeneratorReport {
    /// First non-anticommuting pair, if any.
    pub bad_pair: Option<(usize, usize)>,
    /// Sign of each generator's square; None if the square is not ±1·(scalar).
    pub squares: Vec<Option<i8>>,
    /// Counts of squares (+1, -1) when all squares are scalar.
    pub signature: Option<(usize, usize)>,
    pub claimed_signature: (usize, usize),
    /// Dimension of the generated associative subalgebra.
    pub dimension: usize,
    /// 2^n for n generators.
    pub expected_dimension: usize,
}

impl GeneratorReport {
    pub fn pass(&self) -> bool {
        self.bad_pair.is_none()
            && self.squares.iter().all(|s| s.is_some())
            && self.signature == Some(self.claimed_signature)
            && self.dimension == self.expected_dimension
    }
}

/// Check pairwise anticommutation, ±1 squares, the signature, and the
/// dimension of the generated associative subalgebra.
pub fn verify_generators<E: AlgebraElement>(
    gens: &[E],
    claimed_signature: (usize, usize),
) -> GeneratorReport {
    assert!(!gens.is_empty() && gens.len() <= 6, "1..=6 generators supported");
    let mut bad_pair = None;
    'outer: for a in 0..gens.len() {
        for b in 0..a {
            if !gens[a].anticommutator(&gens[b]).is_zero() {
                bad_pair = Some((b, a));
                break 'outer;
            }
        }
    }
    let squares: Vec<Option<i8>> = gens
        .iter()
        .map(|g| {
            g.mul(g).try_scalar().and_then(|c| {
                if c == rat(1) {
                    Some(1)
                } else if c == rat(-1) {
                    Some(-1)
                } else {
                    None
                }
            })
        })
        .collect();
    let signature = if squares.iter().all(|s| s.is_some()) {
        let p = squares.iter().filter(|s| **s == Some(1)).count();
        let q = squares.iter().filter(|s| **s == Some(-1)).count();
        Some((p, q))
    } else {
        None
    };
    let (dimension, _) = associative_closure(gens);
    GeneratorReport {
        bad_pair,
        squares,
        signature,
        claimed_signature,
        dimension,
        expected_dimension: 1 << gens.len(),
    }
}

/// Dimension and spanning representatives of the associative algebra
/// generated by the given elements.
pub fn associative_closure<E: AlgebraElement>(gens: &[E]) -> (usize, Vec<E>) {
    let cap = gens.first().map_or(0, |g| g.ambient_dim());
    closure_span(gens, |e| e.coords(), |a, b| a.mul(b), cap)
}

/// Dimension of the Lie algebra spanned by the elements and closed under
/// commutators.
pub fn lie_closure<E: AlgebraElement>(elements: &[E]) -> (usize, Vec<E>) {
    let cap = elements.first().map_or(0, |g| g.ambient_dim());
    closure_span(elements, |e| e.coords(), |a, b| a.commutator(b), cap)
}

/// Ordered product of the generators.
pub fn pseudoscalar<E: AlgebraElement>(gens: &[E]) -> E {
    let mut acc = gens[0].clone();
    for g in &gens[1..] {
        acc = acc.mul(g);
    }
    acc
}

/// Compare two elements up to overall sign: returns +1 / -1 for a match and
/// None otherwise.
pub fn sign_match<E: AlgebraElement>(computed: &E, claimed: &E) -> Option<i8> {
    if computed == claimed {
        Some(1)
    } else if *computed == claimed.neg() {
        Some(-1)
    } else {
        None
    }
}

/// True iff the pseudoscalar commutes with every bivector g_a·g_b (a < b):
/// infinitesimal invariance under the spin group of the generator set.
pub fn pseudoscalar_invariance<E: AlgebraElement>(gens: &[E], ps: &E) -> bool {
    for a in 0..gens.len() {
        for b in 0..a {
            let bivector = gens[b].mul(&gens[a]);
            if !ps.commutes_with(&bivector) {
                return false;
            }
        }
    }
    true
}

/// True iff every element of the associative closure of `gens_a` commutes
/// with every element of the closure of `gens_b`.
pub fn commuting_subalgebras<E: AlgebraElement>(gens_a: &[E], gens_b: &[E]) -> bool {
    if gens_a.is_empty() || gens_b.is_empty() {
        return true;
    }
    let (_, basis_a) = associative_closure(gens_a);
    let (_, basis_b) = associative_closure(gens_b);
    basis_a.iter().all(|x| basis_b.iter().all(|y| x.commutes_with(y)))
}

/// Outcome of an idempotent-splitting check.
#[derive(Clone, Debug)]
pub struct IdempotentReport {
    pub is_idempotent: bool,
    /// Dimension of the corner e·A·e.
    pub corner_dim: usize,
    /// Whether the projected triple satisfies quaternion relations after
    /// rational rescaling (None when no triple was supplied or the idempotent
    /// check already failed).
    pub relations: Option<bool>,
}

/// Verify e² = e, compute the corner dimension of e·A·e for A the closure of
/// `algebra_gens`, and (optionally) check that the projections of a generator
/// triple satisfy i·j = ±k quaternion relations with consistent orientation.
pub fn idempotent_split<E: AlgebraElement>(
    e: &E,
    algebra_gens: &[E],
    triple: Option<&[E]>,
) -> IdempotentReport {
    let is_idempotent = e.mul(e) == *e;
    if !is_idempotent {
        return IdempotentReport { is_idempotent, corner_dim: 0, relations: None };
    }
    let (_, basis) = associative_closure(algebra_gens);
    let mut corner = SpanBasis::new();
    for x in &basis {
        corner.insert(e.mul(x).mul(e).coords());
    }
    let corner_dim = corner.dim();
    let relations = triple.map(|t| projected_quaternion_relations(e, t));
    IdempotentReport { is_idempotent, corner_dim, relations }
}

/// Check that q_a := λ_a·(e·t_a·e) can be rescaled so that q² = -e, the q's
/// pairwise anticommute, and q₁q₂ = εq₃ cyclically with a consistent ε = ±1.
fn projected_quaternion_relations<E: AlgebraElement>(e: &E, triple: &[E]) -> bool {
    if triple.len() != 3 {
        return false;
    }
    let mut q = Vec::new();
    for t in triple {
        let p = e.mul(t).mul(e);
        if p.is_zero() {
            return false;
        }
        // p² must be a negative rational square times e
        let p2 = p.mul(&p);
        let Some(c) = multiple_of(&p2, e) else {
            return false;
        };
        if !c.is_negative() {
            return false;
        }
        let Some(s) = rational_sqrt(&-&c) else {
            return false;
        };
        q.push(p.scale(&(rat(1) / s)));
    }
    for a in 0..3 {
        if q[a].mul(&q[a]) != e.neg() {
            return false;
        }
        for b in 0..a {
            if !q[a].anticommutator(&q[b]).is_zero() {
                return false;
            }
        }
    }
    // orientation: q1 q2 = ε q3, q2 q3 = ε q1, q3 q1 = ε q2
    for eps in [1i8, -1] {
        let scale = rat(eps as i64);
        if q[0].mul(&q[1]) == q[2].scale(&scale)
            && q[1].mul(&q[2]) == q[0].scale(&scale)
            && q[2].mul(&q[0]) == q[1].scale(&scale)
        {
            return true;
        }
    }
    false
}

/// Some(c) iff x == c·y with y nonzero.
fn multiple_of<E: AlgebraElement>(x: &E, y: &E) -> Option<Rational> {
    let yc = y.coords();
    let xc = x.coords();
    let pivot = yc.iter().position(|v| !v.is_zero())?;
    if xc[pivot].is_zero() && x.is_zero() {
        return Some(rat(0));
    }
    let c = &xc[pivot] / &yc[pivot];
    if *x == y.scale(&c) {
        Some(c)
    } else {
        None
    }
}

/// Rational square root if numerator and denominator are perfect squares.
fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer().sqrt();
    let den = r.denom().sqrt();
    if &(&num * &num) == r.numer() && &(&den * &den) == r.denom() {
        Some(Rational::new(num, den))
    } else {
        None
    }
}

/// Grade dimensions of a six-generator Clifford algebra, with the grade-3
/// component split into the two eigenspaces of multiplication by the
/// pseudoscalar: (1, 6, 15, 10, 10, 15, 6, 1).
///
/// Errors when the pseudoscalar does not square to ±1 (the grade-3 split is
/// then undefined).
pub fn grade_decomposition<E: AlgebraElement>(gens: &[E]) -> Result<Vec<usize>, String> {
    if gens.len() != 6 {
        return Err(format!("grade decomposition needs 6 generators, got {}", gens.len()));
    }
    let omega = pseudoscalar(gens);
    let omega2 = omega
        .mul(&omega)
        .try_scalar()
        .ok_or_else(|| "pseudoscalar does not square to a scalar".to_string())?;
    if omega2 != rat(1) && omega2 != rat(-1) {
        return Err("pseudoscalar squares to a non-unit scalar".to_string());
    }
    let mut dims = Vec::new();
    let mut grade3: Vec<E> = Vec::new();
    for k in 0..=6usize {
        let mut span = SpanBasis::new();
        let mut products = Vec::new();
        for mask in 0u8..64 {
            if mask.count_ones() as usize != k {
                continue;
            }
            let mut p = gens[0].one_like();
            for b in 0..6 {
                if mask & (1 << b) != 0 {
                    p = p.mul(&gens[b]);
                }
            }
            products.push(p);
        }
        for p in &products {
            span.insert(p.coords());
        }
        if k == 3 {
            grade3 = products;
        }
        dims.push(span.dim());
    }
    // split grade 3 under left multiplication by the pseudoscalar
    let g3_dim = dims[3];
    let basis: Vec<Vec<Rational>> = {
        let mut span = SpanBasis::new();
        let mut kept = Vec::new();
        for p in &grade3 {
            let c = p.coords();
            if span.insert(c.clone()) {
                kept.push(c);
            }
        }
        kept
    };
    let images: Vec<Vec<Rational>> = {
        let mut out = Vec::new();
        let mut span = SpanBasis::new();
        for p in &grade3 {
            if span.insert(p.coords()) {
                out.push(omega.mul(p).coords());
            }
        }
        out
    };
    let m = express_all_in_basis(&basis, &images)
        .ok_or_else(|| "pseudoscalar does not preserve grade 3".to_string())?;
    let (d_plus, d_minus) = if omega2 == rat(1) {
        let n = g3_dim;
        let mm = ExactMatrix::from_rows(m.clone());
        let id = ExactMatrix::identity_like(n, &rat(0));
        // x ↦ ωx has matrix columns m[i]; eigenspaces of M ∓ I
        (mm.sub(&id).nullspace().len(), mm.add(&id).nullspace().len())
    } else {
        // ω² = -1: the eigenvalues ±i live over the Gaussian rationals
        let n = g3_dim;
        let lift = |rows: &Vec<Vec<Rational>>| {
            ExactMatrix::from_rows(
                rows.iter()
                    .map(|r| r.iter().map(|x| ComplexRational::from_real(x.clone())).collect())
                    .collect(),
            )
        };
        let mm = lift(&m);
        let i_mat = ExactMatrix::identity_like(n, &ComplexRational::zero()).scale(&ComplexRational::i());
        (mm.sub(&i_mat).nullspace().len(), mm.add(&i_mat).nullspace().len())
    };
    Ok(vec![dims[0], dims[1], dims[2], d_plus, d_minus, dims[4], dims[5], dims[6]])
}

/// Express each target in the given basis; returns the matrix M with
/// M[i][j] = coefficient of basis[j] in target[i], or None if some target
/// falls outside the span.
fn express_all_in_basis(
    basis: &[Vec<Rational>],
    targets: &[Vec<Rational>],
) -> Option<Vec<Vec<Rational>>> {
    let ambient = basis.first()?.len();
    let b_cols = basis.len();
    let t_cols = targets.len();
    // augmented system [B | T] with columns as vectors
    let mut rows = Vec::with_capacity(ambient);
    for r in 0..ambient {
        let mut row = Vec::with_capacity(b_cols + t_cols);
        for b in basis {
            row.push(b[r].clone());
        }
        for t in targets {
            row.push(t[r].clone());
        }
        rows.push(row);
    }
    let (red, pivots) = ExactMatrix::from_rows(rows).rref();
    // consistency: no pivot may land in the target block
    if pivots.iter().any(|&p| p >= b_cols) {
        return None;
    }
    let mut out = vec![vec![rat(0); b_cols]; t_cols];
    for (prow, &pcol) in pivots.iter().enumerate() {
        for t in 0..t_cols {
            out[t][pcol] = red.at(prow, b_cols + t).clone();
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{AbElement, AbstractClifford, MultiVector};

    fn gammas() -> [MultiVector; 4] {
        [
            MultiVector::gamma(0),
            MultiVector::gamma(1),
            MultiVector::gamma(2),
            MultiVector::gamma(3),
        ]
    }

    #[test]
    fn cl06_gamma_set() {
        let [g0, g1, g2, g3] = gammas();
        let (i, j, k) = (MultiVector::unit_i(), MultiVector::unit_j(), MultiVector::unit_k());
        let gens =
            vec![g1, g2, g3, i.mul(&g0), j.mul(&g0), k.mul(&g0)];
        let report = verify_generators(&gens, (0, 6));
        assert!(report.pass(), "{report:?}");
        assert_eq!(report.dimension, 64);
        // pseudoscalar is ±iγ₅
        let ps = pseudoscalar(&gens);
        let ig5 = MultiVector::unit_i().mul(&MultiVector::gamma5());
        assert!(sign_match(&ps, &ig5).is_some());
        assert!(pseudoscalar_invariance(&gens, &ps));
    }

    #[test]
    fn dirac_cl41_set() {
        let [g0, g1, g2, g3] = gammas();
        let i = MultiVector::unit_i();
        let gens = vec![
            g0,
            i.mul(&g1),
            i.mul(&g2),
            i.mul(&g3),
            i.mul(&MultiVector::gamma5()),
        ];
        let report = verify_generators(&gens, (4, 1));
        assert!(report.pass(), "{report:?}");
        assert_eq!(report.dimension, 32);
        // product of the five generators is ±i, central in the closure
        let ps = pseudoscalar(&gens);
        assert!(sign_match(&ps, &i).is_some());
        let (_, basis) = associative_closure(&gens);
        assert!(basis.iter().all(|x| ps.commutes_with(x)));
    }

    #[test]
    fn abstract_cl33_from_cl06() {
        let alg = AbstractClifford::new(vec![-1; 6]);
        let g = |mask: u8| AbElement::from_mask(alg.clone(), mask);
        // A, B, C, ABCD, ABCE, ABCF
        let gens = vec![
            g(0b000001),
            g(0b000010),
            g(0b000100),
            g(0b001111),
            g(0b010111),
            g(0b100111),
        ];
        let report = verify_generators(&gens, (3, 3));
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn abstract_cl42_from_cl06() {
        let alg = AbstractClifford::new(vec![-1; 6]);
        let g = |mask: u8| AbElement::from_mask(alg.clone(), mask);
        // A, B, DEF, CEF, CDF, CDE
        let gens = vec![
            g(0b000001),
            g(0b000010),
            g(0b111000),
            g(0b110100),
            g(0b101100),
            g(0b011100),
        ];
        let report = verify_generators(&gens, (4, 2));
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn lie_closure_examples() {
        let (i, j, k) = (MultiVector::unit_i(), MultiVector::unit_j(), MultiVector::unit_k());
        assert_eq!(lie_closure(&[i.clone(), j, k]).0, 3);
        // broken u(2): iγ₀, iγ₅, γ₀γ₅ close to su(2); adjoining i gives u(2)
        let g0 = MultiVector::gamma(0);
        let g5 = MultiVector::gamma5();
        let su2 = vec![i.mul(&g0), i.mul(&g5), g0.mul(&g5)];
        assert_eq!(lie_closure(&su2).0, 3);
        let mut u2 = su2;
        u2.push(i.clone());
        assert_eq!(lie_closure(&u2).0, 4);
        // the trivial one-element case
        assert_eq!(lie_closure(&[MultiVector::one()]).0, 1);
    }

    #[test]
    fn commuting_spin13_copies() {
        let [g0, g1, g2, g3] = gammas();
        let bivectors = vec![
            g0.mul(&g1),
            g0.mul(&g2),
            g0.mul(&g3),
            g1.mul(&g2),
            g1.mul(&g3),
            g2.mul(&g3),
        ];
        let (i, j, k) = (MultiVector::unit_i(), MultiVector::unit_j(), MultiVector::unit_k());
        let big = g0.mul(&g1).mul(&g2).mul(&g3);
        let second = vec![i.mul(&big), j.mul(&big), k.mul(&big), i.clone(), j, k];
        assert!(commuting_subalgebras(&bivectors, &second));
        // γ₁ vs γ₂ anticommute, so they do not commute
        assert!(!commuting_subalgebras(
            std::slice::from_ref(&g1),
            std::slice::from_ref(&g2)
        ));
        assert!(commuting_subalgebras(&[g1.clone()], &[MultiVector::one()]));
    }

    #[test]
    fn idempotent_corners_of_cl03() {
        let [_, g1, g2, g3] = gammas();
        let psi = g1.mul(&g2).mul(&g3);
        let half = crate::exactmath::ratio(1, 2);
        let e_plus = MultiVector::one().add(&psi).scale(&half);
        let e_minus = MultiVector::one().sub(&psi).scale(&half);
        assert_eq!(e_plus.add(&e_minus), MultiVector::one());
        assert!(e_plus.mul(&e_minus).is_zero());
        let algebra = vec![g1.clone(), g2.clone(), g3.clone()];
        // first listed triple lives in the (1-ψ)/2 corner
        let triple_minus = vec![
            g1.add(&g2.mul(&g3)),
            g2.add(&g3.mul(&g1)),
            g3.add(&g1.mul(&g2)),
        ];
        let triple_plus = vec![
            g1.add(&g3.mul(&g2)),
            g2.add(&g1.mul(&g3)),
            g3.add(&g2.mul(&g1)),
        ];
        let rm = idempotent_split(&e_minus, &algebra, Some(&triple_minus));
        assert!(rm.is_idempotent);
        assert_eq!(rm.corner_dim, 4);
        assert_eq!(rm.relations, Some(true));
        let rp = idempotent_split(&e_plus, &algebra, Some(&triple_plus));
        assert!(rp.is_idempotent);
        assert_eq!(rp.corner_dim, 4);
        assert_eq!(rp.relations, Some(true));
        // e = 1: corner is the whole algebra
        let whole = idempotent_split(&MultiVector::one(), &algebra, None);
        assert_eq!(whole.corner_dim, 8);
        // a non-idempotent input is reported as such
        let bad = idempotent_split(&g1, &algebra, None);
        assert!(!bad.is_idempotent);
    }

    #[test]
    fn grade_decomposition_cl06_and_cl33() {
        let alg = AbstractClifford::new(vec![-1; 6]);
        let gens: Vec<AbElement> =
            (0..6).map(|i| AbElement::generator(alg.clone(), i)).collect();
        let dims = grade_decomposition(&gens).unwrap();
        assert_eq!(dims, vec![1, 6, 15, 10, 10, 15, 6, 1]);
        assert_eq!(dims.iter().sum::<usize>(), 64);

        let alg33 = AbstractClifford::new(vec![1, 1, 1, -1, -1, -1]);
        let gens33: Vec<AbElement> =
            (0..6).map(|i| AbElement::generator(alg33.clone(), i)).collect();
        let dims33 = grade_decomposition(&gens33).unwrap();
        assert_eq!(dims33, vec![1, 6, 15, 10, 10, 15, 6, 1]);
    }

    #[test]
    fn pseudoscalar_invariance_degenerate_single_generator() {
        let g1 = MultiVector::gamma(1);
        let ps = pseudoscalar(std::slice::from_ref(&g1));
        assert!(pseudoscalar_invariance(&[g1], &ps));
    }

    #[test]
    fn spec_span_closure_examples() {
        // closure of the five Cl(4,1) generators is 32-dimensional; six
        // Cl(0,6) generators give 64 — both covered above. Here: e1, e2,
        // e1+e2 span two dimensions.
        let rows = vec![
            vec![rat(1), rat(0)],
            vec![rat(0), rat(1)],
            vec![rat(1), rat(1)],
        ];
        assert_eq!(crate::exactmath::span_dimension(&rows), 2);
    }
}
