//! Character tables by Dixon's modular method: class-multiplication
//! coefficients, simultaneous eigenvectors over GF(p) with p ≡ 1 mod
//! exponent(G), then lifting of eigenvalue multiplicities to exact
//! cyclotomic character values.

use std::sync::Arc;

use crate::exactmath::{rat, Cyclotomic, Rational};
use crate::permgroup::{ConjugacyData, PermGroup};

use super::table::{CharRow, CharacterTable};

// ---- arithmetic mod a small prime ----------------------------------------

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime p ≡ 1 (mod modulus) with p² > 4·order (p > 2√order), the
/// standard sufficient condition for unique lifting of degrees and
/// eigenvalue multiplicities.
pub fn dixon_prime(modulus: u64, order: u64) -> Option<u64> {
    let mut p = modulus + 1;
    for _ in 0..100_000 {
        if is_prime(p) && p * p > 4 * order {
            return Some(p);
        }
        p += modulus;
    }
    None
}

fn primitive_root(p: u64) -> u64 {
    // factor p-1
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    'candidates: for g in 2..p {
        for &f in &factors {
            if pow_mod(g, (p - 1) / f, p) == 1 {
                continue 'candidates;
            }
        }
        return g;
    }
    unreachable!("no primitive root found");
}

/// Right nullspace of a square matrix over GF(p).
fn nullspace_mod(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a: Vec<Vec<u64>> = m.to_vec();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pr) = (row..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(pr, row);
        let inv = inv_mod(a[row][col], p);
        for c in 0..cols {
            a[row][c] = a[row][c] * inv % p;
        }
        for r in 0..rows {
            if r != row && a[r][col] != 0 {
                let f = a[r][col];
                for c in 0..cols {
                    a[r][c] = (a[r][c] + (p - f) * a[row][c]) % p;
                }
            }
        }
        pivots.push((row, col));
        row += 1;
    }
    let pivot_cols: std::collections::HashSet<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for &(prow, pcol) in &pivots {
            v[pcol] = (p - a[prow][free]) % p;
        }
        basis.push(v);
    }
    basis
}

/// Solve W·x = v where the columns of W are the (independent) basis vectors.
fn solve_in_basis(basis: &[Vec<u64>], v: &[u64], p: u64) -> Option<Vec<u64>> {
    let dim = v.len();
    let b = basis.len();
    let mut aug: Vec<Vec<u64>> = (0..dim)
        .map(|r| {
            let mut row: Vec<u64> = basis.iter().map(|w| w[r]).collect();
            row.push(v[r]);
            row
        })
        .collect();
    let mut row = 0;
    let mut coeffs = vec![0u64; b];
    let mut pivot_of_col = vec![usize::MAX; b];
    for col in 0..b {
        let Some(pr) = (row..dim).find(|&r| aug[r][col] != 0) else {
            continue;
        };
        aug.swap(pr, row);
        let inv = inv_mod(aug[row][col], p);
        for c in 0..=b {
            aug[row][c] = aug[row][c] * inv % p;
        }
        for r in 0..dim {
            if r != row && aug[r][col] != 0 {
                let f = aug[r][col];
                for c in 0..=b {
                    aug[r][c] = (aug[r][c] + (p - f) * aug[row][c]) % p;
                }
            }
        }
        pivot_of_col[col] = row;
        row += 1;
    }
    // consistency
    for r in row..dim {
        if aug[r][b] != 0 {
            return None;
        }
    }
    for col in 0..b {
        if pivot_of_col[col] != usize::MAX {
            coeffs[col] = aug[pivot_of_col[col]][b];
        }
    }
    Some(coeffs)
}

fn mat_vec(m: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0u64, |acc, (a, b)| (acc + a * b) % p))
        .collect()
}

// ---- the Dixon computation ------------------------------------------------

/// Class multiplication coefficients a[j][k][l] = #{(x,y) in C_j x C_k :
/// x·y = rep_l}.
fn class_coefficients(group: &PermGroup, conj: &ConjugacyData) -> Vec<Vec<Vec<u64>>> {
    let r = conj.num_classes();
    let mut a = vec![vec![vec![0u64; r]; r]; r];
    for l in 0..r {
        let target = conj.reps[l];
        for x in 0..group.order() {
            let j = conj.class_of[x];
            let y = group.mul_idx(group.inv_idx(x), target);
            let k = conj.class_of[y];
            a[j][k][l] += 1;
        }
    }
    a
}

/// Compute the exact character table of an enumerated permutation group.
pub fn character_table(group: Arc<PermGroup>) -> Result<CharacterTable, String> {
    let order = group.order() as u64;
    if order > 10_000 {
        return Err(format!("group order {order} exceeds the table cap"));
    }
    let conj = group.conjugacy_classes();
    let r = conj.num_classes();
    let exponent = group.exponent() as u64;
    let p = dixon_prime(exponent, order)
        .ok_or_else(|| "no suitable prime found below the search bound".to_string())?;
    let coeffs = class_coefficients(&group, &conj);

    // matrices M_j with (M_j)[k][l] = a[j][k][l]; common right eigenvectors
    // are the rows of scaled character values
    let matrices: Vec<Vec<Vec<u64>>> = (0..r)
        .map(|j| (0..r).map(|k| (0..r).map(|l| coeffs[j][k][l] % p).collect()).collect())
        .collect();

    // split the full space into common eigenspaces
    let mut subspaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect()];
    for m in matrices.iter().skip(1) {
        if subspaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for basis in subspaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            // restriction R with M·w_c = W·R[.][c]
            let d = basis.len();
            let mut restr = vec![vec![0u64; d]; d];
            for (c, w) in basis.iter().enumerate() {
                let v = mat_vec(m, w, p);
                let x = solve_in_basis(&basis, &v, p)
                    .ok_or("class matrix does not preserve eigenspace")?;
                for (rr, xv) in x.into_iter().enumerate() {
                    restr[rr][c] = xv;
                }
            }
            // split by eigenvalues of the restriction
            let mut found = 0usize;
            for lambda in 0..p {
                if found == d {
                    break;
                }
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|rr| {
                        (0..d)
                            .map(|cc| {
                                let diag = if rr == cc { lambda } else { 0 };
                                (restr[rr][cc] + p - diag) % p
                            })
                            .collect()
                    })
                    .collect();
                let kernel = nullspace_mod(&shifted, p);
                if kernel.is_empty() {
                    continue;
                }
                found += kernel.len();
                let sub: Vec<Vec<u64>> = kernel
                    .iter()
                    .map(|k| {
                        let mut v = vec![0u64; r];
                        for (ci, coef) in k.iter().enumerate() {
                            for (vi, b) in basis[ci].iter().enumerate() {
                                v[vi] = (v[vi] + coef * b) % p;
                            }
                        }
                        v
                    })
                    .collect();
                next.push(sub);
            }
            if found != d {
                return Err("eigenspace splitting lost dimensions".into());
            }
        }
        subspaces = next;
    }
    if subspaces.len() != r || subspaces.iter().any(|s| s.len() != 1) {
        return Err("class matrices did not split into one-dimensional eigenspaces".into());
    }

    // identity class index (class of the identity element)
    let id_class = conj.class_of[group.identity_index()];
    debug_assert_eq!(id_class, 0);

    let isqrt_order = (order as f64).sqrt() as u64 + 1;
    let mut rows_mod_p: Vec<(u64, Vec<u64>)> = Vec::new(); // (degree, chi mod p per class)
    for sub in &subspaces {
        let u = &sub[0];
        let norm = inv_mod(u[id_class], p);
        let omega: Vec<u64> = u.iter().map(|x| x * norm % p).collect();
        // 1/d² = (1/|G|) Σ_j ω_j ω_{j*} / |C_j|
        let mut s = 0u64;
        for j in 0..r {
            let jinv = conj.inverse_class(j);
            let term = omega[j] * omega[jinv] % p * inv_mod(conj.sizes[j] as u64 % p, p) % p;
            s = (s + term) % p;
        }
        let d2 = order % p * inv_mod(s, p) % p;
        let degree = (1..=isqrt_order)
            .find(|d| d * d % p == d2)
            .ok_or("no degree lifts the modular value")?;
        let chi: Vec<u64> = (0..r)
            .map(|j| degree % p * omega[j] % p * inv_mod(conj.sizes[j] as u64 % p, p) % p)
            .collect();
        rows_mod_p.push((degree, chi));
    }

    // lift to cyclotomic values
    let u_root = primitive_root(p);
    let mut rows: Vec<CharRow> = Vec::new();
    for (degree, chi) in &rows_mod_p {
        let mut values = Vec::with_capacity(r);
        for j in 0..r {
            let m = conj.orders[j] as u64;
            let z = pow_mod(u_root, (p - 1) / m, p);
            let m_inv = inv_mod(m % p, p);
            let mut terms: Vec<(i64, Rational)> = Vec::new();
            for t in 0..m {
                // multiplicity of the eigenvalue ζ_m^t
                let mut acc = 0u64;
                for k in 0..m {
                    let cls = conj.power_class(j, k as usize);
                    let zpow = pow_mod(z, (t * k) % (p - 1), p);
                    // z^{-tk} = inverse
                    acc = (acc + chi[cls] * inv_mod(zpow, p)) % p;
                }
                let mult = acc * m_inv % p;
                if mult > *degree {
                    return Err(format!(
                        "eigenvalue multiplicity {mult} exceeds the degree {degree}"
                    ));
                }
                if mult > 0 {
                    terms.push((t as i64, rat(mult as i64)));
                }
            }
            values.push(Cyclotomic::reduce(m, &terms)?);
        }
        rows.push(CharRow { name: String::new(), degree: *degree as usize, values });
    }

    // deterministic row order: by degree, then by canonical values
    rows.sort_by(|a, b| {
        a.degree
            .cmp(&b.degree)
            .then_with(|| value_sort_key(&a.values).cmp(&value_sort_key(&b.values)))
    });
    // a/b suffixes for repeated degrees
    let mut named: Vec<CharRow> = Vec::new();
    let mut i = 0;
    while i < rows.len() {
        let mut j = i;
        while j < rows.len() && rows[j].degree == rows[i].degree {
            j += 1;
        }
        let ties = j - i;
        for (offset, row) in rows[i..j].iter().enumerate() {
            let name = if ties == 1 {
                format!("{}", row.degree)
            } else {
                format!("{}{}", row.degree, (b'a' + offset as u8) as char)
            };
            named.push(CharRow { name, degree: row.degree, values: row.values.clone() });
        }
        i = j;
    }

    let table = CharacterTable { group, conj, prime: p, rows: named };
    table.verify_orthogonality()?;
    Ok(table)
}

/// Deterministic comparison key for a row of cyclotomic values.
fn value_sort_key(values: &[Cyclotomic]) -> Vec<(u64, Vec<Rational>)> {
    values.iter().map(|v| (v.order(), v.coeffs().to_vec())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::Perm;

    #[test]
    fn prime_selection() {
        // exponent 12, order 24: need p ≡ 1 mod 12 and p > 2√24 ≈ 9.8
        assert_eq!(dixon_prime(12, 24), Some(13));
        // exponent 120, order 720: 241
        assert_eq!(dixon_prime(120, 720), Some(241));
    }

    #[test]
    fn sym3_table() {
        let a = Perm::from_cycles(3, &[&[0, 1, 2]]);
        let b = Perm::from_cycles(3, &[&[0, 1]]);
        let g = Arc::new(PermGroup::close(vec![a, b], 100).unwrap());
        let t = character_table(g).unwrap();
        let degrees: Vec<usize> = t.rows.iter().map(|r| r.degree).collect();
        assert_eq!(degrees, vec![1, 1, 2]);
        // standard values: the degree-2 character is (2, 0, -1) on classes
        // (e, transpositions, 3-cycles)
        let two = &t.rows[2];
        assert_eq!(two.values[0], Cyclotomic::from_int(2));
        // classes ordered by element order: e, order-2 (size 3), order-3
        assert_eq!(two.values[1], Cyclotomic::from_int(0));
        assert_eq!(two.values[2], Cyclotomic::from_int(-1));
    }

    #[test]
    fn trivial_group_table() {
        let g = Arc::new(PermGroup::close(vec![Perm::identity(1)], 10).unwrap());
        let t = character_table(g).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.rows[0].degree, 1);
    }

    #[test]
    fn sym4_table_degrees() {
        let a = Perm::from_cycles(4, &[&[0, 1, 2, 3]]);
        let b = Perm::from_cycles(4, &[&[0, 1]]);
        let g = Arc::new(PermGroup::close(vec![a, b], 100).unwrap());
        let t = character_table(g).unwrap();
        let degrees: Vec<usize> = t.rows.iter().map(|r| r.degree).collect();
        assert_eq!(degrees, vec![1, 1, 2, 3, 3]);
        assert_eq!(degrees.iter().map(|d| d * d).sum::<usize>(), 24);
    }
}
