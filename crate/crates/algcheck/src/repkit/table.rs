//! Character table data type, orthogonality verification, Frobenius–Schur
//! indicators, and exact inner products.

use std::sync::Arc;

use num_traits::Zero;

use crate::exactmath::{rat, Cyclotomic};
use crate::permgroup::{ConjugacyData, PermGroup};

/// One irreducible complex character.
#[derive(Clone, Debug)]
pub struct CharRow {
    /// Degree-based name with a/b tie suffixes, e.g. "3a".
    pub name: String,
    pub degree: usize,
    /// Exact value on each conjugacy class, in class order.
    pub values: Vec<Cyclotomic>,
}

/// Exact complex character table of a finite group.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group: Arc<PermGroup>,
    pub conj: ConjugacyData,
    /// The Dixon prime used for the modular computation.
    pub prime: u64,
    /// Rows ordered by degree (ties deterministic).
    pub rows: Vec<CharRow>,
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.conj.num_classes()
    }

    pub fn row_by_name(&self, name: &str) -> Option<&CharRow> {
        self.rows.iter().find(|r| r.name == name)
    }

    /// Exact inner product (1/|G|) Σ_j |C_j| · a(g_j) · b(g_j⁻¹).
    pub fn inner_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for j in 0..self.num_classes() {
            let jinv = self.conj.inverse_class(j);
            let term = a[j].mul(&b[jinv]).scale(&rat(self.conj.sizes[j] as i64));
            acc = acc.add(&term);
        }
        acc.scale(&(rat(1) / rat(self.group.order() as i64)))
    }

    /// Multiplicity of row i in the class function `values`; errors if the
    /// inner product is not a non-negative integer.
    pub fn multiplicity(&self, values: &[Cyclotomic], i: usize) -> Result<usize, String> {
        let ip = self.inner_product(values, &self.rows[i].values);
        let r = ip
            .try_rational()
            .ok_or_else(|| format!("non-rational multiplicity against {}", self.rows[i].name))?;
        if !r.is_integer() || r < rat(0) {
            return Err(format!("non-integer multiplicity {r} against {}", self.rows[i].name));
        }
        Ok(r.to_integer().try_into().map_err(|_| "multiplicity overflow".to_string())?)
    }

    /// Decompose a class function into irreducibles; verifies the dimension
    /// balance Σ mᵢdᵢ = values(1).
    pub fn decompose(&self, values: &[Cyclotomic]) -> Result<Vec<usize>, String> {
        let mults = (0..self.rows.len())
            .map(|i| self.multiplicity(values, i))
            .collect::<Result<Vec<_>, _>>()?;
        let id_class = 0usize;
        let total: usize = mults.iter().zip(&self.rows).map(|(m, r)| m * r.degree).sum();
        let claimed = values[id_class]
            .try_rational()
            .ok_or("character degree is not rational")?;
        if rat(total as i64) != claimed {
            return Err(format!("dimension balance failed: {total} vs {claimed}"));
        }
        Ok(mults)
    }

    /// Render a decomposition like "1 + 3a + 3b + 4a".
    pub fn format_decomposition(&self, mults: &[usize]) -> String {
        let mut parts = Vec::new();
        for (m, row) in mults.iter().zip(&self.rows) {
            match m {
                0 => {}
                1 => parts.push(row.name.clone()),
                _ => parts.push(format!("{}{}", m, row.name)),
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }

    /// Row and column orthogonality, plus Σd² = |G|.
    pub fn verify_orthogonality(&self) -> Result<(), String> {
        let r = self.rows.len();
        if r != self.num_classes() {
            return Err(format!("{} rows vs {} classes", r, self.num_classes()));
        }
        let sum_sq: usize = self.rows.iter().map(|row| row.degree * row.degree).sum();
        if sum_sq != self.group.order() {
            return Err(format!("Σd² = {sum_sq} ≠ |G| = {}", self.group.order()));
        }
        for i in 0..r {
            for j in 0..=i {
                let ip = self.inner_product(&self.rows[i].values, &self.rows[j].values);
                let expected = Cyclotomic::from_int(if i == j { 1 } else { 0 });
                if ip != expected {
                    return Err(format!(
                        "row orthogonality failed for ({}, {}): {}",
                        self.rows[i].name, self.rows[j].name, ip
                    ));
                }
            }
        }
        Ok(())
    }

    /// Frobenius–Schur indicator of each row: (1/|G|) Σ_g χ(g²).
    pub fn fs_indicators(&self) -> Result<Vec<i8>, String> {
        let mut out = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let mut acc = Cyclotomic::zero();
            for j in 0..self.num_classes() {
                let sq = self.conj.power_class(j, 2);
                acc = acc.add(&row.values[sq].scale(&rat(self.conj.sizes[j] as i64)));
            }
            let ind = acc.scale(&(rat(1) / rat(self.group.order() as i64)));
            let r = ind
                .try_rational()
                .ok_or_else(|| format!("non-rational FS indicator for {}", row.name))?;
            let val = if r == rat(1) {
                1
            } else if r == rat(-1) {
                -1
            } else if r.is_zero() {
                0
            } else {
                return Err(format!("FS indicator {r} outside {{-1,0,1}} for {}", row.name));
            };
            out.push(val);
        }
        Ok(out)
    }

    /// Index of the conjugate row (values composed with inversion).
    pub fn conjugate_row(&self, i: usize) -> Option<usize> {
        let conj_values: Vec<Cyclotomic> =
            self.rows[i].values.iter().map(|v| v.conj()).collect();
        self.rows.iter().position(|r| r.values == conj_values)
    }

    /// The permutation character of an action: fixed points per class.
    pub fn permutation_character(&self, fixed_by_element: &[usize]) -> Vec<Cyclotomic> {
        self.conj
            .reps
            .iter()
            .map(|&rep| Cyclotomic::from_int(fixed_by_element[rep] as i64))
            .collect()
    }

    /// Pointwise product of two class functions (tensor product character).
    pub fn tensor(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Vec<Cyclotomic> {
        a.iter().zip(b).map(|(x, y)| x.mul(y)).collect()
    }

    /// Symmetric and antisymmetric square of a character:
    /// χ_S²(g) = (χ(g)² + χ(g²))/2, χ_Λ²(g) = (χ(g)² - χ(g²))/2.
    pub fn sym_alt_square(&self, values: &[Cyclotomic]) -> (Vec<Cyclotomic>, Vec<Cyclotomic>) {
        let half = crate::exactmath::ratio(1, 2);
        let mut sym = Vec::with_capacity(values.len());
        let mut alt = Vec::with_capacity(values.len());
        for j in 0..values.len() {
            let sq_class = self.conj.power_class(j, 2);
            let v2 = values[j].mul(&values[j]);
            sym.push(v2.add(&values[sq_class]).scale(&half));
            alt.push(v2.sub(&values[sq_class]).scale(&half));
        }
        (sym, alt)
    }

    /// Central elements: classes of size 1.
    pub fn central_classes(&self) -> Vec<usize> {
        (0..self.num_classes()).filter(|&j| self.conj.sizes[j] == 1).collect()
    }

    /// True if the row represents the central involution faithfully
    /// (χ(z) = -χ(1) on the unique central class of order 2).
    pub fn is_fermionic(&self, i: usize, central_involution_class: usize) -> bool {
        let deg = rat(self.rows[i].degree as i64);
        self.rows[i].values[central_involution_class] == Cyclotomic::from_rational(-deg)
    }
}

/// Class fusion: for each class of the subgroup table, the class of the
/// parent table containing it. Both tables must live on the same point set.
pub fn fusion_map(parent: &CharacterTable, sub: &CharacterTable) -> Result<Vec<usize>, String> {
    sub.conj
        .reps
        .iter()
        .map(|&hrep| {
            let perm = sub.group.element(hrep);
            let gidx = parent
                .group
                .index_of(perm)
                .ok_or("subgroup element not contained in the parent group")?;
            Ok(parent.conj.class_of[gidx])
        })
        .collect()
}

/// Restrict a class function on the parent to the subgroup via the fusion map.
pub fn restrict_values(values: &[Cyclotomic], fusion: &[usize]) -> Vec<Cyclotomic> {
    fusion.iter().map(|&gclass| values[gclass].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::super::dixon::character_table;
    use super::*;
    use crate::permgroup::Perm;

    fn sym3_table() -> CharacterTable {
        let a = Perm::from_cycles(3, &[&[0, 1, 2]]);
        let b = Perm::from_cycles(3, &[&[0, 1]]);
        character_table(Arc::new(PermGroup::close(vec![a, b], 100).unwrap())).unwrap()
    }

    #[test]
    fn orthogonality_and_indicators() {
        let t = sym3_table();
        t.verify_orthogonality().unwrap();
        // all Sym(3) characters are real: indicators +1
        assert_eq!(t.fs_indicators().unwrap(), vec![1, 1, 1]);
        // a trivial row exists among the degree-1 characters
        assert!(t
            .rows
            .iter()
            .any(|r| r.degree == 1 && r.values.iter().all(|v| *v == Cyclotomic::from_int(1))));
    }

    #[test]
    fn restriction_to_self_is_identity() {
        let t = sym3_table();
        let fusion = fusion_map(&t, &t).unwrap();
        assert_eq!(fusion, vec![0, 1, 2]);
        let two = &t.rows[2].values;
        let restricted = restrict_values(two, &fusion);
        assert_eq!(t.decompose(&restricted).unwrap(), vec![0, 0, 1]);
    }

    #[test]
    fn sym_alt_square_degrees() {
        let t = sym3_table();
        let two = t.rows[2].values.clone();
        let (sym, alt) = t.sym_alt_square(&two);
        assert_eq!(sym[0], Cyclotomic::from_int(3));
        assert_eq!(alt[0], Cyclotomic::from_int(1));
        // Λ² of the 2-dim reflection character is the sign character
        let alt_m = t.decompose(&alt).unwrap();
        assert_eq!(alt_m.iter().sum::<usize>(), 1);
    }
}
