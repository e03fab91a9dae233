//! Small dense matrices over the finite fields, matrix groups enumerated by
//! closure, and their permutation images on nonzero vectors.

use std::collections::HashMap;

use crate::exactmath::{FieldId, GFElement};
use crate::permgroup::{enumerate_group, Perm, PermGroup};

/// Square matrix over one finite field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GFMatrix {
    pub n: usize,
    pub field: FieldId,
    /// Row-major entries.
    pub entries: Vec<GFElement>,
}

impl GFMatrix {
    pub fn from_rows(field: FieldId, rows: &[&[u64]]) -> GFMatrix {
        let n = rows.len();
        let entries = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), n);
                row.iter().map(|&v| GFElement::new(field, v))
            })
            .collect();
        GFMatrix { n, field, entries }
    }

    pub fn identity(field: FieldId, n: usize) -> GFMatrix {
        let mut m = GFMatrix {
            n,
            field,
            entries: vec![GFElement::zero(field); n * n],
        };
        for k in 0..n {
            m.entries[k * n + k] = GFElement::one(field);
        }
        m
    }

    pub fn scalar(field: FieldId, n: usize, value: GFElement) -> GFMatrix {
        let mut m = GFMatrix::identity(field, n);
        for k in 0..n {
            m.entries[k * n + k] = value;
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> GFElement {
        self.entries[r * self.n + c]
    }

    pub fn mul(&self, rhs: &GFMatrix) -> GFMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut entries = vec![GFElement::zero(self.field); n * n];
        for r in 0..n {
            for c in 0..n {
                let mut acc = GFElement::zero(self.field);
                for k in 0..n {
                    acc = acc.add(&self.at(r, k).mul(&rhs.at(k, c)));
                }
                entries[r * n + c] = acc;
            }
        }
        GFMatrix { n, field: self.field, entries }
    }

    /// Left action on a column vector.
    pub fn apply(&self, v: &[GFElement]) -> Vec<GFElement> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|r| {
                let mut acc = GFElement::zero(self.field);
                for (k, x) in v.iter().enumerate() {
                    acc = acc.add(&self.at(r, k).mul(x));
                }
                acc
            })
            .collect()
    }

    /// Determinant by cofactor expansion (n ≤ 3 in all uses).
    pub fn det(&self) -> GFElement {
        match self.n {
            1 => self.at(0, 0),
            2 => self.at(0, 0).mul(&self.at(1, 1)).sub(&self.at(0, 1).mul(&self.at(1, 0))),
            3 => {
                let a = self.at(0, 0).mul(
                    &self.at(1, 1).mul(&self.at(2, 2)).sub(&self.at(1, 2).mul(&self.at(2, 1))),
                );
                let b = self.at(0, 1).mul(
                    &self.at(1, 0).mul(&self.at(2, 2)).sub(&self.at(1, 2).mul(&self.at(2, 0))),
                );
                let c = self.at(0, 2).mul(
                    &self.at(1, 0).mul(&self.at(2, 1)).sub(&self.at(1, 1).mul(&self.at(2, 0))),
                );
                a.sub(&b).add(&c)
            }
            _ => panic!("determinant only implemented for n <= 3"),
        }
    }
}

/// All nonzero column vectors of the n-dimensional space, in a fixed order.
pub fn nonzero_vectors(field: FieldId, n: usize) -> Vec<Vec<GFElement>> {
    let q = field.size();
    let total = q.pow(n as u32);
    (1..total)
        .map(|code| {
            let mut v = Vec::with_capacity(n);
            let mut c = code;
            for _ in 0..n {
                v.push(GFElement::new(field, c % q));
                c /= q;
            }
            v
        })
        .collect()
}

/// Enumerated matrix group with its action on nonzero vectors.
#[derive(Clone, Debug)]
pub struct GFMatrixGroup {
    pub field: FieldId,
    pub dim: usize,
    pub gens: Vec<GFMatrix>,
    pub elements: Vec<GFMatrix>,
    index: HashMap<GFMatrix, usize>,
    pub vectors: Vec<Vec<GFElement>>,
    vector_index: HashMap<Vec<GFElement>, usize>,
}

impl GFMatrixGroup {
    pub fn close(gens: Vec<GFMatrix>, cap: usize) -> Result<GFMatrixGroup, String> {
        let field = gens.first().map(|g| g.field).ok_or("no generators")?;
        let dim = gens[0].n;
        let identity = GFMatrix::identity(field, dim);
        let elements = enumerate_group(&gens, |a, b| a.mul(b), identity, cap)?;
        let index = elements.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let vectors = nonzero_vectors(field, dim);
        let vector_index = vectors.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        Ok(GFMatrixGroup { field, dim, gens, elements, index, vectors, vector_index })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, m: &GFMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn vector_index(&self, v: &[GFElement]) -> Option<usize> {
        self.vector_index.get(v).copied()
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> Vec<&GFMatrix> {
        self.elements
            .iter()
            .filter(|m| self.gens.iter().all(|g| m.mul(g) == g.mul(m)))
            .collect()
    }

    /// Orbit sizes on the nonzero vectors, sorted ascending.
    pub fn vector_orbits(&self) -> Vec<usize> {
        let mut seen = vec![false; self.vectors.len()];
        let mut sizes = Vec::new();
        for start in 0..self.vectors.len() {
            if seen[start] {
                continue;
            }
            let mut members = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for g in &self.gens {
                    let y = self.vector_index[&g.apply(&self.vectors[x])];
                    if !seen[y] {
                        seen[y] = true;
                        members.push(y);
                    }
                }
            }
            sizes.push(members.len());
        }
        sizes.sort_unstable();
        sizes
    }

    /// Orbit id of every nonzero vector plus the orbit sizes.
    pub fn orbit_partition(&self) -> (Vec<usize>, Vec<usize>) {
        let mut orbit_of = vec![usize::MAX; self.vectors.len()];
        let mut sizes = Vec::new();
        for start in 0..self.vectors.len() {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = sizes.len();
            let mut members = vec![start];
            orbit_of[start] = id;
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for g in &self.gens {
                    let y = self.vector_index[&g.apply(&self.vectors[x])];
                    if orbit_of[y] == usize::MAX {
                        orbit_of[y] = id;
                        members.push(y);
                    }
                }
            }
            sizes.push(members.len());
        }
        (orbit_of, sizes)
    }

    /// Orbit of a single vector, as vector indices.
    pub fn orbit_of_vector(&self, v: &[GFElement]) -> Vec<usize> {
        let start = self.vector_index[v];
        let mut seen = vec![false; self.vectors.len()];
        let mut members = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for g in &self.gens {
                let y = self.vector_index[&g.apply(&self.vectors[x])];
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
        }
        members
    }

    /// Permutation of the nonzero vectors induced by one matrix.
    pub fn vector_perm(&self, m: &GFMatrix) -> Perm {
        let img = self
            .vectors
            .iter()
            .map(|v| self.vector_index[&m.apply(v)] as u16)
            .collect();
        Perm::from_images(img)
    }

    /// The group as permutations of the nonzero vectors. Errors if the action
    /// is not faithful (closure order would drop).
    pub fn as_perm_group(&self, cap: usize) -> Result<PermGroup, String> {
        let gens: Vec<Perm> = self.gens.iter().map(|g| self.vector_perm(g)).collect();
        let pg = PermGroup::close(gens, cap)?;
        if pg.order() != self.order() {
            return Err(format!(
                "vector action not faithful: {} permutations vs {} matrices",
                pg.order(),
                self.order()
            ));
        }
        Ok(pg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl23_has_order_168_and_sl23_order_24() {
        // SL(2,3) from the two elementary transvections
        let e12 = GFMatrix::from_rows(FieldId::Fp(3), &[&[1, 1], &[0, 1]]);
        let e21 = GFMatrix::from_rows(FieldId::Fp(3), &[&[1, 0], &[1, 1]]);
        let sl23 = GFMatrixGroup::close(vec![e12, e21], 1000).unwrap();
        assert_eq!(sl23.order(), 24);
        let one = GFElement::one(FieldId::Fp(3));
        assert!(sl23.elements.iter().all(|m| m.det() == one));
    }

    #[test]
    fn nonzero_vector_count() {
        assert_eq!(nonzero_vectors(FieldId::F4, 3).len(), 63);
        assert_eq!(nonzero_vectors(FieldId::F9, 2).len(), 80);
    }

    #[test]
    fn scalar_orbits_in_gf4() {
        // the scalar subgroup {1, v, w}·I has 21 orbits of size 3 on the 63
        // nonzero vectors
        let v = GFMatrix::scalar(FieldId::F4, 3, GFElement::v4());
        let scalars = GFMatrixGroup::close(vec![v], 10).unwrap();
        assert_eq!(scalars.order(), 3);
        let orbits = scalars.vector_orbits();
        assert_eq!(orbits.len(), 21);
        assert!(orbits.iter().all(|&s| s == 3));
    }

    #[test]
    fn trivial_group_orbits() {
        let id = GFMatrix::identity(FieldId::F4, 3);
        let trivial = GFMatrixGroup::close(vec![id], 10).unwrap();
        assert_eq!(trivial.vector_orbits(), vec![1; 63]);
    }
}
