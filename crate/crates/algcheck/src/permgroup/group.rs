//! Enumerated permutation groups and their conjugacy data.

use std::collections::HashMap;
use std::hash::Hash;

use super::perm::Perm;

/// Breadth-first closure of a generating set under an arbitrary product rule.
/// Enumeration order is deterministic: identity first, then words by length.
pub fn enumerate_group<T: Clone + Eq + Hash>(
    gens: &[T],
    mul: impl Fn(&T, &T) -> T,
    identity: T,
    cap: usize,
) -> Result<Vec<T>, String> {
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<T, usize> = HashMap::new();
    index.insert(identity, 0);
    let mut head = 0;
    while head < elements.len() {
        let current = elements[head].clone();
        head += 1;
        for g in gens {
            let next = mul(&current, g);
            if !index.contains_key(&next) {
                if elements.len() >= cap {
                    return Err(format!("closure exceeded cap {cap}"));
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
    }
    Ok(elements)
}

/// A finite permutation group with its full element list.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl PermGroup {
    /// Close the generators; default cap 10^6 elements.
    pub fn close(gens: Vec<Perm>, cap: usize) -> Result<PermGroup, String> {
        let degree = gens.first().map_or(0, |g| g.degree());
        if gens.iter().any(|g| g.degree() != degree) {
            return Err("generators of mixed degree".into());
        }
        let elements = enumerate_group(&gens, |a, b| a.mul(b), Perm::identity(degree), cap)?;
        let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(PermGroup { degree, gens, elements, index })
    }

    /// Group generated by the listed (closed) element set; used when a
    /// subgroup's elements are already known.
    pub fn from_elements(degree: usize, gens: Vec<Perm>, elements: Vec<Perm>) -> PermGroup {
        let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        PermGroup { degree, gens, elements, index }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &Perm {
        &self.elements[idx]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn identity_index(&self) -> usize {
        self.index_of(&Perm::identity(self.degree)).expect("identity present")
    }

    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].mul(&self.elements[b]);
        self.index[&p]
    }

    pub fn inv_idx(&self, a: usize) -> usize {
        self.index[&self.elements[a].inv()]
    }

    /// g⁻¹ x g as indices.
    pub fn conj_idx(&self, x: usize, g: usize) -> usize {
        let p = self.elements[g].inv().mul(&self.elements[x]).mul(&self.elements[g]);
        self.index[&p]
    }

    /// Conjugacy classes, ordered by element order, then class size, then
    /// lexicographically minimal representative.
    pub fn conjugacy_classes(&self) -> ConjugacyData {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut raw_classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = raw_classes.len();
            let mut members = vec![start];
            class_of[start] = id;
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for g in &self.gens {
                    let gi = self.index[g];
                    let y = self.conj_idx(x, gi);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
            }
            raw_classes.push(members);
        }
        // choose minimal representative per class and sort classes
        let mut order_info: Vec<(usize, usize, Vec<u16>, usize)> = raw_classes
            .iter()
            .enumerate()
            .map(|(id, members)| {
                let rep = members
                    .iter()
                    .min_by_key(|&&m| self.elements[m].images().to_vec())
                    .copied()
                    .unwrap();
                let ord = self.elements[rep].order();
                (ord, members.len(), self.elements[rep].images().to_vec(), id)
            })
            .collect();
        order_info.sort();
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        let mut orders = Vec::new();
        let mut renumber = vec![0usize; raw_classes.len()];
        for (new_id, (ord, size, rep_images, old_id)) in order_info.into_iter().enumerate() {
            renumber[old_id] = new_id;
            reps.push(self.index[&Perm::from_images(rep_images)]);
            sizes.push(size);
            orders.push(ord);
        }
        for c in class_of.iter_mut() {
            *c = renumber[*c];
        }
        // power maps: class of rep^k for k in 0..order
        let power_map = reps
            .iter()
            .map(|&rep| {
                let ord = self.elements[rep].order();
                let mut classes = Vec::with_capacity(ord);
                let mut acc = self.identity_index();
                for _ in 0..ord {
                    classes.push(class_of[acc]);
                    acc = self.mul_idx(acc, rep);
                }
                classes
            })
            .collect();
        ConjugacyData { class_of, reps, sizes, orders, power_map }
    }

    /// Census of element orders: (order, count) sorted by order.
    pub fn order_census(&self) -> Vec<(usize, usize)> {
        let mut counts: std::collections::BTreeMap<usize, usize> = Default::default();
        for e in &self.elements {
            *counts.entry(e.order()).or_default() += 1;
        }
        counts.into_iter().collect()
    }

    /// Exponent: lcm of all element orders.
    pub fn exponent(&self) -> usize {
        self.elements.iter().fold(1, |acc, e| num_integer::lcm(acc, e.order()))
    }

    /// Indices of all elements fixing the given point in the natural action.
    pub fn point_stabilizer(&self, point: usize) -> Vec<usize> {
        (0..self.order()).filter(|&i| self.elements[i].apply(point) == point).collect()
    }
}

/// Conjugacy structure: class membership, representatives, sizes, element
/// orders and power maps.
#[derive(Clone, Debug)]
pub struct ConjugacyData {
    /// element index -> class index
    pub class_of: Vec<usize>,
    /// class index -> element index of the representative
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    /// order of the class representative
    pub orders: Vec<usize>,
    /// power_map[c][k] = class of rep_c^k, k in 0..orders[c]
    pub power_map: Vec<Vec<usize>>,
}

impl ConjugacyData {
    pub fn num_classes(&self) -> usize {
        self.reps.len()
    }

    /// Class of the inverse of each class representative.
    pub fn inverse_class(&self, c: usize) -> usize {
        let ord = self.orders[c];
        self.power_map[c][(ord - 1) % ord]
    }

    /// Class of rep^k for arbitrary k.
    pub fn power_class(&self, c: usize, k: usize) -> usize {
        self.power_map[c][k % self.orders[c]]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn sym(n: usize) -> PermGroup {
        let cycle = Perm::from_cycles(n, &[&(0..n).collect::<Vec<_>>()]);
        let transposition = Perm::from_cycles(n, &[&[0, 1]]);
        PermGroup::close(vec![cycle, transposition], 1_000_000).unwrap()
    }

    #[test]
    fn closure_orders() {
        assert_eq!(sym(4).order(), 24);
        let trivial = PermGroup::close(vec![Perm::identity(3)], 10).unwrap();
        assert_eq!(trivial.order(), 1);
        // Alt(6) from two even permutations
        let a = Perm::from_cycles(6, &[&[0, 1, 2, 3, 4]]);
        let b = Perm::from_cycles(6, &[&[3, 4, 5]]);
        let alt6 = PermGroup::close(vec![a, b], 1_000_000).unwrap();
        assert_eq!(alt6.order(), 360);
    }

    #[test]
    fn closure_cap_errors() {
        let a = Perm::from_cycles(6, &[&[0, 1, 2, 3, 4]]);
        let b = Perm::from_cycles(6, &[&[3, 4, 5]]);
        assert!(PermGroup::close(vec![a, b], 100).is_err());
    }

    #[test]
    fn sym4_classes() {
        // brute-force oracle: class sizes {1,3,8,6,6} for orders {1,2,3,4,2}
        let g = sym(4);
        let data = g.conjugacy_classes();
        assert_eq!(data.num_classes(), 5);
        let pairs: Vec<(usize, usize)> =
            data.orders.iter().copied().zip(data.sizes.iter().copied()).collect();
        assert_eq!(pairs, vec![(1, 1), (2, 3), (2, 6), (3, 8), (4, 6)]);
        assert_eq!(data.sizes.iter().sum::<usize>(), 24);
    }

    #[test]
    fn trivial_group_single_class() {
        let trivial = PermGroup::close(vec![Perm::identity(2)], 10).unwrap();
        assert_eq!(trivial.conjugacy_classes().num_classes(), 1);
    }

    #[test]
    fn power_maps_are_consistent() {
        let g = sym(4);
        let data = g.conjugacy_classes();
        for c in 0..data.num_classes() {
            assert_eq!(data.power_map[c][0], 0); // identity class is class 0
            assert_eq!(data.power_map[c][1 % data.orders[c]], if data.orders[c] == 1 { 0 } else { c });
        }
    }

    #[test]
    fn class_equation_divides() {
        let g = sym(4);
        let data = g.conjugacy_classes();
        for &s in &data.sizes {
            assert_eq!(g.order() % s, 0);
        }
    }
}
