//! Subgroup discovery: all subgroups generated by one or two cyclic
//! subgroups, deduplicated, with grouping into conjugacy classes.
//!
//! This is complete for subgroups that are generated by two elements — which
//! covers every subgroup family asserted by the verification suites — and is
//! explicitly a capped search, not a full subgroup-lattice computation.

use std::collections::HashSet;

use super::group::PermGroup;

/// A subgroup given by its sorted element indices and a generating pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub elements: Vec<usize>,
    pub gens: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Closure of a set of element indices inside an enumerated group, aborting
/// once the size exceeds `cap`.
pub fn close_indices(group: &PermGroup, gens: &[usize], cap: usize) -> Option<Vec<usize>> {
    let mut seen: HashSet<usize> = HashSet::new();
    let id = group.identity_index();
    seen.insert(id);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = group.mul_idx(x, g);
            if seen.insert(y) {
                if seen.len() > cap {
                    return None;
                }
                frontier.push(y);
            }
        }
    }
    let mut elements: Vec<usize> = seen.into_iter().collect();
    elements.sort_unstable();
    Some(elements)
}

/// All subgroups of order ≤ `max_order` generated by at most two cyclic
/// subgroups, deduplicated by element set.
pub fn two_generated_subgroups(group: &PermGroup, max_order: usize) -> Vec<Subgroup> {
    // distinct cyclic subgroups, keyed by their element sets
    let mut cyclic: Vec<(Vec<usize>, usize)> = Vec::new();
    let mut seen_cyclic: HashSet<Vec<usize>> = HashSet::new();
    for x in 0..group.order() {
        if let Some(els) = close_indices(group, &[x], max_order) {
            if seen_cyclic.insert(els.clone()) {
                cyclic.push((els, x));
            }
        }
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    for (els, x) in &cyclic {
        if seen.insert(els.clone()) {
            out.push(Subgroup { elements: els.clone(), gens: vec![*x] });
        }
    }
    for a in 0..cyclic.len() {
        for b in (a + 1)..cyclic.len() {
            let (ea, ga) = &cyclic[a];
            let (eb, gb) = &cyclic[b];
            // skip pairs where one cyclic subgroup contains the other
            if eb.iter().all(|e| ea.binary_search(e).is_ok())
                || ea.iter().all(|e| eb.binary_search(e).is_ok())
            {
                continue;
            }
            if let Some(els) = close_indices(group, &[*ga, *gb], max_order) {
                if seen.insert(els.clone()) {
                    out.push(Subgroup { elements: els, gens: vec![*ga, *gb] });
                }
            }
        }
    }
    out
}

/// Conjugacy classes of the discovered subgroups of exactly the given order.
/// Returns one representative list per class (each class sorted, classes in a
/// deterministic order).
pub fn subgroup_classes(
    group: &PermGroup,
    catalog: &[Subgroup],
    order: usize,
) -> Vec<Vec<Subgroup>> {
    let of_order: Vec<&Subgroup> = catalog.iter().filter(|s| s.order() == order).collect();
    let mut assigned: HashSet<Vec<usize>> = HashSet::new();
    let mut classes: Vec<Vec<Subgroup>> = Vec::new();
    let gen_indices: Vec<usize> = group
        .gens()
        .iter()
        .map(|g| group.index_of(g).expect("generator enumerated"))
        .collect();
    for sub in &of_order {
        if assigned.contains(&sub.elements) {
            continue;
        }
        // orbit of the element set under conjugation
        let mut orbit: Vec<Vec<usize>> = vec![sub.elements.clone()];
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(sub.elements.clone());
        let mut head = 0;
        while head < orbit.len() {
            let current = orbit[head].clone();
            head += 1;
            for &g in &gen_indices {
                let mut conj: Vec<usize> =
                    current.iter().map(|&x| group.conj_idx(x, g)).collect();
                conj.sort_unstable();
                if seen.insert(conj.clone()) {
                    orbit.push(conj);
                }
            }
        }
        let mut members: Vec<Subgroup> = Vec::new();
        for set in orbit {
            assigned.insert(set.clone());
            members.push(Subgroup { gens: Vec::new(), elements: set });
        }
        members.sort_by(|a, b| a.elements.cmp(&b.elements));
        classes.push(members);
    }
    classes.sort_by(|a, b| a[0].elements.cmp(&b[0].elements));
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::perm::Perm;

    fn alt6() -> PermGroup {
        let a = Perm::from_cycles(6, &[&[0, 1, 2, 3, 4]]);
        let b = Perm::from_cycles(6, &[&[3, 4, 5]]);
        PermGroup::close(vec![a, b], 1_000_000).unwrap()
    }

    fn sym3() -> PermGroup {
        let a = Perm::from_cycles(3, &[&[0, 1, 2]]);
        let b = Perm::from_cycles(3, &[&[0, 1]]);
        PermGroup::close(vec![a, b], 100).unwrap()
    }

    #[test]
    fn sym3_order2_subgroups() {
        let g = sym3();
        let catalog = two_generated_subgroups(&g, 6);
        let classes = subgroup_classes(&g, &catalog, 2);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].len(), 3); // three transpositions, one class
    }

    #[test]
    fn alt6_subgroup_landscape() {
        let g = alt6();
        let catalog = two_generated_subgroups(&g, 60);
        // exactly two classes each of order 60 (Alt 5), 24 (Sym 4), 6 (Sym 3)
        assert_eq!(subgroup_classes(&g, &catalog, 60).len(), 2);
        assert_eq!(subgroup_classes(&g, &catalog, 24).len(), 2);
        assert_eq!(subgroup_classes(&g, &catalog, 6).len(), 2);
        // single class of Sylow 2-subgroups (order 8) and of order 36
        assert_eq!(subgroup_classes(&g, &catalog, 8).len(), 1);
        assert_eq!(subgroup_classes(&g, &catalog, 36).len(), 1);
    }
}
