//! Group actions: natural, on 2-subsets, on right cosets, and the right
//! regular action. Orbit partitions and conjugation splittings.

use std::collections::HashMap;
use std::sync::Arc;

use super::group::PermGroup;
use super::perm::Perm;

/// An action of an enumerated group on a finite point set, stored as the
/// image permutation of every group element.
#[derive(Clone, Debug)]
pub struct GroupAction {
    pub group: Arc<PermGroup>,
    pub degree: usize,
    pub labels: Vec<String>,
    /// imgs[i] = permutation of the point set induced by group element i.
    pub imgs: Vec<Perm>,
}

impl GroupAction {
    /// The defining action on 0..degree-1.
    pub fn natural(group: Arc<PermGroup>) -> GroupAction {
        let degree = group.degree();
        let labels = (1..=degree).map(|p| p.to_string()).collect();
        let imgs = group.elements().to_vec();
        GroupAction { group, degree, labels, imgs }
    }

    /// Action on unordered pairs of points, labelled "AB", "AC", ... for
    /// degree ≤ 26.
    pub fn on_pairs(group: Arc<PermGroup>) -> GroupAction {
        let n = group.degree();
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                pairs.push((a, b));
            }
        }
        let pair_index: HashMap<(usize, usize), usize> =
            pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let labels = pairs
            .iter()
            .map(|&(a, b)| {
                let la = (b'A' + a as u8) as char;
                let lb = (b'A' + b as u8) as char;
                format!("{la}{lb}")
            })
            .collect();
        let imgs = group
            .elements()
            .iter()
            .map(|g| {
                let img = pairs
                    .iter()
                    .map(|&(a, b)| {
                        let (x, y) = (g.apply(a), g.apply(b));
                        let key = (x.min(y), x.max(y));
                        pair_index[&key] as u16
                    })
                    .collect();
                Perm::from_images(img)
            })
            .collect();
        GroupAction { group, degree: pairs.len(), labels, imgs }
    }

    /// Right regular action on the group's own elements: x ↦ x·g.
    pub fn regular(group: Arc<PermGroup>) -> GroupAction {
        let n = group.order();
        let labels = group.elements().iter().map(|e| e.cycles_string()).collect();
        let imgs = (0..n)
            .map(|g| {
                let img = (0..n).map(|x| group.mul_idx(x, g) as u16).collect();
                Perm::from_images(img)
            })
            .collect();
        GroupAction { group, degree: n, labels, imgs }
    }

    /// Action on right cosets H\G: Hx · g = H(xg). Degree = index [G:H].
    /// Errors if the element set is not a subgroup.
    pub fn on_cosets(group: Arc<PermGroup>, subgroup: &[usize]) -> Result<GroupAction, String> {
        verify_subgroup(&group, subgroup)?;
        let n = group.order();
        if n % subgroup.len() != 0 {
            return Err("subgroup order does not divide group order".into());
        }
        let mut coset_of = vec![usize::MAX; n];
        let mut coset_reps = Vec::new();
        for x in 0..n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let cid = coset_reps.len();
            coset_reps.push(x);
            for &h in subgroup {
                coset_of[group.mul_idx(h, x)] = cid;
            }
        }
        let degree = coset_reps.len();
        let labels = coset_reps.iter().map(|&r| group.element(r).cycles_string()).collect();
        let imgs = (0..n)
            .map(|g| {
                let img = coset_reps
                    .iter()
                    .map(|&r| coset_of[group.mul_idx(r, g)] as u16)
                    .collect();
                Perm::from_images(img)
            })
            .collect();
        Ok(GroupAction { group, degree, labels, imgs })
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit_sizes(&(0..self.group.order()).collect::<Vec<_>>()).len() == 1
    }

    /// Sorted orbit sizes of the given subgroup (element indices) on the
    /// point set.
    pub fn orbit_sizes(&self, subgroup: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut sizes = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut members = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for &s in subgroup {
                    let y = self.imgs[s].apply(x);
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

    /// Orbit of one point under the whole group, as point indices.
    pub fn orbit_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut members = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for g in &self.imgs {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
        }
        members
    }

    /// Stabilizer (element indices) of a point.
    pub fn stabilizer(&self, point: usize) -> Vec<usize> {
        (0..self.group.order()).filter(|&g| self.imgs[g].apply(point) == point).collect()
    }

    /// Number of fixed points of each group element, indexed by element:
    /// the permutation character.
    pub fn fixed_point_counts(&self) -> Vec<usize> {
        self.imgs.iter().map(|p| p.fixed_points()).collect()
    }

    /// Spot-check the homomorphism property on pseudo-random pairs.
    pub fn homomorphism_spot_check(&self, samples: usize, seed: u64) -> bool {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = self.group.order();
        for _ in 0..samples {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            let ab = self.group.mul_idx(a, b);
            if self.imgs[a].mul(&self.imgs[b]) != self.imgs[ab] {
                return false;
            }
        }
        true
    }
}

/// Check that the listed element indices form a subgroup.
pub fn verify_subgroup(group: &PermGroup, subgroup: &[usize]) -> Result<(), String> {
    if subgroup.is_empty() {
        return Err("empty subgroup".into());
    }
    let set: std::collections::HashSet<usize> = subgroup.iter().copied().collect();
    if !set.contains(&group.identity_index()) {
        return Err("subgroup misses the identity".into());
    }
    for &a in subgroup {
        if !set.contains(&group.inv_idx(a)) {
            return Err("subgroup not closed under inverse".into());
        }
        for &b in subgroup {
            if !set.contains(&group.mul_idx(a, b)) {
                return Err("subgroup not closed under product".into());
            }
        }
    }
    Ok(())
}

/// Conjugation orbit sizes of S on the elements of G, grouped by the class of
/// G each orbit lies in: returns (class index, sorted orbit sizes) per class.
pub fn class_split_under(
    group: &PermGroup,
    class_of: &[usize],
    num_classes: usize,
    subgroup: &[usize],
) -> Vec<Vec<usize>> {
    let n = group.order();
    let mut seen = vec![false; n];
    let mut result: Vec<Vec<usize>> = vec![Vec::new(); num_classes];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut members = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &s in subgroup {
                let y = group.conj_idx(x, s);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
        }
        result[class_of[start]].push(members.len());
    }
    for sizes in result.iter_mut() {
        sizes.sort_unstable();
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym4() -> Arc<PermGroup> {
        let cycle = Perm::from_cycles(4, &[&[0, 1, 2, 3]]);
        let swap = Perm::from_cycles(4, &[&[0, 1]]);
        Arc::new(PermGroup::close(vec![cycle, swap], 100).unwrap())
    }

    #[test]
    fn coset_action_degree() {
        let g = sym4();
        // stabilizer of point 3 is Sym(3), index 4
        let stab = g.point_stabilizer(3);
        assert_eq!(stab.len(), 6);
        let act = GroupAction::on_cosets(g.clone(), &stab).unwrap();
        assert_eq!(act.degree, 4);
        assert!(act.is_transitive());
        assert!(act.homomorphism_spot_check(50, 1));
        // H = G gives degree 1
        let whole: Vec<usize> = (0..g.order()).collect();
        assert_eq!(GroupAction::on_cosets(g.clone(), &whole).unwrap().degree, 1);
    }

    #[test]
    fn coset_action_rejects_non_subgroup() {
        let g = sym4();
        // {identity, a 4-cycle} is not closed
        let four_cycle = g.index_of(&Perm::from_cycles(4, &[&[0, 1, 2, 3]])).unwrap();
        assert!(GroupAction::on_cosets(g.clone(), &[g.identity_index(), four_cycle]).is_err());
    }

    #[test]
    fn orbit_sizes_trivial_subgroup() {
        let g = sym4();
        let act = GroupAction::natural(g.clone());
        let orbits = act.orbit_sizes(&[g.identity_index()]);
        assert_eq!(orbits, vec![1, 1, 1, 1]);
    }

    #[test]
    fn sym4_class_split_under_point_stabilizer() {
        // fixing one of four letters splits the classes as
        // 1, 3, (3+3), (2+6), 6 in class order (e, 2², transpositions handled
        // by order: classes ordered by element order then size)
        let g = sym4();
        let data = g.conjugacy_classes();
        let stab = g.point_stabilizer(3);
        let split = class_split_under(&g, &data.class_of, data.num_classes(), &stab);
        // class order: (1,1), (2,3) double transpositions, (2,6)
        // transpositions, (3,8), (4,6)
        assert_eq!(split[0], vec![1]);
        assert_eq!(split[1], vec![3]);
        assert_eq!(split[2], vec![3, 3]);
        assert_eq!(split[3], vec![2, 6]);
        assert_eq!(split[4], vec![6]);
    }

    #[test]
    fn orbit_stabilizer_theorem_on_pairs() {
        let g = sym4();
        let act = GroupAction::on_pairs(g.clone());
        assert_eq!(act.degree, 6);
        for point in 0..act.degree {
            let orbit = act.orbit_of(point);
            let stab = act.stabilizer(point);
            assert_eq!(orbit.len() * stab.len(), g.order());
        }
    }

    #[test]
    fn regular_action_fixed_points() {
        let g = sym4();
        let act = GroupAction::regular(g.clone());
        let fixed = act.fixed_point_counts();
        assert_eq!(fixed[g.identity_index()], 24);
        assert_eq!(fixed.iter().filter(|&&f| f == 0).count(), 23);
    }
}
