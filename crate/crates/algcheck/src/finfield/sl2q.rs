//! SL(2,3) and SL(2,9): orders, centers, the projective-line action, the
//! brute-force isomorphism with the quaternion double cover of the
//! tetrahedral group, and the six-point quotient action.

use std::collections::HashSet;

use crate::exactmath::{FieldId, GFElement, Quaternion};
use crate::permgroup::{close_indices, enumerate_group, GroupAction, Perm, PermGroup};

use super::matrices::{GFMatrix, GFMatrixGroup};

/// SL(2,3) generated by the two elementary transvections.
pub fn build_sl23() -> Result<GFMatrixGroup, String> {
    let f = FieldId::Fp(3);
    let e12 = GFMatrix::from_rows(f, &[&[1, 1], &[0, 1]]);
    let e21 = GFMatrix::from_rows(f, &[&[1, 0], &[1, 1]]);
    GFMatrixGroup::close(vec![e12, e21], 100)
}

/// SL(2,9); transvections by 1 and by the adjoined root of -1 generate it.
pub fn build_sl29() -> Result<GFMatrixGroup, String> {
    let f = FieldId::F9;
    let s = 3u64; // the element 0 + 1·s with s² = -1
    let e12_one = GFMatrix::from_rows(f, &[&[1, 1], &[0, 1]]);
    let e12_s = GFMatrix::from_rows(f, &[&[1, s], &[0, 1]]);
    let e21_one = GFMatrix::from_rows(f, &[&[1, 0], &[1, 1]]);
    GFMatrixGroup::close(vec![e12_one, e12_s, e21_one], 2000)
}

/// The quaternion realization of the binary tetrahedral group:
/// closure of i and (-1+i+j+k)/2.
pub fn quaternion_2alt4() -> Result<Vec<Quaternion>, String> {
    let a = Quaternion::i();
    let b = Quaternion::half(-1, 1, 1, 1);
    enumerate_group(&[a, b], |x, y| x.mul(y), Quaternion::one(), 100)
}

fn matrix_order(m: &GFMatrix) -> usize {
    let id = GFMatrix::identity(m.field, m.n);
    let mut acc = m.clone();
    let mut n = 1;
    while acc != id {
        acc = acc.mul(m);
        n += 1;
    }
    n
}

fn quaternion_order(q: &Quaternion) -> usize {
    let one = Quaternion::one();
    let mut acc = q.clone();
    let mut n = 1;
    while acc != one {
        acc = acc.mul(q);
        n += 1;
    }
    n
}

/// Brute-force isomorphism search between the order-24 quaternion group and
/// SL(2,3): look for generator images (A, B) such that the subgroup of the
/// direct product generated by {(a,A), (b,B)} is the graph of a bijection.
pub fn iso_quaternion_to_sl23(sl23: &GFMatrixGroup) -> Result<bool, String> {
    let quats = quaternion_2alt4()?;
    if quats.len() != 24 || sl23.order() != 24 {
        return Err("unexpected group orders".into());
    }
    let a = Quaternion::i();
    let b = Quaternion::half(-1, 1, 1, 1);
    let a_candidates: Vec<&GFMatrix> =
        sl23.elements.iter().filter(|m| matrix_order(m) == quaternion_order(&a)).collect();
    let b_candidates: Vec<&GFMatrix> =
        sl23.elements.iter().filter(|m| matrix_order(m) == quaternion_order(&b)).collect();
    for ma in &a_candidates {
        for mb in &b_candidates {
            let pairs = vec![(a.clone(), (*ma).clone()), (b.clone(), (*mb).clone())];
            let id = (Quaternion::one(), GFMatrix::identity(sl23.field, 2));
            let Ok(graph) = enumerate_group(
                &pairs,
                |(q1, m1), (q2, m2)| (q1.mul(q2), m1.mul(m2)),
                id,
                25,
            ) else {
                continue;
            };
            if graph.len() == 24 {
                let images: HashSet<&GFMatrix> = graph.iter().map(|(_, m)| m).collect();
                if images.len() == 24 {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// Canonical representatives of the projective line: scale so the first
/// nonzero coordinate is 1.
pub fn projective_line(field: FieldId) -> Vec<Vec<GFElement>> {
    let mut points = vec![vec![GFElement::zero(field), GFElement::one(field)]];
    for x in 0..field.size() {
        points.push(vec![GFElement::one(field), GFElement::new(field, x)]);
    }
    points
}

fn normalize(v: &[GFElement]) -> Vec<GFElement> {
    let pivot = v.iter().find(|x| !x.is_zero()).expect("nonzero");
    let inv = pivot.inv().unwrap();
    v.iter().map(|x| x.mul(&inv)).collect()
}

/// The action of a matrix group on its projective line; returns (permutation
/// per element, kernel size).
pub struct ProjectiveAction {
    pub degree: usize,
    pub perms: Vec<Perm>,
    pub kernel_size: usize,
}

pub fn projective_action(group: &GFMatrixGroup) -> ProjectiveAction {
    let points = projective_line(group.field);
    let index: std::collections::HashMap<Vec<GFElement>, usize> =
        points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let perms: Vec<Perm> = group
        .elements
        .iter()
        .map(|m| {
            let img = points.iter().map(|p| index[&normalize(&m.apply(p))] as u16).collect();
            Perm::from_images(img)
        })
        .collect();
    let kernel_size = perms.iter().filter(|p| p.is_identity()).count();
    ProjectiveAction { degree: points.len(), perms, kernel_size }
}

/// Is the projective action 2-transitive? (single orbit on ordered pairs of
/// distinct points)
pub fn two_transitive(action: &ProjectiveAction) -> bool {
    let n = action.degree;
    let mut seen = HashSet::new();
    // orbit of the pair (0, 1)
    let mut frontier = vec![(0usize, 1usize)];
    seen.insert((0usize, 1usize));
    while let Some((x, y)) = frontier.pop() {
        for p in &action.perms {
            let nxt = (p.apply(x), p.apply(y));
            if seen.insert(nxt) {
                frontier.push(nxt);
            }
        }
    }
    seen.len() == n * (n - 1)
}

/// Structural report on SL(2,9) and its quotient.
pub struct Sl29Report {
    pub order: usize,
    pub center_is_plus_minus_identity: bool,
    pub projective_degree: usize,
    pub projective_kernel_is_center: bool,
    pub projective_two_transitive: bool,
    /// Degree-6 coset action: (image order, kernel equals the center).
    pub six_point_image_order: usize,
    pub six_point_kernel_is_center: bool,
    pub six_point_image_even: bool,
}

impl Sl29Report {
    pub fn pass(&self) -> bool {
        self.order == 720
            && self.center_is_plus_minus_identity
            && self.projective_degree == 10
            && self.projective_kernel_is_center
            && self.projective_two_transitive
            && self.six_point_image_order == 360
            && self.six_point_kernel_is_center
            && self.six_point_image_even
    }
}

/// Find an index-6 subgroup of the permutation realization by closing pairs
/// (order-10 element, order-3 element) with an early-abort cap.
pub fn find_index6_subgroup(pg: &PermGroup) -> Option<Vec<usize>> {
    let target = pg.order() / 6;
    let tens: Vec<usize> =
        (0..pg.order()).filter(|&i| pg.element(i).order() == 10).collect();
    let threes: Vec<usize> =
        (0..pg.order()).filter(|&i| pg.element(i).order() == 3).collect();
    for &x in tens.iter().take(4) {
        for &y in &threes {
            if let Some(els) = close_indices(pg, &[x, y], target) {
                if els.len() == target {
                    return Some(els);
                }
            }
        }
    }
    None
}

pub fn sl29_structure(group: &GFMatrixGroup) -> Result<Sl29Report, String> {
    let order = group.order();
    let center = group.center();
    let minus_one = GFMatrix::scalar(group.field, 2, GFElement::one(group.field).neg());
    let id = GFMatrix::identity(group.field, 2);
    let center_is_plus_minus_identity =
        center.len() == 2 && center.contains(&&id) && center.contains(&&minus_one);
    let proj = projective_action(group);
    let projective_two_transitive = two_transitive(&proj);
    // the quotient by the center acts faithfully on the projective line
    let projective_kernel_is_center = proj.kernel_size == 2;

    // six-point action via an index-6 subgroup of the permutation realization
    let pg = std::sync::Arc::new(group.as_perm_group(2000)?);
    let sub = find_index6_subgroup(&pg).ok_or("no index-6 subgroup found")?;
    let act = GroupAction::on_cosets(pg.clone(), &sub)?;
    if act.degree != 6 {
        return Err(format!("coset action has degree {}", act.degree));
    }
    let kernel: Vec<usize> =
        (0..pg.order()).filter(|&g| act.imgs[g].is_identity()).collect();
    let image: HashSet<&Perm> = act.imgs.iter().collect();
    let six_point_image_even = act.imgs.iter().all(|p| p.is_even());
    Ok(Sl29Report {
        order,
        center_is_plus_minus_identity,
        projective_degree: proj.degree,
        projective_kernel_is_center,
        projective_two_transitive,
        six_point_image_order: image.len(),
        six_point_kernel_is_center: kernel.len() == 2,
        six_point_image_even,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl23_is_the_binary_tetrahedral_group() {
        let sl23 = build_sl23().unwrap();
        assert_eq!(sl23.order(), 24);
        assert!(iso_quaternion_to_sl23(&sl23).unwrap());
    }

    #[test]
    fn quaternion_group_has_24_elements() {
        let q = quaternion_2alt4().unwrap();
        assert_eq!(q.len(), 24);
    }

    #[test]
    fn sl29_structure_report() {
        let sl29 = build_sl29().unwrap();
        assert_eq!(sl29.order(), 720);
        let report = sl29_structure(&sl29).unwrap();
        assert!(report.pass(), "order={} center={} deg={} ker={} 2tr={} img={} ker6={} even={}",
            report.order, report.center_is_plus_minus_identity, report.projective_degree,
            report.projective_kernel_is_center, report.projective_two_transitive,
            report.six_point_image_order, report.six_point_kernel_is_center,
            report.six_point_image_even);
    }

    #[test]
    fn projective_line_sizes() {
        assert_eq!(projective_line(FieldId::F9).len(), 10);
        assert_eq!(projective_line(FieldId::Fp(3)).len(), 4);
    }
}
