//! The bit-string model: Sym(6) acting on even-weight bit-strings of length
//! six, the 16-element quotient modulo complementation, the particle table,
//! and the invariant quadratic/alternating forms.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::permgroup::{GroupAction, Perm, PermGroup};

const FULL: u8 = 0b111111;

/// Letters A..F as bit positions 0..5; "AB" = bits {0,1}.
pub fn mask_from_letters(s: &str) -> Result<u8, String> {
    let mut mask = 0u8;
    for ch in s.chars() {
        match ch {
            'A'..='F' => mask |= 1 << (ch as u8 - b'A'),
            _ => return Err(format!("bad letter {ch:?} in bit-string {s:?}")),
        }
    }
    Ok(mask)
}

pub fn letters_from_mask(mask: u8) -> String {
    (0..6)
        .filter(|b| mask & (1 << b) != 0)
        .map(|b| (b'A' + b) as char)
        .collect()
}

/// Permute the six bit positions of a mask.
pub fn permute_mask(g: &Perm, mask: u8) -> u8 {
    let mut out = 0u8;
    for b in 0..6 {
        if mask & (1 << b) != 0 {
            out |= 1 << g.apply(b);
        }
    }
    out
}

/// Quotient class representative: the smaller of x and its complement.
pub fn quotient_rep(mask: u8) -> u8 {
    (mask & FULL).min(!mask & FULL)
}

/// Quadratic form Q(x) = (weight/2) mod 2 on even-weight strings.
pub fn q_form(mask: u8) -> u8 {
    ((mask.count_ones() / 2) % 2) as u8
}

/// Polarization B(x,y) = |x ∩ y| mod 2.
pub fn b_form(x: u8, y: u8) -> u8 {
    ((x & y).count_ones() % 2) as u8
}

/// The Sym(6) bit-string model.
pub struct Gf2Model {
    pub sym6: Arc<PermGroup>,
    /// The 32 even-weight strings.
    pub even: Vec<u8>,
    /// The 16 quotient class representatives.
    pub quotient: Vec<u8>,
    pub quotient_index: HashMap<u8, usize>,
}

impl Gf2Model {
    pub fn build() -> Result<Gf2Model, String> {
        let cycle = Perm::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]);
        let swap = Perm::from_cycles(6, &[&[0, 1]]);
        let sym6 = Arc::new(PermGroup::close(vec![cycle, swap], 1_000)?);
        if sym6.order() != 720 {
            return Err(format!("Sym(6) closure gave order {}", sym6.order()));
        }
        let even: Vec<u8> = (0u8..=FULL).filter(|m| m.count_ones() % 2 == 0).collect();
        if even.len() != 32 {
            return Err("expected 32 even-weight strings".into());
        }
        let mut quotient: Vec<u8> = even.iter().map(|&m| quotient_rep(m)).collect();
        quotient.sort_unstable();
        quotient.dedup();
        if quotient.len() != 16 {
            return Err("expected a 16-element quotient".into());
        }
        let quotient_index = quotient.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        Ok(Gf2Model { sym6, even, quotient, quotient_index })
    }

    /// Every permutation acts linearly on the even strings and fixes 111111.
    pub fn verify_linearity_and_fixed_string(&self) -> bool {
        self.sym6.elements().iter().all(|g| {
            permute_mask(g, FULL) == FULL
                && self.even.iter().all(|&x| {
                    self.even
                        .iter()
                        .all(|&y| permute_mask(g, x ^ y) == permute_mask(g, x) ^ permute_mask(g, y))
                })
        })
    }

    /// The action on the 16 quotient classes as a GroupAction.
    pub fn quotient_action(&self) -> GroupAction {
        let labels = self
            .quotient
            .iter()
            .map(|&m| if m == 0 { "0".to_string() } else { letters_from_mask(m) })
            .collect();
        let imgs = self
            .sym6
            .elements()
            .iter()
            .map(|g| {
                let img = self
                    .quotient
                    .iter()
                    .map(|&m| self.quotient_index[&quotient_rep(permute_mask(g, m))] as u16)
                    .collect();
                Perm::from_images(img)
            })
            .collect();
        GroupAction { group: self.sym6.clone(), degree: 16, labels, imgs }
    }

    /// Addition of quotient classes (well defined since 111111 is fixed).
    pub fn quotient_add(&self, a: u8, b: u8) -> u8 {
        quotient_rep(a ^ b)
    }

    /// Is the given set of quotient representatives (with 0) closed under
    /// addition, i.e. a linear subspace of the quotient?
    pub fn is_quotient_subspace(&self, members: &[u8]) -> bool {
        let set: HashSet<u8> = members.iter().map(|&m| quotient_rep(m)).collect();
        if !set.contains(&0) {
            return false;
        }
        set.iter().all(|&a| set.iter().all(|&b| set.contains(&self.quotient_add(a, b))))
    }

    /// Q is invariant under every permutation (checked exhaustively).
    pub fn verify_q_invariant(&self) -> bool {
        self.sym6
            .elements()
            .iter()
            .all(|g| self.even.iter().all(|&x| q_form(permute_mask(g, x)) == q_form(x)))
    }

    /// B is invariant under every permutation, descends to the quotient, and
    /// the descended form is alternating and nondegenerate.
    pub fn verify_b_form(&self) -> bool {
        let invariant = self.sym6.elements().iter().all(|g| {
            self.even.iter().all(|&x| {
                self.even
                    .iter()
                    .all(|&y| b_form(permute_mask(g, x), permute_mask(g, y)) == b_form(x, y))
            })
        });
        let descends = self
            .even
            .iter()
            .all(|&x| self.even.iter().all(|&y| b_form(x ^ FULL, y) == b_form(x, y)));
        let alternating = self.even.iter().all(|&x| b_form(x, x) == 0);
        let nondegenerate = self
            .quotient
            .iter()
            .filter(|&&x| x != 0)
            .all(|&x| self.quotient.iter().any(|&y| b_form(x, y) == 1));
        invariant && descends && alternating && nondegenerate
    }
}

/// One record of the shipped particle table (either model).
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct ParticleRecord {
    pub name: String,
    /// Bit-string like "AB" for the GF(2) model; vector like "110" over
    /// 0/1/v/w for the GF(4) model.
    pub assignment: String,
    pub handedness: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colour: Option<u8>,
}

#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct ParticleFile {
    pub version: u32,
    pub gf2: Vec<ParticleRecord>,
    pub gf4: Vec<ParticleRecord>,
}

impl ParticleFile {
    pub fn load(path: &std::path::Path) -> Result<ParticleFile, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("bad particle file: {e}"))
    }

    pub fn gf2_mask(&self, name: &str) -> Result<u8, String> {
        let rec = self
            .gf2
            .iter()
            .find(|r| r.name == name)
            .ok_or_else(|| format!("missing particle {name}"))?;
        mask_from_letters(&rec.assignment)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn masks_and_letters() {
        assert_eq!(mask_from_letters("AB").unwrap(), 0b000011);
        assert_eq!(letters_from_mask(0b000011), "AB");
        assert_eq!(quotient_rep(0b111100), 0b000011);
        assert!(mask_from_letters("AX").is_err());
    }

    #[test]
    fn q_and_b_values() {
        assert_eq!(q_form(mask_from_letters("AB").unwrap()), 1);
        assert_eq!(q_form(mask_from_letters("ABCD").unwrap()), 0);
        let ab = mask_from_letters("AB").unwrap();
        let ac = mask_from_letters("AC").unwrap();
        assert_eq!(b_form(ab, ac), 1);
    }

    #[test]
    fn model_invariants() {
        let model = Gf2Model::build().unwrap();
        assert!(model.verify_linearity_and_fixed_string());
        assert!(model.verify_q_invariant());
        assert!(model.verify_b_form());
    }

    #[test]
    fn lepton_and_right_handed_subspaces() {
        let model = Gf2Model::build().unwrap();
        let m = |s: &str| mask_from_letters(s).unwrap();
        // leptons: 0, AB, AC, BC form a 2-dimensional subspace
        assert!(model.is_quotient_subspace(&[0, m("AB"), m("AC"), m("BC")]));
        // right-handed particles with 0: a 3-dimensional subspace (8 classes)
        let rh = [0, m("BC"), m("AD"), m("AE"), m("AF"), m("DE"), m("DF"), m("EF")];
        assert!(model.is_quotient_subspace(&rh));
        // AD + AE = DE, and AD + BC ≡ EF modulo complementation
        assert_eq!(model.quotient_add(m("AD"), m("AE")), m("DE"));
        assert_eq!(model.quotient_add(m("AD"), m("BC")), quotient_rep(m("EF")));
        // dropping a vector breaks closure
        assert!(!model.is_quotient_subspace(&[0, m("AB"), m("AC")]));
    }

    #[test]
    fn weak_doublet_and_colour_actions() {
        let model = Gf2Model::build().unwrap();
        let m = |s: &str| mask_from_letters(s).unwrap();
        let bc = Perm::from_cycles(6, &[&[1, 2]]);
        // (B,C): neutrino AB ↦ AC (left electron)
        assert_eq!(permute_mask(&bc, m("AB")), m("AC"));
        // (B,C) fixes the right-handed particles (as quotient classes)
        for p in ["BC", "AD", "AE", "AF", "DE", "DF", "EF"] {
            assert_eq!(quotient_rep(permute_mask(&bc, m(p))), quotient_rep(m(p)));
        }
        // (B,C): left down quark CD ↦ BD (left up quark, same colour)
        assert_eq!(permute_mask(&bc, m("CD")), m("BD"));
        // (D,E,F): colour cycle on right down quarks
        let def = Perm::from_cycles(6, &[&[3, 4, 5]]);
        assert_eq!(permute_mask(&def, m("AD")), m("AE"));
        assert_eq!(permute_mask(&def, m("AE")), m("AF"));
        assert_eq!(permute_mask(&def, m("AF")), m("AD"));
    }

    #[test]
    fn quotient_action_is_a_homomorphism() {
        let model = Gf2Model::build().unwrap();
        let act = model.quotient_action();
        assert!(act.homomorphism_spot_check(100, 3));
        assert_eq!(act.degree, 16);
    }
}
