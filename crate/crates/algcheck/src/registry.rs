//! The named group registry: builds and memoizes the permutation
//! realizations of every group the suites verify, plus their character
//! tables (optionally cached on disk, keyed by generator content hash).

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use crate::finfield::{build_sl23, build_sl29, Gf4Model};
use crate::permgroup::{close_indices, Perm, PermGroup};
use crate::repkit::{cache, character_table, CharacterTable};

pub const GROUP_NAMES: [&str; 11] = [
    "alt5",
    "alt6",
    "sym4",
    "sym6",
    "2alt4-quaternion",
    "2sym4",
    "2alt5",
    "2alt6",
    "sl23",
    "sl29",
    "3alt6-gf4",
];

pub struct Registry {
    groups: Mutex<HashMap<String, Arc<PermGroup>>>,
    tables: Mutex<HashMap<String, Arc<CharacterTable>>>,
    pub cache_dir: Option<PathBuf>,
}

impl Registry {
    pub fn new(cache_dir: Option<PathBuf>) -> Registry {
        Registry { groups: Mutex::new(HashMap::new()), tables: Mutex::new(HashMap::new()), cache_dir }
    }

    pub fn group(&self, name: &str) -> Result<Arc<PermGroup>, String> {
        if let Some(g) = self.groups.lock().unwrap().get(name) {
            return Ok(g.clone());
        }
        let built = Arc::new(build_group(self, name)?);
        self.groups.lock().unwrap().insert(name.to_string(), built.clone());
        Ok(built)
    }

    pub fn table(&self, name: &str) -> Result<Arc<CharacterTable>, String> {
        if let Some(t) = self.tables.lock().unwrap().get(name) {
            return Ok(t.clone());
        }
        let group = self.group(name)?;
        let table = if let Some(dir) = &self.cache_dir {
            match cache::load(dir, name, &group)? {
                Some(t) => t,
                None => {
                    let t = character_table(group.clone())?;
                    cache::store(dir, name, &t)?;
                    t
                }
            }
        } else {
            character_table(group.clone())?
        };
        let table = Arc::new(table);
        self.tables.lock().unwrap().insert(name.to_string(), table.clone());
        Ok(table)
    }
}

fn expect_order(g: PermGroup, expected: usize, name: &str) -> Result<PermGroup, String> {
    if g.order() != expected {
        return Err(format!("{name}: closure has order {}, expected {expected}", g.order()));
    }
    Ok(g)
}

/// Deterministic search for a subgroup of the given order generated by an
/// element of order `o1` and one of order `o2`.
fn subgroup_by_orders(
    parent: &PermGroup,
    o1: usize,
    o2: usize,
    order: usize,
    name: &str,
) -> Result<PermGroup, String> {
    let firsts: Vec<usize> = (0..parent.order())
        .filter(|&i| parent.element(i).order() == o1)
        .take(8)
        .collect();
    let seconds: Vec<usize> =
        (0..parent.order()).filter(|&i| parent.element(i).order() == o2).collect();
    for &x in &firsts {
        for &y in &seconds {
            if let Some(els) = close_indices(parent, &[x, y], order) {
                if els.len() == order {
                    let gens = vec![parent.element(x).clone(), parent.element(y).clone()];
                    let elements = els.iter().map(|&i| parent.element(i).clone()).collect();
                    return Ok(PermGroup::from_elements(parent.degree(), gens, elements));
                }
            }
        }
    }
    Err(format!("{name}: no subgroup of order {order} found by the pair search"))
}

fn build_group(reg: &Registry, name: &str) -> Result<PermGroup, String> {
    match name {
        "alt5" => expect_order(
            PermGroup::close(
                vec![
                    Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]),
                    Perm::from_cycles(5, &[&[0, 1, 2]]),
                ],
                1000,
            )?,
            60,
            name,
        ),
        "alt6" => expect_order(
            PermGroup::close(
                vec![
                    Perm::from_cycles(6, &[&[0, 1, 2, 3, 4]]),
                    Perm::from_cycles(6, &[&[3, 4, 5]]),
                ],
                1000,
            )?,
            360,
            name,
        ),
        "sym4" => expect_order(
            PermGroup::close(
                vec![Perm::from_cycles(4, &[&[0, 1, 2, 3]]), Perm::from_cycles(4, &[&[0, 1]])],
                100,
            )?,
            24,
            name,
        ),
        "sym6" => expect_order(
            PermGroup::close(
                vec![
                    Perm::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]),
                    Perm::from_cycles(6, &[&[0, 1]]),
                ],
                1000,
            )?,
            720,
            name,
        ),
        // the signed 8-point realization: points W,X,Y,Z,-W,-X,-Y,-Z
        "2alt4-quaternion" => expect_order(
            PermGroup::close(
                vec![
                    Perm::from_cycles(8, &[&[0, 1, 4, 5], &[2, 7, 6, 3]]),
                    Perm::from_cycles(8, &[&[1, 2, 3], &[5, 6, 7]]),
                ],
                100,
            )?,
            24,
            name,
        ),
        "sl23" => {
            let sl23 = build_sl23()?;
            expect_order(sl23.as_perm_group(100)?, 24, name)
        }
        "sl29" | "2alt6" => {
            let sl29 = build_sl29()?;
            expect_order(sl29.as_perm_group(2000)?, 720, name)
        }
        "3alt6-gf4" => {
            let model = Gf4Model::build()?;
            expect_order(model.group.as_perm_group(2000)?, 1080, name)
        }
        "2sym4" => {
            let parent = reg.group("sl29")?;
            subgroup_by_orders(&parent, 8, 3, 48, name)
        }
        "2alt5" => {
            let parent = reg.group("sl29")?;
            subgroup_by_orders(&parent, 10, 3, 120, name)
        }
        _ => Err(format!("unknown group {name:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_builds_every_group() {
        let reg = Registry::new(None);
        let expected = [
            ("alt5", 60),
            ("alt6", 360),
            ("sym4", 24),
            ("sym6", 720),
            ("2alt4-quaternion", 24),
            ("sl23", 24),
            ("2alt6", 720),
            ("3alt6-gf4", 1080),
            ("2sym4", 48),
            ("2alt5", 120),
        ];
        for (name, order) in expected {
            let g = reg.group(name).unwrap();
            assert_eq!(g.order(), order, "{name}");
        }
    }

    #[test]
    fn subgroups_live_inside_their_parent() {
        let reg = Registry::new(None);
        let parent = reg.group("2alt6").unwrap();
        for sub in ["2sym4", "2alt5"] {
            let h = reg.group(sub).unwrap();
            assert!(h.elements().iter().all(|p| parent.contains(p)), "{sub}");
        }
    }
}
