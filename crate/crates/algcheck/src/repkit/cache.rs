//! Character-table export schema and the on-disk cache keyed by registry
//! name plus a content hash of the generators.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::exactmath::{parse_decimal, Cyclotomic, Rational};
use crate::permgroup::{ConjugacyData, Perm, PermGroup};

use super::table::{CharRow, CharacterTable};

#[derive(Serialize, Deserialize)]
pub struct TableFile {
    pub group: String,
    pub order: usize,
    pub prime: u64,
    pub classes: Vec<ClassHeader>,
    pub rows: Vec<RowData>,
}

#[derive(Serialize, Deserialize)]
pub struct ClassHeader {
    pub order: usize,
    pub size: usize,
    pub representative: String,
}

#[derive(Serialize, Deserialize)]
pub struct RowData {
    pub name: String,
    pub degree: usize,
    pub values: Vec<ValueData>,
}

/// A cyclotomic number as (order, canonical coefficients as exact strings).
#[derive(Serialize, Deserialize)]
pub struct ValueData {
    pub order: u64,
    pub coeffs: Vec<String>,
}

fn value_to_data(v: &Cyclotomic) -> ValueData {
    ValueData {
        order: v.order(),
        coeffs: v.coeffs().iter().map(|c| c.to_string()).collect(),
    }
}

fn value_from_data(d: &ValueData) -> Result<Cyclotomic, String> {
    let terms: Vec<(i64, Rational)> = d
        .coeffs
        .iter()
        .enumerate()
        .map(|(t, s)| Ok((t as i64, parse_decimal(s)?)))
        .collect::<Result<_, String>>()?;
    Cyclotomic::reduce(d.order, &terms)
}

/// Content hash of a generator list; any edit to the generators changes the
/// key and invalidates cached tables.
pub fn generator_hash(gens: &[Perm]) -> String {
    let mut hasher = Sha256::new();
    for g in gens {
        hasher.update((g.degree() as u64).to_le_bytes());
        for &x in g.images() {
            hasher.update(x.to_le_bytes());
        }
    }
    let digest = hasher.finalize();
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

pub fn cache_path(dir: &Path, name: &str, gens: &[Perm]) -> PathBuf {
    dir.join(format!("{name}-{}.json", generator_hash(gens)))
}

pub fn export(table: &CharacterTable, name: &str) -> TableFile {
    TableFile {
        group: name.to_string(),
        order: table.group.order(),
        prime: table.prime,
        classes: (0..table.num_classes())
            .map(|j| ClassHeader {
                order: table.conj.orders[j],
                size: table.conj.sizes[j],
                representative: table.group.element(table.conj.reps[j]).cycles_string(),
            })
            .collect(),
        rows: table
            .rows
            .iter()
            .map(|r| RowData {
                name: r.name.clone(),
                degree: r.degree,
                values: r.values.iter().map(value_to_data).collect(),
            })
            .collect(),
    }
}

/// Store a computed table in the cache directory.
pub fn store(dir: &Path, name: &str, table: &CharacterTable) -> Result<(), String> {
    std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
    let path = cache_path(dir, name, table.group.gens());
    let file = export(table, name);
    let json = serde_json::to_string_pretty(&file).map_err(|e| e.to_string())?;
    std::fs::write(&path, json).map_err(|e| e.to_string())
}

/// Load a cached table for this exact group if present; the group structure
/// (classes) is recomputed, only the rows are trusted from disk, and
/// orthogonality is re-verified.
pub fn load(
    dir: &Path,
    name: &str,
    group: &Arc<PermGroup>,
) -> Result<Option<CharacterTable>, String> {
    let path = cache_path(dir, name, group.gens());
    if !path.exists() {
        return Ok(None);
    }
    let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
    let file: TableFile = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    if file.order != group.order() {
        return Ok(None);
    }
    let conj: ConjugacyData = group.conjugacy_classes();
    if file.classes.len() != conj.num_classes() {
        return Ok(None);
    }
    let rows = file
        .rows
        .iter()
        .map(|r| {
            Ok(CharRow {
                name: r.name.clone(),
                degree: r.degree,
                values: r.values.iter().map(value_from_data).collect::<Result<_, String>>()?,
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    let table = CharacterTable { group: group.clone(), conj, prime: file.prime, rows };
    table.verify_orthogonality()?;
    Ok(Some(table))
}

#[cfg(test)]
mod tests {
    use super::super::dixon::character_table;
    use super::*;

    #[test]
    fn cache_round_trip() {
        let a = Perm::from_cycles(4, &[&[0, 1, 2, 3]]);
        let b = Perm::from_cycles(4, &[&[0, 1]]);
        let g = Arc::new(PermGroup::close(vec![a, b], 100).unwrap());
        let t = character_table(g.clone()).unwrap();
        let dir = tempfile::tempdir().unwrap();
        store(dir.path(), "sym4", &t).unwrap();
        let loaded = load(dir.path(), "sym4", &g).unwrap().expect("cache hit");
        assert_eq!(loaded.rows.len(), t.rows.len());
        for (x, y) in loaded.rows.iter().zip(&t.rows) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.values, y.values);
        }
        // a different generator set misses the cache
        let other = Arc::new(
            PermGroup::close(vec![Perm::from_cycles(4, &[&[0, 1]]), Perm::from_cycles(4, &[&[2, 3]])], 100)
                .unwrap(),
        );
        assert!(load(dir.path(), "sym4", &other).unwrap().is_none());
    }
}
