//! Suite runner: builds the task list for a suite, executes it (in parallel
//! across independent tasks when the `parallel` feature is enabled), and
//! assembles the deterministic report.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use crate::registry::Registry;
use crate::report::{file_hash, CheckRecord, VerificationReport};

/// Everything a suite needs to run.
pub struct SuiteContext {
    pub fixtures_dir: PathBuf,
    pub constants_path: PathBuf,
    pub registry: Arc<Registry>,
    pub seed: u64,
    /// Restrict clifford fixture checks to one named fixture.
    pub fixture_filter: Option<String>,
}

impl SuiteContext {
    pub fn clifford_fixtures_path(&self) -> PathBuf {
        self.fixtures_dir.join("clifford_fixtures.json")
    }
    pub fn particles_path(&self) -> PathBuf {
        self.fixtures_dir.join("particles.json")
    }
}

/// An independent unit of verification work producing some check records.
pub type Task = Box<dyn FnOnce() -> Vec<CheckRecord> + Send>;

#[cfg(feature = "parallel")]
pub fn run_tasks(tasks: Vec<Task>, parallel: bool) -> Vec<CheckRecord> {
    if parallel {
        use rayon::prelude::*;
        tasks.into_par_iter().flat_map(|t| t()).collect()
    } else {
        tasks.into_iter().flat_map(|t| t()).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub fn run_tasks(tasks: Vec<Task>, _parallel: bool) -> Vec<CheckRecord> {
    tasks.into_iter().flat_map(|t| t()).collect()
}

pub const SUITE_NAMES: [&str; 7] =
    ["clifford", "groups", "repkit", "finfield", "klein", "mass", "all"];

/// Run one named suite (or all of them) and assemble the report.
pub fn run_suite(
    name: &str,
    ctx: &Arc<SuiteContext>,
    parallel: bool,
) -> Result<VerificationReport, String> {
    let started = Instant::now();
    let mut tasks: Vec<Task> = Vec::new();
    let add = |suite: &str, tasks: &mut Vec<Task>| -> Result<(), String> {
        match suite {
            "clifford" => tasks.extend(crate::suites::clifford_suite(ctx)?),
            "groups" => tasks.extend(crate::suites::groups_suite(ctx)?),
            "repkit" => tasks.extend(crate::suites::repkit_suite(ctx)?),
            "finfield" => tasks.extend(crate::suites::finfield_suite(ctx)?),
            "klein" => tasks.extend(crate::suites::klein_suite(ctx)?),
            "mass" => tasks.extend(crate::suites::mass_suite(ctx)?),
            _ => return Err(format!("unknown suite {suite:?}")),
        }
        Ok(())
    };
    if name == "all" {
        for suite in SUITE_NAMES.iter().filter(|s| **s != "all") {
            add(suite, &mut tasks)?;
        }
    } else {
        add(name, &mut tasks)?;
    }
    let mut checks = run_tasks(tasks, parallel);
    checks.sort_by(|a, b| a.id.cmp(&b.id));

    let mut input_hashes = BTreeMap::new();
    for path in [ctx.clifford_fixtures_path(), ctx.particles_path(), ctx.constants_path.clone()] {
        if path.exists() {
            input_hashes
                .insert(path.file_name().unwrap().to_string_lossy().into_owned(), file_hash(&path)?);
        }
    }
    Ok(VerificationReport {
        suite: name.to_string(),
        toolkit_version: env!("CARGO_PKG_VERSION").to_string(),
        seed: ctx.seed,
        input_hashes,
        duration_ms: started.elapsed().as_millis() as u64,
        checks,
    })
}
