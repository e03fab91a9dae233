//! Command-line front end: run named verification suites, print the text
//! report, optionally write the JSON report, and exit nonzero on any FAIL.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::Parser;

use algcheck::registry::Registry;
use algcheck::runner::{run_suite, SuiteContext, SUITE_NAMES};

#[derive(Parser)]
#[command(name = "algcheck", version, about = "Exact-arithmetic verification suites")]
struct Cli {
    /// Suite to run: clifford, groups, repkit, finfield, klein, mass, all.
    #[arg(long, default_value = "all")]
    suite: String,

    /// Restrict the clifford suite to a single named fixture.
    #[arg(long)]
    fixture: Option<String>,

    /// Constants file (defaults to <fixtures>/codata2014.json).
    #[arg(long)]
    constants: Option<PathBuf>,

    /// Write the JSON report here as well.
    #[arg(long)]
    json: Option<PathBuf>,

    /// Cache directory for computed character tables.
    #[arg(long)]
    cache_dir: Option<PathBuf>,

    /// Seed for the randomized property checks (fixed by default so runs are
    /// deterministic).
    #[arg(long, default_value_t = 0xA1C0DE)]
    seed: u64,
}

/// Fixture files live in ./fixtures by default; ALGCHECK_FIXTURES overrides,
/// and a checkout-relative fallback covers running from inside the workspace.
fn resolve_fixtures_dir() -> PathBuf {
    if let Ok(dir) = std::env::var("ALGCHECK_FIXTURES") {
        return PathBuf::from(dir);
    }
    let cwd = PathBuf::from("fixtures");
    if cwd.exists() {
        return cwd;
    }
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !SUITE_NAMES.contains(&cli.suite.as_str()) {
        eprintln!("unknown suite {:?}; expected one of {:?}", cli.suite, SUITE_NAMES);
        return ExitCode::from(2);
    }
    let fixtures_dir = resolve_fixtures_dir();
    let constants_path =
        cli.constants.unwrap_or_else(|| fixtures_dir.join("codata2014.json"));
    let ctx = Arc::new(SuiteContext {
        fixtures_dir,
        constants_path,
        registry: Arc::new(Registry::new(cli.cache_dir.clone())),
        seed: cli.seed,
        fixture_filter: cli.fixture,
    });
    match run_suite(&cli.suite, &ctx, cfg!(feature = "parallel")) {
        Ok(report) => {
            print!("{}", report.render_text());
            if let Some(path) = cli.json {
                match report.to_json() {
                    Ok(json) => {
                        if let Err(e) = std::fs::write(&path, json) {
                            eprintln!("cannot write {}: {e}", path.display());
                            return ExitCode::from(2);
                        }
                    }
                    Err(e) => {
                        eprintln!("cannot serialize report: {e}");
                        return ExitCode::from(2);
                    }
                }
            }
            if report.fail_count() == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
