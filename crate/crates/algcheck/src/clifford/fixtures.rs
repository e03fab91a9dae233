//! The named fixture registry: generator sets, commuting pairs, Lie-closure
//! pairs and idempotent splittings, shipped as a versioned JSON data file.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::abstract_algebra::{AbElement, AbstractClifford};
use super::blade::MultiVector;
use super::parse::{parse_abstract_word, parse_gamma_expr};

#[derive(Serialize, Deserialize, Clone, Copy, PartialEq, Debug)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraKind {
    /// The 64-dimensional gamma-quaternion algebra.
    Gamma,
    /// Abstract Clifford algebra with declared generator squares.
    Abstract,
}

/// A named generator set with its claimed signature and pseudoscalar.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct GeneratorFixture {
    pub name: String,
    pub algebra: AlgebraKind,
    /// Declared squares of the abstract base generators (abstract kind only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub squares: Option<Vec<i8>>,
    pub generators: Vec<String>,
    /// Claimed (p, q).
    pub signature: (usize, usize),
    /// Claimed pseudoscalar, compared up to sign.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pseudoscalar: Option<String>,
    /// Exact sign of the computed pseudoscalar for the registered generator
    /// ordering, recorded in the registry once computed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pseudoscalar_sign: Option<i8>,
    /// Five-generator sets presenting the 4x4 complex algebra.
    #[serde(default)]
    pub dirac: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CommutingPairFixture {
    pub name: String,
    pub gens_a: Vec<String>,
    pub gens_b: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct LiePairFixture {
    pub name: String,
    /// Lie generators expected to close at dimension `expected_dims.0`.
    pub su2: Vec<String>,
    /// Extra central element; adjoining it gives dimension `expected_dims.1`.
    pub u1: String,
    pub expected_dims: (usize, usize),
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct IdempotentFixture {
    pub name: String,
    pub idempotent: String,
    pub algebra_generators: Vec<String>,
    pub corner_triple: Vec<String>,
    pub expected_corner_dim: usize,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FixtureEntry {
    Generators(GeneratorFixture),
    CommutingPair(CommutingPairFixture),
    LiePair(LiePairFixture),
    Idempotent(IdempotentFixture),
}

impl FixtureEntry {
    pub fn name(&self) -> &str {
        match self {
            FixtureEntry::Generators(f) => &f.name,
            FixtureEntry::CommutingPair(f) => &f.name,
            FixtureEntry::LiePair(f) => &f.name,
            FixtureEntry::Idempotent(f) => &f.name,
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FixtureFile {
    pub version: u32,
    pub fixtures: Vec<FixtureEntry>,
}

impl FixtureFile {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("bad fixture file {}: {e}", path.display()))
    }

    pub fn generator_fixtures(&self) -> impl Iterator<Item = &GeneratorFixture> {
        self.fixtures.iter().filter_map(|f| match f {
            FixtureEntry::Generators(g) => Some(g),
            _ => None,
        })
    }
}

/// Generator fixture with its expressions parsed into algebra elements.
pub enum ParsedGenerators {
    Gamma { generators: Vec<MultiVector>, pseudoscalar: Option<MultiVector> },
    Abstract { generators: Vec<AbElement>, pseudoscalar: Option<AbElement> },
}

impl GeneratorFixture {
    pub fn parse(&self) -> Result<ParsedGenerators, String> {
        match self.algebra {
            AlgebraKind::Gamma => {
                let generators = self
                    .generators
                    .iter()
                    .map(|s| parse_gamma_expr(s))
                    .collect::<Result<Vec<_>, _>>()?;
                let pseudoscalar =
                    self.pseudoscalar.as_ref().map(|s| parse_gamma_expr(s)).transpose()?;
                Ok(ParsedGenerators::Gamma { generators, pseudoscalar })
            }
            AlgebraKind::Abstract => {
                let squares = self
                    .squares
                    .clone()
                    .ok_or_else(|| format!("{}: abstract fixture without squares", self.name))?;
                let algebra: Arc<AbstractClifford> = AbstractClifford::new(squares);
                let generators = self
                    .generators
                    .iter()
                    .map(|s| parse_abstract_word(&algebra, s))
                    .collect::<Result<Vec<_>, _>>()?;
                let pseudoscalar = self
                    .pseudoscalar
                    .as_ref()
                    .map(|s| parse_abstract_word(&algebra, s))
                    .transpose()?;
                Ok(ParsedGenerators::Abstract { generators, pseudoscalar })
            }
        }
    }
}
