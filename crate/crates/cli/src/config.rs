use kzrat_core::chains::{BasisChain, ChainRegistry, ExplicitChain};
use kzrat_core::model::{build_s3_system, symbolic_system, KZSystem};
use kzrat_core::scalar::{parse_rational, render_rational, ParamScalar, Rational};
use kzrat_core::KzError;

use crate::args::{Format, GenerateArgs};
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq)]
pub enum Mode {
    Symbolic,
    Numeric { z1: Rational, z2: Rational },
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Symbolic => "symbolic",
            Mode::Numeric { .. } => "numeric",
        }
    }

    /// Text of the two pole locations.
    pub fn parameters(&self) -> (String, String) {
        match self {
            Mode::Symbolic => ("z1".into(), "z2".into()),
            Mode::Numeric { z1, z2 } => (render_rational(z1), render_rational(z2)),
        }
    }

    pub fn system(&self) -> CliResult<KZSystem> {
        Ok(match self {
            Mode::Symbolic => symbolic_system(),
            Mode::Numeric { z1, z2 } => build_s3_system(
                ParamScalar::from_rational(z1.clone()),
                ParamScalar::from_rational(z2.clone()),
            )?,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SeedSelection {
    Named(String),
    Explicit { order: i64, vector: [ParamScalar; 3] },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mode: Mode,
    pub k_max: i64,
    pub format: Format,
    pub seed: SeedSelection,
}

impl RunConfig {
    pub fn from_args(args: &GenerateArgs) -> CliResult<Self> {
        let mode = match (&args.z1, &args.z2) {
            (Some(a), Some(b)) => {
                let z1 = parse_rational(a).map_err(|e| CliError::Usage(format!("--z1 {a}: {e}")))?;
                let z2 = parse_rational(b).map_err(|e| CliError::Usage(format!("--z2 {b}: {e}")))?;
                if z1 == z2 {
                    return Err(KzError::DegenerateConfiguration(format!(
                        "z1 = z2 = {}",
                        render_rational(&z1)
                    ))
                    .into());
                }
                Mode::Numeric { z1, z2 }
            }
            (None, None) => Mode::Symbolic,
            _ => return Err(CliError::Usage("--z1 and --z2 must be given together".into())),
        };
        let seed = match (&args.seed_order, &args.seed_vector) {
            (Some(order), Some(text)) => SeedSelection::Explicit {
                order: *order,
                vector: parse_vector(text)?,
            },
            _ => SeedSelection::Named(args.seed.clone()),
        };
        Ok(RunConfig {
            mode,
            k_max: args.kmax,
            format: args.output.format,
            seed,
        })
    }

    pub fn registry(&self) -> ChainRegistry {
        match &self.seed {
            SeedSelection::Named(_) => ChainRegistry::standard(),
            SeedSelection::Explicit { order, vector } => {
                let mut r = ChainRegistry::empty();
                r.register(Box::new(ExplicitChain::new(*order, vector.clone())));
                r
            }
        }
    }

    pub fn select<'r>(&self, registry: &'r ChainRegistry) -> CliResult<Vec<&'r dyn BasisChain>> {
        let name = match &self.seed {
            SeedSelection::Named(n) => n.as_str(),
            SeedSelection::Explicit { .. } => "explicit",
        };
        registry.select(name).map_err(|e| CliError::Usage(e.to_string()))
    }
}

fn parse_vector(text: &str) -> CliResult<[ParamScalar; 3]> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(format!(
            "--seed-vector needs three comma-separated entries, got {}",
            parts.len()
        )));
    }
    let parse = |s: &str| ParamScalar::parse(s).map_err(|e| CliError::Usage(format!("--seed-vector `{s}`: {e}")));
    Ok([parse(parts[0])?, parse(parts[1])?, parse(parts[2])?])
}
