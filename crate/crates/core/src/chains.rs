//! Named seed strategies for the basis chains, selectable at runtime.

use crate::error::{KzError, Result};
use crate::linalg::Vec3;
use crate::scalar::rational::int;
use crate::scalar::{ParamScalar, Rational};
use crate::series::{SeedSpec, SeriesEngine};

/// A way of starting a coefficient chain.
pub trait BasisChain: Send + Sync {
    /// Registry key, e.g. `w1`.
    fn name(&self) -> &str;

    /// Display name of the resulting solution, e.g. `W1`.
    fn label(&self) -> &str;

    fn summary(&self) -> String;

    fn seed(&self, engine: &SeriesEngine<'_>) -> Result<SeedSpec>;
}

/// Seeds with the eigenvector of `T` for a given eigenvalue, at the order
/// where that eigenvector spans the kernel of the level matrix.
pub struct EigenvectorChain {
    name: String,
    label: String,
    eigenvalue: Rational,
}

impl EigenvectorChain {
    pub fn new(name: &str, label: &str, eigenvalue: Rational) -> Self {
        EigenvectorChain {
            name: name.to_string(),
            label: label.to_string(),
            eigenvalue,
        }
    }
}

impl BasisChain for EigenvectorChain {
    fn name(&self) -> &str {
        &self.name
    }

    fn label(&self) -> &str {
        &self.label
    }

    fn summary(&self) -> String {
        format!(
            "seed: eigenvector of T for eigenvalue {}",
            crate::scalar::render_rational(&self.eigenvalue)
        )
    }

    fn seed(&self, engine: &SeriesEngine<'_>) -> Result<SeedSpec> {
        let pair = engine.eigen().pair_for(&self.eigenvalue).ok_or_else(|| {
            KzError::InvalidSeed(format!(
                "{} is not an eigenvalue of T",
                crate::scalar::render_rational(&self.eigenvalue)
            ))
        })?;
        let order = &self.eigenvalue * engine.factor();
        if !order.is_integer() {
            return Err(KzError::InvalidSeed(format!(
                "seed order {} is not an integer",
                crate::scalar::render_rational(&order)
            )));
        }
        let order: i64 = order
            .to_integer()
            .try_into()
            .map_err(|_| KzError::InvalidSeed("seed order out of range".into()))?;
        Ok(SeedSpec::from_rational(order, &pair.vector))
    }
}

/// A caller-supplied seed; validated when the chain is generated.
pub struct ExplicitChain {
    seed: SeedSpec,
}

impl ExplicitChain {
    pub fn new(order: i64, vector: Vec3<ParamScalar>) -> Self {
        ExplicitChain {
            seed: SeedSpec::new(order, vector),
        }
    }
}

impl BasisChain for ExplicitChain {
    fn name(&self) -> &str {
        "explicit"
    }

    fn label(&self) -> &str {
        "W"
    }

    fn summary(&self) -> String {
        format!("explicit seed at order {}", self.seed.order)
    }

    fn seed(&self, _engine: &SeriesEngine<'_>) -> Result<SeedSpec> {
        Ok(self.seed.clone())
    }
}

pub struct ChainRegistry {
    chains: Vec<Box<dyn BasisChain>>,
}

impl ChainRegistry {
    pub fn empty() -> Self {
        ChainRegistry { chains: Vec::new() }
    }

    /// `w1` (order -2), `w2` (order 2) and `w3` (order 4).
    pub fn standard() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(EigenvectorChain::new("w1", "W1", int(-1))));
        r.register(Box::new(EigenvectorChain::new("w2", "W2", int(1))));
        r.register(Box::new(EigenvectorChain::new("w3", "W3", int(2))));
        r
    }

    /// Adds a chain; a chain with the same name is replaced.
    pub fn register(&mut self, chain: Box<dyn BasisChain>) {
        match self.chains.iter().position(|c| c.name() == chain.name()) {
            Some(i) => self.chains[i] = chain,
            None => self.chains.push(chain),
        }
    }

    pub fn get(&self, name: &str) -> Option<&dyn BasisChain> {
        self.chains.iter().find(|c| c.name() == name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> Vec<&str> {
        self.chains.iter().map(|c| c.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn BasisChain> {
        self.chains.iter().map(|c| c.as_ref())
    }

    /// A single registered name, or `all`.
    pub fn select(&self, selection: &str) -> Result<Vec<&dyn BasisChain>> {
        if selection == "all" {
            return Ok(self.iter().collect());
        }
        self.get(selection).map(|c| vec![c]).ok_or_else(|| {
            KzError::InvalidSeed(format!(
                "unknown chain `{selection}` (known: {}, all)",
                self.names().join(", ")
            ))
        })
    }
}

impl Default for ChainRegistry {
    fn default() -> Self {
        Self::standard()
    }
}
