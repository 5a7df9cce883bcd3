//! Seed -> chain -> residues -> assembled solution.

use crate::chains::BasisChain;
use crate::error::Result;
use crate::model::KZSystem;
use crate::residue::{assemble_solution, reconstruct_residues, table_moments, RationalSolution, ResidueSet};
use crate::series::{CoefficientTable, SeriesEngine};

#[derive(Clone, Debug)]
pub struct BasisSolution {
    pub label: String,
    pub chain: String,
    pub table: CoefficientTable,
    pub residues: ResidueSet,
    pub solution: RationalSolution,
}

pub fn construct(engine: &SeriesEngine<'_>, chain: &dyn BasisChain, k_max: i64) -> Result<BasisSolution> {
    let sys: &KZSystem = engine.system();
    let seed = chain.seed(engine)?;
    let table = engine.generate(&seed, k_max.max(4))?;
    let residues = reconstruct_residues(sys.z1(), sys.z2(), &table_moments(&table))?;
    let solution = assemble_solution(
        &table,
        residues.clone(),
        (sys.z1().clone(), sys.z2().clone()),
    );
    Ok(BasisSolution {
        label: chain.label().to_string(),
        chain: chain.name().to_string(),
        table,
        residues,
        solution,
    })
}
