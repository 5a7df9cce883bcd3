use crate::error::{KzError, Result};
use crate::linalg::Vec3;
use crate::model::KZSystem;
use crate::residue::RationalSolution;
use crate::scalar::ParamScalar;

use super::zfunc::{apply_matrix, PoleExpansion, ZPoly, ZRational};

/// Outcome of substituting a candidate into `dW/dz - c A(z) W`.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidualReport {
    pub is_zero: bool,
    pub residual_entries: Vec3<ZRational>,
}

pub fn differentiate(w: &RationalSolution) -> Result<Vec3<ZRational>> {
    PoleExpansion::from(w).differentiate().to_functions()
}

/// Exact residual over the common denominator `(z - z1)^3 (z - z2)^3`.
pub fn residual(sys: &KZSystem, w: &RationalSolution) -> Result<ResidualReport> {
    if &w.poles.0 != sys.z1() || &w.poles.1 != sys.z2() {
        return Err(KzError::DimensionMismatch(
            "solution poles differ from the system's".into(),
        ));
    }
    let expansion = PoleExpansion::from(w);
    let derivative = expansion.differentiate();
    let (d1, d2) = derivative.pole_orders();
    let (w1, w2) = expansion.pole_orders();
    let e1 = d1.max(w1 + 1);
    let e2 = d2.max(w2 + 1);

    let mut num = derivative.clear_denominators(e1, e2);
    let c = ParamScalar::from_rational(-sys.multiplier().clone());
    let poles = sys.poles();
    let parts = [
        (&poles[0].residue, expansion.clear_denominators(e1 - 1, e2)),
        (&poles[1].residue, expansion.clear_denominators(e1, e2 - 1)),
    ];
    for (residue, cleared) in parts {
        let term = apply_matrix(residue, &cleared);
        for i in 0..3 {
            num[i] = &num[i] + &term[i].scale(&c);
        }
    }
    let is_zero = num.iter().all(|p| p.is_zero());
    let (a, b) = &w.poles;
    Ok(ResidualReport {
        is_zero,
        residual_entries: num.map(|n| ZRational::over_poles(n, a, b, e1, e2)),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct IndependenceReport {
    pub independent: bool,
    pub determinant: ZRational,
}

/// Determinant of the matrix with the three solutions as columns.
pub fn independence(solutions: &[RationalSolution]) -> Result<IndependenceReport> {
    if solutions.len() != 3 {
        return Err(KzError::DimensionMismatch(format!(
            "independence needs exactly 3 solutions, got {}",
            solutions.len()
        )));
    }
    let poles = &solutions[0].poles;
    if solutions.iter().any(|s| &s.poles != poles) {
        return Err(KzError::DimensionMismatch("solutions have different poles".into()));
    }
    let cols: Vec<Vec3<ZPoly>> = solutions
        .iter()
        .map(|s| PoleExpansion::from(s).clear_denominators(2, 2))
        .collect();
    let e = |i: usize, j: usize| &cols[j][i];
    let minor = |a: usize, b: usize, c: usize, d: usize| &(e(1, a) * e(2, b)) - &(e(1, c) * e(2, d));
    let det = &(&(e(0, 0) * &minor(1, 2, 2, 1)) - &(e(0, 1) * &minor(0, 2, 2, 0)))
        + &(e(0, 2) * &minor(0, 1, 1, 0));
    let independent = !det.is_zero();
    Ok(IndependenceReport {
        independent,
        determinant: ZRational::over_poles(det, &poles.0, &poles.1, 6, 6),
    })
}

/// `sum_i alpha_i W_i`.
pub fn superpose(solutions: &[RationalSolution], alphas: &[ParamScalar]) -> Result<RationalSolution> {
    let first = solutions
        .first()
        .ok_or_else(|| KzError::DimensionMismatch("empty combination".into()))?;
    let mut acc = RationalSolution::zero(first.poles.clone());
    for (w, a) in solutions.iter().zip(alphas) {
        acc = acc.add(&w.scale(a))?;
    }
    Ok(acc)
}
