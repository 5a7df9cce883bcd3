//! Coefficients of the expansion `W(z) = sum_k z^(-k) G_k` at infinity.
//!
//! Matching powers of `z` in `dW/dz = c A(z) W` gives, level by level,
//!
//! ```text
//! (m I + c T) G_m = -c * sum_{r + s = m - 1, r >= 0} T_r G_s
//! ```
//!
//! which for `c = -2` is `(m I - 2T) G_m = 2 sum T_r G_s`. Levels where
//! `m = -c * lambda` for an eigenvalue `lambda` of `T` are resonant: the
//! right-hand side must have no component along that eigenvector, and the
//! kernel direction is a free parameter that is always fixed to zero here.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{KzError, Result};
use crate::linalg::{lift_matrix, lift_vec3, to_vec3, vec3_add, vec3_is_zero, vec3_scale, Matrix, Vec3};
use crate::model::{eigensystem, EigenSystem, KZSystem};
use crate::scalar::rational::int;
use crate::scalar::{ParamScalar, Rational};

pub const DEFAULT_K_MAX: i64 = 12;

/// Lowest nonzero coefficient of a chain.
#[derive(Clone, Debug, PartialEq)]
pub struct SeedSpec {
    pub order: i64,
    pub vector: Vec3<ParamScalar>,
}

impl SeedSpec {
    pub fn new(order: i64, vector: Vec3<ParamScalar>) -> Self {
        SeedSpec { order, vector }
    }

    pub fn from_rational(order: i64, vector: &Vec3<Rational>) -> Self {
        SeedSpec {
            order,
            vector: lift_vec3(vector),
        }
    }
}

/// A level where the solve matrix was singular.
#[derive(Clone, Debug, PartialEq)]
pub struct Resonance {
    pub level: i64,
    pub kernel: Vec3<Rational>,
    pub free_parameter: ParamScalar,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable {
    seed_order: i64,
    k_max: i64,
    coeffs: BTreeMap<i64, Vec3<ParamScalar>>,
    resonances: Vec<Resonance>,
}

impl CoefficientTable {
    pub fn seed_order(&self) -> i64 {
        self.seed_order
    }

    pub fn k_max(&self) -> i64 {
        self.k_max
    }

    /// `G_k`; zero below the seed order. Panics above `k_max`.
    pub fn get(&self, k: i64) -> Vec3<ParamScalar> {
        assert!(k <= self.k_max, "order {k} beyond table k_max {}", self.k_max);
        self.coeffs.get(&k).cloned().unwrap_or_else(zero3)
    }

    pub fn resonances(&self) -> &[Resonance] {
        &self.resonances
    }

    /// Rows `(k, G_k)` for `from <= k <= k_max`.
    pub fn rows(&self, from: i64) -> Vec<(i64, Vec3<ParamScalar>)> {
        (from..=self.k_max).map(|k| (k, self.get(k))).collect()
    }
}

pub fn zero3() -> Vec3<ParamScalar> {
    std::array::from_fn(|_| ParamScalar::zero())
}

/// Recurrence solver bound to one system; caches `T`, its eigensystem and the
/// series matrices.
pub struct SeriesEngine<'a> {
    sys: &'a KZSystem,
    factor: Rational,
    total: Matrix<Rational>,
    eigen: EigenSystem,
    eigen_basis_inv: Matrix<Rational>,
}

impl<'a> SeriesEngine<'a> {
    pub fn new(sys: &'a KZSystem) -> Result<Self> {
        let total = sys.total_matrix();
        let eigen = eigensystem(&total)?;
        let eigen_basis_inv = eigen.basis().inverse()?;
        Ok(SeriesEngine {
            sys,
            factor: -sys.multiplier().clone(),
            total,
            eigen,
            eigen_basis_inv,
        })
    }

    pub fn system(&self) -> &KZSystem {
        self.sys
    }

    pub fn eigen(&self) -> &EigenSystem {
        &self.eigen
    }

    /// Recurrence factor; 2 for the multiplier -2.
    pub fn factor(&self) -> &Rational {
        &self.factor
    }

    /// Levels where `m I - factor T` is singular.
    pub fn resonant_levels(&self) -> Vec<Rational> {
        self.eigen
            .pairs
            .iter()
            .map(|p| &p.value * &self.factor)
            .collect()
    }

    /// `factor * sum_{r + s = q, r >= 0} T_r G_s`.
    pub fn recurrence_rhs(&self, q: i64, table: &CoefficientTable) -> Result<Vec3<ParamScalar>> {
        let mut acc = zero3();
        for s in table.seed_order()..=q {
            let g = table.get(s);
            if vec3_is_zero(&g) {
                continue;
            }
            let t = self.sys.series_matrix(q - s)?;
            acc = vec3_add(&acc, &to_vec3(t.mul_vec(&g)?));
        }
        Ok(vec3_scale(&acc, &ParamScalar::from_rational(self.factor.clone())))
    }

    /// Coordinates of `v` in the eigenvector basis.
    pub fn eigen_components(&self, v: &Vec3<ParamScalar>) -> Vec3<ParamScalar> {
        to_vec3(
            lift_matrix(&self.eigen_basis_inv)
                .mul_vec(v)
                .expect("3x3 basis"),
        )
    }

    fn level_matrix(&self, m: i64) -> Matrix<Rational> {
        Matrix::identity(3)
            .scale(&int(m))
            .add(&self.total.scale(&-self.factor.clone()))
            .expect("3x3")
    }

    /// Solves `(m I - factor T) G = rhs`. At a resonant level the component of
    /// `rhs` along the kernel eigenvector must vanish; the returned solution has
    /// zero component along it and the free parameter is recorded as zero.
    pub fn solve_level(
        &self,
        m: i64,
        rhs: &Vec3<ParamScalar>,
    ) -> Result<(Vec3<ParamScalar>, Option<Resonance>)> {
        let level = int(m);
        let resonant = self
            .eigen
            .pairs
            .iter()
            .position(|p| &p.value * &self.factor == level);
        let Some(kernel_idx) = resonant else {
            let a = lift_matrix(&self.level_matrix(m));
            let x = a.solve_vec(rhs)?;
            return Ok((to_vec3(x), None));
        };
        let comps = self.eigen_components(rhs);
        let kernel = self.eigen.pairs[kernel_idx].vector.clone();
        if !comps[kernel_idx].is_zero() {
            return Err(KzError::UnsolvableResonance {
                level: m,
                eigenvector: format!("{:?}", kernel.iter().map(crate::scalar::render_rational).collect::<Vec<_>>()),
                component: comps[kernel_idx].render(),
            });
        }
        let mut sol = zero3();
        for (j, pair) in self.eigen.pairs.iter().enumerate() {
            if j == kernel_idx || comps[j].is_zero() {
                continue;
            }
            let denom = &level - &(&pair.value * &self.factor);
            let coeff = comps[j].scale(&denom.recip());
            sol = vec3_add(&sol, &vec3_scale(&lift_vec3(&pair.vector), &coeff));
        }
        Ok((
            sol,
            Some(Resonance {
                level: m,
                kernel,
                free_parameter: ParamScalar::zero(),
            }),
        ))
    }

    pub fn validate_seed(&self, seed: &SeedSpec) -> Result<()> {
        if vec3_is_zero(&seed.vector) {
            return Err(KzError::InvalidSeed("seed vector is zero".into()));
        }
        let residual = lift_matrix(&self.level_matrix(seed.order)).mul_vec(&seed.vector)?;
        if residual.iter().any(|x| !x.is_zero()) {
            return Err(KzError::InvalidSeed(format!(
                "vector [{}] is not an eigenvector of {}T with eigenvalue {}",
                seed.vector.iter().map(|s| s.render()).collect::<Vec<_>>().join(", "),
                crate::scalar::render_rational(&self.factor),
                seed.order
            )));
        }
        Ok(())
    }

    pub fn generate(&self, seed: &SeedSpec, k_max: i64) -> Result<CoefficientTable> {
        self.validate_seed(seed)?;
        if k_max < seed.order {
            return Err(KzError::InvalidSeed(format!(
                "k_max {k_max} is below the seed order {}",
                seed.order
            )));
        }
        let mut table = CoefficientTable {
            seed_order: seed.order,
            k_max: seed.order,
            coeffs: BTreeMap::from([(seed.order, seed.vector.clone())]),
            resonances: Vec::new(),
        };
        for m in seed.order + 1..=k_max {
            let rhs = self.recurrence_rhs(m - 1, &table)?;
            let (g, resonance) = self.solve_level(m, &rhs)?;
            table.coeffs.insert(m, g);
            table.resonances.extend(resonance);
            table.k_max = m;
        }
        Ok(table)
    }

    /// An empty table with the given seed order, for evaluating right-hand
    /// sides of hand-built chains.
    pub fn table_from(&self, seed_order: i64, coeffs: BTreeMap<i64, Vec3<ParamScalar>>) -> CoefficientTable {
        let k_max = coeffs.keys().max().copied().unwrap_or(seed_order);
        CoefficientTable {
            seed_order,
            k_max,
            coeffs,
            resonances: Vec::new(),
        }
    }
}

/// Lower-order table extended with zeros, for orders below a chain's seed.
pub fn zero_table(seed_order: i64, k_max: i64) -> CoefficientTable {
    CoefficientTable {
        seed_order,
        k_max,
        coeffs: BTreeMap::new(),
        resonances: Vec::new(),
    }
}

pub fn recurrence_rhs(sys: &KZSystem, q: i64, table: &CoefficientTable) -> Result<Vec3<ParamScalar>> {
    SeriesEngine::new(sys)?.recurrence_rhs(q, table)
}

pub fn solve_level(
    sys: &KZSystem,
    m: i64,
    rhs: &Vec3<ParamScalar>,
) -> Result<(Vec3<ParamScalar>, Option<Resonance>)> {
    SeriesEngine::new(sys)?.solve_level(m, rhs)
}

pub fn generate(sys: &KZSystem, seed: &SeedSpec, k_max: i64) -> Result<CoefficientTable> {
    SeriesEngine::new(sys)?.generate(seed, k_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::symbolic_system;

    fn v(items: [&str; 3]) -> Vec3<ParamScalar> {
        items.map(|s| ParamScalar::parse(s).unwrap())
    }

    fn ell(a: i64, b: i64, c: i64) -> Vec3<Rational> {
        [int(a), int(b), int(c)]
    }

    #[test]
    fn first_rhs_of_w1_chain() {
        let sys = symbolic_system();
        let eng = SeriesEngine::new(&sys).unwrap();
        let seed = SeedSpec::from_rational(-2, &ell(2, -1, -1));
        let table = eng.generate(&seed, -2).unwrap();
        let rhs = eng.recurrence_rhs(-2, &table).unwrap();
        assert_eq!(rhs, v(["-2*z1 - 2*z2", "4*z1 - 2*z2", "-2*z1 + 4*z2"]));
        let (g, res) = eng.solve_level(-1, &rhs).unwrap();
        assert_eq!(g, v(["-2*z1 - 2*z2", "2*z2", "2*z1"]));
        assert!(res.is_none());
        // below the seed the sum is empty
        assert_eq!(eng.recurrence_rhs(-4, &table).unwrap(), zero3());
    }

    #[test]
    fn resonant_level_two() {
        let sys = symbolic_system();
        let eng = SeriesEngine::new(&sys).unwrap();
        let rhs = v(["4*(z1 - z2)^4", "-2*(z1 - z2)^4", "-2*(z1 - z2)^4"]);
        let (g, res) = eng.solve_level(2, &rhs).unwrap();
        assert_eq!(g, v(["(z1 - z2)^4", "-(1/2)*(z1 - z2)^4", "-(1/2)*(z1 - z2)^4"]));
        let res = res.unwrap();
        assert_eq!(res.kernel, ell(0, 1, -1));
        assert!(res.free_parameter.is_zero());

        let bad = lift_vec3(&ell(0, 1, -1));
        assert!(matches!(
            eng.solve_level(2, &bad),
            Err(KzError::UnsolvableResonance { level: 2, .. })
        ));
    }

    #[test]
    fn w1_chain_low_orders() {
        let sys = symbolic_system();
        let table = generate(&sys, &SeedSpec::from_rational(-2, &ell(2, -1, -1)), 4).unwrap();
        assert_eq!(
            table.get(0),
            v(["-z1^2 + 4*z1*z2 - z2^2", "z1*(z1 - 2*z2)", "z2*(-2*z1 + z2)"])
        );
        assert_eq!(table.get(1), v(["0", "2*(z1 - z2)^3", "-2*(z1 - z2)^3"]));
        let levels: Vec<i64> = table.resonances().iter().map(|r| r.level).collect();
        assert_eq!(levels, vec![2, 4]);
        assert_eq!(table.get(-3), zero3());
    }

    #[test]
    fn w2_chain_third_coefficient() {
        // exact solve of (3I - 2T) g3 = 2 T0 g2 (frozen from an independent
        // symbolic computation)
        let sys = symbolic_system();
        let table = generate(&sys, &SeedSpec::from_rational(2, &ell(0, 1, -1)), 4).unwrap();
        assert_eq!(
            table.get(3),
            v(["(2/5)*(z1 - z2)", "(2/5)*(2*z1 + 3*z2)", "(2/5)*(-3*z1 - 2*z2)"])
        );
        assert_eq!(
            table.get(4),
            v([
                "(3/5)*(z1 - z2)*(z1 + z2)",
                "(5*z1^2 + 2*z1*z2 + 8*z2^2)/5",
                "-(8*z1^2 + 2*z1*z2 + 5*z2^2)/5"
            ])
        );
        assert_eq!(table.get(1), zero3());
    }

    /// Coefficient of `z^-k` in `((z - z1)(z - z2))^-2`, from the product of
    /// the two geometric-type series `sum (n + 1) a^n z^(-n-2)`.
    fn double_pole_coefficient(k: i64) -> ParamScalar {
        let mut acc = ParamScalar::zero();
        for i in 0..=(k - 4).max(-1) {
            let j = k - 4 - i;
            let term = &(&ParamScalar::z1().pow(i as i32).unwrap()
                * &ParamScalar::z2().pow(j as i32).unwrap())
                * &ParamScalar::from_int((i + 1) * (j + 1));
            acc = &acc + &term;
        }
        acc
    }

    #[test]
    fn w3_chain_matches_geometric_expansion() {
        let sys = symbolic_system();
        let table = generate(&sys, &SeedSpec::from_rational(4, &ell(1, 1, 1)), 8).unwrap();
        for k in 4..=8 {
            let c = double_pole_coefficient(k);
            assert_eq!(table.get(k), [c.clone(), c.clone(), c], "order {k}");
        }
        assert!(table.resonances().is_empty());
    }

    #[test]
    fn invalid_seeds_are_rejected() {
        let sys = symbolic_system();
        assert!(matches!(
            generate(&sys, &SeedSpec::from_rational(2, &ell(1, 1, 1)), 4),
            Err(KzError::InvalidSeed(_))
        ));
        assert!(matches!(
            generate(&sys, &SeedSpec::from_rational(4, &ell(0, 0, 0)), 4),
            Err(KzError::InvalidSeed(_))
        ));
        assert!(matches!(
            generate(&sys, &SeedSpec::from_rational(4, &ell(1, 1, 1)), 3),
            Err(KzError::InvalidSeed(_))
        ));
    }
}
