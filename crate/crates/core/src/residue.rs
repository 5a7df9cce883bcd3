//! Partial-fraction form of a solution and the moment system linking its
//! residues to the expansion coefficients `G_1..G_4`.

use num_traits::Zero;

use crate::error::{KzError, Result};
use crate::linalg::{to_vec3, vec3_add, vec3_scale, Matrix, Vec3};
use crate::scalar::{ParamScalar, Rational};
use crate::series::{zero3, CoefficientTable};

/// 4x4 scalar pattern; each entry stands for that scalar times `I_3`.
pub type MomentMatrix = Matrix<ParamScalar>;

/// `R1/(z - z1)^2 + R2/(z - z1) + R3/(z - z2)^2 + R4/(z - z2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueSet {
    pub r1: Vec3<ParamScalar>,
    pub r2: Vec3<ParamScalar>,
    pub r3: Vec3<ParamScalar>,
    pub r4: Vec3<ParamScalar>,
}

impl ResidueSet {
    pub fn zero() -> Self {
        ResidueSet {
            r1: zero3(),
            r2: zero3(),
            r3: zero3(),
            r4: zero3(),
        }
    }

    pub fn as_array(&self) -> [&Vec3<ParamScalar>; 4] {
        [&self.r1, &self.r2, &self.r3, &self.r4]
    }

    pub fn from_array(v: [Vec3<ParamScalar>; 4]) -> Self {
        let [r1, r2, r3, r4] = v;
        ResidueSet { r1, r2, r3, r4 }
    }
}

/// `W(z) = residue terms + z^2 c2 + z c1 + c0`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalSolution {
    /// Coefficients of `z^2`, `z^1`, `z^0`.
    pub poly_part: [Vec3<ParamScalar>; 3],
    pub residues: ResidueSet,
    pub poles: (ParamScalar, ParamScalar),
}

impl RationalSolution {
    pub fn zero(poles: (ParamScalar, ParamScalar)) -> Self {
        RationalSolution {
            poly_part: [zero3(), zero3(), zero3()],
            residues: ResidueSet::zero(),
            poles,
        }
    }

    fn map_vectors(&self, f: impl Fn(&Vec3<ParamScalar>) -> Vec3<ParamScalar>) -> Self {
        RationalSolution {
            poly_part: [f(&self.poly_part[0]), f(&self.poly_part[1]), f(&self.poly_part[2])],
            residues: ResidueSet {
                r1: f(&self.residues.r1),
                r2: f(&self.residues.r2),
                r3: f(&self.residues.r3),
                r4: f(&self.residues.r4),
            },
            poles: self.poles.clone(),
        }
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        self.map_vectors(|v| vec3_scale(v, c))
    }

    /// Sum of two solutions written over the same poles.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.poles != other.poles {
            return Err(KzError::DimensionMismatch("solutions have different poles".into()));
        }
        let pp = |i: usize| vec3_add(&self.poly_part[i], &other.poly_part[i]);
        Ok(RationalSolution {
            poly_part: [pp(0), pp(1), pp(2)],
            residues: ResidueSet {
                r1: vec3_add(&self.residues.r1, &other.residues.r1),
                r2: vec3_add(&self.residues.r2, &other.residues.r2),
                r3: vec3_add(&self.residues.r3, &other.residues.r3),
                r4: vec3_add(&self.residues.r4, &other.residues.r4),
            },
            poles: self.poles.clone(),
        })
    }

    /// Substitutes rational values for the parameters `z1`, `z2`.
    pub fn instantiate(&self, z1: &Rational, z2: &Rational) -> Result<Self> {
        let a = ParamScalar::from_rational(z1.clone());
        let b = ParamScalar::from_rational(z2.clone());
        let sub = |s: &ParamScalar| s.compose(&a, &b);
        let sub3 = |v: &Vec3<ParamScalar>| -> Result<Vec3<ParamScalar>> {
            Ok([sub(&v[0])?, sub(&v[1])?, sub(&v[2])?])
        };
        let poles = (sub(&self.poles.0)?, sub(&self.poles.1)?);
        if poles.0 == poles.1 {
            return Err(KzError::DegenerateConfiguration("z1 = z2 after substitution".into()));
        }
        Ok(RationalSolution {
            poly_part: [sub3(&self.poly_part[0])?, sub3(&self.poly_part[1])?, sub3(&self.poly_part[2])?],
            residues: ResidueSet {
                r1: sub3(&self.residues.r1)?,
                r2: sub3(&self.residues.r2)?,
                r3: sub3(&self.residues.r3)?,
                r4: sub3(&self.residues.r4)?,
            },
            poles,
        })
    }

    /// Exact value at `z` with the parameters set to `(z1, z2)`.
    pub fn evaluate(&self, z: &Rational, z1: &Rational, z2: &Rational) -> Result<Vec3<Rational>> {
        let a = self.poles.0.evaluate(z1, z2)?;
        let b = self.poles.1.evaluate(z1, z2)?;
        let da = z - &a;
        let db = z - &b;
        if da.is_zero() || db.is_zero() {
            return Err(KzError::EvaluationAtPole);
        }
        let weights = [
            z * z,
            z.clone(),
            Rational::from_integer(1.into()),
        ];
        let pole_weights = [
            (da.clone() * da.clone()).recip(),
            da.recip(),
            (db.clone() * db.clone()).recip(),
            db.recip(),
        ];
        let mut out: Vec3<Rational> = std::array::from_fn(|_| Rational::zero());
        for (vec, w) in self.poly_part.iter().zip(&weights).chain(self.residues.as_array().into_iter().zip(&pole_weights)) {
            for i in 0..3 {
                if !vec[i].is_zero() {
                    out[i] += vec[i].evaluate(z1, z2)? * w;
                }
            }
        }
        Ok(out)
    }

    /// Value at `z` for a solution with numeric poles and coefficients.
    pub fn evaluate_numeric(&self, z: &Rational) -> Result<Vec3<Rational>> {
        let zero = Rational::zero();
        self.evaluate(z, &zero, &zero)
    }
}

fn check_distinct(z1: &ParamScalar, z2: &ParamScalar) -> Result<()> {
    if z1 == z2 {
        return Err(KzError::DegenerateConfiguration(format!(
            "pole locations coincide: {z1}"
        )));
    }
    Ok(())
}

/// Rows `(0, 1, 0, 1)`, `(1, z1, 1, z2)`, `(2 z1, z1^2, 2 z2, z2^2)`,
/// `(3 z1^2, z1^3, 3 z2^2, z2^3)`.
pub fn build_moment_matrix(z1: &ParamScalar, z2: &ParamScalar) -> Result<MomentMatrix> {
    check_distinct(z1, z2)?;
    let mut rows = Vec::with_capacity(4);
    for k in 1..=4i32 {
        let mut row = Vec::with_capacity(4);
        for z in [z1, z2] {
            let order2 = if k == 1 {
                ParamScalar::zero()
            } else {
                &ParamScalar::from_int(k as i64 - 1) * &z.pow(k - 2)?
            };
            row.push(order2);
            row.push(z.pow(k - 1)?);
        }
        rows.push(row);
    }
    Matrix::from_rows(rows)
}

/// Tabulated closed-form inverse of the moment matrix, entered verbatim.
/// Entries (2,3) and (4,3) are known to be wrong; see [`crate::verifier::audit`].
pub fn moment_inverse_closed_form(z1: &ParamScalar, z2: &ParamScalar) -> Result<MomentMatrix> {
    check_distinct(z1, z2)?;
    let entries = crate::verifier::printed::MOMENT_INVERSE.entries;
    let mut rows = Vec::with_capacity(4);
    for row in entries.chunks(4) {
        let mut out = Vec::with_capacity(4);
        for entry in row {
            let symbolic = ParamScalar::parse(entry).expect("embedded formula parses");
            out.push(symbolic.compose(z1, z2)?);
        }
        rows.push(out);
    }
    Matrix::from_rows(rows)
}

/// Solves the four block equations for the residues by exact elimination.
pub fn reconstruct_residues(
    z1: &ParamScalar,
    z2: &ParamScalar,
    moments: &[Vec3<ParamScalar>; 4],
) -> Result<ResidueSet> {
    let s = build_moment_matrix(z1, z2)?;
    let y = Matrix::from_fn(4, 3, |i, j| moments[i][j].clone());
    let x = s.solve(&y)?;
    let row = |i: usize| to_vec3(x.row(i).to_vec());
    Ok(ResidueSet::from_array([row(0), row(1), row(2), row(3)]))
}

/// Coefficient of `z^-k` (`k >= 1`) in the expansion at infinity of the
/// residue terms:
/// `(k-1) z1^(k-2) R1 + z1^(k-1) R2 + (k-1) z2^(k-2) R3 + z2^(k-1) R4`.
pub fn moments_from_residues(
    residues: &ResidueSet,
    z1: &ParamScalar,
    z2: &ParamScalar,
    k: i64,
) -> Result<Vec3<ParamScalar>> {
    if k < 1 {
        return Err(KzError::IndexOutOfRange(format!("moment order {k} must be >= 1")));
    }
    let mut acc = zero3();
    for (z, order2, order1) in [(z1, &residues.r1, &residues.r2), (z2, &residues.r3, &residues.r4)] {
        if k >= 2 {
            let w = &ParamScalar::from_int(k - 1) * &z.pow(k as i32 - 2)?;
            acc = vec3_add(&acc, &vec3_scale(order2, &w));
        }
        acc = vec3_add(&acc, &vec3_scale(order1, &z.pow(k as i32 - 1)?));
    }
    Ok(acc)
}

/// Polynomial part from `G_-2, G_-1, G_0` of the table, residues as given.
pub fn assemble_solution(
    table: &CoefficientTable,
    residues: ResidueSet,
    poles: (ParamScalar, ParamScalar),
) -> RationalSolution {
    RationalSolution {
        poly_part: [table.get(-2), table.get(-1), table.get(0)],
        residues,
        poles,
    }
}

/// Moments `G_1..G_4` read off a table.
pub fn table_moments(table: &CoefficientTable) -> [Vec3<ParamScalar>; 4] {
    [table.get(1), table.get(2), table.get(3), table.get(4)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::symbolic_system;
    use crate::scalar::rational::int;
    use crate::series::{generate, SeedSpec};

    fn sc(text: &str) -> ParamScalar {
        ParamScalar::parse(text).unwrap()
    }

    fn v(items: [&str; 3]) -> Vec3<ParamScalar> {
        items.map(sc)
    }

    fn zs() -> (ParamScalar, ParamScalar) {
        (ParamScalar::z1(), ParamScalar::z2())
    }

    #[test]
    fn moment_matrix_numeric_pattern() {
        let s = build_moment_matrix(&ParamScalar::from_int(0), &ParamScalar::from_int(1)).unwrap();
        let expected = Matrix::from_rows(
            [[0, 1, 0, 1], [1, 0, 1, 1], [0, 0, 2, 1], [0, 0, 3, 1]]
                .iter()
                .map(|r| r.iter().map(|&x| ParamScalar::from_int(x)).collect())
                .collect(),
        )
        .unwrap();
        assert_eq!(s, expected);
        assert!(matches!(
            build_moment_matrix(&ParamScalar::from_int(1), &ParamScalar::from_int(1)),
            Err(KzError::DegenerateConfiguration(_))
        ));
    }

    #[test]
    fn moment_matrix_determinant() {
        // cofactor expansion of the 4x4 pattern gives -(z1 - z2)^4
        let (a, b) = zs();
        let s = build_moment_matrix(&a, &b).unwrap();
        let det = s.det().unwrap();
        let d4 = sc("(z1 - z2)^4");
        assert!(det == d4 || det == -d4.clone(), "det = {det}");
    }

    #[test]
    fn closed_form_entry_and_numeric_comparison() {
        let (a, b) = zs();
        let inv = moment_inverse_closed_form(&a, &b).unwrap();
        assert_eq!(inv[(0, 0)], sc("-z1*z2^2/(z1 - z2)^2"));

        // against the fraction-free inverse at (0, 1): all entries agree
        // except (2,3) and (4,3), where the printed closed form has
        // 3 z1 + z2 in place of 3 (z1 + z2)
        let zero = ParamScalar::from_int(0);
        let one = ParamScalar::from_int(1);
        let printed = moment_inverse_closed_form(&zero, &one).unwrap();
        let exact = build_moment_matrix(&zero, &one).unwrap().inverse().unwrap();
        let mut differing = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                if printed[(i, j)] != exact[(i, j)] {
                    differing.push((i + 1, j + 1));
                }
            }
        }
        assert_eq!(differing, vec![(2, 3), (4, 3)]);
        assert_eq!(exact[(1, 2)], ParamScalar::from_int(-3));
        assert_eq!(printed[(1, 2)], ParamScalar::from_int(-1));
    }

    #[test]
    fn w1_residues() {
        let sys = symbolic_system();
        let table = generate(&sys, &SeedSpec::from_rational(-2, &[int(2), int(-1), int(-1)]), 4).unwrap();
        let (a, b) = zs();
        let l = reconstruct_residues(&a, &b, &table_moments(&table)).unwrap();
        assert_eq!(
            l.r1,
            v([
                "(1/10)*(3*z1 - 7*z2)*(z1 - z2)^3",
                "(1/10)*(3*z1 - 7*z2)*(z1 - z2)^3",
                "-(1/5)*(3*z1 - 7*z2)*(z1 - z2)^3"
            ])
        );
        assert_eq!(
            l.r2,
            v(["0", "(1/5)*(3*z1 - 7*z2)*(z1 - z2)^2", "-(1/5)*(3*z1 - 7*z2)*(z1 - z2)^2"])
        );
    }

    #[test]
    fn w3_residues_carry_the_eigenvector() {
        let (a, b) = zs();
        let one = ParamScalar::from_int(1);
        let moments = [zero3(), zero3(), zero3(), [one.clone(), one.clone(), one]];
        let n = reconstruct_residues(&a, &b, &moments).unwrap();
        let inv2 = sc("1/(z1 - z2)^2");
        let tail = sc("2/(z2 - z1)^3");
        assert_eq!(n.r1, [inv2.clone(), inv2.clone(), inv2.clone()]);
        assert_eq!(n.r3, n.r1);
        assert_eq!(n.r2, [tail.clone(), tail.clone(), tail.clone()]);
        assert_eq!(n.r4, vec3_scale(&n.r2, &ParamScalar::from_int(-1)));
    }

    #[test]
    fn moment_map_low_orders() {
        let (a, b) = zs();
        let r = ResidueSet::from_array([
            v(["1", "0", "0"]),
            v(["0", "1", "0"]),
            v(["0", "0", "1"]),
            v(["1", "1", "1"]),
        ]);
        assert_eq!(
            moments_from_residues(&r, &a, &b, 1).unwrap(),
            vec3_add(&r.r2, &r.r4)
        );
        assert_eq!(
            moments_from_residues(&r, &a, &b, 3).unwrap(),
            v(["2*z1 + z2^2", "z1^2 + z2^2", "2*z2 + z2^2"])
        );
        assert!(moments_from_residues(&r, &a, &b, 0).is_err());
    }

    #[test]
    fn assemble_zero_solution() {
        let sys = symbolic_system();
        let table = crate::series::zero_table(5, 5);
        let w = assemble_solution(&table, ResidueSet::zero(), (sys.z1().clone(), sys.z2().clone()));
        assert_eq!(w, RationalSolution::zero(zs()));
    }

    #[test]
    fn evaluation_at_points() {
        let (a, b) = zs();
        let mut w = RationalSolution::zero((a, b));
        w.residues.r2 = v(["1", "0", "0"]);
        w.poly_part[0] = v(["0", "1", "0"]);
        let val = w.evaluate(&int(3), &int(1), &int(2)).unwrap();
        assert_eq!(val, [crate::scalar::rational::rat(1, 2), int(9), int(0)]);
        assert_eq!(w.evaluate(&int(1), &int(1), &int(2)), Err(KzError::EvaluationAtPole));
    }
}
