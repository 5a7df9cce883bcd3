//! Numerical cross-check: integrate the ODE from an exact initial value with
//! an embedded Dormand-Prince 5(4) pair in 256-bit binary floating point and
//! compare with the exact solution at the end of the path.

use dashu_float::FBig;
use dashu_int::IBig;
use num_traits::Signed;

use crate::error::{KzError, Result};
use crate::linalg::Vec3;
use crate::model::KZSystem;
use crate::residue::RationalSolution;
use crate::scalar::rational::rat;
use crate::scalar::Rational;

/// Working precision in bits (about 77 decimal digits).
pub const PRECISION_BITS: usize = 256;
pub const STEP_RTOL: f64 = 1e-12;
/// Components of the exact value smaller than this are compared absolutely.
pub const ABSOLUTE_FLOOR: f64 = 1e-30;

type Real = FBig;

fn to_real(r: &Rational) -> Real {
    let n = IBig::from_str_radix(&r.numer().to_str_radix(16), 16).expect("hex integer");
    let d = IBig::from_str_radix(&r.denom().to_str_radix(16), 16).expect("hex integer");
    let n = Real::from(n).with_precision(PRECISION_BITS).value();
    let d = Real::from(d).with_precision(PRECISION_BITS).value();
    n / d
}

fn to_f64(x: &Real) -> f64 {
    x.to_f64().value()
}

fn real(n: i64, d: i64) -> Real {
    to_real(&rat(n, d))
}

/// Butcher tableau of the Dormand-Prince pair.
struct Tableau {
    c: Vec<Real>,
    a: Vec<Vec<Real>>,
    b: Vec<Real>,
    /// `b - b_hat`, weights of the embedded error estimate.
    e: Vec<Real>,
}

impl Tableau {
    fn dopri5() -> Self {
        let r = real;
        let c = vec![r(0, 1), r(1, 5), r(3, 10), r(4, 5), r(8, 9), r(1, 1), r(1, 1)];
        let a = vec![
            vec![],
            vec![r(1, 5)],
            vec![r(3, 40), r(9, 40)],
            vec![r(44, 45), r(-56, 15), r(32, 9)],
            vec![r(19372, 6561), r(-25360, 2187), r(64448, 6561), r(-212, 729)],
            vec![r(9017, 3168), r(-355, 33), r(46732, 5247), r(49, 176), r(-5103, 18656)],
            vec![r(35, 384), r(0, 1), r(500, 1113), r(125, 192), r(-2187, 6784), r(11, 84)],
        ];
        let b5 = [rat(35, 384), rat(0, 1), rat(500, 1113), rat(125, 192), rat(-2187, 6784), rat(11, 84), rat(0, 1)];
        let b4 = [
            rat(5179, 57600),
            rat(0, 1),
            rat(7571, 16695),
            rat(393, 640),
            rat(-92097, 339200),
            rat(187, 2100),
            rat(1, 40),
        ];
        Tableau {
            c,
            a,
            b: b5.iter().map(to_real).collect(),
            e: b5.iter().zip(&b4).map(|(x, y)| to_real(&(x - y))).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CrosscheckReport {
    pub passed: bool,
    pub max_relative_error: f64,
    pub steps: usize,
}

struct Rhs {
    multiplier: Real,
    poles: Vec<(Real, [[i8; 3]; 3])>,
}

impl Rhs {
    fn new(sys: &KZSystem) -> Result<Self> {
        let (a, b) = sys.numeric_poles().ok_or(KzError::NotNumeric)?;
        let poles = sys
            .poles()
            .iter()
            .zip([a, b])
            .map(|(p, loc)| {
                let m = std::array::from_fn(|i| {
                    std::array::from_fn(|j| {
                        let e = &p.residue[(i, j)];
                        e.to_integer().try_into().expect("integer residue entries")
                    })
                });
                (to_real(&loc), m)
            })
            .collect();
        Ok(Rhs {
            multiplier: to_real(sys.multiplier()),
            poles,
        })
    }

    /// `multiplier * sum_j P_j / (z - z_j) * w`.
    fn eval(&self, z: &Real, w: &[Real; 3]) -> [Real; 3] {
        let mut out: [Real; 3] = std::array::from_fn(|_| Real::ZERO);
        for (loc, m) in &self.poles {
            let inv = &self.multiplier / (z - loc);
            for i in 0..3 {
                for j in 0..3 {
                    match m[i][j] {
                        0 => {}
                        1 => out[i] = &out[i] + &(&w[j] * &inv),
                        k => out[i] = &out[i] + &(&w[j] * &inv * Real::from(k as i64)),
                    }
                }
            }
        }
        out
    }
}

/// Integrates `dW/dz = c A(z) W` from `from` to `to` starting at the exact
/// `w(from)` and compares with the exact `w(to)`.
pub fn numeric_crosscheck(
    sys: &KZSystem,
    w: &RationalSolution,
    from: &Rational,
    to: &Rational,
    tol: f64,
) -> Result<CrosscheckReport> {
    let (a, b) = sys.numeric_poles().ok_or(KzError::NotNumeric)?;
    let (lo, hi) = if from <= to { (from, to) } else { (to, from) };
    for p in [&a, &b] {
        if lo <= p && p <= hi {
            return Err(KzError::InvalidPath(format!(
                "segment [{}, {}] passes through the pole {}",
                crate::scalar::render_rational(lo),
                crate::scalar::render_rational(hi),
                crate::scalar::render_rational(p)
            )));
        }
    }
    if from == to {
        return Err(KzError::InvalidPath("empty integration path".into()));
    }
    let start = w.evaluate_numeric(from)?;
    let exact_end = w.evaluate_numeric(to)?;
    let rhs = Rhs::new(sys)?;
    let (end, steps) = integrate(&rhs, from, to, &start);

    let mut max_err = 0.0f64;
    for i in 0..3 {
        let exact = to_real(&exact_end[i]);
        let diff = to_f64(&(&end[i] - &exact)).abs();
        let scale = to_f64(&exact).abs();
        let err = if scale < ABSOLUTE_FLOOR { diff } else { diff / scale };
        max_err = max_err.max(err);
    }
    Ok(CrosscheckReport {
        passed: max_err <= tol,
        max_relative_error: max_err,
        steps,
    })
}

fn integrate(rhs: &Rhs, from: &Rational, to: &Rational, start: &Vec3<Rational>) -> ([Real; 3], usize) {
    let tab = Tableau::dopri5();
    let end = to_real(to);
    let mut z = to_real(from);
    let mut y: [Real; 3] = std::array::from_fn(|i| to_real(&start[i]));
    let span = to - from;
    let direction = if span.is_negative() { -1.0 } else { 1.0 };
    let total = to_f64(&to_real(&span.abs()));
    let mut h = direction * total / 100.0;
    let mut steps = 0usize;
    loop {
        let remaining = to_f64(&(&end - &z));
        if remaining.abs() <= total * 1e-40 {
            break;
        }
        let last = h.abs() >= remaining.abs();
        let hr = if last { &end - &z } else { to_real_f64(h) };
        let mut k: Vec<[Real; 3]> = Vec::with_capacity(7);
        for s in 0..7 {
            let mut ys = y.clone();
            for (j, a) in tab.a[s].iter().enumerate() {
                for i in 0..3 {
                    ys[i] = &ys[i] + &(&hr * a * &k[j][i]);
                }
            }
            let zs = &z + &(&hr * &tab.c[s]);
            k.push(rhs.eval(&zs, &ys));
        }
        let mut next = y.clone();
        let mut err = 0.0f64;
        for i in 0..3 {
            let mut inc = Real::ZERO;
            let mut est = Real::ZERO;
            for s in 0..7 {
                inc = &inc + &(&tab.b[s] * &k[s][i]);
                est = &est + &(&tab.e[s] * &k[s][i]);
            }
            next[i] = &y[i] + &(&hr * &inc);
            let scale = to_f64(&y[i]).abs().max(to_f64(&next[i]).abs()).max(ABSOLUTE_FLOOR);
            err = err.max(to_f64(&(&hr * &est)).abs() / (STEP_RTOL * scale));
        }
        let factor = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
        if err <= 1.0 {
            z = if last { end.clone() } else { &z + &hr };
            y = next;
            steps += 1;
            if last {
                break;
            }
        }
        h *= factor;
    }
    (y, steps)
}

fn to_real_f64(h: f64) -> Real {
    Real::try_from(h)
        .expect("finite step")
        .with_precision(PRECISION_BITS)
        .value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::build_s3_system;
    use crate::residue::ResidueSet;
    use crate::scalar::rational::int;
    use crate::scalar::ParamScalar;

    fn sys01() -> KZSystem {
        build_s3_system(ParamScalar::from_int(0), ParamScalar::from_int(1)).unwrap()
    }

    /// `(1,1,1) / (z^2 (z - 1)^2)` in partial fractions.
    fn w3_numeric() -> RationalSolution {
        let one = ParamScalar::from_int(1);
        let two = ParamScalar::from_int(2);
        let l = |c: &ParamScalar| [c.clone(), c.clone(), c.clone()];
        RationalSolution {
            poly_part: [crate::series::zero3(), crate::series::zero3(), crate::series::zero3()],
            residues: ResidueSet {
                r1: l(&one),
                r2: l(&two),
                r3: l(&one),
                r4: l(&-two.clone()),
            },
            poles: (ParamScalar::from_int(0), ParamScalar::from_int(1)),
        }
    }

    #[test]
    fn closed_form_w3_passes() {
        let rep = numeric_crosscheck(&sys01(), &w3_numeric(), &int(5), &int(7), 1e-8).unwrap();
        assert!(rep.passed, "{rep:?}");
        assert!(rep.max_relative_error < 1e-10);
        // backwards along the same segment
        let back = numeric_crosscheck(&sys01(), &w3_numeric(), &int(7), &int(5), 1e-8).unwrap();
        assert!(back.passed, "{back:?}");
    }

    #[test]
    fn perturbed_solution_fails() {
        let mut w = w3_numeric();
        w.residues.r1[0] = &w.residues.r1[0] + &ParamScalar::from_int(1);
        let rep = numeric_crosscheck(&sys01(), &w, &int(5), &int(7), 1e-8).unwrap();
        assert!(!rep.passed);
    }

    #[test]
    fn path_through_pole_is_rejected() {
        assert!(matches!(
            numeric_crosscheck(&sys01(), &w3_numeric(), &int(-1), &int(2), 1e-8),
            Err(KzError::InvalidPath(_))
        ));
    }

    #[test]
    fn symbolic_system_is_rejected() {
        let sys = crate::model::symbolic_system();
        let w = RationalSolution::zero((ParamScalar::z1(), ParamScalar::z2()));
        assert_eq!(
            numeric_crosscheck(&sys, &w, &int(5), &int(7), 1e-8),
            Err(KzError::NotNumeric)
        );
    }
}
