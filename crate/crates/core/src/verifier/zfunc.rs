//! Rational functions of the independent variable `z` over the parameter
//! field, and vector-valued partial-fraction expansions with two poles.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{KzError, Result};
use crate::linalg::{Matrix, Vec3};
use crate::residue::RationalSolution;
use crate::scalar::{ParamScalar, Rational, UniPoly};

pub type ZPoly = UniPoly<ParamScalar>;

/// `num / den` in lowest terms with a monic denominator; zero is `0/1`.
#[derive(Clone, PartialEq)]
pub struct ZRational {
    num: ZPoly,
    den: ZPoly,
}

impl ZRational {
    pub fn new(num: ZPoly, den: ZPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(KzError::DegenerateScalar);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        let lead = den.leading().expect("nonzero").inv()?;
        Ok(ZRational {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    /// `num / ((z - a)^e1 (z - b)^e2)` for distinct `a`, `b`, reduced by
    /// cancelling the linear factors that divide `num`.
    pub fn over_poles(mut num: ZPoly, a: &ParamScalar, b: &ParamScalar, mut e1: usize, mut e2: usize) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        for (root, e) in [(a, &mut e1), (b, &mut e2)] {
            let lin = ZPoly::linear_root(root.clone());
            while *e > 0 && num.eval(root).is_zero() {
                num = num.exact_div(&lin).expect("root gives a linear factor");
                *e -= 1;
            }
        }
        let den = &ZPoly::linear_root(a.clone()).pow(e1 as u32) * &ZPoly::linear_root(b.clone()).pow(e2 as u32);
        ZRational { num, den }
    }

    pub fn zero() -> Self {
        ZRational {
            num: ZPoly::zero(),
            den: ZPoly::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numer(&self) -> &ZPoly {
        &self.num
    }

    pub fn denom(&self) -> &ZPoly {
        &self.den
    }

    pub fn evaluate(&self, z: &Rational, z1: &Rational, z2: &Rational) -> Result<Rational> {
        let eval = |p: &ZPoly| -> Result<Rational> {
            let mut acc = Rational::zero();
            for c in p.coeffs().iter().rev() {
                acc = acc * z + c.evaluate(z1, z2)?;
            }
            Ok(acc)
        };
        let d = eval(&self.den)?;
        if d.is_zero() {
            return Err(KzError::EvaluationAtPole);
        }
        Ok(eval(&self.num)? / d)
    }

    pub fn render(&self) -> String {
        let num = render_zpoly(&self.num);
        if self.den.degree() == Some(0) {
            return num;
        }
        let num = if self.num.degree() == Some(0) && !num.contains(' ') { num } else { format!("({num})") };
        format!("{num}/({})", render_zpoly(&self.den))
    }
}

impl fmt::Debug for ZRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn render_zpoly(p: &ZPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let zk = match k {
            0 => String::new(),
            1 => "z".into(),
            _ => format!("z^{k}"),
        };
        let text = c.render();
        let compound = text[1..].contains([' ', '/']);
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) if !compound => (true, rest.to_string()),
            _ => (false, text),
        };
        let coeff = if compound { format!("({body})") } else { body };
        let term = match (zk.is_empty(), coeff == "1") {
            (true, _) => coeff,
            (false, true) => zk,
            (false, false) => format!("{coeff}*{zk}"),
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&term);
    }
    out
}

/// `sum_k z^k poly[k] + sum_j at_z1[j] / (z - z1)^(j+1) + sum_j at_z2[j] / (z - z2)^(j+1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PoleExpansion {
    pub poly: Vec<Vec3<ParamScalar>>,
    pub at_z1: Vec<Vec3<ParamScalar>>,
    pub at_z2: Vec<Vec3<ParamScalar>>,
    pub poles: (ParamScalar, ParamScalar),
}

impl From<&RationalSolution> for PoleExpansion {
    fn from(w: &RationalSolution) -> Self {
        PoleExpansion {
            poly: vec![w.poly_part[2].clone(), w.poly_part[1].clone(), w.poly_part[0].clone()],
            at_z1: vec![w.residues.r2.clone(), w.residues.r1.clone()],
            at_z2: vec![w.residues.r4.clone(), w.residues.r3.clone()],
            poles: w.poles.clone(),
        }
    }
}

fn scale3(v: &Vec3<ParamScalar>, c: &ParamScalar) -> Vec3<ParamScalar> {
    std::array::from_fn(|i| &v[i] * c)
}

impl PoleExpansion {
    /// Highest pole orders at `z1` and `z2`.
    pub fn pole_orders(&self) -> (usize, usize) {
        (self.at_z1.len(), self.at_z2.len())
    }

    /// Term-wise derivative in `z`.
    pub fn differentiate(&self) -> PoleExpansion {
        let poly = self
            .poly
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| scale3(c, &ParamScalar::from_int(k as i64)))
            .collect();
        // d/dz c (z - a)^-(j+1) = -(j+1) c (z - a)^-(j+2)
        let shift = |terms: &[Vec3<ParamScalar>]| {
            let mut out = vec![crate::series::zero3()];
            out.extend(
                terms
                    .iter()
                    .enumerate()
                    .map(|(j, c)| scale3(c, &ParamScalar::from_int(-(j as i64 + 1)))),
            );
            out
        };
        PoleExpansion {
            poly,
            at_z1: shift(&self.at_z1),
            at_z2: shift(&self.at_z2),
            poles: self.poles.clone(),
        }
    }

    /// `self * (z - z1)^e1 * (z - z2)^e2` as polynomials in `z`; needs
    /// `e1`, `e2` at least the pole orders.
    pub fn clear_denominators(&self, e1: usize, e2: usize) -> Vec3<ZPoly> {
        let (n1, n2) = self.pole_orders();
        assert!(e1 >= n1 && e2 >= n2, "multiplier does not clear the poles");
        let lin1 = ZPoly::linear_root(self.poles.0.clone());
        let lin2 = ZPoly::linear_root(self.poles.1.clone());
        let mut out: Vec3<ZPoly> = std::array::from_fn(|_| ZPoly::zero());
        let mut accumulate = |c: &Vec3<ParamScalar>, factor: &ZPoly| {
            for i in 0..3 {
                if !c[i].is_zero() {
                    out[i] = &out[i] + &factor.scale(&c[i]);
                }
            }
        };
        let full = &lin1.pow(e1 as u32) * &lin2.pow(e2 as u32);
        for (k, c) in self.poly.iter().enumerate() {
            accumulate(c, &(&full * &ZPoly::monomial(ParamScalar::one(), k)));
        }
        for (j, c) in self.at_z1.iter().enumerate() {
            accumulate(c, &(&lin1.pow((e1 - j - 1) as u32) * &lin2.pow(e2 as u32)));
        }
        for (j, c) in self.at_z2.iter().enumerate() {
            accumulate(c, &(&lin1.pow(e1 as u32) * &lin2.pow((e2 - j - 1) as u32)));
        }
        out
    }

    /// `(z - z1)^e1 (z - z2)^e2`.
    pub fn denominator(&self, e1: usize, e2: usize) -> ZPoly {
        &ZPoly::linear_root(self.poles.0.clone()).pow(e1 as u32)
            * &ZPoly::linear_root(self.poles.1.clone()).pow(e2 as u32)
    }

    /// Each component as a canonical rational function of `z`.
    pub fn to_functions(&self) -> Result<Vec3<ZRational>> {
        let (e1, e2) = self.pole_orders();
        let (a, b) = &self.poles;
        Ok(self
            .clear_denominators(e1, e2)
            .map(|n| ZRational::over_poles(n, a, b, e1, e2)))
    }
}

/// Applies a rational matrix to a vector of `z`-polynomials.
pub fn apply_matrix(m: &Matrix<Rational>, v: &Vec3<ZPoly>) -> Vec3<ZPoly> {
    std::array::from_fn(|i| {
        let mut acc = ZPoly::zero();
        for j in 0..3 {
            let e = &m[(i, j)];
            if !e.is_zero() {
                acc = &acc + &v[j].scale(&ParamScalar::from_rational(e.clone()));
            }
        }
        acc
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(t: &str) -> ParamScalar {
        ParamScalar::parse(t).unwrap()
    }

    #[test]
    fn rational_function_reduces() {
        // (z^2 - z1^2) / (z - z1) = z + z1
        let num = ZPoly::from_coeffs(vec![sc("-z1^2"), ParamScalar::zero(), ParamScalar::one()]);
        let den = ZPoly::linear_root(sc("z1"));
        let r = ZRational::new(num, den).unwrap();
        assert_eq!(r.denom(), &ZPoly::one());
        assert_eq!(r.numer(), &ZPoly::from_coeffs(vec![sc("z1"), ParamScalar::one()]));
        assert_eq!(r.render(), "z + z1");
    }

    #[test]
    fn simple_pole_derivative() {
        let one = ParamScalar::one();
        let e = PoleExpansion {
            poly: vec![],
            at_z1: vec![[one.clone(), ParamScalar::zero(), ParamScalar::zero()]],
            at_z2: vec![],
            poles: (sc("z1"), sc("z2")),
        };
        let d = e.differentiate().to_functions().unwrap();
        let expected = ZRational::new(
            ZPoly::constant(ParamScalar::from_int(-1)),
            ZPoly::linear_root(sc("z1")).pow(2),
        )
        .unwrap();
        assert_eq!(d[0], expected);
        assert!(d[1].is_zero());
    }

    #[test]
    fn evaluation() {
        let r = ZRational::new(ZPoly::x(), ZPoly::linear_root(sc("z2"))).unwrap();
        let v = r
            .evaluate(&crate::scalar::rational::int(3), &crate::scalar::rational::int(0), &crate::scalar::rational::int(1))
            .unwrap();
        assert_eq!(v, crate::scalar::rational::rat(3, 2));
    }
}
