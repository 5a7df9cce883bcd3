use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::gcd::poly_gcd;
use super::{Field, Param, ParamPoly, Rational};
use crate::error::{KzError, Result};

/// Element of the rational function field `Q(z1, z2)`, always held in
/// canonical form: `gcd(num, den) = 1`, `den` has coprime integer
/// coefficients and a positive deglex-leading coefficient, zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParamScalar {
    num: ParamPoly,
    den: ParamPoly,
}

impl ParamScalar {
    /// Builds `num / den` in canonical form.
    pub fn new(num: ParamPoly, den: ParamPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(KzError::DegenerateScalar);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: ParamPoly, den: ParamPoly) -> Self {
        if num.is_zero() {
            return ParamScalar::zero();
        }
        if den.is_constant() {
            return Self::normalized(num, den);
        }
        if let Some(q) = num.exact_div(&den) {
            return ParamScalar::from_poly(q);
        }
        if num.is_constant() {
            return Self::normalized(num, den);
        }
        let g = poly_gcd(&num, &den);
        if g.is_one() {
            Self::normalized(num, den)
        } else {
            Self::normalized(
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        }
    }

    /// Scales an already reduced `num / den` so that `den` has coprime
    /// integer coefficients and a positive leading coefficient.
    fn normalized(num: ParamPoly, den: ParamPoly) -> Self {
        if num.is_zero() {
            return ParamScalar::zero();
        }
        let mut norm = den.content();
        if den.leading().map_or(false, |(_, c)| c.is_negative()) {
            norm = -norm;
        }
        let inv = norm.recip();
        ParamScalar {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    /// Re-derives the canonical representative; a no-op on values built
    /// through this API.
    pub fn canonicalize(&self) -> Self {
        Self::canonical(self.num.clone(), self.den.clone())
    }

    pub fn from_poly(p: ParamPoly) -> Self {
        ParamScalar {
            num: p,
            den: ParamPoly::one(),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_poly(ParamPoly::constant(r))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(super::rational::int(n))
    }

    pub fn param(p: Param) -> Self {
        Self::from_poly(ParamPoly::var(p))
    }

    pub fn z1() -> Self {
        Self::param(Param::Z1)
    }

    pub fn z2() -> Self {
        Self::param(Param::Z2)
    }

    pub fn numer(&self) -> &ParamPoly {
        &self.num
    }

    pub fn denom(&self) -> &ParamPoly {
        &self.den
    }

    /// The value when the scalar does not depend on `z1`, `z2`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(KzError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        let inv = rhs.inv()?;
        Ok(self * &inv)
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        Ok(ParamScalar {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::canonical(self.num.scale(c), self.den.clone())
    }

    /// Exact value at a rational point.
    pub fn evaluate(&self, z1: &Rational, z2: &Rational) -> Result<Rational> {
        let d = self.den.eval(z1, z2);
        if d.is_zero() {
            return Err(KzError::EvaluationAtPole);
        }
        Ok(self.num.eval(z1, z2) / d)
    }

    /// Substitutes scalars for `z1` and `z2`.
    pub fn compose(&self, z1: &ParamScalar, z2: &ParamScalar) -> Result<Self> {
        let num = eval_poly_in_field(&self.num, z1, z2);
        let den = eval_poly_in_field(&self.den, z1, z2);
        num.checked_div(&den).map_err(|_| KzError::EvaluationAtPole)
    }

    /// Canonical text in the scalar grammar.
    pub fn render(&self) -> String {
        if self.den.is_one() {
            self.num.render()
        } else if self.num.as_constant().map_or(false, |c| c.is_integer()) {
            format!("{}/({})", self.num.render(), self.den.render())
        } else {
            format!("({})/({})", self.num.render(), self.den.render())
        }
    }

    pub fn render_latex(&self) -> String {
        if self.den.is_one() {
            self.num.render_latex()
        } else {
            format!(
                "\\frac{{{}}}{{{}}}",
                self.num.render_latex(),
                self.den.render_latex()
            )
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        super::parse::parse_scalar(text)
    }
}

fn eval_poly_in_field(p: &ParamPoly, z1: &ParamScalar, z2: &ParamScalar) -> ParamScalar {
    let mut acc = ParamScalar::zero();
    for (m, c) in p.terms() {
        let term = &(&pow_u(z1, m.z1) * &pow_u(z2, m.z2)) * &ParamScalar::from_rational(c.clone());
        acc = &acc + &term;
    }
    acc
}

fn pow_u(s: &ParamScalar, e: u32) -> ParamScalar {
    s.pow(e as i32).expect("non-negative power")
}

impl fmt::Debug for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: &ParamScalar) -> ParamScalar {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return ParamScalar::canonical(&self.num + &rhs.num, self.den.clone());
        }
        // with g = gcd(b, d): a/b + c/d = (a d' + c b') / (b' d' g), and only
        // g can share a factor with the new numerator
        let g = poly_gcd(&self.den, &rhs.den);
        let b = self.den.exact_div(&g).expect("gcd divides");
        let d = rhs.den.exact_div(&g).expect("gcd divides");
        let t = &(&self.num * &d) + &(&rhs.num * &b);
        if g.is_one() {
            return ParamScalar::normalized(t, &b * &d);
        }
        let h = poly_gcd(&t, &g);
        let t = t.exact_div(&h).expect("gcd divides");
        let g = g.exact_div(&h).expect("gcd divides");
        ParamScalar::normalized(t, &(&b * &d) * &g)
    }
}

impl<'a> Sub<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: &ParamScalar) -> ParamScalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: &ParamScalar) -> ParamScalar {
        if self.num.is_zero() || rhs.num.is_zero() {
            return ParamScalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return ParamScalar::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel before multiplying; both inputs are already reduced
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        let div = |p: &ParamPoly, g: &ParamPoly| p.exact_div(g).expect("gcd divides");
        ParamScalar::normalized(
            &div(&self.num, &g1) * &div(&rhs.num, &g2),
            &div(&self.den, &g2) * &div(&rhs.den, &g1),
        )
    }
}

impl<'a> Div<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    /// Panics on a zero divisor; use [`ParamScalar::checked_div`] to recover.
    fn div(self, rhs: &ParamScalar) -> ParamScalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ParamScalar {
            type Output = ParamScalar;
            fn $m(self, rhs: ParamScalar) -> ParamScalar {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        -&self
    }
}

impl Zero for ParamScalar {
    fn zero() -> Self {
        ParamScalar {
            num: ParamPoly::zero(),
            den: ParamPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for ParamScalar {
    fn one() -> Self {
        ParamScalar::from_poly(ParamPoly::one())
    }
}

impl Field for ParamScalar {
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }

    fn from_rational(r: &Rational) -> Self {
        ParamScalar::from_rational(r.clone())
    }
}

impl From<i64> for ParamScalar {
    fn from(n: i64) -> Self {
        ParamScalar::from_int(n)
    }
}

impl From<Rational> for ParamScalar {
    fn from(r: Rational) -> Self {
        ParamScalar::from_rational(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::{int, rat};

    fn s(text: &str) -> ParamScalar {
        ParamScalar::parse(text).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        let raw = |n: &str, d: &str| {
            ParamScalar::new(s(n).numer().clone(), s(d).numer().clone()).unwrap()
        };
        assert_eq!(raw("2*z1 - 2*z2", "2").render(), "z1 - z2");
        assert_eq!(raw("z1^2 - z2^2", "z1 - z2").render(), "z1 + z2");
        assert_eq!(raw("z1 - z2", "z2 - z1").render(), "-1");
        let x = raw("z1", "-2*z1*z2 + 4*z2");
        assert_eq!(x.render(), "(-(1/2)*z1)/(z1*z2 - 2*z2)");
        assert_eq!(x.canonicalize(), x);
    }

    #[test]
    fn zero_denominator_is_degenerate() {
        assert_eq!(
            ParamScalar::new(ParamPoly::one(), ParamPoly::zero()),
            Err(KzError::DegenerateScalar)
        );
    }

    #[test]
    fn field_op_examples() {
        let a = s("1/(z1 - z2)") + s("1/(z2 - z1)");
        assert!(a.is_zero());
        let d = s("z1 - z2");
        assert_eq!(&d * &d.pow(3).unwrap(), d.pow(4).unwrap());
        assert_eq!(s("1").checked_div(&ParamScalar::zero()), Err(KzError::DivisionByZero));
    }

    #[test]
    fn quotient_matches_expanded_oracle() {
        // (3 z1 - 7 z2)(z1 - z2)^3 / (z1 - z2), checked against hand-expanded
        // term maps of (3 z1 - 7 z2)(z1 - z2)^2 = 3z1^3 - 13z1^2z2 + 17z1z2^2 - 7z2^3
        let num = s("(3*z1 - 7*z2)*(z1 - z2)^3");
        let q = num.checked_div(&s("z1 - z2")).unwrap();
        let expected = ParamPoly::from_terms([
            (crate::scalar::Monomial::new(3, 0), int(3)),
            (crate::scalar::Monomial::new(2, 1), int(-13)),
            (crate::scalar::Monomial::new(1, 2), int(17)),
            (crate::scalar::Monomial::new(0, 3), int(-7)),
        ]);
        assert_eq!(q, ParamScalar::from_poly(expected));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(s("(z1 - z2)^4").evaluate(&int(0), &int(1)).unwrap(), int(1));
        assert_eq!(s("(3*z1 - 7*z2)/10").evaluate(&int(1), &int(0)).unwrap(), rat(3, 10));
        // entry (1,1) of the closed-form moment inverse
        let e = s("-z1*z2^2/(z1 - z2)^2");
        assert_eq!(e.evaluate(&int(2), &int(1)).unwrap(), int(-2));
        assert_eq!(s("1/(z1 - z2)").evaluate(&int(1), &int(1)), Err(KzError::EvaluationAtPole));
    }

    #[test]
    fn compose_substitutes() {
        let e = s("z1^2/(z1 - z2)");
        let t = ParamScalar::from_rational(rat(3, 2));
        let scaled = e.compose(&(&t * &s("z1")), &(&t * &s("z2"))).unwrap();
        assert_eq!(scaled, &t * &e);
    }
}
