use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::render_rational;
use super::{Rational, UniPoly};

/// The two parameters every coefficient may depend on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Param {
    Z1,
    Z2,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::Z1 => "z1",
            Param::Z2 => "z2",
        }
    }
}

/// Exponent pair `z1^a * z2^b`, ordered degree-lexicographically with
/// `z1 > z2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub z1: u32,
    pub z2: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { z1: 0, z2: 0 };

    pub fn new(z1: u32, z2: u32) -> Self {
        Monomial { z1, z2 }
    }

    pub fn degree(self) -> u32 {
        self.z1 + self.z2
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.z1 <= other.z1 && self.z2 <= other.z2
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.z1.cmp(&other.z1))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.z1 + rhs.z1, self.z2 + rhs.z2)
    }
}

/// Polynomial in `z1`, `z2` with rational coefficients. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ParamPoly { terms }
    }

    pub fn var(p: Param) -> Self {
        let m = match p {
            Param::Z1 => Monomial::new(1, 0),
            Param::Z2 => Monomial::new(0, 1),
        };
        Self::term(Rational::one(), m)
    }

    pub fn from_terms(items: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut out = ParamPoly::zero();
        for (m, c) in items {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map_or(false, |c| c.is_one())
    }

    /// The value of a polynomial without any parameter dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending deglex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term in deglex order.
    pub fn leading(&self) -> Option<(Monomial, &Rational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, p: Param) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| match p {
                Param::Z1 => m.z1,
                Param::Z2 => m.z2,
            })
            .max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    fn mul_term(&self, c: &Rational, mono: Monomial) -> Self {
        ParamPoly {
            terms: self.terms.iter().map(|(m, a)| (*m * mono, a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = ParamPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, z1: &Rational, z2: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            acc += c * num_traits::pow(z1.clone(), m.z1 as usize) * num_traits::pow(z2.clone(), m.z2 as usize);
        }
        acc
    }

    /// Substitutes a polynomial for each parameter.
    pub fn compose(&self, z1: &ParamPoly, z2: &ParamPoly) -> ParamPoly {
        let mut acc = ParamPoly::zero();
        for (m, c) in &self.terms {
            acc = &acc + &(&z1.pow(m.z1) * &z2.pow(m.z2)).scale(c);
        }
        acc
    }

    /// Rational content: positive `gcd(numerators) / lcm(denominators)`, so
    /// that `self / content` has coprime integer coefficients. Zero for the
    /// zero polynomial.
    pub fn content(&self) -> Rational {
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for c in self.terms.values() {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        if g.is_zero() {
            Rational::zero()
        } else {
            Rational::new(g, l)
        }
    }

    /// `self / content`, with a positive leading coefficient.
    pub fn primitive_part(&self) -> ParamPoly {
        if self.is_zero() {
            return ParamPoly::zero();
        }
        let mut c = self.content();
        if self.leading().map_or(false, |(_, l)| l.is_negative()) {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Exact multivariate division; `None` if `divisor` does not divide
    /// `self` (or is zero).
    pub fn exact_div(&self, divisor: &ParamPoly) -> Option<ParamPoly> {
        let (dm, dc) = divisor.leading()?;
        let dc_inv = dc.recip();
        let mut rem = self.clone();
        let mut quot = ParamPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            if !dm.divides(rm) {
                return None;
            }
            let qm = Monomial::new(rm.z1 - dm.z1, rm.z2 - dm.z2);
            let qc = rc * &dc_inv;
            rem = &rem - &divisor.mul_term(&qc, qm);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// View as a polynomial in `z1` whose coefficients are polynomials in
    /// `z2`; index `i` holds the coefficient of `z1^i`.
    pub fn to_recursive(&self) -> Vec<UniPoly<Rational>> {
        let deg = self.degree_in(Param::Z1).map_or(0, |d| d as usize + 1);
        let mut dense: Vec<Vec<Rational>> = vec![Vec::new(); deg];
        for (m, c) in &self.terms {
            let row = &mut dense[m.z1 as usize];
            if row.len() <= m.z2 as usize {
                row.resize(m.z2 as usize + 1, Rational::zero());
            }
            row[m.z2 as usize] = c.clone();
        }
        dense.into_iter().map(UniPoly::from_coeffs).collect()
    }

    pub fn from_recursive(coeffs: &[UniPoly<Rational>]) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (i, u) in coeffs.iter().enumerate() {
            for (j, c) in u.coeffs().iter().enumerate() {
                out.add_term(Monomial::new(i as u32, j as u32), c.clone());
            }
        }
        out
    }

    /// Canonical text in the scalar grammar.
    pub fn render(&self) -> String {
        self.render_with(&TextStyle)
    }

    pub fn render_latex(&self) -> String {
        self.render_with(&LatexStyle)
    }

    fn render_with(&self, style: &dyn TermStyle) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&style.term(&c.abs(), *m));
        }
        out
    }
}

trait TermStyle {
    fn term(&self, abs_coeff: &Rational, m: Monomial) -> String;
}

struct TextStyle;

impl TermStyle for TextStyle {
    fn term(&self, c: &Rational, m: Monomial) -> String {
        let mut factors = Vec::new();
        for (name, e) in [("z1", m.z1), ("z2", m.z2)] {
            match e {
                0 => {}
                1 => factors.push(name.to_string()),
                _ => factors.push(format!("{name}^{e}")),
            }
        }
        if factors.is_empty() {
            return render_rational(c);
        }
        let mono = factors.join("*");
        if c.is_one() {
            mono
        } else if c.is_integer() {
            format!("{}*{mono}", c.numer())
        } else {
            format!("({})*{mono}", render_rational(c))
        }
    }
}

struct LatexStyle;

impl TermStyle for LatexStyle {
    fn term(&self, c: &Rational, m: Monomial) -> String {
        let mut factors = Vec::new();
        for (idx, e) in [(1, m.z1), (2, m.z2)] {
            match e {
                0 => {}
                1 => factors.push(format!("z_{{{idx}}}")),
                _ => factors.push(format!("z_{{{idx}}}^{{{e}}}")),
            }
        }
        let coeff = if c.is_integer() {
            c.numer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
        };
        if factors.is_empty() {
            return coeff;
        }
        if !c.is_one() {
            factors.insert(0, coeff);
        }
        factors.join("\\,")
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(*ma * *mb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}
