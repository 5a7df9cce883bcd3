//! Bivariate polynomial gcd over the rationals.
//!
//! Inputs are cleared of denominators and viewed in `Z[z2][z1]`. The gcd is
//! the gcd of the contents (a univariate gcd in `Z[z2]`) times the gcd of the
//! primitive parts, obtained from a primitive pseudo-remainder sequence in
//! `z1`. Integer contents are divided out at every step so coefficients stay
//! small.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, ParamPoly, Rational};

/// Dense polynomial in `z2` over the integers, lowest power first, trimmed.
type IntPoly = Vec<BigInt>;

/// Greatest common divisor normalized to coprime integer coefficients with
/// a positive deglex-leading coefficient. `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    if a.is_constant() || b.is_constant() {
        return ParamPoly::one();
    }
    let ra = to_integer_recursive(a);
    let rb = to_integer_recursive(b);
    let ca = content(&ra);
    let cb = content(&rb);
    let c = gcd_uni(&ca, &cb);

    let mut p = divide_coeffs(&ra, &ca);
    let mut q = divide_coeffs(&rb, &cb);
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    let g = loop {
        if q.len() == 1 {
            // nonzero constant in z1 after removing content
            break vec![vec![BigInt::one()]];
        }
        let r = pseudo_rem(&p, &q);
        if r.is_empty() {
            break q;
        }
        p = q;
        q = primitive(&r);
    };
    let g = primitive(&g);
    let gc: Vec<IntPoly> = g.iter().map(|u| mul_uni(&c, u)).collect();
    from_integer_recursive(&gc).primitive_part()
}

/// `p` times the lcm of its denominators, as coefficients of `z1^i`.
fn to_integer_recursive(p: &ParamPoly) -> Vec<IntPoly> {
    let l = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let deg = p.terms().map(|(m, _)| m.z1 as usize).max().unwrap_or(0);
    let mut out: Vec<IntPoly> = vec![Vec::new(); deg + 1];
    for (m, c) in p.terms() {
        let row = &mut out[m.z1 as usize];
        if row.len() <= m.z2 as usize {
            row.resize(m.z2 as usize + 1, BigInt::zero());
        }
        row[m.z2 as usize] = c.numer() * (&l / c.denom());
    }
    out.into_iter().map(trim_uni).collect()
}

fn from_integer_recursive(p: &[IntPoly]) -> ParamPoly {
    ParamPoly::from_terms(p.iter().enumerate().flat_map(|(i, u)| {
        u.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(j, c)| (Monomial::new(i as u32, j as u32), Rational::from_integer(c.clone())))
    }))
}

fn trim_uni(mut v: IntPoly) -> IntPoly {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn mul_uni(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_uni(out)
}

fn sub_uni(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    trim_uni((0..n).map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).collect())
}

fn int_content(a: &IntPoly) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Divides out the integer content and makes the leading coefficient positive.
fn primitive_uni(a: &IntPoly) -> IntPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = int_content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    a.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder in `Z[z2]`.
fn pseudo_rem_uni(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let lb = b.last().expect("nonzero divisor");
    let db = b.len() - 1;
    let mut r = a.clone();
    while r.len() > db && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        let mut next: IntPoly = r.iter().map(|c| c * lb).collect();
        for (j, bc) in b.iter().enumerate() {
            next[j + shift] -= &lr * bc;
        }
        r = trim_uni(next);
    }
    r
}

/// Gcd in `Z[z2]` with positive leading coefficient; `gcd(0, 0) = 0`.
fn gcd_uni(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() {
        return primitive_uni(b).iter().map(|x| x * int_content(b)).collect();
    }
    if b.is_empty() {
        return primitive_uni(a).iter().map(|x| x * int_content(a)).collect();
    }
    let c = int_content(a).gcd(&int_content(b));
    let (mut p, mut q) = (primitive_uni(a), primitive_uni(b));
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_empty() {
        let r = pseudo_rem_uni(&p, &q);
        p = q;
        q = primitive_uni(&r);
    }
    p.iter().map(|x| x * &c).collect()
}

/// Exact quotient in `Z[z2]`; panics if `b` does not divide `a`.
fn exact_div_uni(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let lb = b.last().expect("nonzero divisor");
    let db = b.len() - 1;
    let mut r = a.clone();
    if r.len() <= db {
        assert!(r.is_empty(), "divisor does not divide");
        return Vec::new();
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    while !r.is_empty() {
        assert!(r.len() > db, "divisor does not divide");
        let (c, rem) = r.last().unwrap().div_rem(lb);
        assert!(rem.is_zero(), "divisor does not divide");
        let shift = r.len() - 1 - db;
        for (j, bc) in b.iter().enumerate() {
            r[j + shift] -= &c * bc;
        }
        q[shift] = c;
        r = trim_uni(r);
    }
    trim_uni(q)
}

fn trim(mut v: Vec<IntPoly>) -> Vec<IntPoly> {
    while v.last().map_or(false, |c| c.is_empty()) {
        v.pop();
    }
    v
}

fn content(p: &[IntPoly]) -> IntPoly {
    p.iter().fold(Vec::new(), |acc, c| gcd_uni(&acc, c))
}

fn divide_coeffs(p: &[IntPoly], c: &IntPoly) -> Vec<IntPoly> {
    p.iter().map(|u| exact_div_uni(u, c)).collect()
}

fn primitive(p: &[IntPoly]) -> Vec<IntPoly> {
    let c = content(p);
    if c.is_empty() {
        return Vec::new();
    }
    divide_coeffs(p, &c)
}

/// Pseudo-remainder of `a` by `b` in `Z[z2][z1]`, up to a factor that is a
/// power of the leading coefficient of `b`.
fn pseudo_rem(a: &[IntPoly], b: &[IntPoly]) -> Vec<IntPoly> {
    let lb = b.last().expect("nonzero divisor");
    let db = b.len() - 1;
    let mut r = trim(a.to_vec());
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        let mut next: Vec<IntPoly> = r.iter().map(|c| mul_uni(lb, c)).collect();
        for (j, bc) in b.iter().enumerate() {
            next[j + shift] = sub_uni(&next[j + shift], &mul_uni(&lr, bc));
        }
        r = trim(next);
    }
    r
}
