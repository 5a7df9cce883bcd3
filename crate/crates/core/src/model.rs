//! The concrete KZ system: transposition matrices, the residue data of
//! `A(z)`, the series matrices `T_r`, and the exact eigensystem of `T`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{KzError, Result};
use crate::linalg::{Matrix, Vec3};
use crate::scalar::rational::int;
use crate::scalar::{Field, ParamScalar, Rational};

/// Permutation matrix of the transposition `(i j)` acting on `n` points,
/// with 1-based indices.
pub fn transposition_matrix(i: usize, j: usize, n: usize) -> Result<Matrix<Rational>> {
    if !(1 <= i && i < j && j <= n) {
        return Err(KzError::IndexOutOfRange(format!(
            "transposition ({i} {j}) needs 1 <= i < j <= {n}"
        )));
    }
    let image = |k: usize| match k {
        k if k == i - 1 => j - 1,
        k if k == j - 1 => i - 1,
        k => k,
    };
    Ok(Matrix::from_fn(n, n, |r, c| {
        if image(c) == r {
            Rational::one()
        } else {
            Rational::zero()
        }
    }))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Pole {
    pub location: ParamScalar,
    pub residue: Matrix<Rational>,
}

/// `dW/dz = multiplier * sum_j residue_j / (z - location_j) * W`.
#[derive(Clone, Debug, PartialEq)]
pub struct KZSystem {
    poles: Vec<Pole>,
    multiplier: Rational,
}

impl KZSystem {
    pub fn poles(&self) -> &[Pole] {
        &self.poles
    }

    pub fn multiplier(&self) -> &Rational {
        &self.multiplier
    }

    pub fn z1(&self) -> &ParamScalar {
        &self.poles[0].location
    }

    pub fn z2(&self) -> &ParamScalar {
        &self.poles[1].location
    }

    /// Pole locations as rationals, when both are instantiated.
    pub fn numeric_poles(&self) -> Option<(Rational, Rational)> {
        Some((self.z1().as_rational()?, self.z2().as_rational()?))
    }

    pub fn is_numeric(&self) -> bool {
        self.numeric_poles().is_some()
    }

    /// `T = sum_j P_j`.
    pub fn total_matrix(&self) -> Matrix<Rational> {
        self.poles
            .iter()
            .skip(1)
            .fold(self.poles[0].residue.clone(), |acc, p| {
                acc.add(&p.residue).expect("residues share a shape")
            })
    }

    /// `T_r = sum_j z_j^(r+1) P_j` for `r >= 0`.
    pub fn series_matrix(&self, r: i64) -> Result<Matrix<ParamScalar>> {
        if r < 0 {
            return Err(KzError::NegativeOrder(r));
        }
        let n = self.poles[0].residue.rows();
        let mut acc = Matrix::zeros(n, n);
        for pole in &self.poles {
            let w = pole.location.pow(r as i32 + 1)?;
            let term = pole.residue.map(|e| &ParamScalar::from_rational(e.clone()) * &w);
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// `A(z)` evaluated at a rational point, for instantiated systems.
    pub fn coefficient_at(&self, z: &Rational) -> Result<Matrix<Rational>> {
        let (a, b) = self.numeric_poles().ok_or(KzError::NotNumeric)?;
        let n = self.poles[0].residue.rows();
        let mut acc = Matrix::zeros(n, n);
        for (pole, loc) in self.poles.iter().zip([a, b]) {
            let d = z - loc;
            if d.is_zero() {
                return Err(KzError::EvaluationAtPole);
            }
            acc = acc.add(&pole.residue.scale(&d.recip()))?;
        }
        Ok(acc)
    }
}

/// The system with `P1 = (1 2)` at `z1`, `P2 = (1 3)` at `z2` and
/// multiplier `-2`.
pub fn build_s3_system(z1: ParamScalar, z2: ParamScalar) -> Result<KZSystem> {
    if z1 == z2 {
        return Err(KzError::DegenerateConfiguration(format!(
            "pole locations coincide: z1 = z2 = {z1}"
        )));
    }
    Ok(KZSystem {
        poles: vec![
            Pole {
                location: z1,
                residue: transposition_matrix(1, 2, 3)?,
            },
            Pole {
                location: z2,
                residue: transposition_matrix(1, 3, 3)?,
            },
        ],
        multiplier: int(-2),
    })
}

pub fn symbolic_system() -> KZSystem {
    build_s3_system(ParamScalar::z1(), ParamScalar::z2()).expect("z1 and z2 are distinct")
}

#[derive(Clone, Debug, PartialEq)]
pub struct EigenPair {
    pub value: Rational,
    pub vector: Vec3<Rational>,
}

/// Eigenpairs sorted by decreasing eigenvalue.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenSystem {
    pub pairs: Vec<EigenPair>,
}

impl EigenSystem {
    /// Matrix whose columns are the eigenvectors.
    pub fn basis(&self) -> Matrix<Rational> {
        Matrix::from_fn(3, 3, |i, j| self.pairs[j].vector[i].clone())
    }

    pub fn pair_for(&self, value: &Rational) -> Option<&EigenPair> {
        self.pairs.iter().find(|p| &p.value == value)
    }
}

/// Characteristic polynomial `det(x I - m)`, coefficients from the constant
/// term upwards, via Faddeev-LeVerrier.
pub fn characteristic_polynomial(m: &Matrix<Rational>) -> Vec<Rational> {
    let n = m.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk: Matrix<Rational> = Matrix::zeros(n, n);
    for k in 1..=n {
        let shifted = Matrix::identity(n).scale(&coeffs[n - k + 1]);
        mk = m.mul(&mk).expect("square").add(&shifted).expect("square");
        let amk = m.mul(&mk).expect("square");
        let trace = (0..n).fold(Rational::zero(), |acc, i| acc + amk[(i, i)].clone());
        coeffs[n - k] = -trace / int(k as i64);
    }
    coeffs
}

/// All rational roots with multiplicity, by the rational root theorem.
pub fn rational_roots(coeffs: &[Rational]) -> Vec<Rational> {
    let mut poly = crate::scalar::UniPoly::from_coeffs(coeffs.to_vec());
    let mut roots = Vec::new();
    while poly.coeff(0).is_zero() && !poly.is_zero() && poly.degree() > Some(0) {
        roots.push(Rational::zero());
        poly = poly
            .exact_div(&crate::scalar::UniPoly::x())
            .expect("x divides");
    }
    loop {
        let Some(deg) = poly.degree() else { break };
        if deg == 0 {
            break;
        }
        let lcm = poly
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = poly
            .coeffs()
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let found = candidates(&ints[0], &ints[deg])
            .into_iter()
            .find(|r| poly.eval(r).is_zero());
        match found {
            Some(r) => {
                poly = poly
                    .exact_div(&crate::scalar::UniPoly::linear_root(r.clone()))
                    .expect("root divides");
                roots.push(r);
            }
            None => break,
        }
    }
    roots
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let q = &n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
    }
    out
}

fn candidates(constant: &BigInt, leading: &BigInt) -> Vec<Rational> {
    let mut out = Vec::new();
    for p in divisors(constant) {
        for q in divisors(leading) {
            let r = Rational::new(p.clone(), q);
            out.push(r.clone());
            out.push(-r);
        }
    }
    out
}

/// Coprime integer entries, first nonzero entry positive.
pub fn normalize_integer_vector(v: &[Rational]) -> Vec<Rational> {
    let lcm = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return v.to_vec();
    }
    let first_negative = ints.iter().find(|c| !c.is_zero()).map_or(false, |c| c.is_negative());
    let g = if first_negative { -g } else { g };
    ints.into_iter()
        .map(|c| Rational::from_integer(c / &g))
        .collect()
}

/// Eigenpairs of a 3x3 rational matrix with three distinct rational
/// eigenvalues.
pub fn eigensystem(m: &Matrix<Rational>) -> Result<EigenSystem> {
    if m.rows() != 3 || m.cols() != 3 {
        return Err(KzError::DimensionMismatch("eigensystem needs a 3x3 matrix".into()));
    }
    let chi = characteristic_polynomial(m);
    let mut roots = rational_roots(&chi);
    if roots.len() < 3 {
        return Err(KzError::UnsupportedSpectrum(
            "characteristic polynomial has irrational roots".into(),
        ));
    }
    roots.sort();
    if roots.windows(2).any(|w| w[0] == w[1]) {
        return Err(KzError::UnsupportedSpectrum(format!(
            "repeated eigenvalue in {}",
            roots
                .iter()
                .map(crate::scalar::render_rational)
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    roots.reverse();
    let pairs = roots
        .into_iter()
        .map(|value| {
            let shifted = m
                .add(&Matrix::identity(3).scale(&-value.clone()))
                .expect("square");
            let kernel = shifted.kernel();
            let v = normalize_integer_vector(&kernel[0]);
            EigenPair {
                value,
                vector: crate::linalg::to_vec3(v),
            }
        })
        .collect();
    Ok(EigenSystem { pairs })
}

/// `true` when `(order I - factor T) v = 0`, i.e. `v` is an eigenvector of
/// `factor T` with eigenvalue `order`.
pub fn is_eigenvector_of_scaled<F: Field>(t: &Matrix<Rational>, factor: &Rational, order: i64, v: &[F]) -> bool {
    let m = Matrix::from_fn(3, 3, |i, j| {
        let diag = if i == j { int(order) } else { Rational::zero() };
        F::from_rational(&(diag - factor * &t[(i, j)]))
    });
    m.mul_vec(v).map_or(false, |r| r.iter().all(|x| x.is_zero()))
}
