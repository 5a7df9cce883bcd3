//! Dense exact matrices over any [`Field`].

use std::fmt;

use crate::error::{KzError, Result};
use crate::scalar::{Field, ParamScalar, Rational};

/// Column 3-vector.
pub type Vec3<F> = [F; 3];

#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(KzError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(KzError::DimensionMismatch("matrix sum".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(KzError::DimensionMismatch("matrix product".into()));
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(F::zero(), |acc, k| {
                acc + self[(i, k)].clone() * rhs[(k, j)].clone()
            })
        }))
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if self.cols != v.len() {
            return Err(KzError::DimensionMismatch("matrix-vector product".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> Result<F> {
        if !self.is_square() {
            return Err(KzError::DimensionMismatch("determinant of non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(F::one());
        }
        let mut a = self.clone();
        let mut sign = F::one();
        let mut prev = F::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(p) => {
                        a.swap_rows(k, p);
                        sign = -sign;
                    }
                    None => return Ok(F::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[(i, j)].clone() * a[(k, k)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                    a[(i, j)] = v / prev.clone();
                }
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * a[(n - 1, n - 1)].clone())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Solves `self * X = rhs` for square nonsingular `self`, using Bareiss
    /// fraction-free forward elimination on the augmented matrix followed by
    /// back substitution.
    pub fn solve(&self, rhs: &Matrix<F>) -> Result<Matrix<F>> {
        if !self.is_square() || rhs.rows != self.rows {
            return Err(KzError::DimensionMismatch("linear solve".into()));
        }
        let n = self.rows;
        let m = rhs.cols;
        let w = n + m;
        let mut a = Matrix::from_fn(n, w, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else {
                rhs[(i, j - n)].clone()
            }
        });
        let mut prev = F::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                let p = (k + 1..n)
                    .find(|&i| !a[(i, k)].is_zero())
                    .ok_or(KzError::SingularMatrix)?;
                a.swap_rows(k, p);
            }
            for i in k + 1..n {
                for j in k + 1..w {
                    let v = a[(i, j)].clone() * a[(k, k)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                    a[(i, j)] = v / prev.clone();
                }
                a[(i, k)] = F::zero();
            }
            prev = a[(k, k)].clone();
        }
        let mut x: Matrix<F> = Matrix::zeros(n, m);
        for c in 0..m {
            for i in (0..n).rev() {
                let mut acc = a[(i, n + c)].clone();
                for j in i + 1..n {
                    acc = acc - a[(i, j)].clone() * x[(j, c)].clone();
                }
                x[(i, c)] = acc / a[(i, i)].clone();
            }
        }
        Ok(x)
    }

    pub fn solve_vec(&self, rhs: &[F]) -> Result<Vec<F>> {
        let b = Matrix::from_fn(rhs.len(), 1, |i, _| rhs[i].clone());
        let x = self.solve(&b)?;
        Ok(x.data)
    }

    pub fn inverse(&self) -> Result<Matrix<F>> {
        self.solve(&Matrix::identity(self.rows))
    }

    /// Basis of the right null space, from the reduced row echelon form.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = a[(r, c)].try_inv().expect("nonzero pivot");
            for j in 0..a.cols {
                a[(r, j)] = a[(r, j)].clone() * inv.clone();
            }
            for i in 0..a.rows {
                if i != r && !a[(i, c)].is_zero() {
                    let f = a[(i, c)].clone();
                    for j in 0..a.cols {
                        a[(i, j)] = a[(i, j)].clone() - f.clone() * a[(r, j)].clone();
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == a.rows {
                break;
            }
        }
        (0..a.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![F::zero(); a.cols];
                v[free] = F::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -a[(row, free)].clone();
                }
                v
            })
            .collect()
    }
}

impl<F: Field> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F: Field> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[F]> = (0..self.rows).map(|i| self.row(i)).collect();
        f.debug_list().entries(rows).finish()
    }
}

pub fn vec3_add<F: Field>(a: &Vec3<F>, b: &Vec3<F>) -> Vec3<F> {
    std::array::from_fn(|i| a[i].clone() + b[i].clone())
}

pub fn vec3_scale<F: Field>(a: &Vec3<F>, c: &F) -> Vec3<F> {
    std::array::from_fn(|i| a[i].clone() * c.clone())
}

pub fn vec3_is_zero<F: Field>(a: &Vec3<F>) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn to_vec3<F: Field>(v: Vec<F>) -> Vec3<F> {
    let mut it = v.into_iter();
    std::array::from_fn(|_| it.next().expect("three entries"))
}

pub fn lift_vec3(v: &Vec3<Rational>) -> Vec3<ParamScalar> {
    std::array::from_fn(|i| ParamScalar::from_rational(v[i].clone()))
}

pub fn lift_matrix(m: &Matrix<Rational>) -> Matrix<ParamScalar> {
    m.map(|r| ParamScalar::from_rational(r.clone()))
}

pub fn render_vec3(v: &Vec3<ParamScalar>) -> [String; 3] {
    std::array::from_fn(|i| v[i].render())
}
