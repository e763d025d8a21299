//! Dense vectors and matrices over a [`Scalar`], plus exact inversion.
//!
//! Exact inversion and solving go through fraction-free Gauss-Jordan
//! (Bareiss) elimination on an integer-scaled copy of the input. The generic
//! partial-pivot routine [`Matrix::inverse_pivoting`] is kept separate; the
//! numeric oracle uses it with `f64`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, Scalar};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector<T> {
    entries: Vec<T>,
}

impl<T: Scalar> Vector<T> {
    pub fn new(entries: Vec<T>) -> Self {
        Self { entries }
    }

    pub fn zeros(len: usize) -> Self {
        Self::new(vec![T::zero(); len])
    }

    /// The `i`-th standard basis vector.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.entries[i] = T::one();
        v
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| T::from_int(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Plain coordinate dot product (no metric).
    pub fn dot(&self, other: &Self) -> Result<T> {
        check_len(self.len(), other.len())?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
    }

    pub fn scale(&self, factor: &T) -> Self {
        Self::new(self.entries.iter().map(|x| x.clone() * factor.clone()).collect())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Vector<U> {
        Vector::new(self.entries.iter().map(f).collect())
    }
}

impl<T> Index<usize> for Vector<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.entries[i]
    }
}

impl<T> IndexMut<usize> for Vector<T> {
    fn index_mut(&mut self, i: usize) -> &mut T {
        &mut self.entries[i]
    }
}

impl<T: Scalar> Add for &Vector<T> {
    type Output = Vector<T>;
    fn add(self, rhs: Self) -> Vector<T> {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector::new(
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<T: Scalar> Sub for &Vector<T> {
    type Output = Vector<T>;
    fn sub(self, rhs: Self) -> Vector<T> {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector::new(
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }
}

impl<T> FromIterator<T> for Vector<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        Self {
            entries: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for Vector<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from equal-length rows.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            check_len(ncols, row.len())?;
            data.extend(row);
        }
        Self::new(nrows, ncols, data)
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| T::from_int(v)).collect())
                .collect(),
        )
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

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn scale(&self, factor: &T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * factor.clone()).collect(),
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        check_len(self.cols, rhs.rows)?;
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * rhs[(k, j)].clone();
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &Vector<T>) -> Result<Vector<T>> {
        check_len(self.cols, v.len())?;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v.iter())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// Bilinear form `u^T M v`.
    pub fn bilinear(&self, u: &Vector<T>, v: &Vector<T>) -> Result<T> {
        check_len(self.rows, u.len())?;
        u.dot(&self.mul_vec(v)?)
    }

    /// Maximum absolute column sum.
    pub fn norm_one(&self) -> T {
        (0..self.cols)
            .map(|j| (0..self.rows).fold(T::zero(), |acc, i| acc + self[(i, j)].abs()))
            .fold(T::zero(), |best, s| if s > best { s } else { best })
    }

    /// Gauss-Jordan inverse with partial pivoting by magnitude.
    ///
    /// A pivot whose magnitude is at most `zero_tol` is treated as zero. For
    /// exact scalars pass zero.
    pub fn inverse_pivoting(&self, zero_tol: &T) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            let pivot = (k..n)
                .max_by(|&i, &j| {
                    a[(i, k)]
                        .abs()
                        .partial_cmp(&a[(j, k)].abs())
                        .unwrap_or(std::cmp::Ordering::Equal)
                })
                .expect("nonempty pivot range");
            if a[(pivot, k)].abs() <= *zero_tol {
                return Err(Error::SingularMatrix);
            }
            a.swap_rows(k, pivot);
            inv.swap_rows(k, pivot);
            let p = a[(k, k)].clone();
            for j in 0..n {
                a[(k, j)] = a[(k, j)].clone() / p.clone();
                inv[(k, j)] = inv[(k, j)].clone() / p.clone();
            }
            for i in 0..n {
                if i == k || a[(i, k)].is_zero() {
                    continue;
                }
                let f = a[(i, k)].clone();
                for j in 0..n {
                    a[(i, j)] = a[(i, j)].clone() - f.clone() * a[(k, j)].clone();
                    inv[(i, j)] = inv[(i, j)].clone() - f.clone() * inv[(k, j)].clone();
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.cols {
                self.data.swap(i * self.cols + c, j * self.cols + c);
            }
        }
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let parts: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "[{}]", parts.join(", "))?;
        }
        Ok(())
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Exact inverse via fraction-free Gauss-Jordan elimination.
pub fn invert(m: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    m.require_square()?;
    let n = m.rows();
    solve_many(m, &Matrix::identity(n))
}

/// Exact solution of `m x = b`.
pub fn solve(m: &Matrix<Rational>, b: &Vector<Rational>) -> Result<Vector<Rational>> {
    m.require_square()?;
    check_len(m.rows(), b.len())?;
    let rhs = Matrix::new(b.len(), 1, b.entries().to_vec())?;
    Ok(solve_many(m, &rhs)?.column(0))
}

/// Exact determinant via Bareiss elimination.
pub fn determinant(m: &Matrix<Rational>) -> Result<Rational> {
    m.require_square()?;
    let n = m.rows();
    if n == 0 {
        return Ok(Rational::one());
    }
    let (mut a, row_scale) = integer_rows(m, &Matrix::zeros(n, 0));
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = exact_div(num, &prev);
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let scale: BigInt = row_scale.iter().product();
    Ok(Rational::new(sign * prev, scale))
}

/// Solves `m X = rhs` column by column with Bareiss-Jordan elimination.
///
/// Each row of `[m | rhs]` is multiplied by the lcm of its denominators so
/// the elimination runs on integers; every division below is exact because
/// intermediate entries are minors of the scaled augmented matrix.
fn solve_many(m: &Matrix<Rational>, rhs: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    let n = m.rows();
    let extra = rhs.cols();
    let width = n + extra;
    let (mut a, _) = integer_rows(m, rhs);
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n)
            .find(|&i| !a[i][k].is_zero())
            .ok_or(Error::SingularMatrix)?;
        a.swap(p, k);
        for i in 0..n {
            if i == k {
                continue;
            }
            for j in 0..width {
                if j == k {
                    continue;
                }
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = exact_div(num, &prev);
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    // Every diagonal entry now equals `prev` (the scaled determinant).
    let mut out = Matrix::zeros(n, extra);
    for i in 0..n {
        debug_assert_eq!(a[i][i], prev);
        for j in 0..extra {
            out[(i, j)] = Rational::new(a[i][n + j].clone(), prev.clone());
        }
    }
    Ok(out)
}

fn integer_rows(m: &Matrix<Rational>, rhs: &Matrix<Rational>) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    let mut rows = Vec::with_capacity(m.rows());
    let mut scales = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let entries: Vec<&Rational> = m.row(i).iter().chain(rhs.row(i)).collect();
        let scale = entries
            .iter()
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        rows.push(
            entries
                .iter()
                .map(|r| r.numer() * (&scale / r.denom()))
                .collect(),
        );
        scales.push(scale);
    }
    (rows, scales)
}

fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    debug_assert!(r.is_zero(), "Bareiss step produced an inexact quotient");
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn rmat(rows: &[&[(i64, i64)]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(p, q)| rat(p, q)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn inverts_scalar() {
        let m = rmat(&[&[(2, 1)]]);
        assert_eq!(invert(&m).unwrap(), rmat(&[&[(1, 2)]]));
    }

    #[test]
    fn identity_is_its_own_inverse() {
        let id = Matrix::<Rational>::identity(4);
        assert_eq!(invert(&id).unwrap(), id);
    }

    #[test]
    fn g2_gram_inverse_gives_diameter() {
        // (1/6)[[6,-3],[-3,2]] with (psi,psi) = 1 and psi = 2a1 + 3a2.
        let g = rmat(&[&[(1, 1), (-1, 2)], &[(-1, 2), (1, 3)]]);
        let inv = invert(&g).unwrap();
        assert_eq!(inv, rmat(&[&[(4, 1), (6, 1)], &[(6, 1), (12, 1)]]));
        let d = [2, 3];
        let best = (0..2)
            .map(|j| inv[(j, j)].clone() / int(d[j] * d[j]))
            .max()
            .unwrap();
        assert_eq!(best, rat(4, 3));
    }

    #[test]
    fn solve_cartan_a2() {
        let m = Matrix::<Rational>::from_int_rows(&[vec![2, -1], vec![-1, 2]]).unwrap();
        let x = solve(&m, &Vector::from_ints(&[1, 0])).unwrap();
        assert_eq!(x, Vector::new(vec![rat(2, 3), rat(1, 3)]));
        assert_eq!(m.mul_vec(&x).unwrap(), Vector::from_ints(&[1, 0]));
    }

    #[test]
    fn solve_identity() {
        let b = Vector::new(vec![int(3), rat(1, 2)]);
        assert_eq!(solve(&Matrix::identity(2), &b).unwrap(), b);
    }

    #[test]
    fn singular_is_reported() {
        let m = Matrix::<Rational>::from_int_rows(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(invert(&m), Err(Error::SingularMatrix));
        assert_eq!(determinant(&m).unwrap(), int(0));
        assert_eq!(
            m.inverse_pivoting(&Rational::zero()),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn non_square_is_rejected() {
        let m = Matrix::<Rational>::zeros(2, 3);
        assert!(matches!(invert(&m), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn needs_row_swap() {
        let m = Matrix::<Rational>::from_int_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(invert(&m).unwrap(), m);
        assert_eq!(determinant(&m).unwrap(), int(-1));
    }

    #[test]
    fn determinant_of_fractional_matrix() {
        let m = rmat(&[&[(1, 2), (1, 3)], &[(1, 4), (1, 5)]]);
        assert_eq!(determinant(&m).unwrap(), rat(1, 10) - rat(1, 12));
    }

    #[test]
    fn pivoting_route_agrees_on_rationals() {
        let m = rmat(&[
            &[(1, 1), (1, 2), (1, 3)],
            &[(1, 2), (1, 3), (1, 4)],
            &[(1, 3), (1, 4), (1, 5)],
        ]);
        assert_eq!(m.inverse_pivoting(&Rational::zero()).unwrap(), invert(&m).unwrap());
    }
}
