//! Dense matrices and fraction-free (Bareiss) elimination.
//!
//! Rational matrices are scaled row by row to integer matrices before
//! elimination, so every intermediate value is a minor of the scaled input.
//! The same elimination runs over `Q[x]` for the polynomial determinants of
//! the Cauchy-Jacobi solver.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::rat::{self, Rat};

/// An integral domain where the divisions Bareiss performs are exact.
pub trait ExactDomain: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / d`, where the caller guarantees `d` divides `self`.
    fn div_exact(&self, d: &Self) -> Self;
}

impl ExactDomain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % d)), "inexact Bareiss division");
        self / d
    }
}

impl ExactDomain for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Self {
        self.exact_div(d).expect("inexact Bareiss division over Q[x]")
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

/// Bareiss determinant over an exact domain. The 0x0 determinant is one.
pub fn bareiss_det<T: ExactDomain>(mut a: Vec<Vec<T>>) -> T {
    let n = a.len();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return T::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = if n == 0 { T::one() } else { a[n - 1][n - 1].clone() };
    if negate { d.neg() } else { d }
}

/// Fraction-free row echelon form of an integer matrix. Returns the reduced
/// rows and the pivot column of each nonzero row.
fn bareiss_echelon(mut a: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut prev = <BigInt as One>::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !Zero::is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(p, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v.div_exact(&prev);
            }
            a[i][c] = <BigInt as Zero>::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

impl Matrix<Rat> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { Rat::one() } else { Rat::zero() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| Rat::zero())
    }

    /// Each row multiplied by the lcm of its denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = rat::common_denominator(row);
                row.iter().map(|x| (x * Rat::from_integer(l.clone())).to_integer()).collect()
            })
            .collect()
    }

    fn row_scales(&self) -> Rat {
        (0..self.rows)
            .map(|i| Rat::from_integer(rat::common_denominator(self.row(i))))
            .fold(Rat::one(), |acc, l| acc * l)
    }

    /// Exact determinant. Panics on a non-square matrix.
    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let d = bareiss_det(self.integer_rows());
        Rat::from_integer(d) / self.row_scales()
    }

    pub fn rank(&self) -> usize {
        bareiss_echelon(self.integer_rows(), self.cols).1.len()
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let (u, pivots) = bareiss_echelon(self.integer_rows(), self.cols);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Rat::zero(); self.cols];
                v[fc] = Rat::one();
                for (i, &pc) in pivots.iter().enumerate().rev() {
                    let s = (pc + 1..self.cols)
                        .filter(|&j| !v[j].is_zero())
                        .fold(Rat::zero(), |acc, j| acc + Rat::from_integer(u[i][j].clone()) * &v[j]);
                    v[pc] = -s / Rat::from_integer(u[i][pc].clone());
                }
                v
            })
            .collect()
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(Rat::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }
}

impl Matrix<Poly> {
    pub fn det(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        bareiss_det(self.to_rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{int, rat};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    /// Cofactor expansion along the first row.
    fn cofactor_det(a: &[Vec<Rat>]) -> Rat {
        let n = a.len();
        if n == 0 {
            return Rat::one();
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<Rat>> = a[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let s = if j % 2 == 0 { int(1) } else { int(-1) };
                s * &a[0][j] * cofactor_det(&minor)
            })
            .fold(Rat::zero(), |acc, t| acc + t)
    }

    #[test]
    fn det_examples() {
        assert_eq!(Matrix::<Rat>::from_rows(vec![]).det(), int(1));
        assert_eq!(Matrix::identity(3).det(), int(1));
        assert_eq!(m(&[&[1, 2], &[3, 4]]).det(), int(-2));
        let a = Matrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 4), rat(1, 5)]]);
        assert_eq!(a.det(), rat(1, 10) - rat(1, 12));
    }

    #[test]
    fn nullspace_examples() {
        assert!(Matrix::identity(2).nullspace().is_empty());
        assert_eq!(Matrix::zeros(1, 2).nullspace().len(), 2);
        let k = m(&[&[1, 2]]).nullspace();
        assert_eq!(k, vec![vec![int(-2), int(1)]]);
    }

    #[test]
    fn polynomial_det() {
        // [[x, 1], [1, x]] -> x^2 - 1
        let x = Poly::x();
        let a = Matrix::from_rows(vec![vec![x.clone(), Poly::one()], vec![Poly::one(), x]]);
        assert_eq!(a.det(), Poly::new(vec![int(-1), int(0), int(1)]));
    }

    fn small_square() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (0usize..=4).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-2i64..=2, n), n))
    }

    fn small_rect() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..=4, 1usize..=5)
            .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-2i64..=2, c), r))
    }

    proptest! {
        #[test]
        fn det_matches_cofactor(a in small_square()) {
            let rows: Vec<Vec<Rat>> = a.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
            let mat = Matrix::from_rows(rows.clone());
            prop_assert_eq!(mat.det(), cofactor_det(&rows));
            prop_assert_eq!(mat.transpose().det(), mat.det());
        }

        #[test]
        fn nullspace_is_kernel(a in small_rect()) {
            let mat = Matrix::from_rows(a.iter().map(|r| r.iter().map(|&x| rat(x, 3)).collect()).collect());
            let ker = mat.nullspace();
            prop_assert_eq!(ker.len() + mat.rank(), mat.cols());
            for v in &ker {
                prop_assert!(mat.mul_vec(v).iter().all(Zero::is_zero));
            }
        }
    }
}
