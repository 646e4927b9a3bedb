//! Dense matrices and fraction-free elimination over exact scalars.

use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }
}

impl<T> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self[(r, c)].clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }
}

impl<T: Clone + Zero + PartialEq> Matrix<T> {
    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + Add<Output = T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix dimensions do not agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        let slot = &mut out.data[i * other.cols + j];
                        *slot = std::mem::replace(slot, T::zero()) + prod;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|a| a * s)
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

/// Scales each row by the lcm of its denominators. Returns the integer
/// matrix and the per-row multipliers.
fn clear_denominators(m: &Matrix<Rational>) -> (Matrix<BigInt>, Vec<BigInt>) {
    let mut scales = Vec::with_capacity(m.rows);
    let mut data = Vec::with_capacity(m.data.len());
    for r in 0..m.rows {
        let lcm = m.row(r).iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        for q in m.row(r) {
            data.push(q.numer() * (&lcm / q.denom()));
        }
        scales.push(lcm);
    }
    (Matrix { rows: m.rows, cols: m.cols, data }, scales)
}

/// Fraction-free (Bareiss) elimination to row echelon form. Returns the rank
/// and the number of row swaps performed. Pivots are taken in row order.
fn bareiss_echelon(a: &mut Matrix<BigInt>) -> (usize, usize) {
    let (rows, cols) = (a.rows, a.cols);
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut swaps = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[(r, c)].is_zero()) else {
            continue;
        };
        if p != rank {
            swap_rows(a, p, rank);
            swaps += 1;
        }
        let pivot = a[(rank, c)].clone();
        for i in rank + 1..rows {
            let lead = a[(i, c)].clone();
            for j in c + 1..cols {
                let v = (&pivot * &a[(i, j)] - &lead * &a[(rank, j)]) / &prev;
                a[(i, j)] = v;
            }
            a[(i, c)] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    (rank, swaps)
}

fn swap_rows<T>(a: &mut Matrix<T>, i: usize, j: usize) {
    if i == j {
        return;
    }
    let cols = a.cols;
    let (lo, hi) = (i.min(j), i.max(j));
    let (head, tail) = a.data.split_at_mut(hi * cols);
    head[lo * cols..(lo + 1) * cols].swap_with_slice(&mut tail[..cols]);
}

pub fn rank(m: &Matrix<Rational>) -> usize {
    let (mut a, _) = clear_denominators(m);
    bareiss_echelon(&mut a).0
}

pub fn determinant(m: &Matrix<Rational>) -> Rational {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return Rational::one();
    }
    let (mut a, scales) = clear_denominators(m);
    let (rank, swaps) = bareiss_echelon(&mut a);
    if rank < n {
        return Rational::zero();
    }
    let mut det = a[(n - 1, n - 1)].clone();
    if swaps % 2 == 1 {
        det = -det;
    }
    let denom = scales.iter().fold(BigInt::one(), |acc, s| acc * s);
    Rational::new(det, denom)
}

/// Inverse by fraction-free Gauss-Jordan elimination on `[M | D]`, where
/// `M = D F` is the row-scaled integer form of `F`. Returns `None` when `F`
/// is singular.
pub fn inverse(f: &Matrix<Rational>) -> Option<Matrix<Rational>> {
    assert!(f.is_square(), "inverse of a non-square matrix");
    let n = f.rows;
    let (m, scales) = clear_denominators(f);
    let width = 2 * n;
    let mut a = Matrix::<BigInt>::zeros(n, width);
    for r in 0..n {
        for c in 0..n {
            a[(r, c)] = m[(r, c)].clone();
        }
        a[(r, n + r)] = scales[r].clone();
    }
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&r| !a[(r, k)].is_zero())?;
        swap_rows(&mut a, p, k);
        let pivot = a[(k, k)].clone();
        for i in 0..n {
            if i == k {
                continue;
            }
            let lead = a[(i, k)].clone();
            for j in 0..width {
                if j == k {
                    continue;
                }
                let v = (&pivot * &a[(i, j)] - &lead * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
            a[(i, k)] = BigInt::zero();
        }
        prev = pivot;
    }
    // Every diagonal entry now equals the last pivot.
    let d = prev;
    let mut out = Matrix::<Rational>::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            out[(r, c)] = Rational::new(a[(r, n + c)].clone(), d.clone());
        }
    }
    Some(out)
}
