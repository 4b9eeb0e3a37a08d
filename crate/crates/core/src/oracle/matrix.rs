use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

/// Dense matrix over the rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows
            .iter()
            .flatten()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect();
        RationalMatrix { rows: r, cols: c, data }
    }

    /// Single nonzero entry `E_ij` in an `n x n` matrix.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.set(i, j, BigRational::one());
        m
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

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn set_int(&mut self, i: usize, j: usize, value: i64) {
        self.set(i, j, BigRational::from_integer(BigInt::from(value)));
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn trace(&self) -> BigRational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square());
        (0..k).fold(Self::identity(self.rows), |acc, _| &acc * self)
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Rank by Gaussian elimination on a private copy.
    ///
    /// Among the candidate pivots in a column, the entry with the smallest
    /// bit size (numerator plus denominator) is chosen, lowest row first.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<BigRational>> = self.data.chunks(self.cols.max(1)).map(<[_]>::to_vec).collect();
        if self.cols == 0 {
            return 0;
        }
        let mut rank = 0;
        for col in 0..self.cols {
            let pivot = (rank..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .min_by_key(|&r| entry_size(&rows[r][col]));
            let Some(pivot) = pivot else { continue };
            rows.swap(rank, pivot);
            let (head, tail) = rows.split_at_mut(rank + 1);
            let pivot_row = &head[rank];
            let inv = pivot_row[col].recip();
            let support: Vec<usize> = (col..self.cols).filter(|&c| !pivot_row[c].is_zero()).collect();
            for row in tail.iter_mut() {
                if row[col].is_zero() {
                    continue;
                }
                let factor = &row[col] * &inv;
                for &c in &support {
                    let delta = &factor * &pivot_row[c];
                    row[c] -= delta;
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    /// Dimension of the null space `{x : self·x = 0}`.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Gauss–Jordan inverse; `None` when singular or not square.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .filter(|&r| !a.get(r, col).is_zero())
                .min_by_key(|&r| entry_size(a.get(r, col)))?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = a.get(col, col).recip();
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                a.sub_scaled_row(r, col, &factor);
                inv.sub_scaled_row(r, col, &factor);
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &BigRational) {
        for j in 0..self.cols {
            let v = self.get(r, j) * factor;
            self.set(r, j, v);
        }
    }

    /// `row[target] -= factor * row[source]`.
    fn sub_scaled_row(&mut self, target: usize, source: usize, factor: &BigRational) {
        for j in 0..self.cols {
            let s = self.get(source, j);
            if s.is_zero() {
                continue;
            }
            let v = self.get(target, j) - factor * s;
            self.set(target, j, v);
        }
    }
}

fn entry_size(x: &BigRational) -> u64 {
    x.numer().abs().bits() + x.denom().bits()
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] += a * b;
                }
            }
        }
        out
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;

    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in sum");
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;

    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in difference");
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;

    fn neg(self) -> RationalMatrix {
        RationalMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

/// Fraction grid, columns right-aligned.
impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            writeln!(f, "[ {} ]", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(RationalMatrix::from_integers(&[vec![1, 2], vec![2, 4]]).rank(), 1);
        assert_eq!(RationalMatrix::from_integers(&[vec![0, 1], vec![1, 0]]).rank(), 2);
        assert_eq!(RationalMatrix::zeros(3, 4).rank(), 0);
        assert_eq!(RationalMatrix::zeros(0, 0).rank(), 0);
        let m = RationalMatrix::from_integers(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.nullity(), 1);
    }

    #[test]
    fn inverse_round_trip() {
        let m = RationalMatrix::from_integers(&[vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, RationalMatrix::identity(2));
        assert!(RationalMatrix::from_integers(&[vec![1, 2], vec![2, 4]]).inverse().is_none());
    }

    #[test]
    fn fractions_stay_exact() {
        let mut m = RationalMatrix::identity(2);
        m.set(0, 1, q(1, 3));
        let cube = m.pow(3);
        assert_eq!(cube.get(0, 1), &q(1, 1));
        assert_eq!(m.trace(), q(2, 1));
    }

    #[test]
    fn commutator_of_units() {
        let e12 = RationalMatrix::unit(2, 0, 1);
        let e21 = RationalMatrix::unit(2, 1, 0);
        let h = RationalMatrix::from_integers(&[vec![1, 0], vec![0, -1]]);
        assert_eq!(e12.commutator(&e21), h);
    }

    #[test]
    fn display_grid() {
        let mut m = RationalMatrix::zeros(1, 2);
        m.set(0, 1, q(-1, 2));
        assert_eq!(m.to_string(), "[    0 -1/2 ]\n");
    }
}
