//! Dense exact linear algebra over ℚ.
//!
//! Small hand-rolled Gaussian elimination: the matrices in this crate are
//! m²×m² at most (16×16 for quaternions) plus the moderate systems the
//! test-side membership search builds, so a simple fraction-based
//! elimination is plenty.

use crate::rational::Rational;
use num_traits::{One, Zero};

/// Dense matrix of rationals, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut m = QMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                *m.at_mut(i, j) = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// In-place reduced row echelon form; returns the pivot column of each
    /// pivot row, in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.at(row, col).recip();
            for j in col..self.cols {
                let v = self.at(row, j).clone() * &inv;
                *self.at_mut(row, j) = v;
            }
            for r in 0..self.rows {
                if r != row && !self.at(r, col).is_zero() {
                    let f = self.at(r, col).clone();
                    for j in col..self.cols {
                        let v = self.at(r, j).clone() - f.clone() * self.at(row, j);
                        *self.at_mut(r, j) = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Determinant of a square matrix.
    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                m.swap_rows(col, p);
                det = -det;
            }
            det *= m.at(col, col);
            let inv = m.at(col, col).recip();
            for r in col + 1..n {
                if !m.at(r, col).is_zero() {
                    let f = m.at(r, col).clone() * &inv;
                    for j in col..n {
                        let v = m.at(r, j).clone() - f.clone() * m.at(col, j);
                        *m.at_mut(r, j) = v;
                    }
                }
            }
        }
        det
    }

    /// Solve `self · x = rhs` for several right-hand sides at once.
    ///
    /// Returns one solution per column of `rhs` (free variables set to 0),
    /// or `None` if any system is inconsistent.
    pub fn solve_multi(&self, rhs: &QMatrix) -> Option<Vec<Vec<Rational>>> {
        assert_eq!(self.rows, rhs.rows, "rhs row count mismatch");
        let n = self.cols;
        let k = rhs.cols;
        let mut aug = QMatrix::from_fn(self.rows, n + k, |i, j| {
            if j < n { self.at(i, j).clone() } else { rhs.at(i, j - n).clone() }
        });
        let pivots = aug.rref();
        // Inconsistent if a pivot lands in the rhs block.
        let coeff_pivots: Vec<usize> = pivots.iter().copied().filter(|&c| c < n).collect();
        if coeff_pivots.len() != pivots.len() {
            return None;
        }
        let mut out = Vec::with_capacity(k);
        for col in 0..k {
            let mut x = vec![Rational::zero(); n];
            for (row, &pc) in coeff_pivots.iter().enumerate() {
                x[pc] = aug.at(row, n + col).clone();
            }
            out.push(x);
        }
        Some(out)
    }

    /// Solve `self · x = rhs` for a single right-hand side.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        let r = QMatrix::from_fn(self.rows, 1, |i, _| rhs[i].clone());
        self.solve_multi(&r).map(|mut v| v.pop().unwrap())
    }

    /// Basis of the kernel {x : self·x = 0}.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.at(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}
