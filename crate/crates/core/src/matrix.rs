//! Dense matrices over the session cyclotomic field.
//!
//! Entry (i, j) is the coefficient of e_i in the image of e_j, so matrices
//! act on column vectors. Dimensions stay at desk scale (<= 9), so the
//! implementation favors clarity; products skip zero entries, which keeps
//! closure computations fast since generator words are banded.

use crate::error::{Error, Result};
use crate::scalar::{Cyclotomic, Rational};

#[derive(Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    conductor: usize,
    entries: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, conductor: usize) -> Self {
        Matrix {
            rows,
            cols,
            conductor,
            entries: vec![Cyclotomic::zero(conductor); rows * cols],
        }
    }

    pub fn identity(n: usize, conductor: usize) -> Self {
        let mut m = Self::zero(n, n, conductor);
        for i in 0..n {
            m.set(i, i, Cyclotomic::one(conductor));
        }
        m
    }

    pub fn diagonal(entries: Vec<Cyclotomic>, conductor: usize) -> Self {
        let n = entries.len();
        let mut m = Self::zero(n, n, conductor);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        conductor: usize,
        mut f: impl FnMut(usize, usize) -> Cyclotomic,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert_eq!(e.conductor(), conductor);
                entries.push(e);
            }
        }
        Matrix {
            rows,
            cols,
            conductor,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Cyclotomic) {
        assert_eq!(value.conductor(), self.conductor);
        self.entries[i * self.cols + j] = value;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    /// Some(c) iff the matrix equals c * identity exactly.
    pub fn scalar_multiple_of_identity(&self) -> Option<Cyclotomic> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let c = self.get(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let expected = i == j;
                if expected && self.get(i, j) != &c {
                    return None;
                }
                if !expected && !self.get(i, j).is_zero() {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        assert_eq!(self.conductor, rhs.conductor);
        let mut out = Matrix::zero(self.rows, rhs.cols, self.conductor);
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
                    let sum = &(a * b) + out.get(i, j);
                    out.set(i, j, sum);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            conductor: self.conductor,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            conductor: self.conductor,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            conductor: self.conductor,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            conductor: self.conductor,
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.conductor, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn pow(&self, exp: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows, self.conductor);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Cyclotomic::zero(self.conductor); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, acc) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *acc = &*acc + &(a * x);
                }
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<Cyclotomic> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Row-major flattening, used by the closure engine.
    pub fn flatten(&self) -> Vec<Cyclotomic> {
        self.entries.clone()
    }

    pub fn from_flat(n: usize, conductor: usize, entries: Vec<Cyclotomic>) -> Self {
        assert_eq!(entries.len(), n * n);
        Matrix {
            rows: n,
            cols: n,
            conductor,
            entries,
        }
    }

    /// First entry where the two matrices differ.
    pub fn first_difference(&self, rhs: &Matrix) -> Option<(usize, usize)> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) != rhs.get(i, j) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub(crate) fn check_square_same_dim(mats: &[&Matrix]) -> Result<usize> {
        let first = mats
            .first()
            .ok_or_else(|| Error::DimensionMismatch("no matrices given".into()))?;
        if !first.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "expected square matrices, got {}x{}",
                first.rows, first.cols
            )));
        }
        let n = first.rows;
        let conductor = first.conductor;
        for m in mats {
            if !m.is_square() || m.rows != n {
                return Err(Error::DimensionMismatch(format!(
                    "expected {n}x{n}, got {}x{}",
                    m.rows, m.cols
                )));
            }
            if m.conductor != conductor {
                return Err(Error::DimensionMismatch(format!(
                    "conductor {} does not match {}",
                    m.conductor, conductor
                )));
            }
        }
        Ok(n)
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "Matrix {}x{} (L={})",
            self.rows, self.cols, self.conductor
        )?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
