use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::scalar::{Field, Scalar};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// A dense matrix over an exact field, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixExact {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

/// Output of [`MatrixExact::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: MatrixExact,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl MatrixExact {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        MatrixExact { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(alloc::format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|s| s.field() != field) {
                return Err(Error::Shape(alloc::format!(
                    "entry over {} in a matrix over {field}",
                    bad.field()
                )));
            }
            data.extend(row);
        }
        Ok(MatrixExact { rows: n, cols, field, data })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data: Vec<Vec<Scalar>> =
            rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Self::from_rows(field, cols, data).expect("ragged integer matrix")
    }

    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::Shape(alloc::format!("column {j} has length {}", c.len())));
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn row_vector(field: Field, entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        Self::from_rows(field, n, vec![entries]).expect("single row")
    }

    pub fn column_vector(field: Field, entries: Vec<Scalar>) -> Self {
        Self::row_vector(field, entries).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &MatrixExact) -> Result<MatrixExact> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(alloc::format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.field, self.rows, rhs.cols);
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
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::Shape(alloc::format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v, self.field)).collect())
    }

    pub fn sub(&self, rhs: &MatrixExact) -> Result<MatrixExact> {
        self.same_shape(rhs)?;
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Ok(MatrixExact { data, ..*self })
    }

    pub fn add(&self, rhs: &MatrixExact) -> Result<MatrixExact> {
        self.same_shape(rhs)?;
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Ok(MatrixExact { data, ..*self })
    }

    pub fn scale(&self, s: &Scalar) -> MatrixExact {
        let data = self.data.iter().map(|a| a * s).collect();
        MatrixExact { data, ..*self }
    }

    fn same_shape(&self, rhs: &MatrixExact) -> Result<()> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape(alloc::format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    /// Stacks `self` above `below`.
    pub fn vstack(&self, below: &MatrixExact) -> Result<MatrixExact> {
        if self.cols != below.cols {
            return Err(Error::Shape(alloc::format!(
                "vstack of {} and {} columns",
                self.cols, below.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Ok(MatrixExact { rows: self.rows + below.rows, cols: self.cols, field: self.field, data })
    }

    /// Kronecker product; composite row index `(i, k) ↦ i·rows(b) + k`,
    /// composite column index `(j, l) ↦ j·cols(b) + l`.
    pub fn kron(&self, b: &MatrixExact) -> MatrixExact {
        let rows = self.rows * b.rows;
        let cols = self.cols * b.cols;
        let mut out = Self::zeros(self.field, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        let x = b.get(k, l);
                        if !x.is_zero() {
                            out.set(i * b.rows + k, j * b.cols + l, a * x);
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row-echelon form by Gauss–Jordan elimination.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        Rref { reduced: m, pivots, rank }
    }

    pub(crate) fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.get(r, c).inv().expect("nonzero pivot");
            for j in c..cols {
                let idx = r * cols + j;
                if !self.data[idx].is_zero() {
                    self.data[idx] = &self.data[idx] * &inv;
                }
            }
            let support: Vec<usize> = (c..cols).filter(|&j| !self.get(r, j).is_zero()).collect();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for &j in &support {
                    let delta = &f * self.get(r, j);
                    let idx = i * cols + j;
                    self.data[idx] = &self.data[idx] - &delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Null space `{ v : M v = 0 }` as a subspace of the column space.
    pub fn kernel(&self) -> Subspace {
        let Rref { reduced, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -reduced.get(row, free);
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.field, self.cols, basis).expect("kernel vectors have ambient length")
    }

    /// A matrix `X` with `self · X = I`; requires full row rank.
    pub fn right_inverse(&self) -> Result<MatrixExact> {
        let Rref { pivots, rank, .. } = self.rref();
        if rank != self.rows {
            return Err(Error::RankDeficient(alloc::format!(
                "right inverse needs row rank {}, found {rank}",
                self.rows
            )));
        }
        let mut square = Self::zeros(self.field, self.rows, self.rows);
        for i in 0..self.rows {
            for (k, &p) in pivots.iter().enumerate() {
                square.set(i, k, self.get(i, p).clone());
            }
        }
        let inv = square.inverse()?;
        let mut out = Self::zeros(self.field, self.cols, self.rows);
        for (k, &p) in pivots.iter().enumerate() {
            for j in 0..self.rows {
                out.set(p, j, inv.get(k, j).clone());
            }
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Result<MatrixExact> {
        if self.rows != self.cols {
            return Err(Error::Shape(alloc::format!(
                "inverse of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return Err(Error::RankDeficient("singular matrix".into()));
        }
        let mut out = Self::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Reinterprets the entries with a new shape (row-major order kept).
    pub fn reshape(&self, rows: usize, cols: usize) -> Result<MatrixExact> {
        if rows * cols != self.data.len() {
            return Err(Error::Shape(alloc::format!(
                "cannot reshape {} entries to {rows}x{cols}",
                self.data.len()
            )));
        }
        Ok(MatrixExact { rows, cols, field: self.field, data: self.data.clone() })
    }
}

pub(crate) fn dot(a: &[Scalar], b: &[Scalar], field: Field) -> Scalar {
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

impl fmt::Display for MatrixExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Kronecker product of several factors, left to right.
pub fn kron_all<'a, I>(field: Field, factors: I) -> MatrixExact
where
    I: IntoIterator<Item = &'a MatrixExact>,
{
    factors.into_iter().fold(MatrixExact::identity(field, 1), |acc, m| acc.kron(m))
}
