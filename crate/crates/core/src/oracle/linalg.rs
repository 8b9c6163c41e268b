//! Dense exact linear algebra over `Q`: matrices, kernels and incremental
//! reduced row echelon forms. Zero entries are skipped in every inner loop,
//! which is what keeps the mostly-sparse oracle vectors cheap.

use std::fmt;

use num::{One, Zero};

use crate::linear::Q;

#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Q::one())
    }

    pub fn scalar(n: usize, x: &Q) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn diagonal(entries: &[Q]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
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

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![Q::zero(); self.rows];
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self[(i, k)];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        self.combine(other, &Q::one())
    }

    pub fn sub(&self, other: &QMatrix) -> QMatrix {
        self.combine(other, &-Q::one())
    }

    /// `self + factor * other`.
    pub fn combine(&self, other: &QMatrix, factor: &Q) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (o, x) in out.data.iter_mut().zip(&other.data) {
            if !x.is_zero() {
                *o += x * factor;
            }
        }
        out
    }

    pub fn scale(&self, factor: &Q) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    /// Basis of the null space `{x : self · x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let mut ech = Echelon::new(self.cols);
        for i in 0..self.rows {
            ech.insert((0..self.cols).map(|j| self[(i, j)].clone()).collect());
        }
        let pivots = ech.pivots();
        ech.non_pivots()
            .into_iter()
            .map(|free| {
                let mut x = vec![Q::zero(); self.cols];
                x[free] = Q::one();
                for (row, &p) in ech.rows.iter().zip(&pivots) {
                    if !row[free].is_zero() {
                        x[p] = -row[free].clone();
                    }
                }
                x
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.cols);
        for i in 0..self.rows {
            ech.insert((0..self.cols).map(|j| self[(i, j)].clone()).collect());
        }
        ech.rank()
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        // Gauss-Jordan on [A | I]
        let mut a = self.clone();
        let mut inv = QMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&i| !a[(i, col)].is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let scale = a[(col, col)].recip();
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] * &scale;
                inv[(col, j)] = &inv[(col, j)] * &scale;
            }
            for i in 0..n {
                if i == col || a[(i, col)].is_zero() {
                    continue;
                }
                let f = a[(i, col)].clone();
                for j in 0..n {
                    if !a[(col, j)].is_zero() {
                        let d = &f * &a[(col, j)];
                        a[(i, j)] -= d;
                    }
                    if !inv[(col, j)].is_zero() {
                        let d = &f * &inv[(col, j)];
                        inv[(i, j)] -= d;
                    }
                }
            }
        }
        Some(inv)
    }
}

/// A subspace of `Q^dim` kept in reduced row echelon form. Every stored row
/// has a leading 1 at its pivot and zeros at all other pivots.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<Vec<Q>>,
    pivot_of: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon {
            dim,
            rows: Vec::new(),
            pivot_of: vec![None; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot column of each stored row, in row order.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p = vec![0; self.rows.len()];
        for (col, row) in self.pivot_of.iter().enumerate() {
            if let Some(r) = row {
                p[*r] = col;
            }
        }
        p
    }

    /// Columns without a pivot, increasing. They index a basis of the quotient.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.dim).filter(|&c| self.pivot_of[c].is_none()).collect()
    }

    /// Normal form of `v` modulo the subspace: zero at every pivot column.
    pub fn reduce(&self, mut v: Vec<Q>) -> Vec<Q> {
        assert_eq!(v.len(), self.dim);
        for col in 0..self.dim {
            if v[col].is_zero() {
                continue;
            }
            if let Some(r) = self.pivot_of[col] {
                let f = v[col].clone();
                for (x, y) in v.iter_mut().zip(&self.rows[r]) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the span. Returns the reduced new row when the rank grew.
    pub fn insert(&mut self, v: Vec<Q>) -> Option<Vec<Q>> {
        let mut v = self.reduce(v);
        let pivot = v.iter().position(|x| !x.is_zero())?;
        let inv = v[pivot].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in &mut self.rows {
            if row[pivot].is_zero() {
                continue;
            }
            let f = row[pivot].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.pivot_of[pivot] = Some(self.rows.len());
        self.rows.push(v.clone());
        Some(v)
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.rows
    }
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_zero())
}
