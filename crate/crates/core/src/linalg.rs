//! Dense linear algebra over GF(p): rectangular PLU factorization with
//! consistency-checking solves, and row-echelon form with pivot columns.
//!
//! Pivoting always takes the first nonzero entry scanning down the current
//! column, so every factorization, and everything computed from it, is
//! deterministic.

use std::fmt;

use crate::error::{Error, Result};
use crate::fp::{FieldContext, FpElement};

#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    data: Vec<FpElement>,
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FpMatrix {
            rows,
            cols,
            data: vec![FpElement::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = FpElement::ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> FpElement) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        FpMatrix { rows, cols, data }
    }

    /// Builds a matrix from integer rows, reducing every entry mod p.
    pub fn from_rows(field: &FieldContext, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self::from_fn(rows.len(), cols, |i, j| {
            field.normalize(rows[i][j])
        }))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[FpElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<FpElement> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> FpMatrix {
        FpMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn mul(&self, other: &FpMatrix, field: &FieldContext) -> Result<FpMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(FpMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(FpElement::ZERO, |acc, k| {
                field.add(acc, field.mul(self[(i, k)], other[(k, j)]))
            })
        }))
    }

    pub fn mul_vec(&self, v: &[FpElement], field: &FieldContext) -> Result<Vec<FpElement>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(FpElement::ZERO, |acc, (&a, &b)| {
                        field.add(acc, field.mul(a, b))
                    })
            })
            .collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row[target] -= factor * row[source]` for columns `from..`.
    fn eliminate(
        &mut self,
        target: usize,
        source: usize,
        factor: FpElement,
        from: usize,
        field: &FieldContext,
    ) {
        let c = self.cols;
        for j in from..c {
            let s = self.data[source * c + j];
            let t = &mut self.data[target * c + j];
            *t = field.sub_mul(*t, factor, s);
        }
    }
}

impl std::ops::Index<(usize, usize)> for FpMatrix {
    type Output = FpElement;

    fn index(&self, (i, j): (usize, usize)) -> &FpElement {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FpMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FpElement {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i)))
            .finish()
    }
}

/// `A = P * L * U` for an `m x r` matrix `A` of full column rank.
///
/// `perm[t]` is the row of `A` that ended up in row `t` of `L * U`, so
/// `A[perm[t]] = (L * U)[t]`. `L` is `m x m` unit lower triangular and `U` is
/// `m x r` with `u[k][l] = 0` whenever `k > l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluFactors {
    pub perm: Vec<usize>,
    pub l: FpMatrix,
    pub u: FpMatrix,
    field: FieldContext,
}

impl PluFactors {
    pub fn rows(&self) -> usize {
        self.l.rows()
    }

    /// Number of unknowns `r`.
    pub fn cols(&self) -> usize {
        self.u.cols()
    }

    /// `P * (L * U)`, i.e. the factored matrix.
    pub fn reconstruct(&self) -> FpMatrix {
        let lu = self
            .l
            .mul(&self.u, &self.field)
            .expect("factor shapes agree");
        let mut a = FpMatrix::zeros(lu.rows(), lu.cols());
        for (t, &src) in self.perm.iter().enumerate() {
            for j in 0..lu.cols() {
                a[(src, j)] = lu[(t, j)];
            }
        }
        a
    }

    /// Solves `A c = b`, returning `None` when `b` is outside the column space.
    /// The solution is unique when it exists.
    pub fn solve(&self, b: &[FpElement]) -> Result<Option<Vec<FpElement>>> {
        let (m, r) = (self.rows(), self.cols());
        if b.len() != m {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has length {}, expected {m}",
                b.len()
            )));
        }
        let f = &self.field;
        // L y = P^-1 b
        let mut y: Vec<FpElement> = self.perm.iter().map(|&src| b[src]).collect();
        for i in 0..m {
            let row = self.l.row(i);
            let mut acc = y[i];
            for k in 0..i.min(r) {
                acc = f.sub_mul(acc, row[k], y[k]);
            }
            y[i] = acc;
        }
        if y[r..].iter().any(|v| !v.is_zero()) {
            return Ok(None);
        }
        let mut c = vec![FpElement::ZERO; r];
        for i in (0..r).rev() {
            let row = self.u.row(i);
            let mut acc = y[i];
            for k in i + 1..r {
                acc = f.sub_mul(acc, row[k], c[k]);
            }
            let diag = row[i];
            if diag.is_zero() {
                return Err(Error::Internal(format!("zero pivot at U[{i}][{i}]")));
            }
            c[i] = f.div(acc, diag)?;
        }
        Ok(Some(c))
    }
}

/// Gaussian elimination with first-nonzero pivoting.
///
/// Fails with [`Error::RankDeficient`] if some column has no pivot, which
/// includes every matrix with more columns than rows.
pub fn plu_decompose(a: &FpMatrix, field: &FieldContext) -> Result<PluFactors> {
    let (m, r) = (a.rows(), a.cols());
    let mut u = a.clone();
    let mut l = FpMatrix::identity(m);
    let mut perm: Vec<usize> = (0..m).collect();
    for k in 0..r {
        let pivot = (k..m)
            .find(|&i| !u[(i, k)].is_zero())
            .ok_or(Error::RankDeficient { column: k })?;
        if pivot != k {
            u.swap_rows(pivot, k);
            perm.swap(pivot, k);
            for j in 0..k {
                let c = l.cols;
                l.data.swap(pivot * c + j, k * c + j);
            }
        }
        let inv = field.inv(u[(k, k)])?;
        for i in k + 1..m {
            if u[(i, k)].is_zero() {
                continue;
            }
            let factor = field.mul(u[(i, k)], inv);
            l[(i, k)] = factor;
            u.eliminate(i, k, factor, k, field);
        }
    }
    Ok(PluFactors {
        perm,
        l,
        u,
        field: *field,
    })
}

/// Row-echelon form of `a` and the (increasing, 0-based) pivot columns.
pub fn row_echelon_pivots(a: &FpMatrix, field: &FieldContext) -> (FpMatrix, Vec<usize>) {
    let mut u = a.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..u.cols() {
        if row == u.rows() {
            break;
        }
        let Some(p) = (row..u.rows()).find(|&i| !u[(i, col)].is_zero()) else {
            continue;
        };
        u.swap_rows(p, row);
        let inv = field.inv(u[(row, col)]).expect("pivot is nonzero");
        for i in row + 1..u.rows() {
            if !u[(i, col)].is_zero() {
                let factor = field.mul(u[(i, col)], inv);
                u.eliminate(i, row, factor, col, field);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (u, pivots)
}

pub fn rank(a: &FpMatrix, field: &FieldContext) -> usize {
    row_echelon_pivots(a, field).1.len()
}
