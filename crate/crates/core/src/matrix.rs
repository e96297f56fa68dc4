//! Dense matrices over a finite field.

use std::fmt;

use crate::gf::{FieldRef, Fq};
use crate::poly::{same_field, Poly};

#[derive(Clone)]
pub struct Matrix {
    field: FieldRef,
    rows: usize,
    cols: usize,
    data: Vec<Fq>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        same_field(&self.field, &other.field) && self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| {
                let row: Vec<String> = (0..self.cols).map(|c| self.field.format_short(self.get(r, c))).collect();
                format!("[{}]", row.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl Matrix {
    pub fn zero(field: &FieldRef, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &FieldRef, n: usize) -> Self {
        Self::scalar(field, n, field.one())
    }

    pub fn scalar(field: &FieldRef, n: usize, c: Fq) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, c);
        }
        m
    }

    pub fn from_rows(field: &FieldRef, rows: Vec<Vec<Fq>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { field: field.clone(), rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Companion matrix of a monic `q`: `e_i ↦ e_{i+1}`, `e_{d−1} ↦ −Σ q_j e_j`.
    pub fn companion(q: &Poly) -> Self {
        let k = q.field();
        let d = q.deg();
        let mut m = Self::zero(k, d, d);
        for i in 0..d.saturating_sub(1) {
            m.set(i + 1, i, k.one());
        }
        for j in 0..d {
            m.set(j, d - 1, k.neg(q.coeff(j)));
        }
        m
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Fq {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Fq) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Fq] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Fq>> {
        self.data.chunks(self.cols.max(1)).map(|r| r.to_vec()).take(self.rows).collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        let k = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| k.add(a, b)).collect();
        Matrix { data, ..self.clone() }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        let k = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| k.sub(a, b)).collect();
        Matrix { data, ..self.clone() }
    }

    pub fn scale(&self, c: Fq) -> Matrix {
        let k = &self.field;
        Matrix { data: self.data.iter().map(|&a| k.mul(a, c)).collect(), ..self.clone() }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let k = &self.field;
        let mut out = Matrix::zero(k, self.rows, other.cols);
        for r in 0..self.rows {
            for i in 0..self.cols {
                let a = self.get(r, i);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = k.add(out.get(r, c), k.mul(a, other.get(i, c)));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Fq]) -> Vec<Fq> {
        let k = &self.field;
        (0..self.rows)
            .map(|r| (0..self.cols).fold(k.zero(), |acc, c| k.add(acc, k.mul(self.get(r, c), v[c]))))
            .collect()
    }

    pub fn pow(&self, e: u64) -> Matrix {
        (0..e).fold(Matrix::identity(&self.field, self.rows), |acc, _| acc.mul(self))
    }

    /// `g(self)` by Horner's rule.
    pub fn eval_poly(&self, g: &Poly) -> Matrix {
        let k = &self.field;
        g.coeffs().iter().rev().fold(Matrix::zero(k, self.rows, self.cols), |acc, &c| {
            acc.mul(self).add(&Matrix::scalar(k, self.rows, c))
        })
    }

    pub fn is_scalar(&self, c: Fq) -> bool {
        *self == Matrix::scalar(&self.field, self.rows, c)
    }
}

/// Echelon basis of the span of `vectors`, kept incrementally.
#[derive(Clone)]
pub struct SpanBuilder {
    field: FieldRef,
    rows: Vec<(usize, Vec<Fq>)>,
}

impl SpanBuilder {
    pub fn new(field: &FieldRef) -> Self {
        SpanBuilder { field: field.clone(), rows: Vec::new() }
    }

    /// Adds a vector; returns whether the span grew.
    pub fn insert(&mut self, v: &[Fq]) -> bool {
        let k = &self.field;
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if !c.is_zero() {
                for (a, &b) in v.iter_mut().zip(row) {
                    *a = k.sub(*a, k.mul(c, b));
                }
            }
        }
        let Some(pivot) = v.iter().position(|a| !a.is_zero()) else { return false };
        let inv = k.inv(v[pivot]);
        for a in v.iter_mut() {
            *a = k.mul(*a, inv);
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[pivot];
            if !c.is_zero() {
                for (a, &b) in row.iter_mut().zip(&v) {
                    *a = k.sub(*a, k.mul(c, b));
                }
            }
        }
        self.rows.push((pivot, v));
        true
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Rank of a list of vectors.
pub fn rank(field: &FieldRef, vectors: &[Vec<Fq>]) -> usize {
    let mut span = SpanBuilder::new(field);
    for v in vectors {
        span.insert(v);
    }
    span.dim()
}

/// Basis of the null space of `A` (given as rows) acting on column vectors.
pub fn null_space(field: &FieldRef, rows: &[Vec<Fq>], cols: usize) -> Vec<Vec<Fq>> {
    let k = field;
    let mut mat: Vec<Vec<Fq>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(sel) = (r..mat.len()).find(|&i| !mat[i][c].is_zero()) else { continue };
        mat.swap(r, sel);
        let inv = k.inv(mat[r][c]);
        for a in mat[r].iter_mut() {
            *a = k.mul(*a, inv);
        }
        for i in 0..mat.len() {
            if i != r && !mat[i][c].is_zero() {
                let factor = mat[i][c];
                let pivot_row = mat[r].clone();
                for (a, b) in mat[i].iter_mut().zip(pivot_row) {
                    *a = k.sub(*a, k.mul(factor, b));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == mat.len() {
            break;
        }
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![k.zero(); cols];
            v[free] = k.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = k.neg(mat[row][free]);
            }
            v
        })
        .collect()
}
