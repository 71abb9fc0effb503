//! Dense matrices over F_{p^r}: row reduction, rank, null spaces.
//!
//! Codes store their generator matrices in reduced row echelon form, which
//! doubles as the canonical representative for code equality.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};

#[derive(Clone, Debug)]
pub struct Mat {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl PartialEq for Mat {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}
impl Eq for Mat {}

impl Mat {
    pub fn zero(field: Arc<Field>, rows: usize, cols: usize) -> Mat {
        Mat {
            field,
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn from_rows(field: Arc<Field>, rows: Vec<Vec<Fe>>, cols: usize) -> Result<Mat> {
        for r in &rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
        }
        let nrows = rows.len();
        let data = rows.into_iter().flatten().collect();
        Ok(Mat {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row_vecs(&self) -> Vec<Vec<Fe>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, c: Fe) {
        let f = self.field.clone();
        for j in 0..self.cols {
            let v = self.get(i, j);
            self.set(i, j, f.mul(v, c));
        }
    }

    /// row_i -= c * row_src
    fn axpy_row(&mut self, i: usize, src: usize, c: Fe) {
        if c.is_zero() {
            return;
        }
        let f = self.field.clone();
        for j in 0..self.cols {
            let v = self.get(i, j);
            let s = self.get(src, j);
            self.set(i, j, f.sub(v, f.mul(c, s)));
        }
    }

    /// In-place Gauss-Jordan with the natural column order; returns pivot
    /// columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let order: Vec<usize> = (0..self.cols).collect();
        self.rref_with_column_order(&order)
    }

    /// Gauss-Jordan visiting columns in the given priority order; the pivot
    /// columns are reported in visit order.
    pub fn rref_with_column_order(&mut self, order: &[usize]) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for &c in order {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            self.scale_row(r, inv);
            for i in 0..self.rows {
                if i != r {
                    let ci = self.get(i, c);
                    self.axpy_row(i, r, ci);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Drop all-zero rows (valid after rref).
    pub fn drop_zero_rows(&mut self) {
        let cols = self.cols;
        let keep: Vec<usize> = (0..self.rows)
            .filter(|&i| self.row(i).iter().any(|c| !c.is_zero()))
            .collect();
        let mut data = Vec::with_capacity(keep.len() * cols);
        for &i in &keep {
            data.extend_from_slice(self.row(i));
        }
        self.rows = keep.len();
        self.data = data;
    }

    /// Reduce `v` against the rows of an RREF matrix with the given pivots;
    /// returns true when it lands on zero (membership in the row space).
    pub fn reduces_to_zero(&self, pivots: &[usize], v: &[Fe]) -> bool {
        let f = &self.field;
        let mut v = v.to_vec();
        for (r, &pc) in pivots.iter().enumerate() {
            let c = v[pc];
            if c.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let s = self.get(r, j);
                v[j] = f.sub(v[j], f.mul(c, s));
            }
        }
        v.iter().all(|c| c.is_zero())
    }

    /// Basis of the right null space {v : M v^T = 0}, as RREF rows.
    pub fn null_space(&self, pivots: &[usize]) -> Mat {
        let f = self.field.clone();
        let n = self.cols;
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; n];
            for &p in pivots {
                s[p] = true;
            }
            s
        };
        let free: Vec<usize> = (0..n).filter(|&j| !pivot_set[j]).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut w = vec![Fe::ZERO; n];
            w[fc] = Fe::ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                w[pc] = f.neg(self.get(r, fc));
            }
            rows.push(w);
        }
        let mut m = Mat::from_rows(f, rows, n).expect("consistent row lengths");
        m.rref();
        m.drop_zero_rows();
        m
    }

    /// M * M^T.
    pub fn gram(&self) -> Mat {
        let f = self.field.clone();
        let mut g = Mat::zero(f.clone(), self.rows, self.rows);
        for i in 0..self.rows {
            for j in i..self.rows {
                let mut acc = Fe::ZERO;
                for t in 0..self.cols {
                    acc = f.add(acc, f.mul(self.get(i, t), self.get(j, t)));
                }
                g.set(i, j, acc);
                g.set(j, i, acc);
            }
        }
        g
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }
}
