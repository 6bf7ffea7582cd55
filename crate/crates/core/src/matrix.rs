//! Dense matrices over GF(p).
//!
//! Matrices act on the left of column vectors: `u = A v`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::subspace::SubspaceBasis;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Mat {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Mat { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from row vectors. Entries must already lie in `[0, p)`.
    ///
    /// An empty row list yields a `0 × cols` matrix only through [`Mat::from_flat`];
    /// here it gives `0 × 0`.
    pub fn from_rows(field: FieldSpec, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            data.extend_from_slice(r);
        }
        Mat::from_flat(field, rows.len(), cols, data)
    }

    pub fn from_flat(field: FieldSpec, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if let Some(&bad) = data.iter().find(|&&x| x >= field.modulus()) {
            return Err(Error::EntryOutOfRange { value: bad as u64, modulus: field.modulus() });
        }
        Ok(Mat { field, rows, cols, data })
    }

    /// Places the given blocks along the diagonal.
    pub fn block_diag(field: FieldSpec, blocks: &[&Mat]) -> Mat {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Mat::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            assert_eq!(b.field, field);
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m.set(r0 + r, c0 + c, b.get(r, c));
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<u32>]) -> Mat {
        let mut m = Mat::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, &x) in col.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: u32) {
        debug_assert!(x < self.field.modulus());
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Matrix product. Panics on shape or field mismatch.
    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.field, rhs.field, "field mismatch in product");
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let f = self.field;
        let p = f.modulus() as u64;
        let mut out = Mat::zeros(f, self.rows, rhs.cols);
        let mut acc = vec![0u64; rhs.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                for (c, slot) in acc.iter_mut().enumerate() {
                    *slot = (*slot + a * rhs.get(k, c) as u64) % p;
                }
            }
            for (c, &v) in acc.iter().enumerate() {
                out.data[r * rhs.cols + c] = v as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        let p = self.field.modulus() as u64;
        (0..self.rows)
            .map(|r| {
                let s = self.row(r).iter().zip(v).fold(0u64, |s, (&a, &b)| (s + a as u64 * b as u64) % p);
                s as u32
            })
            .collect()
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.add(a, b)).collect();
        Mat { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Mat { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, k: u32) -> Mat {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, k)).collect();
        Mat { field: f, rows: self.rows, cols: self.cols, data }
    }

    /// `Σ coeffs[i] · mats[i]`. All matrices must share a shape.
    pub fn linear_combination(field: FieldSpec, rows: usize, cols: usize, mats: &[Mat], coeffs: &[u32]) -> Mat {
        assert_eq!(mats.len(), coeffs.len());
        let mut out = Mat::zeros(field, rows, cols);
        for (m, &k) in mats.iter().zip(coeffs) {
            if k == 0 {
                continue;
            }
            for (o, &x) in out.data.iter_mut().zip(&m.data) {
                *o = field.mul_add(*o, x, k);
            }
        }
        out
    }

    /// Reduced row echelon form and the strictly increasing list of pivot columns.
    ///
    /// Zero rows are kept at the bottom so the shape is unchanged.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let pivots = rref_in_place(self.field, &mut m.data, self.rows, self.cols);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Right null space `{v : self · v = 0}` in canonical form.
    pub fn kernel_basis(&self) -> SubspaceBasis {
        let f = self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut vecs = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, free));
            }
            vecs.push(v);
        }
        SubspaceBasis::from_vectors_unchecked(f, self.cols, vecs)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let pivots = rref_in_place(self.field, &mut aug.data, n, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Mat::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c));
            }
        }
        Some(inv)
    }

    /// Some solution `x` of `self · x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows);
        let (n, m) = (self.rows, self.cols);
        let mut aug = Mat::zeros(self.field, n, m + 1);
        for (r, &br) in b.iter().enumerate() {
            for c in 0..m {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, m, br);
        }
        let pivots = rref_in_place(self.field, &mut aug.data, n, m + 1);
        if pivots.last() == Some(&m) {
            return None;
        }
        let mut x = vec![0; m];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(i, m);
        }
        Some(x)
    }
}

/// Gauss-Jordan elimination on a row-major buffer; returns pivot columns.
pub(crate) fn rref_in_place(f: FieldSpec, data: &mut [u32], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut lead = 0;
    for col in 0..cols {
        if lead == rows {
            break;
        }
        let Some(src) = (lead..rows).find(|&r| data[r * cols + col] != 0) else {
            continue;
        };
        if src != lead {
            for c in 0..cols {
                data.swap(src * cols + c, lead * cols + c);
            }
        }
        let inv = f.inv(data[lead * cols + col]);
        if inv != 1 {
            for c in col..cols {
                data[lead * cols + c] = f.mul(data[lead * cols + c], inv);
            }
        }
        for r in 0..rows {
            if r == lead {
                continue;
            }
            let factor = data[r * cols + col];
            if factor == 0 {
                continue;
            }
            let k = f.neg(factor);
            for c in col..cols {
                let x = data[lead * cols + c];
                if x != 0 {
                    data[r * cols + c] = f.mul_add(data[r * cols + c], x, k);
                }
            }
        }
        pivots.push(col);
        lead += 1;
    }
    pivots
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat(GF({}), {}x{}, {:?})", self.field.modulus(), self.rows, self.cols, self.row_vecs())
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(u32::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
