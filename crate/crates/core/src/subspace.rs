//! Subspaces of GF(p)^n in canonical reduced row echelon form.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::{rref_in_place, Mat};

/// A subspace stored as its RREF basis. Equal subspaces have identical values,
/// so `==` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    field: FieldSpec,
    ambient_dim: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        SubspaceBasis { field, ambient_dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        let rows = (0..ambient_dim).map(|i| unit(ambient_dim, i)).collect();
        SubspaceBasis { field, ambient_dim, rows, pivots: (0..ambient_dim).collect() }
    }

    /// Span of arbitrary vectors (dependent or zero vectors allowed).
    pub fn from_vectors(field: FieldSpec, ambient_dim: usize, vectors: &[Vec<u32>]) -> Result<Self> {
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::Dimension { expected: ambient_dim, found: v.len() });
            }
            if let Some(&bad) = v.iter().find(|&&x| x >= field.modulus()) {
                return Err(Error::EntryOutOfRange { value: bad as u64, modulus: field.modulus() });
            }
        }
        Ok(Self::from_vectors_unchecked(field, ambient_dim, vectors.to_vec()))
    }

    pub(crate) fn from_vectors_unchecked(field: FieldSpec, ambient_dim: usize, vectors: Vec<Vec<u32>>) -> Self {
        let n = vectors.len();
        let mut data: Vec<u32> = vectors.into_iter().flatten().collect();
        let pivots = rref_in_place(field, &mut data, n, ambient_dim);
        let rows = data.chunks(ambient_dim.max(1)).take(pivots.len()).map(|c| c[..ambient_dim].to_vec()).collect();
        SubspaceBasis { field, ambient_dim, rows, pivots }
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient_dim
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the rows of a `dim × ambient_dim` matrix.
    pub fn to_mat(&self) -> Mat {
        let data = self.rows.iter().flatten().copied().collect();
        Mat::from_flat(self.field, self.dim(), self.ambient_dim, data).expect("canonical rows are well formed")
    }

    /// Basis vectors as columns: the inclusion map `GF(p)^dim → GF(p)^ambient`.
    pub fn inclusion(&self) -> Mat {
        Mat::from_columns(self.field, self.ambient_dim, &self.rows)
    }

    /// `v` minus its component along the pivot columns; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient_dim);
        let f = self.field;
        let mut out = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let k = out[pc];
            if k == 0 {
                continue;
            }
            let neg = f.neg(k);
            for (o, &x) in out.iter_mut().zip(row) {
                *o = f.mul_add(*o, x, neg);
            }
        }
        out
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` against the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        if self.contains(v) {
            Some(self.pivots.iter().map(|&pc| v[pc]).collect())
        } else {
            None
        }
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        other.dim() <= self.dim() && other.rows.iter().all(|r| self.contains(r))
    }

    fn check_compatible(&self, other: &SubspaceBasis) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::Dimension { expected: self.ambient_dim, found: other.ambient_dim });
        }
        Ok(())
    }

    /// Span of the union.
    pub fn sum(&self, other: &SubspaceBasis) -> Result<SubspaceBasis> {
        self.check_compatible(other)?;
        let vecs = self.rows.iter().chain(&other.rows).cloned().collect();
        Ok(Self::from_vectors_unchecked(self.field, self.ambient_dim, vecs))
    }

    /// Intersection, from the kernel of the stacked coefficient system
    /// `Σ x_i a_i − Σ y_j b_j = 0`.
    pub fn intersect(&self, other: &SubspaceBasis) -> Result<SubspaceBasis> {
        self.check_compatible(other)?;
        let f = self.field;
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Ok(Self::zero(f, self.ambient_dim));
        }
        let mut system = Mat::zeros(f, self.ambient_dim, a + b);
        for (j, row) in self.rows.iter().enumerate() {
            for (i, &x) in row.iter().enumerate() {
                system.set(i, j, x);
            }
        }
        for (j, row) in other.rows.iter().enumerate() {
            for (i, &x) in row.iter().enumerate() {
                system.set(i, a + j, f.neg(x));
            }
        }
        let kernel = system.kernel_basis();
        let vecs = kernel
            .rows()
            .iter()
            .map(|coeffs| {
                let mut v = vec![0; self.ambient_dim];
                for (row, &c) in self.rows.iter().zip(&coeffs[..a]) {
                    if c != 0 {
                        for (o, &x) in v.iter_mut().zip(row) {
                            *o = f.mul_add(*o, x, c);
                        }
                    }
                }
                v
            })
            .collect();
        Ok(Self::from_vectors_unchecked(f, self.ambient_dim, vecs))
    }

    /// Image under a linear map `m` (with `m.cols() == ambient_dim`).
    pub fn image(&self, m: &Mat) -> SubspaceBasis {
        let vecs = self.rows.iter().map(|r| m.mul_vec(r)).collect();
        Self::from_vectors_unchecked(self.field, m.rows(), vecs)
    }

    /// Lexicographic order on the canonical row lists; the deterministic tie-break
    /// between subspaces of equal dimension.
    pub fn lex_cmp(&self, other: &SubspaceBasis) -> Ordering {
        self.rows.cmp(&other.rows)
    }

    /// Every element of the subspace, in coefficient order. Only sensible for tiny spaces.
    pub fn elements(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let count = f.space_size(self.dim()).expect("subspace too large to enumerate");
        (0..count)
            .map(|idx| {
                let coeffs = f.vector_from_index(idx, self.dim());
                let mut v = vec![0; self.ambient_dim];
                for (row, &c) in self.rows.iter().zip(&coeffs) {
                    for (o, &x) in v.iter_mut().zip(row) {
                        *o = f.mul_add(*o, x, c);
                    }
                }
                v
            })
            .collect()
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}
