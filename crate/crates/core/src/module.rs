//! Left modules given by generator matrices, and their submodules.
//!
//! A module is GF(p)^d together with k generator matrices. The acting algebra is
//! whatever those matrices generate inside the endomorphism algebra; it is never
//! materialized, and no generator is assumed to act as the identity.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::Mat;
use crate::subspace::SubspaceBasis;

#[derive(PartialEq, Eq, Hash)]
struct ModuleData {
    field: FieldSpec,
    dim: usize,
    gens: Vec<Mat>,
}

/// A left module over the algebra generated by `gens`. Cheap to clone.
#[derive(Clone)]
pub struct ModuleRep {
    inner: Arc<ModuleData>,
}

impl PartialEq for ModuleRep {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for ModuleRep {}

impl std::hash::Hash for ModuleRep {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.hash(state)
    }
}

impl fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModuleRep")
            .field("p", &self.inner.field.modulus())
            .field("dim", &self.inner.dim)
            .field("gens", &self.inner.gens)
            .finish()
    }
}

/// Outcome of [`validate_module`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleReport {
    pub modulus: u32,
    pub dim: usize,
    pub generators: usize,
    /// Always true once validation succeeds: square matrices over one field act
    /// bilinearly and associatively, which is all the module axioms ask for.
    pub axioms_hold_by_construction: bool,
}

/// Structural checks on raw module data: prime modulus, square generators of the
/// right size, entries in `[0, p)`.
pub fn validate_module(p: u64, dim: usize, gens: &[Vec<Vec<u64>>]) -> Result<ModuleReport> {
    let field = FieldSpec::new(p)?;
    for (g, m) in gens.iter().enumerate() {
        if m.len() != dim {
            return Err(Error::Shape(format!("generator {g} has {} rows, expected {dim}", m.len())));
        }
        for row in m {
            if row.len() != dim {
                return Err(Error::Shape(format!(
                    "generator {g} is not square: row of length {} in a {dim}-dimensional module",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= field.modulus() as u64) {
                return Err(Error::EntryOutOfRange { value: bad, modulus: field.modulus() });
            }
        }
    }
    Ok(ModuleReport { modulus: field.modulus(), dim, generators: gens.len(), axioms_hold_by_construction: true })
}

impl ModuleRep {
    pub fn new(field: FieldSpec, dim: usize, gens: Vec<Mat>) -> Result<Self> {
        for (g, m) in gens.iter().enumerate() {
            if m.field() != field {
                return Err(Error::FieldMismatch);
            }
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Shape(format!("generator {g} is {}x{}, expected {dim}x{dim}", m.rows(), m.cols())));
            }
        }
        Ok(ModuleRep { inner: Arc::new(ModuleData { field, dim, gens }) })
    }

    /// Builds a module from nested integer lists after [`validate_module`].
    pub fn from_raw(p: u64, dim: usize, gens: &[Vec<Vec<u64>>]) -> Result<Self> {
        validate_module(p, dim, gens)?;
        let field = FieldSpec::new(p)?;
        let mats = gens
            .iter()
            .map(|m| {
                let data = m.iter().flatten().map(|&x| x as u32).collect();
                Mat::from_flat(field, dim, dim, data)
            })
            .collect::<Result<Vec<_>>>()?;
        ModuleRep::new(field, dim, mats)
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.inner.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    #[inline]
    pub fn gens(&self) -> &[Mat] {
        &self.inner.gens
    }

    #[inline]
    pub fn num_gens(&self) -> usize {
        self.inner.gens.len()
    }

    pub fn validate(&self) -> ModuleReport {
        ModuleReport {
            modulus: self.field().modulus(),
            dim: self.dim(),
            generators: self.num_gens(),
            axioms_hold_by_construction: true,
        }
    }

    /// Same module with every generator conjugated: `g ↦ c · g · c⁻¹`.
    pub fn conjugate(&self, c: &Mat) -> Result<ModuleRep> {
        let inv = c.inverse().ok_or_else(|| Error::Precondition("conjugating matrix is singular".into()))?;
        if c.rows() != self.dim() {
            return Err(Error::Dimension { expected: self.dim(), found: c.rows() });
        }
        let gens = self.gens().iter().map(|g| c.mul(g).mul(&inv)).collect();
        ModuleRep::new(self.field(), self.dim(), gens)
    }

    pub fn zero_submodule(&self) -> Submodule {
        Submodule { parent: self.clone(), basis: SubspaceBasis::zero(self.field(), self.dim()) }
    }

    pub fn full_submodule(&self) -> Submodule {
        Submodule { parent: self.clone(), basis: SubspaceBasis::full(self.field(), self.dim()) }
    }

    fn check_ambient(&self, s: &SubspaceBasis) -> Result<()> {
        if s.field() != self.field() {
            return Err(Error::FieldMismatch);
        }
        if s.ambient_dim() != self.dim() {
            return Err(Error::Dimension { expected: self.dim(), found: s.ambient_dim() });
        }
        Ok(())
    }

    /// Index of the first generator that moves some basis vector out of `s`.
    fn unstable_generator(&self, s: &SubspaceBasis) -> Option<usize> {
        self.gens().iter().position(|g| s.rows().iter().any(|w| !s.contains(&g.mul_vec(w))))
    }

    /// Whether `s` is stable under every generator.
    pub fn is_submodule(&self, s: &SubspaceBasis) -> Result<bool> {
        self.check_ambient(s)?;
        Ok(self.unstable_generator(s).is_none())
    }

    /// Wraps a generator-stable subspace.
    pub fn submodule(&self, s: SubspaceBasis) -> Result<Submodule> {
        self.check_ambient(&s)?;
        if let Some(generator) = self.unstable_generator(&s) {
            return Err(Error::InvalidSubmodule { generator });
        }
        Ok(Submodule { parent: self.clone(), basis: s })
    }

    /// The submodule generated by `seeds`: the smallest generator-stable subspace
    /// containing them.
    pub fn spin(&self, seeds: &[Vec<u32>]) -> Result<Submodule> {
        let start = SubspaceBasis::from_vectors(self.field(), self.dim(), seeds)?;
        Ok(self.spin_subspace(start))
    }

    pub(crate) fn spin_subspace(&self, start: SubspaceBasis) -> Submodule {
        let mut basis = start;
        // Vectors whose images have not been adjoined yet.
        let mut frontier: Vec<Vec<u32>> = basis.rows().to_vec();
        while !frontier.is_empty() && !basis.is_full() {
            let mut fresh = Vec::new();
            for v in &frontier {
                for g in self.gens() {
                    let w = g.mul_vec(v);
                    let r = basis.reduce(&w);
                    if r.iter().any(|&x| x != 0) {
                        let grown =
                            basis.sum(&SubspaceBasis::from_vectors_unchecked(self.field(), self.dim(), vec![r]));
                        basis = grown.expect("same ambient space");
                        fresh.push(w);
                    }
                }
            }
            frontier = fresh;
        }
        Submodule { parent: self.clone(), basis }
    }

    /// Action of the generators on a submodule, in the coordinates of its canonical basis.
    pub fn restrict(&self, s: &Submodule) -> Result<ModuleRep> {
        if s.parent() != self {
            return Err(Error::ParentMismatch);
        }
        let b = s.basis();
        let gens = self
            .gens()
            .iter()
            .map(|g| {
                let cols: Vec<Vec<u32>> = b
                    .rows()
                    .iter()
                    .map(|w| b.coordinates(&g.mul_vec(w)).expect("submodule is generator-stable"))
                    .collect();
                Mat::from_columns(self.field(), b.dim(), &cols)
            })
            .collect();
        ModuleRep::new(self.field(), b.dim(), gens)
    }

    /// Whether the presentation of every element of `Σ parts` is unique, i.e.
    /// `dim Σ parts = Σ dim parts`.
    pub fn is_direct(&self, parts: &[Submodule]) -> Result<bool> {
        let mut total = SubspaceBasis::zero(self.field(), self.dim());
        let mut dims = 0;
        for part in parts {
            if part.parent() != self {
                return Err(Error::ParentMismatch);
            }
            total = total.sum(part.basis())?;
            dims += part.dim();
        }
        Ok(total.dim() == dims)
    }
}

/// A generator-stable subspace of a specific module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Submodule {
    parent: ModuleRep,
    basis: SubspaceBasis,
}

impl Submodule {
    pub fn parent(&self) -> &ModuleRep {
        &self.parent
    }

    pub fn basis(&self) -> &SubspaceBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_zero()
    }

    pub fn is_full(&self) -> bool {
        self.basis.is_full()
    }

    pub fn contains(&self, other: &Submodule) -> bool {
        self.basis.contains_subspace(&other.basis)
    }

    fn same_parent(&self, other: &Submodule) -> Result<()> {
        if self.parent != other.parent {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        self.same_parent(other)?;
        let basis = self.basis.sum(&other.basis)?;
        debug_assert!(self.parent.unstable_generator(&basis).is_none());
        Ok(Submodule { parent: self.parent.clone(), basis })
    }

    pub fn intersect(&self, other: &Submodule) -> Result<Submodule> {
        self.same_parent(other)?;
        let basis = self.basis.intersect(&other.basis)?;
        debug_assert!(self.parent.unstable_generator(&basis).is_none());
        Ok(Submodule { parent: self.parent.clone(), basis })
    }
}
