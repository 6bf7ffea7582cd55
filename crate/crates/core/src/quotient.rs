//! Quotient modules `upper / lower` for submodules `lower ⊆ upper` of one module.
//!
//! Coordinates are canonical. The quotient basis is the RREF basis of `upper`
//! reduced modulo `lower`; when `upper` is the whole module these are exactly the
//! unit vectors at the non-pivot columns of `lower`.

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::module::{ModuleRep, Submodule};
use crate::subspace::SubspaceBasis;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRep {
    parent: ModuleRep,
    upper: Submodule,
    divisor: Submodule,
    quotient: ModuleRep,
    /// `dim(quotient) × dim(parent)`; maps a vector of `upper` to its coset.
    projection: Mat,
    /// `dim(parent) × dim(quotient)`; canonical coset representatives.
    section: Mat,
}

impl QuotientRep {
    pub fn parent(&self) -> &ModuleRep {
        &self.parent
    }

    pub fn upper(&self) -> &Submodule {
        &self.upper
    }

    pub fn divisor(&self) -> &Submodule {
        &self.divisor
    }

    pub fn quotient(&self) -> &ModuleRep {
        &self.quotient
    }

    pub fn projection(&self) -> &Mat {
        &self.projection
    }

    pub fn section(&self) -> &Mat {
        &self.section
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Coset coordinates of `v` (meaningful for `v ∈ upper`).
    pub fn project(&self, v: &[u32]) -> Vec<u32> {
        self.projection.mul_vec(v)
    }

    /// Preimage in the parent of a submodule of the quotient: `divisor + section(s)`.
    pub fn preimage(&self, s: &Submodule) -> Result<Submodule> {
        if s.parent() != &self.quotient {
            return Err(Error::ParentMismatch);
        }
        let lifted = s.basis().image(&self.section);
        let basis = self.divisor.basis().sum(&lifted)?;
        self.parent.submodule(basis)
    }

    /// Re-checks the defining identities: projection ∘ section = id, the kernel of
    /// the projection on `upper` is the divisor, and the projection intertwines the
    /// parent action on `upper` with the induced action.
    pub fn verify(&self) -> bool {
        let f = self.parent.field();
        let q = self.dim();
        if self.projection.mul(&self.section) != Mat::identity(f, q) {
            return false;
        }
        let up = self.upper.basis();
        let on_upper = self.projection.mul(&up.inclusion());
        let kernel = on_upper.kernel_basis().image(&up.inclusion());
        if &kernel != self.divisor.basis() {
            return false;
        }
        self.parent.gens().iter().zip(self.quotient.gens()).all(|(a, abar)| {
            up.rows()
                .iter()
                .all(|u| self.projection.mul_vec(&a.mul_vec(u)) == abar.mul_vec(&self.projection.mul_vec(u)))
        })
    }
}

/// `rep / w`.
pub fn quotient(rep: &ModuleRep, w: &Submodule) -> Result<QuotientRep> {
    if w.parent() != rep {
        return Err(Error::ParentMismatch);
    }
    subquotient(&rep.full_submodule(), w)
}

/// `upper / lower` as a module in its own right.
pub fn subquotient(upper: &Submodule, lower: &Submodule) -> Result<QuotientRep> {
    let parent = upper.parent().clone();
    if lower.parent() != &parent {
        return Err(Error::ParentMismatch);
    }
    if !upper.contains(lower) {
        return Err(Error::Precondition("divisor is not contained in the numerator".into()));
    }
    let f = parent.field();
    let d = parent.dim();
    let low = lower.basis();

    let reduced: Vec<Vec<u32>> = upper.basis().rows().iter().map(|u| low.reduce(u)).collect();
    let reps = SubspaceBasis::from_vectors_unchecked(f, d, reduced);
    let q = reps.dim();
    debug_assert_eq!(q, upper.dim() - lower.dim());

    // projection: reduce modulo `lower`, then read coordinates at the pivots of `reps`.
    // Column c is the image of e_c.
    let mut projection = Mat::zeros(f, q, d);
    for c in 0..d {
        let mut e = vec![0; d];
        e[c] = 1;
        let r = low.reduce(&e);
        for (i, &pc) in reps.pivots().iter().enumerate() {
            projection.set(i, c, r[pc]);
        }
    }
    let section = reps.inclusion();

    let gens = parent.gens().iter().map(|a| projection.mul(a).mul(&section)).collect();
    let quotient = ModuleRep::new(f, q, gens)?;

    Ok(QuotientRep { parent, upper: upper.clone(), divisor: lower.clone(), quotient, projection, section })
}
