//! Searches over vectors and intertwiners: simplicity, minimal submodules and
//! isomorphism witnesses.
//!
//! Below [`SearchConfig::max_enum`] every search is exhaustive and exact. Above it
//! the searches sample with a seeded RNG and report [`Error::Resource`] whenever
//! sampling cannot settle the question.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::hom::{hom_space, intertwines};
use crate::matrix::Mat;
use crate::module::{ModuleRep, Submodule};
use crate::subspace::SubspaceBasis;

pub const DEFAULT_MAX_ENUM: u64 = 4096;
pub const DEFAULT_TRIALS: usize = 512;

/// Which minimal submodule wins a tie: the one whose canonical basis is
/// lexicographically least, or greatest.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum EnumerationOrder {
    #[default]
    Lexicographic,
    Reverse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchConfig {
    /// Exhaustive enumeration is used while the search space has at most this many points.
    pub max_enum: u64,
    pub seed: u64,
    /// Samples drawn by randomized searches.
    pub trials: usize,
    pub order: EnumerationOrder,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_enum: DEFAULT_MAX_ENUM, seed: 0, trials: DEFAULT_TRIALS, order: EnumerationOrder::default() }
    }
}

impl SearchConfig {
    pub fn with_order(self, order: EnumerationOrder) -> Self {
        SearchConfig { order, ..self }
    }

    fn exhaustive(&self, field: FieldSpec, dim: usize) -> bool {
        field.space_size(dim).is_some_and(|n| n <= self.max_enum)
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// An invertible intertwiner `T` with `T·A_i = B_i·T`, mapping source coordinates
/// to target coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsoWitness {
    matrix: Mat,
}

impl IsoWitness {
    /// Wraps `matrix` after checking it is an isomorphism `src → dst`.
    pub fn new(matrix: Mat, src: &ModuleRep, dst: &ModuleRep) -> Result<Self> {
        let w = IsoWitness { matrix };
        if w.verify(src, dst) {
            Ok(w)
        } else {
            Err(Error::Precondition("matrix is not an invertible intertwiner".into()))
        }
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn into_matrix(self) -> Mat {
        self.matrix
    }

    pub fn verify(&self, src: &ModuleRep, dst: &ModuleRep) -> bool {
        self.matrix.is_invertible() && intertwines(&self.matrix, src, dst)
    }

    pub fn inverse(&self) -> IsoWitness {
        IsoWitness { matrix: self.matrix.inverse().expect("witness is invertible") }
    }
}

/// Nonzero vectors whose first nonzero entry is 1: one per line.
fn normalized_vectors(field: FieldSpec, dim: usize) -> impl Iterator<Item = Vec<u32>> {
    let total = field.space_size(dim).expect("caller checked the exhaustive bound");
    (1..total).map(move |i| field.vector_from_index(i, dim)).filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
}

fn random_nonzero(rng: &mut ChaCha8Rng, field: FieldSpec, dim: usize) -> Vec<u32> {
    loop {
        let v: Vec<u32> = (0..dim).map(|_| rng.gen_range(0..field.modulus())).collect();
        if v.iter().any(|&x| x != 0) {
            return v;
        }
    }
}

/// Whether `rep` has no submodules besides zero and itself. The zero module is not simple.
pub fn is_simple(rep: &ModuleRep, cfg: &SearchConfig) -> Result<bool> {
    let (f, d) = (rep.field(), rep.dim());
    if d == 0 {
        return Err(Error::Degenerate("the zero module is not simple"));
    }
    if d == 1 {
        return Ok(true);
    }
    if cfg.exhaustive(f, d) {
        for v in normalized_vectors(f, d) {
            if !rep.spin_subspace(SubspaceBasis::from_vectors_unchecked(f, d, vec![v])).is_full() {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    let mut rng = cfg.rng();
    for _ in 0..cfg.trials {
        let v = random_nonzero(&mut rng, f, d);
        if !rep.spin_subspace(SubspaceBasis::from_vectors_unchecked(f, d, vec![v])).is_full() {
            return Ok(false);
        }
    }
    Err(Error::Resource(format!(
        "simplicity undecided: {} sampled vectors all spin to the whole {d}-dimensional module",
        cfg.trials
    )))
}

fn better(a: &SubspaceBasis, b: &SubspaceBasis, order: EnumerationOrder) -> bool {
    match a.dim().cmp(&b.dim()) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => match order {
            EnumerationOrder::Lexicographic => a.lex_cmp(b) == Ordering::Less,
            EnumerationOrder::Reverse => a.lex_cmp(b) == Ordering::Greater,
        },
    }
}

fn minimal_exhaustive(rep: &ModuleRep, order: EnumerationOrder) -> Submodule {
    let (f, d) = (rep.field(), rep.dim());
    let mut best: Option<Submodule> = None;
    for v in normalized_vectors(f, d) {
        let s = rep.spin_subspace(SubspaceBasis::from_vectors_unchecked(f, d, vec![v]));
        if best.as_ref().is_none_or(|b| better(s.basis(), b.basis(), order)) {
            best = Some(s);
        }
    }
    best.expect("a nonzero module has a nonzero vector")
}

/// A nonzero submodule of least dimension.
///
/// Within the exhaustive bound every line is spun, and ties are broken on the
/// canonical basis according to `cfg.order`. Above the bound the search descends
/// through sampled proper submodules until the remaining piece is small enough to
/// enumerate; the result is then simple but need not have globally least dimension.
pub fn minimal_submodule(rep: &ModuleRep, cfg: &SearchConfig) -> Result<Submodule> {
    let d = rep.dim();
    if d == 0 {
        return Err(Error::Degenerate("the zero module has no nonzero submodule"));
    }
    if cfg.exhaustive(rep.field(), d) {
        return Ok(minimal_exhaustive(rep, cfg.order));
    }

    let f = rep.field();
    let mut rng = cfg.rng();
    let mut current = rep.clone();
    // columns: basis of `current` inside `rep`
    let mut embed = Mat::identity(f, d);
    while !cfg.exhaustive(f, current.dim()) {
        let cd = current.dim();
        let mut smallest: Option<Submodule> = None;
        for _ in 0..cfg.trials {
            let v = random_nonzero(&mut rng, f, cd);
            let s = current.spin_subspace(SubspaceBasis::from_vectors_unchecked(f, cd, vec![v]));
            if !s.is_full() && smallest.as_ref().is_none_or(|b| s.dim() < b.dim()) {
                smallest = Some(s);
            }
        }
        let Some(piece) = smallest else {
            return Err(Error::Resource(format!(
                "no proper submodule found in {} samples of a {cd}-dimensional module above the enumeration bound",
                cfg.trials
            )));
        };
        embed = embed.mul(&piece.basis().inclusion());
        current = current.restrict(&piece)?;
    }
    let inner = minimal_exhaustive(&current, cfg.order);
    let basis = inner.basis().image(&embed);
    rep.submodule(basis)
}

/// Searches for an isomorphism `a → b`.
///
/// Basis elements of the hom space are tried first; for simple modules any nonzero
/// intertwiner is invertible, so this settles the simple case immediately. Otherwise
/// coefficient tuples are enumerated (or sampled above the bound).
pub fn is_isomorphic(a: &ModuleRep, b: &ModuleRep, cfg: &SearchConfig) -> Result<Option<IsoWitness>> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    if a.num_gens() != b.num_gens() {
        return Err(Error::Shape(format!("generator count mismatch: {} vs {}", a.num_gens(), b.num_gens())));
    }
    if a.dim() != b.dim() {
        return Ok(None);
    }
    let f = a.field();
    let hom = hom_space(a, b)?;
    if let Some(t) = hom.iter().find(|t| t.is_invertible()) {
        return Ok(Some(checked_witness(t.clone(), a, b)?));
    }
    if a.dim() == 0 {
        return Ok(Some(IsoWitness { matrix: Mat::zeros(f, 0, 0) }));
    }
    if hom.len() <= 1 {
        return Ok(None);
    }
    let (n, h) = (a.dim(), hom.len());
    if cfg.exhaustive(f, h) {
        for coeffs in normalized_vectors(f, h) {
            let t = Mat::linear_combination(f, n, n, &hom, &coeffs);
            if t.is_invertible() {
                return Ok(Some(checked_witness(t, a, b)?));
            }
        }
        return Ok(None);
    }
    let mut rng = cfg.rng();
    for _ in 0..cfg.trials {
        let coeffs = random_nonzero(&mut rng, f, h);
        let t = Mat::linear_combination(f, n, n, &hom, &coeffs);
        if t.is_invertible() {
            return Ok(Some(checked_witness(t, a, b)?));
        }
    }
    Err(Error::Resource(format!(
        "isomorphism undecided: no invertible element among {} samples of a {h}-dimensional hom space",
        cfg.trials
    )))
}

/// Isomorphism test for two simple modules: they are isomorphic iff the hom space
/// is nonzero, and then every nonzero intertwiner is invertible.
pub fn schur_isomorphism(a: &ModuleRep, b: &ModuleRep) -> Result<Option<IsoWitness>> {
    if a.dim() != b.dim() {
        if a.field() != b.field() {
            return Err(Error::FieldMismatch);
        }
        return Ok(None);
    }
    let hom = hom_space(a, b)?;
    match hom.into_iter().next() {
        None => Ok(None),
        Some(t) if t.is_invertible() => Ok(Some(checked_witness(t, a, b)?)),
        Some(_) => Err(Error::Internal("singular nonzero intertwiner between modules assumed simple".into())),
    }
}

fn checked_witness(t: Mat, a: &ModuleRep, b: &ModuleRep) -> Result<IsoWitness> {
    let w = IsoWitness { matrix: t };
    if w.verify(a, b) {
        Ok(w)
    } else {
        Err(Error::Internal("isomorphism witness failed verification".into()))
    }
}
