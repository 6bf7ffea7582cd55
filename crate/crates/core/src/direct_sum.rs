//! Direct sums: block-diagonal external sums, internal decompositions, their
//! canonical series, and the symbolic multiplicity criterion for `N·U ≅ M·U`.

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::module::{ModuleRep, Submodule};
use crate::ordinal::{Ordinal, OrdinalKind};
use crate::quotient::QuotientRep;
use crate::search::{is_isomorphic, is_simple, SearchConfig};
use crate::series::{factors, jordan_holder_check, match_simple_factors, JordanHolder, NormalSeries};
use crate::subspace::SubspaceBasis;

/// `total = ⊕ parts`, with `embeddings[i]` mapping part `i` into `total`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumDecomposition {
    total: ModuleRep,
    parts: Vec<ModuleRep>,
    embeddings: Vec<Mat>,
}

impl SumDecomposition {
    pub fn total(&self) -> &ModuleRep {
        &self.total
    }

    pub fn parts(&self) -> &[ModuleRep] {
        &self.parts
    }

    pub fn embeddings(&self) -> &[Mat] {
        &self.embeddings
    }

    /// Images of the parts as submodules of the total.
    pub fn images(&self) -> Result<Vec<Submodule>> {
        self.embeddings
            .iter()
            .map(|e| {
                let basis =
                    SubspaceBasis::from_vectors(self.total.field(), self.total.dim(), &e.transpose().row_vecs())?;
                self.total.submodule(basis)
            })
            .collect()
    }

    /// An internal decomposition `total = S_1 ⊕ … ⊕ S_k`. Each part is the restricted
    /// action on `S_i` in its canonical basis.
    pub fn internal(total: &ModuleRep, summands: &[Submodule]) -> Result<Self> {
        if summands.iter().any(|s| s.is_zero()) {
            return Err(Error::Degenerate("zero summand in a direct decomposition"));
        }
        if !total.is_direct(summands)? {
            return Err(Error::Precondition("summands are not independent".into()));
        }
        if summands.iter().map(Submodule::dim).sum::<usize>() != total.dim() {
            return Err(Error::Precondition("summands do not span the module".into()));
        }
        let parts = summands.iter().map(|s| total.restrict(s)).collect::<Result<Vec<_>>>()?;
        let embeddings = summands.iter().map(|s| s.basis().inclusion()).collect();
        Ok(SumDecomposition { total: total.clone(), parts, embeddings })
    }
}

/// Block-diagonal sum of the parts. Each embedded image is checked to be a
/// submodule isomorphic to its part.
pub fn external_direct_sum(parts: &[ModuleRep], cfg: &SearchConfig) -> Result<SumDecomposition> {
    let first = parts.first().ok_or(Error::Degenerate("empty list of summands"))?;
    let (f, k) = (first.field(), first.num_gens());
    for p in parts {
        if p.field() != f {
            return Err(Error::FieldMismatch);
        }
        if p.num_gens() != k {
            return Err(Error::Shape(format!("generator count mismatch: {} vs {k}", p.num_gens())));
        }
        if p.dim() == 0 {
            return Err(Error::Degenerate("zero-dimensional summand"));
        }
    }
    let d: usize = parts.iter().map(ModuleRep::dim).sum();
    let gens = (0..k)
        .map(|g| {
            let blocks: Vec<&Mat> = parts.iter().map(|p| &p.gens()[g]).collect();
            Mat::block_diag(f, &blocks)
        })
        .collect();
    let total = ModuleRep::new(f, d, gens)?;

    let mut embeddings = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for p in parts {
        let mut e = Mat::zeros(f, d, p.dim());
        for i in 0..p.dim() {
            e.set(offset + i, i, 1);
        }
        offset += p.dim();
        embeddings.push(e);
    }
    let dec = SumDecomposition { total, parts: parts.to_vec(), embeddings };
    for (image, part) in dec.images()?.iter().zip(parts) {
        let restricted = dec.total.restrict(image)?;
        if is_isomorphic(&restricted, part, cfg)?.is_none() {
            return Err(Error::Internal("embedded summand is not isomorphic to its part".into()));
        }
    }
    Ok(dec)
}

/// `{0} = W_1 ⊊ W_2 ⊊ … ⊊ W_{k+1} = V` with `W_i` the sum of the first `i − 1`
/// embedded parts. Each factor `W_{i+1}/W_i` is checked isomorphic to part `i`.
pub fn canonical_sum_series(dec: &SumDecomposition, cfg: &SearchConfig) -> Result<NormalSeries> {
    let mut current = dec.total.zero_submodule();
    let mut terms = vec![current.clone()];
    for image in dec.images()? {
        current = current.sum(&image)?;
        terms.push(current.clone());
    }
    let series = NormalSeries::from_submodules(dec.total.clone(), &terms)?;
    let fs = factors(&series)?;
    for (q, part) in fs.iter().zip(&dec.parts) {
        if is_isomorphic(q.quotient(), part, cfg)?.is_none() {
            return Err(Error::Internal("canonical factor is not isomorphic to its part".into()));
        }
    }
    Ok(series)
}

/// Matches the parts of two decompositions into simple modules up to isomorphism
/// and order.
///
/// Decompositions of the same module go through their canonical series and
/// [`jordan_holder_check`]. Decompositions of two different modules of the same shape
/// have their parts compared directly, which is where a mismatch can show up.
pub fn uniqueness_check(a: &SumDecomposition, b: &SumDecomposition, cfg: &SearchConfig) -> Result<JordanHolder> {
    let (ta, tb) = (&a.total, &b.total);
    if ta.field() != tb.field() || ta.dim() != tb.dim() || ta.num_gens() != tb.num_gens() {
        return Err(Error::Shape("decompositions of modules with different shapes".into()));
    }
    for (i, p) in a.parts.iter().chain(&b.parts).enumerate() {
        if !is_simple(p, cfg)? {
            return Err(Error::Precondition(format!("summand {} is not simple", i + 1)));
        }
    }
    let sa = canonical_sum_series(a, cfg)?;
    let sb = canonical_sum_series(b, cfg)?;
    if ta == tb {
        return jordan_holder_check(&sa, &sb, cfg);
    }
    let fa = factors(&sa)?;
    let fb = factors(&sb)?;
    let l: Vec<&ModuleRep> = fa.iter().map(QuotientRep::quotient).collect();
    let r: Vec<&ModuleRep> = fb.iter().map(QuotientRep::quotient).collect();
    match_simple_factors(&l, &r)
}

/// `N·U`: a direct sum of `length` copies of one simple module, known by name and
/// optionally by a concrete model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicSumSeries {
    pub length: Ordinal,
    pub label: String,
    pub concrete_model: Option<ModuleRep>,
}

impl SymbolicSumSeries {
    pub fn new(length: Ordinal, label: impl Into<String>) -> Self {
        SymbolicSumSeries { length, label: label.into(), concrete_model: None }
    }

    pub fn with_model(mut self, model: ModuleRep) -> Self {
        self.concrete_model = Some(model);
        self
    }

    /// The concrete sum of `length` copies of the model, when both are available.
    pub fn realize(&self, cfg: &SearchConfig) -> Option<Result<SumDecomposition>> {
        let n = self.length.as_nat()?;
        let model = self.concrete_model.as_ref()?;
        let copies = usize::try_from(n).ok()?;
        Some(external_direct_sum(&vec![model.clone(); copies], cfg))
    }
}

/// What [`validate_symbolic_series`] found. The labels are `1, …, length`, written
/// `λ + 1, …, λ + k` past the last limit `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicReport {
    pub length: Ordinal,
    /// Largest limit label (or zero when every label is finite).
    pub limit_part: Ordinal,
    /// Number of successor labels after `limit_part`.
    pub finite_tail: u64,
    /// Each stage at a limit label is the union of the earlier ones; always true for
    /// sums of copies, where every stage is spanned by the summands below it.
    pub union_condition_holds: bool,
}

impl SymbolicReport {
    /// Classification of the last labels, ending at `length`. At most `max` entries;
    /// the limit label itself comes first when it is within reach.
    pub fn tail(&self, max: usize) -> Vec<(Ordinal, OrdinalKind)> {
        let k = self.finite_tail;
        let shown = (k as u128).min(max as u128) as u64;
        let mut out = Vec::new();
        if !self.limit_part.is_zero() && (shown as usize) < max && shown == k {
            out.push((self.limit_part.clone(), OrdinalKind::Limit));
        }
        for i in (k - shown + 1)..=k {
            let label = self.limit_part.clone() + Ordinal::nat(i);
            out.push((label, OrdinalKind::Successor));
        }
        out
    }
}

pub fn validate_symbolic_series(s: &SymbolicSumSeries, cfg: &SearchConfig) -> Result<SymbolicReport> {
    if s.length.is_zero() {
        return Err(Error::Degenerate("symbolic sum needs length at least 1"));
    }
    if let Some(model) = &s.concrete_model {
        if !is_simple(model, cfg)? {
            return Err(Error::Precondition(format!("model bound to {:?} is not simple", s.label)));
        }
    }
    let (limit_part, finite_tail) = s.length.split_finite_tail();
    Ok(SymbolicReport { length: s.length.clone(), limit_part, finite_tail, union_condition_holds: true })
}

/// `N·U ≅ M·U` iff `|n| = |m|`.
pub fn symbolic_iso(a: &SymbolicSumSeries, b: &SymbolicSumSeries) -> Result<bool> {
    if a.label != b.label {
        return Err(Error::IncomparableLabel(a.label.clone(), b.label.clone()));
    }
    if a.length.is_zero() || b.length.is_zero() {
        return Err(Error::Degenerate("symbolic sum needs length at least 1"));
    }
    Ok(a.length.cardinality() == b.length.cardinality())
}
