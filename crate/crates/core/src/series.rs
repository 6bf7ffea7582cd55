//! Normal and composition series, the butterfly isomorphism, Schreier refinement
//! and Jordan-Hölder matching.
//!
//! A series is a strictly ascending chain `{0} = V_1 ⊊ V_2 ⊊ … ⊊ V_n = V` of
//! submodules labelled by ordinals. Concrete modules are finite dimensional, so
//! concrete series carry the finite labels `1, …, n`; a limit label is accepted
//! only if its term is the union of all earlier terms, which strictness rules out.

use crate::error::{Error, Result, SeriesClause, SeriesViolation};
use crate::matrix::Mat;
use crate::module::{ModuleRep, Submodule};
use crate::ordinal::Ordinal;
use crate::quotient::{subquotient, QuotientRep};
use crate::search::{is_simple, minimal_submodule, schur_isomorphism, IsoWitness, SearchConfig};
use crate::subspace::SubspaceBasis;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalSeries {
    parent: ModuleRep,
    terms: Vec<SubspaceBasis>,
    labels: Vec<Ordinal>,
}

/// Factor `i` is `terms[i + 1] / terms[i]`.
pub type FactorList = Vec<QuotientRep>;

impl NormalSeries {
    /// A series with labels `1, …, n`. Nothing is checked until [`validate_normal_series`].
    pub fn new(parent: ModuleRep, terms: Vec<SubspaceBasis>) -> Self {
        let labels = (1..=terms.len() as u64).map(Ordinal::nat).collect();
        NormalSeries { parent, terms, labels }
    }

    pub fn with_labels(parent: ModuleRep, terms: Vec<SubspaceBasis>, labels: Vec<Ordinal>) -> Self {
        NormalSeries { parent, terms, labels }
    }

    pub fn from_submodules(parent: ModuleRep, terms: &[Submodule]) -> Result<Self> {
        if terms.iter().any(|t| t.parent() != &parent) {
            return Err(Error::ParentMismatch);
        }
        Ok(NormalSeries::new(parent, terms.iter().map(|t| t.basis().clone()).collect()))
    }

    /// `{0} ⊊ V`, or just `{0}` for the zero module.
    pub fn trivial(parent: &ModuleRep) -> Self {
        let mut terms = vec![SubspaceBasis::zero(parent.field(), parent.dim())];
        if parent.dim() > 0 {
            terms.push(SubspaceBasis::full(parent.field(), parent.dim()));
        }
        NormalSeries::new(parent.clone(), terms)
    }

    pub fn parent(&self) -> &ModuleRep {
        &self.parent
    }

    pub fn terms(&self) -> &[SubspaceBasis] {
        &self.terms
    }

    pub fn labels(&self) -> &[Ordinal] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_factors(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(SubspaceBasis::dim).collect()
    }

    fn submodules(&self) -> Result<Vec<Submodule>> {
        self.terms.iter().map(|t| self.parent.submodule(t.clone())).collect()
    }
}

/// Checks every clause of the normal-series definition and reports all violations.
pub fn validate_normal_series(s: &NormalSeries) -> Result<()> {
    let mut bad = Vec::new();
    let mut flag = |clause, index| bad.push(SeriesViolation { clause, index });
    let rep = &s.parent;
    let n = s.terms.len();
    if n == 0 {
        flag(SeriesClause::Empty, 1);
        return Err(Error::InvalidSeries(bad));
    }
    if s.terms.iter().any(|t| t.field() != rep.field() || t.ambient_dim() != rep.dim()) {
        flag(SeriesClause::ParentMismatch, 1);
        return Err(Error::InvalidSeries(bad));
    }
    if !s.terms[0].is_zero() {
        flag(SeriesClause::FirstTermNotZero, 1);
    }
    if !s.terms[n - 1].is_full() {
        flag(SeriesClause::LastTermNotFull, n);
    }
    for (i, t) in s.terms.iter().enumerate() {
        if !rep.is_submodule(t)? {
            flag(SeriesClause::NotSubmodule, i + 1);
        }
    }
    for i in 1..n {
        let (lo, hi) = (&s.terms[i - 1], &s.terms[i]);
        if !(hi.contains_subspace(lo) && hi.dim() > lo.dim()) {
            flag(SeriesClause::NotStrict, i + 1);
        }
    }
    if s.labels.len() != n {
        flag(SeriesClause::LabelCount, n);
    } else {
        if s.labels[0] != Ordinal::one() {
            flag(SeriesClause::FirstLabel, 1);
        }
        let mut union = s.terms[0].clone();
        for i in 1..n {
            let (prev, cur) = (&s.labels[i - 1], &s.labels[i]);
            if cur <= prev {
                flag(SeriesClause::LabelOrder, i + 1);
            } else if cur.is_successor() && cur != &prev.successor() {
                flag(SeriesClause::LabelGap, i + 1);
            } else if cur.is_limit() && s.terms[i] != union {
                flag(SeriesClause::LimitUnion, i + 1);
            }
            union = union.sum(&s.terms[i])?;
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidSeries(bad))
    }
}

/// Bottom-up composition series: each step adjoins the preimage of a minimal
/// submodule of the current quotient.
pub fn composition_series(rep: &ModuleRep, cfg: &SearchConfig) -> Result<NormalSeries> {
    let mut current = rep.zero_submodule();
    let mut terms = vec![current.clone()];
    while !current.is_full() {
        let q = crate::quotient::quotient(rep, &current)?;
        let bottom = minimal_submodule(q.quotient(), cfg)?;
        current = q.preimage(&bottom)?;
        terms.push(current.clone());
    }
    NormalSeries::from_submodules(rep.clone(), &terms)
}

pub fn factors(s: &NormalSeries) -> Result<FactorList> {
    validate_normal_series(s)?;
    let subs = s.submodules()?;
    subs.windows(2).map(|w| subquotient(&w[1], &w[0])).collect()
}

/// If every term of `coarse` is a term of `fine`, the (monotone) index map
/// `coarse → fine`.
pub fn is_refinement(fine: &NormalSeries, coarse: &NormalSeries) -> Result<Option<Vec<usize>>> {
    if fine.parent != coarse.parent {
        return Err(Error::ParentMismatch);
    }
    let mut map = Vec::with_capacity(coarse.len());
    let mut from = 0;
    for term in &coarse.terms {
        match fine.terms[from..].iter().position(|t| t == term) {
            Some(k) => {
                map.push(from + k);
                from += k + 1;
            }
            None => return Ok(None),
        }
    }
    Ok(Some(map))
}

/// The two sandwiched quotients of the butterfly lemma and an isomorphism between them.
#[derive(Clone, Debug)]
pub struct Butterfly {
    /// `(U + (Ũ∩W̃)) / (U + (Ũ∩W))`
    pub left: QuotientRep,
    /// `(W + (W̃∩Ũ)) / (W + (W̃∩U))`
    pub right: QuotientRep,
    /// `left → right`
    pub witness: IsoWitness,
    /// `Ũ ∩ W̃`, the common source of both projections.
    pub domain: Submodule,
    /// Kernel of the projection `Ũ ∩ W̃ → left`, as computed (it is checked to equal
    /// both the kernel of the other projection and `(W̃∩U) + (Ũ∩W)`).
    pub kernel: Submodule,
}

/// Builds the butterfly isomorphism for `U ⊆ Ũ`, `W ⊆ W̃`.
///
/// Both quotients receive a surjection from `Ũ ∩ W̃` with kernel `(W̃∩U) + (Ũ∩W)`; the
/// witness is `ψ ∘ φ⁻¹`, computed through a right inverse of `φ`. Every step is
/// re-verified, and a failed check is reported as [`Error::Internal`].
pub fn zassenhaus_witness(
    upper_u: &Submodule,
    lower_u: &Submodule,
    upper_w: &Submodule,
    lower_w: &Submodule,
) -> Result<Butterfly> {
    let parent = upper_u.parent();
    if [lower_u, upper_w, lower_w].iter().any(|s| s.parent() != parent) {
        return Err(Error::ParentMismatch);
    }
    if !upper_u.contains(lower_u) {
        return Err(Error::Precondition("nesting violated: U is not contained in Ũ".into()));
    }
    if !upper_w.contains(lower_w) {
        return Err(Error::Precondition("nesting violated: W is not contained in W̃".into()));
    }
    let f = parent.field();
    let domain = upper_u.intersect(upper_w)?;
    let m = lower_u.sum(&upper_u.intersect(lower_w)?)?;
    let n = lower_w.sum(&upper_w.intersect(lower_u)?)?;
    let left = subquotient(&lower_u.sum(&domain)?, &m)?;
    let right = subquotient(&lower_w.sum(&domain)?, &n)?;

    let incl = domain.basis().inclusion();
    let phi = left.projection().mul(&incl);
    let psi = right.projection().mul(&incl);

    let expected = upper_w.intersect(lower_u)?.sum(&upper_u.intersect(lower_w)?)?;
    let ker_phi = phi.kernel_basis().image(&incl);
    let ker_psi = psi.kernel_basis().image(&incl);
    if &ker_phi != expected.basis() || &ker_psi != expected.basis() {
        return Err(Error::Internal("butterfly projections do not share the expected kernel".into()));
    }
    if left.dim() != right.dim() {
        return Err(Error::Internal("butterfly quotients differ in dimension".into()));
    }

    let q = left.dim();
    let mut lifts = Vec::with_capacity(q);
    for i in 0..q {
        let mut e = vec![0; q];
        e[i] = 1;
        let x = phi.solve(&e).ok_or_else(|| Error::Internal("butterfly projection is not surjective".into()))?;
        lifts.push(x);
    }
    let right_inverse = Mat::from_columns(f, domain.dim(), &lifts);
    let t = psi.mul(&right_inverse);
    let witness = IsoWitness::new(t, left.quotient(), right.quotient())
        .map_err(|_| Error::Internal("butterfly witness failed verification".into()))?;
    let kernel = parent.submodule(ker_phi)?;
    Ok(Butterfly { left, right, witness, domain, kernel })
}

/// One matched pair of factors: `left` of the first series, `right` of the second,
/// with `witness: left factor → right factor`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorPair {
    pub left: usize,
    pub right: usize,
    pub witness: IsoWitness,
}

/// A bijection between the factors of two series.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SeriesPairing {
    pub pairs: Vec<FactorPair>,
}

impl SeriesPairing {
    /// Bijective, total on both factor lists, every witness an isomorphism.
    pub fn verify(&self, left: &[QuotientRep], right: &[QuotientRep]) -> bool {
        if self.pairs.len() != left.len() || left.len() != right.len() {
            return false;
        }
        let mut seen_l = vec![false; left.len()];
        let mut seen_r = vec![false; right.len()];
        for p in &self.pairs {
            if p.left >= left.len() || p.right >= right.len() || seen_l[p.left] || seen_r[p.right] {
                return false;
            }
            seen_l[p.left] = true;
            seen_r[p.right] = true;
            if !p.witness.verify(left[p.left].quotient(), right[p.right].quotient()) {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Debug)]
pub struct SchreierRefinement {
    pub left: NormalSeries,
    pub right: NormalSeries,
    pub pairing: SeriesPairing,
}

fn ensure_finite(s: &NormalSeries) -> Result<()> {
    if s.labels.iter().all(Ordinal::is_finite) {
        Ok(())
    } else {
        Err(Error::Unsupported("transfinite labels on a concrete series"))
    }
}

/// `index[i][j]`: position of factor `(i, j)` in the deduplicated chain, if it survives.
type FactorIndex = Vec<Vec<Option<usize>>>;

/// Interpolated chain `V_i + (V_{i+1} ∩ W_j)` with duplicates removed. Returns the
/// surviving terms and, for each `(i, j)`, the factor index of `V_{i,j+1} / V_{i,j}`
/// when that factor is nonzero.
fn interpolate(v: &[Submodule], w: &[Submodule]) -> Result<(Vec<Submodule>, FactorIndex)> {
    let mut terms = vec![v[0].clone()];
    let mut index = vec![vec![None; w.len() - 1]; v.len() - 1];
    for i in 0..v.len() - 1 {
        for j in 0..w.len() - 1 {
            let next = v[i].sum(&v[i + 1].intersect(&w[j + 1])?)?;
            if &next != terms.last().expect("chain starts nonempty") {
                index[i][j] = Some(terms.len() - 1);
                terms.push(next);
            }
        }
    }
    Ok((terms, index))
}

/// Refines two series of the same module to series with isomorphic factors.
///
/// Factor `(i, j)` of the first refinement, `V_{i,j+1}/V_{i,j}`, is matched with factor
/// `(j, i)` of the second, each pair certified by [`zassenhaus_witness`].
pub fn schreier_refine(s: &NormalSeries, t: &NormalSeries) -> Result<SchreierRefinement> {
    if s.parent != t.parent {
        return Err(Error::ParentMismatch);
    }
    ensure_finite(s)?;
    ensure_finite(t)?;
    validate_normal_series(s)?;
    validate_normal_series(t)?;
    let v = s.submodules()?;
    let w = t.submodules()?;
    let (left_terms, left_index) = interpolate(&v, &w)?;
    let (right_terms, right_index) = interpolate(&w, &v)?;

    let mut pairs = Vec::new();
    for i in 0..v.len() - 1 {
        for j in 0..w.len() - 1 {
            match (left_index[i][j], right_index[j][i]) {
                (None, None) => {}
                (Some(l), Some(r)) => {
                    let b = zassenhaus_witness(&v[i + 1], &v[i], &w[j + 1], &w[j])?;
                    pairs.push(FactorPair { left: l, right: r, witness: b.witness });
                }
                _ => return Err(Error::Internal("interpolated factors disagree on vanishing".into())),
            }
        }
    }
    pairs.sort_by_key(|p| p.left);
    Ok(SchreierRefinement {
        left: NormalSeries::from_submodules(s.parent.clone(), &left_terms)?,
        right: NormalSeries::from_submodules(t.parent.clone(), &right_terms)?,
        pairing: SeriesPairing { pairs },
    })
}

/// The first isomorphism class whose multiplicities differ between two series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMismatch {
    /// 1-based class number, in order of first appearance (first series, then second).
    pub class: usize,
    pub dim: usize,
    pub left_count: usize,
    pub right_count: usize,
}

#[derive(Clone, Debug)]
pub enum JordanHolder {
    Isomorphic(SeriesPairing),
    Mismatch(ClassMismatch),
}

/// Partitions simple modules into isomorphism classes (Schur test). Returns the
/// class of each module and a witness `class representative → module`.
pub fn classify_simple(modules: &[&ModuleRep]) -> Result<Vec<(usize, IsoWitness)>> {
    let mut reps: Vec<&ModuleRep> = Vec::new();
    let mut out = Vec::with_capacity(modules.len());
    'next: for &m in modules {
        for (c, r) in reps.iter().enumerate() {
            if let Some(w) = schur_isomorphism(r, m)? {
                out.push((c, w));
                continue 'next;
            }
        }
        reps.push(m);
        let id = Mat::identity(m.field(), m.dim());
        out.push((reps.len() - 1, IsoWitness::new(id, m, m)?));
    }
    Ok(out)
}

fn simple_factors(s: &NormalSeries, cfg: &SearchConfig) -> Result<FactorList> {
    let fs = factors(s)?;
    for (i, q) in fs.iter().enumerate() {
        if !is_simple(q.quotient(), cfg)? {
            return Err(Error::NotCompositionSeries { index: i + 1 });
        }
    }
    Ok(fs)
}

/// Matches the factors of two composition series up to isomorphism.
pub fn jordan_holder_check(s: &NormalSeries, t: &NormalSeries, cfg: &SearchConfig) -> Result<JordanHolder> {
    if s.parent != t.parent {
        return Err(Error::ParentMismatch);
    }
    let left = simple_factors(s, cfg)?;
    let right = simple_factors(t, cfg)?;
    let l: Vec<&ModuleRep> = left.iter().map(QuotientRep::quotient).collect();
    let r: Vec<&ModuleRep> = right.iter().map(QuotientRep::quotient).collect();
    match_simple_factors(&l, &r)
}

/// Pairs two lists of simple modules up to isomorphism, or reports the first
/// isomorphism class whose multiplicities differ. Simplicity is assumed, not checked.
pub fn match_simple_factors(left: &[&ModuleRep], right: &[&ModuleRep]) -> Result<JordanHolder> {
    let all: Vec<&ModuleRep> = left.iter().chain(right).copied().collect();
    let classes = classify_simple(&all)?;
    let (lc, rc) = classes.split_at(left.len());

    let num_classes = classes.iter().map(|(c, _)| c + 1).max().unwrap_or(0);
    for c in 0..num_classes {
        let l = lc.iter().filter(|(k, _)| *k == c).count();
        let r = rc.iter().filter(|(k, _)| *k == c).count();
        if l != r {
            let dim = all[classes.iter().position(|(k, _)| *k == c).expect("class is populated")].dim();
            return Ok(JordanHolder::Mismatch(ClassMismatch { class: c + 1, dim, left_count: l, right_count: r }));
        }
    }

    let mut used = vec![false; right.len()];
    let mut pairs = Vec::with_capacity(left.len());
    for (i, (c, to_left)) in lc.iter().enumerate() {
        let j = (0..right.len()).find(|&j| !used[j] && rc[j].0 == *c).expect("class counts agree");
        used[j] = true;
        // left factor → representative → right factor
        let m = rc[j].1.matrix().mul(to_left.inverse().matrix());
        let witness = IsoWitness::new(m, left[i], right[j])
            .map_err(|_| Error::Internal("composed class witness failed verification".into()))?;
        pairs.push(FactorPair { left: i, right: j, witness });
    }
    Ok(JordanHolder::Isomorphic(SeriesPairing { pairs }))
}

/// Whether no series strictly between consecutive terms can be inserted, i.e. every
/// factor is simple.
pub fn is_unrefinable(s: &NormalSeries, cfg: &SearchConfig) -> Result<bool> {
    ensure_finite(s)?;
    for q in factors(s)? {
        if !is_simple(q.quotient(), cfg)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::EnumerationOrder;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    fn nilpotent() -> ModuleRep {
        ModuleRep::from_raw(2, 2, &[vec![vec![0, 1], vec![0, 0]]]).unwrap()
    }

    fn gf4() -> ModuleRep {
        ModuleRep::from_raw(2, 2, &[vec![vec![0, 1], vec![1, 1]]]).unwrap()
    }

    fn span(rep: &ModuleRep, vs: &[&[u32]]) -> SubspaceBasis {
        SubspaceBasis::from_vectors(rep.field(), rep.dim(), &vs.iter().map(|v| v.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn sub(rep: &ModuleRep, vs: &[&[u32]]) -> Submodule {
        rep.submodule(span(rep, vs)).unwrap()
    }

    fn clauses(r: Result<()>) -> Vec<SeriesClause> {
        match r {
            Err(Error::InvalidSeries(v)) => v.into_iter().map(|x| x.clause).collect(),
            other => panic!("expected invalid series, got {other:?}"),
        }
    }

    #[test]
    fn validation() {
        let rep = nilpotent();
        assert!(validate_normal_series(&NormalSeries::trivial(&rep)).is_ok());
        let line = span(&rep, &[&[1, 0]]);
        let full = SubspaceBasis::full(rep.field(), 2);
        let zero = SubspaceBasis::zero(rep.field(), 2);
        let good = NormalSeries::new(rep.clone(), vec![zero.clone(), line.clone(), full.clone()]);
        assert!(validate_normal_series(&good).is_ok());

        let repeated = NormalSeries::new(rep.clone(), vec![zero.clone(), line.clone(), line.clone(), full.clone()]);
        assert_eq!(clauses(validate_normal_series(&repeated)), vec![SeriesClause::NotStrict]);

        let unstable = NormalSeries::new(rep.clone(), vec![zero.clone(), span(&rep, &[&[0, 1]]), full.clone()]);
        assert_eq!(clauses(validate_normal_series(&unstable)), vec![SeriesClause::NotSubmodule]);

        let no_ends = NormalSeries::new(rep.clone(), vec![line.clone()]);
        assert_eq!(
            clauses(validate_normal_series(&no_ends)),
            vec![SeriesClause::FirstTermNotZero, SeriesClause::LastTermNotFull]
        );
    }

    #[test]
    fn label_clauses() {
        let rep = nilpotent();
        let line = span(&rep, &[&[1, 0]]);
        let full = SubspaceBasis::full(rep.field(), 2);
        let zero = SubspaceBasis::zero(rep.field(), 2);
        let terms = vec![zero, line, full];
        let n = |k| Ordinal::nat(k);

        let gap = NormalSeries::with_labels(rep.clone(), terms.clone(), vec![n(1), n(2), n(4)]);
        assert_eq!(clauses(validate_normal_series(&gap)), vec![SeriesClause::LabelGap]);

        let limit = NormalSeries::with_labels(rep.clone(), terms.clone(), vec![n(1), n(2), Ordinal::omega()]);
        assert_eq!(clauses(validate_normal_series(&limit)), vec![SeriesClause::LimitUnion]);

        let order = NormalSeries::with_labels(rep.clone(), terms.clone(), vec![n(1), n(3), n(2)]);
        assert!(clauses(validate_normal_series(&order)).contains(&SeriesClause::LabelOrder));

        let first = NormalSeries::with_labels(rep.clone(), terms, vec![n(0), n(1), n(2)]);
        assert_eq!(clauses(validate_normal_series(&first)), vec![SeriesClause::FirstLabel]);
    }

    #[test]
    fn composition_examples() {
        let s = composition_series(&gf4(), &cfg()).unwrap();
        assert_eq!(s.dims(), vec![0, 2]);

        let rep = nilpotent();
        let s = composition_series(&rep, &cfg()).unwrap();
        assert_eq!(s.terms()[1], span(&rep, &[&[1, 0]]));
        let fs = factors(&s).unwrap();
        assert_eq!(fs.len(), 2);
        for q in &fs {
            assert_eq!(q.quotient().gens()[0].row_vecs(), vec![vec![0]]);
        }

        let flat = ModuleRep::from_raw(2, 3, &[]).unwrap();
        let s = composition_series(&flat, &cfg()).unwrap();
        assert_eq!(s.dims(), vec![0, 1, 2, 3]);
        assert!(validate_normal_series(&s).is_ok());

        let zero = ModuleRep::from_raw(3, 0, &[]).unwrap();
        assert_eq!(composition_series(&zero, &cfg()).unwrap().len(), 1);
    }

    #[test]
    fn refinement_examples() {
        let flat = ModuleRep::from_raw(2, 3, &[]).unwrap();
        let flag = composition_series(&flat, &cfg()).unwrap();
        let trivial = NormalSeries::trivial(&flat);
        assert_eq!(is_refinement(&flag, &flag).unwrap(), Some(vec![0, 1, 2, 3]));
        assert_eq!(is_refinement(&flag, &trivial).unwrap(), Some(vec![0, 3]));
        assert_eq!(is_refinement(&trivial, &flag).unwrap(), None);
    }

    #[test]
    fn butterfly_on_flat_lattice() {
        let rep = ModuleRep::from_raw(2, 3, &[]).unwrap();
        let ut = sub(&rep, &[&[1, 0, 0], &[0, 1, 0]]);
        let wt = sub(&rep, &[&[0, 1, 0], &[0, 0, 1]]);
        let zero = rep.zero_submodule();
        let b = zassenhaus_witness(&ut, &zero, &wt, &zero).unwrap();
        assert_eq!(b.left.dim(), 1);
        assert_eq!(b.right.dim(), 1);
        assert_eq!(b.domain.basis(), &span(&rep, &[&[0, 1, 0]]));
        assert!(b.kernel.is_zero());
        assert!(b.witness.verify(b.left.quotient(), b.right.quotient()));
    }

    #[test]
    fn butterfly_degenerate_cases() {
        let rep = gf4();
        let full = rep.full_submodule();
        let zero = rep.zero_submodule();
        let b = zassenhaus_witness(&full, &full, &full, &full).unwrap();
        assert_eq!((b.left.dim(), b.right.dim()), (0, 0));
        let b = zassenhaus_witness(&full, &zero, &full, &zero).unwrap();
        assert_eq!(b.left.dim(), 2);
        assert_eq!(b.left.quotient(), &rep);
        assert!(b.witness.verify(&rep, &rep));

        let line = sub(&nilpotent(), &[&[1, 0]]);
        let nil = line.parent().clone();
        assert!(matches!(
            zassenhaus_witness(&nil.zero_submodule(), &line, &nil.full_submodule(), &nil.zero_submodule()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn schreier_examples() {
        let flat = ModuleRep::from_raw(2, 3, &[]).unwrap();
        let a = composition_series(&flat, &cfg()).unwrap();
        let b = composition_series(&flat, &cfg().with_order(EnumerationOrder::Reverse)).unwrap();
        assert_ne!(a, b);

        let r = schreier_refine(&a, &a).unwrap();
        assert_eq!(r.left, a);
        assert_eq!(r.right, a);
        assert!(r.pairing.pairs.iter().all(|p| p.left == p.right));

        let trivial = NormalSeries::trivial(&flat);
        let r = schreier_refine(&trivial, &a).unwrap();
        assert_eq!(r.left.terms(), a.terms());
        assert!(r.pairing.verify(&factors(&r.left).unwrap(), &factors(&r.right).unwrap()));

        let r = schreier_refine(&a, &b).unwrap();
        assert_eq!(r.left.len(), 4);
        assert_eq!(r.right.len(), 4);
        assert_eq!(r.pairing.pairs.len(), 3);
        assert!(r.pairing.verify(&factors(&r.left).unwrap(), &factors(&r.right).unwrap()));
        assert!(is_refinement(&r.left, &a).unwrap().is_some());
        assert!(is_refinement(&r.right, &b).unwrap().is_some());
    }

    #[test]
    fn schreier_rejects_transfinite_labels() {
        let rep = gf4();
        let s = NormalSeries::with_labels(
            rep.clone(),
            NormalSeries::trivial(&rep).terms().to_vec(),
            vec![Ordinal::one(), Ordinal::omega()],
        );
        assert!(matches!(schreier_refine(&s, &s), Err(Error::Unsupported(_))));
    }

    #[test]
    fn jordan_holder_examples() {
        let flat = ModuleRep::from_raw(2, 3, &[]).unwrap();
        let a = composition_series(&flat, &cfg()).unwrap();
        let b = composition_series(&flat, &cfg().with_order(EnumerationOrder::Reverse)).unwrap();
        match jordan_holder_check(&a, &a, &cfg()).unwrap() {
            JordanHolder::Isomorphic(p) => assert!(p.pairs.iter().all(|x| x.left == x.right)),
            JordanHolder::Mismatch(m) => panic!("{m:?}"),
        }
        match jordan_holder_check(&a, &b, &cfg()).unwrap() {
            JordanHolder::Isomorphic(p) => {
                assert_eq!(p.pairs.len(), 3);
                assert!(p.verify(&factors(&a).unwrap(), &factors(&b).unwrap()));
            }
            JordanHolder::Mismatch(m) => panic!("{m:?}"),
        }
        let coarse = NormalSeries::trivial(&flat);
        assert_eq!(jordan_holder_check(&coarse, &a, &cfg()).unwrap_err(), Error::NotCompositionSeries { index: 1 });
    }

    #[test]
    fn jordan_holder_on_gf4_squared() {
        let g = gf4();
        let gens = vec![Mat::block_diag(g.field(), &[&g.gens()[0], &g.gens()[0]])];
        let rep = ModuleRep::new(g.field(), 4, gens).unwrap();
        let a = composition_series(&rep, &cfg()).unwrap();
        let b = composition_series(&rep, &cfg().with_order(EnumerationOrder::Reverse)).unwrap();
        assert_eq!(a.dims(), vec![0, 2, 4]);
        let JordanHolder::Isomorphic(p) = jordan_holder_check(&a, &b, &cfg()).unwrap() else {
            panic!("mismatch");
        };
        for q in factors(&a).unwrap() {
            assert!(schur_isomorphism(q.quotient(), &g).unwrap().is_some());
        }
        assert_eq!(p.pairs.len(), 2);
    }

    #[test]
    fn factor_order_may_differ() {
        // GF(4) ⊕ trivial: the series through the trivial line and the series through
        // the GF(4) block list the same two factors in opposite order.
        let g = gf4();
        let z = Mat::zeros(g.field(), 1, 1);
        let rep = ModuleRep::new(g.field(), 3, vec![Mat::block_diag(g.field(), &[&g.gens()[0], &z])]).unwrap();
        let a = composition_series(&rep, &cfg()).unwrap();
        assert_eq!(a.dims(), vec![0, 1, 3]);
        let other = NormalSeries::from_submodules(
            rep.clone(),
            &[rep.zero_submodule(), sub(&rep, &[&[1, 0, 0], &[0, 1, 0]]), rep.full_submodule()],
        )
        .unwrap();
        let JordanHolder::Isomorphic(p) = jordan_holder_check(&a, &other, &cfg()).unwrap() else {
            panic!("mismatch");
        };
        assert_eq!((p.pairs[0].left, p.pairs[0].right), (0, 1));
        assert_eq!((p.pairs[1].left, p.pairs[1].right), (1, 0));
    }

    #[test]
    fn mismatched_multiplicities() {
        let g = gf4();
        let one = ModuleRep::from_raw(2, 1, &[vec![vec![0]]]).unwrap();
        match match_simple_factors(&[&g, &one], &[&one, &one]).unwrap() {
            JordanHolder::Mismatch(m) => {
                assert_eq!(m, ClassMismatch { class: 1, dim: 2, left_count: 1, right_count: 0 })
            }
            JordanHolder::Isomorphic(_) => panic!("should not match"),
        }
    }

    #[test]
    fn unrefinable() {
        assert!(is_unrefinable(&NormalSeries::trivial(&gf4()), &cfg()).unwrap());
        let plane = ModuleRep::from_raw(2, 2, &[]).unwrap();
        assert!(!is_unrefinable(&NormalSeries::trivial(&plane), &cfg()).unwrap());
        let s = composition_series(&nilpotent(), &cfg()).unwrap();
        assert!(is_unrefinable(&s, &cfg()).unwrap());
        let r = schreier_refine(&s, &s).unwrap();
        assert_eq!(r.left, s);
    }
}
