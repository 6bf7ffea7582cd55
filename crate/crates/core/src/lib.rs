//! Exact computations with left modules over matrix algebras over GF(p).
//!
//! A module is GF(p)^d with a list of generator matrices acting on column vectors.
//! On top of exact linear algebra the crate provides submodule lattices, quotients,
//! composition series, the butterfly (Zassenhaus) isomorphism, Schreier refinement,
//! Jordan-Hölder matching, direct sums, and a Cantor-normal-form ordinal type used
//! to label series.
//!
//! ```
//! use modseries::{composition_series, ModuleRep, SearchConfig};
//!
//! // x ↦ [[0,1],[0,0]] x over GF(2): a single proper submodule, span{e1}
//! let rep = ModuleRep::from_raw(2, 2, &[vec![vec![0, 1], vec![0, 0]]]).unwrap();
//! let series = composition_series(&rep, &SearchConfig::default()).unwrap();
//! assert_eq!(series.dims(), vec![0, 1, 2]);
//! ```

pub mod direct_sum;
pub mod error;
pub mod field;
pub mod hom;
pub mod matrix;
pub mod module;
pub mod ordinal;
pub mod quotient;
pub mod search;
pub mod series;
pub mod subspace;
pub mod text;

pub use direct_sum::{
    canonical_sum_series, external_direct_sum, symbolic_iso, uniqueness_check, validate_symbolic_series,
    SumDecomposition, SymbolicReport, SymbolicSumSeries,
};
pub use error::{Error, Result, SeriesClause, SeriesViolation};
pub use field::FieldSpec;
pub use hom::{hom_space, intertwines};
pub use matrix::Mat;
pub use module::{validate_module, ModuleRep, ModuleReport, Submodule};
pub use ordinal::{Cardinality, Ordinal, OrdinalKind};
pub use quotient::{quotient, subquotient, QuotientRep};
pub use search::{
    is_isomorphic, is_simple, minimal_submodule, schur_isomorphism, EnumerationOrder, IsoWitness, SearchConfig,
};
pub use series::{
    classify_simple, composition_series, factors, is_refinement, is_unrefinable, jordan_holder_check,
    match_simple_factors, schreier_refine, validate_normal_series, zassenhaus_witness, Butterfly, ClassMismatch,
    FactorList, FactorPair, JordanHolder, NormalSeries, SchreierRefinement, SeriesPairing,
};
pub use subspace::SubspaceBasis;
