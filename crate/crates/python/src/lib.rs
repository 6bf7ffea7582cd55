//! Python bindings: modules, series, butterflies, direct sums and ordinals.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use modseries::text::{parse_module, parse_series, render_module, render_series};
use modseries::{
    canonical_sum_series, composition_series, external_direct_sum, is_isomorphic, is_simple, is_unrefinable,
    jordan_holder_check, schreier_refine, validate_normal_series, zassenhaus_witness, EnumerationOrder, Error,
    JordanHolder, Mat, ModuleRep, NormalSeries, Ordinal, OrdinalKind, SearchConfig, SeriesPairing, SubspaceBasis,
    SymbolicSumSeries,
};

create_exception!(pymodseries, ModSeriesError, PyValueError);

fn err(e: Error) -> PyErr {
    ModSeriesError::new_err(e.to_string())
}

fn config(max_enum: u64, seed: u64, reverse: bool) -> SearchConfig {
    let order = if reverse { EnumerationOrder::Reverse } else { EnumerationOrder::Lexicographic };
    SearchConfig { max_enum, seed, order, ..SearchConfig::default() }
}

type Rows = Vec<Vec<u32>>;

fn rows(m: &Mat) -> Rows {
    m.row_vecs()
}

/// `(left factor, right factor, witness)` triples.
type Pairs = Vec<(usize, usize, Rows)>;

fn pairs(p: &SeriesPairing) -> Pairs {
    p.pairs.iter().map(|x| (x.left, x.right, rows(x.witness.matrix()))).collect()
}

/// A module GF(p)^dim with generator matrices acting on column vectors.
#[pyclass(name = "Module", module = "pymodseries", frozen, from_py_object)]
#[derive(Clone)]
struct PyModuleRep {
    inner: ModuleRep,
}

impl PyModuleRep {
    fn subspace(&self, vectors: Rows) -> PyResult<SubspaceBasis> {
        SubspaceBasis::from_vectors(self.inner.field(), self.inner.dim(), &vectors).map_err(err)
    }
}

#[pymethods]
impl PyModuleRep {
    #[new]
    fn new(p: u64, dim: usize, gens: Vec<Vec<Vec<u64>>>) -> PyResult<Self> {
        Ok(PyModuleRep { inner: ModuleRep::from_raw(p, dim, &gens).map_err(err)? })
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyModuleRep { inner: parse_module(text).map_err(err)? })
    }

    fn to_text(&self) -> String {
        render_module(&self.inner)
    }

    #[getter]
    fn p(&self) -> u32 {
        self.inner.field().modulus()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn gens(&self) -> Vec<Rows> {
        self.inner.gens().iter().map(rows).collect()
    }

    /// Canonical basis of the submodule generated by `vectors`.
    fn spin(&self, vectors: Rows) -> PyResult<Rows> {
        Ok(self.inner.spin(&vectors).map_err(err)?.basis().rows().to_vec())
    }

    fn is_submodule(&self, vectors: Rows) -> PyResult<bool> {
        self.inner.is_submodule(&self.subspace(vectors)?).map_err(err)
    }

    #[pyo3(signature = (max_enum = 4096, seed = 0))]
    fn is_simple(&self, max_enum: u64, seed: u64) -> PyResult<bool> {
        is_simple(&self.inner, &config(max_enum, seed, false)).map_err(err)
    }

    #[pyo3(signature = (reverse = false, max_enum = 4096, seed = 0))]
    fn composition_series(&self, reverse: bool, max_enum: u64, seed: u64) -> PyResult<PySeries> {
        Ok(PySeries { inner: composition_series(&self.inner, &config(max_enum, seed, reverse)).map_err(err)? })
    }

    fn __repr__(&self) -> String {
        format!("Module(p={}, dim={}, gens={})", self.p(), self.dim(), self.inner.num_gens())
    }
}

/// A labelled chain of submodules from zero to the whole module.
#[pyclass(name = "Series", module = "pymodseries", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySeries {
    inner: NormalSeries,
}

#[pymethods]
impl PySeries {
    /// Terms given as lists of spanning vectors, labelled 1, 2, ….
    #[new]
    fn new(module: &PyModuleRep, terms: Vec<Rows>) -> PyResult<Self> {
        let bases = terms.into_iter().map(|t| module.subspace(t)).collect::<PyResult<Vec<_>>>()?;
        Ok(PySeries { inner: NormalSeries::new(module.inner.clone(), bases) })
    }

    #[staticmethod]
    fn from_text(module: &PyModuleRep, text: &str) -> PyResult<Self> {
        Ok(PySeries { inner: parse_series(text, &module.inner).map_err(err)? })
    }

    fn to_text(&self) -> String {
        render_series(&self.inner)
    }

    #[getter]
    fn module(&self) -> PyModuleRep {
        PyModuleRep { inner: self.inner.parent().clone() }
    }

    #[getter]
    fn dims(&self) -> Vec<usize> {
        self.inner.dims()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().iter().map(ToString::to_string).collect()
    }

    #[getter]
    fn terms(&self) -> Vec<Rows> {
        self.inner.terms().iter().map(|t| t.rows().to_vec()).collect()
    }

    /// Raises `ModSeriesError` naming the first violated clause.
    fn validate(&self) -> PyResult<()> {
        validate_normal_series(&self.inner).map_err(err)
    }

    #[pyo3(signature = (max_enum = 4096, seed = 0))]
    fn is_unrefinable(&self, max_enum: u64, seed: u64) -> PyResult<bool> {
        is_unrefinable(&self.inner, &config(max_enum, seed, false)).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Series(dims={:?})", self.dims())
    }
}

/// Outcome of a Jordan-Hölder comparison. `pairs` holds `(left, right, witness)`
/// with 0-based factor indices; `mismatch` is `(class, dim, left_count, right_count)`.
#[pyclass(name = "JordanHolderResult", module = "pymodseries", frozen, get_all)]
struct PyJordanHolder {
    isomorphic: bool,
    pairs: Pairs,
    mismatch: Option<(usize, usize, usize, usize)>,
}

#[pyfunction]
#[pyo3(signature = (s, t, max_enum = 4096, seed = 0))]
fn jordan_holder(s: &PySeries, t: &PySeries, max_enum: u64, seed: u64) -> PyResult<PyJordanHolder> {
    Ok(match jordan_holder_check(&s.inner, &t.inner, &config(max_enum, seed, false)).map_err(err)? {
        JordanHolder::Isomorphic(p) => PyJordanHolder { isomorphic: true, pairs: pairs(&p), mismatch: None },
        JordanHolder::Mismatch(m) => PyJordanHolder {
            isomorphic: false,
            pairs: Vec::new(),
            mismatch: Some((m.class, m.dim, m.left_count, m.right_count)),
        },
    })
}

/// Returns `(left refinement, right refinement, pairs)`.
#[pyfunction]
fn refine(s: &PySeries, t: &PySeries) -> PyResult<(PySeries, PySeries, Pairs)> {
    let r = schreier_refine(&s.inner, &t.inner).map_err(err)?;
    Ok((PySeries { inner: r.left }, PySeries { inner: r.right }, pairs(&r.pairing)))
}

/// Butterfly for `U ⊆ Ũ`, `W ⊆ W̃` (each given by spanning vectors). Returns
/// `(left dim, right dim, common kernel basis, witness)`.
#[pyfunction]
fn zassenhaus(
    module: &PyModuleRep,
    upper_u: Rows,
    lower_u: Rows,
    upper_w: Rows,
    lower_w: Rows,
) -> PyResult<(usize, usize, Rows, Rows)> {
    let sub = |v: Rows| -> PyResult<_> { module.inner.submodule(module.subspace(v)?).map_err(err) };
    let b = zassenhaus_witness(&sub(upper_u)?, &sub(lower_u)?, &sub(upper_w)?, &sub(lower_w)?).map_err(err)?;
    Ok((b.left.dim(), b.right.dim(), b.kernel.basis().rows().to_vec(), rows(b.witness.matrix())))
}

/// An isomorphism `a → b` as a matrix, or `None`.
#[pyfunction]
#[pyo3(signature = (a, b, max_enum = 4096, seed = 0))]
fn isomorphism(a: &PyModuleRep, b: &PyModuleRep, max_enum: u64, seed: u64) -> PyResult<Option<Rows>> {
    let w = is_isomorphic(&a.inner, &b.inner, &config(max_enum, seed, false)).map_err(err)?;
    Ok(w.map(|w| rows(w.matrix())))
}

/// Block-diagonal sum and its canonical series.
#[pyfunction]
#[pyo3(signature = (parts, max_enum = 4096, seed = 0))]
fn direct_sum(parts: Vec<PyModuleRep>, max_enum: u64, seed: u64) -> PyResult<(PyModuleRep, PySeries)> {
    let cfg = config(max_enum, seed, false);
    let parts: Vec<ModuleRep> = parts.into_iter().map(|p| p.inner).collect();
    let dec = external_direct_sum(&parts, &cfg).map_err(err)?;
    let series = canonical_sum_series(&dec, &cfg).map_err(err)?;
    Ok((PyModuleRep { inner: dec.total().clone() }, PySeries { inner: series }))
}

/// An ordinal below ε₀ in Cantor normal form, written like `w^2*3+w+5`.
#[pyclass(name = "Ordinal", module = "pymodseries", frozen, eq, ord, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Hash)]
struct PyOrdinal {
    inner: Ordinal,
}

#[pymethods]
impl PyOrdinal {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyOrdinal { inner: text.parse().map_err(err)? })
    }

    fn __add__(&self, other: &PyOrdinal) -> PyOrdinal {
        PyOrdinal { inner: &self.inner + &other.inner }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Ordinal('{}')", self.inner)
    }

    /// `"zero"`, `"successor"` or `"limit"`.
    #[getter]
    fn kind(&self) -> &'static str {
        match self.inner.kind() {
            OrdinalKind::Zero => "zero",
            OrdinalKind::Successor => "successor",
            OrdinalKind::Limit => "limit",
        }
    }

    #[getter]
    fn is_finite(&self) -> bool {
        self.inner.is_finite()
    }

    #[getter]
    fn cardinality(&self) -> String {
        self.inner.cardinality().to_string()
    }

    fn successor(&self) -> PyOrdinal {
        PyOrdinal { inner: self.inner.successor() }
    }
}

/// Whether sums of `n` and `m` copies of one simple module are isomorphic.
#[pyfunction]
fn symbolic_iso(n: &str, m: &str) -> PyResult<bool> {
    let len = |s: &str| s.parse::<Ordinal>().map_err(err);
    let (a, b) = (SymbolicSumSeries::new(len(n)?, "U"), SymbolicSumSeries::new(len(m)?, "U"));
    modseries::symbolic_iso(&a, &b).map_err(err)
}

#[pymodule]
fn pymodseries(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ModSeriesError", m.py().get_type::<ModSeriesError>())?;
    m.add_class::<PyModuleRep>()?;
    m.add_class::<PySeries>()?;
    m.add_class::<PyJordanHolder>()?;
    m.add_class::<PyOrdinal>()?;
    m.add_function(wrap_pyfunction!(jordan_holder, m)?)?;
    m.add_function(wrap_pyfunction!(refine, m)?)?;
    m.add_function(wrap_pyfunction!(zassenhaus, m)?)?;
    m.add_function(wrap_pyfunction!(isomorphism, m)?)?;
    m.add_function(wrap_pyfunction!(direct_sum, m)?)?;
    m.add_function(wrap_pyfunction!(symbolic_iso, m)?)?;
    Ok(())
}
