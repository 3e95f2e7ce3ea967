//! Python bindings: graded groups, the four grading transformations, detection
//! predicates, h-functions, surgery homology and the atlas.

use hfl::atlas;
use hfl::format::GroupFile;
use hfl::graded::{self, CollapsedGroup, Grading2x, MultiGradedGroup};
use hfl::hfunction::{self, AlexanderPolynomial};
use hfl::surgery::{self, H1Order, IntMatrix, SurgeryMatrix};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(e: hfl::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An Alexander grading given as an int or as a string such as "1/2".
#[derive(FromPyObject)]
enum GradingArg {
    Int(i64),
    Text(String),
}

impl GradingArg {
    fn into_grading(self) -> PyResult<Grading2x> {
        match self {
            GradingArg::Int(v) => Ok(Grading2x::from_int(v)),
            GradingArg::Text(s) => s.parse().map_err(value_error),
        }
    }
}

fn fraction<'py>(py: Python<'py>, g: Grading2x) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((g.doubled(), 2))
}

#[pyclass(name = "CollapsedGroup", module = "hfl_atlas", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyCollapsed(CollapsedGroup);

#[pymethods]
impl PyCollapsed {
    /// `terms` is a list of `(d, s, rank)`.
    #[new]
    fn new(n: usize, terms: Vec<(i64, GradingArg, u64)>) -> PyResult<Self> {
        let terms = terms
            .into_iter()
            .map(|(d, s, r)| Ok((d, s.into_grading()?, r)))
            .collect::<PyResult<Vec<_>>>()?;
        CollapsedGroup::from_terms(n, terms).map(PyCollapsed).map_err(value_error)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Vec<(i64, Bound<'py, PyAny>, u64)>> {
        self.0.iter().map(|(d, s, r)| Ok((d, fraction(py, s)?, r))).collect()
    }

    fn rank(&self, d: i64, s: GradingArg) -> PyResult<u64> {
        Ok(self.0.rank(d, s.into_grading()?))
    }

    fn total_rank(&self) -> u64 {
        self.0.total_rank()
    }

    fn s_top<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, graded::s_top(&self.0).map_err(value_error)?)
    }

    fn is_fibered(&self) -> PyResult<bool> {
        graded::is_fibered(&self.0).map_err(value_error)
    }

    fn is_nearly_fibered(&self) -> PyResult<bool> {
        graded::is_nearly_fibered(&self.0).map_err(value_error)
    }

    fn check_symmetry(&self) -> bool {
        self.0.check_symmetry()
    }

    fn mirror(&self) -> Self {
        PyCollapsed(graded::mirror(&self.0))
    }

    fn to_file(&self) -> String {
        GroupFile::from(self.0.clone()).to_string()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("CollapsedGroup(n={}, {})", self.0.n(), self.0)
    }
}

#[pyclass(name = "MultiGradedGroup", module = "hfl_atlas", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMulti(MultiGradedGroup);

#[pymethods]
impl PyMulti {
    /// `terms` is a list of `(d, [s_1, ..., s_n], rank)`.
    #[new]
    fn new(n: usize, terms: Vec<(i64, Vec<GradingArg>, u64)>) -> PyResult<Self> {
        let terms = terms
            .into_iter()
            .map(|(d, s, r)| {
                let s = s.into_iter().map(GradingArg::into_grading).collect::<PyResult<Vec<_>>>()?;
                Ok((d, s, r))
            })
            .collect::<PyResult<Vec<_>>>()?;
        MultiGradedGroup::from_terms(n, terms).map(PyMulti).map_err(value_error)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Vec<(i64, Vec<Bound<'py, PyAny>>, u64)>> {
        self.0
            .iter()
            .map(|(d, s, r)| {
                let s = s.iter().map(|&g| fraction(py, g)).collect::<PyResult<Vec<_>>>()?;
                Ok((d, s, r))
            })
            .collect()
    }

    fn total_rank(&self) -> u64 {
        self.0.total_rank()
    }

    fn check_symmetry(&self) -> bool {
        self.0.check_symmetry()
    }

    fn collapse(&self) -> PyResult<PyCollapsed> {
        graded::collapse(&self.0).map(PyCollapsed).map_err(value_error)
    }

    /// Reverse component `component` (1-based); `lk` is its linking number
    /// with the rest of the input link.
    fn reverse_component(&self, component: usize, lk: i64) -> PyResult<Self> {
        graded::reverse_component(&self.0, component, lk).map(PyMulti).map_err(value_error)
    }

    fn to_file(&self) -> String {
        GroupFile::from(self.0.clone()).to_string()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("MultiGradedGroup(n={}, {})", self.0.n(), self.0)
    }
}

#[pyfunction]
fn disjoint_union(left: &PyCollapsed, right: &PyCollapsed) -> PyCollapsed {
    PyCollapsed(graded::disjoint_union(&left.0, &right.0))
}

/// Parses a group file; returns a `CollapsedGroup` or a `MultiGradedGroup`.
#[pyfunction]
fn parse_group_file(py: Python<'_>, text: &str) -> PyResult<Py<PyAny>> {
    match text.parse::<GroupFile>().map_err(value_error)? {
        GroupFile::Collapsed(g) => Ok(Py::new(py, PyCollapsed(g))?.into_any()),
        GroupFile::MultiGraded(g) => Ok(Py::new(py, PyMulti(g))?.into_any()),
    }
}

#[pyfunction]
fn torsion_coefficient(poly: &str, k: i64) -> PyResult<i64> {
    let poly: AlexanderPolynomial = poly.parse().map_err(value_error)?;
    Ok(hfunction::torsion_coefficient(&poly, k))
}

/// `[(k, h(k))]` for `lo <= k <= hi`.
#[pyfunction]
#[pyo3(signature = (poly, lo = -5, hi = 5))]
fn h_function(poly: &str, lo: i64, hi: i64) -> PyResult<Vec<(i64, i64)>> {
    let poly: AlexanderPolynomial = poly.parse().map_err(value_error)?;
    let h = hfunction::h_from_alexander(&poly).map_err(value_error)?;
    Ok(h.table(lo, hi))
}

#[pyfunction]
fn trefoil_cable_h_diagonal(k: i64) -> i64 {
    hfunction::trefoil_cable_h_diagonal(k)
}

fn to_matrix(rows: Vec<Vec<BigInt>>) -> PyResult<IntMatrix> {
    IntMatrix::new(rows).map_err(value_error)
}

fn from_matrix(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.dim()).map(|i| (0..m.dim()).map(|j| m.get(i, j).clone()).collect()).collect()
}

#[pyfunction]
fn chain_matrix(a: i64, b: i64) -> Vec<Vec<BigInt>> {
    from_matrix(surgery::chain_matrix(a, b).matrix())
}

#[pyfunction]
fn zero_surgery_matrix(lk: i64) -> Vec<Vec<BigInt>> {
    from_matrix(surgery::zero_surgery_matrix(lk).matrix())
}

#[pyfunction]
fn det(rows: Vec<Vec<BigInt>>) -> PyResult<BigInt> {
    Ok(to_matrix(rows)?.determinant())
}

#[pyfunction]
fn smith_normal_form(rows: Vec<Vec<BigInt>>) -> PyResult<Vec<BigInt>> {
    Ok(to_matrix(rows)?.invariant_factors())
}

/// Order of H_1 for a symmetric linking matrix; `None` when infinite.
#[pyfunction]
fn h1_order(rows: Vec<Vec<BigInt>>) -> PyResult<Option<BigInt>> {
    let m = SurgeryMatrix::new(to_matrix(rows)?).map_err(value_error)?;
    Ok(match surgery::h1_order(&m) {
        H1Order::Finite(n) => Some(n),
        H1Order::Infinite => None,
    })
}

#[pyfunction]
fn solve_framing_constraint(target: u64, range: i64) -> Vec<(i64, i64)> {
    surgery::solve_framing_constraint(target, range).into_iter().collect()
}

#[pyfunction]
fn catalog_names() -> Vec<String> {
    atlas::catalog().iter().map(|e| e.name.clone()).collect()
}

#[pyfunction]
fn catalog_group(name: &str) -> PyResult<PyCollapsed> {
    atlas::find(name)
        .map(|e| PyCollapsed(e.collapsed.clone()))
        .ok_or_else(|| PyValueError::new_err(format!("no catalog entry named {name:?}")))
}

#[pyfunction]
fn catalog_multigraded(name: &str) -> PyResult<Option<PyMulti>> {
    atlas::find(name)
        .map(|e| e.multigraded.clone().map(PyMulti))
        .ok_or_else(|| PyValueError::new_err(format!("no catalog entry named {name:?}")))
}

/// Classification record as text, e.g. "fibered-genus-1: T₂,₃".
#[pyfunction]
fn classify(group: &PyCollapsed) -> PyResult<String> {
    atlas::classify(&group.0).map(|c| c.to_string()).map_err(value_error)
}

/// Discrepancy report lines from rebuilding the table.
#[pyfunction]
fn rebuild_table() -> Vec<String> {
    atlas::rebuild_table().discrepancies.iter().map(ToString::to_string).collect()
}

#[pyfunction]
fn table() -> String {
    hfl::cli::table_text()
}

#[pyfunction]
fn verify() -> bool {
    hfl::verify::verify().passed()
}

#[pymodule]
fn hfl_atlas(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCollapsed>()?;
    m.add_class::<PyMulti>()?;
    m.add_function(wrap_pyfunction!(disjoint_union, m)?)?;
    m.add_function(wrap_pyfunction!(parse_group_file, m)?)?;
    m.add_function(wrap_pyfunction!(torsion_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(h_function, m)?)?;
    m.add_function(wrap_pyfunction!(trefoil_cable_h_diagonal, m)?)?;
    m.add_function(wrap_pyfunction!(chain_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(zero_surgery_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(det, m)?)?;
    m.add_function(wrap_pyfunction!(smith_normal_form, m)?)?;
    m.add_function(wrap_pyfunction!(h1_order, m)?)?;
    m.add_function(wrap_pyfunction!(solve_framing_constraint, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_group, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_multigraded, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(rebuild_table, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
