//! Python bindings. Exact coefficients come back as `fractions.Fraction`;
//! t-polynomials as lists of them, constant term first.

use deutsch_paths::asymptotics::{self, SeriesCache};
use deutsch_paths::cli::{run_checks, VerifyOptions};
use deutsch_paths::closedforms::{self, ClosedFormError};
use deutsch_paths::fps::{Rational, Series, TPoly};
use deutsch_paths::paths::{self, Enumerator, PathError, DEFAULT_CAP};
use deutsch_paths::slices;
use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;
use pyo3::sync::PyOnceLock;
use pyo3::types::{PyDict, PyList};

fn path_err(e: PathError) -> PyErr {
    match e {
        PathError::CapExceeded { .. } => PyOverflowError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn closed_err(e: ClosedFormError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

static FRACTION: PyOnceLock<Py<PyAny>> = PyOnceLock::new();

fn fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    let cls = FRACTION.import(py, "fractions", "Fraction")?;
    cls.call1((q.numer().clone(), q.denom().clone()))
}

fn rationals<'py>(py: Python<'py>, coeffs: &[Rational]) -> PyResult<Bound<'py, PyList>> {
    let items = coeffs.iter().map(|c| fraction(py, c)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn tpoly<'py>(py: Python<'py>, p: &TPoly) -> PyResult<Bound<'py, PyList>> {
    rationals(py, p.coeffs())
}

fn series_list<'py>(py: Python<'py>, s: &Series<Rational>) -> PyResult<Bound<'py, PyList>> {
    rationals(py, s.coeffs())
}

fn enumerator(cap: Option<usize>) -> Enumerator {
    Enumerator::with_cap(cap.unwrap_or(DEFAULT_CAP))
}

/// A lattice path with steps `+1` and `-k`, never below the axis.
#[pyclass(name = "Path", module = "deutsch_paths", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyPath {
    inner: paths::Path,
}

#[pymethods]
impl PyPath {
    #[new]
    fn new(steps: Vec<i64>) -> PyResult<Self> {
        paths::Path::from_values(&steps).map(|inner| PyPath { inner }).map_err(path_err)
    }

    #[getter]
    fn steps(&self) -> Vec<i64> {
        self.inner.values()
    }

    #[getter]
    fn levels(&self) -> Vec<u64> {
        self.inner.levels()
    }

    #[getter]
    fn end_level(&self) -> u64 {
        self.inner.end_level()
    }

    fn is_closed(&self) -> bool {
        self.inner.is_closed()
    }

    fn is_dyck(&self) -> bool {
        paths::is_dyck(&self.inner)
    }

    fn stanley_ok(&self) -> PyResult<bool> {
        paths::stanley_ok(&self.inner).map_err(path_err)
    }

    fn returns_to_axis(&self) -> usize {
        self.inner.returns_to_axis()
    }

    fn stats<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let s = paths::stats(&self.inner);
        let d = PyDict::new(py);
        d.set_item("length", s.length)?;
        d.set_item("end_level", s.end_level)?;
        d.set_item("mountains", s.mountains)?;
        d.set_item("single_up_runs", s.single_up_runs)?;
        d.set_item("ends_with_down", s.ends_with_down)?;
        Ok(d)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Path({:?})", self.inner.values())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

/// All paths of length `n` in lexicographic step order.
#[pyfunction]
#[pyo3(signature = (n, cap = None))]
fn enumerate_paths(n: usize, cap: Option<usize>) -> PyResult<Vec<PyPath>> {
    let iter = enumerator(cap).enumerate(n).map_err(path_err)?;
    Ok(iter.map(|inner| PyPath { inner }).collect())
}

/// Brute-force count of length-`n` paths.
///
/// `end_level=None` counts every path; `stanley` and `dyck_only` restrict
/// to closed paths.
#[pyfunction]
#[pyo3(signature = (n, end_level = Some(0), stanley = false, dyck_only = false, cap = None))]
fn count_paths(n: usize, end_level: Option<u64>, stanley: bool, dyck_only: bool, cap: Option<usize>) -> PyResult<u64> {
    if (stanley || dyck_only) && end_level != Some(0) {
        return Err(PyValueError::new_err("stanley and dyck_only need end_level=0"));
    }
    enumerator(cap)
        .count(n, |p, s| {
            end_level.is_none_or(|j| s.end_level == j && (s.ends_with_down || s.length == 0))
                && (!stanley || paths::stanley_ok(p).unwrap_or(false))
                && (!dyck_only || paths::is_dyck(p))
        })
        .map_err(path_err)
}

/// Closed paths of length `n` grouped by `"single_up_runs"` or `"mountains"`.
#[pyfunction]
#[pyo3(signature = (n, by = "single_up_runs", cap = None))]
fn histogram(n: usize, by: &str, cap: Option<usize>) -> PyResult<Vec<(u64, u64)>> {
    let e = enumerator(cap);
    let hist = match by {
        "single_up_runs" => e.histogram(n, |p, _| p.is_closed(), |_, s| s.single_up_runs as u64),
        "mountains" => e.histogram(n, |p, _| p.is_closed(), |_, s| s.mountains as u64),
        other => return Err(PyValueError::new_err(format!("unknown grouping {other:?}"))),
    }
    .map_err(path_err)?;
    Ok(hist.into_iter().collect())
}

/// Coefficients `[z^0..z^order]` of a named series.
///
/// Names: `phi0`, `stanley`, `open`, `motzkin`, `mean_numerator`, `v`,
/// `radical`, `stanley_block`.
#[pyfunction]
fn series<'py>(py: Python<'py>, name: &str, order: usize) -> PyResult<Bound<'py, PyList>> {
    let s = match name {
        "phi0" => closedforms::phi0(order).map_err(closed_err)?,
        "stanley" => closedforms::stanley_series(order).map_err(closed_err)?,
        "open" => closedforms::open_paths(order).map_err(closed_err)?,
        "motzkin" => closedforms::motzkin(order),
        "mean_numerator" => closedforms::mean_numerator(order).map_err(closed_err)?,
        "v" => closedforms::v_series(order),
        "radical" => closedforms::radical(order),
        "stanley_block" => closedforms::stanley_block(order).map_err(closed_err)?,
        other => return Err(PyValueError::new_err(format!("unknown series {other:?}"))),
    };
    series_list(py, &s)
}

/// Closed paths by length with `t` marking single up-runs.
#[pyfunction]
fn marked_series<'py>(py: Python<'py>, order: usize) -> PyResult<Bound<'py, PyList>> {
    let s = closedforms::phi0_t(order).map_err(closed_err)?;
    let rows = s.coeffs().iter().map(|p| tpoly(py, p)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, rows)
}

/// `levels[j][n]`: paths of length `n` ending with a down-run at level `j`,
/// via the slice recurrence.
#[pyfunction]
fn level_series<'py>(py: Python<'py>, order: usize) -> PyResult<Bound<'py, PyList>> {
    let acc = slices::accumulate_plain(order);
    let rows = acc.levels().iter().map(|s| series_list(py, s)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, rows)
}

/// The two kernel roots `(w1, w2)` to the given order.
#[pyfunction]
fn kernel_roots<'py>(py: Python<'py>, order: usize) -> PyResult<(Bound<'py, PyList>, Bound<'py, PyList>)> {
    let roots = closedforms::kernel_roots(order);
    Ok((series_list(py, &roots.w1)?, series_list(py, &roots.w2)?))
}

/// Exact mean of single up-runs against the asymptotic predictions for
/// each `n`; the series are computed once, to `max(ns)`.
#[pyfunction]
fn asymptotic_report<'py>(py: Python<'py>, ns: Vec<usize>) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let order = ns.iter().copied().max().unwrap_or(0);
    let cache = SeriesCache::new(order).map_err(closed_err)?;
    let reports = asymptotics::trend(&ns, &cache).map_err(|e| PyValueError::new_err(e.to_string()))?;
    reports
        .iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("n", r.n)?;
            d.set_item("total", fraction(py, &r.exact_total)?)?;
            d.set_item("weighted", fraction(py, &r.exact_weighted)?)?;
            d.set_item("mean", fraction(py, &r.mean)?)?;
            d.set_item("predicted_mean", r.predicted_mean)?;
            d.set_item("ln_total_prediction", r.ln_total_prediction)?;
            d.set_item("ln_weighted_prediction", r.ln_weighted_prediction)?;
            d.set_item("mean_relative_error", r.mean_relative_error)?;
            d.set_item("total_relative_error", r.total_relative_error)?;
            d.set_item("weighted_relative_error", r.weighted_relative_error)?;
            Ok(d)
        })
        .collect()
}

/// Runs the cross-checks; returns `(name, failure or None)` pairs.
#[pyfunction]
#[pyo3(signature = (max_length = 10, max_order = 30, cap = None))]
fn verify(py: Python<'_>, max_length: usize, max_order: usize, cap: Option<usize>) -> PyResult<Vec<(String, Option<String>)>> {
    let opts = VerifyOptions { max_length, max_order, inject_fault: false };
    let outcomes = py.detach(|| run_checks(opts, enumerator(cap))).map_err(path_err)?;
    Ok(outcomes.into_iter().map(|o| (o.name.to_string(), o.failure)).collect())
}

#[pymodule(name = "deutsch_paths")]
pub fn deutsch_paths_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPath>()?;
    m.add("DEFAULT_CAP", DEFAULT_CAP)?;
    m.add_function(wrap_pyfunction!(enumerate_paths, m)?)?;
    m.add_function(wrap_pyfunction!(count_paths, m)?)?;
    m.add_function(wrap_pyfunction!(histogram, m)?)?;
    m.add_function(wrap_pyfunction!(series, m)?)?;
    m.add_function(wrap_pyfunction!(marked_series, m)?)?;
    m.add_function(wrap_pyfunction!(level_series, m)?)?;
    m.add_function(wrap_pyfunction!(kernel_roots, m)?)?;
    m.add_function(wrap_pyfunction!(asymptotic_report, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
