//! Python bindings: spaces, feasibility, inequalities, product-rule oracles
//! and the Horn recursions.
//!
//! Positions cross the boundary as strings in the notation of the space,
//! exactly as the command-line tool reads and prints them.

use comin::feasibility::{self, FeasibilityReport, Mode, Solver};
use comin::horn::{self, LambdaSource};
use comin::notation::{format_position, parse_position};
use comin::oracles::lr::Partition;
use comin::oracles::{self, OracleKind};
use comin::orbit::{m_of_p, max_rank};
use comin::space::{build_space, Position, DEFAULT_IDEAL_CAP};
use comin::Error;
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(pycomin, CapExceededError, PyRuntimeError, "An enumeration cap was exceeded.");

fn py_err(e: Error) -> PyErr {
    match e {
        Error::CapExceeded { .. } => CapExceededError::new_err(e.to_string()),
        Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(py_err)
}

/// A product of cominuscule flag varieties, e.g. `Space("Gr(2,5) x LG(3)")`.
#[pyclass(frozen, module = "pycomin")]
struct Space {
    inner: comin::space::Space,
}

impl Space {
    fn positions(&self, texts: &[String]) -> PyResult<Vec<Position>> {
        texts.iter().map(|t| parse_position(&self.inner, t).map_err(py_err)).collect()
    }

    fn format(&self, p: &Position) -> String {
        format_position(&self.inner, p)
    }
}

#[pymethods]
impl Space {
    #[new]
    fn new(text: &str) -> PyResult<Space> {
        Ok(Space { inner: build_space(text).map_err(py_err)? })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Names of the simple factors.
    #[getter]
    fn factors(&self) -> Vec<String> {
        self.inner.factors.iter().map(|f| f.name()).collect()
    }

    /// Largest orbit rank of each factor.
    fn max_ranks(&self) -> Vec<usize> {
        self.inner.factors.iter().map(|f| max_rank(f)).collect()
    }

    /// All positions, or those of one codimension, in canonical order.
    #[pyo3(name = "positions", signature = (codim = None, cap = DEFAULT_IDEAL_CAP))]
    fn positions_list(&self, codim: Option<usize>, cap: usize) -> PyResult<Vec<String>> {
        let list = self.inner.enumerate_positions(cap, codim).map_err(py_err)?;
        Ok(list.iter().map(|p| self.format(p)).collect())
    }

    fn codim(&self, position: &str) -> PyResult<usize> {
        Ok(self.inner.codim(&parse_position(&self.inner, position).map_err(py_err)?))
    }

    /// The Poincaré dual position.
    fn dual(&self, position: &str) -> PyResult<String> {
        let p = parse_position(&self.inner, position).map_err(py_err)?;
        Ok(self.format(&self.inner.dual(&p)))
    }

    /// Orbit data of every factor: one dict per `(factor, r)`.
    fn orbits<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
        let mut out = Vec::new();
        for (j, f) in self.inner.factors.iter().enumerate() {
            for d in m_of_p(f).map_err(py_err)?.iter() {
                let row = PyDict::new(py);
                row.set_item("factor", j)?;
                row.set_item("r", d.r)?;
                row.set_item("dim_z", d.dim_z())?;
                row.set_item("levi_quotient", d.levi_quotient().name())?;
                row.set_item("omitted", d.omitted.iter().map(|&v| v + 1).collect::<Vec<_>>())?;
                row.set_item("lambdas", d.num_lambdas())?;
                out.push(row);
            }
        }
        Ok(out)
    }

    fn __repr__(&self) -> String {
        format!("Space({:?})", self.inner.name())
    }
}

fn witness<'py>(py: Python<'py>, space: &Space, report: &FeasibilityReport) -> PyResult<Option<Bound<'py, PyDict>>> {
    let Some(w) = &report.witness else { return Ok(None) };
    let lambdas: Vec<String> = if w.r == 0 {
        Vec::new()
    } else {
        let datum = &m_of_p(&space.inner.factors[w.factor]).map_err(py_err)?[w.r - 1];
        let levi = datum.levi_quotient();
        w.lambdas.iter().map(|l| format_position(&levi, l)).collect()
    };
    let d = PyDict::new(py);
    d.set_item("factor", w.factor)?;
    d.set_item("r", w.r)?;
    d.set_item("lambdas", lambdas)?;
    d.set_item("lhs", w.lhs)?;
    d.set_item("rhs", w.rhs)?;
    Ok(Some(d))
}

/// Decides feasibility; returns `(feasible, witness)` where the witness is a
/// dict describing the first violated inequality, or `None`.
#[pyfunction]
#[pyo3(signature = (space, positions, mode = "top"))]
fn is_feasible<'py>(
    py: Python<'py>,
    space: &Space,
    positions: Vec<String>,
    mode: &str,
) -> PyResult<(bool, Option<Bound<'py, PyDict>>)> {
    let mode: Mode = parse(mode)?;
    let pos = space.positions(&positions)?;
    let report = py.detach(|| feasibility::is_feasible(&space.inner, &pos, mode)).map_err(py_err)?;
    Ok((report.feasible, witness(py, space, &report)?))
}

/// All feasible `s`-tuples, as lists of position strings.
#[pyfunction]
#[pyo3(signature = (space, s, top_only = true, mode = "top"))]
fn enumerate_feasible(
    py: Python<'_>,
    space: &Space,
    s: usize,
    top_only: bool,
    mode: &str,
) -> PyResult<Vec<Vec<String>>> {
    let mode: Mode = parse(mode)?;
    let tuples = py.detach(|| Solver::global().enumerate_feasible(&space.inner, s, top_only, mode)).map_err(py_err)?;
    Ok(tuples.iter().map(|t| t.iter().map(|p| space.format(p)).collect()).collect())
}

/// The inequalities `Σ_i |Inv^c(π_i) ∩ slots[i]| ≤ rhs` cutting out the
/// feasible `s`-tuples; slots are lists of weight indices of the factor.
#[pyfunction]
fn inequalities<'py>(py: Python<'py>, space: &Space, s: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let list = py.detach(|| feasibility::emit_inequalities(&space.inner, s)).map_err(py_err)?;
    list.iter()
        .map(|q| {
            let d = PyDict::new(py);
            d.set_item("factor", q.factor)?;
            d.set_item("r", q.r)?;
            d.set_item("slots", q.slots.iter().map(|b| b.iter().collect::<Vec<_>>()).collect::<Vec<_>>())?;
            d.set_item("rhs", q.rhs)?;
            Ok(d)
        })
        .collect()
}

/// Whether the product of the Schubert classes is nonzero, by the
/// Littlewood-Richardson, shifted or quadric rule.
#[pyfunction]
#[pyo3(signature = (space, positions, oracle = "auto"))]
fn product_nonzero(space: &Space, positions: Vec<String>, oracle: &str) -> PyResult<bool> {
    let oracle: OracleKind = parse(oracle)?;
    let pos = space.positions(&positions)?;
    oracles::product_nonzero(&space.inner, &pos, oracle).map_err(py_err)
}

/// Classical Horn recursion for `c^ν_{μ_1...μ_s} ≠ 0` on `Gr(k,n)`.
#[pyfunction]
fn classical_horn_feasible(k: usize, n: usize, mus: Vec<Vec<usize>>, nu: Vec<usize>) -> PyResult<bool> {
    horn::classical_horn_feasible(k, n, &mus, &nu).map_err(py_err)
}

/// One-factor Horn recursion on a top-degree tuple of `Gr(k,n)`.
#[pyfunction]
fn one_factor_feasible(k: usize, n: usize, mus: Vec<Vec<usize>>) -> PyResult<bool> {
    horn::one_factor_feasible(k, n, &mus).map_err(py_err)
}

/// Naive inequalities on `LG(n)`; returns `(passes, witness)`.
#[pyfunction]
#[pyo3(signature = (n, pis, source = "recursion"))]
fn naive_lg_check<'py>(
    py: Python<'py>,
    n: usize,
    pis: Vec<Vec<usize>>,
    source: &str,
) -> PyResult<(bool, Option<Bound<'py, PyDict>>)> {
    let source: LambdaSource = parse(source)?;
    let report = py.detach(|| horn::naive_lg_check(n, &pis, source)).map_err(py_err)?;
    let w = match report.witness {
        None => None,
        Some(w) => {
            let d = PyDict::new(py);
            d.set_item("r", w.r)?;
            d.set_item("lambdas", w.lambdas)?;
            d.set_item("lhs", w.lhs)?;
            d.set_item("rhs", w.rhs)?;
            Some(d)
        }
    };
    Ok((report.passes, w))
}

/// Runs the four Grassmannian deciders on every top-degree `s`-tuple and
/// returns `(tuples, feasible, disagreeing tuples)`.
#[pyfunction]
fn compare_gr(py: Python<'_>, k: usize, n: usize, s: usize) -> PyResult<(usize, usize, Vec<Vec<Partition>>)> {
    let c = py.detach(|| horn::compare_gr(k, n, s)).map_err(py_err)?;
    Ok((c.tuples, c.feasible, c.mismatches.into_iter().map(|v| v.tuple).collect()))
}

#[pymodule]
fn pycomin(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Space>()?;
    m.add("CapExceededError", m.py().get_type::<CapExceededError>())?;
    m.add_function(wrap_pyfunction!(is_feasible, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_feasible, m)?)?;
    m.add_function(wrap_pyfunction!(inequalities, m)?)?;
    m.add_function(wrap_pyfunction!(product_nonzero, m)?)?;
    m.add_function(wrap_pyfunction!(classical_horn_feasible, m)?)?;
    m.add_function(wrap_pyfunction!(one_factor_feasible, m)?)?;
    m.add_function(wrap_pyfunction!(naive_lg_check, m)?)?;
    m.add_function(wrap_pyfunction!(compare_gr, m)?)?;
    Ok(())
}
