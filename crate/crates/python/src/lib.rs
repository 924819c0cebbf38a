//! Python module `immerse`: graphs, exact solvers, constructions,
//! certificate verification, oracles and the counterexample lab.
//!
//! Certificates and reports cross the boundary as JSON text or as plain
//! dicts decoded from it.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use immerse_core::constructions::{
    construct_c4free_complement_immersion, construct_dense56_immersion,
    construct_multipartite_immersion, construct_third_immersion, ConstructionError, ThirdOptions,
};
use immerse_core::graph::{
    named, parse_edge_list, parse_graph6, serialize_edge_list, serialize_graph6,
};
use immerse_core::immersion::{
    immersion_oracle_lifts, immersion_oracle_paths, max_clique_immersion, OracleError,
};
use immerse_core::lab::{self, BatteryOptions, GraphSource, HarnessConfig};
use immerse_core::solvers;
use immerse_core::{verify_certificate, Budget, Graph, ImmersionCertificate};

create_exception!(
    immerse,
    BudgetExceededError,
    PyException,
    "A solver ran out of its node budget."
);

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn budget_error() -> PyErr {
    BudgetExceededError::new_err("work budget exceeded")
}

fn budget(nodes: Option<u64>) -> Budget {
    nodes.map_or_else(Budget::default, Budget::nodes)
}

fn construction_error(e: ConstructionError) -> PyErr {
    match e {
        ConstructionError::BudgetExceeded => budget_error(),
        other => value_error(other),
    }
}

fn oracle_error(e: OracleError) -> PyErr {
    match e {
        OracleError::BudgetExceeded => budget_error(),
        other => value_error(other),
    }
}

fn json_to_py<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

/// Immutable simple graph on vertices `0..n`.
#[pyclass(
    name = "Graph",
    module = "immerse",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGraph {
    inner: Graph,
}

impl From<Graph> for PyGraph {
    fn from(inner: Graph) -> Self {
        PyGraph { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Graph::from_edges(n, edges)
            .map(Into::into)
            .map_err(value_error)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        parse_graph6(text.trim())
            .map(Into::into)
            .map_err(value_error)
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        parse_edge_list(text).map(Into::into).map_err(value_error)
    }

    fn to_graph6(&self) -> PyResult<String> {
        serialize_graph6(&self.inner).map_err(value_error)
    }

    fn to_edge_list(&self) -> String {
        serialize_edge_list(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.inner.check_vertex(v).map_err(value_error)?;
        Ok(self.inner.neighbors(v).collect())
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.inner.check_vertex(v).map_err(value_error)?;
        Ok(self.inner.degree(v))
    }

    fn min_degree(&self) -> Option<usize> {
        self.inner.min_degree()
    }

    fn complement(&self) -> Self {
        self.inner.complement().into()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn diameter(&self) -> Option<usize> {
        self.inner.diameter()
    }

    fn independent_triple(&self) -> Option<[usize; 3]> {
        self.inner.independent_triple()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        match serialize_graph6(&self.inner) {
            Ok(g6) => format!("Graph.from_graph6({g6:?})"),
            Err(_) => format!("<Graph n={}>", self.inner.n()),
        }
    }
}

#[pyfunction]
fn complete(n: usize) -> PyGraph {
    named::complete(n).into()
}

#[pyfunction]
fn cycle(n: usize) -> PyGraph {
    named::cycle(n).into()
}

#[pyfunction]
fn path(n: usize) -> PyGraph {
    named::path(n).into()
}

#[pyfunction]
fn petersen() -> PyGraph {
    named::petersen().into()
}

#[pyfunction]
fn complete_multipartite(sizes: Vec<usize>) -> PyGraph {
    named::complete_multipartite(&sizes).into()
}

/// `(k, colours)` with colours 1-based.
#[pyfunction]
#[pyo3(signature = (g, budget=None))]
fn chromatic_number(g: &PyGraph, budget: Option<u64>) -> PyResult<(usize, Vec<usize>)> {
    let (k, c) =
        solvers::chromatic_number(&g.inner, self::budget(budget)).map_err(|_| budget_error())?;
    Ok((k, c.colors().to_vec()))
}

#[pyfunction]
#[pyo3(signature = (g, budget=None))]
fn clique_number(g: &PyGraph, budget: Option<u64>) -> PyResult<(usize, Vec<usize>)> {
    solvers::clique_number(&g.inner, self::budget(budget)).map_err(|_| budget_error())
}

#[pyfunction]
#[pyo3(signature = (g, budget=None))]
fn independence_number(g: &PyGraph, budget: Option<u64>) -> PyResult<(usize, Vec<usize>)> {
    solvers::independence_number(&g.inner, self::budget(budget)).map_err(|_| budget_error())
}

#[pyfunction]
fn maximum_matching(g: &PyGraph) -> Vec<(usize, usize)> {
    solvers::maximum_matching(&g.inner)
}

/// A Hamiltonian cycle as a vertex list, or `None`.
#[pyfunction]
#[pyo3(signature = (g, budget=None))]
fn hamiltonian_cycle(g: &PyGraph, budget: Option<u64>) -> PyResult<Option<Vec<usize>>> {
    match solvers::is_hamiltonian(&g.inner, self::budget(budget)) {
        Ok(c) => Ok(c),
        Err(solvers::SolverError::BudgetExceeded) => Err(budget_error()),
        Err(e) => Err(value_error(e)),
    }
}

/// Proper (s-1)- or s-edge-colouring of K_s as `{(u, v): colour}`.
#[pyfunction]
fn one_factorization<'py>(py: Python<'py>, s: usize) -> PyResult<Bound<'py, PyDict>> {
    let f = solvers::one_factorization(s).map_err(value_error)?;
    let d = PyDict::new(py);
    for v in 1..s {
        for u in 0..v {
            d.set_item((u, v), f.color(u, v))?;
        }
    }
    Ok(d)
}

fn certificate_json(host: &Graph, cert: &ImmersionCertificate) -> PyResult<String> {
    cert.to_json(host).map_err(value_error)
}

/// Builds a verified strong clique immersion and returns the certificate as
/// JSON. `kind` is one of `multipartite` (needs `sizes`), `dense56`,
/// `c4free`, `third`.
#[pyfunction]
#[pyo3(signature = (kind, g=None, sizes=None, seed=None, budget=None))]
fn construct(
    kind: &str,
    g: Option<&PyGraph>,
    sizes: Option<Vec<usize>>,
    seed: Option<u64>,
    budget: Option<u64>,
) -> PyResult<String> {
    let budget = self::budget(budget);
    let host = || {
        g.map(|g| g.inner.clone())
            .ok_or_else(|| PyValueError::new_err(format!("{kind} needs a graph")))
    };
    let (host, cert) = match kind {
        "multipartite" => {
            let sizes = sizes.ok_or_else(|| PyValueError::new_err("multipartite needs sizes"))?;
            let (g, c) = construct_multipartite_immersion(&sizes).map_err(construction_error)?;
            (g, c.certificate)
        }
        "dense56" => {
            let g = host()?;
            let c = construct_dense56_immersion(&g, budget).map_err(construction_error)?;
            (g, c.certificate)
        }
        "c4free" => {
            let g = host()?;
            let c =
                construct_c4free_complement_immersion(&g, budget).map_err(construction_error)?;
            (g, c.certificate)
        }
        "third" => {
            let g = host()?;
            let outcome = construct_third_immersion(&g, &ThirdOptions { seed })
                .map_err(construction_error)?;
            (g, outcome.into_certificate().normalized())
        }
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown construction {other:?}"
            )))
        }
    };
    certificate_json(&host, &cert)
}

/// Verifies a certificate given as JSON. Returns a dict with `valid`,
/// `strong`, `violation` and `summary`.
#[pyfunction]
fn verify<'py>(py: Python<'py>, certificate: &str) -> PyResult<Bound<'py, PyDict>> {
    let (host, cert) = ImmersionCertificate::from_json(certificate).map_err(value_error)?;
    let r = verify_certificate(&host, &cert);
    let d = PyDict::new(py);
    d.set_item("valid", r.valid)?;
    d.set_item("strong", r.strong)?;
    d.set_item("violation", r.violation.clone())?;
    d.set_item("summary", r.summary(&cert))?;
    Ok(d)
}

/// Certificate JSON if `h` is immersed in `g`, else `None`.
#[pyfunction]
#[pyo3(signature = (g, h, budget=None))]
fn oracle_paths(g: &PyGraph, h: &PyGraph, budget: Option<u64>) -> PyResult<Option<String>> {
    match immersion_oracle_paths(&g.inner, &h.inner, self::budget(budget)).map_err(oracle_error)? {
        Some(cert) => certificate_json(&g.inner, &cert).map(Some),
        None => Ok(None),
    }
}

#[pyfunction]
#[pyo3(signature = (g, h, budget=None))]
fn oracle_lifts(g: &PyGraph, h: &PyGraph, budget: Option<u64>) -> PyResult<bool> {
    immersion_oracle_lifts(&g.inner, &h.inner, self::budget(budget)).map_err(oracle_error)
}

/// `(t, definitive, source, certificate_json)`.
#[pyfunction]
#[pyo3(signature = (g, budget=None))]
fn max_clique_immersion_of(
    g: &PyGraph,
    budget: Option<u64>,
) -> PyResult<(usize, bool, String, String)> {
    let r = max_clique_immersion(&g.inner, self::budget(budget));
    let json = certificate_json(&g.inner, &r.certificate)?;
    Ok((r.t, r.definitive, r.source, json))
}

#[pyfunction]
fn alpha2_random(n: usize, seed: u64) -> PyResult<PyGraph> {
    lab::alpha2_random(n, seed)
        .map(Into::into)
        .map_err(value_error)
}

#[pyfunction]
fn alpha2_enumerate(n: usize) -> PyResult<Vec<PyGraph>> {
    Ok(lab::alpha2_enumerate(n)
        .map_err(value_error)?
        .map(Into::into)
        .collect())
}

/// The property report as a dict.
#[pyfunction]
#[pyo3(signature = (g, full=false, budget=None))]
fn property_battery<'py>(
    py: Python<'py>,
    g: &PyGraph,
    full: bool,
    budget: Option<u64>,
) -> PyResult<Bound<'py, PyAny>> {
    let r = lab::property_battery_with(
        &g.inner,
        &BatteryOptions {
            budget: self::budget(budget),
            full,
        },
    );
    json_to_py(py, &serde_json_string(&r))
}

fn serde_json_string<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializes")
}

/// `(verdict, certificate_json)` with verdict `holds`, `fails` or `budget`.
#[pyfunction]
#[pyo3(signature = (g, budget=None))]
fn half_clique_check(g: &PyGraph, budget: Option<u64>) -> PyResult<(String, Option<String>)> {
    let v = lab::half_clique_check(&g.inner, self::budget(budget)).map_err(value_error)?;
    let cert = v
        .certificate()
        .map(|c| certificate_json(&g.inner, c))
        .transpose()?;
    Ok((v.label().to_string(), cert))
}

/// Runs the search harness; `source` is `enumerate` or `random`. Returns
/// the report as a dict.
#[pyfunction]
#[pyo3(signature = (source, n, count=100, seed=0, workers=0, full=false, budget=None))]
#[allow(clippy::too_many_arguments)]
fn hunt<'py>(
    py: Python<'py>,
    source: &str,
    n: usize,
    count: usize,
    seed: u64,
    workers: usize,
    full: bool,
    budget: Option<u64>,
) -> PyResult<Bound<'py, PyAny>> {
    let source = match source {
        "enumerate" => GraphSource::Enumerate { n },
        "random" => GraphSource::Random { n, count },
        other => return Err(PyValueError::new_err(format!("unknown source {other:?}"))),
    };
    let config = HarnessConfig {
        budget: self::budget(budget),
        seed,
        workers,
        full_battery: full,
        check_all: true,
    };
    let report = py
        .detach(|| lab::search_harness(source, &config))
        .map_err(value_error)?;
    json_to_py(py, &report.to_json())
}

#[pymodule]
fn immerse(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add(
        "BudgetExceededError",
        m.py().get_type::<BudgetExceededError>(),
    )?;
    m.add_function(wrap_pyfunction!(complete, m)?)?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(path, m)?)?;
    m.add_function(wrap_pyfunction!(petersen, m)?)?;
    m.add_function(wrap_pyfunction!(complete_multipartite, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_number, m)?)?;
    m.add_function(wrap_pyfunction!(clique_number, m)?)?;
    m.add_function(wrap_pyfunction!(independence_number, m)?)?;
    m.add_function(wrap_pyfunction!(maximum_matching, m)?)?;
    m.add_function(wrap_pyfunction!(hamiltonian_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(one_factorization, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_paths, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_lifts, m)?)?;
    m.add_function(wrap_pyfunction!(max_clique_immersion_of, m)?)?;
    m.add_function(wrap_pyfunction!(alpha2_random, m)?)?;
    m.add_function(wrap_pyfunction!(alpha2_enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(property_battery, m)?)?;
    m.add_function(wrap_pyfunction!(half_clique_check, m)?)?;
    m.add_function(wrap_pyfunction!(hunt, m)?)?;
    Ok(())
}
