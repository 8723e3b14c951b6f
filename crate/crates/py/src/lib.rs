//! Python bindings: a `Graph` class plus module-level functions mirroring
//! the library surface. Contract and parse errors become `ValueError`,
//! oracle budget refusals become `TimeoutError`, internal assertion
//! failures become `RuntimeError`.

use pyo3::exceptions::{PyRuntimeError, PyTimeoutError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use aligned_cycles_core as core;
use aligned_cycles_core::Error;

fn to_py_err(err: Error) -> PyErr {
    match &err {
        Error::Internal { .. } => PyRuntimeError::new_err(err.to_string()),
        Error::Budget(_) => PyTimeoutError::new_err(err.to_string()),
        _ => PyValueError::new_err(err.to_string()),
    }
}

/// A simple undirected graph with dense integer vertex ids.
#[pyclass(from_py_object)]
#[derive(Clone)]
struct Graph {
    inner: core::Graph,
}

#[pymethods]
impl Graph {
    /// Build from an explicit vertex count and edge list.
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        core::Graph::from_edges(n, edges)
            .map(|inner| Graph { inner })
            .map_err(to_py_err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    #[getter]
    fn min_degree(&self) -> usize {
        self.inner.min_degree()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    /// Sorted `u v` edge-list text.
    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    /// Graphviz DOT, optionally highlighting a cycle and/or a path.
    #[pyo3(signature = (cycle=None, path=None))]
    fn to_dot(&self, cycle: Option<Vec<usize>>, path: Option<Vec<usize>>) -> String {
        self.inner.to_dot(cycle.as_deref(), path.as_deref())
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, m={}, min_degree={})",
            self.inner.n(),
            self.inner.edge_count(),
            self.inner.min_degree()
        )
    }
}

/// Parse the edge-list text format (`u v` per line, `#` comments).
#[pyfunction]
fn parse_graph(text: &str) -> PyResult<Graph> {
    core::Graph::parse(text)
        .map(|inner| Graph { inner })
        .map_err(to_py_err)
}

/// Generate a named or random family; see the CLI `gen` verb.
#[pyfunction]
#[pyo3(signature = (family, params, seed=0))]
fn generate(family: &str, params: Vec<usize>, seed: u64) -> PyResult<Graph> {
    let spec = core::GenSpec {
        family: core::Family::parse(family).map_err(to_py_err)?,
        params,
        seed,
    };
    core::generate(&spec)
        .map(|inner| Graph { inner })
        .map_err(to_py_err)
}

/// Connectivity report as a dict: connected, cut_vertices, two_connected.
#[pyfunction]
fn analyze<'py>(py: Python<'py>, g: &Graph) -> PyResult<Bound<'py, PyDict>> {
    let r = core::analyze(&g.inner);
    let out = PyDict::new(py);
    out.set_item("connected", r.connected)?;
    out.set_item("cut_vertices", r.cut_vertices)?;
    out.set_item("two_connected", r.two_connected)?;
    Ok(out)
}

/// Alignment predicate on two paths sharing an origin.
#[pyfunction]
fn is_aligned(g: &Graph, base: Vec<usize>, candidate: Vec<usize>) -> PyResult<bool> {
    let base = core::Path::new(&g.inner, base).map_err(to_py_err)?;
    let candidate = core::Path::new(&g.inner, candidate).map_err(to_py_err)?;
    core::is_aligned(&base, &candidate).map_err(to_py_err)
}

/// Aligned internally disjoint pair for (g, path, z); returns
/// {"p1": [...], "p2": [...], "checked": True}.
#[pyfunction]
fn aligned_pair<'py>(
    py: Python<'py>,
    g: &Graph,
    path: Vec<usize>,
    z: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let base = core::Path::new(&g.inner, path).map_err(to_py_err)?;
    let pair = core::aligned_pair(&g.inner, &base, z).map_err(to_py_err)?;
    pair.verify(&g.inner)
        .map_err(|r| PyRuntimeError::new_err(format!("emitted pair failed verification: {r}")))?;
    let out = PyDict::new(py);
    out.set_item("p1", pair.p1().vertices())?;
    out.set_item("p2", pair.p2().vertices())?;
    out.set_item("checked", true)?;
    Ok(out)
}

/// Two internally disjoint u,v-paths in a 2-connected graph.
#[pyfunction]
fn whitney_pair(g: &Graph, u: usize, v: usize) -> PyResult<(Vec<usize>, Vec<usize>)> {
    let (p1, p2) = core::whitney_pair(&g.inner, u, v).map_err(to_py_err)?;
    Ok((p1.into_vec(), p2.into_vec()))
}

/// Shortest escape path from `source` to the target set with `forbidden`
/// deleted.
#[pyfunction]
fn escape_path(g: &Graph, forbidden: usize, source: usize, targets: Vec<usize>) -> PyResult<Vec<usize>> {
    core::escape_path(&g.inner, forbidden, source, &targets)
        .map(|p| p.into_vec())
        .map_err(to_py_err)
}

/// Certified long cycle; returns the certificate as a dict (with the
/// improvement trace as parsed JSON when `emit_trace` is set).
#[pyfunction]
#[pyo3(signature = (g, emit_trace=false))]
fn long_cycle<'py>(py: Python<'py>, g: &Graph, emit_trace: bool) -> PyResult<Bound<'py, PyDict>> {
    let cert = core::long_cycle(&g.inner).map_err(to_py_err)?;
    cert.verify(&g.inner)
        .map_err(|r| PyRuntimeError::new_err(format!("certificate failed verification: {r}")))?;
    let out = PyDict::new(py);
    out.set_item("cycle", &cert.cycle)?;
    out.set_item("n", cert.n)?;
    out.set_item("delta", cert.delta)?;
    out.set_item("bound", cert.bound)?;
    out.set_item("iterations", cert.iterations)?;
    if emit_trace {
        let json = Python::import(py, "json")?;
        let parsed = json.call_method1("loads", (cert.to_json_with_trace(),))?;
        out.set_item("trace", parsed.get_item("trace")?)?;
    }
    Ok(out)
}

/// Re-validate a certificate JSON string against a graph. Returns
/// (valid, reason-or-None).
#[pyfunction]
fn verify_certificate(g: &Graph, certificate_json: &str) -> PyResult<(bool, Option<String>)> {
    let cert = core::CycleCertificate::from_json(certificate_json).map_err(to_py_err)?;
    match cert.verify(&g.inner) {
        Ok(()) => Ok((true, None)),
        Err(reason) => Ok((false, Some(reason))),
    }
}

/// Check a vertex sequence as a cycle; returns (ok, reason-or-None).
#[pyfunction]
fn verify_cycle(g: &Graph, cycle: Vec<usize>) -> (bool, Option<String>) {
    match core::verify_cycle(&g.inner, &cycle) {
        Ok(()) => (true, None),
        Err(v) => (false, Some(v.to_string())),
    }
}

/// Exact longest cycle by exhaustive search; returns (length, witness).
#[pyfunction]
#[pyo3(signature = (g, max_n=12, max_millis=30_000))]
fn brute_longest_cycle(
    g: &Graph,
    max_n: usize,
    max_millis: u64,
) -> PyResult<(usize, Option<Vec<usize>>)> {
    let budget = core::OracleBudget { max_n, max_millis };
    core::brute_longest_cycle(&g.inner, &budget)
        .map(|(len, witness)| (len, witness.map(|c| c.into_vec())))
        .map_err(to_py_err)
}

/// Exhaustive existence check for pairwise disjoint aligned paths.
#[pyfunction]
#[pyo3(signature = (g, base, terminals, max_n=9, max_millis=30_000))]
fn aligned_tuple_exists(
    g: &Graph,
    base: Vec<usize>,
    terminals: Vec<usize>,
    max_n: usize,
    max_millis: u64,
) -> PyResult<bool> {
    let base = core::Path::new(&g.inner, base).map_err(to_py_err)?;
    let budget = core::OracleBudget { max_n, max_millis };
    core::aligned_tuple_exists(&g.inner, &base, base.first(), &terminals, &budget)
        .map_err(to_py_err)
}

/// Maximum number of pairwise disjoint aligned x,y-paths for a base path.
#[pyfunction]
#[pyo3(signature = (g, base, max_n=9, max_millis=30_000))]
fn max_aligned_disjoint_paths(
    g: &Graph,
    base: Vec<usize>,
    max_n: usize,
    max_millis: u64,
) -> PyResult<usize> {
    let base = core::Path::new(&g.inner, base).map_err(to_py_err)?;
    let budget = core::OracleBudget { max_n, max_millis };
    core::max_aligned_disjoint_paths(&g.inner, &base, &budget).map_err(to_py_err)
}

#[pymodule]
fn aligned_cycles(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(parse_graph, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(is_aligned, m)?)?;
    m.add_function(wrap_pyfunction!(aligned_pair, m)?)?;
    m.add_function(wrap_pyfunction!(whitney_pair, m)?)?;
    m.add_function(wrap_pyfunction!(escape_path, m)?)?;
    m.add_function(wrap_pyfunction!(long_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(verify_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(verify_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(brute_longest_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(aligned_tuple_exists, m)?)?;
    m.add_function(wrap_pyfunction!(max_aligned_disjoint_paths, m)?)?;
    Ok(())
}
