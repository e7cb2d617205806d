//! Python bindings: hosts, shapes, the finders, the oracle and sweeps.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

use nonsep_core::connectivity::kappa;
use nonsep_core::error::Error;
use nonsep_core::generate::{gen_random_digraph, gen_random_graph};
use nonsep_core::graph::{AnyGraph, Host};
use nonsep_core::harness::{self, SweepConfig};
use nonsep_core::oracle::{exists_in_family, verify_nonseparating};
use nonsep_core::shapes::{Embedding as CoreEmbedding, ShapeSpec};

create_exception!(nonsep, NonsepError, PyException);
create_exception!(nonsep, PreconditionError, NonsepError);
create_exception!(nonsep, NotFoundError, NonsepError);
create_exception!(nonsep, ContradictionError, NonsepError);

fn to_py(e: Error) -> PyErr {
    let text = e.to_string();
    match e {
        Error::Input(_) | Error::Parse { .. } => PyValueError::new_err(text),
        Error::Precondition(_) | Error::NoSeparatingSet => PreconditionError::new_err(text),
        Error::NotFound(_) => NotFoundError::new_err(text),
        Error::Contradiction(_) => ContradictionError::new_err(text),
    }
}

/// A graph or digraph on vertices `0..n`.
#[pyclass(frozen, skip_from_py_object, name = "Graph")]
#[derive(Clone)]
pub struct PyGraph {
    inner: AnyGraph,
}

#[pymethods]
impl PyGraph {
    /// Parses the edge-list format: `n m directed|undirected`, then `u v` lines.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        let inner = AnyGraph::parse_edge_list(text).map_err(to_py)?;
        Ok(Self { inner })
    }

    /// Named host, e.g. `complete:8`, `circulant:13:1,2,3,4`, `dcycle:5`.
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        let inner = harness::named_host(name).map_err(to_py)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    #[pyo3(signature = (n, delta, k = 2, seed = 0))]
    fn random(n: usize, delta: usize, k: usize, seed: u64) -> PyResult<Self> {
        let g = gen_random_graph(n, delta, k, seed).map_err(to_py)?;
        Ok(Self { inner: g.into() })
    }

    #[staticmethod]
    #[pyo3(signature = (n, delta, seed = 0))]
    fn random_digraph(n: usize, delta: usize, seed: u64) -> PyResult<Self> {
        let d = gen_random_digraph(n, delta, seed).map_err(to_py)?;
        Ok(Self { inner: d.into() })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn directed(&self) -> bool {
        self.inner.is_directed()
    }

    /// Edges `(u, v)` with `u < v`, or arcs.
    fn edges(&self) -> Vec<(usize, usize)> {
        match &self.inner {
            AnyGraph::Undirected(g) => g.edges().collect(),
            AnyGraph::Directed(d) => d.arcs().collect(),
        }
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    /// Vertex connectivity of an undirected graph.
    fn kappa(&self) -> PyResult<usize> {
        let g = self
            .inner
            .as_graph()
            .ok_or_else(|| PyValueError::new_err("kappa needs an undirected graph"))?;
        kappa(g).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        let kind = if self.inner.is_directed() { "digraph" } else { "graph" };
        format!("Graph({kind}, n={})", self.inner.order())
    }
}

/// A shape spec such as `ps:2:5` or `ods:5:2:1`.
#[pyclass(frozen, eq, skip_from_py_object, name = "Shape")]
#[derive(Clone, PartialEq)]
pub struct PyShape {
    inner: ShapeSpec,
}

#[pymethods]
impl PyShape {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        let inner = spec.parse().map_err(to_py)?;
        Ok(Self { inner })
    }

    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.kind.tag()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m
    }

    #[getter]
    fn r(&self) -> usize {
        self.inner.r
    }

    #[getter]
    fn s(&self) -> usize {
        self.inner.s
    }

    #[getter]
    fn directed(&self) -> bool {
        self.inner.is_directed()
    }

    /// Shapes a finder for this spec may return.
    fn family(&self) -> Vec<PyShape> {
        self.inner.family().into_iter().map(|inner| PyShape { inner }).collect()
    }

    /// Edges (or arcs) of the shape in its canonical numbering.
    fn links(&self) -> Vec<(usize, usize)> {
        self.inner.links()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Shape('{}')", self.inner)
    }
}

/// A copy of a shape in a host: `map[i]` hosts shape vertex `i`.
#[pyclass(frozen, eq, skip_from_py_object, name = "Embedding")]
#[derive(Clone, PartialEq)]
pub struct PyEmbedding {
    inner: CoreEmbedding,
}

#[pymethods]
impl PyEmbedding {
    #[new]
    fn new(shape: &PyShape, map: Vec<usize>) -> Self {
        Self {
            inner: CoreEmbedding::new(shape.inner, map),
        }
    }

    #[getter]
    fn shape(&self) -> PyShape {
        PyShape {
            inner: self.inner.shape,
        }
    }

    #[getter]
    fn map(&self) -> Vec<usize> {
        self.inner.map.clone()
    }

    fn __repr__(&self) -> String {
        format!("Embedding('{}', {:?})", self.inner.shape, self.inner.map)
    }
}

#[pyclass(frozen, name = "Solution")]
pub struct PySolution {
    #[pyo3(get)]
    tree: PyEmbedding,
    #[pyo3(get)]
    iterations: usize,
    #[pyo3(get)]
    trace: Vec<String>,
}

/// Runs the constructive finder. Raises `PreconditionError`,
/// `NotFoundError` or `ContradictionError` on failure.
#[pyfunction]
#[pyo3(signature = (host, shape, k = None))]
fn find(py: Python<'_>, host: &PyGraph, shape: &PyShape, k: Option<usize>) -> PyResult<PySolution> {
    let sol = py
        .detach(|| harness::solve(&host.inner, &shape.inner, k))
        .map_err(to_py)?;
    Ok(PySolution {
        tree: PyEmbedding { inner: sol.tree },
        iterations: sol.iterations,
        trace: sol.trace,
    })
}

/// Whether `tree` is a valid copy whose removal leaves a k-connected
/// (strongly connected, for digraphs) remainder.
#[pyfunction]
#[pyo3(signature = (host, tree, k = None))]
fn verify(host: &PyGraph, tree: &PyEmbedding, k: Option<usize>) -> PyResult<bool> {
    let k = k.unwrap_or_else(|| harness::default_k(&tree.inner.shape));
    verify_nonseparating(&host.inner, &tree.inner, k).map_err(to_py)
}

/// Brute-force search over the shape's family; `None` when no member has a
/// nonseparating copy.
#[pyfunction]
#[pyo3(signature = (host, shape, k = None))]
fn oracle(py: Python<'_>, host: &PyGraph, shape: &PyShape, k: Option<usize>) -> PyResult<Option<PyEmbedding>> {
    let k = k.unwrap_or_else(|| harness::default_k(&shape.inner));
    let found = py
        .detach(|| exists_in_family(&host.inner, &shape.inner, k))
        .map_err(to_py)?;
    Ok(found.map(|inner| PyEmbedding { inner }))
}

/// Runs a sweep from a JSON config; returns one JSON report per instance.
#[pyfunction]
fn sweep(py: Python<'_>, config: &str) -> PyResult<Vec<String>> {
    let config = SweepConfig::from_json(config).map_err(to_py)?;
    let reports = py.detach(|| harness::sweep(&config)).map_err(to_py)?;
    Ok(reports.iter().map(|r| r.to_json_line()).collect())
}

#[pymodule]
pub fn nonsep(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyGraph>()?;
    m.add_class::<PyShape>()?;
    m.add_class::<PyEmbedding>()?;
    m.add_class::<PySolution>()?;
    m.add_function(wrap_pyfunction!(find, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add("NonsepError", py.get_type::<NonsepError>())?;
    m.add("PreconditionError", py.get_type::<PreconditionError>())?;
    m.add("NotFoundError", py.get_type::<NotFoundError>())?;
    m.add("ContradictionError", py.get_type::<ContradictionError>())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn find_and_verify_through_python_types() {
        Python::attach(|py| {
            let host = PyGraph::named("complete:8").unwrap();
            let shape = PyShape::new("ps:2:5").unwrap();
            let sol = find(py, &host, &shape, None).unwrap();
            assert!(verify(&host, &sol.tree, None).unwrap());
            assert!(oracle(py, &host, &shape, None).unwrap().is_some());
        });
    }

    #[test]
    fn errors_map_to_exception_types() {
        Python::attach(|py| {
            let c6 = PyGraph::named("cycle:6").unwrap();
            let star = PyShape::new("star:3").unwrap();
            let err = find(py, &c6, &star, None).err().unwrap();
            assert!(err.is_instance_of::<PreconditionError>(py));
            assert!(err.is_instance_of::<NonsepError>(py));
            assert!(PyShape::new("star:x").err().unwrap().is_instance_of::<PyValueError>(py));
            assert!(PyGraph::from_edge_list("2 1 undirected\n0 9\n").is_err());
        });
    }
}
