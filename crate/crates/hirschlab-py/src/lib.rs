//! Python bindings: rings, polynomials, weighted graphs, and the report
//! commands. Report-producing functions return JSON strings matching the
//! CLI's output; `json.loads` them on the Python side.

use std::collections::BTreeSet;
use std::sync::Arc;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use hirschlab::commands::{self, Options, WeightsRequest};
use hirschlab::dual_graph::{self, AnalyzerConfig};
use hirschlab::error::Error;
use hirschlab::graph::{ExtNat, WeightedGraph};
use hirschlab::input::{parse_document, parse_polynomial, parse_ring_declaration};
use hirschlab::{PolyRing, Polynomial, TermOrder};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::MinimalPrimeCap { .. } | Error::SubsetCapExceeded { .. } => {
            PyRuntimeError::new_err(e.to_string())
        }
        other => PyValueError::new_err(other.to_string()),
    }
}

fn parse_order(name: Option<&str>) -> PyResult<Option<TermOrder>> {
    name.map(TermOrder::parse).transpose().map_err(to_py_err)
}

fn options(order: Option<&str>, prime_cap: Option<usize>, subset_cap: Option<usize>) -> PyResult<Options> {
    let mut config = AnalyzerConfig::default();
    if let Some(cap) = prime_cap {
        config.prime_cap = cap;
    }
    if let Some(cap) = subset_cap {
        config.subset_cap = cap;
    }
    Ok(Options { order: parse_order(order)?, config })
}

fn to_json<T: serde::Serialize>(doc: &T) -> String {
    serde_json::to_string(doc).expect("reports serialize")
}

/// A polynomial ring over QQ or GF(p), declared as `"QQ[x,y,z]"` or
/// `"GF(7)[x1,x2]"`.
#[pyclass(frozen)]
struct Ring {
    inner: Arc<PolyRing>,
}

#[pymethods]
impl Ring {
    #[new]
    fn new(declaration: &str) -> PyResult<Self> {
        let ring = parse_ring_declaration(declaration)
            .map_err(|e| PyValueError::new_err(format!("bad ring declaration: {e}")))?;
        Ok(Ring { inner: ring })
    }

    /// Parses a polynomial in this ring.
    fn poly(&self, text: &str) -> PyResult<Poly> {
        let p = parse_polynomial(&self.inner, text).map_err(to_py_err)?;
        Ok(Poly { inner: p })
    }

    #[getter]
    fn variables(&self) -> Vec<String> {
        self.inner.names().to_vec()
    }

    #[getter]
    fn characteristic(&self) -> u64 {
        self.inner.field().characteristic()
    }

    fn __repr__(&self) -> String {
        self.inner.to_string()
    }
}

/// An exact multivariate polynomial. Displays in decreasing degrevlex
/// order; use `display(order)` for another term order.
#[pyclass(frozen, from_py_object)]
#[derive(Clone)]
struct Poly {
    inner: Polynomial,
}

#[pymethods]
impl Poly {
    fn __add__(&self, other: &Poly) -> PyResult<Poly> {
        Ok(Poly { inner: self.inner.add(&other.inner).map_err(to_py_err)? })
    }

    fn __sub__(&self, other: &Poly) -> PyResult<Poly> {
        Ok(Poly { inner: self.inner.sub(&other.inner).map_err(to_py_err)? })
    }

    fn __mul__(&self, other: &Poly) -> PyResult<Poly> {
        Ok(Poly { inner: self.inner.mul(&other.inner).map_err(to_py_err)? })
    }

    fn __neg__(&self) -> Poly {
        Poly { inner: self.inner.neg() }
    }

    fn __pow__(&self, exp: u32, _mod: Option<u32>) -> PyResult<Poly> {
        Ok(Poly { inner: self.inner.pow(exp).map_err(to_py_err)? })
    }

    fn __eq__(&self, other: &Poly) -> bool {
        self.inner == other.inner
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn total_degree(&self) -> Option<u32> {
        self.inner.total_degree()
    }

    /// Leading monomial under the named term order.
    fn leading_monomial(&self, order: &str) -> PyResult<String> {
        let ord = TermOrder::parse(order).map_err(to_py_err)?;
        let m = self.inner.leading_monomial(ord).map_err(to_py_err)?;
        Ok(m.display(self.inner.ring().names()))
    }

    fn display(&self, order: &str) -> PyResult<String> {
        let ord = TermOrder::parse(order).map_err(to_py_err)?;
        Ok(self.inner.display(ord))
    }

    fn __repr__(&self) -> String {
        self.inner.display(TermOrder::DegRevLex)
    }

    fn __str__(&self) -> String {
        self.inner.display(TermOrder::DegRevLex)
    }
}

/// A finite simple graph with positive vertex weights (1-based edges).
#[pyclass(frozen)]
struct Graph {
    inner: WeightedGraph,
}

fn ext_to_py(v: ExtNat) -> Option<u64> {
    v.finite()
}

#[pymethods]
impl Graph {
    #[new]
    #[pyo3(signature = (s, edges, weights=None))]
    fn new(s: usize, edges: Vec<(usize, usize)>, weights: Option<Vec<u64>>) -> PyResult<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == 0 || b == 0 {
                return Err(PyValueError::new_err("edges are 1-based"));
            }
            set.insert((a - 1, b - 1));
        }
        let weights = weights.unwrap_or_else(|| vec![1; s]);
        let inner = WeightedGraph::new(s, set, weights).map_err(to_py_err)?;
        Ok(Graph { inner })
    }

    /// Shortest-path diameter; None when the graph is disconnected.
    fn diameter(&self) -> Option<u64> {
        ext_to_py(self.inner.diameter())
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// Classical vertex connectivity; None means no separating set exists.
    fn vertex_connectivity(&self) -> Option<u64> {
        ext_to_py(self.inner.vertex_connectivity())
    }

    /// Largest r with the graph (r,w)-connected; None means no separating
    /// set exists.
    fn weighted_connectivity(&self) -> Option<u64> {
        ext_to_py(self.inner.weighted_connectivity())
    }

    fn is_l_connected(&self, l: u64) -> PyResult<bool> {
        if l == 0 {
            return Err(PyValueError::new_err("l must be positive"));
        }
        Ok(self.inner.is_l_connected(l))
    }

    fn is_rw_connected(&self, r: u64) -> PyResult<bool> {
        if r == 0 {
            return Err(PyValueError::new_err("r must be positive"));
        }
        Ok(self.inner.is_rw_connected(r))
    }

    fn total_weight(&self) -> u64 {
        self.inner.total_weight()
    }

    /// Connectivity report as a JSON string.
    fn connectivity_json(&self) -> String {
        to_json(&commands::connectivity_report(&self.inner))
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(s={}, edges={}, total_weight={})",
            self.inner.vertex_count(),
            self.inner.edge_count(),
            self.inner.total_weight()
        )
    }
}

#[pyfunction]
#[pyo3(signature = (text, order=None))]
fn gb(text: &str, order: Option<&str>) -> PyResult<String> {
    let doc = parse_document(text).map_err(to_py_err)?;
    let opts = options(order, None, None)?;
    Ok(to_json(&commands::gb_report(&doc, &opts).map_err(to_py_err)?))
}

#[pyfunction]
#[pyo3(signature = (text, order=None))]
fn initial(text: &str, order: Option<&str>) -> PyResult<String> {
    let doc = parse_document(text).map_err(to_py_err)?;
    let opts = options(order, None, None)?;
    Ok(to_json(&commands::initial_report(&doc, &opts).map_err(to_py_err)?))
}

#[pyfunction]
#[pyo3(signature = (text, prime_cap=None))]
fn minprimes(text: &str, prime_cap: Option<usize>) -> PyResult<String> {
    let doc = parse_document(text).map_err(to_py_err)?;
    let opts = options(None, prime_cap, None)?;
    Ok(to_json(&commands::minprimes_report(&doc, &opts).map_err(to_py_err)?))
}

#[pyfunction]
#[pyo3(signature = (text, order=None))]
fn hilbert(text: &str, order: Option<&str>) -> PyResult<String> {
    let doc = parse_document(text).map_err(to_py_err)?;
    let opts = options(order, None, None)?;
    Ok(to_json(&commands::hilbert_report(&doc, &opts).map_err(to_py_err)?))
}

#[pyfunction]
#[pyo3(signature = (text, order=None, weights="unit", prime_cap=None))]
fn dualgraph(
    text: &str,
    order: Option<&str>,
    weights: &str,
    prime_cap: Option<usize>,
) -> PyResult<String> {
    let doc = parse_document(text).map_err(to_py_err)?;
    let opts = options(order, prime_cap, None)?;
    let req = match weights {
        "unit" => WeightsRequest::Unit,
        "multiplicity" => WeightsRequest::Multiplicity,
        "file" => WeightsRequest::File,
        other => {
            return Err(PyValueError::new_err(format!(
                "weights must be unit | multiplicity | file, got `{other}`"
            )))
        }
    };
    Ok(to_json(&commands::dualgraph_report(&doc, req, &opts).map_err(to_py_err)?))
}

#[pyfunction]
#[pyo3(signature = (text, order=None))]
fn hirsch(text: &str, order: Option<&str>) -> PyResult<String> {
    let doc = parse_document(text).map_err(to_py_err)?;
    let opts = options(order, None, None)?;
    Ok(to_json(&commands::hirsch_report(&doc, &opts).map_err(to_py_err)?))
}

#[pyfunction]
#[pyo3(signature = (text, order=None, subset_cap=None))]
fn compare_initial(text: &str, order: Option<&str>, subset_cap: Option<usize>) -> PyResult<String> {
    let doc = parse_document(text).map_err(to_py_err)?;
    let opts = options(order, None, subset_cap)?;
    Ok(to_json(&commands::compare_report(&doc, &opts).map_err(to_py_err)?))
}

#[pyfunction]
#[pyo3(signature = (text, order=None))]
fn certify_ci(text: &str, order: Option<&str>) -> PyResult<String> {
    let doc = parse_document(text).map_err(to_py_err)?;
    let opts = options(order, None, None)?;
    Ok(to_json(&commands::certify_report(&doc, &opts).map_err(to_py_err)?))
}

#[pyfunction]
#[pyo3(signature = (weights, r, l, s=None, hvec=None))]
fn bounds(
    weights: Vec<u64>,
    r: u64,
    l: u64,
    s: Option<u64>,
    hvec: Option<Vec<u64>>,
) -> PyResult<String> {
    let doc =
        commands::bounds_report(&weights, r, l, s, hvec.as_deref()).map_err(to_py_err)?;
    Ok(to_json(&doc))
}

#[pyfunction]
fn menger_bound(s: u64, l: u64) -> PyResult<u64> {
    hirschlab::menger_bound(s, l).map_err(to_py_err)
}

#[pyfunction]
fn rw_bound(e: u64, r: u64) -> PyResult<u64> {
    hirschlab::rw_bound(e, r).map_err(to_py_err)
}

#[pyfunction]
fn hvec_bound(hvec: Vec<u64>) -> PyResult<u64> {
    dual_graph::gorenstein_hvec_bound(&hvec).map_err(to_py_err)
}

#[pyfunction]
fn ci_regularity(degrees: Vec<u64>) -> PyResult<u64> {
    dual_graph::ci_regularity(&degrees).map_err(to_py_err)
}

#[pymodule(name = "hirschlab")]
fn hirschlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Ring>()?;
    m.add_class::<Poly>()?;
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(gb, m)?)?;
    m.add_function(wrap_pyfunction!(initial, m)?)?;
    m.add_function(wrap_pyfunction!(minprimes, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert, m)?)?;
    m.add_function(wrap_pyfunction!(dualgraph, m)?)?;
    m.add_function(wrap_pyfunction!(hirsch, m)?)?;
    m.add_function(wrap_pyfunction!(compare_initial, m)?)?;
    m.add_function(wrap_pyfunction!(certify_ci, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add_function(wrap_pyfunction!(menger_bound, m)?)?;
    m.add_function(wrap_pyfunction!(rw_bound, m)?)?;
    m.add_function(wrap_pyfunction!(hvec_bound, m)?)?;
    m.add_function(wrap_pyfunction!(ci_regularity, m)?)?;
    Ok(())
}
