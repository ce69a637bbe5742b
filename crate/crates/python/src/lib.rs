//! Python bindings. Structured results (counts, catalog records, oracle
//! reports, map reports) cross the boundary as plain dicts and lists.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyTuple;
use semiregular::catalog::{self, CatalogRecord};
use semiregular::enumeration::oracle_diff as core_oracle_diff;
use semiregular::realization::{self, MapDocument, PolyhedralMap, Seed};
use semiregular::{counting, Solid, VertexFigure};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Round-trips through JSON into Python objects.
fn to_py<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(value_error)?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(
    name = "VertexFigure",
    module = "semiregular",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyFigure(VertexFigure);

#[pymethods]
impl PyFigure {
    #[new]
    fn new(degrees: Vec<u32>) -> PyResult<Self> {
        VertexFigure::new(&degrees).map(PyFigure).map_err(value_error)
    }

    #[getter]
    fn degrees(&self) -> Vec<u32> {
        self.0.degrees().to_vec()
    }

    #[getter]
    fn valence(&self) -> usize {
        self.0.valence()
    }

    fn symbol(&self) -> String {
        catalog::format_symbol(&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("VertexFigure({:?})", self.0.degrees())
    }

    fn __len__(&self) -> usize {
        self.0.valence()
    }
}

#[pyclass(name = "PolyhedralMap", module = "semiregular", frozen)]
struct PyMap(PolyhedralMap);

#[pymethods]
impl PyMap {
    /// Builds a map from oriented faces over arbitrary vertex labels.
    #[staticmethod]
    fn from_faces(faces: Vec<Vec<usize>>) -> PyResult<Self> {
        PolyhedralMap::from_faces(&faces).map(PyMap).map_err(value_error)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.0.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    #[getter]
    fn face_count(&self) -> usize {
        self.0.face_count()
    }

    fn faces(&self) -> Vec<Vec<usize>> {
        self.0.faces()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    /// Header line `V E F`, then one line per face.
    fn face_list(&self) -> String {
        self.0.face_list()
    }

    fn analyze<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &realization::analyze(&self.0))
    }

    fn document<'py>(&self, py: Python<'py>, name: &str) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &MapDocument::new(name, &self.0))
    }

    fn dual(&self) -> Self {
        PyMap(realization::dual(&self.0))
    }

    fn truncate(&self) -> Self {
        PyMap(realization::truncate(&self.0))
    }

    fn ambo(&self) -> Self {
        PyMap(realization::ambo(&self.0))
    }

    fn expand(&self) -> Self {
        PyMap(realization::expand(&self.0))
    }

    fn bevel(&self) -> Self {
        PyMap(realization::bevel(&self.0))
    }

    fn snub(&self) -> PyResult<Self> {
        realization::snub(&self.0).map(PyMap).map_err(value_error)
    }

    fn is_bipartite(&self) -> bool {
        realization::two_coloring(&self.0).is_some()
    }

    fn __repr__(&self) -> String {
        format!(
            "PolyhedralMap(V={}, E={}, F={})",
            self.0.vertex_count(),
            self.0.edge_count(),
            self.0.face_count()
        )
    }
}

#[pyfunction]
fn canonical_figure(degrees: Vec<u32>) -> PyResult<PyFigure> {
    semiregular::canonical_figure(&degrees)
        .map(PyFigure)
        .map_err(value_error)
}

#[pyfunction]
fn parse_symbol(symbol: &str) -> PyResult<PyFigure> {
    catalog::parse_symbol(symbol).map(PyFigure).map_err(value_error)
}

/// Exact vertex count as a `fractions.Fraction`.
#[pyfunction]
fn vertex_count<'py>(py: Python<'py>, degrees: Vec<u32>) -> PyResult<Bound<'py, PyAny>> {
    let figure = VertexFigure::new(&degrees).map_err(value_error)?;
    let v = counting::vertex_count(&figure).map_err(value_error)?;
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((*v.numer(), *v.denom()))
}

/// Vertex, edge and face counts of a feasible figure.
#[pyfunction]
fn counts<'py>(py: Python<'py>, degrees: Vec<u32>) -> PyResult<Bound<'py, PyAny>> {
    let figure = VertexFigure::new(&degrees).map_err(value_error)?;
    to_py(py, &semiregular::counts(&figure).map_err(value_error)?)
}

#[pyfunction]
fn enumerate_regular() -> Vec<(u32, u32)> {
    semiregular::enumerate_regular()
}

/// The classification produced by the case analysis, as catalog records.
#[pyfunction]
fn full_catalog<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    let items = semiregular::full_catalog().map_err(value_error)?;
    let records: Vec<CatalogRecord> = items.iter().map(CatalogRecord::from_classification).collect();
    to_py(py, &records)
}

/// The embedded reference tables: `"json"` gives a list of dicts,
/// `"csv"` and `"table"` give text.
#[pyfunction]
#[pyo3(name = "catalog", signature = (format = "json"))]
fn reference_catalog<'py>(py: Python<'py>, format: &str) -> PyResult<Bound<'py, PyAny>> {
    let records: Vec<CatalogRecord> = catalog::reference_catalog()
        .iter()
        .map(CatalogRecord::from_entry)
        .collect();
    match format {
        "json" => to_py(py, &records),
        "csv" => Ok(catalog::to_csv(&records).into_pyobject(py)?.into_any()),
        "table" => Ok(catalog::to_table(&records).into_pyobject(py)?.into_any()),
        other => Err(PyValueError::new_err(format!("unknown format `{other}`"))),
    }
}

#[pyfunction]
fn oracle_diff<'py>(py: Python<'py>, max_p: u32) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &core_oracle_diff(max_p).map_err(value_error)?)
}

/// Builds a named solid, or a prism/antiprism with `n` sides, and checks
/// its vertex figure.
#[pyfunction]
#[pyo3(signature = (name, n = None))]
fn realize(name: &str, n: Option<u32>) -> PyResult<PyMap> {
    let solid: Solid = name.parse().map_err(value_error)?;
    let items = semiregular::full_catalog().map_err(value_error)?;
    let entry = items
        .iter()
        .find(|c| c.solid == solid)
        .expect("every solid is classified");
    realization::realize(entry, n).map(PyMap).map_err(value_error)
}

#[pyfunction]
fn seed(name: &str) -> PyResult<PyMap> {
    let seed: Seed = name.parse().map_err(value_error)?;
    Ok(PyMap(realization::platonic_seed(seed)))
}

#[pyfunction]
fn prism(n: u32) -> PyResult<PyMap> {
    realization::prism(n).map(PyMap).map_err(value_error)
}

#[pyfunction]
fn antiprism(n: u32) -> PyResult<PyMap> {
    realization::antiprism(n).map(PyMap).map_err(value_error)
}

#[pyfunction]
fn analyze<'py>(py: Python<'py>, map: &PyMap) -> PyResult<Bound<'py, PyAny>> {
    map.analyze(py)
}

/// `(kebab-case token, display name)` for every solid.
#[pyfunction]
fn names<'py>(py: Python<'py>) -> PyResult<Vec<Bound<'py, PyTuple>>> {
    Solid::ALL
        .iter()
        .map(|s| PyTuple::new(py, [s.slug(), s.name().to_string()]))
        .collect()
}

#[pymodule]
#[pyo3(name = "semiregular")]
fn semiregular_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFigure>()?;
    m.add_class::<PyMap>()?;
    m.add_function(wrap_pyfunction!(canonical_figure, m)?)?;
    m.add_function(wrap_pyfunction!(parse_symbol, m)?)?;
    m.add_function(wrap_pyfunction!(vertex_count, m)?)?;
    m.add_function(wrap_pyfunction!(counts, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_regular, m)?)?;
    m.add_function(wrap_pyfunction!(full_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(reference_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_diff, m)?)?;
    m.add_function(wrap_pyfunction!(realize, m)?)?;
    m.add_function(wrap_pyfunction!(seed, m)?)?;
    m.add_function(wrap_pyfunction!(prism, m)?)?;
    m.add_function(wrap_pyfunction!(antiprism, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(names, m)?)?;
    Ok(())
}
