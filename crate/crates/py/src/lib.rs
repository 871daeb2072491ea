//! Python bindings: exact scalars, chain complexes, graded bases, the
//! torsion engine and the sphere machinery, mirroring the CLI surface.
//!
//! Build with `cargo build --release -p torsion-lab-py`; the resulting
//! `libtorsion_lab_py.so` imports as the module `torsion_lab_py` (see
//! `python/smoke_test.py`).

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use torsion_lab::chain::ChainComplex;
use torsion_lab::io;
use torsion_lab::scalar::Rational;
use torsion_lab::sphere;
use torsion_lab::torsion;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_radius(text: &str) -> PyResult<Rational> {
    use num::Signed;
    let r = io::parse_rational(text).map_err(value_err)?;
    if r.is_positive() {
        Ok(r)
    } else {
        Err(PyValueError::new_err(format!("radius must be positive, got {text}")))
    }
}

fn parse_model(text: &str) -> PyResult<sphere::CellModel> {
    match text {
        "minimal" => Ok(sphere::CellModel::Minimal),
        "hemispheric" => Ok(sphere::CellModel::Hemispheric),
        other => Err(PyValueError::new_err(format!(
            "unknown cell model {other:?}; expected \"minimal\" or \"hemispheric\""
        ))),
    }
}

fn sphere_spec(dim: usize, radius: &str, rank: usize, model: &str) -> PyResult<sphere::SphereSpec> {
    sphere::SphereSpec::new(dim, parse_radius(radius)?, rank, parse_model(model)?)
        .ok_or_else(|| PyValueError::new_err("sphere needs dim >= 1 and rank >= 1"))
}

/// Exact positive scalar sqrt(s * pi^u).
#[pyclass(name = "PiRadical", skip_from_py_object)]
#[derive(Clone)]
struct PyPiRadical {
    inner: torsion_lab::PiRadical,
}

#[pymethods]
impl PyPiRadical {
    /// Parses the rendering grammar: "R", "R*pi^K", or "sqrt(R*pi^K)".
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyPiRadical { inner: io::parse_exact(text).map_err(value_err)? })
    }

    /// Embeds a positive rational "p/q".
    #[staticmethod]
    fn from_rational(text: &str) -> PyResult<Self> {
        let r = io::parse_rational(text).map_err(value_err)?;
        Ok(PyPiRadical {
            inner: torsion_lab::PiRadical::from_rational(&r).map_err(value_err)?,
        })
    }

    #[staticmethod]
    fn one() -> Self {
        PyPiRadical { inner: torsion_lab::PiRadical::one() }
    }

    /// Canonical text form.
    fn render(&self) -> String {
        io::render_exact(&self.inner)
    }

    /// Nearest double.
    fn to_float(&self) -> PyResult<f64> {
        self.inner.to_f64().map_err(value_err)
    }

    /// The components (s, u) of sqrt(s * pi^u), with s rendered as "p/q".
    fn components(&self) -> (String, i64) {
        (io::render_rational(self.inner.s()), self.inner.u())
    }

    fn sqrt(&self) -> PyResult<Self> {
        Ok(PyPiRadical { inner: self.inner.sqrt().map_err(value_err)? })
    }

    fn pow(&self, k: i64) -> Self {
        PyPiRadical { inner: self.inner.powi(k) }
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyPiRadical { inner: &self.inner * &other.inner }
    }

    fn __truediv__(&self, other: &Self) -> Self {
        PyPiRadical { inner: &self.inner / &other.inner }
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.render()
    }

    fn __repr__(&self) -> String {
        format!("PiRadical({:?})", self.render())
    }
}

/// Chain complex of rational vector spaces.
#[pyclass(name = "ChainComplex", skip_from_py_object)]
#[derive(Clone)]
struct PyChainComplex {
    inner: ChainComplex,
}

#[pymethods]
impl PyChainComplex {
    /// Parses a complex document (plain or group-ring form).
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let parsed = io::parse_complex_document(text).map_err(value_err)?;
        Ok(PyChainComplex { inner: parsed.complex().clone() })
    }

    /// The cell model of a sphere ("minimal" or "hemispheric").
    #[staticmethod]
    #[pyo3(signature = (dim, radius = "1", rank = 1, model = "minimal"))]
    fn sphere(dim: usize, radius: &str, rank: usize, model: &str) -> PyResult<Self> {
        Ok(PyChainComplex { inner: sphere_spec(dim, radius, rank, model)?.complex() })
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees().to_vec()
    }

    fn total_dimension(&self) -> usize {
        self.inner.total_dimension()
    }

    fn betti_numbers(&self) -> Vec<usize> {
        self.inner.betti_numbers()
    }

    fn validate(&self) -> PyResult<()> {
        self.inner.validate().map_err(value_err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&io::complex_to_document(&self.inner)).expect("serializes")
    }

    fn __repr__(&self) -> String {
        format!("ChainComplex(degrees={:?})", self.inner.degrees())
    }
}

/// Graded homology basis for a chain complex.
#[pyclass(name = "GradedBasis", skip_from_py_object)]
#[derive(Clone)]
struct PyGradedBasis {
    inner: torsion::GradedBasis,
}

#[pymethods]
impl PyGradedBasis {
    /// Parses a basis document for a complex with `num_degrees` degrees.
    #[staticmethod]
    fn from_json(text: &str, num_degrees: usize) -> PyResult<Self> {
        Ok(PyGradedBasis { inner: io::parse_basis_document(text, num_degrees).map_err(value_err)? })
    }

    /// The harmonic homology basis of a sphere cell model.
    #[staticmethod]
    #[pyo3(signature = (dim, radius = "1", rank = 1, model = "minimal"))]
    fn sphere_harmonic(dim: usize, radius: &str, rank: usize, model: &str) -> PyResult<Self> {
        Ok(PyGradedBasis { inner: sphere_spec(dim, radius, rank, model)?.harmonic_basis() })
    }

    /// An empty basis (for acyclic complexes).
    #[staticmethod]
    fn empty(num_degrees: usize) -> Self {
        PyGradedBasis { inner: torsion::GradedBasis::empty(num_degrees) }
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&io::basis_to_document(&self.inner)).expect("serializes")
    }

    fn __repr__(&self) -> String {
        let counts: Vec<usize> = self.inner.degrees().iter().map(Vec::len).collect();
        format!("GradedBasis(vectors_per_degree={counts:?})")
    }
}

/// Exact torsion of a complex with respect to a graded homology basis.
#[pyfunction]
fn torsion_exact(complex: &PyChainComplex, basis: &PyGradedBasis) -> PyResult<PyPiRadical> {
    match torsion::torsion_exact(&complex.inner, &basis.inner).map_err(value_err)? {
        torsion::TorsionValue::Exact(v) => Ok(PyPiRadical { inner: v }),
        torsion::TorsionValue::Float { .. } => Err(PyRuntimeError::new_err("exact path")),
    }
}

/// Floating-point torsion; returns (value, relative_error_bound).
#[pyfunction]
#[pyo3(signature = (complex, basis, tol = 1e-9))]
fn torsion_float(
    complex: &PyChainComplex,
    basis: &PyGradedBasis,
    tol: f64,
) -> PyResult<(f64, f64)> {
    let fc = torsion::to_float_complex(&complex.inner).map_err(value_err)?;
    let fb = torsion::to_float_basis(&basis.inner).map_err(value_err)?;
    match torsion::torsion_float(&fc, &fb, tol).map_err(value_err)? {
        torsion::TorsionValue::Float { value, relative_error } => Ok((value, relative_error)),
        torsion::TorsionValue::Exact(_) => Err(PyRuntimeError::new_err("float path")),
    }
}

/// Exact volume of the n-sphere of rational radius.
#[pyfunction]
#[pyo3(signature = (dim, radius = "1"))]
fn sphere_volume(dim: usize, radius: &str) -> PyResult<PyPiRadical> {
    if dim < 1 {
        return Err(PyValueError::new_err("dim must be at least 1"));
    }
    Ok(PyPiRadical { inner: sphere::sphere_volume(dim, &parse_radius(radius)?) })
}

/// Engine torsion of a sphere model, cross-checked against the closed form.
#[pyfunction]
#[pyo3(signature = (dim, radius = "1", rank = 1, model = "minimal"))]
fn sphere_torsion(dim: usize, radius: &str, rank: usize, model: &str) -> PyResult<PyPiRadical> {
    let spec = sphere_spec(dim, radius, rank, model)?;
    let engine = torsion::torsion_exact(&spec.complex(), &spec.harmonic_basis())
        .map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    let closed = spec.closed_torsion();
    match engine {
        torsion::TorsionValue::Exact(v) if v == closed => Ok(PyPiRadical { inner: v }),
        _ => Err(PyRuntimeError::new_err("engine disagrees with the closed form")),
    }
}

/// Closed-form torsion of a sphere (1 for even dim, Vol^rank for odd).
#[pyfunction]
#[pyo3(signature = (dim, radius = "1", rank = 1))]
fn sphere_torsion_closed(dim: usize, radius: &str, rank: usize) -> PyResult<PyPiRadical> {
    let spec = sphere_spec(dim, radius, rank, "minimal")?;
    Ok(PyPiRadical { inner: spec.closed_torsion() })
}

/// Closed-form torsion of a product of spheres.
#[pyfunction]
#[pyo3(signature = (n, k, a = "1", b = "1"))]
fn product_torsion(n: usize, k: usize, a: &str, b: &str) -> PyResult<PyPiRadical> {
    let spec = sphere::ProductSpec::new(n, k, parse_radius(a)?, parse_radius(b)?)
        .ok_or_else(|| PyValueError::new_err("product needs both dimensions >= 1"))?;
    Ok(PyPiRadical { inner: sphere::product_torsion_closed(&spec) })
}

/// The spectral-side closed form 2 pi^(k+1) l^(2k+1) / k! for S^(2k+1).
#[pyfunction]
#[pyo3(signature = (k, radius = "1"))]
fn weng_you_torsion(k: u64, radius: &str) -> PyResult<PyPiRadical> {
    Ok(PyPiRadical { inner: sphere::weng_you_torsion(k, &parse_radius(radius)?) })
}

/// Simpson-quadrature sphere volume (independent of the closed form).
#[pyfunction]
#[pyo3(signature = (dim, radius = "1", panels = 1024))]
fn volume_quadrature(dim: usize, radius: &str, panels: usize) -> PyResult<f64> {
    if dim < 1 {
        return Err(PyValueError::new_err("dim must be at least 1"));
    }
    if panels < 64 || panels % 2 != 0 {
        return Err(PyValueError::new_err("panels must be even and at least 64"));
    }
    Ok(sphere::volume_quadrature(dim, &parse_radius(radius)?, panels))
}

#[pyfunction]
fn euler_characteristic(n: usize) -> PyResult<i64> {
    if n < 1 {
        return Err(PyValueError::new_err("n must be at least 1"));
    }
    Ok(sphere::euler_characteristic(n))
}

/// Runs every property suite; returns (name, passed, cases, failures, detail).
#[pyfunction]
#[pyo3(name = "selfcheck")]
fn run_selfcheck() -> Vec<(String, bool, usize, usize, String)> {
    torsion_lab::selfcheck::run_all()
        .into_iter()
        .map(|s| (s.name, s.passed, s.cases, s.failures, s.detail))
        .collect()
}

#[pymodule]
fn torsion_lab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPiRadical>()?;
    m.add_class::<PyChainComplex>()?;
    m.add_class::<PyGradedBasis>()?;
    m.add_function(wrap_pyfunction!(torsion_exact, m)?)?;
    m.add_function(wrap_pyfunction!(torsion_float, m)?)?;
    m.add_function(wrap_pyfunction!(sphere_volume, m)?)?;
    m.add_function(wrap_pyfunction!(sphere_torsion, m)?)?;
    m.add_function(wrap_pyfunction!(sphere_torsion_closed, m)?)?;
    m.add_function(wrap_pyfunction!(product_torsion, m)?)?;
    m.add_function(wrap_pyfunction!(weng_you_torsion, m)?)?;
    m.add_function(wrap_pyfunction!(volume_quadrature, m)?)?;
    m.add_function(wrap_pyfunction!(euler_characteristic, m)?)?;
    m.add_function(wrap_pyfunction!(run_selfcheck, m)?)?;
    Ok(())
}
