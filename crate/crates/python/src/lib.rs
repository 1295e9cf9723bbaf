//! Python bindings for the `betaexp` library.

use betaexp::catalog::{catalog_expansion, frg_expected};
use betaexp::companion::{companion_poly, cofactor_analysis, pseudo_cofactor, true_cofactor};
use betaexp::expander::{greedy_expand, DEFAULT_MAX_STEPS};
use betaexp::family::{defining_poly, pisot_root_of, FamilyId, FamilySeries};
use betaexp::realroot::isolate_root_above_1;
use betaexp::render::render_series;
use betaexp::verify::{parse_checks, parse_families, run_sweep, sweep_instances};
use betaexp::{ExpansionWord, IntPolynomial, RationalFunction};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyBytes;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Digits as a Python list rather than `bytes`.
fn digit_list(d: &[u8]) -> Vec<u32> {
    d.iter().map(|&x| x.into()).collect()
}

/// Integer polynomial; accepts `x^3-x-1` or `coeffs=-1,-1,0,1`.
#[pyclass(name = "Polynomial", frozen)]
struct PyPolynomial(IntPolynomial);

#[pymethods]
impl PyPolynomial {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(err)
    }

    /// Coefficients in ascending order.
    #[getter]
    fn coeffs(&self) -> Vec<BigInt> {
        self.0.coeffs().to_vec()
    }

    #[getter]
    fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    fn coeff_string(&self) -> String {
        self.0.to_coeff_string()
    }

    /// The unique root in (1, 2) as a float, if the polynomial has one above 1 there.
    fn root(&self) -> PyResult<Option<f64>> {
        let beta = isolate_root_above_1(&self.0).map_err(err)?;
        Ok(beta.filter(|b| b.in_open_unit_to_two()).map(|b| b.to_f64()))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}')", self.0)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

/// Eventually periodic digit word such as `11(10)^w` or `1101`.
#[pyclass(name = "Word", frozen)]
struct PyWord(ExpansionWord);

#[pymethods]
impl PyWord {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse::<ExpansionWord>().map(|w| Self(w.canonicalize())).map_err(err)
    }

    #[getter]
    fn preperiod(&self) -> Vec<u32> {
        digit_list(self.0.pre())
    }

    #[getter]
    fn period(&self) -> Vec<u32> {
        digit_list(self.0.per())
    }

    #[getter]
    fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    fn digits(&self, count: usize) -> Vec<u32> {
        digit_list(&self.0.digits(count))
    }

    fn parry_valid(&self) -> bool {
        self.0.parry_valid()
    }

    fn frg_check(&self) -> bool {
        self.0.frg_check()
    }

    fn companion(&self) -> PyPolynomial {
        PyPolynomial(companion_poly(&self.0))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Word('{}')", self.0)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

/// A family instance such as `PhiA+(3,4)` or `Chi`.
#[pyclass(name = "Family", frozen)]
struct PyFamily(FamilyId);

#[pymethods]
impl PyFamily {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(err)
    }

    fn defining_poly(&self) -> PyResult<PyPolynomial> {
        defining_poly(&self.0).map(PyPolynomial).map_err(err)
    }

    /// Greedy expansion of 1, or None when there is no Pisot root in (1, 2).
    #[pyo3(signature = (max_steps = DEFAULT_MAX_STEPS))]
    fn expand(&self, max_steps: usize) -> PyResult<Option<PyWord>> {
        let Some(beta) = pisot_root_of(&self.0).map_err(err)? else {
            return Ok(None);
        };
        greedy_expand(&beta, max_steps).map(|w| Some(PyWord(w))).map_err(err)
    }

    /// `(status, word, cofactor)` from the closed-form tables.
    fn catalog(&self) -> PyResult<(String, Option<PyWord>, Option<String>)> {
        let e = catalog_expansion(&self.0).map_err(err)?;
        Ok((
            e.status.as_str().to_string(),
            e.word.map(PyWord),
            e.expected_cofactor.as_ref().map(ToString::to_string),
        ))
    }

    fn frg_expected(&self) -> PyResult<String> {
        frg_expected(&self.0).map(|c| c.as_str().to_string()).map_err(err)
    }

    /// `(pseudo, true)` co-factors of a word's companion polynomial.
    fn cofactors(&self, word: &PyWord) -> PyResult<(String, Option<String>)> {
        let p = defining_poly(&self.0).map_err(err)?;
        let r = companion_poly(&word.0);
        let q = pseudo_cofactor(&r, &p).map_err(err)?;
        Ok((q.to_string(), true_cofactor(&r, &p).map(|t| t.to_string())))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Family('{}')", self.0)
    }
}

/// Greedy expansion of 1 in the base given by the root of `poly` in (1, 2).
#[pyfunction]
#[pyo3(signature = (poly, max_steps = DEFAULT_MAX_STEPS))]
fn expand(poly: &str, max_steps: usize) -> PyResult<PyWord> {
    let f: IntPolynomial = poly.parse().map_err(err)?;
    let beta = isolate_root_above_1(&f)
        .map_err(err)?
        .filter(|b| b.in_open_unit_to_two())
        .ok_or_else(|| err("no root in (1, 2)"))?;
    greedy_expand(&beta, max_steps).map(PyWord).map_err(err)
}

/// Whether a rational function (e.g. `(x^2+1)/(x-1)`) is a product of cyclotomic factors.
#[pyfunction]
fn is_cyclotomic_product(text: &str) -> PyResult<bool> {
    let q: RationalFunction = text.parse().map_err(err)?;
    Ok(cofactor_analysis(&q).cyclotomic_product)
}

/// Verification sweep; returns one JSON line per instance.
#[pyfunction]
#[pyo3(signature = (families = "all", r = (1, 6), n = (1, 40), checks = "all", max_steps = DEFAULT_MAX_STEPS))]
fn verify(families: &str, r: (u32, u32), n: (u32, u32), checks: &str, max_steps: usize) -> PyResult<Vec<String>> {
    let fams = parse_families(families).map_err(err)?;
    let checks = parse_checks(checks).map_err(err)?;
    let ids = sweep_instances(&fams, r.0..=r.1, n.0..=n.1);
    let reports = run_sweep(&ids, &checks, max_steps).map_err(err)?;
    Ok(reports.iter().map(|rep| rep.to_json_line(false)).collect())
}

/// Binary PPM of a family series, one row per n.
#[pyfunction]
#[pyo3(signature = (series, n, width = 300))]
fn render_ppm<'py>(py: Python<'py>, series: &str, n: (u32, u32), width: usize) -> PyResult<Bound<'py, PyBytes>> {
    if width == 0 {
        return Err(err("width must be at least 1"));
    }
    let s: FamilySeries = series.parse().map_err(err)?;
    let img = render_series(&s, n.0..=n.1, width).map_err(err)?;
    Ok(PyBytes::new(py, &img.to_ppm()))
}

#[pymodule]
pub fn betaexp_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyWord>()?;
    m.add_class::<PyFamily>()?;
    m.add_function(wrap_pyfunction!(expand, m)?)?;
    m.add_function(wrap_pyfunction!(is_cyclotomic_product, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(render_ppm, m)?)?;
    Ok(())
}
