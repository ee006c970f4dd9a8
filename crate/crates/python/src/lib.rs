#![allow(clippy::useless_conversion)]

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use neardomain::json::{parse_document, Document, NearDomainJson, PairGroupJson, PhiJson};
use neardomain::two_transitive::{roundtrip_theorem2_action, roundtrip_theorem2_phi};
use neardomain::{
    a_map, build_group, check_derived_identities, classify, f_l_map, lemma_closed_forms,
    make_example, nearfield_census, search_phi, validate_near_domain, validate_phi,
    verify_example_formulas, ExampleSpec, Field, GroupTable, Report,
};

fn err(e: neardomain::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<T: serde::Serialize>(py: Python<'_>, value: &T) -> PyResult<PyObject> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let json = py.import_bound("json")?;
    Ok(json.call_method1("loads", (text,))?.unbind())
}

fn reports(py: Python<'_>, reports: &[Report]) -> PyResult<PyObject> {
    let out = PyDict::new_bound(py);
    out.set_item("passed", reports.iter().all(Report::passed))?;
    out.set_item(
        "text",
        reports
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join("\n"),
    )?;
    out.set_item("reports", to_py(py, &reports)?)?;
    Ok(out.into_any().unbind())
}

fn spec(q: usize, family: &str, a: Option<usize>) -> PyResult<ExampleSpec> {
    match (family, a) {
        ("scaling", Some(a)) => Ok(ExampleSpec::scaling(q, a)),
        ("inverse", None) => Ok(ExampleSpec::inverse(q)),
        ("scaling", None) => Err(PyValueError::new_err("the scaling family needs a")),
        _ => Err(PyValueError::new_err(format!(
            "unknown family {family:?} or stray a"
        ))),
    }
}

/// A phi-system `(B, ·, ⁻¹, φ, 0)` with carrier `{0..n-1}`, `0` the zero and `1` the unit.
#[pyclass(name = "PhiSystem", module = "neardomain_py")]
#[derive(Clone)]
struct PyPhiSystem(neardomain::PhiSystem);

#[pymethods]
impl PyPhiSystem {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        match parse_document(text).map_err(err)? {
            Document::Phi(s) => Ok(PyPhiSystem(s)),
            _ => Err(PyValueError::new_err("not a phi-system document")),
        }
    }

    /// `φ(x) = 1 − x` over `GF(q)`.
    #[staticmethod]
    fn standard(q: usize) -> PyResult<Self> {
        Ok(PyPhiSystem(neardomain::PhiSystem::standard(
            &Field::of_order(q).map_err(err)?,
        )))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn phi(&self) -> Vec<usize> {
        self.0.phi_map().to_vec()
    }

    fn mul(&self, x: usize, y: usize) -> PyResult<usize> {
        let n = self.0.n();
        if x >= n || y >= n {
            return Err(PyValueError::new_err(format!(
                "element out of range 0..{n}"
            )));
        }
        Ok(self.0.ext_mul(x, y))
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&PhiJson::from(&self.0)).expect("serializable")
    }

    fn validate(&self, py: Python<'_>) -> PyResult<PyObject> {
        let r = validate_phi(&self.0);
        if r.passed() {
            reports(py, &[r, check_derived_identities(&self.0)])
        } else {
            reports(py, &[r])
        }
    }

    fn f_l_map(&self, l: Vec<usize>) -> PyResult<PyNearDomain> {
        Ok(PyNearDomain(f_l_map(&self.0, &l).map_err(err)?))
    }

    fn build_group(&self) -> PyResult<PyPairGroup> {
        Ok(PyPairGroup(build_group(&self.0).map_err(err)?))
    }

    #[pyo3(signature = (base = (1, 0)))]
    fn roundtrip2(&self, py: Python<'_>, base: (usize, usize)) -> PyResult<PyObject> {
        let forward = roundtrip_theorem2_phi(&self.0, base).map_err(err)?;
        let action = build_group(&self.0)
            .and_then(|g| g.to_permutation_action(base))
            .map_err(err)?;
        let backward = roundtrip_theorem2_action(&action).map_err(err)?;
        reports(py, &[forward, backward])
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("PhiSystem(n={}, phi={:?})", self.0.n(), self.0.phi_map())
    }
}

/// A right near-domain with partial `+`, `−` over `B × B₁` and the bijection `L`.
#[pyclass(name = "NearDomain", module = "neardomain_py")]
#[derive(Clone)]
struct PyNearDomain(neardomain::NearDomain);

#[pymethods]
impl PyNearDomain {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        match parse_document(text).map_err(err)? {
            Document::NearDomain(d) => Ok(PyNearDomain(d)),
            _ => Err(PyValueError::new_err("not a near-domain document")),
        }
    }

    #[staticmethod]
    #[pyo3(signature = (q, family, a = None))]
    fn example(q: usize, family: &str, a: Option<usize>) -> PyResult<Self> {
        Ok(PyNearDomain(
            make_example(&spec(q, family, a)?).map_err(err)?,
        ))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter(L)]
    fn l_map(&self) -> Vec<usize> {
        self.0.l_map().to_vec()
    }

    fn add(&self, x: usize, y: usize) -> PyResult<usize> {
        self.check(x, y)?;
        Ok(self.0.add(x, y))
    }

    fn sub(&self, x: usize, y: usize) -> PyResult<usize> {
        self.check(x, y)?;
        Ok(self.0.sub(x, y))
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&NearDomainJson::from(&self.0)).expect("serializable")
    }

    fn validate(&self, py: Python<'_>) -> PyResult<PyObject> {
        let (r, w) = validate_near_domain(&self.0);
        let out = reports(py, &[r])?;
        out.bind(py).set_item("witnesses", to_py(py, &w)?)?;
        Ok(out)
    }

    fn lemma(&self, py: Python<'_>) -> PyResult<PyObject> {
        let (r, w) = validate_near_domain(&self.0);
        if !r.passed() {
            return reports(py, &[r]);
        }
        reports(py, &[r, lemma_closed_forms(&self.0, &w)])
    }

    fn classify(&self, py: Python<'_>) -> PyResult<PyObject> {
        to_py(py, &classify(&self.0))
    }

    fn a_map(&self) -> PyResult<PyPhiSystem> {
        Ok(PyPhiSystem(a_map(&self.0).map_err(err)?))
    }

    fn __repr__(&self) -> String {
        format!("NearDomain(n={}, L={:?})", self.0.n(), self.0.l_map())
    }
}

impl PyNearDomain {
    fn check(&self, x: usize, y: usize) -> PyResult<()> {
        let n = self.0.n();
        if x >= n || y == 0 || y >= n {
            return Err(PyValueError::new_err(format!(
                "need x in 0..{n} and y in 1..{n}"
            )));
        }
        Ok(())
    }
}

/// The group on ordered pairs of distinct points built from a phi-system.
#[pyclass(name = "PairGroup", module = "neardomain_py")]
struct PyPairGroup(neardomain::PairGroup);

#[pymethods]
impl PyPairGroup {
    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        self.0.elements().iter().map(|p| (p.x1, p.x2)).collect()
    }

    fn permutations(&self) -> Vec<Vec<usize>> {
        (0..self.0.order()).map(|i| self.0.permutation(i)).collect()
    }

    fn report(&self, py: Python<'_>) -> PyResult<PyObject> {
        reports(py, std::slice::from_ref(self.0.report()))
    }

    #[pyo3(signature = (perms = false))]
    fn to_json(&self, perms: bool) -> String {
        serde_json::to_string(&PairGroupJson::export(&self.0, perms)).expect("serializable")
    }
}

/// Recover a phi-system from a permutation-group JSON document.
#[pyfunction]
#[pyo3(signature = (text, base = None))]
fn from_group(text: &str, base: Option<(usize, usize)>) -> PyResult<PyPhiSystem> {
    let p = match parse_document(text).map_err(err)? {
        Document::Permutations(p) => p,
        _ => return Err(PyValueError::new_err("not a permutation group document")),
    };
    let p = match base {
        Some(b) => p.with_base(b).map_err(err)?,
        None => p,
    };
    Ok(PyPhiSystem(neardomain::from_group(&p).map_err(err)?.system))
}

#[pyfunction]
#[pyo3(signature = (q, family, a = None))]
fn verify_example(py: Python<'_>, q: usize, family: &str, a: Option<usize>) -> PyResult<PyObject> {
    let spec = spec(q, family, a)?;
    let d = make_example(&spec).map_err(err)?;
    let (r, w) = validate_near_domain(&d);
    let formulas = verify_example_formulas(&spec, &d, &w).map_err(err)?;
    reports(py, &[r, formulas])
}

/// Enumerate phi-systems over the multiplicative group of `GF(q)` or over a
/// group-table JSON document, and return the census.
#[pyfunction]
#[pyo3(signature = (q = None, group = None, cap = neardomain::search::DEFAULT_CAP))]
fn search(py: Python<'_>, q: Option<usize>, group: Option<&str>, cap: usize) -> PyResult<PyObject> {
    let table: GroupTable = match (q, group) {
        (Some(q), None) => Field::of_order(q).map_err(err)?.mul_group(),
        (None, Some(text)) => match parse_document(text).map_err(err)? {
            Document::Group(g) => g,
            Document::Phi(s) => s.group().clone(),
            _ => return Err(PyValueError::new_err("not a group table")),
        },
        _ => return Err(PyValueError::new_err("pass exactly one of q or group")),
    };
    let result = search_phi(&table, cap).map_err(err)?;
    let out = PyDict::new_bound(py);
    out.set_item("census", to_py(py, &nearfield_census(&result))?)?;
    out.set_item("survivors", result.survivors.clone())?;
    let reps: Vec<PyPhiSystem> = result
        .representatives
        .into_iter()
        .map(PyPhiSystem)
        .collect();
    out.set_item("representatives", reps.into_py(py))?;
    Ok(out.into_any().unbind())
}

#[pymodule]
fn neardomain_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPhiSystem>()?;
    m.add_class::<PyNearDomain>()?;
    m.add_class::<PyPairGroup>()?;
    m.add_function(wrap_pyfunction!(from_group, m)?)?;
    m.add_function(wrap_pyfunction!(verify_example, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    Ok(())
}
