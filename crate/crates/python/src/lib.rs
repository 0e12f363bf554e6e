//! Python bindings. Orbits and methods are passed by name ("open", "o1",
//! "o2", "closed"; "positive", "localization", "tseries", "oracle",
//! "blattner"). Library errors surface as `ValueError`.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use sl3_ktypes::charseries;
use sl3_ktypes::compare;
use sl3_ktypes::orbits::{self, Method, Orbit};
use sl3_ktypes::oracle;
use sl3_ktypes::positive::{self, Region, RegionPoint};
use sl3_ktypes::report::{to_json, MultReport};
use sl3_ktypes::svg;
use sl3_ktypes::vecpart::{self, GradedGenerator, GradedTarget};
use sl3_ktypes::weights::{self, GWeight};

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn orbit(name: &str) -> PyResult<Orbit> {
    name.parse().map_err(value_error)
}

fn method(name: &str) -> PyResult<Method> {
    name.parse().map_err(value_error)
}

fn region_name(region: Region) -> &'static str {
    match region {
        Region::FullFlag => "fullflag",
        Region::O1 => "o1",
        Region::O2 => "o2",
        Region::ClosedOrbit => "closed",
        Region::NotInC => "excluded",
    }
}

/// A multiplicity table `λ ↦ mult` for one orbit, parameter pair and method.
#[pyclass(name = "MultTable", frozen, get_all)]
struct PyMultTable {
    orbit: String,
    a: u32,
    b: u32,
    method: String,
    mults: BTreeMap<u32, u64>,
}

#[pymethods]
impl PyMultTable {
    fn to_json(&self) -> String {
        let report = MultReport {
            a: self.a,
            b: self.b,
            orbit: self.orbit.clone(),
            method: self.method.clone(),
            mults: self
                .mults
                .iter()
                .map(|(&lambda, &mult)| sl3_ktypes::report::MultEntry { lambda, mult })
                .collect(),
        };
        to_json(&report)
    }

    fn __len__(&self) -> usize {
        self.mults.len()
    }

    fn __getitem__(&self, lambda: u32) -> PyResult<u64> {
        self.mults
            .get(&lambda)
            .copied()
            .ok_or_else(|| pyo3::exceptions::PyKeyError::new_err(lambda))
    }

    fn __repr__(&self) -> String {
        format!(
            "MultTable(orbit={:?}, a={}, b={}, method={:?}, {} entries)",
            self.orbit,
            self.a,
            self.b,
            self.method,
            self.mults.len()
        )
    }
}

/// Restriction of the SL3 weight `(a, b)` to SO(2), in integer units.
#[pyfunction]
fn restrict(a: i64, b: i64) -> i64 {
    a + b
}

/// `κ(target; gens)` for generators positive on `functional`.
#[pyfunction]
fn kappa_total(target: Vec<i64>, gens: Vec<Vec<i64>>, functional: Vec<i64>) -> PyResult<u64> {
    vecpart::kappa_total(&target, &gens, &functional).map_err(value_error)
}

/// Graded count; `gens` is a list of `(weight, degree)` pairs.
#[pyfunction]
fn kappa_graded(weight: Vec<i64>, degree: i64, gens: Vec<(Vec<i64>, u32)>, tau: Vec<i64>) -> PyResult<u64> {
    let gens: Vec<GradedGenerator> = gens.into_iter().map(|(w, d)| GradedGenerator::new(w, d)).collect();
    vecpart::kappa_graded(&GradedTarget::new(weight, degree), &gens, &tau).map_err(value_error)
}

#[pyfunction]
fn mult_positive(orbit_name: &str, a: u64, b: u64, n: u64) -> PyResult<u64> {
    Ok(positive::mult_positive(orbit(orbit_name)?, a, b, n))
}

#[pyfunction]
fn k_mult(orbit_name: &str, a: u32, b: u32, lambda: u32) -> PyResult<u64> {
    let table = orbits::orbit_table(orbit(orbit_name)?, a, b).map_err(value_error)?;
    orbits::k_mult(&table, lambda).map_err(value_error)
}

#[pyfunction]
fn k_mult_ld(orbit_name: &str, a: u32, b: u32, lambda: u32, d: i64) -> PyResult<i64> {
    let table = orbits::orbit_table(orbit(orbit_name)?, a, b).map_err(value_error)?;
    orbits::k_mult_ld(&table, lambda, d).map_err(value_error)
}

#[pyfunction]
fn k_mults_from_tk(orbit_name: &str, a: u32, b: u32, lambda: u32, d: i64) -> PyResult<i64> {
    let table = orbits::orbit_table(orbit(orbit_name)?, a, b).map_err(value_error)?;
    charseries::k_mults_from_tk(&table, lambda, d).map_err(value_error)
}

#[pyfunction]
fn blattner_closed(a: u32, b: u32, lambda: u32) -> u64 {
    orbits::blattner_closed(a, b, lambda)
}

#[pyfunction]
fn branch_so3(a: u32, b: u32, n: u32) -> u64 {
    oracle::branch_so3(a, b, n)
}

#[pyfunction]
fn kostant_weight_mult(a: u32, b: u32, mu: (i64, i64)) -> u64 {
    oracle::kostant_weight_mult(a, b, GWeight::new(mu.0, mu.1))
}

#[pyfunction]
fn weyl_dim(a: u32, b: u32) -> u64 {
    oracle::weyl_dim(a, b)
}

#[pyfunction]
fn in_c(c: u64, d: u64, a: u64, b: u64) -> bool {
    positive::in_c(RegionPoint { c, d }, a, b)
}

/// Region name of `(c, d)`: "fullflag", "o1", "o2", "closed" or "excluded".
#[pyfunction]
fn classify(c: u64, d: u64, a: u64, b: u64) -> &'static str {
    region_name(positive::classify(RegionPoint { c, d }, a, b))
}

/// The duality bijection `C(a, b) → C(b, a)`.
#[pyfunction]
fn duality(c: u64, d: u64, a: u64, b: u64) -> PyResult<(u64, u64)> {
    let p = positive::duality(RegionPoint { c, d }, a, b).map_err(value_error)?;
    Ok((p.c, p.d))
}

#[pyfunction]
#[pyo3(signature = (orbit_name, a, b, lambda_max, method_name = "positive"))]
fn mult_table(orbit_name: &str, a: u32, b: u32, lambda_max: u32, method_name: &str) -> PyResult<PyMultTable> {
    let t = compare::mult_table(orbit(orbit_name)?, a, b, lambda_max, method(method_name)?).map_err(value_error)?;
    Ok(PyMultTable {
        orbit: t.orbit.name().to_string(),
        a: t.a,
        b: t.b,
        method: t.method.name().to_string(),
        mults: t.mults,
    })
}

/// Returns `(cells, comparisons)`; raises `ValueError` with the first
/// counterexample on disagreement.
#[pyfunction]
fn crosscheck(a_max: u32, b_max: u32, lambda_max: u32) -> PyResult<(u64, u64)> {
    compare::crosscheck(a_max, b_max, lambda_max)
        .map(|s| (s.cells, s.comparisons))
        .map_err(value_error)
}

/// SVG text of the region diagram.
#[pyfunction]
fn render_regions(a: u64, b: u64, n_max: u64) -> String {
    svg::render_regions(a, b, n_max)
}

/// The six elements of `W_G` acting on `(a, b)`.
#[pyfunction]
fn weyl_orbit(a: i64, b: i64) -> Vec<(i64, i64)> {
    weights::WeylG::all()
        .iter()
        .map(|w| {
            let image = w.act(GWeight::new(a, b));
            (image.a, image.b)
        })
        .collect()
}

#[pymodule]
#[pyo3(name = "sl3_ktypes")]
fn sl3_ktypes_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMultTable>()?;
    m.add_function(wrap_pyfunction!(restrict, m)?)?;
    m.add_function(wrap_pyfunction!(kappa_total, m)?)?;
    m.add_function(wrap_pyfunction!(kappa_graded, m)?)?;
    m.add_function(wrap_pyfunction!(mult_positive, m)?)?;
    m.add_function(wrap_pyfunction!(k_mult, m)?)?;
    m.add_function(wrap_pyfunction!(k_mult_ld, m)?)?;
    m.add_function(wrap_pyfunction!(k_mults_from_tk, m)?)?;
    m.add_function(wrap_pyfunction!(blattner_closed, m)?)?;
    m.add_function(wrap_pyfunction!(branch_so3, m)?)?;
    m.add_function(wrap_pyfunction!(kostant_weight_mult, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_dim, m)?)?;
    m.add_function(wrap_pyfunction!(in_c, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(duality, m)?)?;
    m.add_function(wrap_pyfunction!(mult_table, m)?)?;
    m.add_function(wrap_pyfunction!(crosscheck, m)?)?;
    m.add_function(wrap_pyfunction!(render_regions, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_orbit, m)?)?;
    Ok(())
}
