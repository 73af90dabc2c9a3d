//! Python bindings. Results cross the boundary as JSON strings.

use ordtop_core::cli::{Space, SpaceDescriptor};
use ordtop_core::classify::classify as classify_finite;
use ordtop_core::zoo::{curated_results, verify_claim as verify, Claim, ZooSpaceId};
use ordtop_core::Error;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("results serialize")
}

/// Property report of a finite space, or the curated table of a zoo space.
#[pyfunction]
fn classify(descriptor: &str) -> PyResult<String> {
    let space = SpaceDescriptor::from_json(descriptor).and_then(|d| d.build()).map_err(py_err)?;
    match space {
        Space::Finite(x) => Ok(to_json(&classify_finite(&x).map_err(py_err)?)),
        Space::Zoo(id) => Ok(to_json(&curated_results(id).map_err(py_err)?)),
    }
}

/// Verdict of a claim certificate: `{"verdict": ..., "detail": ...}`.
#[pyfunction]
fn verify_claim(claim: &str) -> PyResult<String> {
    let c = Claim::from_json(claim).map_err(py_err)?;
    Ok(to_json(&verify(&c).map_err(py_err)?))
}

/// Normal form of a set expression in a zoo space.
#[pyfunction]
fn normalize(space: &str, expr: &str) -> PyResult<String> {
    let id: ZooSpaceId = space.parse().map_err(py_err)?;
    Ok(id.parse(expr).map_err(py_err)?.to_string())
}

#[pyfunction]
fn is_open(space: &str, expr: &str) -> PyResult<bool> {
    let id: ZooSpaceId = space.parse().map_err(py_err)?;
    let e = id.parse(expr).map_err(py_err)?;
    id.is_open(&e).map_err(py_err)
}

/// Run the command line in-process; returns `(exit_code, stdout, stderr)`.
#[pyfunction]
fn run(args: Vec<String>) -> (i32, String, String) {
    let argv = std::iter::once("ordtop".to_string()).chain(args);
    let o = ordtop_core::cli::run(argv);
    (o.code, o.stdout, o.stderr)
}

#[pymodule]
fn ordtop(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_claim, m)?)?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(is_open, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    Ok(())
}
