//! Python bindings for the real double Hurwitz number engines.
//!
//! Exact values cross the boundary as `fractions.Fraction` (Hurwitz numbers
//! and multiplicities are dyadic rationals) or as arbitrary-precision ints.
//! Points and matchings are 1-indexed on the Python side, matching the
//! cycle-notation text format.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyModule;

use hurwitz_core::cayley::{self, Series, WalkQuery};
use hurwitz_core::genus0;
use hurwitz_core::oracle::{self, HurwitzQuery};
use hurwitz_core::symgrp;
use hurwitz_core::tropical;
use hurwitz_core::{Dyadic, Error};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction(py: Python<'_>, value: &Dyadic) -> PyResult<Py<PyAny>> {
    let fractions = py.import("fractions")?;
    let ctor = fractions.getattr("Fraction")?;
    let num = value.numerator().clone();
    let den = BigInt::from(value.denominator());
    Ok(ctor.call1((num, den))?.unbind())
}

fn partition(parts: Vec<usize>) -> PyResult<symgrp::Partition> {
    symgrp::Partition::new(parts).map_err(err)
}

fn query(mu: Vec<usize>, nu: Vec<usize>, genus: usize, with_structure: bool) -> PyResult<HurwitzQuery> {
    HurwitzQuery::new(partition(mu)?, partition(nu)?, genus, with_structure).map_err(err)
}

fn matching(pairs: Vec<(usize, usize)>, degree: usize) -> PyResult<symgrp::Matching> {
    let zero_indexed: Vec<(usize, usize)> = pairs
        .iter()
        .map(|&(a, b)| {
            if a == 0 || b == 0 || a > degree || b > degree {
                Err(PyValueError::new_err(format!(
                    "pair ({a},{b}) out of range 1..={degree}"
                )))
            } else {
                Ok((a - 1, b - 1))
            }
        })
        .collect::<PyResult<_>>()?;
    symgrp::Matching::new(degree, zero_indexed).map_err(err)
}

/// A permutation of {1,…,d} in cycle notation.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Permutation {
    inner: symgrp::Permutation,
}

#[pymethods]
impl Permutation {
    /// Parse cycle notation like "(1 2 3)(4 5)"; "id" is the identity.
    #[new]
    fn new(cycles: &str, degree: usize) -> PyResult<Self> {
        Ok(Permutation { inner: symgrp::Permutation::parse(cycles, degree).map_err(err)? })
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    /// Image of a 1-indexed point.
    fn apply(&self, x: usize) -> PyResult<usize> {
        if x == 0 || x > self.inner.degree() {
            return Err(PyValueError::new_err(format!(
                "point {x} out of range 1..={}",
                self.inner.degree()
            )));
        }
        Ok(self.inner.apply(x - 1) + 1)
    }

    /// self ∘ other: other acts first.
    fn compose(&self, other: &Permutation) -> PyResult<Permutation> {
        Ok(Permutation { inner: self.inner.compose(&other.inner).map_err(err)? })
    }

    fn inverse(&self) -> Permutation {
        Permutation { inner: self.inner.inverse() }
    }

    fn cycle_type(&self) -> Vec<usize> {
        self.inner.cycle_type().parts().to_vec()
    }

    fn is_involution(&self) -> bool {
        self.inner.is_involution()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation('{}', {})", self.inner, self.inner.degree())
    }

    fn __eq__(&self, other: &Permutation) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }
}

/// The real double Hurwitz number for (mu, nu, genus).
#[pyfunction]
#[pyo3(signature = (mu, nu, genus, with_structure=true, engine="tropical"))]
fn hurwitz(
    py: Python<'_>,
    mu: Vec<usize>,
    nu: Vec<usize>,
    genus: usize,
    with_structure: bool,
    engine: &str,
) -> PyResult<Py<PyAny>> {
    let q = query(mu, nu, genus, with_structure)?;
    let value = match engine {
        "tropical" => tropical::tropical_hurwitz(&q),
        "oracle" => oracle::hurwitz_oracle(&q).map_err(err)?,
        "both" => {
            let a = oracle::hurwitz_oracle(&q).map_err(err)?;
            let b = tropical::tropical_hurwitz(&q);
            if a != b {
                return Err(PyValueError::new_err(format!(
                    "engine disagreement: oracle {a} vs tropical {b}"
                )));
            }
            a
        }
        other => {
            return Err(PyValueError::new_err(format!(
                "engine must be tropical, oracle, or both; got {other}"
            )))
        }
    };
    fraction(py, &value)
}

/// Closed form for the difference between the counts with and without a
/// real structure.
#[pyfunction]
fn structure_delta(py: Python<'_>, mu: Vec<usize>, nu: Vec<usize>, genus: usize) -> PyResult<Py<PyAny>> {
    let q = query(mu, nu, genus, true)?;
    fraction(py, &tropical::structure_delta(&q))
}

/// All colored monodromy-graph classes as a JSON string, each with its
/// ordering count and multiplicity.
#[pyfunction]
fn graphs_json(mu: Vec<usize>, nu: Vec<usize>, genus: usize) -> PyResult<String> {
    let q = query(mu, nu, genus, true)?;
    let items: Vec<serde_json::Value> = tropical::enumerate_graphs(&q)
        .iter()
        .map(|c| {
            serde_json::json!({
                "graph": c.graph.to_json(),
                "orderings": c.orderings,
                "multiplicity": c.graph.multiplicity_with_structure().unwrap().to_string(),
            })
        })
        .collect();
    Ok(serde_json::Value::Array(items).to_string())
}

/// The genus-zero piecewise-constant structure function F(mu, nu).
#[pyfunction]
fn genus0_f(py: Python<'_>, mu: Vec<usize>, nu: Vec<usize>) -> PyResult<Py<PyAny>> {
    let value = genus0::f_value(&partition(mu)?, &partition(nu)?).map_err(err)?;
    fraction(py, &value)
}

/// Walls for the given numbers of parts, as 1-indexed (I, J) pairs.
#[pyfunction]
fn genus0_walls(lmu: usize, lnu: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    genus0::walls(lmu, lnu)
        .into_iter()
        .map(|w| {
            (
                w.in_set.iter().map(|i| i + 1).collect(),
                w.out_set.iter().map(|j| j + 1).collect(),
            )
        })
        .collect()
}

/// Wall-crossing F(plus) − F(minus) across the 1-indexed wall (I, J).
#[pyfunction]
#[allow(clippy::too_many_arguments)]
fn wall_crossing(
    py: Python<'_>,
    wall_i: Vec<usize>,
    wall_j: Vec<usize>,
    plus_mu: Vec<usize>,
    plus_nu: Vec<usize>,
    minus_mu: Vec<usize>,
    minus_nu: Vec<usize>,
) -> PyResult<Py<PyAny>> {
    let to_zero = |v: Vec<usize>| -> PyResult<Vec<usize>> {
        v.into_iter()
            .map(|i| i.checked_sub(1).ok_or_else(|| PyValueError::new_err("wall indices are 1-indexed")))
            .collect()
    };
    let wall = genus0::Wall { in_set: to_zero(wall_i)?, out_set: to_zero(wall_j)? };
    let value = genus0::wall_crossing(
        &wall,
        (&partition(plus_mu)?, &partition(plus_nu)?),
        (&partition(minus_mu)?, &partition(minus_nu)?),
    )
    .map_err(err)?;
    fraction(py, &value)
}

/// Coefficient of x^n/n! in sec+tan ("P") or x·tan(x)/2 ("C").
#[pyfunction]
fn egf_coefficient(series: &str, n: usize) -> PyResult<num_bigint::BigUint> {
    let series = match series {
        "P" | "p" => Series::Paths,
        "C" | "c" => Series::Cycles,
        other => return Err(PyValueError::new_err(format!("series must be P or C, got {other}"))),
    };
    Ok(cayley::egf_coefficient(series, n))
}

/// Minimum path length and count in the restricted Cayley graph between two
/// matchings given as 1-indexed pair lists.
#[pyfunction]
#[pyo3(signature = (start, end, degree, method="both"))]
fn min_paths(
    start: Vec<(usize, usize)>,
    end: Vec<(usize, usize)>,
    degree: usize,
    method: &str,
) -> PyResult<(usize, num_bigint::BigUint)> {
    let s = matching(start, degree)?;
    let t = matching(end, degree)?;
    match method {
        "formula" => cayley::min_paths_formula(&s, &t).map_err(err),
        "bfs" => cayley::min_paths_bfs(&s, &t).map_err(err),
        "both" => {
            let formula = cayley::min_paths_formula(&s, &t).map_err(err)?;
            let bfs = cayley::min_paths_bfs(&s, &t).map_err(err)?;
            if formula != bfs {
                return Err(PyValueError::new_err(format!(
                    "conventions disagree (shared pair): formula {formula:?} vs bfs {bfs:?}"
                )));
            }
            Ok(formula)
        }
        other => Err(PyValueError::new_err(format!(
            "method must be formula, bfs, or both; got {other}"
        ))),
    }
}

/// Number of length-r walks between two matchings.
#[pyfunction]
fn count_walks(
    start: Vec<(usize, usize)>,
    end: Vec<(usize, usize)>,
    degree: usize,
    length: usize,
) -> PyResult<num_bigint::BigUint> {
    let q = WalkQuery::new(matching(start, degree)?, matching(end, degree)?, length).map_err(err)?;
    Ok(cayley::count_walks(&q))
}

#[pymodule]
fn hurwitz_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Permutation>()?;
    m.add_function(wrap_pyfunction!(hurwitz, m)?)?;
    m.add_function(wrap_pyfunction!(structure_delta, m)?)?;
    m.add_function(wrap_pyfunction!(graphs_json, m)?)?;
    m.add_function(wrap_pyfunction!(genus0_f, m)?)?;
    m.add_function(wrap_pyfunction!(genus0_walls, m)?)?;
    m.add_function(wrap_pyfunction!(wall_crossing, m)?)?;
    m.add_function(wrap_pyfunction!(egf_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(min_paths, m)?)?;
    m.add_function(wrap_pyfunction!(count_walks, m)?)?;
    Ok(())
}
