//! Python bindings: the pair constructors, the rho evaluators, both
//! criterion decisions, and the discrete-series classifiers. All values
//! cross the boundary exactly (Python ints and fractions.Fraction).

use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use rhocert_core::classify::{
    classify_so_pair, disc_nonempty_ambient, is_symmetric_so_pair, DiscRel, DiscSet, SoBlockSpec,
};
use rhocert_core::report::{run_check, CheckOptions};
use rhocert_core::rho::{decide_strict, decide_tempered, CriterionVerdict, EngineOptions};
use rhocert_core::weights::RestrictedPairData;
use rhocert_core::{parse_spec, Ambient, Error, RationalVector};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::ResourceLimit { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Accept ints, fractions.Fraction, or "num/den" strings as exact scalars.
#[derive(FromPyObject)]
enum RatArg {
    Int(BigInt),
    Frac(BigRational),
    Text(String),
}

fn rat_arg(value: RatArg) -> PyResult<BigRational> {
    match value {
        RatArg::Int(i) => Ok(BigRational::from_integer(i)),
        RatArg::Frac(r) => Ok(r),
        RatArg::Text(s) => rhocert_core::jsonnum::parse_rational(&s)
            .ok_or_else(|| PyValueError::new_err(format!("invalid rational literal: {s:?}"))),
    }
}

fn point_from(coords: Vec<RatArg>) -> PyResult<RationalVector> {
    let coords: PyResult<Vec<BigRational>> = coords.into_iter().map(rat_arg).collect();
    Ok(RationalVector::new(coords?))
}

fn weights_out(ws: &rhocert_core::WeightMultiset) -> Vec<(Vec<BigInt>, u64)> {
    ws.entries()
        .map(|(w, m)| (w.coeffs().to_vec(), m))
        .collect()
}

/// Restricted weight data for one pair (G, H).
#[pyclass(frozen, name = "PairData", module = "rhocert")]
struct PyPairData {
    inner: RestrictedPairData,
}

#[pymethods]
impl PyPairData {
    /// Dimension of the split abelian subspace of H.
    #[getter]
    fn dim_a(&self) -> usize {
        self.inner.dim_a()
    }

    /// Weights of the ambient Lie algebra as (covector, multiplicity) pairs.
    fn g_weights(&self) -> Vec<(Vec<BigInt>, u64)> {
        weights_out(self.inner.g_weights())
    }

    fn h_weights(&self) -> Vec<(Vec<BigInt>, u64)> {
        weights_out(self.inner.h_weights())
    }

    fn q_weights(&self) -> Vec<(Vec<BigInt>, u64)> {
        weights_out(self.inner.q_weights())
    }

    /// rho_g at an exact point (ints, Fractions, or "num/den" strings).
    fn rho_g(&self, point: Vec<RatArg>) -> PyResult<BigRational> {
        self.inner
            .rho_g()
            .eval(&point_from(point)?)
            .map_err(to_py_err)
    }

    fn rho_h(&self, point: Vec<RatArg>) -> PyResult<BigRational> {
        self.inner
            .rho_h()
            .eval(&point_from(point)?)
            .map_err(to_py_err)
    }

    fn rho_q(&self, point: Vec<RatArg>) -> PyResult<BigRational> {
        self.inner
            .rho_q()
            .eval(&point_from(point)?)
            .map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "PairData(dim_a={}, g={} weights, h={} weights, q={} weights)",
            self.inner.dim_a(),
            self.inner.g_weights().distinct_len(),
            self.inner.h_weights().distinct_len(),
            self.inner.q_weights().distinct_len(),
        )
    }
}

/// Outcome of a criterion check.
#[pyclass(frozen, name = "Verdict", module = "rhocert")]
struct PyVerdict {
    #[pyo3(get)]
    holds: bool,
    #[pyo3(get)]
    witness: Option<Vec<BigRational>>,
    #[pyo3(get)]
    certificate: Option<Vec<(Vec<BigInt>, BigRational, BigRational)>>,
}

#[pymethods]
impl PyVerdict {
    fn __repr__(&self) -> String {
        format!(
            "Verdict(holds={})",
            if self.holds { "True" } else { "False" }
        )
    }
}

fn verdict_out(v: CriterionVerdict) -> PyVerdict {
    PyVerdict {
        holds: v.holds(),
        witness: v.witness.map(|w| w.coords().to_vec()),
        certificate: v.certificate.map(|entries| {
            entries
                .into_iter()
                .map(|e| (e.ray, e.rho_g, e.rho_q))
                .collect()
        }),
    }
}

/// Pair data for SL(n, R) over the block subgroup SL(n_1) x ... x SL(n_r).
#[pyfunction]
fn build_sl_blocks(n: u32, blocks: Vec<u32>) -> PyResult<PyPairData> {
    rhocert_core::build_sl_blocks(n, &blocks)
        .map(|inner| PyPairData { inner })
        .map_err(to_py_err)
}

/// Pair data for SO(p, q) over SO(p_1, q_1) x ... x SO(p_r, q_r).
#[pyfunction]
fn build_so_blocks(p: u32, q: u32, blocks: Vec<(u32, u32)>) -> PyResult<PyPairData> {
    rhocert_core::build_so_blocks(p, q, &blocks)
        .map(|inner| PyPairData { inner })
        .map_err(to_py_err)
}

/// Pair data for SL(n, R) over SO(p, q).
#[pyfunction]
fn build_so_in_sl(n: u32, p: u32, q: u32) -> PyResult<PyPairData> {
    rhocert_core::build_so_in_sl(n, p, q)
        .map(|inner| PyPairData { inner })
        .map_err(to_py_err)
}

/// Pair data from raw (covector, multiplicity) lists.
#[pyfunction]
fn build_generic(
    dim_a: usize,
    g_weights: Vec<(Vec<RatArg>, u64)>,
    h_weights: Vec<(Vec<RatArg>, u64)>,
) -> PyResult<PyPairData> {
    let unpack = |raw: Vec<(Vec<RatArg>, u64)>| -> PyResult<Vec<(Vec<BigRational>, u64)>> {
        raw.into_iter()
            .map(|(coeffs, m)| {
                let coeffs: PyResult<Vec<BigRational>> = coeffs.into_iter().map(rat_arg).collect();
                Ok((coeffs?, m))
            })
            .collect()
    };
    rhocert_core::build_generic(dim_a, &unpack(g_weights)?, &unpack(h_weights)?)
        .map(|inner| PyPairData { inner })
        .map_err(to_py_err)
}

fn engine(max_rays: Option<u64>) -> EngineOptions {
    EngineOptions {
        ray_cap: max_rays.unwrap_or(rhocert_core::DEFAULT_RAY_CAP),
    }
}

/// Whether rho_g <= 2 rho_q holds everywhere on the split subspace.
#[pyfunction]
#[pyo3(signature = (data, max_rays = None))]
fn tempered(data: &PyPairData, max_rays: Option<u64>) -> PyResult<PyVerdict> {
    decide_tempered(&data.inner, &engine(max_rays))
        .map(verdict_out)
        .map_err(to_py_err)
}

/// Whether rho_g < 2 rho_q holds off the origin.
#[pyfunction]
#[pyo3(signature = (data, max_rays = None))]
fn strictly_less(data: &PyPairData, max_rays: Option<u64>) -> PyResult<PyVerdict> {
    decide_strict(&data.inner, &engine(max_rays))
        .map(verdict_out)
        .map_err(to_py_err)
}

/// Harish-Chandra rank criterion for SL(n, R).
#[pyfunction]
fn disc_nonempty_sl(n: u32) -> bool {
    disc_nonempty_ambient(&Ambient::Sl { n })
}

/// Harish-Chandra rank criterion for SO(p, q).
#[pyfunction]
fn disc_nonempty_so(p: u32, q: u32) -> bool {
    disc_nonempty_ambient(&Ambient::So { p, q })
}

/// Whether the normalized block presentation of SO(p,q)/prod SO(p_k,q_k)
/// is a symmetric pair.
#[pyfunction]
fn symmetric_so_pair(p: u32, q: u32, blocks: Vec<(u32, u32)>) -> PyResult<bool> {
    let spec = SoBlockSpec::new(p, q, &blocks).map_err(to_py_err)?;
    Ok(is_symmetric_so_pair(&spec))
}

/// Discrete-series conclusion for SO(p,q)/prod SO(p_k,q_k):
/// (disc_g, disc_gh, justification) as strings.
#[pyfunction]
fn classify_so(p: u32, q: u32, blocks: Vec<(u32, u32)>) -> PyResult<(String, String, String)> {
    let spec = SoBlockSpec::new(p, q, &blocks).map_err(to_py_err)?;
    let c = classify_so_pair(&spec);
    let disc_g = match c.disc_g {
        DiscSet::NonEmpty => "nonempty",
        DiscSet::Empty => "empty",
        DiscSet::Unknown => "unknown",
    };
    let disc_gh = match c.disc_gh {
        DiscRel::NonEmpty => "nonempty",
        DiscRel::Empty => "empty",
        DiscRel::SubsetOfDiscG => "subset-of-disc-g",
        DiscRel::Unknown => "unknown",
    };
    let justification = serde_json::to_value(c.justification)
        .expect("justification serializes")
        .as_str()
        .expect("justification is a string")
        .to_string();
    Ok((disc_g.to_string(), disc_gh.to_string(), justification))
}

/// Run the full pipeline on a JSON pair specification; returns the report
/// as a JSON string.
#[pyfunction]
#[pyo3(signature = (document, verbose_weights = false, max_rays = None))]
fn check_spec_json(
    document: &str,
    verbose_weights: bool,
    max_rays: Option<u64>,
) -> PyResult<String> {
    let spec = parse_spec(document).map_err(to_py_err)?;
    let opts = CheckOptions {
        engine: engine(max_rays),
        verbose_weights,
        with_timing: false,
    };
    let report = run_check(&spec, &opts).map_err(to_py_err)?;
    serde_json::to_string_pretty(&report)
        .map_err(|e| PyRuntimeError::new_err(format!("report serialization failed: {e}")))
}

#[pymodule]
fn rhocert(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPairData>()?;
    m.add_class::<PyVerdict>()?;
    m.add_function(wrap_pyfunction!(build_sl_blocks, m)?)?;
    m.add_function(wrap_pyfunction!(build_so_blocks, m)?)?;
    m.add_function(wrap_pyfunction!(build_so_in_sl, m)?)?;
    m.add_function(wrap_pyfunction!(build_generic, m)?)?;
    m.add_function(wrap_pyfunction!(tempered, m)?)?;
    m.add_function(wrap_pyfunction!(strictly_less, m)?)?;
    m.add_function(wrap_pyfunction!(disc_nonempty_sl, m)?)?;
    m.add_function(wrap_pyfunction!(disc_nonempty_so, m)?)?;
    m.add_function(wrap_pyfunction!(symmetric_so_pair, m)?)?;
    m.add_function(wrap_pyfunction!(classify_so, m)?)?;
    m.add_function(wrap_pyfunction!(check_spec_json, m)?)?;
    Ok(())
}
