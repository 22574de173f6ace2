//! Python extension module exposing the main types and operations:
//! curve constants and thresholds, Betti tables in both gradings, divisor
//! complexes with exact homology, the structural checks, and the
//! sharpness-family diagnostics. Structured results are returned as JSON
//! strings so the Python side can `json.loads` them.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde_json::json;

use curvebetti::betti::{betti_affine, betti_j, betti_projective, ProjectiveMode};
use curvebetti::divisor::delta_lr_of;
use curvebetti::membership;
use curvebetti::semigroup::{self, periodicity_threshold};
use curvebetti::simplicial::{self, FieldSpec, SimplicialComplex};
use curvebetti::verify;
use curvebetti::CurveSequence as CoreCurve;

fn to_py_err(e: curvebetti::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_field(field: &str) -> PyResult<FieldSpec> {
    field.parse().map_err(to_py_err)
}

/// A strictly increasing sequence of positive exponents with its derived
/// constants.
#[pyclass(name = "CurveSequence")]
struct PyCurveSequence {
    inner: CoreCurve,
}

#[pymethods]
impl PyCurveSequence {
    #[new]
    fn new(exponents: Vec<u64>) -> PyResult<Self> {
        Ok(PyCurveSequence {
            inner: CoreCurve::new(&exponents).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn exponents(&self) -> Vec<u64> {
        self.inner.exponents().to_vec()
    }

    #[getter]
    fn offsets(&self) -> Vec<u64> {
        self.inner.offsets().to_vec()
    }

    #[getter]
    fn offset_gcd(&self) -> u64 {
        self.inner.offset_gcd()
    }

    #[getter]
    fn conductor(&self) -> u64 {
        self.inner.conductor()
    }

    #[getter]
    fn margin(&self) -> u64 {
        self.inner.margin()
    }

    #[getter]
    fn period(&self) -> u64 {
        self.inner.period()
    }

    #[getter]
    fn degenerate(&self) -> bool {
        self.inner.is_degenerate()
    }

    /// Row shift of the high block for the given shift value.
    fn row_shift(&self, shift: u64) -> u64 {
        self.inner.row_shift_for(shift)
    }

    fn __repr__(&self) -> String {
        format!("CurveSequence({:?})", self.inner.exponents())
    }
}

/// Derived constants, regularity and shift threshold as JSON.
#[pyfunction]
#[pyo3(signature = (seq, shift=None, field="q"))]
fn bounds(seq: Vec<u64>, shift: Option<u64>, field: &str) -> PyResult<String> {
    let curve = CoreCurve::new(&seq).map_err(to_py_err)?;
    let field = parse_field(field)?;
    let (_, reg_j) = betti_j(&curve, field, None).map_err(to_py_err)?;
    let offsets = curve.offsets();
    let mut out = json!({
        "seq": curve.exponents(),
        "b": offsets,
        "d": curve.offset_gcd(),
        "c": curve.conductor(),
        "B": curve.margin(),
        "regJ": reg_j,
        "N": periodicity_threshold(&curve, reg_j),
        "envelope": 4 * offsets[0] * offsets[1] * (offsets[1] + 1),
        "degenerate": curve.is_degenerate(),
    });
    if let Some(j) = shift {
        let sc = curve.shift(j).map_err(to_py_err)?;
        out.as_object_mut()
            .unwrap()
            .insert("e".into(), json!(sc.row_shift()));
    }
    Ok(out.to_string())
}

/// Betti table of the shifted ideal as JSON. `mode` is "auto", "scan" or
/// "rigorous"; `affine=True` returns the semigroup-graded table of the
/// affine ideal instead.
#[pyfunction]
#[pyo3(signature = (seq, shift, field="q", mode="auto", lmax=None, affine=false))]
fn betti_table(
    seq: Vec<u64>,
    shift: u64,
    field: &str,
    mode: &str,
    lmax: Option<u32>,
    affine: bool,
) -> PyResult<String> {
    let curve = CoreCurve::new(&seq).map_err(to_py_err)?;
    let field = parse_field(field)?;
    let sc = curve.shift(shift).map_err(to_py_err)?;
    let mode = match mode {
        "scan" => ProjectiveMode::Scan { l_max: lmax },
        "rigorous" | "auto" => {
            let (_, reg_j) = betti_j(&curve, field, None).map_err(to_py_err)?;
            let windowed = sc.weight() > periodicity_threshold(&curve, reg_j);
            if mode == "rigorous" || windowed {
                ProjectiveMode::Rigorous {
                    reg_j,
                    buffer: None,
                }
            } else {
                ProjectiveMode::Scan { l_max: lmax }
            }
        }
        other => return Err(PyValueError::new_err(format!("unknown mode {other:?}"))),
    };
    let (table, ledger) = betti_projective(&sc, field, mode).map_err(to_py_err)?;
    let table = if affine {
        betti_affine(&sc, field, &ledger).map_err(to_py_err)?
    } else {
        table
    };
    Ok(table.to_json().to_string())
}

/// Run one structural check; returns `(status, report_json)`.
#[pyfunction]
#[pyo3(signature = (check, seq, shift, periods=1, field="q"))]
fn run_check(
    check: &str,
    seq: Vec<u64>,
    shift: u64,
    periods: u32,
    field: &str,
) -> PyResult<(String, String)> {
    let curve = CoreCurve::new(&seq).map_err(to_py_err)?;
    let field = parse_field(field)?;
    let (_, reg_j) = betti_j(&curve, field, None).map_err(to_py_err)?;
    let report = match check {
        "shift" => verify::check_shift(&curve, shift, field, reg_j, None),
        "affine" => verify::check_affine_equality(&curve, shift, field, reg_j, None),
        "period" => verify::check_main_periodicity(&curve, shift, periods, field, reg_j, None),
        "double-cone" => verify::check_double_cone(&curve, shift, field, reg_j, None),
        "deletion" => verify::check_deletion(&curve, shift, field, reg_j, None),
        "inhomog" => verify::check_inhomogeneous_shape(&curve, shift, field, reg_j, None),
        other => return Err(PyValueError::new_err(format!("unknown check {other:?}"))),
    }
    .map_err(to_py_err)?;
    Ok((
        report.status.as_str().to_string(),
        report.to_json().to_string(),
    ))
}

/// Sharpness-family report for parameter `h` at the given shift, as JSON.
#[pyfunction]
#[pyo3(signature = (h, shift, families=false, field="q"))]
fn bresinsky(h: u64, shift: u64, families: bool, field: &str) -> PyResult<String> {
    let field = parse_field(field)?;
    let report = verify::bresinsky_mu_check(h, shift, field).map_err(to_py_err)?;
    let mut out = report.to_json();
    if families {
        let ctx = verify::bresinsky_context(h, shift).map_err(to_py_err)?;
        let fams: Vec<serde_json::Value> = verify::bresinsky_family(&ctx)
            .map_err(to_py_err)?
            .iter()
            .map(|p| p.to_json())
            .collect();
        out.as_object_mut()
            .unwrap()
            .insert("families".into(), json!(fams));
    }
    Ok(out.to_string())
}

/// Facets of the divisor complex of degree `(l, r)` of the homogenized
/// semigroup, as sorted vertex lists.
#[pyfunction]
fn delta_facets(seq: Vec<u64>, shift: u64, l: u32, r: u64) -> PyResult<Vec<Vec<usize>>> {
    let curve = CoreCurve::new(&seq).map_err(to_py_err)?;
    let sc = curve.shift(shift).map_err(to_py_err)?;
    Ok(delta_lr_of(&sc, l, r).facet_lists())
}

/// Reduced homology dimensions of the complex generated by `facets`,
/// indexed from degree -1 (entry 0 is the degree -1 group).
#[pyfunction]
#[pyo3(signature = (facets, field="q"))]
fn reduced_homology(facets: Vec<Vec<usize>>, field: &str) -> PyResult<Vec<u32>> {
    let field = parse_field(field)?;
    let cx = SimplicialComplex::from_facets(&facets).map_err(to_py_err)?;
    Ok(simplicial::reduced_homology(&cx, field).dims().to_vec())
}

/// Least bound above which every integer is representable over `gens`.
#[pyfunction]
fn conductor(gens: Vec<u64>) -> PyResult<u64> {
    semigroup::conductor(&gens).map_err(to_py_err)
}

/// Least semigroup element in each residue class mod `m`.
#[pyfunction]
fn apery_set(gens: Vec<u64>, m: u64) -> PyResult<Vec<u64>> {
    semigroup::apery_set(&gens, m).map_err(to_py_err)
}

/// Membership of the pair `(l, r)` in the homogenized semigroup with the
/// forced vertex set (vertex 0 is the weight generator).
#[pyfunction]
#[pyo3(signature = (seq, shift, l, r, forced=vec![]))]
fn graded_representable(
    seq: Vec<u64>,
    shift: u64,
    l: u32,
    r: u64,
    forced: Vec<usize>,
) -> PyResult<bool> {
    let curve = CoreCurve::new(&seq).map_err(to_py_err)?;
    let sc = curve.shift(shift).map_err(to_py_err)?;
    let mut mask = 0u16;
    for &v in &forced {
        if v > curve.len() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        mask |= 1 << v;
    }
    Ok(membership::graded_representable(&sc, l, r, mask))
}

#[pymodule(name = "curvebetti")]
fn curvebetti_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCurveSequence>()?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add_function(wrap_pyfunction!(betti_table, m)?)?;
    m.add_function(wrap_pyfunction!(run_check, m)?)?;
    m.add_function(wrap_pyfunction!(bresinsky, m)?)?;
    m.add_function(wrap_pyfunction!(delta_facets, m)?)?;
    m.add_function(wrap_pyfunction!(reduced_homology, m)?)?;
    m.add_function(wrap_pyfunction!(conductor, m)?)?;
    m.add_function(wrap_pyfunction!(apery_set, m)?)?;
    m.add_function(wrap_pyfunction!(graded_representable, m)?)?;
    Ok(())
}
