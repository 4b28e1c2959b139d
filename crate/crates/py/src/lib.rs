//! Python bindings. Multivectors carry exact rational coefficients; matrices
//! come back as nested lists of complex numbers.

use cliffkit::classify as cls;
use cliffkit::dirac::{self, DiracSpinor};
use cliffkit::lipschitz;
use cliffkit::majorana::{self, FieldKind};
use cliffkit::matrep::{self, CMat};
use cliffkit::scalar::Scalar;
use cliffkit::text::{format_multivector, parse_multivector};
use cliffkit::{CliffError, Rational, Signature};
use num_complex::Complex64;
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: CliffError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn signature(p: u32, q: u32) -> PyResult<Signature> {
    Signature::new(p, q).map_err(err)
}

type Mv = cliffkit::Multivector<Rational>;

/// Element of Cl(p,q) with rational coefficients, e.g.
/// `Multivector(3, 1, "1/2 + e1^e4")`.
#[pyclass(name = "Multivector", module = "cliffkit", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyMultivector {
    inner: Mv,
}

impl From<Mv> for PyMultivector {
    fn from(inner: Mv) -> Self {
        PyMultivector { inner }
    }
}

#[pymethods]
impl PyMultivector {
    #[new]
    #[pyo3(signature = (p, q, text = "0"))]
    fn new(p: u32, q: u32, text: &str) -> PyResult<Self> {
        Ok(parse_multivector(signature(p, q)?, text).map_err(err)?.into())
    }

    #[staticmethod]
    fn generators(p: u32, q: u32) -> PyResult<Vec<PyMultivector>> {
        Ok(Mv::generators(signature(p, q)?).into_iter().map(Into::into).collect())
    }

    #[getter]
    fn signature(&self) -> (u32, u32) {
        (self.inner.signature().p(), self.inner.signature().q())
    }

    fn __str__(&self) -> String {
        format_multivector(&self.inner)
    }

    fn __repr__(&self) -> String {
        let (p, q) = self.signature();
        format!("Multivector({p}, {q}, {:?})", format_multivector(&self.inner))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.check(other)?;
        Ok((&self.inner * &other.inner).into())
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        Ok(self.inner.try_add(&other.inner).map_err(err)?.into())
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        Ok(self.inner.try_sub(&other.inner).map_err(err)?.into())
    }

    fn __neg__(&self) -> Self {
        (-self.inner.clone()).into()
    }

    fn grade_involution(&self) -> Self {
        self.inner.grade_involution().into()
    }

    fn conjugation(&self) -> Self {
        self.inner.conjugation().into()
    }

    fn reversion(&self) -> Self {
        self.inner.reversion().into()
    }

    /// `N(x) = x̄ x`.
    fn norm(&self) -> Self {
        self.inner.norm().into()
    }

    fn inverse(&self) -> PyResult<Self> {
        self.inner
            .inverse()
            .map(Into::into)
            .ok_or_else(|| PyZeroDivisionError::new_err("element is not invertible"))
    }

    fn grade_part(&self, k: u32) -> Self {
        self.inner.grade_part(k).into()
    }

    fn even_part(&self) -> Self {
        self.inner.even_part().into()
    }

    fn odd_part(&self) -> Self {
        self.inner.odd_part().into()
    }

    fn grades(&self) -> Vec<u32> {
        self.inner.grades().into_iter().collect()
    }

    /// Scalar part as exact text, e.g. `"-1/2"`.
    fn scalar_part(&self) -> String {
        self.inner.scalar_part().format_coeff()
    }
}

impl PyMultivector {
    fn check(&self, other: &Self) -> PyResult<()> {
        if self.inner.signature() != other.inner.signature() {
            return Err(err(CliffError::SignatureMismatch {
                left: self.inner.signature(),
                right: other.inner.signature(),
            }));
        }
        Ok(())
    }
}

fn rows(m: &CMat) -> Vec<Vec<Complex64>> {
    (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| m[(i, j)]).collect()).collect()
}

fn spinor(s: &DiracSpinor) -> Vec<Complex64> {
    s.0.to_vec()
}

/// `{ring, size, summands, omega_sq, dim}` for Cl(p,q).
#[pyfunction]
fn classify<'py>(py: Python<'py>, p: u32, q: u32) -> PyResult<Bound<'py, PyDict>> {
    let r = cls::classify(p, q);
    let d = PyDict::new(py);
    d.set_item("ring", r.base_ring.symbol())?;
    d.set_item("size", r.matrix_size)?;
    d.set_item("summands", r.summands)?;
    d.set_item("omega_sq", r.omega_sq)?;
    d.set_item("dim", r.total_real_dim)?;
    Ok(d)
}

/// Target signature of Cl⁰(p,q) and its generators `e_n e_i`.
#[pyfunction]
fn even_subalgebra(p: u32, q: u32) -> PyResult<((u32, u32), Vec<PyMultivector>)> {
    let sub = cls::even_subalgebra::<Rational>(signature(p, q)?).map_err(err)?;
    Ok((
        (sub.target.p(), sub.target.q()),
        sub.witness.into_iter().map(Into::into).collect(),
    ))
}

/// `(relation, passed)` pairs; `passed` is None for skipped checks.
#[pyfunction]
#[pyo3(signature = (p, q, cap = 12))]
fn periodicity(p: u32, q: u32, cap: u32) -> Vec<(String, Option<bool>)> {
    cls::verify_periodicity(p, q, cap)
        .checks
        .into_iter()
        .map(|c| (c.relation, c.passed))
        .collect()
}

#[pyfunction]
fn reflect(u: &PyMultivector, v: &PyMultivector) -> PyResult<PyMultivector> {
    Ok(lipschitz::reflect(&u.inner, &v.inner).map_err(err)?.into())
}

/// `α(x) v x⁻¹`.
#[pyfunction]
fn twisted_adjoint(x: &PyMultivector, v: &PyMultivector) -> PyResult<PyMultivector> {
    Ok(lipschitz::twisted_adjoint(&x.inner, &v.inner).map_err(err)?.image.into())
}

/// Pin/Spin verdict with the vector representation as rational strings.
#[pyfunction]
fn group_membership<'py>(py: Python<'py>, x: &PyMultivector) -> PyResult<Bound<'py, PyDict>> {
    let (v, image) = lipschitz::group_membership(&x.inner);
    let d = PyDict::new(py);
    d.set_item("membership", v.membership.to_string())?;
    d.set_item("in_lipschitz", v.in_lipschitz)?;
    d.set_item("parity", v.parity.to_string())?;
    d.set_item("norm", v.norm_value.map(|n| n.format_coeff()))?;
    d.set_item(
        "L",
        image.as_ref().map(|l| {
            l.matrix
                .iter()
                .map(|r| r.iter().map(|x| x.format_coeff()).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        }),
    )?;
    d.set_item("det", image.map(|l| l.det.format_coeff()))?;
    d.set_item("diagnostics", v.diagnostics)?;
    Ok(d)
}

/// Rotor text and rotation matrix for angle θ about a unit axis.
#[pyfunction]
fn rotor_from_axis_angle(axis: [f64; 3], theta: f64) -> PyResult<(String, Vec<Vec<f64>>)> {
    let (u, l) = lipschitz::rotor_from_axis_angle(axis, theta).map_err(err)?;
    Ok((format_multivector(&u), l.matrix))
}

/// `exp(B)` for a bivector given as text.
#[pyfunction]
fn rotor_exp(p: u32, q: u32, bivector: &str) -> PyResult<String> {
    let b = parse_multivector::<f64>(signature(p, q)?, bivector).map_err(err)?;
    Ok(format_multivector(&lipschitz::rotor_exp(&b).map_err(err)?))
}

#[pyfunction]
#[pyo3(signature = (d, lorentzian = false))]
fn gamma_matrices(d: u32, lorentzian: bool) -> PyResult<Vec<Vec<Vec<Complex64>>>> {
    let rep = matrep::gamma_matrices(d, lorentzian).map_err(err)?;
    Ok(rep.gammas.iter().map(rows).collect())
}

#[pyfunction]
#[pyo3(signature = (d, primed = false))]
fn charge_conjugation(d: u32, primed: bool) -> PyResult<Vec<Vec<Complex64>>> {
    Ok(rows(&matrep::charge_conjugation(d, primed).map_err(err)?))
}

/// `(J², ε, KO dimension)`.
#[pyfunction]
#[pyo3(signature = (d, lorentzian = false))]
fn ko_signs(d: u32, lorentzian: bool) -> PyResult<(i8, i8, u8)> {
    let k = matrep::ko_signs(d, lorentzian).map_err(err)?;
    Ok((k.j_squared, k.epsilon, k.ko_dim))
}

/// `(kind, weyl)`, e.g. `("majorana", "weyl_complex")`.
#[pyfunction]
fn majorana_class(p: u32, q: u32) -> (String, String) {
    let c = matrep::majorana_class(p, q);
    (c.kind.to_string(), c.weyl.to_string())
}

/// Plane waves `u`, `v` and the spin-sum residuals in the chiral basis.
#[pyfunction]
fn plane_wave_spinors<'py>(py: Python<'py>, mass: f64, p: [f64; 3]) -> PyResult<Bound<'py, PyDict>> {
    let w = dirac::plane_wave_spinors(mass, p).map_err(err)?;
    let k = w.momentum;
    let d = PyDict::new(py);
    d.set_item("momentum", k.p.to_vec())?;
    d.set_item("u", w.u.iter().map(spinor).collect::<Vec<_>>())?;
    d.set_item("v", w.v.iter().map(spinor).collect::<Vec<_>>())?;
    let (du, dv) = dirac::dirac_residuals(&w);
    d.set_item("dirac_residual", du.max(dv))?;
    let su = matrep::max_abs_diff(&dirac::spin_sum(&w.u), &dirac::expected_u_sum(&k));
    let sv = matrep::max_abs_diff(&dirac::spin_sum(&w.v), &dirac::expected_v_sum(&k));
    d.set_item("spin_sum_residual", su.max(sv))?;
    Ok(d)
}

/// `ψ^C = Bψ̄` in the chiral basis.
#[pyfunction]
fn charge_conjugate(psi: [Complex64; 4]) -> Vec<Complex64> {
    spinor(&dirac::charge_conjugate(&DiracSpinor(psi)))
}

#[pyfunction]
fn seesaw<'py>(py: Python<'py>, yh: f64, m: f64) -> PyResult<Bound<'py, PyDict>> {
    let s = majorana::seesaw_masses(yh, m).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("m_light", s.m_light)?;
    d.set_item("M_heavy", s.m_heavy)?;
    d.set_item("lambda_plus", s.lambda_plus)?;
    d.set_item("lambda_minus", s.lambda_minus)?;
    d.set_item("rel_err_light", s.rel_err_light)?;
    d.set_item("hierarchy", s.hierarchy)?;
    Ok(d)
}

/// Mass term and current `μ` for commuting and Grassmann fields, as text.
#[pyfunction]
#[pyo3(signature = (mu = 0))]
fn majorana_audit<'py>(py: Python<'py>, mu: usize) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("mass_commuting", majorana::mass_term(FieldKind::Commuting).to_string())?;
    d.set_item("mass_anticommuting", majorana::mass_term(FieldKind::Anticommuting).to_string())?;
    for (key, kind) in [
        ("current_commuting", FieldKind::Commuting),
        ("current_anticommuting", FieldKind::Anticommuting),
    ] {
        d.set_item(key, majorana::u1_current(kind, mu).map_err(err)?.to_string())?;
    }
    Ok(d)
}

/// Evolve Python callables `left(x)`, `right(x)` to time `t` on a grid.
#[pyfunction]
fn weyl_1p1(
    grid: Vec<f64>,
    left: Bound<'_, PyAny>,
    right: Bound<'_, PyAny>,
    t: f64,
) -> PyResult<(Vec<Complex64>, Vec<Complex64>)> {
    let fields = matrep::weyl_1p1_solver(
        &grid,
        |x| left.call1((x,))?.extract::<Complex64>(),
        |x| right.call1((x,))?.extract::<Complex64>(),
        t,
    );
    Ok((
        fields.left.into_iter().collect::<PyResult<_>>()?,
        fields.right.into_iter().collect::<PyResult<_>>()?,
    ))
}

#[pymodule]
#[pyo3(name = "cliffkit")]
pub fn cliffkit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMultivector>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(even_subalgebra, m)?)?;
    m.add_function(wrap_pyfunction!(periodicity, m)?)?;
    m.add_function(wrap_pyfunction!(reflect, m)?)?;
    m.add_function(wrap_pyfunction!(twisted_adjoint, m)?)?;
    m.add_function(wrap_pyfunction!(group_membership, m)?)?;
    m.add_function(wrap_pyfunction!(rotor_from_axis_angle, m)?)?;
    m.add_function(wrap_pyfunction!(rotor_exp, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_matrices, m)?)?;
    m.add_function(wrap_pyfunction!(charge_conjugation, m)?)?;
    m.add_function(wrap_pyfunction!(ko_signs, m)?)?;
    m.add_function(wrap_pyfunction!(majorana_class, m)?)?;
    m.add_function(wrap_pyfunction!(plane_wave_spinors, m)?)?;
    m.add_function(wrap_pyfunction!(charge_conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(seesaw, m)?)?;
    m.add_function(wrap_pyfunction!(majorana_audit, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_1p1, m)?)?;
    Ok(())
}
