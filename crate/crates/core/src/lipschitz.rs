//! Reflections, the twisted adjoint action, Lipschitz/Pin/Spin membership,
//! rotors and the Lie-algebra spans inside `Cl(p, q)`.

use std::fmt;

use crate::blade::Blade;
use crate::error::{CliffError, Result};
use crate::linalg;
use crate::multivector::{Multivector, Parity};
use crate::scalar::{Rational, Scalar};
use crate::signature::Signature;

/// Tolerance for the grade-1 test on the numeric backend.
pub const MEMBERSHIP_TOL: f64 = 1e-10;

/// Image of a group element in `O(p, q)`: column `i` holds the components
/// of the image of the `i`-th basis vector.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalImage<S: Scalar> {
    pub matrix: Vec<Vec<S>>,
    pub det: S,
    /// Diagonal metric the matrix is orthogonal for.
    pub metric: Vec<i8>,
}

impl<S: Scalar> OrthogonalImage<S> {
    fn from_columns(columns: Vec<Vec<S>>, metric: Vec<i8>, tol: f64) -> Self {
        let n = columns.len();
        let matrix: Vec<Vec<S>> = (0..n)
            .map(|r| (0..n).map(|c| columns[c][r].clone()).collect())
            .collect();
        let det = linalg::determinant(&matrix, tol);
        Self {
            matrix,
            det,
            metric,
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    /// `L^T eta L`.
    pub fn gram(&self) -> Vec<Vec<S>> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(S::zero(), |acc, k| {
                            let t = self.matrix[k][i].clone() * self.matrix[k][j].clone();
                            acc + t * S::from_i64(self.metric[k] as i64)
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// Whether `L^T eta L = eta` (exactly, or to `tol` on numeric backends).
    pub fn preserves_metric(&self, tol: f64) -> bool {
        let gram = self.gram();
        (0..self.dim()).all(|i| {
            (0..self.dim()).all(|j| {
                let expected = if i == j { self.metric[i] as i64 } else { 0 };
                gram[i][j].near(&S::from_i64(expected), tol)
            })
        })
    }

    /// Largest entry difference to another matrix.
    pub fn max_abs_diff(&self, other: &[Vec<S>]) -> f64 {
        self.matrix
            .iter()
            .zip(other)
            .flat_map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x.clone() - y.clone()).magnitude()))
            .fold(0.0, f64::max)
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        let n = self.dim();
        let id: Vec<Vec<S>> = (0..n)
            .map(|i| (0..n).map(|j| S::from_i64((i == j) as i64)).collect())
            .collect();
        if S::EXACT {
            self.matrix == id
        } else {
            self.max_abs_diff(&id) <= tol
        }
    }

    /// Matrix product `self * other`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.dim();
        let matrix: Vec<Vec<S>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(S::zero(), |acc, k| {
                            acc + self.matrix[i][k].clone() * other.matrix[k][j].clone()
                        })
                    })
                    .collect()
            })
            .collect();
        Self {
            matrix,
            det: self.det.clone() * other.det.clone(),
            metric: self.metric.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Pin,
    Spin,
    /// In the Lipschitz group but `N(x) != ±1`.
    LipschitzOnly,
    None,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Membership::Pin => "Pin",
            Membership::Spin => "Spin",
            Membership::LipschitzOnly => "Lipschitz-only",
            Membership::None => "none",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroupVerdict<S: Scalar> {
    pub in_lipschitz: bool,
    /// `N(x)` when it is a scalar.
    pub norm_value: Option<S>,
    pub parity: Parity,
    pub membership: Membership,
    /// Reasons for a negative verdict, e.g. the offending non-vector part
    /// of an image.
    pub diagnostics: Vec<String>,
}

/// `-u v u^{-1} = v - 2 (u, v) u / u^2`, the reflection of `v` in the
/// hyperplane orthogonal to `u`.
pub fn reflect<S: Scalar>(u: &Multivector<S>, v: &Multivector<S>) -> Result<Multivector<S>> {
    for x in [u, v] {
        if x.grades().iter().any(|&g| g != 1) {
            return Err(CliffError::WrongGrade { expected: 1 });
        }
    }
    let square = (u * u)
        .as_scalar()
        .ok_or(CliffError::WrongGrade { expected: 1 })?;
    let inv_square = square.inverse().ok_or(CliffError::NullVector)?;
    let u_inv = u.scale(&inv_square);
    u.geometric_product(v)
        .map(|uv| -(&uv * &u_inv))
}

/// Result of `rho_x(v) = alpha(x) v x^{-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjointImage<S: Scalar> {
    pub image: Multivector<S>,
    /// Components of the image outside grade 1.
    pub off_grade: Multivector<S>,
}

impl<S: Scalar> AdjointImage<S> {
    pub fn is_vector(&self, tol: f64) -> bool {
        self.off_grade.filter_small(tol).is_zero()
    }
}

fn adjoint_image<S: Scalar>(
    left: &Multivector<S>,
    v: &Multivector<S>,
    x_inv: &Multivector<S>,
) -> AdjointImage<S> {
    let image = &(left * v) * x_inv;
    let off_grade = &image - &image.grade_part(1);
    AdjointImage { image, off_grade }
}

/// Twisted adjoint action of `x` on the vector `v`.
pub fn twisted_adjoint<S: Scalar>(
    x: &Multivector<S>,
    v: &Multivector<S>,
) -> Result<AdjointImage<S>> {
    if v.grades().iter().any(|&g| g != 1) {
        return Err(CliffError::WrongGrade { expected: 1 });
    }
    if x.signature() != v.signature() {
        return Err(CliffError::SignatureMismatch {
            left: x.signature(),
            right: v.signature(),
        });
    }
    let x_inv = x.inverse().ok_or(CliffError::NotInvertible)?;
    Ok(adjoint_image(&x.grade_involution(), v, &x_inv))
}

fn images_of_basis<S: Scalar>(
    x: &Multivector<S>,
    twisted: bool,
    tol: f64,
) -> std::result::Result<Vec<Vec<S>>, String> {
    let sig = x.signature();
    let x_inv = x.inverse_within(tol).ok_or("not invertible")?;
    let left = if twisted {
        x.grade_involution()
    } else {
        x.clone()
    };
    let mut columns = Vec::with_capacity(sig.n() as usize);
    for e in Multivector::<S>::generators(sig) {
        let img = adjoint_image(&left, &e, &x_inv);
        if !img.is_vector(tol) {
            return Err(format!(
                "image of {} has non-vector part {}",
                e,
                img.off_grade.filter_small(tol)
            ));
        }
        columns.push(img.image.vector_coefficients());
    }
    Ok(columns)
}

/// Decide Lipschitz/Pin/Spin membership of `x` and, for Lipschitz
/// elements, return the orthogonal image of the twisted adjoint action.
///
/// Only the basis vectors are tested; linearity covers the rest of `V`.
pub fn group_membership<S: Scalar>(
    x: &Multivector<S>,
) -> (GroupVerdict<S>, Option<OrthogonalImage<S>>) {
    group_membership_within(x, MEMBERSHIP_TOL)
}

pub fn group_membership_within<S: Scalar>(
    x: &Multivector<S>,
    tol: f64,
) -> (GroupVerdict<S>, Option<OrthogonalImage<S>>) {
    let sig = x.signature();
    let parity = x.parity_within(tol);
    let norm_value = x.norm().as_scalar_within(tol);
    let mut verdict = GroupVerdict {
        in_lipschitz: false,
        norm_value: norm_value.clone(),
        parity,
        membership: Membership::None,
        diagnostics: Vec::new(),
    };
    if sig.is_degenerate() {
        verdict
            .diagnostics
            .push("degenerate form has no orthogonal group action".into());
        return (verdict, None);
    }
    let columns = match images_of_basis(x, true, tol) {
        Ok(c) => c,
        Err(msg) => {
            verdict.diagnostics.push(msg);
            return (verdict, None);
        }
    };
    let image = OrthogonalImage::from_columns(columns, sig.metric(), tol);
    if !image.preserves_metric(tol) {
        verdict
            .diagnostics
            .push("image does not preserve the quadratic form".into());
    }
    verdict.in_lipschitz = true;
    let unit_norm = norm_value
        .as_ref()
        .is_some_and(|nv| nv.near(&S::one(), tol) || nv.near(&-S::one(), tol));
    verdict.membership = match (unit_norm, parity) {
        (true, Parity::Even) => Membership::Spin,
        (true, _) => Membership::Pin,
        (false, _) => Membership::LipschitzOnly,
    };
    if norm_value.is_none() {
        verdict
            .diagnostics
            .push("norm is not a scalar on a Lipschitz element".into());
    }
    (verdict, Some(image))
}

/// `U = cos(θ/2) - ω₃ (n·σ) sin(θ/2)` in `Cl(3,0)` with its rotation image.
pub fn rotor_from_axis_angle(
    axis: [f64; 3],
    theta: f64,
) -> Result<(Multivector<f64>, OrthogonalImage<f64>)> {
    let len = axis.iter().map(|a| a * a).sum::<f64>().sqrt();
    if (len - 1.0).abs() > 1e-9 {
        return Err(CliffError::Precondition(format!(
            "rotation axis must be a unit vector, |n| = {len}"
        )));
    }
    let sig = Signature::new(3, 0)?;
    let (s, c) = (theta / 2.0).sin_cos();
    // ω₃ σ_1 = σ_2 σ_3, ω₃ σ_2 = σ_3 σ_1 = -σ_1 σ_3, ω₃ σ_3 = σ_1 σ_2.
    let u = Multivector::from_terms(
        sig,
        [
            (Blade::SCALAR, c),
            (Blade::from_indices(&[2, 3]), -axis[0] * s),
            (Blade::from_indices(&[1, 3]), axis[1] * s),
            (Blade::from_indices(&[1, 2]), -axis[2] * s),
        ],
    );
    let (verdict, image) = group_membership(&u);
    match image {
        Some(img) if verdict.membership == Membership::Spin => Ok((u, img)),
        _ => Err(CliffError::Precondition(format!(
            "rotor failed Spin membership: {:?}",
            verdict.diagnostics
        ))),
    }
}

/// Maximum number of Taylor terms in [`rotor_exp`].
pub const EXP_MAX_TERMS: usize = 200;

/// Exponential of a bivector by scaling and squaring on the power series.
pub fn rotor_exp(bivector: &Multivector<f64>) -> Result<Multivector<f64>> {
    if bivector.grades().iter().any(|&g| g != 2) {
        return Err(CliffError::WrongGrade { expected: 2 });
    }
    let sig = bivector.signature();
    let size: f64 = bivector.terms().map(|(_, c)| c.abs()).sum();
    let mut squarings = 0;
    while size / f64::powi(2.0, squarings) > 0.5 {
        squarings += 1;
    }
    let scaled = bivector.scale(&f64::powi(2.0, -squarings));
    let mut sum = Multivector::one(sig);
    let mut term = Multivector::one(sig);
    let mut converged = false;
    let mut residual = f64::INFINITY;
    for k in 1..=EXP_MAX_TERMS {
        term = (&term * &scaled).scale(&(1.0 / k as f64));
        sum = &sum + &term;
        residual = term.max_abs();
        if residual <= 1e-17 * sum.max_abs().max(1.0) {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(CliffError::NoConvergence {
            terms: EXP_MAX_TERMS,
            residual,
        });
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    Ok(sum)
}

/// `Cl(3,1)` with `γ_0 = e4` (square `-1`) and `γ_j = e_j`.
pub fn minkowski_signature() -> Signature {
    Signature::new(3, 1).expect("within cap")
}

/// Generator `γ_μ` (lower index) of `Cl(3,1)`, `μ = 0..3`.
pub fn gamma31<S: Scalar>(mu: usize) -> Multivector<S> {
    let index = if mu == 0 { 4 } else { mu as u32 };
    Multivector::basis_vector(minkowski_signature(), index).expect("mu in 0..=3")
}

/// `γ^0 = -γ_0`.
pub fn gamma31_upper0<S: Scalar>() -> Multivector<S> {
    -gamma31::<S>(0)
}

/// `ω = γ_0 γ_1 γ_2 γ_3`.
pub fn omega31<S: Scalar>() -> Multivector<S> {
    (0..4).fold(Multivector::one(minkowski_signature()), |acc, mu| {
        &acc * &gamma31::<S>(mu)
    })
}

/// `L(Λ)` defined by `Λ γ_ν Λ^{-1} = L^μ_ν γ_μ`, indices ordered `0..3`
/// with `η = diag(-1, 1, 1, 1)`.
pub fn vector_rep_of_pin31<S: Scalar>(lambda: &Multivector<S>) -> Result<OrthogonalImage<S>> {
    if lambda.signature() != minkowski_signature() {
        return Err(CliffError::SignatureMismatch {
            left: lambda.signature(),
            right: minkowski_signature(),
        });
    }
    let (verdict, _) = group_membership(lambda);
    if !matches!(verdict.membership, Membership::Pin | Membership::Spin) {
        return Err(CliffError::Precondition(format!(
            "element is not in Pin(3,1): {}",
            verdict.membership
        )));
    }
    let inv = lambda.inverse().ok_or(CliffError::NotInvertible)?;
    let columns: Vec<Vec<S>> = (0..4)
        .map(|nu| {
            let img = &(lambda * &gamma31::<S>(nu)) * &inv;
            (0..4).map(|mu| img.coeff(gamma31::<S>(mu).terms().next().unwrap().0)).collect()
        })
        .collect();
    Ok(OrthogonalImage::from_columns(
        columns,
        vec![-1, 1, 1, 1],
        MEMBERSHIP_TOL,
    ))
}

/// Decomposition `x = z^0 + z^j γ_{0j}` of an even element of `Cl(3,1)`
/// with `z^μ = a_μ + ω b_μ`.
#[derive(Debug, Clone, PartialEq)]
pub struct EvenComplexForm<S: Scalar> {
    pub a: [S; 4],
    pub b: [S; 4],
}

fn signed_blade<S: Scalar>(x: &Multivector<S>) -> (Blade, S) {
    let mut terms = x.terms();
    let (b, c) = terms.next().expect("nonzero blade element");
    debug_assert!(terms.next().is_none());
    (b, c.clone())
}

fn complex_structure_basis<S: Scalar>() -> [[Multivector<S>; 2]; 4] {
    let w = omega31::<S>();
    let g0j = |j: usize| &gamma31::<S>(0) * &gamma31::<S>(j);
    let one = Multivector::one(minkowski_signature());
    [
        [one, w.clone()],
        [g0j(1), &w * &g0j(1)],
        [g0j(2), &w * &g0j(2)],
        [g0j(3), &w * &g0j(3)],
    ]
}

impl<S: Scalar> EvenComplexForm<S> {
    /// Split an even element of `Cl(3,1)`.
    pub fn decompose(x: &Multivector<S>) -> Result<Self> {
        if x.signature() != minkowski_signature() {
            return Err(CliffError::SignatureMismatch {
                left: x.signature(),
                right: minkowski_signature(),
            });
        }
        if matches!(x.parity(), Parity::Odd | Parity::Mixed) {
            return Err(CliffError::Precondition("element is not even".into()));
        }
        let basis = complex_structure_basis::<S>();
        let extract = |e: &Multivector<S>| {
            let (blade, sign) = signed_blade(e);
            // sign is ±1, its own inverse.
            x.coeff(blade) * sign
        };
        Ok(Self {
            a: std::array::from_fn(|mu| extract(&basis[mu][0])),
            b: std::array::from_fn(|mu| extract(&basis[mu][1])),
        })
    }

    pub fn assemble(&self) -> Multivector<S> {
        let basis = complex_structure_basis::<S>();
        let mut acc = Multivector::zero(minkowski_signature());
        for mu in 0..4 {
            acc = &acc + &basis[mu][0].scale(&self.a[mu]);
            acc = &acc + &basis[mu][1].scale(&self.b[mu]);
        }
        acc
    }
}

/// `Λ = c_0 + Σ c_j γ_{0j}` with `c_μ = a_μ + ω b_μ`.
pub fn spin31_element<S: Scalar>(c: [(S, S); 4]) -> Multivector<S> {
    let [c0, c1, c2, c3] = c;
    EvenComplexForm {
        a: [c0.0, c1.0, c2.0, c3.0],
        b: [c0.1, c1.1, c2.1, c3.1],
    }
    .assemble()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieAlgebra {
    /// `spin(p, q)`, spanned by `½[e_i, e_j]`.
    Spin,
    /// `u(2,2)` inside `Cl(4,1)`: `γ_a, γ_ab, ω`.
    U22,
    /// `sp(4, R)` inside `Cl(3,1)`: `γ_μ, γ_μν`.
    Sp4,
}

impl std::str::FromStr for LieAlgebra {
    type Err = CliffError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "spin" => Ok(LieAlgebra::Spin),
            "u22" => Ok(LieAlgebra::U22),
            "sp4" => Ok(LieAlgebra::Sp4),
            _ => Err(CliffError::Precondition(format!("unknown Lie algebra {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LieAudit {
    pub which: LieAlgebra,
    pub signature: Signature,
    pub expected_dimension: usize,
    pub dimension: usize,
    pub closed: bool,
    /// Whether every spanning element satisfies `x† = -x`.
    pub pseudo_antihermitean: bool,
}

impl LieAudit {
    pub fn passed(&self) -> bool {
        self.closed && self.dimension == self.expected_dimension
    }
}

fn coefficient_row(x: &Multivector<Rational>) -> Vec<Rational> {
    (0..x.signature().blade_count() as u32)
        .map(|m| x.coeff(Blade::from_mask(m)))
        .collect()
}

/// Span dimension and commutator closure of the named Lie algebra, exact.
pub fn lie_algebra_audit(sig: Signature, which: LieAlgebra) -> Result<LieAudit> {
    let required = match which {
        LieAlgebra::Spin => None,
        LieAlgebra::U22 => Some((4, 1)),
        LieAlgebra::Sp4 => Some((3, 1)),
    };
    if let Some((p, q)) = required {
        if (sig.p(), sig.q()) != (p, q) || sig.is_degenerate() {
            return Err(CliffError::Precondition(format!(
                "{which:?} audit requires Cl({p},{q}), got {sig}"
            )));
        }
    }
    let gens = Multivector::<Rational>::generators(sig);
    let n = gens.len();
    let mut span: Vec<Multivector<Rational>> = Vec::new();
    if which != LieAlgebra::Spin {
        span.extend(gens.iter().cloned());
    }
    let half = crate::scalar::rat(1, 2);
    for i in 0..n {
        for j in (i + 1)..n {
            span.push(gens[i].commutator(&gens[j])?.scale(&half));
        }
    }
    if which == LieAlgebra::U22 {
        span.push(crate::algebra::coxeter_element(sig));
    }
    let expected_dimension = match which {
        LieAlgebra::Spin => n * (n.saturating_sub(1)) / 2,
        LieAlgebra::U22 => 16,
        LieAlgebra::Sp4 => 10,
    };
    let rows: Vec<Vec<Rational>> = span.iter().map(coefficient_row).collect();
    let dimension = linalg::rank(&rows, 0.0);
    let mut closed = true;
    'outer: for a in &span {
        for b in &span {
            let mut extended = rows.clone();
            extended.push(coefficient_row(&a.commutator(b)?));
            if linalg::rank(&extended, 0.0) != dimension {
                closed = false;
                break 'outer;
            }
        }
    }
    let pseudo_antihermitean = span.iter().all(|x| x.conjugation() == -x);
    Ok(LieAudit {
        which,
        signature: sig,
        expected_dimension,
        dimension,
        closed,
        pseudo_antihermitean,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    type Mv = Multivector<Rational>;

    fn sig(p: u32, q: u32) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn e(s: Signature, i: u32) -> Mv {
        Mv::basis_vector(s, i).unwrap()
    }

    #[test]
    fn reflection_examples() {
        let s = sig(2, 0);
        assert_eq!(reflect(&e(s, 1), &e(s, 1)).unwrap(), -e(s, 1));
        assert_eq!(reflect(&e(s, 1), &e(s, 2)).unwrap(), e(s, 2));
    }

    #[test]
    fn null_vector_is_rejected() {
        let s = sig(1, 1);
        let null = &e(s, 1) + &e(s, 2);
        assert_eq!(reflect(&null, &e(s, 1)), Err(CliffError::NullVector));
        assert!(reflect(&Mv::one(s), &e(s, 1)).is_err());
    }

    #[test]
    fn twisted_adjoint_examples() {
        let s = sig(3, 0);
        let one = Mv::one(s);
        assert_eq!(twisted_adjoint(&one, &e(s, 2)).unwrap().image, e(s, 2));
        assert_eq!(twisted_adjoint(&e(s, 1), &e(s, 1)).unwrap().image, -e(s, 1));
        let r = &e(s, 1) * &e(s, 2);
        assert_eq!(twisted_adjoint(&r, &e(s, 3)).unwrap().image, e(s, 3));
        assert_eq!(
            twisted_adjoint(&Mv::zero(s), &e(s, 1)),
            Err(CliffError::NotInvertible)
        );
    }

    #[test]
    fn membership_examples() {
        let s = sig(3, 0);
        let (v, img) = group_membership(&e(s, 1));
        assert_eq!(v.membership, Membership::Pin);
        let img = img.unwrap();
        assert_eq!(img.matrix[0][0], rat(-1, 1));
        assert_eq!(img.matrix[1][1], rat(1, 1));
        assert_eq!(img.det, rat(-1, 1));

        let (v, img) = group_membership(&Mv::scalar(s, rat(2, 1)));
        assert_eq!(v.membership, Membership::LipschitzOnly);
        assert_eq!(v.norm_value, Some(rat(4, 1)));
        assert!(img.unwrap().is_identity(0.0));

        let s2 = sig(2, 0);
        let mixed = &Mv::one(s2) + &e(s2, 1);
        let (v, img) = group_membership(&mixed);
        assert_eq!(v.membership, Membership::None);
        assert!(img.is_none());
        assert_eq!(v.parity, Parity::Mixed);
    }

    #[test]
    fn mixed_invertible_element_reports_off_grade_part() {
        let s = sig(3, 0);
        let x = &Mv::scalar(s, rat(2, 1)) + &e(s, 1);
        let (v, _) = group_membership(&x);
        assert_eq!(v.membership, Membership::None);
        assert_eq!(v.diagnostics, vec!["image of e1 has non-vector part -4/3".to_string()]);
    }

    #[test]
    fn lie_audits() {
        let a = lie_algebra_audit(sig(3, 0), LieAlgebra::Spin).unwrap();
        assert_eq!((a.dimension, a.closed), (3, true));
        let a = lie_algebra_audit(sig(4, 1), LieAlgebra::U22).unwrap();
        assert!(a.passed() && a.pseudo_antihermitean);
        let a = lie_algebra_audit(sig(3, 1), LieAlgebra::Sp4).unwrap();
        assert!(a.passed());
        assert!(lie_algebra_audit(sig(3, 1), LieAlgebra::U22).is_err());
    }

    #[test]
    fn space_and_time_reflections() {
        let g0 = gamma31_upper0::<Rational>();
        let ls = vector_rep_of_pin31(&g0).unwrap();
        let diag: Vec<Rational> = (0..4).map(|i| ls.matrix[i][i].clone()).collect();
        assert_eq!(diag, vec![rat(1, 1), rat(-1, 1), rat(-1, 1), rat(-1, 1)]);
        let lt = vector_rep_of_pin31(&(&g0 * &omega31())).unwrap();
        let diag: Vec<Rational> = (0..4).map(|i| lt.matrix[i][i].clone()).collect();
        assert_eq!(diag, vec![rat(-1, 1), rat(1, 1), rat(1, 1), rat(1, 1)]);
        let minus_one = -Mv::one(minkowski_signature());
        assert!(vector_rep_of_pin31(&minus_one).unwrap().is_identity(0.0));
    }

    #[test]
    fn rotor_exp_of_zero() {
        let s = sig(3, 1);
        assert_eq!(rotor_exp(&Multivector::zero(s)).unwrap(), Multivector::one(s));
        assert!(rotor_exp(&Multivector::<f64>::one(s)).is_err());
    }
}
