//! Explicit γ-matrices for `Cl(D)` and `Cl(D-1, 1)` built from tensor
//! products of Pauli matrices, with chirality, charge conjugation, `β`
//! and the KO sign pair.

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{CliffError, Result};

pub type CMat = DMatrix<Complex64>;

/// Entry tolerance for the matrix identities.
pub const MATRIX_TOL: f64 = 1e-13;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Pauli matrix `σ_k`, `k = 1, 2, 3`; `σ_0` is the identity.
pub fn pauli(k: usize) -> CMat {
    let entries = match k {
        0 => [ONE, ZERO, ZERO, ONE],
        1 => [ZERO, ONE, ONE, ZERO],
        2 => [ZERO, -I, I, ZERO],
        3 => [ONE, ZERO, ZERO, -ONE],
        _ => panic!("Pauli index {k} outside 0..=3"),
    };
    CMat::from_row_slice(2, 2, &entries)
}

/// `c = iσ₂ = [[0, 1], [-1, 0]]`.
pub fn c2() -> CMat {
    pauli(2) * I
}

pub fn identity(n: usize) -> CMat {
    CMat::identity(n, n)
}

/// Kronecker product of a list of factors, left to right.
pub fn kron_all(factors: &[CMat]) -> CMat {
    factors
        .iter()
        .fold(identity(1), |acc, f| acc.kronecker(f))
}

fn chirality_even(m: u32) -> CMat {
    pauli(3).kronecker(&identity(1 << (m - 1)))
}

/// Generators of `Cl(2m)`, `m ≥ 1`: `Cl(2)` is `{σ1, σ2}` and `Cl(2m+2)`
/// prepends `σ1 ⊗` to the `2m + 1` generators of the odd algebra, then
/// appends `σ2 ⊗ 1`.
fn euclidean_even(m: u32) -> Vec<CMat> {
    if m == 1 {
        return vec![pauli(1), pauli(2)];
    }
    let mut lower = euclidean_even(m - 1);
    lower.push(chirality_even(m - 1));
    let mut gens: Vec<CMat> = lower.iter().map(|g| pauli(1).kronecker(g)).collect();
    gens.push(pauli(2).kronecker(&identity(1 << (m - 1))));
    gens
}

/// Hermitean Euclidean generators `γ_1..γ_D`.
pub fn euclidean_gammas(d: u32) -> Result<Vec<CMat>> {
    if !(1..=11).contains(&d) {
        return Err(CliffError::DimensionOutOfRange(d));
    }
    if d == 1 {
        return Ok(vec![identity(1)]);
    }
    let m = d / 2;
    let mut gens = euclidean_even(m);
    if d % 2 == 1 {
        gens.push(chirality_even(m));
    }
    Ok(gens)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixRep {
    pub dim: u32,
    pub lorentzian: bool,
    /// Euclidean: `γ_1..γ_D`. Lorentzian: `γ^0, γ^1, .., γ^{D-1}` with
    /// `γ^0 = iγ_{2m}` and the remaining Euclidean generators in order.
    pub gammas: Vec<CMat>,
    /// Diagonal of `η`.
    pub metric: Vec<i8>,
    /// `γ_{2m+1}` for even `D`.
    pub chirality: Option<CMat>,
    /// Solution of `-γ^t C = C γ` in this representation, when one exists.
    pub c: Option<CMat>,
    /// `B = γ^0 C` (Lorentzian only).
    pub b: Option<CMat>,
    /// `β = iγ^0` (Lorentzian only).
    pub beta: Option<CMat>,
}

/// `-γ^t C = C γ` for every generator.
pub fn intertwines(c: &CMat, gammas: &[CMat], tol: f64) -> bool {
    gammas
        .iter()
        .all(|g| max_abs(&(-g.transpose() * c - c * g)) <= tol)
}

pub fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs_diff(a: &CMat, b: &CMat) -> f64 {
    max_abs(&(a - b))
}

/// Largest imaginary part of any entry.
pub fn max_imag(m: &CMat) -> f64 {
    m.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
}

impl MatrixRep {
    pub fn size(&self) -> usize {
        self.gammas[0].nrows()
    }

    /// `max |γ_a γ_b + γ_b γ_a - 2η_ab|`.
    pub fn clifford_residual(&self) -> f64 {
        let n = self.size();
        let mut worst: f64 = 0.0;
        for (a, ga) in self.gammas.iter().enumerate() {
            for (b, gb) in self.gammas.iter().enumerate() {
                let eta = if a == b { self.metric[a] as f64 } else { 0.0 };
                let r = ga * gb + gb * ga - identity(n) * Complex64::new(2.0 * eta, 0.0);
                worst = worst.max(max_abs(&r));
            }
        }
        worst
    }

    /// Time generator `γ^0` of a Lorentzian rep.
    pub fn gamma0(&self) -> Option<&CMat> {
        self.lorentzian.then(|| &self.gammas[0])
    }
}

/// Build the representation for `Cl(D)` or `Cl(D-1, 1)`, `1 ≤ D ≤ 11`.
pub fn gamma_matrices(d: u32, lorentzian: bool) -> Result<MatrixRep> {
    let mut gammas = euclidean_gammas(d)?;
    if lorentzian && d < 2 {
        return Err(CliffError::Precondition(
            "Lorentzian representation needs D >= 2".into(),
        ));
    }
    let m = d / 2;
    let chirality = d.is_multiple_of(2).then(|| chirality_even(m));
    let c = if d.is_multiple_of(2) {
        Some(charge_conjugation_even(d)?)
    } else if d >= 3 {
        // The odd irreducible rep adds the chirality of Cl(2m), so C(2m)
        // works only if it also intertwines that generator.
        let candidate = charge_conjugation_even(d - 1)?;
        intertwines(&candidate, &gammas, MATRIX_TOL).then_some(candidate)
    } else {
        None
    };
    let mut metric = vec![1i8; d as usize];
    let (mut b, mut beta) = (None, None);
    if lorentzian {
        let g0 = gammas.remove(2 * m as usize - 1) * I;
        gammas.insert(0, g0.clone());
        metric[0] = -1;
        b = c.as_ref().map(|c| &g0 * c);
        beta = Some(g0 * I);
    }
    Ok(MatrixRep {
        dim: d,
        lorentzian,
        gammas,
        metric,
        chirality,
        c,
        b,
        beta,
    })
}

/// Factor lists of the product formulas: index `0` stands for
/// `Γ^0 = iΓ_D`, other indices are Euclidean generators.
fn c_factors(d: u32) -> &'static [usize] {
    match d {
        2 => &[0],
        4 => &[3, 1],
        6 => &[0, 2, 4],
        8 => &[1, 3, 5, 7],
        10 => &[0, 2, 4, 6, 8],
        _ => unreachable!("even D in 2..=10"),
    }
}

fn charge_conjugation_even(d: u32) -> Result<CMat> {
    if !d.is_multiple_of(2) || !(2..=10).contains(&d) {
        return Err(CliffError::DimensionOutOfRange(d));
    }
    let gens = euclidean_gammas(d)?;
    let size = gens[0].nrows();
    Ok(c_factors(d).iter().fold(identity(size), |acc, &k| {
        let f = if k == 0 {
            &gens[d as usize - 1] * I
        } else {
            gens[k - 1].clone()
        };
        acc * f
    }))
}

/// Charge conjugation matrix `C(D)`, `2 ≤ D ≤ 10`.
///
/// Odd `D = 2m - 1` is realized in the reducible rep given by the first
/// `D` generators of `Cl(2m)`; `primed` selects `C' = i^{5-m} ω_{2m-1} C(2m)`.
pub fn charge_conjugation(d: u32, primed: bool) -> Result<CMat> {
    if !(2..=10).contains(&d) {
        return Err(CliffError::DimensionOutOfRange(d));
    }
    if d.is_multiple_of(2) {
        if primed {
            return Err(CliffError::Precondition(
                "the primed variant exists only for odd D".into(),
            ));
        }
        return charge_conjugation_even(d);
    }
    let m = d.div_ceil(2);
    let c = charge_conjugation_even(d + 1)?;
    if !primed {
        return Ok(c);
    }
    let gens = euclidean_gammas(d + 1)?;
    let omega = gens[..d as usize]
        .iter()
        .fold(identity(c.nrows()), |acc, g| acc * g);
    Ok(omega * c * I.powi(5 - m as i32))
}

/// Signs `(C̄C, C̄'C')` for odd `D`.
pub fn odd_conjugation_signs(d: u32) -> Result<(i8, i8)> {
    let c = charge_conjugation(d, false)?;
    let cp = charge_conjugation(d, true)?;
    Ok((
        unit_sign(&(c.conjugate() * &c), MATRIX_TOL)?,
        unit_sign(&(cp.conjugate() * &cp), MATRIX_TOL)?,
    ))
}

/// Generators the odd-`D` matrices of [`charge_conjugation`] act on.
pub fn embedded_odd_gammas(d: u32) -> Result<Vec<CMat>> {
    if d.is_multiple_of(2) {
        return Err(CliffError::Precondition("odd D expected".into()));
    }
    let mut gens = euclidean_gammas(d + 1)?;
    gens.truncate(d as usize);
    Ok(gens)
}

/// Failure of `-γ^t C = C γ` in an irreducible odd-dimensional rep.
pub fn irreducible_charge_conjugation(d: u32) -> Result<CMat> {
    let rep = gamma_matrices(d, false)?;
    let size = rep.size();
    rep.c.ok_or_else(|| {
        CliffError::Precondition(format!(
            "no charge conjugation matrix in the irreducible {}-dimensional rep of Cl({d}); \
             use the reducible embedding into Cl({})",
            size,
            d + 1
        ))
    })
}

/// `β = iγ^0`.
pub fn beta_matrix(d: u32) -> Result<CMat> {
    gamma_matrices(d, true)?
        .beta
        .ok_or_else(|| CliffError::Precondition("no Lorentzian rep".into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KoSigns {
    pub j_squared: i8,
    pub epsilon: i8,
    pub ko_dim: u8,
}

/// `(+,+) → 0, (−,−) → 2, (−,+) → 4, (+,−) → 6`.
pub fn ko_dimension(j_squared: i8, epsilon: i8) -> u8 {
    match (j_squared > 0, epsilon > 0) {
        (true, true) => 0,
        (false, false) => 2,
        (false, true) => 4,
        (true, false) => 6,
    }
}

/// Read off `s` from `m = s · 1` (`s = ±1`).
fn unit_sign(m: &CMat, tol: f64) -> Result<i8> {
    for s in [1i8, -1] {
        if max_abs_diff(m, &(identity(m.nrows()) * Complex64::new(s as f64, 0.0))) <= tol {
            return Ok(s);
        }
    }
    Err(CliffError::Precondition("matrix is not ±1".into()))
}

/// Sign `s` in `A X = s X A`.
fn commutation_sign(a: &CMat, x: &CMat, tol: f64) -> Result<i8> {
    for s in [1i8, -1] {
        if max_abs(&(a * x - x * a * Complex64::new(s as f64, 0.0))) <= tol {
            return Ok(s);
        }
    }
    Err(CliffError::Precondition("matrices neither commute nor anticommute".into()))
}

/// `J² = C̄C` and `Jγ = εγJ` computed from the matrices (`J = KC`
/// Euclidean, `J_L = KB` Lorentzian), for even `D ≤ 10`.
pub fn ko_signs(d: u32, lorentzian: bool) -> Result<KoSigns> {
    if !d.is_multiple_of(2) || !(2..=10).contains(&d) {
        return Err(CliffError::DimensionOutOfRange(d));
    }
    let rep = gamma_matrices(d, lorentzian)?;
    let j = if lorentzian {
        rep.b.clone().expect("even D has B")
    } else {
        rep.c.clone().expect("even D has C")
    };
    let chi = rep.chirality.as_ref().expect("even D has chirality");
    // γ is real, so Jγ = εγJ reduces to Cγ = εγC.
    let j_squared = unit_sign(&(j.conjugate() * &j), MATRIX_TOL)?;
    let epsilon = commutation_sign(&j, chi, MATRIX_TOL)?;
    Ok(KoSigns {
        j_squared,
        epsilon,
        ko_dim: ko_dimension(j_squared, epsilon),
    })
}

/// `(-1)^{m(m+1)/2}` and `(-1)^m`.
pub fn ko_signs_formula(m: u32) -> (i8, i8) {
    let j = if (m * (m + 1) / 2).is_multiple_of(2) { 1 } else { -1 };
    let e = if m.is_multiple_of(2) { 1 } else { -1 };
    (j, e)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MajoranaKind {
    None,
    Majorana,
    MajoranaWeyl,
}

impl fmt::Display for MajoranaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MajoranaKind::None => "none",
            MajoranaKind::Majorana => "majorana",
            MajoranaKind::MajoranaWeyl => "majorana_weyl",
        })
    }
}

/// How the two Weyl representations relate under complex conjugation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeylPairing {
    /// Odd `n`: no chirality.
    NotApplicable,
    /// `p - q ≡ 2 mod 4`.
    ComplexConjugate,
    /// `p - q ≡ 4 mod 8`.
    SelfConjugate,
    /// `p - q ≡ 0 mod 8`: each Weyl rep is real.
    Real,
}

impl fmt::Display for WeylPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeylPairing::NotApplicable => "n/a",
            WeylPairing::ComplexConjugate => "weyl_complex",
            WeylPairing::SelfConjugate => "weyl_self",
            WeylPairing::Real => "weyl_real",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MajoranaClass {
    pub kind: MajoranaKind,
    pub weyl: WeylPairing,
    /// Real dimension of a Majorana spinor.
    pub majorana_dim: Option<u64>,
    /// Real dimension of a Majorana-Weyl spinor.
    pub majorana_weyl_dim: Option<u64>,
}

/// Majorana spinors exist iff `p - q ≡ 0, 1, 2 mod 8`; Majorana-Weyl iff
/// `p - q ≡ 0 mod 8`.
pub fn majorana_class(p: u32, q: u32) -> MajoranaClass {
    let n = p + q;
    let r = (p as i64 - q as i64).rem_euclid(8);
    let kind = match r {
        0 => MajoranaKind::MajoranaWeyl,
        1 | 2 => MajoranaKind::Majorana,
        _ => MajoranaKind::None,
    };
    let weyl = if n % 2 == 1 {
        WeylPairing::NotApplicable
    } else {
        match r {
            0 => WeylPairing::Real,
            4 => WeylPairing::SelfConjugate,
            _ => WeylPairing::ComplexConjugate,
        }
    };
    let spinor = 1u64 << (n / 2);
    MajoranaClass {
        kind,
        weyl,
        majorana_dim: (kind != MajoranaKind::None).then_some(spinor),
        majorana_weyl_dim: (kind == MajoranaKind::MajoranaWeyl && n > 0).then_some(spinor / 2),
    }
}

/// Sampled left/right movers of the massless 1+1 dimensional Dirac field.
#[derive(Debug, Clone, PartialEq)]
pub struct WeylFields<T> {
    pub x: Vec<f64>,
    pub left: Vec<T>,
    pub right: Vec<T>,
}

/// Exact transport `ψ_L(t, x) = ψ_L(0, x + t)`, `ψ_R(t, x) = ψ_R(0, x - t)`.
///
/// The initial data are functions, so the evolved samples carry no
/// discretization error.
pub fn weyl_1p1_solver<T>(
    grid: &[f64],
    initial_left: impl Fn(f64) -> T,
    initial_right: impl Fn(f64) -> T,
    t: f64,
) -> WeylFields<T> {
    WeylFields {
        x: grid.to_vec(),
        left: grid.iter().map(|&x| initial_left(x + t)).collect(),
        right: grid.iter().map(|&x| initial_right(x - t)).collect(),
    }
}

/// Discrete L2 distance between two sampled profiles.
pub fn l2_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(m: &CMat) -> bool {
        max_imag(m) == 0.0
    }

    #[test]
    fn d4_examples() {
        let rep = gamma_matrices(4, false).unwrap();
        for i in 1..=3 {
            assert_eq!(rep.gammas[i - 1], pauli(1).kronecker(&pauli(i)));
        }
        assert_eq!(rep.gammas[3], pauli(2).kronecker(&pauli(0)));
        let lor = gamma_matrices(4, true).unwrap();
        assert_eq!(lor.chirality, Some(pauli(3).kronecker(&pauli(0))));
        assert_eq!(lor.gammas[0], c2().kronecker(&pauli(0)));
        assert!(lor.clifford_residual() < MATRIX_TOL);
    }

    #[test]
    fn d2_and_d1() {
        let rep = gamma_matrices(2, false).unwrap();
        assert_eq!(rep.gammas, vec![pauli(1), pauli(2)]);
        assert_eq!(rep.chirality, Some(pauli(3)));
        assert_eq!(gamma_matrices(1, false).unwrap().gammas, vec![identity(1)]);
        assert!(gamma_matrices(1, true).is_err());
        assert!(gamma_matrices(0, false).is_err());
        assert!(gamma_matrices(12, false).is_err());
    }

    #[test]
    fn charge_conjugation_tensor_forms() {
        let (c, s3, one) = (c2(), pauli(3), pauli(0));
        assert_eq!(charge_conjugation(2, false).unwrap(), c);
        assert_eq!(charge_conjugation(4, false).unwrap(), kron_all(&[one.clone(), c.clone()]));
        assert_eq!(
            charge_conjugation(6, false).unwrap(),
            kron_all(&[c.clone(), s3.clone(), c.clone()])
        );
        assert!(charge_conjugation(11, false).is_err());
        assert!(charge_conjugation(4, true).is_err());
    }

    #[test]
    fn odd_dimensions() {
        assert!(gamma_matrices(3, false).unwrap().c.is_some());
        assert!(irreducible_charge_conjugation(5).is_err());
        for d in [3u32, 5, 7, 9] {
            let gens = embedded_odd_gammas(d).unwrap();
            let c = charge_conjugation(d, false).unwrap();
            let cp = charge_conjugation(d, true).unwrap();
            assert!(intertwines(&c, &gens, MATRIX_TOL), "D={d}");
            assert!(intertwines(&cp, &gens, MATRIX_TOL), "D={d} primed");
            assert!(real(&cp), "D={d}");
            let s = unit_sign(&(c.conjugate() * &c), MATRIX_TOL).unwrap();
            let sp = unit_sign(&(cp.conjugate() * &cp), MATRIX_TOL).unwrap();
            // C̄'C' = (-1)^{D(D+1)/2} C̄C: opposite signs only for D = 5, 9.
            let flip = if (d * (d + 1) / 2) % 2 == 0 { 1 } else { -1 };
            assert_eq!(sp, flip * s, "D={d}");
        }
    }

    #[test]
    fn ko_examples() {
        let e = ko_signs(4, false).unwrap();
        assert_eq!((e.j_squared, e.epsilon), (-1, 1));
        let l = ko_signs(4, true).unwrap();
        assert_eq!((l.j_squared, l.epsilon, l.ko_dim), (1, -1, 6));
        assert_eq!(ko_signs(2, true).unwrap().j_squared, 1);
        assert!(ko_signs(5, false).is_err());
    }

    #[test]
    fn beta_and_b() {
        let rep = gamma_matrices(4, true).unwrap();
        let beta = rep.beta.clone().unwrap();
        assert_eq!(beta.adjoint(), beta);
        for g in &rep.gammas {
            assert!(max_abs(&(g.adjoint() * &beta + &beta * g)) < MATRIX_TOL);
        }
        let b = rep.b.unwrap();
        assert_eq!(b.transpose(), b);
        assert!(real(&b));
    }

    #[test]
    fn majorana_classes() {
        assert_eq!(majorana_class(3, 1).kind, MajoranaKind::Majorana);
        let c = majorana_class(9, 1);
        assert_eq!(c.kind, MajoranaKind::MajoranaWeyl);
        assert_eq!(c.majorana_weyl_dim, Some(16));
        assert_eq!(majorana_class(1, 1).majorana_weyl_dim, Some(1));
        let c = majorana_class(4, 0);
        assert_eq!((c.kind, c.weyl), (MajoranaKind::None, WeylPairing::SelfConjugate));
        assert_eq!(majorana_class(3, 1).weyl, WeylPairing::ComplexConjugate);
    }

    #[test]
    fn weyl_transport() {
        let grid: Vec<f64> = (-50..=50).map(|k| k as f64 * 0.1).collect();
        let gauss = |x: f64| (-x * x).exp();
        let f = weyl_1p1_solver(&grid, |_| 0.0, gauss, 1.0);
        let peak = f
            .right
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .unwrap()
            .0;
        assert!((grid[peak] - 1.0).abs() < 1e-12);
        assert!(f.left.iter().all(|&v| v == 0.0));
        let still = weyl_1p1_solver(&grid, gauss, gauss, 0.0);
        assert_eq!(still.left, grid.iter().map(|&x| gauss(x)).collect::<Vec<_>>());
    }
}
