//! Classical versus Grassmann Majorana fields: the mass term and the U(1)
//! current as exact bilinear contractions, the seesaw block and the
//! sterile-neutrino embedding.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_traits::Zero;

use crate::blade::Blade;
use crate::dirac::{self, DiracSpinor};
use crate::error::{CliffError, Result};
use crate::matrep::{self, c2, CMat};
use crate::multivector::Multivector;
use crate::scalar::{gauss, GaussianRational, Scalar};
use crate::signature::Signature;

/// Number of field components (one per real Majorana component).
pub const COMPONENTS: usize = 4;

pub type ExactMatrix = [[GaussianRational; COMPONENTS]; COMPONENTS];

/// Round a matrix whose entries are Gaussian integers.
fn exact_matrix(m: &CMat) -> Result<ExactMatrix> {
    let mut out: ExactMatrix = Default::default();
    for r in 0..COMPONENTS {
        for c in 0..COMPONENTS {
            let z = m[(r, c)];
            let (a, b) = (z.re.round(), z.im.round());
            if (z.re - a).abs() > 1e-14 || (z.im - b).abs() > 1e-14 {
                return Err(CliffError::Precondition(format!(
                    "entry ({r},{c}) = {z} is not a Gaussian integer"
                )));
            }
            out[r][c] = gauss(a as i64, b as i64);
        }
    }
    Ok(out)
}

/// `C = 1 ⊗ c` of the chiral basis, exact.
pub fn charge_conjugation_exact() -> ExactMatrix {
    exact_matrix(&matrep::charge_conjugation(4, false).expect("D = 4"))
        .expect("C has integer entries")
}

/// `C⁻¹ = -C` (`C² = -1`).
pub fn charge_conjugation_inverse_exact() -> ExactMatrix {
    charge_conjugation_exact().map(|row| row.map(|x| -x))
}

/// `C γ^μ`, exact.
pub fn c_gamma_exact(mu: usize) -> Result<ExactMatrix> {
    if mu > 3 {
        return Err(CliffError::Precondition(format!("μ = {mu} outside 0..=3")));
    }
    let rep = dirac::chiral_rep();
    exact_matrix(&(rep.c.expect("D = 4 has C") * &rep.gammas[mu]))
}

pub fn is_symmetric(m: &ExactMatrix) -> bool {
    (0..COMPONENTS).all(|r| (0..COMPONENTS).all(|c| m[r][c] == m[c][r]))
}

pub fn is_antisymmetric(m: &ExactMatrix) -> bool {
    (0..COMPONENTS).all(|r| (0..COMPONENTS).all(|c| m[r][c] == -m[c][r].clone()))
}

/// Polynomial in commuting symbols `ψ_1..ψ_n`, keyed by sorted monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Vec<u32>, GaussianRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The symbol `ψ_index`.
    pub fn var(index: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![index], gauss(1, 0));
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &GaussianRational)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    fn add_term(&mut self, monomial: Vec<u32>, coeff: GaussianRational) {
        let entry = self.terms.entry(monomial).or_insert_with(GaussianRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut m: Vec<u32> = ma.iter().chain(mb).copied().collect();
                m.sort_unstable();
                out.add_term(m, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone() * s.clone());
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let vars: Vec<String> = m.iter().map(|i| format!("psi{i}")).collect();
                format!("{}*{}", c.format_coeff(), vars.join("*"))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Commuting,
    Anticommuting,
}

impl std::str::FromStr for FieldKind {
    type Err = CliffError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "commuting" => Ok(FieldKind::Commuting),
            "anticommuting" => Ok(FieldKind::Anticommuting),
            _ => Err(CliffError::Precondition(format!("unknown field kind {s:?}"))),
        }
    }
}

/// Result of a bilinear contraction `Σ ψ_a M_ab ψ_b`.
#[derive(Debug, Clone, PartialEq)]
pub enum Contraction {
    Commuting(Polynomial),
    /// Element of the exterior algebra on `θ_1..θ_4`.
    Anticommuting(Multivector<GaussianRational>),
}

impl Contraction {
    pub fn is_zero(&self) -> bool {
        match self {
            Contraction::Commuting(p) => p.is_zero(),
            Contraction::Anticommuting(x) => x.is_zero(),
        }
    }
}

impl fmt::Display for Contraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Contraction::Commuting(p) => write!(f, "{p}"),
            Contraction::Anticommuting(x) => f.write_str(&format_grassmann(x)),
        }
    }
}

/// Text form with generators written `theta1^theta2`.
pub fn format_grassmann(x: &Multivector<GaussianRational>) -> String {
    x.to_string().replace('e', "theta")
}

pub fn grassmann_signature() -> Signature {
    Signature::grassmann(COMPONENTS as u32).expect("within cap")
}

/// `θ_1..θ_4`: `θ_a θ_b = -θ_b θ_a`, `θ_a² = 0`.
pub fn grassmann_generators() -> Vec<Multivector<GaussianRational>> {
    Multivector::generators(grassmann_signature())
}

/// `Σ_ab ψ_a M_ab ψ_b` for commuting or anticommuting `ψ`.
pub fn contract(kind: FieldKind, m: &ExactMatrix) -> Contraction {
    match kind {
        FieldKind::Commuting => {
            let vars: Vec<Polynomial> = (1..=COMPONENTS as u32).map(Polynomial::var).collect();
            let mut acc = Polynomial::zero();
            for a in 0..COMPONENTS {
                for b in 0..COMPONENTS {
                    acc = acc.add(&vars[a].mul(&vars[b]).scale(&m[a][b]));
                }
            }
            Contraction::Commuting(acc)
        }
        FieldKind::Anticommuting => {
            let th = grassmann_generators();
            let mut acc = Multivector::zero(grassmann_signature());
            for a in 0..COMPONENTS {
                for b in 0..COMPONENTS {
                    acc = &acc + &(&th[a] * &th[b]).scale(&m[a][b]);
                }
            }
            Contraction::Anticommuting(acc)
        }
    }
}

/// `i Σ ψ_a (C⁻¹)_ab ψ_b`.
pub fn mass_term(kind: FieldKind) -> Contraction {
    let i = gauss(0, 1);
    let m = charge_conjugation_inverse_exact().map(|row| row.map(|x| x * i.clone()));
    contract(kind, &m)
}

/// `Σ ψ_a (C γ^μ)_ab ψ_b`.
pub fn u1_current(kind: FieldKind, mu: usize) -> Result<Contraction> {
    Ok(contract(kind, &c_gamma_exact(mu)?))
}

/// `Σ_{a<b} 2i (C⁻¹)_ab θ_a θ_b`, the expansion of the anticommuting mass
/// term over ordered pairs.
pub fn mass_term_expansion() -> Multivector<GaussianRational> {
    let cinv = charge_conjugation_inverse_exact();
    let mut terms = Vec::new();
    for a in 0..COMPONENTS {
        for b in (a + 1)..COMPONENTS {
            let blade = Blade::from_indices(&[a as u32 + 1, b as u32 + 1]);
            terms.push((blade, gauss(0, 2) * cinv[a][b].clone()));
        }
    }
    Multivector::from_terms(grassmann_signature(), terms)
}

/// `|yH|/M` below which the hierarchy flag is set.
pub const HIERARCHY_RATIO: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeesawMasses {
    pub lambda_plus: f64,
    pub lambda_minus: f64,
    /// `-λ-`.
    pub m_light: f64,
    /// `λ+`.
    pub m_heavy: f64,
    /// `(yH)²/M`.
    pub approx_light: f64,
    pub approx_heavy: f64,
    /// `|approx - exact| / exact` for the light mass.
    pub rel_err_light: f64,
    pub rel_err_heavy: f64,
    /// `|yH|/M < 0.1`.
    pub hierarchy: bool,
}

/// Eigenvalues of `[[0, yH], [yH, M]]`,
/// `λ± = (M ± sqrt(M² + 4(yH)²))/2`.
///
/// `λ-` is taken as `-(yH)²/λ+` to avoid cancellation when `yH ≪ M`.
pub fn seesaw_masses(yh: f64, m: f64) -> Result<SeesawMasses> {
    if !(m > 0.0) || !m.is_finite() || !yh.is_finite() {
        return Err(CliffError::Precondition(format!(
            "seesaw block needs finite yH and M > 0, got yH = {yh}, M = {m}"
        )));
    }
    let s = m.hypot(2.0 * yh);
    let lambda_plus = (m + s) / 2.0;
    let lambda_minus = -(yh * yh) / lambda_plus;
    let m_light = -lambda_minus;
    let approx_light = yh * yh / m;
    // (λ+ - M)/M = 2y²/(M(s + M)), free of cancellation.
    let shift = 2.0 * yh * yh / (m + s);
    let rel_err_light = if m_light == 0.0 { 0.0 } else { shift / m };
    let rel_err_heavy = shift / lambda_plus;
    Ok(SeesawMasses {
        lambda_plus,
        lambda_minus,
        m_light,
        m_heavy: lambda_plus,
        approx_light,
        approx_heavy: m,
        rel_err_light,
        rel_err_heavy,
        hierarchy: yh.abs() / m < HIERARCHY_RATIO,
    })
}

/// `N = (c R̄, R)`: a Majorana spinor built from a right-handed doublet.
pub fn sterile_embedding(r: [Complex64; 2]) -> DiracSpinor {
    let bar = CMat::from_column_slice(2, 1, &r.map(|z| z.conj()));
    let left = c2() * bar;
    DiracSpinor::from_blocks([left[0], left[1]], r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_level_facts() {
        assert!(is_antisymmetric(&charge_conjugation_exact()));
        for mu in 0..4 {
            assert!(is_symmetric(&c_gamma_exact(mu).unwrap()), "mu={mu}");
        }
        assert!(c_gamma_exact(4).is_err());
        assert_eq!(c_gamma_exact(0).unwrap()[0][0], gauss(0, 0));
    }

    #[test]
    fn mass_term_dichotomy() {
        assert!(mass_term(FieldKind::Commuting).is_zero());
        let anti = mass_term(FieldKind::Anticommuting);
        assert!(!anti.is_zero());
        assert_eq!(anti, Contraction::Anticommuting(mass_term_expansion()));
        match anti {
            Contraction::Anticommuting(x) => assert_eq!(x.grades(), vec![2]),
            _ => unreachable!(),
        }
    }

    #[test]
    fn chiral_block_form() {
        // i(ψ_R c⁻¹ ψ_R - ψ_L c ψ_L) with ψ_L = (θ1, θ2), ψ_R = (θ3, θ4).
        let th = grassmann_generators();
        let c = [[gauss(0, 0), gauss(1, 0)], [gauss(-1, 0), gauss(0, 0)]];
        let mut acc = Multivector::zero(grassmann_signature());
        for a in 0..2 {
            for b in 0..2 {
                let right = (&th[a + 2] * &th[b + 2]).scale(&-c[a][b].clone());
                let left = (&th[a] * &th[b]).scale(&c[a][b]);
                acc = &acc + &(&right - &left);
            }
        }
        let expected = acc.scale(&gauss(0, 1));
        assert_eq!(mass_term(FieldKind::Anticommuting), Contraction::Anticommuting(expected));
    }

    #[test]
    fn current_dichotomy() {
        for mu in 0..4 {
            assert!(u1_current(FieldKind::Anticommuting, mu).unwrap().is_zero());
            assert!(!u1_current(FieldKind::Commuting, mu).unwrap().is_zero());
        }
    }

    #[test]
    fn polynomial_arithmetic() {
        let x = Polynomial::var(1);
        let y = Polynomial::var(2);
        assert_eq!(x.mul(&y), y.mul(&x));
        let d = x.mul(&y).add(&y.mul(&x).scale(&gauss(-1, 0)));
        assert!(d.is_zero());
        assert_eq!(x.mul(&y).to_string(), "1*psi1*psi2");
    }

    #[test]
    fn grassmann_relations() {
        let th = grassmann_generators();
        assert_eq!(grassmann_signature().blade_count(), 16);
        assert!((&th[0] * &th[0]).is_zero());
        assert_eq!(&th[0] * &th[1], -(&th[1] * &th[0]));
    }

    #[test]
    fn seesaw_examples() {
        let s = seesaw_masses(0.0, 5.0).unwrap();
        assert_eq!((s.m_light, s.m_heavy), (0.0, 5.0));
        let s = seesaw_masses(1.0, 100.0).unwrap();
        assert!((s.m_heavy - 100.009999).abs() < 1e-6);
        assert!((s.m_light - 0.009999).abs() < 1e-6);
        assert!(s.rel_err_light < 1e-3 && s.hierarchy);
        assert!(((s.lambda_plus + s.lambda_minus) - 100.0).abs() <= 1e-15 * 100.0);
        assert!(((s.lambda_plus * s.lambda_minus) + 1.0).abs() <= 1e-15);
        assert!(seesaw_masses(1.0, 0.0).is_err());
        assert!(seesaw_masses(1.0, -2.0).is_err());
        let heavier = seesaw_masses(1.0, 200.0).unwrap();
        assert!(heavier.m_light < s.m_light);
    }

    #[test]
    fn sterile_is_majorana() {
        let n = sterile_embedding([Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]);
        assert!(dirac::is_majorana(&n, 1e-15));
        let zero = sterile_embedding([Complex64::new(0.0, 0.0); 2]);
        assert_eq!(zero.norm(), 0.0);
    }
}
