//! Four-dimensional Minkowski spinors in the chiral basis: plane waves,
//! spin sums, charge conjugation, the Majorana condition and changes to
//! the Majorana and Dirac bases.

use num_complex::Complex64;

use crate::error::{CliffError, Result};
use crate::matrep::{self, c2, identity, max_abs, pauli, CMat, MatrixRep, MATRIX_TOL};
use crate::multivector::Multivector;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// On-shell four-momentum `p^μ` with `p^0 = sqrt(m² + |p|²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourMomentum {
    pub p: [f64; 4],
    pub mass: f64,
}

impl FourMomentum {
    pub fn on_shell(mass: f64, pvec: [f64; 3]) -> Result<Self> {
        if !(mass >= 0.0) || !mass.is_finite() || pvec.iter().any(|x| !x.is_finite()) {
            return Err(CliffError::Precondition(format!(
                "need finite m >= 0 and momentum, got m = {mass}, p = {pvec:?}"
            )));
        }
        let p2: f64 = pvec.iter().map(|x| x * x).sum();
        let p0 = (mass * mass + p2).sqrt();
        Ok(Self {
            p: [p0, pvec[0], pvec[1], pvec[2]],
            mass,
        })
    }

    pub fn spatial(&self) -> [f64; 3] {
        [self.p[1], self.p[2], self.p[3]]
    }

    /// `p² = |p|² - p0²`.
    pub fn square(&self) -> f64 {
        self.p[1] * self.p[1] + self.p[2] * self.p[2] + self.p[3] * self.p[3] - self.p[0] * self.p[0]
    }
}

/// Four components ordered `(ψ_L, ψ_R)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracSpinor(pub [Complex64; 4]);

impl DiracSpinor {
    pub fn from_blocks(left: [Complex64; 2], right: [Complex64; 2]) -> Self {
        Self([left[0], left[1], right[0], right[1]])
    }

    pub fn left(&self) -> [Complex64; 2] {
        [self.0[0], self.0[1]]
    }

    pub fn right(&self) -> [Complex64; 2] {
        [self.0[2], self.0[3]]
    }

    pub fn column(&self) -> CMat {
        CMat::from_column_slice(4, 1, &self.0)
    }

    pub fn from_column(col: &CMat) -> Self {
        Self([col[0], col[1], col[2], col[3]])
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self(self.0.map(|z| z * s))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Chiral-basis rep: `γ^0 = c ⊗ 1`, `γ^j = σ1 ⊗ σ_j`, `γ5 = σ3 ⊗ 1`.
pub fn chiral_rep() -> MatrixRep {
    matrep::gamma_matrices(4, true).expect("D = 4 is in range")
}

pub fn gamma5() -> CMat {
    pauli(3).kronecker(&pauli(0))
}

/// `β = iγ^0`.
pub fn beta() -> CMat {
    chiral_rep().beta.expect("Lorentzian rep has beta")
}

/// `pγ = p_μ γ^μ = -p^0 γ^0 + p·γ`.
pub fn slash(p: &[f64; 4], gammas: &[CMat]) -> CMat {
    let mut s = &gammas[0] * re(-p[0]);
    for j in 1..4 {
        s += &gammas[j] * re(p[j]);
    }
    s
}

/// `a·1 + b·σ`.
fn pauli_combination(a: f64, b: [f64; 3]) -> CMat {
    let mut m = identity(2) * re(a);
    for (k, bk) in b.iter().enumerate() {
        m += pauli(k + 1) * re(*bk);
    }
    m
}

/// Hermitean square root of the positive semidefinite `a + b·σ`,
/// `a ≥ |b|`, in closed form.
pub fn sqrt_pauli(a: f64, b: [f64; 3]) -> CMat {
    let len = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    sqrt_pauli_with_det(a, b, (a - len) * (a + len))
}

/// As [`sqrt_pauli`] with the determinant `a² - |b|²` supplied, which
/// avoids the cancellation in `a - |b|` (on shell it is `m²`).
pub fn sqrt_pauli_with_det(a: f64, b: [f64; 3], det: f64) -> CMat {
    let len = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    if len == 0.0 {
        return identity(2) * re(a.max(0.0).sqrt());
    }
    let plus = (a + len).max(0.0).sqrt();
    let minus = if plus > 0.0 { det.max(0.0).sqrt() / plus } else { 0.0 };
    let alpha = (plus + minus) / 2.0;
    let beta = (plus - minus) / (2.0 * len);
    pauli_combination(alpha, b.map(|x| x * beta))
}

/// `p̃ = p0 - p·σ`.
pub fn p_tilde(p: &FourMomentum) -> CMat {
    pauli_combination(p.p[0], p.spatial().map(|x| -x))
}

/// `p̰ = p0 + p·σ`.
pub fn p_under(p: &FourMomentum) -> CMat {
    pauli_combination(p.p[0], p.spatial())
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlaneWaves {
    pub momentum: FourMomentum,
    pub u: [DiracSpinor; 2],
    pub v: [DiracSpinor; 2],
}

fn block_spinor(left: &CMat, right: &CMat) -> DiracSpinor {
    DiracSpinor::from_blocks([left[0], left[1]], [right[0], right[1]])
}

/// `u_L = √p̃ χ, u_R = -i √p̰ χ` and `v_L = √p̃ χ, v_R = i √p̰ χ` for the
/// `σ3` eigenvectors `χ`; `ũu = 2m`, `ṽv = -2m`.
pub fn plane_wave_spinors(mass: f64, pvec: [f64; 3]) -> Result<PlaneWaves> {
    if !(mass > 0.0) {
        return Err(CliffError::Precondition(format!(
            "plane-wave spinors need m > 0, got {mass}"
        )));
    }
    let p = FourMomentum::on_shell(mass, pvec)?;
    let det = mass * mass;
    let sl = sqrt_pauli_with_det(p.p[0], p.spatial().map(|x| -x), det);
    let sr = sqrt_pauli_with_det(p.p[0], p.spatial(), det);
    let chi = |k: usize| {
        let mut c = CMat::zeros(2, 1);
        c[k] = re(1.0);
        c
    };
    let u = [0, 1].map(|k| block_spinor(&(&sl * chi(k)), &(&sr * chi(k) * -I)));
    let v = [0, 1].map(|k| block_spinor(&(&sl * chi(k)), &(&sr * chi(k) * I)));
    Ok(PlaneWaves { momentum: p, u, v })
}

/// `ψ̃ = ψ† β` as a row.
pub fn dirac_conjugate(psi: &DiracSpinor) -> CMat {
    psi.column().adjoint() * beta()
}

/// `ψ̃ φ`.
pub fn dirac_product(psi: &DiracSpinor, phi: &DiracSpinor) -> Complex64 {
    (dirac_conjugate(psi) * phi.column())[0]
}

/// `Σ ψ ⊗ ψ̃`.
pub fn spin_sum(spinors: &[DiracSpinor]) -> CMat {
    let b = beta();
    spinors.iter().fold(CMat::zeros(4, 4), |acc, s| {
        let col = s.column();
        acc + &col * (col.adjoint() * &b)
    })
}

/// `m - iγp`.
pub fn expected_u_sum(p: &FourMomentum) -> CMat {
    identity(4) * re(p.mass) - slash(&p.p, &chiral_rep().gammas) * I
}

/// `-m - iγp`.
pub fn expected_v_sum(p: &FourMomentum) -> CMat {
    identity(4) * re(-p.mass) - slash(&p.p, &chiral_rep().gammas) * I
}

/// `Σ χ_L ⊗ χ_L†` over the left (or right) blocks.
pub fn chiral_sum(spinors: &[DiracSpinor], left: bool) -> CMat {
    spinors.iter().fold(CMat::zeros(2, 2), |acc, s| {
        let block = if left { s.left() } else { s.right() };
        let col = CMat::from_column_slice(2, 1, &block);
        acc + &col * col.adjoint()
    })
}

/// `Σ u_L ⊗ u_R†`, equal to `im·1` with the phases used here.
pub fn mixed_chiral_sum(spinors: &[DiracSpinor]) -> CMat {
    spinors.iter().fold(CMat::zeros(2, 2), |acc, s| {
        let l = CMat::from_column_slice(2, 1, &s.left());
        let r = CMat::from_column_slice(2, 1, &s.right());
        acc + &l * r.adjoint()
    })
}

/// `max |(m + ipγ)u|` and `max |(m - ipγ)v|`.
pub fn dirac_residuals(waves: &PlaneWaves) -> (f64, f64) {
    let sl = slash(&waves.momentum.p, &chiral_rep().gammas);
    let m = identity(4) * re(waves.momentum.mass);
    let op_u = &m + &sl * I;
    let op_v = &m - &sl * I;
    let worst = |op: &CMat, s: &[DiracSpinor; 2]| {
        s.iter()
            .map(|x| max_abs(&(op * x.column())))
            .fold(0.0, f64::max)
    };
    (worst(&op_u, &waves.u), worst(&op_v, &waves.v))
}

/// `B = γ^0 C = [[0, c], [-c, 0]]` in the chiral basis.
pub fn b_matrix() -> CMat {
    chiral_rep().b.expect("D = 4 has B")
}

/// `ψ^C = B ψ̄`, blockwise `ψ_L^C = c ψ̄_R`, `ψ_R^C = -c ψ̄_L`.
pub fn charge_conjugate(psi: &DiracSpinor) -> DiracSpinor {
    let conj = CMat::from_column_slice(4, 1, &psi.0.map(|z| z.conj()));
    DiracSpinor::from_column(&(b_matrix() * conj))
}

/// `ψ^C = ψ`, i.e. `ψ_R = -c ψ̄_L`.
pub fn is_majorana(psi: &DiracSpinor, tol: f64) -> bool {
    charge_conjugate(psi).max_abs_diff(psi) <= tol
}

/// The Majorana spinor with the given left block.
pub fn majorana_from_left(left: [Complex64; 2]) -> DiracSpinor {
    let l = CMat::from_column_slice(2, 1, &left.map(|z| z.conj()));
    let r = -(c2() * l);
    DiracSpinor::from_blocks(left, [r[0], r[1]])
}

fn gammas_match(rep: &MatrixRep, expected: &MatrixRep) -> bool {
    rep.dim == 4
        && rep.lorentzian
        && rep.gammas.len() == 4
        && rep
            .gammas
            .iter()
            .zip(&expected.gammas)
            .all(|(a, b)| matrep::max_abs_diff(a, b) <= MATRIX_TOL)
}

fn require_chiral(rep: &MatrixRep) -> Result<()> {
    if gammas_match(rep, &chiral_rep()) {
        Ok(())
    } else {
        Err(CliffError::Precondition(
            "representation is not the chiral-basis Cl(3,1) rep".into(),
        ))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MajoranaBasis {
    /// `S = (1 - γ2γ5)/√2`.
    pub s: CMat,
    /// `γ^μ_M = S γ^μ S†`.
    pub gammas: Vec<CMat>,
    /// `C_M = γ_0^M = -γ^0_M`.
    pub c: CMat,
    /// `B_M = γ^0_M C_M`.
    pub b: CMat,
}

impl MajoranaBasis {
    pub fn max_imag(&self) -> f64 {
        self.gammas.iter().map(matrep::max_imag).fold(0.0, f64::max)
    }
}

pub fn majorana_basis(rep: &MatrixRep) -> Result<MajoranaBasis> {
    require_chiral(rep)?;
    let g2g5 = &rep.gammas[2] * gamma5();
    let s = (identity(4) - g2g5) * re(std::f64::consts::FRAC_1_SQRT_2);
    let gammas: Vec<CMat> = rep.gammas.iter().map(|g| &s * g * s.adjoint()).collect();
    let c = -gammas[0].clone();
    let b = &gammas[0] * &c;
    Ok(MajoranaBasis { s, gammas, c, b })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiracBasis {
    /// Unitary `T` with `γ_Dir = T γ T†`.
    pub t: CMat,
    pub gammas: Vec<CMat>,
    /// `T γ5 T†`.
    pub gamma5: CMat,
    /// `C_Dir = iγ^2_Dir`.
    pub c: CMat,
    /// Phase `λ` with `T̄ C T† = λ C_Dir`.
    pub c_phase: Complex64,
}

/// Target Dirac-basis generators: `iγ^0 = σ3 ⊗ 1`, spatial `γ^j` kept.
pub fn dirac_basis_gammas() -> Vec<CMat> {
    let mut g = chiral_rep().gammas;
    g[0] = gamma5() * -I;
    g
}

/// Products `γ_A` over all 16 subsets of the four generators.
fn clifford_basis(gammas: &[CMat]) -> Vec<CMat> {
    (0u32..16)
        .map(|mask| {
            (0..4)
                .filter(|k| mask >> k & 1 == 1)
                .fold(identity(4), |acc, k| acc * &gammas[k])
        })
        .collect()
}

/// Unitary intertwiner `T γ_a = γ'_a T` of two unitary irreducible reps,
/// from `Σ_A γ'_A X γ_A^{-1}` over a seed `X` that gives a nonzero sum.
pub fn intertwiner(from: &[CMat], to: &[CMat]) -> Result<CMat> {
    let a = clifford_basis(from);
    let b = clifford_basis(to);
    let n = from[0].nrows();
    for seed in 0..n * n {
        let mut x = CMat::zeros(n, n);
        x[seed] = re(1.0);
        let sum = a.iter().zip(&b).fold(CMat::zeros(n, n), |acc, (ga, gb)| {
            let inv = ga.clone().try_inverse().expect("gamma products are invertible");
            acc + gb * &x * inv
        });
        if max_abs(&sum) > 1e-8 {
            // T T† is a positive multiple of 1 for unitary reps.
            let scale = (&sum * sum.adjoint())[(0, 0)].re.sqrt();
            return Ok(sum * re(1.0 / scale));
        }
    }
    Err(CliffError::Precondition("representations are not equivalent".into()))
}

pub fn dirac_basis(rep: &MatrixRep) -> Result<DiracBasis> {
    require_chiral(rep)?;
    let target = dirac_basis_gammas();
    let t = intertwiner(&rep.gammas, &target)?;
    let gammas: Vec<CMat> = rep.gammas.iter().map(|g| &t * g * t.adjoint()).collect();
    let c = &gammas[2] * I;
    let chiral_c = rep.c.clone().expect("D = 4 has C");
    let moved = t.conjugate() * chiral_c * t.adjoint();
    let (r, k) = c.iter().enumerate().map(|(k, z)| (z.norm(), k)).fold(
        (0.0, 0),
        |best, cur| if cur.0 > best.0 { cur } else { best },
    );
    let c_phase = if r > 0.0 { moved[k] / c[k] } else { ZERO };
    Ok(DiracBasis {
        gamma5: &t * gamma5() * t.adjoint(),
        t,
        gammas,
        c,
        c_phase,
    })
}

/// `√2 a = c + d`, `√2 b = c - d`.
pub fn majorana_split(
    a: &[Complex64],
    b: &[Complex64],
) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    if a.len() != b.len() {
        return Err(CliffError::ShapeMismatch(format!(
            "mode arrays of lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    let h = std::f64::consts::FRAC_1_SQRT_2;
    Ok(a.iter()
        .zip(b)
        .map(|(x, y)| ((x + y) * h, (x - y) * h))
        .unzip())
}

/// Inverse of [`majorana_split`].
pub fn majorana_merge(
    c: &[Complex64],
    d: &[Complex64],
) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    majorana_split(c, d)
}

/// Image of a `Cl(3,1)` element in the chiral rep, with `e_j ↦ γ^j` and
/// `e4 ↦ γ_0 = -γ^0`.
pub fn spinor_matrix(x: &Multivector<f64>) -> Result<CMat> {
    let sig = crate::lipschitz::minkowski_signature();
    if x.signature() != sig {
        return Err(CliffError::SignatureMismatch {
            left: x.signature(),
            right: sig,
        });
    }
    let g = chiral_rep().gammas;
    let images = [g[1].clone(), g[2].clone(), g[3].clone(), -g[0].clone()];
    Ok(x.terms().fold(CMat::zeros(4, 4), |acc, (blade, c)| {
        let m = blade
            .indices()
            .fold(identity(4), |m, i| m * &images[i as usize - 1]);
        acc + m * re(*c)
    }))
}

/// Row-major `[re, im]` pairs.
pub fn matrix_entries(m: &CMat) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows())
        .map(|r| (0..m.ncols()).map(|c| [m[(r, c)].re, m[(r, c)].im]).collect())
        .collect()
}
