//! Mod-8 classification of real Clifford algebras, even subalgebras and
//! the periodicity relations.

use std::fmt;

use crate::algebra::{center_basis, omega_square, omega_square_formula};
use crate::error::{CliffError, Result};
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::signature::{Signature, DEFAULT_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseRing {
    Real,
    Complex,
    Quaternion,
}

impl BaseRing {
    /// Real dimension of the ring.
    pub fn real_dim(self) -> u64 {
        match self {
            BaseRing::Real => 1,
            BaseRing::Complex => 2,
            BaseRing::Quaternion => 4,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BaseRing::Real => "R",
            BaseRing::Complex => "C",
            BaseRing::Quaternion => "H",
        }
    }
}

/// `Cl(p, q)` as `K[size]` or `K[size] + K[size]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassificationRecord {
    pub base_ring: BaseRing,
    pub matrix_size: u64,
    pub summands: u32,
    pub omega_sq: i8,
    pub total_real_dim: u64,
}

impl ClassificationRecord {
    /// Real dimension of the matrix algebra(s) named by the record.
    pub fn matrix_real_dim(&self) -> u64 {
        self.summands as u64 * self.base_ring.real_dim() * self.matrix_size * self.matrix_size
    }
}

impl fmt::Display for ClassificationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = format!("{}[{}]", self.base_ring.symbol(), self.matrix_size);
        if self.summands == 2 {
            write!(f, "{one} + {one}")
        } else {
            write!(f, "{one}")
        }
    }
}

/// Table lookup keyed on `(p - q) mod 8` and the parity of `n`.
pub fn classify(p: u32, q: u32) -> ClassificationRecord {
    let n = p + q;
    let m = n / 2;
    let residue = (p as i64 - q as i64).rem_euclid(8);
    let full = 1u64 << m;
    let half = if m == 0 { 1 } else { 1u64 << (m - 1) };
    let (base_ring, matrix_size, summands) = match residue {
        0 | 2 => (BaseRing::Real, full, 1),
        1 => (BaseRing::Real, full, 2),
        3 | 7 => (BaseRing::Complex, full, 1),
        4 | 6 => (BaseRing::Quaternion, half, 1),
        5 => (BaseRing::Quaternion, half, 2),
        _ => unreachable!(),
    };
    ClassificationRecord {
        base_ring,
        matrix_size,
        summands,
        omega_sq: omega_square_formula(p, q),
        total_real_dim: 1u64 << n,
    }
}

/// Outcome of cross-checking the table entry against the blade engine.
#[derive(Debug, Clone, PartialEq)]
pub struct ConsistencyReport {
    pub signature: Signature,
    pub record: ClassificationRecord,
    pub blade_omega_sq: i8,
    pub center_dim: usize,
    pub mismatches: Vec<String>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compare the table entry with `omega^2` from the product engine and with
/// the brute-force center.
pub fn check_consistency(sig: Signature) -> ConsistencyReport {
    let record = classify(sig.p(), sig.q());
    let blade_omega_sq = omega_square(sig);
    let center_dim = center_basis::<crate::scalar::Rational>(sig).len();
    let odd = sig.n() % 2 == 1;
    let mut mismatches = Vec::new();
    if record.omega_sq != blade_omega_sq {
        mismatches.push(format!(
            "omega^2: table {} vs blades {}",
            record.omega_sq, blade_omega_sq
        ));
    }
    if record.total_real_dim != sig.blade_count() as u64
        || record.matrix_real_dim() != record.total_real_dim
    {
        mismatches.push(format!(
            "dimension: {} has real dimension {}, expected {}",
            record,
            record.matrix_real_dim(),
            sig.blade_count()
        ));
    }
    let expected_center = if odd { 2 } else { 1 };
    if center_dim != expected_center {
        mismatches.push(format!(
            "center dimension {center_dim}, expected {expected_center}"
        ));
    }
    let split = center_dim == 2 && blade_omega_sq == 1 && odd;
    if (record.summands == 2) != split {
        mismatches.push(format!(
            "summands {} but center/omega predict a {} algebra",
            record.summands,
            if split { "split" } else { "simple" }
        ));
    }
    let complex = center_dim == 2 && blade_omega_sq == -1;
    if (record.base_ring == BaseRing::Complex) != complex {
        mismatches.push(format!(
            "ring {} but center/omega {} a complex structure",
            record.base_ring.symbol(),
            if complex { "give" } else { "do not give" }
        ));
    }
    ConsistencyReport {
        signature: sig,
        record,
        blade_omega_sq,
        center_dim,
        mismatches,
    }
}

/// Target signature of the even subalgebra together with generators
/// realizing it inside `Cl^0(p, q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EvenSubalgebra<S: Scalar> {
    pub target: Signature,
    /// `e_n e_i` for `i = 1..n-1`, ordered to match the target signature.
    pub witness: Vec<Multivector<S>>,
}

/// `Cl^0(p, q) = Cl(p, q-1)` for `q > 0`, else `Cl(0, p-1)`.
pub fn even_subalgebra<S: Scalar>(sig: Signature) -> Result<EvenSubalgebra<S>> {
    let n = sig.n();
    if n == 0 || sig.is_degenerate() {
        return Err(CliffError::NoEvenSubalgebra);
    }
    let target = if sig.q() > 0 {
        Signature::with_cap(sig.p(), sig.q() - 1, n)?
    } else {
        Signature::with_cap(sig.q(), sig.p() - 1, n)?
    };
    let last = Multivector::<S>::basis_vector(sig, n)?;
    let witness = (1..n)
        .map(|i| &last * &Multivector::basis_vector(sig, i).unwrap())
        .collect();
    Ok(EvenSubalgebra { target, witness })
}

/// Check that the witness generators satisfy the Clifford relations of the
/// target signature: `f_i f_j + f_j f_i = 2 eta_ij`.
pub fn verify_witness<S: Scalar>(sub: &EvenSubalgebra<S>, tol: f64) -> Vec<String> {
    let metric = sub.target.metric();
    let mut failures = Vec::new();
    if sub.witness.len() != metric.len() {
        failures.push(format!(
            "{} witness generators for {} target generators",
            sub.witness.len(),
            metric.len()
        ));
        return failures;
    }
    for (i, fi) in sub.witness.iter().enumerate() {
        if fi.parity() != crate::multivector::Parity::Even {
            failures.push(format!("witness {} is not even", i + 1));
        }
        for (j, fj) in sub.witness.iter().enumerate() {
            let ac = fi.anticommutator(fj).expect("same signature");
            let expected_value = if i == j { 2 * metric[i] as i64 } else { 0 };
            let expected = Multivector::scalar(fi.signature(), S::from_i64(expected_value));
            if !ac.near(&expected, tol) {
                failures.push(format!(
                    "{{f{}, f{}}} = {}, expected {}",
                    i + 1,
                    j + 1,
                    ac,
                    expected_value
                ));
            }
        }
    }
    failures
}

#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicityCheck {
    /// Relation being checked, e.g. `Cl(p+1,q+1) = Cl(p,q)[2]`.
    pub relation: String,
    pub lhs: (u32, u32),
    pub rhs: (u32, u32),
    /// `None` when skipped because a signature exceeds the cap.
    pub passed: Option<bool>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicityReport {
    pub base: (u32, u32),
    pub checks: Vec<PeriodicityCheck>,
}

impl PeriodicityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed != Some(false))
    }

    pub fn skipped(&self) -> usize {
        self.checks.iter().filter(|c| c.passed.is_none()).count()
    }
}

fn same_type_scaled(
    a: &ClassificationRecord,
    b: &ClassificationRecord,
    factor: u64,
) -> bool {
    a.base_ring == b.base_ring
        && a.summands == b.summands
        && a.matrix_size == b.matrix_size * factor
}

/// Check `Cl(p+1,q+1) = Cl(p,q)[2]`, `Cl(p+4,q) = Cl(p,q+4)` and
/// `Cl(p+8,q) = Cl(p,q)[16]` at the given base signature.
///
/// Each side is also cross-validated against the blade engine; sides above
/// `cap` generators are skipped.
pub fn verify_periodicity(p: u32, q: u32, cap: u32) -> PeriodicityReport {
    let within = |a: u32, b: u32| a + b <= cap.min(crate::signature::MAX_GENERATORS);
    let consistent = |a: u32, b: u32| {
        Signature::with_cap(a, b, cap)
            .map(|s| check_consistency(s).is_consistent())
            .unwrap_or(false)
    };
    let base = classify(p, q);
    let mut checks = Vec::new();
    let cases: [(&str, (u32, u32), (u32, u32), u64); 3] = [
        ("Cl(p+1,q+1) = Cl(p,q)[2]", (p + 1, q + 1), (p, q), 2),
        ("Cl(p+4,q) = Cl(p,q+4)", (p + 4, q), (p, q + 4), 1),
        ("Cl(p+8,q) = Cl(p,q)[16]", (p + 8, q), (p, q), 16),
    ];
    for (relation, lhs, rhs, factor) in cases {
        if !within(lhs.0, lhs.1) || !within(rhs.0, rhs.1) {
            checks.push(PeriodicityCheck {
                relation: relation.to_string(),
                lhs,
                rhs,
                passed: None,
                detail: format!("skipped: exceeds cap of {cap} generators"),
            });
            continue;
        }
        let left = classify(lhs.0, lhs.1);
        let right = if rhs == (p, q) { base } else { classify(rhs.0, rhs.1) };
        let table_ok = same_type_scaled(&left, &right, factor);
        let blades_ok = consistent(lhs.0, lhs.1) && consistent(rhs.0, rhs.1);
        checks.push(PeriodicityCheck {
            relation: relation.to_string(),
            lhs,
            rhs,
            passed: Some(table_ok && blades_ok),
            detail: format!(
                "Cl({},{}) = {}, Cl({},{}) = {}",
                lhs.0, lhs.1, left, rhs.0, rhs.1, right
            ),
        });
    }
    PeriodicityReport {
        base: (p, q),
        checks,
    }
}

/// [`verify_periodicity`] under the default cap.
pub fn verify_periodicity_default(p: u32, q: u32) -> PeriodicityReport {
    verify_periodicity(p, q, DEFAULT_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn table_rows() {
        let r = classify(3, 1);
        assert_eq!((r.base_ring, r.matrix_size, r.summands, r.omega_sq), (BaseRing::Real, 4, 1, -1));
        assert_eq!(classify(4, 1).to_string(), "C[4]");
        assert_eq!(classify(0, 3).to_string(), "H[1] + H[1]");
        assert_eq!(classify(0, 2).to_string(), "H[1]");
        assert_eq!(classify(0, 0).to_string(), "R[1]");
        assert_eq!(classify(0, 1).to_string(), "C[1]");
        assert_eq!(classify(1, 0).to_string(), "R[1] + R[1]");
    }

    #[test]
    fn even_subalgebra_targets() {
        let s = |p, q| Signature::new(p, q).unwrap();
        let t = |p, q| even_subalgebra::<Rational>(s(p, q)).unwrap().target;
        assert_eq!(t(3, 1), s(3, 0));
        assert_eq!(t(4, 1), s(4, 0));
        assert_eq!(t(4, 0), s(0, 3));
        assert_eq!(t(1, 0), s(0, 0));
        assert!(even_subalgebra::<Rational>(s(0, 0)).is_err());
        let sub = even_subalgebra::<Rational>(s(3, 1)).unwrap();
        assert!(verify_witness(&sub, 0.0).is_empty());
    }

    #[test]
    fn periodicity_examples() {
        let r = verify_periodicity_default(0, 0);
        assert!(r.all_passed());
        assert_eq!(classify(1, 1).to_string(), "R[2]");
        assert_eq!(classify(4, 2).to_string(), "R[8]");
        assert!(verify_periodicity_default(3, 1).all_passed());
        let r = verify_periodicity_default(0, 1);
        assert!(r.all_passed());
        assert_eq!(classify(0, 5), classify(4, 1));
        assert_eq!(classify(4, 1).to_string(), "C[4]");
    }

    #[test]
    fn periodicity_skips_above_cap() {
        let r = verify_periodicity(3, 2, 12);
        assert_eq!(r.skipped(), 1);
        assert!(r.all_passed());
    }
}
