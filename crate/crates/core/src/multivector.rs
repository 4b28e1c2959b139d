//! Sparse multivectors and the geometric product.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::blade::Blade;
use crate::error::{CliffError, Result};
use crate::linalg;
use crate::scalar::{Scalar, DEFAULT_TOL};
use crate::signature::Signature;

/// Z2 parity of a multivector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// The zero element, which is both even and odd.
    Zero,
    Even,
    Odd,
    Mixed,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Zero => "zero",
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::Mixed => "mixed",
        })
    }
}

/// Element of `Cl(p, q)` as a sparse map from basis blades to coefficients.
///
/// Zero coefficients are never stored, so structural equality is algebraic
/// equality on the exact backends.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector<S: Scalar> {
    sig: Signature,
    terms: BTreeMap<Blade, S>,
}

fn add_term<S: Scalar>(terms: &mut BTreeMap<Blade, S>, blade: Blade, coeff: S) {
    if coeff.is_zero() {
        return;
    }
    match terms.remove(&blade) {
        Some(existing) => {
            let sum = existing + coeff;
            if !sum.is_zero() {
                terms.insert(blade, sum);
            }
        }
        None => {
            terms.insert(blade, coeff);
        }
    }
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(sig: Signature) -> Self {
        Self {
            sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(sig: Signature, value: S) -> Self {
        Self::blade(sig, Blade::SCALAR, value)
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, S::one())
    }

    /// `coeff * blade`. The blade must fit the signature.
    pub fn blade(sig: Signature, blade: Blade, coeff: S) -> Self {
        assert!(
            (blade.mask() as u64) < (1u64 << sig.n()),
            "blade {blade} outside {sig}"
        );
        let mut terms = BTreeMap::new();
        add_term(&mut terms, blade, coeff);
        Self { sig, terms }
    }

    /// Generator `e_i`, 1-based.
    pub fn basis_vector(sig: Signature, index: u32) -> Result<Self> {
        if index == 0 || index > sig.n() {
            return Err(CliffError::GeneratorOutOfRange {
                index,
                n: sig.n(),
            });
        }
        Ok(Self::blade(sig, Blade::generator(index), S::one()))
    }

    /// All generators `e_1..e_n`.
    pub fn generators(sig: Signature) -> Vec<Self> {
        (1..=sig.n())
            .map(|i| Self::basis_vector(sig, i).unwrap())
            .collect()
    }

    /// `sum_i coeffs[i] e_{i+1}`.
    pub fn vector(sig: Signature, coeffs: &[S]) -> Result<Self> {
        if coeffs.len() != sig.n() as usize {
            return Err(CliffError::ShapeMismatch(format!(
                "{} vector components for {sig}",
                coeffs.len()
            )));
        }
        Ok(Self::from_terms(
            sig,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Blade::generator(i as u32 + 1), c.clone())),
        ))
    }

    /// Sum of `coeff * blade` pairs; repeated blades accumulate.
    pub fn from_terms(sig: Signature, terms: impl IntoIterator<Item = (Blade, S)>) -> Self {
        let mut mv = Self::zero(sig);
        for (b, c) in terms {
            add_term(&mut mv.terms, b, c);
        }
        mv
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &S)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, blade: Blade) -> S {
        self.terms.get(&blade).cloned().unwrap_or_else(S::zero)
    }

    /// Coefficient of the unit.
    pub fn scalar_part(&self) -> S {
        self.coeff(Blade::SCALAR)
    }

    /// `Some(c)` when the element is `c * 1`.
    pub fn as_scalar(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => self.terms.get(&Blade::SCALAR).cloned(),
            _ => None,
        }
    }

    /// Same as [`Self::as_scalar`], ignoring non-scalar coefficients below
    /// `tol` on numeric backends.
    pub fn as_scalar_within(&self, tol: f64) -> Option<S> {
        let rest_small = self
            .terms
            .iter()
            .all(|(b, c)| *b == Blade::SCALAR || c.near_zero(tol));
        rest_small.then(|| self.scalar_part())
    }

    /// Components along `e_1..e_n`.
    pub fn vector_coefficients(&self) -> Vec<S> {
        (1..=self.sig.n())
            .map(|i| self.coeff(Blade::generator(i)))
            .collect()
    }

    /// Grades with a nonzero coefficient, ascending.
    pub fn grades(&self) -> Vec<u32> {
        let mut g: Vec<u32> = self.terms.keys().map(|b| b.grade()).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    pub fn grade_part(&self, k: u32) -> Self {
        self.filter(|b| b.grade() == k)
    }

    pub fn even_part(&self) -> Self {
        self.filter(|b| b.grade() % 2 == 0)
    }

    pub fn odd_part(&self) -> Self {
        self.filter(|b| b.grade() % 2 == 1)
    }

    fn filter(&self, keep: impl Fn(Blade) -> bool) -> Self {
        Self {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(**b))
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    pub fn parity(&self) -> Parity {
        let even = self.terms.keys().any(|b| b.grade() % 2 == 0);
        let odd = self.terms.keys().any(|b| b.grade() % 2 == 1);
        match (even, odd) {
            (false, false) => Parity::Zero,
            (true, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (true, true) => Parity::Mixed,
        }
    }

    /// Same as [`Self::parity`] after discarding coefficients below `tol`.
    pub fn parity_within(&self, tol: f64) -> Parity {
        self.filter_small(tol).parity()
    }

    /// Drop coefficients with modulus `<= tol`. Identity on exact backends.
    pub fn filter_small(&self, tol: f64) -> Self {
        Self {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| !c.near_zero(tol))
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_terms(
            self.sig,
            self.terms.iter().map(|(b, c)| (*b, c.clone() * s.clone())),
        )
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Multivector<T> {
        Multivector::from_terms(self.sig, self.terms.iter().map(|(b, c)| (*b, f(c))))
    }

    fn map_signs(&self, sign: impl Fn(Blade) -> i8, conj: bool) -> Self {
        Self {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| {
                    let c = if conj { c.conj() } else { c.clone() };
                    (*b, if sign(*b) < 0 { -c } else { c })
                })
                .collect(),
        }
    }

    /// Grade involution `alpha`: grade-`k` terms pick up `(-1)^k`.
    pub fn grade_involution(&self) -> Self {
        self.map_signs(Blade::involution_sign, false)
    }

    /// Conjugation `x -> x†`: the antiautomorphism with `v† = -v`, antilinear
    /// on complex coefficients.
    pub fn conjugation(&self) -> Self {
        self.map_signs(Blade::conjugation_sign, true)
    }

    /// Reversion (antiautomorphism fixing vectors), linear.
    pub fn reversion(&self) -> Self {
        self.map_signs(Blade::reversion_sign, false)
    }

    /// `N(x) = x x†`.
    pub fn norm(&self) -> Self {
        self * &self.conjugation()
    }

    fn check_sig(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(CliffError::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            });
        }
        Ok(())
    }

    /// Geometric product.
    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (sign, blade) = self.sig.blade_product(*a, *b);
                if sign == 0 {
                    continue;
                }
                let c = ca.clone() * cb.clone();
                add_term(&mut terms, blade, if sign < 0 { -c } else { c });
            }
        }
        Ok(Self {
            sig: self.sig,
            terms,
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut terms = self.terms.clone();
        for (b, c) in &other.terms {
            add_term(&mut terms, *b, c.clone());
        }
        Ok(Self {
            sig: self.sig,
            terms,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// `xy - yx`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.geometric_product(other)?
            .try_sub(&other.geometric_product(self)?)
    }

    /// `xy + yx`.
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        self.geometric_product(other)?
            .try_add(&other.geometric_product(self)?)
    }

    /// Matrix of left multiplication `y -> x y` in the blade basis
    /// (`m[row][col]`, column `B` holds `x e_B`).
    pub fn left_multiplication_matrix(&self) -> Vec<Vec<S>> {
        let dim = self.sig.blade_count();
        let mut m = vec![vec![S::zero(); dim]; dim];
        for col in 0..dim {
            let basis = Blade::from_mask(col as u32);
            for (a, c) in &self.terms {
                let (sign, blade) = self.sig.blade_product(*a, basis);
                if sign == 0 {
                    continue;
                }
                let v = if sign < 0 { -c.clone() } else { c.clone() };
                let row = blade.mask() as usize;
                m[row][col] = m[row][col].clone() + v;
            }
        }
        m
    }

    /// Two-sided inverse, if any.
    ///
    /// Uses `x† / N(x)` when the norm is a nonzero scalar and falls back to
    /// solving `x y = 1` in the blade basis otherwise.
    pub fn inverse(&self) -> Option<Self> {
        self.inverse_within(DEFAULT_TOL)
    }

    pub fn inverse_within(&self, tol: f64) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let conj = self.conjugation();
        let norm = self * &conj;
        if let Some(n) = norm.as_scalar() {
            if !n.near_zero(tol) {
                return n.inverse().map(|inv| conj.scale(&inv));
            }
        }
        let m = self.left_multiplication_matrix();
        let mut rhs = vec![S::zero(); self.sig.blade_count()];
        rhs[0] = S::one();
        let y = linalg::solve(&m, &rhs, tol)?;
        Some(Self::from_terms(
            self.sig,
            y.into_iter()
                .enumerate()
                .map(|(i, c)| (Blade::from_mask(i as u32), c)),
        ))
    }

    /// Largest coefficient modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut keys: Vec<Blade> = self.terms.keys().copied().collect();
        keys.extend(other.terms.keys().copied());
        keys.into_iter()
            .map(|b| (self.coeff(b) - other.coeff(b)).magnitude())
            .fold(0.0, f64::max)
    }

    /// Exact equality on exact backends, coefficientwise `tol` otherwise.
    pub fn near(&self, other: &Self, tol: f64) -> bool {
        if self.sig != other.sig {
            return false;
        }
        if S::EXACT {
            self == other
        } else {
            self.max_abs_diff(other) <= tol
        }
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(Scalar::magnitude).fold(0.0, f64::max)
    }
}

impl<S: Scalar> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_multivector(self))
    }
}

// Operator forms panic on signature mismatch; use the `try_*` and
// `geometric_product` methods to get a `Result` instead.

impl<S: Scalar> Mul for &Multivector<S> {
    type Output = Multivector<S>;
    fn mul(self, rhs: Self) -> Multivector<S> {
        self.geometric_product(rhs).expect("signature mismatch in product")
    }
}

impl<S: Scalar> Mul for Multivector<S> {
    type Output = Multivector<S>;
    fn mul(self, rhs: Self) -> Multivector<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Add for &Multivector<S> {
    type Output = Multivector<S>;
    fn add(self, rhs: Self) -> Multivector<S> {
        self.try_add(rhs).expect("signature mismatch in sum")
    }
}

impl<S: Scalar> Add for Multivector<S> {
    type Output = Multivector<S>;
    fn add(self, rhs: Self) -> Multivector<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for &Multivector<S> {
    type Output = Multivector<S>;
    fn sub(self, rhs: Self) -> Multivector<S> {
        self.try_sub(rhs).expect("signature mismatch in difference")
    }
}

impl<S: Scalar> Sub for Multivector<S> {
    type Output = Multivector<S>;
    fn sub(self, rhs: Self) -> Multivector<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        Multivector {
            sig: self.sig,
            terms: self.terms.iter().map(|(b, c)| (*b, -c.clone())).collect(),
        }
    }
}

impl<S: Scalar> Neg for Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    type Mv = Multivector<Rational>;

    fn e(sig: Signature, i: u32) -> Mv {
        Mv::basis_vector(sig, i).unwrap()
    }

    #[test]
    fn generator_square_in_euclidean_plane() {
        let sig = Signature::new(2, 0).unwrap();
        assert_eq!(&e(sig, 1) * &e(sig, 1), Mv::one(sig));
    }

    #[test]
    fn quaternion_units() {
        let sig = Signature::new(0, 2).unwrap();
        let i = e(sig, 1);
        let j = e(sig, 2);
        let k = &i * &j;
        let minus_one = -Mv::one(sig);
        assert_eq!(&i * &i, minus_one);
        assert_eq!(&j * &j, minus_one);
        assert_eq!(&k * &k, minus_one);
        assert_eq!(&(&i * &j) * &k, minus_one);
    }

    #[test]
    fn unit_is_neutral() {
        let sig = Signature::new(2, 1).unwrap();
        let x = Mv::from_terms(
            sig,
            [(Blade::SCALAR, rat(2, 1)), (Blade::from_mask(0b101), rat(-1, 3))],
        );
        assert_eq!(&Mv::one(sig) * &x, x);
        assert_eq!(&x * &Mv::one(sig), x);
    }

    #[test]
    fn mismatched_signatures_are_rejected() {
        let a = Mv::one(Signature::new(2, 0).unwrap());
        let b = Mv::one(Signature::new(1, 1).unwrap());
        assert!(matches!(
            a.geometric_product(&b),
            Err(CliffError::SignatureMismatch { .. })
        ));
    }

    #[test]
    fn involutions_on_low_grades() {
        let sig = Signature::new(2, 0).unwrap();
        let e1 = e(sig, 1);
        let e12 = &e1 * &e(sig, 2);
        assert_eq!(e1.grade_involution(), -&e1);
        assert_eq!(e12.grade_involution(), e12);
        let x = &(&Mv::one(sig) + &e1) + &e12;
        let expected = &(&Mv::one(sig) - &e1) + &e12;
        assert_eq!(x.grade_involution(), expected);

        assert_eq!(e1.conjugation(), -&e1);
        assert_eq!(e12.conjugation(), -&e12);
        assert_eq!(
            e12.conjugation(),
            &e(sig, 2).conjugation() * &e1.conjugation()
        );
        assert_eq!(Mv::one(sig).conjugation(), Mv::one(sig));
    }

    #[test]
    fn quaternion_norm() {
        let sig = Signature::new(0, 2).unwrap();
        let (s, x, y, z) = (rat(1, 2), rat(-3, 1), rat(2, 7), rat(5, 1));
        let q = Mv::from_terms(
            sig,
            [
                (Blade::SCALAR, s.clone()),
                (Blade::from_mask(1), x.clone()),
                (Blade::from_mask(2), y.clone()),
                (Blade::from_mask(3), z.clone()),
            ],
        );
        let expected = s.clone() * s + x.clone() * x + y.clone() * y + z.clone() * z;
        assert_eq!(q.norm(), Mv::scalar(sig, expected));
        assert_eq!(Mv::one(sig).norm(), Mv::one(sig));
    }

    #[test]
    fn norm_of_mixed_blade_in_minkowski() {
        let sig = Signature::new(3, 1).unwrap();
        let x = &e(sig, 1) * &e(sig, 4);
        assert_eq!(x.norm(), Mv::scalar(sig, rat(-1, 1)));
    }

    #[test]
    fn inverse_of_general_element() {
        let sig = Signature::new(2, 0).unwrap();
        let x = &Mv::scalar(sig, rat(2, 1)) + &e(sig, 1);
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, Mv::one(sig));
        assert_eq!(&inv * &x, Mv::one(sig));
        // 1 + e1 squares to 2(1 + e1): a zero divisor.
        let zd = &Mv::one(sig) + &e(sig, 1);
        assert!(zd.inverse().is_none());
    }

    #[test]
    fn parity_classes() {
        let sig = Signature::new(2, 0).unwrap();
        assert_eq!(Mv::zero(sig).parity(), Parity::Zero);
        assert_eq!(Mv::one(sig).parity(), Parity::Even);
        assert_eq!(e(sig, 1).parity(), Parity::Odd);
        assert_eq!((&Mv::one(sig) + &e(sig, 1)).parity(), Parity::Mixed);
    }

    #[test]
    fn zero_coefficients_are_pruned() {
        let sig = Signature::new(1, 0).unwrap();
        let x = &e(sig, 1) - &e(sig, 1);
        assert!(x.is_zero());
        assert_eq!(x.len(), 0);
    }
}
