//! Structure of `Cl(p, q)`: the Coxeter element and the center.

use crate::blade::Blade;
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::signature::Signature;

/// Coxeter (volume) element `omega = e_1 e_2 ... e_n`; `1` for `n = 0`.
pub fn coxeter_element<S: Scalar>(sig: Signature) -> Multivector<S> {
    Multivector::blade(sig, sig.pseudoscalar_blade(), S::one())
}

/// `omega^2` computed by the blade product engine.
pub fn omega_square(sig: Signature) -> i8 {
    let w = sig.pseudoscalar_blade();
    sig.blade_product(w, w).0
}

/// Closed form `(-1)^{(p-q)(p-q-1)/2}`.
pub fn omega_square_formula(p: u32, q: u32) -> i8 {
    let d = p as i64 - q as i64;
    if (d * (d - 1) / 2).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Whether the blade commutes with every generator.
pub fn is_central_blade(sig: Signature, blade: Blade) -> bool {
    (1..=sig.n()).all(|i| {
        let g = Blade::generator(i);
        sig.blade_product(blade, g) == sig.blade_product(g, blade)
    })
}

/// Basis of the center by brute force over all `2^n` blades.
///
/// Each blade either commutes or anticommutes with each generator, so the
/// central blades span the center. The result is `{1}` for even `n` and
/// `{1, omega}` for odd `n` (nondegenerate forms).
pub fn center_basis<S: Scalar>(sig: Signature) -> Vec<Multivector<S>> {
    (0..sig.blade_count() as u32)
        .map(Blade::from_mask)
        .filter(|&b| is_central_blade(sig, b))
        .map(|b| Multivector::blade(sig, b, S::one()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn sig(p: u32, q: u32) -> Signature {
        Signature::new(p, q).unwrap()
    }

    #[test]
    fn omega_squares() {
        assert_eq!(omega_square(sig(3, 1)), -1);
        assert_eq!(omega_square(sig(2, 0)), -1);
        assert_eq!(omega_square(sig(0, 0)), 1);
        let w = coxeter_element::<Rational>(sig(0, 0));
        assert_eq!(w, Multivector::one(sig(0, 0)));
    }

    #[test]
    fn centers() {
        let c = center_basis::<Rational>(sig(3, 0));
        assert_eq!(c.len(), 2);
        assert_eq!(c[1], coxeter_element(sig(3, 0)));
        assert_eq!(c[1].to_string(), "e1^e2^e3");
        assert_eq!(center_basis::<Rational>(sig(2, 0)), vec![Multivector::one(sig(2, 0))]);
        let c41 = center_basis::<Rational>(sig(4, 1));
        assert_eq!(c41.len(), 2);
        assert_eq!(omega_square(sig(4, 1)), -1);
    }
}
