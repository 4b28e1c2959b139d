//! Worked examples with frozen expected values.

use cliffkit::algebra::{center_basis, coxeter_element, omega_square};
use cliffkit::classify::{classify, even_subalgebra, verify_periodicity, BaseRing};
use cliffkit::lipschitz::{
    gamma31_upper0, group_membership, lie_algebra_audit, omega31, reflect, rotor_exp,
    rotor_from_axis_angle, twisted_adjoint, vector_rep_of_pin31, LieAlgebra, Membership,
};
use cliffkit::majorana::{self, FieldKind, Polynomial};
use cliffkit::scalar::{gauss, rat};
use cliffkit::text::parse_multivector;
use cliffkit::{Blade, Multivector, Rational, Signature};

fn sig(p: u32, q: u32) -> Signature {
    Signature::new(p, q).unwrap()
}

fn mv(s: Signature, text: &str) -> Multivector<Rational> {
    parse_multivector(s, text).unwrap()
}

#[test]
fn products() {
    assert_eq!(mv(sig(2, 0), "e1") * mv(sig(2, 0), "e1"), mv(sig(2, 0), "1"));
    let s = sig(0, 2);
    let ijk = &(&mv(s, "e1") * &mv(s, "e2")) * &mv(s, "e1^e2");
    assert_eq!(ijk, mv(s, "-1"));
    let x = mv(sig(3, 1), "2 - e1^e4 + 1/3*e2");
    assert_eq!(&Multivector::one(sig(3, 1)) * &x, x);
}

#[test]
fn involutions() {
    let s = sig(2, 0);
    assert_eq!(mv(s, "e1").grade_involution(), mv(s, "-e1"));
    assert_eq!(mv(s, "e1^e2").grade_involution(), mv(s, "e1^e2"));
    assert_eq!(mv(s, "1 + e1 + e1^e2").grade_involution(), mv(s, "1 - e1 + e1^e2"));
    assert_eq!(mv(s, "e1").conjugation(), mv(s, "-e1"));
    assert_eq!(mv(s, "e1^e2").conjugation(), mv(s, "-e1^e2"));
    assert_eq!(mv(s, "1").conjugation(), mv(s, "1"));
}

#[test]
fn norms() {
    let s = sig(0, 2);
    let x = mv(s, "2 + 3*e1 - 5*e2 + 7*e1^e2");
    assert_eq!(x.norm(), mv(s, "87"));
    assert_eq!(Multivector::<Rational>::one(s).norm(), mv(s, "1"));
    assert_eq!(mv(sig(3, 1), "e1^e4").norm(), mv(sig(3, 1), "-1"));
}

#[test]
fn coxeter_and_center() {
    assert_eq!(omega_square(sig(3, 1)), -1);
    assert_eq!(omega_square(sig(2, 0)), -1);
    assert_eq!(omega_square(sig(0, 0)), 1);
    assert_eq!(coxeter_element::<Rational>(sig(0, 0)), Multivector::one(sig(0, 0)));
    assert_eq!(
        center_basis::<Rational>(sig(3, 0)),
        vec![mv(sig(3, 0), "1"), mv(sig(3, 0), "e1^e2^e3")]
    );
    assert_eq!(center_basis::<Rational>(sig(2, 0)).len(), 1);
    let c = center_basis::<Rational>(sig(4, 1));
    assert_eq!(c.len(), 2);
    assert_eq!(&c[1] * &c[1], mv(sig(4, 1), "-1"));
}

#[test]
fn classification_rows() {
    let r = classify(3, 1);
    assert_eq!((r.base_ring, r.matrix_size, r.summands, r.omega_sq), (BaseRing::Real, 4, 1, -1));
    assert_eq!(classify(4, 1).to_string(), "C[4]");
    assert_eq!(classify(0, 3).to_string(), "H[1] + H[1]");
    assert_eq!(classify(0, 2).to_string(), "H[1]");
}

#[test]
fn even_subalgebras() {
    let target = |p, q| even_subalgebra::<Rational>(sig(p, q)).unwrap().target;
    assert_eq!(target(3, 1), sig(3, 0));
    assert_eq!(target(4, 1), sig(4, 0));
    assert_eq!(target(4, 0), sig(0, 3));
    assert!(even_subalgebra::<Rational>(sig(0, 0)).is_err());
}

#[test]
fn periodicity() {
    for (p, q) in [(0, 0), (3, 1), (0, 1)] {
        let report = verify_periodicity(p, q, 12);
        assert!(report.all_passed(), "{p},{q}: {report:?}");
    }
    assert_eq!(classify(1, 1).to_string(), "R[2]");
    assert_eq!(classify(4, 2).to_string(), "R[8]");
    assert_eq!(classify(0, 5).to_string(), "C[4]");
}

#[test]
fn hyperbolic_reflection() {
    // Cl(1,1) with e1² = 1 and e2 playing the timelike e0.
    let s = sig(1, 1);
    let beta = 0.8f64;
    let (sh, ch) = ((beta / 2.0).sinh(), (beta / 2.0).cosh());
    let u = Multivector::vector(s, &[ch, sh]).unwrap();
    let e0 = Multivector::basis_vector(s, 2).unwrap();
    let got = reflect(&u, &e0).unwrap();
    let want = Multivector::vector(s, &[beta.sinh(), beta.cosh()]).unwrap();
    assert!(got.near(&want, 1e-14), "{got}");
}

#[test]
fn twisted_adjoint_examples() {
    let s = sig(3, 0);
    let v = mv(s, "2*e1 - e3");
    assert_eq!(twisted_adjoint(&mv(s, "1"), &v).unwrap().image, v);
    assert_eq!(twisted_adjoint(&mv(s, "e1"), &mv(s, "e1")).unwrap().image, mv(s, "-e1"));
    assert_eq!(twisted_adjoint(&mv(s, "e1^e2"), &mv(s, "e3")).unwrap().image, mv(s, "e3"));
}

#[test]
fn membership_examples() {
    let s = sig(3, 0);
    let (v, l) = group_membership(&mv(s, "e1"));
    assert_eq!(v.membership, Membership::Pin);
    let l = l.unwrap();
    let diag: Vec<Rational> = (0..3).map(|i| l.matrix[i][i].clone()).collect();
    assert_eq!(diag, vec![rat(-1, 1), rat(1, 1), rat(1, 1)]);
    let (v, l) = group_membership(&mv(s, "2"));
    assert_eq!(v.membership, Membership::LipschitzOnly);
    assert!(l.unwrap().is_identity(0.0));
    let (v, l) = group_membership(&mv(sig(2, 0), "1 + e1"));
    assert_eq!(v.membership, Membership::None);
    assert!(l.is_none());
}

#[test]
fn rotor_examples() {
    let (u, l) = rotor_from_axis_angle([0.0, 0.0, 1.0], 0.0).unwrap();
    assert!(u.near(&Multivector::one(u.signature()), 0.0));
    assert!(l.is_identity(0.0));
    let (_, l) = rotor_from_axis_angle([0.0, 0.0, 1.0], std::f64::consts::PI).unwrap();
    let want = [[-1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]];
    for i in 0..3 {
        for j in 0..3 {
            assert!((l.matrix[i][j] - want[i][j]).abs() < 1e-15);
        }
    }
    assert!(rotor_from_axis_angle([1.0, 1.0, 0.0], 1.0).is_err());
}

#[test]
fn exponentials() {
    let s = sig(3, 1);
    let phi = 0.9f64;
    let r = rotor_exp(&Multivector::from_terms(s, [(Blade::from_indices(&[1, 2]), phi / 2.0)])).unwrap();
    let want = Multivector::from_terms(
        s,
        [(Blade::SCALAR, (phi / 2.0).cos()), (Blade::from_indices(&[1, 2]), (phi / 2.0).sin())],
    );
    assert!(r.near(&want, 1e-14));
    let (v, l) = group_membership(&r);
    assert_eq!(v.membership, Membership::Spin);
    let l = l.unwrap();
    // Columns hold images: e1 ↦ cos φ e1 + sin φ e2 up to orientation.
    assert!((l.matrix[0][0] - phi.cos()).abs() < 1e-14);
    assert!((l.matrix[1][0].abs() - phi.sin()).abs() < 1e-14);

    let beta = 0.6f64;
    // e4 e1 = -e1 e4.
    let b = rotor_exp(&Multivector::from_terms(s, [(Blade::from_indices(&[1, 4]), -beta / 2.0)])).unwrap();
    let want = Multivector::from_terms(
        s,
        [(Blade::SCALAR, (beta / 2.0).cosh()), (Blade::from_indices(&[1, 4]), -(beta / 2.0).sinh())],
    );
    assert!(b.near(&want, 1e-14));
    let (v, l) = group_membership(&b);
    assert_eq!(v.membership, Membership::Spin);
    let l = l.unwrap();
    assert!((l.matrix[0][0] - beta.cosh()).abs() < 1e-14);
    assert!((l.matrix[3][0].abs() - beta.sinh()).abs() < 1e-14);
    assert_eq!(rotor_exp(&Multivector::zero(s)).unwrap(), Multivector::one(s));
}

#[test]
fn pin31_reflections() {
    let g0 = gamma31_upper0::<Rational>();
    let space = vector_rep_of_pin31(&g0).unwrap();
    let time = vector_rep_of_pin31(&(&g0 * &omega31())).unwrap();
    let diag = |m: &cliffkit::lipschitz::OrthogonalImage<Rational>| -> Vec<i64> {
        (0..4).map(|i| if m.matrix[i][i] == rat(1, 1) { 1 } else { -1 }).collect()
    };
    assert_eq!(diag(&space), vec![1, -1, -1, -1]);
    assert_eq!(diag(&time), vec![-1, 1, 1, 1]);
    let minus = vector_rep_of_pin31(&-g0.clone()).unwrap();
    assert_eq!(minus.matrix, space.matrix);
    assert!(vector_rep_of_pin31(&Multivector::scalar(g0.signature(), rat(2, 1))).is_err());
}

#[test]
fn lie_algebras() {
    let a = lie_algebra_audit(sig(3, 0), LieAlgebra::Spin).unwrap();
    assert_eq!((a.dimension, a.closed), (3, true));
    let a = lie_algebra_audit(sig(4, 1), LieAlgebra::U22).unwrap();
    assert_eq!((a.dimension, a.closed), (16, true));
    let a = lie_algebra_audit(sig(3, 1), LieAlgebra::Sp4).unwrap();
    assert_eq!((a.dimension, a.closed), (10, true));
    assert!(lie_algebra_audit(sig(4, 0), LieAlgebra::Sp4).is_err());
}

#[test]
fn audits() {
    assert!(majorana::mass_term(FieldKind::Commuting).is_zero());
    let anti = majorana::mass_term(FieldKind::Anticommuting);
    assert_eq!(anti.to_string(), "(-2i)*theta1^theta2 + (-2i)*theta3^theta4");
    assert!(majorana::u1_current(FieldKind::Anticommuting, 0).unwrap().is_zero());
    // ψ = (1, 0, 0, 0) picks the (1,1) entry of Cγ^0, which is 0.
    let cur = match majorana::u1_current(FieldKind::Commuting, 0).unwrap() {
        majorana::Contraction::Commuting(p) => p,
        _ => unreachable!(),
    };
    assert!(cur.terms().all(|(m, _)| m != [1, 1]));
    assert_eq!(majorana::c_gamma_exact(0).unwrap()[0][0], gauss(0, 0));
    assert!(Polynomial::var(1).mul(&Polynomial::var(1)).terms().any(|(m, _)| m == [1, 1]));
}
