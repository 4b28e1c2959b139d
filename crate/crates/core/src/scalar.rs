//! Coefficient fields for multivectors and matrices.
//!
//! Two families are provided: exact ones ([`Rational`], [`GaussianRational`])
//! that never round, and double-precision ones (`f64`, [`Complex64`]) whose
//! comparisons go through a tolerance.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Complex number with exact rational real and imaginary parts.
pub type GaussianRational = Complex<BigRational>;

/// Default comparison tolerance for the numeric backends.
pub const DEFAULT_TOL: f64 = 1e-12;

/// A field of coefficients.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// `true` when arithmetic never rounds.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    /// Complex conjugate; identity on real fields.
    fn conj(&self) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    /// Modulus as a double.
    fn magnitude(&self) -> f64;

    fn to_complex64(&self) -> Complex64;

    /// Whether the imaginary part vanishes (exactly or to `tol`).
    fn is_real_within(&self, tol: f64) -> bool;

    fn parse_coeff(s: &str) -> Option<Self>;

    fn format_coeff(&self) -> String;

    /// Exact equality on exact fields, `|a - b| <= tol` otherwise.
    fn near(&self, other: &Self, tol: f64) -> bool {
        if Self::EXACT {
            self == other
        } else {
            (self.clone() - other.clone()).magnitude() <= tol
        }
    }

    /// Zero test with the same convention as [`Scalar::near`].
    fn near_zero(&self, tol: f64) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.magnitude() <= tol
        }
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.clone() * inv)
    }
}

/// Round to 15 significant digits and print the shortest representation
/// of the rounded value, in exponent form outside `[1e-5, 1e15)`.
pub fn format_f64(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    let rounded = round15(x);
    if rounded == 0.0 {
        "0".to_string()
    } else if rounded.abs() < 1e-5 || rounded.abs() >= 1e15 {
        format!("{rounded:e}")
    } else {
        format!("{rounded}")
    }
}

/// Round a double to 15 significant digits.
pub fn round15(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    let r: f64 = format!("{x:.14e}").parse().unwrap_or(x);
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(Rational::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.trim_start().starts_with('-');
        let digits = int.trim_start_matches(['-', '+']);
        if !frac.chars().all(|c| c.is_ascii_digit())
            || !digits.chars().all(|c| c.is_ascii_digit())
            || (digits.is_empty() && frac.is_empty())
        {
            return None;
        }
        let whole: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().ok()?
        };
        let frac_num: BigInt = if frac.is_empty() {
            BigInt::zero()
        } else {
            frac.parse().ok()?
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let mag = Rational::new(whole * &scale + frac_num, scale);
        return Some(if negative { -mag } else { mag });
    }
    let v: BigInt = s.parse().ok()?;
    Some(Rational::from_integer(v))
}

fn parse_f64(s: &str) -> Option<f64> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: f64 = num.trim().parse().ok()?;
        let den: f64 = den.trim().parse().ok()?;
        return Some(num / den);
    }
    s.parse().ok()
}

/// Split `a+bi`, `a-bi`, `bi` or `a` into real and imaginary text.
fn split_complex(s: &str) -> Option<(String, String)> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s)
        .trim();
    if s.is_empty() {
        return None;
    }
    let Some(body) = s.strip_suffix('i') else {
        return Some((s.to_string(), "0".to_string()));
    };
    // Find the sign separating the real and imaginary parts, skipping
    // exponent signs such as `1e-3`.
    let bytes = body.as_bytes();
    let mut split = None;
    for idx in (1..bytes.len()).rev() {
        let c = bytes[idx] as char;
        if (c == '+' || c == '-') && !matches!(bytes[idx - 1] as char, 'e' | 'E') {
            split = Some(idx);
            break;
        }
    }
    let (re, im) = match split {
        Some(idx) => (body[..idx].trim().to_string(), body[idx..].trim().to_string()),
        None => ("0".to_string(), body.trim().to_string()),
    };
    let im = match im.as_str() {
        "" | "+" => "1".to_string(),
        "-" => "-1".to_string(),
        _ => im.trim_start_matches('+').to_string(),
    };
    Some((re, im))
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }

    fn to_complex64(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn is_real_within(&self, _tol: f64) -> bool {
        true
    }

    fn parse_coeff(s: &str) -> Option<Self> {
        parse_rational(s)
    }

    fn format_coeff(&self) -> String {
        self.to_string()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn conj(&self) -> Self {
        *self
    }

    fn inverse(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }

    fn magnitude(&self) -> f64 {
        self.abs()
    }

    fn to_complex64(&self) -> Complex64 {
        Complex64::new(*self, 0.0)
    }

    fn is_real_within(&self, _tol: f64) -> bool {
        true
    }

    fn parse_coeff(s: &str) -> Option<Self> {
        parse_f64(s)
    }

    fn format_coeff(&self) -> String {
        format_f64(*self)
    }
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Complex::inv(self))
        }
    }

    fn magnitude(&self) -> f64 {
        self.norm()
    }

    fn to_complex64(&self) -> Complex64 {
        *self
    }

    fn is_real_within(&self, tol: f64) -> bool {
        self.im.abs() <= tol
    }

    fn parse_coeff(s: &str) -> Option<Self> {
        let (re, im) = split_complex(s)?;
        Some(Complex64::new(parse_f64(&re)?, parse_f64(&im)?))
    }

    fn format_coeff(&self) -> String {
        if self.im == 0.0 {
            format_f64(self.re)
        } else {
            let im = format_f64(self.im);
            let sep = if im.starts_with('-') { "" } else { "+" };
            format!("({}{sep}{im}i)", format_f64(self.re))
        }
    }
}

impl Scalar for GaussianRational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        Complex::new(Rational::from_i64(v), Rational::zero())
    }

    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }

    fn inverse(&self) -> Option<Self> {
        let den = self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone();
        if den.is_zero() {
            return None;
        }
        Some(Complex::new(self.re.clone() / den.clone(), -self.im.clone() / den))
    }

    fn magnitude(&self) -> f64 {
        self.to_complex64().norm()
    }

    fn to_complex64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    fn is_real_within(&self, _tol: f64) -> bool {
        self.im.is_zero()
    }

    fn parse_coeff(s: &str) -> Option<Self> {
        let (re, im) = split_complex(s)?;
        Some(Complex::new(parse_rational(&re)?, parse_rational(&im)?))
    }

    fn format_coeff(&self) -> String {
        if self.im.is_zero() {
            self.re.to_string()
        } else if self.re.is_zero() {
            format!("({}i)", self.im)
        } else {
            let sep = if self.im.is_negative() { "" } else { "+" };
            format!("({}{sep}{}i)", self.re, self.im)
        }
    }
}

/// Exact rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact Gaussian rational `re + i*im` with integer parts.
pub fn gauss(re: i64, im: i64) -> GaussianRational {
    Complex::new(Rational::from_i64(re), Rational::from_i64(im))
}
