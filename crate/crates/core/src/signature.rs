use std::fmt;
use std::str::FromStr;

use crate::blade::Blade;
use crate::error::{CliffError, Result};

/// Default upper bound on the number of generators.
pub const DEFAULT_CAP: u32 = 12;

/// Hard limit imposed by the 32-bit blade masks.
pub const MAX_GENERATORS: u32 = 31;

/// Quadratic form of signature `(p, q)`, optionally extended by `r` null
/// generators (`r > 0` only for exterior algebras).
///
/// Generators are ordered `e_1..e_p` (square `+1`), `e_{p+1}..e_{p+q}`
/// (square `-1`), then the null ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    p: u32,
    q: u32,
    r: u32,
}

impl Signature {
    /// `Cl(p, q)` under the default generator cap.
    pub fn new(p: u32, q: u32) -> Result<Self> {
        Self::with_cap(p, q, DEFAULT_CAP)
    }

    /// `Cl(p, q)` with an explicit generator cap (at most [`MAX_GENERATORS`]).
    pub fn with_cap(p: u32, q: u32, cap: u32) -> Result<Self> {
        let n = p + q;
        let cap = cap.min(MAX_GENERATORS);
        if n > cap {
            return Err(CliffError::CapExceeded { p, q, n, cap });
        }
        Ok(Self { p, q, r: 0 })
    }

    /// Exterior (Grassmann) algebra on `g` generators: `Q = 0`.
    pub fn grassmann(g: u32) -> Result<Self> {
        if g > DEFAULT_CAP {
            return Err(CliffError::CapExceeded {
                p: 0,
                q: 0,
                n: g,
                cap: DEFAULT_CAP,
            });
        }
        Ok(Self { p: 0, q: 0, r: g })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Number of null generators.
    pub fn r(&self) -> u32 {
        self.r
    }

    /// Total number of generators.
    pub fn n(&self) -> u32 {
        self.p + self.q + self.r
    }

    pub fn is_degenerate(&self) -> bool {
        self.r > 0
    }

    /// `p - q`.
    pub fn difference(&self) -> i64 {
        self.p as i64 - self.q as i64
    }

    /// Number of basis blades, `2^n`.
    pub fn blade_count(&self) -> usize {
        1usize << self.n()
    }

    /// Square of generator `e_i`, 1-based.
    pub fn square(&self, index: u32) -> Result<i8> {
        if index == 0 || index > self.n() {
            return Err(CliffError::GeneratorOutOfRange {
                index,
                n: self.n(),
            });
        }
        Ok(if index <= self.p {
            1
        } else if index <= self.p + self.q {
            -1
        } else {
            0
        })
    }

    /// Diagonal of the metric, `eta_ii`.
    pub fn metric(&self) -> Vec<i8> {
        (1..=self.n()).map(|i| self.square(i).unwrap()).collect()
    }

    fn negative_mask(&self) -> u32 {
        ((1u32 << self.q) - 1) << self.p
    }

    fn null_mask(&self) -> u32 {
        ((1u32 << self.r) - 1) << (self.p + self.q)
    }

    /// Geometric product of two basis blades: `e_a e_b = sign * e_{a xor b}`,
    /// with `sign` in `{-1, 0, 1}`.
    pub fn blade_product(&self, a: Blade, b: Blade) -> (i8, Blade) {
        let (a, b) = (a.mask(), b.mask());
        let common = a & b;
        if common & self.null_mask() != 0 {
            return (0, Blade::from_mask(a ^ b));
        }
        let mut flips = reorder_swaps(a, b);
        flips += (common & self.negative_mask()).count_ones();
        let sign = if flips.is_multiple_of(2) { 1 } else { -1 };
        (sign, Blade::from_mask(a ^ b))
    }

    /// The mask with every generator present.
    pub fn pseudoscalar_blade(&self) -> Blade {
        Blade::from_mask(if self.n() == 0 { 0 } else { u32::MAX >> (32 - self.n()) })
    }
}

/// Number of transpositions needed to bring the concatenation `a b` of two
/// ascending index lists into ascending order.
pub(crate) fn reorder_swaps(a: u32, b: u32) -> u32 {
    let mut a = a >> 1;
    let mut swaps = 0;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    swaps
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r == 0 {
            write!(f, "Cl({},{})", self.p, self.q)
        } else {
            write!(f, "Cl({},{},{})", self.p, self.q, self.r)
        }
    }
}

impl FromStr for Signature {
    type Err = CliffError;

    /// Parses `"p,q"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || CliffError::BadSignature(s.to_string());
        let (p, q) = s.split_once(',').ok_or_else(bad)?;
        let p: u32 = p.trim().parse().map_err(|_| bad())?;
        let q: u32 = q.trim().parse().map_err(|_| bad())?;
        Signature::new(p, q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_follow_generator_order() {
        let sig = Signature::new(2, 1).unwrap();
        assert_eq!(sig.metric(), vec![1, 1, -1]);
        assert!(sig.square(4).is_err());
        assert_eq!(Signature::grassmann(2).unwrap().metric(), vec![0, 0]);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(Signature::new(7, 6).is_err());
        assert!(Signature::with_cap(10, 6, 16).is_ok());
    }

    #[test]
    fn parse_signature_text() {
        assert_eq!("3,1".parse::<Signature>().unwrap(), Signature::new(3, 1).unwrap());
        assert!("3;1".parse::<Signature>().is_err());
        assert!("a,1".parse::<Signature>().is_err());
    }

    #[test]
    fn blade_products() {
        let sig = Signature::new(1, 1).unwrap();
        let e1 = Blade::from_mask(0b01);
        let e2 = Blade::from_mask(0b10);
        assert_eq!(sig.blade_product(e1, e1), (1, Blade::SCALAR));
        assert_eq!(sig.blade_product(e2, e2), (-1, Blade::SCALAR));
        assert_eq!(sig.blade_product(e2, e1), (-1, Blade::from_mask(0b11)));
        assert_eq!(sig.blade_product(e1, e2), (1, Blade::from_mask(0b11)));
        let g = Signature::grassmann(2).unwrap();
        assert_eq!(g.blade_product(e1, e1).0, 0);
    }
}
