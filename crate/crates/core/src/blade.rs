use std::fmt;

/// Basis blade `e_{i1} e_{i2} ... e_{ik}` with `i1 < i2 < ... < ik`, stored
/// as a bitmask: bit `i - 1` is set when `e_i` is present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub const fn from_mask(mask: u32) -> Self {
        Blade(mask)
    }

    /// Blade of the given 1-based generator indices. Indices must be distinct
    /// and at most 32.
    pub fn from_indices(indices: &[u32]) -> Self {
        Blade(indices.iter().fold(0, |m, &i| m | (1 << (i - 1))))
    }

    /// Single generator `e_i`, 1-based.
    pub const fn generator(index: u32) -> Self {
        Blade(1 << (index - 1))
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub const fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub const fn contains(self, index: u32) -> bool {
        self.0 & (1 << (index - 1)) != 0
    }

    /// Ascending 1-based generator indices.
    pub fn indices(self) -> impl Iterator<Item = u32> {
        (0..32).filter(move |b| self.0 & (1 << b) != 0).map(|b| b + 1)
    }

    /// `(-1)^k`.
    pub const fn involution_sign(self) -> i8 {
        if self.grade().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Sign of the conjugation on a grade-`k` blade, `(-1)^{k(k+1)/2}`.
    pub const fn conjugation_sign(self) -> i8 {
        let k = self.grade();
        if (k * (k + 1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Sign of the reversion, `(-1)^{k(k-1)/2}`.
    pub const fn reversion_sign(self) -> i8 {
        let k = self.grade();
        if k < 2 || (k * (k - 1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Blade {
    /// `1` for the scalar blade, `e1^e3^e4` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.indices().map(|i| format!("e{i}")).collect();
        write!(f, "{}", parts.join("^"))
    }
}
