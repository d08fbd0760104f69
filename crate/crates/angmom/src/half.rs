use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A half-integer spin or projection, stored as twice its value.
///
/// Spins `j` and projections `m` of the coupling formulas are all
/// half-integers; storing `2j` keeps every intermediate an exact `i32`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i32,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };

    pub const fn from_twice(twice: i32) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(n: i32) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub const fn twice(self) -> i32 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub const fn is_negative(self) -> bool {
        self.twice < 0
    }

    /// `2j + 1`, the multiplicity of a spin-`j` multiplet.
    pub const fn multiplicity(self) -> i32 {
        self.twice + 1
    }

    pub fn abs(self) -> Self {
        HalfInt { twice: self.twice.abs() }
    }

    pub fn as_int(self) -> Option<i32> {
        self.is_integer().then_some(self.twice / 2)
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }

    /// True when `self - other` is an integer, i.e. `j ± m` is integral.
    pub const fn same_parity(self, other: HalfInt) -> bool {
        (self.twice - other.twice) % 2 == 0
    }

    /// True when `m` is a valid projection of spin `self`.
    pub fn admits_projection(self, m: HalfInt) -> bool {
        m.twice.abs() <= self.twice && self.same_parity(m)
    }

    /// Nonnegative integer value, as a factorial argument.
    ///
    /// Callers must have applied the selection rules that guarantee
    /// integrality and nonnegativity.
    pub(crate) fn factorial_arg(self) -> u64 {
        debug_assert!(self.twice >= 0 && self.twice % 2 == 0, "factorial argument {self}");
        (self.twice / 2) as u64
    }
}

impl From<i32> for HalfInt {
    fn from(n: i32) -> Self {
        HalfInt::from_int(n)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + rhs.twice }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice - rhs.twice }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_parity() {
        let j = HalfInt::from_twice(3); // 3/2
        let m = HalfInt::from_twice(-1); // -1/2
        assert_eq!((j + m).twice(), 2);
        assert_eq!((j - m).twice(), 4);
        assert!(j.same_parity(m));
        assert!(!j.same_parity(HalfInt::from_int(1)));
        assert!(j.admits_projection(m));
        assert!(!j.admits_projection(HalfInt::from_twice(5)));
        assert_eq!(HalfInt::from_int(2).as_int(), Some(2));
        assert_eq!(j.as_int(), None);
    }

    #[test]
    fn display() {
        assert_eq!(HalfInt::from_twice(3).to_string(), "3/2");
        assert_eq!(HalfInt::from_int(-2).to_string(), "-2");
        assert_eq!(HalfInt::from_twice(-1).to_string(), "-1/2");
    }
}
