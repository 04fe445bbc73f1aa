use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An element of the field with three elements, stored as 0, 1 or 2.
///
/// `2` plays the role of `-1`, so the nonzero elements are `{1, -1}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub struct Gf3(u8);

impl Gf3 {
    pub const ZERO: Gf3 = Gf3(0);
    pub const ONE: Gf3 = Gf3(1);
    pub const MINUS_ONE: Gf3 = Gf3(2);

    /// Reduces any integer modulo 3.
    pub fn new(value: i64) -> Self {
        Gf3(value.rem_euclid(3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplicative inverse; `None` for zero. Every nonzero element is its own inverse.
    pub fn inverse(self) -> Option<Gf3> {
        (!self.is_zero()).then_some(self)
    }

    /// Symmetric integer representative in `{-1, 0, 1}`.
    pub fn to_signed(self) -> i8 {
        match self.0 {
            0 => 0,
            1 => 1,
            _ => -1,
        }
    }

    pub fn elements() -> [Gf3; 3] {
        [Gf3(0), Gf3(1), Gf3(2)]
    }
}

impl From<Gf3> for u8 {
    fn from(x: Gf3) -> u8 {
        x.0
    }
}

impl TryFrom<u8> for Gf3 {
    type Error = crate::Error;

    fn try_from(v: u8) -> Result<Self, Self::Error> {
        if v < 3 {
            Ok(Gf3(v))
        } else {
            Err(crate::Error::InvalidColor(v))
        }
    }
}

impl fmt::Display for Gf3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Gf3 {
    type Output = Gf3;
    fn add(self, rhs: Gf3) -> Gf3 {
        let s = self.0 + rhs.0;
        Gf3(if s >= 3 { s - 3 } else { s })
    }
}

impl AddAssign for Gf3 {
    fn add_assign(&mut self, rhs: Gf3) {
        *self = *self + rhs;
    }
}

impl Neg for Gf3 {
    type Output = Gf3;
    fn neg(self) -> Gf3 {
        Gf3(if self.0 == 0 { 0 } else { 3 - self.0 })
    }
}

impl Sub for Gf3 {
    type Output = Gf3;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Gf3) -> Gf3 {
        self + (-rhs)
    }
}

impl Mul for Gf3 {
    type Output = Gf3;
    fn mul(self, rhs: Gf3) -> Gf3 {
        Gf3((self.0 * rhs.0) % 3)
    }
}

impl std::iter::Sum for Gf3 {
    fn sum<I: Iterator<Item = Gf3>>(iter: I) -> Gf3 {
        iter.fold(Gf3::ZERO, Add::add)
    }
}
