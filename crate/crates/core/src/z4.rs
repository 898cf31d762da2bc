//! Arithmetic in the cyclic group of order four.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A residue mod 4, always held in canonical form `0..=3`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Z4(u8);

impl Z4 {
    pub const ZERO: Z4 = Z4(0);
    pub const ONE: Z4 = Z4(1);
    pub const TWO: Z4 = Z4(2);
    pub const THREE: Z4 = Z4(3);

    /// Every element, in increasing order.
    pub const ALL: [Z4; 4] = [Z4(0), Z4(1), Z4(2), Z4(3)];
    /// The two generators of the group.
    pub const UNITS: [Z4; 2] = [Z4(1), Z4(3)];

    /// Reduces any integer to its canonical residue.
    pub fn reduce(value: i64) -> Self {
        Z4(value.rem_euclid(4) as u8)
    }

    /// Accepts only values that are already canonical.
    pub fn try_new(value: i64) -> Result<Self> {
        if (0..4).contains(&value) {
            Ok(Z4(value as u8))
        } else {
            Err(Error::NotAResidue(value))
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// Smallest positive `k` with `k * self == 0`.
    pub fn order(self) -> u32 {
        match self.0 {
            0 => 1,
            2 => 2,
            _ => 4,
        }
    }

    /// Odd residues are exactly the generators.
    pub fn is_generator(self) -> bool {
        self.0 & 1 == 1
    }
}

impl From<Z4> for u8 {
    fn from(x: Z4) -> u8 {
        x.0
    }
}

impl fmt::Display for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Z4 {
    type Output = Z4;

    fn add(self, rhs: Z4) -> Z4 {
        Z4((self.0 + rhs.0) & 3)
    }
}

impl AddAssign for Z4 {
    fn add_assign(&mut self, rhs: Z4) {
        *self = *self + rhs;
    }
}

impl Neg for Z4 {
    type Output = Z4;

    fn neg(self) -> Z4 {
        Z4((4 - self.0) & 3)
    }
}

impl Sub for Z4 {
    type Output = Z4;

    fn sub(self, rhs: Z4) -> Z4 {
        self + (-rhs)
    }
}

/// Scalar multiplication by an integer.
impl Mul<Z4> for i64 {
    type Output = Z4;

    fn mul(self, rhs: Z4) -> Z4 {
        Z4::reduce(self * i64::from(rhs.0))
    }
}

impl Serialize for Z4 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.0)
    }
}

impl<'de> Deserialize<'de> for Z4 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = i64::deserialize(deserializer)?;
        Z4::try_new(raw).map_err(serde::de::Error::custom)
    }
}

/// Addition of canonical residues.
pub fn z4_add(x: Z4, y: Z4) -> Z4 {
    x + y
}

pub fn z4_order(x: Z4) -> u32 {
    x.order()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn addition_examples() {
        assert_eq!(z4_add(Z4::ONE, Z4::THREE), Z4::ZERO);
        assert_eq!(z4_add(Z4::TWO, Z4::TWO), Z4::ZERO);
        assert_eq!(z4_add(Z4::THREE, Z4::THREE), Z4::TWO);
    }

    #[test]
    fn order_examples() {
        assert_eq!(z4_order(Z4::ZERO), 1);
        assert_eq!(z4_order(Z4::TWO), 2);
        assert_eq!(z4_order(Z4::THREE), 4);
        assert_eq!(z4_order(Z4::ONE), 4);
    }

    #[test]
    fn order_matches_brute_force() {
        for x in Z4::ALL {
            let brute = (1..=4).find(|&k| (k as i64 * x) == Z4::ZERO).unwrap();
            assert_eq!(x.order(), brute);
        }
    }

    #[test]
    fn arithmetic_agrees_with_integers() {
        for x in 0..4i64 {
            for y in 0..4i64 {
                let (a, b) = (Z4::reduce(x), Z4::reduce(y));
                assert_eq!(a + b, Z4::reduce(x + y));
                assert_eq!(a - b, Z4::reduce(x - y));
                assert_eq!(-a, Z4::reduce(-x));
                assert_eq!(y * a, Z4::reduce(x * y));
            }
        }
        assert_eq!(Z4::reduce(-1), Z4::THREE);
        assert_eq!(Z4::reduce(-6), Z4::TWO);
    }

    #[test]
    fn only_canonical_values_parse() {
        assert_eq!(serde_json::from_str::<Z4>("3").unwrap(), Z4::THREE);
        assert!(serde_json::from_str::<Z4>("4").is_err());
        assert!(serde_json::from_str::<Z4>("-1").is_err());
        assert_eq!(Z4::try_new(7), Err(Error::NotAResidue(7)));
    }
}
