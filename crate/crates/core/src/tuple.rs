use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Branch counts `(r, s, t, m, n)` of a quotient graph of groups.
///
/// The five families carry vertex groups `Z`, `Z4 x Z`, `Z4`, `Z2 x Z` and
/// `Z2` respectively. Ordering is lexicographic on the five counts.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuotientTuple {
    r: u32,
    s: u32,
    t: u32,
    m: u32,
    n: u32,
}

impl QuotientTuple {
    pub fn new(r: u32, s: u32, t: u32, m: u32, n: u32) -> Result<Self> {
        if r == 0 && s == 0 && t == 0 && m == 0 && n == 0 {
            return Err(Error::EmptyTuple);
        }
        Ok(QuotientTuple { r, s, t, m, n })
    }

    pub fn r(&self) -> u32 {
        self.r
    }
    pub fn s(&self) -> u32 {
        self.s
    }
    pub fn t(&self) -> u32 {
        self.t
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn as_array(&self) -> [u32; 5] {
        [self.r, self.s, self.t, self.m, self.n]
    }

    /// True when some free or order-4 branch exists, i.e. `r + s + t > 0`.
    pub fn has_odd_source(&self) -> bool {
        self.r + self.s + self.t > 0
    }

    /// Total number of generators `r + 2s + t + 2m + n`.
    pub fn generator_count(&self) -> usize {
        (self.r + 2 * self.s + self.t + 2 * self.m + self.n) as usize
    }

    /// `log2` of the number of torsion-faithful labelings `4^r 8^s 2^t 4^m`.
    pub fn state_space_log2(&self) -> u32 {
        2 * self.r + 3 * self.s + self.t + 2 * self.m
    }

    /// Number of torsion-faithful labelings, saturating at `u128::MAX`.
    pub fn state_space(&self) -> u128 {
        let exp = self.state_space_log2();
        if exp >= 128 {
            u128::MAX
        } else {
            1u128 << exp
        }
    }
}

impl fmt::Display for QuotientTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{})",
            self.r, self.s, self.t, self.m, self.n
        )
    }
}

impl TryFrom<[u32; 5]> for QuotientTuple {
    type Error = Error;

    fn try_from([r, s, t, m, n]: [u32; 5]) -> Result<Self> {
        QuotientTuple::new(r, s, t, m, n)
    }
}

impl Serialize for QuotientTuple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.as_array().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QuotientTuple {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = <[u32; 5]>::deserialize(deserializer)?;
        QuotientTuple::try_from(raw).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_tuple() {
        assert_eq!(QuotientTuple::new(0, 0, 0, 0, 0), Err(Error::EmptyTuple));
        assert!(serde_json::from_str::<QuotientTuple>("[0,0,0,0,0]").is_err());
    }

    #[test]
    fn ordering_is_lexicographic() {
        let a = QuotientTuple::new(0, 0, 2, 0, 0).unwrap();
        let b = QuotientTuple::new(0, 1, 0, 0, 1).unwrap();
        let c = QuotientTuple::new(1, 0, 0, 0, 0).unwrap();
        assert!(a < b && b < c);
    }

    #[test]
    fn json_is_a_plain_array() {
        let v = QuotientTuple::new(1, 2, 3, 4, 5).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), "[1,2,3,4,5]");
        assert_eq!(v.to_string(), "(1,2,3,4,5)");
    }

    #[test]
    fn state_space_saturates() {
        let v = QuotientTuple::new(0, 1, 1, 1, 0).unwrap();
        assert_eq!(v.state_space(), 8 * 2 * 4);
        let huge = QuotientTuple::new(100, 0, 0, 0, 0).unwrap();
        assert_eq!(huge.state_space(), u128::MAX);
    }
}
