//! Quotient types for a given genus and their closed-form class counts.

use num_rational::Ratio;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::tuple::QuotientTuple;

/// `4(r+s+m) + 3t + 2n - 3`. May be zero or negative.
pub fn genus_of(v: QuotientTuple) -> i64 {
    let [r, s, t, m, n] = v.as_array().map(i64::from);
    4 * (r + s + m) + 3 * t + 2 * n - 3
}

/// Euler characteristic of the graph of groups, `1 - (r+s+m) - 3t/4 - n/2`.
///
/// The star graph has `r+s+t+m+n` edges with trivial edge groups. The
/// central vertex counts 1, each Z4 vertex 1/4, each Z2 vertex 1/2, and
/// vertices with infinite groups count 0.
pub fn euler_characteristic(v: QuotientTuple) -> Ratio<i64> {
    let [r, s, t, m, n] = v.as_array().map(i64::from);
    Ratio::from_integer(1 - (r + s + m)) - Ratio::new(3 * t, 4) - Ratio::new(n, 2)
}

/// Number of equivalence classes of actions with quotient type `v`.
pub fn class_count(v: QuotientTuple) -> u32 {
    if v.has_odd_source() {
        v.m() + 1
    } else {
        v.m()
    }
}

/// All tuples with `genus_of(v) == g`, in lexicographic order.
///
/// Zero-count tuples (`r = s = t = m = 0`) are kept.
pub fn admissible_tuples(g: i64) -> Result<Vec<QuotientTuple>> {
    if g <= 0 {
        return Err(Error::InvalidGenus(g));
    }
    let target = g + 3;
    let mut out = Vec::new();
    for free_total in 0..=target / 4 {
        for t in 0..=(target - 4 * free_total) / 3 {
            let rest = target - 4 * free_total - 3 * t;
            if rest % 2 != 0 {
                continue;
            }
            let n = rest / 2;
            for r in 0..=free_total {
                for s in 0..=free_total - r {
                    let m = free_total - r - s;
                    let as_u32 = |x: i64| u32::try_from(x).expect("tuple entry fits u32");
                    out.push(QuotientTuple::new(
                        as_u32(r),
                        as_u32(s),
                        as_u32(t),
                        as_u32(m),
                        as_u32(n),
                    )?);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// One row of a census.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleCount {
    pub tuple: QuotientTuple,
    pub genus: u32,
    pub class_count: u32,
    pub euler_characteristic: Ratio<i64>,
}

impl TupleCount {
    pub fn new(tuple: QuotientTuple) -> Self {
        let genus = genus_of(tuple);
        TupleCount {
            tuple,
            genus: u32::try_from(genus.max(0)).unwrap_or(u32::MAX),
            class_count: class_count(tuple),
            euler_characteristic: euler_characteristic(tuple),
        }
    }

    /// True for the tuples that satisfy the genus equation but admit no
    /// epimorphism.
    pub fn is_empty_class(&self) -> bool {
        self.class_count == 0
    }

    /// `p/q` in lowest terms, denominator always written.
    pub fn euler_char_string(&self) -> String {
        format!(
            "{}/{}",
            self.euler_characteristic.numer(),
            self.euler_characteristic.denom()
        )
    }
}

impl Serialize for TupleCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("TupleCount", 3)?;
        st.serialize_field("tuple", &self.tuple)?;
        st.serialize_field("class_count", &self.class_count)?;
        st.serialize_field("euler_char", &self.euler_char_string())?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub genus: u32,
    pub entries: Vec<TupleCount>,
    pub total: u64,
}

impl CensusReport {
    pub fn nonzero_entries(&self) -> impl Iterator<Item = &TupleCount> {
        self.entries.iter().filter(|e| !e.is_empty_class())
    }
}

pub fn census(g: i64) -> Result<CensusReport> {
    let entries: Vec<TupleCount> = admissible_tuples(g)?
        .into_iter()
        .map(TupleCount::new)
        .collect();
    let total = entries.iter().map(|e| u64::from(e.class_count)).sum();
    Ok(CensusReport {
        genus: g as u32,
        entries,
        total,
    })
}

/// Reports for every genus in `g_min..=g_max`, ordered by genus.
pub fn census_sequence(g_min: i64, g_max: i64) -> Result<Vec<CensusReport>> {
    if g_min <= 0 || g_min > g_max {
        return Err(Error::InvalidRange {
            from: g_min,
            to: g_max,
        });
    }
    (g_min..=g_max).into_par_iter().map(census).collect()
}

/// Outcome of a scan over all admissible tuples up to some genus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryVerdict {
    pub name: &'static str,
    pub max_genus: u32,
    pub passed: bool,
    pub tuples_checked: usize,
    pub witnesses: Vec<(u32, QuotientTuple)>,
}

fn scan_corollary(
    name: &'static str,
    g_max: u32,
    genera: impl Iterator<Item = u32>,
    violates: impl Fn(u32, QuotientTuple) -> bool,
) -> CorollaryVerdict {
    let mut tuples_checked = 0;
    let mut witnesses = Vec::new();
    for g in genera {
        let tuples = admissible_tuples(i64::from(g)).expect("genus is positive");
        for v in tuples.into_iter().filter(|&v| class_count(v) > 0) {
            tuples_checked += 1;
            if violates(g, v) {
                witnesses.push((g, v));
            }
        }
    }
    CorollaryVerdict {
        name,
        max_genus: g_max,
        passed: witnesses.is_empty(),
        tuples_checked,
        witnesses,
    }
}

/// Every action on an even-genus handlebody has an interval of fixed
/// points: counted tuples at even genus all have `t >= 1`.
pub fn check_even_genus_corollary(g_max: u32) -> CorollaryVerdict {
    scan_corollary(
        "even-genus-fixed-interval",
        g_max,
        (2..=g_max).step_by(2),
        |_, v| v.t() == 0,
    )
}

/// Actions with `t = n = 0` only occur in genus `1 mod 4`.
pub fn check_boundary_free_corollary(g_max: u32) -> CorollaryVerdict {
    scan_corollary("boundary-free-genus", g_max, 1..=g_max, |g, v| {
        v.t() == 0 && v.n() == 0 && g % 4 != 1
    })
}
