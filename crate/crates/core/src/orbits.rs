//! Brute-force orbit oracle.
//!
//! All admissible labelings of a tuple are enumerated, then merged by a
//! union-find over the elementary move catalogue. The resulting orbit count
//! is compared against the closed form from [`crate::enumeration`].

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::{admissible_tuples, census, class_count};
use crate::error::{Error, Result};
use crate::labeling::{Families, Labeling, NormalFormClass};
use crate::moves::Move;
use crate::tuple::QuotientTuple;
use crate::z4::Z4;

pub const DEFAULT_MAX_STATES: u64 = 1_000_000;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Keeps the smaller index as root so roots are orbit minima.
    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx < ry {
            self.parent[ry] = rx;
        } else if ry < rx {
            self.parent[rx] = ry;
        }
    }
}

/// Admissible labelings of one tuple, split into orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    pub tuple: QuotientTuple,
    pub labeling_count: usize,
    pub orbit_count: usize,
    /// Lexicographic minimum of each orbit with its normal form, ordered by
    /// the minimum.
    pub representatives: Vec<(Labeling, NormalFormClass)>,
    pub orbit_sizes: Vec<usize>,
    /// Every admissible labeling in lexicographic order.
    pub labelings: Vec<Labeling>,
    /// Orbit index of each entry of `labelings`.
    pub orbit_of: Vec<usize>,
}

impl OrbitPartition {
    /// Orbits containing labelings with different normal forms.
    pub fn orbits_with_mixed_normal_form(&self) -> Vec<usize> {
        let mut seen: Vec<Option<u32>> = vec![None; self.orbit_count];
        let mut mixed = vec![false; self.orbit_count];
        for (lab, &orbit) in self.labelings.iter().zip(&self.orbit_of) {
            let k = lab.odd_f_count();
            match seen[orbit] {
                None => seen[orbit] = Some(k),
                Some(prev) if prev != k => mixed[orbit] = true,
                _ => {}
            }
        }
        (0..self.orbit_count).filter(|&o| mixed[o]).collect()
    }

    /// Orbits holding both a labeling with some odd f-image and one with
    /// every f-image even.
    pub fn orbits_mixing_odd_and_even_f(&self) -> Vec<usize> {
        let mut has_odd = vec![false; self.orbit_count];
        let mut has_even = vec![false; self.orbit_count];
        for (lab, &orbit) in self.labelings.iter().zip(&self.orbit_of) {
            if lab.odd_f_count() > 0 {
                has_odd[orbit] = true;
            } else {
                has_even[orbit] = true;
            }
        }
        (0..self.orbit_count)
            .filter(|&o| has_odd[o] && has_even[o])
            .collect()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Representative {
    pub labeling: Labeling,
    pub k: u32,
}

/// Oracle outcome for one tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TupleVerdict {
    pub tuple: QuotientTuple,
    pub labelings: usize,
    pub orbits: usize,
    pub expected: u32,
    pub status: Status,
    pub representatives: Vec<Representative>,
}

impl TupleVerdict {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusVerdict {
    pub genus: u32,
    pub tuples: Vec<TupleVerdict>,
    pub orbit_total: u64,
    pub census_total: u64,
    pub status: Status,
}

impl GenusVerdict {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Oracle configuration.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub max_states: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            max_states: DEFAULT_MAX_STATES,
        }
    }
}

impl Oracle {
    pub fn with_max_states(max_states: u64) -> Self {
        Oracle { max_states }
    }

    fn check_cap(&self, v: QuotientTuple) -> Result<()> {
        let states = v.state_space();
        if states > u128::from(self.max_states) {
            return Err(Error::StateSpaceOverflow {
                tuple: v,
                states,
                cap: self.max_states,
            });
        }
        Ok(())
    }

    /// Admissible labelings of `v` in lexicographic order.
    pub fn enumerate_labelings(&self, v: QuotientTuple) -> Result<Vec<Labeling>> {
        self.check_cap(v)?;
        let (r, s, t, m, n) = (
            v.r() as usize,
            v.s() as usize,
            v.t() as usize,
            v.m() as usize,
            v.n() as usize,
        );
        // Allowed values per position, in serialization order a b c d e f g.
        let mut choices: Vec<&[Z4]> = Vec::with_capacity(v.generator_count());
        choices.extend(std::iter::repeat_n(&Z4::ALL[..], r));
        choices.extend(std::iter::repeat_n(&Z4::UNITS[..], s));
        choices.extend(std::iter::repeat_n(&Z4::ALL[..], s));
        choices.extend(std::iter::repeat_n(&Z4::UNITS[..], t));
        choices.extend(std::iter::repeat_n(&[Z4::TWO][..], m));
        choices.extend(std::iter::repeat_n(&Z4::ALL[..], m));
        choices.extend(std::iter::repeat_n(&[Z4::TWO][..], n));

        let mut out = Vec::new();
        let mut digits = vec![0usize; choices.len()];
        loop {
            let flat: Vec<Z4> = digits.iter().zip(&choices).map(|(&d, c)| c[d]).collect();
            if flat.iter().any(|x| x.is_generator()) {
                let mut rest = flat.as_slice();
                let mut take = |len: usize| {
                    let (head, tail) = rest.split_at(len);
                    rest = tail;
                    head.to_vec()
                };
                let families = Families {
                    a: take(r),
                    b: take(s),
                    c: take(s),
                    d: take(t),
                    e: take(m),
                    f: take(m),
                    g: take(n),
                };
                out.push(Labeling::new(v, families)?);
            }
            // odometer, last position fastest
            let mut pos = digits.len();
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < choices[pos].len() {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }

    pub fn orbit_partition(&self, v: QuotientTuple) -> Result<OrbitPartition> {
        let labelings = self.enumerate_labelings(v)?;
        let index: HashMap<&Labeling, usize> =
            labelings.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let moves = Move::catalogue(v);
        let mut uf = UnionFind::new(labelings.len());
        for (i, lab) in labelings.iter().enumerate() {
            for mv in &moves {
                let image = mv.apply(lab)?;
                let j = *index.get(&image).ok_or_else(|| {
                    Error::Oracle(format!("{mv} leaves the admissible set of {v}"))
                })?;
                uf.union(i, j);
            }
        }

        let mut orbit_id_of_root: HashMap<usize, usize> = HashMap::new();
        let mut orbit_of = Vec::with_capacity(labelings.len());
        let mut representatives = Vec::new();
        let mut orbit_sizes = Vec::new();
        for i in 0..labelings.len() {
            let root = uf.find(i);
            let next = orbit_id_of_root.len();
            let id = *orbit_id_of_root.entry(root).or_insert(next);
            if id == next {
                // roots are minimal indices, and labelings are sorted
                let rep = labelings[root].clone();
                let k = NormalFormClass {
                    k: rep.odd_f_count(),
                };
                representatives.push((rep, k));
                orbit_sizes.push(0);
            }
            orbit_sizes[id] += 1;
            orbit_of.push(id);
        }

        Ok(OrbitPartition {
            tuple: v,
            labeling_count: labelings.len(),
            orbit_count: representatives.len(),
            representatives,
            orbit_sizes,
            labelings,
            orbit_of,
        })
    }

    pub fn verify_tuple(&self, v: QuotientTuple) -> Result<TupleVerdict> {
        let partition = self.orbit_partition(v)?;
        let expected = class_count(v);
        let mut ks: Vec<u32> = partition.representatives.iter().map(|(_, k)| k.k).collect();
        ks.sort_unstable();
        let first = if v.has_odd_source() { 0 } else { 1 };
        let wanted: Vec<u32> = (first..=v.m()).collect();
        let status = if partition.orbit_count == expected as usize && ks == wanted {
            Status::Pass
        } else {
            Status::Fail
        };
        Ok(TupleVerdict {
            tuple: v,
            labelings: partition.labeling_count,
            orbits: partition.orbit_count,
            expected,
            status,
            representatives: partition
                .representatives
                .into_iter()
                .map(|(labeling, k)| Representative { labeling, k: k.k })
                .collect(),
        })
    }

    /// Runs [`Oracle::verify_tuple`] on every tuple of genus `g` and checks
    /// the orbit total against the census total.
    pub fn verify_genus(&self, g: i64) -> Result<GenusVerdict> {
        let report = census(g)?;
        let tuples = admissible_tuples(g)?
            .into_par_iter()
            .map(|v| self.verify_tuple(v))
            .collect::<Result<Vec<_>>>()?;
        let orbit_total = tuples.iter().map(|t| t.orbits as u64).sum();
        let all_pass = tuples.iter().all(TupleVerdict::passed);
        let status = if all_pass && orbit_total == report.total {
            Status::Pass
        } else {
            Status::Fail
        };
        Ok(GenusVerdict {
            genus: report.genus,
            tuples,
            orbit_total,
            census_total: report.total,
            status,
        })
    }
}

pub fn enumerate_labelings(v: QuotientTuple) -> Result<Vec<Labeling>> {
    Oracle::default().enumerate_labelings(v)
}

pub fn orbit_partition(v: QuotientTuple) -> Result<OrbitPartition> {
    Oracle::default().orbit_partition(v)
}

pub fn verify_tuple(v: QuotientTuple) -> Result<TupleVerdict> {
    Oracle::default().verify_tuple(v)
}

pub fn verify_genus(g: i64) -> Result<GenusVerdict> {
    Oracle::default().verify_genus(g)
}

pub fn apply_move(labeling: &Labeling, mv: &Move) -> Result<Labeling> {
    mv.apply(labeling)
}

/// Number of `f_l` sent to a generator of Z4. Every move preserves the
/// parity of each `f` image up to permutation, so this count is invariant.
pub fn normal_form(labeling: &Labeling) -> Result<NormalFormClass> {
    if !labeling.is_admissible() {
        return Err(Error::Inadmissible);
    }
    Ok(NormalFormClass {
        k: labeling.odd_f_count(),
    })
}

pub fn are_equivalent(first: &Labeling, second: &Labeling) -> Result<bool> {
    if first.tuple() != second.tuple() {
        return Err(Error::IncomparableLabelings(first.tuple(), second.tuple()));
    }
    Ok(normal_form(first)? == normal_form(second)?)
}
