//! Generator images of a candidate epimorphism onto Z4.
//!
//! The orbifold fundamental group is generated by
//!
//! * `a_i` (1 <= i <= r), free;
//! * `b_j, c_j` (1 <= j <= s), with `b_j^4 = 1` and `[b_j, c_j] = 1`;
//! * `d_k` (1 <= k <= t), with `d_k^4 = 1`;
//! * `e_l, f_l` (1 <= l <= m), with `e_l^2 = 1` and `[e_l, f_l] = 1`;
//! * `g_q` (1 <= q <= n), with `g_q^2 = 1`.
//!
//! Z4 is abelian, so a homomorphism is fixed by these images and the
//! conjugating elements of the free product never show up.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::tuple::QuotientTuple;
use crate::z4::Z4;

/// A single generator of the orbifold fundamental group, zero-indexed
/// within its family.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F(usize),
    G(usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, i) = match *self {
            Generator::A(i) => ("a", i),
            Generator::B(i) => ("b", i),
            Generator::C(i) => ("c", i),
            Generator::D(i) => ("d", i),
            Generator::E(i) => ("e", i),
            Generator::F(i) => ("f", i),
            Generator::G(i) => ("g", i),
        };
        write!(f, "{name}{i}")
    }
}

/// Raw per-family image lists, before validation against a tuple.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Families {
    pub a: Vec<Z4>,
    pub b: Vec<Z4>,
    pub c: Vec<Z4>,
    pub d: Vec<Z4>,
    pub e: Vec<Z4>,
    pub f: Vec<Z4>,
    pub g: Vec<Z4>,
}

/// Images of every generator under a homomorphism to Z4.
///
/// Sequence lengths always match the tuple. Torsion and surjectivity are
/// not enforced here; see [`Labeling::is_admissible`]. The derived ordering
/// compares families in the order a, b, c, d, e, f, g, which for a fixed
/// tuple is the lexicographic order of the serialized labeling.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Labeling {
    tuple: QuotientTuple,
    a: Vec<Z4>,
    b: Vec<Z4>,
    c: Vec<Z4>,
    d: Vec<Z4>,
    e: Vec<Z4>,
    f: Vec<Z4>,
    g: Vec<Z4>,
}

/// The invariant `k`: how many `f_l` map to a generator of Z4.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NormalFormClass {
    pub k: u32,
}

impl Labeling {
    pub fn new(tuple: QuotientTuple, families: Families) -> Result<Self> {
        let Families {
            a,
            b,
            c,
            d,
            e,
            f,
            g,
        } = families;
        let expect = [
            ("a", a.len(), tuple.r()),
            ("b", b.len(), tuple.s()),
            ("c", c.len(), tuple.s()),
            ("d", d.len(), tuple.t()),
            ("e", e.len(), tuple.m()),
            ("f", f.len(), tuple.m()),
            ("g", g.len(), tuple.n()),
        ];
        for (name, got, want) in expect {
            if got != want as usize {
                return Err(Error::MalformedLabeling(format!(
                    "family {name} has {got} entries, tuple {tuple} requires {want}"
                )));
            }
        }
        Ok(Labeling {
            tuple,
            a,
            b,
            c,
            d,
            e,
            f,
            g,
        })
    }

    pub fn tuple(&self) -> QuotientTuple {
        self.tuple
    }

    pub fn a(&self) -> &[Z4] {
        &self.a
    }
    pub fn b(&self) -> &[Z4] {
        &self.b
    }
    pub fn c(&self) -> &[Z4] {
        &self.c
    }
    pub fn d(&self) -> &[Z4] {
        &self.d
    }
    pub fn e(&self) -> &[Z4] {
        &self.e
    }
    pub fn f(&self) -> &[Z4] {
        &self.f
    }
    pub fn g(&self) -> &[Z4] {
        &self.g
    }

    pub fn families(&self) -> Families {
        Families {
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
            d: self.d.clone(),
            e: self.e.clone(),
            f: self.f.clone(),
            g: self.g.clone(),
        }
    }

    /// Every generator of the tuple, in serialization order.
    pub fn generators(tuple: QuotientTuple) -> Vec<Generator> {
        let (r, s, t, m, n) = (
            tuple.r() as usize,
            tuple.s() as usize,
            tuple.t() as usize,
            tuple.m() as usize,
            tuple.n() as usize,
        );
        (0..r)
            .map(Generator::A)
            .chain((0..s).map(Generator::B))
            .chain((0..s).map(Generator::C))
            .chain((0..t).map(Generator::D))
            .chain((0..m).map(Generator::E))
            .chain((0..m).map(Generator::F))
            .chain((0..n).map(Generator::G))
            .collect()
    }

    /// Image of one generator, or `None` if the index is out of range.
    pub fn image(&self, gen: Generator) -> Option<Z4> {
        match gen {
            Generator::A(i) => self.a.get(i),
            Generator::B(i) => self.b.get(i),
            Generator::C(i) => self.c.get(i),
            Generator::D(i) => self.d.get(i),
            Generator::E(i) => self.e.get(i),
            Generator::F(i) => self.f.get(i),
            Generator::G(i) => self.g.get(i),
        }
        .copied()
    }

    /// All images in serialization order.
    pub fn values(&self) -> impl Iterator<Item = Z4> + '_ {
        self.a
            .iter()
            .chain(&self.b)
            .chain(&self.c)
            .chain(&self.d)
            .chain(&self.e)
            .chain(&self.f)
            .chain(&self.g)
            .copied()
    }

    /// Each torsion generator maps to an element of the same order, so the
    /// kernel meets no finite vertex group and is free.
    pub fn is_torsion_faithful(&self) -> bool {
        self.b.iter().chain(&self.d).all(|x| x.order() == 4)
            && self.e.iter().chain(&self.g).all(|x| x.order() == 2)
    }

    /// The images generate Z4.
    ///
    /// A subgroup of Z4 is proper iff it lies in `{0, 2}`, so this reduces
    /// to asking for one odd image.
    pub fn is_surjective(&self) -> bool {
        self.values().any(Z4::is_generator)
    }

    pub fn is_admissible(&self) -> bool {
        self.is_torsion_faithful() && self.is_surjective()
    }

    pub fn odd_f_count(&self) -> u32 {
        self.f.iter().filter(|x| x.is_generator()).count() as u32
    }

    pub(crate) fn families_mut(&mut self) -> FamiliesMut<'_> {
        FamiliesMut {
            a: &mut self.a,
            b: &mut self.b,
            c: &mut self.c,
            d: &mut self.d,
            e: &mut self.e,
            f: &mut self.f,
            g: &mut self.g,
        }
    }
}

pub(crate) struct FamiliesMut<'a> {
    pub a: &'a mut Vec<Z4>,
    pub b: &'a mut Vec<Z4>,
    pub c: &'a mut Vec<Z4>,
    pub d: &'a mut Vec<Z4>,
    pub e: &'a mut Vec<Z4>,
    pub f: &'a mut Vec<Z4>,
    pub g: &'a mut Vec<Z4>,
}

/// Free-standing form of [`Labeling::is_admissible`].
pub fn is_admissible(labeling: &Labeling) -> bool {
    labeling.is_admissible()
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LabelingJson {
    tuple: QuotientTuple,
    a: Vec<Z4>,
    b: Vec<Z4>,
    c: Vec<Z4>,
    d: Vec<Z4>,
    e: Vec<Z4>,
    f: Vec<Z4>,
    g: Vec<Z4>,
}

impl Serialize for Labeling {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        LabelingJson {
            tuple: self.tuple,
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
            d: self.d.clone(),
            e: self.e.clone(),
            f: self.f.clone(),
            g: self.g.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Labeling {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let LabelingJson {
            tuple,
            a,
            b,
            c,
            d,
            e,
            f,
            g,
        } = LabelingJson::deserialize(deserializer)?;
        Labeling::new(
            tuple,
            Families {
                a,
                b,
                c,
                d,
                e,
                f,
                g,
            },
        )
        .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(values: &[i64]) -> Vec<Z4> {
        values.iter().map(|&v| Z4::reduce(v)).collect()
    }

    fn tuple(v: [u32; 5]) -> QuotientTuple {
        QuotientTuple::try_from(v).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        let ok = Labeling::new(
            tuple([1, 0, 0, 0, 0]),
            Families {
                a: z(&[1]),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(is_admissible(&ok));

        let even = Labeling::new(
            tuple([1, 0, 0, 0, 0]),
            Families {
                a: z(&[2]),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(!is_admissible(&even));

        let only_g = Labeling::new(
            tuple([0, 0, 0, 0, 2]),
            Families {
                g: z(&[2, 2]),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(only_g.is_torsion_faithful());
        assert!(!is_admissible(&only_g));
    }

    #[test]
    fn torsion_violations_are_inadmissible() {
        let v = tuple([0, 1, 0, 1, 0]);
        let bad_b = Families {
            b: z(&[2]),
            c: z(&[1]),
            e: z(&[2]),
            f: z(&[1]),
            ..Default::default()
        };
        assert!(!Labeling::new(v, bad_b).unwrap().is_admissible());
        let bad_e = Families {
            b: z(&[1]),
            c: z(&[0]),
            e: z(&[0]),
            f: z(&[0]),
            ..Default::default()
        };
        assert!(!Labeling::new(v, bad_e).unwrap().is_admissible());
    }

    #[test]
    fn length_mismatch_is_rejected_at_construction() {
        let err = Labeling::new(
            tuple([0, 2, 0, 0, 0]),
            Families {
                b: z(&[1, 1]),
                c: z(&[0]),
                ..Default::default()
            },
        );
        assert!(matches!(err, Err(Error::MalformedLabeling(_))));
    }

    #[test]
    fn json_schema_round_trip() {
        let text = r#"{"tuple":[0,0,0,1,1],"a":[],"b":[],"c":[],"d":[],"e":[2],"f":[3],"g":[2]}"#;
        let lab: Labeling = serde_json::from_str(text).unwrap();
        assert_eq!(lab.f(), z(&[3]).as_slice());
        assert_eq!(serde_json::to_string(&lab).unwrap(), text);
    }

    #[test]
    fn json_rejects_bad_input() {
        let wrong_len =
            r#"{"tuple":[0,0,0,1,1],"a":[],"b":[],"c":[],"d":[],"e":[2,2],"f":[3],"g":[2]}"#;
        assert!(serde_json::from_str::<Labeling>(wrong_len).is_err());
        let out_of_range =
            r#"{"tuple":[1,0,0,0,0],"a":[5],"b":[],"c":[],"d":[],"e":[],"f":[],"g":[]}"#;
        assert!(serde_json::from_str::<Labeling>(out_of_range).is_err());
        let missing = r#"{"tuple":[1,0,0,0,0],"a":[1]}"#;
        assert!(serde_json::from_str::<Labeling>(missing).is_err());
    }

    #[test]
    fn generator_listing_follows_serialization_order() {
        let v = tuple([1, 1, 1, 1, 1]);
        let gens = Labeling::generators(v);
        assert_eq!(gens.len(), v.generator_count());
        assert_eq!(gens.first(), Some(&Generator::A(0)));
        assert_eq!(gens.last(), Some(&Generator::G(0)));
        assert!(gens.windows(2).all(|w| w[0] < w[1]));
    }
}
