//! Enumeration and verification of orientation-preserving Z4-actions on
//! handlebodies.
//!
//! A quotient type is a 5-tuple `(r, s, t, m, n)` counting the branch
//! families of a star-shaped graph of groups. Each action with that quotient
//! corresponds to an epimorphism from the orbifold fundamental group
//!
//! ```text
//! Z^{*r} * (Z4 x Z)^{*s} * Z4^{*t} * (Z2 x Z)^{*m} * Z2^{*n}  ->  Z4
//! ```
//!
//! with torsion-free kernel. The [`enumeration`] module solves the genus
//! equation and evaluates the closed-form class count; the [`orbits`] module
//! recomputes the same counts by brute force, closing the set of labelings
//! under the realizable automorphism moves.

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod labeling;
pub mod moves;
pub mod orbits;
pub mod report;
pub mod tuple;
pub mod z4;

pub use enumeration::{
    admissible_tuples, census, census_sequence, check_boundary_free_corollary,
    check_even_genus_corollary, class_count, euler_characteristic, genus_of, CensusReport,
    CorollaryVerdict, TupleCount,
};
pub use error::{Error, Result};
pub use labeling::{Generator, Labeling, NormalFormClass};
pub use moves::{Block, Move};
pub use orbits::{
    apply_move, are_equivalent, enumerate_labelings, normal_form, orbit_partition, verify_genus,
    verify_tuple, GenusVerdict, Oracle, OrbitPartition, Status, TupleVerdict, DEFAULT_MAX_STATES,
};
pub use report::{build_sequence_file, render, Format, SequenceRecord, Verification};
pub use tuple::QuotientTuple;
pub use z4::Z4;
