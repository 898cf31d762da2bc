//! Elementary realizable automorphisms, as they act on labelings.
//!
//! A labeling `λ` is sent to `λ ∘ α`. Conjugating elements disappear in the
//! abelian target, so every realizable `α` acts on images through block
//! permutations, the sign and shift parameters on each branch, and the
//! free-factor multiplications that absorb elements of other factors into
//! an `a_i`.

use std::fmt;

use crate::error::{Error, Result};
use crate::labeling::{Generator, Labeling};
use crate::tuple::QuotientTuple;
use crate::z4::Z4;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn apply(self, x: Z4) -> Z4 {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }
}

/// Families whose branches may be permuted among themselves. `B` moves the
/// pair `(b_j, c_j)` and `E` the pair `(e_l, f_l)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    A,
    B,
    D,
    E,
    G,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    BlockSwap {
        block: Block,
        i: usize,
        j: usize,
    },
    /// `b_j -> ε b_j`, `c_j -> v b_j + ε c_j`.
    BMove {
        j: usize,
        sign: Sign,
        v: Z4,
    },
    DMove {
        k: usize,
        sign: Sign,
    },
    /// `f_l -> w e_l + ε f_l` with `w` in `{0, 1}`; `e_l -> ε e_l` is trivial
    /// on values.
    FMove {
        l: usize,
        sign: Sign,
        w: bool,
    },
    GMove {
        q: usize,
        sign: Sign,
    },
    ANegate {
        i: usize,
    },
    /// `a_i -> a_i ± source`, where `source` lies in a different factor.
    AAbsorb {
        i: usize,
        source: Generator,
        sign: Sign,
    },
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

fn block_len(tuple: QuotientTuple, block: Block) -> u32 {
    match block {
        Block::A => tuple.r(),
        Block::B => tuple.s(),
        Block::D => tuple.t(),
        Block::E => tuple.m(),
        Block::G => tuple.n(),
    }
}

fn in_range(index: usize, len: u32) -> bool {
    index < len as usize
}

impl Move {
    /// Every elementary move for `tuple`, identities excluded, in a fixed
    /// order.
    pub fn catalogue(tuple: QuotientTuple) -> Vec<Move> {
        let mut out = Vec::new();
        for block in [Block::A, Block::B, Block::D, Block::E, Block::G] {
            let len = block_len(tuple, block) as usize;
            for i in 0..len {
                for j in i + 1..len {
                    out.push(Move::BlockSwap { block, i, j });
                }
            }
        }
        for j in 0..tuple.s() as usize {
            for sign in Sign::BOTH {
                for v in Z4::ALL {
                    if sign == Sign::Plus && v == Z4::ZERO {
                        continue;
                    }
                    out.push(Move::BMove { j, sign, v });
                }
            }
        }
        for k in 0..tuple.t() as usize {
            out.push(Move::DMove {
                k,
                sign: Sign::Minus,
            });
        }
        for l in 0..tuple.m() as usize {
            for sign in Sign::BOTH {
                for w in [false, true] {
                    if sign == Sign::Plus && !w {
                        continue;
                    }
                    out.push(Move::FMove { l, sign, w });
                }
            }
        }
        for q in 0..tuple.n() as usize {
            out.push(Move::GMove {
                q,
                sign: Sign::Minus,
            });
        }
        let generators = Labeling::generators(tuple);
        for i in 0..tuple.r() as usize {
            out.push(Move::ANegate { i });
            for &source in &generators {
                if source == Generator::A(i) || matches!(source, Generator::G(_)) {
                    continue;
                }
                for sign in Sign::BOTH {
                    out.push(Move::AAbsorb { i, source, sign });
                }
            }
        }
        out
    }

    pub fn validate(&self, tuple: QuotientTuple) -> Result<()> {
        let ok = match *self {
            Move::BlockSwap { block, i, j } => {
                let len = block_len(tuple, block);
                in_range(i, len) && in_range(j, len)
            }
            Move::BMove { j, .. } => in_range(j, tuple.s()),
            Move::DMove { k, .. } => in_range(k, tuple.t()),
            Move::FMove { l, .. } => in_range(l, tuple.m()),
            Move::GMove { q, .. } => in_range(q, tuple.n()),
            Move::ANegate { i } => in_range(i, tuple.r()),
            Move::AAbsorb { i, source, .. } => {
                let source_ok = match source {
                    Generator::A(j) => j != i && in_range(j, tuple.r()),
                    Generator::B(j) | Generator::C(j) => in_range(j, tuple.s()),
                    Generator::D(k) => in_range(k, tuple.t()),
                    Generator::E(l) | Generator::F(l) => in_range(l, tuple.m()),
                    // Z2 factors are not valid absorption sources.
                    Generator::G(_) => false,
                };
                in_range(i, tuple.r()) && source_ok
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidMove(format!(
                "{self} does not apply to tuple {tuple}"
            )))
        }
    }

    /// A move undoing this one in a single step.
    pub fn inverse(&self) -> Move {
        match *self {
            Move::BMove { j, sign, v } => Move::BMove { j, sign, v: -v },
            Move::AAbsorb { i, source, sign } => Move::AAbsorb {
                i,
                source,
                sign: match sign {
                    Sign::Plus => Sign::Minus,
                    Sign::Minus => Sign::Plus,
                },
            },
            // the remaining moves are involutions on values
            other => other,
        }
    }

    pub fn apply(&self, labeling: &Labeling) -> Result<Labeling> {
        self.validate(labeling.tuple())?;
        let source_value = match *self {
            Move::AAbsorb { source, .. } => labeling.image(source),
            _ => None,
        };
        let mut out = labeling.clone();
        let fam = out.families_mut();
        match *self {
            Move::BlockSwap { block, i, j } => match block {
                Block::A => fam.a.swap(i, j),
                Block::B => {
                    fam.b.swap(i, j);
                    fam.c.swap(i, j);
                }
                Block::D => fam.d.swap(i, j),
                Block::E => {
                    fam.e.swap(i, j);
                    fam.f.swap(i, j);
                }
                Block::G => fam.g.swap(i, j),
            },
            Move::BMove { j, sign, v } => {
                let b = fam.b[j];
                fam.b[j] = sign.apply(b);
                fam.c[j] = i64::from(v.value()) * b + sign.apply(fam.c[j]);
            }
            Move::DMove { k, sign } => fam.d[k] = sign.apply(fam.d[k]),
            Move::FMove { l, sign, w } => {
                let e = fam.e[l];
                let shift = if w { e } else { Z4::ZERO };
                fam.f[l] = shift + sign.apply(fam.f[l]);
                fam.e[l] = sign.apply(e);
            }
            Move::GMove { q, sign } => fam.g[q] = sign.apply(fam.g[q]),
            Move::ANegate { i } => fam.a[i] = -fam.a[i],
            Move::AAbsorb { i, sign, .. } => {
                let x = source_value.expect("validated source");
                fam.a[i] += sign.apply(x);
            }
        }
        Ok(out)
    }
}
