//! Z2×Z2 degrees, the sign rule, and index signatures.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradingError {
    #[error("a gl signature needs at least one index (got m1=m2=n1=n2=0)")]
    EmptySignature,
}

/// An element `(a1, a2)` of Z2×Z2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Degree {
    a1: bool,
    a2: bool,
}

impl Degree {
    pub const ZERO: Degree = Degree { a1: false, a2: false };
    /// `(1,1)`: the other "even" class, in which `dot` with itself vanishes.
    pub const BOTH: Degree = Degree { a1: true, a2: true };
    pub const FIRST: Degree = Degree { a1: true, a2: false };
    pub const SECOND: Degree = Degree { a1: false, a2: true };

    /// All four degrees in lexicographic order.
    pub const ALL: [Degree; 4] = [Degree::ZERO, Degree::SECOND, Degree::FIRST, Degree::BOTH];

    pub const fn new(a1: u8, a2: u8) -> Self {
        Degree { a1: a1 & 1 == 1, a2: a2 & 1 == 1 }
    }

    pub fn a1(self) -> u8 {
        self.a1 as u8
    }

    pub fn a2(self) -> u8 {
        self.a2 as u8
    }

    pub fn bits(self) -> [u8; 2] {
        [self.a1(), self.a2()]
    }

    /// Index in `0..4` used for dense per-degree tables.
    pub fn index(self) -> usize {
        (self.a1() as usize) << 1 | self.a2() as usize
    }

    /// The symmetric form `a1·b1 + a2·b2 mod 2` driving every sign `(−1)^{a·b}`.
    pub fn dot(self, other: Degree) -> u8 {
        ((self.a1 & other.a1) ^ (self.a2 & other.a2)) as u8
    }

    /// The alternating form `a1·b2 − a2·b1 mod 2` of Z2×Z2-graded Lie algebras.
    /// Only the sign function is provided.
    pub fn dot_alt(self, other: Degree) -> u8 {
        ((self.a1 & other.a2) ^ (self.a2 & other.a1)) as u8
    }

    /// `(−1)^{a·b}` as `±1`.
    pub fn sign(self, other: Degree) -> i64 {
        if self.dot(other) == 1 {
            -1
        } else {
            1
        }
    }

    /// Parity in the coarser Z2 grading: `(0,0)` and `(1,1)` are even.
    pub fn is_odd(self) -> bool {
        self.a1 ^ self.a2
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        Degree { a1: self.a1 ^ rhs.a1, a2: self.a2 ^ rhs.a2 }
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a1(), self.a2())
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.bits().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [a1, a2] = <[u8; 2]>::deserialize(deserializer)?;
        if a1 > 1 || a2 > 1 {
            return Err(serde::de::Error::custom("degree components must be 0 or 1"));
        }
        Ok(Degree::new(a1, a2))
    }
}

/// The degree attached to each row/column index of a square matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Signature(Vec<Degree>);

impl Signature {
    pub fn new(degrees: Vec<Degree>) -> Self {
        Signature(degrees)
    }

    /// Block order `(0,0)^m1, (1,1)^m2, (1,0)^n1, (0,1)^n2` of gl(m1,m2|n1,n2).
    pub fn gl(m1: usize, m2: usize, n1: usize, n2: usize) -> Result<Self, GradingError> {
        if m1 + m2 + n1 + n2 == 0 {
            return Err(GradingError::EmptySignature);
        }
        Ok(Signature::from_blocks(&[
            (m1, Degree::ZERO),
            (m2, Degree::BOTH),
            (n1, Degree::FIRST),
            (n2, Degree::SECOND),
        ]))
    }

    /// The permuted index layout of osp(2m1+1,2m2|2n1,2n2): blocks of sizes
    /// `m1, m2, m1, m2, 1, n1, n2, n1, n2`.
    pub fn osp(m1: usize, m2: usize, n1: usize, n2: usize) -> Self {
        Signature::from_blocks(&Self::osp_blocks(m1, m2, n1, n2))
    }

    /// The osp layout with the middle index removed (type D).
    pub fn osp_even(m1: usize, m2: usize, n1: usize, n2: usize) -> Self {
        let mut blocks = Self::osp_blocks(m1, m2, n1, n2);
        blocks[4].0 = 0;
        Signature::from_blocks(&blocks)
    }

    pub(crate) fn osp_blocks(m1: usize, m2: usize, n1: usize, n2: usize) -> [(usize, Degree); 9] {
        [
            (m1, Degree::ZERO),
            (m2, Degree::BOTH),
            (m1, Degree::ZERO),
            (m2, Degree::BOTH),
            (1, Degree::ZERO),
            (n1, Degree::FIRST),
            (n2, Degree::SECOND),
            (n1, Degree::FIRST),
            (n2, Degree::SECOND),
        ]
    }

    fn from_blocks(blocks: &[(usize, Degree)]) -> Self {
        Signature(blocks.iter().flat_map(|&(n, d)| std::iter::repeat_n(d, n)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree of index `i` (0-based).
    pub fn degree(&self, i: usize) -> Degree {
        self.0[i]
    }

    /// Degree of the elementary position `(i, j)`: `d(i) + d(j)`.
    pub fn position_degree(&self, i: usize, j: usize) -> Degree {
        self.0[i] + self.0[j]
    }

    pub fn degrees(&self) -> &[Degree] {
        &self.0
    }

    /// `+1` on indices of degree (0,0)/(1,1), `−1` on (1,0)/(0,1).
    pub fn supertrace_sign(&self, i: usize) -> i64 {
        if self.0[i].is_odd() {
            -1
        } else {
            1
        }
    }
}
