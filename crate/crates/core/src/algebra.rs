//! Affine algebras, their classical parts and the letters of `B_1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A1,
    A2Odd,
    A2Even,
    B1,
    C1,
    D1,
    D2,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A1,
        Family::A2Odd,
        Family::A2Even,
        Family::B1,
        Family::C1,
        Family::D1,
        Family::D2,
    ];

    pub fn min_rank(self) -> u8 {
        match self {
            Family::A1 | Family::A2Even | Family::C1 | Family::D2 => 2,
            Family::A2Odd | Family::B1 => 3,
            Family::D1 => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::A1 => "A1",
            Family::A2Odd => "A2odd",
            Family::A2Even => "A2even",
            Family::B1 => "B1",
            Family::C1 => "C1",
            Family::D1 => "D1",
            Family::D2 => "D2",
        }
    }

    pub fn type_class(self) -> TypeClass {
        match self {
            Family::A1 => TypeClass::A,
            Family::A2Odd | Family::B1 | Family::D1 => TypeClass::I,
            Family::C1 => TypeClass::II,
            Family::A2Even | Family::D2 => TypeClass::III,
        }
    }

    pub fn classical(self) -> Classical {
        match self {
            Family::A1 => Classical::A,
            Family::A2Odd | Family::A2Even | Family::C1 => Classical::C,
            Family::B1 | Family::D2 => Classical::B,
            Family::D1 => Classical::D,
        }
    }

    /// Whether `B_1` carries the letter `0`.
    pub fn has_zero(self) -> bool {
        matches!(self, Family::B1 | Family::D2)
    }

    /// Whether `B_1` carries the classical singlet `phi`.
    pub fn has_phi(self) -> bool {
        matches!(self, Family::A2Even | Family::D2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TypeClass {
    A,
    I,
    II,
    III,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classical {
    A,
    B,
    C,
    D,
}

/// An affine algebra `g` of rank `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Algebra {
    family: Family,
    rank: u8,
}

impl Algebra {
    /// Builds an algebra, enforcing the family's minimum rank.
    pub fn new(family: Family, rank: u8) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(Error::RankTooSmall {
                family: family.name(),
                rank,
                min: family.min_rank(),
            });
        }
        Ok(Algebra { family, rank })
    }

    /// Builds an algebra without the minimum-rank check. Used for soliton
    /// labels, which live one rank below the automaton.
    pub fn new_unchecked(family: Family, rank: u8) -> Result<Self> {
        let floor = match family.classical() {
            Classical::A => 1,
            Classical::B | Classical::C => 1,
            Classical::D => 2,
        };
        if rank < floor {
            return Err(Error::RankTooSmall { family: family.name(), rank, min: floor });
        }
        Ok(Algebra { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank as usize
    }

    pub fn type_class(self) -> TypeClass {
        self.family.type_class()
    }

    pub fn classical(self) -> Classical {
        self.family.classical()
    }

    /// `2` for Type III, `1` otherwise.
    pub fn varsigma(self) -> i64 {
        if self.type_class() == TypeClass::III {
            2
        } else {
            1
        }
    }

    /// The label algebra: same family at rank `n-1`.
    pub fn lowered(self) -> Result<Self> {
        if self.rank == 0 {
            return Err(Error::RankTooSmall { family: self.family.name(), rank: 0, min: 1 });
        }
        Algebra::new_unchecked(self.family, self.rank - 1)
    }

    /// Whether the lowered algebra still meets the family's rank bound.
    pub fn lowered_is_standard(self) -> bool {
        self.rank > self.family.min_rank()
    }

    /// The Type II algebra whose tables a Type III algebra is pulled back from.
    pub fn omega_target(self) -> Result<Self> {
        match self.family {
            Family::A2Even | Family::D2 => Algebra::new_unchecked(Family::C1, self.rank),
            _ => Err(Error::Unsupported("omega is only defined for Type III")),
        }
    }

    /// Number of classical Dynkin nodes.
    pub fn nodes(self) -> usize {
        self.rank()
    }

    /// Length of a weight vector in the `e`-basis.
    pub fn weight_len(self) -> usize {
        match self.classical() {
            Classical::A => self.rank() + 1,
            _ => self.rank(),
        }
    }

    /// The letters of `B_1` carried by coordinates, in increasing order.
    pub fn coordinate_letters(self) -> Vec<Letter> {
        let n = self.rank;
        if self.family == Family::A1 {
            return (1..=n + 1).map(Letter::Plain).collect();
        }
        let mut v: Vec<Letter> = (1..=n).map(Letter::Plain).collect();
        if self.family.has_zero() {
            v.push(Letter::Zero);
        }
        v.extend((1..=n).rev().map(Letter::Bar));
        v
    }

    /// All letters of `B_1` in the canonical order, `phi` last.
    pub fn letters(self) -> Vec<Letter> {
        let mut v = self.coordinate_letters();
        if self.family.has_phi() {
            v.push(Letter::Phi);
        }
        v
    }

    pub fn num_coords(self) -> usize {
        let n = self.rank();
        match self.family {
            Family::A1 => n + 1,
            Family::B1 | Family::D2 => 2 * n + 1,
            _ => 2 * n,
        }
    }

    /// Coordinate slot of a letter, `None` for `phi` or foreign letters.
    pub fn coord_index(self, x: Letter) -> Option<usize> {
        let n = self.rank();
        let z = usize::from(self.family.has_zero());
        match x {
            Letter::Plain(i) => {
                let i = i as usize;
                let top = if self.family == Family::A1 { n + 1 } else { n };
                (i >= 1 && i <= top).then(|| i - 1)
            }
            Letter::Zero => self.family.has_zero().then_some(n),
            Letter::Bar(i) => {
                let i = i as usize;
                (self.family != Family::A1 && i >= 1 && i <= n).then(|| n + z + (n - i))
            }
            Letter::Phi => None,
        }
    }

    /// Position in the canonical order; larger means later.
    pub fn letter_order(self, x: Letter) -> usize {
        match self.coord_index(x) {
            Some(i) => i,
            None => self.num_coords(),
        }
    }

    pub fn contains_letter(self, x: Letter) -> bool {
        match x {
            Letter::Phi => self.family.has_phi(),
            _ => self.coord_index(x).is_some(),
        }
    }

    /// `f_i` on the classical vector representation.
    pub fn f_letter(self, i: usize, x: Letter) -> Option<Letter> {
        let n = self.rank();
        let i8 = i as u8;
        if i == 0 || i > n {
            return None;
        }
        match (self.classical(), x) {
            (_, Letter::Phi) => None,
            (Classical::A, Letter::Plain(j)) => (j == i8).then_some(Letter::Plain(i8 + 1)),
            (Classical::A, _) => None,
            (_, Letter::Plain(j)) if i < n && j == i8 => Some(Letter::Plain(i8 + 1)),
            (_, Letter::Bar(j)) if i < n && j == i8 + 1 => Some(Letter::Bar(i8)),
            (_, _) if i < n => None,
            (Classical::B, Letter::Plain(j)) if j == i8 => Some(Letter::Zero),
            (Classical::B, Letter::Zero) => Some(Letter::Bar(i8)),
            (Classical::C, Letter::Plain(j)) if j == i8 => Some(Letter::Bar(i8)),
            (Classical::D, Letter::Plain(j)) if j + 1 == i8 => Some(Letter::Bar(i8)),
            (Classical::D, Letter::Plain(j)) if j == i8 => Some(Letter::Bar(i8 - 1)),
            _ => None,
        }
    }

    /// `e_i` on the classical vector representation.
    pub fn e_letter(self, i: usize, x: Letter) -> Option<Letter> {
        self.letters().into_iter().find(|&y| self.f_letter(i, y) == Some(x))
    }

    pub fn phi_letter(self, i: usize, x: Letter) -> u32 {
        let mut k = 0;
        let mut y = x;
        while let Some(z) = self.f_letter(i, y) {
            k += 1;
            y = z;
        }
        k
    }

    pub fn eps_letter(self, i: usize, x: Letter) -> u32 {
        let mut k = 0;
        let mut y = x;
        while let Some(z) = self.e_letter(i, y) {
            k += 1;
            y = z;
        }
        k
    }

    /// Weight of a letter in the `e`-basis.
    pub fn letter_weight(self, x: Letter) -> Vec<i64> {
        let mut w = vec![0; self.weight_len()];
        match x {
            Letter::Plain(i) => w[i as usize - 1] = 1,
            Letter::Bar(i) => w[i as usize - 1] = -1,
            Letter::Zero | Letter::Phi => {}
        }
        w
    }

    /// Simple root `alpha_i` in the `e`-basis.
    pub fn simple_root(self, i: usize) -> Vec<i64> {
        let n = self.rank();
        let mut w = vec![0; self.weight_len()];
        if i < n || self.classical() == Classical::A {
            w[i - 1] = 1;
            w[i] = -1;
            return w;
        }
        match self.classical() {
            Classical::B => w[n - 1] = 1,
            Classical::C => w[n - 1] = 2,
            Classical::D => {
                w[n - 2] = 1;
                w[n - 1] = 1;
            }
            Classical::A => unreachable!(),
        }
        w
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family.name(), self.rank)
    }
}

impl FromStr for Algebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (fam, rank) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("algebra descriptor `{s}` needs FAMILY:RANK")))?;
        let family = match fam.to_ascii_lowercase().as_str() {
            "a1" => Family::A1,
            "a2odd" => Family::A2Odd,
            "a2even" => Family::A2Even,
            "b1" => Family::B1,
            "c1" => Family::C1,
            "d1" => Family::D1,
            "d2" => Family::D2,
            _ => return Err(Error::Parse(format!("unknown family `{fam}`"))),
        };
        let rank: u8 = rank
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank `{rank}`")))?;
        Algebra::new(family, rank)
    }
}

/// A letter of `B_1`: `i`, `0`, `i-bar` or `phi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Plain(u8),
    Zero,
    Bar(u8),
    Phi,
}

impl Letter {
    /// Index shift used by the soliton embedding, `phi` and `0` are fixed.
    pub fn shifted(self, by: i32) -> Option<Letter> {
        let sh = |i: u8| -> Option<u8> {
            let j = i as i32 + by;
            (j >= 1).then_some(j as u8)
        };
        match self {
            Letter::Plain(i) => sh(i).map(Letter::Plain),
            Letter::Bar(i) => sh(i).map(Letter::Bar),
            other => Some(other),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Plain(i) => write!(f, "{i}"),
            Letter::Zero => write!(f, "0"),
            Letter::Bar(i) => write!(f, "{i}b"),
            Letter::Phi => write!(f, "phi"),
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "phi" {
            return Ok(Letter::Phi);
        }
        if s == "0" {
            return Ok(Letter::Zero);
        }
        let (num, bar) = match s.strip_suffix('b') {
            Some(rest) => (rest, true),
            None => (s, false),
        };
        let i: u8 = num
            .parse()
            .map_err(|_| Error::Parse(format!("bad letter `{s}`")))?;
        if i == 0 {
            return Err(Error::Parse(format!("bad letter `{s}`")));
        }
        Ok(if bar { Letter::Bar(i) } else { Letter::Plain(i) })
    }
}
