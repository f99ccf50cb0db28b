//! Elements of `B_l` in coordinates.

use std::fmt;

use crate::algebra::{Algebra, Family, Letter};
use crate::error::{Error, Result};

/// An element of `B_l`, stored as its coordinate vector.
///
/// Coordinates follow the letter order of [`Algebra::coordinate_letters`]:
/// `(x_1..x_n, [x_0,] xb_n..xb_1)`, or `(x_1..x_{n+1})` for `A1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Row {
    l: u16,
    x: Vec<u16>,
}

impl Row {
    /// Builds and validates an element of `B_l`.
    pub fn new(alg: Algebra, l: u16, x: Vec<u16>) -> Result<Row> {
        let r = Row { l, x };
        r.check(alg)?;
        Ok(r)
    }

    /// The classically highest element `(s) = 1^s` of `B_l`.
    pub fn ones(alg: Algebra, l: u16, s: u16) -> Row {
        let mut x = vec![0; alg.num_coords()];
        x[0] = s;
        Row { l, x }
    }

    /// `u_l`, the vacuum of `B_l`.
    pub fn vacuum(alg: Algebra, l: u16) -> Row {
        Row::ones(alg, l, l)
    }

    /// A letter as an element of `B_1`.
    pub fn letter(alg: Algebra, a: Letter) -> Result<Row> {
        let mut x = vec![0; alg.num_coords()];
        match a {
            Letter::Phi if alg.family().has_phi() => {}
            _ => {
                let i = alg
                    .coord_index(a)
                    .ok_or_else(|| Error::Parse(format!("letter {a} not in B_1 of {alg}")))?;
                x[i] = 1;
            }
        }
        Ok(Row { l: 1, x })
    }

    /// Reads back a `B_1` element as a letter.
    pub fn as_letter(&self, alg: Algebra) -> Option<Letter> {
        if self.l != 1 {
            return None;
        }
        let letters = alg.coordinate_letters();
        match self.x.iter().position(|&v| v == 1) {
            Some(i) => Some(letters[i]),
            None => alg.family().has_phi().then_some(Letter::Phi),
        }
    }

    pub fn l(&self) -> u16 {
        self.l
    }

    pub fn coords(&self) -> &[u16] {
        &self.x
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [u16] {
        &mut self.x
    }

    /// `s(b)`, the number of letters of the row word.
    pub fn size(&self) -> u16 {
        self.x.iter().sum()
    }

    pub fn is_vacuum(&self) -> bool {
        self.x[0] == self.l && self.size() == self.l
    }

    /// Coordinate of a letter, zero for letters without a slot.
    pub fn count(&self, alg: Algebra, a: Letter) -> u16 {
        alg.coord_index(a).map_or(0, |i| self.x[i])
    }

    /// Membership test for `B_l`.
    pub fn check(&self, alg: Algebra) -> Result<()> {
        let bad = |detail: String| Err(Error::NotInCrystal { l: self.l, detail });
        if self.x.len() != alg.num_coords() {
            return bad(format!("expected {} coordinates, got {}", alg.num_coords(), self.x.len()));
        }
        let s = self.size();
        let l = self.l;
        let n = alg.rank();
        let ok_sum = match alg.family() {
            Family::A1 | Family::A2Odd | Family::B1 | Family::D1 => s == l,
            Family::C1 => s <= l && (l - s) % 2 == 0,
            Family::A2Even | Family::D2 => s <= l,
        };
        if !ok_sum {
            return bad(format!("coordinate sum {s} not allowed"));
        }
        if alg.family().has_zero() && self.x[n] > 1 {
            return bad("x_0 must be 0 or 1".into());
        }
        if alg.family() == Family::D1 && self.x[n - 1] > 0 && self.x[n] > 0 {
            return bad("x_n and xb_n cannot both be positive".into());
        }
        Ok(())
    }

    /// Allowed values of `s(b)` in `B_l`, largest first.
    pub fn allowed_sizes(alg: Algebra, l: u16) -> Vec<u16> {
        match alg.family() {
            Family::A1 | Family::A2Odd | Family::B1 | Family::D1 => vec![l],
            Family::C1 => (0..=l).rev().step_by(2).collect(),
            Family::A2Even | Family::D2 => (0..=l).rev().collect(),
        }
    }

    /// All elements of `B_l` in increasing lexicographic order.
    pub fn enumerate(alg: Algebra, l: u16) -> Vec<Row> {
        let m = alg.num_coords();
        let mut out = Vec::new();
        for s in Row::allowed_sizes(alg, l) {
            let mut cur = vec![0u16; m];
            compositions(&mut cur, 0, s, &mut |x| {
                let r = Row { l, x: x.to_vec() };
                if r.check(alg).is_ok() {
                    out.push(r);
                }
            });
        }
        out.sort();
        out
    }

    /// The row word: letters in weakly decreasing order, as `(letter, multiplicity)`.
    pub fn word_groups(&self, alg: Algebra) -> Vec<(Letter, u16)> {
        let letters = alg.coordinate_letters();
        (0..self.x.len())
            .rev()
            .filter(|&i| self.x[i] > 0)
            .map(|i| (letters[i], self.x[i]))
            .collect()
    }

    /// The row word with letters repeated.
    pub fn word(&self, alg: Algebra) -> Vec<Letter> {
        self.word_groups(alg)
            .into_iter()
            .flat_map(|(a, k)| std::iter::repeat(a).take(k as usize))
            .collect()
    }

    /// Builds a row from a weakly decreasing word of length at most `l`.
    pub fn from_word(alg: Algebra, l: u16, word: &[Letter]) -> Result<Row> {
        let mut x = vec![0u16; alg.num_coords()];
        for &a in word {
            let i = alg
                .coord_index(a)
                .ok_or_else(|| Error::Parse(format!("letter {a} has no coordinate in {alg}")))?;
            x[i] += 1;
        }
        Row::new(alg, l, x)
    }

    pub fn weight(&self, alg: Algebra) -> Vec<i64> {
        let mut w = vec![0i64; alg.weight_len()];
        for (i, a) in alg.coordinate_letters().into_iter().enumerate() {
            for (k, v) in alg.letter_weight(a).into_iter().enumerate() {
                w[k] += v * self.x[i] as i64;
            }
        }
        w
    }

    /// Text form `B[l](x,...)`; `B_1` elements print as bare letters.
    pub fn render(&self, alg: Algebra) -> String {
        match self.as_letter(alg) {
            Some(a) => a.to_string(),
            None => format!("B[{}]{}", self.l, self.tuple()),
        }
    }

    /// Coordinates as `(x,...)`.
    pub fn tuple(&self) -> String {
        let parts: Vec<String> = self.x.iter().map(|v| v.to_string()).collect();
        format!("({})", parts.join(","))
    }

    /// Parses `(x,...)` with a known `l`, or `(x,...)` with `l` taken as the
    /// smallest value consistent with the family when `l` is `None`.
    pub fn parse_tuple(alg: Algebra, l: Option<u16>, s: &str) -> Result<Row> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected (x,...) but got `{s}`")))?;
        let x: Vec<u16> = inner
            .split(',')
            .map(|t| t.trim().parse::<u16>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("bad coordinates `{s}`")))?;
        let l = l.unwrap_or_else(|| x.iter().sum());
        Row::new(alg, l, x)
    }

    /// Parses a cell token: a letter or `B[l](x,...)`.
    pub fn parse_cell(alg: Algebra, tok: &str) -> Result<Row> {
        let tok = tok.trim();
        if let Some(rest) = tok.strip_prefix("B[") {
            let (l, tuple) = rest
                .split_once(']')
                .ok_or_else(|| Error::Parse(format!("bad cell `{tok}`")))?;
            let l: u16 = l.parse().map_err(|_| Error::Parse(format!("bad capacity in `{tok}`")))?;
            return Row::parse_tuple(alg, Some(l), tuple);
        }
        let a: Letter = tok.parse()?;
        if !alg.contains_letter(a) {
            return Err(Error::Parse(format!("letter {a} not in B_1 of {alg}")));
        }
        Row::letter(alg, a)
    }
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B[{}]{}", self.l, self.tuple())
    }
}

fn compositions(cur: &mut Vec<u16>, i: usize, left: u16, f: &mut impl FnMut(&[u16])) {
    if i + 1 == cur.len() {
        cur[i] = left;
        f(cur);
        cur[i] = 0;
        return;
    }
    for v in 0..=left {
        cur[i] = v;
        compositions(cur, i + 1, left - v, f);
    }
    cur[i] = 0;
}
