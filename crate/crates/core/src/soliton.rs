//! Solitons: the embedding `iota_l`, detection with phases, and scattering runs.

use std::fmt;

use crate::algebra::{Algebra, Letter, TypeClass};
use crate::automaton::{evolve_tl, State};
use crate::error::{Error, Result};
use crate::rmatrix::{r_affine, Aff};
use crate::row::Row;

/// A soliton label `z^phase b`, `b` in `B_l` of the lowered algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub phase: i64,
    pub b: Row,
}

impl Label {
    pub fn new(phase: i64, b: Row) -> Label {
        Label { phase, b }
    }

    pub fn len(&self) -> u16 {
        self.b.l()
    }

    pub fn is_empty(&self) -> bool {
        self.b.l() == 0
    }

    pub fn aff(&self) -> Aff {
        Aff::new(self.phase, self.b.clone())
    }

    pub fn from_aff(a: Aff) -> Label {
        Label { phase: a.d, b: a.row }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z^{} {}", self.phase, self.b)
    }
}

fn padded(alg: Algebra) -> bool {
    matches!(alg.type_class(), TypeClass::II | TypeClass::III)
}

/// `iota_l(b)` as a word over `B_1` of `alg`; `b` lives in `B_l` of `alg.lowered()`.
pub fn iota(alg: Algebra, b: &Row) -> Result<Vec<Letter>> {
    let low = alg.lowered()?;
    b.check(low)?;
    let l = b.l();
    let s = b.size();
    let mut w = Vec::with_capacity(l as usize);
    let pad = if padded(alg) { (l - s) / 2 } else { 0 };
    if padded(alg) && (l - s) % 2 == 1 {
        if alg.type_class() != TypeClass::III {
            return Err(Error::NotInCrystal { l, detail: "odd l - s(b) outside Type III".into() });
        }
        w.push(Letter::Phi);
    }
    w.extend(std::iter::repeat(Letter::Bar(1)).take(pad as usize));
    for a in b.word(low) {
        w.push(a.shifted(1).expect("shift up stays positive"));
    }
    w.extend(std::iter::repeat(Letter::Plain(1)).take(pad as usize));
    Ok(w)
}

/// `iota_l(b)` as `B_1` sites.
pub fn iota_cells(alg: Algebra, b: &Row) -> Result<Vec<Row>> {
    iota(alg, b)?.into_iter().map(|a| Row::letter(alg, a)).collect()
}

/// Recovers `b` from a full `iota` word; fails unless the word is an image.
pub fn uniota(alg: Algebra, word: &[Letter]) -> Result<Row> {
    let low = alg.lowered()?;
    let bad = || Error::NotSolitonState(format!("{} is not an iota image", show(word)));
    let inner: Vec<Letter> = word
        .iter()
        .filter(|a| !matches!(a, Letter::Phi | Letter::Bar(1) | Letter::Plain(1)))
        .map(|a| a.shifted(-1).ok_or_else(bad))
        .collect::<Result<_>>()?;
    let b = Row::from_word(low, word.len() as u16, &inner).map_err(|_| bad())?;
    if iota(alg, &b)? != word {
        return Err(bad());
    }
    Ok(b)
}

fn show(word: &[Letter]) -> String {
    word.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ")
}

/// A soliton found in a state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Found {
    pub label: Label,
    /// Slot of the first letter.
    pub slot: i64,
}

/// Label phase of a soliton whose first letter sits at `slot`.
pub fn phase_at(alg: Algebra, slot: i64, starts_with_phi: bool) -> i64 {
    let gamma = -slot;
    match alg.type_class() {
        TypeClass::III if starts_with_phi => 2 * gamma - 1,
        TypeClass::III => 2 * gamma,
        _ => gamma,
    }
}

/// Whether `iota_l(b)` opens with `phi`.
pub fn starts_with_phi(alg: Algebra, b: &Row) -> bool {
    alg.type_class() == TypeClass::III && (b.l() - b.size()) % 2 == 1
}

/// Label of the soliton `b` whose first letter sits at `slot`.
pub fn label_at(alg: Algebra, b: Row, slot: i64) -> Label {
    let phase = phase_at(alg, slot, starts_with_phi(alg, &b));
    Label::new(phase, b)
}

/// Slot of the first letter of a soliton with the given label.
pub fn slot_of(alg: Algebra, label: &Label) -> Result<i64> {
    if alg.type_class() != TypeClass::III {
        return Ok(-label.phase);
    }
    let phi = (label.b.l() - label.b.size()) % 2 == 1;
    let p = if phi { label.phase + 1 } else { label.phase };
    if p.rem_euclid(2) != 0 {
        return Err(Error::NotSolitonState(format!("phase parity of {label}")));
    }
    Ok(-(p / 2))
}

/// Reads the solitons of a state left to right.
///
/// Sites of capacity above one must be vacuum. Between consecutive solitons
/// there must be at least as many vacuum slots as the length of the left one.
pub fn detect(state: &State) -> Result<Vec<Found>> {
    let alg = state.alg();
    let mut owned = state.clone();
    let reach = owned.end_slot() + owned.len() as i64 + 1;
    owned.pad_to(owned.left_slot(), reach);
    let state = &owned;
    let cells = state.cells();
    let letter_at = |i: usize| -> Option<Letter> {
        cells.get(i).and_then(|c| c.as_letter(alg))
    };
    let not = |why: String| Error::NotSolitonState(why);
    let mut out: Vec<Found> = Vec::new();
    let mut last_end: Option<(i64, u16)> = None;
    let mut i = 0;
    while i < cells.len() {
        let c = &cells[i];
        if c.is_vacuum() {
            i += 1;
            continue;
        }
        if c.l() != 1 {
            return Err(not(format!("excited site of capacity {} at {}", c.l(), i)));
        }
        let start = i;
        let mut word = Vec::new();
        if padded(alg) {
            if letter_at(i) == Some(Letter::Phi) {
                word.push(Letter::Phi);
                i += 1;
            }
            let mut a = 0;
            while letter_at(i) == Some(Letter::Bar(1)) {
                word.push(Letter::Bar(1));
                a += 1;
                i += 1;
            }
            while let Some(x) = letter_at(i) {
                if matches!(x, Letter::Plain(1) | Letter::Bar(1) | Letter::Phi) {
                    break;
                }
                word.push(x);
                i += 1;
            }
            for _ in 0..a {
                if letter_at(i) != Some(Letter::Plain(1)) {
                    return Err(not(format!("unbalanced padding in block at {start}")));
                }
                word.push(Letter::Plain(1));
                i += 1;
            }
        } else {
            while let Some(x) = letter_at(i) {
                if x == Letter::Plain(1) {
                    break;
                }
                word.push(x);
                i += 1;
            }
        }
        if word.is_empty() {
            return Err(not(format!("stray letter at {start}")));
        }
        let b = uniota(alg, &word)?;
        let slot = state.slot_of(start);
        if let Some((end, len)) = last_end {
            if slot - end < len as i64 {
                return Err(not(format!("gap {} below {} before site {start}", slot - end, len)));
            }
        }
        last_end = Some((state.slot_of(i), b.l()));
        let phase = phase_at(alg, slot, word[0] == Letter::Phi);
        out.push(Found { label: Label::new(phase, b), slot });
    }
    Ok(out)
}

/// Builds a state from solitons placed by their labels, left to right, with
/// an optional block of extra sites appended `region_gap` slots after the last one.
pub fn build_state(alg: Algebra, labels: &[Label], region: &[Row], region_gap: usize) -> Result<State> {
    let one = Row::vacuum(alg, 1);
    let mut placed = Vec::with_capacity(labels.len());
    for lab in labels {
        placed.push((slot_of(alg, lab)?, iota_cells(alg, &lab.b)?));
    }
    let left = placed.iter().map(|p| p.0).min().unwrap_or(0);
    let mut cells: Vec<Row> = Vec::new();
    let mut cursor = left;
    for (slot, word) in placed {
        if slot < cursor {
            return Err(Error::NotSolitonState("overlapping placement".into()));
        }
        while cursor < slot {
            cells.push(one.clone());
            cursor += 1;
        }
        cursor += word.len() as i64;
        cells.extend(word);
    }
    if !region.is_empty() {
        cells.extend(std::iter::repeat(one.clone()).take(region_gap));
        cells.extend(region.iter().cloned());
    }
    State::new(alg, cells, left)
}

/// Drops vacuum `B_1` sites at both ends.
pub fn trim(state: &State) -> State {
    let alg = state.alg();
    let cells = state.cells();
    let keep = |c: &Row| !(c.l() == 1 && c.is_vacuum());
    match (cells.iter().position(keep), cells.iter().rposition(keep)) {
        (Some(a), Some(b)) => {
            State::new(alg, cells[a..=b].to_vec(), state.slot_of(a)).expect("sites already checked")
        }
        _ => State::new(alg, Vec::new(), 0).expect("empty state"),
    }
}

/// Composes adjacent `R` swaps; `order` lists left positions of the swaps.
pub fn compose_r(alg: Algebra, labels: &[Label], order: &[usize]) -> Result<Vec<Label>> {
    let low = alg.lowered()?;
    let mut v: Vec<Aff> = labels.iter().map(Label::aff).collect();
    for &i in order {
        let (a, b) = r_affine(low, &v[i], &v[i + 1])?;
        v[i] = a;
        v[i + 1] = b;
    }
    Ok(v.into_iter().map(Label::from_aff).collect())
}

/// Swap order reversing `m` factors: `(12)(23)(12)...` bubble order.
pub fn reversal_order(m: usize) -> Vec<usize> {
    let mut order = Vec::new();
    for pass in 0..m {
        for i in 0..m.saturating_sub(1 + pass) {
            order.push(i);
        }
    }
    order
}

/// `Delta_i = sum_j (m_j - i)_+` over the given capacities.
pub fn delta(capacities: &[u16], i: u16) -> i64 {
    capacities.iter().map(|&m| (m as i64 - i as i64).max(0)).sum()
}

/// `R` prediction with the inhomogeneous correction `-varsigma Delta_len`.
pub fn predict(alg: Algebra, incoming: &[Label], capacities: &[u16]) -> Result<Vec<Label>> {
    let out = compose_r(alg, incoming, &reversal_order(incoming.len()))?;
    let vs = alg.varsigma();
    Ok(out
        .into_iter()
        .map(|lab| {
            let d = vs * delta(capacities, lab.len());
            Label::new(lab.phase - d, lab.b)
        })
        .collect())
}

/// Outcome of a scattering run.
#[derive(Clone, Debug)]
pub struct Scatter {
    pub incoming: Vec<Label>,
    pub outgoing: Vec<Label>,
    pub predicted: Vec<Label>,
    pub steps: usize,
}

impl Scatter {
    pub fn matches(&self) -> bool {
        self.outgoing == self.predicted
    }
}

/// Whether `found` is a completed configuration: lengths strictly increasing
/// left to right, gaps at least the larger neighbouring length, and every
/// soliton to the right of slot `past`.
fn completed(found: &[Found], count: usize, past: i64) -> bool {
    if found.len() != count {
        return false;
    }
    for w in found.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        if a.label.len() >= b.label.len() {
            return false;
        }
        let gap = b.slot - a.slot - a.label.len() as i64;
        if gap < b.label.len() as i64 {
            return false;
        }
    }
    found.iter().all(|f| f.slot >= past)
}

/// Evolves `state` under `T_r` until the solitons have passed each other and
/// every site of capacity above one, then reads off normalized labels.
pub fn run_scattering(state: &State, r: u16, tmax: usize) -> Result<(Vec<Label>, Vec<Label>, usize)> {
    let alg = state.alg();
    let incoming: Vec<Label> = detect(state)?.into_iter().map(|f| f.label).collect();
    let count = incoming.len();
    let vs = alg.varsigma();
    let past = {
        let cells = state.cells();
        cells
            .iter()
            .rposition(|c| c.l() > 1)
            .map_or(i64::MIN, |i| state.slot_of(i + 1))
    };
    let mut cur = state.clone();
    for t in 0..=tmax {
        if t > 0 {
            cur = trim(&evolve_tl(&cur, r)?.state);
        }
        if let Ok(found) = detect(&cur) {
            if completed(&found, count, past) {
                let out = found
                    .into_iter()
                    .map(|f| {
                        let v = vs * r.min(f.label.len()) as i64 * t as i64;
                        Label::new(f.label.phase + v, f.label.b)
                    })
                    .collect();
                return Ok((incoming, out, t));
            }
        }
    }
    Err(Error::NoCompletion(tmax))
}

/// Full experiment: build, evolve, predict.
pub fn scatter(alg: Algebra, incoming: &[Label], region: &[Row], region_gap: usize, r: u16, tmax: usize) -> Result<Scatter> {
    let state = build_state(alg, incoming, region, region_gap)?;
    let (seen, outgoing, steps) = run_scattering(&state, r, tmax)?;
    if seen != incoming {
        return Err(Error::NotSolitonState("placement does not read back".into()));
    }
    let caps: Vec<u16> = region.iter().map(Row::l).filter(|&m| m > 1).collect();
    let predicted = predict(alg, incoming, &caps)?;
    Ok(Scatter { incoming: seen, outgoing, predicted, steps })
}
