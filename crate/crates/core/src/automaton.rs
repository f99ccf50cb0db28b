//! The automata `T_l` and `T` on paths `B_{m_1} (x) ... (x) B_{m_L}`.

use std::fmt;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::rmatrix::r_general;
use crate::row::Row;

/// A finite window of an infinite path, vacuum outside.
///
/// Every site of `B_m` occupies `m` slots. Slots grow to the right and the
/// phase of a site is minus its leftmost slot, so phases are counted from
/// the right end of the lattice.
#[derive(Clone, Debug)]
pub struct State {
    alg: Algebra,
    cells: Vec<Row>,
    left_slot: i64,
}

impl State {
    pub fn new(alg: Algebra, cells: Vec<Row>, left_slot: i64) -> Result<State> {
        for c in &cells {
            c.check(alg)?;
        }
        Ok(State { alg, cells, left_slot })
    }

    pub fn alg(&self) -> Algebra {
        self.alg
    }

    pub fn cells(&self) -> &[Row] {
        &self.cells
    }

    pub fn left_slot(&self) -> i64 {
        self.left_slot
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Leftmost slot of site `i`.
    pub fn slot_of(&self, i: usize) -> i64 {
        self.left_slot + self.cells[..i].iter().map(|c| c.l() as i64).sum::<i64>()
    }

    /// One past the last slot of the window.
    pub fn end_slot(&self) -> i64 {
        self.slot_of(self.cells.len())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.cells.iter().all(|c| c.l() == 1)
    }

    /// Capacities of the sites with `m > 1`.
    pub fn capacities(&self) -> Vec<u16> {
        self.cells.iter().map(Row::l).filter(|&m| m > 1).collect()
    }

    pub fn is_vacuum(&self) -> bool {
        self.cells.iter().all(Row::is_vacuum)
    }

    /// Leftmost slot and sites between the first and last non-vacuum site.
    pub fn normalized(&self) -> (i64, Vec<Row>) {
        let first = self.cells.iter().position(|c| !c.is_vacuum());
        let last = self.cells.iter().rposition(|c| !c.is_vacuum());
        match (first, last) {
            (Some(a), Some(b)) => (self.slot_of(a), self.cells[a..=b].to_vec()),
            _ => (0, Vec::new()),
        }
    }

    /// Same path up to vacuum padding.
    pub fn same_path(&self, other: &State) -> bool {
        self.alg == other.alg && self.normalized() == other.normalized()
    }

    /// Pads with vacuum `B_1` sites so the window covers `[from, to)`.
    pub fn pad_to(&mut self, from: i64, to: i64) {
        let one = Row::vacuum(self.alg, 1);
        while self.left_slot > from {
            self.cells.insert(0, one.clone());
            self.left_slot -= 1;
        }
        while self.end_slot() < to {
            self.cells.push(one.clone());
        }
    }

    /// Space separated site tokens.
    pub fn render(&self) -> String {
        let toks: Vec<String> = self.cells.iter().map(|c| c.render(self.alg)).collect();
        toks.join(" ")
    }

    /// One DSL line: `alg=<descriptor> | <sites>`.
    pub fn to_line(&self) -> String {
        format!("alg={} | {}", self.alg, self.render())
    }

    /// Parses site tokens; the window starts at slot `left_slot`.
    pub fn parse_cells(alg: Algebra, text: &str, left_slot: i64) -> Result<State> {
        let cells = text
            .split_whitespace()
            .map(|t| Row::parse_cell(alg, t))
            .collect::<Result<Vec<_>>>()?;
        State::new(alg, cells, left_slot)
    }

    /// Parses a DSL line `alg=C1:3 | 1 1 2b ...`. With `default_alg`, the
    /// `alg=` prefix may be omitted.
    pub fn parse_line(line: &str, default_alg: Option<Algebra>) -> Result<State> {
        let line = line.trim();
        let (alg, body) = match line.split_once('|') {
            Some((head, body)) => {
                let head = head.trim();
                let desc = head
                    .strip_prefix("alg=")
                    .ok_or_else(|| Error::Parse(format!("expected alg=... before `|` in `{line}`")))?;
                (desc.parse::<Algebra>()?, body)
            }
            None => (
                default_alg.ok_or_else(|| Error::Parse("state line needs alg=... |".into()))?,
                line,
            ),
        };
        State::parse_cells(alg, body, 0)
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl PartialEq for State {
    fn eq(&self, other: &State) -> bool {
        self.same_path(other)
    }
}

/// Result of one application of `T_l`.
#[derive(Clone, Debug)]
pub struct Step {
    pub state: State,
    /// `H_j` at every site visited, including appended vacuum.
    pub local_energies: Vec<i64>,
    /// `E_l = -sum_j (H_j - H(u_l (x) u_{m_j}))`.
    pub energy: i64,
}

fn vacuum_energy(alg: Algebra, l: u16, m: u16) -> i64 {
    2 * alg.varsigma() * l.min(m) as i64
}

/// `R` on carrier and site with a shortcut for vacuum over vacuum.
fn carry(alg: Algebra, carrier: &Row, cell: &Row) -> Result<(Row, Row, i64)> {
    if carrier.is_vacuum() && cell.is_vacuum() {
        return Ok((cell.clone(), carrier.clone(), vacuum_energy(alg, carrier.l(), cell.l())));
    }
    r_general(alg, carrier, cell)
}

/// `T_l`: the carrier `u_l` enters from the left; the window grows to the
/// right until the carrier is back to `u_l`.
pub fn evolve_tl(state: &State, l: u16) -> Result<Step> {
    let alg = state.alg;
    let mut carrier = Row::vacuum(alg, l);
    let mut cells = Vec::with_capacity(state.cells.len() + l as usize + 1);
    let mut hs = Vec::with_capacity(cells.capacity());
    let mut energy = 0;
    for cell in &state.cells {
        let (out, next, h) = carry(alg, &carrier, cell)?;
        energy -= h - vacuum_energy(alg, l, cell.l());
        hs.push(h);
        cells.push(out);
        carrier = next;
    }
    let vac = Row::vacuum(alg, 1);
    let mut extra = 0;
    while !carrier.is_vacuum() {
        if extra > l as usize {
            return Err(Error::CarrierOverflow(extra));
        }
        let (out, next, h) = carry(alg, &carrier, &vac)?;
        energy -= h - vacuum_energy(alg, l, 1);
        hs.push(h);
        cells.push(out);
        carrier = next;
        extra += 1;
    }
    Ok(Step {
        state: State { alg, cells, left_slot: state.left_slot },
        local_energies: hs,
        energy,
    })
}

/// `T_l^{-1}`: the carrier enters from the right through `B_m (x) B_l -> B_l (x) B_m`.
pub fn evolve_tl_inverse(state: &State, l: u16) -> Result<State> {
    let alg = state.alg;
    let mut carrier = Row::vacuum(alg, l);
    let mut cells = Vec::with_capacity(state.cells.len() + l as usize + 1);
    for cell in state.cells.iter().rev() {
        let (next, out, _) = if carrier.is_vacuum() && cell.is_vacuum() {
            (carrier.clone(), cell.clone(), 0)
        } else {
            r_general(alg, cell, &carrier)?
        };
        cells.push(out);
        carrier = next;
    }
    let vac = Row::vacuum(alg, 1);
    let mut left_slot = state.left_slot;
    let mut extra = 0;
    while !carrier.is_vacuum() {
        if extra > l as usize {
            return Err(Error::CarrierOverflow(extra));
        }
        let (next, out, _) = r_general(alg, &vac, &carrier)?;
        cells.push(out);
        carrier = next;
        left_slot -= 1;
        extra += 1;
    }
    cells.reverse();
    Ok(State { alg, cells, left_slot })
}

/// `E_l` of a state.
pub fn energy(state: &State, l: u16) -> Result<i64> {
    Ok(evolve_tl(state, l)?.energy)
}

/// Number of non-vacuum slots.
pub fn excitation(state: &State) -> usize {
    state
        .cells
        .iter()
        .map(|c| if c.is_vacuum() { 0 } else { c.l() as usize })
        .sum()
}

/// `T`: `T_l` for the first `l` with `T_l = T_{l+1}` on this state.
pub fn evolve_t(state: &State) -> Result<State> {
    let bound = length_bound(state) + 1;
    let mut prev = evolve_tl(state, 1)?.state;
    for l in 2..=bound.max(2) {
        let next = evolve_tl(state, l)?.state;
        if next.same_path(&prev) {
            return Ok(prev);
        }
        prev = next;
    }
    Ok(prev)
}

/// Upper bound for the length of any soliton in the state: a block
/// `1b^a w 1^a` has at least half its letters away from the vacuum.
pub fn length_bound(state: &State) -> u16 {
    2 * excitation(state) as u16 + 1
}

/// `E_1 .. E_L` for `L` two past [`length_bound`].
pub fn energies(state: &State) -> Result<Vec<i64>> {
    let top = length_bound(state) + 2;
    (1..=top).map(|l| energy(state, l)).collect()
}

/// `N_l = (-E_{l-1} + 2 E_l - E_{l+1}) / varsigma` with `E_0 = 0`; entry
/// `l - 1` holds `N_l`.
pub fn spectrum(state: &State) -> Result<Vec<i64>> {
    let e = energies(state)?;
    let vs = state.alg.varsigma();
    let get = |l: usize| if l == 0 { 0 } else { e[l - 1] };
    let mut out = Vec::new();
    for l in 1..e.len() {
        let num = -get(l - 1) + 2 * get(l) - get(l + 1);
        if num % vs != 0 {
            return Err(Error::NonIntegralSpectrum(l));
        }
        out.push(num / vs);
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    Ok(out)
}
