//! Worked evolutions kept as reference traces.

use std::time::{Duration, Instant};

use crate::algebra::Algebra;
use crate::automaton::{evolve_tl, State};
use crate::error::{Error, Result};
use crate::row::Row;

const DATA: &str = include_str!("../data/golden_traces.txt");

/// A printed evolution: rows `t: <sites>` under `T_l`.
#[derive(Clone, Debug)]
pub struct Trace {
    pub name: String,
    pub alg: Algebra,
    pub l: u16,
    pub rows: Vec<(usize, String)>,
}

impl Trace {
    pub fn initial(&self) -> Result<State> {
        State::parse_cells(self.alg, &self.rows[0].1, 0)
    }
}

/// Parses the `trace <name> <alg> <l>` / `<t>: <sites>` / `end` format.
pub fn parse(text: &str) -> Result<Vec<Trace>> {
    let mut out = Vec::new();
    let mut cur: Option<Trace> = None;
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        let bad = |m: &str| Error::Parse(format!("line {}: {m}", no + 1));
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(head) = line.strip_prefix("trace ") {
            let parts: Vec<&str> = head.split_whitespace().collect();
            let [name, alg, l] = parts[..] else { return Err(bad("expected `trace <name> <alg> <l>`")) };
            cur = Some(Trace {
                name: name.to_string(),
                alg: alg.parse()?,
                l: l.parse().map_err(|_| bad("bad carrier length"))?,
                rows: Vec::new(),
            });
        } else if line == "end" {
            out.push(cur.take().ok_or_else(|| bad("`end` outside a trace"))?);
        } else if let Some((t, body)) = line.split_once(':') {
            let t = t.trim().parse().map_err(|_| bad("bad time"))?;
            cur.as_mut()
                .ok_or_else(|| bad("row outside a trace"))?
                .rows
                .push((t, body.trim().to_string()));
        } else {
            return Err(bad("unrecognised line"));
        }
    }
    Ok(out)
}

/// The bundled traces.
pub fn traces() -> Vec<Trace> {
    parse(DATA).expect("bundled traces parse")
}

pub fn find(name: &str) -> Option<Trace> {
    traces().into_iter().find(|t| t.name == name)
}

/// Same sites, where a missing site on either side must be a vacuum `B_1`.
pub fn agrees(got: &State, want: &State) -> bool {
    let alg = got.alg();
    let one = Row::vacuum(alg, 1);
    if got.left_slot() != want.left_slot() {
        return false;
    }
    let (g, w) = (got.cells(), want.cells());
    (0..g.len().max(w.len())).all(|i| match (g.get(i), w.get(i)) {
        (Some(a), Some(b)) => a == b,
        (Some(a), None) | (None, Some(a)) => *a == one,
        (None, None) => true,
    })
}

/// Result of replaying one trace.
#[derive(Clone, Debug)]
pub struct Replay {
    pub name: String,
    pub rows: usize,
    /// First row that differs, with the computed sites.
    pub mismatch: Option<(usize, String)>,
    pub elapsed: Duration,
}

/// Evolves row 0 and compares every printed row.
pub fn replay(tr: &Trace) -> Result<Replay> {
    let start = Instant::now();
    let mut state = tr.initial()?;
    let mut t = 0;
    let mut mismatch = None;
    for (tt, body) in &tr.rows {
        while t < *tt {
            state = evolve_tl(&state, tr.l)?.state;
            t += 1;
        }
        let want = State::parse_cells(tr.alg, body, 0)?;
        if !agrees(&state, &want) {
            mismatch = Some((*tt, state.render()));
            break;
        }
    }
    Ok(Replay { name: tr.name.clone(), rows: tr.rows.len(), mismatch, elapsed: start.elapsed() })
}
