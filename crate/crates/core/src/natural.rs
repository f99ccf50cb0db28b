//! The auxiliary crystal `B_nat` and the operator `T_nat` for Types I and II,
//! with exhaustive checks on highest weight two-soliton labels.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::algebra::{Algebra, Classical, Family, Letter, TypeClass};
use crate::automaton::{evolve_tl, State};
use crate::crystal::{highest_weight_pairs, kernel, weight};
use crate::error::{Error, Result};
use crate::rmatrix::{dcb_row, r_affine};
use crate::row::Row;
use crate::soliton::{build_state, detect, Label};

/// An element of `B_nat`: a column `(alpha beta)` or `phi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Nat {
    Pair(Letter, Letter),
    Phi,
}

impl fmt::Display for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nat::Pair(a, b) => write!(f, "({a} {b})"),
            Nat::Phi => f.write_str("phi"),
        }
    }
}

use Letter::{Bar, Plain};

/// `(1 2)`, the carrier that defines `T_nat`.
pub const V12: Nat = Nat::Pair(Plain(1), Plain(2));
/// `(1 2b)`, the second carrier met on Type II states.
pub const V12B: Nat = Nat::Pair(Plain(1), Bar(2));

fn supported(alg: Algebra) -> Result<()> {
    match alg.type_class() {
        TypeClass::I | TypeClass::II => Ok(()),
        _ => Err(Error::Unsupported("B_nat is defined for Types I and II only")),
    }
}

/// All elements of `B_nat`.
pub fn bnat_elements(alg: Algebra) -> Result<Vec<Nat>> {
    supported(alg)?;
    let j = alg.coordinate_letters();
    let n = alg.rank() as u8;
    let mut out = Vec::new();
    for (x, &a) in j.iter().enumerate() {
        for &b in &j[x + 1..] {
            if (a, b) != (Plain(1), Bar(1)) {
                out.push(Nat::Pair(a, b));
            }
        }
    }
    match alg.classical() {
        Classical::B => out.push(Nat::Pair(Letter::Zero, Letter::Zero)),
        Classical::D => out.push(Nat::Pair(Bar(n), Plain(n))),
        _ => {}
    }
    if alg.type_class() == TypeClass::I {
        out.push(Nat::Phi);
    }
    Ok(out)
}

pub fn nat_weight(alg: Algebra, v: Nat) -> Vec<i64> {
    match v {
        Nat::Phi => vec![0; alg.weight_len()],
        Nat::Pair(a, b) => {
            let mut w = alg.letter_weight(a);
            for (x, y) in w.iter_mut().zip(alg.letter_weight(b)) {
                *x += y;
            }
            w
        }
    }
}

/// `f_0` on `B_nat`.
pub fn bnat_f0(alg: Algebra, v: Nat) -> Option<Nat> {
    let one = Plain(1);
    let two = Plain(2);
    match (alg.type_class(), v) {
        (TypeClass::I, Nat::Pair(Bar(2), Bar(1))) => Some(Nat::Phi),
        (TypeClass::I, Nat::Phi) => Some(V12),
        (TypeClass::I, Nat::Pair(a, Bar(2))) if a != one && a != two => Some(Nat::Pair(one, a)),
        (TypeClass::I, Nat::Pair(a, Bar(1))) if a != two && a != Bar(2) => Some(Nat::Pair(two, a)),
        (TypeClass::II, Nat::Pair(a, Bar(1))) if a != one => Some(Nat::Pair(one, a)),
        _ => None,
    }
}

fn tables(tc: TypeClass) -> Vec<(Nat, Letter, Letter, Nat)> {
    let p = Nat::Pair;
    let (one, two, three) = (Plain(1), Plain(2), Plain(3));
    let (b1, b2) = (Bar(1), Bar(2));
    let mut t = vec![
        (p(one, two), three, one, p(two, three)),
        (p(one, three), two, three, p(one, two)),
        (p(two, three), one, two, p(one, three)),
        (p(two, b2), one, two, p(one, b2)),
        (p(two, b1), one, two, p(two, b2)),
        (p(three, b1), one, three, p(two, b2)),
        (p(three, b1), two, three, p(two, b1)),
        (p(b2, b1), one, b2, p(two, b2)),
        (p(b2, b1), two, b2, p(two, b1)),
        (p(b2, b1), three, b2, p(three, b1)),
    ];
    match tc {
        TypeClass::I => t.extend([
            (p(one, two), b2, one, Nat::Phi),
            (Nat::Phi, three, one, p(three, b1)),
            (Nat::Phi, b2, one, p(b2, b1)),
        ]),
        TypeClass::II => t.extend([
            (p(one, two), b2, one, p(two, b2)),
            (p(one, two), b1, one, p(two, b1)),
            (p(one, b2), two, b2, p(one, two)),
            (p(one, b2), three, b2, p(one, three)),
            (p(one, b2), b1, one, p(b2, b1)),
            (p(two, b2), b2, b1, p(one, b2)),
            (p(two, b1), three, b1, p(two, three)),
            (p(two, b1), b2, b1, p(two, b2)),
        ]),
        _ => {}
    }
    t
}

/// Unique element of `B_1 (x) B_nat` with the weight of `v (x) a`, if any.
pub fn weight_forced(alg: Algebra, v: Nat, a: Letter) -> Result<Option<(Letter, Nat)>> {
    let mut target = nat_weight(alg, v);
    for (x, y) in target.iter_mut().zip(alg.letter_weight(a)) {
        *x += y;
    }
    let mut hit = None;
    let mut count = 0;
    for &x in &alg.letters() {
        let wx = alg.letter_weight(x);
        for w in bnat_elements(alg)? {
            let wv = nat_weight(alg, w);
            if wx.iter().zip(&wv).zip(&target).all(|((p, q), t)| p + q == *t) {
                count += 1;
                hit = Some((x, w));
            }
        }
    }
    Ok(if count == 1 { hit } else { None })
}

fn nat_rows(alg: Algebra, v: Nat) -> Vec<Row> {
    match v {
        Nat::Phi => Vec::new(),
        Nat::Pair(a, b) => vec![
            Row::letter(alg, a).expect("column letters are in B_1"),
            Row::letter(alg, b).expect("column letters are in B_1"),
        ],
    }
}

fn nat_from_rows(alg: Algebra, rows: &[Row]) -> Option<Nat> {
    match rows {
        [] => Some(Nat::Phi),
        [a, b] => Some(Nat::Pair(a.as_letter(alg)?, b.as_letter(alg)?)),
        _ => None,
    }
}

/// A classical operator on `B_nat (x) B_1` (`nat_first`) or on `B_1 (x) B_nat`.
fn act(alg: Algebra, i: usize, raise: bool, v: Nat, a: Letter, nat_first: bool) -> Option<(Nat, Letter)> {
    let ker = kernel(alg);
    let x = Row::letter(alg, a).ok()?;
    let mut rows = nat_rows(alg, v);
    if nat_first {
        rows.push(x);
    } else {
        rows.insert(0, x);
    }
    let hit = if raise { ker.e(&mut rows, i) } else { ker.f(&mut rows, i) };
    if !hit {
        return None;
    }
    let x = if nat_first { rows.pop()? } else { rows.remove(0) };
    Some((nat_from_rows(alg, &rows)?, x.as_letter(alg)?))
}

/// `e_i` (`raise`) or `f_i` on `B_nat`, reading `(alpha beta)` as `alpha (x) beta`.
pub fn bnat_op(alg: Algebra, i: usize, raise: bool, v: Nat) -> Option<Nat> {
    let ker = kernel(alg);
    let mut rows = nat_rows(alg, v);
    if rows.is_empty() {
        return None;
    }
    let hit = if raise { ker.e(&mut rows, i) } else { ker.f(&mut rows, i) };
    if hit {
        nat_from_rows(alg, &rows)
    } else {
        None
    }
}

/// Where an entry of the `B_nat (x) B_1` map comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Table,
    Weight,
    Derived,
}

/// The map `v (x) a -> a' (x) v'` on every pair it is determined for.
#[derive(Debug)]
pub struct StepMap {
    pub alg: Algebra,
    pub map: HashMap<(Nat, Letter), (Letter, Nat, Source)>,
}

fn conflict(k: (Nat, Letter), a: (Letter, Nat), b: (Letter, Nat)) -> Error {
    Error::OutsideTable(format!(
        "{} (x) {} maps to both {} (x) {} and {} (x) {}",
        k.0, k.1, a.0, a.1, b.0, b.1
    ))
}

impl StepMap {
    /// Seeds with the vertex tables and the weight-forced pairs, then closes
    /// under the classical operators, which the map commutes with.
    pub fn build(alg: Algebra) -> Result<StepMap> {
        supported(alg)?;
        let letters = alg.letters();
        let nats = bnat_elements(alg)?;
        let mut map: HashMap<(Nat, Letter), (Letter, Nat, Source)> = HashMap::new();
        let mut queue = Vec::new();
        let present = |v: Nat| match v {
            Nat::Phi => true,
            Nat::Pair(x, y) => alg.contains_letter(x) && alg.contains_letter(y),
        };
        for (v, a, a2, v2) in tables(alg.type_class()) {
            if present(v) && present(v2) && alg.contains_letter(a) && alg.contains_letter(a2) {
                map.insert((v, a), (a2, v2, Source::Table));
                queue.push((v, a));
            }
        }
        for &v in &nats {
            for &a in &letters {
                if let Some((a2, v2)) = weight_forced(alg, v, a)? {
                    match map.get(&(v, a)) {
                        Some(&(x, w, _)) if (x, w) != (a2, v2) => return Err(conflict((v, a), (x, w), (a2, v2))),
                        Some(_) => {}
                        None => {
                            map.insert((v, a), (a2, v2, Source::Weight));
                            queue.push((v, a));
                        }
                    }
                }
            }
        }
        while let Some((v, a)) = queue.pop() {
            let (a2, v2, _) = map[&(v, a)];
            for i in 1..=alg.nodes() {
                for raise in [true, false] {
                    match (act(alg, i, raise, v, a, true), act(alg, i, raise, v2, a2, false)) {
                        (Some((w, b)), Some((w2, b2))) => match map.get(&(w, b)) {
                            Some(&(x, y, _)) if (x, y) != (b2, w2) => return Err(conflict((w, b), (x, y), (b2, w2))),
                            Some(_) => {}
                            None => {
                                map.insert((w, b), (b2, w2, Source::Derived));
                                queue.push((w, b));
                            }
                        },
                        (None, None) => {}
                        _ => {
                            let op = if raise { "e" } else { "f" };
                            return Err(Error::OutsideTable(format!(
                                "{v} (x) {a} -> {a2} (x) {v2} does not commute with {op}_{i}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(StepMap { alg, map })
    }

    pub fn get(&self, v: Nat, a: Letter) -> Result<(Letter, Nat)> {
        self.map
            .get(&(v, a))
            .map(|&(a2, v2, _)| (a2, v2))
            .ok_or_else(|| Error::OutsideTable(format!("{v} (x) {a} in {}", self.alg)))
    }

    pub fn source(&self, v: Nat, a: Letter) -> Option<Source> {
        self.map.get(&(v, a)).map(|e| e.2)
    }
}

static STEP_MAPS: OnceLock<RwLock<HashMap<Algebra, Arc<StepMap>>>> = OnceLock::new();

/// Shared [`StepMap`] of an algebra.
pub fn step_map(alg: Algebra) -> Result<Arc<StepMap>> {
    let cache = STEP_MAPS.get_or_init(Default::default);
    if let Some(m) = cache.read().expect("step map cache poisoned").get(&alg) {
        return Ok(m.clone());
    }
    let m = Arc::new(StepMap::build(alg)?);
    Ok(cache.write().expect("step map cache poisoned").entry(alg).or_insert(m).clone())
}

/// `v (x) a -> a' (x) v'` under `B_nat (x) B_1 ~ B_1 (x) B_nat`.
pub fn bnat_step(alg: Algebra, v: Nat, a: Letter) -> Result<(Letter, Nat)> {
    step_map(alg)?.get(v, a)
}

/// `T_nat[v]` on a homogeneous state; returns the new state and the exit carrier.
pub fn t_natural(state: &State, v: Nat) -> Result<(State, Nat)> {
    let alg = state.alg();
    let st = step_map(alg)?;
    let one = Plain(1);
    let mut carrier = v;
    let mut cells = Vec::with_capacity(state.len() + 4);
    for c in state.cells() {
        let a = c
            .as_letter(alg)
            .ok_or_else(|| Error::Unsupported("T_nat needs a homogeneous state"))?;
        let (a2, v2) = st.get(carrier, a)?;
        cells.push(Row::letter(alg, a2)?);
        carrier = v2;
    }
    let mut extra = 0;
    loop {
        let (a2, v2) = st.get(carrier, one)?;
        if a2 == one && v2 == carrier {
            break;
        }
        if extra > state.len() + 4 {
            return Err(Error::CarrierOverflow(extra));
        }
        cells.push(Row::letter(alg, a2)?);
        carrier = v2;
        extra += 1;
    }
    Ok((State::new(alg, cells, state.left_slot())?, carrier))
}

/// `(d, c, b) = (x_1, x_2, xb_1)` of a label row of that shape.
pub fn dcb(low: Algebra, b: &Row) -> Option<(i64, i64, i64)> {
    let x = b.coords();
    let last = x.len() - 1;
    let rest = x.iter().enumerate().all(|(i, &v)| v == 0 || i == 0 || i == 1 || i == last);
    (rest && low.rank() >= 2).then(|| (x[0] as i64, x[1] as i64, x[last] as i64))
}

fn row(low: Algebra, k: u16, d: i64, c: i64, b: i64) -> Result<Row> {
    let bad = || Error::NotInCrystal { l: k, detail: format!("({d},{c},{b})") };
    if d < 0 || c < 0 || b < 0 {
        return Err(bad());
    }
    dcb_row(low, k, d as u16, c as u16, b as u16).ok_or_else(bad)
}

/// Closed form of `T_nat[v]` on a one-soliton label `z^m (d,c,b)`.
pub fn t_natural_label(alg: Algebra, v: Nat, lab: &Label) -> Result<Label> {
    supported(alg)?;
    let low = alg.lowered()?;
    let k = lab.len();
    let (d, c, b) = dcb(low, &lab.b)
        .ok_or_else(|| Error::Unsupported("label is not of the form (d,c,b)"))?;
    let m = lab.phase;
    let neg = |x: i64| (-x).max(0);
    let pos = |x: i64| x.max(0);
    let (dm, d2, c2, b2) = match (alg.type_class(), v) {
        (TypeClass::I, V12) => {
            if b > 0 {
                (-2, d + 1, c, b - 1)
            } else if c > 0 {
                (-1, d + 1, c - 1, 0)
            } else {
                (0, d, 0, 0)
            }
        }
        (TypeClass::II, V12) => {
            let a = (k as i64 - b - c - d) / 2;
            if a == 0 && b == 0 && c == 0 {
                (0, k as i64, 0, 0)
            } else if b * d > 0 {
                (-1, d - 1, c, b - 1)
            } else if c > 0 {
                (-1, d + neg(b - 1), c - 1, pos(b - 1))
            } else {
                (-1, d + neg(b - 2), 0, pos(b - 2))
            }
        }
        (TypeClass::II, V12B) => {
            let a = (k as i64 - b - c - d) / 2;
            if a > 0 {
                (-1, d + 1, c, b + 1)
            } else if d > 0 {
                (0, d - 1, c, b + 1)
            } else if c > 0 {
                (0, 0, c - 1, b + 1)
            } else {
                (0, 0, 0, b)
            }
        }
        _ => return Err(Error::OutsideTable(format!("T_nat[{v}] on labels of {alg}"))),
    };
    Ok(Label::new(m + dm, row(low, k, d2, c2, b2)?))
}

/// Carrier leaving a one-soliton state entered by `(1 2)`.
pub fn carrier_after(alg: Algebra, lab: &Label) -> Result<Nat> {
    let low = alg.lowered()?;
    if alg.type_class() == TypeClass::II {
        if let Some((d, 0, 0)) = dcb(low, &lab.b) {
            if d <= lab.len() as i64 - 2 {
                return Ok(V12B);
            }
        }
    }
    Ok(V12)
}

/// `T_nat` on a two-soliton label.
pub fn t_natural_pair(alg: Algebra, p: &(Label, Label)) -> Result<(Label, Label)> {
    let first = t_natural_label(alg, V12, &p.0)?;
    let v = carrier_after(alg, &p.0)?;
    Ok((first, t_natural_label(alg, v, &p.1)?))
}

fn r_pair(low: Algebra, p: &(Label, Label)) -> Result<(Label, Label)> {
    let (a, b) = r_affine(low, &p.0.aff(), &p.1.aff())?;
    Ok((Label::from_aff(a), Label::from_aff(b)))
}

/// Findings of the exhaustive checks for one `(l, k)`.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub hw_count: usize,
    pub label_lemma: Vec<String>,
    pub comm_r: Vec<String>,
    pub comm_tr: Vec<String>,
    pub wt_difference: Vec<String>,
    pub degree: Vec<String>,
    pub max_degree: usize,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.label_lemma.is_empty()
            && self.comm_r.is_empty()
            && self.comm_tr.is_empty()
            && self.wt_difference.is_empty()
            && self.degree.is_empty()
    }

    /// One line per check.
    pub fn lines(&self) -> Vec<(&'static str, bool, usize)> {
        vec![
            ("label-lemma", self.label_lemma.is_empty(), self.label_lemma.len()),
            ("comm-R", self.comm_r.is_empty(), self.comm_r.len()),
            ("comm-T_r", self.comm_tr.is_empty(), self.comm_tr.len()),
            ("wt-difference", self.wt_difference.is_empty(), self.wt_difference.len()),
            ("degree", self.degree.is_empty(), self.degree.len()),
        ]
    }
}

fn labels_of(state: &State) -> Result<Vec<Label>> {
    Ok(detect(state)?.into_iter().map(|f| f.label).collect())
}

/// Slots used when realizing a two-soliton label.
fn placement(l: u16, k: u16) -> (i64, i64) {
    (0, -(3 * (l as i64 + k as i64) + 8))
}

/// Realizes `z^m1 b1 (x) z^m2 b2` with the soliton phases given by the slots.
fn realize(alg: Algebra, b1: &Row, b2: &Row, l: u16, k: u16) -> Result<(Label, Label, State)> {
    let (m1, m2) = placement(l, k);
    let p = (Label::new(m1, b1.clone()), Label::new(m2, b2.clone()));
    let st = build_state(alg, &[p.0.clone(), p.1.clone()], &[], 0)?;
    Ok((p.0, p.1, st))
}

/// Exhaustive checks over the highest weight elements of `B_l (x) B_k`.
pub fn check_commutations(alg: Algebra, l: u16, k: u16) -> Result<Report> {
    supported(alg)?;
    let low = alg.lowered()?;
    let ker = kernel(low);
    let mut rep = Report::default();
    let hw = highest_weight_pairs(low, l, k);
    rep.hw_count = hw.len();
    let mut images: HashMap<(Row, Row, Vec<i64>), (Row, Row)> = HashMap::new();
    for (b1, b2) in &hw {
        let (p0, p1, st) = realize(alg, b1, b2, l, k)?;
        let p = (p0, p1);
        let tn = match t_natural_pair(alg, &p) {
            Ok(x) => x,
            Err(e) => {
                rep.label_lemma.push(format!("{b1} (x) {b2}: {e}"));
                continue;
            }
        };
        match t_natural(&st, V12).and_then(|(s, _)| labels_of(&s)) {
            Ok(seen) if seen == [tn.0.clone(), tn.1.clone()] => {}
            Ok(seen) => rep.label_lemma.push(format!("{b1} (x) {b2}: state gives {seen:?}")),
            Err(e) => rep.label_lemma.push(format!("{b1} (x) {b2}: {e}")),
        }
        let lhs = r_pair(low, &p).and_then(|q| t_natural_pair(alg, &q));
        let rhs = r_pair(low, &tn);
        match (lhs, rhs) {
            (Ok(x), Ok(y)) if x == y => {}
            (x, y) => rep.comm_r.push(format!("{b1} (x) {b2}: {x:?} vs {y:?}")),
        }
        for r in 1..=l + 1 {
            let a = evolve_tl(&st, r).and_then(|s| t_natural(&s.state, V12).map(|x| x.0));
            let b = t_natural(&st, V12).and_then(|(s, _)| evolve_tl(&s, r).map(|x| x.state));
            match (a, b) {
                (Ok(x), Ok(y)) if x.same_path(&y) => {}
                (x, y) => rep.comm_tr.push(format!("r={r} {b1} (x) {b2}: {:?} vs {:?}", x.map(|s| s.render()), y.map(|s| s.render()))),
            }
        }
        let key = (tn.0.b.clone(), tn.1.b.clone(), weight(low, &[b1.clone(), b2.clone()]));
        if let Some(prev) = images.insert(key, (b1.clone(), b2.clone())) {
            rep.wt_difference.push(format!("{} (x) {} and {b1} (x) {b2}", prev.0, prev.1));
        }
        let cap = 4 * (l as usize + k as usize);
        let mut cur = p.clone();
        let mut deg = 0;
        loop {
            if !ker.is_highest(&[cur.0.b.clone(), cur.1.b.clone()]) {
                rep.degree.push(format!("{b1} (x) {b2}: left the highest weight set at step {deg}"));
                break;
            }
            let next = t_natural_pair(alg, &cur)?;
            if next == cur {
                if cur.0.b != Row::vacuum(low, l) || cur.1.b != Row::vacuum(low, k) {
                    rep.degree.push(format!("{b1} (x) {b2}: fixed point {} (x) {}", cur.0.b, cur.1.b));
                }
                break;
            }
            deg += 1;
            if deg > cap {
                rep.degree.push(format!("{b1} (x) {b2}: degree above {cap}"));
                break;
            }
            cur = next;
        }
        rep.max_degree = rep.max_degree.max(deg);
    }
    Ok(rep)
}

/// Every `(d,c,b)` label of `B_k` at the lowered rank.
pub fn dcb_labels(alg: Algebra, k: u16) -> Result<Vec<Row>> {
    let low = alg.lowered()?;
    let mut out = Vec::new();
    for d in 0..=k {
        for c in 0..=k - d {
            for b in 0..=k - d - c {
                if let Some(r) = dcb_row(low, k, d, c, b) {
                    out.push(r);
                }
            }
        }
    }
    Ok(out)
}

/// The one-soliton label lemma on realized states for every `(d,c,b)` in `B_k`,
/// with every carrier that applies to the type. Returns the failures.
pub fn check_label_lemma(alg: Algebra, k: u16) -> Result<Vec<String>> {
    supported(alg)?;
    let carriers: &[Nat] = if alg.type_class() == TypeClass::II { &[V12, V12B] } else { &[V12] };
    let mut bad = Vec::new();
    for b in dcb_labels(alg, k)? {
        let lab = Label::new(-(2 * k as i64 + 4), b.clone());
        let st = build_state(alg, std::slice::from_ref(&lab), &[], 0)?;
        for &v in carriers {
            let want = t_natural_label(alg, v, &lab)?;
            match t_natural(&st, v) {
                Ok((s, exit)) => {
                    let got = labels_of(&s)?;
                    if got != [want.clone()] {
                        bad.push(format!("T_nat[{v}] {lab}: got {got:?} want {want}"));
                    }
                    let first_factor = matches!(dcb(alg.lowered()?, &lab.b), Some((_, 0, 0)));
                    if v == V12 && first_factor && exit != carrier_after(alg, &lab)? {
                        bad.push(format!("T_nat[{v}] {lab}: exit carrier {exit}"));
                    }
                }
                Err(e) => bad.push(format!("T_nat[{v}] {lab}: {e}")),
            }
        }
    }
    Ok(bad)
}

/// Whether the family has a `B_nat` in this crate.
pub fn has_bnat(f: Family) -> bool {
    matches!(f.type_class(), TypeClass::I | TypeClass::II)
}

/// Structural checks on `B_nat` and on the `B_nat (x) B_1` map. Returns failures.
pub fn check_bnat(alg: Algebra) -> Result<Vec<String>> {
    supported(alg)?;
    let mut bad = Vec::new();
    let elems = bnat_elements(alg)?;
    let n = alg.rank();
    let dim = match alg.classical() {
        Classical::B => (2 * n + 1) * (2 * n) / 2,
        Classical::D => 2 * n * (2 * n - 1) / 2,
        _ => 2 * n * (2 * n - 1) / 2 - 1,
    } + usize::from(alg.type_class() == TypeClass::I);
    if elems.len() != dim {
        bad.push(format!("{alg}: {} elements, expected {dim}", elems.len()));
    }
    let shift: Vec<i64> = {
        let mut s = vec![0; alg.weight_len()];
        if alg.type_class() == TypeClass::I {
            s[0] = 1;
            s[1] = 1;
        } else {
            s[0] = 2;
        }
        s
    };
    let mut seen = HashMap::new();
    for &v in &elems {
        if let Some(w) = bnat_f0(alg, v) {
            if !elems.contains(&w) {
                bad.push(format!("f_0 {v} = {w} is not an element"));
            }
            let want: Vec<i64> = nat_weight(alg, v).iter().zip(&shift).map(|(a, b)| a + b).collect();
            if nat_weight(alg, w) != want {
                bad.push(format!("f_0 {v} = {w} has the wrong weight"));
            }
            if let Some(u) = seen.insert(w, v) {
                bad.push(format!("f_0 {u} = f_0 {v}"));
            }
        }
    }
    let map = step_map(alg)?;
    let mut images = HashMap::new();
    for &v in &elems {
        for a in alg.letters() {
            let (a2, v2) = match map.get(v, a) {
                Ok(x) => x,
                Err(e) => {
                    bad.push(e.to_string());
                    continue;
                }
            };
            let mut lhs = nat_weight(alg, v);
            let mut rhs = nat_weight(alg, v2);
            for (x, y) in lhs.iter_mut().zip(alg.letter_weight(a)) {
                *x += y;
            }
            for (x, y) in rhs.iter_mut().zip(alg.letter_weight(a2)) {
                *x += y;
            }
            if lhs != rhs {
                bad.push(format!("{v} (x) {a} -> {a2} (x) {v2} changes the weight"));
            }
            if let Some((u, b)) = images.insert((a2, v2), (v, a)) {
                bad.push(format!("{u} (x) {b} and {v} (x) {a} share an image"));
            }
        }
    }
    Ok(bad)
}
