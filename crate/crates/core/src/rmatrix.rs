//! Combinatorial R-matrix `B_l (x) B_k -> B_k (x) B_l` and energy function.
//!
//! An element is raised to its classical highest weight element, looked up
//! in the highest weight table and lowered again along the same path.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::algebra::{Algebra, Family, Letter, TypeClass};
use crate::crystal::{highest_weight_pairs, kernel};
use crate::error::{Error, Result};
use crate::row::Row;

/// Image of a highest weight element: `c~ (x) b~` and the energy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HwImage {
    pub first: Row,
    pub second: Row,
    pub h: i64,
}

/// Highest weight table for `B_l (x) B_k` with `l >= k`.
#[derive(Debug)]
pub struct HwTable {
    pub alg: Algebra,
    pub l: u16,
    pub k: u16,
    forward: HashMap<(Row, Row), HwImage>,
    backward: HashMap<(Row, Row), HwImage>,
}

impl HwTable {
    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// Entries sorted by source.
    pub fn entries(&self) -> Vec<(&(Row, Row), &HwImage)> {
        let mut v: Vec<_> = self.forward.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn get(&self, b: &Row, c: &Row) -> Option<&HwImage> {
        self.forward.get(&(b.clone(), c.clone()))
    }

    /// One line per entry: `hw_in -> hw_out ; H=<int>`.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for ((b, c), img) in self.entries() {
            s.push_str(&format!(
                "{}|{} -> {}|{} ; H={}\n",
                b.tuple(),
                c.tuple(),
                img.first.tuple(),
                img.second.tuple(),
                img.h
            ));
        }
        s
    }

    fn from_forward(alg: Algebra, l: u16, k: u16, forward: HashMap<(Row, Row), HwImage>) -> HwTable {
        let backward = forward
            .iter()
            .map(|((b, c), img)| {
                (
                    (img.first.clone(), img.second.clone()),
                    HwImage { first: b.clone(), second: c.clone(), h: img.h },
                )
            })
            .collect();
        HwTable { alg, l, k, forward, backward }
    }
}

/// `(x_1, x_2, xb_1) = (d, c, b)` with every other coordinate zero.
pub fn dcb_row(alg: Algebra, len: u16, d: u16, c: u16, b: u16) -> Option<Row> {
    let m = alg.num_coords();
    let mut x = vec![0u16; m];
    x[0] = d;
    if c > 0 {
        let i2 = alg.coord_index(Letter::Plain(2))?;
        if i2 == m - 1 {
            return None;
        }
        x[i2] = c;
    }
    if b > 0 {
        if alg.family() == Family::A1 {
            return None;
        }
        x[m - 1] += b;
    }
    Row::new(alg, len, x).ok()
}

fn pos(x: i64) -> i64 {
    x.max(0)
}

/// Type I image of `(l) (x) (d,c,b)`, as `((k), (d',c',b'), H)`.
pub fn type_i_image(l: i64, k: i64, d: i64, c: i64, b: i64) -> (i64, [i64; 3], i64) {
    let _ = d;
    (k, [l - b - c, c, b], 2 * k - 2 * b - c)
}

/// Type II image of `(f) (x) (d,c,b)`, as `((f'), (d',c',b'), H)`.
pub fn type_ii_image(l: i64, k: i64, f: i64, d: i64, c: i64, b: i64) -> (i64, [i64; 3], i64) {
    let e = (l - f) / 2;
    let a = (k - b - c - d) / 2;
    if a >= e {
        let y = (l - k).min(pos(b - d));
        (k - 2 * e, [d + l - k - y, c, b - y], k + a - e + pos(d - b))
    } else if d - b <= e - a && e - a <= l - k {
        let z = (b - d + e - a).min(l - k - e + a);
        (k - 2 * a, [d + l - k - e + a - z, c, b + e - a - z], k)
    } else {
        let w = (l - k).min(pos(2 * e - 2 * a - d + b));
        (
            k - 2 * e + 2 * w,
            [d + l - k - w, c, b + w],
            k + (e - a - l + k).max(d - b - e + a),
        )
    }
}

/// Type A image of `u_l (x) (x_1, x_2, 0..)`.
pub fn type_a_image(l: i64, k: i64, x1: i64, x2: i64) -> ([i64; 2], i64) {
    ([x1 + l - k, x2], x1 + k)
}

fn to_u16(v: i64) -> Result<u16> {
    u16::try_from(v).map_err(|_| Error::MissingImage(format!("negative coordinate {v}")))
}

fn build_formula_table(alg: Algebra, l: u16, k: u16) -> Result<HwTable> {
    let mut fwd = HashMap::new();
    let (li, ki) = (l as i64, k as i64);
    let mut put = |src: (Row, Row), first: Row, second: Row, h: i64| {
        fwd.insert(src, HwImage { first, second, h });
    };
    match alg.type_class() {
        TypeClass::A => {
            for x1 in 0..=k {
                let x2 = k - x1;
                let mut cx = vec![0u16; alg.num_coords()];
                cx[0] = x1;
                cx[1] = x2;
                let src = (Row::vacuum(alg, l), Row::new(alg, k, cx)?);
                let ([y1, y2], h) = type_a_image(li, ki, x1 as i64, x2 as i64);
                let mut bx = vec![0u16; alg.num_coords()];
                bx[0] = to_u16(y1)?;
                bx[1] = to_u16(y2)?;
                put(src, Row::vacuum(alg, k), Row::new(alg, l, bx)?, h);
            }
        }
        TypeClass::I => {
            for b in 0..=k {
                for c in 0..=k - b {
                    let d = k - b - c;
                    let Some(second) = dcb_row(alg, k, d, c, b) else { continue };
                    let (f2, [d2, c2, b2], h) =
                        type_i_image(li, ki, d as i64, c as i64, b as i64);
                    let img2 = dcb_row(alg, l, to_u16(d2)?, to_u16(c2)?, to_u16(b2)?)
                        .ok_or_else(|| Error::MissingImage(format!("type I image of {second}")))?;
                    put(
                        (Row::vacuum(alg, l), second),
                        Row::ones(alg, k, to_u16(f2)?),
                        img2,
                        h,
                    );
                }
            }
        }
        TypeClass::II => {
            for f in (0..=l).rev().step_by(2) {
                for b in 0..=k {
                    for c in 0..=k - b {
                        for d in 0..=k - b - c {
                            if (k - b - c - d) % 2 != 0 || f < b + c {
                                continue;
                            }
                            let Some(second) = dcb_row(alg, k, d, c, b) else { continue };
                            let (f2, [d2, c2, b2], h) =
                                type_ii_image(li, ki, f as i64, d as i64, c as i64, b as i64);
                            let img2 = dcb_row(alg, l, to_u16(d2)?, to_u16(c2)?, to_u16(b2)?)
                                .ok_or_else(|| {
                                    Error::MissingImage(format!("type II image of ({f}) (x) {second}"))
                                })?;
                            put(
                                (Row::ones(alg, l, f), second),
                                Row::ones(alg, k, to_u16(f2)?),
                                img2,
                                h,
                            );
                        }
                    }
                }
            }
        }
        TypeClass::III => unreachable!("type III tables are pulled back through omega"),
    }
    Ok(HwTable::from_forward(alg, l, k, fwd))
}

fn build_omega_table(alg: Algebra, l: u16, k: u16) -> Result<HwTable> {
    let target = alg.omega_target()?;
    let mut fwd = HashMap::new();
    for (b, c) in highest_weight_pairs(alg, l, k) {
        let (c2, b2, h) = r_general(target, &omega(alg, &b)?, &omega(alg, &c)?)?;
        fwd.insert(
            (b, c),
            HwImage { first: omega_inv(alg, &c2)?, second: omega_inv(alg, &b2)?, h },
        );
    }
    Ok(HwTable::from_forward(alg, l, k, fwd))
}

/// Builds the highest weight table for `B_l (x) B_k`, `l >= k`.
pub fn build_hw_table(alg: Algebra, l: u16, k: u16) -> Result<HwTable> {
    if l < k {
        return Err(Error::Unsupported("tables are built for l >= k"));
    }
    match alg.type_class() {
        TypeClass::III => build_omega_table(alg, l, k),
        _ => build_formula_table(alg, l, k),
    }
}

type TableKey = (Algebra, u16, u16);

static TABLES: OnceLock<RwLock<HashMap<TableKey, Arc<HwTable>>>> = OnceLock::new();

fn cache_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("KR_SOLITON_TABLE_CACHE")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(4096)
    })
}

/// Cached table for `B_l (x) B_k`, `l >= k`.
pub fn hw_table(alg: Algebra, l: u16, k: u16) -> Result<Arc<HwTable>> {
    let map = TABLES.get_or_init(Default::default);
    if let Some(t) = map.read().expect("table cache poisoned").get(&(alg, l, k)) {
        return Ok(t.clone());
    }
    let t = Arc::new(build_hw_table(alg, l, k)?);
    let mut w = map.write().expect("table cache poisoned");
    if w.len() >= cache_cap() {
        w.clear();
    }
    Ok(w.entry((alg, l, k)).or_insert(t).clone())
}

/// `R(b (x) c) = c~ (x) b~` with `H(b (x) c)`.
pub fn r_general(alg: Algebra, b: &Row, c: &Row) -> Result<(Row, Row, i64)> {
    let ker = kernel(alg);
    let (l, k) = (b.l(), c.l());
    let mut pair = [b.clone(), c.clone()];
    let path = ker.raise(&mut pair);
    let [hb, hc] = pair;
    let key = (hb, hc);
    let img = if l >= k {
        let t = hw_table(alg, l, k)?;
        t.forward.get(&key).cloned()
    } else {
        let t = hw_table(alg, k, l)?;
        t.backward.get(&key).cloned()
    }
    .ok_or_else(|| Error::MissingImage(format!("{} (x) {} in {alg}", key.0, key.1)))?;
    let mut out = [img.first, img.second];
    if !ker.lower(&mut out, &path) {
        return Err(Error::MissingImage(format!("lowering failed for {b} (x) {c} in {alg}")));
    }
    let [c2, b2] = out;
    Ok((c2, b2, img.h))
}

/// Energy `H(b (x) c)`.
pub fn energy(alg: Algebra, b: &Row, c: &Row) -> Result<i64> {
    Ok(r_general(alg, b, c)?.2)
}

/// An element `z^d b` of the affinization.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Aff {
    pub d: i64,
    pub row: Row,
}

impl Aff {
    pub fn new(d: i64, row: Row) -> Aff {
        Aff { d, row }
    }
}

/// `z^d b (x) z^d' c -> z^(d'+H) c~ (x) z^(d-H) b~`.
pub fn r_affine(alg: Algebra, b: &Aff, c: &Aff) -> Result<(Aff, Aff)> {
    let (c2, b2, h) = r_general(alg, &b.row, &c.row)?;
    Ok((Aff::new(c.d + h, c2), Aff::new(b.d - h, b2)))
}

/// `omega`: embeds Type III `B_l` into the Type II `B_2l`.
pub fn omega(alg: Algebra, b: &Row) -> Result<Row> {
    let target = alg.omega_target()?;
    let n = alg.rank();
    let x = b.coords();
    let y: Vec<u16> = match alg.family() {
        Family::A2Even => x.iter().map(|v| 2 * v).collect(),
        Family::D2 => {
            let x0 = x[n];
            let mut y = Vec::with_capacity(2 * n);
            y.extend(x[..n].iter().map(|v| 2 * v));
            y[n - 1] += x0;
            y.extend(x[n + 1..].iter().map(|v| 2 * v));
            y[n] += x0;
            y
        }
        _ => return Err(Error::Unsupported("omega is only defined for Type III")),
    };
    Row::new(target, 2 * b.l(), y)
}

/// Inverse of [`omega`] on its image.
pub fn omega_inv(alg: Algebra, b: &Row) -> Result<Row> {
    let n = alg.rank();
    let y = b.coords();
    let fail = || Error::NotInCrystal { l: b.l() / 2, detail: format!("{b} is not in the image of omega") };
    if b.l() % 2 != 0 {
        return Err(fail());
    }
    let half = |v: u16| if v % 2 == 0 { Ok(v / 2) } else { Err(fail()) };
    let x: Vec<u16> = match alg.family() {
        Family::A2Even => y.iter().map(|&v| half(v)).collect::<Result<_>>()?,
        Family::D2 => {
            let (p, q) = (y[n - 1], y[n]);
            if p % 2 != q % 2 {
                return Err(fail());
            }
            let x0 = p % 2;
            let mut x = Vec::with_capacity(2 * n + 1);
            for &v in &y[..n - 1] {
                x.push(half(v)?);
            }
            x.push((p - x0) / 2);
            x.push(x0);
            x.push((q - x0) / 2);
            for &v in &y[n + 1..] {
                x.push(half(v)?);
            }
            x
        }
        _ => return Err(Error::Unsupported("omega is only defined for Type III")),
    };
    Row::new(alg, b.l() / 2, x)
}

/// `eta`: `B_1` of a Type III algebra into `B~_1 (x) B~_1`.
pub fn eta(alg: Algebra, a: Letter) -> Result<[Letter; 2]> {
    let n = alg.rank() as u8;
    match a {
        Letter::Phi => Ok([Letter::Plain(1), Letter::Bar(1)]),
        Letter::Zero if alg.family() == Family::D2 => Ok([Letter::Bar(n), Letter::Plain(n)]),
        Letter::Plain(_) | Letter::Bar(_) => Ok([a, a]),
        _ => Err(Error::Unsupported("eta is only defined on Type III letters")),
    }
}

/// R computed by conjugating the Type II R-matrix with `omega` on the whole
/// element rather than on highest weight elements only.
pub fn r_via_omega(alg: Algebra, b: &Row, c: &Row) -> Result<(Row, Row, i64)> {
    let target = alg.omega_target()?;
    let (c2, b2, h) = r_general(target, &omega(alg, b)?, &omega(alg, c)?)?;
    Ok((omega_inv(alg, &c2)?, omega_inv(alg, &b2)?, h))
}
