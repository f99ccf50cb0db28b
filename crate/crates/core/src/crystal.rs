//! Classical Kashiwara operators on tensor products of rows.
//!
//! A row acts through its word, letters in weakly decreasing order, and a
//! tensor product acts through the concatenated word by the signature rule:
//! `e_i(b (x) b') = e_i b (x) b'` when `phi_i(b) >= eps_i(b')`, and
//! `f_i(b (x) b') = f_i b (x) b'` when `phi_i(b) > eps_i(b')`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::algebra::Algebra;
use crate::row::Row;

/// Per-coordinate data of the vector representation.
#[derive(Debug)]
pub struct Kernel {
    pub alg: Algebra,
    nodes: usize,
    ncoord: usize,
    eps: Vec<u8>,
    phi: Vec<u8>,
    e_to: Vec<Option<u8>>,
    f_to: Vec<Option<u8>>,
}

impl Kernel {
    fn build(alg: Algebra) -> Kernel {
        let letters = alg.coordinate_letters();
        let nodes = alg.nodes();
        let ncoord = letters.len();
        let mut k = Kernel {
            alg,
            nodes,
            ncoord,
            eps: vec![0; (nodes + 1) * ncoord],
            phi: vec![0; (nodes + 1) * ncoord],
            e_to: vec![None; (nodes + 1) * ncoord],
            f_to: vec![None; (nodes + 1) * ncoord],
        };
        for i in 1..=nodes {
            for (c, &a) in letters.iter().enumerate() {
                let at = i * ncoord + c;
                k.eps[at] = alg.eps_letter(i, a) as u8;
                k.phi[at] = alg.phi_letter(i, a) as u8;
                k.e_to[at] = alg.e_letter(i, a).and_then(|b| alg.coord_index(b)).map(|v| v as u8);
                k.f_to[at] = alg.f_letter(i, a).and_then(|b| alg.coord_index(b)).map(|v| v as u8);
            }
        }
        k
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    #[inline]
    fn at(&self, i: usize, c: usize) -> usize {
        i * self.ncoord + c
    }

    /// Locates the letter `e_i` acts on: `(factor, coordinate)`.
    fn e_site(&self, rows: &[Row], i: usize) -> Option<(usize, usize)> {
        let mut pending_plus: u32 = 0;
        let mut last_minus = None;
        for (fi, r) in rows.iter().enumerate() {
            let x = r.coords();
            for c in (0..self.ncoord).rev() {
                let m = x[c] as u32;
                if m == 0 {
                    continue;
                }
                let at = self.at(i, c);
                let (e, p) = (self.eps[at] as u32, self.phi[at] as u32);
                if e == 0 && p == 0 {
                    continue;
                }
                for _ in 0..m {
                    if e > 0 {
                        if pending_plus >= e {
                            pending_plus -= e;
                        } else {
                            pending_plus = 0;
                            last_minus = Some((fi, c));
                        }
                    }
                    pending_plus += p;
                }
            }
        }
        last_minus
    }

    /// Locates the letter `f_i` acts on: `(factor, coordinate)`.
    fn f_site(&self, rows: &[Row], i: usize) -> Option<(usize, usize)> {
        let mut pending_minus: u32 = 0;
        let mut first_plus = None;
        for (fi, r) in rows.iter().enumerate().rev() {
            let x = r.coords();
            for c in 0..self.ncoord {
                let m = x[c] as u32;
                if m == 0 {
                    continue;
                }
                let at = self.at(i, c);
                let (e, p) = (self.eps[at] as u32, self.phi[at] as u32);
                if e == 0 && p == 0 {
                    continue;
                }
                for _ in 0..m {
                    if p > 0 {
                        if pending_minus >= p {
                            pending_minus -= p;
                        } else {
                            pending_minus = 0;
                            first_plus = Some((fi, c));
                        }
                    }
                    pending_minus += e;
                }
            }
        }
        first_plus
    }

    /// Applies `e_i` in place; returns false when it vanishes.
    pub fn e(&self, rows: &mut [Row], i: usize) -> bool {
        match self.e_site(rows, i) {
            Some((fi, c)) => {
                let to = self.e_to[self.at(i, c)].expect("e site has a target") as usize;
                let x = rows[fi].coords_mut();
                x[c] -= 1;
                x[to] += 1;
                true
            }
            None => false,
        }
    }

    /// Applies `f_i` in place; returns false when it vanishes.
    pub fn f(&self, rows: &mut [Row], i: usize) -> bool {
        match self.f_site(rows, i) {
            Some((fi, c)) => {
                let to = self.f_to[self.at(i, c)].expect("f site has a target") as usize;
                let x = rows[fi].coords_mut();
                x[c] -= 1;
                x[to] += 1;
                true
            }
            None => false,
        }
    }

    pub fn eps(&self, rows: &[Row], i: usize) -> u32 {
        let mut probe = rows.to_vec();
        let mut k = 0;
        while self.e(&mut probe, i) {
            k += 1;
        }
        k
    }

    pub fn phi(&self, rows: &[Row], i: usize) -> u32 {
        let mut probe = rows.to_vec();
        let mut k = 0;
        while self.f(&mut probe, i) {
            k += 1;
        }
        k
    }

    pub fn is_highest(&self, rows: &[Row]) -> bool {
        (1..=self.nodes).all(|i| self.e_site(rows, i).is_none())
    }

    /// Raises to the highest weight element, returning the path of nodes.
    pub fn raise(&self, rows: &mut [Row]) -> Vec<u8> {
        let mut path = Vec::new();
        'outer: loop {
            for i in 1..=self.nodes {
                if self.e(rows, i) {
                    path.push(i as u8);
                    continue 'outer;
                }
            }
            return path;
        }
    }

    /// Replays a raising path backwards with `f_i`.
    pub fn lower(&self, rows: &mut [Row], path: &[u8]) -> bool {
        path.iter().rev().all(|&i| self.f(rows, i as usize))
    }
}

static KERNELS: OnceLock<RwLock<HashMap<Algebra, Arc<Kernel>>>> = OnceLock::new();

/// Shared kernel for an algebra.
pub fn kernel(alg: Algebra) -> Arc<Kernel> {
    let map = KERNELS.get_or_init(Default::default);
    if let Some(k) = map.read().expect("kernel cache poisoned").get(&alg) {
        return k.clone();
    }
    let k = Arc::new(Kernel::build(alg));
    map.write().expect("kernel cache poisoned").entry(alg).or_insert(k).clone()
}

/// Total weight of a tensor product.
pub fn weight(alg: Algebra, rows: &[Row]) -> Vec<i64> {
    let mut w = vec![0; alg.weight_len()];
    for r in rows {
        for (a, b) in w.iter_mut().zip(r.weight(alg)) {
            *a += b;
        }
    }
    w
}

/// Classical highest weight elements of `B_l (x) B_k`, by filtering.
pub fn highest_weight_pairs(alg: Algebra, l: u16, k: u16) -> Vec<(Row, Row)> {
    let ker = kernel(alg);
    let mut out = Vec::new();
    let seconds = Row::enumerate(alg, k);
    for s in Row::allowed_sizes(alg, l) {
        let b = Row::ones(alg, l, s);
        for c in &seconds {
            let pair = [b.clone(), c.clone()];
            if ker.is_highest(&pair) {
                out.push((b.clone(), c.clone()));
            }
        }
    }
    out.sort();
    out
}
