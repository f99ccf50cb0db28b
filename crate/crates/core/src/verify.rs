//! Verification suites, grouped by acceptance criterion. Shared by the
//! acceptance run and the command line.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};
use std::time::{Duration, Instant};

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Family};
use crate::automaton::{energy, evolve_tl, spectrum, State};
use crate::crystal::{kernel, weight};
use crate::error::{Error, Result};
use crate::golden;
use crate::natural;
use crate::reduction;
use crate::rmatrix::{r_affine, r_general, Aff};
use crate::row::Row;
use crate::soliton::{build_state, compose_r, label_at, predict, run_scattering, scatter, Label};
use crate::sweep::{self, Mode};

#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub seed: u64,
    pub mode: Mode,
}

impl Default for Config {
    fn default() -> Config {
        Config { seed: 0x5eed_2024, mode: Mode::default() }
    }
}

/// Result of one suite.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.cases > 0
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} cases, {} failures, {:.2}s",
            self.name,
            self.cases,
            self.failures.len(),
            self.elapsed.as_secs_f64()
        )
    }
}

fn timed(name: impl Into<String>, f: impl FnOnce() -> (usize, Vec<String>)) -> Outcome {
    let start = Instant::now();
    let (cases, failures) = f();
    Outcome { name: name.into(), cases, failures, elapsed: start.elapsed() }
}

/// Collects per-experiment verdicts: `Ok(None)` passes, anything else fails.
fn tally(results: Vec<Result<Option<String>>>) -> (usize, Vec<String>) {
    let n = results.len();
    let failures = results
        .into_iter()
        .enumerate()
        .filter_map(|(i, r)| match r {
            Ok(None) => None,
            Ok(Some(m)) => Some(format!("#{i}: {m}")),
            Err(e) => Some(format!("#{i}: {e}")),
        })
        .collect();
    (n, failures)
}

/// Seed of a named sub-batch.
pub fn sub_seed(seed: u64, tag: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in tag.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h ^ seed
}

type PoolKey = (Algebra, u16);

static POOLS: OnceLock<RwLock<HashMap<PoolKey, Arc<Vec<Row>>>>> = OnceLock::new();

/// Cached enumeration of `B_l`.
pub fn pool(alg: Algebra, l: u16) -> Arc<Vec<Row>> {
    let cache = POOLS.get_or_init(Default::default);
    if let Some(p) = cache.read().expect("pool cache poisoned").get(&(alg, l)) {
        return p.clone();
    }
    let p = Arc::new(Row::enumerate(alg, l));
    cache.write().expect("pool cache poisoned").entry((alg, l)).or_insert(p).clone()
}

fn pick(rng: &mut ChaCha8Rng, alg: Algebra, l: u16) -> Row {
    let p = pool(alg, l);
    p[rng.gen_range(0..p.len())].clone()
}

/// Lowest rank of each family whose label algebra meets the family bound.
pub fn scattering_algebras() -> Vec<Algebra> {
    Family::ALL
        .iter()
        .map(|&f| Algebra::new(f, f.min_rank() + 1).expect("rank above the minimum"))
        .collect()
}

/// Lowest rank of each family.
pub fn minimal_algebras() -> Vec<Algebra> {
    Family::ALL
        .iter()
        .map(|&f| Algebra::new(f, f.min_rank()).expect("minimum rank"))
        .collect()
}

const TMAX: usize = 200;

fn show(labels: &[Label]) -> String {
    labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ; ")
}

// ---------------------------------------------------------------- traces

pub fn golden_suite(cfg: &Config) -> Outcome {
    timed("golden traces", || {
        let traces = golden::traces();
        let res = sweep::map(cfg.mode, &traces, |tr| {
            golden::replay(tr).map(|r| match r.mismatch {
                Some((t, got)) => Some(format!("{} differs at row {t}: {got}", tr.name)),
                None if r.elapsed >= Duration::from_secs(1) => {
                    Some(format!("{} took {:.2}s", tr.name, r.elapsed.as_secs_f64()))
                }
                None => None,
            })
        });
        tally(res)
    })
}

// ------------------------------------------------------------ scattering

/// Two solitons of lengths `5 >= l > k >= 1`, longer one on the left, under `T_{l+1}`.
pub fn two_soliton(alg: Algebra, rng: &mut ChaCha8Rng) -> Result<Option<String>> {
    let low = alg.lowered()?;
    let l = rng.gen_range(2..=5u16);
    let k = rng.gen_range(1..l);
    let b1 = pick(rng, low, l);
    let b2 = pick(rng, low, k);
    let gap = l as i64 + rng.gen_range(0..=2);
    let labels = [label_at(alg, b1, 0), label_at(alg, b2, l as i64 + gap)];
    let sc = scatter(alg, &labels, &[], 0, l + 1, TMAX)?;
    Ok((!sc.matches()).then(|| {
        format!("{alg} in {} out {} predicted {}", show(&sc.incoming), show(&sc.outgoing), show(&sc.predicted))
    }))
}

pub fn theorem_suite(cfg: &Config, alg: Algebra, runs: usize) -> Outcome {
    timed(format!("two-soliton scattering {alg}"), || {
        let seed = sub_seed(cfg.seed, &format!("theorem {alg}"));
        tally(sweep::run(cfg.mode, seed, runs, |_, rng| two_soliton(alg, rng)))
    })
}

/// Solitons of lengths 5, 3, 1 from left to right under `T_6`; outgoing labels
/// against both bracketings of the composed `R`.
pub fn three_soliton(alg: Algebra, rng: &mut ChaCha8Rng) -> Result<Option<String>> {
    let low = alg.lowered()?;
    let bs = [pick(rng, low, 5), pick(rng, low, 3), pick(rng, low, 1)];
    let g1 = 5 + rng.gen_range(0..=2);
    let g2 = 3 + rng.gen_range(0..=2);
    let s2 = 5 + g1;
    let s3 = s2 + 3 + g2;
    let [b5, b3, b1] = bs;
    let labels = [label_at(alg, b5, 0), label_at(alg, b3, s2), label_at(alg, b1, s3)];
    let sc = scatter(alg, &labels, &[], 0, 6, TMAX)?;
    let first = compose_r(alg, &labels, &[0, 1, 0])?;
    let second = compose_r(alg, &labels, &[1, 0, 1])?;
    if first != second {
        return Ok(Some(format!("{alg} bracketings differ on {}", show(&labels))));
    }
    Ok((sc.outgoing != first).then(|| {
        format!("{alg} in {} out {} composed {}", show(&labels), show(&sc.outgoing), show(&first))
    }))
}

pub fn corollary_suite(cfg: &Config, alg: Algebra, runs: usize) -> Outcome {
    timed(format!("three-soliton scattering {alg}"), || {
        let seed = sub_seed(cfg.seed, &format!("corollary {alg}"));
        tally(sweep::run(cfg.mode, seed, runs, |_, rng| three_soliton(alg, rng)))
    })
}

// ---------------------------------------------------------- conservation

/// A homogeneous window of up to 12 sites, each vacuum with probability one half.
pub fn random_state(alg: Algebra, rng: &mut ChaCha8Rng) -> State {
    let letters = alg.letters();
    let n = rng.gen_range(1..=12);
    let cells = (0..n)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Row::vacuum(alg, 1)
            } else {
                Row::letter(alg, letters[rng.gen_range(0..letters.len())]).expect("letter of B_1")
            }
        })
        .collect();
    State::new(alg, cells, 0).expect("sites of B_1")
}

fn commutation(alg: Algebra, rng: &mut ChaCha8Rng) -> Result<Option<String>> {
    let st = random_state(alg, rng);
    for l in 1..=6u16 {
        for lp in 1..=6u16 {
            let tl = evolve_tl(&st, lp)?.state;
            let a = evolve_tl(&tl, l)?.state;
            let b = evolve_tl(&evolve_tl(&st, l)?.state, lp)?.state;
            if !a.same_path(&b) {
                return Ok(Some(format!("{alg} T_{l} T_{lp} on {st}")));
            }
            if energy(&tl, l)? != energy(&st, l)? {
                return Ok(Some(format!("{alg} E_{l} after T_{lp} on {st}")));
            }
        }
    }
    Ok(None)
}

/// One to three solitons of random lengths, far apart; `N_l` against the counts.
fn soliton_content(alg: Algebra, rng: &mut ChaCha8Rng) -> Result<Option<String>> {
    let low = alg.lowered()?;
    let count = rng.gen_range(1..=3);
    let mut labels = Vec::new();
    let mut want = vec![0i64; 5];
    let mut slot = 0;
    for _ in 0..count {
        let l = rng.gen_range(1..=5u16);
        want[l as usize - 1] += 1;
        labels.push(label_at(alg, pick(rng, low, l), slot));
        slot += l as i64 + 12;
    }
    while want.last() == Some(&0) {
        want.pop();
    }
    let st = build_state(alg, &labels, &[], 0)?;
    let got = spectrum(&st)?;
    Ok((got != want).then(|| format!("{alg} N = {got:?}, placed {want:?} in {st}")))
}

pub fn conservation_suite(cfg: &Config, alg: Algebra, runs: usize) -> Outcome {
    timed(format!("conservation and commutation {alg}"), || {
        let seed = sub_seed(cfg.seed, &format!("conservation {alg}"));
        let mut res = sweep::run(cfg.mode, seed, runs, |_, rng| commutation(alg, rng));
        let seed = sub_seed(cfg.seed, &format!("content {alg}"));
        res.extend(sweep::run(cfg.mode, seed, runs, |_, rng| soliton_content(alg, rng)));
        tally(res)
    })
}

// -------------------------------------------------------------- R-matrix

fn pair_properties(alg: Algebra, b: &Row, c: &Row) -> Result<Option<String>> {
    let ker = kernel(alg);
    let (c2, b2, h) = r_general(alg, b, c)?;
    let (b3, c3, h3) = r_general(alg, &c2, &b2)?;
    if (&b3, &c3, h3) != (b, c, h) {
        return Ok(Some(format!("{alg} R is not an involution on {b} (x) {c}")));
    }
    if weight(alg, &[b.clone(), c.clone()]) != weight(alg, &[c2.clone(), b2.clone()]) {
        return Ok(Some(format!("{alg} R changes the weight of {b} (x) {c}")));
    }
    for i in 1..=alg.nodes() {
        for raise in [true, false] {
            let mut p = [b.clone(), c.clone()];
            let mut q = [c2.clone(), b2.clone()];
            let (hp, hq) = if raise {
                (ker.e(&mut p, i), ker.e(&mut q, i))
            } else {
                (ker.f(&mut p, i), ker.f(&mut q, i))
            };
            if hp != hq {
                return Ok(Some(format!("{alg} operator {i} is defined on one side only for {b} (x) {c}")));
            }
            if hp {
                let [qc, qb] = q;
                if r_general(alg, &p[0], &p[1])? != (qc, qb, h) {
                    return Ok(Some(format!("{alg} R does not commute with operator {i} at {b} (x) {c}")));
                }
            }
        }
    }
    Ok(None)
}

fn yang_baxter(alg: Algebra, rows: [&Row; 3]) -> Result<Option<String>> {
    let start: Vec<Aff> = rows.iter().map(|r| Aff::new(0, (*r).clone())).collect();
    let run = |order: [usize; 3]| -> Result<Vec<Aff>> {
        let mut v = start.clone();
        for i in order {
            let (a, b) = r_affine(alg, &v[i], &v[i + 1])?;
            v[i] = a;
            v[i + 1] = b;
        }
        Ok(v)
    };
    let (x, y) = (run([0, 1, 0])?, run([1, 0, 1])?);
    Ok((x != y).then(|| format!("{alg} Yang-Baxter fails on {} (x) {} (x) {}", rows[0], rows[1], rows[2])))
}

/// Involution, weight and operator equivariance over `B_l (x) B_k`, `l, k <= 3`.
pub fn rmatrix_pairs_suite(cfg: &Config, alg: Algebra) -> Outcome {
    timed(format!("R involution, weight, equivariance {alg}"), || {
        let mut res = Vec::new();
        for l in 1..=3u16 {
            for k in 1..=3u16 {
                let cs = pool(alg, k);
                let per_b = sweep::map(cfg.mode, &pool(alg, l), |b| {
                    cs.iter().map(|c| pair_properties(alg, b, c)).collect::<Vec<_>>()
                });
                res.extend(per_b.into_iter().flatten());
            }
        }
        tally(res)
    })
}

/// Yang-Baxter on 500 random triples with lengths up to 3.
pub fn yang_baxter_random_suite(cfg: &Config, alg: Algebra) -> Outcome {
    timed(format!("Yang-Baxter random {alg}"), || {
        let seed = sub_seed(cfg.seed, &format!("yang-baxter {alg}"));
        tally(sweep::run(cfg.mode, seed, 500, |_, rng| {
            let ls: [u16; 3] = [rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(1..=3)];
            let [a, b, c] = ls.map(|l| pick(rng, alg, l));
            yang_baxter(alg, [&a, &b, &c])
        }))
    })
}

/// Yang-Baxter on every triple of `B_1`.
pub fn yang_baxter_exhaustive_suite(alg: Algebra) -> Outcome {
    timed(format!("Yang-Baxter exhaustive B_1 {alg}"), || {
        let p = pool(alg, 1);
        let mut res = Vec::new();
        for a in p.iter() {
            for b in p.iter() {
                for c in p.iter() {
                    res.push(yang_baxter(alg, [a, b, c]));
                }
            }
        }
        tally(res)
    })
}

/// Smallest energy over `B_l (x) B_k` in units of `min(l, k)`.
pub fn min_energy_factor(f: Family) -> i64 {
    match f {
        Family::A1 | Family::C1 => 1,
        Family::A2Even | Family::D2 => 2,
        Family::A2Odd | Family::B1 | Family::D1 => 0,
    }
}

/// `H(u_l (x) u_k) = 2 varsigma min(l, k)` and the minimum of `H`, `l, k <= 4`.
pub fn energy_suite(cfg: &Config, alg: Algebra) -> Outcome {
    timed(format!("energy normalisation and minimum {alg}"), || {
        let vs = alg.varsigma();
        let mut cases = 0;
        let mut bad = Vec::new();
        for l in 1..=4u16 {
            for k in 1..=4u16 {
                let m = l.min(k) as i64;
                cases += 1;
                match r_general(alg, &Row::vacuum(alg, l), &Row::vacuum(alg, k)) {
                    Ok((_, _, h)) if h == 2 * vs * m => {}
                    Ok((_, _, h)) => bad.push(format!("{alg} H(u_{l} (x) u_{k}) = {h}")),
                    Err(e) => bad.push(e.to_string()),
                }
                let cs = pool(alg, k);
                let mins = sweep::map(cfg.mode, &pool(alg, l), |b| {
                    cs.iter().map(|c| r_general(alg, b, c).map(|x| x.2)).try_fold(i64::MAX, |lo, h| h.map(|h| lo.min(h)))
                });
                let lo = mins.into_iter().try_fold(i64::MAX, |lo, h| h.map(|h| lo.min(h)));
                cases += 1;
                match lo {
                    Ok(lo) if lo == min_energy_factor(alg.family()) * m => {}
                    Ok(lo) => bad.push(format!("{alg} min H on B_{l} (x) B_{k} is {lo}")),
                    Err(e) => bad.push(e.to_string()),
                }
            }
        }
        (cases, bad)
    })
}

// --------------------------------------------------------------- natural

/// Exhaustive highest weight checks of `T_nat` for one `(l, k)`.
pub fn natural_suite(alg: Algebra, l: u16, k: u16) -> Outcome {
    timed(format!("T_nat checks {alg} l={l} k={k}"), || match natural::check_commutations(alg, l, k) {
        Ok(rep) => {
            let mut bad = Vec::new();
            let groups = [
                ("label lemma", &rep.label_lemma),
                ("commutes with R", &rep.comm_r),
                ("commutes with T_r", &rep.comm_tr),
                ("distinct preimages", &rep.wt_difference),
                ("degree", &rep.degree),
            ];
            for (name, list) in groups {
                bad.extend(list.iter().map(|m| format!("{name}: {m}")));
            }
            (rep.hw_count, bad)
        }
        Err(e) => (0, vec![e.to_string()]),
    })
}

/// `B_nat` structure and the one-soliton label lemma for `k <= 6`.
pub fn bnat_suite(alg: Algebra) -> Outcome {
    timed(format!("B_nat and one-soliton T_nat {alg}"), || {
        let mut bad = Vec::new();
        let mut cases = 1;
        match natural::check_bnat(alg) {
            Ok(b) => bad.extend(b),
            Err(e) => bad.push(e.to_string()),
        }
        for k in 1..=6u16 {
            cases += natural::dcb_labels(alg, k).map_or(0, |v| v.len());
            match natural::check_label_lemma(alg, k) {
                Ok(b) => bad.extend(b),
                Err(e) => bad.push(e.to_string()),
            }
        }
        (cases, bad)
    })
}

// --------------------------------------------------------------- Type III

pub fn type_iii_suite(cfg: &Config, alg: Algebra) -> Outcome {
    timed(format!("omega and eta reductions {alg}"), || {
        let seed = sub_seed(cfg.seed, &format!("omega {alg}"));
        let (mut cases, mut bad) = tally(sweep::run(cfg.mode, seed, 200, |_, rng| {
            let l = rng.gen_range(1..=3u16);
            let k = rng.gen_range(1..=3u16);
            let (b, c) = (pick(rng, alg, l), pick(rng, alg, k));
            reduction::omega_equivariant(alg, &b, &c)
                .map(|ok| (!ok).then(|| format!("{alg} omega on {b} (x) {c}")))
        }));
        for check in [reduction::check_fact2, reduction::check_fact3] {
            match check(alg, 3) {
                Ok((n, b)) => {
                    cases += n;
                    bad.extend(b);
                }
                Err(e) => bad.push(e.to_string()),
            }
        }
        (cases, bad)
    })
}

// ---------------------------------------------------------- inhomogeneous

/// The bundled inhomogeneous example: trace replay and its scattering labels.
pub fn inhomogeneous_example() -> Result<Option<String>> {
    let tr = golden::find("inhomo").ok_or_else(|| Error::Parse("no inhomo trace".into()))?;
    let rep = golden::replay(&tr)?;
    if let Some((t, got)) = rep.mismatch {
        return Ok(Some(format!("inhomo differs at row {t}: {got}")));
    }
    let st = tr.initial()?;
    let (incoming, outgoing, _) = run_scattering(&st, tr.l, TMAX)?;
    let want = predict(tr.alg, &incoming, &st.capacities())?;
    Ok((outgoing != want).then(|| format!("inhomo out {} predicted {}", show(&outgoing), show(&want))))
}

/// Two solitons crossing a block of sites with capacities drawn from `{1, 2, 3}`.
pub fn inhomogeneous_run(alg: Algebra, rng: &mut ChaCha8Rng) -> Result<Option<String>> {
    let low = alg.lowered()?;
    let l = rng.gen_range(2..=5u16);
    let k = rng.gen_range(1..l);
    let labels = [
        label_at(alg, pick(rng, low, l), 0),
        label_at(alg, pick(rng, low, k), 2 * l as i64 + rng.gen_range(0..=2)),
    ];
    let sites = rng.gen_range(1..=4);
    let region: Vec<Row> = (0..sites).map(|_| Row::vacuum(alg, rng.gen_range(1..=3))).collect();
    let gap = l as usize + rng.gen_range(0..=3);
    let sc = scatter(alg, &labels, &region, gap, l + 1, TMAX)?;
    Ok((!sc.matches()).then(|| {
        let caps: Vec<u16> = region.iter().map(Row::l).collect();
        format!(
            "{alg} capacities {caps:?} in {} out {} predicted {}",
            show(&sc.incoming),
            show(&sc.outgoing),
            show(&sc.predicted)
        )
    }))
}

pub fn inhomogeneous_suite(cfg: &Config, runs: usize) -> Outcome {
    let alg = Algebra::new(Family::C1, 3).expect("C1:3");
    timed(format!("inhomogeneous lattices {alg}"), || {
        let seed = sub_seed(cfg.seed, "inhomogeneous");
        let mut res = vec![inhomogeneous_example()];
        res.extend(sweep::run(cfg.mode, seed, runs, |_, rng| inhomogeneous_run(alg, rng)));
        tally(res)
    })
}

// ------------------------------------------------------------- criteria

pub const CRITERIA: [(u8, &str); 8] = [
    (1, "golden traces"),
    (2, "two-soliton scattering"),
    (3, "three-soliton scattering"),
    (4, "conservation and commutation"),
    (5, "R-matrix properties"),
    (6, "T_nat machinery"),
    (7, "Type III reductions"),
    (8, "inhomogeneous lattices"),
];

fn alg(s: &str) -> Algebra {
    s.parse().expect("valid descriptor")
}

/// Every suite of criterion `id`.
pub fn criterion(id: u8, cfg: &Config) -> Vec<Outcome> {
    match id {
        1 => vec![golden_suite(cfg)],
        2 => scattering_algebras().into_iter().map(|a| theorem_suite(cfg, a, 200)).collect(),
        3 => scattering_algebras().into_iter().map(|a| corollary_suite(cfg, a, 50)).collect(),
        4 => scattering_algebras().into_iter().map(|a| conservation_suite(cfg, a, 100)).collect(),
        5 => {
            let mut out = Vec::new();
            for a in minimal_algebras() {
                out.push(rmatrix_pairs_suite(cfg, a));
                out.push(yang_baxter_random_suite(cfg, a));
                out.push(energy_suite(cfg, a));
            }
            out.push(yang_baxter_exhaustive_suite(alg("C1:2")));
            out
        }
        6 => {
            let mut out = Vec::new();
            for a in ["A2odd:3", "B1:3", "D1:4", "C1:3"].map(alg) {
                out.push(bnat_suite(a));
                for (l, k) in [(3, 2), (4, 2), (4, 3)] {
                    out.push(natural_suite(a, l, k));
                }
            }
            out
        }
        7 => ["A2even:2", "A2even:3", "D2:2", "D2:3"].map(alg).iter().map(|&a| type_iii_suite(cfg, a)).collect(),
        8 => vec![inhomogeneous_suite(cfg, 100)],
        _ => Vec::new(),
    }
}
