use proptest::prelude::*;
use rand::Rng;

use kr_soliton::automaton::{energy, evolve_tl, evolve_tl_inverse, State};
use kr_soliton::rmatrix::r_general;
use kr_soliton::soliton::{iota, label_at, scatter, uniota};
use kr_soliton::sweep::{self, rng_for, Mode};
use kr_soliton::verify::{minimal_algebras, pool, random_state, scattering_algebras};
use kr_soliton::{Algebra, Row};

fn pick(alg: Algebra, l: u16, i: usize) -> Row {
    let p = pool(alg, l);
    p[i % p.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn r_is_an_involution_keeping_energy(a in 0..7usize, l in 1..=4u16, k in 1..=4u16, i in any::<usize>(), j in any::<usize>()) {
        let alg = minimal_algebras()[a];
        let (b, c) = (pick(alg, l, i), pick(alg, k, j));
        let (c2, b2, h) = r_general(alg, &b, &c).unwrap();
        prop_assert_eq!(c2.l(), k);
        prop_assert_eq!(b2.l(), l);
        prop_assert_eq!(r_general(alg, &c2, &b2).unwrap(), (b, c, h));
    }

    #[test]
    fn iota_round_trip(a in 0..7usize, l in 1..=5u16, i in any::<usize>()) {
        let alg = scattering_algebras()[a];
        let b = pick(alg.lowered().unwrap(), l, i);
        let w = iota(alg, &b).unwrap();
        prop_assert_eq!(uniota(alg, &w).unwrap(), b);
    }

    #[test]
    fn state_lines_round_trip(a in 0..7usize, seed in any::<u64>()) {
        let alg = scattering_algebras()[a];
        let st = random_state(alg, &mut rng_for(seed, 0));
        let back = State::parse_line(&st.to_line(), None).unwrap();
        prop_assert_eq!(back.cells(), st.cells());
    }

    #[test]
    fn inverse_undoes_evolution(a in 0..7usize, l in 1..=6u16, seed in any::<u64>()) {
        let alg = scattering_algebras()[a];
        let st = random_state(alg, &mut rng_for(seed, 1));
        let next = evolve_tl(&st, l).unwrap().state;
        let back = evolve_tl_inverse(&next, l).unwrap();
        prop_assert!(back.same_path(&st), "{} -> {} -> {}", st, next, back);
    }

    #[test]
    fn energies_are_conserved(a in 0..7usize, l in 1..=6u16, lp in 1..=6u16, seed in any::<u64>()) {
        let alg = scattering_algebras()[a];
        let st = random_state(alg, &mut rng_for(seed, 2));
        let moved = evolve_tl(&st, lp).unwrap().state;
        prop_assert_eq!(energy(&moved, l).unwrap(), energy(&st, l).unwrap());
    }

    #[test]
    fn vacuum_is_fixed(a in 0..7usize, l in 1..=6u16, n in 0..10usize) {
        let alg = scattering_algebras()[a];
        let st = State::new(alg, vec![Row::vacuum(alg, 1); n], 3).unwrap();
        let step = evolve_tl(&st, l).unwrap();
        prop_assert!(step.state.same_path(&st));
        prop_assert_eq!(step.energy, 0);
    }
}

fn scatter_digest(alg: Algebra, i: usize, rng: &mut rand_chacha::ChaCha8Rng) -> String {
    let low = alg.lowered().unwrap();
    let l = rng.gen_range(2..=4u16);
    let k = rng.gen_range(1..l);
    let b1 = pick(low, l, rng.gen());
    let b2 = pick(low, k, rng.gen());
    let labels = [label_at(alg, b1, 0), label_at(alg, b2, 2 * l as i64 + 1)];
    let sc = scatter(alg, &labels, &[], 0, l + 1, 200).unwrap();
    format!("{i}: {:?} {:?}", sc.outgoing, sc.steps)
}

#[test]
fn parallel_and_sequential_sweeps_agree() {
    for alg in scattering_algebras() {
        let par = sweep::run(Mode::Parallel, 7, 64, |i, rng| scatter_digest(alg, i, rng));
        let seq = sweep::run(Mode::Sequential, 7, 64, |i, rng| scatter_digest(alg, i, rng));
        assert_eq!(par, seq);
        let again = sweep::run(Mode::Sequential, 7, 64, |i, rng| scatter_digest(alg, i, rng));
        assert_eq!(seq, again);
    }
    let items: Vec<u32> = (0..100).collect();
    assert_eq!(sweep::map(Mode::Parallel, &items, |x| x * 3), sweep::map(Mode::Sequential, &items, |x| x * 3));
}
