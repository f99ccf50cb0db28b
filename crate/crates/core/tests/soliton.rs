use kr_soliton::automaton::{energy, evolve_tl, spectrum};
use kr_soliton::crystal::kernel;
use kr_soliton::golden::traces;
use kr_soliton::soliton::{
    build_state, detect, iota, iota_cells, label_at, predict, reversal_order, run_scattering, uniota, Label,
};
use kr_soliton::verify::scattering_algebras;
use kr_soliton::{Algebra, Letter, Row, TypeClass};

#[test]
fn iota_round_trips_and_has_length_l() {
    for alg in scattering_algebras() {
        let low = alg.lowered().unwrap();
        for l in 1..=4u16 {
            for b in Row::enumerate(low, l) {
                let w = iota(alg, &b).unwrap();
                assert_eq!(w.len(), l as usize, "{alg} {b}");
                assert_eq!(uniota(alg, &w).unwrap(), b);
            }
        }
    }
}

#[test]
fn iota_intertwines_raising_operators() {
    for alg in scattering_algebras() {
        let low = alg.lowered().unwrap();
        let (kl, kf) = (kernel(low), kernel(alg));
        for l in 1..=4u16 {
            for b in Row::enumerate(low, l) {
                for i in 1..=low.nodes() {
                    for raise in [true, false] {
                        let mut r = [b.clone()];
                        let mut w = iota_cells(alg, &b).unwrap();
                        let (h1, h2) = if raise {
                            (kl.e(&mut r, i), kf.e(&mut w, i + 1))
                        } else {
                            (kl.f(&mut r, i), kf.f(&mut w, i + 1))
                        };
                        assert_eq!(h1, h2, "{alg} {b} node {i}");
                        if h1 {
                            assert_eq!(iota_cells(alg, &r[0]).unwrap(), w, "{alg} {b} node {i}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn iota_padding_shapes() {
    let c = Algebra::new(kr_soliton::Family::C1, 3).unwrap();
    let low = c.lowered().unwrap();
    let b = Row::parse_tuple(low, Some(3), "(0,1,0,0)").unwrap();
    assert_eq!(
        iota(c, &b).unwrap(),
        vec![Letter::Bar(1), Letter::Plain(3), Letter::Plain(1)]
    );
    let a = Algebra::new(kr_soliton::Family::A2Even, 3).unwrap();
    let low = a.lowered().unwrap();
    let b = Row::parse_tuple(low, Some(4), "(0,1,0,0)").unwrap();
    assert_eq!(
        iota(a, &b).unwrap(),
        vec![Letter::Phi, Letter::Bar(1), Letter::Plain(3), Letter::Plain(1)]
    );
}

#[test]
fn single_soliton_moves_rigidly_with_speed_min_r_l() {
    for alg in scattering_algebras() {
        let low = alg.lowered().unwrap();
        let vs = alg.varsigma();
        for l in 1..=4u16 {
            for b in Row::enumerate(low, l).into_iter().step_by(3) {
                let lab = label_at(alg, b.clone(), 0);
                let st = build_state(alg, std::slice::from_ref(&lab), &[], 0).unwrap();
                for r in 1..=5u16 {
                    let next = evolve_tl(&st, r).unwrap().state;
                    let found = detect(&next).unwrap();
                    assert_eq!(found.len(), 1);
                    let want = Label::new(lab.phase - vs * r.min(l) as i64, b.clone());
                    assert_eq!(found[0].label, want, "{alg} T_{r} on {lab}");
                    assert_eq!(energy(&st, r).unwrap(), vs * r.min(l) as i64, "{alg} E_{r} on {lab}");
                }
                let mut n = vec![0; l as usize];
                n[l as usize - 1] = 1;
                assert_eq!(spectrum(&st).unwrap(), n);
            }
        }
    }
}

#[test]
fn bundled_examples_scatter_as_predicted() {
    for tr in traces() {
        let st = tr.initial().unwrap();
        let (incoming, outgoing, _) = run_scattering(&st, tr.l, 200).unwrap();
        assert!(incoming.len() >= 2, "{}", tr.name);
        let want = predict(tr.alg, &incoming, &st.capacities()).unwrap();
        assert_eq!(outgoing, want, "{}", tr.name);
    }
}

#[test]
fn type_iii_phases_follow_the_first_letter() {
    let a = Algebra::new(kr_soliton::Family::D2, 3).unwrap();
    assert_eq!(a.type_class(), TypeClass::III);
    let low = a.lowered().unwrap();
    let odd = Row::parse_tuple(low, Some(2), "(0,0,1,0,0)").unwrap();
    let even = Row::parse_tuple(low, Some(2), "(1,0,0,0,1)").unwrap();
    assert_eq!(label_at(a, odd, -5).phase, 9);
    assert_eq!(label_at(a, even, -5).phase, 10);
}

#[test]
fn bubble_order_reverses_any_number_of_factors() {
    assert_eq!(reversal_order(3), vec![0, 1, 0]);
    for m in 1..6 {
        let mut v: Vec<usize> = (0..m).collect();
        for i in reversal_order(m) {
            v.swap(i, i + 1);
        }
        assert_eq!(v, (0..m).rev().collect::<Vec<_>>());
    }
}
