use std::collections::HashSet;

use kr_soliton::crystal::{highest_weight_pairs, kernel, weight};
use kr_soliton::rmatrix::{
    build_hw_table, energy, eta, omega, omega_inv, r_affine, r_general, r_via_omega, Aff,
};
use kr_soliton::{Algebra, Family, Letter, Row, TypeClass};

fn alg(s: &str) -> Algebra {
    s.parse().unwrap()
}

fn tables_algebras() -> Vec<Algebra> {
    let mut v = Vec::new();
    for f in Family::ALL {
        v.push(Algebra::new(f, f.min_rank()).unwrap());
        v.push(Algebra::new(f, f.min_rank() + 1).unwrap());
        if f.min_rank() > 1 {
            v.push(Algebra::new_unchecked(f, f.min_rank() - 1).unwrap());
        }
    }
    v
}

#[test]
fn table_domains_are_exactly_the_highest_weight_elements() {
    for a in tables_algebras() {
        for l in 1..=4u16 {
            for k in 1..=l {
                let t = build_hw_table(a, l, k).unwrap();
                let mut domain: Vec<(Row, Row)> = t.entries().into_iter().map(|(s, _)| s.clone()).collect();
                domain.sort();
                assert_eq!(domain, highest_weight_pairs(a, l, k), "{a} l={l} k={k}");
            }
        }
    }
}

#[test]
fn table_images_are_a_weight_preserving_bijection_onto_highest_weights() {
    for a in tables_algebras() {
        let ker = kernel(a);
        for l in 1..=4u16 {
            for k in 1..=l {
                let t = build_hw_table(a, l, k).unwrap();
                let mut seen = HashSet::new();
                for ((b, c), img) in t.entries() {
                    let out = [img.first.clone(), img.second.clone()];
                    assert!(ker.is_highest(&out), "{a} {b} (x) {c}");
                    assert_eq!(weight(a, &[b.clone(), c.clone()]), weight(a, &out));
                    assert_eq!(img.first.l(), k);
                    assert_eq!(img.second.l(), l);
                    assert!(seen.insert(out.clone()));
                }
                let targets: HashSet<[Row; 2]> =
                    highest_weight_pairs(a, k, l).into_iter().map(|(x, y)| [x, y]).collect();
                assert_eq!(seen, targets, "{a} l={l} k={k}");
            }
        }
    }
}

#[test]
fn r_is_an_involution_commuting_with_classical_operators() {
    for a in tables_algebras() {
        let ker = kernel(a);
        for l in 1..=3u16 {
            for k in 1..=3u16 {
                let bs = Row::enumerate(a, l);
                let cs = Row::enumerate(a, k);
                for b in &bs {
                    for c in &cs {
                        let (c2, b2, h) = r_general(a, b, c).unwrap();
                        let (b3, c3, h2) = r_general(a, &c2, &b2).unwrap();
                        assert_eq!((&b3, &c3), (b, c), "{a}");
                        assert_eq!(h, h2);
                        for i in 1..=a.nodes() {
                            let mut src = [b.clone(), c.clone()];
                            let mut dst = [c2.clone(), b2.clone()];
                            let s = ker.e(&mut src, i);
                            let d = ker.e(&mut dst, i);
                            assert_eq!(s, d);
                            if s {
                                let (x, y, hh) = r_general(a, &src[0], &src[1]).unwrap();
                                assert_eq!([x, y], dst);
                                assert_eq!(hh, h);
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn energy_normalisation_and_minimum() {
    for a in tables_algebras() {
        let vs = a.varsigma();
        let min_factor = match a.family() {
            Family::A1 | Family::C1 => 1,
            Family::A2Even | Family::D2 => 2,
            _ => 0,
        };
        for l in 1..=4u16 {
            for k in 1..=l {
                let h = energy(a, &Row::vacuum(a, l), &Row::vacuum(a, k)).unwrap();
                assert_eq!(h, 2 * vs * k as i64);
                let mut lo = i64::MAX;
                let mut hi = i64::MIN;
                for b in Row::enumerate(a, l) {
                    for c in Row::enumerate(a, k) {
                        let h = energy(a, &b, &c).unwrap();
                        lo = lo.min(h);
                        hi = hi.max(h);
                    }
                }
                assert_eq!(hi, 2 * vs * k as i64, "{a} max l={l} k={k}");
                assert_eq!(lo, min_factor * k as i64, "{a} min l={l} k={k}");
            }
        }
    }
}

fn check_example(a: &str, b: (u16, &str), c: (u16, &str), want_c: &str, want_b: &str, h: i64) {
    let a = alg_any(a);
    let b = Row::parse_tuple(a, Some(b.0), b.1).unwrap();
    let c = Row::parse_tuple(a, Some(c.0), c.1).unwrap();
    let (x, y) = r_affine(a, &Aff::new(10, b), &Aff::new(20, c)).unwrap();
    assert_eq!(x.row.tuple(), want_c);
    assert_eq!(y.row.tuple(), want_b);
    assert_eq!(x.d, 20 + h);
    assert_eq!(y.d, 10 - h);
}

fn alg_any(s: &str) -> Algebra {
    let (f, r) = s.split_once(':').unwrap();
    let fam = alg(&format!("{f}:4")).family();
    Algebra::new_unchecked(fam, r.parse().unwrap()).unwrap()
}

#[test]
fn scattering_rules_from_the_worked_examples() {
    check_example("A1:2", (5, "(2,1,2)"), (3, "(0,2,1)"), "(2,1,0)", "(0,2,3)", 3);
    check_example("A2odd:3", (5, "(3,0,0,1,0,1)"), (3, "(0,0,0,0,0,3)"), "(3,0,0,0,0,0)", "(0,0,0,1,0,4)", 0);
    check_example("A2even:3", (5, "(3,0,0,1,0,1)"), (3, "(0,0,0,0,0,3)"), "(1,0,0,1,0,1)", "(0,0,0,0,0,1)", 6);
    check_example("A2even:3", (5, "(0,3,1,0,0,1)"), (3, "(1,0,0,1,0,0)"), "(0,1,1,0,0,1)", "(1,2,0,1,0,0)", 9);
    check_example("B1:3", (5, "(0,2,3,0,0,0,0)"), (3, "(0,0,0,1,2,0,0)"), "(0,0,3,0,0,0,0)", "(0,2,0,1,2,0,0)", 3);
    check_example("C1:3", (5, "(0,0,0,1,1,1)"), (3, "(0,1,0,1,0,1)"), "(0,0,0,0,1,0)", "(0,1,0,2,0,2)", 4);
    check_example("D1:4", (5, "(2,1,0,0,1,0,1,0)"), (3, "(0,0,0,0,1,0,0,2)"), "(2,0,1,0,0,0,0,0)", "(0,0,0,0,2,1,0,2)", 1);
    check_example("D2:3", (5, "(2,1,0,1,0,0,1)"), (3, "(0,0,0,1,0,0,0)"), "(0,1,0,1,0,0,1)", "(2,0,0,1,0,0,0)", 8);
    check_example("C1:2", (3, "(0,1,1,1)"), (1, "(1,0,0,0)"), "(0,0,0,1)", "(1,1,1,0)", 2);
}

#[test]
fn type_i_table_entry() {
    let a = alg("B1:3");
    let t = build_hw_table(a, 5, 3).unwrap();
    let src = kr_soliton::rmatrix::dcb_row(a, 3, 1, 1, 1).unwrap();
    let img = t.get(&Row::vacuum(a, 5), &src).unwrap();
    assert_eq!(img.h, 3);
    assert_eq!(img.first, Row::vacuum(a, 3));
    assert_eq!(img.second, kr_soliton::rmatrix::dcb_row(a, 5, 3, 1, 1).unwrap());
}

#[test]
fn degree_zero_carrier_rule() {
    for a in tables_algebras() {
        if a.rank() < 2 {
            continue;
        }
        let one = Row::letter(a, Letter::Plain(1)).unwrap();
        let two = Row::letter(a, Letter::Plain(2)).unwrap();
        let row = |l: u16, j: u16| kr_soliton::rmatrix::dcb_row(a, l, l - j, j, 0).unwrap();
        for l in 1..=5u16 {
            for j in 0..=l {
                let (x, y, _) = r_general(a, &row(l, j), &one).unwrap();
                if j > 0 {
                    assert_eq!((x, y), (two.clone(), row(l, j - 1)), "{a}");
                } else {
                    assert_eq!((x, y), (one.clone(), row(l, 0)));
                }
                let (x, y, _) = r_general(a, &row(l, j), &two).unwrap();
                if j < l {
                    assert_eq!((x, y), (one.clone(), row(l, j + 1)));
                } else {
                    assert_eq!((x, y), (two.clone(), row(l, l)));
                }
            }
        }
    }
}

#[test]
fn type_iii_routes_agree() {
    for a in tables_algebras().into_iter().filter(|a| a.type_class() == TypeClass::III) {
        for l in 1..=3u16 {
            for k in 1..=3u16 {
                for b in Row::enumerate(a, l) {
                    assert_eq!(omega_inv(a, &omega(a, &b).unwrap()).unwrap(), b);
                    for c in Row::enumerate(a, k) {
                        assert_eq!(r_general(a, &b, &c).unwrap(), r_via_omega(a, &b, &c).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn eta_on_letters() {
    let a = alg("D2:3");
    assert_eq!(eta(a, Letter::Plain(3)).unwrap(), [Letter::Plain(3), Letter::Plain(3)]);
    assert_eq!(eta(a, Letter::Phi).unwrap(), [Letter::Plain(1), Letter::Bar(1)]);
    assert_eq!(eta(a, Letter::Zero).unwrap(), [Letter::Bar(3), Letter::Plain(3)]);
    assert!(eta(alg("A2even:3"), Letter::Zero).is_err());
}
