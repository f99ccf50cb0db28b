use kr_soliton::crystal::{highest_weight_pairs, kernel, weight};
use kr_soliton::{Algebra, Family, Letter, Row};

// Two-factor tensor rule applied recursively, letter by letter.
fn eps_w(alg: Algebra, i: usize, w: &[Letter]) -> i64 {
    match w {
        [] => 0,
        [a] => alg.eps_letter(i, *a) as i64,
        [a, rest @ ..] => {
            let (ea, pa) = (alg.eps_letter(i, *a) as i64, alg.phi_letter(i, *a) as i64);
            ea + (eps_w(alg, i, rest) - pa).max(0)
        }
    }
}

fn phi_w(alg: Algebra, i: usize, w: &[Letter]) -> i64 {
    match w {
        [] => 0,
        [a] => alg.phi_letter(i, *a) as i64,
        [a, rest @ ..] => {
            let pa = alg.phi_letter(i, *a) as i64;
            phi_w(alg, i, rest) + (pa - eps_w(alg, i, rest)).max(0)
        }
    }
}

fn e_w(alg: Algebra, i: usize, w: &[Letter]) -> Option<Vec<Letter>> {
    let (a, rest) = w.split_first()?;
    if alg.phi_letter(i, *a) as i64 >= eps_w(alg, i, rest) {
        let b = alg.e_letter(i, *a)?;
        let mut v = vec![b];
        v.extend_from_slice(rest);
        Some(v)
    } else {
        let mut v = vec![*a];
        v.extend(e_w(alg, i, rest)?);
        Some(v)
    }
}

fn f_w(alg: Algebra, i: usize, w: &[Letter]) -> Option<Vec<Letter>> {
    let (a, rest) = w.split_first()?;
    if alg.phi_letter(i, *a) as i64 > eps_w(alg, i, rest) {
        let b = alg.f_letter(i, *a)?;
        let mut v = vec![b];
        v.extend_from_slice(rest);
        Some(v)
    } else {
        let mut v = vec![*a];
        v.extend(f_w(alg, i, rest)?);
        Some(v)
    }
}

fn algebras() -> Vec<Algebra> {
    let mut v = Vec::new();
    for f in Family::ALL {
        for extra in 0..2u8 {
            v.push(Algebra::new(f, f.min_rank() + extra).unwrap());
        }
    }
    v.push(Algebra::new_unchecked(Family::C1, 1).unwrap());
    v.push(Algebra::new_unchecked(Family::A2Even, 1).unwrap());
    v.push(Algebra::new_unchecked(Family::D2, 1).unwrap());
    v
}

fn concat_words(alg: Algebra, rows: &[Row]) -> Vec<Letter> {
    rows.iter().flat_map(|r| r.word(alg)).collect()
}

#[test]
fn row_operators_match_letterwise_tensor_rule() {
    for alg in algebras() {
        let ker = kernel(alg);
        for l in 1..=4u16 {
            for b in Row::enumerate(alg, l) {
                let w = b.word(alg);
                for i in 1..=alg.nodes() {
                    let mut r = [b.clone()];
                    let hit = ker.e(&mut r, i);
                    let oracle = e_w(alg, i, &w);
                    assert_eq!(hit, oracle.is_some(), "{alg} e_{i} on {b}");
                    if let Some(ow) = oracle {
                        assert_eq!(r[0].word(alg), ow, "{alg} e_{i} on {b} leaves the row words");
                        r[0].check(alg).unwrap();
                    }
                    let mut r = [b.clone()];
                    let hit = ker.f(&mut r, i);
                    let oracle = f_w(alg, i, &w);
                    assert_eq!(hit, oracle.is_some(), "{alg} f_{i} on {b}");
                    if let Some(ow) = oracle {
                        assert_eq!(r[0].word(alg), ow, "{alg} f_{i} on {b} leaves the row words");
                        r[0].check(alg).unwrap();
                    }
                    assert_eq!(ker.eps(&[b.clone()], i) as i64, eps_w(alg, i, &w));
                    assert_eq!(ker.phi(&[b.clone()], i) as i64, phi_w(alg, i, &w));
                }
            }
        }
    }
}

#[test]
fn tensor_operators_match_letterwise_tensor_rule() {
    for alg in algebras() {
        let ker = kernel(alg);
        for l in 1..=3u16 {
            for k in 1..=2u16 {
                for b in Row::enumerate(alg, l) {
                    for c in Row::enumerate(alg, k) {
                        let pair = [b.clone(), c.clone()];
                        let w = concat_words(alg, &pair);
                        for i in 1..=alg.nodes() {
                            let mut p = pair.clone();
                            match e_w(alg, i, &w) {
                                Some(ow) => {
                                    assert!(ker.e(&mut p, i));
                                    assert_eq!(concat_words(alg, &p), ow);
                                }
                                None => assert!(!ker.e(&mut p, i)),
                            }
                            let mut p = pair.clone();
                            match f_w(alg, i, &w) {
                                Some(ow) => {
                                    assert!(ker.f(&mut p, i));
                                    assert_eq!(concat_words(alg, &p), ow);
                                }
                                None => assert!(!ker.f(&mut p, i)),
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn weights_shift_by_simple_roots() {
    for alg in algebras() {
        let ker = kernel(alg);
        for b in Row::enumerate(alg, 3) {
            for i in 1..=alg.nodes() {
                let mut r = [b.clone()];
                if ker.f(&mut r, i) {
                    let before = b.weight(alg);
                    let after = r[0].weight(alg);
                    let root = alg.simple_root(i);
                    for j in 0..before.len() {
                        assert_eq!(before[j] - root[j], after[j], "{alg} f_{i} on {b}");
                    }
                }
            }
        }
    }
}

#[test]
fn crystal_sizes() {
    let c2 = Algebra::new(Family::C1, 2).unwrap();
    assert_eq!(Row::enumerate(c2, 2).len(), 11);
    let a5 = Algebra::new(Family::A2Odd, 3).unwrap();
    assert_eq!(Row::enumerate(a5, 1).len(), 6);
    let d4 = Algebra::new(Family::D1, 4).unwrap();
    assert_eq!(Row::enumerate(d4, 1).len(), 8);
}

#[test]
fn every_row_raises_to_a_string_of_ones() {
    for alg in algebras() {
        let ker = kernel(alg);
        for l in 1..=4u16 {
            for b in Row::enumerate(alg, l) {
                let mut r = [b.clone()];
                let path = ker.raise(&mut r);
                assert_eq!(r[0], Row::ones(alg, l, b.size()), "{alg} {b}");
                assert!(ker.lower(&mut r, &path));
                assert_eq!(r[0], b);
            }
        }
    }
}

#[test]
fn highest_weight_pairs_have_dominant_weight() {
    for alg in algebras() {
        for (b, c) in highest_weight_pairs(alg, 3, 2) {
            let w = weight(alg, &[b, c]);
            let n = alg.rank();
            for j in 1..n {
                assert!(w[j - 1] >= w[j]);
            }
        }
    }
}
