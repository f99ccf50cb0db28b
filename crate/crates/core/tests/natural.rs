use kr_soliton::natural::{
    bnat_elements, bnat_f0, bnat_step, check_bnat, step_map, t_natural, t_natural_label, Nat, Source, V12, V12B,
};
use kr_soliton::reduction::{check_fact2, check_fact3, fact3};
use kr_soliton::rmatrix::dcb_row;
use kr_soliton::soliton::{build_state, detect, Label};
use kr_soliton::{Algebra, Letter, Row};

use Letter::{Bar, Plain};

fn alg(s: &str) -> Algebra {
    s.parse().unwrap()
}

fn label(a: Algebra, k: u16, m: i64, (d, c, b): (u16, u16, u16)) -> Label {
    Label::new(m, dcb_row(a.lowered().unwrap(), k, d, c, b).unwrap())
}

/// Applies `T_nat[v]` to the realized one-soliton state and reads it back.
fn on_state(a: Algebra, v: Nat, lab: &Label) -> (Label, Nat) {
    let st = build_state(a, std::slice::from_ref(lab), &[], 0).unwrap();
    let (next, exit) = t_natural(&st, v).unwrap();
    let found = detect(&next).unwrap();
    assert_eq!(found.len(), 1);
    (found[0].label.clone(), exit)
}

#[test]
fn worked_type_i_example() {
    let a = alg("A2odd:3");
    let lab = label(a, 4, -10, (1, 1, 2));
    let want = label(a, 4, -12, (2, 1, 1));
    assert_eq!(t_natural_label(a, V12, &lab).unwrap(), want);
    let (got, exit) = on_state(a, V12, &lab);
    assert_eq!(got, want);
    assert_eq!(exit, V12B);
}

#[test]
fn worked_type_ii_examples() {
    let a = alg("C1:3");
    let lab = label(a, 6, -14, (0, 1, 3));
    let want = label(a, 6, -15, (0, 0, 2));
    assert_eq!(t_natural_label(a, V12, &lab).unwrap(), want);
    assert_eq!(on_state(a, V12, &lab).0, want);

    let lab = label(a, 6, -14, (2, 0, 0));
    let want = label(a, 6, -15, (4, 0, 0));
    assert_eq!(t_natural_label(a, V12, &lab).unwrap(), want);
    let (got, exit) = on_state(a, V12, &lab);
    assert_eq!(got, want);
    assert_eq!(exit, V12B);
}

#[test]
fn first_factor_fixed_points() {
    for d in ["A2odd:3", "B1:3", "D1:4", "C1:3"] {
        let a = alg(d);
        for k in 1..=5u16 {
            let lab = label(a, k, -20, (k, 0, 0));
            assert_eq!(t_natural_label(a, V12, &lab).unwrap(), lab, "{d} k={k}");
            assert_eq!(on_state(a, V12, &lab), (lab.clone(), V12), "{d} k={k}");
        }
    }
}

#[test]
fn vertex_table_entries() {
    let p = Nat::Pair;
    for d in ["A2odd:3", "B1:3", "D1:4", "C1:3"] {
        let a = alg(d);
        assert_eq!(bnat_step(a, V12, Plain(3)).unwrap(), (Plain(1), p(Plain(2), Plain(3))));
        assert_eq!(bnat_step(a, p(Bar(2), Bar(1)), Plain(1)).unwrap(), (Bar(2), p(Plain(2), Bar(2))));
    }
    let t1 = alg("B1:3");
    assert_eq!(bnat_step(t1, V12, Bar(2)).unwrap(), (Plain(1), Nat::Phi));
    let t2 = alg("C1:3");
    assert_eq!(bnat_step(t2, V12, Bar(2)).unwrap(), (Plain(1), p(Plain(2), Bar(2))));
}

#[test]
fn derived_entries_follow_from_the_tables_by_classical_operators() {
    let t1 = alg("D1:4");
    let m = step_map(t1).unwrap();
    assert_eq!(m.get(Nat::Phi, Plain(2)).unwrap(), (Plain(1), Nat::Pair(Plain(2), Bar(1))));
    assert_eq!(m.source(Nat::Phi, Plain(2)), Some(Source::Derived));
    assert_eq!(m.source(V12, Plain(3)), Some(Source::Table));
    let t2 = alg("C1:3");
    let m = step_map(t2).unwrap();
    for a in t2.letters() {
        for v in bnat_elements(t2).unwrap() {
            assert!(m.get(v, a).is_ok(), "{v} (x) {a}");
        }
    }
}

#[test]
fn bnat_structure() {
    for d in ["A2odd:3", "A2odd:4", "B1:3", "B1:4", "D1:4", "D1:5", "C1:2", "C1:3", "C1:4"] {
        let a = alg(d);
        assert_eq!(check_bnat(a).unwrap(), Vec::<String>::new(), "{d}");
    }
    let a = alg("B1:3");
    assert_eq!(bnat_elements(a).unwrap().len(), 22);
    assert_eq!(bnat_f0(a, Nat::Pair(Bar(2), Bar(1))), Some(Nat::Phi));
    assert_eq!(bnat_f0(a, Nat::Phi), Some(V12));
    assert!(bnat_elements(alg("A2even:3")).is_err());
}

#[test]
fn omega_eta_identities() {
    for d in ["A2even:2", "A2even:3", "D2:2", "D2:3"] {
        let a = alg(d);
        let (n2, bad2) = check_fact2(a, 3).unwrap();
        let (n3, bad3) = check_fact3(a, 3).unwrap();
        assert!(n2 > 0 && n3 > 0);
        assert!(bad2.is_empty(), "{bad2:?}");
        assert!(bad3.is_empty(), "{bad3:?}");
    }
    let a = alg("D2:3");
    let odd = Row::parse_tuple(a.lowered().unwrap(), Some(2), "(0,0,1,0,0)").unwrap();
    assert!(fact3(a, &odd).unwrap());
}
