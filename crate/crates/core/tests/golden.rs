use kr_soliton::golden::{parse, replay, traces};

#[test]
fn bundled_traces_reproduce_exactly() {
    let all = traces();
    assert_eq!(all.len(), 11);
    for tr in &all {
        let r = replay(tr).unwrap();
        assert!(r.mismatch.is_none(), "{} differs at {:?}", tr.name, r.mismatch);
        assert!(r.rows >= 2);
    }
}

#[test]
fn parser_rejects_rows_outside_a_trace() {
    assert!(parse("0: 1 1 2").is_err());
    assert!(parse("trace x C1:3\nend").is_err());
    assert_eq!(parse("# note\ntrace x C1:3 2\n0: 1 2\nend\n").unwrap()[0].rows.len(), 1);
}
