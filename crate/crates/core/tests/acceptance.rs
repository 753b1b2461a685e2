//! Acceptance suite at the default test ranks; prints one line per
//! criterion.

#[test]
fn acceptance_criteria() {
    let report = cluscat::selftest::run(8, 6).expect("suite must run to completion");
    print!("{report}");
    assert!(report.all_passed(), "\n{report}");
}
