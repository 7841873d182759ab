use hetsteer_core::validation::run_validation;

#[test]
fn every_validation_check_passes() {
    let report = run_validation();
    println!("{report}");
    assert!(report.all_passed(), "{report}");
}
