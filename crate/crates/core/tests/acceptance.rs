//! The ten acceptance criteria at full size, each under its time limit.
//! Prints one PASS/FAIL line per criterion.

use foldprod::verify::{run_criterion, Level, Pins, CRITERIA};

fn check(id: u8) {
    let report = run_criterion(id, Level::Full, &Pins::default());
    let timed = report.within_limit();
    println!(
        "{} {} in {:.2?} (limit {:?})",
        if report.passed && timed {
            "PASS"
        } else {
            "FAIL"
        },
        report,
        report.elapsed,
        report.limit
    );
    assert!(
        report.passed,
        "criterion {id} failed: {:?}",
        report.failures
    );
    assert!(
        timed,
        "criterion {id} took {:?}, limit {:?}",
        report.elapsed, report.limit
    );
}

#[test]
fn criterion_01_betti_pin() {
    check(1);
}

#[test]
fn criterion_02_sdefect_pin() {
    check(2);
}

#[test]
fn criterion_03_decomposition_identity() {
    check(3);
}

#[test]
fn criterion_04_colon_identity() {
    check(4);
}

#[test]
fn criterion_05_saturation_criterion() {
    check(5);
}

#[test]
fn criterion_06_homological_formulas() {
    check(6);
}

#[test]
fn criterion_07_resurgence_soundness() {
    check(7);
}

#[test]
fn criterion_08_star_defect_formulas() {
    check(8);
}

#[test]
fn criterion_09_multiple_of_b() {
    check(9);
}

#[test]
fn criterion_10_shifted_closure() {
    check(10);
}

#[test]
fn every_pinned_criterion_detects_its_mutation() {
    let pins = Pins::default();
    for (id, name, _) in CRITERIA {
        let Ok(bad) = pins.mutate(id) else {
            continue;
        };
        let report = run_criterion(id, Level::Quick, &bad);
        assert!(!report.passed, "criterion {id} ({name}) survived mutation");
    }
}
