//! Seeded random suites, run in parallel with reports in case order.

use jumploci::cli::{run_suite, SuiteOptions, SUITE_KINDS};
use jumploci::Rational;

fn main() {
    for kind in SUITE_KINDS {
        let s = run_suite::<Rational>(kind, 7, 20, SuiteOptions::default());
        println!(
            "{:12} passed {:2}  failed {:2}  skipped {:2}  failing cases {:?}",
            kind.tag(),
            s.passed(),
            s.failed(),
            s.skipped(),
            s.failing_cases()
        );
    }
}
