//! Run the verification suites: build each ring, compute its compressed
//! commuting graph by brute force, and compare against the closed-form
//! counts (and graph structure) predicted for that family.

use ringgraph::rings::DEFAULT_MAX_ORDER;
use ringgraph::verify::{run_verification, suite_cases};

fn main() {
    for suite in ["table1", "products", "polyquot"] {
        println!("suite {suite}:");
        let cases = suite_cases(suite, DEFAULT_MAX_ORDER).unwrap();
        let report = run_verification(&cases, true, DEFAULT_MAX_ORDER);
        print!("{}", report.render());
        assert!(report.pass);
    }
}
