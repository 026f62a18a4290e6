//! Acceptance suite: runs every verification criterion at its pinned
//! tolerance and prints one pass/fail line per criterion.
//!
//! Run with `cargo test -p squeeze-core --test acceptance -- --nocapture`
//! to see the lines; the CLI-facing criterion (determinism and exit codes)
//! lives in the CLI crate's own acceptance test.

use squeeze_core::verify::{run_all, VerifyConfig};

#[test]
fn acceptance_criteria() {
    let cfg = VerifyConfig::default();
    let report = run_all(&cfg);

    let criterion: &[(&str, &str)] = &[
        ("equivalence", "criterion 1: parametrization equivalence"),
        ("residual", "criterion 2: evolution-equation residual"),
        ("propagation", "criterion 3: Crank-Nicolson reference propagation"),
        ("normalization", "criterion 4: normalization and Wigner marginals"),
        ("moments", "criterion 5: Robertson-Schrodinger saturation"),
        ("geometry", "criterion 6: geometry invariants and periods"),
        ("rotation", "criterion 7: rigid rotation of the Wigner distribution"),
        ("typos", "criterion 8: printed-vs-corrected form adjudication"),
    ];

    let mut all_passed = true;
    for (suite_name, label) in criterion {
        let suite = report
            .suites
            .iter()
            .find(|s| s.name == *suite_name)
            .expect("suite present in the default run");
        println!("{} [{}]: {}", label, suite_name, if suite.passed { "PASS" } else { "FAIL" });
        for check in &suite.checks {
            let cmp = match check.comparison {
                squeeze_core::verify::Comparison::AtMost => "<=",
                squeeze_core::verify::Comparison::AtLeast => ">=",
            };
            println!(
                "    {} {}: observed {:.3e} {} {:.3e}",
                if check.passed { "ok  " } else { "FAIL" },
                check.name,
                check.observed,
                cmp,
                check.threshold
            );
        }
        all_passed &= suite.passed;
    }

    println!(
        "criterion 9: CLI determinism and exit codes — covered by the cli crate's acceptance test"
    );

    for entry in &report.typo_table {
        println!(
            "typo finding {}: printed {:.3e} (consistent: {}), corrected {:.3e} (consistent: {})",
            entry.id,
            entry.printed_value,
            entry.printed_consistent,
            entry.corrected_value,
            entry.corrected_consistent
        );
    }

    assert!(all_passed, "acceptance criteria failed; see the lines above");
    assert!(report.passed);
}
