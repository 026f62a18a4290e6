//! Acceptance checks for the CLI: byte-level determinism of output files,
//! and the documented exit-code contract including the perturbation hook.
//!
//! Run with `-- --nocapture` to see one pass/fail line per check.

mod util;

use std::fs;
use std::process::Command;

use util::squeeze;

fn run_to_file(args: &[&str], path: &std::path::Path) {
    let mut full: Vec<&str> = args.to_vec();
    let path_str = path.to_str().unwrap().to_string();
    full.push("--out");
    let leaked: &str = Box::leak(path_str.into_boxed_str());
    full.push(leaked);
    let out = Command::new(env!("CARGO_BIN_EXE_squeeze"))
        .args(&full)
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn acceptance_cli_determinism_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let mut all = true;
    let mut report = |name: &str, ok: bool| {
        println!("criterion 9 ({name}): {}", if ok { "PASS" } else { "FAIL" });
        all &= ok;
    };

    // identical flags => byte-identical files, for every emitting command
    let traj_args = [
        "trajectory", "--alpha0", "0.7", "--beta0", "1.4", "--delta0", "-0.3", "--epsilon0",
        "1.1", "--t-grid", "0:6.283185307179586:25",
    ];
    let (a, b) = (dir.path().join("t1.csv"), dir.path().join("t2.csv"));
    run_to_file(&traj_args, &a);
    run_to_file(&traj_args, &b);
    report(
        "trajectory files byte-identical",
        fs::read(&a).unwrap() == fs::read(&b).unwrap(),
    );

    let wig_args = [
        "wigner", "--q0", "0.5", "--p0", "-0.2", "--zeta-r", "0.45", "--zeta-theta", "1.0",
        "--t", "0.8", "--x-grid", "-4:4:41", "--p-grid", "-4:4:41", "--format", "json",
    ];
    let (a, b) = (dir.path().join("w1.json"), dir.path().join("w2.json"));
    run_to_file(&wig_args, &a);
    run_to_file(&wig_args, &b);
    report("wigner JSON byte-identical", fs::read(&a).unwrap() == fs::read(&b).unwrap());

    // seeded verify report is byte-identical run to run
    let verify_args = ["verify", "--suite", "typos", "--seed", "123"];
    let (a, b) = (dir.path().join("v1.json"), dir.path().join("v2.json"));
    run_to_file(&verify_args, &a);
    run_to_file(&verify_args, &b);
    report("verify report byte-identical", fs::read(&a).unwrap() == fs::read(&b).unwrap());

    // a correct build passes the full default verify run with exit 0
    let out = squeeze(&["verify"]);
    report("full verify exits 0 on a correct build", out.status.code() == Some(0));

    // the documented perturbation hook must flip the equivalence suite to
    // exit 1
    let out = squeeze(&["verify", "--suite", "equivalence", "--perturb-u", "0.01"]);
    report("verify --perturb-u 0.01 exits 1", out.status.code() == Some(1));

    // unknown suite name is a usage error
    let out = squeeze(&["verify", "--suite", "nonsense"]);
    report("unknown suite exits 2", out.status.code() == Some(2));

    // domain error: beta0 = 0
    let out = squeeze(&[
        "convert", "--alpha0", "0", "--beta0", "0", "--delta0", "0", "--epsilon0", "0",
    ]);
    report("beta0 = 0 exits 2", out.status.code() == Some(2));

    assert!(all, "criterion 9 failed; see the lines above");
}
