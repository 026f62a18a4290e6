use std::process::{Command, Output};

pub fn squeeze(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_squeeze"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn stdout_of(args: &[&str]) -> String {
    let out = squeeze(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

pub fn exit_code(args: &[&str]) -> i32 {
    squeeze(args).status.code().expect("exit code")
}

/// Parse `name = value` lines.
pub fn parse_kv(text: &str) -> std::collections::BTreeMap<String, f64> {
    text.lines()
        .filter_map(|line| {
            let (k, v) = line.split_once('=')?;
            Some((k.trim().trim_start_matches("# ").to_string(), v.trim().parse().ok()?))
        })
        .collect()
}

/// Split a CSV document into (meta lines, header, data rows).
pub fn parse_csv(text: &str) -> (Vec<String>, String, Vec<Vec<f64>>) {
    let mut meta = Vec::new();
    let mut header = String::new();
    let mut rows = Vec::new();
    for line in text.lines() {
        if let Some(stripped) = line.strip_prefix('#') {
            meta.push(stripped.trim().to_string());
        } else if header.is_empty() {
            header = line.to_string();
        } else if !line.is_empty() {
            rows.push(line.split(',').map(|c| c.parse().expect("float cell")).collect());
        }
    }
    (meta, header, rows)
}
