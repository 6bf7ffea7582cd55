//! Golden-file runner shared by the golden and acceptance targets.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub name: String,
    pub exit: i32,
    pub args: Vec<String>,
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn cases() -> Vec<Case> {
    let manifest = std::fs::read_to_string(golden_dir().join("cases.txt")).expect("golden manifest");
    manifest
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let parts: Vec<&str> = l.split('|').map(str::trim).collect();
            assert_eq!(parts.len(), 3, "malformed manifest line: {l}");
            Case {
                name: parts[0].to_string(),
                exit: parts[1].parse().expect("exit code"),
                args: parts[2].split_whitespace().map(String::from).collect(),
            }
        })
        .collect()
}

/// Runs a case; returns stdout and the exit code.
pub fn run(case: &Case) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_modseries"))
        .args(&case.args)
        .current_dir(golden_dir())
        .output()
        .expect("spawn modseries");
    (String::from_utf8(out.stdout).expect("utf-8 report"), out.status.code().unwrap_or(-1))
}

/// `None` when the case matches its expected report byte for byte, else a description.
/// With `BLESS=1` the expected file is rewritten instead.
pub fn check(case: &Case) -> Option<String> {
    let (stdout, code) = run(case);
    let path = golden_dir().join(format!("{}.out", case.name));
    if std::env::var_os("BLESS").is_some() && code == case.exit {
        std::fs::write(&path, &stdout).expect("write golden file");
    }
    let expected = match std::fs::read_to_string(&path) {
        Ok(s) => s,
        Err(e) => return Some(format!("{}: cannot read {}: {e}", case.name, path.display())),
    };
    if code != case.exit {
        return Some(format!("{}: exit {code}, expected {}", case.name, case.exit));
    }
    if stdout != expected {
        return Some(format!("{}: report differs\n--- expected\n{expected}--- got\n{stdout}", case.name));
    }
    // determinism: a rerun is byte-identical
    let (again, _) = run(case);
    (again != stdout).then(|| format!("{}: rerun produced a different report", case.name))
}
