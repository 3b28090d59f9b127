//! Helpers shared by the command line tests.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

/// Runs the `liehess` binary with the given arguments.
pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liehess"))
        .args(args)
        .output()
        .expect("the liehess binary runs")
}

/// Standard output of a successful run.
pub fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "liehess {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("output is UTF-8")
}

/// Root of the workspace.
#[allow(dead_code)]
pub fn workspace() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}
