//! Check reports: named PASS/FAIL lines with the first counterexample
//! datum on failure, input digests for reproducibility, and a
//! machine-readable TSV payload.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

#[derive(Debug, Clone)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    /// Empty when passing; otherwise the first counterexample (word,
    /// degree, matrix slot, ...).
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct RunReport {
    pub command: String,
    /// (input label, sha256 of its content)
    pub digests: Vec<(String, String)>,
    pub lines: Vec<CheckLine>,
    /// Certified caps, per named artifact.
    pub caps: Vec<(String, u32)>,
    /// Tab-separated payload for --tsv.
    pub tsv: String,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport { command: command.to_string(), ..Default::default() }
    }

    pub fn digest(&mut self, label: &str, content: &str) {
        let mut hasher = Sha256::new();
        hasher.update(content.as_bytes());
        self.digests.push((label.to_string(), hex::encode(hasher.finalize())));
    }

    pub fn pass(&mut self, name: &str) {
        self.lines.push(CheckLine { name: name.to_string(), pass: true, detail: String::new() });
    }

    pub fn fail(&mut self, name: &str, detail: impl Into<String>) {
        self.lines.push(CheckLine { name: name.to_string(), pass: false, detail: detail.into() });
    }

    pub fn check(&mut self, name: &str, ok: bool, detail_on_fail: impl Into<String>) {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, detail_on_fail);
        }
    }

    pub fn cap(&mut self, name: &str, cap: u32) {
        self.caps.push((name.to_string(), cap));
    }

    pub fn all_pass(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.command);
        for (label, digest) in &self.digests {
            let _ = writeln!(out, "# input {label} sha256 {digest}");
        }
        for (name, cap) in &self.caps {
            let _ = writeln!(out, "# certified {name} cap {cap}");
        }
        for line in &self.lines {
            if line.pass {
                let _ = writeln!(out, "PASS {}", line.name);
            } else {
                let _ = writeln!(out, "FAIL {} ({})", line.name, line.detail);
            }
        }
        out
    }
}
