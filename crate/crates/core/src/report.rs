//! Command reports: an ordered list of values, checks and table rows with a
//! human-readable and a line-oriented `key=value` rendering of the same
//! content.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::checks::CheckReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Value {
        key: String,
        value: String,
    },
    Check {
        name: String,
        passed: bool,
        witness: Option<String>,
    },
    Row {
        table: String,
        cells: Vec<(String, String)>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    UsageError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::UsageError => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::UsageError => "usage-error",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub items: Vec<Item>,
    pub error: Option<String>,
    status: Option<Status>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

// keeps every rendered entry on one line
fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('\n', "\\n")
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            inputs: vec![],
            items: vec![],
            error: None,
            status: None,
        }
    }

    /// Records the digest of the canonical text of an input.
    pub fn input(&mut self, role: &str, canonical: &str) {
        self.inputs.push((role.to_string(), sha256_hex(canonical.as_bytes())));
    }

    pub fn value(&mut self, key: &str, value: impl ToString) {
        self.items.push(Item::Value {
            key: key.to_string(),
            value: value.to_string(),
        });
    }

    pub fn check(&mut self, name: &str, witness: Option<String>) {
        self.items.push(Item::Check {
            name: name.to_string(),
            passed: witness.is_none(),
            witness,
        });
    }

    pub fn checks(&mut self, prefix: &str, report: &CheckReport) {
        for item in &report.items {
            let name = if prefix.is_empty() {
                item.name.clone()
            } else {
                format!("{prefix}.{}", item.name)
            };
            self.check(&name, item.witness.clone());
        }
    }

    pub fn row<K: ToString, V: ToString>(&mut self, table: &str, cells: impl IntoIterator<Item = (K, V)>) {
        self.items.push(Item::Row {
            table: table.to_string(),
            cells: cells.into_iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
        });
    }

    /// Ends the report with a failure that is not tied to a single check.
    pub fn fail(&mut self, status: Status, message: impl Into<String>) {
        self.error = Some(message.into());
        self.status = Some(status);
    }

    pub fn status(&self) -> Status {
        match self.status {
            Some(s) => s,
            None if self.items.iter().any(|i| matches!(i, Item::Check { passed: false, .. })) => Status::Fail,
            None => Status::Pass,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Structured => self.render_structured(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        for (role, digest) in &self.inputs {
            writeln!(out, "input {role}: sha256 {digest}").unwrap();
        }
        let mut table: Option<&str> = None;
        for item in &self.items {
            if let Item::Row { table: t, .. } = item {
                if table != Some(t.as_str()) {
                    writeln!(out, "{t}:").unwrap();
                }
                table = Some(t);
            } else {
                table = None;
            }
            match item {
                Item::Value { key, value } => {
                    if value.contains('\n') {
                        writeln!(out, "{key}:").unwrap();
                        for line in value.lines() {
                            writeln!(out, "  {line}").unwrap();
                        }
                    } else {
                        writeln!(out, "{key}: {value}").unwrap();
                    }
                }
                Item::Check { name, passed, witness } => {
                    let mark = if *passed { "pass" } else { "FAIL" };
                    match witness {
                        Some(w) => writeln!(out, "[{mark}] {name}: {}", escape(w)).unwrap(),
                        None => writeln!(out, "[{mark}] {name}").unwrap(),
                    }
                }
                Item::Row { cells, .. } => {
                    let cells: Vec<String> = cells.iter().map(|(k, v)| format!("{k}={}", escape(v))).collect();
                    writeln!(out, "  {}", cells.join("  ")).unwrap();
                }
            }
        }
        if let Some(e) = &self.error {
            writeln!(out, "error: {}", escape(e)).unwrap();
        }
        writeln!(out, "status: {}", self.status().name()).unwrap();
        out
    }

    fn render_structured(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command={}", escape(&self.command)).unwrap();
        for (role, digest) in &self.inputs {
            writeln!(out, "input.{role}.sha256={digest}").unwrap();
        }
        let mut rows: Vec<(String, usize)> = vec![];
        for item in &self.items {
            match item {
                Item::Value { key, value } => writeln!(out, "value.{key}={}", escape(value)).unwrap(),
                Item::Check { name, passed, witness } => {
                    writeln!(out, "check.{name}={}", if *passed { "pass" } else { "fail" }).unwrap();
                    if let Some(w) = witness {
                        writeln!(out, "check.{name}.witness={}", escape(w)).unwrap();
                    }
                }
                Item::Row { table, cells } => {
                    let n = match rows.iter_mut().find(|(t, _)| t == table) {
                        Some((_, n)) => {
                            *n += 1;
                            *n
                        }
                        None => {
                            rows.push((table.clone(), 0));
                            0
                        }
                    };
                    for (k, v) in cells {
                        writeln!(out, "table.{table}.{n}.{k}={}", escape(v)).unwrap();
                    }
                }
            }
        }
        if let Some(e) = &self.error {
            writeln!(out, "error={}", escape(e)).unwrap();
        }
        writeln!(out, "status={}", self.status().name()).unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("cohomology --input x");
        r.input("input", "kind dga\n");
        r.value("kind", "dga");
        r.row("cohomology", [("degree", "0"), ("dim", "1")]);
        r.row("cohomology", [("degree", "1"), ("dim", "0")]);
        r.check("d_squared", None);
        r
    }

    #[test]
    fn renderings_agree() {
        let r = sample();
        let text = r.render(Format::Text);
        let structured = r.render(Format::Structured);
        assert!(text.contains("  degree=1  dim=0"));
        assert!(structured.contains("table.cohomology.1.dim=0\n"));
        assert!(structured.ends_with("status=pass\n"));
        assert_eq!(r.status(), Status::Pass);
        assert_eq!(sha256_hex(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }

    #[test]
    fn failures_set_status() {
        let mut r = sample();
        r.check("mc", Some("d(x) + x² = y\nz".into()));
        assert_eq!(r.status(), Status::Fail);
        let s = r.render(Format::Structured);
        assert!(s.contains("check.mc.witness=d(x) + x² = y\\nz\n"), "{s}");
        r.fail(Status::UsageError, "bad flag");
        assert_eq!(r.status().exit_code(), 2);
    }
}
