//! Reports: an ordered tree of keys whose leaves are exact strings or checks.

use crate::algebra::linalg::Matrix;
use crate::algebra::polymatrix::PolyMatrix;
use crate::algebra::rational::Rational;
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    Text(String),
    Check(bool),
    Tree(Tree),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tree {
    entries: Vec<(String, Node)>,
}

impl Tree {
    pub fn new() -> Self {
        Tree::default()
    }

    pub fn text(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.entries.push((key.into(), Node::Text(value.to_string())));
        self
    }

    pub fn check(&mut self, key: impl Into<String>, ok: bool) -> &mut Self {
        self.entries.push((key.into(), Node::Check(ok)));
        self
    }

    pub fn child(&mut self, key: impl Into<String>, tree: Tree) -> &mut Self {
        self.entries.push((key.into(), Node::Tree(tree)));
        self
    }

    pub fn entries(&self) -> &[(String, Node)] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&Node> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    /// Follows a `/`-separated key path.
    pub fn lookup(&self, path: &str) -> Option<&Node> {
        let mut parts = path.split('/');
        let mut node = self.get(parts.next()?)?;
        for p in parts {
            match node {
                Node::Tree(t) => node = t.get(p)?,
                _ => return None,
            }
        }
        Some(node)
    }

    pub fn all_ok(&self) -> bool {
        self.entries.iter().all(|(_, v)| match v {
            Node::Text(_) => true,
            Node::Check(ok) => *ok,
            Node::Tree(t) => t.all_ok(),
        })
    }

    pub fn failures(&self, prefix: &str, out: &mut Vec<String>) {
        for (k, v) in &self.entries {
            let path = if prefix.is_empty() {
                k.clone()
            } else {
                format!("{prefix}/{k}")
            };
            match v {
                Node::Check(false) => out.push(path),
                Node::Tree(t) => t.failures(&path, out),
                _ => {}
            }
        }
    }

    fn render(&self, indent: usize, out: &mut String) {
        for (k, v) in &self.entries {
            let pad = "  ".repeat(indent);
            match v {
                Node::Text(s) => {
                    let _ = writeln!(out, "{pad}{k}: {s}");
                }
                Node::Check(ok) => {
                    let _ = writeln!(out, "{pad}{k}: {}", if *ok { "ok" } else { "FAIL" });
                }
                Node::Tree(t) => {
                    let _ = writeln!(out, "{pad}{k}:");
                    t.render(indent + 1, out);
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub body: Tree,
}

impl Report {
    pub fn new(command: &str, body: Tree) -> Self {
        Report {
            command: command.to_string(),
            body,
        }
    }

    pub fn ok(&self) -> bool {
        self.body.all_ok()
    }

    pub fn failed_checks(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.body.failures("", &mut out);
        out
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "status: {}", if self.ok() { "ok" } else { "FAIL" });
        self.body.render(0, &mut out);
        out
    }
}

/// `p/q`, with `q` omitted when it is 1.
pub fn rational(q: &Rational) -> String {
    q.to_string()
}

pub fn matrix(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| rational(m.get(i, j)))
                .collect::<Vec<_>>()
                .join(", ")
        })
        .collect();
    format!("[{}]", rows.join("; "))
}

pub fn poly_matrix(m: &PolyMatrix, names: &[String]) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| m.get(i, j).display(names))
                .collect::<Vec<_>>()
                .join(", ")
        })
        .collect();
    format!("[{}]", rows.join("; "))
}

/// `d:value` pairs separated by spaces.
pub fn table<T: ToString>(row: &[(i64, T)]) -> String {
    row.iter()
        .map(|(d, v)| format!("{d}:{}", v.to_string()))
        .collect::<Vec<_>>()
        .join(" ")
}
