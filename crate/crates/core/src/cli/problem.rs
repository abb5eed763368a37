//! Problem files: sections of `key = value` lines.
//!
//! ```text
//! # comment
//! [task]
//! command = cohomology
//! max_degree = 10
//!
//! [ring]
//! variables = x, y
//! weights = 1, 1
//!
//! [lie K]
//! generators = (1, 1)
//! names = k
//! ```
//!
//! A value continues onto following lines while brackets are open or the
//! line ends in a comma. Values
//! are comma lists of items; an item is an expression, a tuple `(a, b)`, a
//! matrix `[a, b; c, d]`, `diag(a, b)`, or a range `lo..hi`.

use crate::algebra::parse::{parse_expr, Expr};
use std::fmt;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

impl ParseError {
    pub fn new(pos: Pos, message: impl Into<String>) -> Self {
        ParseError {
            pos,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Expr(Expr),
    List(Vec<Value>),
    Tuple(Vec<Value>),
    Matrix(Vec<Vec<Value>>),
    Diag(Vec<Value>),
    Range(Expr, Expr),
}

impl Value {
    /// Items of a list; any other value is a list of one.
    pub fn items(&self) -> Vec<&Value> {
        match self {
            Value::List(v) => v.iter().collect(),
            v => vec![v],
        }
    }

    pub fn as_ident(&self) -> Option<&str> {
        match self {
            Value::Expr(Expr::Ident(s)) => Some(s),
            _ => None,
        }
    }

    fn write(&self, out: &mut String) {
        let join = |out: &mut String, v: &[Value]| {
            for (i, x) in v.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                x.write(out);
            }
        };
        match self {
            Value::Expr(e) => out.push_str(&e.to_string()),
            Value::List(v) => join(out, v),
            Value::Tuple(v) => {
                out.push('(');
                join(out, v);
                out.push(')');
            }
            Value::Diag(v) => {
                out.push_str("diag(");
                join(out, v);
                out.push(')');
            }
            Value::Matrix(rows) => {
                out.push('[');
                for (i, r) in rows.iter().enumerate() {
                    if i > 0 {
                        out.push_str("; ");
                    }
                    join(out, r);
                }
                out.push(']');
            }
            Value::Range(a, b) => {
                out.push_str(&a.to_string());
                out.push_str("..");
                out.push_str(&b.to_string());
            }
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write(&mut s);
        f.write_str(&s)
    }
}

/// Positions are ignored by equality.
#[derive(Clone, Debug)]
pub struct Entry {
    pub key: String,
    pub value: Value,
    pub pos: Pos,
}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key && self.value == other.value
    }
}

impl Eq for Entry {}

#[derive(Clone, Debug)]
pub struct Section {
    pub kind: String,
    pub name: Option<String>,
    pub entries: Vec<Entry>,
    pub pos: Pos,
}

impl PartialEq for Section {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.name == other.name && self.entries == other.entries
    }
}

impl Eq for Section {}

impl Section {
    pub fn get(&self, key: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.key == key)
    }

    pub fn header(&self) -> String {
        match &self.name {
            Some(n) => format!("[{} {}]", self.kind, n),
            None => format!("[{}]", self.kind),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ProblemFile {
    pub sections: Vec<Section>,
}

/// Section kinds, whether they take a name, and their keys (`None` allows any key).
const KINDS: &[(&str, bool, Option<&[&str]>)] = &[
    (
        "task",
        false,
        Some(&["command", "max_degree", "degree_bound", "algebra", "degree", "h"]),
    ),
    ("params", false, None),
    ("grid", false, None),
    ("ring", false, Some(&["variables", "weights", "relation", "reduce"])),
    ("lie", true, Some(&["generators", "names", "syzygies"])),
    ("module", false, Some(&["degrees", "presentation", "companion", "shift"])),
    ("connection", false, None),
    ("sequence", false, Some(&["kernel", "algebra", "invariants"])),
    ("h", true, Some(&["action", "lift"])),
];

impl ProblemFile {
    pub fn section(&self, kind: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.kind == kind)
    }

    pub fn named(&self, kind: &str) -> impl Iterator<Item = &Section> {
        let kind = kind.to_string();
        self.sections.iter().filter(move |s| s.kind == kind)
    }

    pub fn print(&self) -> String {
        let mut out = String::new();
        for (i, s) in self.sections.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            out.push_str(&s.header());
            out.push('\n');
            for e in &s.entries {
                out.push_str(&format!("{} = {}\n", e.key, e.value));
            }
        }
        out
    }
}

fn is_ident(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic() || ch == '_')
        && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
}

/// Text with the source position of every character.
struct Located {
    chars: Vec<char>,
    pos: Vec<Pos>,
}

impl Located {
    fn text(&self, a: usize, b: usize) -> String {
        self.chars[a..b].iter().collect()
    }

    fn at(&self, i: usize) -> Pos {
        self.pos
            .get(i)
            .copied()
            .or_else(|| self.pos.last().map(|p| Pos { line: p.line, col: p.col + 1 }))
            .unwrap_or_default()
    }

    fn trim(&self, mut a: usize, mut b: usize) -> (usize, usize) {
        while a < b && self.chars[a].is_whitespace() {
            a += 1;
        }
        while b > a && self.chars[b - 1].is_whitespace() {
            b -= 1;
        }
        (a, b)
    }

    /// Top-level split points of `sep` in `[a, b)`.
    fn split(&self, a: usize, b: usize, sep: char) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut depth = 0i32;
        let mut start = a;
        for i in a..b {
            match self.chars[i] {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                c if c == sep && depth == 0 => {
                    out.push((start, i));
                    start = i + 1;
                }
                _ => {}
            }
        }
        out.push((start, b));
        out
    }

    /// Index of the bracket closing the one at `a`.
    fn closing(&self, a: usize, b: usize) -> Option<usize> {
        let mut depth = 0i32;
        for i in a..b {
            match self.chars[i] {
                '(' | '[' => depth += 1,
                ')' | ']' => {
                    depth -= 1;
                    if depth == 0 {
                        return Some(i);
                    }
                }
                _ => {}
            }
        }
        None
    }

    fn range_split(&self, a: usize, b: usize) -> Option<usize> {
        let mut depth = 0i32;
        for i in a..b.saturating_sub(1) {
            match self.chars[i] {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                '.' if depth == 0 && self.chars[i + 1] == '.' => return Some(i),
                _ => {}
            }
        }
        None
    }

    fn value(&self, a: usize, b: usize) -> Result<Value, ParseError> {
        let parts = self.split(a, b, ',');
        if parts.len() > 1 {
            return Ok(Value::List(
                parts
                    .into_iter()
                    .map(|(x, y)| self.item(x, y))
                    .collect::<Result<_, _>>()?,
            ));
        }
        self.item(a, b)
    }

    fn items(&self, a: usize, b: usize) -> Result<Vec<Value>, ParseError> {
        self.split(a, b, ',')
            .into_iter()
            .map(|(x, y)| self.item(x, y))
            .collect()
    }

    fn item(&self, a: usize, b: usize) -> Result<Value, ParseError> {
        let (a, b) = self.trim(a, b);
        if a == b {
            return Err(ParseError::new(self.at(a), "empty value"));
        }
        if let Some(i) = self.range_split(a, b) {
            return Ok(Value::Range(self.expr(a, i)?, self.expr(i + 2, b)?));
        }
        let whole = |open: usize| self.closing(open, b) == Some(b - 1);
        if self.chars[a] == '[' {
            if !whole(a) {
                return Err(ParseError::new(self.at(a), "unbalanced '['"));
            }
            let rows = self
                .split(a + 1, b - 1, ';')
                .into_iter()
                .map(|(x, y)| self.items(x, y))
                .collect::<Result<Vec<_>, _>>()?;
            let width = rows[0].len();
            if rows.iter().any(|r| r.len() != width) {
                return Err(ParseError::new(self.at(a), "matrix rows differ in length"));
            }
            return Ok(Value::Matrix(rows));
        }
        if self.chars[a] == '(' && whole(a) && self.split(a + 1, b - 1, ',').len() > 1 {
            return Ok(Value::Tuple(self.items(a + 1, b - 1)?));
        }
        if self.text(a, b).starts_with("diag") {
            let open = a + 4;
            let k = self.trim(open, b).0;
            if k < b && self.chars[k] == '(' && whole(k) {
                return Ok(Value::Diag(self.items(k + 1, b - 1)?));
            }
        }
        Ok(Value::Expr(self.expr(a, b)?))
    }

    fn expr(&self, a: usize, b: usize) -> Result<Expr, ParseError> {
        let (a, b) = self.trim(a, b);
        if a == b {
            return Err(ParseError::new(self.at(a), "empty expression"));
        }
        let text = self.text(a, b);
        if text.contains(';') {
            return Err(ParseError::new(self.at(a), "';' outside a matrix"));
        }
        parse_expr(&text).map_err(|e| {
            // offsets are in bytes; non-ASCII input reports the start column
            let off = if text.is_ascii() { e.offset } else { 0 };
            ParseError::new(self.at(a + off), e.message)
        })
    }
}

fn depth_change(s: &str) -> i32 {
    s.chars()
        .map(|c| match c {
            '(' | '[' => 1,
            ')' | ']' => -1,
            _ => 0,
        })
        .sum()
}

fn strip_comment(s: &str) -> &str {
    match s.find('#') {
        Some(i) => &s[..i],
        None => s,
    }
}

pub fn parse_problem(text: &str) -> Result<ProblemFile, ParseError> {
    let lines: Vec<&str> = text.lines().collect();
    let mut file = ProblemFile::default();
    let mut i = 0;
    while i < lines.len() {
        let lineno = i + 1;
        let raw = strip_comment(lines[i]);
        let line = raw.trim();
        let indent = raw.len() - raw.trim_start().len();
        let pos = Pos { line: lineno, col: indent + 1 };
        i += 1;
        if line.is_empty() {
            continue;
        }
        if line.starts_with('[') {
            let Some(inner) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) else {
                return Err(ParseError::new(pos, "malformed section header"));
            };
            let mut words = inner.split_whitespace();
            let kind = words.next().unwrap_or("").to_string();
            let name = words.next().map(str::to_string);
            if words.next().is_some() {
                return Err(ParseError::new(pos, "section header takes at most one name"));
            }
            let Some(&(_, named, _)) = KINDS.iter().find(|(k, _, _)| *k == kind) else {
                return Err(ParseError::new(pos, format!("unknown section '{kind}'")));
            };
            match (&name, named) {
                (None, true) => return Err(ParseError::new(pos, format!("[{kind}] needs a name"))),
                (Some(_), false) => {
                    return Err(ParseError::new(pos, format!("[{kind}] takes no name")))
                }
                (Some(n), true) if !is_ident(n) => {
                    return Err(ParseError::new(pos, format!("bad section name '{n}'")))
                }
                _ => {}
            }
            if file.sections.iter().any(|s| s.kind == kind && s.name == name) {
                return Err(ParseError::new(pos, format!("duplicate section {inner}")));
            }
            file.sections.push(Section {
                kind,
                name,
                entries: Vec::new(),
                pos,
            });
            continue;
        }
        let Some(section) = file.sections.last_mut() else {
            return Err(ParseError::new(pos, "entry before any section"));
        };
        let Some(eq) = raw.find('=') else {
            return Err(ParseError::new(pos, "expected 'key = value'"));
        };
        let key = raw[..eq].trim().to_string();
        if !is_ident(&key) {
            return Err(ParseError::new(pos, format!("bad key '{key}'")));
        }
        let allowed = KINDS
            .iter()
            .find(|(k, _, _)| *k == section.kind)
            .and_then(|(_, _, keys)| *keys);
        if let Some(keys) = allowed {
            if !keys.contains(&key.as_str()) {
                return Err(ParseError::new(
                    pos,
                    format!("unknown key '{key}' in {}", section.header()),
                ));
            }
        }
        if section.get(&key).is_some() {
            return Err(ParseError::new(pos, format!("duplicate key '{key}'")));
        }
        let mut loc = Located {
            chars: Vec::new(),
            pos: Vec::new(),
        };
        let push = |s: &str, line: usize, col0: usize, loc: &mut Located| {
            for (k, c) in s.chars().enumerate() {
                loc.chars.push(c);
                loc.pos.push(Pos { line, col: col0 + k });
            }
        };
        let first = &raw[eq + 1..];
        push(first, lineno, raw[..eq + 1].chars().count() + 1, &mut loc);
        let mut depth = depth_change(first);
        let mut open = first.trim_end().ends_with(',');
        while (depth > 0 || open) && i < lines.len() {
            let next = strip_comment(lines[i]);
            loc.chars.push('\n');
            loc.pos.push(Pos { line: i + 1, col: 0 });
            push(next, i + 1, 1, &mut loc);
            depth += depth_change(next);
            open = next.trim_end().ends_with(',');
            i += 1;
        }
        if depth != 0 {
            return Err(ParseError::new(pos, "unbalanced brackets in value"));
        }
        let value = loc.value(0, loc.chars.len())?;
        section.entries.push(Entry { key, value, pos });
    }
    Ok(file)
}
