//! The `.ipos` text format.
//!
//! ```text
//! ipos v1
//! points 4
//! source 0
//! target
//! rel
//! 0 1
//! 2 1
//! 2 3
//! end
//! ```
//!
//! Relation lines may list any generating set; the reader closes it.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::algebra::canonical_relabel;
use crate::error::{Error, Result};
use crate::iposet::Iposet;

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn numbers(line: usize, words: &[&str]) -> Result<Vec<usize>> {
    words
        .iter()
        .map(|w| w.parse().map_err(|_| err(line, format!("expected a point index, found `{w}`"))))
        .collect()
}

/// Reads one document.
pub fn parse(text: &str) -> Result<Iposet> {
    let mut docs = parse_many(text)?;
    match docs.len() {
        1 => Ok(docs.pop().unwrap()),
        0 => Err(err(1, "no document")),
        _ => Err(err(1, "more than one document")),
    }
}

/// Reads a sequence of documents.
pub fn parse_many(text: &str) -> Result<Vec<Iposet>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .peekable();
    let mut out = Vec::new();
    while lines.peek().is_some() {
        let mut expect = |key: &str| -> Result<(usize, Vec<&str>)> {
            let (no, l) = lines
                .next()
                .ok_or_else(|| err(text.lines().count(), format!("missing `{key}` line")))?;
            let words: Vec<&str> = l.split_whitespace().collect();
            if words[0] != key {
                return Err(err(no, format!("expected `{key}`, found `{}`", words[0])));
            }
            Ok((no, words[1..].to_vec()))
        };
        let (no, v) = expect("ipos")?;
        if v != ["v1"] {
            return Err(err(no, "unsupported version"));
        }
        let (no, v) = expect("points")?;
        let [count] = v[..] else {
            return Err(err(no, "expected `points <n>`"));
        };
        let n: usize = count.parse().map_err(|_| err(no, "invalid point count"))?;
        let (no, v) = expect("source")?;
        let sources = numbers(no, &v)?;
        let (no, v) = expect("target")?;
        let targets = numbers(no, &v)?;
        let (rel_no, v) = expect("rel")?;
        if !v.is_empty() {
            return Err(err(rel_no, "unexpected text after `rel`"));
        }
        let mut pairs = Vec::new();
        loop {
            let (no, l) = lines.next().ok_or_else(|| err(rel_no, "missing `end`"))?;
            if l == "end" {
                out.push(Iposet::new(n, &pairs, &sources, &targets).map_err(|e| err(no, e.to_string()))?);
                break;
            }
            match numbers(no, &l.split_whitespace().collect::<Vec<_>>())?[..] {
                [a, b] if a < n && b < n => pairs.push((a, b)),
                [a, b] => {
                    let index = a.max(b);
                    return Err(err(no, Error::IndexOutOfRange { index, n }.to_string()));
                }
                _ => return Err(err(no, "expected a pair `<a> <b>`")),
            }
        }
    }
    Ok(out)
}

/// Writes the canonical representative with its full relation.
pub fn write(p: &Iposet) -> String {
    write_exact(&canonical_relabel(p))
}

/// Writes `p` as labelled, with its full relation.
pub fn write_exact(p: &Iposet) -> String {
    let mut out = format!("ipos v1\npoints {}\n", p.len());
    let join = |it: &mut dyn Iterator<Item = usize>| {
        it.map(|x| format!(" {x}")).collect::<String>()
    };
    writeln!(out, "source{}", join(&mut p.sources())).unwrap();
    writeln!(out, "target{}", join(&mut p.targets())).unwrap();
    out.push_str("rel\n");
    for (a, b) in p.pairs() {
        writeln!(out, "{a} {b}").unwrap();
    }
    out.push_str("end\n");
    out
}
