//! Line-based text formats for posets and realizers.
//!
//! ```text
//! poset 3
//! # label 0 {0}
//! lt 0 1
//! lt 1 2
//! ```
//!
//! `#` starts a comment. Comments of the form `# label <i> <text>` carry
//! element labels and are read back on load; every other comment is ignored.
//! Relation lines need not be closed; closure is taken on load. The writer
//! emits cover pairs in lexicographic order.
//!
//! ```text
//! realizer 2 3
//! 0 1 2
//! 2 1 0
//! ```
//!
//! Each realizer line lists all elements from least to greatest.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::extension::{LinearExtension, Realizer};
use crate::poset::Poset;

pub fn write_poset(p: &Poset) -> String {
    let mut out = String::new();
    writeln!(out, "poset {}", p.len()).unwrap();
    if let Some(labels) = p.labels() {
        for (i, l) in labels.iter().enumerate() {
            writeln!(out, "# label {i} {l}").unwrap();
        }
    }
    for (i, j) in p.cover_pairs() {
        writeln!(out, "lt {i} {j}").unwrap();
    }
    out
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} `{tok}`")))
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut n: Option<usize> = None;
    let mut pairs = Vec::new();
    let mut labels: Vec<Option<String>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let (body, comment) = match raw.find('#') {
            Some(c) => (&raw[..c], Some(&raw[c + 1..])),
            None => (raw, None),
        };
        if let (Some(c), Some(count)) = (comment, n) {
            if let Some(rest) = c.trim_start().strip_prefix("label ") {
                let rest = rest.trim();
                let (id, text) = rest.split_once(' ').unwrap_or((rest, ""));
                let id = parse_usize(Some(id), line_no, "label index")?;
                if id >= count {
                    return Err(Error::Bounds { index: id, n: count });
                }
                labels[id] = Some(text.trim().to_string());
            }
        }
        let mut toks = body.split_whitespace();
        let Some(head) = toks.next() else { continue };
        match (head, n) {
            ("poset", None) => {
                let count = parse_usize(toks.next(), line_no, "element count")?;
                n = Some(count);
                labels = vec![None; count];
            }
            ("poset", Some(_)) => return Err(Error::parse(line_no, "duplicate header")),
            (_, None) => return Err(Error::parse(line_no, "expected `poset <n>` header")),
            ("lt", Some(_)) => {
                let i = parse_usize(toks.next(), line_no, "element id")?;
                let j = parse_usize(toks.next(), line_no, "element id")?;
                pairs.push((i, j));
            }
            (other, Some(_)) => {
                return Err(Error::parse(line_no, format!("unknown directive `{other}`")))
            }
        }
        if toks.next().is_some() {
            return Err(Error::parse(line_no, "trailing tokens"));
        }
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing `poset <n>` header"))?;
    let p = Poset::from_relations(n, &pairs)?;
    if n > 0 && labels.iter().all(Option::is_some) {
        p.with_labels(labels.into_iter().map(Option::unwrap).collect())
    } else {
        Ok(p)
    }
}

pub fn write_realizer(r: &Realizer) -> String {
    let mut out = String::new();
    writeln!(out, "realizer {} {}", r.size(), r.ground_len()).unwrap();
    for e in r.extensions() {
        let ids: Vec<String> = e.order().iter().map(usize::to_string).collect();
        writeln!(out, "{}", ids.join(" ")).unwrap();
    }
    out
}

pub fn parse_realizer(text: &str) -> Result<Realizer> {
    let mut header: Option<(usize, usize)> = None;
    let mut exts = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut toks = body.split_whitespace().peekable();
        if toks.peek().is_none() {
            continue;
        }
        match header {
            None => {
                if toks.next() != Some("realizer") {
                    return Err(Error::parse(line_no, "expected `realizer <k> <n>` header"));
                }
                let k = parse_usize(toks.next(), line_no, "extension count")?;
                let n = parse_usize(toks.next(), line_no, "element count")?;
                if toks.next().is_some() {
                    return Err(Error::parse(line_no, "trailing tokens"));
                }
                header = Some((k, n));
            }
            Some((_, n)) => {
                let ids = toks
                    .map(|t| parse_usize(Some(t), line_no, "element id"))
                    .collect::<Result<Vec<_>>>()?;
                if ids.len() != n {
                    return Err(Error::SizeMismatch {
                        expected: n,
                        found: ids.len(),
                    });
                }
                exts.push(LinearExtension::new(ids).map_err(|e| Error::parse(line_no, e.to_string()))?);
            }
        }
    }
    let (k, _) = header.ok_or_else(|| Error::parse(0, "missing `realizer <k> <n>` header"))?;
    if exts.len() != k {
        return Err(Error::SizeMismatch {
            expected: k,
            found: exts.len(),
        });
    }
    Realizer::new(exts)
}
