//! The line-oriented matroid description format.
//!
//! ```text
//! # the matroid on {1,2,3} with two bases
//! kind=explicit
//! n=3
//! indep={};{1};{2};{3};{1,2};{2,3}
//! ```
//!
//! Each line holds one or more `key=value` items separated by whitespace;
//! `#` starts a comment. Elements are labelled from 1. Kinds and their keys:
//!
//! | kind        | keys                                                    |
//! |-------------|---------------------------------------------------------|
//! | `explicit`  | `indep=` family (may repeat; members accumulate)        |
//! | `uniform`   | `k=` rank                                               |
//! | `gf2`       | `row=` bit string of length `n`, one per matrix row     |
//! | `graphic`   | `vertices=` count, `edge=u-v` per element in order      |
//! | `partition` | `block={..}:capacity` per block                         |

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::matroid::{Matroid, Representation};
use crate::subsets::{parse_family, parse_set, SubsetMask, MAX_UNIVERSE};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatroidKind {
    Explicit,
    Uniform,
    Gf2,
    Graphic,
    Partition,
}

impl MatroidKind {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "explicit" => MatroidKind::Explicit,
            "uniform" => MatroidKind::Uniform,
            "gf2" => MatroidKind::Gf2,
            "graphic" => MatroidKind::Graphic,
            "partition" => MatroidKind::Partition,
            _ => return None,
        })
    }
}

/// A `key=value` item with the position of its value.
struct Item<'a> {
    key: &'a str,
    value: &'a str,
    line: usize,
    column: usize,
}

impl Item<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    /// Shifts a parse error from a value-relative position to the file.
    fn relocate(&self, err: Error) -> Error {
        match err {
            Error::Parse { column, message, .. } => Error::Parse {
                line: self.line,
                column: self.column + column - 1,
                message,
            },
            other => other,
        }
    }

    fn natural(&self) -> Result<usize> {
        self.value
            .trim()
            .parse()
            .map_err(|_| self.error(format!("expected a natural number for '{}'", self.key)))
    }
}

fn is_key_start(line: &str, at: usize) -> bool {
    let rest = &line[at..];
    let key_len = rest
        .bytes()
        .take_while(|b| b.is_ascii_lowercase() || *b == b'_')
        .count();
    key_len > 0 && rest.as_bytes().get(key_len) == Some(&b'=')
}

fn split_items(line: &str, line_no: usize) -> Result<Vec<Item<'_>>> {
    let content = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    // Item boundaries: a key at the start or right after whitespace.
    let mut starts = Vec::new();
    let bytes = content.as_bytes();
    for i in 0..content.len() {
        let boundary = i == 0 || bytes[i - 1].is_ascii_whitespace();
        if boundary && !bytes[i].is_ascii_whitespace() && is_key_start(content, i) {
            starts.push(i);
        }
    }
    let first_text = content.find(|c: char| !c.is_whitespace());
    match (first_text, starts.first()) {
        (None, _) => return Ok(Vec::new()),
        (Some(t), Some(&s)) if t == s => {}
        (Some(t), _) => {
            return Err(Error::Parse {
                line: line_no,
                column: t + 1,
                message: "expected key=value".into(),
            })
        }
    }
    let mut items = Vec::new();
    for (k, &start) in starts.iter().enumerate() {
        let end = starts.get(k + 1).copied().unwrap_or(content.len());
        let piece = &content[start..end];
        let eq = piece.find('=').expect("key start checked");
        items.push(Item {
            key: &piece[..eq],
            value: piece[eq + 1..].trim_end(),
            line: line_no,
            column: start + eq + 2,
        });
    }
    Ok(items)
}

/// Parses and validates a matroid description.
pub fn parse_matroid(text: &str) -> Result<Matroid> {
    let mut items = Vec::new();
    for (i, line) in text.lines().enumerate() {
        items.extend(split_items(line, i + 1)?);
    }
    let single = |key: &str| -> Result<Option<&Item<'_>>> {
        let mut found = items.iter().filter(|it| it.key == key);
        let first = found.next();
        if let Some(dup) = found.next() {
            return Err(dup.error(format!("duplicate '{key}'")));
        }
        Ok(first)
    };
    let missing = |key: &str| Error::Parse {
        line: text.lines().count().max(1),
        column: 1,
        message: format!("missing '{key}'"),
    };

    let kind_item = single("kind")?.ok_or_else(|| missing("kind"))?;
    let kind = MatroidKind::parse(kind_item.value.trim())
        .ok_or_else(|| kind_item.error(format!("unknown kind '{}'", kind_item.value.trim())))?;
    let n_item = single("n")?.ok_or_else(|| missing("n"))?;
    let n = n_item.natural()?;
    if n > MAX_UNIVERSE {
        return Err(Error::UniverseTooLarge { n, max: MAX_UNIVERSE });
    }

    let allowed: &[&str] = match kind {
        MatroidKind::Explicit => &["indep"],
        MatroidKind::Uniform => &["k"],
        MatroidKind::Gf2 => &["row"],
        MatroidKind::Graphic => &["vertices", "edge"],
        MatroidKind::Partition => &["block"],
    };
    if let Some(bad) = items
        .iter()
        .find(|it| it.key != "kind" && it.key != "n" && !allowed.contains(&it.key))
    {
        return Err(bad.error(format!("key '{}' not valid for this kind", bad.key)));
    }
    let all = |key: &'static str| items.iter().filter(move |it| it.key == key);

    let repr = match kind {
        MatroidKind::Explicit => {
            let mut members = Vec::new();
            for it in all("indep") {
                let f = parse_family(it.value, n).map_err(|e| it.relocate(e))?;
                members.extend(f.iter());
            }
            Representation::ExplicitFamily(crate::subsets::SetFamily::new(n, members)?)
        }
        MatroidKind::Uniform => {
            let k = single("k")?.ok_or_else(|| missing("k"))?.natural()?;
            Representation::Uniform { k }
        }
        MatroidKind::Gf2 => {
            let mut rows = Vec::new();
            for it in all("row") {
                let bits = it.value.trim();
                if bits.len() != n {
                    return Err(it.error(format!("row has {} entries, expected {n}", bits.len())));
                }
                let mut row = 0u32;
                for (j, c) in bits.chars().enumerate() {
                    match c {
                        '0' => {}
                        '1' => row |= 1 << j,
                        _ => {
                            return Err(Error::Parse {
                                line: it.line,
                                column: it.column + j,
                                message: format!("expected 0 or 1, found '{c}'"),
                            })
                        }
                    }
                }
                rows.push(row);
            }
            Representation::Gf2Linear { rows }
        }
        MatroidKind::Graphic => {
            let vertices = single("vertices")?.ok_or_else(|| missing("vertices"))?.natural()?;
            let mut edges = Vec::new();
            for it in all("edge") {
                let parsed = it.value.trim().split_once('-').and_then(|(u, v)| {
                    Some((u.trim().parse::<usize>().ok()?, v.trim().parse::<usize>().ok()?))
                });
                match parsed {
                    Some((u, v)) if u >= 1 && v >= 1 && u <= vertices && v <= vertices => {
                        edges.push((u - 1, v - 1))
                    }
                    Some(_) => return Err(it.error(format!("vertex outside 1..={vertices}"))),
                    None => return Err(it.error("expected an edge u-v")),
                }
            }
            if edges.len() != n {
                return Err(Error::InvalidRepresentation(format!(
                    "{} edges given for n = {n}",
                    edges.len()
                )));
            }
            Representation::Graphic { vertices, edges }
        }
        MatroidKind::Partition => {
            let mut blocks = Vec::new();
            let mut capacities = Vec::new();
            for it in all("block") {
                let (set, cap) = it
                    .value
                    .rsplit_once(':')
                    .ok_or_else(|| it.error("expected {..}:capacity"))?;
                blocks.push(parse_set(set, n).map_err(|e| it.relocate(e))?);
                capacities.push(cap.trim().parse().map_err(|_| {
                    Error::Parse {
                        line: it.line,
                        column: it.column + set.len() + 1,
                        message: "expected a natural capacity".into(),
                    }
                })?);
            }
            Representation::Partition { blocks, capacities }
        }
    };
    Matroid::new(n, repr)
}

/// Renders a matroid in the description format. Restricted matroids are
/// written as their explicit independent-set family.
pub fn render_matroid(matroid: &Matroid) -> String {
    let n = matroid.universe_size();
    let mut out = String::new();
    let repr = if matroid.is_restricted() {
        Representation::ExplicitFamily(matroid.independent_sets())
    } else {
        matroid.representation().clone()
    };
    let _ = writeln!(out, "kind={}", repr.kind());
    let _ = writeln!(out, "n={n}");
    match &repr {
        Representation::ExplicitFamily(f) => {
            let body = f.to_string();
            let _ = writeln!(out, "indep={}", &body[1..body.len() - 1]);
        }
        Representation::Uniform { k } => {
            let _ = writeln!(out, "k={k}");
        }
        Representation::Gf2Linear { rows } => {
            for r in rows {
                let bits: String = (0..n).map(|j| if r & (1 << j) != 0 { '1' } else { '0' }).collect();
                let _ = writeln!(out, "row={bits}");
            }
        }
        Representation::Graphic { vertices, edges } => {
            let _ = writeln!(out, "vertices={vertices}");
            for (u, v) in edges {
                let _ = writeln!(out, "edge={}-{}", u + 1, v + 1);
            }
        }
        Representation::Partition { blocks, capacities } => {
            for (b, c) in blocks.iter().zip(capacities) {
                let _ = writeln!(out, "block={b}:{c}");
            }
        }
    }
    out
}

/// Parses a set argument such as `{1,3}` against a universe of size `n`.
pub fn parse_set_arg(text: &str, n: usize) -> Result<SubsetMask> {
    parse_set(text, n)
}
