//! Plain-text region files.
//!
//! ```text
//! kind pillow
//! n 6
//! q 3
//! row -1 -6 12
//! row 0 -6 12
//! ```
//!
//! `kind` is `diamond` (needs `n`), `pillow` (needs `n`, `q`), `generalized`
//! (needs `n` and the four step lists `top_left`, `top_right`, `bottom_left`,
//! `bottom_right`) or `rows`. `row y x_start len` lines are optional except for
//! `rows`; when given for a named kind they must match the construction.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::{aztec_diamond, generalized_pillow, q_pillow, PillowSteps, Region, Row};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegionFile {
    Diamond { n: i64 },
    Pillow { n: i64, q: i64 },
    Generalized(PillowSteps),
    Rows(Region),
}

fn parse_int(tok: &str, lineno: usize) -> Result<i64> {
    tok.parse()
        .map_err(|_| Error::Parse(format!("line {lineno}: {tok:?} is not an integer")))
}

impl RegionFile {
    pub fn region(&self) -> Result<Region> {
        match self {
            RegionFile::Diamond { n } => aztec_diamond(*n),
            RegionFile::Pillow { n, q } => q_pillow(*n, *q),
            RegionFile::Generalized(steps) => generalized_pillow(steps),
            RegionFile::Rows(r) => Ok(r.clone()),
        }
    }

    pub fn parse(text: &str) -> Result<RegionFile> {
        let mut kind: Option<String> = None;
        let mut n: Option<i64> = None;
        let mut q: Option<i64> = None;
        let mut steps: [Option<Vec<i64>>; 4] = Default::default();
        let mut rows = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut toks = line.split_whitespace();
            let key = toks.next().unwrap();
            let rest: Vec<&str> = toks.collect();
            let single = || -> Result<i64> {
                match rest.as_slice() {
                    [v] => parse_int(v, lineno),
                    _ => Err(Error::Parse(format!("line {lineno}: {key} takes one value"))),
                }
            };
            match key {
                "kind" => match rest.as_slice() {
                    [k] => kind = Some(k.to_string()),
                    _ => return Err(Error::Parse(format!("line {lineno}: kind takes one value"))),
                },
                "n" => n = Some(single()?),
                "q" => q = Some(single()?),
                "top_left" | "top_right" | "bottom_left" | "bottom_right" => {
                    let slot = ["top_left", "top_right", "bottom_left", "bottom_right"]
                        .iter()
                        .position(|k| *k == key)
                        .unwrap();
                    steps[slot] = Some(
                        rest.iter()
                            .map(|t| parse_int(t, lineno))
                            .collect::<Result<_>>()?,
                    );
                }
                "row" => match rest.as_slice() {
                    [y, x, len] => rows.push(Row {
                        y: parse_int(y, lineno)?,
                        x_start: parse_int(x, lineno)?,
                        len: parse_int(len, lineno)?,
                    }),
                    _ => {
                        return Err(Error::Parse(format!(
                            "line {lineno}: row takes y, x_start, len"
                        )))
                    }
                },
                other => return Err(Error::Parse(format!("line {lineno}: unknown key {other:?}"))),
            }
        }
        let need = |v: Option<i64>, name: &str| {
            v.ok_or_else(|| Error::Parse(format!("missing parameter {name}")))
        };
        let file = match kind.as_deref() {
            Some("diamond") => RegionFile::Diamond { n: need(n, "n")? },
            Some("pillow") => RegionFile::Pillow {
                n: need(n, "n")?,
                q: need(q, "q")?,
            },
            Some("generalized") => {
                let [tl, tr, bl, br] = steps;
                RegionFile::Generalized(PillowSteps {
                    n: need(n, "n")?,
                    top_left: tl.unwrap_or_default(),
                    top_right: tr.unwrap_or_default(),
                    bottom_left: bl.unwrap_or_default(),
                    bottom_right: br.unwrap_or_default(),
                })
            }
            Some("rows") => {
                if rows.is_empty() {
                    return Err(Error::Parse("kind rows needs row lines".into()));
                }
                return Ok(RegionFile::Rows(Region::new(rows)?));
            }
            Some(other) => return Err(Error::Parse(format!("unknown kind {other:?}"))),
            None => return Err(Error::Parse("missing kind".into())),
        };
        if !rows.is_empty() {
            let listed = Region::new(rows)?;
            if listed != file.region()? {
                return Err(Error::Parse(
                    "explicit rows do not match the region parameters".into(),
                ));
            }
        }
        Ok(file)
    }

    /// Header, parameters, then the explicit rows (increasing `y`).
    pub fn to_text(&self) -> Result<String> {
        let mut out = String::new();
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
        match self {
            RegionFile::Diamond { n } => write!(out, "kind diamond\nn {n}\n").unwrap(),
            RegionFile::Pillow { n, q } => write!(out, "kind pillow\nn {n}\nq {q}\n").unwrap(),
            RegionFile::Generalized(s) => write!(
                out,
                "kind generalized\nn {}\ntop_left {}\ntop_right {}\nbottom_left {}\nbottom_right {}\n",
                s.n,
                join(&s.top_left),
                join(&s.top_right),
                join(&s.bottom_left),
                join(&s.bottom_right)
            )
            .unwrap(),
            RegionFile::Rows(_) => out.push_str("kind rows\n"),
        }
        for r in self.region()?.rows() {
            writeln!(out, "row {} {} {}", r.y, r.x_start, r.len).unwrap();
        }
        Ok(out)
    }
}
