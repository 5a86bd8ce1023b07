//! Line-based text formats for semigroups.
//!
//! ```text
//! cayley <n>                 transformation <m> <k>       rees <|G|> <|I|> <|J|> <zero:0|1>
//! n rows of n indices        k rows of m images           |G| rows of the group table
//!                                                         |J| rows of |I| entries or `-`
//! ```
//!
//! Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;
use crate::structure::{rees_construct, ReesStructure, SandwichEntry};
use crate::transform::{from_transformations, Transformation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Auto,
    Cayley,
    Transformation,
    Rees,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "auto" => Ok(Format::Auto),
            "cayley" => Ok(Format::Cayley),
            "transformation" => Ok(Format::Transformation),
            "rees" => Ok(Format::Rees),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

/// A parsed input. Rees files also keep their structure.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub semigroup: FiniteSemigroup,
    pub rees: Option<ReesStructure>,
}

struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, &'a str)>> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim()))
                .filter(|(_, l)| !l.is_empty() && !l.starts_with('#')),
        );
        Lines {
            inner: it.peekable(),
            last: 0,
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        match self.inner.next() {
            Some((line, text)) => {
                self.last = line;
                Ok((line, text.split_whitespace().collect()))
            }
            None => Err(Error::Parse {
                line: self.last + 1,
                message: format!("unexpected end of input, expected {what}"),
            }),
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.inner.next() {
            Some((line, _)) => Err(Error::Parse {
                line,
                message: "unexpected trailing line".into(),
            }),
            None => Ok(()),
        }
    }
}

fn number(line: usize, token: &str) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a non-negative integer, found `{token}`"),
    })
}

fn row(lines: &mut Lines<'_>, width: usize, what: &str) -> Result<(usize, Vec<usize>)> {
    let (line, tokens) = lines.next(what)?;
    if tokens.len() != width {
        return Err(Error::Parse {
            line,
            message: format!("expected {width} entries, found {}", tokens.len()),
        });
    }
    let values = tokens
        .iter()
        .map(|t| number(line, t))
        .collect::<Result<Vec<_>>>()?;
    Ok((line, values))
}

fn header(tokens: &[&str], line: usize, keyword: &str, arity: usize) -> Result<Vec<usize>> {
    if tokens.first() != Some(&keyword) || tokens.len() != arity + 1 {
        return Err(Error::Parse {
            line,
            message: format!("expected header `{keyword}` with {arity} parameters"),
        });
    }
    tokens[1..].iter().map(|t| number(line, t)).collect()
}

fn positive(line: usize, value: usize, name: &str) -> Result<usize> {
    if value == 0 {
        return Err(Error::Parse {
            line,
            message: format!("{name} must be positive"),
        });
    }
    Ok(value)
}

fn table(lines: &mut Lines<'_>, n: usize) -> Result<Vec<usize>> {
    let mut flat = Vec::with_capacity(n * n);
    for r in 0..n {
        let (line, values) = row(lines, n, &format!("table row {r}"))?;
        if let Some(&v) = values.iter().find(|&&v| v >= n) {
            return Err(Error::Parse {
                line,
                message: format!("entry {v} out of range for size {n}"),
            });
        }
        flat.extend(values);
    }
    Ok(flat)
}

pub fn parse(text: &str, format: Format) -> Result<Parsed> {
    let mut lines = Lines::new(text);
    let (line, tokens) = lines.next("a header line")?;
    let format = match format {
        Format::Auto => match tokens.first().copied() {
            Some("cayley") => Format::Cayley,
            Some("transformation") => Format::Transformation,
            Some("rees") => Format::Rees,
            other => {
                return Err(Error::Parse {
                    line,
                    message: format!("unrecognised format keyword `{}`", other.unwrap_or("")),
                })
            }
        },
        f => f,
    };
    let parsed = match format {
        Format::Cayley => {
            let n = positive(line, header(&tokens, line, "cayley", 1)?[0], "size")?;
            let flat = table(&mut lines, n)?;
            Parsed {
                semigroup: FiniteSemigroup::from_flat(n, flat)?,
                rees: None,
            }
        }
        Format::Transformation => {
            let h = header(&tokens, line, "transformation", 2)?;
            let m = positive(line, h[0], "degree")?;
            let k = positive(line, h[1], "generator count")?;
            let mut gens = Vec::with_capacity(k);
            for g in 0..k {
                let (line, images) = row(&mut lines, m, &format!("generator {g}"))?;
                gens.push(Transformation::new(images).map_err(|e| Error::Parse {
                    line,
                    message: e.to_string(),
                })?);
            }
            Parsed {
                semigroup: from_transformations(m, &gens)?.semigroup,
                rees: None,
            }
        }
        Format::Rees => {
            let h = header(&tokens, line, "rees", 4)?;
            let g = positive(line, h[0], "group order")?;
            let i = positive(line, h[1], "|I|")?;
            let j = positive(line, h[2], "|J|")?;
            let with_zero = match h[3] {
                0 => false,
                1 => true,
                _ => {
                    return Err(Error::Parse {
                        line,
                        message: "zero flag must be 0 or 1".into(),
                    })
                }
            };
            let group = FiniteSemigroup::from_flat(g, table(&mut lines, g)?)?;
            let mut p = Vec::with_capacity(j);
            for r in 0..j {
                let (line, tokens) = lines.next(&format!("sandwich row {r}"))?;
                if tokens.len() != i {
                    return Err(Error::Parse {
                        line,
                        message: format!("expected {i} entries, found {}", tokens.len()),
                    });
                }
                let entries = tokens
                    .iter()
                    .map(|t| match *t {
                        "-" => Ok(SandwichEntry::Zero),
                        t => {
                            let v = number(line, t)?;
                            if v >= g {
                                return Err(Error::Parse {
                                    line,
                                    message: format!(
                                        "group element {v} out of range for order {g}"
                                    ),
                                });
                            }
                            Ok(SandwichEntry::Group(v))
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                p.push(entries);
            }
            let structure = ReesStructure::new(group, i, j, p, with_zero)?;
            Parsed {
                semigroup: rees_construct(&structure)?.semigroup,
                rees: Some(structure),
            }
        }
        Format::Auto => unreachable!("resolved above"),
    };
    lines.finish()?;
    Ok(parsed)
}

pub fn write_cayley(s: &FiniteSemigroup) -> String {
    let mut out = format!("cayley {}\n", s.size());
    for r in s.rows() {
        let cells: Vec<String> = r.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

pub fn write_rees(r: &ReesStructure) -> String {
    let g = r.group();
    let mut out = format!(
        "rees {} {} {} {}\n",
        g.size(),
        r.i_size(),
        r.j_size(),
        u8::from(r.with_zero())
    );
    for row in g.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    for row in r.matrix() {
        let cells: Vec<String> = row
            .iter()
            .map(|e| match e {
                SandwichEntry::Group(x) => x.to_string(),
                SandwichEntry::Zero => "-".into(),
            })
            .collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}
