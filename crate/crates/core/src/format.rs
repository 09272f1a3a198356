//! Plain-text trigraph format.
//!
//! Line 1: `n <count>`. Then one line per non-default pair, `u v s` with
//! `s` one of `+1`, `1`, `0`, `-1`; unlisted pairs are strong antiedges.
//! Optional `w <v> <weight>` lines override the default weight of 1.
//! Anything after `#` on a line is a comment.

use crate::error::{Error, Result};
use crate::trigraph::{Trigraph, STRONG_ANTIEDGE, STRONG_EDGE, SWITCHABLE};

/// Serializes a trigraph. The writer emits only non-default data (strong
/// edges, switchable pairs, weights other than 1), so `read` of the output
/// reproduces the input exactly.
pub fn write_trigraph(t: &Trigraph) -> String {
    let mut out = format!("n {}\n", t.n());
    for v in t.vertices() {
        if t.weight(v) != 1 {
            out.push_str(&format!("w {} {}\n", v, t.weight(v)));
        }
    }
    for u in t.vertices() {
        for v in u + 1..t.n() {
            match t.theta(u, v) {
                STRONG_EDGE => out.push_str(&format!("{u} {v} +1\n")),
                SWITCHABLE => out.push_str(&format!("{u} {v} 0\n")),
                _ => {}
            }
        }
    }
    out
}

pub fn read_trigraph(text: &str) -> Result<Trigraph> {
    let mut t: Option<Trigraph> = None;
    let mut seen_pairs = std::collections::HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match t {
            None => {
                if fields.len() != 2 || fields[0] != "n" {
                    return Err(Error::parse(line_no, "expected header `n <count>`"));
                }
                let n: usize = fields[1]
                    .parse()
                    .map_err(|_| Error::parse(line_no, "invalid vertex count"))?;
                t = Some(Trigraph::new(n));
            }
            Some(ref mut t) => match fields[0] {
                "w" => {
                    if fields.len() != 3 {
                        return Err(Error::parse(line_no, "expected `w <vertex> <weight>`"));
                    }
                    let v = parse_vertex(fields[1], t.n(), line_no)?;
                    let w: u64 = fields[2]
                        .parse()
                        .map_err(|_| Error::parse(line_no, "invalid weight"))?;
                    t.set_weight(v, w);
                }
                _ => {
                    if fields.len() != 3 {
                        return Err(Error::parse(line_no, "expected `u v s`"));
                    }
                    let u = parse_vertex(fields[0], t.n(), line_no)?;
                    let v = parse_vertex(fields[1], t.n(), line_no)?;
                    if u == v {
                        return Err(Error::parse(line_no, "pair with identical endpoints"));
                    }
                    let s = match fields[2] {
                        "+1" | "1" => STRONG_EDGE,
                        "0" => SWITCHABLE,
                        "-1" => STRONG_ANTIEDGE,
                        other => {
                            return Err(Error::parse(
                                line_no,
                                format!("invalid pair value `{other}`"),
                            ))
                        }
                    };
                    if !seen_pairs.insert((u.min(v), u.max(v))) {
                        return Err(Error::parse(
                            line_no,
                            format!("duplicate pair {} {}", u.min(v), u.max(v)),
                        ));
                    }
                    t.set_theta(u, v, s);
                }
            },
        }
    }
    t.ok_or_else(|| Error::parse(0, "empty input: missing `n <count>` header"))
}

fn parse_vertex(s: &str, n: usize, line_no: usize) -> Result<usize> {
    let v: usize = s
        .parse()
        .map_err(|_| Error::parse(line_no, format!("invalid vertex id `{s}`")))?;
    if v >= n {
        return Err(Error::parse(
            line_no,
            format!("vertex {v} out of range (n = {n})"),
        ));
    }
    Ok(v)
}
