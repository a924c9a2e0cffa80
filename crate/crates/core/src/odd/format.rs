//! Walk text format.
//!
//! ```text
//! oddwalk n=<n> len=<L> closed=<0|1>
//! 1,2 3,4 1,5 ...        (L+1 vertices as sorted element lists)
//! 5 2 4 ...               (L labels)
//! ```

use super::{Element, SpecialWalk, SubsetVertex, WalkError};
use std::fmt::Write as _;

pub fn write_walk(walk: &SpecialWalk) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "oddwalk n={} len={} closed={}",
        walk.n(),
        walk.len(),
        u8::from(walk.closed())
    );
    let verts: Vec<String> = walk.vertices().iter().map(|v| v.to_string()).collect();
    let _ = writeln!(out, "{}", verts.join(" "));
    let labels: Vec<String> = walk.labels().iter().map(|l| l.to_string()).collect();
    let _ = writeln!(out, "{}", labels.join(" "));
    out
}

pub fn parse_walk(text: &str) -> Result<SpecialWalk, WalkError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or(WalkError::Parse {
        line: 1,
        message: "missing header".into(),
    })?;
    let mut n = None;
    let mut len = None;
    let mut closed = None;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("oddwalk") {
        return Err(WalkError::Parse {
            line: 1,
            message: "header must start with `oddwalk`".into(),
        });
    }
    for part in parts {
        let (key, value) = part.split_once('=').ok_or(WalkError::Parse {
            line: 1,
            message: format!("malformed header field `{part}`"),
        })?;
        let value: usize = value.parse().map_err(|_| WalkError::Parse {
            line: 1,
            message: format!("malformed header value `{part}`"),
        })?;
        match key {
            "n" => n = Some(value),
            "len" => len = Some(value),
            "closed" => closed = Some(value != 0),
            _ => {
                return Err(WalkError::Parse {
                    line: 1,
                    message: format!("unknown header field `{key}`"),
                })
            }
        }
    }
    let (n, len, closed) = match (n, len, closed) {
        (Some(n), Some(len), Some(closed)) => (n, len, closed),
        _ => {
            return Err(WalkError::Parse {
                line: 1,
                message: "header needs n=, len= and closed=".into(),
            })
        }
    };
    let vertex_line = lines.next().ok_or(WalkError::Parse {
        line: 2,
        message: "missing vertex line".into(),
    })?;
    let vertices = vertex_line
        .split_whitespace()
        .map(|tok| parse_subset(n, tok))
        .collect::<Result<Vec<_>, _>>()?;
    let label_line = lines.next().ok_or(WalkError::Parse {
        line: 3,
        message: "missing label line".into(),
    })?;
    let labels = label_line
        .split_whitespace()
        .map(|tok| {
            tok.parse::<Element>().map_err(|_| WalkError::Parse {
                line: 3,
                message: format!("malformed label `{tok}`"),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    if labels.len() != len || vertices.len() != len + 1 {
        return Err(WalkError::Parse {
            line: 1,
            message: "header length disagrees with body".into(),
        });
    }
    SpecialWalk::from_parts(vertices, labels, closed)
}

/// Parses a comma-separated element list such as `1,2` into a vertex of `O_n`.
pub fn parse_subset(n: usize, token: &str) -> Result<SubsetVertex, WalkError> {
    let elements = token
        .split(',')
        .map(|t| {
            t.trim().parse::<Element>().map_err(|_| WalkError::Parse {
                line: 0,
                message: format!("malformed element `{t}`"),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    SubsetVertex::new(n, &elements)
}

#[cfg(test)]
mod tests {
    use super::super::walk_from_labels;
    use super::*;

    #[test]
    fn round_trip() {
        let start = SubsetVertex::new(3, &[1, 2]).unwrap();
        let walk = walk_from_labels(&start, &[3, 1, 4, 2, 5, 3, 2, 4, 1]).unwrap();
        let text = write_walk(&walk);
        let back = parse_walk(&text).unwrap();
        assert_eq!(walk, back);
    }

    #[test]
    fn parse_rejects_inconsistent_body() {
        let text = "oddwalk n=3 len=2 closed=0\n1,2 3,4\n5\n";
        assert!(parse_walk(text).is_err());
    }
}
