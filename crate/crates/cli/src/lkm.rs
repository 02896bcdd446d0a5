//! `.lkm` linking-matrix files.
//!
//! ```text
//! # elementary block
//! sign -1
//! size 2
//! 0 1
//! -1 0
//! ```
//!
//! `#` starts a comment; blank lines are ignored. The header keys `sign`
//! and `size` come first, followed by exactly `size` rows of `size`
//! integers.

use nspairs::linking::{LinkingMatrix, SymmetrySign};
use nspairs::{IntMatrix, Integer};

use crate::error::{CliError, CliResult};

fn at(line: usize, col: usize, msg: impl AsRef<str>) -> CliError {
    CliError::Input(format!("line {line}, column {col}: {}", msg.as_ref()))
}

/// Whitespace-separated words with their 1-based columns, comments removed.
fn words(line: &str) -> Vec<(usize, &str)> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in content.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &content[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &content[s..]));
    }
    out.into_iter().map(|(s, w)| (content[..s].chars().count() + 1, w)).collect()
}

pub fn parse_lkm(text: &str) -> CliResult<LinkingMatrix> {
    let mut sign: Option<SymmetrySign> = None;
    let mut size: Option<usize> = None;
    let mut rows: Vec<Vec<Integer>> = Vec::new();
    let mut last_line = 0;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let w = words(line);
        let Some(&(col, first)) = w.first() else { continue };
        match first {
            "sign" | "size" => {
                if !rows.is_empty() {
                    return Err(at(lineno, col, format!("'{first}' must precede the matrix rows")));
                }
                let [_, (vcol, value)] = w[..] else {
                    return Err(at(lineno, col, format!("'{first}' takes exactly one value")));
                };
                if first == "sign" {
                    if sign.is_some() {
                        return Err(at(lineno, col, "duplicate 'sign'"));
                    }
                    sign = Some(match value {
                        "-1" => SymmetrySign::Skew,
                        "1" | "+1" => SymmetrySign::Symmetric,
                        _ => return Err(at(lineno, vcol, format!("sign must be 1 or -1, got '{value}'"))),
                    });
                } else {
                    if size.is_some() {
                        return Err(at(lineno, col, "duplicate 'size'"));
                    }
                    size = Some(
                        value
                            .parse()
                            .map_err(|_| at(lineno, vcol, format!("invalid size '{value}'")))?,
                    );
                }
            }
            _ => {
                let Some(k) = size else {
                    return Err(at(lineno, col, "expected 'size' before the matrix rows"));
                };
                if rows.len() == k {
                    return Err(at(lineno, col, format!("more than {k} rows")));
                }
                if w.len() != k {
                    return Err(at(lineno, col, format!("expected {k} entries, found {}", w.len())));
                }
                let row = w
                    .iter()
                    .map(|&(c, v)| v.parse::<Integer>().map_err(|_| at(lineno, c, format!("invalid integer '{v}'"))))
                    .collect::<CliResult<Vec<_>>>()?;
                rows.push(row);
            }
        }
    }
    let sign = sign.ok_or_else(|| at(last_line.max(1), 1, "missing 'sign'"))?;
    let k = size.ok_or_else(|| at(last_line.max(1), 1, "missing 'size'"))?;
    if rows.len() != k {
        return Err(at(last_line + 1, 1, format!("expected {k} rows, found {}", rows.len())));
    }
    let entries = IntMatrix::from_rows(rows).map_err(CliError::from)?;
    Ok(LinkingMatrix::new(sign, entries)?)
}

pub fn format_lkm(l: &LinkingMatrix, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(&format!("sign {}\nsize {}\n", l.sign().value(), l.k()));
    for row in l.matrix().to_rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# block\nsign -1\nsize 2\n0 1   # first row\n-1 0\n";
        let l = parse_lkm(text).unwrap();
        assert_eq!(l.k(), 2);
        assert_eq!(parse_lkm(&format_lkm(&l, None)).unwrap(), l);
    }

    #[test]
    fn empty_matrix() {
        let l = parse_lkm("sign -1\nsize 0\n").unwrap();
        assert_eq!(l.k(), 0);
    }

    fn message(text: &str) -> String {
        match parse_lkm(text) {
            Err(CliError::Input(m)) => m,
            other => panic!("expected an input error, got {other:?}"),
        }
    }

    #[test]
    fn positioned_errors() {
        assert!(message("sign -1\nsize 2\n0 x\n-1 0\n").starts_with("line 3, column 3"));
        assert!(message("sign 2\n").starts_with("line 1, column 6"));
        assert!(message("sign -1\nsize 2\n0 1\n").starts_with("line 4"));
        assert!(message("sign -1\nsize 2\n0 1 2\n").starts_with("line 3, column 1"));
        assert!(message("0 1\n").contains("'size'"));
        assert!(message("sign -1\nsize 2\n0 1\n1 0\n").contains("structure"));
    }
}
