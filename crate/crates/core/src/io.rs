//! Cayley-table text format.
//!
//! ```text
//! 3
//! 0 2 1
//! 2 1 0
//! 1 0 2
//! ```
//!
//! The first non-blank line holds `n`; the next `n` non-blank lines hold the
//! rows. Lines starting with `#` are ignored.

use crate::error::{ParseError, TableError};
use crate::quandle::CayleyQuandle;

/// Which operand the table rows are indexed by.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Convention {
    /// `row[x][y] = x ▷ y`, right self-distributive.
    #[default]
    Right,
    /// Left-distributive source: `row[y][x]` holds `x ▷ y`.
    Left,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TableFormat {
    pub one_indexed: bool,
    pub convention: Convention,
}

impl TableFormat {
    pub const BUNDLED: TableFormat = TableFormat {
        one_indexed: true,
        convention: Convention::Right,
    };
}

const ORDER12: &str = include_str!("../assets/order12.txt");

/// The smallest connected quandle whose quandle ring is not multiplicity-free.
pub fn bundled_order12() -> CayleyQuandle {
    parse_table(ORDER12, TableFormat::BUNDLED).expect("bundled table is valid")
}

pub fn bundled_order12_text() -> &'static str {
    ORDER12
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// Split a line into `(column, token)` pairs, columns 1-based.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.char_indices()
        .filter(move |&(i, c)| {
            !c.is_whitespace() && (i == 0 || line[..i].ends_with(char::is_whitespace))
        })
        .map(move |(i, _)| {
            let rest = &line[i..];
            let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
            (line[..i].chars().count() + 1, &rest[..end])
        })
}

/// Parse the raw integer rows without checking the quandle axioms.
pub fn parse_rows(text: &str, format: TableFormat) -> Result<Vec<Vec<usize>>, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| err(1, 1, "empty input"))?;
    let mut htok = tokens(header);
    let (hcol, htext) = htok.next().expect("non-blank line");
    let n: usize = htext
        .parse()
        .map_err(|_| err(hline, hcol, format!("expected the order n, found {htext:?}")))?;
    if let Some((col, extra)) = htok.next() {
        return Err(err(hline, col, format!("unexpected {extra:?} after the order")));
    }
    if n == 0 {
        return Err(err(hline, hcol, "order must be at least 1"));
    }

    let offset = usize::from(format.one_indexed);
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let (lno, line) = lines
            .next()
            .ok_or_else(|| err(hline, hcol, format!("expected {n} rows, found {r}")))?;
        let mut row = Vec::with_capacity(n);
        for (col, tok) in tokens(line) {
            if row.len() == n {
                return Err(err(lno, col, format!("row {} has more than {n} entries", r + 1)));
            }
            let v: usize = tok
                .parse()
                .map_err(|_| err(lno, col, format!("expected an integer, found {tok:?}")))?;
            if v < offset || v - offset >= n {
                let (lo, hi) = (offset, n - 1 + offset);
                return Err(err(lno, col, format!("entry {v} outside {lo}..={hi}")));
            }
            row.push(v - offset);
        }
        if row.len() < n {
            let col = line.chars().count() + 1;
            return Err(err(
                lno,
                col,
                format!("row {} has {} entries, expected {n}", r + 1, row.len()),
            ));
        }
        rows.push(row);
    }
    if let Some((lno, line)) = lines.next() {
        let col = line.chars().position(|c| !c.is_whitespace()).unwrap_or(0) + 1;
        return Err(err(lno, col, format!("trailing data after {n} rows")));
    }

    if format.convention == Convention::Left {
        rows = (0..n).map(|x| (0..n).map(|y| rows[y][x]).collect()).collect();
    }
    Ok(rows)
}

/// Parse and validate.
pub fn parse_table(text: &str, format: TableFormat) -> Result<CayleyQuandle, TableError> {
    Ok(CayleyQuandle::from_rows(parse_rows(text, format)?)?)
}

/// Inverse of [`parse_table`] for the same format.
pub fn write_table(q: &CayleyQuandle, format: TableFormat) -> String {
    let n = q.order();
    let offset = usize::from(format.one_indexed);
    let width = (n - 1 + offset).to_string().len();
    let mut out = format!("{n}\n");
    for a in 0..n {
        let row: Vec<String> = (0..n)
            .map(|b| {
                let v = match format.convention {
                    Convention::Right => q.op(a, b),
                    Convention::Left => q.op(b, a),
                };
                format!("{:>width$}", v + offset)
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::{Axiom, QuandleError};
    use crate::quandle::affine;

    #[test]
    fn bundled_is_valid() {
        let q = bundled_order12();
        assert_eq!(q.order(), 12);
        assert_eq!(q.op(0, 1), 10);
        assert_eq!(q.op(11, 11), 11);
    }

    #[test]
    fn zero_and_one_indexed() {
        let z = parse_table("3\n0 2 1\n2 1 0\n1 0 2\n", TableFormat::default()).unwrap();
        let one = TableFormat {
            one_indexed: true,
            ..TableFormat::default()
        };
        let o = parse_table("3\n1 3 2\n3 2 1\n2 1 3\n", one).unwrap();
        assert_eq!(z, o);
        assert_eq!(z, affine(3, 2).unwrap());
    }

    #[test]
    fn comments_and_blank_lines() {
        let q = parse_table("# dihedral\n\n3\n0 2 1\n\n2 1 0\n1 0 2\n", TableFormat::default());
        assert!(q.is_ok());
    }

    #[test]
    fn left_convention_transposes() {
        let q = affine(5, 2).unwrap();
        let left = TableFormat {
            convention: Convention::Left,
            ..TableFormat::default()
        };
        let text = write_table(&q, left);
        assert_eq!(parse_table(&text, left).unwrap(), q);
        let raw = parse_rows(&text, TableFormat::default()).unwrap();
        assert_eq!(raw[1][0], q.op(0, 1));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = parse_rows("3\n0 1 2\n0 1\n0 1 2\n", TableFormat::default()).unwrap_err();
        assert_eq!((e.line, e.column), (3, 4));
        let e = parse_rows("2\n0 x\n1 1\n", TableFormat::default()).unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_rows("2\n0 1\n1  5\n", TableFormat::default()).unwrap_err();
        assert_eq!((e.line, e.column), (3, 4));
        let e = parse_rows("2\n0 1 1\n1 0\n", TableFormat::default()).unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        let e = parse_rows("2\n0 1\n", TableFormat::default()).unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_rows("2\n0 0\n1 1\n0 0\n", TableFormat::default()).unwrap_err();
        assert_eq!(e.line, 4);
        assert!(parse_rows("", TableFormat::default()).is_err());
        assert!(parse_rows("0\n", TableFormat::default()).is_err());
        let one = TableFormat {
            one_indexed: true,
            ..TableFormat::default()
        };
        let e = parse_rows("1\n0\n", one).unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
    }

    #[test]
    fn axiom_failures_surface() {
        match parse_table("2\n1 0\n0 1\n", TableFormat::default()) {
            Err(TableError::Quandle(QuandleError::AxiomViolation(v))) => {
                assert_eq!(v.axiom, Axiom::Idempotence);
                assert!(v.to_string().starts_with("axiom 1 fails at x=0"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn writer_round_trip() {
        for q in [bundled_order12(), affine(13, 9).unwrap()] {
            for one_indexed in [false, true] {
                for convention in [Convention::Right, Convention::Left] {
                    let f = TableFormat {
                        one_indexed,
                        convention,
                    };
                    assert_eq!(parse_table(&write_table(&q, f), f).unwrap(), q);
                }
            }
        }
        assert_eq!(write_table(&bundled_order12(), TableFormat::BUNDLED), {
            let mut s = String::new();
            for (i, line) in ORDER12.lines().enumerate() {
                if i == 0 {
                    s.push_str(line);
                } else {
                    let row: Vec<String> =
                        line.split_whitespace().map(|t| format!("{t:>2}")).collect();
                    s.push_str(&row.join(" "));
                }
                s.push('\n');
            }
            s
        });
    }
}
