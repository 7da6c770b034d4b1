//! The matrix text format: line 1 `ring <descriptor>`, line 2
//! `dims <m> <n>`, then `m` lines of `n` whitespace-separated entries in
//! the ring's entry syntax. Parsing reports 1-based line and column
//! positions; entries that are rewritten to canonical form on read (for
//! example `9` becoming `3` in `zmod 6`) are recorded as notes rather than
//! errors.

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::Ring;

/// A non-fatal observation made while parsing, e.g. a residue entry that
/// was reduced into `[0, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseNote {
    pub line: usize,
    pub col: usize,
    pub found: String,
    pub canonical: String,
}

impl fmt::Display for ParseNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: entry `{}` read as `{}`",
            self.line, self.col, self.found, self.canonical
        )
    }
}

fn parse_error(line: usize, col: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        message: message.into(),
    }
}

/// Splits a line into entry tokens on whitespace that sits outside
/// brackets, so polynomial entries may contain spaces after commas.
/// Returns 1-based column positions (in characters) with each token.
fn split_entries(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start_byte: Option<usize> = None;
    let mut start_col = 0usize;
    for (col, (byte, ch)) in line.char_indices().enumerate() {
        if ch.is_whitespace() && depth == 0 {
            if let Some(sb) = start_byte.take() {
                out.push((start_col + 1, &line[sb..byte]));
            }
            continue;
        }
        if start_byte.is_none() {
            start_byte = Some(byte);
            start_col = col;
        }
        match ch {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            _ => {}
        }
    }
    if let Some(sb) = start_byte {
        out.push((start_col + 1, &line[sb..]));
    }
    out
}

/// Parses the matrix text format from a string. Blank lines are ignored.
pub fn parse_matrix_str(input: &str) -> Result<(Matrix, Vec<ParseNote>)> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());

    let (ring_line_no, ring_line) = lines
        .next()
        .ok_or_else(|| parse_error(1, 1, "empty input, expected `ring <descriptor>`"))?;
    let descriptor = ring_line
        .trim_start()
        .strip_prefix("ring")
        .filter(|rest| rest.starts_with(char::is_whitespace))
        .ok_or_else(|| parse_error(ring_line_no, 1, "expected `ring <descriptor>`"))?;
    let ring = Ring::parse(descriptor)
        .map_err(|e| parse_error(ring_line_no, 1, e.to_string()))?;

    let (dims_line_no, dims_line) = lines
        .next()
        .ok_or_else(|| parse_error(ring_line_no + 1, 1, "expected `dims <m> <n>`"))?;
    let dims_tokens: Vec<&str> = dims_line.split_whitespace().collect();
    let (m, n) = match dims_tokens.as_slice() {
        ["dims", m, n] => {
            let m: usize = m
                .parse()
                .map_err(|_| parse_error(dims_line_no, 1, "row count is not a number"))?;
            let n: usize = n
                .parse()
                .map_err(|_| parse_error(dims_line_no, 1, "column count is not a number"))?;
            (m, n)
        }
        _ => return Err(parse_error(dims_line_no, 1, "expected `dims <m> <n>`")),
    };
    if m == 0 || n == 0 {
        return Err(parse_error(dims_line_no, 1, "dims must both be positive"));
    }

    let mut rows = Vec::with_capacity(m);
    let mut notes = Vec::new();
    let mut last_line_no = dims_line_no;
    for (line_no, line) in lines {
        if rows.len() == m {
            return Err(parse_error(
                line_no,
                1,
                format!("expected {m} rows per dims, found more data"),
            ));
        }
        last_line_no = line_no;
        let tokens = split_entries(line);
        if tokens.len() != n {
            return Err(parse_error(
                line_no,
                1,
                format!("row has {} entries, expected {n}", tokens.len()),
            ));
        }
        let mut row = Vec::with_capacity(n);
        for (col, token) in tokens {
            let element = ring
                .parse_element(token)
                .map_err(|e| parse_error(line_no, col, e.to_string()))?;
            let canonical = element.to_string();
            if canonical != token {
                notes.push(ParseNote {
                    line: line_no,
                    col,
                    found: token.to_string(),
                    canonical,
                });
            }
            row.push(element);
        }
        rows.push(row);
    }
    if rows.len() != m {
        return Err(parse_error(
            last_line_no,
            1,
            format!("expected {m} rows per dims, found {}", rows.len()),
        ));
    }

    let matrix = Matrix::from_rows(ring, rows)?;
    Ok((matrix, notes))
}

/// Reads and parses a matrix file.
pub fn parse_matrix_file(path: impl AsRef<Path>) -> Result<(Matrix, Vec<ParseNote>)> {
    let path = path.as_ref();
    let input = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_matrix_str(&input)
}

/// Renders a matrix in the same text format, entries in canonical form.
/// Output round-trips through [`parse_matrix_str`] without notes.
pub fn render_matrix(a: &Matrix) -> String {
    let mut out = format!("ring {}\ndims {} {}\n", a.ring(), a.nrows(), a.ncols());
    for row in a.rows() {
        let line = row
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&line);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parses_the_basic_integer_file() {
        let (a, notes) = parse_matrix_str("ring integers\ndims 2 2\n1 2\n3 4\n").unwrap();
        assert_eq!(a.ring(), &Ring::Integers);
        assert_eq!((a.nrows(), a.ncols()), (2, 2));
        assert_eq!(a.entry(1, 0).unwrap(), &Ring::Integers.from_i64(3));
        assert!(notes.is_empty());
    }

    #[test]
    fn residues_reduce_with_a_note() {
        let (a, notes) = parse_matrix_str("ring zmod 6\ndims 1 1\n9\n").unwrap();
        let ring = Ring::parse("zmod 6").unwrap();
        assert_eq!(a.entry(0, 0).unwrap(), &ring.from_i64(3));
        assert_eq!(notes.len(), 1);
        assert_eq!(
            notes[0].to_string(),
            "line 3, column 1: entry `9` read as `3`"
        );
    }

    #[test]
    fn rationals_and_polys_parse() {
        let (a, _) =
            parse_matrix_str("ring rationals\ndims 1 2\n1/2 -3/4\n").unwrap();
        assert_eq!(a.entry(0, 1).unwrap().to_string(), "-3/4");

        let (b, notes) = parse_matrix_str(
            "ring poly over integers\ndims 2 2\n[0,1] [1, 2]\n[] [1,0]\n",
        )
        .unwrap();
        assert_eq!(b.entry(0, 1).unwrap().to_string(), "[1,2]");
        assert_eq!(b.entry(1, 1).unwrap().to_string(), "[1]");
        // `[1, 2]` loses its space and `[1,0]` its trailing zero.
        assert_eq!(notes.len(), 2);
    }

    #[test]
    fn nested_poly_entries_survive() {
        let input = "ring poly over poly over zmod 5\ndims 1 1\n[[1],[0,1]]\n";
        let (a, notes) = parse_matrix_str(input).unwrap();
        assert_eq!(a.entry(0, 0).unwrap().to_string(), "[[1],[0,1]]");
        assert!(notes.is_empty());
    }

    #[test]
    fn structural_errors_carry_positions() {
        let err = parse_matrix_str("").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));

        let err = parse_matrix_str("matrix integers\ndims 1 1\n1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));

        let err = parse_matrix_str("ring gaussian\ndims 1 1\n1\n").unwrap_err();
        let text = err.to_string();
        assert!(text.contains("unknown ring descriptor"), "{text}");

        let err = parse_matrix_str("ring integers\nsize 1 1\n1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));

        let err = parse_matrix_str("ring integers\ndims 0 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn dims_must_match_the_data() {
        let err = parse_matrix_str("ring integers\ndims 2 2\n1 2\n3 4\n5 6\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 5, .. }), "{err}");

        let err = parse_matrix_str("ring integers\ndims 2 2\n1 2\n").unwrap_err();
        assert!(err.to_string().contains("expected 2 rows"), "{err}");

        let err = parse_matrix_str("ring integers\ndims 2 2\n1 2 3\n4 5 6\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn entry_errors_point_at_the_column() {
        let err = parse_matrix_str("ring integers\ndims 1 3\n1 x 3\n").unwrap_err();
        assert!(
            matches!(err, Error::Parse { line: 3, col: 3, .. }),
            "{err:?}"
        );

        let err = parse_matrix_str("ring rationals\ndims 1 1\n1/0\n").unwrap_err();
        assert!(err.to_string().contains("zero denominator"), "{err}");
    }

    #[test]
    fn blank_lines_are_ignored() {
        let (a, _) =
            parse_matrix_str("\nring integers\n\ndims 1 1\n\n7\n\n").unwrap();
        assert_eq!(a.entry(0, 0).unwrap(), &Ring::Integers.from_i64(7));
    }

    #[test]
    fn render_golden() {
        let a = Matrix::from_i64_rows(Ring::Integers, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(render_matrix(&a), "ring integers\ndims 2 2\n1 2\n3 4\n");
    }

    #[test]
    fn round_trips_over_every_standard_ring() {
        let mut rng = ChaCha8Rng::seed_from_u64(103);
        for ring in crate::laws::standard_rings() {
            for _ in 0..20 {
                let a = Matrix::sample(&ring, 3, 4, &mut rng).unwrap();
                let rendered = render_matrix(&a);
                let (parsed, notes) = parse_matrix_str(&rendered).unwrap();
                assert_eq!(&parsed, &a, "{ring}");
                assert!(notes.is_empty(), "{ring}: {notes:?}");
            }
        }
    }

    #[test]
    fn missing_file_reports_io_error() {
        let err = parse_matrix_file("/nonexistent/matrix.txt").unwrap_err();
        assert!(matches!(err, Error::Io { .. }));
    }
}
