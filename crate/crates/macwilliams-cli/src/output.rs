//! Output plumbing: the three formats and small rendering helpers.
//!
//! JSON is the canonical machine format and is emitted with stable key
//! order (struct declaration order, maps pre-sorted), so identical
//! inputs produce byte-identical output. CSV is provided where the
//! result is a table; pretty is for reading in a terminal.

use clap::ValueEnum;
use num_rational::BigRational;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Canonical machine-readable JSON.
    Json,
    /// Comma-separated table, where the subcommand defines one.
    Csv,
    /// Human-readable text.
    Pretty,
}

/// Prints a value as pretty JSON with a trailing newline.
pub fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serialization cannot fail")
    );
}

/// `p/q`, or plain `p` when the value is an integer.
pub fn rational_string(x: &BigRational) -> String {
    x.to_string()
}

/// Space-joined integer sequence, the cell form of a decomposition.
pub fn seq_string(xs: &[u64]) -> String {
    let cells: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    cells.join(" ")
}

/// One CSV row. Cells are numbers, identifiers, and space-joined
/// sequences by construction; none may need quoting.
pub fn csv_row(cells: &[String]) -> String {
    for cell in cells {
        debug_assert!(
            !cell.contains([',', '"', '\n']),
            "cell {cell:?} would need CSV quoting"
        );
    }
    cells.join(",")
}

/// Left-aligned columns with two-space gutters, one line per row.
pub fn aligned_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; cols];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < row.len() {
                for _ in cell.chars().count()..widths[i] {
                    line.push(' ');
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn rationals_render_like_fractions_only_when_needed() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let three = BigRational::from_integer(BigInt::from(3));
        assert_eq!(rational_string(&half), "1/2");
        assert_eq!(rational_string(&three), "3");
        assert_eq!(rational_string(&-half), "-1/2");
    }

    #[test]
    fn tables_align_and_trim() {
        let rows = vec![
            vec!["pi".into(), "count".into()],
            vec!["3 0 0 0 0".into(), "1".into()],
        ];
        assert_eq!(aligned_table(&rows), "pi         count\n3 0 0 0 0  1\n");
    }

    #[test]
    fn csv_rows_join_cells() {
        assert_eq!(csv_row(&["3 0 0".into(), "1".into()]), "3 0 0,1");
    }
}
