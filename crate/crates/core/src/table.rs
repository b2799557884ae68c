//! Numeric CSV tables.
//!
//! Comma separated, UTF-8, `.` as decimal point. The first row is a header
//! when any of its cells is neither a number nor a missing marker; otherwise
//! columns are named by their zero-based index. Empty cells and `NA` are
//! missing values.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    headers: Vec<String>,
    columns: Vec<Vec<Option<f64>>>,
}

enum Cell {
    Missing,
    Number(f64),
    Text,
}

fn classify(raw: &str) -> Cell {
    let t = raw.trim();
    if t.is_empty() || t.eq_ignore_ascii_case("na") {
        return Cell::Missing;
    }
    match t.parse::<f64>() {
        Ok(v) if v.is_finite() => Cell::Number(v),
        _ => Cell::Text,
    }
}

impl Table {
    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = File::open(path)
            .map_err(|e| Error::Table(format!("cannot open {}: {e}", path.display())))?;
        Self::from_reader(file)
    }

    pub fn from_reader<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .from_reader(reader);
        let mut records = rdr.records();

        let first = match records.next() {
            Some(r) => r.map_err(|e| Error::Table(e.to_string()))?,
            None => return Err(Error::Table("empty input".into())),
        };
        let width = first.len();
        let is_header = first.iter().any(|c| matches!(classify(c), Cell::Text));
        let headers: Vec<String> = if is_header {
            first.iter().map(|h| h.trim().to_string()).collect()
        } else {
            (0..width).map(|i| i.to_string()).collect()
        };
        let mut columns: Vec<Vec<Option<f64>>> = vec![Vec::new(); width];

        let mut push_row = |line: u64, record: &csv::StringRecord| -> Result<()> {
            if record.len() != width {
                return Err(Error::Table(format!(
                    "row {line}: expected {width} fields, found {}",
                    record.len()
                )));
            }
            for (col, raw) in record.iter().enumerate() {
                let value = match classify(raw) {
                    Cell::Missing => None,
                    Cell::Number(v) => Some(v),
                    Cell::Text => {
                        return Err(Error::Table(format!(
                            "row {line}, column {} (`{}`): non-numeric value `{}`",
                            col + 1,
                            headers[col],
                            raw.trim()
                        )))
                    }
                };
                columns[col].push(value);
            }
            Ok(())
        };

        if !is_header {
            push_row(1, &first)?;
        }
        for record in records {
            let record = record.map_err(|e| Error::Table(e.to_string()))?;
            let line = record.position().map_or(0, |p| p.line());
            push_row(line, &record)?;
        }
        Ok(Self { headers, columns })
    }

    pub fn headers(&self) -> &[String] {
        &self.headers
    }

    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn n_rows(&self) -> usize {
        self.columns.first().map_or(0, Vec::len)
    }

    pub fn column(&self, index: usize) -> &[Option<f64>] {
        &self.columns[index]
    }

    /// Resolves a column by header name, falling back to a zero-based index.
    pub fn column_index(&self, key: &str) -> Result<usize> {
        if let Some(i) = self.headers.iter().position(|h| h == key) {
            return Ok(i);
        }
        match key.parse::<usize>() {
            Ok(i) if i < self.columns.len() => Ok(i),
            _ => Err(Error::Table(format!("no column `{key}`"))),
        }
    }

    /// Both columns in full; any missing value is an error.
    pub fn complete_pair(&self, a: usize, b: usize) -> Result<(Vec<f64>, Vec<f64>)> {
        let collect = |c: usize| -> Result<Vec<f64>> {
            self.columns[c]
                .iter()
                .enumerate()
                .map(|(row, v)| {
                    v.ok_or_else(|| {
                        Error::Table(format!(
                            "missing value in column `{}` at data row {}",
                            self.headers[c],
                            row + 1
                        ))
                    })
                })
                .collect()
        };
        Ok((collect(a)?, collect(b)?))
    }

    /// Rows where both columns are present.
    pub fn pairwise(&self, a: usize, b: usize) -> (Vec<f64>, Vec<f64>) {
        self.columns[a]
            .iter()
            .zip(&self.columns[b])
            .filter_map(|(x, y)| Some(((*x)?, (*y)?)))
            .unzip()
    }
}

/// Writes `x,y` pairs with shortest round-trip formatting.
pub fn write_pairs<W: Write>(mut out: W, xs: &[f64], ys: &[f64]) -> std::io::Result<()> {
    writeln!(out, "x,y")?;
    for (x, y) in xs.iter().zip(ys) {
        writeln!(out, "{x},{y}")?;
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_detection() {
        let t = Table::from_reader("time,g1\n1,2\n3,NA\n".as_bytes()).unwrap();
        assert_eq!(t.headers(), &["time", "g1"]);
        assert_eq!(t.column(1), &[Some(2.0), None]);

        let t = Table::from_reader("1,2\n3,4\n".as_bytes()).unwrap();
        assert_eq!(t.headers(), &["0", "1"]);
        assert_eq!(t.n_rows(), 2);
    }

    #[test]
    fn non_numeric_cell_reports_location() {
        let err = Table::from_reader("x,y\n1,2\n3,abc\n".as_bytes()).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("row 3") && msg.contains("column 2"), "{msg}");
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(Table::from_reader("x,y\n1,2\n3\n".as_bytes()).is_err());
    }

    #[test]
    fn pair_access() {
        let t = Table::from_reader("a,b,c\n1,,5\n2,4,6\nNA,1,7\n".as_bytes()).unwrap();
        assert_eq!(t.pairwise(0, 1), (vec![2.0], vec![4.0]));
        assert!(t.complete_pair(0, 2).is_err());
        assert!(t.complete_pair(1, 1).is_err());
        assert_eq!(t.column_index("c").unwrap(), 2);
        assert_eq!(t.column_index("1").unwrap(), 1);
        assert!(t.column_index("z").is_err());
    }

    #[test]
    fn written_values_read_back_exactly() {
        let xs = [0.1, 1.0 / 3.0, -2.5e-300];
        let ys = [std::f64::consts::PI, 7.0, 1e300];
        let mut buf = Vec::new();
        write_pairs(&mut buf, &xs, &ys).unwrap();
        let t = Table::from_reader(buf.as_slice()).unwrap();
        assert_eq!(t.complete_pair(0, 1).unwrap(), (xs.to_vec(), ys.to_vec()));
    }
}
