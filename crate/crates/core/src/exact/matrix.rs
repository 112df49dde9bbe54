use std::error::Error;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::rational::{format_rational, integer, parse_rational, Rational};

/// Dense row-major matrix of exact rationals.
///
/// Dimensions are at least one in each direction. All arithmetic is exact;
/// shape mismatches are programmer errors and panic.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Error from [`RationalMatrix::solve_full_rank`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    /// The coefficient matrix is singular over the rationals.
    Singular,
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::Singular => write!(f, "coefficient matrix is singular"),
        }
    }
}

impl Error for SolveError {}

/// Error from deserializing a matrix from JSON or CSV.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixFormatError {
    /// The document shape is wrong (missing keys, ragged rows, empty matrix).
    Malformed(String),
    /// An entry is not a valid `p/q` rational.
    BadEntry {
        row: usize,
        col: usize,
        text: String,
    },
}

impl fmt::Display for MatrixFormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixFormatError::Malformed(msg) => write!(f, "malformed matrix document: {msg}"),
            MatrixFormatError::BadEntry { row, col, text } => {
                write!(f, "bad entry `{text}` at row {row}, column {col}")
            }
        }
    }
}

impl Error for MatrixFormatError {}

impl RationalMatrix {
    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be >= 1");
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    /// Identity matrix of order `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    /// Builds a matrix entry by entry.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be >= 1");
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        RationalMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from row vectors. Rows must be nonempty and rectangular.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        assert!(!rows.is_empty(), "matrix must have at least one row");
        let cols = rows[0].len();
        assert!(cols >= 1, "matrix must have at least one column");
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "all rows must have the same length"
        );
        let n_rows = rows.len();
        let mut entries = Vec::with_capacity(n_rows * cols);
        for row in rows {
            entries.extend(row);
        }
        RationalMatrix {
            rows: n_rows,
            cols,
            entries,
        }
    }

    /// Convenience constructor from machine integers, mostly for tests.
    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| integer(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        assert!(row < self.rows && col < self.cols, "index out of range");
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        assert!(row < self.rows && col < self.cols, "index out of range");
        self.entries[row * self.cols + col] = value;
    }

    /// Row-major iteration over `(row, col, entry)`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        let cols = self.cols;
        self.entries
            .iter()
            .enumerate()
            .map(move |(i, v)| (i / cols, i % cols, v))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "dimension mismatch in matrix sum"
        );
        Self::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c) + other.get(r, c)
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "dimension mismatch in matrix difference"
        );
        Self::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c) - other.get(r, c)
        })
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c) * factor)
    }

    /// Exact matrix product.
    ///
    /// Zero entries are skipped, so multiplying by an incidence-like matrix
    /// costs proportionally to its nonzero count rather than a full cubic
    /// pass.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in matrix product: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        // Nonzero column positions per row of `other`.
        let nonzero_cols: Vec<Vec<usize>> = (0..other.rows)
            .map(|k| {
                (0..other.cols)
                    .filter(|&j| !other.get(k, j).is_zero())
                    .collect()
            })
            .collect();
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for (k, cols) in nonzero_cols.iter().enumerate() {
                let left = self.get(i, k);
                if left.is_zero() {
                    continue;
                }
                for &j in cols {
                    let idx = i * out.cols + j;
                    out.entries[idx] += left * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self
                .iter()
                .all(|(r, c, v)| if r == c { v.is_one() } else { v.is_zero() })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form via Gauss-Jordan elimination.
    ///
    /// The pivot in each column is the first nonzero entry at or below the
    /// current row; exact arithmetic needs no magnitude-based pivoting and
    /// this keeps the result deterministic. Returns the echelon form and the
    /// pivot column indices (their count is the rank).
    pub fn reduced_row_echelon_form(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pivot_row) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, pivot_row);
            let inv = Rational::one() / m.get(row, col);
            for c in col..m.cols {
                let idx = row * m.cols + c;
                if !m.entries[idx].is_zero() {
                    m.entries[idx] *= &inv;
                }
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let val = &factor * m.get(row, c);
                    let idx = r * m.cols + c;
                    m.entries[idx] -= val;
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
        (m, pivot_cols)
    }

    /// Solves `self * X = rhs` exactly for a square invertible coefficient
    /// matrix, by Gauss-Jordan elimination of the augmented system.
    pub fn solve_full_rank(&self, rhs: &Self) -> Result<Self, SolveError> {
        assert_eq!(self.rows, self.cols, "coefficient matrix must be square");
        assert_eq!(
            self.rows, rhs.rows,
            "right-hand side height must match coefficient matrix"
        );
        let n = self.rows;
        let augmented = Self::from_fn(n, n + rhs.cols, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else {
                rhs.get(r, c - n).clone()
            }
        });
        let (reduced, pivot_cols) = augmented.reduced_row_echelon_form();
        if pivot_cols.len() != n || pivot_cols.iter().enumerate().any(|(i, &c)| i != c) {
            return Err(SolveError::Singular);
        }
        Ok(Self::from_fn(n, rhs.cols, |r, c| {
            reduced.get(r, n + c).clone()
        }))
    }

    /// JSON form `{"rows": r, "cols": c, "entries": [["p/q", ...], ...]}`.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = (0..self.rows)
            .map(|r| {
                Value::Array(
                    (0..self.cols)
                        .map(|c| Value::String(format_rational(self.get(r, c))))
                        .collect(),
                )
            })
            .collect();
        json!({"rows": self.rows, "cols": self.cols, "entries": entries})
    }

    pub fn from_json(value: &Value) -> Result<Self, MatrixFormatError> {
        let malformed = |msg: &str| MatrixFormatError::Malformed(msg.to_owned());
        let rows = value
            .get("rows")
            .and_then(Value::as_u64)
            .ok_or_else(|| malformed("missing `rows`"))? as usize;
        let cols = value
            .get("cols")
            .and_then(Value::as_u64)
            .ok_or_else(|| malformed("missing `cols`"))? as usize;
        if rows == 0 || cols == 0 {
            return Err(malformed("dimensions must be >= 1"));
        }
        let entries = value
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| malformed("missing `entries`"))?;
        if entries.len() != rows {
            return Err(malformed("row count does not match `rows`"));
        }
        let mut grid = Vec::with_capacity(rows);
        for (r, row) in entries.iter().enumerate() {
            let row = row
                .as_array()
                .ok_or_else(|| malformed("row is not an array"))?;
            if row.len() != cols {
                return Err(malformed("row length does not match `cols`"));
            }
            let mut parsed = Vec::with_capacity(cols);
            for (c, cell) in row.iter().enumerate() {
                let text = cell
                    .as_str()
                    .ok_or_else(|| malformed("entry is not a string"))?;
                parsed.push(
                    parse_rational(text).map_err(|_| MatrixFormatError::BadEntry {
                        row: r,
                        col: c,
                        text: text.to_owned(),
                    })?,
                );
            }
            grid.push(parsed);
        }
        Ok(Self::from_rows(grid))
    }

    /// Bare CSV with `p/q` cells, one row per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| format_rational(self.get(r, c)))
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self, MatrixFormatError> {
        let mut grid: Vec<Vec<Rational>> = Vec::new();
        for (r, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let mut row = Vec::new();
            for (c, cell) in line.split(',').enumerate() {
                row.push(
                    parse_rational(cell).map_err(|_| MatrixFormatError::BadEntry {
                        row: r,
                        col: c,
                        text: cell.to_owned(),
                    })?,
                );
            }
            grid.push(row);
        }
        if grid.is_empty() {
            return Err(MatrixFormatError::Malformed("empty document".to_owned()));
        }
        let cols = grid[0].len();
        if grid.iter().any(|r| r.len() != cols) {
            return Err(MatrixFormatError::Malformed("ragged rows".to_owned()));
        }
        Ok(Self::from_rows(grid))
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| format_rational(self.get(r, c)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
