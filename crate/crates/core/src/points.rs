//! Point sets `V ⊂ GF(p)^n` and the plain-text points file format.
//!
//! A points file holds one point per line as integers separated by
//! whitespace and/or commas. Blank lines and lines starting with `#` are
//! ignored. The modulus is not part of the file.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::fp::{FieldContext, FpElement};
use crate::linalg::{self, FpMatrix};

/// `m` pairwise distinct points in `GF(p)^n`, stored as the rows of an
/// `m x n` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    field: FieldContext,
    nvars: usize,
    coords: Vec<FpElement>,
}

impl PointSet {
    /// Rejects empty sets, ragged rows, zero-dimensional points, entries
    /// outside `[0, p)` and duplicate rows.
    pub fn from_rows(field: FieldContext, rows: &[Vec<u32>]) -> Result<Self> {
        let nvars = rows
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::InvalidPoints("no points".into()))?;
        let mut coords = Vec::with_capacity(rows.len() * nvars);
        for (t, row) in rows.iter().enumerate() {
            if row.len() != nvars {
                return Err(Error::InvalidPoints(format!(
                    "row {} has {} coordinates, expected {nvars}",
                    t + 1,
                    row.len()
                )));
            }
            for &v in row {
                coords.push(field.checked(v).ok_or_else(|| {
                    Error::InvalidPoints(format!(
                        "row {}: entry {v} outside [0, {})",
                        t + 1,
                        field.modulus()
                    ))
                })?);
            }
        }
        Self::from_elements(field, nvars, coords)
    }

    /// Row-major coordinates, `coords.len() = m * nvars`.
    pub fn from_elements(
        field: FieldContext,
        nvars: usize,
        coords: Vec<FpElement>,
    ) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::InvalidPoints(
                "points must have at least one coordinate".into(),
            ));
        }
        if coords.is_empty() || !coords.len().is_multiple_of(nvars) {
            return Err(Error::InvalidPoints(format!(
                "{} coordinates do not form rows of length {nvars}",
                coords.len()
            )));
        }
        if let Some(&v) = coords.iter().find(|v| v.value() >= field.modulus()) {
            return Err(Error::InvalidPoints(format!(
                "entry {v} outside GF({})",
                field.modulus()
            )));
        }
        let set = PointSet {
            field,
            nvars,
            coords,
        };
        set.check_distinct()?;
        Ok(set)
    }

    fn check_distinct(&self) -> Result<()> {
        let mut seen: HashMap<&[FpElement], usize> = HashMap::with_capacity(self.len());
        for t in 0..self.len() {
            if let Some(first) = seen.insert(self.point(t), t) {
                return Err(Error::DuplicatePoint {
                    first: first + 1,
                    second: t + 1,
                });
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    /// Number of variables `n`.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of points `m`.
    pub fn len(&self) -> usize {
        self.coords.len() / self.nvars
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, t: usize) -> &[FpElement] {
        &self.coords[t * self.nvars..(t + 1) * self.nvars]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[FpElement]> {
        self.coords.chunks_exact(self.nvars)
    }

    /// Values of variable `var` at every point.
    pub fn column(&self, var: usize) -> Vec<FpElement> {
        self.iter().map(|pt| pt[var]).collect()
    }

    pub fn to_matrix(&self) -> FpMatrix {
        FpMatrix::from_fn(self.len(), self.nvars, |t, i| self.point(t)[i])
    }

    /// Rank of the `m x n` coordinate matrix.
    pub fn rank(&self) -> usize {
        linalg::rank(&self.to_matrix(), &self.field)
    }

    /// The same points listed in a different order: row `t` of the result is
    /// row `order[t]` of `self`.
    pub fn permuted(&self, order: &[usize]) -> Result<PointSet> {
        let mut check = order.to_vec();
        check.sort_unstable();
        if check != (0..self.len()).collect::<Vec<_>>() {
            return Err(Error::InvalidPoints("not a permutation of the rows".into()));
        }
        let coords = order
            .iter()
            .flat_map(|&t| self.point(t).iter().copied())
            .collect();
        Ok(PointSet {
            field: self.field,
            nvars: self.nvars,
            coords,
        })
    }

    /// Parses a points file; diagnostics carry 1-based line and column.
    pub fn parse(text: &str, field: FieldContext) -> Result<Self> {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let mut line_of_row = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let trimmed = line.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut row = Vec::new();
            let bytes = line.as_bytes();
            let mut i = 0;
            while i < bytes.len() {
                let b = bytes[i];
                if b.is_ascii_whitespace() || b == b',' {
                    i += 1;
                    continue;
                }
                let start = i;
                while i < bytes.len() && !(bytes[i].is_ascii_whitespace() || bytes[i] == b',') {
                    i += 1;
                }
                let tok = &line[start..i];
                let parse_err = |message: String| Error::Parse {
                    line: ln + 1,
                    column: start + 1,
                    message,
                };
                let v: u64 = tok
                    .parse()
                    .map_err(|_| parse_err(format!("`{tok}` is not a non-negative integer")))?;
                if v >= field.modulus() as u64 {
                    return Err(parse_err(format!(
                        "entry {v} outside [0, {})",
                        field.modulus()
                    )));
                }
                row.push(v as u32);
            }
            if let Some(first) = rows.first() {
                if row.len() != first.len() {
                    return Err(Error::Parse {
                        line: ln + 1,
                        column: 1,
                        message: format!(
                            "expected {} coordinates, found {}",
                            first.len(),
                            row.len()
                        ),
                    });
                }
            }
            rows.push(row);
            line_of_row.push(ln + 1);
        }
        if rows.is_empty() {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                column: 1,
                message: "no points".into(),
            });
        }
        PointSet::from_rows(field, &rows).map_err(|e| match e {
            // report duplicates by file line rather than row index
            Error::DuplicatePoint { first, second } => Error::DuplicatePoint {
                first: line_of_row[first - 1],
                second: line_of_row[second - 1],
            },
            other => other,
        })
    }

    /// One point per line, coordinates separated by single spaces.
    pub fn to_file_string(&self) -> String {
        let mut out = String::with_capacity(self.coords.len() * 3);
        for pt in self.iter() {
            for (i, v) in pt.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                write!(out, "{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}
