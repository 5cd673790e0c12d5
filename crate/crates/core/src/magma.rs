//! Finite groupoids as explicit Cayley tables.
//!
//! A [`CayleyTable`] of order `n` stores the products of a binary operation
//! on the elements `0..n`, row-major: `product(g, h)` is the entry in row
//! `g` and column `h`, encoding `g * h`. Element identity is the table
//! index; labels, if any, live in front ends.

use std::fmt;

use thiserror::Error;

use crate::perm::{Perm, PermError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MagmaError {
    #[error("a Cayley table must have positive order")]
    EmptyTable,
    #[error("row {row} has {len} entries, expected {order}")]
    RaggedRow {
        row: usize,
        len: usize,
        order: usize,
    },
    #[error("entry {value} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("element {element} out of range for order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("{axis} {line} is not a translation: value {value} repeated")]
    NotATranslation {
        axis: Axis,
        line: usize,
        value: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Row => write!(f, "row"),
            Axis::Column => write!(f, "column"),
        }
    }
}

/// An `n` by `n` multiplication table over element indices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    order: usize,
    table: Vec<usize>,
}

impl CayleyTable {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<CayleyTable, MagmaError> {
        let order = rows.len();
        if order == 0 {
            return Err(MagmaError::EmptyTable);
        }
        let mut table = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(MagmaError::RaggedRow {
                    row: r,
                    len: row.len(),
                    order,
                });
            }
            for (c, &value) in row.iter().enumerate() {
                if value >= order {
                    return Err(MagmaError::EntryOutOfRange {
                        row: r,
                        col: c,
                        value,
                        order,
                    });
                }
                table.push(value);
            }
        }
        Ok(CayleyTable { order, table })
    }

    /// Builds a table from a row-major flat array of length `order * order`.
    pub fn from_flat(order: usize, table: Vec<usize>) -> Result<CayleyTable, MagmaError> {
        if order == 0 {
            return Err(MagmaError::EmptyTable);
        }
        if table.len() != order * order {
            return Err(MagmaError::RaggedRow {
                row: table.len() / order,
                len: table.len() % order,
                order,
            });
        }
        for (i, &value) in table.iter().enumerate() {
            if value >= order {
                return Err(MagmaError::EntryOutOfRange {
                    row: i / order,
                    col: i % order,
                    value,
                    order,
                });
            }
        }
        Ok(CayleyTable { order, table })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The product `g * h`. Panics if either index is out of range.
    #[inline]
    pub fn product(&self, g: usize, h: usize) -> usize {
        assert!(g < self.order && h < self.order, "element out of range");
        self.table[g * self.order + h]
    }

    pub fn row(&self, g: usize) -> &[usize] {
        &self.table[g * self.order..(g + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.chunks(self.order)
    }
}

/// A minimal counterexample attached to a failed [`CheckReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// The law fails at these element indices (lexicographically first
    /// failure, at most three indices).
    Elements(Vec<usize>),
    /// A row or column of the table repeats `value` at the two positions.
    Duplicate {
        axis: Axis,
        line: usize,
        value: usize,
        positions: (usize, usize),
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Elements(els) => {
                write!(f, "(")?;
                for (i, e) in els.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, ")")
            }
            Witness::Duplicate {
                axis,
                line,
                value,
                positions,
            } => write!(
                f,
                "{axis} {line} repeats {value} at positions {} and {}",
                positions.0, positions.1
            ),
        }
    }
}

/// The verdict of one exhaustive law check.
///
/// A failed report carries the lexicographically first witness, so failure
/// messages are reproducible run to run; re-evaluating the law at the
/// witness always exhibits a genuine violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub law: String,
    pub passed: bool,
    pub witness: Option<Witness>,
    pub detail: String,
}

impl CheckReport {
    pub fn pass(law: impl Into<String>) -> CheckReport {
        CheckReport {
            law: law.into(),
            passed: true,
            witness: None,
            detail: "holds for all elements".into(),
        }
    }

    pub fn pass_with(law: impl Into<String>, detail: impl Into<String>) -> CheckReport {
        CheckReport {
            law: law.into(),
            passed: true,
            witness: None,
            detail: detail.into(),
        }
    }

    pub fn fail(
        law: impl Into<String>,
        witness: Witness,
        detail: impl Into<String>,
    ) -> CheckReport {
        CheckReport {
            law: law.into(),
            passed: false,
            witness: Some(witness),
            detail: detail.into(),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "PASS {}", self.law)
        } else {
            match &self.witness {
                Some(w) => write!(f, "FAIL {} at {}: {}", self.law, w, self.detail),
                None => write!(f, "FAIL {}: {}", self.law, self.detail),
            }
        }
    }
}

/// The permutation `h -> g * h` given by row `g` of the table.
pub fn left_translation(tbl: &CayleyTable, g: usize) -> Result<Perm, MagmaError> {
    if g >= tbl.order() {
        return Err(MagmaError::ElementOutOfRange {
            element: g,
            order: tbl.order(),
        });
    }
    Perm::from_images(tbl.row(g).to_vec()).map_err(|e| match e {
        PermError::NotABijection { value } => MagmaError::NotATranslation {
            axis: Axis::Row,
            line: g,
            value,
        },
        other => unreachable!("table entries are validated in range: {other}"),
    })
}

/// The permutation `h -> h * g` given by column `g` of the table.
pub fn right_translation(tbl: &CayleyTable, g: usize) -> Result<Perm, MagmaError> {
    if g >= tbl.order() {
        return Err(MagmaError::ElementOutOfRange {
            element: g,
            order: tbl.order(),
        });
    }
    let column: Vec<usize> = (0..tbl.order()).map(|h| tbl.product(h, g)).collect();
    Perm::from_images(column).map_err(|e| match e {
        PermError::NotABijection { value } => MagmaError::NotATranslation {
            axis: Axis::Column,
            line: g,
            value,
        },
        other => unreachable!("table entries are validated in range: {other}"),
    })
}

fn first_duplicate(
    values: impl Iterator<Item = usize>,
    order: usize,
) -> Option<(usize, usize, usize)> {
    // returns (value, first position, second position)
    let mut seen_at = vec![None; order];
    for (pos, v) in values.enumerate() {
        match seen_at[v] {
            Some(first) => return Some((v, first, pos)),
            None => seen_at[v] = Some(pos),
        }
    }
    None
}

/// Checks that every row and every column of the table is a bijection.
///
/// Rows are scanned before columns, each in ascending order, so the
/// reported duplicate is deterministic.
pub fn is_latin_square(tbl: &CayleyTable) -> CheckReport {
    const LAW: &str = "Latin square";
    let n = tbl.order();
    for g in 0..n {
        if let Some((value, a, b)) = first_duplicate(tbl.row(g).iter().copied(), n) {
            return CheckReport::fail(
                LAW,
                Witness::Duplicate {
                    axis: Axis::Row,
                    line: g,
                    value,
                    positions: (a, b),
                },
                format!("row {g} is not a bijection"),
            );
        }
    }
    for h in 0..n {
        if let Some((value, a, b)) = first_duplicate((0..n).map(|g| tbl.product(g, h)), n) {
            return CheckReport::fail(
                LAW,
                Witness::Duplicate {
                    axis: Axis::Column,
                    line: h,
                    value,
                    positions: (a, b),
                },
                format!("column {h} is not a bijection"),
            );
        }
    }
    CheckReport::pass_with(LAW, "every row and column is a bijection")
}

/// Finds the two-sided unit, if the table has one.
///
/// The unit is discovered by scanning, never assumed to sit at index 0; a
/// table can have at most one two-sided unit.
pub fn find_unit(tbl: &CayleyTable) -> Option<usize> {
    let n = tbl.order();
    (0..n).find(|&e| (0..n).all(|h| tbl.product(e, h) == h && tbl.product(h, e) == h))
}
