use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Whether the table resolves the ideal `I` or the quotient `R/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    Ideal,
    Quotient,
}

/// Nonzero graded Betti numbers `β_{i,j}` keyed by homological index `i`
/// and internal degree `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    convention: Convention,
    entries: BTreeMap<(usize, u64), BigUint>,
}

/// One `{i, j, value}` record of the structured form; the value is a decimal
/// string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiRow {
    pub i: usize,
    pub j: u64,
    pub value: String,
}

impl BettiTable {
    pub fn new(convention: Convention) -> Self {
        BettiTable {
            convention,
            entries: BTreeMap::new(),
        }
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Adds `value` to `β_{i,j}`; zero contributions are not stored.
    pub fn add(&mut self, i: usize, j: u64, value: BigUint) {
        if value.is_zero() {
            return;
        }
        *self.entries.entry((i, j)).or_default() += value;
    }

    pub fn get(&self, i: usize, j: u64) -> BigUint {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, u64, &BigUint)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a nonzero entry.
    pub fn projdim(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `max (j - i)` over nonzero entries.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }

    /// `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> BigUint {
        self.entries
            .iter()
            .filter(|(&(k, _), _)| k == i)
            .map(|(_, v)| v.clone())
            .sum()
    }

    /// The table of `R/I` from that of `I`: shift `i` by one and add
    /// `β_{0,0} = 1`. Tables already in that convention are returned as is.
    pub fn to_quotient(&self) -> BettiTable {
        match self.convention {
            Convention::Quotient => self.clone(),
            Convention::Ideal => {
                let mut out = BettiTable::new(Convention::Quotient);
                out.add(0, 0, BigUint::one());
                for (&(i, j), v) in &self.entries {
                    out.add(i + 1, j, v.clone());
                }
                out
            }
        }
    }

    /// The table of `I` from that of `R/I`.
    pub fn to_ideal(&self) -> BettiTable {
        match self.convention {
            Convention::Ideal => self.clone(),
            Convention::Quotient => {
                let mut out = BettiTable::new(Convention::Ideal);
                for (&(i, j), v) in &self.entries {
                    if i > 0 {
                        out.add(i - 1, j, v.clone());
                    }
                }
                out
            }
        }
    }

    pub fn to_rows(&self) -> Vec<BettiRow> {
        self.entries
            .iter()
            .map(|(&(i, j), v)| BettiRow {
                i,
                j,
                value: v.to_string(),
            })
            .collect()
    }

    pub fn from_rows(convention: Convention, rows: &[BettiRow]) -> Result<BettiTable> {
        let mut out = BettiTable::new(convention);
        for row in rows {
            let v: BigUint = row
                .value
                .parse()
                .map_err(|_| Error::Parameter(format!("bad Betti value {:?}", row.value)))?;
            out.add(row.i, row.j, v);
        }
        Ok(out)
    }

    /// The usual text layout: a header of homological indices, a `total:`
    /// row, then one row per `j - i` with `.` for zero.
    ///
    /// ```text
    ///        0  1  2  3 4
    /// total: 1 16 33 24 6
    ///     0: 1  .  .  . .
    ///     1: .  .  .  . .
    ///     2: . 16 33 24 6
    /// ```
    pub fn render_text(&self) -> String {
        let Some(max_i) = self.projdim() else {
            return String::from("total:\n");
        };
        let rows: Vec<i64> = self
            .entries
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .collect();
        let lo = *rows.iter().min().unwrap();
        let hi = *rows.iter().max().unwrap();

        let cell = |i: usize, row: i64| -> String {
            let j = row + i as i64;
            if j < 0 {
                return ".".into();
            }
            match self.entries.get(&(i, j as u64)) {
                Some(v) => v.to_string(),
                None => ".".into(),
            }
        };
        let totals: Vec<String> = (0..=max_i).map(|i| self.total(i).to_string()).collect();
        let widths: Vec<usize> = (0..=max_i)
            .map(|i| {
                let mut w = i.to_string().len().max(totals[i].len());
                for row in lo..=hi {
                    w = w.max(cell(i, row).len());
                }
                w
            })
            .collect();

        const LABEL: usize = 6;
        let mut out = String::new();
        out.push_str(&" ".repeat(LABEL));
        for (i, w) in widths.iter().enumerate() {
            let _ = write!(out, " {:>w$}", i, w = w);
        }
        out.push('\n');
        out.push_str("total:");
        for (t, w) in totals.iter().zip(&widths) {
            let _ = write!(out, " {:>w$}", t, w = w);
        }
        out.push('\n');
        for row in lo..=hi {
            let _ = write!(out, "{:>w$}", format!("{row}:"), w = LABEL);
            for (i, w) in widths.iter().enumerate() {
                let _ = write!(out, " {:>w$}", cell(i, row), w = w);
            }
            out.push('\n');
        }
        out
    }

    /// Reads back the layout written by [`BettiTable::render_text`].
    pub fn parse_text(text: &str, convention: Convention) -> Result<BettiTable> {
        let bad = |why: &str| Error::Parameter(format!("malformed Betti table: {why}"));
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| bad("empty"))?;
        let cols: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad("header")))
            .collect::<Result<_>>()?;
        let mut out = BettiTable::new(convention);
        for line in lines {
            let (label, rest) = line.split_once(':').ok_or_else(|| bad("row label"))?;
            let label = label.trim();
            if label == "total" {
                continue;
            }
            let row: i64 = label.parse().map_err(|_| bad("row label"))?;
            let cells: Vec<&str> = rest.split_whitespace().collect();
            if cells.len() != cols.len() {
                return Err(bad("row width"));
            }
            for (&i, c) in cols.iter().zip(cells) {
                if c == "." {
                    continue;
                }
                let v: BigUint = c.parse().map_err(|_| bad("entry"))?;
                let j = row + i as i64;
                if j < 0 {
                    return Err(bad("negative degree"));
                }
                out.add(i, j as u64, v);
            }
        }
        Ok(out)
    }
}
