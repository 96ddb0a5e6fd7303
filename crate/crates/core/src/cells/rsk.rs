use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::coxeter::{digit_char, CoxeterElement, Family};
use crate::{Error, Result};

/// A Young tableau stored row by row.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<u8>>) -> Self {
        Self { rows }
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    /// Row index containing `entry`.
    pub fn row_of(&self, entry: u8) -> Option<usize> {
        self.rows.iter().position(|r| r.contains(&entry))
    }

    /// Rows and columns strictly increasing, shape a partition.
    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let shape_ok = self.rows.windows(2).all(|w| w[0].len() >= w[1].len());
        let cols_ok = self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(b, a)| a < b));
        rows_ok && shape_ok && cols_ok
    }

    /// One row per line, entries in the digit alphabet separated by single
    /// spaces, each line terminated by `\n`.
    pub fn to_layout(&self) -> String {
        alloc::format!("{self}")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            for (i, &e) in row.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", digit_char(e as usize))?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// Insertion tableau `P` and recording tableau `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TableauPair {
    pub p: Tableau,
    pub q: Tableau,
}

impl TableauPair {
    pub fn shape(&self) -> Vec<usize> {
        self.p.shape()
    }
}

/// Robinson–Schensted row insertion of the string `x_1 ... x_n`.
pub fn rsk(x: &CoxeterElement) -> Result<TableauPair> {
    if x.family() != Family::A {
        return Err(Error::NotTypeA);
    }
    let mut p: Vec<Vec<u8>> = Vec::new();
    let mut q: Vec<Vec<u8>> = Vec::new();
    for (step, &value) in x.images().iter().enumerate() {
        let mut bumped = value as u8;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(alloc::vec![bumped]);
                q.push(alloc::vec![step as u8 + 1]);
                break;
            }
            match p[row].iter().position(|&e| e > bumped) {
                Some(pos) => {
                    core::mem::swap(&mut p[row][pos], &mut bumped);
                    row += 1;
                }
                None => {
                    p[row].push(bumped);
                    q[row].push(step as u8 + 1);
                    break;
                }
            }
        }
    }
    Ok(TableauPair { p: Tableau { rows: p }, q: Tableau { rows: q } })
}
