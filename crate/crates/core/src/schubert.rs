//! Slices to Schubert cells in type A flag varieties.
//!
//! Matrices follow `x(e_i) = e_{x_i}`: the permutation matrix of `x` has its
//! ones at `(x_j, j)`. The chart `x U_-` around `x B` has `g_{x_j, j} = 1` and
//! `g_{x_j, k} = 0` for `k > j`; the normal slice `N_x` additionally has
//! `g_{i,j} = 0` for `i < x_j`. The preimage of `Z_y` is cut out by
//! `rank g[a.., ..b] <= #{j <= b : y_j >= a}`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coxeter::{digit_char, CoxeterElement, Family};
use crate::linalg::{evaluate, rank_locus_differentials, subsets, GridEntry, QMatrix};
use crate::{Error, Result};

mod embed;
mod ks;
mod reduce;

pub use embed::{
    block_layout, ks_to_slice, ks_to_slice_with, perturb, slice_blocks, verify_embedding, BlockLayout, KsTarget,
    VerificationReport,
};
pub use ks::{ks_draw, ks_jacobian, ks_member, ks_sample, ks_tangent_dim, KsDraw, KsPoint, Mat2};
pub use reduce::{reduce_check, reduce_check_with, ReduceKind, ReduceOutcome};

/// `#{ j <= b : y_j >= a }`, the rank of the south-west corner of `y` below
/// row `a` and left of column `b` (1-based).
pub fn rank_profile(y: &CoxeterElement, a: usize, b: usize) -> Result<usize> {
    let n = y.degree();
    if y.family() != Family::A {
        return Err(Error::NotTypeA);
    }
    if a == 0 || b == 0 || a > n || b > n {
        return Err(Error::ConditionOutOfRange { a, b, n });
    }
    Ok(y.images()[..b].iter().filter(|&&v| v as usize >= a).count())
}

/// An entry of a slice chart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChartEntry {
    Zero,
    One,
    Var(usize),
}

/// The normal slice `N_x` as an `n x n` grid of constants and variables,
/// variables numbered column by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceChart {
    x: CoxeterElement,
    grid: Vec<Vec<ChartEntry>>,
    positions: Vec<(usize, usize)>,
}

impl SliceChart {
    pub fn new(x: &CoxeterElement) -> Result<Self> {
        if x.family() != Family::A {
            return Err(Error::NotTypeA);
        }
        let n = x.degree();
        let img: Vec<usize> = x.images().iter().map(|&v| v as usize).collect();
        let mut grid = alloc::vec![alloc::vec![ChartEntry::Zero; n]; n];
        let mut positions = Vec::new();
        for j in 0..n {
            for i in 1..=n {
                let entry = if i == img[j] {
                    ChartEntry::One
                } else if i < img[j] || img[..j].contains(&i) {
                    ChartEntry::Zero
                } else {
                    positions.push((i, j + 1));
                    ChartEntry::Var(positions.len() - 1)
                };
                grid[i - 1][j] = entry;
            }
        }
        Ok(Self { x: x.clone(), grid, positions })
    }

    pub fn x(&self) -> &CoxeterElement {
        &self.x
    }

    pub fn n(&self) -> usize {
        self.grid.len()
    }

    pub fn num_vars(&self) -> usize {
        self.positions.len()
    }

    /// 0-based grid access.
    pub fn entry(&self, i: usize, j: usize) -> ChartEntry {
        self.grid[i][j]
    }

    /// 1-based `(row, column)` of a variable.
    pub fn position(&self, var: usize) -> (usize, usize) {
        self.positions[var]
    }

    /// Variable at a 1-based position, if any.
    pub fn var_at(&self, i: usize, j: usize) -> Option<usize> {
        match self.grid.get(i.wrapping_sub(1))?.get(j.wrapping_sub(1))? {
            ChartEntry::Var(v) => Some(*v),
            _ => None,
        }
    }

    /// `g` followed by the row and column digits, e.g. `g31`.
    pub fn var_name(&self, var: usize) -> String {
        let (i, j) = self.positions[var];
        alloc::format!("g{}{}", digit_char(i), digit_char(j))
    }

    pub fn linear_grid(&self) -> Vec<Vec<GridEntry>> {
        self.grid
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| match e {
                        ChartEntry::Zero => GridEntry::int(0),
                        ChartEntry::One => GridEntry::int(1),
                        ChartEntry::Var(v) => GridEntry::Var(*v),
                    })
                    .collect()
            })
            .collect()
    }

    fn corner_grid(&self, a: usize, b: usize) -> Vec<Vec<GridEntry>> {
        self.linear_grid()[a - 1..].iter().map(|r| r[..b].to_vec()).collect()
    }

    pub fn evaluate(&self, point: &[BigRational]) -> Result<QMatrix> {
        self.check_point(point)?;
        evaluate(&self.linear_grid(), point)
    }

    fn check_point(&self, point: &[BigRational]) -> Result<()> {
        if point.len() != self.num_vars() {
            return Err(Error::MissingAssignment { expected: self.num_vars(), got: point.len() });
        }
        Ok(())
    }
}

pub fn slice_chart(x: &CoxeterElement) -> Result<SliceChart> {
    SliceChart::new(x)
}

/// `rank g[a..=n, 1..=b] <= bound` (1-based corner).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankCondition {
    pub a: usize,
    pub b: usize,
    pub bound: usize,
}

impl RankCondition {
    /// Whether the condition holds for every matrix of the corner's size.
    pub fn is_vacuous(&self, n: usize) -> bool {
        self.bound >= (n + 1 - self.a).min(self.b)
    }
}

impl fmt::Display for RankCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank(rows {}.., cols ..{}) <= {}", self.a, self.b, self.bound)
    }
}

/// All `n^2` conditions, or with `prune` only the essential ones: the
/// south-east corners of the diagram of `y` read in the flipped orientation
/// where rows are counted from the bottom.
pub fn rank_conditions(y: &CoxeterElement, prune: bool) -> Result<Vec<RankCondition>> {
    if y.family() != Family::A {
        return Err(Error::NotTypeA);
    }
    let n = y.degree();
    let mut out = Vec::new();
    if !prune {
        for a in 1..=n {
            for b in 1..=n {
                out.push(RankCondition { a, b, bound: rank_profile(y, a, b)? });
            }
        }
        return Ok(out);
    }
    // Flip rows: w(p) = y^-1(n + 1 - p). The diagram is
    // D(w) = {(p, q) : w(p) > q, w^-1(q) > p}.
    let yinv = y.inverse();
    let w = |p: usize| yinv.images()[n - p] as usize;
    let winv = |q: usize| n + 1 - y.images()[q - 1] as usize;
    let in_diagram = |p: usize, q: usize| p <= n && q <= n && w(p) > q && winv(q) > p;
    for p in 1..=n {
        for q in 1..=n {
            if in_diagram(p, q) && !in_diagram(p + 1, q) && !in_diagram(p, q + 1) {
                let a = n + 1 - p;
                out.push(RankCondition { a, b: q, bound: rank_profile(y, a, q)? });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Whether the point of the chart satisfies every condition.
pub fn in_slice_schubert(chart: &SliceChart, conditions: &[RankCondition], point: &[BigRational]) -> Result<bool> {
    let m = chart.evaluate(point)?;
    let n = chart.n();
    for c in conditions {
        if c.a == 0 || c.b == 0 || c.a > n || c.b > n {
            return Err(Error::ConditionOutOfRange { a: c.a, b: c.b, n });
        }
        let rows: Vec<usize> = (c.a - 1..n).collect();
        let cols: Vec<usize> = (0..c.b).collect();
        if m.select(&rows, &cols).rank() > c.bound {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension of the Zariski tangent space at `point` of the scheme cut out by
/// the `(bound + 1)`-minors of every condition, intersected with the chart.
pub fn slice_tangent_dim(chart: &SliceChart, conditions: &[RankCondition], point: &[BigRational]) -> Result<usize> {
    chart.check_point(point)?;
    let mut rows = Vec::new();
    for c in conditions {
        rows.extend(rank_locus_differentials(&chart.corner_grid(c.a, c.b), point, c.bound)?);
    }
    if rows.is_empty() {
        return Ok(chart.num_vars());
    }
    Ok(QMatrix::from_rows(rows).kernel_dim())
}

/// A minor as an integer polynomial in the chart variables; monomials are
/// sorted variable lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicMinor {
    /// 1-based rows and columns of the minor.
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub terms: BTreeMap<Vec<usize>, BigInt>,
}

impl SymbolicMinor {
    pub fn to_text(&self, chart: &SliceChart) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut s = String::new();
        // Higher degree first, then variable order.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(b.0)));
        for (k, (mono, c)) in terms.into_iter().enumerate() {
            let neg = c < &BigInt::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let mut vars = mono.clone();
            vars.sort_by_key(|&v| chart.position(v));
            let names: Vec<String> = vars.iter().map(|&v| chart.var_name(v)).collect();
            if mono.is_empty() || !mag.is_one() {
                s.push_str(&alloc::format!("{mag}"));
                if !mono.is_empty() {
                    s.push('*');
                }
            }
            s.push_str(&names.join("*"));
        }
        s
    }
}

fn symbolic_det(grid: &[Vec<ChartEntry>], rows: &[usize], cols: &[usize]) -> BTreeMap<Vec<usize>, BigInt> {
    let mut out = BTreeMap::new();
    if rows.is_empty() {
        out.insert(Vec::new(), BigInt::one());
        return out;
    }
    for (p, &j) in cols.iter().enumerate() {
        let var = match grid[rows[0]][j] {
            ChartEntry::Zero => continue,
            ChartEntry::One => None,
            ChartEntry::Var(v) => Some(v),
        };
        let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != j).collect();
        let sign = if p % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        for (mut mono, c) in symbolic_det(grid, &rows[1..], &rest) {
            if let Some(v) = var {
                mono.push(v);
                mono.sort_unstable();
            }
            let slot = out.entry(mono).or_insert_with(BigInt::zero);
            *slot += c * &sign;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The nonzero `(bound + 1)`-minors of a condition as polynomials, or `None`
/// when the minors are larger than `max_size`.
pub fn symbolic_minors(chart: &SliceChart, cond: &RankCondition, max_size: usize) -> Option<Vec<SymbolicMinor>> {
    let n = chart.n();
    let k = cond.bound + 1;
    if k > max_size {
        return None;
    }
    let row_pool: Vec<usize> = (cond.a - 1..n).collect();
    if k > row_pool.len() || k > cond.b {
        return Some(Vec::new());
    }
    let mut out = Vec::new();
    for rs in subsets(row_pool.len(), k) {
        let rows: Vec<usize> = rs.iter().map(|&i| row_pool[i]).collect();
        for cols in subsets(cond.b, k) {
            let terms = symbolic_det(&chart.grid, &rows, &cols);
            if !terms.is_empty() {
                out.push(SymbolicMinor {
                    rows: rows.iter().map(|r| r + 1).collect(),
                    cols: cols.iter().map(|c| c + 1).collect(),
                    terms,
                });
            }
        }
    }
    Some(out)
}

/// `1` as an exact rational; convenience for building points.
pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
