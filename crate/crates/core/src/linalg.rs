//! Exact dense linear algebra over the rationals.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// A dense matrix of reduced fractions, stored row by row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self { rows: rows.len(), cols, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigRational) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// The submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_rows(rows.iter().map(|&i| cols.iter().map(|&j| self.get(i, j).clone()).collect()).collect())
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch);
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Rows scaled to integers (each row by the lcm of its denominators).
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect()
    }

    /// Rank by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        bareiss(self.integer_rows(), self.cols).0
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Result<BigRational> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch);
        }
        let scale = (0..self.rows).fold(BigInt::one(), |acc, i| {
            acc * self.row(i).iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()))
        });
        let (rank, det) = bareiss(self.integer_rows(), self.cols);
        if rank < self.rows {
            return Ok(BigRational::zero());
        }
        Ok(BigRational::new(det, scale))
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                m.entries.swap(r * m.cols + j, p * m.cols + j);
            }
            let inv = m.get(r, c).recip();
            for j in 0..m.cols {
                let idx = r * m.cols + j;
                m.entries[idx] = &m.entries[idx] * &inv;
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in 0..m.cols {
                    let delta = &f * m.get(r, j);
                    let idx = i * m.cols + j;
                    m.entries[idx] -= delta;
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    /// A basis of `{x : M x = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![BigRational::zero(); self.cols];
                x[f] = BigRational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    x[p] = -m.get(r, f).clone();
                }
                x
            })
            .collect()
    }
}

/// Bareiss elimination on integer rows; returns the rank and, for a full-rank
/// square input, its determinant.
fn bareiss(mut m: Vec<Vec<BigInt>>, cols: usize) -> (usize, BigInt) {
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = t / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    (r, sign * prev)
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
        }
        f.write_str("]")
    }
}

/// An entry of an affine matrix: a constant or a variable (by index).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GridEntry {
    Const(BigRational),
    Var(usize),
}

impl GridEntry {
    pub fn int(x: i64) -> Self {
        GridEntry::Const(BigRational::from_integer(x.into()))
    }
}

/// Evaluates a grid at `point` (indexed by variable).
pub fn evaluate(grid: &[Vec<GridEntry>], point: &[BigRational]) -> Result<QMatrix> {
    let rows = grid
        .iter()
        .map(|r| {
            r.iter()
                .map(|e| match e {
                    GridEntry::Const(c) => Ok(c.clone()),
                    GridEntry::Var(v) => point.get(*v).cloned().ok_or(Error::MissingAssignment {
                        expected: v + 1,
                        got: point.len(),
                    }),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QMatrix::from_rows(rows))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Gradients of every `k x k` minor of `grid` at `point`, one row per minor
/// (row subsets outer, column subsets inner, both lexicographic), one column
/// per variable. Uses `d minor / d x_{ij} = (-1)^{i+j} * complementary minor`.
pub fn minor_gradients(grid: &[Vec<GridEntry>], point: &[BigRational], k: usize) -> Result<QMatrix> {
    let rows = grid.len();
    let cols = grid.first().map_or(0, Vec::len);
    if k == 0 || k > rows || k > cols {
        return Err(Error::MinorTooLarge { size: k, rows, cols });
    }
    let m = evaluate(grid, point)?;
    let row_sets = subsets(rows, k);
    let col_sets = subsets(cols, k);
    let mut out = QMatrix::zeros(row_sets.len() * col_sets.len(), point.len());
    for (a, rs) in row_sets.iter().enumerate() {
        for (b, cs) in col_sets.iter().enumerate() {
            let out_row = a * col_sets.len() + b;
            for (p, &i) in rs.iter().enumerate() {
                for (q, &j) in cs.iter().enumerate() {
                    let GridEntry::Var(v) = grid[i][j] else {
                        continue;
                    };
                    let rest_r: Vec<usize> = rs.iter().copied().filter(|&x| x != i).collect();
                    let rest_c: Vec<usize> = cs.iter().copied().filter(|&x| x != j).collect();
                    let mut cof = m.select(&rest_r, &rest_c).det()?;
                    if (p + q) % 2 == 1 {
                        cof = -cof;
                    }
                    let idx = out_row * out.cols + v;
                    out.entries[idx] += cof;
                }
            }
        }
    }
    Ok(out)
}

/// Differentials cutting out the locus `rank <= r` at `point`, written as
/// `y^T (dN) x` for `y`, `x` running over bases of the left and right kernels
/// of `N = grid(point)`. When `rank N = r` their span equals the span of the
/// gradients of the `(r+1)`-minors; when `rank N < r` both are zero and no
/// rows are returned.
pub fn rank_locus_differentials(grid: &[Vec<GridEntry>], point: &[BigRational], r: usize) -> Result<Vec<Vec<BigRational>>> {
    let m = evaluate(grid, point)?;
    if m.rank() != r {
        return Ok(Vec::new());
    }
    let right = m.kernel_basis();
    let left = m.transpose().kernel_basis();
    let mut out = Vec::with_capacity(left.len() * right.len());
    for y in &left {
        for x in &right {
            let mut row = vec![BigRational::zero(); point.len()];
            for (i, gi) in grid.iter().enumerate() {
                if y[i].is_zero() {
                    continue;
                }
                for (j, e) in gi.iter().enumerate() {
                    if let GridEntry::Var(v) = e {
                        if !x[j].is_zero() {
                            row[*v] += &y[i] * &x[j];
                        }
                    }
                }
            }
            out.push(row);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;
    use proptest::prelude::*;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn basic_ranks() {
        assert_eq!(QMatrix::identity(2).rank(), 2);
        assert_eq!(QMatrix::from_i64(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(QMatrix::zeros(20, 16).kernel_dim(), 16);
        // Permutation matrix of 4231 (ones at (y_j, j)), rows 3..4, columns 1..2.
        let y = [4, 2, 3, 1];
        let mut p = QMatrix::zeros(4, 4);
        for (j, &yj) in y.iter().enumerate() {
            p.set(yj - 1, j, q(1));
        }
        assert_eq!(p.select(&[2, 3], &[0, 1]).rank(), 1);
    }

    #[test]
    fn determinants() {
        assert_eq!(QMatrix::from_i64(&[&[2, 1], &[7, 4]]).det().unwrap(), q(1));
        assert_eq!(QMatrix::from_i64(&[&[0, 1], &[1, 0]]).det().unwrap(), q(-1));
        let half = QMatrix::from_rows(vec![vec![BigRational::new(1.into(), 2.into()), q(0)], vec![q(0), q(3)]]);
        assert_eq!(half.det().unwrap(), BigRational::new(3.into(), 2.into()));
        assert_eq!(QMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).det().unwrap(), q(0));
        assert!(QMatrix::zeros(2, 3).det().is_err());
    }

    #[test]
    fn kernel_basis_is_kernel() {
        let m = QMatrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), m.kernel_dim());
        for x in ker {
            let col = QMatrix::from_rows(x.into_iter().map(|e| vec![e]).collect());
            assert!(m.mul(&col).unwrap().is_zero());
        }
    }

    fn abcd() -> Vec<Vec<GridEntry>> {
        vec![vec![GridEntry::Var(0), GridEntry::Var(1)], vec![GridEntry::Var(2), GridEntry::Var(3)]]
    }

    #[test]
    fn determinant_gradient() {
        let g = minor_gradients(&abcd(), &[q(0), q(0), q(0), q(0)], 2).unwrap();
        assert_eq!((g.rows(), g.cols()), (1, 4));
        assert!(g.is_zero());
        let g = minor_gradients(&abcd(), &[q(1), q(0), q(0), q(1)], 2).unwrap();
        assert_eq!(g, QMatrix::from_i64(&[&[1, 0, 0, 1]]));
        assert!(minor_gradients(&abcd(), &[q(0), q(0), q(0), q(0)], 3).is_err());
    }

    /// Polynomials in the grid variables: monomial (sorted variable list) -> coefficient.
    type Poly = BTreeMap<Vec<usize>, BigRational>;

    fn poly_mul(a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::new();
        for (ma, ca) in a {
            for (mb, cb) in b {
                let mut m = ma.clone();
                m.extend(mb);
                m.sort_unstable();
                *out.entry(m).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn symbolic_det(grid: &[Vec<GridEntry>], rs: &[usize], cs: &[usize]) -> Poly {
        // Laplace expansion along the first selected row.
        if rs.is_empty() {
            return Poly::from([(Vec::new(), q(1))]);
        }
        let mut out = Poly::new();
        for (p, &j) in cs.iter().enumerate() {
            let entry: Poly = match &grid[rs[0]][j] {
                GridEntry::Const(c) if c.is_zero() => continue,
                GridEntry::Const(c) => Poly::from([(Vec::new(), c.clone())]),
                GridEntry::Var(v) => Poly::from([(vec![*v], q(1))]),
            };
            let rest_c: Vec<usize> = cs.iter().copied().filter(|&x| x != j).collect();
            let sign = if p % 2 == 0 { q(1) } else { q(-1) };
            for (m, c) in poly_mul(&entry, &symbolic_det(grid, &rs[1..], &rest_c)) {
                *out.entry(m).or_insert_with(BigRational::zero) += c * &sign;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn derivative_at(p: &Poly, var: usize, point: &[BigRational]) -> BigRational {
        let mut total = BigRational::zero();
        for (m, c) in p {
            let count = m.iter().filter(|&&x| x == var).count();
            if count == 0 {
                continue;
            }
            let mut term = c * q(count as i64);
            let mut removed = false;
            for &x in m {
                if x == var && !removed {
                    removed = true;
                    continue;
                }
                term *= &point[x];
            }
            total += term;
        }
        total
    }

    fn oracle(grid: &[Vec<GridEntry>], point: &[BigRational], k: usize) -> QMatrix {
        let (rows, cols) = (grid.len(), grid[0].len());
        let mut out = Vec::new();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let p = symbolic_det(grid, &rs, &cs);
                out.push((0..point.len()).map(|v| derivative_at(&p, v, point)).collect());
            }
        }
        QMatrix::from_rows(out)
    }

    fn grid_strategy() -> impl Strategy<Value = (Vec<Vec<GridEntry>>, Vec<BigRational>, usize)> {
        (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
            (
                proptest::collection::vec(proptest::option::of(-3i64..=3), r * c),
                proptest::collection::vec(-4i64..=4, r * c),
                1..=r.min(c),
            )
                .prop_map(move |(cells, vals, k)| {
                    let mut next = 0;
                    let grid = (0..r)
                        .map(|i| {
                            (0..c)
                                .map(|j| match cells[i * c + j] {
                                    Some(x) => GridEntry::int(x),
                                    None => {
                                        next += 1;
                                        GridEntry::Var(next - 1)
                                    }
                                })
                                .collect()
                        })
                        .collect();
                    let point = vals[..next].iter().map(|&x| q(x)).collect();
                    (grid, point, k)
                })
        })
    }

    fn random_matrix() -> impl Strategy<Value = QMatrix> {
        (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
            proptest::collection::vec((-3i64..=3, 1i64..=3), r * c).prop_map(move |v| {
                QMatrix::from_rows(
                    v.chunks(c).map(|row| row.iter().map(|&(n, d)| BigRational::new(n.into(), d.into())).collect()).collect(),
                )
            })
        })
    }

    #[test]
    fn three_by_three_all_variables() {
        let grid: Vec<Vec<GridEntry>> = (0..3).map(|i| (0..3).map(|j| GridEntry::Var(3 * i + j)).collect()).collect();
        let point: Vec<BigRational> = [2, -1, 5, 0, 3, 7, -2, 4, 1].iter().map(|&x| q(x)).collect();
        assert_eq!(minor_gradients(&grid, &point, 2).unwrap(), oracle(&grid, &point, 2));
    }

    proptest! {
        #[test]
        fn gradients_match_symbolic_oracle((grid, point, k) in grid_strategy()) {
            prop_assert_eq!(minor_gradients(&grid, &point, k).unwrap(), oracle(&grid, &point, k));
        }

        #[test]
        fn rank_of_transpose(m in random_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
            prop_assert_eq!(m.kernel_dim() + m.rank(), m.cols());
            prop_assert_eq!(m.rank(), m.rref().1.len());
        }

        #[test]
        fn det_matches_oracle((grid, point, _k) in grid_strategy()) {
            let m = evaluate(&grid, &point).unwrap();
            let n = m.rows().min(m.cols());
            let idx: Vec<usize> = (0..n).collect();
            let sub = m.select(&idx, &idx);
            let sym = symbolic_det(&grid, &idx, &idx);
            let value: BigRational = sym
                .iter()
                .map(|(mon, c)| mon.iter().fold(c.clone(), |acc, &v| acc * &point[v]))
                .sum();
            prop_assert_eq!(sub.det().unwrap(), value);
        }

        #[test]
        fn kernel_differentials_span_minor_gradients((grid, point, _k) in grid_strategy()) {
            let m = evaluate(&grid, &point).unwrap();
            let r = m.rank();
            if r < m.rows().min(m.cols()) && !point.is_empty() {
                let minors = minor_gradients(&grid, &point, r + 1).unwrap();
                let kernel = QMatrix::from_rows(rank_locus_differentials(&grid, &point, r).unwrap());
                let stacked = QMatrix::from_rows(
                    (0..minors.rows()).map(|i| minors.row(i).to_vec())
                        .chain((0..kernel.rows()).map(|i| kernel.row(i).to_vec()))
                        .collect(),
                );
                prop_assert_eq!(minors.rank(), kernel.rank());
                prop_assert_eq!(stacked.rank(), kernel.rank());
            }
        }
    }
}
