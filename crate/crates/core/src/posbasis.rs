//! Search for positive bases of cell modules.
//!
//! A candidate basis `M'_y = M_y + sum_{x < y} m_{x,y} M_x` is kept when every
//! `m_{x,y}` is self-dual with nonnegative coefficients, is supported on pairs
//! with `x < y` in the Bruhat order and `L(x) ⊇ L(y)`, `R(x) ⊇ R(y)`, and the
//! generators `C_s` act on `{M'_y}` with self-dual nonnegative coefficients.
//! Only generators are tested; the full positivity condition would need the
//! unknown `p`-canonical basis, which agrees with the KL basis on generators.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::cells::{cell_module, cells, partition_longest_element, rsk, CellKind, CellModule};
use crate::coxeter::{CoxeterElement, CoxeterSystem, Family, Side};
use crate::hecke::KlCache;
use crate::laurent::LaurentPoly;
use crate::Result;

/// Bounds for the enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest `i` with `v^i + v^-i` allowed in `m_{x,y}`; `None` means
    /// `l(y) - l(x) - 1` for each pair.
    pub max_degree: Option<u32>,
    /// Largest coefficient of each `v^i + v^-i` (and of the constant term).
    pub max_coeff: u32,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self { max_degree: None, max_coeff: 3 }
    }
}

/// A unitriangular change of basis on a cell, indexed by positions in `cell`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateBasis {
    pub cell: Vec<CoxeterElement>,
    /// `(i, j) -> m_{cell[i], cell[j]}` for `i < j`, nonzero entries only.
    pub coeffs: BTreeMap<(usize, usize), LaurentPoly>,
}

impl CandidateBasis {
    pub fn trivial(cell: &[CoxeterElement]) -> Self {
        Self { cell: cell.to_vec(), coeffs: BTreeMap::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> LaurentPoly {
        if i == j {
            return LaurentPoly::one();
        }
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Support, positivity, Bruhat and descent conditions on the `m_{x,y}`.
    pub fn is_well_formed(&self) -> bool {
        self.coeffs.iter().all(|(&(i, j), m)| {
            i < j && j < self.cell.len() && !m.is_zero() && m.is_selfdual_nonneg() && pair_allowed(&self.cell[i], &self.cell[j])
        })
    }

    fn matrix(&self) -> Vec<Vec<LaurentPoly>> {
        let n = self.cell.len();
        let mut u = vec![vec![LaurentPoly::zero(); n]; n];
        for (i, row) in u.iter_mut().enumerate() {
            row[i] = LaurentPoly::one();
        }
        for (&(i, j), m) in &self.coeffs {
            u[i][j] = m.clone();
        }
        u
    }
}

fn superset(a: u64, b: u64) -> bool {
    a & b == b
}

/// Whether `m_{x,y}` may be nonzero.
fn pair_allowed(x: &CoxeterElement, y: &CoxeterElement) -> bool {
    x != y
        && x.bruhat_leq(y).unwrap_or(false)
        && superset(x.descent_mask(Side::Left), y.descent_mask(Side::Left))
        && superset(x.descent_mask(Side::Right), y.descent_mask(Side::Right))
}

type Matrix = Vec<Vec<LaurentPoly>>;

fn mat_mul(a: &[Vec<LaurentPoly>], b: &[Vec<LaurentPoly>], k: usize) -> Matrix {
    let mut c = vec![vec![LaurentPoly::zero(); k]; k];
    for i in 0..k {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..k {
                if !b[l][j].is_zero() {
                    c[i][j] += &(&a[i][l] * &b[l][j]);
                }
            }
        }
    }
    c
}

/// Inverse of the leading `k x k` block of a unitriangular upper matrix.
fn unitriangular_inverse(u: &[Vec<LaurentPoly>], k: usize) -> Matrix {
    let mut inv = vec![vec![LaurentPoly::zero(); k]; k];
    for j in 0..k {
        inv[j][j] = LaurentPoly::one();
        for i in (0..j).rev() {
            let mut acc = LaurentPoly::zero();
            for l in i + 1..=j {
                if !u[i][l].is_zero() && !inv[l][j].is_zero() {
                    acc += &(&u[i][l] * &inv[l][j]);
                }
            }
            inv[i][j] = -acc;
        }
    }
    inv
}

/// `U^-1 A_s U` for every generator, all entries self-dual and nonnegative.
fn transformed_positive(u: &[Vec<LaurentPoly>], module: &CellModule) -> bool {
    let n = u.len();
    let inv = unitriangular_inverse(u, n);
    module.action.iter().all(|a| {
        let b = mat_mul(&inv, &mat_mul(a, u, n), n);
        b.iter().flatten().all(LaurentPoly::is_selfdual_nonneg)
    })
}

/// Condition (2) for the generators: every `C_s M'_y` expands in `{M'_x}` with
/// self-dual nonnegative coefficients. Also requires `basis` to be well formed
/// and indexed like `module`.
pub fn admissible(basis: &CandidateBasis, module: &CellModule) -> bool {
    basis.cell == module.basis && basis.is_well_formed() && transformed_positive(&basis.matrix(), module)
}

/// `v^d + v^-d`, or `1` for `d = 0`.
fn sym_monomial(d: u32) -> LaurentPoly {
    if d == 0 {
        LaurentPoly::one()
    } else {
        LaurentPoly::from_pairs([(d as i32, 1), (-(d as i32), 1)])
    }
}

fn small(c: &num_bigint::BigInt) -> i64 {
    i64::try_from(c).expect("coefficient fits in i64")
}

/// An affine form `k0 + sum g_k a_k` in the integer unknowns of one column.
struct Form {
    k0: i64,
    g: Vec<i64>,
    /// `true`: must vanish; `false`: must be nonnegative.
    equality: bool,
}

/// Exhaustive search over the unknowns of one column, with `a_k` in
/// `0..=max`, keeping assignments that satisfy every form.
fn solve_forms(forms: &[Form], vars: usize, max: i64) -> Vec<Vec<i64>> {
    // rest[f][k]: (min, max) of sum_{k' >= k} g_k' a_k' for form f.
    let rest: Vec<Vec<(i64, i64)>> = forms
        .iter()
        .map(|f| {
            let mut r = vec![(0, 0); vars + 1];
            for k in (0..vars).rev() {
                let t = f.g[k] * max;
                r[k] = (r[k + 1].0 + t.min(0), r[k + 1].1 + t.max(0));
            }
            r
        })
        .collect();
    let feasible = |vals: &[i64], k: usize| {
        forms.iter().zip(vals).zip(&rest).all(|((f, &val), r)| {
            let (lo, hi) = r[k];
            if f.equality {
                val + lo <= 0 && 0 <= val + hi
            } else {
                val + hi >= 0
            }
        })
    };
    let mut out = Vec::new();
    let mut vals: Vec<i64> = forms.iter().map(|f| f.k0).collect();
    let mut a = vec![0; vars];
    fn rec(
        k: usize,
        forms: &[Form],
        max: i64,
        a: &mut Vec<i64>,
        vals: &mut Vec<i64>,
        feasible: &dyn Fn(&[i64], usize) -> bool,
        out: &mut Vec<Vec<i64>>,
    ) {
        if !feasible(vals, k) {
            return;
        }
        if k == a.len() {
            out.push(a.clone());
            return;
        }
        for x in 0..=max {
            a[k] = x;
            for (f, val) in forms.iter().zip(vals.iter_mut()) {
                *val += f.g[k] * x;
            }
            rec(k + 1, forms, max, a, vals, feasible, out);
            for (f, val) in forms.iter().zip(vals.iter_mut()) {
                *val -= f.g[k] * x;
            }
        }
        a[k] = 0;
    }
    rec(0, forms, max, &mut a, &mut vals, &feasible, &mut out);
    out
}

/// Free entries of one column: `(row, degree bound)`.
type ColumnSlots = Vec<(usize, u32)>;

/// All admissible bases within `cfg`, trivial basis first.
///
/// Columns are filled from the last cell element down. With columns `>= j`
/// fixed, the trailing block `(U^-1 A_s U)[j.., j..]` is determined, and its
/// new entries are affine in the integer coordinates of column `j` with
/// respect to `1, v + v^-1, v^2 + v^-2, ...`. Positivity and self-duality of
/// those entries are then linear constraints, pruned coordinate by coordinate.
pub fn enumerate_bases(module: &CellModule, cfg: &SearchConfig) -> Vec<CandidateBasis> {
    let cell = &module.basis;
    let n = cell.len();
    let slots: Vec<ColumnSlots> = (0..n)
        .map(|j| {
            (0..j)
                .filter(|&i| pair_allowed(&cell[i], &cell[j]))
                .map(|i| {
                    let gap = cell[j].length() - cell[i].length();
                    (i, cfg.max_degree.unwrap_or(gap.saturating_sub(1) as u32))
                })
                .collect()
        })
        .collect();
    let mut u = CandidateBasis::trivial(cell).matrix();
    let mut found = Vec::new();
    if n > 0 {
        search_column(n - 1, &slots, cfg.max_coeff as i64, &mut u, module, &mut found);
    }
    found
        .into_iter()
        .map(|u| {
            let mut coeffs = BTreeMap::new();
            for (i, row) in u.iter().enumerate() {
                for (j, p) in row.iter().enumerate().skip(i + 1) {
                    if !p.is_zero() {
                        coeffs.insert((i, j), p.clone());
                    }
                }
            }
            let basis = CandidateBasis { cell: cell.clone(), coeffs };
            debug_assert!(basis.is_well_formed());
            basis
        })
        .collect()
}

/// `U^-1 A_s U` for every generator.
fn transform_all(u: &[Vec<LaurentPoly>], module: &CellModule) -> Vec<Matrix> {
    let n = u.len();
    let inv = unitriangular_inverse(u, n);
    module.action.iter().map(|a| mat_mul(&inv, &mat_mul(a, u, n), n)).collect()
}

/// Entry `(i, c)` of `U^-1 A U` depends on the rows `>= i` of `U` and on
/// column `c`, hence on the columns `> i` and column `c`.
fn determined(i: usize, c: usize, assigned: &dyn Fn(usize) -> bool, n: usize) -> bool {
    assigned(c) && (i + 1..n).all(assigned)
}

fn search_column(
    j: usize,
    slots: &[ColumnSlots],
    max: i64,
    u: &mut Matrix,
    module: &CellModule,
    out: &mut Vec<Matrix>,
) {
    let n = u.len();
    let before = |q: usize| q > j || slots[q].is_empty();
    let after = |q: usize| q >= j || slots[q].is_empty();
    let first = j + 1 == n;
    // Entries fixed by this column; those in column j above row j are
    // quadratic in the unknowns and are checked on each solution instead.
    let mut linear = Vec::new();
    let mut quadratic = Vec::new();
    for i in 0..n {
        for c in 0..n {
            if determined(i, c, &after, n) && (first || !determined(i, c, &before, n)) {
                if c == j && i < j {
                    quadratic.push((i, c));
                } else {
                    linear.push((i, c));
                }
            }
        }
    }
    // Unknowns: one per (slot, degree), in slot order then degree order.
    let vars: Vec<(usize, u32)> = slots[j].iter().flat_map(|&(i, d)| (0..=d).map(move |e| (i, e))).collect();
    let base = transform_all(u, module);
    let dirs: Vec<Vec<Matrix>> = vars
        .iter()
        .map(|&(i, d)| {
            u[i][j] = sym_monomial(d);
            let b = transform_all(u, module);
            u[i][j] = LaurentPoly::zero();
            b.iter()
                .zip(&base)
                .map(|(x, y)| {
                    x.iter().zip(y).map(|(rx, ry)| rx.iter().zip(ry).map(|(p, q)| p - q).collect()).collect()
                })
                .collect()
        })
        .collect();

    let mut forms = Vec::new();
    for g in 0..base.len() {
        for &(r, c) in &linear {
            let b0 = &base[g][r][c];
            let mut exps: Vec<i32> = b0.terms().map(|(e, _)| e).collect();
            for d in &dirs {
                exps.extend(d[g][r][c].terms().map(|(e, _)| e));
            }
            exps.extend(exps.clone().into_iter().map(|e| -e));
            exps.sort_unstable();
            exps.dedup();
            let form_at = |e: i32| Form {
                k0: small(&b0.coeff(e)),
                g: dirs.iter().map(|d| small(&d[g][r][c].coeff(e))).collect(),
                equality: false,
            };
            for &e in &exps {
                forms.push(form_at(e));
                if e > 0 {
                    let (p, q) = (form_at(e), form_at(-e));
                    forms.push(Form {
                        k0: p.k0 - q.k0,
                        g: p.g.iter().zip(&q.g).map(|(x, y)| x - y).collect(),
                        equality: true,
                    });
                }
            }
        }
    }
    for sol in solve_forms(&forms, vars.len(), max) {
        for &(i, _) in &slots[j] {
            u[i][j] = LaurentPoly::zero();
        }
        for (&(i, d), &x) in vars.iter().zip(&sol) {
            if x > 0 {
                u[i][j] += &(&sym_monomial(d) * &LaurentPoly::constant(x));
            }
        }
        if !quadratic.is_empty() {
            let b = transform_all(u, module);
            if !b.iter().all(|m| quadratic.iter().all(|&(r, c)| m[r][c].is_selfdual_nonneg())) {
                continue;
            }
        }
        if j == 0 {
            out.push(u.clone());
        } else {
            search_column(j - 1, slots, max, u, module, out);
        }
    }
    for &(i, _) in &slots[j] {
        u[i][j] = LaurentPoly::zero();
    }
}

/// Search results for one left cell.
#[derive(Clone, Debug)]
pub struct CellReport {
    /// Index of the two-sided cell, in order of first element.
    pub two_sided: usize,
    /// Partition `lambda` in type A (the transpose of the RSK shape).
    pub partition: Option<Vec<usize>>,
    /// Type A: the cell contains the longest element of `W_lambda`.
    pub contains_w_lambda: bool,
    pub cell: Vec<CoxeterElement>,
    pub count: usize,
    /// Nontrivial bases as lists of `(x, y, m_{x,y})`.
    pub patterns: Vec<Vec<(CoxeterElement, CoxeterElement, LaurentPoly)>>,
    /// Pairs with some nonzero `m_{x,y}` where `x` and `y` share a right cell.
    pub same_right_cell_pairs: Vec<(CoxeterElement, CoxeterElement)>,
}

impl CellReport {
    pub fn label(&self) -> String {
        match &self.partition {
            Some(p) => p.iter().map(|k| alloc::format!("{k}")).collect::<Vec<_>>().join(","),
            None => alloc::format!("{}", self.cell[0]),
        }
    }
}

pub fn transpose_partition(shape: &[usize]) -> Vec<usize> {
    let width = shape.first().copied().unwrap_or(0);
    (0..width).map(|c| shape.iter().filter(|&&r| r > c).count()).collect()
}

/// Runs [`enumerate_bases`] on every left cell of `system`.
pub fn report_candidates(system: CoxeterSystem, cfg: &SearchConfig) -> Result<Vec<CellReport>> {
    let mut cache = KlCache::new(system)?;
    let left = cells(&mut cache, CellKind::Left);
    let right = cells(&mut cache, CellKind::Right);
    let two = cells(&mut cache, CellKind::TwoSided);
    let mut reports = Vec::new();
    for idx in left.cells() {
        let cell: Vec<CoxeterElement> = idx.iter().map(|&i| cache.group().element(i).clone()).collect();
        let module = cell_module(&cell, &mut cache)?;
        let bases = enumerate_bases(&module, cfg);
        let (partition, contains_w_lambda) = match system.family() {
            Family::A => {
                let lambda = transpose_partition(&rsk(&cell[0])?.shape());
                let w = partition_longest_element(&lambda)?;
                (Some(lambda), cell.contains(&w))
            }
            Family::B => (None, false),
        };
        let mut patterns = Vec::new();
        let mut flagged = Vec::new();
        for b in bases.iter().filter(|b| !b.is_trivial()) {
            let mut pat = Vec::new();
            for (&(i, j), m) in &b.coeffs {
                pat.push((cell[i].clone(), cell[j].clone(), m.clone()));
                if right.same_cell(idx[i], idx[j]) && !flagged.contains(&(cell[i].clone(), cell[j].clone())) {
                    flagged.push((cell[i].clone(), cell[j].clone()));
                }
            }
            patterns.push(pat);
        }
        reports.push(CellReport {
            two_sided: two.cell_of(idx[0]),
            partition,
            contains_w_lambda,
            cell,
            count: bases.len(),
            patterns,
            same_right_cell_pairs: flagged,
        });
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::cell_of_partition;
    use alloc::string::ToString;

    fn b2_module() -> (CoxeterSystem, CellModule) {
        let b2 = CoxeterSystem::type_b(2).unwrap();
        let mut cache = KlCache::new(b2).unwrap();
        let cell: Vec<_> = [&[0][..], &[1, 0], &[0, 1, 0]].iter().map(|w| b2.word_to_elt(w).unwrap()).collect();
        (b2, cell_module(&cell, &mut cache).unwrap())
    }

    fn with_m(module: &CellModule, m: i64) -> CandidateBasis {
        let mut b = CandidateBasis::trivial(&module.basis);
        b.coeffs.insert((0, 2), LaurentPoly::constant(m));
        b
    }

    #[test]
    fn b2_example() {
        let (_, module) = b2_module();
        assert!(admissible(&CandidateBasis::trivial(&module.basis), &module));
        assert!(admissible(&with_m(&module, 1), &module));
        assert!(!admissible(&with_m(&module, 2), &module));
        let bases = enumerate_bases(&module, &SearchConfig { max_degree: Some(2), max_coeff: 3 });
        assert_eq!(bases.len(), 2);
        assert!(bases[0].is_trivial());
        assert_eq!(bases[1], with_m(&module, 1));
    }

    #[test]
    fn b2_count_stable_in_degree() {
        let (_, module) = b2_module();
        for d in [2, 4, 8] {
            let cfg = SearchConfig { max_degree: Some(d), max_coeff: 3 };
            assert_eq!(enumerate_bases(&module, &cfg).len(), 2, "degree {d}");
        }
    }

    /// Self-dual nonnegative polynomials with coefficients in `0..=max`.
    fn candidate_polys(degree: u32, max: u32) -> Vec<LaurentPoly> {
        let mut out = vec![LaurentPoly::zero()];
        for d in 0..=degree {
            out = out
                .iter()
                .flat_map(|p| (0..=max).map(move |c| p + &(&sym_monomial(d) * &LaurentPoly::constant(c))))
                .collect();
        }
        out
    }

    /// Every unitriangular matrix within the bounds, filtered by `admissible`.
    fn brute_force(module: &CellModule, cfg: &SearchConfig) -> Vec<CandidateBasis> {
        let cell = &module.basis;
        let mut slots = Vec::new();
        for j in 0..cell.len() {
            for i in 0..j {
                if pair_allowed(&cell[i], &cell[j]) {
                    let gap = (cell[j].length() - cell[i].length()) as u32;
                    slots.push(((i, j), candidate_polys(cfg.max_degree.unwrap_or(gap - 1), cfg.max_coeff)));
                }
            }
        }
        let mut all = vec![CandidateBasis::trivial(cell)];
        for (key, values) in &slots {
            all = all
                .iter()
                .flat_map(|b| {
                    values.iter().map(move |p| {
                        let mut b = b.clone();
                        if !p.is_zero() {
                            b.coeffs.insert(*key, p.clone());
                        }
                        b
                    })
                })
                .collect();
        }
        all.into_iter().filter(|b| admissible(b, module)).collect()
    }

    #[test]
    fn search_matches_brute_force() {
        let cfgs = [SearchConfig::default(), SearchConfig { max_degree: Some(1), max_coeff: 2 }];
        for sys in [CoxeterSystem::type_a(4).unwrap(), CoxeterSystem::type_b(2).unwrap(), CoxeterSystem::type_b(3).unwrap()] {
            let mut cache = KlCache::new(sys).unwrap();
            for cell in cells(&mut cache, CellKind::Left).elements(&cache) {
                let module = cell_module(&cell, &mut cache).unwrap();
                for cfg in &cfgs {
                    let mut fast = enumerate_bases(&module, cfg);
                    let mut slow = brute_force(&module, cfg);
                    assert!(fast[0].is_trivial());
                    let key = |b: &CandidateBasis| alloc::format!("{:?}", b.coeffs);
                    fast.sort_by_key(key);
                    slow.sort_by_key(key);
                    assert_eq!(fast, slow, "{sys} {:?}", cell);
                }
            }
        }
    }

    #[test]
    fn enumerated_bases_are_well_formed() {
        let s4 = CoxeterSystem::type_a(4).unwrap();
        let mut cache = KlCache::new(s4).unwrap();
        for lambda in crate::cells::partitions(4) {
            let cell = cell_of_partition(&lambda).unwrap();
            let module = cell_module(&cell, &mut cache).unwrap();
            let bases = enumerate_bases(&module, &SearchConfig::default());
            assert!(bases[0].is_trivial());
            assert!(bases.iter().all(|b| b.is_well_formed() && admissible(b, &module)));
        }
    }

    #[test]
    fn s3_cells_are_trivial() {
        let reports = report_candidates(CoxeterSystem::type_a(3).unwrap(), &SearchConfig::default()).unwrap();
        assert_eq!(reports.len(), 4);
        assert!(reports.iter().all(|r| r.count == 1));
    }

    #[test]
    fn b2_report_flags_pair() {
        let reports = report_candidates(CoxeterSystem::type_b(2).unwrap(), &SearchConfig::default()).unwrap();
        let r = reports.iter().find(|r| r.cell.len() == 3 && r.cell[0].to_string() == "-12").unwrap();
        assert_eq!(r.count, 2);
        assert_eq!(r.same_right_cell_pairs.len(), 1);
        assert_eq!(r.same_right_cell_pairs[0].0, r.cell[0]);
        assert_eq!(r.same_right_cell_pairs[0].1, r.cell[2]);
    }

    #[test]
    fn transpose() {
        assert_eq!(transpose_partition(&[3, 1]), vec![2, 1, 1]);
        assert_eq!(transpose_partition(&[2, 2]), vec![2, 2]);
    }
}
