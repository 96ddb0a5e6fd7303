//! The two realisations of the Kashiwara–Saito variety as a slice
//! `N_x ∩ Z_y`, and their sampled verification.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ks::{j2, k2, ks_draw, ks_member, ks_tangent_dim, mul2, neg2, transpose2, KsPoint, Mat2};
use super::{in_slice_schubert, rank_conditions, slice_chart, slice_tangent_dim, ChartEntry, RankCondition, SliceChart};
use crate::catalog;
use crate::coxeter::{parse_perm, CoxeterElement};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KsTarget {
    Gl8,
    Gl12,
}

impl KsTarget {
    pub const ALL: [KsTarget; 2] = [KsTarget::Gl8, KsTarget::Gl12];

    pub fn name(self) -> &'static str {
        match self {
            KsTarget::Gl8 => "gl8",
            KsTarget::Gl12 => "gl12",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.name() == s)
    }

    pub fn n(self) -> usize {
        match self {
            KsTarget::Gl8 => 8,
            KsTarget::Gl12 => 12,
        }
    }

    /// The point of the Schubert cell, `u` resp. `x`.
    pub fn x(self) -> CoxeterElement {
        let key = match self {
            KsTarget::Gl8 => "gl8.u",
            KsTarget::Gl12 => "gl12.x",
        };
        parse_perm(catalog::value(key), self.n()).expect("catalog permutation")
    }

    /// The Schubert variety, `v` resp. `y`.
    pub fn y(self) -> CoxeterElement {
        let key = match self {
            KsTarget::Gl8 => "gl8.v",
            KsTarget::Gl12 => "gl12.y",
        };
        parse_perm(catalog::value(key), self.n()).expect("catalog permutation")
    }

    /// Named 2x2 variable blocks as `(name, block row, block column)`,
    /// 1-based, as in the displayed slice matrices.
    pub fn named_blocks(self) -> &'static [(&'static str, usize, usize)] {
        match self {
            KsTarget::Gl8 => &[("A1", 2, 1), ("A2", 3, 1), ("A0", 4, 1), ("A3", 4, 2), ("A4", 4, 3)],
            KsTarget::Gl12 => &[
                ("A1", 3, 3),
                ("A2", 5, 3),
                ("A3", 6, 4),
                ("A4", 6, 5),
                ("B1", 3, 1),
                ("B2", 4, 1),
                ("B3", 5, 1),
                ("B4", 6, 1),
                ("B5", 5, 2),
                ("B6", 6, 2),
                ("B7", 6, 3),
            ],
        }
    }
}

impl fmt::Display for KsTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The chart of a target cut into 2x2 blocks.
#[derive(Clone, Debug)]
pub struct BlockLayout {
    pub target: KsTarget,
    pub chart: SliceChart,
    /// Blocks whose four entries are all variables, found from the chart,
    /// 1-based `(block row, block column)` in row-major order.
    pub variable_blocks: Vec<(usize, usize)>,
    /// Chart variables of each named block, row by row.
    pub blocks: BTreeMap<&'static str, [[usize; 2]; 2]>,
}

impl BlockLayout {
    pub fn block(&self, name: &str) -> Option<&[[usize; 2]; 2]> {
        self.blocks.get(name)
    }
}

pub fn block_layout(target: KsTarget) -> Result<BlockLayout> {
    let chart = slice_chart(&target.x())?;
    let nb = target.n() / 2;
    let mut variable_blocks = Vec::new();
    for r in 0..nb {
        for c in 0..nb {
            let all_var = (0..2).all(|a| (0..2).all(|b| matches!(chart.entry(2 * r + a, 2 * c + b), ChartEntry::Var(_))));
            if all_var {
                variable_blocks.push((r + 1, c + 1));
            }
        }
    }
    let mut blocks = BTreeMap::new();
    for &(name, r, c) in target.named_blocks() {
        if !variable_blocks.contains(&(r, c)) {
            return Err(Error::LayoutMismatch(r, c));
        }
        let vars = core::array::from_fn(|a| core::array::from_fn(|b| chart.var_at(2 * r - 1 + a, 2 * c - 1 + b).unwrap()));
        blocks.insert(name, vars);
    }
    Ok(BlockLayout { target, chart, variable_blocks, blocks })
}

/// Blocks `A_1..A_4` for a point of the variety. Inverting
/// `M_4 = A_1^T J`, `M_3 = A_2 K`, `M_2 = A_3 J`, `M_1 = A_4^T K` turns the
/// relations `M_i M_{i+1} = 0` into `A_2'A_1' = A_3'A_2' = A_4'A_3' = A_1'A_4' = 0`.
pub fn slice_blocks(p: &KsPoint) -> [Mat2; 4] {
    let (j, k) = (j2(), k2());
    [
        transpose2(&mul2(&p.m[3], &j)),
        neg2(&mul2(&p.m[2], &k)),
        mul2(&p.m[1], &j),
        transpose2(&neg2(&mul2(&p.m[0], &k))),
    ]
}

/// Chart point with the given `A_1..A_4` and every other variable zero.
pub fn ks_to_slice_with(layout: &BlockLayout, a: &[Mat2; 4]) -> Vec<BigRational> {
    let mut point = alloc::vec![BigRational::zero(); layout.chart.num_vars()];
    for (i, name) in ["A1", "A2", "A3", "A4"].into_iter().enumerate() {
        let vars = layout.blocks[name];
        for r in 0..2 {
            for c in 0..2 {
                point[vars[r][c]] = a[i][r][c].clone();
            }
        }
    }
    point
}

pub fn ks_to_slice(p: &KsPoint, layout: &BlockLayout) -> Vec<BigRational> {
    ks_to_slice_with(layout, &slice_blocks(p))
}

/// Adds 1 to one entry of `M_k` chosen so that `det M_k` becomes nonzero.
pub fn perturb(p: &KsPoint, k: usize) -> KsPoint {
    let mut out = p.clone();
    let m = &mut out.m[k % 4];
    let (a, b) = [(0, 0), (0, 1), (1, 0), (1, 1)]
        .into_iter()
        .find(|&(a, b)| !m[1 - a][1 - b].is_zero())
        .unwrap_or((0, 0));
    m[a][b] += BigRational::one();
    out
}

/// What [`verify_embedding`] checked; counts are over samples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub target: KsTarget,
    pub samples: usize,
    pub seed: u64,
    pub variables: usize,
    pub conditions: Vec<RankCondition>,
    pub inclusion_pass: usize,
    pub rejection_pass: usize,
    /// Tangent dimension of `N_x ∩ Z_y` at mapped samples, value -> count.
    pub slice_tangent_dims: BTreeMap<usize, usize>,
    /// Tangent dimension of the variety at the source samples.
    pub ks_tangent_dims: BTreeMap<usize, usize>,
    pub origin_ks_tangent_dim: usize,
    pub origin_slice_tangent_dim: usize,
    pub failures: Vec<String>,
    pub notes: String,
}

impl VerificationReport {
    /// Every sample included, every perturbation rejected and all tangent
    /// dimensions equal to 8.
    pub fn passed(&self) -> bool {
        let all8 = |h: &BTreeMap<usize, usize>| h.iter().all(|(&d, _)| d == 8);
        self.failures.is_empty()
            && self.inclusion_pass == self.samples
            && self.rejection_pass == self.samples
            && all8(&self.slice_tangent_dims)
            && all8(&self.ks_tangent_dims)
    }
}

struct SampleOutcome {
    included: bool,
    rejected: bool,
    slice_dim: Option<usize>,
    ks_dim: Option<usize>,
    failures: Vec<String>,
}

fn check_sample(layout: &BlockLayout, conds: &[RankCondition], seed: u64, index: usize) -> SampleOutcome {
    let mut out = SampleOutcome { included: false, rejected: false, slice_dim: None, ks_dim: None, failures: Vec::new() };
    let draw = match ks_draw(seed, index as u64, 10) {
        Ok(d) => d,
        Err(e) => {
            out.failures.push(format!("sample {index}: {e}"));
            return out;
        }
    };
    let chart = &layout.chart;
    match ks_tangent_dim(&draw.point) {
        Ok(d) => out.ks_dim = Some(d),
        Err(e) => out.failures.push(format!("sample {index}: {e}")),
    }
    let point = ks_to_slice(&draw.point, layout);
    match in_slice_schubert(chart, conds, &point) {
        Ok(b) => out.included = b,
        Err(e) => out.failures.push(format!("sample {index}: {e}")),
    }
    if !out.included {
        out.failures.push(format!("sample {index}: mapped point violates a rank condition"));
    }
    match slice_tangent_dim(chart, conds, &point) {
        Ok(d) => out.slice_dim = Some(d),
        Err(e) => out.failures.push(format!("sample {index}: {e}")),
    }
    let bad = perturb(&draw.point, index);
    if ks_member(&bad) {
        out.failures.push(format!("sample {index}: perturbation stayed on the variety"));
    } else {
        match in_slice_schubert(chart, conds, &ks_to_slice(&bad, layout)) {
            Ok(b) => out.rejected = !b,
            Err(e) => out.failures.push(format!("sample {index}: {e}")),
        }
        if !out.rejected {
            out.failures.push(format!("sample {index}: perturbed point satisfies every rank condition"));
        }
    }
    out
}

#[cfg(feature = "parallel")]
fn run_samples(layout: &BlockLayout, conds: &[RankCondition], seed: u64, n: usize) -> Vec<SampleOutcome> {
    use rayon::prelude::*;
    (0..n).into_par_iter().map(|i| check_sample(layout, conds, seed, i)).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_samples(layout: &BlockLayout, conds: &[RankCondition], seed: u64, n: usize) -> Vec<SampleOutcome> {
    (0..n).map(|i| check_sample(layout, conds, seed, i)).collect()
}

const NOTES: &str = "Inclusion and rejection are exact pointwise checks. Tangent dimensions are those of the scheme \
cut out by the (r+1)-minors of the essential rank conditions; they bound the dimension of the reduced variety from \
above, so equality with 8 at generic samples shows smoothness there but not that the ideal is radical. No ideal \
equality is claimed.";

/// Samples `n_samples` points of the variety (sample `i` uses stream `i` of
/// the seeded generator), maps them into the slice and checks inclusion,
/// rejection of a perturbation, and both tangent dimensions.
pub fn verify_embedding(target: KsTarget, n_samples: usize, seed: u64) -> VerificationReport {
    let mut report = VerificationReport {
        target,
        samples: n_samples,
        seed,
        variables: 0,
        conditions: Vec::new(),
        inclusion_pass: 0,
        rejection_pass: 0,
        slice_tangent_dims: BTreeMap::new(),
        ks_tangent_dims: BTreeMap::new(),
        origin_ks_tangent_dim: 0,
        origin_slice_tangent_dim: 0,
        failures: Vec::new(),
        notes: String::from(NOTES),
    };
    let setup = block_layout(target).and_then(|l| Ok((rank_conditions(&target.y(), true)?, l)));
    let (conds, layout) = match setup {
        Ok(s) => s,
        Err(e) => {
            report.failures.push(format!("setup: {e}"));
            return report;
        }
    };
    report.variables = layout.chart.num_vars();
    let origin = KsPoint::zero();
    report.origin_ks_tangent_dim = ks_tangent_dim(&origin).unwrap_or(0);
    match slice_tangent_dim(&layout.chart, &conds, &ks_to_slice(&origin, &layout)) {
        Ok(d) => report.origin_slice_tangent_dim = d,
        Err(e) => report.failures.push(format!("origin: {e}")),
    }
    for o in run_samples(&layout, &conds, seed, n_samples) {
        report.inclusion_pass += o.included as usize;
        report.rejection_pass += o.rejected as usize;
        if let Some(d) = o.slice_dim {
            *report.slice_tangent_dims.entry(d).or_default() += 1;
        }
        if let Some(d) = o.ks_dim {
            *report.ks_tangent_dims.entry(d).or_default() += 1;
        }
        report.failures.extend(o.failures);
    }
    report.conditions = conds;
    report
}

#[cfg(test)]
mod tests {
    use super::super::ks::{is_zero2, mat2};
    use super::*;
    use alloc::vec;

    /// Entries of the chart of `x` as 0, 1 or `*` for a variable.
    fn pattern(target: KsTarget) -> Vec<String> {
        let chart = slice_chart(&target.x()).unwrap();
        (0..target.n())
            .map(|i| {
                (0..target.n())
                    .map(|j| match chart.entry(i, j) {
                        ChartEntry::Zero => '0',
                        ChartEntry::One => '1',
                        ChartEntry::Var(_) => '*',
                    })
                    .collect()
            })
            .collect()
    }

    /// Expands a block picture: `J`, `0` or `A` (all variables).
    fn expand(blocks: &[&str]) -> Vec<String> {
        let mut rows = Vec::new();
        for line in blocks {
            let mut top = String::new();
            let mut bottom = String::new();
            for ch in line.chars() {
                let (t, b) = match ch {
                    'J' => ("01", "10"),
                    '0' => ("00", "00"),
                    _ => ("**", "**"),
                };
                top.push_str(t);
                bottom.push_str(b);
            }
            rows.push(top);
            rows.push(bottom);
        }
        rows
    }

    #[test]
    fn gl8_chart_matches_displayed_blocks() {
        assert_eq!(pattern(KsTarget::Gl8), expand(&["J000", "A0J0", "AJ00", "AAAJ"]));
        let layout = block_layout(KsTarget::Gl8).unwrap();
        assert_eq!(layout.chart.num_vars(), 20);
        assert_eq!(layout.variable_blocks, vec![(2, 1), (3, 1), (4, 1), (4, 2), (4, 3)]);
    }

    #[test]
    fn gl12_chart_matches_displayed_blocks() {
        assert_eq!(pattern(KsTarget::Gl12), expand(&["00J000", "J00000", "B0A0J0", "BJ0000", "BBAJ00", "BBBAAJ"]));
        let layout = block_layout(KsTarget::Gl12).unwrap();
        assert_eq!(layout.chart.num_vars(), 44);
        assert_eq!(layout.variable_blocks.len(), 11);
        assert_eq!(layout.blocks.len(), 11);
    }

    #[test]
    fn inversion_recovers_forward_substitution() {
        let d = ks_draw(3, 0, 10).unwrap();
        let [a1, a2, a3, a4] = slice_blocks(&d.point);
        let (j, k) = (j2(), k2());
        let primes = [mul2(&transpose2(&a1), &j), mul2(&a2, &k), mul2(&a3, &j), mul2(&transpose2(&a4), &k)];
        assert_eq!(primes[3], d.point.m[0]);
        assert_eq!(primes[2], d.point.m[1]);
        assert_eq!(primes[1], d.point.m[2]);
        assert_eq!(primes[0], d.point.m[3]);
        for (l, r) in [(1, 0), (2, 1), (3, 2), (0, 3)] {
            assert!(is_zero2(&mul2(&primes[l], &primes[r])));
        }
    }

    #[test]
    fn indices_in_forward_order_leave_the_slice() {
        // A_1 = (M_1 J)^T, A_2 = -M_2 K, A_3 = M_3 J, A_4 = (-M_4 K)^T.
        let layout = block_layout(KsTarget::Gl8).unwrap();
        let conds = rank_conditions(&KsTarget::Gl8.y(), true).unwrap();
        let (j, k) = (j2(), k2());
        let mut outside = 0;
        for s in 0..20 {
            let p = ks_draw(5, s, 10).unwrap().point;
            let a = [
                transpose2(&mul2(&p.m[0], &j)),
                neg2(&mul2(&p.m[1], &k)),
                mul2(&p.m[2], &j),
                transpose2(&neg2(&mul2(&p.m[3], &k))),
            ];
            if !in_slice_schubert(&layout.chart, &conds, &ks_to_slice_with(&layout, &a)).unwrap() {
                outside += 1;
            }
        }
        assert_eq!(outside, 20);
    }

    #[test]
    fn gl8_essential_conditions_are_the_displayed_list() {
        let c = |a, b, bound| RankCondition { a, b, bound };
        // A0 = 0; [A1; A2] <= 1; [[A2, J], [0, A3]] <= 2; [A3 A4] <= 1;
        // the 6x6 block condition <= 4. Corners include A0, which vanishes.
        assert_eq!(
            rank_conditions(&KsTarget::Gl8.y(), true).unwrap(),
            vec![c(3, 2, 1), c(3, 6, 4), c(5, 4, 2), c(7, 2, 0), c(7, 6, 1)]
        );
    }

    #[test]
    fn extra_blocks_are_forced_to_vanish() {
        for t in KsTarget::ALL {
            let layout = block_layout(t).unwrap();
            let conds = rank_conditions(&t.y(), true).unwrap();
            let extra: Vec<_> = layout.blocks.iter().filter(|(name, _)| !["A1", "A2", "A3", "A4"].contains(name)).collect();
            assert_eq!(extra.len(), if t == KsTarget::Gl8 { 1 } else { 7 });
            for (s, (name, vars)) in extra.into_iter().enumerate() {
                for (r, c) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                    let mut p = ks_to_slice(&ks_draw(8, s as u64, 10).unwrap().point, &layout);
                    p[vars[r][c]] = BigRational::one();
                    assert!(!in_slice_schubert(&layout.chart, &conds, &p).unwrap(), "{t} {name} {r}{c}");
                }
            }
        }
    }

    #[test]
    fn origin_maps_to_fixed_point() {
        for t in KsTarget::ALL {
            let layout = block_layout(t).unwrap();
            let p = ks_to_slice(&KsPoint::zero(), &layout);
            assert!(p.iter().all(Zero::is_zero));
            let conds = rank_conditions(&t.y(), true).unwrap();
            assert!(in_slice_schubert(&layout.chart, &conds, &p).unwrap());
        }
    }

    #[test]
    fn perturbation_breaks_a_determinant() {
        let p = KsPoint { m: core::array::from_fn(|_| mat2(0, 1, 0, 0)) };
        for k in 0..4 {
            let bad = perturb(&p, k);
            assert!(!super::super::ks::det2(&bad.m[k]).is_zero());
        }
    }

    #[test]
    fn small_runs_pass() {
        for t in KsTarget::ALL {
            let r = verify_embedding(t, 10, 42);
            assert!(r.passed(), "{t}: {:?}", r.failures);
            assert_eq!(r.origin_ks_tangent_dim, 16);
        }
        let empty = verify_embedding(KsTarget::Gl8, 0, 1);
        assert!(empty.passed());
        assert_eq!(empty.inclusion_pass, 0);
        assert!(empty.slice_tangent_dims.is_empty());
    }
}
