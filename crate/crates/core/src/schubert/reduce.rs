//! Randomized two-way checks of the block rank reductions used to identify
//! the slice with the Kashiwara–Saito variety.

use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::embed::slice_blocks;
use super::ks::{det2, is_zero2, j2, k2, mul2, q, transpose2, zero2, KsDraw, Mat2};
use crate::linalg::QMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReduceKind {
    /// `rank [[A2, J], [0, A3]] <= 2` iff `A3 J A2 = 0`.
    Rank23,
    /// `rank [A1; A2] <= 1` iff `A2 K A1^T = 0`, `det A1 = det A2 = 0`.
    Rank12,
    /// `rank [A3 A4] <= 1` iff `A4^T K A3 = 0`, `det A3 = det A4 = 0`.
    Rank34,
    /// The `Rank23` condition together with
    /// `rank [[A1, 0, J], [A2, J, 0], [0, A3, A4]] <= 4` iff
    /// `A3 J A2 = 0` and `A4 J A1 = 0`.
    Rank1234,
}

impl ReduceKind {
    pub const ALL: [ReduceKind; 4] = [ReduceKind::Rank23, ReduceKind::Rank12, ReduceKind::Rank34, ReduceKind::Rank1234];

    pub fn name(self) -> &'static str {
        match self {
            ReduceKind::Rank23 => "rank23",
            ReduceKind::Rank12 => "rank12",
            ReduceKind::Rank34 => "rank34",
            ReduceKind::Rank1234 => "rank1234",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }

    /// The block rank condition.
    pub fn lhs(self, a: &[Mat2; 4]) -> bool {
        let [a1, a2, a3, a4] = a;
        let (j, z) = (j2(), zero2());
        let rank23 = || block(&[&[a2, &j], &[&z, a3]]).rank() <= 2;
        match self {
            ReduceKind::Rank23 => rank23(),
            ReduceKind::Rank12 => block(&[&[a1], &[a2]]).rank() <= 1,
            ReduceKind::Rank34 => block(&[&[a3, a4]]).rank() <= 1,
            ReduceKind::Rank1234 => rank23() && block(&[&[a1, &z, &j], &[a2, &j, &z], &[&z, a3, a4]]).rank() <= 4,
        }
    }

    /// The reduced equations.
    pub fn rhs(self, a: &[Mat2; 4]) -> bool {
        let [a1, a2, a3, a4] = a;
        let (j, k) = (j2(), k2());
        let a3ja2 = || is_zero2(&mul2(&mul2(a3, &j), a2));
        match self {
            ReduceKind::Rank23 => a3ja2(),
            ReduceKind::Rank12 => {
                is_zero2(&mul2(&mul2(a2, &k), &transpose2(a1))) && det2(a1).is_zero() && det2(a2).is_zero()
            }
            ReduceKind::Rank34 => {
                is_zero2(&mul2(&mul2(&transpose2(a4), &k), a3)) && det2(a3).is_zero() && det2(a4).is_zero()
            }
            ReduceKind::Rank1234 => a3ja2() && is_zero2(&mul2(&mul2(a4, &j), a1)),
        }
    }
}

impl fmt::Display for ReduceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn block(rows: &[&[&Mat2]]) -> QMatrix {
    let out = rows
        .iter()
        .flat_map(|blocks| (0..2).map(move |r| blocks.iter().flat_map(|b| b[r].iter().cloned()).collect::<Vec<_>>()))
        .collect();
    QMatrix::from_rows(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReduceOutcome {
    pub kind: ReduceKind,
    pub seed: u64,
    pub draws: usize,
    pub lhs_true: usize,
    pub rhs_true: usize,
    /// First draw on which the two sides disagree.
    pub counterexample: Option<[Mat2; 4]>,
}

impl ReduceOutcome {
    pub fn passed(&self, min_each: usize) -> bool {
        self.counterexample.is_none() && self.lhs_true >= min_each && self.rhs_true >= min_each
    }
}

struct Sampler<'a> {
    rng: &'a mut ChaCha8Rng,
}

impl Sampler<'_> {
    /// Small integers, zero with probability about one half.
    fn entry(&mut self) -> BigRational {
        if self.rng.gen_bool(0.4) {
            q(0)
        } else {
            q(self.rng.gen_range(-3..=3))
        }
    }

    fn vec2(&mut self) -> [BigRational; 2] {
        [self.entry(), self.entry()]
    }

    fn outer(a: &[BigRational; 2], b: &[BigRational; 2]) -> Mat2 {
        core::array::from_fn(|i| core::array::from_fn(|j| &a[i] * &b[j]))
    }

    fn rank_one(&mut self) -> Mat2 {
        let (a, b) = (self.vec2(), self.vec2());
        Self::outer(&a, &b)
    }

    fn any(&mut self) -> Mat2 {
        match self.rng.gen_range(0..4) {
            0 => zero2(),
            1 => self.rank_one(),
            _ => core::array::from_fn(|_| core::array::from_fn(|_| self.entry())),
        }
    }

    fn invertible(&mut self) -> Mat2 {
        loop {
            let m = self.any();
            if !det2(&m).is_zero() {
                return m;
            }
        }
    }

    /// A vector `x` with `m x = 0`, nonzero when `m` is singular.
    fn kernel_vec(m: &Mat2) -> [BigRational; 2] {
        if !det2(m).is_zero() {
            return [q(0), q(0)];
        }
        for row in m {
            if !row.iter().all(Zero::is_zero) {
                return [-row[1].clone(), row[0].clone()];
            }
        }
        [q(1), q(0)]
    }

    fn scalar(&mut self) -> BigRational {
        self.entry()
    }

    fn random_blocks(&mut self) -> [Mat2; 4] {
        core::array::from_fn(|_| self.any())
    }

    /// `A2 = J X` with `A3 X = 0`.
    fn rhs23(&mut self, a: &mut [Mat2; 4]) {
        let a3 = if self.rng.gen_bool(0.8) { self.rank_one() } else { self.any() };
        let k = Self::kernel_vec(&a3);
        let c = self.vec2();
        a[1] = mul2(&j2(), &Self::outer(&k, &c));
        a[2] = a3;
    }

    /// `[[A2, J], [0, A3]] = [C1; C2] [R1 R2]` with `C1` invertible, so
    /// `A2 = C1 R1`, `A3 = C2 C1^-1 J` and `C2 R1 = 0`.
    fn lhs23(&mut self, a: &mut [Mat2; 4]) {
        let c1 = self.invertible();
        let d = det2(&c1);
        let c1_inv: Mat2 = [[&c1[1][1] / &d, -&c1[0][1] / &d], [-&c1[1][0] / &d, &c1[0][0] / &d]];
        let (r1, c2) = if self.rng.gen_bool(0.5) {
            let r1 = self.rank_one();
            // rows of C2 in the left kernel of R1
            let k = Self::kernel_vec(&transpose2(&r1));
            let s = self.vec2();
            (r1, Self::outer(&s, &k))
        } else {
            let c2 = self.rank_one();
            let k = Self::kernel_vec(&c2);
            let s = self.vec2();
            (Self::outer(&k, &s), c2)
        };
        a[1] = mul2(&c1, &r1);
        a[2] = mul2(&mul2(&c2, &c1_inv), &j2());
    }

    fn sample(&mut self, kind: ReduceKind, source: usize) -> [Mat2; 4] {
        let mut a = self.random_blocks();
        match (source, kind) {
            (0, _) => {}
            (1, ReduceKind::Rank12) => {
                let (p, qv, s) = (self.vec2(), self.vec2(), self.vec2());
                let l = self.scalar();
                a[0] = Self::outer(&p, &qv);
                a[1] = Self::outer(&s, &[&l * &qv[0], &l * &qv[1]]);
            }
            (1, ReduceKind::Rank34) => {
                let (p, qv, s) = (self.vec2(), self.vec2(), self.vec2());
                let l = self.scalar();
                a[2] = Self::outer(&p, &qv);
                a[3] = Self::outer(&[&l * &p[0], &l * &p[1]], &s);
            }
            (1, ReduceKind::Rank23) => self.rhs23(&mut a),
            (1, ReduceKind::Rank1234) => {
                self.rhs23(&mut a);
                if self.rng.gen_bool(0.7) {
                    a[3] = self.rank_one();
                }
                let k = Self::kernel_vec(&a[3]);
                let c = self.vec2();
                a[0] = mul2(&j2(), &Self::outer(&k, &c));
            }
            (2, ReduceKind::Rank12) => {
                let (c, r) = ([self.vec2(), self.vec2()], self.vec2());
                a[0] = Self::outer(&c[0], &r);
                a[1] = Self::outer(&c[1], &r);
            }
            (2, ReduceKind::Rank34) => {
                let (c, r) = (self.vec2(), [self.vec2(), self.vec2()]);
                a[2] = Self::outer(&c, &r[0]);
                a[3] = Self::outer(&c, &r[1]);
            }
            (2, ReduceKind::Rank23) => self.lhs23(&mut a),
            (2, ReduceKind::Rank1234) => {
                // The 6x6 matrix has rank 4 + rank(A4 J A1 + A3 J A2) by a
                // Schur complement on its J blocks.
                self.lhs23(&mut a);
                a[0] = self.invertible();
                let d = det2(&a[0]);
                let a1_inv: Mat2 =
                    [[&a[0][1][1] / &d, -&a[0][0][1] / &d], [-&a[0][1][0] / &d, &a[0][0][0] / &d]];
                let t = mul2(&mul2(&a[2], &j2()), &a[1]);
                let neg: Mat2 = core::array::from_fn(|i| core::array::from_fn(|j| -t[i][j].clone()));
                a[3] = mul2(&mul2(&neg, &a1_inv), &j2());
            }
            _ => {
                if let Ok(d) = KsDraw::draw(self.rng, 5) {
                    a = slice_blocks(&d.point);
                }
            }
        }
        a
    }
}

const MAX_DRAWS: usize = 200_000;

/// Draws block tuples from four sources in turn (random blocks, blocks
/// built to satisfy the reduced equations, blocks built to satisfy the rank
/// condition, images of variety samples) until each side has held at least
/// `min_each` times, stopping at the first disagreement.
pub fn reduce_check_with(kind: ReduceKind, min_each: usize, seed: u64) -> ReduceOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = ReduceOutcome { kind, seed, draws: 0, lhs_true: 0, rhs_true: 0, counterexample: None };
    let mut s = Sampler { rng: &mut rng };
    while (out.lhs_true < min_each || out.rhs_true < min_each) && out.draws < MAX_DRAWS {
        let a = s.sample(kind, out.draws % 4);
        out.draws += 1;
        let (l, r) = (kind.lhs(&a), kind.rhs(&a));
        out.lhs_true += l as usize;
        out.rhs_true += r as usize;
        if l != r {
            out.counterexample = Some(a);
            break;
        }
    }
    out
}

/// [`reduce_check_with`] with 1000 samples per side and a fixed seed.
pub fn reduce_check(kind: ReduceKind) -> bool {
    reduce_check_with(kind, 1000, 0).passed(1000)
}
