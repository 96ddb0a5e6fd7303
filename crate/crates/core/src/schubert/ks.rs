//! The Kashiwara–Saito variety: quadruples of 2x2 matrices with
//! `det M_i = 0` and `M_i M_{i+1} = 0`, indices mod 4.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::QMatrix;
use crate::{Error, Result};

pub type Mat2 = [[BigRational; 2]; 2];

pub(crate) fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub(crate) fn mat2(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
    [[q(a), q(b)], [q(c), q(d)]]
}

pub(crate) fn zero2() -> Mat2 {
    mat2(0, 0, 0, 0)
}

/// `[[0, 1], [1, 0]]`.
pub(crate) fn j2() -> Mat2 {
    mat2(0, 1, 1, 0)
}

/// `[[0, -1], [1, 0]]`.
pub(crate) fn k2() -> Mat2 {
    mat2(0, -1, 1, 0)
}

pub(crate) fn mul2(a: &Mat2, b: &Mat2) -> Mat2 {
    core::array::from_fn(|i| core::array::from_fn(|j| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j]))
}

pub(crate) fn transpose2(a: &Mat2) -> Mat2 {
    core::array::from_fn(|i| core::array::from_fn(|j| a[j][i].clone()))
}

pub(crate) fn neg2(a: &Mat2) -> Mat2 {
    core::array::from_fn(|i| core::array::from_fn(|j| -a[i][j].clone()))
}

pub(crate) fn det2(a: &Mat2) -> BigRational {
    &a[0][0] * &a[1][1] - &a[0][1] * &a[1][0]
}

pub(crate) fn is_zero2(a: &Mat2) -> bool {
    a.iter().flatten().all(Zero::is_zero)
}

/// A point of `M_2^4`; membership in the variety is [`ks_member`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KsPoint {
    pub m: [Mat2; 4],
}

impl KsPoint {
    pub fn zero() -> Self {
        Self { m: core::array::from_fn(|_| zero2()) }
    }

    /// The 16 coordinates, `M_1` to `M_4`, each row by row.
    pub fn coords(&self) -> Vec<BigRational> {
        self.m.iter().flat_map(|m| m.iter().flatten().cloned()).collect()
    }
}

pub fn ks_member(p: &KsPoint) -> bool {
    (0..4).all(|i| det2(&p.m[i]).is_zero() && is_zero2(&mul2(&p.m[i], &p.m[(i + 1) % 4])))
}

/// A sampled point together with its parameters:
/// `M_i = t_i u_i (K u_{i+1})^T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KsDraw {
    pub u: [[BigRational; 2]; 4],
    pub t: [BigRational; 4],
    pub point: KsPoint,
}

const MAX_ATTEMPTS: usize = 1000;

impl KsDraw {
    pub fn from_params(u: [[BigRational; 2]; 4], t: [BigRational; 4]) -> Self {
        let m = core::array::from_fn(|i| {
            let next = &u[(i + 1) % 4];
            // K u = (-u_2, u_1)
            let w = [-next[1].clone(), next[0].clone()];
            core::array::from_fn(|a| core::array::from_fn(|b| &t[i] * &u[i][a] * &w[b]))
        });
        Self { u, t, point: KsPoint { m } }
    }

    /// Draws with integer `u` entries in `[-bound, bound]` and
    /// `t_i = p / q` with `0 < |p| <= bound`, `1 <= q <= bound`, redrawing
    /// whenever some `u_i` vanishes.
    pub fn draw<R: Rng>(rng: &mut R, bound: i64) -> Result<Self> {
        let bound = bound.max(1);
        for _ in 0..MAX_ATTEMPTS {
            let u: [[BigRational; 2]; 4] =
                core::array::from_fn(|_| core::array::from_fn(|_| q(rng.gen_range(-bound..=bound))));
            if u.iter().any(|v| v.iter().all(Zero::is_zero)) {
                continue;
            }
            let t = core::array::from_fn(|_| {
                let mut p = rng.gen_range(1..=bound);
                if rng.gen_bool(0.5) {
                    p = -p;
                }
                BigRational::new(p.into(), rng.gen_range(1..=bound).into())
            });
            return Ok(Self::from_params(u, t));
        }
        Err(Error::SamplingExhausted(MAX_ATTEMPTS))
    }

    /// Rank of the 16 x 12 Jacobian of `(u, t) -> (M_1, ..., M_4)`.
    pub fn parametrization_rank(&self) -> usize {
        // Columns: u_1..u_4 (two each), then t_1..t_4.
        let mut jac = QMatrix::zeros(16, 12);
        for i in 0..4 {
            let nx = (i + 1) % 4;
            let un = &self.u[nx];
            let w = [-un[1].clone(), un[0].clone()];
            for a in 0..2 {
                for b in 0..2 {
                    let row = 4 * i + 2 * a + b;
                    jac.set(row, 8 + i, &self.u[i][a] * &w[b]);
                    let col = 2 * i + a;
                    let cur = jac.get(row, col) + &self.t[i] * &w[b];
                    jac.set(row, col, cur);
                    // dw_0/du_1 = -1, dw_1/du_0 = 1
                    let (c, sign) = if b == 0 { (1, -1) } else { (0, 1) };
                    let col = 2 * nx + c;
                    let cur = jac.get(row, col) + &self.t[i] * &self.u[i][a] * q(sign);
                    jac.set(row, col, cur);
                }
            }
        }
        jac.rank()
    }
}

/// Draw for a single seed; see [`KsDraw::draw`].
pub fn ks_draw(seed: u64, stream: u64, bound: i64) -> Result<KsDraw> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    KsDraw::draw(&mut rng, bound)
}

pub fn ks_sample(seed: u64, bound: i64) -> Result<KsPoint> {
    Ok(ks_draw(seed, 0, bound)?.point)
}

/// Jacobian of the 20 defining polynomials (4 determinants, then the 16
/// entries of the products `M_i M_{i+1}`) in the coordinates of
/// [`KsPoint::coords`].
pub fn ks_jacobian(p: &KsPoint) -> QMatrix {
    let var = |i: usize, a: usize, b: usize| 4 * (i % 4) + 2 * a + b;
    let mut jac = QMatrix::zeros(20, 16);
    for i in 0..4 {
        let m = &p.m[i];
        jac.set(i, var(i, 0, 0), m[1][1].clone());
        jac.set(i, var(i, 0, 1), -m[1][0].clone());
        jac.set(i, var(i, 1, 0), -m[0][1].clone());
        jac.set(i, var(i, 1, 1), m[0][0].clone());
    }
    for i in 0..4 {
        let (l, r) = (&p.m[i], &p.m[(i + 1) % 4]);
        for a in 0..2 {
            for b in 0..2 {
                let row = 4 + 4 * i + 2 * a + b;
                for c in 0..2 {
                    let x = jac.get(row, var(i, a, c)) + &r[c][b];
                    jac.set(row, var(i, a, c), x);
                    let x = jac.get(row, var(i + 1, c, b)) + &l[a][c];
                    jac.set(row, var(i + 1, c, b), x);
                }
            }
        }
    }
    jac
}

/// `16 - rank` of [`ks_jacobian`] at a point of the variety.
pub fn ks_tangent_dim(p: &KsPoint) -> Result<usize> {
    if !ks_member(p) {
        return Err(Error::NotOnVariety);
    }
    Ok(ks_jacobian(p).kernel_dim())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nilpotent() -> KsPoint {
        KsPoint { m: core::array::from_fn(|_| mat2(0, 1, 0, 0)) }
    }

    #[test]
    fn membership_examples() {
        assert!(ks_member(&KsPoint::zero()));
        assert!(ks_member(&nilpotent()));
        let mut p = KsPoint::zero();
        p.m[0] = mat2(1, 0, 0, 1);
        assert!(!ks_member(&p));
        assert_eq!(ks_tangent_dim(&p), Err(Error::NotOnVariety));
    }

    #[test]
    fn unit_parameters_give_nilpotents() {
        let e1 = [q(1), q(0)];
        let d = KsDraw::from_params(core::array::from_fn(|_| e1.clone()), core::array::from_fn(|_| q(1)));
        assert_eq!(d.point, nilpotent());
    }

    #[test]
    fn draws_are_members_and_generic() {
        for s in 0..200 {
            let d = ks_draw(42, s, 10).unwrap();
            assert!(ks_member(&d.point));
            assert!(d.point.m.iter().all(|m| !is_zero2(m)));
            assert_eq!(d.parametrization_rank(), 8);
            assert_eq!(ks_tangent_dim(&d.point).unwrap(), 8);
        }
        assert_eq!(ks_draw(9, 3, 10), ks_draw(9, 3, 10));
        assert_ne!(ks_draw(9, 3, 10), ks_draw(9, 4, 10));
    }

    #[test]
    fn tangent_dims_at_special_points() {
        assert_eq!(ks_tangent_dim(&KsPoint::zero()).unwrap(), 16);
        // Each M_i = E_12: the determinant rows give the four (2,1) entries,
        // the product rows add the (2,1) entries again and the four sums
        // (M_i)_11 + (M_{i+1})_22, so the Jacobian has rank 8.
        assert_eq!(ks_tangent_dim(&nilpotent()).unwrap(), 8);
    }

    #[test]
    fn jacobian_matches_finite_differences() {
        // Every defining polynomial is quadratic, so
        // f(p + e) - f(p) - f(e) + f(0) = df_p(e) exactly.
        let d = ks_draw(1, 0, 5).unwrap();
        let p = d.point.coords();
        let jac = ks_jacobian(&d.point);
        let eval = |c: &[BigRational]| -> Vec<BigRational> {
            let pt = KsPoint {
                m: core::array::from_fn(|i| core::array::from_fn(|a| core::array::from_fn(|b| c[4 * i + 2 * a + b].clone()))),
            };
            let mut out: Vec<_> = pt.m.iter().map(det2).collect();
            for i in 0..4 {
                out.extend(mul2(&pt.m[i], &pt.m[(i + 1) % 4]).into_iter().flatten());
            }
            out
        };
        for k in 0..16 {
            let mut e = alloc::vec![q(0); 16];
            e[k] = q(1);
            let pe: Vec<_> = p.iter().zip(&e).map(|(a, b)| a + b).collect();
            let (fpe, fp, fe) = (eval(&pe), eval(&p), eval(&e));
            for r in 0..20 {
                assert_eq!(&fpe[r] - &fp[r] - &fe[r], *jac.get(r, k));
            }
        }
    }
}
