use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::HeckeElt;
use crate::coxeter::{CoxeterElement, CoxeterSystem, EnumeratedGroup, Side};
use crate::laurent::LaurentPoly;
use crate::{Error, Result};

/// Which left descent `s` drives the recursion `C_w = C_s C_{sw} - ...`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DescentChoice {
    #[default]
    Lowest,
    Highest,
}

/// The strictly-lower part of a canonical basis element: `(x, h_{x,w})` for
/// `x < w`, sorted by element index.
pub type KlRow = Vec<(u32, LaurentPoly)>;

/// Memoized table of Kazhdan–Lusztig coefficients `h_{x,w}`.
///
/// `C_w = H_w + sum_{x < w} h_{x,w} H_x` with `h_{x,w} in v Z[v]`. Rows are
/// computed on demand (or all at once, stratum by stratum) through
/// `C_w = C_s C_{sw} - sum mu(z, sw) C_z` over `z < sw` with `sz < z`.
#[derive(Clone, Debug)]
pub struct KlCache {
    group: EnumeratedGroup,
    rows: Vec<Option<KlRow>>,
    choice: DescentChoice,
}

impl KlCache {
    pub fn new(system: CoxeterSystem) -> Result<Self> {
        Self::with_choice(system, DescentChoice::Lowest)
    }

    pub fn with_choice(system: CoxeterSystem, choice: DescentChoice) -> Result<Self> {
        let group = EnumeratedGroup::new(system)?;
        let rows = vec![None; group.len()];
        Ok(Self { group, rows, choice })
    }

    pub fn group(&self) -> &EnumeratedGroup {
        &self.group
    }

    pub fn system(&self) -> CoxeterSystem {
        self.group.system()
    }

    pub fn is_complete(&self) -> bool {
        self.rows.iter().all(Option::is_some)
    }

    /// Row of `w` if it has been computed.
    pub fn row(&self, w: usize) -> Option<&[(u32, LaurentPoly)]> {
        self.rows[w].as_deref()
    }

    fn row_ref(&self, w: usize) -> &[(u32, LaurentPoly)] {
        self.rows[w].as_deref().expect("row computed before use")
    }

    /// `h_{x,w}` by index, reading only computed rows.
    pub fn h_index(&self, x: usize, w: usize) -> Option<LaurentPoly> {
        if x == w {
            return Some(LaurentPoly::one());
        }
        let row = self.row(w)?;
        Some(match row.binary_search_by_key(&(x as u32), |(i, _)| *i) {
            Ok(pos) => row[pos].1.clone(),
            Err(_) => LaurentPoly::zero(),
        })
    }

    /// Coefficient of `v` in `h_{x,w}`, by index; zero if the row lacks `x`.
    pub fn mu_index(&self, x: usize, w: usize) -> BigInt {
        let row = self.row_ref(w);
        match row.binary_search_by_key(&(x as u32), |(i, _)| *i) {
            Ok(pos) => row[pos].1.coeff(1),
            Err(_) => BigInt::zero(),
        }
    }

    fn descent_slot(&self, w: usize) -> Option<usize> {
        let slots = 0..self.group.generators().len();
        let mut descents = slots.filter(|&g| self.group.is_descent(w, g, Side::Left));
        match self.choice {
            DescentChoice::Lowest => descents.next(),
            DescentChoice::Highest => descents.next_back(),
        }
    }

    /// Rows that must exist before the row of `w` can be computed.
    fn dependencies(&self, w: usize) -> Vec<usize> {
        let Some(slot) = self.descent_slot(w) else {
            return Vec::new();
        };
        let sw = self.group.left_mul(slot, w);
        let mut deps = vec![sw];
        if let Some(row) = self.row(sw) {
            for (z, h) in row {
                let z = *z as usize;
                if self.group.is_descent(z, slot, Side::Left) && !h.coeff(1).is_zero() {
                    deps.push(z);
                }
            }
        }
        deps
    }

    /// Computes the row of `w`, assuming all rows it depends on are present.
    fn compute_row(&self, w: usize) -> KlRow {
        let Some(slot) = self.descent_slot(w) else {
            return Vec::new();
        };
        let g = &self.group;
        let sw = g.left_mul(slot, w);
        let one = BigInt::from(1);
        let mut acc: BTreeMap<u32, LaurentPoly> = BTreeMap::new();
        let add = |acc: &mut BTreeMap<u32, LaurentPoly>, x: usize, p: &LaurentPoly, scale: &BigInt, shift: i32| {
            acc.entry(x as u32).or_default().add_scaled_shifted(p, scale, shift);
        };

        // C_s * C_{sw}: C_s H_x = H_{sx} + v H_x if sx > x, else H_{sx} + v^-1 H_x.
        let unit = LaurentPoly::one();
        let lower = self.row_ref(sw);
        let terms = lower.iter().map(|(x, h)| (*x as usize, h)).chain(core::iter::once((sw, &unit)));
        for (x, h) in terms {
            let sx = g.left_mul(slot, x);
            add(&mut acc, sx, h, &one, 0);
            if g.length(sx) > g.length(x) {
                add(&mut acc, x, h, &one, 1);
            } else {
                add(&mut acc, x, h, &one, -1);
            }
        }

        for (z, h) in lower {
            let z = *z as usize;
            let mu = h.coeff(1);
            if mu.is_zero() || !g.is_descent(z, slot, Side::Left) {
                continue;
            }
            let neg_mu = -mu;
            for (x, hz) in self.row_ref(z) {
                add(&mut acc, *x as usize, hz, &neg_mu, 0);
            }
            add(&mut acc, z, &unit, &neg_mu, 0);
        }

        let top = acc.remove(&(w as u32)).unwrap_or_default();
        assert!(top.is_one(), "leading coefficient of C_w must be 1");
        let row: KlRow = acc.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        for (x, p) in &row {
            assert!(
                p.in_v_z_v() && p.is_nonneg(),
                "h_{{{},{}}} = {p} violates degree bound or positivity",
                g.element(*x as usize),
                g.element(w)
            );
        }
        row
    }

    /// Ensures the row of `w` (and everything it needs) is computed.
    pub fn ensure(&mut self, w: usize) {
        if self.rows[w].is_some() {
            return;
        }
        // Explicit stack; dependencies are re-read each visit because the
        // list grows once the row of sw exists.
        let mut stack = vec![w];
        while let Some(&top) = stack.last() {
            if self.rows[top].is_some() {
                stack.pop();
                continue;
            }
            let missing: Vec<usize> =
                self.dependencies(top).into_iter().filter(|&d| self.rows[d].is_none()).collect();
            if missing.is_empty() {
                let row = self.compute_row(top);
                self.rows[top] = Some(row);
                stack.pop();
            } else {
                stack.extend(missing);
            }
        }
    }

    /// Computes every row, one length stratum at a time.
    pub fn build_all(&mut self) {
        let strata: Vec<_> = self.group.strata().collect();
        for range in strata {
            for w in range {
                if self.rows[w].is_none() {
                    let row = self.compute_row(w);
                    self.rows[w] = Some(row);
                }
            }
        }
    }

    /// Parallel version of [`Self::build_all`]: rows within a stratum only
    /// depend on shorter elements, so each stratum is one parallel map.
    #[cfg(feature = "parallel")]
    pub fn build_all_parallel(&mut self) {
        use rayon::prelude::*;
        let strata: Vec<_> = self.group.strata().collect();
        for range in strata {
            let this = &*self;
            let computed: Vec<(usize, KlRow)> = range
                .into_par_iter()
                .filter(|&w| this.rows[w].is_none())
                .map(|w| (w, this.compute_row(w)))
                .collect();
            for (w, row) in computed {
                self.rows[w] = Some(row);
            }
        }
    }

    /// True iff both caches hold identical computed rows.
    pub fn same_table(&self, other: &KlCache) -> bool {
        self.group.system() == other.group.system() && self.rows == other.rows
    }

    pub fn index_of(&self, w: &CoxeterElement) -> Result<usize> {
        self.group.index_of(w)
    }

    /// `h_{x,w}`; zero unless `x <= w`.
    pub fn kl_poly(&mut self, x: &CoxeterElement, w: &CoxeterElement) -> Result<LaurentPoly> {
        let xi = self.index_of(x)?;
        let wi = self.index_of(w)?;
        self.ensure(wi);
        Ok(self.h_index(xi, wi).expect("row ensured"))
    }

    /// Coefficient of `v` in `h_{x,w}`. Requires `x < w`.
    pub fn mu(&mut self, x: &CoxeterElement, w: &CoxeterElement) -> Result<BigInt> {
        if x == w || !x.bruhat_leq(w)? {
            return Err(Error::NotBelow);
        }
        Ok(self.kl_poly(x, w)?.coeff(1))
    }

    /// The canonical basis element `C_w` expanded in the standard basis.
    pub fn kl_basis_elt(&mut self, w: &CoxeterElement) -> Result<HeckeElt> {
        let wi = self.index_of(w)?;
        self.ensure(wi);
        let mut h = HeckeElt::standard(w);
        for (x, p) in self.row_ref(wi) {
            h.add_term_unchecked(self.group.element(*x as usize), p);
        }
        Ok(h)
    }

    /// Expands `h` in the canonical basis by peeling off the longest term.
    pub fn to_kl_basis(&mut self, h: &HeckeElt) -> Result<BTreeMap<CoxeterElement, LaurentPoly>> {
        if h.system() != self.system() {
            return Err(Error::SystemMismatch);
        }
        let mut rest: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
        for (w, p) in h.terms() {
            rest.insert(self.index_of(w)?, p.clone());
        }
        let mut out = BTreeMap::new();
        while let Some((w, p)) = rest.pop_last() {
            self.ensure(w);
            for (x, hx) in self.row_ref(w) {
                let slot = rest.entry(*x as usize).or_default();
                *slot -= &(hx * &p);
                if slot.is_zero() {
                    rest.remove(&(*x as usize));
                }
            }
            out.insert(self.group.element(w).clone(), p);
        }
        Ok(out)
    }
}
