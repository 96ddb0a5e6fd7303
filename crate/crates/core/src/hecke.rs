//! The Hecke algebra of a finite Coxeter system over `Z[v, v^-1]`.
//!
//! Normalization: `H_s H_w = H_{sw}` if `sw > w` and
//! `(v^-1 - v) H_w + H_{sw}` otherwise, so `H_s^2 = (v^-1 - v) H_s + 1`.
//! The Kazhdan–Lusztig generator is `H_s + v H_id`.

use alloc::collections::BTreeMap;
use core::fmt;

use crate::coxeter::{CoxeterElement, CoxeterSystem, Generator, Side};
use crate::laurent::LaurentPoly;
use crate::{Error, Result};

mod kl;
pub use kl::{DescentChoice, KlCache, KlRow};

/// An element `sum p_w H_w` of the Hecke algebra in the standard basis.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElt {
    system: CoxeterSystem,
    terms: BTreeMap<CoxeterElement, LaurentPoly>,
}

impl HeckeElt {
    pub fn zero(system: CoxeterSystem) -> Self {
        Self { system, terms: BTreeMap::new() }
    }

    /// The standard basis element `H_w`.
    pub fn standard(w: &CoxeterElement) -> Self {
        let mut h = Self::zero(w.system());
        h.terms.insert(w.clone(), LaurentPoly::one());
        h
    }

    /// `H_s + v H_id`.
    pub fn kl_generator(system: CoxeterSystem, s: Generator) -> Result<Self> {
        let mut h = Self::standard(&system.generator(s)?);
        h.add_term(&system.identity(), &LaurentPoly::v())?;
        Ok(h)
    }

    pub fn system(&self) -> CoxeterSystem {
        self.system
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CoxeterElement, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &CoxeterElement) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// `self += p * H_w`.
    pub fn add_term(&mut self, w: &CoxeterElement, p: &LaurentPoly) -> Result<()> {
        if w.system() != self.system {
            return Err(Error::SystemMismatch);
        }
        self.add_term_unchecked(w, p);
        Ok(())
    }

    fn add_term_unchecked(&mut self, w: &CoxeterElement, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot += p;
        if slot.is_zero() {
            self.terms.remove(w);
        }
    }

    pub fn add(&self, other: &HeckeElt) -> Result<HeckeElt> {
        if other.system != self.system {
            return Err(Error::SystemMismatch);
        }
        let mut out = self.clone();
        for (w, p) in &other.terms {
            out.add_term_unchecked(w, p);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &HeckeElt) -> Result<HeckeElt> {
        self.add(&other.scale(&-LaurentPoly::one()))
    }

    pub fn scale(&self, c: &LaurentPoly) -> HeckeElt {
        let mut out = Self::zero(self.system);
        for (w, p) in &self.terms {
            out.add_term_unchecked(w, &(p * c));
        }
        out
    }

    /// `H_s * self` or `self * H_s`.
    pub fn mult_by_gen(&self, s: Generator, side: Side) -> Result<HeckeElt> {
        self.system.generator(s)?;
        let v_inv_minus_v = LaurentPoly::from_pairs([(-1, 1), (1, -1)]);
        let mut out = Self::zero(self.system);
        for (w, p) in &self.terms {
            let sw = w.mul_gen(s, side);
            if sw.length() > w.length() {
                out.add_term_unchecked(&sw, p);
            } else {
                out.add_term_unchecked(w, &(p * &v_inv_minus_v));
                out.add_term_unchecked(&sw, p);
            }
        }
        Ok(out)
    }

    /// Multiplies by the KL generator `H_s + v H_id` on `side`.
    pub fn mult_by_kl_gen(&self, s: Generator, side: Side) -> Result<HeckeElt> {
        self.mult_by_gen(s, side)?.add(&self.scale(&LaurentPoly::v()))
    }

    /// Full product, expanding `other` along reduced words.
    pub fn mul(&self, other: &HeckeElt) -> Result<HeckeElt> {
        if other.system != self.system {
            return Err(Error::SystemMismatch);
        }
        let mut out = Self::zero(self.system);
        for (w, p) in &other.terms {
            let mut acc = self.scale(p);
            for s in w.reduced_word() {
                acc = acc.mult_by_gen(s, Side::Right)?;
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }

    /// The ring involution with `v -> v^-1` and `H_w -> (H_{w^-1})^-1`.
    pub fn bar_involution(&self) -> HeckeElt {
        let mut memo: BTreeMap<CoxeterElement, HeckeElt> = BTreeMap::new();
        let mut out = Self::zero(self.system);
        for (w, p) in &self.terms {
            let bw = bar_standard(w, &mut memo);
            out = out.add(&bw.scale(&p.bar())).expect("same system");
        }
        out
    }
}

/// `bar(H_w) = bar(H_{w'}) * (H_s + (v - v^-1))` for `w = w's` reduced.
fn bar_standard(w: &CoxeterElement, memo: &mut BTreeMap<CoxeterElement, HeckeElt>) -> HeckeElt {
    if let Some(h) = memo.get(w) {
        return h.clone();
    }
    let sys = w.system();
    let h = match sys.generators().into_iter().find(|&s| w.is_descent(s, Side::Right)) {
        None => HeckeElt::standard(w),
        Some(s) => {
            let prev = bar_standard(&w.right_mul_gen(s), memo);
            let v_minus_v_inv = LaurentPoly::from_pairs([(1, 1), (-1, -1)]);
            prev.mult_by_gen(s, Side::Right)
                .expect("valid generator")
                .add(&prev.scale(&v_minus_v_inv))
                .expect("same system")
        }
    };
    memo.insert(w.clone(), h.clone());
    h
}

impl fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, p)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({p})H_{w}")?;
        }
        Ok(())
    }
}
