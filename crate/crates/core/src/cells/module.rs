use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coxeter::{CoxeterElement, Generator, Side};
use crate::hecke::KlCache;
use crate::laurent::LaurentPoly;
use crate::Result;

/// The W-graph of a cell: vertices in increasing length then lexicographic
/// order, left descent sets as vertex labels, and undirected edges weighted by
/// `mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WGraph {
    pub vertices: Vec<CoxeterElement>,
    pub descents: Vec<Vec<Generator>>,
    /// `(i, j) -> mu(vertices[i], vertices[j])` for `i < j`, nonzero only.
    pub edges: BTreeMap<(usize, usize), BigInt>,
}

impl WGraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn mu(&self, i: usize, j: usize) -> BigInt {
        let key = if i < j { (i, j) } else { (j, i) };
        self.edges.get(&key).cloned().unwrap_or_default()
    }
}

fn sorted_indices(cell: &[CoxeterElement], cache: &mut KlCache) -> Result<Vec<usize>> {
    let mut idx = cell.iter().map(|w| cache.index_of(w)).collect::<Result<Vec<_>>>()?;
    idx.sort_unstable();
    idx.dedup();
    for &i in &idx {
        cache.ensure(i);
    }
    Ok(idx)
}

pub fn wgraph_of_cell(cell: &[CoxeterElement], cache: &mut KlCache) -> Result<WGraph> {
    let idx = sorted_indices(cell, cache)?;
    let g = cache.group();
    let gens = g.generators().to_vec();
    let vertices = idx.iter().map(|&i| g.element(i).clone()).collect();
    let descents = idx
        .iter()
        .map(|&i| (0..gens.len()).filter(|&k| g.is_descent(i, k, Side::Left)).map(|k| gens[k]).collect())
        .collect();
    let mut edges = BTreeMap::new();
    for (b, &j) in idx.iter().enumerate() {
        for (a, &i) in idx[..b].iter().enumerate() {
            let mu = cache.mu_index(i, j);
            if !mu.is_zero() {
                edges.insert((a, b), mu);
            }
        }
    }
    Ok(WGraph { vertices, descents, edges })
}

/// The left cell module: basis `M_x` for `x` in the cell and the action of
/// each `C_s` obtained by dropping KL basis elements outside the cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellModule {
    pub basis: Vec<CoxeterElement>,
    pub generators: Vec<Generator>,
    /// `action[k][i][j]`: coefficient of `M_{basis[i]}` in `C_s M_{basis[j]}`
    /// for `s = generators[k]`.
    pub action: Vec<Vec<Vec<LaurentPoly>>>,
}

impl CellModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrix of `C_s`, if `s` is a generator of the group.
    pub fn matrix(&self, s: Generator) -> Option<&[Vec<LaurentPoly>]> {
        let k = self.generators.iter().position(|&g| g == s)?;
        Some(&self.action[k])
    }
}

/// Matrices of `C_s` on the cell module spanned by `cell`:
/// `C_s M_x = (v + v^-1) M_x` if `sx < x`, otherwise
/// `M_{sx} + sum_{z < x, sz < z} mu(z, x) M_z` restricted to the cell.
pub fn cell_module(cell: &[CoxeterElement], cache: &mut KlCache) -> Result<CellModule> {
    let idx = sorted_indices(cell, cache)?;
    let g = cache.group();
    let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(p, &i)| (i, p)).collect();
    let n = idx.len();
    let mut action = Vec::new();
    for slot in 0..g.generators().len() {
        let mut m = vec![vec![LaurentPoly::zero(); n]; n];
        for (col, &x) in idx.iter().enumerate() {
            if g.is_descent(x, slot, Side::Left) {
                m[col][col] = LaurentPoly::quantum_two();
                continue;
            }
            if let Some(&p) = pos.get(&g.left_mul(slot, x)) {
                m[p][col] = LaurentPoly::one();
            }
            for (z, h) in cache.row(x).expect("row ensured") {
                let z = *z as usize;
                let mu = h.coeff(1);
                if mu.is_zero() || !g.is_descent(z, slot, Side::Left) {
                    continue;
                }
                if let Some(&p) = pos.get(&z) {
                    m[p][col] = LaurentPoly::constant(mu);
                }
            }
        }
        action.push(m);
    }
    Ok(CellModule {
        basis: idx.iter().map(|&i| g.element(i).clone()).collect(),
        generators: g.generators().to_vec(),
        action,
    })
}
