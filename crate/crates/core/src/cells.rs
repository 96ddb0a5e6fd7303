//! Kazhdan–Lusztig cells, W-graphs, cell modules and the Robinson–Schensted
//! correspondence.
//!
//! Conventions: `x <=_L y` is generated by "`C_x` occurs in `C_s C_y`", so
//! left cells have constant right descent sets. In type A this means left
//! cells are classes of equal recording tableau `Q`, right cells classes of
//! equal insertion tableau `P`, and two-sided cells classes of equal shape.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::coxeter::{composition_generators, CoxeterElement, CoxeterSystem, Family, Side, MAX_ENUMERATED_ORDER};
use crate::hecke::KlCache;
use crate::{Error, Result};

mod module;
mod rsk;
mod scc;

pub use module::{cell_module, wgraph_of_cell, CellModule, WGraph};
pub use rsk::{rsk, Tableau, TableauPair};
pub use scc::tarjan;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellKind {
    Left,
    Right,
    TwoSided,
}

/// A partition of an enumerated group into cells of one kind.
#[derive(Clone, Debug)]
pub struct CellPartition {
    kind: CellKind,
    /// Group indices; each cell sorted ascending, cells sorted by first element.
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

impl CellPartition {
    pub fn kind(&self) -> CellKind {
        self.kind
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell_of(&self, index: usize) -> usize {
        self.cell_of[index]
    }

    pub fn same_cell(&self, x: usize, y: usize) -> bool {
        self.cell_of[x] == self.cell_of[y]
    }

    /// Cells as element lists, in increasing length then lexicographic order.
    pub fn elements(&self, cache: &KlCache) -> Vec<Vec<CoxeterElement>> {
        self.cells
            .iter()
            .map(|c| c.iter().map(|&i| cache.group().element(i).clone()).collect())
            .collect()
    }
}

/// Edges `y -> z` meaning `z <= y` in the preorder generated by one-sided
/// multiplication by the `C_s`.
fn push_side_edges(cache: &KlCache, side: Side, adj: &mut [Vec<usize>]) {
    let g = cache.group();
    for y in 0..g.len() {
        for slot in 0..g.generators().len() {
            let sy = g.mul_gen(slot, y, side);
            if g.length(sy) < g.length(y) {
                continue;
            }
            adj[y].push(sy);
            // C_s C_y = C_{sy} + sum_{z < y, sz < z} mu(z, y) C_z; for the
            // right side use h_{z,y} = h_{z^-1,y^-1}.
            let (row_owner, map): (usize, fn(&KlCache, usize) -> usize) = match side {
                Side::Left => (y, |_, z| z),
                Side::Right => (g.inverse(y), |c: &KlCache, z| c.group().inverse(z)),
            };
            let row = cache.row(row_owner).expect("complete KL table");
            for (z, h) in row {
                let z = map(cache, *z as usize);
                if !h.coeff(1).is_zero() && g.is_descent(z, slot, side) {
                    adj[y].push(z);
                }
            }
        }
    }
}

/// Adjacency lists of the left, right or two-sided KL preorder graph.
pub fn preorder_graph(cache: &mut KlCache, kind: CellKind) -> Vec<Vec<usize>> {
    cache.build_all();
    let mut adj = vec![Vec::new(); cache.group().len()];
    match kind {
        CellKind::Left => push_side_edges(cache, Side::Left, &mut adj),
        CellKind::Right => push_side_edges(cache, Side::Right, &mut adj),
        CellKind::TwoSided => {
            push_side_edges(cache, Side::Left, &mut adj);
            push_side_edges(cache, Side::Right, &mut adj);
        }
    }
    adj
}

/// Cells as strongly connected components of the preorder graph.
pub fn cells(cache: &mut KlCache, kind: CellKind) -> CellPartition {
    let adj = preorder_graph(cache, kind);
    let comp = tarjan(&adj);
    let mut by_comp: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &c) in comp.iter().enumerate() {
        by_comp.entry(c).or_default().push(i);
    }
    let mut cells: Vec<Vec<usize>> = by_comp.into_values().collect();
    cells.sort_by_key(|c| c[0]);
    let mut cell_of = vec![0; comp.len()];
    for (k, c) in cells.iter().enumerate() {
        for &i in c {
            cell_of[i] = k;
        }
    }
    CellPartition { kind, cells, cell_of }
}

pub fn left_cells(cache: &mut KlCache) -> Vec<Vec<CoxeterElement>> {
    cells(cache, CellKind::Left).elements(cache)
}

/// Whether `x` and `y` lie in the same cell. Type A reads the answer off the
/// Robinson–Schensted tableaux; type B builds the KL preorder.
pub fn same_cell(x: &CoxeterElement, y: &CoxeterElement, kind: CellKind) -> Result<bool> {
    if x.system() != y.system() {
        return Err(Error::SystemMismatch);
    }
    match x.family() {
        Family::A => {
            let (tx, ty) = (rsk(x)?, rsk(y)?);
            Ok(match kind {
                CellKind::Left => tx.q == ty.q,
                CellKind::Right => tx.p == ty.p,
                CellKind::TwoSided => tx.shape() == ty.shape(),
            })
        }
        Family::B => {
            let mut cache = KlCache::new(x.system())?;
            let part = cells(&mut cache, kind);
            Ok(part.same_cell(cache.index_of(x)?, cache.index_of(y)?))
        }
    }
}

/// All partitions of `n`, largest first in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Longest element of the standard parabolic subgroup of `S_n` attached to
/// `lambda` (see [`composition_generators`]).
pub fn partition_longest_element(lambda: &[usize]) -> Result<CoxeterElement> {
    let n = lambda.iter().sum();
    let sys = CoxeterSystem::type_a(n)?;
    sys.longest_parabolic_elt(&composition_generators(lambda, n)?)
}

/// The left cell of `S_n` containing the longest element `w_lambda` of the
/// parabolic subgroup attached to `lambda`. Its elements share the recording
/// tableau of `w_lambda`; its RSK shape is the transpose of `lambda`.
pub fn cell_of_partition(lambda: &[usize]) -> Result<Vec<CoxeterElement>> {
    if lambda.is_empty() || lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidPartition(format!("{lambda:?} is not weakly decreasing")));
    }
    let w_lambda = partition_longest_element(lambda)?;
    let sys = w_lambda.system();
    if sys.order() > MAX_ENUMERATED_ORDER {
        return Err(Error::GroupTooLarge(sys.order()));
    }
    let q = rsk(&w_lambda)?.q;
    let mut cell: Vec<CoxeterElement> =
        sys.elements().into_iter().filter(|w| rsk(w).map(|t| t.q == q).unwrap_or(false)).collect();
    cell.sort_by(|a, b| (a.length(), a).cmp(&(b.length(), b)));
    Ok(cell)
}
