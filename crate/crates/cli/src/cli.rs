//! Argument parsing and subcommand dispatch.

use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context};
use cellgeom_core::cells::{cell_of_partition, cells, rsk, wgraph_of_cell, CellKind};
use cellgeom_core::coxeter::{CoxeterElement, CoxeterSystem, Family};
use cellgeom_core::hecke::KlCache;
use cellgeom_core::posbasis::{report_candidates, SearchConfig};
use cellgeom_core::schubert::{
    rank_conditions, reduce_check_with, slice_chart, symbolic_minors, verify_embedding, KsTarget, ReduceKind,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::json;
use crate::repro::{repro_all, GROUPS};

#[derive(Parser, Debug)]
#[command(name = "cellgeom", version, about = "Kazhdan-Lusztig cells and Schubert slice computations")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyArg {
    A,
    B,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::B => Family::B,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum KindArg {
    Left,
    Right,
    TwoSided,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Kazhdan-Lusztig polynomials h_{x,w}.
    Kl {
        #[arg(long, value_enum, default_value = "a", ignore_case = true)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// A single pair `x,w`.
        #[arg(long, allow_hyphen_values = true)]
        pair: Option<String>,
    },
    /// Robinson-Schensted tableaux of a permutation in string notation.
    Rsk { perm: String },
    /// Left, right or two-sided cells.
    Cells {
        #[arg(long, value_enum, default_value = "a", ignore_case = true)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "left")]
        kind: KindArg,
    },
    /// W-graph of the left cell containing an element.
    Wgraph {
        #[arg(long, value_enum, default_value = "a", ignore_case = true)]
        family: FamilyArg,
        /// Rank; inferred from the element when omitted.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        cell: String,
    },
    /// Positive basis search in left cell modules.
    Posbasis {
        #[arg(long, value_enum, default_value = "a", ignore_case = true)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// Type A: only the left cell containing the longest element of W_lambda.
        #[arg(long)]
        partition: Option<String>,
        /// Only the left cell containing this element.
        #[arg(long, allow_hyphen_values = true)]
        cell: Option<String>,
        /// Largest exponent in a candidate coefficient.
        #[arg(long)]
        deg: Option<u32>,
        /// Largest integer coefficient.
        #[arg(long, default_value_t = 3)]
        coeff: u32,
    },
    /// Rank conditions and minors for a slice N_x ∩ Z_y.
    Slice {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// Only the essential conditions.
        #[arg(long)]
        essential: bool,
        /// Largest minor size printed symbolically.
        #[arg(long, default_value_t = 4)]
        max_minor: usize,
    },
    /// Kashiwara-Saito variety checks.
    Ks {
        #[command(subcommand)]
        action: KsAction,
    },
    /// Recompute every worked example and compare.
    Repro {
        /// Only `all` is accepted; kept for `repro all`.
        #[arg(default_value = "all")]
        which: String,
        #[arg(long)]
        only: Option<String>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum KsAction {
    /// Sampled verification of a realisation as a Schubert slice.
    Verify {
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Samples per side for the block reductions (0 skips them).
        #[arg(long, default_value_t = 1000)]
        reduce_samples: usize,
    },
    /// Two-way sampling of one block reduction, or all of them.
    Reduce {
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Text for stdout and whether every check passed.
pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }

    fn json(v: &Value) -> Self {
        Self::ok(serde_json::to_string_pretty(v).expect("serializable"))
    }
}

/// Errors here are usage errors: bad elements, partitions or names.
pub fn run(cli: &Cli) -> anyhow::Result<Output> {
    match &cli.command {
        Command::Kl { family, n, pair } => kl(*family, *n, pair.as_deref()),
        Command::Rsk { perm } => rsk_cmd(perm, cli.json),
        Command::Cells { family, n, kind } => cells_cmd(*family, *n, *kind),
        Command::Wgraph { family, n, cell } => wgraph_cmd(*family, *n, cell),
        Command::Posbasis { family, n, partition, cell, deg, coeff } => {
            posbasis_cmd(*family, *n, partition.as_deref(), cell.as_deref(), *deg, *coeff, cli.json)
        }
        Command::Slice { n, x, y, essential, max_minor } => slice_cmd(*n, x, y, *essential, *max_minor, cli.json),
        Command::Ks { action } => ks_cmd(action, cli.json),
        Command::Repro { which, only, seed, samples } => {
            if which != "all" {
                bail!("unknown repro set {which:?}; use `repro all`");
            }
            if let Some(o) = only {
                if !GROUPS.contains(&o.as_str()) {
                    bail!("unknown group {o:?}; expected one of {}", GROUPS.join(", "));
                }
            }
            let report = repro_all(*seed, *samples, only.as_deref());
            let ok = report.all_pass();
            let text = if cli.json {
                serde_json::to_string_pretty(&report)?
            } else {
                let mut s = String::new();
                for r in &report.records {
                    let mark = if r.pass { "PASS" } else { "FAIL" };
                    writeln!(s, "{mark} {:<28} [{}] expected {:?}, computed {:?}", r.id, r.location, r.expected, r.computed)?;
                }
                write!(s, "{} / {} checks passed (seed {})", report.passed, report.total, report.seed)?;
                s
            };
            Ok(Output { text, ok })
        }
    }
}

fn system(family: FamilyArg, n: usize) -> anyhow::Result<CoxeterSystem> {
    Ok(CoxeterSystem::new(family.into(), n)?)
}

fn element(sys: &CoxeterSystem, s: &str) -> anyhow::Result<CoxeterElement> {
    sys.parse(s.trim()).with_context(|| format!("cannot read {s:?} as an element of {:?}{}", sys.family(), sys.degree()))
}

fn kl(family: FamilyArg, n: usize, pair: Option<&str>) -> anyhow::Result<Output> {
    let sys = system(family, n)?;
    let mut cache = KlCache::new(sys)?;
    if let Some(p) = pair {
        let (x, w) = p.split_once(',').ok_or_else(|| anyhow!("--pair expects `x,w`"))?;
        let (x, w) = (element(&sys, x)?, element(&sys, w)?);
        let h = cache.kl_poly(&x, &w)?;
        return Ok(Output::json(&json!([json::kl_row(&x, &w, &h)])));
    }
    cache.build_all_parallel();
    let g = cache.group();
    let mut rows = Vec::new();
    for w in 0..g.len() {
        for (x, h) in cache.row(w).unwrap_or(&[]) {
            rows.push(json::kl_row(g.element(*x as usize), g.element(w), h));
        }
    }
    Ok(Output::json(&Value::Array(rows)))
}

fn rsk_cmd(perm: &str, as_json: bool) -> anyhow::Result<Output> {
    let n = perm.trim().chars().count();
    let sys = CoxeterSystem::type_a(n)?;
    let x = element(&sys, perm)?;
    let pair = rsk(&x)?;
    if as_json {
        return Ok(Output::json(&json!({
            "perm": json::elt(&x),
            "shape": pair.shape(),
            "P": json::tableau(&pair.p),
            "Q": json::tableau(&pair.q),
        })));
    }
    Ok(Output::ok(format!("P =\n{}Q =\n{}", pair.p, pair.q).trim_end().to_string()))
}

fn cells_cmd(family: FamilyArg, n: usize, kind: KindArg) -> anyhow::Result<Output> {
    let mut cache = KlCache::new(system(family, n)?)?;
    cache.build_all_parallel();
    let kind = match kind {
        KindArg::Left => CellKind::Left,
        KindArg::Right => CellKind::Right,
        KindArg::TwoSided => CellKind::TwoSided,
    };
    let part = cells(&mut cache, kind);
    let name = match kind {
        CellKind::Left => "left",
        CellKind::Right => "right",
        CellKind::TwoSided => "two-sided",
    };
    Ok(Output::json(&json!({
        "family": format!("{family:?}"),
        "n": n,
        "kind": name,
        "cells": json::partition(&part, &cache),
    })))
}

fn infer_rank(s: &str) -> usize {
    s.chars().filter(|c| *c != '-').count()
}

fn left_cell_of(cache: &mut KlCache, x: &CoxeterElement) -> anyhow::Result<Vec<CoxeterElement>> {
    let idx = cache.index_of(x)?;
    cache.build_all_parallel();
    let part = cells(cache, CellKind::Left);
    let members = &part.cells()[part.cell_of(idx)];
    Ok(members.iter().map(|&i| cache.group().element(i).clone()).collect())
}

fn wgraph_cmd(family: FamilyArg, n: Option<usize>, cell: &str) -> anyhow::Result<Output> {
    let sys = system(family, n.unwrap_or_else(|| infer_rank(cell)))?;
    let x = element(&sys, cell)?;
    let mut cache = KlCache::new(sys)?;
    let members = left_cell_of(&mut cache, &x)?;
    let g = wgraph_of_cell(&members, &mut cache)?;
    Ok(Output::json(&json::wgraph(&g)))
}

fn parse_partition(s: &str) -> anyhow::Result<Vec<usize>> {
    s.split(',').map(|p| p.trim().parse::<usize>().with_context(|| format!("bad partition {s:?}"))).collect()
}

fn posbasis_cmd(
    family: FamilyArg,
    n: usize,
    partition: Option<&str>,
    cell: Option<&str>,
    deg: Option<u32>,
    coeff: u32,
    as_json: bool,
) -> anyhow::Result<Output> {
    let sys = system(family, n)?;
    let target: Option<Vec<CoxeterElement>> = match (partition, cell) {
        (Some(_), Some(_)) => bail!("give at most one of --partition and --cell"),
        (Some(p), None) => {
            if family != FamilyArg::A {
                bail!("--partition needs type A");
            }
            let lambda = parse_partition(p)?;
            if lambda.iter().sum::<usize>() != n {
                bail!("partition {p} is not a partition of {n}");
            }
            Some(cell_of_partition(&lambda)?)
        }
        (None, Some(c)) => {
            let x = element(&sys, c)?;
            Some(left_cell_of(&mut KlCache::new(sys)?, &x)?)
        }
        (None, None) => None,
    };
    let cfg = SearchConfig { max_degree: deg, max_coeff: coeff };
    let mut reports = report_candidates(sys, &cfg)?;
    if let Some(t) = &target {
        reports.retain(|r| r.cell.iter().all(|e| t.contains(e)) && r.cell.len() == t.len());
    }
    if as_json {
        return Ok(Output::json(&Value::Array(reports.iter().map(json::cell_report).collect())));
    }
    let mut s = String::new();
    for r in &reports {
        let cell: Vec<String> = r.cell.iter().map(|e| e.to_string()).collect();
        writeln!(s, "cell {} [{}]: {} admissible basis(es)", r.label(), cell.join(" "), r.count)?;
        for p in &r.patterns {
            let terms: Vec<String> = p.iter().map(|(x, y, m)| format!("m({x},{y}) = {m}")).collect();
            writeln!(s, "  {}", terms.join(", "))?;
        }
    }
    Ok(Output::ok(s.trim_end().to_string()))
}

fn slice_cmd(n: usize, x: &str, y: &str, essential: bool, max_minor: usize, as_json: bool) -> anyhow::Result<Output> {
    let sys = CoxeterSystem::type_a(n)?;
    let (x, y) = (element(&sys, x)?, element(&sys, y)?);
    if !x.bruhat_leq(&y)? {
        eprintln!("warning: {x} is not below {y} in the Bruhat order; the slice is empty");
    }
    let chart = slice_chart(&x)?;
    let mut conds = rank_conditions(&y, essential)?;
    if !essential {
        conds.retain(|c| !c.is_vacuous(n));
    }
    let names: Vec<String> = (0..chart.num_vars()).map(|v| chart.var_name(v)).collect();
    let minors: Vec<Option<Vec<String>>> = conds
        .iter()
        .map(|c| symbolic_minors(&chart, c, max_minor).map(|ms| ms.iter().map(|m| m.to_text(&chart)).collect()))
        .collect();
    if as_json {
        let conditions: Vec<Value> = conds
            .iter()
            .zip(&minors)
            .map(|(c, m)| json!({ "a": c.a, "b": c.b, "bound": c.bound, "minors": m }))
            .collect();
        return Ok(Output::json(&json!({
            "x": json::elt(&x),
            "y": json::elt(&y),
            "variables": names,
            "conditions": conditions,
        })));
    }
    let mut s = String::new();
    writeln!(s, "variables ({}): {}", names.len(), names.join(" "))?;
    writeln!(s, "conditions ({}):", conds.len())?;
    for (c, m) in conds.iter().zip(&minors) {
        writeln!(s, "  {c}")?;
        match m {
            Some(ms) => {
                for t in ms {
                    writeln!(s, "    {t} = 0")?;
                }
            }
            None => writeln!(s, "    ({}-minors not expanded)", c.bound + 1)?,
        }
    }
    Ok(Output::ok(s.trim_end().to_string()))
}

fn ks_cmd(action: &KsAction, as_json: bool) -> anyhow::Result<Output> {
    match action {
        KsAction::Verify { target, samples, seed, reduce_samples } => {
            let t = KsTarget::parse(target).ok_or_else(|| anyhow!("unknown target {target:?}; use gl8 or gl12"))?;
            let rep = verify_embedding(t, *samples, *seed);
            let reductions: Vec<(String, bool)> = if *reduce_samples == 0 {
                Vec::new()
            } else {
                ReduceKind::ALL
                    .into_iter()
                    .map(|k| (k.name().to_string(), reduce_check_with(k, *reduce_samples, *seed).passed(*reduce_samples)))
                    .collect()
            };
            let ok = rep.passed() && reductions.iter().all(|(_, p)| *p);
            if as_json {
                return Ok(Output { ok, ..Output::json(&json::verification(&rep, &reductions)) });
            }
            let mut s = String::new();
            writeln!(s, "target {} ({} variables, {} essential conditions), seed {}", t, rep.variables, rep.conditions.len(), rep.seed)?;
            writeln!(s, "inclusion {}/{}", rep.inclusion_pass, rep.samples)?;
            writeln!(s, "rejection {}/{}", rep.rejection_pass, rep.samples)?;
            writeln!(s, "slice tangent dims {:?}", rep.slice_tangent_dims)?;
            writeln!(s, "ks tangent dims {:?}", rep.ks_tangent_dims)?;
            writeln!(s, "at the origin: slice {}, ks {}", rep.origin_slice_tangent_dim, rep.origin_ks_tangent_dim)?;
            for (k, p) in &reductions {
                writeln!(s, "reduction {k}: {}", if *p { "equivalent" } else { "FAILED" })?;
            }
            for f in &rep.failures {
                writeln!(s, "failure: {f}")?;
            }
            write!(s, "{}", if ok { "PASS" } else { "FAIL" })?;
            Ok(Output { text: s, ok })
        }
        KsAction::Reduce { kind, samples, seed } => {
            let kinds = match kind {
                Some(k) => vec![ReduceKind::parse(k).ok_or_else(|| {
                    anyhow!("unknown reduction {k:?}; use rank23, rank12, rank34 or rank1234")
                })?],
                None => ReduceKind::ALL.to_vec(),
            };
            let outcomes: Vec<_> = kinds.iter().map(|&k| reduce_check_with(k, *samples, *seed)).collect();
            let ok = outcomes.iter().all(|o| o.passed(*samples));
            if as_json {
                let v = Value::Array(outcomes.iter().map(|o| json::reduce_outcome(o, *samples)).collect());
                return Ok(Output { ok, ..Output::json(&v) });
            }
            let mut s = String::new();
            for o in &outcomes {
                let verdict = if o.passed(*samples) { "equivalent" } else { "FAILED" };
                writeln!(s, "{}: {verdict} ({} draws, {} lhs, {} rhs)", o.kind, o.draws, o.lhs_true, o.rhs_true)?;
            }
            Ok(Output { text: s.trim_end().to_string(), ok })
        }
    }
}
