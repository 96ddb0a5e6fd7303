//! Reproduction harness: every worked example recomputed and compared with
//! its stated value.

use cellgeom_core::catalog::{self, CatalogEntry};
use cellgeom_core::cells::{cell_module, cell_of_partition, rsk};
use cellgeom_core::coxeter::{parse_perm, parse_word, CoxeterElement, CoxeterSystem};
use cellgeom_core::hecke::{HeckeElt, KlCache};
use cellgeom_core::laurent::LaurentPoly;
use cellgeom_core::posbasis::{enumerate_bases, SearchConfig};
use cellgeom_core::schubert::{
    block_layout, rank_conditions, reduce_check_with, slice_chart, symbolic_minors, verify_embedding, KsTarget,
    ReduceKind,
};
use serde::Serialize;

/// One compared value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub location: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReproReport {
    pub version: String,
    pub seed: u64,
    pub samples: usize,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub records: Vec<CheckRecord>,
}

impl ReproReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

pub const GROUPS: [&str; 8] = ["hecke", "b2", "s4", "n4", "gl8", "gl12", "reduce", "gl13"];

struct Recorder {
    records: Vec<CheckRecord>,
}

impl Recorder {
    fn check(&mut self, id: &str, location: &str, expected: impl ToString, computed: impl ToString) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        self.records.push(CheckRecord {
            id: id.to_string(),
            location: location.to_string(),
            pass: expected == computed,
            expected,
            computed,
        });
    }

    fn fail(&mut self, id: &str, location: &str, expected: impl ToString, err: impl std::fmt::Display) {
        self.check(id, location, expected, format!("error: {err}"));
    }
}

fn entry(key: &str) -> &'static CatalogEntry {
    catalog::lookup(key).unwrap_or_else(|| panic!("catalog key {key}"))
}

fn perm(key: &str, n: usize) -> CoxeterElement {
    parse_perm(entry(key).value, n).expect("catalog permutation")
}

/// Catalog tableau `"1 5 / 2 6"` in the one-row-per-line layout.
pub fn catalog_layout(key: &str) -> String {
    entry(key).value.split(" / ").map(|r| format!("{r}\n")).collect()
}

fn hecke(r: &mut Recorder) {
    let loc = "KL generator normalization";
    let systems =
        [CoxeterSystem::type_a(3), CoxeterSystem::type_a(4), CoxeterSystem::type_b(2), CoxeterSystem::type_b(3)];
    let mut bad = Vec::new();
    for sys in systems.into_iter().map(|s| s.expect("small system")) {
        let mut cache = KlCache::new(sys).expect("small system");
        for s in sys.generators() {
            let g = sys.generator(s).expect("generator");
            let mut want = HeckeElt::standard(&g);
            want.add_term(&sys.identity(), &LaurentPoly::v()).expect("same system");
            if cache.kl_basis_elt(&g).ok() != Some(want) {
                bad.push(format!("{g}"));
            }
        }
    }
    let computed = if bad.is_empty() { "C_s = H_s + v H_id".to_string() } else { format!("differs at {}", bad.join(",")) };
    r.check("hecke.kl_generator", loc, "C_s = H_s + v H_id", computed);
}

fn b2(r: &mut Recorder) {
    let e = entry("b2.cell");
    let b2 = CoxeterSystem::type_b(2).expect("B2");
    let words: Vec<_> = e.value.split(' ').map(|w| parse_word(w).and_then(|w| b2.word_to_elt(&w))).collect();
    let cell: Vec<CoxeterElement> = match words.into_iter().collect() {
        Ok(c) => c,
        Err(err) => return r.fail("b2.count", e.location, 2, err),
    };
    let mut cache = KlCache::new(b2).expect("B2");
    let module = match cell_module(&cell, &mut cache) {
        Ok(m) => m,
        Err(err) => return r.fail("b2.count", e.location, 2, err),
    };
    let bases = enumerate_bases(&module, &SearchConfig::default());
    r.check("b2.count", e.location, 2, bases.len());
    let nontrivial: Vec<String> = bases
        .iter()
        .filter(|b| !b.is_trivial())
        .map(|b| {
            b.coeffs
                .iter()
                .map(|(&(i, j), m)| format!("M_{} gets {} M_{}", module.basis[j], m, module.basis[i]))
                .collect::<Vec<_>>()
                .join("; ")
        })
        .collect();
    let (s, sts) = (&cell[0], &cell[2]);
    r.check("b2.pattern", e.location, format!("M_{sts} gets 1 M_{s}"), nontrivial.join(" | "));
}

fn s4(r: &mut Recorder) {
    let loc = "S4 admissible basis counts";
    for (lambda, want) in [(vec![3, 1], 1), (vec![2, 1, 1], 2)] {
        let id = format!("s4.count.{}", lambda.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(","));
        let count = cell_of_partition(&lambda).and_then(|cell| {
            let mut cache = KlCache::new(CoxeterSystem::type_a(4)?)?;
            let module = cell_module(&cell, &mut cache)?;
            Ok(enumerate_bases(&module, &SearchConfig::default()).len())
        });
        match count {
            Ok(c) => r.check(&id, loc, want, c),
            Err(err) => r.fail(&id, loc, want, err),
        }
    }
}

fn n4(r: &mut Recorder) {
    let loc = entry("n4.x").location;
    let (x, y) = (perm("n4.x", 4), perm("n4.y", 4));
    let conds = rank_conditions(&y, true).expect("type A");
    let shown: Vec<String> = conds.iter().map(|c| format!("({},{},{})", c.a, c.b, c.bound)).collect();
    r.check("n4.conditions", loc, "(3,2,1)", shown.join(" "));
    let chart = slice_chart(&x).expect("type A");
    let minors: Vec<String> = conds
        .iter()
        .filter_map(|c| symbolic_minors(&chart, c, 4))
        .flatten()
        .map(|m| m.to_text(&chart))
        .collect();
    r.check("n4.minor", loc, "g31*g42 - g32*g41", minors.join(", "));
}

fn verify_record(r: &mut Recorder, target: KsTarget, samples: usize, seed: u64, loc: &str) {
    let rep = verify_embedding(target, samples, seed);
    let hist = |h: &std::collections::BTreeMap<usize, usize>| {
        h.iter().map(|(d, c)| format!("{d}x{c}")).collect::<Vec<_>>().join(",")
    };
    let id = target.name();
    r.check(&format!("{id}.inclusion"), loc, format!("{samples}/{samples}"), format!("{}/{samples}", rep.inclusion_pass));
    r.check(&format!("{id}.rejection"), loc, format!("{samples}/{samples}"), format!("{}/{samples}", rep.rejection_pass));
    let all8 = if samples == 0 { String::new() } else { format!("8x{samples}") };
    r.check(&format!("{id}.slice_tangent"), loc, &all8, hist(&rep.slice_tangent_dims));
    r.check(&format!("{id}.ks_tangent"), loc, &all8, hist(&rep.ks_tangent_dims));
    r.check(&format!("{id}.ks_tangent_origin"), loc, 16, rep.origin_ks_tangent_dim);
    r.check(&format!("{id}.failures"), loc, "none", if rep.failures.is_empty() { "none".into() } else { rep.failures.join("; ") });
}

fn gl8(r: &mut Recorder, samples: usize, seed: u64) {
    let loc = entry("gl8.u").location;
    let a8 = CoxeterSystem::type_a(8).expect("S8");
    let (u, v) = (perm("gl8.u", 8), perm("gl8.v", 8));
    let gens = parse_word(entry("gl8.u.generators").value).expect("catalog word");
    match a8.longest_parabolic_elt(&gens) {
        Ok(w) => r.check("gl8.u_parabolic", loc, u.to_string(), w.to_string()),
        Err(err) => r.fail("gl8.u_parabolic", loc, u.to_string(), err),
    }
    r.check("gl8.lengths", loc, "8 16", format!("{} {}", u.length(), v.length()));
    r.check("gl8.u_le_v", loc, true, u.bruhat_leq(&v).unwrap_or(false));
    match block_layout(KsTarget::Gl8) {
        Ok(l) => r.check("gl8.variables", loc, 20, l.chart.num_vars()),
        Err(err) => r.fail("gl8.variables", loc, 20, err),
    }
    verify_record(r, KsTarget::Gl8, samples, seed, loc);
}

fn gl12(r: &mut Recorder, samples: usize, seed: u64) {
    let loc = entry("gl12.x").location;
    let a12 = CoxeterSystem::type_a(12).expect("S12");
    let (x, y) = (perm("gl12.x", 12), perm("gl12.y", 12));
    r.check("gl12.lengths", loc, "22 30", format!("{} {}", x.length(), y.length()));
    r.check("gl12.x_le_y", loc, true, x.bruhat_leq(&y).unwrap_or(false));
    for (key, want) in [("gl12.x.word", &x), ("gl12.y.word", &y)] {
        let got = parse_word(entry(key).value).and_then(|w| a12.word_to_elt(&w));
        match got {
            Ok(g) => r.check(key, loc, want.to_string(), g.to_string()),
            Err(err) => r.fail(key, loc, want.to_string(), err),
        }
    }
    for (name, e) in [("x", &x), ("y", &y)] {
        let pair = rsk(e).expect("type A");
        r.check(&format!("gl12.{name}.P"), loc, catalog_layout(&format!("gl12.{name}.P")), pair.p.to_layout());
        r.check(&format!("gl12.{name}.Q"), loc, catalog_layout(&format!("gl12.{name}.Q")), pair.q.to_layout());
    }
    let same_p = rsk(&x).expect("type A").p == rsk(&y).expect("type A").p;
    r.check("gl12.same_right_cell", loc, true, same_p);
    match block_layout(KsTarget::Gl12) {
        Ok(l) => r.check("gl12.variables", loc, 44, l.chart.num_vars()),
        Err(err) => r.fail("gl12.variables", loc, 44, err),
    }
    verify_record(r, KsTarget::Gl12, samples, seed, loc);
}

fn reduce(r: &mut Recorder, samples: usize, seed: u64) {
    let loc = "GL8 realisation, block reductions";
    for kind in ReduceKind::ALL {
        let o = reduce_check_with(kind, samples, seed);
        let computed = match &o.counterexample {
            Some(_) => format!("counterexample after {} draws", o.draws),
            None if o.passed(samples) => "equivalent".to_string(),
            None => format!("only {} / {} samples per side", o.lhs_true.min(o.rhs_true), samples),
        };
        r.check(&format!("reduce.{}", kind.name()), loc, "equivalent", computed);
    }
}

fn gl13(r: &mut Recorder) {
    let loc = entry("gl13.x.word").location;
    let a13 = CoxeterSystem::type_a(13).expect("S13");
    let eval = |key: &str| parse_word(entry(key).value).and_then(|w| a13.word_to_elt(&w));
    match (eval("gl13.x.word"), eval("gl13.y.word")) {
        (Ok(x), Ok(y)) => {
            r.check("gl13.valid", loc, "13 13", format!("{} {}", x.degree(), y.degree()));
            let (px, py) = (rsk(&x).expect("type A").p, rsk(&y).expect("type A").p);
            r.check("gl13.same_right_cell", loc, true, px == py);
            r.check("gl13.x_le_y", loc, true, x.bruhat_leq(&y).unwrap_or(false));
        }
        (Err(err), _) | (_, Err(err)) => r.fail("gl13.valid", loc, "13 13", err),
    }
}

/// Runs every group, or only `only`. `samples` sets both the number of
/// embedding samples and the per-side count of each reduction check.
pub fn repro_all(seed: u64, samples: usize, only: Option<&str>) -> ReproReport {
    let mut r = Recorder { records: Vec::new() };
    let wanted = |g: &str| only.is_none_or(|o| o == g);
    if wanted("hecke") {
        hecke(&mut r);
    }
    if wanted("b2") {
        b2(&mut r);
    }
    if wanted("s4") {
        s4(&mut r);
    }
    if wanted("n4") {
        n4(&mut r);
    }
    if wanted("gl8") {
        gl8(&mut r, samples, seed);
    }
    if wanted("gl12") {
        gl12(&mut r, samples, seed);
    }
    if wanted("reduce") {
        reduce(&mut r, samples, seed);
    }
    if wanted("gl13") {
        gl13(&mut r);
    }
    let passed = r.records.iter().filter(|c| c.pass).count();
    ReproReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        seed,
        samples,
        total: r.records.len(),
        passed,
        failed: r.records.len() - passed,
        records: r.records,
    }
}
