//! Exhaustive checks of the level-distribution identities, producing
//! structured reports.
//!
//! Every check computes both sides of the identity it reports on. Brute
//! force always walks the tree of matchings; the other side is a closed form,
//! a similarity key or a second statistic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::counting::{binomial, catalan, double_factorial_odd, factorial, level_size};
use crate::dyck::{enumerate_dyck_paths, to_dyck, DyckPath, Profile};
use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec, Preset};
use crate::limits::Limits;
use crate::matching::{enumerate_matchings, par_enumerate_matchings, par_level, Matching};
use crate::multiset::{par_collect, Multiset};
use crate::sequence::{level_distribution, DistributionMethod};
use crate::similarity::{
    count_classes, cr_class_count_formula, cr_positive_class_count_formula, crossing_sequence,
    mod2_classes, ne_class_count_formula, ne_positive_class_count_formula, nesting_sequence,
    similarity_key, Mod2Stat,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Warn,
    Fail,
}

impl Status {
    pub fn from_ok(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_fail(self) -> bool {
        self == Status::Fail
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Warn => "WARN",
            Status::Fail => "FAIL",
        })
    }
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub id: String,
    pub params: Value,
    pub status: Status,
    pub details: Value,
    pub counterexamples: Vec<String>,
    pub runtime_ms: u64,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report with timing zeroed, for byte-level comparisons.
    pub fn without_timing(&self) -> Report {
        Report { runtime_ms: 0, ..self.clone() }
    }
}

struct Outcome {
    status: Status,
    details: Value,
    counterexamples: Vec<String>,
}

impl Outcome {
    fn new(ok: bool, details: Value) -> Self {
        Outcome { status: Status::from_ok(ok), details, counterexamples: Vec::new() }
    }

    fn with_counterexamples(mut self, ce: impl IntoIterator<Item = String>) -> Self {
        self.counterexamples.extend(ce);
        self
    }
}

fn timed(id: &str, params: Value, run: impl FnOnce() -> Result<Outcome>) -> Result<Report> {
    let start = Instant::now();
    let outcome = run()?;
    Ok(Report {
        id: id.to_string(),
        params,
        status: outcome.status,
        details: outcome.details,
        counterexamples: outcome.counterexamples,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

fn guard_full(limits: &Limits, n: usize) -> Result<()> {
    limits.guard(&format!("enumeration of matchings on {} points", 2 * n), &double_factorial_odd(n))
}

fn guard_pairwise(limits: &Limits, n: usize) -> Result<()> {
    limits.guard_value("pairwise check size n", n, limits.max_pairwise_n)
}

fn guard_depth(limits: &Limits, depth: usize) -> Result<()> {
    limits.guard_value("tree depth", depth, limits.max_depth)
}

fn multiset_json(m: &Multiset<GroupElement>) -> Value {
    Value::Array(m.iter().map(|(e, &k)| json!([e, k])).collect())
}

/// Result of comparing two subtrees level by level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem1Outcome {
    /// Levels 0 and 1 agree.
    pub premise: bool,
    /// Levels `0..=depth` agree, by brute force.
    pub conclusion: bool,
    /// The similarity keys agree.
    pub key_criterion: bool,
    pub levels_equal: Vec<bool>,
}

impl Theorem1Outcome {
    /// Premise without conclusion, or a key decision at odds with the premise.
    pub fn is_violation(&self) -> bool {
        (self.premise && !self.conclusion) || self.premise != self.key_criterion
    }
}

/// Compares `s_{α,β}` below `m` with `s_{α,β}` (or `s_{β,α}` when
/// `swapped`) below `n`, on levels `0..=depth`.
pub fn theorem1_outcome(
    m: &Matching,
    n: &Matching,
    spec: &GroupSpec,
    swapped: bool,
    depth: usize,
    limits: &Limits,
) -> Result<Theorem1Outcome> {
    if m.n() != n.n() {
        return Err(Error::SizeMismatch { left: m.n(), right: n.n() });
    }
    guard_depth(limits, depth)?;
    let other = if swapped { spec.swapped() } else { spec.clone() };
    let top = depth.max(1);
    let mut levels_equal = Vec::with_capacity(top + 1);
    for l in 0..=top {
        let a = level_distribution(m, l, spec, DistributionMethod::Brute, limits)?;
        let b = level_distribution(n, l, &other, DistributionMethod::Brute, limits)?;
        levels_equal.push(a == b);
    }
    let premise = levels_equal[0] && levels_equal[1];
    let conclusion = levels_equal[..=depth].iter().all(|&e| e);
    let key_criterion = similarity_key(m, spec) == similarity_key(n, &other);
    levels_equal.truncate(depth + 1);
    Ok(Theorem1Outcome { premise, conclusion, key_criterion, levels_equal })
}

pub fn check_theorem1(
    m: &Matching,
    n: &Matching,
    spec: &GroupSpec,
    swapped: bool,
    depth: usize,
    limits: &Limits,
) -> Result<Report> {
    let params = json!({
        "m": m.to_string(),
        "n": n.to_string(),
        "spec": spec,
        "swapped": swapped,
        "depth": depth,
    });
    timed("theorem1", params, || {
        let o = theorem1_outcome(m, n, spec, swapped, depth, limits)?;
        let details = json!({
            "premise_holds": o.premise,
            "conclusion_holds": o.conclusion,
            "key_criterion": o.key_criterion,
            "levels_equal": o.levels_equal,
        });
        let out = Outcome::new(!o.is_violation(), details);
        Ok(if o.is_violation() {
            out.with_counterexamples([m.to_string(), n.to_string()])
        } else {
            out
        })
    })
}

/// Named checks understood by [`check_named`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckId {
    Desainte,
    Symmetric,
    CrEqualNe,
    CrEqualCr,
    Camel,
    CrMneN,
    ModTwo,
    RiordanParity,
    ClassCounts,
    Oeis,
    Figures,
    Theorem1,
    Permutational,
}

impl CheckId {
    pub const ALL: [CheckId; 13] = [
        CheckId::Desainte,
        CheckId::Symmetric,
        CheckId::CrEqualNe,
        CheckId::CrEqualCr,
        CheckId::Camel,
        CheckId::CrMneN,
        CheckId::ModTwo,
        CheckId::RiordanParity,
        CheckId::ClassCounts,
        CheckId::Oeis,
        CheckId::Figures,
        CheckId::Theorem1,
        CheckId::Permutational,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Desainte => "desainte",
            CheckId::Symmetric => "symmetric",
            CheckId::CrEqualNe => "crequalne",
            CheckId::CrEqualCr => "crequalcr",
            CheckId::Camel => "camel",
            CheckId::CrMneN => "crMneN",
            CheckId::ModTwo => "modtwo",
            CheckId::RiordanParity => "riordan_parity",
            CheckId::ClassCounts => "class_counts",
            CheckId::Oeis => "oeis",
            CheckId::Figures => "figures",
            CheckId::Theorem1 => "theorem1",
            CheckId::Permutational => "permutational",
        }
    }

    /// Default `(n, depth)`.
    pub fn defaults(self) -> (usize, usize) {
        match self {
            CheckId::Desainte => (7, 0),
            CheckId::Symmetric => (6, 0),
            CheckId::CrEqualNe => (2, 3),
            CheckId::CrEqualCr => (3, 3),
            CheckId::Camel => (3, 3),
            CheckId::CrMneN => (4, 2),
            CheckId::ModTwo => (7, 0),
            CheckId::RiordanParity => (7, 0),
            CheckId::ClassCounts => (7, 0),
            CheckId::Oeis => (6, 0),
            CheckId::Figures => (0, 0),
            CheckId::Theorem1 => (3, 3),
            CheckId::Permutational => (6, 0),
        }
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Optional overrides for a check's size parameters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckParams {
    pub n: Option<usize>,
    pub depth: Option<usize>,
}

/// Runs the check named `id`.
pub fn check_named(id: &str, params: CheckParams, limits: &Limits) -> Result<Report> {
    run_check(id.parse()?, params, limits)
}

pub fn run_check(id: CheckId, params: CheckParams, limits: &Limits) -> Result<Report> {
    let (dn, dd) = id.defaults();
    let n = params.n.unwrap_or(dn);
    let depth = params.depth.unwrap_or(dd);
    let pj = match id {
        CheckId::Figures => json!({}),
        CheckId::CrEqualNe | CheckId::CrEqualCr => json!({ "depth": depth }),
        CheckId::Camel | CheckId::CrMneN | CheckId::Theorem1 => json!({ "n": n, "depth": depth }),
        _ => json!({ "n": n }),
    };
    timed(id.name(), pj, || match id {
        CheckId::Desainte => desainte(n, limits),
        CheckId::Symmetric => symmetric(n, limits),
        CheckId::CrEqualNe => crequalne(depth, limits),
        CheckId::CrEqualCr => crequalcr(depth, limits),
        CheckId::Camel => camel(n, depth, limits),
        CheckId::CrMneN => cr_m_ne_n(n, depth, limits),
        CheckId::ModTwo => modtwo(n, limits),
        CheckId::RiordanParity => riordan_parity(n, limits),
        CheckId::ClassCounts => class_counts(n, limits),
        CheckId::Oeis => oeis(n, limits),
        CheckId::Figures => Ok(figures()),
        CheckId::Theorem1 => theorem1_exhaustive(n, depth, limits),
        CheckId::Permutational => permutational(n, limits),
    })
}

/// Every check with its default parameters, in [`CheckId::ALL`] order.
pub fn run_all(limits: &Limits) -> Vec<Result<Report>> {
    CheckId::ALL.par_iter().map(|&id| run_check(id, CheckParams::default(), limits)).collect()
}

/// `(cr, ne) → (count, least witness)` over `ℳ(n)`.
fn joint_histogram(n: usize) -> BTreeMap<(u64, u64), (u64, Matching)> {
    type Hist = BTreeMap<(u64, u64), (u64, Matching)>;
    fn add(acc: &mut Hist, key: (u64, u64), count: u64, witness: Matching) {
        acc.entry(key)
            .and_modify(|(c, w)| {
                *c += count;
                if witness < *w {
                    *w = witness.clone();
                }
            })
            .or_insert((count, witness));
    }
    par_enumerate_matchings(n)
        .fold(BTreeMap::new, |mut acc: Hist, m| {
            let cn = m.cross_nest();
            add(&mut acc, (cn.cr, cn.ne), 1, m);
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, (c, w)) in b {
                add(&mut a, k, c, w);
            }
            a
        })
}

fn marginal(hist: &BTreeMap<(u64, u64), (u64, Matching)>, pick: fn(&(u64, u64)) -> u64) -> BTreeMap<u64, u64> {
    let mut out = BTreeMap::new();
    for (k, (c, _)) in hist {
        *out.entry(pick(k)).or_insert(0) += c;
    }
    out
}

fn histogram_json(h: &BTreeMap<u64, u64>) -> Value {
    Value::Array(h.iter().map(|(k, c)| json!([k, c])).collect())
}

fn desainte(n: usize, limits: &Limits) -> Result<Outcome> {
    guard_full(limits, n)?;
    let hist = joint_histogram(n);
    let cr = marginal(&hist, |k| k.0);
    let ne = marginal(&hist, |k| k.1);
    let zero_cr = cr.get(&0).copied().unwrap_or(0);
    let zero_ne = ne.get(&0).copied().unwrap_or(0);
    let cat = catalan(n);
    let ok = cr == ne && BigUint::from(zero_cr) == cat && BigUint::from(zero_ne) == cat;
    let bad: BTreeSet<u64> = cr.keys().chain(ne.keys()).filter(|k| cr.get(k) != ne.get(k)).copied().collect();
    let witnesses = hist
        .iter()
        .filter(|((c, e), _)| bad.contains(c) || bad.contains(e))
        .map(|(_, (_, w))| w.to_string());
    Ok(Outcome::new(
        ok,
        json!({
            "cr_histogram": histogram_json(&cr),
            "ne_histogram": histogram_json(&ne),
            "noncrossing": zero_cr,
            "nonnesting": zero_ne,
            "catalan": cat.to_string(),
        }),
    )
    .with_counterexamples(witnesses))
}

fn symmetric(n: usize, limits: &Limits) -> Result<Outcome> {
    guard_full(limits, n)?;
    let hist = joint_histogram(n);
    let mut asym = Vec::new();
    for (&(c, e), (count, w)) in &hist {
        let mirror = hist.get(&(e, c)).map_or(0, |x| x.0);
        if mirror != *count {
            asym.push(w.to_string());
        }
    }
    let table: Vec<Value> = hist.iter().map(|(&(c, e), (k, _))| json!([c, e, k])).collect();
    Ok(Outcome::new(asym.is_empty(), json!({ "joint_histogram": table, "asymmetric_cells": asym.len() }))
        .with_counterexamples(asym))
}

/// Brute-force distributions of a statistic on levels `0..=depth`.
fn level_profile(
    m: &Matching,
    depth: usize,
    stat: &(dyn Fn(&Matching) -> GroupElement + Sync),
) -> Vec<Multiset<GroupElement>> {
    (0..=depth).map(|l| par_collect(par_level(m, l).map(|c| stat(&c)))).collect()
}

fn pair_levels(
    m: &Matching,
    n: &Matching,
    depth: usize,
    stat_m: &(dyn Fn(&Matching) -> GroupElement + Sync),
    stat_n: &(dyn Fn(&Matching) -> GroupElement + Sync),
    limits: &Limits,
) -> Result<(Vec<bool>, Value)> {
    guard_depth(limits, depth)?;
    limits.guard("level", &level_size(m.n(), depth))?;
    let a = level_profile(m, depth, stat_m);
    let b = level_profile(n, depth, stat_n);
    let eq: Vec<bool> = a.iter().zip(&b).map(|(x, y)| x == y).collect();
    let per_level: Vec<Value> = a
        .iter()
        .zip(&b)
        .map(|(x, y)| json!({ "left": multiset_json(x), "right": multiset_json(y) }))
        .collect();
    Ok((eq, Value::Array(per_level)))
}

fn cr_el(m: &Matching) -> GroupElement {
    GroupElement(vec![m.crossings() as i64])
}

fn ne_el(m: &Matching) -> GroupElement {
    GroupElement(vec![m.nestings() as i64])
}

fn ca_el(m: &Matching) -> GroupElement {
    GroupElement(vec![m.camels() as i64])
}

fn crequalne(depth: usize, limits: &Limits) -> Result<Outcome> {
    let m = Matching::nested(2);
    let n = Matching::adjacent(2);
    let (eq, levels) = pair_levels(&m, &n, depth.max(1), &cr_el, &ne_el, limits)?;
    let children: Vec<u64> = {
        let mut v: Vec<u64> = m.children().iter().map(Matching::crossings).collect();
        v.sort_unstable();
        v
    };
    let ok = eq.iter().all(|&e| e) && children == [0, 0, 1, 1, 2];
    Ok(Outcome::new(
        ok,
        json!({ "m": m.to_string(), "n": n.to_string(), "levels_equal": eq, "level1_cr_of_m": children, "levels": levels }),
    ))
}

fn crequalcr(depth: usize, limits: &Limits) -> Result<Outcome> {
    let m: Matching = "1-2,3-5,4-6".parse()?;
    let n: Matching = "1-3,2-4,5-6".parse()?;
    let (eq, levels) = pair_levels(&m, &n, depth.max(1), &cr_el, &cr_el, limits)?;
    let mut level1: Vec<u64> = m.children().iter().map(Matching::crossings).collect();
    level1.sort_unstable();
    let ok = eq.iter().all(|&e| e) && level1 == [1, 1, 1, 2, 2, 2, 3];
    Ok(Outcome::new(
        ok,
        json!({ "m": m.to_string(), "n": n.to_string(), "levels_equal": eq, "level1_cr": level1, "levels": levels }),
    ))
}

fn camel(n: usize, depth: usize, limits: &Limits) -> Result<Outcome> {
    guard_pairwise(limits, n)?;
    guard_depth(limits, depth)?;
    limits.guard("level", &level_size(n, depth))?;
    let all: Vec<Matching> = enumerate_matchings(n).collect();
    let top = depth.max(1);
    let profiles: Vec<Vec<Multiset<GroupElement>>> =
        all.par_iter().map(|m| level_profile(m, top, &ca_el)).collect();
    let mut violations = Vec::new();
    let mut premise_pairs = 0u64;
    for (i, a) in profiles.iter().enumerate() {
        for (j, b) in profiles.iter().enumerate() {
            if a[0] == b[0] && a[1] == b[1] {
                premise_pairs += 1;
                if a[..=depth] != b[..=depth] {
                    violations.push(format!("{} | {}", all[i], all[j]));
                }
            }
        }
    }
    // ca is determined by cr + ne on each level, so the (1,1)-weighted key decides similarity.
    let camel_spec = Preset::Camel.spec();
    let mut key_mismatch = 0u64;
    for (i, a) in all.iter().enumerate() {
        for (j, b) in all.iter().enumerate() {
            let by_key = similarity_key(a, &camel_spec) == similarity_key(b, &camel_spec);
            let by_levels = profiles[i][..2] == profiles[j][..2];
            key_mismatch += u64::from(by_key != by_levels);
        }
    }
    let camel_free: BTreeSet<&Matching> = all.iter().filter(|m| m.camels() == 0).collect();
    let permutational: BTreeSet<&Matching> = all.iter().filter(|m| m.is_permutational()).collect();
    let ok = violations.is_empty() && key_mismatch == 0 && camel_free == permutational;
    Ok(Outcome::new(
        ok,
        json!({
            "pairs": all.len() * all.len(),
            "premise_pairs": premise_pairs,
            "violations": violations.len(),
            "key_mismatches": key_mismatch,
            "camel_free": camel_free.len(),
            "permutational": permutational.len(),
        }),
    )
    .with_counterexamples(violations))
}

fn cr_m_ne_n(n: usize, depth: usize, limits: &Limits) -> Result<Outcome> {
    guard_pairwise(limits, n)?;
    let cr = Preset::Cr.spec();
    let ne = Preset::Ne.spec();
    let all: Vec<Matching> = enumerate_matchings(n).collect();
    let cr_keys: Vec<_> = all.iter().map(|m| similarity_key(m, &cr)).collect();
    let ne_keys: Vec<_> = all.iter().map(|m| similarity_key(m, &ne)).collect();
    let mut found = Vec::new();
    for (i, kc) in cr_keys.iter().enumerate() {
        for (j, kn) in ne_keys.iter().enumerate() {
            if kc == kn {
                found.push((all[i].clone(), all[j].clone()));
            }
        }
    }
    let expected = (Matching::nested(n), Matching::adjacent(n));
    let unique = found.len() == 1 && found[0] == expected;
    let (eq, _) = pair_levels(&expected.0, &expected.1, depth.max(1), &cr_el, &ne_el, limits)?;
    let ok = unique && eq.iter().all(|&e| e);
    let ce = if unique { Vec::new() } else { found.iter().map(|(a, b)| format!("{a} | {b}")).collect() };
    Ok(Outcome::new(
        ok,
        json!({
            "pairs_checked": all.len() * all.len(),
            "matching_pairs": found.len(),
            "expected": [expected.0.to_string(), expected.1.to_string()],
            "levels_equal": eq,
        }),
    )
    .with_counterexamples(ce))
}

fn modtwo(n: usize, limits: &Limits) -> Result<Outcome> {
    guard_full(limits, n)?;
    let cr2 = mod2_classes(n, Mod2Stat::Cr2, limits)?;
    let ne2 = mod2_classes(n, Mod2Stat::Ne2, limits)?;
    let ok = cr2.consistent() && ne2.consistent() && cr2.brute_sizes.is_some() && ne2.brute_sizes.is_some();
    Ok(Outcome::new(ok, json!({ "cr2": cr2, "ne2": ne2 })))
}

fn riordan_parity(n: usize, limits: &Limits) -> Result<Outcome> {
    guard_full(limits, n)?;
    let (even, odd) = par_enumerate_matchings(n)
        .map(|m| if m.crossings() % 2 == 0 { (1u64, 0u64) } else { (0, 1) })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    let diff = even as i64 - odd as i64;
    Ok(Outcome::new(diff == 1, json!({ "even": even, "odd": odd, "difference": diff })))
}

fn class_counts(n: usize, limits: &Limits) -> Result<Outcome> {
    guard_full(limits, n)?;
    let mut rows = Vec::new();
    let mut ok = true;
    let mut warning = None;
    for k in 1..=n {
        let cr = count_classes(k, &Preset::Cr.spec(), false, limits)?;
        let ne = count_classes(k, &Preset::Ne.spec(), false, limits)?;
        let (fcr, fne) = (cr_class_count_formula(k), ne_class_count_formula(k));
        ok &= BigUint::from(cr) == fcr && BigUint::from(ne) == fne;
        rows.push(json!({
            "n": k,
            "cr_brute": cr,
            "cr_formula": fcr.to_string(),
            "ne_brute": ne,
            "ne_formula": fne.to_string(),
        }));
        if k == 6 && cr as u64 != CR_CLASSES_QUOTED_N6 {
            warning = Some(format!(
                "quoted cr class count {CR_CLASSES_QUOTED_N6} for n = 6 differs from the computed {cr} (brute force and closed form agree on {cr})"
            ));
        }
    }
    let mut out = Outcome::new(ok, json!({ "rows": rows }));
    if let Some(w) = warning {
        out.details["warning"] = json!(w);
        if ok {
            out.status = Status::Warn;
        }
    }
    Ok(out)
}

/// Reference prefixes (n = 1, 2, …) of the sequences checked by `oeis`.
///
/// `CR_CLASSES[5]` is 272, i.e. `2^5 + A001788(6)`; the value 276 that is
/// sometimes quoted for it is reported separately by `class_counts`.
pub const CR_CLASSES: [u64; 6] = [1, 3, 10, 32, 96, 272];
/// The quoted cr class count for n = 6, which brute force does not reproduce.
pub const CR_CLASSES_QUOTED_N6: u64 = 276;
pub const CR_POSITIVE_CLASSES_A001788: [u64; 6] = [0, 1, 6, 24, 80, 240];
pub const NE_CLASSES: [u64; 6] = [1, 3, 12, 51, 218, 926];
pub const NE_POSITIVE_CLASSES_A006419: [u64; 6] = [0, 1, 7, 37, 176, 794];

/// Sum of tunnel cover counts over all paths of semilength `n`.
pub fn total_tunnel_covers(n: usize) -> u64 {
    enumerate_dyck_paths(n).par_iter().map(DyckPath::tunnel_cover_count).sum()
}

fn oeis(n: usize, limits: &Limits) -> Result<Outcome> {
    guard_full(limits, n)?;
    let mut rows = Vec::new();
    let mut ok = true;
    for k in 1..=n {
        let cr = count_classes(k, &Preset::Cr.spec(), false, limits)? as u64;
        let ne = count_classes(k, &Preset::Ne.spec(), false, limits)? as u64;
        let cr_pos = cr - (1u64 << (k - 1));
        let covers = total_tunnel_covers(k);
        let ne_pos = ne - crate::counting::saturating_u64(&catalan(k));
        let reference = |table: &[u64; 6]| table.get(k - 1).copied();
        let checks = [
            (cr, reference(&CR_CLASSES), cr_class_count_formula(k)),
            (cr_pos, reference(&CR_POSITIVE_CLASSES_A001788), cr_positive_class_count_formula(k)),
            (ne, reference(&NE_CLASSES), ne_class_count_formula(k)),
            (ne_pos, reference(&NE_POSITIVE_CLASSES_A006419), ne_positive_class_count_formula(k)),
            (covers, reference(&NE_POSITIVE_CLASSES_A006419), ne_positive_class_count_formula(k)),
        ];
        for (value, table, formula) in &checks {
            ok &= table.is_none_or(|t| t == *value) && BigUint::from(*value) == *formula;
        }
        rows.push(json!({
            "n": k,
            "cr_classes": cr,
            "cr_positive_classes": cr_pos,
            "ne_classes": ne,
            "ne_positive_classes": ne_pos,
            "tunnel_cover_total": covers,
        }));
    }
    Ok(Outcome::new(ok, Value::Array(rows)))
}

/// The worked path with profile (2,3,2).
pub const WORKED_PATH: &str = "UDUUDUUDUDDUDD";
/// Covering-pair count stated alongside the worked path; the direct count is 7.
pub const WORKED_PATH_STATED_COVERS: u64 = 8;

fn figures() -> Outcome {
    let fig1: Matching = "1-4,2-7,3-8,5-6,9-10".parse().expect("valid literal");
    let cn = fig1.cross_nest();
    let path: DyckPath = WORKED_PATH.parse().expect("valid literal");
    let als = path.altitude_sequence();
    let pr = path.profile();
    let dos = path.down_sequence();
    let covers = path.tunnel_cover_count();
    let weight = crate::dyck::profile_weight(&pr);
    let exact = cn.cr == 3
        && cn.ne == 2
        && als == [0, 1, 0, 1, 2, 1, 2, 3, 2, 3, 2, 1, 2, 1, 0]
        && pr == Profile::new(vec![2, 3, 2]).expect("valid composition")
        && dos == [0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 4, 5, 5, 6, 7]
        && covers == weight;
    let status = if !exact {
        Status::Fail
    } else if covers != WORKED_PATH_STATED_COVERS {
        Status::Warn
    } else {
        Status::Pass
    };
    let mut details = json!({
        "matching": fig1.to_string(),
        "cr": cn.cr,
        "ne": cn.ne,
        "path": WORKED_PATH,
        "als": als,
        "profile": pr.parts(),
        "dos": dos,
        "tunnel_cover_count": covers,
        "profile_weight": weight,
    });
    if covers != WORKED_PATH_STATED_COVERS {
        details["warning"] = json!(format!(
            "stated covering-pair count {WORKED_PATH_STATED_COVERS} for {WORKED_PATH} differs from the computed {covers} (tunnel pairing and profile weight agree on {covers})"
        ));
    }
    Outcome { status, details, counterexamples: Vec::new() }
}

/// Presets exercised by the exhaustive level-identity check.
pub const THEOREM1_PRESETS: [Preset; 6] =
    [Preset::Cr, Preset::Ne, Preset::Cn, Preset::Nc, Preset::Cr2, Preset::Camel];

fn theorem1_exhaustive(n: usize, depth: usize, limits: &Limits) -> Result<Outcome> {
    guard_pairwise(limits, n)?;
    guard_depth(limits, depth)?;
    limits.guard("level", &level_size(n, depth))?;
    let all: Vec<Matching> = enumerate_matchings(n).collect();
    let top = depth.max(1);
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    for preset in THEOREM1_PRESETS {
        let spec = preset.spec();
        let swapped = spec.swapped();
        let dists = |s: &GroupSpec| -> Vec<Vec<Multiset<GroupElement>>> {
            all.par_iter()
                .map(|m| {
                    (0..=top)
                        .map(|l| par_collect(par_level(m, l).map(|c| crate::sequence::statistic(&c, s))))
                        .collect()
                })
                .collect()
        };
        let plain = dists(&spec);
        let other = dists(&swapped);
        let keys: Vec<_> = all.iter().map(|m| similarity_key(m, &spec)).collect();
        let keys_swapped: Vec<_> = all.iter().map(|m| similarity_key(m, &swapped)).collect();
        for (swap, rhs, rhs_keys) in [(false, &plain, &keys), (true, &other, &keys_swapped)] {
            let (mut premise, mut conclusion, mut bad) = (0u64, 0u64, 0u64);
            for i in 0..all.len() {
                for j in 0..all.len() {
                    let a = &plain[i];
                    let b = &rhs[j];
                    let p = a[0] == b[0] && a[1] == b[1];
                    let c = a[..=depth] == b[..=depth];
                    let k = keys[i] == rhs_keys[j];
                    premise += u64::from(p);
                    conclusion += u64::from(p && c);
                    if (p && !c) || p != k {
                        bad += 1;
                        violations.push(format!("{preset} swapped={swap}: {} | {}", all[i], all[j]));
                    }
                }
            }
            rows.push(json!({
                "stat": preset.name(),
                "swapped": swap,
                "pairs": all.len() * all.len(),
                "premise_pairs": premise,
                "premise_and_conclusion": conclusion,
                "violations": bad,
            }));
        }
    }
    Ok(Outcome::new(violations.is_empty(), Value::Array(rows)).with_counterexamples(violations))
}

fn permutational(n: usize, limits: &Limits) -> Result<Outcome> {
    guard_full(limits, n)?;
    let all: Vec<Matching> = enumerate_matchings(n).collect();
    let perms: Vec<&Matching> = all.iter().filter(|m| m.is_permutational()).collect();
    let camel_free: Vec<&Matching> = all.iter().filter(|m| m.camels() == 0).collect();
    let crs: BTreeSet<Vec<u64>> = perms.iter().map(|m| crossing_sequence(m)).collect();
    let nes: BTreeSet<Vec<u64>> = perms.iter().map(|m| nesting_sequence(m)).collect();
    let largest = |preset: Preset| -> usize {
        let spec = preset.spec();
        let mut counts: BTreeMap<_, usize> = BTreeMap::new();
        for m in &perms {
            *counts.entry(similarity_key(m, &spec)).or_default() += 1;
        }
        counts.into_values().max().unwrap_or(0)
    };
    let (big_cr, big_ne) = (largest(Preset::Cr), largest(Preset::Ne));
    let bound = factorial(n) / (binomial(n, 2) + 1u32);
    let ok = BigUint::from(perms.len()) == factorial(n)
        && crs.len() == 1
        && nes.len() == 1
        && camel_free == perms
        && BigUint::from(big_cr) >= bound
        && BigUint::from(big_ne) >= bound;
    Ok(Outcome::new(
        ok,
        json!({
            "permutational": perms.len(),
            "factorial": factorial(n).to_string(),
            "camel_free": camel_free.len(),
            "distinct_crossing_sequences": crs.len(),
            "distinct_nesting_sequences": nes.len(),
            "largest_cr_class": big_cr,
            "largest_ne_class": big_ne,
            "class_size_bound": bound.to_string(),
        }),
    ))
}

/// The worked path's profile as a [`Profile`], for callers that want it.
pub fn worked_path() -> DyckPath {
    WORKED_PATH.parse().expect("valid literal")
}

/// Whether `m` maps to the worked path.
pub fn maps_to_worked_path(m: &Matching) -> bool {
    to_dyck(m) == worked_path()
}
