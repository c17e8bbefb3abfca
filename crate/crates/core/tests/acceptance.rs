//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every expected value is produced by an oracle in this file that shares no
//! code with the library beyond enumeration of matchings and parsing:
//! pairwise edge classification, direct gap scans, a separate Dyck path
//! generator, closed forms in `u128`, and recursive tuple sums.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use matchstat::dyck::enumerate_dyck_paths;
use matchstat::multiset::Multiset;
use matchstat::sequence::{f_r_gamma_multiset, r_all_multiset, GroupSequence};
use matchstat::similarity::{
    count_classes, cr_class_count_formula, mod2_classes, ne_class_count_formula, partition_classes, Mod2Stat,
};
use matchstat::verify::{run_check, CheckId, CheckParams, Status};
use matchstat::{
    enumerate_matchings, f_r_gamma, g_r, level, level_distribution, seq, AbelianGroup, DistributionMethod,
    DyckPath, GroupElement, GroupSpec, IntGroup, Limits, Matching, Preset, SeqMethod,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// ---------------------------------------------------------------- oracles

/// `(cr, ne, ca)` by classifying every pair of edges.
fn oracle_cnc(m: &Matching) -> (u64, u64, u64) {
    let e = m.edges();
    let (mut cr, mut ne, mut ca) = (0, 0, 0);
    for (i, &(a, b)) in e.iter().enumerate() {
        for &(c, d) in &e[i + 1..] {
            let (b, c, d) = if a < c { (b, c, d) } else { (d, a, b) };
            if b < c {
                ca += 1;
            } else if d < b {
                ne += 1;
            } else {
                cr += 1;
            }
        }
    }
    (cr, ne, ca)
}

/// Per gap `j = 1..=2n+1` (before vertex `j`): edges covering it and edges
/// entirely to its left.
fn oracle_gaps(m: &Matching) -> (Vec<u64>, Vec<u64>) {
    let e = m.edges();
    let gaps = 2 * m.n() + 1;
    let cover = (1..=gaps).map(|j| e.iter().filter(|&&(a, b)| a < j && j <= b).count() as u64).collect();
    let left = (1..=gaps).map(|j| e.iter().filter(|&&(_, b)| b < j).count() as u64).collect();
    (cover, left)
}

fn oracle_double_factorial(n: u32) -> u128 {
    (1..=n as u128).map(|k| 2 * k - 1).product()
}

fn oracle_catalan(n: usize) -> u128 {
    let mut c = vec![1u128];
    for k in 1..=n {
        c.push((0..k).map(|i| c[i] * c[k - 1 - i]).sum());
    }
    c[n]
}

fn oracle_binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn oracle_factorial(n: u128) -> u128 {
    (1..=n).product()
}

/// `2^{n−2}(C(n,2)+2)`, computed as `2^n(C(n,2)+2)/4`.
fn oracle_cr_classes(n: u128) -> u128 {
    (1u128 << n) * (oracle_binomial(n, 2) + 2) / 4
}

/// `2·4^{n−1} − (3n−1)C(2n,n)/(2n+2)`.
fn oracle_ne_classes(n: u128) -> u128 {
    let num = (3 * n - 1) * oracle_binomial(2 * n, n);
    assert_eq!(num % (2 * n + 2), 0);
    2 * (1u128 << (2 * (n - 1))) - num / (2 * n + 2)
}

/// All Dyck words of semilength `n`, as `true` = up.
fn oracle_dyck_words(n: usize) -> Vec<Vec<bool>> {
    fn go(up: usize, down: usize, n: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if up == n && down == n {
            out.push(cur.clone());
            return;
        }
        if up < n {
            cur.push(true);
            go(up + 1, down, n, cur, out);
            cur.pop();
        }
        if down < up {
            cur.push(false);
            go(up, down + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, 0, n, &mut Vec::new(), &mut out);
    out
}

/// Ordered pairs of tunnels (up/down steps paired by a stack) with the
/// first strictly enclosing the second.
fn oracle_tunnel_covers(word: &[bool]) -> u64 {
    let mut stack = Vec::new();
    let mut tunnels = Vec::new();
    for (i, &up) in word.iter().enumerate() {
        if up {
            stack.push(i);
        } else {
            tunnels.push((stack.pop().expect("Dyck word"), i));
        }
    }
    let mut count = 0;
    for &(a, b) in &tunnels {
        for &(c, d) in &tunnels {
            count += u64::from(a < c && d < b);
        }
    }
    count
}

/// Weakly increasing index tuples of length `r` over `0..len`.
fn oracle_tuples(len: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for t in oracle_tuples(len, r - 1) {
        let start = t.last().copied().unwrap_or(0);
        for a in start..len {
            let mut u = t.clone();
            u.push(a);
            out.push(u);
        }
    }
    out
}

fn oracle_g<G: AbelianGroup>(g: &G, x: &[G::Element], r: usize) -> Vec<G::Element> {
    let mut v: Vec<_> = oracle_tuples(x.len(), r)
        .iter()
        .map(|t| t.iter().fold(g.zero(), |acc, &a| g.add(&acc, &x[a])))
        .collect();
    v.sort();
    v
}

/// `f^r_γ(x) = {Σ x_{a_i} − (r−1)x_1 + γ}`.
fn oracle_f<G: AbelianGroup>(g: &G, x: &[G::Element], r: usize, gamma: &G::Element) -> Vec<G::Element> {
    // Subtract x_1 repeatedly rather than using `times`, to stay independent of it.
    let mut shift = gamma.clone();
    if r == 0 {
        shift = g.add(&shift, &x[0]);
    }
    for _ in 1..r {
        shift = g.sub(&shift, &x[0]);
    }
    let mut v: Vec<_> = oracle_g(g, x, r).into_iter().map(|s| g.add(&s, &shift)).collect();
    v.sort();
    v
}

fn weigh_oracle(spec: &GroupSpec, cr: u64, ne: u64) -> GroupElement {
    let g = &spec.group;
    let mut acc = g.zero();
    for _ in 0..cr {
        acc = g.add(&acc, &spec.alpha);
    }
    for _ in 0..ne {
        acc = g.add(&acc, &spec.beta);
    }
    acc
}

/// Brute-force level distributions `0..=depth` below `m`, statistic from
/// the pairwise oracle.
fn oracle_levels(m: &Matching, spec: &GroupSpec, depth: usize) -> Vec<BTreeMap<GroupElement, u64>> {
    (0..=depth)
        .map(|l| {
            let mut h = BTreeMap::new();
            for c in level(m, l) {
                let (cr, ne, _) = oracle_cnc(&c);
                *h.entry(weigh_oracle(spec, cr, ne)).or_insert(0) += 1;
            }
            h
        })
        .collect()
}

fn sorted_plus(base: u64, xs: &[u64]) -> Vec<u64> {
    let mut v: Vec<u64> = xs.iter().map(|x| base + x).collect();
    v.sort_unstable();
    v
}

// ---------------------------------------------------------------- harness

struct Outcome {
    pass: bool,
    detail: String,
    warn: Option<String>,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into(), warn: None }
}

type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn limits() -> Limits {
    Limits::unbounded()
}

// ---------------------------------------------------------------- criteria

fn ac1() -> Outcome {
    let mut rows = Vec::new();
    let mut ok = true;
    let mut n8_secs = 0.0;
    for n in 0..=8usize {
        let start = Instant::now();
        let count = if n <= 6 {
            let set: HashSet<Matching> = enumerate_matchings(n).collect();
            set.len() as u128
        } else {
            enumerate_matchings(n).count() as u128
        };
        let secs = start.elapsed().as_secs_f64();
        if n == 8 {
            n8_secs = secs;
        }
        ok &= count == oracle_double_factorial(n as u32);
        rows.push(format!("{count}"));
    }
    ok &= n8_secs < 60.0;
    outcome(ok, format!("counts n=0..8: {}; n=8 enumerated in {n8_secs:.2} s", rows.join(",")))
}

fn ac2() -> Outcome {
    let mut ok = true;
    let mut rows = Vec::new();
    for n in 0..=8usize {
        let (mut nc, mut nn) = (0u128, 0u128);
        for m in enumerate_matchings(n) {
            let (cr, ne, _) = oracle_cnc(&m);
            nc += u128::from(cr == 0);
            nn += u128::from(ne == 0);
        }
        let cat = oracle_catalan(n);
        ok &= nc == cat && nn == cat;
        rows.push(format!("{nc}/{nn}"));
    }
    outcome(ok, format!("#cr=0/#ne=0 for n=0..8: {}", rows.join(" ")))
}

fn ac3() -> Outcome {
    let mut ok = true;
    for n in 0..=7usize {
        let mut joint: BTreeMap<(u64, u64), u64> = BTreeMap::new();
        for m in enumerate_matchings(n) {
            let (cr, ne, _) = oracle_cnc(&m);
            *joint.entry((cr, ne)).or_insert(0) += 1;
        }
        let mut hc: BTreeMap<u64, u64> = BTreeMap::new();
        let mut hn: BTreeMap<u64, u64> = BTreeMap::new();
        for (&(c, e), &k) in &joint {
            *hc.entry(c).or_insert(0) += k;
            *hn.entry(e).or_insert(0) += k;
        }
        ok &= hc == hn;
        if n <= 6 {
            ok &= joint.iter().all(|(&(c, e), k)| joint.get(&(e, c)) == Some(k));
        }
        // The harness check computes the same histograms its own way.
        if (4..=6).contains(&n) {
            let p = CheckParams { n: Some(n), depth: None };
            ok &= run_check(CheckId::Desainte, p, &limits()).map(|r| r.status) == Ok(Status::Pass);
            ok &= run_check(CheckId::Symmetric, p, &limits()).map(|r| r.status) == Ok(Status::Pass);
        }
    }
    outcome(ok, "cr/ne histograms equal for n ≤ 7; joint histogram symmetric for n ≤ 6")
}

fn ac4() -> Outcome {
    let mut ok = true;
    let (mut crs, mut nes) = (Vec::new(), Vec::new());
    for n in 1..=7usize {
        // Oracle partition: cr-classes are (cr, sorted cr + crs), ne-classes (ne, sorted ne + nes).
        let mut kc = BTreeSet::new();
        let mut kn = BTreeSet::new();
        for m in enumerate_matchings(n) {
            let (cr, ne, _) = oracle_cnc(&m);
            let (cover, left) = oracle_gaps(&m);
            kc.insert((cr, sorted_plus(cr, &cover)));
            if n <= 6 {
                kn.insert((ne, sorted_plus(ne, &left)));
            }
        }
        let brute_cr = count_classes(n, &Preset::Cr.spec(), false, &limits()).unwrap();
        ok &= brute_cr == kc.len()
            && brute_cr as u128 == oracle_cr_classes(n as u128)
            && cr_class_count_formula(n) == brute_cr.into();
        crs.push(brute_cr);
        if n <= 6 {
            let brute_ne = count_classes(n, &Preset::Ne.spec(), false, &limits()).unwrap();
            ok &= brute_ne == kn.len()
                && brute_ne as u128 == oracle_ne_classes(n as u128)
                && ne_class_count_formula(n) == brute_ne.into();
            nes.push(brute_ne);
        }
    }
    let ok_ne_ref = nes == [1, 3, 12, 51, 218, 926];
    let quoted_cr = [1, 3, 10, 32, 96, 276, 736];
    let mismatch: Vec<String> = crs
        .iter()
        .zip(quoted_cr)
        .enumerate()
        .filter(|(_, (c, q))| **c != *q)
        .map(|(i, (c, q))| format!("n={}: quoted {q}, computed {c}", i + 1))
        .collect();
    let mut out = outcome(ok && ok_ne_ref, format!("cr classes {crs:?} = 2^(n-2)(C(n,2)+2); ne classes {nes:?} = formula"));
    if !mismatch.is_empty() {
        out.warn = Some(format!(
            "reference list (1,3,10,32,96,276,736) disagrees with brute force and closed form at {}; 2^(n-1) + A001788(n) also gives 272 at n=6",
            mismatch.join("; ")
        ));
    }
    out
}

fn ac5() -> Outcome {
    let expected = [0u64, 1, 7, 37, 176, 794];
    let mut got = Vec::new();
    let mut ok = true;
    for n in 1..=6usize {
        let oracle: u64 = oracle_dyck_words(n).iter().map(|w| oracle_tunnel_covers(w)).sum();
        let lib: u64 = enumerate_dyck_paths(n).iter().map(DyckPath::tunnel_cover_count).sum();
        ok &= oracle == lib && enumerate_dyck_paths(n).len() as u128 == oracle_catalan(n);
        got.push(lib);
    }
    ok &= got == expected;
    outcome(ok, format!("sums {got:?} (A006419 prefix {expected:?})"))
}

fn ac6() -> Outcome {
    let all: Vec<Matching> = enumerate_matchings(3).collect();
    let depth = 3;
    let presets = [Preset::Cr, Preset::Ne, Preset::Cn, Preset::Nc, Preset::Cr2, Preset::Camel];
    let (mut pairs, mut premises, mut violations) = (0u64, 0u64, Vec::new());
    for p in presets {
        let spec = p.spec();
        let plain: Vec<_> = all.iter().map(|m| oracle_levels(m, &spec, depth)).collect();
        let swapped: Vec<_> = all.iter().map(|m| oracle_levels(m, &spec.swapped(), depth)).collect();
        for (swap, rhs) in [(false, &plain), (true, &swapped)] {
            for (i, a) in plain.iter().enumerate() {
                for (j, b) in rhs.iter().enumerate() {
                    pairs += 1;
                    if a[0] == b[0] && a[1] == b[1] {
                        premises += 1;
                        if a != b {
                            violations.push(format!("{p} swap={swap} {} | {}", all[i], all[j]));
                        }
                    }
                }
            }
        }
    }
    let level3 = level(&all[0], 3).count();
    let harness = run_check(CheckId::Theorem1, CheckParams { n: Some(3), depth: Some(3) }, &limits())
        .map(|r| r.status);
    let ok = violations.is_empty() && level3 == 693 && harness == Ok(Status::Pass);
    outcome(
        ok,
        format!(
            "{pairs} (pair, stat, swap) cases, {premises} with equal levels 0-1, {} violations; |T(M,3)| = {level3}",
            violations.len()
        ),
    )
}

fn ac7() -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    for n in 1..=4usize {
        let all: Vec<Matching> = enumerate_matchings(n).collect();
        let cr_keys: Vec<_> = all
            .iter()
            .map(|m| {
                let (cr, _, _) = oracle_cnc(m);
                (cr, sorted_plus(cr, &oracle_gaps(m).0))
            })
            .collect();
        let ne_keys: Vec<_> = all
            .iter()
            .map(|m| {
                let (_, ne, _) = oracle_cnc(m);
                (ne, sorted_plus(ne, &oracle_gaps(m).1))
            })
            .collect();
        let mut found = Vec::new();
        for (i, a) in cr_keys.iter().enumerate() {
            for (j, b) in ne_keys.iter().enumerate() {
                if a == b {
                    found.push((i, j));
                }
            }
        }
        let expected = (Matching::nested(n), Matching::adjacent(n));
        let unique = found.len() == 1 && (all[found[0].0].clone(), all[found[0].1].clone()) == expected;
        ok &= unique;
        // The key criterion is the two-level criterion; confirm brute force on the found pair.
        if unique {
            let a = oracle_levels(&expected.0, &Preset::Cr.spec(), 3);
            let b = oracle_levels(&expected.1, &Preset::Ne.spec(), 3);
            ok &= a == b;
        }
        details.push(format!("n={n}: {} pair(s)", found.len()));
    }
    ok &= run_check(CheckId::CrMneN, CheckParams { n: Some(4), depth: Some(2) }, &limits()).map(|r| r.status)
        == Ok(Status::Pass);
    outcome(ok, format!("only (M_n, N_n) — {}", details.join(", ")))
}

fn ac8() -> Outcome {
    let mut ok = true;
    let mut ne2 = Vec::new();
    for n in 1..=7usize {
        let c = mod2_classes(n, Mod2Stat::Cr2, &limits()).unwrap();
        let e = mod2_classes(n, Mod2Stat::Ne2, &limits()).unwrap();
        let brute_c = c.brute_sizes.clone().unwrap();
        let brute_e = e.brute_sizes.clone().unwrap();
        if n >= 2 {
            let t = oracle_double_factorial(n as u32);
            ok &= brute_c.iter().map(|&s| s as u128).collect::<Vec<_>>() == [t.div_ceil(2), t / 2];
        }
        let want = match n {
            1 => 1,
            2 => 3,
            _ => 2 * n,
        };
        ok &= brute_e.len() == want && c.consistent() && e.consistent();
        // Cross-check the library partition against an independent parity key.
        if n <= 5 {
            let mut keys = BTreeSet::new();
            for m in enumerate_matchings(n) {
                let (_, ne, _) = oracle_cnc(&m);
                let bag: Vec<u64> = sorted_plus(ne, &oracle_gaps(&m).1).into_iter().map(|x| x % 2).collect();
                let mut bag = bag;
                bag.sort_unstable();
                keys.insert((ne % 2, bag));
            }
            ok &= keys.len() == partition_classes(n, &Preset::Ne2.spec(), false, &limits()).unwrap().len();
        }
        ne2.push(brute_e.len());
        let (mut even, mut odd) = (0i64, 0i64);
        for m in enumerate_matchings(n) {
            if oracle_cnc(&m).0.is_multiple_of(2) {
                even += 1;
            } else {
                odd += 1;
            }
        }
        ok &= even - odd == 1;
    }
    outcome(ok, format!("cr2: 2 classes ((2n-1)!!±1)/2; ne2 class counts n=1..7: {ne2:?}; even−odd = 1"))
}

fn ac9() -> Outcome {
    let mut ok = true;
    let mut checked = 0u64;
    let presets = [Preset::Cr, Preset::Ne, Preset::Cn, Preset::Nc];
    for n in 0..=6usize {
        for m in enumerate_matchings(n) {
            let (cr, ne, _) = oracle_cnc(&m);
            let (cover, left) = oracle_gaps(&m);
            for p in presets {
                let spec = p.spec();
                let rec = seq(&m, &spec, SeqMethod::Recursive);
                let dir = seq(&m, &spec, SeqMethod::Direct);
                let want: Vec<GroupElement> =
                    cover.iter().zip(&left).map(|(&u, &v)| weigh_oracle(&spec, cr + u, ne + v)).collect();
                ok &= rec == dir && dir.0 == want;
                checked += 1;
            }
        }
    }
    for n in 0..=3usize {
        for m in enumerate_matchings(n) {
            for p in Preset::ALL {
                let spec = p.spec();
                for l in 0..=3 {
                    let b = level_distribution(&m, l, &spec, DistributionMethod::Brute, &limits()).unwrap();
                    let s = level_distribution(&m, l, &spec, DistributionMethod::Sequence, &limits()).unwrap();
                    let o = &oracle_levels(&m, &spec, l)[l];
                    let b_map: BTreeMap<GroupElement, u64> = b.iter().map(|(k, v)| (k.clone(), *v)).collect();
                    ok &= b == s && &b_map == o;
                }
            }
        }
    }
    outcome(ok, format!("{checked} (matching, spec) sequences; level methods agree for n ≤ 3, l ≤ 3, all presets"))
}

fn random_element(rng: &mut ChaCha8Rng, g: &IntGroup) -> GroupElement {
    let coords: Vec<i64> = (0..g.dim()).map(|_| rng.gen_range(-3..=4)).collect();
    g.element(&coords).expect("valid coordinates")
}

fn random_seq(rng: &mut ChaCha8Rng, g: &IntGroup, max_len: usize) -> Vec<GroupElement> {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| random_element(rng, g)).collect()
}

/// Same first term, same multiset of terms.
fn shuffle_tail(rng: &mut ChaCha8Rng, x: &[GroupElement]) -> Vec<GroupElement> {
    let mut y = x.to_vec();
    y[1..].shuffle(rng);
    y
}

fn multiset_vec(m: &Multiset<GroupElement>) -> Vec<GroupElement> {
    m.to_sorted_vec()
}

fn ac10() -> Outcome {
    const INSTANCES: usize = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d61_7463_6873);
    let groups = [IntGroup::cyclic(1, 5), IntGroup::integers(2)];
    let (mut l3, mut l4, mut l5, mut oracle_checks) = (0, 0, 0, 0);
    let mut ok = true;
    for g in &groups {
        let gammas: Vec<GroupElement> = if g.modulus() == 5 {
            (0..5).map(|v| g.element(&[v]).unwrap()).collect()
        } else {
            vec![g.zero(), g.element(&[1, 0]).unwrap(), g.element(&[-2, 3]).unwrap()]
        };
        for _ in 0..INSTANCES {
            // gr: equal term multisets give equal g^r.
            let u = random_seq(&mut rng, g, 7);
            let mut v = u.clone();
            v.shuffle(&mut rng);
            let (gu, gv) = (GroupSequence(u.clone()), GroupSequence(v.clone()));
            for r in 1..=4 {
                let a = g_r(g, &gu, r).unwrap();
                let b = g_r(g, &gv, r).unwrap();
                ok &= multiset_vec(&a) == oracle_g(g, &u, r);
                ok &= a == b;
                oracle_checks += 1;
            }
            l4 += 1;

            // just01: same first term and same terms give equal f^r_γ.
            let u = random_seq(&mut rng, g, 7);
            let v = shuffle_tail(&mut rng, &u);
            let (fu, fv) = (GroupSequence(u.clone()), GroupSequence(v.clone()));
            for r in 0..=4 {
                for gamma in &gammas {
                    let a = f_r_gamma(g, &fu, r, gamma).unwrap();
                    let b = f_r_gamma(g, &fv, r, gamma).unwrap();
                    ok &= multiset_vec(&a) == oracle_f(g, &u, r, gamma);
                    ok &= a == b;
                    oracle_checks += 1;
                }
            }
            l5 += 1;

            // main: the rewriting maps preserve equality of all f^r_γ.
            let k = rng.gen_range(1..=3);
            let xs: Vec<Vec<GroupElement>> = (0..k).map(|_| random_seq(&mut rng, g, 7)).collect();
            let ys: Vec<Vec<GroupElement>> = xs.iter().map(|x| shuffle_tail(&mut rng, x)).collect();
            let x_set: Multiset<GroupSequence> = xs.iter().cloned().map(GroupSequence).collect();
            let y_set: Multiset<GroupSequence> = ys.iter().cloned().map(GroupSequence).collect();
            let alpha = random_element(&mut rng, g);
            let beta = random_element(&mut rng, g);
            let spec = GroupSpec::with_weights(*g, alpha, beta);
            let rx = r_all_multiset(&spec, &x_set);
            let ry = r_all_multiset(&spec, &y_set);
            let ry_swapped = r_all_multiset(&spec.swapped(), &y_set);
            for r in 0..=4 {
                for gamma in &gammas {
                    let a = f_r_gamma_multiset(g, &rx, r, gamma).unwrap();
                    let b = f_r_gamma_multiset(g, &ry, r, gamma).unwrap();
                    let c = f_r_gamma_multiset(g, &ry_swapped, r, gamma).unwrap();
                    ok &= a == b && a == c;
                }
            }
            // Oracle for the rewritten sequences themselves on one index.
            let x0 = &xs[0];
            let i = rng.gen_range(1..=x0.len());
            let shift_a = g.add(&g.sub(&x0[i - 1], &x0[0]), &spec.alpha);
            let shift_b = g.add(&g.sub(&x0[i - 1], &x0[0]), &spec.beta);
            let mut want = vec![x0[i - 1].clone()];
            want.extend(x0[..i].iter().map(|t| g.add(t, &shift_a)));
            want.extend(x0[i - 1..].iter().map(|t| g.add(t, &shift_b)));
            ok &= rx.count(&GroupSequence(want)) >= 1;
            oracle_checks += 1;
            l3 += 1;
        }
    }
    // A negative control: changing the first term must be visible to f^0.
    let g = IntGroup::cyclic(1, 5);
    let u = GroupSequence(vec![g.element(&[1]).unwrap(), g.element(&[2]).unwrap()]);
    let v = GroupSequence(vec![g.element(&[2]).unwrap(), g.element(&[1]).unwrap()]);
    ok &= f_r_gamma(&g, &u, 0, &g.zero()).unwrap() != f_r_gamma(&g, &v, 0, &g.zero()).unwrap();
    outcome(
        ok,
        format!("instances: main {l3}, gr {l4}, just01 {l5} over Z_5 and Z^2 (r ≤ 4, length ≤ 7); {oracle_checks} oracle comparisons"),
    )
}

fn ac11() -> Outcome {
    let fig1: Matching = "1-4,2-7,3-8,5-6,9-10".parse().unwrap();
    let (cr, ne, _) = oracle_cnc(&fig1);
    let d: DyckPath = "UDUUDUUDUDDUDD".parse().unwrap();
    let als_printed = [0u64, 1, 0, 1, 2, 1, 2, 3, 2, 3, 2, 1, 2, 1, 0];
    let dos_printed = [0u64, 0, 1, 1, 1, 2, 2, 2, 3, 3, 4, 5, 5, 6, 7];
    let word: Vec<bool> = "UDUUDUUDUDDUDD".chars().map(|c| c == 'U').collect();
    let covers_oracle = oracle_tunnel_covers(&word);
    let covers = d.tunnel_cover_count();
    let report = run_check(CheckId::Figures, CheckParams::default(), &limits()).unwrap();
    let ok = (cr, ne) == (3, 2)
        && (fig1.crossings(), fig1.nestings()) == (3, 2)
        && d.altitude_sequence() == als_printed
        && d.profile().parts() == [2, 3, 2]
        && d.down_sequence() == dos_printed
        && covers == covers_oracle
        && covers == 7
        && report.status == Status::Warn
        && report.details["tunnel_cover_count"] == 7;
    let mut out = outcome(ok, format!("worked matching (cr,ne)=({cr},{ne}); worked path als/pr/dos as expected; tunnel cover count {covers}"));
    out.warn = Some(format!(
        "reference value for the worked path's covering pairs is 8; computed {covers} by tunnel pairing and by profile weight"
    ));
    out
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

fn ac12() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 1..=6usize {
        let first_half = |m: &Matching| m.edges().iter().all(|&(a, _)| a <= n);
        let perms: Vec<Matching> = enumerate_matchings(n).filter(first_half).collect();
        let built: BTreeSet<Matching> =
            all_permutations(n).iter().map(|p| Matching::permutational(p).unwrap()).collect();
        let listed: BTreeSet<Matching> = perms.iter().cloned().collect();
        ok &= perms.len() as u128 == oracle_factorial(n as u128) && built == listed;
        ok &= perms.iter().all(Matching::is_permutational);
        let crs: BTreeSet<Vec<u64>> = perms.iter().map(|m| oracle_gaps(m).0).collect();
        let nes: BTreeSet<Vec<u64>> = perms.iter().map(|m| oracle_gaps(m).1).collect();
        ok &= crs.len() == 1 && nes.len() == 1;
        let camel_free: BTreeSet<Matching> = enumerate_matchings(n).filter(|m| oracle_cnc(m).2 == 0).collect();
        ok &= camel_free == listed;
        let cr_values: BTreeSet<u64> = perms.iter().map(|m| oracle_cnc(m).0).collect();
        notes.push(format!("n={n}: {} ({} cr values)", perms.len(), cr_values.len()));
    }
    let harness = run_check(CheckId::Permutational, CheckParams { n: Some(6), depth: None }, &limits());
    ok &= harness.map(|r| r.status) == Ok(Status::Pass);
    outcome(
        ok,
        format!("n! permutational matchings sharing one crossing and one nesting sequence, exactly the camel-free ones — {}", notes.join(", ")),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("AC1", "|M(n)| = (2n-1)!! for n ≤ 8", ac1),
        ("AC2", "#{cr=0} = #{ne=0} = Catalan(n) for n ≤ 8", ac2),
        ("AC3", "cr/ne equidistribution and joint symmetry", ac3),
        ("AC4", "similarity class counts equal closed forms", ac4),
        ("AC5", "total tunnel cover counts", ac5),
        ("AC6", "two-level premise implies equality on levels ≤ 3 over M(3)^2", ac6),
        ("AC7", "cr-key = ne-key only for (M_n, N_n), n ≤ 4", ac7),
        ("AC8", "parity classes and Riordan parity", ac8),
        ("AC9", "seq recursive = direct; level methods agree", ac9),
        ("AC10", "randomized rewriting-invariance properties", ac10),
        ("AC11", "figure regression", ac11),
        ("AC12", "permutational matchings", ac12),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (id, title, run) in criteria {
        let t = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(run));
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(o) => {
                let tag = if o.pass { "PASS" } else { "FAIL" };
                failed += usize::from(!o.pass);
                println!("[{tag}] {id} {title}: {} ({secs:.2} s)", o.detail);
                if let Some(w) = o.warn {
                    println!("       WARN: {w}");
                }
            }
            Err(_) => {
                failed += 1;
                println!("[FAIL] {id} {title}: panicked ({secs:.2} s)");
            }
        }
    }
    println!("{} of 12 criteria passed in {:.1} s", 12 - failed, start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
