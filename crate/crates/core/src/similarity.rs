//! Similarity of matchings: two matchings are similar for a statistic when
//! the statistic has the same distribution on every level of their subtrees.
//!
//! The decision never walks the subtrees. Similarity holds exactly when the
//! statistic values agree and the sequences from [`crate::sequence::seq`]
//! agree as multisets, so [`SimilarityKey`] captures the whole class.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::counting::{binomial, catalan, double_factorial_odd, exact_div};
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, GroupElement, GroupSpec, Preset};
use crate::limits::Limits;
use crate::matching::{par_enumerate_matchings, Matching};
use crate::sequence::{seq, statistic, SeqMethod};

/// Edges covering each gap; the crossing sequence.
pub fn crossing_sequence(m: &Matching) -> Vec<u64> {
    m.gap_profile().cover
}

/// Edges completely left of each gap; the nesting sequence.
pub fn nesting_sequence(m: &Matching) -> Vec<u64> {
    m.gap_profile().left
}

/// Canonical similarity invariant: statistic value plus the sorted terms of
/// the group sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SimilarityKey<E = GroupElement> {
    pub value: E,
    pub bag: Vec<E>,
}

pub fn similarity_key<G: AbelianGroup>(m: &Matching, spec: &GroupSpec<G>) -> SimilarityKey<G::Element> {
    let mut bag = seq(m, spec, SeqMethod::Direct).0;
    bag.sort();
    SimilarityKey { value: statistic(m, spec), bag }
}

fn same_size(m: &Matching, n: &Matching) -> Result<()> {
    if m.n() != n.n() {
        return Err(Error::SizeMismatch { left: m.n(), right: n.n() });
    }
    Ok(())
}

/// `s_{α,β}` has equal distributions on all levels below `m` and `n`.
pub fn are_similar<G: AbelianGroup>(m: &Matching, n: &Matching, spec: &GroupSpec<G>) -> Result<bool> {
    same_size(m, n)?;
    Ok(similarity_key(m, spec) == similarity_key(n, spec))
}

/// `s_{α,β}` below `m` matches `s_{β,α}` below `n` on all levels.
pub fn are_swap_similar<G: AbelianGroup>(
    m: &Matching,
    n: &Matching,
    spec: &GroupSpec<G>,
) -> Result<bool> {
    same_size(m, n)?;
    Ok(similarity_key(m, spec) == similarity_key(n, &spec.swapped()))
}

/// One similarity class of `ℳ(n)`, members sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimilarityClass<E = GroupElement> {
    pub key: SimilarityKey<E>,
    pub members: Vec<Matching>,
}

impl<E> SimilarityClass<E> {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Lexicographically least member.
    pub fn representative(&self) -> &Matching {
        &self.members[0]
    }
}

fn effective_spec<G: AbelianGroup>(spec: &GroupSpec<G>, swap: bool) -> GroupSpec<G> {
    if swap {
        spec.swapped()
    } else {
        spec.clone()
    }
}

/// Partitions `ℳ(n)` into classes, ordered by key.
///
/// With `swap`, matchings are keyed under `(β, α)`; a class then holds
/// exactly the `N` that are swap-similar to any `M` whose unswapped key
/// equals the class key.
pub fn partition_classes<G: AbelianGroup>(
    n: usize,
    spec: &GroupSpec<G>,
    swap: bool,
    limits: &Limits,
) -> Result<Vec<SimilarityClass<G::Element>>> {
    limits.guard("matchings to partition", &double_factorial_odd(n))?;
    let spec = effective_spec(spec, swap);
    let groups = par_enumerate_matchings(n)
        .map(|m| (similarity_key(&m, &spec), m))
        .fold(BTreeMap::new, |mut acc: BTreeMap<_, Vec<_>>, (k, m)| {
            acc.entry(k).or_default().push(m);
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, mut v) in b {
                a.entry(k).or_default().append(&mut v);
            }
            a
        });
    Ok(groups
        .into_iter()
        .map(|(key, mut members)| {
            members.sort();
            SimilarityClass { key, members }
        })
        .collect())
}

/// Number of classes, without keeping the members.
pub fn count_classes<G: AbelianGroup>(
    n: usize,
    spec: &GroupSpec<G>,
    swap: bool,
    limits: &Limits,
) -> Result<usize> {
    limits.guard("matchings to partition", &double_factorial_odd(n))?;
    let spec = effective_spec(spec, swap);
    let keys = par_enumerate_matchings(n)
        .map(|m| similarity_key(&m, &spec))
        .fold(BTreeSet::new, |mut acc, k| {
            acc.insert(k);
            acc
        })
        .reduce(BTreeSet::new, |mut a, mut b| {
            a.append(&mut b);
            a
        });
    Ok(keys.len())
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

/// Crossing-similarity classes of `ℳ(n)`: `2^{n−2}·(C(n,2) + 2)`, `n ≥ 1`.
pub fn cr_class_count_formula(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let num = pow2(n) * (binomial(n, 2) + 2u32);
    exact_div(&num, &BigUint::from(4u32), "crossing class count")
}

/// Crossing classes among matchings with at least one crossing:
/// `2^{n−2}·C(n,2)`.
pub fn cr_positive_class_count_formula(n: usize) -> BigUint {
    if n < 2 {
        return BigUint::from(0u32);
    }
    exact_div(&(pow2(n) * binomial(n, 2)), &BigUint::from(4u32), "crossing-positive class count")
}

/// Nesting-similarity classes of `ℳ(n)`:
/// `2·4^{n−1} − (3n−1)/(2n+2)·C(2n,n)`, `n ≥ 1`.
pub fn ne_class_count_formula(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let sub = exact_div(
        &(BigUint::from(3 * n - 1) * binomial(2 * n, n)),
        &BigUint::from(2 * n + 2),
        "nesting class count",
    );
    pow2(2 * n - 1) - sub
}

/// Nesting classes among matchings with at least one nesting:
/// `2·4^{n−1} − (3n+1)/(2n+2)·C(2n,n)`. Equals
/// `ne_class_count_formula(n) − catalan(n)`.
pub fn ne_positive_class_count_formula(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::from(0u32);
    }
    let sub = exact_div(
        &(BigUint::from(3 * n + 1) * binomial(2 * n, n)),
        &BigUint::from(2 * n + 2),
        "nesting-positive class count",
    );
    pow2(2 * n - 1) - sub
}

/// The companion count computed from the full class count.
pub fn ne_positive_from_total(n: usize) -> BigUint {
    ne_class_count_formula(n) - catalan(n)
}

/// Parity statistic for [`mod2_classes`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mod2Stat {
    Cr2,
    Ne2,
}

impl Mod2Stat {
    pub fn preset(self) -> Preset {
        match self {
            Mod2Stat::Cr2 => Preset::Cr2,
            Mod2Stat::Ne2 => Preset::Ne2,
        }
    }
}

/// Closed-form and (when affordable) brute-force mod-2 class data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mod2Classes {
    pub n: usize,
    pub stat: Mod2Stat,
    pub formula_count: usize,
    /// Class sizes, largest first; only known in closed form for `cr2`.
    pub formula_sizes: Option<Vec<String>>,
    /// Brute-force class sizes, largest first.
    pub brute_sizes: Option<Vec<usize>>,
}

impl Mod2Classes {
    pub fn brute_count(&self) -> Option<usize> {
        self.brute_sizes.as_ref().map(Vec::len)
    }

    /// Whether the brute-force data (if any) agrees with the closed form.
    pub fn consistent(&self) -> bool {
        let Some(sizes) = &self.brute_sizes else { return true };
        if sizes.len() != self.formula_count {
            return false;
        }
        match &self.formula_sizes {
            Some(fs) => fs.iter().zip(sizes).all(|(f, b)| *f == b.to_string()),
            None => true,
        }
    }
}

pub fn mod2_class_count_formula(n: usize, stat: Mod2Stat) -> usize {
    match (stat, n) {
        (_, 0 | 1) => 1,
        (Mod2Stat::Cr2, _) => 2,
        (Mod2Stat::Ne2, 2) => 3,
        (Mod2Stat::Ne2, _) => 2 * n,
    }
}

pub fn mod2_classes(n: usize, stat: Mod2Stat, limits: &Limits) -> Result<Mod2Classes> {
    let formula_sizes = match (stat, n) {
        (Mod2Stat::Cr2, 0 | 1) => Some(vec!["1".to_string()]),
        (Mod2Stat::Cr2, _) => {
            let total = double_factorial_odd(n);
            let two = BigUint::from(2u32);
            let big = exact_div(&(&total + 1u32), &two, "even-crossing class");
            let small = exact_div(&(&total - 1u32), &two, "odd-crossing class");
            Some(vec![big.to_string(), small.to_string()])
        }
        (Mod2Stat::Ne2, _) => None,
    };
    let brute_sizes = if limits.guard("mod-2 partition", &double_factorial_odd(n)).is_ok() {
        let mut sizes: Vec<usize> = partition_classes(n, &stat.preset().spec(), false, limits)?
            .iter()
            .map(SimilarityClass::size)
            .collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Some(sizes)
    } else {
        None
    };
    Ok(Mod2Classes {
        n,
        stat,
        formula_count: mod2_class_count_formula(n, stat),
        formula_sizes,
        brute_sizes,
    })
}

/// Every edge covers the middle gap.
pub fn is_permutational(m: &Matching) -> bool {
    m.is_permutational()
}
