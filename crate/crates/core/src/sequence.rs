//! Group-valued sequences attached to matchings and the rewriting maps that
//! generate them level by level.
//!
//! For a matching `M` with `n` edges, `seq(M)` has `2n + 1` terms. Its first
//! term is the statistic `cr(M)·α + ne(M)·β` and its `j`-th term exceeds the
//! first by `u_j·α + v_j·β`, where `u_j` counts the edges covering gap `j` and
//! `v_j` the edges left of it. Inserting a first edge into gap `i` rewrites
//! the sequence with [`r_step`].

use std::ops::Deref;

use rayon::prelude::*;

use crate::counting::{binomial, level_size};
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, GroupElement, GroupSpec};
use crate::limits::Limits;
use crate::matching::{par_level, Matching};
use crate::multiset::{par_collect, Multiset};

/// Upper bound on the number of index tuples [`f_r_gamma`] and [`g_r`] visit.
pub const TUPLE_CAP: u64 = 1 << 24;

/// A finite sequence of group elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupSequence<E = GroupElement>(pub Vec<E>);

impl<E> Deref for GroupSequence<E> {
    type Target = [E];

    fn deref(&self) -> &[E] {
        &self.0
    }
}

impl<E> From<Vec<E>> for GroupSequence<E> {
    fn from(terms: Vec<E>) -> Self {
        GroupSequence(terms)
    }
}

impl<E: Clone + Ord> GroupSequence<E> {
    pub fn first(&self) -> &E {
        &self.0[0]
    }

    /// The multiset of terms.
    pub fn terms(&self) -> Multiset<E> {
        self.0.iter().cloned().collect()
    }
}

/// `cr(M)·α + ne(M)·β`.
pub fn statistic<G: AbelianGroup>(m: &Matching, spec: &GroupSpec<G>) -> G::Element {
    let cn = m.cross_nest();
    spec.weigh(cn.cr, cn.ne)
}

/// One rewriting step at index `i` (1-based):
/// `x_i · (x_1…x_i + x_i − x_1 + α) · (x_i…x_ℓ + x_i − x_1 + β)`.
pub fn r_step<G: AbelianGroup>(
    spec: &GroupSpec<G>,
    x: &GroupSequence<G::Element>,
    i: usize,
) -> Result<GroupSequence<G::Element>> {
    let len = x.len();
    if i == 0 || i > len {
        return Err(Error::IndexOutOfRange { index: i, len });
    }
    let g = &spec.group;
    let xi = &x[i - 1];
    let lift = g.sub(xi, &x[0]);
    let shift_a = g.add(&lift, &spec.alpha);
    let shift_b = g.add(&lift, &spec.beta);
    let mut out = Vec::with_capacity(len + 2);
    out.push(xi.clone());
    out.extend(x[..i].iter().map(|t| g.add(t, &shift_a)));
    out.extend(x[i - 1..].iter().map(|t| g.add(t, &shift_b)));
    Ok(GroupSequence(out))
}

/// All `ℓ` rewritings of `x`, as a multiset.
pub fn r_all<G: AbelianGroup>(
    spec: &GroupSpec<G>,
    x: &GroupSequence<G::Element>,
) -> Multiset<GroupSequence<G::Element>> {
    (1..=x.len()).map(|i| r_step(spec, x, i).expect("index in range")).collect()
}

/// The rewriting map extended additively to multisets of sequences.
pub fn r_all_multiset<G: AbelianGroup>(
    spec: &GroupSpec<G>,
    xs: &Multiset<GroupSequence<G::Element>>,
) -> Multiset<GroupSequence<G::Element>> {
    let mut out = Multiset::new();
    for (x, &mult) in xs {
        for i in 1..=x.len() {
            out.insert_n(r_step(spec, x, i).expect("index in range"), mult);
        }
    }
    out
}

/// `l`-fold iterate of the rewriting map starting from `{x}`.
pub fn r_iterate<G: AbelianGroup>(
    spec: &GroupSpec<G>,
    x: &GroupSequence<G::Element>,
    l: usize,
) -> Multiset<GroupSequence<G::Element>> {
    let mut cur: Multiset<_> = std::iter::once(x.clone()).collect();
    for _ in 0..l {
        cur = r_all_multiset(spec, &cur);
    }
    cur
}

/// How [`seq`] computes the sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqMethod {
    /// Replay the insertion path from the root through [`r_step`].
    Recursive,
    /// Closed form from the gap profile.
    Direct,
}

pub fn seq<G: AbelianGroup>(
    m: &Matching,
    spec: &GroupSpec<G>,
    method: SeqMethod,
) -> GroupSequence<G::Element> {
    match method {
        SeqMethod::Recursive => {
            let root = GroupSequence(vec![spec.group.zero()]);
            m.insertion_path()
                .into_iter()
                .fold(root, |x, gap| r_step(spec, &x, gap).expect("gap in range"))
        }
        SeqMethod::Direct => {
            let cn = m.cross_nest();
            let gp = m.gap_profile();
            let terms = gp
                .cover
                .iter()
                .zip(&gp.left)
                .map(|(&u, &v)| spec.weigh(cn.cr + u, cn.ne + v))
                .collect();
            GroupSequence(terms)
        }
    }
}

/// Calls `visit` once per weakly increasing 0-based index tuple of length
/// `r` over `0..len`.
fn for_each_weak_tuple(len: usize, r: usize, mut visit: impl FnMut(&[usize])) {
    let mut idx = vec![0usize; r];
    if r > 0 && len == 0 {
        return;
    }
    loop {
        visit(&idx);
        let Some(p) = idx.iter().rposition(|&a| a + 1 < len) else {
            return;
        };
        let v = idx[p] + 1;
        idx[p..].iter_mut().for_each(|a| *a = v);
    }
}

fn guard_tuples(len: usize, r: usize) -> Result<()> {
    let count = match (len, r) {
        (0, 0) => 1u32.into(),
        (0, _) => 0u32.into(),
        _ => binomial(len + r - 1, r),
    };
    if count > TUPLE_CAP.into() {
        return Err(Error::CapExceeded {
            what: format!("index tuples of length {r} over {len} terms"),
            required: count.to_string(),
            cap: TUPLE_CAP,
        });
    }
    Ok(())
}

/// `{x_{a_1} + … + x_{a_r} − (r−1)·x_1 + γ : 1 ≤ a_1 ≤ … ≤ a_r ≤ ℓ}`.
pub fn f_r_gamma<G: AbelianGroup>(
    group: &G,
    x: &GroupSequence<G::Element>,
    r: usize,
    gamma: &G::Element,
) -> Result<Multiset<G::Element>> {
    if x.is_empty() {
        return Err(Error::IndexOutOfRange { index: 1, len: 0 });
    }
    guard_tuples(x.len(), r)?;
    let base = group.add(gamma, &group.times(&x[0], 1 - r as i64));
    let mut out = Multiset::new();
    for_each_weak_tuple(x.len(), r, |idx| {
        let v = idx.iter().fold(base.clone(), |acc, &a| group.add(&acc, &x[a]));
        out.insert(v);
    });
    Ok(out)
}

/// [`f_r_gamma`] extended additively to a multiset of sequences.
pub fn f_r_gamma_multiset<G: AbelianGroup>(
    group: &G,
    xs: &Multiset<GroupSequence<G::Element>>,
    r: usize,
    gamma: &G::Element,
) -> Result<Multiset<G::Element>> {
    let mut out = Multiset::new();
    for (x, &mult) in xs {
        for (v, &k) in &f_r_gamma(group, x, r, gamma)? {
            out.insert_n(v.clone(), k * mult);
        }
    }
    Ok(out)
}

/// `{x_{a_1} + … + x_{a_r} : 1 ≤ a_1 ≤ … ≤ a_r ≤ ℓ}`.
pub fn g_r<G: AbelianGroup>(
    group: &G,
    x: &GroupSequence<G::Element>,
    r: usize,
) -> Result<Multiset<G::Element>> {
    guard_tuples(x.len(), r)?;
    let mut out = Multiset::new();
    for_each_weak_tuple(x.len(), r, |idx| {
        out.insert(idx.iter().fold(group.zero(), |acc, &a| group.add(&acc, &x[a])));
    });
    Ok(out)
}

/// How [`level_distribution`] computes the multiset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistributionMethod {
    /// Evaluate the statistic on every matching of the level.
    Brute,
    /// Read first terms off the iterated rewriting of `seq(M)`.
    Sequence,
}

/// The statistic over `𝒯(M, l)`, as a multiset of group elements.
pub fn level_distribution<G: AbelianGroup>(
    m: &Matching,
    l: usize,
    spec: &GroupSpec<G>,
    method: DistributionMethod,
    limits: &Limits,
) -> Result<Multiset<G::Element>> {
    limits.guard("level", &level_size(m.n(), l))?;
    Ok(match method {
        DistributionMethod::Brute => par_collect(par_level(m, l).map(|c| statistic(&c, spec))),
        DistributionMethod::Sequence => {
            let start = seq(m, spec, SeqMethod::Direct);
            if l == 0 {
                std::iter::once(start.first().clone()).collect()
            } else {
                // First terms of R(x) are exactly the terms of x.
                let mut out = Multiset::new();
                for (x, &mult) in &r_iterate(spec, &start, l - 1) {
                    for t in x.iter() {
                        out.insert_n(t.clone(), mult);
                    }
                }
                out
            }
        }
    })
}
