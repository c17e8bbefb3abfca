//! Finite multisets with a canonical (sorted) representation.

use std::collections::btree_map::{self, BTreeMap};

use rayon::prelude::*;

/// A finite multiset. Equality is multiset equality; iteration is in
/// ascending element order with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiset<T: Ord> {
    counts: BTreeMap<T, u64>,
    total: u64,
}

impl<T: Ord> Default for Multiset<T> {
    fn default() -> Self {
        Multiset { counts: BTreeMap::new(), total: 0 }
    }
}

impl<T: Ord> Multiset<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, item: T) {
        self.insert_n(item, 1);
    }

    pub fn insert_n(&mut self, item: T, n: u64) {
        if n == 0 {
            return;
        }
        *self.counts.entry(item).or_insert(0) += n;
        self.total += n;
    }

    pub fn count(&self, item: &T) -> u64 {
        self.counts.get(item).copied().unwrap_or(0)
    }

    /// Cardinality counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    /// Number of distinct elements.
    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    /// `(element, multiplicity)` pairs in ascending order.
    pub fn iter(&self) -> btree_map::Iter<'_, T, u64> {
        self.counts.iter()
    }

    /// Sum of multisets: multiplicities add.
    pub fn merge(&mut self, other: Multiset<T>) {
        let (big, small) = if self.counts.len() >= other.counts.len() {
            (std::mem::take(self), other)
        } else {
            (other, std::mem::take(self))
        };
        *self = big;
        for (item, n) in small.counts {
            self.insert_n(item, n);
        }
    }

    pub fn merged(mut self, other: Multiset<T>) -> Self {
        self.merge(other);
        self
    }

    /// Maps every element, keeping multiplicities.
    pub fn map<U: Ord>(&self, mut f: impl FnMut(&T) -> U) -> Multiset<U> {
        let mut out = Multiset::new();
        for (item, &n) in &self.counts {
            out.insert_n(f(item), n);
        }
        out
    }

    /// Sorted list with repetitions.
    pub fn to_sorted_vec(&self) -> Vec<T>
    where
        T: Clone,
    {
        let mut out = Vec::with_capacity(self.total as usize);
        for (item, &n) in &self.counts {
            out.extend(std::iter::repeat_n(item.clone(), n as usize));
        }
        out
    }
}

impl<T: Ord> FromIterator<T> for Multiset<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut m = Multiset::new();
        m.extend(iter);
        m
    }
}

impl<T: Ord> Extend<T> for Multiset<T> {
    fn extend<I: IntoIterator<Item = T>>(&mut self, iter: I) {
        for item in iter {
            self.insert(item);
        }
    }
}

impl<'a, T: Ord> IntoIterator for &'a Multiset<T> {
    type Item = (&'a T, &'a u64);
    type IntoIter = btree_map::Iter<'a, T, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.counts.iter()
    }
}

/// Collects a parallel iterator into a multiset by fold + merge.
pub fn par_collect<T, I>(iter: I) -> Multiset<T>
where
    T: Ord + Send,
    I: ParallelIterator<Item = T>,
{
    iter.fold(Multiset::new, |mut m, x| {
        m.insert(x);
        m
    })
    .reduce(Multiset::new, Multiset::merged)
}
