//! Perfect matchings on `[2n]`, their crossing/nesting/camel statistics and
//! the tree of matchings generated by inserting a new first edge.
//!
//! Vertices and gaps are 1-based in the public API. A matching with `n`
//! edges has `2n + 1` gaps; gap `j` sits immediately before vertex `j`, and
//! gap `2n + 1` follows the last vertex.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// A perfect matching stored as a fixed-point-free involution.
///
/// Internally `partner[i]` is the 0-based partner of the 0-based vertex `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    partner: Vec<u32>,
}

/// Edge-pair counts of a matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CrossNest {
    pub cr: u64,
    pub ne: u64,
}

/// Per-gap counts: `cover[j]` edges span gap `j + 1`, `left[j]` edges lie
/// completely to its left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapProfile {
    pub cover: Vec<u64>,
    pub left: Vec<u64>,
}

impl Matching {
    pub fn empty() -> Self {
        Matching { partner: Vec::new() }
    }

    /// Builds a matching from 1-based edges in any order or orientation.
    pub fn from_edges(edges: &[(usize, usize)]) -> Result<Self> {
        let tokens: Vec<String> = edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        Self::from_tokens(edges.iter().copied().zip(tokens))
    }

    fn from_tokens(edges: impl Iterator<Item = ((usize, usize), String)>) -> Result<Self> {
        let mut slots: Vec<Option<usize>> = Vec::new();
        for ((a, b), token) in edges {
            if a == 0 || b == 0 {
                return Err(Error::MalformedToken(token));
            }
            if a == b {
                return Err(Error::SelfLoop(token));
            }
            let hi = a.max(b);
            if slots.len() < hi {
                slots.resize(hi, None);
            }
            for (v, w) in [(a, b), (b, a)] {
                if slots[v - 1].is_some() {
                    return Err(Error::RepeatedVertex { vertex: v, token });
                }
                slots[v - 1] = Some(w - 1);
            }
        }
        let max = slots.len();
        let mut partner = Vec::with_capacity(max);
        for (i, slot) in slots.into_iter().enumerate() {
            match slot {
                Some(p) => partner.push(p as u32),
                None => return Err(Error::NonContiguous { missing: i + 1, max }),
            }
        }
        Ok(Matching { partner })
    }

    /// Builds a matching from a 1-based partner array.
    pub fn from_partner(partner: &[usize]) -> Result<Self> {
        let len = partner.len();
        let mut edges = Vec::with_capacity(len / 2);
        for (i, &p) in partner.iter().enumerate() {
            let v = i + 1;
            if p == 0 || p > len || partner[p - 1] != v {
                return Err(Error::MalformedToken(format!("{v}->{p}")));
            }
            if v < p {
                edges.push((v, p));
            } else if v == p {
                return Err(Error::SelfLoop(format!("{v}-{p}")));
            }
        }
        if len % 2 == 1 {
            return Err(Error::NonContiguous { missing: len + 1, max: len });
        }
        Self::from_edges(&edges)
    }

    /// Number of edges.
    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    /// Number of vertices, `2n`.
    pub fn vertex_count(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    /// 1-based partner of the 1-based vertex `v`.
    pub fn partner(&self, v: usize) -> usize {
        self.partner[v - 1] as usize + 1
    }

    /// 1-based partner array.
    pub fn partner_array(&self) -> Vec<usize> {
        self.partner.iter().map(|&p| p as usize + 1).collect()
    }

    /// Canonical edge list: `(a, b)` with `a < b`, sorted by `a`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.edges_iter().collect()
    }

    fn edges_iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(i, &p)| i < p as usize)
            .map(|(i, &p)| (i + 1, p as usize + 1))
    }

    /// Whether vertex `v` (1-based) is the first vertex of its edge.
    pub fn is_opener(&self, v: usize) -> bool {
        v <= self.partner[v - 1] as usize
    }

    pub fn cross_nest(&self) -> CrossNest {
        let edges = self.edges();
        let mut cn = CrossNest::default();
        for (i, &(_, b)) in edges.iter().enumerate() {
            for &(c, d) in &edges[i + 1..] {
                // a < c holds by the sort order.
                if c < b {
                    if b < d {
                        cn.cr += 1;
                    } else {
                        cn.ne += 1;
                    }
                }
            }
        }
        cn
    }

    pub fn crossings(&self) -> u64 {
        self.cross_nest().cr
    }

    pub fn nestings(&self) -> u64 {
        self.cross_nest().ne
    }

    /// Pairs of edges that neither cross nor nest.
    pub fn camels(&self) -> u64 {
        let edges = self.edges();
        let mut ca = 0;
        for (i, &(_, b)) in edges.iter().enumerate() {
            ca += edges[i + 1..].iter().filter(|&&(c, _)| b < c).count() as u64;
        }
        ca
    }

    pub fn gap_profile(&self) -> GapProfile {
        let len = self.partner.len();
        let mut cover = Vec::with_capacity(len + 1);
        let mut left = Vec::with_capacity(len + 1);
        let (mut open, mut closed) = (0u64, 0u64);
        cover.push(0);
        left.push(0);
        for v in 1..=len {
            if self.is_opener(v) {
                open += 1;
            } else {
                open -= 1;
                closed += 1;
            }
            cover.push(open);
            left.push(closed);
        }
        GapProfile { cover, left }
    }

    /// Adds a new first edge `{1, gap + 1}`, shifting the old vertices.
    pub fn insert_first_edge(&self, gap: usize) -> Result<Matching> {
        let len = self.partner.len();
        if gap == 0 || gap > len + 1 {
            return Err(Error::GapOutOfRange { gap, max: len + 1 });
        }
        // Gap g sits before old vertex g (1-based): 0-based v < g−1 moves to
        // v+1, the rest to v+2.
        let x = gap as u32; // 0-based position of the new partner of vertex 0
        let shift = |v: u32| if v + 1 < x { v + 1 } else { v + 2 };
        let mut partner = vec![0u32; len + 2];
        partner[0] = x;
        partner[x as usize] = 0;
        for (v, &p) in self.partner.iter().enumerate() {
            partner[shift(v as u32) as usize] = shift(p);
        }
        Ok(Matching { partner })
    }

    /// Removes the first edge, returning the parent and the gap it was
    /// inserted into.
    pub fn remove_first_edge(&self) -> Result<(Matching, usize)> {
        if self.is_empty() {
            return Err(Error::EmptyMatching);
        }
        let x = self.partner[0];
        let unshift = |v: u32| if v < x { v - 1 } else { v - 2 };
        let partner = self
            .partner
            .iter()
            .enumerate()
            .filter(|&(v, _)| v != 0 && v as u32 != x)
            .map(|(_, &p)| unshift(p))
            .collect();
        Ok((Matching { partner }, x as usize))
    }

    /// The `2n + 1` children in the tree of matchings, in gap order.
    pub fn children(&self) -> Vec<Matching> {
        (1..=self.partner.len() + 1)
            .map(|g| self.insert_first_edge(g).expect("gap in range"))
            .collect()
    }

    /// Gaps chosen along the path from the root, ordered root first.
    pub fn insertion_path(&self) -> Vec<usize> {
        let mut gaps = Vec::with_capacity(self.n());
        let mut cur = self.clone();
        while let Ok((parent, gap)) = cur.remove_first_edge() {
            gaps.push(gap);
            cur = parent;
        }
        gaps.reverse();
        gaps
    }

    /// `{{1,2n}, {2,2n−1}, …, {n,n+1}}`.
    pub fn nested(n: usize) -> Matching {
        let edges: Vec<_> = (1..=n).map(|i| (i, 2 * n + 1 - i)).collect();
        Matching::from_edges(&edges).expect("valid construction")
    }

    /// `{{1,2}, {3,4}, …, {2n−1,2n}}`.
    pub fn adjacent(n: usize) -> Matching {
        let edges: Vec<_> = (1..=n).map(|i| (2 * i - 1, 2 * i)).collect();
        Matching::from_edges(&edges).expect("valid construction")
    }

    /// `{{i, n + π(i)}}` for a 1-based permutation `π` of `[n]`.
    pub fn permutational(perm: &[usize]) -> Result<Matching> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in perm {
            if p == 0 || p > n {
                return Err(Error::InvalidPermutation(format!("value {p} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[p - 1], true) {
                return Err(Error::InvalidPermutation(format!("value {p} repeated")));
            }
        }
        let edges: Vec<_> = perm.iter().enumerate().map(|(i, &p)| (i + 1, n + p)).collect();
        Matching::from_edges(&edges)
    }

    /// Every first vertex lies in `[n]`, i.e. every edge covers the middle gap.
    pub fn is_permutational(&self) -> bool {
        let n = self.n();
        self.edges_iter().all(|(a, _)| a <= n)
    }
}

/// Which canonical family [`canonical_matching`] builds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CanonicalKind {
    Nested,
    Adjacent,
    Permutational(Vec<usize>),
}

pub fn canonical_matching(kind: &CanonicalKind, n: usize) -> Result<Matching> {
    match kind {
        CanonicalKind::Nested => Ok(Matching::nested(n)),
        CanonicalKind::Adjacent => Ok(Matching::adjacent(n)),
        CanonicalKind::Permutational(perm) => {
            if perm.len() != n {
                return Err(Error::InvalidPermutation(format!(
                    "length {} does not match n = {n}",
                    perm.len()
                )));
            }
            Matching::permutational(perm)
        }
    }
}

impl Ord for Matching {
    /// Lexicographic on canonical edge lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.edges_iter().cmp(other.edges_iter())
    }
}

impl PartialOrd for Matching {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, b)) in self.edges_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching({self})")
    }
}

impl FromStr for Matching {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_matching(s)
    }
}

/// Parses `"a1-b1,a2-b2,…"`. Whitespace around tokens is ignored and the
/// empty string is the empty matching.
pub fn parse_matching(text: &str) -> Result<Matching> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Matching::empty());
    }
    let mut parsed = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        let edge = token
            .split_once('-')
            .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
            .ok_or_else(|| Error::MalformedToken(token.to_string()))?;
        parsed.push((edge, token.to_string()));
    }
    Matching::from_tokens(parsed.into_iter())
}

pub fn format_matching(m: &Matching) -> String {
    m.to_string()
}

/// Depth-first stream over the `l`-th level of the subtree rooted at a
/// matching.
pub struct Level {
    depth: usize,
    // (node, next gap to try); the node at index d sits at depth d.
    stack: Vec<(Matching, usize)>,
    pending_root: Option<Matching>,
}

impl Level {
    pub fn new(root: Matching, depth: usize) -> Self {
        if depth == 0 {
            Level { depth, stack: Vec::new(), pending_root: Some(root) }
        } else {
            Level { depth, stack: vec![(root, 1)], pending_root: None }
        }
    }
}

impl Iterator for Level {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if let Some(root) = self.pending_root.take() {
            return Some(root);
        }
        loop {
            let d = self.stack.len();
            let (node, next_gap) = self.stack.last_mut()?;
            if *next_gap > node.vertex_count() + 1 {
                self.stack.pop();
                continue;
            }
            let child = node.insert_first_edge(*next_gap).expect("gap in range");
            *next_gap += 1;
            if d == self.depth {
                return Some(child);
            }
            self.stack.push((child, 1));
        }
    }
}

/// `𝒯(M, l)` as a sequential stream.
pub fn level(m: &Matching, l: usize) -> Level {
    Level::new(m.clone(), l)
}

/// `ℳ(n)` as a sequential stream.
pub fn enumerate_matchings(n: usize) -> Level {
    Level::new(Matching::empty(), n)
}

/// Below this many frontier nodes the parallel split keeps expanding.
const PAR_FRONTIER: usize = 64;

/// `𝒯(M, l)` as a parallel iterator. The first few levels are expanded
/// eagerly so that every worker receives a whole subtree.
pub fn par_level(m: &Matching, l: usize) -> impl ParallelIterator<Item = Matching> {
    let mut frontier = vec![m.clone()];
    let mut remaining = l;
    while remaining > 0 && frontier.len() < PAR_FRONTIER {
        frontier = frontier.iter().flat_map(Matching::children).collect();
        remaining -= 1;
    }
    frontier.into_par_iter().flat_map_iter(move |node| Level::new(node, remaining))
}

pub fn par_enumerate_matchings(n: usize) -> impl ParallelIterator<Item = Matching> {
    par_level(&Matching::empty(), n)
}
