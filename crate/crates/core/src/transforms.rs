//! Exchanging one nesting for one crossing (and back) without moving any
//! first or second vertex.
//!
//! For a pair `{a,·}, {b,·}` with `a < b < c < d`, the width is
//! `min(b − a, d − c)`. Swapping endpoints on a pair of minimum width changes
//! no other pair's relation, so `(cr, ne)` moves by exactly one unit.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matching::Matching;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PairKind {
    Nesting,
    Crossing,
}

impl PairKind {
    fn name(self) -> &'static str {
        match self {
            PairKind::Nesting => "nesting",
            PairKind::Crossing => "crossing",
        }
    }
}

/// Which gap realizes the width: between the first vertices (`b − a`) or
/// between the second vertices (`d − c`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WidthSide {
    First,
    Second,
}

/// A crossing or nesting pair with its width. `first` is the edge with the
/// smaller first vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WidthPair {
    pub first: (usize, usize),
    pub second: (usize, usize),
    pub width: usize,
    pub side: WidthSide,
}

/// The pair of the requested kind with least width; ties go to the pair
/// with the lexicographically least `(a, b)`.
pub fn min_width_pair(m: &Matching, kind: PairKind) -> Option<WidthPair> {
    let edges = m.edges();
    let mut best: Option<WidthPair> = None;
    for (i, &(a, x)) in edges.iter().enumerate() {
        for &(b, y) in &edges[i + 1..] {
            if b > x {
                continue;
            }
            let is_kind = match kind {
                PairKind::Crossing => x < y,
                PairKind::Nesting => y < x,
            };
            if !is_kind {
                continue;
            }
            let (c, d) = (x.min(y), x.max(y));
            let (w1, w2) = (b - a, d - c);
            let width = w1.min(w2);
            let side = if w1 <= w2 { WidthSide::First } else { WidthSide::Second };
            // Edges are scanned in (a, b) order, so strict improvement keeps the tie rule.
            if best.is_none_or(|p| width < p.width) {
                best = Some(WidthPair { first: (a, x), second: (b, y), width, side });
            }
        }
    }
    best
}

fn switch(m: &Matching, pair: &WidthPair) -> Matching {
    let (a, x) = pair.first;
    let (b, y) = pair.second;
    // Exchanging the first vertices and exchanging the second vertices give
    // the same pair of edges.
    let (e, f) = match pair.side {
        WidthSide::First => ((b, x), (a, y)),
        WidthSide::Second => ((a, y), (b, x)),
    };
    let edges: Vec<_> = m
        .edges()
        .into_iter()
        .filter(|&edge| edge != pair.first && edge != pair.second)
        .chain([e, f])
        .collect();
    Matching::from_edges(&edges).expect("vertex set unchanged")
}

fn transform(m: &Matching, kind: PairKind) -> Result<Matching> {
    let pair = min_width_pair(m, kind).ok_or(Error::NoSuchPair(kind.name()))?;
    Ok(switch(m, &pair))
}

/// Turns a minimum-width nesting into a crossing: `cr + 1`, `ne − 1`.
pub fn nc_transform(m: &Matching) -> Result<Matching> {
    transform(m, PairKind::Nesting)
}

/// Turns a minimum-width crossing into a nesting: `cr − 1`, `ne + 1`.
pub fn cn_transform(m: &Matching) -> Result<Matching> {
    transform(m, PairKind::Crossing)
}
