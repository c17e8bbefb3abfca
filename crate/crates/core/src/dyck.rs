//! Dyck paths and the map sending a matching to the path that steps up at
//! every first vertex and down at every second vertex.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matching::Matching;
use crate::transforms::nc_transform;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

/// A lattice path of `U`/`D` steps that never dips below zero and ends at
/// zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

/// A tunnel, identified by the 1-based indices of its supporting up and
/// down steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tunnel {
    pub up: usize,
    pub down: usize,
}

impl Tunnel {
    /// Whether `self`'s projection strictly contains `other`'s.
    pub fn covers(&self, other: &Tunnel) -> bool {
        self.up < other.up && other.down < self.down
    }
}

/// A composition `(a_1, …, a_m)`: `a_i` counts the up/down pairs of steps
/// inside the horizontal strip between heights `i − 1` and `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Profile(Vec<usize>);

impl Profile {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(i) = parts.iter().position(|&a| a == 0) {
            return Err(Error::InvalidProfile(format!("part {} is zero", i + 1)));
        }
        Ok(Profile(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The integer being composed.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts, which is also the peak height.
    pub fn height(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h = 0i64;
        for (i, s) in steps.iter().enumerate() {
            h += if *s == Step::Up { 1 } else { -1 };
            if h < 0 {
                return Err(Error::InvalidDyck(format!("path goes below zero at step {}", i + 1)));
            }
        }
        if h != 0 {
            return Err(Error::InvalidDyck(format!("path ends at height {h}")));
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Heights after each step, starting with the initial 0.
    pub fn altitude_sequence(&self) -> Vec<u64> {
        let mut als = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0u64;
        als.push(0);
        for s in &self.steps {
            match s {
                Step::Up => h += 1,
                Step::Down => h -= 1,
            }
            als.push(h);
        }
        als
    }

    /// Down steps among the first `i` steps, for `i = 0..=2n`.
    pub fn down_sequence(&self) -> Vec<u64> {
        let mut dos = Vec::with_capacity(self.steps.len() + 1);
        let mut d = 0u64;
        dos.push(0);
        for s in &self.steps {
            if *s == Step::Down {
                d += 1;
            }
            dos.push(d);
        }
        dos
    }

    pub fn profile(&self) -> Profile {
        let mut strips: Vec<usize> = Vec::new();
        let mut h = 0usize;
        for s in &self.steps {
            // An up step from h lands in strip h+1; a down step from h lies in strip h.
            let strip = match s {
                Step::Up => {
                    h += 1;
                    h
                }
                Step::Down => {
                    h -= 1;
                    h + 1
                }
            };
            if strips.len() < strip {
                strips.resize(strip, 0);
            }
            strips[strip - 1] += 1;
        }
        Profile(strips.into_iter().map(|c| c / 2).collect())
    }

    /// Tunnels by stack pairing, ordered by up step.
    pub fn tunnels(&self) -> Vec<Tunnel> {
        let mut stack = Vec::new();
        let mut out = Vec::with_capacity(self.semilength());
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::Up => stack.push(i + 1),
                Step::Down => {
                    let up = stack.pop().expect("valid Dyck path");
                    out.push(Tunnel { up, down: i + 1 });
                }
            }
        }
        out.sort();
        out
    }

    /// Ordered pairs of distinct tunnels where the first covers the second.
    pub fn tunnel_cover_count(&self) -> u64 {
        let t = self.tunnels();
        let mut count = 0;
        for a in &t {
            count += t.iter().filter(|b| a.covers(b)).count() as u64;
        }
        count
    }

    /// The unique crossing-free matching mapping to this path.
    pub fn noncrossing_preimage(&self) -> Matching {
        let edges: Vec<_> = self.tunnels().into_iter().map(|t| (t.up, t.down)).collect();
        Matching::from_edges(&edges).expect("tunnels pair every step")
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == Step::Up { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    /// Accepts `U`/`D` (either case) or `(`/`)`.
    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' | '(' => Ok(Step::Up),
                'D' | 'd' | ')' => Ok(Step::Down),
                other => Err(Error::InvalidDyck(format!("unexpected character `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

/// Up at every first vertex, down at every second vertex.
pub fn to_dyck(m: &Matching) -> DyckPath {
    let steps = (1..=m.vertex_count())
        .map(|v| if m.is_opener(v) { Step::Up } else { Step::Down })
        .collect();
    DyckPath { steps }
}

/// `S(a) = Σ (i − 1)·a_i`.
pub fn profile_weight(a: &Profile) -> u64 {
    a.0.iter().enumerate().map(|(i, &ai)| (i * ai) as u64).sum()
}

/// A path with the given profile: climb to the peak, then on the way down
/// spend the extra pairs of each strip as `DU` wiggles at its top.
pub fn path_from_profile(a: &Profile) -> DyckPath {
    let m = a.height();
    let mut steps = vec![Step::Up; m];
    for strip in (1..=m).rev() {
        for _ in 1..a.0[strip - 1] {
            steps.push(Step::Down);
            steps.push(Step::Up);
        }
        steps.push(Step::Down);
    }
    DyckPath { steps }
}

/// Crossing numbers attained by matchings whose path has profile `a`.
pub fn realizable_crossings(a: &Profile) -> RangeInclusive<u64> {
    0..=profile_weight(a)
}

/// A matching with path profile `a` and exactly `cr` crossings, built by
/// trading nestings for crossings from the crossing-free preimage.
pub fn crossing_witness(a: &Profile, cr: u64) -> Option<Matching> {
    if !realizable_crossings(a).contains(&cr) {
        return None;
    }
    let mut m = path_from_profile(a).noncrossing_preimage();
    for _ in 0..cr {
        m = nc_transform(&m).ok()?;
    }
    Some(m)
}

/// All Dyck paths of semilength `n`, in lexicographic order (`U < D`).
pub fn enumerate_dyck_paths(n: usize) -> Vec<DyckPath> {
    fn go(n: usize, ups: usize, downs: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if ups == n && downs == n {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if ups < n {
            cur.push(Step::Up);
            go(n, ups + 1, downs, cur, out);
            cur.pop();
        }
        if downs < ups {
            cur.push(Step::Down);
            go(n, ups, downs + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

/// Parallel variant of [`enumerate_dyck_paths`], order unspecified.
pub fn par_dyck_paths(n: usize) -> impl ParallelIterator<Item = DyckPath> {
    enumerate_dyck_paths(n).into_par_iter()
}

/// All compositions of `n`, ordered lexicographically.
pub fn compositions(n: usize) -> Vec<Profile> {
    fn go(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Profile>) {
        if rest == 0 {
            out.push(Profile(cur.clone()));
            return;
        }
        for part in 1..=rest {
            cur.push(part);
            go(rest - part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}
