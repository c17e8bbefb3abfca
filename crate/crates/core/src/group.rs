//! Abelian groups used as weights for crossings and nestings.
//!
//! The sequence machinery is written against [`AbelianGroup`]; the concrete
//! realization shipped here is [`IntGroup`], i.e. `ℤ^k` or `(ℤ_m)^k`.

use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An abelian group with a total order on its elements. The order only
/// serves to canonicalize multisets.
pub trait AbelianGroup: Clone + Send + Sync {
    type Element: Clone + Ord + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Element;
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn neg(&self, a: &Self::Element) -> Self::Element;

    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.add(a, &self.neg(b))
    }

    /// `k · a` for any integer `k`.
    fn times(&self, a: &Self::Element, k: i64) -> Self::Element {
        let mut base = if k < 0 { self.neg(a) } else { a.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = self.zero();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            k >>= 1;
        }
        acc
    }
}

/// An element of `ℤ^k` or `(ℤ_m)^k`. Coordinates are kept reduced to
/// `[0, m)` when a modulus is present.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement(pub Vec<i64>);

impl GroupElement {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroupElement {
    /// A bare integer in dimension one, `(x,y,…)` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.as_slice() {
            [x] => write!(f, "{x}"),
            coords => {
                f.write_str("(")?;
                for (i, c) in coords.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Vec::<i64>::deserialize(d).map(GroupElement)
    }
}

/// `ℤ^dim` when `modulus == 0`, `(ℤ_modulus)^dim` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntGroup {
    dim: usize,
    modulus: u64,
}

impl IntGroup {
    pub fn new(dim: usize, modulus: u64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidGroup("dimension must be at least 1".into()));
        }
        if modulus == 1 || modulus > i64::MAX as u64 {
            return Err(Error::InvalidGroup(format!("unsupported modulus {modulus}")));
        }
        Ok(IntGroup { dim, modulus })
    }

    pub fn integers(dim: usize) -> Self {
        IntGroup { dim: dim.max(1), modulus: 0 }
    }

    pub fn cyclic(dim: usize, modulus: u64) -> Self {
        Self::new(dim, modulus).expect("valid cyclic group")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn reduce(&self, x: i64) -> i64 {
        if self.modulus == 0 {
            x
        } else {
            x.rem_euclid(self.modulus as i64)
        }
    }

    /// Builds an element from raw coordinates, reducing mod `m`.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.dim {
            return Err(Error::InvalidGroup(format!(
                "element has {} coordinates, group dimension is {}",
                coords.len(),
                self.dim
            )));
        }
        Ok(GroupElement(coords.iter().map(|&c| self.reduce(c)).collect()))
    }

    /// Whether `e` has the right dimension and reduced coordinates.
    pub fn contains(&self, e: &GroupElement) -> bool {
        e.0.len() == self.dim && e.0.iter().all(|&c| self.reduce(c) == c)
    }

    fn zip(&self, a: &GroupElement, b: &GroupElement, f: impl Fn(i64, i64) -> i64) -> GroupElement {
        GroupElement(a.0.iter().zip(&b.0).map(|(&x, &y)| self.reduce(f(x, y))).collect())
    }
}

impl AbelianGroup for IntGroup {
    type Element = GroupElement;

    fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.dim])
    }

    fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.zip(a, b, |x, y| x + y)
    }

    fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement(a.0.iter().map(|&x| self.reduce(-x)).collect())
    }

    fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.zip(a, b, |x, y| x - y)
    }

    fn times(&self, a: &GroupElement, k: i64) -> GroupElement {
        GroupElement(a.0.iter().map(|&x| self.reduce(x * k)).collect())
    }
}

/// A group together with the weights `α` (per crossing) and `β` (per
/// nesting) that define the statistic `cr·α + ne·β`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec<G: AbelianGroup = IntGroup> {
    pub group: G,
    pub alpha: G::Element,
    pub beta: G::Element,
}

impl<G: AbelianGroup> GroupSpec<G> {
    pub fn with_weights(group: G, alpha: G::Element, beta: G::Element) -> Self {
        GroupSpec { group, alpha, beta }
    }

    /// The same group with `α` and `β` exchanged.
    pub fn swapped(&self) -> Self {
        GroupSpec { group: self.group.clone(), alpha: self.beta.clone(), beta: self.alpha.clone() }
    }

    /// `cr·α + ne·β`.
    pub fn weigh(&self, cr: u64, ne: u64) -> G::Element {
        let g = &self.group;
        g.add(&g.times(&self.alpha, cr as i64), &g.times(&self.beta, ne as i64))
    }
}

/// Named statistic presets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    Cr,
    Ne,
    Cn,
    Nc,
    Camel,
    Cr2,
    Ne2,
}

impl Preset {
    pub const ALL: [Preset; 7] =
        [Preset::Cr, Preset::Ne, Preset::Cn, Preset::Nc, Preset::Camel, Preset::Cr2, Preset::Ne2];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Cr => "cr",
            Preset::Ne => "ne",
            Preset::Cn => "cn",
            Preset::Nc => "nc",
            Preset::Camel => "camel",
            Preset::Cr2 => "cr2",
            Preset::Ne2 => "ne2",
        }
    }

    pub fn spec(self) -> GroupSpec {
        let (dim, m, alpha, beta): (usize, u64, &[i64], &[i64]) = match self {
            Preset::Cr => (1, 0, &[1], &[0]),
            Preset::Ne => (1, 0, &[0], &[1]),
            Preset::Cn => (2, 0, &[1, 0], &[0, 1]),
            Preset::Nc => (2, 0, &[0, 1], &[1, 0]),
            Preset::Camel => (1, 0, &[1], &[1]),
            Preset::Cr2 => (1, 2, &[1], &[0]),
            Preset::Ne2 => (1, 2, &[0], &[1]),
        };
        let group = IntGroup::new(dim, m).expect("preset group");
        GroupSpec::with_weights(
            group,
            group.element(alpha).expect("preset alpha"),
            group.element(beta).expect("preset beta"),
        )
    }
}

impl std::str::FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownPreset(s.to_string()))
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Looks up a preset name and returns its spec.
pub fn preset(name: &str) -> Result<GroupSpec> {
    name.parse::<Preset>().map(Preset::spec)
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    k: usize,
    #[serde(default)]
    m: u64,
    alpha: Vec<i64>,
    beta: Vec<i64>,
}

impl GroupSpec {
    /// Parses `{"k": …, "m": …, "alpha": […], "beta": […]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawSpec =
            serde_json::from_str(text).map_err(|e| Error::InvalidGroup(e.to_string()))?;
        Self::try_from(raw)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }
}

impl TryFrom<RawSpec> for GroupSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        let group = IntGroup::new(raw.k, raw.m)?;
        Ok(GroupSpec::with_weights(group, group.element(&raw.alpha)?, group.element(&raw.beta)?))
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawSpec {
            k: self.group.dim,
            m: self.group.modulus,
            alpha: self.alpha.0.clone(),
            beta: self.beta.0.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawSpec::deserialize(d)?;
        GroupSpec::try_from(raw).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_reduction() {
        let z2 = IntGroup::cyclic(1, 2);
        let one = z2.element(&[3]).unwrap();
        assert_eq!(one, GroupElement(vec![1]));
        assert_eq!(z2.add(&one, &one), z2.zero());
        assert_eq!(z2.neg(&one), one);
        assert_eq!(z2.times(&one, 5), one);
        assert!(z2.contains(&one));
        assert!(!z2.contains(&GroupElement(vec![2])));
    }

    #[test]
    fn default_times_matches_override() {
        // The trait default must agree with the coordinatewise override.
        #[derive(Clone)]
        struct Plain(IntGroup);
        impl AbelianGroup for Plain {
            type Element = GroupElement;
            fn zero(&self) -> GroupElement {
                self.0.zero()
            }
            fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
                self.0.add(a, b)
            }
            fn neg(&self, a: &GroupElement) -> GroupElement {
                self.0.neg(a)
            }
        }
        for g in [IntGroup::integers(2), IntGroup::cyclic(2, 5)] {
            let x = g.element(&[3, -4]).unwrap();
            for k in -7..=7 {
                assert_eq!(Plain(g).times(&x, k), g.times(&x, k));
            }
        }
    }

    #[test]
    fn presets_and_swap() {
        let cn = Preset::Cn.spec();
        assert_eq!(cn.weigh(3, 2), GroupElement(vec![3, 2]));
        assert_eq!(cn.swapped(), Preset::Nc.spec());
        assert_eq!(Preset::Cr.spec().swapped(), Preset::Ne.spec());
        assert_eq!(Preset::Cr2.spec().weigh(1, 0), GroupElement(vec![1]));
        assert_eq!(Preset::Camel.spec().weigh(2, 3), GroupElement(vec![5]));
        assert!(preset("bogus").is_err());
    }

    #[test]
    fn json_round_trip() {
        for p in Preset::ALL {
            let spec = p.spec();
            assert_eq!(GroupSpec::from_json(&spec.to_json()).unwrap(), spec);
        }
        let spec = GroupSpec::from_json(r#"{"k":1,"m":2,"alpha":[3],"beta":[0]}"#).unwrap();
        assert_eq!(spec, Preset::Cr2.spec());
        assert!(GroupSpec::from_json(r#"{"k":2,"alpha":[1],"beta":[0,1]}"#).is_err());
        assert!(GroupSpec::from_json(r#"{"k":0,"alpha":[],"beta":[]}"#).is_err());
    }

    #[test]
    fn element_display() {
        assert_eq!(GroupElement(vec![3]).to_string(), "3");
        assert_eq!(GroupElement(vec![3, 2]).to_string(), "(3,2)");
    }
}
