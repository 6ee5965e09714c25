//! Finitely described infinite frames, where Scott-openness stops being
//! automatic.
//!
//! Two fixtures are modeled through descriptor algebras rather than element
//! enumeration:
//!
//! * the chain ω+1 — elements `Nat(k)` for every natural plus a top above
//!   them all. The top is the join of the naturals but exceeds every finite
//!   sub-join, so its principal filter is the canonical non-Scott-open
//!   filter and the frame is not compact.
//! * the cofinite frame over ℕ — the opens of the cofinite topology: the
//!   empty set plus every `Missing(A)` = ℕ∖A for finite A. Binary meets
//!   of cofinite sets stay cofinite (ℕ is infinite), arbitrary joins only
//!   discard finitely much, so every nonzero element is compact and the
//!   frame is compact.
//!
//! Every quantifier over "arbitrary families" or "arbitrary subsets" is
//! interpreted over the built-in family rules: each rule carries closed
//! forms for its members, its prefix joins, and its join, and the closed
//! forms are cross-checked against literally computed finite prefixes in
//! the report battery and the tests. Classification tables (which filters
//! are Scott-open, which descriptors are points, the spectrum order) are
//! stated with their derivations in doc comments and re-verified against
//! the rule algebra at run time.

mod battery;
mod family;
mod filters;
mod spectrum;

pub use filters::{CompactClassification, PrimalityVerdict, ScottClassification, ScottOutcome};
pub use spectrum::{FrameCompactness, MinPoints};

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Fixture {
    ChainOmegaPlusOne,
    CofiniteNat,
}

/// An element of a fixture frame. `Nat`/`Top` belong to the chain,
/// `Empty`/`Missing` to the cofinite frame; `Missing(A)` denotes ℕ∖A, so
/// `Missing(∅)` is the top element ℕ. The finite exception sets are kept
/// canonical (sorted, deduplicated) by representation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "args")]
pub enum Element {
    Nat(u64),
    Top,
    Empty,
    Missing(BTreeSet<u64>),
}

/// A generator rule for an infinite family, with closed forms implemented
/// in the family module.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "args")]
pub enum GenRule {
    /// Chain: g(k) = Nat(k). Ascending; join Top, never attained by a
    /// finite prefix.
    Naturals,
    /// Chain: g(k) = Nat(min(k, cap)). Ascending; join Nat(cap), attained
    /// at prefix `cap`.
    NaturalsBelow { cap: u64 },
    /// Cofinite: g(k) = Missing(keep_missing ∪ refill[k..]) — the refill
    /// elements are restored to the set one per step while `keep_missing`
    /// stays excluded. Ascending; join Missing(keep_missing), attained once
    /// the refill list is exhausted. Refill elements inside `keep_missing`
    /// are ignored.
    RefillAscending {
        keep_missing: BTreeSet<u64>,
        refill: BTreeSet<u64>,
    },
    /// Cofinite: g(k) = Missing(base ∪ {σ(k)}) where σ enumerates ℕ∖base
    /// in increasing order. Not ascending (distinct members are
    /// incomparable), but any two members already join to Missing(base), so
    /// prefix joins attain the join at index 1. This family witnesses that
    /// Principal(Missing(base)) is not completely prime: the join lands in
    /// the filter while every single member misses it.
    ExtendEach { base: BTreeSet<u64> },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "args")]
pub enum Family {
    Finite { members: Vec<Element> },
    Generated { rule: GenRule },
}

/// A filter of a fixture frame.
///
/// Denotations: `Principal(x)` = ↑x; `ContainsAll(A)` = the cofinite sets
/// containing every element of A, i.e. {Missing(B) : A ∩ B = ∅};
/// `AllNonzero` = every element except the bottom; `Improper` = the whole
/// frame. Canonical forms: `Principal(bottom)` is `Improper` and
/// `ContainsAll(∅)` is `AllNonzero`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "args")]
pub enum FilterDesc {
    Principal(Element),
    ContainsAll(BTreeSet<u64>),
    AllNonzero,
    Improper,
}

/// A point of a fixture frame: a completely prime filter.
///
/// Chain: `ChainPoint(m)` = ↑Nat(m) for m ≥ 1 (↑Nat(0) is improper and
/// ↑Top is not completely prime, so neither is a point). Cofinite:
/// `CofinitePoint(n)` = the cofinite sets containing n, and `Generic` = all
/// nonzero elements — the focal point the cofinite topology gains under
/// soberification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "args")]
pub enum PointDesc {
    ChainPoint(u64),
    CofinitePoint(u64),
    Generic,
}

/// A compact saturated set of points, i.e. an upset in the spectrum order
/// that every open cover finitely subcovers.
///
/// Chain (spectrum order P(j) ≤ P(k) iff k ≤ j): `PrefixPoints(m)` =
/// {P(1), …, P(m)} = ↑P(m). Cofinite (every F(n) below Generic, the F(n)
/// pairwise incomparable): `FinitePlusGeneric(S)` = {F(n) : n ∈ S} ∪
/// {Generic} and `CofinitePlusGeneric(M)` = {F(n) : n ∉ M} ∪ {Generic}.
/// Canonical forms: `PrefixPoints(0)` is `EmptySet` and
/// `FinitePlusGeneric(∅)` is `GenericOnly`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "args")]
pub enum SatSetDesc {
    EmptySet,
    PrefixPoints(u64),
    GenericOnly,
    FinitePlusGeneric(BTreeSet<u64>),
    CofinitePlusGeneric(BTreeSet<u64>),
}

/// One row of the fixture invariant battery.
#[derive(Clone, Debug, Serialize)]
pub struct FixtureCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureReport {
    pub fixture: String,
    pub checks: Vec<FixtureCheck>,
}

impl FixtureReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub(crate) fn fmt_nat_set(s: &BTreeSet<u64>) -> String {
    let parts: Vec<String> = s.iter().map(|n| n.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Nat(k) => write!(f, "Nat({k})"),
            Element::Top => write!(f, "Top"),
            Element::Empty => write!(f, "Empty"),
            Element::Missing(a) => write!(f, "Missing{}", fmt_nat_set(a)),
        }
    }
}

impl fmt::Display for GenRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenRule::Naturals => write!(f, "Naturals"),
            GenRule::NaturalsBelow { cap } => write!(f, "NaturalsBelow({cap})"),
            GenRule::RefillAscending {
                keep_missing,
                refill,
            } => write!(
                f,
                "RefillAscending(keep {}, refill {})",
                fmt_nat_set(keep_missing),
                fmt_nat_set(refill)
            ),
            GenRule::ExtendEach { base } => write!(f, "ExtendEach{}", fmt_nat_set(base)),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Finite { members } => {
                let parts: Vec<String> = members.iter().map(|m| m.to_string()).collect();
                write!(f, "[{}]", parts.join(", "))
            }
            Family::Generated { rule } => write!(f, "{rule}"),
        }
    }
}

impl fmt::Display for FilterDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FilterDesc::Principal(x) => write!(f, "Principal({x})"),
            FilterDesc::ContainsAll(a) => write!(f, "ContainsAll{}", fmt_nat_set(a)),
            FilterDesc::AllNonzero => write!(f, "AllNonzero"),
            FilterDesc::Improper => write!(f, "Improper"),
        }
    }
}

impl fmt::Display for PointDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointDesc::ChainPoint(m) => write!(f, "P({m})"),
            PointDesc::CofinitePoint(n) => write!(f, "F({n})"),
            PointDesc::Generic => write!(f, "Generic"),
        }
    }
}

impl fmt::Display for SatSetDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SatSetDesc::EmptySet => write!(f, "EmptySet"),
            SatSetDesc::PrefixPoints(m) => write!(f, "PrefixPoints({m})"),
            SatSetDesc::GenericOnly => write!(f, "GenericOnly"),
            SatSetDesc::FinitePlusGeneric(s) => {
                write!(f, "FinitePlusGeneric{}", fmt_nat_set(s))
            }
            SatSetDesc::CofinitePlusGeneric(m) => {
                write!(f, "CofinitePlusGeneric{}", fmt_nat_set(m))
            }
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl Fixture {
    pub const ALL: [Fixture; 2] = [Fixture::ChainOmegaPlusOne, Fixture::CofiniteNat];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::ChainOmegaPlusOne => "chain-omega-plus-one",
            Fixture::CofiniteNat => "cofinite-naturals",
        }
    }

    pub fn bottom(self) -> Element {
        match self {
            Fixture::ChainOmegaPlusOne => Element::Nat(0),
            Fixture::CofiniteNat => Element::Empty,
        }
    }

    pub fn top(self) -> Element {
        match self {
            Fixture::ChainOmegaPlusOne => Element::Top,
            Fixture::CofiniteNat => Element::Missing(BTreeSet::new()),
        }
    }

    pub fn validate_element(self, a: &Element) -> Result<()> {
        let ok = match self {
            Fixture::ChainOmegaPlusOne => matches!(a, Element::Nat(_) | Element::Top),
            Fixture::CofiniteNat => matches!(a, Element::Empty | Element::Missing(_)),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::FixtureMismatch(format!(
                "element {a} does not live in {self}"
            )))
        }
    }

    /// The frame order on descriptors.
    pub fn elem_leq(self, a: &Element, b: &Element) -> Result<bool> {
        self.validate_element(a)?;
        self.validate_element(b)?;
        Ok(match (a, b) {
            (Element::Nat(j), Element::Nat(k)) => j <= k,
            (_, Element::Top) => true,
            (Element::Top, _) => false,
            (Element::Empty, _) => true,
            (_, Element::Empty) => false,
            // ℕ∖A ⊆ ℕ∖B iff B ⊆ A.
            (Element::Missing(x), Element::Missing(y)) => y.is_subset(x),
            _ => unreachable!("fixture validation admits no cross-fixture pair"),
        })
    }

    pub fn elem_meet(self, a: &Element, b: &Element) -> Result<Element> {
        self.validate_element(a)?;
        self.validate_element(b)?;
        Ok(match (a, b) {
            (Element::Nat(j), Element::Nat(k)) => Element::Nat(*j.min(k)),
            (Element::Top, x) | (x, Element::Top) => x.clone(),
            (Element::Empty, _) | (_, Element::Empty) => Element::Empty,
            // (ℕ∖X) ∩ (ℕ∖Y) = ℕ∖(X∪Y), still cofinite — never Empty.
            (Element::Missing(x), Element::Missing(y)) => {
                Element::Missing(x.union(y).copied().collect())
            }
            _ => unreachable!("fixture validation admits no cross-fixture pair"),
        })
    }

    pub fn elem_join(self, a: &Element, b: &Element) -> Result<Element> {
        self.validate_element(a)?;
        self.validate_element(b)?;
        Ok(match (a, b) {
            (Element::Nat(j), Element::Nat(k)) => Element::Nat(*j.max(k)),
            (Element::Top, _) | (_, Element::Top) => Element::Top,
            (Element::Empty, x) | (x, Element::Empty) => x.clone(),
            (Element::Missing(x), Element::Missing(y)) => {
                Element::Missing(x.intersection(y).copied().collect())
            }
            _ => unreachable!("fixture validation admits no cross-fixture pair"),
        })
    }

    /// Join of a finite list; the empty join is the bottom.
    pub fn join_finite(self, items: &[Element]) -> Result<Element> {
        let mut acc = self.bottom();
        for x in items {
            acc = self.elem_join(&acc, x)?;
        }
        Ok(acc)
    }

    /// Rewrite a filter descriptor to canonical form and check it belongs
    /// to this fixture.
    pub fn canonical_filter(self, f: &FilterDesc) -> Result<FilterDesc> {
        match (self, f) {
            (_, FilterDesc::Improper) => Ok(FilterDesc::Improper),
            (_, FilterDesc::Principal(x)) => {
                self.validate_element(x)?;
                if *x == self.bottom() {
                    Ok(FilterDesc::Improper)
                } else {
                    Ok(FilterDesc::Principal(x.clone()))
                }
            }
            (Fixture::CofiniteNat, FilterDesc::ContainsAll(a)) => {
                if a.is_empty() {
                    Ok(FilterDesc::AllNonzero)
                } else {
                    Ok(FilterDesc::ContainsAll(a.clone()))
                }
            }
            (Fixture::CofiniteNat, FilterDesc::AllNonzero) => Ok(FilterDesc::AllNonzero),
            (Fixture::ChainOmegaPlusOne, other) => Err(Error::FixtureMismatch(format!(
                "filter {other} does not live in {self}"
            ))),
        }
    }

    /// Deterministic element sample: the boundary cases plus seeded draws.
    pub fn sample_elements(self, seed: u64, count: usize, max_nat: u64) -> Vec<Element> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0000 ^ self.salt());
        let mut out: Vec<Element> = match self {
            Fixture::ChainOmegaPlusOne => vec![
                Element::Nat(0),
                Element::Nat(1),
                Element::Nat(2),
                Element::Nat(max_nat),
                Element::Top,
            ],
            Fixture::CofiniteNat => vec![
                Element::Empty,
                Element::Missing(BTreeSet::new()),
                Element::Missing([0].into_iter().collect()),
                Element::Missing([0, 1, 2].into_iter().collect()),
            ],
        };
        while out.len() < count {
            out.push(match self {
                Fixture::ChainOmegaPlusOne => Element::Nat(rng.gen_range(0..=max_nat)),
                Fixture::CofiniteNat => {
                    let size = rng.gen_range(0..=4usize);
                    let set: BTreeSet<u64> =
                        (0..size).map(|_| rng.gen_range(0..=max_nat)).collect();
                    Element::Missing(set)
                }
            });
        }
        out.sort();
        out.dedup();
        out
    }

    fn salt(self) -> u64 {
        match self {
            Fixture::ChainOmegaPlusOne => 0x0c41a,
            Fixture::CofiniteNat => 0x0c0f1,
        }
    }

    /// The families every universal claim is checked against. Each rule
    /// class appears with boundary and generic parameters.
    pub fn builtin_families(self) -> Vec<Family> {
        match self {
            Fixture::ChainOmegaPlusOne => vec![
                Family::Finite { members: vec![] },
                Family::Finite {
                    members: vec![Element::Nat(0), Element::Nat(2), Element::Nat(1)],
                },
                Family::Finite {
                    members: vec![Element::Nat(5), Element::Top],
                },
                Family::Generated {
                    rule: GenRule::Naturals,
                },
                Family::Generated {
                    rule: GenRule::NaturalsBelow { cap: 0 },
                },
                Family::Generated {
                    rule: GenRule::NaturalsBelow { cap: 7 },
                },
                Family::Generated {
                    rule: GenRule::NaturalsBelow { cap: 1000 },
                },
            ],
            Fixture::CofiniteNat => vec![
                Family::Finite { members: vec![] },
                Family::Finite {
                    members: vec![Element::Empty],
                },
                Family::Finite {
                    members: vec![
                        Element::Missing([1].into_iter().collect()),
                        Element::Missing([2].into_iter().collect()),
                    ],
                },
                Family::Generated {
                    rule: GenRule::RefillAscending {
                        keep_missing: BTreeSet::new(),
                        refill: [0, 1, 2].into_iter().collect(),
                    },
                },
                Family::Generated {
                    rule: GenRule::RefillAscending {
                        keep_missing: [5].into_iter().collect(),
                        refill: [0, 3].into_iter().collect(),
                    },
                },
                Family::Generated {
                    rule: GenRule::ExtendEach {
                        base: BTreeSet::new(),
                    },
                },
                Family::Generated {
                    rule: GenRule::ExtendEach {
                        base: [1, 2].into_iter().collect(),
                    },
                },
            ],
        }
    }

    /// Representative filter descriptors, canonical, covering every class
    /// the classification tables mention.
    pub fn filter_inventory(self) -> Vec<FilterDesc> {
        match self {
            Fixture::ChainOmegaPlusOne => vec![
                FilterDesc::Improper,
                FilterDesc::Principal(Element::Nat(1)),
                FilterDesc::Principal(Element::Nat(7)),
                FilterDesc::Principal(Element::Nat(1000)),
                FilterDesc::Principal(Element::Top),
            ],
            Fixture::CofiniteNat => vec![
                FilterDesc::Improper,
                FilterDesc::AllNonzero,
                FilterDesc::ContainsAll([0].into_iter().collect()),
                FilterDesc::ContainsAll([2, 7].into_iter().collect()),
                FilterDesc::ContainsAll([0, 5].into_iter().collect()),
                FilterDesc::Principal(Element::Missing(BTreeSet::new())),
                FilterDesc::Principal(Element::Missing([1].into_iter().collect())),
                FilterDesc::Principal(Element::Missing([1, 2].into_iter().collect())),
            ],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_order_frozen_cases() {
        let ch = Fixture::ChainOmegaPlusOne;
        assert!(ch.elem_leq(&Element::Nat(2), &Element::Top).unwrap());
        assert!(!ch.elem_leq(&Element::Top, &Element::Nat(900)).unwrap());

        let co = Fixture::CofiniteNat;
        let m = |xs: &[u64]| Element::Missing(xs.iter().copied().collect());
        assert!(co.elem_leq(&m(&[1, 2]), &m(&[1])).unwrap());
        assert!(!co.elem_leq(&m(&[1]), &m(&[2])).unwrap());
        assert_eq!(co.elem_meet(&m(&[1]), &m(&[2])).unwrap(), m(&[1, 2]));
        assert_eq!(co.elem_join(&m(&[1]), &m(&[2])).unwrap(), m(&[]));
        assert_eq!(
            ch.elem_join(&Element::Nat(3), &Element::Nat(5)).unwrap(),
            Element::Nat(5)
        );
    }

    #[test]
    fn empty_join_is_bottom() {
        for fx in Fixture::ALL {
            assert_eq!(fx.join_finite(&[]).unwrap(), fx.bottom());
        }
    }

    #[test]
    fn cross_fixture_elements_are_rejected() {
        assert!(matches!(
            Fixture::ChainOmegaPlusOne.validate_element(&Element::Empty),
            Err(Error::FixtureMismatch(_))
        ));
        assert!(matches!(
            Fixture::CofiniteNat.validate_element(&Element::Top),
            Err(Error::FixtureMismatch(_))
        ));
    }

    #[test]
    fn filter_canonicalization() {
        let ch = Fixture::ChainOmegaPlusOne;
        assert_eq!(
            ch.canonical_filter(&FilterDesc::Principal(Element::Nat(0)))
                .unwrap(),
            FilterDesc::Improper
        );
        let co = Fixture::CofiniteNat;
        assert_eq!(
            co.canonical_filter(&FilterDesc::Principal(Element::Empty))
                .unwrap(),
            FilterDesc::Improper
        );
        assert_eq!(
            co.canonical_filter(&FilterDesc::ContainsAll(BTreeSet::new()))
                .unwrap(),
            FilterDesc::AllNonzero
        );
        assert!(matches!(
            ch.canonical_filter(&FilterDesc::AllNonzero),
            Err(Error::FixtureMismatch(_))
        ));
    }

    #[test]
    fn element_order_laws_on_samples() {
        for fx in Fixture::ALL {
            let sample = fx.sample_elements(7, 24, 50);
            for a in &sample {
                assert!(fx.elem_leq(a, a).unwrap());
                assert!(fx.elem_leq(&fx.bottom(), a).unwrap());
                assert!(fx.elem_leq(a, &fx.top()).unwrap());
            }
            for a in &sample {
                for b in &sample {
                    let ab = fx.elem_leq(a, b).unwrap();
                    let ba = fx.elem_leq(b, a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    // Meet is the glb, join the lub.
                    let m = fx.elem_meet(a, b).unwrap();
                    let j = fx.elem_join(a, b).unwrap();
                    assert!(fx.elem_leq(&m, a).unwrap() && fx.elem_leq(&m, b).unwrap());
                    assert!(fx.elem_leq(a, &j).unwrap() && fx.elem_leq(b, &j).unwrap());
                    for c in &sample {
                        if fx.elem_leq(c, a).unwrap() && fx.elem_leq(c, b).unwrap() {
                            assert!(fx.elem_leq(c, &m).unwrap());
                        }
                        if fx.elem_leq(a, c).unwrap() && fx.elem_leq(b, c).unwrap() {
                            assert!(fx.elem_leq(&j, c).unwrap());
                        }
                        if fx.elem_leq(a, b).unwrap() && fx.elem_leq(b, c).unwrap() {
                            assert!(fx.elem_leq(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        for fx in Fixture::ALL {
            assert_eq!(fx.sample_elements(3, 30, 100), fx.sample_elements(3, 30, 100));
        }
    }

    #[test]
    fn descriptors_round_trip_through_json() {
        let values = [
            Element::Nat(3),
            Element::Top,
            Element::Empty,
            Element::Missing([1, 4].into_iter().collect()),
        ];
        for v in &values {
            let text = serde_json::to_string(v).unwrap();
            let back: Element = serde_json::from_str(&text).unwrap();
            assert_eq!(*v, back);
        }
        let fam = Family::Generated {
            rule: GenRule::RefillAscending {
                keep_missing: [5].into_iter().collect(),
                refill: [0, 3].into_iter().collect(),
            },
        };
        let text = serde_json::to_string(&fam).unwrap();
        assert_eq!(fam, serde_json::from_str::<Family>(&text).unwrap());
    }
}
