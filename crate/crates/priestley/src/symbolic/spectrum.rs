//! Point spectra of the fixture frames and the Hofmann-Mislove
//! correspondence at descriptor level.
//!
//! The spectrum tables are derived from the extent maps rather than
//! decreed:
//!
//! * Chain ω+1. The completely prime filters are exactly ↑Nat(m) for m ≥ 1
//!   (↑Nat(0) is improper; ↑Top fails against the family of naturals), so
//!   the points are P(m). Inclusion gives P(j) ⊆ P(k) iff Nat(k) ≤ Nat(j),
//!   i.e. the spectrum order is P(j) ≤ P(k) iff k ≤ j, a descending copy
//!   of the positive naturals. The full prime spectrum has one more
//!   element, ↑Top = {Top}, included in every P(m): the minimum of the
//!   dual, and not a point — which is exactly why the frame is not
//!   compact.
//!
//! * Cofinite frame. Every proper prime filter is F(n) = "the cofinite
//!   sets containing n" for some n, or Generic = "all nonzero elements":
//!   the complement of a prime filter is a prime ideal whose family of
//!   exception sets is closed under intersection and prime under union,
//!   forcing it to be the sets containing one fixed n — or empty, which
//!   yields Generic. All of these are completely prime (a join of opens
//!   contains n, or is nonzero, only if some member is), so here the
//!   whole dual consists of points. F(n) ⊆ Generic and the F(n) are
//!   pairwise incomparable, making Generic the top of the spectrum and
//!   the F(n) its minimal elements.

use std::collections::BTreeSet;

use super::{Element, FilterDesc, Fixture, PointDesc, SatSetDesc};
use crate::error::{Error, Result};

/// The minimal points of a saturated set under the spectrum order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinPoints {
    Empty,
    Singleton(PointDesc),
    /// Finitely many incomparable points, at least two.
    Several(Vec<PointDesc>),
    /// All F(n) with n outside the excluded set: infinitely many.
    CofinitelyMany { excluded: BTreeSet<u64> },
}

impl MinPoints {
    pub fn is_singleton(&self) -> bool {
        matches!(self, MinPoints::Singleton(_))
    }
}

/// Both routes to frame compactness: compactness of the top element, and
/// the minimal points of the full prime spectrum all being completely
/// prime. The two must agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FrameCompactness {
    pub top_is_compact: bool,
    pub spectrum_min_completely_prime: bool,
}

impl FrameCompactness {
    pub fn agree(self) -> bool {
        self.top_is_compact == self.spectrum_min_completely_prime
    }

    pub fn compact(self) -> bool {
        self.top_is_compact
    }
}

impl Fixture {
    pub fn validate_point(self, p: &PointDesc) -> Result<()> {
        let ok = match (self, p) {
            (Fixture::ChainOmegaPlusOne, PointDesc::ChainPoint(m)) => *m >= 1,
            (Fixture::CofiniteNat, PointDesc::CofinitePoint(_) | PointDesc::Generic) => true,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::FixtureMismatch(format!(
                "point {p} does not live in {self}"
            )))
        }
    }

    /// The filter a point denotes.
    pub fn point_filter(self, p: &PointDesc) -> Result<FilterDesc> {
        self.validate_point(p)?;
        Ok(match p {
            PointDesc::ChainPoint(m) => FilterDesc::Principal(Element::Nat(*m)),
            PointDesc::CofinitePoint(n) => FilterDesc::ContainsAll([*n].into_iter().collect()),
            PointDesc::Generic => FilterDesc::AllNonzero,
        })
    }

    /// A finite slice of the point schema: P(1)…P(limit), or F(0)…
    /// F(limit-1) plus Generic.
    pub fn points_sample(self, limit: u64) -> Vec<PointDesc> {
        match self {
            Fixture::ChainOmegaPlusOne => (1..=limit).map(PointDesc::ChainPoint).collect(),
            Fixture::CofiniteNat => (0..limit)
                .map(PointDesc::CofinitePoint)
                .chain([PointDesc::Generic])
                .collect(),
        }
    }

    pub fn point_member(self, p: &PointDesc, a: &Element) -> Result<bool> {
        self.filter_member(&self.point_filter(p)?, a)
    }

    /// The spectrum (specialization) order: p ≤ q iff the filter of p is
    /// included in the filter of q. Computed from filter inclusion and
    /// cross-checked against the tabulated order on every call.
    pub fn point_subset(self, p: &PointDesc, q: &PointDesc) -> Result<bool> {
        let by_filters = self.filter_subset(&self.point_filter(p)?, &self.point_filter(q)?)?;
        let tabulated = match (p, q) {
            (PointDesc::ChainPoint(j), PointDesc::ChainPoint(k)) => k <= j,
            (PointDesc::CofinitePoint(n), PointDesc::CofinitePoint(m)) => n == m,
            (PointDesc::CofinitePoint(_), PointDesc::Generic) => true,
            (PointDesc::Generic, PointDesc::CofinitePoint(_)) => false,
            (PointDesc::Generic, PointDesc::Generic) => true,
            _ => unreachable!("validation admits no cross-fixture pair"),
        };
        if by_filters != tabulated {
            return Err(Error::IsoFailure(format!(
                "spectrum order table disagrees with filter inclusion at ({p}, {q})"
            )));
        }
        Ok(by_filters)
    }

    /// Is the filter included in the point's filter (equivalently: does the
    /// point lie in the filter's extent)?
    pub fn filter_below_point(self, f: &FilterDesc, p: &PointDesc) -> Result<bool> {
        self.filter_subset(f, &self.point_filter(p)?)
    }

    /// Rewrite a saturated-set descriptor to canonical form and check the
    /// fixture.
    pub fn canonical_sat(self, q: &SatSetDesc) -> Result<SatSetDesc> {
        match (self, q) {
            (_, SatSetDesc::EmptySet) => Ok(SatSetDesc::EmptySet),
            (Fixture::ChainOmegaPlusOne, SatSetDesc::PrefixPoints(0)) => Ok(SatSetDesc::EmptySet),
            (Fixture::ChainOmegaPlusOne, SatSetDesc::PrefixPoints(m)) => {
                Ok(SatSetDesc::PrefixPoints(*m))
            }
            (Fixture::CofiniteNat, SatSetDesc::GenericOnly) => Ok(SatSetDesc::GenericOnly),
            (Fixture::CofiniteNat, SatSetDesc::FinitePlusGeneric(s)) => {
                if s.is_empty() {
                    Ok(SatSetDesc::GenericOnly)
                } else {
                    Ok(SatSetDesc::FinitePlusGeneric(s.clone()))
                }
            }
            (Fixture::CofiniteNat, SatSetDesc::CofinitePlusGeneric(m)) => {
                Ok(SatSetDesc::CofinitePlusGeneric(m.clone()))
            }
            (_, other) => Err(Error::FixtureMismatch(format!(
                "saturated set {other} does not live in {self}"
            ))),
        }
    }

    pub fn sat_contains_point(self, q: &SatSetDesc, p: &PointDesc) -> Result<bool> {
        let q = self.canonical_sat(q)?;
        self.validate_point(p)?;
        Ok(match (&q, p) {
            (SatSetDesc::EmptySet, _) => false,
            (SatSetDesc::PrefixPoints(m), PointDesc::ChainPoint(j)) => j <= m,
            (SatSetDesc::GenericOnly, _) => *p == PointDesc::Generic,
            (SatSetDesc::FinitePlusGeneric(_), PointDesc::Generic) => true,
            (SatSetDesc::FinitePlusGeneric(s), PointDesc::CofinitePoint(n)) => s.contains(n),
            (SatSetDesc::CofinitePlusGeneric(_), PointDesc::Generic) => true,
            (SatSetDesc::CofinitePlusGeneric(m), PointDesc::CofinitePoint(n)) => !m.contains(n),
            _ => unreachable!("canonical descriptors admit no other pairing"),
        })
    }

    /// Inclusion of saturated sets, decided classwise. Derivations: prefixes
    /// nest with their length; every class containing Generic compares by
    /// its F(n) content, and a finite F-set lies in a cofinite one iff it
    /// avoids the excluded set, while a cofinite F-set never fits in a
    /// finite one.
    pub fn sat_subset(self, q1: &SatSetDesc, q2: &SatSetDesc) -> Result<bool> {
        let q1 = self.canonical_sat(q1)?;
        let q2 = self.canonical_sat(q2)?;
        Ok(match (&q1, &q2) {
            (SatSetDesc::EmptySet, _) => true,
            (_, SatSetDesc::EmptySet) => false,
            (SatSetDesc::PrefixPoints(a), SatSetDesc::PrefixPoints(b)) => a <= b,
            (SatSetDesc::GenericOnly, _) => true,
            (SatSetDesc::FinitePlusGeneric(_), SatSetDesc::GenericOnly) => false,
            (SatSetDesc::FinitePlusGeneric(s), SatSetDesc::FinitePlusGeneric(t)) => {
                s.is_subset(t)
            }
            (SatSetDesc::FinitePlusGeneric(s), SatSetDesc::CofinitePlusGeneric(m)) => {
                s.intersection(m).next().is_none()
            }
            (SatSetDesc::CofinitePlusGeneric(_), SatSetDesc::GenericOnly) => false,
            (SatSetDesc::CofinitePlusGeneric(_), SatSetDesc::FinitePlusGeneric(_)) => false,
            (SatSetDesc::CofinitePlusGeneric(m), SatSetDesc::CofinitePlusGeneric(m2)) => {
                m2.is_subset(m)
            }
            _ => unreachable!("canonical descriptors admit no other pairing"),
        })
    }

    /// The minimal points of a saturated set under the spectrum order.
    /// Chain: the spectrum descends as m grows, so a prefix bottoms out at
    /// its last point. Cofinite: the F(n) are the minimal layer, so any
    /// class containing some F(n) has exactly those as minima, and
    /// GenericOnly bottoms out at Generic itself.
    pub fn sat_min(self, q: &SatSetDesc) -> Result<MinPoints> {
        let q = self.canonical_sat(q)?;
        Ok(match &q {
            SatSetDesc::EmptySet => MinPoints::Empty,
            SatSetDesc::PrefixPoints(m) => MinPoints::Singleton(PointDesc::ChainPoint(*m)),
            SatSetDesc::GenericOnly => MinPoints::Singleton(PointDesc::Generic),
            SatSetDesc::FinitePlusGeneric(s) => {
                if s.len() == 1 {
                    MinPoints::Singleton(PointDesc::CofinitePoint(*s.iter().next().unwrap()))
                } else {
                    MinPoints::Several(s.iter().map(|&n| PointDesc::CofinitePoint(n)).collect())
                }
            }
            SatSetDesc::CofinitePlusGeneric(m) => MinPoints::CofinitelyMany {
                excluded: m.clone(),
            },
        })
    }

    /// Does every point of `q` contain `a`? (Equivalently: does the extent
    /// of `a` cover `q`?) For prefixes it suffices to test the last point,
    /// whose filter is smallest; for the cofinite classes the requirement
    /// unfolds to exclusion-set arithmetic.
    pub fn extent_covers(self, q: &SatSetDesc, a: &Element) -> Result<bool> {
        let q = self.canonical_sat(q)?;
        self.validate_element(a)?;
        Ok(match &q {
            SatSetDesc::EmptySet => true,
            SatSetDesc::PrefixPoints(m) => {
                self.point_member(&PointDesc::ChainPoint(*m), a)?
            }
            SatSetDesc::GenericOnly => self.point_member(&PointDesc::Generic, a)?,
            SatSetDesc::FinitePlusGeneric(s) => {
                let mut ok = self.point_member(&PointDesc::Generic, a)?;
                for &n in s {
                    ok = ok && self.point_member(&PointDesc::CofinitePoint(n), a)?;
                }
                ok
            }
            // a ∈ F(n) for every n ∉ excluded iff a = Missing(B) with
            // B ⊆ excluded (and such an a is nonzero, so Generic holds).
            SatSetDesc::CofinitePlusGeneric(excluded) => match a {
                Element::Missing(b) => b.is_subset(excluded),
                _ => false,
            },
        })
    }

    /// F ↦ K_F: the points whose filters contain F, as a saturated-set
    /// descriptor. Only Scott-open filters have compact extents.
    ///
    /// Derivations: P(j) ⊇ ↑Nat(m) iff Nat(m) ∈ P(j) iff j ≤ m, giving the
    /// prefix; F(n) ⊇ ContainsAll(A) iff n ∈ A (else the singleton {n}
    /// separates) and Generic contains every cofinite set; F(n) ⊇
    /// ↑Missing(M) iff Missing(M) ∈ F(n) iff n ∉ M, giving the cofinite
    /// class; no proper point contains the improper filter.
    pub fn hm_map(self, f: &FilterDesc) -> Result<SatSetDesc> {
        let f = self.canonical_filter(f)?;
        if !self.classify_scott_open(&f)?.scott_open {
            return Err(Error::NotScottOpen);
        }
        Ok(match (self, &f) {
            (_, FilterDesc::Improper) => SatSetDesc::EmptySet,
            (Fixture::ChainOmegaPlusOne, FilterDesc::Principal(Element::Nat(m))) => {
                SatSetDesc::PrefixPoints(*m)
            }
            (Fixture::CofiniteNat, FilterDesc::Principal(Element::Missing(m))) => {
                SatSetDesc::CofinitePlusGeneric(m.clone())
            }
            (Fixture::CofiniteNat, FilterDesc::ContainsAll(a)) => {
                SatSetDesc::FinitePlusGeneric(a.clone())
            }
            (Fixture::CofiniteNat, FilterDesc::AllNonzero) => SatSetDesc::GenericOnly,
            _ => unreachable!("non-Scott-open classes were rejected above"),
        })
    }

    /// Q ↦ F_Q: the filter of elements whose extent covers Q. Inverse to
    /// `hm_map` classwise; `extent_covers` is the membership rule it must
    /// agree with, and `verify_hm_correspondence` checks that it does.
    pub fn hm_inv(self, q: &SatSetDesc) -> Result<FilterDesc> {
        let q = self.canonical_sat(q)?;
        Ok(match (self, &q) {
            (_, SatSetDesc::EmptySet) => FilterDesc::Improper,
            (Fixture::ChainOmegaPlusOne, SatSetDesc::PrefixPoints(m)) => {
                FilterDesc::Principal(Element::Nat(*m))
            }
            (Fixture::CofiniteNat, SatSetDesc::GenericOnly) => FilterDesc::AllNonzero,
            (Fixture::CofiniteNat, SatSetDesc::FinitePlusGeneric(s)) => {
                FilterDesc::ContainsAll(s.clone())
            }
            (Fixture::CofiniteNat, SatSetDesc::CofinitePlusGeneric(m)) => {
                FilterDesc::Principal(Element::Missing(m.clone()))
            }
            _ => unreachable!("canonical descriptors admit no other pairing"),
        })
    }

    /// Round trips, order reversal, and membership agreement for the
    /// correspondence, checked on the filter inventory plus the point and
    /// element samples.
    pub fn verify_hm_correspondence(self, seed: u64, limit: u64) -> Result<()> {
        let inventory: Vec<FilterDesc> = self
            .filter_inventory()
            .iter()
            .map(|f| self.canonical_filter(f))
            .collect::<Result<_>>()?;
        let scott_open: Vec<FilterDesc> = inventory
            .iter()
            .filter(|f| {
                self.classify_scott_open(f)
                    .map(|c| c.scott_open)
                    .unwrap_or(false)
            })
            .cloned()
            .collect();
        let points = self.points_sample(limit.min(60));
        let sample = self.sample_elements(seed, 24, limit);
        for f in &scott_open {
            let q = self.hm_map(f)?;
            if self.hm_inv(&q)? != *f {
                return Err(Error::IsoFailure(format!(
                    "round trip failed: {f} ↦ {q} ↦ {}",
                    self.hm_inv(&q)?
                )));
            }
            // The descriptor really is "the points above F".
            for p in &points {
                if self.sat_contains_point(&q, p)? != self.filter_below_point(f, p)? {
                    return Err(Error::IsoFailure(format!(
                        "extent of {f} disagrees with {q} at {p}"
                    )));
                }
            }
            // And the inverse really is "elements whose extent covers Q".
            for a in &sample {
                if self.filter_member(f, a)? != self.extent_covers(&q, a)? {
                    return Err(Error::IsoFailure(format!(
                        "membership in {f} disagrees with extent coverage of {q} at {a}"
                    )));
                }
            }
        }
        // Other direction of the round trip, over every saturated class.
        let sat_inventory: Vec<SatSetDesc> = scott_open
            .iter()
            .map(|f| self.hm_map(f))
            .collect::<Result<_>>()?;
        for q in &sat_inventory {
            let f = self.hm_inv(q)?;
            if self.hm_map(&f)? != *q {
                return Err(Error::IsoFailure(format!(
                    "round trip failed: {q} ↦ {f} ↦ {}",
                    self.hm_map(&f)?
                )));
            }
        }
        // Filters reverse inclusion into saturated sets.
        for f in &scott_open {
            for g in &scott_open {
                let fwd = self.filter_subset(f, g)?;
                let rev = self.sat_subset(&self.hm_map(g)?, &self.hm_map(f)?)?;
                if fwd != rev {
                    return Err(Error::IsoFailure(format!(
                        "order reversal failed at ({f}, {g})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Singleton minima match complete primeness on every Scott-open
    /// class, and every Scott-open filter is the meet of the points above
    /// it (refuted pointwise on samples when membership fails).
    pub fn verify_singleton_min_and_meet(self, seed: u64, limit: u64) -> Result<()> {
        let sample = self.sample_elements(seed, 24, limit.saturating_sub(1).min(200));
        let points = self.points_sample(limit);
        for f in self.filter_inventory() {
            let f = self.canonical_filter(&f)?;
            if !self.classify_scott_open(&f)?.scott_open {
                continue;
            }
            let q = self.hm_map(&f)?;
            let singleton = self.sat_min(&q)?.is_singleton();
            let completely_prime = self.completely_prime_refutation(&f)?.is_none();
            if singleton != completely_prime {
                return Err(Error::IsoFailure(format!(
                    "singleton minimum is {singleton} but complete primeness is {completely_prime} for {f}"
                )));
            }
            // Meet of the points above F: membership must coincide with F
            // on the element sample, with a concrete separating point when
            // it fails.
            for a in &sample {
                if self.filter_member(&f, a)? {
                    for p in &points {
                        if self.filter_below_point(&f, p)? && !self.point_member(p, a)? {
                            return Err(Error::IsoFailure(format!(
                                "{a} ∈ {f} but the point {p} above it disagrees"
                            )));
                        }
                    }
                } else {
                    let separated = points.iter().any(|p| {
                        self.filter_below_point(&f, p).unwrap_or(false)
                            && !self.point_member(p, a).unwrap_or(true)
                    });
                    if !separated {
                        return Err(Error::IsoFailure(format!(
                            "{a} ∉ {f} but no sampled point above the filter excludes it"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Frame compactness by both routes.
    ///
    /// Route 1: is the top a compact element? Route 2: are the minimal
    /// points of the full prime spectrum all completely prime (i.e. do
    /// they survive as points)? For the chain the spectrum minimum is
    /// ↑Top, which complete primeness rejects; for the cofinite frame the
    /// minimal primes are the F(n), all of them points.
    pub fn frame_compact(self, sample_limit: u64) -> Result<FrameCompactness> {
        let top_is_compact = self.is_compact_element(&self.top())?.compact;
        self.verify_compact_element(&self.top())?;
        let spectrum_min_completely_prime = match self {
            Fixture::ChainOmegaPlusOne => {
                let minimum = FilterDesc::Principal(Element::Top);
                self.verify_completely_prime(&minimum)?;
                self.completely_prime_refutation(&minimum)?.is_none()
            }
            Fixture::CofiniteNat => {
                let mut all = true;
                for n in 0..sample_limit {
                    let f = FilterDesc::ContainsAll([n].into_iter().collect());
                    self.verify_completely_prime(&f)?;
                    all &= self.completely_prime_refutation(&f)?.is_none();
                }
                all
            }
        };
        let report = FrameCompactness {
            top_is_compact,
            spectrum_min_completely_prime,
        };
        if !report.agree() {
            return Err(Error::IsoFailure(format!(
                "frame compactness routes disagree on {self}: top compact = {}, spectrum minimum in points = {}",
                report.top_is_compact, report.spectrum_min_completely_prime
            )));
        }
        Ok(report)
    }

    /// Check that every saturated-set descriptor class denotes an upset:
    /// sampled points p ∈ Q and p ≤ q force q ∈ Q.
    pub fn verify_sat_upsets(self, qs: &[SatSetDesc], limit: u64) -> Result<()> {
        let points = self.points_sample(limit.min(60));
        for q in qs {
            for p in &points {
                if !self.sat_contains_point(q, p)? {
                    continue;
                }
                for r in &points {
                    if self.point_subset(p, r)? && !self.sat_contains_point(q, r)? {
                        return Err(Error::IsoFailure(format!(
                            "{q} contains {p} but not {r} above it"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}
