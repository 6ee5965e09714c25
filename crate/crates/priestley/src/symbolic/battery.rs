//! The fixture invariant battery: every classification table and closed
//! form in the symbolic layer, re-verified against literal computation and
//! cross-route comparison, packaged as a pass/fail report.

use super::{
    Element, FilterDesc, Fixture, FixtureCheck, FixtureReport, GenRule, PrimalityVerdict,
    SatSetDesc, ScottOutcome,
};
use crate::error::{Error, Result};
use crate::Bounds;

fn record(checks: &mut Vec<FixtureCheck>, name: &str, outcome: Result<String>) {
    match outcome {
        Ok(detail) => checks.push(FixtureCheck {
            name: name.to_string(),
            passed: true,
            detail,
        }),
        Err(e) => checks.push(FixtureCheck {
            name: name.to_string(),
            passed: false,
            detail: e.to_string(),
        }),
    }
}

impl Fixture {
    /// Run the whole battery. Failures are recorded, not raised, so a
    /// report always comes back complete.
    pub fn fixture_report(self, bounds: &Bounds, seed: u64) -> FixtureReport {
        let mut checks = Vec::new();
        record(
            &mut checks,
            "element-order-laws",
            self.battery_order_laws(seed),
        );
        record(
            &mut checks,
            "family-prefix-joins",
            self.battery_families(seed),
        );
        record(
            &mut checks,
            "frame-distributivity",
            self.battery_distributivity(seed),
        );
        record(
            &mut checks,
            "filter-membership-laws",
            self.battery_filter_membership(seed),
        );
        record(
            &mut checks,
            "filter-inclusion-table",
            self.battery_filter_inclusion(seed),
        );
        record(
            &mut checks,
            "family-filter-interaction",
            self.battery_family_filter_interaction(seed),
        );
        record(
            &mut checks,
            "scott-open-classification",
            self.battery_scott(),
        );
        record(
            &mut checks,
            "compact-elements",
            self.battery_compact_elements(seed),
        );
        record(
            &mut checks,
            "frame-compactness",
            self.battery_frame_compactness(),
        );
        record(&mut checks, "point-spectrum", self.battery_points(seed));
        record(
            &mut checks,
            "non-point-primes",
            self.battery_non_point_primes(seed),
        );
        record(
            &mut checks,
            "saturated-set-structure",
            self.battery_sat_structure(),
        );
        record(
            &mut checks,
            "hofmann-mislove-correspondence",
            self.battery_hofmann_mislove(seed),
        );
        record(
            &mut checks,
            "singleton-min-and-meet",
            self.battery_min_and_meet(seed, bounds.samples.saturating_add(1)),
        );
        FixtureReport {
            fixture: self.name().to_string(),
            checks,
        }
    }

    fn battery_order_laws(self, seed: u64) -> Result<String> {
        let sample = self.sample_elements(seed, 20, 40);
        for a in &sample {
            if !self.elem_leq(a, a)?
                || !self.elem_leq(&self.bottom(), a)?
                || !self.elem_leq(a, &self.top())?
            {
                return Err(Error::IsoFailure(format!("order bounds fail at {a}")));
            }
        }
        for a in &sample {
            for b in &sample {
                if self.elem_leq(a, b)? && self.elem_leq(b, a)? && a != b {
                    return Err(Error::IsoFailure(format!("antisymmetry fails at {a}, {b}")));
                }
                let m = self.elem_meet(a, b)?;
                let j = self.elem_join(a, b)?;
                if !self.elem_leq(&m, a)? || !self.elem_leq(&m, b)? {
                    return Err(Error::IsoFailure(format!("meet above factor at {a}, {b}")));
                }
                if !self.elem_leq(a, &j)? || !self.elem_leq(b, &j)? {
                    return Err(Error::IsoFailure(format!("join below factor at {a}, {b}")));
                }
                for c in &sample {
                    if self.elem_leq(c, a)? && self.elem_leq(c, b)? && !self.elem_leq(c, &m)? {
                        return Err(Error::IsoFailure(format!("meet not greatest at {a}, {b}")));
                    }
                    if self.elem_leq(a, c)? && self.elem_leq(b, c)? && !self.elem_leq(&j, c)? {
                        return Err(Error::IsoFailure(format!("join not least at {a}, {b}")));
                    }
                    if self.elem_leq(a, b)? && self.elem_leq(b, c)? && !self.elem_leq(a, c)? {
                        return Err(Error::IsoFailure(format!(
                            "transitivity fails at {a}, {b}, {c}"
                        )));
                    }
                    let lhs = self.elem_meet(a, &self.elem_join(b, c)?)?;
                    let rhs = self.elem_join(&self.elem_meet(a, b)?, &self.elem_meet(a, c)?)?;
                    if lhs != rhs {
                        return Err(Error::IsoFailure(format!(
                            "distributivity fails at {a}, {b}, {c}"
                        )));
                    }
                }
            }
        }
        Ok(format!(
            "order, lattice, and distributivity laws hold on {} sampled elements",
            sample.len()
        ))
    }

    fn battery_families(self, seed: u64) -> Result<String> {
        let families = self.builtin_families();
        let sample = self.sample_elements(seed ^ 0x11, 12, 24);
        for fam in &families {
            self.validate_family(fam)?;
            let join = self.family_join(fam)?;
            let attained = self.join_attained_at(fam)?;
            let ascending = self.family_is_ascending(fam)?;
            let mut previous = self.bottom();
            for k in 0..=36u64 {
                let pj = self.prefix_join(fam, k)?;
                if !self.elem_leq(&previous, &pj)? || !self.elem_leq(&pj, &join)? {
                    return Err(Error::IsoFailure(format!(
                        "prefix joins of {fam} break monotonicity at {k}"
                    )));
                }
                match attained {
                    Some(at) if (pj == join) != (k >= at) => {
                        return Err(Error::IsoFailure(format!(
                            "{fam} attainment index is wrong at {k}"
                        )));
                    }
                    None if pj == join => {
                        return Err(Error::IsoFailure(format!(
                            "{fam} attains its join at {k} despite the closed form"
                        )));
                    }
                    _ => {}
                }
                if ascending {
                    if let (Some(a), Some(b)) =
                        (self.family_member(fam, k)?, self.family_member(fam, k + 1)?)
                    {
                        if !self.elem_leq(&a, &b)? {
                            return Err(Error::IsoFailure(format!(
                                "{fam} flagged ascending but dips at {k}"
                            )));
                        }
                    }
                }
                previous = pj;
            }
            for a in &sample {
                let closed = self.prefix_dominating(fam, a)?;
                let mut literal = None;
                for k in 0..128u64 {
                    if self.elem_leq(a, &self.prefix_join(fam, k)?)? {
                        literal = Some(k);
                        break;
                    }
                }
                let consistent = match closed {
                    Some(k) if k < 128 => literal == Some(k),
                    _ => literal.is_none(),
                };
                if !consistent {
                    return Err(Error::IsoFailure(format!(
                        "prefix domination of {a} by {fam}: closed {closed:?} vs literal {literal:?}"
                    )));
                }
            }
        }
        Ok(format!(
            "{} families: prefix joins ascend to the closed-form join, attainment and domination indices match literal scans",
            families.len()
        ))
    }

    fn battery_distributivity(self, seed: u64) -> Result<String> {
        let families = self.builtin_families();
        let sample = self.sample_elements(seed ^ 0x22, 12, 24);
        let mut pairs = 0usize;
        for fam in &families {
            let join = self.family_join(fam)?;
            for a in &sample {
                let closed = self.meet_family_join(a, fam)?;
                if closed != self.elem_meet(a, &join)? {
                    return Err(Error::IsoFailure(format!(
                        "a ∧ ⋁{fam} differs from ⋁(a ∧ members) at a = {a}"
                    )));
                }
                let mut acc = self.bottom();
                for k in 0..24u64 {
                    match self.family_member(fam, k)? {
                        Some(m) => acc = self.elem_join(&acc, &self.elem_meet(a, &m)?)?,
                        None => break,
                    }
                    if !self.elem_leq(&acc, &closed)? {
                        return Err(Error::IsoFailure(format!(
                            "meet-family prefix of {fam} escapes its join at a = {a}"
                        )));
                    }
                }
                if let Some(at) = self.join_attained_at(fam)? {
                    if at < 24 && acc != closed {
                        return Err(Error::IsoFailure(format!(
                            "meet family of {fam} misses its join at a = {a}"
                        )));
                    }
                }
                pairs += 1;
            }
        }
        Ok(format!(
            "meets distribute over every built-in family join ({pairs} element/family pairs)"
        ))
    }

    fn battery_filter_membership(self, seed: u64) -> Result<String> {
        let sample = self.sample_elements(seed ^ 0x33, 14, 24);
        let inventory = self.filter_inventory();
        for f in &inventory {
            if !self.filter_member(f, &self.top())? {
                return Err(Error::IsoFailure(format!("{f} misses the top element")));
            }
            let proper = self.filter_is_proper(f)?;
            if proper == self.filter_member(f, &self.bottom())? {
                return Err(Error::IsoFailure(format!(
                    "{f}: properness disagrees with bottom membership"
                )));
            }
            for a in &sample {
                for b in &sample {
                    if self.filter_member(f, a)? && self.elem_leq(a, b)? && !self.filter_member(f, b)? {
                        return Err(Error::IsoFailure(format!(
                            "{f} is not upward closed at {a} ≤ {b}"
                        )));
                    }
                    if self.filter_member(f, a)?
                        && self.filter_member(f, b)?
                        && !self.filter_member(f, &self.elem_meet(a, b)?)?
                    {
                        return Err(Error::IsoFailure(format!(
                            "{f} is not meet closed at {a}, {b}"
                        )));
                    }
                }
            }
        }
        Ok(format!(
            "{} filters are upward closed and meet closed on the sample",
            inventory.len()
        ))
    }

    /// Candidates that separate every non-inclusion between inventory
    /// classes: the sampled elements, the filters' own parameter elements,
    /// their pairwise set differences, and one fresh singleton.
    fn inclusion_candidate_pool(self, seed: u64) -> Vec<Element> {
        let mut pool = self.sample_elements(seed ^ 0x44, 12, 20);
        match self {
            Fixture::ChainOmegaPlusOne => {
                for f in self.filter_inventory() {
                    if let FilterDesc::Principal(x) = f {
                        if let Element::Nat(m) = x {
                            pool.push(Element::Nat(m.saturating_sub(1)));
                            pool.push(Element::Nat(m + 1));
                        }
                        pool.push(x);
                    }
                }
            }
            Fixture::CofiniteNat => {
                let mut param_sets = Vec::new();
                for f in self.filter_inventory() {
                    match f {
                        FilterDesc::Principal(Element::Missing(m)) => param_sets.push(m),
                        FilterDesc::ContainsAll(a) => param_sets.push(a),
                        _ => {}
                    }
                }
                let fresh = param_sets
                    .iter()
                    .flat_map(|s| s.iter().copied())
                    .max()
                    .map_or(9, |m| m + 1);
                pool.push(Element::Missing([fresh].into_iter().collect()));
                for s in &param_sets {
                    pool.push(Element::Missing(s.clone()));
                    for t in &param_sets {
                        pool.push(Element::Missing(s.difference(t).copied().collect()));
                        pool.push(Element::Missing(s.union(t).copied().collect()));
                        pool.push(Element::Missing(s.intersection(t).copied().collect()));
                    }
                }
            }
        }
        pool.sort();
        pool.dedup();
        pool
    }

    fn battery_filter_inclusion(self, seed: u64) -> Result<String> {
        let inventory = self.filter_inventory();
        let pool = self.inclusion_candidate_pool(seed);
        let mut pairs = 0usize;
        for f in &inventory {
            for g in &inventory {
                let declared = self.filter_subset(f, g)?;
                if declared {
                    for x in &pool {
                        if self.filter_member(f, x)? && !self.filter_member(g, x)? {
                            return Err(Error::IsoFailure(format!(
                                "{f} ⊆ {g} declared, but {x} separates them"
                            )));
                        }
                    }
                } else {
                    let separated = pool
                        .iter()
                        .map(|x| {
                            Ok(self.filter_member(f, x)? && !self.filter_member(g, x)?)
                        })
                        .collect::<Result<Vec<bool>>>()?
                        .into_iter()
                        .any(|b| b);
                    if !separated {
                        return Err(Error::IsoFailure(format!(
                            "{f} ⊄ {g} declared, but no candidate separates them"
                        )));
                    }
                }
                pairs += 1;
            }
        }
        Ok(format!(
            "{pairs} inclusion verdicts confirmed against {} candidate elements",
            pool.len()
        ))
    }

    fn battery_family_filter_interaction(self, seed: u64) -> Result<String> {
        let _ = seed;
        let mut cases = 0usize;
        for fam in self.builtin_families() {
            for f in self.filter_inventory() {
                let prefix = self.prefix_join_in_filter(&fam, &f)?;
                match prefix {
                    Some(k) if k < 96 => {
                        if !self.filter_member(&f, &self.prefix_join(&fam, k)?)? {
                            return Err(Error::IsoFailure(format!(
                                "prefix join {k} of {fam} claimed in {f} but is not"
                            )));
                        }
                        if k > 0 && self.filter_member(&f, &self.prefix_join(&fam, k - 1)?)? {
                            return Err(Error::IsoFailure(format!(
                                "prefix join index for {fam} in {f} is not minimal"
                            )));
                        }
                    }
                    Some(_) => {}
                    None => {
                        for k in 0..96u64 {
                            if self.filter_member(&f, &self.prefix_join(&fam, k)?)? {
                                return Err(Error::IsoFailure(format!(
                                    "{fam} reaches {f} at prefix {k} despite the closed form"
                                )));
                            }
                        }
                    }
                }
                let member = self.member_in_filter(&fam, &f)?;
                match member {
                    Some(k) if k < 96 => {
                        let m = self.family_member(&fam, k)?.ok_or_else(|| {
                            Error::IsoFailure(format!("member index {k} out of range for {fam}"))
                        })?;
                        if !self.filter_member(&f, &m)? {
                            return Err(Error::IsoFailure(format!(
                                "member {k} of {fam} claimed in {f} but is not"
                            )));
                        }
                    }
                    Some(_) => {}
                    None => {
                        for k in 0..96u64 {
                            if let Some(m) = self.family_member(&fam, k)? {
                                if self.filter_member(&f, &m)? {
                                    return Err(Error::IsoFailure(format!(
                                        "member {k} of {fam} lands in {f} despite the closed form"
                                    )));
                                }
                            }
                        }
                    }
                }
                cases += 1;
            }
        }
        Ok(format!(
            "{cases} family/filter pairs: membership closed forms match literal scans"
        ))
    }

    fn battery_scott(self) -> Result<String> {
        let mut not_open = Vec::new();
        for f in self.filter_inventory() {
            self.verify_scott_classification(&f)?;
            if !self.classify_scott_open(&f)?.scott_open {
                not_open.push(self.canonical_filter(&f)?);
            }
        }
        match self {
            Fixture::ChainOmegaPlusOne => {
                if not_open != vec![FilterDesc::Principal(Element::Top)] {
                    return Err(Error::IsoFailure(format!(
                        "expected exactly the top's principal filter to fail, got {not_open:?}"
                    )));
                }
                let outcome = self.refute_scott_open(
                    &FilterDesc::Principal(Element::Top),
                    &super::Family::Generated {
                        rule: GenRule::Naturals,
                    },
                )?;
                match outcome {
                    ScottOutcome::Counterexample { join: Element::Top } => {}
                    other => {
                        return Err(Error::IsoFailure(format!(
                            "the natural family should refute the top filter, got {other:?}"
                        )));
                    }
                }
                Ok("every inventory filter is Scott-open except the top's principal filter, refuted by the ascending naturals".to_string())
            }
            Fixture::CofiniteNat => {
                if !not_open.is_empty() {
                    return Err(Error::IsoFailure(format!(
                        "expected every filter Scott-open, got failures {not_open:?}"
                    )));
                }
                Ok("every inventory filter is Scott-open".to_string())
            }
        }
    }

    fn battery_compact_elements(self, seed: u64) -> Result<String> {
        let sample = self.sample_elements(seed ^ 0x55, 16, 30);
        for a in &sample {
            self.verify_compact_element(a)?;
            let compact = self.is_compact_element(a)?.compact;
            let expected = !matches!((self, a), (Fixture::ChainOmegaPlusOne, Element::Top));
            if compact != expected {
                return Err(Error::IsoFailure(format!(
                    "compactness of {a}: got {compact}, expected {expected}"
                )));
            }
        }
        let tail = match self {
            Fixture::ChainOmegaPlusOne => "only the top fails",
            Fixture::CofiniteNat => "every element is compact",
        };
        Ok(format!("{} elements classified; {tail}", sample.len()))
    }

    fn battery_frame_compactness(self) -> Result<String> {
        let report = self.frame_compact(40)?;
        let expected = match self {
            Fixture::ChainOmegaPlusOne => false,
            Fixture::CofiniteNat => true,
        };
        if report.compact() != expected || !report.agree() {
            return Err(Error::IsoFailure(format!(
                "frame compactness: top compact = {}, spectrum minimum completely prime = {}, expected {expected}",
                report.top_is_compact, report.spectrum_min_completely_prime
            )));
        }
        Ok(format!(
            "both routes agree: the frame is {}",
            if expected { "compact" } else { "not compact" }
        ))
    }

    fn battery_points(self, seed: u64) -> Result<String> {
        let points = self.points_sample(24);
        for p in &points {
            self.validate_point(p)?;
            let f = self.point_filter(p)?;
            if self.canonical_filter(&f)? != f {
                return Err(Error::IsoFailure(format!(
                    "point filter of {p} is not canonical"
                )));
            }
            if !self.filter_is_proper(&f)? {
                return Err(Error::IsoFailure(format!("point filter of {p} is improper")));
            }
            self.verify_completely_prime(&f)?;
            if self.completely_prime_refutation(&f)?.is_some() {
                return Err(Error::IsoFailure(format!(
                    "point {p} has a complete-primeness refutation"
                )));
            }
            self.verify_primality(&f, seed ^ 0x66, 24)?;
            if self.primality(&f)? != PrimalityVerdict::Prime {
                return Err(Error::IsoFailure(format!("point {p} is not prime")));
            }
        }
        for p in &points {
            if !self.point_subset(p, p)? {
                return Err(Error::IsoFailure(format!("spectrum order not reflexive at {p}")));
            }
            for q in &points {
                if self.point_subset(p, q)? && self.point_subset(q, p)? && p != q {
                    return Err(Error::IsoFailure(format!(
                        "spectrum order not antisymmetric at {p}, {q}"
                    )));
                }
                for r in &points {
                    if self.point_subset(p, q)?
                        && self.point_subset(q, r)?
                        && !self.point_subset(p, r)?
                    {
                        return Err(Error::IsoFailure(format!(
                            "spectrum order not transitive at {p}, {q}, {r}"
                        )));
                    }
                }
            }
        }
        Ok(format!(
            "{} points verified completely prime; the spectrum order is a poset and matches filter inclusion",
            points.len()
        ))
    }

    fn battery_non_point_primes(self, seed: u64) -> Result<String> {
        for f in self.filter_inventory() {
            self.verify_primality(&f, seed ^ 0x77, 24)?;
            let prime = self.primality(&f)? == PrimalityVerdict::Prime;
            let completely_prime =
                self.filter_is_proper(&f)? && self.completely_prime_refutation(&f)?.is_none();
            if completely_prime && !prime {
                return Err(Error::IsoFailure(format!(
                    "{f} is completely prime but not prime"
                )));
            }
        }
        match self {
            Fixture::ChainOmegaPlusOne => {
                let f = FilterDesc::Principal(Element::Top);
                if self.primality(&f)? != PrimalityVerdict::Prime {
                    return Err(Error::IsoFailure(
                        "the top's principal filter should be prime".to_string(),
                    ));
                }
                self.verify_completely_prime(&f)?;
                if self.completely_prime_refutation(&f)?.is_none() {
                    return Err(Error::IsoFailure(
                        "the top's principal filter should fail complete primeness".to_string(),
                    ));
                }
                Ok("the dual carries a prime filter (the top's principal filter) that is not completely prime, so the spectrum minimum is not a point".to_string())
            }
            Fixture::CofiniteNat => {
                let mut refuted = 0usize;
                for f in self.filter_inventory() {
                    if !self.filter_is_proper(&f)? {
                        continue;
                    }
                    if let Some(fam) = self.completely_prime_refutation(&f)? {
                        self.verify_completely_prime(&f)?;
                        if matches!(self.primality(&f)?, PrimalityVerdict::Prime) {
                            return Err(Error::IsoFailure(format!(
                                "{f} is prime yet refuted by {fam}; every prime here should be completely prime"
                            )));
                        }
                        refuted += 1;
                    }
                }
                Ok(format!(
                    "{refuted} non-points refuted; every prime filter is completely prime, so primes and points coincide"
                ))
            }
        }
    }

    fn battery_sat_structure(self) -> Result<String> {
        let mut sets = vec![SatSetDesc::EmptySet];
        for f in self.filter_inventory() {
            if self.classify_scott_open(&f)?.scott_open {
                sets.push(self.hm_map(&f)?);
            }
        }
        sets.sort();
        sets.dedup();
        self.verify_sat_upsets(&sets, 24)?;
        let points = self.points_sample(24);
        for q in &sets {
            for q2 in &sets {
                if self.sat_subset(q, q2)? {
                    for p in &points {
                        if self.sat_contains_point(q, p)? && !self.sat_contains_point(q2, p)? {
                            return Err(Error::IsoFailure(format!(
                                "{q} ⊆ {q2} declared but {p} separates them"
                            )));
                        }
                    }
                }
            }
            // The declared minima really are members, pairwise incomparable,
            // and every sampled member sits above one of them.
            let minima: Vec<super::PointDesc> = match self.sat_min(q)? {
                super::MinPoints::Empty => vec![],
                super::MinPoints::Singleton(p) => vec![p],
                super::MinPoints::Several(ps) => ps,
                super::MinPoints::CofinitelyMany { excluded } => (0..30)
                    .filter(|n| !excluded.contains(n))
                    .map(super::PointDesc::CofinitePoint)
                    .collect(),
            };
            for m in &minima {
                if !self.sat_contains_point(q, m)? {
                    return Err(Error::IsoFailure(format!("declared minimum {m} is not in {q}")));
                }
                for m2 in &minima {
                    if m != m2 && self.point_subset(m, m2)? {
                        return Err(Error::IsoFailure(format!(
                            "declared minima {m} and {m2} of {q} are comparable"
                        )));
                    }
                }
            }
            for p in &points {
                if !self.sat_contains_point(q, p)? {
                    continue;
                }
                let covered = minima
                    .iter()
                    .map(|m| self.point_subset(m, p))
                    .collect::<Result<Vec<bool>>>()?
                    .into_iter()
                    .any(|b| b);
                if !covered {
                    return Err(Error::IsoFailure(format!(
                        "{p} ∈ {q} has no declared minimum below it"
                    )));
                }
            }
        }
        Ok(format!(
            "{} saturated classes are upsets with correct minima and inclusion verdicts",
            sets.len()
        ))
    }

    fn battery_hofmann_mislove(self, seed: u64) -> Result<String> {
        self.verify_hm_correspondence(seed ^ 0x88, 40)?;
        if self == Fixture::ChainOmegaPlusOne {
            match self.hm_map(&FilterDesc::Principal(Element::Top)) {
                Err(Error::NotScottOpen) => {}
                other => {
                    return Err(Error::IsoFailure(format!(
                        "the top's principal filter must be rejected as not Scott-open, got {other:?}"
                    )));
                }
            }
        }
        Ok(
            "Scott-open filters and compact saturated sets correspond bijectively, reversing inclusion, with membership agreement on samples"
                .to_string(),
        )
    }

    fn battery_min_and_meet(self, seed: u64, limit: u64) -> Result<String> {
        self.verify_singleton_min_and_meet(seed ^ 0x99, limit)?;
        Ok(format!(
            "singleton minima coincide with complete primeness, and each Scott-open filter is the meet of the points above it (points up to {limit})"
        ))
    }
}
