//! Check suites: `dual` exercises the duality-side results (reconstruction,
//! filter correspondence, order-topological separation, spatiality, the
//! prime spectrum), `hm` the Scott-open/compact-saturated side, and `all`
//! runs both. Semantic failures on well-formed inputs become failed rows
//! with witnesses; only exceeding a size bound aborts the run, because a
//! truncated scan would not be evidence either way.

use std::collections::BTreeMap;
use std::time::Instant;

use priestley::duality::PriestleyDual;
use priestley::lattice::FinLattice;
use priestley::poset::FinPoset;
use priestley::symbolic::Fixture;
use priestley::topspace::{spectral_space_of_dual, FiniteTopSpace};
use priestley::{Bounds, Error};

use crate::input::{ParsedInput, Payload, UsageError};
use crate::report::{CheckReport, CheckRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Dual,
    Hm,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Dual => "dual",
            Suite::Hm => "hm",
            Suite::All => "all",
        }
    }

    fn runs_dual(self) -> bool {
        matches!(self, Suite::Dual | Suite::All)
    }

    fn runs_hm(self) -> bool {
        matches!(self, Suite::Hm | Suite::All)
    }
}

/// Accumulates rows and optional per-check timings. A check body returns
/// `Ok(detail)` for a pass and any recoverable error for a fail row;
/// `BoundExceeded` escalates to a usage error instead of masquerading as
/// a theorem violation.
struct Runner {
    report: CheckReport,
    timings: Option<BTreeMap<String, u64>>,
}

impl Runner {
    fn new(suite: &str, subject: String, timings: bool) -> Runner {
        Runner {
            report: CheckReport::new(suite, subject),
            timings: timings.then(BTreeMap::new),
        }
    }

    /// Run a named check that also yields a value needed downstream.
    /// `Ok(None)` means the check failed and was recorded; the caller
    /// decides whether later checks still make sense.
    fn step<T>(
        &mut self,
        name: &str,
        f: impl FnOnce() -> priestley::Result<(T, String)>,
    ) -> Result<Option<T>, UsageError> {
        let start = Instant::now();
        let outcome = f();
        if let Some(t) = &mut self.timings {
            t.insert(name.to_string(), start.elapsed().as_millis() as u64);
        }
        match outcome {
            Ok((value, detail)) => {
                self.report.checks.push(CheckRow::pass(name, detail));
                Ok(Some(value))
            }
            Err(Error::BoundExceeded { size, bound }) => Err(UsageError(format!(
                "size bound exceeded while running check {name:?}: \
                 {size} > {bound}; raise --max-size to force the scan"
            ))),
            Err(e) => {
                // Custom witnesses travel as IsoFailure payloads; the
                // variant prefix adds nothing next to a "fail" status.
                let witness = match e {
                    Error::IsoFailure(msg) => msg,
                    other => other.to_string(),
                };
                self.report.checks.push(CheckRow::fail(name, witness));
                Ok(None)
            }
        }
    }

    fn check(
        &mut self,
        name: &str,
        f: impl FnOnce() -> priestley::Result<String>,
    ) -> Result<bool, UsageError> {
        Ok(self.step(name, || f().map(|d| ((), d)))?.is_some())
    }

    fn finish(mut self) -> CheckReport {
        self.report.timings_ms = self.timings.take().filter(|t| !t.is_empty());
        self.report
    }
}

pub fn run_suite(
    input: &ParsedInput,
    suite: Suite,
    timings: bool,
) -> Result<CheckReport, UsageError> {
    let mut r = Runner::new(suite.name(), input.payload.describe(), timings);
    let bounds = &input.bounds;
    match &input.payload {
        Payload::Lattice(l) => {
            lattice_checks(&mut r, l, suite, bounds)?;
        }
        Payload::Poset(p) => {
            r.report.count("posetElements", p.n() as u64);
            let lat = r.step("downset-lattice", || {
                let (lat, downsets) = FinLattice::downset_lattice(p, bounds)?;
                let detail = format!(
                    "{} downsets form a bounded distributive lattice",
                    downsets.len()
                );
                Ok((lat, detail))
            })?;
            if let Some(lat) = lat {
                let dual = lattice_checks(&mut r, &lat, suite, bounds)?;
                if let Some(dual) = dual {
                    r.check("birkhoff-point-count", || {
                        if dual.point_count() == p.n() {
                            Ok(format!(
                                "the dual of the downset lattice has exactly the {} poset elements as points",
                                p.n()
                            ))
                        } else {
                            Err(Error::IsoFailure(format!(
                                "{} dual points for {} poset elements",
                                dual.point_count(),
                                p.n()
                            )))
                        }
                    })?;
                }
                if suite.runs_hm() {
                    alexandrov_check(&mut r, p, bounds)?;
                }
            }
        }
        Payload::Space(s) => {
            space_checks(&mut r, s, suite, bounds)?;
        }
    }
    Ok(r.finish())
}

/// The lattice-side checks shared by lattice and poset inputs. Returns the
/// dual when it was built so callers can add input-specific rows.
fn lattice_checks(
    r: &mut Runner,
    l: &FinLattice,
    suite: Suite,
    bounds: &Bounds,
) -> Result<Option<PriestleyDual>, UsageError> {
    r.report.count("elements", l.n() as u64);
    let distributive = r.check("distributive", || match l.check_distributive() {
        Ok(()) => Ok(format!(
            "a∧(b∨c) = (a∧b)∨(a∧c) over all {} triples",
            l.n() * l.n() * l.n()
        )),
        Err(Error::NotDistributive { a, b, c }) => Err(Error::IsoFailure(format!(
            "not distributive: a∧(b∨c) ≠ (a∧b)∨(a∧c) at (a, b, c) = ({}, {}, {})",
            l.label(a),
            l.label(b),
            l.label(c)
        ))),
        Err(e) => Err(e),
    })?;
    if !distributive {
        // Everything downstream needs the dual, which needs distributivity.
        return Ok(None);
    }
    let dual = r.step("dual-construction", || {
        let d = PriestleyDual::of(l, bounds)?;
        let detail = format!(
            "{} prime filters ordered by inclusion, {} of them completely prime",
            d.point_count(),
            d.y_set().len()
        );
        Ok((d, detail))
    })?;
    let dual = match dual {
        Some(d) => d,
        None => return Ok(None),
    };
    r.report.count("points", dual.point_count() as u64);
    r.report.count("completelyPrime", dual.y_set().len() as u64);

    if suite.runs_dual() {
        r.check("reconstruction", || {
            let rec = dual.reconstruct(bounds)?;
            if rec.upsets.len() != l.n() {
                return Err(Error::IsoFailure(format!(
                    "{} clopen upsets for {} lattice elements",
                    rec.upsets.len(),
                    l.n()
                )));
            }
            Ok(format!(
                "a ↦ σ(a) is an isomorphism onto the {} clopen upsets of the dual",
                rec.upsets.len()
            ))
        })?;
        let correspondence = r.step("filter-correspondence", || {
            let c = dual.filter_correspondence(bounds)?;
            let detail = format!(
                "{} filters ↔ {} closed upsets, mutually inverse and antitone",
                c.filters.len(),
                c.closed_upsets.len()
            );
            Ok((c, detail))
        })?;
        if let Some(c) = correspondence {
            r.report.count("filters", c.filters.len() as u64);
            r.report.count("closedUpsets", c.closed_upsets.len() as u64);
        }
        r.check("order-separation", || {
            let s = dual.structural_validators(bounds)?;
            if s.all_hold() {
                Ok("clopen-upset separation, Esakia downsets, and extremal \
                    order-disconnectedness all hold"
                    .to_string())
            } else {
                let mut failing = Vec::new();
                if !s.separation {
                    failing.push("separation");
                }
                if !s.down_of_clopen_clopen {
                    failing.push("downsets of clopens");
                }
                if !s.extremally_order_disconnected {
                    failing.push("extremal order-disconnectedness");
                }
                if !s.down_of_closed_closed {
                    failing.push("downsets of closed sets");
                }
                Err(Error::IsoFailure(format!("failing: {}", failing.join(", "))))
            }
        })?;
        r.check("spatial-density", || {
            if dual.spatial_via_density()? {
                Ok("Y is dense in the dual and the points order-separate the lattice".into())
            } else {
                Err(Error::IsoFailure(
                    "the completely prime filters fail to order-separate the lattice".into(),
                ))
            }
        })?;
        r.check("sigma-preserves-joins", || {
            dual.sigma_preserves_joins(bounds)?;
            Ok(format!(
                "σ(⋁S) = ⋃σ(s) over all {} subsets",
                1u64 << l.n()
            ))
        })?;
        r.check("prime-spectrum", || {
            let rows = dual.complete_primeness_report(bounds)?;
            let cp = rows.iter().filter(|row| row.completely_prime).count();
            for row in &rows {
                if row.completely_prime != (row.min_points.len() == 1)
                    || row.intersection_of_points != row.filter.members()
                {
                    return Err(Error::IsoFailure(format!(
                        "spectrum row disagrees at filter {}",
                        row.filter.members()
                    )));
                }
            }
            Ok(format!(
                "{cp} of {} filters completely prime, each a singleton-minimum \
                 upset; every filter is the meet of its points",
                rows.len()
            ))
        })?;
    }

    if suite.runs_hm() {
        r.check("scott-coherence", || {
            let filters = l.filters(bounds)?;
            for &f in &filters {
                let sc = dual.scott_conditions(f, bounds)?;
                if !sc.agree() || !sc.literal {
                    return Err(Error::IsoFailure(format!(
                        "Scott characterizations disagree at filter {}",
                        f.members()
                    )));
                }
            }
            Ok(format!(
                "{} filters: the literal, minimal-point, and closure-stability \
                 characterizations coincide (all Scott-open here)",
                filters.len()
            ))
        })?;
        let hm = r.step("hofmann-mislove", || {
            let hm = dual.hofmann_mislove(bounds)?;
            let detail = format!(
                "{} Scott-open filters ↔ {} S-upsets ↔ {} compact saturated subsets of Y",
                hm.scott_open_filters.len(),
                hm.s_upsets.len(),
                hm.ksat_y.len()
            );
            Ok((hm, detail))
        })?;
        if let Some(hm) = hm {
            r.report.count("scottOpenFilters", hm.scott_open_filters.len() as u64);
        }
        let spectral = r.step("spectral-compact-saturated", || {
            let spectral = spectral_space_of_dual(&dual, bounds)?;
            let ksat = spectral.compact_saturated(bounds)?;
            let clup = dual.closed_upsets(bounds)?;
            if ksat != clup {
                return Err(Error::IsoFailure(format!(
                    "{} compact saturated sets vs {} closed upsets",
                    ksat.len(),
                    clup.len()
                )));
            }
            let detail = format!(
                "the {} compact saturated sets of the spectral companion are \
                 exactly the closed upsets of the dual",
                ksat.len()
            );
            Ok((spectral, detail))
        })?;
        if let Some(spectral) = spectral {
            r.check("spectral-sober", || {
                if spectral.is_sober() {
                    Ok("the spectral companion is sober".into())
                } else {
                    Err(Error::NotSober)
                }
            })?;
        }
    }
    Ok(Some(dual))
}

fn alexandrov_check(r: &mut Runner, p: &FinPoset, bounds: &Bounds) -> Result<(), UsageError> {
    r.check("alexandrov-hofmann-mislove", || {
        let space = FiniteTopSpace::alexandrov(p, bounds)?;
        let hm = space.hofmann_mislove(bounds)?;
        Ok(format!(
            "on the upset topology, {} Scott-open filters of the open-set \
             frame ↔ {} compact saturated sets",
            hm.open_filters.len(),
            hm.compact_saturated.len()
        ))
    })?;
    Ok(())
}

fn space_checks(
    r: &mut Runner,
    s: &FiniteTopSpace,
    suite: Suite,
    bounds: &Bounds,
) -> Result<(), UsageError> {
    r.report.count("points", s.n() as u64);
    r.report.count("opens", s.opens().len() as u64);

    if suite.runs_dual() {
        let spec = r.step("t0-specialization", || {
            let p = s.specialization()?;
            let detail = format!(
                "the space is T0; opens are upsets of the specialization \
                 order ({} cover pairs)",
                p.cover_pairs().len()
            );
            Ok((p, detail))
        })?;
        if spec.is_none() {
            return Ok(());
        }
        let frame = r.step("open-frame", || {
            let (frame, _denote) = s.open_frame()?;
            frame.check_distributive()?;
            let detail = format!(
                "the {} opens form a bounded distributive lattice under ∪/∩",
                frame.n()
            );
            Ok((frame, detail))
        })?;
        if let Some(frame) = &frame {
            r.report.count("frameElements", frame.n() as u64);
        }
        r.check("frame-points-recover-space", || {
            s.compare_with_frame_points(bounds)?;
            Ok("neighbourhood filters biject with the completely prime \
                filters of the open-set frame, matching opens both ways"
                .into())
        })?;
    }

    if suite.runs_hm() {
        let sober = r.check("sober", || {
            if s.is_sober() {
                Ok("every irreducible closed set has a unique generic point".into())
            } else {
                Err(Error::NotSober)
            }
        })?;
        if !sober {
            return Ok(());
        }
        let hm = r.step("hofmann-mislove", || {
            let hm = s.hofmann_mislove(bounds)?;
            let detail = format!(
                "{} Scott-open filters of the open-set frame ↔ {} compact \
                 saturated sets, inclusion-reversing",
                hm.open_filters.len(),
                hm.compact_saturated.len()
            );
            Ok((hm, detail))
        })?;
        if let Some(hm) = &hm {
            r.report.count("openFilters", hm.open_filters.len() as u64);
            r.report.count("compactSaturated", hm.compact_saturated.len() as u64);
        }
        r.check("saturated-are-specialization-upsets", || {
            let upsets = s.specialization()?.upsets(bounds)?;
            let ksat = s.compact_saturated(bounds)?;
            if ksat == upsets {
                Ok(format!(
                    "the {} compact saturated sets are exactly the upsets of \
                     the specialization order",
                    ksat.len()
                ))
            } else {
                Err(Error::IsoFailure(format!(
                    "{} compact saturated sets vs {} specialization upsets",
                    ksat.len(),
                    upsets.len()
                )))
            }
        })?;
    }
    Ok(())
}

/// The symbolic-frame battery for both fixtures, flattened into one report.
pub fn run_fixtures(bounds: &Bounds, seed: u64, timings: bool) -> CheckReport {
    let mut r = Runner::new(
        "fixtures",
        "symbolic frames: chain-omega-plus-one, cofinite-naturals".to_string(),
        timings,
    );
    let mut total = 0u64;
    let mut passed = 0u64;
    for fx in Fixture::ALL {
        let start = Instant::now();
        let rep = fx.fixture_report(bounds, seed);
        if let Some(t) = &mut r.timings {
            t.insert(rep.fixture.clone(), start.elapsed().as_millis() as u64);
        }
        for c in rep.checks {
            let name = format!("{}/{}", rep.fixture, c.name);
            total += 1;
            if c.passed {
                passed += 1;
                r.report.checks.push(CheckRow::pass(&name, c.detail));
            } else {
                r.report.checks.push(CheckRow::fail(&name, c.detail));
            }
        }
    }
    r.report.count("checks", total);
    r.report.count("passed", passed);
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_input;

    const DIAMOND: &str = r#"{"lattice":{"elements":["0","a","b","1"],
        "order-pairs":[["0","a"],["0","b"],["a","1"],["b","1"]]}}"#;

    // M3: bottom, three incomparable atoms, top — modular, not distributive.
    const M3: &str = r#"{"lattice":{"elements":["0","x","y","z","1"],
        "order-pairs":[["0","x"],["0","y"],["0","z"],["x","1"],["y","1"],["z","1"]]}}"#;

    #[test]
    fn diamond_passes_the_full_suite_with_expected_counts() {
        let input = parse_input(DIAMOND).unwrap();
        let report = run_suite(&input, Suite::All, false).unwrap();
        assert!(report.all_passed(), "{}", report.render());
        assert_eq!(report.counts["filters"], 4);
        assert_eq!(report.counts["points"], 2);
        assert_eq!(report.counts["elements"], 4);
        assert_eq!(report.counts["closedUpsets"], 4);
        assert_eq!(report.counts["scottOpenFilters"], 4);
        assert!(report.timings_ms.is_none());
    }

    #[test]
    fn m3_fails_distributivity_with_a_triple_witness() {
        let input = parse_input(M3).unwrap();
        let report = run_suite(&input, Suite::All, false).unwrap();
        assert!(!report.all_passed());
        assert_eq!(report.checks.len(), 1);
        let row = &report.checks[0];
        assert_eq!(row.name, "distributive");
        assert_eq!(row.status, "fail");
        let witness = row.witness.as_ref().unwrap();
        assert!(witness.contains("(a, b, c) = (x, y, z)"), "got: {witness}");
    }

    #[test]
    fn indiscrete_space_fails_the_hm_suite_as_not_sober() {
        let input = parse_input(r#"{"space":{"points":2,"opens":[[],[0,1]]}}"#).unwrap();
        let report = run_suite(&input, Suite::Hm, false).unwrap();
        assert!(!report.all_passed());
        assert_eq!(report.checks.len(), 1);
        assert_eq!(report.checks[0].name, "sober");
        assert_eq!(report.checks[0].witness.as_deref(), Some("space is not sober"));
    }

    #[test]
    fn sierpinski_space_passes_both_suites() {
        let input = parse_input(r#"{"space":{"points":2,"opens":[[],[1],[0,1]]}}"#).unwrap();
        let report = run_suite(&input, Suite::All, false).unwrap();
        assert!(report.all_passed(), "{}", report.render());
        assert_eq!(report.counts["openFilters"], report.counts["compactSaturated"]);
    }

    #[test]
    fn poset_input_runs_birkhoff_and_alexandrov_checks() {
        let input =
            parse_input(r#"{"poset":{"elements":["a","b"],"covers":[["a","b"]]}}"#).unwrap();
        let report = run_suite(&input, Suite::All, false).unwrap();
        assert!(report.all_passed(), "{}", report.render());
        assert_eq!(report.counts["posetElements"], 2);
        // Downsets of the 2-chain: ∅, {a}, {a,b} — a 3-chain.
        assert_eq!(report.counts["elements"], 3);
        assert_eq!(report.counts["points"], 2);
        let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
        assert!(names.contains(&"birkhoff-point-count"));
        assert!(names.contains(&"alexandrov-hofmann-mislove"));
    }

    #[test]
    fn timings_are_recorded_only_on_request() {
        let input = parse_input(DIAMOND).unwrap();
        let report = run_suite(&input, Suite::Dual, true).unwrap();
        let timings = report.timings_ms.as_ref().unwrap();
        assert!(timings.contains_key("distributive"));
    }

    #[test]
    fn fixture_battery_flattens_into_one_passing_report() {
        let report = run_fixtures(&Bounds::default(), 17, false);
        assert!(report.all_passed(), "{}", report.render());
        assert_eq!(report.counts["checks"], report.counts["passed"]);
        assert_eq!(report.counts["checks"], 28);
        assert!(report
            .checks
            .iter()
            .any(|c| c.name == "chain-omega-plus-one/scott-open-classification"));
        assert!(report
            .checks
            .iter()
            .any(|c| c.name == "cofinite-naturals/frame-compactness"));
    }
}
