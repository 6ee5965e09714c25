//! The acceptance battery: exhaustive desk-scale checks, one test per
//! criterion, each printing a single verdict line.
//!
//! The corpus is every downset lattice of every poset with at most five
//! elements (one representative per isomorphism class) plus the named hand
//! fixtures (chains to eight elements, Boolean lattices to sixteen, the
//! diamond). The symbolic criteria quantify over the descriptor classes of
//! the two infinite fixtures.

use std::collections::BTreeSet;

use priestley::corpus::{acceptance_lattices, poset_representatives};
use priestley::duality::PriestleyDual;
use priestley::set::ElemSet;
use priestley::symbolic::{Element, FilterDesc, Fixture, PointDesc, SatSetDesc};
use priestley::topspace::{spectral_space_of_dual, FiniteTopSpace};
use priestley::{Bounds, Error};

fn verdict(n: usize, name: &str) {
    println!("criterion {n} ({name}): pass");
}

#[test]
fn criterion_1_priestley_round_trip() {
    let bounds = Bounds::default();
    let mut lattices = 0usize;
    for (name, lat) in acceptance_lattices() {
        let dual = PriestleyDual::of(&lat, &bounds).unwrap();
        let report = dual
            .reconstruct(&bounds)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(report.upsets.len(), lat.n(), "{name}");
        assert_eq!(report.iso.len(), lat.n(), "{name}");
        // The isomorphism is onto: every clopen upset is hit exactly once.
        let mut hit = vec![false; report.upsets.len()];
        for &i in &report.iso {
            assert!(!hit[i], "{name}: σ is not injective");
            hit[i] = true;
        }
        assert!(hit.iter().all(|&h| h), "{name}: σ is not onto");
        lattices += 1;
    }
    assert_eq!(lattices, 101);
    verdict(1, "clopen-upset reconstruction is an exact isomorphism");
}

#[test]
fn criterion_2_filter_closed_upset_bijection() {
    let bounds = Bounds::default();
    for (name, lat) in acceptance_lattices() {
        let dual = PriestleyDual::of(&lat, &bounds).unwrap();
        // Round trips and antitonicity both ways are verified inside; the
        // counts are re-asserted here.
        let report = dual
            .filter_correspondence(&bounds)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(
            report.filters.len(),
            report.closed_upsets.len(),
            "{name}: |Filt| must equal |ClUp|"
        );
        assert_eq!(
            report.closed_upsets.len(),
            dual.closed_upsets(&bounds).unwrap().len(),
            "{name}"
        );
    }
    verdict(2, "filters and closed upsets correspond bijectively, antitone both ways");
}

#[test]
fn criterion_3_scott_openness_characterizations_cohere() {
    let bounds = Bounds::default();
    for (name, lat) in acceptance_lattices() {
        let dual = PriestleyDual::of(&lat, &bounds).unwrap();
        for f in lat.filters(&bounds).unwrap() {
            let c = dual.scott_conditions(f, &bounds).unwrap();
            assert!(c.agree(), "{name}: characterizations disagree");
            assert!(
                c.literal && c.min_in_y && c.closure_stable,
                "{name}: a finite-lattice filter failed Scott-openness"
            );
        }
    }
    // The checkers are not constant-true: on the ω+1 chain the top's
    // principal filter and the top element must both be rejected, with the
    // witness family verified literally.
    let ch = Fixture::ChainOmegaPlusOne;
    let top_filter = FilterDesc::Principal(Element::Top);
    let class = ch.classify_scott_open(&top_filter).unwrap();
    assert!(!class.scott_open);
    assert!(class.witness.is_some());
    ch.verify_scott_classification(&top_filter).unwrap();
    let compact = ch.is_compact_element(&Element::Top).unwrap();
    assert!(!compact.compact);
    assert!(compact.witness.is_some());
    ch.verify_compact_element(&Element::Top).unwrap();
    verdict(3, "the three Scott-openness predicates agree, and the checkers reject the chain top");
}

#[test]
fn criterion_4_finite_hofmann_mislove() {
    let bounds = Bounds::default();
    // Alexandrov spaces of all poset representatives up to five points.
    for n in 1..=5 {
        for (k, p) in poset_representatives(n).iter().enumerate() {
            let space = FiniteTopSpace::alexandrov(p, &bounds).unwrap();
            assert!(space.is_t0(), "alexandrov[n={n},#{k}] must be T0");
            assert!(space.is_sober(), "alexandrov[n={n},#{k}] must be sober");
            let hm = space
                .hofmann_mislove(&bounds)
                .unwrap_or_else(|e| panic!("alexandrov[n={n},#{k}]: {e}"));
            assert_eq!(
                hm.open_filters.len(),
                hm.compact_saturated.len(),
                "alexandrov[n={n},#{k}]: |OFilt| must equal |KSat|"
            );
        }
    }
    // Every topology on at most three labelled points, by brute force.
    let mut sober_spaces = 0usize;
    let mut non_sober_spaces = 0usize;
    for n in 0..=3usize {
        let subsets: Vec<ElemSet> = (0..(1u64 << n)).map(ElemSet::from_bits).collect();
        for bits in 0..(1u64 << subsets.len()) {
            let family: Vec<ElemSet> = subsets
                .iter()
                .enumerate()
                .filter(|&(i, _)| bits & (1 << i) != 0)
                .map(|(_, &s)| s)
                .collect();
            let labels = (0..n).map(|i| format!("p{i}")).collect();
            let Ok(space) = FiniteTopSpace::build(n, &family, labels) else {
                continue;
            };
            // Independent oracle: a finite space is sober exactly when it
            // is T0.
            assert_eq!(space.is_sober(), space.is_t0());
            if space.is_sober() {
                let hm = space.hofmann_mislove(&bounds).unwrap();
                assert_eq!(hm.open_filters.len(), hm.compact_saturated.len());
                sober_spaces += 1;
            } else {
                assert!(matches!(
                    space.hofmann_mislove(&bounds),
                    Err(Error::NotSober)
                ));
                non_sober_spaces += 1;
            }
        }
    }
    // 1 + 1 + 4 + 29 topologies in total on 0..=3 points.
    assert_eq!(sober_spaces + non_sober_spaces, 35);
    assert!(non_sober_spaces > 0);
    verdict(4, "sober spaces verified and open filters correspond to compact saturated sets");
}

#[test]
fn criterion_5_spectral_compact_saturated_equals_closed_upsets() {
    let bounds = Bounds::default();
    for (name, lat) in acceptance_lattices() {
        let dual = PriestleyDual::of(&lat, &bounds).unwrap();
        let spectral = spectral_space_of_dual(&dual, &bounds).unwrap();
        let ksat = spectral.compact_saturated(&bounds).unwrap();
        let clup = dual.closed_upsets(&bounds).unwrap();
        assert_eq!(ksat, clup, "{name}: KSat of the spectral space must be ClUp of the dual");
    }
    verdict(5, "compact saturated sets of the spectral space are the closed upsets of the dual");
}

#[test]
fn criterion_6_singleton_minima_and_point_intersections() {
    let bounds = Bounds::default();
    for (name, lat) in acceptance_lattices() {
        let dual = PriestleyDual::of(&lat, &bounds).unwrap();
        for row in dual.complete_primeness_report(&bounds).unwrap() {
            assert_eq!(
                row.completely_prime,
                row.min_points.len() == 1,
                "{name}: complete primeness must match a singleton minimum"
            );
            assert_eq!(
                row.intersection_of_points,
                row.filter.members(),
                "{name}: a filter must be the intersection of the prime filters above it"
            );
        }
    }
    verdict(6, "completely prime filters are exactly those with singleton minima, and filters are intersections of points");
}

#[test]
fn criterion_7_chain_fixture() {
    let fx = Fixture::ChainOmegaPlusOne;
    // The top's principal filter fails with a verified counterexample.
    let top_filter = FilterDesc::Principal(Element::Top);
    let class = fx.classify_scott_open(&top_filter).unwrap();
    assert!(!class.scott_open && class.witness.is_some());
    fx.verify_scott_classification(&top_filter).unwrap();
    // Every other principal filter passes.
    for k in 1..=1000u64 {
        let f = FilterDesc::Principal(Element::Nat(k));
        assert!(fx.classify_scott_open(&f).unwrap().scott_open, "Nat({k})");
        if k <= 50 || k % 100 == 0 {
            fx.verify_scott_classification(&f).unwrap();
        }
    }
    // Round trips across the whole schema slice, plus the improper filter.
    for m in 1..=1000u64 {
        let f = FilterDesc::Principal(Element::Nat(m));
        let q = fx.hm_map(&f).unwrap();
        assert_eq!(q, SatSetDesc::PrefixPoints(m));
        assert_eq!(fx.hm_inv(&q).unwrap(), f);
    }
    let empty = fx.hm_map(&FilterDesc::Improper).unwrap();
    assert_eq!(empty, SatSetDesc::EmptySet);
    assert_eq!(fx.hm_inv(&empty).unwrap(), FilterDesc::Improper);
    // Principal(Nat(0)) is the improper filter in canonical form and maps
    // with it.
    assert_eq!(
        fx.hm_map(&FilterDesc::Principal(Element::Nat(0))).unwrap(),
        SatSetDesc::EmptySet
    );
    // Not compact, by both routes.
    let compactness = fx.frame_compact(50).unwrap();
    assert!(!compactness.compact() && compactness.agree());
    verdict(7, "chain fixture: top filter refuted, naturals pass, round trips exact, frame not compact");
}

#[test]
fn criterion_8_cofinite_fixture() {
    let fx = Fixture::CofiniteNat;
    // Complete primeness of every point descriptor in the schema slice.
    for n in 0..=1000u64 {
        let f = FilterDesc::ContainsAll([n].into_iter().collect());
        assert!(
            fx.completely_prime_refutation(&f).unwrap().is_none(),
            "F({n})"
        );
        if n <= 50 || n % 100 == 0 {
            fx.verify_completely_prime(&f).unwrap();
        }
    }
    assert!(fx
        .completely_prime_refutation(&FilterDesc::AllNonzero)
        .unwrap()
        .is_none());
    fx.verify_completely_prime(&FilterDesc::AllNonzero).unwrap();
    // Compact by both routes, and the routes agree.
    let compactness = fx.frame_compact(50).unwrap();
    assert!(compactness.compact() && compactness.agree());
    assert!(compactness.top_is_compact && compactness.spectrum_min_completely_prime);
    // The correspondence bijects every ContainsAll class over {0..20},
    // with exact inverses and the singleton-minimum test matching
    // primeness classwise.
    let universe: Vec<u64> = (0..=20).collect();
    let mut classes = 0u64;
    for mask in 0u64..(1 << universe.len()) {
        let a: BTreeSet<u64> = universe
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &v)| v)
            .collect();
        let f = fx.canonical_filter(&FilterDesc::ContainsAll(a.clone())).unwrap();
        let q = fx.hm_map(&f).unwrap();
        let expected = if a.is_empty() {
            SatSetDesc::GenericOnly
        } else {
            SatSetDesc::FinitePlusGeneric(a.clone())
        };
        assert_eq!(q, expected);
        assert_eq!(fx.hm_inv(&q).unwrap(), f);
        let singleton = fx.sat_min(&q).unwrap().is_singleton();
        let completely_prime = fx.completely_prime_refutation(&f).unwrap().is_none();
        let prime = matches!(
            fx.primality(&f).unwrap(),
            priestley::symbolic::PrimalityVerdict::Prime
        );
        assert_eq!(singleton, completely_prime, "A = {a:?}");
        assert_eq!(singleton, prime, "A = {a:?}");
        assert_eq!(singleton, a.len() <= 1, "A = {a:?}");
        classes += 1;
    }
    assert_eq!(classes, 1 << 21);
    assert_eq!(
        fx.hm_map(&FilterDesc::AllNonzero).unwrap(),
        SatSetDesc::GenericOnly
    );
    assert_eq!(
        fx.hm_inv(&SatSetDesc::GenericOnly).unwrap(),
        FilterDesc::AllNonzero
    );
    // Spot-check that the Generic point is the one the singleton tests see.
    assert_eq!(
        fx.sat_min(&SatSetDesc::GenericOnly).unwrap(),
        priestley::symbolic::MinPoints::Singleton(PointDesc::Generic)
    );
    verdict(8, "cofinite fixture: points completely prime, frame compact both routes, correspondence bijects all small classes");
}
