//! The prime-filter dual of a finite distributive lattice.
//!
//! Points of the dual are the proper prime filters, ordered by inclusion.
//! The topology of a finite dual is discrete, so every subset is clopen and
//! "closed upset" just means upset; the code still phrases each check
//! against the topological definition (closure is the identity, the clopen
//! family is the powerset) so the checks mirror their general statements.
//!
//! The extent map σ sends a lattice element to the set of points containing
//! it; it reconstructs the lattice as the clopen upsets of the dual. Filters
//! of the lattice correspond to closed upsets of the dual by
//! F ↦ ⋂{σ(a) : a ∈ F} and K ↦ {a : K ⊆ σ(a)}, reversing inclusion; the
//! improper filter pairs with the empty set. Refining that correspondence,
//! Scott-open filters pair with the closed upsets whose minimal points are
//! completely prime, and those in turn restrict to the compact saturated
//! subsets of the point space Y. Over a finite lattice every filter is
//! Scott-open and Y is everything, so the three collections coincide; the
//! maps are still computed and inverted literally.

use crate::error::{Error, Result};
use crate::lattice::{render_set, FinLattice, Filter};
use crate::poset::{Direction, Extreme, FinPoset};
use crate::set::ElemSet;
use crate::Bounds;

#[derive(Clone, Debug)]
pub struct PriestleyDual {
    base: FinLattice,
    /// Member mask of each prime filter, ascending bitmask order.
    points: Vec<ElemSet>,
    /// Inclusion order on `points`. Empty poset for the one-element lattice.
    order: FinPoset,
    /// sigma[a] = set of point indices whose filter contains `a`.
    sigma: Vec<ElemSet>,
    /// Points that are completely prime filters. For a finite distributive
    /// lattice this is every point; it is computed, not assumed.
    y: ElemSet,
}

/// Outcome of rebuilding the lattice from the clopen upsets of its dual.
#[derive(Clone, Debug)]
pub struct ReconstructReport {
    /// All upsets of the dual order, ascending bitmask order.
    pub upsets: Vec<ElemSet>,
    /// For each lattice element `a`, the index into `upsets` of σ(a).
    pub iso: Vec<usize>,
}

/// The three equivalent characterizations of Scott-openness of a filter,
/// each evaluated independently against its own definition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScottConditions {
    /// The literal quantifier over subsets (finite witness search) within
    /// the exhaustive bound; beyond it, the subset-is-its-own-witness
    /// argument stands in for the scan.
    pub literal: bool,
    /// Minimal points of the filter's closed upset all lie in Y.
    pub min_in_y: bool,
    /// The closed upset escapes closures: K ⊆ cl(U) implies K ⊆ U for
    /// every open upset U.
    pub closure_stable: bool,
}

impl ScottConditions {
    pub fn agree(self) -> bool {
        self.literal == self.min_in_y && self.min_in_y == self.closure_stable
    }
}

/// The filter / closed-upset correspondence, fully verified at construction.
#[derive(Clone, Debug)]
pub struct CorrespondenceReport {
    pub filters: Vec<Filter>,
    pub closed_upsets: Vec<ElemSet>,
}

/// The Scott-open filter / S-upset / compact-saturated-in-Y chain of
/// bijections, verified at construction.
#[derive(Clone, Debug)]
pub struct HofmannMisloveReport {
    pub scott_open_filters: Vec<Filter>,
    pub s_upsets: Vec<ElemSet>,
    pub ksat_y: Vec<ElemSet>,
}

/// Per-filter row relating complete primeness to the shape of the minimal
/// point set, plus the reconstruction of the filter from its points.
#[derive(Clone, Debug)]
pub struct PrimenessRow {
    pub filter: Filter,
    pub completely_prime: bool,
    pub min_points: ElemSet,
    pub intersection_of_points: ElemSet,
}

/// Results of the order-topological sanity checks on the dual space.
#[derive(Clone, Copy, Debug)]
pub struct StructuralReport {
    /// For x ≰ y some clopen upset contains x and misses y.
    pub separation: bool,
    /// Downsets of clopens are clopen.
    pub down_of_clopen_clopen: bool,
    /// Closures of open upsets are open.
    pub extremally_order_disconnected: bool,
    /// Downsets of closed sets are closed.
    pub down_of_closed_closed: bool,
}

impl StructuralReport {
    pub fn all_hold(self) -> bool {
        self.separation
            && self.down_of_clopen_clopen
            && self.extremally_order_disconnected
            && self.down_of_closed_closed
    }
}

impl PriestleyDual {
    /// Compute the dual of a finite distributive lattice.
    pub fn of(l: &FinLattice, bounds: &Bounds) -> Result<PriestleyDual> {
        l.check_distributive()?;
        let filters = l.filters(bounds)?;
        let points: Vec<ElemSet> = filters
            .iter()
            .filter(|&&f| l.is_prime_filter(f))
            .map(|f| f.members())
            .collect();
        // `filters` is ascending, so `points` is too.
        let n = points.len();
        let order = if n == 0 {
            FinPoset::empty()
        } else {
            let rows: Vec<ElemSet> = points
                .iter()
                .map(|&p| {
                    points
                        .iter()
                        .enumerate()
                        .filter(|&(_, &q)| p.is_subset(q))
                        .map(|(j, _)| j)
                        .collect()
                })
                .collect();
            let labels = points.iter().map(|&p| render_set(l.poset(), p)).collect();
            FinPoset::from_leq(n, rows, labels)?
        };
        let sigma: Vec<ElemSet> = (0..l.n())
            .map(|a| {
                points
                    .iter()
                    .enumerate()
                    .filter(|&(_, &p)| p.contains(a))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let mut y = ElemSet::EMPTY;
        for (i, &p) in points.iter().enumerate() {
            let f = l.filter_from(p).expect("point is a filter");
            if l.is_completely_prime(f) {
                y = y.with(i);
            }
        }
        Ok(PriestleyDual {
            base: l.clone(),
            points,
            order,
            sigma,
            y,
        })
    }

    pub fn base(&self) -> &FinLattice {
        &self.base
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[ElemSet] {
        &self.points
    }

    pub fn point_filter(&self, i: usize) -> Filter {
        self.base
            .filter_from(self.points[i])
            .expect("point is a filter")
    }

    pub fn order(&self) -> &FinPoset {
        &self.order
    }

    /// σ(a): the clopen upset of points containing `a`.
    pub fn sigma(&self, a: usize) -> ElemSet {
        self.sigma[a]
    }

    /// Y: the points that are completely prime filters.
    pub fn y_set(&self) -> ElemSet {
        self.y
    }

    /// ζ(a) = σ(a) ∩ Y: the open extent of `a` in the point space.
    pub fn zeta(&self, a: usize) -> ElemSet {
        self.sigma[a].inter(self.y)
    }

    fn universe(&self) -> ElemSet {
        ElemSet::full(self.points.len())
    }

    /// Closed upsets of the dual (every subset is closed here, so: upsets),
    /// ascending bitmask order.
    pub fn closed_upsets(&self, bounds: &Bounds) -> Result<Vec<ElemSet>> {
        self.order.upsets(bounds)
    }

    /// Is `k` a closed upset whose minimal points all lie in Y?
    pub fn is_s_upset(&self, k: ElemSet) -> bool {
        self.order.is_upset(k) && self.order.extremes(k, Extreme::Min).is_subset(self.y)
    }

    /// K_F = ⋂{σ(a) : a ∈ F}: the closed upset of points above the filter.
    pub fn upset_of_filter(&self, f: Filter) -> ElemSet {
        f.members()
            .iter()
            .fold(self.universe(), |acc, a| acc.inter(self.sigma[a]))
    }

    /// F_K = {a : K ⊆ σ(a)}: the filter of elements whose extent covers `k`.
    /// The empty set yields the improper filter.
    pub fn filter_of_upset(&self, k: ElemSet) -> Result<Filter> {
        let members: ElemSet = (0..self.base.n())
            .filter(|&a| k.is_subset(self.sigma[a]))
            .collect();
        self.base
            .filter_from(members)
            .map_err(|e| Error::IsoFailure(format!("extent fails to be a filter: {e}")))
    }

    /// Rebuild the lattice as the clopen upsets of the dual and verify that
    /// a ↦ σ(a) is an isomorphism of bounded lattices onto them.
    pub fn reconstruct(&self, bounds: &Bounds) -> Result<ReconstructReport> {
        let upsets = self.closed_upsets(bounds)?;
        let l = &self.base;
        let n = l.n();
        if upsets.len() != n {
            return Err(Error::IsoFailure(format!(
                "{} clopen upsets for {} lattice elements",
                upsets.len(),
                n
            )));
        }
        let mut iso = Vec::with_capacity(n);
        for a in 0..n {
            let idx = upsets
                .binary_search(&self.sigma[a])
                .map_err(|_| Error::IsoFailure(format!("σ({}) is not an upset", l.label(a))))?;
            iso.push(idx);
        }
        // Injective because the images are distinct upsets.
        let mut seen = ElemSet::EMPTY;
        for &i in &iso {
            if seen.contains(i) {
                return Err(Error::IsoFailure("σ is not injective".into()));
            }
            seen = seen.with(i);
        }
        // Bounded-lattice homomorphism and order embedding.
        for a in 0..n {
            for b in 0..n {
                if self.sigma[l.meet(a, b)] != self.sigma[a].inter(self.sigma[b])
                    || self.sigma[l.join(a, b)] != self.sigma[a].union(self.sigma[b])
                {
                    return Err(Error::IsoFailure(format!(
                        "σ is not a homomorphism at ({}, {})",
                        l.label(a),
                        l.label(b)
                    )));
                }
                if l.leq(a, b) != self.sigma[a].is_subset(self.sigma[b]) {
                    return Err(Error::IsoFailure(format!(
                        "σ is not an order embedding at ({}, {})",
                        l.label(a),
                        l.label(b)
                    )));
                }
            }
        }
        if !self.sigma[l.bottom()].is_empty() || self.sigma[l.top()] != self.universe() {
            return Err(Error::IsoFailure("σ does not preserve the bounds".into()));
        }
        Ok(ReconstructReport { upsets, iso })
    }

    /// The filter / closed-upset correspondence: mutually inverse and
    /// antitone in both directions, with matching cardinalities.
    pub fn filter_correspondence(&self, bounds: &Bounds) -> Result<CorrespondenceReport> {
        let filters = self.base.filters(bounds)?;
        let closed_upsets = self.closed_upsets(bounds)?;
        if filters.len() != closed_upsets.len() {
            return Err(Error::IsoFailure(format!(
                "{} filters vs {} closed upsets",
                filters.len(),
                closed_upsets.len()
            )));
        }
        for &f in &filters {
            let k = self.upset_of_filter(f);
            if !self.order.is_upset(k) {
                return Err(Error::IsoFailure("filter extent is not an upset".into()));
            }
            if self.filter_of_upset(k)? != f {
                return Err(Error::IsoFailure("round trip filter → K → filter".into()));
            }
        }
        for &k in &closed_upsets {
            let f = self.filter_of_upset(k)?;
            if self.upset_of_filter(f) != k {
                return Err(Error::IsoFailure("round trip K → filter → K".into()));
            }
        }
        // Antitone in both directions.
        for &f in &filters {
            for &g in &filters {
                let (kf, kg) = (self.upset_of_filter(f), self.upset_of_filter(g));
                if f.members().is_subset(g.members()) != kg.is_subset(kf) {
                    return Err(Error::IsoFailure("correspondence is not antitone".into()));
                }
            }
        }
        Ok(CorrespondenceReport {
            filters,
            closed_upsets,
        })
    }

    /// Whether a filter is Scott-open. Within the exhaustive bound this runs
    /// the literal subset quantifier; beyond it, a subset of a finite
    /// lattice is its own finite witness, so the answer is true by that
    /// same argument rather than by scanning.
    fn scott_open(&self, f: Filter, bounds: &Bounds) -> Result<bool> {
        if self.base.n() <= bounds.scott {
            self.base.is_scott_open_exhaustive(f, bounds)
        } else {
            Ok(true)
        }
    }

    /// Evaluate the three Scott-openness characterizations independently.
    pub fn scott_conditions(&self, f: Filter, bounds: &Bounds) -> Result<ScottConditions> {
        let literal = self.scott_open(f, bounds)?;
        let k = self.upset_of_filter(f);
        let min_in_y = self
            .order
            .extremes(k, Extreme::Min)
            .is_subset(self.y);
        // Quantify over open upsets; closure is the identity on a finite
        // (discrete) dual, and is written as a closure so the check follows
        // the topological statement.
        let closure = |s: ElemSet| s;
        let mut closure_stable = true;
        for u in self.closed_upsets(bounds)? {
            if k.is_subset(closure(u)) && !k.is_subset(u) {
                closure_stable = false;
                break;
            }
        }
        Ok(ScottConditions {
            literal,
            min_in_y,
            closure_stable,
        })
    }

    /// The chain of bijections between Scott-open filters, S-upsets, and
    /// compact saturated subsets of the point space Y. Verifies both round
    /// trips and both order relations on every pair.
    pub fn hofmann_mislove(&self, bounds: &Bounds) -> Result<HofmannMisloveReport> {
        let filters = self.base.filters(bounds)?;
        let mut scott_open_filters = Vec::new();
        for &f in &filters {
            if self.scott_open(f, bounds)? {
                scott_open_filters.push(f);
            }
        }
        let s_upsets: Vec<ElemSet> = self
            .closed_upsets(bounds)?
            .into_iter()
            .filter(|&k| self.is_s_upset(k))
            .collect();
        let ksat_y = self.ksat_of_y(bounds)?;

        // Scott-open filters ↔ S-upsets through the extent maps.
        if scott_open_filters.len() != s_upsets.len() {
            return Err(Error::IsoFailure(format!(
                "{} Scott-open filters vs {} S-upsets",
                scott_open_filters.len(),
                s_upsets.len()
            )));
        }
        for &f in &scott_open_filters {
            let k = self.upset_of_filter(f);
            if s_upsets.binary_search(&k).is_err() {
                return Err(Error::IsoFailure("extent of Scott-open filter is not an S-upset".into()));
            }
            if self.filter_of_upset(k)? != f {
                return Err(Error::IsoFailure("Scott-open round trip failed".into()));
            }
        }

        // S-upsets ↔ compact saturated subsets of Y by restriction and
        // upward closure.
        if s_upsets.len() != ksat_y.len() {
            return Err(Error::IsoFailure(format!(
                "{} S-upsets vs {} compact saturated sets in Y",
                s_upsets.len(),
                ksat_y.len()
            )));
        }
        for &k in &s_upsets {
            let q = k.inter(self.y);
            if ksat_y.binary_search(&q).is_err() {
                return Err(Error::IsoFailure("restriction to Y left the compact saturated family".into()));
            }
            if self.order.closure(q, Direction::Up)? != k {
                return Err(Error::IsoFailure("upward closure does not recover the S-upset".into()));
            }
        }
        for &q in &ksat_y {
            let k = self.order.closure(q, Direction::Up)?;
            if !self.is_s_upset(k) {
                return Err(Error::IsoFailure("upward closure is not an S-upset".into()));
            }
            if k.inter(self.y) != q {
                return Err(Error::IsoFailure("restriction does not recover the saturated set".into()));
            }
        }
        // Order: filters reverse inclusion, upsets preserve it.
        for &f in &scott_open_filters {
            for &g in &scott_open_filters {
                let (kf, kg) = (self.upset_of_filter(f), self.upset_of_filter(g));
                if f.members().is_subset(g.members()) != kg.is_subset(kf) {
                    return Err(Error::IsoFailure("Scott-open correspondence is not antitone".into()));
                }
                if kf.is_subset(kg) != kf.inter(self.y).is_subset(kg.inter(self.y)) {
                    return Err(Error::IsoFailure("restriction to Y is not an order isomorphism".into()));
                }
            }
        }
        Ok(HofmannMisloveReport {
            scott_open_filters,
            s_upsets,
            ksat_y,
        })
    }

    /// Compact saturated subsets of Y under the induced order: the upsets of
    /// the subposet on Y (every subset of a finite space is compact).
    fn ksat_of_y(&self, bounds: &Bounds) -> Result<Vec<ElemSet>> {
        let members: Vec<usize> = self.y.iter().collect();
        if members.len() > bounds.enumeration {
            return Err(Error::BoundExceeded {
                size: members.len(),
                bound: bounds.enumeration,
            });
        }
        let mut out = Vec::new();
        for bits in 0..(1u128 << members.len()) {
            let q: ElemSet = members
                .iter()
                .enumerate()
                .filter(|&(j, _)| bits & (1 << j) != 0)
                .map(|(_, &p)| p)
                .collect();
            let is_upset_in_y = q
                .iter()
                .all(|i| self.order.up_set(i).inter(self.y).is_subset(q));
            if is_upset_in_y {
                out.push(q);
            }
        }
        out.sort();
        Ok(out)
    }

    /// For every Scott-open filter: completely prime iff its closed upset
    /// has a single minimal point, and the filter is the intersection of
    /// the points containing it. Both facts are verified; the rows are
    /// returned for reporting.
    pub fn complete_primeness_report(&self, bounds: &Bounds) -> Result<Vec<PrimenessRow>> {
        let mut rows = Vec::new();
        for f in self.base.filters(bounds)? {
            if !self.scott_open(f, bounds)? {
                continue;
            }
            let k = self.upset_of_filter(f);
            let min_points = self.order.extremes(k, Extreme::Min);
            let completely_prime = self.base.is_completely_prime(f);
            if completely_prime != (min_points.len() == 1) {
                return Err(Error::IsoFailure(format!(
                    "complete primeness vs minimal points at {}",
                    f.members()
                )));
            }
            // Intersect the points containing F; empty family gives the
            // whole lattice, pairing the improper filter with no points.
            let mut meet_all = ElemSet::full(self.base.n());
            for &p in &self.points {
                if f.members().is_subset(p) {
                    meet_all = meet_all.inter(p);
                }
            }
            if meet_all != f.members() {
                return Err(Error::IsoFailure(format!(
                    "filter {} is not the intersection of its points",
                    f.members()
                )));
            }
            rows.push(PrimenessRow {
                filter: f,
                completely_prime,
                min_points,
                intersection_of_points: meet_all,
            });
        }
        Ok(rows)
    }

    /// Order-topological sanity checks. On a finite dual the topology is
    /// discrete, so the clopen family is the full powerset and closure is
    /// the identity; each check still runs its definition.
    pub fn structural_validators(&self, bounds: &Bounds) -> Result<StructuralReport> {
        let n = self.points.len();
        if n > bounds.enumeration {
            return Err(Error::BoundExceeded {
                size: n,
                bound: bounds.enumeration,
            });
        }
        let universe = self.universe();
        let is_clopen = |s: ElemSet| s.is_subset(universe);
        let closure = |s: ElemSet| s;

        let mut separation = true;
        'pairs: for x in 0..n {
            for ypt in 0..n {
                if x != ypt && !self.order.leq(x, ypt) {
                    // Candidate witness: the principal upset of x.
                    let u = self.order.up_set(x);
                    if !(is_clopen(u) && self.order.is_upset(u) && u.contains(x) && !u.contains(ypt))
                    {
                        separation = false;
                        break 'pairs;
                    }
                }
            }
        }

        let mut down_of_clopen_clopen = true;
        let mut extremally_order_disconnected = true;
        let mut down_of_closed_closed = true;
        for bits in 0..(1u128 << n) {
            let s = ElemSet::from_bits(bits as u64);
            let down = self.order.closure(s, Direction::Down)?;
            if is_clopen(s) && !is_clopen(down) {
                down_of_clopen_clopen = false;
            }
            // Closed sets of the discrete dual are all subsets too.
            if !is_clopen(down) {
                down_of_closed_closed = false;
            }
            if self.order.is_upset(s) && !is_clopen(closure(s)) {
                extremally_order_disconnected = false;
            }
        }
        Ok(StructuralReport {
            separation,
            down_of_clopen_clopen,
            extremally_order_disconnected,
            down_of_closed_closed,
        })
    }

    /// Spatiality of the base lattice, decided by two routes that must
    /// agree: density of Y in the dual (which is closure under the discrete
    /// topology, hence equality), and separation of lattice elements by
    /// completely prime filters.
    pub fn spatial_via_density(&self) -> Result<bool> {
        let dense = {
            let closure = |s: ElemSet| s;
            closure(self.y) == self.universe()
        };
        let n = self.base.n();
        let mut separated = true;
        'outer: for a in 0..n {
            for b in 0..n {
                if !self.base.leq(a, b) {
                    let found = self
                        .y
                        .iter()
                        .any(|p| self.points[p].contains(a) && !self.points[p].contains(b));
                    if !found {
                        separated = false;
                        break 'outer;
                    }
                }
            }
        }
        if dense != separated {
            return Err(Error::IsoFailure(
                "spatiality routes disagree (density vs separation)".into(),
            ));
        }
        Ok(dense)
    }

    /// σ turns joins into unions: σ(⋁S) = ⋃{σ(s) : s ∈ S} for every subset
    /// S of the lattice (exact equality in the finite case). Exhaustive, so
    /// bounded like the other 2^n scans over lattice elements.
    pub fn sigma_preserves_joins(&self, bounds: &Bounds) -> Result<()> {
        let n = self.base.n();
        if n > bounds.scott {
            return Err(Error::BoundExceeded {
                size: n,
                bound: bounds.scott,
            });
        }
        for bits in 0..(1u64 << n) {
            let s = ElemSet::from_bits(bits);
            let lhs = self.sigma[self.base.join_of(s)];
            let rhs = s
                .iter()
                .fold(ElemSet::EMPTY, |acc, x| acc.union(self.sigma[x]));
            if lhs != rhs {
                return Err(Error::IsoFailure(format!(
                    "σ(⋁S) ≠ ⋃σ(s) at S = {s}"
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn dual_of(l: &FinLattice) -> PriestleyDual {
        PriestleyDual::of(l, &Bounds::default()).unwrap()
    }

    #[test]
    fn diamond_dual_frozen() {
        let l = corpus::diamond_lattice();
        let d = dual_of(&l);
        // Two prime filters ↑a and ↑b, incomparable.
        assert_eq!(
            d.points(),
            &[
                [1, 3].into_iter().collect::<ElemSet>(),
                [2, 3].into_iter().collect::<ElemSet>(),
            ]
        );
        assert!(!d.order().leq(0, 1) && !d.order().leq(1, 0));
        assert_eq!(d.sigma(0), ElemSet::EMPTY);
        assert_eq!(d.sigma(1), ElemSet::singleton(0));
        assert_eq!(d.sigma(2), ElemSet::singleton(1));
        assert_eq!(d.sigma(3), ElemSet::full(2));
        assert_eq!(d.y_set(), ElemSet::full(2));
        assert_eq!(d.zeta(1), ElemSet::singleton(0));
    }

    #[test]
    fn three_chain_dual_is_two_chain() {
        let l = corpus::chain_lattice(3);
        let d = dual_of(&l);
        assert_eq!(d.point_count(), 2);
        // points[0] = ↑2 = {2}, points[1] = ↑1 = {1,2}; inclusion makes 0 ≤ 1.
        assert!(d.order().leq(0, 1));
        assert!(!d.order().leq(1, 0));
    }

    #[test]
    fn one_element_lattice_has_empty_dual() {
        let l = corpus::chain_lattice(1);
        let d = dual_of(&l);
        assert_eq!(d.point_count(), 0);
        let rep = d.reconstruct(&Bounds::default()).unwrap();
        assert_eq!(rep.upsets, vec![ElemSet::EMPTY]);
        assert_eq!(rep.iso, vec![0]);
    }

    #[test]
    fn non_distributive_input_is_rejected_with_witness() {
        let l = corpus::m3_lattice();
        match PriestleyDual::of(&l, &Bounds::default()) {
            Err(Error::NotDistributive { a: 1, b: 2, c: 3 }) => {}
            other => panic!("expected the frozen counterexample, got {other:?}"),
        }
    }

    #[test]
    fn reconstruction_on_unit_corpus() {
        let bounds = Bounds::default();
        for (name, l) in corpus::unit_test_lattices() {
            let d = dual_of(&l);
            let rep = d.reconstruct(&bounds).unwrap();
            assert_eq!(rep.upsets.len(), l.n(), "{name}");
        }
    }

    #[test]
    fn point_count_equals_join_irreducible_count() {
        // Independent cardinality oracle for the dual.
        for (name, l) in corpus::unit_test_lattices() {
            let d = dual_of(&l);
            assert_eq!(
                d.point_count(),
                l.join_irreducibles().len(),
                "{name}"
            );
        }
    }

    #[test]
    fn filter_extent_frozen_examples() {
        let l = corpus::diamond_lattice();
        let d = dual_of(&l);
        // ↑a maps to the singleton of the ↑a point.
        let f = l.principal_filter(1);
        assert_eq!(d.upset_of_filter(f), ElemSet::singleton(0));
        // The empty closed upset maps back to the improper filter.
        let improper = d.filter_of_upset(ElemSet::EMPTY).unwrap();
        assert_eq!(improper.members(), ElemSet::full(4));
        // The full point set maps to {top}.
        let top_only = d.filter_of_upset(ElemSet::full(2)).unwrap();
        assert_eq!(top_only.members(), ElemSet::singleton(3));
    }

    #[test]
    fn correspondence_counts_frozen() {
        let l = corpus::diamond_lattice();
        let d = dual_of(&l);
        let rep = d.filter_correspondence(&Bounds::default()).unwrap();
        assert_eq!(rep.filters.len(), 4);
        assert_eq!(rep.closed_upsets.len(), 4);
    }

    #[test]
    fn scott_conditions_agree_on_diamond() {
        let bounds = Bounds::default();
        let l = corpus::diamond_lattice();
        let d = dual_of(&l);
        for f in l.filters(&bounds).unwrap() {
            let c = d.scott_conditions(f, &bounds).unwrap();
            assert!(c.agree());
            assert!(c.literal);
        }
    }

    #[test]
    fn hofmann_mislove_counts_on_diamond() {
        let l = corpus::diamond_lattice();
        let d = dual_of(&l);
        let rep = d.hofmann_mislove(&Bounds::default()).unwrap();
        assert_eq!(rep.scott_open_filters.len(), 4);
        assert_eq!(rep.s_upsets.len(), 4);
        assert_eq!(rep.ksat_y.len(), 4);
    }

    #[test]
    fn complete_primeness_rows_frozen_on_diamond() {
        let l = corpus::diamond_lattice();
        let d = dual_of(&l);
        let rows = d.complete_primeness_report(&Bounds::default()).unwrap();
        assert_eq!(rows.len(), 4);
        // {top} has two minimal points and is not completely prime.
        let top_row = rows
            .iter()
            .find(|r| r.filter.members() == ElemSet::singleton(3))
            .unwrap();
        assert!(!top_row.completely_prime);
        assert_eq!(top_row.min_points.len(), 2);
        // ↑a has the single minimal point ↑a.
        let a_row = rows
            .iter()
            .find(|r| r.filter.members() == [1, 3].into_iter().collect())
            .unwrap();
        assert!(a_row.completely_prime);
        assert_eq!(a_row.min_points, ElemSet::singleton(0));
    }

    #[test]
    fn validators_and_spatiality_on_unit_corpus() {
        let bounds = Bounds::default();
        for (name, l) in corpus::unit_test_lattices() {
            let d = dual_of(&l);
            assert!(d.structural_validators(&bounds).unwrap().all_hold(), "{name}");
            assert!(d.spatial_via_density().unwrap(), "{name}");
            d.sigma_preserves_joins(&bounds).unwrap();
        }
    }
}
