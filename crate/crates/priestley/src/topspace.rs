//! Finite topological spaces: specialization order, sobriety, compact
//! saturated subsets, and the correspondence between Scott-open filters of
//! the open-set frame and compact saturated sets.
//!
//! A finite space is determined by its specialization order — the opens of a
//! finite T0 space are exactly some family of upsets, and the Alexandrov
//! topology takes all of them. Sobriety for finite spaces coincides with T0;
//! both are checked literally, not by that shortcut. Compactness of a subset
//! is likewise checked against the cover definition, reduced to irredundant
//! (antichain) covers: dropping a cover member contained in another keeps
//! the union, so a finite subcover for every antichain cover yields one for
//! every cover.

use crate::error::{Error, Result};
use crate::lattice::{FinLattice, Filter};
use crate::poset::FinPoset;
use crate::set::ElemSet;
use crate::Bounds;

#[derive(Clone, Debug)]
pub struct FiniteTopSpace {
    n: usize,
    /// Ascending bitmask order, deduplicated; always contains ∅ and the
    /// full set.
    opens: Vec<ElemSet>,
    labels: Vec<String>,
}

/// Scott-open filters of the open-set frame paired with the compact
/// saturated sets they determine. `filter_to_ksat[i]` indexes the compact
/// saturated set ⋂ open_filters[i].
#[derive(Clone, Debug)]
pub struct SpaceHofmannMislove {
    pub open_filters: Vec<Filter>,
    pub compact_saturated: Vec<ElemSet>,
    pub filter_to_ksat: Vec<usize>,
}

/// Does a cover admit a finite subcover of `k`? `members` lists the opens
/// the cover actually provides, while `stated_union` is the union the cover
/// claims; keeping the two apart lets a finitely presented stand-in for an
/// infinite ascending cover state a limit union its members never reach.
pub fn cover_admits_finite_subcover(
    members: &[ElemSet],
    stated_union: ElemSet,
    k: ElemSet,
) -> bool {
    debug_assert!(
        members
            .iter()
            .fold(ElemSet::EMPTY, |acc, &u| acc.union(u))
            .is_subset(stated_union),
        "stated union must dominate the members"
    );
    if !k.is_subset(stated_union) {
        // Not a cover of k at all; nothing to refute.
        return true;
    }
    let reachable = members
        .iter()
        .fold(ElemSet::EMPTY, |acc, &u| acc.union(u));
    // `members` is finite, so a finite subcover exists exactly when the
    // members themselves suffice.
    k.is_subset(reachable)
}

impl FiniteTopSpace {
    /// Validate a family of opens as a topology on `n` points.
    pub fn build(n: usize, opens: &[ElemSet], labels: Vec<String>) -> Result<FiniteTopSpace> {
        if n > ElemSet::CAPACITY {
            return Err(Error::BoundExceeded {
                size: n,
                bound: ElemSet::CAPACITY,
            });
        }
        if labels.len() != n {
            return Err(Error::NotATopology {
                reason: format!("{} labels for {} points", labels.len(), n),
            });
        }
        let universe = ElemSet::full(n);
        let mut family: Vec<ElemSet> = opens.to_vec();
        family.sort();
        family.dedup();
        for &u in &family {
            if !u.is_subset(universe) {
                return Err(Error::NotATopology {
                    reason: format!("open {u} leaves the {n}-point universe"),
                });
            }
        }
        if family.binary_search(&ElemSet::EMPTY).is_err() {
            return Err(Error::NotATopology {
                reason: "the empty set is missing".into(),
            });
        }
        if family.binary_search(&universe).is_err() {
            return Err(Error::NotATopology {
                reason: "the full point set is missing".into(),
            });
        }
        for &u in &family {
            for &v in &family {
                if family.binary_search(&u.union(v)).is_err() {
                    return Err(Error::NotATopology {
                        reason: format!("union {} ∪ {} is not open", u, v),
                    });
                }
                if family.binary_search(&u.inter(v)).is_err() {
                    return Err(Error::NotATopology {
                        reason: format!("intersection {} ∩ {} is not open", u, v),
                    });
                }
            }
        }
        Ok(FiniteTopSpace {
            n,
            opens: family,
            labels,
        })
    }

    /// The Alexandrov topology of a poset: all upsets are open.
    pub fn alexandrov(p: &FinPoset, bounds: &Bounds) -> Result<FiniteTopSpace> {
        let opens = p.upsets(bounds)?;
        FiniteTopSpace::build(p.n(), &opens, p.labels().to_vec())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn opens(&self) -> &[ElemSet] {
        &self.opens
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_open(&self, s: ElemSet) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: ElemSet) -> bool {
        self.is_open(s.complement(self.n))
    }

    /// Closed sets, ascending bitmask order.
    pub fn closed_sets(&self) -> Vec<ElemSet> {
        let mut out: Vec<ElemSet> = self
            .opens
            .iter()
            .map(|&u| u.complement(self.n))
            .collect();
        out.sort();
        out
    }

    /// The smallest closed set containing `s`.
    pub fn closure(&self, s: ElemSet) -> ElemSet {
        self.closed_sets()
            .into_iter()
            .filter(|&c| s.is_subset(c))
            .fold(ElemSet::full(self.n), |acc, c| acc.inter(c))
    }

    /// The largest open set inside `s`.
    pub fn interior(&self, s: ElemSet) -> ElemSet {
        self.opens
            .iter()
            .filter(|&&u| u.is_subset(s))
            .fold(ElemSet::EMPTY, |acc, &u| acc.union(u))
    }

    /// The saturation of `s`: the intersection of the opens containing it.
    pub fn saturation(&self, s: ElemSet) -> ElemSet {
        self.opens
            .iter()
            .filter(|&&u| s.is_subset(u))
            .fold(ElemSet::full(self.n), |acc, &u| acc.inter(u))
    }

    /// The specialization order: x ≤ y when every open containing x
    /// contains y, so opens are upsets. Fails with the offending pair when
    /// the space is not T0.
    pub fn specialization(&self) -> Result<FinPoset> {
        if self.n == 0 {
            return Ok(FinPoset::empty());
        }
        let leq = |x: usize, y: usize| {
            self.opens
                .iter()
                .all(|u| !u.contains(x) || u.contains(y))
        };
        for x in 0..self.n {
            for y in (x + 1)..self.n {
                if leq(x, y) && leq(y, x) {
                    return Err(Error::NotT0 { x, y });
                }
            }
        }
        let rows: Vec<ElemSet> = (0..self.n)
            .map(|x| (0..self.n).filter(|&y| leq(x, y)).collect())
            .collect();
        FinPoset::from_leq(self.n, rows, self.labels.clone())
    }

    /// Is every irreducible closed set the closure of exactly one point?
    /// Checked against the literal definition: a nonempty closed set is
    /// irreducible when it cannot be split across two closed sets without
    /// landing inside one of them.
    pub fn is_sober(&self) -> bool {
        let closed = self.closed_sets();
        for &c in &closed {
            if c.is_empty() {
                continue;
            }
            let irreducible = closed.iter().all(|&a| {
                closed
                    .iter()
                    .all(|&b| !c.is_subset(a.union(b)) || c.is_subset(a) || c.is_subset(b))
            });
            if irreducible {
                let generic_points = (0..self.n)
                    .filter(|&x| self.closure(ElemSet::singleton(x)) == c)
                    .count();
                if generic_points != 1 {
                    return false;
                }
            }
        }
        true
    }

    /// Is the space T0? (Every pair of points is separated by some open.)
    pub fn is_t0(&self) -> bool {
        self.specialization().is_ok()
    }

    /// All irredundant open covers: the antichains of the open family under
    /// inclusion, enumerated recursively so the count of antichains, not
    /// 2^#opens, drives the cost.
    fn antichain_open_families(&self) -> Vec<Vec<usize>> {
        fn extend(
            opens: &[ElemSet],
            start: usize,
            current: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            out.push(current.clone());
            for j in start..opens.len() {
                let incomparable = current.iter().all(|&i| {
                    !opens[i].is_subset(opens[j]) && !opens[j].is_subset(opens[i])
                });
                if incomparable {
                    current.push(j);
                    extend(opens, j + 1, current, out);
                    current.pop();
                }
            }
        }
        let mut out = Vec::new();
        extend(&self.opens, 0, &mut Vec::new(), &mut out);
        out
    }

    /// Does every open cover of `k` admit a finite subcover? Quantifies
    /// over the irredundant covers.
    pub fn is_compact_subset(&self, k: ElemSet) -> bool {
        for family in self.antichain_open_families() {
            let members: Vec<ElemSet> = family.iter().map(|&i| self.opens[i]).collect();
            let union = members
                .iter()
                .fold(ElemSet::EMPTY, |acc, &u| acc.union(u));
            if k.is_subset(union) && !cover_admits_finite_subcover(&members, union, k) {
                return false;
            }
        }
        true
    }

    /// Compact saturated subsets, ascending bitmask order. Saturation and
    /// compactness are both checked by their definitions.
    pub fn compact_saturated(&self, bounds: &Bounds) -> Result<Vec<ElemSet>> {
        if self.n > bounds.enumeration {
            return Err(Error::BoundExceeded {
                size: self.n,
                bound: bounds.enumeration,
            });
        }
        let families = self.antichain_open_families();
        let mut out = Vec::new();
        for bits in 0..(1u128 << self.n) {
            let k = ElemSet::from_bits(bits as u64);
            if self.saturation(k) != k {
                continue;
            }
            let compact = families.iter().all(|family| {
                let members: Vec<ElemSet> = family.iter().map(|&i| self.opens[i]).collect();
                let union = members
                    .iter()
                    .fold(ElemSet::EMPTY, |acc, &u| acc.union(u));
                !k.is_subset(union) || cover_admits_finite_subcover(&members, union, k)
            });
            if compact {
                out.push(k);
            }
        }
        Ok(out)
    }

    /// The frame of opens as a lattice under inclusion, with the open set
    /// each lattice element denotes.
    pub fn open_frame(&self) -> Result<(FinLattice, Vec<ElemSet>)> {
        let frame = FinLattice::from_inclusion_order(&self.opens, |s| self.render_points(s))?;
        Ok((frame, self.opens.clone()))
    }

    fn render_points(&self, s: ElemSet) -> String {
        let names: Vec<&str> = s.iter().map(|i| self.labels[i].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Whether a filter of a finite frame is Scott-open: literally checked
    /// within the exhaustive bound; beyond it each subset is its own finite
    /// witness, so every filter qualifies.
    fn frame_filter_scott_open(frame: &FinLattice, f: Filter, bounds: &Bounds) -> Result<bool> {
        if frame.n() <= bounds.scott {
            frame.is_scott_open_exhaustive(f, bounds)
        } else {
            Ok(true)
        }
    }

    /// The bijection between Scott-open filters of the open-set frame and
    /// compact saturated sets: F ↦ ⋂F and K ↦ {U : K ⊆ U}, verified to be
    /// mutually inverse and inclusion-reversing. Requires sobriety.
    pub fn hofmann_mislove(&self, bounds: &Bounds) -> Result<SpaceHofmannMislove> {
        if !self.is_sober() {
            return Err(Error::NotSober);
        }
        let (frame, denote) = self.open_frame()?;
        let mut open_filters = Vec::new();
        for f in frame.filters(bounds)? {
            if Self::frame_filter_scott_open(&frame, f, bounds)? {
                open_filters.push(f);
            }
        }
        let compact_saturated = self.compact_saturated(bounds)?;
        if open_filters.len() != compact_saturated.len() {
            return Err(Error::IsoFailure(format!(
                "{} Scott-open filters vs {} compact saturated sets",
                open_filters.len(),
                compact_saturated.len()
            )));
        }
        let mut filter_to_ksat = Vec::with_capacity(open_filters.len());
        for &f in &open_filters {
            let k = f
                .members()
                .iter()
                .fold(ElemSet::full(self.n), |acc, u| acc.inter(denote[u]));
            let idx = compact_saturated.binary_search(&k).map_err(|_| {
                Error::IsoFailure(format!("⋂F = {k} is not compact saturated"))
            })?;
            // Round trip back to the filter.
            let back: ElemSet = (0..frame.n())
                .filter(|&u| k.is_subset(denote[u]))
                .collect();
            if back != f.members() {
                return Err(Error::IsoFailure(format!(
                    "the opens containing ⋂F do not recover F at {k}"
                )));
            }
            filter_to_ksat.push(idx);
        }
        for &k in &compact_saturated {
            let members: ElemSet = (0..frame.n())
                .filter(|&u| k.is_subset(denote[u]))
                .collect();
            let f = frame.filter_from(members).map_err(|e| {
                Error::IsoFailure(format!("opens containing {k} fail to filter: {e}"))
            })?;
            if !Self::frame_filter_scott_open(&frame, f, bounds)? {
                return Err(Error::IsoFailure(format!(
                    "opens containing {k} are not Scott-open"
                )));
            }
            let meet = f
                .members()
                .iter()
                .fold(ElemSet::full(self.n), |acc, u| acc.inter(denote[u]));
            if meet != k {
                return Err(Error::IsoFailure(format!(
                    "⋂ of the opens containing {k} shrank to {meet}"
                )));
            }
        }
        // Inclusion-reversing in both directions.
        for (i, &f) in open_filters.iter().enumerate() {
            for (j, &g) in open_filters.iter().enumerate() {
                let (kf, kg) = (
                    compact_saturated[filter_to_ksat[i]],
                    compact_saturated[filter_to_ksat[j]],
                );
                if f.members().is_subset(g.members()) != kg.is_subset(kf) {
                    return Err(Error::IsoFailure(
                        "the correspondence fails to reverse inclusion".into(),
                    ));
                }
            }
        }
        Ok(SpaceHofmannMislove {
            open_filters,
            compact_saturated,
            filter_to_ksat,
        })
    }

    /// Compare this space with the points of its own open-set frame: the
    /// completely prime filters under the frame's extent topology. For a
    /// sober T0 space the neighbourhood map x ↦ {U : x ∈ U} must be a
    /// bijection matching open sets on both sides; the returned vector maps
    /// each point to its filter index.
    pub fn compare_with_frame_points(&self, bounds: &Bounds) -> Result<Vec<usize>> {
        let (frame, denote) = self.open_frame()?;
        let (pt_space, point_filters) = frame_points(&frame, bounds)?;
        if pt_space.n() != self.n {
            return Err(Error::IsoFailure(format!(
                "{} frame points for {} space points",
                pt_space.n(),
                self.n
            )));
        }
        let mut assignment = Vec::with_capacity(self.n);
        for x in 0..self.n {
            let nbhd: ElemSet = (0..frame.n()).filter(|&u| denote[u].contains(x)).collect();
            let idx = point_filters
                .iter()
                .position(|&f| f.members() == nbhd)
                .ok_or_else(|| {
                    Error::IsoFailure(format!(
                        "the neighbourhood filter of {} is not completely prime",
                        self.labels[x]
                    ))
                })?;
            assignment.push(idx);
        }
        let mut seen = ElemSet::EMPTY;
        for &i in &assignment {
            if seen.contains(i) {
                return Err(Error::IsoFailure(
                    "two points share a neighbourhood filter".into(),
                ));
            }
            seen = seen.with(i);
        }
        // Opens correspond: the image of each open of this space is open in
        // the point space, and conversely.
        for (u, &s) in denote.iter().enumerate() {
            let image: ElemSet = s.iter().map(|x| assignment[x]).collect();
            if !pt_space.is_open(image) {
                return Err(Error::IsoFailure(format!(
                    "image of open #{u} is not open among the frame points"
                )));
            }
        }
        for &v in pt_space.opens() {
            let preimage: ElemSet = (0..self.n).filter(|&x| v.contains(assignment[x])).collect();
            if !self.is_open(preimage) {
                return Err(Error::IsoFailure(
                    "an open of the frame points pulls back to a non-open".into(),
                ));
            }
        }
        Ok(assignment)
    }
}

/// The space of points of a finite lattice presented as a frame: points are
/// the completely prime filters, and each lattice element opens onto the set
/// of points containing it.
pub fn frame_points(l: &FinLattice, bounds: &Bounds) -> Result<(FiniteTopSpace, Vec<Filter>)> {
    let mut point_filters: Vec<Filter> = Vec::new();
    for f in l.filters(bounds)? {
        if l.is_completely_prime(f) {
            point_filters.push(f);
        }
    }
    let n = point_filters.len();
    let mut opens: Vec<ElemSet> = (0..l.n())
        .map(|a| {
            point_filters
                .iter()
                .enumerate()
                .filter(|&(_, f)| f.members().contains(a))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    opens.sort();
    opens.dedup();
    let labels = point_filters
        .iter()
        .map(|f| format!("pt{}", f.members()))
        .collect();
    let space = FiniteTopSpace::build(n, &opens, labels)?;
    Ok((space, point_filters))
}

/// The spectral companion of a Priestley dual: same points, opens relaxed
/// from clopen upsets to all upsets of the dual order.
pub fn spectral_space_of_dual(
    d: &crate::duality::PriestleyDual,
    bounds: &Bounds,
) -> Result<FiniteTopSpace> {
    let opens = d.order().upsets(bounds)?;
    FiniteTopSpace::build(d.point_count(), &opens, d.order().labels().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::duality::PriestleyDual;

    fn two_chain_space() -> FiniteTopSpace {
        // Points 0 ≤ 1; opens are the upsets.
        let opens = [
            ElemSet::EMPTY,
            ElemSet::singleton(1),
            ElemSet::full(2),
        ];
        FiniteTopSpace::build(2, &opens, vec!["x".into(), "y".into()]).unwrap()
    }

    #[test]
    fn rejects_non_topologies() {
        let no_empty = [ElemSet::full(2)];
        assert!(matches!(
            FiniteTopSpace::build(2, &no_empty, vec!["a".into(), "b".into()]),
            Err(Error::NotATopology { .. })
        ));
        // {0} and {1} without their union.
        let no_union = [
            ElemSet::EMPTY,
            ElemSet::singleton(0),
            ElemSet::singleton(1),
        ];
        assert!(matches!(
            FiniteTopSpace::build(2, &no_union, vec!["a".into(), "b".into()]),
            Err(Error::NotATopology { .. })
        ));
    }

    #[test]
    fn specialization_of_two_chain() {
        let s = two_chain_space();
        let p = s.specialization().unwrap();
        assert!(p.leq(0, 1));
        assert!(!p.leq(1, 0));
    }

    #[test]
    fn indiscrete_pair_is_neither_t0_nor_sober() {
        let opens = [ElemSet::EMPTY, ElemSet::full(2)];
        let s = FiniteTopSpace::build(2, &opens, vec!["a".into(), "b".into()]).unwrap();
        assert!(matches!(s.specialization(), Err(Error::NotT0 { x: 0, y: 1 })));
        assert!(!s.is_sober());
        assert!(matches!(
            s.hofmann_mislove(&Bounds::default()),
            Err(Error::NotSober)
        ));
    }

    #[test]
    fn sober_iff_t0_on_small_spaces() {
        // Every topology on up to 3 points, built by brute force.
        let n = 3;
        let subsets: Vec<ElemSet> = (0..(1u64 << n)).map(ElemSet::from_bits).collect();
        let mut checked = 0usize;
        for bits in 0..(1u64 << (subsets.len() as u32)) {
            let family: Vec<ElemSet> = subsets
                .iter()
                .enumerate()
                .filter(|&(i, _)| bits & (1 << i) != 0)
                .map(|(_, &s)| s)
                .collect();
            let labels = (0..n).map(|i| format!("p{i}")).collect();
            if let Ok(space) = FiniteTopSpace::build(n, &family, labels) {
                assert_eq!(space.is_sober(), space.is_t0());
                checked += 1;
            }
        }
        // 29 topologies on 3 labelled points.
        assert_eq!(checked, 29);
    }

    #[test]
    fn closure_and_interior_frozen() {
        let s = two_chain_space();
        assert_eq!(s.closure(ElemSet::singleton(1)), ElemSet::full(2));
        assert_eq!(s.closure(ElemSet::singleton(0)), ElemSet::singleton(0));
        assert_eq!(s.interior(ElemSet::singleton(1)), ElemSet::singleton(1));
        assert_eq!(s.interior(ElemSet::singleton(0)), ElemSet::EMPTY);
    }

    #[test]
    fn compact_saturated_of_alexandrov_space_are_the_upsets() {
        let bounds = Bounds::default();
        let p = corpus::v_poset();
        let s = FiniteTopSpace::alexandrov(&p, &bounds).unwrap();
        assert_eq!(
            s.compact_saturated(&bounds).unwrap(),
            p.upsets(&bounds).unwrap()
        );
    }

    #[test]
    fn finite_subcover_helper_refutes_a_stated_limit() {
        // Two members reach {0,1}; the stated union also claims 2, so a set
        // containing 2 is covered in name only.
        let members = [ElemSet::singleton(0), ElemSet::singleton(1)];
        let stated = ElemSet::full(3);
        assert!(cover_admits_finite_subcover(
            &members,
            stated,
            ElemSet::full(2)
        ));
        assert!(!cover_admits_finite_subcover(&members, stated, stated));
    }

    #[test]
    fn hofmann_mislove_on_two_chain_space() {
        let s = two_chain_space();
        let rep = s.hofmann_mislove(&Bounds::default()).unwrap();
        // Three opens form a 3-chain frame; its three filters pair with the
        // three saturated sets ∅, {1}, {0,1} (the improper filter with ∅).
        assert_eq!(rep.open_filters.len(), 3);
        assert_eq!(
            rep.compact_saturated,
            vec![ElemSet::EMPTY, ElemSet::singleton(1), ElemSet::full(2)]
        );
    }

    #[test]
    fn frame_points_recover_sober_spaces() {
        let bounds = Bounds::default();
        for p in [
            corpus::chain_poset(1),
            corpus::chain_poset(3),
            corpus::v_poset(),
            corpus::antichain_poset(3),
        ] {
            let space = FiniteTopSpace::alexandrov(&p, &bounds).unwrap();
            space.compare_with_frame_points(&bounds).unwrap();
        }
    }

    #[test]
    fn spectral_space_matches_dual_upsets() {
        let bounds = Bounds::default();
        for (name, l) in corpus::unit_test_lattices() {
            let d = PriestleyDual::of(&l, &bounds).unwrap();
            let sp = spectral_space_of_dual(&d, &bounds).unwrap();
            assert_eq!(
                sp.compact_saturated(&bounds).unwrap(),
                d.closed_upsets(&bounds).unwrap(),
                "{name}"
            );
            // Specialization recovers the dual order.
            assert!(sp.specialization().unwrap().order_eq(d.order()), "{name}");
        }
    }

    #[test]
    fn empty_space_is_sober_with_singleton_frame() {
        let s = FiniteTopSpace::build(0, &[ElemSet::EMPTY], vec![]).unwrap();
        assert!(s.is_sober());
        let rep = s.hofmann_mislove(&Bounds::default()).unwrap();
        assert_eq!(rep.open_filters.len(), 1);
        assert_eq!(rep.compact_saturated, vec![ElemSet::EMPTY]);
    }
}
