//! Finite posets with explicit order relation and subset enumeration.
//!
//! A [`FinPoset`] stores the full (reflexive, transitive, antisymmetric)
//! relation as per-element up-sets and down-sets, so order queries are a
//! single bit test. Construction is from a cover relation (Hasse edges);
//! the transitive closure is computed and cycles are rejected.

use crate::error::{Error, Result};
use crate::set::ElemSet;
use crate::Bounds;

/// Direction for order-theoretic closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

/// Which extremal elements of a subset to pick out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extreme {
    Min,
    Max,
}

#[derive(Clone, Debug)]
pub struct FinPoset {
    n: usize,
    /// `up[i]` = { j : i ≤ j }. Includes `i` itself.
    up: Vec<ElemSet>,
    /// `down[i]` = { j : j ≤ i }. Includes `i` itself.
    down: Vec<ElemSet>,
    labels: Vec<String>,
}

impl FinPoset {
    /// Build from a cover relation. `covers` lists pairs `(lo, hi)` meaning `lo < hi`;
    /// the stored order is the reflexive-transitive closure. Rejects n = 0, indices
    /// out of range, and cycles.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<FinPoset> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        FinPoset::from_covers_labeled(n, covers, labels)
    }

    /// Same as [`FinPoset::from_covers`] with caller-supplied display labels.
    pub fn from_covers_labeled(
        n: usize,
        covers: &[(usize, usize)],
        labels: Vec<String>,
    ) -> Result<FinPoset> {
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        if n > ElemSet::CAPACITY {
            return Err(Error::BoundExceeded {
                size: n,
                bound: ElemSet::CAPACITY,
            });
        }
        check_labels(n, &labels)?;
        let mut succ = vec![ElemSet::EMPTY; n];
        for &(lo, hi) in covers {
            for idx in [lo, hi] {
                if idx >= n {
                    return Err(Error::IndexOutOfRange { index: idx, size: n });
                }
            }
            succ[lo] = succ[lo].with(hi);
        }
        // Reachability over the cover digraph, one BFS per source.
        let mut up = vec![ElemSet::EMPTY; n];
        for (i, row) in up.iter_mut().enumerate() {
            let mut reach = ElemSet::singleton(i);
            let mut frontier = ElemSet::singleton(i);
            while !frontier.is_empty() {
                let mut next = ElemSet::EMPTY;
                for j in frontier.iter() {
                    next = next.union(succ[j].diff(reach));
                }
                reach = reach.union(next);
                frontier = next;
            }
            *row = reach;
        }
        // A cycle shows up as mutual reachability of two distinct elements,
        // or as a self-loop in the cover list.
        for i in 0..n {
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    return Err(Error::CycleDetected(i));
                }
            }
            if covers.contains(&(i, i)) {
                return Err(Error::CycleDetected(i));
            }
        }
        Ok(FinPoset::from_up_sets(n, up, labels))
    }

    /// Build directly from the full relation rows `up[i] = {j : i ≤ j}`.
    /// Validates reflexivity, antisymmetry and transitivity.
    pub fn from_leq(n: usize, up: Vec<ElemSet>, labels: Vec<String>) -> Result<FinPoset> {
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        if n > ElemSet::CAPACITY {
            return Err(Error::BoundExceeded {
                size: n,
                bound: ElemSet::CAPACITY,
            });
        }
        check_labels(n, &labels)?;
        assert_eq!(up.len(), n);
        let full = ElemSet::full(n);
        for (i, &row) in up.iter().enumerate() {
            if !row.is_subset(full) || !row.contains(i) {
                return Err(Error::IndexOutOfRange { index: i, size: n });
            }
        }
        for i in 0..n {
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    return Err(Error::CycleDetected(i));
                }
                if !up[j].is_subset(up[i]) {
                    // i ≤ j but something above j is not above i.
                    return Err(Error::IsoFailure(format!(
                        "relation is not transitive at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(FinPoset::from_up_sets(n, up, labels))
    }

    /// The poset with no elements. Not constructible through [`FinPoset::from_covers`];
    /// it exists to host the dual space of the one-element lattice.
    pub fn empty() -> FinPoset {
        FinPoset {
            n: 0,
            up: Vec::new(),
            down: Vec::new(),
            labels: Vec::new(),
        }
    }

    fn from_up_sets(n: usize, up: Vec<ElemSet>, labels: Vec<String>) -> FinPoset {
        let mut down = vec![ElemSet::EMPTY; n];
        for (i, &row) in up.iter().enumerate() {
            for j in row.iter() {
                down[j] = down[j].with(i);
            }
        }
        FinPoset { n, up, down, labels }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Is `i ≤ j`?
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    /// `{ j : i ≤ j }`.
    pub fn up_set(&self, i: usize) -> ElemSet {
        self.up[i]
    }

    /// `{ j : j ≤ i }`.
    pub fn down_set(&self, i: usize) -> ElemSet {
        self.down[i]
    }

    pub fn universe(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    fn check_subset(&self, s: ElemSet) -> Result<()> {
        if s.is_subset(self.universe()) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: s.iter().find(|&i| i >= self.n).unwrap_or(self.n),
                size: self.n,
            })
        }
    }

    /// Order-theoretic closure of `s`: the least upset (or downset) containing it.
    pub fn closure(&self, s: ElemSet, dir: Direction) -> Result<ElemSet> {
        self.check_subset(s)?;
        let rows = match dir {
            Direction::Up => &self.up,
            Direction::Down => &self.down,
        };
        let mut out = ElemSet::EMPTY;
        for i in s.iter() {
            out = out.union(rows[i]);
        }
        Ok(out)
    }

    /// Minimal or maximal elements of `s` (with respect to the ambient order).
    /// The result is always an antichain, empty iff `s` is.
    pub fn extremes(&self, s: ElemSet, which: Extreme) -> ElemSet {
        let s = s.inter(self.universe());
        let mut out = ElemSet::EMPTY;
        for i in s.iter() {
            let dominators = match which {
                Extreme::Min => self.down[i],
                Extreme::Max => self.up[i],
            };
            // i is extremal in s iff nothing else of s lies strictly on that side.
            if dominators.inter(s).without(i).is_empty() {
                out = out.with(i);
            }
        }
        out
    }

    pub fn minimal_elements(&self) -> ElemSet {
        self.extremes(self.universe(), Extreme::Min)
    }

    pub fn maximal_elements(&self) -> ElemSet {
        self.extremes(self.universe(), Extreme::Max)
    }

    pub fn is_upset(&self, s: ElemSet) -> bool {
        s.iter().all(|i| self.up[i].is_subset(s))
    }

    pub fn is_downset(&self, s: ElemSet) -> bool {
        s.iter().all(|i| self.down[i].is_subset(s))
    }

    pub fn is_antichain(&self, s: ElemSet) -> bool {
        s.iter()
            .all(|i| self.up[i].inter(s).without(i).is_empty())
    }

    /// All upsets, as bitmasks in ascending numeric order. Refuses to scan
    /// more than `2^bounds.enumeration` subsets.
    pub fn upsets(&self, bounds: &Bounds) -> Result<Vec<ElemSet>> {
        self.enumerate(bounds, |p, s| p.is_upset(s))
    }

    /// All downsets, ascending bitmask order, same bound as [`FinPoset::upsets`].
    pub fn downsets(&self, bounds: &Bounds) -> Result<Vec<ElemSet>> {
        self.enumerate(bounds, |p, s| p.is_downset(s))
    }

    fn enumerate(
        &self,
        bounds: &Bounds,
        keep: impl Fn(&FinPoset, ElemSet) -> bool,
    ) -> Result<Vec<ElemSet>> {
        if self.n > bounds.enumeration {
            return Err(Error::BoundExceeded {
                size: self.n,
                bound: bounds.enumeration,
            });
        }
        let mut out = Vec::new();
        // n = 0 has exactly one subset, the empty one, and it qualifies.
        for bits in 0..(1u128 << self.n) {
            let s = ElemSet::from_bits(bits as u64);
            if keep(self, s) {
                out.push(s);
            }
        }
        Ok(out)
    }

    /// Cover pairs `(lo, hi)` of the order: the transitive reduction, suitable
    /// for drawing Hasse diagrams. Pairs are sorted.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for lo in 0..self.n {
            for hi in self.up[lo].without(lo).iter() {
                let strictly_between = self.up[lo]
                    .inter(self.down[hi])
                    .without(lo)
                    .without(hi);
                if strictly_between.is_empty() {
                    out.push((lo, hi));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Structural equality of the order relations, ignoring labels.
    pub fn order_eq(&self, other: &FinPoset) -> bool {
        self.n == other.n && self.up == other.up
    }

    /// The opposite poset (order reversed), same labels.
    pub fn opposite(&self) -> FinPoset {
        FinPoset {
            n: self.n,
            up: self.down.clone(),
            down: self.up.clone(),
            labels: self.labels.clone(),
        }
    }
}

fn check_labels(n: usize, labels: &[String]) -> Result<()> {
    assert_eq!(labels.len(), n, "label count must match element count");
    for (i, a) in labels.iter().enumerate() {
        if labels[..i].contains(a) {
            return Err(Error::DuplicateLabel(a.clone()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: compute the closure by scanning the relation directly.
    fn closure_oracle(p: &FinPoset, s: ElemSet, dir: Direction) -> ElemSet {
        (0..p.n())
            .filter(|&j| {
                s.iter().any(|i| match dir {
                    Direction::Up => p.leq(i, j),
                    Direction::Down => p.leq(j, i),
                })
            })
            .collect()
    }

    fn v_poset() -> FinPoset {
        // 0 below both 1 and 2; 1 and 2 incomparable.
        FinPoset::from_covers(3, &[(0, 1), (0, 2)]).unwrap()
    }

    #[test]
    fn build_v_poset() {
        let p = v_poset();
        assert!(p.leq(0, 1) && p.leq(0, 2));
        assert!(!p.leq(1, 2) && !p.leq(2, 1));
        assert!(p.leq(1, 1));
        assert_eq!(p.cover_pairs(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn transitive_closure_of_chain() {
        let p = FinPoset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p.cover_pairs(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(FinPoset::from_covers(0, &[]), Err(Error::EmptyPoset)));
        assert!(matches!(
            FinPoset::from_covers(2, &[(0, 2)]),
            Err(Error::IndexOutOfRange { index: 2, size: 2 })
        ));
        assert!(matches!(
            FinPoset::from_covers(2, &[(0, 1), (1, 0)]),
            Err(Error::CycleDetected(_))
        ));
        assert!(matches!(
            FinPoset::from_covers(1, &[(0, 0)]),
            Err(Error::CycleDetected(0))
        ));
        assert!(matches!(
            FinPoset::from_covers(3, &[(0, 1), (1, 2), (2, 0)]),
            Err(Error::CycleDetected(_))
        ));
        assert!(matches!(
            FinPoset::from_covers_labeled(2, &[], vec!["x".into(), "x".into()]),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn closure_matches_oracle_and_frozen_example() {
        let p = v_poset();
        // Downward closure of {1} in the V poset is {0, 1}.
        let got = p.closure(ElemSet::singleton(1), Direction::Down).unwrap();
        assert_eq!(got, [0, 1].into_iter().collect());
        for bits in 0..8u64 {
            let s = ElemSet::from_bits(bits);
            for dir in [Direction::Up, Direction::Down] {
                assert_eq!(p.closure(s, dir).unwrap(), closure_oracle(&p, s, dir));
            }
        }
        assert!(matches!(
            p.closure(ElemSet::singleton(7), Direction::Up),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn extremes_frozen_examples() {
        let p = v_poset();
        let all = p.universe();
        assert_eq!(p.extremes(all, Extreme::Min), ElemSet::singleton(0));
        assert_eq!(p.extremes(all, Extreme::Max), [1, 2].into_iter().collect());
        assert!(p.extremes(ElemSet::EMPTY, Extreme::Min).is_empty());
        // Two incomparable points: min of the whole set is the whole set.
        let a2 = FinPoset::from_covers(2, &[]).unwrap();
        let k = a2.universe();
        assert_eq!(a2.extremes(k, Extreme::Min), k);
        assert_eq!(a2.closure(a2.extremes(k, Extreme::Min), Direction::Up).unwrap(), k);
    }

    #[test]
    fn upsets_of_two_chain_frozen() {
        let p = FinPoset::from_covers(2, &[(0, 1)]).unwrap();
        let ups = p.upsets(&Bounds::default()).unwrap();
        // Ascending bitmask order: {}, {1}, {0,1}.
        assert_eq!(
            ups,
            vec![
                ElemSet::EMPTY,
                ElemSet::singleton(1),
                ElemSet::full(2),
            ]
        );
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let p = FinPoset::from_covers(5, &[]).unwrap();
        let tight = Bounds { enumeration: 4, ..Bounds::default() };
        assert!(matches!(
            p.upsets(&tight),
            Err(Error::BoundExceeded { size: 5, bound: 4 })
        ));
    }

    #[test]
    fn empty_poset_has_one_upset() {
        let p = FinPoset::empty();
        assert_eq!(p.upsets(&Bounds::default()).unwrap(), vec![ElemSet::EMPTY]);
    }
}
