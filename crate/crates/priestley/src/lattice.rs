//! Finite bounded lattices and their filters.
//!
//! A [`FinLattice`] is a [`FinPoset`] in which every pair has a greatest
//! lower and least upper bound; the tables are computed and validated at
//! construction, which also yields bottom and top. Filters are represented
//! as validated member sets. The improper filter (the whole lattice) is a
//! legitimate member of the filter lattice here; primeness and complete
//! primeness require properness.
//!
//! Scott-openness and compactness of elements are degenerate over a finite
//! lattice (any witnessing subset is itself finite), but the checkers run
//! the quantifier literally so that the same definitions can fail on the
//! symbolically presented infinite frames in [`crate::symbolic`].

use crate::error::{BoundKind, Error, Result};
use crate::poset::{Extreme, FinPoset};
use crate::set::ElemSet;
use crate::Bounds;

#[derive(Clone, Debug)]
pub struct FinLattice {
    poset: FinPoset,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

/// A filter: nonempty, upward closed, closed under binary meet.
/// Improper (the whole lattice) is allowed. The set indexes elements of the
/// lattice it was validated against.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Filter {
    members: ElemSet,
}

impl Filter {
    pub fn members(self) -> ElemSet {
        self.members
    }

    pub fn contains(self, a: usize) -> bool {
        self.members.contains(a)
    }
}

impl FinLattice {
    /// Check every pair for glb and lub; error with the first witness pair
    /// that lacks one. Bottom and top fall out as the extremal meets/joins.
    pub fn from_poset(poset: FinPoset) -> Result<FinLattice> {
        let n = poset.n();
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        let mut meet = vec![vec![0usize; n]; n];
        let mut join = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in 0..n {
                let lower = poset.down_set(a).inter(poset.down_set(b));
                meet[a][b] = greatest_of(&poset, lower).ok_or(Error::NotALattice {
                    a,
                    b,
                    kind: BoundKind::Meet,
                })?;
                let upper = poset.up_set(a).inter(poset.up_set(b));
                join[a][b] = least_of(&poset, upper).ok_or(Error::NotALattice {
                    a,
                    b,
                    kind: BoundKind::Join,
                })?;
            }
        }
        let mut bottom = 0;
        let mut top = 0;
        for x in 1..n {
            bottom = meet[bottom][x];
            top = join[top][x];
        }
        Ok(FinLattice {
            poset,
            meet,
            join,
            bottom,
            top,
        })
    }

    pub fn poset(&self) -> &FinPoset {
        &self.poset
    }

    pub fn n(&self) -> usize {
        self.poset.n()
    }

    pub fn label(&self, a: usize) -> &str {
        self.poset.label(a)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Meet of a subset; the empty meet is top.
    pub fn meet_of(&self, s: ElemSet) -> usize {
        s.iter().fold(self.top, |acc, x| self.meet[acc][x])
    }

    /// Join of a subset; the empty join is bottom.
    pub fn join_of(&self, s: ElemSet) -> usize {
        s.iter().fold(self.bottom, |acc, x| self.join[acc][x])
    }

    /// First triple (in ascending index order) violating a∧(b∨c) = (a∧b)∨(a∧c),
    /// or None if the lattice is distributive.
    pub fn distributivity_counterexample(&self) -> Option<(usize, usize, usize)> {
        let n = self.n();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.meet[a][self.join[b][c]];
                    let rhs = self.join[self.meet[a][b]][self.meet[a][c]];
                    if lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_counterexample().is_none()
    }

    pub fn check_distributive(&self) -> Result<()> {
        match self.distributivity_counterexample() {
            None => Ok(()),
            Some((a, b, c)) => Err(Error::NotDistributive { a, b, c }),
        }
    }

    /// Validate a member set as a filter.
    pub fn filter_from(&self, members: ElemSet) -> Result<Filter> {
        if !members.is_subset(self.poset.universe()) {
            return Err(Error::NotAFilter {
                reason: format!("members {members} exceed the lattice universe"),
            });
        }
        if members.is_empty() {
            return Err(Error::NotAFilter {
                reason: "filters are nonempty".into(),
            });
        }
        for a in members.iter() {
            if !self.poset.up_set(a).is_subset(members) {
                return Err(Error::NotAFilter {
                    reason: format!("not upward closed at {}", self.label(a)),
                });
            }
            for b in members.iter() {
                if !members.contains(self.meet[a][b]) {
                    return Err(Error::NotAFilter {
                        reason: format!(
                            "not closed under meet at ({}, {})",
                            self.label(a),
                            self.label(b)
                        ),
                    });
                }
            }
        }
        Ok(Filter { members })
    }

    pub fn is_filter(&self, members: ElemSet) -> bool {
        self.filter_from(members).is_ok()
    }

    /// The principal filter ↑a.
    pub fn principal_filter(&self, a: usize) -> Filter {
        Filter {
            members: self.poset.up_set(a),
        }
    }

    /// Least filter containing `s`: the principal filter at the meet of `s`.
    /// The empty set generates {top}; a set whose meet is bottom generates
    /// the improper filter.
    pub fn filter_generated(&self, s: ElemSet) -> Filter {
        self.principal_filter(self.meet_of(s))
    }

    pub fn is_proper(&self, f: Filter) -> bool {
        !f.members.contains(self.bottom)
    }

    /// All filters, improper included, sorted by ascending member bitmask.
    ///
    /// Every filter of a finite lattice is principal (it contains the meet
    /// of its members), so this enumerates ↑a for each element. The bound
    /// is the bitmask capacity; a brute-force subset oracle cross-checks
    /// this enumeration in the tests.
    pub fn filters(&self, _bounds: &Bounds) -> Result<Vec<Filter>> {
        let mut out: Vec<Filter> = (0..self.n()).map(|a| self.principal_filter(a)).collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Prime filter: proper, and a∨b ∈ F implies a ∈ F or b ∈ F.
    pub fn is_prime_filter(&self, f: Filter) -> bool {
        if !self.is_proper(f) {
            return false;
        }
        let n = self.n();
        for a in 0..n {
            for b in 0..n {
                if f.members.contains(self.join[a][b])
                    && !f.members.contains(a)
                    && !f.members.contains(b)
                {
                    return false;
                }
            }
        }
        true
    }

    /// Completely prime filter: for every subset S with ⋁S ∈ F, some member
    /// of S is in F. Decided through an equivalent complement reduction:
    /// if any S ⊆ L∖F had ⋁S ∈ F, then L∖F itself would (joins are monotone
    /// and F is upward closed), so the single subset L∖F decides the whole
    /// quantifier. The empty-set case (⋁∅ = bottom) makes the improper
    /// filter fail. A brute-force all-subsets oracle backs this in tests.
    pub fn is_completely_prime(&self, f: Filter) -> bool {
        let outside = f.members.complement(self.n());
        !f.members.contains(self.join_of(outside))
    }

    /// Scott-open filter, by the literal definition: for every subset S with
    /// ⋁S ∈ F there is a finite T ⊆ S with ⋁T ∈ F. Over a finite lattice
    /// T = S always works, so this is constantly true; the quantifier is
    /// still executed (with early exit) rather than short-circuited, and is
    /// bounded to keep the 2^n scan honest.
    pub fn is_scott_open_exhaustive(&self, f: Filter, bounds: &Bounds) -> Result<bool> {
        let n = self.n();
        if n > bounds.scott {
            return Err(Error::BoundExceeded {
                size: n,
                bound: bounds.scott,
            });
        }
        let joins = self.join_table_by_mask();
        for s in 0..(1u64 << n) {
            if !f.members.contains(joins[s as usize]) {
                continue;
            }
            // Look for a finite witness T ⊆ S, smallest bitmask first.
            let mut found = false;
            let mut t = 0u64;
            loop {
                if f.members.contains(joins[t as usize]) {
                    found = true;
                    break;
                }
                if t == s {
                    break;
                }
                t = (t.wrapping_sub(s)) & s; // next subset of s
            }
            if !found {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Compact element, by the literal definition: for every subset S with
    /// a ≤ ⋁S there is a finite T ⊆ S with a ≤ ⋁T. Same degeneracy and the
    /// same bound as [`FinLattice::is_scott_open_exhaustive`].
    pub fn is_compact_element(&self, a: usize, bounds: &Bounds) -> Result<bool> {
        let n = self.n();
        if n > bounds.scott {
            return Err(Error::BoundExceeded {
                size: n,
                bound: bounds.scott,
            });
        }
        let joins = self.join_table_by_mask();
        for s in 0..(1u64 << n) {
            if !self.poset.leq(a, joins[s as usize]) {
                continue;
            }
            let mut found = false;
            let mut t = 0u64;
            loop {
                if self.poset.leq(a, joins[t as usize]) {
                    found = true;
                    break;
                }
                if t == s {
                    break;
                }
                t = (t.wrapping_sub(s)) & s;
            }
            if !found {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// joins[mask] = ⋁{ i : bit i of mask }, for all masks over the lattice.
    fn join_table_by_mask(&self) -> Vec<usize> {
        let n = self.n();
        let mut joins = vec![self.bottom; 1 << n];
        for mask in 1usize..(1 << n) {
            let low = mask.trailing_zeros() as usize;
            joins[mask] = self.join[joins[mask & (mask - 1)]][low];
        }
        joins
    }

    /// Join-irreducible elements: a ≠ bottom such that a = b∨c forces a = b
    /// or a = c. Used as an independent cardinality oracle for the dual.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        let n = self.n();
        (0..n)
            .filter(|&a| {
                a != self.bottom
                    && !(0..n).any(|b| {
                        (0..n).any(|c| b != a && c != a && self.join[b][c] == a)
                    })
            })
            .collect()
    }

    /// The lattice of downsets of a poset, ordered by inclusion, with meet
    /// and join as intersection and union. Returns the lattice and, for each
    /// lattice element, the downset of `p` it denotes (ascending bitmask
    /// order, so element 0 is the empty downset).
    pub fn downset_lattice(p: &FinPoset, bounds: &Bounds) -> Result<(FinLattice, Vec<ElemSet>)> {
        let sets = p.downsets(bounds)?;
        let lat = FinLattice::from_inclusion_order(&sets, |s| render_set(p, s))?;
        Ok((lat, sets))
    }

    /// Build a lattice from a family of sets ordered by inclusion.
    /// The family must be closed under the glb/lub the order induces;
    /// `from_poset` validates that.
    pub(crate) fn from_inclusion_order(
        sets: &[ElemSet],
        mut label: impl FnMut(ElemSet) -> String,
    ) -> Result<FinLattice> {
        let n = sets.len();
        if n > ElemSet::CAPACITY {
            return Err(Error::BoundExceeded {
                size: n,
                bound: ElemSet::CAPACITY,
            });
        }
        let mut rows = Vec::with_capacity(n);
        for (i, &a) in sets.iter().enumerate() {
            let mut row = ElemSet::EMPTY;
            for (j, &b) in sets.iter().enumerate() {
                if a.is_subset(b) {
                    row = row.with(j);
                }
            }
            debug_assert!(row.contains(i));
            rows.push(row);
        }
        let labels = sets.iter().map(|&s| label(s)).collect();
        let poset = FinPoset::from_leq(n, rows, labels)?;
        FinLattice::from_poset(poset)
    }

    /// The lattice of ideals (nonempty downsets closed under join), ordered
    /// by inclusion, together with the denoted sets and the map a ↦ ↓a.
    /// For a finite lattice every ideal is principal, so the map is a
    /// verified isomorphism and every element of the result is compact.
    pub fn ideal_lattice(&self, bounds: &Bounds) -> Result<IdealLattice> {
        let downsets = self.poset.downsets(bounds)?;
        let ideals: Vec<ElemSet> = downsets
            .into_iter()
            .filter(|&d| {
                !d.is_empty()
                    && d.iter().all(|a| d.iter().all(|b| d.contains(self.join[a][b])))
            })
            .collect();
        let lattice = FinLattice::from_inclusion_order(&ideals, |s| render_set(&self.poset, s))?;
        let mut principal = vec![usize::MAX; self.n()];
        for (a, slot) in principal.iter_mut().enumerate() {
            let down = self.poset.down_set(a);
            *slot = ideals
                .iter()
                .position(|&s| s == down)
                .ok_or_else(|| Error::IsoFailure("principal ideal missing".into()))?;
        }
        // a ↦ ↓a must be onto: a finite ideal contains its own join.
        for (idx, &s) in ideals.iter().enumerate() {
            let j = self.join_of(s);
            if principal[j] != idx {
                return Err(Error::IsoFailure(format!(
                    "ideal {s} is not principal"
                )));
            }
        }
        Ok(IdealLattice {
            lattice,
            ideals,
            principal,
        })
    }
}

/// Result of [`FinLattice::ideal_lattice`].
#[derive(Clone, Debug)]
pub struct IdealLattice {
    pub lattice: FinLattice,
    /// The downset each ideal-lattice element denotes.
    pub ideals: Vec<ElemSet>,
    /// principal[a] = index of ↓a in `ideals`. A bijection for finite lattices.
    pub principal: Vec<usize>,
}

fn greatest_of(p: &FinPoset, s: ElemSet) -> Option<usize> {
    let m = p.extremes(s, Extreme::Max);
    match (m.first(), m.len()) {
        (Some(x), 1) => Some(x),
        _ => None,
    }
}

fn least_of(p: &FinPoset, s: ElemSet) -> Option<usize> {
    let m = p.extremes(s, Extreme::Min);
    match (m.first(), m.len()) {
        (Some(x), 1) => Some(x),
        _ => None,
    }
}

/// Render a subset with the poset's element labels, e.g. `{a,b}`.
pub fn render_set(p: &FinPoset, s: ElemSet) -> String {
    let mut out = String::from("{");
    for (k, i) in s.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(p.label(i));
    }
    out.push('}');
    out
}
