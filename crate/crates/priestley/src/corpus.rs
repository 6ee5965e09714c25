//! Generators for the exhaustive test corpus.
//!
//! Provides the named small lattices used throughout the tests, plus an
//! enumeration of all finite posets up to isomorphism (one representative
//! per class) for small sizes. Representatives are produced by extending
//! each smaller poset with a new maximal element over every downset, then
//! deduplicating by a canonical form; every poset arises this way because
//! removing a maximal element leaves a poset and a downset.

use std::sync::OnceLock;

use crate::lattice::FinLattice;
use crate::poset::FinPoset;
use crate::set::ElemSet;
use crate::Bounds;

/// Largest size for which isomorphism representatives are generated.
/// (The canonical-form search permutes within invariant classes; six
/// elements is all the test corpus needs and stays instant.)
pub const MAX_REPRESENTATIVE_SIZE: usize = 6;

/// Expected number of poset isomorphism classes per size, used as a
/// self-check: 1, 2, 5, 16, 63, 318 for sizes 1..6.
pub const POSET_CLASS_COUNTS: [usize; 6] = [1, 2, 5, 16, 63, 318];

pub fn chain_poset(n: usize) -> FinPoset {
    let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    FinPoset::from_covers(n, &covers).expect("chain poset")
}

pub fn antichain_poset(n: usize) -> FinPoset {
    FinPoset::from_covers(n, &[]).expect("antichain poset")
}

/// One bottom below two incomparable elements. Not a lattice.
pub fn v_poset() -> FinPoset {
    FinPoset::from_covers(3, &[(0, 1), (0, 2)]).expect("v poset")
}

pub fn chain_lattice(n: usize) -> FinLattice {
    FinLattice::from_poset(chain_poset(n)).expect("chain lattice")
}

/// Bottom, two incomparable middles, top. Labels 0, a, b, 1.
pub fn diamond_lattice() -> FinLattice {
    let p = FinPoset::from_covers_labeled(
        4,
        &[(0, 1), (0, 2), (1, 3), (2, 3)],
        vec!["0".into(), "a".into(), "b".into(), "1".into()],
    )
    .expect("diamond poset");
    FinLattice::from_poset(p).expect("diamond lattice")
}

/// Bottom, three incomparable atoms, top. Modular, not distributive.
pub fn m3_lattice() -> FinLattice {
    let p = FinPoset::from_covers_labeled(
        5,
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        vec!["0".into(), "a".into(), "b".into(), "c".into(), "1".into()],
    )
    .expect("m3 poset");
    FinLattice::from_poset(p).expect("m3 lattice")
}

/// The Boolean lattice with `k` atoms (2^k elements): the downset lattice
/// of the k-element antichain. `k = 0` gives the one-element lattice.
pub fn boolean_lattice(k: usize) -> FinLattice {
    if k == 0 {
        return chain_lattice(1);
    }
    let bounds = Bounds { enumeration: ElemSet::CAPACITY.min(20), ..Bounds::default() };
    FinLattice::downset_lattice(&antichain_poset(k), &bounds)
        .expect("boolean lattice")
        .0
}

/// Small named distributive lattices for unit tests (all ≤ 8 elements
/// except where noted by name).
pub fn unit_test_lattices() -> Vec<(String, FinLattice)> {
    let bounds = Bounds::default();
    let mut out: Vec<(String, FinLattice)> = Vec::new();
    for n in 1..=5 {
        out.push((format!("chain-{n}"), chain_lattice(n)));
    }
    out.push(("diamond".into(), diamond_lattice()));
    for k in 0..=3 {
        out.push((format!("boolean-{k}"), boolean_lattice(k)));
    }
    let (v_down, _) = FinLattice::downset_lattice(&v_poset(), &bounds).expect("downsets of V");
    out.push(("downsets-of-v".into(), v_down));
    out
}

/// The full corpus the acceptance checks quantify over: the downset lattice
/// of every poset with at most five elements (one per isomorphism class),
/// all chains up to eight elements, Boolean lattices up to sixteen
/// elements, and the diamond.
pub fn acceptance_lattices() -> Vec<(String, FinLattice)> {
    let bounds = Bounds::default();
    let mut out = Vec::new();
    for n in 1..=5 {
        for (k, p) in poset_representatives(n).iter().enumerate() {
            let (lat, _) = FinLattice::downset_lattice(p, &bounds).expect("downset lattice");
            out.push((format!("downsets[n={n},#{k}]"), lat));
        }
    }
    for n in 1..=8 {
        out.push((format!("chain-{n}"), chain_lattice(n)));
    }
    for k in 0..=4 {
        out.push((format!("boolean-{k}"), boolean_lattice(k)));
    }
    out.push(("diamond".into(), diamond_lattice()));
    out
}

/// All posets on `n` elements up to isomorphism, in a deterministic order.
/// Supported for `n ≤ MAX_REPRESENTATIVE_SIZE`.
pub fn poset_representatives(n: usize) -> &'static [FinPoset] {
    assert!(
        (1..=MAX_REPRESENTATIVE_SIZE).contains(&n),
        "representatives are generated for sizes 1..={MAX_REPRESENTATIVE_SIZE}"
    );
    static TABLE: OnceLock<Vec<Vec<FinPoset>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut table: Vec<Vec<FinPoset>> = Vec::new();
        table.push(vec![antichain_poset(1)]);
        for size in 2..=MAX_REPRESENTATIVE_SIZE {
            let prev = &table[size - 2];
            let mut canon_seen: Vec<u64> = Vec::new();
            let mut reps: Vec<(u64, FinPoset)> = Vec::new();
            let bounds = Bounds::default();
            for q in prev {
                for d in q.downsets(&bounds).expect("downsets within bound") {
                    let cand = extend_with_maximal(q, d);
                    let code = canonical_code(&cand);
                    if !canon_seen.contains(&code) {
                        canon_seen.push(code);
                        reps.push((code, cand));
                    }
                }
            }
            reps.sort_by_key(|&(code, _)| code);
            table.push(reps.into_iter().map(|(_, p)| p).collect());
        }
        for (i, row) in table.iter().enumerate() {
            assert_eq!(
                row.len(),
                POSET_CLASS_COUNTS[i],
                "isomorphism class count for size {}",
                i + 1
            );
        }
        table
    });
    &table[n - 1]
}

/// Append a new maximal element whose strict downset is `d`.
fn extend_with_maximal(q: &FinPoset, d: ElemSet) -> FinPoset {
    let n = q.n() + 1;
    let new = n - 1;
    let mut rows: Vec<ElemSet> = (0..q.n())
        .map(|i| {
            let mut row = q.up_set(i);
            if d.contains(i) {
                row = row.with(new);
            }
            row
        })
        .collect();
    rows.push(ElemSet::singleton(new));
    let labels = (0..n).map(|i| i.to_string()).collect();
    FinPoset::from_leq(n, rows, labels).expect("extension is a poset")
}

/// Canonical form: the minimum, over relabelings, of the strict-order bit
/// matrix packed row-major.
///
/// Relabelings are restricted to those sending each element to a slot whose
/// reference key, in the sorted key sequence, equals the element's own
/// (|down|, |up|) key. The restriction is sound: the key multiset is an
/// isomorphism invariant, an isomorphism composed with a key-respecting
/// relabeling is again key-respecting, so two isomorphic posets generate
/// identical code sets; and equal codes exhibit an isomorphism directly.
fn canonical_code(p: &FinPoset) -> u64 {
    let n = p.n();
    debug_assert!(n * n <= 64);
    let keys: Vec<(usize, usize)> = (0..n)
        .map(|i| (p.down_set(i).len(), p.up_set(i).len()))
        .collect();
    let mut slot_keys = keys.clone();
    slot_keys.sort_unstable();
    struct Search<'a> {
        n: usize,
        p: &'a FinPoset,
        keys: &'a [(usize, usize)],
        slot_keys: &'a [(usize, usize)],
        perm: Vec<usize>,
        used: Vec<bool>,
        best: u64,
    }
    impl Search<'_> {
        fn rec(&mut self, pos: usize) {
            let n = self.n;
            if pos == n {
                let mut code = 0u64;
                // perm[i] = new position of element i.
                for i in 0..n {
                    for j in 0..n {
                        if i != j && self.p.leq(i, j) {
                            code |= 1u64 << (self.perm[i] * n + self.perm[j]);
                        }
                    }
                }
                if code < self.best {
                    self.best = code;
                }
                return;
            }
            for target in 0..n {
                if !self.used[target] && self.slot_keys[target] == self.keys[pos] {
                    self.perm[pos] = target;
                    self.used[target] = true;
                    self.rec(pos + 1);
                    self.used[target] = false;
                }
            }
        }
    }
    let mut search = Search {
        n,
        p,
        keys: &keys,
        slot_keys: &slot_keys,
        perm: (0..n).collect(),
        used: vec![false; n],
        best: u64::MAX,
    };
    search.rec(0);
    search.best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representative_counts_match_known_values() {
        for n in 1..=MAX_REPRESENTATIVE_SIZE {
            assert_eq!(poset_representatives(n).len(), POSET_CLASS_COUNTS[n - 1]);
        }
    }

    #[test]
    fn representatives_are_pairwise_nonisomorphic() {
        for n in 1..=4 {
            let reps = poset_representatives(n);
            for (i, p) in reps.iter().enumerate() {
                for q in reps.iter().skip(i + 1) {
                    assert_ne!(canonical_code(p), canonical_code(q));
                }
            }
        }
    }

    #[test]
    fn canonical_code_is_isomorphism_invariant() {
        // The 3-chain relabeled two ways.
        let a = FinPoset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        let b = FinPoset::from_covers(3, &[(2, 0), (0, 1)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
        // The V and its dual are not isomorphic.
        let v = v_poset();
        let hat = FinPoset::from_covers(3, &[(1, 0), (2, 0)]).unwrap();
        assert_ne!(canonical_code(&v), canonical_code(&hat));
    }

    #[test]
    fn boolean_lattice_sizes() {
        for k in 0..=4 {
            assert_eq!(boolean_lattice(k).n(), 1 << k);
        }
    }
}
