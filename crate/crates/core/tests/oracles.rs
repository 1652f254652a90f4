//! Enumeration and lattice results against brute-force references written
//! directly from the definitions.

use std::collections::BTreeSet;

use mgs_core::green::{self, Mgs};
use mgs_core::{AlgebraSpec, IdSet, IndecId, ModCat};

fn battery() -> Vec<AlgebraSpec> {
    let mut out: Vec<AlgebraSpec> = ["", "<", ">", "<<", "<>", "><", ">>", "<<<", "<><", "><>"]
        .iter()
        .map(|w| AlgebraSpec::type_a(w).unwrap())
        .collect();
    for k in [&[2, 2, 1][..], &[3, 2, 1], &[2, 2, 2, 1], &[3, 3, 2, 1]] {
        out.push(AlgebraSpec::linear_nakayama(k).unwrap());
    }
    for k in [&[2, 2][..], &[3, 3], &[2, 2, 2], &[3, 2, 2]] {
        out.push(AlgebraSpec::cyclic_nakayama(k).unwrap());
    }
    out
}

/// Backward Hom-orthogonal: no nonzero map from a later brick to an earlier one.
fn can_insert(cat: &ModCat, seq: &[IndecId], b: IndecId, pos: usize) -> bool {
    seq[..pos].iter().all(|&x| cat.hom_dim(b, x) == 0) && seq[pos..].iter().all(|&x| cat.hom_dim(x, b) == 0)
}

fn naive_mgs(cat: &ModCat) -> BTreeSet<Vec<IndecId>> {
    fn grow(cat: &ModCat, bricks: &[IndecId], seq: &mut Vec<IndecId>, out: &mut BTreeSet<Vec<IndecId>>) {
        let unused: Vec<IndecId> = bricks.iter().copied().filter(|b| !seq.contains(b)).collect();
        let maximal = unused.iter().all(|&b| (0..=seq.len()).all(|p| !can_insert(cat, seq, b, p)));
        if maximal {
            out.insert(seq.clone());
            return;
        }
        for b in unused {
            if can_insert(cat, seq, b, seq.len()) {
                seq.push(b);
                grow(cat, bricks, seq, out);
                seq.pop();
            }
        }
    }
    let bricks = cat.bricks();
    let mut out = BTreeSet::new();
    grow(cat, &bricks, &mut Vec::new(), &mut out);
    out
}

/// Torsion classes as subsets closed under indecomposable quotients and
/// recorded extensions, found without the library closure.
fn naive_torsion_classes(cat: &ModCat) -> Vec<IdSet> {
    let m = cat.len();
    (0u32..1 << m)
        .map(|mask| cat.set_of((0..m).filter(|&i| mask >> i & 1 == 1)))
        .filter(|s| {
            s.iter().all(|x| cat.indec_quotients(x).iter().all(|q| s.contains_all(q)))
                && (0..m).all(|e| {
                    s.contains(e)
                        || !cat.sub_quotient_pairs(e).iter().any(|r| s.contains_all(&r.sub) && s.contains_all(&r.quot))
                })
        })
        .collect()
}

#[test]
fn enumeration_matches_naive_search() {
    for spec in battery() {
        let cat = ModCat::new(&spec).unwrap();
        let got: BTreeSet<Vec<IndecId>> =
            green::enumerate_mgs(&cat, 24, false).unwrap().into_iter().map(|g| g.bricks).collect();
        assert_eq!(got, naive_mgs(&cat), "{spec}");
    }
}

#[test]
fn parallel_enumeration_matches_serial() {
    for spec in battery() {
        let cat = ModCat::new(&spec).unwrap();
        assert_eq!(green::enumerate_mgs(&cat, 24, false).unwrap(), green::enumerate_mgs(&cat, 24, true).unwrap());
    }
}

#[test]
fn lattice_matches_naive_torsion_classes() {
    for spec in battery() {
        let cat = ModCat::new(&spec).unwrap();
        let l = mgs_core::lattice::torsion_lattice(&cat, 1 << 16).unwrap();
        let got: BTreeSet<IdSet> = l.elements.iter().map(|t| t.members.clone()).collect();
        let want: BTreeSet<IdSet> = naive_torsion_classes(&cat).into_iter().collect();
        assert_eq!(got, want, "{spec}");
    }
}

#[test]
fn torsion_chain_ends_at_whole_category_and_zero() {
    for spec in battery() {
        let cat = ModCat::new(&spec).unwrap();
        for g in green::enumerate_mgs(&cat, 24, false).unwrap() {
            let chain = green::torsion_chain(&cat, &g);
            assert_eq!(chain.first().unwrap().members, cat.full_set(), "{spec} {:?}", g.bricks);
            assert!(chain.last().unwrap().is_empty());
        }
    }
}

#[test]
fn known_sequence_counts() {
    // Counts of maximal chains for the linear and alternating quivers.
    for (word, count) in [("", 1), ("<", 2), ("<<", 9), ("<>", 10), ("<<<", 98), ("<><", 179)] {
        let cat = ModCat::new(&AlgebraSpec::type_a(word).unwrap()).unwrap();
        assert_eq!(green::enumerate_mgs(&cat, 24, false).unwrap().len(), count, "{word:?}");
    }
}

#[test]
fn non_sequences_are_rejected_with_a_reason() {
    let cat = ModCat::new(&AlgebraSpec::type_a("<").unwrap()).unwrap();
    let [s1, p1, s2] = ["1", "12", "2"].map(|n| cat.by_name(n).unwrap());
    assert!(green::is_valid_mgs(&cat, &[s1, s2]));
    assert!(green::is_valid_mgs(&cat, &[s2, p1, s1]));
    assert!(green::mgs_violation(&cat, &[s2, s1]).is_some());
    assert!(green::mgs_violation(&cat, &[s2, p1]).is_some());
    assert!(green::mgs_violation(&cat, &[s1, s1, s2]).is_some());
    assert!(green::mgs_violation(&cat, &[99]).is_some());
    assert_eq!(Mgs::new(vec![s1, s2]).len(), 2);
}
