use proptest::prelude::*;

use mgs_core::green::{self, Engine};
use mgs_core::{AlgebraSpec, DimVector, ModCat, ModuleSum};

fn type_a() -> impl Strategy<Value = AlgebraSpec> {
    prop::collection::vec(prop::bool::ANY, 0..4).prop_map(|bits| {
        let word: String = bits.iter().map(|&b| if b { '<' } else { '>' }).collect();
        AlgebraSpec::type_a(&word).unwrap()
    })
}

/// Admissible linear Kupisch series, built from the last entry backwards.
fn linear_nakayama() -> impl Strategy<Value = AlgebraSpec> {
    prop::collection::vec(0usize..3, 0..4).prop_map(|steps| {
        let mut k: Vec<usize> = vec![1];
        for s in steps {
            let next = (k[0] + 1).saturating_sub(s).max(2);
            k.insert(0, next);
        }
        AlgebraSpec::linear_nakayama(&k).unwrap()
    })
}

fn cyclic_nakayama() -> impl Strategy<Value = AlgebraSpec> {
    prop::collection::vec(2usize..4, 1..4).prop_filter_map("admissible", |k| AlgebraSpec::cyclic_nakayama(&k).ok())
}

fn any_algebra() -> impl Strategy<Value = AlgebraSpec> {
    prop_oneof![type_a(), linear_nakayama(), cyclic_nakayama()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn enumerated_sequences_are_valid(spec in any_algebra()) {
        let cat = ModCat::new(&spec).unwrap();
        for g in green::enumerate_mgs(&cat, 24, false).unwrap() {
            prop_assert_eq!(green::mgs_violation(&cat, &g.bricks), None);
        }
    }

    #[test]
    fn closures_are_idempotent_torsion_classes(spec in any_algebra(), seed in prop::collection::vec(0usize..16, 0..4)) {
        let cat = ModCat::new(&spec).unwrap();
        let seed = cat.set_of(seed.into_iter().filter(|&i| i < cat.len()));
        let t = cat.torsion_closure(&seed);
        prop_assert!(seed.is_subset(&t.members));
        prop_assert!(cat.is_torsion_class(&t.members));
        prop_assert_eq!(cat.torsion_closure(&t.members), t);
    }

    #[test]
    fn hn_layers_account_for_the_whole_module(spec in any_algebra(), pick in 0usize..64, parts in prop::collection::vec(0usize..16, 1..3)) {
        let cat = ModCat::new(&spec).unwrap();
        let all = green::enumerate_mgs(&cat, 24, false).unwrap();
        let g = &all[pick % all.len()];
        let m = ModuleSum::new(parts.into_iter().map(|i| i % cat.len()).collect());
        let hn = green::hn_filtration(&cat, &m, g).unwrap();
        let mut total = DimVector::zero(cat.num_vertices());
        let mut last_pos = None;
        for layer in &hn.layers {
            let pos = g.bricks.iter().position(|&b| b == layer.brick).unwrap();
            prop_assert!(last_pos.is_none_or(|p| p < pos), "layers out of sequence order");
            last_pos = Some(pos);
            let dv = cat.dimvec_sum(&layer.factor);
            prop_assert!(dv.multiple_of(&cat.indec(layer.brick).dimvec) == Some(layer.multiplicity));
            total = total.add(&dv);
        }
        prop_assert_eq!(total, cat.dimvec_sum(&m));
    }

    #[test]
    fn bricks_are_their_own_stable_factors(spec in any_algebra(), pick in 0usize..64) {
        let cat = ModCat::new(&spec).unwrap();
        let all = green::enumerate_mgs(&cat, 24, false).unwrap();
        let g = &all[pick % all.len()];
        let mut eng = Engine::new(&cat);
        for &b in &g.bricks {
            prop_assert_eq!(eng.hn_filtration(&ModuleSum::single(b), g).unwrap().stable_factors(), vec![b]);
        }
    }

    #[test]
    fn exact_and_modular_hom_tables_agree(spec in any_algebra()) {
        let fast = ModCat::new(&spec).unwrap();
        let exact = ModCat::with_options(&spec, mgs_core::Options { field: mgs_core::linalg::Field::Rational, parallel: false }).unwrap();
        for m in 0..fast.len() {
            for n in 0..fast.len() {
                prop_assert_eq!(fast.hom_dim(m, n), exact.hom_dim(m, n));
                prop_assert_eq!(fast.ext1_dim(m, n), exact.ext1_dim(m, n));
            }
        }
    }

    #[test]
    fn summand_sets_have_vertices_plus_length_members(spec in any_algebra()) {
        let cat = ModCat::new(&spec).unwrap();
        let mut eng = Engine::new(&cat);
        for g in green::enumerate_mgs(&cat, 24, false).unwrap() {
            prop_assert_eq!(eng.summand_set(&g).unwrap().len(), cat.num_vertices() + g.len());
            prop_assert_eq!(eng.exchange_pairs(&g).unwrap().len(), g.len());
        }
    }
}
