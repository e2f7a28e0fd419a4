use proptest::prelude::*;

use posetdim::dimension::{antichain_lower_bound, dimension_oracle, exact_dimension, greedy_realizer, verify_realizer, Budget};
use posetdim::format::{parse_poset, parse_realizer, write_poset, write_realizer};
use posetdim::gallery::{antichain, boolean_lattice, higuchi_poset, random_poset};
use posetdim::lattice::downset_lattice;
use posetdim::rank::rank_function;
use posetdim::subsets::{construct_subset_realizer, embed_into_subsets, generate_subsets_poset};
use posetdim::Poset;

fn small_poset() -> impl Strategy<Value = Poset> {
    (1usize..=7, 0.0f64..0.8, any::<u64>()).prop_map(|(n, d, seed)| random_poset(n, d, None, seed))
}

fn same_order(a: &Poset, b: &Poset) -> bool {
    a.len() == b.len() && (0..a.len()).all(|x| (0..a.len()).all(|y| a.lt(x, y) == b.lt(x, y)))
}

proptest! {
    #[test]
    fn search_matches_oracle(p in small_poset()) {
        prop_assert_eq!(exact_dimension(&p), dimension_oracle(&p).unwrap());
    }

    #[test]
    fn lower_bound_never_exceeds_dimension(p in small_poset()) {
        let lb = antichain_lower_bound(&p, 8, &Budget::default());
        prop_assert!(lb.value <= exact_dimension(&p));
    }

    #[test]
    fn greedy_realizer_verifies(p in small_poset()) {
        let r = greedy_realizer(&p);
        prop_assert!(verify_realizer(&p, &r).unwrap().is_ok());
        prop_assert!(r.size() >= exact_dimension(&p));
    }

    #[test]
    fn text_round_trip(p in small_poset()) {
        let q = parse_poset(&write_poset(&p)).unwrap();
        prop_assert!(same_order(&p, &q));
        let r = greedy_realizer(&p);
        let back = parse_realizer(&write_realizer(&r)).unwrap();
        prop_assert_eq!(write_realizer(&back), write_realizer(&r));
    }

    #[test]
    fn rank_is_valid(p in small_poset()) {
        prop_assert!(rank_function(&p).is_valid_for(&p));
    }

    #[test]
    fn downset_embedding_is_an_order_embedding(p in small_poset()) {
        let sets = embed_into_subsets(&p);
        for x in 0..p.len() {
            for y in 0..p.len() {
                let sub = sets[x].iter().all(|e| sets[y].contains(e));
                prop_assert_eq!(p.le(x, y), sub);
            }
        }
    }
}

#[test]
fn downsets_of_antichain_form_boolean_lattice() {
    for k in 1..=4 {
        let l = downset_lattice(&antichain(k)).unwrap();
        let b = boolean_lattice(k).unwrap();
        assert_eq!(l.len(), b.len());
        assert_eq!(l.relation_size(), b.relation_size());
        assert_eq!(exact_dimension(&l), k);
    }
}

#[test]
fn higuchi_bound_grows() {
    for n in 3..=5 {
        let p = higuchi_poset(n).unwrap();
        let lb = antichain_lower_bound(&p, n, &Budget::default());
        assert!(lb.value >= n, "n={n}: {}", lb.value);
    }
}

#[test]
fn subset_realizer_not_below_dimension() {
    for n in 2..=4 {
        let p = generate_subsets_poset(n, 2).unwrap();
        let r = construct_subset_realizer(n, 2).unwrap();
        assert!(r.size() >= exact_dimension(&p));
    }
}
