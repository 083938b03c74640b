use std::sync::Arc;

use proptest::prelude::*;
use relcat::{FinSet, Rel};

fn set(id: &str, n: usize) -> Arc<FinSet> {
    FinSet::of(id, (0..n).map(|i| format!("{id}{i}")))
}

/// Relation from a bit mask over `src × dst`.
fn from_mask(src: &Arc<FinSet>, dst: &Arc<FinSet>, mask: u32) -> Rel {
    let m = dst.len();
    let pairs = (0..src.len() * m).filter(|k| mask >> k & 1 == 1).map(|k| (k / m, k % m));
    Rel::new(src.clone(), dst.clone(), pairs).unwrap()
}

fn all_rels(src: &Arc<FinSet>, dst: &Arc<FinSet>) -> Vec<Rel> {
    let bits = src.len() * dst.len();
    (0..1u32 << bits).map(|m| from_mask(src, dst, m)).collect()
}

#[test]
fn composition_associative_exhaustively_on_small_sets() {
    for (na, nb, nc, nd) in [(1, 2, 2, 1), (2, 2, 2, 2), (2, 1, 2, 2), (2, 2, 1, 2)] {
        let (a, b, c, d) = (set("A", na), set("B", nb), set("C", nc), set("D", nd));
        let (rs, ss, ts) = (all_rels(&a, &b), all_rels(&b, &c), all_rels(&c, &d));
        for r in &rs {
            for s in &ss {
                let rs_ = r.compose(s).unwrap();
                for t in &ts {
                    let left = rs_.compose(t).unwrap();
                    let right = r.compose(&s.compose(t).unwrap()).unwrap();
                    assert!(left.same(&right));
                }
            }
        }
    }
}

fn rel_strategy(n: usize, m: usize) -> impl Strategy<Value = u32> {
    0..(1u32 << (n * m))
}

proptest! {
    #[test]
    fn associativity_up_to_four(
        dims in (1usize..=4, 1usize..=4, 1usize..=4, 1usize..=4)
            .prop_flat_map(|d| (Just(d), rel_strategy(d.0, d.1), rel_strategy(d.1, d.2), rel_strategy(d.2, d.3)))
    ) {
        let ((na, nb, nc, nd), x, y, z) = dims;
        let (a, b, c, d) = (set("A", na), set("B", nb), set("C", nc), set("D", nd));
        let (r, s, t) = (from_mask(&a, &b, x), from_mask(&b, &c, y), from_mask(&c, &d, z));
        let left = r.compose(&s).unwrap().compose(&t).unwrap();
        let right = r.compose(&s.compose(&t).unwrap()).unwrap();
        prop_assert!(left.same(&right));
    }

    #[test]
    fn transpose_is_an_involutive_antihomomorphism(
        dims in (1usize..=4, 1usize..=4, 1usize..=4)
            .prop_flat_map(|d| (Just(d), rel_strategy(d.0, d.1), rel_strategy(d.1, d.2)))
    ) {
        let ((na, nb, nc), x, y) = dims;
        let (a, b, c) = (set("A", na), set("B", nb), set("C", nc));
        let (r, s) = (from_mask(&a, &b, x), from_mask(&b, &c, y));
        prop_assert!(r.transpose().transpose().same(&r));
        let lhs = r.compose(&s).unwrap().transpose();
        let rhs = s.transpose().compose(&r.transpose()).unwrap();
        prop_assert!(lhs.same(&rhs));
    }

    #[test]
    fn surmersion_facts(
        dims in (1usize..=4, 1usize..=4).prop_flat_map(|d| (Just(d), rel_strategy(d.0, d.1)))
    ) {
        let ((na, nb), x) = dims;
        let r = from_mask(&set("A", na), &set("B", nb), x);
        let f = r.classify();
        prop_assert_eq!(f.surmersion, r.transpose().classify().cosurmersion);
        if f.surmersion {
            prop_assert!(f.surjective && f.coinjective);
        }
    }
}
