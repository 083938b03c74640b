use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symplin::random::{random_canrel, random_matrix, random_space};
use symplin::{parse_rational, LinCanRel, Matrix};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent_and_keeps_rank(seed in any::<u64>(), r in 0usize..5, c in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_matrix(&mut rng, r, c);
        let (e, pivots) = m.rref();
        prop_assert_eq!(&e.rref().0, &e);
        prop_assert_eq!(pivots.len(), m.transpose().rank());
        prop_assert!(m.mul(&m.nullspace().transpose()).is_zero());
    }

    #[test]
    fn rationals_print_and_parse_back(n in -1000i64..1000, d in 1i64..1000) {
        let x = parse_rational(&format!("{n}/{d}")).unwrap();
        prop_assert_eq!(parse_rational(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn matrices_survive_string_form(seed in any::<u64>(), r in 0usize..4, c in 0usize..4) {
        let m = random_matrix(&mut ChaCha8Rng::seed_from_u64(seed), r, c);
        prop_assert_eq!(Matrix::parse(c, &m.to_strings()).unwrap(), m);
    }

    #[test]
    fn transpose_and_identity_laws(seed in any::<u64>(), a in 0usize..3, b in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (random_space(&mut rng, a), random_space(&mut rng, b));
        let l = random_canrel(&mut rng, &x, &y);
        prop_assert_eq!(&l.transpose().transpose(), &l);
        prop_assert_eq!(&LinCanRel::identity(&x).then(&l).unwrap().0, &l);
        prop_assert_eq!(&l.then(&LinCanRel::identity(&y)).unwrap().0, &l);
        let s = LinCanRel::swap(&x, &y);
        prop_assert_eq!(&s.transpose(), &LinCanRel::swap(&y, &x));
    }
}
