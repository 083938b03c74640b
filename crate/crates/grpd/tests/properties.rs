use grpd::{
    all_groupoids, bibundle_check, group, group_action, morita_invariants_agree, nerve, nerve_star, round_trip,
    Bibundle, Group, GroupoidAction,
};
use relcat::{check_simplicial, check_star_simplicial, FinSet};

#[test]
fn star_monoid_round_trip_on_all_groupoids_up_to_eight_arrows() {
    let all = all_groupoids(8);
    assert!(all.len() > 40);
    for g in &all {
        assert!(round_trip(g).unwrap(), "{}", g.arrows().id());
    }
}

#[test]
fn nerves_to_depth_three_with_star() {
    for g in all_groupoids(6) {
        let x = nerve(&g, 3);
        let rep = check_simplicial(&x, 3).unwrap();
        assert!(rep.passed(), "{rep}");
        assert!(check_star_simplicial(&x, &nerve_star(&g, 3)).unwrap().passed());
    }
}

#[test]
fn action_groupoid_orbits_are_action_orbits() {
    for k in Group::all_up_to(6) {
        let n = k.order();
        // left multiplication on pairs (a, b) ↦ (ka, b)
        let space = FinSet::product(k.set(), &FinSet::of("B", ["u", "v"]));
        let act: Vec<usize> =
            (0..n).flat_map(|g| (0..2 * n).map(move |p| (g, p))).map(|(g, p)| k.mul(g, p / 2) * 2 + p % 2).collect();
        let ag = group_action(&k, space.clone(), &act).unwrap();
        let a = GroupoidAction::from_fn(group(&k), space, vec![0; 2 * n], |g, p| act[g * 2 * n + p]).unwrap();
        assert_eq!(ag.orbits(), a.orbits());
        assert_eq!(ag.orbits().len(), 2);
    }
}

#[test]
fn connected_groupoids_are_morita_equivalent_to_their_isotropy() {
    for g in all_groupoids(8).into_iter().filter(|g| g.orbits().len() == 1) {
        let b = Bibundle::to_isotropy(&g, 0).unwrap();
        assert!(bibundle_check(&b).unwrap().biprincipal, "{}", g.arrows().id());
        assert!(morita_invariants_agree(&b).unwrap());
        assert!(bibundle_check(&Bibundle::identity(&g)).unwrap().biprincipal);
    }
}
