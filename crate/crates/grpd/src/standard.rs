//! Standard groupoids: trivial, pair, group, action, and inertia.

use std::sync::Arc;

use relcat::FinSet;

use crate::action::{action_groupoid, GroupoidAction};
use crate::error::GrpdError;
use crate::group::Group;
use crate::groupoid::FinGroupoid;

/// Input data for [`build_standard`].
#[derive(Debug, Clone)]
pub enum Standard {
    Trivial(Arc<FinSet>),
    Pair(Arc<FinSet>),
    Group(Group),
    /// `act[g * |space| + p]` is `g·p`.
    Action { group: Group, space: Arc<FinSet>, act: Vec<usize> },
}

pub fn build_standard(kind: Standard) -> Result<FinGroupoid, GrpdError> {
    match kind {
        Standard::Trivial(m) => Ok(trivial(&m)),
        Standard::Pair(m) => Ok(pair(&m)),
        Standard::Group(g) => Ok(group(&g)),
        Standard::Action { group, space, act } => group_action(&group, space, &act),
    }
}

/// Only units; arrows carry the object names.
pub fn trivial(m: &Arc<FinSet>) -> FinGroupoid {
    let ids: Vec<usize> = (0..m.len()).collect();
    FinGroupoid::from_fn(m.clone(), m.clone(), ids.clone(), ids.clone(), ids.clone(), |a, _| a, ids)
        .expect("indices in range")
}

/// Arrows `(x, y)` from `y` to `x`, with `(x, y)(y, z) = (x, z)`.
pub fn pair(m: &Arc<FinSet>) -> FinGroupoid {
    let n = m.len();
    let arrows = FinSet::product(m, m);
    let source = (0..n * n).map(|a| a % n).collect();
    let target = (0..n * n).map(|a| a / n).collect();
    let unit = (0..n).map(|x| x * n + x).collect();
    let inv = (0..n * n).map(|a| (a % n) * n + a / n).collect();
    FinGroupoid::from_fn(arrows, m.clone(), source, target, unit, |a, b| (a / n) * n + b % n, inv)
        .expect("indices in range")
}

/// A group as a groupoid over the point.
pub fn group(g: &Group) -> FinGroupoid {
    let n = g.order();
    let objects = FinSet::pt();
    FinGroupoid::from_fn(
        g.set().clone(),
        objects,
        vec![0; n],
        vec![0; n],
        vec![g.identity()],
        |a, b| g.mul(a, b),
        (0..n).map(|a| g.inv(a)).collect(),
    )
    .expect("indices in range")
}

/// The action groupoid of a group acting on a set: arrows `(g, p)` from `p`
/// to `g·p`.
pub fn group_action(g: &Group, space: Arc<FinSet>, act: &[usize]) -> Result<FinGroupoid, GrpdError> {
    let n = space.len();
    if act.len() != g.order() * n {
        return Err(GrpdError::Length { table: "action", got: act.len(), expected: g.order() * n });
    }
    if let Some(&index) = act.iter().find(|&&q| q >= n) {
        return Err(GrpdError::Dangling { table: "action", index, set: space.id().into(), size: n });
    }
    let gg = group(g);
    let a = GroupoidAction::from_fn(gg, space, vec![0; n], |x, p| act[x * n + p])?;
    action_groupoid(&a)
}

/// The inertia groupoid: the groupoid acting by conjugation on its loops
/// `{k : ℓ(k) = r(k)}`, with arrows `(a, k)` from `k` to `a k a⁻¹`.
pub fn inertia(g: &FinGroupoid) -> Result<FinGroupoid, GrpdError> {
    g.require_valid()?;
    let loops: Vec<usize> = (0..g.len()).filter(|&k| g.src(k) == g.tgt(k)).collect();
    let space = FinSet::new(format!("L{}", g.arrows().id()), loops.iter().map(|&k| g.arrows().name(k)).collect())
        .expect("arrow names are distinct");
    let moment = loops.iter().map(|&k| g.tgt(k)).collect();
    let pos = |k: usize| loops.binary_search(&k).expect("conjugate of a loop is a loop");
    let conj = |a: usize, i: usize| {
        let ak = g.mul(a, loops[i]).expect("composable");
        pos(g.mul(ak, g.inv(a)).expect("composable"))
    };
    let act = GroupoidAction::from_fn(g.clone(), space, moment, conj)?;
    action_groupoid(&act)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::isomorphic;

    fn m(names: &[&str]) -> Arc<FinSet> {
        FinSet::of("M", names.iter().copied())
    }

    #[test]
    fn trivial_on_one_point_has_one_arrow() {
        let g = build_standard(Standard::Trivial(m(&["a"]))).unwrap();
        assert_eq!(g.len(), 1);
        assert!(g.is_valid());
    }

    #[test]
    fn pair_product_rule() {
        let g = build_standard(Standard::Pair(m(&["1", "2"]))).unwrap();
        assert_eq!(g.len(), 4);
        // (1,2)(2,1) = (1,1) and (2,1)(1,2) = (2,2)
        assert_eq!(g.mul(1, 2), Some(0));
        assert_eq!(g.mul(2, 1), Some(3));
        assert_eq!(g.mul(1, 1), None);
        assert_eq!((g.tgt(1), g.src(1)), (0, 1));
    }

    #[test]
    fn swap_action_groupoid_targets() {
        let xy = FinSet::of("N", ["x", "y"]);
        let g = build_standard(Standard::Action { group: Group::cyclic(2), space: xy, act: vec![0, 1, 1, 0] }).unwrap();
        assert_eq!(g.len(), 4);
        for a in 0..4 {
            let (x, p) = (a / 2, a % 2);
            assert_eq!(g.tgt(a), if x == 0 { p } else { 1 - p });
            assert_eq!(g.src(a), p);
        }
        assert_eq!(g.arrows().name(2), "1;x");
    }

    #[test]
    fn non_action_table_is_rejected() {
        let xy = FinSet::of("N", ["x", "y"]);
        // the identity moves x
        let err = build_standard(Standard::Action { group: Group::cyclic(2), space: xy, act: vec![1, 1, 0, 0] });
        assert!(matches!(err, Err(GrpdError::NotAnAction(_))));
    }

    #[test]
    fn every_small_group_and_action_is_valid() {
        for g in Group::all_up_to(6) {
            assert!(group(&g).is_valid());
            let act: Vec<usize> = (0..g.order()).flat_map(|a| (0..g.order()).map(move |b| (a, b))).map(|(a, b)| g.mul(a, b)).collect();
            let ag = group_action(&g, g.set().clone(), &act).unwrap();
            assert!(ag.is_valid());
            assert_eq!(ag.orbits().len(), 1);
        }
    }

    #[test]
    fn inertia_of_abelian_group_is_the_trivial_action() {
        let z3 = Group::cyclic(3);
        let i = inertia(&group(&z3)).unwrap();
        assert_eq!(i.len(), 9);
        assert!(i.is_valid());
        // conjugation is trivial, so every arrow is a loop
        assert!((0..9).all(|a| i.src(a) == i.tgt(a)));
        let fixed = group_action(&z3, z3.set().clone(), &[0, 1, 2, 0, 1, 2, 0, 1, 2]).unwrap();
        assert!(isomorphic(&i, &fixed));
    }

    #[test]
    fn inertia_of_pair_groupoid_is_the_pair_groupoid() {
        let p = pair(&m(&["1", "2", "3"]));
        let i = inertia(&p).unwrap();
        assert_eq!(i.objects().len(), 3);
        assert!(isomorphic(&i, &p));
    }

    #[test]
    fn inertia_of_trivial_is_trivial() {
        let t = trivial(&m(&["a", "b"]));
        assert!(isomorphic(&inertia(&t).unwrap(), &t));
    }

    #[test]
    fn inertia_of_s3_has_class_orbits() {
        let i = inertia(&group(&Group::symmetric3())).unwrap();
        let sizes: Vec<usize> = i.orbits().iter().map(Vec::len).collect();
        let mut sorted = sizes.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 3]);
    }
}
