//! Products, disjoint unions, and the list of all small groupoids up to
//! isomorphism.
//!
//! A connected finite groupoid is isomorphic to a pair groupoid times its
//! isotropy group, so small groupoids are multisets of such components.

use std::sync::Arc;

use relcat::FinSet;

use crate::group::Group;
use crate::groupoid::FinGroupoid;
use crate::standard::{group, pair};

/// Componentwise product.
pub fn product(a: &FinGroupoid, b: &FinGroupoid) -> FinGroupoid {
    let (na, nb) = (a.len(), b.len());
    let ob = b.objects().len();
    let arrows = FinSet::product(a.arrows(), b.arrows());
    let objects = FinSet::product(a.objects(), b.objects());
    let split = |g: usize| (g / nb, g % nb);
    let source = (0..na * nb).map(|g| a.src(split(g).0) * ob + b.src(split(g).1)).collect();
    let target = (0..na * nb).map(|g| a.tgt(split(g).0) * ob + b.tgt(split(g).1)).collect();
    let unit = (0..a.objects().len() * ob).map(|x| a.unit(x / ob) * nb + b.unit(x % ob)).collect();
    let inv = (0..na * nb).map(|g| a.inv(split(g).0) * nb + b.inv(split(g).1)).collect();
    FinGroupoid::from_fn(
        arrows,
        objects,
        source,
        target,
        unit,
        |g, h| {
            let x = a.mul(split(g).0, split(h).0).expect("composable");
            let y = b.mul(split(g).1, split(h).1).expect("composable");
            x * nb + y
        },
        inv,
    )
    .expect("indices in range")
}

/// Disjoint union; names are prefixed with the component index.
pub fn disjoint_union(parts: &[FinGroupoid]) -> FinGroupoid {
    let tag = |sets: &mut dyn Iterator<Item = &Arc<FinSet>>, id: &str| {
        let names = sets.enumerate().flat_map(|(k, s)| s.names().into_iter().map(move |n| format!("{k}.{n}"))).collect();
        FinSet::new(id, names).expect("prefixed names are distinct")
    };
    let id = parts.iter().map(|p| p.arrows().id().to_string()).collect::<Vec<_>>().join("+");
    let arrows = tag(&mut parts.iter().map(|p| p.arrows()), &id);
    let objects = tag(&mut parts.iter().map(|p| p.objects()), &format!("ob({id})"));
    let (mut source, mut target, mut unit, mut inv, mut comp) = (vec![], vec![], vec![], vec![], vec![]);
    let (mut da, mut dx) = (0, 0);
    for p in parts {
        source.extend(p.sources().iter().map(|x| x + dx));
        target.extend(p.targets().iter().map(|x| x + dx));
        unit.extend(p.units().iter().map(|g| g + da));
        inv.extend(p.inverses().iter().map(|g| g + da));
        comp.extend(p.comp().iter().map(|&(g, h, k)| (g + da, h + da, k + da)));
        da += p.len();
        dx += p.objects().len();
    }
    FinGroupoid::new(arrows, objects, source, target, unit, comp, inv).expect("indices in range")
}

/// A connected groupoid: the pair groupoid on `n` objects times `k`.
pub fn connected(n: usize, k: &Group) -> FinGroupoid {
    let objects = FinSet::of(&format!("P{n}"), (1..=n).map(|i| i.to_string()));
    if k.order() == 1 {
        return pair(&objects);
    }
    if n == 1 {
        return group(k);
    }
    product(&pair(&objects), &group(k))
}

/// Every groupoid with at most `max_arrows` arrows, one per isomorphism
/// class, including the empty one. Order is deterministic.
pub fn all_groupoids(max_arrows: usize) -> Vec<FinGroupoid> {
    let groups = Group::all_up_to(max_arrows.min(8));
    let mut kinds: Vec<(usize, &Group)> = Vec::new();
    for n in 1.. {
        if n * n > max_arrows {
            break;
        }
        for k in &groups {
            if n * n * k.order() <= max_arrows {
                kinds.push((n, k));
            }
        }
    }
    let cost = |i: usize| kinds[i].0 * kinds[i].0 * kinds[i].1.order();
    let mut out = Vec::new();
    // multisets as non-decreasing index sequences
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
    while let Some((picks, used)) = stack.pop() {
        let parts: Vec<FinGroupoid> = picks.iter().map(|&i| connected(kinds[i].0, kinds[i].1)).collect();
        out.push((picks.clone(), disjoint_union(&parts)));
        let from = picks.last().copied().unwrap_or(0);
        for i in (from..kinds.len()).rev() {
            if used + cost(i) <= max_arrows {
                let mut next = picks.clone();
                next.push(i);
                stack.push((next, used + cost(i)));
            }
        }
    }
    out.sort_by(|a, b| (a.1.len(), &a.0).cmp(&(b.1.len(), &b.0)));
    out.into_iter().map(|(_, g)| g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::isomorphic;

    #[test]
    fn products_and_unions_are_valid() {
        let p = product(&pair(&FinSet::of("M", ["1", "2"])), &group(&Group::cyclic(2)));
        assert_eq!(p.len(), 8);
        assert!(p.is_valid());
        let u = disjoint_union(&[p.clone(), group(&Group::cyclic(3))]);
        assert_eq!(u.len(), 11);
        assert!(u.is_valid());
        assert_eq!(u.orbits().len(), 2);
    }

    #[test]
    fn small_counts() {
        // 0: empty; 1: point; 2: two points, Z2
        let count = |n: usize| all_groupoids(n).len();
        assert_eq!(count(0), 1);
        assert_eq!(count(1), 2);
        assert_eq!(count(2), 4);
    }

    #[test]
    fn classes_up_to_four_are_pairwise_distinct() {
        let all = all_groupoids(4);
        for (i, a) in all.iter().enumerate() {
            assert!(a.is_valid());
            for b in &all[..i] {
                assert!(!isomorphic(a, b));
            }
        }
    }
}
