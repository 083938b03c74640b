//! Isomorphism search for finite partial algebras: a carrier with colours,
//! total unary operations and partial binary operations.

use std::collections::BTreeMap;

use crate::groupoid::FinGroupoid;

/// A finite partial algebra. `binary[k][x * size + y]` is `x ∘_k y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialAlgebra {
    pub size: usize,
    pub colors: Vec<u64>,
    pub unary: Vec<Vec<usize>>,
    pub binary: Vec<Vec<Option<usize>>>,
}

impl PartialAlgebra {
    fn same_signature(&self, other: &Self) -> bool {
        self.size == other.size && self.unary.len() == other.unary.len() && self.binary.len() == other.binary.len()
    }

    /// One refinement signature per element, from the current colours.
    fn signature(&self, colors: &[usize], x: usize) -> Vec<usize> {
        let n = self.size;
        let mut sig = vec![colors[x]];
        for u in &self.unary {
            sig.push(colors[u[x]]);
            sig.push(usize::from(u[x] == x));
        }
        for b in &self.binary {
            let mut row: Vec<(usize, usize)> =
                (0..n).filter_map(|y| b[x * n + y].map(|z| (colors[y], colors[z]))).collect();
            let mut col: Vec<(usize, usize)> =
                (0..n).filter_map(|y| b[y * n + x].map(|z| (colors[y], colors[z]))).collect();
            row.sort_unstable();
            col.sort_unstable();
            sig.push(usize::MAX);
            sig.extend(row.into_iter().flat_map(|(a, b)| [a, b]));
            sig.push(usize::MAX);
            sig.extend(col.into_iter().flat_map(|(a, b)| [a, b]));
            sig.push(b[x * n + x].map_or(0, |z| 1 + usize::from(z == x)));
        }
        sig
    }
}

/// Jointly refines the colours of two algebras so that equal colours are a
/// necessary condition for being matched.
fn refine(a: &PartialAlgebra, b: &PartialAlgebra) -> (Vec<usize>, Vec<usize>) {
    let mut ids: BTreeMap<u64, usize> = BTreeMap::new();
    let mut start = |c: &[u64]| -> Vec<usize> {
        c.iter()
            .map(|&k| {
                let next = ids.len();
                *ids.entry(k).or_insert(next)
            })
            .collect()
    };
    let mut ca = start(&a.colors);
    let mut cb = start(&b.colors);
    loop {
        let sa: Vec<Vec<usize>> = (0..a.size).map(|x| a.signature(&ca, x)).collect();
        let sb: Vec<Vec<usize>> = (0..b.size).map(|x| b.signature(&cb, x)).collect();
        let mut table: BTreeMap<&Vec<usize>, usize> = BTreeMap::new();
        for s in sa.iter().chain(&sb) {
            let next = table.len();
            table.entry(s).or_insert(next);
        }
        let na: Vec<usize> = sa.iter().map(|s| table[s]).collect();
        let nb: Vec<usize> = sb.iter().map(|s| table[s]).collect();
        let classes = |c: &[usize]| c.iter().collect::<std::collections::BTreeSet<_>>().len();
        let done = classes(&na) == classes(&ca) && classes(&nb) == classes(&cb);
        ca = na;
        cb = nb;
        if done {
            return (ca, cb);
        }
    }
}

/// Whether `f` is an isomorphism from `a` to `b`.
pub fn is_isomorphism(a: &PartialAlgebra, b: &PartialAlgebra, f: &[usize]) -> bool {
    let n = a.size;
    if !a.same_signature(b) || f.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &y in f {
        if y >= n || std::mem::replace(&mut hit[y], true) {
            return false;
        }
    }
    (0..n).all(|x| a.colors[x] == b.colors[f[x]])
        && a.unary.iter().zip(&b.unary).all(|(u, v)| (0..n).all(|x| f[u[x]] == v[f[x]]))
        && a.binary.iter().zip(&b.binary).all(|(p, q)| {
            (0..n * n).all(|i| p[i].map(|z| f[z]) == q[f[i / n] * n + f[i % n]])
        })
}

struct Search<'a> {
    a: &'a PartialAlgebra,
    b: &'a PartialAlgebra,
    ca: Vec<usize>,
    cb: Vec<usize>,
    order: Vec<usize>,
}

impl Search<'_> {
    /// Assigns `x ↦ y` and everything it forces; `false` on a conflict.
    fn assign(&self, f: &mut [Option<usize>], g: &mut [Option<usize>], x: usize, y: usize) -> bool {
        let n = self.a.size;
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            match (f[x], g[y]) {
                (Some(fx), _) if fx == y => continue,
                (None, None) => {}
                _ => return false,
            }
            if self.ca[x] != self.cb[y] {
                return false;
            }
            f[x] = Some(y);
            g[y] = Some(x);
            for (u, v) in self.a.unary.iter().zip(&self.b.unary) {
                queue.push((u[x], v[y]));
            }
            for (p, q) in self.a.binary.iter().zip(&self.b.binary) {
                for (z, fz) in f.iter().enumerate() {
                    let Some(fz) = *fz else { continue };
                    for (l, r, fl, fr) in [(x, z, y, fz), (z, x, fz, y)] {
                        match (p[l * n + r], q[fl * n + fr]) {
                            (None, None) => {}
                            (Some(s), Some(t)) => queue.push((s, t)),
                            _ => return false,
                        }
                    }
                }
            }
        }
        true
    }

    fn run(&self, f: Vec<Option<usize>>, g: Vec<Option<usize>>) -> Option<Vec<usize>> {
        let Some(&x) = self.order.iter().find(|&&x| f[x].is_none()) else {
            return Some(f.into_iter().map(|y| y.expect("complete")).collect());
        };
        for y in 0..self.b.size {
            if g[y].is_some() || self.ca[x] != self.cb[y] {
                continue;
            }
            let (mut f2, mut g2) = (f.clone(), g.clone());
            if self.assign(&mut f2, &mut g2, x, y) {
                if let Some(done) = self.run(f2, g2) {
                    return Some(done);
                }
            }
        }
        None
    }
}

/// An isomorphism `a → b` as an index map, trying the identity first.
pub fn find_isomorphism(a: &PartialAlgebra, b: &PartialAlgebra) -> Option<Vec<usize>> {
    if !a.same_signature(b) {
        return None;
    }
    let id: Vec<usize> = (0..a.size).collect();
    if is_isomorphism(a, b, &id) {
        return Some(id);
    }
    let (ca, cb) = refine(a, b);
    let mut ka = ca.clone();
    let mut kb = cb.clone();
    ka.sort_unstable();
    kb.sort_unstable();
    if ka != kb {
        return None;
    }
    let mut size: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &ca {
        *size.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = (0..a.size).collect();
    order.sort_by_key(|&x| (size[&ca[x]], x));
    let s = Search { a, b, ca, cb, order };
    let found = s.run(vec![None; a.size], vec![None; a.size])?;
    debug_assert!(is_isomorphism(a, b, &found));
    Some(found)
}

/// A groupoid seen on its arrows: product, inverse, and the two unit maps.
pub fn groupoid_algebra(g: &FinGroupoid) -> PartialAlgebra {
    let n = g.len();
    PartialAlgebra {
        size: n,
        colors: (0..n).map(|a| u64::from(g.is_unit(a))).collect(),
        unary: vec![
            g.inverses().to_vec(),
            (0..n).map(|a| g.left_unit(a)).collect(),
            (0..n).map(|a| g.right_unit(a)).collect(),
        ],
        binary: vec![(0..n * n).map(|i| g.mul(i / n, i % n)).collect()],
    }
}

/// Arrow map of a groupoid isomorphism, if one exists.
pub fn groupoid_isomorphism(a: &FinGroupoid, b: &FinGroupoid) -> Option<Vec<usize>> {
    if a.objects().len() != b.objects().len() {
        return None;
    }
    find_isomorphism(&groupoid_algebra(a), &groupoid_algebra(b))
}

pub fn isomorphic(a: &FinGroupoid, b: &FinGroupoid) -> bool {
    groupoid_isomorphism(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::standard::{group, group_action, pair, trivial};
    use relcat::FinSet;

    #[test]
    fn groups_are_isomorphic_iff_tables_match() {
        let all = Group::all_up_to(8);
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate() {
                assert_eq!(isomorphic(&group(a), &group(b)), i == j, "{} vs {}", a.name(0), b.name(0));
            }
        }
    }

    #[test]
    fn relabelled_groupoid_is_found() {
        let z6 = Group::cyclic(6);
        let z2z3 = Group::product(&Group::cyclic(2), &Group::cyclic(3));
        let f = groupoid_isomorphism(&group(&z6), &group(&z2z3)).unwrap();
        assert!(is_isomorphism(&groupoid_algebra(&group(&z6)), &groupoid_algebra(&group(&z2z3)), &f));
    }

    #[test]
    fn free_transitive_action_groupoid_is_a_pair_groupoid() {
        let z3 = Group::cyclic(3);
        let act: Vec<usize> = (0..3).flat_map(|a| (0..3).map(move |b| (a + b) % 3)).collect();
        let ag = group_action(&z3, FinSet::of("N", ["0", "1", "2"]), &act).unwrap();
        assert!(isomorphic(&ag, &pair(&FinSet::of("M", ["a", "b", "c"]))));
        assert!(!isomorphic(&ag, &trivial(&FinSet::of("M", (0..9).map(|i| i.to_string())))));
    }
}
