//! The nerve of a groupoid as a simplicial object in the relation category.
//!
//! Level `n` holds composable strings `(g1, .., gn)` with `r(gi) = ℓ(gi+1)`,
//! read as paths through vertices `x0 = ℓ(g1), x1, .., xn = r(gn)`. The face
//! `d_i` deletes `x_i` and the degeneracy `s_i` inserts the unit at `x_i`.

use std::sync::Arc;

use relcat::{FinSet, Rel, SimplicialRel};

use crate::groupoid::FinGroupoid;

fn strings(g: &FinGroupoid, n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for s in &out {
            for a in 0..g.len() {
                if s.last().is_none_or(|&b| g.src(b) == g.tgt(a)) {
                    let mut t = s.clone();
                    t.push(a);
                    next.push(t);
                }
            }
        }
        out = next;
    }
    out
}

struct Level {
    set: Arc<FinSet>,
    items: Vec<Vec<usize>>,
}

impl Level {
    fn index(&self, s: &[usize]) -> usize {
        self.items.binary_search_by(|t| t.as_slice().cmp(s)).expect("string is in its level")
    }
}

fn levels(g: &FinGroupoid, depth: usize) -> Vec<Level> {
    (0..=depth)
        .map(|n| match n {
            0 => Level { set: g.objects().clone(), items: (0..g.objects().len()).map(|x| vec![x]).collect() },
            1 => Level { set: g.arrows().clone(), items: (0..g.len()).map(|a| vec![a]).collect() },
            _ => {
                let items = strings(g, n);
                let names = items
                    .iter()
                    .map(|s| s.iter().map(|&a| g.arrows().name(a)).collect::<Vec<_>>().join(";"))
                    .collect();
                let set = FinSet::new(format!("N{n}({})", g.arrows().id()), names).expect("strings are distinct");
                Level { set, items }
            }
        })
        .collect()
}

fn face(g: &FinGroupoid, s: &[usize], i: usize) -> Vec<usize> {
    let n = s.len();
    match (n, i) {
        (1, 0) => vec![g.src(s[0])],
        (1, _) => vec![g.tgt(s[0])],
        (_, 0) => s[1..].to_vec(),
        _ if i == n => s[..n - 1].to_vec(),
        _ => {
            let mut t = s[..i - 1].to_vec();
            t.push(g.mul(s[i - 1], s[i]).expect("composable"));
            t.extend_from_slice(&s[i + 1..]);
            t
        }
    }
}

fn degeneracy(g: &FinGroupoid, s: &[usize], i: usize, n: usize) -> Vec<usize> {
    if n == 0 {
        return vec![g.unit(s[0])];
    }
    let x = if i == 0 { g.tgt(s[0]) } else { g.src(s[i - 1]) };
    let mut t = s[..i].to_vec();
    t.push(g.unit(x));
    t.extend_from_slice(&s[i..]);
    t
}

/// Nerve up to level `depth`.
pub fn nerve(g: &FinGroupoid, depth: usize) -> SimplicialRel {
    let lv = levels(g, depth);
    let map = |from: &Level, to: &Level, f: &dyn Fn(&[usize]) -> Vec<usize>| {
        Rel::graph(from.set.clone(), to.set.clone(), |k| Some(to.index(&f(&from.items[k]))))
    };
    let faces = (0..=depth)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            (0..=n).map(|i| map(&lv[n], &lv[n - 1], &|s| face(g, s, i))).collect()
        })
        .collect();
    let degeneracies = (0..depth)
        .map(|n| (0..=n).map(|i| map(&lv[n], &lv[n + 1], &|s| degeneracy(g, s, i, n))).collect())
        .collect();
    SimplicialRel { levels: lv.into_iter().map(|l| l.set).collect(), faces, degeneracies }
}

/// The star on the nerve: `(g1, .., gn) ↦ (gn⁻¹, .., g1⁻¹)`, identity on
/// objects.
pub fn nerve_star(g: &FinGroupoid, depth: usize) -> Vec<Rel> {
    let lv = levels(g, depth);
    lv.iter()
        .enumerate()
        .map(|(n, l)| {
            if n == 0 {
                return Rel::identity(&l.set);
            }
            Rel::graph(l.set.clone(), l.set.clone(), |k| {
                let rev: Vec<usize> = l.items[k].iter().rev().map(|&a| g.inv(a)).collect();
                Some(l.index(&rev))
            })
        })
        .collect()
}
