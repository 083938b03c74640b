//! Enumeration of small double groupoids.
//!
//! A double groupoid is fixed by its two structures on the squares: the
//! sides are read off the unit squares. So every double arises by taking a
//! horizontal structure `A` from the list of groupoid types and laying a
//! vertical type `B` over the same squares through a bijection. The
//! bijection is found by backtracking with closure pruning; swapping
//! identical components of `A` is factored out by requiring that they are
//! first used in order. Isomorphic results are merged afterwards.

use std::collections::BTreeMap;
use std::ops::Range;

use grpd::{all_groupoids, FinGroupoid};

use crate::double::FinDoubleGroupoid;
use crate::reconstruct::{double_isomorphism, from_structures};

/// Pairs of groupoid types with the same number of arrows, within the
/// bounds on squares and on side arrows.
pub fn structure_pairs(max_squares: usize, max_side: usize) -> Vec<(FinGroupoid, FinGroupoid)> {
    let types: Vec<FinGroupoid> =
        all_groupoids(max_squares).into_iter().filter(|g| !g.is_empty() && g.objects().len() <= max_side).collect();
    let mut out = Vec::new();
    for a in &types {
        for b in types.iter().filter(|b| b.len() == a.len()) {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

/// Arrow ranges of the connected components, when they are contiguous.
fn components(g: &FinGroupoid) -> Option<Vec<Range<usize>>> {
    let mut out: Vec<Range<usize>> = Vec::new();
    let orbit_of = {
        let mut o = vec![0; g.objects().len()];
        for (k, orbit) in g.orbits().iter().enumerate() {
            for &x in orbit {
                o[x] = k;
            }
        }
        o
    };
    let mut current = None;
    for a in 0..g.len() {
        let k = orbit_of[g.tgt(a)];
        if current != Some(k) {
            if out.iter().any(|r| orbit_of[g.tgt(r.start)] == k) {
                return None;
            }
            out.push(a..a);
            current = Some(k);
        }
        out.last_mut().expect("pushed").end = a + 1;
    }
    Some(out)
}

/// Whether two components carry the same tables up to the index shift.
fn same_component(g: &FinGroupoid, r: &Range<usize>, s: &Range<usize>) -> bool {
    if r.len() != s.len() {
        return false;
    }
    let shift = |x: usize| x - r.start + s.start;
    r.clone().all(|a| {
        g.inv(shift(a)) == shift(g.inv(a))
            && g.is_unit(a) == g.is_unit(shift(a))
            && r.clone().all(|b| g.mul(shift(a), shift(b)) == g.mul(a, b).map(shift))
    })
}

struct Search<'a> {
    a: &'a FinGroupoid,
    b: &'a FinGroupoid,
    /// vertical arrows in assignment order: units first
    order: Vec<usize>,
    /// component of each square, and the identical component before it
    comp_of: Vec<usize>,
    twin_before: Vec<Option<usize>>,
    /// for identical vertical components: the earlier-placed of a pair of
    /// matching arrows must land on the smaller square
    ordered: Vec<(usize, usize)>,
    unit_count: usize,
}

struct State {
    image: Vec<Option<usize>>,
    preimage: Vec<Option<usize>>,
    touched: Vec<usize>,
}

impl Search<'_> {
    fn is_h_unit(&self, x: usize) -> bool {
        self.a.is_unit(x)
    }

    /// Vertical product of placed squares: `None` while unknown,
    /// `Some(None)` when undefined.
    fn v_mul(&self, st: &State, x: usize, y: usize) -> Option<Option<usize>> {
        let (p, q) = (st.preimage[x]?, st.preimage[y]?);
        match self.b.mul(p, q) {
            None => Some(None),
            Some(r) => st.image[r].map(Some),
        }
    }

    /// Checks that only involve squares already placed.
    fn consistent(&self, st: &State, placed: usize, x: usize) -> bool {
        let (a, b) = (self.a, self.b);
        let img = |v: usize| st.image[v];
        for &(u, w) in &self.ordered {
            if w == placed && img(u).is_some_and(|y| y > x) {
                return false;
            }
        }
        // horizontal units form a vertical subgroupoid
        if self.is_h_unit(x) {
            for e in [b.left_unit(placed), b.right_unit(placed), b.inv(placed)] {
                if img(e).is_some_and(|y| !self.is_h_unit(y)) {
                    return false;
                }
            }
        }
        if img(b.inv(placed)).is_some_and(|y| self.is_h_unit(y) != self.is_h_unit(x)) {
            return false;
        }
        // vertical products of horizontal units stay horizontal units
        for p in 0..b.len() {
            if img(p).is_none() {
                continue;
            }
            for (l, r) in [(placed, p), (p, placed)] {
                let Some(c) = b.mul(l, r).and_then(img) else { continue };
                if self.is_h_unit(img(l).expect("placed")) && self.is_h_unit(img(r).expect("placed")) && !self.is_h_unit(c)
                {
                    return false;
                }
            }
        }
        // interchange on fully placed quadruples that involve x
        let placed_sq: Vec<usize> = (0..a.len()).filter(|&s| st.preimage[s].is_some()).collect();
        for &p in &placed_sq {
            for &q in &placed_sq {
                let Some(pq) = a.mul(p, q) else { continue };
                for &r in &placed_sq {
                    for &s in &placed_sq {
                        if ![p, q, r, s].contains(&x) {
                            continue;
                        }
                        let Some(rs) = a.mul(r, s) else { continue };
                        let (Some(Some(pr)), Some(Some(qs))) = (self.v_mul(st, p, r), self.v_mul(st, q, s)) else {
                            continue;
                        };
                        let Some(rhs) = a.mul(pr, qs) else { return false };
                        match self.v_mul(st, pq, rs) {
                            Some(None) => return false,
                            Some(Some(l)) if l != rhs => return false,
                            _ => {}
                        }
                    }
                }
            }
        }
        true
    }

    /// Checks on the full set of vertical units once it is placed.
    fn units_closed(&self, st: &State) -> bool {
        let a = self.a;
        let is_v = |x: usize| st.preimage[x].is_some_and(|p| self.b.is_unit(p));
        (0..a.len()).filter(|&x| is_v(x)).all(|x| {
            is_v(a.left_unit(x))
                && is_v(a.right_unit(x))
                && is_v(a.inv(x))
                && (0..a.len()).filter(|&y| is_v(y)).all(|y| a.mul(x, y).is_none_or(is_v))
        })
    }

    fn run(&self, st: &mut State, depth: usize, out: &mut Vec<FinDoubleGroupoid>) {
        if depth == self.order.len() {
            if let Some(d) = self.build(st) {
                out.push(d);
            }
            return;
        }
        if depth == self.unit_count && !self.units_closed(st) {
            return;
        }
        let v = self.order[depth];
        for x in 0..self.a.len() {
            if st.preimage[x].is_some() {
                continue;
            }
            let c = self.comp_of[x];
            if st.touched[c] == 0 && self.twin_before[c].is_some_and(|t| st.touched[t] == 0) {
                continue;
            }
            st.image[v] = Some(x);
            st.preimage[x] = Some(v);
            st.touched[c] += 1;
            if self.consistent(st, v, x) {
                self.run(st, depth + 1, out);
            }
            st.touched[c] -= 1;
            st.preimage[x] = None;
            st.image[v] = None;
        }
    }

    fn build(&self, st: &State) -> Option<FinDoubleGroupoid> {
        let (a, b) = (self.a, self.b);
        let img = |v: usize| st.image[v].expect("complete");
        let pre = |x: usize| st.preimage[x].expect("complete");
        let n = a.len();
        let vertical = FinGroupoid::new(
            a.arrows().clone(),
            b.objects().clone(),
            (0..n).map(|x| b.src(pre(x))).collect(),
            (0..n).map(|x| b.tgt(pre(x))).collect(),
            b.units().iter().map(|&u| img(u)).collect(),
            b.comp().iter().map(|&(p, q, r)| (img(p), img(q), img(r))).collect(),
            (0..n).map(|x| img(b.inv(pre(x)))).collect(),
        )
        .ok()?;
        from_structures(a, &vertical).ok()
    }
}

/// Every valid double whose horizontal structure is `a` and whose vertical
/// structure is isomorphic to `b`. Not yet merged up to isomorphism.
pub fn doubles_over(a: &FinGroupoid, b: &FinGroupoid) -> Vec<FinDoubleGroupoid> {
    if a.len() != b.len() {
        return Vec::new();
    }
    let comps = components(a).unwrap_or_else(|| std::iter::once(0..a.len()).collect());
    let mut comp_of = vec![0; a.len()];
    for (k, r) in comps.iter().enumerate() {
        for x in r.clone() {
            comp_of[x] = k;
        }
    }
    let twin_before =
        (0..comps.len()).map(|k| (k > 0 && same_component(a, &comps[k - 1], &comps[k])).then(|| k - 1)).collect();
    let mut order: Vec<usize> = b.units().to_vec();
    order.extend((0..b.len()).filter(|v| !b.is_unit(*v)));
    let mut position = vec![0; b.len()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut ordered = Vec::new();
    if let Some(bc) = components(b) {
        for k in 1..bc.len() {
            if same_component(b, &bc[k - 1], &bc[k]) {
                let (r, s) = (&bc[k - 1], &bc[k]);
                let twin = |v: usize| if r.contains(&v) { v - r.start + s.start } else { v - s.start + r.start };
                let first = r.clone().chain(s.clone()).min_by_key(|&v| position[v]).expect("nonempty");
                ordered.push((first, twin(first)));
            }
        }
    }
    let search = Search { a, b, order, comp_of, twin_before, ordered, unit_count: b.units().len() };
    let mut st =
        State { image: vec![None; b.len()], preimage: vec![None; a.len()], touched: vec![0; comps.len()] };
    let mut out = Vec::new();
    search.run(&mut st, 0, &mut out);
    out
}

/// Sizes that isomorphic doubles share; used to bucket before searching.
fn fingerprint(d: &FinDoubleGroupoid) -> (usize, usize, usize, usize, usize, usize) {
    let h_units = d.hstruct().units().len();
    let v_units = d.vstruct().units().len();
    let h_comp = d.hstruct().comp().len();
    let v_comp = d.vstruct().comp().len();
    (d.len(), h_units, v_units, d.base().len(), h_comp, v_comp)
}

/// Keeps the first double of each isomorphism class, preserving order.
pub fn merge_isomorphic(doubles: Vec<FinDoubleGroupoid>) -> Vec<FinDoubleGroupoid> {
    let mut buckets: BTreeMap<_, Vec<usize>> = BTreeMap::new();
    let mut kept: Vec<FinDoubleGroupoid> = Vec::new();
    for d in doubles {
        let bucket = buckets.entry(fingerprint(&d)).or_default();
        if bucket.iter().any(|&k| double_isomorphism(&kept[k], &d).is_some()) {
            continue;
        }
        bucket.push(kept.len());
        kept.push(d);
    }
    kept
}

/// Every double groupoid with at most `max_squares` squares and at most
/// `max_side` arrows on each side, one per isomorphism class, in a
/// deterministic order.
pub fn all_doubles(max_squares: usize, max_side: usize) -> Vec<FinDoubleGroupoid> {
    let found = structure_pairs(max_squares, max_side).iter().flat_map(|(a, b)| doubles_over(a, b)).collect();
    merge_isomorphic(found)
}

#[cfg(test)]
mod tests {
    use grpd::{group, Group};

    use super::*;
    use crate::examples::{example_dinertia, example_dmain};
    use crate::reconstruct::isomorphic_up_to_transpose;

    #[test]
    fn one_square_double_is_the_only_one_of_size_one() {
        let all = all_doubles(1, 1);
        assert_eq!(all.len(), 1);
        assert!(all[0].is_valid());
    }

    #[test]
    fn fixtures_appear_in_the_enumeration() {
        let all = all_doubles(4, 4);
        let z2 = group(&Group::cyclic(2));
        for d in [example_dmain(&z2).unwrap(), example_dinertia(&z2).unwrap()] {
            assert!(all.iter().any(|e| double_isomorphism(&d, e).is_some()));
            assert!(all.iter().any(|e| double_isomorphism(&d.transpose(), e).is_some()));
        }
        for (i, d) in all.iter().enumerate() {
            assert!(d.is_valid());
            for e in &all[i + 1..] {
                assert!(double_isomorphism(d, e).is_none());
            }
        }
    }

    #[test]
    fn transpose_closed() {
        let all = all_doubles(4, 4);
        for d in &all {
            assert!(all.iter().any(|e| double_isomorphism(&d.transpose(), e).is_some()));
            assert!(isomorphic_up_to_transpose(d, d));
        }
    }

    #[test]
    fn group_pairs_commute() {
        // both structures groups over one square each way: only abelian
        // groups with the two products equal survive
        let z2 = group(&Group::cyclic(2));
        assert_eq!(merge_isomorphic(doubles_over(&z2, &z2)).len(), 1);
        let s3 = group(&Group::symmetric3());
        assert!(doubles_over(&s3, &s3).is_empty());
    }
}
