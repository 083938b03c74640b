//! Finite group tables and the small groups used as fixtures.

use std::sync::Arc;

use relcat::FinSet;

use crate::error::GrpdError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    set: Arc<FinSet>,
    mul: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
}

impl Group {
    /// Builds a group from a row-major multiplication table, checking the
    /// group axioms.
    pub fn from_table(set: Arc<FinSet>, mul: Vec<usize>) -> Result<Self, GrpdError> {
        let n = set.len();
        if n == 0 {
            return Err(GrpdError::NotAGroup("empty carrier".into()));
        }
        if mul.len() != n * n || mul.iter().any(|&x| x >= n) {
            return Err(GrpdError::NotAGroup("table shape".into()));
        }
        let at = |a: usize, b: usize| mul[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or_else(|| GrpdError::NotAGroup("no identity".into()))?;
        let inv = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| at(a, b) == identity && at(b, a) == identity)
                    .ok_or_else(|| GrpdError::NotAGroup(format!("{} has no inverse", set.name(a))))
            })
            .collect::<Result<Vec<_>, _>>()?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(GrpdError::NotAGroup(format!(
                            "({},{},{}) not associative",
                            set.name(a),
                            set.name(b),
                            set.name(c)
                        )));
                    }
                }
            }
        }
        Ok(Self { set, mul, identity, inv })
    }

    fn build(id: &str, names: Vec<String>, n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let set = FinSet::new(id, names).expect("distinct names");
        let mul = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self::from_table(set, mul).expect("valid group")
    }

    /// Integers mod `n` under addition.
    pub fn cyclic(n: usize) -> Self {
        Self::build(&format!("Z{n}"), (0..n).map(|i| i.to_string()).collect(), n, |a, b| (a + b) % n)
    }

    /// Symmetries of a regular `n`-gon; rotations `r*` then reflections `s*`.
    pub fn dihedral(n: usize) -> Self {
        let names = (0..n).map(|i| format!("r{i}")).chain((0..n).map(|i| format!("s{i}"))).collect();
        // r_i = rotation by i, s_i = r_i s_0, with s_0 r_j = r_{-j} s_0.
        Self::build(&format!("D{n}"), names, 2 * n, |a, b| {
            let (fa, ia) = (a >= n, a % n);
            let (fb, ib) = (b >= n, b % n);
            let rot = if fa { (ia + n - ib) % n } else { (ia + ib) % n };
            rot + if fa != fb { n } else { 0 }
        })
    }

    /// The symmetric group on three letters, as the dihedral group of order 6.
    pub fn symmetric3() -> Self {
        let mut g = Self::dihedral(3);
        g.set = FinSet::new("S3", g.set.names()).expect("distinct");
        g
    }

    /// The quaternion group of order 8.
    pub fn quaternion() -> Self {
        // Elements ±1, ±i, ±j, ±k encoded as (sign, unit) with unit in 1,i,j,k.
        let names = ["1", "i", "j", "k"]
            .iter()
            .flat_map(|u| [u.to_string(), format!("-{u}")])
            .collect();
        let unit_mul = |a: usize, b: usize| -> (bool, usize) {
            match (a, b) {
                (0, x) | (x, 0) => (false, x),
                (x, y) if x == y => (true, 0),
                (1, 2) => (false, 3),
                (2, 3) => (false, 1),
                (3, 1) => (false, 2),
                (2, 1) => (true, 3),
                (3, 2) => (true, 1),
                (1, 3) => (true, 2),
                _ => unreachable!(),
            }
        };
        Self::build("Q8", names, 8, |a, b| {
            let (neg, u) = unit_mul(a / 2, b / 2);
            let sign = (a % 2 == 1) ^ (b % 2 == 1) ^ neg;
            u * 2 + usize::from(sign)
        })
    }

    pub fn product(a: &Group, b: &Group) -> Self {
        let (n, m) = (a.order(), b.order());
        let names = (0..n * m).map(|k| format!("({},{})", a.name(k / m), b.name(k % m))).collect();
        Self::build(&format!("{}x{}", a.set.id(), b.set.id()), names, n * m, |x, y| {
            a.mul(x / m, y / m) * m + b.mul(x % m, y % m)
        })
    }

    /// One representative of every isomorphism class of groups of order at
    /// most `max` (supported up to 8).
    pub fn all_up_to(max: usize) -> Vec<Group> {
        assert!(max <= 8, "group classification table stops at order 8");
        let z = Group::cyclic;
        let mut out = vec![z(1)];
        let by_order: [Vec<Group>; 8] = [
            vec![],
            vec![z(2)],
            vec![z(3)],
            vec![z(4), Group::product(&z(2), &z(2))],
            vec![z(5)],
            vec![z(6), Group::symmetric3()],
            vec![z(7)],
            vec![
                z(8),
                Group::product(&z(4), &z(2)),
                Group::product(&Group::product(&z(2), &z(2)), &z(2)),
                Group::dihedral(4),
                Group::quaternion(),
            ],
        ];
        for (k, gs) in by_order.into_iter().enumerate() {
            if k < max && k >= 1 {
                out.extend(gs);
            }
        }
        out
    }

    pub fn set(&self) -> &Arc<FinSet> {
        &self.set
    }

    pub fn order(&self) -> usize {
        self.set.len()
    }

    pub fn name(&self, a: usize) -> String {
        self.set.name(a)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Order of an element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Sorted multiset of element orders; an isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order()).map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    /// Whether some bijection `0..n` carries this table onto the other.
    pub fn isomorphic(&self, other: &Group) -> bool {
        let n = self.order();
        if n != other.order() || self.order_profile() != other.order_profile() {
            return false;
        }
        let mut phi = vec![usize::MAX; n];
        let mut used = vec![false; n];
        phi[self.identity] = other.identity;
        used[other.identity] = true;
        self.extend_iso(other, &mut phi, &mut used)
    }

    fn extend_iso(&self, other: &Group, phi: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let n = self.order();
        // Close under products of mapped elements first.
        let snapshot = (phi.clone(), used.clone());
        let mut changed = true;
        while changed {
            changed = false;
            for a in 0..n {
                for b in 0..n {
                    if phi[a] == usize::MAX || phi[b] == usize::MAX {
                        continue;
                    }
                    let (c, d) = (self.mul(a, b), other.mul(phi[a], phi[b]));
                    if phi[c] == usize::MAX {
                        if used[d] {
                            *phi = snapshot.0;
                            *used = snapshot.1;
                            return false;
                        }
                        phi[c] = d;
                        used[d] = true;
                        changed = true;
                    } else if phi[c] != d {
                        *phi = snapshot.0;
                        *used = snapshot.1;
                        return false;
                    }
                }
            }
        }
        let Some(a) = (0..n).find(|&a| phi[a] == usize::MAX) else {
            return true;
        };
        let oa = self.element_order(a);
        for b in 0..n {
            if !used[b] && other.element_order(b) == oa {
                phi[a] = b;
                used[b] = true;
                if self.extend_iso(other, phi, used) {
                    return true;
                }
                phi[a] = usize::MAX;
                used[b] = false;
            }
        }
        *phi = snapshot.0;
        *used = snapshot.1;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups_are_pairwise_non_isomorphic() {
        let gs = Group::all_up_to(8);
        assert_eq!(gs.len(), 14);
        for (i, a) in gs.iter().enumerate() {
            for (j, b) in gs.iter().enumerate() {
                assert_eq!(a.isomorphic(b), i == j, "{} vs {}", a.set().id(), b.set().id());
            }
        }
    }

    #[test]
    fn quaternion_and_dihedral_are_nonabelian() {
        assert!(!Group::quaternion().is_abelian());
        assert!(!Group::dihedral(4).is_abelian());
        assert!(!Group::symmetric3().is_abelian());
        assert!(Group::product(&Group::cyclic(2), &Group::cyclic(4)).is_abelian());
    }

    #[test]
    fn z6_is_z2_times_z3() {
        assert!(Group::cyclic(6).isomorphic(&Group::product(&Group::cyclic(2), &Group::cyclic(3))));
    }

    #[test]
    fn bad_table_rejected() {
        let set = FinSet::of("X", ["a", "b"]);
        assert!(Group::from_table(set, vec![0, 0, 0, 0]).is_err());
    }
}
