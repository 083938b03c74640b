//! Bibundles between finite groupoids and their principality.

use std::sync::Arc;

use relcat::{FinSet, Report};

use crate::action::GroupoidAction;
use crate::error::GrpdError;
use crate::groupoid::FinGroupoid;
use crate::standard::group;

/// A set with a left action of `left` and a right action of `right`.
/// The right action is stored as the left action `h ▷ b = b·h⁻¹`.
#[derive(Debug, Clone)]
pub struct Bibundle {
    left: GroupoidAction,
    right: GroupoidAction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Principality {
    pub left_principal: bool,
    pub right_principal: bool,
    pub biprincipal: bool,
}

impl Bibundle {
    /// Left triples are `(g, b, g·b)`, right triples `(b, h, b·h)`.
    pub fn new(
        left: FinGroupoid,
        right: FinGroupoid,
        total: Arc<FinSet>,
        left_moment: Vec<usize>,
        right_moment: Vec<usize>,
        left_act: Vec<(usize, usize, usize)>,
        right_act: Vec<(usize, usize, usize)>,
    ) -> Result<Self, GrpdError> {
        if let Some(&(_, index, _)) = right_act.iter().find(|t| t.1 >= right.len()) {
            return Err(GrpdError::Dangling {
                table: "right action",
                index,
                set: right.arrows().id().into(),
                size: right.len(),
            });
        }
        let flipped = right_act.iter().map(|&(b, h, c)| (right.inv(h), b, c)).collect();
        Ok(Self {
            left: GroupoidAction::new(left, total.clone(), left_moment, left_act)?,
            right: GroupoidAction::new(right, total, right_moment, flipped)?,
        })
    }

    /// A groupoid acting on its own arrows from both sides.
    pub fn identity(g: &FinGroupoid) -> Self {
        let n = g.len();
        let mut right_act = Vec::new();
        for b in 0..n {
            for h in 0..n {
                if let Some(c) = g.mul(b, h) {
                    right_act.push((b, h, c));
                }
            }
        }
        let left_act = right_act.clone();
        Self::new(g.clone(), g.clone(), g.arrows().clone(), g.targets().to_vec(), g.sources().to_vec(), left_act, right_act)
            .expect("indices in range")
    }

    /// Arrows ending at `x`, between the groupoid and its isotropy group at
    /// `x`.
    pub fn to_isotropy(g: &FinGroupoid, x: usize) -> Result<Self, GrpdError> {
        let iso = g.isotropy(x)?;
        let loops = g.isotropy_arrows(x);
        let h = group(&iso);
        let total: Vec<usize> = (0..g.len()).filter(|&a| g.src(a) == x).collect();
        let pos = |a: usize| total.binary_search(&a).expect("arrow into x");
        let set = FinSet::new(format!("{}→{}", g.arrows().id(), g.objects().name(x)), total.iter().map(|&a| g.arrows().name(a)).collect())
            .expect("arrow names are distinct");
        let mut left_act = Vec::new();
        for a in 0..g.len() {
            for (i, &b) in total.iter().enumerate() {
                if let Some(c) = g.mul(a, b) {
                    left_act.push((a, i, pos(c)));
                }
            }
        }
        let mut right_act = Vec::new();
        for (i, &b) in total.iter().enumerate() {
            for (k, &l) in loops.iter().enumerate() {
                right_act.push((i, k, pos(g.mul(b, l).expect("loop at x"))));
            }
        }
        let left_moment = total.iter().map(|&a| g.tgt(a)).collect();
        Self::new(g.clone(), h, set, left_moment, vec![0; total.len()], left_act, right_act)
    }

    pub fn total(&self) -> &Arc<FinSet> {
        self.left.space()
    }

    pub fn left_action(&self) -> &GroupoidAction {
        &self.left
    }

    /// The right action in its stored left form `h ▷ b = b·h⁻¹`.
    pub fn right_action(&self) -> &GroupoidAction {
        &self.right
    }

    /// `b·h` if defined.
    pub fn act_right(&self, b: usize, h: usize) -> Option<usize> {
        self.right.act(self.right.groupoid().inv(h), b)
    }

    /// Copy with the right action emptied; for failure tests.
    pub fn without_right_action(&self) -> Self {
        let right = GroupoidAction::new(
            self.right.groupoid().clone(),
            self.total().clone(),
            self.right.moment().to_vec(),
            Vec::new(),
        )
        .expect("no triples");
        Self { left: self.left.clone(), right }
    }

    /// Both actions, commutation, and invariance of each moment under the
    /// other action.
    pub fn validate(&self) -> Report {
        let mut rep = Report::new(format!("bibundle on {}", self.total().id()));
        rep.absorb("left", self.left.validate());
        rep.absorb("right", self.right.validate());
        let name = |b: usize| self.total().name(b);
        let lg = self.left.groupoid();
        let rg = self.right.groupoid();
        let (jl, jr) = (self.left.moment(), self.right.moment());
        let w = self
            .left
            .triples()
            .iter()
            .find(|&&(_, b, c)| jr[b] != jr[c])
            .map(|&(g, b, _)| vec![lg.arrows().name(g), name(b)]);
        rep.record("right-moment-invariant", w);
        let w = self
            .right
            .triples()
            .iter()
            .find(|&&(_, b, c)| jl[b] != jl[c])
            .map(|&(h, b, _)| vec![name(b), rg.arrows().name(rg.inv(h))]);
        rep.record("left-moment-invariant", w);
        let mut w = None;
        'outer: for &(g, b, gb) in self.left.triples() {
            for h in 0..rg.len() {
                let Some(bh) = self.act_right(b, h) else { continue };
                let lhs = self.act_right(gb, h);
                let rhs = self.left.act(g, bh);
                if lhs.is_none() || lhs != rhs {
                    w = Some(vec![lg.arrows().name(g), name(b), rg.arrows().name(h)]);
                    break 'outer;
                }
            }
        }
        rep.record("actions-commute", w);
        rep
    }
}

/// `principal` acts freely and transitively on the fibres of `other`'s moment,
/// which must be surjective.
fn principal(principal: &GroupoidAction, other: &GroupoidAction) -> bool {
    let g = principal.groupoid();
    let m = other.moment();
    let objs = other.groupoid().objects().len();
    let surjective = (0..objs).all(|x| m.contains(&x));
    let free = principal.triples().iter().all(|&(a, b, c)| b != c || g.is_unit(a));
    let transitive = (0..m.len()).all(|b| {
        (0..m.len()).filter(|&c| m[c] == m[b]).all(|c| principal.triples().iter().any(|t| t.1 == b && t.2 == c))
    });
    surjective && free && transitive
}

/// Principality flags; errors when the bibundle axioms fail.
pub fn bibundle_check(b: &Bibundle) -> Result<Principality, GrpdError> {
    let rep = b.validate();
    if !rep.passed() {
        return Err(GrpdError::NotAnAction(rep.to_string()));
    }
    let right_principal = principal(&b.right, &b.left);
    let left_principal = principal(&b.left, &b.right);
    Ok(Principality { left_principal, right_principal, biprincipal: left_principal && right_principal })
}

/// For a biprincipal bibundle: the induced map on orbits is a bijection and
/// matched orbits have isomorphic isotropy groups.
pub fn morita_invariants_agree(b: &Bibundle) -> Result<bool, GrpdError> {
    let (lg, rg) = (b.left.groupoid(), b.right.groupoid());
    let (lo, ro) = (lg.orbits(), rg.orbits());
    let orbit_of = |orbits: &[Vec<usize>], x: usize| orbits.iter().position(|o| o.contains(&x)).expect("partition");
    let mut pairing: Vec<Option<usize>> = vec![None; lo.len()];
    let mut back: Vec<Option<usize>> = vec![None; ro.len()];
    for t in 0..b.total().len() {
        let (x, y) = (b.left.moment()[t], b.right.moment()[t]);
        let (i, j) = (orbit_of(&lo, x), orbit_of(&ro, y));
        if *pairing[i].get_or_insert(j) != j || *back[j].get_or_insert(i) != i {
            return Ok(false);
        }
        if !lg.isotropy(x)?.isomorphic(&rg.isotropy(y)?) {
            return Ok(false);
        }
    }
    Ok(pairing.iter().all(Option::is_some) && back.iter().all(Option::is_some))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::standard::{group_action, pair};

    #[test]
    fn self_bibundle_is_biprincipal() {
        for g in [pair(&FinSet::of("M", ["1", "2"])), group(&Group::symmetric3())] {
            let b = Bibundle::identity(&g);
            assert!(bibundle_check(&b).unwrap().biprincipal);
            assert!(morita_invariants_agree(&b).unwrap());
        }
    }

    #[test]
    fn transitive_groupoid_is_morita_equivalent_to_isotropy() {
        let g = pair(&FinSet::of("M", ["1", "2"]));
        let b = Bibundle::to_isotropy(&g, 0).unwrap();
        assert_eq!(b.total().len(), 2);
        let p = bibundle_check(&b).unwrap();
        assert!(p.left_principal && p.right_principal && p.biprincipal);
        assert!(morita_invariants_agree(&b).unwrap());
    }

    #[test]
    fn action_groupoid_with_isotropy() {
        // Z2 fixing a point and swapping two others has two orbits
        let z2 = Group::cyclic(2);
        let g = group_action(&z2, FinSet::of("N", ["a", "b", "c"]), &[0, 1, 2, 0, 2, 1]).unwrap();
        assert_eq!(g.orbits().len(), 2);
        let b = Bibundle::identity(&g);
        assert!(bibundle_check(&b).unwrap().biprincipal);
    }

    #[test]
    fn emptied_right_action_is_not_right_principal() {
        let g = pair(&FinSet::of("M", ["1", "2"]));
        let b = Bibundle::to_isotropy(&g, 0).unwrap().without_right_action();
        // an empty action of a nonempty groupoid is not an action at all
        assert!(bibundle_check(&b).is_err());
        let p = super::principal(b.right_action(), b.left_action());
        assert!(!p);
    }
}
