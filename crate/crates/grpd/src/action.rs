//! Left groupoid actions, their action groupoids, and the bridge to
//! actions of the relational monoid.

use std::sync::Arc;

use relcat::{check_action, FinSet, Rel, Report};

use crate::bridge::to_star_monoid;
use crate::error::GrpdError;
use crate::groupoid::FinGroupoid;

/// A left action of a groupoid on a finite set along a moment map.
#[derive(Debug, Clone)]
pub struct GroupoidAction {
    groupoid: FinGroupoid,
    space: Arc<FinSet>,
    moment: Vec<usize>,
    act: Vec<(usize, usize, usize)>,
    table: Vec<Option<usize>>,
}

impl GroupoidAction {
    /// Triples are `(g, n, g·n)`. Only index ranges are checked here.
    pub fn new(
        groupoid: FinGroupoid,
        space: Arc<FinSet>,
        moment: Vec<usize>,
        act: Vec<(usize, usize, usize)>,
    ) -> Result<Self, GrpdError> {
        if moment.len() != space.len() {
            return Err(GrpdError::Length { table: "moment", got: moment.len(), expected: space.len() });
        }
        let objs = groupoid.objects().len();
        if let Some(&index) = moment.iter().find(|&&x| x >= objs) {
            return Err(GrpdError::Dangling {
                table: "moment",
                index,
                set: groupoid.objects().id().into(),
                size: objs,
            });
        }
        let n = space.len();
        for &(g, p, q) in &act {
            if g >= groupoid.len() {
                return Err(GrpdError::Dangling {
                    table: "action",
                    index: g,
                    set: groupoid.arrows().id().into(),
                    size: groupoid.len(),
                });
            }
            if let Some(index) = [p, q].into_iter().find(|&x| x >= n) {
                return Err(GrpdError::Dangling { table: "action", index, set: space.id().into(), size: n });
            }
        }
        let mut act = act;
        act.sort_unstable();
        act.dedup();
        let mut table = vec![None; groupoid.len() * n];
        for &(g, p, q) in &act {
            table[g * n + p].get_or_insert(q);
        }
        Ok(Self { groupoid, space, moment, act, table })
    }

    /// Builds from a function defined where `r(g) = J(n)`.
    pub fn from_fn(
        groupoid: FinGroupoid,
        space: Arc<FinSet>,
        moment: Vec<usize>,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, GrpdError> {
        let mut act = Vec::new();
        for g in 0..groupoid.len() {
            for (p, &j) in moment.iter().enumerate() {
                if groupoid.src(g) == j {
                    act.push((g, p, f(g, p)));
                }
            }
        }
        Self::new(groupoid, space, moment, act)
    }

    /// A groupoid acting on its objects through the target map.
    pub fn on_base(g: &FinGroupoid) -> Self {
        let moment = (0..g.objects().len()).collect();
        Self::from_fn(g.clone(), g.objects().clone(), moment, |a, _| g.tgt(a)).expect("indices in range")
    }

    /// A groupoid acting on its arrows by left multiplication.
    pub fn on_arrows(g: &FinGroupoid) -> Self {
        let moment = g.targets().to_vec();
        Self::from_fn(g.clone(), g.arrows().clone(), moment, |a, b| g.mul(a, b).expect("composable"))
            .expect("indices in range")
    }

    pub fn groupoid(&self) -> &FinGroupoid {
        &self.groupoid
    }

    pub fn space(&self) -> &Arc<FinSet> {
        &self.space
    }

    pub fn moment(&self) -> &[usize] {
        &self.moment
    }

    pub fn triples(&self) -> &[(usize, usize, usize)] {
        &self.act
    }

    /// `g·n` if defined.
    pub fn act(&self, g: usize, n: usize) -> Option<usize> {
        self.table[g * self.space.len() + n]
    }

    /// Checks the action axioms one by one.
    pub fn validate(&self) -> Report {
        let g = &self.groupoid;
        let n = self.space.len();
        let mut rep = Report::new(format!("action of {} on {}", g.arrows().id(), self.space.id()));
        rep.absorb("groupoid", g.validate());
        let an = |a: usize| g.arrows().name(a);
        let pn = |p: usize| self.space.name(p);

        let mut w = None;
        for pair in self.act.windows(2) {
            if pair[0].0 == pair[1].0 && pair[0].1 == pair[1].1 {
                w = Some(vec![an(pair[0].0), pn(pair[0].1), "multi-valued".into()]);
                break;
            }
        }
        if w.is_none() {
            'dom: for a in 0..g.len() {
                for p in 0..n {
                    let defined = g.src(a) == self.moment[p];
                    if defined != self.act(a, p).is_some() {
                        let tag = if defined { "missing" } else { "extra" };
                        w = Some(vec![an(a), pn(p), tag.into()]);
                        break 'dom;
                    }
                }
            }
        }
        rep.record("action-domain", w);

        let w = self
            .act
            .iter()
            .find(|&&(a, _, q)| self.moment[q] != g.tgt(a))
            .map(|&(a, p, q)| vec![an(a), pn(p), pn(q)]);
        rep.record("moment-equivariance", w);
        let w = (0..n)
            .find(|&p| self.act(g.unit(self.moment[p]), p) != Some(p))
            .map(|p| vec![pn(p)]);
        rep.record("unit-acts-trivially", w);
        let mut w = None;
        'comp: for &(b, p, q) in &self.act {
            for a in 0..g.len() {
                if let (Some(ab), Some(r)) = (g.mul(a, b), self.act(a, q)) {
                    if self.act(ab, p) != Some(r) {
                        w = Some(vec![an(a), an(b), pn(p)]);
                        break 'comp;
                    }
                }
            }
        }
        rep.record("compatibility", w);
        rep
    }

    pub fn require_valid(&self) -> Result<(), GrpdError> {
        let rep = self.validate();
        if rep.passed() {
            Ok(())
        } else {
            Err(GrpdError::NotAnAction(rep.to_string()))
        }
    }

    /// Orbits of the action as sorted lists, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.space.len()];
        let mut out = Vec::new();
        for p in 0..self.space.len() {
            if seen[p] {
                continue;
            }
            let mut orbit: Vec<usize> = self.act.iter().filter(|t| t.1 == p).map(|t| t.2).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &q in &orbit {
                seen[q] = true;
            }
            out.push(orbit);
        }
        out
    }
}

fn pair_set(id: String, names: impl IntoIterator<Item = String>) -> Result<Arc<FinSet>, GrpdError> {
    FinSet::new(id, names.into_iter().collect()).map_err(|d| GrpdError::Shape(format!("duplicate element {d}")))
}

/// The action groupoid `G ×_M N ⇉ N`: arrows `(g, n)` with source `n` and
/// target `g·n`.
pub fn action_groupoid(a: &GroupoidAction) -> Result<FinGroupoid, GrpdError> {
    a.require_valid()?;
    let g = &a.groupoid;
    let ns = a.space.len();
    let arrows: Vec<(usize, usize)> = a.act.iter().map(|&(x, p, _)| (x, p)).collect();
    let index = |x: usize, p: usize| arrows.binary_search(&(x, p)).ok();
    let set = pair_set(
        format!("{}⋉{}", g.arrows().id(), a.space.id()),
        arrows.iter().map(|&(x, p)| format!("{};{}", g.arrows().name(x), a.space.name(p))),
    )?;
    let source: Vec<usize> = arrows.iter().map(|&(_, p)| p).collect();
    let target: Vec<usize> = a.act.iter().map(|t| t.2).collect();
    let unit: Vec<usize> = (0..ns).map(|p| index(g.unit(a.moment[p]), p).expect("unit acts")).collect();
    let inv: Vec<usize> = arrows
        .iter()
        .zip(&target)
        .map(|(&(x, _), &q)| index(g.inv(x), q).expect("inverse acts"))
        .collect();
    let mut comp = Vec::new();
    for (i, &(x, p)) in arrows.iter().enumerate() {
        for (j, &(y, q)) in arrows.iter().enumerate() {
            if p == target[j] {
                let xy = g.mul(x, y).expect("composable");
                comp.push((i, j, index(xy, q).expect("product acts")));
            }
        }
    }
    FinGroupoid::new(set, a.space.clone(), source, target, unit, comp, inv)
}

/// The action as a relation `arrows × space → space`.
pub fn action_bridge(a: &GroupoidAction) -> Rel {
    let dom = FinSet::product(a.groupoid.arrows(), &a.space);
    let n = a.space.len();
    Rel::graph(dom, a.space.clone(), |i| a.act(i / n, i % n))
}

/// Recovers an action from a relation `arrows × space → space`. The moment
/// of `q` is the unique object whose unit moves `q` to itself.
pub fn extract_action(g: &FinGroupoid, tau: &Rel) -> Result<GroupoidAction, GrpdError> {
    let (m, _) = to_star_monoid(g)?;
    let space = tau.dst().clone();
    if !FinSet::same(tau.src(), &FinSet::product(g.arrows(), &space)) {
        return Err(GrpdError::Shape(format!("{} is not {} × {}", tau.src().id(), g.arrows().id(), space.id())));
    }
    let rep = check_action(&m, tau).map_err(|e| GrpdError::Shape(e.to_string()))?;
    if !rep.passed() {
        return Err(GrpdError::NotAnAction(rep.to_string()));
    }
    let n = space.len();
    let mut moment = Vec::with_capacity(n);
    for q in 0..n {
        let fixers: Vec<usize> =
            (0..g.objects().len()).filter(|&x| tau.contains(g.unit(x) * n + q, q)).collect();
        match fixers[..] {
            [x] => moment.push(x),
            _ => return Err(GrpdError::Ambiguous { element: space.name(q), side: "moment" }),
        }
    }
    let act = tau.pairs().iter().map(|&(i, q)| (i / n, i % n, q)).collect();
    let out = GroupoidAction::new(g.clone(), space, moment, act)?;
    out.require_valid()?;
    Ok(out)
}
