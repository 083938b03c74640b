//! Finite groupoids stored as explicit tables.
//!
//! Arrows compose right to left: `gh` is defined when `r(g) = ℓ(h)`, with
//! `ℓ(gh) = ℓ(g)` and `r(gh) = r(h)`.

use std::sync::Arc;

use relcat::{FinSet, Report};

use crate::error::GrpdError;
use crate::group::Group;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinGroupoid {
    arrows: Arc<FinSet>,
    objects: Arc<FinSet>,
    source: Vec<usize>,
    target: Vec<usize>,
    unit: Vec<usize>,
    comp: Vec<(usize, usize, usize)>,
    inv: Vec<usize>,
    table: Vec<Option<usize>>,
}

fn in_range(table: &'static str, v: &[usize], set: &FinSet) -> Result<(), GrpdError> {
    match v.iter().find(|&&x| x >= set.len()) {
        Some(&index) => Err(GrpdError::Dangling { table, index, set: set.id().into(), size: set.len() }),
        None => Ok(()),
    }
}

fn sized(table: &'static str, v: &[usize], expected: usize) -> Result<(), GrpdError> {
    if v.len() == expected {
        Ok(())
    } else {
        Err(GrpdError::Length { table, got: v.len(), expected })
    }
}

impl FinGroupoid {
    /// Builds the tables, checking only that every index is in range. The
    /// axioms are checked by [`FinGroupoid::validate`].
    pub fn new(
        arrows: Arc<FinSet>,
        objects: Arc<FinSet>,
        source: Vec<usize>,
        target: Vec<usize>,
        unit: Vec<usize>,
        comp: Vec<(usize, usize, usize)>,
        inv: Vec<usize>,
    ) -> Result<Self, GrpdError> {
        let n = arrows.len();
        sized("source", &source, n)?;
        sized("target", &target, n)?;
        sized("inverse", &inv, n)?;
        sized("unit", &unit, objects.len())?;
        in_range("source", &source, &objects)?;
        in_range("target", &target, &objects)?;
        in_range("unit", &unit, &arrows)?;
        in_range("inverse", &inv, &arrows)?;
        let flat: Vec<usize> = comp.iter().flat_map(|&(a, b, c)| [a, b, c]).collect();
        in_range("composition", &flat, &arrows)?;
        let mut comp = comp;
        comp.sort_unstable();
        comp.dedup();
        let mut table = vec![None; n * n];
        for &(a, b, c) in &comp {
            table[a * n + b].get_or_insert(c);
        }
        Ok(Self { arrows, objects, source, target, unit, comp, inv, table })
    }

    /// Builds from a product function defined on composable pairs.
    pub fn from_fn(
        arrows: Arc<FinSet>,
        objects: Arc<FinSet>,
        source: Vec<usize>,
        target: Vec<usize>,
        unit: Vec<usize>,
        mul: impl Fn(usize, usize) -> usize,
        inv: Vec<usize>,
    ) -> Result<Self, GrpdError> {
        let n = arrows.len();
        sized("source", &source, n)?;
        sized("target", &target, n)?;
        let mut comp = Vec::new();
        for (a, sa) in source.iter().enumerate() {
            for (b, tb) in target.iter().enumerate() {
                if sa == tb {
                    comp.push((a, b, mul(a, b)));
                }
            }
        }
        Self::new(arrows, objects, source, target, unit, comp, inv)
    }

    pub fn arrows(&self) -> &Arc<FinSet> {
        &self.arrows
    }

    pub fn objects(&self) -> &Arc<FinSet> {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Source `r`.
    pub fn src(&self, g: usize) -> usize {
        self.source[g]
    }

    /// Target `ℓ`.
    pub fn tgt(&self, g: usize) -> usize {
        self.target[g]
    }

    pub fn unit(&self, x: usize) -> usize {
        self.unit[x]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    pub fn sources(&self) -> &[usize] {
        &self.source
    }

    pub fn targets(&self) -> &[usize] {
        &self.target
    }

    pub fn units(&self) -> &[usize] {
        &self.unit
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inv
    }

    /// Composition triples `(g, h, gh)`, sorted.
    pub fn comp(&self) -> &[(usize, usize, usize)] {
        &self.comp
    }

    /// `gh` if the table defines it.
    pub fn mul(&self, g: usize, h: usize) -> Option<usize> {
        self.table[g * self.len() + h]
    }

    pub fn is_unit(&self, g: usize) -> bool {
        self.unit[self.target[g]] == g
    }

    /// The unit at the target of `g`, as an arrow.
    pub fn left_unit(&self, g: usize) -> usize {
        self.unit[self.target[g]]
    }

    /// The unit at the source of `g`, as an arrow.
    pub fn right_unit(&self, g: usize) -> usize {
        self.unit[self.source[g]]
    }

    fn n(&self, g: usize) -> String {
        self.arrows.name(g)
    }

    fn o(&self, x: usize) -> String {
        self.objects.name(x)
    }

    /// Checks the groupoid axioms one by one; a failing axiom carries one
    /// witness.
    pub fn validate(&self) -> Report {
        let mut rep = Report::new(format!("groupoid {}", self.arrows.id()));
        let n = self.len();
        let objs = self.objects.len();
        let find_obj = |p: &dyn Fn(usize) -> bool| (0..objs).find(|&x| p(x));
        let find1 = |p: &dyn Fn(usize) -> bool| (0..n).find(|&g| p(g));

        let w = find_obj(&|x| self.target[self.unit[x]] != x).map(|x| vec![self.o(x)]);
        rep.record("unit-target", w);
        let w = find_obj(&|x| self.source[self.unit[x]] != x).map(|x| vec![self.o(x)]);
        rep.record("unit-source", w);
        let mut w = None;
        'outer: for x in 0..objs {
            for y in 0..x {
                if self.unit[x] == self.unit[y] {
                    w = Some(vec![self.o(y), self.o(x)]);
                    break 'outer;
                }
            }
        }
        rep.record("unit-injective", w);

        // Domain of composition: exactly the composable pairs, single-valued.
        let mut w = None;
        for pair in self.comp.windows(2) {
            if pair[0].0 == pair[1].0 && pair[0].1 == pair[1].1 {
                w = Some(vec![self.n(pair[0].0), self.n(pair[0].1), "multi-valued".into()]);
                break;
            }
        }
        if w.is_none() {
            'dom: for g in 0..n {
                for h in 0..n {
                    let composable = self.source[g] == self.target[h];
                    if composable != self.mul(g, h).is_some() {
                        let tag = if composable { "missing" } else { "extra" };
                        w = Some(vec![self.n(g), self.n(h), tag.into()]);
                        break 'dom;
                    }
                }
            }
        }
        rep.record("comp-domain", w);

        let mut tw = None;
        let mut sw = None;
        for &(g, h, gh) in &self.comp {
            if tw.is_none() && self.target[gh] != self.target[g] {
                tw = Some(vec![self.n(g), self.n(h), self.n(gh)]);
            }
            if sw.is_none() && self.source[gh] != self.source[h] {
                sw = Some(vec![self.n(g), self.n(h), self.n(gh)]);
            }
        }
        rep.record("comp-target", tw);
        rep.record("comp-source", sw);

        let mut w = None;
        'assoc: for &(g, h, gh) in &self.comp {
            for k in 0..n {
                if let (Some(hk), Some(l)) = (self.mul(h, k), self.mul(gh, k)) {
                    if self.mul(g, hk) != Some(l) {
                        w = Some(vec![self.n(g), self.n(h), self.n(k)]);
                        break 'assoc;
                    }
                }
            }
        }
        rep.record("associativity", w);

        let w = find1(&|g| self.mul(self.left_unit(g), g) != Some(g)).map(|g| vec![self.n(g)]);
        rep.record("left-unit", w);
        let w = find1(&|g| self.mul(g, self.right_unit(g)) != Some(g)).map(|g| vec![self.n(g)]);
        rep.record("right-unit", w);
        let w = find1(&|g| {
            let i = self.inv[g];
            self.target[i] != self.source[g] || self.source[i] != self.target[g]
        })
        .map(|g| vec![self.n(g)]);
        rep.record("inverse-ends", w);
        let w = find1(&|g| self.mul(self.inv[g], g) != Some(self.right_unit(g))).map(|g| vec![self.n(g)]);
        rep.record("left-inverse", w);
        let w = find1(&|g| self.mul(g, self.inv[g]) != Some(self.left_unit(g))).map(|g| vec![self.n(g)]);
        rep.record("right-inverse", w);
        rep
    }

    pub fn is_valid(&self) -> bool {
        self.validate().passed()
    }

    /// Errors with the validation report when an axiom fails.
    pub fn require_valid(&self) -> Result<(), GrpdError> {
        let rep = self.validate();
        if rep.passed() {
            Ok(())
        } else {
            Err(GrpdError::Invalid(Box::new(rep)))
        }
    }

    /// Connected components as sorted object lists, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let objs = self.objects.len();
        let mut parent: Vec<usize> = (0..objs).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for g in 0..self.len() {
            let (a, b) = (find(&mut parent, self.source[g]), find(&mut parent, self.target[g]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut classes: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for x in 0..objs {
            let r = find(&mut parent, x);
            classes.entry(r).or_default().push(x);
        }
        classes.into_values().collect()
    }

    /// Arrows from `x` to itself.
    pub fn isotropy_arrows(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&g| self.source[g] == x && self.target[g] == x).collect()
    }

    /// The isotropy group at `x`, with arrow names as element names.
    pub fn isotropy(&self, x: usize) -> Result<Group, GrpdError> {
        let els = self.isotropy_arrows(x);
        let pos = |g: usize| els.iter().position(|&e| e == g);
        let set = FinSet::new(format!("iso({})", self.o(x)), els.iter().map(|&g| self.n(g)).collect())
            .map_err(|d| GrpdError::NotAGroup(format!("duplicate {d}")))?;
        let mut mul = Vec::with_capacity(els.len() * els.len());
        for &a in &els {
            for &b in &els {
                let c = self.mul(a, b).and_then(pos).ok_or_else(|| GrpdError::NotAGroup("isotropy not closed".into()))?;
                mul.push(c);
            }
        }
        Group::from_table(set, mul)
    }

    /// Orbit partition together with the isotropy group at every object.
    pub fn orbits_and_isotropy(&self) -> Result<(Vec<Vec<usize>>, Vec<Group>), GrpdError> {
        self.require_valid()?;
        let iso = (0..self.objects.len()).map(|x| self.isotropy(x)).collect::<Result<_, _>>()?;
        Ok((self.orbits(), iso))
    }

    /// Same groupoid with the object set renamed (sizes must agree).
    pub fn with_objects(&self, objects: Arc<FinSet>) -> Self {
        assert_eq!(objects.len(), self.objects.len());
        Self { objects, ..self.clone() }
    }

    /// Same groupoid with the arrow set renamed (sizes must agree).
    pub fn with_arrows(&self, arrows: Arc<FinSet>) -> Self {
        assert_eq!(arrows.len(), self.arrows.len());
        Self { arrows, ..self.clone() }
    }

    /// Copy with one composition triple replaced; for corruption tests.
    pub fn with_comp(&self, comp: Vec<(usize, usize, usize)>) -> Self {
        Self::new(
            self.arrows.clone(),
            self.objects.clone(),
            self.source.clone(),
            self.target.clone(),
            self.unit.clone(),
            comp,
            self.inv.clone(),
        )
        .expect("indices unchanged")
    }

    /// Copy with a different inverse table; for corruption tests.
    pub fn with_inverse(&self, inv: Vec<usize>) -> Result<Self, GrpdError> {
        Self::new(
            self.arrows.clone(),
            self.objects.clone(),
            self.source.clone(),
            self.target.clone(),
            self.unit.clone(),
            self.comp.clone(),
            inv,
        )
    }
}
