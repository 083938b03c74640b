//! Finite double groupoids.
//!
//! Squares carry two groupoid structures. The horizontal structure has the
//! arrows of the horizontal side groupoid as objects: each square has a
//! horizontal target and source edge, and squares glue along those edges.
//! The vertical structure is the same with the vertical side groupoid. Both
//! side groupoids share one object set.
//!
//! Accessors: `h_target`/`h_source` give horizontal-side edges and
//! `h_mul`/`h_unit`/`h_inv` the structure gluing along them; the `v_` family
//! is the same for the vertical side.

use std::sync::Arc;

use grpd::FinGroupoid;
use relcat::{FinSet, Report};

use crate::error::DblError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinDoubleGroupoid {
    side_h: FinGroupoid,
    side_v: FinGroupoid,
    hstruct: FinGroupoid,
    vstruct: FinGroupoid,
}

/// An edge map on squares or on side arrows.
type EdgeMap<'a> = &'a dyn Fn(usize) -> usize;

impl FinDoubleGroupoid {
    /// Checks that the four groupoids fit together as sets; the axioms are
    /// checked by [`FinDoubleGroupoid::validate`].
    pub fn new(
        side_h: FinGroupoid,
        side_v: FinGroupoid,
        hstruct: FinGroupoid,
        vstruct: FinGroupoid,
    ) -> Result<Self, DblError> {
        let fits = |what: &str, a: &Arc<FinSet>, b: &Arc<FinSet>| {
            if FinSet::same(a, b) {
                Ok(())
            } else {
                Err(DblError::Shape(format!("{what}: {} is not {}", a.id(), b.id())))
            }
        };
        fits("squares", hstruct.arrows(), vstruct.arrows())?;
        fits("horizontal base", hstruct.objects(), side_h.arrows())?;
        fits("vertical base", vstruct.objects(), side_v.arrows())?;
        fits("double base", side_h.objects(), side_v.objects())?;
        Ok(Self { side_h, side_v, hstruct, vstruct })
    }

    pub fn squares(&self) -> &Arc<FinSet> {
        self.hstruct.arrows()
    }

    pub fn len(&self) -> usize {
        self.hstruct.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hstruct.is_empty()
    }

    pub fn side_h(&self) -> &FinGroupoid {
        &self.side_h
    }

    pub fn side_v(&self) -> &FinGroupoid {
        &self.side_v
    }

    /// Squares over the horizontal side.
    pub fn hstruct(&self) -> &FinGroupoid {
        &self.hstruct
    }

    /// Squares over the vertical side.
    pub fn vstruct(&self) -> &FinGroupoid {
        &self.vstruct
    }

    /// Common object set of both sides.
    pub fn base(&self) -> &Arc<FinSet> {
        self.side_h.objects()
    }

    pub fn h_target(&self, s: usize) -> usize {
        self.hstruct.tgt(s)
    }

    pub fn h_source(&self, s: usize) -> usize {
        self.hstruct.src(s)
    }

    pub fn v_target(&self, s: usize) -> usize {
        self.vstruct.tgt(s)
    }

    pub fn v_source(&self, s: usize) -> usize {
        self.vstruct.src(s)
    }

    /// Gluing along horizontal edges.
    pub fn h_mul(&self, a: usize, b: usize) -> Option<usize> {
        self.hstruct.mul(a, b)
    }

    /// Gluing along vertical edges.
    pub fn v_mul(&self, a: usize, b: usize) -> Option<usize> {
        self.vstruct.mul(a, b)
    }

    /// The unit square on a horizontal edge.
    pub fn h_unit(&self, h: usize) -> usize {
        self.hstruct.unit(h)
    }

    /// The unit square on a vertical edge.
    pub fn v_unit(&self, v: usize) -> usize {
        self.vstruct.unit(v)
    }

    pub fn h_inv(&self, s: usize) -> usize {
        self.hstruct.inv(s)
    }

    pub fn v_inv(&self, s: usize) -> usize {
        self.vstruct.inv(s)
    }

    /// The square that is a unit for both structures at a base point.
    pub fn double_unit(&self, m: usize) -> usize {
        self.h_unit(self.side_h.unit(m))
    }

    /// Exchanges the two structures.
    pub fn transpose(&self) -> Self {
        Self {
            side_h: self.side_v.clone(),
            side_v: self.side_h.clone(),
            hstruct: self.vstruct.clone(),
            vstruct: self.hstruct.clone(),
        }
    }

    /// Copy with one structure's composition table replaced; for
    /// corruption tests.
    pub fn with_hstruct(&self, hstruct: FinGroupoid) -> Self {
        Self { hstruct, ..self.clone() }
    }

    pub fn with_vstruct(&self, vstruct: FinGroupoid) -> Self {
        Self { vstruct, ..self.clone() }
    }

    fn sq(&self, s: usize) -> String {
        self.squares().name(s)
    }

    /// Checks every axiom family with one witness per failure.
    pub fn validate(&self) -> Report {
        let mut rep = Report::new(format!("double {}", self.squares().id()));
        rep.absorb("side-h", self.side_h.validate());
        rep.absorb("side-v", self.side_v.validate());
        rep.absorb("hstruct", self.hstruct.validate());
        rep.absorb("vstruct", self.vstruct.validate());
        if !rep.passed() {
            return rep;
        }
        let n = self.len();
        // Edge maps of one structure are homomorphisms for the other.
        let families: [(&str, &FinGroupoid, &FinGroupoid, EdgeMap<'_>, EdgeMap<'_>); 4] = [
            ("hom-h-target", &self.vstruct, &self.side_h, &|s| self.h_target(s), &|v| self.side_v.tgt(v)),
            ("hom-h-source", &self.vstruct, &self.side_h, &|s| self.h_source(s), &|v| self.side_v.src(v)),
            ("hom-v-target", &self.hstruct, &self.side_v, &|s| self.v_target(s), &|h| self.side_h.tgt(h)),
            ("hom-v-source", &self.hstruct, &self.side_v, &|s| self.v_source(s), &|h| self.side_h.src(h)),
        ];
        for (name, from, to, f, f0) in families {
            rep.record(name, homomorphism_witness(from, to, f, f0, self.squares()));
        }

        // Unit squares on one side form a subgroupoid for the other.
        let mut w = None;
        'units: for (units, other, side) in
            [(&self.hstruct, &self.vstruct, &self.side_h), (&self.vstruct, &self.hstruct, &self.side_v)]
        {
            for &(a, b, ab) in side.comp() {
                if other.mul(units.unit(a), units.unit(b)) != Some(units.unit(ab)) {
                    w = Some(vec![side.arrows().name(a), side.arrows().name(b)]);
                    break 'units;
                }
            }
        }
        if w.is_none() {
            w = (0..self.base().len())
                .find(|&m| self.h_unit(self.side_h.unit(m)) != self.v_unit(self.side_v.unit(m)))
                .map(|m| vec![self.base().name(m)]);
        }
        rep.record("unit-compatibility", w);

        let mut w = None;
        'ix: for &(a, b, ab) in self.hstruct.comp() {
            for &(c, d, cd) in self.hstruct.comp() {
                let (Some(ac), Some(bd)) = (self.v_mul(a, c), self.v_mul(b, d)) else { continue };
                let lhs = self.v_mul(ab, cd);
                let rhs = self.h_mul(ac, bd);
                if lhs.is_none() || lhs != rhs {
                    w = Some(vec![self.sq(a), self.sq(b), self.sq(c), self.sq(d)]);
                    break 'ix;
                }
            }
        }
        rep.record("interchange", w);

        let mut hit = vec![false; self.side_h.len() * self.side_v.len()];
        for s in 0..n {
            hit[self.h_source(s) * self.side_v.len() + self.v_source(s)] = true;
        }
        let mut w = None;
        'ds: for h in 0..self.side_h.len() {
            for v in 0..self.side_v.len() {
                if self.side_h.src(h) == self.side_v.src(v) && !hit[h * self.side_v.len() + v] {
                    w = Some(vec![self.side_h.arrows().name(h), self.side_v.arrows().name(v)]);
                    break 'ds;
                }
            }
        }
        rep.record("double-source", w);
        rep
    }

    pub fn is_valid(&self) -> bool {
        self.validate().passed()
    }

    pub fn require_valid(&self) -> Result<(), DblError> {
        let rep = self.validate();
        if rep.passed() {
            Ok(())
        } else {
            Err(DblError::Invalid(Box::new(rep)))
        }
    }
}

/// First failure of `f` (covering `f0` on objects) being a homomorphism.
fn homomorphism_witness(
    from: &FinGroupoid,
    to: &FinGroupoid,
    f: &dyn Fn(usize) -> usize,
    f0: &dyn Fn(usize) -> usize,
    squares: &FinSet,
) -> Option<Vec<String>> {
    for s in 0..from.len() {
        if to.tgt(f(s)) != f0(from.tgt(s)) || to.src(f(s)) != f0(from.src(s)) {
            return Some(vec![squares.name(s), "ends".into()]);
        }
    }
    for x in 0..from.objects().len() {
        if f(from.unit(x)) != to.unit(f0(x)) {
            return Some(vec![from.objects().name(x), "unit".into()]);
        }
    }
    for &(a, b, ab) in from.comp() {
        if to.mul(f(a), f(b)) != Some(f(ab)) {
            return Some(vec![squares.name(a), squares.name(b), "product".into()]);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{example_dinertia, example_dmain};
    use grpd::{group, pair, Group};

    #[test]
    fn transpose_is_an_involution_and_valid() {
        let d = example_dinertia(&pair(&FinSet::of("M", ["1", "2"]))).unwrap();
        let t = d.transpose();
        assert!(t.is_valid());
        assert_eq!(t.transpose(), d);
    }

    #[test]
    fn transposed_main_has_trivial_vertical_side() {
        let g = group(&Group::cyclic(3));
        let t = example_dmain(&g).unwrap().transpose();
        assert_eq!(t.side_v().len(), t.side_v().objects().len());
        assert_eq!(t.side_h(), &g);
    }

    #[test]
    fn swapped_interchange_entry_fails_with_four_squares() {
        let d = example_dinertia(&group(&Group::cyclic(2))).unwrap();
        // swap two results in the horizontal table
        let mut comp = d.hstruct().comp().to_vec();
        let (i, j) = (1, 2);
        let (ri, rj) = (comp[i].2, comp[j].2);
        comp[i].2 = rj;
        comp[j].2 = ri;
        let bad = d.with_hstruct(d.hstruct().with_comp(comp));
        let rep = bad.validate();
        assert!(!rep.passed());
        let check = rep.failures().next().unwrap();
        assert!(check.witness.is_some());
    }

    #[test]
    fn mismatched_bases_are_a_shape_error() {
        let g = group(&Group::cyclic(2));
        let h = group(&Group::cyclic(3));
        assert!(FinDoubleGroupoid::new(g.clone(), g.clone(), h.clone(), h).is_err());
    }
}
