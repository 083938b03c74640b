//! Rebuilding a double groupoid from its hopfoid, and isomorphism of
//! doubles.
//!
//! The product with the unit `E` after the transposed base counit is a star
//! monoid whose groupoid is the horizontal structure; the transposed
//! coproduct with the transposed counit gives the vertical one. Each side
//! groupoid lives on the unit squares of the other structure, and the
//! common objects are the squares that are units for both.

use std::sync::Arc;

use grpd::{find_isomorphism, from_star_monoid, FinGroupoid, PartialAlgebra};
use relcat::{FinSet, Monoid, StarStructure};

use crate::double::FinDoubleGroupoid;
use crate::error::DblError;
use crate::hopfoid::Hopfoid;

/// The groupoid `g` cut down to the arrows `arrows` (given as arrows of `g`)
/// over the objects `objects` (given as unit arrows of `g`).
fn restrict(
    g: &FinGroupoid,
    arrows: &[usize],
    objects: &[usize],
    arrow_set: Arc<FinSet>,
    object_set: Arc<FinSet>,
) -> Result<FinGroupoid, DblError> {
    let pos = |list: &[usize], x: usize, what: &str| {
        list.iter()
            .position(|&y| y == x)
            .ok_or_else(|| DblError::Shape(format!("{} leaves the {what}", g.arrows().name(x))))
    };
    let mut source = Vec::with_capacity(arrows.len());
    let mut target = Vec::with_capacity(arrows.len());
    let mut inv = Vec::with_capacity(arrows.len());
    for &a in arrows {
        source.push(pos(objects, g.right_unit(a), "objects")?);
        target.push(pos(objects, g.left_unit(a), "objects")?);
        inv.push(pos(arrows, g.inv(a), "arrows")?);
    }
    let unit = objects.iter().map(|&u| pos(arrows, u, "arrows")).collect::<Result<Vec<_>, _>>()?;
    let mut comp = Vec::new();
    for (i, &a) in arrows.iter().enumerate() {
        for (j, &b) in arrows.iter().enumerate() {
            if let Some(c) = g.mul(a, b) {
                comp.push((i, j, pos(arrows, c, "arrows")?));
            }
        }
    }
    Ok(FinGroupoid::new(arrow_set, object_set, source, target, unit, comp, inv)?)
}

fn named(id: String, carrier: &FinSet, items: &[usize]) -> Result<Arc<FinSet>, DblError> {
    FinSet::new(id, items.iter().map(|&s| carrier.name(s)).collect())
        .map_err(|d| DblError::Shape(format!("duplicate square name {d}")))
}

/// The double groupoid a hopfoid encodes. Its squares are the carrier
/// itself, so a hopfoid built from a double gives that double back on the
/// nose up to renaming of edges.
pub fn from_hopfoid(h: &Hopfoid) -> Result<FinDoubleGroupoid, DblError> {
    let sq = &h.carrier;
    let ends = h.base_counit.transpose().compose(&h.unit).map_err(|e| DblError::Shape(e.to_string()))?;
    let flip = h.star.compose(&h.antipode).map_err(|e| DblError::Shape(e.to_string()))?;
    let horizontal = from_star_monoid(
        &Monoid { carrier: sq.clone(), product: h.product.clone(), unit: ends },
        &StarStructure { carrier: sq.clone(), star: flip },
    )?;
    let vertical = from_star_monoid(
        &Monoid { carrier: sq.clone(), product: h.coproduct.transpose(), unit: h.counit.transpose() },
        &StarStructure { carrier: sq.clone(), star: h.star.clone() },
    )?;
    from_structures(&horizontal, &vertical)
}

/// The double groupoid with the given horizontal and vertical structures on
/// a common square set. The sides and their common objects are read off
/// the unit squares; the result is validated.
pub fn from_structures(horizontal: &FinGroupoid, vertical: &FinGroupoid) -> Result<FinDoubleGroupoid, DblError> {
    let sq = horizontal.arrows();
    if !FinSet::same(sq, vertical.arrows()) {
        return Err(DblError::Shape(format!("squares {} and {} differ", sq.id(), vertical.arrows().id())));
    }
    let h_edges = horizontal.units().to_vec();
    let v_edges = vertical.units().to_vec();
    let corners: Vec<usize> = (0..sq.len()).filter(|s| h_edges.contains(s) && v_edges.contains(s)).collect();
    let objects = named("M".into(), sq, &corners)?;
    let h_set = named(format!("{}.h", sq.id()), sq, &h_edges)?;
    let v_set = named(format!("{}.v", sq.id()), sq, &v_edges)?;
    let side_h = restrict(vertical, &h_edges, &corners, h_set.clone(), objects.clone())?;
    let side_v = restrict(horizontal, &v_edges, &corners, v_set.clone(), objects)?;
    let d = FinDoubleGroupoid::new(side_h, side_v, horizontal.with_objects(h_set), vertical.with_objects(v_set))?;
    d.require_valid()?;
    Ok(d)
}

/// Squares with both gluings, both flips and the four edge-unit maps;
/// coloured by which structures a square is a unit of.
pub fn double_algebra(d: &FinDoubleGroupoid) -> PartialAlgebra {
    let n = d.len();
    let (hs, vs) = (d.hstruct(), d.vstruct());
    PartialAlgebra {
        size: n,
        colors: (0..n).map(|s| u64::from(hs.is_unit(s)) + 2 * u64::from(vs.is_unit(s))).collect(),
        unary: vec![
            (0..n).map(|s| d.h_inv(s)).collect(),
            (0..n).map(|s| d.v_inv(s)).collect(),
            (0..n).map(|s| d.h_unit(d.h_target(s))).collect(),
            (0..n).map(|s| d.h_unit(d.h_source(s))).collect(),
            (0..n).map(|s| d.v_unit(d.v_target(s))).collect(),
            (0..n).map(|s| d.v_unit(d.v_source(s))).collect(),
        ],
        binary: vec![
            (0..n * n).map(|i| d.h_mul(i / n, i % n)).collect(),
            (0..n * n).map(|i| d.v_mul(i / n, i % n)).collect(),
        ],
    }
}

/// Square map of an isomorphism of doubles, if one exists.
pub fn double_isomorphism(a: &FinDoubleGroupoid, b: &FinDoubleGroupoid) -> Option<Vec<usize>> {
    if a.len() != b.len() || a.side_h().len() != b.side_h().len() || a.side_v().len() != b.side_v().len() {
        return None;
    }
    find_isomorphism(&double_algebra(a), &double_algebra(b))
}

/// Whether `b` is isomorphic to `a` or to its transpose.
pub fn isomorphic_up_to_transpose(a: &FinDoubleGroupoid, b: &FinDoubleGroupoid) -> bool {
    double_isomorphism(a, b).is_some() || double_isomorphism(&a.transpose(), b).is_some()
}

/// Whether rebuilding the hopfoid of `d` gives `d` back.
pub fn round_trip(d: &FinDoubleGroupoid) -> Result<bool, DblError> {
    let back = from_hopfoid(&crate::hopfoid::to_hopfoid(d)?)?;
    Ok(isomorphic_up_to_transpose(d, &back))
}

#[cfg(test)]
mod tests {
    use grpd::{group, pair, trivial, Group};

    use super::*;
    use crate::examples::{example_crossed, example_dinertia, example_dmain, CrossedModule};
    use crate::hopfoid::to_hopfoid;

    #[test]
    fn main_of_cyclic_three_round_trips() {
        let d = example_dmain(&group(&Group::cyclic(3))).unwrap();
        let back = from_hopfoid(&to_hopfoid(&d).unwrap()).unwrap();
        assert!(double_isomorphism(&d, &back).is_some());
    }

    #[test]
    fn inertia_doubles_round_trip() {
        let z2 = group(&Group::cyclic(2));
        let p = pair(&FinSet::of("M", ["1", "2"]));
        for g in [z2, p] {
            assert!(round_trip(&example_dinertia(&g).unwrap()).unwrap());
        }
    }

    #[test]
    fn transposes_and_crossed_modules_round_trip() {
        let z2 = Group::cyclic(2);
        let d = example_dinertia(&group(&z2)).unwrap().transpose();
        assert!(round_trip(&d).unwrap());
        let cm = CrossedModule::identity(&Group::symmetric3());
        assert!(round_trip(&example_crossed(&cm).unwrap()).unwrap());
    }

    #[test]
    fn rebuilt_sides_match() {
        let p = pair(&FinSet::of("M", ["1", "2", "3"]));
        let d = example_dmain(&p).unwrap();
        let back = from_hopfoid(&to_hopfoid(&d).unwrap()).unwrap();
        assert!(grpd::isomorphic(back.side_h(), d.side_h()));
        assert!(grpd::isomorphic(back.side_v(), d.side_v()));
        assert_eq!(back.base().len(), 3);
    }

    #[test]
    fn main_and_inertia_are_not_isomorphic() {
        let g = group(&Group::cyclic(2));
        let a = example_dmain(&trivial(&FinSet::of("M", ["x", "y"]))).unwrap();
        let b = example_dmain(&g).unwrap();
        assert!(double_isomorphism(&a, &b).is_none());
        let c = example_dinertia(&g).unwrap();
        assert!(!isomorphic_up_to_transpose(&example_dmain(&group(&Group::cyclic(4))).unwrap(), &c));
    }
}
