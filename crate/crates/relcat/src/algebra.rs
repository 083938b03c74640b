//! Monoids, comonoids, *-structures, Hopf objects and actions, with
//! diagram-by-diagram checkers.

use std::sync::Arc;

use thiserror::Error;

use crate::cat::{Category, RelCat};
use crate::rel::Rel;
use crate::report::Report;
use crate::set::FinSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("carrier mismatch: {0} vs {1}")]
    CarrierMismatch(String, String),
    #[error("{what} has the wrong shape: {detail}")]
    Shape { what: String, detail: String },
}

/// A monoid object: product `S×S → S` and unit `pt → S`.
#[derive(Debug, Clone)]
pub struct Monoid<C: Category> {
    pub carrier: C::Obj,
    pub product: C::Mor,
    pub unit: C::Mor,
}

/// A comonoid object: coproduct `S → S×S` and counit `S → pt`.
#[derive(Debug, Clone)]
pub struct Comonoid<C: Category> {
    pub carrier: C::Obj,
    pub coproduct: C::Mor,
    pub counit: C::Mor,
}

pub type RelMonoid = Monoid<RelCat>;
pub type RelComonoid = Comonoid<RelCat>;

/// An involution on a carrier, stored as a bijection graph.
#[derive(Debug, Clone)]
pub struct StarStructure {
    pub carrier: Arc<FinSet>,
    pub star: Rel,
}

impl<C: Category> Monoid<C> {
    /// The comonoid obtained by transposing both structure maps.
    pub fn transpose(&self) -> Comonoid<C> {
        Comonoid {
            carrier: self.carrier.clone(),
            coproduct: C::transpose(&self.product),
            counit: C::transpose(&self.unit),
        }
    }
}

impl<C: Category> Comonoid<C> {
    pub fn transpose(&self) -> Monoid<C> {
        Monoid {
            carrier: self.carrier.clone(),
            product: C::transpose(&self.coproduct),
            unit: C::transpose(&self.counit),
        }
    }
}

/// Records `lhs = rhs`; a composition failure counts as a failed diagram.
pub fn diagram<C: Category>(
    rep: &mut Report,
    name: &str,
    lhs: Result<C::Mor, String>,
    rhs: Result<C::Mor, String>,
) {
    let w = match (lhs, rhs) {
        (Ok(l), Ok(r)) => C::differ(&l, &r),
        (Err(e), _) | (_, Err(e)) => Some(vec!["shape".into(), e]),
    };
    rep.record(name, w);
}

pub fn check_monoid<C: Category>(m: &Monoid<C>) -> Report {
    let mut rep = Report::new("monoid");
    let s = &m.carrier;
    let id = C::id(s);
    diagram::<C>(
        &mut rep,
        "associativity",
        C::then(&C::cross(&m.product, &id), &m.product),
        C::then(&C::cross(&id, &m.product), &m.product),
    );
    diagram::<C>(&mut rep, "left-unit", C::then(&C::cross(&m.unit, &id), &m.product), Ok(id.clone()));
    diagram::<C>(&mut rep, "right-unit", C::then(&C::cross(&id, &m.unit), &m.product), Ok(id));
    rep
}

pub fn check_comonoid<C: Category>(c: &Comonoid<C>) -> Report {
    let mut rep = Report::new("comonoid");
    let id = C::id(&c.carrier);
    diagram::<C>(
        &mut rep,
        "coassociativity",
        C::then(&c.coproduct, &C::cross(&c.coproduct, &id)),
        C::then(&c.coproduct, &C::cross(&id, &c.coproduct)),
    );
    diagram::<C>(&mut rep, "left-counit", C::then(&c.coproduct, &C::cross(&c.counit, &id)), Ok(id.clone()));
    diagram::<C>(&mut rep, "right-counit", C::then(&c.coproduct, &C::cross(&id, &c.counit)), Ok(id));
    rep
}

fn same_carrier<C: Category>(a: &C::Obj, b: &C::Obj) -> Result<(), ShapeError> {
    if C::same_obj(a, b) {
        Ok(())
    } else {
        Err(ShapeError::CarrierMismatch(format!("{a:?}"), format!("{b:?}")))
    }
}

/// The five families of Hopf diagrams for a monoid, a comonoid and an
/// antipode on one carrier.
pub fn check_hopf<C: Category>(
    m: &Monoid<C>,
    c: &Comonoid<C>,
    antipode: &C::Mor,
) -> Result<Report, ShapeError> {
    same_carrier::<C>(&m.carrier, &c.carrier)?;
    let mut rep = Report::new("hopf");
    let s = &m.carrier;
    let id = C::id(s);
    let mid = C::cross3(&id, &C::swap(s, s), &id);
    diagram::<C>(
        &mut rep,
        "product-coproduct",
        C::then(&m.product, &c.coproduct),
        C::path(&[&C::cross(&c.coproduct, &c.coproduct), &mid, &C::cross(&m.product, &m.product)]),
    );
    diagram::<C>(
        &mut rep,
        "product-counit",
        C::then(&m.product, &c.counit),
        Ok(C::cross(&c.counit, &c.counit)),
    );
    diagram::<C>(&mut rep, "unit-coproduct", C::then(&m.unit, &c.coproduct), Ok(C::cross(&m.unit, &m.unit)));
    diagram::<C>(&mut rep, "unit-counit", C::then(&m.unit, &c.counit), Ok(C::id(&C::unit())));
    let collapse = C::then(&c.counit, &m.unit);
    diagram::<C>(
        &mut rep,
        "antipode-left",
        C::path(&[&c.coproduct, &C::cross(antipode, &id), &m.product]),
        collapse.clone(),
    );
    diagram::<C>(
        &mut rep,
        "antipode-right",
        C::path(&[&c.coproduct, &C::cross(&id, antipode), &m.product]),
        collapse,
    );
    Ok(rep)
}

/// Action diagrams for `tau: S×Q → Q`.
pub fn check_action<C: Category>(m: &Monoid<C>, tau: &C::Mor) -> Result<Report, ShapeError> {
    let q = C::dst(tau);
    let expect = C::tensor(&m.carrier, &q);
    if !C::same_obj(&C::src(tau), &expect) {
        return Err(ShapeError::Shape {
            what: "action".into(),
            detail: format!("source {:?} is not {:?}", C::src(tau), expect),
        });
    }
    let mut rep = Report::new("action");
    let idq = C::id(&q);
    diagram::<C>(
        &mut rep,
        "action-product",
        C::then(&C::cross(&m.product, &idq), tau),
        C::then(&C::cross(&C::id(&m.carrier), tau), tau),
    );
    diagram::<C>(&mut rep, "action-unit", C::then(&C::cross(&m.unit, &idq), tau), Ok(idq));
    Ok(rep)
}

/// Outcome of [`check_star`].
#[derive(Debug, Clone)]
pub struct StarReport {
    pub star_ok: bool,
    pub strongly_positive: bool,
    pub report: Report,
}

/// Involution and anti-multiplicativity of the star, and strong positivity:
/// the diagonal `pt → S×S`, followed by `id×s` and the product, is the unit.
pub fn check_star(s: &StarStructure, m: &RelMonoid) -> Result<StarReport, ShapeError> {
    same_carrier::<RelCat>(&s.carrier, &m.carrier)?;
    let c = &s.carrier;
    let mut rep = Report::new("star");
    let bij = if s.star.is_bijection() && FinSet::same(s.star.src(), c) && FinSet::same(s.star.dst(), c) {
        None
    } else {
        Some(vec!["not a bijection of the carrier".into()])
    };
    rep.record("bijection", bij);
    diagram::<RelCat>(&mut rep, "involution", s.star.compose(&s.star).map_err(|e| e.to_string()), Ok(Rel::identity(c)));
    diagram::<RelCat>(
        &mut rep,
        "antihomomorphism",
        RelCat::path(&[&Rel::swap(c, c), &s.star.cross(&s.star), &m.product]),
        m.product.compose(&s.star).map_err(|e| e.to_string()),
    );
    let star_ok = rep.passed();
    let n = c.len();
    let diag = Rel::point_to(&FinSet::product(c, c), (0..n).map(|a| a * n + a));
    diagram::<RelCat>(
        &mut rep,
        "strong-positivity",
        RelCat::path(&[&diag, &Rel::identity(c).cross(&s.star), &m.product]),
        Ok(m.unit.clone()),
    );
    let strongly_positive = rep.get("strong-positivity").is_some_and(|ch| ch.pass);
    Ok(StarReport { star_ok, strongly_positive, report: rep })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Monoid from a group table on `0..n`.
    fn group_monoid(n: usize, mul: impl Fn(usize, usize) -> usize) -> RelMonoid {
        let g = FinSet::of("G", (0..n).map(|i| format!("g{i}")));
        let gg = FinSet::product(&g, &g);
        let product = Rel::graph(gg, g.clone(), |i| Some(mul(i / n, i % n)));
        let unit = Rel::point_to(&g, [0]);
        Monoid { carrier: g, product, unit }
    }

    fn z(n: usize) -> RelMonoid {
        group_monoid(n, move |a, b| (a + b) % n)
    }

    fn inversion(m: &RelMonoid, n: usize) -> StarStructure {
        let star = Rel::graph(m.carrier.clone(), m.carrier.clone(), |a| Some((n - a) % n));
        StarStructure { carrier: m.carrier.clone(), star }
    }

    #[test]
    fn z2_monoid_passes() {
        assert!(check_monoid(&z(2)).passed());
    }

    #[test]
    fn emptied_unit_fails_with_witness() {
        let mut m = z(2);
        m.unit = Rel::empty(FinSet::pt(), m.carrier.clone());
        let rep = check_monoid(&m);
        let c = rep.get("left-unit").unwrap();
        assert!(!c.pass && c.witness.is_some());
        assert!(rep.get("associativity").unwrap().pass);
    }

    #[test]
    fn transposed_monoid_is_a_comonoid() {
        assert!(check_comonoid(&z(3).transpose()).passed());
    }

    #[test]
    fn diagonal_comonoid_passes_and_corruption_fails() {
        let a = FinSet::of("A", ["x", "y", "z"]);
        let c = Comonoid::<RelCat> {
            carrier: a.clone(),
            coproduct: Rel::diagonal(&a),
            counit: Rel::full(a.clone(), FinSet::pt()),
        };
        assert!(check_comonoid(&c).passed());
        // Z2 coproduct g ↦ {(a,b): a+b=g} with (1,(0,1)) removed.
        let mut bad = z(2).transpose();
        let g = bad.carrier.clone();
        let pairs: Vec<_> = bad.coproduct.pairs().iter().copied().filter(|&p| p != (1, 1)).collect();
        bad.coproduct = Rel::new(g.clone(), FinSet::product(&g, &g), pairs).unwrap();
        assert!(!check_comonoid(&bad).get("coassociativity").unwrap().pass);
    }

    #[test]
    fn z3_inversion_is_strongly_positive() {
        let m = z(3);
        let r = check_star(&inversion(&m, 3), &m).unwrap();
        assert!(r.star_ok && r.strongly_positive);
    }

    #[test]
    fn identity_star_on_z3_is_not_positive() {
        let m = z(3);
        let s = StarStructure { carrier: m.carrier.clone(), star: Rel::identity(&m.carrier) };
        let r = check_star(&s, &m).unwrap();
        assert!(r.star_ok && !r.strongly_positive);
        assert!(r.report.get("strong-positivity").unwrap().witness.is_some());
    }

    #[test]
    fn trivial_monoid_star_passes() {
        let m = z(1);
        let r = check_star(&inversion(&m, 1), &m).unwrap();
        assert!(r.star_ok && r.strongly_positive);
    }

    #[test]
    fn group_hopf_passes() {
        for n in 1..5 {
            let m = z(n);
            let c = Comonoid::<RelCat> {
                carrier: m.carrier.clone(),
                coproduct: Rel::diagonal(&m.carrier),
                counit: Rel::full(m.carrier.clone(), FinSet::pt()),
            };
            let anti = inversion(&m, n).star;
            assert!(check_hopf(&m, &c, &anti).unwrap().passed(), "Z{n}");
        }
    }

    #[test]
    fn trivial_action_passes_and_empty_fails() {
        let m = z(1);
        let q = FinSet::of("Q", ["a", "b"]);
        let tau = Rel::graph(FinSet::product(&m.carrier, &q), q.clone(), |i| Some(i % 2));
        assert!(check_action(&m, &tau).unwrap().passed());
        let m2 = z(2);
        let sq = FinSet::product(&m2.carrier, &q);
        let empty = Rel::empty(sq, q);
        assert!(!check_action(&m2, &empty).unwrap().get("action-unit").unwrap().pass);
    }

    #[test]
    fn hopf_rejects_carrier_mismatch() {
        let m = z(2);
        let other = FinSet::of("B", ["b"]);
        let c = Comonoid::<RelCat> {
            carrier: other.clone(),
            coproduct: Rel::diagonal(&other),
            counit: Rel::full(other.clone(), FinSet::pt()),
        };
        assert!(check_hopf(&m, &c, &Rel::identity(&m.carrier)).is_err());
    }
}
