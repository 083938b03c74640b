//! Hopfoids: the structure relations a double groupoid induces on its
//! squares over the core, and the axioms they satisfy.

use std::sync::Arc;

use grpd::FinGroupoid;
use relcat::{check_comonoid, check_star, Comonoid, FinSet, Rel, RelComonoid, Report, StarStructure};

use crate::core::core;
use crate::double::FinDoubleGroupoid;
use crate::error::DblError;

/// Carrier, base, and the structure relations between them.
#[derive(Debug, Clone)]
pub struct Hopfoid {
    pub carrier: Arc<FinSet>,
    pub base: Arc<FinSet>,
    /// carrier → base
    pub target: Rel,
    /// carrier → base
    pub source: Rel,
    /// base → carrier
    pub unit: Rel,
    /// carrier × carrier → carrier
    pub product: Rel,
    /// carrier → carrier × carrier
    pub coproduct: Rel,
    /// carrier → carrier
    pub antipode: Rel,
    /// carrier → pt
    pub counit: Rel,
    /// carrier → carrier
    pub star: Rel,
    /// base → base × base
    pub base_coproduct: Rel,
    /// base → pt
    pub base_counit: Rel,
    /// base → base
    pub base_star: Rel,
}

impl Hopfoid {
    pub fn carrier_comonoid(&self) -> RelComonoid {
        Comonoid { carrier: self.carrier.clone(), coproduct: self.coproduct.clone(), counit: self.counit.clone() }
    }

    pub fn base_comonoid(&self) -> RelComonoid {
        Comonoid {
            carrier: self.base.clone(),
            coproduct: self.base_coproduct.clone(),
            counit: self.base_counit.clone(),
        }
    }

    /// Target, source, unit, product, coproduct and antipode of the dual
    /// hopfoid: the transposes of unit, unit followed by antipode, target,
    /// coproduct, product and antipode.
    pub fn dual_relations(&self) -> [Rel; 6] {
        let ei = self.unit.compose(&self.antipode).expect("unit lands in the carrier");
        [
            self.unit.transpose(),
            ei.transpose(),
            self.target.transpose(),
            self.coproduct.transpose(),
            self.product.transpose(),
            self.antipode.transpose(),
        ]
    }

    /// Target, source, unit, product, coproduct and antipode.
    pub fn relations(&self) -> [Rel; 6] {
        [
            self.target.clone(),
            self.source.clone(),
            self.unit.clone(),
            self.product.clone(),
            self.coproduct.clone(),
            self.antipode.clone(),
        ]
    }
}

fn graph2(set: &Arc<FinSet>, f: impl Fn(usize, usize) -> Option<usize>) -> Rel {
    let n = set.len();
    Rel::graph(FinSet::product(set, set), set.clone(), |i| f(i / n, i % n))
}

/// The hopfoid of a double groupoid. Its base is the core; the target glues
/// a square to the unit square on the inverse of its vertical source edge,
/// the source does the same to the flipped square, the unit pads a core
/// square with horizontal units, the product glues horizontally, the
/// coproduct splits vertically, and the antipode flips both ways.
pub fn to_hopfoid(d: &FinDoubleGroupoid) -> Result<Hopfoid, DblError> {
    let c = core(d)?;
    let cg = &c.groupoid;
    let sq = d.squares().clone();
    let base = cg.arrows().clone();
    let (sh, sv) = (d.side_h(), d.side_v());

    let target = Rel::graph(sq.clone(), base.clone(), |s| {
        if !sh.is_unit(d.h_source(s)) {
            return None;
        }
        let v = sv.inv(d.v_source(s));
        d.h_mul(s, d.v_unit(v)).and_then(|t| c.index_of(t))
    });
    let source = Rel::graph(sq.clone(), base.clone(), |s| {
        let flipped = d.h_inv(d.v_inv(s));
        d.h_mul(flipped, d.v_unit(d.v_target(s))).and_then(|t| c.index_of(t))
    });
    let unit = Rel::multi(base.clone(), sq.clone(), |k| {
        let s = c.squares[k];
        (0..sh.len())
            .filter(|&l| sh.tgt(l) == cg.src(k))
            .filter_map(|l| d.v_mul(s, d.h_unit(l)))
            .collect()
    });
    let product = graph2(&sq, |a, b| d.h_mul(a, b));
    let coproduct = graph2(&sq, |a, b| d.v_mul(a, b)).transpose();
    let antipode = Rel::graph(sq.clone(), sq.clone(), |s| Some(d.h_inv(d.v_inv(s))));
    let counit = Rel::to_point(&sq, d.vstruct().units().iter().copied());
    let star = Rel::graph(sq.clone(), sq.clone(), |s| Some(d.v_inv(s)));
    let (base_coproduct, base_counit, base_star) = groupoid_comonoid(cg);
    Ok(Hopfoid {
        carrier: sq,
        base,
        target,
        source,
        unit,
        product,
        coproduct,
        antipode,
        counit,
        star,
        base_coproduct,
        base_counit,
        base_star,
    })
}

/// Transposed product, transposed unit and inverse of a groupoid.
fn groupoid_comonoid(g: &FinGroupoid) -> (Rel, Rel, Rel) {
    let a = g.arrows();
    (
        graph2(a, |x, y| g.mul(x, y)).transpose(),
        Rel::to_point(a, g.units().iter().copied()),
        Rel::graph(a.clone(), a.clone(), |x| Some(g.inv(x))),
    )
}

/// A groupoid in the shape of a group-like hopfoid over a point: target and
/// source are the full relations to the point, the unit picks out all unit
/// arrows, and the coproduct is the diagonal with the identity as star.
pub fn group_style_hopfoid(g: &FinGroupoid) -> Hopfoid {
    let a = g.arrows().clone();
    let pt = FinSet::pt();
    let inv = Rel::graph(a.clone(), a.clone(), |x| Some(g.inv(x)));
    Hopfoid {
        carrier: a.clone(),
        base: pt.clone(),
        target: Rel::full(a.clone(), pt.clone()),
        source: Rel::full(a.clone(), pt.clone()),
        unit: Rel::point_to(&a, g.units().iter().copied()),
        product: graph2(&a, |x, y| g.mul(x, y)),
        coproduct: Rel::diagonal(&a),
        antipode: inv,
        counit: Rel::full(a.clone(), pt.clone()),
        star: Rel::identity(&a),
        base_coproduct: Rel::identity(&pt),
        base_counit: Rel::identity(&pt),
        base_star: Rel::identity(&pt),
    }
}

/// Composes a path left to right, noting every composition that is not
/// sharp under `name`.
pub(crate) fn eval(rep: &mut Report, name: &str, path: &[&Rel]) -> Result<Rel, String> {
    let (first, rest) = path.split_first().ok_or("empty path")?;
    let mut acc = (*first).clone();
    for r in rest {
        let (c, blunt) = acc.compose_sharp(r).map_err(|e| e.to_string())?;
        if let Some(b) = blunt {
            rep.note(
                format!("{name} not sharp"),
                vec![acc.src().name(b.input), c.dst().name(b.output), format!("{} witnesses", b.witnesses.len())],
            );
        }
        acc = c;
    }
    Ok(acc)
}

fn equal(rep: &mut Report, name: &str, lhs: &[&Rel], rhs: &[&Rel]) {
    let l = eval(rep, name, lhs);
    let r = eval(rep, name, rhs);
    let w = match (l, r) {
        (Ok(l), Ok(r)) => {
            if l.is_empty() && r.is_empty() {
                rep.note(format!("{name} empty"), vec![l.src().id().into(), l.dst().id().into()]);
            }
            l.difference(&r)
        }
        (Err(e), _) | (_, Err(e)) => Some(vec!["shape".into(), e]),
    };
    rep.record(name, w);
}

/// The hopfoid axioms, each as an equality of relations, together with the
/// star comonoid checks on carrier and base. Compositions that are not
/// sharp are listed as notes.
pub fn check_hopfoid(h: &Hopfoid) -> Report {
    let mut rep = Report::new(format!("hopfoid {}", h.carrier.id()));
    let s = &h.carrier;
    let ids = Rel::identity(s);
    let idc = Rel::identity(&h.base);
    let swap = Rel::swap(s, s);
    let (l, r, e, m, dl, i) = (&h.target, &h.source, &h.unit, &h.product, &h.coproduct, &h.antipode);

    for (name, c, star) in
        [("carrier", h.carrier_comonoid(), &h.star), ("base", h.base_comonoid(), &h.base_star)]
    {
        rep.absorb(&format!("{name}-comonoid"), check_comonoid(&c));
        let st = StarStructure { carrier: c.carrier.clone(), star: star.clone() };
        match check_star(&st, &c.transpose()) {
            Ok(sr) => rep.absorb(&format!("{name}-star"), sr.report),
            Err(err) => rep.record(format!("{name}-star"), Some(vec!["shape".into(), err.to_string()])),
        }
    }

    equal(&mut rep, "unit-target", &[e, l], &[&idc]);
    equal(&mut rep, "unit-source", &[e, r], &[&idc]);
    equal(&mut rep, "antipode-target", &[i, l], &[r]);
    equal(&mut rep, "antipode-source", &[i, r], &[l]);
    equal(&mut rep, "counit-target", &[l, &h.base_counit], &[&h.counit]);
    equal(&mut rep, "counit-source", &[r, &h.base_counit], &[&h.counit]);
    equal(&mut rep, "associativity", &[&m.cross(&ids), m], &[&ids.cross(m), m]);
    equal(&mut rep, "antipode-involution", &[i, i], &[&ids]);
    equal(&mut rep, "antipode-star", &[i, &h.star], &[&h.star, i]);
    equal(&mut rep, "antipode-antihomomorphism", &[&swap, &i.cross(i), m], &[m, i]);
    let middle = Rel::cross_all(&[&ids, &swap, &ids]);
    equal(&mut rep, "compatibility", &[m, dl], &[&dl.cross(dl), &middle, &m.cross(m)]);
    let ei = e.compose(i).expect("unit lands in the carrier");
    equal(&mut rep, "left-unit-absorption", &[dl, &l.cross(&ids), &e.cross(&ids), m], &[&ids]);
    equal(&mut rep, "right-unit-absorption", &[dl, &ids.cross(r), &ids.cross(&ei), m], &[&ids]);
    equal(&mut rep, "left-antipode", &[dl, &ids.cross(i), m], &[l, e]);
    equal(&mut rep, "right-antipode", &[dl, &i.cross(&ids), m], &[r, &ei]);
    rep
}

/// Checks that gluing two core squares through the unit, the product and
/// the target gives the core product.
pub fn check_core_product(d: &FinDoubleGroupoid) -> Result<Report, DblError> {
    let h = to_hopfoid(d)?;
    let c = core(d)?;
    let cg = &c.groupoid;
    let mut rep = Report::new(format!("core product {}", d.squares().id()));
    let glued = eval(&mut rep, "glued", &[&h.unit.cross(&h.unit), &h.product, &h.target]).map_err(DblError::Shape)?;
    let table = graph2(cg.arrows(), |a, b| cg.mul(a, b));
    rep.record("core-product", glued.difference(&table));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{example_dinertia, example_dmain};
    use grpd::{group, pair, Group};

    fn z(n: usize) -> FinGroupoid {
        group(&Group::cyclic(n))
    }

    fn pair12() -> FinGroupoid {
        pair(&FinSet::of("M", ["1", "2"]))
    }

    #[test]
    fn dinertia_relations_match_explicit_formulas() {
        let g = pair12();
        let d = example_dinertia(&g).unwrap();
        let h = to_hopfoid(&d).unwrap();
        let c = core(&d).unwrap();
        let n = g.len();
        // core square (c, 1_x) is named by its first arrow
        let core_arrow = |a: usize| c.index_of(a * n + g.unit(g.src(a))).unwrap();
        for s in 0..n * n {
            let (a, b) = (s / n, s % n);
            let t = (g.src(a) == g.src(b)).then(|| core_arrow(g.mul(a, g.inv(b)).unwrap()));
            assert_eq!(h.target.value_at(s), t);
            let r = (g.tgt(a) == g.tgt(b)).then(|| core_arrow(g.mul(g.inv(b), a).unwrap()));
            assert_eq!(h.source.value_at(s), r);
            let i = g.inv(b) * n + g.inv(a);
            assert_eq!(h.antipode.value_at(s), Some(i));
        }
        for a in 0..n {
            let mut got: Vec<usize> = h.unit.image_of(core_arrow(a)).collect();
            got.sort_unstable();
            let want: Vec<usize> = (0..g.objects().len()).map(|y| a * n + g.unit(y)).collect();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn dmain_hopfoid_is_the_groupoid() {
        let g = pair12();
        let h = to_hopfoid(&example_dmain(&g).unwrap()).unwrap();
        // the base is the core, one square per object
        assert_eq!(h.base.len(), 2);
        let n = g.len();
        for s in 0..n {
            assert_eq!(h.target.value_at(s), Some(g.tgt(s)));
            assert_eq!(h.source.value_at(s), Some(g.src(s)));
            assert_eq!(h.antipode.value_at(s), Some(g.inv(s)));
        }
        assert!(h.coproduct.same(&Rel::diagonal(&h.carrier)));
    }

    #[test]
    fn fixtures_pass_the_axioms() {
        for g in [z(1), z(2), z(3), pair12(), group(&Group::symmetric3())] {
            for d in [example_dmain(&g).unwrap(), example_dinertia(&g).unwrap()] {
                for d in [d.transpose(), d] {
                    let rep = check_hopfoid(&to_hopfoid(&d).unwrap());
                    assert!(rep.passed(), "{rep}");
                }
            }
        }
    }

    #[test]
    fn identity_antipode_on_dinertia_fails() {
        let mut h = to_hopfoid(&example_dinertia(&z(2)).unwrap()).unwrap();
        h.antipode = Rel::identity(&h.carrier);
        let rep = check_hopfoid(&h);
        assert!(!rep.get("left-antipode").unwrap().pass || !rep.get("right-antipode").unwrap().pass);
    }

    #[test]
    fn one_square_hopfoid_is_all_singletons() {
        let h = to_hopfoid(&example_dmain(&z(1)).unwrap()).unwrap();
        for r in h.relations() {
            assert_eq!(r.len(), 1);
        }
        assert!(check_hopfoid(&h).passed());
    }

    #[test]
    fn transposed_double_gives_the_dual() {
        for g in [z(2), pair12(), group(&Group::symmetric3())] {
            for d in [example_dmain(&g).unwrap(), example_dinertia(&g).unwrap()] {
                let h = to_hopfoid(&d).unwrap();
                let t = to_hopfoid(&d.transpose()).unwrap();
                for (k, (a, b)) in t.relations().iter().zip(h.dual_relations().iter()).enumerate() {
                    assert!(a.same(b), "relation {k}: {:?}", a.difference(b));
                }
            }
        }
    }

    #[test]
    fn group_style_shape_is_a_hopfoid_only_for_groups() {
        let rep = check_hopfoid(&group_style_hopfoid(&z(3)));
        assert!(rep.passed(), "{rep}");
        let rep = check_hopfoid(&group_style_hopfoid(&pair12()));
        assert!(!rep.passed());
    }
}
