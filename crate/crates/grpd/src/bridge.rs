//! Groupoids as strongly positive star monoids in the relation category,
//! and back.

use relcat::{check_monoid, check_star, FinSet, Monoid, Rel, RelMonoid, StarStructure};

use crate::error::GrpdError;
use crate::groupoid::FinGroupoid;

/// Product relation from the composition table, unit relation onto the unit
/// arrows, star from the inverse.
pub fn to_star_monoid(g: &FinGroupoid) -> Result<(RelMonoid, StarStructure), GrpdError> {
    g.require_valid()?;
    let c = g.arrows().clone();
    let n = c.len();
    let product = Rel::graph(FinSet::product(&c, &c), c.clone(), |i| g.mul(i / n, i % n));
    let unit = Rel::point_to(&c, g.units().iter().copied());
    let star = Rel::graph(c.clone(), c.clone(), |a| Some(g.inv(a)));
    Ok((Monoid { carrier: c.clone(), product, unit }, StarStructure { carrier: c, star }))
}

/// Rebuilds the groupoid. Objects are the unit elements in carrier order; the
/// target of `s` is the unique unit `u` with `us` defined, the source the
/// unique unit `u` with `su` defined.
pub fn from_star_monoid(m: &RelMonoid, s: &StarStructure) -> Result<FinGroupoid, GrpdError> {
    let rep = check_monoid(m);
    if !rep.passed() {
        return Err(GrpdError::NotAMonoid(rep.to_string()));
    }
    let star = check_star(s, m).map_err(|e| GrpdError::Shape(e.to_string()))?;
    if !star.star_ok {
        return Err(GrpdError::NotAMonoid(star.report.to_string()));
    }
    if !star.strongly_positive {
        return Err(GrpdError::NotStronglyPositive);
    }
    let c = m.carrier.clone();
    let n = c.len();
    let units: Vec<usize> = m.unit.pairs().iter().map(|&(_, u)| u).collect();
    let mut table: Vec<Option<usize>> = vec![None; n * n];
    for &(i, k) in m.product.pairs() {
        if table[i].replace(k).is_some() {
            return Err(GrpdError::MultiValued { left: c.name(i / n), right: c.name(i % n) });
        }
    }
    let unique = |a: usize, side: &'static str, defined: &dyn Fn(usize) -> bool| {
        let found: Vec<usize> = (0..units.len()).filter(|&x| defined(units[x])).collect();
        match found[..] {
            [x] => Ok(x),
            _ => Err(GrpdError::Ambiguous { element: c.name(a), side }),
        }
    };
    let mut source = Vec::with_capacity(n);
    let mut target = Vec::with_capacity(n);
    for a in 0..n {
        target.push(unique(a, "left", &|u| table[u * n + a].is_some())?);
        source.push(unique(a, "right", &|u| table[a * n + u].is_some())?);
    }
    let objects = FinSet::new(format!("E({})", c.id()), units.iter().map(|&u| c.name(u)).collect())
        .map_err(|d| GrpdError::Shape(format!("duplicate unit {d}")))?;
    let inv = s.star.as_map().ok_or_else(|| GrpdError::Shape("star is not a map".into()))?;
    let comp = (0..n * n).filter_map(|i| table[i].map(|k| (i / n, i % n, k))).collect();
    let out = FinGroupoid::new(c, objects, source, target, units, comp, inv)?;
    out.require_valid()?;
    Ok(out)
}

/// Whether two groupoids on the same arrow set agree once every object is
/// identified with its unit arrow.
pub fn agree_on_arrows(a: &FinGroupoid, b: &FinGroupoid) -> bool {
    FinSet::same(a.arrows(), b.arrows())
        && a.objects().len() == b.objects().len()
        && (0..a.len()).all(|g| {
            a.right_unit(g) == b.right_unit(g) && a.left_unit(g) == b.left_unit(g) && a.inv(g) == b.inv(g)
        })
        && a.comp() == b.comp()
}

/// Runs the round trip through star monoids and compares with the input.
pub fn round_trip(g: &FinGroupoid) -> Result<bool, GrpdError> {
    let (m, s) = to_star_monoid(g)?;
    Ok(agree_on_arrows(g, &from_star_monoid(&m, &s)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::standard::{group, pair, trivial};
    use relcat::StarStructure;

    #[test]
    fn z2_star_monoid_passes() {
        let (m, s) = to_star_monoid(&group(&Group::cyclic(2))).unwrap();
        assert!(check_monoid(&m).passed());
        let st = check_star(&s, &m).unwrap();
        assert!(st.star_ok && st.strongly_positive);
    }

    #[test]
    fn pair_star_monoid_passes() {
        let (m, s) = to_star_monoid(&pair(&FinSet::of("M", ["1", "2"]))).unwrap();
        assert!(check_monoid(&m).passed());
        assert!(check_star(&s, &m).unwrap().strongly_positive);
    }

    #[test]
    fn one_arrow_groupoid_is_the_trivial_monoid() {
        let (m, _) = to_star_monoid(&trivial(&FinSet::of("M", ["a"]))).unwrap();
        assert_eq!(m.product.len(), 1);
        assert_eq!(m.unit.len(), 1);
    }

    #[test]
    fn round_trips() {
        assert!(round_trip(&group(&Group::cyclic(3))).unwrap());
        assert!(round_trip(&pair(&FinSet::of("M", ["1", "2", "3"]))).unwrap());
    }

    #[test]
    fn commutative_star_that_is_not_inverse_fails_positivity() {
        // Z3 is abelian, so the identity is an antihomomorphism; only
        // strong positivity can reject it
        let (m, _) = to_star_monoid(&group(&Group::cyclic(3))).unwrap();
        let s = StarStructure { carrier: m.carrier.clone(), star: Rel::identity(&m.carrier) };
        assert!(matches!(from_star_monoid(&m, &s), Err(GrpdError::NotStronglyPositive)));
    }

    #[test]
    fn broken_monoid_is_rejected() {
        let (mut m, s) = to_star_monoid(&group(&Group::cyclic(2))).unwrap();
        m.unit = Rel::empty(FinSet::pt(), m.carrier.clone());
        assert!(matches!(from_star_monoid(&m, &s), Err(GrpdError::NotAMonoid(_))));
    }
}
