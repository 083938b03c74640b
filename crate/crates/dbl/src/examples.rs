//! Standard double groupoids: a groupoid as a double over trivial sides,
//! the pair-groupoid double of a groupoid, and crossed modules.

use grpd::{group, pair, product, trivial, FinGroupoid, Group};
use relcat::FinSet;

use crate::double::FinDoubleGroupoid;
use crate::error::DblError;

/// A crossed module: a homomorphism `t: H → G` and an action of `G` on
/// `H`, with `phi[g * |H| + h] = φ_g(h)`.
#[derive(Debug, Clone)]
pub struct CrossedModule {
    pub g: Group,
    pub h: Group,
    pub t: Vec<usize>,
    pub phi: Vec<usize>,
}

impl CrossedModule {
    /// `φ_g(h)`.
    pub fn act(&self, g: usize, h: usize) -> usize {
        self.phi[g * self.h.order() + h]
    }

    /// Both groups equal, `t` the identity, action by conjugation.
    pub fn identity(g: &Group) -> Self {
        let n = g.order();
        let phi = (0..n * n).map(|i| g.mul(g.mul(i / n, i % n), g.inv(i / n))).collect();
        Self { g: g.clone(), h: g.clone(), t: (0..n).collect(), phi }
    }

    /// `t` trivial and `G` acting on an abelian `H` through `phi`.
    pub fn trivial_map(g: &Group, h: &Group, phi: Vec<usize>) -> Self {
        Self { g: g.clone(), h: h.clone(), t: vec![g.identity(); h.order()], phi }
    }

    pub fn validate(&self) -> Result<(), DblError> {
        let (g, h) = (&self.g, &self.h);
        let (ng, nh) = (g.order(), h.order());
        let fail = |msg: String| Err(DblError::NotCrossed(msg));
        if self.t.len() != nh || self.phi.len() != ng * nh {
            return fail("table sizes".into());
        }
        if self.t.iter().any(|&x| x >= ng) || self.phi.iter().any(|&x| x >= nh) {
            return fail("index out of range".into());
        }
        for a in 0..nh {
            for b in 0..nh {
                if self.t[h.mul(a, b)] != g.mul(self.t[a], self.t[b]) {
                    return fail(format!("t is not a homomorphism at ({}, {})", h.name(a), h.name(b)));
                }
            }
        }
        for x in 0..ng {
            let mut seen = vec![false; nh];
            for a in 0..nh {
                seen[self.act(x, a)] = true;
                for b in 0..nh {
                    if self.act(x, h.mul(a, b)) != h.mul(self.act(x, a), self.act(x, b)) {
                        return fail(format!("φ_{} is not a homomorphism", g.name(x)));
                    }
                }
            }
            if seen.contains(&false) {
                return fail(format!("φ_{} is not a bijection", g.name(x)));
            }
            for y in 0..ng {
                if (0..nh).any(|a| self.act(g.mul(x, y), a) != self.act(x, self.act(y, a))) {
                    return fail(format!("φ is not an action at ({}, {})", g.name(x), g.name(y)));
                }
            }
            for a in 0..nh {
                if self.t[self.act(x, a)] != g.mul(g.mul(x, self.t[a]), g.inv(x)) {
                    return fail(format!("t is not equivariant at ({}, {})", g.name(x), h.name(a)));
                }
            }
        }
        for a in 0..nh {
            for b in 0..nh {
                if self.act(self.t[a], b) != h.mul(h.mul(a, b), h.inv(a)) {
                    return fail(format!("Peiffer identity fails at ({}, {})", h.name(a), h.name(b)));
                }
            }
        }
        Ok(())
    }
}

/// Which example to build.
#[derive(Debug, Clone)]
pub enum Example {
    Main(FinGroupoid),
    Inertia(FinGroupoid),
    Crossed(CrossedModule),
}

pub fn build_example(kind: Example) -> Result<FinDoubleGroupoid, DblError> {
    match kind {
        Example::Main(g) => example_dmain(&g),
        Example::Inertia(g) => example_dinertia(&g),
        Example::Crossed(c) => example_crossed(&c),
    }
}

/// The groupoid as horizontal structure over trivial horizontal sides; the
/// vertical structure is trivial.
pub fn example_dmain(g: &FinGroupoid) -> Result<FinDoubleGroupoid, DblError> {
    g.require_valid()?;
    let side_h = trivial(g.objects());
    let vstruct = trivial(g.arrows());
    let d = FinDoubleGroupoid::new(side_h, g.clone(), g.clone(), vstruct)?;
    d.require_valid()?;
    Ok(d)
}

/// Squares are pairs `(g, h)` of arrows. Vertically they form the pair
/// groupoid on the arrows; horizontally the product groupoid over the pair
/// groupoid of objects.
pub fn example_dinertia(g: &FinGroupoid) -> Result<FinDoubleGroupoid, DblError> {
    g.require_valid()?;
    let side_h = pair(g.objects());
    let vstruct = pair(g.arrows());
    let hstruct = product(g, g);
    let d = FinDoubleGroupoid::new(side_h, g.clone(), hstruct, vstruct)?;
    d.require_valid()?;
    Ok(d)
}

/// Squares `(h, g)`. Vertically the action groupoid of `H` on `G` by
/// `h·g = t(h)g`; horizontally the semidirect product group over a point.
pub fn example_crossed(c: &CrossedModule) -> Result<FinDoubleGroupoid, DblError> {
    c.validate()?;
    let (gg, hh) = (&c.g, &c.h);
    let (ng, nh) = (gg.order(), hh.order());
    let squares = FinSet::product(hh.set(), gg.set());
    let split = |s: usize| (s / ng, s % ng);
    let semi = Group::from_table(
        squares.clone(),
        (0..nh * ng)
            .flat_map(|a| (0..nh * ng).map(move |b| (a, b)))
            .map(|(a, b)| {
                let ((h, g), (h2, g2)) = (split(a), split(b));
                hh.mul(h, c.act(g, h2)) * ng + gg.mul(g, g2)
            })
            .collect(),
    )?;
    let side_v = group(gg);
    let side_h = trivial(side_v.objects());
    let hstruct = group(&semi);
    let vstruct = FinGroupoid::from_fn(
        squares,
        gg.set().clone(),
        (0..nh * ng).map(|s| split(s).1).collect(),
        (0..nh * ng).map(|s| gg.mul(c.t[split(s).0], split(s).1)).collect(),
        (0..ng).map(|g| hh.identity() * ng + g).collect(),
        |a, b| hh.mul(split(a).0, split(b).0) * ng + split(b).1,
        (0..nh * ng).map(|s| hh.inv(split(s).0) * ng + gg.mul(c.t[split(s).0], split(s).1)).collect(),
    )?;
    let d = FinDoubleGroupoid::new(side_h, side_v, hstruct, vstruct)?;
    d.require_valid()?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FinGroupoid {
        group(&Group::cyclic(n))
    }

    #[test]
    fn dmain_of_z2_has_two_squares() {
        let d = example_dmain(&z(2)).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.is_valid());
    }

    #[test]
    fn dinertia_of_pair_on_two_has_sixteen_squares() {
        let d = example_dinertia(&pair(&FinSet::of("M", ["1", "2"]))).unwrap();
        assert_eq!(d.len(), 16);
        assert!(d.is_valid());
    }

    #[test]
    fn trivial_crossed_module_has_four_squares() {
        let z2 = Group::cyclic(2);
        let c = CrossedModule::trivial_map(&z2, &z2, vec![0, 1, 0, 1]);
        let d = example_crossed(&c).unwrap();
        assert_eq!(d.len(), 4);
    }

    #[test]
    fn crossed_modules_give_valid_doubles() {
        let z2 = Group::cyclic(2);
        let z3 = Group::cyclic(3);
        // Z2 acting on Z3 by inversion
        let c = CrossedModule::trivial_map(&z2, &z3, vec![0, 1, 2, 0, 2, 1]);
        assert!(example_crossed(&c).unwrap().is_valid());
        for g in [Group::symmetric3(), Group::quaternion(), z3] {
            assert!(example_crossed(&CrossedModule::identity(&g)).unwrap().is_valid());
        }
    }

    #[test]
    fn bad_crossed_module_is_rejected() {
        let s3 = Group::symmetric3();
        // trivial action of S3 on itself fails the Peiffer identity
        let phi = (0..36).map(|i| i % 6).collect();
        let c = CrossedModule { g: s3.clone(), h: s3, t: (0..6).collect(), phi };
        assert!(matches!(c.validate(), Err(DblError::NotCrossed(_))));
    }

    #[test]
    fn doubles_of_several_groupoids_validate() {
        let gs = [z(3), pair(&FinSet::of("M", ["1", "2"])), grpd::product(&pair(&FinSet::of("M", ["1", "2"])), &z(2))];
        for g in &gs {
            assert!(example_dmain(g).unwrap().is_valid());
            assert!(example_dinertia(g).unwrap().is_valid());
        }
    }
}
