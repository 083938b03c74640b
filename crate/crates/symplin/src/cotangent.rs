//! Cotangent spaces of `Qⁿ`, cotangent lifts of linear maps, and the
//! comonoid and Hopf structures they carry.
//!
//! Coordinates of `T*Qⁿ` interleave positions and covectors as
//! `(x₁, ξ₁, …, xₙ, ξₙ)` with `ω = Σ dxᵢ∧dξᵢ`, so `T*Qⁿ⁺ᵐ` is the direct sum
//! `T*Qⁿ ⊕ T*Qᵐ` on the nose.

use num_traits::One;
use relcat::{Comonoid, Monoid};

use crate::canrel::{LinCanRel, LinCat};
use crate::matrix::{Matrix, Q};
use crate::space::SympSpace;

pub fn cotangent_space(n: usize) -> SympSpace {
    let mut form = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        form.set(2 * i, 2 * i + 1, Q::one());
        form.set(2 * i + 1, 2 * i, -Q::one());
    }
    SympSpace::new(form).expect("standard form")
}

/// The vector of `T*Qⁿ` with position `x` and covector `xi`.
pub fn cotangent_vector(x: &[Q], xi: &[Q]) -> Vec<Q> {
    x.iter().zip(xi).flat_map(|(a, b)| [a.clone(), b.clone()]).collect()
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::default(); n];
    v[i] = Q::one();
    v
}

/// `T*f: (x, fᵀη) ↦ (f·x, η)` for `f: Qⁿ → Qᵐ` given as an `m×n` matrix.
pub fn cotangent_lift(f: &Matrix) -> LinCanRel {
    let (m, n) = (f.nrows(), f.ncols());
    let ft = f.transpose();
    let zn = vec![Q::default(); n];
    let zm = vec![Q::default(); m];
    let mut rows = Matrix::zeros(0, 2 * (n + m));
    for j in 0..n {
        let x = unit(n, j);
        let fx = ft.apply_row(&x);
        let mut r = cotangent_vector(&x, &zn);
        r.extend(cotangent_vector(&fx, &zm));
        rows.push_row(r);
    }
    for k in 0..m {
        let eta = unit(m, k);
        let mut r = cotangent_vector(&zn, &f.apply_row(&eta));
        r.extend(cotangent_vector(&zm, &eta));
        rows.push_row(r);
    }
    LinCanRel::assemble(&cotangent_space(n), &cotangent_space(m), &rows)
}

/// `(p, ξ) ↦ (p, −ξ)` from `T*Qⁿ` to its dual.
pub fn schwartz(n: usize) -> LinCanRel {
    let v = cotangent_space(n);
    let mut t = Matrix::identity(2 * n);
    for i in 0..n {
        t.set(2 * i + 1, 2 * i + 1, -Q::one());
    }
    LinCanRel::from_map(&v, &v.dual(), &t).expect("fiber negation is antisymplectic")
}

fn stack_identities(n: usize, copies: usize, horizontal: bool) -> Matrix {
    let mut m = if horizontal { Matrix::zeros(n, 0) } else { Matrix::zeros(0, n) };
    for _ in 0..copies {
        m = if horizontal { m.hstack(&Matrix::identity(n)) } else { m.vstack(&Matrix::identity(n)) };
    }
    m
}

/// Lift of the diagonal with the lift of the map to zero.
pub fn cotangent_comonoid(n: usize) -> Comonoid<LinCat> {
    Comonoid {
        carrier: cotangent_space(n),
        coproduct: cotangent_lift(&stack_identities(n, 2, false)),
        counit: cotangent_lift(&Matrix::zeros(0, n)),
    }
}

/// The Hopf structure of the additive group `Qⁿ` lifted to `T*Qⁿ`.
#[derive(Clone, Debug)]
pub struct VectorHopf {
    pub monoid: Monoid<LinCat>,
    pub comonoid: Comonoid<LinCat>,
    pub antipode: LinCanRel,
}

pub fn vector_hopf(n: usize) -> VectorHopf {
    VectorHopf {
        monoid: Monoid {
            carrier: cotangent_space(n),
            product: cotangent_lift(&stack_identities(n, 2, true)),
            // the fiber over zero
            unit: cotangent_lift(&Matrix::zeros(n, 0)),
        },
        comonoid: cotangent_comonoid(n),
        antipode: cotangent_lift(&Matrix::identity(n).neg()),
    }
}

#[cfg(test)]
mod tests {
    use relcat::{check_comonoid, check_hopf, check_monoid};

    use super::*;
    use crate::space::Subspace;

    #[test]
    fn small_cotangent_spaces() {
        assert_eq!(cotangent_space(0), SympSpace::point());
        assert_eq!(cotangent_space(1).form(), &Matrix::from_ints(2, &[&[0, 1], &[-1, 0]]));
        assert_eq!(cotangent_space(2), cotangent_space(1).sum(&cotangent_space(1)));
    }

    #[test]
    fn lift_of_doubling() {
        let l = cotangent_lift(&Matrix::from_ints(1, &[&[2]]));
        let expect = Subspace::span(l.graph().ambient(), &Matrix::from_ints(4, &[&[1, 0, 2, 0], &[0, 2, 0, 1]])).unwrap();
        assert_eq!(l.graph(), &expect);
        assert_eq!(cotangent_lift(&Matrix::identity(3)), LinCanRel::identity(&cotangent_space(3)));
    }

    #[test]
    fn schwartz_on_the_line() {
        let s = schwartz(1);
        let expect = Subspace::span(s.graph().ambient(), &Matrix::from_ints(4, &[&[1, 0, 1, 0], &[0, 1, 0, -1]])).unwrap();
        assert_eq!(s.graph(), &expect);
        assert_eq!(schwartz(0), LinCanRel::identity(&SympSpace::point()));
        let back = s.transpose().then(&s).unwrap().0;
        assert_eq!(back, LinCanRel::identity(&cotangent_space(1).dual()));
    }

    #[test]
    fn comonoid_on_the_line() {
        let c = cotangent_comonoid(1);
        assert_eq!(c.coproduct.graph().dim(), 3);
        assert!(check_comonoid(&c).passed());
        assert!(check_comonoid(&cotangent_comonoid(0)).passed());
    }

    #[test]
    fn vector_hopf_in_low_dimension() {
        for n in 0..=2 {
            let h = vector_hopf(n);
            assert!(check_monoid(&h.monoid).passed());
            let rep = check_hopf(&h.monoid, &h.comonoid, &h.antipode).unwrap();
            assert!(rep.passed(), "{rep}");
            let twice = h.antipode.then(&h.antipode).unwrap().0;
            assert_eq!(twice, LinCanRel::identity(&cotangent_space(n)));
        }
    }
}
