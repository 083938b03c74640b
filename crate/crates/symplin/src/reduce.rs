//! Coisotropic reduction and the factorization of a canonical relation into
//! a reduction, a symplectomorphism and a coreduction.

use crate::canrel::LinCanRel;
use crate::error::LinError;
use crate::matrix::Matrix;
use crate::space::{SympSpace, Subspace};

/// A coisotropic subspace `C`, its quotient `C/C^⊥` and the reduction onto
/// it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionData {
    pub coisotropic: Subspace,
    pub quotient: SympSpace,
    /// `q×n` matrix taking a vector of `C` to its quotient coordinates; it
    /// vanishes on `C^⊥` and on a fixed complement of `C`.
    pub projection: Matrix,
    /// `{(c, [c]) : c ∈ C}` from the ambient space to the quotient.
    pub rel: LinCanRel,
}

impl ReductionData {
    /// Quotient coordinates of a vector of `C`.
    pub fn class_of(&self, v: &[crate::matrix::Q]) -> Vec<crate::matrix::Q> {
        self.projection.transpose().apply_row(v)
    }
}

/// Rows of `extra` that enlarge the span of `base`, appended greedily.
fn extend(base: &Matrix, extra: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(0, base.ncols());
    let mut span = base.clone();
    for r in extra.rows() {
        let mut next = span.clone();
        next.push_row(r.clone());
        if next.rank() > span.rank() {
            span = next;
            out.push_row(r.clone());
        }
    }
    out
}

pub fn reduce(c: &Subspace) -> Result<ReductionData, LinError> {
    let v = c.ambient();
    let n = v.dim();
    let perp = c.orth();
    if !c.contains(&perp) {
        return Err(LinError::NotCoisotropic);
    }
    // the form must not see C^⊥ against C, or classes would have no
    // well-defined pairing
    if !perp.basis().mul(v.form()).mul(&c.basis().transpose()).is_zero() {
        return Err(LinError::Broken("C^⊥ pairs nontrivially with C".into()));
    }
    let reps = extend(perp.basis(), c.basis());
    let q = reps.nrows();
    let quotient = SympSpace::new(reps.mul(v.form()).mul(&reps.transpose()))?;
    // ambient basis: representatives, then C^⊥, then a complement of C
    let inside = reps.vstack(perp.basis());
    let frame = inside.vstack(&extend(&inside, &Matrix::identity(n)));
    let coords = frame.inverse().ok_or_else(|| LinError::Broken("frame is singular".into()))?;
    let to_quotient = coords.columns(0..q);
    let rows = c.basis().hstack(&c.basis().mul(&to_quotient));
    let rel = LinCanRel::assemble(v, &quotient, &rows);
    Ok(ReductionData { coisotropic: c.clone(), quotient, projection: to_quotient.transpose(), rel })
}

/// The symplectomorphism between the reduced domain and reduced image of a
/// relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    pub domain: ReductionData,
    pub image: ReductionData,
    /// Column-convention matrix `[v] ↦ [w]`.
    pub map: Matrix,
}

pub fn induced_iso(l: &LinCanRel) -> Result<QuotientMap, LinError> {
    let (dom, im) = l.dom_im();
    let domain = reduce(&dom)?;
    let image = reduce(&im)?;
    let (n, m) = (l.src().dim(), l.dst().dim());
    let g = l.graph().basis();
    let a = g.columns(0..n).mul(&domain.projection.transpose());
    let b = g.columns(n..n + m).mul(&image.projection.transpose());
    let (qd, qi) = (domain.quotient.dim(), image.quotient.dim());
    let pairs = a.hstack(&b);
    let rank = pairs.rank();
    if rank != a.rank() {
        return Err(LinError::Broken("class map is not well defined".into()));
    }
    if rank != b.rank() || rank != qd || qd != qi {
        return Err(LinError::Broken("class map is not bijective".into()));
    }
    // in echelon form the domain part is the identity, so the image part
    // lists the images of the unit vectors
    let (r, _) = pairs.rref();
    let map = r.columns(qd..qd + qi).transpose();
    let pulled = map.transpose().mul(image.quotient.form()).mul(&map);
    if &pulled != domain.quotient.form() {
        return Err(LinError::Broken("class map does not preserve the forms".into()));
    }
    Ok(QuotientMap { domain, image, map })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub reduction: LinCanRel,
    pub iso: LinCanRel,
    pub coreduction: LinCanRel,
}

impl Factorization {
    pub fn recompose(&self) -> Result<LinCanRel, LinError> {
        Ok(self.reduction.then(&self.iso)?.0.then(&self.coreduction)?.0)
    }
}

pub fn factor(l: &LinCanRel) -> Result<Factorization, LinError> {
    let t = induced_iso(l)?;
    let iso = LinCanRel::from_map(&t.domain.quotient, &t.image.quotient, &t.map)?;
    Ok(Factorization { reduction: t.domain.rel, iso, coreduction: t.image.rel.transpose() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::q;

    fn plane() -> SympSpace {
        SympSpace::new(Matrix::from_ints(2, &[&[0, 1], &[-1, 0]])).unwrap()
    }

    #[test]
    fn full_space_reduces_to_itself() {
        let v = plane().sum(&plane());
        let r = reduce(&Subspace::full(&v)).unwrap();
        assert_eq!(r.quotient.dim(), 4);
        assert!(r.rel.is_reduction());
        assert!(r.rel.is_coreduction());
        assert_eq!(r.rel.dom_im().0, Subspace::full(&v));
    }

    #[test]
    fn lagrangian_reduces_to_the_point() {
        let v = plane();
        let l = Subspace::span(&v, &Matrix::from_ints(2, &[&[1, 3]])).unwrap();
        let r = reduce(&l).unwrap();
        assert_eq!(r.quotient, SympSpace::point());
        assert!(r.rel.is_reduction());
    }

    #[test]
    fn three_of_four_reduces_to_a_plane() {
        let v = plane().sum(&plane());
        let c = Subspace::span(&v, &Matrix::from_ints(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]])).unwrap();
        let r = reduce(&c).unwrap();
        assert_eq!(r.quotient.dim(), 2);
        assert!(r.rel.is_reduction());
        assert_eq!(r.rel.dom_im().0, c);
        // C^⊥ = span{e3} lands on zero
        assert!(r.class_of(&[q(0), q(0), q(1), q(0)]).iter().all(|x| *x == q(0)));
        assert!(matches!(reduce(&Subspace::zero(&v)), Err(LinError::NotCoisotropic)));
    }

    #[test]
    fn induced_map_of_a_symplectomorphism_is_itself() {
        let v = plane();
        let t = Matrix::from_ints(2, &[&[2, 1], &[1, 1]]);
        let l = LinCanRel::from_map(&v, &v, &t).unwrap();
        assert_eq!(induced_iso(&l).unwrap().map, t);
    }

    #[test]
    fn reduction_factors_with_trivial_outer_legs() {
        let v = plane().sum(&plane());
        let c = Subspace::span(&v, &Matrix::from_ints(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]])).unwrap();
        let red = reduce(&c).unwrap().rel;
        let t = induced_iso(&red).unwrap();
        assert_eq!(t.map, Matrix::identity(2));
        let f = factor(&red).unwrap();
        assert_eq!(f.reduction, red);
        assert_eq!(f.iso, LinCanRel::identity(&t.domain.quotient));
        assert_eq!(f.recompose().unwrap(), red);
    }

    #[test]
    fn identity_factors_into_identities() {
        let v = plane();
        let f = factor(&LinCanRel::identity(&v)).unwrap();
        for leg in [&f.reduction, &f.iso, &f.coreduction] {
            assert_eq!(*leg, LinCanRel::identity(&v));
        }
    }
}
