//! Linear canonical relations and their composition.

use std::fmt;

use relcat::Category;

use crate::error::LinError;
use crate::matrix::{Matrix, Q};
use crate::space::{SympSpace, Subspace};

/// A lagrangian subspace of `dual(src) ⊕ dst`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinCanRel {
    src: SympSpace,
    dst: SympSpace,
    graph: Subspace,
}

/// How the two graphs meet along the middle space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Transversality {
    pub transversal: bool,
    pub strongly_transversal: bool,
}

fn pad(v: &[Q], before: usize, after: usize) -> Vec<Q> {
    let mut out = vec![Q::default(); before];
    out.extend_from_slice(v);
    out.resize(before + v.len() + after, Q::default());
    out
}

impl LinCanRel {
    /// The relation spanned by `rows` in `dual(src) ⊕ dst`; fails unless it
    /// is lagrangian.
    pub fn new(src: &SympSpace, dst: &SympSpace, rows: &Matrix) -> Result<Self, LinError> {
        let graph = Subspace::span(&src.dual().sum(dst), rows)?;
        if !graph.is_lagrangian() {
            return Err(LinError::NotLagrangian);
        }
        Ok(LinCanRel { src: src.clone(), dst: dst.clone(), graph })
    }

    /// For constructions that are lagrangian by design; the property is
    /// still checked.
    pub(crate) fn assemble(src: &SympSpace, dst: &SympSpace, rows: &Matrix) -> Self {
        match Self::new(src, dst, rows) {
            Ok(r) => r,
            Err(e) => panic!("constructed relation {} → {} failed: {e}", src.dim(), dst.dim()),
        }
    }

    pub fn identity(v: &SympSpace) -> Self {
        let n = v.dim();
        Self::assemble(v, v, &Matrix::identity(n).hstack(&Matrix::identity(n)))
    }

    /// The graph of `x ↦ t·x`, which must preserve the forms.
    pub fn from_map(src: &SympSpace, dst: &SympSpace, t: &Matrix) -> Result<Self, LinError> {
        if t.nrows() != dst.dim() || t.ncols() != src.dim() {
            return Err(LinError::Shape(format!("{}×{} map from {} to {}", t.nrows(), t.ncols(), src.dim(), dst.dim())));
        }
        Self::new(src, dst, &Matrix::identity(src.dim()).hstack(&t.transpose()))
    }

    pub fn src(&self) -> &SympSpace {
        &self.src
    }

    pub fn dst(&self) -> &SympSpace {
        &self.dst
    }

    pub fn graph(&self) -> &Subspace {
        &self.graph
    }

    pub fn transpose(&self) -> Self {
        let (n, m) = (self.src.dim(), self.dst.dim());
        let b = self.graph.basis();
        Self::assemble(&self.dst, &self.src, &b.columns(n..n + m).hstack(&b.columns(0..n)))
    }

    /// `self` followed by `next`, with the transversality of the meeting.
    pub fn then(&self, next: &LinCanRel) -> Result<(LinCanRel, Transversality), LinError> {
        if self.dst != next.src {
            return Err(LinError::Mismatch(format!("{} then {}", self.dst, next.src)));
        }
        let (nu, nv, nw) = (self.src.dim(), self.dst.dim(), next.dst.dim());
        let (l, r) = (self.graph.basis(), next.graph.basis());
        let (k, k2) = (l.nrows(), r.nrows());
        // coefficients (a, b) with a·L and b·L' agreeing on the middle space
        let middle = l.columns(nu..nu + nv).vstack(&r.columns(0..nv).neg());
        let coeffs = middle.transpose().nullspace();
        let fiber = coeffs.nrows();
        let image = coeffs.columns(0..k).mul(&l.columns(0..nu)).hstack(&coeffs.columns(k..k + k2).mul(&r.columns(nv..nv + nw)));
        let composite = Self::assemble(&self.src, &next.dst, &image);
        let transversal = fiber + nv == k + k2;
        let kernel = fiber - composite.graph.dim();
        Ok((composite, Transversality { transversal, strongly_transversal: transversal && kernel == 0 }))
    }

    /// Direct sum of relations.
    pub fn cross(&self, other: &LinCanRel) -> Self {
        let (n1, m1) = (self.src.dim(), self.dst.dim());
        let (n2, m2) = (other.src.dim(), other.dst.dim());
        let mut rows = Matrix::zeros(0, n1 + n2 + m1 + m2);
        for r in self.graph.basis().rows() {
            let mut v = pad(&r[..n1], 0, n2);
            v.extend(pad(&r[n1..], 0, m2));
            rows.push_row(v);
        }
        for r in other.graph.basis().rows() {
            let mut v = pad(&r[..n2], n1, 0);
            v.extend(pad(&r[n2..], m1, 0));
            rows.push_row(v);
        }
        Self::assemble(&self.src.sum(&other.src), &self.dst.sum(&other.dst), &rows)
    }

    /// `a ⊕ b → b ⊕ a`.
    pub fn swap(a: &SympSpace, b: &SympSpace) -> Self {
        let (n, m) = (a.dim(), b.dim());
        let ab = a.sum(b);
        let mut t = Matrix::zeros(n + m, n + m);
        for i in 0..n {
            t.set(m + i, i, Q::from_integer(1.into()));
        }
        for j in 0..m {
            t.set(j, n + j, Q::from_integer(1.into()));
        }
        Self::from_map(&ab, &b.sum(a), &t).expect("swap preserves forms")
    }

    /// Projections of the graph to the source and to the target.
    pub fn dom_im(&self) -> (Subspace, Subspace) {
        let (n, m) = (self.src.dim(), self.dst.dim());
        let b = self.graph.basis();
        let dom = Subspace::span(&self.src, &b.columns(0..n)).expect("source columns");
        let im = Subspace::span(&self.dst, &b.columns(n..n + m)).expect("target columns");
        assert!(dom.is_coisotropic() && im.is_coisotropic(), "domain and image are coisotropic");
        (dom, im)
    }

    /// `selfᵗ` then `self` is the identity on the target.
    pub fn is_reduction(&self) -> bool {
        self.transpose().then(self).is_ok_and(|(c, _)| c == Self::identity(&self.dst))
    }

    /// `self` then `selfᵗ` is the identity on the source.
    pub fn is_coreduction(&self) -> bool {
        self.then(&self.transpose()).is_ok_and(|(c, _)| c == Self::identity(&self.src))
    }
}

impl fmt::Display for LinCanRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q^{} → Q^{}: {}", self.src.dim(), self.dst.dim(), self.graph)
    }
}

/// `l1` followed by `l2`.
pub fn compose_lin(l1: &LinCanRel, l2: &LinCanRel) -> Result<(LinCanRel, Transversality), LinError> {
    l1.then(l2)
}

/// Symplectic spaces and linear canonical relations.
#[derive(Debug, Clone, Copy)]
pub struct LinCat;

impl Category for LinCat {
    type Obj = SympSpace;
    type Mor = LinCanRel;

    fn src(f: &LinCanRel) -> SympSpace {
        f.src.clone()
    }
    fn dst(f: &LinCanRel) -> SympSpace {
        f.dst.clone()
    }
    fn id(o: &SympSpace) -> LinCanRel {
        LinCanRel::identity(o)
    }
    fn then(f: &LinCanRel, g: &LinCanRel) -> Result<LinCanRel, String> {
        f.then(g).map(|(c, _)| c).map_err(|e| e.to_string())
    }
    fn unit() -> SympSpace {
        SympSpace::point()
    }
    fn tensor(a: &SympSpace, b: &SympSpace) -> SympSpace {
        a.sum(b)
    }
    fn cross(f: &LinCanRel, g: &LinCanRel) -> LinCanRel {
        f.cross(g)
    }
    fn swap(a: &SympSpace, b: &SympSpace) -> LinCanRel {
        LinCanRel::swap(a, b)
    }
    fn transpose(f: &LinCanRel) -> LinCanRel {
        f.transpose()
    }
    fn differ(f: &LinCanRel, g: &LinCanRel) -> Option<Vec<String>> {
        if f == g {
            return None;
        }
        if f.src != g.src || f.dst != g.dst {
            return Some(vec![format!("{f}"), format!("{g}")]);
        }
        let show = |v: Vec<Q>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let mut w = Vec::new();
        if let Some(v) = f.graph.witness_outside(&g.graph) {
            w.push(format!("only left: {}", show(v)));
        }
        if let Some(v) = g.graph.witness_outside(&f.graph) {
            w.push(format!("only right: {}", show(v)));
        }
        Some(w)
    }
    fn same_obj(a: &SympSpace, b: &SympSpace) -> bool {
        a == b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane() -> SympSpace {
        SympSpace::new(Matrix::from_ints(2, &[&[0, 1], &[-1, 0]])).unwrap()
    }

    fn line_in(v: &SympSpace, rows: &[&[i64]]) -> LinCanRel {
        LinCanRel::new(&SympSpace::point(), v, &Matrix::from_ints(v.dim(), rows)).unwrap()
    }

    #[test]
    fn non_lagrangian_graphs_are_rejected() {
        let v = plane();
        assert_eq!(LinCanRel::new(&v, &v, &Matrix::identity(4)), Err(LinError::NotLagrangian));
        assert!(LinCanRel::new(&SympSpace::point(), &v, &Matrix::from_ints(2, &[&[1, 0], &[0, 1]])).is_err());
    }

    #[test]
    fn identity_is_neutral_and_transversal() {
        let v = plane();
        let l = LinCanRel::from_map(&v, &v, &Matrix::from_ints(2, &[&[1, 1], &[0, 1]])).unwrap();
        let id = LinCanRel::identity(&v);
        for (a, b) in [(&id, &l), (&l, &id)] {
            let (c, t) = a.then(b).unwrap();
            assert_eq!(c, l);
            assert!(t.transversal && t.strongly_transversal);
        }
    }

    #[test]
    fn composite_through_a_plane_has_half_dimension() {
        let v = plane();
        let w = v.sum(&v);
        // a shear of the plane into the first summand, then a lagrangian
        // relation from the sum to the point
        let a = LinCanRel::from_map(&v, &v, &Matrix::from_ints(2, &[&[1, 0], &[3, 1]])).unwrap();
        let b = LinCanRel::new(&v, &w, &Matrix::from_ints(6, &[&[1, 0, 1, 0, 0, 0], &[0, 1, 0, 1, 0, 0], &[0, 0, 0, 0, 1, 0]])).unwrap();
        let (c, _) = a.then(&b).unwrap();
        assert_eq!(c.graph().dim(), (v.dim() + w.dim()) / 2);
    }

    #[test]
    fn lagrangian_then_transpose_is_identity_of_the_point() {
        let v = plane();
        let l = line_in(&v, &[&[1, 2]]);
        let (c, t) = l.then(&l.transpose()).unwrap();
        assert_eq!(c, LinCanRel::identity(&SympSpace::point()));
        // the fiber product is the line itself, projecting to zero, and
        // L + L misses most of the plane
        assert!(!t.transversal);
        assert!(!t.strongly_transversal);
    }

    #[test]
    fn non_transversal_meeting_still_composes() {
        let v = plane();
        let l = line_in(&v, &[&[1, 0]]);
        let m = line_in(&v, &[&[1, 0]]).transpose();
        let (c, t) = l.then(&m).unwrap();
        assert!(c.graph().is_lagrangian());
        assert!(!t.transversal);
        let other = line_in(&v, &[&[0, 1]]).transpose();
        let (_, t) = l.then(&other).unwrap();
        assert!(t.transversal && t.strongly_transversal);
    }

    #[test]
    fn cross_swap_and_transpose() {
        let v = plane();
        let s = LinCanRel::swap(&v, &SympSpace::point());
        assert_eq!(s, LinCanRel::identity(&v));
        let l = line_in(&v, &[&[1, 1]]);
        let both = l.cross(&l.transpose());
        assert_eq!(both.src(), &v);
        assert_eq!(both.dst(), &v);
        assert_eq!(l.transpose().transpose(), l);
        let sw = LinCanRel::swap(&v, &v);
        assert_eq!(sw.then(&sw).unwrap().0, LinCanRel::identity(&v.sum(&v)));
    }

    #[test]
    fn mismatched_endpoints_fail() {
        let v = plane();
        assert!(LinCanRel::identity(&v).then(&LinCanRel::identity(&v.sum(&v))).is_err());
    }

    #[test]
    fn domain_of_the_zero_relation() {
        let p = SympSpace::point();
        let (d, i) = LinCanRel::identity(&p).dom_im();
        assert_eq!(d.dim(), 0);
        assert_eq!(i.dim(), 0);
        let v = plane();
        let g = LinCanRel::identity(&v);
        assert_eq!(g.dom_im().0, Subspace::full(&v));
    }
}
