//! Symplectic vector spaces and their subspaces.

use std::fmt;

use num_traits::Zero;

use crate::error::LinError;
use crate::matrix::{Matrix, Q};

/// `Qᵈ` with the form `ω(u, v) = u·Ω·vᵀ`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SympSpace {
    form: Matrix,
}

impl SympSpace {
    pub fn new(form: Matrix) -> Result<Self, LinError> {
        if form.nrows() != form.ncols() {
            return Err(LinError::NotSymplectic(format!("{}×{} form", form.nrows(), form.ncols())));
        }
        if !form.is_antisymmetric() {
            return Err(LinError::NotSymplectic("form is not antisymmetric".into()));
        }
        if form.inverse().is_none() {
            return Err(LinError::NotSymplectic("form is degenerate".into()));
        }
        Ok(SympSpace { form })
    }

    /// The zero space, unit of the direct sum.
    pub fn point() -> Self {
        SympSpace { form: Matrix::zeros(0, 0) }
    }

    pub fn dim(&self) -> usize {
        self.form.nrows()
    }

    pub fn form(&self) -> &Matrix {
        &self.form
    }

    /// The same space with the negated form.
    pub fn dual(&self) -> Self {
        SympSpace { form: self.form.neg() }
    }

    /// Direct sum; strictly associative with the point as unit.
    pub fn sum(&self, other: &SympSpace) -> Self {
        SympSpace { form: self.form.block_diag(&other.form) }
    }

    pub fn omega(&self, u: &[Q], v: &[Q]) -> Q {
        self.form.apply_row(u).iter().zip(v).map(|(a, b)| a * b).sum()
    }
}

impl fmt::Display for SympSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q^{} with form {}", self.dim(), self.form)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SubspaceKind {
    pub isotropic: bool,
    pub coisotropic: bool,
    pub lagrangian: bool,
    pub symplectic: bool,
}

/// A subspace held by its canonical basis, so equal subspaces compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: SympSpace,
    basis: Matrix,
}

impl Subspace {
    /// The span of the rows of `rows`.
    pub fn span(ambient: &SympSpace, rows: &Matrix) -> Result<Self, LinError> {
        if rows.ncols() != ambient.dim() {
            return Err(LinError::Shape(format!("vectors of length {} in dimension {}", rows.ncols(), ambient.dim())));
        }
        Ok(Subspace { ambient: ambient.clone(), basis: rows.rref().0 })
    }

    fn of(ambient: &SympSpace, rows: &Matrix) -> Self {
        Self::span(ambient, rows).expect("vector length matches ambient")
    }

    pub fn zero(ambient: &SympSpace) -> Self {
        Self::of(ambient, &Matrix::zeros(0, ambient.dim()))
    }

    pub fn full(ambient: &SympSpace) -> Self {
        Self::of(ambient, &Matrix::identity(ambient.dim()))
    }

    pub fn ambient(&self) -> &SympSpace {
        &self.ambient
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    /// The symplectic orthogonal.
    pub fn orth(&self) -> Self {
        Self::of(&self.ambient, &self.basis.mul(self.ambient.form()).nullspace())
    }

    pub fn contains_vector(&self, v: &[Q]) -> bool {
        let mut m = self.basis.clone();
        m.push_row(v.to_vec());
        m.rank() == self.dim()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.dim() <= self.dim() && self.basis.vstack(&other.basis).rank() == self.dim()
    }

    pub fn sum(&self, other: &Subspace) -> Self {
        Self::of(&self.ambient, &self.basis.vstack(&other.basis))
    }

    pub fn intersect(&self, other: &Subspace) -> Self {
        // coefficient pairs (a, b) with a·A = b·B
        let stacked = self.basis.vstack(&other.basis.neg());
        let coeffs = stacked.transpose().nullspace();
        let k = self.dim();
        let rows = coeffs.columns(0..k).mul(&self.basis);
        Self::of(&self.ambient, &rows)
    }

    /// Whether the form vanishes on the subspace.
    pub fn is_isotropic(&self) -> bool {
        self.basis.mul(self.ambient.form()).mul(&self.basis.transpose()).is_zero()
    }

    pub fn is_coisotropic(&self) -> bool {
        self.contains(&self.orth())
    }

    pub fn is_lagrangian(&self) -> bool {
        2 * self.dim() == self.ambient.dim() && self.is_isotropic()
    }

    pub fn classify(&self) -> SubspaceKind {
        let perp = self.orth();
        let isotropic = perp.contains(self);
        let coisotropic = self.contains(&perp);
        SubspaceKind {
            isotropic,
            coisotropic,
            lagrangian: isotropic && coisotropic,
            symplectic: self.intersect(&perp).dim() == 0,
        }
    }

    /// A nonzero vector of `self` outside `other`, if any.
    pub fn witness_outside(&self, other: &Subspace) -> Option<Vec<Q>> {
        self.basis.rows().iter().find(|r| !other.contains_vector(r)).cloned()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.rows().iter().all(|r| r.iter().all(Zero::is_zero))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span {}", self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane() -> SympSpace {
        SympSpace::new(Matrix::from_ints(2, &[&[0, 1], &[-1, 0]])).unwrap()
    }

    fn four() -> SympSpace {
        plane().sum(&plane())
    }

    #[test]
    fn forms_are_validated() {
        assert!(SympSpace::new(Matrix::from_ints(2, &[&[0, 1], &[1, 0]])).is_err());
        assert!(SympSpace::new(Matrix::zeros(2, 2)).is_err());
        assert!(SympSpace::new(Matrix::zeros(0, 0)).is_ok());
        assert_eq!(plane().dual().dual(), plane());
        assert_eq!(SympSpace::point().sum(&plane()), plane());
    }

    #[test]
    fn orthogonal_of_full_and_of_a_line() {
        let v = plane();
        assert_eq!(Subspace::full(&v).orth(), Subspace::zero(&v));
        let line = Subspace::span(&v, &Matrix::from_ints(2, &[&[1, 0]])).unwrap();
        // (1,0)·Ω·vᵀ = v₂, so the orthogonal is the line itself
        assert_eq!(line.orth(), line);
        assert!(line.classify().lagrangian);
    }

    #[test]
    fn zero_and_full_kinds() {
        let v = four();
        let z = Subspace::zero(&v).classify();
        assert!(z.isotropic && !z.coisotropic && z.symplectic);
        let f = Subspace::full(&v).classify();
        assert!(f.coisotropic && !f.isotropic && f.symplectic);
    }

    #[test]
    fn three_dimensional_subspace_of_four_is_coisotropic() {
        let v = four();
        let c = Subspace::span(&v, &Matrix::from_ints(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]])).unwrap();
        let perp = c.orth();
        assert_eq!(perp, Subspace::span(&v, &Matrix::from_ints(4, &[&[0, 0, 1, 0]])).unwrap());
        let k = c.classify();
        assert!(k.coisotropic && !k.isotropic && !k.symplectic);
    }

    #[test]
    fn sums_and_intersections() {
        let v = four();
        let a = Subspace::span(&v, &Matrix::from_ints(4, &[&[1, 0, 0, 0], &[0, 1, 1, 0]])).unwrap();
        let b = Subspace::span(&v, &Matrix::from_ints(4, &[&[1, 1, 1, 0], &[0, 0, 0, 1]])).unwrap();
        let i = a.intersect(&b);
        assert_eq!(i, Subspace::span(&v, &Matrix::from_ints(4, &[&[1, 1, 1, 0]])).unwrap());
        assert_eq!(a.sum(&b).dim(), 3);
        assert!(a.contains(&i) && b.contains(&i));
        assert!(a.witness_outside(&b).is_some());
    }
}
