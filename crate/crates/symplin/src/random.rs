//! Random instances with small integer entries, for property suites.

use rand::Rng;

use crate::canrel::LinCanRel;
use crate::cotangent::cotangent_space;
use crate::matrix::{q, Matrix, Q};
use crate::space::{SympSpace, Subspace};

const SPREAD: i64 = 3;

pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    let rows = (0..rows).map(|_| (0..cols).map(|_| q(rng.random_range(-SPREAD..=SPREAD))).collect()).collect();
    Matrix::from_rows(cols, rows).expect("rectangular")
}

fn combination<R: Rng + ?Sized>(rng: &mut R, basis: &Matrix) -> Vec<Q> {
    let c: Vec<Q> = (0..basis.nrows()).map(|_| q(rng.random_range(-SPREAD..=SPREAD))).collect();
    basis.apply_row(&c)
}

/// A symplectic space of dimension `2·half`: the standard form, or with
/// even odds the standard form in a random basis.
pub fn random_space<R: Rng + ?Sized>(rng: &mut R, half: usize) -> SympSpace {
    let std = cotangent_space(half);
    if rng.random_bool(0.5) {
        return std;
    }
    loop {
        let s = random_matrix(rng, 2 * half, 2 * half);
        if s.inverse().is_some() {
            return SympSpace::new(s.mul(std.form()).mul(&s.transpose())).expect("congruent to a symplectic form");
        }
    }
}

/// A random isotropic subspace of dimension `k ≤ dim/2`.
pub fn random_isotropic<R: Rng + ?Sized>(rng: &mut R, v: &SympSpace, k: usize) -> Subspace {
    assert!(2 * k <= v.dim(), "isotropic dimension too large");
    let mut u = Subspace::zero(v);
    while u.dim() < k {
        let w = combination(rng, u.orth().basis());
        if !u.contains_vector(&w) {
            let mut rows = u.basis().clone();
            rows.push_row(w);
            u = Subspace::span(v, &rows).expect("same ambient");
        }
    }
    u
}

pub fn random_lagrangian<R: Rng + ?Sized>(rng: &mut R, v: &SympSpace) -> Subspace {
    random_isotropic(rng, v, v.dim() / 2)
}

/// The orthogonal of a random isotropic subspace.
pub fn random_coisotropic<R: Rng + ?Sized>(rng: &mut R, v: &SympSpace) -> Subspace {
    let k = rng.random_range(0..=v.dim() / 2);
    random_isotropic(rng, v, k).orth()
}

pub fn random_subspace<R: Rng + ?Sized>(rng: &mut R, v: &SympSpace) -> Subspace {
    let k = rng.random_range(0..=v.dim());
    Subspace::span(v, &random_matrix(rng, k, v.dim())).expect("same ambient")
}

pub fn random_canrel<R: Rng + ?Sized>(rng: &mut R, src: &SympSpace, dst: &SympSpace) -> LinCanRel {
    let g = random_lagrangian(rng, &src.dual().sum(dst));
    LinCanRel::new(src, dst, g.basis()).expect("lagrangian by construction")
}
