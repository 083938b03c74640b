//! Strict symmetric monoidal categories with transposes.
//!
//! The structure checkers are written once against this trait and run both
//! on finite relations and on linear canonical relations.

use std::fmt::Debug;
use std::sync::Arc;

use crate::rel::Rel;
use crate::set::FinSet;

pub trait Category {
    type Obj: Clone + Debug;
    type Mor: Clone + Debug;

    fn src(f: &Self::Mor) -> Self::Obj;
    fn dst(f: &Self::Mor) -> Self::Obj;
    fn id(o: &Self::Obj) -> Self::Mor;
    /// `f` followed by `g`.
    fn then(f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor, String>;
    /// The monoidal unit.
    fn unit() -> Self::Obj;
    fn tensor(a: &Self::Obj, b: &Self::Obj) -> Self::Obj;
    fn cross(f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    fn swap(a: &Self::Obj, b: &Self::Obj) -> Self::Mor;
    fn transpose(f: &Self::Mor) -> Self::Mor;
    /// `None` when the morphisms are equal, otherwise a witness.
    fn differ(f: &Self::Mor, g: &Self::Mor) -> Option<Vec<String>>;
    fn same_obj(a: &Self::Obj, b: &Self::Obj) -> bool;

    /// Composite of a path, left to right.
    fn path(ms: &[&Self::Mor]) -> Result<Self::Mor, String> {
        let (first, rest) = ms.split_first().ok_or("empty path")?;
        rest.iter().try_fold((*first).clone(), |acc, m| Self::then(&acc, m))
    }

    fn cross3(f: &Self::Mor, g: &Self::Mor, h: &Self::Mor) -> Self::Mor {
        Self::cross(&Self::cross(f, g), h)
    }
}

/// Finite sets and relations.
#[derive(Debug, Clone, Copy)]
pub struct RelCat;

impl Category for RelCat {
    type Obj = Arc<FinSet>;
    type Mor = Rel;

    fn src(f: &Rel) -> Arc<FinSet> {
        f.src().clone()
    }
    fn dst(f: &Rel) -> Arc<FinSet> {
        f.dst().clone()
    }
    fn id(o: &Arc<FinSet>) -> Rel {
        Rel::identity(o)
    }
    fn then(f: &Rel, g: &Rel) -> Result<Rel, String> {
        f.compose(g).map_err(|e| e.to_string())
    }
    fn unit() -> Arc<FinSet> {
        FinSet::pt()
    }
    fn tensor(a: &Arc<FinSet>, b: &Arc<FinSet>) -> Arc<FinSet> {
        FinSet::product(a, b)
    }
    fn cross(f: &Rel, g: &Rel) -> Rel {
        f.cross(g)
    }
    fn swap(a: &Arc<FinSet>, b: &Arc<FinSet>) -> Rel {
        Rel::swap(a, b)
    }
    fn transpose(f: &Rel) -> Rel {
        f.transpose()
    }
    fn differ(f: &Rel, g: &Rel) -> Option<Vec<String>> {
        f.difference(g)
    }
    fn same_obj(a: &Arc<FinSet>, b: &Arc<FinSet>) -> bool {
        FinSet::same(a, b)
    }
}
