//! The simplicial object of a hopfoid.
//!
//! Level 0 is the base and level `n` the `n`-fold power of the carrier.
//! Strings `(a1, .., an)` are read with `source(ai) = target(ai+1)`; the face
//! `d_0` forgets the last entry, `d_n` the first, and the middle faces
//! multiply neighbours. Degeneracies insert units.
//!
//! The degree-one degeneracies split a square with the coproduct and then
//! replace one leg by a unit. The split fans out over every middle edge, so
//! a branch is kept only when no face sends it outside the value the
//! simplicial identities prescribe.

use relcat::{FinSet, Rel, Report, SimplicialRel};

use crate::error::DblError;
use crate::hopfoid::{eval, Hopfoid};

fn ids(h: &Hopfoid, k: usize) -> Rel {
    Rel::identity(&FinSet::power(&h.carrier, k))
}

type Allowed<'a> = &'a dyn Fn(usize) -> Vec<usize>;

/// The pairs `(a, x)` of `r` such that each face sends `x` only into the
/// values allowed for `a`.
pub fn confine(r: &Rel, faces: &[(&Rel, Allowed<'_>)]) -> Rel {
    let pairs = r.pairs().iter().copied().filter(|&(a, x)| {
        faces.iter().all(|(f, allowed)| {
            let ok = allowed(a);
            f.image_of(x).all(|y| ok.contains(&y))
        })
    });
    Rel::new(r.src().clone(), r.dst().clone(), pairs).expect("subset of a relation")
}

/// Builds the simplicial object up to `depth`. Fails when a unit followed
/// by target or source is not sharp.
pub fn hopfoid_simplicial(h: &Hopfoid, depth: usize) -> Result<SimplicialRel, DblError> {
    let mut notes = Report::new("hopfoid simplicial");
    for (name, side) in [("unit then target", &h.target), ("unit then source", &h.source)] {
        let (_, blunt) = h.unit.compose_sharp(side).map_err(|e| DblError::Shape(e.to_string()))?;
        if let Some(b) = blunt {
            return Err(DblError::NotSharp {
                composite: name.into(),
                detail: format!(
                    "{} reaches {} through {} carrier elements",
                    h.base.name(b.input),
                    h.base.name(b.output),
                    b.witnesses.len()
                ),
            });
        }
    }
    let id1 = ids(h, 1);
    let shape = |e: String| DblError::Shape(e);
    let dt = h.coproduct.transpose();
    let first = eval(&mut notes, "first", &[&id1.cross(&h.target), &id1.cross(&h.source.transpose()), &dt]).map_err(shape)?;
    let second = eval(&mut notes, "second", &[&h.source.cross(&id1), &h.target.transpose().cross(&id1), &dt]).map_err(shape)?;
    let ei = h.unit.compose(&h.antipode).map_err(|e| DblError::Shape(e.to_string()))?;
    let dl = &h.coproduct;
    let after = eval(&mut notes, "unit after", &[dl, &id1.cross(&h.source), &id1.cross(&ei)]).map_err(shape)?;
    let before = eval(&mut notes, "unit before", &[dl, &h.target.cross(&id1), &h.unit.cross(&id1)]).map_err(shape)?;
    let el = h.target.compose(&h.unit).map_err(|e| DblError::Shape(e.to_string()))?;
    let er = h.source.compose(&h.unit).map_err(|e| DblError::Shape(e.to_string()))?;
    let id = |a: usize| vec![a];
    let after = confine(&after, &[(&first, &id), (&h.product, &id), (&second, &|a| er.image_of(a).collect())]);
    let before = confine(&before, &[(&first, &|a| el.image_of(a).collect()), (&h.product, &id), (&second, &id)]);

    let mut levels = vec![h.base.clone()];
    levels.extend((1..=depth).map(|n| FinSet::power(&h.carrier, n)));
    let mut faces = vec![Vec::new()];
    for n in 1..=depth {
        if n == 1 {
            faces.push(vec![h.target.clone(), h.source.clone()]);
            continue;
        }
        let mut f = vec![ids(h, n - 2).cross(&first)];
        for i in 1..n {
            f.push(Rel::cross_all(&[&ids(h, n - i - 1), &h.product, &ids(h, i - 1)]));
        }
        f.push(second.cross(&ids(h, n - 2)));
        faces.push(f);
    }
    let mut degeneracies = Vec::new();
    for n in 0..depth {
        if n == 0 {
            degeneracies.push(vec![h.unit.clone()]);
            continue;
        }
        let mut s: Vec<Rel> = (0..n).map(|i| Rel::cross_all(&[&ids(h, n - i - 1), &after, &ids(h, i)])).collect();
        s.push(before.cross(&ids(h, n - 1)));
        degeneracies.push(s);
    }
    Ok(SimplicialRel { levels, faces, degeneracies })
}
