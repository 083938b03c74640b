//! Simplicial objects in the relation category.
//!
//! `faces[n]` lists `d^n_0..=d^n_n : X_n → X_{n-1}` (empty for `n = 0`) and
//! `degeneracies[n]` lists `s^n_0..=s^n_n : X_n → X_{n+1}`.

use std::sync::Arc;

use thiserror::Error;

use crate::rel::Rel;
use crate::report::Report;
use crate::set::FinSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplicialError {
    #[error("level {0} is missing")]
    MissingLevel(usize),
    #[error("degree {0} map is not a bijection")]
    NotBijection(usize),
}

#[derive(Debug, Clone)]
pub struct SimplicialRel {
    pub levels: Vec<Arc<FinSet>>,
    pub faces: Vec<Vec<Rel>>,
    pub degeneracies: Vec<Vec<Rel>>,
}

impl SimplicialRel {
    /// The constant object on one set with every map the identity.
    pub fn constant(set: &Arc<FinSet>, depth: usize) -> Self {
        let id = Rel::identity(set);
        Self {
            levels: vec![set.clone(); depth + 1],
            faces: (0..=depth).map(|n| if n == 0 { Vec::new() } else { vec![id.clone(); n + 1] }).collect(),
            degeneracies: (0..depth).map(|n| vec![id.clone(); n + 1]).collect(),
        }
    }

    /// Highest degree whose faces and lower degeneracies are all present.
    pub fn depth(&self) -> usize {
        let mut d = 0;
        while d + 1 < self.levels.len()
            && self.faces.get(d + 1).is_some_and(|f| f.len() == d + 2)
            && self.degeneracies.get(d).is_some_and(|s| s.len() == d + 1)
        {
            d += 1;
        }
        d
    }

    fn d(&self, n: usize, i: usize) -> &Rel {
        &self.faces[n][i]
    }

    fn s(&self, n: usize, i: usize) -> &Rel {
        &self.degeneracies[n][i]
    }
}

fn eq_paths(rep: &mut Report, name: String, lhs: &[&Rel], rhs: &[&Rel], target: Option<&Arc<FinSet>>) {
    let run = |path: &[&Rel], rep: &mut Report| -> Result<Rel, String> {
        let mut acc = path[0].clone();
        for r in &path[1..] {
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
    };
    let l = run(lhs, rep);
    let r = match target {
        Some(set) => Ok(Rel::identity(set)),
        None => run(rhs, rep),
    };
    let w = match (l, r) {
        (Ok(l), Ok(r)) => l.difference(&r),
        (Err(e), _) | (_, Err(e)) => Some(vec!["shape".into(), e]),
    };
    rep.record(name, w);
}

/// Checks every simplicial identity whose levels are all at most `depth`.
/// Paths are read left to right, so `[s^{n-1}_j, d^n_i]` is `d^n_i s^{n-1}_j`.
pub fn check_simplicial(x: &SimplicialRel, depth: usize) -> Result<Report, SimplicialError> {
    if x.levels.len() <= depth {
        return Err(SimplicialError::MissingLevel(x.levels.len()));
    }
    if x.depth() < depth {
        return Err(SimplicialError::MissingLevel(x.depth() + 1));
    }
    let mut rep = Report::new("simplicial");
    for n in 2..=depth {
        for j in 1..=n {
            for i in 0..j {
                eq_paths(
                    &mut rep,
                    format!("dd n={n} i={i} j={j}"),
                    &[x.d(n, j), x.d(n - 1, i)],
                    &[x.d(n, i), x.d(n - 1, j - 1)],
                    None,
                );
            }
        }
    }
    for n in 1..depth {
        for j in 0..n {
            for i in 0..=j {
                eq_paths(
                    &mut rep,
                    format!("ss n={n} i={i} j={j}"),
                    &[x.s(n - 1, j), x.s(n, i)],
                    &[x.s(n - 1, i), x.s(n, j + 1)],
                    None,
                );
            }
        }
    }
    for n in 1..=depth {
        for j in 0..n {
            for i in 0..=n {
                let name = format!("ds n={n} i={i} j={j}");
                let lhs = [x.s(n - 1, j), x.d(n, i)];
                if i == j || i == j + 1 {
                    eq_paths(&mut rep, name, &lhs, &[], Some(&x.levels[n - 1]));
                } else if i < j {
                    eq_paths(&mut rep, name, &lhs, &[x.d(n - 1, i), x.s(n - 2, j - 1)], None);
                } else {
                    eq_paths(&mut rep, name, &lhs, &[x.d(n - 1, i - 1), x.s(n - 2, j)], None);
                }
            }
        }
    }
    Ok(rep)
}

/// Checks that `star[n]` squares to the identity and intertwines `d^n_i`
/// with `d^n_{n-i}` and `s^n_i` with `s^n_{n-i}`.
pub fn check_star_simplicial(x: &SimplicialRel, star: &[Rel]) -> Result<Report, SimplicialError> {
    for (n, m) in star.iter().enumerate() {
        let lv = x.levels.get(n).ok_or(SimplicialError::MissingLevel(n))?;
        if !m.is_bijection() || !FinSet::same(m.src(), lv) || !FinSet::same(m.dst(), lv) {
            return Err(SimplicialError::NotBijection(n));
        }
    }
    let mut rep = Report::new("star-simplicial");
    let top = star.len().saturating_sub(1);
    for (n, m) in star.iter().enumerate() {
        eq_paths(&mut rep, format!("involution n={n}"), &[m, m], &[], Some(&x.levels[n]));
        if n >= 1 && n < x.faces.len() {
            for i in 0..=n {
                eq_paths(
                    &mut rep,
                    format!("face n={n} i={i}"),
                    &[x.d(n, i), &star[n - 1]],
                    &[m, x.d(n, n - i)],
                    None,
                );
            }
        }
        if n < top && n < x.degeneracies.len() {
            for i in 0..=n {
                eq_paths(
                    &mut rep,
                    format!("degeneracy n={n} i={i}"),
                    &[x.s(n, i), &star[n + 1]],
                    &[m, x.s(n, n - i)],
                    None,
                );
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_object_passes() {
        let a = FinSet::of("A", ["p", "q"]);
        let x = SimplicialRel::constant(&a, 3);
        assert_eq!(x.depth(), 3);
        assert!(check_simplicial(&x, 3).unwrap().passed());
        let ids = vec![Rel::identity(&a); 4];
        assert!(check_star_simplicial(&x, &ids).unwrap().passed());
    }

    #[test]
    fn too_deep_is_an_error() {
        let a = FinSet::of("A", ["p"]);
        let x = SimplicialRel::constant(&a, 1);
        assert!(matches!(check_simplicial(&x, 2), Err(SimplicialError::MissingLevel(_))));
    }

    #[test]
    fn perturbed_face_names_the_identity() {
        let a = FinSet::of("A", ["p", "q"]);
        let mut x = SimplicialRel::constant(&a, 2);
        x.faces[2][0] = Rel::full(a.clone(), a.clone());
        let rep = check_simplicial(&x, 2).unwrap();
        assert!(!rep.passed());
        assert!(rep.failures().any(|c| c.name.starts_with("dd n=2")));
    }

    #[test]
    fn non_bijective_star_rejected() {
        let a = FinSet::of("A", ["p", "q"]);
        let x = SimplicialRel::constant(&a, 1);
        let bad = vec![Rel::full(a.clone(), a.clone())];
        assert_eq!(check_star_simplicial(&x, &bad).unwrap_err(), SimplicialError::NotBijection(0));
    }
}
