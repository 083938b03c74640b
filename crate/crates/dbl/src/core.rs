//! The core groupoid: squares whose two source edges are units.

use grpd::FinGroupoid;
use relcat::FinSet;

use crate::double::FinDoubleGroupoid;
use crate::error::DblError;

/// The core groupoid together with the square behind each of its arrows.
#[derive(Debug, Clone)]
pub struct Core {
    pub groupoid: FinGroupoid,
    /// `squares[c]` is the square of core arrow `c`, increasing.
    pub squares: Vec<usize>,
}

impl Core {
    /// Core arrow of a square, if it lies in the core.
    pub fn index_of(&self, s: usize) -> Option<usize> {
        self.squares.binary_search(&s).ok()
    }
}

/// Whether both source edges of `s` are units.
pub fn in_core(d: &FinDoubleGroupoid, s: usize) -> bool {
    d.side_h().is_unit(d.h_source(s)) && d.side_v().is_unit(d.v_source(s))
}

/// The core over the double base. The source of a core square is the base
/// point of its source edges and the target is the target of its horizontal
/// target edge. The product of `s` and `s'` fills the 2×2 grid of `s`, the
/// unit squares on the target edges of `s'`, and `s'`, gluing vertically
/// first.
pub fn core(d: &FinDoubleGroupoid) -> Result<Core, DblError> {
    d.require_valid()?;
    let squares: Vec<usize> = (0..d.len()).filter(|&s| in_core(d, s)).collect();
    let pos = |s: usize| squares.binary_search(&s).ok();
    let arrows = FinSet::new(
        format!("core({})", d.squares().id()),
        squares.iter().map(|&s| d.squares().name(s)).collect(),
    )
    .map_err(|e| DblError::Shape(format!("duplicate square {e}")))?;
    let source: Vec<usize> = squares.iter().map(|&s| d.side_h().src(d.h_source(s))).collect();
    let target: Vec<usize> = squares.iter().map(|&s| d.side_h().tgt(d.h_target(s))).collect();
    let unit: Vec<usize> = (0..d.base().len())
        .map(|m| pos(d.double_unit(m)).ok_or_else(|| DblError::Shape("double unit outside core".into())))
        .collect::<Result<_, _>>()?;
    let grid = |s: usize, t: usize| -> Option<usize> {
        let top = d.v_mul(s, d.h_unit(d.h_target(t)))?;
        let bottom = d.v_mul(d.v_unit(d.v_target(t)), t)?;
        d.h_mul(top, bottom)
    };
    let k = squares.len();
    let mut comp = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if source[a] == target[b] {
                let ab = grid(squares[a], squares[b])
                    .and_then(pos)
                    .ok_or_else(|| DblError::Shape("core product undefined".into()))?;
                comp.push((a, b, ab));
            }
        }
    }
    // inverses by search; validation below confirms them
    let inv: Vec<usize> = (0..k)
        .map(|a| {
            (0..k)
                .find(|&b| source[a] == target[b] && comp.binary_search_by(|t| (t.0, t.1).cmp(&(a, b))).is_ok_and(|i| comp[i].2 == unit[target[a]]))
                .unwrap_or(a)
        })
        .collect();
    let g = FinGroupoid::new(arrows, d.base().clone(), source, target, unit, comp, inv)?;
    g.require_valid()?;
    Ok(Core { groupoid: g, squares })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{example_dinertia, example_dmain};
    use grpd::{group, isomorphic, pair, trivial, Group};

    #[test]
    fn core_of_main_is_trivial() {
        let g = pair(&FinSet::of("M", ["1", "2", "3"]));
        let c = core(&example_dmain(&g).unwrap()).unwrap();
        assert!(isomorphic(&c.groupoid, &trivial(g.objects())));
    }

    #[test]
    fn core_of_dinertia_is_the_groupoid() {
        for g in [group(&Group::symmetric3()), pair(&FinSet::of("M", ["1", "2"]))] {
            let c = core(&example_dinertia(&g).unwrap()).unwrap();
            assert!(isomorphic(&c.groupoid, &g));
        }
    }

    #[test]
    fn one_square_core() {
        let c = core(&example_dmain(&group(&Group::cyclic(1))).unwrap()).unwrap();
        assert_eq!(c.groupoid.len(), 1);
    }

    #[test]
    fn transpose_has_isomorphic_core() {
        let d = example_dinertia(&group(&Group::symmetric3())).unwrap();
        let a = core(&d).unwrap();
        let b = core(&d.transpose()).unwrap();
        assert!(isomorphic(&a.groupoid, &b.groupoid));
    }
}
