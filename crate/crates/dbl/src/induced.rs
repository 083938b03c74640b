//! The induced groupoid of a double groupoid and the orbit relation of a
//! hopfoid.

use grpd::FinGroupoid;
use relcat::{FinSet, Report};

use crate::core::in_core;
use crate::double::FinDoubleGroupoid;
use crate::error::DblError;
use crate::hopfoid::Hopfoid;

/// The induced groupoid with the square behind each arrow and object.
#[derive(Debug, Clone)]
pub struct Induced {
    pub groupoid: FinGroupoid,
    /// Squares of the arrows, increasing.
    pub squares: Vec<usize>,
    /// Squares of the objects, increasing; these are core squares.
    pub base: Vec<usize>,
}

/// Squares with both horizontal edges units form the arrows; those also in
/// the core form the objects. Target and source are the hopfoid target and
/// source. `s` followed by `s'` glues the unit square on the vertical
/// source edge of `s` to `s'` horizontally; the inverse conjugates `s` by
/// the unit square on the inverse of that edge.
pub fn induced_groupoid(d: &FinDoubleGroupoid) -> Result<Induced, DblError> {
    d.require_valid()?;
    let (sh, sv) = (d.side_h(), d.side_v());
    let squares: Vec<usize> =
        (0..d.len()).filter(|&s| sh.is_unit(d.h_source(s)) && sh.is_unit(d.h_target(s))).collect();
    let base: Vec<usize> = squares.iter().copied().filter(|&s| in_core(d, s)).collect();
    let arrow = |s: usize| squares.binary_search(&s).ok();
    let object = |s: usize| base.binary_search(&s).ok();
    let shape = |what: &str| DblError::Shape(format!("induced {what} undefined"));

    let target_sq = |s: usize| d.h_mul(s, d.v_unit(sv.inv(d.v_source(s))));
    let source_sq = |s: usize| d.h_mul(d.h_inv(d.v_inv(s)), d.v_unit(d.v_target(s)));
    let mut target = Vec::with_capacity(squares.len());
    let mut source = Vec::with_capacity(squares.len());
    for &s in &squares {
        target.push(target_sq(s).and_then(object).ok_or_else(|| shape("target"))?);
        source.push(source_sq(s).and_then(object).ok_or_else(|| shape("source"))?);
    }
    let unit: Vec<usize> = base.iter().map(|&y| arrow(y).expect("objects are arrows")).collect();
    let mut comp = Vec::new();
    for (a, &s) in squares.iter().enumerate() {
        for (b, &t) in squares.iter().enumerate() {
            if source[a] == target[b] {
                let st = d
                    .h_mul(d.v_unit(d.v_source(s)), t)
                    .and_then(arrow)
                    .ok_or_else(|| shape("product"))?;
                comp.push((a, b, st));
            }
        }
    }
    let mut inv = Vec::with_capacity(squares.len());
    for &s in &squares {
        let u = d.v_unit(sv.inv(d.v_source(s)));
        let si = d.h_mul(u, s).and_then(|x| d.h_mul(x, u)).and_then(arrow).ok_or_else(|| shape("inverse"))?;
        inv.push(si);
    }
    let names = |v: &[usize]| v.iter().map(|&s| d.squares().name(s)).collect::<Vec<_>>();
    let dup = |e: String| DblError::Shape(format!("duplicate square {e}"));
    let arrows = FinSet::new(format!("ind({})", d.squares().id()), names(&squares)).map_err(dup)?;
    let objects = FinSet::new(format!("ind0({})", d.squares().id()), names(&base)).map_err(dup)?;
    let g = FinGroupoid::new(arrows, objects, source, target, unit, comp, inv)?;
    g.require_valid()?;
    Ok(Induced { groupoid: g, squares, base })
}

/// Pointwise identities behind the induced groupoid: conjugating the
/// antipode of an arrow by the unit squares on its vertical edges gives the
/// arrow back; the two ways of gluing composable arrows agree; a product
/// keeps the target of its left factor and the source of its right one.
pub fn check_induced_lemmas(d: &FinDoubleGroupoid) -> Result<Report, DblError> {
    let ind = induced_groupoid(d)?;
    let g = &ind.groupoid;
    let name = |s: usize| d.squares().name(s);
    let mut rep = Report::new(format!("induced lemmas {}", d.squares().id()));
    let mut bad = None;
    for &s in &ind.squares {
        let flipped = d.h_inv(d.v_inv(s));
        let back = d.h_mul(d.v_unit(d.v_source(s)), flipped).and_then(|x| d.h_mul(x, d.v_unit(d.v_target(s))));
        if back != Some(s) {
            bad.get_or_insert_with(|| vec![name(s)]);
        }
    }
    rep.record("antipode-conjugation", bad);
    let (mut glue, mut ends) = (None, None);
    for (a, b, ab) in g.comp().iter().copied() {
        let (s, t) = (ind.squares[a], ind.squares[b]);
        let left = d.h_mul(d.v_unit(d.v_source(s)), t);
        let right = d.h_mul(s, d.v_unit(d.v_source(t)));
        if left.is_none() || left != right {
            glue.get_or_insert_with(|| vec![name(s), name(t)]);
        }
        if g.tgt(ab) != g.tgt(a) || g.src(ab) != g.src(b) {
            ends.get_or_insert_with(|| vec![name(s), name(t)]);
        }
    }
    rep.record("composable-gluing", glue);
    rep.record("product-ends", ends);
    Ok(rep)
}

/// Whether the orbit classes of the hopfoid equal the orbits of the
/// induced groupoid, both seen as sets of core indices.
pub fn orbits_agree(d: &FinDoubleGroupoid) -> Result<bool, DblError> {
    let (_, classes) = orbit_partition(&crate::hopfoid::to_hopfoid(d)?)?;
    let ind = induced_groupoid(d)?;
    let c = crate::core::core(d)?;
    let mut from_ind: Vec<Vec<usize>> = ind
        .groupoid
        .orbits()
        .iter()
        .map(|o| {
            let mut v: Vec<usize> = o.iter().map(|&y| c.index_of(ind.base[y]).expect("base is in the core")).collect();
            v.sort_unstable();
            v
        })
        .collect();
    from_ind.sort();
    Ok(classes == from_ind)
}

/// The orbit relation `L∘Rᵗ` on the base: its domain, and the classes of
/// the equivalence it generates. Errors when it differs from `R∘Lᵗ`.
pub fn orbit_partition(h: &Hopfoid) -> Result<(Vec<usize>, Vec<Vec<usize>>), DblError> {
    let lr = h.source.transpose().compose(&h.target).map_err(|e| DblError::Shape(e.to_string()))?;
    let rl = h.target.transpose().compose(&h.source).map_err(|e| DblError::Shape(e.to_string()))?;
    if let Some(w) = lr.difference(&rl) {
        return Err(DblError::Asymmetric(w));
    }
    let dom = lr.domain();
    let y: Vec<usize> = (0..h.base.len()).filter(|&c| dom[c]).collect();
    let mut parent: Vec<usize> = (0..h.base.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &(a, b) in lr.pairs() {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut classes: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for &c in &y {
        let r = find(&mut parent, c);
        classes.entry(r).or_default().push(c);
    }
    Ok((y, classes.into_values().collect()))
}
