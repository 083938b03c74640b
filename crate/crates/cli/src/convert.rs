//! Passage between documents and the structures of the library crates.

use std::collections::HashMap;
use std::sync::Arc;

use dbl::{FinDoubleGroupoid, Hopfoid};
use grpd::FinGroupoid;
use relcat::{FinSet, Rel, Report, SimplicialRel};
use symplin::{LinCanRel, Matrix, Subspace, SympSpace};

use crate::doc::{
    locate, CheckDoc, DoubleDoc, GroupoidDoc, HopfoidDoc, MatrixDoc, RelationDoc, ReportDoc, SimplicialDoc,
};
use crate::error::CliError;

/// The source text, for pointing errors at lines.
#[derive(Clone, Copy)]
pub struct Source<'a> {
    pub text: &'a str,
}

impl Source<'_> {
    fn err(&self, anchor: &str, name: &str, message: String) -> CliError {
        CliError::parse(locate(self.text, anchor, &format!("\"{name}\"")), message)
    }
}

fn set_of(src: Source, id: &str, names: &[String], anchor: &str) -> Result<Arc<FinSet>, CliError> {
    FinSet::new(id, names.to_vec()).map_err(|dup| src.err(anchor, &dup, format!("element {dup:?} repeated in {id}")))
}

/// A lone `*` element denotes the point, so products with it collapse.
fn set_or_pt(src: Source, id: &str, names: &[String], anchor: &str) -> Result<Arc<FinSet>, CliError> {
    if names.len() == 1 && names[0] == relcat::set::PT_ATOM {
        Ok(FinSet::pt())
    } else {
        set_of(src, id, names, anchor)
    }
}

/// The set at one level of a simplicial object.
pub fn level_set(src: Source, n: usize, names: &[String]) -> Result<Arc<FinSet>, CliError> {
    set_or_pt(src, &format!("X{n}"), names, "\"levels\"")
}

struct Lookup {
    what: String,
    index: HashMap<String, usize>,
}

impl Lookup {
    fn of(set: &FinSet, what: &str) -> Self {
        Lookup { what: what.into(), index: set.names().into_iter().enumerate().map(|(i, n)| (n, i)).collect() }
    }

    fn get(&self, src: Source, anchor: &str, name: &str) -> Result<usize, CliError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| src.err(anchor, name, format!("{name:?} is not an element of {}", self.what)))
    }

    fn all(&self, src: Source, anchor: &str, names: &[String]) -> Result<Vec<usize>, CliError> {
        names.iter().map(|n| self.get(src, anchor, n)).collect()
    }
}

fn same_names(src: Source, anchor: &str, got: &[String], set: &FinSet, what: &str) -> Result<(), CliError> {
    if got == set.names().as_slice() {
        Ok(())
    } else {
        Err(CliError::parse(locate(src.text, anchor, "\""), format!("{what} must list {:?}", set.names())))
    }
}

/// A relation between given sets; its listed elements must match them.
pub fn relation_between(
    src: Source,
    doc: &RelationDoc,
    from: &Arc<FinSet>,
    to: &Arc<FinSet>,
    anchor: &str,
) -> Result<Rel, CliError> {
    same_names(src, anchor, &doc.src, from, "src")?;
    same_names(src, anchor, &doc.dst, to, "dst")?;
    let (a, b) = (Lookup::of(from, "src"), Lookup::of(to, "dst"));
    let pairs = doc
        .pairs
        .iter()
        .map(|[x, y]| Ok((a.get(src, anchor, x)?, b.get(src, anchor, y)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    Rel::new(from.clone(), to.clone(), pairs).map_err(|e| CliError::parse(None, e.to_string()))
}

pub fn relation_from(src: Source, doc: &RelationDoc) -> Result<Rel, CliError> {
    let from = set_of(src, "A", &doc.src, "\"src\"")?;
    let to = if doc.src == doc.dst { from.clone() } else { set_of(src, "B", &doc.dst, "\"dst\"")? };
    relation_between(src, doc, &from, &to, "\"pairs\"")
}

/// A groupoid, on given arrow or object sets when supplied.
pub fn groupoid_on(
    src: Source,
    doc: &GroupoidDoc,
    arrows: Option<&Arc<FinSet>>,
    objects: Option<&Arc<FinSet>>,
    anchor: &str,
) -> Result<FinGroupoid, CliError> {
    let arrows = match arrows {
        Some(a) => {
            same_names(src, anchor, &doc.arrows, a, "arrows")?;
            a.clone()
        }
        None => set_or_pt(src, "G", &doc.arrows, anchor)?,
    };
    let objects = match objects {
        Some(o) => {
            same_names(src, anchor, &doc.objects, o, "objects")?;
            o.clone()
        }
        None => set_or_pt(src, "M", &doc.objects, anchor)?,
    };
    let (a, o) = (Lookup::of(&arrows, "the arrows"), Lookup::of(&objects, "the objects"));
    let comp = doc
        .comp
        .iter()
        .map(|[x, y, z]| Ok((a.get(src, anchor, x)?, a.get(src, anchor, y)?, a.get(src, anchor, z)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    FinGroupoid::new(
        arrows.clone(),
        objects.clone(),
        o.all(src, anchor, &doc.source)?,
        o.all(src, anchor, &doc.target)?,
        a.all(src, anchor, &doc.unit)?,
        comp,
        a.all(src, anchor, &doc.inv)?,
    )
    .map_err(|e| CliError::parse(locate(src.text, anchor, "\""), e.to_string()))
}

pub fn groupoid_from(src: Source, doc: &GroupoidDoc) -> Result<FinGroupoid, CliError> {
    groupoid_on(src, doc, None, None, "\"arrows\"")
}

pub fn double_from(src: Source, doc: &DoubleDoc) -> Result<FinDoubleGroupoid, CliError> {
    let squares = set_of(src, "D", &doc.squares, "\"squares\"")?;
    let h = set_of(src, "H", &doc.side_h.arrows, "\"sideH\"")?;
    let v = set_of(src, "V", &doc.side_v.arrows, "\"sideV\"")?;
    let side_h = groupoid_on(src, &doc.side_h, Some(&h), None, "\"sideH\"")?;
    let side_v = groupoid_on(src, &doc.side_v, Some(&v), Some(side_h.objects()), "\"sideV\"")?;
    let hstruct = groupoid_on(src, &doc.hstruct, Some(&squares), Some(&h), "\"hstruct\"")?;
    let vstruct = groupoid_on(src, &doc.vstruct, Some(&squares), Some(&v), "\"vstruct\"")?;
    FinDoubleGroupoid::new(side_h, side_v, hstruct, vstruct).map_err(|e| CliError::parse(None, e.to_string()))
}

pub fn hopfoid_from(src: Source, doc: &HopfoidDoc) -> Result<Hopfoid, CliError> {
    let s = set_or_pt(src, "S", &doc.squares, "\"squares\"")?;
    let b = set_or_pt(src, "B", &doc.objects, "\"objects\"")?;
    let (ss, bb, pt) = (FinSet::product(&s, &s), FinSet::product(&b, &b), FinSet::pt());
    let ends = [
        (&s, &b),
        (&s, &b),
        (&b, &s),
        (&ss, &s),
        (&s, &ss),
        (&s, &s),
        (&s, &pt),
        (&s, &s),
        (&b, &bb),
        (&b, &pt),
        (&b, &b),
    ];
    if doc.legs.len() != ends.len() {
        return Err(CliError::parse(locate(src.text, "\"legs\"", "["), format!("a hopfoid has {} legs", ends.len())));
    }
    let mut rels = Vec::with_capacity(ends.len());
    for (leg, (from, to)) in doc.legs.iter().zip(ends) {
        rels.push(relation_between(src, leg, from, to, "\"legs\"")?);
    }
    let mut r = rels.into_iter();
    let mut next = || r.next().expect("eleven legs");
    Ok(Hopfoid {
        carrier: s.clone(),
        base: b.clone(),
        target: next(),
        source: next(),
        unit: next(),
        product: next(),
        coproduct: next(),
        antipode: next(),
        counit: next(),
        star: next(),
        base_coproduct: next(),
        base_counit: next(),
        base_star: next(),
    })
}

fn matrix_with(rows: &[Vec<String>], cols: usize) -> Result<Matrix, CliError> {
    Matrix::parse(cols, rows).map_err(|e| CliError::parse(None, e.to_string()))
}

fn square(rows: &[Vec<String>]) -> Result<Matrix, CliError> {
    matrix_with(rows, rows.len())
}

/// A parsed matrix document.
#[derive(Clone, Debug)]
pub enum Linear {
    Plain(Matrix),
    Subspace { form: Matrix, rows: Matrix },
    Relation { src: Matrix, dst: Matrix, rows: Matrix },
}

pub fn linear_from(doc: &MatrixDoc) -> Result<Linear, CliError> {
    match (&doc.form, &doc.src, &doc.dst) {
        (None, None, None) => {
            let cols = doc.rows.first().map_or(0, Vec::len);
            Ok(Linear::Plain(matrix_with(&doc.rows, cols)?))
        }
        (Some(f), None, None) => {
            let form = square(f)?;
            let rows = matrix_with(&doc.rows, form.nrows())?;
            Ok(Linear::Subspace { form, rows })
        }
        (None, Some(s), Some(d)) => {
            let (src, dst) = (square(s)?, square(d)?);
            let rows = matrix_with(&doc.rows, src.nrows() + dst.nrows())?;
            Ok(Linear::Relation { src, dst, rows })
        }
        _ => Err(CliError::parse(None, "a matrix has a form, or both src and dst forms, or neither")),
    }
}

fn failed(e: symplin::LinError) -> CliError {
    CliError::Failed(e.to_string())
}

pub fn space(form: &Matrix) -> Result<SympSpace, CliError> {
    SympSpace::new(form.clone()).map_err(failed)
}

pub fn subspace_from(doc: &MatrixDoc) -> Result<Subspace, CliError> {
    match linear_from(doc)? {
        Linear::Subspace { form, rows } => Subspace::span(&space(&form)?, &rows).map_err(failed),
        _ => Err(CliError::Usage("expected a matrix with a form".into())),
    }
}

pub fn canrel_from(doc: &MatrixDoc) -> Result<LinCanRel, CliError> {
    match linear_from(doc)? {
        Linear::Relation { src, dst, rows } => LinCanRel::new(&space(&src)?, &space(&dst)?, &rows).map_err(failed),
        _ => Err(CliError::Usage("expected a matrix with src and dst forms".into())),
    }
}

pub fn plain_from(doc: &MatrixDoc) -> Result<Matrix, CliError> {
    match linear_from(doc)? {
        Linear::Plain(m) => Ok(m),
        _ => Err(CliError::Usage("expected a plain matrix".into())),
    }
}

pub fn relation_doc(r: &Rel) -> RelationDoc {
    let (s, d) = (r.src(), r.dst());
    RelationDoc {
        src: s.names(),
        dst: d.names(),
        pairs: r.pairs().iter().map(|&(a, b)| [s.name(a), d.name(b)]).collect(),
    }
}

pub fn groupoid_doc(g: &FinGroupoid) -> GroupoidDoc {
    let (a, o) = (g.arrows(), g.objects());
    GroupoidDoc {
        arrows: a.names(),
        objects: o.names(),
        source: (0..g.len()).map(|x| o.name(g.src(x))).collect(),
        target: (0..g.len()).map(|x| o.name(g.tgt(x))).collect(),
        unit: g.units().iter().map(|&u| a.name(u)).collect(),
        comp: g.comp().iter().map(|&(x, y, z)| [a.name(x), a.name(y), a.name(z)]).collect(),
        inv: (0..g.len()).map(|x| a.name(g.inv(x))).collect(),
    }
}

pub fn double_doc(d: &FinDoubleGroupoid) -> DoubleDoc {
    DoubleDoc {
        squares: d.squares().names(),
        side_h: groupoid_doc(d.side_h()),
        side_v: groupoid_doc(d.side_v()),
        hstruct: groupoid_doc(d.hstruct()),
        vstruct: groupoid_doc(d.vstruct()),
    }
}

pub fn hopfoid_doc(h: &Hopfoid) -> HopfoidDoc {
    let legs = [
        &h.target,
        &h.source,
        &h.unit,
        &h.product,
        &h.coproduct,
        &h.antipode,
        &h.counit,
        &h.star,
        &h.base_coproduct,
        &h.base_counit,
        &h.base_star,
    ];
    HopfoidDoc { squares: h.carrier.names(), objects: h.base.names(), legs: legs.into_iter().map(relation_doc).collect() }
}

pub fn simplicial_doc(x: &SimplicialRel) -> SimplicialDoc {
    SimplicialDoc {
        levels: x.levels.iter().map(|l| l.names()).collect(),
        faces: x.faces.iter().map(|fs| fs.iter().map(relation_doc).collect()).collect(),
        degeneracies: x.degeneracies.iter().map(|ss| ss.iter().map(relation_doc).collect()).collect(),
    }
}

pub fn plain_doc(m: &Matrix) -> MatrixDoc {
    MatrixDoc { rows: m.to_strings(), form: None, src: None, dst: None }
}

pub fn subspace_doc(u: &Subspace) -> MatrixDoc {
    MatrixDoc { rows: u.basis().to_strings(), form: Some(u.ambient().form().to_strings()), src: None, dst: None }
}

pub fn canrel_doc(l: &LinCanRel) -> MatrixDoc {
    MatrixDoc {
        rows: l.graph().basis().to_strings(),
        form: None,
        src: Some(l.src().form().to_strings()),
        dst: Some(l.dst().form().to_strings()),
    }
}

pub fn check_doc(name: impl Into<String>, witness: Option<Vec<String>>) -> CheckDoc {
    CheckDoc { name: name.into(), pass: witness.is_none(), witness }
}

pub fn report_doc(rep: &Report) -> ReportDoc {
    let checks = rep
        .checks
        .iter()
        .map(|c| {
            let witness = if c.pass { None } else { Some(c.witness.clone().unwrap_or_else(|| vec!["failed".into()])) };
            check_doc(c.name.clone(), witness)
        })
        .collect();
    ReportDoc::new(rep.subject.clone(), checks)
}
