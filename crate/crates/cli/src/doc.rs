//! The document format: one JSON object per file, tagged by `kind`.
//!
//! Element references are by name. Serialization is canonical: pairs and
//! composition triples are sorted by element position, subspace and graph
//! rows are put in reduced echelon form, and output ends with a newline.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use symplin::{parse_rational, Matrix};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetDoc {
    pub elements: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    pub src: Vec<String>,
    pub dst: Vec<String>,
    pub pairs: Vec<[String; 2]>,
}

/// Tables keyed by name; `comp` lists `[g, h, g∘h]` for `source(g) = target(h)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupoidDoc {
    pub arrows: Vec<String>,
    pub objects: Vec<String>,
    pub source: Vec<String>,
    pub target: Vec<String>,
    pub unit: Vec<String>,
    pub comp: Vec<[String; 3]>,
    pub inv: Vec<String>,
}

/// The horizontal structure has the squares as arrows and the arrows of
/// `sideH` as objects; the vertical one likewise with `sideV`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DoubleDoc {
    pub squares: Vec<String>,
    #[serde(rename = "sideH")]
    pub side_h: GroupoidDoc,
    #[serde(rename = "sideV")]
    pub side_v: GroupoidDoc,
    pub hstruct: GroupoidDoc,
    pub vstruct: GroupoidDoc,
}

/// Structure relations in the order of [`HOPFOID_LEGS`]. Elements of
/// products join names with `;`; the point has the single element `*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfoidDoc {
    pub squares: Vec<String>,
    pub objects: Vec<String>,
    pub legs: Vec<RelationDoc>,
}

pub const HOPFOID_LEGS: [&str; 11] = [
    "target",
    "source",
    "unit",
    "product",
    "coproduct",
    "antipode",
    "counit",
    "star",
    "base-coproduct",
    "base-counit",
    "base-star",
];

/// Rows of `"p/q"` rationals. With `form` the rows span a subspace of that
/// symplectic space; with `src` and `dst` forms they span the graph of a
/// canonical relation; with neither they are a plain matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub rows: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub src: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dst: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainDoc {
    pub legs: Vec<MatrixDoc>,
    /// Transversality at junctions and results of built-in checks.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub flags: BTreeMap<String, bool>,
}

/// Levels of a simplicial object with its faces and degeneracies by degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplicialDoc {
    pub levels: Vec<Vec<String>>,
    pub faces: Vec<Vec<RelationDoc>>,
    pub degeneracies: Vec<Vec<RelationDoc>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckDoc {
    pub name: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDoc {
    pub subject: String,
    pub checks: Vec<CheckDoc>,
    pub summary: Summary,
}

impl ReportDoc {
    pub fn new(subject: impl Into<String>, checks: Vec<CheckDoc>) -> Self {
        let failed = checks.iter().filter(|c| !c.pass).count();
        ReportDoc { subject: subject.into(), summary: Summary { passed: checks.len() - failed, failed }, checks }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
#[allow(clippy::large_enum_variant)]
pub enum Document {
    Set(SetDoc),
    Relation(RelationDoc),
    Groupoid(GroupoidDoc),
    Double(DoubleDoc),
    Hopfoid(HopfoidDoc),
    Matrix(MatrixDoc),
    Chain(ChainDoc),
    Simplicial(SimplicialDoc),
    Report(ReportDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Set(_) => "set",
            Document::Relation(_) => "relation",
            Document::Groupoid(_) => "groupoid",
            Document::Double(_) => "double",
            Document::Hopfoid(_) => "hopfoid",
            Document::Matrix(_) => "matrix",
            Document::Chain(_) => "chain",
            Document::Simplicial(_) => "simplicial",
            Document::Report(_) => "report",
        }
    }
}

/// 1-based line of the first occurrence of `needle` at or after the first
/// occurrence of `anchor`.
pub fn locate(text: &str, anchor: &str, needle: &str) -> Option<usize> {
    let start = text.find(anchor).unwrap_or(0);
    let at = start + text[start..].find(needle)?;
    Some(text[..at].matches('\n').count() + 1)
}

fn positions(names: &[String]) -> HashMap<&str, usize> {
    names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect()
}

/// Position of `name`, or past the end so unknown names sort last.
fn pos(map: &HashMap<&str, usize>, name: &str) -> usize {
    map.get(name).copied().unwrap_or(usize::MAX)
}

fn check_rationals(rows: &[Vec<String>], text: &str) -> Result<(), CliError> {
    for s in rows.iter().flatten() {
        let x = parse_rational(s).map_err(|_| CliError::parse(locate(text, "\"rows\"", s), format!("bad rational {s:?}")))?;
        if x.to_string() != *s {
            return Err(CliError::parse(locate(text, "", &format!("\"{s}\"")), format!("rational {s:?} is not reduced; write {x}")));
        }
    }
    Ok(())
}

impl MatrixDoc {
    pub fn all_rows(&self) -> impl Iterator<Item = &Vec<Vec<String>>> {
        std::iter::once(&self.rows).chain(self.form.iter()).chain(self.src.iter()).chain(self.dst.iter())
    }
}

/// Errors raised after the tagged body was buffered carry no position; they
/// name the offending token in backticks, which is then looked up.
fn error_line(text: &str, e: &serde_json::Error) -> Option<usize> {
    if e.line() > 0 {
        return Some(e.line());
    }
    let msg = e.to_string();
    let token = msg.split('`').nth(1)?;
    locate(text, "", &format!("\"{token}\""))
}

/// Parses a document; structural errors carry the line they point at.
pub fn parse(text: &str) -> Result<Document, CliError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| CliError::parse(error_line(text, &e), e.to_string()))?;
    let matrices: Vec<&MatrixDoc> = match &doc {
        Document::Matrix(m) => vec![m],
        Document::Chain(c) => c.legs.iter().collect(),
        _ => Vec::new(),
    };
    for m in matrices {
        for rows in m.all_rows() {
            check_rationals(rows, text)?;
        }
    }
    Ok(doc)
}

fn canonical_relation(r: &mut RelationDoc) {
    let (s, d) = (positions(&r.src), positions(&r.dst));
    r.pairs.sort_by_key(|[a, b]| (pos(&s, a), pos(&d, b)));
    r.pairs.dedup();
}

fn canonical_groupoid(g: &mut GroupoidDoc) {
    let a = positions(&g.arrows);
    g.comp.sort_by_key(|[x, y, _]| (pos(&a, x), pos(&a, y)));
    g.comp.dedup();
}

/// Rows in reduced echelon form when they span a subspace; unchanged when
/// they are a plain matrix or do not parse.
fn canonical_matrix(m: &mut MatrixDoc) {
    if m.form.is_none() && m.src.is_none() && m.dst.is_none() {
        return;
    }
    let width = match (&m.form, &m.src, &m.dst) {
        (Some(f), _, _) => f.len(),
        (None, s, d) => s.as_ref().map_or(0, Vec::len) + d.as_ref().map_or(0, Vec::len),
    };
    if let Ok(x) = Matrix::parse(width, &m.rows) {
        m.rows = x.rref().0.to_strings();
    }
}

/// The canonical form of a document, as written by [`serialize`].
pub fn canonical(doc: &Document) -> Document {
    let mut d = doc.clone();
    match &mut d {
        Document::Relation(r) => canonical_relation(r),
        Document::Groupoid(g) => canonical_groupoid(g),
        Document::Double(x) => {
            for g in [&mut x.side_h, &mut x.side_v, &mut x.hstruct, &mut x.vstruct] {
                canonical_groupoid(g);
            }
        }
        Document::Hopfoid(h) => h.legs.iter_mut().for_each(canonical_relation),
        Document::Simplicial(s) => {
            s.faces.iter_mut().chain(s.degeneracies.iter_mut()).flatten().for_each(canonical_relation);
        }
        Document::Matrix(m) => canonical_matrix(m),
        Document::Chain(c) => c.legs.iter_mut().for_each(canonical_matrix),
        Document::Set(_) | Document::Report(_) => {}
    }
    d
}

/// Indented JSON with arrays of scalars kept on one line.
fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

/// Canonical, byte-stable text of a document.
pub fn serialize(doc: &Document) -> String {
    let value = serde_json::to_value(canonical(doc)).expect("documents serialize");
    let mut s = String::new();
    write_value(&value, 0, &mut s);
    s.push('\n');
    s
}
