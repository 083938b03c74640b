//! The four subcommands. Each returns the output document and whether
//! every selected check passed.

use std::collections::BTreeMap;

use dbl::{
    check_hopfoid, core, example_dinertia, example_dmain, from_hopfoid, induced_groupoid, to_hopfoid,
    FinDoubleGroupoid,
};
use grpd::{inertia, nerve, FinGroupoid};
use harness::{check_double, enumerate_doubles, Exec};
use relcat::{check_simplicial, Report, SimplicialRel};
use symplin::{cotangent_lift, factor, reduce, ww_compose, ww_two_term, CorrChain, LinCanRel};

use crate::convert::{self, Linear, Source};
use crate::doc::{self, ChainDoc, CheckDoc, Document, ReportDoc, SimplicialDoc};
use crate::error::CliError;

/// Largest accepted enumeration bound.
pub const MAX_BOUND: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub doc: Document,
    pub ok: bool,
}

impl Outcome {
    fn report(r: ReportDoc) -> Self {
        let ok = r.passed();
        Outcome { doc: Document::Report(r), ok }
    }

    fn built(doc: Document) -> Self {
        Outcome { doc, ok: true }
    }
}

/// A check that can be reported; only `default` ones run without `--check`.
struct Candidate {
    check: CheckDoc,
    default: bool,
}

fn candidates(rep: &Report) -> Vec<Candidate> {
    convert::report_doc(rep).checks.into_iter().map(|check| Candidate { check, default: true }).collect()
}

fn candidate(name: &str, default: bool, witness: Option<Vec<String>>) -> Candidate {
    Candidate { check: convert::check_doc(name, witness), default }
}

fn outcome(pass: bool, what: impl FnOnce() -> String) -> Option<Vec<String>> {
    (!pass).then(|| vec![what()])
}

/// Keeps the checks whose names start with one of `filter`, or the default
/// ones when the filter is empty. A filter matching nothing is a usage error.
fn select(subject: String, all: Vec<Candidate>, filter: &[String]) -> Result<ReportDoc, CliError> {
    let available: Vec<String> = all.iter().map(|c| c.check.name.clone()).collect();
    let kept: Vec<CheckDoc> = all
        .into_iter()
        .filter(|c| if filter.is_empty() { c.default } else { filter.iter().any(|f| c.check.name.starts_with(f)) })
        .map(|c| c.check)
        .collect();
    if kept.is_empty() && !filter.is_empty() {
        return Err(CliError::Usage(format!("no check matches {filter:?}; available: {}", available.join(", "))));
    }
    Ok(ReportDoc::new(subject, kept))
}

fn failed(e: impl std::fmt::Display) -> CliError {
    CliError::Failed(e.to_string())
}

fn groupoid_input(text: &str) -> Result<FinGroupoid, CliError> {
    match doc::parse(text)? {
        Document::Groupoid(g) => convert::groupoid_from(Source { text }, &g),
        other => Err(CliError::Usage(format!("expected a groupoid document, got {}", other.kind()))),
    }
}

fn double_input(text: &str) -> Result<FinDoubleGroupoid, CliError> {
    match doc::parse(text)? {
        Document::Double(d) => convert::double_from(Source { text }, &d),
        other => Err(CliError::Usage(format!("expected a double document, got {}", other.kind()))),
    }
}

fn simplicial_from(text: &str, s: &SimplicialDoc) -> Result<SimplicialRel, CliError> {
    let src = Source { text };
    let levels = s
        .levels
        .iter()
        .enumerate()
        .map(|(n, names)| convert::level_set(src, n, names))
        .collect::<Result<Vec<_>, _>>()?;
    let between = |rels: &[doc::RelationDoc], n: usize, up: bool| {
        let (from, to) = (&levels[n], levels.get(if up { n + 1 } else { n.wrapping_sub(1) }));
        let to = to.ok_or_else(|| CliError::parse(None, format!("level {n} has maps to a missing level")))?;
        rels.iter().map(|r| convert::relation_between(src, r, from, to, "\"faces\"")).collect::<Result<Vec<_>, _>>()
    };
    let mut faces = Vec::with_capacity(s.faces.len());
    for (n, fs) in s.faces.iter().enumerate() {
        faces.push(if fs.is_empty() { Vec::new() } else { between(fs, n, false)? });
    }
    let mut degeneracies = Vec::with_capacity(s.degeneracies.len());
    for (n, ds) in s.degeneracies.iter().enumerate() {
        degeneracies.push(between(ds, n, true)?);
    }
    Ok(SimplicialRel { levels, faces, degeneracies })
}

fn linear_candidates(m: &doc::MatrixDoc) -> Result<Vec<Candidate>, CliError> {
    let symplectic = |name: &str, form: &symplin::Matrix| {
        candidate(name, true, convert::space(form).err().map(|e| vec![e.to_string()]))
    };
    Ok(match convert::linear_from(m)? {
        Linear::Plain(_) => vec![candidate("well-formed", true, None)],
        Linear::Subspace { form, .. } => {
            let mut out = vec![symplectic("form-symplectic", &form)];
            if let Ok(u) = convert::subspace_from(m) {
                let k = u.classify();
                for (name, holds) in [
                    ("isotropic", k.isotropic),
                    ("coisotropic", k.coisotropic),
                    ("lagrangian", k.lagrangian),
                    ("symplectic", k.symplectic),
                ] {
                    out.push(candidate(name, false, outcome(holds, || format!("dimension {} of {}", u.dim(), form.nrows()))));
                }
            }
            out
        }
        Linear::Relation { src, dst, .. } => {
            let mut out = vec![symplectic("src-form-symplectic", &src), symplectic("dst-form-symplectic", &dst)];
            if convert::space(&src).is_ok() && convert::space(&dst).is_ok() {
                out.push(candidate("graph-lagrangian", true, convert::canrel_from(m).err().map(|e| vec![e.to_string()])));
            }
            out
        }
    })
}

fn report_candidates(r: &ReportDoc) -> Vec<Candidate> {
    let bad: Vec<String> =
        r.checks.iter().filter(|c| c.pass == c.witness.is_some()).map(|c| c.name.clone()).collect();
    let failed = r.checks.iter().filter(|c| !c.pass).count();
    let counts = r.summary.passed + r.summary.failed == r.checks.len() && r.summary.failed == failed;
    vec![
        candidate("witness-iff-fail", true, (!bad.is_empty()).then_some(bad)),
        candidate(
            "summary-counts",
            true,
            outcome(counts, || format!("{} passed, {} failed over {} checks", r.summary.passed, r.summary.failed, r.checks.len())),
        ),
    ]
}

/// Loads a document and runs its validator. `kind`, when given, must match.
pub fn run_validate(text: &str, kind: Option<&str>, filter: &[String]) -> Result<Outcome, CliError> {
    let document = doc::parse(text)?;
    if let Some(k) = kind {
        if k != document.kind() {
            return Err(CliError::Usage(format!("expected a {k} document, got {}", document.kind())));
        }
    }
    let src = Source { text };
    let (subject, all) = match &document {
        Document::Set(s) => {
            convert::level_set(src, 0, &s.elements)?;
            (format!("set of {}", s.elements.len()), vec![candidate("well-formed", true, None)])
        }
        Document::Relation(r) => {
            let rel = convert::relation_from(src, r)?;
            let f = rel.classify();
            let mut all = vec![candidate("well-formed", true, None)];
            for (name, holds) in [
                ("surjective", f.surjective),
                ("injective", f.injective),
                ("cosurjective", f.cosurjective),
                ("coinjective", f.coinjective),
                ("surmersion", f.surmersion),
                ("cosurmersion", f.cosurmersion),
            ] {
                all.push(candidate(name, false, outcome(holds, || format!("relation is not {name}"))));
            }
            ("relation".into(), all)
        }
        Document::Groupoid(g) => {
            let rep = convert::groupoid_from(src, g)?.validate();
            (rep.subject.clone(), candidates(&rep))
        }
        Document::Double(d) => {
            let rep = convert::double_from(src, d)?.validate();
            (rep.subject.clone(), candidates(&rep))
        }
        Document::Hopfoid(h) => {
            let rep = check_hopfoid(&convert::hopfoid_from(src, h)?);
            (rep.subject.clone(), candidates(&rep))
        }
        Document::Matrix(m) => ("matrix".into(), linear_candidates(m)?),
        Document::Chain(c) => {
            let mut all = Vec::new();
            let mut legs = Vec::new();
            for (i, leg) in c.legs.iter().enumerate() {
                match convert::canrel_from(leg) {
                    Ok(l) => {
                        legs.push(l);
                        all.push(candidate(&format!("leg-{i}-lagrangian"), true, None));
                    }
                    Err(e) => all.push(candidate(&format!("leg-{i}-lagrangian"), true, Some(vec![e.to_string()]))),
                }
            }
            if legs.len() == c.legs.len() {
                all.push(candidate("endpoints-match", true, CorrChain::new(legs).err().map(|e| vec![e.to_string()])));
            }
            (format!("chain of {}", c.legs.len()), all)
        }
        Document::Simplicial(s) => {
            let x = simplicial_from(text, s)?;
            let depth = x.depth();
            let rep = check_simplicial(&x, depth).map_err(failed)?;
            (format!("simplicial object to depth {depth}"), candidates(&rep))
        }
        Document::Report(r) => (format!("report {}", r.subject), report_candidates(r)),
    };
    Ok(Outcome::report(select(subject, all, filter)?))
}

/// Operations that build one structure from another.
pub const CONSTRUCTIONS: [&str; 8] = ["core", "hopfoid", "induced", "inertia", "nerve", "example", "example-inertia", "double"];

pub fn run_construct(text: &str, op: &str, depth: Option<usize>) -> Result<Outcome, CliError> {
    let valid_double = || -> Result<FinDoubleGroupoid, CliError> {
        let d = double_input(text)?;
        d.require_valid().map_err(failed)?;
        Ok(d)
    };
    let valid_groupoid = || -> Result<FinGroupoid, CliError> {
        let g = groupoid_input(text)?;
        g.require_valid().map_err(failed)?;
        Ok(g)
    };
    let doc = match op {
        "core" => Document::Groupoid(convert::groupoid_doc(&core(&valid_double()?).map_err(failed)?.groupoid)),
        "hopfoid" => Document::Hopfoid(convert::hopfoid_doc(&to_hopfoid(&valid_double()?).map_err(failed)?)),
        "induced" => {
            Document::Groupoid(convert::groupoid_doc(&induced_groupoid(&valid_double()?).map_err(failed)?.groupoid))
        }
        "inertia" => Document::Groupoid(convert::groupoid_doc(&inertia(&valid_groupoid()?).map_err(failed)?)),
        "nerve" => Document::Simplicial(convert::simplicial_doc(&nerve(&valid_groupoid()?, depth.unwrap_or(2)))),
        "example" => Document::Double(convert::double_doc(&example_dmain(&valid_groupoid()?).map_err(failed)?)),
        "example-inertia" => {
            Document::Double(convert::double_doc(&example_dinertia(&valid_groupoid()?).map_err(failed)?))
        }
        "double" => {
            let h = match doc::parse(text)? {
                Document::Hopfoid(h) => convert::hopfoid_from(Source { text }, &h)?,
                other => return Err(CliError::Usage(format!("expected a hopfoid document, got {}", other.kind()))),
            };
            Document::Double(convert::double_doc(&from_hopfoid(&h).map_err(failed)?))
        }
        _ => return Err(CliError::Usage(format!("unknown construction {op:?}; one of {}", CONSTRUCTIONS.join(", ")))),
    };
    Ok(Outcome::built(doc))
}

fn chain_input(text: &str) -> Result<CorrChain, CliError> {
    match doc::parse(text)? {
        Document::Chain(c) => {
            let legs = c.legs.iter().map(convert::canrel_from).collect::<Result<Vec<_>, _>>()?;
            CorrChain::new(legs).map_err(failed)
        }
        Document::Matrix(m) => CorrChain::new(vec![convert::canrel_from(&m)?]).map_err(failed),
        other => Err(CliError::Usage(format!("expected a chain document, got {}", other.kind()))),
    }
}

fn matrix_input(text: &str) -> Result<doc::MatrixDoc, CliError> {
    match doc::parse(text)? {
        Document::Matrix(m) => Ok(m),
        other => Err(CliError::Usage(format!("expected a matrix document, got {}", other.kind()))),
    }
}

fn chain_doc(legs: &[&LinCanRel], flags: &[(&str, bool)]) -> Document {
    Document::Chain(ChainDoc {
        legs: legs.iter().map(|l| convert::canrel_doc(l)).collect(),
        flags: flags.iter().map(|&(k, v)| (k.to_string(), v)).collect::<BTreeMap<_, _>>(),
    })
}

/// Operations of the linear kernel.
pub const LINEAR_OPS: [&str; 5] = ["compose", "reduce", "factor", "lift", "two-term"];

pub fn run_linear(text: &str, op: &str) -> Result<Outcome, CliError> {
    match op {
        "compose" => {
            let c = ww_compose(&chain_input(text)?).map_err(failed)?;
            let transversal = c.junctions.iter().all(|t| t.transversal);
            let strong = c.junctions.iter().all(|t| t.strongly_transversal);
            Ok(Outcome::built(chain_doc(&[&c.rel], &[("transversal", transversal), ("strongly-transversal", strong)])))
        }
        "reduce" => {
            let u = convert::subspace_from(&matrix_input(text)?)?;
            let red = reduce(&u).map_err(failed)?;
            let ok = red.rel.is_reduction();
            Ok(Outcome { doc: chain_doc(&[&red.rel], &[("reduction", ok)]), ok })
        }
        "factor" => {
            let l = convert::canrel_from(&matrix_input(text)?)?;
            let f = factor(&l).map_err(failed)?;
            let ok = f.recompose().is_ok_and(|r| r == l);
            Ok(Outcome { doc: chain_doc(&[&f.reduction, &f.iso, &f.coreduction], &[("recomposes", ok)]), ok })
        }
        "lift" => {
            let m = convert::plain_from(&matrix_input(text)?)?;
            let l = cotangent_lift(&m);
            let reduction = l.is_reduction();
            Ok(Outcome::built(chain_doc(&[&l], &[("reduction", reduction)])))
        }
        "two-term" => {
            let chain = chain_input(text)?;
            let lambda = ww_compose(&chain).map_err(failed)?.rel;
            let t = ww_two_term(&chain).map_err(failed)?;
            let ok = t.coreduction.then(&t.reduction).is_ok_and(|(r, _)| r == lambda);
            Ok(Outcome { doc: chain_doc(&[&t.coreduction, &t.reduction], &[("recomposes", ok)]), ok })
        }
        _ => Err(CliError::Usage(format!("unknown linear operation {op:?}; one of {}", LINEAR_OPS.join(", ")))),
    }
}

/// Enumeration bounds; `max_squares` switches from groupoids to doubles.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bounds {
    pub max_arrows: Option<usize>,
    pub max_squares: Option<usize>,
    pub depth: Option<usize>,
}

pub const GROUPOID_CHECKS: [&str; 3] = ["round-trip", "valid", "nerve"];
pub const DOUBLE_CHECKS: [&str; 6] = ["hopfoid", "round-trip", "orbits", "lemmas", "core-product", "simplicial"];

/// Per-candidate results of one enumeration, one vector per check name.
struct Tally {
    names: Vec<&'static str>,
    defaults: Vec<bool>,
    failures: Vec<Vec<String>>,
}

impl Tally {
    fn new(names: &[&'static str], non_default: &[&str]) -> Self {
        Tally {
            names: names.to_vec(),
            defaults: names.iter().map(|n| !non_default.contains(n)).collect(),
            failures: vec![Vec::new(); names.len()],
        }
    }

    fn record(&mut self, label: &str, results: &[bool]) {
        for (k, &ok) in results.iter().enumerate() {
            if !ok {
                self.failures[k].push(label.to_string());
            }
        }
    }

    fn finish(self, subject: String, filter: &[String]) -> Result<ReportDoc, CliError> {
        let all = self
            .names
            .iter()
            .zip(self.defaults)
            .zip(self.failures)
            .map(|((n, d), f)| candidate(n, d, (!f.is_empty()).then_some(f)))
            .collect();
        select(subject, all, filter)
    }
}

fn bound(value: Option<usize>, default: usize, flag: &str) -> Result<usize, CliError> {
    let v = value.unwrap_or(default);
    if v > MAX_BOUND {
        return Err(CliError::Usage(format!(
            "{flag} {v} is above the supported bound {MAX_BOUND}; the search grows factorially, use {MAX_BOUND} or less"
        )));
    }
    Ok(v)
}

/// Exhaustive checks over small structures. `extra`, when given, is the
/// text of one more candidate appended after the enumerated ones.
pub fn run_enumerate(bounds: Bounds, filter: &[String], extra: Option<&str>, exec: Exec) -> Result<Outcome, CliError> {
    let max_arrows = bound(bounds.max_arrows, 4, "--max-arrows")?;
    let report = match bounds.max_squares {
        Some(sq) => {
            let sq = bound(Some(sq), sq, "--max-squares")?;
            let depth = bounds.depth.unwrap_or(2);
            let mut ds = enumerate_doubles(exec, sq, max_arrows);
            let found = ds.len();
            if let Some(text) = extra {
                ds.push(double_input(text)?);
            }
            let verdicts = exec.map(&ds, |d| d.is_valid().then(|| check_double(d, depth)));
            let mut tally = Tally::new(&DOUBLE_CHECKS, &["simplicial"]);
            for (i, v) in verdicts.iter().enumerate() {
                let label = if i < found { format!("double #{i} ({} squares)", ds[i].len()) } else { "input".into() };
                let results = match v {
                    Some(v) => [v.hopfoid && v.core_valid, v.round_trip, v.orbits, v.lemmas, v.core_product, v.simplicial],
                    None => [false; 6],
                };
                tally.record(&label, &results);
            }
            let subject = format!("{} doubles with at most {sq} squares and sides of at most {max_arrows} arrows", ds.len());
            tally.finish(subject, filter)?
        }
        None => {
            let depth = bounds.depth.unwrap_or(3);
            let mut all = harness::groupoid_round_trips(exec, max_arrows);
            let found = all.len();
            if let Some(text) = extra {
                let g = groupoid_input(text)?;
                let ok = grpd::round_trip(&g).unwrap_or(false);
                all.push((g, ok));
            }
            let extra_checks = exec.map(&all, |(g, _)| {
                let valid = g.is_valid();
                let simplicial = valid
                    && check_simplicial(&nerve(g, depth), depth).is_ok_and(|r| r.passed());
                (valid, simplicial)
            });
            let mut tally = Tally::new(&GROUPOID_CHECKS, &["nerve"]);
            for (i, ((g, trip), (valid, simplicial))) in all.iter().zip(extra_checks).enumerate() {
                let label = if i < found { format!("groupoid #{i} ({} arrows)", g.len()) } else { "input".into() };
                tally.record(&label, &[*trip && valid, valid, simplicial]);
            }
            tally.finish(format!("{} groupoids with at most {max_arrows} arrows", all.len()), filter)?
        }
    };
    Ok(Outcome::report(report))
}
