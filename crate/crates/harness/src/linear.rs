//! Randomized suite for the linear symplectic kernel.
//!
//! Case `i` draws from its own generator seeded by `(seed, i)`, so results do
//! not depend on how cases are scheduled.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use relcat::check_hopf;
use symplin::random::{random_canrel, random_coisotropic, random_matrix, random_space};
use symplin::{cotangent_lift, factor, induced_iso, reduce, vector_hopf, ww_compose, ww_two_term, CorrChain, SympSpace};

use crate::exec::Exec;

/// The properties exercised, one per case in rotation.
pub const PROPERTIES: [&str; 8] = [
    "composite-lagrangian",
    "domain-image-coisotropic",
    "factor-recomposes",
    "induced-iso-preserves-forms",
    "lift-functorial",
    "lift-reduction-iff-onto",
    "two-term-recomposes",
    "reduction-law",
];

/// Largest half-dimension of any ambient space drawn.
const MAX_HALF: usize = 4;

fn case_rng(seed: u64, i: usize) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(i as u64);
    r
}

/// Two spaces whose sum has dimension at most `2·MAX_HALF`.
fn two_spaces(r: &mut ChaCha8Rng) -> (SympSpace, SympSpace) {
    let a = r.random_range(0..=MAX_HALF);
    let b = r.random_range(0..=MAX_HALF - a);
    (random_space(r, a), random_space(r, b))
}

fn check(cond: bool, what: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn run_case(kind: usize, r: &mut ChaCha8Rng) -> Result<(), String> {
    let err = |e: symplin::LinError| e.to_string();
    match kind {
        0 => {
            let a = r.random_range(0..=MAX_HALF);
            let b = r.random_range(0..=MAX_HALF - a);
            let c = r.random_range(0..=MAX_HALF - a - b);
            let (x, y, z) = (random_space(r, a), random_space(r, b), random_space(r, c));
            let l = random_canrel(r, &x, &y);
            let m = random_canrel(r, &y, &z);
            let (comp, _) = l.then(&m).map_err(err)?;
            check(comp.graph().is_lagrangian() && comp.graph().orth() == *comp.graph(), "composite not lagrangian")
        }
        1 => {
            let (x, y) = two_spaces(r);
            let (d, i) = random_canrel(r, &x, &y).dom_im();
            check(d.is_coisotropic() && i.is_coisotropic(), "domain or image not coisotropic")
        }
        2 => {
            let (x, y) = two_spaces(r);
            let l = random_canrel(r, &x, &y);
            check(factor(&l).map_err(err)?.recompose().map_err(err)? == l, "factorization does not recompose")
        }
        3 => {
            let (x, y) = two_spaces(r);
            let t = induced_iso(&random_canrel(r, &x, &y)).map_err(err)?;
            let pulled = t.map.transpose().mul(t.image.quotient.form()).mul(&t.map);
            check(&pulled == t.domain.quotient.form(), "induced map does not preserve forms")
        }
        4 => {
            let (n, m, k) = (r.random_range(0..=3), r.random_range(0..=3), r.random_range(0..=3));
            let f = random_matrix(r, m, n);
            let g = random_matrix(r, k, m);
            let (c, t) = cotangent_lift(&f).then(&cotangent_lift(&g)).map_err(err)?;
            check(c == cotangent_lift(&g.mul(&f)) && t.strongly_transversal, "lift is not functorial")
        }
        5 => {
            let (n, m) = (r.random_range(0..=4), r.random_range(0..=4));
            let inner = r.random_range(0..=m);
            let f = random_matrix(r, m, inner).mul(&random_matrix(r, inner, n));
            check(cotangent_lift(&f).is_reduction() == (f.rank() == m), "reduction does not match surjectivity")
        }
        6 => {
            let len = r.random_range(1..=4);
            let spaces: Vec<SympSpace> = (0..=len).map(|_| {
                let h = r.random_range(0..=1);
                random_space(r, h)
            }).collect();
            let legs = spaces.windows(2).map(|w| random_canrel(r, &w[0], &w[1])).collect();
            let chain = CorrChain::new(legs).map_err(err)?;
            let lambda = ww_compose(&chain).map_err(err)?.rel;
            let tt = ww_two_term(&chain).map_err(err)?;
            let back = tt.coreduction.then(&tt.reduction).map_err(err)?.0;
            check(back == lambda && tt.coreduction.is_coreduction() && tt.reduction.is_reduction(), "two-term form")
        }
        7 => {
            let h = r.random_range(0..=MAX_HALF);
            let v = random_space(r, h);
            let c = random_coisotropic(r, &v);
            let red = reduce(&c).map_err(err)?;
            let dims = red.quotient.dim() + v.dim() == 2 * c.dim();
            check(dims && red.rel.is_reduction() && red.rel.dom_im().0 == c, "reduction law")
        }
        _ => unreachable!("property index"),
    }
}

/// Per-property tallies and the failures, as `(case, message)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearSummary {
    pub tallies: BTreeMap<&'static str, (usize, usize)>,
    pub failures: Vec<(usize, String)>,
}

impl LinearSummary {
    pub fn cases(&self) -> usize {
        self.tallies.values().map(|t| t.1).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn linear_suite(exec: Exec, seed: u64, cases: usize) -> LinearSummary {
    let results = exec.map_range(cases, |i| {
        let kind = i % PROPERTIES.len();
        // a panic means a constructed relation failed its lagrangian check
        let out = std::panic::catch_unwind(|| run_case(kind, &mut case_rng(seed, i)));
        (kind, out.unwrap_or_else(|_| Err("construction invariant violated".into())))
    });
    let mut s = LinearSummary::default();
    for (i, (kind, out)) in results.into_iter().enumerate() {
        let t = s.tallies.entry(PROPERTIES[kind]).or_default();
        t.1 += 1;
        match out {
            Ok(()) => t.0 += 1,
            Err(e) => s.failures.push((i, format!("{}: {e}", PROPERTIES[kind]))),
        }
    }
    s
}

/// Whether the lifted vector group `T*Qⁿ` passes every Hopf diagram.
pub fn vector_hopf_passes(n: usize) -> bool {
    let h = vector_hopf(n);
    check_hopf(&h.monoid, &h.comonoid, &h.antipode).is_ok_and(|r| r.passed())
}
