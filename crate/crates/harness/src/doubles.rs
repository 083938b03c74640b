//! Exhaustive suites over small groupoids and small double groupoids.

use dbl::{
    check_core_product, check_hopfoid, check_induced_lemmas, doubles_over, hopfoid_simplicial, merge_isomorphic,
    orbits_agree, round_trip, structure_pairs, to_hopfoid, FinDoubleGroupoid,
};
use grpd::{all_groupoids, FinGroupoid};
use relcat::check_simplicial;

use crate::exec::Exec;

/// Every groupoid with at most `max_arrows` arrows, one per isomorphism
/// class, paired with whether it survives the trip through star monoids.
pub fn groupoid_round_trips(exec: Exec, max_arrows: usize) -> Vec<(FinGroupoid, bool)> {
    let all = all_groupoids(max_arrows);
    let ok = exec.map(&all, |g| grpd::round_trip(g).unwrap_or(false));
    all.into_iter().zip(ok).collect()
}

/// The same list as `dbl::all_doubles`, with the searches over structure
/// pairs run as independent jobs.
pub fn enumerate_doubles(exec: Exec, max_squares: usize, max_side: usize) -> Vec<FinDoubleGroupoid> {
    let pairs = structure_pairs(max_squares, max_side);
    let found = exec.map(&pairs, |(a, b)| doubles_over(a, b));
    merge_isomorphic(found.into_iter().flatten().collect())
}

/// Outcome of the structure checks on one double.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DoubleVerdict {
    pub squares: usize,
    pub core_valid: bool,
    pub hopfoid: bool,
    pub round_trip: bool,
    pub orbits: bool,
    pub lemmas: bool,
    pub core_product: bool,
    /// Simplicial identities of the hopfoid object up to `depth`.
    pub simplicial: bool,
}

impl DoubleVerdict {
    /// Everything except the simplicial identities, which are not expected
    /// to hold for every double.
    pub fn structural(&self) -> bool {
        self.core_valid && self.hopfoid && self.round_trip && self.orbits && self.lemmas && self.core_product
    }
}

pub fn check_double(d: &FinDoubleGroupoid, depth: usize) -> DoubleVerdict {
    let h = to_hopfoid(d);
    DoubleVerdict {
        squares: d.len(),
        core_valid: dbl::core(d).is_ok_and(|c| c.groupoid.is_valid()),
        hopfoid: h.as_ref().is_ok_and(|h| check_hopfoid(h).passed()),
        round_trip: round_trip(d).unwrap_or(false),
        orbits: orbits_agree(d).unwrap_or(false),
        lemmas: check_induced_lemmas(d).is_ok_and(|r| r.passed()),
        core_product: check_core_product(d).is_ok_and(|r| r.passed()),
        simplicial: h
            .as_ref()
            .ok()
            .and_then(|h| hopfoid_simplicial(h, depth).ok())
            .and_then(|x| check_simplicial(&x, depth).ok())
            .is_some_and(|r| r.passed()),
    }
}

pub fn check_doubles(exec: Exec, doubles: &[FinDoubleGroupoid], depth: usize) -> Vec<DoubleVerdict> {
    exec.map(doubles, |d| check_double(d, depth))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_enumeration_matches_the_sequential_list() {
        let seq = enumerate_doubles(Exec::Sequential, 4, 4);
        let par = enumerate_doubles(Exec::Parallel, 4, 4);
        assert_eq!(seq.len(), par.len());
        assert_eq!(seq.len(), dbl::all_doubles(4, 4).len());
        for (a, b) in seq.iter().zip(&par) {
            assert!(dbl::double_isomorphism(a, b).is_some());
        }
    }

    #[test]
    fn small_groupoids_round_trip() {
        let all = groupoid_round_trips(Exec::Parallel, 4);
        assert!(all.iter().all(|(_, ok)| *ok));
        assert!(all.len() > 5);
    }

    #[test]
    fn small_doubles_pass_structural_checks() {
        let ds = enumerate_doubles(Exec::default(), 4, 4);
        assert!(check_doubles(Exec::default(), &ds, 2).iter().all(DoubleVerdict::structural));
    }
}
