//! Relations between finite sets: the morphisms of the category.

use std::sync::Arc;

use thiserror::Error;

use crate::set::FinSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelError {
    #[error("endpoint mismatch: {left} does not match {right}")]
    EndpointMismatch { left: String, right: String },
    #[error("index {index} out of range for {set} (size {size})")]
    OutOfRange { set: String, index: usize, size: usize },
    #[error("element {atom} is not in {set}")]
    UnknownAtom { set: String, atom: String },
    #[error("relation on {set} is not the graph of a bijection")]
    NotBijection { set: String },
}

/// A relation `src → dst`, stored as sorted, deduplicated index pairs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rel {
    src: Arc<FinSet>,
    dst: Arc<FinSet>,
    pairs: Vec<(usize, usize)>,
}

/// Elementary properties of a relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RelFlags {
    pub surjective: bool,
    pub injective: bool,
    pub cosurjective: bool,
    pub coinjective: bool,
    pub surmersion: bool,
    pub cosurmersion: bool,
    pub sharp: bool,
}

/// A pair `(m, q)` of a composite with more than one middle witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blunt {
    pub input: usize,
    pub output: usize,
    pub witnesses: Vec<usize>,
}

impl Rel {
    /// Builds a relation, checking every index against its endpoint.
    pub fn new(
        src: Arc<FinSet>,
        dst: Arc<FinSet>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, RelError> {
        let mut ps: Vec<(usize, usize)> = pairs.into_iter().collect();
        for &(a, b) in &ps {
            if a >= src.len() {
                return Err(RelError::OutOfRange { set: src.id().into(), index: a, size: src.len() });
            }
            if b >= dst.len() {
                return Err(RelError::OutOfRange { set: dst.id().into(), index: b, size: dst.len() });
            }
        }
        ps.sort_unstable();
        ps.dedup();
        Ok(Self { src, dst, pairs: ps })
    }

    /// Unchecked constructor for indices known to be in range.
    pub(crate) fn raw(src: Arc<FinSet>, dst: Arc<FinSet>, mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        pairs.dedup();
        Self { src, dst, pairs }
    }

    /// Relation given by atom names of two atomic sets.
    pub fn from_names<'a>(
        src: Arc<FinSet>,
        dst: Arc<FinSet>,
        pairs: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self, RelError> {
        let look = |set: &FinSet, a: &str| {
            set.index_of(a)
                .ok_or_else(|| RelError::UnknownAtom { set: set.id().into(), atom: a.into() })
        };
        let mut ps = Vec::new();
        for (a, b) in pairs {
            ps.push((look(&src, a)?, look(&dst, b)?));
        }
        Ok(Self::raw(src, dst, ps))
    }

    /// Graph of a partial function.
    pub fn graph(src: Arc<FinSet>, dst: Arc<FinSet>, f: impl Fn(usize) -> Option<usize>) -> Self {
        let n = dst.len();
        let ps = (0..src.len())
            .filter_map(|a| f(a).map(|b| (a, b)))
            .inspect(|&(_, b)| assert!(b < n, "graph value out of range"))
            .collect();
        Self::raw(src, dst, ps)
    }

    /// Relation from a multi-valued function.
    pub fn multi(src: Arc<FinSet>, dst: Arc<FinSet>, f: impl Fn(usize) -> Vec<usize>) -> Self {
        let n = dst.len();
        let mut ps = Vec::new();
        for a in 0..src.len() {
            for b in f(a) {
                assert!(b < n, "relation value out of range");
                ps.push((a, b));
            }
        }
        Self::raw(src, dst, ps)
    }

    pub fn identity(set: &Arc<FinSet>) -> Self {
        Self { src: set.clone(), dst: set.clone(), pairs: (0..set.len()).map(|i| (i, i)).collect() }
    }

    pub fn empty(src: Arc<FinSet>, dst: Arc<FinSet>) -> Self {
        Self { src, dst, pairs: Vec::new() }
    }

    pub fn full(src: Arc<FinSet>, dst: Arc<FinSet>) -> Self {
        let m = dst.len();
        let pairs = (0..src.len()).flat_map(|a| (0..m).map(move |b| (a, b))).collect();
        Self { src, dst, pairs }
    }

    /// The subset `sub` of `set` seen as a relation `pt → set`.
    pub fn point_to(set: &Arc<FinSet>, sub: impl IntoIterator<Item = usize>) -> Self {
        Self::raw(FinSet::pt(), set.clone(), sub.into_iter().map(|b| (0, b)).collect())
    }

    /// The subset `sub` of `set` seen as a relation `set → pt`.
    pub fn to_point(set: &Arc<FinSet>, sub: impl IntoIterator<Item = usize>) -> Self {
        Self::raw(set.clone(), FinSet::pt(), sub.into_iter().map(|a| (a, 0)).collect())
    }

    /// The diagonal `A → A×A`.
    pub fn diagonal(set: &Arc<FinSet>) -> Self {
        let n = set.len();
        Self::graph(set.clone(), FinSet::product(set, set), |a| Some(a * n + a))
    }

    /// The swap `A×B → B×A`.
    pub fn swap(a: &Arc<FinSet>, b: &Arc<FinSet>) -> Self {
        let (n, m) = (a.len(), b.len());
        Self::graph(FinSet::product(a, b), FinSet::product(b, a), |i| Some((i % m) * n + i / m))
    }

    pub fn src(&self) -> &Arc<FinSet> {
        &self.src
    }

    pub fn dst(&self) -> &Arc<FinSet> {
        &self.dst
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.pairs.binary_search(&(a, b)).is_ok()
    }

    /// Everything related to `a`, in increasing order.
    pub fn image_of(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        let lo = self.pairs.partition_point(|&(x, _)| x < a);
        self.pairs[lo..].iter().take_while(move |&&(x, _)| x == a).map(|&(_, b)| b)
    }

    /// The unique value at `a`, if there is exactly one.
    pub fn value_at(&self, a: usize) -> Option<usize> {
        let mut it = self.image_of(a);
        let v = it.next()?;
        it.next().is_none().then_some(v)
    }

    /// Membership mask of the domain (elements of `src` related to something).
    pub fn domain(&self) -> Vec<bool> {
        let mut d = vec![false; self.src.len()];
        for &(a, _) in &self.pairs {
            d[a] = true;
        }
        d
    }

    /// Membership mask of the image.
    pub fn image(&self) -> Vec<bool> {
        let mut d = vec![false; self.dst.len()];
        for &(_, b) in &self.pairs {
            d[b] = true;
        }
        d
    }

    fn check_meet(&self, other: &Rel) -> Result<(), RelError> {
        if FinSet::same(&self.dst, &other.src) {
            Ok(())
        } else {
            Err(RelError::EndpointMismatch {
                left: format!("{:?}", self.dst),
                right: format!("{:?}", other.src),
            })
        }
    }

    /// `self` followed by `other` (so `other ∘ self` in the usual notation).
    pub fn compose(&self, other: &Rel) -> Result<Rel, RelError> {
        self.check_meet(other)?;
        let adj = other.adjacency();
        let mut out = Vec::new();
        for &(a, n) in &self.pairs {
            for &q in &adj[n] {
                out.push((a, q));
            }
        }
        Ok(Rel::raw(self.src.clone(), other.dst.clone(), out))
    }

    /// Like [`Rel::compose`], also reporting the first output pair with
    /// more than one middle witness.
    pub fn compose_sharp(&self, other: &Rel) -> Result<(Rel, Option<Blunt>), RelError> {
        self.check_meet(other)?;
        let adj = other.adjacency();
        let mut triples = Vec::new();
        for &(a, n) in &self.pairs {
            for &q in &adj[n] {
                triples.push((a, q, n));
            }
        }
        triples.sort_unstable();
        let mut blunt = None;
        let mut i = 0;
        while i < triples.len() {
            let mut j = i + 1;
            while j < triples.len() && triples[j].0 == triples[i].0 && triples[j].1 == triples[i].1 {
                j += 1;
            }
            if j - i > 1 && blunt.is_none() {
                blunt = Some(Blunt {
                    input: triples[i].0,
                    output: triples[i].1,
                    witnesses: triples[i..j].iter().map(|t| t.2).collect(),
                });
            }
            i = j;
        }
        let pairs = triples.iter().map(|&(a, q, _)| (a, q)).collect();
        Ok((Rel::raw(self.src.clone(), other.dst.clone(), pairs), blunt))
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.src.len()];
        for &(a, b) in &self.pairs {
            adj[a].push(b);
        }
        adj
    }

    pub fn transpose(&self) -> Rel {
        Rel::raw(self.dst.clone(), self.src.clone(), self.pairs.iter().map(|&(a, b)| (b, a)).collect())
    }

    /// Cartesian product of relations.
    pub fn cross(&self, other: &Rel) -> Rel {
        let (n2, m2) = (other.src.len(), other.dst.len());
        let mut ps = Vec::with_capacity(self.len() * other.len());
        for &(a1, b1) in &self.pairs {
            for &(a2, b2) in &other.pairs {
                ps.push((a1 * n2 + a2, b1 * m2 + b2));
            }
        }
        Rel::raw(FinSet::product(&self.src, &other.src), FinSet::product(&self.dst, &other.dst), ps)
    }

    /// Product of a list of relations.
    pub fn cross_all(rels: &[&Rel]) -> Rel {
        let mut it = rels.iter();
        let first = match it.next() {
            Some(r) => (*r).clone(),
            None => return Rel::identity(&FinSet::pt()),
        };
        it.fold(first, |acc, r| acc.cross(r))
    }

    /// Relation equality: same endpoints and same pairs.
    pub fn same(&self, other: &Rel) -> bool {
        FinSet::same(&self.src, &other.src) && FinSet::same(&self.dst, &other.dst) && self.pairs == other.pairs
    }

    /// First pair in exactly one of the two relations, tagged with the side
    /// it belongs to. Endpoint mismatch yields a witness naming both sets.
    pub fn difference(&self, other: &Rel) -> Option<Vec<String>> {
        if !FinSet::same(&self.src, &other.src) || !FinSet::same(&self.dst, &other.dst) {
            return Some(vec![
                "endpoints".into(),
                format!("{:?}->{:?}", self.src, self.dst),
                format!("{:?}->{:?}", other.src, other.dst),
            ]);
        }
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.pairs, &other.pairs);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return None,
                (Some(p), Some(q)) if p == q => {
                    i += 1;
                    j += 1;
                }
                (Some(p), Some(q)) if p < q => return Some(self.tag(*p, "lhs")),
                (Some(p), None) => return Some(self.tag(*p, "lhs")),
                (_, Some(q)) => return Some(self.tag(*q, "rhs")),
            }
        }
    }

    fn tag(&self, (a, b): (usize, usize), side: &str) -> Vec<String> {
        vec![self.src.name(a), self.dst.name(b), format!("only-{side}")]
    }

    /// Single-valued and everywhere defined.
    pub fn is_map(&self) -> bool {
        let f = self.classify_basic();
        f.coinjective && f.cosurjective
    }

    pub fn is_bijection(&self) -> bool {
        let f = self.classify_basic();
        f.coinjective && f.cosurjective && f.injective && f.surjective
    }

    /// The function underlying a map-like relation.
    pub fn as_map(&self) -> Option<Vec<usize>> {
        if !self.is_map() {
            return None;
        }
        Some(self.pairs.iter().map(|&(_, b)| b).collect())
    }

    fn classify_basic(&self) -> RelFlags {
        let mut out_deg = vec![0usize; self.src.len()];
        let mut in_deg = vec![0usize; self.dst.len()];
        for &(a, b) in &self.pairs {
            out_deg[a] += 1;
            in_deg[b] += 1;
        }
        RelFlags {
            surjective: in_deg.iter().all(|&d| d >= 1),
            injective: in_deg.iter().all(|&d| d <= 1),
            cosurjective: out_deg.iter().all(|&d| d >= 1),
            coinjective: out_deg.iter().all(|&d| d <= 1),
            ..RelFlags::default()
        }
    }

    pub fn classify(&self) -> RelFlags {
        let mut f = self.classify_basic();
        let t = self.transpose();
        let back = t.compose(self).expect("transpose meets");
        f.surmersion = back.same(&Rel::identity(&self.dst));
        let fwd = self.compose(&t).expect("transpose meets");
        f.cosurmersion = fwd.same(&Rel::identity(&self.src));
        f.sharp = self.compose_sharp(&t).expect("transpose meets").1.is_none();
        f
    }
}

impl std::fmt::Debug for Rel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}->{:?} {{", self.src, self.dst)?;
        for (k, &(a, b)) in self.pairs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({},{})", self.src.name(a), self.dst.name(b))?;
        }
        write!(f, "}}")
    }
}
