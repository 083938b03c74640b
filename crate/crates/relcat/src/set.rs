//! Finite sets with ordered atoms.
//!
//! Products are flattened and the singleton `pt` is a strict unit, so the
//! cartesian monoidal structure is strict: `(A×B)×C` and `A×(B×C)` are the
//! same value, and `A×pt` is `A`.

use std::fmt;
use std::sync::Arc;

/// Id of the distinguished singleton.
pub const PT_ID: &str = "pt";
/// Name of its only element.
pub const PT_ATOM: &str = "*";

#[derive(Clone, PartialEq, Eq, Hash)]
enum Shape {
    Atoms(Vec<String>),
    /// At least two factors, none of them products or `pt`.
    Product(Vec<Arc<FinSet>>),
}

/// A finite set. Element order is canonical and defines indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinSet {
    id: String,
    shape: Shape,
    len: usize,
}

impl FinSet {
    /// Builds an atomic set. Returns the first repeated atom on failure.
    pub fn new(id: impl Into<String>, elements: Vec<String>) -> Result<Arc<Self>, String> {
        let mut seen = std::collections::HashSet::new();
        for e in &elements {
            if !seen.insert(e.as_str()) {
                return Err(e.clone());
            }
        }
        let len = elements.len();
        Ok(Arc::new(Self { id: id.into(), shape: Shape::Atoms(elements), len }))
    }

    /// Atomic set from anything displayable; panics on duplicates.
    pub fn of<T: ToString>(id: &str, elements: impl IntoIterator<Item = T>) -> Arc<Self> {
        let els: Vec<String> = elements.into_iter().map(|e| e.to_string()).collect();
        Self::new(id, els).unwrap_or_else(|dup| panic!("duplicate atom {dup} in {id}"))
    }

    /// The singleton.
    pub fn pt() -> Arc<Self> {
        Arc::new(Self { id: PT_ID.into(), shape: Shape::Atoms(vec![PT_ATOM.into()]), len: 1 })
    }

    pub fn empty(id: &str) -> Arc<Self> {
        Self::of::<&str>(id, [])
    }

    pub fn is_pt(&self) -> bool {
        self.id == PT_ID && self.len == 1 && matches!(&self.shape, Shape::Atoms(a) if a[0] == PT_ATOM)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Flattened factor list; an atomic set is its own single factor.
    pub fn factors(self: &Arc<Self>) -> Vec<Arc<FinSet>> {
        match &self.shape {
            Shape::Atoms(_) if self.is_pt() => Vec::new(),
            Shape::Atoms(_) => vec![self.clone()],
            Shape::Product(fs) => fs.clone(),
        }
    }

    /// Cartesian product of two sets.
    pub fn product(a: &Arc<Self>, b: &Arc<Self>) -> Arc<Self> {
        Self::product_of(&[a.clone(), b.clone()])
    }

    /// Cartesian product of any number of sets, flattened, with `pt` dropped.
    pub fn product_of(sets: &[Arc<Self>]) -> Arc<Self> {
        let fs: Vec<Arc<FinSet>> = sets.iter().flat_map(|s| s.factors()).collect();
        match fs.len() {
            0 => Self::pt(),
            1 => fs[0].clone(),
            _ => {
                let id = fs.iter().map(|f| f.id.as_str()).collect::<Vec<_>>().join("×");
                let len = fs.iter().map(|f| f.len).product();
                Arc::new(Self { id, shape: Shape::Product(fs), len })
            }
        }
    }

    /// `n`-fold power; the zeroth power is `pt`.
    pub fn power(a: &Arc<Self>, n: usize) -> Arc<Self> {
        Self::product_of(&vec![a.clone(); n])
    }

    /// Name of the element at `i`. Product elements join atom names with `;`.
    pub fn name(&self, i: usize) -> String {
        match &self.shape {
            Shape::Atoms(a) => a[i].clone(),
            Shape::Product(fs) => {
                let mut parts = vec![String::new(); fs.len()];
                let mut rest = i;
                for (k, f) in fs.iter().enumerate().rev() {
                    parts[k] = f.name(rest % f.len);
                    rest /= f.len;
                }
                parts.join(";")
            }
        }
    }

    /// Atom list of an atomic set; `None` for products.
    pub fn atoms(&self) -> Option<&[String]> {
        match &self.shape {
            Shape::Atoms(a) => Some(a),
            Shape::Product(_) => None,
        }
    }

    /// Index of an atom in an atomic set.
    pub fn index_of(&self, atom: &str) -> Option<usize> {
        self.atoms()?.iter().position(|a| a == atom)
    }

    pub fn names(&self) -> Vec<String> {
        (0..self.len).map(|i| self.name(i)).collect()
    }

    /// Same shape and atoms; cheap when both point to one allocation.
    pub fn same(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }
}

/// Row-major index of a tuple in a product of sets with the given sizes.
pub fn tuple_index(sizes: &[usize], parts: &[usize]) -> usize {
    sizes.iter().zip(parts).fold(0, |acc, (n, p)| acc * n + p)
}

/// Inverse of [`tuple_index`].
pub fn tuple_parts(sizes: &[usize], mut i: usize) -> Vec<usize> {
    let mut out = vec![0; sizes.len()];
    for k in (0..sizes.len()).rev() {
        out[k] = i % sizes[k];
        i /= sizes[k];
    }
    out
}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.id, self.len)
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_are_strictly_associative() {
        let a = FinSet::of("A", ["a0", "a1"]);
        let b = FinSet::of("B", ["b"]);
        let c = FinSet::of("C", ["c0", "c1", "c2"]);
        let left = FinSet::product(&FinSet::product(&a, &b), &c);
        let right = FinSet::product(&a, &FinSet::product(&b, &c));
        assert_eq!(left, right);
        assert_eq!(left.len(), 6);
        assert_eq!(left.name(5), "a1;b;c2");
    }

    #[test]
    fn pt_is_a_strict_unit() {
        let a = FinSet::of("A", ["x", "y"]);
        assert_eq!(FinSet::product(&a, &FinSet::pt()), a);
        assert_eq!(FinSet::product(&FinSet::pt(), &a), a);
        assert!(FinSet::power(&a, 0).is_pt());
    }

    #[test]
    fn duplicates_rejected() {
        assert_eq!(FinSet::new("A", vec!["x".into(), "x".into()]).unwrap_err(), "x");
    }

    #[test]
    fn tuple_index_round_trip() {
        let sizes = [3, 1, 4];
        for i in 0..12 {
            assert_eq!(tuple_index(&sizes, &tuple_parts(&sizes, i)), i);
        }
    }
}
