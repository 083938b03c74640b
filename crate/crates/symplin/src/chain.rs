//! Chains of canonical relations and their two-term normal form.

use crate::canrel::{LinCanRel, Transversality};
use crate::error::LinError;
use crate::matrix::Matrix;
use crate::space::SympSpace;

/// A nonempty composable sequence of relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrChain {
    legs: Vec<LinCanRel>,
}

impl CorrChain {
    pub fn new(legs: Vec<LinCanRel>) -> Result<Self, LinError> {
        if legs.is_empty() {
            return Err(LinError::Shape("empty chain".into()));
        }
        for (i, w) in legs.windows(2).enumerate() {
            if w[0].dst() != w[1].src() {
                return Err(LinError::Mismatch(format!("legs {i} and {}", i + 1)));
            }
        }
        Ok(CorrChain { legs })
    }

    pub fn legs(&self) -> &[LinCanRel] {
        &self.legs
    }

    pub fn src(&self) -> &SympSpace {
        self.legs[0].src()
    }

    pub fn dst(&self) -> &SympSpace {
        self.legs[self.legs.len() - 1].dst()
    }
}

/// The composite of a chain with the transversality at each junction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collapsed {
    pub rel: LinCanRel,
    pub junctions: Vec<Transversality>,
}

pub fn ww_compose(chain: &CorrChain) -> Result<Collapsed, LinError> {
    let (first, rest) = chain.legs.split_first().expect("chains are nonempty");
    let mut rel = first.clone();
    let mut junctions = Vec::with_capacity(rest.len());
    for leg in rest {
        let (next, t) = rel.then(leg)?;
        rel = next;
        junctions.push(t);
    }
    Ok(Collapsed { rel, junctions })
}

/// A coreduction into `X ⊕ X̄ ⊕ Z` followed by a reduction onto `Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTerm {
    pub coreduction: LinCanRel,
    pub reduction: LinCanRel,
}

/// For the composite `Λ: X → Z`, the coreduction carries the diagonal of `X`
/// beside the graph of `Λ`, and the reduction keeps `Z` where the two copies
/// of `X` agree.
pub fn ww_two_term(chain: &CorrChain) -> Result<TwoTerm, LinError> {
    let lambda = ww_compose(chain)?.rel;
    let (x, z) = (lambda.src(), lambda.dst());
    let (n, m) = (x.dim(), z.dim());
    let middle = x.sum(&x.dual()).sum(z);
    let diagonal = Matrix::identity(n).hstack(&Matrix::identity(n));
    let coreduction = LinCanRel::assemble(x, &middle, &diagonal.block_diag(lambda.graph().basis()));
    let z_diagonal = Matrix::identity(m).hstack(&Matrix::identity(m));
    let reduction = LinCanRel::assemble(&middle, z, &diagonal.block_diag(&z_diagonal));
    Ok(TwoTerm { coreduction, reduction })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cotangent::{cotangent_lift, cotangent_space};
    use crate::reduce::reduce;
    use crate::space::Subspace;

    #[test]
    fn chains_check_endpoints() {
        let v = cotangent_space(1);
        assert!(CorrChain::new(vec![]).is_err());
        let bad = vec![LinCanRel::identity(&v), LinCanRel::identity(&cotangent_space(2))];
        assert!(matches!(CorrChain::new(bad), Err(LinError::Mismatch(_))));
    }

    #[test]
    fn single_leg_collapses_to_itself() {
        let l = cotangent_lift(&Matrix::from_ints(2, &[&[1, 3]]));
        let c = ww_compose(&CorrChain::new(vec![l.clone()]).unwrap()).unwrap();
        assert_eq!(c.rel, l);
        assert!(c.junctions.is_empty());
    }

    #[test]
    fn reduction_there_and_back() {
        let v = cotangent_space(2);
        let c = Subspace::span(&v, &Matrix::from_ints(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]])).unwrap();
        let red = reduce(&c).unwrap().rel;
        let chain = CorrChain::new(vec![red.clone(), red.transpose(), red.clone()]).unwrap();
        assert_eq!(ww_compose(&chain).unwrap().rel, red);
        let tt = ww_two_term(&CorrChain::new(vec![red.clone()]).unwrap()).unwrap();
        assert_eq!(tt.coreduction.then(&tt.reduction).unwrap().0, red);
    }

    #[test]
    fn two_term_form_of_the_identity() {
        let v = cotangent_space(1);
        let tt = ww_two_term(&CorrChain::new(vec![LinCanRel::identity(&v)]).unwrap()).unwrap();
        assert!(tt.coreduction.is_coreduction());
        assert!(tt.reduction.is_reduction());
        assert_eq!(tt.coreduction.then(&tt.reduction).unwrap().0, LinCanRel::identity(&v));
    }

    #[test]
    fn chain_of_lifts_is_the_lift_of_the_product() {
        let f = Matrix::from_ints(2, &[&[1, 2], &[0, 1], &[1, 1]]);
        let g = Matrix::from_ints(3, &[&[1, 0, -1]]);
        let h = Matrix::from_ints(1, &[&[3], &[1]]);
        let chain = CorrChain::new(vec![cotangent_lift(&f), cotangent_lift(&g), cotangent_lift(&h)]).unwrap();
        let c = ww_compose(&chain).unwrap();
        assert_eq!(c.rel, cotangent_lift(&h.mul(&g).mul(&f)));
        assert!(c.junctions.iter().all(|t| t.strongly_transversal));
    }
}
