//! Aggregated analysis of one algebra: flags, unit, nilradical, generic
//! invariants and the dimension-two classification.

use crate::algebra::{AlgElement, Algebra, AlgebraFlags};
use crate::error::Result;

/// Sampled generic invariants of a unital power-associative algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenericInvariants {
    /// Maximal dimension of the subalgebra generated by one element.
    pub delta: usize,
    /// Reduced dimension of that generic one-generated subalgebra.
    pub k: usize,
}

/// Isomorphism type of a two-dimensional unital commutative algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dim2Class {
    /// Nilpotent type: a square-zero element exists.
    NilpotentType,
    /// Split type: a nontrivial idempotent exists (over the algebraic closure).
    SplitType,
}

impl Dim2Class {
    pub fn as_str(&self) -> &'static str {
        match self {
            Dim2Class::NilpotentType => "nilpotent_type",
            Dim2Class::SplitType => "split_type",
        }
    }
}

/// Everything `analyze` can determine about an algebra. Fields that require
/// extra structure (abelian, unital power-associative, dimension two) are
/// `None` when the structure is absent.
#[derive(Debug, Clone)]
pub struct AlgebraProfile {
    pub dim: usize,
    pub flags: AlgebraFlags,
    pub unit: Option<AlgElement>,
    pub nilradical_basis: Option<Vec<AlgElement>>,
    pub reduced_dim: Option<usize>,
    pub generic: Option<GenericInvariants>,
    pub dim2_class: Option<Dim2Class>,
    pub seed: u64,
    pub samples: usize,
}

/// Run the full analysis with the given sampling parameters.
pub fn analyze(algebra: &Algebra, seed: u64, samples: usize) -> Result<AlgebraProfile> {
    let flags = algebra.predicates();
    let unit = algebra.find_unit();
    let (nilradical_basis, reduced_dim) = if flags.abelian {
        let (basis, m) = algebra.nilradical_and_m()?;
        (Some(basis), Some(m))
    } else {
        (None, None)
    };
    let generic = if flags.power_associative && flags.unitary {
        Some(algebra.generic_invariants(seed, samples)?)
    } else {
        None
    };
    let dim2_class = if algebra.dim() == 2 && flags.unitary && flags.commutative {
        Some(algebra.classify_dim2()?)
    } else {
        None
    };
    Ok(AlgebraProfile {
        dim: algebra.dim(),
        flags,
        unit,
        nilradical_basis,
        reduced_dim,
        generic,
        dim2_class,
        seed,
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{matrix_algebra, quotient_algebra, split_algebra};
    use crate::exactnum::UniPoly;

    #[test]
    fn profile_of_matrix_algebra() {
        let p = analyze(&matrix_algebra(2).unwrap(), 0, 16).unwrap();
        assert_eq!(p.dim, 4);
        assert!(p.flags.unitary && !p.flags.commutative);
        assert!(p.unit.is_some());
        assert!(p.nilradical_basis.is_none());
        let gi = p.generic.unwrap();
        assert_eq!((gi.delta, gi.k), (2, 2));
        assert!(p.dim2_class.is_none());
    }

    #[test]
    fn profile_of_truncated_polynomials() {
        let v = quotient_algebra(&UniPoly::from_i64_coeffs(&[0, 0, 1]), 't').unwrap();
        let p = analyze(&v, 7, 16).unwrap();
        assert!(p.flags.abelian);
        assert_eq!(p.reduced_dim, Some(1));
        assert_eq!(p.nilradical_basis.as_ref().unwrap().len(), 1);
        let gi = p.generic.unwrap();
        assert_eq!((gi.delta, gi.k), (2, 1));
        assert_eq!(p.dim2_class, Some(Dim2Class::NilpotentType));
        assert_eq!(p.seed, 7);
    }

    #[test]
    fn invariant_chain_k_delta_dim() {
        for v in [
            split_algebra(3).unwrap(),
            quotient_algebra(&UniPoly::from_i64_coeffs(&[0, 0, 0, 1]), 't').unwrap(),
            matrix_algebra(2).unwrap(),
        ] {
            let p = analyze(&v, 1, 16).unwrap();
            let gi = p.generic.unwrap();
            assert!(gi.k <= gi.delta && gi.delta <= p.dim);
            if let Some(m) = p.reduced_dim {
                assert!(m <= p.dim);
            }
        }
    }
}
