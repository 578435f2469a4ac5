//! Ordered sets of defining relations.

use alloc::vec::Vec;

use crate::poly::Polynomial;
use crate::vars::GeneratorSet;
use crate::Error;

/// An ordered list of nonzero relations over a fixed alphabet, with
/// homogeneity flags computed once at construction.
///
/// *`D∪X`-homogeneous* means every relation's monomials share one
/// `D∪X`-length (relation by relation — different relations may live in
/// different lengths). This is the hypothesis under which the staged
/// completion is exact and terminating stage by stage. *Weight-homogeneous*
/// is the analogous condition on weights; the GDN layer additionally wants
/// every weight to be `-1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationSet {
    gens: GeneratorSet,
    relations: Vec<Polynomial>,
    dx_homogeneous: bool,
    weight_homogeneous: bool,
}

impl RelationSet {
    /// Wraps relations over an alphabet. Rejects zero polynomials.
    pub fn new(gens: GeneratorSet, relations: Vec<Polynomial>) -> Result<Self, Error> {
        for (i, r) in relations.iter().enumerate() {
            if r.is_zero() {
                return Err(Error::ZeroRelation(i));
            }
        }
        let dx_homogeneous = relations.iter().all(|r| r.uniform_dx().is_some());
        let weight_homogeneous = relations.iter().all(|r| r.uniform_weight().is_some());
        Ok(RelationSet {
            gens,
            relations,
            dx_homogeneous,
            weight_homogeneous,
        })
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Polynomial> {
        self.relations.get(i)
    }

    /// Every relation is `D∪X`-homogeneous.
    pub fn is_dx_homogeneous(&self) -> bool {
        self.dx_homogeneous
    }

    /// Every relation is weight-homogeneous.
    pub fn is_weight_homogeneous(&self) -> bool {
        self.weight_homogeneous
    }

    /// Every relation is a combination of weight `-1` monomials, i.e. the
    /// set lives inside the GDN subalgebra.
    pub fn is_gdn(&self) -> bool {
        self.relations.iter().all(Polynomial::is_weight_minus_one)
    }

    /// Largest `D∪X`-length over all monomials of all relations
    /// (`None` for an empty set).
    pub fn max_dx(&self) -> Option<u32> {
        self.relations.iter().filter_map(Polynomial::max_dx).max()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;
    use crate::poly::rat;
    use crate::vars::{DVar, Generator};

    fn mono(brs: &[i32]) -> Monomial {
        Monomial::from_vars(brs.iter().map(|&b| DVar::new(Generator(0), b)))
    }

    #[test]
    fn flags_reflect_each_relation() {
        let gens = GeneratorSet::new(["a"]).unwrap();
        // a[0]*a[-1] is both dx- and weight-homogeneous.
        let circ = Polynomial::from_monomial(mono(&[0, -1]));
        let s = RelationSet::new(gens.clone(), alloc::vec![circ.clone()]).unwrap();
        assert!(s.is_dx_homogeneous());
        assert!(s.is_weight_homogeneous());
        assert!(s.is_gdn());
        assert_eq!(s.max_dx(), Some(3));

        // a[0]*a[-1] - a[-1] keeps one weight but mixes dx-lengths.
        let mixed = Polynomial::from_terms([(mono(&[0, -1]), rat(1)), (mono(&[-1]), rat(-1))]);
        let s = RelationSet::new(gens.clone(), alloc::vec![circ, mixed]).unwrap();
        assert!(!s.is_dx_homogeneous());
        assert!(s.is_weight_homogeneous());
        assert!(s.is_gdn());

        // Weight 0 monomials are not GDN elements.
        let wt0 = Polynomial::from_monomial(mono(&[0, 0, -1, -1]));
        let s = RelationSet::new(gens.clone(), alloc::vec![wt0]).unwrap();
        assert!(!s.is_gdn());

        assert_eq!(
            RelationSet::new(gens, alloc::vec![Polynomial::zero()]),
            Err(Error::ZeroRelation(0))
        );
    }
}
