//! S-words and deterministic normal forms.
//!
//! An *S-word* over a relation list `S` is a product `u * D^t(s)` of a
//! monomial cofactor with a shifted relation; the ideal generated by `S` in
//! the differential algebra is exactly the linear span of the S-words. A
//! monomial `w` is *reducible* when some S-word has leading monomial `w`,
//! i.e. when `w` is divisible by the `t`-shifted leading monomial of some
//! relation. Division with remainder against `S` repeatedly eliminates the
//! largest reducible monomial; the remainder is the *normal form*, and the
//! eliminated S-words form a certificate `f = sum(steps) + nf(f)`.
//!
//! The scan order for divisors is fixed — relation index ascending, then
//! shift ascending — so normal forms computed here are deterministic. A
//! pluggable chooser allows alternative strategies (used to test that all
//! strategies agree over completed bases).

use alloc::vec::Vec;

use crate::monomial::Monomial;
use crate::poly::{Coeff, Polynomial};
use crate::rels::RelationSet;

/// Locates a reducible monomial: `cofactor * lm(D^shift(relations[relation]))`
/// equals the monomial in question.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SWord {
    pub cofactor: Monomial,
    pub shift: u32,
    pub relation: usize,
}

/// One recorded division step: the reduced polynomial lost
/// `coeff * cofactor * D^shift(relations[relation])`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SWordStep {
    pub coeff: Coeff,
    pub cofactor: Monomial,
    pub shift: u32,
    pub relation: usize,
}

impl SWordStep {
    /// The polynomial this step subtracted.
    pub fn value(&self, relations: &[Polynomial]) -> Polynomial {
        relations[self.relation]
            .derive(self.shift)
            .mul_term(&self.cofactor, &self.coeff)
    }
}

/// Reassembles `sum(steps) + remainder`; equal to the polynomial the steps
/// were produced from. This is the certificate check for membership results.
pub fn certificate_value(
    steps: &[SWordStep],
    remainder: &Polynomial,
    relations: &[Polynomial],
) -> Polynomial {
    let mut acc = remainder.clone();
    for step in steps {
        let d = relations[step.relation].derive(step.shift);
        acc.add_scaled_mul(&step.coeff, &step.cofactor, &d);
    }
    acc
}

/// Reduction engine over a relation list. Owns copies of the relations and
/// caches derivative towers `D^t(s)` so repeated reductions stay cheap; new
/// relations can be pushed as completion discovers them.
pub struct Reducer {
    towers: Vec<Vec<Polynomial>>,
}

impl Reducer {
    /// Builds a reducer. Relations must be nonzero (as enforced by
    /// [`RelationSet`]); zero relations would make divisor search meaningless.
    pub fn new(relations: &[Polynomial]) -> Self {
        let mut red = Reducer { towers: Vec::new() };
        for r in relations {
            red.push(r.clone());
        }
        red
    }

    pub fn from_set(rels: &RelationSet) -> Self {
        Reducer::new(rels.relations())
    }

    /// Appends a relation; it participates in all later divisor searches.
    pub fn push(&mut self, relation: Polynomial) {
        debug_assert!(!relation.is_zero());
        self.towers.push(alloc::vec![relation]);
    }

    pub fn len(&self) -> usize {
        self.towers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.towers.is_empty()
    }

    /// Relation `i` as given (the unshifted tower base).
    pub fn relation(&self, i: usize) -> &Polynomial {
        &self.towers[i][0]
    }

    fn relations(&self) -> impl Iterator<Item = &Polynomial> {
        self.towers.iter().map(|t| &t[0])
    }

    /// `D^t` of relation `i`, computed once and cached.
    pub fn shifted(&mut self, i: usize, t: u32) -> &Polynomial {
        let tower = &mut self.towers[i];
        while tower.len() <= t as usize {
            let next = tower.last().unwrap().derive_once();
            tower.push(next);
        }
        &tower[t as usize]
    }

    /// The first S-word whose leading monomial divides `w`, scanning
    /// relations by index and shifts ascending. The shift is bounded by the
    /// largest bracket in `w` minus the top bracket of the relation's
    /// leading monomial — larger shifts produce variables `w` cannot contain.
    pub fn find_reduction(&self, w: &Monomial, exclude: Option<usize>) -> Option<SWord> {
        for (i, rel) in self.relations().enumerate() {
            if exclude == Some(i) {
                continue;
            }
            let (lm, _) = rel.leading().expect("relations are nonzero");
            if lm.is_one() {
                // A constant relation reduces everything.
                return Some(SWord {
                    cofactor: w.clone(),
                    shift: 0,
                    relation: i,
                });
            }
            let Some(max_bracket) = w.max_bracket() else {
                continue; // w == 1: only a constant relation could divide.
            };
            let top_bracket = lm.top().expect("nonunit monomial has a top").bracket();
            let Ok(t_max) = u32::try_from(max_bracket as i64 - top_bracket as i64) else {
                continue;
            };
            for t in 0..=t_max {
                if let Some(u) = w.checked_div(&lm.bump_top(t)) {
                    return Some(SWord {
                        cofactor: u,
                        shift: t,
                        relation: i,
                    });
                }
            }
        }
        None
    }

    /// All S-words reducing `w`, in the deterministic scan order.
    pub fn all_reductions(&self, w: &Monomial) -> Vec<SWord> {
        let mut out = Vec::new();
        for (i, rel) in self.relations().enumerate() {
            let (lm, _) = rel.leading().expect("relations are nonzero");
            if lm.is_one() {
                out.push(SWord {
                    cofactor: w.clone(),
                    shift: 0,
                    relation: i,
                });
                continue;
            }
            let Some(max_bracket) = w.max_bracket() else {
                continue;
            };
            let top_bracket = lm.top().expect("nonunit monomial has a top").bracket();
            let Ok(t_max) = u32::try_from(max_bracket as i64 - top_bracket as i64) else {
                continue;
            };
            for t in 0..=t_max {
                if let Some(u) = w.checked_div(&lm.bump_top(t)) {
                    out.push(SWord {
                        cofactor: u,
                        shift: t,
                        relation: i,
                    });
                }
            }
        }
        out
    }

    /// Full normal form with a certificate: returns `(nf, steps)` with
    /// `f = sum(steps) + nf` and no monomial of `nf` reducible.
    pub fn normal_form(&mut self, f: &Polynomial) -> (Polynomial, Vec<SWordStep>) {
        self.normal_form_excluding(f, None)
    }

    /// Normal form ignoring relation `exclude` (used by minimalization to
    /// reduce an element against the rest of the set).
    pub fn normal_form_excluding(
        &mut self,
        f: &Polynomial,
        exclude: Option<usize>,
    ) -> (Polynomial, Vec<SWordStep>) {
        let mut work = f.clone();
        let mut remainder = Polynomial::zero();
        let mut steps = Vec::new();
        while let Ok((lm, lc)) = work.leading() {
            let lm = lm.clone();
            let lc = lc.clone();
            match self.find_reduction(&lm, exclude) {
                Some(sword) => self.eliminate(&mut work, &lm, lc, sword, &mut steps),
                None => {
                    remainder.add_term(lm.clone(), lc.clone());
                    work.add_term(lm, -lc);
                }
            }
        }
        (remainder, steps)
    }

    /// Normal form under a caller-chosen strategy: for every reducible
    /// monomial the chooser picks one of the candidate S-words (by index
    /// into the deterministically ordered candidate list). Used to check
    /// that reduction strategies agree over completed bases.
    pub fn normal_form_with<C>(&mut self, f: &Polynomial, mut chooser: C) -> Polynomial
    where
        C: FnMut(&Monomial, &[SWord]) -> usize,
    {
        let mut work = f.clone();
        let mut remainder = Polynomial::zero();
        let mut steps = Vec::new();
        while let Ok((lm, lc)) = work.leading() {
            let lm = lm.clone();
            let lc = lc.clone();
            let candidates = self.all_reductions(&lm);
            if candidates.is_empty() {
                remainder.add_term(lm.clone(), lc.clone());
                work.add_term(lm, -lc);
            } else {
                let pick = chooser(&lm, &candidates);
                let sword = candidates[pick.min(candidates.len() - 1)].clone();
                self.eliminate(&mut work, &lm, lc, sword, &mut steps);
            }
        }
        remainder
    }

    /// Subtracts the S-word multiple that kills `lc * lm` from `work`.
    fn eliminate(
        &mut self,
        work: &mut Polynomial,
        lm: &Monomial,
        lc: Coeff,
        sword: SWord,
        steps: &mut Vec<SWordStep>,
    ) {
        let shifted = self.shifted(sword.relation, sword.shift);
        let (slm, slc) = shifted.leading().expect("shifted relation is nonzero");
        debug_assert_eq!(&sword.cofactor.mul(slm), lm);
        let coeff = lc / slc;
        let neg = -coeff.clone();
        let shifted = shifted.clone();
        work.add_scaled_mul(&neg, &sword.cofactor, &shifted);
        debug_assert!(work.coeff(lm).is_none());
        steps.push(SWordStep {
            coeff,
            cofactor: sword.cofactor,
            shift: sword.shift,
            relation: sword.relation,
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use crate::vars::{DVar, Generator, GeneratorSet};

    fn mono(brs: &[i32]) -> Monomial {
        Monomial::from_vars(brs.iter().map(|&b| DVar::new(Generator(0), b)))
    }

    fn pm(brs: &[i32]) -> Polynomial {
        Polynomial::from_monomial(mono(&brs))
    }

    #[test]
    fn find_reduction_scans_relations_then_shifts() {
        // S = {a o a} = {a[0]*a[-1]}.
        let rels = [pm(&[0, -1])];
        let red = Reducer::new(&rels);

        // a[1]*a[0]*a[-1] is reducible at shift 0 with cofactor a[1].
        let w = mono(&[1, 0, -1]);
        let s = red.find_reduction(&w, None).unwrap();
        assert_eq!(s.shift, 0);
        assert_eq!(s.cofactor, mono(&[1]));

        // a[1]^2*a[-1] needs shift 1 (contains no a[0]).
        let w = mono(&[1, 1, -1]);
        let s = red.find_reduction(&w, None).unwrap();
        assert_eq!(s.shift, 1);
        assert_eq!(s.cofactor, mono(&[1]));

        // a[0]^3 contains no a[-1]: irreducible.
        assert!(red.find_reduction(&mono(&[0, 0, 0]), None).is_none());
        // The unit monomial is irreducible.
        assert!(red.find_reduction(&Monomial::one(), None).is_none());
    }

    #[test]
    fn normal_form_certificates_reassemble_the_input() {
        let gens = GeneratorSet::new(["a"]).unwrap();
        let _ = gens;
        let rels = [pm(&[0, -1])];
        let mut red = Reducer::new(&rels);

        // a[1]*a[0]*a[-1]^2 reduces; its normal form plus the certificate
        // steps must rebuild it exactly.
        let f = Polynomial::from_terms([
            (mono(&[1, 0, -1, -1]), rat(2)),
            (mono(&[0, 0, 0]), rat(1)),
        ]);
        let (nf, steps) = red.normal_form(&f);
        assert!(!steps.is_empty());
        assert_eq!(certificate_value(&steps, &nf, &rels), f);
        // Nothing in the normal form is reducible.
        for m in nf.monomials() {
            assert!(red.find_reduction(m, None).is_none());
        }
    }

    #[test]
    fn normal_form_respects_exclusion() {
        // Two copies of the same relation: excluding one still reduces by
        // the other; excluding is how minimalization tests redundancy.
        let rels = [pm(&[0, -1]), pm(&[0, -1])];
        let mut red = Reducer::new(&rels);
        let (nf, _) = red.normal_form_excluding(&pm(&[0, -1]), Some(0));
        assert!(nf.is_zero());
    }

    #[test]
    fn chooser_strategy_reaches_a_normal_form() {
        let rels = [pm(&[0, -1]), pm(&[1, -1, -1])];
        let mut red = Reducer::new(&rels);
        let f = pm(&[1, 0, -1, -1]);
        // Always pick the *last* candidate instead of the first.
        let nf_last = red.normal_form_with(&f, |_, cands| cands.len() - 1);
        for m in nf_last.monomials() {
            assert!(red.find_reduction(m, None).is_none());
        }
    }
}
