//! Monomial enumeration and normal (irreducible) monomials.
//!
//! The normal monomials modulo a Gröbner–Shirshov basis — those divisible by
//! no shifted leading monomial — form a linear basis of the quotient. There
//! are infinitely many of them in general, so enumeration takes bounds:
//! a `D∪X`-length bound is finite on its own, a weight restriction needs a
//! length bound beside it (weight says nothing about how many bracket-`-1`
//! variables a monomial carries, and a fixed weight still admits arbitrarily
//! large brackets without a length bound).

use alloc::vec::Vec;

use crate::monomial::Monomial;
use crate::reduce::Reducer;
use crate::rels::RelationSet;
use crate::vars::{DVar, Generator, GeneratorSet};
use crate::Error;

/// All monomials of `D∪X`-length at most `max_dx`, in ascending monomial
/// order. The unit monomial (length 0) is included.
pub fn monomials_dx_at_most(gens: &GeneratorSet, max_dx: u32) -> Vec<Monomial> {
    // Variables in descending order; each monomial is built as a
    // non-increasing variable sequence, so every multiset appears once.
    let mut universe: Vec<DVar> = Vec::new();
    if max_dx >= 1 {
        for bracket in (-1..=(max_dx as i32 - 2)).rev() {
            for g in (0..gens.len() as u32).rev() {
                universe.push(DVar::new(Generator(g), bracket));
            }
        }
    }
    let mut out = Vec::new();
    let mut current: Vec<DVar> = Vec::new();
    descend(&universe, 0, max_dx, &mut current, &mut out);
    out.sort();
    out
}

fn descend(
    universe: &[DVar],
    start: usize,
    budget: u32,
    current: &mut Vec<DVar>,
    out: &mut Vec<Monomial>,
) {
    out.push(Monomial::from_vars(current.iter().copied()));
    for idx in start..universe.len() {
        let d = universe[idx].dx_len();
        if d <= budget {
            current.push(universe[idx]);
            descend(universe, idx, budget - d, current, out);
            current.pop();
        }
    }
}

/// Monomials irreducible modulo `rels` — no monomial is divisible by any
/// shifted leading monomial of a relation — under the given bounds, in
/// ascending monomial order.
///
/// At least one finiteness bound is required: either `max_dx`, or `weight`
/// together with `max_len`. All given bounds are applied.
pub fn irr_enumerate(
    rels: &RelationSet,
    max_len: Option<u32>,
    weight: Option<i64>,
    max_dx: Option<u32>,
) -> Result<Vec<Monomial>, Error> {
    if max_dx.is_none() && (weight.is_none() || max_len.is_none()) {
        return Err(Error::MissingBound);
    }
    // An effective dx budget: either the explicit one, or the largest dx a
    // monomial of the given weight and length can have. A single variable's
    // bracket is at most `weight + len - 1` (the others are at least `-1`),
    // so dx = weight + 2*len is exact and finite.
    let budget = match max_dx {
        Some(b) => b,
        None => {
            let w = weight.expect("checked above");
            let l = i64::from(max_len.expect("checked above"));
            // Monomials of weight w and length <= l have dx = w + 2*len;
            // infeasible combinations produce an empty range below.
            let top = w + 2 * l;
            u32::try_from(top.max(0)).expect("small bound")
        }
    };
    let red = Reducer::from_set(rels);
    let out = monomials_dx_at_most(rels.gens(), budget)
        .into_iter()
        .filter(|m| max_len.is_none_or(|l| m.len() <= l as usize))
        .filter(|m| weight.is_none_or(|w| m.weight() == w))
        .filter(|m| max_dx.is_none_or(|b| m.dx_len() <= b))
        .filter(|m| red.find_reduction(m, None).is_none())
        .collect();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    fn aset() -> GeneratorSet {
        GeneratorSet::new(["a"]).unwrap()
    }

    fn mono(brs: &[i32]) -> Monomial {
        Monomial::from_vars(brs.iter().map(|&b| DVar::new(Generator(0), b)))
    }

    #[test]
    fn small_dx_census_over_one_letter() {
        // dx budgets 0..3 over {a}: 1 | a[-1] | a[0], a[-1]^2 | a[1],
        // a[0]*a[-1], a[-1]^3.
        let gens = aset();
        assert_eq!(monomials_dx_at_most(&gens, 0), alloc::vec![Monomial::one()]);
        assert_eq!(monomials_dx_at_most(&gens, 1).len(), 2);
        assert_eq!(monomials_dx_at_most(&gens, 2).len(), 4);
        assert_eq!(monomials_dx_at_most(&gens, 3).len(), 7);
        let all = monomials_dx_at_most(&gens, 3);
        assert!(all.contains(&mono(&[0, -1])));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn two_letters_multiply_the_census() {
        let gens = GeneratorSet::new(["a", "b"]).unwrap();
        // dx <= 1: unit, a[-1], b[-1].
        assert_eq!(monomials_dx_at_most(&gens, 1).len(), 3);
        // dx <= 2: + a[0], b[0], and the three products of bracket -1 vars.
        assert_eq!(monomials_dx_at_most(&gens, 2).len(), 8);
    }

    #[test]
    fn irreducibles_modulo_circle_square() {
        // Modulo the completed {a o a} basis at dx <= 6 the only irreducible
        // weight -1 monomial of length <= 3 is a[-1]: a[1]*a[-1]^2 contains
        // the shift-1 leading monomial a[1]*a[-1], and a[0]^2*a[-1] contains
        // a[0]*a[-1] itself.
        let rels = RelationSet::new(
            aset(),
            alloc::vec![
                Polynomial::from_monomial(mono(&[0, -1])),
                Polynomial::from_monomial(mono(&[0, 0, 0])),
            ],
        )
        .unwrap();
        let irr = irr_enumerate(&rels, Some(3), Some(-1), None).unwrap();
        assert_eq!(irr, alloc::vec![mono(&[-1])]);

        // A dx bound alone also works: no a[0]*a[-1] and no a[0]^3 among
        // irreducibles, unit included.
        let irr = irr_enumerate(&rels, None, None, Some(3)).unwrap();
        assert!(irr.contains(&Monomial::one()));
        assert!(!irr.contains(&mono(&[0, -1])));

        // No finiteness bound: error.
        assert_eq!(
            irr_enumerate(&rels, Some(3), None, None),
            Err(Error::MissingBound)
        );
        assert_eq!(
            irr_enumerate(&rels, None, Some(-1), None),
            Err(Error::MissingBound)
        );
    }
}
