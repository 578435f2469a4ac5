//! Critical multiples and the bounded GDN Gröbner–Shirshov check.
//!
//! A differential composition lives over the lcm `L` of two shifted leading
//! monomials, but GDN ideals are spanned by weight `-1` S-words, so the GDN
//! criterion inspects the weight `-1` *multiples* `w = L * pads` instead.
//! The padding families depend on the weight of `L`:
//!
//! * weight above `-1`: append `wt(L) + 1` variables at bracket `-1`;
//! * weight exactly `-1`: the bare lcm, no padding;
//! * weight below `-1`: append positive-bracket variables `d₁[m₁]⋯d_p[m_p]`
//!   with `Σm` at least `W = -1 - wt(L)` but `Σm` minus the smallest `m`
//!   below `W` (so no pad is redundant), then bracket `-1` variables to land
//!   on weight `-1` exactly.
//!
//! Multiples divisible by the plain product of the two leading monomials
//! are skipped: over such a multiple the composition is trivial for free.
//! [`check_gsb_gdn`] reduces every in-cap composition to a normal form
//! against the candidate basis; for a genuine Gröbner–Shirshov basis every
//! ideal element has normal form zero, so a nonzero normal form is a
//! certified counterexample and an all-zero sweep confirms the basis up to
//! the cap.

use alloc::vec::Vec;

use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::reduce::Reducer;
use crate::rels::RelationSet;
use crate::vars::{DVar, Generator, GeneratorSet};
use crate::Error;

/// Which padding family produced a critical multiple.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PaddingCase {
    /// The lcm sat above weight `-1`: bracket `-1` padding only.
    NegativesOnly,
    /// The lcm already had weight `-1`.
    Bare,
    /// The lcm sat below weight `-1`: positive-bracket pads, then bracket
    /// `-1` pads.
    WithPositives,
}

/// A weight `-1` multiple of the lcm of two shifted leading monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CriticalMultiple {
    /// The full ambiguity `lcm * positive_padding * negative_padding`.
    pub ambiguity: Monomial,
    pub lcm: Monomial,
    pub positive_padding: Monomial,
    pub negative_padding: Monomial,
    pub case: PaddingCase,
}

/// The weight `-1` critical multiples of `(D^t1 f, D^t2 g)` with ambiguity
/// dx at most `cap`, ascending by ambiguity. Empty when the shifted leading
/// monomials share no variable. Both polynomials must be weight `-1`
/// (nonzero), as must the alphabet's use: this is the GDN-side criterion.
pub fn critical_multiples(
    f: &Polynomial,
    t1: u32,
    g: &Polynomial,
    t2: u32,
    gens: &GeneratorSet,
    cap: u32,
) -> Result<Vec<CriticalMultiple>, Error> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_weight_minus_one() || !g.is_weight_minus_one() {
        return Err(Error::NotWeightMinusOne);
    }
    let Ok((lm1, _)) = f.leading_of_derived(t1) else {
        return Ok(Vec::new());
    };
    let Ok((lm2, _)) = g.leading_of_derived(t2) else {
        return Ok(Vec::new());
    };
    if !lm1.shares_variable(&lm2) {
        return Ok(Vec::new());
    }
    let lcm = lm1.lcm(&lm2);
    let product = lm1.mul(&lm2);
    let mut out = Vec::new();
    if lcm.dx_len() <= cap {
        let wt = lcm.weight();
        if wt > -1 {
            let q = (wt + 1) as usize;
            for neg in negative_pads(gens, q, cap.saturating_sub(lcm.dx_len())) {
                push_multiple(
                    &mut out,
                    &lcm,
                    Monomial::one(),
                    neg,
                    PaddingCase::NegativesOnly,
                    &product,
                );
            }
        } else if wt == -1 {
            push_multiple(
                &mut out,
                &lcm,
                Monomial::one(),
                Monomial::one(),
                PaddingCase::Bare,
                &product,
            );
        } else {
            let need = (-1 - wt) as u32; // W: the weight deficit to cover
            let budget = cap - lcm.dx_len();
            for pad in positive_pads(gens, budget) {
                let sum: u32 = pad.iter().map(|v| v.bracket() as u32).sum();
                let smallest = pad.last().expect("pads are nonempty").bracket() as u32;
                if sum < need || sum - smallest >= need {
                    continue; // undershoots, or the last pad is redundant
                }
                let q = (sum - need) as usize;
                let pad_dx: u32 = pad.iter().map(|v| v.dx_len()).sum();
                if pad_dx + q as u32 > budget {
                    continue;
                }
                let positive = Monomial::from_vars(pad.iter().copied());
                for neg in negative_pads(gens, q, budget - pad_dx) {
                    push_multiple(
                        &mut out,
                        &lcm,
                        positive.clone(),
                        neg,
                        PaddingCase::WithPositives,
                        &product,
                    );
                }
            }
        }
    }
    out.sort_by(|a, b| a.ambiguity.cmp(&b.ambiguity));
    Ok(out)
}

fn push_multiple(
    out: &mut Vec<CriticalMultiple>,
    lcm: &Monomial,
    positive: Monomial,
    negative: Monomial,
    case: PaddingCase,
    product: &Monomial,
) {
    let ambiguity = lcm.mul(&positive).mul(&negative);
    // Containing the plain product of both leading monomials makes the
    // composition over this multiple trivial outright: skip it.
    if ambiguity.is_divisible_by(product) {
        return;
    }
    out.push(CriticalMultiple {
        ambiguity,
        lcm: lcm.clone(),
        positive_padding: positive,
        negative_padding: negative,
        case,
    });
}

/// Multisets of `q` bracket `-1` variables, as monomials, each of dx `q`;
/// empty when `q` exceeds the dx budget.
fn negative_pads(gens: &GeneratorSet, q: usize, budget: u32) -> Vec<Monomial> {
    if q as u32 > budget {
        return Vec::new();
    }
    let letters = gens.len() as u32;
    let mut out = Vec::new();
    let mut cur: Vec<Generator> = Vec::new();
    fn rec(letters: u32, q: usize, from: u32, cur: &mut Vec<Generator>, out: &mut Vec<Monomial>) {
        if cur.len() == q {
            out.push(Monomial::from_vars(
                cur.iter().map(|&g| DVar::new(g, -1)),
            ));
            return;
        }
        for g in from..letters {
            cur.push(Generator(g));
            rec(letters, q, g, cur, out);
            cur.pop();
        }
    }
    rec(letters, q, 0, &mut cur, &mut out);
    out
}

/// Nonempty multisets of positive-bracket variables with total dx within
/// the budget, each as a non-increasing variable sequence.
fn positive_pads(gens: &GeneratorSet, budget: u32) -> Vec<Vec<DVar>> {
    let mut universe: Vec<DVar> = Vec::new();
    if budget >= 3 {
        for bracket in (1..=(budget as i32 - 2)).rev() {
            for g in (0..gens.len() as u32).rev() {
                universe.push(DVar::new(Generator(g), bracket));
            }
        }
    }
    fn rec(
        universe: &[DVar],
        start: usize,
        budget: u32,
        cur: &mut Vec<DVar>,
        out: &mut Vec<Vec<DVar>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for idx in start..universe.len() {
            let d = universe[idx].dx_len();
            if d <= budget {
                cur.push(universe[idx]);
                rec(universe, idx, budget - d, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&universe, 0, budget, &mut Vec::new(), &mut out);
    out
}

/// One composition the bounded GDN check could not reduce to zero.
#[derive(Clone, Debug)]
pub struct NontrivialComposition {
    pub left: usize,
    pub left_shift: u32,
    pub right: usize,
    pub right_shift: u32,
    pub ambiguity: Monomial,
    pub normal_form: Polynomial,
}

/// Outcome of [`check_gsb_gdn`].
#[derive(Clone, Debug)]
pub struct GdnCheckReport {
    pub cap: u32,
    /// Critical multiples whose compositions were reduced.
    pub checked: u64,
    pub nontrivial: Vec<NontrivialComposition>,
}

impl GdnCheckReport {
    /// No nontrivial composition under the cap: the set is a GDN
    /// Gröbner–Shirshov basis as far as the cap can see.
    pub fn is_gsb_under_cap(&self) -> bool {
        self.nontrivial.is_empty()
    }
}

/// Checks whether `rels` is a Gröbner–Shirshov basis of the GDN ideal it
/// generates, over all critical multiples with ambiguity dx at most `cap`.
/// The relations must all be weight `-1`.
pub fn check_gsb_gdn(rels: &RelationSet, cap: u32) -> Result<GdnCheckReport, Error> {
    if !rels.is_gdn() {
        return Err(Error::NotWeightMinusOne);
    }
    let polys = rels.relations();
    let mut red = Reducer::from_set(rels);
    let mut report = GdnCheckReport {
        cap,
        checked: 0,
        nontrivial: Vec::new(),
    };
    for i in 0..polys.len() {
        for j in i..polys.len() {
            for t1 in 0..=cap {
                let Ok((lm1, a1)) = polys[i].leading_of_derived(t1) else {
                    break;
                };
                if lm1.dx_len() > cap {
                    break;
                }
                for t2 in 0..=cap {
                    if i == j && t2 <= t1 {
                        continue;
                    }
                    let Ok((lm2, a2)) = polys[j].leading_of_derived(t2) else {
                        break;
                    };
                    if lm2.dx_len() > cap {
                        break;
                    }
                    for multiple in
                        critical_multiples(&polys[i], t1, &polys[j], t2, rels.gens(), cap)?
                    {
                        report.checked += 1;
                        let w = &multiple.ambiguity;
                        let mut h = Polynomial::zero();
                        let u1 = w.checked_div(&lm1).expect("multiple of lm1");
                        h.add_scaled_mul(&a1.recip(), &u1, red.shifted(i, t1));
                        let u2 = w.checked_div(&lm2).expect("multiple of lm2");
                        h.add_scaled_mul(&-a2.recip(), &u2, red.shifted(j, t2));
                        let (nf, _) = red.normal_form(&h);
                        if !nf.is_zero() {
                            report.nontrivial.push(NontrivialComposition {
                                left: i,
                                left_shift: t1,
                                right: j,
                                right_shift: t2,
                                ambiguity: w.clone(),
                                normal_form: nf,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(gens: &[(u32, i32)]) -> Monomial {
        Monomial::from_vars(gens.iter().map(|&(g, b)| DVar::new(Generator(g), b)))
    }

    fn pm(gens: &[(u32, i32)]) -> Polynomial {
        Polynomial::from_monomial(mono(gens))
    }

    #[test]
    fn padding_filters_out_contained_products() {
        // Four letters; f = e1 o e1 = e1[0]*e1[-1], shifts (0, 1). The lcm
        // e1[1]*e1[0]*e1[-1] has weight 0, so one bracket -1 pad is needed;
        // the pad letter e1 reproduces lm1 * lm2 inside the multiple and is
        // filtered, leaving three.
        let gens = GeneratorSet::new(["e1", "e2", "e3", "e4"]).unwrap();
        let f = pm(&[(0, 0), (0, -1)]);
        let ms = critical_multiples(&f, 0, &f, 1, &gens, 7).unwrap();
        assert_eq!(ms.len(), 3);
        for (m, letter) in ms.iter().zip(1u32..) {
            assert_eq!(m.case, PaddingCase::NegativesOnly);
            assert_eq!(m.lcm, mono(&[(0, 1), (0, 0), (0, -1)]));
            assert_eq!(m.negative_padding, mono(&[(letter, -1)]));
            assert_eq!(m.ambiguity, mono(&[(0, 1), (0, 0), (0, -1), (letter, -1)]));
        }
    }

    #[test]
    fn bare_and_positive_padding_cases() {
        let gens = GeneratorSet::new(["e1", "e2", "e3", "e4"]).unwrap();
        // Same relation twice, no shift: the lcm is the leading monomial
        // itself, already of weight -1.
        let f = pm(&[(0, 0), (0, -1)]);
        let ms = critical_multiples(&f, 0, &f, 0, &gens, 7).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].case, PaddingCase::Bare);
        assert_eq!(ms[0].ambiguity, mono(&[(0, 0), (0, -1)]));

        // f = e2 o e1 - e3, g = e2 o e3: the lcm e2[0]*e3[-1]*e1[-1] has
        // weight -2, so a single positive pad d[1] (any letter) covers the
        // deficit with no negatives; cap 7 forbids larger pads.
        let f = &pm(&[(1, 0), (0, -1)]) - &pm(&[(2, -1)]);
        let g = pm(&[(1, 0), (2, -1)]);
        let ms = critical_multiples(&f, 0, &g, 0, &gens, 7).unwrap();
        assert_eq!(ms.len(), 4);
        for m in &ms {
            assert_eq!(m.case, PaddingCase::WithPositives);
            assert_eq!(m.negative_padding, Monomial::one());
            assert_eq!(m.positive_padding.len(), 1);
            assert_eq!(m.ambiguity.dx_len(), 7);
        }
    }

    #[test]
    fn circle_square_is_a_gdn_basis_but_a_mixed_square_is_not() {
        // {a o a}: every in-cap multiple is filtered or reduces to zero.
        let gens = GeneratorSet::new(["a"]).unwrap();
        let rels = RelationSet::new(
            gens,
            alloc::vec![pm(&[(0, 0), (0, -1)])],
        )
        .unwrap();
        let report = check_gsb_gdn(&rels, 8).unwrap();
        assert!(report.is_gsb_under_cap());

        // {a o b} alone is not a basis: over a[1]*a[0]*a[-1]*b[-1] the
        // composition of (f, Df) leaves -a[0]^2*a[-1]*b[0], which nothing
        // reduces.
        let gens = GeneratorSet::new(["a", "b"]).unwrap();
        let rels = RelationSet::new(
            gens,
            alloc::vec![pm(&[(0, 0), (1, -1)])],
        )
        .unwrap();
        let report = check_gsb_gdn(&rels, 7).unwrap();
        assert!(!report.is_gsb_under_cap());
        let bad = &report.nontrivial[0];
        assert_eq!((bad.left, bad.left_shift, bad.right, bad.right_shift), (0, 0, 0, 1));
        assert_eq!(
            bad.normal_form,
            pm(&[(0, 0), (0, 0), (0, -1), (1, 0)]).scale(&crate::poly::rat(-1))
        );
    }

    #[test]
    fn weight_validation() {
        let gens = GeneratorSet::new(["a"]).unwrap();
        let wt0 = pm(&[(0, 0)]);
        assert!(matches!(
            critical_multiples(&wt0, 0, &wt0, 1, &gens, 6),
            Err(Error::NotWeightMinusOne)
        ));
        let rels = RelationSet::new(gens, alloc::vec![wt0]).unwrap();
        assert!(matches!(
            check_gsb_gdn(&rels, 6),
            Err(Error::NotWeightMinusOne)
        ));
    }
}
