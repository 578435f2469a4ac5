//! The Gelfand–Dorfman–Novikov layer.
//!
//! Under `f o g = D(f) * g` the differential algebra `k{X}` becomes a right
//! GDN algebra: left-symmetry of associators in the right arguments and
//! right-commutativity hold identically ([`check_identities`]). The span of
//! the weight `-1` monomials is closed under `o` and is the *free* GDN
//! algebra on `X`, with a generator `x` embedded as `x[-1]`.
//!
//! Membership in a GDN ideal reduces to membership in the differential
//! ideal: for weight `-1` relations, the differential ideal they generate
//! intersects the weight `-1` span exactly in the GDN ideal. So
//! [`member_gdn`] delegates to the differential machinery — the staged
//! exact procedure when it applies, the capped one otherwise — and
//! [`span_oracle`] cross-checks membership by brute-force linear algebra
//! over the S-words, with no rewriting involved.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::complete::{buchberger_capped, member_diff, CapReport};
use crate::enumerate::monomials_dx_at_most;
use crate::monomial::Monomial;
use crate::poly::{circle, Polynomial};
use crate::reduce::{Reducer, SWordStep};
use crate::rels::RelationSet;
use crate::vars::{DVar, Generator};
use crate::Error;

/// A formal expression in the free GDN algebra: generators and circle
/// products.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GdnExpr {
    Gen(Generator),
    Circle(Box<GdnExpr>, Box<GdnExpr>),
}

impl GdnExpr {
    pub fn gen(g: Generator) -> Self {
        GdnExpr::Gen(g)
    }

    pub fn circle(left: GdnExpr, right: GdnExpr) -> Self {
        GdnExpr::Circle(Box::new(left), Box::new(right))
    }

    /// Evaluates the expression in `k{X}`: a generator `x` becomes `x[-1]`
    /// and `o` becomes the circle product. The image is the free GDN
    /// algebra, so distinct GDN elements evaluate to distinct polynomials.
    pub fn to_poly(&self) -> Polynomial {
        match self {
            GdnExpr::Gen(g) => Polynomial::from_monomial(Monomial::var(DVar::new(*g, -1))),
            GdnExpr::Circle(l, r) => circle(&l.to_poly(), &r.to_poly()),
        }
    }
}

/// The two defining right GDN identities as defects, both identically zero
/// in `k{X}`:
///
/// * left symmetry in the right arguments:
///   `(x o (y o z) - (x o y) o z) - (x o (z o y) - (x o z) o y)`,
/// * right commutativity: `x o (y o z) - y o (x o z)`.
pub fn check_identities(
    x: &Polynomial,
    y: &Polynomial,
    z: &Polynomial,
) -> (Polynomial, Polynomial) {
    let assoc_yz = &circle(x, &circle(y, z)) - &circle(&circle(x, y), z);
    let assoc_zy = &circle(x, &circle(z, y)) - &circle(&circle(x, z), y);
    let left_symmetry = &assoc_yz - &assoc_zy;
    let right_commutativity = &circle(x, &circle(y, z)) - &circle(y, &circle(x, z));
    (left_symmetry, right_commutativity)
}

/// Which ideal the span oracle spans.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdealKind {
    /// The differential ideal: all S-words `u * D^t(s)`.
    Differential,
    /// The GDN ideal: the S-words of weight `-1`.
    Gdn,
}

/// Decides `f ∈ span{S-words of dx at most cap}` by incremental Gaussian
/// elimination — no rewriting, no completion. For dx-homogeneous relations
/// this equals ideal membership whenever `cap >= max dx of f`: the ideal is
/// dx-graded, so the component of any representation touching `f` lives
/// entirely under the cap. With [`IdealKind::Gdn`] only weight `-1` S-words
/// are spanned (relations and `f` must then be weight `-1`), which equals
/// GDN ideal membership under the same cap condition.
pub fn span_oracle(
    f: &Polynomial,
    rels: &RelationSet,
    cap: u32,
    kind: IdealKind,
) -> Result<bool, Error> {
    if !rels.is_dx_homogeneous() {
        return Err(Error::NotDxHomogeneous);
    }
    if kind == IdealKind::Gdn && (!rels.is_gdn() || !f.is_weight_minus_one()) {
        return Err(Error::NotWeightMinusOne);
    }
    let one = crate::poly::rat(1);
    let cofactors = monomials_dx_at_most(rels.gens(), cap);
    let mut pivots: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
    let mut red = Reducer::from_set(rels);
    for (i, s) in rels.relations().iter().enumerate() {
        let s_dx = s.uniform_dx().expect("dx-homogeneous relation");
        let s_weight = s.uniform_weight();
        if s_dx > cap {
            continue; // no S-word over this relation fits under the cap
        }
        for t in 0..=cap - s_dx {
            let shifted = red.shifted(i, t).clone();
            if shifted.is_zero() {
                break; // a constant relation: derivatives vanish
            }
            let budget = cap - s_dx - t;
            for u in &cofactors {
                if u.dx_len() > budget {
                    continue;
                }
                if kind == IdealKind::Gdn {
                    let w = u.weight()
                        + s_weight.expect("weight -1 relations are weight-homogeneous")
                        + i64::from(t);
                    if w != -1 {
                        continue;
                    }
                }
                let row = reduce_against(&pivots, shifted.mul_term(u, &one));
                if let Ok((lm, _)) = row.leading() {
                    let lm = lm.clone();
                    pivots.insert(lm, row.monic());
                }
            }
        }
    }
    Ok(reduce_against(&pivots, f.clone()).is_zero())
}

/// Head-reduces `p` against the pivot rows until its leading monomial is no
/// pivot. Because pivot leading monomials are pairwise distinct, `p` lies
/// in the row span exactly when this reaches zero.
fn reduce_against(pivots: &BTreeMap<Monomial, Polynomial>, mut p: Polynomial) -> Polynomial {
    while let Ok((lm, lc)) = p.leading() {
        let Some(row) = pivots.get(lm) else {
            break;
        };
        let c = -lc.clone();
        let lm = lm.clone();
        p.add_scaled(&c, row);
        debug_assert!(p.coeff(&lm).is_none());
    }
    p
}

/// How [`member_gdn`] should run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GdnMode {
    /// Staged exact completion; requires dx-homogeneous relations.
    Exact,
    /// Capped completion with the given dx cap; works for any relations,
    /// but a negative verdict is inconclusive.
    Capped(u32),
}

/// Outcome of a GDN membership test.
pub struct GdnMembership {
    pub member: bool,
    /// Whether the verdict is definitive. Exact runs always are; a capped
    /// run certifies only positive verdicts (the certificate exhibits the
    /// representation), so `member == false` comes with `exact == false`.
    pub exact: bool,
    /// The cap, for capped runs.
    pub cap: Option<u32>,
    pub normal_form: Polynomial,
    /// Division steps over `basis`: `f = sum(steps) + normal_form`.
    pub certificate: Vec<SWordStep>,
    /// The completed (staged) or saturated-under-cap basis reduced against.
    pub basis: RelationSet,
    /// The capped run's report, when one ran.
    pub report: Option<CapReport>,
}

/// Decides membership of `f` in the GDN ideal generated by `rels` inside
/// the free GDN algebra. Everything must be weight `-1`: membership in the
/// differential ideal then coincides with membership in the GDN ideal, and
/// the differential procedures apply.
pub fn member_gdn(
    f: &Polynomial,
    rels: &RelationSet,
    mode: GdnMode,
) -> Result<GdnMembership, Error> {
    if !f.is_weight_minus_one() || !rels.is_gdn() {
        return Err(Error::NotWeightMinusOne);
    }
    match mode {
        GdnMode::Exact => {
            let m = member_diff(f, rels)?;
            Ok(GdnMembership {
                member: m.member,
                exact: true,
                cap: None,
                normal_form: m.normal_form,
                certificate: m.certificate,
                basis: m.basis,
                report: None,
            })
        }
        GdnMode::Capped(cap) => {
            let completed = buchberger_capped(rels, cap);
            let (nf, steps) = Reducer::from_set(&completed.basis).normal_form(f);
            let member = nf.is_zero();
            Ok(GdnMembership {
                member,
                exact: member,
                cap: Some(cap),
                normal_form: nf,
                certificate: steps,
                basis: completed.basis,
                report: Some(completed.report),
            })
        }
    }
}

/// The normal form of `f` modulo the completed basis of `rels`, inside the
/// GDN algebra. Convenience wrapper over [`member_gdn`].
pub fn nf_gdn(f: &Polynomial, rels: &RelationSet, mode: GdnMode) -> Result<Polynomial, Error> {
    Ok(member_gdn(f, rels, mode)?.normal_form)
}
