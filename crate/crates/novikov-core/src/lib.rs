//! Gröbner-Shirshov bases for free commutative differential algebras and
//! free (right) Gelfand-Dorfman-Novikov algebras, over exact rationals.
//!
//! The ambient object is the free commutative differential algebra `k{X}`
//! on a finite ordered alphabet `X`: the polynomial algebra on differential
//! variables `x[i]` (`x` in `X`, `i >= -1`), where `x[-1]` is the generator
//! itself and the derivation `D` sends `x[i]` to `x[i+1]` and acts on
//! products by the Leibniz rule. The circle product `f o g = D(f) * g` makes
//! `k{X}` a right Gelfand-Dorfman-Novikov (GDN) algebra, and the span of the
//! weight `-1` monomials is the free GDN algebra on `X`.
//!
//! The crate provides:
//!
//! * exact arithmetic in `k{X}` ([`Polynomial`], [`Monomial`], [`DVar`]),
//!   the monomial well-order, derivation and circle product;
//! * rewriting machinery: shifted divisors, S-words, deterministic normal
//!   forms with reduction certificates ([`reduce`]);
//! * completion: compositions (critical pairs), minimalization, a staged
//!   completion for `D∪X`-homogeneous relation sets with a stage-stability
//!   guarantee, a capped completion for arbitrary sets, and exact or bounded
//!   ideal-membership tests ([`complete`]);
//! * the GDN layer: circle-expression embedding, the GDN identities,
//!   weight `-1` critical multiples, a bounded GDN Gröbner-Shirshov basis
//!   check, GDN membership, and a brute-force linear-algebra span oracle
//!   ([`gdn`], [`critical`]);
//! * the tableau linear basis of the free GDN algebra ([`tableau`]).
//!
//! Everything is deterministic: no hashing, no randomness, no floats. The
//! crate is `no_std` + `alloc` compatible (the default `std` feature only
//! forwards to the numeric dependencies).

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

use alloc::string::String;
use core::fmt;

pub mod complete;
pub mod critical;
pub mod enumerate;
pub mod gdn;
pub mod monomial;
pub mod poly;
pub mod reduce;
pub mod rels;
pub mod tableau;
pub mod vars;

pub use complete::{
    buchberger_capped, complete_homogeneous, composition, is_trivial, member_diff, minimalize,
    CapReport, CappedCompletion, CompletionState, Composition, Membership, Provenance,
    StageRecord,
};
pub use critical::{check_gsb_gdn, critical_multiples, CriticalMultiple, GdnCheckReport,
    NontrivialComposition, PaddingCase};
pub use enumerate::{irr_enumerate, monomials_dx_at_most};
pub use gdn::{
    check_identities, member_gdn, nf_gdn, span_oracle, GdnExpr, GdnMembership, GdnMode, IdealKind,
};
pub use monomial::Monomial;
pub use poly::{circle, rat, ratio, Coeff, Polynomial};
pub use reduce::{certificate_value, Reducer, SWord, SWordStep};
pub use rels::RelationSet;
pub use tableau::Tableau;
pub use vars::{DVar, Generator, GeneratorSet};

/// Errors reported by the algebraic core.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Error {
    /// The zero polynomial has no leading term.
    ZeroPolynomial,
    /// A generator set must contain at least one generator.
    EmptyGeneratorSet,
    /// Generator names must be nonempty ASCII identifiers and must not
    /// collide with the reserved words `o` and `D`.
    InvalidGeneratorName(String),
    /// Generator names must be pairwise distinct.
    DuplicateGeneratorName(String),
    /// Relation sets must not contain the zero polynomial (index given).
    ZeroRelation(usize),
    /// The operation needs every relation to be `D∪X`-homogeneous (all
    /// monomials of a relation share one `D∪X`-length). For mixed input use
    /// the capped completion instead.
    NotDxHomogeneous,
    /// The operation works inside the GDN subalgebra: every polynomial
    /// involved must be a combination of weight `-1` monomials.
    NotWeightMinusOne,
    /// Tableau degrees are positive integers.
    InvalidDegree,
    /// A tableau violated a shape or filling rule.
    InvalidTableau(&'static str),
    /// The requested enumeration has no finiteness bound (neither a weight
    /// restriction nor a `D∪X`-length bound was given).
    MissingBound,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroPolynomial => write!(f, "no leading term: zero polynomial"),
            Error::EmptyGeneratorSet => write!(f, "generator set is empty"),
            Error::InvalidGeneratorName(name) => write!(
                f,
                "invalid generator name {name:?}: expected an ASCII identifier other than the reserved words `o` and `D`"
            ),
            Error::DuplicateGeneratorName(name) => {
                write!(f, "duplicate generator name {name:?}")
            }
            Error::ZeroRelation(i) => write!(f, "relation {i} is the zero polynomial"),
            Error::NotDxHomogeneous => write!(
                f,
                "relation set is not D∪X-homogeneous; the staged exact procedure does not apply — use the capped completion (buchberger_capped) for a bounded answer"
            ),
            Error::NotWeightMinusOne => write!(
                f,
                "not a weight -1 element: GDN operations require combinations of weight -1 monomials"
            ),
            Error::InvalidDegree => write!(f, "degree must be a positive integer"),
            Error::InvalidTableau(why) => write!(f, "invalid tableau: {why}"),
            Error::MissingBound => write!(
                f,
                "enumeration is unbounded: restrict the weight or give a D∪X-length bound"
            ),
        }
    }
}

impl core::error::Error for Error {}
