//! Polynomials of the free commutative differential algebra, with exact
//! rational coefficients.
//!
//! A [`Polynomial`] is a finite map from [`Monomial`]s to nonzero
//! [`Coeff`]s (arbitrary-precision rationals — the crate never touches
//! floating point). The map is ordered by the monomial well-order, so the
//! leading term is simply the last entry.
//!
//! The derivation `D` acts by the Leibniz rule, one step at a time; the
//! circle product is `f o g = D(f) * g`. Under the circle product the
//! algebra is a right Gelfand-Dorfman-Novikov algebra, which is what the
//! [`crate::gdn`] layer builds on.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;
use crate::vars::GeneratorSet;
use crate::Error;

/// Exact rational coefficient.
pub type Coeff = num_rational::BigRational;

/// Convenience: an integer as a [`Coeff`].
pub fn rat(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

/// Convenience: the fraction `n / d` as a [`Coeff`]. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Coeff {
    Coeff::new(BigInt::from(n), BigInt::from(d))
}

/// A polynomial in the differential variables: finitely many monomials with
/// nonzero rational coefficients. The default value is the zero polynomial.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial::default()
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Polynomial::constant(Coeff::one())
    }

    /// A constant polynomial.
    pub fn constant(c: Coeff) -> Self {
        Polynomial::from_term(Monomial::one(), c)
    }

    /// The polynomial `1 * m`.
    pub fn from_monomial(m: Monomial) -> Self {
        Polynomial::from_term(m, Coeff::one())
    }

    /// The polynomial `c * m` (zero if `c == 0`).
    pub fn from_term(m: Monomial, c: Coeff) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial by accumulating arbitrary `(monomial, coeff)`
    /// pairs; repeated monomials add up, zero sums vanish.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Coeff)>>(terms: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of monomials with nonzero coefficient.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    /// Terms in descending monomial order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter().rev()
    }

    /// Iterates over the monomials in ascending order.
    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// Coefficient of a monomial (`None` when absent).
    pub fn coeff(&self, m: &Monomial) -> Option<&Coeff> {
        self.terms.get(m)
    }

    /// Leading term: the largest monomial and its coefficient.
    /// The zero polynomial has no leading term.
    pub fn leading(&self) -> Result<(&Monomial, &Coeff), Error> {
        self.terms
            .iter()
            .next_back()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * g`.
    pub fn add_scaled(&mut self, c: &Coeff, g: &Polynomial) {
        if c.is_zero() {
            return;
        }
        for (m, gc) in &g.terms {
            self.add_term(m.clone(), c * gc);
        }
    }

    /// `self += c * u * g` — the fused S-word update used by reduction.
    pub fn add_scaled_mul(&mut self, c: &Coeff, u: &Monomial, g: &Polynomial) {
        if c.is_zero() {
            return;
        }
        for (m, gc) in &g.terms {
            self.add_term(u.mul(m), c * gc);
        }
    }

    /// Multiplies by a scalar.
    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    /// Multiplies by a single term `c * u`.
    pub fn mul_term(&self, u: &Monomial, c: &Coeff) -> Polynomial {
        let mut out = Polynomial::zero();
        out.add_scaled_mul(c, u, self);
        out
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(mut self) -> Polynomial {
        self.make_monic();
        self
    }

    /// Divides by the leading coefficient in place.
    pub fn make_monic(&mut self) {
        let Some((_, lc)) = self.terms.iter().next_back() else {
            return;
        };
        if lc.is_one() {
            return;
        }
        let inv = lc.recip();
        for c in self.terms.values_mut() {
            *c *= &inv;
        }
    }

    /// One Leibniz step of the derivation.
    pub fn derive_once(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            for run_index in 0..m.runs().len() {
                let mult = m.runs()[run_index].1;
                out.add_term(m.bump_run_once(run_index), c * rat(mult as i64));
            }
        }
        out
    }

    /// The `t`-th derivative, computed as `t` single Leibniz steps.
    pub fn derive(&self, t: u32) -> Polynomial {
        let mut out = self.clone();
        for _ in 0..t {
            out = out.derive_once();
        }
        out
    }

    /// Circle product `self o g = D(self) * g`.
    pub fn circle(&self, g: &Polynomial) -> Polynomial {
        &self.derive(1) * g
    }

    /// `self^n` by repeated multiplication; `n == 0` gives `1`.
    pub fn pow(&self, n: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Leading term of the `t`-th derivative, without computing the
    /// derivative: the top variable of the leading monomial gets its bracket
    /// raised by `t`, and the coefficient picks up the top run multiplicity
    /// (once — later steps bump a multiplicity-one variable).
    ///
    /// Errors with [`Error::ZeroPolynomial`] when there is no such term:
    /// on the zero polynomial, and on constants for `t >= 1` (their
    /// derivative is zero).
    pub fn leading_of_derived(&self, t: u32) -> Result<(Monomial, Coeff), Error> {
        let (lm, lc) = self.leading()?;
        if t == 0 {
            return Ok((lm.clone(), lc.clone()));
        }
        if lm.is_one() {
            // Leading monomial 1 means the polynomial is a constant.
            return Err(Error::ZeroPolynomial);
        }
        let mult = lm.runs()[0].1;
        Ok((lm.bump_top(t), lc * rat(mult as i64)))
    }

    /// The common weight of all monomials, or `None` when the polynomial is
    /// zero or mixes weights.
    pub fn uniform_weight(&self) -> Option<i64> {
        let mut it = self.terms.keys();
        let w = it.next()?.weight();
        it.all(|m| m.weight() == w).then_some(w)
    }

    /// The common `D∪X`-length of all monomials, or `None` when the
    /// polynomial is zero or mixes lengths.
    pub fn uniform_dx(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.dx_len();
        it.all(|m| m.dx_len() == d).then_some(d)
    }

    /// Largest `D∪X`-length over the monomials (`None` for zero).
    pub fn max_dx(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::dx_len).max()
    }

    /// Whether every monomial has weight `-1` (vacuously true for zero):
    /// exactly the elements of the GDN subalgebra.
    pub fn is_weight_minus_one(&self) -> bool {
        self.terms.keys().all(|m| m.weight() == -1)
    }

    /// A deterministic total order on polynomials (map order on the term
    /// lists). Unrelated to the monomial order on leading terms; used only
    /// for canonical sorting of relation sets.
    pub fn canonical_cmp(&self, other: &Polynomial) -> Ordering {
        self.terms.cmp(&other.terms)
    }

    /// Renders in canonical text form: terms in decreasing monomial order,
    /// rational coefficients as `p` or `p/q`.
    pub fn display<'a>(&'a self, gens: &'a GeneratorSet) -> PolynomialDisplay<'a> {
        PolynomialDisplay { poly: self, gens }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

/// Free-function spelling of the circle product `f o g = D(f) * g`.
pub fn circle(f: &Polynomial, g: &Polynomial) -> Polynomial {
    f.circle(g)
}

/// Display adaptor pairing a [`Polynomial`] with its alphabet.
pub struct PolynomialDisplay<'a> {
    poly: &'a Polynomial,
    gens: &'a GeneratorSet,
}

impl fmt::Display for PolynomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.poly.terms_desc().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", m.display(self.gens))?;
            } else {
                write!(f, "{mag}*{}", m.display(self.gens))?;
            }
        }
        Ok(())
    }
}

/// Collects owned terms of a polynomial (descending), mainly for tests.
impl From<Polynomial> for Vec<(Monomial, Coeff)> {
    fn from(p: Polynomial) -> Self {
        p.terms.into_iter().rev().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vars::{DVar, Generator};
    use alloc::format;

    fn a(b: i32) -> DVar {
        DVar::new(Generator(0), b)
    }

    fn mono(brs: &[i32]) -> Monomial {
        Monomial::from_vars(brs.iter().map(|&b| a(b)))
    }

    fn pmono(brs: &[i32]) -> Polynomial {
        Polynomial::from_monomial(mono(brs))
    }

    #[test]
    fn leading_is_the_largest_monomial() {
        let p = Polynomial::from_terms([
            (mono(&[0, 0, -1]), rat(2)),
            (mono(&[1, -1, -1]), rat(1)),
        ]);
        let (lm, lc) = p.leading().unwrap();
        assert_eq!(lm, &mono(&[1, -1, -1]));
        assert_eq!(lc, &rat(1));
        assert_eq!(Polynomial::zero().leading(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn arithmetic_cancels_exactly() {
        let p = pmono(&[0, -1]);
        let q = &(&p + &p) - &p.scale(&rat(2));
        assert!(q.is_zero());
        let r = &p * &pmono(&[1]);
        assert_eq!(r, pmono(&[1, 0, -1]));
        assert_eq!(p.pow(0), Polynomial::one());
        assert_eq!(p.pow(2), &p * &p);
    }

    #[test]
    fn derivation_follows_the_leibniz_rule_on_examples() {
        // D(a[-1]) = a[0]; D(1) = 0.
        assert_eq!(pmono(&[-1]).derive(1), pmono(&[0]));
        assert!(Polynomial::one().derive(1).is_zero());

        // D(a[0]*a[-1]) = a[1]*a[-1] + a[0]^2.
        let f = pmono(&[0, -1]);
        let df = &pmono(&[1, -1]) + &pmono(&[0, 0]);
        assert_eq!(f.derive(1), df);

        // D^2(a[0]*a[-1]) = a[2]*a[-1] + 3*a[1]*a[0].
        let d2f = &pmono(&[2, -1]) + &pmono(&[1, 0]).scale(&rat(3));
        assert_eq!(f.derive(2), d2f);

        // D(a[0]^3) = 3*a[1]*a[0]^2.
        assert_eq!(
            pmono(&[0, 0, 0]).derive(1),
            pmono(&[1, 0, 0]).scale(&rat(3))
        );
        // D^2(a[0]^3) = 3*a[2]*a[0]^2 + 6*a[1]^2*a[0].
        assert_eq!(
            pmono(&[0, 0, 0]).derive(2),
            &pmono(&[2, 0, 0]).scale(&rat(3)) + &pmono(&[1, 1, 0]).scale(&rat(6))
        );
    }

    #[test]
    fn derivation_is_a_derivation_for_products() {
        let f = &pmono(&[1, -1]) + &pmono(&[0]).scale(&rat(2));
        let g = &pmono(&[0, 0]) - &Polynomial::one().scale(&ratio(1, 3));
        let lhs = (&f * &g).derive(1);
        let rhs = &(&f.derive(1) * &g) + &(&f * &g.derive(1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn circle_products_match_hand_expansion() {
        let gen = pmono(&[-1]);
        // a o a = a[0]*a[-1].
        let f = gen.circle(&gen);
        assert_eq!(f, pmono(&[0, -1]));
        // (a o a) o a = a[1]*a[-1]^2 + a[0]^2*a[-1].
        let f2 = f.circle(&gen);
        assert_eq!(f2, &pmono(&[1, -1, -1]) + &pmono(&[0, 0, -1]));
        // a o (a o a) = a[0]^2*a[-1].
        assert_eq!(gen.circle(&f), pmono(&[0, 0, -1]));
        // ((a o a) o a) o a = a[2]*a[-1]^3 + 4*a[1]*a[0]*a[-1]^2 + a[0]^3*a[-1].
        let f3 = f2.circle(&gen);
        let expected = Polynomial::from_terms([
            (mono(&[2, -1, -1, -1]), rat(1)),
            (mono(&[1, 0, -1, -1]), rat(4)),
            (mono(&[0, 0, 0, -1]), rat(1)),
        ]);
        assert_eq!(f3, expected);
    }

    #[test]
    fn leading_of_derived_matches_the_true_leading_term() {
        // a o a: leading of D^2 is a[2]*a[-1] with coefficient 1.
        let f = pmono(&[0, -1]);
        let (m, c) = f.leading_of_derived(2).unwrap();
        assert_eq!(m, mono(&[2, -1]));
        assert_eq!(c, rat(1));

        // a[0]^3: leading of D is a[1]*a[0]^2 with coefficient 3.
        let g = pmono(&[0, 0, 0]);
        let (m, c) = g.leading_of_derived(1).unwrap();
        assert_eq!(m, mono(&[1, 0, 0]));
        assert_eq!(c, rat(3));

        // Against the full derivative, including a mixed-sign polynomial.
        let h = &pmono(&[1, 0, -1]).scale(&rat(-2)) + &pmono(&[0, 0, 0]);
        for t in 0..=5 {
            let derived = h.derive(t);
            let (lm, lc) = derived.leading().unwrap();
            let (sm, sc) = h.leading_of_derived(t).unwrap();
            assert_eq!((&sm, &sc), (lm, lc), "shift {t}");
        }

        // Constants lose their leading term under differentiation.
        assert_eq!(
            Polynomial::one().leading_of_derived(1),
            Err(Error::ZeroPolynomial)
        );
        assert_eq!(
            Polynomial::zero().leading_of_derived(0),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn homogeneity_probes() {
        let f = &pmono(&[1, -1]) + &pmono(&[0, 0]);
        assert_eq!(f.uniform_weight(), Some(0));
        assert_eq!(f.uniform_dx(), Some(4));
        let g = &pmono(&[0, -1]) - &pmono(&[-1]);
        assert_eq!(g.uniform_weight(), Some(-1));
        assert_eq!(g.uniform_dx(), None);
        assert_eq!(g.max_dx(), Some(3));
        assert!(g.is_weight_minus_one());
        assert!(!f.is_weight_minus_one());
        assert!(Polynomial::zero().is_weight_minus_one());
        assert_eq!(Polynomial::zero().uniform_weight(), None);
    }

    #[test]
    fn display_is_canonical() {
        let gens = GeneratorSet::new(["a"]).unwrap();
        let f = Polynomial::from_terms([
            (mono(&[1, -1, -1]), rat(1)),
            (mono(&[0, 0, -1]), rat(-2)),
            (Monomial::one(), ratio(1, 3)),
        ]);
        assert_eq!(
            format!("{}", f.display(&gens)),
            "a[1]*a[-1]^2 - 2*a[0]^2*a[-1] + 1/3"
        );
        assert_eq!(format!("{}", Polynomial::zero().display(&gens)), "0");
        let neg = pmono(&[0]).scale(&ratio(-1, 2));
        assert_eq!(format!("{}", neg.display(&gens)), "-1/2*a[0]");
        assert_eq!(
            format!("{}", Polynomial::one().display(&gens)),
            "1"
        );
    }

    #[test]
    fn monic_divides_through() {
        let f = &pmono(&[1, -1]).scale(&rat(-3)) + &pmono(&[0, 0]);
        let m = f.monic();
        let (lm, lc) = m.leading().unwrap();
        assert_eq!(lm, &mono(&[1, -1]));
        assert!(lc.is_one());
        assert_eq!(m.coeff(&mono(&[0, 0])), Some(&ratio(-1, 3)));
    }
}
