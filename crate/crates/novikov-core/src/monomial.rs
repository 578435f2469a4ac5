//! Commutative monomials in the differential variables, and their well-order.
//!
//! A monomial is a finite multiset of [`DVar`]s, stored run-length encoded in
//! strictly descending variable order. Three statistics drive everything:
//! the *weight* (sum of brackets), the *length* (number of variables counted
//! with multiplicity), and the *`D∪X`-length* `weight + 2 * length` (the
//! total letter count when `x[i]` is spelled as `i + 1` copies of `D`
//! followed by `x`). The empty monomial `1` has all three equal to `0`.
//!
//! Monomials are compared first by length, then by their descending variable
//! sequences lexicographically. This is a monomial well-order compatible
//! with multiplication and with the derivation, which is what makes leading
//! terms and the whole rewriting theory behave.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::vars::{DVar, GeneratorSet};

/// A commutative monomial: a multiset of differential variables.
///
/// Internally a list of `(variable, multiplicity)` runs, strictly descending
/// in the variable order, every multiplicity positive. The empty list is the
/// unit monomial `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    runs: Vec<(DVar, u32)>,
}

impl Monomial {
    /// The unit monomial `1`.
    pub fn one() -> Self {
        Monomial { runs: Vec::new() }
    }

    /// The monomial consisting of a single variable.
    pub fn var(v: DVar) -> Self {
        Monomial { runs: alloc::vec![(v, 1)] }
    }

    /// Builds a monomial from an arbitrary iterator of variables.
    pub fn from_vars<I: IntoIterator<Item = DVar>>(vars: I) -> Self {
        let mut m = Monomial::one();
        for v in vars {
            m.insert(v, 1);
        }
        m
    }

    /// Builds a monomial from `(variable, multiplicity)` pairs in any order;
    /// zero multiplicities are dropped.
    pub fn from_runs<I: IntoIterator<Item = (DVar, u32)>>(runs: I) -> Self {
        let mut m = Monomial::one();
        for (v, k) in runs {
            m.insert(v, k);
        }
        m
    }

    fn insert(&mut self, v: DVar, k: u32) {
        if k == 0 {
            return;
        }
        // Runs are descending, so search for the insertion point from the top.
        match self.runs.binary_search_by(|(d, _)| v.cmp(d)) {
            Ok(i) => self.runs[i].1 += k,
            Err(i) => self.runs.insert(i, (v, k)),
        }
    }

    /// `true` for the unit monomial.
    pub fn is_one(&self) -> bool {
        self.runs.is_empty()
    }

    /// The `(variable, multiplicity)` runs in descending variable order.
    pub fn runs(&self) -> &[(DVar, u32)] {
        &self.runs
    }

    /// Variables in descending order, each repeated with its multiplicity.
    pub fn iter_vars(&self) -> impl Iterator<Item = DVar> + '_ {
        self.runs
            .iter()
            .flat_map(|&(v, k)| core::iter::repeat(v).take(k as usize))
    }

    /// The largest variable, if any.
    pub fn top(&self) -> Option<DVar> {
        self.runs.first().map(|&(v, _)| v)
    }

    /// The largest bracket occurring, if any.
    pub fn max_bracket(&self) -> Option<i32> {
        // Brackets dominate the variable order, so the top run carries it.
        self.top().map(DVar::bracket)
    }

    /// Length: number of variables counted with multiplicity.
    pub fn len(&self) -> usize {
        self.runs.iter().map(|&(_, k)| k as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_one()
    }

    /// Weight: sum of brackets with multiplicity.
    pub fn weight(&self) -> i64 {
        self.runs
            .iter()
            .map(|&(v, k)| v.weight() * k as i64)
            .sum()
    }

    /// `D∪X`-length: `weight + 2 * length`; zero only for the unit monomial.
    pub fn dx_len(&self) -> u32 {
        self.runs.iter().map(|&(v, k)| v.dx_len() * k).sum()
    }

    /// Multiset union (the commutative product).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        // Merge two descending run lists.
        let mut out = Vec::with_capacity(self.runs.len() + other.runs.len());
        let (mut i, mut j) = (0, 0);
        while i < self.runs.len() && j < other.runs.len() {
            let (a, ka) = self.runs[i];
            let (b, kb) = other.runs[j];
            match a.cmp(&b) {
                Ordering::Greater => {
                    out.push((a, ka));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b, kb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a, ka + kb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.runs[i..]);
        out.extend_from_slice(&other.runs[j..]);
        Monomial { runs: out }
    }

    /// Multiset difference: `Some(self / divisor)` when `divisor` is
    /// contained in `self` with multiplicity, else `None`.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.runs.len());
        let mut j = 0;
        for &(a, ka) in &self.runs {
            if j < divisor.runs.len() {
                let (b, kb) = divisor.runs[j];
                if a == b {
                    if kb > ka {
                        return None;
                    }
                    if ka > kb {
                        out.push((a, ka - kb));
                    }
                    j += 1;
                    continue;
                }
                if b > a {
                    // Divisor holds a variable larger than anything left here.
                    return None;
                }
            }
            out.push((a, ka));
        }
        if j < divisor.runs.len() {
            return None;
        }
        Some(Monomial { runs: out })
    }

    /// Whether `divisor` divides `self` as a multiset.
    pub fn is_divisible_by(&self, divisor: &Monomial) -> bool {
        self.checked_div(divisor).is_some()
    }

    /// Least common multiple: the multiset maximum.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.runs.len().max(other.runs.len()));
        let (mut i, mut j) = (0, 0);
        while i < self.runs.len() && j < other.runs.len() {
            let (a, ka) = self.runs[i];
            let (b, kb) = other.runs[j];
            match a.cmp(&b) {
                Ordering::Greater => {
                    out.push((a, ka));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b, kb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a, ka.max(kb)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.runs[i..]);
        out.extend_from_slice(&other.runs[j..]);
        Monomial { runs: out }
    }

    /// Whether the two monomials share at least one variable — equivalently,
    /// whether their least common multiple is shorter than their product.
    pub fn shares_variable(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.runs.len() && j < other.runs.len() {
            match self.runs[i].0.cmp(&other.runs[j].0) {
                Ordering::Greater => i += 1,
                Ordering::Less => j += 1,
                Ordering::Equal => return true,
            }
        }
        false
    }

    /// Leading monomial of the `t`-th derivative: one copy of the top
    /// variable gets its bracket raised by `t`. (All other Leibniz expansion
    /// terms are smaller in the monomial order.) Unit monomials are returned
    /// unchanged; their derivative has no leading monomial, which the caller
    /// must handle at the polynomial level.
    pub fn bump_top(&self, t: u32) -> Monomial {
        if t == 0 || self.runs.is_empty() {
            return self.clone();
        }
        let (top, k) = self.runs[0];
        let mut runs = Vec::with_capacity(self.runs.len() + 1);
        runs.push((top.shifted(t), 1));
        if k > 1 {
            runs.push((top, k - 1));
        }
        runs.extend_from_slice(&self.runs[1..]);
        Monomial { runs }
    }

    /// Replaces one copy of the variable at run `run_index` by its first
    /// derivative. Used by the Leibniz expansion.
    pub(crate) fn bump_run_once(&self, run_index: usize) -> Monomial {
        let (v, _) = self.runs[run_index];
        let mut m = self.clone();
        m.remove_one(run_index);
        m.insert(v.shifted(1), 1);
        m
    }

    fn remove_one(&mut self, run_index: usize) {
        if self.runs[run_index].1 > 1 {
            self.runs[run_index].1 -= 1;
        } else {
            self.runs.remove(run_index);
        }
    }

    /// Renders the monomial against an alphabet: descending variables joined
    /// by `*`, multiplicities as `^k`, the unit monomial as `1`.
    pub fn display<'a>(&'a self, gens: &'a GeneratorSet) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, gens }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter_vars().cmp(other.iter_vars()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Display adaptor pairing a [`Monomial`] with its alphabet.
pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    gens: &'a GeneratorSet,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        for (i, &(v, k)) in self.mono.runs.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", v.display(self.gens))?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}
