//! Tableau basis of the free GDN algebra.
//!
//! A tableau of degree `d` is built on a partition `λ₁ ≥ … ≥ λ_p ≥ 1` of
//! `d - 1`: row 1 carries `λ₁ + 1` boxes (one extra), row `i ≥ 2` carries
//! `λ_i` boxes (for `d = 1` there is a single degenerate one-box row). Boxes
//! hold generators, subject to two filling rules:
//!
//! * (a) within a run of rows of equal part, first-column entries do not
//!   ascend going down;
//! * (b) reading the row tails (everything right of the first column)
//!   bottom row first, left to right, gives a non-decreasing sequence.
//!
//! Each row encodes the left-normed chain `(…(y₁ ∘ y₂) ∘ …) ∘ y_m` of its
//! entries and the tableau the right-normed column product
//! `Y_p ∘ (Y_{p-1} ∘ (… ∘ (Y₂ ∘ Y₁)…))`. Evaluated in `k{X}`, the leading
//! monomial takes the first column of row `i` with bracket `λ_i - 1` and
//! every tail box with bracket `-1`; the filling rules make tableaux of
//! degree `d` biject with the weight `-1` monomials of length `d`. Being
//! triangular over a monomial basis, the tableaux form a linear basis of
//! the free GDN algebra.

use alloc::vec::Vec;

use crate::gdn::GdnExpr;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::vars::{DVar, Generator, GeneratorSet};
use crate::Error;

/// A filled tableau. Rows are stored top to bottom, first column first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tableau {
    rows: Vec<Vec<Generator>>,
}

impl Tableau {
    /// Validates shape and filling rules.
    pub fn new(rows: Vec<Vec<Generator>>) -> Result<Self, Error> {
        if rows.is_empty() {
            return Err(Error::InvalidTableau("a tableau needs at least one row"));
        }
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::InvalidTableau("rows must be nonempty"));
        }
        let t = Tableau { rows };
        let parts = t.parts();
        if t.rows.len() > 1 || t.rows[0].len() > 1 {
            if parts[0] == 0 {
                return Err(Error::InvalidTableau(
                    "row 1 needs its extra box: two boxes at least",
                ));
            }
            if parts.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidTableau("parts must not increase"));
            }
        }
        for (i, w) in parts.windows(2).enumerate() {
            if w[0] == w[1] && t.rows[i][0] < t.rows[i + 1][0] {
                return Err(Error::InvalidTableau(
                    "first column ascends within an equal-part class",
                ));
            }
        }
        let mut last: Option<Generator> = None;
        for row in t.rows.iter().rev() {
            for &g in &row[1..] {
                if last.is_some_and(|prev| g < prev) {
                    return Err(Error::InvalidTableau(
                        "tails must read non-decreasing bottom-up",
                    ));
                }
                last = Some(g);
            }
        }
        Ok(t)
    }

    /// Partition parts: row 1 contributes its length minus the extra box.
    fn parts(&self) -> Vec<usize> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, r)| if i == 0 { r.len() - 1 } else { r.len() })
            .collect()
    }

    pub fn rows(&self) -> &[Vec<Generator>] {
        &self.rows
    }

    /// Total number of boxes.
    pub fn degree(&self) -> u32 {
        self.rows.iter().map(|r| r.len() as u32).sum()
    }

    /// The leading monomial of [`Tableau::to_poly`], by the closed form:
    /// first column of row `i` at bracket `λ_i - 1`, tails at bracket `-1`.
    pub fn leading(&self) -> Monomial {
        let mut vars = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            let part = if i == 0 { row.len() - 1 } else { row.len() };
            vars.push(DVar::new(row[0], part as i32 - 1));
            for &g in &row[1..] {
                vars.push(DVar::new(g, -1));
            }
        }
        Monomial::from_vars(vars)
    }

    /// The circle expression: rows as left-normed chains, composed
    /// `Y_p ∘ (… ∘ (Y₂ ∘ Y₁))`.
    pub fn to_expr(&self) -> GdnExpr {
        let mut acc = chain(&self.rows[0]);
        for row in &self.rows[1..] {
            acc = GdnExpr::circle(chain(row), acc);
        }
        acc
    }

    /// The tableau evaluated in `k{X}`.
    pub fn to_poly(&self) -> Polynomial {
        self.to_expr().to_poly()
    }

    /// The unique tableau whose leading monomial is `m`; `m` must have
    /// weight `-1`. Inverse of [`Tableau::leading`].
    pub fn from_leading_monomial(m: &Monomial) -> Result<Tableau, Error> {
        if m.weight() != -1 {
            return Err(Error::NotWeightMinusOne);
        }
        // iter_vars yields variables in descending order, which is exactly
        // (bracket desc, letter desc) — the row order.
        let positives: Vec<DVar> = m.iter_vars().filter(|v| v.bracket() >= 0).collect();
        let mut negatives: Vec<Generator> = m
            .iter_vars()
            .filter(|v| v.bracket() == -1)
            .map(DVar::gen)
            .collect();
        negatives.reverse(); // ascending letters
        if positives.is_empty() {
            // Weight -1 without positive brackets: a single generator.
            debug_assert_eq!(negatives.len(), 1);
            return Ok(Tableau {
                rows: alloc::vec![alloc::vec![negatives[0]]],
            });
        }
        let p = positives.len();
        let sizes: Vec<usize> = positives
            .iter()
            .enumerate()
            .map(|(i, v)| v.bracket() as usize + usize::from(i == 0))
            .collect();
        debug_assert_eq!(sizes.iter().sum::<usize>(), negatives.len());
        let mut rows: Vec<Vec<Generator>> = alloc::vec![Vec::new(); p];
        let mut offset = 0;
        for i in (0..p).rev() {
            let mut row = alloc::vec![positives[i].gen()];
            row.extend_from_slice(&negatives[offset..offset + sizes[i]]);
            offset += sizes[i];
            rows[i] = row;
        }
        Tableau::new(rows)
    }

    /// All tableaux of the given degree over the alphabet, ascending by
    /// leading monomial. Degree must be positive.
    pub fn enumerate(gens: &GeneratorSet, degree: u32) -> Result<Vec<Tableau>, Error> {
        if degree == 0 {
            return Err(Error::InvalidDegree);
        }
        let letters = gens.len() as u32;
        let mut out = Vec::new();
        if degree == 1 {
            for g in 0..letters {
                out.push(Tableau {
                    rows: alloc::vec![alloc::vec![Generator(g)]],
                });
            }
        } else {
            for parts in partitions(degree - 1) {
                let p = parts.len();
                // Head picks per maximal run of equal parts: non-ascending
                // letter sequences, combined across runs.
                let mut class_choices: Vec<Vec<Vec<u32>>> = Vec::new();
                let mut i = 0;
                while i < p {
                    let mut j = i;
                    while j < p && parts[j] == parts[i] {
                        j += 1;
                    }
                    class_choices.push(sequences(letters, j - i, false));
                    i = j;
                }
                let tail_len = degree as usize - p;
                for heads in cartesian(&class_choices) {
                    for tail in sequences(letters, tail_len, true) {
                        let mut rows: Vec<Vec<Generator>> = alloc::vec![Vec::new(); p];
                        let mut offset = 0;
                        for i in (0..p).rev() {
                            let size = parts[i] as usize - usize::from(i > 0);
                            let mut row = alloc::vec![Generator(heads[i])];
                            row.extend(tail[offset..offset + size].iter().map(|&g| Generator(g)));
                            offset += size;
                            rows[i] = row;
                        }
                        out.push(Tableau::new(rows).expect("enumerated tableaux are valid"));
                    }
                }
            }
        }
        out.sort_by(|a, b| a.leading().cmp(&b.leading()));
        Ok(out)
    }
}

/// Left-normed chain of a row.
fn chain(row: &[Generator]) -> GdnExpr {
    let mut it = row.iter();
    let mut acc = GdnExpr::gen(*it.next().expect("rows are nonempty"));
    for &g in it {
        acc = GdnExpr::circle(acc, GdnExpr::gen(g));
    }
    acc
}

/// Partitions of `n` into non-increasing positive parts, descending-lex.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for first in (1..=max.min(n)).rev() {
            cur.push(first);
            rec(n - first, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Non-decreasing (`ascending`) or non-ascending letter sequences of the
/// given length over `0..letters`.
fn sequences(letters: u32, len: usize, ascending: bool) -> Vec<Vec<u32>> {
    fn rec(letters: u32, len: usize, ascending: bool, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let bound = cur.last().copied();
        for g in 0..letters {
            let ok = match bound {
                None => true,
                Some(b) => {
                    if ascending {
                        g >= b
                    } else {
                        g <= b
                    }
                }
            };
            if ok {
                cur.push(g);
                rec(letters, len, ascending, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(letters, len, ascending, &mut Vec::new(), &mut out);
    out
}

/// Concatenated cartesian product of per-class choices.
fn cartesian(choices: &[Vec<Vec<u32>>]) -> Vec<Vec<u32>> {
    let mut acc: Vec<Vec<u32>> = alloc::vec![Vec::new()];
    for class in choices {
        let mut next = Vec::new();
        for prefix in &acc {
            for pick in class {
                let mut v = prefix.clone();
                v.extend_from_slice(pick);
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}
