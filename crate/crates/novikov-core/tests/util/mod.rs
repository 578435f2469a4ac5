//! Shared fixtures and seeded samplers for the acceptance suite.

use novikov_core::{
    ratio, Coeff, DVar, Generator, GeneratorSet, Monomial, Polynomial, RelationSet,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn sample_monomial(
    rng: &mut ChaCha8Rng,
    gens: u32,
    max_len: usize,
    max_bracket: i32,
) -> Monomial {
    let len = rng.gen_range(0..=max_len);
    Monomial::from_vars((0..len).map(|_| {
        DVar::new(
            Generator(rng.gen_range(0..gens)),
            rng.gen_range(-1..=max_bracket),
        )
    }))
}

pub fn sample_coeff(rng: &mut ChaCha8Rng) -> Coeff {
    let n = [-7i64, -3, -2, -1, 1, 2, 3, 5][rng.gen_range(0..8)];
    ratio(n, rng.gen_range(1..=6))
}

pub fn sample_poly(
    rng: &mut ChaCha8Rng,
    gens: u32,
    max_terms: usize,
    max_len: usize,
    max_bracket: i32,
) -> Polynomial {
    let terms = rng.gen_range(0..=max_terms);
    Polynomial::from_terms((0..terms).map(|_| {
        (
            sample_monomial(rng, gens, max_len, max_bracket),
            sample_coeff(rng),
        )
    }))
}

/// `{a o a}` over a single letter: the running homogeneous example.
pub fn circle_square() -> RelationSet {
    let gens = GeneratorSet::new(["a"]).unwrap();
    let a = Polynomial::from_monomial(Monomial::var(DVar::new(Generator(0), -1)));
    let rel = a.circle(&a);
    RelationSet::new(gens, vec![rel]).unwrap()
}

/// The four-letter multiplication-table relations: `e_i o e_j` equals
/// `e3` for `(2,1)`, `e4` for `(3,1)` and `0` otherwise, in row-major order.
pub fn four_dim_table() -> RelationSet {
    let gens = GeneratorSet::new(["e1", "e2", "e3", "e4"]).unwrap();
    let mut rels = Vec::new();
    for i in 0..4u32 {
        for j in 0..4u32 {
            let lhs = Monomial::from_vars([
                DVar::new(Generator(i), 0),
                DVar::new(Generator(j), -1),
            ]);
            let mut rel = Polynomial::from_monomial(lhs);
            let delta = match (i, j) {
                (1, 0) => Some(2u32), // e2 o e1 = e3
                (2, 0) => Some(3u32), // e3 o e1 = e4
                _ => None,
            };
            if let Some(g) = delta {
                let rhs = Polynomial::from_monomial(Monomial::var(DVar::new(Generator(g), -1)));
                rel = &rel - &rhs;
            }
            rels.push(rel);
        }
    }
    RelationSet::new(gens, rels).unwrap()
}

/// Partition counts by the classic coin-change recurrence, independent of
/// any enumeration the library performs.
pub fn partition_count(n: usize) -> u64 {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for m in part..=n {
            p[m] += p[m - part];
        }
    }
    p[n]
}

/// All weight `-1` monomials of exact length `d` over the alphabet.
pub fn weight_minus_one_monomials(gens: &GeneratorSet, d: u32) -> Vec<Monomial> {
    novikov_core::monomials_dx_at_most(gens, 2 * d - 1)
        .into_iter()
        .filter(|m| m.len() == d as usize && m.weight() == -1)
        .collect()
}
