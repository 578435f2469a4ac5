//! Generators and differential variables.
//!
//! An alphabet `X = {x_1 < x_2 < ...}` is fixed up front as a
//! [`GeneratorSet`]; the declaration order is the well-order used by every
//! comparison in the crate. A differential variable `x[i]` ([`DVar`]) stands
//! for the generator `x` hit `i + 1` times by the derivation, so `x[-1]` is
//! the generator itself, `x[0]` its first derivative, and so on.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::Error;

/// Index of a generator inside a [`GeneratorSet`].
///
/// Generators are dense indices `0..n`; ascending index is the generator
/// well-order (declaration order).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Generator(pub u32);

impl Generator {
    /// The generator as a bracket `-1` differential variable.
    pub fn var(self) -> DVar {
        DVar::new(self, -1)
    }
}

/// An ordered alphabet of named generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorSet {
    names: Vec<String>,
}

impl GeneratorSet {
    /// Builds an alphabet from names in ascending order.
    ///
    /// Names must be nonempty ASCII identifiers (`[A-Za-z_][A-Za-z0-9_]*`),
    /// pairwise distinct, and must avoid the reserved words `o` (circle
    /// product) and `D` (derivation) so that rendered polynomials can be
    /// parsed back unambiguously.
    pub fn new<I, S>(names: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let names: Vec<String> = names.into_iter().map(|s| s.as_ref().to_string()).collect();
        if names.is_empty() {
            return Err(Error::EmptyGeneratorSet);
        }
        for name in &names {
            if !is_valid_name(name) {
                return Err(Error::InvalidGeneratorName(name.clone()));
            }
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateGeneratorName(name.clone()));
            }
        }
        Ok(GeneratorSet { names })
    }

    /// Number of generators.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Name of a generator. Panics if the index is out of range.
    pub fn name(&self, g: Generator) -> &str {
        &self.names[g.0 as usize]
    }

    /// Looks a generator up by name.
    pub fn index_of(&self, name: &str) -> Option<Generator> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Generator(i as u32))
    }

    /// All generators in ascending order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Generator> + '_ {
        (0..self.names.len() as u32).map(Generator)
    }

    /// All names in ascending generator order.
    pub fn names(&self) -> &[String] {
        &self.names
    }
}

fn is_valid_name(name: &str) -> bool {
    if name == "o" || name == "D" {
        return false;
    }
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A differential variable `x[i]`: generator `x` under `i + 1` applications
/// of the derivation. Brackets start at `-1` (the bare generator).
///
/// Variables compare by `(bracket, generator)` lexicographically, so
/// `x[i] < y[j]` iff `i < j`, or `i == j` and `x < y`. Field order below is
/// load-bearing: the derived `Ord` implements exactly this comparison.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DVar {
    bracket: i32,
    gen: Generator,
}

impl DVar {
    /// Creates `gen[bracket]`. Panics if `bracket < -1`.
    pub fn new(gen: Generator, bracket: i32) -> Self {
        assert!(bracket >= -1, "differential variable bracket must be >= -1");
        DVar { bracket, gen }
    }

    pub fn gen(self) -> Generator {
        self.gen
    }

    pub fn bracket(self) -> i32 {
        self.bracket
    }

    /// The variable with its bracket raised by `t` (its `t`-th derivative).
    pub fn shifted(self, t: u32) -> Self {
        DVar {
            bracket: self.bracket + t as i32,
            gen: self.gen,
        }
    }

    /// Weight contribution: the bracket itself.
    pub fn weight(self) -> i64 {
        self.bracket as i64
    }

    /// `D∪X`-length contribution: `bracket + 2 >= 1`.
    pub fn dx_len(self) -> u32 {
        (self.bracket + 2) as u32
    }

    /// Renders the variable with its generator name, e.g. `a[-1]`, `b[2]`.
    pub fn display<'a>(self, gens: &'a GeneratorSet) -> DVarDisplay<'a> {
        DVarDisplay { var: self, gens }
    }
}

/// Display adaptor pairing a [`DVar`] with its alphabet.
pub struct DVarDisplay<'a> {
    var: DVar,
    gens: &'a GeneratorSet,
}

impl fmt::Display for DVarDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.gens.name(self.var.gen), self.var.bracket)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_set_validates_names() {
        assert!(GeneratorSet::new(["a", "b"]).is_ok());
        assert_eq!(GeneratorSet::new::<[&str; 0], &str>([]), Err(Error::EmptyGeneratorSet));
        assert_eq!(
            GeneratorSet::new(["a", "a"]),
            Err(Error::DuplicateGeneratorName("a".into()))
        );
        assert_eq!(
            GeneratorSet::new(["o"]),
            Err(Error::InvalidGeneratorName("o".into()))
        );
        assert_eq!(
            GeneratorSet::new(["D"]),
            Err(Error::InvalidGeneratorName("D".into()))
        );
        assert_eq!(
            GeneratorSet::new(["1a"]),
            Err(Error::InvalidGeneratorName("1a".into()))
        );
        assert_eq!(
            GeneratorSet::new(["a b"]),
            Err(Error::InvalidGeneratorName("a b".into()))
        );
        assert!(GeneratorSet::new(["e1", "e2", "e3", "e4"]).is_ok());
    }

    #[test]
    fn dvar_order_is_bracket_then_generator() {
        let a = Generator(0);
        let b = Generator(1);
        // a[-1] < b[-1] < a[0] < b[0] < a[1] ...
        assert!(DVar::new(a, -1) < DVar::new(b, -1));
        assert!(DVar::new(b, -1) < DVar::new(a, 0));
        assert!(DVar::new(a, 0) < DVar::new(b, 0));
        assert!(DVar::new(b, 0) < DVar::new(a, 1));
    }

    #[test]
    fn dvar_stats() {
        let a = Generator(0);
        assert_eq!(DVar::new(a, -1).weight(), -1);
        assert_eq!(DVar::new(a, -1).dx_len(), 1);
        assert_eq!(DVar::new(a, 3).weight(), 3);
        assert_eq!(DVar::new(a, 3).dx_len(), 5);
        assert_eq!(DVar::new(a, 0).shifted(2), DVar::new(a, 2));
    }

    #[test]
    fn dvar_display_is_explicit() {
        let gens = GeneratorSet::new(["a", "b"]).unwrap();
        let shown = alloc::format!("{}", DVar::new(Generator(0), -1).display(&gens));
        assert_eq!(shown, "a[-1]");
        let shown = alloc::format!("{}", DVar::new(Generator(1), 4).display(&gens));
        assert_eq!(shown, "b[4]");
    }
}
