//! Generator tuples and numerical monoids.

use serde::Serialize;

use crate::apery::{residue_distances, AperySet};
use crate::error::{Error, Result};

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Sorted, deduplicated, positive generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GeneratorTuple {
    gens: Vec<u64>,
    /// Number of generators that are not combinations of the others.
    embedding_dimension: usize,
}

impl GeneratorTuple {
    pub fn new(raw: &[u64]) -> Result<Self> {
        let gens = normalize(raw)?;
        let embedding_dimension = minimal_generators(&gens)?.len();
        Ok(Self {
            gens,
            embedding_dimension,
        })
    }

    /// For tuples already known to be minimal, e.g. `n, n + r_1, ...` with
    /// `n > r_k`: any sum of two or more generators exceeds `2n > n + r_k`.
    fn new_known_minimal(raw: &[u64]) -> Result<Self> {
        let gens = normalize(raw)?;
        let embedding_dimension = gens.len();
        Ok(Self {
            gens,
            embedding_dimension,
        })
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_minimal(&self) -> bool {
        self.embedding_dimension == self.gens.len()
    }

    pub fn embedding_dimension(&self) -> usize {
        self.embedding_dimension
    }

    pub fn smallest(&self) -> u64 {
        self.gens[0]
    }

    pub fn largest(&self) -> u64 {
        *self.gens.last().unwrap()
    }
}

fn normalize(raw: &[u64]) -> Result<Vec<u64>> {
    if raw.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if raw.contains(&0) {
        return Err(Error::ZeroGenerator);
    }
    let mut gens = raw.to_vec();
    gens.sort_unstable();
    gens.dedup();
    Ok(gens)
}

/// Generators not representable by the smaller ones: `g` is redundant iff
/// `g - h` lies in the monoid for some smaller generator `h`, decided with
/// `Ap(M / d; n_1 / d)`. Elements below `g` never use `g` itself.
fn minimal_generators(sorted: &[u64]) -> Result<Vec<u64>> {
    let d = sorted.iter().fold(0, |acc, &g| gcd(acc, g));
    let quotient: Vec<u64> = sorted.iter().map(|g| g / d).collect();
    let modulus = quotient[0];
    let ap = residue_distances(&quotient, modulus, None)?;
    let member = |x: u64| x >= ap[(x % modulus) as usize];
    Ok(sorted
        .iter()
        .zip(&quotient)
        .enumerate()
        .filter(|&(i, (_, &g))| !quotient[..i].iter().any(|&h| h < g && member(g - h)))
        .map(|(_, (&g, _))| g)
        .collect())
}

/// A finitely generated submonoid of the non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct NumericalMonoid {
    gens: GeneratorTuple,
    gcd: u64,
}

impl NumericalMonoid {
    pub fn new(raw: &[u64]) -> Result<Self> {
        Ok(Self::from_tuple(GeneratorTuple::new(raw)?))
    }

    pub(crate) fn new_known_minimal(raw: &[u64]) -> Result<Self> {
        Ok(Self::from_tuple(GeneratorTuple::new_known_minimal(raw)?))
    }

    fn from_tuple(gens: GeneratorTuple) -> Self {
        let gcd = gens.as_slice().iter().fold(0, |acc, &g| gcd(acc, g));
        Self { gens, gcd }
    }

    pub fn generators(&self) -> &[u64] {
        self.gens.as_slice()
    }

    pub fn tuple(&self) -> &GeneratorTuple {
        &self.gens
    }

    pub fn gcd(&self) -> u64 {
        self.gcd
    }

    pub fn multiplicity(&self) -> u64 {
        self.gens.smallest()
    }

    pub fn is_primitive(&self) -> bool {
        self.gcd == 1
    }

    pub fn is_minimal(&self) -> bool {
        self.gens.is_minimal()
    }

    pub fn embedding_dimension(&self) -> usize {
        self.gens.embedding_dimension()
    }

    /// True for the monoid of all non-negative integers.
    pub fn is_trivial(&self) -> bool {
        self.multiplicity() == 1
    }

    /// `M / d`, the primitive monoid this one is a dilation of.
    pub fn primitive_quotient(&self) -> NumericalMonoid {
        if self.gcd == 1 {
            return self.clone();
        }
        let gens: Vec<u64> = self.generators().iter().map(|g| g / self.gcd).collect();
        // dividing by the gcd preserves minimality
        let embedding_dimension = self.embedding_dimension();
        NumericalMonoid {
            gens: GeneratorTuple {
                gens,
                embedding_dimension,
            },
            gcd: 1,
        }
    }

    /// Membership through an Apéry set of this monoid.
    pub fn contains(&self, x: u64, ap: &AperySet) -> bool {
        debug_assert_eq!(ap.monoid(), self);
        ap.contains(x)
    }
}

impl std::fmt::Display for NumericalMonoid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// Parses `"6,9,20"` into a generator list.
pub fn parse_generators(text: &str) -> std::result::Result<Vec<u64>, std::num::ParseIntError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect()
}
