//! Brute-force reference implementations for numerical monoids.
//!
//! Everything here works directly from a raw generator list and a membership
//! sieve. Nothing is clever and nothing is fast; the point is to have a second,
//! independent route to every quantity the main crate computes, so tests can
//! compare the two exactly. Bounds and enumeration budgets are explicit and
//! exceeding one is an error, never a silent truncation.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("generator list is empty")]
    NoGenerators,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("sieve bound {bound} is too small, need at least {needed}")]
    BoundTooSmall { bound: u64, needed: u64 },
    #[error("monoid is not primitive (gcd {0})")]
    NotPrimitive(u64),
    #[error("{0} is not an element of the monoid")]
    NotAnElement(u64),
    #[error("enumeration budget of {0} nodes exhausted")]
    BudgetExceeded(u64),
    #[error("shift {n} is not eligible: {reason}")]
    Ineligible { n: u64, reason: &'static str },
}

pub type Result<T> = std::result::Result<T, OracleError>;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn gcd_all(gens: &[u64]) -> u64 {
    gens.iter().fold(0, |acc, &g| gcd(acc, g))
}

fn check_gens(gens: &[u64]) -> Result<()> {
    if gens.is_empty() {
        return Err(OracleError::NoGenerators);
    }
    if gens.contains(&0) {
        return Err(OracleError::ZeroGenerator);
    }
    Ok(())
}

/// Table of which integers in `0..=bound` are non-negative combinations of
/// the generators.
#[derive(Debug, Clone)]
pub struct MembershipSieve {
    gens: Vec<u64>,
    bound: u64,
    table: Vec<bool>,
}

impl MembershipSieve {
    pub fn gens(&self) -> &[u64] {
        &self.gens
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn table(&self) -> &[bool] {
        &self.table
    }

    /// `None` when `x` lies beyond the sieve.
    pub fn contains(&self, x: u64) -> Option<bool> {
        self.table.get(x as usize).copied()
    }

    fn max_gen(&self) -> u64 {
        *self.gens.iter().max().unwrap()
    }

    fn require_primitive(&self, needed: u64) -> Result<()> {
        let d = gcd_all(&self.gens);
        if d != 1 {
            return Err(OracleError::NotPrimitive(d));
        }
        if self.bound < needed {
            return Err(OracleError::BoundTooSmall {
                bound: self.bound,
                needed,
            });
        }
        Ok(())
    }
}

/// `table[0] = true`, `table[x] = OR over g <= x of table[x - g]`.
pub fn naive_sieve(gens: &[u64], bound: u64) -> Result<MembershipSieve> {
    check_gens(gens)?;
    let mut table = vec![false; bound as usize + 1];
    table[0] = true;
    for x in 1..=bound as usize {
        table[x] = gens
            .iter()
            .any(|&g| (g as usize) <= x && table[x - g as usize]);
    }
    Ok(MembershipSieve {
        gens: gens.to_vec(),
        bound,
        table,
    })
}

/// Minimum element of the monoid in each class `j*d mod x`, indexed by `j`.
///
/// The sieve runs to `x * max(gens)`. Every class minimum lies below that:
/// the minimum in a class is a sum of generators none of which can be
/// replaced by `x`, so it uses fewer than `x/d` summands.
pub fn naive_apery(gens: &[u64], x: u64) -> Result<Vec<u64>> {
    check_gens(gens)?;
    let max_gen = *gens.iter().max().unwrap();
    let bound = x * max_gen;
    let sieve = naive_sieve(gens, bound)?;
    if x == 0 || sieve.contains(x) != Some(true) {
        return Err(OracleError::NotAnElement(x));
    }
    let d = gcd_all(gens);
    let classes = (x / d) as usize;
    let mut minima: Vec<Option<u64>> = vec![None; classes];
    for (v, &member) in sieve.table.iter().enumerate() {
        if !member {
            continue;
        }
        let j = ((v as u64 % x) / d) as usize;
        if minima[j].is_none() {
            minima[j] = Some(v as u64);
        }
    }
    minima
        .into_iter()
        .map(|m| {
            m.ok_or(OracleError::BoundTooSmall {
                bound,
                needed: bound + 1,
            })
        })
        .collect()
}

/// All factorizations of one element and their lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationSet {
    pub element: u64,
    pub tuples: BTreeSet<Vec<u64>>,
    pub lengths: BTreeSet<u64>,
}

impl FactorizationSet {
    pub fn min_length(&self) -> Option<u64> {
        self.lengths.first().copied()
    }
}

/// Complete recursive enumeration of `a = z_1 g_1 + ... + z_k g_k`.
///
/// `budget` caps the number of search nodes visited.
pub fn enumerate_factorizations(gens: &[u64], a: u64, budget: u64) -> Result<FactorizationSet> {
    check_gens(gens)?;
    let mut tuples = BTreeSet::new();
    let mut current = vec![0u64; gens.len()];
    let mut visited = 0u64;
    enumerate_rec(gens, 0, a, &mut current, &mut tuples, &mut visited, budget)?;
    let lengths = tuples.iter().map(|z| z.iter().sum()).collect();
    Ok(FactorizationSet {
        element: a,
        tuples,
        lengths,
    })
}

fn enumerate_rec(
    gens: &[u64],
    idx: usize,
    remaining: u64,
    current: &mut Vec<u64>,
    out: &mut BTreeSet<Vec<u64>>,
    visited: &mut u64,
    budget: u64,
) -> Result<()> {
    *visited += 1;
    if *visited > budget {
        return Err(OracleError::BudgetExceeded(budget));
    }
    let g = gens[idx];
    if idx + 1 == gens.len() {
        if remaining.is_multiple_of(g) {
            current[idx] = remaining / g;
            out.insert(current.clone());
            current[idx] = 0;
        }
        return Ok(());
    }
    for z in 0..=remaining / g {
        current[idx] = z;
        enumerate_rec(
            gens,
            idx + 1,
            remaining - z * g,
            current,
            out,
            visited,
            budget,
        )?;
    }
    current[idx] = 0;
    Ok(())
}

/// Pseudo-Frobenius numbers: `m` outside the monoid with `m + g` inside for
/// every generator `g`. Checking generators suffices because every positive
/// element is `g + s` for some generator `g` and `s` in the monoid.
pub fn naive_pf(sieve: &MembershipSieve) -> Result<Vec<u64>> {
    let max_gen = sieve.max_gen();
    sieve.require_primitive(max_gen * max_gen + max_gen)?;
    let limit = max_gen * max_gen;
    Ok((0..limit)
        .filter(|&m| !sieve.table[m as usize])
        .filter(|&m| sieve.gens.iter().all(|&g| sieve.table[(m + g) as usize]))
        .collect())
}

/// Gaps of a primitive monoid. Needs the sieve to reach `max(gens)^2`, which
/// exceeds the Frobenius number.
pub fn naive_gaps(sieve: &MembershipSieve) -> Result<Vec<u64>> {
    let max_gen = sieve.max_gen();
    sieve.require_primitive(max_gen * max_gen)?;
    Ok((1..=max_gen * max_gen)
        .filter(|&x| !sieve.table[x as usize])
        .collect())
}

/// Largest gap, or `-1` when there are none.
pub fn naive_frobenius(sieve: &MembershipSieve) -> Result<i64> {
    Ok(naive_gaps(sieve)?.last().map_or(-1, |&f| f as i64))
}

pub fn naive_genus(sieve: &MembershipSieve) -> Result<u64> {
    Ok(naive_gaps(sieve)?.len() as u64)
}

/// Minimum factorization length of `a`, by full enumeration.
pub fn naive_min_length(gens: &[u64], a: u64, budget: u64) -> Result<Option<u64>> {
    Ok(enumerate_factorizations(gens, a, budget)?.min_length())
}

/// Minimum factorization length for every `a` in `0..=bound` by a
/// coin-change style table; `None` marks non-elements.
pub fn naive_min_length_table(gens: &[u64], bound: u64) -> Result<Vec<Option<u64>>> {
    check_gens(gens)?;
    let mut table: Vec<Option<u64>> = vec![None; bound as usize + 1];
    table[0] = Some(0);
    for x in 1..=bound as usize {
        table[x] = gens
            .iter()
            .filter(|&&g| g as usize <= x)
            .filter_map(|&g| table[x - g as usize])
            .min()
            .map(|m| m + 1);
    }
    Ok(table)
}

/// Length set in `M_n = <n, n + r_1, ..., n + r_k>` of `i + m_S(i) * n`, where
/// `m_S(i)` is found by enumeration in `S = <r_1, ..., r_k>`.
///
/// Requires `n > r_k^2`, `gcd(n, d) = 1` and `i` in `Ap(S; dn)`, all checked
/// against a sieve of `S`.
pub fn homogeneity_witness(base: &[u64], n: u64, i: u64, budget: u64) -> Result<BTreeSet<u64>> {
    check_gens(base)?;
    let r_k = *base.iter().max().unwrap();
    let d = gcd_all(base);
    if n <= r_k * r_k {
        return Err(OracleError::Ineligible {
            n,
            reason: "shift does not exceed r_k^2",
        });
    }
    if gcd(n, d) != 1 {
        return Err(OracleError::Ineligible {
            n,
            reason: "gcd(n, d) > 1",
        });
    }
    let dn = d * n;
    let sieve = naive_sieve(base, i.max(dn))?;
    if sieve.contains(dn) != Some(true) {
        return Err(OracleError::Ineligible {
            n,
            reason: "dn is not in S",
        });
    }
    let in_apery =
        sieve.contains(i) == Some(true) && (i < dn || sieve.contains(i - dn) != Some(true));
    if !in_apery {
        return Err(OracleError::NotAnElement(i));
    }
    let m = naive_min_length(base, i, budget)?.ok_or(OracleError::NotAnElement(i))?;
    let element = i + m * n;
    let mut shifted = vec![n];
    shifted.extend(base.iter().map(|r| n + r));
    Ok(enumerate_factorizations(&shifted, element, budget)?.lengths)
}

/// Brute-force min over a set of class representatives: for each residue
/// `v mod x`, the smallest sieve member. Used when callers want a map keyed
/// by residue rather than by `j`.
pub fn apery_by_residue(gens: &[u64], x: u64) -> Result<BTreeMap<u64, u64>> {
    let d = gcd_all(gens);
    Ok(naive_apery(gens, x)?
        .into_iter()
        .enumerate()
        .map(|(j, a)| ((j as u64 * d) % x, a))
        .collect())
}
