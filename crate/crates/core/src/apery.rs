//! Apéry sets by shortest paths over residue classes.
//!
//! For a primitive monoid and modulus `x`, the least element of each class
//! mod `x` is the distance from class 0 in the graph with an edge
//! `c -> (c + g) mod x` of weight `g` for every generator `g`. Weights are
//! positive, so Dijkstra applies. Non-primitive monoids run on `M / d` with
//! modulus `x / d` and the distances are scaled back by `d`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::time::Instant;

use serde::Serialize;

use crate::error::{mul, Error, Result};
use crate::monoid::NumericalMonoid;

/// `Ap(M; x)`: for each class `j*d mod x` (`j < x/d`), the least element of
/// `M` in that class. Stored flat, indexed by `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AperySet {
    monoid: NumericalMonoid,
    base: u64,
    elements: Vec<u64>,
}

impl AperySet {
    /// Caller guarantees `elements[j]` is the class minimum for `j*d mod base`.
    /// Same set, relabelled with an equal monoid.
    pub(crate) fn with_monoid(self, monoid: NumericalMonoid) -> Self {
        debug_assert_eq!(monoid.generators(), self.monoid.generators());
        Self { monoid, ..self }
    }

    pub(crate) fn from_parts(monoid: NumericalMonoid, base: u64, elements: Vec<u64>) -> Self {
        debug_assert_eq!(elements.len() as u64, base / monoid.gcd());
        Self {
            monoid,
            base,
            elements,
        }
    }

    pub fn monoid(&self) -> &NumericalMonoid {
        &self.monoid
    }

    /// The element `x` the set is taken with respect to.
    pub fn base(&self) -> u64 {
        self.base
    }

    /// Class minima indexed by `j`, the class being `j*d mod base`.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max(&self) -> u64 {
        *self.elements.iter().max().unwrap()
    }

    pub fn sorted(&self) -> Vec<u64> {
        let mut v = self.elements.clone();
        v.sort_unstable();
        v
    }

    /// Least element of `M` congruent to `x` mod the base, if `d | x`.
    pub fn class_minimum(&self, x: u64) -> Option<u64> {
        let d = self.monoid.gcd();
        if !x.is_multiple_of(d) {
            return None;
        }
        Some(self.elements[((x % self.base) / d) as usize])
    }

    /// `x` is in `M` iff it is at least its class minimum.
    pub fn contains(&self, x: u64) -> bool {
        self.class_minimum(x).is_some_and(|min| x >= min)
    }

    /// `(residue mod base, element)` pairs in residue order.
    pub fn by_residue(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let d = self.monoid.gcd();
        let base = self.base;
        let mut pairs: Vec<(u64, u64)> = self
            .elements
            .iter()
            .enumerate()
            .map(|(j, &a)| ((j as u64 * d) % base, a))
            .collect();
        pairs.sort_unstable();
        pairs.into_iter()
    }
}

/// `Ap(M; x)` for any `x` in `M`.
pub fn apery_classic(monoid: &NumericalMonoid, x: u64) -> Result<AperySet> {
    apery_classic_with_deadline(monoid, x, None)
}

/// `Ap(M; n_1)`.
pub fn apery_multiplicity(monoid: &NumericalMonoid) -> Result<AperySet> {
    apery_classic(monoid, monoid.multiplicity())
}

/// As [`apery_classic`], giving up with [`Error::DeadlineExceeded`] once
/// `deadline` passes.
pub fn apery_classic_with_deadline(
    monoid: &NumericalMonoid,
    x: u64,
    deadline: Option<Instant>,
) -> Result<AperySet> {
    if x == 0 {
        return Err(Error::ZeroBase);
    }
    let d = monoid.gcd();
    if !x.is_multiple_of(d) {
        return Err(Error::NotAnElement(x));
    }
    if !monoid.generators().contains(&x) {
        let ap = apery_multiplicity(monoid)?;
        if !ap.contains(x) {
            return Err(Error::NotAnElement(x));
        }
    }
    let quotient: Vec<u64> = monoid.generators().iter().map(|g| g / d).collect();
    let distances = residue_distances(&quotient, x / d, deadline)?;
    let elements = distances
        .into_iter()
        .map(|dist| mul(dist, d, "Apéry element"))
        .collect::<Result<Vec<_>>>()?;
    Ok(AperySet::from_parts(monoid.clone(), x, elements))
}

/// Dijkstra from class 0 over `Z / modulus`. `gens` must be primitive so that
/// every class is reachable.
pub(crate) fn residue_distances(
    gens: &[u64],
    modulus: u64,
    deadline: Option<Instant>,
) -> Result<Vec<u64>> {
    let size = usize::try_from(modulus).map_err(|_| Error::TooLarge(modulus))?;
    let steps: Vec<(usize, u64)> = gens
        .iter()
        .filter(|&&g| g % modulus != 0)
        .map(|&g| ((g % modulus) as usize, g))
        .collect();
    let mut dist = Vec::new();
    let mut done = Vec::new();
    let mut heap = BinaryHeap::new();
    dist.try_reserve_exact(size)
        .map_err(|_| Error::TooLarge(modulus))?;
    done.try_reserve_exact(size)
        .map_err(|_| Error::TooLarge(modulus))?;
    heap.try_reserve(size)
        .map_err(|_| Error::TooLarge(modulus))?;
    dist.resize(size, u64::MAX);
    done.resize(size, false);
    dist[0] = 0;
    heap.push(Reverse((0u64, 0usize)));
    let mut popped = 0u32;
    while let Some(Reverse((d, c))) = heap.pop() {
        if done[c] {
            continue;
        }
        done[c] = true;
        popped = popped.wrapping_add(1);
        if popped.is_multiple_of(4096) {
            if let Some(limit) = deadline {
                if Instant::now() > limit {
                    return Err(Error::DeadlineExceeded);
                }
            }
        }
        for &(step, weight) in &steps {
            let mut next = c + step;
            if next >= size {
                next -= size;
            }
            if done[next] {
                continue;
            }
            let candidate = d
                .checked_add(weight)
                .ok_or(Error::Overflow("Apéry distance"))?;
            if candidate < dist[next] {
                dist[next] = candidate;
                heap.push(Reverse((candidate, next)));
            }
        }
    }
    debug_assert!(dist.iter().all(|&v| v != u64::MAX));
    Ok(dist)
}
