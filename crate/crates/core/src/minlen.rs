//! Minimum factorization length `m_S` over a base monoid.
//!
//! A forward dynamic program fills `m_S` on `[0, W]` with
//! `W = r_{k-1} r_k + r_k`. Above the window the quasilinear law
//! `m(a + r_k) = m(a) + 1` for `a > r_{k-1} r_k` reduces any element to the
//! last period of the window.
//!
//! The reduced point `a - t r_k` is a multiple of `d` above `r_{k-1} r_k`.
//! Such points are always in `S`: the Frobenius number of `S / d` is below
//! `(r_1/d)(r_k/d) <= (r_{k-1}/d)(r_k/d)`, so every multiple of `d` above
//! `r_{k-1} r_k` is an element.

use crate::error::{add, mul, Error, Result};
use crate::monoid::NumericalMonoid;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinLengthTable {
    monoid: NumericalMonoid,
    shape: Shape,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Shape {
    /// `S = <r>`: `m(a) = a / r`.
    Cyclic { r: u64 },
    Windowed {
        window: Vec<Option<u64>>,
        threshold: u64,
        period: u64,
    },
}

impl MinLengthTable {
    pub fn new(monoid: &NumericalMonoid) -> Result<Self> {
        let gens = monoid.generators();
        let shape = if gens.len() == 1 {
            Shape::Cyclic { r: gens[0] }
        } else {
            let r_k = gens[gens.len() - 1];
            let r_km1 = gens[gens.len() - 2];
            let threshold = mul(r_km1, r_k, "min-length threshold")?;
            let end = add(threshold, r_k, "min-length window")?;
            let end_us = usize::try_from(end).map_err(|_| Error::TooLarge(end))?;
            Shape::Windowed {
                window: fill_window(gens, end_us)?,
                threshold,
                period: r_k,
            }
        };
        Ok(Self {
            monoid: monoid.clone(),
            shape,
        })
    }

    pub fn monoid(&self) -> &NumericalMonoid {
        &self.monoid
    }

    /// `r_{k-1} r_k`, above which `m` is quasilinear. Zero when `k = 1`.
    pub fn threshold(&self) -> u64 {
        match &self.shape {
            Shape::Cyclic { .. } => 0,
            Shape::Windowed { threshold, .. } => *threshold,
        }
    }

    /// Largest argument held in the table.
    pub fn window_end(&self) -> u64 {
        match &self.shape {
            Shape::Cyclic { .. } => 0,
            Shape::Windowed { window, .. } => window.len() as u64 - 1,
        }
    }

    pub fn period(&self) -> u64 {
        self.monoid.tuple().largest()
    }

    /// `m_S(a)`, or [`Error::NotAnElement`] when `a` is not in `S`.
    pub fn min_length(&self, a: u64) -> Result<u64> {
        self.lookup(a).ok_or(Error::NotAnElement(a))
    }

    /// `m_S(a)` if `a` is in `S`.
    pub fn lookup(&self, a: u64) -> Option<u64> {
        match &self.shape {
            Shape::Cyclic { r } => a.is_multiple_of(*r).then(|| a / r),
            Shape::Windowed { window, period, .. } => {
                let end = window.len() as u64 - 1;
                if a <= end {
                    return window[a as usize];
                }
                if !a.is_multiple_of(self.monoid.gcd()) {
                    return None;
                }
                let t = (a - end).div_ceil(*period);
                let reduced = a - t * period;
                let base = window[reduced as usize];
                debug_assert!(base.is_some(), "reduced point {reduced} must lie in S");
                base.map(|m| m + t)
            }
        }
    }
}

/// `m(0) = 0`, `m(a) = 1 + min m(a - g)` over generators with `a - g` in `S`.
fn fill_window(gens: &[u64], end: usize) -> Result<Vec<Option<u64>>> {
    let mut window: Vec<Option<u64>> = Vec::new();
    window
        .try_reserve_exact(end + 1)
        .map_err(|_| Error::TooLarge(end as u64 + 1))?;
    window.resize(end + 1, None);
    window[0] = Some(0);
    for a in 1..=end {
        window[a] = gens
            .iter()
            .take_while(|&&g| g as usize <= a)
            .filter_map(|&g| window[a - g as usize])
            .min()
            .map(|m| m + 1);
    }
    Ok(window)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(gens: &[u64]) -> MinLengthTable {
        MinLengthTable::new(&NumericalMonoid::new(gens).unwrap()).unwrap()
    }

    #[test]
    fn window_examples() {
        let t = table(&[2, 3]);
        assert_eq!(t.threshold(), 6);
        assert_eq!(t.window_end(), 9);
        for (a, m) in [(0, 0), (2, 1), (3, 1), (4, 2), (7, 3)] {
            assert_eq!(t.min_length(a).unwrap(), m);
        }
        assert_eq!(table(&[6, 9, 20]).min_length(29).unwrap(), 2);
        assert_eq!(table(&[5, 7, 9, 11]).min_length(0).unwrap(), 0);
    }

    #[test]
    fn extension_examples() {
        let t = table(&[2, 3]);
        assert_eq!(t.min_length(10).unwrap(), 4);
        assert_eq!(t.min_length(11).unwrap(), 4);
        assert_eq!(table(&[3, 5]).min_length(27).unwrap(), 7);
    }

    #[test]
    fn non_elements() {
        assert_eq!(table(&[2, 3]).lookup(1), None);
        assert_eq!(
            table(&[2, 3]).min_length(1).unwrap_err(),
            Error::NotAnElement(1)
        );
        assert_eq!(table(&[6, 9, 20]).lookup(7), None);
        // beyond the window, odd values are outside <4,6>
        assert_eq!(table(&[4, 6]).lookup(101), None);
        assert_eq!(table(&[4, 6]).lookup(102), Some(17));
    }

    #[test]
    fn cyclic_base() {
        let t = table(&[7]);
        assert_eq!(t.min_length(0).unwrap(), 0);
        assert_eq!(t.min_length(700).unwrap(), 100);
        assert_eq!(t.lookup(701), None);
    }
}
