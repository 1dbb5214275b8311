//! Exact quasipolynomials in the shift parameter.
//!
//! A quasipolynomial of period `r` and degree `α` is a polynomial of degree
//! `α` on each residue class mod `r`. Fitting works one class at a time on
//! samples spaced `r` apart, using forward differences over the rationals:
//! the `(α+1)`-th differences must vanish, and the Newton form is expanded
//! into ordinary coefficients in `n`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{FitError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomial {
    period: u64,
    degree: usize,
    valid_from: u64,
    /// Per residue class, coefficients from `n^0` upward; `None` when the
    /// class had no samples.
    rows: Vec<Option<Vec<BigRational>>>,
}

impl QuasiPolynomial {
    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn valid_from(&self) -> u64 {
        self.valid_from
    }

    /// Coefficients `(a_α, ..., a_0)` for one residue class.
    pub fn coefficients(&self, residue: u64) -> Option<Vec<BigRational>> {
        self.rows[(residue % self.period) as usize]
            .as_ref()
            .map(|row| row.iter().rev().cloned().collect())
    }

    /// `a_α` on each residue class, `None` for absent classes.
    pub fn leading_coefficients(&self) -> Vec<Option<BigRational>> {
        self.rows
            .iter()
            .map(|row| row.as_ref().map(|r| r[self.degree].clone()))
            .collect()
    }

    /// Residues that carry a polynomial.
    pub fn present_classes(&self) -> impl Iterator<Item = u64> + '_ {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, row)| row.is_some())
            .map(|(c, _)| c as u64)
    }

    pub fn eval(&self, n: u64) -> Result<BigRational> {
        if n < self.valid_from {
            return Err(FitError::BelowThreshold {
                n,
                valid_from: self.valid_from,
            }
            .into());
        }
        let residue = n % self.period;
        let row = self.rows[residue as usize]
            .as_ref()
            .ok_or(FitError::AbsentClass { residue })?;
        Ok(horner(row, &BigRational::from_integer(BigInt::from(n))))
    }

    /// Checks every sample, stopping at the first disagreement.
    pub fn verify<'a, I>(&self, samples: I) -> VerifyReport
    where
        I: IntoIterator<Item = (&'a u64, &'a i64)>,
    {
        let mut checked = 0;
        for (&n, &expected) in samples {
            checked += 1;
            let predicted = self.eval(n).ok();
            if predicted != Some(BigRational::from_integer(BigInt::from(expected))) {
                return VerifyReport {
                    checked,
                    mismatch: Some(Mismatch {
                        n,
                        expected,
                        predicted,
                    }),
                };
            }
        }
        VerifyReport {
            checked,
            mismatch: None,
        }
    }
}

fn horner(ascending: &[BigRational], x: &BigRational) -> BigRational {
    ascending
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: u64,
    pub expected: i64,
    /// `None` when the quasipolynomial has no value at `n`.
    pub predicted: Option<BigRational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub checked: usize,
    pub mismatch: Option<Mismatch>,
}

impl VerifyReport {
    pub fn is_exact(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "exact on {} points", self.checked),
            Some(m) => write!(
                f,
                "mismatch at n = {}: expected {}, got {}",
                m.n,
                m.expected,
                m.predicted
                    .as_ref()
                    .map_or_else(|| "nothing".to_string(), |p| p.to_string())
            ),
        }
    }
}

/// Fits a degree-`degree` quasipolynomial of period `period` to `samples`.
///
/// Each residue class present must have at least `degree + 1` samples spaced
/// exactly `period` apart. Extra samples are checked against the fit.
pub fn fit(
    samples: &BTreeMap<u64, i64>,
    period: u64,
    degree: usize,
    valid_from: u64,
) -> Result<QuasiPolynomial> {
    if period == 0 {
        return Err(FitError::ZeroPeriod.into());
    }
    if samples.is_empty() {
        return Err(FitError::NoSamples.into());
    }
    let mut classes: Vec<Vec<(u64, i64)>> = vec![Vec::new(); period as usize];
    for (&n, &v) in samples {
        if n < valid_from {
            return Err(FitError::SampleBelowThreshold { n, valid_from }.into());
        }
        classes[(n % period) as usize].push((n, v));
    }
    let rows = classes
        .iter()
        .enumerate()
        .map(|(residue, points)| {
            if points.is_empty() {
                Ok(None)
            } else {
                fit_class(residue as u64, points, period, degree).map(Some)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    if rows.iter().flatten().all(|row| row[degree].is_zero()) {
        return Err(FitError::ZeroLeading.into());
    }
    Ok(QuasiPolynomial {
        period,
        degree,
        valid_from,
        rows,
    })
}

fn fit_class(
    residue: u64,
    points: &[(u64, i64)],
    period: u64,
    degree: usize,
) -> Result<Vec<BigRational>> {
    if points.len() < degree + 1 {
        return Err(FitError::InsufficientSamples {
            residue,
            needed: degree + 1,
            have: points.len(),
        }
        .into());
    }
    if points.windows(2).any(|w| w[1].0 - w[0].0 != period) {
        return Err(FitError::IrregularSpacing { residue }.into());
    }
    // leading[j] = Δ^j f(n_0)
    let mut row: Vec<BigInt> = points.iter().map(|&(_, v)| BigInt::from(v)).collect();
    let mut leading = Vec::with_capacity(degree + 1);
    for _ in 0..=degree {
        leading.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    if row.iter().any(|v| !v.is_zero()) {
        return Err(FitError::Inconsistent { residue, degree }.into());
    }

    // sum_j Δ^j f(n_0) * binom(s, j) with s = (n - n_0) / r
    let n0 = BigRational::from_integer(BigInt::from(points[0].0));
    let r = BigRational::from_integer(BigInt::from(period));
    let mut result = vec![BigRational::zero(); degree + 1];
    let mut basis = vec![BigRational::one()];
    for (j, delta) in leading.iter().enumerate() {
        let delta = BigRational::from_integer(delta.clone());
        for (k, c) in basis.iter().enumerate() {
            result[k] += c * &delta;
        }
        // basis *= (s - j) / (j + 1)
        let shift = (&n0 + &r * BigRational::from_integer(BigInt::from(j))) / &r;
        let scale = BigRational::from_integer(BigInt::from(j + 1));
        let mut next = vec![BigRational::zero(); basis.len() + 1];
        for (k, c) in basis.iter().enumerate() {
            next[k + 1] += c / &r / &scale;
            next[k] -= c * &shift / &scale;
        }
        basis = next;
    }
    Ok(result)
}
