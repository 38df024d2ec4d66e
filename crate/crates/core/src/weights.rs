//! Weight vectors of weighted homogeneous surface germs.
//!
//! Weights are the degrees of a minimal set of homogeneous generators of the
//! graded coordinate ring, listed in descending order `v1 >= ... >= vr`.
//! A user-supplied list is taken as authoritative: minimality of the
//! generating set behind it cannot be checked from the numbers alone.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{gcd, lcm_all, Ratio};

/// Descending list of positive integer weights, at least two entries long.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector {
    entries: Vec<BigUint>,
}

impl WeightVector {
    /// Validates and sorts `values` into descending order.
    pub fn from_list<I, T>(values: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigUint>,
    {
        let entries: Vec<BigUint> = values.into_iter().map(Into::into).collect();
        Self::from_entries(entries)
    }

    /// Signed variant of [`WeightVector::from_list`], so that non-positive
    /// entries are reported instead of failing to convert.
    pub fn from_signed(values: &[i64]) -> Result<Self> {
        if let Some(bad) = values.iter().find(|&&v| v <= 0) {
            return Err(Error::InvalidWeights(format!("entry {bad} is not positive")));
        }
        Self::from_list(values.iter().map(|&v| v as u64))
    }

    fn from_entries(mut entries: Vec<BigUint>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::InvalidWeights(format!(
                "need at least two weights, got {}",
                entries.len()
            )));
        }
        if entries.iter().any(Zero::is_zero) {
            return Err(Error::InvalidWeights("entry 0 is not positive".into()));
        }
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn highest(&self) -> &BigUint {
        &self.entries[0]
    }

    pub fn lowest(&self) -> &BigUint {
        &self.entries[self.entries.len() - 1]
    }

    /// Every entry multiplied by `c`.
    pub fn scaled(&self, c: &BigUint) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::InvalidWeights("scale factor must be positive".into()));
        }
        Ok(Self {
            entries: self.entries.iter().map(|e| e * c).collect(),
        })
    }

    /// Divides out the common factor of all entries.
    pub fn normalize(&self) -> Self {
        let g = self
            .entries
            .iter()
            .fold(BigUint::zero(), |acc, e| gcd(&acc, e));
        if g.is_one() {
            return self.clone();
        }
        Self {
            entries: self.entries.iter().map(|e| e / &g).collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.entries.iter().all(|e| e == &self.entries[0])
    }

    /// `(v_{r-1}, v_r)`.
    pub fn two_lowest(&self) -> (&BigUint, &BigUint) {
        let r = self.entries.len();
        (&self.entries[r - 2], &self.entries[r - 1])
    }

    /// `(v1 / vr, v_{r-1} / vr)` in lowest terms.
    pub fn extreme_ratios(&self) -> (Ratio, Ratio) {
        let (second, lowest) = self.two_lowest();
        let top = Ratio::from_unsigned(self.highest(), lowest).expect("weights are positive");
        let sub = Ratio::from_unsigned(second, lowest).expect("weights are positive");
        (top, sub)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// Exponents of the Brieskorn hypersurface `z1^a1 + z2^a2 + z3^a3 = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BrieskornTriple {
    exponents: [u64; 3],
}

impl BrieskornTriple {
    /// Exponent 1 would make the germ smooth, so every exponent must be >= 2.
    pub fn new(a1: u64, a2: u64, a3: u64) -> Result<Self> {
        let exponents = [a1, a2, a3];
        if let Some(bad) = exponents.iter().find(|&&a| a < 2) {
            return Err(Error::InvalidTriple(format!("exponent {bad} is below 2")));
        }
        Ok(Self { exponents })
    }

    pub fn exponents(&self) -> [u64; 3] {
        self.exponents
    }

    pub fn as_big(&self) -> [BigUint; 3] {
        self.exponents.map(BigUint::from)
    }

    /// `lcm(a1, a2, a3)`.
    pub fn lcm(&self) -> BigUint {
        lcm_all(&self.as_big()).expect("exponents are positive")
    }

    pub fn product(&self) -> BigUint {
        self.as_big().iter().product()
    }
}

/// Weights `(l/a1, l/a2, l/a3)` with `l = lcm(a1, a2, a3)`, normalized and sorted.
pub fn brieskorn_weights(triple: &BrieskornTriple) -> WeightVector {
    let l = triple.lcm();
    let raw = triple.as_big().map(|a| &l / a);
    WeightVector::from_list(raw)
        .expect("three positive weights")
        .normalize()
}
