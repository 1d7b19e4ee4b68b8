//! Truncated theta expansions with exponents in the real subfield `K`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{CycField, KElem};
use crate::error::{Error, Result};

/// Exponent of a theta term, ordered by `Tr_{K/Q}` and then by coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KExponent {
    pub trace: BigRational,
    pub coords: Vec<BigRational>,
}

impl KExponent {
    pub fn zero(field: CycField) -> Self {
        KExponent { trace: BigRational::zero(), coords: vec![BigRational::zero(); field.real_degree()] }
    }

    pub fn from_k(x: &KElem) -> Self {
        KExponent { trace: x.trace(), coords: x.coords.clone() }
    }

    pub fn to_k(&self, field: CycField) -> KElem {
        KElem { field, coords: self.coords.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        KExponent {
            trace: &self.trace + &other.trace,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl fmt::Display for KExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Finite sum `sum c_e q^e` keeping only exponents with trace at most `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KSeries {
    field: CycField,
    bound: BigRational,
    coeffs: BTreeMap<KExponent, BigInt>,
}

impl KSeries {
    pub fn zero(field: CycField, bound: BigRational) -> Self {
        KSeries { field, bound, coeffs: BTreeMap::new() }
    }

    pub fn one(field: CycField, bound: BigRational) -> Self {
        let mut s = Self::zero(field, bound);
        s.add_term(KExponent::zero(field), BigInt::one());
        s
    }

    pub fn field(&self) -> CycField {
        self.field
    }

    pub fn bound(&self) -> &BigRational {
        &self.bound
    }

    pub fn coeffs(&self) -> &BTreeMap<KExponent, BigInt> {
        &self.coeffs
    }

    pub fn coeff(&self, e: &KExponent) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    /// Adds `c q^e`, dropping it if `e` is beyond the bound.
    pub fn add_term(&mut self, e: KExponent, c: BigInt) {
        if e.trace > self.bound || c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::InvalidField(format!("field mismatch: {} vs {}", self.field, other.field)));
        }
        if self.bound != other.bound {
            return Err(Error::BoundMismatch(self.bound.to_string(), other.bound.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.field, self.bound.clone());
        for (e, v) in &self.coeffs {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.field, self.bound.clone());
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                // Exponents are totally positive, so traces only grow.
                if &e1.trace + &e2.trace > self.bound {
                    break;
                }
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u64) -> Result<Self> {
        let mut out = Self::one(self.field, self.bound.clone());
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Coefficient sums grouped by trace.
    pub fn trace_counts(&self) -> BTreeMap<BigRational, BigInt> {
        let mut out: BTreeMap<BigRational, BigInt> = BTreeMap::new();
        for (e, c) in &self.coeffs {
            *out.entry(e.trace.clone()).or_default() += c;
        }
        out
    }

    /// First exponent, in series order, where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Result<Option<(KExponent, BigInt, BigInt)>> {
        self.check(other)?;
        let keys: std::collections::BTreeSet<&KExponent> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        for e in keys {
            let (a, b) = (self.coeff(e), other.coeff(e));
            if a != b {
                return Ok(Some((e.clone(), a, b)));
            }
        }
        Ok(None)
    }
}

impl fmt::Display for KSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, c) in &self.coeffs {
            writeln!(f, "{} {e} {c}", e.trace)?;
        }
        Ok(())
    }
}
