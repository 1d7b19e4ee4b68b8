//! Finite commutative coefficient rings and the weight functions used on
//! vectors over them.
//!
//! Elements are encoded as small integers:
//!
//! * `ZMod(k)`: the residue in `0..k`.
//! * `F2U` (`F2 + uF2`, `u^2 = 0`): `a + b u` is `a | b << 1`.
//! * `F4` (`w^2 = w + 1`): `a + b w` is `a | b << 1`, so `w2 = 1 + w` is 3.
//! * `F2xF2`: the pair `(a, b)` is `a << 1 | b`, matching its token `ab`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Encoded ring element.
pub type Elem = u32;

/// Largest modulus accepted for `ZMod`, keeping all weight sums in `u64`.
pub const MAX_MODULUS: u32 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingSpec {
    ZMod(u32),
    F2U,
    F4,
    F2xF2,
}

// Multiplication tables for the order-4 rings, indexed by encoding.
const F2U_MUL: [[Elem; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 0, 2], [0, 3, 2, 1]];
const F4_MUL: [[Elem; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
const F2XF2_MUL: [[Elem; 4]; 4] = [[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 2, 2], [0, 1, 2, 3]];

impl RingSpec {
    /// `Z/kZ`, rejecting `k < 2` and moduli above [`MAX_MODULUS`].
    pub fn zmod(k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidRing(format!("Z/{k}Z needs k >= 2")));
        }
        if k > MAX_MODULUS {
            return Err(Error::InvalidRing(format!("Z/{k}Z exceeds modulus limit {MAX_MODULUS}")));
        }
        Ok(RingSpec::ZMod(k))
    }

    pub fn order(&self) -> u32 {
        match *self {
            RingSpec::ZMod(k) => k,
            _ => 4,
        }
    }

    pub fn is_order_four(&self) -> bool {
        !matches!(self, RingSpec::ZMod(_))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order()
    }

    pub fn is_valid(&self, x: Elem) -> bool {
        x < self.order()
    }

    pub fn check(&self, x: Elem) -> Result<Elem> {
        if self.is_valid(x) {
            Ok(x)
        } else {
            Err(Error::Encoding { ring: self.to_string(), value: x.to_string() })
        }
    }

    pub fn one(&self) -> Elem {
        match self {
            RingSpec::F2xF2 => 3,
            _ => 1,
        }
    }

    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        debug_assert!(self.is_valid(x) && self.is_valid(y));
        match *self {
            RingSpec::ZMod(k) => (x + y) % k,
            _ => x ^ y,
        }
    }

    pub fn neg(&self, x: Elem) -> Elem {
        debug_assert!(self.is_valid(x));
        match *self {
            RingSpec::ZMod(k) => (k - x) % k,
            _ => x,
        }
    }

    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        debug_assert!(self.is_valid(x) && self.is_valid(y));
        match *self {
            RingSpec::ZMod(k) => ((x as u64 * y as u64) % k as u64) as Elem,
            RingSpec::F2U => F2U_MUL[x as usize][y as usize],
            RingSpec::F4 => F4_MUL[x as usize][y as usize],
            RingSpec::F2xF2 => F2XF2_MUL[x as usize][y as usize],
        }
    }

    /// The involution: Frobenius on `F4`, the swap on `F2xF2`, identity elsewhere.
    pub fn conj(&self, x: Elem) -> Elem {
        debug_assert!(self.is_valid(x));
        match *self {
            RingSpec::F4 => {
                let (a, b) = (x & 1, x >> 1);
                (a ^ b) | (b << 1)
            }
            RingSpec::F2xF2 => ((x & 1) << 1) | (x >> 1),
            _ => x,
        }
    }

    /// Additive order of `x`.
    pub fn additive_order(&self, x: Elem) -> u32 {
        match *self {
            RingSpec::ZMod(k) => k / x.gcd(&k),
            _ => {
                if x == 0 {
                    1
                } else {
                    2
                }
            }
        }
    }

    /// A basis of the additive group as a module over `Z`: every element is
    /// an integer combination of these.
    pub fn additive_basis(&self) -> Vec<Elem> {
        match *self {
            RingSpec::ZMod(_) => vec![1],
            RingSpec::F2U | RingSpec::F4 => vec![1, 2],
            RingSpec::F2xF2 => vec![2, 1],
        }
    }

    /// Element of the weight class counted by `N2` in the Lee composition.
    fn n2_element(&self) -> Option<Elem> {
        match *self {
            RingSpec::ZMod(_) => None,
            RingSpec::F2U => Some(2),
            RingSpec::F4 => Some(1),
            RingSpec::F2xF2 => Some(3),
        }
    }

    pub fn format_elem(&self, x: Elem) -> String {
        match *self {
            RingSpec::ZMod(_) => x.to_string(),
            RingSpec::F2U => ["0", "1", "u", "1+u"][x as usize].to_string(),
            RingSpec::F4 => ["0", "1", "w", "w2"][x as usize].to_string(),
            RingSpec::F2xF2 => ["00", "01", "10", "11"][x as usize].to_string(),
        }
    }

    pub fn parse_elem(&self, tok: &str) -> Result<Elem> {
        let bad = || Error::Encoding { ring: self.to_string(), value: tok.to_string() };
        let table: &[&str] = match *self {
            RingSpec::ZMod(k) => {
                if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                let v: u64 = tok.parse().map_err(|_| bad())?;
                return if v < k as u64 { Ok(v as Elem) } else { Err(bad()) };
            }
            RingSpec::F2U => &["0", "1", "u", "1+u"],
            RingSpec::F4 => &["0", "1", "w", "w2"],
            RingSpec::F2xF2 => &["00", "01", "10", "11"],
        };
        table.iter().position(|t| *t == tok).map(|i| i as Elem).ok_or_else(bad)
    }

    /// Checks every entry of a vector.
    pub fn check_vec(&self, x: &[Elem]) -> Result<()> {
        for &v in x {
            self.check(v)?;
        }
        Ok(())
    }

    pub fn add_vec(&self, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
        x.iter().zip(y).map(|(&a, &b)| self.add(a, b)).collect()
    }

    pub fn scale_vec(&self, r: Elem, x: &[Elem]) -> Vec<Elem> {
        x.iter().map(|&a| self.mul(r, a)).collect()
    }

    pub fn conj_vec(&self, x: &[Elem]) -> Vec<Elem> {
        x.iter().map(|&a| self.conj(a)).collect()
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::ZMod(k) => write!(f, "Z{k}"),
            RingSpec::F2U => f.write_str("F2u"),
            RingSpec::F4 => f.write_str("F4"),
            RingSpec::F2xF2 => f.write_str("F2xF2"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F2u" => Ok(RingSpec::F2U),
            "F4" => Ok(RingSpec::F4),
            "F2xF2" => Ok(RingSpec::F2xF2),
            _ => {
                let digits = s.strip_prefix('Z').ok_or_else(|| Error::InvalidRing(s.to_string()))?;
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
                    return Err(Error::InvalidRing(s.to_string()));
                }
                let k: u32 = digits.parse().map_err(|_| Error::InvalidRing(s.to_string()))?;
                RingSpec::zmod(k)
            }
        }
    }
}

/// Results of the basic operations on a pair of elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingOps {
    pub sum: Elem,
    pub product: Elem,
    pub neg: Elem,
    pub conj: Elem,
}

/// Checked add, multiply, negate and conjugate of `x` (with `y` for the binary ones).
pub fn ring_ops(spec: RingSpec, x: Elem, y: Elem) -> Result<RingOps> {
    spec.check(x)?;
    spec.check(y)?;
    Ok(RingOps { sum: spec.add(x, y), product: spec.mul(x, y), neg: spec.neg(x), conj: spec.conj(x) })
}

/// Counts of coordinates by weight class for the order-4 rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LeeComposition {
    pub n0: usize,
    pub n1: usize,
    pub n2: usize,
}

impl LeeComposition {
    pub fn hamming(&self) -> usize {
        self.n1 + self.n2
    }

    pub fn lee(&self) -> usize {
        self.n1 + 2 * self.n2
    }

    pub fn bachoc(&self) -> usize {
        2 * self.n1 + self.n2
    }
}

pub fn lee_composition(spec: RingSpec, x: &[Elem]) -> Result<LeeComposition> {
    let two = spec
        .n2_element()
        .ok_or_else(|| Error::Unsupported(format!("Lee composition over {spec}")))?;
    spec.check_vec(x)?;
    let mut c = LeeComposition::default();
    for &v in x {
        if v == 0 {
            c.n0 += 1;
        } else if v == two {
            c.n2 += 1;
        } else {
            c.n1 += 1;
        }
    }
    Ok(c)
}

pub fn hamming_weight(x: &[Elem]) -> usize {
    x.iter().filter(|&&v| v != 0).count()
}

pub fn lee_weight(spec: RingSpec, x: &[Elem]) -> Result<usize> {
    lee_composition(spec, x).map(|c| c.lee())
}

pub fn bachoc_weight(spec: RingSpec, x: &[Elem]) -> Result<usize> {
    lee_composition(spec, x).map(|c| c.bachoc())
}

/// Sum of squares of the residues in `0..k`.
pub fn euclidean_weight(spec: RingSpec, x: &[Elem]) -> Result<u64> {
    match spec {
        RingSpec::ZMod(_) => {
            spec.check_vec(x)?;
            Ok(x.iter().map(|&v| (v as u64) * (v as u64)).sum())
        }
        _ => Err(Error::Unsupported(format!("Euclidean weight over {spec}"))),
    }
}

/// `sum x_i y_i`, or `sum x_i conj(y_i)` when `hermitian`.
pub fn inner_product(spec: RingSpec, x: &[Elem], y: &[Elem], hermitian: bool) -> Result<Elem> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { expected: x.len(), found: y.len() });
    }
    spec.check_vec(x)?;
    spec.check_vec(y)?;
    Ok(inner_unchecked(spec, x, y, hermitian))
}

pub(crate) fn inner_unchecked(spec: RingSpec, x: &[Elem], y: &[Elem], hermitian: bool) -> Elem {
    match spec {
        RingSpec::ZMod(k) => {
            let k = k as u64;
            (x.iter().zip(y).fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % k)) as Elem
        }
        _ => x.iter().zip(y).fold(0, |acc, (&a, &b)| {
            let b = if hermitian { spec.conj(b) } else { b };
            spec.add(acc, spec.mul(a, b))
        }),
    }
}
