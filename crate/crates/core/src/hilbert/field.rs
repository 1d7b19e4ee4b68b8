//! Exact arithmetic in `Q(zeta_8)` and `Q(zeta_9)` and in their real
//! subfields `K = Q(eta)`, `eta = zeta + zeta^-1`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rings::RingSpec;
use crate::rootlattices::RootLatticeSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CycField {
    Zeta8,
    Zeta9,
}

impl CycField {
    /// `N` with `zeta = exp(2 pi i / N)`.
    pub fn conductor(self) -> usize {
        match self {
            CycField::Zeta8 => 8,
            CycField::Zeta9 => 9,
        }
    }

    /// `[F : Q]`.
    pub fn degree(self) -> usize {
        match self {
            CycField::Zeta8 => 4,
            CycField::Zeta9 => 6,
        }
    }

    /// `[K : Q]`.
    pub fn real_degree(self) -> usize {
        self.degree() / 2
    }

    /// Low coefficients of the monic minimal polynomial of `zeta`:
    /// `zeta^d = -sum c_i zeta^i`.
    fn min_poly_low(self) -> &'static [i64] {
        match self {
            // x^4 + 1
            CycField::Zeta8 => &[1, 0, 0, 0],
            // x^6 + x^3 + 1
            CycField::Zeta9 => &[1, 0, 0, 1, 0, 0],
        }
    }

    /// Units `a` mod `N`, i.e. the Galois group `zeta -> zeta^a`.
    pub fn galois_group(self) -> Vec<usize> {
        let n = self.conductor();
        (1..n).filter(|a| a.gcd(&n) == 1).collect()
    }

    /// Ring of the discriminant group of the attached root lattice.
    pub fn code_ring(self) -> RingSpec {
        match self {
            CycField::Zeta8 => RingSpec::F2U,
            CycField::Zeta9 => RingSpec::ZMod(3),
        }
    }

    /// Root lattice modelled by `Lambda` in this field.
    pub fn root_lattice(self) -> RootLatticeSpec {
        match self {
            CycField::Zeta8 => RootLatticeSpec::d(4, Some(RingSpec::F2U)).expect("D4 over F2u is valid"),
            CycField::Zeta9 => RootLatticeSpec::e(6).expect("E6 is valid"),
        }
    }
}

impl fmt::Display for CycField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CycField::Zeta8 => "zeta8",
            CycField::Zeta9 => "zeta9",
        })
    }
}

impl std::str::FromStr for CycField {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zeta8" => Ok(CycField::Zeta8),
            "zeta9" => Ok(CycField::Zeta9),
            _ => Err(Error::InvalidField(format!("unknown field {s}, expected zeta8 or zeta9"))),
        }
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Element of `F` as `(sum coords_i zeta^i) / den` with `den > 0` and the
/// fraction in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    field: CycField,
    coords: Vec<BigInt>,
    den: BigInt,
}

impl CycInt {
    pub fn new(field: CycField, coords: Vec<BigInt>, den: BigInt) -> Result<Self> {
        if coords.len() != field.degree() {
            return Err(Error::LengthMismatch { expected: field.degree(), found: coords.len() });
        }
        if den.is_zero() {
            return Err(Error::Singular);
        }
        let mut x = CycInt { field, coords, den };
        x.normalize();
        Ok(x)
    }

    pub fn from_i64(field: CycField, coords: &[i64], den: i64) -> Result<Self> {
        CycInt::new(field, coords.iter().map(|&c| BigInt::from(c)).collect(), BigInt::from(den))
    }

    pub fn from_rationals(field: CycField, coords: &[BigRational]) -> Result<Self> {
        let den = coords.iter().fold(BigInt::one(), |d, c| d.lcm(c.denom()));
        let num = coords.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        CycInt::new(field, num, den)
    }

    pub fn zero(field: CycField) -> Self {
        CycInt { field, coords: vec![BigInt::zero(); field.degree()], den: BigInt::one() }
    }

    pub fn rational(field: CycField, q: &BigRational) -> Self {
        let mut coords = vec![BigInt::zero(); field.degree()];
        coords[0] = q.numer().clone();
        CycInt { field, coords, den: q.denom().clone() }
    }

    pub fn one(field: CycField) -> Self {
        Self::rational(field, &BigRational::one())
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(field: CycField, k: i64) -> Self {
        let n = field.conductor() as i64;
        let mut poly = vec![BigInt::zero(); k.rem_euclid(n) as usize + 1];
        poly[k.rem_euclid(n) as usize] = BigInt::one();
        CycInt { field, coords: reduce(field, poly), den: BigInt::one() }
    }

    pub fn field(&self) -> CycField {
        self.field
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn to_rationals(&self) -> Vec<BigRational> {
        self.coords.iter().map(|c| BigRational::new(c.clone(), self.den.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn normalize(&mut self) {
        let g = self.coords.iter().fold(self.den.clone(), |g, c| g.gcd(c));
        if !g.is_one() && !g.is_zero() {
            for c in &mut self.coords {
                *c /= &g;
            }
            self.den /= &g;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.coords {
                *c = -&*c;
            }
        }
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::InvalidField(format!("field mismatch: {} vs {}", self.field, other.field)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let den = &self.den * &other.den;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a * &other.den + b * &self.den).collect();
        CycInt::new(self.field, coords, den)
    }

    pub fn neg(&self) -> Self {
        CycInt { field: self.field, coords: self.coords.iter().map(|c| -c).collect(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let d = self.field.degree();
        let mut poly = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                poly[i + j] += a * b;
            }
        }
        CycInt::new(self.field, reduce(self.field, poly), &self.den * &other.den)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let coords = self.coords.iter().map(|c| c * q.numer()).collect();
        CycInt::new(self.field, coords, &self.den * q.denom()).expect("nonzero denominator")
    }

    /// Image under `zeta -> zeta^a`.
    pub fn galois(&self, a: i64) -> Self {
        let mut poly = vec![BigInt::zero(); self.field.conductor()];
        for (i, c) in self.coords.iter().enumerate() {
            let k = (a * i as i64).rem_euclid(self.field.conductor() as i64) as usize;
            poly[k] += c;
        }
        CycInt { field: self.field, coords: reduce(self.field, poly), den: self.den.clone() }
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.coords[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| BigRational::new(self.coords[0].clone(), self.den.clone()))
    }

    /// `Tr_{F/Q}`.
    pub fn trace(&self) -> BigRational {
        let mut s = CycInt::zero(self.field);
        for a in self.field.galois_group() {
            s = s.add(&self.galois(a as i64)).expect("same field");
        }
        s.as_rational().expect("trace is rational")
    }

    /// `N_{F/Q}`.
    pub fn norm(&self) -> BigRational {
        self.mul(&self.galois_cofactor()).expect("same field").as_rational().expect("norm is rational")
    }

    fn galois_cofactor(&self) -> Self {
        let mut p = CycInt::one(self.field);
        for a in self.field.galois_group().into_iter().skip(1) {
            p = p.mul(&self.galois(a as i64)).expect("same field");
        }
        p
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Singular);
        }
        let n = self.norm();
        Ok(self.galois_cofactor().scale(&(BigRational::one() / n)))
    }

    /// Coordinates in the basis `1, eta, .., eta^(r-1)` of `K`.
    pub fn to_k(&self) -> Result<KElem> {
        if !self.is_real() {
            return Err(Error::Consistency(format!("{self} is not in the real subfield")));
        }
        let r = self.field.real_degree();
        let eta = eta(self.field);
        let mut powers = vec![CycInt::one(self.field)];
        for _ in 1..r {
            let last = powers.last().expect("nonempty");
            powers.push(last.mul(&eta)?);
        }
        // Solve sum x_j eta^j = self by elimination on the zeta-coordinates.
        let d = self.field.degree();
        let mut rows: Vec<Vec<BigRational>> = (0..d)
            .map(|i| {
                let mut row: Vec<BigRational> = powers.iter().map(|p| p.to_rationals()[i].clone()).collect();
                row.push(self.to_rationals()[i].clone());
                row
            })
            .collect();
        let mut pivot_row = 0;
        for col in 0..r {
            let p = (pivot_row..d).find(|&i| !rows[i][col].is_zero()).ok_or(Error::Singular)?;
            rows.swap(pivot_row, p);
            let inv = BigRational::one() / &rows[pivot_row][col];
            for v in rows[pivot_row].iter_mut() {
                *v *= &inv;
            }
            for i in 0..d {
                if i != pivot_row && !rows[i][col].is_zero() {
                    let f = rows[i][col].clone();
                    for j in 0..=r {
                        let t = &rows[pivot_row][j] * &f;
                        rows[i][j] -= t;
                    }
                }
            }
            pivot_row += 1;
        }
        if rows[r..].iter().any(|row| !row[r].is_zero()) {
            return Err(Error::Consistency("inconsistent real-subfield conversion".into()));
        }
        Ok(KElem { field: self.field, coords: rows[..r].iter().map(|row| row[r].clone()).collect() })
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match i {
                0 => format!("{c}"),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{i}"),
            });
        }
        let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        if self.den.is_one() {
            write!(f, "{body}")
        } else {
            write!(f, "({body})/{}", self.den)
        }
    }
}

/// Reduces a polynomial in `zeta` modulo the cyclotomic polynomial.
fn reduce(field: CycField, mut poly: Vec<BigInt>) -> Vec<BigInt> {
    let d = field.degree();
    let low = field.min_poly_low();
    for k in (d..poly.len()).rev() {
        if poly[k].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut poly[k]);
        for (i, &l) in low.iter().enumerate() {
            if l != 0 {
                poly[k - d + i] -= &c * l;
            }
        }
    }
    poly.resize(d, BigInt::zero());
    poly
}

/// `eta = zeta + zeta^-1`.
pub fn eta(field: CycField) -> CycInt {
    CycInt::zeta_pow(field, 1).add(&CycInt::zeta_pow(field, -1)).expect("same field")
}

/// Element of `K` in the basis `1, eta, .., eta^(r-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KElem {
    pub field: CycField,
    pub coords: Vec<BigRational>,
}

impl KElem {
    pub fn from_i64(field: CycField, coords: &[i64]) -> Result<Self> {
        if coords.len() != field.real_degree() {
            return Err(Error::LengthMismatch { expected: field.real_degree(), found: coords.len() });
        }
        Ok(KElem { field, coords: coords.iter().map(|&c| rat(c)).collect() })
    }

    pub fn to_cyc(&self) -> CycInt {
        let eta = eta(self.field);
        let mut p = CycInt::one(self.field);
        let mut s = CycInt::zero(self.field);
        for c in &self.coords {
            s = s.add(&p.scale(c)).expect("same field");
            p = p.mul(&eta).expect("same field");
        }
        s
    }

    /// `Tr_{K/Q}`, half the trace from `F`.
    pub fn trace(&self) -> BigRational {
        self.to_cyc().trace() / rat(2)
    }

    /// Values under the real embeddings `eta -> 2 cos(2 pi a / N)`.
    pub fn embeddings(&self) -> Vec<f64> {
        let n = self.field.conductor();
        self.field
            .galois_group()
            .into_iter()
            .filter(|&a| 2 * a < n)
            .map(|a| {
                let e = 2.0 * (2.0 * std::f64::consts::PI * a as f64 / n as f64).cos();
                self.coords.iter().rev().fold(0.0, |acc, c| acc * e + c.to_f64().unwrap_or(f64::NAN))
            })
            .collect()
    }

    pub fn mul(&self, other: &KElem) -> Result<KElem> {
        self.to_cyc().mul(&other.to_cyc())?.to_k()
    }
}

impl fmt::Display for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// `Tr_{F/Q}(x conj(y))`.
pub fn trace_form(x: &CycInt, y: &CycInt) -> Result<BigRational> {
    Ok(x.mul(&y.conj())?.trace())
}

/// `v . w = v conj(w) + conj(v) w` summed over coordinates; lies in `K`.
pub fn k_scalar_product(v: &[CycInt], w: &[CycInt]) -> Result<KElem> {
    if v.len() != w.len() {
        return Err(Error::LengthMismatch { expected: v.len(), found: w.len() });
    }
    let field = v.first().map(|x| x.field()).ok_or_else(|| Error::Dimension("empty vector".into()))?;
    let mut s = CycInt::zero(field);
    for (a, b) in v.iter().zip(w) {
        let t = a.mul(&b.conj())?;
        s = s.add(&t)?.add(&t.conj())?;
    }
    s.to_k()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small(field: CycField) -> impl Strategy<Value = CycInt> {
        (proptest::collection::vec(-4i64..=4, field.degree()), 1i64..=3)
            .prop_map(move |(c, d)| CycInt::from_i64(field, &c, d).unwrap())
    }

    #[test]
    fn minimal_polynomials() {
        for field in [CycField::Zeta8, CycField::Zeta9] {
            let n = field.conductor() as i64;
            assert_eq!(CycInt::zeta_pow(field, n), CycInt::one(field));
            for k in 1..n {
                assert_ne!(CycInt::zeta_pow(field, k), CycInt::one(field), "{field} {k}");
            }
        }
        let z = CycInt::zeta_pow(CycField::Zeta8, 4);
        assert_eq!(z, CycInt::one(CycField::Zeta8).neg());
        let z9 = CycField::Zeta9;
        let lhs = CycInt::zeta_pow(z9, 6);
        let rhs = CycInt::zeta_pow(z9, 3).neg().sub(&CycInt::one(z9)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn traces() {
        let f = CycField::Zeta8;
        assert_eq!(CycInt::one(f).trace(), rat(4));
        let z = CycInt::zeta_pow(f, 1);
        assert_eq!(trace_form(&z, &z).unwrap(), rat(4));
        assert_eq!(CycInt::one(CycField::Zeta9).trace(), rat(6));
        assert_eq!(CycInt::zeta_pow(CycField::Zeta9, 3).trace(), rat(-3));
        let e = eta(f);
        assert_eq!(e.to_k().unwrap(), KElem::from_i64(f, &[0, 1]).unwrap());
        assert_eq!(e.mul(&e).unwrap().to_k().unwrap(), KElem::from_i64(f, &[2, 0]).unwrap());
        let one = [CycInt::one(f)];
        assert_eq!(k_scalar_product(&one, &one).unwrap(), KElem::from_i64(f, &[2, 0]).unwrap());
        assert!(z.to_k().is_err());
    }

    proptest! {
        #[test]
        fn field_axioms(a in small(CycField::Zeta9), b in small(CycField::Zeta9), c in small(CycField::Zeta9)) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().conj(), a.conj().mul(&b.conj()).unwrap());
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inverse().unwrap()).unwrap(), CycInt::one(CycField::Zeta9));
            }
        }

        #[test]
        fn trace_form_is_positive_and_matches_k_product(a in small(CycField::Zeta8), b in small(CycField::Zeta8)) {
            let t = trace_form(&a, &a).unwrap();
            prop_assert!(a.is_zero() || t > BigRational::zero());
            prop_assert_eq!(trace_form(&a, &b).unwrap(), trace_form(&b, &a).unwrap());
            let k = k_scalar_product(&[a.clone()], &[b.clone()]).unwrap();
            prop_assert_eq!(k.trace(), trace_form(&a, &b).unwrap());
            let kk = k_scalar_product(&[a.clone()], &[a.clone()]).unwrap();
            let emb = kk.embeddings();
            prop_assert_eq!(emb.len(), 2);
            prop_assert!(a.is_zero() || emb.iter().all(|&v| v > 0.0));
        }
    }
}
