//! Root lattices of type `A_n`, `D_n`, `E_6`, `E_7`, `E_8`: Gram matrices,
//! the adapted bases `f` of `L` and `f*` of `L*`, and the map
//! `rho: L* -> L*/L` onto the coefficient ring.
//!
//! Vectors of `L*` are written in `f*`-coordinates throughout. A vector of
//! `(L*)^m` is the concatenation of `m` blocks of `n` coordinates.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactlinear::{det_int, inverse, IntMatrix, RatMatrix};
use crate::rings::{Elem, RingSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            _ => Err(Error::InvalidSpec(format!("unknown family {s}, expected A, D or E"))),
        }
    }
}

/// A root lattice together with the identification of its discriminant
/// group with a ring. Only `D_n` with `n` even has a choice of ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootLatticeSpec {
    family: Family,
    n: usize,
    ring: Option<RingSpec>,
}

impl RootLatticeSpec {
    /// Validates `n` for the family. For `D_n`, `ring` must be `F2u`, `F4` or
    /// `F2xF2` when `n` is even (default `F2u`) and absent or `Z4` when odd.
    pub fn new(family: Family, n: usize, ring: Option<RingSpec>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        let ring = match family {
            Family::A => {
                if n < 1 {
                    return bad("A_n needs n >= 1".into());
                }
                let r = RingSpec::zmod(n as u32 + 1)?;
                match ring {
                    None => Some(r),
                    Some(x) if x == r => Some(r),
                    Some(x) => return bad(format!("A_{n} carries Z{}, not {x}", n + 1)),
                }
            }
            Family::D => {
                if n < 4 {
                    return bad("D_n needs n >= 4".into());
                }
                if n % 2 == 1 {
                    match ring {
                        None | Some(RingSpec::ZMod(4)) => Some(RingSpec::ZMod(4)),
                        Some(x) => return bad(format!("D_{n} with n odd carries Z4, not {x}")),
                    }
                } else {
                    match ring {
                        None => Some(RingSpec::F2U),
                        Some(x @ (RingSpec::F2U | RingSpec::F4 | RingSpec::F2xF2)) => Some(x),
                        Some(x) => return bad(format!("D_{n} with n even carries F2u, F4 or F2xF2, not {x}")),
                    }
                }
            }
            Family::E => match (n, ring) {
                (6, None | Some(RingSpec::ZMod(3))) => Some(RingSpec::ZMod(3)),
                (7, None | Some(RingSpec::ZMod(2))) => Some(RingSpec::ZMod(2)),
                (8, None) => None,
                (6..=8, Some(x)) => return bad(format!("E_{n} does not carry {x}")),
                _ => return bad(format!("E_n needs n in 6..=8, got {n}")),
            },
        };
        Ok(RootLatticeSpec { family, n, ring })
    }

    pub fn a(n: usize) -> Result<Self> {
        Self::new(Family::A, n, None)
    }

    pub fn d(n: usize, ring: Option<RingSpec>) -> Result<Self> {
        Self::new(Family::D, n, ring)
    }

    pub fn e(n: usize) -> Result<Self> {
        Self::new(Family::E, n, None)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// The ring `L*/L` is identified with; `None` for `E_8`, where `L* = L`.
    pub fn code_ring(&self) -> Option<RingSpec> {
        self.ring
    }

    /// The ring, or an error for `E_8`.
    pub fn require_ring(&self) -> Result<RingSpec> {
        self.ring.ok_or_else(|| Error::Unsupported(format!("{self} has trivial discriminant group")))
    }
}

impl fmt::Display for RootLatticeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.n)?;
        if self.family == Family::D && self.n % 2 == 0 {
            write!(f, "/{}", self.ring.expect("D_n always has a ring"))?;
        }
        Ok(())
    }
}

/// Gram matrix of the simple roots `e_1..e_n`.
pub fn gram_e(family: Family, n: usize) -> IntMatrix {
    let mut g = IntMatrix::zeros(n, n);
    let mut edge = |i: usize, j: usize| {
        g.set(i - 1, j - 1, BigInt::from(-1));
        g.set(j - 1, i - 1, BigInt::from(-1));
    };
    for i in 1..n {
        let skip = family != Family::A && i == n - 1;
        if !skip {
            edge(i, i + 1);
        }
    }
    match family {
        Family::A => {}
        Family::D => edge(n - 2, n),
        Family::E => edge(n - 3, n),
    }
    for i in 0..n {
        g.set(i, i, BigInt::from(2));
    }
    g
}

/// The adapted bases of a root lattice and its dual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbientBasis {
    pub spec: RootLatticeSpec,
    /// Gram matrix of the simple roots.
    pub gram_e: IntMatrix,
    /// Row `i` is `f_i` in `e`-coordinates.
    pub f_in_e: IntMatrix,
    /// Row `i` is `f_i*` in `f`-coordinates.
    pub fstar_in_f: RatMatrix,
    pub gram_f: IntMatrix,
    pub gram_fstar: RatMatrix,
}

// Column i of these matrices is f_{i+1} in e-coordinates.
const E6_F: [[i64; 6]; 6] = [
    [0, 0, 1, 0, 0, 0],
    [1, 0, 0, 0, 1, 1],
    [1, 1, 0, 0, 1, 1],
    [0, 0, 0, 1, 1, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 1],
];
const E6_S: [[i64; 6]; 6] = [
    [4, 1, 1, 2, -1, -1],
    [1, 4, 1, 2, 2, -1],
    [1, 1, 4, 2, 2, 2],
    [2, 2, 2, 4, 1, 1],
    [-1, 2, 2, 1, 4, 1],
    [-1, -1, 2, 1, 1, 4],
];
const E7_F: [[i64; 7]; 7] = [
    [1, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 0],
    [1, 1, 1, 1, 0, 0, 0],
    [1, 1, 1, 1, 1, 0, -1],
    [1, 1, 1, 1, 1, 1, -2],
    [0, 0, 0, 0, 0, 0, 1],
];
const E7_S: [[i64; 7]; 7] = [
    [3, 1, 1, 1, 1, 1, 3],
    [1, 3, 1, 1, 1, 1, 3],
    [1, 1, 3, 1, 1, 1, 3],
    [1, 1, 1, 3, 1, 1, 3],
    [1, 1, 1, 1, 3, 1, 3],
    [1, 1, 1, 1, 1, 3, 3],
    [3, 3, 3, 3, 3, 3, 7],
];

fn rows_of<const N: usize>(m: &[[i64; N]; N]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.to_vec()).collect()
}

fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds `f` and `f*` for `spec` and checks `b(f_i, f_j*) = delta_ij`.
pub fn ambient_basis(spec: &RootLatticeSpec) -> Result<AmbientBasis> {
    let n = spec.n;
    let ge = gram_e(spec.family, n);
    let (f_in_e, fstar_in_f): (IntMatrix, RatMatrix) = match (spec.family, n) {
        (Family::A, _) => {
            // f_i = e_i + ... + e_n;  f_i* = f_i - (1/(n+1)) sum_l f_l
            let f: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|l| (l >= i) as i64).collect()).collect();
            let p: Vec<Vec<BigRational>> = (0..n)
                .map(|i| (0..n).map(|l| frac((i == l) as i64 * (n as i64 + 1) - 1, n as i64 + 1)).collect())
                .collect();
            (IntMatrix::from_i64(&f)?, RatMatrix::from_rationals(&p, n)?)
        }
        (Family::D, _) if n % 2 == 1 => {
            let mut f = vec![vec![0i64; n]; n];
            for i in 0..n - 3 {
                f[i][i] = 1;
                for l in i + 1..n - 2 {
                    f[i][l] = 2;
                }
                f[i][n - 2] = 1;
                f[i][n - 1] = 1;
            }
            f[n - 3][n - 3] = 1;
            f[n - 3][n - 2] = 1;
            f[n - 3][n - 1] = 1;
            f[n - 2][n - 1] = 1;
            for l in 0..n - 2 {
                f[n - 1][l] = 1;
            }
            f[n - 1][n - 1] = 1;
            // f_i* = (1/4) sum_{l=0}^{n-1} (-1)^l (n - 2l) f_{i+l}, indices mod n
            let mut p = vec![vec![BigRational::zero(); n]; n];
            for (i, row) in p.iter_mut().enumerate() {
                for l in 0..n {
                    let sign = if l % 2 == 0 { 1 } else { -1 };
                    row[(i + l) % n] = frac(sign * (n as i64 - 2 * l as i64), 4);
                }
            }
            (IntMatrix::from_i64(&f)?, RatMatrix::from_rationals(&p, n)?)
        }
        (Family::D, _) => {
            let mut f = vec![vec![0i64; n]; n];
            for (i, row) in f.iter_mut().enumerate().take(n - 1) {
                row[i] = 1;
            }
            for l in 0..n - 2 {
                f[n - 1][l] = 1;
            }
            f[n - 1][n - 1] = 1;
            // f_i* = sum_l (1/4)(n - 2|i - l|) f_l
            let p: Vec<Vec<BigRational>> = (0..n)
                .map(|i| (0..n).map(|l| frac(n as i64 - 2 * (i as i64 - l as i64).abs(), 4)).collect())
                .collect();
            (IntMatrix::from_i64(&f)?, RatMatrix::from_rationals(&p, n)?)
        }
        (Family::E, 6) => (
            IntMatrix::from_i64(&rows_of(&E6_F))?.transpose(),
            RatMatrix::new(IntMatrix::from_i64(&rows_of(&E6_S))?.transpose(), BigInt::from(3))?,
        ),
        (Family::E, 7) => (
            IntMatrix::from_i64(&rows_of(&E7_F))?.transpose(),
            RatMatrix::new(IntMatrix::from_i64(&rows_of(&E7_S))?.transpose(), BigInt::from(2))?,
        ),
        (Family::E, _) => {
            // unimodular: f = e and f* is the dual basis
            let f = IntMatrix::identity(n);
            let p = inverse(&RatMatrix::from_int(ge.clone()))?;
            (f, p)
        }
    };
    let gram_f = f_in_e.mul(&ge)?.mul(&f_in_e.transpose())?;
    let pairing = RatMatrix::from_int(gram_f.clone()).mul(&fstar_in_f.transpose())?;
    if pairing != RatMatrix::identity(n) {
        return Err(Error::Consistency(format!("f and f* are not dual bases for {spec}")));
    }
    let gram_fstar = fstar_in_f.mul(&RatMatrix::from_int(gram_f.clone()))?.mul(&fstar_in_f.transpose())?;
    Ok(AmbientBasis { spec: *spec, gram_e: ge, f_in_e, fstar_in_f, gram_f, gram_fstar })
}

/// `L*/L` as an abstract group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiscriminantGroup {
    /// `None` for the trivial group of `E_8`.
    pub ring: Option<RingSpec>,
    pub order: u64,
}

/// The discriminant group, cross-checked against `det(gram_e)`.
pub fn discriminant_group(spec: &RootLatticeSpec) -> Result<DiscriminantGroup> {
    let order = spec.ring.map_or(1, |r| r.order() as u64);
    let det = det_int(&gram_e(spec.family, spec.n))?;
    if det != BigInt::from(order) {
        return Err(Error::Consistency(format!("det of {spec} is {det}, expected {order}")));
    }
    Ok(DiscriminantGroup { ring: spec.ring, order })
}

fn rho_block(spec: &RootLatticeSpec, x: &[i64]) -> Elem {
    let n = spec.n;
    let md = |v: i64, k: i64| v.rem_euclid(k) as Elem;
    let sum: i64 = x.iter().sum();
    // odd/even refer to 1-based indices
    let odd: i64 = x.iter().step_by(2).sum();
    let even: i64 = x.iter().skip(1).step_by(2).sum();
    match (spec.family, spec.ring) {
        (Family::A, _) => md(sum, n as i64 + 1),
        (Family::D, Some(RingSpec::ZMod(4))) => md(sum, 4),
        (Family::D, Some(r)) => {
            let (a, c) = (md(odd, 2), md(even, 2));
            match r {
                // a + c(1 + u)
                RingSpec::F2U => (a ^ c) | (c << 1),
                // a w + c w^2 = c + (a + c) w
                RingSpec::F4 => c | ((a ^ c) << 1),
                RingSpec::F2xF2 => (a << 1) | c,
                RingSpec::ZMod(_) => unreachable!(),
            }
        }
        (Family::E, Some(RingSpec::ZMod(3))) => md(x[0] + x[1] + x[2] - x[3] - x[4] - x[5], 3),
        (Family::E, Some(RingSpec::ZMod(2))) => md(sum, 2),
        _ => unreachable!("E8 has no rho"),
    }
}

/// `rho^{(+)m}` on a vector of `(L*)^m` in `f*`-coordinates.
pub fn rho(spec: &RootLatticeSpec, x: &[i64]) -> Result<Vec<Elem>> {
    spec.require_ring()?;
    if x.is_empty() || x.len() % spec.n != 0 {
        return Err(Error::LengthMismatch { expected: spec.n, found: x.len() });
    }
    Ok(x.chunks(spec.n).map(|b| rho_block(spec, b)).collect())
}

/// `rho` on rational coordinates, rejecting vectors outside `(L*)^m`.
pub fn rho_rational(spec: &RootLatticeSpec, x: &[BigRational]) -> Result<Vec<Elem>> {
    let ints: Option<Vec<i64>> = x.iter().map(|q| q.is_integer().then(|| q.to_integer().to_i64()).flatten()).collect();
    rho(spec, &ints.ok_or(Error::NotIntegral)?)
}

/// A fixed preimage under `rho` of each coordinate of `c`.
pub fn lift(spec: &RootLatticeSpec, c: &[Elem]) -> Result<Vec<i64>> {
    let ring = spec.require_ring()?;
    ring.check_vec(c)?;
    let n = spec.n;
    let mut out = vec![0i64; n * c.len()];
    for (blk, &x) in c.iter().enumerate() {
        let o = blk * n;
        // coefficients of f_1* and f_2*
        let (a, b) = match ring {
            RingSpec::ZMod(_) => (x as i64, 0),
            RingSpec::F2U => ((x & 1 ^ x >> 1) as i64, (x >> 1) as i64),
            RingSpec::F4 => (((x >> 1) ^ (x & 1)) as i64, (x & 1) as i64),
            RingSpec::F2xF2 => ((x >> 1) as i64, (x & 1) as i64),
        };
        out[o] = a;
        if b != 0 {
            out[o + 1] = b;
        }
    }
    Ok(out)
}

impl AmbientBasis {
    /// Gram matrix of `f*` as integers over a common denominator.
    pub fn scaled_gram_fstar(&self) -> (Vec<Vec<i64>>, i64) {
        let num = self.gram_fstar.numerator().to_i64_rows().expect("small gram");
        let den = self.gram_fstar.denominator().to_i64().expect("small denominator");
        (num, den)
    }

    /// `b(x, y)` for `x, y` in `(L*)^m`, `f*`-coordinates.
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> BigRational {
        let (g, den) = self.scaled_gram_fstar();
        let n = self.spec.n;
        let mut s: i128 = 0;
        for (xb, yb) in x.chunks(n).zip(y.chunks(n)) {
            for i in 0..n {
                if xb[i] == 0 {
                    continue;
                }
                for j in 0..n {
                    s += xb[i] as i128 * g[i][j] as i128 * yb[j] as i128;
                }
            }
        }
        BigRational::new(BigInt::from(s), BigInt::from(den))
    }

    /// `f_i` in `f*`-coordinates: the rows of `gram_f`.
    pub fn lattice_rows_in_fstar(&self) -> IntMatrix {
        self.gram_f.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    fn all_specs() -> Vec<RootLatticeSpec> {
        let mut v = Vec::new();
        for n in 1..=12 {
            v.push(RootLatticeSpec::a(n).unwrap());
        }
        for n in 4..=12 {
            if n % 2 == 1 {
                v.push(RootLatticeSpec::d(n, None).unwrap());
            } else {
                for r in [RingSpec::F2U, RingSpec::F4, RingSpec::F2xF2] {
                    v.push(RootLatticeSpec::d(n, Some(r)).unwrap());
                }
            }
        }
        for n in 6..=8 {
            v.push(RootLatticeSpec::e(n).unwrap());
        }
        v
    }

    #[test]
    fn bases_are_dual_and_determinants_match() {
        for s in all_specs() {
            let b = ambient_basis(&s).unwrap();
            let g = discriminant_group(&s).unwrap();
            // f is a basis of L: unimodular change from e
            assert_eq!(det_int(&b.f_in_e).unwrap().magnitude(), &num_bigint::BigUint::from(1u8), "{s}");
            assert_eq!(det_int(&b.gram_f).unwrap(), BigInt::from(g.order));
        }
    }

    #[test]
    fn spec_validation() {
        assert!(RootLatticeSpec::a(0).is_err());
        assert!(RootLatticeSpec::d(3, None).is_err());
        assert!(RootLatticeSpec::d(5, Some(RingSpec::F4)).is_err());
        assert!(RootLatticeSpec::d(6, Some(RingSpec::ZMod(4))).is_err());
        assert!(RootLatticeSpec::e(9).is_err());
        assert_eq!(RootLatticeSpec::d(8, None).unwrap().code_ring(), Some(RingSpec::F2U));
        assert_eq!(RootLatticeSpec::e(8).unwrap().code_ring(), None);
        assert!(rho(&RootLatticeSpec::e(8).unwrap(), &[0; 8]).is_err());
    }

    #[test]
    fn gram_matches_explicit_forms() {
        // A_n inside Z^{n+1} with e_l = eps_l - eps_{l+1}: f_i = eps_i - eps_{n+1}
        // and f_i* = eps_i - (1/(n+1)) sum eps, so b(f_i*, f_j*) = delta_ij - 1/(n+1)
        for n in 1..=8usize {
            let b = ambient_basis(&RootLatticeSpec::a(n).unwrap()).unwrap();
            for i in 0..n {
                for j in 0..n {
                    let v = frac((i == j) as i64 * (n as i64 + 1) - 1, n as i64 + 1);
                    assert_eq!(b.gram_fstar.get(i, j), v);
                    assert_eq!(b.gram_f.get(i, j), &BigInt::from(1 + (i == j) as i64));
                }
            }
        }
        // D_n inside Z^n with e_i = eps_i - eps_{i+1} (i < n), e_n = eps_{n-1} + eps_n
        for n in 4..=10usize {
            let b = ambient_basis(&RootLatticeSpec::d(n, None).unwrap()).unwrap();
            let mut eps = vec![vec![0i64; n]; n];
            for i in 0..n - 1 {
                eps[i][i] = 1;
                eps[i][i + 1] = -1;
            }
            eps[n - 1][n - 2] = 1;
            eps[n - 1][n - 1] = 1;
            let f = b.f_in_e.to_i64_rows().unwrap();
            let fv: Vec<Vec<i64>> =
                f.iter().map(|r| (0..n).map(|c| (0..n).map(|k| r[k] * eps[k][c]).sum()).collect()).collect();
            for i in 0..n {
                for j in 0..n {
                    let dot: i64 = (0..n).map(|c| fv[i][c] * fv[j][c]).sum();
                    assert_eq!(b.gram_f.get(i, j), &BigInt::from(dot), "D{n}");
                }
            }
        }
        // E_6 dual form: (1/3) s s^T + I + fixed off-diagonal ones
        let b = ambient_basis(&RootLatticeSpec::e(6).unwrap()).unwrap();
        let s = [1i64, 1, 1, -1, -1, -1];
        let extra = [(0, 3), (1, 3), (1, 4), (2, 3), (2, 4), (2, 5)];
        for i in 0..6 {
            for j in 0..6 {
                let mut v = frac(s[i] * s[j], 3);
                if i == j {
                    v += BigRational::one();
                }
                if extra.contains(&(i.min(j), i.max(j))) {
                    v += BigRational::one();
                }
                assert_eq!(b.gram_fstar.get(i, j), v, "({i},{j})");
            }
        }
    }

    #[test]
    fn lift_then_rho_is_identity() {
        for s in all_specs().into_iter().filter(|s| s.code_ring().is_some()) {
            let r = s.code_ring().unwrap();
            for x in r.elements() {
                assert_eq!(rho(&s, &lift(&s, &[x]).unwrap()).unwrap(), vec![x], "{s} {x}");
            }
        }
    }

    #[test]
    fn kernel_of_rho_is_lattice() {
        for s in all_specs().into_iter().filter(|s| s.code_ring().is_some()) {
            let b = ambient_basis(&s).unwrap();
            for row in b.gram_f.to_i64_rows().unwrap() {
                assert!(rho(&s, &row).unwrap().iter().all(|&v| v == 0), "{s}");
            }
        }
    }

    proptest! {
        #[test]
        fn rho_is_additive_and_tracks_pairing(idx in 0usize..40, x in prop::collection::vec(-5i64..6, 12), y in prop::collection::vec(-5i64..6, 12)) {
            let specs: Vec<_> = all_specs().into_iter().filter(|s| s.code_ring().is_some()).collect();
            let s = specs[idx % specs.len()];
            let n = s.rank();
            let ring = s.code_ring().unwrap();
            let (x, y) = (&x[..n], &y[..n]);
            let sum: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
            let rx = rho(&s, x).unwrap();
            let ry = rho(&s, y).unwrap();
            prop_assert_eq!(rho(&s, &sum).unwrap(), vec![ring.add(rx[0], ry[0])]);
            // b(x, y) mod Z depends only on rho(x), rho(y)
            let b = ambient_basis(&s).unwrap();
            let lx = lift(&s, &rx).unwrap();
            let ly = lift(&s, &ry).unwrap();
            let d = b.pairing(x, y) - b.pairing(&lx, &ly);
            prop_assert!(d.is_integer());
        }
    }
}
