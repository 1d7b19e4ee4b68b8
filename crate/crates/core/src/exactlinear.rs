//! Exact integer and rational matrices: Hermite normal form, determinants,
//! inverses, and the plain-text lattice dump format.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows; `cols` fixes the width when `rows` is empty.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension(format!("row of length {} in a {}-column matrix", r.len(), cols)));
            }
            data.extend(r.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(rows, cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries as `i64`, or `None` if any does not fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|v| v.to_i64()).collect()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &BigInt) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v * s).collect() }
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.cols {
            return Err(Error::Dimension(format!("stacking {} and {} columns", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(IntMatrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Block-diagonal sum of `copies` copies of `self`.
    pub fn block_diag(&self, copies: usize) -> IntMatrix {
        let mut out = Self::zeros(self.rows * copies, self.cols * copies);
        for b in 0..copies {
            for i in 0..self.rows {
                for j in 0..self.cols {
                    out.set(b * self.rows + i, b * self.cols + j, self.get(i, j).clone());
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn content(&self) -> BigInt {
        self.data.iter().fold(BigInt::zero(), |g, v| g.gcd(v))
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Rational matrix stored as an integer numerator over a positive common
/// denominator, always in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    num: IntMatrix,
    den: BigInt,
}

impl RatMatrix {
    pub fn new(num: IntMatrix, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Dimension("zero denominator".into()));
        }
        let (mut num, mut den) = (num, den);
        if den.is_negative() {
            num = num.scale(&BigInt::from(-1));
            den = -den;
        }
        let g = num.content().gcd(&den);
        if !g.is_one() && !g.is_zero() {
            num.data.iter_mut().for_each(|v| *v /= &g);
            den /= &g;
        }
        if num.is_zero() {
            den = BigInt::one();
        }
        Ok(RatMatrix { num, den })
    }

    pub fn from_int(m: IntMatrix) -> Self {
        RatMatrix { num: m, den: BigInt::one() }
    }

    pub fn from_rationals(rows: &[Vec<BigRational>], cols: usize) -> Result<Self> {
        let den = rows.iter().flatten().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
        let num_rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|q| q.numer() * (&den / q.denom())).collect())
            .collect();
        Self::new(IntMatrix::from_rows(&num_rows, cols)?, den)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_int(IntMatrix::identity(n))
    }

    pub fn numerator(&self) -> &IntMatrix {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn rows(&self) -> usize {
        self.num.rows
    }

    pub fn cols(&self) -> usize {
        self.num.cols
    }

    pub fn get(&self, i: usize, j: usize) -> BigRational {
        BigRational::new(self.num.get(i, j).clone(), self.den.clone())
    }

    pub fn to_rationals(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows()).map(|i| (0..self.cols()).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_int(&self) -> Option<IntMatrix> {
        self.is_integral().then(|| self.num.clone())
    }

    pub fn transpose(&self) -> Self {
        RatMatrix { num: self.num.transpose(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        Self::new(self.num.mul(&other.num)?, &self.den * &other.den)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows() == self.cols() && self.num == self.num.transpose()
    }

    pub fn block_diag(&self, copies: usize) -> Self {
        RatMatrix { num: self.num.block_diag(copies), den: self.den.clone() }
    }
}

/// Row-style Hermite normal form of the row lattice of `m`.
///
/// The result is upper echelon with positive pivots, entries above each pivot
/// reduced into `[0, pivot)`, and zero rows dropped, so two generating sets
/// span the same lattice exactly when their forms are equal.
pub fn hnf(m: &IntMatrix) -> IntMatrix {
    let cols = m.cols;
    let mut a: Vec<Vec<BigInt>> = m.to_rows();
    a.retain(|r| r.iter().any(|v| !v.is_zero()));
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        loop {
            // smallest nonzero entry in column c at or below row r
            let best = (r..a.len()).filter(|&i| !a[i][c].is_zero()).min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()));
            let Some(best) = best else { break };
            a.swap(r, best);
            let mut done = true;
            for i in r + 1..a.len() {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = a[i][c].div_floor(&a[r][c]);
                let (head, tail) = a.split_at_mut(i);
                sub_multiple(&mut tail[0], &head[r], &q, c);
                if !tail[0][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < a.len() && !a[r][c].is_zero() {
            if a[r][c].is_negative() {
                a[r].iter_mut().for_each(|v| *v = -&*v);
            }
            for i in 0..r {
                let q = a[i][c].div_floor(&a[r][c]);
                if !q.is_zero() {
                    let (head, tail) = a.split_at_mut(r);
                    sub_multiple(&mut head[i], &tail[0], &q, c);
                }
            }
            pivots.push(c);
            r += 1;
        }
    }
    a.truncate(r);
    IntMatrix::from_rows(&a, cols).expect("rows keep their width")
}

fn sub_multiple(target: &mut [BigInt], src: &[BigInt], q: &BigInt, from: usize) {
    for j in from..target.len() {
        if !src[j].is_zero() {
            target[j] -= q * &src[j];
        }
    }
}

/// Pivot columns of a matrix already in Hermite normal form.
pub fn hnf_pivots(h: &IntMatrix) -> Vec<usize> {
    (0..h.rows).map(|i| (0..h.cols).find(|&j| !h.get(i, j).is_zero()).expect("no zero rows in HNF")).collect()
}

/// Whether `v` lies in the row lattice of the Hermite form `h`.
pub fn hnf_contains(h: &IntMatrix, v: &[BigInt]) -> bool {
    if v.len() != h.cols {
        return false;
    }
    let mut v = v.to_vec();
    for (i, c) in hnf_pivots(h).into_iter().enumerate() {
        // entries left of the pivot must already be cleared
        if v[..c].iter().any(|x| !x.is_zero()) {
            return false;
        }
        let p = h.get(i, c);
        if !v[c].is_multiple_of(p) {
            return false;
        }
        let q = &v[c] / p;
        sub_multiple(&mut v, h.row(i), &q, c);
    }
    v.iter().all(Zero::is_zero)
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn det_int(m: &IntMatrix) -> Result<BigInt> {
    if m.rows != m.cols {
        return Err(Error::Dimension(format!("determinant of a {}x{} matrix", m.rows, m.cols)));
    }
    let n = m.rows;
    let mut a = m.to_rows();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(BigInt::zero());
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    Ok(if n == 0 { BigInt::one() } else { sign * &a[n - 1][n - 1] })
}

pub fn det(m: &RatMatrix) -> Result<BigRational> {
    let d = det_int(&m.num)?;
    Ok(BigRational::new(d, num_traits::pow(m.den.clone(), m.rows())))
}

pub fn rank(m: &IntMatrix) -> usize {
    hnf(m).rows
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
pub fn inverse(m: &RatMatrix) -> Result<RatMatrix> {
    let n = m.rows();
    if n != m.cols() {
        return Err(Error::Dimension(format!("inverse of a {}x{} matrix", n, m.cols())));
    }
    let mut a: Vec<Vec<BigRational>> = m.to_rationals();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).ok_or(Error::Singular)?;
        a.swap(p, c);
        inv.swap(p, c);
        let piv = a[c][c].clone();
        for j in 0..n {
            a[c][j] = &a[c][j] / &piv;
            inv[c][j] = &inv[c][j] / &piv;
        }
        for i in 0..n {
            if i == c || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in 0..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
                let t = &f * &inv[c][j];
                inv[i][j] -= t;
            }
        }
    }
    RatMatrix::from_rationals(&inv, n)
}

/// A lattice basis as written by `build` and read by `check`/`identify`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeDump {
    pub basis: RatMatrix,
}

impl LatticeDump {
    /// `denominator d` followed by one row of integers per basis vector.
    pub fn write(&self) -> String {
        let mut s = format!("denominator {}\n", self.basis.denominator());
        s.push_str(&self.basis.numerator().to_string());
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, head) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty lattice dump".into() })?;
        let mut parts = head.split_whitespace();
        if parts.next() != Some("denominator") {
            return Err(Error::Parse { line: 1, msg: "expected `denominator <d>`".into() });
        }
        let den: BigInt = parts
            .next()
            .and_then(|t| t.parse().ok())
            .filter(|d: &BigInt| d.is_positive())
            .ok_or(Error::Parse { line: 1, msg: "denominator must be a positive integer".into() })?;
        if parts.next().is_some() {
            return Err(Error::Parse { line: 1, msg: "trailing tokens after denominator".into() });
        }
        let mut rows = Vec::new();
        for (i, l) in lines {
            let row: std::result::Result<Vec<BigInt>, _> = l.split_whitespace().map(str::parse).collect();
            let row = row.map_err(|_| Error::Parse { line: i + 1, msg: "non-integer entry".into() })?;
            if let Some(first) = rows.first() {
                let first: &Vec<BigInt> = first;
                if first.len() != row.len() {
                    return Err(Error::Parse { line: i + 1, msg: "ragged rows".into() });
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse { line: 2, msg: "no basis rows".into() });
        }
        let cols = rows[0].len();
        let basis = RatMatrix::new(IntMatrix::from_rows(&rows, cols)?, den)?;
        Ok(LatticeDump { basis })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64(rows).unwrap()
    }

    #[test]
    fn hnf_small() {
        let h = hnf(&int(&[vec![2, 4], vec![3, 1], vec![0, 5]]));
        assert_eq!(h, int(&[vec![1, 2], vec![0, 5]]));
        let h = hnf(&int(&[vec![0, 0, 0]]));
        assert_eq!(h.rows(), 0);
        let h = hnf(&int(&[vec![4, 2], vec![0, 6]]));
        assert_eq!(h, int(&[vec![4, 2], vec![0, 6]]));
    }

    #[test]
    fn det_and_inverse() {
        let a = int(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(det_int(&a).unwrap(), BigInt::from(4));
        let inv = inverse(&RatMatrix::from_int(a.clone())).unwrap();
        assert_eq!(inv.denominator(), &BigInt::from(4));
        assert_eq!(RatMatrix::from_int(a).mul(&inv).unwrap(), RatMatrix::identity(3));
        assert_eq!(inverse(&RatMatrix::from_int(int(&[vec![1, 2], vec![2, 4]]))), Err(Error::Singular));
        assert_eq!(det_int(&int(&[vec![0, 1], vec![1, 0]])).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn dump_round_trip() {
        let b = RatMatrix::new(int(&[vec![1, 2], vec![0, 4]]), BigInt::from(2)).unwrap();
        let d = LatticeDump { basis: b };
        let text = d.write();
        assert_eq!(text, "denominator 2\n1 2\n0 4\n");
        assert_eq!(LatticeDump::parse(&text).unwrap(), d);
        assert!(LatticeDump::parse("denominator 0\n1\n").is_err());
        assert!(LatticeDump::parse("denominator 1\n1 2\n3\n").is_err());
        assert!(LatticeDump::parse("").is_err());
    }

    fn small_matrix(max_rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-6i64..7, cols), 1..max_rows)
    }

    proptest! {
        #[test]
        fn hnf_is_canonical(rows in small_matrix(6, 4), seed in 0u64..1000) {
            let m = int(&rows);
            let h = hnf(&m);
            prop_assert_eq!(hnf(&h), h.clone());
            // a unimodular row operation does not change the form
            let mut rows2 = rows.clone();
            let n = rows2.len();
            let (i, j) = ((seed as usize) % n, (seed as usize / 7) % n);
            if i != j {
                let k = (seed % 5) as i64 - 2;
                for c in 0..4 { rows2[i][c] += k * rows[j][c]; }
            }
            rows2.reverse();
            prop_assert_eq!(hnf(&int(&rows2)), h.clone());
            for r in &rows {
                let v: Vec<BigInt> = r.iter().map(|&x| BigInt::from(x)).collect();
                prop_assert!(hnf_contains(&h, &v));
            }
        }

        #[test]
        fn det_matches_hnf_for_full_rank(rows in prop::collection::vec(prop::collection::vec(-5i64..6, 3), 3)) {
            let m = int(&rows);
            let d = det_int(&m).unwrap();
            let h = hnf(&m);
            if !d.is_zero() {
                let prod = (0..3).fold(BigInt::one(), |p, i| p * h.get(i, i));
                prop_assert_eq!(prod, d.abs());
            } else {
                prop_assert!(h.rows() < 3);
            }
        }

        #[test]
        fn inverse_is_two_sided(rows in prop::collection::vec(prop::collection::vec(-5i64..6, 3), 3), den in 1i64..5) {
            let m = RatMatrix::new(int(&rows), BigInt::from(den)).unwrap();
            if let Ok(inv) = inverse(&m) {
                prop_assert_eq!(m.mul(&inv).unwrap(), RatMatrix::identity(3));
                prop_assert_eq!(inv.mul(&m).unwrap(), RatMatrix::identity(3));
                prop_assert_eq!(det(&m).unwrap() * det(&inv).unwrap(), BigRational::one());
            } else {
                prop_assert!(det(&m).unwrap().is_zero());
            }
        }
    }
}
