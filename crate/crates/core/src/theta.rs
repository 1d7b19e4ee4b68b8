//! Short-vector enumeration, root systems and theta series.
//!
//! Enumeration is Fincke-Pohst over a pairwise size-reduced basis. Pruning
//! uses `f64` with outward slack, so it can only admit extra candidates; every
//! candidate is then checked with exact integer arithmetic.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::construction::CodeLattice;
use crate::error::{Error, Result};
use crate::exactlinear::RatMatrix;
use crate::rootlattices::Family;

/// Exact norm of a vector.
pub type Norm = Ratio<i64>;

/// Enumeration refuses lattices of larger rank.
pub const RANK_LIMIT: usize = 32;

const SLACK: f64 = 1e-9;

/// A positive-definite Gram matrix prepared for repeated enumeration.
#[derive(Debug, Clone)]
pub struct Enumerator {
    n: usize,
    /// Gram matrix times `den`, original basis.
    num: Vec<i64>,
    den: i64,
    /// Reduced basis rows in terms of the original basis, and the inverse.
    t: Vec<Vec<i64>>,
    t_inv: Vec<Vec<i64>>,
    /// Fincke-Pohst coefficients of the reduced Gram matrix.
    q: Vec<Vec<f64>>,
}

fn to_i64_matrix(m: &RatMatrix) -> Result<(Vec<i64>, i64)> {
    let rows = m.numerator().to_i64_rows().ok_or(Error::Overflow("gram entries"))?;
    let den = m.denominator().to_i64().ok_or(Error::Overflow("gram denominator"))?;
    Ok((rows.into_iter().flatten().collect(), den))
}

impl Enumerator {
    pub fn new(gram: &RatMatrix) -> Result<Self> {
        let n = gram.rows();
        if n != gram.cols() || !gram.is_symmetric() {
            return Err(Error::Dimension("gram matrix must be square and symmetric".into()));
        }
        if n > RANK_LIMIT {
            return Err(Error::RankGuard { rank: n, limit: RANK_LIMIT });
        }
        let (num, den) = to_i64_matrix(gram)?;
        let (t, t_inv, reduced) = size_reduce(n, &num)?;
        let q = fincke_pohst_form(n, &reduced, den)?;
        Ok(Enumerator { n, num, den, t, t_inv, q })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Exact norm of `sum (k_i + c_i) b_i` with `c = offset / oden`.
    fn exact_norm(&self, k: &[i64], offset: &[i64], oden: i64) -> Result<Norm> {
        let n = self.n;
        let y: Vec<i128> = (0..n).map(|i| k[i] as i128 * oden as i128 + offset[i] as i128).collect();
        let mut s: i128 = 0;
        for i in 0..n {
            if y[i] == 0 {
                continue;
            }
            let mut row: i128 = 0;
            for j in 0..n {
                row += self.num[i * n + j] as i128 * y[j];
            }
            s = s.checked_add(y[i].checked_mul(row).ok_or(Error::Overflow("norm"))?).ok_or(Error::Overflow("norm"))?;
        }
        let d = self.den as i128 * oden as i128 * oden as i128;
        let g = s.gcd(&d);
        let (a, b) = (s / g, d / g);
        Ok(Norm::new_raw(
            a.to_i64().ok_or(Error::Overflow("norm"))?,
            b.to_i64().ok_or(Error::Overflow("norm"))?,
        ))
    }

    /// Calls `f(k, norm)` for every `k` in `Z^n` with
    /// `norm(sum (k_i + c_i) b_i) <= bound`, where `c` is the optional offset.
    pub fn for_each<F: FnMut(&[i64], Norm)>(&self, offset: Option<&[BigRational]>, bound: Norm, mut f: F) -> Result<()> {
        if bound < Norm::zero() {
            return Err(Error::NegativeBound(bound.floor().to_integer()));
        }
        let n = self.n;
        let (off, oden) = match offset {
            None => (vec![0i64; n], 1i64),
            Some(c) => {
                if c.len() != n {
                    return Err(Error::LengthMismatch { expected: n, found: c.len() });
                }
                let d = c.iter().fold(BigInt::from(1), |l, q| l.lcm(q.denom()));
                let v: Option<Vec<i64>> = c.iter().map(|q| (q.numer() * (&d / q.denom())).to_i64()).collect();
                (v.ok_or(Error::Overflow("offset"))?, d.to_i64().ok_or(Error::Overflow("offset"))?)
            }
        };
        // offset in reduced coordinates: c' = c T^{-1}
        let off_red: Vec<f64> = (0..n)
            .map(|j| (0..n).map(|i| off[i] as f64 * self.t_inv[i][j] as f64).sum::<f64>() / oden as f64)
            .collect();
        let budget = *bound.numer() as f64 / *bound.denom() as f64 * (1.0 + SLACK) + SLACK;
        let mut x = vec![0i64; n];
        let mut k = vec![0i64; n];
        let mut err = None;
        let mut visit = |x: &[i64]| {
            // back to the original basis: k = x T
            for (j, kj) in k.iter_mut().enumerate() {
                *kj = (0..n).map(|i| x[i] * self.t[i][j]).sum();
            }
            match self.exact_norm(&k, &off, oden) {
                Ok(nv) if nv <= bound => f(&k, nv),
                Ok(_) => {}
                Err(e) => err = Some(e),
            }
        };
        if n == 0 {
            visit(&x);
        } else {
            self.recurse(n - 1, budget, &off_red, &mut x, &mut visit);
        }
        err.map_or(Ok(()), Err)
    }

    fn recurse<V: FnMut(&[i64])>(&self, i: usize, budget: f64, c: &[f64], x: &mut [i64], visit: &mut V) {
        let n = self.n;
        let s: f64 = (i + 1..n).map(|j| self.q[i][j] * (x[j] as f64 + c[j])).sum();
        let center = -s - c[i];
        let r = (budget.max(0.0) / self.q[i][i]).sqrt();
        let eps = SLACK * (1.0 + center.abs() + r);
        let lo = (center - r - eps).ceil() as i64;
        let hi = (center + r + eps).floor() as i64;
        for v in lo..=hi {
            x[i] = v;
            let d = v as f64 + c[i] + s;
            let rest = budget - self.q[i][i] * d * d;
            if rest < -SLACK * (1.0 + budget.abs()) {
                continue;
            }
            if i == 0 {
                visit(x);
            } else {
                self.recurse(i - 1, rest, c, x, visit);
            }
        }
        x[i] = 0;
    }
}

/// Pairwise size reduction: `b_i -= round(G_ij / G_jj) b_j` until no pair
/// improves, then sort by norm. Returns `T`, `T^{-1}` and `T G T^t`.
#[allow(clippy::type_complexity)]
fn size_reduce(n: usize, g: &[i64]) -> Result<(Vec<Vec<i64>>, Vec<Vec<i64>>, Vec<i64>)> {
    let mut g: Vec<i128> = g.iter().map(|&v| v as i128).collect();
    let mut t: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    let mut t_inv = t.clone();
    let mut changed = true;
    let mut rounds = 0;
    while changed && rounds < 1000 {
        changed = false;
        rounds += 1;
        for i in 0..n {
            for j in 0..n {
                if i == j || g[j * n + j] <= 0 {
                    continue;
                }
                let (gij, gjj) = (g[i * n + j], g[j * n + j]);
                if 2 * gij.abs() <= gjj {
                    continue;
                }
                // nearest integer to gij / gjj
                let q = Integer::div_floor(&(2 * gij + gjj), &(2 * gjj));
                if q == 0 {
                    continue;
                }
                // row and column operation on the Gram matrix
                for c in 0..n {
                    g[i * n + c] -= q * g[j * n + c];
                }
                for r in 0..n {
                    g[r * n + i] -= q * g[r * n + j];
                }
                let q64 = q.to_i64().ok_or(Error::Overflow("size reduction"))?;
                for c in 0..n {
                    t[i][c] -= q64 * t[j][c];
                    t_inv[c][j] += q64 * t_inv[c][i];
                }
                changed = true;
            }
        }
    }
    // sort by norm; the last vector is enumerated outermost
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| g[i * n + i]);
    let t2: Vec<Vec<i64>> = order.iter().map(|&i| t[i].clone()).collect();
    let t_inv2: Vec<Vec<i64>> = (0..n).map(|r| order.iter().map(|&i| t_inv[r][i]).collect()).collect();
    let g2: Vec<i64> = order
        .iter()
        .flat_map(|&i| order.iter().map(move |&j| (i, j)))
        .map(|(i, j)| g[i * n + j].to_i64().ok_or(Error::Overflow("size reduction")))
        .collect::<Result<_>>()?;
    Ok((t2, t_inv2, g2))
}

/// `Q(y) = sum_i q_ii (y_i + sum_{j>i} q_ij y_j)^2`, computed exactly and
/// rounded once. Fails unless the form is positive definite.
fn fincke_pohst_form(n: usize, g: &[i64], den: i64) -> Result<Vec<Vec<f64>>> {
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::new(BigInt::from(g[i * n + j]), BigInt::from(den))).collect())
        .collect();
    let mut q = vec![vec![0.0; n]; n];
    for i in 0..n {
        let p = a[i][i].clone();
        if !p.is_positive() {
            return Err(Error::NotPositiveDefinite);
        }
        q[i][i] = p.to_f64().unwrap_or(f64::NAN);
        for j in i + 1..n {
            q[i][j] = (&a[i][j] / &p).to_f64().unwrap_or(f64::NAN);
        }
        for j in i + 1..n {
            let mu = &a[j][i] / &p;
            for k in i + 1..n {
                let t = &mu * &a[i][k];
                a[j][k] -= t;
            }
        }
    }
    Ok(q)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortVectorReport {
    pub bound: Norm,
    /// Number of vectors of each norm up to the bound.
    pub counts: BTreeMap<Norm, u64>,
    /// Coefficient vectors with their norms, when requested.
    pub vectors: Option<Vec<(Vec<i64>, Norm)>>,
}

impl ShortVectorReport {
    pub fn count(&self, norm: i64) -> u64 {
        self.counts.get(&Norm::from_integer(norm)).copied().unwrap_or(0)
    }
}

/// All vectors of norm at most `bound` (including zero).
pub fn short_vectors(gram: &RatMatrix, bound: i64, collect: bool) -> Result<ShortVectorReport> {
    if bound < 0 {
        return Err(Error::NegativeBound(bound));
    }
    coset_short_vectors(gram, None, Norm::from_integer(bound), collect)
}

/// Vectors `sum (k_i + c_i) b_i` of norm at most `bound`.
pub fn coset_short_vectors(
    gram: &RatMatrix,
    offset: Option<&[BigRational]>,
    bound: Norm,
    collect: bool,
) -> Result<ShortVectorReport> {
    let e = Enumerator::new(gram)?;
    let mut counts = BTreeMap::new();
    let mut vectors = collect.then(Vec::new);
    e.for_each(offset, bound, |k, nv| {
        *counts.entry(nv).or_insert(0) += 1;
        if let Some(v) = vectors.as_mut() {
            v.push((k.to_vec(), nv));
        }
    })?;
    if let Some(v) = vectors.as_mut() {
        v.sort();
    }
    Ok(ShortVectorReport { bound, counts, vectors })
}

/// A root system as a multiset of irreducible components.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RootSystemLabel {
    components: BTreeMap<(Family, usize), usize>,
}

impl RootSystemLabel {
    /// Adds `count` copies of the component, normalizing `D_3 = A_3` and
    /// `D_2 = 2 A_1`.
    pub fn add(&mut self, family: Family, rank: usize, count: usize) -> Result<()> {
        let (family, rank, count) = match (family, rank) {
            (Family::A, r) if r >= 1 => (Family::A, r, count),
            (Family::D, 2) => (Family::A, 1, 2 * count),
            (Family::D, 3) => (Family::A, 3, count),
            (Family::D, r) if r >= 4 => (Family::D, r, count),
            (Family::E, r @ 6..=8) => (Family::E, r, count),
            (f, r) => return Err(Error::InvalidSpec(format!("no root system {f:?}{r}"))),
        };
        if count > 0 {
            *self.components.entry((family, rank)).or_insert(0) += count;
        }
        Ok(())
    }

    pub fn components(&self) -> impl Iterator<Item = (Family, usize, usize)> + '_ {
        self.components.iter().map(|(&(f, r), &c)| (f, r, c))
    }

    pub fn rank(&self) -> usize {
        self.components().map(|(_, r, c)| r * c).sum()
    }

    /// Number of roots.
    pub fn root_count(&self) -> usize {
        self.components().map(|(f, r, c)| c * component_roots(f, r)).sum()
    }
}

fn component_roots(f: Family, r: usize) -> usize {
    match (f, r) {
        (Family::A, r) => r * (r + 1),
        (Family::D, r) => 2 * r * (r - 1),
        (Family::E, 6) => 72,
        (Family::E, 7) => 126,
        (Family::E, _) => 240,
    }
}

impl fmt::Display for RootSystemLabel {
    /// Components in the order `A < D < E`, then by rank, e.g. `D10+2E7`;
    /// the empty system prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .components()
            .map(|(fam, r, c)| if c == 1 { format!("{fam:?}{r}") } else { format!("{c}{fam:?}{r}") })
            .collect();
        f.write_str(&parts.join("+"))
    }
}

impl FromStr for RootSystemLabel {
    type Err = Error;

    /// Accepts `D10+2E7` as well as TeX-like forms such as `D_{10}\perp 2E_7`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { line: 1, msg: format!("bad root system label `{s}`") };
        let cleaned: String = s
            .replace("\\perp", "+")
            .replace("\\oplus", "+")
            .replace(['⊥', '⊕'], "+")
            .chars()
            .filter(|c| !matches!(c, '_' | '{' | '}' | '$' | ' '))
            .collect();
        let mut label = RootSystemLabel::default();
        if cleaned == "0" {
            return Ok(label);
        }
        for tok in cleaned.split('+') {
            let pos = tok.find(|c: char| c.is_ascii_alphabetic()).ok_or_else(bad)?;
            let count = if pos == 0 { 1 } else { tok[..pos].parse().map_err(|_| bad())? };
            let fam = match &tok[pos..pos + 1] {
                "A" => Family::A,
                "D" => Family::D,
                "E" => Family::E,
                _ => return Err(bad()),
            };
            let rank: usize = tok[pos + 1..].parse().map_err(|_| bad())?;
            label.add(fam, rank, count).map_err(|_| bad())?;
        }
        Ok(label)
    }
}

/// Rank of integer vectors by fraction-free elimination.
fn integer_rank(vectors: &[&[i64]]) -> Result<usize> {
    let mut basis: Vec<(usize, Vec<i128>)> = Vec::new();
    for v in vectors {
        let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for (p, b) in &basis {
            if v[*p] != 0 {
                let (a, c) = (b[*p], v[*p]);
                for (x, y) in v.iter_mut().zip(b) {
                    *x = a.checked_mul(*x).and_then(|t| t.checked_sub(c * y)).ok_or(Error::Overflow("rank"))?;
                }
                let g = v.iter().fold(0i128, |g, x| g.gcd(x));
                if g > 1 {
                    v.iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        if let Some(p) = v.iter().position(|&x| x != 0) {
            basis.push((p, v));
        }
    }
    Ok(basis.len())
}

/// Root system of an even lattice given by its Gram matrix.
pub fn root_system_of_gram(gram: &RatMatrix) -> Result<RootSystemLabel> {
    if !gram.is_integral() {
        return Err(Error::NotIntegral);
    }
    let n = gram.rows();
    if (0..n).any(|i| !(gram.numerator().get(i, i) % 2u32).is_zero()) {
        return Err(Error::NotEven);
    }
    let rep = short_vectors(gram, 2, true)?;
    let roots: Vec<Vec<i64>> =
        rep.vectors.unwrap_or_default().into_iter().filter(|(_, nv)| *nv == Norm::from_integer(2)).map(|(v, _)| v).collect();
    let (g, _) = to_i64_matrix(gram)?;
    let images: Vec<Vec<i64>> =
        roots.iter().map(|r| (0..n).map(|j| (0..n).map(|i| r[i] * g[i * n + j]).sum()).collect()).collect();
    // union-find over non-orthogonal pairs
    let mut parent: Vec<usize> = (0..roots.len()).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let ip: i64 = images[i].iter().zip(&roots[j]).map(|(a, b)| a * b).sum();
            if ip != 0 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..roots.len() {
        let r = find(&mut parent, i);
        comps.entry(r).or_default().push(i);
    }
    let mut label = RootSystemLabel::default();
    for members in comps.values() {
        let vecs: Vec<&[i64]> = members.iter().map(|&i| roots[i].as_slice()).collect();
        let rank = integer_rank(&vecs)?;
        let count = members.len();
        let fam = if count == rank * (rank + 1) {
            Family::A
        } else if rank >= 4 && count == 2 * rank * (rank - 1) {
            Family::D
        } else if matches!((rank, count), (6, 72) | (7, 126) | (8, 240)) {
            Family::E
        } else {
            return Err(Error::Consistency(format!("component with {count} roots of rank {rank}")));
        };
        label.add(fam, rank, 1)?;
    }
    Ok(label)
}

pub fn root_system(l: &CodeLattice) -> Result<RootSystemLabel> {
    root_system_of_gram(l.gram())
}

/// `(norm, count)` for every even norm up to `max_norm` of an even lattice.
pub fn theta_coefficients(gram: &RatMatrix, max_norm: i64) -> Result<Vec<(i64, u64)>> {
    if !gram.is_integral() {
        return Err(Error::NotIntegral);
    }
    if (0..gram.rows()).any(|i| !(gram.numerator().get(i, i) % 2u32).is_zero()) {
        return Err(Error::NotEven);
    }
    let rep = short_vectors(gram, max_norm, false)?;
    Ok((0..=max_norm).step_by(2).map(|k| (k, rep.count(k))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinear::IntMatrix;
    use crate::rootlattices::gram_e;
    use proptest::prelude::*;

    fn rat(rows: &[Vec<i64>]) -> RatMatrix {
        RatMatrix::from_int(IntMatrix::from_i64(rows).unwrap())
    }

    /// Exhaustive box search as an independent count.
    fn box_count(g: &[Vec<i64>], bound: i64, radius: i64) -> BTreeMap<i64, u64> {
        let n = g.len();
        let mut out = BTreeMap::new();
        let mut x = vec![-radius; n];
        loop {
            let nv: i64 = (0..n).map(|i| (0..n).map(|j| x[i] * g[i][j] * x[j]).sum::<i64>()).sum();
            if nv <= bound {
                *out.entry(nv).or_insert(0) += 1;
            }
            let mut i = 0;
            while i < n {
                x[i] += 1;
                if x[i] <= radius {
                    break;
                }
                x[i] = -radius;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        out
    }

    #[test]
    fn e8_counts() {
        let g = RatMatrix::from_int(gram_e(Family::E, 8));
        let r = short_vectors(&g, 4, false).unwrap();
        assert_eq!((r.count(0), r.count(2), r.count(4)), (1, 240, 2160));
        assert_eq!(root_system_of_gram(&g).unwrap().to_string(), "E8");
        assert_eq!(theta_coefficients(&g, 4).unwrap(), vec![(0, 1), (2, 240), (4, 2160)]);
    }

    #[test]
    fn a1_series() {
        let g = rat(&[vec![2]]);
        let r = short_vectors(&g, 8, false).unwrap();
        assert_eq!((r.count(0), r.count(2), r.count(8)), (1, 2, 2));
        assert_eq!(theta_coefficients(&g, 8).unwrap(), vec![(0, 1), (2, 2), (4, 0), (6, 0), (8, 2)]);
    }

    #[test]
    fn coset_of_z() {
        // 1/2 + Z: norms (k + 1/2)^2
        let g = rat(&[vec![1]]);
        let half = [BigRational::new(1.into(), 2.into())];
        let r = coset_short_vectors(&g, Some(&half), Norm::new(9, 4), true).unwrap();
        assert_eq!(r.counts.get(&Norm::new(1, 4)), Some(&2));
        assert_eq!(r.counts.get(&Norm::new(9, 4)), Some(&2));
        assert_eq!(r.counts.len(), 2);
    }

    #[test]
    fn errors() {
        assert_eq!(short_vectors(&rat(&[vec![2]]), -2, false), Err(Error::NegativeBound(-2)));
        assert_eq!(short_vectors(&rat(&[vec![1, 2], vec![2, 1]]), 2, false).map(|_| ()), Err(Error::NotPositiveDefinite));
        let big = RatMatrix::from_int(IntMatrix::identity(33).scale(&BigInt::from(2)));
        assert!(matches!(short_vectors(&big, 2, false), Err(Error::RankGuard { .. })));
        assert_eq!(root_system_of_gram(&rat(&[vec![1]])), Err(Error::NotEven));
    }

    #[test]
    fn labels_parse_and_print() {
        for (s, canon) in [
            ("D_{10}\\perp 2E_7", "D10+2E7"),
            ("E_8\\perp D_{16}", "D16+E8"),
            ("24A_1", "24A1"),
            ("2D12", "2D12"),
            ("D3+D2", "2A1+A3"),
            ("0", "0"),
        ] {
            let l: RootSystemLabel = s.parse().unwrap();
            assert_eq!(l.to_string(), canon);
        }
        let l: RootSystemLabel = "D10+2E7".parse().unwrap();
        assert_eq!((l.rank(), l.root_count()), (24, 180 + 252));
        assert!("F4".parse::<RootSystemLabel>().is_err());
        assert!("E9".parse::<RootSystemLabel>().is_err());
    }

    #[test]
    fn root_systems_of_root_lattices() {
        for (f, n, label) in [(Family::A, 5, "A5"), (Family::D, 6, "D6"), (Family::E, 6, "E6"), (Family::E, 7, "E7")] {
            let g = RatMatrix::from_int(gram_e(f, n));
            assert_eq!(root_system_of_gram(&g).unwrap().to_string(), label);
        }
        let g = RatMatrix::from_int(gram_e(Family::D, 4).block_diag(1));
        let mut m = IntMatrix::zeros(6, 6);
        for i in 0..4 {
            for j in 0..4 {
                m.set(i, j, g.numerator().get(i, j).clone());
            }
        }
        m.set(4, 4, BigInt::from(2));
        m.set(5, 5, BigInt::from(4));
        assert_eq!(root_system_of_gram(&RatMatrix::from_int(m)).unwrap().to_string(), "A1+D4");
    }

    fn pd_gram() -> impl Strategy<Value = Vec<Vec<i64>>> {
        // B B^t + I for a small random integer B: positive definite
        (1usize..=5).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec(-2i64..3, n), n).prop_map(move |b| {
                (0..n)
                    .map(|i| (0..n).map(|j| (0..n).map(|k| b[i][k] * b[j][k]).sum::<i64>() + (i == j) as i64).collect())
                    .collect()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn matches_box_search(g in pd_gram(), bound in 0i64..=8) {
            // G >= I, so |x_i|^2 <= bound <= 8 and radius 3 covers every solution
            let r = short_vectors(&rat(&g), bound, false).unwrap();
            let expect = box_count(&g, bound, 3);
            let got: BTreeMap<i64, u64> = r.counts.iter().map(|(k, v)| (k.to_integer(), *v)).collect();
            prop_assert_eq!(got, expect);
        }

        #[test]
        fn symmetric_under_negation(g in pd_gram(), bound in 1i64..=6) {
            let r = short_vectors(&rat(&g), bound, true).unwrap();
            let v = r.vectors.unwrap();
            let set: std::collections::HashSet<Vec<i64>> = v.iter().map(|(x, _)| x.clone()).collect();
            for (x, _) in &v {
                let neg: Vec<i64> = x.iter().map(|a| -a).collect();
                prop_assert!(set.contains(&neg));
            }
        }
    }
}
