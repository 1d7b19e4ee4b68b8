//! Linear codes over the coefficient rings: enumeration, duals, self-duality
//! and Type II/IV tests, weight enumerators, the CRT pairing of two binary
//! codes, and the text file format.
//!
//! A code is stored as an `R`-module generating set. Dual codes use the
//! Euclidean product `x . y` or the Hermitian one `x . conj(y)`.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactlinear::{hnf, inverse, IntMatrix, RatMatrix};
use crate::rings::{self, inner_unchecked, lee_composition, Elem, RingSpec};

/// Default cap on the number of vectors any enumeration may visit.
pub const DEFAULT_GUARD: u64 = 1 << 26;

/// Ambient spaces at most this large are searched exhaustively for duals.
const BRUTE_FORCE_DUAL_LIMIT: u128 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Code {
    ring: RingSpec,
    length: usize,
    generators: Vec<Vec<Elem>>,
}

/// How [`Code::dual_with`] computes a dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualMethod {
    /// Exhaustive search when the ambient space is small, otherwise `Linear`.
    Auto,
    /// Test every vector of `R^m` against the generators.
    BruteForce,
    /// Solve the orthogonality conditions: an integer lattice over `Z/kZ`,
    /// a binary nullspace over the order-4 rings.
    Linear,
}

impl Code {
    pub fn new(ring: RingSpec, length: usize, generators: Vec<Vec<Elem>>) -> Result<Self> {
        if length == 0 {
            return Err(Error::Dimension("code length must be positive".into()));
        }
        for g in &generators {
            if g.len() != length {
                return Err(Error::LengthMismatch { expected: length, found: g.len() });
            }
            ring.check_vec(g)?;
        }
        Ok(Code { ring, length, generators })
    }

    /// Builds a code from rows of ring tokens such as `"1 0 w w2"`.
    pub fn from_tokens(ring: RingSpec, rows: &[&str]) -> Result<Self> {
        let gens: Result<Vec<Vec<Elem>>> =
            rows.iter().map(|r| r.split_whitespace().map(|t| ring.parse_elem(t)).collect()).collect();
        let gens = gens?;
        let length = gens.first().map_or(0, |g| g.len());
        Self::new(ring, length, gens)
    }

    pub fn zero(ring: RingSpec, length: usize) -> Result<Self> {
        Self::new(ring, length, Vec::new())
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn generators(&self) -> &[Vec<Elem>] {
        &self.generators
    }

    /// `r g` for every generator `g` and every `r` in the additive basis of
    /// the ring. Their integer span is the code.
    pub fn additive_generators(&self) -> Vec<Vec<Elem>> {
        let basis = self.ring.additive_basis();
        let mut out = Vec::new();
        for g in &self.generators {
            for &r in &basis {
                let v = self.ring.scale_vec(r, g);
                if v.iter().any(|&x| x != 0) && !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out
    }

    /// `|R|^m` if it fits in a `u128`.
    pub fn ambient_size(&self) -> Option<u128> {
        (self.ring.order() as u128).checked_pow(self.length as u32)
    }

    pub fn codewords(&self) -> Result<Vec<Vec<Elem>>> {
        self.codewords_with_guard(DEFAULT_GUARD)
    }

    /// Every codeword exactly once, in lexicographic order.
    pub fn codewords_with_guard(&self, guard: u64) -> Result<Vec<Vec<Elem>>> {
        let zero = vec![0; self.length];
        let mut seen: HashSet<Vec<Elem>> = HashSet::from([zero.clone()]);
        let mut words = vec![zero];
        for g in self.additive_generators() {
            let order = g.iter().fold(1u32, |l, &x| num_integer::lcm(l, self.ring.additive_order(x)));
            let base = words.clone();
            for w in base {
                let mut t = w;
                for _ in 1..order {
                    t = self.ring.add_vec(&t, &g);
                    if seen.insert(t.clone()) {
                        words.push(t.clone());
                    }
                }
            }
            if words.len() as u64 > guard {
                return Err(Error::GuardExceeded { needed: format!(">{}", words.len()), guard });
            }
        }
        words.sort_unstable();
        if let Some(total) = self.ambient_size() {
            if total % words.len() as u128 != 0 {
                return Err(Error::Consistency(format!("|C| = {} does not divide |R|^m", words.len())));
            }
        }
        Ok(words)
    }

    pub fn cardinality(&self) -> Result<u64> {
        Ok(self.codewords()?.len() as u64)
    }

    /// Whether `x . y` (or `x . conj(y)`) vanishes for every `y` in the code.
    pub fn is_orthogonal_to(&self, x: &[Elem], hermitian: bool) -> bool {
        self.additive_generators().iter().all(|g| inner_unchecked(self.ring, x, g, hermitian) == 0)
    }

    pub fn conjugate(&self) -> Code {
        let gens = self.generators.iter().map(|g| self.ring.conj_vec(g)).collect();
        Code { ring: self.ring, length: self.length, generators: gens }
    }

    pub fn direct_sum(&self, other: &Code) -> Result<Code> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch { expected: self.ring.to_string(), found: other.ring.to_string() });
        }
        let m = self.length + other.length;
        let mut gens = Vec::new();
        for g in &self.generators {
            let mut v = g.clone();
            v.resize(m, 0);
            gens.push(v);
        }
        for g in &other.generators {
            let mut v = vec![0; self.length];
            v.extend_from_slice(g);
            gens.push(v);
        }
        Code::new(self.ring, m, gens)
    }

    /// `C^perp` (Euclidean) or `conj(C)^perp` (Hermitian).
    pub fn dual(&self, hermitian: bool) -> Result<Code> {
        self.dual_with(hermitian, DualMethod::Auto)
    }

    pub fn dual_with(&self, hermitian: bool, method: DualMethod) -> Result<Code> {
        let method = match method {
            DualMethod::Auto => match self.ambient_size() {
                Some(n) if n <= BRUTE_FORCE_DUAL_LIMIT => DualMethod::BruteForce,
                _ => DualMethod::Linear,
            },
            m => m,
        };
        let gens = match method {
            DualMethod::BruteForce => self.dual_brute_force(hermitian)?,
            DualMethod::Linear => match self.ring {
                RingSpec::ZMod(k) => self.dual_zmod_lattice(k)?,
                _ => self.dual_binary_nullspace(hermitian),
            },
            DualMethod::Auto => unreachable!(),
        };
        Code::new(self.ring, self.length, gens)
    }

    fn dual_brute_force(&self, hermitian: bool) -> Result<Vec<Vec<Elem>>> {
        let total = self.ambient_size().filter(|&n| n <= DEFAULT_GUARD as u128).ok_or_else(|| {
            Error::GuardExceeded { needed: format!("{}^{}", self.ring.order(), self.length), guard: DEFAULT_GUARD }
        })?;
        let q = self.ring.order();
        let adds = self.additive_generators();
        let mut gens: Vec<Vec<Elem>> = Vec::new();
        let mut span: HashSet<Vec<Elem>> = HashSet::from([vec![0; self.length]]);
        let mut x = vec![0; self.length];
        for _ in 0..total {
            if adds.iter().all(|g| inner_unchecked(self.ring, &x, g, hermitian) == 0) && !span.contains(&x) {
                gens.push(x.clone());
                let c = Code { ring: self.ring, length: self.length, generators: gens.clone() };
                span = c.codewords()?.into_iter().collect();
            }
            // odometer increment
            for v in x.iter_mut() {
                *v += 1;
                if *v < q {
                    break;
                }
                *v = 0;
            }
        }
        Ok(gens)
    }

    /// Over `Z/kZ` the dual is `k` times the dual lattice of
    /// `rowspan(G) + k Z^m`, reduced mod `k`.
    fn dual_zmod_lattice(&self, k: u32) -> Result<Vec<Vec<Elem>>> {
        let m = self.length;
        let kk = BigInt::from(k);
        let mut rows: Vec<Vec<BigInt>> =
            self.generators.iter().map(|g| g.iter().map(|&x| BigInt::from(x)).collect()).collect();
        for i in 0..m {
            let mut e = vec![BigInt::zero(); m];
            e[i] = kk.clone();
            rows.push(e);
        }
        let h = hnf(&IntMatrix::from_rows(&rows, m)?);
        let dual = inverse(&RatMatrix::from_int(h))?.transpose();
        let scaled = RatMatrix::new(dual.numerator().scale(&kk), dual.denominator().clone())?;
        let basis = scaled
            .to_int()
            .ok_or_else(|| Error::Consistency("scaled dual lattice is not integral".into()))?;
        let mut gens = Vec::new();
        for row in basis.to_rows() {
            let v: Vec<Elem> = row
                .iter()
                .map(|x| {
                    let r = ((x % &kk) + &kk) % &kk;
                    r.to_u32().expect("residue fits")
                })
                .collect();
            if v.iter().any(|&x| x != 0) {
                gens.push(v);
            }
        }
        Ok(gens)
    }

    /// The order-4 rings are `F2^2` additively and every product used here is
    /// `F2`-bilinear, so the dual is a binary nullspace in `2m` unknowns.
    fn dual_binary_nullspace(&self, hermitian: bool) -> Vec<Vec<Elem>> {
        let m = self.length;
        let n = 2 * m;
        let adds = self.additive_generators();
        // one equation per (generator, output bit)
        let mut eqs: Vec<Vec<u8>> = Vec::new();
        for g in &adds {
            for bit in 0..2 {
                let row: Vec<u8> = (0..n)
                    .map(|j| {
                        let mut x = vec![0; m];
                        x[j / 2] = 1 << (j % 2);
                        ((inner_unchecked(self.ring, &x, g, hermitian) >> bit) & 1) as u8
                    })
                    .collect();
                eqs.push(row);
            }
        }
        // reduced row echelon form over F2
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            let Some(p) = (r..eqs.len()).find(|&i| eqs[i][c] == 1) else { continue };
            eqs.swap(r, p);
            for i in 0..eqs.len() {
                if i != r && eqs[i][c] == 1 {
                    for j in 0..n {
                        eqs[i][j] ^= eqs[r][j];
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let mut gens = Vec::new();
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut bits = vec![0u8; n];
            bits[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                bits[pc] = eqs[i][free];
            }
            gens.push((0..m).map(|i| (bits[2 * i] | (bits[2 * i + 1] << 1)) as Elem).collect());
        }
        gens
    }

    /// Parses the text format:
    ///
    /// ```text
    /// ring <Z<k>|F2u|F4|F2xF2>
    /// length <m>
    /// generators
    /// <m tokens per row>
    /// ```
    ///
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Code> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let perr = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
        let (ln, l) = lines.next().ok_or_else(|| perr(1, "empty code file"))?;
        let ring: RingSpec = l
            .strip_prefix("ring ")
            .ok_or_else(|| perr(ln, "expected `ring <R>`"))?
            .trim()
            .parse()
            .map_err(|e: Error| perr(ln, &e.to_string()))?;
        let (ln, l) = lines.next().ok_or_else(|| perr(ln + 1, "missing `length` line"))?;
        let length: usize = l
            .strip_prefix("length ")
            .and_then(|s| s.trim().parse().ok())
            .filter(|&m| m > 0)
            .ok_or_else(|| perr(ln, "expected `length <m>` with m >= 1"))?;
        let (ln, l) = lines.next().ok_or_else(|| perr(ln + 1, "missing `generators` line"))?;
        if l != "generators" {
            return Err(perr(ln, "expected `generators`"));
        }
        let mut gens = Vec::new();
        for (ln, l) in lines {
            let row: Result<Vec<Elem>> = l.split_whitespace().map(|t| ring.parse_elem(t)).collect();
            let row = row.map_err(|e| perr(ln, &e.to_string()))?;
            if row.len() != length {
                return Err(perr(ln, &format!("expected {} entries, found {}", length, row.len())));
            }
            gens.push(row);
        }
        Code::new(ring, length, gens)
    }

    /// Canonical text form; `Code::parse(&c.to_text()) == c`.
    pub fn to_text(&self) -> String {
        let mut s = format!("ring {}\nlength {}\ngenerators\n", self.ring, self.length);
        for g in &self.generators {
            let toks: Vec<String> = g.iter().map(|&x| self.ring.format_elem(x)).collect();
            let _ = writeln!(s, "{}", toks.join(" "));
        }
        s
    }
}

/// Which inner product a duality statement refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Product {
    Euclidean,
    Hermitian,
}

impl Product {
    fn hermitian(self) -> bool {
        self == Product::Hermitian
    }
}

/// `C` is contained in its dual.
pub fn is_self_orthogonal(c: &Code, p: Product) -> Result<bool> {
    let words = c.codewords()?;
    Ok(words.iter().all(|x| c.is_orthogonal_to(x, p.hermitian())))
}

/// `C` equals its dual: self-orthogonal with `|C|^2 = |R|^m`.
pub fn is_self_dual(c: &Code, p: Product) -> Result<bool> {
    let words = c.codewords()?;
    if !words.iter().all(|x| c.is_orthogonal_to(x, p.hermitian())) {
        return Ok(false);
    }
    let n = words.len() as u128;
    Ok(c.ambient_size().is_some_and(|total| n.checked_mul(n) == Some(total)))
}

/// Self-duality decided by comparing the enumerated codeword sets of `C`
/// and of its computed dual.
pub fn is_self_dual_by_sets(c: &Code, p: Product) -> Result<bool> {
    let d = c.dual(p.hermitian())?;
    Ok(c.codewords()? == d.codewords()?)
}

pub fn all_words(c: &Code, pred: impl Fn(&[Elem]) -> Result<bool>) -> Result<bool> {
    for w in c.codewords()? {
        if !pred(&w)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every codeword has Euclidean weight divisible by `d` (`Z/kZ` only).
pub fn euclidean_weights_divisible(c: &Code, d: u64) -> Result<bool> {
    all_words(c, |w| Ok(rings::euclidean_weight(c.ring, w)? % d == 0))
}

pub fn lee_weights_divisible(c: &Code, d: usize) -> Result<bool> {
    all_words(c, |w| Ok(lee_composition(c.ring, w)?.lee() % d == 0))
}

pub fn hamming_weights_even(c: &Code) -> Result<bool> {
    all_words(c, |w| Ok(rings::hamming_weight(w) % 2 == 0))
}

pub fn bachoc_weights_even(c: &Code) -> Result<bool> {
    all_words(c, |w| Ok(lee_composition(c.ring, w)?.bachoc() % 2 == 0))
}

/// Type II: Euclidean self-dual with Euclidean weights in `2kZ` over `Z/kZ`,
/// or Lee weights in `4Z` over the order-4 rings.
pub fn is_type_ii(c: &Code) -> Result<bool> {
    if !is_self_dual(c, Product::Euclidean)? {
        return Ok(false);
    }
    match c.ring {
        RingSpec::ZMod(k) => euclidean_weights_divisible(c, 2 * k as u64),
        _ => lee_weights_divisible(c, 4),
    }
}

/// Type IV: self-dual with all Hamming weights even. The duality is
/// Euclidean over `F2U` and Hermitian over `F2xF2`.
pub fn is_type_iv(c: &Code) -> Result<bool> {
    let p = match c.ring {
        RingSpec::F2U => Product::Euclidean,
        RingSpec::F2xF2 => Product::Hermitian,
        r => return Err(Error::Unsupported(format!("Type IV over {r}"))),
    };
    Ok(is_self_dual(c, p)? && hamming_weights_even(c)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightKind {
    Hamming,
    /// `sum min(x, k - x)` over `Z/kZ`; `N1 + 2 N2` over the order-4 rings.
    Lee,
    Euclidean,
    /// Exponents `(N0, N1, N2)` over the order-4 rings.
    LeeComposition,
    /// Over `Z/kZ`, exponent `i` counts coordinates equal to `+-i`.
    Symmetrized,
}

/// Weight enumerator as a map from exponent vectors to coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightEnumerator {
    pub kind: WeightKind,
    pub coeffs: BTreeMap<Vec<u64>, u64>,
}

pub fn weight_enumerator(c: &Code, kind: WeightKind) -> Result<WeightEnumerator> {
    let ring = c.ring;
    let key = |w: &[Elem]| -> Result<Vec<u64>> {
        Ok(match (kind, ring) {
            (WeightKind::Hamming, _) => vec![rings::hamming_weight(w) as u64],
            (WeightKind::Lee, RingSpec::ZMod(k)) => vec![w.iter().map(|&x| x.min(k - x) as u64).sum()],
            (WeightKind::Lee, _) => vec![lee_composition(ring, w)?.lee() as u64],
            (WeightKind::Euclidean, _) => vec![rings::euclidean_weight(ring, w)?],
            (WeightKind::LeeComposition, _) => {
                let lc = lee_composition(ring, w)?;
                vec![lc.n0 as u64, lc.n1 as u64, lc.n2 as u64]
            }
            (WeightKind::Symmetrized, RingSpec::ZMod(k)) => {
                let mut e = vec![0u64; (k / 2 + 1) as usize];
                for &x in w {
                    e[x.min(k - x) as usize] += 1;
                }
                e
            }
            (WeightKind::Symmetrized, r) => return Err(Error::Unsupported(format!("symmetrized enumerator over {r}"))),
        })
    };
    let mut coeffs = BTreeMap::new();
    for w in c.codewords()? {
        *coeffs.entry(key(&w)?).or_insert(0) += 1;
    }
    Ok(WeightEnumerator { kind, coeffs })
}

/// Pairs two binary codes of equal length into a code over `F2xF2` whose
/// words are `((a_1, b_1), ..., (a_m, b_m))` with `a` in `c1`, `b` in `c2`.
pub fn crt_combine(c1: &Code, c2: &Code) -> Result<Code> {
    for c in [c1, c2] {
        if c.ring != RingSpec::ZMod(2) {
            return Err(Error::RingMismatch { expected: "Z2".into(), found: c.ring.to_string() });
        }
    }
    if c1.length != c2.length {
        return Err(Error::LengthMismatch { expected: c1.length, found: c2.length });
    }
    let mut gens: Vec<Vec<Elem>> = c1.generators.iter().map(|g| g.iter().map(|&a| a << 1).collect()).collect();
    gens.extend(c2.generators.iter().cloned());
    Code::new(RingSpec::F2xF2, c1.length, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hamming8() -> Code {
        Code::from_tokens(
            RingSpec::ZMod(2),
            &["1 1 1 1 0 0 0 0", "0 0 1 1 1 1 0 0", "0 0 0 0 1 1 1 1", "0 1 0 1 0 1 0 1"],
        )
        .unwrap()
    }

    #[test]
    fn extended_hamming_is_type_ii() {
        let c = hamming8();
        assert_eq!(c.cardinality().unwrap(), 16);
        assert!(is_self_dual(&c, Product::Euclidean).unwrap());
        assert!(is_self_dual_by_sets(&c, Product::Euclidean).unwrap());
        assert!(is_type_ii(&c).unwrap());
        let we = weight_enumerator(&c, WeightKind::Hamming).unwrap();
        let expect: BTreeMap<Vec<u64>, u64> = [(vec![0], 1), (vec![4], 14), (vec![8], 1)].into_iter().collect();
        assert_eq!(we.coeffs, expect);
    }

    #[test]
    fn repetition_two_is_self_dual_not_type_ii() {
        let c = Code::from_tokens(RingSpec::ZMod(2), &["1 1"]).unwrap();
        assert!(is_self_dual(&c, Product::Euclidean).unwrap());
        assert!(!is_type_ii(&c).unwrap());
    }

    #[test]
    fn tetracode_enumerator() {
        let c = Code::from_tokens(RingSpec::ZMod(3), &["1 0 1 1", "0 1 1 2"]).unwrap();
        assert!(is_self_dual(&c, Product::Euclidean).unwrap());
        let we = weight_enumerator(&c, WeightKind::Symmetrized).unwrap();
        let expect: BTreeMap<Vec<u64>, u64> = [(vec![4, 0], 1), (vec![1, 3], 8)].into_iter().collect();
        assert_eq!(we.coeffs, expect);
    }

    #[test]
    fn type_iv_rules() {
        // {0, u} is Euclidean self-dual over F2U, but u has odd Hamming weight
        let c = Code::from_tokens(RingSpec::F2U, &["u"]).unwrap();
        assert!(is_self_dual(&c, Product::Euclidean).unwrap());
        assert!(!is_type_iv(&c).unwrap());
        let c = Code::from_tokens(RingSpec::F2U, &["1 1"]).unwrap();
        assert!(is_type_iv(&c).unwrap());
        assert!(is_type_iv(&Code::from_tokens(RingSpec::F4, &["1 1"]).unwrap()).is_err());
    }

    #[test]
    fn crt_pairs_coordinates() {
        let c1 = Code::from_tokens(RingSpec::ZMod(2), &["1 1 0", "0 1 1"]).unwrap();
        let c2 = Code::from_tokens(RingSpec::ZMod(2), &["1 1 1"]).unwrap();
        let c = crt_combine(&c1, &c2).unwrap();
        let w1 = c1.codewords().unwrap();
        let w2 = c2.codewords().unwrap();
        let mut expect: Vec<Vec<Elem>> = Vec::new();
        for a in &w1 {
            for b in &w2 {
                expect.push(a.iter().zip(b).map(|(&x, &y)| (x << 1) | y).collect());
            }
        }
        expect.sort();
        assert_eq!(c.codewords().unwrap(), expect);
        // Hermitian self-dual exactly when c1 is the dual of c2
        assert!(is_self_dual(&c, Product::Hermitian).unwrap());
        let c = crt_combine(&c1, &c1).unwrap();
        assert!(!is_self_dual(&c, Product::Hermitian).unwrap());
    }

    #[test]
    fn file_round_trip() {
        let c = Code::from_tokens(RingSpec::F2U, &["1 u 1+u 0"]).unwrap();
        let text = c.to_text();
        assert_eq!(text, "ring F2u\nlength 4\ngenerators\n1 u 1+u 0\n");
        assert_eq!(Code::parse(&text).unwrap(), c);
        assert_eq!(Code::parse(&text).unwrap().to_text(), text);
        let z = Code::parse("ring Z5\nlength 3\ngenerators\n").unwrap();
        assert_eq!(z.cardinality().unwrap(), 1);
        for bad in [
            "",
            "ring Z1\nlength 2\ngenerators\n",
            "ring F2u\nlength 2\ngenerators\n1 2\n",
            "ring F2u\nlength 2\ngenerators\n1\n",
            "ring F4\nlength 0\ngenerators\n",
            "ring F4\nlength 1\n",
        ] {
            assert!(matches!(Code::parse(bad), Err(Error::Parse { .. })), "{bad:?}");
        }
    }

    #[test]
    fn guard_is_enforced() {
        let c = Code::from_tokens(RingSpec::ZMod(2), &["1 0 0 0", "0 1 0 0", "0 0 1 0"]).unwrap();
        assert!(matches!(c.codewords_with_guard(4), Err(Error::GuardExceeded { .. })));
        assert_eq!(c.codewords_with_guard(8).unwrap().len(), 8);
    }

    fn code_strategy() -> impl Strategy<Value = Code> {
        let ring = prop_oneof![
            Just(RingSpec::ZMod(2)),
            Just(RingSpec::ZMod(3)),
            Just(RingSpec::ZMod(4)),
            Just(RingSpec::ZMod(6)),
            Just(RingSpec::ZMod(9)),
            Just(RingSpec::F2U),
            Just(RingSpec::F4),
            Just(RingSpec::F2xF2),
        ];
        ring.prop_flat_map(|r| {
            let m_max: usize = if r.order() > 4 { 4 } else { 6 };
            (1..=m_max).prop_flat_map(move |m| {
                prop::collection::vec(prop::collection::vec(0..r.order(), m), 0..3)
                    .prop_map(move |g| Code::new(r, m, g).unwrap())
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn dual_size_and_methods_agree(c in code_strategy(), herm in any::<bool>()) {
            let herm = herm && c.ring().is_order_four();
            let d1 = c.dual_with(herm, DualMethod::BruteForce).unwrap();
            let d2 = c.dual_with(herm, DualMethod::Linear).unwrap();
            let w1 = d1.codewords().unwrap();
            prop_assert_eq!(&w1, &d2.codewords().unwrap());
            let total = c.ambient_size().unwrap();
            prop_assert_eq!(c.cardinality().unwrap() as u128 * w1.len() as u128, total);
            // every dual word is orthogonal to every codeword
            for x in &w1 {
                prop_assert!(c.is_orthogonal_to(x, herm));
            }
            // double dual
            let dd = d1.dual(herm).unwrap();
            prop_assert_eq!(dd.codewords().unwrap(), c.codewords().unwrap());
        }

        #[test]
        fn self_duality_paths_agree(c in code_strategy(), herm in any::<bool>()) {
            let p = if herm && c.ring().is_order_four() { Product::Hermitian } else { Product::Euclidean };
            prop_assert_eq!(is_self_dual(&c, p).unwrap(), is_self_dual_by_sets(&c, p).unwrap());
        }

        #[test]
        fn text_round_trip(c in code_strategy()) {
            let t = c.to_text();
            let back = Code::parse(&t).unwrap();
            prop_assert_eq!(back.to_text(), t);
            prop_assert_eq!(back, c);
        }

        #[test]
        fn enumeration_is_closed(c in code_strategy()) {
            let words = c.codewords().unwrap();
            let set: HashSet<_> = words.iter().cloned().collect();
            prop_assert_eq!(set.len(), words.len());
            for g in c.generators() {
                for r in c.ring().elements() {
                    let v = c.ring().scale_vec(r, g);
                    for w in words.iter().take(8) {
                        prop_assert!(set.contains(&c.ring().add_vec(w, &v)));
                    }
                }
            }
        }
    }
}
