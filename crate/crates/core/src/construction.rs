//! The lattice `Gamma_C = rho^{-1}(C)` inside `(L*)^m`, its integrality,
//! evenness and unimodularity, duals, and two harnesses: one comparing the
//! lattice side with the code-side conditions, one checking the pairing
//! rules on every pair of discriminant-group classes.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codes::{self, Code, Product};
use crate::error::{Error, Result};
use crate::exactlinear::{det, det_int, hnf, inverse, IntMatrix, LatticeDump, RatMatrix};
use crate::rings::{self, inner_unchecked, lee_composition, Elem, RingSpec};
use crate::rootlattices::{ambient_basis, lift, rho, AmbientBasis, Family, RootLatticeSpec};

/// A lattice in `Q (L*)^m`, basis rows in `f*`-coordinates.
///
/// The basis is kept in Hermite normal form over its least common
/// denominator, so equal lattices have equal bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeLattice {
    spec: RootLatticeSpec,
    m: usize,
    basis: RatMatrix,
    gram: RatMatrix,
}

impl CodeLattice {
    /// The lattice spanned by the rows of `gens`.
    pub fn from_generators(spec: RootLatticeSpec, m: usize, gens: &RatMatrix) -> Result<Self> {
        let dim = spec.rank() * m;
        if gens.cols() != dim {
            return Err(Error::Dimension(format!("generators have {} columns, ambient has {dim}", gens.cols())));
        }
        let num = hnf(gens.numerator());
        if num.rows() == 0 {
            return Err(Error::Dimension("zero lattice".into()));
        }
        let basis = RatMatrix::new(num, gens.denominator().clone())?;
        let amb = ambient_basis(&spec)?;
        let g = amb.gram_fstar.block_diag(m);
        let gram = basis.mul(&g)?.mul(&basis.transpose())?;
        Ok(CodeLattice { spec, m, basis, gram })
    }

    /// `L^m` itself.
    pub fn root_sum(spec: RootLatticeSpec, m: usize) -> Result<Self> {
        let amb = ambient_basis(&spec)?;
        Self::from_generators(spec, m, &RatMatrix::from_int(amb.gram_f.block_diag(m)))
    }

    /// `(L*)^m`.
    pub fn dual_root_sum(spec: RootLatticeSpec, m: usize) -> Result<Self> {
        Self::from_generators(spec, m, &RatMatrix::identity(spec.rank() * m))
    }

    pub fn from_dump(spec: RootLatticeSpec, dump: &LatticeDump) -> Result<Self> {
        let cols = dump.basis.cols();
        if cols == 0 || cols % spec.rank() != 0 {
            return Err(Error::Dimension(format!("{cols} columns is not a multiple of rank {}", spec.rank())));
        }
        Self::from_generators(spec, cols / spec.rank(), &dump.basis)
    }

    pub fn dump(&self) -> LatticeDump {
        LatticeDump { basis: self.basis.clone() }
    }

    pub fn spec(&self) -> RootLatticeSpec {
        self.spec
    }

    pub fn copies(&self) -> usize {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    pub fn determinant(&self) -> Result<BigRational> {
        det(&self.gram)
    }

    pub fn is_integral(&self) -> bool {
        self.gram.is_integral()
    }

    /// Integral with every norm even.
    pub fn is_even(&self) -> bool {
        self.is_integral() && (0..self.rank()).all(|i| (self.gram.numerator().get(i, i) % 2u32).is_zero())
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_integral() && self.determinant().is_ok_and(|d| d.abs().is_one())
    }
}

fn lattice_rows_fstar(amb: &AmbientBasis, m: usize) -> IntMatrix {
    amb.gram_f.block_diag(m)
}

/// `Gamma_C`, generated by lifts of `r g` for each generator `g` and each `r`
/// in the additive basis of the ring, together with `L^m`.
pub fn build_gamma_c(spec: &RootLatticeSpec, code: &Code) -> Result<CodeLattice> {
    let ring = spec.require_ring()?;
    if code.ring() != ring {
        return Err(Error::RingMismatch { expected: ring.to_string(), found: code.ring().to_string() });
    }
    let m = code.length();
    let amb = ambient_basis(spec)?;
    let kernel = lattice_rows_fstar(&amb, m);
    let lifts: Vec<Vec<i64>> = code.additive_generators().iter().map(|g| lift(spec, g)).collect::<Result<_>>()?;
    let gens = if lifts.is_empty() { kernel.clone() } else { IntMatrix::from_i64(&lifts)?.stack(&kernel)? };
    let lat = CodeLattice::from_generators(*spec, m, &RatMatrix::from_int(gens))?;

    // rho of every basis vector is a codeword, and the index over L^m is |C|
    let words: HashSet<Vec<Elem>> = code.codewords()?.into_iter().collect();
    let b = lat.basis.numerator().to_i64_rows().ok_or(Error::Overflow("basis entries"))?;
    for row in &b {
        if !words.contains(&rho(spec, row)?) {
            return Err(Error::Consistency("basis vector maps outside the code".into()));
        }
    }
    let index = det_int(&kernel)? / det_int(lat.basis.numerator())?;
    if index != BigInt::from(words.len()) {
        return Err(Error::Consistency(format!("index {index} differs from |C| = {}", words.len())));
    }
    Ok(lat)
}

/// `{y : B(y, x) in Z for all x in L}` for a full-rank `L`.
pub fn dual_lattice(l: &CodeLattice) -> Result<CodeLattice> {
    if l.rank() != l.spec.rank() * l.m {
        return Err(Error::Unsupported("dual of a lattice that is not full rank".into()));
    }
    let b = inverse(&l.gram)?.mul(&l.basis)?;
    CodeLattice::from_generators(l.spec, l.m, &b)
}

pub fn lattices_equal(a: &CodeLattice, b: &CodeLattice) -> Result<bool> {
    if a.spec != b.spec || a.m != b.m {
        return Err(Error::AmbientMismatch);
    }
    Ok(a.basis == b.basis)
}

/// A code-side condition appearing in the characterization theorems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeCondition {
    SelfOrthogonal(Product),
    SelfDual(Product),
    EuclideanWeightsDivisibleBy(u64),
    LeeWeightsDivisibleBy4,
    HammingWeightsEven,
    BachocWeightsEven,
    TypeII,
    TypeIV,
    Both(Box<CodeCondition>, Box<CodeCondition>),
}

impl CodeCondition {
    pub fn holds(&self, c: &Code) -> Result<bool> {
        use CodeCondition::*;
        match self {
            SelfOrthogonal(p) => codes::is_self_orthogonal(c, *p),
            SelfDual(p) => codes::is_self_dual(c, *p),
            EuclideanWeightsDivisibleBy(d) => codes::euclidean_weights_divisible(c, *d),
            LeeWeightsDivisibleBy4 => codes::lee_weights_divisible(c, 4),
            HammingWeightsEven => codes::hamming_weights_even(c),
            BachocWeightsEven => codes::bachoc_weights_even(c),
            TypeII => codes::is_type_ii(c),
            TypeIV => codes::is_type_iv(c),
            Both(a, b) => Ok(a.holds(c)? && b.holds(c)?),
        }
    }
}

impl fmt::Display for CodeCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CodeCondition::*;
        let p = |p: &Product| if *p == Product::Euclidean { "Euclidean" } else { "Hermitian" };
        match self {
            SelfOrthogonal(x) => write!(f, "C in dual ({})", p(x)),
            SelfDual(x) => write!(f, "{} self-dual", p(x)),
            EuclideanWeightsDivisibleBy(d) => write!(f, "wt_E in {d}Z"),
            LeeWeightsDivisibleBy4 => f.write_str("wt_L in 4Z"),
            HammingWeightsEven => f.write_str("wt_H even"),
            BachocWeightsEven => f.write_str("wt_B even"),
            TypeII => f.write_str("Type II"),
            TypeIV => f.write_str("Type IV"),
            Both(a, b) => write!(f, "{a} and {b}"),
        }
    }
}

/// The four code-side conditions matching integral, unimodular, even, and
/// even unimodular.
pub fn theorem_conditions(spec: &RootLatticeSpec) -> Result<[CodeCondition; 4]> {
    use CodeCondition::*;
    use Product::*;
    let n = spec.rank();
    let ring = spec.require_ring()?;
    let euclid = || [SelfOrthogonal(Euclidean), SelfDual(Euclidean)];
    let herm = || [SelfOrthogonal(Hermitian), SelfDual(Hermitian)];
    let ([i, u], even, even_unimodular) = match (spec.family(), ring) {
        (Family::A, _) if n % 2 == 1 => (euclid(), EuclideanWeightsDivisibleBy(2 * (n as u64 + 1)), TypeII),
        (Family::A, _) => (euclid(), SelfOrthogonal(Euclidean), SelfDual(Euclidean)),
        (Family::D, RingSpec::ZMod(4)) => (euclid(), EuclideanWeightsDivisibleBy(8), TypeII),
        (Family::D, _) if n % 4 != 0 => (euclid(), LeeWeightsDivisibleBy4, TypeII),
        (Family::D, RingSpec::F2U) if n % 8 != 0 => (euclid(), HammingWeightsEven, TypeIV),
        (Family::D, RingSpec::F2U) => (euclid(), BachocWeightsEven, TypeIV),
        (Family::D, RingSpec::F4) if n % 8 != 0 => (herm(), HammingWeightsEven, SelfDual(Hermitian)),
        (Family::D, RingSpec::F4) => {
            (herm(), BachocWeightsEven, Both(Box::new(SelfDual(Hermitian)), Box::new(BachocWeightsEven)))
        }
        (Family::D, RingSpec::F2xF2) if n % 8 != 0 => (herm(), HammingWeightsEven, TypeIV),
        (Family::D, RingSpec::F2xF2) => (herm(), SelfOrthogonal(Hermitian), SelfDual(Hermitian)),
        (Family::E, _) if n == 6 => (euclid(), SelfOrthogonal(Euclidean), SelfDual(Euclidean)),
        (Family::E, _) => (euclid(), EuclideanWeightsDivisibleBy(4), TypeII),
        _ => unreachable!(),
    };
    Ok([i, u, even, even_unimodular])
}

/// Whether the dual of `Gamma_C` is `Gamma` of the Euclidean or the
/// Hermitian dual code.
pub fn dual_code_product(spec: &RootLatticeSpec) -> Product {
    match spec.code_ring() {
        Some(RingSpec::F4 | RingSpec::F2xF2) if spec.rank() % 4 == 0 => Product::Hermitian,
        _ => Product::Euclidean,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseCheck {
    pub name: &'static str,
    pub condition: String,
    pub lattice_side: bool,
    pub code_side: bool,
}

impl ClauseCheck {
    pub fn agrees(&self) -> bool {
        self.lattice_side == self.code_side
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub spec: RootLatticeSpec,
    pub clauses: Vec<ClauseCheck>,
    /// `dual(Gamma_C) == Gamma_{dual code}`.
    pub dual_matches: bool,
    /// Extra predicates reported for information only.
    pub notes: Vec<String>,
}

impl TheoremReport {
    pub fn pass(&self) -> bool {
        self.dual_matches && self.clauses.iter().all(ClauseCheck::agrees)
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            writeln!(
                f,
                "{:<16} lattice={:<5} code={:<5} [{}] {}",
                c.name,
                c.lattice_side,
                c.code_side,
                c.condition,
                if c.agrees() { "AGREE" } else { "DISAGREE" }
            )?;
        }
        writeln!(f, "{:<16} {}", "dual", if self.dual_matches { "AGREE" } else { "DISAGREE" })?;
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

/// Builds `Gamma_C` and compares its four lattice properties with the
/// corresponding code conditions, and its dual with `Gamma` of the dual code.
pub fn verify_main_theorem(spec: &RootLatticeSpec, code: &Code) -> Result<TheoremReport> {
    let lat = build_gamma_c(spec, code)?;
    let conds = theorem_conditions(spec)?;
    let lattice = [
        lat.is_integral(),
        lat.is_unimodular(),
        lat.is_even(),
        lat.is_even() && lat.is_unimodular(),
    ];
    let names = ["integral", "unimodular", "even", "even unimodular"];
    let mut clauses = Vec::new();
    for i in 0..4 {
        clauses.push(ClauseCheck {
            name: names[i],
            condition: conds[i].to_string(),
            lattice_side: lattice[i],
            code_side: conds[i].holds(code)?,
        });
    }
    let dual_code = code.dual(dual_code_product(spec) == Product::Hermitian)?;
    let dual_matches = lattices_equal(&dual_lattice(&lat)?, &build_gamma_c(spec, &dual_code)?)?;
    let mut notes = Vec::new();
    if spec.code_ring() == Some(RingSpec::F2xF2) && spec.rank() % 8 == 0 {
        notes.push(format!("Type IV: {}", codes::is_type_iv(code)?));
    }
    Ok(TheoremReport { spec: *spec, clauses, dual_matches, notes })
}

/// A pair of classes where a pairing rule fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub rule: &'static str,
    pub x: Vec<Elem>,
    pub y: Vec<Elem>,
    pub lattice_side: bool,
    pub code_side: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub spec: RootLatticeSpec,
    pub m: usize,
    pub pairs_checked: u64,
    pub counterexample: Option<Counterexample>,
}

fn int_rule(spec: &RootLatticeSpec, x: &[Elem], y: &[Elem]) -> bool {
    let ring = spec.code_ring().expect("checked by caller");
    let n = spec.rank();
    let four = n % 4 == 0;
    match ring {
        RingSpec::ZMod(_) => inner_unchecked(ring, x, y, false) == 0,
        // 0 or 1+u
        RingSpec::F2U if !four => matches!(inner_unchecked(ring, x, y, false), 0 | 3),
        RingSpec::F2U => matches!(inner_unchecked(ring, x, y, false), 0 | 1),
        RingSpec::F4 => matches!(inner_unchecked(ring, x, y, four), 0 | 1),
        // (0,0) or (1,1)
        RingSpec::F2xF2 => matches!(inner_unchecked(ring, x, y, four), 0 | 3),
    }
}

fn even_rule(spec: &RootLatticeSpec, x: &[Elem]) -> bool {
    let ring = spec.code_ring().expect("checked by caller");
    let n = spec.rank();
    let lee = || lee_composition(ring, x).expect("order-4 ring");
    let wt_e = || rings::euclidean_weight(ring, x).expect("Z/kZ");
    match (spec.family(), ring) {
        (Family::A, _) if n % 2 == 1 => wt_e() % (2 * (n as u64 + 1)) == 0,
        (Family::A, _) | (Family::E, RingSpec::ZMod(3)) => inner_unchecked(ring, x, x, false) == 0,
        (Family::E, _) => wt_e() % 4 == 0,
        (Family::D, RingSpec::ZMod(_)) => wt_e() % 8 == 0,
        (Family::D, _) if n % 4 != 0 => lee().lee() % 4 == 0,
        (Family::D, _) if n % 8 == 0 && ring != RingSpec::F2xF2 => lee().bachoc() % 2 == 0,
        (Family::D, RingSpec::F2U | RingSpec::F2xF2) if n % 8 != 0 => lee().hamming() % 2 == 0,
        (Family::D, _) => inner_unchecked(ring, x, x, true) == 0,
    }
}

/// Enumerates every pair of classes `x, y` in `((L*)/L)^m` and checks that
/// `B(x, y) in Z` and `B(x, x) in 2Z` agree with the ring-side rules.
///
/// Each class is represented by its lift; the representatives are also
/// shifted by random vectors of `L^m` to confirm the values are class
/// functions.
pub fn coset_oracle(spec: &RootLatticeSpec, m: usize) -> Result<OracleReport> {
    let ring = spec.require_ring()?;
    if m == 0 {
        return Err(Error::Dimension("m must be positive".into()));
    }
    let amb = ambient_basis(spec)?;
    let all = Code::new(ring, m, (0..m).map(|i| (0..m).map(|j| (i == j) as Elem).collect()).collect())?;
    let classes = all.codewords()?;
    let reps: Vec<Vec<i64>> = classes.iter().map(|c| lift(spec, c)).collect::<Result<_>>()?;
    let kernel = lattice_rows_fstar(&amb, m).to_i64_rows().ok_or(Error::Overflow("kernel"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let two = BigInt::from(2);

    for (c, x) in classes.iter().zip(&reps) {
        let xx = amb.pairing(x, x);
        for _ in 0..4 {
            let mut shifted = x.clone();
            for row in &kernel {
                let k: i64 = rng.gen_range(-2..=2);
                for (s, r) in shifted.iter_mut().zip(row) {
                    *s += k * r;
                }
            }
            if &rho(spec, &shifted)? != c {
                return Err(Error::Consistency("rho is not constant on a class".into()));
            }
            let d = amb.pairing(&shifted, &shifted) - &xx;
            if !(d.is_integer() && (d.to_integer() % &two).is_zero()) {
                return Err(Error::Consistency("norm mod 2 is not a class function".into()));
            }
            for y in &reps {
                if !(amb.pairing(&shifted, y) - amb.pairing(x, y)).is_integer() {
                    return Err(Error::Consistency("pairing mod 1 is not a class function".into()));
                }
            }
        }
    }

    let mut pairs = 0u64;
    for (cx, x) in classes.iter().zip(&reps) {
        let xx = amb.pairing(x, x);
        let lat_even = xx.is_integer() && (xx.to_integer() % &two).is_zero();
        let code_even = even_rule(spec, cx);
        if lat_even != code_even {
            return Ok(OracleReport {
                spec: *spec,
                m,
                pairs_checked: pairs,
                counterexample: Some(Counterexample {
                    rule: "even",
                    x: cx.clone(),
                    y: cx.clone(),
                    lattice_side: lat_even,
                    code_side: code_even,
                }),
            });
        }
        for (cy, y) in classes.iter().zip(&reps) {
            pairs += 1;
            let lat_int = amb.pairing(x, y).is_integer();
            let code_int = int_rule(spec, cx, cy);
            if lat_int != code_int {
                return Ok(OracleReport {
                    spec: *spec,
                    m,
                    pairs_checked: pairs,
                    counterexample: Some(Counterexample {
                        rule: "integral",
                        x: cx.clone(),
                        y: cy.clone(),
                        lattice_side: lat_int,
                        code_side: code_int,
                    }),
                });
            }
        }
    }
    Ok(OracleReport { spec: *spec, m, pairs_checked: pairs, counterexample: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_code_gives_root_sum() {
        let s = RootLatticeSpec::a(2).unwrap();
        let c = Code::zero(RingSpec::ZMod(3), 2).unwrap();
        let l = build_gamma_c(&s, &c).unwrap();
        assert_eq!(l, CodeLattice::root_sum(s, 2).unwrap());
        assert!(l.is_even());
        assert_eq!(l.determinant().unwrap(), BigRational::from_integer(BigInt::from(9)));
        let full = Code::new(RingSpec::ZMod(3), 2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(build_gamma_c(&s, &full).unwrap(), CodeLattice::dual_root_sum(s, 2).unwrap());
    }

    #[test]
    fn e8_from_a1_and_hamming() {
        let s = RootLatticeSpec::a(1).unwrap();
        let c = Code::from_tokens(
            RingSpec::ZMod(2),
            &["1 1 1 1 0 0 0 0", "0 0 1 1 1 1 0 0", "0 0 0 0 1 1 1 1", "0 1 0 1 0 1 0 1"],
        )
        .unwrap();
        let l = build_gamma_c(&s, &c).unwrap();
        assert!(l.is_even() && l.is_unimodular());
        let r = verify_main_theorem(&s, &c).unwrap();
        assert!(r.pass(), "{r}");
    }

    #[test]
    fn ring_mismatch_rejected() {
        let s = RootLatticeSpec::a(2).unwrap();
        let c = Code::zero(RingSpec::ZMod(2), 1).unwrap();
        assert!(matches!(build_gamma_c(&s, &c), Err(Error::RingMismatch { .. })));
        let l1 = CodeLattice::root_sum(s, 1).unwrap();
        let l2 = CodeLattice::root_sum(s, 2).unwrap();
        assert_eq!(lattices_equal(&l1, &l2), Err(Error::AmbientMismatch));
    }

    #[test]
    fn dump_round_trip() {
        let s = RootLatticeSpec::d(6, Some(RingSpec::F4)).unwrap();
        let c = Code::from_tokens(RingSpec::F4, &["1 w"]).unwrap();
        let l = build_gamma_c(&s, &c).unwrap();
        let text = l.dump().write();
        let back = CodeLattice::from_dump(s, &LatticeDump::parse(&text).unwrap()).unwrap();
        assert_eq!(back, l);
        let d = dual_lattice(&l).unwrap();
        assert_eq!(dual_lattice(&d).unwrap(), l);
    }

    #[test]
    fn oracle_small_cases() {
        for s in [
            RootLatticeSpec::a(1).unwrap(),
            RootLatticeSpec::a(2).unwrap(),
            RootLatticeSpec::d(5, None).unwrap(),
            RootLatticeSpec::d(4, Some(RingSpec::F4)).unwrap(),
            RootLatticeSpec::d(6, Some(RingSpec::F2xF2)).unwrap(),
            RootLatticeSpec::d(8, Some(RingSpec::F2U)).unwrap(),
            RootLatticeSpec::e(6).unwrap(),
            RootLatticeSpec::e(7).unwrap(),
        ] {
            let r = coset_oracle(&s, 1).unwrap();
            assert!(r.counterexample.is_none(), "{s}: {:?}", r.counterexample);
        }
        assert!(coset_oracle(&RootLatticeSpec::e(8).unwrap(), 1).is_err());
    }

    fn spec_and_code() -> impl Strategy<Value = (RootLatticeSpec, Code)> {
        let specs = vec![
            RootLatticeSpec::a(1).unwrap(),
            RootLatticeSpec::a(2).unwrap(),
            RootLatticeSpec::a(3).unwrap(),
            RootLatticeSpec::a(4).unwrap(),
            RootLatticeSpec::d(5, None).unwrap(),
            RootLatticeSpec::d(4, Some(RingSpec::F2U)).unwrap(),
            RootLatticeSpec::d(4, Some(RingSpec::F4)).unwrap(),
            RootLatticeSpec::d(4, Some(RingSpec::F2xF2)).unwrap(),
            RootLatticeSpec::d(6, Some(RingSpec::F2U)).unwrap(),
            RootLatticeSpec::d(6, Some(RingSpec::F4)).unwrap(),
            RootLatticeSpec::d(6, Some(RingSpec::F2xF2)).unwrap(),
            RootLatticeSpec::d(8, Some(RingSpec::F4)).unwrap(),
            RootLatticeSpec::d(8, Some(RingSpec::F2xF2)).unwrap(),
            RootLatticeSpec::e(6).unwrap(),
            RootLatticeSpec::e(7).unwrap(),
        ];
        prop::sample::select(specs).prop_flat_map(|s| {
            let r = s.code_ring().unwrap();
            (1usize..=3).prop_flat_map(move |m| {
                prop::collection::vec(prop::collection::vec(0..r.order(), m), 0..3)
                    .prop_map(move |g| (s, Code::new(r, m, g).unwrap()))
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn theorem_holds_on_random_codes((s, c) in spec_and_code()) {
            let r = verify_main_theorem(&s, &c).unwrap();
            prop_assert!(r.pass(), "{}\n{}", s, r);
        }

        #[test]
        fn gamma_is_monotone((s, c) in spec_and_code()) {
            // Gamma_C contains L^m and is contained in (L*)^m
            let l = build_gamma_c(&s, &c).unwrap();
            let m = c.length();
            let root = CodeLattice::root_sum(s, m).unwrap();
            let top = CodeLattice::dual_root_sum(s, m).unwrap();
            let join = |a: &CodeLattice, b: &CodeLattice| {
                CodeLattice::from_generators(s, m, &RatMatrix::from_int(a.basis().numerator().stack(b.basis().numerator()).unwrap())).unwrap()
            };
            prop_assert_eq!(join(&l, &root), l.clone());
            prop_assert_eq!(join(&l, &top), top);
        }
    }
}
