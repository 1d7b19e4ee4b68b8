//! `D4` and `E6` as fractional ideals of `Q(zeta_8)` and `Q(zeta_9)`, theta
//! series of code lattices with exponents in the real subfield, the theta
//! identity against weight enumerators, and level ideals.

pub mod field;
pub mod series;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::codes::{is_self_orthogonal, weight_enumerator, Code, Product, WeightKind};
use crate::construction::{build_gamma_c, CodeLattice};
use crate::error::{Error, Result};
use crate::exactlinear::{hnf, inverse, IntMatrix, RatMatrix};
use crate::rings::Elem;
use crate::rootlattices::{ambient_basis, lift, rho_rational};
use crate::theta::{Enumerator, Norm};

pub use field::{eta, k_scalar_product, trace_form, CycField, CycInt, KElem};
pub use series::{KExponent, KSeries};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn z(field: CycField, k: i64) -> CycInt {
    CycInt::zeta_pow(field, k)
}

fn c_one(field: CycField) -> CycInt {
    CycInt::one(field)
}

/// A lattice in `F^m` given by a `Z`-basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KLattice {
    pub field: CycField,
    pub basis: Vec<Vec<CycInt>>,
}

impl KLattice {
    pub fn new(field: CycField, basis: Vec<Vec<CycInt>>) -> Result<Self> {
        let m = basis.first().map_or(0, Vec::len);
        if m == 0 || basis.iter().any(|b| b.len() != m) {
            return Err(Error::Dimension("basis vectors must share a positive length".into()));
        }
        if basis.iter().flatten().any(|x| x.field() != field) {
            return Err(Error::InvalidField(format!("basis not in {field}")));
        }
        Ok(KLattice { field, basis })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn copies(&self) -> usize {
        self.basis[0].len()
    }

    /// `Tr_{F/Q}(sum_k b_i[k] conj(b_j[k]))`.
    pub fn gram(&self) -> Result<RatMatrix> {
        let n = self.rank();
        let mut rows = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                let mut s = BigRational::zero();
                for (a, b) in self.basis[i].iter().zip(&self.basis[j]) {
                    s += trace_form(a, b)?;
                }
                rows[i][j] = s.clone();
                rows[j][i] = s;
            }
        }
        RatMatrix::from_rationals(&rows, n)
    }

    /// `b_i . b_j` in `K`.
    pub fn k_gram(&self) -> Result<Vec<Vec<KElem>>> {
        let n = self.rank();
        let mut out: Vec<Vec<KElem>> = vec![Vec::with_capacity(n); n];
        for i in 0..n {
            for j in 0..n {
                let v = if j < i { out[j][i].clone() } else { k_scalar_product(&self.basis[i], &self.basis[j])? };
                out[i].push(v);
            }
        }
        Ok(out)
    }

    /// Vector with coordinates `c` in this basis.
    pub fn vector(&self, c: &[BigRational]) -> Result<Vec<CycInt>> {
        if c.len() != self.rank() {
            return Err(Error::LengthMismatch { expected: self.rank(), found: c.len() });
        }
        let mut out = vec![CycInt::zero(self.field); self.copies()];
        for (ci, b) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                *o = o.add(&x.scale(ci))?;
            }
        }
        Ok(out)
    }

    /// The dual lattice with respect to `Tr_{F/Q}(x conj(y))`.
    pub fn dual(&self) -> Result<KLattice> {
        let g = inverse(&self.gram()?)?;
        let rows = g.to_rationals();
        let basis = rows.iter().map(|r| self.vector(r)).collect::<Result<Vec<_>>>()?;
        KLattice::new(self.field, basis)
    }
}

/// Bases of `Lambda` and its dual inside the cyclotomic field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicModel {
    pub field: CycField,
    /// Simple roots.
    pub e: Vec<CycInt>,
    pub f: Vec<CycInt>,
    /// Dual basis of `f` under the trace form.
    pub fstar: Vec<CycInt>,
}

/// Generator of `Lambda` as a principal fractional ideal.
pub fn lambda_generator(field: CycField) -> CycInt {
    let one = c_one(field);
    match field {
        // (1 - zeta) / 2
        CycField::Zeta8 => one.sub(&z(field, 1)).expect("same field").scale(&BigRational::new(1.into(), 2.into())),
        // (1 - zeta)(1 - zeta^-1) / 3
        CycField::Zeta9 => one
            .sub(&z(field, 1))
            .and_then(|a| a.mul(&one.sub(&z(field, -1))?))
            .expect("same field")
            .scale(&BigRational::new(1.into(), 3.into())),
    }
}

fn f_basis(field: CycField) -> Vec<CycInt> {
    let one = c_one(field);
    let base = match field {
        CycField::Zeta8 => lambda_generator(field),
        // (1 - zeta)(1 - zeta^2) / 3
        CycField::Zeta9 => one
            .sub(&z(field, 1))
            .and_then(|a| a.mul(&one.sub(&z(field, 2))?))
            .expect("same field")
            .scale(&BigRational::new(1.into(), 3.into())),
    };
    (0..field.degree() as i64).map(|i| base.mul(&z(field, i)).expect("same field")).collect()
}

/// Closed forms for the dual basis.
fn fstar_closed_form(field: CycField) -> Result<Vec<CycInt>> {
    let one = c_one(field);
    match field {
        CycField::Zeta8 => {
            // zeta^(i-1) / (2 (1 - zeta^-1))
            let c = one.sub(&z(field, -1))?.scale(&rat(2)).inverse()?;
            (0..4).map(|i| c.mul(&z(field, i))).collect()
        }
        CycField::Zeta9 => {
            // (1 - zeta^4) zeta^(i-3) / 3, plus (1 - zeta^4) zeta^(i-6) / 3 for i >= 4
            let c = one.sub(&z(field, 4))?.scale(&BigRational::new(1.into(), 3.into()));
            (1..=6i64)
                .map(|i| {
                    let p = if i <= 3 { z(field, i - 3) } else { z(field, i - 3).add(&z(field, i - 6))? };
                    c.mul(&p)
                })
                .collect()
        }
    }
}

fn consistency(what: &str, field: CycField) -> Error {
    Error::Consistency(format!("{what} disagrees with the {} model", field.root_lattice()))
}

/// Builds the bases of `Lambda` and `Lambda*` and checks them against the
/// root-lattice data: `Gram(f)`, `Gram(f*)` and `Gram(e)` must coincide with
/// those of the attached root lattice, and `f*` with its closed form.
pub fn build_cyclotomic_lattice(field: CycField) -> Result<CyclotomicModel> {
    let amb = ambient_basis(&field.root_lattice())?;
    let f = f_basis(field);
    let lf = KLattice::new(field, f.iter().map(|x| vec![x.clone()]).collect())?;
    if lf.gram()? != RatMatrix::from_int(amb.gram_f.clone()) {
        return Err(consistency("Gram(f)", field));
    }
    let fstar: Vec<CycInt> = lf.dual()?.basis.into_iter().map(|mut v| v.remove(0)).collect();
    if fstar != fstar_closed_form(field)? {
        return Err(consistency("closed form of f*", field));
    }
    let ls = KLattice::new(field, fstar.iter().map(|x| vec![x.clone()]).collect())?;
    if ls.gram()? != amb.gram_fstar {
        return Err(consistency("Gram(f*)", field));
    }
    // e_j = sum_i (F^-1)_{j i} f_i where row i of F is f_i in e-coordinates.
    let finv = inverse(&RatMatrix::from_int(amb.f_in_e.clone()))?;
    let e: Vec<CycInt> = finv
        .to_rationals()
        .iter()
        .map(|r| lf.vector(r).map(|mut v| v.remove(0)))
        .collect::<Result<_>>()?;
    let le = KLattice::new(field, e.iter().map(|x| vec![x.clone()]).collect())?;
    if le.gram()? != RatMatrix::from_int(amb.gram_e.clone()) {
        return Err(consistency("Gram(e)", field));
    }
    Ok(CyclotomicModel { field, e, f, fstar })
}

impl CyclotomicModel {
    /// `Lambda` with basis `f`.
    pub fn lambda(&self) -> KLattice {
        KLattice { field: self.field, basis: self.f.iter().map(|x| vec![x.clone()]).collect() }
    }

    /// Maps `f*`-coordinates of `(L*)^m` into `F^m`.
    pub fn embed_fstar(&self, x: &[BigRational]) -> Result<Vec<CycInt>> {
        let d = self.field.degree();
        if x.is_empty() || x.len() % d != 0 {
            return Err(Error::LengthMismatch { expected: d, found: x.len() });
        }
        x.chunks(d)
            .map(|blk| {
                let mut s = CycInt::zero(self.field);
                for (c, fs) in blk.iter().zip(&self.fstar) {
                    if !c.is_zero() {
                        s = s.add(&fs.scale(c))?;
                    }
                }
                Ok(s)
            })
            .collect()
    }

    /// `Gamma_C` inside `F^m`; its trace Gram must equal the Gram of `lat`.
    pub fn embed(&self, lat: &CodeLattice) -> Result<KLattice> {
        if lat.spec() != self.field.root_lattice() {
            return Err(Error::InvalidField(format!("{} lattice cannot be embedded in {}", lat.spec(), self.field)));
        }
        let basis = lat.basis().to_rationals().iter().map(|r| self.embed_fstar(r)).collect::<Result<Vec<_>>>()?;
        let kl = KLattice::new(self.field, basis)?;
        if kl.gram()? != *lat.gram() {
            return Err(consistency("trace Gram of Gamma_C", self.field));
        }
        Ok(kl)
    }

    /// The fixed representative `x_a` of the coset of `a`, in `f*`-coordinates.
    pub fn coset_representative(&self, a: Elem) -> Result<Vec<i64>> {
        let ring = self.field.code_ring();
        ring.check(a)?;
        let d = self.field.degree();
        let mut x = vec![0i64; d];
        match (self.field, a) {
            (_, 0) => {}
            (CycField::Zeta8, 1) => x[0] = 1,
            (CycField::Zeta8, 3) => x[1] = 1,
            (CycField::Zeta8, 2) => {
                x[0] = 1;
                x[1] = 1;
            }
            (CycField::Zeta9, 1) => x[0] = 1,
            (CycField::Zeta9, 2) => x[0] = -1,
            _ => unreachable!("checked above"),
        }
        Ok(x)
    }
}

/// `b_i . b_j` over a common denominator, for fast evaluation of `x . x`.
struct ScaledKGram {
    field: CycField,
    /// `num[t][i][j]` is the `eta^t` coordinate times `den`.
    num: Vec<Vec<Vec<i128>>>,
    den: BigInt,
    /// `Tr_{K/Q}(eta^t)`.
    eta_traces: Vec<BigRational>,
}

impl ScaledKGram {
    fn new(l: &KLattice) -> Result<Self> {
        let g = l.k_gram()?;
        let r = l.field.real_degree();
        let n = l.rank();
        let den = g.iter().flatten().flat_map(|k| k.coords.iter()).fold(BigInt::one(), |d, c| d.lcm(c.denom()));
        let mut num = vec![vec![vec![0i128; n]; n]; r];
        for (i, row) in g.iter().enumerate() {
            for (j, k) in row.iter().enumerate() {
                for (t, c) in k.coords.iter().enumerate() {
                    let v = (c * BigRational::from_integer(den.clone())).to_integer();
                    num[t][i][j] = v.to_i128().ok_or(Error::Overflow("K-valued gram"))?;
                }
            }
        }
        let eta_traces = (0..r)
            .map(|t| {
                let mut coords = vec![BigRational::zero(); r];
                coords[t] = BigRational::one();
                KElem { field: l.field, coords }.trace()
            })
            .collect();
        Ok(ScaledKGram { field: l.field, num, den, eta_traces })
    }

    /// Numerators of `w . w` over `den`.
    fn eval(&self, w: &[i128], out: &mut [i128]) -> Result<()> {
        for (t, m) in self.num.iter().enumerate() {
            let mut s: i128 = 0;
            for (i, row) in m.iter().enumerate() {
                if w[i] == 0 {
                    continue;
                }
                let mut r: i128 = 0;
                for (j, &g) in row.iter().enumerate() {
                    r += g * w[j];
                }
                s = s.checked_add(r.checked_mul(w[i]).ok_or(Error::Overflow("theta exponent"))?).ok_or(Error::Overflow("theta exponent"))?;
            }
            out[t] = s;
        }
        Ok(())
    }

    fn exponent(&self, num: &[i128], scale: &BigInt) -> KExponent {
        let den = &self.den * scale;
        let coords: Vec<BigRational> = num.iter().map(|&v| BigRational::new(BigInt::from(v), den.clone())).collect();
        let trace = coords.iter().zip(&self.eta_traces).map(|(c, t)| c * t).sum();
        KExponent { trace, coords }
    }
}

/// Theta series of the coset `offset + L` (offset in basis coordinates):
/// the sum of `q^(x . x)` over vectors with `Tr_{K/Q}(x . x) <= trace_bound`.
pub fn theta_series(l: &KLattice, offset: Option<&[BigRational]>, trace_bound: i64) -> Result<KSeries> {
    if trace_bound < 0 {
        return Err(Error::NegativeBound(trace_bound));
    }
    let gram = l.gram()?;
    let kg = ScaledKGram::new(l)?;
    let n = l.rank();
    let d = offset.map_or(BigInt::one(), |o| o.iter().fold(BigInt::one(), |d, c| d.lcm(c.denom())));
    let di = d.to_i128().ok_or(Error::Overflow("offset denominator"))?;
    let shift: Vec<i128> = match offset {
        Some(o) => o
            .iter()
            .map(|c| (c * BigRational::from_integer(d.clone())).to_integer().to_i128().ok_or(Error::Overflow("offset")))
            .collect::<Result<_>>()?,
        None => vec![0; n],
    };
    let mut acc: HashMap<Vec<i128>, u64> = HashMap::new();
    let mut w = vec![0i128; n];
    let mut val = vec![0i128; kg.field.real_degree()];
    let mut err = None;
    Enumerator::new(&gram)?.for_each(offset, Norm::from_integer(trace_bound), |k, _| {
        if err.is_some() {
            return;
        }
        for i in 0..n {
            w[i] = di * k[i] as i128 + shift[i];
        }
        match kg.eval(&w, &mut val) {
            Ok(()) => *acc.entry(val.clone()).or_insert(0) += 1,
            Err(e) => err = Some(e),
        }
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    let scale = &d * &d;
    let mut out = KSeries::zero(l.field, rat(trace_bound));
    for (num, c) in acc {
        out.add_term(kg.exponent(&num, &scale), BigInt::from(c));
    }
    Ok(out)
}

/// `theta_a`: the theta series of `x_a + Lambda`.
pub fn theta_coset(field: CycField, a: Elem, trace_bound: i64) -> Result<KSeries> {
    let model = build_cyclotomic_lattice(field)?;
    theta_coset_in(&model, a, trace_bound)
}

fn theta_coset_in(model: &CyclotomicModel, a: Elem, trace_bound: i64) -> Result<KSeries> {
    let amb = ambient_basis(&model.field.root_lattice())?;
    let x = model.coset_representative(a)?;
    // f*-coordinates to f-coordinates.
    let offset: Vec<BigRational> = (0..x.len())
        .map(|j| x.iter().enumerate().map(|(i, &c)| rat(c) * amb.fstar_in_f.get(i, j)).sum())
        .collect();
    theta_series(&model.lambda(), Some(&offset), trace_bound)
}

/// Theta series of `Gamma_C`, summed directly over the lattice.
pub fn theta_code_lattice(field: CycField, code: &Code, trace_bound: i64) -> Result<KSeries> {
    let model = build_cyclotomic_lattice(field)?;
    let lat = build_gamma_c(&field.root_lattice(), code)?;
    theta_series(&model.embed(&lat)?, None, trace_bound)
}

/// Substitutes the coset theta series into the weight enumerator: the
/// Lee composition for `zeta8` and the symmetrized enumerator for `zeta9`.
pub fn theta_from_enumerator(field: CycField, code: &Code, trace_bound: i64) -> Result<KSeries> {
    check_code_ring(field, code)?;
    let model = build_cyclotomic_lattice(field)?;
    let (kind, reps): (WeightKind, &[Elem]) = match field {
        CycField::Zeta8 => (WeightKind::LeeComposition, &[0, 1, 2]),
        CycField::Zeta9 => (WeightKind::Symmetrized, &[0, 1]),
    };
    let thetas = reps.iter().map(|&a| theta_coset_in(&model, a, trace_bound)).collect::<Result<Vec<_>>>()?;
    let we = weight_enumerator(code, kind)?;
    let mut out = KSeries::zero(field, rat(trace_bound));
    for (exps, count) in &we.coeffs {
        let mut term = KSeries::one(field, rat(trace_bound));
        for (t, &e) in thetas.iter().zip(exps) {
            term = term.mul(&t.pow(e)?)?;
        }
        out = out.add(&term.scale(&BigInt::from(*count)))?;
    }
    Ok(out)
}

fn check_code_ring(field: CycField, code: &Code) -> Result<()> {
    if code.ring() != field.code_ring() {
        return Err(Error::RingMismatch { expected: field.code_ring().to_string(), found: code.ring().to_string() });
    }
    Ok(())
}

/// Outcome of comparing `theta_C` with the enumerator substitution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaIdentityReport {
    pub field: CycField,
    pub trace_bound: i64,
    pub lattice_side: KSeries,
    pub enumerator_side: KSeries,
    /// First exponent with differing coefficients: (exponent, lattice, enumerator).
    pub mismatch: Option<(KExponent, BigInt, BigInt)>,
    pub warnings: Vec<String>,
}

impl ThetaIdentityReport {
    pub fn holds(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for ThetaIdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field {} trace bound {}", self.field, self.trace_bound)?;
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        writeln!(f, "trace exponent lattice enumerator")?;
        let keys: std::collections::BTreeSet<&KExponent> =
            self.lattice_side.coeffs().keys().chain(self.enumerator_side.coeffs().keys()).collect();
        for e in keys {
            writeln!(f, "{} {e} {} {}", e.trace, self.lattice_side.coeff(e), self.enumerator_side.coeff(e))?;
        }
        match &self.mismatch {
            None => writeln!(f, "identity holds"),
            Some((e, a, b)) => writeln!(f, "identity fails at {e}: lattice {a}, enumerator {b}"),
        }
    }
}

/// Compares the theta series of `Gamma_C` with the enumerator substitution.
/// A code that is not contained in its Euclidean dual is reported with a
/// warning, since the identity is only claimed under that hypothesis.
pub fn verify_theta_identity(field: CycField, code: &Code, trace_bound: i64) -> Result<ThetaIdentityReport> {
    check_code_ring(field, code)?;
    let mut warnings = Vec::new();
    if !is_self_orthogonal(code, Product::Euclidean)? {
        warnings.push("code is not contained in its Euclidean dual".to_string());
    }
    let lattice_side = theta_code_lattice(field, code, trace_bound)?;
    let enumerator_side = theta_from_enumerator(field, code, trace_bound)?;
    let mismatch = lattice_side.first_difference(&enumerator_side)?;
    Ok(ThetaIdentityReport { field, trace_bound, lattice_side, enumerator_side, mismatch, warnings })
}

/// An ideal of `Z_K = Z[eta]`, as an HNF basis in coordinates `1, eta, ..`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KIdeal {
    pub field: CycField,
    pub hnf: IntMatrix,
}

impl KIdeal {
    /// `g Z_K` for `g` in `Z_K`.
    pub fn principal(g: &KElem) -> Result<Self> {
        let r = g.field.real_degree();
        let eta_k = KElem { field: g.field, coords: (0..r).map(|t| if t == 1 { rat(1) } else { rat(0) }).collect() };
        let mut rows = Vec::with_capacity(r);
        let mut p = g.clone();
        for _ in 0..r {
            rows.push(p.coords.clone());
            p = p.mul(&eta_k)?;
        }
        let m = RatMatrix::from_rationals(&rows, r)?;
        let ints = m.to_int().ok_or_else(|| Error::Consistency(format!("{g} is not in Z_K")))?;
        Ok(KIdeal { field: g.field, hnf: hnf(&ints) })
    }

    pub fn unit(field: CycField) -> Self {
        KIdeal { field, hnf: IntMatrix::identity(field.real_degree()) }
    }

    pub fn is_unit(&self) -> bool {
        self.hnf == IntMatrix::identity(self.field.real_degree())
    }

    /// `[Z_K : I]`.
    pub fn norm(&self) -> BigInt {
        (0..self.hnf.rows()).map(|i| self.hnf.get(i, i).clone()).product()
    }
}

impl fmt::Display for KIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.hnf.rows())
            .map(|i| self.hnf.row(i).iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// `{x in Z_K : Tr(x Z_K (v . v)/2) in Z for all v in L*}`.
pub fn level_ideal_of(l: &KLattice) -> Result<KIdeal> {
    let field = l.field;
    let r = field.real_degree();
    let dual = l.dual()?;
    // The Z-span of the v conj(v), v in L*, is spanned by b_i conj(b_i) and
    // b_i . b_j for a basis b of L*.
    let mut span: Vec<KElem> = Vec::new();
    for i in 0..dual.rank() {
        for j in i..dual.rank() {
            let p = k_scalar_product(&dual.basis[i], &dual.basis[j])?;
            span.push(if i == j { KElem { field, coords: p.coords.iter().map(|c| c / rat(2)).collect() } } else { p });
        }
    }
    let eta_k = KElem { field, coords: (0..r).map(|t| if t == 1 { rat(1) } else { rat(0) }).collect() };
    let mut gens: Vec<Vec<BigRational>> = Vec::new();
    for s in span {
        let mut p = s;
        for _ in 0..r {
            gens.push(p.coords.clone());
            p = p.mul(&eta_k)?;
        }
    }
    let t = z_basis(&gens, r)?;
    // M[k][i] = Tr(eta^i t_k); the ideal is {a in Z^r : M a in Z^r}.
    let eta_pows: Vec<KElem> = (0..r)
        .map(|i| KElem { field, coords: (0..r).map(|t| if t == i { rat(1) } else { rat(0) }).collect() })
        .collect();
    let mut constraints: Vec<Vec<BigRational>> = (0..r)
        .map(|i| (0..r).map(|j| if i == j { rat(1) } else { rat(0) }).collect())
        .collect();
    for tk in &t {
        let tk = KElem { field, coords: tk.clone() };
        constraints.push(eta_pows.iter().map(|e| e.mul(&tk).map(|p| p.trace())).collect::<Result<_>>()?);
    }
    // The solution set is the dual of the span of the constraint rows.
    let b = RatMatrix::from_rationals(&z_basis(&constraints, r)?, r)?;
    let sol = inverse(&b)?.transpose();
    let ints = sol.to_int().ok_or_else(|| Error::Consistency("level ideal is not integral".into()))?;
    Ok(KIdeal { field, hnf: hnf(&ints) })
}

/// A `Z`-basis of the full-rank lattice spanned by rational rows.
fn z_basis(rows: &[Vec<BigRational>], r: usize) -> Result<Vec<Vec<BigRational>>> {
    let m = RatMatrix::from_rationals(rows, r)?;
    let h = hnf(m.numerator());
    let basis = RatMatrix::new(h, m.denominator().clone())?.to_rationals();
    let nonzero: Vec<Vec<BigRational>> = basis.into_iter().filter(|row| row.iter().any(|c| !c.is_zero())).collect();
    if nonzero.len() != r {
        return Err(Error::Singular);
    }
    Ok(nonzero)
}

/// Level ideal of `Lambda`.
pub fn level_ideal(field: CycField) -> Result<KIdeal> {
    level_ideal_of(&build_cyclotomic_lattice(field)?.lambda())
}

/// Generator of the level ideal of `Lambda` in closed form:
/// `(zeta + zeta^-1)(1 - zeta)(1 - zeta^-1)` for `zeta8` and
/// `(1 - zeta)(1 - zeta^-1)` for `zeta9`.
pub fn expected_level_generator(field: CycField) -> Result<KElem> {
    let one = c_one(field);
    let base = one.sub(&z(field, 1))?.mul(&one.sub(&z(field, -1))?)?;
    match field {
        CycField::Zeta8 => eta(field).mul(&base)?.to_k(),
        CycField::Zeta9 => base.to_k(),
    }
}

/// Level ideal of `Gamma_C` for a code over the field's ring.
pub fn level_ideal_of_code(field: CycField, code: &Code) -> Result<KIdeal> {
    check_code_ring(field, code)?;
    let model = build_cyclotomic_lattice(field)?;
    let lat = build_gamma_c(&field.root_lattice(), code)?;
    level_ideal_of(&model.embed(&lat)?)
}

/// Checks `rho(x_a) = a` for every ring element.
pub fn check_coset_representatives(model: &CyclotomicModel) -> Result<()> {
    let spec = model.field.root_lattice();
    for a in model.field.code_ring().elements() {
        let x: Vec<BigRational> = model.coset_representative(a)?.into_iter().map(rat).collect();
        let got = rho_rational(&spec, &x)?;
        if got != [a] {
            return Err(Error::Consistency(format!("x_{a} maps to {:?}", got)));
        }
        let l = lift(&spec, &[a])?;
        if l.len() != x.len() {
            return Err(Error::Consistency("lift length".into()));
        }
    }
    Ok(())
}
