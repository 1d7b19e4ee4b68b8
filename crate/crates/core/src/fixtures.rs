//! Named codes shipped with the crate and the registry of rank-24 lattices
//! whose root systems are known.
//!
//! Generator matrices of the standard codes (Golay, ternary Golay,
//! tetracode, octacode, hexacode) are independently sourced standard forms;
//! their defining properties are checked by the test suite rather than
//! assumed.

use crate::codes::{crt_combine, Code};
use crate::construction::build_gamma_c;
use crate::error::{Error, Result};
use crate::rings::RingSpec;
use crate::rootlattices::RootLatticeSpec;
use crate::theta::{root_system, RootSystemLabel};

#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub about: &'static str,
    pub text: &'static str,
}

macro_rules! fixture {
    ($name:literal, $about:literal) => {
        Fixture { name: $name, about: $about, text: include_str!(concat!("../fixtures/", $name, ".code")) }
    };
}

pub const FIXTURES: &[Fixture] = &[
    fixture!("golay24", "extended binary Golay code [24,12,8], from the cyclic code of length 23"),
    fixture!("hamming8", "extended Hamming code [8,4,4]"),
    fixture!("ternary_golay12", "extended ternary Golay code [12,6,6]"),
    fixture!("tetracode4", "tetracode [4,2,3] over Z3"),
    fixture!("octacode8", "octacode over Z4, minimum Lee weight 6"),
    fixture!("hexacode6", "hexacode [6,3,4] over F4, Hermitian self-dual"),
    fixture!("z25_five", "the ideal <5> of Z25"),
    fixture!("repetition2", "binary repetition code of length 2"),
    fixture!("z4_two", "the ideal <2> of Z4"),
    fixture!("z5_pair", "self-dual [2,1] code over Z5"),
    fixture!("z7_four", "self-dual [4,2,3] code over Z7"),
    fixture!("z13_pair", "self-dual [2,1] code over Z13"),
    fixture!("f4_pair", "Hermitian self-dual [2,1] code over F4"),
    fixture!("f2u_pair", "Type IV [2,1] code over F2u"),
    fixture!("f2u_u", "the ideal <u> of F2u"),
    fixture!("c6_1", "binary code <111111>"),
    fixture!("c6_2", "binary code <110000, 001111>"),
    fixture!("c6_3", "binary code <100100, 010010, 001001>"),
    fixture!("c6_4", "binary code <100111, 010111, 001111>"),
    fixture!("c3_1", "binary zero code of length 3"),
    fixture!("c3_2", "binary code <110>"),
    fixture!("c3_3", "binary code <111>"),
    fixture!("c2", "binary code <11>"),
    fixture!("c1", "binary zero code of length 1"),
];

/// Parses a shipped fixture by name.
pub fn fixture(name: &str) -> Result<Code> {
    let f = FIXTURES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::Unsupported(format!("no fixture named {name}")))?;
    Code::parse(f.text)
}

fn times(c: &Code, k: usize) -> Result<Code> {
    let mut out = c.clone();
    for _ in 1..k {
        out = out.direct_sum(c)?;
    }
    Ok(out)
}

/// `CRT(C, C^perp)` for a shipped binary fixture.
pub fn crt_with_dual(name: &str) -> Result<Code> {
    let c = fixture(name)?;
    crt_combine(&c, &c.dual(false)?)
}

/// How a registry row obtains its code.
#[derive(Debug, Clone, Copy)]
pub enum RowCode {
    /// A shipped fixture, repeated `copies` times as a direct sum.
    Fixture { name: &'static str, copies: usize },
    /// `CRT(C, C^perp)` of a shipped binary fixture.
    CrtWithDual(&'static str),
    /// No generator matrix is shipped; the row is listed and skipped.
    Unavailable(&'static str),
}

#[derive(Debug, Clone, Copy)]
pub struct TableRow {
    /// Root lattice and ring, e.g. `A1/Z2`.
    pub group: &'static str,
    pub code_name: &'static str,
    pub expected: &'static str,
    pub code: RowCode,
}

impl TableRow {
    pub fn spec(&self) -> Result<RootLatticeSpec> {
        let (lat, ring) = self.group.split_once('/').ok_or_else(|| Error::InvalidSpec(self.group.into()))?;
        let n: usize = lat[1..].parse().map_err(|_| Error::InvalidSpec(self.group.into()))?;
        let ring: RingSpec = ring.parse()?;
        match &lat[..1] {
            "A" => RootLatticeSpec::a(n),
            "D" => RootLatticeSpec::d(n, Some(ring)),
            "E" => RootLatticeSpec::e(n),
            _ => Err(Error::InvalidSpec(self.group.into())),
        }
    }

    /// The code, or `None` when no generator matrix is shipped.
    pub fn build_code(&self) -> Result<Option<Code>> {
        match self.code {
            RowCode::Fixture { name, copies } => times(&fixture(name)?, copies).map(Some),
            RowCode::CrtWithDual(name) => crt_with_dual(name).map(Some),
            RowCode::Unavailable(_) => Ok(None),
        }
    }
}

const fn fx(group: &'static str, code_name: &'static str, expected: &'static str, name: &'static str, copies: usize) -> TableRow {
    TableRow { group, code_name, expected, code: RowCode::Fixture { name, copies } }
}

const fn crt(group: &'static str, code_name: &'static str, expected: &'static str, name: &'static str) -> TableRow {
    TableRow { group, code_name, expected, code: RowCode::CrtWithDual(name) }
}

const fn skip(group: &'static str, code_name: &'static str, expected: &'static str, why: &'static str) -> TableRow {
    TableRow { group, code_name, expected, code: RowCode::Unavailable(why) }
}

const NO_MATRIX: &str = "generator matrix not shipped";

/// Rank-24 even unimodular lattices from codes, with their root systems.
pub const TABLE_ROWS: &[TableRow] = &[
    skip("A1/Z2", "A24", "2D12", NO_MATRIX),
    skip("A1/Z2", "B24", "D10+2E7", NO_MATRIX),
    skip("A1/Z2", "C24", "3D8", NO_MATRIX),
    skip("A1/Z2", "D24", "4D6", NO_MATRIX),
    skip("A1/Z2", "E24", "D24", NO_MATRIX),
    skip("A1/Z2", "F24", "6D4", NO_MATRIX),
    fx("A1/Z2", "G24", "24A1", "golay24", 1),
    fx("A1/Z2", "3E8", "3E8", "hamming8", 3),
    skip("A1/Z2", "E8+E16", "E8+D16", NO_MATRIX),
    fx("A2/Z3", "G12", "12A2", "ternary_golay12", 1),
    skip("A2/Z3", "4C3(12)", "4E6", NO_MATRIX),
    fx("A2/Z3", "3E4", "3E8", "tetracode4", 3),
    fx("A3/Z4", "O8", "8A3", "octacode8", 1),
    skip("A3/Z4", "Q8", "4D6", NO_MATRIX),
    skip("A3/Z4", "K8", "D24", NO_MATRIX),
    skip("A3/Z4", "K8'", "2D12", NO_MATRIX),
    fx("A4/Z5", "C2^3", "3E8", "z5_pair", 3),
    skip("A4/Z5", "F6", "6A4", NO_MATRIX),
    fx("A6/Z7", "C4", "4A6", "z7_four", 1),
    skip("A8/Z9", "C9,3,1", "3E8", NO_MATRIX),
    skip("A8/Z9", "C9,3,2", "3A8", NO_MATRIX),
    fx("A12/Z13", "C13,2", "2A12", "z13_pair", 1),
    fx("A24/Z25", "<5>", "A24", "z25_five", 1),
    fx("E6/Z3", "E4", "4E6", "tetracode4", 1),
    skip("D4/F2u", "K6", "D24", NO_MATRIX),
    skip("D4/F2u", "[6,2]_d4d2a", "D16+E8", NO_MATRIX),
    skip("D4/F2u", "[6,3]_3d2a", "3E8", NO_MATRIX),
    skip("D4/F2u", "[6,3]_3d2d", "3D8", NO_MATRIX),
    skip("D6/F2u", "[4,1]_d4(K4)", "D24", NO_MATRIX),
    skip("D6/F2u", "[4,2]_2d2(D4)", "2D12", NO_MATRIX),
    skip("D12/F2u", "K2", "D24", NO_MATRIX),
    fx("D4/F4", "E6", "6D4", "hexacode6", 1),
    fx("D4/F4", "3C2", "3E8", "f4_pair", 3),
    skip("D6/F4", "C4", "4D6", NO_MATRIX),
    fx("D12/F4", "C2", "D24", "f4_pair", 1),
    crt("D4/F2xF2", "CRT(C6,1)", "D24", "c6_1"),
    crt("D4/F2xF2", "CRT(C6,2)", "D16+E8", "c6_2"),
    crt("D4/F2xF2", "CRT(C6,3)", "3E8", "c6_3"),
    crt("D4/F2xF2", "CRT(C6,4)", "2D12", "c6_4"),
    crt("D8/F2xF2", "CRT(C3,1)", "3E8", "c3_1"),
    crt("D8/F2xF2", "CRT(C3,2)", "D16+E8", "c3_2"),
    crt("D8/F2xF2", "CRT(C3,3)", "D24", "c3_3"),
    crt("D12/F2xF2", "CRT(C2)", "D24", "c2"),
    crt("D24/F2xF2", "CRT(C1)", "D24", "c1"),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowOutcome {
    Match(RootSystemLabel),
    Mismatch { computed: RootSystemLabel },
    Skip(&'static str),
}

/// Builds the row's lattice, checks it is even unimodular, and compares its
/// root system with the expected label.
pub fn run_row(row: &TableRow) -> Result<RowOutcome> {
    let expected: RootSystemLabel = row.expected.parse()?;
    let Some(code) = row.build_code()? else {
        let RowCode::Unavailable(why) = row.code else { unreachable!() };
        return Ok(RowOutcome::Skip(why));
    };
    let lat = build_gamma_c(&row.spec()?, &code)?;
    if !(lat.is_even() && lat.is_unimodular()) {
        return Err(Error::Consistency(format!("{} {} is not even unimodular", row.group, row.code_name)));
    }
    let computed = root_system(&lat)?;
    Ok(if computed == expected { RowOutcome::Match(computed) } else { RowOutcome::Mismatch { computed } })
}
