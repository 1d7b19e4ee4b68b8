//! Lattices built from codes over finite rings by gluing copies of a root
//! lattice along its discriminant group.
//!
//! For a root lattice `L` with `L*/L` identified with a ring `R` and a code
//! `C` of length `m` over `R`, the lattice `Gamma_C` is the preimage of `C`
//! under `(L*)^m -> R^m`. Its integrality, evenness and unimodularity are
//! governed by duality and weight conditions on `C`, which
//! [`construction::verify_main_theorem`] checks against the lattice side.

pub mod codes;
pub mod construction;
pub mod error;
pub mod exactlinear;
pub mod fixtures;
pub mod hilbert;
pub mod rings;
pub mod rootlattices;
pub mod theta;

pub use codes::{Code, Product};
pub use construction::{build_gamma_c, verify_main_theorem, CodeLattice};
pub use error::{Error, Result};
pub use exactlinear::{IntMatrix, LatticeDump, RatMatrix};
pub use hilbert::{CycField, KSeries};
pub use rings::{Elem, RingSpec};
pub use rootlattices::{Family, RootLatticeSpec};
pub use theta::{Norm, RootSystemLabel};
