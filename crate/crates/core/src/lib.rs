//! Exact computational machinery for oriented link diagrams: HOMFLYPT
//! polynomials via the skein relation, planar-diagram and
//! Dowker--Thistlethwaite codecs, a tangle DSL compiler, Legendrian front
//! invariants with Lagrangian-sliceness obstructions, and exact
//! Neumann--Zagier volume-correction tables for Dehn-filling families.
//!
//! The crate is `no_std` (with `alloc`); all values are immutable after
//! construction and all operations are pure functions, so everything here is
//! safe to share across threads. IO, file formats on disk, and the command
//! line live in the companion `skein-cli` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod corpus;
pub mod diagram;
pub mod homfly;
pub mod laurent;
pub mod legendrian;
pub mod tangle;
pub mod volume;

pub use diagram::{Crossing, DTCode, PDCode, Sign};
pub use homfly::{homfly, homfly_specialize, MemoCache, SkeinTriple};
pub use laurent::{LaurentPoly1, LaurentPoly2, Rational};
pub use legendrian::{ClassicalInvariants, FrontDiagram, ObstructionReport};
pub use tangle::{TangleProgram, TwistTemplate};
pub use volume::{CorrectionTable, FillingSlope};
