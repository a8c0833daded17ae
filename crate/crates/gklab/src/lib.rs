//! Growth sequences and dimension estimates for finitely presented
//! algebras over commutative coefficient domains.
//!
//! The crate has two halves that check each other. The concrete half
//! ([`presentation`], [`growth`], [`analysis`]) takes a rewriting-system
//! presentation of an algebra over `Z` or `Z[q]`, computes exact ranks
//! of spans of products of a generating frame, and classifies the tail
//! of that sequence into a dimension estimate. The symbolic half
//! ([`calculus`]) evaluates dimension bounds for algebras described as
//! construction trees (polynomial extensions, quotients, tensor
//! products, Ore extensions, modules, ...) by interval rules. The
//! `verify` CLI subcommand and the builtin zoo run both halves on the
//! same algebras and insist the answers agree.
//!
//! All arithmetic is exact: big integers, big rationals, and rational
//! functions of one parameter. Nothing in the machine-readable output
//! is a float.

pub mod analysis;
pub mod calculus;
pub mod cli;
pub mod coeff;
pub mod growth;
pub mod presentation;

mod util;

pub use analysis::{classify_growth, estimate_gkdim, GKEstimate, GrowthClass};
pub use calculus::{eval_construction, ConstructionExpr, DimBound, DimValue};
pub use coeff::{DomainSpec, Scalar};
pub use presentation::{NCPoly, Word};
pub use growth::{growth_sequence, Frame, GrowthSequence};
pub use presentation::Presentation;
