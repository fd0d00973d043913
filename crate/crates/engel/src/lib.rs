//! Computation in Engel and nilpotent groups.
//!
//! This crate provides:
//!
//! - a polycyclic-presentation engine with collection to normal form
//!   ([`pc`]), which solves the word problem and underlies everything else;
//! - a catalog of verified group builders — free nilpotent groups of class
//!   up to 3, their exponent-`p^2` quotients, exponent-3 groups `B(m,3)`,
//!   dihedral and quaternion 2-groups, the wreath product `C3 wr C3` —
//!   together with homomorphisms between them ([`catalog`]);
//! - Engel-theoretic analytics: semigroup-law checking, Engel-element
//!   classification, and degrees of `n`-nilpotency with exact and
//!   Monte Carlo modes ([`analysis`]);
//! - exact and brute-force solvers for classical decision and search
//!   problems: word, power, discrete logarithm, `n`-th roots, conjugacy
//!   search, geodesic length, subgroup membership ([`solve`]);
//! - group-based cryptographic protocols: multilinear-map key agreement,
//!   a 2-Engel key exchange, a 4-Engel signature, two word-problem secret
//!   sharing schemes, a semidirect-product key exchange on the holomorph,
//!   and a homomorphism-learning sampler ([`proto`]);
//! - canonical serialization, a presentation text format, a framed wire
//!   protocol, and a session driver for running protocol parties
//!   in-process or over a byte stream ([`wire`]), plus the `engel` CLI
//!   ([`cli`]).
//!
//! Start with the `examples/` directory: each example is a runnable tour
//! of one capability.

pub mod analysis;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod pc;
pub mod proto;
pub mod solve;
pub mod wire;
pub mod word;

pub use error::{BuildError, HomError, PcError, WordError};
pub use pc::{ElementOrder, GroupElement, PcBuilder, PcGroup};
pub use word::FreeWord;
