//! Width-bounded string factorisations of minimum and maximum dimension.
//!
//! A factorisation of width `k` cuts a word into factors of length at most
//! `k`; its dimension is the number of distinct factors. This crate provides
//! a greedy solver for the minimum at width 2 ([`minfact`]), a greedy solver
//! for the maximum at any width ([`maxfact`]), exact solvers ([`exact`]), the
//! 3-dimensional-matching gadget compiler ([`reduction`]) and a seeded
//! greedy-versus-optimum experiment ([`experiment`]).

pub mod error;
pub mod exact;
pub mod experiment;
pub mod maxfact;
pub mod minfact;
pub mod reduction;
pub mod rng;
pub mod word;

pub use error::{ExactError, ExperimentError, ParseError, ReductionError};
pub use exact::Objective;
pub use word::{
    Alphabet, FactorSet, Factorisation, Format, Symbol, TokenString, ValidationReport, Violation,
};
