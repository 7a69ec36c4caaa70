//! Exact arithmetic for the rank-3 Coxeter groups `W(m)` with two bonds of
//! order `m` and one unbonded pair, and for the associated rank-2 lattice
//! pairs.
//!
//! The crate computes, entirely over arbitrary-precision integers and
//! rationals:
//!
//! * membership, reducedness, and the real/imaginary split for lattice
//!   pairs `[a, b]` under the form `a^2 + b^2 - m a b` ([`roots`]);
//! * the canonical sequence chain, depth data `(N_n, rho_n)`, and the level
//!   of an imaginary pair ([`canseq`]);
//! * staircase and reflection words, grid-crossing oracles, and the
//!   depth-`k` word forms ([`words`]);
//! * complete rewriting systems for `W(m)` and normal forms ([`rewrite`]);
//! * closed-form standard words for reflection words ([`stdwords`]);
//! * the geometric representation over `Q[2 cos(pi/m)]` and its
//!   spectral-radius checks ([`reflect`]);
//! * batch verification campaigns over ranges of pairs ([`verify`]).

#![forbid(unsafe_code)]

pub mod canseq;
pub mod error;
pub mod reflect;
pub mod rewrite;
pub mod roots;
pub mod stdwords;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use roots::{Root, RootClass};
pub use words::Word;
