//! Identifying and locating-dominating codes in circulant graphs.
//!
//! * [`graph`]: circulant graphs `C_n(d_1, …, d_k)` and neighbourhoods.
//! * [`code`] and [`verify`]: codes and the three code predicates, with
//!   failure witnesses.
//! * [`constructions`]: closed-form identifying codes of `C_n(1,3)` and the
//!   exact values of `γ^ID` and `γ^LD`.
//! * [`share`]: exact shares, codeword patterns, shifting schemes and the
//!   share bounds they satisfy.
//! * [`search`]: exact minimum-size search (branch and bound, meet in the
//!   middle).
//! * [`cli`]: the `circodes` command line.

pub mod cli;
pub mod code;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod rational;
pub mod search;
pub mod set;
pub mod share;
pub mod verify;

pub use code::Code;
pub use error::{Error, Result};
pub use graph::CirculantGraph;
pub use rational::Rational;
pub use set::VertexSet;
pub use verify::{CodeKind, VerifyReport, Witness};
