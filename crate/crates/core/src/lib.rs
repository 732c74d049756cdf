//! Exact computation of states, state polytopes and Hilbert-Mumford style
//! indices for graded pieces of homogeneous ideals, with verifiers for how
//! these invariants decompose across chains of varieties glued along shared
//! coordinate points.
//!
//! Everything runs over exact arithmetic: pieces are reduced row echelon
//! forms over [`Rat`], polytopes are rational point sets with hulls extracted
//! by exact linear programming, and every reported equality is literal, never
//! approximate.

pub mod chain;
pub mod error;
pub mod gotzmann;
pub mod hm;
pub mod ideal;
pub mod matrix;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;
pub mod polytope;
pub mod scalar;
pub mod simplex;
pub mod states;

/// The exact scalar the domain layers fix: arbitrary precision rationals.
/// The linear algebra, simplex and polytope kernels stay generic over
/// [`scalar::Scalar`] for callers who want a different exact type.
pub type Rat = num_rational::BigRational;

pub use chain::{ChainConfig, ChainInstance, TVariant};
pub use error::{Error, Result};
pub use hm::{mu, mu_dual, OneParamSubgroup};
pub use ideal::{GradedPiece, IdealPresentation};
pub use monomial::Monomial;
pub use order::TermOrder;
pub use poly::Polynomial;
pub use polytope::Polytope;
pub use scalar::Scalar;
pub use states::{states, states_with, EnumerationLimits, StateSet};
