//! Belyi maps, generating systems and dessins d'enfants for genus-0
//! single-cycle covers of the projective line.
//!
//! The crate builds the three sides of the correspondence and checks that
//! they agree exactly:
//!
//! * [`families`]: closed-form maps (power maps, normalized Chebyshev
//!   polynomials, single-cycle polynomials and symmetric single-cycle maps)
//!   with ramification profiles computed by exact squarefree decomposition;
//! * [`gensys`]: permutation triples `(σ₀, σ₁, σ∞)` with `σ₀σ₁σ∞ = 1`, the
//!   canonical triple of each combinatorial type, and conjugacy testing;
//! * [`dessin`]: the bipartite ribbon graph of a triple, its genus, diameter
//!   and two-hub shape, and Graphviz export;
//! * [`catalog`]: records tying the three together and the JSON Lines catalog.
//!
//! Arithmetic is exact throughout ([`poly`], [`ratfunc`]).

pub mod catalog;
pub mod dessin;
pub mod error;
pub mod families;
pub mod gensys;
pub mod perm;
pub mod poly;
pub mod ratfunc;
pub mod rational;

pub use catalog::{Catalog, TriptychRecord};
pub use dessin::{Dessin, DessinShape};
pub use error::{Error, Result};
pub use families::{BelyiMap, Family, RamificationProfile, SingleCycleVerdict};
pub use gensys::{CombinatorialType, GeneratingSystem};
pub use perm::{CycleType, Permutation};
pub use poly::{Poly, SquarefreeDecomposition};
pub use ratfunc::{ProjectivePoint, RatFunc};
pub use rational::Rational;
