//! Legendre cordial labelings modulo an odd prime.
//!
//! A bijection `f: V(G) -> {1, ..., n}` induces an edge label of 1 when
//! `f(u) + f(v)` is a quadratic residue mod `p` and 0 when it is a
//! nonresidue or divisible by `p`. The labeling is *Legendre cordial* when
//! the two label counts differ by at most one.
//!
//! The crate provides the arithmetic ([`numtheory`]), graphs and graph
//! operations ([`graph`], [`products`]), the induced labeling and its tallies
//! ([`labeling`]), explicit constructions for join, corona and product
//! graphs ([`constructors`]) and an exhaustive search used both as an oracle
//! and to find base labelings ([`search`]).

pub mod constructors;
pub mod error;
pub mod graph;
pub mod labeling;
pub mod numtheory;
pub mod products;
pub mod search;

pub use constructors::{Construction, ConstructionRecipe, Theorem};
pub use error::{Error, Result};
pub use graph::{Family, Graph, GraphSource};
pub use labeling::{EdgeTally, Labeling};
pub use numtheory::LegendreContext;
