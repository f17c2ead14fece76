//! Exact coloring-base densities of graphs over finite abelian groups.
//!
//! A coloring `Z`-base for a graph `G` is a set `A` in a finite abelian group `Z`
//! together with a map `f: V(G) -> Z` such that `A + f(u)` and `A + f(v)` are disjoint
//! for every edge `uv`. The best density `|A| / |Z|` is `σ_Z(G)`; its reciprocal bounds
//! the gyrochromatic number from above, which in turn sits between the fractional and
//! the circular chromatic number. Everything here is exact: values are rationals and
//! every reported bound carries a checkable certificate.

pub mod bitset;
pub mod certs;
mod error;
pub mod graphs;
pub mod gyro;
pub mod invariants;
pub mod lp;
pub mod rational;
pub mod reproduce;

pub use error::{Error, Result};
pub use rational::Rational;
