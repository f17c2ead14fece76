//! Exact classical invariants: α, ω, χ, χ_f and χ_c, with witnesses.

mod chromatic;
mod circular;
mod fractional;
mod independent;

pub use chromatic::{chromatic_number, greedy_colouring, Colouring};
pub use circular::{
    circular_chromatic, circular_chromatic_budgeted, CircularBound, CircularColouring,
};
pub use fractional::{fractional_chromatic, FractionalMethod, FractionalWitness};
pub use independent::{
    clique_number, enumerate_maximal_independent_sets, enumerate_maximum_independent_sets,
    independence_number, maximum_clique,
};
