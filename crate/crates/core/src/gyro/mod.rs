//! Coloring bases over finite abelian groups: verification, exact `σ_Z` search,
//! certificate constructions and gyrochromatic bounds.

mod bounds;
mod certificate;
mod constructions;
mod sample;
mod search;

pub use bounds::{
    bounds, gyro_lower_bound, gyro_upper_bound, BoundsOptions, BoundsReport, LowerBound,
    LowerProvenance, UpperBound, UpperSource,
};
pub use certificate::{verify_base, BaseCertificate, ValidityReport, Violation};
pub use constructions::{
    base_from_circular_coloring, base_from_independent_set, crt_inflate, crt_window_primes,
    expand_modulus, kneser_characteristic_hom, lift_base_to_product,
};
pub use sample::random_valid_base;
pub use search::{sigma_group_exact, DensityCap, SigmaOptions, SigmaResult};
