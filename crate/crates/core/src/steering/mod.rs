//! Temporal-steering assemblages and the witness built on their steerable weight.

mod assemblage;
mod measurement;
mod witness;

pub use assemblage::{
    encode_and_evolve, reduce_assemblage, steering_weight_solution, temporal_steerable_weight,
    temporal_steerable_weight_with, tsw_unitary_invariance_check, Assemblage, ASSEMBLAGE_TOL,
};
pub use measurement::MeasurementSet;
pub use witness::{
    encoded_weight, minus_t3, minus_t3_with, witness_from_assemblage, TotalWeightMode, WitnessOptions,
    WitnessRecord,
};
