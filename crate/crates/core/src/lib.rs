//! Partition logic, logical entropy, and exact quantum-style toy models on
//! finite sets.
//!
//! The library is organized around a finite labeled [`Universe`]. On top of it
//! sit the lattice of [`Partition`]s with their dit-set semantics
//! ([`partition`]), logical entropy and density matrices ([`entropy`]),
//! subsets-as-vectors over the two-element field ([`gf2`]), projective
//! measurement of set states ([`measure`]), product universes and
//! entanglement ([`entangle`]), set representations of finite groups
//! ([`groups`]), and scripted end-to-end experiments ([`experiments`]).
//!
//! All probabilities and entropies are exact rationals; the only
//! floating-point surface is the complex density-matrix entropy in
//! [`entropy`].

pub mod entangle;
pub mod entropy;
pub mod error;
pub mod experiments;
pub mod gf2;
pub mod groups;
pub mod measure;
pub mod partition;
mod text;
pub mod universe;

pub use error::{Error, Result};
pub use universe::Universe;

pub use partition::{
    enumerate_partitions, implication, logical_op, BoolOp, Partition, Relation,
};

/// Exact rational scalar used for all probabilities and entropies.
pub type Rat = num_rational::BigRational;

/// Builds a rational from an integer numerator and denominator.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(numer.into(), denom.into())
}

#[cfg(test)]
mod thread_safety {
    // Every value type is immutable after construction and shareable across
    // threads.
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn core_types_are_send_and_sync() {
        assert_send_sync::<crate::Universe>();
        assert_send_sync::<crate::Partition>();
        assert_send_sync::<crate::Relation>();
        assert_send_sync::<crate::entropy::ProbabilityVector>();
        assert_send_sync::<crate::entropy::SetDensityMatrix>();
        assert_send_sync::<crate::entropy::ComplexDensityMatrix>();
        assert_send_sync::<crate::gf2::BitVec>();
        assert_send_sync::<crate::gf2::BitMatrix>();
        assert_send_sync::<crate::gf2::Basis>();
        assert_send_sync::<crate::measure::Attribute>();
        assert_send_sync::<crate::measure::OutcomeDistribution>();
        assert_send_sync::<crate::entangle::ProductSubset>();
        assert_send_sync::<crate::entangle::JointDistribution>();
        assert_send_sync::<crate::groups::SetRepresentation>();
        assert_send_sync::<crate::groups::GroupTable>();
        assert_send_sync::<crate::experiments::ExperimentReport>();
    }
}
