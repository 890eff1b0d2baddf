//! Exact-arithmetic computation of ordinary Hurwitz numbers h_{g,1^d} and of
//! Hurwitz-Severi numbers for plane-curve triples (g, d, l).
//!
//! Everything is computed over exact big integers and rationals; there is no
//! floating point anywhere in the mathematical core. Hurwitz numbers come
//! from three independent engines (direct tuple enumeration, the Frobenius
//! character sum, and a cut-and-join walk on the class algebra) that are
//! cross-checked against each other.

pub mod arith;
pub mod characters;
pub mod hurwitz;
pub mod partitions;
pub mod severi;
pub mod verify;

#[cfg(test)]
pub(crate) mod testutil;

pub use hurwitz::{
    brute_force_count, brute_force_count_capped, brute_force_feasible, connected_count,
    cut_and_join_walk, disconnected_count, hurwitz_all_engines, hurwitz_simple,
    hurwitz_simple_capped, pair_count, walk_identity_series, ClassVector, HurwitzError,
    HurwitzQuery, Method, TupleCount, DEFAULT_BRUTE_CAP,
};
pub use partitions::{count_partitions, partitions_of, Partition};
pub use severi::{
    classify, dims, hs_number, is_nonempty, node_count, Classification, Dims, EngineProvider,
    HsValue, HurwitzProvider, Kind, SeveriError, SeveriTriple,
};
