//! Identity families: zero sums, the Vandermonde analogue, Trudi expansions
//! and the Bell-polynomial apparatus.

pub mod bell;
pub mod partitions;
pub mod sums;
pub mod trudi;

pub use bell::{
    bell_complete, bell_det_fibonom, bell_det_fibonom_entrywise, bell_partition_sum,
    bell_recurrence, fibonom_via_bell, gtrudi_roundtrip, newton_args, powersum_det,
    powersum_det_with, BellArgs,
};
pub use partitions::{compositions, weighted_partitions, WeightedPartition, WeightedPartitions};
pub use sums::{
    alternating_sum, fibonomial_vandermonde, lemma1_classical, lemma2_sum, vandermonde_rhs,
    vandermonde_rhs_exponent_form,
};
pub use trudi::{tha5_sum, tha5_sum_with, th5_sum, th5_sum_with, trudi_eval, TrudiExponent};
