//! Generating functions, continued fractions, and the frame equivalences
//! tying series inverses to Hessenberg determinants.

pub mod cf;
pub mod frame;
pub mod genfn;

pub use cf::{cf_column_variant, cf_eval, cf_row_variant, CFSpec, CfLevel};
pub use frame::{frame_check, FrameOutcome, FrameSpec};
pub use genfn::{ab_inverse_pair, column_target, gf_signed_row, qbinomial_theorem_check, row_target};
