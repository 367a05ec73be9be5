//! Exact arithmetic substrate: the ring abstraction, Z[α], and truncated series.

mod golden;
mod ring;
mod series;

pub use golden::Golden;
pub use ring::Ring;
pub use series::{FactorSign, TruncSeries};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Returns the integer value of a rational, or `NonIntegral`.
pub fn to_integer(r: &BigRational) -> crate::Result<BigInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(crate::Error::NonIntegral(r.to_string()))
    }
}
