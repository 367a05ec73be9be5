//! Trudi's expansion of Toeplitz–Hessenberg determinants as multinomial sums,
//! and the two Fibonomial sums it yields.

use num_bigint::BigInt;
use num_traits::Zero;

use super::partitions::weighted_partitions;
use crate::error::{Error, Result};
use crate::exact::Ring;
use crate::fibonomial::{fibonomial, neg_one_pow};

/// Σ over t_1 + 2t_2 + … + n·t_n = n of
/// multinomial(t)·(−a_0)^{n−Σt}·a_1^{t_1}⋯a_n^{t_n}.
///
/// This equals the n×n Toeplitz–Hessenberg determinant with first column
/// a_1..a_n and superdiagonal a_0.
pub fn trudi_eval<R: Ring>(a0: &R, a: &[R], n: usize) -> Result<R> {
    if a.len() < n {
        return Err(Error::InvalidArgument(format!("need {n} terms, got {}", a.len())));
    }
    let minus_a0 = a0.neg_ref();
    let mut total = R::zero();
    for p in weighted_partitions(n as u64) {
        let mut term = R::from_int(&p.multinomial());
        term = term.mul_ref(&minus_a0.power(n as u64 - p.parts()));
        for (j, t) in p.nonzero() {
            term = term.mul_ref(&a[j - 1].power(t));
        }
        total = total.add_ref(&term);
    }
    Ok(total)
}

/// Which index multiplies the leading sign in the Fibonomial Trudi sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrudiExponent {
    /// Determinant order k; agrees with the determinant identities.
    Order,
    /// The upper Fibonomial index n in place of the order k.
    Printed,
}

impl TrudiExponent {
    fn lead(self, n: u64, k: u64) -> BigInt {
        match self {
            TrudiExponent::Order => BigInt::from(k),
            TrudiExponent::Printed => BigInt::from(n),
        }
    }
}

/// Σ_t multinomial(t)·(−1)^{C(k,2)+e−Σt}·∏_l C(n+l, n)_F^{t_l}; with e = k this is C(n+1, k)_F.
pub fn th5_sum_with(n: u64, k: u64, exponent: TrudiExponent) -> BigInt {
    let mut total = BigInt::zero();
    for p in weighted_partitions(k) {
        let e = BigInt::from(k * k.saturating_sub(1) / 2) + exponent.lead(n, k) - p.parts();
        let mut term = p.multinomial() * neg_one_pow(&e);
        for (l, t) in p.nonzero() {
            term *= fibonomial(n + l as u64, n).pow(t as u32);
        }
        total += term;
    }
    total
}

pub fn th5_sum(n: u64, k: u64) -> BigInt {
    th5_sum_with(n, k, TrudiExponent::Order)
}

/// Σ_t multinomial(t)·(−1)^{e+Σ_l (l+1)(l−2)/2·t_l}·∏_l C(n+1, l)_F^{t_l};
/// with e = k this is C(n+k, k)_F.
pub fn tha5_sum_with(n: u64, k: u64, exponent: TrudiExponent) -> BigInt {
    let mut total = BigInt::zero();
    for p in weighted_partitions(k) {
        let mut e = exponent.lead(n, k);
        for (l, t) in p.nonzero() {
            let l = l as i64;
            e += BigInt::from((l + 1) * (l - 2) / 2) * t;
        }
        let mut term = p.multinomial() * neg_one_pow(&e);
        for (l, t) in p.nonzero() {
            term *= fibonomial(n + 1, l as u64).pow(t as u32);
        }
        total += term;
    }
    total
}

pub fn tha5_sum(n: u64, k: u64) -> BigInt {
    tha5_sum_with(n, k, TrudiExponent::Order)
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::fibonomial::{fib, fibonomial_product};
    use crate::hessenberg::{hess_det, ToeplitzHessenberg};

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn trudi_small() {
        let a = [big(5), big(7)];
        assert_eq!(trudi_eval(&big(1), &a, 1).unwrap(), big(5));
        assert_eq!(trudi_eval(&big(1), &a, 2).unwrap(), big(25 - 7));
        assert!(trudi_eval(&big(1), &a, 3).is_err());
    }

    #[test]
    fn th5_examples() {
        assert_eq!(th5_sum(8, 1), fib(9));
        assert_eq!(th5_sum(6, 2), big(104));
        assert_eq!(th5_sum(5, 3), big(60));
    }

    #[test]
    fn tha5_examples() {
        assert_eq!(tha5_sum(5, 1), fib(6));
        assert_eq!(tha5_sum(7, 2), big(714));
        assert_eq!(tha5_sum(7, 4), big(582505));
    }

    #[test]
    fn sums_match_product_oracle() {
        for n in 0..=9u64 {
            for k in 1..=9u64 {
                assert_eq!(th5_sum(n, k), fibonomial(n + 1, k), "th5 n={n} k={k}");
                assert_eq!(tha5_sum(n, k), fibonomial_product(n + k, k).unwrap(), "tha5 n={n} k={k}");
            }
        }
    }

    #[test]
    fn printed_exponent_fails_exactly_on_parity_mismatch() {
        for n in 0..=9u64 {
            for k in 1..=9u64 {
                let same = (n + k) % 2 == 0;
                // a zero value cannot expose a sign error
                let th5 = th5_sum(n, k);
                assert_eq!(th5_sum_with(n, k, TrudiExponent::Printed) == th5, same || th5.is_zero());
                assert_eq!(tha5_sum_with(n, k, TrudiExponent::Printed) == tha5_sum(n, k), same);
            }
        }
    }

    proptest! {
        #[test]
        fn trudi_matches_determinant(a0 in -3i64..=3, a in proptest::collection::vec(-5i64..=5, 1..=8)) {
            let a: Vec<BigInt> = a.into_iter().map(BigInt::from).collect();
            let n = a.len();
            let det = hess_det(&ToeplitzHessenberg::new(a.clone(), big(a0)));
            prop_assert_eq!(trudi_eval(&big(a0), &a, n).unwrap(), det);
        }
    }
}
