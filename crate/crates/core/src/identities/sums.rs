//! Zero sums and the Fibonomial Vandermonde identity.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::Golden;
use crate::fibonomial::{binomial, fibonomial, neg_one_pow, sign_delta};

/// Σ_{l=0}^{k} (−1)^l C(n+l, n)·C(n+1, k−l); zero for k ≥ 1.
pub fn lemma1_classical(n: u64, k: u64) -> BigInt {
    (0..=k).fold(BigInt::zero(), |acc, l| {
        let t = binomial(n + l, n) * binomial(n + 1, k - l);
        if l % 2 == 1 {
            acc - t
        } else {
            acc + t
        }
    })
}

/// Σ_{l=0}^{k} (−1)^l C(n+l, n)_F·δ_{k−l}·C(n+1, k−l)_F; zero for k ≥ 1.
pub fn lemma2_sum(n: u64, k: u64) -> BigInt {
    (0..=k).fold(BigInt::zero(), |acc, l| {
        let t = fibonomial(n + l, n) * sign_delta(k - l) * fibonomial(n + 1, k - l);
        if l % 2 == 1 {
            acc - t
        } else {
            acc + t
        }
    })
}

/// Terms j of the Vandermonde sum that survive (k−j ≤ m, j ≤ n).
fn vandermonde_range(m: u64, n: u64, k: u64) -> impl Iterator<Item = u64> {
    k.saturating_sub(m)..=k.min(n)
}

/// Σ_j C(m, k−j)_F·C(n, j)_F·α^{n(k−j)}·β^{mj}·(−1)^{j(k−j)} evaluated in Z[α].
pub fn vandermonde_rhs(m: u64, n: u64, k: u64) -> Golden {
    let (alpha, beta) = (Golden::alpha(), Golden::beta());
    vandermonde_range(m, n, k).fold(Golden::integer(0), |acc, j| {
        let coeff = fibonomial(m, k - j) * fibonomial(n, j) * neg_one_pow(&BigInt::from(j * (k - j)));
        let term = &(&alpha.pow(n * (k - j)) * &beta.pow(m * j)) * &Golden::integer(coeff);
        &acc + &term
    })
}

/// The same sum written as Σ_j C(m, k−j)_F·C(n, j)_F·α^{(n−j)(k−j)}·β^{(m−k+j)j}.
pub fn vandermonde_rhs_exponent_form(m: u64, n: u64, k: u64) -> Golden {
    let (alpha, beta) = (Golden::alpha(), Golden::beta());
    vandermonde_range(m, n, k).fold(Golden::integer(0), |acc, j| {
        let coeff = fibonomial(m, k - j) * fibonomial(n, j);
        let term = &(&alpha.pow((n - j) * (k - j)) * &beta.pow((m + j - k) * j)) * &Golden::integer(coeff);
        &acc + &term
    })
}

/// Returns (RHS in Z[α], C(m+n, k)_F) after checking that the RHS is the rational integer C(m+n, k)_F.
pub fn fibonomial_vandermonde(m: u64, n: u64, k: u64) -> Result<(Golden, BigInt)> {
    if k > m + n {
        return Err(Error::IndexOutOfRange { n: m + n, k });
    }
    let rhs = vandermonde_rhs(m, n, k);
    let lhs = fibonomial(m + n, k);
    if rhs.as_integer() != Some(&lhs) {
        return Err(Error::Inconsistent {
            what: "Fibonomial Vandermonde",
            left: lhs.to_string(),
            right: rhs.to_string(),
        });
    }
    Ok((rhs, lhs))
}

/// Σ_{j=0}^{m} (−1)^{j(m+j)/2}·C(m, j)_F. The exponent is integral for every j only when m is odd.
pub fn alternating_sum(m: u64) -> Result<BigInt> {
    if m % 2 == 0 {
        return Err(Error::InvalidArgument(format!(
            "alternating sum needs odd m; j(m+j)/2 is fractional for m={m}, j odd"
        )));
    }
    Ok((0..=m).fold(BigInt::zero(), |acc, j| {
        acc + fibonomial(m, j) * neg_one_pow(&BigInt::from(j * (m + j) / 2))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma1_examples() {
        assert_eq!(lemma1_classical(1, 1), BigInt::zero());
        assert_eq!(lemma1_classical(3, 2), BigInt::zero());
        assert_eq!(lemma1_classical(5, 4), BigInt::zero());
        // k = 0 is the constant term 1
        assert_eq!(lemma1_classical(5, 0), BigInt::from(1));
    }

    #[test]
    fn lemma2_examples() {
        assert_eq!(lemma2_sum(4, 1), BigInt::zero());
        assert_eq!(lemma2_sum(3, 3), BigInt::zero());
        assert_eq!(lemma2_sum(6, 5), BigInt::zero());
    }

    #[test]
    fn zero_sums_over_range() {
        for n in 0..=12 {
            for k in 1..=12 {
                assert!(lemma1_classical(n, k).is_zero(), "lemma1 n={n} k={k}");
                assert!(lemma2_sum(n, k).is_zero(), "lemma2 n={n} k={k}");
            }
        }
    }

    #[test]
    fn vandermonde_examples() {
        assert_eq!(fibonomial_vandermonde(3, 4, 0).unwrap().1, BigInt::from(1));
        let (rhs, lhs) = fibonomial_vandermonde(1, 1, 1).unwrap();
        assert_eq!(rhs, Golden::integer(1));
        assert_eq!(lhs, BigInt::from(1));
        assert_eq!(fibonomial_vandermonde(3, 4, 2).unwrap().1, BigInt::from(104));
        assert!(fibonomial_vandermonde(1, 1, 3).is_err());
    }

    #[test]
    fn vandermonde_two_forms_agree() {
        for m in 0..=8 {
            for n in 0..=8 {
                for k in 0..=m + n {
                    assert!(fibonomial_vandermonde(m, n, k).is_ok(), "m={m} n={n} k={k}");
                    assert_eq!(vandermonde_rhs_exponent_form(m, n, k), vandermonde_rhs(m, n, k));
                }
            }
        }
    }

    #[test]
    fn alternating_examples() {
        assert_eq!(alternating_sum(1).unwrap(), BigInt::zero());
        assert_eq!(alternating_sum(3).unwrap(), BigInt::zero());
        assert_eq!(alternating_sum(7).unwrap(), BigInt::zero());
        assert!(alternating_sum(4).is_err());
        for m in (1..=15).step_by(2) {
            assert!(alternating_sum(m).unwrap().is_zero());
        }
    }
}
