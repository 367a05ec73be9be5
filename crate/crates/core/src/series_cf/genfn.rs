//! Generating functions in Z[α]: the signed Fibonomial row, the inverse pair
//! A(z)·B(z) = 1, and the two q-binomial theorems behind them.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{FactorSign, Golden, Ring, TruncSeries};
use crate::fibonomial::{fibonomial, gaussian_binomial_at, sign_delta};
use crate::verify::Verdict;

/// α^{e−j}·β^j for j = 0..=e.
fn spread(e: u64) -> Vec<Golden> {
    let (alpha, beta) = (Golden::alpha(), Golden::beta());
    (0..=e).map(|j| &alpha.pow(e - j) * &beta.pow(j)).collect()
}

fn integral(s: &TruncSeries<Golden>) -> Result<TruncSeries<BigInt>> {
    s.try_map(|c| c.as_integer().cloned().ok_or_else(|| Error::NonIntegral(c.to_string())))
}

fn expect_coeffs(what: &'static str, got: &TruncSeries<BigInt>, want: impl Fn(u64) -> BigInt) -> Result<()> {
    for (i, c) in got.coeffs().iter().enumerate() {
        let w = want(i as u64);
        if *c != w {
            return Err(Error::Inconsistent {
                what,
                left: format!("coefficient {i} = {c}"),
                right: w.to_string(),
            });
        }
    }
    Ok(())
}

/// ∏_{j=0}^{n−1} (1 + α^{n−1−j}β^j z) to the given order; coefficient k is δ_k·C(n, k)_F.
pub fn gf_signed_row(n: u64, order: usize) -> Result<TruncSeries<BigInt>> {
    let factors = if n == 0 { Vec::new() } else { spread(n - 1) };
    let row = integral(&TruncSeries::geom_product(&factors, FactorSign::Direct, order))?;
    expect_coeffs("signed row", &row, |k| fibonomial(n, k) * sign_delta(k))?;
    Ok(row)
}

/// A(z) = ∏_{j=0}^{n} (1 + α^{n−j}β^j z)^{-1} and B(z) = ∏_{j=0}^{n} (1 + α^{n−j}β^j z).
/// Checks A·B = 1 and that A has coefficients (−1)^l·C(n+l, n)_F.
pub fn ab_inverse_pair(n: u64, order: usize) -> Result<(TruncSeries<BigInt>, TruncSeries<BigInt>)> {
    let factors = spread(n);
    let a = TruncSeries::geom_product(&factors, FactorSign::Reciprocal, order);
    let b = TruncSeries::geom_product(&factors, FactorSign::Direct, order);
    let product = a.mul(&b)?;
    if !product.is_one() {
        return Err(Error::Inconsistent {
            what: "A(z)B(z)",
            left: product.to_string(),
            right: "1".into(),
        });
    }
    let (a, b) = (integral(&a)?, integral(&b)?);
    expect_coeffs("A(z)", &a, |l| {
        let v = fibonomial(n + l, n);
        if l % 2 == 1 {
            -v
        } else {
            v
        }
    })?;
    Ok((a, b))
}

/// Checks, at q = α − 2 and with x = −α^n z resp. x = α^n z,
///
/// ∏_{j<N} (1 − x q^j)^{-1} = Σ_k [N+k−1, k]_q x^k  and
/// ∏_{j<N} (1 + x q^j) = Σ_m q^{C(m,2)} [N, m]_q x^m,
///
/// both mod z^{order+1}.
pub fn qbinomial_theorem_check(big_n: u64, n: u64, order: usize) -> Result<Verdict> {
    let q = Golden::q();
    let scale = Golden::alpha().pow(n);
    let q_pows: Vec<Golden> = (0..big_n).map(|j| q.pow(j)).collect();

    // x = −α^n z turns (1 − x q^j) into (1 + α^n q^j z)
    let x_neg = scale.neg_ref();
    let factors: Vec<Golden> = q_pows.iter().map(|p| &scale * p).collect();
    let lhs_geom = TruncSeries::geom_product(&factors, FactorSign::Reciprocal, order);
    let rhs_geom = TruncSeries::new(
        order,
        (0..=order as u64)
            .map(|k| {
                if big_n == 0 {
                    return if k == 0 { Golden::one() } else { Golden::zero() };
                }
                let g = gaussian_binomial_at(big_n + k - 1, k, &q).expect("k ≤ N+k−1");
                &g * &x_neg.pow(k)
            })
            .collect(),
    );

    let lhs_prod = TruncSeries::geom_product(&factors, FactorSign::Direct, order);
    let rhs_prod = TruncSeries::new(
        order,
        (0..=order as u64)
            .map(|m| {
                if m > big_n {
                    return Golden::zero();
                }
                let g = gaussian_binomial_at(big_n, m, &q).expect("m ≤ N");
                &(&q.pow(m * m.saturating_sub(1) / 2) * &g) * &scale.pow(m)
            })
            .collect(),
    );

    let passed = lhs_geom == rhs_geom && lhs_prod == rhs_prod;
    Ok(Verdict::new(
        format!("{lhs_geom}; {lhs_prod}"),
        format!("{rhs_geom}; {rhs_prod}"),
        passed,
    ))
}

/// Σ_k (−1)^{C(k+1,2)}·C(n+1, k)_F·x^k, the row polynomial matched by the row continued fraction.
pub fn row_target(n: u64, order: usize) -> TruncSeries<BigInt> {
    TruncSeries::new(
        order,
        (0..=order as u64)
            .map(|k| fibonomial(n + 1, k) * sign_delta(k + 1))
            .collect(),
    )
}

/// Σ_k C(n+k, k)_F·x^k.
pub fn column_target(n: u64, order: usize) -> TruncSeries<BigInt> {
    TruncSeries::new(order, (0..=order as u64).map(|k| fibonomial(n + k, k)).collect())
}
