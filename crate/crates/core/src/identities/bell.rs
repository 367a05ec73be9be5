//! Complete exponential Bell polynomials and the Fibonomial/power-sum
//! determinants derived from them.
//!
//! With X_j = α^{n−1−j}β^j, the row ∏(1 + X_j z) has coefficients
//! δ_k·C(n,k)_F, and its power sums are s_{n,r} = F_{rn}/F_r. Newton's
//! identities in Bell-polynomial and determinant form then move between the
//! two sequences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::partitions::weighted_partitions;
use crate::error::{Error, Result};
use crate::exact::Ring;
use crate::fibonomial::{binomial, factorial, fibonomial, fibonomial_product, power_sum, sign_delta, SignRule};
use crate::hessenberg::{hess_det, LowerHessenberg};
use crate::verify::Verdict;

/// Arguments x_1..x_n of Y_n.
#[derive(Clone, Debug, PartialEq)]
pub struct BellArgs<R>(pub Vec<R>);

/// Y_n as Σ over weighted partitions of n!/∏(t_j!·(j!)^{t_j})·∏ x_j^{t_j}.
pub fn bell_partition_sum<R: Ring>(x: &[R]) -> R {
    let n = x.len() as u64;
    let mut total = R::zero();
    for p in weighted_partitions(n) {
        let mut denom = BigInt::one();
        for (j, t) in p.nonzero() {
            denom *= factorial(t) * factorial(j as u64).pow(t as u32);
        }
        let mut term = R::from_int(&(factorial(n) / denom));
        for (j, t) in p.nonzero() {
            term = term.mul_ref(&x[j - 1].power(t));
        }
        total = total.add_ref(&term);
    }
    total
}

/// Y_0..Y_n via Y_{m+1} = Σ_{i=0}^{m} C(m, i)·Y_{m−i}·x_{i+1}.
pub fn bell_recurrence<R: Ring>(x: &[R]) -> Vec<R> {
    let mut y = vec![R::one()];
    for m in 0..x.len() {
        let next = (0..=m).fold(R::zero(), |acc, i| {
            acc.add_ref(&y[m - i].mul_ref(&x[i]).scale(&binomial(m as u64, i as u64)))
        });
        y.push(next);
    }
    y
}

/// Y_n(x_1..x_n) computed by the partition sum and the recurrence, which must agree.
pub fn bell_complete<R: Ring>(args: &BellArgs<R>) -> Result<R> {
    let by_sum = bell_partition_sum(&args.0);
    let by_rec = bell_recurrence(&args.0).pop().expect("Y_0 always present");
    if by_sum != by_rec {
        return Err(Error::Inconsistent {
            what: "Bell polynomial",
            left: by_sum.to_string(),
            right: by_rec.to_string(),
        });
    }
    Ok(by_sum)
}

/// x_m = (−1)^{m−1}(m−1)!·a_m, the argument transform taking power sums to
/// elementary symmetric functions.
pub fn newton_args<R: Ring>(a: &[R]) -> Vec<R> {
    a.iter()
        .enumerate()
        .map(|(i, v)| v.scale(&factorial(i as u64)).signed(if i % 2 == 0 { 1 } else { -1 }))
        .collect()
}

/// Y_k(s_{n,1}, −1!·s_{n,2}, 2!·s_{n,3}, …)/k!, stripped of its δ_k sign.
/// Checked against the product formula.
pub fn fibonom_via_bell(n: u64, k: u64) -> Result<BigInt> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    let sums = (1..=k).map(|r| power_sum(n, r)).collect::<Result<Vec<_>>>()?;
    let y = bell_complete(&BellArgs(newton_args(&sums)))?;
    let (q, rem) = y.div_rem(&factorial(k));
    if !rem.is_zero() {
        return Err(Error::NonIntegral(format!("{y}/{k}!")));
    }
    let value = q * sign_delta(k);
    let oracle = fibonomial_product(n, k)?;
    if value != oracle {
        return Err(Error::Inconsistent {
            what: "Bell route",
            left: value.to_string(),
            right: oracle.to_string(),
        });
    }
    Ok(value)
}

/// k×k matrix with first column a_1..a_k (Toeplitz below the diagonal) and
/// superdiagonal 1, 2, …, k−1.
fn graded_matrix<R: Ring>(a: &[R]) -> LowerHessenberg<R> {
    LowerHessenberg::from_fn(a.len(), |i, j| a[i - j].clone(), |i| R::from_i64(i as i64 + 1))
}

fn power_sums(n: u64, k: u64) -> Result<Vec<BigInt>> {
    (1..=k).map(|r| power_sum(n, r)).collect()
}

/// C(n,k)_F = δ_k·det(graded matrix of s_{n,1..k})/k!.
///
/// The sign sits in front of the determinant: no entrywise sign pattern on
/// the s_{n,j} column reproduces δ_k for all k, since the all-diagonal term
/// would need ε_1^k = δ_k.
pub fn bell_det_fibonom(n: u64, k: u64) -> Result<BigInt> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    let det = hess_det(&graded_matrix(&power_sums(n, k)?));
    let (q, rem) = det.div_rem(&factorial(k));
    if !rem.is_zero() {
        return Err(Error::NonIntegral(format!("{det}/{k}!")));
    }
    Ok(q * sign_delta(k))
}

/// det/k! of the graded matrix whose column is s_{n,1}, ε_2·s_{n,2}, …, ε_k·s_{n,k}
/// with ε from `rule` and no leading sign.
pub fn bell_det_fibonom_entrywise(n: u64, k: u64, rule: SignRule) -> Result<BigRational> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    let column: Vec<BigRational> = power_sums(n, k)?
        .into_iter()
        .enumerate()
        .map(|(i, s)| {
            let sign = if i == 0 { 1 } else { rule.at(i as u64 + 1) };
            BigRational::from_integer(s * sign)
        })
        .collect();
    Ok(hess_det(&graded_matrix(&column)) / BigRational::from_integer(factorial(k)))
}

/// s_{n,k} as the determinant with first column j·δ_j·C(n,j)_F, remaining
/// Toeplitz entries δ_j·C(n,j)_F, and superdiagonal 1.
pub fn powersum_det(n: u64, k: u64) -> Result<BigInt> {
    powersum_det_with(n, k, SignRule::Delta)
}

pub fn powersum_det_with(n: u64, k: u64, rule: SignRule) -> Result<BigInt> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    let b: Vec<BigInt> = (1..=k).map(|j| fibonomial(n, j) * rule.at(j)).collect();
    let m = LowerHessenberg::from_fn(
        k as usize,
        |i, j| {
            if j == 0 {
                &b[i] * (i as i64 + 1)
            } else {
                b[i - j].clone()
            }
        },
        |_| BigInt::one(),
    );
    Ok(hess_det(&m))
}

/// Newton's identities in both directions on an arbitrary sequence a_1..a_n.
///
/// b_m is computed from the Bell polynomial, from the graded determinant, and
/// from m·b_m = Σ (−1)^{i−1} a_i b_{m−i}; then a_m is recovered from the b's by
/// the weighted determinant and by a_m = Σ_{j<m} (−1)^{j−1} b_j a_{m−j} + (−1)^{m+1} m b_m.
pub fn gtrudi_roundtrip(a: &[BigRational], n: usize) -> Result<Verdict> {
    if a.len() < n {
        return Err(Error::InvalidArgument(format!("need {n} terms, got {}", a.len())));
    }
    let a = &a[..n];
    let mut b = vec![BigRational::one()];
    for m in 1..=n {
        let m_fact = BigRational::from_integer(factorial(m as u64));
        let via_bell = bell_partition_sum(&newton_args(&a[..m])) / &m_fact;
        let via_det = hess_det(&graded_matrix(&a[..m])) / &m_fact;
        let via_rec = (1..=m).fold(BigRational::zero(), |acc, i| {
            acc + (&a[i - 1] * &b[m - i]).signed(if i % 2 == 1 { 1 } else { -1 })
        }) / BigRational::from_integer(m.into());
        if via_bell != via_det || via_det != via_rec {
            return Ok(Verdict::new(
                format!("b_{m}: bell={via_bell} det={via_det}"),
                format!("recurrence={via_rec}"),
                false,
            ));
        }
        b.push(via_rec);
    }
    for m in 1..=n {
        let weighted = LowerHessenberg::from_fn(
            m,
            |i, j| {
                if j == 0 {
                    &b[i + 1] * BigRational::from_integer((i + 1).into())
                } else {
                    b[i - j + 1].clone()
                }
            },
            |_| BigRational::one(),
        );
        let via_det = hess_det(&weighted);
        let mut via_rec = (1..m).fold(BigRational::zero(), |acc, j| {
            acc + (&b[j] * &a[m - j - 1]).signed(if j % 2 == 1 { 1 } else { -1 })
        });
        via_rec += (&b[m] * BigRational::from_integer(m.into())).signed(if m % 2 == 1 { 1 } else { -1 });
        if via_det != a[m - 1] || via_rec != a[m - 1] {
            return Ok(Verdict::new(
                format!("a_{m}: det={via_det} recurrence={via_rec}"),
                a[m - 1].to_string(),
                false,
            ));
        }
    }
    let show = |v: &[BigRational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    Ok(Verdict::new(show(&b[1..]), show(a), true))
}
