//! Lower Hessenberg determinants and the Fibonomial matrices built on them.
//!
//! All determinants go through [`hess_det`], which expands along the last row:
//!
//! D_m = e(m,m)·D_{m−1} + Σ_{r<m} (−1)^{m−r}·e(m,r)·(e(r,r+1)⋯e(m−1,m))·D_{r−1},  D_0 = 1.
//!
//! The superdiagonal product is accumulated while r walks down, so a k×k
//! matrix costs O(k²) ring operations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{to_integer, Ring};
use crate::fibonomial::{binomial, fibonomial, sign_delta};
use crate::verify::Verdict;

/// Read access to a lower Hessenberg matrix (0-based indices).
pub trait Hessenberg<R> {
    fn size(&self) -> usize;
    /// Entry (i, j) for j ≤ i.
    fn entry(&self, i: usize, j: usize) -> &R;
    /// Entry (i, i+1).
    fn superdiag(&self, i: usize) -> &R;
}

/// Dense lower Hessenberg matrix; entries above the superdiagonal are zero and not stored.
#[derive(Clone, Debug, PartialEq)]
pub struct LowerHessenberg<R> {
    lower: Vec<Vec<R>>,
    superdiag: Vec<R>,
}

impl<R: Ring> LowerHessenberg<R> {
    pub fn new(lower: Vec<Vec<R>>, superdiag: Vec<R>) -> Result<Self> {
        let k = lower.len();
        if let Some((i, _)) = lower.iter().enumerate().find(|(i, row)| row.len() != i + 1) {
            return Err(Error::InvalidArgument(format!("row {i} must hold {} entries", i + 1)));
        }
        if superdiag.len() != k.saturating_sub(1) {
            return Err(Error::InvalidArgument(format!(
                "a {k}x{k} matrix needs {} superdiagonal entries",
                k.saturating_sub(1)
            )));
        }
        Ok(LowerHessenberg { lower, superdiag })
    }

    pub fn from_fn(
        k: usize,
        entry: impl Fn(usize, usize) -> R,
        superdiag: impl Fn(usize) -> R,
    ) -> Self {
        LowerHessenberg {
            lower: (0..k).map(|i| (0..=i).map(|j| entry(i, j)).collect()).collect(),
            superdiag: (0..k.saturating_sub(1)).map(superdiag).collect(),
        }
    }
}

impl<R> Hessenberg<R> for LowerHessenberg<R> {
    fn size(&self) -> usize {
        self.lower.len()
    }
    fn entry(&self, i: usize, j: usize) -> &R {
        &self.lower[i][j]
    }
    fn superdiag(&self, i: usize) -> &R {
        &self.superdiag[i]
    }
}

/// Toeplitz lower Hessenberg matrix: entry (i, j) = a_{i−j+1} for j ≤ i and a
/// constant `s` on the superdiagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct ToeplitzHessenberg<R> {
    column: Vec<R>,
    superdiag: R,
}

impl<R: Ring> ToeplitzHessenberg<R> {
    /// `column` is a_1..a_k.
    pub fn new(column: Vec<R>, superdiag: R) -> Self {
        ToeplitzHessenberg { column, superdiag }
    }

    pub fn column(&self) -> &[R] {
        &self.column
    }

    pub fn superdiag_value(&self) -> &R {
        &self.superdiag
    }
}

impl<R> Hessenberg<R> for ToeplitzHessenberg<R> {
    fn size(&self) -> usize {
        self.column.len()
    }
    fn entry(&self, i: usize, j: usize) -> &R {
        &self.column[i - j]
    }
    fn superdiag(&self, _i: usize) -> &R {
        &self.superdiag
    }
}

/// Operation counts from a determinant evaluation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DetStats {
    pub multiplications: u64,
}

pub fn hess_det<R: Ring, M: Hessenberg<R> + ?Sized>(m: &M) -> R {
    hess_det_with_stats(m).0
}

pub fn hess_det_with_stats<R: Ring, M: Hessenberg<R> + ?Sized>(m: &M) -> (R, DetStats) {
    let k = m.size();
    let mut stats = DetStats::default();
    // d[t] is the leading t×t principal minor
    let mut d: Vec<R> = Vec::with_capacity(k + 1);
    d.push(R::one());
    for row in 0..k {
        let mut acc = m.entry(row, row).mul_ref(&d[row]);
        stats.multiplications += 1;
        let mut chain = R::one();
        for col in (0..row).rev() {
            chain = chain.mul_ref(m.superdiag(col));
            let term = m.entry(row, col).mul_ref(&chain).mul_ref(&d[col]);
            stats.multiplications += 3;
            acc = if (row - col) % 2 == 1 {
                acc.sub_ref(&term)
            } else {
                acc.add_ref(&term)
            };
        }
        d.push(acc);
    }
    (d.swap_remove(k), stats)
}

fn delta_int(k: u64) -> BigInt {
    BigInt::from(sign_delta(k))
}

/// Column C(n+l, n)_F for l = 1..k with superdiagonal 1.
pub fn theorem1_matrix(n: u64, k: u64) -> ToeplitzHessenberg<BigInt> {
    let column = (1..=k).map(|l| fibonomial(n + l, n)).collect();
    ToeplitzHessenberg::new(column, BigInt::one())
}

/// δ_k·det of [`theorem1_matrix`]; equals C(n+1, k)_F.
pub fn det_theorem1(n: u64, k: u64) -> BigInt {
    delta_int(k) * hess_det(&theorem1_matrix(n, k))
}

/// Column δ_l·C(n+1, l)_F with superdiagonal 1.
pub fn tha1_matrix(n: u64, k: u64) -> ToeplitzHessenberg<BigInt> {
    let column = (1..=k).map(|l| delta_int(l) * fibonomial(n + 1, l)).collect();
    ToeplitzHessenberg::new(column, BigInt::one())
}

/// Determinant of [`tha1_matrix`]; equals C(n+k, k)_F.
pub fn det_tha1(n: u64, k: u64) -> BigInt {
    hess_det(&tha1_matrix(n, k))
}

/// Column δ_l·C(n+1, l)_F / a^{l−1} with superdiagonal `a`.
pub fn tha1_general_matrix(n: u64, k: u64, a: &BigRational) -> Result<ToeplitzHessenberg<BigRational>> {
    if a.is_zero() {
        return Err(Error::InvalidArgument("superdiagonal parameter must be nonzero".into()));
    }
    let inv = a.recip();
    let mut scale = BigRational::one();
    let mut column = Vec::with_capacity(k as usize);
    for l in 1..=k {
        column.push(BigRational::from_integer(delta_int(l) * fibonomial(n + 1, l)) * &scale);
        scale *= &inv;
    }
    Ok(ToeplitzHessenberg::new(column, a.clone()))
}

/// Determinant of [`tha1_general_matrix`], checked integral; equals C(n+k, k)_F for every a ≠ 0.
pub fn det_tha1_general(n: u64, k: u64, a: &BigRational) -> Result<BigInt> {
    to_integer(&hess_det(&tha1_general_matrix(n, k, a)?))
}

/// Column C(n+l, n) (ordinary binomials) with superdiagonal 1; equals C(n+1, k).
pub fn det_binomial_sanity(n: u64, k: u64) -> BigInt {
    let column = (1..=k).map(|l| binomial(n + l, n)).collect();
    hess_det(&ToeplitzHessenberg::new(column, BigInt::one()))
}

/// Result of checking the determinant inversion pair on a sequence.
#[derive(Clone, Debug)]
pub struct InversionOutcome {
    /// β_0..β_n, with β_m the m×m Toeplitz determinant of α_1..α_m.
    pub betas: Vec<BigRational>,
    pub verdict: Verdict,
}

/// Builds β from α by determinants, then checks the alternating convolution
/// Σ_k (−1)^{m−k} α_k β_{m−k} = 0 for 1 ≤ m ≤ n and that the determinant of
/// β_1..β_n reproduces α_n.
pub fn inversion_check(alphas: &[BigRational], n: usize) -> Result<InversionOutcome> {
    if !alphas.first().is_some_and(|a0| a0.is_one()) {
        return Err(Error::InvalidArgument("sequence must start with 1".into()));
    }
    if alphas.len() < n + 1 {
        return Err(Error::InvalidArgument(format!("need {} terms, got {}", n + 1, alphas.len())));
    }
    let toeplitz = |seq: &[BigRational], m: usize| {
        hess_det(&ToeplitzHessenberg::new(seq[1..=m].to_vec(), BigRational::one()))
    };
    let betas: Vec<BigRational> = (0..=n).map(|m| toeplitz(alphas, m)).collect();

    let mut witness = None;
    for m in 1..=n {
        let sum = (0..=m).fold(BigRational::zero(), |acc, k| {
            let t = &alphas[k] * &betas[m - k];
            if (m - k) % 2 == 1 {
                acc - t
            } else {
                acc + t
            }
        });
        if !sum.is_zero() {
            witness = Some(format!("convolution at m={m} is {sum}"));
            break;
        }
    }
    let reverse = toeplitz(&betas, n);
    let verdict = match witness {
        Some(w) => Verdict::new(w, "0".to_string(), false),
        None => Verdict::equal(&reverse, &alphas[n]),
    };
    Ok(InversionOutcome { betas, verdict })
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::exact::rat;
    use crate::fibonomial::fibonomial_product;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Leibniz expansion over all permutations.
    fn leibniz(m: &[Vec<i64>]) -> i64 {
        fn rec(m: &[Vec<i64>], row: usize, used: &mut Vec<bool>, perm: &mut Vec<usize>) -> i64 {
            let k = m.len();
            if row == k {
                let mut inv = 0;
                for i in 0..k {
                    for j in i + 1..k {
                        if perm[i] > perm[j] {
                            inv += 1;
                        }
                    }
                }
                let p: i64 = (0..k).map(|i| m[i][perm[i]]).product();
                return if inv % 2 == 0 { p } else { -p };
            }
            let mut total = 0;
            for c in 0..k {
                if !used[c] {
                    used[c] = true;
                    perm.push(c);
                    total += rec(m, row + 1, used, perm);
                    perm.pop();
                    used[c] = false;
                }
            }
            total
        }
        rec(m, 0, &mut vec![false; m.len()], &mut Vec::new())
    }

    #[test]
    fn det_examples() {
        let empty = ToeplitzHessenberg::<BigInt>::new(vec![], BigInt::one());
        assert_eq!(hess_det(&empty), BigInt::one());
        let one = ToeplitzHessenberg::new(ints(&[7]), BigInt::one());
        assert_eq!(hess_det(&one), BigInt::from(7));
        let two = ToeplitzHessenberg::new(ints(&[2, 6]), BigInt::one());
        assert_eq!(hess_det(&two), BigInt::from(-2));
    }

    #[test]
    fn dense_shape_validation() {
        assert!(LowerHessenberg::new(vec![ints(&[1]), ints(&[1, 2])], ints(&[3])).is_ok());
        assert!(LowerHessenberg::new(vec![ints(&[1]), ints(&[1])], ints(&[3])).is_err());
        assert!(LowerHessenberg::new(vec![ints(&[1])], ints(&[3])).is_err());
    }

    #[test]
    fn theorem1_examples() {
        assert_eq!(det_theorem1(9, 1), crate::fibonomial::fib(10));
        assert_eq!(det_theorem1(2, 2), BigInt::from(2));
        assert_eq!(det_theorem1(6, 2), BigInt::from(104));
    }

    #[test]
    fn tha1_examples() {
        assert_eq!(det_tha1(4, 1), crate::fibonomial::fib(5));
        assert_eq!(det_tha1(7, 2), BigInt::from(714));
        assert_eq!(det_tha1(7, 4), BigInt::from(582505));
    }

    #[test]
    fn tha1_general_examples() {
        assert_eq!(det_tha1_general(7, 2, &rat(1, 1)).unwrap(), BigInt::from(714));
        let m = tha1_general_matrix(3, 3, &rat(-1, 1)).unwrap();
        assert_eq!(m.column(), &[rat(3, 1), rat(6, 1), rat(-3, 1)]);
        assert_eq!(m.superdiag_value(), &rat(-1, 1));
        assert_eq!(det_tha1_general(3, 3, &rat(-1, 1)).unwrap(), BigInt::from(60));
        assert_eq!(det_tha1_general(2, 3, &rat(5, 1)).unwrap(), BigInt::from(15));
        assert!(det_tha1_general(2, 3, &rat(0, 1)).is_err());
    }

    #[test]
    fn band_at_minus_one() {
        let m = tha1_general_matrix(3, 8, &rat(-1, 1)).unwrap();
        let expected: Vec<BigRational> =
            [3, 6, -3, -1, 0, 0, 0, 0].iter().map(|&v| rat(v, 1)).collect();
        assert_eq!(m.column(), expected.as_slice());
    }

    #[test]
    fn binomial_sanity_examples() {
        assert_eq!(det_binomial_sanity(1, 1), BigInt::from(2));
        assert_eq!(det_binomial_sanity(2, 2), BigInt::from(3));
        assert_eq!(det_binomial_sanity(4, 3), BigInt::from(10));
    }

    #[test]
    fn theorem1_matches_product_oracle() {
        for m in 1..=13u64 {
            let n = m - 1;
            for k in 1..=m {
                assert_eq!(det_theorem1(n, k), fibonomial_product(n + 1, k).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn tha1_matches_product_oracle() {
        for n in 0..=12u64 {
            for k in 1..=12u64 {
                assert_eq!(det_tha1(n, k), fibonomial_product(n + k, k).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn tha1_general_independent_of_parameter() {
        let params = [rat(1, 1), rat(-1, 1), rat(2, 1), rat(1, 3), rat(-7, 2)];
        for n in 0..=10u64 {
            for k in 1..=10u64 {
                let base = det_tha1(n, k);
                for a in &params {
                    assert_eq!(det_tha1_general(n, k, a).unwrap(), base);
                }
            }
        }
    }

    #[test]
    fn inversion_examples() {
        let constant: Vec<BigRational> = [1, 1, 0, 0, 0, 0].iter().map(|&v| rat(v, 1)).collect();
        let out = inversion_check(&constant, 5).unwrap();
        assert!(out.verdict.passed());
        assert!(out.betas.iter().all(|b| b.is_one()));

        let powers: Vec<BigRational> = [1, 2, 4, 8].iter().map(|&v| rat(v, 1)).collect();
        let out = inversion_check(&powers, 3).unwrap();
        assert_eq!(out.betas, vec![rat(1, 1), rat(2, 1), rat(0, 1), rat(0, 1)]);
        assert!(out.verdict.passed());

        let n = 3;
        let fibo: Vec<BigRational> =
            (0..=5).map(|l| BigRational::from_integer(fibonomial(n + l, n))).collect();
        let out = inversion_check(&fibo, 5).unwrap();
        for (m, b) in out.betas.iter().enumerate() {
            let m = m as u64;
            assert_eq!(*b, BigRational::from_integer(delta_int(m) * fibonomial(n + 1, m)));
        }
        assert!(out.verdict.passed());
    }

    #[test]
    fn inversion_rejects_bad_sequences() {
        assert!(inversion_check(&[rat(2, 1), rat(1, 1)], 1).is_err());
        assert!(inversion_check(&[rat(1, 1)], 3).is_err());
    }

    #[test]
    fn stats_count_is_quadratic() {
        let k = 50;
        let m = ToeplitzHessenberg::new((1..=k).map(BigInt::from).collect(), BigInt::one());
        let (_, stats) = hess_det_with_stats(&m);
        assert!(stats.multiplications <= 3 * (k * k) as u64);
    }

    proptest! {
        #[test]
        fn dense_matches_leibniz(k in 0usize..=7, seed in proptest::collection::vec(-4i64..=4, 64)) {
            let mut it = seed.into_iter().cycle();
            let lower: Vec<Vec<i64>> = (0..k).map(|i| (0..=i).map(|_| it.next().unwrap()).collect()).collect();
            let sup: Vec<i64> = (0..k.saturating_sub(1)).map(|_| it.next().unwrap()).collect();
            let mut full = vec![vec![0i64; k]; k];
            for i in 0..k {
                for j in 0..=i {
                    full[i][j] = lower[i][j];
                }
                if i + 1 < k {
                    full[i][i + 1] = sup[i];
                }
            }
            let m = LowerHessenberg::new(
                lower.iter().map(|r| ints(r)).collect(),
                ints(&sup),
            ).unwrap();
            prop_assert_eq!(hess_det(&m), BigInt::from(leibniz(&full)));
        }
    }
}
