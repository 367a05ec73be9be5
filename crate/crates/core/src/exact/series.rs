use std::fmt;

use crate::error::{Error, Result};

use num_traits::Zero;

use super::Ring;

/// Power series c_0 + c_1 x + … + c_N x^N, with all arithmetic taken mod x^{N+1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries<R> {
    coeffs: Vec<R>,
}

/// Whether [`TruncSeries::geom_product`] multiplies the linear factors or their reciprocals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorSign {
    /// ∏ (1 + γ_j z)
    Direct,
    /// ∏ (1 + γ_j z)^{-1}
    Reciprocal,
}

impl<R: Ring> TruncSeries<R> {
    /// Builds a series of order `order`; missing coefficients are zero and
    /// terms beyond x^order are dropped.
    pub fn new(order: usize, mut coeffs: Vec<R>) -> Self {
        coeffs.resize(order + 1, R::zero());
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![R::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &R {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == R::one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add_ref(b)).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub_ref(b)).collect(),
        })
    }

    pub fn scale(&self, c: &R) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Multiplies by x, dropping the top coefficient.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(R::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        TruncSeries { coeffs }
    }

    /// The substitution x ↦ c·x.
    pub fn dilate(&self, c: &R) -> Self {
        let mut p = R::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let v = a.mul_ref(&p);
                p = p.mul_ref(c);
                v
            })
            .collect();
        TruncSeries { coeffs }
    }

    /// Reciprocal g with f·g ≡ 1, via g_m = −c_0^{-1} Σ_{i=1}^{m} c_i g_{m−i}.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_inv().ok_or(Error::NotInvertible)?;
        let n = self.order();
        let mut g: Vec<R> = Vec::with_capacity(n + 1);
        g.push(inv0.clone());
        for m in 1..=n {
            let mut acc = R::zero();
            for i in 1..=m {
                if !self.coeffs[i].is_zero() {
                    acc = acc.add_ref(&self.coeffs[i].mul_ref(&g[m - i]));
                }
            }
            g.push(acc.mul_ref(&inv0).neg_ref());
        }
        Ok(TruncSeries { coeffs: g })
    }

    /// ∏_j (1 + γ_j z)^{±1} truncated to `order`. Reciprocal factors are
    /// expanded geometrically as Σ (−γ_j)^i z^i before multiplying.
    pub fn geom_product(factors: &[R], sign: FactorSign, order: usize) -> Self {
        let mut acc = Self::one(order);
        for gamma in factors {
            let factor = match sign {
                FactorSign::Direct => Self::new(order, vec![R::one(), gamma.clone()]),
                FactorSign::Reciprocal => {
                    let ratio = gamma.neg_ref();
                    let mut p = R::one();
                    let coeffs = (0..=order)
                        .map(|_| {
                            let v = p.clone();
                            p = p.mul_ref(&ratio);
                            v
                        })
                        .collect();
                    TruncSeries { coeffs }
                }
            };
            acc = acc.mul(&factor).expect("orders match by construction");
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncSeries<S> {
        TruncSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<TruncSeries<S>> {
        Ok(TruncSeries {
            coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()?,
        })
    }
}

impl<R: Ring> fmt::Display for TruncSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] + O(x^{})", parts.join(", "), self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_rational::BigRational;

    use super::*;
    use crate::exact::Golden;

    fn ints(order: usize, v: &[i64]) -> TruncSeries<BigInt> {
        TruncSeries::new(order, v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn mul_examples() {
        assert_eq!(ints(2, &[1, 1]).mul(&ints(2, &[1, -1])).unwrap(), ints(2, &[1, 0, -1]));
        assert_eq!(ints(1, &[1, 2]).mul(&ints(1, &[1, 3])).unwrap(), ints(1, &[1, 5]));
    }

    #[test]
    fn mul_rejects_order_mismatch() {
        let err = ints(2, &[1]).mul(&ints(3, &[1])).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 2, right: 3 });
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(ints(4, &[1, -1]).inverse().unwrap(), ints(4, &[1, 1, 1, 1, 1]));
        assert_eq!(ints(3, &[1]).inverse().unwrap(), ints(3, &[1]));
        assert_eq!(ints(3, &[2, 1]).inverse(), Err(Error::NotInvertible));
        let half = TruncSeries::<BigRational>::new(2, vec![BigRational::from_integer(2.into())]);
        assert!(half.inverse().is_ok());
    }

    #[test]
    fn inverse_of_row_polynomial() {
        // 1 − 13x − 104x² + 260x³ + 260x⁴ − 104x⁵ − 13x⁶ + x⁷
        let f = ints(7, &[1, -13, -104, 260, 260, -104, -13, 1]);
        let g = f.inverse().unwrap();
        assert_eq!(g.coeffs()[..3], [BigInt::from(1), 13.into(), 273.into()]);
        assert!(f.mul(&g).unwrap().is_one());
    }

    #[test]
    fn geom_product_examples() {
        let s = TruncSeries::geom_product(&[Golden::alpha(), Golden::beta()], FactorSign::Direct, 2);
        assert_eq!(
            s.coeffs(),
            &[Golden::integer(1), Golden::integer(1), Golden::integer(-1)]
        );
        let empty = TruncSeries::<Golden>::geom_product(&[], FactorSign::Reciprocal, 3);
        assert!(empty.is_one());
    }

    #[test]
    fn geom_product_inverse_pair_cancels() {
        let factors: Vec<Golden> = (0..=2)
            .map(|j| &Golden::alpha().pow(2 - j) * &Golden::beta().pow(j))
            .collect();
        let a = TruncSeries::geom_product(&factors, FactorSign::Reciprocal, 4);
        let b = TruncSeries::geom_product(&factors, FactorSign::Direct, 4);
        assert!(a.mul(&b).unwrap().is_one());
    }

    #[test]
    fn dilate_and_shift() {
        let s = ints(3, &[1, 1, 1, 1]);
        assert_eq!(s.dilate(&BigInt::from(2)), ints(3, &[1, 2, 4, 8]));
        assert_eq!(s.shift_up(), ints(3, &[0, 1, 1, 1]));
    }
}
