use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::fibonomial::{fibonomial_product, fibonomial_recurrence, fibonomial_via_bridge};
use crate::hessenberg::{det_tha1, det_theorem1};
use crate::identities::{bell_det_fibonom, th5_sum};

/// Independent routes to C(n,k)_F.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Product,
    Recurrence,
    /// Determinant with column C(n−1+l, n−1)_F.
    Hessenberg,
    /// Determinant with column δ_l·C(n−k+1, l)_F.
    Tha1,
    /// α-power times the Gaussian binomial in Z[α].
    Bridge,
    /// Weighted-partition expansion of the `Hessenberg` determinant.
    Trudi,
    /// Graded determinant of power sums.
    Bell,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Product,
        Method::Recurrence,
        Method::Hessenberg,
        Method::Tha1,
        Method::Bridge,
        Method::Trudi,
        Method::Bell,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Product => "product",
            Method::Recurrence => "recurrence",
            Method::Hessenberg => "hessenberg",
            Method::Tha1 => "tha1",
            Method::Bridge => "bridge",
            Method::Trudi => "trudi",
            Method::Bell => "bell",
        }
    }

    pub fn evaluate(self, n: u64, k: u64) -> Result<BigInt> {
        if k > n {
            return Err(Error::IndexOutOfRange { n, k });
        }
        Ok(match self {
            Method::Product => fibonomial_product(n, k)?,
            Method::Recurrence => fibonomial_recurrence(n, k)?,
            Method::Hessenberg if n == 0 => BigInt::one(),
            Method::Hessenberg => det_theorem1(n - 1, k),
            Method::Tha1 => det_tha1(n - k, k),
            Method::Bridge => fibonomial_via_bridge(n, k)?,
            Method::Trudi if k == 0 => BigInt::one(),
            Method::Trudi => th5_sum(n - 1, k),
            Method::Bell => bell_det_fibonom(n, k)?,
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown method `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_methods_agree_through_12() {
        for n in 0..=12u64 {
            for k in 0..=n {
                let want = fibonomial_product(n, k).unwrap();
                for m in Method::ALL {
                    assert_eq!(m.evaluate(n, k).unwrap(), want, "{m} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn examples_and_errors() {
        assert_eq!(Method::Bridge.evaluate(10, 3).unwrap(), BigInt::from(19635));
        assert_eq!(Method::Trudi.evaluate(7, 3).unwrap(), BigInt::from(260));
        assert!(Method::Product.evaluate(3, 4).is_err());
        assert_eq!("tha1".parse::<Method>().unwrap(), Method::Tha1);
        assert!("nope".parse::<Method>().is_err());
    }
}
