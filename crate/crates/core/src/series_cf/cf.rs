//! Finite continued fractions t_0 − ν_1x/(1 + μ_1x − ν_2x/(1 + μ_2x − ⋯)) and the
//! two Fibonomial expansions.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::error::Result;
use crate::exact::{Ring, TruncSeries};
use crate::fibonomial::fib;

/// One level: partial numerator ν·x over partial denominator 1 + μ·x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfLevel {
    pub numerator: BigRational,
    pub slope: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFSpec {
    pub initial: BigRational,
    pub levels: Vec<CfLevel>,
}

impl CFSpec {
    /// Levels with ν_j = μ_j = ratios[j−1], the shape produced from a Hessenberg frame.
    pub fn uniform(initial: BigRational, ratios: impl IntoIterator<Item = BigRational>) -> Self {
        CFSpec {
            initial,
            levels: ratios
                .into_iter()
                .map(|r| CfLevel {
                    numerator: r.clone(),
                    slope: r,
                })
                .collect(),
        }
    }
}

impl fmt::Display for CFSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.initial)?;
        for (j, l) in self.levels.iter().enumerate() {
            write!(f, "; level {}: nu={} mu={}", j + 1, l.numerator, l.slope)?;
        }
        Ok(())
    }
}

/// Expands the fraction bottom-up as a (numerator, denominator) series pair.
///
/// Below level j the tail is T = N/D; level j replaces it by
/// ν_j x·D / ((1 + μ_j x)·D − N). The result is t_0 − N·D^{-1}.
pub fn cf_eval(spec: &CFSpec, order: usize) -> Result<TruncSeries<BigRational>> {
    let mut num = TruncSeries::zero(order);
    let mut den = TruncSeries::one(order);
    for level in spec.levels.iter().rev() {
        let linear = TruncSeries::new(order, vec![BigRational::one(), level.slope.clone()]);
        let next_den = linear.mul(&den)?.sub(&num)?;
        num = den.shift_up().scale(&level.numerator);
        den = next_den;
    }
    let tail = num.mul(&den.inverse()?)?;
    TruncSeries::new(order, vec![spec.initial.clone()]).sub(&tail)
}

fn fib_ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(fib(num), fib(den))
}

/// n+1 levels with ν_j = μ_j = F_{n+j}/F_j. Mod x^{n+2} this expands to
/// Σ_k (−1)^{C(k+1,2)}·C(n+1, k)_F·x^k.
pub fn cf_row_variant(n: u64) -> CFSpec {
    CFSpec::uniform(BigRational::one(), (1..=n + 1).map(|j| fib_ratio(n + j, j)))
}

/// n+1 levels with ν_j = μ_j = (−1)^j·F_{n+2−j}/F_j. This expands to
/// Σ_k C(n+k, k)_F·x^k.
///
/// The levels come from the ratio of consecutive entries δ_{j}C(n+1, j)_F,
/// namely (−1)^{j−1}F_{n−j+2}/F_j, with x replaced by −x.
pub fn cf_column_variant(n: u64) -> CFSpec {
    CFSpec::uniform(
        BigRational::one(),
        (1..=n + 1).map(|j| fib_ratio(n + 2 - j, j).signed(if j % 2 == 0 { 1 } else { -1 })),
    )
}
