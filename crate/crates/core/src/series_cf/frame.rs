//! The frame linking Σ f_n x^n = (Σ_j r_j x^j)^{-1}, r_j = (h_1⋯h_j)/(g_1⋯g_j),
//! to Hessenberg determinants, multinomial and composition sums, and a
//! continued fraction with levels h_j/g_j.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cf::{cf_eval, CFSpec};
use crate::error::{Error, Result};
use crate::exact::{Ring, TruncSeries};
use crate::hessenberg::{hess_det, ToeplitzHessenberg};
use crate::identities::partitions::{compositions, weighted_partitions};
use crate::verify::Verdict;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameSpec {
    g: Vec<BigRational>,
    h: Vec<BigRational>,
}

impl FrameSpec {
    /// `g` and `h` hold g_1.. and h_1..; every g_j must be nonzero.
    pub fn new(g: Vec<BigRational>, h: Vec<BigRational>) -> Result<Self> {
        if g.len() != h.len() {
            return Err(Error::InvalidArgument("g and h must have equal length".into()));
        }
        if let Some(j) = g.iter().position(Zero::is_zero) {
            return Err(Error::InvalidArgument(format!("g_{} is zero", j + 1)));
        }
        Ok(FrameSpec { g, h })
    }

    pub fn len(&self) -> usize {
        self.g.len()
    }

    pub fn is_empty(&self) -> bool {
        self.g.is_empty()
    }

    /// h_j/g_j for j = 1..
    pub fn steps(&self) -> Vec<BigRational> {
        self.h.iter().zip(&self.g).map(|(h, g)| h / g).collect()
    }

    /// r_0 = 1, r_j = H_j/G_j.
    pub fn ratios(&self) -> Vec<BigRational> {
        let mut out = vec![BigRational::one()];
        for s in self.steps() {
            let next = out.last().expect("nonempty") * s;
            out.push(next);
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct FrameOutcome {
    /// f_0..f_N.
    pub f: Vec<BigRational>,
    pub verdict: Verdict,
}

fn signed_det(seq: &[BigRational], n: usize) -> BigRational {
    let det = hess_det(&ToeplitzHessenberg::new(seq[1..=n].to_vec(), BigRational::one()));
    det.signed(if n % 2 == 0 { 1 } else { -1 })
}

fn multinomial_sum(seq: &[BigRational], n: usize) -> BigRational {
    weighted_partitions(n as u64).fold(BigRational::zero(), |acc, p| {
        let mut term = BigRational::from_integer(p.multinomial());
        for (j, t) in p.nonzero() {
            term *= seq[j].power(t);
        }
        acc + term.signed(if p.parts() % 2 == 0 { 1 } else { -1 })
    })
}

fn composition_sum(seq: &[BigRational], n: usize) -> BigRational {
    compositions(n).fold(BigRational::zero(), |acc, parts| {
        let term = parts.iter().fold(BigRational::one(), |t, &i| t * &seq[i]);
        acc + term.signed(if parts.len() % 2 == 0 { 1 } else { -1 })
    })
}

fn mismatch(route: &str, n: usize, got: &BigRational, want: &BigRational) -> Verdict {
    Verdict::new(format!("{route} f_{n}={got}"), want.to_string(), false)
}

/// Computes f_0..f_N from the series inverse and checks the determinant,
/// convolution, multinomial, composition and continued-fraction routes
/// against it, then recovers r_1..r_N from f by the determinant, multinomial
/// and composition routes.
pub fn frame_check(spec: &FrameSpec, n_max: usize) -> Result<FrameOutcome> {
    if n_max > spec.len() {
        return Err(Error::InvalidArgument(format!(
            "frame has {} levels, asked for {n_max}",
            spec.len()
        )));
    }
    let r = spec.ratios();
    let r = &r[..=n_max];
    let f = TruncSeries::new(n_max, r.to_vec()).inverse()?.into_coeffs();

    let cf = cf_eval(&CFSpec::uniform(BigRational::one(), spec.steps()[..n_max].to_vec()), n_max)?;

    for n in 0..=n_max {
        let conv = (0..=n).fold(BigRational::zero(), |acc, k| acc + &f[k] * &r[n - k]);
        let unit = if n == 0 { BigRational::one() } else { BigRational::zero() };
        let routes = [
            ("determinant", signed_det(r, n)),
            ("multinomial", multinomial_sum(r, n)),
            ("composition", composition_sum(r, n)),
            ("continued-fraction", cf.coeff(n).clone()),
        ];
        if conv != unit {
            let verdict = Verdict::new(format!("convolution at n={n} is {conv}"), unit.to_string(), false);
            return Ok(FrameOutcome { f, verdict });
        }
        for (name, v) in routes {
            if v != f[n] {
                let verdict = mismatch(name, n, &v, &f[n]);
                return Ok(FrameOutcome { f, verdict });
            }
        }
        let back = [
            ("reverse-determinant", signed_det(&f, n)),
            ("reverse-multinomial", multinomial_sum(&f, n)),
            ("reverse-composition", composition_sum(&f, n)),
        ];
        for (name, v) in back {
            if v != r[n] {
                let verdict = Verdict::new(format!("{name} r_{n}={v}"), r[n].to_string(), false);
                return Ok(FrameOutcome { f, verdict });
            }
        }
    }
    let show = |v: &[BigRational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    let verdict = Verdict::new(show(&f), show(cf.coeffs()), true);
    Ok(FrameOutcome { f, verdict })
}
