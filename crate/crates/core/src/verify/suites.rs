use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::methods::Method;
use super::report::{Entry, Params, Verdict, VerificationReport};
use crate::error::{Error, Result};
use crate::exact::{rat, Golden, TruncSeries};
use crate::fibonomial::{fib, fibonomial, fibonomial_product, power_sum, sign_delta, SignRule};
use crate::hessenberg::{
    det_binomial_sanity, det_tha1, det_tha1_general, det_theorem1, hess_det, inversion_check,
    tha1_general_matrix, theorem1_matrix, ToeplitzHessenberg,
};
use crate::identities::{
    alternating_sum, bell_complete, bell_det_fibonom, bell_det_fibonom_entrywise, fibonom_via_bell,
    fibonomial_vandermonde, gtrudi_roundtrip, lemma1_classical, lemma2_sum, powersum_det,
    powersum_det_with, tha5_sum_with, th5_sum_with, trudi_eval, vandermonde_rhs_exponent_form,
    BellArgs, TrudiExponent,
};
use crate::series_cf::{
    ab_inverse_pair, cf_column_variant, cf_eval, cf_row_variant, column_target, frame_check,
    gf_signed_row, qbinomial_theorem_check, row_target, CFSpec, FrameSpec,
};

pub const DEFAULT_MAX_N: u64 = 12;

const SEED: u64 = 0x5eed_f1b0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Theorem1,
    Tha1,
    Vandermonde,
    Lemma2,
    Cf,
    Trudi,
    Bell,
    Frame,
    Inversion,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::All,
        Suite::Theorem1,
        Suite::Tha1,
        Suite::Vandermonde,
        Suite::Lemma2,
        Suite::Cf,
        Suite::Trudi,
        Suite::Bell,
        Suite::Frame,
        Suite::Inversion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Theorem1 => "theorem1",
            Suite::Tha1 => "tha1",
            Suite::Vandermonde => "vandermonde",
            Suite::Lemma2 => "lemma2",
            Suite::Cf => "cf",
            Suite::Trudi => "trudi",
            Suite::Bell => "bell",
            Suite::Frame => "frame",
            Suite::Inversion => "inversion",
        }
    }

    fn cases(self, max_n: u64) -> Vec<Case> {
        match self {
            Suite::All => Suite::ALL[1..].iter().flat_map(|s| s.cases(max_n)).collect(),
            Suite::Theorem1 => theorem1_cases(max_n),
            Suite::Tha1 => tha1_cases(max_n),
            Suite::Vandermonde => vandermonde_cases(max_n),
            Suite::Lemma2 => lemma2_cases(max_n),
            Suite::Cf => cf_cases(max_n),
            Suite::Trudi => trudi_cases(max_n),
            Suite::Bell => bell_cases(max_n),
            Suite::Frame => frame_cases(max_n),
            Suite::Inversion => inversion_cases(max_n),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

type Case = Box<dyn FnOnce() -> Vec<Entry> + Send>;

fn case(f: impl FnOnce() -> Vec<Entry> + Send + 'static) -> Case {
    Box::new(f)
}

fn one(identity: &'static str, params: Params, verdict: impl FnOnce() -> Result<Verdict> + Send + 'static) -> Case {
    case(move || vec![Entry::new(identity, params, Verdict::from_result(verdict()))])
}

fn nk(n: u64, k: u64) -> Params {
    Params::new().int("n", n).int("k", k)
}

fn join<T: fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn zero_check(v: BigInt) -> Verdict {
    Verdict::equal(&v, &BigInt::zero())
}

/// Runs a suite on `jobs` worker threads (0 picks the rayon default).
/// Entries are sorted afterwards, so the report does not depend on scheduling.
pub fn run_suite(suite: Suite, max_n: u64, jobs: usize) -> Result<VerificationReport> {
    let cases = suite.cases(max_n);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let entries: Vec<Entry> = pool.install(|| cases.into_par_iter().flat_map_iter(|c| c()).collect());
    Ok(VerificationReport::from_entries(entries))
}

fn theorem1_cases(max_n: u64) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for k in 0..=n {
            out.push(one("methods.agreement", nk(n, k), move || {
                let values = Method::ALL
                    .iter()
                    .map(|m| m.evaluate(n, k))
                    .collect::<Result<Vec<_>>>()?;
                let agree = values.iter().all(|v| *v == values[0]);
                Ok(Verdict::new(join(&values), values[0].to_string(), agree))
            }));
            out.push(one("fibonomial.symmetry", nk(n, k), move || {
                Ok(Verdict::equal(&fibonomial_product(n, k)?, &fibonomial_product(n, n - k)?))
            }));
        }
        for k in 1..=n + 1 {
            out.push(one("determinant.column", nk(n, k), move || {
                Ok(Verdict::equal(&det_theorem1(n, k), &fibonomial_product(n + 1, k)?))
            }));
            out.push(one("determinant.binomial", nk(n, k), move || {
                Ok(Verdict::equal(&det_binomial_sanity(n, k), &crate::fibonomial::binomial(n + 1, k)))
            }));
        }
    }
    // the printed sign table, one witness per k
    let n = max_n;
    for k in 1..=n + 1 {
        out.push(one("determinant.column.printed-sign-table", nk(n, k), move || {
            let det = hess_det(&theorem1_matrix(n, k)) * SignRule::PrintedCaseTable.at(k);
            Ok(Verdict::equal(&det, &fibonomial_product(n + 1, k)?).recorded())
        }));
    }
    out
}

fn tha1_cases(max_n: u64) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for k in 1..=max_n {
            out.push(one("determinant.row", nk(n, k), move || {
                Ok(Verdict::equal(&det_tha1(n, k), &fibonomial_product(n + k, k)?))
            }));
        }
    }
    let scales: [(i64, i64); 5] = [(1, 1), (-1, 1), (2, 1), (1, 3), (-7, 2)];
    let lim = max_n.min(10);
    for n in 0..=lim {
        for k in 1..=lim {
            for (p, q) in scales {
                let a = rat(p, q);
                let params = nk(n, k).text("a", a.to_string());
                out.push(one("determinant.row-scaled", params, move || {
                    Ok(Verdict::equal(&det_tha1_general(n, k, &a)?, &det_tha1(n, k)))
                }));
            }
        }
    }
    out.push(one("determinant.row-scaled.band", nk(3, 3).text("a", "-1"), || {
        let m = tha1_general_matrix(3, 4, &rat(-1, 1))?;
        let mut band = m.column().to_vec();
        band.push(m.superdiag_value().clone());
        let det = det_tha1_general(3, 3, &rat(-1, 1))?;
        Ok(Verdict::new(
            format!("{} det={det}", join(&band)),
            "3,6,-3,-1,-1 det=60".into(),
            join(&band) == "3,6,-3,-1,-1" && det == BigInt::from(60),
        ))
    }));
    out
}

fn vandermonde_cases(max_n: u64) -> Vec<Case> {
    let lim = max_n.min(10);
    let mut out = Vec::new();
    for m in 0..=lim {
        for n in 0..=lim {
            out.push(case(move || {
                let mut entries = Vec::new();
                for k in 0..=m + n {
                    let params = Params::new().int("m", m).int("n", n).int("k", k);
                    let main = fibonomial_vandermonde(m, n, k);
                    let alt = vandermonde_rhs_exponent_form(m, n, k);
                    let v = Verdict::from_result(
                        main.map(|(g, v)| Verdict::new(g.to_string(), v.to_string(), g == Golden::integer(v.clone()))),
                    );
                    entries.push(Entry::new("vandermonde", params.clone(), v));
                    let target = Golden::integer(fibonomial(m + n, k));
                    entries.push(Entry::new("vandermonde.exponent-form", params, Verdict::equal(&alt, &target)));
                }
                entries
            }));
        }
    }
    out
}

fn lemma2_cases(max_n: u64) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for k in 1..=max_n {
            out.push(one("zero-sum.classical", nk(n, k), move || Ok(zero_check(lemma1_classical(n, k)))));
            out.push(one("zero-sum.fibonomial", nk(n, k), move || Ok(zero_check(lemma2_sum(n, k)))));
        }
        out.push(one("genfn.signed-row", Params::new().int("n", n), move || {
            let row = gf_signed_row(n, n as usize + 2)?;
            let want: Vec<BigInt> = (0..=n + 2).map(|k| fibonomial(n, k) * sign_delta(k)).collect();
            Ok(Verdict::new(join(row.coeffs()), join(&want), row.coeffs() == want.as_slice()))
        }));
        out.push(one("genfn.inverse-pair", Params::new().int("n", n), move || {
            let (a, b) = ab_inverse_pair(n, 10)?;
            let prod = a.mul(&b)?;
            Ok(Verdict::new(prod.to_string(), TruncSeries::<BigInt>::one(10).to_string(), prod.is_one()))
        }));
    }
    for m in (1..=max_n + 3).step_by(2) {
        out.push(one("zero-sum.alternating", Params::new().int("m", m), move || {
            Ok(zero_check(alternating_sum(m)?))
        }));
    }
    for big_n in 0..=max_n.min(6) {
        for n in 0..=2 {
            let params = Params::new().int("N", big_n).int("n", n).int("order", 10);
            out.push(one("genfn.q-binomial", params, move || qbinomial_theorem_check(big_n, n, 10)));
        }
    }
    out
}

fn as_rat(s: &TruncSeries<BigInt>) -> TruncSeries<BigRational> {
    s.map(|c| BigRational::from_integer(c.clone()))
}

fn series_verdict(got: &TruncSeries<BigRational>, want: &TruncSeries<BigRational>) -> Verdict {
    Verdict::new(join(got.coeffs()), join(want.coeffs()), got == want)
}

fn cf_cases(max_n: u64) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let order = n as usize + 1;
        out.push(one("cf.row", Params::new().int("n", n).int("order", order), move || {
            Ok(series_verdict(&cf_eval(&cf_row_variant(n), order)?, &as_rat(&row_target(n, order))))
        }));
        // the column fraction is exact, so check well past x^{n+1}
        let order = n as usize + 4;
        out.push(one("cf.column", Params::new().int("n", n).int("order", order), move || {
            Ok(series_verdict(&cf_eval(&cf_column_variant(n), order)?, &as_rat(&column_target(n, order))))
        }));
        if n >= 1 {
            let order = n as usize + 1;
            out.push(one("cf.column.printed-last-sign", Params::new().int("n", n), move || {
                let mut spec = cf_column_variant(n);
                let last = spec.levels.last_mut().expect("n+1 levels");
                last.numerator = -last.numerator.clone();
                last.slope = -last.slope.clone();
                Ok(series_verdict(&cf_eval(&spec, order)?, &as_rat(&column_target(n, order))).recorded())
            }));
        }
    }
    let ints = |v: &[i64]| TruncSeries::new(v.len() - 1, v.iter().map(|&x| rat(x, 1)).collect());
    out.push(one("cf.row.example", Params::new().int("n", 6), move || {
        let want = ints(&[1, -13, -104, 260, 260, -104, -13, 1]);
        Ok(series_verdict(&cf_eval(&cf_row_variant(6), 7)?, &want))
    }));
    out.push(one("cf.row.example-x8", Params::new().int("n", 6), || {
        let c = cf_eval(&cf_row_variant(6), 8)?.coeff(8).clone();
        Ok(Verdict::equal(&c, &rat(8771626578, 1)))
    }));
    out.push(one("cf.row.printed-ratios", Params::new().int("n", 6), move || {
        let mut ratios: Vec<BigRational> = cf_row_variant(6).levels.into_iter().map(|l| l.numerator).collect();
        ratios[5] = rat(134, 8);
        ratios[6] = rat(223, 13);
        let got = cf_eval(&CFSpec::uniform(BigRational::one(), ratios), 7)?;
        Ok(series_verdict(&got, &as_rat(&row_target(6, 7))).recorded())
    }));
    out.push(one("cf.column.example", Params::new().int("n", 7), move || {
        let want = ints(&[1, 21, 714, 19635, 582505, 16776144, 488605194, 14169550626, 411591708660]);
        Ok(series_verdict(&cf_eval(&cf_column_variant(7), 8)?, &want))
    }));
    out
}

fn random_ints(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> Vec<BigInt> {
    (0..len).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect()
}

fn random_rats(rng: &mut ChaCha8Rng, len: usize) -> Vec<BigRational> {
    (0..len).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=6))).collect()
}

fn trudi_cases(max_n: u64) -> Vec<Case> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    for sample in 0..30u64 {
        let len = rng.gen_range(0..=8usize);
        let a0 = BigInt::from(rng.gen_range(-4..=4));
        let a = random_ints(&mut rng, len, 6);
        out.push(one("trudi.expansion", Params::new().int("sample", sample).int("n", len), move || {
            let sum = trudi_eval(&a0, &a, len)?;
            let det = hess_det(&ToeplitzHessenberg::new(a, a0));
            Ok(Verdict::equal(&sum, &det))
        }));
    }
    let lim = max_n.min(9);
    for n in 0..=lim {
        for k in 1..=lim {
            let column = move |e| Ok(Verdict::equal(&th5_sum_with(n, k, e), &fibonomial(n + 1, k)));
            let row = move |e| Ok(Verdict::equal(&tha5_sum_with(n, k, e), &fibonomial(n + k, k)));
            out.push(one("trudi.column-sum", nk(n, k), move || column(TrudiExponent::Order)));
            out.push(one("trudi.row-sum", nk(n, k), move || row(TrudiExponent::Order)));
            out.push(one("trudi.column-sum.printed-exponent", nk(n, k), move || {
                column(TrudiExponent::Printed).map(Verdict::recorded)
            }));
            out.push(one("trudi.row-sum.printed-exponent", nk(n, k), move || {
                row(TrudiExponent::Printed).map(Verdict::recorded)
            }));
        }
    }
    out
}

fn bell_cases(max_n: u64) -> Vec<Case> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    for sample in 0..20u64 {
        let len = rng.gen_range(0..=10usize);
        let x = random_ints(&mut rng, len, 6);
        out.push(one("bell.complete", Params::new().int("sample", sample).int("n", len), move || {
            let y = bell_complete(&BellArgs(x))?;
            Ok(Verdict::new(y.to_string(), y.to_string(), true))
        }));
    }
    for sample in 0..50u64 {
        let len = rng.gen_range(1..=8usize);
        let a = random_rats(&mut rng, len);
        out.push(one("bell.newton-roundtrip", Params::new().int("sample", sample).int("n", len), move || {
            gtrudi_roundtrip(&a, len)
        }));
    }
    for n in 1..=20u64 {
        for r in 1..=8u64 {
            out.push(one("bell.power-sum", Params::new().int("n", n).int("r", r), move || {
                let want = fib(r * n) / fib(r);
                Ok(Verdict::equal(&power_sum(n, r)?, &want))
            }));
        }
    }
    for n in 0..=max_n {
        for k in 0..=n {
            out.push(one("bell.fibonomial", nk(n, k), move || {
                Ok(Verdict::equal(&fibonom_via_bell(n, k)?, &fibonomial_product(n, k)?))
            }));
            out.push(one("bell.determinant", nk(n, k), move || {
                Ok(Verdict::equal(&bell_det_fibonom(n, k)?, &fibonomial_product(n, k)?))
            }));
            if k == 0 {
                continue;
            }
            let entrywise = move |rule| {
                let got = bell_det_fibonom_entrywise(n, k, rule)?;
                let want = BigRational::from_integer(fibonomial_product(n, k)?);
                Ok(Verdict::equal(&got, &want).recorded())
            };
            out.push(one("bell.determinant.printed-sign", nk(n, k), move || {
                entrywise(SignRule::UpperBinomial(n))
            }));
            out.push(one("bell.determinant.entrywise-delta", nk(n, k), move || entrywise(SignRule::Delta)));
            out.push(one("bell.powersum-determinant", nk(n, k), move || {
                Ok(Verdict::equal(&powersum_det(n, k)?, &power_sum(n, k)?))
            }));
            out.push(one("bell.powersum-determinant.printed-sign", nk(n, k), move || {
                let got = powersum_det_with(n, k, SignRule::UpperBinomial(n))?;
                Ok(Verdict::equal(&got, &power_sum(n, k)?).recorded())
            }));
        }
    }
    out
}

fn fib_rats(range: impl Iterator<Item = u64>) -> Vec<BigRational> {
    range.map(|j| BigRational::from_integer(fib(j))).collect()
}

fn frame_entry(identity: &'static str, params: Params, spec: Result<FrameSpec>, n: usize, want: Option<Vec<BigInt>>) -> Case {
    one(identity, params, move || {
        let out = frame_check(&spec?, n)?;
        match want {
            Some(w) if out.verdict.passed() => {
                let w: Vec<BigRational> = w.into_iter().map(BigRational::from_integer).collect();
                Ok(Verdict::new(join(&out.f), join(&w), out.f == w))
            }
            _ => Ok(out.verdict),
        }
    })
}

fn frame_cases(max_n: u64) -> Vec<Case> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    let lim = max_n.min(10) as usize;
    for sample in 0..50u64 {
        let n = rng.gen_range(0..=lim);
        let g: Vec<BigRational> = (0..n)
            .map(|_| {
                let p: i64 = rng.gen_range(1..=9);
                rat(if rng.gen() { p } else { -p }, rng.gen_range(1..=6))
            })
            .collect();
        let h = random_rats(&mut rng, n);
        out.push(frame_entry("frame.random", Params::new().int("sample", sample).int("N", n), FrameSpec::new(g, h), n, None));
    }
    // row n=6: h_j/g_j = F_{6+j}/F_j
    let g = fib_rats(1..=7);
    let h = fib_rats(7..=13);
    let want = (0..=7).map(|k| fibonomial(7, k) * sign_delta(k + 1)).collect();
    out.push(frame_entry("frame.row", Params::new().int("n", 6).int("N", 7), FrameSpec::new(g, h), 7, Some(want)));
    // column n=7: h_j/g_j = (−1)^j F_{9−j}/F_j
    let g = fib_rats(1..=8);
    let h: Vec<BigRational> = (1..=8u64)
        .map(|j| BigRational::from_integer(fib(9 - j) * if j % 2 == 0 { 1 } else { -1 }))
        .collect();
    let want = (0..=8).map(|k| fibonomial(7 + k, k)).collect();
    out.push(frame_entry("frame.column", Params::new().int("n", 7).int("N", 8), FrameSpec::new(g, h), 8, Some(want)));
    out
}

fn inversion_cases(max_n: u64) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let depth = max_n.max(1) as usize;
        out.push(one("inversion.fibonomial", Params::new().int("n", n).int("depth", depth), move || {
            let alphas: Vec<BigRational> =
                (0..=depth as u64).map(|l| BigRational::from_integer(fibonomial(n + l, n))).collect();
            let outcome = inversion_check(&alphas, depth)?;
            if !outcome.verdict.passed() {
                return Ok(outcome.verdict);
            }
            let want: Vec<BigRational> = (0..=depth as u64)
                .map(|m| BigRational::from_integer(fibonomial(n + 1, m) * sign_delta(m)))
                .collect();
            Ok(Verdict::new(join(&outcome.betas), join(&want), outcome.betas == want))
        }));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    for sample in 0..30u64 {
        let depth = rng.gen_range(1..=max_n.clamp(1, 10) as usize);
        let mut alphas = vec![BigRational::one()];
        alphas.extend(random_rats(&mut rng, depth));
        out.push(one("inversion.random", Params::new().int("sample", sample).int("depth", depth), move || {
            Ok(inversion_check(&alphas, depth)?.verdict)
        }));
    }
    out
}
