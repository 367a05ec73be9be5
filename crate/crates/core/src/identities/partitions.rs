//! Summation domains: weighted partitions t_1 + 2t_2 + … + k·t_k = k and
//! ordered compositions i_1 + … + i_r = n.

use num_bigint::BigInt;

use crate::fibonomial::factorial;

/// Multiplicities t_1..t_k with Σ j·t_j = k.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedPartition {
    mult: Vec<u64>,
}

impl WeightedPartition {
    /// t_1..t_k, index 0 holding t_1.
    pub fn multiplicities(&self) -> &[u64] {
        &self.mult
    }

    /// t_j for j ≥ 1 (zero past the end).
    pub fn t(&self, j: usize) -> u64 {
        self.mult.get(j - 1).copied().unwrap_or(0)
    }

    /// t_1 + … + t_k.
    pub fn parts(&self) -> u64 {
        self.mult.iter().sum()
    }

    pub fn weight(&self) -> u64 {
        self.mult.iter().enumerate().map(|(i, t)| (i as u64 + 1) * t).sum()
    }

    /// (t_1+⋯+t_k)! / (t_1!⋯t_k!).
    pub fn multinomial(&self) -> BigInt {
        let denom = self.mult.iter().fold(BigInt::from(1), |acc, &t| acc * factorial(t));
        factorial(self.parts()) / denom
    }

    /// Pairs (j, t_j) with t_j > 0.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.mult
            .iter()
            .enumerate()
            .filter(|(_, &t)| t > 0)
            .map(|(i, &t)| (i + 1, t))
    }
}

/// Iterator over the weighted partitions of `k`, ascending lexicographically
/// in (t_k, …, t_2, t_1).
#[derive(Clone, Debug)]
pub struct WeightedPartitions {
    k: u64,
    // t_2..t_k are the odometer digits; t_1 absorbs the remainder.
    state: Option<Vec<u64>>,
}

pub fn weighted_partitions(k: u64) -> WeightedPartitions {
    let mut first = vec![0; k as usize];
    if k > 0 {
        first[0] = k;
    }
    WeightedPartitions {
        k,
        state: Some(first),
    }
}

impl Iterator for WeightedPartitions {
    type Item = WeightedPartition;

    fn next(&mut self) -> Option<WeightedPartition> {
        let current = self.state.take()?;
        let k = self.k as usize;
        let mut next = current.clone();
        // weight carried by t_2..t_k
        let mut upper: u64 = next.iter().enumerate().skip(1).map(|(i, t)| (i as u64 + 1) * t).sum();
        let mut advanced = false;
        for j in 2..=k {
            let w = j as u64;
            if upper + w <= self.k {
                next[j - 1] += 1;
                upper += w;
                advanced = true;
                break;
            }
            upper -= w * next[j - 1];
            next[j - 1] = 0;
        }
        if advanced {
            next[0] = self.k - upper;
            self.state = Some(next);
        }
        Some(WeightedPartition { mult: current })
    }
}

/// All ordered compositions of `n` into positive parts; `n = 0` yields the empty one.
pub fn compositions(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let count: u64 = if n == 0 { 1 } else { 1 << (n - 1) };
    (0..count).map(move |mask| {
        let mut parts = Vec::new();
        let mut run = 1;
        for bit in 0..n.saturating_sub(1) {
            if mask >> bit & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        if n > 0 {
            parts.push(run);
        }
        parts
    })
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    /// Brute force: every vector with 0 ≤ t_j ≤ k/j, filtered by weight.
    fn brute(k: u64) -> HashSet<Vec<u64>> {
        fn rec(k: u64, j: u64, acc: &mut Vec<u64>, out: &mut HashSet<Vec<u64>>) {
            if j > k {
                let w: u64 = acc.iter().enumerate().map(|(i, t)| (i as u64 + 1) * t).sum();
                if w == k {
                    out.insert(acc.clone());
                }
                return;
            }
            for t in 0..=k / j {
                acc.push(t);
                rec(k, j + 1, acc, out);
                acc.pop();
            }
        }
        let mut out = HashSet::new();
        rec(k, 1, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn small_cases() {
        let zero: Vec<_> = weighted_partitions(0).collect();
        assert_eq!(zero.len(), 1);
        assert!(zero[0].multiplicities().is_empty());

        let three: Vec<Vec<u64>> =
            weighted_partitions(3).map(|p| p.multiplicities().to_vec()).collect();
        assert_eq!(three, vec![vec![3, 0, 0], vec![1, 1, 0], vec![0, 0, 1]]);

        assert_eq!(weighted_partitions(6).count(), 11);
    }

    #[test]
    fn matches_brute_force_and_is_ordered() {
        for k in 0..=12u64 {
            let got: Vec<Vec<u64>> =
                weighted_partitions(k).map(|p| p.multiplicities().to_vec()).collect();
            let set: HashSet<Vec<u64>> = got.iter().cloned().collect();
            assert_eq!(set.len(), got.len(), "duplicates at k={k}");
            assert_eq!(set, brute(k), "k={k}");
            let keys: Vec<Vec<u64>> = got.iter().map(|t| t.iter().rev().copied().collect()).collect();
            assert!(keys.windows(2).all(|w| w[0] < w[1]), "order at k={k}");
        }
    }

    #[test]
    fn multinomial_values() {
        let p = weighted_partitions(4).find(|p| p.multiplicities() == [2, 1, 0, 0]).unwrap();
        assert_eq!(p.multinomial(), BigInt::from(3));
        assert_eq!(p.parts(), 3);
        assert_eq!(p.weight(), 4);
    }

    #[test]
    fn compositions_enumerate() {
        assert_eq!(compositions(0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        let c3: HashSet<Vec<usize>> = compositions(3).collect();
        let expected: HashSet<Vec<usize>> =
            [vec![3], vec![1, 2], vec![2, 1], vec![1, 1, 1]].into_iter().collect();
        assert_eq!(c3, expected);
        for n in 1..=10 {
            let all: Vec<Vec<usize>> = compositions(n).collect();
            assert_eq!(all.len(), 1 << (n - 1));
            assert!(all.iter().all(|c| c.iter().sum::<usize>() == n));
        }
    }
}
