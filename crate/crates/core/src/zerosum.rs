//! Zero-sum completions of sequences over `Z/p`.
//!
//! Given at least `p + 1` nonzero residues there is a repeated value
//! `x[k1] = x[k2]` and a set of further indices `S` (disjoint from both) with
//! `x[k1] + Σ_{i∈S} x[i] = 0`. For prime `p` every repeated pair admits such
//! an `S`. Witnesses are found by exhaustive search: subsets ordered by size,
//! then lexicographically by index; pairs in lexicographic `(k1, k2)` order.
//! Indices are 0-based.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ZeroSumWitness {
    pub k1: usize,
    pub k2: usize,
    pub subset: Vec<usize>,
}

fn check_entries(seq: &[u64], p: u64) -> Result<()> {
    if p < 2 {
        return Err(Error::ModulusTooSmall(p));
    }
    if let Some(i) = seq.iter().position(|&x| x % p == 0) {
        return Err(Error::Precondition(format!(
            "entry {i} of the sequence is zero mod {p}"
        )));
    }
    Ok(())
}

/// The canonical subset completing the pair `(k1, k2)`, if any.
pub fn zerosum_completion(seq: &[u64], k1: usize, k2: usize, p: u64) -> Result<Option<Vec<usize>>> {
    if p < 2 {
        return Err(Error::ModulusTooSmall(p));
    }
    if k1 == k2 || k1 >= seq.len() || k2 >= seq.len() {
        return Err(Error::Precondition(format!(
            "({k1}, {k2}) is not a pair of distinct indices into a sequence of length {}",
            seq.len()
        )));
    }
    if seq[k1] % p != seq[k2] % p {
        return Err(Error::Precondition(format!(
            "entries {k1} and {k2} differ mod {p}"
        )));
    }
    let start = seq[k1] % p;
    if start == 0 {
        return Ok(Some(Vec::new()));
    }
    let rest: Vec<usize> = (0..seq.len()).filter(|&i| i != k1 && i != k2).collect();
    for size in 1..=rest.len() {
        for subset in rest.iter().copied().combinations(size) {
            let total = subset.iter().fold(start, |acc, &i| (acc + seq[i] % p) % p);
            if total == 0 {
                return Ok(Some(subset));
            }
        }
    }
    Ok(None)
}

/// The first equal pair (lexicographically) that admits a completion,
/// together with its canonical completion.
pub fn schmid_zero_sum(seq: &[u64], p: u64) -> Result<ZeroSumWitness> {
    check_entries(seq, p)?;
    if seq.len() < p as usize + 1 {
        return Err(Error::Precondition(format!(
            "sequence has length {} but at least p + 1 = {} entries are required",
            seq.len(),
            p + 1
        )));
    }
    let mut saw_pair = false;
    for k1 in 0..seq.len() {
        for k2 in k1 + 1..seq.len() {
            if seq[k1] % p != seq[k2] % p {
                continue;
            }
            saw_pair = true;
            if let Some(subset) = zerosum_completion(seq, k1, k2, p)? {
                return Ok(ZeroSumWitness { k1, k2, subset });
            }
        }
    }
    Err(Error::Precondition(if saw_pair {
        "no equal pair admits a zero-sum completion".to_string()
    } else {
        "no two entries are equal".to_string()
    }))
}

/// Outcome of checking the every-pair-completes property over many sequences.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SweepSummary {
    pub p: u64,
    pub exhaustive: bool,
    pub sequences: u64,
    pub pairs: u64,
    pub failures: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<FailedPair>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FailedPair {
    pub seq: Vec<u64>,
    pub k1: usize,
    pub k2: usize,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn new(p: u64, exhaustive: bool) -> Self {
        SweepSummary {
            p,
            exhaustive,
            sequences: 0,
            pairs: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, seq: &[u64]) {
        let p = self.p;
        self.sequences += 1;
        for k1 in 0..seq.len() {
            for k2 in k1 + 1..seq.len() {
                if seq[k1] != seq[k2] {
                    continue;
                }
                self.pairs += 1;
                let ok = matches!(zerosum_completion(seq, k1, k2, p), Ok(Some(_)));
                if !ok {
                    self.failures += 1;
                    self.first_failure.get_or_insert_with(|| FailedPair {
                        seq: seq.to_vec(),
                        k1,
                        k2,
                    });
                }
            }
        }
    }
}

/// Every sequence of length `p + 1` over `{1, …, p−1}`, every equal pair.
pub fn exhaustive_sweep(p: u64) -> Result<SweepSummary> {
    if p < 2 {
        return Err(Error::ModulusTooSmall(p));
    }
    let mut summary = SweepSummary::new(p, true);
    let len = p as usize + 1;
    for seq in std::iter::repeat_n(1..p, len).multi_cartesian_product() {
        summary.record(&seq);
    }
    Ok(summary)
}

/// Like [`exhaustive_sweep`] over `samples` uniformly random sequences.
pub fn sampled_sweep(p: u64, samples: u64, seed: u64) -> Result<SweepSummary> {
    if p < 2 {
        return Err(Error::ModulusTooSmall(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = SweepSummary::new(p, false);
    let len = p as usize + 1;
    let mut seq = vec![0u64; len];
    for _ in 0..samples {
        for x in seq.iter_mut() {
            *x = rng.random_range(1..p);
        }
        summary.record(&seq);
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent brute force: all subsets as bitmasks, no ordering.
    fn any_completion(seq: &[u64], k1: usize, k2: usize, p: u64) -> bool {
        let n = seq.len();
        (1u32..(1 << n)).any(|mask| {
            mask & (1 << k1) == 0
                && mask & (1 << k2) == 0
                && (seq[k1] + (0..n).filter(|i| mask & (1 << i) != 0).map(|i| seq[i]).sum::<u64>()).is_multiple_of(p)
        })
    }

    #[test]
    fn schmid_examples() {
        let w = schmid_zero_sum(&[1, 1, 1, 2], 3).unwrap();
        assert_eq!(w, ZeroSumWitness { k1: 0, k2: 1, subset: vec![3] });
        let w = schmid_zero_sum(&[2; 6], 5).unwrap();
        assert_eq!(w, ZeroSumWitness { k1: 0, k2: 1, subset: vec![2, 3, 4, 5] });
    }

    #[test]
    fn composite_counterexample() {
        // Sums reachable from x[0] = 1 with further 2's are 1 and 3 mod 4.
        assert_eq!(zerosum_completion(&[1, 1, 2, 2, 2], 0, 1, 4).unwrap(), None);
        assert!(!any_completion(&[1, 1, 2, 2, 2], 0, 1, 4));
        // Some other pair still completes.
        let w = schmid_zero_sum(&[1, 1, 2, 2, 2], 4).unwrap();
        assert_eq!((w.k1, w.k2), (2, 3));
        assert_eq!(w.subset, vec![4]);
    }

    #[test]
    fn completion_example() {
        assert_eq!(zerosum_completion(&[1, 1, 2, 2], 2, 3, 3).unwrap(), Some(vec![0]));
    }

    #[test]
    fn precondition_errors() {
        assert!(schmid_zero_sum(&[1, 1, 2], 3).is_err());
        assert!(schmid_zero_sum(&[1, 0, 2, 1], 3).is_err());
        assert!(schmid_zero_sum(&[1, 2, 3, 4], 4).is_err());
        assert!(zerosum_completion(&[1, 2], 0, 1, 3).is_err());
        assert!(zerosum_completion(&[1, 1], 0, 0, 3).is_err());
    }

    #[test]
    fn prime_sweeps_pass() {
        for p in [3, 5] {
            let s = exhaustive_sweep(p).unwrap();
            assert!(s.passed(), "{s:?}");
            assert_eq!(s.sequences, (p - 1).pow(p as u32 + 1));
        }
        assert!(!exhaustive_sweep(4).unwrap().passed());
    }

    #[test]
    fn canonical_search_agrees_with_bitmask_oracle() {
        for p in [3u64, 4, 5, 6] {
            let s = sampled_sweep(p, 200, 7).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for _ in 0..200 {
                let seq: Vec<u64> = (0..=p).map(|_| rng.random_range(1..p)).collect();
                for k1 in 0..seq.len() {
                    for k2 in k1 + 1..seq.len() {
                        if seq[k1] == seq[k2] {
                            assert_eq!(
                                zerosum_completion(&seq, k1, k2, p).unwrap().is_some(),
                                any_completion(&seq, k1, k2, p)
                            );
                        }
                    }
                }
            }
            assert_eq!(s.sequences, 200);
        }
    }
}
