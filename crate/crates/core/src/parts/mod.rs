//! Partitions, `e`-cores on the abacus, and counts of partitions by core.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartsError {
    #[error("{0} is not an {1}-core")]
    NotACore(Partition, u32),
    #[error("e must be at least 1")]
    ZeroRunners,
    #[error("parts must be positive and weakly decreasing: {0}")]
    BadPartition(String),
    #[error("count does not fit in 64 bits")]
    Overflow,
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartsError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartsError::BadPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=cols)
                .map(|c| self.0.iter().filter(|&&r| r >= c).count() as u32)
                .collect(),
        )
    }

    /// Hook length of every box, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<u32>> {
        let conj = self.conjugate();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &r)| {
                (0..r)
                    .map(|j| (r - j - 1) + (conj.0[j as usize] - i as u32 - 1) + 1)
                    .collect()
            })
            .collect()
    }

    pub fn has_hook_of_length(&self, e: u32) -> bool {
        self.hook_lengths().iter().flatten().any(|&h| h == e)
    }

    pub fn is_core(&self, e: u32) -> bool {
        // a partition with a hook divisible by e also has one of length e
        !self.has_hook_of_length(e)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartsError;

    /// Comma-separated parts; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartsError::BadPartition(s.to_string()))?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order, starting from `(n)`.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Bead positions of a partition on `e` runners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abacus {
    e: u32,
    /// `β`-numbers in decreasing order.
    beta: Vec<u32>,
}

impl Abacus {
    /// β-set of first-column hook lengths, padded with extra beads so the
    /// bead count is a multiple of `e`.
    pub fn new(lambda: &Partition, e: u32) -> Result<Self, PartsError> {
        if e == 0 {
            return Err(PartsError::ZeroRunners);
        }
        let beads = lambda.len().div_ceil(e as usize) * e as usize;
        Ok(Self::with_beads(lambda, e, beads))
    }

    /// β-set with an explicit number of beads (at least the number of parts).
    pub fn with_beads(lambda: &Partition, e: u32, beads: usize) -> Self {
        assert!(e >= 1 && beads >= lambda.len());
        let beta = (0..beads)
            .map(|i| lambda.0.get(i).copied().unwrap_or(0) + (beads - 1 - i) as u32)
            .collect();
        Abacus { e, beta }
    }

    pub fn runners(&self) -> u32 {
        self.e
    }

    pub fn beta_set(&self) -> &[u32] {
        &self.beta
    }

    fn runner_counts(&self) -> Vec<u32> {
        let mut counts = vec![0u32; self.e as usize];
        for &b in &self.beta {
            counts[(b % self.e) as usize] += 1;
        }
        counts
    }

    /// Total number of positions beads move when pushed up their runners.
    pub fn weight(&self) -> u32 {
        let mut counts = vec![0u32; self.e as usize];
        let mut levels: u32 = 0;
        for &b in &self.beta {
            counts[(b % self.e) as usize] += 1;
            levels += b / self.e;
        }
        let settled: u32 = counts.iter().map(|&c| c * c.saturating_sub(1) / 2).sum();
        levels - settled
    }

    pub fn core(&self) -> Partition {
        let mut beta: Vec<u32> = self
            .runner_counts()
            .iter()
            .enumerate()
            .flat_map(|(r, &c)| (0..c).map(move |j| r as u32 + self.e * j))
            .collect();
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let n = beta.len();
        Partition(
            beta.iter()
                .enumerate()
                .map(|(i, &b)| b - (n - 1 - i) as u32)
                .filter(|&x| x > 0)
                .collect(),
        )
    }
}

pub fn e_core(lambda: &Partition, e: u32) -> Result<Partition, PartsError> {
    Ok(Abacus::new(lambda, e)?.core())
}

pub fn e_weight(lambda: &Partition, e: u32) -> Result<u32, PartsError> {
    Ok(Abacus::new(lambda, e)?.weight())
}

/// Number of partitions of `n`, for `0 ≤ n ≤ max`.
pub fn partition_counts(max: usize) -> Vec<u64> {
    let mut p = vec![0u64; max + 1];
    p[0] = 1;
    for part in 1..=max {
        for n in part..=max {
            p[n] += p[n - part];
        }
    }
    p
}

/// `k(e, m)`: the number of `e`-tuples of partitions of total size `m`.
///
/// Uses `m·a_m = e·Σ_{j=1}^{m} σ(j)·a_{m−j}` for the coefficients of
/// `Π (1 − x^i)^{−e}`.
pub fn k_olsson(e: u32, m: u32) -> Result<u64, PartsError> {
    let m = m as usize;
    let sigma: Vec<u128> = (0..=m)
        .map(|j| (1..=j).filter(|d| j % d == 0).map(|d| d as u128).sum())
        .collect();
    let mut a = vec![0u128; m + 1];
    a[0] = 1;
    for n in 1..=m {
        let mut acc: u128 = 0;
        for j in 1..=n {
            acc = sigma[j]
                .checked_mul(a[n - j])
                .and_then(|t| acc.checked_add(t))
                .ok_or(PartsError::Overflow)?;
        }
        a[n] = acc.checked_mul(e as u128).ok_or(PartsError::Overflow)? / n as u128;
    }
    u64::try_from(a[m]).map_err(|_| PartsError::Overflow)
}

/// Number of partitions of `n` with `e`-core `mu`.
pub fn count_with_core(n: u32, e: u32, mu: &Partition) -> Result<u64, PartsError> {
    if e == 0 {
        return Err(PartsError::ZeroRunners);
    }
    if !mu.is_core(e) {
        return Err(PartsError::NotACore(mu.clone(), e));
    }
    let s = mu.size();
    if n < s || (n - s) % e != 0 {
        return Ok(0);
    }
    k_olsson(e, (n - s) / e)
}

/// Partitions of `n` grouped by `e`-core, counted by enumeration.
pub fn core_classes(n: u32, e: u32) -> Result<BTreeMap<Partition, u64>, PartsError> {
    let mut out = BTreeMap::new();
    for lambda in partitions(n) {
        *out.entry(e_core(&lambda, e)?).or_insert(0) += 1;
    }
    Ok(out)
}

/// All `e`-cores of size at most `n`.
pub fn cores_up_to(n: u32, e: u32) -> Vec<Partition> {
    (0..=n)
        .flat_map(partitions)
        .filter(|mu| mu.is_core(e))
        .collect()
}

/// Size of the principal `p`-block of `Sym(n)`: partitions of `n` with
/// `p`-core `(r)`, where `n = pm + r` and `0 ≤ r < p`.
pub fn sym_principal_block_size(n: u32, p: u32) -> Result<u64, PartsError> {
    if p == 0 {
        return Err(PartsError::ZeroRunners);
    }
    count_with_core(n, p, &Partition::row(n % p))
}

/// Whether `Sym(pm + r)` and `Sym(pm)` have principal `p`-blocks of equal size.
pub fn mo83_identity_check(n: u32, p: u32) -> Result<bool, PartsError> {
    let pm = n - n % p.max(1);
    Ok(sym_principal_block_size(n, p)? == sym_principal_block_size(pm, p)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Tuples of partitions with total size `m`, listed one by one.
    fn tuples_oracle(e: u32, m: u32) -> u64 {
        if e == 0 {
            return u64::from(m == 0);
        }
        (0..=m)
            .map(|first| partitions(first).len() as u64 * tuples_oracle(e - 1, m - first))
            .sum()
    }

    /// Strips `e`-rim hooks one at a time using hook lengths directly.
    fn core_by_hook_removal(lambda: &Partition, e: u32) -> Partition {
        let mut cur = lambda.clone();
        loop {
            let n = cur.size();
            if n < e {
                return cur;
            }
            // a partition of n−e obtained by removing an e-rim hook has the
            // same e-core; find one among partitions of n−e with λ ⊇ μ and
            // λ∖μ connected with no 2×2 square
            let next = partitions(n - e)
                .into_iter()
                .find(|mu| is_rim_hook(&cur, mu));
            match next {
                Some(mu) => cur = mu,
                None => return cur,
            }
        }
    }

    fn is_rim_hook(lambda: &Partition, mu: &Partition) -> bool {
        let l = lambda.parts();
        let m = mu.parts();
        if m.len() > l.len() || m.iter().zip(l).any(|(a, b)| a > b) {
            return false;
        }
        let cells: Vec<(u32, u32)> = l
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| {
                let start = m.get(i).copied().unwrap_or(0);
                (start..r).map(move |j| (i as u32, j))
            })
            .collect();
        let has = |c: (u32, u32)| cells.contains(&c);
        if cells
            .iter()
            .any(|&(i, j)| has((i + 1, j)) && has((i, j + 1)) && has((i + 1, j + 1)))
        {
            return false;
        }
        // connected through edge-adjacent cells
        let mut seen = vec![cells[0]];
        let mut stack = vec![cells[0]];
        while let Some((i, j)) = stack.pop() {
            for c in [
                (i + 1, j),
                (i, j + 1),
                (i.wrapping_sub(1), j),
                (i, j.wrapping_sub(1)),
            ] {
                if has(c) && !seen.contains(&c) {
                    seen.push(c);
                    stack.push(c);
                }
            }
        }
        seen.len() == cells.len()
    }

    #[test]
    fn enumeration_order_and_counts() {
        let p4: Vec<String> = partitions(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(p4, vec!["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(partitions(0), vec![Partition::empty()]);
        let counts = partition_counts(30);
        for n in 0..=20 {
            assert_eq!(partitions(n).len() as u64, counts[n as usize]);
        }
        assert_eq!(counts[30], 5604);
    }

    #[test]
    fn rejects_malformed_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("3,x".parse::<Partition>().is_err());
        assert_eq!(part(""), Partition::empty());
    }

    #[test]
    fn hook_lengths_of_42() {
        let mut hooks: Vec<u32> = part("4,2").hook_lengths().concat();
        hooks.sort();
        assert_eq!(hooks, vec![1, 1, 2, 2, 4, 5]);
    }

    #[test]
    fn core_examples() {
        assert_eq!(e_core(&part("3"), 3).unwrap(), Partition::empty());
        assert_eq!(e_core(&part("4,2"), 3).unwrap(), part("4,2"));
        for lambda in partitions(7) {
            assert_eq!(e_core(&lambda, 1).unwrap(), Partition::empty());
        }
        assert_eq!(e_core(&part("2,1"), 2).unwrap(), part("2,1"));
        assert_eq!(e_core(&part("3,1"), 2).unwrap(), Partition::empty());
        assert_eq!(e_core(&part("1"), 0), Err(PartsError::ZeroRunners));
    }

    #[test]
    fn abacus_matches_hook_removal() {
        for n in 0..=9 {
            for e in 1..=4 {
                for lambda in partitions(n) {
                    let core = e_core(&lambda, e).unwrap();
                    assert_eq!(core, core_by_hook_removal(&lambda, e), "{lambda} e={e}");
                    assert!(core.is_core(e));
                    let w = e_weight(&lambda, e).unwrap();
                    assert_eq!(core.size() + e * w, n);
                }
            }
        }
    }

    #[test]
    fn olsson_examples() {
        assert_eq!(k_olsson(2, 2).unwrap(), 5);
        assert_eq!(k_olsson(1, 4).unwrap(), 5);
        assert_eq!(k_olsson(3, 2).unwrap(), 9);
        assert_eq!(k_olsson(4, 0).unwrap(), 1);
        assert_eq!(k_olsson(30, 200), Err(PartsError::Overflow));
    }

    #[test]
    fn olsson_matches_tuple_enumeration() {
        for e in 1..=5 {
            for m in 0..=8 {
                assert_eq!(k_olsson(e, m).unwrap(), tuples_oracle(e, m));
            }
        }
    }

    /// Coefficients of `P(x)^e` by repeated convolution of the partition counts.
    #[test]
    fn olsson_matches_convolution() {
        let p = partition_counts(40);
        for e in 1..=6u32 {
            let mut acc = vec![0u64; 41];
            acc[0] = 1;
            for _ in 0..e {
                acc = (0..=40)
                    .map(|n| (0..=n).map(|j| acc[j] * p[n - j]).sum())
                    .collect();
            }
            for m in 0..=40u32 {
                assert_eq!(k_olsson(e, m).unwrap(), acc[m as usize]);
            }
        }
    }

    #[test]
    fn count_with_core_examples() {
        assert_eq!(count_with_core(4, 2, &Partition::empty()).unwrap(), 5);
        assert_eq!(count_with_core(5, 2, &part("1")).unwrap(), 5);
        assert_eq!(count_with_core(6, 3, &Partition::empty()).unwrap(), 9);
        assert_eq!(count_with_core(5, 3, &Partition::empty()).unwrap(), 0);
        assert_eq!(
            count_with_core(6, 2, &part("2")),
            Err(PartsError::NotACore(part("2"), 2))
        );
    }

    #[test]
    fn count_with_core_matches_enumeration() {
        for n in 0..=20 {
            for e in 1..=4 {
                let classes = core_classes(n, e).unwrap();
                for mu in cores_up_to(n, e) {
                    let found = classes.get(&mu).copied().unwrap_or(0);
                    assert_eq!(
                        count_with_core(n, e, &mu).unwrap(),
                        found,
                        "n={n} e={e} mu={mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn counts_over_cores_sum_to_partition_number() {
        let p = partition_counts(30);
        for n in 0..=30 {
            for e in 1..=6 {
                let total: u64 = cores_up_to(n, e)
                    .iter()
                    .map(|mu| count_with_core(n, e, mu).unwrap())
                    .sum();
                assert_eq!(total, p[n as usize], "n={n} e={e}");
            }
        }
    }

    #[test]
    fn principal_block_sizes() {
        assert_eq!(sym_principal_block_size(6, 3).unwrap(), 9);
        assert_eq!(sym_principal_block_size(4, 5).unwrap(), 1);
        for p in [2, 3, 5, 7] {
            for m in 2..=4 {
                assert!(sym_principal_block_size(p * m, p).unwrap() >= 5);
            }
        }
    }

    #[test]
    fn residue_does_not_change_principal_block_size() {
        assert!(mo83_identity_check(7, 3).unwrap());
        assert!(mo83_identity_check(5, 5).unwrap());
        assert!(mo83_identity_check(8, 3).unwrap());
        assert_eq!(sym_principal_block_size(8, 3).unwrap(), 9);
        for n in 1..=30 {
            for p in [2, 3, 5, 7] {
                assert!(mo83_identity_check(n, p).unwrap());
            }
        }
    }

    proptest! {
        #[test]
        fn core_is_idempotent_and_independent_of_bead_count(
            raw in proptest::collection::vec(1u32..8, 0..7),
            e in 1u32..6,
            extra in 0usize..7,
        ) {
            let mut parts = raw;
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let lambda = Partition::new(parts).unwrap();
            let core = e_core(&lambda, e).unwrap();
            prop_assert_eq!(e_core(&core, e).unwrap(), core.clone());
            prop_assert_eq!(core.size() % e, lambda.size() % e);
            let other = Abacus::with_beads(&lambda, e, lambda.len() + extra);
            prop_assert_eq!(other.core(), core);
            prop_assert_eq!(other.weight(), e_weight(&lambda, e).unwrap());
        }
    }
}
