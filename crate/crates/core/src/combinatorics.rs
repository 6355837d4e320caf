//! Multinomials, set partitions of `[n]` into a fixed number of blocks, and
//! block deficiencies.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `top! / (∏ partsᵢ! · (top − Σ partsᵢ)!)`, and exactly zero when the
/// parts overflow `top`.
pub fn multinomial(top: i64, parts: &[i64]) -> Result<BigInt> {
    if top < 0 || parts.iter().any(|&p| p < 0) {
        return Err(Error::InvalidArgument(format!(
            "multinomial({top}; {parts:?}) has a negative entry"
        )));
    }
    let used: i64 = parts.iter().sum();
    if used > top {
        return Ok(BigInt::zero());
    }
    // Product of binomials avoids the large intermediate factorials.
    let mut remaining = top;
    let mut acc = BigInt::one();
    for &p in parts {
        acc *= binomial(remaining, p);
        remaining -= p;
    }
    Ok(acc)
}

/// Stirling number of the second kind, by `S(n,m) = m·S(n−1,m) + S(n−1,m−1)`.
pub fn stirling2(n: usize, m: usize) -> BigInt {
    let mut row = vec![BigInt::zero(); m + 1];
    row[0] = BigInt::one();
    for _ in 0..n {
        for j in (1..=m).rev() {
            row[j] = &row[j] * j + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    row[m].clone()
}

/// A partition of `{1, …, n}`.
///
/// Blocks of size ≥ 2 come first, then singletons; each group is ordered by
/// smallest element. `k` counts the blocks of size ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    n: usize,
    k: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Canonicalizes an arbitrary list of blocks over `1..=n`.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidArgument("empty block".into()));
            }
            for &i in block {
                if i == 0 || i > n || seen[i] {
                    return Err(Error::InvalidArgument(format!(
                        "element {i} out of range or repeated"
                    )));
                }
                seen[i] = true;
            }
        }
        if seen.iter().skip(1).any(|s| !s) {
            return Err(Error::InvalidArgument("blocks do not cover [n]".into()));
        }
        Ok(Self::canonical(n, blocks))
    }

    fn canonical(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        let (mut big, mut singles): (Vec<_>, Vec<_>) =
            blocks.into_iter().map(sorted).partition(|b| b.len() >= 2);
        big.sort_by_key(|b| b[0]);
        singles.sort_by_key(|b| b[0]);
        let k = big.len();
        big.extend(singles);
        SetPartition { n, k, blocks: big }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Index: number of blocks of size ≥ 2.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn big_blocks(&self) -> &[Vec<usize>] {
        &self.blocks[..self.k]
    }

    pub fn singletons(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks[self.k..].iter().map(|b| b[0])
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Iterator over the partitions of `[n]` into exactly `m` blocks.
///
/// Walks restricted-growth strings in lexicographic order, so the output
/// order is fixed.
#[derive(Debug, Clone)]
pub struct MPartitions {
    n: usize,
    m: usize,
    rgs: Vec<usize>,
    done: bool,
}

pub fn enumerate_m_partitions(n: usize, m: usize) -> MPartitions {
    let done = m < 1 || m > n;
    let mut rgs = vec![0; n];
    if !done {
        // Smallest string using all m labels: zeros, then 1, 2, …, m−1.
        for (offset, slot) in rgs[n - (m - 1)..].iter_mut().enumerate() {
            *slot = offset + 1;
        }
    }
    MPartitions { n, m, rgs, done }
}

impl MPartitions {
    fn current(&self) -> SetPartition {
        let mut blocks = vec![Vec::new(); self.m];
        for (i, &label) in self.rgs.iter().enumerate() {
            blocks[label].push(i + 1);
        }
        SetPartition::canonical(self.n, blocks)
    }

    fn advance(&mut self) {
        let (n, m) = (self.n, self.m);
        let mut prefix_max = vec![0; n];
        for i in 1..n {
            prefix_max[i] = prefix_max[i - 1].max(self.rgs[i]);
        }
        for i in (1..n).rev() {
            let cap = prefix_max[i - 1] + 1;
            let next = self.rgs[i] + 1;
            if next > cap || next > m - 1 {
                continue;
            }
            let new_max = prefix_max[i - 1].max(next);
            let tail = n - 1 - i;
            let missing = m - 1 - new_max;
            if tail < missing {
                continue;
            }
            self.rgs[i] = next;
            for slot in &mut self.rgs[i + 1..] {
                *slot = 0;
            }
            for (offset, slot) in self.rgs[n - missing..].iter_mut().enumerate() {
                *slot = new_max + 1 + offset;
            }
            return;
        }
        self.done = true;
    }
}

impl Iterator for MPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let out = self.current();
        self.advance();
        Some(out)
    }
}

/// `eⱼ = |Sⱼ| − 2 − Σ_{i∈Sⱼ} dᵢ` for each block of size ≥ 2, in block order.
pub fn deficiencies(p: &SetPartition, d: &[usize]) -> Result<Vec<i64>> {
    if d.len() != p.n() {
        return Err(Error::InvalidArgument(format!(
            "exponent list has length {}, partition is of [{}]",
            d.len(),
            p.n()
        )));
    }
    Ok(p.big_blocks()
        .iter()
        .map(|block| {
            let mass: usize = block.iter().map(|&i| d[i - 1]).sum();
            block.len() as i64 - 2 - mass as i64
        })
        .collect())
}

/// `∏ⱼ multinomial(|Sⱼ| − 2; {dᵢ}_{i∈Sⱼ})` over the blocks of size ≥ 2.
pub fn block_multinomial_product(p: &SetPartition, d: &[usize]) -> BigInt {
    let mut acc = BigInt::one();
    for block in p.big_blocks() {
        let parts: Vec<i64> = block.iter().map(|&i| d[i - 1] as i64).collect();
        let term =
            multinomial(block.len() as i64 - 2, &parts).expect("nonnegative by construction");
        if term.is_zero() {
            return term;
        }
        acc *= term;
    }
    acc
}
