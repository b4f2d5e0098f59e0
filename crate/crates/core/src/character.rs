//! Irreducible characters of the symmetric groups via Murnaghan–Nakayama.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock};

use num::{BigInt, One, Zero};

use crate::memo::OnceMap;
use crate::partition::{enumerate_partitions, Partition};

/// The full character table of `S_n`, rows indexed by irreducibles `λ`
/// and columns by cycle types `μ`, both in lexicographic descending order.
#[derive(Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<BigInt>>,
    z: Vec<BigInt>,
}

impl CharacterTable {
    fn build(n: usize) -> Self {
        let partitions = enumerate_partitions(n);
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|lam| {
                partitions
                    .iter()
                    .map(|mu| murnaghan_nakayama(lam, mu, &mut memo))
                    .collect()
            })
            .collect();
        let z = partitions.iter().map(Partition::z).collect();
        CharacterTable {
            n,
            partitions,
            index,
            values,
            z,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Partitions of `n`, lexicographic descending.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `χ^λ_μ` by position in [`Self::partitions`].
    pub fn value_at(&self, lambda: usize, mu: usize) -> &BigInt {
        &self.values[lambda][mu]
    }

    /// `χ^λ_μ`; panics if either argument is not a partition of `n`.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> &BigInt {
        let (l, m) = (self.index[lambda], self.index[mu]);
        &self.values[l][m]
    }

    /// Centralizer order `z_μ` by position.
    pub fn z_at(&self, mu: usize) -> &BigInt {
        &self.z[mu]
    }
}

/// Process-wide memoized character table of `S_n`.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    static TABLES: LazyLock<OnceMap<usize, CharacterTable>> = LazyLock::new(OnceMap::new);
    TABLES.get_or_init(&n, || CharacterTable::build(n))
}

fn beta_set(lambda: &Partition) -> Vec<usize> {
    let len = lambda.len();
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect()
}

fn from_beta_set(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    Partition::from_unsorted(
        beta.iter()
            .enumerate()
            .map(|(i, &b)| b - (len - 1 - i))
            .collect(),
    )
}

/// Removes every rim hook of length `r`, returning the remaining shape and
/// the hook's sign `(-1)^{height}`.
fn rim_hooks(lambda: &Partition, r: usize) -> Vec<(Partition, bool)> {
    let beta = beta_set(lambda);
    let mut out = Vec::new();
    for (pos, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let crossed = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut next = beta.clone();
        next[pos] = target;
        out.push((from_beta_set(next), crossed % 2 == 1));
    }
    out
}

fn murnaghan_nakayama(
    lambda: &Partition,
    mu: &Partition,
    memo: &mut HashMap<(Partition, Partition), BigInt>,
) -> BigInt {
    if mu.is_empty() {
        return if lambda.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let rest = mu.tail();
    let mut total = BigInt::zero();
    for (shape, negative) in rim_hooks(lambda, mu.parts()[0]) {
        let v = murnaghan_nakayama(&shape, &rest, memo);
        if negative {
            total -= v;
        } else {
            total += v;
        }
    }
    memo.insert(key, total.clone());
    total
}
