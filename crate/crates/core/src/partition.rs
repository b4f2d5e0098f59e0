//! Integer partitions and the statistics attached to them.
//!
//! Partitions compare lexicographically on their parts, so iterating a
//! sorted collection in reverse yields the lexicographic descending order
//! used for every emission in this crate.

use std::fmt;

use num::{BigInt, One};
use serde::{Deserialize, Deserializer, Serialize};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// The unique partition of zero.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Returns `None` unless `parts` is weakly decreasing with positive entries.
    pub fn new(parts: Vec<usize>) -> Option<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        let positive = parts.iter().all(|&p| p > 0);
        (decreasing && positive).then_some(Partition(parts))
    }

    /// Sorts `parts` and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The one-row partition `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// `m[i]` is the number of parts equal to `i`, for `0 <= i <= n`
    /// (`m[0]` is always zero).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.size() + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// Order of the centralizer of a permutation of this cycle type,
    /// `prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                z *= BigInt::from(i) * BigInt::from(k);
            }
        }
        z
    }

    pub fn conjugate(&self) -> Self {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|c| self.0.iter().take_while(|&&p| p >= c).count())
                .collect(),
        )
    }

    /// Hook lengths row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &row)| (0..row).map(|j| (row - j) + (conj.0[j] - i) - 1).collect())
            .collect()
    }

    /// Dimension of the irreducible representation, by the hook-length formula.
    pub fn dimension(&self) -> BigInt {
        let mut num = factorial(self.size());
        for h in self.hook_lengths().into_iter().flatten() {
            num /= BigInt::from(h);
        }
        num
    }

    /// `sum_i (i-1) lambda_i`.
    pub fn n_statistic(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Partitions obtained by deleting one removable corner box.
    pub fn remove_one_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.0.len() {
            let next = self.0.get(i + 1).copied().unwrap_or(0);
            if self.0[i] > next {
                let mut parts = self.0.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push(Partition(parts));
            }
        }
        out
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x >= y {
                        parts.push(x);
                        a.next();
                    } else {
                        parts.push(y);
                        b.next();
                    }
                }
                (Some(_), None) => parts.extend(a.by_ref()),
                (None, Some(_)) => parts.extend(b.by_ref()),
                (None, None) => break,
            }
        }
        Partition(parts)
    }

    /// Every part multiplied by `k`.
    pub fn scale(&self, k: usize) -> Partition {
        Partition(self.0.iter().map(|&p| p * k).collect())
    }

    /// Drops the first (largest) part.
    pub(crate) fn tail(&self) -> Partition {
        Partition(self.0.get(1..).unwrap_or(&[]).to_vec())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts.clone()).ok_or_else(|| {
            serde::de::Error::custom(format!("{parts:?} is not a partition"))
        })
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// All partitions of `n` in lexicographic descending order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = if n == 0 { Vec::new() } else { vec![n] };
    loop {
        out.push(Partition(cur.clone()));
        let Some(k) = cur.iter().rposition(|&p| p > 1) else {
            break;
        };
        let mut rem: usize = cur[k + 1..].iter().sum::<usize>() + 1;
        let v = cur[k] - 1;
        cur.truncate(k);
        cur.push(v);
        while rem >= v {
            cur.push(v);
            rem -= v;
        }
        if rem > 0 {
            cur.push(rem);
        }
    }
    out
}
