//! The recursive computation of `ch OT_n` and `ch M_n`.
//!
//! `ch OT_n` is the sum over tuples `(ν_1, .., ν_n)` with `Σ i|ν_i| = n` of
//!
//! ```text
//! <s_{ν_1} ⋯ s_{ν_n}, ch C_{Σ|ν_i|}>  Π_i s_{ν_i}[ch M_i^c * ch R_i]
//! ```
//!
//! and `ch M_n` is recovered from it by Kronecker division by `ch R_n`.
//! Since `M_n` lives in `q`-degrees `0..=n-2` and `M_n^c` starts in degree
//! `n`, truncating at `q^{n-2}` makes the recursion depend only on
//! `M_1, .., M_{n-1}`.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{SystemTime, UNIX_EPOCH};

use num::{BigRational, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::rep::{ch_c, ch_r};
use crate::series::QSeries;
use crate::symfunc::{Basis, SymFunc};

/// `max(n - 2, 0)`: the cap at which `ch M_n` is exact and at which the
/// truncated `ch OT_n` can be computed without knowing `M_n`.
pub fn natural_cap(n: usize) -> usize {
    n.saturating_sub(2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecursionOptions {
    /// Skip tuples whose lowest possible `q`-degree already exceeds the cap.
    pub prune: bool,
}

impl Default for RecursionOptions {
    fn default() -> Self {
        RecursionOptions { prune: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MnEntry {
    /// Schur expansion at cap `natural_cap(n)`.
    pub value: SymFunc,
    pub created_unix: u64,
    /// Set once the identity suite has passed through `n = 8`.
    pub trusted: bool,
}

/// `ch M_1, .., ch M_k`, filled strictly in order of `n`.
#[derive(Clone, Debug, Default)]
pub struct MnCache {
    entries: Vec<MnEntry>,
}

pub fn now_unix() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

impl MnCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Largest `n` with an entry; zero for an empty cache.
    pub fn max_n(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, n: usize) -> Option<&SymFunc> {
        self.entry(n).map(|e| &e.value)
    }

    pub fn entry(&self, n: usize) -> Option<&MnEntry> {
        n.checked_sub(1).and_then(|i| self.entries.get(i))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &MnEntry)> {
        self.entries.iter().enumerate().map(|(i, e)| (i + 1, e))
    }

    /// Appends `ch M_n`; `n` must be one past the current maximum.
    pub fn insert(&mut self, n: usize, value: SymFunc) -> Result<()> {
        self.insert_entry(
            n,
            MnEntry {
                value,
                created_unix: now_unix(),
                trusted: false,
            },
        )
    }

    pub fn insert_entry(&mut self, n: usize, entry: MnEntry) -> Result<()> {
        if n != self.max_n() + 1 {
            return Err(Error::CacheOrder {
                expected: self.max_n() + 1,
                got: n,
            });
        }
        let v = &entry.value;
        if v.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: v.degree(),
            });
        }
        if v.cap() != natural_cap(n) {
            return Err(Error::CapMismatch {
                left: natural_cap(n),
                right: v.cap(),
            });
        }
        let value = v.schur_positive()?;
        self.entries.push(MnEntry { value, ..entry });
        Ok(())
    }

    pub fn mark_trusted(&mut self) {
        for e in &mut self.entries {
            e.trusted = true;
        }
    }

    /// Computes and stores every missing `ch M_k` for `k <= n`.
    pub fn extend_to(&mut self, n: usize, opts: RecursionOptions) -> Result<()> {
        while self.max_n() < n {
            let k = self.max_n() + 1;
            if k <= 2 {
                self.insert(k, ch_m_base(k)?)?;
            } else {
                extract_m(self, k, opts)?;
            }
        }
        Ok(())
    }
}

/// `ch M_1 = s_1` and `ch M_2 = s_2`.
pub fn ch_m_base(i: usize) -> Result<SymFunc> {
    match i {
        1 | 2 => Ok(SymFunc::schur(Partition::row(i), 0)),
        _ => Err(Error::InvalidDegree {
            what: "base case (only n = 1, 2)",
            n: i,
            min: 1,
        }),
    }
}

/// `ch M_i^c`: the coefficient of `q^d` is the coefficient of
/// `q^{2(i-1)-d}` in `ch M_i`.
pub fn ch_m_compact(cache: &MnCache, i: usize, cap: usize) -> Result<SymFunc> {
    let m = cache.get(i).ok_or(Error::CacheMiss {
        have: cache.max_n(),
        need: i,
    })?;
    let top = 2 * (i - 1);
    let terms = m.terms().map(|(lam, c)| {
        let mut flipped = vec![BigRational::zero(); top + 1];
        for (d, x) in c.coeffs().iter().enumerate() {
            flipped[top - d] = x.clone();
        }
        (lam.clone(), QSeries::from_coeffs(flipped, cap))
    });
    SymFunc::from_terms(i, Basis::Schur, cap, terms)
}

/// One summand: `λ ⊢ n` and, for each part size `i` occurring in `λ` with
/// multiplicity `m_i`, a partition `ν_i ⊢ m_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OtTerm {
    pub lambda: Partition,
    pub nus: Vec<(usize, Partition)>,
}

impl OtTerm {
    /// Lowest `q`-degree the summand can reach: `ch M_i^c` starts at `q^i`
    /// for `i >= 2`.
    pub fn min_degree(&self) -> usize {
        self.nus
            .iter()
            .filter(|(i, _)| *i >= 2)
            .map(|(i, nu)| i * nu.size())
            .sum()
    }

    fn length(&self) -> usize {
        self.lambda.len()
    }
}

/// All summands in deterministic order: `λ` lexicographic descending, then
/// each `ν_i` lexicographic descending with `i` increasing.
pub fn ot_terms(n: usize) -> Vec<OtTerm> {
    let mut out = Vec::new();
    for lam in enumerate_partitions(n) {
        let sizes: Vec<(usize, usize)> = lam
            .multiplicities()
            .iter()
            .enumerate()
            .filter(|(i, &m)| *i > 0 && m > 0)
            .map(|(i, &m)| (i, m))
            .collect();
        let mut tuples: Vec<Vec<(usize, Partition)>> = vec![Vec::new()];
        for &(i, m) in &sizes {
            let choices = enumerate_partitions(m);
            tuples = tuples
                .into_iter()
                .flat_map(|prefix| {
                    choices.iter().map(move |nu| {
                        let mut t = prefix.clone();
                        t.push((i, nu.clone()));
                        t
                    })
                })
                .collect();
        }
        out.extend(tuples.into_iter().map(|nus| OtTerm {
            lambda: lam.clone(),
            nus,
        }));
    }
    out
}

/// `ch OT_n` modulo `q^{cap+1}`, in the power-sum basis.
///
/// Requires `ch M_1..M_{n-1}` in `cache` and `cap <= natural_cap(n)`.
pub fn ch_ot_truncated(
    cache: &MnCache,
    n: usize,
    cap: usize,
    opts: RecursionOptions,
) -> Result<SymFunc> {
    if n == 0 {
        return Err(Error::InvalidDegree {
            what: "ch OT",
            n,
            min: 1,
        });
    }
    if cap > natural_cap(n) {
        return Err(Error::CapTooLarge {
            n,
            cap,
            max: natural_cap(n),
        });
    }
    if cache.max_n() + 1 < n {
        return Err(Error::CacheMiss {
            have: cache.max_n(),
            need: n - 1,
        });
    }

    let terms: Vec<OtTerm> = ot_terms(n)
        .into_iter()
        .filter(|t| !opts.prune || t.min_degree() <= cap)
        .collect();

    let sizes: BTreeSet<usize> = terms
        .iter()
        .flat_map(|t| t.nus.iter().map(|(i, _)| *i))
        .collect();
    let inner: BTreeMap<usize, SymFunc> = sizes
        .par_iter()
        .map(|&i| inner_factor(cache, n, i, cap).map(|f| (i, f)))
        .collect::<Result<_>>()?;

    let needed: BTreeSet<(usize, Partition)> =
        terms.iter().flat_map(|t| t.nus.iter().cloned()).collect();
    let needed: Vec<(usize, Partition)> = needed.into_iter().collect();
    let plethysms: BTreeMap<(usize, Partition), SymFunc> = needed
        .par_iter()
        .map(|(i, nu)| {
            let f = SymFunc::schur(nu.clone(), cap).plethysm(&inner[i])?;
            Ok(((*i, nu.clone()), f))
        })
        .collect::<Result<_>>()?;

    let lengths: BTreeSet<usize> = terms.iter().map(OtTerm::length).collect();
    let conf: BTreeMap<usize, SymFunc> = lengths
        .iter()
        .map(|&l| ch_c(l, cap).map(|c| (l, c)))
        .collect::<Result<_>>()?;

    let values: Vec<SymFunc> = terms
        .par_iter()
        .map(|t| {
            let mut schur_product = SymFunc::one(cap);
            let mut factor = SymFunc::one(cap);
            for key in &t.nus {
                schur_product = schur_product.outer_product(&SymFunc::schur(key.1.clone(), cap))?;
                factor = factor.outer_product(&plethysms[key])?;
            }
            let bracket = schur_product.hall_inner(&conf[&t.length()])?;
            factor.mul_series(&bracket)
        })
        .collect::<Result<_>>()?;

    values
        .iter()
        .try_fold(SymFunc::zero(n, cap, Basis::PowerSum), |acc, v| acc.try_add(v))
}

/// `ch M_i^c * ch R_i`, with the `i = 1` factor fixed to `s_1`. For `i = n`
/// (only reached without pruning) the factor vanishes below `q^n`, hence
/// modulo `q^{cap+1}`.
fn inner_factor(cache: &MnCache, n: usize, i: usize, cap: usize) -> Result<SymFunc> {
    if i == 1 {
        Ok(SymFunc::schur(Partition::row(1), cap))
    } else if i == n {
        Ok(SymFunc::zero(i, cap, Basis::PowerSum))
    } else {
        ch_m_compact(cache, i, cap)?.kronecker(&ch_r(i, cap)?)
    }
}

/// Computes `ch M_n` from the truncated `ch OT_n` by Kronecker division by
/// `ch R_n` and appends it to `cache`.
pub fn extract_m(cache: &mut MnCache, n: usize, opts: RecursionOptions) -> Result<SymFunc> {
    if let Some(m) = cache.get(n) {
        return Ok(m.clone());
    }
    let cap = natural_cap(n);
    let ot = ch_ot_truncated(cache, n, cap, opts)?;
    let m = divide_by_r(&ot, n)?;
    cache.insert(n, m.clone())?;
    Ok(m)
}

/// `M = OT / R_n` degree by degree, asserting an `N[q]`-valued result.
pub fn divide_by_r(ot: &SymFunc, n: usize) -> Result<SymFunc> {
    let quotient = ot.kronecker_divide(&ch_r(n, ot.cap())?)?;
    quotient.schur_positive().map_err(|e| Error::DivisionFailed {
        what: "ch M",
        n,
        reason: e.to_string(),
    })
}
