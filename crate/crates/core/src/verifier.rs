//! Named identity checks over `ch M_n`, `ch D_n` and the closed forms.
//!
//! A check returns a [`CheckReport`]; a mismatch is a `fail` report with
//! witnesses, never an error. Errors are reserved for computations that
//! cannot be completed, such as a division with a non-polynomial quotient.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::partition::Partition;
use crate::recursion::{ch_ot_truncated, divide_by_r, natural_cap, MnCache, RecursionOptions};
use crate::rep::{ch_c, ch_cyclic_triv, ch_d, ch_regular, ch_w, poincare_product};
use crate::series::QSeries;
use crate::symfunc::SymFunc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// `ch M_n = ch D_n`.
    ConjectureMain,
    /// Graded dimensions of `M_n` and `D_n` against `Π_{k=1}^{n-2}(1+kq)`
    /// and the `h`-polynomial of `K_n`.
    Poincare,
    /// `Res ch D_n = ch C_{n-1}`.
    Restriction,
    /// `D_n` and `M_n` at `q = 1` against `C[S_n/Z_n]`.
    Ungraded,
    /// `ch D_n * ch W_n = ch C_n`, with `D_n` taken at cap `n-2`.
    Cdw,
    /// `C_n` at `q = 1` against the regular representation.
    Regular,
    /// `M_n` and `D_n` in `q`-degrees 0, 1, 2, with `M_n` recomputed at the
    /// lower cap.
    Degrees024,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::ConjectureMain,
        Check::Poincare,
        Check::Restriction,
        Check::Ungraded,
        Check::Cdw,
        Check::Regular,
        Check::Degrees024,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::ConjectureMain => "conjecture_main",
            Check::Poincare => "poincare",
            Check::Restriction => "restriction",
            Check::Ungraded => "ungraded",
            Check::Cdw => "cdw",
            Check::Regular => "regular",
            Check::Degrees024 => "degrees_024",
        }
    }

    pub fn from_name(name: &str) -> Option<Check> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    pub fn names() -> Vec<&'static str> {
        Self::ALL.iter().map(|c| c.name()).collect()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One discrepant cell. `partition` is absent for comparisons of plain
/// series; `q_degree` is absent when the shapes themselves disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: String,
    pub partition: Option<Partition>,
    pub q_degree: Option<usize>,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: &'static str,
    pub n: usize,
    pub status: Status,
    pub witnesses: Vec<Witness>,
}

impl CheckReport {
    fn from_witnesses(check: Check, n: usize, witnesses: Vec<Witness>) -> Self {
        let status = if witnesses.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        CheckReport {
            check: check.name(),
            n,
            status,
            witnesses,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Compact single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Cellwise comparison of Schur expansions.
pub fn compare_symfuncs(label: &str, left: &SymFunc, right: &SymFunc) -> Vec<Witness> {
    if left.degree() != right.degree() || left.cap() != right.cap() {
        return vec![Witness {
            label: label.to_string(),
            partition: None,
            q_degree: None,
            left: format!("degree {} cap {}", left.degree(), left.cap()),
            right: format!("degree {} cap {}", right.degree(), right.cap()),
        }];
    }
    let l = left.to_schur();
    let r = right.to_schur();
    let shapes: BTreeSet<&Partition> = l.terms().chain(r.terms()).map(|(p, _)| p).collect();
    let mut out = Vec::new();
    for p in shapes.into_iter().rev() {
        let (a, b) = (l.coeff(p), r.coeff(p));
        for d in 0..=l.cap() {
            if a.coeff(d) != b.coeff(d) {
                out.push(Witness {
                    label: label.to_string(),
                    partition: Some(p.clone()),
                    q_degree: Some(d),
                    left: a.coeff(d).to_string(),
                    right: b.coeff(d).to_string(),
                });
            }
        }
    }
    out
}

/// Degreewise comparison of series.
pub fn compare_series(label: &str, left: &QSeries, right: &QSeries) -> Vec<Witness> {
    let cap = left.cap().max(right.cap());
    (0..=cap)
        .filter(|&d| left.cap() < d || right.cap() < d || left.coeff(d) != right.coeff(d))
        .map(|d| Witness {
            label: label.to_string(),
            partition: None,
            q_degree: Some(d),
            left: left.coeff(d).to_string(),
            right: right.coeff(d).to_string(),
        })
        .collect()
}

fn cached_m(cache: &MnCache, n: usize) -> Result<&SymFunc> {
    cache.get(n).ok_or(Error::CacheMiss {
        have: cache.max_n(),
        need: n,
    })
}

/// Runs one check. `cache` must hold `ch M_1, .., ch M_n`.
pub fn run_check(check: Check, n: usize, cache: &MnCache, opts: RecursionOptions) -> Result<CheckReport> {
    if n < 2 {
        return Err(Error::InvalidDegree {
            what: "verification",
            n,
            min: 2,
        });
    }
    let cap = natural_cap(n);
    let witnesses = match check {
        Check::ConjectureMain => compare_symfuncs("M vs D", cached_m(cache, n)?, &ch_d(n, cap)?),
        Check::Poincare => {
            let product = poincare_product(n - 2, cap);
            let h = graph::h_poly(&Graph::complete(n)?, cap)?;
            let mut w = compare_series("dim M", &cached_m(cache, n)?.graded_dimension(), &product);
            w.extend(compare_series("dim D", &ch_d(n, cap)?.graded_dimension(), &product));
            w.extend(compare_series("h(K_n)", &h, &product));
            w
        }
        Check::Restriction => {
            compare_symfuncs("Res D vs C", &ch_d(n, cap)?.restrict()?, &ch_c(n - 1, cap)?)
        }
        Check::Ungraded => {
            let cyclic = ch_cyclic_triv(n)?;
            let mut w = compare_symfuncs("D at q=1", &ch_d(n, cap)?.specialize_q1(), &cyclic);
            w.extend(compare_symfuncs(
                "M at q=1",
                &cached_m(cache, n)?.specialize_q1(),
                &cyclic,
            ));
            w
        }
        Check::Cdw => {
            let top = n - 1;
            let d = ch_d(n, cap)?.extend(top);
            compare_symfuncs("D*W vs C", &d.kronecker(&ch_w(n, top)?)?, &ch_c(n, top)?)
        }
        Check::Regular => compare_symfuncs(
            "C at q=1",
            &ch_c(n, n - 1)?.specialize_q1(),
            &ch_regular(n)?,
        ),
        Check::Degrees024 => {
            let low = cap.min(2);
            let m = divide_by_r(&ch_ot_truncated(cache, n, low, opts)?, n)?;
            compare_symfuncs("M vs D (low degrees)", &m, &ch_d(n, low)?)
        }
    };
    Ok(CheckReport::from_witnesses(check, n, witnesses))
}

/// Fills `cache` through `max_n`, then runs every `(check, n)` pair with
/// `2 <= n <= max_n` in parallel. Reports come back ordered by check, then
/// by `n`.
pub fn run_suite(
    cache: &mut MnCache,
    checks: &[Check],
    max_n: usize,
    opts: RecursionOptions,
) -> Result<Vec<CheckReport>> {
    if max_n < 2 {
        return Err(Error::InvalidDegree {
            what: "verification",
            n: max_n,
            min: 2,
        });
    }
    cache.extend_to(max_n, opts)?;
    let cache = &*cache;
    let jobs: Vec<(Check, usize)> = checks
        .iter()
        .flat_map(|&c| (2..=max_n).map(move |n| (c, n)))
        .collect();
    jobs.par_iter()
        .map(|&(c, n)| run_check(c, n, cache, opts))
        .collect()
}
