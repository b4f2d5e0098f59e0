//! Closed-form graded Frobenius characteristics of the named representations.
//!
//! `C_n` is the cohomology of `n` labeled points in `R^3`, `D_n` that of `n`
//! points in `SU(2)` modulo left translation, `R_n` the coinvariant-free
//! polynomial ring `C[z_1..z_n]/(z_1+..+z_n)` and `W_n` its truncation to
//! degree two. Degrees are halved: `q^i` tracks cohomological degree `2i`.

use std::sync::LazyLock;

use num::{BigInt, BigRational};

use crate::error::{Error, Result};
use crate::memo::OnceMap;
use crate::partition::{enumerate_partitions, Partition};
use crate::series::QSeries;
use crate::symfunc::{Basis, SymFunc};

pub fn mobius(n: usize) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut result = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

pub fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| num::integer::gcd(k, n) == 1).count()
}

fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |&d| n.is_multiple_of(d))
}

/// `(1/n) Σ_{d|n} w(d) p_d^{n/d}`.
fn cyclic_sum(n: usize, cap: usize, weight: impl Fn(usize) -> i64) -> SymFunc {
    let terms = divisors(n).map(|d| {
        let c = BigRational::new(BigInt::from(weight(d)), BigInt::from(n));
        (Partition::new(vec![d; n / d]).unwrap(), QSeries::monomial(c, 0, cap))
    });
    SymFunc::from_terms(n, Basis::PowerSum, cap, terms).expect("well-formed terms")
}

fn require(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::InvalidDegree { what, n, min })
    } else {
        Ok(())
    }
}

/// `ℓ_n`, the characteristic of a primitive character of `Z_n` induced to
/// `S_n`: `(1/n) Σ_{d|n} μ(d) p_d^{n/d}`.
pub fn lyndon(n: usize, cap: usize) -> Result<SymFunc> {
    require("lyndon", n, 1)?;
    Ok(cyclic_sum(n, cap, mobius))
}

/// `C[S_n/Z_n]`: `(1/n) Σ_{d|n} φ(d) p_d^{n/d}`, with cap 0.
pub fn ch_cyclic_triv(n: usize) -> Result<SymFunc> {
    require("cyclic", n, 1)?;
    Ok(cyclic_sum(n, 0, |d| euler_phi(d) as i64))
}

/// The regular representation `p_1^n`, with cap 0.
pub fn ch_regular(n: usize) -> Result<SymFunc> {
    require("regular", n, 1)?;
    Ok(SymFunc::power_sum(Partition::column(n), 0))
}

/// `Σ_{λ⊢n} q^{Σ(i-1)m_i} Π_i h_{m_i}[ℓ_i]`.
pub fn ch_c(n: usize, cap: usize) -> Result<SymFunc> {
    static MEMO: LazyLock<OnceMap<(usize, usize), SymFunc>> = LazyLock::new(OnceMap::new);
    require("ch C", n, 1)?;
    MEMO.get_or_try_init(&(n, cap), || {
        let mut total = SymFunc::zero(n, cap, Basis::PowerSum);
        for lam in enumerate_partitions(n) {
            let mut term = SymFunc::one(cap);
            for (i, &m) in lam.multiplicities().iter().enumerate().skip(1) {
                if m > 0 {
                    let factor = SymFunc::complete(m, cap).plethysm(&lyndon(i, cap)?)?;
                    term = term.outer_product(&factor)?;
                }
            }
            total = total.try_add(&term.shift(n - lam.len()))?;
        }
        Ok(total)
    })
    .map(|f| (*f).clone())
}

/// Principal specialization `s_λ(1, q, q^2, ...) = q^{n(λ)} / Π_cells (1 - q^{hook})`.
pub fn principal_specialization(lambda: &Partition, cap: usize) -> QSeries {
    let mut s = QSeries::one(cap).shift(lambda.n_statistic());
    for h in lambda.hook_lengths().into_iter().flatten() {
        s = s.mul_unchecked(&QSeries::geometric_hook(h, cap));
    }
    s
}

/// `(1-q) Σ_{λ⊢n} s_λ(1, q, q^2, ...) s_λ`.
pub fn ch_r(n: usize, cap: usize) -> Result<SymFunc> {
    static MEMO: LazyLock<OnceMap<(usize, usize), SymFunc>> = LazyLock::new(OnceMap::new);
    require("ch R", n, 1)?;
    MEMO.get_or_try_init(&(n, cap), || {
        let one_minus_q = QSeries::from_ints([1, -1], cap);
        let terms = enumerate_partitions(n).into_iter().map(|lam| {
            let c = principal_specialization(&lam, cap).mul_unchecked(&one_minus_q);
            (lam, c)
        });
        Ok(SymFunc::from_terms(n, Basis::Schur, cap, terms)?.to_powersum())
    })
    .map(|f| (*f).clone())
}

/// Trivial representation in degree zero plus the irreducible permutation
/// representation in degree one.
pub fn ch_w(n: usize, cap: usize) -> Result<SymFunc> {
    require("ch W", n, 2)?;
    let standard = Partition::new(vec![n - 1, 1]).expect("n >= 2");
    SymFunc::from_terms(
        n,
        Basis::Schur,
        cap,
        [
            (Partition::row(n), QSeries::one(cap)),
            (standard, QSeries::one(cap).shift(1)),
        ],
    )
}

/// `ch D_n`, the Kronecker quotient `ch C_n / ch W_n`, in the Schur basis.
///
/// Fails with [`Error::DivisionFailed`] unless the quotient has
/// coefficients in `N[q]`.
pub fn ch_d(n: usize, cap: usize) -> Result<SymFunc> {
    static MEMO: LazyLock<OnceMap<(usize, usize), SymFunc>> = LazyLock::new(OnceMap::new);
    require("ch D", n, 2)?;
    MEMO.get_or_try_init(&(n, cap), || {
        let quotient = ch_c(n, cap)?.kronecker_divide(&ch_w(n, cap)?)?;
        quotient.schur_positive().map_err(|e| Error::DivisionFailed {
            what: "ch D",
            n,
            reason: e.to_string(),
        })
    })
    .map(|f| (*f).clone())
}

/// `Π_{k=1}^{m} (1 + kq)` truncated at `cap`.
pub fn poincare_product(m: usize, cap: usize) -> QSeries {
    (1..=m).fold(QSeries::one(cap), |acc, k| {
        acc.mul_unchecked(&QSeries::from_ints([1, k as i64], cap))
    })
}

/// `1 / (1-q)^k` truncated at `cap`.
pub fn inverse_power_of_one_minus_q(k: usize, cap: usize) -> QSeries {
    let geom = QSeries::geometric_hook(1, cap);
    (0..k).fold(QSeries::one(cap), |acc, _| acc.mul_unchecked(&geom))
}
