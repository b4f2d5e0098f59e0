//! Truncated power series in `q` with exact rational coefficients.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial in `q` reduced modulo `q^{cap+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    cap: usize,
    coeffs: Vec<BigRational>,
}

impl QSeries {
    pub fn zero(cap: usize) -> Self {
        QSeries {
            cap,
            coeffs: vec![BigRational::zero(); cap + 1],
        }
    }

    pub fn one(cap: usize) -> Self {
        Self::monomial(BigRational::one(), 0, cap)
    }

    /// `c q^d`, or zero when `d > cap`.
    pub fn monomial(c: BigRational, d: usize, cap: usize) -> Self {
        let mut s = Self::zero(cap);
        if d <= cap {
            s.coeffs[d] = c;
        }
        s
    }

    /// Coefficients beyond `cap` are dropped, missing ones are zero.
    pub fn from_coeffs(coeffs: Vec<BigRational>, cap: usize) -> Self {
        let mut s = Self::zero(cap);
        for (d, c) in coeffs.into_iter().enumerate().take(cap + 1) {
            s.coeffs[d] = c;
        }
        s
    }

    pub fn from_ints<I: Into<BigInt>>(coeffs: impl IntoIterator<Item = I>, cap: usize) -> Self {
        Self::from_coeffs(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
            cap,
        )
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `q^d`; zero past the cap.
    pub fn coeff(&self, d: usize) -> BigRational {
        self.coeffs.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Highest degree with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check_cap(&self, other: &QSeries) -> Result<()> {
        if self.cap == other.cap {
            Ok(())
        } else {
            Err(Error::CapMismatch {
                left: self.cap,
                right: other.cap,
            })
        }
    }

    pub fn try_add(&self, other: &QSeries) -> Result<QSeries> {
        self.check_cap(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn try_sub(&self, other: &QSeries) -> Result<QSeries> {
        self.check_cap(other)?;
        let mut out = self.clone();
        out.sub_assign_unchecked(other);
        Ok(out)
    }

    pub fn try_mul(&self, other: &QSeries) -> Result<QSeries> {
        self.check_cap(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &QSeries) {
        debug_assert_eq!(self.cap, other.cap);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub(crate) fn sub_assign_unchecked(&mut self, other: &QSeries) {
        debug_assert_eq!(self.cap, other.cap);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
    }

    pub(crate) fn mul_unchecked(&self, other: &QSeries) -> QSeries {
        debug_assert_eq!(self.cap, other.cap);
        let mut out = QSeries::zero(self.cap);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.cap - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> QSeries {
        QSeries {
            cap: self.cap,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> QSeries {
        self.scale(&-BigRational::one())
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> QSeries {
        let mut out = QSeries::zero(self.cap);
        for d in 0..=self.cap {
            if d + k > self.cap {
                break;
            }
            out.coeffs[d + k] = self.coeffs[d].clone();
        }
        out
    }

    /// The substitution `q -> q^k`.
    pub fn substitute_power(&self, k: usize) -> QSeries {
        assert!(k >= 1, "substitution exponent must be positive");
        let mut out = QSeries::zero(self.cap);
        for (d, c) in self.coeffs.iter().enumerate() {
            if d * k > self.cap {
                break;
            }
            out.coeffs[d * k] = c.clone();
        }
        out
    }

    /// Expansion of `1 / (1 - q^h)`.
    pub fn geometric_hook(h: usize, cap: usize) -> QSeries {
        assert!(h >= 1, "hook length must be positive");
        let mut out = QSeries::zero(cap);
        for d in (0..=cap).step_by(h) {
            out.coeffs[d] = BigRational::one();
        }
        out
    }

    /// Reduces modulo `q^{cap+1}` for a cap no larger than the current one.
    pub fn truncate(&self, cap: usize) -> QSeries {
        assert!(cap <= self.cap, "truncate cannot raise the cap");
        QSeries {
            cap,
            coeffs: self.coeffs[..=cap].to_vec(),
        }
    }

    /// Re-homes the series at a larger cap, padding with zeros. Only valid
    /// when the series is known to be an exact polynomial.
    pub fn extend(&self, cap: usize) -> QSeries {
        assert!(cap >= self.cap, "extend cannot lower the cap");
        Self::from_coeffs(self.coeffs.clone(), cap)
    }

    /// Value at `q = 1` of the truncated polynomial.
    pub fn eval_at_one(&self) -> BigRational {
        self.coeffs.iter().sum()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients if every coefficient is integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// First coefficient that is not a nonnegative integer.
    pub(crate) fn first_non_natural(&self) -> Option<(usize, &BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_integer() || c.is_negative())
    }
}

impl fmt::Display for QSeries {
    /// Human form such as `1 + 3q + 2q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            first = false;
            let monomial = match d {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{d}"),
            };
            if mag.is_one() && d > 0 {
                write!(f, "{monomial}")?;
            } else {
                write!(f, "{mag}{monomial}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
