//! Graded symmetric functions: sparse expansions in the Schur or power-sum
//! basis with truncated `q`-series coefficients.
//!
//! Products, Kronecker products, the Hall inner product and plethysm are all
//! computed in the power-sum basis, where each of them is diagonal or
//! monomial. The Schur basis is used for presentation and for the
//! nonnegativity checks on results that should be genuine representations.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{BigInt, BigRational, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::character::character_table;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::series::QSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Schur,
    #[serde(rename = "powersum")]
    PowerSum,
}

/// A homogeneous symmetric function of degree `degree` whose coefficients
/// are `q`-series truncated at `cap`.
///
/// Equality is structural: two values compare equal only when they are
/// expanded in the same basis. Use [`SymFunc::same_as`] to compare across
/// bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    cap: usize,
    terms: BTreeMap<Partition, QSeries>,
}

fn rat(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

impl SymFunc {
    pub fn zero(degree: usize, cap: usize, basis: Basis) -> Self {
        SymFunc {
            degree,
            basis,
            cap,
            terms: BTreeMap::new(),
        }
    }

    /// The degree-zero unit, keyed by the empty partition.
    pub fn one(cap: usize) -> Self {
        let mut f = Self::zero(0, cap, Basis::PowerSum);
        f.terms.insert(Partition::empty(), QSeries::one(cap));
        f
    }

    pub fn schur(lambda: Partition, cap: usize) -> Self {
        Self::basis_element(lambda, cap, Basis::Schur)
    }

    pub fn power_sum(mu: Partition, cap: usize) -> Self {
        Self::basis_element(mu, cap, Basis::PowerSum)
    }

    fn basis_element(p: Partition, cap: usize, basis: Basis) -> Self {
        let mut f = Self::zero(p.size(), cap, basis);
        f.terms.insert(p, QSeries::one(cap));
        f
    }

    /// Complete homogeneous `h_n`.
    pub fn complete(n: usize, cap: usize) -> Self {
        Self::schur(Partition::row(n), cap)
    }

    /// Elementary `e_n`.
    pub fn elementary(n: usize, cap: usize) -> Self {
        Self::schur(Partition::column(n), cap)
    }

    /// Builds an expansion from `(partition, coefficient)` pairs, summing
    /// repeated keys and pruning zeros.
    pub fn from_terms(
        degree: usize,
        basis: Basis,
        cap: usize,
        terms: impl IntoIterator<Item = (Partition, QSeries)>,
    ) -> Result<Self> {
        let mut f = Self::zero(degree, cap, basis);
        for (p, c) in terms {
            if p.size() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: p.size(),
                });
            }
            if c.cap() != cap {
                return Err(Error::CapMismatch {
                    left: cap,
                    right: c.cap(),
                });
            }
            f.add_term(p, &c);
        }
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Nonzero terms in lexicographic descending partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QSeries)> {
        self.terms.iter().rev()
    }

    /// Coefficient of a basis element in the current basis.
    pub fn coeff(&self, p: &Partition) -> QSeries {
        self.terms
            .get(p)
            .cloned()
            .unwrap_or_else(|| QSeries::zero(self.cap))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, p: Partition, c: &QSeries) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_unchecked(c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_cap(&self, other: &SymFunc) -> Result<()> {
        if self.cap == other.cap {
            Ok(())
        } else {
            Err(Error::CapMismatch {
                left: self.cap,
                right: other.cap,
            })
        }
    }

    fn check_degree(&self, other: &SymFunc) -> Result<()> {
        if self.degree == other.degree {
            Ok(())
        } else {
            Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            })
        }
    }

    pub fn to_powersum(&self) -> SymFunc {
        match self.basis {
            Basis::PowerSum => self.clone(),
            Basis::Schur => self.change_basis(Basis::PowerSum),
        }
    }

    pub fn to_schur(&self) -> SymFunc {
        match self.basis {
            Basis::Schur => self.clone(),
            Basis::PowerSum => self.change_basis(Basis::Schur),
        }
    }

    pub fn to_basis(&self, basis: Basis) -> SymFunc {
        match basis {
            Basis::Schur => self.to_schur(),
            Basis::PowerSum => self.to_powersum(),
        }
    }

    // s_λ = Σ_μ χ^λ_μ / z_μ p_μ   and   p_μ = Σ_λ χ^λ_μ s_λ.
    fn change_basis(&self, target: Basis) -> SymFunc {
        let table = character_table(self.degree);
        let mut out = Self::zero(self.degree, self.cap, target);
        let k = table.partitions().len();
        for (src, coeff) in &self.terms {
            let s = table.index_of(src).expect("key is a partition of the degree");
            for t in 0..k {
                let chi = match target {
                    Basis::PowerSum => table.value_at(s, t),
                    Basis::Schur => table.value_at(t, s),
                };
                if chi.is_zero() {
                    continue;
                }
                let mut factor = rat(chi);
                if target == Basis::PowerSum {
                    factor /= rat(table.z_at(t));
                }
                out.add_term(table.partitions()[t].clone(), &coeff.scale(&factor));
            }
        }
        out
    }

    /// True when both sides represent the same symmetric function.
    pub fn same_as(&self, other: &SymFunc) -> bool {
        self.degree == other.degree
            && self.cap == other.cap
            && self.to_schur().terms == other.to_schur().terms
    }

    pub fn try_add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_cap(other)?;
        self.check_degree(other)?;
        let mut out = self.clone();
        for (p, c) in &other.to_basis(self.basis).terms {
            out.add_term(p.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.try_add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> SymFunc {
        self.map_coeffs(|s| s.scale(c))
    }

    /// Multiplies every coefficient by a series.
    pub fn mul_series(&self, s: &QSeries) -> Result<SymFunc> {
        if s.cap() != self.cap {
            return Err(Error::CapMismatch {
                left: self.cap,
                right: s.cap(),
            });
        }
        Ok(self.map_coeffs(|c| c.mul_unchecked(s)))
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> SymFunc {
        self.map_coeffs(|c| c.shift(k))
    }

    /// Reduces every coefficient modulo `q^{cap+1}`.
    pub fn truncate(&self, cap: usize) -> SymFunc {
        let mut out = Self::zero(self.degree, cap, self.basis);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), &c.truncate(cap));
        }
        out
    }

    /// Re-homes exact polynomial coefficients at a larger cap.
    pub fn extend(&self, cap: usize) -> SymFunc {
        let mut out = Self::zero(self.degree, cap, self.basis);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), &c.extend(cap));
        }
        out
    }

    fn map_coeffs(&self, f: impl Fn(&QSeries) -> QSeries) -> SymFunc {
        let mut out = Self::zero(self.degree, self.cap, self.basis);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), &f(c));
        }
        out
    }

    /// Ordinary product, realizing induction from `S_i × S_j`.
    pub fn outer_product(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_cap(other)?;
        let (a, b) = (self.to_powersum(), other.to_powersum());
        let mut acc: HashMap<Partition, QSeries> = HashMap::new();
        for (pa, ca) in &a.terms {
            for (pb, cb) in &b.terms {
                let prod = ca.mul_unchecked(cb);
                match acc.entry(pa.union(pb)) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        e.get_mut().add_assign_unchecked(&prod);
                    }
                }
            }
        }
        let mut out = Self::zero(self.degree + other.degree, self.cap, Basis::PowerSum);
        for (p, c) in acc {
            out.add_term(p, &c);
        }
        Ok(out)
    }

    /// Internal product, realizing the tensor product of representations:
    /// `p_μ * p_ν = δ_{μν} z_μ p_μ`.
    pub fn kronecker(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_cap(other)?;
        self.check_degree(other)?;
        let (a, b) = (self.to_powersum(), other.to_powersum());
        let mut out = Self::zero(self.degree, self.cap, Basis::PowerSum);
        for (p, ca) in &a.terms {
            if let Some(cb) = b.terms.get(p) {
                out.add_term(p.clone(), &ca.mul_unchecked(cb).scale(&rat(&p.z())));
            }
        }
        Ok(out)
    }

    /// Hall inner product `<p_μ, p_ν> = δ_{μν} z_μ`, the graded dimension
    /// of `Hom_{S_n}(V, V')`.
    pub fn hall_inner(&self, other: &SymFunc) -> Result<QSeries> {
        self.check_cap(other)?;
        self.check_degree(other)?;
        let (a, b) = (self.to_powersum(), other.to_powersum());
        let mut total = QSeries::zero(self.cap);
        for (p, ca) in &a.terms {
            if let Some(cb) = b.terms.get(p) {
                total.add_assign_unchecked(&ca.mul_unchecked(cb).scale(&rat(&p.z())));
            }
        }
        Ok(total)
    }

    /// `p_k[f]`: every `p_j` becomes `p_{jk}` and every `q` becomes `q^k`.
    pub fn adams(&self, k: usize) -> SymFunc {
        let f = self.to_powersum();
        let mut out = Self::zero(self.degree * k, self.cap, Basis::PowerSum);
        for (p, c) in &f.terms {
            out.add_term(p.scale(k), &c.substitute_power(k));
        }
        out
    }

    /// Plethysm `self[inner]`, realizing induction from a wreath product.
    ///
    /// `self` acts as an algebra morphism in the power-sum basis; its own
    /// `q`-coefficients are treated as scalars and are not substituted.
    /// Truncation is compatible with `q -> q^k`, so a shared cap gives the
    /// exact result modulo `q^{cap+1}`.
    pub fn plethysm(&self, inner: &SymFunc) -> Result<SymFunc> {
        self.check_cap(inner)?;
        let outer = self.to_powersum();
        let inner = inner.to_powersum();
        let mut adams: HashMap<usize, SymFunc> = HashMap::new();
        let mut out = Self::zero(self.degree * inner.degree, self.cap, Basis::PowerSum);
        for (mu, coeff) in &outer.terms {
            let mut prod = SymFunc::one(self.cap);
            for &k in mu.parts() {
                let g = adams.entry(k).or_insert_with(|| inner.adams(k));
                prod = prod.outer_product(g)?;
            }
            for (p, c) in &prod.terms {
                out.add_term(p.clone(), &c.mul_unchecked(coeff));
            }
        }
        Ok(out)
    }

    /// Restriction from `S_n` to `S_{n-1}`: skewing by `p_1`, which in the
    /// power-sum basis is `∂/∂p_1`.
    pub fn restrict(&self) -> Result<SymFunc> {
        if self.degree == 0 {
            return Err(Error::InvalidDegree {
                what: "restriction",
                n: 0,
                min: 1,
            });
        }
        let f = self.to_powersum();
        let mut out = Self::zero(self.degree - 1, self.cap, Basis::PowerSum);
        for (p, c) in &f.terms {
            let m1 = p.multiplicity(1);
            if m1 == 0 {
                continue;
            }
            let mut parts = p.parts().to_vec();
            parts.pop();
            let factor = BigRational::from_integer(BigInt::from(m1));
            out.add_term(Partition::from_unsorted(parts), &c.scale(&factor));
        }
        Ok(out)
    }

    /// Forgets the grading: `q := 1`. The result has cap 0.
    pub fn specialize_q1(&self) -> SymFunc {
        let mut out = Self::zero(self.degree, 0, self.basis);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), &QSeries::monomial(c.eval_at_one(), 0, 0));
        }
        out
    }

    /// `Σ_λ c_λ(q) f^λ`.
    pub fn graded_dimension(&self) -> QSeries {
        let mut total = QSeries::zero(self.cap);
        for (lam, c) in &self.to_schur().terms {
            total.add_assign_unchecked(&c.scale(&rat(&lam.dimension())));
        }
        total
    }

    /// Solves `self = quotient * divisor` for `quotient`.
    ///
    /// In the power-sum basis this is coordinatewise series division,
    /// `d_μ = c_μ / (z_μ w_μ)`, i.e. the degree-by-degree recursion
    /// `D_d = C_d - Σ_{j≥1} D_{d-j} * W_j` when `W_0 = s_n`.
    pub fn kronecker_divide(&self, divisor: &SymFunc) -> Result<SymFunc> {
        self.check_cap(divisor)?;
        self.check_degree(divisor)?;
        let num = self.to_powersum();
        let den = divisor.to_powersum();
        let cap = self.cap;
        let mut out = Self::zero(self.degree, cap, Basis::PowerSum);
        for (p, c) in &num.terms {
            let w = den.terms.get(p).map(|w| w.scale(&rat(&p.z())));
            let w = match w {
                Some(w) if !w.coeff(0).is_zero() => w,
                _ => {
                    return Err(Error::DivisionFailed {
                        what: "Kronecker quotient",
                        n: self.degree,
                        reason: format!("divisor vanishes at q^0 on p{p}"),
                    })
                }
            };
            let lead = w.coeff(0);
            let mut d: Vec<BigRational> = Vec::with_capacity(cap + 1);
            for deg in 0..=cap {
                let mut acc = c.coeff(deg);
                for j in 1..=deg {
                    let wj = w.coeff(j);
                    if !wj.is_zero() {
                        acc -= &d[deg - j] * wj;
                    }
                }
                d.push(acc / &lead);
            }
            out.add_term(p.clone(), &QSeries::from_coeffs(d, cap));
        }
        Ok(out)
    }

    /// Schur expansion, failing unless every coefficient lies in `N[q]`.
    pub fn schur_positive(&self) -> Result<SymFunc> {
        let s = self.to_schur();
        for (lam, c) in s.terms() {
            if let Some((degree, value)) = c.first_non_natural() {
                return Err(Error::NotSchurPositive {
                    partition: lam.clone(),
                    degree,
                    value: value.to_string(),
                });
            }
        }
        Ok(s)
    }

    /// Canonical serialized form: Schur basis, integer coefficients, terms
    /// in lexicographic descending order.
    pub fn to_doc(&self) -> std::result::Result<SymFuncDoc, NotIntegral> {
        let s = self.to_schur();
        let mut terms = Vec::with_capacity(s.len());
        for (lam, c) in s.terms() {
            let coeffs = c
                .coeffs()
                .iter()
                .enumerate()
                .map(|(d, x)| {
                    if x.is_integer() {
                        x.to_integer().to_i64()
                    } else {
                        None
                    }
                    .ok_or_else(|| NotIntegral {
                        partition: lam.clone(),
                        degree: d,
                        value: x.to_string(),
                    })
                })
                .collect::<std::result::Result<Vec<_>, _>>()?;
            terms.push(TermDoc {
                partition: lam.clone(),
                coeffs,
            });
        }
        Ok(SymFuncDoc {
            n: self.degree,
            basis: Basis::Schur,
            cap: self.cap,
            terms,
        })
    }

    pub fn from_doc(doc: &SymFuncDoc) -> Result<SymFunc> {
        Self::from_terms(
            doc.n,
            doc.basis,
            doc.cap,
            doc.terms.iter().map(|t| {
                (
                    t.partition.clone(),
                    QSeries::from_ints(t.coeffs.iter().copied(), doc.cap),
                )
            }),
        )
    }
}

/// A coefficient that cannot be written as a machine integer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("coefficient of s{partition} in q-degree {degree} is {value}, not a 64-bit integer")]
pub struct NotIntegral {
    pub partition: Partition,
    pub degree: usize,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub partition: Partition,
    pub coeffs: Vec<i64>,
}

/// `{"n", "basis", "cap", "terms": [{"partition", "coeffs"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncDoc {
    pub n: usize,
    pub basis: Basis,
    pub cap: usize,
    pub terms: Vec<TermDoc>,
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.basis {
            Basis::Schur => "s",
            Basis::PowerSum => "p",
        };
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){prefix}{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(parts: &[usize], cap: usize) -> SymFunc {
        SymFunc::schur(p(parts), cap)
    }

    fn frac(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn schur_sum(items: &[(&[usize], &[i64])], cap: usize) -> SymFunc {
        let degree = items.first().map(|(l, _)| l.iter().sum()).unwrap_or(0);
        SymFunc::from_terms(
            degree,
            Basis::Schur,
            cap,
            items
                .iter()
                .map(|(l, c)| (p(l), QSeries::from_ints(c.iter().copied(), cap))),
        )
        .unwrap()
    }

    #[test]
    fn basis_change_examples() {
        let e2 = s(&[1, 1], 0).to_powersum();
        let expected = SymFunc::from_terms(
            2,
            Basis::PowerSum,
            0,
            [
                (p(&[1, 1]), QSeries::monomial(frac(1, 2), 0, 0)),
                (p(&[2]), QSeries::monomial(frac(-1, 2), 0, 0)),
            ],
        )
        .unwrap();
        assert_eq!(e2, expected);
        assert_eq!(SymFunc::power_sum(p(&[1]), 0).to_schur(), s(&[1], 0));
    }

    #[test]
    fn pieri_examples() {
        let got = s(&[1], 0).outer_product(&s(&[1], 0)).unwrap().to_schur();
        assert_eq!(got, schur_sum(&[(&[2], &[1]), (&[1, 1], &[1])], 0));
        let got = s(&[1], 0).outer_product(&s(&[1, 1], 0)).unwrap().to_schur();
        assert_eq!(got, schur_sum(&[(&[2, 1], &[1]), (&[1, 1, 1], &[1])], 0));
        let f = schur_sum(&[(&[2, 1], &[1, 2]), (&[3], &[0, 1])], 1);
        assert!(f.outer_product(&SymFunc::one(1)).unwrap().same_as(&f));
    }

    #[test]
    fn kronecker_examples() {
        let f = schur_sum(&[(&[2, 1], &[1, 2]), (&[1, 1, 1], &[0, 1])], 1);
        assert!(s(&[3], 1).kronecker(&f).unwrap().same_as(&f));
        let sign = s(&[1, 1], 0).kronecker(&s(&[1, 1], 0)).unwrap().to_schur();
        assert_eq!(sign, s(&[2], 0));
        let std3 = s(&[2, 1], 0).kronecker(&s(&[2, 1], 0)).unwrap().to_schur();
        assert_eq!(
            std3,
            schur_sum(&[(&[3], &[1]), (&[2, 1], &[1]), (&[1, 1, 1], &[1])], 0)
        );
        assert!(matches!(
            s(&[2], 0).kronecker(&s(&[1], 0)),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(matches!(
            s(&[2], 0).kronecker(&s(&[2], 1)),
            Err(Error::CapMismatch { .. })
        ));
    }

    #[test]
    fn hall_inner_examples() {
        for lam in crate::partition::enumerate_partitions(4) {
            for mu in crate::partition::enumerate_partitions(4) {
                let v = s(lam.parts(), 0).hall_inner(&s(mu.parts(), 0)).unwrap();
                let want = if lam == mu { 1 } else { 0 };
                assert_eq!(v, QSeries::from_ints([want], 0));
            }
            let pmu = SymFunc::power_sum(lam.clone(), 0);
            assert_eq!(
                pmu.hall_inner(&pmu).unwrap(),
                QSeries::from_coeffs(vec![rat(&lam.z())], 0)
            );
        }
        let c2 = schur_sum(&[(&[2], &[1, 0]), (&[1, 1], &[0, 1])], 1);
        assert_eq!(s(&[2], 1).hall_inner(&c2).unwrap(), QSeries::from_ints([1, 0], 1));
        assert_eq!(s(&[1, 1], 1).hall_inner(&c2).unwrap(), QSeries::from_ints([0, 1], 1));
    }

    #[test]
    fn plethysm_examples() {
        let g = schur_sum(&[(&[2, 1], &[1, 1]), (&[3], &[0, 2])], 2);
        let p1 = SymFunc::power_sum(p(&[1]), 2);
        assert!(p1.plethysm(&g).unwrap().same_as(&g));
        assert!(g.plethysm(&p1).unwrap().same_as(&g));
        let h2h2 = s(&[2], 0).plethysm(&s(&[2], 0)).unwrap().to_schur();
        assert_eq!(h2h2, schur_sum(&[(&[4], &[1]), (&[2, 2], &[1])], 0));
        let qp1 = SymFunc::power_sum(p(&[1]), 3).shift(1);
        let got = SymFunc::power_sum(p(&[2]), 3).plethysm(&qp1).unwrap();
        assert_eq!(got, SymFunc::power_sum(p(&[2]), 3).shift(2));
    }

    #[test]
    fn restriction_examples() {
        let got = s(&[2, 1], 0).restrict().unwrap().to_schur();
        assert_eq!(got, schur_sum(&[(&[2], &[1]), (&[1, 1], &[1])], 0));
        for n in 1..=6 {
            assert!(s(&[n], 0).restrict().unwrap().same_as(&SymFunc::schur(Partition::row(n - 1), 0)));
        }
        let d3 = schur_sum(&[(&[3], &[1, 0]), (&[1, 1, 1], &[0, 1])], 1);
        let c2 = schur_sum(&[(&[2], &[1, 0]), (&[1, 1], &[0, 1])], 1);
        assert!(d3.restrict().unwrap().same_as(&c2));
        assert!(SymFunc::one(0).restrict().is_err());
    }

    #[test]
    fn restriction_is_the_branching_rule() {
        for n in 1..=7 {
            for lam in crate::partition::enumerate_partitions(n) {
                let got = s(lam.parts(), 0).restrict().unwrap().to_schur();
                let want = SymFunc::from_terms(
                    n - 1,
                    Basis::Schur,
                    0,
                    lam.remove_one_box().into_iter().map(|m| (m, QSeries::one(0))),
                )
                .unwrap();
                assert_eq!(got, want, "{lam}");
            }
        }
    }

    #[test]
    fn specialization_and_dimension() {
        let c2 = schur_sum(&[(&[2], &[1, 0]), (&[1, 1], &[0, 1])], 1);
        assert_eq!(
            c2.specialize_q1(),
            schur_sum(&[(&[2], &[1]), (&[1, 1], &[1])], 0)
        );
        assert_eq!(s(&[5], 3).graded_dimension(), QSeries::one(3));
        let c3 = schur_sum(
            &[(&[3], &[1, 0, 0]), (&[2, 1], &[0, 1, 1]), (&[1, 1, 1], &[0, 1, 0])],
            2,
        );
        assert_eq!(c3.graded_dimension(), QSeries::from_ints([1, 3, 2], 2));
    }

    #[test]
    fn division_reconstructs_and_rejects_zero_divisor() {
        let w = schur_sum(&[(&[3], &[1, 0]), (&[2, 1], &[0, 1])], 2);
        let d = schur_sum(&[(&[3], &[1, 0]), (&[1, 1, 1], &[0, 1])], 2);
        let c = d.kronecker(&w).unwrap();
        assert!(c.kronecker_divide(&w).unwrap().same_as(&d));
        let bad = s(&[2, 1], 2);
        assert!(matches!(
            c.kronecker_divide(&bad),
            Err(Error::DivisionFailed { .. })
        ));
    }

    #[test]
    fn doc_round_trip_and_rejections() {
        let c2 = schur_sum(&[(&[2], &[1, 0]), (&[1, 1], &[0, 1])], 1);
        let doc = c2.to_powersum().to_doc().unwrap();
        assert_eq!(
            serde_json::to_string(&doc).unwrap(),
            r#"{"n":2,"basis":"schur","cap":1,"terms":[{"partition":[2],"coeffs":[1,0]},{"partition":[1,1],"coeffs":[0,1]}]}"#
        );
        assert_eq!(SymFunc::from_doc(&doc).unwrap(), c2);
        let half = SymFunc::power_sum(p(&[2]), 0).scale(&frac(1, 2));
        assert!(half.to_doc().is_err());
        assert!(schur_sum(&[(&[2], &[-1])], 0).schur_positive().is_err());
    }
}
