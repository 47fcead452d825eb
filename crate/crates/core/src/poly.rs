//! Exact rationals, exponent vectors and sparse multivariate polynomials.

use crate::error::{Error, Result};
use crate::index::MultiIndex;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// The rational `n/d`; panics on a zero denominator.
pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Big integer as a rational.
pub fn rat_big(n: BigInt) -> Rational {
    BigRational::from_integer(n)
}

/// True for non-negative integers.
pub fn is_natural(q: &Rational) -> bool {
    q.is_integer() && !q.is_negative()
}

/// Falling factorial `n (n-1) ... (n-r+1)`; equals 1 when `r = 0`.
pub fn falling(n: &Rational, r: u32) -> Rational {
    let mut acc = Rational::one();
    let mut cur = n.clone();
    for _ in 0..r {
        acc *= &cur;
        cur -= Rational::one();
    }
    acc
}

fn falling_int(n: &BigInt, r: u32) -> BigInt {
    if let Some(v) = n.to_i64().filter(|v| v.unsigned_abs() < 1 << 20) {
        if r < 4 {
            return BigInt::from((0..r as i64).fold(1i64, |acc, i| acc * (v - i)));
        }
    }
    (0..r).fold(BigInt::one(), |acc, i| acc * (n - BigInt::from(i)))
}

/// `r!` as an exact integer.
pub fn factorial(r: u32) -> BigInt {
    (1..=r).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Exponent vector of a (generalised) monomial. Entries are exact rationals.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExponentVector(Vec<Rational>);

impl ExponentVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        ExponentVector(entries)
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        ExponentVector(entries.iter().map(|&e| rat(e)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        ExponentVector(vec![Rational::zero(); dim])
    }

    /// Exponent vector of the coordinate `x^i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_index(r: &MultiIndex) -> Self {
        ExponentVector(r.entries().iter().map(|&e| rat(e as i64)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    /// Sum of all entries.
    pub fn norm(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, e| acc + e)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Every entry is a non-negative integer.
    pub fn is_natural(&self) -> bool {
        self.0.iter().all(is_natural)
    }

    /// Entries as machine integers, if they all are integers that fit.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|e| if e.is_integer() { e.to_integer().to_i64() } else { None })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Subtract the same rational from every coordinate.
    pub fn shift_down(&self, s: &Rational) -> Self {
        ExponentVector(self.0.iter().map(|a| a - s).collect())
    }

    /// `self <= other` coordinatewise.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Relabel coordinates so that coordinate `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.dim());
        for (i, e) in self.0.iter().enumerate() {
            out.0[perm[i]] = e.clone();
        }
        out
    }
}

impl Ord for ExponentVector {
    /// Graded lexicographic order: total degree first, then entries left to right.
    fn cmp(&self, other: &Self) -> Ordering {
        self.norm()
            .cmp(&other.norm())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total and per-coordinate degree of a polynomial; `None` for zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub total: Option<Rational>,
    pub per_coordinate: Vec<Option<Rational>>,
}

/// Finite sum of rational multiples of generalised monomials.
///
/// Terms are stored in a map keyed by graded lexicographic order; zero
/// coefficients are never stored, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GenPolynomial {
    dim: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl GenPolynomial {
    pub fn zero(dim: usize) -> Self {
        GenPolynomial { dim, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rational::one())
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        Self::monomial(ExponentVector::zero(dim), c)
    }

    pub fn monomial(exps: ExponentVector, coeff: Rational) -> Self {
        let mut p = Self::zero(exps.dim());
        p.add_term(exps, coeff);
        p
    }

    /// Monomial with coefficient 1 and integer exponents.
    pub fn mono(exps: &[i64]) -> Self {
        Self::monomial(ExponentVector::from_ints(exps), Rational::one())
    }

    /// The coordinate function `x^i`.
    pub fn var(dim: usize, i: usize) -> Self {
        Self::monomial(ExponentVector::unit(dim, i), Rational::one())
    }

    /// Sum of the given terms; like terms are combined.
    pub fn from_terms<I>(dim: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        let mut p = Self::zero(dim);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
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

    /// Terms in canonical output order: descending graded lexicographic.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter().rev()
    }

    /// Exponent vectors with nonzero coefficient, in canonical order.
    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms().map(|(e, _)| e.clone()).collect()
    }

    /// Greatest term in graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&ExponentVector, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn as_monomial(&self) -> Option<(&ExponentVector, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coefficient(&self, exps: &ExponentVector) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// All exponents are non-negative integers.
    pub fn is_natural(&self) -> bool {
        self.terms.keys().all(ExponentVector::is_natural)
    }

    pub fn add_term(&mut self, exps: ExponentVector, coeff: Rational) {
        assert_eq!(exps.dim(), self.dim, "exponent vector dimension mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, coeff);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        GenPolynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Multiply by the single term `c x^e`.
    pub fn mul_term(&self, e: &ExponentVector, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        GenPolynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(f, a)| (f.add(e), a * c)).collect(),
        }
    }

    /// Partial derivative of multi-order `r`, exponents treated formally.
    pub fn derive(&self, r: &MultiIndex) -> Self {
        assert_eq!(r.dim(), self.dim, "multi-index dimension mismatch");
        let lower = ExponentVector::from_index(r);
        let mut out = Self::zero(self.dim);
        for (e, c) in &self.terms {
            if e.entries().iter().zip(r.entries()).any(|(n, &ri)| is_natural(n) && *n < Rational::from_integer(ri.into())) {
                continue;
            }
            let mut factor = c.clone();
            for (n, &ri) in e.entries().iter().zip(r.entries()) {
                if ri == 0 {
                    continue;
                }
                factor *= if n.is_integer() { Rational::from_integer(falling_int(n.numer(), ri)) } else { falling(n, ri) };
                if factor.is_zero() {
                    break;
                }
            }
            out.add_term(e.sub(&lower), factor);
        }
        out
    }

    /// Largest total degree over the support.
    pub fn total_degree(&self) -> Option<Rational> {
        self.terms.keys().map(ExponentVector::norm).max()
    }

    /// Largest exponent of coordinate `i` over the support.
    pub fn degree_in(&self, i: usize) -> Option<Rational> {
        self.terms.keys().map(|e| e.get(i).clone()).max()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile {
            total: self.total_degree(),
            per_coordinate: (0..self.dim).map(|i| self.degree_in(i)).collect(),
        }
    }

    /// Every term has the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut norms = self.terms.keys().map(ExponentVector::norm);
        match norms.next() {
            None => true,
            Some(first) => norms.all(|n| n == first),
        }
    }

    /// Keep only the terms satisfying `keep`.
    pub fn filter_terms<F: Fn(&ExponentVector) -> bool>(&self, keep: F) -> Self {
        GenPolynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Relabel coordinates so that coordinate `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self::from_terms(self.dim, self.terms.iter().map(|(e, c)| (e.permuted(perm), c.clone())))
    }

    /// Exact quotient `self / divisor`, failing when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if let Some((e, c)) = divisor.as_monomial() {
            return Ok(GenPolynomial {
                dim: self.dim,
                terms: self.terms.iter().map(|(f, a)| (f.sub(e), a / c)).collect(),
            });
        }
        let (le, lc) = divisor.leading_term().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = Self::zero(self.dim);
        while let Some((re, rc)) = rem.leading_term() {
            let te = re.sub(le);
            if !te.is_natural() {
                return Err(Error::Internal("polynomial division is not exact".into()));
            }
            let tc = rc / lc;
            rem = &rem - &divisor.mul_term(&te, &tc);
            quot.add_term(te, tc);
        }
        Ok(quot)
    }
}

impl Add for &GenPolynomial {
    type Output = GenPolynomial;
    fn add(self, rhs: &GenPolynomial) -> GenPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GenPolynomial {
    type Output = GenPolynomial;
    fn sub(self, rhs: &GenPolynomial) -> GenPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &GenPolynomial {
    type Output = GenPolynomial;
    fn mul(self, rhs: &GenPolynomial) -> GenPolynomial {
        let mut out = GenPolynomial::zero(self.dim);
        for (e, c) in &rhs.terms {
            for (f, a) in &self.terms {
                out.add_term(f.add(e), a * c);
            }
        }
        out
    }
}

impl Neg for &GenPolynomial {
    type Output = GenPolynomial;
    fn neg(self) -> GenPolynomial {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for GenPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::grammar::format_poly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derive_drops_vanishing_terms() {
        let p = &GenPolynomial::mono(&[2, 0]) + &GenPolynomial::mono(&[0, 1]);
        let d = p.derive(&MultiIndex::new(vec![1, 0]));
        assert_eq!(d, GenPolynomial::monomial(ExponentVector::from_ints(&[1, 0]), rat(2)));
        let dd = p.derive(&MultiIndex::new(vec![3, 0]));
        assert!(dd.is_zero());
    }

    #[test]
    fn derive_rational_exponent() {
        let e = ExponentVector::new(vec![ratio(1, 2)]);
        let p = GenPolynomial::monomial(e, rat(1));
        let d = p.derive(&MultiIndex::new(vec![2]));
        let expected = GenPolynomial::monomial(ExponentVector::new(vec![ratio(-3, 2)]), ratio(-1, 4));
        assert_eq!(d, expected);
    }

    #[test]
    fn derive_laurent() {
        let p = GenPolynomial::mono(&[0, -1]);
        let d = p.derive(&MultiIndex::new(vec![0, 1]));
        assert_eq!(d, GenPolynomial::monomial(ExponentVector::from_ints(&[0, -2]), rat(-1)));
    }

    #[test]
    fn graded_order() {
        let a = ExponentVector::from_ints(&[2, 0]);
        let b = ExponentVector::from_ints(&[1, 1]);
        let c = ExponentVector::from_ints(&[0, 3]);
        assert!(a > b);
        assert!(c > a);
    }

    #[test]
    fn exact_division() {
        let x = GenPolynomial::var(2, 0);
        let y = GenPolynomial::var(2, 1);
        let s = &x + &y;
        let prod = &(&s * &s) * &x;
        assert_eq!(prod.div_exact(&s).unwrap(), &s * &x);
        assert!(x.div_exact(&s).is_err());
        assert!(x.div_exact(&GenPolynomial::zero(2)).is_err());
    }

    #[test]
    fn degree_profile_of_mixed() {
        let p = &GenPolynomial::mono(&[3, 0]) + &GenPolynomial::mono(&[1, 1]);
        let dp = p.degree_profile();
        assert_eq!(dp.total, Some(rat(3)));
        assert_eq!(dp.per_coordinate, vec![Some(rat(3)), Some(rat(1))]);
        assert_eq!(GenPolynomial::zero(2).degree_profile().total, None);
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling(&rat(5), 0), rat(1));
        assert_eq!(falling(&rat(5), 2), rat(20));
        assert_eq!(falling(&rat(1), 2), rat(0));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
