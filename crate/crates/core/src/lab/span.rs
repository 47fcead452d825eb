//! Exact linear spans of polynomials in reduced echelon form.

use crate::poly::{GenPolynomial, Rational};
use num_traits::{One, Zero};

/// Reduced echelon basis of a span.
///
/// Every element has leading coefficient 1, leading monomials are distinct,
/// and no element contains another element's leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanBasis {
    dim: usize,
    basis: Vec<GenPolynomial>,
}

impl SpanBasis {
    pub fn new(dim: usize) -> Self {
        SpanBasis { dim, basis: Vec::new() }
    }

    pub fn from_polys<'a, I: IntoIterator<Item = &'a GenPolynomial>>(dim: usize, polys: I) -> Self {
        let mut s = Self::new(dim);
        for p in polys {
            s.insert(p);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the span.
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Basis elements, sorted by descending leading monomial.
    pub fn elements(&self) -> &[GenPolynomial] {
        &self.basis
    }

    pub fn into_elements(self) -> Vec<GenPolynomial> {
        self.basis
    }

    /// Remainder of `p` after eliminating every leading monomial of the basis.
    pub fn reduce(&self, p: &GenPolynomial) -> GenPolynomial {
        let mut r = p.clone();
        for b in &self.basis {
            let (lead, _) = b.leading_term().expect("basis elements are nonzero");
            let c = r.coefficient(lead);
            if !c.is_zero() {
                r = &r - &b.scale(&c);
            }
        }
        r
    }

    pub fn contains(&self, p: &GenPolynomial) -> bool {
        self.reduce(p).is_zero()
    }

    /// Add `p` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, p: &GenPolynomial) -> bool {
        let r = self.reduce(p);
        let (lead, lc) = match r.leading_term() {
            Some((e, c)) => (e.clone(), c.clone()),
            None => return false,
        };
        let r = r.scale(&(Rational::one() / lc));
        for b in &mut self.basis {
            let c = b.coefficient(&lead);
            if !c.is_zero() {
                *b = &*b - &r.scale(&c);
            }
        }
        let pos = self
            .basis
            .iter()
            .position(|b| b.leading_term().expect("nonzero").0 < &lead)
            .unwrap_or(self.basis.len());
        self.basis.insert(pos, r);
        true
    }

    /// Largest total degree among the basis elements.
    pub fn max_degree(&self) -> Option<Rational> {
        self.basis.iter().filter_map(GenPolynomial::total_degree).max()
    }

    /// Every element of `other` lies in this span.
    pub fn contains_span(&self, other: &SpanBasis) -> bool {
        other.basis.iter().all(|p| self.contains(p))
    }

    /// Same span as `other`.
    pub fn same_span(&self, other: &SpanBasis) -> bool {
        self.len() == other.len() && self.contains_span(other)
    }
}

/// Reduced echelon basis of the span of `polys`.
pub fn span_reduce(dim: usize, polys: &[GenPolynomial]) -> Vec<GenPolynomial> {
    SpanBasis::from_polys(dim, polys).into_elements()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse_poly;

    fn p(s: &str) -> GenPolynomial {
        parse_poly(s, 2).unwrap()
    }

    #[test]
    fn echelon_basis() {
        let s = SpanBasis::from_polys(2, &[p("x + y"), p("x - y"), p("2*x"), p("x^2 + x")]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.elements(), &[p("x^2"), p("x"), p("y")]);
        assert!(s.contains(&p("3*x^2 - y")));
        assert!(!s.contains(&p("x*y")));
    }

    #[test]
    fn span_equality() {
        let a = SpanBasis::from_polys(2, &[p("x + y"), p("x - y")]);
        let b = SpanBasis::from_polys(2, &[p("x"), p("y")]);
        assert!(a.same_span(&b));
        let c = SpanBasis::from_polys(2, &[p("x")]);
        assert!(!a.same_span(&c));
        assert!(a.contains_span(&c));
    }

    #[test]
    fn zero_is_ignored() {
        let mut s = SpanBasis::new(2);
        assert!(!s.insert(&p("0")));
        assert!(s.is_empty());
        assert_eq!(span_reduce(2, &[p("x"), p("2*x")]), vec![p("x")]);
    }
}
