//! Degree-sum diagnostics comparing a basis with the bracket's degree shift.

use crate::index::BracketContext;
use crate::poly::{ExponentVector, GenPolynomial, Rational};
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// Comparison of a coordinate's degree sum with the shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeLabel {
    Deficient,
    Exact,
    Abundant,
}

impl DegreeLabel {
    pub fn name(&self) -> &'static str {
        match self {
            DegreeLabel::Deficient => "deficient",
            DegreeLabel::Exact => "exact",
            DegreeLabel::Abundant => "abundant",
        }
    }
}

/// Degree sum of one coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateDiagnostic {
    /// Sum of the `N` largest exponents of this coordinate over the support.
    pub sum: Rational,
    pub label: DegreeLabel,
}

/// Degree-sum report for a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostics {
    /// Number of distinct monomials across the basis.
    pub support_size: usize,
    /// Per-coordinate shift every bracket subtracts.
    pub shift: u64,
    pub coordinates: Vec<CoordinateDiagnostic>,
    /// Abundant in every coordinate.
    pub promising: bool,
    /// Fewer distinct monomials than the arity, so every bracket of monomials vanishes.
    pub too_few_monomials: bool,
}

/// Degree sums of the union of supports of `basis`.
pub fn degree_sum_diagnostics(ctx: &BracketContext, basis: &[GenPolynomial]) -> Diagnostics {
    let support: BTreeSet<ExponentVector> = basis.iter().flat_map(GenPolynomial::support).collect();
    let n = ctx.arity();
    let shift = Rational::from_integer(ctx.shift().into());
    let coordinates: Vec<CoordinateDiagnostic> = (0..ctx.dim())
        .map(|i| {
            let mut degs: Vec<Rational> = support.iter().map(|e| e.get(i).clone()).collect();
            degs.sort_unstable_by(|a, b| b.cmp(a));
            let sum = degs.iter().take(n).fold(Rational::from_integer(0.into()), |acc, d| acc + d);
            let label = match sum.cmp(&shift) {
                Ordering::Less => DegreeLabel::Deficient,
                Ordering::Equal => DegreeLabel::Exact,
                Ordering::Greater => DegreeLabel::Abundant,
            };
            CoordinateDiagnostic { sum, label }
        })
        .collect();
    Diagnostics {
        support_size: support.len(),
        shift: ctx.shift(),
        promising: coordinates.iter().all(|c| c.label == DegreeLabel::Abundant),
        too_few_monomials: support.len() < n,
        coordinates,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse_poly;
    use crate::index::unnormalized_monomials;
    use crate::poly::rat;

    #[test]
    fn low_degree_is_exact() {
        let ctx = BracketContext::new(2, 2).unwrap();
        let d = degree_sum_diagnostics(&ctx, &unnormalized_monomials(&ctx));
        assert_eq!(d.coordinates.iter().map(|c| c.label).collect::<Vec<_>>(), vec![DegreeLabel::Exact; 2]);
        assert_eq!(d.coordinates[0].sum, rat(4));
        assert!(!d.promising);
        assert!(!d.too_few_monomials);
    }

    #[test]
    fn labels() {
        let ctx = BracketContext::new(2, 1).unwrap();
        let basis: Vec<_> = ["1", "x", "y", "x*y + x^2"].iter().map(|s| parse_poly(s, 2).unwrap()).collect();
        let d = degree_sum_diagnostics(&ctx, &basis);
        assert_eq!(d.support_size, 5);
        assert_eq!(d.coordinates[0].label, DegreeLabel::Abundant);
        assert_eq!(d.coordinates[1].label, DegreeLabel::Abundant);
        assert!(d.promising);
        let d = degree_sum_diagnostics(&ctx, &[parse_poly("x", 2).unwrap()]);
        assert!(d.too_few_monomials);
        assert_eq!(d.coordinates[1].label, DegreeLabel::Deficient);
    }
}
