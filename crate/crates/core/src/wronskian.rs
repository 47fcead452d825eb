//! The complete generalised Wronskian bracket.

use crate::det::{det_poly_bareiss, det_poly_cofactor, Matrix};
use crate::error::{Error, Result};
use crate::index::BracketContext;
use crate::poly::{ExponentVector, GenPolynomial, Rational};
use crate::vandermonde::{van_det, VanInput};
use itertools::Itertools;
use num_traits::{One, Zero};

/// Determinant strategy for [`bracket`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DetMode {
    /// Laplace expansion for arity at most 4, elimination otherwise.
    #[default]
    Auto,
    /// Fraction-free elimination over polynomials.
    FractionFree,
    /// Laplace expansion with memoised minors.
    Cofactor,
}

/// Arities up to this size use Laplace expansion in [`DetMode::Auto`].
pub const AUTO_COFACTOR_MAX: usize = 4;

fn check_args(ctx: &BracketContext, args: &[GenPolynomial]) -> Result<()> {
    if args.len() != ctx.arity() {
        return Err(Error::ArgumentCount { expected: ctx.arity(), got: args.len() });
    }
    if let Some(bad) = args.iter().find(|a| a.dim() != ctx.dim()) {
        return Err(Error::DimensionMismatch { expected: ctx.dim(), got: bad.dim() });
    }
    Ok(())
}

/// Matrix whose entry `(j, n)` is the row-`j` derivative of argument `n`.
pub fn wronskian_matrix(ctx: &BracketContext, args: &[GenPolynomial]) -> Result<Matrix<GenPolynomial>> {
    check_args(ctx, args)?;
    Ok(Matrix::from_fn(ctx.arity(), |j, n| args[n].derive(&ctx.rows()[j])))
}

/// The bracket of `N` arguments.
///
/// Arguments with negative or fractional exponents are always expanded by
/// cofactors, whatever `mode` says.
pub fn bracket(ctx: &BracketContext, args: &[GenPolynomial], mode: DetMode) -> Result<GenPolynomial> {
    let m = wronskian_matrix(ctx, args)?;
    let natural = args.iter().all(GenPolynomial::is_natural);
    let use_cofactor = match mode {
        DetMode::Cofactor => true,
        DetMode::FractionFree => !natural,
        DetMode::Auto => !natural || ctx.arity() <= AUTO_COFACTOR_MAX,
    };
    if use_cofactor {
        det_poly_cofactor(&m, ctx.dim())
    } else {
        det_poly_bareiss(&m, ctx.dim())
    }
}

/// Value of the bracket on monomials: a coefficient times one monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBracket {
    pub coeff: Rational,
    pub exps: ExponentVector,
}

impl MonomialBracket {
    pub fn to_poly(&self) -> GenPolynomial {
        GenPolynomial::monomial(self.exps.clone(), self.coeff.clone())
    }
}

/// Bracket of the monomials `x^{k_1}, ..., x^{k_N}` via the Vandermonde factor.
pub fn bracket_monomial(ctx: &BracketContext, exps: &[ExponentVector]) -> Result<MonomialBracket> {
    let coeff = van_det(&VanInput::new(ctx.clone(), exps.to_vec())?);
    let sum = exps.iter().fold(ExponentVector::zero(ctx.dim()), |acc, e| acc.add(e));
    let shift = Rational::from_integer(ctx.shift().into());
    Ok(MonomialBracket { coeff, exps: sum.shift_down(&shift) })
}

/// Bracket computed by multilinear expansion into monomial brackets.
pub fn bracket_expanded(ctx: &BracketContext, args: &[GenPolynomial]) -> Result<GenPolynomial> {
    check_args(ctx, args)?;
    let mut out = GenPolynomial::zero(ctx.dim());
    if args.iter().any(GenPolynomial::is_zero) {
        return Ok(out);
    }
    for choice in args.iter().map(|a| a.terms().collect::<Vec<_>>()).multi_cartesian_product() {
        let exps: Vec<ExponentVector> = choice.iter().map(|(e, _)| (*e).clone()).collect();
        if exps.iter().tuple_combinations().any(|(a, b)| a == b) {
            continue;
        }
        let mb = bracket_monomial(ctx, &exps)?;
        if mb.coeff.is_zero() {
            continue;
        }
        let c = choice.iter().fold(Rational::one(), |acc, (_, c)| acc * *c);
        out.add_term(mb.exps, mb.coeff * c);
    }
    Ok(out)
}

/// Largest number of monomial brackets [`evaluate`] will expand into.
pub const EXPANSION_LIMIT: usize = 512;

/// Bracket by the cheapest exact route: monomial formula, multilinear
/// expansion, or the determinant engine.
pub fn evaluate(ctx: &BracketContext, args: &[GenPolynomial]) -> Result<GenPolynomial> {
    check_args(ctx, args)?;
    let terms = args
        .iter()
        .try_fold(1usize, |acc, a| acc.checked_mul(a.len().max(1)))
        .unwrap_or(usize::MAX);
    if terms <= EXPANSION_LIMIT {
        bracket_expanded(ctx, args)
    } else {
        bracket(ctx, args, DetMode::Auto)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse_poly;
    use crate::poly::rat;

    fn polys(d: usize, src: &[&str]) -> Vec<GenPolynomial> {
        src.iter().map(|s| parse_poly(s, d).unwrap()).collect()
    }

    fn all_modes(ctx: &BracketContext, args: &[GenPolynomial]) -> GenPolynomial {
        let a = bracket(ctx, args, DetMode::Cofactor).unwrap();
        let b = bracket(ctx, args, DetMode::FractionFree).unwrap();
        let c = bracket(ctx, args, DetMode::Auto).unwrap();
        let e = bracket_expanded(ctx, args).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a, e);
        a
    }

    #[test]
    fn sl2_table() {
        let ctx = BracketContext::new(1, 1).unwrap();
        let w = |a: &str, b: &str| all_modes(&ctx, &polys(1, &[a, b]));
        assert_eq!(w("-2*x", "1"), parse_poly("2", 1).unwrap());
        assert_eq!(w("-2*x", "-x^2"), parse_poly("2*x^2", 1).unwrap());
        assert_eq!(w("1", "-x^2"), parse_poly("-2*x", 1).unwrap());
    }

    #[test]
    fn plane_brackets() {
        let ctx = BracketContext::new(2, 1).unwrap();
        let w = |s: &[&str]| all_modes(&ctx, &polys(2, s));
        assert_eq!(w(&["1", "x", "y"]), GenPolynomial::one(2));
        assert_eq!(w(&["1", "x", "x^2"]), GenPolynomial::zero(2));
        assert_eq!(w(&["1", "y", "x^2"]), parse_poly("-2*x", 2).unwrap());
        assert_eq!(w(&["x", "y", "x^2"]), parse_poly("-x^2", 2).unwrap());
        assert_eq!(w(&["1", "x", "x*y"]), parse_poly("x", 2).unwrap());
        assert_eq!(w(&["1", "y", "x*y"]), parse_poly("-y", 2).unwrap());
        assert_eq!(w(&["x", "y", "x*y"]), parse_poly("-x*y", 2).unwrap());
        assert_eq!(w(&["1", "x", "y^2"]), parse_poly("2*y", 2).unwrap());
        assert_eq!(w(&["1", "y", "y^2"]), GenPolynomial::zero(2));
        assert_eq!(w(&["x", "y", "y^2"]), parse_poly("-y^2", 2).unwrap());
    }

    #[test]
    fn laurent_argument() {
        let ctx = BracketContext::new(2, 1).unwrap();
        let args = polys(2, &["x", "y", "y^-1"]);
        let v = bracket(&ctx, &args, DetMode::FractionFree).unwrap();
        assert_eq!(v, parse_poly("2*y^-1", 2).unwrap());
        assert_eq!(bracket_expanded(&ctx, &args).unwrap(), v);
    }

    #[test]
    fn order_two_plane() {
        let ctx = BracketContext::new(2, 2).unwrap();
        let args = polys(2, &["1", "x", "y", "x^2", "x*y", "x*y^2"]);
        assert_eq!(all_modes(&ctx, &args), parse_poly("4*x", 2).unwrap());
    }

    #[test]
    fn space_brackets() {
        let ctx = BracketContext::new(3, 1).unwrap();
        assert_eq!(all_modes(&ctx, &polys(3, &["x", "y", "z", "x*y"])), parse_poly("x*y", 3).unwrap());
        assert_eq!(all_modes(&ctx, &polys(3, &["1", "y", "z", "x*y"])), parse_poly("y", 3).unwrap());
    }

    #[test]
    fn argument_validation() {
        let ctx = BracketContext::new(2, 1).unwrap();
        assert!(matches!(
            bracket(&ctx, &polys(2, &["1", "x"]), DetMode::Auto),
            Err(Error::ArgumentCount { expected: 3, got: 2 })
        ));
        let mixed = vec![GenPolynomial::one(2), GenPolynomial::one(3), GenPolynomial::one(2)];
        assert!(matches!(bracket(&ctx, &mixed, DetMode::Auto), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn monomial_fast_path() {
        let ctx = BracketContext::new(2, 2).unwrap();
        let exps: Vec<ExponentVector> =
            [[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [1, 2]].iter().map(|e| ExponentVector::from_ints(e)).collect();
        let mb = bracket_monomial(&ctx, &exps).unwrap();
        assert_eq!(mb.coeff, rat(4));
        assert_eq!(mb.exps, ExponentVector::from_ints(&[1, 0]));
    }
}
