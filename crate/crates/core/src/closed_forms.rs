//! Closed-form structure constants of the bracket on monomials.

use crate::error::{Error, Result};
use crate::index::{standard_monomials, BracketContext, MultiIndex};
use crate::poly::{factorial, falling, rat, rat_big, ExponentVector, GenPolynomial, Rational};
use crate::vandermonde::{van_det, VanInput};
use crate::wronskian::MonomialBracket;
use num_traits::{One, Zero};

fn sign(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Constant shared by both forms of the one-replacement formula.
fn lonely_prefactor(ctx: &BracketContext, row: &MultiIndex, degree: &Rational) -> Result<Rational> {
    let k = ctx.order();
    let rj = row.norm() as usize;
    if rj > k || row.dim() != ctx.dim() {
        return Err(Error::Domain(format!("{row} is not a row of this bracket")));
    }
    let mut c = sign(k - rj) / rat_big(factorial((k - rj) as u32));
    for l in rj + 1..=k {
        c *= degree - rat(l as i64);
    }
    Ok(c)
}

/// Arguments `x^r / r!` in row order, with the slot of `row` replaced by `a`.
pub fn lonely_arguments(ctx: &BracketContext, row: &MultiIndex, a: GenPolynomial) -> Result<Vec<GenPolynomial>> {
    let j = ctx
        .row_position(row)
        .ok_or_else(|| Error::Domain(format!("{row} is not a row of this bracket")))?;
    let mut args = standard_monomials(ctx);
    args[j] = a;
    Ok(args)
}

/// Bracket of the standard monomials with the slot of `row` replaced by `x^a`.
pub fn lonely_structure_bracket(ctx: &BracketContext, row: &MultiIndex, a: &ExponentVector) -> Result<GenPolynomial> {
    if a.dim() != ctx.dim() {
        return Err(Error::DimensionMismatch { expected: ctx.dim(), got: a.dim() });
    }
    let mut c = lonely_prefactor(ctx, row, &a.norm())?;
    for (ai, &ri) in a.entries().iter().zip(row.entries()) {
        c *= falling(ai, ri);
    }
    Ok(GenPolynomial::monomial(a.sub(&ExponentVector::from_index(row)), c))
}

/// Same bracket for a homogeneous `a`, written with the derivative of `a`.
pub fn lonely_structure_bracket_differential(
    ctx: &BracketContext,
    row: &MultiIndex,
    a: &GenPolynomial,
) -> Result<GenPolynomial> {
    if !a.is_homogeneous() {
        return Err(Error::Domain("argument must be homogeneous".into()));
    }
    let degree = match a.total_degree() {
        Some(d) => d,
        None => return Ok(GenPolynomial::zero(ctx.dim())),
    };
    let c = lonely_prefactor(ctx, row, &degree)?;
    Ok(a.derive(row).scale(&c))
}

/// Arguments with `q = x^m` in the constant slot and `p = x^n` in the slot of
/// the coordinate `coord`; the rest are the standard monomials.
pub fn golden_arguments(
    ctx: &BracketContext,
    coord: usize,
    n: &ExponentVector,
    m: &ExponentVector,
) -> Result<Vec<GenPolynomial>> {
    if coord >= ctx.dim() {
        return Err(Error::Domain(format!("coordinate {coord} out of range")));
    }
    let mut args = standard_monomials(ctx);
    args[0] = GenPolynomial::monomial(m.clone(), Rational::one());
    args[1 + coord] = GenPolynomial::monomial(n.clone(), Rational::one());
    Ok(args)
}

/// Closed form of the bracket from [`golden_arguments`] with `coord = 0`.
pub fn golden_bracket(ctx: &BracketContext, n: &ExponentVector, m: &ExponentVector) -> Result<MonomialBracket> {
    golden_bracket_at(ctx, 0, n, m)
}

/// Closed form of the bracket from [`golden_arguments`].
pub fn golden_bracket_at(
    ctx: &BracketContext,
    coord: usize,
    n: &ExponentVector,
    m: &ExponentVector,
) -> Result<MonomialBracket> {
    let d = ctx.dim();
    if n.dim() != d || m.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, got: if n.dim() != d { n.dim() } else { m.dim() } });
    }
    if coord >= d {
        return Err(Error::Domain(format!("coordinate {coord} out of range")));
    }
    let k = ctx.order();
    let (dp, dq) = (n.norm(), m.norm());
    let mut c = Rational::one() / rat_big(factorial(k as u32) * factorial(k as u32 - 1));
    for l in 2..=k {
        let l = rat(l as i64);
        c *= (&dp - &l) * (&dq - &l);
    }
    c *= (&dp - Rational::one()) * m.get(coord) - (&dq - Rational::one()) * n.get(coord);
    let exps = n.add(m).sub(&ExponentVector::unit(d, coord));
    Ok(MonomialBracket { coeff: c, exps })
}

/// Shift `s` making `x^{i + s}` a representation of the Witt-type algebra.
pub fn witt_shift(ctx: &BracketContext) -> Rational {
    let n = rat(ctx.arity() as i64);
    rat(ctx.order() as i64) / rat(ctx.dim() as i64 + 1) * &n / (&n - Rational::one())
}

/// The shifted monomial `x^{i + s}`.
pub fn witt_element(ctx: &BracketContext, index: &ExponentVector) -> GenPolynomial {
    let s = witt_shift(ctx);
    GenPolynomial::monomial(index.shift_down(&-s), Rational::one())
}

/// Structure constant and index of the bracket of shifted monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittBracket {
    pub omega: Rational,
    pub index_sum: ExponentVector,
}

/// Bracket of `x^{i_1 + s}, ..., x^{i_N + s}` as `omega * x^{sum + s}`.
pub fn witt_bracket(ctx: &BracketContext, indices: &[ExponentVector]) -> Result<WittBracket> {
    let input = VanInput::new(ctx.clone(), indices.to_vec())?;
    let omega = van_det(&input);
    let index_sum = indices.iter().fold(ExponentVector::zero(ctx.dim()), |acc, e| acc.add(e));
    Ok(WittBracket { omega, index_sum })
}

impl WittBracket {
    /// The value as a polynomial, zero when `omega` vanishes.
    pub fn to_poly(&self, ctx: &BracketContext) -> GenPolynomial {
        if self.omega.is_zero() {
            return GenPolynomial::zero(ctx.dim());
        }
        witt_element(ctx, &self.index_sum).scale(&self.omega)
    }
}
