//! Multi-indices, row enumeration, arity and degree shift of a bracket.

use crate::error::{Error, Result};
use crate::poly::{factorial, rat_big, ExponentVector, GenPolynomial, Rational};
use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use std::fmt;

/// Derivative order in each coordinate.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        MultiIndex(entries)
    }

    pub fn zero(dim: usize) -> Self {
        MultiIndex(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Total order of differentiation.
    pub fn norm(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Product of factorials of the entries.
    pub fn factorial(&self) -> num_bigint::BigInt {
        self.0.iter().map(|&r| factorial(r)).product()
    }

    /// Parse `a,b,...` into a multi-index.
    pub fn parse(text: &str) -> Result<Self> {
        text.split(',')
            .map(|t| {
                t.trim().parse::<u32>().map_err(|_| Error::Parse {
                    pos: 0,
                    msg: format!("bad multi-index entry `{}`", t.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(MultiIndex)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

/// `C(d+k, k)`, the number of arguments of the bracket.
pub fn arity(dim: usize, order: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 1..=order {
        acc = acc * BigUint::from(dim + i) / BigUint::from(i);
    }
    acc
}

/// Every multi-index of total order at most `order`.
///
/// Rows are grouped by total order, ascending; within a block the order follows
/// multisets of coordinates listed with non-decreasing labels, so the exponent
/// of the first coordinate is non-increasing.
pub fn enumerate_rows(dim: usize, order: usize) -> Vec<MultiIndex> {
    let mut rows = Vec::new();
    for r in 0..=order {
        for combo in (0..dim).combinations_with_replacement(r) {
            let mut v = vec![0u32; dim];
            for i in combo {
                v[i] += 1;
            }
            rows.push(MultiIndex(v));
        }
    }
    rows
}

/// Amount by which the bracket lowers exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeShift {
    /// Shift applied to each coordinate, `kN/(d+1)`.
    pub per_coordinate: BigUint,
    /// Shift of the total degree, `kdN/(d+1)`.
    pub total: BigUint,
}

/// Closed-form degree shift; always an integer.
pub fn degree_shift(dim: usize, order: usize) -> DegreeShift {
    let n = arity(dim, order);
    let num = n * BigUint::from(order);
    let per = &num / BigUint::from(dim + 1);
    debug_assert_eq!(&per * BigUint::from(dim + 1), num, "shift must be integral");
    DegreeShift { total: &per * BigUint::from(dim), per_coordinate: per }
}

/// Degree shift by summing the rows directly.
pub fn degree_shift_by_enumeration(dim: usize, order: usize) -> DegreeShift {
    let rows = enumerate_rows(dim, order);
    let per: u64 = rows.iter().map(|r| r.entries()[0] as u64).sum();
    let total: u64 = rows.iter().map(|r| r.norm() as u64).sum();
    DegreeShift { per_coordinate: BigUint::from(per), total: BigUint::from(total) }
}

/// Dimension, order, arity and row list of one bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketContext {
    dim: usize,
    order: usize,
    arity: usize,
    rows: Vec<MultiIndex>,
    shift: u64,
}

/// Largest arity a context will accept.
pub const MAX_ARITY: usize = 4096;

impl BracketContext {
    pub fn new(dim: usize, order: usize) -> Result<Self> {
        if dim == 0 || order == 0 {
            return Err(Error::InvalidContext {
                dim,
                order,
                msg: "dimension and order must be positive".into(),
            });
        }
        let arity = arity(dim, order)
            .to_usize()
            .filter(|&n| n <= MAX_ARITY)
            .ok_or_else(|| Error::InvalidContext {
                dim,
                order,
                msg: format!("arity exceeds {MAX_ARITY}"),
            })?;
        let rows = enumerate_rows(dim, order);
        debug_assert_eq!(rows.len(), arity);
        let shift = degree_shift(dim, order)
            .per_coordinate
            .to_u64()
            .expect("bounded by arity");
        Ok(BracketContext { dim, order, arity, rows, shift })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn rows(&self) -> &[MultiIndex] {
        &self.rows
    }

    /// Per-coordinate degree shift.
    pub fn shift(&self) -> u64 {
        self.shift
    }

    /// Total degree shift.
    pub fn total_shift(&self) -> u64 {
        self.shift * self.dim as u64
    }

    /// Per-coordinate shift as an exponent vector with every entry equal.
    pub fn shift_vector(&self) -> ExponentVector {
        ExponentVector::new(vec![Rational::from_integer(self.shift.into()); self.dim])
    }

    /// Position of a multi-index in the row list.
    pub fn row_position(&self, r: &MultiIndex) -> Option<usize> {
        self.rows.iter().position(|q| q == r)
    }
}

/// `x^r / r!` for every row `r`, in row order.
pub fn standard_monomials(ctx: &BracketContext) -> Vec<GenPolynomial> {
    ctx.rows()
        .iter()
        .map(|r| {
            GenPolynomial::monomial(
                ExponentVector::from_index(r),
                Rational::one() / rat_big(r.factorial()),
            )
        })
        .collect()
}

/// `x^r` for every row `r`, in row order.
pub fn unnormalized_monomials(ctx: &BracketContext) -> Vec<GenPolynomial> {
    ctx.rows()
        .iter()
        .map(|r| GenPolynomial::monomial(ExponentVector::from_index(r), Rational::one()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn arities() {
        assert_eq!(arity(2, 1), BigUint::from(3u32));
        assert_eq!(arity(2, 2), BigUint::from(6u32));
        assert_eq!(arity(3, 3), BigUint::from(20u32));
        assert_eq!(arity(1, 7), BigUint::from(8u32));
    }

    #[test]
    fn row_order() {
        assert_eq!(enumerate_rows(2, 1), vec![mi(&[0, 0]), mi(&[1, 0]), mi(&[0, 1])]);
        assert_eq!(
            enumerate_rows(2, 2),
            vec![mi(&[0, 0]), mi(&[1, 0]), mi(&[0, 1]), mi(&[2, 0]), mi(&[1, 1]), mi(&[0, 2])]
        );
        assert_eq!(enumerate_rows(1, 3), vec![mi(&[0]), mi(&[1]), mi(&[2]), mi(&[3])]);
    }

    #[test]
    fn shifts() {
        let s = degree_shift(2, 2);
        assert_eq!(s.per_coordinate, BigUint::from(4u32));
        assert_eq!(s.total, BigUint::from(8u32));
        let s = degree_shift(2, 1);
        assert_eq!(s.per_coordinate, BigUint::from(1u32));
        assert_eq!(s.total, BigUint::from(2u32));
        for d in 1..=5 {
            for k in 1..=5 {
                assert_eq!(degree_shift(d, k), degree_shift_by_enumeration(d, k));
            }
        }
    }

    #[test]
    fn context_validation() {
        assert!(BracketContext::new(0, 1).is_err());
        assert!(BracketContext::new(2, 0).is_err());
        assert!(BracketContext::new(8, 8).is_err());
        let ctx = BracketContext::new(3, 2).unwrap();
        assert_eq!(ctx.arity(), 10);
        assert_eq!(ctx.shift(), 5);
        assert_eq!(ctx.total_shift(), 15);
    }

    #[test]
    fn parse_multi_index() {
        assert_eq!(MultiIndex::parse("1, 0").unwrap(), mi(&[1, 0]));
        assert!(MultiIndex::parse("a").is_err());
        assert_eq!(mi(&[2, 1]).to_string(), "2,1");
        assert_eq!(mi(&[2, 3]).factorial(), 12.into());
    }
}
