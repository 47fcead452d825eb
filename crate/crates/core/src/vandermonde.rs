//! Generalised Vandermonde determinants and vanishing certificates.

use crate::det::{det_rational, det_rational_bareiss, det_rational_cofactor, Matrix};
use crate::error::{Error, Result};
use crate::index::BracketContext;
use crate::poly::{falling, ExponentVector, Rational};
use itertools::Itertools;
use num_traits::{One, Pow, Zero};

/// A context together with one exponent tuple per column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanInput {
    ctx: BracketContext,
    tuples: Vec<ExponentVector>,
}

impl VanInput {
    pub fn new(ctx: BracketContext, tuples: Vec<ExponentVector>) -> Result<Self> {
        if tuples.len() != ctx.arity() {
            return Err(Error::ArgumentCount { expected: ctx.arity(), got: tuples.len() });
        }
        if let Some(bad) = tuples.iter().find(|t| t.dim() != ctx.dim()) {
            return Err(Error::DimensionMismatch { expected: ctx.dim(), got: bad.dim() });
        }
        Ok(VanInput { ctx, tuples })
    }

    pub fn ctx(&self) -> &BracketContext {
        &self.ctx
    }

    pub fn tuples(&self) -> &[ExponentVector] {
        &self.tuples
    }
}

fn power(base: &Rational, e: u32) -> Rational {
    if e == 0 {
        Rational::one()
    } else {
        Pow::pow(base, e)
    }
}

/// Matrix with entry `(j, n)` equal to `prod_i (m_n^i)^(r_j^i)`, taking `0^0 = 1`.
pub fn van_matrix(input: &VanInput) -> Matrix<Rational> {
    let rows = input.ctx.rows();
    Matrix::from_fn(rows.len(), |j, n| {
        rows[j]
            .entries()
            .iter()
            .zip(input.tuples[n].entries())
            .fold(Rational::one(), |acc, (&r, m)| acc * power(m, r))
    })
}

/// Matrix with entry `(j, n)` equal to `prod_i falling(k_n^i, r_j^i)`.
pub fn quasi_triangular_matrix(input: &VanInput) -> Matrix<Rational> {
    let rows = input.ctx.rows();
    Matrix::from_fn(rows.len(), |j, n| {
        rows[j]
            .entries()
            .iter()
            .zip(input.tuples[n].entries())
            .fold(Rational::one(), |acc, (&r, k)| acc * falling(k, r))
    })
}

/// The generalised Vandermonde determinant.
pub fn van_det(input: &VanInput) -> Rational {
    det_rational(&van_matrix(input))
}

/// The generalised Vandermonde determinant by integer elimination only.
pub fn van_det_bareiss(input: &VanInput) -> Rational {
    det_rational_bareiss(&van_matrix(input))
}

/// The generalised Vandermonde determinant by Laplace expansion only.
pub fn van_det_cofactor(input: &VanInput) -> Result<Rational> {
    det_rational_cofactor(&van_matrix(input))
}

/// Determinant of the falling-factorial matrix; equals [`van_det`].
pub fn quasi_triangular_det(input: &VanInput) -> Rational {
    det_rational(&quasi_triangular_matrix(input))
}

/// Product of `m_j - m_i` over `i < j`.
pub fn ordinary_vandermonde(ms: &[Rational]) -> Rational {
    ms.iter()
        .tuple_combinations()
        .fold(Rational::one(), |acc, (a, b)| acc * (b - a))
}

/// Reason a generalised Vandermonde determinant must vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VanishingCertificate {
    /// Columns `a < b` (zero-based) carry the same tuple.
    DuplicateColumns(usize, usize),
    /// Coordinate `i` (zero-based) takes the same value in every tuple.
    ConstantCoordinate(usize),
    /// The natural exponents of coordinate `i` (zero-based) sum below the degree shift.
    DeficientDegree(usize),
    /// No certificate applies; the determinant may or may not vanish.
    NoneFound,
}

/// First applicable vanishing certificate, checked in a fixed order.
pub fn vanishing_certificate(input: &VanInput) -> VanishingCertificate {
    let t = &input.tuples;
    for (a, b) in (0..t.len()).tuple_combinations() {
        if t[a] == t[b] {
            return VanishingCertificate::DuplicateColumns(a, b);
        }
    }
    let dim = input.ctx.dim();
    for i in 0..dim {
        if t.iter().map(|e| e.get(i)).all_equal() {
            return VanishingCertificate::ConstantCoordinate(i);
        }
    }
    if t.iter().all(ExponentVector::is_natural) {
        let shift = Rational::from_integer(input.ctx.shift().into());
        for i in 0..dim {
            let sum = t.iter().fold(Rational::zero(), |acc, e| acc + e.get(i));
            if sum < shift {
                return VanishingCertificate::DeficientDegree(i);
            }
        }
    }
    VanishingCertificate::NoneFound
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    fn input(d: usize, k: usize, tuples: &[&[i64]]) -> VanInput {
        let ctx = BracketContext::new(d, k).unwrap();
        VanInput::new(ctx, tuples.iter().map(|t| ExponentVector::from_ints(t)).collect()).unwrap()
    }

    #[test]
    fn standard_rows_plane_order_two() {
        let v = input(2, 2, &[&[0, 0], &[1, 0], &[0, 1], &[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(van_det(&v), rat(4));
        assert_eq!(quasi_triangular_det(&v), rat(4));
        assert_eq!(van_det_bareiss(&v), rat(4));
        assert_eq!(van_det_cofactor(&v).unwrap(), rat(4));
    }

    #[test]
    fn one_dimension_is_ordinary() {
        let ms = [2, 5, 7, 11];
        let v = input(1, 3, &[&[2], &[5], &[7], &[11]]);
        let expected = ordinary_vandermonde(&ms.iter().map(|&m| rat(m)).collect::<Vec<_>>());
        assert_eq!(van_det(&v), expected);
        assert_eq!(expected, rat(3 * 5 * 9 * 2 * 6 * 4));
    }

    #[test]
    fn certificates() {
        let v = input(2, 1, &[&[1, 1], &[1, 1], &[0, 2]]);
        assert_eq!(vanishing_certificate(&v), VanishingCertificate::DuplicateColumns(0, 1));
        assert_eq!(van_det(&v), rat(0));
        let v = input(2, 1, &[&[0, 0], &[1, 0], &[2, 0]]);
        assert_eq!(vanishing_certificate(&v), VanishingCertificate::ConstantCoordinate(1));
        let v = input(2, 2, &[&[0, 0], &[1, 0], &[0, 1], &[2, 0], &[1, 1], &[3, 0]]);
        assert_eq!(vanishing_certificate(&v), VanishingCertificate::DeficientDegree(1));
        assert_eq!(van_det(&v), rat(0));
        let v = input(2, 1, &[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(vanishing_certificate(&v), VanishingCertificate::NoneFound);
    }

    #[test]
    fn rational_tuples() {
        let ctx = BracketContext::new(1, 1).unwrap();
        let v = VanInput::new(ctx, vec![ExponentVector::new(vec![ratio(1, 2)]), ExponentVector::new(vec![ratio(5, 3)])]).unwrap();
        assert_eq!(van_det(&v), ratio(7, 6));
        assert_eq!(quasi_triangular_det(&v), ratio(7, 6));
    }

    #[test]
    fn wrong_shapes() {
        let ctx = BracketContext::new(2, 1).unwrap();
        assert!(VanInput::new(ctx.clone(), vec![ExponentVector::zero(2)]).is_err());
        assert!(VanInput::new(ctx, vec![ExponentVector::zero(1); 3]).is_err());
    }
}
