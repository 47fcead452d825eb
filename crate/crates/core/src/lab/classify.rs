//! Classification of subalgebras containing the low-degree polynomials.

use super::span::SpanBasis;
use super::low_degree_span;
use crate::error::{Error, Result};
use crate::index::{enumerate_rows, BracketContext};
use crate::poly::{rat, GenPolynomial};
use num_traits::{ToPrimitive, Zero};

/// Shape of the algebra generated by a set of polynomials together with
/// all polynomials of degree at most the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// The generators do not contain every polynomial of degree at most the order.
    Inconsistent,
    /// Exactly the polynomials of degree at most the order.
    Trivial,
    /// One extra homogeneous direction of degree `k + 1`; always closed.
    Lonely { top: GenPolynomial },
    /// A tower of powers of one coordinate reaching degree `k + excess`.
    Lanky { coord: usize, excess: u32 },
    /// At least two independent directions of degree `k + 1`.
    Chubby { p: GenPolynomial, q: GenPolynomial },
    /// Outside the reach of the exact rules (e.g. non-natural exponents).
    Unresolved { reason: String },
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::Inconsistent => "inconsistent",
            Classification::Trivial => "trivial",
            Classification::Lonely { .. } => "lonely",
            Classification::Lanky { .. } => "lanky",
            Classification::Chubby { .. } => "chubby",
            Classification::Unresolved { .. } => "unresolved",
        }
    }

    /// Whether the generated algebra stays finite dimensional.
    pub fn is_finite(&self) -> Option<bool> {
        match self {
            Classification::Trivial | Classification::Lonely { .. } => Some(true),
            Classification::Lanky { .. } | Classification::Chubby { .. } => Some(false),
            Classification::Inconsistent | Classification::Unresolved { .. } => None,
        }
    }
}

/// Homogeneous component of `p` in total degree `deg`.
fn component(p: &GenPolynomial, deg: &num_rational::BigRational) -> GenPolynomial {
    p.filter_terms(|e| &e.norm() == deg)
}

/// Classify the span of `generators`.
pub fn classify(ctx: &BracketContext, generators: &[GenPolynomial]) -> Result<Classification> {
    if let Some(bad) = generators.iter().find(|g| g.dim() != ctx.dim()) {
        return Err(Error::DimensionMismatch { expected: ctx.dim(), got: bad.dim() });
    }
    if !generators.iter().all(GenPolynomial::is_natural) {
        return Ok(Classification::Unresolved { reason: "generators have non-natural exponents".into() });
    }
    let span = SpanBasis::from_polys(ctx.dim(), generators);
    if !span.contains_span(&low_degree_span(ctx)) {
        return Ok(Classification::Inconsistent);
    }
    let k = rat(ctx.order() as i64);
    let top = &k + rat(1);
    let quotient: Vec<GenPolynomial> = span
        .elements()
        .iter()
        .map(|p| p.filter_terms(|e| e.norm() > k))
        .filter(|p| !p.is_zero())
        .collect();
    if quotient.is_empty() {
        return Ok(Classification::Trivial);
    }

    let mut directions = SpanBasis::new(ctx.dim());
    let mut tallest = top.clone();
    for q in &quotient {
        let degree = q.total_degree().expect("nonzero");
        if degree > tallest {
            tallest = degree.clone();
        }
        let mut deg = top.clone();
        while deg <= degree {
            let comp = component(q, &deg);
            if !comp.is_zero() {
                let excess = (&deg - &top).to_integer().to_usize().expect("small degree");
                for r in enumerate_rows(ctx.dim(), excess).into_iter().filter(|r| r.norm() as usize == excess) {
                    directions.insert(&comp.derive(&r));
                }
            }
            deg += rat(1);
        }
    }

    let dirs = directions.elements();
    match dirs.len() {
        0 => Err(Error::Internal("no degree k+1 direction found".into())),
        1 if tallest == top => Ok(Classification::Lonely { top: dirs[0].clone() }),
        1 => {
            let only = &dirs[0];
            let pure = only.as_monomial().and_then(|(e, _)| {
                let nonzero: Vec<usize> = (0..ctx.dim()).filter(|&i| !e.get(i).is_zero()).collect();
                (nonzero.len() == 1).then(|| nonzero[0])
            });
            match pure {
                Some(coord) => Ok(Classification::Lanky {
                    coord,
                    excess: (&tallest - &k).to_integer().to_u32().expect("small degree"),
                }),
                None => Ok(Classification::Unresolved {
                    reason: "tower of powers of a non-coordinate linear form".into(),
                }),
            }
        }
        _ => Ok(Classification::Chubby { p: dirs[0].clone(), q: dirs[1].clone() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse_poly;

    fn cls(d: usize, k: usize, src: &[&str]) -> Classification {
        let ctx = BracketContext::new(d, k).unwrap();
        let gens: Vec<_> = src.iter().map(|s| parse_poly(s, d).unwrap()).collect();
        classify(&ctx, &gens).unwrap()
    }

    #[test]
    fn basic_cases() {
        assert_eq!(cls(2, 1, &["1", "x"]), Classification::Inconsistent);
        assert_eq!(cls(2, 1, &["1", "x", "y"]), Classification::Trivial);
        assert_eq!(
            cls(2, 1, &["1", "x", "y", "x*y + x"]),
            Classification::Lonely { top: parse_poly("x*y", 2).unwrap() }
        );
        assert_eq!(cls(2, 1, &["1", "x", "y", "x^3"]), Classification::Lanky { coord: 0, excess: 2 });
        assert_eq!(cls(2, 1, &["1", "x", "y", "y^4"]), Classification::Lanky { coord: 1, excess: 3 });
        assert!(matches!(cls(2, 1, &["1", "x", "y", "x^2", "y^2"]), Classification::Chubby { .. }));
        assert!(matches!(cls(2, 1, &["1", "x", "y", "x^2*y"]), Classification::Chubby { .. }));
        assert!(matches!(cls(2, 1, &["1", "x", "y", "y^-1"]), Classification::Unresolved { .. }));
    }

    #[test]
    fn finiteness() {
        assert_eq!(Classification::Trivial.is_finite(), Some(true));
        assert_eq!(Classification::Lanky { coord: 0, excess: 2 }.is_finite(), Some(false));
        assert_eq!(Classification::Inconsistent.is_finite(), None);
    }
}
