//! Bracket images, closure and perfection tests, iteration and divergence witnesses.

use super::span::SpanBasis;
use super::Classification;
use crate::closed_forms::golden_bracket_at;
use crate::error::{Error, Result};
use crate::index::BracketContext;
use crate::poly::{rat, ExponentVector, GenPolynomial, Rational};
use crate::wronskian::{evaluate, MonomialBracket};
use itertools::Itertools;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::ops::ControlFlow;

const CHUNK: usize = 2048;

/// Evaluate the bracket on every `N`-subset of `basis`, in lexicographic
/// order, handing each value to `sink` until it breaks.
fn for_each_bracket<F>(ctx: &BracketContext, basis: &[GenPolynomial], mut sink: F) -> Result<()>
where
    F: FnMut(&[usize], GenPolynomial) -> ControlFlow<()>,
{
    let n = ctx.arity();
    if basis.len() < n {
        return Ok(());
    }
    let mut combos = (0..basis.len()).combinations(n);
    loop {
        let chunk: Vec<Vec<usize>> = combos.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            return Ok(());
        }
        let values: Vec<Result<GenPolynomial>> = super::pool().install(|| {
            chunk
                .par_iter()
                .map(|c| {
                    let args: Vec<GenPolynomial> = c.iter().map(|&i| basis[i].clone()).collect();
                    evaluate(ctx, &args)
                })
                .collect()
        });
        for (c, v) in chunk.iter().zip(values) {
            if sink(c, v?).is_break() {
                return Ok(());
            }
        }
    }
}

/// Span of all brackets of elements of `basis`.
pub fn bracket_image(ctx: &BracketContext, basis: &[GenPolynomial]) -> Result<SpanBasis> {
    let mut image = SpanBasis::new(ctx.dim());
    for_each_bracket(ctx, basis, |_, v| {
        image.insert(&v);
        ControlFlow::Continue(())
    })?;
    Ok(image)
}

/// Arguments whose bracket leaves the span, with the escaping value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EscapeWitness {
    pub args: Vec<GenPolynomial>,
    pub value: GenPolynomial,
}

/// Outcome of a closure test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureCheck {
    pub closed: bool,
    pub witness: Option<EscapeWitness>,
}

/// Whether the span of `basis` is closed under the bracket.
pub fn is_closed(ctx: &BracketContext, basis: &[GenPolynomial]) -> Result<ClosureCheck> {
    let span = SpanBasis::from_polys(ctx.dim(), basis);
    let elems = span.elements().to_vec();
    let mut witness = None;
    for_each_bracket(ctx, &elems, |c, v| {
        if span.contains(&v) {
            ControlFlow::Continue(())
        } else {
            witness = Some(EscapeWitness { args: c.iter().map(|&i| elems[i].clone()).collect(), value: v });
            ControlFlow::Break(())
        }
    })?;
    Ok(ClosureCheck { closed: witness.is_none(), witness })
}

/// Outcome of a perfection test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectionCheck {
    pub perfect: bool,
    /// Directions of the span not reached by the bracket image.
    pub missing: Vec<GenPolynomial>,
}

/// Whether the bracket image of the span equals the span itself.
pub fn is_perfect(ctx: &BracketContext, basis: &[GenPolynomial]) -> Result<PerfectionCheck> {
    let span = SpanBasis::from_polys(ctx.dim(), basis);
    let image = bracket_image(ctx, span.elements())?;
    let mut missing = SpanBasis::new(ctx.dim());
    for p in span.elements() {
        missing.insert(&image.reduce(p));
    }
    Ok(PerfectionCheck { perfect: image.same_span(&span), missing: missing.into_elements() })
}

/// Whether a perfect subalgebra can have a monomial of degree above the order:
/// only possible when `k (d - 1) <= 1`.
pub fn monomial_top_perfect_possible(ctx: &BracketContext) -> bool {
    ctx.order() * (ctx.dim() - 1) <= 1
}

/// Stopping rules for [`closure_iterate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureLimits {
    pub max_iter: usize,
    pub max_degree: Rational,
}

impl ClosureLimits {
    /// Sixteen iterations, degree at most `4 (k + 1)`.
    pub fn defaults(ctx: &BracketContext) -> Self {
        ClosureLimits { max_iter: 16, max_degree: rat(4 * (ctx.order() as i64 + 1)) }
    }
}

/// Why [`closure_iterate`] stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureStatus {
    Stabilized,
    DegreeCapHit,
    IterationCapHit,
}

impl ClosureStatus {
    pub fn name(&self) -> &'static str {
        match self {
            ClosureStatus::Stabilized => "stabilized",
            ClosureStatus::DegreeCapHit => "degree_cap_hit",
            ClosureStatus::IterationCapHit => "iteration_cap_hit",
        }
    }
}

/// Record of a closure iteration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    /// Span dimension before the first iteration and after each one.
    pub dims: Vec<usize>,
    pub status: ClosureStatus,
    pub basis: Vec<GenPolynomial>,
    /// Largest total degree among the final basis elements.
    pub max_degree_seen: Option<Rational>,
}

impl ClosureReport {
    fn new(dims: Vec<usize>, status: ClosureStatus, span: SpanBasis) -> Self {
        ClosureReport { dims, status, max_degree_seen: span.max_degree(), basis: span.into_elements() }
    }
}

/// Repeatedly add all brackets to the span until it stops growing or a limit is hit.
pub fn closure_iterate(ctx: &BracketContext, generators: &[GenPolynomial], limits: &ClosureLimits) -> Result<ClosureReport> {
    let mut span = SpanBasis::from_polys(ctx.dim(), generators);
    let mut dims = vec![span.len()];
    for _ in 0..limits.max_iter {
        let elems = span.elements().to_vec();
        let mut next = span.clone();
        let mut capped = false;
        for_each_bracket(ctx, &elems, |_, v| {
            if v.total_degree().is_some_and(|deg| deg > limits.max_degree) {
                next.insert(&v);
                capped = true;
                return ControlFlow::Break(());
            }
            next.insert(&v);
            ControlFlow::Continue(())
        })?;
        dims.push(next.len());
        if capped {
            return Ok(ClosureReport::new(dims, ClosureStatus::DegreeCapHit, next));
        }
        if next.len() == span.len() {
            return Ok(ClosureReport::new(dims, ClosureStatus::Stabilized, next));
        }
        span = next;
    }
    Ok(ClosureReport::new(dims, ClosureStatus::IterationCapHit, span))
}

/// Sequence of brackets whose degrees grow without bound.
///
/// `steps[0]` is `p` itself; `steps[t]` is the bracket of `q`, `steps[t-1]`
/// (as a monomial with coefficient 1) and the standard monomials, placed in
/// the constant slot and the slot of `coord`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivergenceWitness {
    pub coord: usize,
    pub p: ExponentVector,
    pub q: ExponentVector,
    pub steps: Vec<MonomialBracket>,
}

/// Witness built from monomials `p` and `q` and a distinguished coordinate.
pub fn divergence_witness_for(
    ctx: &BracketContext,
    coord: usize,
    p: &ExponentVector,
    q: &ExponentVector,
    steps: usize,
) -> Result<DivergenceWitness> {
    let mut out = vec![MonomialBracket { coeff: Rational::one(), exps: p.clone() }];
    let mut cur = p.clone();
    for _ in 0..steps {
        let mb = golden_bracket_at(ctx, coord, &cur, q)?;
        if mb.coeff.is_zero() {
            return Err(Error::Internal(format!("divergence step from {:?} vanished", cur.to_ints())));
        }
        cur = mb.exps.clone();
        out.push(mb);
    }
    Ok(DivergenceWitness { coord, p: p.clone(), q: q.clone(), steps: out })
}

fn monomial_exps(p: &GenPolynomial) -> Result<ExponentVector> {
    p.as_monomial()
        .map(|(e, _)| e.clone())
        .ok_or_else(|| Error::Domain("divergence witness needs monomial directions".into()))
}

/// Witness for a chubby or lanky classification.
pub fn divergence_witness(ctx: &BracketContext, class: &Classification, steps: usize) -> Result<DivergenceWitness> {
    match class {
        Classification::Chubby { p, q } => {
            let (a, b) = (monomial_exps(p)?, monomial_exps(q)?);
            let coord = (0..ctx.dim())
                .find(|&i| a.get(i) != b.get(i))
                .ok_or_else(|| Error::Internal("chubby directions coincide".into()))?;
            let (p, q) = if a.get(coord) > b.get(coord) { (b, a) } else { (a, b) };
            divergence_witness_for(ctx, coord, &p, &q, steps)
        }
        Classification::Lanky { coord, excess } => {
            let k = ctx.order() as i64;
            let mut q = vec![0; ctx.dim()];
            q[*coord] = k + 1;
            let mut p = vec![0; ctx.dim()];
            p[*coord] = k + *excess as i64;
            divergence_witness_for(ctx, *coord, &ExponentVector::from_ints(&p), &ExponentVector::from_ints(&q), steps)
        }
        other => Err(Error::Domain(format!("no divergence witness for a {} algebra", other.name()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse_poly;
    use crate::index::unnormalized_monomials;

    fn polys(d: usize, src: &[&str]) -> Vec<GenPolynomial> {
        src.iter().map(|s| parse_poly(s, d).unwrap()).collect()
    }

    #[test]
    fn low_degree_is_closed_and_perfect() {
        for (d, k) in [(1, 1), (2, 1), (2, 2), (3, 1)] {
            let ctx = BracketContext::new(d, k).unwrap();
            let basis = unnormalized_monomials(&ctx);
            assert!(is_closed(&ctx, &basis).unwrap().closed);
            assert!(!is_perfect(&ctx, &basis).unwrap().perfect);
        }
    }

    #[test]
    fn plane_lonely_algebras_closed() {
        let ctx = BracketContext::new(2, 1).unwrap();
        for top in ["x^2", "x*y", "y^2"] {
            let basis = polys(2, &["1", "x", "y", top]);
            let check = is_closed(&ctx, &basis).unwrap();
            assert!(check.closed, "{top}");
        }
    }

    #[test]
    fn escape_witness_is_reported() {
        let ctx = BracketContext::new(2, 1).unwrap();
        let basis = polys(2, &["1", "x", "y", "x^2", "y^2"]);
        let check = is_closed(&ctx, &basis).unwrap();
        assert!(!check.closed);
        let w = check.witness.unwrap();
        let span = SpanBasis::from_polys(2, &basis);
        assert!(!span.contains(&w.value));
        assert_eq!(crate::wronskian::evaluate(&ctx, &w.args).unwrap(), w.value);
    }

    #[test]
    fn perfect_space_algebra() {
        let ctx = BracketContext::new(3, 1).unwrap();
        assert!(is_perfect(&ctx, &polys(3, &["1", "x", "y", "z", "x*y + y*z + x*z"])).unwrap().perfect);
        let check = is_perfect(&ctx, &polys(3, &["1", "x", "y", "z", "x*y"])).unwrap();
        assert!(!check.perfect);
        assert_eq!(check.missing, polys(3, &["z"]));
    }

    #[test]
    fn top_perfect_rule() {
        let ok = |d, k| monomial_top_perfect_possible(&BracketContext::new(d, k).unwrap());
        assert!(ok(1, 1) && ok(1, 5) && ok(2, 1));
        assert!(!ok(2, 2) && !ok(3, 1));
    }

    #[test]
    fn closure_stabilizes_for_lonely() {
        let ctx = BracketContext::new(2, 1).unwrap();
        let r = closure_iterate(&ctx, &polys(2, &["1", "x", "y", "x*y"]), &ClosureLimits::defaults(&ctx)).unwrap();
        assert_eq!(r.status, ClosureStatus::Stabilized);
        assert_eq!(r.dims, vec![4, 4]);
    }

    #[test]
    fn closure_caps_for_chubby() {
        let ctx = BracketContext::new(2, 1).unwrap();
        let r = closure_iterate(&ctx, &polys(2, &["1", "x", "y", "x^2", "x*y"]), &ClosureLimits::defaults(&ctx)).unwrap();
        assert_eq!(r.status, ClosureStatus::DegreeCapHit);
        assert!(r.dims.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn lanky_witness_first_step() {
        let ctx = BracketContext::new(2, 1).unwrap();
        let w = divergence_witness(&ctx, &Classification::Lanky { coord: 0, excess: 2 }, 3).unwrap();
        assert_eq!(w.steps[1].coeff, rat(1));
        assert_eq!(w.steps[1].exps, ExponentVector::from_ints(&[4, 0]));
        assert_eq!(w.steps.len(), 4);
    }
}
