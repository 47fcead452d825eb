//! Subalgebra analysis: spans, bracket images, closure, classification.

mod classify;
mod closure;
mod diagnostics;
mod span;

pub use classify::{classify, Classification};
pub use closure::{
    bracket_image, closure_iterate, divergence_witness, divergence_witness_for, is_closed, is_perfect,
    monomial_top_perfect_possible, ClosureCheck, PerfectionCheck, ClosureLimits, ClosureReport, ClosureStatus, DivergenceWitness,
    EscapeWitness,
};
pub use diagnostics::{degree_sum_diagnostics, CoordinateDiagnostic, DegreeLabel, Diagnostics};
pub use span::{span_reduce, SpanBasis};

use crate::error::{Error, Result};
use crate::grammar::parse_poly;
use crate::index::BracketContext;
use crate::poly::GenPolynomial;
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

/// Environment variable capping the worker threads used for bracket images.
pub const THREADS_ENV: &str = "SHW_THREADS";

pub(crate) fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let threads = std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .unwrap_or(0);
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool")
    })
}

/// Algebra description as stored in JSON files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub order: usize,
    pub generators: Vec<String>,
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })
    }

    /// Build the bracket context and parse the generators.
    pub fn resolve(&self) -> Result<(BracketContext, Vec<GenPolynomial>)> {
        let ctx = BracketContext::new(self.dim, self.order)?;
        let gens = self
            .generators
            .iter()
            .map(|g| parse_poly(g, self.dim))
            .collect::<Result<Vec<_>>>()?;
        Ok((ctx, gens))
    }
}

/// Every monomial of total degree at most `order`, as a span.
pub fn low_degree_span(ctx: &BracketContext) -> SpanBasis {
    SpanBasis::from_polys(ctx.dim(), &crate::index::unnormalized_monomials(ctx))
}
