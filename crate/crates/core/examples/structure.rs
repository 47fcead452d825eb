//! One slot of the standard monomials replaced: closed form against the engine.

use shw::closed_forms::{lonely_arguments, lonely_structure_bracket};
use shw::index::BracketContext;
use shw::poly::{rat, ExponentVector, GenPolynomial};
use shw::wronskian::{bracket, DetMode};

pub fn run_example() -> String {
    let ctx = BracketContext::new(2, 2).unwrap();
    let a = ExponentVector::from_ints(&[3, 2]);
    let mut out = String::new();
    for row in ctx.rows() {
        let closed = lonely_structure_bracket(&ctx, row, &a).unwrap();
        let args = lonely_arguments(&ctx, row, GenPolynomial::monomial(a.clone(), rat(1))).unwrap();
        let engine = bracket(&ctx, &args, DetMode::Auto).unwrap();
        out += &format!("row ({row}): {closed} (engine agrees: {})\n", closed == engine);
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
