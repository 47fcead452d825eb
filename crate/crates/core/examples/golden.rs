//! Two replaced slots: the closed form over a small exponent grid.

use shw::closed_forms::{golden_arguments, golden_bracket};
use shw::grammar::format_monomial;
use shw::index::BracketContext;
use shw::poly::ExponentVector;
use shw::wronskian::{bracket, DetMode};

pub fn run_example() -> String {
    let mut out = String::new();
    for k in 1..=3 {
        let ctx = BracketContext::new(2, k).unwrap();
        for (n, m) in [([2, 0], [1, 1]), ([3, 1], [0, 4]), ([1, 0], [0, 0])] {
            let (n, m) = (ExponentVector::from_ints(&n), ExponentVector::from_ints(&m));
            let g = golden_bracket(&ctx, &n, &m).unwrap().to_poly();
            let engine = bracket(&ctx, &golden_arguments(&ctx, 0, &n, &m).unwrap(), DetMode::Auto).unwrap();
            let (p, q) = (format_monomial(&n), format_monomial(&m));
            out += &format!("k={k} p={p} q={q}: {g} (engine agrees: {})\n", g == engine);
        }
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
