//! Closedness and perfection checks.

use shw::grammar::parse_poly;
use shw::index::BracketContext;
use shw::lab::{is_perfect, monomial_top_perfect_possible};

pub fn run_example() -> String {
    let ctx = BracketContext::new(3, 1).unwrap();
    let mut out = String::new();
    for top in ["x*y + y*z + x*z", "x*y"] {
        let polys: Vec<_> = ["1", "x", "y", "z", top].iter().map(|s| parse_poly(s, 3).unwrap()).collect();
        let check = is_perfect(&ctx, &polys).unwrap();
        let missing: Vec<String> = check.missing.iter().map(|p| p.to_string()).collect();
        out += &format!("<1, x, y, z, {top}>: perfect={} missing=[{}]\n", check.perfect, missing.join(", "));
    }
    for (d, k) in [(1, 2), (2, 1), (2, 2), (3, 1)] {
        let ctx = BracketContext::new(d, k).unwrap();
        out += &format!("d={d} k={k}: a monomial top can be perfect: {}\n", monomial_top_perfect_possible(&ctx));
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
