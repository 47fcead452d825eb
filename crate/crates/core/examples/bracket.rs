//! Brackets of explicit polynomials, including the sl(2) realisation on the line.

use shw::grammar::parse_poly;
use shw::index::BracketContext;
use shw::wronskian::{bracket, DetMode};

pub fn run_example() -> String {
    let mut out = String::new();
    let line = BracketContext::new(1, 1).unwrap();
    let (h, e, f) = ("-2*x", "1", "-x^2");
    for (a, b) in [(h, e), (h, f), (e, f)] {
        let args = [parse_poly(a, 1).unwrap(), parse_poly(b, 1).unwrap()];
        out += &format!("[{a}, {b}] = {}\n", bracket(&line, &args, DetMode::Auto).unwrap());
    }
    let plane = BracketContext::new(2, 2).unwrap();
    let args: Vec<_> = ["1", "x", "y", "x^2", "x*y", "x*y^2"].iter().map(|s| parse_poly(s, 2).unwrap()).collect();
    out += &format!("[1, x, y, x^2, x*y, x*y^2] = {}\n", bracket(&plane, &args, DetMode::FractionFree).unwrap());
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
