//! Iterated bracket closure: a finite algebra stabilises, a chubby one hits the cap.

use shw::grammar::parse_poly;
use shw::index::BracketContext;
use shw::lab::{closure_iterate, ClosureLimits};

pub fn run_example() -> String {
    let ctx = BracketContext::new(2, 1).unwrap();
    let mut out = String::new();
    for gens in [&["1", "x", "y", "x*y"][..], &["1", "x", "y", "x^2", "x*y"]] {
        let polys: Vec<_> = gens.iter().map(|s| parse_poly(s, 2).unwrap()).collect();
        let report = closure_iterate(&ctx, &polys, &ClosureLimits::defaults(&ctx)).unwrap();
        out += &format!("<{}>: {} dims {:?}\n", gens.join(", "), report.status.name(), report.dims);
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
