//! Classification of algebras containing all low-degree monomials.

use shw::grammar::parse_poly;
use shw::index::BracketContext;
use shw::lab::{classify, divergence_witness};

pub fn run_example() -> String {
    let ctx = BracketContext::new(2, 1).unwrap();
    let mut out = String::new();
    let algebras: [&[&str]; 6] = [
        &["1", "x", "y", "x*y"],
        &["1", "x", "y", "x^2", "x*y"],
        &["1", "x", "y", "x^3"],
        &["1", "x", "y", "x^2 + y^2"],
        &["1", "x", "y"],
        &["x", "y", "x*y"],
    ];
    for gens in algebras {
        let polys: Vec<_> = gens.iter().map(|s| parse_poly(s, 2).unwrap()).collect();
        let class = classify(&ctx, &polys).unwrap();
        out += &format!("<{}>: {}", gens.join(", "), class.name());
        if let Ok(w) = divergence_witness(&ctx, &class, 3) {
            let steps: Vec<String> = w.steps.iter().map(|s| s.to_poly().to_string()).collect();
            out += &format!(" escaping via {}", steps.join(", "));
        }
        out += "\n";
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
