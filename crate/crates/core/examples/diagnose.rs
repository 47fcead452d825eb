//! Degree-sum diagnostics against the bracket's degree shift.

use shw::index::BracketContext;
use shw::lab::degree_sum_diagnostics;
use shw::poly::GenPolynomial;

pub fn run_example() -> String {
    let mut out = String::new();
    let ctx = BracketContext::new(2, 10).unwrap();
    let tower: Vec<GenPolynomial> = (0..=100).map(|j| GenPolynomial::mono(&[0, j])).collect();
    let d = degree_sum_diagnostics(&ctx, &tower);
    out += &format!("powers of y at k=10, shift {}:", d.shift);
    for (name, c) in ["x", "y"].iter().zip(&d.coordinates) {
        out += &format!(" {name} {} {}", c.sum, c.label.name());
    }
    out += "\n";
    let ctx = BracketContext::new(2, 1).unwrap();
    let basis: Vec<GenPolynomial> = [[0, 0], [1, 0], [0, 1], [1, 1]].iter().map(|e| GenPolynomial::mono(e)).collect();
    let d = degree_sum_diagnostics(&ctx, &basis);
    out += &format!("<1, x, y, x*y>: promising {}\n", d.promising);
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
